use earc_core::{ebr, eip, CodeArray, CodeKind, CodeSpec};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

pub fn rng(seed: u64) -> StdRng {
    StdRng::seed_from_u64(seed)
}

pub fn random_data(rng: &mut StdRng, rows: usize, cols: usize, order: usize) -> CodeArray {
    let mut data = CodeArray::zero(rows, cols);
    for r in 0..rows {
        for c in 0..cols {
            data.set(r, c, rng.gen_range(0..order) as u8);
        }
    }
    data
}

pub fn random_codeword(rng: &mut StdRng, spec: &CodeSpec) -> CodeArray {
    let rows = match spec.kind() {
        CodeKind::Brvp => spec.p() - 1,
        _ => spec.k_local(),
    };
    let data = random_data(rng, rows, spec.data_cols(), spec.field().order());
    match spec.kind() {
        CodeKind::Ebr => ebr::encode(spec, &data).unwrap(),
        CodeKind::Eip => eip::encode(spec, &data).unwrap(),
        CodeKind::Brvp => ebr::brvp_encode(spec, &data).unwrap(),
        _ => panic!("random codewords of punctured kinds go through the parent"),
    }
}
