//! Round-trip and weight-preservation properties of the array transforms.

mod common;

use common::{random_codeword, rng};
use earc_core::{ebr, eip, punct, CodeKind, CodeSpec, Field};

#[test]
fn br_transform_roundtrip_and_support() {
    let mut rng = rng(808);
    for (p, r) in [(5usize, 2usize), (5, 3), (7, 3), (7, 5)] {
        let spec = CodeSpec::binary_simple(CodeKind::Ebr, p, r).unwrap();
        for _ in 0..200 {
            let word = random_codeword(&mut rng, &spec);
            let br = ebr::to_br(&spec, &word).unwrap();
            assert_eq!(ebr::from_br(&spec, &br).unwrap(), word);
            assert_eq!(word.column_support(), br.column_support());
        }
    }
}

#[test]
fn ip_transform_roundtrip_and_support() {
    let mut rng = rng(909);
    for (p, r) in [(5usize, 3usize), (7, 2), (7, 3)] {
        let spec = CodeSpec::binary_simple(CodeKind::Eip, p, r).unwrap();
        for _ in 0..200 {
            let word = random_codeword(&mut rng, &spec);
            let ip = eip::to_ip(&spec, &word).unwrap();
            assert!(eip::is_ip_array(&spec, &ip));
            assert_eq!(eip::from_ip(&spec, &ip).unwrap(), word);
            assert_eq!(word.column_support(), ip.column_support());
        }
    }
}

#[test]
fn puncture_roundtrip_and_support() {
    let mut rng = rng(1010);
    let cases = [
        (CodeKind::Pebr, CodeKind::Ebr, 7usize, 3usize, vec![1u8, 1, 0, 1]),
        (CodeKind::Pebr, CodeKind::Ebr, 5, 2, vec![1]),
        (CodeKind::Peip, CodeKind::Eip, 5, 3, vec![1]),
        (CodeKind::Peip, CodeKind::Eip, 7, 3, vec![1, 1, 0, 1]),
    ];
    for (kind, parent_kind, p, r, g) in cases {
        let spec = CodeSpec::new(kind, p, r, Field::gf2(), &g).unwrap();
        let parent = spec.as_kind(parent_kind).unwrap();
        for _ in 0..200 {
            let full = random_codeword(&mut rng, &parent);
            let short = punct::puncture(&spec, &full).unwrap();
            assert_eq!(punct::unpuncture(&spec, &short).unwrap(), full);
            assert_eq!(full.column_support(), short.column_support());
        }
    }
}

#[test]
fn update_equals_reencode() {
    let mut rng = rng(1111);
    use rand::Rng;
    for (p, r, g) in [(5usize, 2usize, vec![1u8]), (7, 3, vec![1, 1, 0, 1])] {
        let spec = CodeSpec::new(CodeKind::Eip, p, r, Field::gf2(), &g).unwrap();
        for _ in 0..100 {
            let mut word = random_codeword(&mut rng, &spec);
            let row = rng.gen_range(0..spec.k_local());
            let col = rng.gen_range(0..p);
            let value = rng.gen_range(0..2) as u8;
            eip::update(&spec, &mut word, row, col, value).unwrap();
            assert!(eip::is_codeword(&spec, &word));
            let mut data = earc_core::CodeArray::zero(spec.k_local(), p);
            for rr in 0..spec.k_local() {
                for cc in 0..p {
                    data.set(rr, cc, word.get(rr, cc));
                }
            }
            assert_eq!(eip::encode(&spec, &data).unwrap(), word);
        }
    }
}
