//! Acceptance suite: one test per criterion, each printing a pass line.
//! Run with `cargo test -p earc-cli --test acceptance -- --nocapture`.

use std::path::Path;
use std::time::Instant;

use earc_cli::pipeline::{decode_dir, encode_file, EncodeParams};
use earc_cli::shard::ShardHeader;
use earc_core::analysis::{
    line_mds_check, mds_columns_check, min_hamming_distance, product_code_min_distance,
    shortened_encode_cost, solve_recursion_cost,
};
use earc_core::geometry::{recover_lines, LineId, Slope};
use earc_core::linalg::{solve, Mat, Solve};
use earc_core::ring::{modp, solve_recursion, RingElem, XorMeter};
use earc_core::{ebr, eip, golden, punct, CodeArray, CodeKind, CodeSpec, Field};
use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};

const G13: [u8; 4] = [1, 1, 0, 1];

fn pass(n: u32, name: &str, started: Instant) {
    println!(
        "acceptance criterion {n:2} ({name}): PASS [{:.2?}]",
        started.elapsed()
    );
}

fn random_data(rng: &mut StdRng, rows: usize, cols: usize, order: usize) -> CodeArray {
    let mut data = CodeArray::zero(rows, cols);
    for r in 0..rows {
        for c in 0..cols {
            data.set(r, c, rng.gen_range(0..order) as u8);
        }
    }
    data
}

fn random_ebr(rng: &mut StdRng, spec: &CodeSpec) -> CodeArray {
    let data = random_data(rng, spec.k_local(), spec.data_cols(), spec.field().order());
    ebr::encode(spec, &data).unwrap()
}

#[test]
fn criterion_01_golden_decode_trace() {
    let t = Instant::now();
    let spec = CodeSpec::new(CodeKind::Ebr, 7, 3, Field::gf2(), &G13).unwrap();

    // end to end from the erased input
    let mut scenario = golden::ebr7_decode_scenario();
    let report = ebr::repair(&spec, &mut scenario).unwrap();
    assert_eq!(scenario, golden::ebr7_hamming_a());
    assert_eq!(report.global, vec![1, 3, 6]);

    // step-exact transcript from the after-local-repair state
    let mut arr = golden::ebr7_decode_after_local();
    let trace = ebr::decode_columns_traced(&spec, &mut arr).unwrap();
    assert_eq!(arr, golden::ebr7_hamming_a());
    let s = &trace.initial_syndromes;
    assert_eq!(s[0], RingElem::from_exponents(7, &[0, 3, 5, 6]), "S_0");
    assert_eq!(s[1], RingElem::from_exponents(7, &[1, 2, 3, 6]), "S_1");
    assert_eq!(s[2], RingElem::from_exponents(7, &[0, 1, 4, 6]), "S_2");
    assert_eq!(
        trace.steps[0].combined,
        RingElem::from_exponents(7, &[0, 1, 2, 5]),
        "g_0 S_0 + g_1 S_1 + g_2 S_2"
    );
    assert_eq!(
        trace.steps[0].recovered,
        RingElem::from_exponents(7, &[1, 2, 3, 6]),
        "e_0"
    );
    assert!(trace.steps[1].recovered.is_zero(), "e_1");
    assert_eq!(
        trace.steps[2].recovered,
        RingElem::from_exponents(7, &[0, 1, 2, 5]),
        "e_2"
    );
    pass(1, "golden decode trace", t);
}

#[test]
fn criterion_02_recursion_golden() {
    let t = Instant::now();
    // worked example: p = 7, j = 3
    let v = RingElem::from_exponents(7, &[0, 1, 4, 6]);
    let z = solve_recursion(3, &v, None, &mut XorMeter::new()).unwrap();
    assert_eq!(z, RingElem::from_exponents(7, &[2, 4, 5, 6]));

    // exhaustive p = 5 equivalence against Gaussian elimination for every
    // codeword of the even-weight column code and every shift exponent
    let p = 5usize;
    let f = Field::gf2();
    let oracle = |j: usize, v: &RingElem| -> RingElem {
        let mut rows = Vec::new();
        for i in 0..p {
            let mut row = vec![0u8; p];
            row[i] ^= 1;
            row[modp(i as i64 - j as i64, p)] ^= 1;
            rows.push(row);
        }
        rows.push(vec![1u8; p]); // even weight pins the coset
        let mut rhs: Vec<u8> = (0..p).map(|i| v.coeff(i)).collect();
        rhs.push(0);
        match solve(&Mat::from_rows(rows), &rhs, &f) {
            Solve::Unique(x) => RingElem::from_coeffs(x),
            other => panic!("oracle produced {other:?}"),
        }
    };
    let mut checked = 0;
    for bits in 0u32..32 {
        let coeffs: Vec<u8> = (0..p).map(|i| ((bits >> i) & 1) as u8).collect();
        if coeffs.iter().fold(0, |a, &b| a ^ b) != 0 {
            continue;
        }
        let v = RingElem::from_coeffs(coeffs);
        for j in 1..p {
            let z = solve_recursion(j, &v, None, &mut XorMeter::new()).unwrap();
            assert_eq!(z, oracle(j, &v), "j={j} v={v:?}");
            checked += 1;
        }
    }
    assert_eq!(checked, 16 * 4);
    pass(2, "recursion golden + p=5 oracle equivalence", t);
}

#[test]
fn criterion_03_distances() {
    let t = Instant::now();
    let hamming = CodeSpec::new(CodeKind::Ebr, 7, 3, Field::gf2(), &G13).unwrap();
    assert_eq!(min_hamming_distance(&hamming).unwrap(), 16);

    let ebr74 = CodeSpec::binary_simple(CodeKind::Ebr, 7, 4).unwrap();
    assert_eq!(min_hamming_distance(&ebr74).unwrap(), 12);

    let brvp74 = CodeSpec::binary_simple(CodeKind::Brvp, 7, 4).unwrap();
    assert_eq!(min_hamming_distance(&brvp74).unwrap(), 10);

    for r in [1usize, 2, 3, 5, 6] {
        let spec = CodeSpec::binary_simple(CodeKind::Ebr, 7, r).unwrap();
        assert_eq!(
            min_hamming_distance(&spec).unwrap(),
            2 * (r + 1),
            "EBR(7,{r},2,1)"
        );
    }
    assert_eq!(
        product_code_min_distance(hamming.vertical(), &[1, 1, 0, 1]).unwrap(),
        12
    );
    pass(3, "minimum symbol distances", t);
}

#[test]
fn criterion_04_xor_accounting() {
    let t = Instant::now();
    for (p, k, expected) in [
        (17usize, 8usize, 358u64),
        (17, 15, 701),
        (127, 8, 2778),
        (127, 50, 18696),
    ] {
        assert_eq!(shortened_encode_cost(p, 2, k).unwrap(), expected, "p={p} k={k}");
    }
    for p in [5usize, 7, 11, 17, 127] {
        assert_eq!(
            solve_recursion_cost(p).unwrap(),
            (3 * p as u64 - 5) / 2,
            "p={p}"
        );
    }
    pass(4, "xor accounting", t);
}

#[test]
fn criterion_05_update_locality() {
    let t = Instant::now();
    // 2r+1 parity symbols for g = 1 across parameter choices
    for (p, r) in [(5usize, 1usize), (5, 2), (5, 3), (7, 2), (7, 4), (11, 3), (17, 2)] {
        let spec = CodeSpec::binary_simple(CodeKind::Eip, p, r).unwrap();
        let mut rng = StdRng::seed_from_u64(p as u64 * 31 + r as u64);
        let mut word = {
            let data = random_data(&mut rng, spec.k_local(), p, 2);
            eip::encode(&spec, &data).unwrap()
        };
        let row = rng.gen_range(0..spec.k_local());
        let col = rng.gen_range(0..p);
        let old = word.get(row, col);
        let plan = eip::update(&spec, &mut word, row, col, old ^ 1).unwrap();
        assert_eq!(plan.parity_symbols_touched, 2 * r + 1, "EIP({p},{r},2,1)");
        assert!(eip::is_codeword(&spec, &word));
    }

    // the worked configuration: the printed before/after arrays differ in
    // exactly 15 parity symbols = (r+1)d - 1 (and one data symbol), and the
    // update reproduces the printed result and a full re-encode
    let spec = CodeSpec::new(CodeKind::Eip, 7, 3, Field::gf2(), &G13).unwrap();
    let before = golden::eip7_update_before();
    let after = golden::eip7_update_after();
    let mut parity_changes = 0;
    let mut data_changes = 0;
    for row in 0..7 {
        for col in 0..10 {
            if before.get(row, col) != after.get(row, col) {
                if col < 7 && row < spec.k_local() {
                    data_changes += 1;
                } else {
                    parity_changes += 1;
                }
            }
        }
    }
    assert_eq!(data_changes, 1);
    assert_eq!(parity_changes, 15);
    let d = spec.vertical().d();
    assert_eq!(parity_changes, (spec.r() + 1) * d - 1);

    let mut arr = before.clone();
    let plan = eip::update(&spec, &mut arr, 2, 1, 0).unwrap();
    assert_eq!(arr, after);
    assert_eq!(plan.parity_symbols_touched, 15);
    let mut data = CodeArray::zero(3, 7);
    for r in 0..3 {
        for c in 0..7 {
            data.set(r, c, arr.get(r, c));
        }
    }
    assert_eq!(eip::encode(&spec, &data).unwrap(), arr);
    pass(5, "update locality", t);
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    rec(0, n, k, &mut Vec::new(), &mut out);
    out
}

#[test]
fn criterion_06_line_mds() {
    let t = Instant::now();
    let mut rng = StdRng::seed_from_u64(600);

    // exhaustive recovery of all erased-line subsets at small sizes
    let cases: [(usize, usize, Vec<Slope>); 3] = [
        (5, 2, vec![Slope::Finite(0), Slope::Finite(1), Slope::Infinite]),
        (
            5,
            3,
            vec![
                Slope::Finite(0),
                Slope::Finite(1),
                Slope::Finite(2),
                Slope::Infinite,
            ],
        ),
        (
            7,
            3,
            vec![
                Slope::Finite(0),
                Slope::Finite(1),
                Slope::Finite(2),
                Slope::Infinite,
            ],
        ),
    ];
    for (p, r, slopes) in cases {
        let spec = CodeSpec::binary_simple(CodeKind::Ebr, p, r).unwrap();
        for slope in slopes {
            assert!(line_mds_check(&spec, slope).unwrap(), "p={p} r={r} {slope}");
            for subset in combinations(p, r) {
                let word = random_ebr(&mut rng, &spec);
                let mut broken = word.clone();
                let lines: Vec<LineId> =
                    subset.iter().map(|&a| LineId::new(slope, a)).collect();
                recover_lines(&spec, &mut broken, &lines).unwrap();
                assert_eq!(broken, word, "p={p} r={r} {slope} {subset:?}");
            }
        }
    }

    // EBR(7,5,2,1): five erased lines of each slope on 100 random codewords
    let spec = CodeSpec::binary_simple(CodeKind::Ebr, 7, 5).unwrap();
    for slope in (0..5).map(Slope::Finite) {
        for _ in 0..100 {
            let word = random_ebr(&mut rng, &spec);
            let mut anchors: Vec<usize> = (0..7).collect();
            anchors.shuffle(&mut rng);
            anchors.truncate(5);
            let lines: Vec<LineId> = anchors.iter().map(|&a| LineId::new(slope, a)).collect();
            let mut broken = word.clone();
            recover_lines(&spec, &mut broken, &lines).unwrap();
            assert_eq!(broken, word, "{slope} {anchors:?}");
        }
    }

    // the two-diagonal ambiguity: unique zero solution in the expanded code,
    // while both completions are valid for the slope-parity + vertical-parity
    // comparison construction
    let spec52 = CodeSpec::binary_simple(CodeKind::Ebr, 5, 2).unwrap();
    let mut zeros = CodeArray::zero(5, 5);
    let diagonals = [
        LineId::new(Slope::Finite(1), 1),
        LineId::new(Slope::Finite(1), 4),
    ];
    recover_lines(&spec52, &mut zeros, &diagonals).unwrap();
    assert_eq!(zeros, CodeArray::zero(5, 5));
    let brvp = CodeSpec::binary_simple(CodeKind::Brvp, 5, 2).unwrap();
    let witness = golden::brvp5_ambiguity_witness();
    assert!(ebr::brvp_check(&brvp, &witness));
    assert!(ebr::brvp_check(&brvp, &CodeArray::zero(5, 5)));
    assert!(!ebr::is_codeword(&spec52, &witness));
    pass(6, "line MDS and unique line recovery", t);
}

#[test]
fn criterion_07_mds_checks() {
    let t = Instant::now();
    for p in [5usize, 7] {
        for r in [1usize, 2, 3] {
            let spec = CodeSpec::binary_simple(CodeKind::Ebr, p, r).unwrap();
            assert!(mds_columns_check(&spec).unwrap(), "EBR({p},{r},2,1)");
        }
    }
    for r in [1usize, 2, 3] {
        let spec = CodeSpec::new(CodeKind::Ebr, 7, r, Field::gf2(), &G13).unwrap();
        assert!(mds_columns_check(&spec).unwrap(), "EBR(7,{r},2,1+x+x^3)");
        let eip = CodeSpec::binary_simple(CodeKind::Eip, 5, r).unwrap();
        assert!(mds_columns_check(&eip).unwrap(), "EIP(5,{r},2,1)");
    }
    pass(7, "column MDS checks", t);
}

#[test]
fn criterion_08_rs_equivalence() {
    let t = Instant::now();
    use punct::{rs_equivalence_check, RootOrder};
    assert!(rs_equivalence_check(3, &[0, 2, 1], 0b1011, RootOrder::InversePowers).unwrap());
    assert!(rs_equivalence_check(3, &[1, 2, 0], 0b1101, RootOrder::DirectPowers).unwrap());
    // the permutations matter: identity fails some codeword
    assert!(!rs_equivalence_check(3, &[0, 1, 2], 0b1011, RootOrder::InversePowers).unwrap());
    pass(8, "RS equivalence of the punctured code", t);
}

fn region_offset(shard_bytes: &[u8], row: usize) -> usize {
    let (hdr, hdr_len) = ShardHeader::decode(shard_bytes).unwrap();
    hdr_len + row * (hdr.stripe_count as usize + 4)
}

#[test]
fn criterion_09_cli_end_to_end() {
    let t = Instant::now();
    let tmp = tempfile::TempDir::new().unwrap();
    let mut rng = StdRng::seed_from_u64(900);
    let bytes: Vec<u8> = (0..1 << 20).map(|_| rng.gen()).collect();
    let input = tmp.path().join("input.bin");
    std::fs::write(&input, &bytes).unwrap();

    let params = EncodeParams {
        kind: CodeKind::Eip,
        p: 17,
        r: 2,
        b: 8,
        prim_poly: None,
        g: vec![1],
        shortened_k: None,
    };
    let shards = tmp.path().join("shards");
    encode_file(&params, &input, &shards).unwrap();

    let check = |dropped: &[usize], dir: &Path| {
        let out = tmp.path().join("out.bin");
        let report = decode_dir(dir, &out, dropped).unwrap();
        assert_eq!(std::fs::read(&out).unwrap(), bytes, "dropped {dropped:?}");
        report
    };
    // representative pairs: data+data, data+parity, parity+parity; losing
    // only parity shards needs no rebuilding at all
    for pair in [[0usize, 1], [5, 16], [3, 17], [17, 18]] {
        let report = check(&pair, &shards);
        let expect: Vec<usize> = if pair.iter().any(|&c| c < 17) {
            pair.to_vec()
        } else {
            Vec::new()
        };
        assert_eq!(report.global_columns, expect, "dropped {pair:?}");
    }
    // three losses are refused
    {
        let out = tmp.path().join("out3.bin");
        assert!(decode_dir(&shards, &out, &[0, 1, 2]).is_err());
    }

    // and literally any 2 of the 19 shards, at a smaller file size
    {
        let small_in = tmp.path().join("small.bin");
        let small: Vec<u8> = (0..16_384).map(|_| rng.gen()).collect();
        std::fs::write(&small_in, &small).unwrap();
        let small_shards = tmp.path().join("small-shards");
        encode_file(&params, &small_in, &small_shards).unwrap();
        let out = tmp.path().join("small-out.bin");
        for a in 0..19usize {
            for b in a + 1..19 {
                decode_dir(&small_shards, &out, &[a, b]).unwrap();
                assert_eq!(std::fs::read(&out).unwrap(), small, "pair ({a},{b})");
            }
        }
    }

    // corrupt d-1 = 1 symbol row in a surviving shard: repaired from that
    // shard alone, parity shards never opened
    let victim = shards.join("col_004.shard");
    let mut vb = std::fs::read(&victim).unwrap();
    let at = region_offset(&vb, 9) + 100;
    vb[at] ^= 0x5a;
    std::fs::write(&victim, &vb).unwrap();
    let report = check(&[], &shards);
    assert!(report.global_columns.is_empty());
    assert_eq!(report.local_symbol_repairs as u32, report.stripes);
    let read: Vec<usize> = report.shards_read();
    assert_eq!(read, (0..17).collect::<Vec<_>>(), "only data shards read");
    assert!(!read.contains(&17) && !read.contains(&18), "parity untouched");

    assert!(t.elapsed().as_secs() < 30, "budget exceeded: {:?}", t.elapsed());
    pass(9, "1 MiB shard pipeline with loss and sector repair", t);
}

#[test]
fn criterion_10_property_suites() {
    let t = Instant::now();
    let mut rng = StdRng::seed_from_u64(1000);
    const TRIALS: usize = 10_000;

    // slope-parity transform: identity and support preservation
    let ebr73 = CodeSpec::binary_simple(CodeKind::Ebr, 7, 3).unwrap();
    for _ in 0..TRIALS {
        let word = random_ebr(&mut rng, &ebr73);
        let br = ebr::to_br(&ebr73, &word).unwrap();
        assert_eq!(ebr::from_br(&ebr73, &br).unwrap(), word);
        assert_eq!(word.column_support(), br.column_support());
    }

    // independent-parity transform
    let eip53 = CodeSpec::binary_simple(CodeKind::Eip, 5, 3).unwrap();
    for _ in 0..TRIALS {
        let data = random_data(&mut rng, 4, 5, 2);
        let word = eip::encode(&eip53, &data).unwrap();
        let ip = eip::to_ip(&eip53, &word).unwrap();
        assert_eq!(eip::from_ip(&eip53, &ip).unwrap(), word);
        assert_eq!(word.column_support(), ip.column_support());
    }

    // puncturing
    let pebr = CodeSpec::new(CodeKind::Pebr, 7, 3, Field::gf2(), &G13).unwrap();
    let parent = pebr.as_kind(CodeKind::Ebr).unwrap();
    for _ in 0..TRIALS {
        let data = random_data(&mut rng, 3, 4, 2);
        let full = ebr::encode(&parent, &data).unwrap();
        let short = punct::puncture(&pebr, &full).unwrap();
        assert_eq!(punct::unpuncture(&pebr, &short).unwrap(), full);
        assert_eq!(full.column_support(), short.column_support());
    }

    // decoder outputs pass their membership predicates
    for _ in 0..200 {
        let word = random_ebr(&mut rng, &ebr73);
        let mut broken = word.clone();
        let mut cols: Vec<usize> = (0..7).collect();
        cols.shuffle(&mut rng);
        for &c in cols.iter().take(rng.gen_range(0..=3)) {
            broken.erase_column(c);
        }
        ebr::decode_columns(&ebr73, &mut broken).unwrap();
        assert!(ebr::is_codeword(&ebr73, &broken));
        assert_eq!(broken, word);
    }
    for _ in 0..200 {
        let data = random_data(&mut rng, 4, 5, 2);
        let word = eip::encode(&eip53, &data).unwrap();
        let mut broken = word.clone();
        let mut cols: Vec<usize> = (0..8).collect();
        cols.shuffle(&mut rng);
        for &c in cols.iter().take(rng.gen_range(0..=3)) {
            broken.erase_column(c);
        }
        eip::decode(&eip53, &mut broken).unwrap();
        assert!(eip::is_codeword(&eip53, &broken));
        assert_eq!(broken, word);
    }
    pass(10, "transform round-trips and decoder membership", t);
}

/// Convenience: the acceptance suite doubles as a smoke test of the binary's
/// analyze verb, which must exit nonzero on unknown suites.
#[test]
fn analyze_verb_suite_names() {
    let t = Instant::now();
    let (text, ok) = earc_cli::pipeline::analyze("paper-golden").unwrap();
    assert!(ok, "{text}");
    assert!(text.lines().count() > 10);
    assert!(matches!(
        earc_cli::pipeline::analyze("nonsense"),
        Err(earc_cli::CliError::UnknownSuite(_))
    ));
    pass(0, "analyze verb plumbing", t);
}
