//! End-to-end shard pipeline tests: encode, damage, decode, verify.

use std::path::{Path, PathBuf};

use earc_cli::manifest::Manifest;
use earc_cli::pipeline::{decode_dir, encode_file, verify_dir, EncodeParams};
use earc_cli::shard::ShardHeader;
use earc_cli::CliError;
use earc_core::CodeKind;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use tempfile::TempDir;

fn params(kind: CodeKind, p: usize, r: usize) -> EncodeParams {
    EncodeParams {
        kind,
        p,
        r,
        b: 8,
        prim_poly: None,
        g: vec![1],
        shortened_k: None,
    }
}

fn random_file(dir: &Path, len: usize, seed: u64) -> PathBuf {
    let mut rng = StdRng::seed_from_u64(seed);
    let bytes: Vec<u8> = (0..len).map(|_| rng.gen()).collect();
    let path = dir.join("input.bin");
    std::fs::write(&path, &bytes).unwrap();
    path
}

fn assert_same(a: &Path, b: &Path) {
    assert_eq!(std::fs::read(a).unwrap(), std::fs::read(b).unwrap());
}

#[test]
fn roundtrip_no_loss() {
    let tmp = TempDir::new().unwrap();
    let input = random_file(tmp.path(), 10_000, 1);
    let shards = tmp.path().join("shards");
    let summary = encode_file(&params(CodeKind::Eip, 5, 2), &input, &shards).unwrap();
    assert_eq!(summary.shard_files.len(), 7);
    let out = tmp.path().join("out.bin");
    let report = decode_dir(&shards, &out, &[]).unwrap();
    assert_same(&input, &out);
    // a clean decode reads only the data shards
    assert_eq!(report.shards_read(), vec![0, 1, 2, 3, 4]);
    assert!(verify_dir(&shards).unwrap().ok());
}

#[test]
fn roundtrip_with_column_loss() {
    let tmp = TempDir::new().unwrap();
    let input = random_file(tmp.path(), 4_321, 2);
    let shards = tmp.path().join("shards");
    encode_file(&params(CodeKind::Eip, 5, 2), &input, &shards).unwrap();
    // physically remove two shards
    for name in ["col_001.shard", "col_003.shard"] {
        std::fs::remove_file(shards.join(name)).unwrap();
    }
    let out = tmp.path().join("out.bin");
    let report = decode_dir(&shards, &out, &[]).unwrap();
    assert_same(&input, &out);
    assert_eq!(report.global_columns, vec![1, 3]);

    // a third loss is refused with the shortfall named
    std::fs::remove_file(shards.join("col_004.shard")).unwrap();
    let err = decode_dir(&shards, &out, &[]).unwrap_err();
    match err {
        CliError::Core(earc_core::Error::TooManyErasures { got, max, .. }) => {
            assert_eq!((got, max), (3, 2));
        }
        other => panic!("unexpected error {other}"),
    }
}

#[test]
fn roundtrip_simulated_loss_all_pairs() {
    let tmp = TempDir::new().unwrap();
    let input = random_file(tmp.path(), 2_000, 3);
    let shards = tmp.path().join("shards");
    encode_file(&params(CodeKind::Eip, 5, 2), &input, &shards).unwrap();
    let out = tmp.path().join("out.bin");
    for a in 0..7usize {
        for b in a + 1..7 {
            decode_dir(&shards, &out, &[a, b]).unwrap();
            assert_same(&input, &out);
        }
    }
}

#[test]
fn empty_file_roundtrip() {
    let tmp = TempDir::new().unwrap();
    let input = tmp.path().join("empty");
    std::fs::write(&input, b"").unwrap();
    let shards = tmp.path().join("shards");
    let summary = encode_file(&params(CodeKind::Eip, 5, 2), &input, &shards).unwrap();
    assert_eq!(summary.stripe_count, 0);
    let out = tmp.path().join("out.bin");
    decode_dir(&shards, &out, &[1]).unwrap();
    assert_eq!(std::fs::read(&out).unwrap().len(), 0);
}

#[test]
fn ebr_and_punctured_kinds_roundtrip() {
    let tmp = TempDir::new().unwrap();
    let input = random_file(tmp.path(), 3_333, 4);
    for (kind, p, r, g) in [
        (CodeKind::Ebr, 7usize, 3usize, vec![1u8]),
        (CodeKind::Ebr, 7, 3, vec![1, 1, 0, 1]),
        (CodeKind::Pebr, 7, 3, vec![1, 1, 0, 1]),
        (CodeKind::Peip, 5, 2, vec![1]),
    ] {
        let mut pr = params(kind, p, r);
        pr.g = g;
        let shards = tmp.path().join(format!("shards-{}", kind.as_str()));
        encode_file(&pr, &input, &shards).unwrap();
        assert!(verify_dir(&shards).unwrap().ok(), "{}", kind.as_str());
        let out = tmp.path().join("out.bin");
        decode_dir(&shards, &out, &[0, p - 1]).unwrap();
        assert_same(&input, &out);
    }
}

#[test]
fn shortened_roundtrip() {
    let tmp = TempDir::new().unwrap();
    let input = random_file(tmp.path(), 5_000, 5);
    let mut pr = params(CodeKind::Eip, 17, 2);
    pr.shortened_k = Some(8);
    let shards = tmp.path().join("shards");
    let summary = encode_file(&pr, &input, &shards).unwrap();
    // 8 data shards + 2 parity shards, nothing for the zero columns
    assert_eq!(summary.shard_files.len(), 10);
    let out = tmp.path().join("out.bin");
    decode_dir(&shards, &out, &[2, 17]).unwrap();
    assert_same(&input, &out);
    assert!(verify_dir(&shards).unwrap().ok());
}

#[test]
fn local_repair_reads_only_the_damaged_shard() {
    let tmp = TempDir::new().unwrap();
    let input = random_file(tmp.path(), 2_048, 6);
    let shards = tmp.path().join("shards");
    encode_file(&params(CodeKind::Eip, 5, 2), &input, &shards).unwrap();
    let manifest = Manifest::read_from(&shards).unwrap();

    // flip one byte inside row 2's region of data shard 3
    let victim = shards.join("col_003.shard");
    let mut bytes = std::fs::read(&victim).unwrap();
    let (hdr, hdr_len) = ShardHeader::decode(&bytes).unwrap();
    let region_len = hdr.stripe_count as usize + 4;
    bytes[hdr_len + 2 * region_len + 5] ^= 0xff;
    std::fs::write(&victim, &bytes).unwrap();

    let out = tmp.path().join("out.bin");
    let report = decode_dir(&shards, &out, &[]).unwrap();
    assert_same(&input, &out);
    assert_eq!(report.local_symbol_repairs as u32, manifest.stripe_count);
    assert!(report.global_columns.is_empty());
    // data shards only; the parity shards 5 and 6 were never opened
    assert_eq!(report.shards_read(), vec![0, 1, 2, 3, 4]);

    // verify flags the bad region
    let v = verify_dir(&shards).unwrap();
    assert!(!v.ok());
    assert!(v.problems.iter().any(|p| p.contains("column 3")));
}

#[test]
fn header_field_mismatch_is_rejected() {
    let tmp = TempDir::new().unwrap();
    let input = random_file(tmp.path(), 512, 7);
    let shards = tmp.path().join("shards");
    encode_file(&params(CodeKind::Eip, 5, 2), &input, &shards).unwrap();

    // rewrite shard 2's header with a different r; the header itself stays
    // well-formed, so the manifest comparison must catch it
    let victim = shards.join("col_002.shard");
    let bytes = std::fs::read(&victim).unwrap();
    let (mut hdr, hdr_len) = ShardHeader::decode(&bytes).unwrap();
    hdr.r = 1;
    let mut rewritten = hdr.encode().unwrap();
    rewritten.extend_from_slice(&bytes[hdr_len..]);
    std::fs::write(&victim, &rewritten).unwrap();

    let out = tmp.path().join("out.bin");
    let err = decode_dir(&shards, &out, &[]).unwrap_err();
    assert!(matches!(err, CliError::Mismatch(_)), "{err}");
}

#[test]
fn verify_catches_consistent_but_wrong_symbols() {
    // rewrite one symbol and refresh every checksum: only the codeword
    // membership check can notice
    let tmp = TempDir::new().unwrap();
    let input = random_file(tmp.path(), 500, 8);
    let shards = tmp.path().join("shards");
    encode_file(&params(CodeKind::Eip, 5, 2), &input, &shards).unwrap();

    let victim_name = "col_001.shard";
    let victim = shards.join(victim_name);
    let bytes = std::fs::read(&victim).unwrap();
    let (hdr, hdr_len) = ShardHeader::decode(&bytes).unwrap();
    let stripes = hdr.stripe_count as usize;
    let mut regions: Vec<Vec<u8>> = (0..5)
        .map(|row| {
            let at = hdr_len + row * (stripes + 4);
            bytes[at..at + stripes].to_vec()
        })
        .collect();
    regions[2][0] ^= 1;
    let rewritten = earc_cli::shard::write_shard(&hdr, &regions).unwrap();
    std::fs::write(&victim, &rewritten).unwrap();
    let mut manifest = Manifest::read_from(&shards).unwrap();
    manifest
        .shards
        .insert(1, (victim_name.to_string(), earc_cli::shard::crc32(&rewritten)));
    manifest.write_to(&shards).unwrap();

    let report = verify_dir(&shards).unwrap();
    assert!(!report.ok());
    assert!(
        report.problems.iter().any(|p| p.contains("not a codeword")),
        "{:?}",
        report.problems
    );
}

#[test]
fn truncated_shard_counts_as_erasure() {
    let tmp = TempDir::new().unwrap();
    let input = random_file(tmp.path(), 1_500, 9);
    let shards = tmp.path().join("shards");
    encode_file(&params(CodeKind::Eip, 5, 2), &input, &shards).unwrap();
    let victim = shards.join("col_000.shard");
    let bytes = std::fs::read(&victim).unwrap();
    std::fs::write(&victim, &bytes[..bytes.len() / 2]).unwrap();
    let out = tmp.path().join("out.bin");
    let report = decode_dir(&shards, &out, &[]).unwrap();
    assert_same(&input, &out);
    assert_eq!(report.global_columns, vec![0]);
}

#[test]
fn byte_range_enforced_for_narrow_fields() {
    let tmp = TempDir::new().unwrap();
    let input = tmp.path().join("input.bin");
    std::fs::write(&input, [0x01, 0x7f, 0x03]).unwrap();
    let mut pr = params(CodeKind::Eip, 5, 2);
    pr.b = 3;
    let err = encode_file(&pr, &input, &tmp.path().join("shards")).unwrap_err();
    assert!(matches!(err, CliError::BadParameters(_)));
}
