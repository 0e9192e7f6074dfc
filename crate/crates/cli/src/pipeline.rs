//! Encode a file into one shard per column, reconstruct it from the
//! survivors, and verify a shard directory. Reads are accounted per shard so
//! locality claims are testable: a column with bad sectors is repaired from
//! its own shard alone, and parity shards are opened only when whole columns
//! must be rebuilt.

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};

use earc_core::analysis::{run_suite, Suite};
use earc_core::geometry::{self, LineId, Slope};
use earc_core::ring::RingElem;
use earc_core::{ebr, eip, punct, CodeArray, CodeKind, CodeSpec, Field};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use crate::manifest::{Manifest, MANIFEST_NAME};
use crate::shard::{crc32, read_shard, write_shard, ShardData, ShardHeader};
use crate::{CliError, Result};

#[derive(Debug, Clone)]
pub struct EncodeParams {
    pub kind: CodeKind,
    pub p: usize,
    pub r: usize,
    pub b: u32,
    pub prim_poly: Option<u16>,
    /// Coefficients of g(x), index = degree.
    pub g: Vec<u8>,
    pub shortened_k: Option<usize>,
}

#[derive(Debug, Clone)]
pub struct EncodeSummary {
    pub stripe_count: u32,
    pub shard_files: Vec<(usize, PathBuf)>,
    pub data_symbols_per_stripe: usize,
}

#[derive(Debug, Clone, Default)]
pub struct DecodeReport {
    /// Shards actually opened, with bytes read from each.
    pub reads: BTreeMap<usize, u64>,
    /// Symbols recovered by within-column repair.
    pub local_symbol_repairs: usize,
    /// Columns rebuilt by the global decoder.
    pub global_columns: Vec<usize>,
    pub stripes: u32,
}

impl DecodeReport {
    pub fn shards_read(&self) -> Vec<usize> {
        self.reads.keys().copied().collect()
    }
}

#[derive(Debug, Clone, Default)]
pub struct VerifyReport {
    pub shards_checked: usize,
    pub stripes_checked: u32,
    pub problems: Vec<String>,
}

impl VerifyReport {
    pub fn ok(&self) -> bool {
        self.problems.is_empty()
    }
}

pub fn build_spec(
    kind: CodeKind,
    p: usize,
    r: usize,
    b: u32,
    prim_poly: Option<u16>,
    g: &[u8],
) -> Result<(CodeSpec, u16)> {
    let poly = match prim_poly {
        Some(poly) => poly,
        None => earc_core::gf::default_prim_poly(b).ok_or_else(|| {
            CliError::BadParameters(format!("no default primitive polynomial for b = {b}"))
        })?,
    };
    let field = Field::new(b, poly)?;
    Ok((CodeSpec::new(kind, p, r, field, g)?, poly))
}

fn effective_k(spec: &CodeSpec, shortened_k: Option<usize>) -> Result<usize> {
    match spec.kind() {
        CodeKind::Eip | CodeKind::Peip => {
            let k = shortened_k.unwrap_or(spec.p());
            if k < 1 || k > spec.p() {
                return Err(CliError::BadParameters(format!(
                    "shortened width must satisfy 1 <= k <= {}, got {k}",
                    spec.p()
                )));
            }
            if k < spec.p() && spec.vertical().g() != [1] {
                return Err(CliError::BadParameters(
                    "shortened encoding requires g = 1".into(),
                ));
            }
            Ok(k)
        }
        _ => {
            if shortened_k.is_some() {
                return Err(CliError::BadParameters(
                    "--shortened-k applies to independent-parity kinds only".into(),
                ));
            }
            Ok(spec.data_cols())
        }
    }
}

/// Columns that get a shard file (structurally zero columns of a shortened
/// code are never stored).
fn stored_columns(spec: &CodeSpec, k: usize) -> Vec<usize> {
    match spec.kind() {
        CodeKind::Eip | CodeKind::Peip => {
            let mut cols: Vec<usize> = (0..k).collect();
            cols.extend(spec.p()..spec.p() + spec.r());
            cols
        }
        _ => (0..spec.p()).collect(),
    }
}

fn encode_stripe(spec: &CodeSpec, data: &CodeArray, k: usize) -> Result<CodeArray> {
    let arr = match spec.kind() {
        CodeKind::Ebr => ebr::encode(spec, data)?,
        CodeKind::Eip => {
            if k < spec.p() {
                eip::encode_shortened(spec, data, k)?.0
            } else {
                eip::encode(spec, data)?
            }
        }
        CodeKind::Pebr => {
            let parent = spec.as_kind(CodeKind::Ebr)?;
            let full = ebr::encode(&parent, data)?;
            punct::puncture(spec, &full)?
        }
        CodeKind::Peip => {
            let parent = spec.as_kind(CodeKind::Eip)?;
            let full = if k < spec.p() {
                eip::encode_shortened(&parent, data, k)?.0
            } else {
                eip::encode(&parent, data)?
            };
            punct::puncture(spec, &full)?
        }
        CodeKind::Brvp => {
            return Err(CliError::BadParameters(
                "the comparison construction is not a storage format".into(),
            ))
        }
    };
    Ok(arr)
}

pub fn encode_file(params: &EncodeParams, input: &Path, outdir: &Path) -> Result<EncodeSummary> {
    let (spec, prim_poly) = build_spec(
        params.kind,
        params.p,
        params.r,
        params.b,
        params.prim_poly,
        &params.g,
    )?;
    let bytes = std::fs::read(input)?;
    if params.b < 8 {
        let limit = 1u16 << params.b;
        if let Some(pos) = bytes.iter().position(|&x| (x as u16) >= limit) {
            return Err(CliError::BadParameters(format!(
                "byte {pos} of the input is {:#x}, out of range for b = {}",
                bytes[pos], params.b
            )));
        }
    }
    let k = effective_k(&spec, params.shortened_k)?;
    let k_local = spec.k_local();
    let stripe_symbols = k * k_local;
    let stripe_count = bytes.len().div_ceil(stripe_symbols) as u32;
    let rows = spec.array_rows();
    let columns = stored_columns(&spec, k);

    let mut regions: BTreeMap<usize, Vec<Vec<u8>>> = columns
        .iter()
        .map(|&c| (c, vec![Vec::with_capacity(stripe_count as usize); rows]))
        .collect();
    for stripe in 0..stripe_count as usize {
        let mut data = CodeArray::zero(k_local, k);
        let base = stripe * stripe_symbols;
        for s in 0..stripe_symbols {
            if let Some(&byte) = bytes.get(base + s) {
                data.set(s % k_local, s / k_local, byte);
            }
        }
        let arr = encode_stripe(&spec, &data, k)?;
        for (&c, regs) in regions.iter_mut() {
            for (row, reg) in regs.iter_mut().enumerate() {
                reg.push(arr.get(row, c));
            }
        }
    }

    std::fs::create_dir_all(outdir)?;
    let mut shard_files = Vec::new();
    let mut manifest_shards = BTreeMap::new();
    for &c in &columns {
        let header = ShardHeader {
            kind: spec.kind(),
            b: params.b as u8,
            p: spec.p() as u16,
            r: spec.r() as u8,
            g: spec.vertical().g().to_vec(),
            column_index: c as u16,
            stripe_count,
            payload_len: 0,
        };
        let file_bytes = write_shard(&header, &regions[&c])?;
        let name = format!("col_{c:03}.shard");
        let path = outdir.join(&name);
        std::fs::write(&path, &file_bytes)?;
        manifest_shards.insert(c, (name, crc32(&file_bytes)));
        shard_files.push((c, path));
    }
    let manifest = Manifest {
        kind: spec.kind(),
        p: spec.p(),
        r: spec.r(),
        b: params.b,
        prim_poly,
        g: spec.vertical().g().to_vec(),
        k,
        file_len: bytes.len() as u64,
        stripe_count,
        stripe_symbols,
        rows_per_col: rows,
        shards: manifest_shards,
    };
    manifest.write_to(outdir)?;
    Ok(EncodeSummary {
        stripe_count,
        shard_files,
        data_symbols_per_stripe: stripe_symbols,
    })
}

/// Lazily opened shard directory with per-shard read accounting.
struct ShardStore<'a> {
    dir: &'a Path,
    manifest: &'a Manifest,
    dropped: Vec<usize>,
    loaded: BTreeMap<usize, Option<ShardData>>,
    reads: BTreeMap<usize, u64>,
}

impl<'a> ShardStore<'a> {
    fn new(dir: &'a Path, manifest: &'a Manifest, dropped: &[usize]) -> Self {
        ShardStore {
            dir,
            manifest,
            dropped: dropped.to_vec(),
            loaded: BTreeMap::new(),
            reads: BTreeMap::new(),
        }
    }

    /// Loads a shard if present; `None` means the column is an erasure.
    fn load(&mut self, col: usize) -> Result<Option<&ShardData>> {
        if !self.loaded.contains_key(&col) {
            let data = self.read_column(col)?;
            self.loaded.insert(col, data);
        }
        Ok(self.loaded[&col].as_ref())
    }

    fn read_column(&mut self, col: usize) -> Result<Option<ShardData>> {
        if self.dropped.contains(&col) {
            return Ok(None);
        }
        let Some((name, _)) = self.manifest.shards.get(&col) else {
            return Ok(None);
        };
        let path = self.dir.join(name);
        let bytes = match std::fs::read(&path) {
            Ok(b) => b,
            Err(e) if e.kind() == std::io::ErrorKind::NotFound => return Ok(None),
            Err(e) => return Err(e.into()),
        };
        *self.reads.entry(col).or_insert(0) += bytes.len() as u64;
        let shard = match read_shard(&bytes, self.manifest.rows_per_col) {
            Ok(s) => s,
            Err(err) => {
                log::warn!("shard {name} is unreadable ({err}); treating column {col} as erased");
                return Ok(None);
            }
        };
        check_header(&shard.header, self.manifest, col)?;
        Ok(Some(shard))
    }
}

fn check_header(h: &ShardHeader, m: &Manifest, col: usize) -> Result<()> {
    let mut mismatches = Vec::new();
    if h.kind != m.kind {
        mismatches.push("kind");
    }
    if h.b as u32 != m.b {
        mismatches.push("b");
    }
    if h.p as usize != m.p {
        mismatches.push("p");
    }
    if h.r as usize != m.r {
        mismatches.push("r");
    }
    if h.g != m.g {
        mismatches.push("g");
    }
    if h.column_index as usize != col {
        mismatches.push("column_index");
    }
    if h.stripe_count != m.stripe_count {
        mismatches.push("stripe_count");
    }
    if mismatches.is_empty() {
        Ok(())
    } else {
        Err(CliError::Mismatch(format!(
            "column {col}: field(s) {} disagree with the manifest",
            mismatches.join(", ")
        )))
    }
}

/// Reconstructs the original file from a shard directory. Columns listed in
/// `drop_cols` are ignored even if their files exist, which simulates device
/// loss.
pub fn decode_dir(dir: &Path, output: &Path, drop_cols: &[usize]) -> Result<DecodeReport> {
    let manifest = Manifest::read_from(dir)?;
    let (spec, _) = build_spec(
        manifest.kind,
        manifest.p,
        manifest.r,
        manifest.b,
        Some(manifest.prim_poly),
        &manifest.g,
    )?;
    if spec.array_rows() != manifest.rows_per_col {
        return Err(CliError::Format(
            "manifest row count disagrees with the code parameters".into(),
        ));
    }
    if manifest.stripe_symbols != manifest.k * spec.k_local() {
        return Err(CliError::Format(
            "manifest stripe size disagrees with the code parameters".into(),
        ));
    }
    let rows = manifest.rows_per_col;
    let stripes = manifest.stripe_count as usize;
    let k_local = spec.k_local();
    let data_cols = manifest.data_cols();
    let mut report = DecodeReport {
        stripes: manifest.stripe_count,
        ..DecodeReport::default()
    };
    let mut store = ShardStore::new(dir, &manifest, drop_cols);

    // Pull in the data shards and see what state they are in.
    let mut missing = Vec::new();
    let mut damaged: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for &c in &data_cols {
        match store.load(c)? {
            None => missing.push(c),
            Some(shard) => {
                let bad: Vec<usize> = shard
                    .regions
                    .iter()
                    .enumerate()
                    .filter(|(_, r)| r.is_none())
                    .map(|(i, _)| i)
                    .collect();
                if !bad.is_empty() {
                    damaged.insert(c, bad);
                }
            }
        }
    }

    let local_feasible = !spec.kind().is_punctured()
        && missing.is_empty()
        && damaged
            .values()
            .all(|bad| bad.len() < spec.vertical().d());

    let mut out = vec![0u8; manifest.file_len as usize];
    if missing.is_empty() && damaged.is_empty() {
        // clean read
        extract_data(&manifest, k_local, &store, &mut out);
    } else if local_feasible {
        // per-column repair from the column's own shard; nothing else is read
        let mut fixed: BTreeMap<usize, Vec<Vec<u8>>> = BTreeMap::new();
        for (&c, bad) in &damaged {
            let shard = store.loaded[&c].as_ref().expect("loaded above");
            let mut mask = vec![false; rows];
            for &row in bad {
                mask[row] = true;
            }
            let mut repaired_rows = vec![vec![0u8; stripes]; rows];
            for stripe in 0..stripes {
                let mut col = RingElem::zero(rows);
                for row in 0..rows {
                    if let Some(region) = &shard.regions[row] {
                        col.set_coeff(row, region[stripe]);
                    }
                }
                let fixed_col = spec.vertical().repair(&col, &mask)?;
                for (row, out_row) in repaired_rows.iter_mut().enumerate() {
                    out_row[stripe] = fixed_col.coeff(row);
                }
                report.local_symbol_repairs += bad.len();
            }
            fixed.insert(c, repaired_rows);
        }
        extract_with_overrides(&manifest, k_local, &store, &fixed, &mut out);
    } else {
        // whole columns must be rebuilt: open everything else that survives
        let all_cols: Vec<usize> = manifest.shards.keys().copied().collect();
        for &c in &all_cols {
            store.load(c)?;
        }
        let erased_cols: Vec<usize> = all_cols
            .iter()
            .copied()
            .filter(|c| store.loaded.get(c).is_none_or(|s| s.is_none()))
            .collect();
        if erased_cols.len() > spec.r() {
            return Err(CliError::Core(earc_core::Error::TooManyErasures {
                unit: "columns",
                got: erased_cols.len(),
                max: spec.r(),
            }));
        }
        report.global_columns = erased_cols.clone();
        let total = spec.array_cols();
        for stripe in 0..stripes {
            let mut arr = CodeArray::zero(rows, total);
            for c in 0..total {
                match store.loaded.get(&c).and_then(|s| s.as_ref()) {
                    Some(shard) => {
                        for row in 0..rows {
                            match &shard.regions[row] {
                                Some(region) => arr.set(row, c, region[stripe]),
                                None => arr.erase(row, c),
                            }
                        }
                    }
                    None => {
                        if manifest.shards.contains_key(&c) || drop_cols.contains(&c) {
                            arr.erase_column(c);
                        }
                        // otherwise a structurally zero column of a shortened
                        // code: it stays zero and known
                    }
                }
            }
            match spec.kind() {
                CodeKind::Ebr => {
                    ebr::repair(&spec, &mut arr)?;
                }
                CodeKind::Eip => {
                    eip::decode(&spec, &mut arr)?;
                }
                CodeKind::Pebr | CodeKind::Peip => {
                    for c in arr.columns_with_erasures() {
                        arr.erase_column(c);
                    }
                    punct::decode_columns(&spec, &mut arr)?;
                }
                CodeKind::Brvp => unreachable!("rejected at encode time"),
            }
            let base = stripe * manifest.k * k_local;
            for (ordinal, &c) in data_cols.iter().enumerate() {
                for row in 0..k_local {
                    let at = base + ordinal * k_local + row;
                    if at < out.len() {
                        out[at] = arr.get(row, c);
                    }
                }
            }
        }
    }

    std::fs::write(output, &out)?;
    report.reads = store.reads;
    Ok(report)
}

fn extract_data(manifest: &Manifest, k_local: usize, store: &ShardStore, out: &mut [u8]) {
    extract_with_overrides(manifest, k_local, store, &BTreeMap::new(), out)
}

fn extract_with_overrides(
    manifest: &Manifest,
    k_local: usize,
    store: &ShardStore,
    fixed: &BTreeMap<usize, Vec<Vec<u8>>>,
    out: &mut [u8],
) {
    let stripes = manifest.stripe_count as usize;
    for (ordinal, &c) in manifest.data_cols().iter().enumerate() {
        let shard = store.loaded[&c].as_ref().expect("data shard loaded");
        for row in 0..k_local {
            let region: &[u8] = match fixed.get(&c) {
                Some(rows) => &rows[row],
                None => shard.regions[row].as_ref().expect("region validated"),
            };
            for (stripe, &sym) in region.iter().enumerate().take(stripes) {
                let at = stripe * manifest.k * k_local + ordinal * k_local + row;
                if at < out.len() {
                    out[at] = sym;
                }
            }
        }
    }
}

/// Integrity check of a shard directory: file checksums against the
/// manifest, header agreement, region checksums, and full codeword
/// membership of every stripe.
pub fn verify_dir(dir: &Path) -> Result<VerifyReport> {
    let manifest = Manifest::read_from(dir)?;
    let (spec, _) = build_spec(
        manifest.kind,
        manifest.p,
        manifest.r,
        manifest.b,
        Some(manifest.prim_poly),
        &manifest.g,
    )?;
    let mut report = VerifyReport::default();
    let rows = manifest.rows_per_col;
    let mut shards: BTreeMap<usize, ShardData> = BTreeMap::new();
    for (&col, (name, crc)) in &manifest.shards {
        let path = dir.join(name);
        let bytes = match std::fs::read(&path) {
            Ok(b) => b,
            Err(e) => {
                report.problems.push(format!("column {col}: {e}"));
                continue;
            }
        };
        if crc32(&bytes) != *crc {
            report
                .problems
                .push(format!("column {col}: file checksum mismatch"));
        }
        match read_shard(&bytes, rows) {
            Ok(shard) => {
                if let Err(e) = check_header(&shard.header, &manifest, col) {
                    report.problems.push(e.to_string());
                    continue;
                }
                if !shard.payload_ok {
                    report
                        .problems
                        .push(format!("column {col}: payload checksum mismatch"));
                }
                for (row, region) in shard.regions.iter().enumerate() {
                    if region.is_none() {
                        report
                            .problems
                            .push(format!("column {col}: row {row} region checksum mismatch"));
                    }
                }
                shards.insert(col, shard);
            }
            Err(e) => report.problems.push(format!("column {col}: {e}")),
        }
        report.shards_checked += 1;
    }
    if report.problems.is_empty() {
        let total = spec.array_cols();
        for stripe in 0..manifest.stripe_count as usize {
            let mut arr = CodeArray::zero(rows, total);
            for c in 0..total {
                if let Some(shard) = shards.get(&c) {
                    for row in 0..rows {
                        arr.set(row, c, shard.regions[row].as_ref().expect("validated")[stripe]);
                    }
                }
            }
            let member = match spec.kind() {
                CodeKind::Ebr => ebr::is_codeword(&spec, &arr),
                CodeKind::Eip => eip::is_codeword(&spec, &arr),
                CodeKind::Pebr => {
                    let parent = spec.as_kind(CodeKind::Ebr)?;
                    punct::unpuncture(&spec, &arr)
                        .map(|full| ebr::is_codeword(&parent, &full))
                        .unwrap_or(false)
                }
                CodeKind::Peip => {
                    let parent = spec.as_kind(CodeKind::Eip)?;
                    punct::unpuncture(&spec, &arr)
                        .map(|full| eip::is_codeword(&parent, &full))
                        .unwrap_or(false)
                }
                CodeKind::Brvp => false,
            };
            if !member {
                report
                    .problems
                    .push(format!("stripe {stripe}: not a codeword"));
            }
            report.stripes_checked += 1;
        }
    }
    Ok(report)
}

/// Runs one named analysis suite, returning its text report and verdict.
pub fn analyze(suite: &str) -> Result<(String, bool)> {
    let suite = match suite {
        "distance" => Suite::Distance,
        "mds" => Suite::Mds,
        "lines" => Suite::Lines,
        "xor" => Suite::Xor,
        "paper-golden" => Suite::Golden,
        other => return Err(CliError::UnknownSuite(other.to_string())),
    };
    let report = run_suite(suite)?;
    Ok((report.to_string(), report.all_pass()))
}

/// Erases the requested lines from a random codeword and recovers them,
/// reporting the index map that was used.
pub fn demo_lines(
    p: usize,
    r: usize,
    slope: Slope,
    anchors: &[usize],
    seed: u64,
) -> Result<String> {
    let spec = CodeSpec::binary_simple(CodeKind::Ebr, p, r)?;
    let mut rng = StdRng::seed_from_u64(seed);
    let mut data = CodeArray::zero(spec.k_local(), spec.data_cols());
    for row in 0..data.rows() {
        for col in 0..data.cols() {
            data.set(row, col, rng.gen_range(0..2));
        }
    }
    let word = ebr::encode(&spec, &data)?;
    let lines: Vec<LineId> = anchors.iter().map(|&a| LineId::new(slope, a)).collect();
    let map = geometry::map_for(p, r, slope)?;
    let mut broken = word.clone();
    geometry::recover_lines(&spec, &mut broken, &lines)?;
    let ok = broken == word;
    let mut out = String::new();
    out.push_str(&format!(
        "code {}: erased {} line(s) of slope {slope} at anchors {anchors:?}\n",
        spec.label(),
        lines.len(),
    ));
    out.push_str(&format!(
        "index map b[u][v] = c[<{}u+{}v>][<{}u+{}v>]\n",
        map.a, map.b, map.c, map.e
    ));
    for s in (0..r).map(Slope::Finite).chain([Slope::Infinite]) {
        out.push_str(&format!(
            "  slope {s} -> slope {}\n",
            geometry::slope_image(&map, s)
        ));
    }
    out.push_str(if ok {
        "recovered: array matches the original\n"
    } else {
        "RECOVERY MISMATCH\n"
    });
    if !ok {
        return Err(CliError::BadParameters(
            "line recovery did not reproduce the original array".into(),
        ));
    }
    Ok(out)
}

/// Convenience: locate the manifest path for a directory.
pub fn manifest_path(dir: &Path) -> PathBuf {
    dir.join(MANIFEST_NAME)
}
