//! Plain-text manifest written next to the shards: code parameters, stripe
//! geometry, original file length and one checksum line per shard file.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::path::Path;

use crate::{CliError, Result};
use earc_core::CodeKind;

pub const MANIFEST_NAME: &str = "manifest.txt";
const FORMAT_TAG: &str = "earc-manifest";

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Manifest {
    pub kind: CodeKind,
    pub p: usize,
    pub r: usize,
    pub b: u32,
    pub prim_poly: u16,
    /// Coefficients of g(x), index = degree.
    pub g: Vec<u8>,
    /// Effective data columns (the shortened width for EIP kinds).
    pub k: usize,
    pub file_len: u64,
    pub stripe_count: u32,
    /// Data symbols consumed per stripe.
    pub stripe_symbols: usize,
    pub rows_per_col: usize,
    /// column index -> (file name, whole-file crc32)
    pub shards: BTreeMap<usize, (String, u32)>,
}

fn kind_name(kind: CodeKind) -> &'static str {
    kind.as_str()
}

fn kind_parse(s: &str) -> Result<CodeKind> {
    match s.to_ascii_uppercase().as_str() {
        "EBR" => Ok(CodeKind::Ebr),
        "EIP" => Ok(CodeKind::Eip),
        "PEBR" => Ok(CodeKind::Pebr),
        "PEIP" => Ok(CodeKind::Peip),
        other => Err(CliError::Format(format!("unknown kind '{other}'"))),
    }
}

fn g_to_string(g: &[u8]) -> String {
    g.iter()
        .map(|c| format!("{c:02x}"))
        .collect::<Vec<_>>()
        .join(",")
}

fn g_from_string(s: &str) -> Result<Vec<u8>> {
    s.split(',')
        .map(|part| {
            u8::from_str_radix(part.trim(), 16)
                .map_err(|_| CliError::Format(format!("bad g coefficient '{part}'")))
        })
        .collect()
}

impl Manifest {
    pub fn render(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "format = {FORMAT_TAG}");
        let _ = writeln!(out, "version = 1");
        let _ = writeln!(out, "kind = {}", kind_name(self.kind));
        let _ = writeln!(out, "p = {}", self.p);
        let _ = writeln!(out, "r = {}", self.r);
        let _ = writeln!(out, "b = {}", self.b);
        let _ = writeln!(out, "prim_poly = {:#x}", self.prim_poly);
        let _ = writeln!(out, "g = {}", g_to_string(&self.g));
        let _ = writeln!(out, "k = {}", self.k);
        let _ = writeln!(out, "file_len = {}", self.file_len);
        let _ = writeln!(out, "stripe_count = {}", self.stripe_count);
        let _ = writeln!(out, "stripe_symbols = {}", self.stripe_symbols);
        let _ = writeln!(out, "rows_per_col = {}", self.rows_per_col);
        for (col, (file, crc)) in &self.shards {
            let _ = writeln!(out, "shard.{col}.file = {file}");
            let _ = writeln!(out, "shard.{col}.crc32 = {crc:08x}");
        }
        out
    }

    pub fn parse(text: &str) -> Result<Manifest> {
        let mut kv = BTreeMap::new();
        for (ln, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let Some((key, value)) = line.split_once('=') else {
                return Err(CliError::Format(format!("manifest line {} is not key = value", ln + 1)));
            };
            kv.insert(key.trim().to_string(), value.trim().to_string());
        }
        let get = |key: &str| -> Result<String> {
            kv.get(key)
                .cloned()
                .ok_or_else(|| CliError::Format(format!("manifest is missing '{key}'")))
        };
        if get("format")? != FORMAT_TAG {
            return Err(CliError::Format("not a shard manifest".into()));
        }
        let parse_usize = |key: &str| -> Result<usize> {
            get(key)?
                .parse()
                .map_err(|_| CliError::Format(format!("bad integer for '{key}'")))
        };
        let prim_raw = get("prim_poly")?;
        let prim_poly = u16::from_str_radix(prim_raw.trim_start_matches("0x"), 16)
            .map_err(|_| CliError::Format("bad prim_poly".into()))?;
        let mut shards = BTreeMap::new();
        for (key, value) in &kv {
            if let Some(rest) = key.strip_prefix("shard.") {
                if let Some(col) = rest.strip_suffix(".file") {
                    let col: usize = col
                        .parse()
                        .map_err(|_| CliError::Format(format!("bad shard column in '{key}'")))?;
                    let crc_key = format!("shard.{col}.crc32");
                    let crc = kv
                        .get(&crc_key)
                        .ok_or_else(|| CliError::Format(format!("missing '{crc_key}'")))?;
                    let crc = u32::from_str_radix(crc, 16)
                        .map_err(|_| CliError::Format(format!("bad crc in '{crc_key}'")))?;
                    shards.insert(col, (value.clone(), crc));
                }
            }
        }
        Ok(Manifest {
            kind: kind_parse(&get("kind")?)?,
            p: parse_usize("p")?,
            r: parse_usize("r")?,
            b: parse_usize("b")? as u32,
            prim_poly,
            g: g_from_string(&get("g")?)?,
            k: parse_usize("k")?,
            file_len: get("file_len")?
                .parse()
                .map_err(|_| CliError::Format("bad file_len".into()))?,
            stripe_count: get("stripe_count")?
                .parse()
                .map_err(|_| CliError::Format("bad stripe_count".into()))?,
            stripe_symbols: parse_usize("stripe_symbols")?,
            rows_per_col: parse_usize("rows_per_col")?,
            shards,
        })
    }

    pub fn write_to(&self, dir: &Path) -> Result<()> {
        std::fs::write(dir.join(MANIFEST_NAME), self.render())?;
        Ok(())
    }

    pub fn read_from(dir: &Path) -> Result<Manifest> {
        let text = std::fs::read_to_string(dir.join(MANIFEST_NAME))?;
        Manifest::parse(&text)
    }

    /// Total columns of the array, parity included.
    pub fn total_cols(&self) -> usize {
        match self.kind {
            CodeKind::Eip | CodeKind::Peip => self.p + self.r,
            _ => self.p,
        }
    }

    /// Parity column indices.
    pub fn parity_cols(&self) -> Vec<usize> {
        match self.kind {
            CodeKind::Eip | CodeKind::Peip => (self.p..self.p + self.r).collect(),
            _ => (self.p - self.r..self.p).collect(),
        }
    }

    /// Data column indices that actually carry file symbols.
    pub fn data_cols(&self) -> Vec<usize> {
        (0..self.k).collect()
    }
}
