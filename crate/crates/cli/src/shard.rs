//! On-disk shard format: a fixed header, then one region per symbol row of
//! the column (the row's symbol for every stripe, followed by its CRC32),
//! then a CRC32 over the whole payload.
//!
//! Layout, all integers little-endian:
//!
//! ```text
//! magic        4  "EARC"
//! version      1  0x01
//! kind         1  0 = EBR, 1 = EIP, 2 = PEBR, 3 = PEIP
//! b            1  field width in bits
//! p            2
//! r            1
//! t            1  deg g
//! g            t+1 coefficient bytes, index = degree
//! column_index 2
//! stripe_count 4
//! payload_len  8
//! header_crc32 4  over every preceding header byte
//! payload      rows * (stripe_count + 4) bytes
//! payload_crc  4
//! ```

use crate::{CliError, Result};
use earc_core::CodeKind;

pub const MAGIC: &[u8; 4] = b"EARC";
pub const VERSION: u8 = 0x01;

/// CRC-32 (IEEE 802.3, reflected), the variant produced by zip/png tooling.
pub fn crc32(bytes: &[u8]) -> u32 {
    let mut crc: u32 = 0xffff_ffff;
    for &b in bytes {
        crc ^= b as u32;
        for _ in 0..8 {
            let mask = (crc & 1).wrapping_neg();
            crc = (crc >> 1) ^ (0xedb8_8320 & mask);
        }
    }
    !crc
}

pub fn kind_to_byte(kind: CodeKind) -> Result<u8> {
    match kind {
        CodeKind::Ebr => Ok(0),
        CodeKind::Eip => Ok(1),
        CodeKind::Pebr => Ok(2),
        CodeKind::Peip => Ok(3),
        CodeKind::Brvp => Err(CliError::BadParameters(
            "the comparison construction is not a storage format".into(),
        )),
    }
}

pub fn kind_from_byte(byte: u8) -> Result<CodeKind> {
    match byte {
        0 => Ok(CodeKind::Ebr),
        1 => Ok(CodeKind::Eip),
        2 => Ok(CodeKind::Pebr),
        3 => Ok(CodeKind::Peip),
        other => Err(CliError::Format(format!("unknown kind byte {other:#x}"))),
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ShardHeader {
    pub kind: CodeKind,
    pub b: u8,
    pub p: u16,
    pub r: u8,
    pub g: Vec<u8>,
    pub column_index: u16,
    pub stripe_count: u32,
    pub payload_len: u64,
}

impl ShardHeader {
    pub fn encoded_len(&self) -> usize {
        29 + self.g.len()
    }

    pub fn encode(&self) -> Result<Vec<u8>> {
        if self.g.is_empty() || self.g.len() > 256 {
            return Err(CliError::Format("g must have 1..=256 coefficients".into()));
        }
        let mut out = Vec::with_capacity(self.encoded_len());
        out.extend_from_slice(MAGIC);
        out.push(VERSION);
        out.push(kind_to_byte(self.kind)?);
        out.push(self.b);
        out.extend_from_slice(&self.p.to_le_bytes());
        out.push(self.r);
        out.push((self.g.len() - 1) as u8);
        out.extend_from_slice(&self.g);
        out.extend_from_slice(&self.column_index.to_le_bytes());
        out.extend_from_slice(&self.stripe_count.to_le_bytes());
        out.extend_from_slice(&self.payload_len.to_le_bytes());
        let crc = crc32(&out);
        out.extend_from_slice(&crc.to_le_bytes());
        Ok(out)
    }

    /// Parses a header from the front of `bytes`, returning it with the
    /// number of bytes consumed.
    pub fn decode(bytes: &[u8]) -> Result<(ShardHeader, usize)> {
        if bytes.len() < 12 {
            return Err(CliError::Format("shard header truncated".into()));
        }
        if &bytes[0..4] != MAGIC {
            return Err(CliError::Format("bad shard magic".into()));
        }
        if bytes[4] != VERSION {
            return Err(CliError::Format(format!("unsupported version {}", bytes[4])));
        }
        let kind = kind_from_byte(bytes[5])?;
        let b = bytes[6];
        let p = u16::from_le_bytes([bytes[7], bytes[8]]);
        let r = bytes[9];
        let t = bytes[10] as usize;
        let len = 29 + t + 1;
        if bytes.len() < len {
            return Err(CliError::Format("shard header truncated".into()));
        }
        let g = bytes[11..11 + t + 1].to_vec();
        let mut at = 11 + t + 1;
        let column_index = u16::from_le_bytes([bytes[at], bytes[at + 1]]);
        at += 2;
        let stripe_count = u32::from_le_bytes(bytes[at..at + 4].try_into().unwrap());
        at += 4;
        let payload_len = u64::from_le_bytes(bytes[at..at + 8].try_into().unwrap());
        at += 8;
        let stored = u32::from_le_bytes(bytes[at..at + 4].try_into().unwrap());
        if crc32(&bytes[..at]) != stored {
            return Err(CliError::Format("shard header checksum mismatch".into()));
        }
        at += 4;
        Ok((
            ShardHeader {
                kind,
                b,
                p,
                r,
                g,
                column_index,
                stripe_count,
                payload_len,
            },
            at,
        ))
    }
}

/// One column's worth of data, region-per-row.
#[derive(Debug, Clone)]
pub struct ShardData {
    pub header: ShardHeader,
    /// `regions[row][stripe]`; None when the region checksum failed.
    pub regions: Vec<Option<Vec<u8>>>,
    /// Whole-payload checksum verdict.
    pub payload_ok: bool,
}

/// Serializes a shard: `regions[row]` must each hold stripe_count bytes.
pub fn write_shard(header: &ShardHeader, regions: &[Vec<u8>]) -> Result<Vec<u8>> {
    let stripes = header.stripe_count as usize;
    let mut payload = Vec::with_capacity(regions.len() * (stripes + 4));
    for region in regions {
        if region.len() != stripes {
            return Err(CliError::Format(format!(
                "region holds {} symbols, expected {stripes}",
                region.len()
            )));
        }
        payload.extend_from_slice(region);
        payload.extend_from_slice(&crc32(region).to_le_bytes());
    }
    let mut hdr = header.clone();
    hdr.payload_len = payload.len() as u64;
    let mut out = hdr.encode()?;
    out.extend_from_slice(&payload);
    out.extend_from_slice(&crc32(&payload).to_le_bytes());
    Ok(out)
}

/// Parses a shard, validating region checksums individually so that a bad
/// sector surfaces as one missing row rather than a dead shard.
pub fn read_shard(bytes: &[u8], rows: usize) -> Result<ShardData> {
    let (header, consumed) = ShardHeader::decode(bytes)?;
    let stripes = header.stripe_count as usize;
    let region_len = stripes + 4;
    let expect_payload = rows * region_len;
    if header.payload_len as usize != expect_payload {
        return Err(CliError::Format(format!(
            "payload length {} does not match {rows} rows of {region_len} bytes",
            header.payload_len
        )));
    }
    if bytes.len() < consumed + expect_payload + 4 {
        return Err(CliError::Format("shard payload truncated".into()));
    }
    let payload = &bytes[consumed..consumed + expect_payload];
    let stored = u32::from_le_bytes(
        bytes[consumed + expect_payload..consumed + expect_payload + 4]
            .try_into()
            .unwrap(),
    );
    let payload_ok = crc32(payload) == stored;
    let mut regions = Vec::with_capacity(rows);
    for row in 0..rows {
        let at = row * region_len;
        let data = &payload[at..at + stripes];
        let rc = u32::from_le_bytes(payload[at + stripes..at + region_len].try_into().unwrap());
        if crc32(data) == rc {
            regions.push(Some(data.to_vec()));
        } else {
            regions.push(None);
        }
    }
    Ok(ShardData {
        header,
        regions,
        payload_ok,
    })
}
