//! EIP(p, r, q, g(x)) codec: p x (p+r) arrays whose parity columns are the
//! rotation-XOR aggregates c_{p+s} = XOR_j alpha^{sj} c_j. Independent
//! parities make single-symbol updates cheap; decoding reuses the EBR column
//! eliminator when only data columns are lost and falls back to a generic
//! elimination for mixed data/parity loss.

use crate::array::CodeArray;
use crate::code::{CodeKind, CodeSpec, Mds};
use crate::ebr::{line_sum, solve_erased_columns, RepairReport};
use crate::ring::{RingElem, XorMeter};
use crate::{Error, Result};

/// The deltas applied by a single-symbol update.
#[derive(Debug, Clone)]
pub struct UpdatePlan {
    /// Updated data column.
    pub column: usize,
    /// Vertical encoding of the one-symbol change, XORed into the column.
    pub delta_column: RingElem,
    /// (parity column index, delta XORed into it).
    pub parity_deltas: Vec<(usize, RingElem)>,
    /// Parity symbols whose stored value changed: everything outside the
    /// data region, i.e. (r+1) * weight(delta) - 1.
    pub parity_symbols_touched: usize,
}

impl UpdatePlan {
    fn empty(column: usize, p: usize) -> Self {
        UpdatePlan {
            column,
            delta_column: RingElem::zero(p),
            parity_deltas: Vec::new(),
            parity_symbols_touched: 0,
        }
    }
}

fn expect_eip(spec: &CodeSpec) -> Result<()> {
    if spec.kind() != CodeKind::Eip {
        return Err(Error::BadShape(format!(
            "operation applies to EIP codes, spec is {}",
            spec.label()
        )));
    }
    Ok(())
}

fn expect_shape(spec: &CodeSpec, arr: &CodeArray) -> Result<()> {
    if arr.rows() != spec.array_rows() || arr.cols() != spec.array_cols() {
        return Err(Error::BadShape(format!(
            "expected {}x{} array for {}, got {}x{}",
            spec.array_rows(),
            spec.array_cols(),
            spec.label(),
            arr.rows(),
            arr.cols()
        )));
    }
    Ok(())
}

/// Encodes a k_local x p data block into the full p x (p+r) array.
pub fn encode(spec: &CodeSpec, data: &CodeArray) -> Result<CodeArray> {
    let (arr, _) = encode_inner(spec, data, spec.p())?;
    Ok(arr)
}

/// Shortened encoding: only the first k data columns carry symbols, the rest
/// are identically zero and are skipped entirely. Requires g = 1, and the
/// returned meter value is exactly k(p-2) + r(k-1)p field XORs.
pub fn encode_shortened(spec: &CodeSpec, data: &CodeArray, k: usize) -> Result<(CodeArray, u64)> {
    if spec.vertical().g() != [1] {
        return Err(Error::BadParameters(
            "shortened encoding instruments the g = 1 configuration only".into(),
        ));
    }
    encode_inner(spec, data, k)
}

fn encode_inner(spec: &CodeSpec, data: &CodeArray, k: usize) -> Result<(CodeArray, u64)> {
    expect_eip(spec)?;
    let p = spec.p();
    if k < 1 || k > p {
        return Err(Error::BadParameters(format!(
            "shortened width must satisfy 1 <= k <= p, got {k}"
        )));
    }
    if data.rows() != spec.k_local() || data.cols() != k {
        return Err(Error::BadShape(format!(
            "expected {}x{} data block, got {}x{}",
            spec.k_local(),
            k,
            data.rows(),
            data.cols()
        )));
    }
    let mut meter = XorMeter::new();
    let mut arr = CodeArray::zero(p, p + spec.r());
    let mut cols = Vec::with_capacity(k);
    for j in 0..k {
        let block: Vec<u8> = (0..spec.k_local()).map(|r| data.get(r, j)).collect();
        let col = spec.vertical().encode_metered(&block, &mut meter)?;
        arr.set_column(j, &col)?;
        cols.push(col);
    }
    for s in 0..spec.r() {
        let mut acc = cols[0].clone();
        for (j, col) in cols.iter().enumerate().skip(1) {
            acc.xor_assign(&col.rotate(s * j % p), &mut meter);
        }
        arr.set_column(p + s, &acc)?;
    }
    debug_assert!(is_codeword(spec, &arr));
    Ok((arr, meter.total()))
}

/// Membership: every column in the vertical code and, for each s, each
/// slope-s line across the first p columns XORs to its parity symbol.
pub fn is_codeword(spec: &CodeSpec, arr: &CodeArray) -> bool {
    if spec.kind() != CodeKind::Eip || expect_shape(spec, arr).is_err() || arr.has_erasures() {
        return false;
    }
    let p = spec.p();
    for c in 0..p + spec.r() {
        if !spec.vertical().is_codeword(&arr.column(c)) {
            return false;
        }
    }
    for s in 0..spec.r() {
        for i in 0..p {
            if line_sum(arr, s, i, p) ^ arr.get(i, p + s) != 0 {
                return false;
            }
        }
    }
    true
}

/// Repairs erasures: local repair first, then whole-column decoding. Data-only
/// column loss goes through the syndrome eliminator; parity-only loss is
/// re-encoded; mixed loss falls back to a generic elimination over the full
/// constraint system.
pub fn decode(spec: &CodeSpec, arr: &mut CodeArray) -> Result<RepairReport> {
    expect_eip(spec)?;
    expect_shape(spec, arr)?;
    let p = spec.p();
    let mut report = RepairReport::default();
    for c in arr.columns_with_erasures() {
        let mask = arr.column_erasures(c);
        let count = mask.iter().filter(|&&e| e).count();
        match spec.vertical().repair(&arr.column(c), &mask) {
            Ok(fixed) => {
                arr.set_column(c, &fixed)?;
                report.local.push((c, count));
            }
            Err(_) => arr.erase_column(c),
        }
    }
    let erased = arr.fully_erased_columns();
    report.global = erased.clone();
    if erased.is_empty() {
        return Ok(report);
    }
    if erased.len() > spec.r() {
        return Err(Error::TooManyErasures {
            unit: "columns",
            got: erased.len(),
            max: spec.r(),
        });
    }
    let (data_lost, parity_lost): (Vec<usize>, Vec<usize>) =
        erased.iter().partition(|&&c| c < p);
    if parity_lost.is_empty() {
        // syndromes against the independent-parity check rows
        let rho = data_lost.len();
        let mut syn = Vec::with_capacity(rho);
        for j in 0..rho {
            let mut acc = arr.column(p + j);
            for u in 0..p {
                if arr.is_erased(0, u) {
                    continue;
                }
                acc.xor_assign(&arr.column(u).rotate(j * u % p), &mut XorMeter::new());
            }
            syn.push(acc);
        }
        let values =
            solve_erased_columns(p, spec, &data_lost, syn, &mut XorMeter::new(), None)?;
        for (&c, v) in data_lost.iter().zip(values.iter()) {
            arr.set_column(c, v)?;
        }
    } else if data_lost.is_empty() {
        for &c in &parity_lost {
            let s = c - p;
            let mut acc = arr.column(0).rotate(0);
            for u in 1..p {
                acc.xor_assign(&arr.column(u).rotate(s * u % p), &mut XorMeter::new());
            }
            arr.set_column(c, &acc)?;
        }
    } else {
        if spec.mds_on_columns() != Mds::Yes {
            log::warn!(
                "{}: mixed data/parity loss requested but the code is not verified MDS",
                spec.label()
            );
        }
        crate::analysis::solve_erasures_generic(spec, arr)?;
    }
    debug_assert!(is_codeword(spec, arr));
    Ok(report)
}

/// Rewrites one data symbol in place, touching only column j and the r parity
/// columns. Returns the plan that was applied.
pub fn update(
    spec: &CodeSpec,
    arr: &mut CodeArray,
    row: usize,
    col: usize,
    new_value: u8,
) -> Result<UpdatePlan> {
    expect_eip(spec)?;
    expect_shape(spec, arr)?;
    if arr.has_erasures() {
        return Err(Error::BadShape(
            "updates require a fully known array; repair first".into(),
        ));
    }
    let p = spec.p();
    if row >= spec.k_local() || col >= p {
        return Err(Error::OutOfRange { row, col });
    }
    let delta_val = arr.get(row, col) ^ new_value;
    if delta_val == 0 {
        return Ok(UpdatePlan::empty(col, p));
    }
    let mut block = vec![0u8; spec.k_local()];
    block[row] = delta_val;
    let delta = spec.vertical().encode(&block)?;
    let weight = delta.weight();

    let mut column = arr.column(col);
    column.xor_assign(&delta, &mut XorMeter::new());
    arr.set_column(col, &column)?;

    let mut parity_deltas = Vec::with_capacity(spec.r());
    for s in 0..spec.r() {
        let rot = delta.rotate(s * col % p);
        let mut pcol = arr.column(p + s);
        pcol.xor_assign(&rot, &mut XorMeter::new());
        arr.set_column(p + s, &pcol)?;
        parity_deltas.push((p + s, rot));
    }
    Ok(UpdatePlan {
        column: col,
        delta_column: delta,
        parity_deltas,
        parity_symbols_touched: (spec.r() + 1) * weight - 1,
    })
}

/// True iff the (p-1) x (p+r) array, taken with a zero row appended, has all
/// slope-s lines agreeing in parity with their independent parity symbol.
/// Arrays over GF(2^b) are b binary arrays in parallel, so the condition is
/// checked per bit plane.
pub fn is_ip_array(spec: &CodeSpec, arr: &CodeArray) -> bool {
    let p = spec.p();
    if arr.rows() != p - 1 || arr.cols() != p + spec.r() || arr.has_erasures() {
        return false;
    }
    let bit = |r: usize, c: usize, plane: u32| (arr.get(r, c) >> plane) & 1;
    for plane in 0..spec.field().bits() {
        for s in 0..spec.r() {
            let parity_of = |i: usize| -> u8 {
                let mut acc = 0u8;
                for v in 0..p {
                    let u = crate::ring::modp(i as i64 - (s * v) as i64, p);
                    if u < p - 1 {
                        acc ^= bit(u, v, plane);
                    }
                }
                if i < p - 1 {
                    acc ^= bit(i, p + s, plane);
                }
                acc
            };
            let first = parity_of(0);
            if (1..p).any(|i| parity_of(i) != first) {
                return false;
            }
        }
    }
    true
}

/// Maps a member of EIP(p,r,q,1) to its (p-1) x (p+r) independent-parity
/// array by the per-column transform.
pub fn to_ip(spec: &CodeSpec, arr: &CodeArray) -> Result<CodeArray> {
    require_unit_g(spec)?;
    if !is_codeword(spec, arr) {
        return Err(Error::NotACodeword);
    }
    let p = spec.p();
    let mut out = CodeArray::zero(p - 1, p + spec.r());
    for c in 0..p + spec.r() {
        let short = crate::ebr::drop_column(&arr.column(c));
        for (r, &v) in short.iter().enumerate() {
            out.set(r, c, v);
        }
    }
    debug_assert!(is_ip_array(spec, &out));
    Ok(out)
}

/// Inverse of [`to_ip`].
pub fn from_ip(spec: &CodeSpec, arr: &CodeArray) -> Result<CodeArray> {
    require_unit_g(spec)?;
    if !is_ip_array(spec, arr) {
        return Err(Error::NotACodeword);
    }
    let p = spec.p();
    let mut out = CodeArray::zero(p, p + spec.r());
    for c in 0..p + spec.r() {
        let short: Vec<u8> = (0..p - 1).map(|r| arr.get(r, c)).collect();
        out.set_column(c, &crate::ebr::lift_column(&short))?;
    }
    debug_assert!(is_codeword(spec, &out));
    Ok(out)
}

fn require_unit_g(spec: &CodeSpec) -> Result<()> {
    if spec.vertical().g() != [1] {
        return Err(Error::BadParameters(
            "the independent-parity transform applies to g = 1 codes only".into(),
        ));
    }
    Ok(())
}
