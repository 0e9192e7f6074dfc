//! Punctured codes: deleting the trailing t+1 rows of every array trades the
//! vertical (local) erasure correction for shorter arrays while keeping the
//! column-MDS property. A punctured column re-extends by systematic vertical
//! encoding, so decoding embeds back into the parent code.

use crate::array::CodeArray;
use crate::code::{CodeKind, CodeSpec};
use crate::ebr;
use crate::eip;
use crate::geometry::{self, LineId};
use crate::gf::Field;
use crate::{Error, Result};

fn parent_kind(spec: &CodeSpec) -> Result<CodeKind> {
    match spec.kind() {
        CodeKind::Pebr => Ok(CodeKind::Ebr),
        CodeKind::Peip => Ok(CodeKind::Eip),
        _ => Err(Error::BadShape(format!(
            "puncturing operations expect a punctured kind, spec is {}",
            spec.label()
        ))),
    }
}

fn parent_is_codeword(parent: &CodeSpec, arr: &CodeArray) -> bool {
    match parent.kind() {
        CodeKind::Ebr => ebr::is_codeword(parent, arr),
        CodeKind::Eip => eip::is_codeword(parent, arr),
        _ => false,
    }
}

/// Keeps the first p-t-1 rows of a full codeword.
pub fn puncture(spec: &CodeSpec, arr: &CodeArray) -> Result<CodeArray> {
    let parent = spec.as_kind(parent_kind(spec)?)?;
    if !parent_is_codeword(&parent, arr) {
        return Err(Error::NotACodeword);
    }
    Ok(take_rows(arr, spec.array_rows()))
}

fn take_rows(arr: &CodeArray, rows: usize) -> CodeArray {
    let mut out = CodeArray::zero(rows, arr.cols());
    for r in 0..rows {
        for c in 0..arr.cols() {
            if arr.is_erased(r, c) {
                out.erase(r, c);
            } else {
                out.set(r, c, arr.get(r, c));
            }
        }
    }
    out
}

/// Re-extends every surviving column by systematic vertical encoding; columns
/// containing any erasure come out fully erased.
pub fn unpuncture(spec: &CodeSpec, arr: &CodeArray) -> Result<CodeArray> {
    parent_kind(spec)?;
    let rows = spec.array_rows();
    if arr.rows() != rows || arr.cols() != spec.array_cols() {
        return Err(Error::BadShape(format!(
            "expected {}x{} punctured array, got {}x{}",
            rows,
            spec.array_cols(),
            arr.rows(),
            arr.cols()
        )));
    }
    let mut out = CodeArray::zero(spec.p(), arr.cols());
    for c in 0..arr.cols() {
        if (0..rows).any(|r| arr.is_erased(r, c)) {
            out.erase_column(c);
            continue;
        }
        let data: Vec<u8> = (0..rows).map(|r| arr.get(r, c)).collect();
        let full = spec.vertical().encode(&data)?;
        out.set_column(c, &full)?;
    }
    Ok(out)
}

/// Recovers up to r erased columns of a punctured array in place.
pub fn decode_columns(spec: &CodeSpec, arr: &mut CodeArray) -> Result<()> {
    let parent = spec.as_kind(parent_kind(spec)?)?;
    let mut full = unpuncture(spec, arr)?;
    match parent.kind() {
        CodeKind::Ebr => ebr::decode_columns(&parent, &mut full)?,
        CodeKind::Eip => {
            eip::decode(&parent, &mut full)?;
        }
        _ => unreachable!(),
    }
    *arr = take_rows(&full, spec.array_rows());
    Ok(())
}

/// Recovers erased lines of one slope in a punctured g = 1 array: the deleted
/// rows are treated as erasures of the parent array, which the mapped-column
/// repair clears one symbol per column.
///
/// Slope 0 is refused: the deleted rows are themselves unknown rows, so r
/// erased rows of the punctured array would overrun the column budget after
/// mapping. Recovery holds for slopes 1..r-1 and for columns.
pub fn recover_lines(spec: &CodeSpec, arr: &mut CodeArray, lines: &[LineId]) -> Result<()> {
    if spec.kind() != CodeKind::Pebr {
        return Err(Error::BadShape(format!(
            "punctured line recovery applies to PEBR codes, spec is {}",
            spec.label()
        )));
    }
    if lines.iter().any(|l| l.slope == geometry::Slope::Finite(0)) {
        return Err(Error::UnsupportedRegime {
            r: spec.r(),
            slope: "0".into(),
        });
    }
    let parent = spec.as_kind(CodeKind::Ebr)?;
    let p = spec.p();
    let rows = spec.array_rows();
    let mut full = CodeArray::zero(p, p);
    for r in 0..rows {
        for c in 0..p {
            if arr.is_erased(r, c) {
                full.erase(r, c);
            } else {
                full.set(r, c, arr.get(r, c));
            }
        }
    }
    for r in rows..p {
        for c in 0..p {
            full.erase(r, c);
        }
    }
    geometry::recover_lines(&parent, &mut full, lines)?;
    *arr = take_rows(&full, rows);
    Ok(())
}

/// Which power sequence of the primitive element must vanish on codeword
/// polynomials for the equivalence check.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RootOrder {
    /// Roots 1, beta^-1, ..., beta^-(r-1).
    InversePowers,
    /// Roots 1, beta, ..., beta^(r-1).
    DirectPowers,
}

/// Checks, exhaustively over all codewords, that PEBR(7,r,2,1+x+x^3) with the
/// given row permutation reads as a Reed-Solomon code over GF(8): each 3-bit
/// column becomes one symbol (row i carries the beta^i coordinate) and the
/// resulting polynomial must vanish at r consecutive powers of beta starting
/// from 1.
///
/// `row_perm[i]` names the source row placed at row i.
pub fn rs_equivalence_check(
    r: usize,
    row_perm: &[usize],
    prim_poly: u16,
    roots: RootOrder,
) -> Result<bool> {
    let p = 7usize;
    let spec = CodeSpec::new(CodeKind::Ebr, p, r, Field::gf2(), &[1, 1, 0, 1])?;
    let rows = p - spec.vertical().t() - 1;
    if row_perm.len() != rows {
        return Err(Error::BadParameters(format!(
            "row permutation must have length {rows}"
        )));
    }
    let mut seen = vec![false; rows];
    for &i in row_perm {
        if i >= rows || seen[i] {
            return Err(Error::BadParameters("not a permutation of the rows".into()));
        }
        seen[i] = true;
    }
    let gf8 = Field::new(3, prim_poly)?;
    let mut eval_points = vec![1u8];
    for i in 1..r {
        let e = match roots {
            RootOrder::InversePowers => (7 - i % 7) % 7,
            RootOrder::DirectPowers => i % 7,
        };
        eval_points.push(gf8.exp(e));
    }

    // walk all 2^((p-r) * rows) codewords through the data space
    let k_bits = (p - r) * rows;
    let mut data = CodeArray::zero(rows, p - r);
    for word in 0..(1u32 << k_bits) {
        for bit in 0..k_bits {
            let v = ((word >> bit) & 1) as u8;
            data.set(bit % rows, bit / rows, v);
        }
        let full = ebr::encode(&spec, &data)?;
        let punctured = take_rows(&full, rows);
        // pack permuted columns into GF(8) symbols
        let mut symbols = vec![0u8; p];
        for (c, sym) in symbols.iter_mut().enumerate() {
            for (i, &src) in row_perm.iter().enumerate() {
                if punctured.get(src, c) != 0 {
                    *sym |= 1 << i;
                }
            }
        }
        for &x in &eval_points {
            // Horner evaluation of f(X) = sum symbols[v] X^v
            let mut acc = 0u8;
            for &s in symbols.iter().rev() {
                acc = gf8.mul(acc, x) ^ s;
            }
            if acc != 0 {
                return Ok(false);
            }
        }
    }
    Ok(true)
}
