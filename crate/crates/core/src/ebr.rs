//! EBR(p, r, q, g(x)) codec: whole-array encoding, erased-column decoding by
//! syndrome/locator elimination, mixed local+global repair, the
//! weight-preserving transform to classic (p-1) x p slope-parity arrays, and
//! the vertical-parity comparison construction built on top of it.

use crate::array::CodeArray;
use crate::code::{CodeKind, CodeSpec};
use crate::ring::{modp, mul_sparse, solve_chain, RingElem, SparsePoly, XorMeter};
use crate::{Error, Result};

/// One elimination step of the column decoder.
#[derive(Debug, Clone)]
pub struct DecodeStep {
    /// Column recovered in this step.
    pub column: usize,
    /// Locator coefficients g_0..g_{rho-1} built from the *other* erased columns.
    pub locator: Vec<SparsePoly>,
    /// XOR of g_j S_j before normalization.
    pub combined: RingElem,
    /// The recovered column value.
    pub recovered: RingElem,
}

/// Transcript of a column decode, recorded when requested.
#[derive(Debug, Clone, Default)]
pub struct DecodeTrace {
    /// Syndromes S_0..S_{rho-1} computed with erased columns as zero.
    pub initial_syndromes: Vec<RingElem>,
    pub steps: Vec<DecodeStep>,
}

/// Summary of a mixed repair pass.
#[derive(Debug, Clone, Default)]
pub struct RepairReport {
    /// (column, erasures fixed) pairs handled within the column.
    pub local: Vec<(usize, usize)>,
    /// Columns that needed the global decoder.
    pub global: Vec<usize>,
}

/// Locator polynomial G(x) = prod (x + alpha^{i_s}) as its coefficient list;
/// index = degree in x, entries are sparse ring elements.
pub fn locator_poly(p: usize, cols: &[usize]) -> Vec<SparsePoly> {
    let mut coeffs = vec![SparsePoly::one(p)];
    for &i in cols {
        let mut next = vec![SparsePoly::zero(p); coeffs.len() + 1];
        for (k, c) in coeffs.iter().enumerate() {
            next[k + 1] = next[k + 1].add(c);
            next[k] = next[k].add(&c.mul_alpha_pow(i));
        }
        coeffs = next;
    }
    coeffs
}

/// Column eliminator shared by the EBR and EIP decoders.
///
/// `erased` holds the alpha exponents of the erased columns (their indices in
/// 0..p) and `syndromes` the matching S_0..S_{rho-1}. Returns the recovered
/// column values aligned with `erased`.
pub(crate) fn solve_erased_columns(
    p: usize,
    spec: &CodeSpec,
    erased: &[usize],
    mut syndromes: Vec<RingElem>,
    meter: &mut XorMeter,
    mut trace: Option<&mut DecodeTrace>,
) -> Result<Vec<RingElem>> {
    let field = spec.field();
    let rho = erased.len();
    debug_assert_eq!(syndromes.len(), rho);
    if let Some(t) = trace.as_deref_mut() {
        t.initial_syndromes = syndromes.clone();
    }
    let mut out = Vec::with_capacity(rho);
    for step in 0..rho {
        let active = &erased[step..];
        let rho_s = active.len();
        let i0 = active[0];
        let locator = locator_poly(p, &active[1..]);
        let mut combined = RingElem::zero(p);
        for (j, g) in locator.iter().enumerate() {
            let term = mul_sparse(g, &syndromes[j], field, meter)?;
            combined.xor_assign(&term, meter);
        }
        // prod(alpha^{i0} + alpha^{i_s}) = alpha^{(rho_s-1) i0} prod(1 + alpha^{i_s - i0})
        let back = modp(-(((rho_s - 1) * i0) as i64), p);
        let normalized = combined.rotate(back);
        let exps: Vec<usize> = active[1..]
            .iter()
            .map(|&i| modp(i as i64 - i0 as i64, p))
            .collect();
        let value = solve_chain(&exps, &normalized, None, meter)?;
        for (j, syn) in syndromes.iter_mut().enumerate().take(rho_s.saturating_sub(1)) {
            let rot = value.rotate(j * i0 % p);
            syn.xor_assign(&rot, meter);
        }
        if let Some(t) = trace.as_deref_mut() {
            t.steps.push(DecodeStep {
                column: i0,
                locator,
                combined,
                recovered: value.clone(),
            });
        }
        out.push(value);
    }
    Ok(out)
}

fn expect_kind(spec: &CodeSpec, kind: CodeKind) -> Result<()> {
    if spec.kind() != kind {
        return Err(Error::BadShape(format!(
            "operation applies to {} codes, spec is {}",
            kind.as_str(),
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

/// Systematic encoding: the data block is k_local rows by p-r columns. Each
/// data column is encoded vertically and the parity columns are produced by
/// running the erased-column decoder on them, so the encoder is literally a
/// decode with the parity columns marked missing.
pub fn encode(spec: &CodeSpec, data: &CodeArray) -> Result<CodeArray> {
    expect_kind(spec, CodeKind::Ebr)?;
    if data.rows() != spec.k_local() || data.cols() != spec.data_cols() {
        return Err(Error::BadShape(format!(
            "expected {}x{} data block, got {}x{}",
            spec.k_local(),
            spec.data_cols(),
            data.rows(),
            data.cols()
        )));
    }
    let p = spec.p();
    let mut arr = CodeArray::zero(p, p);
    let data_cols: Vec<usize> = (0..p).filter(|c| !spec.is_parity_col(*c)).collect();
    for (di, &c) in data_cols.iter().enumerate() {
        let column: Vec<u8> = (0..spec.k_local()).map(|r| data.get(r, di)).collect();
        let encoded = spec.vertical().encode(&column)?;
        arr.set_column(c, &encoded)?;
    }
    for &c in spec.parity_cols() {
        arr.erase_column(c);
    }
    decode_columns(spec, &mut arr)?;
    debug_assert!(is_codeword(spec, &arr));
    Ok(arr)
}

/// Sum of the slope-j line through row anchor u0 (erased symbols count as zero).
pub(crate) fn line_sum(arr: &CodeArray, slope: usize, anchor: usize, p: usize) -> u8 {
    let mut acc = 0u8;
    for v in 0..p {
        let u = modp(anchor as i64 - (slope * v) as i64, p);
        acc ^= arr.get(u, v);
    }
    acc
}

/// Membership: every column in the vertical code and every line of slope
/// 0..r-1 of even parity. Arrays carrying erasures are not codewords.
pub fn is_codeword(spec: &CodeSpec, arr: &CodeArray) -> bool {
    if spec.kind() != CodeKind::Ebr || expect_shape(spec, arr).is_err() || arr.has_erasures() {
        return false;
    }
    let p = spec.p();
    for c in 0..p {
        if !spec.vertical().is_codeword(&arr.column(c)) {
            return false;
        }
    }
    for slope in 0..spec.r() {
        for anchor in 0..p {
            if line_sum(arr, slope, anchor, p) != 0 {
                return false;
            }
        }
    }
    true
}

/// Syndromes S_j = XOR_u alpha^{ju} c_u for j in 0..rho, skipping erased columns.
fn syndromes(spec: &CodeSpec, arr: &CodeArray, rho: usize) -> Vec<RingElem> {
    let p = spec.p();
    let mut out = Vec::with_capacity(rho);
    for j in 0..rho {
        let mut acc = RingElem::zero(p);
        for u in 0..p {
            if arr.is_erased(0, u) {
                continue;
            }
            let rot = arr.column(u).rotate(j * u % p);
            acc.xor_assign(&rot, &mut XorMeter::new());
        }
        out.push(acc);
    }
    out
}

/// Decodes up to r whole erased columns in place.
pub fn decode_columns(spec: &CodeSpec, arr: &mut CodeArray) -> Result<()> {
    decode_columns_traced(spec, arr).map(|_| ())
}

/// Same, returning the step-by-step transcript.
pub fn decode_columns_traced(spec: &CodeSpec, arr: &mut CodeArray) -> Result<DecodeTrace> {
    expect_kind(spec, CodeKind::Ebr)?;
    expect_shape(spec, arr)?;
    let erased = arr.fully_erased_columns();
    let partial = arr.columns_with_erasures();
    if partial != erased {
        return Err(Error::BadShape(
            "column decoder requires erasures to cover whole columns".into(),
        ));
    }
    if erased.len() > spec.r() {
        return Err(Error::TooManyErasures {
            unit: "columns",
            got: erased.len(),
            max: spec.r(),
        });
    }
    let mut trace = DecodeTrace::default();
    if erased.is_empty() {
        return Ok(trace);
    }
    let syn = syndromes(spec, arr, erased.len());
    let values = solve_erased_columns(
        spec.p(),
        spec,
        &erased,
        syn,
        &mut XorMeter::new(),
        Some(&mut trace),
    )?;
    for (&c, v) in erased.iter().zip(values.iter()) {
        arr.set_column(c, v)?;
    }
    Ok(trace)
}

/// Two-phase repair for arbitrary erasure patterns: first every column tries
/// to complete itself locally, then whatever is left is treated as whole
/// erased columns and handed to the global decoder.
pub fn repair(spec: &CodeSpec, arr: &mut CodeArray) -> Result<RepairReport> {
    expect_kind(spec, CodeKind::Ebr)?;
    expect_shape(spec, arr)?;
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
    report.global = arr.fully_erased_columns();
    decode_columns(spec, arr)?;
    Ok(report)
}

/// Per-column transform to the (p-1)-row representation: XOR the last symbol
/// into the others, then drop it.
pub(crate) fn drop_column(col: &RingElem) -> Vec<u8> {
    let p = col.len();
    let last = col.coeff(p - 1);
    (0..p - 1).map(|i| col.coeff(i) ^ last).collect()
}

/// Inverse of [`drop_column`]: the deleted symbol is the XOR of the short
/// column (valid because every vertical codeword has even coefficient sum).
pub(crate) fn lift_column(short: &[u8]) -> RingElem {
    let last = short.iter().fold(0u8, |acc, &v| acc ^ v);
    let mut coeffs: Vec<u8> = short.iter().map(|&v| v ^ last).collect();
    coeffs.push(last);
    RingElem::from_coeffs(coeffs)
}

/// True iff the (p-1) x p array, taken with an appended zero row, has even
/// parity on every line of slope 0..r-1.
pub fn is_br_array(spec: &CodeSpec, arr: &CodeArray) -> bool {
    let p = spec.p();
    if arr.rows() != p - 1 || arr.cols() != p || arr.has_erasures() {
        return false;
    }
    let mut full = CodeArray::zero(p, p);
    for r in 0..p - 1 {
        for c in 0..p {
            full.set(r, c, arr.get(r, c));
        }
    }
    for slope in 0..spec.r() {
        for anchor in 0..p {
            if line_sum(&full, slope, anchor, p) != 0 {
                return false;
            }
        }
    }
    true
}

/// Maps a member of EBR(p,r,q,1) to its (p-1) x p slope-parity array. The
/// transform preserves which columns are nonzero.
pub fn to_br(spec: &CodeSpec, arr: &CodeArray) -> Result<CodeArray> {
    require_unit_g(spec)?;
    if !is_codeword(spec, arr) {
        return Err(Error::NotACodeword);
    }
    let p = spec.p();
    let mut out = CodeArray::zero(p - 1, p);
    for c in 0..p {
        let short = drop_column(&arr.column(c));
        for (r, &v) in short.iter().enumerate() {
            out.set(r, c, v);
        }
    }
    debug_assert!(is_br_array(spec, &out));
    Ok(out)
}

/// Inverse of [`to_br`].
pub fn from_br(spec: &CodeSpec, arr: &CodeArray) -> Result<CodeArray> {
    require_unit_g(spec)?;
    if !is_br_array(spec, arr) {
        return Err(Error::NotACodeword);
    }
    let p = spec.p();
    let mut out = CodeArray::zero(p, p);
    for c in 0..p {
        let short: Vec<u8> = (0..p - 1).map(|r| arr.get(r, c)).collect();
        out.set_column(c, &lift_column(&short))?;
    }
    debug_assert!(is_codeword(spec, &out));
    Ok(out)
}

fn require_unit_g(spec: &CodeSpec) -> Result<()> {
    if spec.vertical().g() != [1] {
        return Err(Error::BadParameters(
            "the slope-parity transform applies to g = 1 codes only".into(),
        ));
    }
    Ok(())
}

/// Systematic encoder for the comparison construction: the first p-1 rows
/// form a slope-parity array holding the data block in its first p-r
/// columns, and the last row is the XOR of the rows above.
pub fn brvp_encode(spec: &CodeSpec, data: &CodeArray) -> Result<CodeArray> {
    expect_kind(spec, CodeKind::Brvp)?;
    let p = spec.p();
    if data.rows() != p - 1 || data.cols() != spec.data_cols() {
        return Err(Error::BadShape(format!(
            "expected {}x{} data block, got {}x{}",
            p - 1,
            spec.data_cols(),
            data.rows(),
            data.cols()
        )));
    }
    // Lift the known short columns into the g = 1 expanded code, decode the
    // missing parity columns there, and drop back.
    let ebr_spec = spec.as_kind(CodeKind::Ebr)?;
    let mut arr = CodeArray::zero(p, p);
    let data_cols: Vec<usize> = (0..p).filter(|c| !spec.is_parity_col(*c)).collect();
    for (di, &c) in data_cols.iter().enumerate() {
        let short: Vec<u8> = (0..p - 1).map(|r| data.get(r, di)).collect();
        arr.set_column(c, &lift_column(&short))?;
    }
    for &c in spec.parity_cols() {
        arr.erase_column(c);
    }
    decode_columns(&ebr_spec, &mut arr)?;
    let mut out = CodeArray::zero(p, p);
    for c in 0..p {
        let short = drop_column(&arr.column(c));
        let mut parity = 0u8;
        for (r, &v) in short.iter().enumerate() {
            out.set(r, c, v);
            parity ^= v;
        }
        out.set(p - 1, c, parity);
    }
    debug_assert!(brvp_check(spec, &out));
    Ok(out)
}

/// Membership for the comparison construction.
pub fn brvp_check(spec: &CodeSpec, arr: &CodeArray) -> bool {
    if spec.kind() != CodeKind::Brvp || expect_shape(spec, arr).is_err() || arr.has_erasures() {
        return false;
    }
    let p = spec.p();
    for c in 0..p {
        let col_xor = (0..p).fold(0u8, |acc, r| acc ^ arr.get(r, c));
        if col_xor != 0 {
            return false;
        }
    }
    let mut top = CodeArray::zero(p - 1, p);
    for r in 0..p - 1 {
        for c in 0..p {
            top.set(r, c, arr.get(r, c));
        }
    }
    is_br_array(spec, &top)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::code::CodeKind;
    use crate::gf::Field;
    use crate::golden;

    fn ebr7_hamming() -> CodeSpec {
        CodeSpec::new(CodeKind::Ebr, 7, 3, Field::gf2(), &[1, 1, 0, 1]).unwrap()
    }

    fn ebr5(r: usize) -> CodeSpec {
        CodeSpec::binary_simple(CodeKind::Ebr, 5, r).unwrap()
    }

    #[test]
    fn locator_vanishes_at_its_roots() {
        let p = 7;
        let cols = [3usize, 6];
        let locator = locator_poly(p, &cols);
        assert_eq!(locator.len(), 3);
        // g_0 = alpha^{3+6} = alpha^2, g_1 = alpha^3 + alpha^6, g_2 = 1
        assert_eq!(locator[0], SparsePoly::alpha_pow(p, 2));
        assert_eq!(locator[1], SparsePoly::from_terms(p, &[(3, 1), (6, 1)]));
        assert_eq!(locator[2], SparsePoly::one(p));
        for &root in &cols {
            let mut acc = SparsePoly::zero(p);
            for (j, g) in locator.iter().enumerate() {
                acc = acc.add(&g.mul_alpha_pow(root * j % p));
            }
            assert!(acc.is_zero(), "G(alpha^{root}) must vanish");
        }
    }

    #[test]
    fn golden_arrays_are_codewords() {
        let s7 = ebr7_hamming();
        assert!(is_codeword(&s7, &golden::ebr7_hamming_a()));
        assert!(is_codeword(&s7, &golden::ebr7_hamming_b()));
        assert!(is_codeword(&ebr5(3), &golden::ebr5_r3()));

        let f8 = Field::new(3, 0b1011).unwrap();
        let beta = f8.beta();
        let s8 = CodeSpec::new(CodeKind::Ebr, 7, 3, f8, &[beta, 1]).unwrap();
        assert!(is_codeword(&s8, &golden::ebr7_gf8()));

        // a single flipped bit breaks membership
        let mut broken = golden::ebr5_r3();
        broken.set(0, 0, broken.get(0, 0) ^ 1);
        assert!(!is_codeword(&ebr5(3), &broken));
    }

    #[test]
    fn encode_reproduces_golden_arrays() {
        let s7 = ebr7_hamming();
        let a = golden::ebr7_hamming_a();
        let mut data = CodeArray::zero(s7.k_local(), s7.data_cols());
        for r in 0..s7.k_local() {
            for c in 0..s7.data_cols() {
                data.set(r, c, a.get(r, c));
            }
        }
        assert_eq!(encode(&s7, &data).unwrap(), a);

        let s5 = ebr5(3);
        let e = golden::ebr5_r3();
        let mut data = CodeArray::zero(4, 2);
        for r in 0..4 {
            for c in 0..2 {
                data.set(r, c, e.get(r, c));
            }
        }
        assert_eq!(encode(&s5, &data).unwrap(), e);

        let zero = encode(&s5, &CodeArray::zero(4, 2)).unwrap();
        assert_eq!(zero, CodeArray::zero(5, 5));
    }

    #[test]
    fn decode_worked_scenario_with_trace() {
        let spec = ebr7_hamming();
        let mut arr = golden::ebr7_decode_scenario();
        let report = {
            // phase 1 by hand to check the intermediate state
            let mut work = arr.clone();
            let rep = repair(&spec, &mut work).unwrap();
            assert_eq!(work, golden::ebr7_hamming_a());
            rep
        };
        assert_eq!(report.global, vec![1, 3, 6]);
        assert_eq!(report.local.len(), 4);

        // after local repair the array matches the printed intermediate
        for c in [0usize, 2, 4, 5] {
            let mask = arr.column_erasures(c);
            let fixed = spec.vertical().repair(&arr.column(c), &mask).unwrap();
            arr.set_column(c, &fixed).unwrap();
        }
        assert_eq!(arr, golden::ebr7_decode_after_local());

        let trace = decode_columns_traced(&spec, &mut arr).unwrap();
        assert_eq!(arr, golden::ebr7_hamming_a());
        let s = &trace.initial_syndromes;
        assert_eq!(s[0], RingElem::from_exponents(7, &[0, 3, 5, 6]));
        assert_eq!(s[1], RingElem::from_exponents(7, &[1, 2, 3, 6]));
        assert_eq!(s[2], RingElem::from_exponents(7, &[0, 1, 4, 6]));
        assert_eq!(trace.steps[0].combined, RingElem::from_exponents(7, &[0, 1, 2, 5]));
        assert_eq!(trace.steps[0].recovered, RingElem::from_exponents(7, &[1, 2, 3, 6]));
        assert!(trace.steps[1].recovered.is_zero());
        assert_eq!(trace.steps[2].recovered, RingElem::from_exponents(7, &[0, 1, 2, 5]));
    }

    #[test]
    fn decode_rejects_bad_patterns() {
        let spec = ebr5(2);
        let word = CodeArray::zero(5, 5);
        let mut three = word.clone();
        for c in 0..3 {
            three.erase_column(c);
        }
        assert!(matches!(
            decode_columns(&spec, &mut three),
            Err(Error::TooManyErasures { .. })
        ));
        let mut scattered = word.clone();
        scattered.erase(2, 2);
        assert!(matches!(
            decode_columns(&spec, &mut scattered),
            Err(Error::BadShape(_))
        ));
        let mut untouched = word;
        decode_columns(&spec, &mut untouched).unwrap();
        assert_eq!(untouched, CodeArray::zero(5, 5));
    }

    #[test]
    fn repair_single_symbol_stays_local() {
        let spec = ebr5(2);
        let e = {
            let mut data = CodeArray::zero(4, 3);
            data.set(1, 2, 1);
            data.set(3, 0, 1);
            encode(&spec, &data).unwrap()
        };
        let mut arr = e.clone();
        arr.erase(2, 3);
        let report = repair(&spec, &mut arr).unwrap();
        assert_eq!(arr, e);
        assert_eq!(report.local, vec![(3, 1)]);
        assert!(report.global.is_empty());

        let mut over = e.clone();
        for c in 0..3 {
            over.erase_column(c);
        }
        assert!(matches!(
            repair(&spec, &mut over),
            Err(Error::TooManyErasures { .. })
        ));
    }

    #[test]
    fn exhaustive_roundtrip_p5() {
        // every codeword of EBR(5,r,2,1) for r = 3 (256 of them), every
        // erasure pattern of up to r whole columns
        let spec = ebr5(3);
        for bits in 0u32..256 {
            let mut data = CodeArray::zero(4, 2);
            for i in 0..8 {
                if bits & (1 << i) != 0 {
                    data.set(i as usize / 2, i as usize % 2, 1);
                }
            }
            let word = encode(&spec, &data).unwrap();
            for a in 0..5usize {
                for b in a..5 {
                    for c in b..5 {
                        let mut broken = word.clone();
                        for col in [a, b, c] {
                            broken.erase_column(col);
                        }
                        decode_columns(&spec, &mut broken).unwrap();
                        assert_eq!(broken, word);
                    }
                }
            }
        }
    }

    #[test]
    fn br_transform_golden_and_roundtrip() {
        let spec = ebr5(3);
        let arr = golden::ebr5_r3();
        let br = to_br(&spec, &arr).unwrap();
        assert_eq!(br, golden::br5_r3_image());
        assert_eq!(from_br(&spec, &br).unwrap(), arr);

        // zero maps to zero
        let z = CodeArray::zero(5, 5);
        assert_eq!(to_br(&spec, &z).unwrap(), CodeArray::zero(4, 5));

        // an independent slope-parity member lifts to a codeword
        let lifted = from_br(&spec, &golden::br5_r3()).unwrap();
        assert!(is_codeword(&spec, &lifted));
        assert_eq!(to_br(&spec, &lifted).unwrap(), golden::br5_r3());

        // non-members are refused
        let mut bad = golden::br5_r3();
        bad.set(0, 0, bad.get(0, 0) ^ 1);
        assert!(matches!(from_br(&spec, &bad), Err(Error::NotACodeword)));
        // the transform is defined for g = 1 only
        let s7 = ebr7_hamming();
        assert!(to_br(&s7, &golden::ebr7_hamming_a()).is_err());
    }

    #[test]
    fn brvp_golden_membership_and_encode() {
        let s3 = CodeSpec::binary_simple(CodeKind::Brvp, 7, 3).unwrap();
        assert!(brvp_check(&s3, &golden::brvp7_r3()));
        assert!(brvp_check(&s3, &CodeArray::zero(7, 7)));
        let s4 = CodeSpec::binary_simple(CodeKind::Brvp, 7, 4).unwrap();
        assert!(brvp_check(&s4, &golden::brvp7_r4_weight10()));

        // systematic encode round-trips the data region
        let mut data = CodeArray::zero(6, 4);
        data.set(0, 0, 1);
        data.set(4, 3, 1);
        data.set(2, 1, 1);
        let word = brvp_encode(&s3, &data).unwrap();
        assert!(brvp_check(&s3, &word));
        for r in 0..6 {
            for c in 0..4 {
                assert_eq!(word.get(r, c), data.get(r, c));
            }
        }
        // the two-diagonal ambiguity witness is a valid member for p = 5
        let s5 = CodeSpec::binary_simple(CodeKind::Brvp, 5, 2).unwrap();
        assert!(brvp_check(&s5, &golden::brvp5_ambiguity_witness()));
    }

    #[test]
    fn gf8_column_decode() {
        // three erased columns of the GF(8) member, exercising the chain
        // solver on non-binary symbols
        let f8 = Field::new(3, 0b1011).unwrap();
        let beta = f8.beta();
        let spec = CodeSpec::new(CodeKind::Ebr, 7, 3, f8, &[beta, 1]).unwrap();
        let word = golden::ebr7_gf8();
        for cols in [[0usize, 1, 2], [2, 4, 6], [0, 3, 5]] {
            let mut broken = word.clone();
            for &c in &cols {
                broken.erase_column(c);
            }
            decode_columns(&spec, &mut broken).unwrap();
            assert_eq!(broken, word, "{cols:?}");
        }
        // and mixed local/global repair over the field
        let mut broken = word.clone();
        broken.erase_column(5);
        broken.erase(0, 0);
        broken.erase(3, 0);
        repair(&spec, &mut broken).unwrap();
        assert_eq!(broken, word);
    }

    #[test]
    fn decoded_arrays_pass_membership() {
        let spec = ebr7_hamming();
        let mut arr = golden::ebr7_hamming_b();
        arr.erase_column(3);
        arr.erase_column(5);
        decode_columns(&spec, &mut arr).unwrap();
        assert!(is_codeword(&spec, &arr));
        assert_eq!(arr, golden::ebr7_hamming_b());
    }
}
