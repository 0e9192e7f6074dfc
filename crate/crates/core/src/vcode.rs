//! The vertical cyclic code C(p, g(x)(1+x), q, d) constraining every column.
//!
//! Codewords are ring elements divisible by g(x)(1+x), where g divides
//! 1 + x^p and is coprime to 1 + x. Each column of an expanded array code is
//! one of these, which is what buys local (within-column) erasure repair.

use crate::gf::Field;
use crate::linalg::{solve, Mat, Solve};
use crate::ring::{RingElem, XorMeter};
use crate::{Error, Result};

/// Distance budget: exhaustive weight enumeration is attempted only when the
/// code dimension in bits stays at or below this.
pub const DISTANCE_ENUM_BITS: u32 = 24;

#[derive(Debug, Clone)]
pub struct CyclicCode {
    p: usize,
    field: Field,
    /// Coefficients of g(x), index = degree.
    g: Vec<u8>,
    /// Coefficients of the generator g(x)(1+x).
    gen: Vec<u8>,
    /// deg g.
    t: usize,
    /// Data symbols per column: p - t - 1.
    k_local: usize,
    /// Minimum distance in symbols.
    d: usize,
    /// (t+1) x p parity-check matrix, the null space of the generator matrix.
    h_local: Mat,
    /// (t+1) x k_local map from data symbols to the trailing parity symbols.
    parity_map: Mat,
    /// A minimum-weight nonzero codeword, kept from the distance search.
    min_word: Option<RingElem>,
}

impl CyclicCode {
    /// Builds the code from g(x) given as a coefficient slice (index = degree,
    /// trailing zeros allowed). The divisibility and coprimality conditions
    /// are checked. Minimum distance is enumerated when the dimension allows,
    /// otherwise use [`CyclicCode::with_distance`].
    pub fn new(p: usize, field: Field, g: &[u8]) -> Result<Self> {
        Self::build(p, field, g, None)
    }

    /// Same, but with a caller-supplied minimum distance for codes too large
    /// to enumerate.
    pub fn with_distance(p: usize, field: Field, g: &[u8], d: usize) -> Result<Self> {
        Self::build(p, field, g, Some(d))
    }

    fn build(p: usize, field: Field, g: &[u8], d_claim: Option<usize>) -> Result<Self> {
        if p < 3 || !is_prime(p) {
            return Err(Error::BadParameters(format!(
                "column length must be an odd prime, got {p}"
            )));
        }
        let g = trim(g);
        if g.is_empty() {
            return Err(Error::BadParameters("g(x) must be nonzero".into()));
        }
        let t = g.len() - 1;
        if t + 1 >= p {
            return Err(Error::BadParameters(format!(
                "deg g = {t} leaves no data symbols for p = {p}"
            )));
        }
        // gcd(g, 1+x) = 1 over GF(2^b) iff 1 is not a root of g
        let at_one = g.iter().fold(0u8, |acc, &c| acc ^ c);
        if at_one == 0 {
            return Err(Error::BadParameters(
                "g(x) must be coprime to 1 + x".into(),
            ));
        }
        // g must divide 1 + x^p
        let mut xp1 = vec![0u8; p + 1];
        xp1[0] = 1;
        xp1[p] = 1;
        if !poly_rem(&xp1, &g, &field).is_empty() {
            return Err(Error::BadParameters(
                "g(x) must divide 1 + x^p".into(),
            ));
        }
        // generator g(x)(1+x)
        let gen = poly_mul(&g, &[1, 1], &field);
        let k_local = p - t - 1;

        // Generator matrix rows x^i * gen, then H = its null space.
        let mut gmat = Mat::zero(k_local, p);
        for i in 0..k_local {
            for (dg, &c) in gen.iter().enumerate() {
                gmat.set(i, i + dg, c);
            }
        }
        let h_rows = gmat.clone().null_space(&field);
        debug_assert_eq!(h_rows.len(), t + 1);
        let h_local = Mat::from_rows(h_rows);

        // Systematic parity map: split H into data columns and the trailing
        // t+1 parity columns, then parity = Hp^-1 Hd data. The parity block
        // is invertible because positions k..p-1 form a burst of length t+1.
        let parity_map = {
            let mut hp = Mat::zero(t + 1, t + 1);
            let mut hd = Mat::zero(t + 1, k_local);
            for r in 0..t + 1 {
                for c in 0..k_local {
                    hd.set(r, c, h_local.at(r, c));
                }
                for c in 0..t + 1 {
                    hp.set(r, c, h_local.at(r, k_local + c));
                }
            }
            let hp_inv = invert(&hp, &field).ok_or_else(|| {
                Error::BadParameters("parity positions are not independent".into())
            })?;
            mat_mul(&hp_inv, &hd, &field)
        };

        let mut code = CyclicCode {
            p,
            field,
            g,
            gen,
            t,
            k_local,
            d: 0,
            h_local,
            parity_map,
            min_word: None,
        };
        match d_claim {
            Some(d) => {
                log::warn!(
                    "column code p={p}, g={:?}: taking minimum distance {d} on trust",
                    code.g
                );
                code.d = d;
            }
            None if code.g == [1] => {
                // generator 1 + x: the even-coefficient-sum code, distance 2
                code.d = 2;
                code.min_word = Some(RingElem::from_exponents(p, &[0, 1]));
            }
            None => {
                let bits = (code.k_local as u32) * code.field.bits();
                if bits > DISTANCE_ENUM_BITS {
                    return Err(Error::TooLarge {
                        what: format!("column-code distance search over {bits} bits"),
                        bound: 0,
                    });
                }
                let (d, w) = code.enumerate_distance();
                code.d = d;
                code.min_word = Some(w);
            }
        }
        Ok(code)
    }

    pub fn p(&self) -> usize {
        self.p
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn g(&self) -> &[u8] {
        &self.g
    }

    pub fn generator(&self) -> &[u8] {
        &self.gen
    }

    pub fn t(&self) -> usize {
        self.t
    }

    pub fn k_local(&self) -> usize {
        self.k_local
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn h_local(&self) -> &Mat {
        &self.h_local
    }

    /// A nonzero codeword of weight d, when the distance was enumerated.
    pub fn min_weight_codeword(&self) -> Option<&RingElem> {
        self.min_word.as_ref()
    }

    /// Systematic encoding: data occupies positions 0..k_local, the remainder
    /// fills the trailing t+1 parity positions. The meter counts one XOR per
    /// accumulated product term, which for g = 1 is exactly p - 2.
    #[allow(clippy::needless_range_loop)]
    pub fn encode_metered(&self, data: &[u8], meter: &mut XorMeter) -> Result<RingElem> {
        if data.len() != self.k_local {
            return Err(Error::LengthMismatch {
                expected: self.k_local,
                got: data.len(),
            });
        }
        let mut out = RingElem::zero(self.p);
        for (i, &v) in data.iter().enumerate() {
            out.set_coeff(i, v);
        }
        for r in 0..self.t + 1 {
            let mut acc = 0u8;
            let mut touched = 0u64;
            for c in 0..self.k_local {
                let h = self.parity_map.at(r, c);
                if h != 0 && data[c] != 0 {
                    acc ^= self.field.mul(h, data[c]);
                }
                if h != 0 {
                    touched += 1;
                }
            }
            meter.add(touched.saturating_sub(1));
            out.set_coeff(self.k_local + r, acc);
        }
        Ok(out)
    }

    pub fn encode(&self, data: &[u8]) -> Result<RingElem> {
        self.encode_metered(data, &mut XorMeter::new())
    }

    /// True iff v(x) is a multiple of the generator.
    pub fn is_codeword(&self, v: &RingElem) -> bool {
        if v.len() != self.p {
            return false;
        }
        self.h_local
            .data
            .chunks(self.p)
            .all(|row| dot(row, v.coeffs(), &self.field) == 0)
    }

    /// Completes a column with erased positions by eliminating the restricted
    /// parity-check system. Any d-1 erasures are recoverable, as is a single
    /// cyclically consecutive burst of up to t+1; other patterns succeed
    /// opportunistically when the restriction stays full rank.
    #[allow(clippy::needless_range_loop)]
    pub fn repair(&self, column: &RingElem, erased: &[bool]) -> Result<RingElem> {
        if column.len() != self.p || erased.len() != self.p {
            return Err(Error::LengthMismatch {
                expected: self.p,
                got: column.len().max(erased.len()),
            });
        }
        let positions: Vec<usize> = (0..self.p).filter(|&i| erased[i]).collect();
        if positions.is_empty() {
            return Ok(column.clone());
        }
        let rows = self.t + 1;
        let mut a = Mat::zero(rows, positions.len());
        let mut rhs = vec![0u8; rows];
        for r in 0..rows {
            for (ci, &pos) in positions.iter().enumerate() {
                a.set(r, ci, self.h_local.at(r, pos));
            }
            let mut s = 0u8;
            for i in 0..self.p {
                if !erased[i] {
                    s ^= self.field.mul(self.h_local.at(r, i), column.coeff(i));
                }
            }
            rhs[r] = s;
        }
        match solve(&a, &rhs, &self.field) {
            Solve::Unique(x) => {
                let mut out = column.clone();
                for (ci, &pos) in positions.iter().enumerate() {
                    out.set_coeff(pos, x[ci]);
                }
                Ok(out)
            }
            _ => Err(Error::Unrecoverable {
                erasures: positions.len(),
                capacity: self.d - 1,
            }),
        }
    }

    /// Exhaustive minimum symbol weight over all nonzero codewords.
    fn enumerate_distance(&self) -> (usize, RingElem) {
        let bits = self.k_local as u32 * self.field.bits();
        let mut best = usize::MAX;
        let mut best_word = RingElem::zero(self.p);
        // Gray-code walk over the GF(2)-span of the bit-level basis.
        let basis: Vec<RingElem> = (0..bits)
            .map(|bit| {
                let sym = bit as usize / self.field.bits() as usize;
                let plane = bit % self.field.bits();
                let mut data = vec![0u8; self.k_local];
                data[sym] = 1 << plane;
                self.encode(&data).expect("basis encode")
            })
            .collect();
        let mut cur = RingElem::zero(self.p);
        for step in 1u64..(1u64 << bits) {
            let g = step.trailing_zeros() as usize;
            cur.xor_assign(&basis[g], &mut XorMeter::new());
            let w = cur.weight();
            if w < best {
                best = w;
                best_word = cur.clone();
            }
        }
        (best, best_word)
    }
}

fn is_prime(n: usize) -> bool {
    if n < 2 {
        return false;
    }
    let mut f = 2;
    while f * f <= n {
        if n.is_multiple_of(f) {
            return false;
        }
        f += 1;
    }
    true
}

fn trim(p: &[u8]) -> Vec<u8> {
    let mut v = p.to_vec();
    while v.last() == Some(&0) {
        v.pop();
    }
    v
}

fn dot(a: &[u8], b: &[u8], f: &Field) -> u8 {
    a.iter()
        .zip(b.iter())
        .fold(0u8, |acc, (&x, &y)| acc ^ f.mul(x, y))
}

/// Polynomial product, coefficients in GF(q), index = degree.
pub fn poly_mul(a: &[u8], b: &[u8], f: &Field) -> Vec<u8> {
    let a = trim(a);
    let b = trim(b);
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u8; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] ^= f.mul(x, y);
        }
    }
    out
}

/// Remainder of a by m; the leading coefficient of m may be any nonzero element.
pub fn poly_rem(a: &[u8], m: &[u8], f: &Field) -> Vec<u8> {
    let m = trim(m);
    assert!(!m.is_empty(), "division by zero polynomial");
    let lead_inv = f.inv(*m.last().unwrap()).expect("nonzero leading coeff");
    let mut r = trim(a);
    while r.len() >= m.len() {
        let shift = r.len() - m.len();
        let factor = f.mul(*r.last().unwrap(), lead_inv);
        for (i, &c) in m.iter().enumerate() {
            r[shift + i] ^= f.mul(factor, c);
        }
        r = trim(&r);
    }
    r
}

fn invert(a: &Mat, f: &Field) -> Option<Mat> {
    let n = a.rows;
    assert_eq!(n, a.cols);
    let mut aug = Mat::zero(n, 2 * n);
    for r in 0..n {
        for c in 0..n {
            aug.set(r, c, a.at(r, c));
        }
        aug.set(r, n + r, 1);
    }
    let pivots = aug.echelon(f);
    if pivots.len() < n || pivots.iter().any(|&c| c >= n) {
        return None;
    }
    let mut out = Mat::zero(n, n);
    for r in 0..n {
        for c in 0..n {
            out.set(r, c, aug.at(r, n + c));
        }
    }
    Some(out)
}

fn mat_mul(a: &Mat, b: &Mat, f: &Field) -> Mat {
    assert_eq!(a.cols, b.rows);
    let mut out = Mat::zero(a.rows, b.cols);
    for r in 0..a.rows {
        for c in 0..b.cols {
            let mut acc = 0u8;
            for k in 0..a.cols {
                acc ^= f.mul(a.at(r, k), b.at(k, c));
            }
            out.set(r, c, acc);
        }
    }
    out
}
