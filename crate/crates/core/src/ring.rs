//! The ring R_p(q) of polynomials modulo 1 + x^p with coefficients in GF(q).
//!
//! The class of x is written `alpha`; since alpha^p = 1, multiplying a ring
//! element by alpha^s is a pure index rotation and costs no field arithmetic.
//! This module also hosts the recursion solver that inverts 1 + alpha^j on
//! the vertical code, the workhorse of every column decoder in the crate.

use crate::gf::Field;
use crate::vcode::CyclicCode;
use crate::{Error, Result};

/// Reduces an integer index into 0..p, tolerating negatives.
#[inline]
pub fn modp(x: i64, p: usize) -> usize {
    let m = x.rem_euclid(p as i64);
    m as usize
}

/// Multiplicative inverse mod an odd prime.
pub fn modinv(a: usize, p: usize) -> usize {
    // Fermat: a^(p-2) mod p
    let mut base = a % p;
    let mut e = p - 2;
    let mut acc = 1usize;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        e >>= 1;
    }
    acc
}

/// Tally of field-element XOR operations, the cost unit used throughout.
#[derive(Debug, Default, Clone, Copy, PartialEq, Eq)]
pub struct XorMeter(pub u64);

impl XorMeter {
    pub fn new() -> Self {
        XorMeter(0)
    }

    #[inline]
    pub fn add(&mut self, n: u64) {
        self.0 += n;
    }

    pub fn total(&self) -> u64 {
        self.0
    }
}

/// An element of R_p(q): coefficient i multiplies alpha^i.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RingElem {
    coeffs: Vec<u8>,
}

impl RingElem {
    pub fn zero(p: usize) -> Self {
        RingElem { coeffs: vec![0; p] }
    }

    pub fn from_coeffs(coeffs: Vec<u8>) -> Self {
        RingElem { coeffs }
    }

    /// Builds an element from its nonzero exponents, e.g. `[0, 3]` is 1 + alpha^3.
    pub fn from_exponents(p: usize, exps: &[usize]) -> Self {
        let mut coeffs = vec![0u8; p];
        for &e in exps {
            coeffs[e % p] ^= 1;
        }
        RingElem { coeffs }
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeffs(&self) -> &[u8] {
        &self.coeffs
    }

    #[inline]
    pub fn coeff(&self, i: usize) -> u8 {
        self.coeffs[i]
    }

    #[inline]
    pub fn set_coeff(&mut self, i: usize, v: u8) {
        self.coeffs[i] = v;
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    /// Number of nonzero coefficients.
    pub fn weight(&self) -> usize {
        self.coeffs.iter().filter(|&&c| c != 0).count()
    }

    /// alpha^s * self: coefficient i of the result is coefficient <i - s> of self.
    pub fn rotate(&self, s: usize) -> RingElem {
        let p = self.len();
        let s = s % p;
        if s == 0 {
            return self.clone();
        }
        let mut out = vec![0u8; p];
        for (i, slot) in out.iter_mut().enumerate() {
            *slot = self.coeffs[modp(i as i64 - s as i64, p)];
        }
        RingElem { coeffs: out }
    }

    /// XOR-accumulates `other`, metering one field XOR per coefficient.
    pub fn xor_assign(&mut self, other: &RingElem, meter: &mut XorMeter) {
        debug_assert_eq!(self.len(), other.len());
        for (a, b) in self.coeffs.iter_mut().zip(other.coeffs.iter()) {
            *a ^= *b;
        }
        meter.add(self.len() as u64);
    }

    /// Scales every coefficient by a field element.
    pub fn scale(&self, a: u8, f: &Field) -> RingElem {
        if a == 1 {
            return self.clone();
        }
        RingElem {
            coeffs: self.coeffs.iter().map(|&c| f.mul(a, c)).collect(),
        }
    }
}

/// A sparse element of R_p(q) written as a sum of scaled alpha powers.
///
/// Locator-polynomial coefficients live here: they are sums of products of
/// distinct alpha powers, so multiplying by one reduces to rotations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SparsePoly {
    p: usize,
    /// (exponent, nonzero coefficient), sorted by exponent.
    terms: Vec<(usize, u8)>,
}

impl SparsePoly {
    pub fn zero(p: usize) -> Self {
        SparsePoly { p, terms: Vec::new() }
    }

    pub fn one(p: usize) -> Self {
        SparsePoly {
            p,
            terms: vec![(0, 1)],
        }
    }

    /// alpha^e with unit coefficient.
    pub fn alpha_pow(p: usize, e: usize) -> Self {
        SparsePoly {
            p,
            terms: vec![(e % p, 1)],
        }
    }

    pub fn from_terms(p: usize, terms: &[(usize, u8)]) -> Self {
        let mut out = SparsePoly::zero(p);
        for &(e, c) in terms {
            out.add_term(e % p, c);
        }
        out
    }

    pub fn terms(&self) -> &[(usize, u8)] {
        &self.terms
    }

    pub fn modulus(&self) -> usize {
        self.p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn add_term(&mut self, e: usize, c: u8) {
        if c == 0 {
            return;
        }
        match self.terms.binary_search_by_key(&e, |t| t.0) {
            Ok(i) => {
                let v = self.terms[i].1 ^ c;
                if v == 0 {
                    self.terms.remove(i);
                } else {
                    self.terms[i].1 = v;
                }
            }
            Err(i) => self.terms.insert(i, (e, c)),
        }
    }

    /// Sum in R_p(q); coefficients at equal exponents XOR together.
    pub fn add(&self, other: &SparsePoly) -> SparsePoly {
        debug_assert_eq!(self.p, other.p);
        let mut out = self.clone();
        for &(e, c) in &other.terms {
            out.add_term(e, c);
        }
        out
    }

    /// Product with alpha^s: shifts every exponent.
    pub fn mul_alpha_pow(&self, s: usize) -> SparsePoly {
        let mut out = SparsePoly::zero(self.p);
        for &(e, c) in &self.terms {
            out.add_term((e + s) % self.p, c);
        }
        out
    }

    /// Scales all coefficients by a field element.
    pub fn scale(&self, a: u8, f: &Field) -> SparsePoly {
        let mut out = SparsePoly::zero(self.p);
        for &(e, c) in &self.terms {
            out.add_term(e, f.mul(a, c));
        }
        out
    }

    /// Expands the sparse element into a dense ring element.
    pub fn to_ring(&self) -> RingElem {
        let mut v = RingElem::zero(self.p);
        for &(e, c) in &self.terms {
            v.set_coeff(e, v.coeff(e) ^ c);
        }
        v
    }
}

/// g * v for a sparse g: a XOR of rotations of v, scaled where the sparse
/// coefficient is not 1. Coefficient-1 terms never touch field multiply.
pub fn mul_sparse(g: &SparsePoly, v: &RingElem, f: &Field, meter: &mut XorMeter) -> Result<RingElem> {
    if g.modulus() != v.len() {
        return Err(Error::LengthMismatch {
            expected: g.modulus(),
            got: v.len(),
        });
    }
    let mut acc: Option<RingElem> = None;
    for &(e, c) in g.terms() {
        let term = if c == 1 {
            v.rotate(e)
        } else {
            v.rotate(e).scale(c, f)
        };
        match acc.as_mut() {
            None => acc = Some(term),
            Some(a) => a.xor_assign(&term, meter),
        }
    }
    Ok(acc.unwrap_or_else(|| RingElem::zero(v.len())))
}

/// Solves (1 + alpha^j) z = v for the unique z in the vertical code.
///
/// z_0 is the XOR of v at the even multiples of j; the remaining entries
/// follow the chain `z_<ij> = z_<(i-1)j> + v_<ij>`. Costs exactly (3p-5)/2
/// field XORs, which the meter records.
///
/// When `membership` is given, v is first checked against the code and
/// `NotInCode` is returned on failure; decoder-internal calls pass `None`
/// because the syndrome algebra already guarantees membership.
pub fn solve_recursion(
    j: usize,
    v: &RingElem,
    membership: Option<&CyclicCode>,
    meter: &mut XorMeter,
) -> Result<RingElem> {
    let p = v.len();
    if p < 3 || p.is_multiple_of(2) {
        return Err(Error::BadParameters(format!(
            "ring length must be an odd prime >= 3, got {p}"
        )));
    }
    if j == 0 || j >= p {
        return Err(Error::BadParameters(format!(
            "shift exponent must satisfy 1 <= j <= p-1, got {j} (p = {p})"
        )));
    }
    if let Some(code) = membership {
        if !code.is_codeword(v) {
            return Err(Error::NotInCode);
        }
    }
    let mut z = RingElem::zero(p);
    // z_0 = XOR_{u=1..(p-1)/2} v_<2uj>
    let mut z0 = v.coeff(2 * j % p);
    for u in 2..=(p - 1) / 2 {
        z0 ^= v.coeff(2 * u * j % p);
        meter.add(1);
    }
    z.set_coeff(0, z0);
    let mut prev = z0;
    let mut idx = 0usize;
    for _ in 1..p {
        idx = (idx + j) % p;
        let cur = prev ^ v.coeff(idx);
        meter.add(1);
        z.set_coeff(idx, cur);
        prev = cur;
    }
    Ok(z)
}

/// Inverts a product of (1 + alpha^{j_k}) factors by chaining the recursion.
pub fn solve_chain(
    exponents: &[usize],
    v: &RingElem,
    membership: Option<&CyclicCode>,
    meter: &mut XorMeter,
) -> Result<RingElem> {
    let mut cur = v.clone();
    for &j in exponents {
        cur = solve_recursion(j, &cur, membership, meter)?;
    }
    Ok(cur)
}
