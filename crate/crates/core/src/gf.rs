//! Arithmetic in GF(2^b) for 1 <= b <= 8.
//!
//! Elements are stored one per byte as bit vectors over the polynomial basis
//! of the field's primitive polynomial. Addition is plain XOR; multiplication
//! and inversion go through log/antilog tables indexed by powers of the
//! generator `beta` (the class of `x`, which is primitive exactly when the
//! modulus polynomial is primitive).

use crate::{Error, Result};

/// Multiplication/inversion context for GF(2^b), `1 <= b <= 8`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Field {
    b: u32,
    prim_poly: u16,
    log: [u8; 256],
    antilog: [u8; 256],
}

impl Field {
    /// Builds the field tables from a primitive polynomial given as a bitmask
    /// (bit i = coefficient of x^i, so `0b1011` is `1 + x + x^3`).
    ///
    /// Primitivity is verified directly: the powers of `x` must cycle through
    /// all `2^b - 1` nonzero elements before returning to 1.
    pub fn new(b: u32, prim_poly: u16) -> Result<Self> {
        if !(1..=8).contains(&b) {
            return Err(Error::BadParameters(format!(
                "field width must be in 1..=8, got {b}"
            )));
        }
        let order = 1u32 << b;
        if prim_poly & (1 << b) == 0 || prim_poly >> b != 1 {
            return Err(Error::NonPrimitivePolynomial { b, poly: prim_poly });
        }
        let mut log = [0u8; 256];
        let mut antilog = [0u8; 256];
        // beta = x for b > 1; for b = 1 the only nonzero element is 1.
        let beta: u16 = if b == 1 { 1 } else { 2 };
        let mut elem: u16 = 1;
        for exp in 0..(order - 1) {
            if elem == 1 && exp != 0 {
                // cycle closed early: x is not primitive
                return Err(Error::NonPrimitivePolynomial { b, poly: prim_poly });
            }
            antilog[exp as usize] = elem as u8;
            log[elem as usize] = exp as u8;
            elem = mul_x(elem, beta, prim_poly, b);
        }
        if elem != 1 {
            return Err(Error::NonPrimitivePolynomial { b, poly: prim_poly });
        }
        Ok(Field {
            b,
            prim_poly,
            log,
            antilog,
        })
    }

    /// GF(2), the dominant configuration for XOR-only codes.
    pub fn gf2() -> Self {
        Field::new(1, 0b11).expect("1 + x is primitive over GF(2)")
    }

    pub fn bits(&self) -> u32 {
        self.b
    }

    pub fn prim_poly(&self) -> u16 {
        self.prim_poly
    }

    /// Number of elements, 2^b.
    pub fn order(&self) -> usize {
        1 << self.b
    }

    /// The generator element `beta = antilog[1]`.
    pub fn beta(&self) -> u8 {
        self.antilog[1 % (self.order() - 1).max(1)]
    }

    /// beta^exp, exponent taken mod 2^b - 1.
    pub fn exp(&self, e: usize) -> u8 {
        self.antilog[e % (self.order() - 1)]
    }

    /// Discrete logarithm of a nonzero element.
    pub fn log(&self, a: u8) -> Result<usize> {
        if a == 0 {
            return Err(Error::DivisionByZero);
        }
        Ok(self.log[a as usize] as usize)
    }

    pub fn mul(&self, a: u8, c: u8) -> u8 {
        if self.b == 1 {
            return a & c;
        }
        if a == 0 || c == 0 {
            return 0;
        }
        let s = self.log[a as usize] as usize + self.log[c as usize] as usize;
        self.antilog[s % (self.order() - 1)]
    }

    pub fn inv(&self, a: u8) -> Result<u8> {
        if a == 0 {
            return Err(Error::DivisionByZero);
        }
        if self.b == 1 {
            return Ok(1);
        }
        let e = self.log[a as usize] as usize;
        Ok(self.antilog[(self.order() - 1 - e) % (self.order() - 1)])
    }

    pub fn div(&self, a: u8, c: u8) -> Result<u8> {
        Ok(self.mul(a, self.inv(c)?))
    }

    /// a^n by repeated squaring; a^0 = 1.
    pub fn pow(&self, a: u8, n: usize) -> u8 {
        if n == 0 {
            return 1;
        }
        if a == 0 {
            return 0;
        }
        let e = self.log[a as usize] as usize * (n % (self.order() - 1));
        if self.b == 1 {
            return 1;
        }
        self.antilog[e % (self.order() - 1)]
    }
}

/// A conventional primitive polynomial for each supported width.
pub fn default_prim_poly(b: u32) -> Option<u16> {
    match b {
        1 => Some(0b11),
        2 => Some(0b111),
        3 => Some(0b1011),
        4 => Some(0b1_0011),
        5 => Some(0b10_0101),
        6 => Some(0b100_0011),
        7 => Some(0b1000_0011),
        8 => Some(0x11d),
        _ => None,
    }
}

/// One multiply-by-generator step with reduction by the modulus polynomial.
fn mul_x(elem: u16, beta: u16, prim_poly: u16, b: u32) -> u16 {
    if b == 1 {
        return elem & beta;
    }
    let mut v = elem << 1;
    if v & (1 << b) != 0 {
        v ^= prim_poly;
    }
    v & ((1 << b) - 1)
}

/// Carry-less polynomial product of two field elements followed by reduction,
/// used as an independent route to cross-check the table-driven multiply.
pub fn clmul_reduce(a: u8, c: u8, prim_poly: u16, b: u32) -> u8 {
    let mut acc: u32 = 0;
    for i in 0..8 {
        if a & (1 << i) != 0 {
            acc ^= (c as u32) << i;
        }
    }
    // reduce degree down to < b
    for d in (b..16).rev() {
        if acc & (1 << d) != 0 {
            acc ^= (prim_poly as u32) << (d - b);
        }
    }
    acc as u8
}
