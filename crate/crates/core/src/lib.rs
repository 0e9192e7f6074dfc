//! Expanded array erasure codes over GF(2^b).
//!
//! Two families of p x n arrays are implemented, both built on a vertical
//! cyclic code C(p, g(x)(1+x), q, d) that constrains every column:
//!
//! * EBR(p, r, q, g(x)) — p x p arrays with even parity along every line of
//!   slope 0..r-1; MDS on columns, and for g = 1 also able to recover erased
//!   lines of several slopes.
//! * EIP(p, r, q, g(x)) — p x (p+r) arrays whose r parity columns are
//!   independent rotation-XOR aggregates, minimizing parity updates when a
//!   data symbol changes.
//!
//! The vertical code gives local repair: up to d - 1 erased symbols (or a
//! burst of up to deg g + 1) in one column are rebuilt from that column
//! alone. Classic (p-1) x n array codes with the same slope geometry are
//! reachable through weight-preserving per-column transforms, puncturing
//! drops the vertical parity rows to get shorter MDS arrays, and the
//! `analysis` module verifies distance/MDS/XOR-cost claims by exhaustive
//! search at small sizes.

pub mod analysis;
pub mod array;
pub mod code;
pub mod ebr;
pub mod eip;
pub mod geometry;
pub mod gf;
pub mod golden;
pub mod linalg;
pub mod punct;
pub mod ring;
pub mod vcode;

pub use array::CodeArray;
pub use code::{CodeKind, CodeSpec};
pub use gf::Field;
pub use ring::{RingElem, SparsePoly, XorMeter};
pub use vcode::CyclicCode;

/// Errors across the whole crate.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("polynomial {poly:#x} is not primitive of degree {b}")]
    NonPrimitivePolynomial { b: u32, poly: u16 },

    #[error("division by zero field element")]
    DivisionByZero,

    #[error("length mismatch: expected {expected}, got {got}")]
    LengthMismatch { expected: usize, got: usize },

    #[error("vector is not in the vertical code")]
    NotInCode,

    #[error("column not locally recoverable: {erasures} erasures exceed the {capacity} guaranteed")]
    Unrecoverable { erasures: usize, capacity: usize },

    #[error("array shape does not match the code: {0}")]
    BadShape(String),

    #[error("too many erasures: {got} erased {unit}, at most {max} recoverable")]
    TooManyErasures {
        unit: &'static str,
        got: usize,
        max: usize,
    },

    #[error("array is not a codeword")]
    NotACodeword,

    #[error("index map is singular mod p")]
    SingularMap,

    #[error("line recovery unproven for r = {r}, slope {slope}")]
    UnsupportedRegime { r: usize, slope: String },

    #[error("search space too large: {what} (certified lower bound {bound})")]
    TooLarge { what: String, bound: usize },

    #[error("bad parameters: {0}")]
    BadParameters(String),

    #[error("position out of range: ({row}, {col})")]
    OutOfRange { row: usize, col: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
