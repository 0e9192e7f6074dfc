//! Code parameters shared by every family: the prime p, the global parity
//! count r, the base field and the vertical column code.

use std::sync::{Arc, OnceLock};

use crate::gf::Field;
use crate::vcode::CyclicCode;
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CodeKind {
    /// p x p, even parity on lines of slope 0..r-1, columns in the vertical code.
    Ebr,
    /// p x (p+r), r independent parity columns, columns in the vertical code.
    Eip,
    /// EBR with the trailing t+1 rows deleted: (p-t-1) x p.
    Pebr,
    /// EIP with the trailing t+1 rows deleted: (p-t-1) x (p+r).
    Peip,
    /// (p-1) x p slope-parity array topped up with a vertical XOR row: p x p.
    Brvp,
}

impl CodeKind {
    pub fn as_str(&self) -> &'static str {
        match self {
            CodeKind::Ebr => "EBR",
            CodeKind::Eip => "EIP",
            CodeKind::Pebr => "PEBR",
            CodeKind::Peip => "PEIP",
            CodeKind::Brvp => "BRVP",
        }
    }

    pub fn is_punctured(&self) -> bool {
        matches!(self, CodeKind::Pebr | CodeKind::Peip)
    }

    pub fn has_independent_parities(&self) -> bool {
        matches!(self, CodeKind::Eip | CodeKind::Peip)
    }
}

/// Column-MDS verdict for a code.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mds {
    Yes,
    No,
    Unknown,
}

#[derive(Debug, Clone)]
pub struct CodeSpec {
    kind: CodeKind,
    p: usize,
    r: usize,
    vertical: CyclicCode,
    parity_cols: Vec<usize>,
    mds_cache: Arc<OnceLock<Mds>>,
}

impl CodeSpec {
    pub fn new(kind: CodeKind, p: usize, r: usize, field: Field, g: &[u8]) -> Result<Self> {
        let vertical = CyclicCode::new(p, field, g)?;
        Self::with_vertical(kind, r, vertical)
    }

    pub fn with_vertical(kind: CodeKind, r: usize, vertical: CyclicCode) -> Result<Self> {
        let p = vertical.p();
        if r < 1 || r > p - 1 {
            return Err(Error::BadParameters(format!(
                "parity count must satisfy 1 <= r <= p-1, got r = {r}, p = {p}"
            )));
        }
        if kind == CodeKind::Brvp && vertical.g() != [1] {
            return Err(Error::BadParameters(
                "the vertical-parity comparison construction requires g = 1".into(),
            ));
        }
        let parity_cols = match kind {
            CodeKind::Eip | CodeKind::Peip => (p..p + r).collect(),
            _ => (p - r..p).collect(),
        };
        Ok(CodeSpec {
            kind,
            p,
            r,
            vertical,
            parity_cols,
            mds_cache: Arc::new(OnceLock::new()),
        })
    }

    /// Convenience constructor for the all-binary configuration with g = 1.
    pub fn binary_simple(kind: CodeKind, p: usize, r: usize) -> Result<Self> {
        CodeSpec::new(kind, p, r, Field::gf2(), &[1])
    }

    pub fn kind(&self) -> CodeKind {
        self.kind
    }

    pub fn p(&self) -> usize {
        self.p
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn field(&self) -> &Field {
        self.vertical.field()
    }

    pub fn vertical(&self) -> &CyclicCode {
        &self.vertical
    }

    /// Data symbols per column of the full (unpunctured) array.
    pub fn k_local(&self) -> usize {
        self.vertical.k_local()
    }

    /// Rows of a stored array for this kind.
    pub fn array_rows(&self) -> usize {
        if self.kind.is_punctured() {
            self.p - self.vertical.t() - 1
        } else {
            self.p
        }
    }

    /// Columns of a stored array for this kind.
    pub fn array_cols(&self) -> usize {
        match self.kind {
            CodeKind::Eip | CodeKind::Peip => self.p + self.r,
            _ => self.p,
        }
    }

    /// Number of data columns.
    pub fn data_cols(&self) -> usize {
        match self.kind {
            CodeKind::Eip | CodeKind::Peip => self.p,
            _ => self.p - self.r,
        }
    }

    pub fn parity_cols(&self) -> &[usize] {
        &self.parity_cols
    }

    pub fn is_parity_col(&self, c: usize) -> bool {
        self.parity_cols.contains(&c)
    }

    /// The same parameters re-targeted at another kind.
    pub fn as_kind(&self, kind: CodeKind) -> Result<CodeSpec> {
        CodeSpec::with_vertical(kind, self.r, self.vertical.clone())
    }

    /// Column-MDS status. EBR-family codes are MDS outright; independent-parity
    /// codes are MDS for r <= 3, and for larger r the verdict is established by
    /// the exhaustive rank check when the size permits.
    pub fn mds_on_columns(&self) -> Mds {
        match self.kind {
            CodeKind::Ebr | CodeKind::Pebr | CodeKind::Brvp => Mds::Yes,
            CodeKind::Eip | CodeKind::Peip => {
                if self.r <= 3 {
                    return Mds::Yes;
                }
                if self.p > 13 {
                    return Mds::Unknown;
                }
                *self.mds_cache.get_or_init(|| {
                    match crate::analysis::mds_columns_check(self) {
                        Ok(true) => Mds::Yes,
                        Ok(false) => Mds::No,
                        Err(_) => Mds::Unknown,
                    }
                })
            }
        }
    }

    /// Human-readable tag like `EBR(7,3,2,g=1+x+x^3)`, used in reports.
    pub fn label(&self) -> String {
        format!(
            "{}({},{},{},g={})",
            self.kind.as_str(),
            self.p,
            self.r,
            self.field().order(),
            poly_string(self.vertical.g())
        )
    }
}

/// Renders a polynomial over GF(q) with x as the indeterminate.
pub fn poly_string(coeffs: &[u8]) -> String {
    let mut parts = Vec::new();
    for (i, &c) in coeffs.iter().enumerate() {
        if c == 0 {
            continue;
        }
        let var = match i {
            0 => String::new(),
            1 => "x".into(),
            _ => format!("x^{i}"),
        };
        let part = match (c, i) {
            (_, 0) => format!("{c}"),
            (1, _) => var,
            _ => format!("{c}{var}"),
        };
        parts.push(part);
    }
    if parts.is_empty() {
        "0".into()
    } else {
        parts.join("+")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shapes_per_kind() {
        let ebr = CodeSpec::binary_simple(CodeKind::Ebr, 7, 3).unwrap();
        assert_eq!((ebr.array_rows(), ebr.array_cols()), (7, 7));
        assert_eq!(ebr.data_cols(), 4);
        assert_eq!(ebr.parity_cols(), &[4, 5, 6]);

        let eip = CodeSpec::new(CodeKind::Eip, 7, 3, Field::gf2(), &[1, 1, 0, 1]).unwrap();
        assert_eq!((eip.array_rows(), eip.array_cols()), (7, 10));
        assert_eq!(eip.parity_cols(), &[7, 8, 9]);

        let pebr = CodeSpec::new(CodeKind::Pebr, 7, 3, Field::gf2(), &[1, 1, 0, 1]).unwrap();
        assert_eq!((pebr.array_rows(), pebr.array_cols()), (3, 7));

        assert!(CodeSpec::binary_simple(CodeKind::Ebr, 7, 0).is_err());
        assert!(CodeSpec::binary_simple(CodeKind::Ebr, 7, 7).is_err());
        assert!(CodeSpec::new(CodeKind::Brvp, 7, 3, Field::gf2(), &[1, 1, 0, 1]).is_err());
    }

    #[test]
    fn codec_types_are_shareable() {
        fn assert_sync_send<T: Sync + Send>() {}
        assert_sync_send::<Field>();
        assert_sync_send::<CyclicCode>();
        assert_sync_send::<CodeSpec>();
        assert_sync_send::<crate::CodeArray>();
        assert_sync_send::<crate::RingElem>();
    }

    #[test]
    fn labels() {
        let s = CodeSpec::new(CodeKind::Ebr, 7, 3, Field::gf2(), &[1, 1, 0, 1]).unwrap();
        assert_eq!(s.label(), "EBR(7,3,2,g=1+x+x^3)");
        assert_eq!(poly_string(&[1]), "1");
        assert_eq!(poly_string(&[2, 1]), "2+x");
    }
}
