//! Lines of slope i in p x p arrays, invertible affine index maps, and
//! recovery of erased lines in EBR(p,r,q,1) codes.
//!
//! A line of slope i through row anchor u0 is the cell set
//! `{(<u0 - iv>, v) : 0 <= v < p}`; slope infinity means a column. For the
//! supported regimes an index map turns erased lines of one slope into erased
//! columns while keeping the array inside the code, so the column decoder
//! does the heavy lifting and the map is then undone.

use crate::array::CodeArray;
use crate::code::{CodeKind, CodeSpec};
use crate::ebr;
use crate::ring::{modinv, modp};
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Slope {
    Finite(usize),
    Infinite,
}

impl std::fmt::Display for Slope {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Slope::Finite(s) => write!(f, "{s}"),
            Slope::Infinite => write!(f, "inf"),
        }
    }
}

/// One line of a p x p array: a slope and its anchor (start row for finite
/// slopes, column index for slope infinity).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LineId {
    pub slope: Slope,
    pub anchor: usize,
}

impl LineId {
    pub fn new(slope: Slope, anchor: usize) -> Self {
        LineId { slope, anchor }
    }
}

/// The p cells of a line.
pub fn line_cells(line: LineId, p: usize) -> Vec<(usize, usize)> {
    match line.slope {
        Slope::Infinite => (0..p).map(|u| (u, line.anchor % p)).collect(),
        Slope::Finite(i) => (0..p)
            .map(|v| (modp(line.anchor as i64 - (i as i64) * (v as i64), p), v))
            .collect(),
    }
}

/// Invertible index transform: the remapped array b satisfies
/// `b[u][v] = source[<a u + b v>][<c u + e v>]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct IndexMap {
    pub p: usize,
    pub a: usize,
    pub b: usize,
    pub c: usize,
    pub e: usize,
}

impl IndexMap {
    pub fn new(p: usize, a: i64, b: i64, c: i64, e: i64) -> Result<Self> {
        let m = IndexMap {
            p,
            a: modp(a, p),
            b: modp(b, p),
            c: modp(c, p),
            e: modp(e, p),
        };
        if m.det() == 0 {
            return Err(Error::SingularMap);
        }
        Ok(m)
    }

    pub fn identity(p: usize) -> Self {
        IndexMap { p, a: 1, b: 0, c: 0, e: 1 }
    }

    pub fn det(&self) -> usize {
        modp(
            (self.a * self.e) as i64 - (self.b * self.c) as i64,
            self.p,
        )
    }

    #[inline]
    pub fn apply(&self, u: usize, v: usize) -> (usize, usize) {
        (
            (self.a * u + self.b * v) % self.p,
            (self.c * u + self.e * v) % self.p,
        )
    }

    /// The matrix inverse mod p.
    pub fn inverse(&self) -> IndexMap {
        let p = self.p;
        debug_assert_ne!(self.det(), 0, "inverting a singular map");
        let dinv = modinv(self.det(), p);
        IndexMap {
            p,
            a: self.e * dinv % p,
            b: modp(-((self.b * dinv) as i64), p),
            c: modp(-((self.c * dinv) as i64), p),
            e: self.a * dinv % p,
        }
    }
}

/// Remaps symbols and erasure flags: `out[u][v] = arr[map(u, v)]`.
pub fn apply_map(arr: &CodeArray, map: &IndexMap) -> Result<CodeArray> {
    let p = map.p;
    if arr.rows() != p || arr.cols() != p {
        return Err(Error::BadShape(format!(
            "index maps act on {p}x{p} arrays, got {}x{}",
            arr.rows(),
            arr.cols()
        )));
    }
    if map.det() == 0 {
        return Err(Error::SingularMap);
    }
    let mut out = CodeArray::zero(p, p);
    for u in 0..p {
        for v in 0..p {
            let (su, sv) = map.apply(u, v);
            if arr.is_erased(su, sv) {
                out.erase(u, v);
            } else {
                out.set(u, v, arr.get(su, sv));
            }
        }
    }
    Ok(out)
}

/// The slope, in the remapped array, of the image of a slope-s line of the
/// source array. Computed symbolically from the map coefficients.
pub fn slope_image(map: &IndexMap, slope: Slope) -> Slope {
    let p = map.p;
    match slope {
        Slope::Finite(s) => {
            // cells (u, v) of the image satisfy (a + sc) u + (b + se) v = const
            let ru = (map.a + s * map.c) % p;
            let rv = (map.b + s * map.e) % p;
            if ru == 0 {
                Slope::Infinite
            } else {
                Slope::Finite(rv * modinv(ru, p) % p)
            }
        }
        Slope::Infinite => {
            // cells satisfy c u + e v = const
            if map.c == 0 {
                Slope::Infinite
            } else {
                Slope::Finite(map.e * modinv(map.c, p) % p)
            }
        }
    }
}

/// Picks the transform that carries erased slope-j lines onto columns for a
/// regime where recovery is proven: any r for rows/columns handled by r <= 3
/// tables, and the parametric maps for r = p-2 and r = p-1.
pub fn map_for(p: usize, r: usize, slope: Slope) -> Result<IndexMap> {
    let j = match slope {
        Slope::Infinite => return Ok(IndexMap::identity(p)),
        Slope::Finite(j) => j,
    };
    if j >= r {
        return Err(Error::UnsupportedRegime {
            r,
            slope: slope.to_string(),
        });
    }
    let map = match (r, j) {
        (1, 0) | (2, 0) => IndexMap::new(p, 0, 1, 1, 0)?,
        (2, 1) => IndexMap::new(p, -1, 0, 1, 1)?,
        (3, 0) => IndexMap::new(p, 0, 2, 1, 0)?,
        (3, 1) => IndexMap::new(p, -1, 0, 1, 1)?,
        (3, 2) => IndexMap::new(p, -2, -2, 1, 2)?,
        _ if r == p - 2 => {
            // j <= r-1 = p-3 keeps the determinant -(j+1)(j+2) nonzero
            IndexMap::new(p, -(j as i64), 3 * j as i64 + 2, 1, j as i64)?
        }
        _ if r == p - 1 => IndexMap::new(p, -(j as i64), j as i64 + 1, 1, 0)?,
        _ => {
            return Err(Error::UnsupportedRegime {
                r,
                slope: slope.to_string(),
            })
        }
    };
    debug_assert_eq!(slope_image(&map, slope), Slope::Infinite);
    Ok(map)
}

/// The constrained slopes of EBR(p,r,q,1): infinity plus 0..r-1.
fn constrained_slopes(r: usize) -> Vec<Slope> {
    let mut v = vec![Slope::Infinite];
    v.extend((0..r).map(Slope::Finite));
    v
}

/// Checks that the map permutes the constrained slope set, which is exactly
/// the condition for the remapped array to stay inside the code.
pub fn preserves_membership(map: &IndexMap, r: usize) -> bool {
    let cons = constrained_slopes(r);
    let images: Vec<Slope> = cons.iter().map(|&s| slope_image(map, s)).collect();
    cons.iter().all(|s| images.contains(s))
}

/// Recovers up to r erased lines of one common slope in an EBR(p,r,q,1)
/// array (slope infinity works for any g): the lines are erased, the array is
/// remapped so they become columns, repaired there, and mapped back.
///
/// Erasures already present in `arr` are carried through the map and must be
/// locally repairable on the far side; this is what the punctured-code path
/// relies on.
pub fn recover_lines(spec: &CodeSpec, arr: &mut CodeArray, lines: &[LineId]) -> Result<()> {
    if spec.kind() != CodeKind::Ebr {
        return Err(Error::BadShape(format!(
            "line recovery applies to EBR codes, spec is {}",
            spec.label()
        )));
    }
    let p = spec.p();
    let r = spec.r();
    let Some(first) = lines.first() else {
        return Ok(());
    };
    let slope = first.slope;
    if lines.iter().any(|l| l.slope != slope) {
        return Err(Error::BadParameters(
            "all erased lines must share one slope".into(),
        ));
    }
    let mut anchors: Vec<usize> = lines.iter().map(|l| l.anchor % p).collect();
    anchors.sort_unstable();
    anchors.dedup();
    if anchors.len() > r {
        return Err(Error::TooManyErasures {
            unit: "lines",
            got: anchors.len(),
            max: r,
        });
    }
    if slope != Slope::Infinite {
        if spec.vertical().g() != [1] {
            return Err(Error::BadParameters(
                "line recovery for finite slopes is supported for g = 1 only".into(),
            ));
        }
        let supported = r <= 3 || r == p - 2 || r == p - 1;
        if !supported {
            return Err(Error::UnsupportedRegime {
                r,
                slope: slope.to_string(),
            });
        }
    }
    let map = map_for(p, r, slope)?;
    if !preserves_membership(&map, r) {
        return Err(Error::UnsupportedRegime {
            r,
            slope: slope.to_string(),
        });
    }
    for &anchor in &anchors {
        for (u, v) in line_cells(LineId::new(slope, anchor), p) {
            arr.erase(u, v);
        }
    }
    let inv = map.inverse();
    let mut mapped = apply_map(arr, &map)?;
    ebr::repair(spec, &mut mapped)?;
    if !ebr::is_codeword(spec, &mapped) {
        return Err(Error::NotACodeword);
    }
    *arr = apply_map(&mapped, &inv)?;
    Ok(())
}
