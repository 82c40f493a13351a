//! Dimension geometry of classical algebraic groups: group dimensions,
//! Coxeter numbers, and unipotent centralizer/class dimensions from Jordan
//! types, including class dimensions inside a split Levi subgroup.
//!
//! All values are exact integers. The symplectic/orthogonal centralizer
//! formulas involve halves; parity constraints on valid Jordan types make
//! them integral, and any non-integral intermediate is treated as a bug and
//! reported as an error rather than rounded.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::partitions::Partition;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GeomError {
    #[error("invalid group family parameter: {0}")]
    BadFamily(String),
    #[error("Jordan type {0} does not partition the natural dimension {1}")]
    SizeMismatch(String, u32),
    #[error("parity violation: {0}")]
    Parity(String),
    #[error("invalid Levi shape: {0}")]
    BadShape(String),
    #[error("Jordan type does not match Levi shape: {0}")]
    ShapeTypeMismatch(String),
}

/// A classical group family together with the dimension of its natural
/// module.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "family", content = "n")]
pub enum GroupFamily {
    /// GL_n, n >= 2.
    GL(u32),
    /// SL_n, n >= 2.
    SL(u32),
    /// Sp_{2r}, natural dimension 2r >= 4.
    Sp(u32),
    /// SO_{2r+1}, natural dimension 2r+1 >= 7.
    SOOdd(u32),
    /// SO_{2r}, natural dimension 2r >= 8 (type D_4 and up).
    SOEven(u32),
}

impl GroupFamily {
    pub fn validate(&self) -> Result<(), GeomError> {
        let bad = |msg: String| Err(GeomError::BadFamily(msg));
        match *self {
            GroupFamily::GL(n) | GroupFamily::SL(n) if n < 2 => bad(format!("GL/SL needs n >= 2, got {n}")),
            GroupFamily::Sp(n) if n % 2 != 0 || n < 4 => bad(format!("Sp needs even n >= 4, got {n}")),
            GroupFamily::SOOdd(n) if n % 2 != 1 || n < 7 => bad(format!("SO_odd needs odd n >= 7, got {n}")),
            GroupFamily::SOEven(n) if n % 2 != 0 || n < 8 => bad(format!("SO_even needs even n >= 8, got {n}")),
            _ => Ok(()),
        }
    }

    /// Dimension of the natural module.
    pub fn natural_dim(&self) -> u32 {
        match *self {
            GroupFamily::GL(n)
            | GroupFamily::SL(n)
            | GroupFamily::Sp(n)
            | GroupFamily::SOOdd(n)
            | GroupFamily::SOEven(n) => n,
        }
    }

    /// Semisimple rank.
    pub fn rank(&self) -> u32 {
        match *self {
            GroupFamily::GL(n) | GroupFamily::SL(n) => n - 1,
            GroupFamily::Sp(n) | GroupFamily::SOEven(n) => n / 2,
            GroupFamily::SOOdd(n) => (n - 1) / 2,
        }
    }

    /// Dimension as an algebraic group: n^2, n^2-1, 2r^2+r, 2r^2-r.
    pub fn dim_group(&self) -> u32 {
        match *self {
            GroupFamily::GL(n) => n * n,
            GroupFamily::SL(n) => n * n - 1,
            GroupFamily::Sp(n) => {
                let r = n / 2;
                2 * r * r + r
            }
            GroupFamily::SOOdd(n) => {
                let r = (n - 1) / 2;
                2 * r * r + r
            }
            GroupFamily::SOEven(n) => {
                let r = n / 2;
                2 * r * r - r
            }
        }
    }

    /// Coxeter number h = dim/rank - 1, computed on the simple group
    /// (SL_n for type A): n for A_{n-1}, 2r for B_r/C_r, 2r-2 for D_r.
    pub fn coxeter_number(&self) -> u32 {
        match *self {
            GroupFamily::GL(n) | GroupFamily::SL(n) => n,
            GroupFamily::Sp(n) => n,
            GroupFamily::SOOdd(n) => n - 1,
            GroupFamily::SOEven(n) => n - 2,
        }
    }
}

/// `sum_i i m_i^2 + 2 sum_{i<j} i m_i m_j`, the GL centralizer dimension of
/// a unipotent element with Jordan multiplicities `m_i`.
fn gl_cent_sum(p: &Partition) -> u32 {
    let m = p.multiplicities();
    let mut total = 0u32;
    for (&i, &mi) in &m {
        total += i * mi * mi;
        for (&j, &mj) in m.range((i + 1)..) {
            let _ = j;
            total += 2 * i * mi * mj;
        }
    }
    total
}

fn odd_multiplicity_sum(p: &Partition) -> u32 {
    p.multiplicities()
        .iter()
        .filter(|(i, _)| *i % 2 == 1)
        .map(|(_, m)| m)
        .sum()
}

fn even_parts_have_even_multiplicity(p: &Partition) -> bool {
    p.multiplicities()
        .iter()
        .all(|(&i, &m)| i % 2 == 1 || m % 2 == 0)
}

fn odd_parts_have_even_multiplicity(p: &Partition) -> bool {
    p.multiplicities()
        .iter()
        .all(|(&i, &m)| i % 2 == 0 || m % 2 == 0)
}

/// Dimension of the centralizer of a unipotent element of Jordan type `p`
/// in the group `f` (good characteristic).
///
/// GL/SL use `sum i m_i^2 + 2 sum_{i<j} i m_i m_j`; Sp adds `sum_{i odd} m_i`
/// before halving, SO subtracts it. The half-values are checked integral.
pub fn dim_cent_unipotent(f: GroupFamily, p: &Partition) -> Result<u32, GeomError> {
    if p.n() != f.natural_dim() {
        return Err(GeomError::SizeMismatch(p.to_string(), f.natural_dim()));
    }
    dim_cent_unipotent_unchecked(f, p)
}

/// Same as [`dim_cent_unipotent`] but without the natural-dimension guard,
/// for use on Levi factors of any size.
fn dim_cent_unipotent_unchecked(f: GroupFamily, p: &Partition) -> Result<u32, GeomError> {
    let g = gl_cent_sum(p);
    let s = odd_multiplicity_sum(p);
    match f {
        GroupFamily::GL(_) | GroupFamily::SL(_) => Ok(g),
        GroupFamily::Sp(_) => {
            if !odd_parts_have_even_multiplicity(p) {
                return Err(GeomError::Parity(format!(
                    "Sp Jordan type {p} has an odd block size with odd multiplicity"
                )));
            }
            let v = g + s;
            if v % 2 != 0 {
                return Err(GeomError::Parity(format!("non-integral Sp centralizer for {p}")));
            }
            Ok(v / 2)
        }
        GroupFamily::SOOdd(_) | GroupFamily::SOEven(_) => {
            if !even_parts_have_even_multiplicity(p) {
                return Err(GeomError::Parity(format!(
                    "SO Jordan type {p} has an even block size with odd multiplicity"
                )));
            }
            let v = g
                .checked_sub(s)
                .ok_or_else(|| GeomError::Parity(format!("negative SO centralizer for {p}")))?;
            if v % 2 != 0 {
                return Err(GeomError::Parity(format!("non-integral SO centralizer for {p}")));
            }
            Ok(v / 2)
        }
    }
}

/// Dimension of the conjugacy class of a unipotent element of Jordan type
/// `p` in `f`. For SL the class dimension equals the GL one.
pub fn dim_class(f: GroupFamily, p: &Partition) -> Result<u32, GeomError> {
    if p.n() != f.natural_dim() {
        return Err(GeomError::SizeMismatch(p.to_string(), f.natural_dim()));
    }
    dim_class_unchecked(f, p)
}

fn dim_class_unchecked(f: GroupFamily, p: &Partition) -> Result<u32, GeomError> {
    let cent = dim_cent_unipotent_unchecked(f, p)?;
    let n = p.n();
    let ambient = match f {
        // dim u^{SL} = dim u^{GL}: centralize in GL_n, subtract from n^2.
        GroupFamily::GL(_) | GroupFamily::SL(_) => n * n,
        GroupFamily::Sp(_) => {
            let r = n / 2;
            2 * r * r + r
        }
        GroupFamily::SOOdd(_) => {
            let r = (n - 1) / 2;
            2 * r * r + r
        }
        GroupFamily::SOEven(_) => {
            let r = n / 2;
            2 * r * r - r
        }
    };
    Ok(ambient - cent)
}

/// Class dimension of Jordan type `p` inside a classical factor of natural
/// dimension `p.n()` of the family of `f` (the factor may be smaller than
/// any valid ambient group; Sp_2, SO_2, SO_1 etc. are allowed here).
pub fn dim_class_in_factor(f: GroupFamily, p: &Partition) -> Result<u32, GeomError> {
    dim_class_unchecked(f, p)
}

/// A split Levi shape: GL factor sizes plus an optional residual classical
/// factor (given by its natural-module dimension; 0 when absent).
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct LeviShape {
    pub family: GroupFamily,
    pub gl_factors: Vec<u32>,
    pub classical_factor: u32,
}

impl LeviShape {
    pub fn new(family: GroupFamily, gl_factors: Vec<u32>, classical_factor: u32) -> Result<Self, GeomError> {
        family.validate()?;
        if gl_factors.iter().any(|&f| f == 0) {
            return Err(GeomError::BadShape("zero GL factor".into()));
        }
        let gl_sum: u32 = gl_factors.iter().sum();
        match family {
            GroupFamily::GL(n) | GroupFamily::SL(n) => {
                if classical_factor != 0 {
                    return Err(GeomError::BadShape(
                        "GL/SL ambient admits no classical factor".into(),
                    ));
                }
                if gl_sum != n {
                    return Err(GeomError::BadShape(format!(
                        "GL factor sizes sum to {gl_sum}, ambient needs {n}"
                    )));
                }
            }
            GroupFamily::Sp(n) | GroupFamily::SOOdd(n) | GroupFamily::SOEven(n) => {
                if 2 * gl_sum + classical_factor != n {
                    return Err(GeomError::BadShape(format!(
                        "2*{gl_sum} + {classical_factor} != ambient natural dimension {n}"
                    )));
                }
            }
        }
        Ok(LeviShape {
            family,
            gl_factors,
            classical_factor,
        })
    }

    /// True when the Levi is a maximal torus (all GL factors of size 1 and
    /// classical factor at most 1, or 2 in type D where SO_2 is a torus).
    pub fn is_torus(&self) -> bool {
        let classical_toral = match self.family {
            GroupFamily::GL(_) | GroupFamily::SL(_) => true,
            GroupFamily::Sp(_) => self.classical_factor == 0,
            GroupFamily::SOOdd(_) => self.classical_factor <= 1,
            GroupFamily::SOEven(_) => self.classical_factor <= 2,
        };
        self.gl_factors.iter().all(|&f| f == 1) && classical_toral
    }

    /// Dimension of the full (reductive) Levi: `sum n_i^2` plus the
    /// dimension of the classical factor.
    pub fn dim_levi(&self) -> u32 {
        let gl: u32 = self.gl_factors.iter().map(|&f| f * f).sum();
        let k = self.classical_factor;
        let classical = match self.family {
            GroupFamily::GL(_) | GroupFamily::SL(_) => 0,
            GroupFamily::Sp(_) => (k * k + k) / 2,
            GroupFamily::SOOdd(_) | GroupFamily::SOEven(_) => (k * k - k) / 2,
        };
        gl + classical
    }

    /// The classical factor viewed as its own group family (for class
    /// dimension formulas); None when absent or toral of dimension 0.
    fn classical_family(&self) -> Option<GroupFamily> {
        if self.classical_factor == 0 {
            return None;
        }
        Some(match self.family {
            GroupFamily::GL(_) | GroupFamily::SL(_) => unreachable!("validated"),
            GroupFamily::Sp(_) => GroupFamily::Sp(self.classical_factor),
            GroupFamily::SOOdd(_) => GroupFamily::SOOdd(self.classical_factor),
            GroupFamily::SOEven(_) => GroupFamily::SOEven(self.classical_factor),
        })
    }
}

/// A unipotent Jordan type of a Levi: one partition per GL factor, plus one
/// for the classical factor (empty when absent).
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct JordanType {
    pub gl: Vec<Partition>,
    pub classical: Partition,
}

impl JordanType {
    pub fn is_trivial(&self) -> bool {
        self.gl.iter().all(|p| p.is_trivial()) && self.classical.is_trivial()
    }

    fn validate(&self, shape: &LeviShape) -> Result<(), GeomError> {
        if self.gl.len() != shape.gl_factors.len() {
            return Err(GeomError::ShapeTypeMismatch(format!(
                "{} GL partitions for {} GL factors",
                self.gl.len(),
                shape.gl_factors.len()
            )));
        }
        for (p, &f) in self.gl.iter().zip(&shape.gl_factors) {
            if p.n() != f {
                return Err(GeomError::ShapeTypeMismatch(format!(
                    "partition {p} does not partition GL factor size {f}"
                )));
            }
        }
        if self.classical.n() != shape.classical_factor {
            return Err(GeomError::ShapeTypeMismatch(format!(
                "classical partition {} does not partition factor size {}",
                self.classical, shape.classical_factor
            )));
        }
        Ok(())
    }

    /// The Jordan type of the element viewed in the ambient group: inside
    /// Sp/SO each GL factor contributes its blocks twice, the classical
    /// factor contributes its blocks once; in a GL/SL ambient the blocks
    /// just merge.
    pub fn ambient_type(&self, shape: &LeviShape) -> Partition {
        let double = !matches!(shape.family, GroupFamily::GL(_) | GroupFamily::SL(_));
        let mut parts = Vec::new();
        for p in &self.gl {
            for &b in p.parts() {
                parts.push(b);
                if double {
                    parts.push(b);
                }
            }
        }
        parts.extend_from_slice(self.classical.parts());
        Partition::from_unsorted(parts)
    }
}

/// Class dimension of a Levi unipotent element inside the Levi and inside
/// the ambient group: `(dim u^L, dim u^G)`.
pub fn dim_class_in_levi(shape: &LeviShape, jt: &JordanType) -> Result<(u32, u32), GeomError> {
    jt.validate(shape)?;
    let mut dim_l = 0u32;
    for (p, &f) in jt.gl.iter().zip(&shape.gl_factors) {
        dim_l += f * f - gl_cent_sum(p);
    }
    if let Some(cf) = shape.classical_family() {
        dim_l += dim_class_unchecked(cf, &jt.classical)?;
    }
    let ambient = jt.ambient_type(shape);
    let dim_g = dim_class(shape.family, &ambient)?;
    Ok((dim_l, dim_g))
}

/// Support `s = dim[V,u] = n - #Jordan blocks` and the applicable class
/// dimension upper bound: `s(2n-s)` for GL/SL, `s(2n-s+1)/2` for Sp/SO.
pub fn support_upper_bounds(f: GroupFamily, p: &Partition) -> Result<(u32, u32), GeomError> {
    if p.n() != f.natural_dim() {
        return Err(GeomError::SizeMismatch(p.to_string(), f.natural_dim()));
    }
    let n = f.natural_dim();
    let s = n - p.num_parts() as u32;
    let bound = match f {
        GroupFamily::GL(_) | GroupFamily::SL(_) => s * (2 * n - s),
        GroupFamily::Sp(_) | GroupFamily::SOOdd(_) | GroupFamily::SOEven(_) => {
            s * (2 * n - s + 1) / 2
        }
    };
    Ok((s, bound))
}
