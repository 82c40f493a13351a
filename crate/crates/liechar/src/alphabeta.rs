//! The optimization layer: α(L) for a split Levi by exhaustive unipotent
//! sweep, the combinatorial equivalent β(n₁,…,nₘ) by exhaustive
//! multiplicity-matrix search, closed forms and bounds, and the support
//! constants c(𝓖), r′(𝓖) and the character bound constant f(r).
//!
//! Everything here is exact rational arithmetic — no floating point.

use itertools::Itertools;
use num_bigint::BigUint;
use num_rational::{BigRational, Ratio};
use num_traits::{One, Zero};
use serde::Serialize;
use thiserror::Error;

use crate::classgeom::{
    dim_class_in_levi, GeomError, GroupFamily, JordanType, LeviShape,
};
use crate::partitions::Partition;

pub type Rat = Ratio<i64>;

/// Exhaustive searches are capped at total natural dimension 14; beyond
/// that callers must use the closed forms.
pub const SEARCH_GUARD: u32 = 14;

#[derive(Debug, Error)]
pub enum AlphaBetaError {
    #[error("search guard exceeded: total size {0} > {SEARCH_GUARD}")]
    GuardExceeded(u32),
    #[error("invalid input: {0}")]
    BadInput(String),
    #[error(transparent)]
    Geom(#[from] GeomError),
}

/// Result of an α computation: the exact value and a Jordan type attaining
/// it (the trivial type when the Levi is a torus and α = 0).
#[derive(Debug, Clone, Serialize)]
pub struct AlphaResult {
    pub value: Rat,
    pub witness: JordanType,
    pub levi: LeviShape,
}

/// Result of a β computation: the exact value and an optimal multiplicity
/// matrix, rows weakly decreasing and padded with zeros to n columns.
#[derive(Debug, Clone, Serialize)]
pub struct BetaResult {
    pub value: Rat,
    pub witness_matrix: Vec<Vec<u32>>,
}

fn pad_rows(rows: &[&Partition], cols: usize) -> Vec<Vec<u32>> {
    rows.iter()
        .map(|p| {
            let mut row: Vec<u32> = p.parts().to_vec();
            row.resize(cols, 0);
            row
        })
        .collect()
}

/// Evaluate the β objective on one choice of rows (each row a partition of
/// its nᵢ): numerator Σᵢ(nᵢ² − Σⱼ aᵢⱼ²), denominator n² − Σⱼ(Σᵢ aᵢⱼ)².
/// Returns None for the trivial choice (every row a single part), where the
/// denominator vanishes.
fn beta_objective(sizes: &[u32], rows: &[&Partition]) -> Option<Rat> {
    if rows.iter().all(|p| p.num_parts() <= 1) {
        return None;
    }
    let n: u32 = sizes.iter().sum();
    let mut num = 0i64;
    for (p, &ni) in rows.iter().zip(sizes) {
        let sq: i64 = p.parts().iter().map(|&a| (a as i64) * (a as i64)).sum();
        num += (ni as i64) * (ni as i64) - sq;
    }
    let cols = rows.iter().map(|p| p.num_parts()).max().unwrap_or(0);
    let mut den = (n as i64) * (n as i64);
    for j in 0..cols {
        let col: i64 = rows
            .iter()
            .map(|p| *p.parts().get(j).unwrap_or(&0) as i64)
            .sum();
        den -= col * col;
    }
    debug_assert!(den > 0, "denominator must be positive off the trivial row set");
    Some(Rat::new(num, den))
}

fn check_sizes(sizes: &[u32]) -> Result<u32, AlphaBetaError> {
    if sizes.is_empty() || sizes.iter().any(|&s| s == 0) {
        return Err(AlphaBetaError::BadInput(
            "sizes must be a nonempty list of positive integers".into(),
        ));
    }
    let n: u32 = sizes.iter().sum();
    if n > SEARCH_GUARD {
        return Err(AlphaBetaError::GuardExceeded(n));
    }
    Ok(n)
}

/// β(n₁,…,nₘ) by exhaustive search over multiplicity matrices. Rows range
/// over partitions of each nᵢ; at least one row must have a second part
/// (otherwise the element is central and the ratio undefined). β(1,…,1) = 0.
/// The witness is the first maximizer in deterministic enumeration order.
pub fn beta_bruteforce(sizes: &[u32]) -> Result<BetaResult, AlphaBetaError> {
    let n = check_sizes(sizes)?;
    let mut best: Option<(Rat, Vec<&Partition>)> = None;
    let per_row: Vec<Vec<Partition>> = sizes
        .iter()
        .map(|&ni| Partition::enumerate(ni).expect("within guard"))
        .collect();
    for rows in per_row.iter().map(|v| v.iter()).multi_cartesian_product() {
        if let Some(val) = beta_objective(sizes, &rows) {
            if best.as_ref().is_none_or(|(b, _)| val > *b) {
                best = Some((val, rows));
            }
        }
    }
    match best {
        Some((value, rows)) => Ok(BetaResult {
            value,
            witness_matrix: pad_rows(&rows, n as usize),
        }),
        // all nᵢ = 1: the constraint set is empty and β = 0 by definition
        None => Ok(BetaResult {
            value: Rat::zero(),
            witness_matrix: sizes
                .iter()
                .map(|_| {
                    let mut row = vec![1u32];
                    row.resize(n as usize, 0);
                    row
                })
                .collect(),
        }),
    }
}

/// All multiplicity matrices attaining β (for equality-case analysis).
pub fn beta_all_witnesses(sizes: &[u32]) -> Result<(Rat, Vec<Vec<Vec<u32>>>), AlphaBetaError> {
    let n = check_sizes(sizes)?;
    let per_row: Vec<Vec<Partition>> = sizes
        .iter()
        .map(|&ni| Partition::enumerate(ni).expect("within guard"))
        .collect();
    let mut best = Rat::zero();
    let mut witnesses: Vec<Vec<Vec<u32>>> = Vec::new();
    let mut any = false;
    for rows in per_row.iter().map(|v| v.iter()).multi_cartesian_product() {
        if let Some(val) = beta_objective(sizes, &rows) {
            if !any || val > best {
                best = val;
                witnesses.clear();
                any = true;
            }
            if val == best {
                witnesses.push(pad_rows(&rows, n as usize));
            }
        }
    }
    Ok((if any { best } else { Rat::zero() }, witnesses))
}

/// Closed form for two factors: β(n₁,n₂) = (n₁−1)/(n−t) with n = n₁+n₂ and
/// t the number of maximal sizes (2 if n₁ = n₂, else 1).
pub fn beta_closed_m2(n1: u32, n2: u32) -> Result<Rat, AlphaBetaError> {
    if n2 < 1 || n1 < n2 || n1 < 2 {
        return Err(AlphaBetaError::BadInput(format!(
            "beta_closed_m2 needs n1 >= n2 >= 1 and n1 >= 2, got ({n1},{n2})"
        )));
    }
    let t = if n1 == n2 { 2 } else { 1 };
    Ok(Rat::new((n1 - 1) as i64, (n1 + n2 - t) as i64))
}

/// All Jordan types of the Levi, in deterministic order (per-factor
/// reverse-lexicographic partition order, product lexicographic).
pub fn enumerate_jordan_types(shape: &LeviShape) -> Result<Vec<JordanType>, AlphaBetaError> {
    let mut factor_lists: Vec<Vec<Partition>> = Vec::new();
    for &f in &shape.gl_factors {
        factor_lists.push(Partition::enumerate(f).expect("within guard"));
    }
    let classical_list: Vec<Partition> = if shape.classical_factor == 0 {
        vec![Partition::empty()]
    } else {
        Partition::enumerate(shape.classical_factor)
            .expect("within guard")
            .into_iter()
            .filter(|p| {
                let m = p.multiplicities();
                match shape.family {
                    GroupFamily::GL(_) | GroupFamily::SL(_) => true,
                    GroupFamily::Sp(_) => m.iter().all(|(&i, &k)| i % 2 == 0 || k % 2 == 0),
                    GroupFamily::SOOdd(_) | GroupFamily::SOEven(_) => {
                        m.iter().all(|(&i, &k)| i % 2 == 1 || k % 2 == 0)
                    }
                }
            })
            .collect()
    };
    factor_lists.push(classical_list);
    let mut out = Vec::new();
    for combo in factor_lists.iter().map(|v| v.iter()).multi_cartesian_product() {
        let (classical, gl) = combo.split_last().expect("nonempty");
        out.push(JordanType {
            gl: gl.iter().map(|&p| p.clone()).collect(),
            classical: (*classical).clone(),
        });
    }
    Ok(out)
}

/// α(L) = max over nontrivial unipotent u ∈ L of dim u^L / dim u^G, by
/// exhaustive sweep of the Levi's Jordan types. A torus has no nontrivial
/// unipotents and gets α = 0 with the trivial witness.
pub fn alpha_classical(shape: &LeviShape) -> Result<AlphaResult, AlphaBetaError> {
    let n = shape.family.natural_dim();
    if n > SEARCH_GUARD {
        return Err(AlphaBetaError::GuardExceeded(n));
    }
    let mut best: Option<(Rat, JordanType)> = None;
    for jt in enumerate_jordan_types(shape)? {
        if jt.is_trivial() {
            continue;
        }
        let (dl, dg) = dim_class_in_levi(shape, &jt)?;
        debug_assert!(dg > 0, "nontrivial unipotent has positive ambient class dimension");
        let val = Rat::new(dl as i64, dg as i64);
        if best.as_ref().is_none_or(|(b, _)| val > *b) {
            best = Some((val, jt));
        }
    }
    match best {
        Some((value, witness)) => Ok(AlphaResult {
            value,
            witness,
            levi: shape.clone(),
        }),
        None => Ok(AlphaResult {
            value: Rat::zero(),
            witness: JordanType {
                gl: shape
                    .gl_factors
                    .iter()
                    .map(|&f| Partition::new(vec![1; f as usize]).expect("trivial"))
                    .collect(),
                classical: Partition::new(vec![1; shape.classical_factor as usize])
                    .expect("trivial"),
            },
            levi: shape.clone(),
        }),
    }
}

/// Check α(𝓛) ≤ ½(1 + dim 𝓛 / dim 𝓖) and return the slack.
///
/// dim 𝓛 is the full reductive Levi dimension: Σ nᵢ² plus the dimension of
/// the classical factor. For an SL ambient the dimension convention
/// subtracts 1 from the ambient group only.
pub fn check_ratio_bound(shape: &LeviShape) -> Result<(bool, Rat), AlphaBetaError> {
    let alpha = alpha_classical(shape)?.value;
    let dim_l = shape.dim_levi() as i64;
    let dim_g = shape.family.dim_group() as i64;
    let bound = (Rat::one() + Rat::new(dim_l, dim_g)) / Rat::from_integer(2);
    Ok((alpha <= bound, bound - alpha))
}

/// Check the sandwich (n_{i₀}−1)/(n−t) ≤ β(n₁,…,nₘ) ≤ n_{i₀}/n, where n_{i₀}
/// is the largest size and t the number of sizes equal to it.
pub fn check_sandwich(sizes: &[u32]) -> Result<bool, AlphaBetaError> {
    let n = check_sizes(sizes)?;
    let beta = beta_bruteforce(sizes)?.value;
    let ni0 = *sizes.iter().max().expect("nonempty");
    let t = sizes.iter().filter(|&&s| s == ni0).count() as u32;
    let upper = Rat::new(ni0 as i64, n as i64);
    if n == t {
        // all sizes maximal and equal: for (1,…,1) the lower bound
        // degenerates and β = 0 passes vacuously
        if ni0 == 1 {
            return Ok(beta.is_zero());
        }
    }
    let lower = Rat::new((ni0 - 1) as i64, (n - t) as i64);
    Ok(lower <= beta && beta <= upper)
}

fn isqrt_ceil(x: u32) -> u32 {
    let mut k = 0u32;
    while k * k < x {
        k += 1;
    }
    k
}

fn factorial(r: u32) -> BigUint {
    (1..=r).map(BigUint::from).product::<BigUint>().max(BigUint::one())
}

/// The character bound constant f(r) for rank r over 𝔽_{q₀}.
#[derive(Debug, Clone, Serialize)]
pub struct FBound {
    /// General form W(r)²·B(r)·((q₀+1)/(q₀−1))^{(d(r)−r)/2} with
    /// W(r) = 2^r·r!, B(r) = 2^{⌈√(2r+1)⌉}, d(r) = 2r²+r (so the exponent
    /// is r²). The square-root exponent is rounded up to an integer, which
    /// slightly enlarges the bound.
    pub general: BigRational,
    /// Closed form 2^{2r+⌈√(2r)⌉+3}·(r!)², valid for r ≥ 9 and q₀ ≥ r²+1
    /// (again with the exponent rounded up).
    pub closed_form: Option<BigUint>,
}

pub fn f_bound(r: u32, q0: u32) -> Result<FBound, AlphaBetaError> {
    if r < 1 || q0 < 2 {
        return Err(AlphaBetaError::BadInput(format!(
            "f_bound needs r >= 1 and q0 >= 2, got ({r},{q0})"
        )));
    }
    let w = BigUint::from(2u32).pow(r) * factorial(r);
    let b = BigUint::from(2u32).pow(isqrt_ceil(2 * r + 1));
    let base = BigRational::new(
        BigUint::from(q0 + 1).into(),
        BigUint::from(q0 - 1).into(),
    );
    let general = BigRational::from_integer((&w * &w * b).into()) * base.pow((r * r) as i32);
    let closed_form = if r >= 9 && q0 >= r * r + 1 {
        let fr = factorial(r);
        Some(BigUint::from(2u32).pow(2 * r + isqrt_ceil(2 * r) + 3) * &fr * &fr)
    } else {
        None
    };
    Ok(FBound { general, closed_form })
}

/// The support constants (c(𝓖), r′(𝓖)) of the simple classical families,
/// with c·r′ = r:
///
/// | family      | c            | r′            |
/// |-------------|--------------|---------------|
/// | SL_{r+1}    | (r+1)/(2r+4) | r(2r+4)/(r+1) |
/// | Sp_{2r}     | r/(4r+2)     | 4r+2          |
/// | Spin_{2r+1} | 1/4          | 4r            |
/// | Spin_{2r}   | r/(4r−2)     | 4r−2          |
pub fn supp_constants(f: GroupFamily) -> Result<(Rat, Rat), AlphaBetaError> {
    f.validate()?;
    let r = f.rank() as i64;
    let (c, rp) = match f {
        GroupFamily::GL(_) | GroupFamily::SL(_) => (
            Rat::new(r + 1, 2 * r + 4),
            Rat::new(r * (2 * r + 4), r + 1),
        ),
        GroupFamily::Sp(_) => (Rat::new(r, 4 * r + 2), Rat::from_integer(4 * r + 2)),
        GroupFamily::SOOdd(_) => (Rat::new(1, 4), Rat::from_integer(4 * r)),
        GroupFamily::SOEven(_) => (Rat::new(r, 4 * r - 2), Rat::from_integer(4 * r - 2)),
    };
    debug_assert_eq!(c * rp, Rat::from_integer(r));
    Ok((c, rp))
}

/// h(α) = (A² − Σaᵢ²)/A for a partition α of A (the superadditive quantity
/// behind the β upper bound).
pub fn h_value(p: &Partition) -> Rat {
    let a = p.n() as i64;
    if a == 0 {
        return Rat::zero();
    }
    let sq: i64 = p.parts().iter().map(|&x| (x as i64) * (x as i64)).sum();
    Rat::new(a * a - sq, a)
}
