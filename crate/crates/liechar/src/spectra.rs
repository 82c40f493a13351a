//! Numerical character tables via the Burnside class-sum eigenvector
//! method, the degree zeta function ζ^G(s) = Σ χ(1)^{−s}, and
//! character-level audits: the parabolic coset-average identity, the
//! Steinberg value identity |St(g)| = |C_G(g)|_p, and observed
//! character-ratio exponent bounds.
//!
//! Character values are computed in double precision. Degrees are rounded
//! to integers with a 1e−6 residual gate; orthogonality is verified to
//! 1e−8. Characters are not matched to any parametrization — checks are
//! phrased degree-wise.

use ndarray::{Array1, Array2};
use ndarray_linalg::Eig;
use num_complex::Complex64;
use num_traits::ToPrimitive;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use thiserror::Error;

use crate::alphabeta::{alpha_classical, f_bound, AlphaBetaError};
use crate::classgeom::{GeomError, GroupFamily, LeviShape};
use crate::ffgroup::{ClassTable, GroupError, GroupKind, Mat};

pub const ORTHOGONALITY_TOL: f64 = 1e-8;
pub const DEGREE_RESIDUAL_TOL: f64 = 1e-6;
pub const MAX_CLASSES: usize = 400;
const EIG_SEED: u64 = 0x1ec4a9;
const MAX_RETRIES: usize = 5;

#[derive(Debug, Error)]
pub enum SpectraError {
    #[error("class count {0} exceeds the limit {MAX_CLASSES}")]
    TooManyClasses(usize),
    #[error("eigenvalue clustering unresolved after {MAX_RETRIES} random recombinations: {0}")]
    Clustering(String),
    #[error("numerical failure: {0}")]
    Numerics(String),
    #[error("precondition failure: {0}")]
    Precondition(String),
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    Geom(#[from] GeomError),
    #[error(transparent)]
    AlphaBeta(#[from] AlphaBetaError),
}

/// A numerically computed character table. Row i is the i-th irreducible
/// character across the classes of the underlying [`ClassTable`]; row 0 is
/// the trivial character.
#[derive(Debug, Clone)]
pub struct CharTable {
    pub values: Vec<Vec<Complex64>>,
    pub degrees: Vec<u64>,
    /// Largest |χ(1)_numeric − rounded| observed.
    pub degree_residual: f64,
    /// Largest row/column orthogonality residual observed.
    pub orthogonality_residual: f64,
}

impl CharTable {
    pub fn num_chars(&self) -> usize {
        self.degrees.len()
    }

    /// χ(g) for a group element, looked up through the class table.
    pub fn value_at(&self, t: &ClassTable, chi: usize, g: &Mat) -> Option<Complex64> {
        t.class_of(g).map(|k| self.values[chi][k])
    }
}

fn check_orthogonality(
    values: &[Vec<Complex64>],
    sizes: &[u64],
    order: u64,
) -> Result<f64, SpectraError> {
    let c = sizes.len();
    let mut worst = 0.0f64;
    for i in 0..c {
        for j in 0..c {
            // row orthogonality
            let mut acc = Complex64::new(0.0, 0.0);
            for k in 0..c {
                acc += sizes[k] as f64 * values[i][k] * values[j][k].conj();
            }
            let expect = if i == j { order as f64 } else { 0.0 };
            worst = worst.max((acc / order as f64 - expect / order as f64).norm());
            // column orthogonality: sum over characters is |C_G(g_i)| δ_ij
            let mut acc = Complex64::new(0.0, 0.0);
            for row in values {
                acc += row[i] * row[j].conj();
            }
            let cent = order as f64 / sizes[i] as f64;
            let expect = if i == j { cent } else { 0.0 };
            worst = worst.max((acc - expect).norm() / cent);
        }
    }
    if worst > ORTHOGONALITY_TOL {
        return Err(SpectraError::Numerics(format!(
            "orthogonality residual {worst:.3e} exceeds {ORTHOGONALITY_TOL:.0e}"
        )));
    }
    Ok(worst)
}

/// Compute the character table by simultaneous diagonalization of the
/// class-sum multiplication matrices: a seeded random real combination of
/// the commuting family is diagonalized, eigenvectors are normalized at the
/// identity class, and degrees are recovered from the second orthogonality
/// relation. Degenerate spectra trigger a re-randomization, up to 5 tries.
pub fn character_table(t: &ClassTable) -> Result<CharTable, SpectraError> {
    let c = t.num_classes();
    if c > MAX_CLASSES {
        return Err(SpectraError::TooManyClasses(c));
    }
    let order = t.spec.order();
    let tensor = t.structure_tensor();
    let id = t.identity_class();

    let mut last_gap = 0.0;
    for attempt in 0..MAX_RETRIES {
        let mut rng = ChaCha8Rng::seed_from_u64(EIG_SEED + attempt as u64);
        let coeffs: Vec<f64> = (0..c).map(|_| rng.gen_range(-1.0..1.0)).collect();
        // (M)_{km} = Σ_i c_i N_{ikm}; right eigenvectors are the columns
        // u_m = ω_χ(m) = |C_m|·χ(g_m)/χ(1)
        let m = Array2::from_shape_fn((c, c), |(k, mm)| {
            (0..c).map(|i| coeffs[i] * tensor[i][k][mm] as f64).sum::<f64>()
        });
        let (eigs, vecs): (Array1<Complex64>, Array2<Complex64>) = m
            .eig()
            .map_err(|e| SpectraError::Numerics(format!("eigensolver failed: {e}")))?;

        // require a well-separated spectrum so eigenvectors are simple
        let scale = eigs.iter().map(|z| z.norm()).fold(1.0, f64::max);
        let mut gap = f64::INFINITY;
        for i in 0..c {
            for j in (i + 1)..c {
                gap = gap.min((eigs[i] - eigs[j]).norm());
            }
        }
        last_gap = gap / scale;
        if last_gap < 1e-7 {
            continue;
        }

        let mut rows: Vec<(u64, Vec<Complex64>, f64)> = Vec::with_capacity(c);
        let mut worst_residual = 0.0f64;
        for jcol in 0..c {
            let v: Vec<Complex64> = (0..c).map(|k| vecs[(k, jcol)]).collect();
            let pivot = v[id];
            if pivot.norm() < 1e-12 {
                return Err(SpectraError::Numerics(
                    "eigenvector vanishes at the identity class".into(),
                ));
            }
            let u: Vec<Complex64> = v.iter().map(|x| x / pivot).collect();
            let denom: f64 = (0..c).map(|k| u[k].norm_sqr() / t.sizes[k] as f64).sum();
            let deg_numeric = (order as f64 / denom).sqrt();
            let deg = deg_numeric.round();
            let residual = (deg_numeric - deg).abs();
            worst_residual = worst_residual.max(residual);
            if residual > DEGREE_RESIDUAL_TOL || deg < 1.0 {
                return Err(SpectraError::Numerics(format!(
                    "degree {deg_numeric} does not round to a positive integer"
                )));
            }
            let values: Vec<Complex64> = (0..c)
                .map(|k| u[k] * deg / t.sizes[k] as f64)
                .collect();
            rows.push((deg as u64, values, residual));
        }

        // deterministic ordering: trivial character first, then by degree
        // and lexicographically by (re, im) snapped to 1e-6
        rows.sort_by(|a, b| {
            let triv = |r: &(u64, Vec<Complex64>, f64)| {
                r.1.iter().all(|z| (z - 1.0).norm() < 1e-6)
            };
            triv(b).cmp(&triv(a)).then(a.0.cmp(&b.0)).then_with(|| {
                let key = |r: &(u64, Vec<Complex64>, f64)| -> Vec<(i64, i64)> {
                    r.1.iter()
                        .map(|z| ((z.re * 1e6).round() as i64, (z.im * 1e6).round() as i64))
                        .collect()
                };
                key(a).cmp(&key(b))
            })
        });

        let degrees: Vec<u64> = rows.iter().map(|r| r.0).collect();
        let sumsq: u64 = degrees.iter().map(|&d| d * d).sum();
        if sumsq != order {
            return Err(SpectraError::Numerics(format!(
                "degree squares sum to {sumsq}, group order is {order}"
            )));
        }
        if let Some(&bad) = degrees.iter().find(|&&d| order % d != 0) {
            return Err(SpectraError::Numerics(format!(
                "degree {bad} does not divide the group order"
            )));
        }
        let values: Vec<Vec<Complex64>> = rows.iter().map(|r| r.1.clone()).collect();
        let orth = check_orthogonality(&values, &t.sizes, order)?;
        return Ok(CharTable {
            values,
            degrees,
            degree_residual: worst_residual,
            orthogonality_residual: orth,
        });
    }
    Err(SpectraError::Clustering(format!(
        "smallest relative eigenvalue gap {last_gap:.3e}"
    )))
}

/// The generic degree multiset of GL₂(q): degree 1 and q each q−1 times,
/// degree q+1 with multiplicity (q−1)(q−2)/2, degree q−1 with multiplicity
/// q(q−1)/2.
pub fn generic_gl2_degrees(q: u64) -> Vec<(u64, u64)> {
    assert!(q >= 3);
    vec![
        (1, q - 1),
        (q, q - 1),
        (q + 1, (q - 1) * (q - 2) / 2),
        (q - 1, q * (q - 1) / 2),
    ]
}

/// ζ^G(s) = Σ_{χ ∈ Irr(G)} χ(1)^{−s}, from a degree multiset.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct ZetaValue {
    pub s: f64,
    pub value: f64,
    /// ζ − 1, the nontrivial-character contribution.
    pub tail: f64,
}

pub fn zeta(degrees: &[(u64, u64)], s: f64) -> ZetaValue {
    assert!(s > 0.0);
    let value: f64 = degrees
        .iter()
        .map(|&(d, m)| m as f64 * (d as f64).powf(-s))
        .sum();
    ZetaValue {
        s,
        value,
        tail: value - 1.0,
    }
}

/// Enumerate the unipotent radical of the standard block-upper parabolic
/// with diagonal block sizes `blocks`: all unitriangular matrices supported
/// strictly above the blocks.
fn unipotent_radical(blocks: &[usize], t: &ClassTable) -> Vec<Mat> {
    let n = t.spec.n;
    debug_assert_eq!(blocks.iter().sum::<usize>(), n);
    let mut block_of = vec![0usize; n];
    let mut pos = 0;
    for (b, &sz) in blocks.iter().enumerate() {
        for _ in 0..sz {
            block_of[pos] = b;
            pos += 1;
        }
    }
    let positions: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (0..n).map(move |j| (i, j)))
        .filter(|&(i, j)| block_of[i] < block_of[j])
        .collect();
    let q = t.spec.field.q;
    let mut out = Vec::new();
    let mut digits = vec![0u32; positions.len()];
    loop {
        let mut u = Mat::identity(n);
        for (&(i, j), &v) in positions.iter().zip(&digits) {
            u.set(i, j, v);
        }
        out.push(u);
        let mut carry = true;
        for d in digits.iter_mut() {
            *d += 1;
            if *d < q {
                carry = false;
                break;
            }
            *d = 0;
        }
        if carry {
            break;
        }
    }
    out
}

/// Is the centralizer of g contained in (or equal to, when `exact`) the
/// standard block-diagonal Levi of the given shape?
fn centralizer_vs_levi(
    g: &Mat,
    blocks: &[usize],
    t: &ClassTable,
    exact: bool,
) -> Result<(), SpectraError> {
    let f = &t.spec.field;
    let n = t.spec.n;
    let mut block_of = vec![0usize; n];
    let mut pos = 0;
    for (b, &sz) in blocks.iter().enumerate() {
        for _ in 0..sz {
            block_of[pos] = b;
            pos += 1;
        }
    }
    let mut cent = 0u64;
    for c in 0..t.num_classes() {
        for x in t.elements(c) {
            if x.mul(g, f) != g.mul(x, f) {
                continue;
            }
            cent += 1;
            for i in 0..n {
                for j in 0..n {
                    if block_of[i] != block_of[j] && x.get(i, j) != 0 {
                        return Err(SpectraError::Precondition(format!(
                            "centralizer of {g:?} is not contained in the Levi {blocks:?}"
                        )));
                    }
                }
            }
        }
    }
    if exact {
        let q = f.q as u64;
        let levi_order: u64 = blocks
            .iter()
            .map(|&b| {
                let qn = q.pow(b as u32);
                (0..b as u32).map(|i| qn - q.pow(i)).product::<u64>()
            })
            .product();
        // for SL groups the Levi intersects in the determinant-one part
        let levi_order = match t.spec.kind {
            GroupKind::GL => levi_order,
            GroupKind::SL => levi_order / (q - 1),
        };
        if cent != levi_order {
            return Err(SpectraError::Precondition(format!(
                "centralizer order {cent} differs from Levi order {levi_order}"
            )));
        }
    }
    Ok(())
}

/// The parabolic coset average (1/|U|)·Σ_{x ∈ gU} χ(x) for U the unipotent
/// radical of the standard parabolic with the given Levi block shape.
/// When C_G(g) ≤ L this equals χ(g); callers outside that precondition get
/// an error because the identity may fail.
pub fn hc_coset_average(
    ct: &CharTable,
    t: &ClassTable,
    chi: usize,
    g: &Mat,
    blocks: &[usize],
) -> Result<Complex64, SpectraError> {
    centralizer_vs_levi(g, blocks, t, false)?;
    let f = &t.spec.field;
    let radical = unipotent_radical(blocks, t);
    let mut acc = Complex64::new(0.0, 0.0);
    for u in &radical {
        let x = g.mul(u, f);
        acc += ct
            .value_at(t, chi, &x)
            .ok_or_else(|| SpectraError::Precondition("coset leaves the group".into()))?;
    }
    Ok(acc / radical.len() as f64)
}

#[derive(Debug, Clone, Serialize)]
pub struct SteinbergReport {
    pub steinberg_degree: u64,
    /// Characters of the Steinberg degree; in GL these are the linear
    /// twists of St and share its absolute values.
    pub candidates: usize,
    pub semisimple_classes_checked: usize,
    pub max_residual: f64,
}

fn element_order(g: &Mat, t: &ClassTable) -> u64 {
    let f = &t.spec.field;
    let id = Mat::identity(g.n);
    let mut x = *g;
    let mut ord = 1;
    while x != id {
        x = x.mul(g, f);
        ord += 1;
    }
    ord
}

fn p_part(mut n: u64, p: u64) -> u64 {
    let mut part = 1;
    while n % p == 0 {
        part *= p;
        n /= p;
    }
    part
}

/// Check |St(g)| = |C_G(g)|_p on every semisimple class, identifying the
/// Steinberg character as the unique character of degree q^{n(n−1)/2}.
pub fn steinberg_check(ct: &CharTable, t: &ClassTable) -> Result<SteinbergReport, SpectraError> {
    let n = t.spec.n as u32;
    let q = t.spec.field.q as u64;
    let p = t.spec.field.p as u64;
    let st_degree = q.pow(n * (n - 1) / 2);
    let matches: Vec<usize> = (0..ct.num_chars())
        .filter(|&i| ct.degrees[i] == st_degree)
        .collect();
    if matches.is_empty() {
        return Err(SpectraError::Precondition(format!(
            "no character of the Steinberg degree {st_degree}"
        )));
    }
    let mut checked = 0;
    let mut max_residual = 0.0f64;
    for k in 0..t.num_classes() {
        if element_order(&t.reps[k], t) % p == 0 {
            continue;
        }
        checked += 1;
        let expect = p_part(t.cent_orders[k], p) as f64;
        for &st in &matches {
            let residual = (ct.values[st][k].norm() - expect).abs();
            max_residual = max_residual.max(residual);
            if residual > DEGREE_RESIDUAL_TOL {
                return Err(SpectraError::Numerics(format!(
                    "|St| at class {k} is {}, expected {expect}",
                    ct.values[st][k].norm()
                )));
            }
        }
    }
    Ok(SteinbergReport {
        steinberg_degree: st_degree,
        candidates: matches.len(),
        semisimple_classes_checked: checked,
        max_residual,
    })
}

/// Check that GLₙ(q), n ∈ {2,3}, has an irreducible character of degree
/// (qⁿ − q)/(q − 1).
pub fn unipotent_degree_check(ct: &CharTable, t: &ClassTable) -> Result<u64, SpectraError> {
    let n = t.spec.n as u32;
    if t.spec.kind != GroupKind::GL || !(2..=3).contains(&n) {
        return Err(SpectraError::Precondition(
            "check applies to GL_n(q) with n in {2,3}".into(),
        ));
    }
    let q = t.spec.field.q as u64;
    let expect = (q.pow(n) - q) / (q - 1);
    if ct.degrees.contains(&expect) {
        Ok(expect)
    } else {
        Err(SpectraError::Numerics(format!(
            "no character of degree {expect} found"
        )))
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Main1Audit {
    pub alpha: (i64, i64),
    /// max over nontrivial χ of |χ(g)| / χ(1)^α.
    pub max_effective_f: f64,
    /// The general-form f(r) bound at (rank, q).
    pub f_bound_value: f64,
    pub within_bound: bool,
}

/// Audit the character-ratio bound |χ(g)| ≤ f·χ(1)^α at a semisimple
/// element whose centralizer is the standard Levi of the given shape.
pub fn main1_bound_audit(
    ct: &CharTable,
    t: &ClassTable,
    g: &Mat,
    blocks: &[usize],
) -> Result<Main1Audit, SpectraError> {
    centralizer_vs_levi(g, blocks, t, true)?;
    let n = t.spec.n as u32;
    let shape = LeviShape::new(
        GroupFamily::GL(n),
        blocks.iter().map(|&b| b as u32).collect(),
        0,
    )?;
    let alpha = alpha_classical(&shape)?.value;
    let alpha_f = *alpha.numer() as f64 / *alpha.denom() as f64;
    let k = t
        .class_of(g)
        .ok_or_else(|| SpectraError::Precondition("element not in group".into()))?;
    let mut max_eff = 0.0f64;
    for chi in 0..ct.num_chars() {
        if ct.degrees[chi] == 1 && ct.values[chi].iter().all(|z| (z.norm() - 1.0).abs() < 1e-9)
        {
            continue; // linear characters have |χ(g)| = χ(1)^α trivially
        }
        let eff = ct.values[chi][k].norm() / (ct.degrees[chi] as f64).powf(alpha_f);
        max_eff = max_eff.max(eff);
    }
    let fb = f_bound(n - 1, t.spec.field.q)?;
    let fb_val = fb.general.to_f64().unwrap_or(f64::INFINITY);
    Ok(Main1Audit {
        alpha: (*alpha.numer(), *alpha.denom()),
        max_effective_f: max_eff,
        f_bound_value: fb_val,
        within_bound: max_eff <= fb_val,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ffgroup::{FieldSpec, GroupSpec};

    fn table(kind: GroupKind, n: usize, q: u32) -> (ClassTable, CharTable) {
        let f = FieldSpec::build(q, 1).unwrap();
        let t = ClassTable::build(GroupSpec::new(kind, n, f).unwrap()).unwrap();
        let ct = character_table(&t).unwrap();
        (t, ct)
    }

    #[test]
    fn gl2_3_degrees() {
        let (_, ct) = table(GroupKind::GL, 2, 3);
        assert_eq!(ct.degrees, vec![1, 1, 2, 2, 2, 3, 3, 4]);
        // trivial character first, all ones
        assert!(ct.values[0].iter().all(|z| (z - 1.0).norm() < 1e-9));
        assert!(ct.orthogonality_residual < ORTHOGONALITY_TOL);
        assert!(ct.degree_residual < DEGREE_RESIDUAL_TOL);
    }

    #[test]
    fn sl2_5_degrees() {
        let (t, ct) = table(GroupKind::SL, 2, 5);
        assert_eq!(ct.degrees, vec![1, 2, 2, 3, 3, 4, 4, 5, 6]);
        assert_eq!(
            ct.degrees.iter().map(|&d| d * d).sum::<u64>(),
            t.spec.order()
        );
        for &d in &ct.degrees {
            assert_eq!(t.spec.order() % d, 0);
        }
    }

    #[test]
    fn generic_gl2_matches_computed() {
        for q in [3u64, 5, 7] {
            let generic = generic_gl2_degrees(q);
            assert_eq!(
                generic.iter().map(|&(_, m)| m).sum::<u64>(),
                q * q - 1,
                "class count q={q}"
            );
            let order: u64 = generic.iter().map(|&(d, m)| m * d * d).sum();
            assert_eq!(order, (q * q - 1) * (q * q - q));
            let (_, ct) = table(GroupKind::GL, 2, q as u32);
            let mut expanded: Vec<u64> = generic
                .iter()
                .flat_map(|&(d, m)| std::iter::repeat_n(d, m as usize))
                .collect();
            expanded.sort_unstable();
            assert_eq!(expanded, ct.degrees, "q={q}");
        }
    }

    #[test]
    fn zeta_values() {
        let z = zeta(&generic_gl2_degrees(3), 2.0);
        // 1 + 1 + 2·(1/9) + 1·(1/16) + 3·(1/4)
        let expect = 2.0 + 2.0 / 9.0 + 1.0 / 16.0 + 3.0 / 4.0;
        assert!((z.value - expect).abs() < 1e-12);
        assert!(z.value >= 1.0);
        // strictly decreasing in s
        let z2 = zeta(&generic_gl2_degrees(3), 3.0);
        assert!(z2.value < z.value);
        // SL_2(q) tail decreasing across q at s = 1.5 > 2/h = 1
        let mut tails = Vec::new();
        for q in [5u32, 7, 11, 13] {
            let (_, ct) = table(GroupKind::SL, 2, q);
            let degs: Vec<(u64, u64)> = ct.degrees.iter().map(|&d| (d, 1)).collect();
            tails.push(zeta(&degs, 1.5).tail);
        }
        assert!(tails.windows(2).all(|w| w[1] < w[0]), "{tails:?}");
    }

    #[test]
    fn coset_average_identity_gl2() {
        let (t, ct) = table(GroupKind::GL, 2, 5);
        let g = Mat::diag(&[2, 1]);
        for chi in 0..ct.num_chars() {
            let avg = hc_coset_average(&ct, &t, chi, &g, &[1, 1]).unwrap();
            let direct = ct.value_at(&t, chi, &g).unwrap();
            assert!((avg - direct).norm() < ORTHOGONALITY_TOL, "chi={chi}");
        }
        // central element: centralizer is all of G, identity not guaranteed
        let central = Mat::diag(&[2, 2]);
        assert!(matches!(
            hc_coset_average(&ct, &t, 0, &central, &[1, 1]),
            Err(SpectraError::Precondition(_))
        ));
    }

    #[test]
    fn coset_average_identity_gl3() {
        let (t, ct) = table(GroupKind::GL, 3, 3);
        let g = Mat::diag(&[2, 1, 1]);
        for chi in 0..ct.num_chars() {
            let avg = hc_coset_average(&ct, &t, chi, &g, &[1, 2]).unwrap();
            let direct = ct.value_at(&t, chi, &g).unwrap();
            assert!((avg - direct).norm() < ORTHOGONALITY_TOL, "chi={chi}");
        }
    }

    #[test]
    fn steinberg_identity() {
        let (t, ct) = table(GroupKind::GL, 2, 5);
        let rep = steinberg_check(&ct, &t).unwrap();
        assert_eq!(rep.steinberg_degree, 5);
        assert_eq!(rep.candidates, 4);
        // at diag(2,1): centralizer (q-1)^2 has trivial 5-part
        let st = ct.degrees.iter().position(|&d| d == 5).unwrap();
        let v = ct.value_at(&t, st, &Mat::diag(&[2, 1])).unwrap();
        assert!((v.norm() - 1.0).abs() < 1e-8);

        let (t3, ct3) = table(GroupKind::GL, 3, 3);
        let rep = steinberg_check(&ct3, &t3).unwrap();
        assert_eq!(rep.steinberg_degree, 27);
        // central element: |St(g)| = |G|_3 = 3^3
        let st = ct3.degrees.iter().position(|&d| d == 27).unwrap();
        let v = ct3.value_at(&t3, st, &Mat::diag(&[2, 2, 2])).unwrap();
        assert!((v.norm() - 27.0).abs() < 1e-7);
    }

    #[test]
    fn unipotent_degrees() {
        let (t3, ct3) = table(GroupKind::GL, 3, 3);
        assert_eq!(unipotent_degree_check(&ct3, &t3).unwrap(), 12);
        let (t, ct) = table(GroupKind::GL, 2, 5);
        assert_eq!(unipotent_degree_check(&ct, &t).unwrap(), 5);
        let (ts, cts) = table(GroupKind::SL, 2, 5);
        assert!(unipotent_degree_check(&cts, &ts).is_err());
    }

    #[test]
    fn main1_audit_gl2_regular_split() {
        let (t, ct) = table(GroupKind::GL, 2, 5);
        // diag(2,1) has centralizer the diagonal torus; alpha = 0
        let audit = main1_bound_audit(&ct, &t, &Mat::diag(&[2, 1]), &[1, 1]).unwrap();
        assert_eq!(audit.alpha, (0, 1));
        // effective f = max nontrivial |χ(g)|, at most |W(GL_2)| = 2
        assert!(audit.max_effective_f <= 2.0 + 1e-8, "{}", audit.max_effective_f);
        assert!(audit.within_bound);
    }

    #[test]
    fn main1_audit_gl3() {
        let (t, ct) = table(GroupKind::GL, 3, 3);
        let audit = main1_bound_audit(&ct, &t, &Mat::diag(&[2, 1, 1]), &[1, 2]).unwrap();
        assert_eq!(audit.alpha, (1, 2));
        assert!(audit.within_bound);
        // wrong shape: centralizer is GL_2 x GL_1, not the torus
        assert!(matches!(
            main1_bound_audit(&ct, &t, &Mat::diag(&[2, 1, 1]), &[1, 1, 1]),
            Err(SpectraError::Precondition(_))
        ));
    }
}
