//! Concrete finite matrix groups: small finite fields, GLₙ(q)/SLₙ(q)
//! conjugacy-class tables and structure constants, the support invariant
//! supp(g), and the explicit semisimple elements used for Levi subgroups
//! and homologies.

pub mod classes;
pub mod field;
pub mod matrix;

pub use classes::{
    centralizer_order_bruteforce, ClassTable, GroupError, GroupKind, GroupSpec, ORDER_GUARD,
};
pub use field::{FieldError, FieldSpec, MAX_Q};
pub use matrix::{Mat, MAX_N};

/// Divide polynomial `a` by monic `b` over the field, returning
/// (quotient, remainder); ascending coefficients.
fn poly_divmod(a: &[u32], b: &[u32], f: &FieldSpec) -> (Vec<u32>, Vec<u32>) {
    let db = b.len() - 1;
    let mut rem: Vec<u32> = a.to_vec();
    let mut quo = vec![0u32; a.len().saturating_sub(db)];
    while rem.len() > db && rem.iter().any(|&c| c != 0) {
        let da = rem.len() - 1;
        let c = rem[da];
        if c != 0 {
            quo[da - db] = c;
            for (j, &bj) in b.iter().enumerate() {
                rem[da - db + j] = f.sub(rem[da - db + j], f.mul(c, bj));
            }
        }
        rem.pop();
    }
    while rem.len() > 1 && *rem.last().unwrap() == 0 {
        rem.pop();
    }
    (quo, rem)
}

fn is_zero_poly(p: &[u32]) -> bool {
    p.iter().all(|&c| c == 0)
}

/// Factor a monic polynomial of degree ≤ 4 over 𝔽_q into monic irreducible
/// factors with multiplicities, by trial division: all linear factors
/// first, then irreducible quadratics; any remainder of degree 3 or 4 has
/// no factor of degree ≤ 2 and is itself irreducible.
pub fn factor_poly(poly: &[u32], f: &FieldSpec) -> Vec<(Vec<u32>, u32)> {
    let deg = poly.len() - 1;
    assert!(deg <= 4, "factorization is implemented for degree <= 4");
    assert_eq!(*poly.last().unwrap(), 1, "input must be monic");
    let mut rest = poly.to_vec();
    let mut factors = Vec::new();
    for c in 0..f.q {
        let lin = vec![c, 1]; // x + c
        let mut mult = 0;
        loop {
            if rest.len() < 2 {
                break;
            }
            let (quo, rem) = poly_divmod(&rest, &lin, f);
            if !is_zero_poly(&rem) {
                break;
            }
            rest = quo;
            mult += 1;
        }
        if mult > 0 {
            factors.push((lin, mult));
        }
    }
    if rest.len() - 1 >= 2 {
        'quads: for c1 in 0..f.q {
            for c0 in 0..f.q {
                let quad = vec![c0, c1, 1];
                // only irreducible quadratics can still divide
                if (0..f.q).any(|x| f.add(f.add(f.mul(f.mul(x, x), 1), f.mul(c1, x)), c0) == 0)
                {
                    continue;
                }
                let mut mult = 0;
                loop {
                    if rest.len() < 3 {
                        break;
                    }
                    let (quo, rem) = poly_divmod(&rest, &quad, f);
                    if !is_zero_poly(&rem) {
                        break;
                    }
                    rest = quo;
                    mult += 1;
                }
                if mult > 0 {
                    factors.push((quad, mult));
                }
                if rest.len() < 3 {
                    break 'quads;
                }
            }
        }
    }
    if rest.len() > 1 {
        // degree 3 or 4 with no factor of degree <= 2: irreducible
        factors.push((rest, 1));
    }
    factors
}

/// Evaluate a polynomial at a matrix argument.
fn poly_at_matrix(poly: &[u32], g: &Mat, f: &FieldSpec) -> Mat {
    let n = g.n;
    let mut acc = Mat::zero(n);
    for &c in poly.iter().rev() {
        acc = acc.mul(g, f);
        for i in 0..n {
            acc.set(i, i, f.add(acc.get(i, i), c));
        }
    }
    acc
}

/// supp(g): the codimension of the largest eigenspace of g on V ⊗ 𝔽̄_q.
///
/// For each irreducible factor f₀ of the characteristic polynomial, of
/// degree d, the λ-eigenspace dimension over the degree-d extension equals
/// nullity(f₀(g))/d over 𝔽_q (the kernel of f₀(g) is a vector space over
/// 𝔽_q[x]/(f₀)), so no extension-field arithmetic is needed.
pub fn supp(g: &Mat, f: &FieldSpec) -> Result<u32, GroupError> {
    if g.det(f) == 0 {
        return Err(GroupError::BadInput("supp needs an invertible matrix".into()));
    }
    let n = g.n as u32;
    let cp = g.char_poly(f);
    let max_eigenspace = factor_poly(&cp, f)
        .iter()
        .map(|(fac, _)| {
            let d = (fac.len() - 1) as u32;
            let nullity = n - poly_at_matrix(fac, g, f).rank(f) as u32;
            debug_assert_eq!(nullity % d, 0);
            nullity / d
        })
        .max()
        .expect("characteristic polynomial has at least one factor");
    Ok(n - max_eigenspace)
}

/// The semisimple element s ∈ SLₙ(q) whose GLₙ(q)-centralizer is the Levi
/// GL_{n₁}(q) × ⋯ × GL_{n_r}(q), for ascending sizes with n_r ≥ 2, r ≥ 2,
/// when N = n_r·Π_{i<r}(nᵢ+1) divides q−1.
///
/// Construction: with ζ of order N and ζ_d := ζ^{N/d}, the i-th block is
/// the scalar ζ_{(n₁+1)⋯(nᵢ+1)}⁻¹·I_{nᵢ} for i < r and ζ^{±1}·I_{n_r} on
/// the last block, the sign fixed by det(s) = 1. The block scalars are
/// pairwise distinct, which is what pins the centralizer.
pub fn levi_witness_sl(sizes: &[u32], f: &FieldSpec) -> Result<Mat, GroupError> {
    let r = sizes.len();
    if r < 2 {
        return Err(GroupError::BadInput("need at least two factors".into()));
    }
    if sizes.windows(2).any(|w| w[0] > w[1]) || sizes[0] == 0 {
        return Err(GroupError::BadInput("sizes must be positive and ascending".into()));
    }
    let n: u32 = sizes.iter().sum();
    if !(2..=MAX_N as u32).contains(&n) {
        return Err(GroupError::BadN(n as usize));
    }
    let nr = sizes[r - 1];
    if nr < 2 {
        return Err(GroupError::BadInput("largest factor must be at least 2".into()));
    }
    let big_n: u32 = nr * sizes[..r - 1].iter().map(|&s| s + 1).product::<u32>();
    if (f.q - 1) % big_n != 0 {
        return Err(GroupError::Divisibility(format!(
            "N = {big_n} does not divide q - 1 = {}",
            f.q - 1
        )));
    }
    let zeta = f.element_of_order(big_n).expect("checked divisibility");
    let zeta_d = |d: u32| f.pow(zeta, (big_n / d) as u64);
    let mut scalars = Vec::with_capacity(r);
    let mut d = 1;
    for &ni in &sizes[..r - 1] {
        d *= ni + 1;
        scalars.push(f.inv(zeta_d(d)));
    }
    for last in [zeta, f.inv(zeta)] {
        let mut sc = scalars.clone();
        sc.push(last);
        let mut entries = Vec::with_capacity(n as usize);
        for (&ni, &s) in sizes.iter().zip(&sc) {
            entries.extend(std::iter::repeat_n(s, ni as usize));
        }
        let m = Mat::diag(&entries);
        let distinct = (0..r).all(|i| (i + 1..r).all(|j| sc[i] != sc[j]));
        if m.det(f) == 1 && distinct {
            return Ok(m);
        }
    }
    Err(GroupError::BadInput(
        "no determinant-one block-scalar element exists for these parameters".into(),
    ))
}

/// The homology diag(μ·I_{n−1}, λ) with μ ≠ λ both nonzero; when `sl` is
/// set, additionally requires μ^{n−1}·λ = 1 so the element lies in SLₙ(q).
pub fn central_homology(
    n: usize,
    f: &FieldSpec,
    mu: u32,
    lambda: u32,
    sl: bool,
) -> Result<Mat, GroupError> {
    if !(2..=MAX_N).contains(&n) {
        return Err(GroupError::BadN(n));
    }
    if mu == 0 || lambda == 0 || mu == lambda {
        return Err(GroupError::BadInput(
            "homology needs distinct nonzero scalars".into(),
        ));
    }
    if sl && f.mul(f.pow(mu, (n - 1) as u64), lambda) != 1 {
        return Err(GroupError::BadInput(format!(
            "mu^{}*lambda != 1, element not in SL",
            n - 1
        )));
    }
    let mut entries = vec![mu; n];
    entries[n - 1] = lambda;
    Ok(Mat::diag(&entries))
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn factorization_roundtrip() {
        for (p, k) in [(2, 1), (3, 1), (5, 1), (2, 2)] {
            let f = FieldSpec::build(p, k).unwrap();
            // all monic quartics: factor and multiply back
            for code in 0..f.q.pow(4) {
                let mut poly = vec![0u32; 5];
                let mut c = code;
                for coeff in poly.iter_mut().take(4) {
                    *coeff = c % f.q;
                    c /= f.q;
                }
                poly[4] = 1;
                let factors = factor_poly(&poly, &f);
                let mut prod = vec![1u32];
                for (fac, mult) in &factors {
                    for _ in 0..*mult {
                        prod = matrix::poly_mul(&prod, fac, &f);
                    }
                }
                assert_eq!(prod, poly, "q={} poly {poly:?}", f.q);
            }
        }
    }

    #[test]
    fn supp_examples() {
        let f = FieldSpec::build(5, 1).unwrap();
        // homology diag(mu I_{n-1}, lambda): supp = 1
        assert_eq!(supp(&Mat::diag(&[2, 2, 1]), &f).unwrap(), 1);
        // regular split semisimple: supp = n - 1
        assert_eq!(supp(&Mat::diag(&[1, 2, 3]), &f).unwrap(), 2);
        assert_eq!(supp(&Mat::diag(&[1, 2, 3, 4]), &f).unwrap(), 3);
        // identity: supp 0
        assert_eq!(supp(&Mat::identity(3), &f).unwrap(), 0);
        // irreducible characteristic polynomial x^2+1 over F_3
        let f3 = FieldSpec::build(3, 1).unwrap();
        let g = Mat::from_rows(&[vec![0, 2], vec![1, 0]]);
        assert_eq!(g.char_poly(&f3), vec![1, 0, 1]);
        assert_eq!(supp(&g, &f3).unwrap(), 1);
        // singular input rejected
        assert!(supp(&Mat::zero(2), &f).is_err());
    }

    #[test]
    fn supp_conjugation_invariant() {
        for (kind, n, p) in [(GroupKind::GL, 2, 7), (GroupKind::SL, 2, 5), (GroupKind::SL, 3, 3)]
        {
            let f = FieldSpec::build(p, 1).unwrap();
            let t = ClassTable::build(GroupSpec::new(kind, n, f).unwrap()).unwrap();
            let f = &t.spec.field;
            let all: Vec<&Mat> = (0..t.num_classes()).flat_map(|c| t.elements(c)).collect();
            let mut rng = ChaCha8Rng::seed_from_u64(23);
            for _ in 0..100 {
                let g = all[rng.gen_range(0..all.len())];
                let h = all[rng.gen_range(0..all.len())];
                let conj = h.mul(g, f).mul(&h.inv(f), f);
                assert_eq!(supp(&conj, f).unwrap(), supp(g, f).unwrap());
            }
        }
    }

    #[test]
    fn levi_witness_example() {
        let f = FieldSpec::build(5, 1).unwrap();
        let s = levi_witness_sl(&[1, 2], &f).unwrap();
        assert_eq!(s, Mat::diag(&[4, 2, 2]));
        assert_eq!(s.det(&f), 1);
        // centralizer order |GL_1(5)| * |GL_2(5)| = 4 * 480
        let cent = centralizer_order_bruteforce(GroupKind::GL, &s, &f);
        assert_eq!(cent, 4 * 480);
    }

    #[test]
    fn levi_witness_feasible_cases_centralizer() {
        // among sizes with n <= 4 and q <= 32, only (1,2) with q = 5 keeps
        // |GL_n(q)| within the order guard for the brute-force check; for
        // the other feasible parameters verify determinant and distinctness
        let feasible: [(&[u32], u32); 4] =
            [(&[1, 2], 5), (&[1, 2], 13), (&[1, 3], 7), (&[2, 2], 7)];
        for (sizes, q) in feasible {
            let f = FieldSpec::build(q, 1).unwrap();
            let s = levi_witness_sl(sizes, &f).unwrap();
            assert_eq!(s.det(&f), 1, "sizes {sizes:?} q={q}");
            let gl_order: u64 = {
                let n: u32 = sizes.iter().sum();
                let q = q as u64;
                let qn = q.pow(n);
                (0..n).map(|i| qn - q.pow(i)).product()
            };
            if gl_order <= 2_000_000 {
                let cent = centralizer_order_bruteforce(GroupKind::GL, &s, &f);
                let expect: u64 = sizes
                    .iter()
                    .map(|&ni| {
                        let q = q as u64;
                        let qn = q.pow(ni);
                        (0..ni).map(|i| qn - q.pow(i)).product::<u64>()
                    })
                    .product();
                assert_eq!(cent, expect, "sizes {sizes:?} q={q}");
            }
        }
    }

    #[test]
    fn levi_witness_preconditions() {
        let f4 = FieldSpec::build(2, 2).unwrap();
        assert!(matches!(
            levi_witness_sl(&[1, 2], &f4),
            Err(GroupError::Divisibility(_))
        ));
        let f5 = FieldSpec::build(5, 1).unwrap();
        assert!(levi_witness_sl(&[2], &f5).is_err());
        assert!(levi_witness_sl(&[2, 1], &f5).is_err()); // not ascending
        assert!(levi_witness_sl(&[1, 1], &f5).is_err()); // largest factor < 2
    }

    #[test]
    fn homology_examples() {
        let f3 = FieldSpec::build(3, 1).unwrap();
        let h = central_homology(3, &f3, 2, 1, true).unwrap();
        assert_eq!(h, Mat::diag(&[2, 2, 1]));
        assert_eq!(h.det(&f3), 1);
        assert_eq!(supp(&h, &f3).unwrap(), 1);
        let f5 = FieldSpec::build(5, 1).unwrap();
        assert_eq!(
            central_homology(2, &f5, 2, 1, false).unwrap(),
            Mat::diag(&[2, 1])
        );
        assert!(central_homology(2, &f5, 2, 2, false).is_err());
        assert!(central_homology(2, &f5, 2, 1, true).is_err()); // det = 2
    }
}
