//! One function per headline guarantee of the crate, each returning a
//! pass/fail verdict with a one-line detail. The `verify` CLI subcommand
//! and the `acceptance` integration test both drive [`run_all`].
//!
//! Mixing times are frozen in a golden file
//! (`tests/data/mixing_golden.json`): the first run records the measured
//! values, and every later run must reproduce them exactly.

use std::path::PathBuf;

use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::alphabeta::{
    alpha_classical, beta_all_witnesses, beta_bruteforce, beta_closed_m2, check_ratio_bound,
    check_sandwich, h_value, Rat,
};
use crate::classgeom::{GroupFamily, LeviShape};
use crate::exceptdata::{alpha_exceptional, verify_e7_d6, ExceptionalGroup};
use crate::ffgroup::{
    centralizer_order_bruteforce, levi_witness_sl, supp, ClassTable, FieldSpec, GroupKind,
    GroupSpec, Mat,
};
use crate::partitions::Partition;
use crate::spectra::{
    character_table, hc_coset_average, steinberg_check, unipotent_degree_check, zeta, CharTable,
    DEGREE_RESIDUAL_TOL, ORTHOGONALITY_TOL,
};
use crate::walks::{covering_number, frobenius_distribution, mixing_time, step, WalkState};

/// Largest group order for which a character table is attempted by the
/// acceptance suite; larger inputs are reported as skipped, not failed.
pub const CHARTABLE_ORDER_GUARD: u64 = 100_000;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
}

#[derive(Debug, Clone)]
pub struct CriterionResult {
    pub id: usize,
    pub name: &'static str,
    pub status: Status,
    pub detail: String,
}

type Check = fn() -> Result<String, String>;

fn rat(n: i64, d: i64) -> Rat {
    Rat::new(n, d)
}

fn build(kind: GroupKind, n: usize, p: u32, k: u32) -> Result<ClassTable, String> {
    let f = FieldSpec::build(p, k).map_err(|e| e.to_string())?;
    let spec = GroupSpec::new(kind, n, f).map_err(|e| e.to_string())?;
    ClassTable::build(spec).map_err(|e| e.to_string())
}

fn chartable(kind: GroupKind, n: usize, p: u32, k: u32) -> Result<(ClassTable, CharTable), String> {
    let t = build(kind, n, p, k)?;
    let ct = character_table(&t).map_err(|e| e.to_string())?;
    Ok((t, ct))
}

// 1. two-factor closed form and its exact maximizer classification
fn c1_beta_two_factor() -> Result<String, String> {
    let mut checked = 0;
    for n1 in 1..=11u32 {
        for n2 in 1..=n1.min(12 - n1) {
            let n = n1 + n2;
            let got = beta_bruteforce(&[n1, n2]).map_err(|e| e.to_string())?.value;
            // (1,1) is the torus shape: value 0 by definition, no closed form
            let expect = if n1 == 1 {
                Rat::zero()
            } else {
                beta_closed_m2(n1, n2).map_err(|e| e.to_string())?
            };
            if got != expect {
                return Err(format!("β({n1},{n2}) = {got}, closed form {expect}"));
            }
            if n1 >= 2 {
                check_m2_witnesses(n1, n2, n as usize)?;
            }
            checked += 1;
        }
    }
    Ok(format!("{checked} two-factor shapes, values and maximizers exact"))
}

fn one_box_removals(p: &Partition) -> Vec<Partition> {
    let mut out = Vec::new();
    let parts = p.parts();
    for i in 0..parts.len() {
        if i + 1 < parts.len() && parts[i] == parts[i + 1] {
            continue;
        }
        let mut q: Vec<u32> = parts.to_vec();
        q[i] -= 1;
        out.push(Partition::from_unsorted(q));
    }
    out
}

fn check_m2_witnesses(n1: u32, n2: u32, n: usize) -> Result<(), String> {
    let (_, mut got) = beta_all_witnesses(&[n1, n2]).map_err(|e| e.to_string())?;
    got.sort();
    let pad = |p: &Partition| -> Vec<u32> {
        let mut row = p.parts().to_vec();
        row.resize(n, 0);
        row
    };
    let mut expect: Vec<Vec<Vec<u32>>> = Vec::new();
    if n1 == n2 {
        for a in Partition::enumerate(n1).map_err(|e| e.to_string())? {
            if a.num_parts() >= 2 {
                expect.push(vec![pad(&a), pad(&a)]);
            }
        }
    } else {
        let top = Partition::from_unsorted(vec![n1 - 1, 1]);
        expect.push(vec![pad(&top), pad(&Partition::from_unsorted(vec![n2]))]);
    }
    if n1 == n2 + 1 {
        for a in Partition::enumerate(n1).map_err(|e| e.to_string())? {
            for b in one_box_removals(&a) {
                if a.num_parts() >= 2 || b.num_parts() >= 2 {
                    expect.push(vec![pad(&a), pad(&b)]);
                }
            }
        }
    }
    expect.sort();
    expect.dedup();
    if got != expect {
        return Err(format!("maximizer set mismatch for ({n1},{n2})"));
    }
    Ok(())
}

// 2. m equal factors of size k give exactly 1/m
fn c2_beta_rectangular() -> Result<String, String> {
    let mut checked = 0;
    for m in 1..=6u32 {
        for k in 2..=12 / m {
            let sizes = vec![k; m as usize];
            let got = beta_bruteforce(&sizes).map_err(|e| e.to_string())?.value;
            if got != rat(1, m as i64) {
                return Err(format!("β({k}×{m}) = {got}, expected 1/{m}"));
            }
            checked += 1;
        }
    }
    Ok(format!("{checked} rectangular shapes equal 1/m exactly"))
}

// 3. α = β on every GL Levi shape with the sandwich enclosure
fn c3_alpha_beta_sandwich() -> Result<String, String> {
    let mut checked = 0;
    for n in 2..=10u32 {
        for sizes in Partition::enumerate(n).map_err(|e| e.to_string())? {
            let sizes = sizes.parts().to_vec();
            let shape =
                LeviShape::new(GroupFamily::GL(n), sizes.clone(), 0).map_err(|e| e.to_string())?;
            let a = alpha_classical(&shape).map_err(|e| e.to_string())?.value;
            let b = beta_bruteforce(&sizes).map_err(|e| e.to_string())?.value;
            if a != b {
                return Err(format!("α = {a} ≠ β = {b} at GL shape {sizes:?}"));
            }
            if !check_sandwich(&sizes).map_err(|e| e.to_string())? {
                return Err(format!("sandwich enclosure fails at {sizes:?}"));
            }
            checked += 1;
        }
    }
    Ok(format!("{checked} GL shapes: α = β exactly, enclosure holds"))
}

fn classical_shapes(f: GroupFamily) -> Vec<LeviShape> {
    let n = f.natural_dim();
    let mut out = Vec::new();
    match f {
        GroupFamily::GL(_) | GroupFamily::SL(_) => {
            for sizes in Partition::enumerate(n).unwrap() {
                out.push(LeviShape::new(f, sizes.parts().to_vec(), 0).unwrap());
            }
        }
        _ => {
            for half in 0..=n / 2 {
                let classical = n - 2 * half;
                if half == 0 {
                    out.push(LeviShape::new(f, vec![], classical).unwrap());
                    continue;
                }
                for sizes in Partition::enumerate(half).unwrap() {
                    out.push(LeviShape::new(f, sizes.parts().to_vec(), classical).unwrap());
                }
            }
        }
    }
    out
}

// 4. α(𝓛) ≤ ½(1 + dim 𝓛 / dim 𝓖) on every classical shape
fn c4_ratio_bound() -> Result<String, String> {
    let mut families: Vec<GroupFamily> = Vec::new();
    for n in 2..=12 {
        families.push(GroupFamily::GL(n));
        families.push(GroupFamily::SL(n));
    }
    for n in (4..=12u32).step_by(2) {
        families.push(GroupFamily::Sp(n));
    }
    for n in [7u32, 9, 11] {
        families.push(GroupFamily::SOOdd(n));
    }
    for n in [8u32, 10, 12] {
        families.push(GroupFamily::SOEven(n));
    }
    let mut checked = 0;
    for f in families {
        for shape in classical_shapes(f) {
            let (ok, _slack) = check_ratio_bound(&shape).map_err(|e| e.to_string())?;
            if !ok {
                return Err(format!("dimension bound fails for {shape:?}"));
            }
            checked += 1;
        }
    }
    Ok(format!("{checked} classical shapes within the dimension bound"))
}

// 5. GLₙ maximum (n−2)/(n−1), attained only at the (n−1,1) shape
fn c5_gl_maximum() -> Result<String, String> {
    for n in 3..=10u32 {
        let bound = rat(n as i64 - 2, n as i64 - 1);
        for sizes in Partition::enumerate(n).map_err(|e| e.to_string())? {
            if sizes.num_parts() < 2 {
                continue;
            }
            let sizes = sizes.parts().to_vec();
            let shape =
                LeviShape::new(GroupFamily::GL(n), sizes.clone(), 0).map_err(|e| e.to_string())?;
            let a = alpha_classical(&shape).map_err(|e| e.to_string())?.value;
            let is_max_shape = sizes == vec![n - 1, 1];
            if a > bound {
                return Err(format!("α = {a} exceeds {bound} at {sizes:?}"));
            }
            if is_max_shape != (a == bound) {
                return Err(format!("equality misplaced at {sizes:?}: α = {a}"));
            }
        }
    }
    Ok("proper GL shapes up to n = 10: max (n−2)/(n−1) only at (n−1,1)".into())
}

// 6. h(α) + h(β) ≤ h(α + β) for componentwise partition sums
fn c6_superadditivity() -> Result<String, String> {
    let mut checked = 0;
    for na in 1..=8u32 {
        for nb in 1..=8u32 {
            for a in Partition::enumerate(na).map_err(|e| e.to_string())? {
                for b in Partition::enumerate(nb).map_err(|e| e.to_string())? {
                    let rows = a.parts().len().max(b.parts().len());
                    let sum: Vec<u32> = (0..rows)
                        .map(|i| {
                            a.parts().get(i).copied().unwrap_or(0)
                                + b.parts().get(i).copied().unwrap_or(0)
                        })
                        .collect();
                    let s = Partition::from_unsorted(sum);
                    if h_value(&a) + h_value(&b) > h_value(&s) {
                        return Err(format!("superadditivity fails at {a:?} + {b:?}"));
                    }
                    checked += 1;
                }
            }
        }
    }
    Ok(format!("{checked} partition pairs, exact"))
}

// 7. exceptional α table internally consistent with the worked D₆ rows
fn c7_exceptional_table() -> Result<String, String> {
    let report = verify_e7_d6().map_err(|e| e.to_string())?;
    if !report.matches_alpha_table || report.max_ratio != rat(5, 9) {
        return Err(format!("worked rows give max ratio {}", report.max_ratio));
    }
    for (group, label, num, den) in [
        (ExceptionalGroup::E8, "E7", 17, 29),
        (ExceptionalGroup::E7, "D6", 5, 9),
        (ExceptionalGroup::G2, "A1", 1, 3),
        (ExceptionalGroup::G2, "~A1", 1, 4),
        (ExceptionalGroup::F4, "B3", 1, 2),
        (ExceptionalGroup::E6, "A5", 1, 2),
    ] {
        let e = alpha_exceptional(group, label).map_err(|e| e.to_string())?;
        if e.alpha != rat(num, den) {
            return Err(format!("{group:?}/{label}: α = {}, expected {num}/{den}", e.alpha));
        }
    }
    Ok(format!(
        "{} worked rows recomputed, max ratio 5/9, table lookups bit-exact",
        report.rows_checked
    ))
}

const CHARTABLE_GROUPS: &[(GroupKind, usize, u32, u32)] = &[
    (GroupKind::GL, 2, 3, 1),
    (GroupKind::GL, 2, 5, 1),
    (GroupKind::GL, 2, 7, 1),
    (GroupKind::GL, 3, 3, 1),
    (GroupKind::SL, 2, 5, 1),
    (GroupKind::SL, 2, 7, 1),
    (GroupKind::SL, 2, 3, 2),
    (GroupKind::SL, 2, 11, 1),
    (GroupKind::SL, 2, 13, 1),
    (GroupKind::SL, 3, 3, 1),
];

// 8. character tables across the catalog within tolerances
fn c8_character_tables() -> Result<String, String> {
    let mut worst_orth = 0.0f64;
    let mut worst_deg = 0.0f64;
    for &(kind, n, p, k) in CHARTABLE_GROUPS {
        let (t, ct) = chartable(kind, n, p, k)?;
        let order = t.spec.order();
        let sumsq: u64 = ct.degrees.iter().map(|&d| d * d).sum();
        if sumsq != order {
            return Err(format!("{kind:?}_{n}({}) degree squares {sumsq} ≠ {order}", t.spec.field.q));
        }
        if ct.orthogonality_residual > ORTHOGONALITY_TOL || ct.degree_residual > DEGREE_RESIDUAL_TOL
        {
            return Err(format!(
                "{kind:?}_{n}({}) residuals {:.2e}/{:.2e}",
                t.spec.field.q, ct.orthogonality_residual, ct.degree_residual
            ));
        }
        worst_orth = worst_orth.max(ct.orthogonality_residual);
        worst_deg = worst_deg.max(ct.degree_residual);
    }
    Ok(format!(
        "{} tables; worst residuals orthogonality {worst_orth:.2e}, degree {worst_deg:.2e}",
        CHARTABLE_GROUPS.len()
    ))
}

// 9. the parabolic coset average reproduces χ(g) character by character
fn c9_coset_average() -> Result<String, String> {
    let gl2_pairs: Vec<(Mat, Vec<usize>)> = vec![
        (Mat::diag(&[2, 1]), vec![1, 1]),
        (Mat::diag(&[3, 1]), vec![1, 1]),
        (Mat::diag(&[3, 2]), vec![1, 1]),
    ];
    let gl3_pairs: Vec<(Mat, Vec<usize>)> = vec![
        (Mat::diag(&[2, 1, 1]), vec![1, 2]),
        (Mat::diag(&[1, 2, 2]), vec![1, 2]),
        (Mat::diag(&[2, 2, 1]), vec![2, 1]),
    ];
    let mut checked = 0;
    for (n, p, pairs) in [(2usize, 5u32, gl2_pairs), (3, 3, gl3_pairs)] {
        let (t, ct) = chartable(GroupKind::GL, n, p, 1)?;
        for (g, blocks) in pairs {
            for chi in 0..ct.num_chars() {
                let avg = hc_coset_average(&ct, &t, chi, &g, &blocks)
                    .map_err(|e| e.to_string())?;
                let direct = ct.value_at(&t, chi, &g).ok_or("element not in group")?;
                if (avg - direct).norm() > ORTHOGONALITY_TOL {
                    return Err(format!(
                        "GL_{n}({p}) character {chi} at {g:?}: average differs by {:.2e}",
                        (avg - direct).norm()
                    ));
                }
                checked += 1;
            }
        }
    }
    Ok(format!("{checked} (character, coset) identities within 1e-8"))
}

// 10. |St(g)| equals the p-part of the centralizer on p′-classes
fn c10_steinberg() -> Result<String, String> {
    let mut detail = Vec::new();
    for (n, p) in [(2usize, 5u32), (3, 3)] {
        let (t, ct) = chartable(GroupKind::GL, n, p, 1)?;
        let rep = steinberg_check(&ct, &t).map_err(|e| e.to_string())?;
        detail.push(format!(
            "GL_{n}({p}): degree {}, {} classes, residual {:.1e}",
            rep.steinberg_degree, rep.semisimple_classes_checked, rep.max_residual
        ));
    }
    Ok(detail.join("; "))
}

// 11. the degree-(qⁿ−q)/(q−1) character exists (large cases skipped)
fn c11_unipotent_degree() -> Result<String, String> {
    let (t, ct) = chartable(GroupKind::GL, 3, 3, 1)?;
    let d = unipotent_degree_check(&ct, &t).map_err(|e| e.to_string())?;
    if d != 12 {
        return Err(format!("GL_3(3) degree {d}, expected 12"));
    }
    let f5 = FieldSpec::build(5, 1).map_err(|e| e.to_string())?;
    let gl35 = GroupSpec::new(GroupKind::GL, 3, f5).map_err(|e| e.to_string())?;
    let skipped = if gl35.order() > CHARTABLE_ORDER_GUARD {
        format!("GL_3(5) skipped (order {} above table guard)", gl35.order())
    } else {
        let (t5, ct5) = chartable(GroupKind::GL, 3, 5, 1)?;
        format!(
            "GL_3(5) degree {}",
            unipotent_degree_check(&ct5, &t5).map_err(|e| e.to_string())?
        )
    };
    Ok(format!("GL_3(3) degree 12 present; {skipped}"))
}

// 12. exact convolution agrees with the character-formula evaluation
fn c12_walk_oracle() -> Result<String, String> {
    let cases: [(GroupKind, u32, Mat); 4] = [
        (GroupKind::GL, 3, Mat::from_rows(&[vec![1, 1], vec![0, 1]])),
        (GroupKind::GL, 5, Mat::diag(&[2, 1])),
        (GroupKind::SL, 5, Mat::from_rows(&[vec![1, 1], vec![0, 1]])),
        (GroupKind::SL, 7, Mat::diag(&[3, 5])),
    ];
    let mut worst = 0.0f64;
    for (kind, q, rep) in cases {
        let (t, ct) = chartable(kind, 2, q, 1)?;
        let tensor = t.structure_tensor();
        let c = t.class_of(&rep).ok_or("class representative not in group")?;
        let mut state = WalkState::point_identity(&t);
        for steps in 1..=6u32 {
            state = step(&state, c, &t, &tensor);
            let oracle = frobenius_distribution(&ct, &t, c, steps);
            for k in 0..t.num_classes() {
                let exact = num_traits::ToPrimitive::to_f64(&state.probs[k]).unwrap();
                let dev = (exact - oracle[k]).abs();
                worst = worst.max(dev);
                if dev > 1e-8 {
                    return Err(format!(
                        "{kind:?}_2({q}) t={steps} class {k}: deviation {dev:.2e}"
                    ));
                }
            }
        }
    }
    Ok(format!("4 groups × 6 steps; worst deviation {worst:.2e}"))
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
struct GoldenCase {
    group: String,
    t_l1: u32,
    t_linf: u32,
    cover: u32,
}

fn golden_path() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/data/mixing_golden.json")
}

// 13. measured mixing times within the catalog bounds, frozen in a golden file
fn c13_mixing_bounds() -> Result<String, String> {
    let mut cases = Vec::new();
    for (q, a, ainv) in [(5u32, 2, 3), (7, 3, 5), (11, 2, 6), (13, 2, 7)] {
        let t = build(GroupKind::SL, 2, q, 1)?;
        let tensor = t.structure_tensor();
        let c = t
            .class_of(&Mat::diag(&[a, ainv]))
            .ok_or("representative not in group")?;
        let rep = mixing_time(c, &t, &tensor, Some(5)).map_err(|e| e.to_string())?;
        if rep.t_l1 > 5 {
            return Err(format!("SL_2({q}) torus walk mixes in {} > 5 steps", rep.t_l1));
        }
        if rep.lower_bound > rep.t_l1 {
            return Err(format!("SL_2({q}) lower bound {} exceeds measured {}", rep.lower_bound, rep.t_l1));
        }
        cases.push(GoldenCase {
            group: format!("SL2({q}) split torus"),
            t_l1: rep.t_l1,
            t_linf: rep.t_linf,
            cover: rep.cover,
        });
    }
    let t = build(GroupKind::SL, 3, 3, 1)?;
    let tensor = t.structure_tensor();
    let c = t
        .class_of(&Mat::diag(&[2, 2, 1]))
        .ok_or("representative not in group")?;
    let rep = mixing_time(c, &t, &tensor, None).map_err(|e| e.to_string())?;
    if rep.t_l1 < 3 {
        return Err(format!("SL_3(3) homology walk mixes in {} < 3 steps", rep.t_l1));
    }
    cases.push(GoldenCase {
        group: "SL3(3) homology diag(2,2,1)".into(),
        t_l1: rep.t_l1,
        t_linf: rep.t_linf,
        cover: rep.cover,
    });

    let path = golden_path();
    if path.exists() {
        let text = std::fs::read_to_string(&path).map_err(|e| e.to_string())?;
        let golden: Vec<GoldenCase> = serde_json::from_str(&text).map_err(|e| e.to_string())?;
        if golden != cases {
            return Err("measured mixing times differ from the golden file".into());
        }
        Ok(format!("{} cases match the golden file exactly", cases.len()))
    } else {
        std::fs::create_dir_all(path.parent().unwrap()).map_err(|e| e.to_string())?;
        let text = serde_json::to_string_pretty(&cases).map_err(|e| e.to_string())?;
        std::fs::write(&path, text).map_err(|e| e.to_string())?;
        Ok(format!("{} cases recorded to the golden file (first run)", cases.len()))
    }
}

// 14. covering numbers above log|G|/log|C|, support growth below mixing
fn c14_covering() -> Result<String, String> {
    let mut covers = 0;
    let mut mixes = 0;
    for (kind, n, q) in [
        (GroupKind::SL, 2usize, 5u32),
        (GroupKind::GL, 2, 3),
        (GroupKind::SL, 3, 3),
    ] {
        let t = build(kind, n, q, 1)?;
        let tensor = t.structure_tensor();
        for c in 0..t.num_classes() {
            let Ok(cn) = covering_number(c, &t, &tensor) else {
                continue;
            };
            let lower = (t.spec.order() as f64).ln() / (t.sizes[c] as f64).ln();
            if (cn as f64) < lower {
                return Err(format!("{kind:?}_{n}({q}) class {c}: cn = {cn} below {lower:.3}"));
            }
            covers += 1;
            let rep = mixing_time(c, &t, &tensor, None).map_err(|e| e.to_string())?;
            if rep.support_lower_bound > rep.t_l1 {
                return Err(format!(
                    "{kind:?}_{n}({q}) class {c}: support bound {} exceeds measured {}",
                    rep.support_lower_bound, rep.t_l1
                ));
            }
            mixes += 1;
        }
    }
    Ok(format!("{covers} generating classes: covering and support bounds hold ({mixes} walks)"))
}

// 15. the degree zeta tail at s = 1.5 strictly decreases along the family
fn c15_zeta_trend() -> Result<String, String> {
    let mut tails = Vec::new();
    for q in [5u32, 7, 11, 13] {
        let (_, ct) = chartable(GroupKind::SL, 2, q, 1)?;
        let degs: Vec<(u64, u64)> = ct.degrees.iter().map(|&d| (d, 1)).collect();
        tails.push((q, zeta(&degs, 1.5).tail));
    }
    for w in tails.windows(2) {
        if w[1].1 >= w[0].1 - 1e-12 {
            return Err(format!("tail not strictly decreasing: {tails:?}"));
        }
    }
    Ok(format!(
        "ζ(1.5) − 1 over q = 5,7,11,13: {}",
        tails.iter().map(|(q, t)| format!("q={q}: {t:.5}")).collect::<Vec<_>>().join(", ")
    ))
}

fn random_invertible(n: usize, f: &FieldSpec, rng: &mut ChaCha8Rng) -> Mat {
    loop {
        let mut m = Mat::identity(n);
        for i in 0..n {
            for j in 0..n {
                m.set(i, j, rng.gen_range(0..f.q));
            }
        }
        if m.det(f) != 0 {
            return m;
        }
    }
}

// 16. eigenvalue support: homologies, regular split elements, invariance
fn c16_supp() -> Result<String, String> {
    let f5 = FieldSpec::build(5, 1).map_err(|e| e.to_string())?;
    let f3 = FieldSpec::build(3, 1).map_err(|e| e.to_string())?;
    let f7 = FieldSpec::build(7, 1).map_err(|e| e.to_string())?;
    // homologies diag(μ,…,μ,λ) have support 1
    for (m, f, expect) in [
        (Mat::diag(&[2, 2, 1]), &f5, 1u32),
        (Mat::diag(&[3, 3, 3, 1]), &f5, 1),
        (Mat::diag(&[2, 2, 2]), &f3, 0),
        (Mat::diag(&[2, 1]), &f5, 1),
        (Mat::diag(&[1, 2, 3]), &f5, 2),
        (Mat::diag(&[1, 2, 3, 4]), &f7, 3),
    ] {
        let got = supp(&m, f).map_err(|e| e.to_string())?;
        if got != expect {
            return Err(format!("supp({m:?}) = {got}, expected {expect}"));
        }
    }
    // conjugation invariance on seeded random pairs
    let mut rng = ChaCha8Rng::seed_from_u64(0x5afe);
    let mut checked = 0;
    for (n, f) in [(2usize, &f5), (3, &f3), (2, &f7)] {
        for _ in 0..100 {
            let g = random_invertible(n, f, &mut rng);
            let x = random_invertible(n, f, &mut rng);
            let conj = x.mul(&g, f).mul(&x.inv(f), f);
            let sg = supp(&g, f).map_err(|e| e.to_string())?;
            let sc = supp(&conj, f).map_err(|e| e.to_string())?;
            if sg != sc {
                return Err(format!("supp not conjugation-invariant at {g:?}"));
            }
            checked += 1;
        }
    }
    Ok(format!("6 fixed values exact; {checked} random conjugate pairs invariant"))
}

// 17. the determinant-one semisimple witness and its centralizer order
fn c17_levi_witness() -> Result<String, String> {
    let f5 = FieldSpec::build(5, 1).map_err(|e| e.to_string())?;
    let s = levi_witness_sl(&[1, 2], &f5).map_err(|e| e.to_string())?;
    if s.det(&f5) != 1 {
        return Err("witness determinant differs from 1".into());
    }
    let cent = centralizer_order_bruteforce(GroupKind::GL, &s, &f5);
    if cent != 4 * 480 {
        return Err(format!("centralizer order {cent}, expected 1920"));
    }
    // every other feasible parameter set: determinant and scalar blocks
    let feasible: [(&[u32], u32); 3] = [(&[1, 2], 13), (&[1, 3], 7), (&[2, 2], 7)];
    for (sizes, q) in feasible {
        let f = FieldSpec::build(q, 1).map_err(|e| e.to_string())?;
        let s = levi_witness_sl(sizes, &f).map_err(|e| e.to_string())?;
        if s.det(&f) != 1 {
            return Err(format!("witness for {sizes:?}, q = {q} not in SL"));
        }
    }
    Ok("witness for blocks (1,2) over F_5: det 1, centralizer order 1920; 3 more parameter sets pass".into())
}

/// Names shown in the per-criterion report lines.
const CRITERIA: &[(&'static str, Check)] = &[
    ("two-factor beta closed form and maximizers", c1_beta_two_factor),
    ("rectangular beta equals 1/m", c2_beta_rectangular),
    ("alpha = beta with sandwich enclosure", c3_alpha_beta_sandwich),
    ("Levi dimension ratio bound", c4_ratio_bound),
    ("GL maximum at the (n-1,1) shape", c5_gl_maximum),
    ("h superadditivity", c6_superadditivity),
    ("exceptional alpha table consistency", c7_exceptional_table),
    ("character table catalog", c8_character_tables),
    ("parabolic coset average identity", c9_coset_average),
    ("Steinberg centralizer identity", c10_steinberg),
    ("unipotent character degree", c11_unipotent_degree),
    ("walk convolution vs character formula", c12_walk_oracle),
    ("mixing times vs bounds (golden)", c13_mixing_bounds),
    ("covering and support lower bounds", c14_covering),
    ("zeta tail trend", c15_zeta_trend),
    ("eigenvalue support", c16_supp),
    ("determinant-one Levi witness", c17_levi_witness),
];

/// Run every acceptance criterion; never panics, returns one result each.
pub fn run_all() -> Vec<CriterionResult> {
    CRITERIA
        .iter()
        .enumerate()
        .map(|(i, (name, check))| match check() {
            Ok(detail) => CriterionResult {
                id: i + 1,
                name,
                status: Status::Pass,
                detail,
            },
            Err(detail) => CriterionResult {
                id: i + 1,
                name,
                status: Status::Fail,
                detail,
            },
        })
        .collect()
}
