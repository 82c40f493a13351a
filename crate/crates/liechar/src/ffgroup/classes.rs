//! Group and conjugacy-class machinery for GLₙ(q) and SLₙ(q), n ≤ 4.
//!
//! The group is materialized once by a Cayley breadth-first search from the
//! identity over a fixed generating set; conjugacy classes are then exact
//! conjugation orbits computed by a second breadth-first search, so no
//! invariant-collision heuristics are involved. The canonical class
//! representative is the least element of the class in packed-key order
//! (row-major entries, low index least significant).

use std::collections::HashMap;

use serde::Serialize;
use thiserror::Error;

use super::field::{FieldError, FieldSpec};
use super::matrix::Mat;

/// Largest group order the engine will materialize.
pub const ORDER_GUARD: u64 = 30_000_000;

#[derive(Debug, Error)]
pub enum GroupError {
    #[error("matrix size must be between 2 and 4, got {0}")]
    BadN(usize),
    #[error("group order {0} exceeds the engine guard {ORDER_GUARD}")]
    GuardExceeded(u64),
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error("invalid input: {0}")]
    BadInput(String),
    #[error("divisibility precondition fails: {0}")]
    Divisibility(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum GroupKind {
    GL,
    SL,
}

/// A finite matrix group GLₙ(q) or SLₙ(q) within the engine guards.
#[derive(Debug, Clone)]
pub struct GroupSpec {
    pub kind: GroupKind,
    pub n: usize,
    pub field: FieldSpec,
}

impl GroupSpec {
    pub fn new(kind: GroupKind, n: usize, field: FieldSpec) -> Result<GroupSpec, GroupError> {
        if !(2..=4).contains(&n) {
            return Err(GroupError::BadN(n));
        }
        let spec = GroupSpec { kind, n, field };
        let order = spec.order();
        if order > ORDER_GUARD {
            return Err(GroupError::GuardExceeded(order));
        }
        Ok(spec)
    }

    /// |GLₙ(q)| = Π_{i<n} (qⁿ − qⁱ); |SLₙ(q)| divides out q−1.
    pub fn order(&self) -> u64 {
        let q = self.field.q as u64;
        let qn = q.pow(self.n as u32);
        let gl: u64 = (0..self.n as u32).map(|i| qn - q.pow(i)).product();
        match self.kind {
            GroupKind::GL => gl,
            GroupKind::SL => gl / (q - 1),
        }
    }

    pub fn contains(&self, m: &Mat) -> bool {
        m.n == self.n
            && match self.kind {
                GroupKind::GL => m.det(&self.field) != 0,
                GroupKind::SL => m.det(&self.field) == 1,
            }
    }

    /// A generating set: all transvections I + αE_{ij} (α ≠ 0) — these
    /// generate SLₙ(q) — plus diag(ζ,1,…,1) with ζ primitive for GL.
    fn generators(&self) -> Vec<Mat> {
        let mut gens = Vec::new();
        for i in 0..self.n {
            for j in 0..self.n {
                if i == j {
                    continue;
                }
                for alpha in 1..self.field.q {
                    gens.push(Mat::transvection(self.n, i, j, alpha));
                }
            }
        }
        if self.kind == GroupKind::GL {
            let mut d = Mat::identity(self.n);
            d.set(0, 0, self.field.primitive_element());
            gens.push(d);
        }
        gens
    }
}

/// The full conjugacy-class decomposition of a group.
pub struct ClassTable {
    pub spec: GroupSpec,
    /// Canonical class representatives (least packed key per class), in
    /// increasing representative order; index 0 is the identity class.
    pub reps: Vec<Mat>,
    pub sizes: Vec<u64>,
    pub cent_orders: Vec<u64>,
    /// inverse_map[i] = class index of reps[i]⁻¹.
    pub inverse_map: Vec<usize>,
    class_of: HashMap<u128, u32>,
    elements_by_class: Vec<Vec<Mat>>,
}

impl ClassTable {
    pub fn build(spec: GroupSpec) -> Result<ClassTable, GroupError> {
        let f = &spec.field;
        let order = spec.order();
        let gens = spec.generators();
        let gen_invs: Vec<Mat> = gens.iter().map(|g| g.inv(f)).collect();

        // phase 1: materialize the group by Cayley BFS
        let mut class_of: HashMap<u128, u32> =
            HashMap::with_capacity(order as usize * 2);
        let id = Mat::identity(spec.n);
        class_of.insert(id.pack(), u32::MAX);
        let mut frontier = vec![id];
        while let Some(x) = frontier.pop() {
            for g in &gens {
                let y = x.mul(g, f);
                if let std::collections::hash_map::Entry::Vacant(e) =
                    class_of.entry(y.pack())
                {
                    e.insert(u32::MAX);
                    frontier.push(y);
                }
            }
        }
        assert_eq!(
            class_of.len() as u64,
            order,
            "Cayley BFS must reach every group element"
        );

        // phase 2: conjugation orbits, scanning keys in increasing order so
        // each new representative is the least element of its class
        let mut keys: Vec<u128> = class_of.keys().copied().collect();
        keys.sort_unstable();
        let mut reps = Vec::new();
        let mut sizes = Vec::new();
        let mut elements_by_class: Vec<Vec<Mat>> = Vec::new();
        for &key in &keys {
            if class_of[&key] != u32::MAX {
                continue;
            }
            let idx = reps.len() as u32;
            let rep = Mat::unpack(spec.n, key);
            let mut members = vec![rep];
            class_of.insert(key, idx);
            let mut stack = vec![rep];
            while let Some(x) = stack.pop() {
                for (g, gi) in gens.iter().zip(&gen_invs) {
                    let y = g.mul(&x, f).mul(gi, f);
                    let slot = class_of.get_mut(&y.pack()).expect("closed under conjugation");
                    if *slot == u32::MAX {
                        *slot = idx;
                        members.push(y);
                        stack.push(y);
                    }
                }
            }
            reps.push(rep);
            sizes.push(members.len() as u64);
            elements_by_class.push(members);
        }
        debug_assert_eq!(sizes.iter().sum::<u64>(), order);

        let cent_orders: Vec<u64> = sizes.iter().map(|&s| order / s).collect();
        for (&s, &c) in sizes.iter().zip(&cent_orders) {
            assert_eq!(s * c, order, "class size must divide the group order");
        }
        let inverse_map: Vec<usize> = reps
            .iter()
            .map(|r| class_of[&r.inv(f).pack()] as usize)
            .collect();
        Ok(ClassTable {
            spec,
            reps,
            sizes,
            cent_orders,
            inverse_map,
            class_of,
            elements_by_class,
        })
    }

    pub fn num_classes(&self) -> usize {
        self.reps.len()
    }

    /// Class index of a group element.
    pub fn class_of(&self, m: &Mat) -> Option<usize> {
        self.class_of.get(&m.pack()).map(|&i| i as usize)
    }

    pub fn elements(&self, class: usize) -> &[Mat] {
        &self.elements_by_class[class]
    }

    /// Index of the identity class (always 0: the identity packs below any
    /// other invertible matrix only by convention — asserted, not assumed).
    pub fn identity_class(&self) -> usize {
        self.class_of(&Mat::identity(self.spec.n))
            .expect("identity is in the group")
    }

    /// N_{ijk} = #{x ∈ Cᵢ : x⁻¹·z_k ∈ Cⱼ} for the fixed representative
    /// z_k = reps[k], i.e. the number of ways z_k factors as (Cᵢ)(Cⱼ).
    /// Returned as the dense vector over k.
    pub fn structure_constants(&self, i: usize, j: usize) -> Vec<u64> {
        let f = &self.spec.field;
        let mut out = vec![0u64; self.num_classes()];
        for (k, z) in self.reps.iter().enumerate() {
            let mut count = 0;
            for x in self.elements(i) {
                let y = x.inv(f).mul(z, f);
                if self.class_of(&y) == Some(j) {
                    count += 1;
                }
            }
            out[k] = count;
        }
        out
    }

    /// The full tensor N_{ijk}, indexed [i][j][k], in one pass of cost
    /// O(#classes · |G|).
    pub fn structure_tensor(&self) -> Vec<Vec<Vec<u64>>> {
        let f = &self.spec.field;
        let c = self.num_classes();
        let mut t = vec![vec![vec![0u64; c]; c]; c];
        for (k, z) in self.reps.iter().enumerate() {
            for i in 0..c {
                for x in self.elements(i) {
                    let j = self
                        .class_of(&x.inv(f).mul(z, f))
                        .expect("group is closed");
                    t[i][j][k] += 1;
                }
            }
        }
        t
    }
}

/// Brute-force order of the centralizer of `s` in GLₙ(q) (or SLₙ(q)),
/// scanning the whole matrix space. Independent of the class machinery, for
/// cross-checks.
pub fn centralizer_order_bruteforce(
    kind: GroupKind,
    s: &Mat,
    f: &FieldSpec,
) -> u64 {
    let n = s.n;
    let q = f.q as u64;
    let total = q.pow((n * n) as u32);
    let mut count = 0u64;
    let mut digits = vec![0u32; n * n];
    for step in 0..total {
        if step > 0 {
            for d in digits.iter_mut() {
                *d += 1;
                if *d < f.q {
                    break;
                }
                *d = 0;
            }
        }
        let mut x = Mat::zero(n);
        for (idx, &v) in digits.iter().enumerate() {
            x.set(idx / n, idx % n, v);
        }
        if x.mul(s, f) != s.mul(&x, f) {
            continue;
        }
        let det = x.det(f);
        let ok = match kind {
            GroupKind::GL => det != 0,
            GroupKind::SL => det == 1,
        };
        if ok {
            count += 1;
        }
    }
    count
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn table(kind: GroupKind, n: usize, p: u32, k: u32) -> ClassTable {
        let f = FieldSpec::build(p, k).unwrap();
        ClassTable::build(GroupSpec::new(kind, n, f).unwrap()).unwrap()
    }

    #[test]
    fn orders() {
        let f = FieldSpec::build(3, 1).unwrap();
        assert_eq!(GroupSpec::new(GroupKind::GL, 2, f.clone()).unwrap().order(), 48);
        assert_eq!(GroupSpec::new(GroupKind::SL, 2, f).unwrap().order(), 24);
        let f5 = FieldSpec::build(5, 1).unwrap();
        assert_eq!(GroupSpec::new(GroupKind::SL, 2, f5.clone()).unwrap().order(), 120);
        assert_eq!(GroupSpec::new(GroupKind::GL, 3, f5).unwrap().order(), 1_488_000);
    }

    #[test]
    fn order_guard() {
        let f = FieldSpec::build(13, 1).unwrap();
        assert!(matches!(
            GroupSpec::new(GroupKind::GL, 3, f),
            Err(GroupError::GuardExceeded(_))
        ));
        let f3 = FieldSpec::build(3, 1).unwrap();
        assert!(matches!(
            GroupSpec::new(GroupKind::GL, 5, f3),
            Err(GroupError::BadN(5))
        ));
    }

    #[test]
    fn gl2_3_classes() {
        let t = table(GroupKind::GL, 2, 3, 1);
        assert_eq!(t.num_classes(), 8);
        assert_eq!(t.sizes.iter().sum::<u64>(), 48);
        let id = t.identity_class();
        assert_eq!(t.sizes[id], 1);
        assert_eq!(t.cent_orders[id], 48);
    }

    #[test]
    fn sl2_5_classes() {
        let t = table(GroupKind::SL, 2, 5, 1);
        assert_eq!(t.spec.order(), 120);
        assert_eq!(t.num_classes(), 9);
        let mut sizes = t.sizes.clone();
        sizes.sort_unstable();
        assert_eq!(sizes, vec![1, 1, 12, 12, 12, 12, 20, 20, 30]);
    }

    #[test]
    fn class_assignment_consistent() {
        for t in [
            table(GroupKind::GL, 2, 3, 1),
            table(GroupKind::SL, 2, 5, 1),
            table(GroupKind::GL, 2, 2, 2),
            table(GroupKind::SL, 3, 3, 1),
        ] {
            let f = &t.spec.field;
            // class_of(rep) = own index; rep is least in class
            for (i, rep) in t.reps.iter().enumerate() {
                assert_eq!(t.class_of(rep), Some(i));
                assert!(t.elements(i).iter().all(|m| m.pack() >= rep.pack()));
                assert_eq!(t.elements(i).len() as u64, t.sizes[i]);
            }
            // inverse map is an involution preserving sizes
            for (i, &inv) in t.inverse_map.iter().enumerate() {
                assert_eq!(t.inverse_map[inv], i);
                assert_eq!(t.sizes[i], t.sizes[inv]);
            }
            // class equation
            assert_eq!(t.sizes.iter().sum::<u64>(), t.spec.order());
            // conjugation stays in class, random spot checks
            let mut rng = ChaCha8Rng::seed_from_u64(7);
            let all: Vec<&Mat> = (0..t.num_classes()).flat_map(|c| t.elements(c)).collect();
            for _ in 0..50 {
                let g = all[rng.gen_range(0..all.len())];
                let h = all[rng.gen_range(0..all.len())];
                let conj = h.mul(g, f).mul(&h.inv(f), f);
                assert_eq!(t.class_of(&conj), t.class_of(g));
            }
        }
    }

    #[test]
    fn centralizer_orders_match_direct_count() {
        for t in [table(GroupKind::GL, 2, 3, 1), table(GroupKind::SL, 2, 5, 1)] {
            let mut rng = ChaCha8Rng::seed_from_u64(11);
            for _ in 0..10 {
                let i = rng.gen_range(0..t.num_classes());
                let direct =
                    centralizer_order_bruteforce(t.spec.kind, &t.reps[i], &t.spec.field);
                assert_eq!(direct, t.cent_orders[i], "class {i}");
            }
        }
    }

    #[test]
    fn structure_constants_identity_row() {
        // with z_k fixed, the identity class contributes exactly one
        // factorization of z_j and none of any other representative
        let t = table(GroupKind::GL, 2, 3, 1);
        let id = t.identity_class();
        for j in 0..t.num_classes() {
            let row = t.structure_constants(id, j);
            for (k, &v) in row.iter().enumerate() {
                assert_eq!(v, u64::from(k == j));
            }
            // the class-level count N_{ijk}·|C_k| recovers |C_j| on the diagonal
            assert_eq!(row[j] * t.sizes[j], t.sizes[j]);
        }
    }

    #[test]
    fn structure_constants_mass_conservation() {
        for t in [
            table(GroupKind::GL, 2, 3, 1),
            table(GroupKind::GL, 2, 5, 1),
            table(GroupKind::SL, 2, 5, 1),
            table(GroupKind::SL, 2, 7, 1),
        ] {
            let tensor = t.structure_tensor();
            let c = t.num_classes();
            for i in 0..c {
                for j in 0..c {
                    let mass: u64 =
                        (0..c).map(|k| tensor[i][j][k] * t.sizes[k]).sum();
                    assert_eq!(mass, t.sizes[i] * t.sizes[j], "classes ({i},{j})");
                    // tensor agrees with the per-pair routine
                    assert_eq!(tensor[i][j], t.structure_constants(i, j));
                }
            }
        }
    }

    #[test]
    fn structure_constants_cyclic_symmetry() {
        // S(i,j,k) := #{(x,y,z) ∈ Cᵢ×Cⱼ×C_k : xyz = 1} = |C_k|·N_{i,j,inv(k)}
        // is invariant under cyclic permutation of (i,j,k)
        let t = table(GroupKind::GL, 2, 3, 1);
        let tensor = t.structure_tensor();
        let c = t.num_classes();
        let s = |i: usize, j: usize, k: usize| tensor[i][j][t.inverse_map[k]] * t.sizes[k];
        for i in 0..c {
            for j in 0..c {
                for k in 0..c {
                    assert_eq!(s(i, j, k), s(j, k, i));
                }
            }
        }
    }

    #[test]
    fn sl2_5_transvection_square_support() {
        // products of a unipotent class with itself: mass check plus the
        // identity class appears iff the class meets its own inverse class
        let t = table(GroupKind::SL, 2, 5, 1);
        let f = &t.spec.field;
        let i = (0..t.num_classes())
            .find(|&c| t.sizes[c] == 12 && {
                let r = t.reps[c];
                r.char_poly(f) == vec![1, f.neg(2), 1] // (x-1)^2
            })
            .expect("a unipotent class of size 12 exists");
        let row = t.structure_constants(i, i);
        let id = t.identity_class();
        // brute-force oracle: count pairs directly
        let mut direct = 0u64;
        for x in t.elements(i) {
            for y in t.elements(i) {
                if x.mul(y, f) == Mat::identity(2) {
                    direct += 1;
                }
            }
        }
        assert_eq!(row[id], direct);
        let is_real = t.inverse_map[i] == i;
        assert_eq!(direct > 0, is_real);
    }
}
