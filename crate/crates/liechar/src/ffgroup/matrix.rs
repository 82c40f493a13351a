//! Dense n×n matrices over a small finite field, n ≤ 4, with entries stored
//! as field codes. Matrices pack into a `u128` key (5 bits per entry,
//! row-major) for hashing and deterministic ordering.

use super::field::FieldSpec;

pub const MAX_N: usize = 4;

/// An n×n matrix of field-element codes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Mat {
    pub n: usize,
    data: [u8; MAX_N * MAX_N],
}

impl Mat {
    pub fn zero(n: usize) -> Mat {
        assert!((1..=MAX_N).contains(&n));
        Mat {
            n,
            data: [0; MAX_N * MAX_N],
        }
    }

    pub fn identity(n: usize) -> Mat {
        let mut m = Mat::zero(n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    pub fn from_rows(rows: &[Vec<u32>]) -> Mat {
        let n = rows.len();
        let mut m = Mat::zero(n);
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), n, "matrix must be square");
            for (j, &v) in row.iter().enumerate() {
                m.set(i, j, v);
            }
        }
        m
    }

    pub fn diag(entries: &[u32]) -> Mat {
        let mut m = Mat::zero(entries.len());
        for (i, &v) in entries.iter().enumerate() {
            m.set(i, i, v);
        }
        m
    }

    /// Elementary transvection I + α·E_{ij}, i ≠ j.
    pub fn transvection(n: usize, i: usize, j: usize, alpha: u32) -> Mat {
        assert_ne!(i, j);
        let mut m = Mat::identity(n);
        m.set(i, j, alpha);
        m
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> u32 {
        self.data[i * self.n + j] as u32
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: u32) {
        self.data[i * self.n + j] = v as u8;
    }

    /// Row-major packing, 5 bits per entry: entry (0,0) in the lowest bits.
    /// Key order therefore sorts by the *last* entry first; it is a fixed,
    /// documented total order used for canonical class representatives.
    pub fn pack(&self) -> u128 {
        let mut key = 0u128;
        for idx in (0..self.n * self.n).rev() {
            key = (key << 5) | self.data[idx] as u128;
        }
        key
    }

    pub fn unpack(n: usize, mut key: u128) -> Mat {
        let mut m = Mat::zero(n);
        for idx in 0..n * n {
            m.data[idx] = (key & 31) as u8;
            key >>= 5;
        }
        m
    }

    pub fn row_major(&self) -> Vec<u32> {
        (0..self.n * self.n).map(|i| self.data[i] as u32).collect()
    }

    pub fn mul(&self, other: &Mat, f: &FieldSpec) -> Mat {
        debug_assert_eq!(self.n, other.n);
        let n = self.n;
        let mut out = Mat::zero(n);
        for i in 0..n {
            for j in 0..n {
                let mut acc = 0;
                for l in 0..n {
                    acc = f.add(acc, f.mul(self.get(i, l), other.get(l, j)));
                }
                out.set(i, j, acc);
            }
        }
        out
    }

    pub fn det(&self, f: &FieldSpec) -> u32 {
        let n = self.n;
        match n {
            1 => self.get(0, 0),
            2 => f.sub(
                f.mul(self.get(0, 0), self.get(1, 1)),
                f.mul(self.get(0, 1), self.get(1, 0)),
            ),
            _ => {
                // cofactor expansion along the first row
                let mut acc = 0;
                for j in 0..n {
                    let mut minor = Mat::zero(n - 1);
                    for r in 1..n {
                        let mut cc = 0;
                        for c in 0..n {
                            if c == j {
                                continue;
                            }
                            minor.set(r - 1, cc, self.get(r, c));
                            cc += 1;
                        }
                    }
                    let term = f.mul(self.get(0, j), minor.det(f));
                    acc = if j % 2 == 0 {
                        f.add(acc, term)
                    } else {
                        f.sub(acc, term)
                    };
                }
                acc
            }
        }
    }

    /// Inverse by Gauss-Jordan elimination; panics if singular.
    pub fn inv(&self, f: &FieldSpec) -> Mat {
        let n = self.n;
        let mut a = *self;
        let mut b = Mat::identity(n);
        for col in 0..n {
            let pivot = (col..n)
                .find(|&r| a.get(r, col) != 0)
                .expect("matrix is singular");
            if pivot != col {
                for j in 0..n {
                    let (x, y) = (a.get(col, j), a.get(pivot, j));
                    a.set(col, j, y);
                    a.set(pivot, j, x);
                    let (x, y) = (b.get(col, j), b.get(pivot, j));
                    b.set(col, j, y);
                    b.set(pivot, j, x);
                }
            }
            let s = f.inv(a.get(col, col));
            for j in 0..n {
                a.set(col, j, f.mul(s, a.get(col, j)));
                b.set(col, j, f.mul(s, b.get(col, j)));
            }
            for r in 0..n {
                if r == col || a.get(r, col) == 0 {
                    continue;
                }
                let c = a.get(r, col);
                for j in 0..n {
                    a.set(r, j, f.sub(a.get(r, j), f.mul(c, a.get(col, j))));
                    b.set(r, j, f.sub(b.get(r, j), f.mul(c, b.get(col, j))));
                }
            }
        }
        b
    }

    /// Rank by Gaussian elimination.
    pub fn rank(&self, f: &FieldSpec) -> usize {
        let n = self.n;
        let mut a = *self;
        let mut rank = 0;
        for col in 0..n {
            let Some(pivot) = (rank..n).find(|&r| a.get(r, col) != 0) else {
                continue;
            };
            if pivot != rank {
                for j in 0..n {
                    let (x, y) = (a.get(rank, j), a.get(pivot, j));
                    a.set(rank, j, y);
                    a.set(pivot, j, x);
                }
            }
            for r in (rank + 1)..n {
                if a.get(r, col) == 0 {
                    continue;
                }
                let c = f.mul(a.get(r, col), f.inv(a.get(rank, col)));
                for j in 0..n {
                    a.set(r, j, f.sub(a.get(r, j), f.mul(c, a.get(rank, j))));
                }
            }
            rank += 1;
        }
        rank
    }

    /// Characteristic polynomial det(xI − g), ascending coefficients,
    /// by symbolic cofactor expansion (degree ≤ 4 keeps this tiny).
    pub fn char_poly(&self, f: &FieldSpec) -> Vec<u32> {
        // entries of xI - g as degree-1 polynomials [c0, c1]
        let n = self.n;
        let entries: Vec<Vec<u32>> = (0..n * n)
            .map(|idx| {
                let (i, j) = (idx / n, idx % n);
                vec![f.neg(self.get(i, j)), if i == j { 1 } else { 0 }]
            })
            .collect();
        poly_mat_det(&entries, n, f)
    }
}

fn poly_add(a: &[u32], b: &[u32], f: &FieldSpec) -> Vec<u32> {
    (0..a.len().max(b.len()))
        .map(|i| f.add(*a.get(i).unwrap_or(&0), *b.get(i).unwrap_or(&0)))
        .collect()
}

fn poly_neg(a: &[u32], f: &FieldSpec) -> Vec<u32> {
    a.iter().map(|&c| f.neg(c)).collect()
}

pub(super) fn poly_mul(a: &[u32], b: &[u32], f: &FieldSpec) -> Vec<u32> {
    let mut out = vec![0u32; a.len() + b.len() - 1];
    for (i, &ai) in a.iter().enumerate() {
        for (j, &bj) in b.iter().enumerate() {
            out[i + j] = f.add(out[i + j], f.mul(ai, bj));
        }
    }
    out
}

fn poly_mat_det(entries: &[Vec<u32>], n: usize, f: &FieldSpec) -> Vec<u32> {
    if n == 1 {
        return entries[0].clone();
    }
    let mut acc = vec![0u32];
    for j in 0..n {
        let minor: Vec<Vec<u32>> = (1..n)
            .flat_map(|r| {
                (0..n)
                    .filter(|&c| c != j)
                    .map(move |c| entries[r * n + c].clone())
            })
            .collect();
        let mut term = poly_mul(&entries[j], &poly_mat_det(&minor, n - 1, f), f);
        if j % 2 == 1 {
            term = poly_neg(&term, f);
        }
        acc = poly_add(&acc, &term, f);
    }
    acc
}
