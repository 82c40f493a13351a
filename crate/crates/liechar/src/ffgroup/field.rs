//! Small finite fields 𝔽_q, q = p^k ≤ 32, with fully tabulated arithmetic.
//!
//! Elements are integer codes 0..q: the code of Σ cᵢ·xⁱ (a residue modulo
//! the field's irreducible polynomial) is Σ cᵢ·pⁱ. Code 0 is zero, code 1
//! is one. All binary operations are table lookups.

use serde::Serialize;
use thiserror::Error;

pub const MAX_Q: u32 = 32;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FieldError {
    #[error("{0} is not prime")]
    NotPrime(u32),
    #[error("field size {0} exceeds the engine guard {MAX_Q}")]
    TooLarge(u32),
    #[error("extension degree must be at least 1")]
    BadDegree,
}

/// A concrete finite field with tabulated arithmetic.
#[derive(Debug, Clone, Serialize)]
pub struct FieldSpec {
    pub p: u32,
    pub k: u32,
    pub q: u32,
    /// Monic irreducible modulus, ascending coefficients (length k+1);
    /// the lexicographically least monic irreducible of degree k.
    pub modulus: Vec<u32>,
    #[serde(skip)]
    add_t: Vec<u8>,
    #[serde(skip)]
    mul_t: Vec<u8>,
    #[serde(skip)]
    neg_t: Vec<u8>,
    #[serde(skip)]
    inv_t: Vec<u8>,
}

fn is_prime(p: u32) -> bool {
    p >= 2 && (2..p).take_while(|d| d * d <= p).all(|d| p % d != 0)
}

/// Multiply two polynomials over 𝔽_p and reduce modulo a monic modulus.
fn poly_mulmod(a: &[u32], b: &[u32], modulus: &[u32], p: u32) -> Vec<u32> {
    let k = modulus.len() - 1;
    let mut prod = vec![0u32; a.len() + b.len()];
    for (i, &ai) in a.iter().enumerate() {
        for (j, &bj) in b.iter().enumerate() {
            prod[i + j] = (prod[i + j] + ai * bj) % p;
        }
    }
    // reduce: x^k = -(modulus minus leading term)
    for d in (k..prod.len()).rev() {
        let c = prod[d];
        if c == 0 {
            continue;
        }
        prod[d] = 0;
        for (j, &mj) in modulus.iter().take(k).enumerate() {
            let idx = d - k + j;
            prod[idx] = (prod[idx] + c * (p - mj % p)) % p;
        }
    }
    prod.truncate(k.max(1));
    prod
}

fn code_of(coeffs: &[u32], p: u32) -> u32 {
    coeffs.iter().rev().fold(0, |acc, &c| acc * p + c)
}

fn coeffs_of(code: u32, p: u32, k: u32) -> Vec<u32> {
    let mut c = code;
    (0..k.max(1))
        .map(|_| {
            let d = c % p;
            c /= p;
            d
        })
        .collect()
}

/// Does the monic polynomial (ascending coefficients) have a root in 𝔽_p?
fn has_root(poly: &[u32], p: u32) -> bool {
    (0..p).any(|x| {
        poly.iter().rev().fold(0u32, |acc, &c| (acc * x + c) % p) == 0
    })
}

fn poly_rem(mut a: Vec<u32>, b: &[u32], p: u32) -> Vec<u32> {
    // remainder of a by monic b, both ascending
    let db = b.len() - 1;
    while a.len() > db {
        let c = *a.last().unwrap();
        let da = a.len() - 1;
        if c != 0 {
            for (j, &bj) in b.iter().enumerate().take(db) {
                let idx = da - db + j;
                a[idx] = (a[idx] + c * (p - bj % p)) % p;
            }
        }
        a.pop();
        while a.len() > 1 && *a.last().unwrap() == 0 {
            if a.len() - 1 <= db {
                break;
            }
            a.pop();
        }
    }
    while a.len() > 1 && *a.last().unwrap() == 0 {
        a.pop();
    }
    a
}

/// Irreducibility over 𝔽_p for degree ≤ 5: no linear factors, and for
/// degree ≥ 4 also no irreducible quadratic factors (any factorization of a
/// degree ≤ 5 polynomial contains a factor of degree ≤ 2).
fn is_irreducible(poly: &[u32], p: u32) -> bool {
    let deg = poly.len() - 1;
    debug_assert!((1..=5).contains(&deg));
    if deg == 1 {
        return true;
    }
    if has_root(poly, p) {
        return false;
    }
    if deg >= 4 {
        for c0 in 0..p {
            for c1 in 0..p {
                let quad = [c0, c1, 1];
                if !is_irreducible(&quad, p) {
                    continue;
                }
                let r = poly_rem(poly.to_vec(), &quad, p);
                if r.iter().all(|&c| c == 0) {
                    return false;
                }
            }
        }
    }
    true
}

impl FieldSpec {
    /// Build 𝔽_{p^k} with the lexicographically least monic irreducible
    /// modulus (coefficients compared low-degree first via the integer
    /// code Σ cᵢ pⁱ).
    pub fn build(p: u32, k: u32) -> Result<FieldSpec, FieldError> {
        if !is_prime(p) {
            return Err(FieldError::NotPrime(p));
        }
        if k == 0 {
            return Err(FieldError::BadDegree);
        }
        let q = p.checked_pow(k).filter(|&q| q <= MAX_Q).ok_or_else(|| {
            FieldError::TooLarge(p.saturating_pow(k))
        })?;
        let modulus = (0..q)
            .map(|code| {
                let mut m = coeffs_of(code, p, k);
                m.push(1);
                m
            })
            .find(|m| is_irreducible(m, p))
            .expect("an irreducible polynomial of every degree exists");

        let qs = q as usize;
        let mut add_t = vec![0u8; qs * qs];
        let mut mul_t = vec![0u8; qs * qs];
        let mut neg_t = vec![0u8; qs];
        let mut inv_t = vec![0u8; qs];
        for a in 0..q {
            let ca = coeffs_of(a, p, k);
            let cneg: Vec<u32> = ca.iter().map(|&c| (p - c) % p).collect();
            neg_t[a as usize] = code_of(&cneg, p) as u8;
            for b in 0..q {
                let cb = coeffs_of(b, p, k);
                let sum: Vec<u32> = ca.iter().zip(&cb).map(|(&x, &y)| (x + y) % p).collect();
                add_t[(a * q + b) as usize] = code_of(&sum, p) as u8;
                let prod = poly_mulmod(&ca, &cb, &modulus, p);
                mul_t[(a * q + b) as usize] = code_of(&prod, p) as u8;
            }
        }
        for a in 1..q {
            let b = (1..q)
                .find(|&b| mul_t[(a * q + b) as usize] == 1)
                .expect("every nonzero element is invertible");
            inv_t[a as usize] = b as u8;
        }
        Ok(FieldSpec {
            p,
            k,
            q,
            modulus,
            add_t,
            mul_t,
            neg_t,
            inv_t,
        })
    }

    #[inline]
    pub fn add(&self, a: u32, b: u32) -> u32 {
        self.add_t[(a * self.q + b) as usize] as u32
    }

    #[inline]
    pub fn sub(&self, a: u32, b: u32) -> u32 {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: u32, b: u32) -> u32 {
        self.mul_t[(a * self.q + b) as usize] as u32
    }

    #[inline]
    pub fn neg(&self, a: u32) -> u32 {
        self.neg_t[a as usize] as u32
    }

    /// Multiplicative inverse; panics on zero.
    #[inline]
    pub fn inv(&self, a: u32) -> u32 {
        assert!(a != 0, "inverse of zero");
        self.inv_t[a as usize] as u32
    }

    pub fn pow(&self, a: u32, mut e: u64) -> u32 {
        let mut base = a;
        let mut acc = 1;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    /// Multiplicative order of a nonzero element.
    pub fn order(&self, a: u32) -> u32 {
        assert!(a != 0);
        let mut x = a;
        let mut ord = 1;
        while x != 1 {
            x = self.mul(x, a);
            ord += 1;
        }
        ord
    }

    /// The least element (by code) of multiplicative order exactly q−1.
    pub fn primitive_element(&self) -> u32 {
        (1..self.q)
            .find(|&a| self.order(a) == self.q - 1)
            .expect("cyclic multiplicative group has a generator")
    }

    /// The least element of multiplicative order exactly d (requires
    /// d | q−1).
    pub fn element_of_order(&self, d: u32) -> Option<u32> {
        if d == 0 || (self.q - 1) % d != 0 {
            return None;
        }
        (1..self.q).find(|&a| self.order(a) == d)
    }
}
