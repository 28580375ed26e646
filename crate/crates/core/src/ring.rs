//! Minimal ring abstractions shared by the matrix code.
//!
//! A ring is a context object; its elements are small `Copy` values. Finite
//! rings additionally enumerate their elements, expose a dense index and know
//! their units, which is what projective-line canonicalization needs.

use std::fmt::Debug;
use std::hash::Hash;

use crate::arith;
use crate::error::{Error, Result};

pub trait Ring: Sync {
    type Elem: Copy + Eq + Hash + Debug + Send + Sync;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn add(&self, a: Self::Elem, b: Self::Elem) -> Result<Self::Elem>;
    fn sub(&self, a: Self::Elem, b: Self::Elem) -> Result<Self::Elem>;
    fn mul(&self, a: Self::Elem, b: Self::Elem) -> Result<Self::Elem>;
    fn neg(&self, a: Self::Elem) -> Result<Self::Elem>;
}

pub trait FiniteRing: Ring {
    /// Number of elements.
    fn size(&self) -> u64;
    /// A bijection onto `0..size()`. Its order is the canonical order used
    /// when picking projective representatives.
    fn index(&self, a: Self::Elem) -> u64;
    fn from_index(&self, i: u64) -> Self::Elem;
    fn units(&self) -> &[Self::Elem];
    fn is_unit(&self, a: Self::Elem) -> bool;
    /// Whether `(x, y)` generates the unit ideal.
    fn is_unimodular(&self, x: Self::Elem, y: Self::Elem) -> bool;

    fn elements(&self) -> Vec<Self::Elem> {
        (0..self.size()).map(|i| self.from_index(i)).collect()
    }

    /// Canonical representative of the projective point `(x : y)`, or `None`
    /// if the pair is not unimodular: the unit multiple `(t·x, t·y)` that is
    /// lexicographically least in index order.
    fn proj_canonical(&self, x: Self::Elem, y: Self::Elem) -> Option<(Self::Elem, Self::Elem)> {
        if !self.is_unimodular(x, y) {
            return None;
        }
        self.units()
            .iter()
            .map(|&t| {
                let tx = self.mul(t, x).expect("finite ring multiplication");
                let ty = self.mul(t, y).expect("finite ring multiplication");
                ((self.index(tx), self.index(ty)), (tx, ty))
            })
            .min_by_key(|(k, _)| *k)
            .map(|(_, p)| p)
    }
}

/// Every point of `P¹(R)` by a full scan of pairs, in index order.
pub fn projective_line<R: FiniteRing>(ring: &R) -> Vec<(R::Elem, R::Elem)> {
    let els = ring.elements();
    let mut pts = std::collections::HashSet::new();
    for &x in &els {
        for &y in &els {
            if let Some(p) = ring.proj_canonical(x, y) {
                pts.insert((ring.index(p.0), ring.index(p.1)));
            }
        }
    }
    let mut keys: Vec<_> = pts.into_iter().collect();
    keys.sort_unstable();
    keys.into_iter().map(|(i, j)| (ring.from_index(i), ring.from_index(j))).collect()
}

/// The ring `ℤ` with checked arithmetic.
#[derive(Debug, Clone, Copy, Default)]
pub struct Integers;

impl Ring for Integers {
    type Elem = i64;
    fn zero(&self) -> i64 {
        0
    }
    fn one(&self) -> i64 {
        1
    }
    fn add(&self, a: i64, b: i64) -> Result<i64> {
        arith::add(a, b)
    }
    fn sub(&self, a: i64, b: i64) -> Result<i64> {
        arith::sub(a, b)
    }
    fn mul(&self, a: i64, b: i64) -> Result<i64> {
        arith::mul(a, b)
    }
    fn neg(&self, a: i64) -> Result<i64> {
        arith::neg(a)
    }
}

/// The ring `ℤ/kℤ` with residues in `0..k`.
#[derive(Debug, Clone)]
pub struct Zmod {
    k: i64,
    units: Vec<i64>,
}

impl Zmod {
    pub fn new(k: i64) -> Result<Self> {
        if k < 1 {
            return Err(Error::PreconditionViolated(format!("modulus must be >= 1, got {k}")));
        }
        let units = (0..k).filter(|&a| arith::gcd(a, k) == 1).collect();
        Ok(Zmod { k, units })
    }

    pub fn modulus(&self) -> i64 {
        self.k
    }

    pub fn reduce(&self, a: i64) -> i64 {
        a.rem_euclid(self.k)
    }

    pub fn inv(&self, a: i64) -> Option<i64> {
        arith::inv_mod(a, self.k)
    }
}

impl Ring for Zmod {
    type Elem = i64;
    fn zero(&self) -> i64 {
        0
    }
    fn one(&self) -> i64 {
        1 % self.k
    }
    fn add(&self, a: i64, b: i64) -> Result<i64> {
        Ok(((a as i128 + b as i128).rem_euclid(self.k as i128)) as i64)
    }
    fn sub(&self, a: i64, b: i64) -> Result<i64> {
        Ok(((a as i128 - b as i128).rem_euclid(self.k as i128)) as i64)
    }
    fn mul(&self, a: i64, b: i64) -> Result<i64> {
        Ok(((a as i128 * b as i128).rem_euclid(self.k as i128)) as i64)
    }
    fn neg(&self, a: i64) -> Result<i64> {
        Ok((-(a as i128)).rem_euclid(self.k as i128) as i64)
    }
}

impl FiniteRing for Zmod {
    fn size(&self) -> u64 {
        self.k as u64
    }
    fn index(&self, a: i64) -> u64 {
        a.rem_euclid(self.k) as u64
    }
    fn from_index(&self, i: u64) -> i64 {
        i as i64
    }
    fn units(&self) -> &[i64] {
        &self.units
    }
    fn is_unit(&self, a: i64) -> bool {
        arith::gcd(a, self.k) == 1
    }
    fn is_unimodular(&self, x: i64, y: i64) -> bool {
        arith::gcd(arith::gcd(x, y), self.k) == 1
    }
}

/// `[SL₂(ℤ) : Γ₀(n)] = n·∏_{p | n}(1 + 1/p)`.
pub fn sl2z_gamma0_index(n: i64) -> i64 {
    assert!(n >= 1, "level must be positive");
    arith::factor(n).iter().fold(n, |acc, &(p, _)| acc / p * (p + 1))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn classical_gamma0_index() {
        assert_eq!(sl2z_gamma0_index(1), 1);
        assert_eq!(sl2z_gamma0_index(2), 3);
        assert_eq!(sl2z_gamma0_index(6), 12);
        assert_eq!(sl2z_gamma0_index(9), 12);
    }

    #[test]
    fn zmod_p1_count_matches_index() {
        for k in 1..=30 {
            let r = Zmod::new(k).unwrap();
            let pts = projective_line(&r);
            assert!(pts.iter().all(|&(x, y)| r.proj_canonical(x, y) == Some((x, y))));
            assert_eq!(pts.len() as i64, sl2z_gamma0_index(k), "k={k}");
        }
    }

    #[test]
    fn zmod_units() {
        let r = Zmod::new(12).unwrap();
        assert_eq!(r.units(), &[1, 5, 7, 11]);
        assert_eq!(r.inv(5), Some(5));
        assert_eq!(r.inv(4), None);
        assert_eq!(Zmod::new(1).unwrap().one(), 0);
    }
}
