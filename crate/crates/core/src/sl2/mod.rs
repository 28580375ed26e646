//! 2×2 matrices over a ring, congruence subgroups of `SL₂(O_D)`, subgroup
//! closures and projective-line orbits over finite rings, and the Nori
//! exponential over prime fields.

mod closure;
mod nori;

pub use closure::{closure, orbit_of_base, Orbit, SubgroupClosure};
pub use nori::{nori_exp, nori_log, nori_log_exp, nori_order_check, random_unipotent};

use std::fmt;

use crate::error::{Error, Result};
use crate::ideal::IdealHNF;
use crate::quad_order::{Order, QuadInt};
use crate::quotient::{QuotElem, QuotRing};
use crate::ring::{Integers, Ring};

/// The matrix `(a b; c d)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Mat2<E> {
    pub a: E,
    pub b: E,
    pub c: E,
    pub d: E,
}

impl<E: Copy + PartialEq> Mat2<E> {
    pub const fn new(a: E, b: E, c: E, d: E) -> Self {
        Mat2 { a, b, c, d }
    }

    pub fn entries(&self) -> [E; 4] {
        [self.a, self.b, self.c, self.d]
    }

    pub fn map<F, T>(&self, mut f: F) -> Result<Mat2<T>>
    where
        F: FnMut(E) -> Result<T>,
    {
        Ok(Mat2 { a: f(self.a)?, b: f(self.b)?, c: f(self.c)?, d: f(self.d)? })
    }

    pub fn identity<R: Ring<Elem = E>>(r: &R) -> Self {
        Mat2::new(r.one(), r.zero(), r.zero(), r.one())
    }

    pub fn mul<R: Ring<Elem = E>>(&self, r: &R, o: &Self) -> Result<Self> {
        let dot = |x: E, y: E, z: E, w: E| r.add(r.mul(x, y)?, r.mul(z, w)?);
        Ok(Mat2 {
            a: dot(self.a, o.a, self.b, o.c)?,
            b: dot(self.a, o.b, self.b, o.d)?,
            c: dot(self.c, o.a, self.d, o.c)?,
            d: dot(self.c, o.b, self.d, o.d)?,
        })
    }

    pub fn det<R: Ring<Elem = E>>(&self, r: &R) -> Result<E> {
        r.sub(r.mul(self.a, self.d)?, r.mul(self.b, self.c)?)
    }

    pub fn is_unimodular<R: Ring<Elem = E>>(&self, r: &R) -> Result<bool> {
        Ok(self.det(r)? == r.one())
    }

    /// The inverse of a determinant-one matrix, i.e. its adjugate.
    pub fn inverse<R: Ring<Elem = E>>(&self, r: &R) -> Result<Self> {
        if !self.is_unimodular(r)? {
            return Err(Error::NotUnimodular);
        }
        Ok(Mat2 { a: self.d, b: r.neg(self.b)?, c: r.neg(self.c)?, d: self.a })
    }

    /// `self^k` for any integer `k`, by repeated squaring.
    pub fn pow<R: Ring<Elem = E>>(&self, r: &R, k: i64) -> Result<Self> {
        let mut base = if k < 0 { self.inverse(r)? } else { *self };
        let mut e = k.unsigned_abs();
        let mut acc = Self::identity(r);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(r, &base)?;
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(r, &base)?;
            }
        }
        Ok(acc)
    }

    pub fn trace<R: Ring<Elem = E>>(&self, r: &R) -> Result<E> {
        r.add(self.a, self.d)
    }

    /// Product of a word `w₁·w₂·…·w_k`.
    pub fn product<R: Ring<Elem = E>>(r: &R, word: &[Self]) -> Result<Self> {
        word.iter().try_fold(Self::identity(r), |acc, m| acc.mul(r, m))
    }
}

impl<E: fmt::Display> fmt::Display for Mat2<E> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}; {}, {})", self.a, self.b, self.c, self.d)
    }
}

pub type IntMat = Mat2<i64>;

impl IntMat {
    pub fn int(a: i64, b: i64, c: i64, d: i64) -> Self {
        Mat2::new(a, b, c, d)
    }

    pub fn int_mul(&self, o: &IntMat) -> Result<IntMat> {
        self.mul(&Integers, o)
    }
}

impl Mat2<QuadInt> {
    /// Builds a matrix from the component pairs of its entries.
    pub fn from_pairs(order: Order, e: [(i64, i64); 4]) -> Result<Self> {
        Ok(Mat2::new(
            order.make(e[0].0, e[0].1)?,
            order.make(e[1].0, e[1].1)?,
            order.make(e[2].0, e[2].1)?,
            order.make(e[3].0, e[3].1)?,
        ))
    }

    /// The pair `(A₁, A₂)` of integer matrices given by the two components.
    pub fn components(&self) -> (IntMat, IntMat) {
        (
            Mat2::new(self.a.x(), self.b.x(), self.c.x(), self.d.x()),
            Mat2::new(self.a.y(), self.b.y(), self.c.y(), self.d.y()),
        )
    }
}

/// Entrywise reduction `SL₂(O_D) → SL₂(O_D/𝔞)`.
pub fn reduce_mat(m: &Mat2<QuadInt>, ring: &QuotRing) -> Result<Mat2<QuotElem>> {
    if !m.is_unimodular(&m.a.order())? {
        return Err(Error::NotUnimodular);
    }
    m.map(|z| ring.reduce(&z))
}

/// The three congruence subgroup families of level `𝔞`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GammaFamily {
    /// `Γ(𝔞)`: `A ≡ Id`.
    Principal,
    /// `Γ₀(𝔞)`: `c ≡ 0`.
    Gamma0,
    /// `Γ₁(𝔞)`: `c ≡ 0` and `a ≡ d ≡ 1`.
    Gamma1,
}

pub fn in_gamma_family(m: &Mat2<QuadInt>, ideal: &IdealHNF, family: GammaFamily) -> Result<bool> {
    let order = m.a.order();
    if !m.is_unimodular(&order)? {
        return Err(Error::NotUnimodular);
    }
    let one = order.one();
    let c0 = ideal.contains(&m.c);
    let diag = ideal.contains(&m.a.sub(&one)?) && ideal.contains(&m.d.sub(&one)?);
    Ok(match family {
        GammaFamily::Gamma0 => c0,
        GammaFamily::Gamma1 => c0 && diag,
        GammaFamily::Principal => c0 && diag && ideal.contains(&m.b),
    })
}

/// The elementary matrices `(1 1; 0 1)`, `(1 w; 0 1)` and their transposes,
/// which generate `SL₂(O_D/𝔞)`.
pub fn elementary_generators(ring: &QuotRing) -> Vec<Mat2<QuotElem>> {
    let (one, zero) = (ring.one(), ring.zero());
    let w = ring.reduce(&ring.modulus().order().w()).expect("same order");
    vec![
        Mat2::new(one, one, zero, one),
        Mat2::new(one, w, zero, one),
        Mat2::new(one, zero, one, one),
        Mat2::new(one, zero, w, one),
    ]
}

/// Whether the words lie in pairwise distinct right cosets `Γ₀(𝔞)·W`,
/// i.e. no `Wᵢ·Wⱼ⁻¹` with `i ≠ j` has lower-left entry in `𝔞`.
pub fn pairwise_incongruent(words: &[Mat2<QuadInt>], ideal: &IdealHNF) -> Result<bool> {
    let order = ideal.order();
    let inverses = words.iter().map(|w| w.inverse(&order)).collect::<Result<Vec<_>>>()?;
    for (i, wi) in words.iter().enumerate() {
        for (j, wj_inv) in inverses.iter().enumerate() {
            if i != j {
                let c = order.add(order.mul(wi.c, wj_inv.a)?, order.mul(wi.d, wj_inv.c)?)?;
                if ideal.contains(&c) {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}
