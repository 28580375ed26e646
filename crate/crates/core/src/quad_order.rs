//! The quadratic order `O_{d²} = {(x, y) ∈ ℤ² : x ≡ y (mod d)}`.
//!
//! Elements are stored as the component pair `(x, y)`; the standard-basis
//! coordinates `(u, v)` with `z = u·𝟙 + v·w`, `𝟙 = (1, 1)`, `w = (0, d)` are
//! derived on demand. Every value carries its `d`, and mixing two orders is an
//! error rather than a silent coercion.

use std::fmt;

use num_rational::Ratio;

use crate::arith;
use crate::error::{Error, Result};
use crate::ring::Ring;

/// The order `O_D` with `D = d²`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Order {
    d: i64,
}

/// An element of `O_D`, stored as its component pair.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct QuadInt {
    d: i64,
    x: i64,
    y: i64,
}

impl Order {
    pub fn new(d: i64) -> Result<Self> {
        if d < 2 {
            return Err(Error::PreconditionViolated(format!("d must be >= 2, got {d}")));
        }
        Ok(Order { d })
    }

    pub fn d(&self) -> i64 {
        self.d
    }

    /// The discriminant `D = d²`.
    pub fn discriminant(&self) -> i64 {
        self.d * self.d
    }

    /// The element `(x, y)`, provided `x ≡ y (mod d)`.
    pub fn make(&self, x: i64, y: i64) -> Result<QuadInt> {
        if (x as i128 - y as i128).rem_euclid(self.d as i128) != 0 {
            return Err(Error::NotInOrder { d: self.d, x, y });
        }
        Ok(QuadInt { d: self.d, x, y })
    }

    /// The element `u·𝟙 + v·w = (u, u + v·d)`.
    pub fn from_coords(&self, u: i64, v: i64) -> Result<QuadInt> {
        let y = arith::add(u, arith::mul(v, self.d)?)?;
        Ok(QuadInt { d: self.d, x: u, y })
    }

    /// The rational integer `k·𝟙`.
    pub fn int(&self, k: i64) -> QuadInt {
        QuadInt { d: self.d, x: k, y: k }
    }

    pub fn zero(&self) -> QuadInt {
        self.int(0)
    }

    pub fn one(&self) -> QuadInt {
        self.int(1)
    }

    pub fn w(&self) -> QuadInt {
        QuadInt { d: self.d, x: 0, y: self.d }
    }

    /// Membership of a rational pair via trace and norm.
    ///
    /// `z` lies in `O_D` iff `tr z, 𝒩 z ∈ ℤ` and some `v ∈ ℤ` satisfies
    /// `tr z ≡ 2v` and `𝒩 z ≡ v² (mod d)`. Only valid for squarefree `d`.
    pub fn member_by_trace_norm(&self, z: (Ratio<i64>, Ratio<i64>)) -> Result<bool> {
        if !arith::is_squarefree(self.d) {
            return Err(Error::PreconditionViolated(format!(
                "trace-norm membership needs squarefree d, got {}",
                self.d
            )));
        }
        let tr = z.0 + z.1;
        let nm = z.0 * z.1;
        if !tr.is_integer() || !nm.is_integer() {
            return Ok(false);
        }
        let (t, n, d) = (tr.to_integer() as i128, nm.to_integer() as i128, self.d as i128);
        Ok((0..d).any(|v| (t - 2 * v).rem_euclid(d) == 0 && (n - v * v).rem_euclid(d) == 0))
    }

    fn check(&self, z: &QuadInt) -> Result<()> {
        if z.d != self.d {
            return Err(Error::ContextMismatch { left: self.d, right: z.d });
        }
        Ok(())
    }
}

impl QuadInt {
    pub fn d(&self) -> i64 {
        self.d
    }

    pub fn order(&self) -> Order {
        Order { d: self.d }
    }

    pub fn x(&self) -> i64 {
        self.x
    }

    pub fn y(&self) -> i64 {
        self.y
    }

    /// Standard-basis coordinates `(u, v)` with `self = u·𝟙 + v·w`.
    pub fn coords(&self) -> (i64, i64) {
        (self.x, ((self.y as i128 - self.x as i128) / self.d as i128) as i64)
    }

    pub fn is_zero(&self) -> bool {
        self.x == 0 && self.y == 0
    }

    /// Exactly one component vanishes.
    pub fn is_zero_divisor(&self) -> bool {
        (self.x == 0) != (self.y == 0)
    }

    fn same(&self, o: &QuadInt) -> Result<()> {
        if self.d != o.d {
            return Err(Error::ContextMismatch { left: self.d, right: o.d });
        }
        Ok(())
    }

    pub fn add(&self, o: &QuadInt) -> Result<QuadInt> {
        self.same(o)?;
        Ok(QuadInt { d: self.d, x: arith::add(self.x, o.x)?, y: arith::add(self.y, o.y)? })
    }

    pub fn sub(&self, o: &QuadInt) -> Result<QuadInt> {
        self.same(o)?;
        Ok(QuadInt { d: self.d, x: arith::sub(self.x, o.x)?, y: arith::sub(self.y, o.y)? })
    }

    pub fn mul(&self, o: &QuadInt) -> Result<QuadInt> {
        self.same(o)?;
        Ok(QuadInt { d: self.d, x: arith::mul(self.x, o.x)?, y: arith::mul(self.y, o.y)? })
    }

    pub fn neg(&self) -> Result<QuadInt> {
        Ok(QuadInt { d: self.d, x: arith::neg(self.x)?, y: arith::neg(self.y)? })
    }

    pub fn scale(&self, k: i64) -> Result<QuadInt> {
        Ok(QuadInt { d: self.d, x: arith::mul(self.x, k)?, y: arith::mul(self.y, k)? })
    }

    pub fn pow(&self, e: u32) -> Result<QuadInt> {
        let mut acc = QuadInt { d: self.d, x: 1, y: 1 };
        for _ in 0..e {
            acc = acc.mul(self)?;
        }
        Ok(acc)
    }

    /// The Galois conjugate `(x, y)^σ = (y, x)`.
    pub fn conjugate(&self) -> QuadInt {
        QuadInt { d: self.d, x: self.y, y: self.x }
    }

    /// `𝒩(z) = x·y`.
    pub fn norm(&self) -> Result<i64> {
        arith::mul(self.x, self.y)
    }

    /// `tr(z) = x + y`.
    pub fn trace(&self) -> Result<i64> {
        arith::add(self.x, self.y)
    }

    /// The quotient `q` with `c = self·q`, if it exists in `O_D`.
    pub fn divides(&self, c: &QuadInt) -> Result<Option<QuadInt>> {
        self.same(c)?;
        if self.x == 0 || self.y == 0 {
            return Err(Error::ZeroDivisor);
        }
        let (Some(qx), Some(qy)) = (arith::exact_div(c.x, self.x), arith::exact_div(c.y, self.y))
        else {
            return Ok(None);
        };
        Ok(Order { d: self.d }.make(qx, qy).ok())
    }
}

impl fmt::Display for QuadInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (u, v) = self.coords();
        match (u, v) {
            (u, 0) => write!(f, "{u}"),
            (0, 1) => write!(f, "w"),
            (0, -1) => write!(f, "-w"),
            (0, v) => write!(f, "{v}w"),
            (u, 1) => write!(f, "{u}+w"),
            (u, -1) => write!(f, "{u}-w"),
            (u, v) if v < 0 => write!(f, "{u}{v}w"),
            (u, v) => write!(f, "{u}+{v}w"),
        }
    }
}

impl Ring for Order {
    type Elem = QuadInt;

    fn zero(&self) -> QuadInt {
        self.int(0)
    }
    fn one(&self) -> QuadInt {
        self.int(1)
    }
    fn add(&self, a: QuadInt, b: QuadInt) -> Result<QuadInt> {
        self.check(&a)?;
        a.add(&b)
    }
    fn sub(&self, a: QuadInt, b: QuadInt) -> Result<QuadInt> {
        self.check(&a)?;
        a.sub(&b)
    }
    fn mul(&self, a: QuadInt, b: QuadInt) -> Result<QuadInt> {
        self.check(&a)?;
        a.mul(&b)
    }
    fn neg(&self, a: QuadInt) -> Result<QuadInt> {
        self.check(&a)?;
        a.neg()
    }
}
