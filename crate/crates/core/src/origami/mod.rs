//! The L-shaped square-tiled surfaces `L(m, n)` with `d = m + n − 1`
//! squares: orbit class and spin, cylinder decompositions, the homology
//! splitting, and the explicit generator catalog.

mod catalog;
pub mod homology;
pub mod surface;
pub mod theta;

pub use catalog::{check_diagonal_exponent, generator_catalog, CatalogEntry, GeneratorCatalog, CATALOG_EXPONENT};
pub use theta::{odd_theta_chars, translate_count, ThetaChar};

use std::fmt;

use crate::error::{Error, Result};
use crate::quad_order::{Order, QuadInt};
use crate::sl2::IntMat;
use surface::{Cylinder, SquareTiled};

/// The `SL₂(ℤ)`-orbit of a genus-two origami with one cone point.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
pub enum OrbitClass {
    /// Odd `d`, one integral Weierstraß point (also every `d = 3`).
    A,
    /// Odd `d > 3`, three integral Weierstraß points.
    B,
    /// Even `d`: a single orbit.
    E,
}

impl fmt::Display for OrbitClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            OrbitClass::A => "A",
            OrbitClass::B => "B",
            OrbitClass::E => "E",
        };
        f.write_str(s)
    }
}

impl std::str::FromStr for OrbitClass {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "A" => Ok(OrbitClass::A),
            "B" => Ok(OrbitClass::B),
            "E" => Ok(OrbitClass::E),
            _ => Err(Error::Parse(format!("unknown orbit class {s:?}"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Spin {
    Even,
    Odd,
    None,
}

impl fmt::Display for Spin {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Spin::Even => "even",
            Spin::Odd => "odd",
            Spin::None => "none",
        })
    }
}

/// Directions with a known cylinder decomposition.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Direction {
    Horizontal,
    Vertical,
    Diag11,
    /// `(2/m, 1)`, used for `F`.
    Steep2m,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CylinderDecomposition {
    /// Primitive integer direction vector.
    pub direction: (i64, i64),
    pub cylinders: Vec<Cylinder>,
    /// Least positive integer multiple of all inverse moduli.
    pub twist_parameter: i64,
    /// The parabolic Veech group element fixing the direction.
    pub twist: IntMat,
}

/// The surface `L(m, n)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Origami {
    pub m: i64,
    pub n: i64,
    pub d: i64,
    pub class: OrbitClass,
}

impl Origami {
    pub fn new(m: i64, n: i64) -> Result<Self> {
        if m < 2 || n < 2 {
            return Err(Error::InvalidShape { m, n });
        }
        let d = m + n - 1;
        let class = if d % 2 == 0 {
            OrbitClass::E
        } else if d == 3 || m % 2 == 0 {
            OrbitClass::A
        } else {
            OrbitClass::B
        };
        Ok(Origami { m, n, d, class })
    }

    /// The representative used for verification runs: `L(d−1, 2)` for even
    /// `d` and class A, `L(d−2, 3)` for class B.
    pub fn canonical(d: i64, class: OrbitClass) -> Result<Self> {
        let o = match class {
            OrbitClass::B => Origami::new(d - 2, 3)?,
            _ => Origami::new(d - 1, 2)?,
        };
        if o.class != class {
            return Err(Error::PreconditionViolated(format!("no class {class} surface with d = {d}")));
        }
        Ok(o)
    }

    pub fn order(&self) -> Order {
        Order::new(self.d).expect("d >= 3")
    }

    pub fn surface(&self) -> SquareTiled {
        SquareTiled::l_shape(self.m as usize, self.n as usize)
    }

    /// Number of Weierstraß points at lattice points.
    pub fn integral_weierstrass_count(&self) -> u32 {
        match self.class {
            OrbitClass::E => 2,
            OrbitClass::A => 1,
            OrbitClass::B => 3,
        }
    }

    pub fn spin(&self) -> Spin {
        match self.integral_weierstrass_count() {
            1 => Spin::Even,
            3 => Spin::Odd,
            _ => Spin::None,
        }
    }

    /// The spin of the complementary elliptic curve `E₂`: the opposite one.
    pub fn complementary_spin(&self) -> Result<Spin> {
        if self.d % 2 == 0 || self.d == 3 {
            return Err(Error::PreconditionViolated(format!(
                "complementary spin needs odd d > 3, got d = {}",
                self.d
            )));
        }
        Ok(match self.spin() {
            Spin::Even => Spin::Odd,
            _ => Spin::Even,
        })
    }

    /// `η⁺ = n − w`.
    pub fn eta_plus(&self) -> QuadInt {
        self.order().from_coords(self.n, -1).expect("small")
    }

    /// `η⁻ = m − w`.
    pub fn eta_minus(&self) -> QuadInt {
        self.order().from_coords(self.m, -1).expect("small")
    }

    /// `η* = η⁺·η⁻`.
    pub fn eta_star(&self) -> QuadInt {
        self.eta_plus().mul(&self.eta_minus()).expect("small")
    }

    pub fn cylinder_decomposition(&self, dir: Direction) -> Result<CylinderDecomposition> {
        let (p, q) = match dir {
            Direction::Horizontal => (1, 0),
            Direction::Vertical => (0, 1),
            Direction::Diag11 => (1, 1),
            Direction::Steep2m => {
                if !(self.n == 2 || (self.n == 3 && self.m % 2 == 1)) {
                    return Err(Error::NotApplicable(format!(
                        "direction (2/m, 1) is only catalogued for n = 2 or n = 3 with m odd, not L({}, {})",
                        self.m, self.n
                    )));
                }
                let g = crate::arith::gcd(2, self.m);
                (2 / g, self.m / g)
            }
        };
        let (cylinders, twist_parameter, twist) = self.surface().cylinders_in_direction(p, q);
        Ok(CylinderDecomposition { direction: (p, q), cylinders, twist_parameter, twist })
    }
}

impl fmt::Display for Origami {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "L({},{})", self.m, self.n)
    }
}
