//! Index verification for the homology Veech groups of `L(m, n)`.
//!
//! The predicted `Γ₀`-level index of the group generated by the catalog is
//! `[SL₂(O_D) : Γ₀(𝔞)]` scaled by `2/3` at exactly one family of levels,
//! determined by the distinguished prime `𝔭₂` above 2 (odd `d`) or by the
//! parity of the norm (even `d`). The measured index is the size of the
//! orbit of `(1 : 0)` in `P¹(O_D/𝔞)`.

pub mod words;

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ideal::{enumerate, IdealHNF};
use crate::origami::{generator_catalog, OrbitClass, Origami};
use crate::quad_order::Order;
use crate::quotient::{congruence_indices, QuotRing};
use crate::ring::{sl2z_gamma0_index, Zmod};
use crate::sl2::{orbit_of_base, reduce_mat, Mat2};

/// The case distinction for the predicted index.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Case {
    #[serde(rename = "1A")]
    OneA,
    #[serde(rename = "1B")]
    OneB,
    #[serde(rename = "2A")]
    TwoA,
    #[serde(rename = "2B")]
    TwoB,
    #[serde(rename = "3A")]
    ThreeA,
    #[serde(rename = "3B")]
    ThreeB,
}

impl Case {
    /// Whether the index is reduced by `2/3`.
    pub fn is_reduced(self) -> bool {
        matches!(self, Case::OneB | Case::TwoB | Case::ThreeB)
    }
}

impl fmt::Display for Case {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Case::OneA => "1A",
            Case::OneB => "1B",
            Case::TwoA => "2A",
            Case::TwoB => "2B",
            Case::ThreeA => "3A",
            Case::ThreeB => "3B",
        })
    }
}

impl FromStr for Case {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "1A" => Case::OneA,
            "1B" => Case::OneB,
            "2A" => Case::TwoA,
            "2B" => Case::TwoB,
            "3A" => Case::ThreeA,
            "3B" => Case::ThreeB,
            _ => return Err(Error::Parse(format!("unknown case {s:?}"))),
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Prediction {
    pub case: Case,
    pub factor_num: u64,
    pub factor_den: u64,
    pub index: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Match,
    Mismatch,
    BoundExceeded,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Match => "match",
            Status::Mismatch => "mismatch",
            Status::BoundExceeded => "bound-exceeded",
        })
    }
}

impl FromStr for Status {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "match" => Status::Match,
            "mismatch" => Status::Mismatch,
            "bound-exceeded" => Status::BoundExceeded,
            _ => return Err(Error::Parse(format!("unknown status {s:?}"))),
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrigamiRecord {
    pub m: i64,
    pub n: i64,
    pub d: i64,
    pub class: OrbitClass,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdealRecord {
    pub literal: String,
    pub n: i64,
    pub a: i64,
    pub m: i64,
    pub norm: i64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct MeasuredRecord {
    /// Absent when the enumeration bound was hit.
    pub index: Option<u64>,
    pub status: Status,
}

/// One comparison of predicted and measured index.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IndexReport {
    pub origami: OrigamiRecord,
    pub ideal: IdealRecord,
    pub predicted: Prediction,
    pub measured: MeasuredRecord,
}

impl IndexReport {
    pub fn status(&self) -> Status {
        self.measured.status
    }

    /// A measured index above the prediction cannot come from a correct
    /// implementation, since the orbit sits inside a coset space whose size
    /// the prediction bounds.
    pub fn is_fatal(&self) -> bool {
        self.measured.index.is_some_and(|m| m > self.predicted.index)
    }
}

impl fmt::Display for IndexReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let measured = self.measured.index.map_or("-".to_string(), |i| i.to_string());
        write!(
            f,
            "L({},{}) d={} class {}  {} (norm {})  case {}  predicted {}  measured {}  {}",
            self.origami.m,
            self.origami.n,
            self.origami.d,
            self.origami.class,
            self.ideal.literal,
            self.ideal.norm,
            self.predicted.case,
            self.predicted.index,
            measured,
            self.measured.status
        )
    }
}

/// The prime above 2 containing `2 − w`, for odd `d`.
pub fn identify_p2(order: Order) -> Result<IdealHNF> {
    if order.d() % 2 == 0 {
        return Err(Error::PreconditionViolated(format!(
            "2 does not split into a distinguished pair for even d = {}",
            order.d()
        )));
    }
    let two = IdealHNF::rational(order, 2)?;
    let two_minus_w = IdealHNF::principal(&order.from_coords(2, -1)?)?;
    two.sum(&two_minus_w)
}

fn check_order(o: &Origami, a: &IdealHNF) -> Result<()> {
    if a.d() != o.d {
        return Err(Error::ContextMismatch { left: o.d, right: a.d() });
    }
    Ok(())
}

pub fn predicted_index(o: &Origami, a: &IdealHNF) -> Result<Prediction> {
    check_order(o, a)?;
    let case = if o.d % 2 == 0 {
        if a.norm() % 2 == 0 {
            Case::ThreeB
        } else {
            Case::ThreeA
        }
    } else {
        let p2 = identify_p2(o.order())?;
        match o.class {
            OrbitClass::B if p2.conjugate().contains_ideal(a) => Case::TwoB,
            OrbitClass::B => Case::TwoA,
            _ if p2.contains_ideal(a) => Case::OneB,
            _ => Case::OneA,
        }
    };
    let g0 = congruence_indices(a).gamma0_index;
    let (num, den) = if case.is_reduced() { (2, 3) } else { (1, 1) };
    if g0 * num % den != 0 {
        return Err(Error::ValidationFailed(format!("{num}/{den} of {g0} is not integral")));
    }
    Ok(Prediction { case, factor_num: num, factor_den: den, index: g0 * num / den })
}

/// The orbit size of `(1 : 0)` in `P¹(O_D/𝔞)` under the reduced catalog.
pub fn measured_index(o: &Origami, a: &IdealHNF, bound: u64) -> Result<u64> {
    check_order(o, a)?;
    let ring = QuotRing::with_bound(*a, bound)?;
    let gens = generator_catalog(o)?
        .matrices()
        .iter()
        .map(|g| reduce_mat(g, &ring))
        .collect::<Result<Vec<_>>>()?;
    Ok(orbit_of_base(&ring, &gens)?.size() as u64)
}

pub fn verify(o: &Origami, a: &IdealHNF, bound: u64) -> Result<IndexReport> {
    let predicted = predicted_index(o, a)?;
    let measured = match measured_index(o, a, bound) {
        Ok(i) => MeasuredRecord {
            index: Some(i),
            status: if i == predicted.index { Status::Match } else { Status::Mismatch },
        },
        Err(Error::BoundExceeded { .. }) => MeasuredRecord { index: None, status: Status::BoundExceeded },
        Err(e) => return Err(e),
    };
    Ok(IndexReport {
        origami: OrigamiRecord { m: o.m, n: o.n, d: o.d, class: o.class },
        ideal: IdealRecord { literal: a.to_string(), n: a.n(), a: a.a(), m: a.m(), norm: a.norm() },
        predicted,
        measured,
    })
}

/// Verifies every ideal of norm at most `max_norm`, in the enumeration
/// order `(norm, n, a, m)`.
pub fn verify_range(o: &Origami, max_norm: i64, bound: u64) -> Result<Vec<IndexReport>> {
    enumerate(o.order(), max_norm).par_iter().map(|a| verify(o, a, bound)).collect()
}

/// Orbit of the first components in `P¹(ℤ/kℤ)` against its full size.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ProjectionReport {
    pub k: i64,
    pub orbit: u64,
    pub full: u64,
}

impl ProjectionReport {
    pub fn is_full(&self) -> bool {
        self.orbit == self.full
    }
}

pub fn projection_check(o: &Origami, k: i64) -> Result<ProjectionReport> {
    let ring = Zmod::new(k)?;
    let gens = generator_catalog(o)?
        .entries
        .iter()
        .map(|e| e.first_component().map(|x| Ok(ring.reduce(x))))
        .collect::<Result<Vec<Mat2<i64>>>>()?;
    let orbit = orbit_of_base(&ring, &gens)?.size() as u64;
    Ok(ProjectionReport { k, orbit, full: sl2z_gamma0_index(k) as u64 })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ideal::parse_literal;
    use crate::quotient::DEFAULT_BOUND;

    fn l(m: i64, n: i64) -> Origami {
        Origami::new(m, n).unwrap()
    }

    fn run(m: i64, n: i64, lit: &str) -> IndexReport {
        let o = l(m, n);
        verify(&o, &parse_literal(o.order(), lit).unwrap(), DEFAULT_BOUND).unwrap()
    }

    #[test]
    fn p2() {
        for d in [3, 5, 7, 9, 11, 15] {
            let q = Order::new(d).unwrap();
            let p2 = identify_p2(q).unwrap();
            assert_eq!(p2.norm(), 2);
            assert!(p2.contains(&q.from_coords(2, -1).unwrap()));
            assert_ne!(p2, p2.conjugate());
            assert_eq!(p2.multiply(&p2.conjugate()).unwrap(), IdealHNF::rational(q, 2).unwrap());
        }
        assert_eq!(identify_p2(Order::new(5).unwrap()).unwrap().to_string(), "[2;0+w]");
        assert!(identify_p2(Order::new(4).unwrap()).is_err());
    }

    #[test]
    fn spot_values() {
        let r = run(2, 2, "P(2,0)");
        assert_eq!((r.predicted.case, r.predicted.index, r.measured.index), (Case::OneB, 2, Some(2)));
        let r = run(4, 2, "P(2,0)");
        assert_eq!((r.predicted.case, r.predicted.index, r.measured.index), (Case::OneB, 2, Some(2)));
        let r = run(4, 2, "P(2,1)");
        assert_eq!((r.predicted.case, r.measured.index), (Case::OneA, Some(3)));
        let r = run(3, 3, "P(2,0)");
        assert_eq!((r.predicted.case, r.measured.index), (Case::TwoA, Some(3)));
        let r = run(3, 3, "P(2,1)");
        assert_eq!((r.predicted.case, r.measured.index), (Case::TwoB, Some(2)));
        let r = run(3, 2, "(2)");
        assert_eq!((r.predicted.case, r.predicted.index, r.measured.index), (Case::ThreeB, 4, Some(4)));
        let r = run(4, 2, "(3)");
        assert_eq!(r.measured.index, Some(16));
        let r = run(3, 3, "(6)");
        assert_eq!((r.predicted.index, r.measured.index), (96, Some(96)));
        let r = run(2, 2, "(1)");
        assert_eq!((r.predicted.index, r.measured.index, r.status()), (1, Some(1), Status::Match));
    }

    #[test]
    fn bound() {
        let o = l(4, 2);
        let a = parse_literal(o.order(), "(7)").unwrap();
        let r = verify(&o, &a, 10).unwrap();
        assert_eq!(r.measured, MeasuredRecord { index: None, status: Status::BoundExceeded });
        assert!(matches!(measured_index(&o, &a, 10), Err(Error::BoundExceeded { .. })));
    }

    #[test]
    fn range_small() {
        for (m, n) in [(2, 2), (3, 2), (4, 2), (3, 3)] {
            let reports = verify_range(&l(m, n), 20, DEFAULT_BOUND).unwrap();
            for r in &reports {
                assert_eq!(r.status(), Status::Match, "{r}");
            }
            let keys: Vec<_> = reports.iter().map(|r| (r.ideal.norm, r.ideal.n, r.ideal.a, r.ideal.m)).collect();
            let mut sorted = keys.clone();
            sorted.sort();
            assert_eq!(keys, sorted);
        }
    }

    #[test]
    fn projection() {
        for o in [l(3, 3), l(5, 3)] {
            for k in 2..=12 {
                assert!(projection_check(&o, k).unwrap().is_full(), "{o} k = {k}");
            }
        }
    }

    #[test]
    fn wrong_order() {
        let o = l(4, 2);
        let a = IdealHNF::rational(Order::new(7).unwrap(), 3).unwrap();
        assert!(matches!(predicted_index(&o, &a), Err(Error::ContextMismatch { .. })));
    }
}
