//! The finite rings `O_D/𝔞`, their units and projective lines, and the
//! closed-form congruence-subgroup indices.

use std::fmt;

use crate::arith;
use crate::error::{Error, Result};
use crate::hnf::Echelon;
use crate::ideal::IdealHNF;
use crate::quad_order::QuadInt;
use crate::ring::{FiniteRing, Ring};

/// Default cap on the size of enumerated finite objects.
pub const DEFAULT_BOUND: u64 = 1_000_000;

/// A residue `r + s·w` with `0 ≤ r < n`, `0 ≤ s < m`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct QuotElem {
    pub r: i64,
    pub s: i64,
}

impl fmt::Display for QuotElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.s {
            0 => write!(f, "{}", self.r),
            1 => write!(f, "{}+w", self.r),
            s => write!(f, "{}+{}w", self.r, s),
        }
    }
}

/// The ring `O_D/𝔞`.
#[derive(Debug, Clone)]
pub struct QuotRing {
    modulus: IdealHNF,
    d: i64,
    n: i64,
    a: i64,
    m: i64,
    units: Vec<QuotElem>,
}

impl QuotRing {
    pub fn new(modulus: IdealHNF) -> Result<Self> {
        Self::with_bound(modulus, DEFAULT_BOUND)
    }

    pub fn with_bound(modulus: IdealHNF, bound: u64) -> Result<Self> {
        if modulus.norm() as u64 > bound {
            return Err(Error::BoundExceeded { bound, what: "quotient ring size" });
        }
        let mut q = QuotRing {
            modulus,
            d: modulus.d(),
            n: modulus.n(),
            a: modulus.a(),
            m: modulus.m(),
            units: Vec::new(),
        };
        q.units = q.elements().into_iter().filter(|&x| q.try_invert(x).is_some()).collect();
        Ok(q)
    }

    pub fn modulus(&self) -> &IdealHNF {
        &self.modulus
    }

    fn reduce_coords(&self, u: i128, v: i128) -> QuotElem {
        let (n, a, m) = (self.n as i128, self.a as i128, self.m as i128);
        let s = v.rem_euclid(m);
        let u = u - ((v - s) / m) * a;
        QuotElem { r: u.rem_euclid(n) as i64, s: s as i64 }
    }

    /// The image of `z` under `O_D → O_D/𝔞`.
    pub fn reduce(&self, z: &QuadInt) -> Result<QuotElem> {
        if z.d() != self.d {
            return Err(Error::ContextMismatch { left: self.d, right: z.d() });
        }
        let (u, v) = z.coords();
        Ok(self.reduce_coords(u as i128, v as i128))
    }

    /// The canonical lift `r + s·w`.
    pub fn lift(&self, x: QuotElem) -> QuadInt {
        self.modulus.order().from_coords(x.r, x.s).expect("residues are small")
    }

    pub fn elem(&self, r: i64, s: i64) -> QuotElem {
        self.reduce_coords(r as i128, s as i128)
    }

    fn lattice_cols(&self) -> [(i128, i128); 2] {
        [(self.n as i128, 0), (self.a as i128, self.m as i128)]
    }

    /// Columns of the multiplication-by-`x` map in the basis `{𝟙, w}`.
    fn mult_cols(&self, x: QuotElem) -> [(i128, i128); 2] {
        let (u, v) = (x.r as i128, x.s as i128);
        [(u, v), (0, u + self.d as i128 * v)]
    }

    /// The inverse of `x`, found by solving `M_x·y ≡ 𝟙` modulo the ideal lattice.
    pub fn try_invert(&self, x: QuotElem) -> Option<QuotElem> {
        let [c0, c1] = self.mult_cols(x);
        let [l0, l1] = self.lattice_cols();
        let sol = Echelon::new(&[c0, c1, l0, l1]).solve((1, 0))?;
        Some(self.reduce_coords(sol[0], sol[1]))
    }
}

impl Ring for QuotRing {
    type Elem = QuotElem;

    fn zero(&self) -> QuotElem {
        QuotElem { r: 0, s: 0 }
    }
    fn one(&self) -> QuotElem {
        self.reduce_coords(1, 0)
    }
    fn add(&self, x: QuotElem, y: QuotElem) -> Result<QuotElem> {
        Ok(self.reduce_coords(x.r as i128 + y.r as i128, x.s as i128 + y.s as i128))
    }
    fn sub(&self, x: QuotElem, y: QuotElem) -> Result<QuotElem> {
        Ok(self.reduce_coords(x.r as i128 - y.r as i128, x.s as i128 - y.s as i128))
    }
    fn mul(&self, x: QuotElem, y: QuotElem) -> Result<QuotElem> {
        let (r1, s1, r2, s2) = (x.r as i128, x.s as i128, y.r as i128, y.s as i128);
        Ok(self.reduce_coords(r1 * r2, r1 * s2 + r2 * s1 + self.d as i128 * s1 * s2))
    }
    fn neg(&self, x: QuotElem) -> Result<QuotElem> {
        Ok(self.reduce_coords(-(x.r as i128), -(x.s as i128)))
    }
}

impl FiniteRing for QuotRing {
    fn size(&self) -> u64 {
        (self.n * self.m) as u64
    }
    fn index(&self, x: QuotElem) -> u64 {
        (x.s * self.n + x.r) as u64
    }
    fn from_index(&self, i: u64) -> QuotElem {
        let i = i as i64;
        QuotElem { r: i % self.n, s: i / self.n }
    }
    fn units(&self) -> &[QuotElem] {
        &self.units
    }
    fn is_unit(&self, x: QuotElem) -> bool {
        self.units.binary_search_by_key(&self.index(x), |&u| self.index(u)).is_ok()
    }
    fn is_unimodular(&self, x: QuotElem, y: QuotElem) -> bool {
        let [a, b] = self.mult_cols(x);
        let [c, e] = self.mult_cols(y);
        let [l0, l1] = self.lattice_cols();
        Echelon::new(&[a, b, c, e, l0, l1]).solve((1, 0)).is_some()
    }
}

/// The closed-form index data of the congruence subgroups of level `𝔞`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CongruenceIndices {
    /// `[SL₂(O_D) : Γ₀(𝔞)] = #P¹(O_D/𝔞)`.
    pub gamma0_index: u64,
    /// `[Γ₀(𝔞) : Γ₁(𝔞)] = 𝒩(𝔞)`.
    pub gamma0_to_gamma1: u64,
    /// `[Γ₁(𝔞) : Γ(𝔞)] = φ(𝔞)`.
    pub gamma1_to_gamma: u64,
    /// `|SL₂(O_D/𝔞)|`.
    pub sl2_quotient_order: u64,
    /// `φ(𝔞) = |(O_D/𝔞)^×|`.
    pub phi: u64,
}

/// The exponent `c_p(𝔞)`: 2 if `p ∤ d` and `𝔞 ⊆ (p)`, else 1.
pub fn c_p(a: &IdealHNF, p: i64) -> u32 {
    let rational = IdealHNF::rational(a.order(), p).expect("p >= 1");
    if a.d() % p != 0 && rational.contains_ideal(a) {
        2
    } else {
        1
    }
}

pub fn congruence_indices(a: &IdealHNF) -> CongruenceIndices {
    let norm = a.norm() as u64;
    let (mut g0, mut phi, mut sl2) = (norm as u128, norm as u128, (norm as u128).pow(3));
    for (p, _) in arith::factor(a.norm()) {
        let p = p as u128;
        for _ in 0..c_p(a, p as i64) {
            g0 = g0 / p * (p + 1);
            phi = phi / p * (p - 1);
            sl2 = sl2 / (p * p) * (p * p - 1);
        }
    }
    CongruenceIndices {
        gamma0_index: g0 as u64,
        gamma0_to_gamma1: norm,
        gamma1_to_gamma: phi as u64,
        sl2_quotient_order: sl2 as u64,
        phi: phi as u64,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ideal::{enumerate, parse_literal};
    use crate::quad_order::Order;
    use crate::ring::projective_line;

    fn ring(d: i64, lit: &str) -> QuotRing {
        QuotRing::new(parse_literal(Order::new(d).unwrap(), lit).unwrap()).unwrap()
    }

    #[test]
    fn reduce_examples() {
        let q = ring(5, "(3)");
        let o = Order::new(5).unwrap();
        assert_eq!(q.reduce(&o.from_coords(2, 8).unwrap()).unwrap(), QuotElem { r: 2, s: 2 });
        let q6 = ring(5, "[6;4+w]");
        assert_eq!(q6.reduce(&o.from_coords(2, -1).unwrap()).unwrap(), q6.zero());
        assert_eq!(q.reduce(&o.zero()).unwrap(), q.zero());
    }

    #[test]
    fn arith_examples() {
        let q = ring(5, "(3)");
        let x = q.elem(1, 1);
        assert_eq!(q.mul(x, x).unwrap(), QuotElem { r: 1, s: 1 });
        assert_eq!(q.mul(x, q.one()).unwrap(), x);
        let q2 = ring(5, "(2)");
        let w = q2.elem(0, 1);
        assert_eq!(q2.mul(w, w).unwrap(), QuotElem { r: 0, s: 1 });
    }

    #[test]
    fn unit_examples() {
        assert_eq!(ring(5, "(3)").units().len(), 4);
        assert_eq!(ring(5, "[2;0+w]").units().len(), 1);
        let q = ring(7, "(6)");
        assert!(q.is_unit(q.one()));
        assert!(!q.is_unit(q.zero()));
        for &u in q.units() {
            let v = q.try_invert(u).unwrap();
            assert_eq!(q.mul(u, v).unwrap(), q.one());
        }
    }

    #[test]
    fn bound_is_enforced() {
        let i = parse_literal(Order::new(5).unwrap(), "(30)").unwrap();
        assert!(matches!(QuotRing::with_bound(i, 100), Err(Error::BoundExceeded { .. })));
    }

    #[test]
    fn proj_examples() {
        let q = ring(5, "(3)");
        assert_eq!(q.proj_canonical(q.one(), q.zero()), Some((q.one(), q.zero())));
        assert_eq!(q.proj_canonical(q.zero(), q.zero()), None);
        assert_eq!(projective_line(&q).len(), 16);
    }

    #[test]
    fn index_examples() {
        let o = Order::new(5).unwrap();
        let c = congruence_indices(&parse_literal(o, "(3)").unwrap());
        assert_eq!((c.gamma0_index, c.sl2_quotient_order, c.phi), (16, 576, 4));
        let c = congruence_indices(&parse_literal(o, "[2;0+w]").unwrap());
        assert_eq!((c.gamma0_index, c.sl2_quotient_order), (3, 6));
        let c = congruence_indices(&parse_literal(Order::new(4).unwrap(), "(2)").unwrap());
        assert_eq!(c.gamma0_index, 6);
    }

    #[test]
    fn reduce_is_a_surjective_homomorphism() {
        for d in [3, 4, 5, 7] {
            let o = Order::new(d).unwrap();
            for a in enumerate(o, 30) {
                let q = QuotRing::new(a).unwrap();
                for u in -6..6 {
                    for v in -6..6 {
                        let z = o.from_coords(u, v).unwrap();
                        let y = o.from_coords(v - 2, u + 3).unwrap();
                        let (rz, ry) = (q.reduce(&z).unwrap(), q.reduce(&y).unwrap());
                        assert_eq!(q.reduce(&z.mul(&y).unwrap()).unwrap(), q.mul(rz, ry).unwrap());
                        assert_eq!(q.reduce(&z.add(&y).unwrap()).unwrap(), q.add(rz, ry).unwrap());
                    }
                }
                // every residue is hit by its canonical lift
                for x in q.elements() {
                    assert_eq!(q.reduce(&q.lift(x)).unwrap(), x);
                }
            }
        }
    }

    #[test]
    fn proj_canonical_is_unit_invariant() {
        let q = ring(5, "(6)");
        for x in q.elements() {
            for y in q.elements().into_iter().step_by(5) {
                let c = q.proj_canonical(x, y);
                for &t in q.units() {
                    let (tx, ty) = (q.mul(t, x).unwrap(), q.mul(t, y).unwrap());
                    assert_eq!(q.proj_canonical(tx, ty), c);
                }
                if let Some((a, b)) = c {
                    assert_eq!(q.proj_canonical(a, b), Some((a, b)));
                }
            }
        }
    }

    #[test]
    fn brute_force_matches_formulas() {
        for d in [3, 4, 5, 7, 8, 9] {
            let o = Order::new(d).unwrap();
            for a in enumerate(o, 40) {
                let q = QuotRing::new(a).unwrap();
                let c = congruence_indices(&a);
                assert_eq!(q.units().len() as u64, c.phi, "units d={d} {a}");
                assert_eq!(projective_line(&q).len() as u64, c.gamma0_index, "P1 d={d} {a}");
                assert_eq!(
                    c.gamma0_index * c.gamma0_to_gamma1 * c.gamma1_to_gamma,
                    c.sl2_quotient_order
                );
            }
        }
    }
}
