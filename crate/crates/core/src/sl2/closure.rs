//! Breadth-first subgroup closure and base-point orbits over finite rings.
//!
//! Frontier expansion runs in parallel; membership is decided by a single
//! sequential insertion pass per layer, so the element set (and hence every
//! reported count) does not depend on scheduling.

use std::collections::HashSet;

use rayon::prelude::*;

use super::Mat2;
use crate::error::{Error, Result};
use crate::ring::FiniteRing;

/// A finite subgroup of `SL₂(R)` given by generators.
#[derive(Debug, Clone)]
pub struct SubgroupClosure<E> {
    pub generators: Vec<Mat2<E>>,
    pub elements: Vec<Mat2<E>>,
}

impl<E> SubgroupClosure<E> {
    pub fn order(&self) -> usize {
        self.elements.len()
    }
}

fn mat_key<R: FiniteRing>(r: &R, m: &Mat2<R::Elem>) -> u128 {
    let s = r.size() as u128;
    m.entries().iter().rev().fold(0u128, |acc, &e| acc * s + r.index(e) as u128)
}

fn with_inverses<R: FiniteRing>(r: &R, gens: &[Mat2<R::Elem>]) -> Result<Vec<Mat2<R::Elem>>> {
    let mut all = Vec::with_capacity(2 * gens.len());
    for g in gens {
        for m in [*g, g.inverse(r)?] {
            if !all.contains(&m) {
                all.push(m);
            }
        }
    }
    Ok(all)
}

/// The subgroup generated by `gens`; fails once more than `bound` elements
/// have been found.
pub fn closure<R: FiniteRing>(
    r: &R,
    gens: &[Mat2<R::Elem>],
    bound: u64,
) -> Result<SubgroupClosure<R::Elem>> {
    let steps = with_inverses(r, gens)?;
    let id = Mat2::identity(r);
    let mut seen = HashSet::from([mat_key(r, &id)]);
    let mut elements = vec![id];
    let mut frontier = vec![id];
    while !frontier.is_empty() {
        let next: Vec<(u128, Mat2<R::Elem>)> = frontier
            .par_iter()
            .flat_map_iter(|x| {
                steps.iter().map(move |g| {
                    let y = g.mul(r, x).expect("finite ring arithmetic");
                    (mat_key(r, &y), y)
                })
            })
            .collect();
        frontier = Vec::new();
        for (k, y) in next {
            if seen.insert(k) {
                if seen.len() as u64 > bound {
                    return Err(Error::BoundExceeded { bound, what: "subgroup closure" });
                }
                elements.push(y);
                frontier.push(y);
            }
        }
    }
    Ok(SubgroupClosure { generators: gens.to_vec(), elements })
}

/// The orbit of `(1 : 0)` in `P¹(R)`.
#[derive(Debug, Clone)]
pub struct Orbit<E> {
    pub points: Vec<(E, E)>,
}

impl<E> Orbit<E> {
    pub fn size(&self) -> usize {
        self.points.len()
    }
}

/// Orbit of the base point `(1 : 0)` under the group generated by `gens`,
/// acting by `(a b; c d)·(x : y) = (a·x + b·y : c·x + d·y)`. Its size is the
/// index of the generated group's intersection with `Γ₀`.
pub fn orbit_of_base<R: FiniteRing>(r: &R, gens: &[Mat2<R::Elem>]) -> Result<Orbit<R::Elem>> {
    let steps = with_inverses(r, gens)?;
    let key = |p: &(R::Elem, R::Elem)| (r.index(p.0), r.index(p.1));
    let base = r.proj_canonical(r.one(), r.zero()).expect("(1:0) is unimodular");
    let mut seen = HashSet::from([key(&base)]);
    let mut points = vec![base];
    let mut frontier = vec![base];
    while !frontier.is_empty() {
        let next: Vec<(R::Elem, R::Elem)> = frontier
            .par_iter()
            .flat_map_iter(|&(x, y)| {
                steps.iter().map(move |g| {
                    let nx = r.add(r.mul(g.a, x)?, r.mul(g.b, y)?)?;
                    let ny = r.add(r.mul(g.c, x)?, r.mul(g.d, y)?)?;
                    r.proj_canonical(nx, ny).ok_or(Error::NotUnimodular)
                })
            })
            .collect::<Result<_>>()?;
        frontier = Vec::new();
        for p in next {
            if seen.insert(key(&p)) {
                points.push(p);
                frontier.push(p);
            }
        }
    }
    Ok(Orbit { points })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ideal::parse_literal;
    use crate::quad_order::Order;
    use crate::quotient::QuotRing;
    use crate::ring::Zmod;
    use crate::sl2::{elementary_generators as elementary, reduce_mat};

    #[test]
    fn closure_examples() {
        let q = Order::new(5).unwrap();
        let ring = QuotRing::new(parse_literal(q, "(3)").unwrap()).unwrap();
        assert_eq!(closure(&ring, &elementary(&ring), 1_000_000).unwrap().order(), 576);
        assert_eq!(closure(&ring, &[Mat2::identity(&ring)], 10).unwrap().order(), 1);
        let f5 = Zmod::new(5).unwrap();
        assert_eq!(closure(&f5, &[Mat2::new(1, 1, 0, 1)], 100).unwrap().order(), 5);
        assert!(matches!(
            closure(&ring, &elementary(&ring), 100),
            Err(Error::BoundExceeded { .. })
        ));
    }

    #[test]
    fn closure_is_closed() {
        let f3 = Zmod::new(3).unwrap();
        let g = closure(&f3, &[Mat2::new(1, 1, 0, 1), Mat2::new(0, 2, 1, 0)], 1000).unwrap();
        assert_eq!(g.order(), 24);
        let keys: HashSet<_> = g.elements.iter().map(|m| mat_key(&f3, m)).collect();
        for x in &g.elements {
            assert!(keys.contains(&mat_key(&f3, &x.inverse(&f3).unwrap())));
            for y in g.elements.iter().step_by(5) {
                assert!(keys.contains(&mat_key(&f3, &x.mul(&f3, y).unwrap())));
            }
        }
    }

    #[test]
    fn orbit_examples() {
        let q = Order::new(5).unwrap();
        let ring = QuotRing::new(parse_literal(q, "(3)").unwrap()).unwrap();
        assert_eq!(orbit_of_base(&ring, &elementary(&ring)).unwrap().size(), 16);
        assert_eq!(orbit_of_base(&ring, &[Mat2::identity(&ring)]).unwrap().size(), 1);
        let q3 = Order::new(3).unwrap();
        let p2 = QuotRing::new(parse_literal(q3, "P(2,0)").unwrap()).unwrap();
        let z = Mat2::from_pairs(q3, [(1, 1), (0, 0), (2, -1), (1, 1)]).unwrap();
        let s = Mat2::from_pairs(q3, [(0, 0), (1, 1), (-1, -1), (0, 0)]).unwrap();
        let gens = [reduce_mat(&z, &p2).unwrap(), reduce_mat(&s, &p2).unwrap()];
        assert_eq!(orbit_of_base(&p2, &gens).unwrap().size(), 2);
    }
}
