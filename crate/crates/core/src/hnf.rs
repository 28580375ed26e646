//! Hermite reduction of sublattices of ℤ² with coefficient tracking.
//!
//! Vectors are `(u, v)` coordinates. A full-rank lattice has the unique basis
//! `{(n, 0), (a, m)}` with `n, m > 0` and `0 ≤ a < n`; the reduction also
//! remembers how each basis vector was formed from the input columns so that
//! membership questions can be answered with an explicit certificate.

use crate::arith::ext_gcd;

#[derive(Debug, Clone)]
pub struct Echelon {
    /// The vector with the least positive `v`-coordinate, `(a, m)` up to
    /// reduction of `a`. `m = 0` if every input has `v = 0`.
    pub pivot: (i128, i128),
    pivot_coeffs: Vec<i128>,
    /// The generator `n ≥ 0` of the sublattice's intersection with `v = 0`.
    pub base: i128,
    base_coeffs: Vec<i128>,
}

fn combine(s: i128, x: &[i128], t: i128, y: &[i128]) -> Vec<i128> {
    x.iter().zip(y).map(|(a, b)| s * a + t * b).collect()
}

impl Echelon {
    pub fn new(cols: &[(i128, i128)]) -> Self {
        let k = cols.len();
        let unit = |i: usize| {
            let mut e = vec![0i128; k];
            e[i] = 1;
            e
        };
        let mut e = Echelon {
            pivot: (0, 0),
            pivot_coeffs: vec![0; k],
            base: 0,
            base_coeffs: vec![0; k],
        };
        for (i, &(u, v)) in cols.iter().enumerate() {
            let (mut cu, mut cc) = (u, unit(i));
            if v != 0 {
                let (pu, pv) = e.pivot;
                let (g, s, t) = ext_gcd(pv, v);
                // [s  v/g; t  -pv/g] has determinant -1
                let nu = s * pu + t * u;
                let nc = combine(s, &e.pivot_coeffs, t, &cc);
                cu = (v / g) * pu - (pv / g) * u;
                cc = combine(v / g, &e.pivot_coeffs, -(pv / g), &cc);
                e.pivot = (nu, g);
                e.pivot_coeffs = nc;
            }
            if cu != 0 {
                let (g, s, t) = ext_gcd(e.base, cu);
                e.base_coeffs = combine(s, &e.base_coeffs, t, &cc);
                e.base = g;
            }
        }
        if e.base != 0 && e.pivot.1 != 0 {
            let q = e.pivot.0.div_euclid(e.base);
            e.pivot.0 -= q * e.base;
            e.pivot_coeffs = combine(1, &e.pivot_coeffs, -q, &e.base_coeffs);
        }
        e
    }

    /// Integer coefficients `c` with `Σ cᵢ·colᵢ = target`, if any exist.
    pub fn solve(&self, target: (i128, i128)) -> Option<Vec<i128>> {
        let (tu, tv) = target;
        let (pu, pv) = self.pivot;
        let j = if pv == 0 {
            if tv != 0 {
                return None;
            }
            0
        } else {
            if tv % pv != 0 {
                return None;
            }
            tv / pv
        };
        let rest = tu - j * pu;
        let i = if self.base == 0 {
            if rest != 0 {
                return None;
            }
            0
        } else {
            if rest % self.base != 0 {
                return None;
            }
            rest / self.base
        };
        Some(combine(j, &self.pivot_coeffs, i, &self.base_coeffs))
    }
}
