//! The intersection form on `H₁(L(m, n), ℤ)`, its splitting into the two
//! elliptic summands, and the assembly of homology actions into `SL₂(O_D)`.

use crate::error::{Error, Result};
use crate::quad_order::{Order, QuadInt};
use crate::sl2::{IntMat, Mat2};
use crate::ring::Integers;

pub type Vec4 = [i64; 4];

/// Antisymmetric form on the basis `(a₁, a_m, b₁, b_n)` with nonzero
/// pairings `(a₁, b_n) = (a_m, b₁) = (a_m, b_n) = 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntersectionForm {
    pub j: [[i64; 4]; 4],
}

impl Default for IntersectionForm {
    fn default() -> Self {
        let mut j = [[0; 4]; 4];
        for (a, b) in [(0, 3), (1, 2), (1, 3)] {
            j[a][b] = 1;
            j[b][a] = -1;
        }
        IntersectionForm { j }
    }
}

impl IntersectionForm {
    pub fn pair(&self, x: &Vec4, y: &Vec4) -> i64 {
        (0..4).map(|i| (0..4).map(|k| x[i] * self.j[i][k] * y[k]).sum::<i64>()).sum()
    }
}

/// The classes `c₁, d₁` (pulled back from `E₁`) and `c₂, d₂`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SplitBasis {
    pub c1: Vec4,
    pub d1: Vec4,
    pub c2: Vec4,
    pub d2: Vec4,
}

impl SplitBasis {
    pub fn new(m: i64, n: i64) -> Self {
        SplitBasis {
            c1: [m - 1, 1, 0, 0],
            d1: [0, 0, n - 1, 1],
            c2: [n, -1, 0, 0],
            d2: [0, 0, -m, 1],
        }
    }
}

/// A linear map on `H₁`; column `j` is the image of basis vector `j`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct HomologyMap {
    pub cols: [Vec4; 4],
}

impl HomologyMap {
    pub fn identity() -> Self {
        let mut cols = [[0; 4]; 4];
        for (i, c) in cols.iter_mut().enumerate() {
            c[i] = 1;
        }
        HomologyMap { cols }
    }

    pub fn apply(&self, v: &Vec4) -> Vec4 {
        let mut out = [0; 4];
        for (j, col) in self.cols.iter().enumerate() {
            for i in 0..4 {
                out[i] += col[i] * v[j];
            }
        }
        out
    }

    /// `Mᵀ J M = J`.
    pub fn is_symplectic(&self, form: &IntersectionForm) -> bool {
        (0..4).all(|i| (0..4).all(|k| form.pair(&self.cols[i], &self.cols[k]) == form.j[i][k]))
    }

    /// The matrix of the action on the rank-two summand spanned by `c, d`,
    /// with columns the coordinates of the images of `c` and `d`.
    pub fn restrict(&self, form: &IntersectionForm, c: &Vec4, d: &Vec4) -> Result<IntMat> {
        let cd = form.pair(c, d);
        let coords = |v: &Vec4| -> Result<(i64, i64)> {
            let (x, y) = (form.pair(v, d), form.pair(c, v));
            if x % cd != 0 || y % cd != 0 {
                return Err(Error::SummandNotPreserved);
            }
            let (x, y) = (x / cd, y / cd);
            if (0..4).any(|i| x * c[i] + y * d[i] != v[i]) {
                return Err(Error::SummandNotPreserved);
            }
            Ok((x, y))
        };
        let (a, c_) = coords(&self.apply(c))?;
        let (b, d_) = coords(&self.apply(d))?;
        Ok(IntMat::int(a, b, c_, d_))
    }
}

/// Assembles `(A₁, R·A₂·R⁻¹)` with `R = diag(−1, 1)` into a matrix over `O_D`.
pub fn assemble_pair(map: &HomologyMap, m: i64, n: i64) -> Result<Mat2<QuadInt>> {
    let form = IntersectionForm::default();
    if !map.is_symplectic(&form) {
        return Err(Error::NotSymplectic);
    }
    let basis = SplitBasis::new(m, n);
    let a1 = map.restrict(&form, &basis.c1, &basis.d1)?;
    let a2 = map.restrict(&form, &basis.c2, &basis.d2)?;
    let order = Order::new(m + n - 1)?;
    let out = Mat2::from_pairs(order, [(a1.a, a2.a), (a1.b, -a2.b), (a1.c, -a2.c), (a1.d, a2.d)])?;
    if !a1.is_unimodular(&Integers)? || !a2.is_unimodular(&Integers)? {
        return Err(Error::NotUnimodular);
    }
    Ok(out)
}

/// The action of `E′ = (1−d d; −d 1+d)` on `H₁`, with the last image read as
/// `−((m−1)m·a₁ + m·a_m + (n−1)m·b₁ + (m−1)·b_n)`.
pub fn e_prime_action(m: i64, n: i64) -> HomologyMap {
    HomologyMap {
        cols: [
            [m, 1, n - 1, 1],
            [(m - 1) * n, n + 1, (n - 1) * n, n],
            [-(m - 1), -1, -(n - 2), -1],
            [-(m - 1) * m, -m, -(n - 1) * m, -(m - 1)],
        ],
    }
}

/// The same table with the last coefficient attached to `b_m` as printed,
/// i.e. dropped from the `b_n` coordinate.
pub fn e_prime_action_as_printed(m: i64, n: i64) -> HomologyMap {
    let mut t = e_prime_action(m, n);
    t.cols[3][3] = 0;
    t
}

/// The action of the horizontal multi-twist `T′^m`: `a_i` fixed,
/// `b₁ ↦ b₁ + a_m`, `b_n ↦ b_n + a_m + n(m−1)·a₁`.
pub fn horizontal_twist_action(m: i64, n: i64) -> HomologyMap {
    HomologyMap { cols: [[1, 0, 0, 0], [0, 1, 0, 0], [0, 1, 1, 0], [n * (m - 1), 1, 0, 1]] }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pairings() {
        let f = IntersectionForm::default();
        for m in 2..=12 {
            for n in 2..=12 {
                let b = SplitBasis::new(m, n);
                let d = m + n - 1;
                assert_eq!(f.pair(&b.c1, &b.d1), d);
                assert_eq!(f.pair(&b.c2, &b.d2), d);
                for (x, y) in [(b.c1, b.c2), (b.d1, b.d2), (b.c1, b.d2), (b.c2, b.d1)] {
                    assert_eq!(f.pair(&x, &y), 0);
                }
            }
        }
        for i in 0..4 {
            for k in 0..4 {
                assert_eq!(f.j[i][k], -f.j[k][i]);
            }
        }
    }

    #[test]
    fn identity_assembles_to_identity() {
        let id = assemble_pair(&HomologyMap::identity(), 4, 2).unwrap();
        assert_eq!(id, Mat2::identity(&Order::new(5).unwrap()));
    }

    #[test]
    fn e_prime_table() {
        let f = IntersectionForm::default();
        for m in 2..=12 {
            for n in 2..=12 {
                let t = e_prime_action(m, n);
                assert!(t.is_symplectic(&f), "L({m},{n})");
                let b = SplitBasis::new(m, n);
                // second summand is fixed pointwise
                assert_eq!(t.apply(&b.c2), b.c2);
                assert_eq!(t.apply(&b.d2), b.d2);
                let d = m + n - 1;
                let a1 = t.restrict(&f, &b.c1, &b.d1).unwrap();
                assert_eq!(a1, IntMat::int(1 + d, -d, d, 1 - d));
                assert!(!e_prime_action_as_printed(m, n).is_symplectic(&f));
            }
        }
    }

    #[test]
    fn horizontal_twist_table() {
        let f = IntersectionForm::default();
        for m in 2..=8 {
            for n in 2..=8 {
                let t = horizontal_twist_action(m, n);
                assert!(t.is_symplectic(&f));
                let b = SplitBasis::new(m, n);
                assert_eq!(t.apply(&b.c2), b.c2);
                let mut d2 = b.d2;
                for i in 0..4 {
                    d2[i] += (m - 1) * b.c2[i];
                }
                assert_eq!(t.apply(&b.d2), d2);
                let x = assemble_pair(&t, m, n).unwrap();
                let (a1, a2) = x.components();
                assert_eq!(a1, IntMat::int(1, n, 0, 1));
                assert_eq!(a2, IntMat::int(1, 1 - m, 0, 1));
            }
        }
    }

    #[test]
    fn rejects_non_symplectic() {
        let mut t = HomologyMap::identity();
        t.cols[0][0] = 2;
        assert_eq!(assemble_pair(&t, 3, 3), Err(Error::NotSymplectic));
    }

    #[test]
    fn rejects_mixing_summands() {
        // a symplectic map that does not respect the splitting:
        // the transvection v ↦ v + (v, a₁)·a₁ ... uses a class outside both summands
        let f = IntersectionForm::default();
        let a1: Vec4 = [1, 0, 0, 0];
        let mut cols = [[0; 4]; 4];
        for (j, col) in cols.iter_mut().enumerate() {
            let mut e = [0; 4];
            e[j] = 1;
            let k = f.pair(&e, &a1);
            for i in 0..4 {
                col[i] = e[i] + k * a1[i];
            }
        }
        let t = HomologyMap { cols };
        assert!(t.is_symplectic(&f));
        assert_eq!(assemble_pair(&t, 3, 3), Err(Error::SummandNotPreserved));
    }
}
