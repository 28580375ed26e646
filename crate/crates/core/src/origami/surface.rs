//! Square-tiled surfaces as pairs of permutations `(r, u)`: `r(x)` is the
//! square to the right of `x`, `u(x)` the square above it.
//!
//! This is an independent model of `L(m, n)` used to compute cylinder
//! decompositions and integral Weierstraß points directly from the gluing.

use num_rational::Ratio;

use crate::arith;
use crate::sl2::IntMat;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SquareTiled {
    pub r: Vec<usize>,
    pub u: Vec<usize>,
}

/// One maximal cylinder.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct Cylinder {
    pub circumference: i64,
    pub height: i64,
}

impl Cylinder {
    /// `height / circumference`.
    pub fn modulus(&self) -> Ratio<i64> {
        Ratio::new(self.height, self.circumference)
    }
}

fn inverse(p: &[usize]) -> Vec<usize> {
    let mut inv = vec![0; p.len()];
    for (i, &j) in p.iter().enumerate() {
        inv[j] = i;
    }
    inv
}

/// `(f ∘ g)(x) = f(g(x))`.
fn compose(f: &[usize], g: &[usize]) -> Vec<usize> {
    g.iter().map(|&x| f[x]).collect()
}

fn find(parent: &mut [usize], x: usize) -> usize {
    let mut root = x;
    while parent[root] != root {
        root = parent[root];
    }
    let mut y = x;
    while parent[y] != root {
        let next = parent[y];
        parent[y] = root;
        y = next;
    }
    root
}

fn union(parent: &mut [usize], a: usize, b: usize) {
    let (ra, rb) = (find(parent, a), find(parent, b));
    if ra != rb {
        parent[ra.max(rb)] = ra.min(rb);
    }
}

impl SquareTiled {
    /// `L(m, n)`: bottom row `0..m`, arm `m..m+n-1` stacked on square 0.
    pub fn l_shape(m: usize, n: usize) -> Self {
        let d = m + n - 1;
        let mut r: Vec<usize> = (0..d).collect();
        let mut u: Vec<usize> = (0..d).collect();
        for i in 0..m {
            r[i] = (i + 1) % m;
        }
        let arm: Vec<usize> = std::iter::once(0).chain(m..d).collect();
        for w in 0..arm.len() {
            u[arm[w]] = arm[(w + 1) % arm.len()];
        }
        SquareTiled { r, u }
    }

    pub fn squares(&self) -> usize {
        self.r.len()
    }

    /// Action of `(1 1; 0 1)`.
    pub fn shear(&self) -> Self {
        SquareTiled { r: self.r.clone(), u: compose(&self.u, &inverse(&self.r)) }
    }

    /// Action of `(1 -1; 0 1)`.
    pub fn shear_inv(&self) -> Self {
        SquareTiled { r: self.r.clone(), u: compose(&self.u, &self.r) }
    }

    /// Action of the rotation `(0 -1; 1 0)`.
    pub fn rotate(&self) -> Self {
        SquareTiled { r: inverse(&self.u), u: self.r.clone() }
    }

    fn cycles(p: &[usize]) -> Vec<Vec<usize>> {
        let mut seen = vec![false; p.len()];
        let mut out = Vec::new();
        for s in 0..p.len() {
            if seen[s] {
                continue;
            }
            let mut c = Vec::new();
            let mut x = s;
            while !seen[x] {
                seen[x] = true;
                c.push(x);
                x = p[x];
            }
            out.push(c);
        }
        out
    }

    /// Maximal horizontal cylinders, sorted.
    ///
    /// Each `r`-cycle is a strip of height one; the strip above is glued on
    /// without a singular point exactly when `u∘r = r∘u` along the strip.
    pub fn horizontal_cylinders(&self) -> Vec<Cylinder> {
        let strips = Self::cycles(&self.r);
        let mut strip_of = vec![0; self.squares()];
        for (i, c) in strips.iter().enumerate() {
            for &x in c {
                strip_of[x] = i;
            }
        }
        let mut parent: Vec<usize> = (0..strips.len()).collect();
        for (i, c) in strips.iter().enumerate() {
            if c.iter().all(|&x| self.u[self.r[x]] == self.r[self.u[x]]) {
                union(&mut parent, i, strip_of[self.u[c[0]]]);
            }
        }
        let mut heights = std::collections::BTreeMap::new();
        for i in 0..strips.len() {
            let root = find(&mut parent, i);
            heights.entry(root).or_insert((strips[i].len() as i64, 0)).1 += 1;
        }
        let mut cyl: Vec<Cylinder> = heights
            .values()
            .map(|&(circumference, height)| Cylinder { circumference, height })
            .collect();
        cyl.sort();
        cyl
    }

    /// Transforms the surface by `A ∈ SL₂(ℤ)` with `A·(p, q)ᵀ = (±1, 0)ᵀ`
    /// and returns the image together with `A`.
    pub fn straighten(&self, p: i64, q: i64) -> (Self, IntMat) {
        assert!(arith::gcd(p, q) == 1, "direction must be primitive");
        let mut s = self.clone();
        let mut a = IntMat::int(1, 0, 0, 1);
        let (mut p, mut q) = (p, q);
        while q != 0 {
            let j = p.div_euclid(q);
            for _ in 0..j.abs() {
                s = if j > 0 { s.shear_inv() } else { s.shear() };
            }
            a = IntMat::int(1, -j, 0, 1).int_mul(&a).expect("small");
            p -= j * q;
            s = s.rotate();
            a = IntMat::int(0, -1, 1, 0).int_mul(&a).expect("small");
            (p, q) = (-q, p);
        }
        (s, a)
    }

    /// Cylinders in the primitive direction `(p, q)`, their twist parameter
    /// `k` (the least positive integer multiple of every inverse modulus) and
    /// the parabolic element `A⁻¹·(1 k; 0 1)·A` fixing the direction.
    pub fn cylinders_in_direction(&self, p: i64, q: i64) -> (Vec<Cylinder>, i64, IntMat) {
        let (s, a) = self.straighten(p, q);
        let cyl = s.horizontal_cylinders();
        let (num, den) = cyl.iter().fold((1i64, 0i64), |(n, d), c| {
            let inv = c.modulus().recip();
            (arith::lcm(n, *inv.numer()).expect("small"), arith::gcd(d, *inv.denom()))
        });
        // least integer multiple of the rational lcm num/den
        let k = Ratio::new(num, den).numer().to_owned();
        let ainv = a.inverse(&crate::ring::Integers).expect("det 1");
        let twist = ainv.int_mul(&IntMat::int(1, k, 0, 1)).and_then(|t| t.int_mul(&a)).expect("small");
        (cyl, k, twist)
    }

    /// Whether the two surfaces agree up to relabelling the squares.
    pub fn is_isomorphic(&self, other: &SquareTiled) -> bool {
        let n = self.squares();
        if other.squares() != n {
            return false;
        }
        'start: for j in 0..n {
            let mut phi = vec![usize::MAX; n];
            phi[0] = j;
            let mut stack = vec![0];
            while let Some(x) = stack.pop() {
                for (next, img) in [(self.r[x], other.r[phi[x]]), (self.u[x], other.u[phi[x]])] {
                    if phi[next] == usize::MAX {
                        phi[next] = img;
                        stack.push(next);
                    } else if phi[next] != img {
                        continue 'start;
                    }
                }
            }
            let mut seen = phi.clone();
            seen.sort_unstable();
            if seen.iter().enumerate().all(|(i, &v)| i == v) {
                return true;
            }
        }
        false
    }

    /// The primitive parabolic element of the Veech group fixing the
    /// direction `(p, q)`: `A⁻¹·(1 j; 0 1)·A` for the least `j ≥ 1` such that
    /// the straightened surface is invariant under the `j`-th shear.
    pub fn parabolic_in_direction(&self, p: i64, q: i64) -> (i64, IntMat) {
        let (s, a) = self.straighten(p, q);
        let mut t = s.shear();
        let mut j = 1;
        while !t.is_isomorphic(&s) {
            t = t.shear();
            j += 1;
        }
        let ainv = a.inverse(&crate::ring::Integers).expect("det 1");
        let m = ainv.int_mul(&IntMat::int(1, j, 0, 1)).and_then(|t| t.int_mul(&a)).expect("small");
        (j, m)
    }

    /// Vertex classes, as a map from squares to the class of their
    /// bottom-left corner.
    fn vertex_classes(&self) -> Vec<usize> {
        let n = self.squares();
        let mut parent: Vec<usize> = (0..n).collect();
        for x in 0..n {
            union(&mut parent, self.u[self.r[x]], self.r[self.u[x]]);
        }
        (0..n).map(|x| find(&mut parent, x)).collect()
    }

    /// The number of distinct lattice points (cone point included).
    pub fn vertex_count(&self) -> usize {
        let mut v = self.vertex_classes();
        v.sort_unstable();
        v.dedup();
        v.len()
    }

    /// The rotation by π as a permutation `ι` of squares with `ι∘r = r⁻¹∘ι`
    /// and `ι∘u = u⁻¹∘ι`, if the surface has one.
    pub fn half_turn(&self) -> Option<Vec<usize>> {
        let n = self.squares();
        let (ri, ui) = (inverse(&self.r), inverse(&self.u));
        'start: for j in 0..n {
            let mut iota = vec![usize::MAX; n];
            iota[0] = j;
            let mut stack = vec![0];
            while let Some(x) = stack.pop() {
                for (next, img) in [(self.r[x], ri[iota[x]]), (self.u[x], ui[iota[x]])] {
                    if iota[next] == usize::MAX {
                        iota[next] = img;
                        stack.push(next);
                    } else if iota[next] != img {
                        continue 'start;
                    }
                }
            }
            if iota.iter().all(|&v| v != usize::MAX) {
                return Some(iota);
            }
        }
        None
    }

    /// Lattice points fixed by the half turn. The bottom-left corner of `x`
    /// is carried to the top-right corner of `ι(x)`.
    pub fn integral_weierstrass_points(&self) -> Option<usize> {
        let iota = self.half_turn()?;
        let cls = self.vertex_classes();
        let mut fixed: Vec<usize> = (0..self.squares())
            .filter(|&x| cls[self.r[self.u[iota[x]]]] == cls[x])
            .map(|x| cls[x])
            .collect();
        fixed.sort_unstable();
        fixed.dedup();
        Some(fixed.len())
    }
}
