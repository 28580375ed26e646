//! Explicit word families in the catalog generators that lie in pairwise
//! distinct cosets of `Γ₀(𝔞)`, together with closed forms for the
//! lower-left entries their quotients produce.
//!
//! Throughout, `η⁺ = n − w`, `η⁻ = m − w` and `η* = η⁺η⁻`.

use crate::error::{Error, Result};
use crate::ideal::{primes_above, IdealHNF};
use crate::origami::{generator_catalog, Origami, OrbitClass};
use crate::quad_order::{Order, QuadInt};
use crate::sl2::{pairwise_incongruent, Mat2};

/// A family of words together with the modulus they are checked against.
#[derive(Debug, Clone)]
pub struct WordFamily {
    pub name: String,
    pub words: Vec<Mat2<QuadInt>>,
    pub modulus: IdealHNF,
}

impl WordFamily {
    pub fn is_pairwise_incongruent(&self) -> Result<bool> {
        pairwise_incongruent(&self.words, &self.modulus)
    }
}

struct Gens {
    order: Order,
    t: Mat2<QuadInt>,
    z: Mat2<QuadInt>,
    e: Option<Mat2<QuadInt>>,
}

fn gens(o: &Origami) -> Result<Gens> {
    let cat = generator_catalog(o)?;
    let t = cat
        .get("T")
        .ok_or_else(|| Error::NotApplicable(format!("{o} has no horizontal twist in its catalog")))?
        .matrix;
    Ok(Gens { order: o.order(), t, z: cat.get("Z").unwrap().matrix, e: cat.get("E").map(|e| e.matrix) })
}

fn word(order: &Order, parts: &[(Mat2<QuadInt>, i64)]) -> Result<Mat2<QuadInt>> {
    let mut acc = Mat2::identity(order);
    for (g, e) in parts {
        acc = acc.mul(order, &g.pow(order, *e)?)?;
    }
    Ok(acc)
}

fn coprime(a: i64, b: i64) -> bool {
    crate::arith::gcd(a, b) == 1
}

/// `W = Z·T^{h·p^k}·Z⁻¹` and the words `W^l·Z^{h·p^k·j}` for `1 ≤ j, l ≤ p`,
/// checked modulo `(h·p^{k+1})`.
///
/// Needs `p | d`, `gcd(m, p) = 1` and `gcd(h, p) = 1`; for `k = 0` also
/// `p | n`.
pub fn conjugated_twist_family(o: &Origami, p: i64, k: u32, h: i64) -> Result<WordFamily> {
    if o.d % p != 0 || !coprime(o.m, p) || !coprime(h, p) {
        return Err(Error::PreconditionViolated(format!(
            "need p | d, gcd(m, p) = 1 and gcd(h, p) = 1 (p = {p}, h = {h}, {o})"
        )));
    }
    if k == 0 && o.n % p != 0 {
        return Err(Error::PreconditionViolated(format!("k = 0 needs p | n (p = {p}, {o})")));
    }
    let g = gens(o)?;
    let hp = h * p.pow(k);
    let w = word(&g.order, &[(g.z, 1), (g.t, hp), (g.z, -1)])?;
    let mut words = Vec::new();
    for l in 1..=p {
        for j in 1..=p {
            words.push(word(&g.order, &[(w, l), (g.z, hp * j)])?);
        }
    }
    Ok(WordFamily {
        name: format!("conjugated twist, p = {p}, k = {k}, h = {h}"),
        words,
        modulus: IdealHNF::rational(g.order, h * p.pow(k + 1))?,
    })
}

/// Split primes above `p` that do not contain `η*`.
pub fn admissible_primes(o: &Origami, p: i64) -> Result<Vec<IdealHNF>> {
    if o.d % p == 0 {
        return Err(Error::PreconditionViolated(format!("p = {p} must not divide d = {}", o.d)));
    }
    let eta = o.eta_star();
    Ok(primes_above(o.order(), p)?.into_iter().filter(|q| !q.contains(&eta)).collect())
}

/// `k·c·η* + 1`.
fn shifted_eta(o: &Origami, k: i64, c: i64) -> Result<QuadInt> {
    o.eta_star().scale(k * c)?.add(&o.order().one())
}

/// For a split prime `𝔭` above `p` with `η* ∉ 𝔭`, the words `Z^{H·i}`
/// (`1 ≤ i ≤ p`) and `Z^{H·k}·T`, where `H = h²` and `k ∈ [1, p]` is chosen
/// with `k·H·η* + 1 ∈ 𝔭`. Checked modulo `h·𝔭`.
pub fn vertical_power_family(o: &Origami, prime: &IdealHNF, h: i64) -> Result<WordFamily> {
    let p = prime.norm();
    if prime.m() != 1 || prime.n() != p || o.d % p == 0 || !coprime(h, p) {
        return Err(Error::PreconditionViolated(format!("{prime} must be a split prime with gcd(h, p) = 1")));
    }
    if prime.contains(&o.eta_star()) {
        return Err(Error::PreconditionViolated(format!("η* lies in {prime}")));
    }
    let g = gens(o)?;
    let big_h = h * h;
    let k = (1..=p)
        .find(|&k| shifted_eta(o, k, big_h).map(|x| prime.contains(&x)).unwrap_or(false))
        .ok_or_else(|| Error::PreconditionViolated(format!("no k with kHη* + 1 in {prime}")))?;
    let mut words: Vec<_> = (1..=p).map(|i| g.z.pow(&g.order, big_h * i)).collect::<Result<_>>()?;
    words.push(word(&g.order, &[(g.z, big_h * k), (g.t, 1)])?);
    Ok(WordFamily {
        name: format!("vertical powers at {prime}, h = {h}"),
        words,
        modulus: IdealHNF::rational(g.order, h)?.multiply(prime)?,
    })
}

/// For `p` split with neither prime containing `η*`:
/// `W = Z·T^k·Z^H·T^{−k}·Z⁻¹` with `k ∈ [1, p−1]` chosen so that
/// `k·η* + 1 ∈ 𝔭^σ`, and the words `W·T^i` (`1 ≤ i ≤ p`) together with the
/// identity. Checked modulo `h·𝔭^σ·𝔭`.
pub fn double_conjugate_family(o: &Origami, prime: &IdealHNF, h: i64) -> Result<WordFamily> {
    let p = prime.norm();
    let sigma = prime.conjugate();
    if prime.m() != 1 || prime.n() != p || sigma == *prime || !coprime(h, p) {
        return Err(Error::PreconditionViolated(format!("{prime} must be a split prime with gcd(h, p) = 1")));
    }
    if prime.contains(&o.eta_star()) || sigma.contains(&o.eta_star()) {
        return Err(Error::PreconditionViolated(format!("η* lies in a prime above {p}")));
    }
    let g = gens(o)?;
    let big_h = h * h;
    let k = (1..p)
        .find(|&k| shifted_eta(o, k, 1).map(|x| sigma.contains(&x)).unwrap_or(false))
        .ok_or_else(|| Error::PreconditionViolated(format!("no k with kη* + 1 in {sigma}")))?;
    let w = word(&g.order, &[(g.z, 1), (g.t, k), (g.z, big_h), (g.t, -k), (g.z, -1)])?;
    let mut words: Vec<_> = (1..=p).map(|i| word(&g.order, &[(w, 1), (g.t, i)])).collect::<Result<_>>()?;
    words.push(Mat2::identity(&g.order));
    Ok(WordFamily {
        name: format!("double conjugate at {prime}, h = {h}"),
        words,
        modulus: IdealHNF::rational(g.order, h)?.multiply(&sigma)?.multiply(prime)?,
    })
}

/// `T^H, Z^H, Z^H·T^H` and, for odd `d`, also `E^H, E^H·Z^H, E^H·Z^H·T^H`,
/// with `H = h²` and `h` odd. Checked modulo `(2h)`.
///
/// For odd `d` the surface must be in class A, for even `d` it must be
/// `L(d−1, 2)`.
pub fn level_two_family(o: &Origami, h: i64) -> Result<WordFamily> {
    if h % 2 == 0 {
        return Err(Error::PreconditionViolated(format!("h = {h} must be odd")));
    }
    if o.d % 2 == 1 && o.class != OrbitClass::A {
        return Err(Error::PreconditionViolated(format!("{o} is not in class A")));
    }
    if o.d % 2 == 0 && o.n != 2 {
        return Err(Error::PreconditionViolated(format!("for even d the family is built on L(d-1, 2), not {o}")));
    }
    let g = gens(o)?;
    let big_h = h * h;
    let (t, z) = (g.t.pow(&g.order, big_h)?, g.z.pow(&g.order, big_h)?);
    let mut words = vec![t, z, word(&g.order, &[(z, 1), (t, 1)])?];
    if o.d % 2 == 1 {
        let e = g.e.expect("E exists when T does").pow(&g.order, big_h)?;
        words.extend([e, word(&g.order, &[(e, 1), (z, 1)])?, word(&g.order, &[(e, 1), (z, 1), (t, 1)])?]);
    }
    Ok(WordFamily { name: format!("level two, h = {h}"), words, modulus: IdealHNF::rational(g.order, 2 * h)? })
}

/// Closed forms for lower-left entries of products of `T` and `Z`.
pub mod closed_form {
    use super::*;

    fn eta(o: &Origami) -> (QuadInt, QuadInt) {
        (o.eta_plus(), o.eta_minus())
    }

    /// `(Z^{Hk}·T·Z^{−Hi})₂₁ = Hη⁻·(k − (kHη⁻η⁺ + 1)·i)`.
    pub fn vertical_power(o: &Origami, big_h: i64, k: i64, i: i64) -> Result<QuadInt> {
        let (_, em) = eta(o);
        let q = shifted_eta(o, k, big_h)?;
        em.scale(big_h)?.mul(&o.order().int(k).sub(&q.scale(i)?)?)
    }

    /// `(W·T^i)₂₁ = Hη⁻·(kη* + 1)²` for `W = Z·T^k·Z^H·T^{−k}·Z⁻¹`,
    /// independent of `i`.
    pub fn double_conjugate(o: &Origami, big_h: i64, k: i64) -> Result<QuadInt> {
        let (_, em) = eta(o);
        let q = shifted_eta(o, k, 1)?;
        em.scale(big_h)?.mul(&q.pow(2)?)
    }

    /// `(W·T^x·W⁻¹)₂₁ = −H²·x·η⁻²η⁺·(kη* + 1)⁴` for the same `W`.
    pub fn double_conjugate_twist(o: &Origami, big_h: i64, k: i64, x: i64) -> Result<QuadInt> {
        let (ep, em) = eta(o);
        let q = shifted_eta(o, k, 1)?;
        em.pow(2)?.mul(&ep)?.mul(&q.pow(4)?)?.scale(-big_h * big_h * x)
    }

    /// `(W^y·Z^{c·x}·W^{−l})₂₁` for `W = Z·T^c·Z⁻¹`:
    /// `c³ylx·η⁻³η⁺² + c²(y+l)x·η⁻²η⁺ + cη⁻·(x + (l−y)·η*)`.
    pub fn conjugated_twist(o: &Origami, c: i64, y: i64, l: i64, x: i64) -> Result<QuadInt> {
        let (ep, em) = eta(o);
        let v1 = em.pow(3)?.mul(&ep.pow(2)?)?.scale(c.pow(3) * y * l * x)?;
        let v2 = em.pow(2)?.mul(&ep)?.scale(c * c * (y + l) * x)?;
        let v3 = em.scale(c)?.mul(&o.order().int(x).add(&o.eta_star().scale(l - y)?)?)?;
        v1.add(&v2)?.add(&v3)
    }

    /// The corresponding exact products, for comparison.
    pub mod exact {
        use super::super::*;

        pub fn vertical_power(o: &Origami, big_h: i64, k: i64, i: i64) -> Result<QuadInt> {
            let g = gens(o)?;
            Ok(word(&g.order, &[(g.z, big_h * k), (g.t, 1), (g.z, -big_h * i)])?.c)
        }

        fn w(o: &Origami, big_h: i64, k: i64) -> Result<(Gens, Mat2<QuadInt>)> {
            let g = gens(o)?;
            let w = word(&g.order, &[(g.z, 1), (g.t, k), (g.z, big_h), (g.t, -k), (g.z, -1)])?;
            Ok((g, w))
        }

        pub fn double_conjugate(o: &Origami, big_h: i64, k: i64, i: i64) -> Result<QuadInt> {
            let (g, w) = w(o, big_h, k)?;
            Ok(word(&g.order, &[(w, 1), (g.t, i)])?.c)
        }

        pub fn double_conjugate_twist(o: &Origami, big_h: i64, k: i64, x: i64) -> Result<QuadInt> {
            let (g, w) = w(o, big_h, k)?;
            Ok(word(&g.order, &[(w, 1), (g.t, x), (w, -1)])?.c)
        }

        pub fn conjugated_twist(o: &Origami, c: i64, y: i64, l: i64, x: i64) -> Result<QuadInt> {
            let g = gens(o)?;
            let w = word(&g.order, &[(g.z, 1), (g.t, c), (g.z, -1)])?;
            Ok(word(&g.order, &[(w, y), (g.z, c * x), (w, -l)])?.c)
        }
    }
}
