//! Truncated logarithm and exponential of unipotent matrices over `F_p`.

use super::Mat2;
use super::closure::closure;
use crate::arith;
use crate::error::{Error, Result};
use crate::ring::{Ring, Zmod};

fn field(p: i64) -> Result<Zmod> {
    if p <= 2 || !arith::is_prime(p) {
        return Err(Error::PreconditionViolated(format!("need an odd prime, got {p}")));
    }
    Zmod::new(p)
}

fn sub(f: &Zmod, x: &Mat2<i64>, y: &Mat2<i64>) -> Result<Mat2<i64>> {
    Ok(Mat2::new(f.sub(x.a, y.a)?, f.sub(x.b, y.b)?, f.sub(x.c, y.c)?, f.sub(x.d, y.d)?))
}

fn add(f: &Zmod, x: &Mat2<i64>, y: &Mat2<i64>) -> Result<Mat2<i64>> {
    Ok(Mat2::new(f.add(x.a, y.a)?, f.add(x.b, y.b)?, f.add(x.c, y.c)?, f.add(x.d, y.d)?))
}

fn scale(f: &Zmod, k: i64, x: &Mat2<i64>) -> Mat2<i64> {
    x.map(|e| f.mul(k, e)).expect("field arithmetic")
}

fn zero() -> Mat2<i64> {
    Mat2::new(0, 0, 0, 0)
}

/// `log x = −Σ_{i=1}^{p−1} (1 − x)^i / i`; requires `(x − 1)² = 0`.
pub fn nori_log(x: &Mat2<i64>, p: i64) -> Result<Mat2<i64>> {
    let f = field(p)?;
    let x = x.map(|e| Ok(f.reduce(e)))?;
    let id = Mat2::identity(&f);
    let n = sub(&f, &id, &x)?;
    if n.mul(&f, &n)? != zero() {
        return Err(Error::NotUnipotent);
    }
    let mut acc = zero();
    let mut power = id;
    for i in 1..p {
        power = power.mul(&f, &n)?;
        let inv = f.inv(i).expect("i < p is invertible");
        acc = add(&f, &acc, &scale(&f, inv, &power))?;
    }
    Ok(scale(&f, p - 1, &acc))
}

/// `exp y = Σ_{i=0}^{p−1} y^i / i!` for nilpotent `y`.
pub fn nori_exp(y: &Mat2<i64>, p: i64) -> Result<Mat2<i64>> {
    let f = field(p)?;
    let y = y.map(|e| Ok(f.reduce(e)))?;
    let mut acc = Mat2::identity(&f);
    let mut power = Mat2::identity(&f);
    let mut fact = 1;
    for i in 1..p {
        power = power.mul(&f, &y)?;
        fact = f.mul(fact, i)?;
        acc = add(&f, &acc, &scale(&f, f.inv(fact).expect("i! < p! is a unit"), &power))?;
    }
    Ok(acc)
}

/// The one-parameter subgroup `x(t) = exp(t·log x)`.
pub fn nori_log_exp(x: &Mat2<i64>, t: i64, p: i64) -> Result<Mat2<i64>> {
    let f = field(p)?;
    let l = nori_log(x, p)?;
    nori_exp(&scale(&f, f.reduce(t), &l), p)
}

/// Order of the subgroup of `SL₂(F_p)` generated by unipotent matrices,
/// which must be `1`, `p` or `p³ − p`.
pub fn nori_order_check(p: i64, gens: &[Mat2<i64>]) -> Result<usize> {
    let f = field(p)?;
    let gens = gens
        .iter()
        .map(|g| {
            nori_log(g, p)?;
            g.map(|e| Ok(f.reduce(e)))
        })
        .collect::<Result<Vec<_>>>()?;
    let order = closure(&f, &gens, (p * p * p) as u64)?.order();
    let pu = p as usize;
    if order != 1 && order != pu && order != pu * pu * pu - pu {
        return Err(Error::CorollaryViolated { p, order });
    }
    Ok(order)
}

/// A uniformly chosen unipotent `1 + t·(ab, −a²; b², −ab)` over `F_p`.
pub fn random_unipotent<G: rand::Rng>(rng: &mut G, p: i64) -> Mat2<i64> {
    let (a, b, t) = (rng.gen_range(0..p), rng.gen_range(0..p), rng.gen_range(0..p));
    let r = |v: i64| v.rem_euclid(p);
    Mat2::new(r(1 + t * a * b), r(-t * a * a), r(t * b * b), r(1 - t * a * b))
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;

    #[test]
    fn log_exp_examples() {
        let x = Mat2::new(1, 1, 0, 1);
        assert_eq!(nori_log_exp(&x, 3, 5).unwrap(), Mat2::new(1, 3, 0, 1));
        assert_eq!(nori_log_exp(&x, 0, 5).unwrap(), Mat2::new(1, 0, 0, 1));
        assert_eq!(nori_log_exp(&x, 1, 5).unwrap(), x);
        assert_eq!(nori_log(&Mat2::new(2, 0, 0, 3), 5), Err(Error::NotUnipotent));
        assert!(nori_log(&x, 4).is_err());
    }

    #[test]
    fn log_is_x_minus_one() {
        let mut rng = rand::rngs::StdRng::seed_from_u64(7);
        for p in [3, 5, 7, 11] {
            for _ in 0..20 {
                let x = random_unipotent(&mut rng, p);
                let l = nori_log(&x, p).unwrap();
                let f = Zmod::new(p).unwrap();
                assert_eq!(l, sub(&f, &x, &Mat2::identity(&f)).unwrap());
                assert_eq!(x.pow(&f, p).unwrap(), Mat2::identity(&f));
                assert_eq!(x.det(&f).unwrap(), 1);
            }
        }
    }

    #[test]
    fn one_parameter_law_f7() {
        let x = Mat2::new(1, 0, 2, 1);
        for t in 0..7 {
            for s in 0..7 {
                let f = Zmod::new(7).unwrap();
                let lhs = nori_log_exp(&x, t, 7).unwrap().mul(&f, &nori_log_exp(&x, s, 7).unwrap()).unwrap();
                assert_eq!(lhs, nori_log_exp(&x, t + s, 7).unwrap());
            }
        }
    }

    #[test]
    fn order_examples() {
        assert_eq!(nori_order_check(5, &[Mat2::new(1, 1, 0, 1)]).unwrap(), 5);
        assert_eq!(nori_order_check(5, &[Mat2::new(1, 1, 0, 1), Mat2::new(1, 0, 1, 1)]).unwrap(), 120);
        assert_eq!(nori_order_check(7, &[Mat2::new(1, 0, 0, 1)]).unwrap(), 1);
        assert_eq!(nori_order_check(7, &[Mat2::new(2, 0, 0, 4)]), Err(Error::NotUnipotent));
    }
}
