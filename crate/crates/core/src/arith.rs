//! Checked integer helpers and small-number factorization.

use crate::error::{Error, Result};

#[inline]
pub fn add(a: i64, b: i64) -> Result<i64> {
    a.checked_add(b).ok_or(Error::Overflow)
}

#[inline]
pub fn sub(a: i64, b: i64) -> Result<i64> {
    a.checked_sub(b).ok_or(Error::Overflow)
}

#[inline]
pub fn mul(a: i64, b: i64) -> Result<i64> {
    a.checked_mul(b).ok_or(Error::Overflow)
}

#[inline]
pub fn neg(a: i64) -> Result<i64> {
    a.checked_neg().ok_or(Error::Overflow)
}

pub fn checked_pow(base: i64, e: u32) -> Result<i64> {
    base.checked_pow(e).ok_or(Error::Overflow)
}

pub fn narrow(v: i128) -> Result<i64> {
    i64::try_from(v).map_err(|_| Error::Overflow)
}

pub fn gcd(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.unsigned_abs(), b.unsigned_abs());
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a as i64
}

pub fn lcm(a: i64, b: i64) -> Result<i64> {
    if a == 0 || b == 0 {
        return Ok(0);
    }
    mul(a / gcd(a, b), b).map(i64::abs)
}

/// Extended Euclid: returns (g, s, t) with g = s*a + t*b and g >= 0.
pub fn ext_gcd(a: i128, b: i128) -> (i128, i128, i128) {
    let (mut r0, mut r1) = (a, b);
    let (mut s0, mut s1) = (1i128, 0i128);
    let (mut t0, mut t1) = (0i128, 1i128);
    while r1 != 0 {
        let q = r0.div_euclid(r1);
        (r0, r1) = (r1, r0 - q * r1);
        (s0, s1) = (s1, s0 - q * s1);
        (t0, t1) = (t1, t0 - q * t1);
    }
    if r0 < 0 {
        (-r0, -s0, -t0)
    } else {
        (r0, s0, t0)
    }
}

/// Inverse of `a` modulo `n`, if it exists.
pub fn inv_mod(a: i64, n: i64) -> Option<i64> {
    let (g, s, _) = ext_gcd(a.rem_euclid(n) as i128, n as i128);
    (g == 1).then(|| (s.rem_euclid(n as i128)) as i64)
}

/// Exact division, `None` if `b` does not divide `a`.
pub fn exact_div(a: i64, b: i64) -> Option<i64> {
    (b != 0 && a % b == 0).then(|| a / b)
}

pub fn is_prime(n: i64) -> bool {
    if n < 2 {
        return false;
    }
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            return false;
        }
        p += 1;
    }
    true
}

pub fn is_squarefree(n: i64) -> bool {
    factor(n).iter().all(|&(_, e)| e == 1)
}

/// Trial-division factorization of |n| into (prime, exponent) pairs, ascending.
pub fn factor(n: i64) -> Vec<(i64, u32)> {
    let mut n = n.unsigned_abs();
    let mut out = Vec::new();
    let mut p = 2u64;
    while p * p <= n {
        if n % p == 0 {
            let mut e = 0;
            while n % p == 0 {
                n /= p;
                e += 1;
            }
            out.push((p as i64, e));
        }
        p += 1;
    }
    if n > 1 {
        out.push((n as i64, 1));
    }
    out
}

pub fn primes_up_to(limit: i64) -> Vec<i64> {
    (2..=limit).filter(|&p| is_prime(p)).collect()
}
