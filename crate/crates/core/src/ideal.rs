//! Ideals of `O_{d²}` in canonical form `[n; a + m·w] = nℤ ⊕ (a + m·w)ℤ`.

use std::fmt;

use crate::arith;
use crate::error::{Error, Result};
use crate::hnf::Echelon;
use crate::quad_order::{Order, QuadInt};

/// A full-rank ℤ-submodule of `O_D` in Hermite form `(n, a, m)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ModuleHnf {
    pub n: i64,
    pub a: i64,
    pub m: i64,
}

/// Hermite form of the ℤ-span of `gens`.
pub fn module_hnf(gens: &[QuadInt]) -> Result<ModuleHnf> {
    if gens.iter().all(QuadInt::is_zero) {
        return Err(Error::ZeroModule);
    }
    let cols: Vec<(i128, i128)> = gens
        .iter()
        .map(|z| {
            let (u, v) = z.coords();
            (u as i128, v as i128)
        })
        .collect();
    let e = Echelon::new(&cols);
    let (n, a, m) = (arith::narrow(e.base)?, arith::narrow(e.pivot.0)?, arith::narrow(e.pivot.1)?);
    if n == 0 || m == 0 {
        return Err(Error::DegenerateRank { n, a, m });
    }
    Ok(ModuleHnf { n, a, m })
}

/// The ideal criterion: `m | n`, `m | a` and `n | m·b(b + d)` with `b = a/m`.
pub fn is_ideal(d: i64, n: i64, a: i64, m: i64) -> bool {
    if n < 1 || m < 1 || n % m != 0 || a % m != 0 {
        return false;
    }
    let b = (a / m) as i128;
    (m as i128 * b * (b + d as i128)) % n as i128 == 0
}

/// A nonzero ideal `[n; a + m·w]` with `0 ≤ a < n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct IdealHNF {
    d: i64,
    n: i64,
    a: i64,
    m: i64,
}

impl IdealHNF {
    /// Validates the ideal criterion after reducing `a` modulo `n`.
    pub fn new(order: Order, n: i64, a: i64, m: i64) -> Result<Self> {
        if n < 1 || m < 1 {
            return Err(Error::NotAnIdeal { n, a, m });
        }
        let a = a.rem_euclid(n);
        if !is_ideal(order.d(), n, a, m) {
            return Err(Error::NotAnIdeal { n, a, m });
        }
        Ok(IdealHNF { d: order.d(), n, a, m })
    }

    fn from_module(order: Order, h: ModuleHnf) -> Result<Self> {
        Self::new(order, h.n, h.a, h.m)
    }

    fn from_gens(order: Order, gens: &[QuadInt]) -> Result<Self> {
        Self::from_module(order, module_hnf(gens)?)
    }

    /// The whole ring `[1; 0 + w]`.
    pub fn unit(order: Order) -> Self {
        IdealHNF { d: order.d(), n: 1, a: 0, m: 1 }
    }

    /// The principal ideal `(k) = [k; 0 + k·w]` of a positive integer.
    pub fn rational(order: Order, k: i64) -> Result<Self> {
        if k < 1 {
            return Err(Error::PreconditionViolated(format!("(k) needs k >= 1, got {k}")));
        }
        Ok(IdealHNF { d: order.d(), n: k, a: 0, m: k })
    }

    /// The principal ideal `(z) = z·O_D`.
    pub fn principal(z: &QuadInt) -> Result<Self> {
        if z.norm()? == 0 {
            return Err(Error::ZeroDivisorIdeal);
        }
        let order = z.order();
        Self::from_gens(order, &[*z, z.mul(&order.w())?])
    }

    pub fn order(&self) -> Order {
        Order::new(self.d).expect("stored d is valid")
    }

    pub fn d(&self) -> i64 {
        self.d
    }
    pub fn n(&self) -> i64 {
        self.n
    }
    pub fn a(&self) -> i64 {
        self.a
    }
    pub fn m(&self) -> i64 {
        self.m
    }

    /// `𝒩(𝔞) = m·n = |O_D/𝔞|`.
    pub fn norm(&self) -> i64 {
        self.n * self.m
    }

    pub fn is_unit_ideal(&self) -> bool {
        self.n == 1
    }

    /// The ℤ-basis `n·𝟙`, `a·𝟙 + m·w`.
    pub fn generators(&self) -> [QuadInt; 2] {
        let o = self.order();
        [o.int(self.n), o.from_coords(self.a, self.m).expect("basis fits")]
    }

    fn same(&self, o: &IdealHNF) -> Result<()> {
        if self.d != o.d {
            return Err(Error::ContextMismatch { left: self.d, right: o.d });
        }
        Ok(())
    }

    /// `[n; a + m·w]^σ`, the Hermite form of `{n·𝟙, (a + m·d)·𝟙 − m·w}`.
    pub fn conjugate(&self) -> Self {
        let g = self.generators().map(|z| z.conjugate());
        Self::from_gens(self.order(), &g).expect("conjugate of an ideal is an ideal")
    }

    pub fn multiply(&self, o: &IdealHNF) -> Result<Self> {
        self.same(o)?;
        let (g, h) = (self.generators(), o.generators());
        let prods = [g[0].mul(&h[0])?, g[0].mul(&h[1])?, g[1].mul(&h[0])?, g[1].mul(&h[1])?];
        Self::from_gens(self.order(), &prods)
    }

    pub fn pow(&self, e: u32) -> Result<Self> {
        let mut acc = Self::unit(self.order());
        for _ in 0..e {
            acc = acc.multiply(self)?;
        }
        Ok(acc)
    }

    /// The ideal sum `𝔞 + 𝔟`, i.e. the gcd.
    pub fn sum(&self, o: &IdealHNF) -> Result<Self> {
        self.same(o)?;
        let (g, h) = (self.generators(), o.generators());
        Self::from_gens(self.order(), &[g[0], g[1], h[0], h[1]])
    }

    /// Whether `z ∈ 𝔞`.
    pub fn contains(&self, z: &QuadInt) -> bool {
        if z.d() != self.d {
            return false;
        }
        let (u, v) = z.coords();
        let (u, v) = (u as i128, v as i128);
        if v % self.m as i128 != 0 {
            return false;
        }
        (u - (v / self.m as i128) * self.a as i128) % self.n as i128 == 0
    }

    /// Whether `𝔟 ⊆ 𝔞`; for a prime `𝔞` this is "𝔞 divides 𝔟".
    pub fn contains_ideal(&self, b: &IdealHNF) -> bool {
        b.d == self.d && b.generators().iter().all(|z| self.contains(z))
    }

    /// Largest `k` with `self ⊆ 𝔭^k`, bounded by the norm.
    pub fn valuation_at(&self, p: &IdealHNF) -> Result<u32> {
        if p.is_unit_ideal() {
            return Err(Error::PreconditionViolated("valuation at the unit ideal".into()));
        }
        let mut k = 0;
        let mut pk = *p;
        while pk.norm() <= self.norm() && pk.contains_ideal(self) {
            k += 1;
            pk = pk.multiply(p)?;
        }
        Ok(k)
    }
}

impl fmt::Display for IdealHNF {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.m == 1 {
            write!(f, "[{};{}+w]", self.n, self.a)
        } else {
            write!(f, "[{};{}+{}w]", self.n, self.a, self.m)
        }
    }
}

/// The prime ideals of norm `p`: `[p; 0 + w]`, and also `[p; a + w]` with
/// `a ≡ −d (mod p)` when `p ∤ d`.
pub fn primes_above(order: Order, p: i64) -> Result<Vec<IdealHNF>> {
    if !arith::is_prime(p) {
        return Err(Error::PreconditionViolated(format!("{p} is not prime")));
    }
    let first = IdealHNF::new(order, p, 0, 1)?;
    if order.d() % p == 0 {
        return Ok(vec![first]);
    }
    Ok(vec![first, IdealHNF::new(order, p, (-order.d()).rem_euclid(p), 1)?])
}

/// All ideals of norm at most `max_norm`, ordered by `(norm, n, a, m)`.
pub fn enumerate(order: Order, max_norm: i64) -> Vec<IdealHNF> {
    let mut out = Vec::new();
    for norm in 1..=max_norm {
        for m in (1..=norm).filter(|m| norm % m == 0) {
            let n = norm / m;
            if n % m != 0 {
                continue;
            }
            for a in (0..n).step_by(m as usize) {
                if is_ideal(order.d(), n, a, m) {
                    out.push(IdealHNF { d: order.d(), n, a, m });
                }
            }
        }
    }
    out.sort_by_key(|i| (i.norm(), i.n, i.a, i.m));
    out
}

/// One local factor of an ideal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Factor {
    /// `𝔭^e · (𝔭^σ)^f` for a split prime `p ∤ d`; `prime` is `[p; 0 + w]`.
    Split { p: i64, prime: IdealHNF, exponent: u32, conjugate_exponent: u32 },
    /// `(p)^e`, times `[p; w]` when `with_prime` is set, for `p | d`.
    Ramified { p: i64, exponent: u32, with_prime: bool },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdealFactorization {
    pub order: Order,
    pub factors: Vec<Factor>,
}

impl Factor {
    fn ideal(&self, order: Order) -> Result<IdealHNF> {
        match *self {
            Factor::Split { prime, exponent, conjugate_exponent, .. } => {
                prime.pow(exponent)?.multiply(&prime.conjugate().pow(conjugate_exponent)?)
            }
            Factor::Ramified { p, exponent, with_prime } => {
                let pe = IdealHNF::rational(order, arith::checked_pow(p, exponent)?)?;
                if with_prime {
                    pe.multiply(&IdealHNF::new(order, p, 0, 1)?)
                } else {
                    Ok(pe)
                }
            }
        }
    }
}

impl IdealFactorization {
    pub fn recombine(&self) -> Result<IdealHNF> {
        self.factors
            .iter()
            .try_fold(IdealHNF::unit(self.order), |acc, f| acc.multiply(&f.ideal(self.order)?))
    }
}

impl fmt::Display for IdealFactorization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return write!(f, "(1)");
        }
        let mut parts = Vec::new();
        for fac in &self.factors {
            match fac {
                Factor::Split { prime, exponent, conjugate_exponent, .. } => {
                    for (q, e) in [(*prime, *exponent), (prime.conjugate(), *conjugate_exponent)] {
                        match e {
                            0 => {}
                            1 => parts.push(format!("{q}")),
                            e => parts.push(format!("{q}^{e}")),
                        }
                    }
                }
                Factor::Ramified { p, exponent, with_prime } => {
                    match exponent {
                        0 => {}
                        1 => parts.push(format!("({p})")),
                        e => parts.push(format!("({p})^{e}")),
                    }
                    if *with_prime {
                        parts.push(format!("[{p};0+w]"));
                    }
                }
            }
        }
        write!(f, "{}", parts.join("·"))
    }
}

impl IdealHNF {
    /// Prime factorization; for `p | d` only the shapes `(p)^e` and
    /// `(p)^e·[p; w]` are accepted.
    pub fn factor(&self) -> Result<IdealFactorization> {
        let order = self.order();
        let mut factors = Vec::new();
        for (p, e) in arith::factor(self.norm()) {
            let local = if self.d % p == 0 {
                let mut k = 0;
                while k < e && IdealHNF::rational(order, arith::checked_pow(p, k + 1)?)?.contains_ideal(self) {
                    k += 1;
                }
                let with_prime = IdealHNF::rational(order, arith::checked_pow(p, k)?)?
                    .multiply(&IdealHNF::new(order, p, 0, 1)?)?
                    .contains_ideal(self);
                Factor::Ramified { p, exponent: k, with_prime }
            } else {
                let primes = primes_above(order, p)?;
                Factor::Split {
                    p,
                    prime: primes[0],
                    exponent: self.valuation_at(&primes[0])?,
                    conjugate_exponent: self.valuation_at(&primes[1])?,
                }
            };
            // compare completions at p: 𝔞 + (p^K) for K past the p-part of the norm
            let big = IdealHNF::rational(order, arith::checked_pow(p, e + 1)?)?;
            if self.sum(&big)? != local.ideal(order)?.sum(&big)? {
                return Err(Error::FactorizationAmbiguous { p });
            }
            factors.push(local);
        }
        let f = IdealFactorization { order, factors };
        debug_assert_eq!(f.recombine().ok(), Some(*self));
        Ok(f)
    }
}

/// Parses `[n;a+m w]`, `(k)` or `P(p,i)`, ignoring whitespace.
pub fn parse_literal(order: Order, s: &str) -> Result<IdealHNF> {
    let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    let bad = || Error::Parse(format!("bad ideal literal {s:?}"));
    let int = |t: &str| t.parse::<i64>().map_err(|_| bad());
    if let Some(body) = s.strip_prefix("P(").and_then(|r| r.strip_suffix(')')) {
        let (p, i) = body.split_once(',').ok_or_else(bad)?;
        let (p, i) = (int(p)?, int(i)?);
        let primes = primes_above(order, p)?;
        return usize::try_from(i)
            .ok()
            .and_then(|i| primes.get(i).copied())
            .ok_or_else(|| Error::Parse(format!("no prime P({p},{i}) above {p} for d = {}", order.d())));
    }
    if let Some(body) = s.strip_prefix('(').and_then(|r| r.strip_suffix(')')) {
        return IdealHNF::rational(order, int(body)?);
    }
    let body = s.strip_prefix('[').and_then(|r| r.strip_suffix(']')).ok_or_else(bad)?;
    let (n, rest) = body.split_once(';').ok_or_else(bad)?;
    let rest = rest.strip_suffix('w').ok_or_else(bad)?;
    // split "a+m" / "a-m" at the last sign that is not leading
    let pos = rest
        .char_indices()
        .skip(1)
        .filter(|&(_, c)| c == '+' || c == '-')
        .map(|(i, _)| i)
        .last()
        .ok_or_else(bad)?;
    let (a, m) = rest.split_at(pos);
    let m = match m {
        "+" => 1,
        "-" => -1,
        m => int(m.strip_prefix('+').unwrap_or(m))?,
    };
    let (a, m) = if m < 0 { (-int(a)?, -m) } else { (int(a)?, m) };
    IdealHNF::new(order, int(n)?, a, m)
}
