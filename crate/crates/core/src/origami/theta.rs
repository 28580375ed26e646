//! Genus-two theta characteristics `[ε; ε′]` with `ε, ε′ ∈ {0,1}²`.

use std::fmt;

use crate::error::{Error, Result};

/// A characteristic displayed as the 2×2 array with rows `ε` and `ε′`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ThetaChar {
    pub eps: [u8; 2],
    pub eps_prime: [u8; 2],
}

impl ThetaChar {
    pub const fn new(eps: [u8; 2], eps_prime: [u8; 2]) -> Self {
        ThetaChar { eps, eps_prime }
    }

    /// `ε·ε′ᵀ mod 2`.
    pub fn parity(&self) -> u8 {
        (self.eps[0] * self.eps_prime[0] + self.eps[1] * self.eps_prime[1]) % 2
    }

    pub fn is_odd(&self) -> bool {
        self.parity() == 1
    }

    /// Column `i` as `(ε_i, ε′_i)`.
    pub fn column(&self, i: usize) -> [u8; 2] {
        [self.eps[i], self.eps_prime[i]]
    }

    /// Componentwise sum mod 2.
    pub fn translate(&self, t: &ThetaChar) -> ThetaChar {
        ThetaChar {
            eps: [(self.eps[0] + t.eps[0]) % 2, (self.eps[1] + t.eps[1]) % 2],
            eps_prime: [(self.eps_prime[0] + t.eps_prime[0]) % 2, (self.eps_prime[1] + t.eps_prime[1]) % 2],
        }
    }
}

impl fmt::Display for ThetaChar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{} {}; {} {}]", self.eps[0], self.eps[1], self.eps_prime[0], self.eps_prime[1])
    }
}

/// The six odd characteristics.
pub fn odd_theta_chars() -> [ThetaChar; 6] {
    [
        ThetaChar::new([0, 1], [0, 1]),
        ThetaChar::new([0, 1], [1, 1]),
        ThetaChar::new([1, 1], [0, 1]),
        ThetaChar::new([1, 0], [1, 0]),
        ThetaChar::new([1, 0], [1, 1]),
        ThetaChar::new([1, 1], [1, 0]),
    ]
}

/// How many of the six odd characteristics, translated by `t`, have second
/// column `(0, 0)`.
pub fn translate_count(t: &ThetaChar) -> Result<usize> {
    if !t.is_odd() {
        return Err(Error::NotOdd);
    }
    Ok(odd_theta_chars().iter().filter(|s| s.translate(t).column(1) == [0, 0]).count())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_listed_are_odd_and_distinct() {
        let all = odd_theta_chars();
        assert!(all.iter().all(ThetaChar::is_odd));
        let mut odd = 0;
        for a in 0..16u8 {
            let c = ThetaChar::new([a & 1, (a >> 1) & 1], [(a >> 2) & 1, (a >> 3) & 1]);
            if c.is_odd() {
                odd += 1;
                assert!(all.contains(&c));
            }
        }
        assert_eq!(odd, 6);
    }

    #[test]
    fn examples() {
        assert_eq!(translate_count(&ThetaChar::new([1, 0], [1, 0])).unwrap(), 1);
        assert_eq!(translate_count(&ThetaChar::new([1, 1], [0, 1])).unwrap(), 3);
        assert_eq!(translate_count(&ThetaChar::new([0, 0], [0, 0])), Err(Error::NotOdd));
    }

    #[test]
    fn rule_by_first_column() {
        for t in odd_theta_chars() {
            let expected = if t.column(0) == [1, 1] { 1 } else { 3 };
            assert_eq!(translate_count(&t).unwrap(), expected, "{t}");
        }
    }
}
