//! The integers, with the ideal `nZ` stored as `n >= 0`.
//!
//! Every nonzero ideal of `Z` is invertible and the radical ideals are the
//! squarefree ones, so factorizations reduce to divisor arithmetic.

use serde::Serialize;

use crate::error::{Error, Result};

/// The ideal `nZ`; `0` is the zero ideal and `1` the whole ring.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct IntegerIdeal(pub u64);

impl IntegerIdeal {
    pub fn product(self, other: IntegerIdeal) -> IntegerIdeal {
        IntegerIdeal(self.0 * other.0)
    }

    pub fn sum(self, other: IntegerIdeal) -> IntegerIdeal {
        IntegerIdeal(gcd(self.0, other.0))
    }

    /// `self ⊆ other`.
    pub fn is_subset(self, other: IntegerIdeal) -> bool {
        match (self.0, other.0) {
            (_, 0) => self.0 == 0,
            (a, b) => a % b == 0,
        }
    }

    pub fn is_proper(self) -> bool {
        self.0 != 1
    }

    pub fn is_invertible(self) -> bool {
        self.0 != 0
    }

    pub fn is_radical(self) -> bool {
        int_radical(self.0) == self.0
    }

    pub fn is_prime(self) -> bool {
        self.0 == 0 || is_prime(self.0)
    }

    pub fn literal(self) -> String {
        format!("ideal({})", self.0)
    }
}

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

pub fn is_prime(n: u64) -> bool {
    n >= 2 && prime_factors(n) == [(n, 1)]
}

/// Prime factorization by trial division, primes ascending.
pub fn prime_factors(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            let mut e = 0;
            while n.is_multiple_of(p) {
                n /= p;
                e += 1;
            }
            out.push((p, e));
        }
        p += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

/// Product of the distinct prime divisors; `0` and `1` are fixed.
pub fn int_radical(n: u64) -> u64 {
    if n <= 1 {
        return n;
    }
    prime_factors(n).iter().map(|&(p, _)| p).product()
}

/// `n = m · d1 ⋯ dk` with `k >= 1`, each `di > 1` squarefree and `m` the
/// invertible part. Returns the least answer ordered by (k, m, parts):
/// `(n / rad n, [rad n])`, and `(1, [0])` for the zero ideal.
pub fn int_factor_isp(n: u64) -> Result<(u64, Vec<u64>)> {
    match n {
        1 => Err(Error::NotProper("ideal(1)".into())),
        0 => Ok((1, vec![0])),
        _ => {
            let r = int_radical(n);
            Ok((n / r, vec![r]))
        }
    }
}

/// Radicals only: the layers `d_j = ∏ {p : v_p(n) >= j}`, ascending.
pub fn int_factor_sp(n: u64) -> Result<Vec<u64>> {
    match n {
        1 => Err(Error::NotProper("ideal(1)".into())),
        0 => Ok(vec![0]),
        _ => {
            let f = prime_factors(n);
            let top = f.iter().map(|&(_, e)| e).max().unwrap_or(0);
            let mut layers: Vec<u64> = (1..=top)
                .map(|j| f.iter().filter(|&&(_, e)| e >= j).map(|&(p, _)| p).product())
                .collect();
            layers.sort_unstable();
            Ok(layers)
        }
    }
}

/// Primes only, with multiplicity, ascending.
pub fn int_factor_primes(n: u64) -> Result<Vec<u64>> {
    match n {
        1 => Err(Error::NotProper("ideal(1)".into())),
        0 => Ok(vec![0]),
        _ => Ok(prime_factors(n)
            .into_iter()
            .flat_map(|(p, e)| std::iter::repeat_n(p, e as usize))
            .collect()),
    }
}

/// Invertible part times primes, least by (k, m, parts): `(n / p, [p])`
/// for the largest prime `p | n`.
pub fn int_factor_zpui(n: u64) -> Result<(u64, Vec<u64>)> {
    match n {
        1 => Err(Error::NotProper("ideal(1)".into())),
        0 => Ok((1, vec![0])),
        _ => {
            let p = prime_factors(n).last().expect("n >= 2").0;
            Ok((n / p, vec![p]))
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IspCertificate {
    pub bound: u64,
    pub checked: u64,
    pub verified: bool,
    /// First `n` whose factorization did not multiply back, if any.
    pub failure: Option<u64>,
}

/// Factors `0` and every `2 <= n <= bound`, checking each answer multiplies
/// back to `n` with squarefree proper parts.
pub fn int_is_isp(bound: u64) -> IspCertificate {
    let valid = |n: u64| {
        let Ok((m, parts)) = int_factor_isp(n) else {
            return false;
        };
        if n == 0 {
            return m == 1 && parts == [0];
        }
        !parts.is_empty()
            && parts.iter().all(|&d| d > 1 && int_radical(d) == d)
            && parts.iter().product::<u64>() * m == n
    };
    let mut checked = 0;
    let mut failure = None;
    for n in std::iter::once(0).chain(2..=bound) {
        checked += 1;
        if !valid(n) {
            failure = Some(n);
            break;
        }
    }
    IspCertificate {
        bound,
        checked,
        verified: failure.is_none(),
        failure,
    }
}
