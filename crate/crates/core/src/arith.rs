//! Integer utilities and the classical multiplicative functions.
//!
//! Everything here works on `u64` moduli; callers that need unbounded
//! intermediate values lift into `num_bigint` themselves.

use crate::error::{positive, Error, Result};

/// Canonical prime-power decomposition of a positive integer.
///
/// Primes are strictly increasing and every exponent is at least one, so
/// `1` has an empty factor list.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Factorization {
    value: u64,
    factors: Vec<(u64, u32)>,
}

impl Factorization {
    pub fn value(&self) -> u64 {
        self.value
    }

    pub fn factors(&self) -> &[(u64, u32)] {
        &self.factors
    }

    pub fn primes(&self) -> impl Iterator<Item = u64> + '_ {
        self.factors.iter().map(|&(p, _)| p)
    }

    /// Exponent of `p` in the value, zero when `p` does not divide it.
    pub fn exponent_of(&self, p: u64) -> u32 {
        self.factors
            .iter()
            .find(|&&(q, _)| q == p)
            .map_or(0, |&(_, e)| e)
    }

    pub fn prime_powers(&self) -> impl Iterator<Item = u64> + '_ {
        self.factors.iter().map(|&(p, e)| p.pow(e))
    }

    pub fn divisor_count(&self) -> u64 {
        self.factors.iter().map(|&(_, e)| u64::from(e) + 1).product()
    }

    pub fn is_squarefree(&self) -> bool {
        self.factors.iter().all(|&(_, e)| e == 1)
    }

    pub fn mobius(&self) -> i64 {
        if !self.is_squarefree() {
            0
        } else if self.factors.len() % 2 == 0 {
            1
        } else {
            -1
        }
    }

    pub fn totient(&self) -> u64 {
        self.factors
            .iter()
            .map(|&(p, e)| (p - 1) * p.pow(e - 1))
            .product()
    }

    /// All positive divisors in ascending order.
    pub fn divisors(&self) -> Vec<u64> {
        let mut divs = vec![1u64];
        for &(p, e) in &self.factors {
            let len = divs.len();
            let mut pk = 1u64;
            for _ in 0..e {
                pk *= p;
                for i in 0..len {
                    divs.push(divs[i] * pk);
                }
            }
        }
        divs.sort_unstable();
        divs
    }
}

/// Trial division up to the square root.
pub fn factorize(n: u64) -> Result<Factorization> {
    positive("n", n)?;
    let mut factors = Vec::new();
    let mut rest = n;
    let mut push = |p: u64, rest: &mut u64| {
        let mut e = 0;
        while *rest % p == 0 {
            *rest /= p;
            e += 1;
        }
        if e > 0 {
            factors.push((p, e));
        }
    };
    push(2, &mut rest);
    push(3, &mut rest);
    // 6k ± 1 wheel
    let mut p = 5u64;
    while p.checked_mul(p).is_some_and(|sq| sq <= rest) {
        push(p, &mut rest);
        push(p + 2, &mut rest);
        p += 6;
    }
    if rest > 1 {
        factors.push((rest, 1));
    }
    Ok(Factorization { value: n, factors })
}

pub fn is_prime(p: u64) -> bool {
    p >= 2 && factorize(p).is_ok_and(|f| f.factors == [(p, 1)])
}

pub fn mobius(n: u64) -> Result<i64> {
    Ok(factorize(n)?.mobius())
}

pub fn totient(n: u64) -> Result<u64> {
    Ok(factorize(n)?.totient())
}

pub fn divisors(n: u64) -> Result<Vec<u64>> {
    Ok(factorize(n)?.divisors())
}

pub fn gcd(a: u64, b: u64) -> u64 {
    num_integer::gcd(a, b)
}

/// gcd of an integer of either sign with a positive modulus; `gcd(0, n) = n`.
pub fn gcd_signed(a: i64, n: u64) -> u64 {
    gcd(a.unsigned_abs(), n)
}

/// gcd of any list of integers, taken on absolute values. Empty or all-zero
/// input gives 0.
pub fn gcd_many(values: &[i64]) -> u64 {
    values.iter().fold(0, |acc, &v| gcd(acc, v.unsigned_abs()))
}

/// Least common multiple on absolute values; zero if either argument is zero.
pub fn lcm2(a: i64, b: i64) -> u64 {
    let (a, b) = (a.unsigned_abs(), b.unsigned_abs());
    if a == 0 || b == 0 {
        0
    } else {
        a / gcd(a, b) * b
    }
}

/// Largest `r` with `p^r | a`.
pub fn p_adic_valuation(p: u64, a: i64) -> Result<u32> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if a == 0 {
        return Err(Error::ZeroValuation);
    }
    Ok(valuation(p, a.unsigned_abs()))
}

/// Valuation of a nonzero `a` at a prime `p` that the caller already knows is prime.
pub(crate) fn valuation(p: u64, mut a: u64) -> u32 {
    debug_assert!(a != 0);
    let mut r = 0;
    while a % p == 0 {
        a /= p;
        r += 1;
    }
    r
}

/// Valuation with `v_p(0) = ∞` represented as `None`.
pub(crate) fn valuation_or_inf(p: u64, a: u64) -> Option<u32> {
    (a != 0).then(|| valuation(p, a))
}
