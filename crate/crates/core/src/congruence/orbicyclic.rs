//! The orbicyclic function `E(m_1, …, m_k)`.
//!
//! With `n` a common multiple of the `m_i`, `E` counts `x ∈ [1, n]^k` with
//! `Σ x_i ≡ 0 (mod n)` and `(x_i, n) = n/m_i`. Any common multiple gives the
//! same value; `n = lcm(m_i)` is the default.

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::Zero;

use super::exact_count;
use crate::arith::{factorize, lcm2, totient, Factorization};
use crate::error::{positive, Error, Result};
use crate::ramanujan::ramanujan_factored;

fn period_and_factors(m: &[u64], n: u64) -> Result<Vec<Factorization>> {
    positive("n", n)?;
    m.iter()
        .map(|&mi| {
            positive("m", mi)?;
            if n % mi != 0 {
                return Err(Error::NotADivisor { divisor: mi, modulus: n });
            }
            factorize(mi)
        })
        .collect()
}

/// `(1/n) Σ_{d | n} φ(d) Π c_{m_i}(n/d)`.
pub fn orbicyclic_totient_form(m: &[u64], n: u64) -> Result<BigUint> {
    let fs = period_and_factors(m, n)?;
    let mut sum = BigInt::zero();
    for d in factorize(n)?.divisors() {
        let arg = (n / d) as i64;
        let mut term = BigInt::from(totient(d)?);
        for f in &fs {
            term *= ramanujan_factored(f, arg);
        }
        sum += term;
    }
    exact_count(BigRational::new(sum, BigInt::from(n)), "orbicyclic totient form")
}

/// `(1/n) Σ_{q=1}^{n} Π c_{m_i}(q)`.
pub fn orbicyclic_average_form(m: &[u64], n: u64) -> Result<BigUint> {
    let fs = period_and_factors(m, n)?;
    let mut sum = BigInt::zero();
    for q in 1..=n as i64 {
        let mut term = BigInt::from(1);
        for f in &fs {
            term *= ramanujan_factored(f, q);
        }
        sum += term;
    }
    exact_count(BigRational::new(sum, BigInt::from(n)), "orbicyclic average form")
}

/// `E` with an explicit period `n`, both forms checked against each other.
pub fn orbicyclic_with_period(m: &[u64], n: u64) -> Result<BigUint> {
    let a = orbicyclic_totient_form(m, n)?;
    let b = orbicyclic_average_form(m, n)?;
    if a != b {
        return Err(Error::Disagreement {
            context: "orbicyclic forms",
            left: a.to_string(),
            right: b.to_string(),
        });
    }
    Ok(a)
}

/// `E(m_1, …, m_k)` with `n = lcm(m_i)`; the empty tuple gives `1`.
pub fn orbicyclic(m: &[u64]) -> Result<BigUint> {
    for &mi in m {
        positive("m", mi)?;
    }
    let n = m.iter().fold(1u64, |acc, &mi| lcm2(acc as i64, mi as i64));
    orbicyclic_with_period(m, n)
}
