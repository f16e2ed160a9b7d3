//! Counts for the unrestricted congruence and for sums of units.

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Pow, Zero};

use super::exact_count;
use crate::arith::{factorize, gcd_signed};
use crate::error::{positive, Error, Result};
use crate::ramanujan::ramanujan;

/// Solutions of `a_1 x_1 + ⋯ + a_k x_k ≡ b (mod n)` with no gcd restriction:
/// `ℓ n^{k-1}` when `ℓ = (a_1, …, a_k, n)` divides `b`, else `0`.
pub fn count_unrestricted(a: &[i64], b: i64, n: u64) -> Result<BigUint> {
    positive("n", n)?;
    if a.is_empty() {
        return Ok(BigUint::from(u8::from(gcd_signed(b, n) == n)));
    }
    let ell = a.iter().fold(n, |acc, &ai| gcd_signed(ai, acc));
    if gcd_signed(b, ell) != ell {
        return Ok(BigUint::zero());
    }
    Ok(BigUint::from(ell) * Pow::pow(&BigUint::from(n), a.len() - 1))
}

fn units_args(k: u32, n: u64) -> Result<()> {
    positive("n", n)?;
    if k == 0 {
        return Err(Error::NonPositive { name: "k", value: 0 });
    }
    Ok(())
}

/// `1 - (-1)^e / (p-1)^e` as a rational.
fn sign_factor(p: u64, e: u32) -> BigRational {
    let sign = if e % 2 == 0 { BigInt::one() } else { -BigInt::one() };
    BigRational::one() - BigRational::new(sign, Pow::pow(&BigInt::from(p - 1), e))
}

/// `N_n(k, b)` as `φ(n)^k / n` times the per-prime correction factors.
pub fn units_euler_product(k: u32, b: i64, n: u64) -> Result<BigUint> {
    units_args(k, n)?;
    let f = factorize(n)?;
    let mut value = BigRational::new(Pow::pow(&BigInt::from(f.totient()), k), BigInt::from(n));
    for p in f.primes() {
        let e = if b.unsigned_abs() % p == 0 { k - 1 } else { k };
        value *= sign_factor(p, e);
    }
    exact_count(value, "units Euler product")
}

/// `N_n(k, b)` as `(1/n) Σ_{d | n} c_d(b) c_n(n/d)^k`.
pub fn units_divisor_sum(k: u32, b: i64, n: u64) -> Result<BigUint> {
    units_args(k, n)?;
    let mut sum = BigInt::zero();
    for d in factorize(n)?.divisors() {
        let cd = ramanujan(d, b)?;
        if cd != 0 {
            sum += BigInt::from(cd) * Pow::pow(&BigInt::from(ramanujan(n, (n / d) as i64)?), k);
        }
    }
    exact_count(BigRational::new(sum, BigInt::from(n)), "units divisor sum")
}

/// Number of `k`-tuples of units mod `n` summing to `b`; both forms are
/// evaluated and must agree.
pub fn count_units(k: u32, b: i64, n: u64) -> Result<BigUint> {
    let product = units_euler_product(k, b, n)?;
    let sum = units_divisor_sum(k, b, n)?;
    if product != sum {
        return Err(Error::Disagreement {
            context: "sum-of-units forms",
            left: product.to_string(),
            right: sum.to_string(),
        });
    }
    Ok(product)
}

/// Nagell's totient `N_n(2, b) = n Π_{p | b}(1 - 1/p) Π_{p ∤ b}(1 - 2/p)`.
pub fn nagell_totient(b: i64, n: u64) -> Result<BigUint> {
    positive("n", n)?;
    let mut value = BigRational::from_integer(BigInt::from(n));
    for p in factorize(n)?.primes() {
        let drop = if b.unsigned_abs() % p == 0 { 1 } else { 2 };
        value *= BigRational::new(BigInt::from(p) - drop, BigInt::from(p));
    }
    exact_count(value, "Nagell totient")
}
