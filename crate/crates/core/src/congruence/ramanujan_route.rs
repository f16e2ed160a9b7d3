//! Counts written as divisor sums of Ramanujan sums.

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::{exact_count, CongruenceInstance};
use crate::arith::{factorize, gcd, totient};
use crate::error::{positive, Error, Result};
use crate::ramanujan::{ramanujan, ramanujan_factored};

/// Solutions of `x_1 + ⋯ + x_k ≡ b (mod n)` with `(x_i, n) = t_i`:
/// `(1/n) Σ_{d | n} c_d(b) Π_i c_{n/t_i}(n/d)`.
pub fn count_unit_coeff(b: i64, n: u64, t: &[u64]) -> Result<BigUint> {
    positive("n", n)?;
    if t.contains(&0) {
        return Err(Error::NonPositive { name: "t", value: 0 });
    }
    if t.iter().any(|&ti| n % ti != 0) {
        return Ok(BigUint::zero());
    }
    let nf = factorize(n)?;
    let outer: Vec<_> = t.iter().map(|&ti| factorize(n / ti)).collect::<Result<_>>()?;
    let mut sum = BigInt::zero();
    for d in nf.divisors() {
        let cd = ramanujan(d, b)?;
        if cd == 0 {
            continue;
        }
        let arg = (n / d) as i64;
        let mut term = BigInt::from(cd);
        for f in &outer {
            term *= ramanujan_factored(f, arg);
        }
        sum += term;
    }
    exact_count(BigRational::new(sum, BigInt::from(n)), "unit-coefficient divisor sum")
}

/// `d_i = (a_i, n/t_i)`.
fn reduced_gcds(inst: &CongruenceInstance) -> Vec<u64> {
    let n = inst.modulus();
    inst.coefficients()
        .iter()
        .zip(inst.constraints())
        .map(|(&a, &t)| gcd(a, n / t))
        .collect()
}

/// Count via `(1/n) Π φ(n/t_i)/φ(n/(t_i d_i)) · Σ_{d | n} c_d(b) Π c_{n/(t_i d_i)}(n/d)`.
pub fn count_eq19(inst: &CongruenceInstance) -> Result<BigUint> {
    if !inst.constraints_divide_modulus() {
        return Ok(BigUint::zero());
    }
    let n = inst.modulus();
    let b = inst.target() as i64;
    let ds = reduced_gcds(inst);
    let mut prefactor = BigRational::one();
    let mut inner = Vec::with_capacity(ds.len());
    for (&t, &d) in inst.constraints().iter().zip(&ds) {
        prefactor *= BigRational::new(totient(n / t)?.into(), totient(n / (t * d))?.into());
        inner.push(factorize(n / (t * d))?);
    }
    let mut sum = BigInt::zero();
    for d in inst.factorization().divisors() {
        let cd = ramanujan(d, b)?;
        if cd == 0 {
            continue;
        }
        let arg = (n / d) as i64;
        let mut term = BigInt::from(cd);
        for f in &inner {
            term *= ramanujan_factored(f, arg);
        }
        sum += term;
    }
    exact_count(prefactor * BigRational::new(sum, BigInt::from(n)), "gcd-reduced divisor sum")
}

/// Count via `(1/n) Π φ(n/t_i) · Σ_{d | n} c_d(b) Π μ(w_i)/φ(w_i)`, `w_i = d/(a_i t_i, d)`.
pub fn count_eq20(inst: &CongruenceInstance) -> Result<BigUint> {
    if !inst.constraints_divide_modulus() {
        return Ok(BigUint::zero());
    }
    let n = inst.modulus();
    let b = inst.target() as i64;
    let mut prefactor = BigInt::one();
    for &t in inst.constraints() {
        prefactor *= totient(n / t)?;
    }
    let mut sum = BigRational::zero();
    'divisors: for d in inst.factorization().divisors() {
        let cd = ramanujan(d, b)?;
        if cd == 0 {
            continue;
        }
        let mut num = BigInt::from(cd);
        let mut den = BigInt::one();
        for (&a, &t) in inst.coefficients().iter().zip(inst.constraints()) {
            // (a t, d) without forming a t, which may overflow
            let at_mod_d = ((u128::from(a % d) * u128::from(t % d)) % u128::from(d)) as u64;
            let w = factorize(d / gcd(at_mod_d, d))?;
            let mu = w.mobius();
            if mu == 0 {
                continue 'divisors;
            }
            num *= mu;
            den *= w.totient();
        }
        sum += BigRational::new(num, den);
    }
    exact_count(
        BigRational::from_integer(prefactor) * sum / BigRational::from_integer(BigInt::from(n)),
        "Möbius-weighted divisor sum",
    )
}

/// Both divisor-sum forms, checked against each other.
pub fn count_general_ramanujan(inst: &CongruenceInstance) -> Result<BigUint> {
    let via_gcd = count_eq19(inst)?;
    let via_mobius = count_eq20(inst)?;
    if via_gcd != via_mobius {
        return Err(Error::Disagreement {
            context: "divisor-sum forms",
            left: via_gcd.to_string(),
            right: via_mobius.to_string(),
        });
    }
    Ok(via_gcd)
}

/// Product of the counts modulo each prime power exactly dividing `n`.
pub fn count_via_crt(inst: &CongruenceInstance) -> Result<BigUint> {
    if !inst.constraints_divide_modulus() {
        return Ok(BigUint::zero());
    }
    let mut count = BigUint::one();
    for &(p, r) in inst.factorization().factors() {
        count *= count_general_ramanujan(&inst.localize(p, r))?;
        if count.is_zero() {
            break;
        }
    }
    Ok(count)
}

/// `Σ_{d | n} c_d(b) c_{n/s}(n/d)`, which equals `n` if `(b, n) = s` and `0` otherwise.
pub fn new_orthogonality_sum(b: i64, n: u64, s: u64) -> Result<BigInt> {
    positive("n", n)?;
    if s == 0 || n % s != 0 {
        return Err(Error::NotADivisor { divisor: s, modulus: n });
    }
    let outer = factorize(n / s)?;
    let mut sum = BigInt::zero();
    for d in factorize(n)?.divisors() {
        sum += BigInt::from(ramanujan(d, b)?) * ramanujan_factored(&outer, (n / d) as i64);
    }
    Ok(sum)
}

/// Whether the sum above takes its predicted value.
pub fn verify_new_orthogonality(b: i64, n: u64, s: u64) -> Result<bool> {
    let expected = if crate::arith::gcd_signed(b, n) == s { n } else { 0 };
    Ok(new_orthogonality_sum(b, n, s)? == BigInt::from(expected))
}
