use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Pow, Zero};

use super::profile::prime_profiles;
use super::{exact_count, CongruenceInstance};
use crate::arith::totient;
use crate::error::{Error, Result};

/// Special-case product for instances where every prime `p | n` has `m_p = 1`
/// (some `a_i t_i` is not divisible by `p`).
pub fn count_sburlati(inst: &CongruenceInstance) -> Result<BigUint> {
    if !inst.constraints_divide_modulus() {
        return Ok(BigUint::zero());
    }
    let n = inst.modulus();
    let profiles = prime_profiles(inst);
    if let Some(bad) = profiles.iter().find(|p| p.m_p != 1) {
        return Err(Error::Hypothesis(format!(
            "m_p = {} at p = {}, but every prime needs m_p = 1",
            bad.m_p, bad.p
        )));
    }
    let mut value = BigRational::new(BigInt::one(), BigInt::from(n));
    for &t in inst.constraints() {
        value *= BigRational::from_integer(totient(n / t)?.into());
    }
    for prof in &profiles {
        let e = prof.e_p.expect("m_p = 1 <= r_p");
        let e = if inst.target() % prof.p == 0 { e - 1 } else { e };
        let sign = if e % 2 == 0 { BigInt::one() } else { -BigInt::one() };
        value *= BigRational::one() - BigRational::new(sign, Pow::pow(&BigInt::from(prof.p - 1), e));
        if value.is_zero() {
            break;
        }
    }
    exact_count(value, "Sburlati product")
}

/// Whether [`count_sburlati`] applies.
pub fn sburlati_applies(inst: &CongruenceInstance) -> bool {
    !inst.constraints_divide_modulus() || prime_profiles(inst).iter().all(|p| p.m_p == 1)
}
