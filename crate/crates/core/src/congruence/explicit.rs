//! Closed-form product count and the classification of unsolvable instances.

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Pow, Zero};

use super::profile::{prime_profiles, PrimeLocalProfile, TargetClass};
use super::CongruenceInstance;
use crate::arith::totient;
use crate::error::{Error, Result};

/// Why an instance has no solutions.
///
/// `I`–`V` are the five obstruction conditions on the per-prime profiles;
/// the other two cover inputs that never reach profiling.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum UnsolvableCase {
    /// Some `p` with `m_p <= r_p` and `p^{m_p-1} ∤ b`.
    I,
    /// Some `p` with `m_p >= r_p + 1` and `p^{r_p} ∤ b`.
    II,
    /// Some `p` with `m_p <= r_p`, `e_p = 1` and `p^{m_p} | b`.
    III,
    /// `2 | n`, `m_2 <= r_2`, `e_2` odd and `2^{m_2} | b`.
    IV,
    /// `2 | n`, `m_2 <= r_2`, `e_2` even and `2^{m_2-1} ∥ b`.
    V,
    /// Some `t_i` does not divide `n`.
    TNotDivisor,
    /// All coefficients vanish mod `n` but `b` does not.
    AllZeroBNonzero,
}

impl UnsolvableCase {
    pub fn label(self) -> &'static str {
        match self {
            UnsolvableCase::I => "I",
            UnsolvableCase::II => "II",
            UnsolvableCase::III => "III",
            UnsolvableCase::IV => "IV",
            UnsolvableCase::V => "V",
            UnsolvableCase::TNotDivisor => "T_NOT_DIVISOR",
            UnsolvableCase::AllZeroBNonzero => "ALL_ZERO_B_NONZERO",
        }
    }

    pub fn from_label(label: &str) -> Option<Self> {
        [
            UnsolvableCase::I,
            UnsolvableCase::II,
            UnsolvableCase::III,
            UnsolvableCase::IV,
            UnsolvableCase::V,
            UnsolvableCase::TNotDivisor,
            UnsolvableCase::AllZeroBNonzero,
        ]
        .into_iter()
        .find(|c| c.label() == label)
    }
}

impl fmt::Display for UnsolvableCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

/// Result of the explicit count.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CountReport {
    pub count: BigUint,
    pub unsolvable_case: Option<UnsolvableCase>,
    /// Empty when the instance never reached profiling.
    pub locals: Vec<PrimeLocalProfile>,
}

impl CountReport {
    pub fn solvable(&self) -> bool {
        self.unsolvable_case.is_none()
    }
}

fn case_applies(case: UnsolvableCase, prof: &PrimeLocalProfile) -> bool {
    use TargetClass::*;
    let (e, class) = (prof.e_p, prof.b_class);
    match case {
        UnsolvableCase::I => class == Below,
        UnsolvableCase::II => class == NotDivisibleByPRp,
        UnsolvableCase::III => e == Some(1) && class == DivisibleByPMp,
        UnsolvableCase::IV => prof.p == 2 && e.is_some_and(|e| e % 2 == 1) && class == DivisibleByPMp,
        UnsolvableCase::V => prof.p == 2 && e.is_some_and(|e| e % 2 == 0) && class == ExactlyPMpMinus1,
        UnsolvableCase::TNotDivisor | UnsolvableCase::AllZeroBNonzero => false,
    }
}

/// Lowest-numbered obstruction among the profiles, if any.
pub fn classify_profiles(profiles: &[PrimeLocalProfile]) -> Option<UnsolvableCase> {
    [
        UnsolvableCase::I,
        UnsolvableCase::II,
        UnsolvableCase::III,
        UnsolvableCase::IV,
        UnsolvableCase::V,
    ]
    .into_iter()
    .find(|&case| profiles.iter().any(|p| case_applies(case, p)))
}

/// The reason an instance is unsolvable, or `None` if it has solutions.
///
/// When several of `I`–`V` hold, the lowest-numbered one is reported.
pub fn classify_unsolvable(inst: &CongruenceInstance) -> Option<UnsolvableCase> {
    if !inst.constraints_divide_modulus() {
        Some(UnsolvableCase::TNotDivisor)
    } else if inst.all_coefficients_zero() {
        (inst.target() != 0).then_some(UnsolvableCase::AllZeroBNonzero)
    } else {
        classify_profiles(&prime_profiles(inst))
    }
}

/// Count solutions from the per-prime product formula.
///
/// Each prime contributes its local count `N_{p^r}` as an integer: the
/// `p`-parts of `Π φ(n/t_i)` times `p^{m_p-r_p-1}(1 - (-1)^e/(p-1)^e)`, with
/// the single division asserted exact.
pub fn count_general_explicit(inst: &CongruenceInstance) -> Result<CountReport> {
    let n = inst.modulus();
    if !inst.constraints_divide_modulus() {
        return Ok(CountReport {
            count: BigUint::zero(),
            unsolvable_case: Some(UnsolvableCase::TNotDivisor),
            locals: Vec::new(),
        });
    }
    if inst.all_coefficients_zero() {
        if inst.target() != 0 {
            return Ok(CountReport {
                count: BigUint::zero(),
                unsolvable_case: Some(UnsolvableCase::AllZeroBNonzero),
                locals: Vec::new(),
            });
        }
        let mut count = BigUint::one();
        for &t in inst.constraints() {
            count *= totient(n / t)?;
        }
        return Ok(CountReport { count, unsolvable_case: None, locals: Vec::new() });
    }

    let locals = prime_profiles(inst);
    if let Some(case) = classify_profiles(&locals) {
        return Ok(CountReport { count: BigUint::zero(), unsolvable_case: Some(case), locals });
    }

    let mut count = BigUint::one();
    for prof in &locals {
        count *= local_count(inst, prof)?;
    }
    if count.is_zero() {
        return Err(Error::Disagreement {
            context: "explicit product vanished on an instance classified solvable",
            left: "0".into(),
            right: "positive".into(),
        });
    }
    Ok(CountReport { count, unsolvable_case: None, locals })
}

fn local_count(inst: &CongruenceInstance, prof: &PrimeLocalProfile) -> Result<BigUint> {
    let p = BigInt::from(prof.p);
    let r = prof.r_p;
    // Π_i φ(p^{r - v_p(t_i)})
    let mut phi_part = BigInt::one();
    for &t in inst.constraints() {
        let s = crate::arith::valuation(prof.p, t);
        if s < r {
            phi_part *= (&p - 1u32) * Pow::pow(&p, r - s - 1);
        }
    }
    let value = match (prof.e_p, prof.b_class) {
        (None, _) => phi_part,
        (Some(e), class) => {
            let e = match class {
                TargetClass::DivisibleByPMp => e - 1,
                TargetClass::ExactlyPMpMinus1 => e,
                _ => unreachable!("obstructed primes are filtered before the product"),
            };
            // p^{m-r-1} (1 - (-1)^e/(p-1)^e) = p^{m-1} ((p-1)^e - (-1)^e) / (p^r (p-1)^e)
            let pm1 = &p - 1u32;
            let sign = if e % 2 == 0 { BigInt::one() } else { -BigInt::one() };
            let num = phi_part * Pow::pow(&p, prof.m_p - 1) * (Pow::pow(&pm1, e) - sign);
            let den = Pow::pow(&p, r) * Pow::pow(&pm1, e);
            let (q, rem) = num.div_rem(&den);
            if !rem.is_zero() {
                return Err(Error::NonIntegral {
                    context: "explicit local factor",
                    value: format!("{num}/{den} at p = {}", prof.p),
                });
            }
            q
        }
    };
    value.to_biguint().ok_or_else(|| Error::Negative {
        context: "explicit local factor",
        value: value.to_string(),
    })
}
