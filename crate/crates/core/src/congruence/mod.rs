//! Counting solutions of restricted linear congruences
//! `a_1 x_1 + ⋯ + a_k x_k ≡ b (mod n)`, `(x_i, n) = t_i`.
//!
//! Every route returns an exact count. Routes that pass through rational
//! arithmetic check that the result cancels to a nonnegative integer and
//! report [`Error::NonIntegral`]/[`Error::Negative`] otherwise.

mod classical;
mod explicit;
mod instance;
mod one_var;
mod orbicyclic;
mod profile;
mod ramanujan_route;
mod sburlati;

use num_bigint::{BigUint, Sign};
use num_rational::BigRational;

use crate::error::{Error, Result};

pub use classical::{count_unrestricted, count_units, nagell_totient, units_divisor_sum, units_euler_product};
pub use explicit::{classify_profiles, classify_unsolvable, count_general_explicit, CountReport, UnsolvableCase};
pub use instance::CongruenceInstance;
pub use one_var::{count_one_var, has_unique_solution_one_var, UniqueCase};
pub use orbicyclic::{orbicyclic, orbicyclic_average_form, orbicyclic_totient_form, orbicyclic_with_period};
pub use profile::{prime_profiles, PrimeLocalProfile, TargetClass};
pub use ramanujan_route::{
    count_eq19, count_eq20, count_general_ramanujan, count_unit_coeff, count_via_crt, new_orthogonality_sum,
    verify_new_orthogonality,
};
pub use sburlati::{count_sburlati, sburlati_applies};

/// Convert a rational that must be a nonnegative integer.
pub(crate) fn exact_count(value: BigRational, context: &'static str) -> Result<BigUint> {
    if !value.is_integer() {
        return Err(Error::NonIntegral { context, value: value.to_string() });
    }
    let int = value.to_integer();
    if int.sign() == Sign::Minus {
        return Err(Error::Negative { context, value: int.to_string() });
    }
    Ok(int.magnitude().clone())
}
