use num_bigint::BigUint;
use num_traits::Zero;

use crate::arith::{gcd, gcd_signed, totient};
use crate::error::{positive, Error, Result};

/// Number of `x (mod n)` with `ax ≡ b` and `(x, n) = t`.
///
/// Nonzero only when `t | (b, n)` and `(a, n/t) = (b/t, n/t) = d`, in which
/// case it is `φ(n/t) / φ(n/(td))`.
pub fn count_one_var(a: i64, b: i64, n: u64, t: u64) -> Result<BigUint> {
    Ok(one_var_parts(a, b, n, t)?.map_or_else(BigUint::zero, |(count, _)| BigUint::from(count)))
}

/// `(count, d)` when solvable.
fn one_var_parts(a: i64, b: i64, n: u64, t: u64) -> Result<Option<(u64, u64)>> {
    positive("n", n)?;
    positive("t", t)?;
    if n % t != 0 {
        return Ok(None);
    }
    let b = (i128::from(b).rem_euclid(i128::from(n))) as u64;
    if b % t != 0 {
        return Ok(None);
    }
    let q = n / t;
    let d = gcd_signed(a, q);
    if d != gcd(b / t, q) {
        return Ok(None);
    }
    let (num, den) = (totient(q)?, totient(q / d)?);
    if num % den != 0 {
        return Err(Error::NonIntegral {
            context: "one-variable count",
            value: format!("{num}/{den}"),
        });
    }
    Ok(Some((num / den, d)))
}

/// Which of the two unique-solution patterns holds.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum UniqueCase {
    /// `d = 1`.
    I,
    /// `d = 2` with `n = 2^r u`, `u` odd, `t = 2^{r-1} v`, `v | u`.
    II,
}

/// `Some(case)` exactly when `ax ≡ b (mod n)` has one solution with `(x, n) = t`.
pub fn has_unique_solution_one_var(a: i64, b: i64, n: u64, t: u64) -> Result<Option<UniqueCase>> {
    let Some((count, d)) = one_var_parts(a, b, n, t)? else {
        return Ok(None);
    };
    if count != 1 {
        return Ok(None);
    }
    match d {
        1 => Ok(Some(UniqueCase::I)),
        2 => {
            let r = n.trailing_zeros();
            let shaped = r >= 1 && t.trailing_zeros() == r - 1 && (n >> r) % (t >> (r - 1)) == 0;
            if !shaped {
                return Err(Error::Hypothesis(format!(
                    "unique solution with d = 2 but n = {n}, t = {t} lack the 2-adic shape"
                )));
            }
            Ok(Some(UniqueCase::II))
        }
        _ => Err(Error::Hypothesis(format!("unique solution with d = {d}"))),
    }
}
