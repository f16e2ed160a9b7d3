//! Ramanujan sums `c_n(m)`.
//!
//! Four evaluators are provided. [`ramanujan`] (multiplicative product over
//! prime powers) is the one the counting code uses; the Kluyver divisor
//! sum, the von Sterneck closed form and the defining exponential sum exist
//! to cross-check it. All of them implement [`RamanujanEvaluator`] so they
//! can be looked up by name.

use std::f64::consts::TAU;

use num_complex::Complex64;

use crate::arith::{factorize, gcd, gcd_signed, is_prime, Factorization};
use crate::error::{positive, Error, Result};

/// Rounding tolerance for the floating-point exponential sum.
pub const EXPONENTIAL_TOLERANCE: f64 = 1e-9;

/// The literal sum of `e(jm/n)` over `1 <= j <= n` coprime to `n`.
pub fn ramanujan_exponential(n: u64, m: i64) -> Result<Complex64> {
    positive("n", n)?;
    // Reduce jm mod n in integers first so the angle stays accurate.
    let m = m.rem_euclid(n as i64) as u128;
    let n128 = u128::from(n);
    let sum = (1..=n)
        .filter(|&j| gcd(j, n) == 1)
        .map(|j| {
            let k = (u128::from(j) * m) % n128;
            Complex64::from_polar(1.0, TAU * k as f64 / n as f64)
        })
        .sum();
    Ok(sum)
}

/// `c_n(m) = Σ_{d | (m,n)} μ(n/d) d`.
pub fn ramanujan_kluyver(n: u64, m: i64) -> Result<i64> {
    positive("n", n)?;
    let g = gcd_signed(m, n);
    let mut total = 0i64;
    for d in factorize(g)?.divisors() {
        total += factorize(n / d)?.mobius() * d as i64;
    }
    Ok(total)
}

/// von Sterneck's form `φ(n)/φ(n/g) · μ(n/g)` with `g = (m, n)`.
pub fn ramanujan_sterneck(n: u64, m: i64) -> Result<i64> {
    let f = factorize(n)?;
    let q = n / gcd_signed(m, n);
    let fq = factorize(q)?;
    let (num, den) = (f.totient(), fq.totient());
    if num % den != 0 {
        return Err(Error::NonIntegral {
            context: "von Sterneck quotient",
            value: format!("{num}/{den}"),
        });
    }
    Ok((num / den) as i64 * fq.mobius())
}

/// `c_{p^r}(m)` by the prime-power rule.
pub fn ramanujan_prime_power(p: u64, r: u32, m: i64) -> Result<i64> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if r == 0 {
        return Err(Error::NonPositive { name: "r", value: 0 });
    }
    Ok(prime_power_unchecked(p, r, m))
}

fn prime_power_unchecked(p: u64, r: u32, m: i64) -> i64 {
    let below = p.pow(r - 1);
    let full = below * p;
    let m = m.unsigned_abs();
    if m % full == 0 {
        (full - below) as i64
    } else if m % below == 0 {
        -(below as i64)
    } else {
        0
    }
}

/// `c_n(m)` as a product of prime-power values.
pub fn ramanujan(n: u64, m: i64) -> Result<i64> {
    Ok(ramanujan_factored(&factorize(n)?, m))
}

/// Same as [`ramanujan`] for a modulus that is already factored.
pub fn ramanujan_factored(n: &Factorization, m: i64) -> i64 {
    n.factors()
        .iter()
        .map(|&(p, e)| prime_power_unchecked(p, e, m))
        .product()
}

/// `Σ_{d | n} c_d(m)`, which is `n` when `n | m` and `0` otherwise.
pub fn divisor_sum(n: u64, m: i64) -> Result<i64> {
    let mut total = 0;
    for d in factorize(n)?.divisors() {
        total += ramanujan(d, m)?;
    }
    Ok(total)
}

/// `Σ_{d | n} c_{d1}(n/d) c_d(n/d2)`, which is `n` when `d1 = d2` and `0` otherwise.
pub fn orthogonality_sum(n: u64, d1: u64, d2: u64) -> Result<i64> {
    for d in [d1, d2] {
        if d == 0 || n % d != 0 {
            return Err(Error::NotADivisor { divisor: d, modulus: n });
        }
    }
    let mut total = 0;
    for d in factorize(n)?.divisors() {
        total += ramanujan(d1, (n / d) as i64)? * ramanujan(d, (n / d2) as i64)?;
    }
    Ok(total)
}

/// A way of evaluating `c_n(m)`.
pub trait RamanujanEvaluator: Send + Sync {
    fn name(&self) -> &'static str;
    fn evaluate(&self, n: u64, m: i64) -> Result<i64>;
}

macro_rules! evaluator {
    ($ty:ident, $name:literal, $f:path) => {
        #[derive(Debug, Default, Clone, Copy)]
        pub struct $ty;

        impl RamanujanEvaluator for $ty {
            fn name(&self) -> &'static str {
                $name
            }

            fn evaluate(&self, n: u64, m: i64) -> Result<i64> {
                $f(n, m)
            }
        }
    };
}

evaluator!(Multiplicative, "multiplicative", ramanujan);
evaluator!(Kluyver, "kluyver", ramanujan_kluyver);
evaluator!(Sterneck, "sterneck", ramanujan_sterneck);

/// The exponential sum rounded to the nearest integer. Fails if the
/// imaginary part or the rounding residue exceeds [`EXPONENTIAL_TOLERANCE`].
#[derive(Debug, Default, Clone, Copy)]
pub struct Exponential;

impl RamanujanEvaluator for Exponential {
    fn name(&self) -> &'static str {
        "exponential"
    }

    fn evaluate(&self, n: u64, m: i64) -> Result<i64> {
        let z = ramanujan_exponential(n, m)?;
        let rounded = z.re.round();
        if z.im.abs() >= EXPONENTIAL_TOLERANCE || (z.re - rounded).abs() >= EXPONENTIAL_TOLERANCE {
            return Err(Error::NonIntegral {
                context: "exponential sum",
                value: z.to_string(),
            });
        }
        Ok(rounded as i64)
    }
}

/// Evaluators registered by name.
pub struct EvaluatorRegistry {
    evaluators: Vec<Box<dyn RamanujanEvaluator>>,
}

impl EvaluatorRegistry {
    pub fn empty() -> Self {
        EvaluatorRegistry { evaluators: Vec::new() }
    }

    pub fn register(&mut self, evaluator: Box<dyn RamanujanEvaluator>) -> Result<()> {
        if self.get(evaluator.name()).is_some() {
            return Err(Error::DuplicateMethod(evaluator.name().to_owned()));
        }
        self.evaluators.push(evaluator);
        Ok(())
    }

    pub fn get(&self, name: &str) -> Option<&dyn RamanujanEvaluator> {
        self.evaluators
            .iter()
            .find(|e| e.name() == name)
            .map(|e| e.as_ref())
    }

    pub fn lookup(&self, name: &str) -> Result<&dyn RamanujanEvaluator> {
        self.get(name).ok_or_else(|| Error::UnknownMethod(name.to_owned()))
    }

    pub fn names(&self) -> Vec<&'static str> {
        self.evaluators.iter().map(|e| e.name()).collect()
    }

    pub fn iter(&self) -> impl Iterator<Item = &dyn RamanujanEvaluator> {
        self.evaluators.iter().map(|e| e.as_ref())
    }
}

impl Default for EvaluatorRegistry {
    /// All four evaluators, production one first.
    fn default() -> Self {
        EvaluatorRegistry {
            evaluators: vec![
                Box::new(Multiplicative),
                Box::new(Kluyver),
                Box::new(Sterneck),
                Box::new(Exponential),
            ],
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{mobius, totient};

    #[test]
    fn exponential_examples() {
        let z = ramanujan_exponential(5, 0).unwrap();
        assert!((z.re - 4.0).abs() < 1e-9 && z.im.abs() < 1e-9);
        let z = ramanujan_exponential(6, 1).unwrap();
        assert!((z.re - 1.0).abs() < 1e-9);
        let z = ramanujan_exponential(4, 2).unwrap();
        assert!((z.re + 2.0).abs() < 1e-9);
        assert!(ramanujan_exponential(0, 1).is_err());
    }

    #[test]
    fn kluyver_examples() {
        assert_eq!(ramanujan_kluyver(6, 3).unwrap(), -2);
        for p in [2u64, 3, 5, 7, 11, 97] {
            assert_eq!(ramanujan_kluyver(p, 1).unwrap(), -1);
            assert_eq!(ramanujan_kluyver(p, p as i64 + 1).unwrap(), -1);
        }
        assert_eq!(ramanujan_kluyver(1, 17).unwrap(), 1);
        assert!(ramanujan_kluyver(0, 1).is_err());
    }

    #[test]
    fn sterneck_examples() {
        assert_eq!(ramanujan_sterneck(4, 2).unwrap(), -2);
        assert_eq!(ramanujan_sterneck(9, 3).unwrap(), -3);
        assert_eq!(ramanujan_sterneck(12, 0).unwrap(), 4);
    }

    #[test]
    fn prime_power_examples() {
        assert_eq!(ramanujan_prime_power(2, 2, 4).unwrap(), 2);
        assert_eq!(ramanujan_prime_power(2, 2, 2).unwrap(), -2);
        assert_eq!(ramanujan_prime_power(2, 2, 1).unwrap(), 0);
        assert_eq!(ramanujan_prime_power(4, 2, 1), Err(Error::NotPrime(4)));
        assert!(ramanujan_prime_power(2, 0, 1).is_err());
    }

    #[test]
    fn multiplicative_examples() {
        assert_eq!(ramanujan(6, 3).unwrap(), -2);
        assert_eq!(ramanujan(30, 1).unwrap(), -1);
        // c_8(12) = -4 because 2^2 exactly divides 12; c_3(12) = 2.
        assert_eq!(ramanujan(24, 12).unwrap(), -8);
        let z = ramanujan_exponential(24, 12).unwrap();
        assert!((z.re + 8.0).abs() < 1e-9);
    }

    #[test]
    fn special_values() {
        for n in 1..=300u64 {
            assert_eq!(ramanujan(n, 0).unwrap(), totient(n).unwrap() as i64);
            assert_eq!(ramanujan(n, 1).unwrap(), mobius(n).unwrap());
        }
    }

    #[test]
    fn periodic_and_even() {
        for n in 1..=200u64 {
            let ni = n as i64;
            for m in -3 * ni..=3 * ni {
                let v = ramanujan(n, m).unwrap();
                assert_eq!(v, ramanujan(n, m.rem_euclid(ni)).unwrap());
                assert_eq!(v, ramanujan(n, gcd_signed(m, n) as i64).unwrap());
                assert_eq!(v, ramanujan(n, -m).unwrap());
            }
        }
    }

    #[test]
    fn multiplicative_in_modulus() {
        for n1 in 1..=100u64 {
            for n2 in 1..=100u64 {
                if gcd(n1, n2) != 1 {
                    continue;
                }
                for m in [0i64, 1, 2, 6, 12, 30, 60, 97, 210] {
                    assert_eq!(
                        ramanujan(n1 * n2, m).unwrap(),
                        ramanujan(n1, m).unwrap() * ramanujan(n2, m).unwrap()
                    );
                }
            }
        }
    }

    #[test]
    fn orthogonality_spot_values() {
        assert_eq!(orthogonality_sum(6, 2, 3).unwrap(), 0);
        assert_eq!(orthogonality_sum(6, 2, 2).unwrap(), 6);
        assert!(orthogonality_sum(6, 4, 2).is_err());
        assert_eq!(divisor_sum(12, 24).unwrap(), 12);
        assert_eq!(divisor_sum(12, 18).unwrap(), 0);
    }

    #[test]
    fn registry_lookup() {
        let reg = EvaluatorRegistry::default();
        assert_eq!(reg.names(), ["multiplicative", "kluyver", "sterneck", "exponential"]);
        for e in reg.iter() {
            assert_eq!(e.evaluate(24, 12).unwrap(), -8, "{}", e.name());
        }
        assert!(matches!(reg.lookup("fft"), Err(Error::UnknownMethod(_))));
        let mut reg = EvaluatorRegistry::empty();
        reg.register(Box::new(Kluyver)).unwrap();
        assert!(reg.register(Box::new(Kluyver)).is_err());
    }
}
