//! Periodic arithmetic functions and their discrete Fourier transform.
//!
//! A [`PeriodicSignal`] stores `f(1), …, f(n)`; residue `0` lives at index
//! `n`. Transforms are exact: values are carried in `Q(ζ_n)` (see
//! [`crate::cyclotomic`]), so `dft`/`idft` never round.

use std::collections::BTreeMap;
use std::ops::{AddAssign, Mul};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::arith::{factorize, gcd, gcd_signed};
use crate::cyclotomic::{Cyclotomic, CyclotomicField};
use crate::error::{positive, Error, Result};
use crate::ramanujan::ramanujan_factored;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PeriodicSignal<T> {
    values: Vec<T>,
}

impl<T> PeriodicSignal<T> {
    /// `values[j - 1] = f(j)` for `j = 1..=n`.
    pub fn from_values(values: Vec<T>) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::EmptySignal);
        }
        Ok(PeriodicSignal { values })
    }

    pub fn from_fn(n: u64, f: impl FnMut(u64) -> T) -> Result<Self> {
        positive("n", n)?;
        Ok(PeriodicSignal {
            values: (1..=n).map(f).collect(),
        })
    }

    pub fn period(&self) -> u64 {
        self.values.len() as u64
    }

    /// `f(m)` for any integer `m`.
    pub fn at(&self, m: i64) -> &T {
        let n = self.values.len() as i64;
        &self.values[((m - 1).rem_euclid(n)) as usize]
    }

    pub fn values(&self) -> &[T] {
        &self.values
    }

    pub fn into_values(self) -> Vec<T> {
        self.values
    }

    pub fn map<U>(&self, f: impl FnMut(&T) -> U) -> PeriodicSignal<U> {
        PeriodicSignal {
            values: self.values.iter().map(f).collect(),
        }
    }
}

impl<T: Clone + Into<BigInt>> PeriodicSignal<T> {
    /// Embed an integer signal into `Q(ζ_n)`.
    pub fn lift(&self) -> PeriodicSignal<Cyclotomic> {
        let field = CyclotomicField::of(self.period()).expect("period is positive");
        self.map(|v| field.from_integer(v.clone().into()))
    }
}

/// A function determined by its values on the divisors of `n`: `f(m) = f((m, n))`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EvenSignal<T> {
    period: u64,
    divisor_values: BTreeMap<u64, T>,
}

impl<T: Clone> EvenSignal<T> {
    pub fn new(period: u64, divisor_values: BTreeMap<u64, T>) -> Result<Self> {
        let divs = factorize(period)?.divisors();
        if divs.len() != divisor_values.len() || divs.iter().any(|d| !divisor_values.contains_key(d)) {
            return Err(Error::BadDivisorMap(period));
        }
        Ok(EvenSignal { period, divisor_values })
    }

    pub fn from_fn(period: u64, mut f: impl FnMut(u64) -> T) -> Result<Self> {
        let divisor_values = factorize(period)?
            .divisors()
            .into_iter()
            .map(|d| (d, f(d)))
            .collect();
        Ok(EvenSignal { period, divisor_values })
    }

    pub fn period(&self) -> u64 {
        self.period
    }

    pub fn divisor_values(&self) -> &BTreeMap<u64, T> {
        &self.divisor_values
    }

    pub fn at(&self, m: i64) -> &T {
        &self.divisor_values[&gcd_signed(m, self.period)]
    }

    pub fn expand(&self) -> PeriodicSignal<T> {
        PeriodicSignal {
            values: (1..=self.period).map(|m| self.at(m as i64).clone()).collect(),
        }
    }
}

impl<T: Clone + PartialEq> EvenSignal<T> {
    /// Inverse of [`EvenSignal::expand`]; fails if `f` is not `n`-even.
    pub fn collapse(signal: &PeriodicSignal<T>) -> Result<Self> {
        let n = signal.period();
        for m in 1..=n {
            if signal.at(m as i64) != signal.at(gcd(m, n) as i64) {
                return Err(Error::NotEven(n));
            }
        }
        EvenSignal::from_fn(n, |d| signal.at(d as i64).clone())
    }
}

/// `f̂(b) = Σ_{j=1}^{n} f(j) e(-bj/n)` for `b = 1..=n`.
pub fn dft(f: &PeriodicSignal<Cyclotomic>) -> PeriodicSignal<Cyclotomic> {
    transform(f, -1)
}

/// `f(b) = (1/n) Σ_{j=1}^{n} g(j) e(bj/n)` for `b = 1..=n`.
pub fn idft(g: &PeriodicSignal<Cyclotomic>) -> PeriodicSignal<Cyclotomic> {
    let inv_n = BigRational::new(BigInt::from(1), BigInt::from(g.period()));
    transform(g, 1).map(|v| v.scale(&inv_n))
}

fn transform(f: &PeriodicSignal<Cyclotomic>, sign: i64) -> PeriodicSignal<Cyclotomic> {
    let n = f.period();
    let field = CyclotomicField::of(n).expect("period is positive");
    for v in f.values() {
        assert_eq!(v.order(), n, "signal values must live in Q(ζ_n) for the signal's own n");
    }
    let values = (1..=n as i64)
        .map(|b| {
            let mut acc = vec![BigRational::zero(); n as usize];
            for (idx, v) in f.values().iter().enumerate() {
                let j = idx as i64 + 1;
                v.accumulate_shifted(sign * ((b * j) % n as i64), &mut acc);
            }
            field.from_group_ring(&acc)
        })
        .collect();
    PeriodicSignal { values }
}

/// `(f ⊗ g)(m) = Σ_{x=1}^{n} f(x) g(m - x)`.
pub fn convolve_pair<T>(f: &PeriodicSignal<T>, g: &PeriodicSignal<T>) -> Result<PeriodicSignal<T>>
where
    T: Clone + Zero + AddAssign,
    for<'a> &'a T: Mul<&'a T, Output = T>,
{
    if f.period() != g.period() {
        return Err(Error::PeriodMismatch {
            left: f.period(),
            right: g.period(),
        });
    }
    let n = f.period() as i64;
    let values = (1..=n)
        .map(|m| {
            let mut acc = T::zero();
            for x in 1..=n {
                let fx = f.at(x);
                if !fx.is_zero() {
                    acc += fx * g.at(m - x);
                }
            }
            acc
        })
        .collect();
    Ok(PeriodicSignal { values })
}

/// Cauchy convolution `f_1 ⊗ ⋯ ⊗ f_k`, folded pairwise from the left.
pub fn cauchy_convolve<T>(signals: &[PeriodicSignal<T>]) -> Result<PeriodicSignal<T>>
where
    T: Clone + Zero + AddAssign,
    for<'a> &'a T: Mul<&'a T, Output = T>,
{
    let (first, rest) = signals.split_first().ok_or(Error::NoOperands)?;
    rest.iter()
        .try_fold(first.clone(), |acc, s| convolve_pair(&acc, s))
}

/// The unit of `⊗`: `1` at residue `0`, `0` elsewhere.
pub fn convolution_identity(n: u64) -> Result<PeriodicSignal<BigInt>> {
    PeriodicSignal::from_fn(n, |m| BigInt::from(u8::from(m == n)))
}

/// `ϱ_{n,t}`: `1` where `(m, n) = t`, else `0`.
pub fn gcd_indicator(n: u64, t: u64) -> Result<PeriodicSignal<BigInt>> {
    positive("n", n)?;
    if t == 0 || n % t != 0 {
        return Err(Error::NotADivisor { divisor: t, modulus: n });
    }
    PeriodicSignal::from_fn(n, |m| BigInt::from(u8::from(gcd(m, n) == t)))
}

/// DFT of an `n`-even function at `m` via `Σ_{d | n} f(d) c_{n/d}(m)`.
pub fn even_dft(f: &EvenSignal<BigInt>, m: i64) -> BigInt {
    let n = f.period();
    f.divisor_values()
        .iter()
        .map(|(&d, v)| v * ramanujan_factored(&factorize(n / d).expect("d | n"), m))
        .sum()
}

/// Number of `x ∈ [1, n]^k` with `Σ x_i ≡ b` and `(x_i, n) = t_i`, read off
/// the convolution `ϱ_{n,t_1} ⊗ ⋯ ⊗ ϱ_{n,t_k}` at `b`.
pub fn count_by_convolution(b: i64, n: u64, t: &[u64]) -> Result<BigInt> {
    positive("n", n)?;
    if t.iter().any(|&ti| ti == 0 || n % ti != 0) {
        return Ok(BigInt::zero());
    }
    let signals = t
        .iter()
        .map(|&ti| gcd_indicator(n, ti))
        .collect::<Result<Vec<_>>>()?;
    let conv = if signals.is_empty() {
        convolution_identity(n)?
    } else {
        cauchy_convolve(&signals)?
    };
    Ok(conv.at(b).clone())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ramanujan::ramanujan;

    fn sig(v: &[i64]) -> PeriodicSignal<BigInt> {
        PeriodicSignal::from_values(v.iter().map(|&x| BigInt::from(x)).collect()).unwrap()
    }

    fn as_ints(s: &PeriodicSignal<Cyclotomic>) -> Vec<i64> {
        s.values()
            .iter()
            .map(|v| i64::try_from(v.as_integer().expect("integral value")).unwrap())
            .collect()
    }

    #[test]
    fn indexing_is_one_based_with_zero_at_n() {
        let s = sig(&[10, 20, 30]);
        assert_eq!(s.at(1), &BigInt::from(10));
        assert_eq!(s.at(3), &BigInt::from(30));
        assert_eq!(s.at(0), &BigInt::from(30));
        assert_eq!(s.at(-1), &BigInt::from(20));
        assert_eq!(s.at(7), &BigInt::from(10));
        assert_eq!(PeriodicSignal::<BigInt>::from_values(vec![]), Err(Error::EmptySignal));
    }

    #[test]
    fn dft_examples() {
        assert_eq!(as_ints(&dft(&sig(&[1, 0, 1, 0]).lift())), [0, -2, 0, 2]);
        assert_eq!(as_ints(&dft(&sig(&[1; 7]).lift())), [0, 0, 0, 0, 0, 0, 7]);
        let rho62 = gcd_indicator(6, 2).unwrap();
        assert_eq!(as_ints(&dft(&rho62.lift())), [-1, -1, 2, -1, -1, 2]);
    }

    #[test]
    fn idft_examples() {
        let f = sig(&[3, 1, 4, 1, 5]).lift();
        assert_eq!(idft(&dft(&f)), f);
        assert_eq!(as_ints(&idft(&sig(&[0, 0, 0, 4]).lift())), [1, 1, 1, 1]);
        assert_eq!(as_ints(&idft(&sig(&[0, -2, 0, 2]).lift())), [1, 0, 1, 0]);
    }

    #[test]
    fn dft_of_non_real_signal() {
        // a signal with a genuinely complex value still round-trips exactly
        let field = CyclotomicField::of(5).unwrap();
        let f = PeriodicSignal::from_values(vec![
            field.root_power(1),
            field.from_integer(2),
            field.zero(),
            field.root_power(3),
            field.from_integer(-1),
        ])
        .unwrap();
        assert_eq!(idft(&dft(&f)), f);
    }

    #[test]
    fn convolution_examples() {
        let r21 = gcd_indicator(2, 1).unwrap();
        assert_eq!(cauchy_convolve(&[r21.clone(), r21]).unwrap().at(2), &BigInt::from(1));
        let r41 = gcd_indicator(4, 1).unwrap();
        assert_eq!(cauchy_convolve(&[r41.clone(), r41]).unwrap().at(2), &BigInt::from(2));
        assert!(matches!(
            cauchy_convolve(&[sig(&[1, 2]), sig(&[1, 2, 3])]),
            Err(Error::PeriodMismatch { .. })
        ));
        assert_eq!(cauchy_convolve::<BigInt>(&[]), Err(Error::NoOperands));
        let id = convolution_identity(5).unwrap();
        let f = sig(&[3, 1, 4, 1, 5]);
        assert_eq!(convolve_pair(&f, &id).unwrap(), f);
    }

    #[test]
    fn convolution_theorem_period_six() {
        let f1 = sig(&[1, -2, 0, 3, 5, -1]);
        let f2 = sig(&[2, 2, -3, 0, 1, 4]);
        let lhs = dft(&cauchy_convolve(&[f1.clone(), f2.clone()]).unwrap().lift());
        let (d1, d2) = (dft(&f1.lift()), dft(&f2.lift()));
        for b in 0..6 {
            assert_eq!(lhs.values()[b], &d1.values()[b] * &d2.values()[b]);
        }
    }

    #[test]
    fn indicator_examples() {
        assert_eq!(gcd_indicator(6, 1).unwrap(), sig(&[1, 0, 0, 0, 1, 0]));
        assert_eq!(gcd_indicator(6, 6).unwrap(), sig(&[0, 0, 0, 0, 0, 1]));
        assert_eq!(gcd_indicator(4, 2).unwrap(), sig(&[0, 1, 0, 0]));
        assert!(matches!(gcd_indicator(6, 4), Err(Error::NotADivisor { .. })));
    }

    #[test]
    fn even_dft_examples() {
        for n in [1u64, 6, 12, 30] {
            for t in factorize(n).unwrap().divisors() {
                let rho = EvenSignal::collapse(&gcd_indicator(n, t).unwrap()).unwrap();
                for m in -5..=2 * n as i64 {
                    assert_eq!(even_dft(&rho, m), BigInt::from(ramanujan(n / t, m).unwrap()));
                }
            }
        }
        let ones = EvenSignal::from_fn(6, |_| BigInt::from(1)).unwrap();
        assert_eq!(even_dft(&ones, 6), BigInt::from(6));
        let single = EvenSignal::from_fn(1, |_| BigInt::from(9)).unwrap();
        assert_eq!(even_dft(&single, 4), BigInt::from(9));
    }

    #[test]
    fn even_signal_roundtrip_and_validation() {
        let e = EvenSignal::from_fn(12, |d| BigInt::from(d * d)).unwrap();
        assert_eq!(EvenSignal::collapse(&e.expand()).unwrap(), e);
        assert_eq!(EvenSignal::collapse(&sig(&[1, 2, 3, 4])), Err(Error::NotEven(4)));
        let mut partial = BTreeMap::new();
        partial.insert(1u64, 0i32);
        assert_eq!(EvenSignal::new(6, partial), Err(Error::BadDivisorMap(6)));
    }

    #[test]
    fn convolution_counts_small() {
        // x1 + x2 ≡ 1 (mod 6), (x1,6)=2, (x2,6)=3: only <4,3>
        assert_eq!(count_by_convolution(1, 6, &[2, 3]).unwrap(), BigInt::from(1));
        assert_eq!(count_by_convolution(0, 5, &[1, 1]).unwrap(), BigInt::from(4));
        assert_eq!(count_by_convolution(0, 5, &[]).unwrap(), BigInt::from(1));
        assert_eq!(count_by_convolution(2, 5, &[]).unwrap(), BigInt::from(0));
        assert_eq!(count_by_convolution(0, 6, &[4]).unwrap(), BigInt::from(0));
    }
}
