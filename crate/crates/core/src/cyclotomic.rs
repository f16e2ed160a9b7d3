//! Exact arithmetic in the cyclotomic field `Q(ζ_n)`, `ζ_n = e(1/n)`.
//!
//! Elements are stored in the power basis `1, ζ, …, ζ^{φ(n)-1}`, i.e. as
//! polynomials reduced modulo the `n`-th cyclotomic polynomial. The
//! representation is canonical, so equality of elements is equality of
//! coefficient vectors. This lets the DFT of a rational signal be computed
//! with no rounding at all.

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::arith::factorize;
use crate::error::{positive, Result};

/// The field `Q(ζ_n)` together with the reduction table for `ζ^e`, `0 <= e < n`.
#[derive(Debug)]
pub struct CyclotomicField {
    order: u64,
    /// Monic `Φ_n`, coefficients from the constant term up.
    modulus: Vec<BigInt>,
    /// `powers[e]` is `ζ^e` in the power basis.
    powers: Vec<Vec<BigInt>>,
}

/// `Φ_n(x) = Π_{d | n} (x^d - 1)^{μ(n/d)}`.
pub fn cyclotomic_polynomial(n: u64) -> Result<Vec<BigInt>> {
    let f = factorize(n)?;
    let mut num = vec![BigInt::one()];
    let mut den = vec![BigInt::one()];
    for d in f.divisors() {
        let mu = factorize(n / d)?.mobius();
        if mu == 0 {
            continue;
        }
        // x^d - 1
        let mut factor = vec![BigInt::zero(); d as usize + 1];
        factor[0] = BigInt::from(-1);
        factor[d as usize] = BigInt::one();
        let target = if mu == 1 { &mut num } else { &mut den };
        *target = poly_mul(target, &factor);
    }
    Ok(poly_div_exact(&num, &den))
}

fn poly_mul(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

/// Quotient of `num` by the monic `den`; the remainder must vanish.
fn poly_div_exact(num: &[BigInt], den: &[BigInt]) -> Vec<BigInt> {
    let mut rem = num.to_vec();
    let dl = den.len();
    let ql = rem.len() - dl + 1;
    let mut quot = vec![BigInt::zero(); ql];
    for i in (0..ql).rev() {
        let c = rem[i + dl - 1].clone();
        if c.is_zero() {
            continue;
        }
        for (j, d) in den.iter().enumerate() {
            rem[i + j] -= &c * d;
        }
        quot[i] = c;
    }
    assert!(rem.iter().all(Zero::is_zero), "cyclotomic division left a remainder");
    quot
}

impl CyclotomicField {
    /// The shared field of order `n`; instances are cached process-wide.
    pub fn of(n: u64) -> Result<Arc<CyclotomicField>> {
        positive("n", n)?;
        static CACHE: OnceLock<Mutex<HashMap<u64, Arc<CyclotomicField>>>> = OnceLock::new();
        let cache = CACHE.get_or_init(Default::default);
        if let Some(field) = cache.lock().expect("field cache poisoned").get(&n) {
            return Ok(Arc::clone(field));
        }
        let field = Arc::new(Self::build(n)?);
        let mut guard = cache.lock().expect("field cache poisoned");
        Ok(Arc::clone(guard.entry(n).or_insert(field)))
    }

    fn build(order: u64) -> Result<Self> {
        let modulus = cyclotomic_polynomial(order)?;
        let degree = modulus.len() - 1;
        let mut powers = Vec::with_capacity(order as usize);
        let mut current = vec![BigInt::zero(); degree];
        current[0] = BigInt::one();
        for _ in 0..order {
            powers.push(current.clone());
            // multiply by ζ: shift up, then fold the overflow back using Φ_n
            let top = current.pop().expect("degree >= 1");
            current.insert(0, BigInt::zero());
            if !top.is_zero() {
                for (c, m) in current.iter_mut().zip(&modulus) {
                    *c -= &top * m;
                }
            }
        }
        Ok(CyclotomicField { order, modulus, powers })
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    /// Dimension over `Q`, equal to `φ(n)`.
    pub fn degree(&self) -> usize {
        self.modulus.len() - 1
    }

    pub fn modulus(&self) -> &[BigInt] {
        &self.modulus
    }

    pub fn zero(self: &Arc<Self>) -> Cyclotomic {
        Cyclotomic {
            field: Arc::clone(self),
            coeffs: vec![BigRational::zero(); self.degree()],
        }
    }

    pub fn from_rational(self: &Arc<Self>, q: BigRational) -> Cyclotomic {
        let mut z = self.zero();
        z.coeffs[0] = q;
        z
    }

    pub fn from_integer(self: &Arc<Self>, v: impl Into<BigInt>) -> Cyclotomic {
        self.from_rational(BigRational::from_integer(v.into()))
    }

    /// `ζ^e` for any integer exponent.
    pub fn root_power(self: &Arc<Self>, e: i64) -> Cyclotomic {
        let e = e.rem_euclid(self.order as i64) as usize;
        Cyclotomic {
            field: Arc::clone(self),
            coeffs: self.powers[e]
                .iter()
                .map(|c| BigRational::from_integer(c.clone()))
                .collect(),
        }
    }

    /// Reduce `Σ_e v[e] ζ^e` (group-ring coordinates, `v.len() == n`).
    pub fn from_group_ring(self: &Arc<Self>, v: &[BigRational]) -> Cyclotomic {
        assert_eq!(v.len() as u64, self.order, "group-ring vector has wrong length");
        let mut coeffs = vec![BigRational::zero(); self.degree()];
        for (e, c) in v.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (out, p) in coeffs.iter_mut().zip(&self.powers[e]) {
                if !p.is_zero() {
                    *out += c * BigRational::from_integer(p.clone());
                }
            }
        }
        Cyclotomic { field: Arc::clone(self), coeffs }
    }
}

/// An element of `Q(ζ_n)`.
#[derive(Clone)]
pub struct Cyclotomic {
    field: Arc<CyclotomicField>,
    coeffs: Vec<BigRational>,
}

impl Cyclotomic {
    pub fn field(&self) -> &Arc<CyclotomicField> {
        &self.field
    }

    pub fn order(&self) -> u64 {
        self.field.order
    }

    pub fn coefficients(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// The value as a rational number, if it lies in `Q`.
    pub fn as_rational(&self) -> Option<BigRational> {
        self.coeffs[1..]
            .iter()
            .all(Zero::is_zero)
            .then(|| self.coeffs[0].clone())
    }

    pub fn as_integer(&self) -> Option<BigInt> {
        self.as_rational().filter(|q| q.is_integer()).map(|q| q.to_integer())
    }

    pub fn scale(&self, q: &BigRational) -> Cyclotomic {
        Cyclotomic {
            field: Arc::clone(&self.field),
            coeffs: self.coeffs.iter().map(|c| c * q).collect(),
        }
    }

    /// Add `self · ζ^shift` into group-ring coordinates `acc`.
    pub(crate) fn accumulate_shifted(&self, shift: i64, acc: &mut [BigRational]) {
        let n = self.field.order as i64;
        for (i, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                acc[(i as i64 + shift).rem_euclid(n) as usize] += c;
            }
        }
    }

    /// Floating-point value under the embedding `ζ ↦ e^{2πi/n}`.
    pub fn to_complex(&self) -> Complex64 {
        let n = self.field.order as f64;
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| {
                let c = rational_to_f64(c);
                Complex64::from_polar(c, std::f64::consts::TAU * i as f64 / n)
            })
            .sum()
    }

    fn check_same_field(&self, other: &Cyclotomic) {
        assert_eq!(
            self.field.order, other.field.order,
            "operands live in different cyclotomic fields"
        );
    }
}

fn rational_to_f64(q: &BigRational) -> f64 {
    use num_traits::ToPrimitive;
    q.to_f64().unwrap_or(f64::NAN)
}

impl PartialEq for Cyclotomic {
    fn eq(&self, other: &Self) -> bool {
        self.field.order == other.field.order && self.coeffs == other.coeffs
    }
}

impl Eq for Cyclotomic {}

impl fmt::Debug for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| match i {
                0 => c.to_string(),
                1 => format!("({c})ζ"),
                _ => format!("({c})ζ^{i}"),
            })
            .collect();
        if terms.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", terms.join(" + "))
        }
    }
}

impl Add for &Cyclotomic {
    type Output = Cyclotomic;

    fn add(self, rhs: &Cyclotomic) -> Cyclotomic {
        self.check_same_field(rhs);
        Cyclotomic {
            field: Arc::clone(&self.field),
            coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a + b).collect(),
        }
    }
}

impl Sub for &Cyclotomic {
    type Output = Cyclotomic;

    fn sub(self, rhs: &Cyclotomic) -> Cyclotomic {
        self.check_same_field(rhs);
        Cyclotomic {
            field: Arc::clone(&self.field),
            coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a - b).collect(),
        }
    }
}

impl Neg for &Cyclotomic {
    type Output = Cyclotomic;

    fn neg(self) -> Cyclotomic {
        Cyclotomic {
            field: Arc::clone(&self.field),
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Mul for &Cyclotomic {
    type Output = Cyclotomic;

    fn mul(self, rhs: &Cyclotomic) -> Cyclotomic {
        self.check_same_field(rhs);
        let n = self.field.order as usize;
        // ζ^n = 1, so the product can be folded into group-ring coordinates first.
        let mut acc = vec![BigRational::zero(); n];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    acc[(i + j) % n] += a * b;
                }
            }
        }
        self.field.from_group_ring(&acc)
    }
}
