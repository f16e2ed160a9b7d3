use crate::arith::Factorization;
use crate::error::{Error, Result};

/// `a_1 x_1 + ⋯ + a_k x_k ≡ b (mod n)` with `(x_i, n) = t_i`.
///
/// Coefficients and target may be any integers; they are kept as given and
/// also reduced into `[0, n)`. Every count depends only on the reduced form.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CongruenceInstance {
    modulus: u64,
    coefficients: Vec<i64>,
    constraints: Vec<u64>,
    target: i64,
    canonical_coefficients: Vec<u64>,
    canonical_target: u64,
}

fn reduce(v: i64, n: u64) -> u64 {
    (i128::from(v).rem_euclid(i128::from(n))) as u64
}

fn positive_i64(name: &'static str, v: i64) -> Result<u64> {
    if v <= 0 {
        Err(Error::NonPositive { name, value: i128::from(v) })
    } else {
        Ok(v as u64)
    }
}

impl CongruenceInstance {
    pub fn new(n: i64, a: Vec<i64>, t: Vec<i64>, b: i64) -> Result<Self> {
        let n = positive_i64("n", n)?;
        let t = t
            .into_iter()
            .map(|ti| positive_i64("t", ti))
            .collect::<Result<Vec<_>>>()?;
        Self::from_parts(n, a, t, b)
    }

    /// Same as [`CongruenceInstance::new`] with unsigned modulus and constraints.
    pub fn from_parts(n: u64, a: Vec<i64>, t: Vec<u64>, b: i64) -> Result<Self> {
        if n == 0 {
            return Err(Error::NonPositive { name: "n", value: 0 });
        }
        if t.contains(&0) {
            return Err(Error::NonPositive { name: "t", value: 0 });
        }
        if a.len() != t.len() {
            return Err(Error::LengthMismatch {
                coefficients: a.len(),
                constraints: t.len(),
            });
        }
        Ok(CongruenceInstance {
            modulus: n,
            canonical_coefficients: a.iter().map(|&ai| reduce(ai, n)).collect(),
            canonical_target: reduce(b, n),
            coefficients: a,
            constraints: t,
            target: b,
        })
    }

    /// `x_1 + ⋯ + x_k ≡ b` with the given constraints.
    pub fn unit_coefficients(n: u64, t: Vec<u64>, b: i64) -> Result<Self> {
        Self::from_parts(n, vec![1; t.len()], t, b)
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn k(&self) -> usize {
        self.constraints.len()
    }

    /// Coefficients reduced into `[0, n)`.
    pub fn coefficients(&self) -> &[u64] {
        &self.canonical_coefficients
    }

    pub fn constraints(&self) -> &[u64] {
        &self.constraints
    }

    /// Target reduced into `[0, n)`.
    pub fn target(&self) -> u64 {
        self.canonical_target
    }

    pub fn original_coefficients(&self) -> &[i64] {
        &self.coefficients
    }

    pub fn original_target(&self) -> i64 {
        self.target
    }

    pub fn constraints_divide_modulus(&self) -> bool {
        self.constraints.iter().all(|&t| self.modulus % t == 0)
    }

    /// True when every coefficient is `≡ 0 (mod n)` (including `k = 0`).
    pub fn all_coefficients_zero(&self) -> bool {
        self.canonical_coefficients.iter().all(|&a| a == 0)
    }

    pub fn has_unit_coefficients(&self) -> bool {
        self.canonical_coefficients.iter().all(|&a| a == 1 % self.modulus)
    }

    /// The same congruence modulo `p^r` for a prime power `q = p^r` exactly
    /// dividing `n`, with each `t_i` replaced by its `p`-part.
    pub fn localize(&self, p: u64, r: u32) -> CongruenceInstance {
        let q = p.pow(r);
        let t = self
            .constraints
            .iter()
            .map(|&ti| crate::arith::gcd(ti, q))
            .collect();
        CongruenceInstance::from_parts(
            q,
            self.canonical_coefficients.iter().map(|&a| (a % q) as i64).collect(),
            t,
            (self.canonical_target % q) as i64,
        )
        .expect("localized instance is valid")
    }

    pub(crate) fn factorization(&self) -> Factorization {
        crate::arith::factorize(self.modulus).expect("modulus is positive")
    }
}
