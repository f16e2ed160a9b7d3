//! Brute-force ground truth.
//!
//! Scans residue tuples `x ∈ [1, n]^k` directly. Apart from `gcd`, nothing
//! here is shared with the closed-form counting code; the reduction of
//! coefficients is redone from the instance's original inputs.

use num_bigint::BigUint;

use crate::arith::gcd;
use crate::congruence::CongruenceInstance;
use crate::error::{Error, Result};

/// Cap on the number of tuples `n^k` a scan may visit.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OracleBudget {
    pub max_tuples: u64,
}

impl Default for OracleBudget {
    fn default() -> Self {
        OracleBudget { max_tuples: 10_000_000 }
    }
}

impl OracleBudget {
    pub fn check(&self, n: u64, k: usize) -> Result<()> {
        let required = (0..k).try_fold(1u128, |acc, _| acc.checked_mul(u128::from(n)));
        match required {
            Some(r) if r <= u128::from(self.max_tuples) => Ok(()),
            r => Err(Error::BudgetExceeded {
                required: r.unwrap_or(u128::MAX),
                budget: self.max_tuples,
            }),
        }
    }
}

struct Scan {
    n: u64,
    coeffs: Vec<u64>,
    target: u64,
    /// Admissible values of each coordinate, ascending.
    candidates: Vec<Vec<u64>>,
}

impl Scan {
    fn new(inst: &CongruenceInstance) -> Self {
        let n = inst.modulus();
        let reduce = |v: i64| (i128::from(v).rem_euclid(i128::from(n))) as u64;
        Scan {
            n,
            coeffs: inst.original_coefficients().iter().map(|&a| reduce(a)).collect(),
            target: reduce(inst.original_target()),
            candidates: inst
                .constraints()
                .iter()
                .map(|&t| (1..=n).filter(|&x| gcd(x, n) == t).collect())
                .collect(),
        }
    }

    /// Visit every admissible tuple with its weighted sum mod `n`.
    fn walk(&self, mut visit: impl FnMut(&[u64], u64)) {
        let k = self.candidates.len();
        if self.candidates.iter().any(Vec::is_empty) {
            return;
        }
        let mut idx = vec![0usize; k];
        let mut tuple: Vec<u64> = self.candidates.iter().map(|c| c[0]).collect();
        loop {
            let sum = tuple
                .iter()
                .zip(&self.coeffs)
                .fold(0u128, |acc, (&x, &a)| (acc + u128::from(a) * u128::from(x)) % u128::from(self.n));
            visit(&tuple, sum as u64);
            // odometer increment, last coordinate fastest
            let mut pos = k;
            loop {
                if pos == 0 {
                    return;
                }
                pos -= 1;
                idx[pos] += 1;
                if idx[pos] < self.candidates[pos].len() {
                    tuple[pos] = self.candidates[pos][idx[pos]];
                    break;
                }
                idx[pos] = 0;
                tuple[pos] = self.candidates[pos][0];
            }
        }
    }
}

/// Number of solutions by exhaustive scan.
pub fn oracle_count(inst: &CongruenceInstance, budget: OracleBudget) -> Result<BigUint> {
    budget.check(inst.modulus(), inst.k())?;
    let scan = Scan::new(inst);
    let mut count = 0u64;
    scan.walk(|_, s| count += u64::from(s == scan.target));
    Ok(BigUint::from(count))
}

/// Counts for every target `b = 0..n` at once from a single scan.
/// `result[b]` is the number of solutions with right-hand side `b`.
pub fn oracle_count_all_targets(inst: &CongruenceInstance, budget: OracleBudget) -> Result<Vec<u64>> {
    budget.check(inst.modulus(), inst.k())?;
    let scan = Scan::new(inst);
    let mut hist = vec![0u64; inst.modulus() as usize];
    scan.walk(|_, s| hist[s as usize] += 1);
    Ok(hist)
}

/// The solutions themselves, in lexicographic order.
pub fn oracle_enumerate(inst: &CongruenceInstance, budget: OracleBudget) -> Result<Vec<Vec<u64>>> {
    budget.check(inst.modulus(), inst.k())?;
    let scan = Scan::new(inst);
    let mut out = Vec::new();
    scan.walk(|x, s| {
        if s == scan.target {
            out.push(x.to_vec());
        }
    });
    Ok(out)
}

/// Full scan of `[1, n]^k` with no per-coordinate filtering, checking the gcd
/// constraints tuple by tuple. Slower; kept to validate the filtered scan.
pub fn oracle_count_naive(inst: &CongruenceInstance, budget: OracleBudget) -> Result<BigUint> {
    let n = inst.modulus();
    let k = inst.k();
    budget.check(n, k)?;
    let reduce = |v: i64| (i128::from(v).rem_euclid(i128::from(n))) as u128;
    let a: Vec<u128> = inst.original_coefficients().iter().map(|&v| reduce(v)).collect();
    let b = reduce(inst.original_target());
    let total = (n as u128).pow(k as u32);
    let mut count = 0u64;
    let mut x = vec![0u64; k];
    for code in 0..total {
        let mut c = code;
        for xi in x.iter_mut() {
            *xi = (c % u128::from(n)) as u64 + 1;
            c /= u128::from(n);
        }
        let ok_gcd = x.iter().zip(inst.constraints()).all(|(&xi, &t)| gcd(xi, n) == t);
        let sum: u128 = x.iter().zip(&a).map(|(&xi, &ai)| ai * u128::from(xi)).sum();
        if ok_gcd && sum % u128::from(n) == b {
            count += 1;
        }
    }
    Ok(BigUint::from(count))
}
