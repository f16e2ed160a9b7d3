//! Self-test suites: identity checks on Ramanujan sums and a seeded random
//! sweep comparing every counting route with the oracle.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::arith::{factorize, gcd_signed};
use crate::congruence::{classify_unsolvable, new_orthogonality_sum, CongruenceInstance};
use crate::error::Result;
use crate::methods::MethodRegistry;
use crate::oracle::{oracle_count, OracleBudget};
use crate::ramanujan::{divisor_sum, orthogonality_sum, EvaluatorRegistry};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VerifyConfig {
    pub seed: u64,
    /// Random instances in the counting sweep.
    pub samples: usize,
    /// Largest modulus used by the identity suites.
    pub max_modulus: u64,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig { seed: 0, samples: 500, max_modulus: 120 }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuiteOutcome {
    pub name: &'static str,
    pub checked: u64,
    pub failures: u64,
    pub first_failure: Option<String>,
}

impl SuiteOutcome {
    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyReport {
    pub seed: u64,
    pub suites: Vec<SuiteOutcome>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.suites.iter().all(SuiteOutcome::passed)
    }
}

/// Run one check per item in parallel; the outcome does not depend on scheduling.
fn suite<T: Sync>(
    name: &'static str,
    items: &[T],
    check: impl Fn(&T) -> std::result::Result<(), String> + Sync,
) -> SuiteOutcome {
    let results: Vec<_> = items.par_iter().map(|item| check(item)).collect();
    let failures: Vec<String> = results.into_iter().filter_map(|r| r.err()).collect();
    SuiteOutcome {
        name,
        checked: items.len() as u64,
        failures: failures.len() as u64,
        first_failure: failures.into_iter().next(),
    }
}

fn expect_eq<V: PartialEq + std::fmt::Display>(
    got: Result<V>,
    expected: V,
    what: impl FnOnce() -> String,
) -> std::result::Result<(), String> {
    match got {
        Ok(v) if v == expected => Ok(()),
        Ok(v) => Err(format!("{}: got {v}, expected {expected}", what())),
        Err(e) => Err(format!("{}: {e}", what())),
    }
}

pub fn run(config: &VerifyConfig) -> VerifyReport {
    let max_n = config.max_modulus.max(1);
    let mut suites = Vec::new();

    let pairs: Vec<(u64, i64)> = (1..=max_n)
        .flat_map(|n| (0..=2 * n as i64).map(move |m| (n, m)))
        .collect();
    let evaluators = EvaluatorRegistry::default();
    suites.push(suite("ramanujan-evaluators", &pairs, |&(n, m)| {
        let values: Vec<_> = evaluators.iter().map(|e| (e.name(), e.evaluate(n, m))).collect();
        let first = values[0].1.clone().map_err(|e| e.to_string())?;
        for (name, v) in &values {
            match v {
                Ok(v) if *v == first => {}
                other => return Err(format!("c_{n}({m}): {name} gave {other:?}, expected {first}")),
            }
        }
        Ok(())
    }));

    let positive_pairs: Vec<_> = pairs.iter().copied().filter(|&(_, m)| m >= 1).collect();
    suites.push(suite("divisor-sum", &positive_pairs, |&(n, m)| {
        let expected = if m % n as i64 == 0 { n as i64 } else { 0 };
        expect_eq(divisor_sum(n, m), expected, || format!("n={n} m={m}"))
    }));

    let triples: Vec<(u64, u64, u64)> = (1..=max_n)
        .flat_map(|n| {
            let divs = factorize(n).expect("n >= 1").divisors();
            divs.iter()
                .flat_map(|&d1| divs.iter().map(move |&d2| (n, d1, d2)))
                .collect::<Vec<_>>()
        })
        .collect();
    suites.push(suite("orthogonality", &triples, |&(n, d1, d2)| {
        let expected = if d1 == d2 { n as i64 } else { 0 };
        expect_eq(orthogonality_sum(n, d1, d2), expected, || format!("n={n} d1={d1} d2={d2}"))
    }));

    let gcd_triples: Vec<(u64, u64, i64)> = (1..=max_n)
        .flat_map(|n| {
            factorize(n)
                .expect("n >= 1")
                .divisors()
                .into_iter()
                .flat_map(move |s| (0..n as i64).map(move |b| (n, s, b)))
        })
        .collect();
    suites.push(suite("gcd-orthogonality", &gcd_triples, |&(n, s, b)| {
        let expected = if gcd_signed(b, n) == s { n } else { 0 };
        expect_eq(new_orthogonality_sum(b, n, s), expected.into(), || format!("n={n} s={s} b={b}"))
    }));

    let instances = random_instances(config.seed, config.samples);
    let methods = MethodRegistry::default();
    let budget = OracleBudget::default();
    suites.push(suite("counting-agreement", &instances, |inst| {
        let truth = oracle_count(inst, budget).map_err(|e| e.to_string())?;
        for m in methods.applicable(inst) {
            match m.count(inst) {
                Ok(c) if c == truth => {}
                other => return Err(format!("{}: {inst:?} gave {other:?}, oracle {truth}", m.name())),
            }
        }
        let case = classify_unsolvable(inst);
        if case.is_some() != (truth == 0u32.into()) {
            return Err(format!("classification {case:?} inconsistent with count {truth} for {inst:?}"));
        }
        Ok(())
    }));

    VerifyReport { seed: config.seed, suites }
}

/// Random instances with `n ≤ 20`, `k ≤ 3`; coefficients and targets range
/// beyond `[0, n)` and one constraint in ten need not divide `n`.
pub fn random_instances(seed: u64, count: usize) -> Vec<CongruenceInstance> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let n: u64 = rng.gen_range(1..=20);
            let k: usize = rng.gen_range(0..=3);
            let divs = factorize(n).expect("n >= 1").divisors();
            let span = n as i64;
            let a = (0..k).map(|_| rng.gen_range(-span..2 * span)).collect();
            let t = (0..k)
                .map(|_| {
                    if rng.gen_ratio(1, 10) {
                        rng.gen_range(1..=n + 3)
                    } else {
                        divs[rng.gen_range(0..divs.len())]
                    }
                })
                .collect();
            let b = rng.gen_range(-span..2 * span);
            CongruenceInstance::from_parts(n, a, t, b).expect("generated instance is valid")
        })
        .collect()
}
