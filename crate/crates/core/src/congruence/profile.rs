use std::fmt;

use super::CongruenceInstance;
use crate::arith::valuation_or_inf;

/// How `b` sits relative to the profile's thresholds at one prime.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TargetClass {
    /// `m_p <= r_p` and `p^{m_p} | b`.
    DivisibleByPMp,
    /// `m_p <= r_p` and `p^{m_p - 1} ∥ b`.
    ExactlyPMpMinus1,
    /// `m_p <= r_p` and `p^{m_p - 1} ∤ b`.
    Below,
    /// `m_p = r_p + 1` and `p^{r_p} | b`.
    DivisibleByPRp,
    /// `m_p = r_p + 1` and `p^{r_p} ∤ b`.
    NotDivisibleByPRp,
}

impl TargetClass {
    pub fn label(self) -> &'static str {
        match self {
            TargetClass::DivisibleByPMp => "divisible_by_p_mp",
            TargetClass::ExactlyPMpMinus1 => "exactly_p_mp_minus_1",
            TargetClass::Below => "below",
            TargetClass::DivisibleByPRp => "divisible_by_p_rp",
            TargetClass::NotDivisibleByPRp => "not",
        }
    }
}

impl fmt::Display for TargetClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

/// Per-prime data of an instance at a prime `p | n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PrimeLocalProfile {
    pub p: u64,
    /// Exponent of `p` in `n`.
    pub r_p: u32,
    /// Least `j >= 1` with `p^j ∤ a_i t_i` for some `i`, capped at `r_p + 1`.
    pub m_p: u32,
    /// Number of `i` with `p^{m_p} ∤ a_i t_i`; only defined when `m_p <= r_p`.
    pub e_p: Option<u32>,
    pub b_class: TargetClass,
}

impl PrimeLocalProfile {
    pub fn is_capped(&self) -> bool {
        self.m_p > self.r_p
    }
}

/// Profiles for every prime dividing `n`, in increasing order of `p`.
///
/// Coefficients `≡ 0 (mod n)` count as having infinite valuation, which the
/// cap at `r_p + 1` absorbs.
pub fn prime_profiles(inst: &CongruenceInstance) -> Vec<PrimeLocalProfile> {
    let a = inst.coefficients();
    let t = inst.constraints();
    inst.factorization()
        .factors()
        .iter()
        .map(|&(p, r)| {
            let cap = r + 1;
            // min(v_p(a_i t_i), r_p) is invariant under a_i -> a_i mod n
            let vals: Vec<u32> = a
                .iter()
                .zip(t)
                .map(|(&ai, &ti)| match valuation_or_inf(p, ai) {
                    None => r,
                    Some(va) => (va + valuation_or_inf(p, ti).unwrap_or(r)).min(r),
                })
                .collect();
            let m_p = vals.iter().map(|&v| v + 1).min().unwrap_or(cap).min(cap);
            let vb = valuation_or_inf(p, inst.target());
            let divides = |j: u32| vb.is_none_or(|v| v >= j);
            if m_p <= r {
                let e_p = vals.iter().filter(|&&v| v == m_p - 1).count() as u32;
                let b_class = if divides(m_p) {
                    TargetClass::DivisibleByPMp
                } else if divides(m_p - 1) {
                    TargetClass::ExactlyPMpMinus1
                } else {
                    TargetClass::Below
                };
                PrimeLocalProfile { p, r_p: r, m_p, e_p: Some(e_p), b_class }
            } else {
                let b_class = if divides(r) {
                    TargetClass::DivisibleByPRp
                } else {
                    TargetClass::NotDivisibleByPRp
                };
                PrimeLocalProfile { p, r_p: r, m_p, e_p: None, b_class }
            }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn example(b: i64) -> CongruenceInstance {
        CongruenceInstance::new(24, vec![2, 1, 2], vec![3, 2, 4], b).unwrap()
    }

    #[test]
    fn worked_example_profiles() {
        let prof = prime_profiles(&example(12));
        assert_eq!(
            prof,
            vec![
                PrimeLocalProfile { p: 2, r_p: 3, m_p: 2, e_p: Some(2), b_class: TargetClass::DivisibleByPMp },
                PrimeLocalProfile { p: 3, r_p: 1, m_p: 1, e_p: Some(2), b_class: TargetClass::DivisibleByPMp },
            ]
        );
        let prof = prime_profiles(&example(4));
        assert_eq!(prof[1].b_class, TargetClass::ExactlyPMpMinus1);
        let prof = prime_profiles(&example(5));
        assert_eq!(prof[0].b_class, TargetClass::Below);
        let prof = prime_profiles(&example(10));
        assert_eq!(prof[0].b_class, TargetClass::ExactlyPMpMinus1);
    }

    #[test]
    fn single_coefficient_profile() {
        let inst = CongruenceInstance::new(4, vec![6], vec![1], 0).unwrap();
        let prof = prime_profiles(&inst);
        assert_eq!(prof.len(), 1);
        assert_eq!((prof[0].r_p, prof[0].m_p, prof[0].e_p), (2, 2, Some(1)));
    }

    #[test]
    fn zero_residue_is_capped() {
        let inst = CongruenceInstance::new(12, vec![12, 0], vec![1, 1], 6).unwrap();
        for prof in prime_profiles(&inst) {
            assert!(prof.is_capped());
            assert_eq!(prof.m_p, prof.r_p + 1);
            assert_eq!(prof.e_p, None);
        }
        // a ≡ 8 (mod 8) has infinite valuation after reduction
        let inst = CongruenceInstance::new(8, vec![16, 1], vec![1, 4], 4).unwrap();
        let prof = prime_profiles(&inst);
        assert_eq!((prof[0].m_p, prof[0].e_p), (3, Some(1)));
    }

    #[test]
    fn profile_matches_definition_by_scan() {
        // brute j-scan of the definition on unreduced products
        for n in 2..=36u64 {
            let f = crate::arith::factorize(n).unwrap();
            for a1 in 1..n {
                for t1 in f.divisors() {
                    let inst = CongruenceInstance::from_parts(n, vec![a1 as i64, 3], vec![t1, 1], 0).unwrap();
                    for prof in prime_profiles(&inst) {
                        let prods = [a1 * t1, 3];
                        let mut j = 1;
                        while prods.iter().all(|x| x % prof.p.pow(j) == 0) {
                            j += 1;
                        }
                        assert_eq!(prof.m_p, j.min(prof.r_p + 1));
                        if prof.m_p <= prof.r_p {
                            let e = prods.iter().filter(|x| *x % prof.p.pow(prof.m_p) != 0).count();
                            assert_eq!(prof.e_p, Some(e as u32));
                        }
                    }
                }
            }
        }
    }
}
