use num_bigint::{BigInt, BigUint};
use proptest::prelude::*;

use ramcount::arith::{factorize, gcd};
use ramcount::congruence::{classify_unsolvable, count_general_explicit, count_general_ramanujan, CongruenceInstance};
use ramcount::dft::{cauchy_convolve, dft, even_dft, idft, EvenSignal, PeriodicSignal};
use ramcount::oracle::{oracle_count, OracleBudget};

fn instance() -> impl Strategy<Value = (u64, Vec<i64>, Vec<u64>, i64)> {
    (1u64..=24, 1usize..=3).prop_flat_map(|(n, k)| {
        let divs = factorize(n).unwrap().divisors();
        (
            Just(n),
            prop::collection::vec(-50i64..50, k),
            prop::collection::vec(prop::sample::select(divs), k),
            -50i64..50,
        )
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn count_depends_on_b_only_through_gcd((n, _, t, b) in instance(), u in 1i64..200) {
        // multiplying b by a unit mod n keeps (b, n), and with unit coefficients the count is even in b
        prop_assume!(gcd(u as u64, n) == 1);
        let ones = vec![1; t.len()];
        let left = CongruenceInstance::from_parts(n, ones.clone(), t.clone(), b).unwrap();
        let right = CongruenceInstance::from_parts(n, ones, t, b * u).unwrap();
        prop_assert_eq!(count_general_explicit(&left).unwrap().count, count_general_explicit(&right).unwrap().count);
    }

    #[test]
    fn shifting_by_the_modulus_is_invisible((n, a, t, b) in instance(), shift in -3i64..=3) {
        let base = CongruenceInstance::from_parts(n, a.clone(), t.clone(), b).unwrap();
        let moved = CongruenceInstance::from_parts(
            n,
            a.iter().map(|x| x + shift * n as i64).collect(),
            t,
            b - shift * n as i64,
        ).unwrap();
        prop_assert_eq!(count_general_ramanujan(&base).unwrap(), count_general_ramanujan(&moved).unwrap());
        prop_assert_eq!(classify_unsolvable(&base), classify_unsolvable(&moved));
    }

    #[test]
    fn routes_agree_with_oracle_and_classification((n, a, t, b) in instance()) {
        let inst = CongruenceInstance::from_parts(n, a, t, b).unwrap();
        let truth = oracle_count(&inst, OracleBudget::default()).unwrap();
        let report = count_general_explicit(&inst).unwrap();
        prop_assert_eq!(&report.count, &truth);
        prop_assert_eq!(count_general_ramanujan(&inst).unwrap(), truth.clone());
        prop_assert_eq!(report.unsolvable_case.is_some(), truth == BigUint::from(0u32));
        prop_assert_eq!(report.unsolvable_case, classify_unsolvable(&inst));
    }

    #[test]
    fn inverse_transform_round_trips(values in (1usize..=24).prop_flat_map(|n| prop::collection::vec(-30i64..30, n))) {
        let signal = PeriodicSignal::from_values(values.into_iter().map(BigInt::from).collect()).unwrap().lift();
        prop_assert_eq!(idft(&dft(&signal)), signal);
    }

    #[test]
    fn transform_turns_convolution_into_product(
        (a, b) in (1usize..=12).prop_flat_map(|n| (
            prop::collection::vec(-9i64..9, n),
            prop::collection::vec(-9i64..9, n),
        ))
    ) {
        let f = PeriodicSignal::from_values(a.into_iter().map(BigInt::from).collect()).unwrap();
        let g = PeriodicSignal::from_values(b.into_iter().map(BigInt::from).collect()).unwrap();
        let conv = dft(&cauchy_convolve(&[f.clone(), g.clone()]).unwrap().lift());
        let (ff, gg) = (dft(&f.lift()), dft(&g.lift()));
        for m in 1..=f.period() as i64 {
            prop_assert_eq!(conv.at(m), &(ff.at(m) * gg.at(m)));
        }
    }

    #[test]
    fn even_transform_matches_full_transform(n in 1u64..=30, seed in any::<u64>()) {
        let f = EvenSignal::from_fn(n, |d| BigInt::from((seed.rotate_left(d as u32) % 17) as i64 - 8)).unwrap();
        let full = dft(&f.expand().lift());
        for m in 1..=n as i64 {
            prop_assert_eq!(full.at(m).as_integer(), Some(even_dft(&f, m)));
        }
    }
}
