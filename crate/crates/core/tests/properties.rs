use brousseau::closed_form::{brute_convolution, brute_sum};
use brousseau::sequences::{fibonacci, fibonacci_fast_doubling};
use brousseau::{brousseau_closed, convolution_closed, eval_closed, summand_coeffs, CoeffTable, RatSeries};
use num_bigint::BigInt;
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn sum_closed_form_matches_brute(p in 0u32..16, n in 0u64..400) {
        let t = CoeffTable::recursion(16);
        prop_assert_eq!(eval_closed(&brousseau_closed(p, &t).unwrap(), n), brute_sum(p, n));
    }

    #[test]
    fn convolution_closed_form_matches_brute(p in 0u32..16, n in 0u64..400) {
        let t = CoeffTable::recursion(16);
        prop_assert_eq!(eval_closed(&convolution_closed(p, &t).unwrap(), n), brute_convolution(p, n));
    }

    #[test]
    fn difference_identity(p in 1u32..14, n in 0u64..120) {
        let w = summand_coeffs(p).unwrap();
        let lhs = fibonacci(n as usize) - num_traits::pow(BigInt::from(n), p as usize);
        let rhs: BigInt = (1..=n).map(|i| w.eval_i64(i as i64) * fibonacci((n - i) as usize)).sum();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn fibonacci_methods_agree(n in 0u64..5000) {
        prop_assert_eq!(fibonacci(n as usize), fibonacci_fast_doubling(n));
    }

    #[test]
    fn series_inverse_round_trip(coeffs in prop::collection::vec(-9i64..9, 1..10), lead in 1i64..5) {
        let order = coeffs.len() - 1;
        let mut c = coeffs;
        c[0] = lead;
        let s = RatSeries::from_ints(order, &c);
        prop_assert_eq!(&s * &s.inverse().unwrap(), RatSeries::one(order));
    }
}

#[test]
fn concurrent_evaluation_matches_sequential() {
    let t = CoeffTable::recursion(10);
    let forms: Vec<_> = (0..=10).map(|p| brousseau_closed(p, &t).unwrap()).collect();
    let seq: Vec<BigInt> = forms.iter().map(|f| eval_closed(f, 97)).collect();
    let par: Vec<BigInt> = std::thread::scope(|s| {
        let handles: Vec<_> = forms.iter().map(|f| s.spawn(move || eval_closed(f, 97))).collect();
        handles.into_iter().map(|h| h.join().unwrap()).collect()
    });
    assert_eq!(seq, par);
}
