use num_bigint::BigInt;
use num_integer::binomial;
use proptest::prelude::*;
use wgrass_core::grading::{degrees, is_positive, GradingParams};
use wgrass_core::pluecker::*;

#[test]
fn relation_counts() {
    assert_eq!(relations(3, 2).unwrap().len(), 1);
    assert_eq!(relations(3, 2).unwrap()[0].to_string(), "T01*T23 - T02*T13 + T03*T12");
    assert_eq!(relations(4, 2).unwrap().len(), 5);
    assert_eq!(relations(5, 2).unwrap().len(), binomial(6, 4));
    assert!(relations(4, 1).unwrap().is_empty());
    assert!(relations(4, 4).unwrap().is_empty());
}

#[test]
fn standard_monomials_count_grassmannians() {
    let d = standard_monomial_count(&GradingParams::standard(3, 2).unwrap(), 4).unwrap();
    let ints: Vec<BigInt> = [1, 6, 20, 50, 105].iter().map(|&x| BigInt::from(x)).collect();
    assert_eq!(d, ints);
    let d = standard_monomial_count(&GradingParams::standard(4, 2).unwrap(), 1).unwrap();
    assert_eq!(d[1], BigInt::from(10));
    let bad = GradingParams::new(2, 1, vec![0, 1, 1]).unwrap();
    assert!(matches!(standard_monomial_count(&bad, 3), Err(PlueckerError::NotPositive)));
}

#[test]
fn oracles_agree() {
    for (n, k, a) in [(3, 2, vec![1, 1, 1, 1]), (3, 2, vec![1, 2, 3, 4]), (4, 2, vec![-1, 3, 3, 3, 3]), (3, 3, vec![1, 2, 3, 4])] {
        let p = GradingParams::new(n, k, a.clone()).unwrap();
        let d = standard_monomial_count(&p, 4).unwrap();
        for m in 0..=4u64 {
            let rank = ideal_dimension_oracle(&p, m, IDEAL_ORACLE_CUTOFF).unwrap();
            assert_eq!(rank, d[m as usize], "({n},{k},{a:?}) at m = {m}");
        }
    }
    let p = GradingParams::standard(5, 2).unwrap();
    assert!(matches!(ideal_dimension_oracle(&p, 6, 10), Err(PlueckerError::TooLarge { .. })));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn relations_are_quasi_homogeneous(n in 2usize..=5, k_off in 0usize..5, a in prop::collection::vec(-8i64..=8, 6)) {
        let k = 1 + k_off % n;
        let p = GradingParams::new(n, k, a[..=n].to_vec()).unwrap();
        let rels = relations(n, k).unwrap();
        for d in relation_degrees(&rels, &degrees(&p)).unwrap() {
            prop_assert!(d.quasi_homogeneous);
        }
        for r in &rels {
            prop_assert!(r.is_balanced());
        }
    }

    #[test]
    fn first_coefficients(n in 1usize..=5, k_off in 0usize..5, a in prop::collection::vec(1i64..=4, 6)) {
        let k = 1 + k_off % n;
        let p = GradingParams::new(n, k, a[..=n].to_vec()).unwrap();
        prop_assume!(is_positive(&p));
        let d = standard_monomial_count(&p, 8).unwrap();
        prop_assert_eq!(d[0].clone(), BigInt::from(1));
        let ones = degrees(&p).values().iter().filter(|&&x| x == 1).count();
        prop_assert_eq!(d[1].clone(), BigInt::from(ones));
    }
}
