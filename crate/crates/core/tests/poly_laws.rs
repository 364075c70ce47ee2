use brieskorn::LaurentPolynomial;
use proptest::prelude::*;

fn poly() -> impl Strategy<Value = LaurentPolynomial> {
    prop::collection::vec((-12i64..12, -50i64..50), 0..8).prop_map(LaurentPolynomial::from_terms)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(10_000))]

    #[test]
    fn ring_laws(a in poly(), b in poly(), c in poly()) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a * &LaurentPolynomial::one(), a.clone());
        prop_assert!((&a - &a).is_zero());
        prop_assert!((&a * &b).terms().all(|(_, k)| *k != 0.into()));
    }

    #[test]
    fn inversion_is_a_ring_map(a in poly(), b in poly()) {
        prop_assert_eq!((&a * &b).invert_variable(), &a.invert_variable() * &b.invert_variable());
        prop_assert_eq!(a.invert_variable().invert_variable(), a);
    }
}

#[test]
fn json_pairs() {
    let v = LaurentPolynomial::from_terms([(4, -1), (3, 1), (1, 1)]);
    let s = serde_json::to_string(&v).unwrap();
    assert_eq!(s, "[[1,1],[3,1],[4,-1]]");
    assert_eq!(serde_json::from_str::<LaurentPolynomial>(&s).unwrap(), v);
    let big = LaurentPolynomial::monomial(num_bigint::BigInt::from(10).pow(30), 2);
    let s = serde_json::to_string(&big).unwrap();
    assert_eq!(serde_json::from_str::<LaurentPolynomial>(&s).unwrap(), big);
}
