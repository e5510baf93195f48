use c2knot_core::contfrac::{
    even_expansion, positive_expansion, positive_expansion_variant, semi_even_expansion,
    ContinuedFraction, ExpansionClass, Rational, Value,
};
use proptest::prelude::*;

fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a.abs()
    } else {
        gcd(b, a % b)
    }
}

fn reduced_pairs(limit: i64) -> impl Iterator<Item = (i64, i64)> {
    (2..limit).flat_map(|p| (1..p).filter(move |&q| gcd(p, q) == 1).map(move |q| (p, q)))
}

fn value(r: Rational) -> Value {
    Value::Finite(r)
}

#[test]
fn positive_round_trip_and_shape() {
    for (p, q) in reduced_pairs(2000) {
        let r = Rational::new(p, q).unwrap();
        let cf = positive_expansion(r).unwrap();
        assert_eq!(cf.eval().unwrap(), value(r));
        assert!(cf.entries().iter().all(|&a| a >= 1));
        let variant = positive_expansion_variant(&cf).unwrap();
        assert_eq!(variant.eval().unwrap(), value(r));
        assert_eq!(variant.crossing_sum(), cf.crossing_sum());
    }
}

#[test]
fn even_expansions_are_even_with_even_length() {
    for (p, q) in reduced_pairs(2000).filter(|(p, q)| p % 2 == 1 && q % 2 == 0) {
        let r = Rational::new(p, q).unwrap();
        let cf = even_expansion(r).unwrap();
        assert_eq!(cf.eval().unwrap(), value(r), "{r}");
        assert!(cf.entries().iter().all(|a| a % 2 == 0), "{r} → {cf}");
        assert_eq!(cf.len() % 2, 0, "{r} → {cf}");
    }
}

#[test]
fn semi_even_parity_law_and_comparison() {
    for (p, q) in reduced_pairs(2000).filter(|(p, q)| (p % 2 == 0) != (q % 2 == 0)) {
        let r = Rational::new(p, q).unwrap();
        let semi = semi_even_expansion(r).unwrap();
        assert_eq!(semi.eval().unwrap(), value(r), "{r}");
        if p % 2 == 1 {
            assert!(semi.entries().iter().skip(1).step_by(2).all(|a| a % 2 == 0));
            assert_eq!(semi.len() % 2, 0, "{r} → {semi}");
            assert_eq!(semi.classify(), ExpansionClass::TypeA);
            let even = even_expansion(r).unwrap();
            assert!(semi.crossing_sum() <= even.crossing_sum(), "{r}: {semi} vs {even}");
        } else {
            // even/odd: the constrained positions are the odd ones
            assert!(semi.entries().iter().step_by(2).all(|a| a % 2 == 0), "{r} → {semi}");
            assert_eq!(semi.len() % 2, 1, "{r} → {semi}");
        }
    }
}

fn nonzero_entry() -> impl Strategy<Value = i64> {
    prop_oneof![-9i64..=-1, 1i64..=9]
}

proptest! {
    #[test]
    fn continuants_are_coprime(entries in prop::collection::vec(nonzero_entry(), 1..12)) {
        let cf = ContinuedFraction::new(entries).unwrap();
        match cf.eval().unwrap() {
            Value::Finite(r) => prop_assert_eq!(gcd(r.num(), r.den()), 1),
            Value::Infinite => {}
        }
    }

    #[test]
    fn negation_negates_value(entries in prop::collection::vec(nonzero_entry(), 1..12)) {
        let cf = ContinuedFraction::new(entries).unwrap();
        let neg = cf.negated();
        match (cf.eval().unwrap(), neg.eval().unwrap()) {
            (Value::Finite(a), Value::Finite(b)) => {
                prop_assert_eq!(a.num(), -b.num());
                prop_assert_eq!(a.den(), b.den());
            }
            (Value::Infinite, Value::Infinite) => {}
            other => prop_assert!(false, "{:?}", other),
        }
    }

    #[test]
    fn type_a_is_closed_under_negation(entries in prop::collection::vec(nonzero_entry(), 1..12)) {
        let cf = ContinuedFraction::new(entries).unwrap();
        if cf.classify() == ExpansionClass::TypeA {
            prop_assert_eq!(cf.negated().classify(), ExpansionClass::TypeA);
        }
    }

    #[test]
    fn crossing_sum_is_at_least_length(entries in prop::collection::vec(nonzero_entry(), 1..12)) {
        let cf = ContinuedFraction::new(entries).unwrap();
        prop_assert!(cf.crossing_sum() >= cf.len() as u64);
    }
}
