use std::collections::BTreeSet;

use c2knot_core::contfrac::{positive_expansion, Rational};
use c2knot_core::twobridge::{canonicalize, crossing_number, fraction_to_knot, mod_inverse};

fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a.abs()
    } else {
        gcd(b, a % b)
    }
}

fn knot_slopes(limit: i64) -> impl Iterator<Item = (i64, i64)> {
    (3..limit)
        .step_by(2)
        .flat_map(|p| (1..p).filter(move |&q| gcd(p, q) == 1).map(move |q| (p, q)))
}

#[test]
fn canonical_form_is_constant_on_classes() {
    for (p, q) in knot_slopes(2000) {
        let k = canonicalize(p, q).unwrap();
        let qi = mod_inverse(q, p).unwrap();
        assert_eq!((q * qi) % p, 1);
        for other in [p - q, qi, p - qi, -q] {
            assert_eq!(canonicalize(p, other).unwrap(), k, "{p}/{q} vs {p}/{other}");
        }
        assert_eq!(canonicalize(k.p(), k.q()).unwrap(), k);
        assert_eq!(k.q() % 2, 0);
    }
}

#[test]
fn inverse_is_an_involution_on_the_slope_family() {
    for (p, q) in knot_slopes(600) {
        let k = canonicalize(p, q).unwrap();
        for s in k.slope_family() {
            let d = s.den();
            assert_eq!(mod_inverse(mod_inverse(d, p).unwrap(), p).unwrap(), d);
            assert!(k.has_denominator(mod_inverse(d, p).unwrap()));
        }
    }
}

#[test]
fn four_slope_crossing_sums_agree() {
    let knots: BTreeSet<_> = knot_slopes(2000)
        .map(|(p, q)| canonicalize(p, q).unwrap())
        .collect();
    for k in knots {
        crossing_number(&k).unwrap();
    }
}

#[test]
fn positive_expansion_maps_back_to_the_knot() {
    for (p, q) in knot_slopes(2000) {
        let cf = positive_expansion(Rational::new(p, q).unwrap()).unwrap();
        assert_eq!(fraction_to_knot(cf.eval().unwrap()), Some(canonicalize(p, q).unwrap()));
    }
}
