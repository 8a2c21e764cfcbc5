//! Property tests for the rational field and the polynomial ring.

use proptest::prelude::*;
use rbb::{classify_discrepancy, Discrepancy, Poly, Rational};

fn rational() -> impl Strategy<Value = Rational> {
    (-60i64..60, 1i64..40).prop_map(|(n, d)| Rational::frac(n, d))
}

fn nonzero_rational() -> impl Strategy<Value = Rational> {
    rational().prop_filter("nonzero", |r| !r.is_zero())
}

fn poly() -> impl Strategy<Value = Poly> {
    prop::collection::vec(rational(), 0..6).prop_map(Poly::from_coeffs)
}

proptest! {
    #[test]
    fn field_axioms(a in rational(), b in rational(), c in rational()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!((&a + &b) + &c, &a + (&b + &c));
        prop_assert_eq!((&a * &b) * &c, &a * (&b * &c));
        prop_assert_eq!(&a * (&b + &c), &a * &b + &a * &c);
        prop_assert_eq!(&a + Rational::zero(), a.clone());
        prop_assert_eq!(&a * Rational::one(), a.clone());
        prop_assert!((&a + -a.clone()).is_zero());
    }

    #[test]
    fn inverses(a in nonzero_rational(), b in rational()) {
        prop_assert!((&a * a.recip().unwrap()).is_one());
        prop_assert_eq!(&b / &a * &a, b);
    }

    #[test]
    fn text_round_trip(a in rational()) {
        prop_assert_eq!(a.to_string().parse::<Rational>().unwrap(), a);
    }

    #[test]
    fn ring_axioms(p in poly(), q in poly(), r in poly()) {
        prop_assert_eq!(&p + &q, &q + &p);
        prop_assert_eq!(&p * &q, &q * &p);
        prop_assert_eq!(&(&p * &q) * &r, &p * &(&q * &r));
        prop_assert_eq!(&p * &(&q + &r), &(&p * &q) + &(&p * &r));
        prop_assert_eq!(&p * &Poly::one(), p.clone());
        prop_assert!((&p - &p).is_zero());
    }

    #[test]
    fn degree_and_evaluation_are_homomorphic(p in poly(), q in poly(), v in rational()) {
        let prod = &p * &q;
        if !p.is_zero() && !q.is_zero() {
            prop_assert_eq!(prod.degree(), Some(p.degree().unwrap() + q.degree().unwrap()));
        }
        prop_assert_eq!(prod.eval(&v), p.eval(&v) * q.eval(&v));
        prop_assert_eq!((&p + &q).eval(&v), p.eval(&v) + q.eval(&v));
    }

    #[test]
    fn calculus(p in poly(), q in poly()) {
        prop_assert_eq!(p.integrate_from_zero().derivative(), p.clone());
        prop_assert!(p.integrate_from_zero().constant_term().is_zero());
        // Leibniz rule
        prop_assert_eq!((&p * &q).derivative(), &(&p.derivative() * &q) + &(&p * &q.derivative()));
    }

    #[test]
    fn composition(p in poly(), q in poly(), r in poly(), v in rational()) {
        prop_assert_eq!(p.compose(&q).compose(&r), p.compose(&q.compose(&r)));
        prop_assert_eq!(p.compose(&q).eval(&v), p.eval(&q.eval(&v)));
        prop_assert_eq!(p.compose(&Poly::x()), p.clone());
    }

    #[test]
    fn classification(p in poly(), q in poly()) {
        let d = classify_discrepancy(&p, &q);
        prop_assert_eq!(d.is_zero(), p == q);
        match d {
            Discrepancy::Zero => {}
            Discrepancy::Constant(c) => {
                prop_assert!(!c.is_zero());
                prop_assert_eq!(&p - &q, Poly::constant(c));
            }
            Discrepancy::NonConstant { difference, witness } => {
                prop_assert_eq!(&difference, &(&p - &q));
                prop_assert!(witness >= 1 && !difference.coeff(witness).is_zero());
                prop_assert!((1..witness).all(|k| difference.coeff(k).is_zero()));
            }
        }
    }

    #[test]
    fn serde_round_trip(p in poly()) {
        let json = serde_json::to_string(&p).unwrap();
        prop_assert_eq!(serde_json::from_str::<Poly>(&json).unwrap(), p);
    }
}
