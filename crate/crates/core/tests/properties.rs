use std::cmp::Ordering;

use multideg::groebner::buchberger;
use multideg::poly::{divide, divides, exp_add, Exp, ModuleElement, MonomialOrder, Polynomial, TieBreak};
use multideg::weyl::WeylRing;
use multideg::{Field, Rational};
use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

/// Rationals straddling the machine-word boundary.
fn rational() -> impl Strategy<Value = Rational> {
    prop_oneof![
        (-50i64..50, 1i64..20).prop_map(|(n, d)| Rational::new(n, d)),
        (any::<i64>(), 1i64..i64::MAX).prop_map(|(n, d)| Rational::new(n, d)),
        (any::<i64>(), any::<i64>(), 1u32..4).prop_map(|(a, b, k)| {
            let n = BigInt::from(a) * BigInt::from(b).pow(k);
            Rational::from_big(BigRational::new(n, BigInt::from(b.unsigned_abs() | 1)))
        }),
    ]
}

fn exponent(nv: usize) -> impl Strategy<Value = Exp> {
    prop::collection::vec(0u32..4, nv).prop_map(|v| v.into_iter().collect())
}

fn polynomial(nv: usize, terms: usize) -> impl Strategy<Value = Polynomial<Rational>> {
    prop::collection::vec((exponent(nv), -4i64..=4), 1..=terms)
        .prop_map(move |ts| Polynomial::from_terms(nv, ts.into_iter().map(|(e, c)| (e, Rational::from_integer(c)))))
}

fn order(nv: usize) -> impl Strategy<Value = MonomialOrder> {
    prop_oneof![
        Just(MonomialOrder::degrevlex(nv)),
        Just(MonomialOrder::lex(nv)),
        (prop::collection::vec(0i64..4, nv), prop::bool::ANY).prop_map(move |(mut w, lex)| {
            w[0] += 1;
            MonomialOrder::new(nv, vec![w], if lex { TieBreak::Lex } else { TieBreak::DegRevLex }).unwrap()
        }),
    ]
}

proptest! {
    #[test]
    fn rational_arithmetic_matches_bigrational(a in rational(), b in rational(), c in rational()) {
        let big = |q: &Rational| q.to_big();
        prop_assert_eq!(big(&a.add(&b)), big(&a) + big(&b));
        prop_assert_eq!(big(&a.sub(&b)), big(&a) - big(&b));
        prop_assert_eq!(big(&a.mul(&b)), big(&a) * big(&b));
        if !b.is_zero() {
            prop_assert_eq!(big(&a.div(&b).unwrap()), big(&a) / big(&b));
        } else {
            prop_assert!(a.div(&b).is_err());
        }
        prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        prop_assert_eq!(a.add(&a.neg()), Rational::zero());
        prop_assert_eq!(Rational::from_big(big(&a)), a.clone());
        prop_assert_eq!(a.to_string().parse::<Rational>().unwrap(), a);
    }

    #[test]
    fn cross_multipliers_balance(a in rational(), b in rational()) {
        prop_assume!(!a.is_zero() && !b.is_zero());
        let (u, v) = Rational::cross_multipliers(&a, &b);
        prop_assert!(!u.is_zero());
        prop_assert_eq!(u.mul(&a), v.mul(&b));
    }

    #[test]
    fn orders_are_total_and_multiplicative(ord in order(3), a in exponent(3), b in exponent(3), c in exponent(3)) {
        let ab = ord.cmp_exp(&a, &b);
        prop_assert_eq!(ab, ord.cmp_exp(&b, &a).reverse());
        prop_assert_eq!(ab == Ordering::Equal, a == b);
        prop_assert_eq!(ord.cmp_exp(&exp_add(&a, &c), &exp_add(&b, &c)), ab);
        prop_assert_ne!(ord.cmp_exp(&exp_add(&a, &[1, 0, 0]), &a), Ordering::Less);
    }

    #[test]
    fn division_reconstructs(ord in order(3), p in polynomial(3, 6), ds in prop::collection::vec(polynomial(3, 3), 1..4)) {
        let ds: Vec<_> = ds.into_iter().filter(|d| !d.is_zero()).map(ModuleElement::from_poly).collect();
        prop_assume!(!ds.is_empty());
        let p = ModuleElement::from_poly(p);
        let div = divide(&p, &ds, &ord).unwrap();
        let mut back = div.remainder.clone();
        for (q, d) in div.quotients.iter().zip(&ds) {
            back = back.add(&d.scale_poly(q).unwrap()).unwrap();
        }
        prop_assert_eq!(back, p);
        let leads: Vec<Exp> = ds.iter().map(|d| d.lead(&ord).unwrap().0).collect();
        for (e, _) in div.remainder.comp(0).terms() {
            prop_assert!(!leads.iter().any(|l| divides(l, e)));
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn groebner_bases_agree_across_orders(gens in prop::collection::vec(polynomial(3, 3), 1..4)) {
        let gens: Vec<_> = gens.into_iter().filter(|g| !g.is_zero()).map(ModuleElement::from_poly).collect();
        prop_assume!(!gens.is_empty());
        let a = buchberger(&gens, &MonomialOrder::degrevlex(3)).unwrap();
        let b = buchberger(&gens, &MonomialOrder::lex(3)).unwrap();
        prop_assert!(a.is_groebner() && b.is_groebner());
        for g in &gens {
            prop_assert!(a.contains(g) && b.contains(g));
        }
        for g in &a.elements {
            prop_assert!(b.contains(g));
        }
        for g in &b.elements {
            prop_assert!(a.contains(g));
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn operators_survive_print_and_parse(p in polynomial(6, 5), coeffs in prop::collection::vec(rational(), 5)) {
        let ring = WeylRing::plain(2, 1);
        let scaled = Polynomial::from_terms(6, p.terms().zip(&coeffs).map(|((e, c), k)| (e.clone(), c.mul(k))));
        let text = ring.format(&scaled);
        let back = ring.parse(&text).unwrap().into_poly();
        prop_assert_eq!(&back, &scaled, "{}", text);
        prop_assert_eq!(ring.format(&back), text);
    }
}
