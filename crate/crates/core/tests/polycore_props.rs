mod support;

use std::cmp::Ordering;
use std::sync::Arc;

use proptest::prelude::*;
use symdet::gbengine::normal_form;
use symdet::polycore::{
    leading_term, parse_poly, print_poly, Field, MatrixKind, Monomial, MonomialOrder, OrderKind, PolyRing, Polynomial,
    PrimeField, Rationals, VariableTable,
};

use support::{fp, sym_ring};

const NVARS: usize = 3;

type Terms = Vec<(Vec<u32>, i64)>;

fn terms(max_terms: usize, max_exp: u32) -> impl Strategy<Value = Terms> {
    prop::collection::vec((prop::collection::vec(0..=max_exp, NVARS), -4i64..=4), 0..=max_terms)
}

fn terms6() -> impl Strategy<Value = Terms> {
    prop::collection::vec((prop::collection::vec(0u32..=2, 6), -4i64..=4), 0..=4)
}

fn build<F: Field>(ring: &Arc<PolyRing<F>>, t: &Terms) -> Polynomial<F> {
    let field = ring.field();
    ring.from_terms(t.iter().map(|(e, c)| (Monomial::from_exponents(e.clone()), field.from_i64(*c))))
}

fn any_order() -> impl Strategy<Value = MonomialOrder> {
    let perm = Just((0..6).collect::<Vec<usize>>()).prop_shuffle();
    (0..4usize, perm, 1..6usize).prop_map(|(k, perm, block)| {
        let kind = match k {
            0 => OrderKind::Lex,
            1 => OrderKind::GrevLex,
            _ => OrderKind::Elimination { block },
        };
        MonomialOrder::new(kind, perm).unwrap()
    })
}

fn mono6() -> impl Strategy<Value = Monomial> {
    prop::collection::vec(0u32..4, 6).prop_map(Monomial::from_exponents)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn ring_axioms(a in terms(4, 3), b in terms(4, 3), c in terms(4, 3), p in prop::sample::select(vec![2u64, 3, 5, 7])) {
        let ring = sym_ring(fp(p), 2);
        let (f, g, h) = (build(&ring, &a), build(&ring, &b), build(&ring, &c));
        prop_assert_eq!(f.add(&g), g.add(&f));
        prop_assert_eq!(f.add(&g).add(&h), f.add(&g.add(&h)));
        prop_assert_eq!(f.mul(&g), g.mul(&f));
        prop_assert_eq!(f.mul(&g).mul(&h), f.mul(&g.mul(&h)));
        prop_assert_eq!(f.mul(&g.add(&h)), f.mul(&g).add(&f.mul(&h)));
        prop_assert!(f.sub(&f).is_zero());
        prop_assert_eq!(f.mul(&ring.one()), f.clone());
        prop_assert_eq!(f.add(&ring.zero()), f);
    }

    #[test]
    fn rational_ring_axioms(a in terms(3, 2), b in terms(3, 2), c in terms(3, 2)) {
        let ring = sym_ring(Rationals, 2);
        let (f, g, h) = (build(&ring, &a), build(&ring, &b), build(&ring, &c));
        prop_assert_eq!(f.mul(&g.sub(&h)), f.mul(&g).sub(&f.mul(&h)));
        prop_assert_eq!(f.add(&g).add(&h), f.add(&g.add(&h)));
    }

    #[test]
    fn order_axioms(ord in any_order(), a in mono6(), b in mono6(), c in mono6()) {
        let one = Monomial::one(6);
        prop_assert_ne!(ord.cmp(&one, &a), Ordering::Greater);
        prop_assert_eq!(ord.cmp(&a, &b), ord.cmp(&b, &a).reverse());
        prop_assert_eq!(ord.cmp(&a, &b) == Ordering::Equal, a == b);
        prop_assert_eq!(ord.cmp(&a, &b), ord.cmp(&a.mul(&c), &b.mul(&c)));
        if ord.cmp(&a, &b) != Ordering::Greater && ord.cmp(&b, &c) != Ordering::Greater {
            prop_assert_ne!(ord.cmp(&a, &c), Ordering::Greater);
        }
    }

    #[test]
    fn freshmans_dream(a in terms(5, 3), p in prop::sample::select(vec![2u64, 3, 5]), e in 1u32..=2) {
        let ring = sym_ring(fp(p), 2);
        let f = build(&ring, &a);
        let q = p.pow(e);
        prop_assert_eq!(f.pow(q), f.pow_by_squaring(q));
        prop_assert_eq!(f.pow(q + 1), f.pow_by_squaring(q + 1));
    }

    #[test]
    fn leading_term_is_multiplicative(a in terms6(), b in terms6(), ord in any_order()) {
        let ring = PolyRing::new(fp(5), VariableTable::new(MatrixKind::Symmetric, 3).unwrap(), ord.clone()).unwrap();
        let (f, g) = (build(&ring, &a), build(&ring, &b));
        prop_assume!(!f.is_zero() && !g.is_zero());
        let (mf, cf) = leading_term(&f, &ord).unwrap();
        let (mg, cg) = leading_term(&g, &ord).unwrap();
        let (mfg, cfg) = leading_term(&f.mul(&g), &ord).unwrap();
        prop_assert_eq!(mfg, mf.mul(&mg));
        prop_assert_eq!(cfg, ring.field().mul(&cf, &cg));
    }

    #[test]
    fn parse_print_round_trip(a in terms(5, 3), p in prop::sample::select(vec![2u64, 3, 7])) {
        let ring = sym_ring(fp(p), 2);
        let f = build(&ring, &a);
        prop_assert_eq!(parse_poly(&print_poly(&f), &ring).unwrap(), f.clone());
        let q = sym_ring(Rationals, 2);
        let g = build(&q, &a);
        prop_assert_eq!(parse_poly(&print_poly(&g), &q).unwrap(), g);
    }

    #[test]
    fn normal_form_is_idempotent(a in terms(4, 3), b in terms(3, 2), c in terms(3, 2)) {
        let ring = sym_ring(fp(3), 2);
        let basis: Vec<_> = [build(&ring, &b), build(&ring, &c)].into_iter().filter(|g| !g.is_zero()).collect();
        prop_assume!(!basis.is_empty());
        let r = normal_form(&build(&ring, &a), &basis).unwrap().remainder;
        prop_assert_eq!(normal_form(&r, &basis).unwrap().remainder, r);
    }
}

#[test]
fn prime_field_elements_round_trip() {
    let f = PrimeField::new(7).unwrap();
    for v in 0..7 {
        let e = f.from_i64(v);
        let (neg, mag) = f.format_elem(&e);
        let back = f.parse_elem(&mag, None).unwrap();
        assert_eq!(if neg { f.neg(&back) } else { back }, e);
    }
}
