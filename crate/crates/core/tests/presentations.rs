use proptest::prelude::*;

use qschur::fockrep::{apply_element, verify_pair, RepConfig, Status, TensorState};
use qschur::presentations::{
    delta_relation_catalog, iota_image, parse_element, r_corollary_catalog, r_expansion,
    r_expansion_raw, schur_relation_catalog, Element, Generator, RelationPair, Sign, Word,
};
use qschur::qarith::RatFunc;
use qschur::weightlat::{enumerate_compositions, Color, Composition};

fn shift_pair(n: usize, sign: Sign, rhs: Element, id: &str) -> RelationPair {
    let lhs = Element::monomial(RatFunc::one(), Word::new(vec![Generator::RShift(sign)]));
    RelationPair::new(id, lhs, rhs, n, n as u32, None)
        .with_sources(enumerate_compositions(n, n as u32))
}

#[test]
fn deduplicated_expansion_is_the_shift() {
    for n in [3, 4] {
        let cfg = RepConfig::auto(n, n as u32, n);
        for sign in [Sign::Minus, Sign::Plus] {
            let p = shift_pair(n, sign, r_expansion(n, sign), "dedup");
            assert!(verify_pair(&p, &cfg).unwrap().passed(), "n={n} {sign:?}");
        }
    }
}

#[test]
fn raw_double_sum_overcounts() {
    let n = 3;
    let raw = r_expansion_raw(n, Sign::Minus);
    // (3,0,0) has two zero positions, so its monomial appears twice.
    let w = Word::new(vec![
        Generator::divided_power(Sign::Plus, Color::new(1, 3), 3),
        Generator::Idem(Composition::new(vec![0, 3, 0]).unwrap()),
    ]);
    assert_eq!(raw.coeff(&w), Some(&RatFunc::from(2)));
    let cfg = RepConfig::auto(n, 3, n);
    let rep = verify_pair(&shift_pair(n, Sign::Minus, raw, "raw"), &cfg).unwrap();
    assert_eq!(rep.status, Status::Fail);
}

#[test]
fn raising_monomial_needs_reversed_color_order() {
    // For a = (0,1,2), i = 1: the order E_{-3}^{(2)} E_{-2} (colors i−1 … i+1)
    // superposes vectors, E_{-2} E_{-3}^{(2)} (colors i+1 … i−1) shifts them.
    let n = 3;
    let cfg = RepConfig::auto(n, 3, 4);
    let lam = Composition::new(vec![0, 1, 2]).unwrap();
    let c = |i| Color::new(i, n);
    let word = |first: Generator, second: Generator| {
        Element::monomial(
            RatFunc::one(),
            Word::new(vec![first, second, Generator::Idem(lam.clone())]),
        )
    };
    let e3 = Generator::divided_power(Sign::Minus, c(3), 2);
    let e2 = Generator::e(Sign::Minus, c(2));
    let shifted = parse_element("R 1_(0,1,2)", n, 3).unwrap();
    let v = TensorState::basis(&[2, 3, 6]);
    let target = apply_element(&shifted, &v, &cfg).unwrap();
    assert_eq!(target, TensorState::basis(&[3, 4, 7]));
    assert_eq!(apply_element(&word(e2.clone(), e3.clone()), &v, &cfg).unwrap(), target);
    assert_ne!(apply_element(&word(e3, e2), &v, &cfg).unwrap(), target);
}

#[test]
fn corruption_breaks_relations_with_vanishing_sides() {
    let n = 3;
    let cfg = RepConfig::auto(n, 3, 4);
    let cat = schur_relation_catalog(n, 3);
    // 1_λ 1_μ = 0 for λ ≠ μ: rescaling the zero side changes nothing.
    let p = cat.iter().find(|p| p.id.starts_with("rel1[") && p.rhs.is_zero()).unwrap();
    let rescaled = p.scale_rhs(&RatFunc::from(qschur::qarith::LaurentPoly::q_pow(1)));
    assert!(verify_pair(&rescaled, &cfg).unwrap().passed());
    let rep = verify_pair(&p.corrupted(), &cfg).unwrap();
    assert_eq!(rep.status, Status::Fail);
    assert!(rep.witness.is_some());
}

#[test]
fn catalog_sizes() {
    // Four families of λ ≠ (1^n) instances, four without weights, eight per color.
    assert_eq!(delta_relation_catalog(3).len(), 4 * 9 + 4 + 8 * 3);
    assert!(!schur_relation_catalog(3, 2).is_empty());
    assert!(r_corollary_catalog(3)
        .iter()
        .any(|p| p.id == "rcor.inverse[R R^-1]"));
}

#[test]
fn catalogs_round_trip_through_text() {
    for p in schur_relation_catalog(3, 3)
        .into_iter()
        .chain(delta_relation_catalog(3))
        .chain(r_corollary_catalog(3))
    {
        for e in [&p.lhs, &p.rhs] {
            let back = parse_element(&e.to_string(), 3, 3).unwrap();
            assert_eq!(&back, e, "{}", p.id);
        }
    }
}

fn generator(n: usize) -> impl Strategy<Value = Generator> {
    let lams = enumerate_compositions(n, n as u32);
    prop_oneof![
        (1..=n as i64, any::<bool>()).prop_map(move |(i, up)| {
            let s = if up { Sign::Plus } else { Sign::Minus };
            Generator::e(s, Color::new(i, n))
        }),
        (1..=n as i64, 2u32..=3).prop_map(move |(i, a)| {
            Generator::divided_power(Sign::Plus, Color::new(i, n), a)
        }),
        prop::sample::select(lams).prop_map(Generator::Idem),
        Just(Generator::EDeltaPlus),
        Just(Generator::EDeltaMinus),
    ]
}

fn word(n: usize) -> impl Strategy<Value = Word> {
    prop::collection::vec(generator(n), 0..4).prop_map(Word::new)
}

proptest! {
    #[test]
    fn iota_is_multiplicative(a in word(3), b in word(3)) {
        let whole = iota_image(&a.then(&b), 3, false).unwrap();
        let parts = &iota_image(&a, 3, false).unwrap() * &iota_image(&b, 3, false).unwrap();
        prop_assert_eq!(whole, parts);
    }

    #[test]
    fn words_round_trip_through_text(w in word(4)) {
        let e = Element::monomial(RatFunc::one(), w);
        prop_assert_eq!(parse_element(&e.to_string(), 4, 4).unwrap(), e);
    }
}
