use std::sync::{Arc, OnceLock};

use braided_twist::catalog::{self, Params};
use braided_twist::freealg::{Element, Tensor, Word};
use braided_twist::hopf::suite::words_upto;
use braided_twist::hopf::{self, HopfAlgebra, HopfStructure};
use braided_twist::scalars::{GaussRational, Monomial, Ring, Scalar};
use braided_twist::twist::{twist, TwistedAlgebra};
use num_rational::Rational64;
use proptest::prelude::*;

fn ring() -> Ring {
    Ring::new(["u", "v"]).unwrap()
}

fn scalar() -> impl Strategy<Value = Scalar> {
    let term = (-3i32..=3, -4i32..=4, -2i32..=2, -5i64..=5, -5i64..=5, 1i64..=4);
    prop::collection::vec(term, 0..4).prop_map(|ts| {
        Scalar::from_terms(
            2,
            ts.into_iter().map(|(q, u, v, re, im, den)| {
                let m = Monomial::q_pow(2, q).mul(&Monomial::phase(2, 0, u)).mul(&Monomial::phase(2, 1, v));
                (m, GaussRational::new(Rational64::new(re, den), Rational64::from_integer(im)))
            }),
        )
    })
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 128, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn scalar_ring_laws(a in scalar(), b in scalar(), c in scalar()) {
        prop_assert_eq!(a.add(&b), b.add(&a));
        prop_assert_eq!(a.mul(&b), b.mul(&a));
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
        prop_assert!(a.sub(&a).is_zero());
        prop_assert_eq!(a.star().star(), a.clone());
        prop_assert_eq!(a.mul(&b).star(), a.star().mul(&b.star()));
    }

    #[test]
    fn literals_round_trip(a in scalar()) {
        let r = ring();
        let text = r.format(&a);
        prop_assert_eq!(r.parse(&text).map_err(|e| format!("{text}: {e}")).unwrap(), a);
    }

    #[test]
    fn phase_substitution_is_a_ring_map(a in scalar(), b in scalar(), k in -3i32..=3) {
        // u ↦ v^k: the image of a product is the product of the images.
        let images = [Some(Monomial::phase(2, 1, k)), Some(Monomial::phase(2, 1, 1))];
        let sub = |s: &Scalar| s.substitute_phases(&images, 2, false).unwrap();
        prop_assert_eq!(sub(&a.mul(&b)), sub(&a).mul(&sub(&b)));
        prop_assert_eq!(sub(&a.add(&b)), sub(&a).add(&sub(&b)));
    }
}

struct Fixture {
    root: Arc<HopfAlgebra>,
    tw: TwistedAlgebra,
    words: Vec<Word>,
}

fn suq2() -> &'static Fixture {
    static F: OnceLock<Fixture> = OnceLock::new();
    F.get_or_init(|| {
        let e = catalog::build("suq2", &Params::default()).unwrap();
        let tw = twist(e.hopf.clone(), "u").unwrap();
        let words = words_upto(&tw, 2).unwrap();
        Fixture { root: e.hopf.clone(), tw, words }
    })
}

/// Small random combinations of basis words with coefficients ±1, ±q, ±u.
fn element() -> impl Strategy<Value = Element> {
    let n = suq2().words.len();
    prop::collection::vec((0..n, -2i32..=2, -1i32..=1, prop::bool::ANY), 1..3).prop_map(|ts| {
        let f = suq2();
        let ar = f.tw.arity();
        Element::from_terms(ts.into_iter().map(|(i, u, q, neg)| {
            let c = Scalar::q_pow(ar, q).mul_phase(ar - 1, u);
            (f.words[i].clone(), if neg { c.neg() } else { c })
        }))
    })
}

fn mul(h: &dyn HopfStructure, x: &Element, y: &Element) -> Element {
    hopf::multiply(h, x, y).unwrap()
}

fn counit_unit(h: &dyn HopfStructure, x: &Element) -> Element {
    h.one().scale(&hopf::counit(h, x))
}

fn braided_delta_product(h: &dyn HopfStructure, x: &Element, y: &Element) -> Tensor {
    let dx = hopf::coproduct(h, x).unwrap();
    let dy = hopf::coproduct(h, y).unwrap();
    hopf::braided_product(h, &dx, &dy).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 48, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn twisted_product_is_associative(x in element(), y in element(), z in element()) {
        let t = &suq2().tw;
        prop_assert_eq!(mul(t, &mul(t, &x, &y), &z), mul(t, &x, &mul(t, &y, &z)));
    }

    #[test]
    fn twisted_coproduct_is_braided_multiplicative(x in element(), y in element()) {
        let t = &suq2().tw;
        let lhs = hopf::coproduct(t, &mul(t, &x, &y)).unwrap();
        prop_assert_eq!(lhs, braided_delta_product(t, &x, &y));
    }

    #[test]
    fn twisted_antipode_axiom(x in element()) {
        let t = &suq2().tw;
        let dx = hopf::coproduct(t, &x).unwrap();
        let left = hopf::mul_legs(t, &hopf::antipode_leg(t, &dx, 0).unwrap(), 0).unwrap().to_element().unwrap();
        let right = hopf::mul_legs(t, &hopf::antipode_leg(t, &dx, 1).unwrap(), 0).unwrap().to_element().unwrap();
        prop_assert_eq!(&left, &counit_unit(t, &x));
        prop_assert_eq!(&right, &counit_unit(t, &x));
    }

    #[test]
    fn twisted_star_is_antimultiplicative(x in element(), y in element()) {
        let t = &suq2().tw;
        let st = |e: &Element| hopf::star(t, e).unwrap();
        prop_assert_eq!(st(&mul(t, &x, &y)), mul(t, &st(&y), &st(&x)));
    }

    #[test]
    fn untwisted_coproduct_is_multiplicative(x in element(), y in element()) {
        // Phases in the coefficients are inert for the root algebra.
        let r: &dyn HopfStructure = suq2().root.as_ref();
        let (x, y) = (root_lift(&x), root_lift(&y));
        let lhs = hopf::coproduct(r, &mul(r, &x, &y)).unwrap();
        let dx = hopf::coproduct(r, &x).unwrap();
        let dy = hopf::coproduct(r, &y).unwrap();
        prop_assert_eq!(lhs, hopf::braided_product(r, &dx, &dy).unwrap());
    }
}

/// Drops the phase part of each coefficient so the element lives over the root ring.
fn root_lift(e: &Element) -> Element {
    let ar = suq2().root.arity();
    e.map_coeffs(|c| {
        Scalar::from_terms(ar, c.terms().iter().map(|(m, g)| (Monomial::q_pow(ar, m.q), *g)))
    })
}
