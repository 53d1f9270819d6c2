use std::sync::Arc;

use braided_twist::catalog::{self, Params};
use braided_twist::freealg::{Element, Tensor, Word};
use braided_twist::hopf::suite::words_upto;
use braided_twist::hopf::{self, HopfStructure};
use braided_twist::twist::suite::schauenburg_rhs;
use braided_twist::twist::{twist, SchauenburgEval};

/// SU_q(n) at n = 2 against the hand-written SU_q(2) under
/// u11 = a, u12 = -q b*, u21 = b, u22 = a*. Words map through the untwisted
/// product, since a twist keeps the underlying vector space.
struct Dictionary<'a> {
    to: &'a dyn HopfStructure,
    images: Vec<Element>,
}

impl Dictionary<'_> {
    fn word(&self, w: &Word) -> Element {
        let root = self.to.root();
        let mut out = root.one();
        for g in w.letters() {
            out = hopf::multiply(root, &out, &self.images[g.index()]).unwrap();
        }
        out.lift(self.to.arity())
    }

    fn element(&self, e: &Element) -> Element {
        let mut out = Element::zero();
        for (w, c) in e.terms() {
            out.add_scaled(&self.word(w), c);
        }
        out
    }

    fn tensor(&self, t: &Tensor) -> Tensor {
        let mut out = Tensor::zero(2);
        for (legs, c) in t.terms() {
            let pair = Tensor::product(&[self.word(&legs[0]), self.word(&legs[1])]);
            out.add_scaled(&pair, c);
        }
        out
    }
}

fn dictionary_commutes(from: &dyn HopfStructure, to: &dyn HopfStructure) {
    let tp = to.presentation();
    let img = |name: &str, c: braided_twist::scalars::Scalar| Element::word(tp.word(&[name]).unwrap(), c);
    let r = to.root().ring();
    let images: Vec<Element> = ["u11", "u12", "u21", "u22"]
        .iter()
        .map(|n| {
            let g = from.presentation().gen(n).unwrap();
            assert_eq!(g.index(), ["u11", "u12", "u21", "u22"].iter().position(|m| m == n).unwrap());
            match *n {
                "u11" => img("a", r.one()),
                "u12" => img("b*", r.q_pow(1).neg()),
                "u21" => img("b", r.one()),
                _ => img("a*", r.one()),
            }
        })
        .collect();
    let d = Dictionary { to, images };
    let words = words_upto(from, 2).unwrap();
    for x in &words {
        let fx = d.word(x);
        assert_eq!(d.tensor(&from.coproduct_word(x).unwrap()), hopf::coproduct(to, &fx).unwrap(), "Δ on {x}");
        assert_eq!(d.element(&from.antipode_word(x).unwrap()), hopf::antipode(to, &fx).unwrap(), "S on {x}");
        assert_eq!(from.counit_word(x), hopf::counit(to, &fx), "ε on {x}");
        assert_eq!(d.element(&from.star_word(x).unwrap()), hopf::star(to, &fx).unwrap(), "∗ on {x}");
        for y in &words {
            let fy = d.word(y);
            let lhs = d.element(&from.mul_words(x, y).unwrap());
            assert_eq!(lhs, hopf::multiply(to, &fx, &fy).unwrap(), "product on ({x}, {y})");
        }
    }
    for x in words.iter().filter(|w| w.len() == 1) {
        for y in words.iter().filter(|w| w.len() == 1) {
            let (fx, fy) = (d.word(x), d.word(y));
            let (wx, wy) = (fx.terms().next().unwrap().0, fy.terms().next().unwrap().0);
            assert_eq!(from.braiding_phase(x, y), to.braiding_phase(wx, wy), "ψ on ({x}, {y})");
        }
    }
}

fn suqn2_and_suq2() -> (catalog::CatalogEntry, catalog::CatalogEntry) {
    let n2 = catalog::build("suqn", &Params { n: Some(2), p: Some(vec![1, -1]), lambda: None }).unwrap();
    let s2 = catalog::build("suq2", &Params::default()).unwrap();
    (n2, s2)
}

#[test]
fn suqn_at_two_matches_suq2() {
    let (n2, s2) = suqn2_and_suq2();
    dictionary_commutes(n2.hopf.as_ref(), s2.hopf.as_ref());
}

#[test]
fn suqn_at_two_matches_suq2_after_twisting() {
    let (n2, s2) = suqn2_and_suq2();
    let a = twist(n2.hopf.clone(), "u").unwrap();
    let b = twist(s2.hopf.clone(), "u").unwrap();
    dictionary_commutes(&a, &b);
}

#[test]
fn fused_schauenburg_matches_staged() {
    for name in ["suq2", "clambda", "double-torus"] {
        let e = catalog::build(name, &Params::default()).unwrap();
        let t = twist(e.hopf.clone(), "u").unwrap();
        let eval = SchauenburgEval::new(&t);
        let words = words_upto(&t, 2).unwrap();
        for x in &words {
            for y in &words {
                assert_eq!(eval.rhs(x, y).unwrap(), schauenburg_rhs(&t, x, y).unwrap(), "{name}: ({x}, {y})");
            }
        }
    }
}

#[test]
fn second_twist_phases_add() {
    // Twisting twice along the same character by u then v gives phases u^k v^k.
    let e = catalog::build("suq2", &Params::default()).unwrap();
    let once = Arc::new(twist(e.hopf.clone(), "u").unwrap());
    let twice = twist(once.clone(), "v").unwrap();
    let p = twice.presentation();
    let (g, gs) = (p.word(&["b"]).unwrap(), p.word(&["b*"]).unwrap());
    let r = twice.ring();
    let uv = |k: i32| {
        let (u, v) = (r.index_of("u").unwrap(), r.index_of("v").unwrap());
        r.one().mul_phase(u, k).mul_phase(v, k)
    };
    assert_eq!(twice.braiding_phase(&g, &g), uv(8));
    assert_eq!(twice.braiding_phase(&g, &gs), uv(-8));
    assert_eq!(twice.twist_phase(3), uv(3));
}

#[test]
fn twisting_needs_a_character() {
    let e = catalog::build("suq2", &Params::default()).unwrap();
    let bare = e.hopf.with_character(None).unwrap();
    let err = twist(Arc::new(bare), "u").unwrap_err();
    assert!(err.to_string().contains("no character"), "{err}");
}

/// Every pair at maxLen 2 on SU_q(3); takes about half an hour on one core.
#[test]
#[ignore]
fn full_suqn_schauenburg_sweep() {
    let e = catalog::build("suqn", &Params { n: Some(3), p: Some(vec![1, 0, -1]), lambda: None }).unwrap();
    let t = twist(e.hopf.clone(), "u").unwrap();
    let rep = braided_twist::twist::suite::check_schauenburg(&t, 2).unwrap();
    assert!(rep.passed(), "{}", rep.to_human());
    assert_eq!(rep.checks[0].items, 3025);
}
