//! Braided Hopf algebra axioms, Schauenburg's identity, twist composition and
//! the untwisted limit.

use std::sync::Arc;

use smallvec::smallvec;

use super::{twist, Substitution, TwistedAlgebra};
use crate::error::Result;
use crate::freealg::{Element, Tensor, Word};
use crate::hopf::suite::{
    associativity_check, coalgebra_checks, fmt2, fmt3, multiplicativity_checks, pairs, star_checks, triples,
    words_upto, Pair,
};
use crate::hopf::*;
use crate::report::Report;
use crate::scalars::{Monomial, Ring};

fn t2<H: HopfStructure + ?Sized>(h: &H, x: &Word, y: &Word) -> Tensor {
    words_tensor(h, &[x, y])
}

fn t3<H: HopfStructure + ?Sized>(h: &H, x: &Word, y: &Word, z: &Word) -> Tensor {
    words_tensor(h, &[x, y, z])
}

/// Ψ with the first `split` legs of a rank-3 block treated as one object.
fn braid_grouped<H: HopfStructure + ?Sized>(h: &H, t: &Tensor, split: usize) -> Result<Tensor> {
    t.map_block(0, 3, |ls| {
        let (a, b) = ls.split_at(split);
        let mut legs: crate::freealg::Legs = b.iter().cloned().collect();
        legs.extend(a.iter().cloned());
        Ok(Tensor::pure(legs, h.braiding_phase(&block_word(a), &block_word(b))))
    })
}

/// The braided Hopf algebra suite.
pub fn check_braided_axioms<H: HopfStructure + ?Sized>(h: &H, max_len: usize) -> Result<Report> {
    let mut rep = Report::new("braided", h.label(), max_len);
    let words = words_upto(h, max_len)?;
    let ps = pairs(&words);
    let ts = triples(&words);
    let g = h.grading().expect("twisted algebras are graded");
    let fw = |w: &Word| h.presentation().format_word(w);

    rep.run("cocycle", &ts, |(x, y, z)| {
        let l = g.cocycle_exponent(x, &y.concat(z)) + g.cocycle_exponent(y, z);
        let r = g.cocycle_exponent(x, y) + g.cocycle_exponent(&x.concat(y), z);
        Ok((l != r).then(|| fmt3(h, x, y, z)))
    })?;
    associativity_check(h, &mut rep, &ts)?;
    coalgebra_checks(h, &mut rep, &words)?;
    multiplicativity_checks(h, &mut rep, &ps)?;

    rep.run("coproduct.generated", &words, |w| {
        let mut acc = Tensor::pure(smallvec![Word::empty(), Word::empty()], h.ring().one());
        for &l in w.letters() {
            acc = braided_product(h, &acc, &h.coproduct_word(&Word::gen(l))?)?;
        }
        let acc = acc.scale(&h.twist_phase(-g.word_cocycle_exponent(w)));
        Ok((acc != h.coproduct_word(w)?).then(|| fw(w)))
    })?;

    rep.run("naturality.i1", &ts, |(x, y, z)| {
        let t = t3(h, x, y, z);
        let l = braid(h, &mul_legs(h, &t, 1)?, 0)?;
        let r = mul_legs(h, &braid(h, &braid(h, &t, 0)?, 1)?, 0)?;
        Ok((l != r).then(|| fmt3(h, x, y, z)))
    })?;
    rep.run("naturality.i2", &ts, |(x, y, z)| {
        let t = t3(h, x, y, z);
        let l = braid(h, &mul_legs(h, &t, 0)?, 0)?;
        let r = mul_legs(h, &braid(h, &braid(h, &t, 1)?, 0)?, 1)?;
        Ok((l != r).then(|| fmt3(h, x, y, z)))
    })?;
    rep.run("naturality.i3", &ps, |(x, y)| {
        let t = t2(h, x, y);
        let l = coproduct_leg(h, &braid(h, &t, 0)?, 1)?;
        let r = braid(h, &braid(h, &coproduct_leg(h, &t, 0)?, 1)?, 0)?;
        Ok((l != r).then(|| fmt2(h, x, y)))
    })?;
    rep.run("naturality.i4", &ps, |(x, y)| {
        let t = t2(h, x, y);
        let l = coproduct_leg(h, &braid(h, &t, 0)?, 0)?;
        let r = braid(h, &braid(h, &coproduct_leg(h, &t, 1)?, 0)?, 1)?;
        Ok((l != r).then(|| fmt2(h, x, y)))
    })?;
    rep.run("naturality.counit", &ps, |(x, y)| {
        let t = t2(h, x, y);
        let l = counit_leg(h, &braid(h, &t, 0)?, 1)?;
        let r = counit_leg(h, &t, 0)?;
        Ok((l != r).then(|| fmt2(h, x, y)))
    })?;
    rep.run("naturality.antipode", &ps, |(x, y)| {
        let t = t2(h, x, y);
        let l = braid(h, &antipode_leg(h, &t, 0)?, 0)?;
        let r = antipode_leg(h, &braid(h, &t, 0)?, 1)?;
        Ok((l != r).then(|| fmt2(h, x, y)))
    })?;
    rep.run("antipode.degree", &words, |w| {
        let s = h.antipode_word(w)?;
        let d = g.delta(w);
        let bad = s.terms().any(|(x, _)| g.delta(x) != d);
        Ok(bad.then(|| fw(w)))
    })?;
    rep.run("yang-baxter", &ts, |(x, y, z)| {
        let t = t3(h, x, y, z);
        let l = braid(h, &braid(h, &braid(h, &t, 1)?, 0)?, 1)?;
        let r = braid(h, &braid(h, &braid(h, &t, 0)?, 1)?, 0)?;
        Ok((l != r).then(|| fmt3(h, x, y, z)))
    })?;
    rep.run("braiding.invertible", &ps, |(x, y)| {
        let t = t2(h, x, y);
        let back = braid_inverse(h, &braid(h, &t, 0)?, 0)?;
        let fwd = braid(h, &braid_inverse(h, &t, 0)?, 0)?;
        Ok((back != t || fwd != t).then(|| fmt2(h, x, y)))
    })?;
    rep.run("hexagon", &ts, |(x, y, z)| {
        let t = t3(h, x, y, z);
        let l1 = braid_grouped(h, &t, 2)?;
        let r1 = braid(h, &braid(h, &t, 1)?, 0)?;
        let l2 = braid_grouped(h, &t, 1)?;
        let r2 = braid(h, &braid(h, &t, 0)?, 1)?;
        Ok((l1 != r1 || l2 != r2).then(|| fmt3(h, x, y, z)))
    })?;
    star_checks(h, &mut rep, &words, &ps)?;
    if h.has_star() {
        rep.run("star.tensor-involution", &ps, |(x, y)| {
            let t = t2(h, x, y);
            Ok((tensor_star(h, &tensor_star(h, &t)?)? != t).then(|| fmt2(h, x, y)))
        })?;
    }
    Ok(rep)
}

/// Ψ = (m∗⊗m∗)(S⊗(Δ∘m∗)⊗S)(Δ⊗Δ) on all word pairs.
pub fn check_schauenburg<H: HopfStructure + ?Sized>(h: &H, max_len: usize) -> Result<Report> {
    check_schauenburg_within(h, max_len, None)
}

/// As [`check_schauenburg`], keeping only pairs with `len(x) + len(y) ≤ total`.
pub fn check_schauenburg_within<H: HopfStructure + ?Sized>(
    h: &H,
    max_len: usize,
    total: Option<usize>,
) -> Result<Report> {
    let mut rep = Report::new("schauenburg", h.label(), max_len);
    let words = words_upto(h, max_len)?;
    let mut ps = pairs(&words);
    if let Some(t) = total.filter(|&t| t < 2 * max_len) {
        ps.retain(|(x, y)| x.len() + y.len() <= t);
        rep.notes.push(format!("pairs restricted to len(x) + len(y) ≤ {t}; the full sweep is not covered"));
    }
    let eval = super::SchauenburgEval::new(h);
    rep.run("schauenburg.identity", &ps, |(x, y)| {
        let l = braid(h, &t2(h, x, y), 0)?;
        Ok((l != eval.rhs(x, y)?).then(|| fmt2(h, x, y)))
    })?;
    Ok(rep)
}

/// The same right-hand side as a composition of whole-tensor leg operations.
pub fn schauenburg_rhs<H: HopfStructure + ?Sized>(h: &H, x: &Word, y: &Word) -> Result<Tensor> {
    let t = h.coproduct_word(x)?.outer(&h.coproduct_word(y)?);
    let t = antipode_leg(h, &t, 0)?;
    let t = mul_legs(h, &t, 1)?;
    let t = coproduct_leg(h, &t, 1)?;
    let t = antipode_leg(h, &t, 3)?;
    let t = mul_legs(h, &t, 0)?;
    mul_legs(h, &t, 1)
}

/// Structure maps of two algebras on the same basis agree after substitution.
fn compare_maps<A, B>(
    rep: &mut Report,
    prefix: &str,
    a: &A,
    b: &B,
    sub: &Substitution,
    words: &[Word],
    ps: &[Pair],
) -> Result<()>
where
    A: HopfStructure + ?Sized,
    B: HopfStructure + ?Sized,
{
    let lift = |e: &Element| e.lift(b.arity());
    rep.run(&format!("{prefix}.product"), ps, |(x, y)| {
        let l = sub.element(&a.mul_words(x, y)?)?;
        Ok((l != lift(&b.mul_words(x, y)?)).then(|| fmt2(a, x, y)))
    })?;
    rep.run(&format!("{prefix}.coproduct"), words, |w| {
        let l = sub.tensor(&a.coproduct_word(w)?)?;
        Ok((l != b.coproduct_word(w)?.lift(b.arity())).then(|| a.presentation().format_word(w)))
    })?;
    rep.run(&format!("{prefix}.counit"), words, |w| {
        let l = sub.scalar(&a.counit_word(w))?;
        Ok((l != b.counit_word(w)).then(|| a.presentation().format_word(w)))
    })?;
    rep.run(&format!("{prefix}.antipode"), words, |w| {
        let l = sub.element(&a.antipode_word(w)?)?;
        Ok((l != lift(&b.antipode_word(w)?)).then(|| a.presentation().format_word(w)))
    })?;
    rep.run(&format!("{prefix}.braiding"), ps, |(x, y)| {
        let l = sub.scalar(&a.braiding_phase(x, y))?;
        Ok((l != b.braiding_phase(x, y)).then(|| fmt2(a, x, y)))
    })?;
    if a.has_star() {
        rep.run(&format!("{prefix}.star"), words, |w| {
            let l = sub.element(&a.star_word(w)?)?;
            Ok((l != lift(&b.star_word(w)?)).then(|| a.presentation().format_word(w)))
        })?;
    }
    Ok(())
}

fn fresh(ring: &Ring, base: &str) -> String {
    let mut name = base.to_string();
    let mut k = 1;
    while ring.index_of(&name).is_some() {
        name = format!("{base}{k}");
        k += 1;
    }
    name
}

/// Twisting by `u` then `v` equals the single twist by `w = uv`, and
/// `v = u⁻¹` gives back the untwisted algebra.
pub fn check_twist_composition(base: Arc<HopfAlgebra>, max_len: usize) -> Result<Report> {
    let mut rep = Report::new("composition", base.label(), max_len);
    let r = base.ring().clone();
    let (u, v, w) = (fresh(&r, "u"), fresh(&r, "v"), fresh(&r, "w"));
    let tu: Arc<TwistedAlgebra> = Arc::new(twist(base.clone(), &u)?);
    let tuv = twist(tu.clone(), &v)?;
    let tw = twist(base.clone(), &w)?;
    let words = words_upto(base.as_ref(), max_len)?;
    let ps = pairs(&words);

    let merge = Substitution::new(tw.ring(), tuv.ring(), &[(&w, vec![(&u, 1), (&v, 1)])])?;
    compare_maps(&mut rep, "composition", &tw, &tuv, &merge, &words, &ps)?;
    let undo = Substitution::new(tuv.ring(), tu.ring(), &[(&v, vec![(&u, -1)])])?;
    let base_lifted = Lifted { inner: base.as_ref(), ring: tu.ring().clone() };
    compare_maps(&mut rep, "untwist", &tuv, &base_lifted, &undo, &words, &ps)?;
    Ok(rep)
}

/// Every twist variable set to 1 recovers the root algebra's maps.
pub fn check_untwisted_limit<H: HopfStructure + ?Sized>(h: &H, max_len: usize) -> Result<Report> {
    let root = h.root();
    let mut rep = Report::new("untwisted", h.label(), max_len);
    let words = words_upto(h, max_len)?;
    let ps = pairs(&words);
    let sub = Substitution::specialize(h.ring(), root.ring());
    compare_maps(&mut rep, "limit", h, root, &sub, &words, &ps)?;
    Ok(rep)
}

impl Substitution {
    /// Keeps the variables of `to` (a prefix of `from`) and sends the rest to 1.
    pub fn specialize(from: &Ring, to: &Ring) -> Substitution {
        let images = (0..from.arity())
            .map(|j| {
                Some(if j < to.arity() { Monomial::phase(to.arity(), j, 1) } else { Monomial::one(to.arity()) })
            })
            .collect();
        Substitution { images, target: to.arity() }
    }
}

/// An algebra viewed over a larger ring, for comparisons.
struct Lifted<'a> {
    inner: &'a HopfAlgebra,
    ring: Ring,
}

impl HopfStructure for Lifted<'_> {
    fn label(&self) -> String {
        self.inner.label()
    }
    fn presentation(&self) -> &crate::freealg::Presentation {
        self.inner.presentation()
    }
    fn ring(&self) -> &Ring {
        &self.ring
    }
    fn mul_words(&self, a: &Word, b: &Word) -> Result<Element> {
        Ok(self.inner.mul_words(a, b)?.lift(self.ring.arity()))
    }
    fn coproduct_word(&self, w: &Word) -> Result<Tensor> {
        Ok(self.inner.coproduct_word(w)?.lift(self.ring.arity()))
    }
    fn counit_word(&self, w: &Word) -> crate::scalars::Scalar {
        self.inner.counit_word(w).lift(self.ring.arity())
    }
    fn antipode_word(&self, w: &Word) -> Result<Element> {
        Ok(self.inner.antipode_word(w)?.lift(self.ring.arity()))
    }
    fn braiding_phase(&self, _x: &Word, _y: &Word) -> crate::scalars::Scalar {
        self.ring.one()
    }
    fn has_star(&self) -> bool {
        self.inner.has_star()
    }
    fn star_word(&self, w: &Word) -> Result<Element> {
        Ok(self.inner.star_word(w)?.lift(self.ring.arity()))
    }
    fn twist_phase(&self, _exp: i64) -> crate::scalars::Scalar {
        self.ring.one()
    }
    fn root(&self) -> &HopfAlgebra {
        self.inner
    }
}
