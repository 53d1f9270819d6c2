//! The Hopf ∗-algebra axiom suite, on all normal words up to a length bound.

use smallvec::smallvec;

use super::*;
use crate::report::{Check, Report};

pub(crate) type Pair = (Word, Word);
pub(crate) type Triple = (Word, Word, Word);

pub(crate) fn pairs(words: &[Word]) -> Vec<Pair> {
    words.iter().flat_map(|x| words.iter().map(move |y| (x.clone(), y.clone()))).collect()
}

pub(crate) fn triples(words: &[Word]) -> Vec<Triple> {
    let mut out = Vec::with_capacity(words.len().pow(3));
    for x in words {
        for y in words {
            for z in words {
                out.push((x.clone(), y.clone(), z.clone()));
            }
        }
    }
    out
}

/// Words of length at most `max_len`, sorted in the term order.
pub fn words_upto<H: HopfStructure + ?Sized>(h: &H, max_len: usize) -> Result<Vec<Word>> {
    h.presentation().basis_words(max_len)
}

pub(crate) fn fmt2<H: HopfStructure + ?Sized>(h: &H, x: &Word, y: &Word) -> String {
    let p = h.presentation();
    format!("({}, {})", p.format_word(x), p.format_word(y))
}

pub(crate) fn fmt3<H: HopfStructure + ?Sized>(h: &H, x: &Word, y: &Word, z: &Word) -> String {
    let p = h.presentation();
    format!("({}, {}, {})", p.format_word(x), p.format_word(y), p.format_word(z))
}

fn el<H: HopfStructure + ?Sized>(h: &H, w: &Word) -> Element {
    Element::word(w.clone(), h.ring().one())
}

/// Coassociativity, counit and antipode axioms and the unit.
pub fn coalgebra_checks<H: HopfStructure + ?Sized>(h: &H, rep: &mut Report, words: &[Word]) -> Result<()> {
    let fw = |w: &Word| h.presentation().format_word(w);
    rep.run("coassociativity", words, |w| {
        let d = h.coproduct_word(w)?;
        let l = coproduct_leg(h, &d, 0)?;
        let r = coproduct_leg(h, &d, 1)?;
        Ok((l != r).then(|| fw(w)))
    })?;
    rep.run("counit.left", words, |w| {
        let d = h.coproduct_word(w)?;
        Ok((counit_leg(h, &d, 0)?.to_element()? != el(h, w)).then(|| fw(w)))
    })?;
    rep.run("counit.right", words, |w| {
        let d = h.coproduct_word(w)?;
        Ok((counit_leg(h, &d, 1)?.to_element()? != el(h, w)).then(|| fw(w)))
    })?;
    rep.run("antipode.left", words, |w| {
        let d = h.coproduct_word(w)?;
        let got = mul_legs(h, &antipode_leg(h, &d, 0)?, 0)?.to_element()?;
        Ok((got != h.one().scale(&h.counit_word(w))).then(|| fw(w)))
    })?;
    rep.run("antipode.right", words, |w| {
        let d = h.coproduct_word(w)?;
        let got = mul_legs(h, &antipode_leg(h, &d, 1)?, 0)?.to_element()?;
        Ok((got != h.one().scale(&h.counit_word(w))).then(|| fw(w)))
    })?;
    rep.run("counit.antipode", words, |w| {
        let s = antipode(h, &el(h, w))?;
        Ok((counit(h, &s) != h.counit_word(w)).then(|| fw(w)))
    })?;
    let e = Word::empty();
    let one2 = Tensor::pure(smallvec![e.clone(), e.clone()], h.ring().one());
    let unit_ok = h.coproduct_word(&e)? == one2
        && h.counit_word(&e).is_one()
        && h.antipode_word(&e)? == h.one();
    let mut unit_fail = Vec::new();
    if !unit_ok {
        unit_fail.push("1".to_string());
    }
    for w in words {
        let x = el(h, w);
        if h.mul_words(&e, w)? != x || h.mul_words(w, &e)? != x {
            unit_fail.push(fw(w));
        }
    }
    rep.push(Check::from_witnesses("unit", words.len() + 1, unit_fail));
    Ok(())
}

/// Δ and ε are (braided-)multiplicative on pairs.
pub fn multiplicativity_checks<H: HopfStructure + ?Sized>(h: &H, rep: &mut Report, pairs: &[Pair]) -> Result<()> {
    rep.run("coproduct.multiplicative", pairs, |(x, y)| {
        let lhs = coproduct(h, &h.mul_words(x, y)?)?;
        let rhs = braided_product(h, &h.coproduct_word(x)?, &h.coproduct_word(y)?)?;
        Ok((lhs != rhs).then(|| fmt2(h, x, y)))
    })?;
    rep.run("counit.multiplicative", pairs, |(x, y)| {
        let lhs = counit(h, &h.mul_words(x, y)?);
        let rhs = h.counit_word(x).mul(&h.counit_word(y));
        Ok((lhs != rhs).then(|| fmt2(h, x, y)))
    })?;
    Ok(())
}

pub fn associativity_check<H: HopfStructure + ?Sized>(h: &H, rep: &mut Report, triples: &[Triple]) -> Result<()> {
    rep.run("product.associative", triples, |(x, y, z)| {
        let l = multiply(h, &h.mul_words(x, y)?, &el(h, z))?;
        let r = multiply(h, &el(h, x), &h.mul_words(y, z)?)?;
        Ok((l != r).then(|| fmt3(h, x, y, z)))
    })
}

/// ∗ is an antimultiplicative involution compatible with Δ and S.
pub fn star_checks<H: HopfStructure + ?Sized>(h: &H, rep: &mut Report, words: &[Word], pairs: &[Pair]) -> Result<()> {
    if !h.has_star() {
        rep.notes.push("no ∗-structure declared; ∗ checks skipped".into());
        return Ok(());
    }
    let fw = |w: &Word| h.presentation().format_word(w);
    rep.run("star.involution", words, |w| {
        let s = star(h, &h.star_word(w)?)?;
        Ok((s != el(h, w)).then(|| fw(w)))
    })?;
    rep.run("star.antimultiplicative", pairs, |(x, y)| {
        let l = star(h, &h.mul_words(x, y)?)?;
        let r = multiply(h, &h.star_word(y)?, &h.star_word(x)?)?;
        Ok((l != r).then(|| fmt2(h, x, y)))
    })?;
    rep.run("star.coproduct", words, |w| {
        let l = coproduct(h, &h.star_word(w)?)?;
        let r = tensor_star(h, &h.coproduct_word(w)?)?;
        Ok((l != r).then(|| fw(w)))
    })?;
    rep.run("star.antipode", words, |w| {
        let s = antipode(h, &el(h, w))?;
        let back = star(h, &antipode(h, &star(h, &s)?)?)?;
        Ok((back != el(h, w)).then(|| fw(w)))
    })?;
    Ok(())
}

/// Structure maps respect every defining relation (on the free algebra).
pub fn relation_checks(h: &HopfAlgebra, rep: &mut Report) -> Result<()> {
    let p = h.presentation();
    rep.run("relations.coproduct", p.rules(), |r| {
        let mut rhs = Tensor::zero(2);
        for (w, c) in &r.rhs {
            rhs.add_scaled(&h.coproduct_raw(w)?, c);
        }
        Ok((h.coproduct_raw(&r.lhs)? != rhs).then(|| p.format_word(&r.lhs)))
    })?;
    rep.run("relations.counit", p.rules(), |r| {
        let mut rhs = p.ring().zero();
        for (w, c) in &r.rhs {
            rhs = rhs.add(&h.counit_raw(w).mul(c));
        }
        Ok((h.counit_raw(&r.lhs) != rhs).then(|| p.format_word(&r.lhs)))
    })?;
    rep.run("relations.antipode", p.rules(), |r| {
        let mut rhs = Element::zero();
        for (w, c) in &r.rhs {
            rhs.add_scaled(&h.antipode_raw(w)?, c);
        }
        Ok((h.antipode_raw(&r.lhs)? != rhs).then(|| p.format_word(&r.lhs)))
    })?;
    if p.has_star() {
        rep.run("relations.star", p.rules(), |r| {
            let mut rhs = Element::zero();
            for (w, c) in &r.rhs {
                rhs.add_scaled(&p.star_word(w)?, &c.star());
            }
            Ok((p.star_word(&r.lhs)? != rhs).then(|| p.format_word(&r.lhs)))
        })?;
    }
    Ok(())
}

/// The full Hopf ∗-algebra suite on an untwisted algebra.
pub fn check_hopf_axioms(h: &HopfAlgebra, max_len: usize) -> Result<Report> {
    let mut rep = Report::new("hopf", h.label(), max_len);
    let words = words_upto(h, max_len)?;
    let ps = pairs(&words);
    relation_checks(h, &mut rep)?;
    coalgebra_checks(h, &mut rep, &words)?;
    multiplicativity_checks(h, &mut rep, &ps)?;
    star_checks(h, &mut rep, &words, &ps)?;
    associativity_check(h, &mut rep, &triples(&words))?;
    Ok(rep)
}
