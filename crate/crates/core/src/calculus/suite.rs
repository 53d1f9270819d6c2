//! The bicovariance suite for the universal calculus.

use smallvec::smallvec;

use super::*;
use crate::hopf::suite::{fmt2, fmt3, pairs, triples, words_upto};
use crate::hopf::{coproduct_leg, counit_leg};
use crate::report::Report;

fn el<H: HopfStructure + ?Sized>(h: &H, w: &Word) -> Element {
    Element::word(w.clone(), h.ring().one())
}

fn d<H: HopfStructure + ?Sized>(h: &H, w: &Word) -> UniversalForm {
    differential_word(h, w)
}

fn lact<H: HopfStructure + ?Sized>(h: &H, x: &Word, t: &Tensor) -> Result<Tensor> {
    act_tensor(h, &el(h, x), t, true, true)
}

fn ract<H: HopfStructure + ?Sized>(h: &H, t: &Tensor, y: &Word) -> Result<Tensor> {
    act_tensor(h, &el(h, y), t, false, true)
}

fn pure2(a: &Word, b: &Word, c: &Scalar) -> Tensor {
    Tensor::pure(smallvec![a.clone(), b.clone()], c.clone())
}

/// Δ(x)·δ_L(ρ) = ψ(x₂, k)·(x₁∗k) ⊗ (x₂∗ω).
fn cov_left_left<H: HopfStructure + ?Sized>(h: &H, dx: &Tensor, co: &Tensor) -> Result<Tensor> {
    let mut out = Tensor::zero(3);
    for (xl, xc) in dx.terms() {
        for (l, c) in co.terms() {
            let ph = h.braiding_phase(&xl[1], &l[0]);
            let form = lact(h, &xl[1], &pure2(&l[1], &l[2], c))?;
            let alg = h.mul_words(&xl[0], &l[0])?;
            mix(&mut out, &alg, &form, &xc.mul(&ph), true);
        }
    }
    Ok(out)
}

/// δ_L(ρ)·Δ(y) = ψ̂(ω, y₁)·(k∗y₁) ⊗ (ω∗y₂).
fn cov_left_right<H: HopfStructure + ?Sized>(h: &H, co: &Tensor, dy: &Tensor) -> Result<Tensor> {
    let mut out = Tensor::zero(3);
    for (l, c) in co.terms() {
        for (yl, yc) in dy.terms() {
            let ph = h.braiding_phase(&block_word(&l[1..]), &yl[0]);
            let form = ract(h, &pure2(&l[1], &l[2], c), &yl[1])?;
            let alg = h.mul_words(&l[0], &yl[0])?;
            mix(&mut out, &alg, &form, &yc.mul(&ph), true);
        }
    }
    Ok(out)
}

/// Δ(x)·δ_R(ρ) = ψ̂(x₂, ω)·(x₁∗ω) ⊗ (x₂∗k).
fn cov_right_left<H: HopfStructure + ?Sized>(h: &H, dx: &Tensor, co: &Tensor) -> Result<Tensor> {
    let mut out = Tensor::zero(3);
    for (xl, xc) in dx.terms() {
        for (l, c) in co.terms() {
            let ph = h.braiding_phase(&xl[1], &block_word(&l[..2]));
            let form = lact(h, &xl[0], &pure2(&l[0], &l[1], c))?;
            let alg = h.mul_words(&xl[1], &l[2])?;
            mix(&mut out, &alg, &form, &xc.mul(&ph), false);
        }
    }
    Ok(out)
}

/// δ_R(ρ)·Δ(y) = ψ(k, y₁)·(ω∗y₁) ⊗ (k∗y₂).
fn cov_right_right<H: HopfStructure + ?Sized>(h: &H, co: &Tensor, dy: &Tensor) -> Result<Tensor> {
    let mut out = Tensor::zero(3);
    for (l, c) in co.terms() {
        for (yl, yc) in dy.terms() {
            let ph = h.braiding_phase(&l[2], &yl[0]);
            let form = ract(h, &pure2(&l[0], &l[1], c), &yl[0])?;
            let alg = h.mul_words(&l[2], &yl[1])?;
            mix(&mut out, &alg, &form, &yc.mul(&ph), false);
        }
    }
    Ok(out)
}

/// Adds `c·alg⊗form` (algebra leg first) or `c·form⊗alg`.
fn mix(out: &mut Tensor, alg: &Element, form: &Tensor, c: &Scalar, alg_first: bool) {
    for (w, wc) in alg.terms() {
        for (fl, fc) in form.terms() {
            let legs = if alg_first {
                smallvec![w.clone(), fl[0].clone(), fl[1].clone()]
            } else {
                smallvec![fl[0].clone(), fl[1].clone(), w.clone()]
            };
            out.add_term(legs, c.mul(wc).mul(fc));
        }
    }
}

/// (id⊗d)Δ(h) or (d⊗id)Δ(h) as mixed rank-3 tensors.
fn d_leg<H: HopfStructure + ?Sized>(h: &H, w: &Word, left: bool) -> Result<Tensor> {
    let dw = h.coproduct_word(w)?;
    if left {
        dw.map_leg(1, |x| Ok(d(h, x).into_tensor()))
    } else {
        dw.map_leg(0, |x| Ok(d(h, x).into_tensor()))
    }
}

/// Universal calculus suite over `h`: d, the (dressed) bimodule structure, both
/// coactions, covariance and hat-degrees, on all words up to `max_len`.
pub fn check_bicovariance<H: HopfStructure + ?Sized>(h: &H, max_len: usize) -> Result<Report> {
    let mut rep = Report::new("calculus", h.label(), max_len);
    if h.root().grading().is_none() {
        rep.notes.push("no character: calculus checks need hat-degrees".into());
        return Ok(rep);
    }
    let words = words_upto(h, max_len)?;
    let ps = pairs(&words);
    let ts = triples(&words);
    let fw = |w: &Word| h.presentation().format_word(w);
    let in_kernel = |t: &Tensor| -> Result<bool> { Ok(contract(h, t)?.is_zero()) };

    rep.run("d.unit", &[Word::empty()], |w| Ok((!d(h, w).is_zero()).then(|| fw(w))))?;
    rep.run("d.kernel", &words, |w| Ok((!in_kernel(d(h, w).value())?).then(|| fw(w))))?;
    rep.run("leibniz", &ps, |(x, y)| {
        let l = differential(h, &h.mul_words(x, y)?).into_tensor();
        let r = ract(h, d(h, x).value(), y)?.add(&lact(h, x, d(h, y).value())?);
        Ok((l != r).then(|| fmt2(h, x, y)))
    })?;
    rep.run("actions.kernel", &ps, |(x, y)| {
        let ok = in_kernel(&lact(h, x, d(h, y).value())?)? && in_kernel(&ract(h, d(h, x).value(), y)?)?;
        Ok((!ok).then(|| fmt2(h, x, y)))
    })?;
    rep.run("actions.unit", &words, |w| {
        let f = d(h, w).into_tensor();
        let one = Word::empty();
        Ok((lact(h, &one, &f)? != f || ract(h, &f, &one)? != f).then(|| fw(w)))
    })?;
    rep.run("actions.left-module", &ts, |(x, y, z)| {
        let f = d(h, z).into_tensor();
        let l = act_tensor(h, &h.mul_words(x, y)?, &f, true, true)?;
        let r = lact(h, x, &lact(h, y, &f)?)?;
        Ok((l != r).then(|| fmt3(h, x, y, z)))
    })?;
    rep.run("actions.right-module", &ts, |(x, y, z)| {
        let f = d(h, z).into_tensor();
        let l = act_tensor(h, &h.mul_words(x, y)?, &f, false, true)?;
        let r = ract(h, &ract(h, &f, x)?, y)?;
        Ok((l != r).then(|| fmt3(h, x, y, z)))
    })?;
    rep.run("actions.bimodule", &ts, |(x, y, z)| {
        let f = d(h, z).into_tensor();
        let l = ract(h, &lact(h, x, &f)?, y)?;
        let r = lact(h, x, &ract(h, &f, y)?)?;
        Ok((l != r).then(|| fmt3(h, x, y, z)))
    })?;
    // a⊗b − ab⊗1 = −a·db, so a⊗b − ab⊗1 lies in H∗dH.
    rep.run("surjectivity", &ps, |(a, b)| {
        let g = grading(h)?;
        let mut w = pure2(a, b, &h.ring().one());
        for (p, c) in h.root().mul_words(a, b)?.terms() {
            w.add_term(smallvec![p.clone(), Word::empty()], c.lift(h.arity()).neg());
        }
        let (da, db) = (g.word_degrees(a), g.word_degrees(b));
        let e = da.mu * db.nu - da.nu * db.mu;
        let r = lact(h, a, d(h, b).value())?.scale(&h.twist_phase(-e as i64)).neg();
        Ok((w != r).then(|| fmt2(h, a, b)))
    })?;

    let mut forms: Vec<(String, Tensor)> = words.iter().map(|w| (format!("d{}", fw(w)), d(h, w).into_tensor())).collect();
    for (x, y) in &ps {
        if !x.is_empty() && !y.is_empty() {
            forms.push((format!("{}∗d{}", fw(x), fw(y)), lact(h, x, d(h, y).value())?));
        }
    }
    rep.run("coaction.kernel", &forms, |(name, f)| {
        let l = coaction_left(h, f)?.map_block(1, 2, |ls| Ok(Tensor::from_element(&contract(h, &pure2(&ls[0], &ls[1], &h.ring().one()))?)))?;
        let r = coaction_right(h, f)?.map_block(0, 2, |ls| Ok(Tensor::from_element(&contract(h, &pure2(&ls[0], &ls[1], &h.ring().one()))?)))?;
        Ok((!l.is_zero() || !r.is_zero()).then(|| name.clone()))
    })?;
    rep.run("coaction.left.comodule", &forms, |(name, f)| {
        let co = coaction_left(h, f)?;
        let l = coproduct_leg(h, &co, 0)?;
        let r = co.map_block(1, 2, |ls| coaction_left(h, &pure2(&ls[0], &ls[1], &h.ring().one())))?;
        Ok((l != r).then(|| name.clone()))
    })?;
    rep.run("coaction.left.counit", &forms, |(name, f)| {
        Ok((counit_leg(h, &coaction_left(h, f)?, 0)? != *f).then(|| name.clone()))
    })?;
    rep.run("coaction.right.comodule", &forms, |(name, f)| {
        let co = coaction_right(h, f)?;
        let l = coproduct_leg(h, &co, 2)?;
        let r = co.map_block(0, 2, |ls| coaction_right(h, &pure2(&ls[0], &ls[1], &h.ring().one())))?;
        Ok((l != r).then(|| name.clone()))
    })?;
    rep.run("coaction.right.counit", &forms, |(name, f)| {
        Ok((counit_leg(h, &coaction_right(h, f)?, 2)? != *f).then(|| name.clone()))
    })?;
    rep.run("coaction.bicomodule", &forms, |(name, f)| {
        let l = coaction_left(h, f)?.map_block(1, 2, |ls| coaction_right(h, &pure2(&ls[0], &ls[1], &h.ring().one())))?;
        let r = coaction_right(h, f)?.map_block(0, 2, |ls| coaction_left(h, &pure2(&ls[0], &ls[1], &h.ring().one())))?;
        Ok((l != r).then(|| name.clone()))
    })?;
    rep.run("coaction.left.d", &words, |w| {
        Ok((coaction_left(h, d(h, w).value())? != d_leg(h, w, true)?).then(|| fw(w)))
    })?;
    rep.run("coaction.right.d", &words, |w| {
        Ok((coaction_right(h, d(h, w).value())? != d_leg(h, w, false)?).then(|| fw(w)))
    })?;
    rep.run("covariance.left.left-action", &ps, |(x, z)| {
        let rho = d(h, z).into_tensor();
        let l = coaction_left(h, &lact(h, x, &rho)?)?;
        let r = cov_left_left(h, &h.coproduct_word(x)?, &coaction_left(h, &rho)?)?;
        Ok((l != r).then(|| fmt2(h, x, z)))
    })?;
    rep.run("covariance.left.right-action", &ps, |(z, y)| {
        let rho = d(h, z).into_tensor();
        let l = coaction_left(h, &ract(h, &rho, y)?)?;
        let r = cov_left_right(h, &coaction_left(h, &rho)?, &h.coproduct_word(y)?)?;
        Ok((l != r).then(|| fmt2(h, z, y)))
    })?;
    rep.run("covariance.right.left-action", &ps, |(x, z)| {
        let rho = d(h, z).into_tensor();
        let l = coaction_right(h, &lact(h, x, &rho)?)?;
        let r = cov_right_left(h, &h.coproduct_word(x)?, &coaction_right(h, &rho)?)?;
        Ok((l != r).then(|| fmt2(h, x, z)))
    })?;
    rep.run("covariance.right.right-action", &ps, |(z, y)| {
        let rho = d(h, z).into_tensor();
        let l = coaction_right(h, &ract(h, &rho, y)?)?;
        let r = cov_right_right(h, &coaction_right(h, &rho)?, &h.coproduct_word(y)?)?;
        Ok((l != r).then(|| fmt2(h, z, y)))
    })?;
    rep.run("braiding.d", &ps, |(x, y)| {
        let t = d(h, x).into_tensor().outer(&Tensor::pure(smallvec![y.clone()], h.ring().one()));
        let l = braid_form_algebra(h, &t, 0)?;
        let r = Tensor::pure(smallvec![y.clone()], h.braiding_phase(x, y)).outer(d(h, x).value());
        Ok((l != r).then(|| fmt2(h, x, y)))
    })?;

    let g = grading(h)?;
    let single = |f: &UniversalForm| -> Result<Option<FormDegrees>> {
        let parts = form_degrees(h, f)?;
        Ok(match parts.as_slice() {
            [(deg, _)] => Some(*deg),
            _ => None,
        })
    };
    rep.run("degrees.d", &words, |w| {
        let f = d(h, w);
        if f.is_zero() {
            return Ok((!form_degrees(h, &f)?.is_empty()).then(|| fw(w)));
        }
        let dw = g.word_degrees(w);
        Ok((single(&f)? != Some(FormDegrees { mu_hat: dw.mu, nu_hat: dw.nu })).then(|| fw(w)))
    })?;
    rep.run("degrees.left-action", &ps, |(x, z)| {
        let f = d(h, z);
        let xf = act_left(h, &el(h, x), &f)?;
        let (Some(df), false) = (single(&f)?, xf.is_zero()) else { return Ok(None) };
        let dx = g.word_degrees(x);
        let want = FormDegrees { mu_hat: dx.mu + df.mu_hat, nu_hat: dx.nu + df.nu_hat };
        Ok((single(&xf)? != Some(want)).then(|| fmt2(h, x, z)))
    })?;
    rep.run("degrees.right-action", &ps, |(z, y)| {
        let f = d(h, z);
        let fy = act_right(h, &f, &el(h, y))?;
        let (Some(df), false) = (single(&f)?, fy.is_zero()) else { return Ok(None) };
        let dy = g.word_degrees(y);
        let want = FormDegrees { mu_hat: df.mu_hat + dy.mu, nu_hat: df.nu_hat + dy.nu };
        Ok((single(&fy)? != Some(want)).then(|| fmt2(h, z, y)))
    })?;
    rep.notes.push("right-action hat-degree rule used as ν̂(ωy) = ν̂(ω) + ν(y)".into());
    Ok(rep)
}
