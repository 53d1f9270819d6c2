//! The universal first-order differential calculus Γ = ker m ⊂ H⊗H, its
//! bimodule and bicomodule structure, hat-degrees, and the phase-dressed
//! versions living over a twisted algebra.
//!
//! Everything is generic over [`HopfStructure`]: the untwisted maps are taken
//! from the root algebra and dressed with [`HopfStructure::twist_phase`], which
//! is trivial on the root itself.

pub mod suite;

use std::collections::BTreeMap;

use smallvec::smallvec;

use crate::error::{structural, Error, Result};
use crate::freealg::{Element, Tensor, Word};
use crate::grading::{Degrees, Grading};
use crate::hopf::{block_word, HopfStructure};
use crate::scalars::Scalar;

/// An element of ker m, stored as a rank-2 tensor.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct UniversalForm {
    value: Tensor,
}

impl UniversalForm {
    /// Checks `m(t) = 0` in the root algebra.
    pub fn new<H: HopfStructure + ?Sized>(h: &H, t: Tensor) -> Result<UniversalForm> {
        if t.rank() != 2 {
            return Err(structural(format!("a form needs a rank-2 tensor, got rank {}", t.rank())));
        }
        let m = contract(h, &t)?;
        if !m.is_zero() {
            return Err(structural(format!(
                "tensor is not in the kernel of the product: m = {}",
                h.presentation().format_element(&m)
            )));
        }
        Ok(UniversalForm { value: t })
    }

    pub fn zero() -> UniversalForm {
        UniversalForm { value: Tensor::zero(2) }
    }

    pub fn value(&self) -> &Tensor {
        &self.value
    }

    pub fn into_tensor(self) -> Tensor {
        self.value
    }

    pub fn is_zero(&self) -> bool {
        self.value.is_zero()
    }

    pub fn add(&self, o: &UniversalForm) -> UniversalForm {
        UniversalForm { value: self.value.add(&o.value) }
    }

    pub fn sub(&self, o: &UniversalForm) -> UniversalForm {
        UniversalForm { value: self.value.sub(&o.value) }
    }

    pub fn scale(&self, c: &Scalar) -> UniversalForm {
        UniversalForm { value: self.value.scale(c) }
    }
}

/// Hat-degrees of a homogeneous form.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct FormDegrees {
    pub mu_hat: i32,
    pub nu_hat: i32,
}

impl FormDegrees {
    pub fn delta_hat(&self) -> i32 {
        self.mu_hat - self.nu_hat
    }
}

fn grading<H: HopfStructure + ?Sized>(h: &H) -> Result<&Grading> {
    h.root()
        .grading()
        .ok_or_else(|| Error::Grading(format!("{} has no character", h.root().label())))
}

fn root_mul<H: HopfStructure + ?Sized>(h: &H, a: &Word, b: &Word) -> Result<Element> {
    Ok(h.root().mul_words(a, b)?.lift(h.arity()))
}

fn root_coproduct<H: HopfStructure + ?Sized>(h: &H, w: &Word) -> Result<Tensor> {
    Ok(h.root().coproduct_word(w)?.lift(h.arity()))
}

/// The root product applied to the two legs.
pub fn contract<H: HopfStructure + ?Sized>(h: &H, t: &Tensor) -> Result<Element> {
    let mut out = Element::zero();
    for (l, c) in t.terms() {
        out.add_scaled(&root_mul(h, &l[0], &l[1])?, c);
    }
    Ok(out)
}

/// da = a⊗1 − 1⊗a.
pub fn differential<H: HopfStructure + ?Sized>(_h: &H, a: &Element) -> UniversalForm {
    let mut t = Tensor::zero(2);
    for (w, c) in a.terms() {
        t.add_term(smallvec![w.clone(), Word::empty()], c.clone());
        t.add_term(smallvec![Word::empty(), w.clone()], c.neg());
    }
    UniversalForm { value: t }
}

pub fn differential_word<H: HopfStructure + ?Sized>(h: &H, w: &Word) -> UniversalForm {
    differential(h, &Element::word(w.clone(), h.ring().one()))
}

/// Hat-degrees of the word tensor `a⊗b` read off the letters.
pub fn term_degrees(g: &Grading, a: &Word, b: &Word) -> FormDegrees {
    let d = g.word_degrees(a).add(&g.word_degrees(b));
    FormDegrees { mu_hat: d.mu, nu_hat: d.nu }
}

/// x·(a⊗b) = xa⊗b in the root algebra.
pub fn act_left<H: HopfStructure + ?Sized>(h: &H, x: &Element, w: &UniversalForm) -> Result<UniversalForm> {
    twisted_act(h, x, w, true, false)
}

/// (a⊗b)·y = a⊗by in the root algebra.
pub fn act_right<H: HopfStructure + ?Sized>(h: &H, w: &UniversalForm, y: &Element) -> Result<UniversalForm> {
    twisted_act(h, y, w, false, false)
}

/// x∗ω = u^{μ(x)ν̂(ω) − ν(x)μ̂(ω)}·xω.
pub fn twisted_act_left<H: HopfStructure + ?Sized>(h: &H, x: &Element, w: &UniversalForm) -> Result<UniversalForm> {
    twisted_act(h, x, w, true, true)
}

/// ω∗y = u^{μ̂(ω)ν(y) − ν̂(ω)μ(y)}·ωy.
pub fn twisted_act_right<H: HopfStructure + ?Sized>(h: &H, w: &UniversalForm, y: &Element) -> Result<UniversalForm> {
    twisted_act(h, y, w, false, true)
}

fn twisted_act<H: HopfStructure + ?Sized>(
    h: &H,
    x: &Element,
    w: &UniversalForm,
    left: bool,
    dressed: bool,
) -> Result<UniversalForm> {
    Ok(UniversalForm { value: act_tensor(h, x, &w.value, left, dressed)? })
}

/// The (dressed) actions on an arbitrary rank-2 tensor, term by term.
pub(crate) fn act_tensor<H: HopfStructure + ?Sized>(
    h: &H,
    x: &Element,
    w: &Tensor,
    left: bool,
    dressed: bool,
) -> Result<Tensor> {
    let g = grading(h)?;
    let mut out = Tensor::zero(2);
    for (xw, xc) in x.terms() {
        let dx = g.word_degrees(xw);
        for (l, c) in w.terms() {
            let dw = term_degrees(g, &l[0], &l[1]);
            let coeff = if dressed {
                let e = if left {
                    dx.mu * dw.nu_hat - dx.nu * dw.mu_hat
                } else {
                    dw.mu_hat * dx.nu - dw.nu_hat * dx.mu
                };
                xc.mul(c).mul(&h.twist_phase(e as i64))
            } else {
                xc.mul(c)
            };
            if left {
                for (p, pc) in root_mul(h, xw, &l[0])?.terms() {
                    out.add_term(smallvec![p.clone(), l[1].clone()], coeff.mul(pc));
                }
            } else {
                for (p, pc) in root_mul(h, &l[1], xw)?.terms() {
                    out.add_term(smallvec![l[0].clone(), p.clone()], coeff.mul(pc));
                }
            }
        }
    }
    Ok(out)
}

/// δ_L(a⊗b) = a₍₁₎b₍₁₎ ⊗ a₍₂₎⊗b₍₂₎, dressed by u^{δ(ω₍₋₁₎)δ̂(ω₍₀₎)}.
/// Legs: (H, Γ, Γ).
pub fn coaction_left<H: HopfStructure + ?Sized>(h: &H, w: &Tensor) -> Result<Tensor> {
    coaction(h, w, true, true)
}

/// δ_R(a⊗b) = a₍₁₎⊗b₍₁₎ ⊗ a₍₂₎b₍₂₎, dressed by u^{δ̂(ω₍₀₎)δ(ω₍₁₎)}.
/// Legs: (Γ, Γ, H).
pub fn coaction_right<H: HopfStructure + ?Sized>(h: &H, w: &Tensor) -> Result<Tensor> {
    coaction(h, w, false, true)
}

fn coaction<H: HopfStructure + ?Sized>(h: &H, w: &Tensor, left: bool, dressed: bool) -> Result<Tensor> {
    let g = grading(h)?;
    let mut out = Tensor::zero(3);
    for (l, c) in w.terms() {
        let da = root_coproduct(h, &l[0])?;
        let db = root_coproduct(h, &l[1])?;
        for (la, ca) in da.terms() {
            for (lb, cb) in db.terms() {
                let cc = c.mul(ca).mul(cb);
                let (hx, hy, f0, f1) =
                    if left { (&la[0], &lb[0], &la[1], &lb[1]) } else { (&la[1], &lb[1], &la[0], &lb[0]) };
                let coeff = if dressed {
                    let e = (g.delta(hx) + g.delta(hy)) * (g.delta(f0) + g.delta(f1));
                    cc.mul(&h.twist_phase(e as i64))
                } else {
                    cc
                };
                for (p, pc) in root_mul(h, hx, hy)?.terms() {
                    let legs = if left {
                        smallvec![p.clone(), f0.clone(), f1.clone()]
                    } else {
                        smallvec![f0.clone(), f1.clone(), p.clone()]
                    };
                    out.add_term(legs, coeff.mul(pc));
                }
            }
        }
    }
    Ok(out)
}

/// Homogeneous components of a form, found through (α⊗id)δ_L and (id⊗α)δ_R.
pub fn form_degrees<H: HopfStructure + ?Sized>(h: &H, w: &UniversalForm) -> Result<Vec<(FormDegrees, UniversalForm)>> {
    let ch = h
        .root()
        .character()
        .ok_or_else(|| Error::Grading(format!("{} has no character", h.root().label())))?;
    let split = |t: &Tensor, left: bool| -> Result<BTreeMap<i32, Tensor>> {
        let co = coaction(h, t, left, false)?;
        let mut parts: BTreeMap<i32, Tensor> = BTreeMap::new();
        for (l, c) in co.terms() {
            let (hl, f) = if left { (&l[0], [&l[1], &l[2]]) } else { (&l[2], [&l[0], &l[1]]) };
            if let Some(k) = ch.on_word(hl) {
                parts.entry(k).or_insert_with(|| Tensor::zero(2)).add_term(smallvec![f[0].clone(), f[1].clone()], c.clone());
            }
        }
        parts.retain(|_, t| !t.is_zero());
        Ok(parts)
    };
    let mut out = Vec::new();
    let mut total = Tensor::zero(2);
    for (mu, piece) in split(&w.value, true)? {
        for (nu, part) in split(&piece, false)? {
            total = total.add(&part);
            out.push((FormDegrees { mu_hat: mu, nu_hat: nu }, UniversalForm { value: part }));
        }
    }
    if total != w.value {
        return Err(Error::Grading("form is not a sum of homogeneous components".into()));
    }
    Ok(out)
}

/// Ψ on a form followed by an algebra leg at `pos`: (a⊗b)⊗x ↦ ψ̂·x⊗(a⊗b), with
/// ψ̂ = ψ read off the grouped degree δ̂(a⊗b).
pub fn braid_form_algebra<H: HopfStructure + ?Sized>(h: &H, t: &Tensor, pos: usize) -> Result<Tensor> {
    t.map_block(pos, 3, |ls| {
        let ph = h.braiding_phase(&block_word(&ls[..2]), &ls[2]);
        Ok(Tensor::pure(smallvec![ls[2].clone(), ls[0].clone(), ls[1].clone()], ph))
    })
}

/// Ψ on an algebra leg followed by a form at `pos`: x⊗(a⊗b) ↦ ψ̂·(a⊗b)⊗x.
pub fn braid_algebra_form<H: HopfStructure + ?Sized>(h: &H, t: &Tensor, pos: usize) -> Result<Tensor> {
    t.map_block(pos, 3, |ls| {
        let ph = h.braiding_phase(&ls[0], &block_word(&ls[1..]));
        Ok(Tensor::pure(smallvec![ls[1].clone(), ls[2].clone(), ls[0].clone()], ph))
    })
}

/// Word degrees of a basis word, for callers outside the grading module.
pub fn word_degrees<H: HopfStructure + ?Sized>(h: &H, w: &Word) -> Result<Degrees> {
    Ok(grading(h)?.word_degrees(w))
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::catalog;
    use crate::twist::{twist, TwistedAlgebra};

    fn w<H: HopfStructure + ?Sized>(h: &H, names: &[&str]) -> Word {
        h.presentation().word(names).unwrap()
    }

    fn e<H: HopfStructure + ?Sized>(h: &H, names: &[&str]) -> Element {
        Element::word(w(h, names), h.ring().one())
    }

    fn t2<H: HopfStructure + ?Sized>(h: &H, terms: &[(i64, &[&str], &[&str])]) -> Tensor {
        let mut t = Tensor::zero(2);
        for (c, a, b) in terms {
            t.add_term(smallvec![w(h, a), w(h, b)], Scalar::from_int(h.arity(), *c));
        }
        t
    }

    fn twisted(name: &str) -> TwistedAlgebra {
        let e = catalog::build(name, &Default::default()).unwrap();
        twist(e.hopf.clone() as Arc<dyn HopfStructure>, "u").unwrap()
    }

    fn u(h: &TwistedAlgebra, k: i32) -> Scalar {
        Scalar::phase(h.arity(), h.var(), k)
    }

    #[test]
    fn differential_and_actions() {
        let e = catalog::build("suq2", &Default::default()).unwrap();
        let h = e.hopf.as_ref();
        assert!(differential(h, &h.one()).is_zero());
        let da = differential(h, &e_(h, "a"));
        assert_eq!(*da.value(), t2(h, &[(1, &["a"], &[]), (-1, &[], &["a"])]));
        let adb = act_left(h, &e_(h, "a"), &differential(h, &e_(h, "b"))).unwrap();
        assert_eq!(*adb.value(), t2(h, &[(1, &["a", "b"], &[]), (-1, &["a"], &["b"])]));
        assert!(UniversalForm::new(h, adb.value().clone()).is_ok());
        assert!(UniversalForm::new(h, t2(h, &[(1, &["a"], &[])])).is_err());
    }

    fn e_<H: HopfStructure + ?Sized>(h: &H, name: &str) -> Element {
        e(h, &[name])
    }

    #[test]
    fn hat_degrees() {
        let e = catalog::build("suq2", &Default::default()).unwrap();
        let h = e.hopf.as_ref();
        let db = differential(h, &e_(h, "b"));
        let parts = form_degrees(h, &db).unwrap();
        assert_eq!(parts.len(), 1);
        assert_eq!(parts[0].0, FormDegrees { mu_hat: -1, nu_hat: 1 });
        assert!(form_degrees(h, &differential(h, &h.one())).unwrap().is_empty());
        let adb = act_left(h, &e_(h, "a"), &db).unwrap();
        assert_eq!(form_degrees(h, &adb).unwrap()[0].0, FormDegrees { mu_hat: 0, nu_hat: 2 });
    }

    #[test]
    fn coactions_on_simple_tensors() {
        let e = catalog::build("suq2", &Default::default()).unwrap();
        let h = e.hopf.as_ref();
        let a = w(h, &["a"]);
        let da = h.coproduct_word(&a).unwrap();
        let right = coaction_right(h, &t2(h, &[(1, &[], &["a"])])).unwrap();
        let want = Tensor::pure(smallvec![Word::empty()], h.ring().one()).outer(&da);
        assert_eq!(right, want);
        let left = coaction_left(h, &t2(h, &[(1, &["a"], &[])])).unwrap();
        assert_eq!(left, da.outer(&Tensor::pure(smallvec![Word::empty()], h.ring().one())));
    }

    #[test]
    fn twisted_actions_carry_phases() {
        let h = twisted("suq2");
        let db = differential(&h, &e_(&h, "b"));
        let plain = act_left(&h, &e_(&h, "a"), &db).unwrap();
        let tw = twisted_act_left(&h, &e_(&h, "a"), &db).unwrap();
        assert_eq!(tw, plain.scale(&u(&h, 2)));
        assert_eq!(twisted_act_left(&h, &h.one(), &db).unwrap(), db);

        let c = twisted("clambda");
        let da = differential(&c, &e_(&c, "a"));
        let plain = act_left(&c, &e_(&c, "b"), &da).unwrap();
        assert_eq!(twisted_act_left(&c, &e_(&c, "b"), &da).unwrap(), plain.scale(&u(&c, 1)));
    }

    #[test]
    fn form_braiding_phase() {
        let h = twisted("suq2");
        let b = w(&h, &["b"]);
        let t = differential_word(&h, &b).into_tensor().outer(&Tensor::pure(smallvec![b.clone()], h.ring().one()));
        let got = braid_form_algebra(&h, &t, 0).unwrap();
        let want = Tensor::pure(smallvec![b.clone()], u(&h, 8)).outer(differential_word(&h, &b).value());
        assert_eq!(got, want);
        let one = Tensor::pure(smallvec![Word::empty()], h.ring().one());
        let t = differential_word(&h, &b).into_tensor().outer(&one);
        assert_eq!(braid_form_algebra(&h, &t, 0).unwrap(), one.outer(differential_word(&h, &b).value()));
    }

    #[test]
    fn twisted_left_coaction_of_differential() {
        let h = twisted("suq2");
        let a = w(&h, &["a"]);
        let lhs = coaction_left(&h, differential_word(&h, &a).value()).unwrap();
        let rhs = h.coproduct_word(&a).unwrap().map_leg(1, |x| Ok(differential_word(&h, x).into_tensor())).unwrap();
        assert_eq!(lhs, rhs);
        let undressed = coaction(&h, differential_word(&h, &a).value(), true, false).unwrap();
        assert_ne!(undressed, rhs);
    }
}
