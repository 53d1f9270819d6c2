//! The phase twist H ↦ H_φ: product, coproduct, antipode and braiding dressed
//! by powers of a formal phase `u = e^{iφ}`.

mod fused;
mod relations;
pub mod suite;

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::freealg::{Element, Presentation, Tensor, Word};
use crate::grading::Grading;
use crate::hopf::{HopfAlgebra, HopfStructure};
use crate::scalars::{Monomial, Ring, Scalar};

pub use fused::SchauenburgEval;
pub use relations::{twisted_relations, DisplayRelation, RelationSide};

/// A twist of another (possibly already twisted) structure by one phase
/// variable. Shares the word basis of the untwisted root.
pub struct TwistedAlgebra {
    inner: Arc<dyn HopfStructure>,
    ring: Ring,
    var: usize,
    label: String,
}

impl std::fmt::Debug for TwistedAlgebra {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("TwistedAlgebra").field("label", &self.label).finish()
    }
}

/// Twists `inner` by the new phase variable `var`.
pub fn twist(inner: Arc<dyn HopfStructure>, var: &str) -> Result<TwistedAlgebra> {
    let root = inner.root();
    if root.grading().is_none() {
        return Err(match root.grading_error() {
            Some(e) => e.clone(),
            None => Error::Grading(format!("{} has no character to twist along", root.label())),
        });
    }
    let ring = inner.ring().extend(var)?;
    let var_idx = ring.arity() - 1;
    let label = format!("{}[{}]", inner.label(), var);
    Ok(TwistedAlgebra { inner, ring, var: var_idx, label })
}

impl TwistedAlgebra {
    pub fn inner(&self) -> &Arc<dyn HopfStructure> {
        &self.inner
    }

    pub fn var(&self) -> usize {
        self.var
    }

    pub fn var_name(&self) -> &str {
        &self.ring.phases()[self.var]
    }

    fn degrees(&self) -> &Grading {
        self.root().grading().expect("checked at construction")
    }

    fn lift(&self, s: &Scalar) -> Scalar {
        s.lift(self.ring.arity())
    }

    /// Φ(x, y) = u^{μ(x)ν(y) − ν(x)μ(y)} for this twist's variable.
    pub fn cocycle(&self, x: &Word, y: &Word) -> Scalar {
        Scalar::phase(self.ring.arity(), self.var, self.degrees().cocycle_exponent(x, y) as i32)
    }
}

impl HopfStructure for TwistedAlgebra {
    fn label(&self) -> String {
        self.label.clone()
    }

    fn presentation(&self) -> &Presentation {
        self.inner.presentation()
    }

    fn ring(&self) -> &Ring {
        &self.ring
    }

    fn mul_words(&self, a: &Word, b: &Word) -> Result<Element> {
        let e = self.degrees().cocycle_exponent(a, b) as i32;
        Ok(self.inner.mul_words(a, b)?.map_coeffs(|c| self.lift(c).mul_phase(self.var, e)))
    }

    fn coproduct_word(&self, w: &Word) -> Result<Tensor> {
        let g = self.degrees();
        Ok(self
            .inner
            .coproduct_word(w)?
            .map_terms(|l, c| self.lift(c).mul_phase(self.var, g.delta(&l[0]) * g.delta(&l[1]))))
    }

    fn counit_word(&self, w: &Word) -> Scalar {
        self.lift(&self.inner.counit_word(w))
    }

    fn antipode_word(&self, w: &Word) -> Result<Element> {
        let d = self.degrees().delta(w);
        Ok(self.inner.antipode_word(w)?.map_coeffs(|c| self.lift(c).mul_phase(self.var, d * d)))
    }

    fn braiding_phase(&self, x: &Word, y: &Word) -> Scalar {
        let g = self.degrees();
        self.lift(&self.inner.braiding_phase(x, y)).mul_phase(self.var, 2 * g.delta(x) * g.delta(y))
    }

    fn has_star(&self) -> bool {
        self.inner.has_star()
    }

    fn star_word(&self, w: &Word) -> Result<Element> {
        Ok(self.inner.star_word(w)?.map_coeffs(|c| self.lift(c)))
    }

    fn twist_phase(&self, exp: i64) -> Scalar {
        self.lift(&self.inner.twist_phase(exp)).mul_phase(self.var, exp as i32)
    }

    fn root(&self) -> &HopfAlgebra {
        self.inner.root()
    }
}

/// Twists an untwisted algebra once.
pub fn twist_base(base: Arc<HopfAlgebra>, var: &str) -> Result<TwistedAlgebra> {
    twist(base, var)
}

/// Structure maps rewritten through a phase substitution, for comparing
/// algebras over different rings word by word.
pub struct Substitution {
    images: Vec<Option<Monomial>>,
    target: usize,
}

impl Substitution {
    /// `images[j]` names the image of variable `j` of `from` as a product of
    /// `(target variable, exponent)` pairs; unnamed variables map to themselves
    /// by name.
    pub fn new(from: &Ring, to: &Ring, images: &[(&str, Vec<(&str, i32)>)]) -> Result<Substitution> {
        let mut out = Vec::with_capacity(from.arity());
        for name in from.phases() {
            let m = match images.iter().find(|(n, _)| n == name) {
                Some((_, prod)) => {
                    let mut m = Monomial::one(to.arity());
                    for (v, e) in prod {
                        let j = to.index_of(v).ok_or_else(|| {
                            crate::error::structural(format!("unknown phase variable {v} in substitution"))
                        })?;
                        m.phases[j] += e;
                    }
                    Some(m)
                }
                None => to.index_of(name).map(|j| Monomial::phase(to.arity(), j, 1)),
            };
            out.push(m);
        }
        Ok(Substitution { images: out, target: to.arity() })
    }

    pub fn scalar(&self, s: &Scalar) -> Result<Scalar> {
        s.substitute_phases(&self.images, self.target, false)
    }

    pub fn element(&self, e: &Element) -> Result<Element> {
        let mut out = Element::zero();
        for (w, c) in e.terms() {
            out.add_term(w.clone(), self.scalar(c)?);
        }
        Ok(out)
    }

    pub fn tensor(&self, t: &Tensor) -> Result<Tensor> {
        let mut out = Tensor::zero(t.rank());
        for (l, c) in t.terms() {
            out.add_term(l.clone(), self.scalar(c)?);
        }
        Ok(out)
    }
}
