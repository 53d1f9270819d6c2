//! Coproduct, counit, antipode and ∗ on a presented algebra.

mod ops;
pub mod suite;

use std::sync::Arc;

use dashmap::DashMap;
use smallvec::smallvec;

pub use ops::*;

use crate::error::{structural, Error, Result};
use crate::freealg::{Element, GenId, Presentation, Tensor, Word};
use crate::grading::{Character, Grading};
use crate::scalars::{Ring, Scalar};

/// Generator-level structure maps, indexed by generator.
#[derive(Clone, Debug, PartialEq)]
pub struct HopfData {
    /// Terms `(coeff, left, right)` of Δ(g).
    pub coproduct: Vec<Vec<(Scalar, Word, Word)>>,
    pub counit: Vec<Scalar>,
    pub antipode: Vec<Vec<(Word, Scalar)>>,
}

/// The interface shared by an ordinary Hopf algebra and its twists. All maps
/// are given on normal words; linear extensions live in this module.
pub trait HopfStructure: Send + Sync {
    fn label(&self) -> String;
    fn presentation(&self) -> &Presentation;
    /// Coefficient ring of the structure constants.
    fn ring(&self) -> &Ring;
    fn mul_words(&self, a: &Word, b: &Word) -> Result<Element>;
    fn coproduct_word(&self, w: &Word) -> Result<Tensor>;
    fn counit_word(&self, w: &Word) -> Scalar;
    fn antipode_word(&self, w: &Word) -> Result<Element>;
    /// ψ(x, y) with Ψ(x⊗y) = ψ(x, y)·y⊗x on words.
    fn braiding_phase(&self, x: &Word, y: &Word) -> Scalar;
    fn has_star(&self) -> bool;
    fn star_word(&self, w: &Word) -> Result<Element>;
    /// Product of `var^exp` over every twist variable applied so far.
    fn twist_phase(&self, exp: i64) -> Scalar;
    /// The untwisted algebra underneath.
    fn root(&self) -> &HopfAlgebra;

    fn arity(&self) -> usize {
        self.ring().arity()
    }

    fn grading(&self) -> Option<&Grading> {
        self.root().grading()
    }

    fn one(&self) -> Element {
        Element::word(Word::empty(), self.ring().one())
    }
}

/// An ordinary Hopf algebra with optional character.
pub struct HopfAlgebra {
    label: String,
    pres: Arc<Presentation>,
    data: HopfData,
    coproduct: Vec<Tensor>,
    antipode: Vec<Element>,
    character: Option<Character>,
    grading: Option<std::result::Result<Grading, Error>>,
    cop_cache: DashMap<Word, Tensor>,
    s_cache: DashMap<Word, Element>,
}

impl std::fmt::Debug for HopfAlgebra {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("HopfAlgebra").field("label", &self.label).finish()
    }
}

impl HopfAlgebra {
    pub fn new(
        label: impl Into<String>,
        pres: Arc<Presentation>,
        data: HopfData,
        character: Option<Character>,
    ) -> Result<HopfAlgebra> {
        let n = pres.num_generators();
        if data.coproduct.len() != n || data.counit.len() != n || data.antipode.len() != n {
            return Err(structural("coproduct, counit and antipode must be given for every generator"));
        }
        let arity = pres.arity();
        let mut coproduct = Vec::with_capacity(n);
        for terms in &data.coproduct {
            let mut t = Tensor::zero(2);
            for (c, l, r) in terms {
                if c.arity() != arity {
                    return Err(structural("coproduct coefficient in the wrong ring"));
                }
                let le = pres.reduce(l)?;
                let re = pres.reduce(r)?;
                t.add_scaled(&Tensor::product(&[le, re]), c);
            }
            coproduct.push(t);
        }
        let antipode = data
            .antipode
            .iter()
            .map(|terms| pres.normalize(terms.iter().cloned()))
            .collect::<Result<Vec<_>>>()?;
        if data.counit.iter().any(|c| c.arity() != arity) {
            return Err(structural("counit value in the wrong ring"));
        }
        if let Some(ch) = &character {
            if ch.images.len() != n {
                return Err(structural("character must be given on every generator"));
            }
        }
        let mut h = HopfAlgebra {
            label: label.into(),
            pres,
            data,
            coproduct,
            antipode,
            character,
            grading: None,
            cop_cache: DashMap::new(),
            s_cache: DashMap::new(),
        };
        if let Some(ch) = h.character.clone() {
            h.grading = Some(Grading::compute(&h, ch));
        }
        Ok(h)
    }

    pub fn presentation_arc(&self) -> &Arc<Presentation> {
        &self.pres
    }

    pub fn data(&self) -> &HopfData {
        &self.data
    }

    pub fn character(&self) -> Option<&Character> {
        self.character.as_ref()
    }

    pub fn grading(&self) -> Option<&Grading> {
        self.grading.as_ref().and_then(|g| g.as_ref().ok())
    }

    /// The reason the declared character does not grade the algebra.
    pub fn grading_error(&self) -> Option<&Error> {
        self.grading.as_ref().and_then(|g| g.as_ref().err())
    }

    /// A copy with new generator data (used to build negative controls).
    pub fn with_data(&self, data: HopfData) -> Result<HopfAlgebra> {
        HopfAlgebra::new(self.label.clone(), self.pres.clone(), data, self.character.clone())
    }

    pub fn with_character(&self, character: Option<Character>) -> Result<HopfAlgebra> {
        HopfAlgebra::new(self.label.clone(), self.pres.clone(), self.data.clone(), character)
    }

    pub fn generator_coproduct(&self, g: GenId) -> &Tensor {
        &self.coproduct[g.index()]
    }

    pub fn generator_antipode(&self, g: GenId) -> &Element {
        &self.antipode[g.index()]
    }

    /// Multiplicative extension of Δ to an arbitrary (not necessarily normal) word.
    pub fn coproduct_raw(&self, w: &Word) -> Result<Tensor> {
        if w.is_empty() {
            return Ok(Tensor::pure(smallvec![Word::empty(), Word::empty()], self.pres.ring().one()));
        }
        if let Some(hit) = self.cop_cache.get(w) {
            return Ok(hit.clone());
        }
        let last = w.letters()[w.len() - 1];
        let head = self.coproduct_raw(&w.prefix(w.len() - 1))?;
        let out = componentwise_product(&self.pres, &head, &self.coproduct[last.index()])?;
        self.cop_cache.insert(w.clone(), out.clone());
        Ok(out)
    }

    /// Anti-multiplicative extension of S to an arbitrary word.
    pub fn antipode_raw(&self, w: &Word) -> Result<Element> {
        if w.is_empty() {
            return Ok(self.pres.one());
        }
        if let Some(hit) = self.s_cache.get(w) {
            return Ok(hit.clone());
        }
        let last = w.letters()[w.len() - 1];
        let head = self.antipode_raw(&w.prefix(w.len() - 1))?;
        let out = self.pres.multiply(&self.antipode[last.index()], &head)?;
        self.s_cache.insert(w.clone(), out.clone());
        Ok(out)
    }

    pub fn counit_raw(&self, w: &Word) -> Scalar {
        let mut c = self.pres.ring().one();
        for g in w.letters() {
            c = c.mul(&self.data.counit[g.index()]);
            if c.is_zero() {
                break;
            }
        }
        c
    }
}

/// (a⊗b)(c⊗d) = ac⊗bd, legs reduced.
fn componentwise_product(p: &Presentation, s: &Tensor, t: &Tensor) -> Result<Tensor> {
    let mut out = Tensor::zero(2);
    for (l1, c1) in s.terms() {
        for (l2, c2) in t.terms() {
            let a = p.reduce(&l1[0].concat(&l2[0]))?;
            let b = p.reduce(&l1[1].concat(&l2[1]))?;
            out.add_scaled(&Tensor::product(&[a, b]), &c1.mul(c2));
        }
    }
    Ok(out)
}

impl HopfStructure for HopfAlgebra {
    fn label(&self) -> String {
        self.label.clone()
    }

    fn presentation(&self) -> &Presentation {
        &self.pres
    }

    fn ring(&self) -> &Ring {
        self.pres.ring()
    }

    fn mul_words(&self, a: &Word, b: &Word) -> Result<Element> {
        self.pres.reduce(&a.concat(b))
    }

    fn coproduct_word(&self, w: &Word) -> Result<Tensor> {
        self.coproduct_raw(w)
    }

    fn counit_word(&self, w: &Word) -> Scalar {
        self.counit_raw(w)
    }

    fn antipode_word(&self, w: &Word) -> Result<Element> {
        self.antipode_raw(w)
    }

    fn braiding_phase(&self, _x: &Word, _y: &Word) -> Scalar {
        self.pres.ring().one()
    }

    fn has_star(&self) -> bool {
        self.pres.has_star()
    }

    fn star_word(&self, w: &Word) -> Result<Element> {
        self.pres.star_word(w)
    }

    fn twist_phase(&self, _exp: i64) -> Scalar {
        self.pres.ring().one()
    }

    fn root(&self) -> &HopfAlgebra {
        self
    }
}
