use std::collections::BTreeMap;

use super::Word;
use crate::scalars::Scalar;

/// A finite linear combination of words. Elements produced by a presentation
/// contain only normal words; raw combinations (rule right-hand sides) may not.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct Element {
    terms: BTreeMap<Word, Scalar>,
}

impl Element {
    pub fn zero() -> Element {
        Element::default()
    }

    pub fn word(w: Word, c: Scalar) -> Element {
        let mut e = Element::zero();
        e.add_term(w, c);
        e
    }

    pub fn from_terms(it: impl IntoIterator<Item = (Word, Scalar)>) -> Element {
        let mut e = Element::zero();
        for (w, c) in it {
            e.add_term(w, c);
        }
        e
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &Scalar)> {
        self.terms.iter()
    }

    pub fn coeff(&self, w: &Word) -> Option<&Scalar> {
        self.terms.get(w)
    }

    pub fn add_term(&mut self, w: Word, c: Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(w) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let s = o.get().add(&c);
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    /// `self += c · other`.
    pub fn add_scaled(&mut self, other: &Element, c: &Scalar) {
        for (w, d) in other.terms() {
            self.add_term(w.clone(), d.mul(c));
        }
    }

    pub fn add(&self, other: &Element) -> Element {
        let mut out = self.clone();
        for (w, c) in other.terms() {
            out.add_term(w.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Element) -> Element {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Element {
        self.map_coeffs(|c| c.neg())
    }

    pub fn scale(&self, c: &Scalar) -> Element {
        Element::from_terms(self.terms().map(|(w, d)| (w.clone(), d.mul(c))))
    }

    /// Applies `f` to every coefficient, dropping terms that become zero.
    pub fn map_coeffs(&self, mut f: impl FnMut(&Scalar) -> Scalar) -> Element {
        Element {
            terms: self
                .terms
                .iter()
                .filter_map(|(w, c)| {
                    let d = f(c);
                    (!d.is_zero()).then(|| (w.clone(), d))
                })
                .collect(),
        }
    }

    pub fn lift(&self, arity: usize) -> Element {
        self.map_coeffs(|c| c.lift(arity))
    }

    pub fn into_terms(self) -> impl Iterator<Item = (Word, Scalar)> {
        self.terms.into_iter()
    }
}
