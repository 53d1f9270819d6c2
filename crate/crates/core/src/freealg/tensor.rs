use std::collections::BTreeMap;

use smallvec::SmallVec;

use super::{Element, Word};
use crate::error::{structural, Result};
use crate::scalars::Scalar;

pub type Legs = SmallVec<[Word; 4]>;

/// A finite combination of word tuples of a fixed rank. Rank 0 holds a bare
/// scalar under the empty tuple.
#[derive(Clone, Debug)]
pub struct Tensor {
    rank: usize,
    terms: BTreeMap<Legs, Scalar>,
}

/// Zero tensors compare equal whatever their rank: a leg map applied to zero
/// cannot know the rank it would have produced.
impl PartialEq for Tensor {
    fn eq(&self, o: &Tensor) -> bool {
        self.terms == o.terms && (self.rank == o.rank || self.terms.is_empty())
    }
}

impl Eq for Tensor {}

impl Tensor {
    pub fn zero(rank: usize) -> Tensor {
        Tensor { rank, terms: BTreeMap::new() }
    }

    pub fn scalar(c: Scalar) -> Tensor {
        let mut t = Tensor::zero(0);
        t.add_term(Legs::new(), c);
        t
    }

    pub fn pure(legs: Legs, c: Scalar) -> Tensor {
        let mut t = Tensor::zero(legs.len());
        t.add_term(legs, c);
        t
    }

    pub fn from_element(e: &Element) -> Tensor {
        let mut t = Tensor::zero(1);
        for (w, c) in e.terms() {
            t.add_term(SmallVec::from_elem(w.clone(), 1), c.clone());
        }
        t
    }

    /// Multilinear tensor product of elements.
    pub fn product(xs: &[Element]) -> Tensor {
        let mut t = Tensor::scalar(Scalar::one(0));
        let mut first = true;
        for x in xs {
            let mut next = Tensor::zero(t.rank + 1);
            for (legs, c) in t.terms() {
                for (w, d) in x.terms() {
                    let mut l = legs.clone();
                    l.push(w.clone());
                    next.add_term(l, if first { d.clone() } else { c.mul(d) });
                }
            }
            t = next;
            first = false;
        }
        t
    }

    pub fn rank(&self) -> usize {
        self.rank
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

    pub fn terms(&self) -> impl Iterator<Item = (&Legs, &Scalar)> {
        self.terms.iter()
    }

    pub fn coeff(&self, legs: &[Word]) -> Option<&Scalar> {
        self.terms.get(legs)
    }

    pub fn add_term(&mut self, legs: Legs, c: Scalar) {
        debug_assert_eq!(legs.len(), self.rank);
        if c.is_zero() {
            return;
        }
        match self.terms.entry(legs) {
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

    pub fn add_scaled(&mut self, other: &Tensor, c: &Scalar) {
        for (l, d) in other.terms() {
            self.add_term(l.clone(), d.mul(c));
        }
    }

    pub fn add(&self, other: &Tensor) -> Tensor {
        let mut out = self.clone();
        out.add_scaled_unit(other);
        out
    }

    fn add_scaled_unit(&mut self, other: &Tensor) {
        for (l, d) in other.terms() {
            self.add_term(l.clone(), d.clone());
        }
    }

    pub fn sub(&self, other: &Tensor) -> Tensor {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Tensor {
        self.map_coeffs(|c| c.neg())
    }

    pub fn scale(&self, c: &Scalar) -> Tensor {
        self.map_coeffs(|d| d.mul(c))
    }

    pub fn map_coeffs(&self, mut f: impl FnMut(&Scalar) -> Scalar) -> Tensor {
        let mut out = Tensor::zero(self.rank);
        for (l, c) in self.terms() {
            out.add_term(l.clone(), f(c));
        }
        out
    }

    /// Applies `f` to each term's coefficient and legs.
    pub fn map_terms(&self, mut f: impl FnMut(&Legs, &Scalar) -> Scalar) -> Tensor {
        let mut out = Tensor::zero(self.rank);
        for (l, c) in self.terms() {
            out.add_term(l.clone(), f(l, c));
        }
        out
    }

    pub fn lift(&self, arity: usize) -> Tensor {
        self.map_coeffs(|c| c.lift(arity))
    }

    /// The rank-1 tensor as an element.
    pub fn to_element(&self) -> Result<Element> {
        if self.rank != 1 {
            return Err(structural(format!("expected a rank-1 tensor, found rank {}", self.rank)));
        }
        Ok(Element::from_terms(self.terms().map(|(l, c)| (l[0].clone(), c.clone()))))
    }

    /// The rank-0 tensor as a scalar of the given ring arity.
    pub fn to_scalar(&self, arity: usize) -> Result<Scalar> {
        if self.rank != 0 {
            return Err(structural(format!("expected a rank-0 tensor, found rank {}", self.rank)));
        }
        Ok(self.coeff(&[]).cloned().unwrap_or_else(|| Scalar::zero(arity)))
    }

    /// Replaces legs `pos..pos+width` of every term by the tensor `f(those legs)`,
    /// splicing its legs in place. The image rank may be anything, including 0.
    pub fn map_block(
        &self,
        pos: usize,
        width: usize,
        mut f: impl FnMut(&[Word]) -> Result<Tensor>,
    ) -> Result<Tensor> {
        if pos + width > self.rank {
            return Err(structural(format!(
                "leg block {pos}..{} out of range for rank {}",
                pos + width,
                self.rank
            )));
        }
        let mut out: Option<Tensor> = None;
        for (legs, c) in self.terms() {
            let img = f(&legs[pos..pos + width])?;
            let acc = out.get_or_insert_with(|| Tensor::zero(self.rank - width + img.rank));
            if img.rank + self.rank - width != acc.rank {
                return Err(structural("leg map produced tensors of differing rank"));
            }
            for (il, ic) in img.terms() {
                let mut l: Legs = SmallVec::with_capacity(acc.rank);
                l.extend(legs[..pos].iter().cloned());
                l.extend(il.iter().cloned());
                l.extend(legs[pos + width..].iter().cloned());
                acc.add_term(l, c.mul(ic));
            }
        }
        Ok(out.unwrap_or_else(|| Tensor::zero(self.rank)))
    }

    /// `map_block` for a single leg; `tensorMap` in Sweedler terms.
    pub fn map_leg(&self, pos: usize, mut f: impl FnMut(&Word) -> Result<Tensor>) -> Result<Tensor> {
        if pos >= self.rank {
            return Err(structural(format!("leg {pos} out of range for rank {}", self.rank)));
        }
        self.map_block(pos, 1, |ls| f(&ls[0]))
    }

    /// Tensor product of two tensors, legs of `self` first.
    pub fn outer(&self, other: &Tensor) -> Tensor {
        let mut out = Tensor::zero(self.rank + other.rank);
        for (l1, c1) in self.terms() {
            for (l2, c2) in other.terms() {
                let mut l = l1.clone();
                l.extend(l2.iter().cloned());
                out.add_term(l, c1.mul(c2));
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(ids: &[u16]) -> Word {
        Word::from_ids(ids)
    }

    #[test]
    fn product_of_units() {
        let one = Element::word(Word::empty(), Scalar::one(0));
        let t = Tensor::product(&[one.clone(), one]);
        assert_eq!(t.rank(), 2);
        assert_eq!(t.coeff(&[Word::empty(), Word::empty()]), Some(&Scalar::one(0)));
    }

    #[test]
    fn splice_and_contract() {
        let x = Element::word(w(&[0]), Scalar::one(0));
        let y = Element::word(w(&[1]), Scalar::from_int(0, 3));
        let t = Tensor::product(&[x, y]);
        let doubled = t
            .map_leg(1, |l| {
                let mut d = Tensor::zero(2);
                d.add_term(SmallVec::from_vec(vec![l.clone(), l.clone()]), Scalar::one(0));
                Ok(d)
            })
            .unwrap();
        assert_eq!(doubled.rank(), 3);
        let contracted = t.map_leg(0, |_| Ok(Tensor::scalar(Scalar::from_int(0, 2)))).unwrap();
        assert_eq!(contracted.rank(), 1);
        assert_eq!(contracted.coeff(&[w(&[1])]), Some(&Scalar::from_int(0, 6)));
        assert!(t.map_leg(2, |_| Ok(Tensor::zero(1))).is_err());
    }
}
