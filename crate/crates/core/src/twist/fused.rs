//! Schauenburg's right-hand side evaluated leg by leg with memoised structure
//! maps over interned words. Agrees term for term with the staged composition
//! of whole-tensor leg operations.

use std::hash::Hash;
use std::sync::{Arc, RwLock};

use dashmap::DashMap;
use rustc_hash::{FxBuildHasher, FxHashMap};
use smallvec::smallvec;

use crate::error::Result;
use crate::freealg::{Element, Tensor, Word};
use crate::hopf::HopfStructure;
use crate::scalars::Scalar;

type Id = u32;
type Lin = Arc<[(Id, Scalar)]>;
type Bilin = Arc<[(Id, Id, Scalar)]>;

#[derive(Default)]
struct Interner {
    ids: FxHashMap<Word, Id>,
    words: Vec<Word>,
}

pub struct SchauenburgEval<'a, H: ?Sized> {
    h: &'a H,
    interner: RwLock<Interner>,
    products: DashMap<(Id, Id), Lin, FxBuildHasher>,
    coproducts: DashMap<Id, Bilin, FxBuildHasher>,
    antipodes: DashMap<Id, Lin, FxBuildHasher>,
}

fn accumulate<K: Hash + Eq>(map: &mut FxHashMap<K, Scalar>, k: K, c: Scalar) {
    use std::collections::hash_map::Entry;
    match map.entry(k) {
        Entry::Vacant(v) => {
            v.insert(c);
        }
        Entry::Occupied(mut o) => {
            let s = o.get().add(&c);
            if s.is_zero() {
                o.remove();
            } else {
                *o.get_mut() = s;
            }
        }
    }
}

impl<'a, H: HopfStructure + ?Sized> SchauenburgEval<'a, H> {
    pub fn new(h: &'a H) -> Self {
        SchauenburgEval {
            h,
            interner: RwLock::default(),
            products: DashMap::default(),
            coproducts: DashMap::default(),
            antipodes: DashMap::default(),
        }
    }

    fn id(&self, w: &Word) -> Id {
        if let Some(&i) = self.interner.read().expect("interner lock").ids.get(w) {
            return i;
        }
        let mut g = self.interner.write().expect("interner lock");
        if let Some(&i) = g.ids.get(w) {
            return i;
        }
        let i = g.words.len() as Id;
        g.words.push(w.clone());
        g.ids.insert(w.clone(), i);
        i
    }

    fn word(&self, i: Id) -> Word {
        self.interner.read().expect("interner lock").words[i as usize].clone()
    }

    fn lin(&self, e: Element) -> Lin {
        e.into_terms().map(|(w, c)| (self.id(&w), c)).collect()
    }

    fn product(&self, a: Id, b: Id) -> Result<Lin> {
        if let Some(v) = self.products.get(&(a, b)) {
            return Ok(v.clone());
        }
        let v = self.lin(self.h.mul_words(&self.word(a), &self.word(b))?);
        self.products.insert((a, b), v.clone());
        Ok(v)
    }

    fn coproduct(&self, w: Id) -> Result<Bilin> {
        if let Some(v) = self.coproducts.get(&w) {
            return Ok(v.clone());
        }
        let t = self.h.coproduct_word(&self.word(w))?;
        let v: Bilin = t.terms().map(|(l, c)| (self.id(&l[0]), self.id(&l[1]), c.clone())).collect();
        self.coproducts.insert(w, v.clone());
        Ok(v)
    }

    fn antipode(&self, w: Id) -> Result<Lin> {
        if let Some(v) = self.antipodes.get(&w) {
            return Ok(v.clone());
        }
        let v = self.lin(self.h.antipode_word(&self.word(w))?);
        self.antipodes.insert(w, v.clone());
        Ok(v)
    }

    /// `(m⊗m)(S⊗Δ∘m⊗S)(Δx⊗Δy)`.
    pub fn rhs(&self, x: &Word, y: &Word) -> Result<Tensor> {
        let mut left: FxHashMap<(Id, Id), Scalar> = FxHashMap::default();
        for (x1, x2, c) in self.coproduct(self.id(x))?.iter() {
            for (a, ca) in self.antipode(*x1)?.iter() {
                accumulate(&mut left, (*a, *x2), c.mul(ca));
            }
        }
        let mut right: FxHashMap<(Id, Id), Scalar> = FxHashMap::default();
        for (y1, y2, c) in self.coproduct(self.id(y))?.iter() {
            for (b, cb) in self.antipode(*y2)?.iter() {
                accumulate(&mut right, (*y1, *b), c.mul(cb));
            }
        }
        let mut mid: FxHashMap<(Id, Id, Id), Scalar> = FxHashMap::default();
        for (&(a, m), c1) in &left {
            for (&(n, b), c2) in &right {
                let c12 = c1.mul(c2);
                for (w, cw) in self.product(m, n)?.iter() {
                    accumulate(&mut mid, (a, *w, b), c12.mul(cw));
                }
            }
        }
        let mut split: FxHashMap<(Id, Id, Id), Scalar> = FxHashMap::default();
        for (&(a, w, b), c) in &mid {
            for (w1, w2, cw) in self.coproduct(w)?.iter() {
                let ccw = c.mul(cw);
                for (r, cr) in self.product(*w2, b)?.iter() {
                    accumulate(&mut split, (a, *w1, *r), ccw.mul(cr));
                }
            }
        }
        let mut out: FxHashMap<(Id, Id), Scalar> = FxHashMap::default();
        for (&(a, w1, r), c) in &split {
            for (l, cl) in self.product(a, w1)?.iter() {
                accumulate(&mut out, (*l, r), c.mul(cl));
            }
        }
        let mut t = Tensor::zero(2);
        for ((l, r), c) in out {
            t.add_term(smallvec![self.word(l), self.word(r)], c);
        }
        Ok(t)
    }
}
