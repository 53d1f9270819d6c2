//! Words, elements and tensors of a finitely presented algebra, reduction to
//! normal form, and critical-pair confluence checking.

mod confluence;
mod element;
mod presentation;
mod tensor;

use std::fmt;

use smallvec::SmallVec;

pub use confluence::{ConfluenceReport, CriticalPair, PairKind};
pub use element::Element;
pub use presentation::{GeneratorSpec, Presentation, Rule, DEFAULT_BUDGET};
pub use tensor::{Legs, Tensor};

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct GenId(pub u16);

impl GenId {
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

/// A word in the generators; the empty word is the unit.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Default)]
pub struct Word(pub SmallVec<[GenId; 8]>);

impl Word {
    pub fn empty() -> Word {
        Word(SmallVec::new())
    }

    pub fn gen(g: GenId) -> Word {
        Word(SmallVec::from_slice(&[g]))
    }

    pub fn from_ids(ids: &[u16]) -> Word {
        Word(ids.iter().map(|&i| GenId(i)).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn letters(&self) -> &[GenId] {
        &self.0
    }

    pub fn concat(&self, o: &Word) -> Word {
        let mut v = self.0.clone();
        v.extend_from_slice(&o.0);
        Word(v)
    }

    pub fn concat3(a: &[GenId], b: &[GenId], c: &[GenId]) -> Word {
        let mut v: SmallVec<[GenId; 8]> = SmallVec::with_capacity(a.len() + b.len() + c.len());
        v.extend_from_slice(a);
        v.extend_from_slice(b);
        v.extend_from_slice(c);
        Word(v)
    }

    pub fn prefix(&self, n: usize) -> Word {
        Word(SmallVec::from_slice(&self.0[..n]))
    }

    pub fn suffix(&self, n: usize) -> Word {
        Word(SmallVec::from_slice(&self.0[self.0.len() - n..]))
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let ids: Vec<String> = self.0.iter().map(|g| format!("g{}", g.0)).collect();
        write!(f, "[{}]", ids.join(","))
    }
}
