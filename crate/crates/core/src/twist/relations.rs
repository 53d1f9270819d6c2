//! Defining relations re-expressed through the twisted product.

use crate::error::Result;
use crate::freealg::{Element, Word};
use crate::hopf::{self, HopfStructure};
use crate::scalars::Scalar;

pub type RelationSide = Vec<(Scalar, Word)>;

/// `Σ c·w = Σ c'·w'`, where a word `g₁⋯g_k` stands for the product of its
/// letters in the algebra at hand.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DisplayRelation {
    pub lhs: RelationSide,
    pub rhs: RelationSide,
}

impl DisplayRelation {
    pub fn new(lhs: RelationSide, rhs: RelationSide) -> Self {
        DisplayRelation { lhs, rhs }
    }

    pub fn words(&self) -> impl Iterator<Item = &Word> {
        self.lhs.iter().chain(&self.rhs).map(|(_, w)| w)
    }

    /// Evaluates both sides with the product of `h` and compares them.
    pub fn holds<H: HopfStructure + ?Sized>(&self, h: &H) -> Result<bool> {
        Ok(evaluate(h, &self.lhs)? == evaluate(h, &self.rhs)?)
    }
}

fn evaluate<H: HopfStructure + ?Sized>(h: &H, side: &RelationSide) -> Result<Element> {
    let mut out = Element::zero();
    for (c, w) in side {
        let mut acc = h.one();
        for &g in w.letters() {
            acc = hopf::multiply(h, &acc, &Element::word(Word::gen(g), h.ring().one()))?;
        }
        out.add_scaled(&acc, &c.lift(h.arity()));
    }
    Ok(out)
}

/// Rewrites relations of the root algebra in terms of the ∗-product of `h`:
/// since `g₁∗⋯∗g_k = u^{Θ(g)}·g₁⋯g_k`, each word is dressed by `u^{−Θ}`, and the
/// whole relation is rescaled so the leading word keeps its coefficient.
pub fn twisted_relations<H: HopfStructure + ?Sized>(h: &H, rels: &[DisplayRelation]) -> Vec<DisplayRelation> {
    let Some(g) = h.grading() else {
        return rels.iter().map(|r| lift_relation(r, h.arity())).collect();
    };
    rels.iter()
        .map(|r| {
            let lead = r.lhs.first().map(|(_, w)| g.word_cocycle_exponent(w)).unwrap_or(0);
            let dress = |side: &RelationSide| -> RelationSide {
                side.iter()
                    .map(|(c, w)| {
                        let e = lead - g.word_cocycle_exponent(w);
                        (c.lift(h.arity()).mul(&h.twist_phase(e)), w.clone())
                    })
                    .collect()
            };
            DisplayRelation { lhs: dress(&r.lhs), rhs: dress(&r.rhs) }
        })
        .collect()
}

fn lift_relation(r: &DisplayRelation, arity: usize) -> DisplayRelation {
    let l = |s: &RelationSide| s.iter().map(|(c, w)| (c.lift(arity), w.clone())).collect();
    DisplayRelation { lhs: l(&r.lhs), rhs: l(&r.rhs) }
}
