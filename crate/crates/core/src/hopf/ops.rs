//! Linear extensions of the word-level structure maps, and leg operations on
//! tensors.

use smallvec::smallvec;

use super::HopfStructure;
use crate::error::{structural, Result};
use crate::freealg::{Element, Legs, Tensor, Word};
use crate::scalars::Scalar;

pub fn multiply<H: HopfStructure + ?Sized>(h: &H, x: &Element, y: &Element) -> Result<Element> {
    let mut out = Element::zero();
    for (a, c) in x.terms() {
        for (b, d) in y.terms() {
            out.add_scaled(&h.mul_words(a, b)?, &c.mul(d));
        }
    }
    Ok(out)
}

pub fn coproduct<H: HopfStructure + ?Sized>(h: &H, x: &Element) -> Result<Tensor> {
    let mut out = Tensor::zero(2);
    for (w, c) in x.terms() {
        out.add_scaled(&h.coproduct_word(w)?, c);
    }
    Ok(out)
}

pub fn counit<H: HopfStructure + ?Sized>(h: &H, x: &Element) -> Scalar {
    let mut out = h.ring().zero();
    for (w, c) in x.terms() {
        out = out.add(&h.counit_word(w).mul(c));
    }
    out
}

pub fn antipode<H: HopfStructure + ?Sized>(h: &H, x: &Element) -> Result<Element> {
    let mut out = Element::zero();
    for (w, c) in x.terms() {
        out.add_scaled(&h.antipode_word(w)?, c);
    }
    Ok(out)
}

/// Antilinear ∗: coefficients are conjugated in the ring.
pub fn star<H: HopfStructure + ?Sized>(h: &H, x: &Element) -> Result<Element> {
    let mut out = Element::zero();
    for (w, c) in x.terms() {
        out.add_scaled(&h.star_word(w)?, &c.star());
    }
    Ok(out)
}

/// `word ↦ 1·word` as a rank-1 tensor.
pub fn word_tensor<H: HopfStructure + ?Sized>(h: &H, w: &Word) -> Tensor {
    Tensor::pure(smallvec![w.clone()], h.ring().one())
}

pub fn words_tensor<H: HopfStructure + ?Sized>(h: &H, ws: &[&Word]) -> Tensor {
    Tensor::pure(ws.iter().map(|w| (*w).clone()).collect(), h.ring().one())
}

/// Multiplies legs `pos` and `pos + 1`.
pub fn mul_legs<H: HopfStructure + ?Sized>(h: &H, t: &Tensor, pos: usize) -> Result<Tensor> {
    t.map_block(pos, 2, |ls| Ok(Tensor::from_element(&h.mul_words(&ls[0], &ls[1])?)))
}

/// Ψ on legs `pos`, `pos + 1`.
pub fn braid<H: HopfStructure + ?Sized>(h: &H, t: &Tensor, pos: usize) -> Result<Tensor> {
    t.map_block(pos, 2, |ls| {
        Ok(Tensor::pure(smallvec![ls[1].clone(), ls[0].clone()], h.braiding_phase(&ls[0], &ls[1])))
    })
}

/// Ψ⁻¹ on legs `pos`, `pos + 1`: y⊗x ↦ ψ(x, y)⁻¹·x⊗y.
pub fn braid_inverse<H: HopfStructure + ?Sized>(h: &H, t: &Tensor, pos: usize) -> Result<Tensor> {
    t.map_block(pos, 2, |ls| {
        let ph = h.braiding_phase(&ls[1], &ls[0]);
        let inv = ph.inv().ok_or_else(|| structural("braiding phase is not invertible"))?;
        Ok(Tensor::pure(smallvec![ls[1].clone(), ls[0].clone()], inv))
    })
}

pub fn coproduct_leg<H: HopfStructure + ?Sized>(h: &H, t: &Tensor, pos: usize) -> Result<Tensor> {
    t.map_leg(pos, |w| h.coproduct_word(w))
}

pub fn counit_leg<H: HopfStructure + ?Sized>(h: &H, t: &Tensor, pos: usize) -> Result<Tensor> {
    t.map_leg(pos, |w| Ok(Tensor::scalar(h.counit_word(w))))
}

pub fn antipode_leg<H: HopfStructure + ?Sized>(h: &H, t: &Tensor, pos: usize) -> Result<Tensor> {
    t.map_leg(pos, |w| Ok(Tensor::from_element(&h.antipode_word(w)?)))
}

/// (a⊗b)∗(c⊗d) = ψ(b, c)·(a∗c)⊗(b∗d).
pub fn braided_product<H: HopfStructure + ?Sized>(h: &H, s: &Tensor, t: &Tensor) -> Result<Tensor> {
    if s.rank() != 2 || t.rank() != 2 {
        return Err(structural("braided product needs rank-2 tensors"));
    }
    let mut out = Tensor::zero(2);
    for (l1, c1) in s.terms() {
        for (l2, c2) in t.terms() {
            let ph = h.braiding_phase(&l1[1], &l2[0]);
            let ac = h.mul_words(&l1[0], &l2[0])?;
            let bd = h.mul_words(&l1[1], &l2[1])?;
            out.add_scaled(&Tensor::product(&[ac, bd]), &c1.mul(c2).mul(&ph));
        }
    }
    Ok(out)
}

/// (x₁⊗…⊗xₙ)* = Π_{i<j} ψ(xᵢ, xⱼ) · x₁*⊗…⊗xₙ*.
pub fn tensor_star<H: HopfStructure + ?Sized>(h: &H, t: &Tensor) -> Result<Tensor> {
    let mut out = Tensor::zero(t.rank());
    for (legs, c) in t.terms() {
        let mut ph = c.star();
        for i in 0..legs.len() {
            for j in i + 1..legs.len() {
                ph = ph.mul(&h.braiding_phase(&legs[i], &legs[j]));
            }
        }
        let stars = legs.iter().map(|w| h.star_word(w)).collect::<Result<Vec<_>>>()?;
        out.add_scaled(&Tensor::product(&stars), &ph);
    }
    Ok(out)
}

/// Concatenation of legs, used to read off grouped degrees of a leg block.
pub fn block_word(legs: &[Word]) -> Word {
    let mut w = Word::empty();
    for l in legs {
        w.0.extend_from_slice(l.letters());
    }
    w
}

pub fn legs_of(ws: &[Word]) -> Legs {
    ws.iter().cloned().collect()
}
