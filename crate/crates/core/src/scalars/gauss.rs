use std::fmt;

use num_rational::Rational64;
use num_traits::{CheckedAdd, CheckedDiv, CheckedMul, CheckedSub, Signed, Zero};

/// An element `re + im·i` of ℚ(i).
///
/// Components are machine rationals with overflow-checked arithmetic: an
/// overflow aborts the computation instead of producing a wrong coefficient.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct GaussRational {
    re: Rational64,
    im: Rational64,
}

#[track_caller]
fn ck<T>(v: Option<T>) -> T {
    v.expect("coefficient overflow in exact rational arithmetic")
}

impl GaussRational {
    pub const ZERO: Self = GaussRational {
        re: Rational64::new_raw(0, 1),
        im: Rational64::new_raw(0, 1),
    };
    pub const ONE: Self = GaussRational {
        re: Rational64::new_raw(1, 1),
        im: Rational64::new_raw(0, 1),
    };
    pub const I: Self = GaussRational {
        re: Rational64::new_raw(0, 1),
        im: Rational64::new_raw(1, 1),
    };

    pub fn new(re: Rational64, im: Rational64) -> Self {
        GaussRational { re, im }
    }

    pub fn from_int(n: i64) -> Self {
        GaussRational::new(Rational64::from_integer(n), Rational64::zero())
    }

    pub fn re(&self) -> Rational64 {
        self.re
    }

    pub fn im(&self) -> Rational64 {
        self.im
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_one(&self) -> bool {
        *self == Self::ONE
    }

    pub fn conj(&self) -> Self {
        GaussRational::new(self.re, -self.im)
    }

    fn is_integral_real(&self) -> bool {
        self.im.is_zero() && *self.re.denom() == 1
    }

    pub fn add(&self, o: &Self) -> Self {
        if self.is_integral_real() && o.is_integral_real() {
            let n = ck(self.re.numer().checked_add(o.re.numer()));
            return GaussRational::new(Rational64::from_integer(n), Rational64::zero());
        }
        GaussRational::new(ck(self.re.checked_add(&o.re)), ck(self.im.checked_add(&o.im)))
    }

    pub fn sub(&self, o: &Self) -> Self {
        GaussRational::new(ck(self.re.checked_sub(&o.re)), ck(self.im.checked_sub(&o.im)))
    }

    pub fn neg(&self) -> Self {
        GaussRational::new(-self.re, -self.im)
    }

    pub fn mul(&self, o: &Self) -> Self {
        if self.is_integral_real() && o.is_integral_real() {
            let n = ck(self.re.numer().checked_mul(o.re.numer()));
            return GaussRational::new(Rational64::from_integer(n), Rational64::zero());
        }
        if self.im.is_zero() && o.im.is_zero() {
            return GaussRational::new(ck(self.re.checked_mul(&o.re)), Rational64::zero());
        }
        let rr = ck(self.re.checked_mul(&o.re));
        let ii = ck(self.im.checked_mul(&o.im));
        let ri = ck(self.re.checked_mul(&o.im));
        let ir = ck(self.im.checked_mul(&o.re));
        GaussRational::new(ck(rr.checked_sub(&ii)), ck(ri.checked_add(&ir)))
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let n = ck(ck(self.re.checked_mul(&self.re)).checked_add(&ck(self.im.checked_mul(&self.im))));
        Some(GaussRational::new(
            ck(self.re.checked_div(&n)),
            ck((-self.im).checked_div(&n)),
        ))
    }

    /// True when the coefficient prints with a leading minus sign.
    pub(crate) fn is_negative_simple(&self) -> bool {
        (self.im.is_zero() && self.re.is_negative()) || (self.re.is_zero() && self.im.is_negative())
    }
}

fn fmt_rat(r: &Rational64) -> String {
    if *r.denom() == 1 {
        format!("{}", r.numer())
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

impl fmt::Display for GaussRational {
    /// `coeff ::= rat | rat 'i' | '(' rat (('+'|'-') rat 'i') ')'`
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.re.is_zero(), self.im.is_zero()) {
            (_, true) => write!(f, "{}", fmt_rat(&self.re)),
            (true, false) => write!(f, "{}i", fmt_rat(&self.im)),
            (false, false) => {
                let sign = if self.im.is_negative() { '-' } else { '+' };
                write!(f, "({}{}{}i)", fmt_rat(&self.re), sign, fmt_rat(&self.im.abs()))
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(a: i64, b: i64) -> GaussRational {
        GaussRational::new(Rational64::from_integer(a), Rational64::from_integer(b))
    }

    #[test]
    fn multiplication_and_inverse() {
        assert_eq!(g(1, 2).mul(&g(3, -1)), g(5, 5));
        let x = g(2, -3);
        assert_eq!(x.mul(&x.inv().unwrap()), GaussRational::ONE);
        assert!(GaussRational::ZERO.inv().is_none());
    }

    #[test]
    fn printing() {
        assert_eq!(g(3, 0).to_string(), "3");
        assert_eq!(g(0, -2).to_string(), "-2i");
        assert_eq!(g(1, -2).to_string(), "(1-2i)");
        let half = GaussRational::new(Rational64::new(1, 2), Rational64::new(3, 4));
        assert_eq!(half.to_string(), "(1/2+3/4i)");
    }
}
