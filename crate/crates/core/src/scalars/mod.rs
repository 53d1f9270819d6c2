//! Exact coefficient ring ℚ(i)[q^±1, u_1^±1, …, u_m^±1].

mod gauss;
mod literal;

use std::fmt;

use smallvec::SmallVec;

pub use gauss::GaussRational;

use crate::error::{structural, Result};

/// `q^q · Π u_j^{phases[j]}`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Monomial {
    pub q: i32,
    pub phases: SmallVec<[i32; 4]>,
}

impl Monomial {
    pub fn one(arity: usize) -> Self {
        Monomial { q: 0, phases: SmallVec::from_elem(0, arity) }
    }

    pub fn q_pow(arity: usize, k: i32) -> Self {
        Monomial { q: k, ..Monomial::one(arity) }
    }

    pub fn phase(arity: usize, var: usize, k: i32) -> Self {
        let mut m = Monomial::one(arity);
        m.phases[var] = k;
        m
    }

    pub fn arity(&self) -> usize {
        self.phases.len()
    }

    pub fn is_one(&self) -> bool {
        self.q == 0 && self.phases.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, o: &Monomial) -> Monomial {
        Monomial {
            q: self.q + o.q,
            phases: self.phases.iter().zip(&o.phases).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn inv(&self) -> Monomial {
        Monomial { q: -self.q, phases: self.phases.iter().map(|e| -e).collect() }
    }

    pub fn pow(&self, k: i32) -> Monomial {
        Monomial { q: self.q * k, phases: self.phases.iter().map(|e| e * k).collect() }
    }
}

/// A finite ℚ(i)-combination of monomials, kept sorted with no zero terms.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Scalar {
    arity: usize,
    terms: SmallVec<[(Monomial, GaussRational); 2]>,
}

impl Scalar {
    pub fn zero(arity: usize) -> Self {
        Scalar { arity, terms: SmallVec::new() }
    }

    pub fn one(arity: usize) -> Self {
        Scalar::term(Monomial::one(arity), GaussRational::ONE)
    }

    pub fn from_gauss(arity: usize, c: GaussRational) -> Self {
        Scalar::term(Monomial::one(arity), c)
    }

    pub fn from_int(arity: usize, n: i64) -> Self {
        Scalar::from_gauss(arity, GaussRational::from_int(n))
    }

    pub fn term(m: Monomial, c: GaussRational) -> Self {
        let arity = m.arity();
        let mut terms = SmallVec::new();
        if !c.is_zero() {
            terms.push((m, c));
        }
        Scalar { arity, terms }
    }

    pub fn monomial(m: Monomial) -> Self {
        Scalar::term(m, GaussRational::ONE)
    }

    pub fn q_pow(arity: usize, k: i32) -> Self {
        Scalar::monomial(Monomial::q_pow(arity, k))
    }

    pub fn phase(arity: usize, var: usize, k: i32) -> Self {
        Scalar::monomial(Monomial::phase(arity, var, k))
    }

    /// Builds a scalar from arbitrary (possibly repeated, possibly zero) terms.
    pub fn from_terms(arity: usize, it: impl IntoIterator<Item = (Monomial, GaussRational)>) -> Self {
        let mut v: SmallVec<[(Monomial, GaussRational); 8]> = it.into_iter().collect();
        v.sort_unstable_by(|a, b| a.0.cmp(&b.0));
        let mut terms: SmallVec<[(Monomial, GaussRational); 2]> = SmallVec::new();
        for (m, c) in v {
            assert_eq!(m.arity(), arity, "phase-variable arity mismatch");
            match terms.last_mut() {
                Some((lm, lc)) if *lm == m => *lc = lc.add(&c),
                _ => terms.push((m, c)),
            }
        }
        terms.retain(|(_, c)| !c.is_zero());
        Scalar { arity, terms }
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn terms(&self) -> &[(Monomial, GaussRational)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.is_one() && self.terms[0].1.is_one()
    }

    fn check(&self, o: &Scalar) -> Result<()> {
        if self.arity != o.arity {
            return Err(structural(format!(
                "phase-variable arity mismatch: {} vs {}",
                self.arity, o.arity
            )));
        }
        Ok(())
    }

    pub fn try_add(&self, o: &Scalar) -> Result<Scalar> {
        self.check(o)?;
        if self.terms.len() == 1 && o.terms.len() == 1 && self.terms[0].0 == o.terms[0].0 {
            let c = self.terms[0].1.add(&o.terms[0].1);
            return Ok(if c.is_zero() { Scalar::zero(self.arity) } else { Scalar::term(self.terms[0].0.clone(), c) });
        }
        let (a, b) = (&self.terms, &o.terms);
        let mut out: SmallVec<[(Monomial, GaussRational); 2]> = SmallVec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                std::cmp::Ordering::Less => {
                    out.push(a[i].clone());
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    out.push(b[j].clone());
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    let c = a[i].1.add(&b[j].1);
                    if !c.is_zero() {
                        out.push((a[i].0.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(a[i..].iter().cloned());
        out.extend(b[j..].iter().cloned());
        Ok(Scalar { arity: self.arity, terms: out })
    }

    pub fn try_mul(&self, o: &Scalar) -> Result<Scalar> {
        self.check(o)?;
        if self.terms.len() == 1 && o.terms.len() == 1 {
            let (m, c) = (&self.terms[0], &o.terms[0]);
            return Ok(Scalar::term(m.0.mul(&c.0), m.1.mul(&c.1)));
        }
        Ok(Scalar::from_terms(
            self.arity,
            self.terms
                .iter()
                .flat_map(|(m1, c1)| o.terms.iter().map(move |(m2, c2)| (m1.mul(m2), c1.mul(c2)))),
        ))
    }

    /// Infallible addition for scalars known to share a ring.
    pub fn add(&self, o: &Scalar) -> Scalar {
        self.try_add(o).expect("scalar ring mismatch")
    }

    pub fn sub(&self, o: &Scalar) -> Scalar {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &Scalar) -> Scalar {
        self.try_mul(o).expect("scalar ring mismatch")
    }

    pub fn neg(&self) -> Scalar {
        Scalar {
            arity: self.arity,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), c.neg())).collect(),
        }
    }

    pub fn scale(&self, c: &GaussRational) -> Scalar {
        if c.is_zero() {
            return Scalar::zero(self.arity);
        }
        Scalar {
            arity: self.arity,
            terms: self.terms.iter().map(|(m, d)| (m.clone(), d.mul(c))).collect(),
        }
    }

    /// Multiplies by `var^k`; a translation of one exponent keeps the term order.
    pub fn mul_phase(&self, var: usize, k: i32) -> Scalar {
        if k == 0 {
            return self.clone();
        }
        let mut out = self.clone();
        for (m, _) in out.terms.iter_mut() {
            m.phases[var] += k;
        }
        out
    }

    pub fn mul_monomial(&self, mono: &Monomial) -> Scalar {
        Scalar {
            arity: self.arity,
            terms: self.terms.iter().map(|(m, c)| (m.mul(mono), *c)).collect(),
        }
    }

    /// The ∗-involution: i ↦ −i, q fixed, u_j ↦ u_j^{-1}.
    pub fn star(&self) -> Scalar {
        Scalar::from_terms(
            self.arity,
            self.terms.iter().map(|(m, c)| {
                (Monomial { q: m.q, phases: m.phases.iter().map(|e| -e).collect() }, c.conj())
            }),
        )
    }

    /// The single term of a unit, if this scalar is one.
    pub fn as_unit(&self) -> Option<(&Monomial, &GaussRational)> {
        match self.terms.as_slice() {
            [(m, c)] => Some((m, c)),
            _ => None,
        }
    }

    /// Inverse of a unit `c·m`; `None` for anything with more than one term.
    pub fn inv(&self) -> Option<Scalar> {
        let (m, c) = self.as_unit()?;
        Some(Scalar::term(m.inv(), c.inv()?))
    }

    /// Extends the ring by trailing phase variables that do not occur.
    pub fn lift(&self, arity: usize) -> Scalar {
        if arity == self.arity {
            return self.clone();
        }
        assert!(arity > self.arity, "cannot lift to a smaller ring");
        Scalar {
            arity,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| {
                    let mut ph = m.phases.clone();
                    ph.resize(arity, 0);
                    (Monomial { q: m.q, phases: ph }, *c)
                })
                .collect(),
        }
    }

    /// Homomorphic substitution of every phase variable by a monomial of the
    /// target ring. `images[j]` must be given for each variable; images
    /// carrying a power of q are rejected unless `allow_q`.
    pub fn substitute_phases(
        &self,
        images: &[Option<Monomial>],
        target_arity: usize,
        allow_q: bool,
    ) -> Result<Scalar> {
        if images.len() != self.arity {
            return Err(structural(format!(
                "substitution has {} images for {} phase variables",
                images.len(),
                self.arity
            )));
        }
        for (j, im) in images.iter().enumerate() {
            match im {
                None => return Err(structural(format!("phase variable #{j} has no image"))),
                Some(m) if m.arity() != target_arity => {
                    return Err(structural(format!("image of phase variable #{j} lives in the wrong ring")))
                }
                Some(m) if m.q != 0 && !allow_q => {
                    return Err(structural(format!("image of phase variable #{j} is not a pure phase")))
                }
                _ => {}
            }
        }
        Ok(self.substitute_unchecked(images, target_arity))
    }

    pub(crate) fn substitute_unchecked(&self, images: &[Option<Monomial>], target_arity: usize) -> Scalar {
        Scalar::from_terms(
            target_arity,
            self.terms.iter().map(|(m, c)| {
                let mut out = Monomial::q_pow(target_arity, m.q);
                for (j, &e) in m.phases.iter().enumerate() {
                    if e != 0 {
                        out = out.mul(&images[j].as_ref().expect("validated").pow(e));
                    }
                }
                (out, *c)
            }),
        )
    }
}

/// Phase-variable names of a coefficient ring.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct Ring {
    phases: Vec<String>,
}

pub(crate) fn is_identifier(s: &str) -> bool {
    let mut cs = s.chars();
    matches!(cs.next(), Some(c) if c.is_ascii_alphabetic() || c == '_')
        && cs.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl Ring {
    pub fn new<S: Into<String>>(phases: impl IntoIterator<Item = S>) -> Result<Ring> {
        let mut r = Ring::default();
        for p in phases {
            r = r.extend(p)?;
        }
        Ok(r)
    }

    pub fn arity(&self) -> usize {
        self.phases.len()
    }

    pub fn phases(&self) -> &[String] {
        &self.phases
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.phases.iter().position(|p| p == name)
    }

    /// The ring with one more phase variable appended.
    pub fn extend(&self, name: impl Into<String>) -> Result<Ring> {
        let name = name.into();
        if !is_identifier(&name) || name == "q" || name == "i" {
            return Err(structural(format!("invalid phase variable name '{name}'")));
        }
        if self.index_of(&name).is_some() {
            return Err(structural(format!("phase variable '{name}' is already declared")));
        }
        let mut phases = self.phases.clone();
        phases.push(name);
        Ok(Ring { phases })
    }

    pub fn zero(&self) -> Scalar {
        Scalar::zero(self.arity())
    }

    pub fn one(&self) -> Scalar {
        Scalar::one(self.arity())
    }

    pub fn q_pow(&self, k: i32) -> Scalar {
        Scalar::q_pow(self.arity(), k)
    }

    pub fn parse(&self, text: &str) -> std::result::Result<Scalar, String> {
        literal::parse(self, text)
    }

    /// Canonical literal form of `s`.
    pub fn format(&self, s: &Scalar) -> String {
        literal::format(self, s)
    }

    pub fn display<'a>(&'a self, s: &'a Scalar) -> impl fmt::Display + 'a {
        struct D<'a>(&'a Ring, &'a Scalar);
        impl fmt::Display for D<'_> {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str(&self.0.format(self.1))
            }
        }
        D(self, s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ring() -> Ring {
        Ring::new(["u", "v"]).unwrap()
    }

    #[test]
    fn inverse_pair_and_additive_inverse() {
        let r = ring();
        assert!(r.q_pow(1).mul(&r.q_pow(-1)).is_one());
        assert!(r.q_pow(1).add(&r.q_pow(1).neg()).is_zero());
        let u2 = Scalar::phase(2, 0, 2);
        let u3 = Scalar::phase(2, 0, 3);
        assert_eq!(u2.mul(&u3), Scalar::phase(2, 0, 5));
    }

    #[test]
    fn arity_mismatch_is_structural() {
        let e = Scalar::one(1).try_add(&Scalar::one(2)).unwrap_err();
        assert!(matches!(e, crate::Error::Structural(_)));
    }

    #[test]
    fn star_conjugates_and_inverts_phases() {
        let r = Ring::new(["u"]).unwrap();
        let s = r.parse("i*q^1*u^1").unwrap();
        assert_eq!(s.star(), r.parse("-i*q^1*u^-1").unwrap());
        let real = r.parse("q^1 - q^-1").unwrap();
        assert_eq!(real.star(), real);
    }

    #[test]
    fn substitution_laws() {
        let r = Ring::new(["u"]).unwrap();
        let t = Ring::new(["v", "w"]).unwrap();
        let u3 = r.parse("u^3").unwrap();
        let vw = Monomial { q: 0, phases: SmallVec::from_slice(&[1, 1]) };
        let img = u3.substitute_phases(&[Some(vw)], 2, false).unwrap();
        assert_eq!(img, t.parse("v^3*w^3").unwrap());

        let u2 = r.parse("u^2").unwrap();
        let back = u2.substitute_phases(&[Some(Monomial::phase(1, 0, -1))], 1, false).unwrap();
        assert_eq!(back, r.parse("u^-2").unwrap());

        let qu = r.parse("q*u").unwrap();
        let flat = qu.substitute_phases(&[Some(Monomial::one(0))], 0, false).unwrap();
        assert_eq!(flat, Scalar::q_pow(0, 1));

        assert!(qu.substitute_phases(&[None], 0, false).is_err());
        assert!(qu.substitute_phases(&[Some(Monomial::q_pow(0, 1))], 0, false).is_err());
    }

    #[test]
    fn ring_extension_rejects_clashes() {
        let r = ring();
        assert!(r.extend("u").is_err());
        assert!(r.extend("q").is_err());
        assert_eq!(r.extend("w").unwrap().arity(), 3);
    }

    #[test]
    fn unit_inverse() {
        let r = ring();
        let s = r.parse("-2*q^3*u^-1").unwrap();
        assert!(s.mul(&s.inv().unwrap()).is_one());
        assert!(r.parse("1 + q").unwrap().inv().is_none());
    }
}
