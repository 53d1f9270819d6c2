//! Characters into ℂ[z, z⁻¹], the induced degrees (μ, ν, δ) and the grading
//! lemmas.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::freealg::{Element, Presentation, Word};
use crate::hopf::{HopfAlgebra, HopfStructure};
use crate::report::Report;
use crate::scalars::Scalar;

/// Generator images `z^k` (`Some(k)`) or `0` (`None`).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Character {
    pub images: Vec<Option<i32>>,
}

impl Character {
    /// α on a word: the product of the letter images.
    pub fn on_word(&self, w: &Word) -> Option<i32> {
        w.letters().iter().try_fold(0, |acc, g| self.images[g.index()].map(|k| acc + k))
    }

    /// α on an element, as a Laurent polynomial `k ↦ coefficient of z^k`.
    pub fn on_element<'a>(&self, terms: impl IntoIterator<Item = (&'a Word, &'a Scalar)>) -> BTreeMap<i32, Scalar> {
        let mut out: BTreeMap<i32, Scalar> = BTreeMap::new();
        for (w, c) in terms {
            if let Some(k) = self.on_word(w) {
                let e = out.entry(k).or_insert_with(|| Scalar::zero(c.arity()));
                *e = e.add(c);
            }
        }
        out.retain(|_, c| !c.is_zero());
        out
    }

    pub fn format_image(img: Option<i32>) -> String {
        match img {
            None => "0".into(),
            Some(k) => format!("z^{k}"),
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Default, PartialOrd, Ord)]
pub struct Degrees {
    pub mu: i32,
    pub nu: i32,
}

impl Degrees {
    pub fn new(mu: i32, nu: i32) -> Self {
        Degrees { mu, nu }
    }

    pub fn delta(&self) -> i32 {
        self.mu - self.nu
    }

    pub fn add(&self, o: &Degrees) -> Degrees {
        Degrees { mu: self.mu + o.mu, nu: self.nu + o.nu }
    }
}

/// A character together with the generator degrees it induces.
#[derive(Clone, Debug)]
pub struct Grading {
    pub character: Character,
    pub degrees: Vec<Degrees>,
}

impl Grading {
    /// Degrees from the coactions, then rule homogeneity.
    pub fn compute(h: &HopfAlgebra, character: Character) -> Result<Grading> {
        let degrees = generator_degrees(h, &character)?;
        let g = Grading { character, degrees };
        if let Some(bad) = g.rule_inhomogeneities(h.presentation()).into_iter().next() {
            return Err(Error::Grading(bad));
        }
        Ok(g)
    }

    pub fn word_degrees(&self, w: &Word) -> Degrees {
        w.letters().iter().fold(Degrees::default(), |acc, g| acc.add(&self.degrees[g.index()]))
    }

    pub fn delta(&self, w: &Word) -> i32 {
        self.word_degrees(w).delta()
    }

    /// Φ exponent μ(x)ν(y) − ν(x)μ(y).
    pub fn cocycle_exponent(&self, x: &Word, y: &Word) -> i64 {
        let (a, b) = (self.word_degrees(x), self.word_degrees(y));
        a.mu as i64 * b.nu as i64 - a.nu as i64 * b.mu as i64
    }

    /// Σ_{i<j} Φ-exponent of letter pairs: g₁∗…∗g_k = u^Θ·g₁⋯g_k.
    pub fn word_cocycle_exponent(&self, w: &Word) -> i64 {
        let l = w.letters();
        let mut acc = 0;
        for i in 0..l.len() {
            for j in i + 1..l.len() {
                acc += self.cocycle_exponent(&Word::gen(l[i]), &Word::gen(l[j]));
            }
        }
        acc
    }

    /// Partition of an element by word degrees.
    pub fn homogeneous_components(&self, x: &Element) -> Vec<(Degrees, Element)> {
        let mut parts: BTreeMap<Degrees, Element> = BTreeMap::new();
        for (w, c) in x.terms() {
            parts.entry(self.word_degrees(w)).or_default().add_term(w.clone(), c.clone());
        }
        parts.into_iter().collect()
    }

    /// Rules whose sides have different degrees, described for a report.
    pub fn rule_inhomogeneities(&self, p: &Presentation) -> Vec<String> {
        let mut out = Vec::new();
        for r in p.rules() {
            let d = self.word_degrees(&r.lhs);
            for (w, _) in &r.rhs {
                let e = self.word_degrees(w);
                if e != d {
                    out.push(format!(
                        "rule {} → … mixes degrees ({}, {}) and ({}, {}) of {}",
                        p.format_word(&r.lhs),
                        d.mu,
                        d.nu,
                        e.mu,
                        e.nu,
                        p.format_word(w)
                    ));
                }
            }
        }
        out
    }
}

fn coaction_side(h: &HopfAlgebra, ch: &Character, g: &Word, left: bool) -> Result<BTreeMap<i32, Element>> {
    let t = h.coproduct_raw(g)?;
    let mut out: BTreeMap<i32, Element> = BTreeMap::new();
    for (legs, c) in t.terms() {
        let (z, keep) = if left { (&legs[0], &legs[1]) } else { (&legs[1], &legs[0]) };
        if let Some(k) = ch.on_word(z) {
            out.entry(k).or_default().add_term(keep.clone(), c.clone());
        }
    }
    out.retain(|_, e| !e.is_zero());
    Ok(out)
}

/// (α⊗id)Δ(g) = z^μ⊗g and (id⊗α)Δ(g) = g⊗z^ν for every generator g.
pub fn generator_degrees(h: &HopfAlgebra, ch: &Character) -> Result<Vec<Degrees>> {
    let p = h.presentation();
    let mut out = Vec::with_capacity(p.num_generators());
    for g in p.gen_ids() {
        let w = Word::gen(g);
        let nf = p.reduce(&w)?;
        let side = |left: bool| -> Result<i32> {
            let co = coaction_side(h, ch, &w, left)?;
            match co.iter().next() {
                Some((k, e)) if co.len() == 1 && *e == nf => Ok(*k),
                _ => {
                    let shown: Vec<String> =
                        co.iter().map(|(k, e)| format!("z^{k} ⊗ {}", p.format_element(e))).collect();
                    Err(Error::Grading(format!(
                        "generator {} is not homogeneous: the {} coaction gives [{}]",
                        p.name(g),
                        if left { "left" } else { "right" },
                        shown.join(", ")
                    )))
                }
            }
        };
        let mu = side(true)?;
        let nu = side(false)?;
        out.push(Degrees { mu, nu });
    }
    Ok(out)
}

fn laurent_eq(a: &BTreeMap<i32, Scalar>, b: &BTreeMap<i32, Scalar>) -> bool {
    a == b
}

/// The character is an algebra, coalgebra, counit, antipode and ∗ map.
pub fn check_character(h: &HopfAlgebra, rep: &mut Report) -> Result<()> {
    let Some(ch) = h.character() else {
        return Ok(());
    };
    let p = h.presentation();
    let one = p.ring().one();
    let gens: Vec<_> = p.gen_ids().collect();

    rep.run("character.relations", p.rules(), |r| {
        let lhs = ch.on_element([(&r.lhs, &one)]);
        let rhs = ch.on_element(r.rhs.iter().map(|(w, c)| (w, c)));
        Ok((!laurent_eq(&lhs, &rhs)).then(|| format!("rule {}", p.format_word(&r.lhs))))
    })?;
    rep.run("character.coalgebra", &gens, |&g| {
        let mut got: BTreeMap<(i32, i32), Scalar> = BTreeMap::new();
        for (legs, c) in h.generator_coproduct(g).terms() {
            if let (Some(a), Some(b)) = (ch.on_word(&legs[0]), ch.on_word(&legs[1])) {
                let e = got.entry((a, b)).or_insert_with(|| p.ring().zero());
                *e = e.add(c);
            }
        }
        got.retain(|_, c| !c.is_zero());
        let mut want = BTreeMap::new();
        if let Some(k) = ch.images[g.index()] {
            want.insert((k, k), one.clone());
        }
        Ok((got != want).then(|| p.name(g).to_string()))
    })?;
    rep.run("character.counit", &gens, |&g| {
        let want = if ch.images[g.index()].is_some() { one.clone() } else { p.ring().zero() };
        Ok((h.counit_raw(&Word::gen(g)) != want).then(|| p.name(g).to_string()))
    })?;
    rep.run("character.antipode", &gens, |&g| {
        let s = h.generator_antipode(g);
        let got = ch.on_element(s.terms());
        let mut want = BTreeMap::new();
        if let Some(k) = ch.images[g.index()] {
            want.insert(-k, one.clone());
        }
        Ok((got != want).then(|| p.name(g).to_string()))
    })?;
    if p.has_star() {
        rep.run("character.star", &gens, |&g| {
            let s = p.star_word(&Word::gen(g))?;
            let got = ch.on_element(s.terms());
            let mut want = BTreeMap::new();
            if let Some(k) = ch.images[g.index()] {
                want.insert(-k, one.clone());
            }
            Ok((got != want).then(|| p.name(g).to_string()))
        })?;
    }
    Ok(())
}

/// The grading suite: character checks, rule homogeneity (a precondition),
/// and the degree lemmas on every basis word up to `max_len`.
pub fn check_grading_lemmas(h: &HopfAlgebra, max_len: usize) -> Result<Report> {
    let p = h.presentation();
    let mut rep = Report::new("grading", h.label(), max_len);
    let Some(ch) = h.character() else {
        rep.push(crate::report::Check::from_witnesses("character.declared", 1, vec!["no character".into()]));
        return Ok(rep);
    };
    let degrees = match generator_degrees(h, ch) {
        Ok(d) => {
            rep.push(crate::report::Check::from_witnesses("degrees.generators", p.num_generators(), vec![]));
            d
        }
        Err(e) => {
            rep.push(crate::report::Check::from_witnesses("degrees.generators", p.num_generators(), vec![e.to_string()]));
            return Ok(rep);
        }
    };
    let g = Grading { character: ch.clone(), degrees };
    let inh = g.rule_inhomogeneities(p);
    rep.push(crate::report::Check::from_witnesses("rules.homogeneous", p.rules().len(), inh.clone()));
    if !inh.is_empty() {
        rep.notes.push("rule homogeneity failed; degree lemmas not evaluated".into());
        return Ok(rep);
    }
    check_character(h, &mut rep)?;

    let words = p.basis_words(max_len)?;
    let fw = |w: &Word| p.format_word(w);

    rep.run("degrees.coaction", &words, |w| {
        let d = g.word_degrees(w);
        let nf = p.reduce(w)?;
        let l = coaction_side(h, ch, w, true)?;
        let r = coaction_side(h, ch, w, false)?;
        let ok = |m: &BTreeMap<i32, Element>, k: i32| m.len() == 1 && m.get(&k) == Some(&nf);
        Ok((!(ok(&l, d.mu) && ok(&r, d.nu))).then(|| fw(w)))
    })?;

    let pairs: Vec<(Word, Word)> =
        words.iter().flat_map(|x| words.iter().map(move |y| (x.clone(), y.clone()))).collect();
    rep.run("degrees.additive", &pairs, |(x, y)| {
        let d = g.word_degrees(x).add(&g.word_degrees(y));
        let xy = p.reduce(&x.concat(y))?;
        let bad = xy.terms().any(|(w, _)| g.word_degrees(w) != d);
        Ok(bad.then(|| format!("({}, {})", fw(x), fw(y))))
    })?;

    rep.run("lemma.degprop", &words, |w| {
        let d = g.word_degrees(w);
        let t = h.coproduct_raw(w)?;
        let bad = t.terms().any(|(l, _)| {
            let (a, b) = (g.word_degrees(&l[0]), g.word_degrees(&l[1]));
            a.mu != d.mu || b.nu != d.nu || b.mu != a.nu
        });
        Ok(bad.then(|| fw(w)))
    })?;
    rep.run("lemma.degad", &words, |w| {
        let d = g.delta(w);
        let t = h.coproduct_raw(w)?;
        let bad = t.terms().any(|(l, _)| g.delta(&l[0]) + g.delta(&l[1]) != d);
        Ok(bad.then(|| fw(w)))
    })?;
    rep.run("lemma.antipode", &words, |w| {
        let d = g.word_degrees(w);
        let s = h.antipode_raw(w)?;
        let want = Degrees::new(-d.nu, -d.mu);
        let bad = s.terms().any(|(x, _)| g.word_degrees(x) != want);
        Ok(bad.then(|| fw(w)))
    })?;
    rep.run("lemma.counit", &words, |w| {
        Ok((g.delta(w) != 0 && !h.counit_raw(w).is_zero()).then(|| fw(w)))
    })?;
    Ok(rep)
}
