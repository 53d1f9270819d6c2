use std::cmp::Ordering;
use std::collections::BTreeMap;

use dashmap::DashMap;

use super::{Element, GenId, Word};
use crate::error::{structural, Error, Result};
use crate::scalars::{Ring, Scalar};

pub const DEFAULT_BUDGET: usize = 1_000_000;

/// An oriented relation `lhs → rhs`.
///
/// A central rule additionally fires on any word that is normal for the
/// ordinary rules and contains the letters of `lhs` as a sub-multiset: the
/// relation is then used in the form `m'·lhs = m'·rhs`, which is sound when
/// `lhs − rhs` differs from a central element by a scalar.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Rule {
    pub lhs: Word,
    pub rhs: Vec<(Word, Scalar)>,
    pub central: bool,
}

#[derive(Clone, Debug)]
pub struct GeneratorSpec {
    pub name: String,
    pub weight: u32,
    pub hidden: bool,
}

impl GeneratorSpec {
    pub fn new(name: impl Into<String>) -> Self {
        GeneratorSpec { name: name.into(), weight: 1, hidden: false }
    }

    pub fn weight(mut self, w: u32) -> Self {
        self.weight = w;
        self
    }

    pub fn hidden(mut self) -> Self {
        self.hidden = true;
        self
    }
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Mode {
    Full,
    Plain,
}

/// Generators in term order, oriented rules and an optional ∗-structure.
///
/// The term order compares total weight, then length, then words
/// lexicographically by generator index.
pub struct Presentation {
    ring: Ring,
    gens: Vec<GeneratorSpec>,
    rules: Vec<Rule>,
    by_first: Vec<Vec<usize>>,
    central: Vec<usize>,
    star: Option<Vec<Element>>,
    budget: usize,
    cache: DashMap<Word, Element>,
    plain_cache: DashMap<Word, Element>,
    star_cache: DashMap<Word, Element>,
}

impl std::fmt::Debug for Presentation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Presentation")
            .field("generators", &self.gens.iter().map(|g| &g.name).collect::<Vec<_>>())
            .field("rules", &self.rules.len())
            .finish()
    }
}

impl Presentation {
    /// Validates names and rule orientation.
    pub fn new(ring: Ring, gens: Vec<GeneratorSpec>, rules: Vec<Rule>) -> Result<Presentation> {
        Self::build(ring, gens, rules, true)
    }

    /// Skips the orientation check; reduction may then fail to terminate and
    /// is stopped by the rewrite budget.
    pub fn new_unoriented(ring: Ring, gens: Vec<GeneratorSpec>, rules: Vec<Rule>) -> Result<Presentation> {
        Self::build(ring, gens, rules, false)
    }

    fn build(ring: Ring, gens: Vec<GeneratorSpec>, rules: Vec<Rule>, check_order: bool) -> Result<Presentation> {
        if gens.is_empty() {
            return Err(structural("a presentation needs at least one generator"));
        }
        if gens.len() > u16::MAX as usize {
            return Err(structural("too many generators"));
        }
        for (i, g) in gens.iter().enumerate() {
            if g.name.is_empty() || g.name.chars().any(|c| c.is_whitespace()) {
                return Err(structural(format!("invalid generator name '{}'", g.name)));
            }
            if g.weight == 0 {
                return Err(structural(format!("generator '{}' has zero weight", g.name)));
            }
            if gens[..i].iter().any(|h| h.name == g.name) {
                return Err(structural(format!("duplicate generator '{}'", g.name)));
            }
        }
        let mut p = Presentation {
            ring,
            by_first: vec![Vec::new(); gens.len()],
            gens,
            rules: Vec::new(),
            central: Vec::new(),
            star: None,
            budget: DEFAULT_BUDGET,
            cache: DashMap::new(),
            plain_cache: DashMap::new(),
            star_cache: DashMap::new(),
        };
        for r in rules {
            p.validate_rule(&r, check_order)?;
            let idx = p.rules.len();
            p.by_first[r.lhs.letters()[0].index()].push(idx);
            if r.central {
                p.central.push(idx);
            }
            p.rules.push(r);
        }
        Ok(p)
    }

    fn validate_rule(&self, r: &Rule, check_order: bool) -> Result<()> {
        let show = |w: &Word| self.format_word(w);
        if r.lhs.is_empty() {
            return Err(structural("rule with empty left-hand side"));
        }
        for g in r.lhs.letters().iter().chain(r.rhs.iter().flat_map(|(w, _)| w.letters())) {
            if g.index() >= self.gens.len() {
                return Err(structural(format!("rule mentions unknown generator #{}", g.0)));
            }
        }
        for (w, c) in &r.rhs {
            if c.arity() != self.ring.arity() {
                return Err(structural(format!("coefficient arity mismatch in rule for {}", show(&r.lhs))));
            }
            if check_order && self.cmp_words(w, &r.lhs) != Ordering::Less {
                return Err(structural(format!(
                    "rule {} → … is not oriented: right-hand word {} is not smaller",
                    show(&r.lhs),
                    show(w)
                )));
            }
            if r.central && self.weight(w) >= self.weight(&r.lhs) {
                return Err(structural(format!(
                    "central rule {} needs right-hand words of strictly smaller weight",
                    show(&r.lhs)
                )));
            }
        }
        Ok(())
    }

    /// Installs the ∗-images of the generators; they are reduced here.
    pub fn set_star(&mut self, images: Vec<Vec<(Word, Scalar)>>) -> Result<()> {
        if images.len() != self.gens.len() {
            return Err(structural("star images must be given for every generator"));
        }
        let mut out = Vec::with_capacity(images.len());
        for img in images {
            out.push(self.normalize(img)?);
        }
        self.star = Some(out);
        self.star_cache.clear();
        Ok(())
    }

    pub fn set_budget(&mut self, budget: usize) {
        self.budget = budget;
        self.cache.clear();
        self.plain_cache.clear();
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn arity(&self) -> usize {
        self.ring.arity()
    }

    pub fn generators(&self) -> &[GeneratorSpec] {
        &self.gens
    }

    pub fn num_generators(&self) -> usize {
        self.gens.len()
    }

    pub fn gen_ids(&self) -> impl Iterator<Item = GenId> {
        (0..self.gens.len() as u16).map(GenId)
    }

    pub fn rules(&self) -> &[Rule] {
        &self.rules
    }

    pub fn name(&self, g: GenId) -> &str {
        &self.gens[g.index()].name
    }

    pub fn gen(&self, name: &str) -> Option<GenId> {
        self.gens.iter().position(|g| g.name == name).map(|i| GenId(i as u16))
    }

    pub fn word(&self, names: &[&str]) -> Result<Word> {
        names
            .iter()
            .map(|n| self.gen(n).ok_or_else(|| structural(format!("unknown generator '{n}'"))))
            .collect::<Result<_>>()
            .map(Word)
    }

    pub fn has_star(&self) -> bool {
        self.star.is_some()
    }

    pub fn star_image(&self, g: GenId) -> Option<&Element> {
        self.star.as_ref().map(|s| &s[g.index()])
    }

    pub fn weight(&self, w: &Word) -> u32 {
        w.letters().iter().map(|g| self.gens[g.index()].weight).sum()
    }

    pub fn cmp_words(&self, a: &Word, b: &Word) -> Ordering {
        self.weight(a)
            .cmp(&self.weight(b))
            .then(a.len().cmp(&b.len()))
            .then_with(|| a.cmp(b))
    }

    pub fn format_word(&self, w: &Word) -> String {
        if w.is_empty() {
            return "1".into();
        }
        let names: Vec<&str> = w.letters().iter().map(|&g| self.name(g)).collect();
        names.join("·")
    }

    pub fn format_element(&self, e: &Element) -> String {
        if e.is_zero() {
            return "0".into();
        }
        let parts: Vec<String> = e
            .terms()
            .map(|(w, c)| format!("({})·{}", self.ring.format(c), self.format_word(w)))
            .collect();
        parts.join(" + ")
    }

    pub fn one(&self) -> Element {
        Element::word(Word::empty(), self.ring.one())
    }

    pub fn gen_element(&self, g: GenId) -> Result<Element> {
        self.reduce(&Word::gen(g))
    }

    /// Normal form of a word.
    pub fn reduce(&self, w: &Word) -> Result<Element> {
        self.reduce_mode(w, Mode::Full)
    }

    /// Normal form of `coeff · w`.
    pub fn reduce_scaled(&self, w: &Word, coeff: &Scalar) -> Result<Element> {
        Ok(self.reduce(w)?.scale(coeff))
    }

    /// Normal form of an arbitrary linear combination of words.
    pub fn normalize(&self, terms: impl IntoIterator<Item = (Word, Scalar)>) -> Result<Element> {
        let mut out = Element::zero();
        for (w, c) in terms {
            if c.is_zero() {
                continue;
            }
            out.add_scaled(&self.reduce(&w)?, &c);
        }
        Ok(out)
    }

    pub fn is_normal(&self, w: &Word) -> Result<bool> {
        Ok(self.rewrite_step(w, Mode::Full)?.is_none())
    }

    pub fn multiply(&self, x: &Element, y: &Element) -> Result<Element> {
        let mut out = Element::zero();
        for (a, c) in x.terms() {
            for (b, d) in y.terms() {
                out.add_scaled(&self.reduce(&a.concat(b))?, &c.mul(d));
            }
        }
        Ok(out)
    }

    fn reduce_mode(&self, top: &Word, mode: Mode) -> Result<Element> {
        let cache = match mode {
            Mode::Full => &self.cache,
            Mode::Plain => &self.plain_cache,
        };
        if let Some(hit) = cache.get(top) {
            return Ok(hit.clone());
        }
        // Greatest-first: every rewrite yields strictly smaller words, so each
        // word is popped once with its fully accumulated coefficient.
        let mut work: BTreeMap<(u32, usize, Word), Scalar> = BTreeMap::new();
        work.insert((self.weight(top), top.len(), top.clone()), self.ring.one());
        let mut out = Element::zero();
        let mut steps = 0usize;
        while let Some(((_, _, w), c)) = work.pop_last() {
            if c.is_zero() {
                continue;
            }
            if &w != top {
                if let Some(hit) = cache.get(&w) {
                    out.add_scaled(&hit, &c);
                    continue;
                }
            }
            match self.rewrite_step(&w, mode)? {
                None => out.add_term(w, c),
                Some(rhs) => {
                    steps += 1;
                    if steps > self.budget {
                        return Err(Error::Budget { word: self.format_word(top), budget: self.budget });
                    }
                    for (w2, c2) in rhs {
                        let k = c.mul(&c2);
                        let key = (self.weight(&w2), w2.len(), w2);
                        match work.get_mut(&key) {
                            Some(acc) => *acc = acc.add(&k),
                            None => {
                                work.insert(key, k);
                            }
                        }
                    }
                }
            }
        }
        cache.insert(top.clone(), out.clone());
        Ok(out)
    }

    /// One rewrite of `w`: the leftmost ordinary match, else a central rule.
    fn rewrite_step(&self, w: &Word, mode: Mode) -> Result<Option<Vec<(Word, Scalar)>>> {
        let letters = w.letters();
        for pos in 0..letters.len() {
            for &ri in &self.by_first[letters[pos].index()] {
                let r = &self.rules[ri];
                if mode == Mode::Plain && r.central {
                    continue;
                }
                let l = r.lhs.letters();
                if letters[pos..].starts_with(l) {
                    let (pre, post) = (&letters[..pos], &letters[pos + l.len()..]);
                    return Ok(Some(
                        r.rhs
                            .iter()
                            .map(|(rw, c)| (Word::concat3(pre, rw.letters(), post), c.clone()))
                            .collect(),
                    ));
                }
            }
        }
        if mode == Mode::Full {
            for &ri in &self.central {
                if let Some(out) = self.central_step(w, &self.rules[ri])? {
                    return Ok(Some(out));
                }
            }
        }
        Ok(None)
    }

    fn central_step(&self, w: &Word, r: &Rule) -> Result<Option<Vec<(Word, Scalar)>>> {
        let mut rest: Vec<GenId> = w.letters().to_vec();
        for g in r.lhs.letters() {
            match rest.iter().position(|h| h == g) {
                Some(i) => {
                    rest.remove(i);
                }
                None => return Ok(None),
            }
        }
        let p = self.reduce_mode(&Word::concat3(&rest, r.lhs.letters(), &[]), Mode::Plain)?;
        let lead = p.coeff(w).and_then(|c| c.inv()).ok_or_else(|| {
            structural(format!(
                "central rule {} does not reproduce {} as a unit multiple",
                self.format_word(&r.lhs),
                self.format_word(w)
            ))
        })?;
        let mut out: Vec<(Word, Scalar)> = r
            .rhs
            .iter()
            .map(|(rw, c)| (Word::concat3(&rest, rw.letters(), &[]), c.mul(&lead)))
            .collect();
        out.extend(p.terms().filter(|(pw, _)| *pw != w).map(|(pw, c)| (pw.clone(), c.mul(&lead).neg())));
        Ok(Some(out))
    }

    /// All normal words of length at most `max_len`, in term order.
    pub fn basis_words(&self, max_len: usize) -> Result<Vec<Word>> {
        let mut all = vec![Word::empty()];
        let mut level = vec![Word::empty()];
        for _ in 0..max_len {
            let mut next = Vec::new();
            for w in &level {
                for g in self.gen_ids() {
                    let mut x = w.clone();
                    x.0.push(g);
                    if self.is_normal(&x)? {
                        next.push(x);
                    }
                }
            }
            all.extend(next.iter().cloned());
            level = next;
        }
        all.sort_by(|a, b| self.cmp_words(a, b));
        Ok(all)
    }

    /// The ∗-image of a word: reversed product of generator images.
    pub fn star_word(&self, w: &Word) -> Result<Element> {
        let images = self.star.as_ref().ok_or_else(|| structural("no ∗-structure declared"))?;
        if w.is_empty() {
            return Ok(self.one());
        }
        if let Some(hit) = self.star_cache.get(w) {
            return Ok(hit.clone());
        }
        let last = w.letters()[w.len() - 1];
        let head = self.star_word(&w.prefix(w.len() - 1))?;
        let out = self.multiply(&images[last.index()], &head)?;
        self.star_cache.insert(w.clone(), out.clone());
        Ok(out)
    }

    /// Antilinear extension of the ∗-structure.
    pub fn star_element(&self, x: &Element) -> Result<Element> {
        let mut out = Element::zero();
        for (w, c) in x.terms() {
            out.add_scaled(&self.star_word(w)?, &c.star());
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn laurent() -> Presentation {
        let ring = Ring::default();
        let one = Scalar::one(0);
        let rules = vec![
            Rule { lhs: Word::from_ids(&[0, 1]), rhs: vec![(Word::empty(), one.clone())], central: false },
            Rule { lhs: Word::from_ids(&[1, 0]), rhs: vec![(Word::empty(), one)], central: false },
        ];
        Presentation::new(ring, vec![GeneratorSpec::new("z"), GeneratorSpec::new("z^-1")], rules).unwrap()
    }

    #[test]
    fn inverse_pairs_cancel() {
        let p = laurent();
        let e = p.reduce(&Word::from_ids(&[0, 0, 1, 1, 0])).unwrap();
        assert_eq!(e, Element::word(Word::from_ids(&[0]), Scalar::one(0)));
        assert_eq!(p.reduce(&Word::empty()).unwrap(), p.one());
    }

    #[test]
    fn basis_is_powers() {
        let p = laurent();
        let b = p.basis_words(3).unwrap();
        assert_eq!(b.len(), 7);
    }

    #[test]
    fn rejects_unoriented_and_empty() {
        let ring = Ring::default();
        let bad = vec![Rule {
            lhs: Word::from_ids(&[0, 1]),
            rhs: vec![(Word::from_ids(&[1, 0]), Scalar::one(0))],
            central: false,
        }];
        let gens = vec![GeneratorSpec::new("a"), GeneratorSpec::new("b")];
        assert!(Presentation::new(ring.clone(), gens, bad).is_err());
        assert!(Presentation::new(ring, vec![], vec![]).is_err());
    }

    #[test]
    fn cyclic_system_exhausts_budget() {
        let ring = Ring::default();
        let one = Scalar::one(0);
        let rules = vec![
            Rule { lhs: Word::from_ids(&[1, 0]), rhs: vec![(Word::from_ids(&[0, 1]), one.clone())], central: false },
            Rule {
                lhs: Word::from_ids(&[0, 1]),
                rhs: vec![(Word::empty(), one.clone()), (Word::from_ids(&[1, 0]), one)],
                central: false,
            },
        ];
        let gens = vec![GeneratorSpec::new("a"), GeneratorSpec::new("b")];
        let mut p = Presentation::new_unoriented(ring, gens, rules).unwrap();
        p.set_budget(1000);
        assert!(matches!(p.reduce(&Word::from_ids(&[1, 0])), Err(Error::Budget { .. })));
    }
}
