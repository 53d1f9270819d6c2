//! Human-readable tables of structure maps, and their JSON form.
//!
//! Twist phases print as `e^{kiφ}` (further twist variables use η, θ, …).
//! In a twisted algebra a word is shown as the ∗-product of its letters, so a
//! root word `w` with coefficient `c` prints as `c·u^{−Θ(w)}` times `g₁∗⋯∗g_k`.

use std::cmp::Ordering;
use std::collections::BTreeMap;

use serde_json::{json, Value as Json};

use crate::catalog::CatalogEntry;
use crate::error::Result;
use crate::freealg::{Element, GenId, Tensor, Word};
use crate::hopf::HopfStructure;
use crate::scalars::{Monomial, Scalar};
use crate::twist::{twisted_relations, DisplayRelation, RelationSide};

const PHASE_SYMBOLS: [&str; 6] = ["φ", "η", "θ", "χ", "ω", "ϑ"];

#[derive(Clone, Copy, PartialEq, Eq, Debug, PartialOrd, Ord)]
pub enum Section {
    Relations,
    Coproduct,
    Antipode,
    Braiding,
    Star,
    Degrees,
}

impl Section {
    pub const ALL: [Section; 6] =
        [Section::Relations, Section::Coproduct, Section::Antipode, Section::Braiding, Section::Star, Section::Degrees];

    pub fn name(self) -> &'static str {
        match self {
            Section::Relations => "relations",
            Section::Coproduct => "coproduct",
            Section::Antipode => "antipode",
            Section::Braiding => "braiding",
            Section::Star => "star",
            Section::Degrees => "degrees",
        }
    }

    pub fn parse(s: &str) -> Option<Section> {
        Section::ALL.into_iter().find(|x| x.name() == s)
    }
}

/// How words and scalars of one algebra are printed.
pub struct Style<'a> {
    h: &'a dyn HopfStructure,
    names: Vec<String>,
    sep: &'static str,
    /// Ring index of each twist variable, in twisting order.
    twist_vars: Vec<usize>,
    twisted: bool,
}

impl<'a> Style<'a> {
    /// `names` overrides generator names (used for the twisted algebra).
    pub fn new(h: &'a dyn HopfStructure, names: Option<&[String]>) -> Style<'a> {
        let p = h.presentation();
        let root_arity = h.root().ring().arity();
        let twist_vars: Vec<usize> = (root_arity..h.arity()).collect();
        let twisted = !twist_vars.is_empty();
        let names: Vec<String> = match names {
            Some(n) if twisted => n.to_vec(),
            _ => p.generators().iter().map(|g| g.name.clone()).collect(),
        };
        let short = names.iter().all(|n| n.trim_end_matches('*').chars().count() == 1);
        let sep = if twisted {
            "∗"
        } else if short {
            ""
        } else {
            "·"
        };
        Style { h, names, sep, twist_vars, twisted }
    }

    pub fn is_twisted(&self) -> bool {
        self.twisted
    }

    pub fn gen(&self, g: GenId) -> &str {
        &self.names[g.index()]
    }

    pub fn word(&self, w: &Word) -> String {
        if w.is_empty() {
            return "1".into();
        }
        let parts: Vec<&str> = w.letters().iter().map(|&g| self.gen(g)).collect();
        parts.join(self.sep)
    }

    fn phase_factor(&self, k: usize, e: i32) -> String {
        let sym = PHASE_SYMBOLS.get(k).map(|s| s.to_string()).unwrap_or_else(|| format!("φ{}", k + 1));
        match e {
            1 => format!("e^{{i{sym}}}"),
            -1 => format!("e^{{-i{sym}}}"),
            _ => format!("e^{{{e}i{sym}}}"),
        }
    }

    /// One ring term without its twist phases: `q`, `-q^-1`, `3/2 t`, …
    fn plain_term(&self, m: &Monomial, c: &crate::scalars::GaussRational) -> (bool, String) {
        let ring = self.h.ring();
        let mut factors = Vec::new();
        if m.q != 0 {
            factors.push(if m.q == 1 { "q".to_string() } else { format!("q^{}", m.q) });
        }
        for (j, &e) in m.phases.iter().enumerate() {
            if e != 0 && !self.twist_vars.contains(&j) {
                let v = &ring.phases()[j];
                factors.push(if e == 1 { v.clone() } else { format!("{v}^{e}") });
            }
        }
        let (neg, c) = if c.is_negative_simple() { (true, c.neg()) } else { (false, *c) };
        let mut s = factors.join(" ");
        if !c.is_one() || s.is_empty() {
            s = if s.is_empty() { c.to_string() } else { format!("{c} {s}") };
        }
        (neg, s)
    }

    /// A scalar with phases as `e^{kiφ}`.
    pub fn scalar(&self, s: &Scalar) -> String {
        if s.is_zero() {
            return "0".into();
        }
        // group terms by twist exponents
        let mut groups: BTreeMap<Vec<i32>, Vec<(bool, String)>> = BTreeMap::new();
        for (m, c) in s.terms() {
            let key: Vec<i32> = self.twist_vars.iter().map(|&j| m.phases[j]).collect();
            groups.entry(key).or_default().push(self.plain_term(m, c));
        }
        let mut out = String::new();
        for (gi, (key, terms)) in groups.iter().enumerate() {
            let phase: Vec<String> = key
                .iter()
                .enumerate()
                .filter(|(_, e)| **e != 0)
                .map(|(k, &e)| self.phase_factor(k, e))
                .collect();
            let phase = phase.join(" ");
            let (neg, body) = if terms.len() == 1 {
                let (neg, t) = &terms[0];
                let t = if t == "1" && !phase.is_empty() { String::new() } else { t.clone() };
                (*neg, t)
            } else {
                let mut inner = String::new();
                for (k, (neg, t)) in terms.iter().enumerate() {
                    match (k, neg) {
                        (0, true) => inner.push_str(&format!("-{t}")),
                        (0, false) => inner.push_str(t),
                        (_, true) => inner.push_str(&format!(" - {t}")),
                        (_, false) => inner.push_str(&format!(" + {t}")),
                    }
                }
                (false, if phase.is_empty() { inner } else { format!("({inner})") })
            };
            let piece = match (body.is_empty(), phase.is_empty()) {
                (true, _) => phase,
                (false, true) => body,
                (false, false) => format!("{body} {phase}"),
            };
            match (gi, neg) {
                (0, true) => out.push_str(&format!("-{piece}")),
                (0, false) => out.push_str(&piece),
                (_, true) => out.push_str(&format!(" - {piece}")),
                (_, false) => out.push_str(&format!(" + {piece}")),
            }
        }
        out
    }

    /// Coefficient of a term in front of a word: "" for 1, "-" for -1.
    fn coeff_prefix(&self, c: &Scalar, with_word: bool) -> (bool, String) {
        let s = self.scalar(c);
        let single = !is_sum(&s);
        let (neg, body) = match s.strip_prefix('-') {
            Some(rest) if single => (true, rest.to_string()),
            _ => (false, s),
        };
        if !with_word {
            return (neg, body);
        }
        let body = if body == "1" {
            String::new()
        } else if single {
            format!("{body} ")
        } else {
            format!("({body}) ")
        };
        (neg, body)
    }

    fn join_terms(parts: Vec<(bool, String)>) -> String {
        if parts.is_empty() {
            return "0".into();
        }
        let mut out = String::new();
        for (k, (neg, t)) in parts.into_iter().enumerate() {
            match (k, neg) {
                (0, true) => out.push_str(&format!("-{t}")),
                (0, false) => out.push_str(&t),
                (_, true) => out.push_str(&format!(" - {t}")),
                (_, false) => out.push_str(&format!(" + {t}")),
            }
        }
        out
    }

    /// The ∗-monomial form of a root word term.
    pub fn dressed(&self, w: &Word, c: &Scalar) -> Scalar {
        match (self.twisted, self.h.grading()) {
            (true, Some(g)) => c.mul(&self.h.twist_phase(-g.word_cocycle_exponent(w))),
            _ => c.clone(),
        }
    }

    fn term(&self, w: &Word, c: &Scalar) -> (bool, String) {
        if w.is_empty() {
            return self.coeff_prefix(c, false);
        }
        let (neg, pre) = self.coeff_prefix(c, true);
        (neg, format!("{pre}{}", self.word(w)))
    }

    /// Terms in ascending term order.
    pub fn element(&self, e: &Element) -> String {
        let p = self.h.presentation();
        let mut terms: Vec<(&Word, &Scalar)> = e.terms().collect();
        terms.sort_by(|a, b| p.cmp_words(a.0, b.0));
        Self::join_terms(terms.into_iter().map(|(w, c)| self.term(w, &self.dressed(w, c))).collect())
    }

    fn side(&self, side: &RelationSide) -> String {
        Self::join_terms(side.iter().map(|(c, w)| self.term(w, c)).collect())
    }

    pub fn relation(&self, r: &DisplayRelation) -> String {
        format!("{} = {}", self.side(&r.lhs), self.side(&r.rhs))
    }

    /// Terms sorted by their legs read from the right, in generator order.
    pub fn tensor(&self, t: &Tensor) -> String {
        let mut terms: Vec<_> = t.terms().collect();
        terms.sort_by(|a, b| cmp_legs(a.0, b.0));
        let parts = terms
            .into_iter()
            .map(|(legs, c)| {
                let dressed = legs.iter().fold(c.clone(), |acc, w| self.dressed(w, &acc));
                let (neg, pre) = self.coeff_prefix(&dressed, true);
                let body: Vec<String> = legs.iter().map(|w| self.word(w)).collect();
                (neg, format!("{pre}{}", body.join(" ⊗ ")))
            })
            .collect();
        Self::join_terms(parts)
    }
}

/// Whether `s` has a ` + ` or ` - ` outside parentheses.
fn is_sum(s: &str) -> bool {
    let b = s.as_bytes();
    let mut depth = 0;
    for (i, &ch) in b.iter().enumerate() {
        match ch {
            b'(' | b'{' => depth += 1,
            b')' | b'}' => depth -= 1,
            b'+' | b'-' if depth == 0 && i > 0 && b[i - 1] == b' ' && b.get(i + 1) == Some(&b' ') => return true,
            _ => {}
        }
    }
    false
}

fn cmp_legs(a: &[Word], b: &[Word]) -> Ordering {
    a.iter().rev().cmp(b.iter().rev())
}

/// Rendered tables: one text block per section plus the JSON document.
pub struct Tables {
    pub text: String,
    pub json: Json,
}

fn visible(h: &dyn HopfStructure, show_hidden: bool) -> Vec<GenId> {
    let p = h.presentation();
    p.gen_ids().filter(|g| show_hidden || !p.generators()[g.index()].hidden).collect()
}

fn word_json(h: &dyn HopfStructure, w: &Word) -> Json {
    let p = h.presentation();
    Json::Array(w.letters().iter().map(|&g| json!(p.name(g))).collect())
}

fn element_json(st: &Style, e: &Element) -> Json {
    let ring = st.h.ring();
    let p = st.h.presentation();
    let mut terms: Vec<(&Word, &Scalar)> = e.terms().collect();
    terms.sort_by(|a, b| p.cmp_words(a.0, b.0));
    Json::Array(
        terms
            .into_iter()
            .map(|(w, c)| json!({"coeff": ring.format(&st.dressed(w, c)), "word": word_json(st.h, w)}))
            .collect(),
    )
}

fn side_json(h: &dyn HopfStructure, side: &RelationSide) -> Json {
    Json::Array(side.iter().map(|(c, w)| json!({"coeff": h.ring().format(c), "word": word_json(h, w)})).collect())
}

/// Renders the requested sections of `h` (the root of `entry`, or a twist of it).
pub fn render(entry: &CatalogEntry, h: &dyn HopfStructure, sections: &[Section], show_hidden: bool) -> Result<Tables> {
    let st = Style::new(h, Some(&entry.twisted_names));
    let p = h.presentation();
    let ring = h.ring();
    let gens = visible(h, show_hidden);
    let is_hidden = |w: &Word| w.letters().iter().any(|g| p.generators()[g.index()].hidden);
    let mut text = String::new();
    let mut doc = serde_json::Map::new();
    doc.insert("algebra".into(), json!(entry.name));
    doc.insert("twisted".into(), json!(st.is_twisted()));
    doc.insert("phaseVars".into(), json!(st.twist_vars.iter().map(|&j| ring.phases()[j].clone()).collect::<Vec<_>>()));
    let title = if st.is_twisted() {
        let vars: Vec<String> = st
            .twist_vars
            .iter()
            .enumerate()
            .map(|(k, &j)| format!("{} = e^{{i{}}}", ring.phases()[j], PHASE_SYMBOLS.get(k).unwrap_or(&"?")))
            .collect();
        format!("twisted {} ({})\n", entry.name, vars.join(", "))
    } else {
        format!("{}\n", entry.name)
    };
    text.push_str(&title);
    let dsub = if st.is_twisted() { "_φ" } else { "" };

    for &sec in sections {
        text.push('\n');
        text.push_str(sec.name());
        text.push('\n');
        match sec {
            Section::Relations => {
                let rels = if st.is_twisted() { twisted_relations(h, &entry.relations) } else { entry.relations.clone() };
                let rels: Vec<_> = rels.into_iter().filter(|r| show_hidden || !r.words().any(&is_hidden)).collect();
                for r in &rels {
                    text.push_str(&format!("  {}\n", st.relation(r)));
                }
                doc.insert(
                    "relations".into(),
                    Json::Array(rels.iter().map(|r| json!({"lhs": side_json(h, &r.lhs), "rhs": side_json(h, &r.rhs)})).collect()),
                );
            }
            Section::Coproduct => {
                let mut m = serde_json::Map::new();
                for &g in &gens {
                    let t = h.coproduct_word(&Word::gen(g))?;
                    text.push_str(&format!("  Δ{dsub}({}) = {}\n", st.gen(g), st.tensor(&t)));
                    let mut terms: Vec<_> = t.terms().collect();
                    terms.sort_by(|a, b| cmp_legs(a.0, b.0));
                    let js: Vec<Json> = terms
                        .into_iter()
                        .map(|(l, c)| {
                            let c = st.dressed(&l[1], &st.dressed(&l[0], c));
                            json!({"coeff": ring.format(&c), "left": word_json(h, &l[0]), "right": word_json(h, &l[1])})
                        })
                        .collect();
                    m.insert(p.name(g).into(), Json::Array(js));
                }
                doc.insert("coproduct".into(), Json::Object(m));
            }
            Section::Antipode => {
                let mut m = serde_json::Map::new();
                for &g in &gens {
                    let s = h.antipode_word(&Word::gen(g))?;
                    text.push_str(&format!("  S{dsub}({}) = {}\n", st.gen(g), st.element(&s)));
                    m.insert(p.name(g).into(), element_json(&st, &s));
                }
                doc.insert("antipode".into(), Json::Object(m));
            }
            Section::Braiding => {
                let mut rows = Vec::new();
                for &x in &gens {
                    for &y in &gens {
                        let ph = h.braiding_phase(&Word::gen(x), &Word::gen(y));
                        if !ph.is_one() {
                            text.push_str(&format!("  ψ({}, {}) = {}\n", st.gen(x), st.gen(y), st.scalar(&ph)));
                            rows.push(json!({"x": p.name(x), "y": p.name(y), "phase": ring.format(&ph)}));
                        }
                    }
                }
                text.push_str(if rows.is_empty() { "  ψ = 1 on all generator pairs\n" } else { "  ψ = 1 on all other generator pairs\n" });
                doc.insert("braiding".into(), Json::Array(rows));
            }
            Section::Star => {
                let mut m = serde_json::Map::new();
                if !h.has_star() {
                    text.push_str("  no ∗-structure\n");
                }
                for &g in gens.iter().filter(|_| h.has_star()) {
                    let s = h.star_word(&Word::gen(g))?;
                    text.push_str(&format!("  ({})* = {}\n", st.gen(g), st.element(&s)));
                    m.insert(p.name(g).into(), element_json(&st, &s));
                }
                doc.insert("star".into(), Json::Object(m));
            }
            Section::Degrees => {
                let mut m = serde_json::Map::new();
                match h.grading() {
                    None => text.push_str("  no character\n"),
                    Some(gr) => {
                        for &g in &gens {
                            let d = gr.degrees[g.index()];
                            let img = crate::grading::Character::format_image(gr.character.images[g.index()]);
                            text.push_str(&format!(
                                "  {}: α = {img}, μ = {}, ν = {}, δ = {}\n",
                                st.gen(g),
                                d.mu,
                                d.nu,
                                d.delta()
                            ));
                            m.insert(p.name(g).into(), json!({"alpha": img, "mu": d.mu, "nu": d.nu, "delta": d.delta()}));
                        }
                    }
                }
                doc.insert("degrees".into(), Json::Object(m));
            }
        }
    }
    Ok(Tables { text, json: Json::Object(doc) })
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::catalog;
    use crate::twist::twist;

    #[test]
    fn phase_printing() {
        let e = catalog::suq2().unwrap();
        let t = twist(e.hopf.clone(), "u").unwrap();
        let st = Style::new(&t, Some(&e.twisted_names));
        let r = t.ring();
        assert_eq!(st.scalar(&r.parse("q*u^4").unwrap()), "q e^{4iφ}");
        assert_eq!(st.scalar(&r.parse("-q^-1*u^-4").unwrap()), "-q^-1 e^{-4iφ}");
        assert_eq!(st.scalar(&r.parse("u").unwrap()), "e^{iφ}");
        assert_eq!(st.scalar(&r.parse("-u^-1").unwrap()), "-e^{-iφ}");
        assert_eq!(st.scalar(&r.parse("q*u^2 - q^-1*u^2").unwrap()), "(-q^-1 + q) e^{2iφ}");
        assert_eq!(st.scalar(&r.parse("2 + u^2").unwrap()), "2 + e^{2iφ}");
        assert_eq!(st.scalar(&r.parse("1").unwrap()), "1");
    }

    #[test]
    fn untwisted_names_are_juxtaposed() {
        let e = catalog::suq2().unwrap();
        let h: Arc<dyn HopfStructure> = e.hopf.clone();
        let st = Style::new(h.as_ref(), Some(&e.twisted_names));
        let p = h.presentation();
        assert_eq!(st.word(&p.word(&["a*", "b"]).unwrap()), "a*b");
        let s = h.antipode_word(&p.word(&["b"]).unwrap()).unwrap();
        assert_eq!(st.element(&s), "-q b");
    }
}
