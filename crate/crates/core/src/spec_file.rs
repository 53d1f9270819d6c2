//! JSON spec files describing a Hopf ∗-algebra with a character.
//!
//! ```text
//! {
//!   "name": "suq2",
//!   "parameters": ["t"],                        // extra ring variables besides q
//!   "generators": [{"name": "a", "star": "a*", "weight": 2, "hidden": false}, …],
//!   "order": ["a", "a*", "b", "b*"],            // term order; defaults to list order
//!   "relations": [{"lhs": ["b", "a"], "rhs": [{"coeff": "q^-1", "word": ["a", "b"]}]}, …],
//!   "coproduct": {"a": [{"coeff": "1", "left": ["a"], "right": ["a"]}, …], …},
//!   "counit": {"a": "1", …},
//!   "antipode": {"a": "a*", "b": "-q b", …},
//!   "character": {"a": "z^1", "b": "0", …},
//!   "display": {"a": "α", …}                    // optional names for the twisted algebra
//! }
//! ```
//!
//! Element literals are either a list `[{coeff, word}]` or a string of terms
//! separated by ` + ` / ` - `, each term a scalar followed by generator names
//! (`-q^-1 b*`, `1 - b b*`, `(q - q^-1) a b`). A `star` entry may name a
//! generator or hold an element literal.
//!
//! Comments and trailing commas are accepted.

use std::sync::Arc;

use jsonc_parser::ast::{Array, Object, ObjectProp, Value};
use jsonc_parser::common::Ranged;
use jsonc_parser::{CollectOptions, ParseOptions};
use serde_json::{json, Map as JsonMap, Value as Json};

use crate::catalog::CatalogEntry;
use crate::error::{Diagnostic, Error, Result};
use crate::freealg::{Element, GeneratorSpec, Presentation, Rule, Word};
use crate::grading::{generator_degrees, Character, Grading};
use crate::hopf::{HopfAlgebra, HopfData, HopfStructure};
use crate::scalars::{Ring, Scalar};
use crate::twist::DisplayRelation;

const KNOWN_FIELDS: [&str; 11] = [
    "name",
    "parameters",
    "generators",
    "order",
    "relations",
    "coproduct",
    "counit",
    "antipode",
    "character",
    "display",
    "maxLen",
];

struct Ctx<'t> {
    text: &'t str,
    diags: Vec<Diagnostic>,
}

impl<'t> Ctx<'t> {
    fn err(&mut self, at: usize, msg: impl Into<String>) {
        let (line, column) = line_col(self.text, at);
        self.diags.push(Diagnostic { line, column, message: msg.into() });
    }

    fn string<'a>(&mut self, v: &'a Value<'_>, what: &str) -> Option<&'a str> {
        match v {
            Value::StringLit(s) => Some(s.value.as_ref()),
            _ => {
                self.err(v.start(), format!("{what} must be a string"));
                None
            }
        }
    }

    fn array<'a, 'b>(&mut self, v: &'a Value<'b>, what: &str) -> Option<&'a Array<'b>> {
        match v {
            Value::Array(a) => Some(a),
            _ => {
                self.err(v.start(), format!("{what} must be a list"));
                None
            }
        }
    }

    fn object<'a, 'b>(&mut self, v: &'a Value<'b>, what: &str) -> Option<&'a Object<'b>> {
        match v {
            Value::Object(o) => Some(o),
            _ => {
                self.err(v.start(), format!("{what} must be an object"));
                None
            }
        }
    }
}

fn line_col(text: &str, at: usize) -> (usize, usize) {
    let at = at.min(text.len());
    let before = &text[..at];
    let line = before.matches('\n').count() + 1;
    let col = before.rsplit('\n').next().map_or(0, |l| l.chars().count()) + 1;
    (line, col)
}

fn prop<'a, 'b>(o: &'a Object<'b>, name: &str) -> Option<&'a ObjectProp<'b>> {
    o.properties.iter().find(|p| p.name.as_str() == name)
}

/// Generator names in declaration order plus their positions.
struct Names {
    names: Vec<String>,
    /// Position of generator `i` in the term order.
    slot: Vec<usize>,
}

impl Names {
    fn id(&self, name: &str) -> Option<u16> {
        self.names.iter().position(|n| n == name).map(|i| self.slot[i] as u16)
    }
}

fn word(ctx: &mut Ctx, names: &Names, v: &Value) -> Option<Word> {
    let arr = ctx.array(v, "a word")?;
    let mut ids = Vec::new();
    let mut ok = true;
    for e in &arr.elements {
        let Some(s) = ctx.string(e, "a generator name") else {
            ok = false;
            continue;
        };
        match names.id(s) {
            Some(i) => ids.push(i),
            None => {
                ctx.err(e.start(), format!("unknown generator '{s}'"));
                ok = false;
            }
        }
    }
    ok.then(|| Word::from_ids(&ids))
}

fn scalar(ctx: &mut Ctx, ring: &Ring, v: &Value) -> Option<Scalar> {
    let text = match v {
        Value::NumberLit(n) => n.value.to_string(),
        _ => ctx.string(v, "a coefficient")?.to_string(),
    };
    match ring.parse(&text) {
        Ok(c) => Some(c),
        Err(e) => {
            ctx.err(v.start(), format!("bad scalar literal '{text}': {e}"));
            None
        }
    }
}

/// Splits at whitespace outside parentheses.
fn tokens(s: &str) -> Vec<&str> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut start = None;
    for (i, ch) in s.char_indices() {
        match ch {
            '(' => depth += 1,
            ')' => depth -= 1,
            _ => {}
        }
        if ch.is_whitespace() && depth == 0 {
            if let Some(st) = start.take() {
                out.push(&s[st..i]);
            }
        } else if start.is_none() {
            start = Some(i);
        }
    }
    if let Some(st) = start {
        out.push(&s[st..]);
    }
    out
}

fn parse_element_text(text: &str, ring: &Ring, names: &Names) -> std::result::Result<Vec<(Word, Scalar)>, String> {
    let toks = tokens(text);
    if toks.is_empty() {
        return Err("empty element literal".into());
    }
    let mut terms = Vec::new();
    let mut i = 0;
    let mut sign = 1;
    if toks[0] == "-" || toks[0] == "+" {
        sign = if toks[0] == "-" { -1 } else { 1 };
        i = 1;
    }
    loop {
        let mut coeff: Vec<&str> = Vec::new();
        let mut ids = Vec::new();
        while i < toks.len() && toks[i] != "+" && toks[i] != "-" {
            let t = toks[i];
            match names.id(t) {
                Some(g) => ids.push(g),
                None if ids.is_empty() => coeff.push(t),
                None => return Err(format!("'{t}' is neither a generator nor allowed after one")),
            }
            i += 1;
        }
        if coeff.is_empty() && ids.is_empty() {
            return Err("missing term".into());
        }
        let mut c = if coeff.is_empty() { ring.one() } else { parse_coeff(ring, &coeff)? };
        if sign < 0 {
            c = c.neg();
        }
        terms.push((Word::from_ids(&ids), c));
        if i >= toks.len() {
            break;
        }
        sign = if toks[i] == "-" { -1 } else { 1 };
        i += 1;
        if i >= toks.len() {
            return Err("dangling sign".into());
        }
    }
    Ok(terms)
}

fn parse_coeff(ring: &Ring, parts: &[&str]) -> std::result::Result<Scalar, String> {
    let mut acc = ring.one();
    for p in parts {
        let inner = p.strip_prefix('(').and_then(|s| s.strip_suffix(')'));
        let c = match ring.parse(p) {
            Ok(c) => c,
            Err(e) => match inner {
                Some(s) => ring.parse(s).map_err(|_| e)?,
                None => return Err(format!("'{p}': {e}")),
            },
        };
        acc = acc.mul(&c);
    }
    Ok(acc)
}

fn element(ctx: &mut Ctx, ring: &Ring, names: &Names, v: &Value) -> Option<Vec<(Word, Scalar)>> {
    match v {
        Value::StringLit(s) => match parse_element_text(&s.value, ring, names) {
            Ok(t) => Some(t),
            Err(e) => {
                ctx.err(v.start(), format!("bad element literal '{}': {e}", s.value));
                None
            }
        },
        Value::Array(arr) => {
            let mut out = Vec::new();
            let mut ok = true;
            for e in &arr.elements {
                let Some(o) = ctx.object(e, "an element term") else {
                    ok = false;
                    continue;
                };
                let c = term_field(ctx, o, e, "coeff").and_then(|c| scalar(ctx, ring, c));
                let w = term_field(ctx, o, e, "word").and_then(|w| word(ctx, names, w));
                match (c, w) {
                    (Some(c), Some(w)) => out.push((w, c)),
                    _ => ok = false,
                }
            }
            ok.then_some(out)
        }
        _ => {
            ctx.err(v.start(), "an element must be a string or a list of {coeff, word} terms");
            None
        }
    }
}

fn term_field<'a, 'b>(ctx: &mut Ctx, o: &'a Object<'b>, at: &Value, key: &str) -> Option<&'a Value<'b>> {
    let found = prop(o, key).map(|p| &p.value);
    if found.is_none() {
        ctx.err(at.start(), format!("missing field '{key}'"));
    }
    found
}

/// Per-generator map `{gen: value}` with every generator present.
fn per_generator<'a, 'b, T>(
    ctx: &mut Ctx,
    names: &Names,
    o: &'a Object<'b>,
    what: &str,
    mut f: impl FnMut(&mut Ctx, &'a Value<'b>) -> Option<T>,
) -> Option<Vec<T>> {
    let n = names.names.len();
    let mut out: Vec<Option<T>> = (0..n).map(|_| None).collect();
    let mut ok = true;
    for p in &o.properties {
        let key = p.name.as_str();
        match names.id(key) {
            None => {
                ctx.err(p.name.start(), format!("unknown generator '{key}' in {what}"));
                ok = false;
            }
            Some(i) if out[i as usize].is_some() => {
                ctx.err(p.name.start(), format!("{what} of '{key}' given twice"));
                ok = false;
            }
            Some(i) => match f(ctx, &p.value) {
                Some(v) => out[i as usize] = Some(v),
                None => ok = false,
            },
        }
    }
    let mut missing = Vec::new();
    for (slot, v) in out.iter().enumerate() {
        if v.is_none() {
            let decl = names.slot.iter().position(|&s| s == slot).unwrap_or(slot);
            missing.push(names.names[decl].clone());
        }
    }
    if ok && !missing.is_empty() {
        ctx.err(o.start(), format!("{what} is missing for {}", missing.join(", ")));
        ok = false;
    }
    if ok {
        Some(out.into_iter().map(|v| v.expect("all present")).collect())
    } else {
        None
    }
}

fn character_image(ctx: &mut Ctx, v: &Value) -> Option<Option<i32>> {
    let s = ctx.string(v, "a character value")?.trim().to_string();
    let parsed = match s.as_str() {
        "0" => Ok(None),
        "1" => Ok(Some(0)),
        "z" => Ok(Some(1)),
        _ => s
            .strip_prefix("z^")
            .map(|k| k.trim_start_matches('(').trim_end_matches(')'))
            .and_then(|k| k.parse::<i32>().ok())
            .map(Some)
            .ok_or(()),
    };
    match parsed {
        Ok(x) => Some(x),
        Err(()) => {
            ctx.err(v.start(), format!("character value '{s}' is not z^k or 0"));
            None
        }
    }
}

/// Parses and validates a spec file into a catalog-style entry.
pub fn parse(text: &str) -> Result<CatalogEntry> {
    let ast = match jsonc_parser::parse_to_ast(text, &CollectOptions::default(), &ParseOptions::default()) {
        Ok(r) => r,
        Err(e) => {
            return Err(Error::Parse(vec![Diagnostic {
                line: e.line_display(),
                column: e.column_display(),
                message: e.kind().to_string(),
            }]))
        }
    };
    let mut ctx = Ctx { text, diags: Vec::new() };
    let Some(root) = ast.value else {
        ctx.err(0, "empty document");
        return Err(Error::Parse(ctx.diags));
    };
    let out = build(&mut ctx, &root);
    match out {
        Some(e) if ctx.diags.is_empty() => Ok(e),
        _ => {
            if ctx.diags.is_empty() {
                ctx.err(root.start(), "invalid spec file");
            }
            Err(Error::Parse(ctx.diags))
        }
    }
}

fn build(ctx: &mut Ctx, root: &Value) -> Option<CatalogEntry> {
    let top = ctx.object(root, "the document")?;
    for p in &top.properties {
        if !KNOWN_FIELDS.contains(&p.name.as_str()) {
            ctx.err(p.name.start(), format!("unknown field '{}'", p.name.as_str()));
        }
    }
    let need = |ctx: &mut Ctx, key: &str| -> Option<&Value> {
        let v = prop(top, key).map(|p| &p.value);
        if v.is_none() {
            ctx.err(top.start(), format!("missing field '{key}'"));
        }
        v
    };
    let label = match prop(top, "name") {
        Some(p) => ctx.string(&p.value, "name")?.to_string(),
        None => "spec".to_string(),
    };

    let mut ring = Ring::default();
    if let Some(p) = prop(top, "parameters") {
        let arr = ctx.array(&p.value, "parameters")?;
        for e in &arr.elements {
            let name = ctx.string(e, "a parameter name")?;
            match ring.extend(name) {
                Ok(r) => ring = r,
                Err(err) => ctx.err(e.start(), err.to_string()),
            }
        }
    }

    // generators and term order
    let gens_v = need(ctx, "generators")?;
    let gens_arr = ctx.array(gens_v, "generators")?;
    if gens_arr.elements.is_empty() {
        ctx.err(gens_v.start(), "the generator list is empty");
        return None;
    }
    let mut decl: Vec<(String, GeneratorSpec, Option<&Value>, usize)> = Vec::new();
    for e in &gens_arr.elements {
        let Some(o) = ctx.object(e, "a generator") else { continue };
        let Some(name) = term_field(ctx, o, e, "name").and_then(|v| ctx.string(v, "generator name")) else {
            continue;
        };
        let name = name.to_string();
        if name.is_empty() || name.chars().any(char::is_whitespace) || name == "+" || name == "-" {
            ctx.err(e.start(), format!("invalid generator name '{name}'"));
            continue;
        }
        if decl.iter().any(|d| d.0 == name) {
            ctx.err(e.start(), format!("duplicate generator '{name}'"));
            continue;
        }
        let mut spec = GeneratorSpec::new(name.clone());
        if let Some(w) = prop(o, "weight") {
            match w.value.as_number_lit().and_then(|n| n.value.parse::<u32>().ok()).filter(|w| *w > 0) {
                Some(w) => spec = spec.weight(w),
                None => ctx.err(w.value.start(), "weight must be a positive integer"),
            }
        }
        if let Some(h) = prop(o, "hidden") {
            match &h.value {
                Value::BooleanLit(b) if b.value => spec = spec.hidden(),
                Value::BooleanLit(_) => {}
                other => ctx.err(other.start(), "hidden must be true or false"),
            }
        }
        for p in &o.properties {
            if !["name", "star", "weight", "hidden"].contains(&p.name.as_str()) {
                ctx.err(p.name.start(), format!("unknown generator field '{}'", p.name.as_str()));
            }
        }
        decl.push((name, spec, prop(o, "star").map(|p| &p.value), e.start()));
    }
    if !ctx.diags.is_empty() {
        return None;
    }
    let n = decl.len();
    let mut slot: Vec<usize> = (0..n).collect();
    if let Some(p) = prop(top, "order") {
        let arr = ctx.array(&p.value, "order")?;
        let mut seen = vec![false; n];
        let mut order = Vec::new();
        for e in &arr.elements {
            let Some(s) = ctx.string(e, "a generator name") else { continue };
            match decl.iter().position(|d| d.0 == s) {
                Some(i) if seen[i] => ctx.err(e.start(), format!("'{s}' appears twice in the order")),
                Some(i) => {
                    seen[i] = true;
                    order.push(i);
                }
                None => ctx.err(e.start(), format!("unknown generator '{s}'")),
            }
        }
        if seen.iter().any(|s| !s) {
            let missing: Vec<&str> = (0..n).filter(|&i| !seen[i]).map(|i| decl[i].0.as_str()).collect();
            ctx.err(p.value.start(), format!("order does not list {}", missing.join(", ")));
        }
        if !ctx.diags.is_empty() {
            return None;
        }
        for (pos, &i) in order.iter().enumerate() {
            slot[i] = pos;
        }
    }
    let names = Names { names: decl.iter().map(|d| d.0.clone()).collect(), slot: slot.clone() };
    let mut ordered: Vec<Option<GeneratorSpec>> = vec![None; n];
    for (i, d) in decl.iter().enumerate() {
        ordered[slot[i]] = Some(d.1.clone());
    }
    let specs: Vec<GeneratorSpec> = ordered.into_iter().map(|g| g.expect("order is a permutation")).collect();

    // relations, validated one at a time for positioned diagnostics
    let probe = match Presentation::new(ring.clone(), specs.clone(), vec![]) {
        Ok(p) => p,
        Err(e) => {
            ctx.err(gens_v.start(), e.to_string());
            return None;
        }
    };
    let mut rules = Vec::new();
    let mut rule_pos = Vec::new();
    if let Some(p) = prop(top, "relations") {
        let arr = ctx.array(&p.value, "relations")?;
        for e in &arr.elements {
            let Some(o) = ctx.object(e, "a relation") else { continue };
            let lhs = term_field(ctx, o, e, "lhs").and_then(|v| word(ctx, &names, v));
            let rhs = term_field(ctx, o, e, "rhs").and_then(|v| element(ctx, &ring, &names, v));
            let central = match prop(o, "central").map(|p| &p.value) {
                None => false,
                Some(Value::BooleanLit(b)) => b.value,
                Some(other) => {
                    ctx.err(other.start(), "central must be true or false");
                    false
                }
            };
            let (Some(lhs), Some(rhs)) = (lhs, rhs) else { continue };
            let rule = Rule { lhs, rhs, central };
            if let Err(err) = Presentation::new(ring.clone(), specs.clone(), vec![rule.clone()]) {
                let msg = match err {
                    Error::Structural(m) => m,
                    other => other.to_string(),
                };
                ctx.err(e.start(), msg);
                continue;
            }
            rules.push(rule);
            rule_pos.push(e.start());
        }
    }
    if !ctx.diags.is_empty() {
        return None;
    }
    let display: Vec<DisplayRelation> = rules
        .iter()
        .map(|r| {
            DisplayRelation::new(vec![(ring.one(), r.lhs.clone())], r.rhs.iter().map(|(w, c)| (c.clone(), w.clone())).collect())
        })
        .collect();
    let mut pres = match Presentation::new(ring.clone(), specs.clone(), rules) {
        Ok(p) => p,
        Err(e) => {
            ctx.err(root.start(), e.to_string());
            return None;
        }
    };

    // star
    if decl.iter().any(|d| d.2.is_some()) {
        let mut images: Vec<Option<Vec<(Word, Scalar)>>> = vec![None; n];
        for (i, d) in decl.iter().enumerate() {
            match d.2 {
                Some(v) => images[slot[i]] = element(ctx, &ring, &names, v),
                None => ctx.err(d.3, format!("generator '{}' has no star while others do", d.0)),
            }
        }
        if ctx.diags.is_empty() {
            let imgs = images.into_iter().map(|x| x.expect("checked")).collect();
            if let Err(e) = pres.set_star(imgs) {
                ctx.err(gens_v.start(), e.to_string());
            }
        }
    }
    drop(probe);

    // Hopf data
    let cop_v = need(ctx, "coproduct");
    let counit_v = need(ctx, "counit");
    let s_v = need(ctx, "antipode");
    let (cop_v, counit_v, s_v) = (cop_v?, counit_v?, s_v?);
    let coproduct = ctx.object(cop_v, "coproduct").and_then(|o| {
        per_generator(ctx, &names, o, "coproduct", |ctx, v| {
            let arr = ctx.array(v, "a coproduct")?;
            let mut terms = Vec::new();
            let mut ok = true;
            for e in &arr.elements {
                let Some(o) = ctx.object(e, "a coproduct term") else {
                    ok = false;
                    continue;
                };
                let c = term_field(ctx, o, e, "coeff").and_then(|c| scalar(ctx, &ring, c));
                let l = term_field(ctx, o, e, "left").and_then(|w| word(ctx, &names, w));
                let r = term_field(ctx, o, e, "right").and_then(|w| word(ctx, &names, w));
                match (c, l, r) {
                    (Some(c), Some(l), Some(r)) => terms.push((c, l, r)),
                    _ => ok = false,
                }
            }
            ok.then_some(terms)
        })
    });
    let counit = ctx
        .object(counit_v, "counit")
        .and_then(|o| per_generator(ctx, &names, o, "counit", |ctx, v| scalar(ctx, &ring, v)));
    let antipode = ctx
        .object(s_v, "antipode")
        .and_then(|o| per_generator(ctx, &names, o, "antipode", |ctx, v| element(ctx, &ring, &names, v)));
    let character = match prop(top, "character") {
        None => None,
        Some(p) => {
            let o = ctx.object(&p.value, "character")?;
            Some((per_generator(ctx, &names, o, "character", character_image)?, p.value.start()))
        }
    };
    let twisted_names = match prop(top, "display") {
        None => specs.iter().map(|g| g.name.clone()).collect(),
        Some(p) => {
            let o = ctx.object(&p.value, "display")?;
            let mut shown: Vec<String> = specs.iter().map(|g| g.name.clone()).collect();
            for q in &o.properties {
                match names.id(q.name.as_str()) {
                    Some(i) => {
                        if let Some(s) = ctx.string(&q.value, "a display name") {
                            shown[i as usize] = s.to_string();
                        }
                    }
                    None => ctx.err(q.name.start(), format!("unknown generator '{}'", q.name.as_str())),
                }
            }
            shown
        }
    };
    let max_len = match prop(top, "maxLen") {
        None => 3,
        Some(p) => match p.value.as_number_lit().and_then(|n| n.value.parse::<usize>().ok()).filter(|m| *m >= 1) {
            Some(m) => m,
            None => {
                ctx.err(p.value.start(), "maxLen must be a positive integer");
                3
            }
        },
    };
    let (coproduct, counit, antipode) = (coproduct?, counit?, antipode?);
    if !ctx.diags.is_empty() {
        return None;
    }

    let data = HopfData { coproduct, counit, antipode };
    let pres = Arc::new(pres);
    let hopf = match HopfAlgebra::new(label.clone(), pres.clone(), data.clone(), None) {
        Ok(h) => h,
        Err(e) => {
            ctx.err(root.start(), e.to_string());
            return None;
        }
    };
    let mut notes = Vec::new();
    let hopf = match character {
        None => {
            notes.push("no character declared; twisting is unavailable".to_string());
            hopf
        }
        Some((images, at)) => {
            let ch = Character { images };
            match generator_degrees(&hopf, &ch) {
                Err(e) => notes.push(format!("the character does not grade the algebra: {e}")),
                Ok(degrees) => {
                    let g = Grading { character: ch.clone(), degrees };
                    for (r, &at) in pres.rules().iter().zip(&rule_pos) {
                        let one = Presentation::new(ring.clone(), specs.clone(), vec![r.clone()]).ok()?;
                        if let Some(msg) = g.rule_inhomogeneities(&one).into_iter().next() {
                            ctx.err(at, format!("inhomogeneous under the declared character: {msg}"));
                        }
                    }
                    if !ctx.diags.is_empty() {
                        return None;
                    }
                }
            }
            match HopfAlgebra::new(label.clone(), pres, data, Some(ch)) {
                Ok(h) => h,
                Err(e) => {
                    ctx.err(at, e.to_string());
                    return None;
                }
            }
        }
    };
    Some(CatalogEntry {
        name: label,
        hopf: Arc::new(hopf),
        relations: display,
        twisted_names,
        default_max_len: max_len,
        notes,
    })
}

fn word_json(p: &Presentation, w: &Word) -> Json {
    Json::Array(w.letters().iter().map(|&g| Json::String(p.name(g).to_string())).collect())
}

fn element_json(p: &Presentation, terms: &[(Word, Scalar)]) -> Json {
    let r = p.ring();
    Json::Array(terms.iter().map(|(w, c)| json!({"coeff": r.format(c), "word": word_json(p, w)})).collect())
}

fn element_terms(e: &Element) -> Vec<(Word, Scalar)> {
    e.terms().map(|(w, c)| (w.clone(), c.clone())).collect()
}

/// Writes `entry` as a spec file that [`parse`] reads back to the same algebra.
/// Relations are written as the oriented rewrite rules.
pub fn write(entry: &CatalogEntry) -> Result<String> {
    let h = &entry.hopf;
    let p = h.presentation();
    let ring = p.ring();
    let mut doc = JsonMap::new();
    doc.insert("name".into(), json!(entry.name));
    if ring.arity() > 0 {
        doc.insert("parameters".into(), json!(ring.phases()));
    }
    let mut gens = Vec::new();
    for g in p.gen_ids() {
        let spec = &p.generators()[g.index()];
        let mut o = JsonMap::new();
        o.insert("name".into(), json!(spec.name));
        if let Some(img) = p.star_image(g) {
            let terms = element_terms(img);
            let star = match terms.as_slice() {
                [(w, c)] if w.len() == 1 && c.is_one() => json!(p.name(w.letters()[0])),
                _ => element_json(p, &terms),
            };
            o.insert("star".into(), star);
        }
        if spec.weight != 1 {
            o.insert("weight".into(), json!(spec.weight));
        }
        if spec.hidden {
            o.insert("hidden".into(), json!(true));
        }
        gens.push(Json::Object(o));
    }
    doc.insert("generators".into(), Json::Array(gens));
    let rels: Vec<Json> = p
        .rules()
        .iter()
        .map(|r| {
            let mut o = JsonMap::new();
            o.insert("lhs".into(), word_json(p, &r.lhs));
            o.insert("rhs".into(), element_json(p, &r.rhs));
            if r.central {
                o.insert("central".into(), json!(true));
            }
            Json::Object(o)
        })
        .collect();
    doc.insert("relations".into(), Json::Array(rels));
    let data = h.data();
    let mut cop = JsonMap::new();
    let mut eps = JsonMap::new();
    let mut s = JsonMap::new();
    for g in p.gen_ids() {
        let i = g.index();
        let terms: Vec<Json> = data.coproduct[i]
            .iter()
            .map(|(c, l, r)| json!({"coeff": ring.format(c), "left": word_json(p, l), "right": word_json(p, r)}))
            .collect();
        cop.insert(p.name(g).into(), Json::Array(terms));
        eps.insert(p.name(g).into(), json!(ring.format(&data.counit[i])));
        s.insert(p.name(g).into(), element_json(p, &data.antipode[i]));
    }
    doc.insert("coproduct".into(), Json::Object(cop));
    doc.insert("counit".into(), Json::Object(eps));
    doc.insert("antipode".into(), Json::Object(s));
    if let Some(ch) = h.character() {
        let m: JsonMap<String, Json> =
            p.gen_ids().map(|g| (p.name(g).to_string(), json!(Character::format_image(ch.images[g.index()])))).collect();
        doc.insert("character".into(), Json::Object(m));
    }
    let shown: JsonMap<String, Json> = p
        .gen_ids()
        .filter(|g| entry.twisted_names.get(g.index()).is_some_and(|n| n != p.name(*g)))
        .map(|g| (p.name(g).to_string(), json!(entry.twisted_names[g.index()])))
        .collect();
    if !shown.is_empty() {
        doc.insert("display".into(), Json::Object(shown));
    }
    doc.insert("maxLen".into(), json!(entry.default_max_len));
    Ok(serde_json::to_string_pretty(&Json::Object(doc)).expect("spec serializes") + "\n")
}

#[cfg(test)]
mod tests {
    use super::*;

    const TINY: &str = r#"{
  "name": "tiny",
  "generators": [{"name": "z", "star": "w"}, {"name": "w", "star": "z"}],
  "relations": [
    {"lhs": ["z", "w"], "rhs": "1"},
    {"lhs": ["w", "z"], "rhs": [{"coeff": "1", "word": []}]},
  ],
  "coproduct": {
    "z": [{"coeff": "1", "left": ["z"], "right": ["z"]}],
    "w": [{"coeff": "1", "left": ["w"], "right": ["w"]}]
  },
  "counit": {"z": "1", "w": "1"},
  "antipode": {"z": "w", "w": "z"},
  "character": {"z": "z^1", "w": "z^-1"}
}"#;

    fn diags(text: &str) -> Vec<Diagnostic> {
        match parse(text) {
            Err(Error::Parse(d)) => d,
            other => panic!("expected diagnostics, got {other:?}"),
        }
    }

    #[test]
    fn tiny_parses() {
        let e = parse(TINY).unwrap();
        let p = e.hopf.presentation();
        assert_eq!(p.num_generators(), 2);
        assert_eq!(p.rules().len(), 2);
        assert!(e.hopf.grading().is_some());
    }

    #[test]
    fn unknown_name_is_positioned() {
        let bad = TINY.replace(r#"{"lhs": ["z", "w"]"#, r#"{"lhs": ["z", "x"]"#);
        let d = diags(&bad);
        assert_eq!(d.len(), 1);
        assert_eq!((d[0].line, d[0].column), (5, 19));
        assert!(d[0].message.contains("unknown generator 'x'"));
    }

    #[test]
    fn unoriented_rule_is_rejected() {
        let bad = TINY.replace(r#""rhs": "1"}"#, r#""rhs": "z w z"}"#);
        let d = diags(&bad);
        assert_eq!(d[0].line, 5);
        assert!(d[0].message.contains("not oriented"), "{}", d[0].message);
    }

    #[test]
    fn empty_generators_and_syntax_errors() {
        let d = diags(r#"{"generators": []}"#);
        assert!(d[0].message.contains("empty"));
        let d = diags("{\n  \"generators\": [,\n}");
        assert_eq!(d[0].line, 2);
    }

    #[test]
    fn element_text_form() {
        let names = Names { names: vec!["b".into(), "b*".into()], slot: vec![0, 1] };
        let r = Ring::default();
        let t = parse_element_text("1 - q^2 b b*", &r, &names).unwrap();
        assert_eq!(t.len(), 2);
        assert_eq!(t[1].1, r.parse("-q^2").unwrap());
        let t = parse_element_text("-(1 + 2i)*q b*", &r, &names).unwrap();
        assert_eq!(t[0].1, r.parse("(1 + 2i)*q").unwrap().neg());
        assert!(parse_element_text("b 2", &r, &names).is_err());
    }

    #[test]
    fn character_must_grade_rules() {
        let bad = TINY.replace(r#""w": "z^-1"}"#, r#""w": "z^-2"}"#);
        let d = diags(&bad);
        assert!(!d.is_empty());
    }

    #[test]
    fn catalog_round_trips() {
        for name in crate::catalog::NAMES {
            let e = crate::catalog::build(name, &Default::default()).unwrap();
            let text = write(&e).unwrap();
            let back = parse(&text).unwrap_or_else(|err| panic!("{name}: {err}\n{text}"));
            let (p, b) = (e.hopf.presentation(), back.hopf.presentation());
            assert_eq!(p.rules(), b.rules(), "{name}");
            for g in p.gen_ids() {
                assert_eq!(p.star_image(g), b.star_image(g), "{name}");
                assert_eq!(p.generators()[g.index()].weight, b.generators()[g.index()].weight);
            }
            assert_eq!(e.hopf.data(), back.hopf.data(), "{name}");
            assert_eq!(e.hopf.character(), back.hopf.character(), "{name}");
            assert_eq!(e.twisted_names, back.twisted_names);
            assert_eq!(write(&back).unwrap(), text, "{name}");
        }
    }
}
