//! Built-in algebras: ℂ[z, z⁻¹], C_λ(a, b), SU_q(n), SU_q(2) and the quantum
//! double torus, each with its character and relations in display form.

use std::sync::Arc;

use crate::error::{structural, Result};
use crate::freealg::{GeneratorSpec, Presentation, Rule, Word};
use crate::grading::Character;
use crate::hopf::{HopfAlgebra, HopfData, HopfStructure};
use crate::scalars::{Ring, Scalar};
use crate::twist::DisplayRelation;

pub const NAMES: [&str; 5] = ["laurent", "clambda", "suqn", "suq2", "double-torus"];

/// A built algebra together with presentation-level display data.
#[derive(Clone, Debug)]
pub struct CatalogEntry {
    pub name: String,
    pub hopf: Arc<HopfAlgebra>,
    /// Defining relations as usually written (not as rewrite rules).
    pub relations: Vec<DisplayRelation>,
    /// Generator names used when showing the twisted algebra.
    pub twisted_names: Vec<String>,
    pub default_max_len: usize,
    pub notes: Vec<String>,
}

#[derive(Clone, Debug, Default)]
pub struct Params {
    pub n: Option<usize>,
    pub p: Option<Vec<i32>>,
    pub lambda: Option<String>,
}

pub fn description(name: &str) -> &'static str {
    match name {
        "laurent" => "group algebra ℂ[z, z⁻¹] of ℤ, α = id",
        "clambda" => "C_λ(a, b): ab = λba, a grouplike, Δb = a⊗b + b⊗1 (--lambda, default q)",
        "suqn" => "SU_q(n) with α_p(u_ij) = z^{p(i)}δ_ij (--n, --p; default n = 3, p = 1,0,…,0,-1)",
        "suq2" => "SU_q(2) in generators a, a*, b, b* with α(a) = z, α(b) = 0",
        "double-torus" => "quantum double torus C(T²) ⊕ C(T²_t) with α(u) = z, α(v) = z⁻¹",
        _ => "",
    }
}

pub fn build(name: &str, params: &Params) -> Result<CatalogEntry> {
    match name {
        "laurent" => laurent(),
        "clambda" => clambda(params.lambda.as_deref()),
        "suqn" => {
            let n = params.n.unwrap_or(3);
            suqn(n, params.p.clone())
        }
        "suq2" => suq2(),
        "double-torus" => double_torus(),
        _ => Err(structural(format!("unknown catalog entry '{name}' (known: {})", NAMES.join(", ")))),
    }
}

/// Shorthand for writing presentations by generator name.
struct Sketch {
    ring: Ring,
    names: Vec<String>,
}

impl Sketch {
    fn new(ring: Ring, names: &[&str]) -> Sketch {
        Sketch { ring, names: names.iter().map(|s| s.to_string()).collect() }
    }

    fn w(&self, s: &str) -> Word {
        let ids: Vec<u16> = s
            .split_whitespace()
            .filter(|t| *t != "1")
            .map(|t| self.names.iter().position(|n| n == t).unwrap_or_else(|| panic!("unknown generator {t}")) as u16)
            .collect();
        Word::from_ids(&ids)
    }

    fn c(&self, s: &str) -> Scalar {
        self.ring.parse(s).unwrap_or_else(|e| panic!("bad literal {s}: {e}"))
    }

    fn terms(&self, ts: &[(&str, &str)]) -> Vec<(Word, Scalar)> {
        ts.iter().map(|(c, w)| (self.w(w), self.c(c))).collect()
    }

    fn rule(&self, lhs: &str, rhs: &[(&str, &str)]) -> Rule {
        Rule { lhs: self.w(lhs), rhs: self.terms(rhs), central: false }
    }

    fn side(&self, ts: &[(&str, &str)]) -> Vec<(Scalar, Word)> {
        ts.iter().map(|(c, w)| (self.c(c), self.w(w))).collect()
    }

    fn rel(&self, lhs: &[(&str, &str)], rhs: &[(&str, &str)]) -> DisplayRelation {
        DisplayRelation::new(self.side(lhs), self.side(rhs))
    }

    fn coproduct(&self, ts: &[(&str, &str, &str)]) -> Vec<(Scalar, Word, Word)> {
        ts.iter().map(|(c, l, r)| (self.c(c), self.w(l), self.w(r))).collect()
    }
}

fn zpow(k: i32) -> Option<i32> {
    Some(k)
}

pub fn laurent() -> Result<CatalogEntry> {
    let s = Sketch::new(Ring::default(), &["z", "z^-1"]);
    let gens = vec![GeneratorSpec::new("z"), GeneratorSpec::new("z^-1")];
    let rules = vec![s.rule("z z^-1", &[("1", "1")]), s.rule("z^-1 z", &[("1", "1")])];
    let mut pres = Presentation::new(s.ring.clone(), gens, rules)?;
    pres.set_star(vec![s.terms(&[("1", "z^-1")]), s.terms(&[("1", "z")])])?;
    let data = HopfData {
        coproduct: vec![s.coproduct(&[("1", "z", "z")]), s.coproduct(&[("1", "z^-1", "z^-1")])],
        counit: vec![s.c("1"), s.c("1")],
        antipode: vec![s.terms(&[("1", "z^-1")]), s.terms(&[("1", "z")])],
    };
    let ch = Character { images: vec![zpow(1), zpow(-1)] };
    let hopf = HopfAlgebra::new("laurent", Arc::new(pres), data, Some(ch))?;
    Ok(CatalogEntry {
        name: "laurent".into(),
        hopf: Arc::new(hopf),
        relations: vec![s.rel(&[("1", "z z^-1")], &[("1", "1")]), s.rel(&[("1", "z^-1 z")], &[("1", "1")])],
        twisted_names: s.names.clone(),
        default_max_len: 3,
        notes: vec![],
    })
}

/// C_λ(a, b). λ must be a unit of the coefficient ring; it defaults to q.
pub fn clambda(lambda: Option<&str>) -> Result<CatalogEntry> {
    let ring = Ring::default();
    let lam = match lambda {
        None => ring.q_pow(1),
        Some(text) => ring.parse(text).map_err(|e| structural(format!("--lambda: {e}")))?,
    };
    if lam.is_zero() {
        return Err(structural("λ must be nonzero"));
    }
    let lam_inv = lam
        .inv()
        .ok_or_else(|| structural(format!("λ = {} is not a unit of the coefficient ring", ring.format(&lam))))?;
    let s = Sketch::new(ring.clone(), &["a", "a^-1", "b"]);
    let gens = vec![GeneratorSpec::new("a"), GeneratorSpec::new("a^-1"), GeneratorSpec::new("b")];
    let rules = vec![
        Rule { lhs: s.w("b a"), rhs: vec![(s.w("a b"), lam_inv.clone())], central: false },
        Rule { lhs: s.w("b a^-1"), rhs: vec![(s.w("a^-1 b"), lam.clone())], central: false },
        s.rule("a a^-1", &[("1", "1")]),
        s.rule("a^-1 a", &[("1", "1")]),
    ];
    let pres = Presentation::new(ring.clone(), gens, rules)?;
    let data = HopfData {
        coproduct: vec![
            s.coproduct(&[("1", "a", "a")]),
            s.coproduct(&[("1", "a^-1", "a^-1")]),
            s.coproduct(&[("1", "a", "b"), ("1", "b", "1")]),
        ],
        counit: vec![s.c("1"), s.c("1"), s.c("0")],
        antipode: vec![s.terms(&[("1", "a^-1")]), s.terms(&[("1", "a")]), s.terms(&[("-1", "a^-1 b")])],
    };
    let ch = Character { images: vec![zpow(1), zpow(-1), None] };
    let hopf = HopfAlgebra::new("clambda", Arc::new(pres), data, Some(ch))?;
    Ok(CatalogEntry {
        name: "clambda".into(),
        hopf: Arc::new(hopf),
        relations: vec![
            DisplayRelation::new(vec![(ring.one(), s.w("a b"))], vec![(lam, s.w("b a"))]),
            s.rel(&[("1", "a a^-1")], &[("1", "1")]),
            s.rel(&[("1", "a^-1 a")], &[("1", "1")]),
        ],
        twisted_names: s.names.clone(),
        default_max_len: 3,
        notes: vec![],
    })
}

/// Permutations of `0..n` with their inversion counts.
fn permutations(n: usize) -> Vec<(Vec<usize>, u32)> {
    fn go(prefix: &mut Vec<usize>, rest: &mut Vec<usize>, out: &mut Vec<(Vec<usize>, u32)>) {
        if rest.is_empty() {
            let mut inv = 0;
            for i in 0..prefix.len() {
                for j in i + 1..prefix.len() {
                    if prefix[i] > prefix[j] {
                        inv += 1;
                    }
                }
            }
            out.push((prefix.clone(), inv));
            return;
        }
        for k in 0..rest.len() {
            let x = rest.remove(k);
            prefix.push(x);
            go(prefix, rest, out);
            prefix.pop();
            rest.insert(k, x);
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), &mut (0..n).collect(), &mut out);
    out
}

/// (−q)^k.
fn minus_q(ring: &Ring, k: i32) -> Scalar {
    let s = ring.q_pow(k);
    if k.rem_euclid(2) == 1 {
        s.neg()
    } else {
        s
    }
}

/// SU_q(n) with the FRT relations, the quantum determinant as a central rule,
/// and the character α_p.
pub fn suqn(n: usize, p: Option<Vec<i32>>) -> Result<CatalogEntry> {
    if !(2..=6).contains(&n) {
        return Err(structural(format!("suqn needs 2 ≤ n ≤ 6, got {n}")));
    }
    let p = p.unwrap_or_else(|| {
        let mut v = vec![0; n];
        v[0] = 1;
        v[n - 1] = -1;
        v
    });
    if p.len() != n {
        return Err(structural(format!("--p must list {n} integers, got {}", p.len())));
    }
    if p.iter().sum::<i32>() != 0 {
        return Err(structural("the entries of p must sum to 0"));
    }
    let ring = Ring::default();
    let idx = |i: usize, j: usize| (i * n + j) as u16;
    let name = |i: usize, j: usize| format!("u{}{}", i + 1, j + 1);
    let mut gens = Vec::new();
    for i in 0..n {
        for j in 0..n {
            gens.push(GeneratorSpec::new(name(i, j)).weight((n - i.abs_diff(j)) as u32));
        }
    }
    let w2 = |a: (usize, usize), b: (usize, usize)| Word::from_ids(&[idx(a.0, a.1), idx(b.0, b.1)]);
    let one = ring.one();
    let qi = ring.q_pow(-1);
    let qdiff = ring.q_pow(1).sub(&ring.q_pow(-1));
    let mut rules = Vec::new();
    let mut rels = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            for k in 0..n {
                // u_ik u_jk = q u_jk u_ik
                rules.push(Rule { lhs: w2((j, k), (i, k)), rhs: vec![(w2((i, k), (j, k)), qi.clone())], central: false });
                rels.push(DisplayRelation::new(
                    vec![(one.clone(), w2((i, k), (j, k)))],
                    vec![(ring.q_pow(1), w2((j, k), (i, k)))],
                ));
                // u_ki u_kj = q u_kj u_ki
                rules.push(Rule { lhs: w2((k, j), (k, i)), rhs: vec![(w2((k, i), (k, j)), qi.clone())], central: false });
                rels.push(DisplayRelation::new(
                    vec![(one.clone(), w2((k, i), (k, j)))],
                    vec![(ring.q_pow(1), w2((k, j), (k, i)))],
                ));
            }
            for k in 0..n {
                for l in k + 1..n {
                    // u_il u_jk = u_jk u_il
                    rules.push(Rule { lhs: w2((j, k), (i, l)), rhs: vec![(w2((i, l), (j, k)), one.clone())], central: false });
                    rels.push(DisplayRelation::new(
                        vec![(one.clone(), w2((i, l), (j, k)))],
                        vec![(one.clone(), w2((j, k), (i, l)))],
                    ));
                    // u_ik u_jl − u_jl u_ik = (q − q⁻¹) u_jk u_il
                    rules.push(Rule {
                        lhs: w2((j, l), (i, k)),
                        rhs: vec![(w2((i, k), (j, l)), one.clone()), (w2((j, k), (i, l)), qdiff.neg())],
                        central: false,
                    });
                    rels.push(DisplayRelation::new(
                        vec![(one.clone(), w2((i, k), (j, l))), (one.neg(), w2((j, l), (i, k)))],
                        vec![(qdiff.clone(), w2((j, k), (i, l)))],
                    ));
                }
            }
        }
    }
    let perms = permutations(n);
    let diag = Word::from_ids(&(0..n).map(|i| idx(i, i)).collect::<Vec<_>>());
    let mut det_rhs = vec![(Word::empty(), one.clone())];
    let mut det_side = Vec::new();
    for (s, inv) in &perms {
        let w = Word::from_ids(&(0..n).map(|i| idx(i, s[i])).collect::<Vec<_>>());
        let c = minus_q(&ring, *inv as i32);
        if w != diag {
            det_rhs.push((w.clone(), c.neg()));
        }
        det_side.push((c, w));
    }
    rules.push(Rule { lhs: diag, rhs: det_rhs, central: true });
    rels.push(DisplayRelation::new(det_side, vec![(one.clone(), Word::empty())]));
    let mut pres = Presentation::new(ring.clone(), gens, rules)?;

    // (u_ij)* = (−q)^{j−i} Σ_σ (−q)^{|σ|} u_{k₁σ(l₁)}⋯u_{k_{n−1}σ(l_{n−1})}
    let minor_perms = permutations(n - 1);
    let mut stars = Vec::new();
    for i in 0..n {
        for j in 0..n {
            let ks: Vec<usize> = (0..n).filter(|&k| k != i).collect();
            let ls: Vec<usize> = (0..n).filter(|&l| l != j).collect();
            let pre = minus_q(&ring, j as i32 - i as i32);
            let mut img = Vec::new();
            for (s, inv) in &minor_perms {
                let w = Word::from_ids(&(0..n - 1).map(|t| idx(ks[t], ls[s[t]])).collect::<Vec<_>>());
                img.push((w, pre.mul(&minus_q(&ring, *inv as i32))));
            }
            stars.push(img);
        }
    }
    pres.set_star(stars)?;
    let mut coproduct = Vec::new();
    let mut counit = Vec::new();
    let mut antipode = Vec::new();
    let mut images = Vec::new();
    for i in 0..n {
        for j in 0..n {
            coproduct.push(
                (0..n)
                    .map(|k| (one.clone(), Word::from_ids(&[idx(i, k)]), Word::from_ids(&[idx(k, j)])))
                    .collect(),
            );
            counit.push(if i == j { one.clone() } else { ring.zero() });
            let s = pres.star_word(&Word::from_ids(&[idx(j, i)]))?;
            antipode.push(s.into_terms().collect());
            images.push(if i == j { Some(p[i]) } else { None });
        }
    }
    let label = format!("suqn(n={n}, p={})", p.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(","));
    let hopf =
        HopfAlgebra::new(label, Arc::new(pres), HopfData { coproduct, counit, antipode }, Some(Character { images }))?;
    let mut notes = Vec::new();
    if n > 3 {
        notes.push(format!("n = {n} is outside the verified range 2..3; suites use a reduced length bound"));
    }
    let names = hopf.presentation().generators().iter().map(|g| g.name.clone()).collect();
    Ok(CatalogEntry {
        name: "suqn".into(),
        hopf: Arc::new(hopf),
        relations: rels,
        twisted_names: names,
        default_max_len: if n >= 3 { 2 } else { 3 },
        notes,
    })
}

pub fn suq2() -> Result<CatalogEntry> {
    let ring = Ring::default();
    let s = Sketch::new(ring.clone(), &["a", "a*", "b", "b*"]);
    let gens = vec![
        GeneratorSpec::new("a").weight(2),
        GeneratorSpec::new("a*").weight(2),
        GeneratorSpec::new("b"),
        GeneratorSpec::new("b*"),
    ];
    let rules = vec![
        s.rule("b a", &[("q^-1", "a b")]),
        s.rule("b a*", &[("q", "a* b")]),
        s.rule("b* a", &[("q^-1", "a b*")]),
        s.rule("b* a*", &[("q", "a* b*")]),
        s.rule("b* b", &[("1", "b b*")]),
        s.rule("a* a", &[("1", "1"), ("-1", "b b*")]),
        s.rule("a a*", &[("1", "1"), ("-q^2", "b b*")]),
    ];
    let mut pres = Presentation::new(ring.clone(), gens, rules)?;
    pres.set_star(vec![s.terms(&[("1", "a*")]), s.terms(&[("1", "a")]), s.terms(&[("1", "b*")]), s.terms(&[("1", "b")])])?;
    let data = HopfData {
        coproduct: vec![
            s.coproduct(&[("1", "a", "a"), ("-q", "b*", "b")]),
            s.coproduct(&[("1", "a*", "a*"), ("-q", "b", "b*")]),
            s.coproduct(&[("1", "b", "a"), ("1", "a*", "b")]),
            s.coproduct(&[("1", "b*", "a*"), ("1", "a", "b*")]),
        ],
        counit: vec![s.c("1"), s.c("1"), s.c("0"), s.c("0")],
        antipode: vec![
            s.terms(&[("1", "a*")]),
            s.terms(&[("1", "a")]),
            s.terms(&[("-q", "b")]),
            s.terms(&[("-q^-1", "b*")]),
        ],
    };
    let ch = Character { images: vec![zpow(1), zpow(-1), None, None] };
    let hopf = HopfAlgebra::new("suq2", Arc::new(pres), data, Some(ch))?;
    Ok(CatalogEntry {
        name: "suq2".into(),
        hopf: Arc::new(hopf),
        relations: vec![
            s.rel(&[("1", "a* a"), ("1", "b* b")], &[("1", "1")]),
            s.rel(&[("1", "a a*"), ("q^2", "b* b")], &[("1", "1")]),
            s.rel(&[("1", "b b*")], &[("1", "b* b")]),
            s.rel(&[("1", "a b")], &[("q", "b a")]),
            s.rel(&[("1", "a b*")], &[("q", "b* a")]),
        ],
        twisted_names: vec!["α".into(), "α*".into(), "γ".into(), "γ*".into()],
        default_max_len: 3,
        notes: vec![],
    })
}

/// C(T²) ⊕ C(T²_t), with the summands cut out by the idempotents e1, e2 = 1 − e1.
pub fn double_torus() -> Result<CatalogEntry> {
    let ring = Ring::new(["t"])?;
    let names = ["u", "u*", "v", "v*", "U", "U*", "V", "V*", "e1", "e2"];
    let s = Sketch::new(ring.clone(), &names);
    let mut gens: Vec<GeneratorSpec> = names[..8].iter().map(|n| GeneratorSpec::new(*n)).collect();
    gens.push(GeneratorSpec::new("e1").hidden());
    gens.push(GeneratorSpec::new("e2").hidden());
    let first = ["u", "u*", "v", "v*"];
    let second = ["U", "U*", "V", "V*"];
    let mut rules = vec![
        s.rule("V U", &[("t^-1", "U V")]),
        s.rule("V U*", &[("t", "U* V")]),
        s.rule("V* U", &[("t", "U V*")]),
        s.rule("V* U*", &[("t^-1", "U* V*")]),
        s.rule("U U*", &[("1", "1"), ("-1", "e1")]),
        s.rule("U* U", &[("1", "1"), ("-1", "e1")]),
        s.rule("V V*", &[("1", "1"), ("-1", "e1")]),
        s.rule("V* V", &[("1", "1"), ("-1", "e1")]),
        s.rule("u u*", &[("1", "e1")]),
        s.rule("u* u", &[("1", "e1")]),
        s.rule("v v*", &[("1", "e1")]),
        s.rule("v* v", &[("1", "e1")]),
        s.rule("v u", &[("1", "u v")]),
        s.rule("v u*", &[("1", "u* v")]),
        s.rule("v* u", &[("1", "u v*")]),
        s.rule("v* u*", &[("1", "u* v*")]),
        s.rule("e1 e1", &[("1", "e1")]),
        s.rule("e2", &[("1", "1"), ("-1", "e1")]),
    ];
    for x in first {
        for y in second {
            rules.push(s.rule(&format!("{x} {y}"), &[]));
            rules.push(s.rule(&format!("{y} {x}"), &[]));
        }
        rules.push(s.rule(&format!("e1 {x}"), &[("1", x)]));
        rules.push(s.rule(&format!("{x} e1"), &[("1", x)]));
    }
    for y in second {
        rules.push(s.rule(&format!("e1 {y}"), &[]));
        rules.push(s.rule(&format!("{y} e1"), &[]));
    }
    let mut pres = Presentation::new(ring.clone(), gens, rules)?;
    let star_of = ["u*", "u", "v*", "v", "U*", "U", "V*", "V", "e1", "e2"];
    pres.set_star(star_of.iter().map(|n| s.terms(&[("1", n)])).collect())?;
    let data = HopfData {
        coproduct: vec![
            s.coproduct(&[("1", "u", "u"), ("1", "V", "U")]),
            s.coproduct(&[("1", "u*", "u*"), ("1", "V*", "U*")]),
            s.coproduct(&[("1", "v", "v"), ("1", "U", "V")]),
            s.coproduct(&[("1", "v*", "v*"), ("1", "U*", "V*")]),
            s.coproduct(&[("1", "U", "u"), ("1", "v", "U")]),
            s.coproduct(&[("1", "U*", "u*"), ("1", "v*", "U*")]),
            s.coproduct(&[("1", "V", "v"), ("1", "u", "V")]),
            s.coproduct(&[("1", "V*", "v*"), ("1", "u*", "V*")]),
            s.coproduct(&[("1", "e1", "e1"), ("1", "e2", "e2")]),
            s.coproduct(&[("1", "e1", "e2"), ("1", "e2", "e1")]),
        ],
        counit: ["1", "1", "1", "1", "0", "0", "0", "0", "1", "0"].iter().map(|c| s.c(c)).collect(),
        antipode: ["u*", "u", "v*", "v", "V*", "V", "U*", "U", "e1", "e2"].iter().map(|n| s.terms(&[("1", n)])).collect(),
    };
    let ch = Character {
        images: vec![zpow(1), zpow(-1), zpow(-1), zpow(1), None, None, None, None, zpow(0), None],
    };
    let hopf = HopfAlgebra::new("double-torus", Arc::new(pres), data, Some(ch))?;
    Ok(CatalogEntry {
        name: "double-torus".into(),
        hopf: Arc::new(hopf),
        relations: vec![
            s.rel(&[("1", "u v")], &[("1", "v u")]),
            s.rel(&[("1", "u v*")], &[("1", "v* u")]),
            s.rel(&[("1", "u* v")], &[("1", "v u*")]),
            s.rel(&[("1", "u* v*")], &[("1", "v* u*")]),
            s.rel(&[("1", "u u*")], &[("1", "u* u")]),
            s.rel(&[("1", "v v*")], &[("1", "v* v")]),
            s.rel(&[("1", "U V")], &[("t", "V U")]),
            s.rel(&[("1", "U V*")], &[("t^-1", "V* U")]),
            s.rel(&[("1", "U* V")], &[("t^-1", "V U*")]),
            s.rel(&[("1", "U* V*")], &[("t", "V* U*")]),
            s.rel(&[("1", "U U*")], &[("1", "U* U")]),
            s.rel(&[("1", "V V*")], &[("1", "V* V")]),
            s.rel(&[("1", "e1 e1")], &[("1", "e1")]),
            s.rel(&[("1", "e1"), ("1", "e2")], &[("1", "1")]),
            s.rel(&[("1", "u u*")], &[("1", "e1")]),
            s.rel(&[("1", "U U*")], &[("1", "e2")]),
            s.rel(&[("1", "u U")], &[]),
            s.rel(&[("1", "U u")], &[]),
        ],
        twisted_names: names.iter().map(|s| s.to_string()).collect(),
        default_max_len: 3,
        notes: vec![],
    })
}
