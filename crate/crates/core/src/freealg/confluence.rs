use super::{Element, Presentation, Word};
use crate::error::{structural, Result};
use crate::report::{Check, Report};

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum PairKind {
    Overlap,
    Inclusion,
}

#[derive(Clone, Debug)]
pub struct CriticalPair {
    pub word: Word,
    pub kind: PairKind,
    pub rules: (usize, usize),
    pub left: Element,
    pub right: Element,
}

impl CriticalPair {
    pub fn joinable(&self) -> bool {
        self.left == self.right
    }
}

#[derive(Clone, Debug)]
pub struct ConfluenceReport {
    pub bound: usize,
    pub pairs: Vec<CriticalPair>,
    /// Overlaps longer than the bound, not examined.
    pub skipped: usize,
}

impl ConfluenceReport {
    pub fn confluent_up_to_bound(&self) -> bool {
        self.pairs.iter().all(|p| p.joinable())
    }

    pub fn failures(&self) -> impl Iterator<Item = &CriticalPair> {
        self.pairs.iter().filter(|p| !p.joinable())
    }
}

impl Presentation {
    /// Resolves every overlap and inclusion ambiguity between rule left-hand
    /// sides whose combined word has length at most `max_overlap`.
    pub fn check_confluence(&self, max_overlap: usize) -> Result<ConfluenceReport> {
        let longest = self.rules().iter().map(|r| r.lhs.len()).max().unwrap_or(0);
        if max_overlap < longest {
            return Err(structural(format!(
                "overlap bound {max_overlap} is shorter than the longest rule ({longest})"
            )));
        }
        let rules = self.rules();
        let mut pairs = Vec::new();
        let mut skipped = 0;
        for (i, r1) in rules.iter().enumerate() {
            let l1 = r1.lhs.letters();
            for (j, r2) in rules.iter().enumerate() {
                let l2 = r2.lhs.letters();
                for k in 1..l1.len().min(l2.len()) {
                    if l1[l1.len() - k..] != l2[..k] {
                        continue;
                    }
                    let word = Word::concat3(l1, &l2[k..], &[]);
                    if word.len() > max_overlap {
                        skipped += 1;
                        continue;
                    }
                    let left = self.apply_at(&word, i, 0)?;
                    let right = self.apply_at(&word, j, l1.len() - k)?;
                    pairs.push(CriticalPair { word, kind: PairKind::Overlap, rules: (i, j), left, right });
                }
                if i != j && l2.len() <= l1.len() {
                    for pos in 0..=l1.len() - l2.len() {
                        if l1[pos..pos + l2.len()] != *l2 {
                            continue;
                        }
                        let word = r1.lhs.clone();
                        let left = self.apply_at(&word, i, 0)?;
                        let right = self.apply_at(&word, j, pos)?;
                        pairs.push(CriticalPair { word, kind: PairKind::Inclusion, rules: (i, j), left, right });
                    }
                }
            }
        }
        Ok(ConfluenceReport { bound: max_overlap, pairs, skipped })
    }

    /// Critical pairs up to `max_overlap` (default: twice the longest
    /// left-hand side minus one, which covers every overlap) as a suite report.
    pub fn confluence_report(&self, label: &str, max_overlap: Option<usize>) -> Result<Report> {
        let longest = self.rules().iter().map(|r| r.lhs.len()).max().unwrap_or(1);
        let bound = max_overlap.unwrap_or(2 * longest - 1).max(longest);
        let cr = self.check_confluence(bound)?;
        let mut rep = Report::new("confluence", label, bound);
        let bad: Vec<String> = cr
            .failures()
            .map(|f| {
                let kind = match f.kind {
                    PairKind::Overlap => "overlap",
                    PairKind::Inclusion => "inclusion",
                };
                format!(
                    "{kind} {} (rules {} and {}): {} vs {}",
                    self.format_word(&f.word),
                    self.format_word(&self.rules()[f.rules.0].lhs),
                    self.format_word(&self.rules()[f.rules.1].lhs),
                    self.format_element(&f.left),
                    self.format_element(&f.right)
                )
            })
            .collect();
        rep.push(Check::from_witnesses("critical-pairs", cr.pairs.len(), bad));
        rep.notes.push(format!("critical pairs resolved up to overlap length {bound}"));
        if cr.skipped > 0 {
            rep.notes.push(format!("{} longer overlaps not examined", cr.skipped));
        }
        if self.rules().iter().any(|r| r.central) {
            rep.notes.push("central rules are covered by overlaps of their leading word only".into());
        }
        Ok(rep)
    }

    fn apply_at(&self, w: &Word, rule: usize, pos: usize) -> Result<Element> {
        let r = &self.rules()[rule];
        let letters = w.letters();
        let (pre, post) = (&letters[..pos], &letters[pos + r.lhs.len()..]);
        self.normalize(r.rhs.iter().map(|(rw, c)| (Word::concat3(pre, rw.letters(), post), c.clone())))
    }
}

#[cfg(test)]
mod tests {
    use super::super::{GeneratorSpec, Rule};
    use super::*;
    use crate::scalars::{Ring, Scalar};

    #[test]
    fn disjoint_inverse_rules_are_confluent() {
        let one = Scalar::one(0);
        let rules = vec![
            Rule { lhs: Word::from_ids(&[0, 1]), rhs: vec![(Word::empty(), one.clone())], central: false },
            Rule { lhs: Word::from_ids(&[1, 0]), rhs: vec![(Word::empty(), one)], central: false },
        ];
        let p = Presentation::new(Ring::default(), vec![GeneratorSpec::new("z"), GeneratorSpec::new("zi")], rules)
            .unwrap();
        let rep = p.check_confluence(3).unwrap();
        assert!(rep.confluent_up_to_bound());
        assert_eq!(rep.pairs.len(), 2);
        assert!(p.check_confluence(1).is_err());
    }

    #[test]
    fn inconsistent_commutation_is_detected() {
        let r = Ring::new(["u"]).unwrap();
        let s = |t: &str| r.parse(t).unwrap();
        // a < ai < b; b·a = u·a·b but b·ai = u·ai·b contradicts a·ai = 1.
        let rules = vec![
            Rule { lhs: Word::from_ids(&[2, 0]), rhs: vec![(Word::from_ids(&[0, 2]), s("u"))], central: false },
            Rule { lhs: Word::from_ids(&[2, 1]), rhs: vec![(Word::from_ids(&[1, 2]), s("u"))], central: false },
            Rule { lhs: Word::from_ids(&[0, 1]), rhs: vec![(Word::empty(), s("1"))], central: false },
            Rule { lhs: Word::from_ids(&[1, 0]), rhs: vec![(Word::empty(), s("1"))], central: false },
        ];
        let gens = vec![GeneratorSpec::new("a"), GeneratorSpec::new("ai"), GeneratorSpec::new("b")];
        let p = Presentation::new(r, gens, rules).unwrap();
        let rep = p.check_confluence(3).unwrap();
        assert!(!rep.confluent_up_to_bound());
        assert!(rep.failures().any(|f| f.word == Word::from_ids(&[2, 0, 1])));
    }
}
