//! Suite reports and their JSON form.

use serde::Serialize;

use crate::error::Result;
use crate::exec;

/// Witness lists in JSON are capped at this many entries.
const MAX_LISTED: usize = 50;

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct Check {
    pub name: String,
    pub status: Status,
    /// Number of items (words, pairs, triples, …) examined.
    pub items: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub failures: Vec<String>,
}

impl Check {
    pub fn from_witnesses(name: impl Into<String>, items: usize, mut witnesses: Vec<String>) -> Check {
        witnesses.sort();
        witnesses.dedup();
        let status = if witnesses.is_empty() { Status::Pass } else { Status::Fail };
        let witness = witnesses.first().cloned();
        witnesses.truncate(MAX_LISTED);
        Check { name: name.into(), status, items, witness, failures: witnesses }
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct Report {
    pub suite: String,
    pub algebra: String,
    pub max_len: usize,
    pub checks: Vec<Check>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

impl Report {
    pub fn new(suite: impl Into<String>, algebra: impl Into<String>, max_len: usize) -> Report {
        Report { suite: suite.into(), algebra: algebra.into(), max_len, checks: Vec::new(), notes: Vec::new() }
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(Check::passed)
    }

    pub fn failed_checks(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed())
    }

    pub fn check(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn push(&mut self, c: Check) {
        self.checks.push(c);
    }

    /// Runs `f` on every item (in parallel when enabled); `Ok(Some(w))` marks
    /// a failure with witness `w`.
    pub fn run<T, F>(&mut self, name: &str, items: &[T], f: F) -> Result<()>
    where
        T: Sync,
        F: Fn(&T) -> Result<Option<String>> + Sync + Send,
    {
        let results = exec::map(items, f);
        let mut witnesses = Vec::new();
        for r in results {
            if let Some(w) = r? {
                witnesses.push(w);
            }
        }
        self.push(Check::from_witnesses(name, items.len(), witnesses));
        Ok(())
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// One line per check.
    pub fn to_human(&self) -> String {
        let mut out = format!("suite {} on {} (max length {})\n", self.suite, self.algebra, self.max_len);
        for c in &self.checks {
            let mark = if c.passed() { "pass" } else { "FAIL" };
            out.push_str(&format!("  {mark}  {} [{} items]", c.name, c.items));
            if let Some(w) = &c.witness {
                out.push_str(&format!("  witness: {w}"));
                if c.failures.len() > 1 {
                    out.push_str(&format!(" (+{} more)", c.failures.len() - 1));
                }
            }
            out.push('\n');
        }
        for n in &self.notes {
            out.push_str(&format!("  note: {n}\n"));
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn witnesses_are_sorted_and_json_is_stable() {
        let mut r = Report::new("hopf", "demo", 2);
        r.run("even", &[3u32, 1, 2, 5], |x| Ok((x % 2 == 1).then(|| format!("odd {x}")))).unwrap();
        let c = r.check("even").unwrap();
        assert_eq!(c.witness.as_deref(), Some("odd 1"));
        assert_eq!(c.failures, vec!["odd 1", "odd 3", "odd 5"]);
        assert!(!r.passed());
        let j = r.to_json();
        assert!(j.contains("\"maxLen\": 2"));
        assert!(j.contains("\"status\": \"fail\""));
        assert_eq!(j, r.clone().to_json());
    }
}
