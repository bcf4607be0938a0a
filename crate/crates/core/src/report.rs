//! Pass/fail reports with ordered fields, rendered as `key=value` lines.

use std::fmt;

pub use crate::cones::fraction;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LawReport {
    pub law: String,
    pub passed: bool,
    /// Parameters and measured values, in insertion order.
    pub fields: Vec<(String, String)>,
    /// First failing instance, stated so it can be re-checked on its own.
    pub counterexample: Option<String>,
    pub checks: u64,
}

impl LawReport {
    pub fn new(law: &str) -> Self {
        LawReport { law: law.to_string(), passed: true, fields: Vec::new(), counterexample: None, checks: 0 }
    }

    pub fn field(&mut self, key: &str, value: impl fmt::Display) -> &mut Self {
        self.fields.push((key.to_string(), value.to_string()));
        self
    }

    pub fn with(mut self, key: &str, value: impl fmt::Display) -> Self {
        self.field(key, value);
        self
    }

    /// Records one check; the first failure keeps its description.
    pub fn check(&mut self, ok: bool, what: impl FnOnce() -> String) -> bool {
        self.checks += 1;
        if !ok {
            if self.passed {
                self.counterexample = Some(what());
            }
            self.passed = false;
        }
        ok
    }

    pub fn fail(&mut self, what: String) {
        self.check(false, || what);
    }

    /// Folds a sub-report in, prefixing its fields.
    pub fn absorb(&mut self, prefix: &str, sub: &LawReport) {
        self.checks += sub.checks;
        self.field(&format!("{prefix}.verdict"), sub.verdict());
        for (k, v) in &sub.fields {
            self.fields.push((format!("{prefix}.{k}"), v.clone()));
        }
        if !sub.passed {
            let c = sub.counterexample.clone().unwrap_or_default();
            self.fail(format!("{prefix}: {c}"));
        }
    }

    pub fn verdict(&self) -> &'static str {
        if self.passed {
            "pass"
        } else {
            "fail"
        }
    }

    /// All fields including the header ones, in output order.
    pub fn pairs(&self) -> Vec<(String, String)> {
        let mut out = vec![
            ("law".to_string(), self.law.clone()),
            ("verdict".to_string(), self.verdict().to_string()),
            ("checks".to_string(), self.checks.to_string()),
        ];
        out.extend(self.fields.iter().cloned());
        if let Some(c) = &self.counterexample {
            out.push(("counterexample".to_string(), c.clone()));
        }
        out
    }
}

impl fmt::Display for LawReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, v) in self.pairs() {
            writeln!(f, "{k}={v}")?;
        }
        Ok(())
    }
}
