//! Line-oriented `key: value` reports with a fixed key order.

use std::fmt::{self, Display};
use std::time::Duration;

use bent_core::search::ea_fingerprint;
use bent_core::{BooleanFunction, ConstructionReport};

/// Largest arity for which reports include EA fingerprints.
const FINGERPRINT_MAX_N: u32 = 14;

#[derive(Debug, Default)]
pub struct Report {
    lines: Vec<(String, String)>,
}

impl Report {
    pub fn new(command: &str) -> Self {
        let mut r = Self::default();
        r.push("command", command);
        r
    }

    pub fn push(&mut self, key: impl Into<String>, value: impl Display) {
        self.lines.push((key.into(), value.to_string()));
    }

    pub fn function(&mut self, label: &str, f: &BooleanFunction) {
        self.push(format!("{label}.degree"), f.algebraic_degree());
        if f.n() <= FINGERPRINT_MAX_N {
            self.push(format!("{label}.fingerprint"), ea_fingerprint(f));
        }
    }

    pub fn construction(&mut self, c: &ConstructionReport) {
        self.push("construction", c.construction);
        match c.pairing.field() {
            Some(field) => self.push("field", field),
            None => self.push("field", format!("n={} (bitwise)", c.pairing.n())),
        }
        self.push("pairing", c.pairing.name());
        for (k, v) in &c.parameters {
            self.push(format!("param.{k}"), v);
        }
        for cond in &c.side_conditions {
            let verdict = if cond.passed { "pass" } else { "fail" };
            match &cond.detail {
                Some(d) => self.push(format!("condition.{}", cond.name), format!("{verdict} ({d})")),
                None => self.push(format!("condition.{}", cond.name), verdict),
            }
        }
        for w in &c.warnings {
            self.push("warning", w);
        }
        for n in &c.notes {
            self.push("note", n);
        }
        self.push("h.bent", c.verification.h_bent);
        match &c.h_star {
            Some(_) => self.push("h_star.dual_matches", c.verification.dual_matches),
            None => self.push("h_star.dual_matches", "undefined"),
        }
        self.function("h", &c.h);
        if let Some(hs) = &c.h_star {
            self.function("h_star", hs);
        }
    }

    pub fn render(&self, elapsed: Duration) -> String {
        self.to_string() + &format!("elapsed_ms: {}\n", elapsed.as_millis())
    }
}

impl Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, v) in &self.lines {
            writeln!(f, "{k}: {v}")?;
        }
        Ok(())
    }
}
