//! Suite reports: one line per verified relation with its anchor label, an
//! overall verdict, and a JSON form that is byte-stable for a fixed seed
//! (the elapsed_ms field excepted).

use crate::ring::RingId;
use serde::Serialize;
use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::time::Instant;

#[derive(Debug, Clone, Serialize)]
pub struct CheckLine {
    pub anchor: String,
    pub pass: bool,
    pub checked: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub ring: String,
    pub params: BTreeMap<String, String>,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
    pub checked_count: u64,
    pub elapsed_ms: u64,
    pub checks: Vec<CheckLine>,
}

impl SuiteReport {
    pub fn render_text(&self) -> String {
        let mut out = String::new();
        let verdict = if self.pass { "PASS" } else { "FAIL" };
        let _ = writeln!(
            out,
            "suite {} ring {}: {} ({} checks, {} ms)",
            self.suite, self.ring, verdict, self.checked_count, self.elapsed_ms
        );
        if !self.params.is_empty() {
            let kv: Vec<String> =
                self.params.iter().map(|(k, v)| format!("{}={}", k, v)).collect();
            let _ = writeln!(out, "  params: {}", kv.join(" "));
        }
        for c in &self.checks {
            let mark = if c.pass { "pass" } else { "FAIL" };
            let _ = write!(out, "  {}: {} ({} checked)", c.anchor, mark, c.checked);
            if let Some(n) = &c.note {
                let _ = write!(out, " [{}]", n);
            }
            if let Some(w) = &c.witness {
                let _ = write!(out, " witness: {}", w);
            }
            let _ = writeln!(out);
        }
        if let Some(w) = &self.witness {
            let _ = writeln!(out, "  witness: {}", w);
        }
        out
    }
}

/// Accumulates check lines and timing for one suite run.
pub struct ReportBuilder {
    suite: String,
    ring: String,
    params: BTreeMap<String, String>,
    checks: Vec<CheckLine>,
    started: Instant,
}

impl ReportBuilder {
    pub fn new(suite: &str, ring: RingId) -> ReportBuilder {
        ReportBuilder {
            suite: suite.to_owned(),
            ring: ring.token().to_owned(),
            params: BTreeMap::new(),
            checks: Vec::new(),
            started: Instant::now(),
        }
    }

    pub fn param(&mut self, key: &str, value: impl ToString) {
        self.params.insert(key.to_owned(), value.to_string());
    }

    pub fn check(
        &mut self,
        anchor: &str,
        pass: bool,
        checked: u64,
        witness: Option<String>,
        note: Option<String>,
    ) {
        debug_assert!(pass || witness.is_some(), "failures must carry a witness");
        self.checks.push(CheckLine { anchor: anchor.to_owned(), pass, checked, witness, note });
    }

    /// Convenience for loops that track the first failure as a witness.
    pub fn tally(&mut self, anchor: &str, checked: u64, witness: Option<String>) {
        self.check(anchor, witness.is_none(), checked, witness, None);
    }

    pub fn finish(self) -> SuiteReport {
        let pass = !self.checks.is_empty() && self.checks.iter().all(|c| c.pass);
        let witness = self.checks.iter().find(|c| !c.pass).and_then(|c| c.witness.clone());
        let checked_count = self.checks.iter().map(|c| c.checked).sum();
        SuiteReport {
            suite: self.suite,
            ring: self.ring,
            params: self.params,
            pass,
            witness,
            checked_count,
            elapsed_ms: self.started.elapsed().as_millis() as u64,
            checks: self.checks,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn report_aggregates_checks() {
        let mut rb = ReportBuilder::new("relations", RingId::Z);
        rb.param("samples", 500u64);
        rb.check("CL1", true, 10, None, None);
        rb.check("CL2", false, 5, Some("n=3, n'=4".into()), None);
        let r = rb.finish();
        assert!(!r.pass);
        assert_eq!(r.checked_count, 15);
        assert_eq!(r.witness.as_deref(), Some("n=3, n'=4"));
        assert_eq!(r.checks.len(), 2);
    }

    #[test]
    fn json_shape_is_stable() {
        let mut rb = ReportBuilder::new("minimality", RingId::F2t);
        rb.param("seed", 7u64);
        rb.check("dense-orbit", true, 3, None, Some("translations only".into()));
        let mut r = rb.finish();
        r.elapsed_ms = 0;
        let js = serde_json::to_string(&r).unwrap();
        assert_eq!(
            js,
            "{\"suite\":\"minimality\",\"ring\":\"F2t\",\"params\":{\"seed\":\"7\"},\
             \"pass\":true,\"checked_count\":3,\"elapsed_ms\":0,\"checks\":[{\"anchor\":\
             \"dense-orbit\",\"pass\":true,\"checked\":3,\"note\":\"translations only\"}]}"
        );
    }

    #[test]
    fn text_rendering_mentions_failures() {
        let mut rb = ReportBuilder::new("expectation", RingId::Zi);
        rb.check("intertwine", false, 1, Some("monomial (2,1,3,1,5)".into()), None);
        let text = rb.finish().render_text();
        assert!(text.contains("FAIL"));
        assert!(text.contains("monomial (2,1,3,1,5)"));
    }

    #[test]
    fn empty_report_does_not_pass() {
        let rb = ReportBuilder::new("relations", RingId::Z);
        assert!(!rb.finish().pass);
    }
}
