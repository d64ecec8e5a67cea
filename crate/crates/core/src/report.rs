//! Structured verification reports with a one-line text rendering and a
//! stable JSON schema: `suite`, `params`, `verdict`, `counters`,
//! `witnesses`, `failures`.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;
use serde_json::Value;

/// Failures kept verbatim in a report; the rest are only counted.
const MAX_RECORDED_FAILURES: usize = 20;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Verdict {
    Pass,
    Fail,
    Undecided,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Pass => "PASS",
            Verdict::Fail => "FAIL",
            Verdict::Undecided => "UNDECIDED",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Failure {
    pub detail: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    pub undecided: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Report {
    pub suite: String,
    pub params: BTreeMap<String, Value>,
    pub verdict: Verdict,
    pub counters: BTreeMap<String, u64>,
    pub witnesses: Vec<String>,
    pub failures: Vec<Failure>,
    #[serde(skip)]
    failed: u64,
    #[serde(skip)]
    undecided: u64,
}

impl Report {
    pub fn new(suite: impl Into<String>) -> Self {
        Report {
            suite: suite.into(),
            params: BTreeMap::new(),
            verdict: Verdict::Pass,
            counters: BTreeMap::new(),
            witnesses: Vec::new(),
            failures: Vec::new(),
            failed: 0,
            undecided: 0,
        }
    }

    pub fn param(mut self, key: &str, value: impl Into<Value>) -> Self {
        self.params.insert(key.to_string(), value.into());
        self
    }

    pub fn count(&mut self, key: &str, n: u64) {
        *self.counters.entry(key.to_string()).or_default() += n;
    }

    pub fn witness(&mut self, w: impl Into<String>) {
        self.witnesses.push(w.into());
    }

    pub fn fail(&mut self, detail: impl Into<String>) {
        self.push(detail.into(), None, false);
    }

    pub fn fail_seed(&mut self, detail: impl Into<String>, seed: u64) {
        self.push(detail.into(), Some(seed), false);
    }

    pub fn undecided(&mut self, detail: impl Into<String>, seed: Option<u64>) {
        self.push(detail.into(), seed, true);
    }

    fn push(&mut self, detail: String, seed: Option<u64>, undecided: bool) {
        if undecided {
            self.undecided += 1;
        } else {
            self.failed += 1;
        }
        if self.failures.len() < MAX_RECORDED_FAILURES {
            self.failures.push(Failure {
                detail,
                seed,
                undecided,
            });
        }
    }

    /// Folds another report's counters and failures into this one.
    pub fn absorb(&mut self, other: Report) {
        for (k, v) in other.counters {
            self.count(&k, v);
        }
        self.witnesses.extend(other.witnesses);
        let room = MAX_RECORDED_FAILURES.saturating_sub(self.failures.len());
        self.failures.extend(other.failures.into_iter().take(room));
        self.failed += other.failed;
        self.undecided += other.undecided;
    }

    pub fn finish(mut self) -> Self {
        if self.failed > 0 {
            self.counters.insert("failures".into(), self.failed);
        }
        if self.undecided > 0 {
            self.counters.insert("undecided".into(), self.undecided);
        }
        self.verdict = if self.failed > 0 {
            Verdict::Fail
        } else if self.undecided > 0 {
            Verdict::Undecided
        } else {
            Verdict::Pass
        };
        self
    }

    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }

    pub fn to_text(&self) -> String {
        let mut out = self.verdict.to_string();
        for (k, v) in &self.counters {
            out.push_str(&format!(" {k}={v}"));
        }
        for f in &self.failures {
            let tag = if f.undecided { "undecided" } else { "failure" };
            out.push_str(&format!("\n  {tag}: {}", f.detail));
            if let Some(seed) = f.seed {
                out.push_str(&format!(" (seed={seed})"));
            }
        }
        out
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("reports serialize")
    }
}
