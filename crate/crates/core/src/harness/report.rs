//! The JSON report of a run.

use serde::Serialize;

use crate::bubblecalc::BubbleConvention;
use crate::fockrep::VerifyReport;

use super::Suite;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConfigEcho {
    pub n: usize,
    pub r: u32,
    pub window: (i64, i64),
    pub margin: usize,
    pub suites: Vec<Suite>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub corrupt: Option<String>,
}

/// The conventions every verdict depends on.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Conventions {
    pub bubble_cw0: i64,
    pub bubble_ccw0: i64,
    pub coproduct_leg_order: String,
    pub r_expansion_dedup: String,
}

impl Conventions {
    pub fn new(b: &BubbleConvention) -> Self {
        Self {
            bubble_cw0: b.cw0,
            bubble_ccw0: b.ccw0,
            coproduct_leg_order: "E_i acts on leg k with q-powers from legs k+1..r; \
                                  E_-i with q-powers from legs 1..k-1"
                .to_string(),
            r_expansion_dedup: "one monomial per composition, at its first zero entry"
                .to_string(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub total: usize,
    pub passed: usize,
    pub failed: usize,
    pub overall: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SuiteReport {
    pub config: ConfigEcho,
    pub conventions: Conventions,
    pub reports: Vec<VerifyReport>,
    pub summary: Summary,
    pub duration_ms: u128,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.summary.overall
    }

    pub fn failures(&self) -> impl Iterator<Item = &VerifyReport> {
        self.reports.iter().filter(|r| !r.passed())
    }

    pub fn for_suite(&self, suite: Suite) -> impl Iterator<Item = &VerifyReport> {
        self.reports.iter().filter(move |r| r.suite == suite.name())
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

pub(crate) fn summarize(reports: &[VerifyReport]) -> Summary {
    let passed = reports.iter().filter(|r| r.passed()).count();
    Summary {
        total: reports.len(),
        passed,
        failed: reports.len() - passed,
        overall: passed == reports.len(),
    }
}
