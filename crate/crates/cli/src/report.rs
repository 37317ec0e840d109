use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skip,
    Error,
}

impl Status {
    pub fn label(self) -> &'static str {
        match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Skip => "SKIP",
            Status::Error => "ERROR",
        }
    }

    pub fn is_pass(self) -> bool {
        self == Status::Pass
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckResult {
    pub check_id: String,
    pub paper_anchor: String,
    pub status: Status,
    pub computed: String,
    pub expected: String,
    pub elapsed_ms: u64,
    pub notes: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub version: String,
    pub seed: u64,
    pub results: Vec<CheckResult>,
}

impl VerificationReport {
    pub fn all_passed(&self) -> bool {
        self.results.iter().all(|r| r.status == Status::Pass)
    }

    pub fn exit_code(&self) -> i32 {
        if self.results.iter().any(|r| matches!(r.status, Status::Fail | Status::Error)) {
            1
        } else {
            0
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// Same report with every timing field zeroed.
    pub fn without_timing(&self) -> Self {
        let mut r = self.clone();
        for c in &mut r.results {
            c.elapsed_ms = 0;
        }
        r
    }
}
