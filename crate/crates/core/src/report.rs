//! Verdict records shared by every verification routine.

use serde::{Deserialize, Serialize};

use crate::polyfps::Poly;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Status {
    Pass,
    Fail,
    /// A stated identity that does not hold, with the deciding computation
    /// recorded. Expected output, not a failure.
    Audited,
}

/// Side-by-side record for an identity that is checked as stated and in a
/// derived alternative form.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct AuditDetail {
    pub stated: String,
    pub derived: String,
    pub deciding: String,
    pub verdict: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CheckReport {
    pub identity: String,
    pub n_range: [u64; 2],
    pub status: Status,
    pub residual: Option<Poly>,
    pub note: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub max_deviation: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub audit: Option<AuditDetail>,
}

impl CheckReport {
    pub fn new(identity: impl Into<String>, lo: u64, hi: u64) -> Self {
        Self {
            identity: identity.into(),
            n_range: [lo, hi],
            status: Status::Pass,
            residual: None,
            note: String::new(),
            max_deviation: None,
            audit: None,
        }
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = note.into();
        self
    }

    pub fn with_deviation(mut self, dev: f64) -> Self {
        self.max_deviation = Some(dev);
        self
    }

    pub fn fail(mut self, note: impl Into<String>) -> Self {
        self.status = Status::Fail;
        self.note = note.into();
        self
    }

    pub fn audited(mut self, detail: AuditDetail) -> Self {
        self.status = Status::Audited;
        self.note = detail.verdict.clone();
        self.audit = Some(detail);
        self
    }

    /// Runs an exact check for every `n` in `lo..=hi`; the first nonzero
    /// residual turns the report into a failure carrying that residual.
    pub fn exact_range(
        identity: impl Into<String>,
        lo: u64,
        hi: u64,
        mut residual: impl FnMut(u64) -> Poly,
    ) -> Self {
        let mut report = Self::new(identity, lo, hi);
        for n in lo..=hi {
            let r = residual(n);
            if !r.is_zero() {
                report.residual = Some(r);
                return report.fail(format!("nonzero residual at n = {n}"));
            }
        }
        report.with_note("exact zero residual")
    }
}
