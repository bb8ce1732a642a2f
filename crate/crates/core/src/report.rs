use serde::Serialize;

/// Why a single oracle case failed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum FailureKind {
    /// No morphism into the candidate.
    Missing,
    /// More than one morphism into the candidate.
    NonUnique,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CaseFailure {
    pub base: String,
    /// Index of the reflexive-graph structure on the base, for graph oracles.
    pub structure: Option<usize>,
    pub action: usize,
    pub kind: FailureKind,
    pub morphisms: usize,
}

/// Outcome of checking a candidate against "exactly one morphism from every
/// split extension in the fiber".
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub kernel: String,
    pub candidate_order: usize,
    pub cases_checked: usize,
    pub failures: Vec<CaseFailure>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Classifies a morphism count.
pub(crate) fn classify(count: usize) -> Option<FailureKind> {
    match count {
        1 => None,
        0 => Some(FailureKind::Missing),
        _ => Some(FailureKind::NonUnique),
    }
}
