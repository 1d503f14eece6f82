//! Machine-readable conformance reports: for each concomitant of a
//! classifier battery, the transvection plan in use, the candidate plans that
//! were tried for notationally ambiguous definitions, and the vanishing
//! column over the orbit representatives compared with the expected column.

use crate::cayley::PlanStep;

/// Serializable description of a transvection plan (or of a determinantal
/// construction, in which case `steps` is empty and `formula` carries the
/// definition).
#[derive(Debug, Clone, serde::Serialize)]
pub struct PlanDoc {
    pub formula: String,
    pub factors: Vec<String>,
    pub steps: Vec<PlanStep>,
}

impl PlanDoc {
    pub fn determinantal(formula: &str) -> Self {
        PlanDoc { formula: formula.to_string(), factors: Vec::new(), steps: Vec::new() }
    }

    pub fn plan(formula: &str, factors: &[&str], steps: Vec<PlanStep>) -> Self {
        PlanDoc {
            formula: formula.to_string(),
            factors: factors.iter().map(|s| s.to_string()).collect(),
            steps,
        }
    }
}

/// One candidate reading of an ambiguous definition and its vanishing column.
#[derive(Debug, Clone, serde::Serialize)]
pub struct CandidateDoc {
    pub name: String,
    pub plan: PlanDoc,
    /// Vanishing column over the representatives, top orbit first.
    pub column: Vec<u8>,
    pub selected: bool,
    pub note: String,
}

/// Report entry for one concomitant of the battery.
#[derive(Debug, Clone, serde::Serialize)]
pub struct ConcomitantEntry {
    pub name: String,
    pub chosen: PlanDoc,
    pub column: Vec<u8>,
    pub expected: Vec<u8>,
    pub matches: bool,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub candidates: Vec<CandidateDoc>,
    /// Cells that no structurally sensible plan reproduces (ideally empty).
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub deviations: Vec<String>,
}

#[derive(Debug, Clone, serde::Serialize)]
pub struct ConformanceReport {
    pub format: [usize; 3],
    /// Orbit labels in column order (top orbit first).
    pub orbit_order: Vec<&'static str>,
    pub concomitants: Vec<ConcomitantEntry>,
}

impl ConformanceReport {
    /// Total number of irreproducible cells across all entries.
    pub fn deviation_count(&self) -> usize {
        self.concomitants.iter().map(|c| c.deviations.len()).sum()
    }

    pub fn all_match(&self) -> bool {
        self.concomitants.iter().all(|c| c.matches)
    }
}

/// Compare a computed column against the expected one and itemize mismatches.
pub fn diff_column(
    name: &str,
    labels: &[&'static str],
    got: &[u8],
    expected: &[u8],
) -> Vec<String> {
    labels
        .iter()
        .zip(got.iter().zip(expected.iter()))
        .filter(|(_, (g, e))| g != e)
        .map(|(l, (g, e))| format!("{name} on {l}: computed {g}, table says {e}"))
        .collect()
}
