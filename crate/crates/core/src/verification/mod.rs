//! Extremal scans over enumerated classes and the checks built on them.

mod claim1;
mod crossing;
mod domination;
mod extremal;
mod report;
mod stats;
mod suite;

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};

pub use claim1::{claim1_check, claim1_range, Claim1Report};
pub use crossing::{crossing_csv, crossing_table, CrossingRow};
pub use domination::{cycle_vertex_sequence, vertex_domination_check, VertexDomination};
pub use extremal::{
    extremal_scan, scan_class, witness_reports, ClassSummary, DegreeSequenceRecord, ExtremalReport, RankEntry,
    Ranking, ViolationRecord,
};
pub use report::{ClaimRecord, ClaimStatus, VerificationReport};
pub use suite::theorem_suite;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Direction {
    Min,
    Max,
}

impl Direction {
    pub fn name(self) -> &'static str {
        match self {
            Direction::Min => "min",
            Direction::Max => "max",
        }
    }
}

impl fmt::Display for Direction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Direction {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "min" => Ok(Direction::Min),
            "max" => Ok(Direction::Max),
            _ => Err(Error::Parse(format!("unknown direction {s:?}"))),
        }
    }
}
