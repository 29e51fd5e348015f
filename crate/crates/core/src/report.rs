//! Machine-readable batch report.

use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::splitcheck::{
    build_generators, search_witness, verdict, GenParams, SearchOptions, VerdictMode,
};

pub const REPORT_VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessRecord {
    pub a: u8,
    pub b: u8,
    pub c: u8,
    pub a1: u8,
    pub b1: u8,
    pub c1: u8,
    pub u: u64,
    pub v: u64,
    pub u1: u64,
    pub v1: u64,
}

impl From<&GenParams> for WitnessRecord {
    fn from(p: &GenParams) -> Self {
        Self {
            a: p.a,
            b: p.b,
            c: p.c,
            a1: p.a1,
            b1: p.b1,
            c1: p.c1,
            u: p.u,
            v: p.v,
            u1: p.u1,
            v1: p.v1,
        }
    }
}

impl WitnessRecord {
    pub fn to_params(&self, n: u64) -> Result<GenParams> {
        GenParams::new(
            n,
            [self.a, self.b, self.c, self.a1, self.b1, self.c1],
            [self.u, self.v, self.u1, self.v1],
        )
    }
}

/// `T` and `R` of the witness, rendered with their modulus.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessMatrices {
    pub t: String,
    pub r: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DimRecord {
    pub n: u64,
    pub splits: bool,
    pub witness: Option<WitnessRecord>,
    pub witness_matrices: Option<WitnessMatrices>,
    pub candidates_checked: u64,
    pub witness_count: Option<u64>,
    pub notes: Vec<String>,
    pub millis: Option<u64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportDocument {
    pub version: String,
    pub generated_at: Option<u64>,
    pub mode: VerdictMode,
    pub dims: Vec<DimRecord>,
}

#[derive(Clone, Debug, Default)]
pub struct ReportOptions {
    /// Run the witness search instead of the closed-form verdict.
    pub search: Option<SearchOptions>,
    /// Leave out wall-clock fields so identical runs give identical bytes.
    pub no_timestamp: bool,
}

/// One record per even `n` in `dims`; odd values are skipped.
pub fn build_report(
    dims: impl IntoIterator<Item = u64>,
    options: &ReportOptions,
) -> Result<ReportDocument> {
    let mut records = Vec::new();
    let mode = match &options.search {
        Some(s) if s.exhaustive => VerdictMode::Exhaustive,
        Some(_) => VerdictMode::Direct,
        None => VerdictMode::ClosedForm,
    };
    for n in dims.into_iter().filter(|n| n % 2 == 0) {
        let start = Instant::now();
        let v = match &options.search {
            Some(s) => search_witness(n, s)?,
            None => verdict(n)?,
        };
        let witness_matrices = match &v.witness {
            Some(p) => {
                let (t, r) = build_generators(p)?;
                Some(WitnessMatrices {
                    t: t.to_string(),
                    r: r.to_string(),
                })
            }
            None => None,
        };
        records.push(DimRecord {
            n,
            splits: v.splits,
            witness: v.witness.as_ref().map(WitnessRecord::from),
            witness_matrices,
            candidates_checked: v.candidates_checked,
            witness_count: v.witness_count,
            notes: v.notes,
            millis: (!options.no_timestamp).then(|| start.elapsed().as_millis() as u64),
        });
    }
    let generated_at = if options.no_timestamp {
        None
    } else {
        std::time::SystemTime::now()
            .duration_since(std::time::UNIX_EPOCH)
            .ok()
            .map(|d| d.as_secs())
    };
    Ok(ReportDocument {
        version: REPORT_VERSION.to_string(),
        generated_at,
        mode,
        dims: records,
    })
}

impl ReportDocument {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report is always serializable")
    }

    pub fn from_json(s: &str) -> serde_json::Result<Self> {
        serde_json::from_str(s)
    }
}
