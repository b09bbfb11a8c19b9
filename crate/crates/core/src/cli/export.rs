//! JSON matrix export.

use num::BigRational;
use num::ToPrimitive;
use serde::{Deserialize, Serialize};

use crate::realization::{FockMatrix, SubalgebraMode};
use crate::scalarfield::Assignment;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BasisLabel {
    pub index: usize,
    pub n: usize,
    /// Occupation of each active fermion mode.
    pub occupations: Vec<u8>,
    /// `n = D - 1`, where creation truncates.
    pub boundary: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Entry {
    pub row: usize,
    pub col: usize,
    pub value: String,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub float: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AssignmentLabel {
    pub q: String,
    pub p1: String,
    pub p2: String,
    pub p3: String,
}

impl From<&Assignment> for AssignmentLabel {
    fn from(a: &Assignment) -> Self {
        Self {
            q: a.q.to_string(),
            p1: a.p1.to_string(),
            p2: a.p2.to_string(),
            p3: a.p3.to_string(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Metadata {
    pub generator: String,
    pub mode: String,
    pub cutoff: usize,
    pub assignment: Option<AssignmentLabel>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MatrixExport {
    pub dimension: usize,
    pub basis: Vec<BasisLabel>,
    pub entries: Vec<Entry>,
    pub metadata: Metadata,
}

fn to_float(s: &str) -> Option<f64> {
    let r: BigRational = s.parse().ok()?;
    r.to_f64()
}

impl MatrixExport {
    pub fn new(generator: &str, mode: SubalgebraMode, m: &FockMatrix, assignment: Option<&Assignment>) -> Self {
        let space = m.space();
        let basis = (0..m.dim())
            .map(|index| {
                let s = space.state(index);
                BasisLabel {
                    index,
                    n: s.n,
                    occupations: s.occupations.iter().flatten().map(|&o| o as u8).collect(),
                    boundary: s.n + 1 == space.cutoff,
                }
            })
            .collect();
        let entries = m
            .entries()
            .into_iter()
            .map(|(row, col, c)| {
                let value = c.to_string();
                let float = assignment.and_then(|_| to_float(&value));
                Entry { row, col, value, float }
            })
            .collect();
        Self {
            dimension: m.dim(),
            basis,
            entries,
            metadata: Metadata {
                generator: generator.to_string(),
                mode: mode.name().to_string(),
                cutoff: space.cutoff,
                assignment: assignment.map(AssignmentLabel::from),
            },
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("serializable")
    }
}
