// Licensed under the Apache License, Version 2.0 (the "License"); you may
// not use this file except in compliance with the License. You may obtain
// a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS, WITHOUT
// WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied. See the
// License for the specific language governing permissions and limitations
// under the License.

//! NAE-3SAT and the reductions showing that balanced coloring is hard for
//! boxes, weighted intervals and multiple intervals.

mod boxes;
mod multiple;
mod reduction;
mod weighted;

pub use boxes::{
    box_cells, box_imbalance, box_min_imbalance_oracle, decide_balanced_boxes, AxisBox, BoxImbalance, BoxInstance,
    Cell, Provenance, Sides, DEFAULT_NODE_BUDGET,
};
pub use multiple::{decide_multiple_intervals, reduce_nae_to_multiple_intervals, MultiIntervalInstance};
pub use reduction::{audit_reduction, reduce_nae_to_boxes};
pub use weighted::{min_weighted_imbalance_oracle, reduce_partition_to_weighted, weighted_imbalance, WeightedInstance};

use crate::error::{Error, Result};

/// Clauses of three 1-based variables; a clause is satisfied when its
/// literals are not all equal. Repeated variables are allowed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NaeFormula {
    num_vars: usize,
    clauses: Vec<[usize; 3]>,
}

impl NaeFormula {
    pub fn new(num_vars: usize, clauses: Vec<[usize; 3]>) -> Result<NaeFormula> {
        for (i, clause) in clauses.iter().enumerate() {
            if let Some(&v) = clause.iter().find(|&&v| v == 0 || v > num_vars) {
                return Err(Error::InvalidFormula(format!(
                    "clause {} uses variable {v} outside 1..={num_vars}",
                    i + 1
                )));
            }
        }
        Ok(NaeFormula { num_vars, clauses })
    }

    /// Variables numbered up to the largest one mentioned.
    pub fn from_clauses(clauses: Vec<[usize; 3]>) -> Result<NaeFormula> {
        let num_vars = clauses.iter().flatten().copied().max().unwrap_or(0);
        NaeFormula::new(num_vars, clauses)
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn clauses(&self) -> &[[usize; 3]] {
        &self.clauses
    }

    /// `assignment[v - 1]` is the value of variable `v`.
    pub fn is_satisfied_by(&self, assignment: &[bool]) -> bool {
        self.clauses.iter().all(|c| {
            let first = assignment[c[0] - 1];
            c[1..].iter().any(|&v| assignment[v - 1] != first)
        })
    }
}

pub const NAE_BRUTE_FORCE_LIMIT: usize = 24;

/// A satisfying assignment by exhaustive search, fixing variable 1 to false.
pub fn nae_brute_force(formula: &NaeFormula) -> Result<Option<Vec<bool>>> {
    let n = formula.num_vars;
    if n > NAE_BRUTE_FORCE_LIMIT {
        return Err(Error::TooLarge(format!("{n} variables exceed {NAE_BRUTE_FORCE_LIMIT}")));
    }
    // complementing an assignment keeps every clause satisfied
    let free = n.saturating_sub(1);
    for mask in 0u64..1 << free {
        let assignment: Vec<bool> = (0..n).map(|v| v > 0 && mask >> (v - 1) & 1 == 1).collect();
        if formula.is_satisfied_by(&assignment) {
            return Ok(Some(assignment));
        }
    }
    Ok(None)
}
