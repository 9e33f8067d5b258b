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

use thiserror::Error;

/// Failure to read one of the supported input formats.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("invalid coordinate {0:?}")]
    Coord(String),
    #[error("line {line}: {message}")]
    Line { line: usize, message: String },
    #[error("invalid JSON: {0}")]
    Json(String),
    #[error("{0}")]
    Format(String),
}

impl ParseError {
    pub(crate) fn line(line: usize, message: impl Into<String>) -> ParseError {
        ParseError::Line {
            line,
            message: message.into(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("the number of colors must be at least {min}, got {k}")]
    InvalidColorCount { k: usize, min: usize },
    #[error("expected exactly {expected} colors, got {got}")]
    ColorCountMismatch { expected: usize, got: usize },
    #[error("interval {id} has lower endpoint {lo} above upper endpoint {hi}")]
    InvertedInterval { id: usize, lo: String, hi: String },
    #[error("coloring has {got} entries but the instance has {expected} items")]
    LengthMismatch { expected: usize, got: usize },
    #[error("color {color} at position {index} is outside 1..={k}")]
    ColorOutOfRange { index: usize, color: usize, k: usize },
    #[error("vertex {vertex} has degree {degree}, more than the {k} available colors")]
    DegreeTooLarge { vertex: usize, degree: usize, k: usize },
    #[error("instance too large for exhaustive search: {0}")]
    TooLarge(String),
    #[error("row {row} does not have consecutive ones in the given column order")]
    NotConsecutiveOnes { row: usize },
    #[error("online stream is not ordered by start point at position {0}")]
    UnorderedStream(usize),
    #[error("invalid arc {id}: {reason}")]
    InvalidArc { id: usize, reason: String },
    #[error("invalid formula: {0}")]
    InvalidFormula(String),
    #[error("weight at position {index} must be positive")]
    InvalidWeight { index: usize },
    #[error("invalid box {id}: {reason}")]
    InvalidBox { id: usize, reason: String },
    #[error("search gave up after {0} nodes")]
    SearchBudgetExhausted(u64),
    #[error("recoloring did not converge within {0} passes")]
    RecoloringBound(usize),
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
