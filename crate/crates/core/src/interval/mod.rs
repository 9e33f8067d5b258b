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

//! Interval model, event normalization and imbalance evaluation.

mod coord;
mod imbalance;
mod normalize;
mod oracle;

pub use coord::Coord;
pub use imbalance::{
    divisibility_predicts_zero, for_each_location, imbalance, imbalance_with_regions, is_balanced, point_cliques,
    ColorCounter, ImbalanceReport, Location, RegionCounts, SweepStep,
};
pub use normalize::{normalize, Event, EventKind, NormalizedInstance};
pub use oracle::{min_imbalance_oracle, min_spread_search, DEFAULT_ORACLE_LIMIT};

use crate::error::{Error, Result};

/// A closed interval `[lo, hi]`; `lo == hi` is a point interval.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Interval {
    pub id: usize,
    pub lo: Coord,
    pub hi: Coord,
}

impl Interval {
    pub fn contains(&self, x: &Coord) -> bool {
        &self.lo <= x && x <= &self.hi
    }
}

/// Intervals with ids `0..n` plus the number of colors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Instance {
    intervals: Vec<Interval>,
    k: usize,
}

impl Instance {
    pub fn new<I>(bounds: I, k: usize) -> Result<Instance>
    where
        I: IntoIterator<Item = (Coord, Coord)>,
    {
        if k == 0 {
            return Err(Error::InvalidColorCount { k, min: 1 });
        }
        let mut intervals = Vec::new();
        for (id, (lo, hi)) in bounds.into_iter().enumerate() {
            if lo > hi {
                return Err(Error::InvertedInterval {
                    id,
                    lo: lo.to_string(),
                    hi: hi.to_string(),
                });
            }
            intervals.push(Interval { id, lo, hi });
        }
        Ok(Instance { intervals, k })
    }

    /// Shorthand for integer endpoints, mostly useful in tests.
    pub fn from_ints(bounds: &[(i64, i64)], k: usize) -> Result<Instance> {
        Instance::new(
            bounds
                .iter()
                .map(|&(lo, hi)| (Coord::from_int(lo), Coord::from_int(hi))),
            k,
        )
    }

    pub fn intervals(&self) -> &[Interval] {
        &self.intervals
    }

    pub fn len(&self) -> usize {
        self.intervals.len()
    }

    pub fn is_empty(&self) -> bool {
        self.intervals.is_empty()
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// Same intervals, different number of colors.
    pub fn with_k(&self, k: usize) -> Result<Instance> {
        if k == 0 {
            return Err(Error::InvalidColorCount { k, min: 1 });
        }
        Ok(Instance {
            intervals: self.intervals.clone(),
            k,
        })
    }

    /// The sub-instance formed by `ids`, renumbered `0..ids.len()` in the given order.
    pub fn subset(&self, ids: &[usize], k: usize) -> Result<Instance> {
        Instance::new(
            ids.iter()
                .map(|&i| (self.intervals[i].lo.clone(), self.intervals[i].hi.clone())),
            k,
        )
    }
}

/// Colors `1..=k`, one per interval, in instance order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Coloring {
    colors: Vec<usize>,
}

impl Coloring {
    pub fn new(colors: Vec<usize>, k: usize) -> Result<Coloring> {
        if let Some((index, &color)) = colors.iter().enumerate().find(|(_, &c)| c == 0 || c > k) {
            return Err(Error::ColorOutOfRange { index, color, k });
        }
        Ok(Coloring { colors })
    }

    /// Trusted constructor for algorithm outputs.
    pub(crate) fn from_vec(colors: Vec<usize>) -> Coloring {
        Coloring { colors }
    }

    pub fn colors(&self) -> &[usize] {
        &self.colors
    }

    pub fn len(&self) -> usize {
        self.colors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }

    pub fn into_vec(self) -> Vec<usize> {
        self.colors
    }

    /// Checks length and color range against `k` and `n`.
    pub fn check(&self, n: usize, k: usize) -> Result<()> {
        if self.colors.len() != n {
            return Err(Error::LengthMismatch {
                expected: n,
                got: self.colors.len(),
            });
        }
        match self.colors.iter().enumerate().find(|(_, &c)| c == 0 || c > k) {
            Some((index, &color)) => Err(Error::ColorOutOfRange { index, color, k }),
            None => Ok(()),
        }
    }
}
