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

//! Intervals with integer weights; Partition reduces to zero imbalance.

use crate::error::{Error, Result};
use crate::interval::{point_cliques, Coloring, Coord, Instance};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightedInstance {
    instance: Instance,
    weights: Vec<u64>,
}

impl WeightedInstance {
    pub fn new(instance: Instance, weights: Vec<u64>) -> Result<WeightedInstance> {
        if weights.len() != instance.len() {
            return Err(Error::LengthMismatch {
                expected: instance.len(),
                got: weights.len(),
            });
        }
        if let Some(index) = weights.iter().position(|&w| w == 0) {
            return Err(Error::InvalidWeight { index });
        }
        Ok(WeightedInstance { instance, weights })
    }

    pub fn instance(&self) -> &Instance {
        &self.instance
    }

    pub fn weights(&self) -> &[u64] {
        &self.weights
    }
}

/// One copy of `[0, 1]` per value, weighted by it, for two colors.
pub fn reduce_partition_to_weighted(values: &[u64]) -> Result<WeightedInstance> {
    let bounds = vec![(Coord::zero(), Coord::from_int(1)); values.len()];
    WeightedInstance::new(Instance::new(bounds, 2)?, values.to_vec())
}

/// Largest difference of per-color weight sums at any point.
pub fn weighted_imbalance(weighted: &WeightedInstance, coloring: &Coloring) -> Result<u64> {
    let k = weighted.instance.k();
    coloring.check(weighted.instance.len(), k)?;
    let mut worst = 0;
    for clique in point_cliques(&weighted.instance) {
        let mut sums = vec![0u64; k];
        for i in clique {
            sums[coloring.colors()[i] - 1] += weighted.weights[i];
        }
        worst = worst.max(sums.iter().max().unwrap_or(&0) - sums.iter().min().unwrap_or(&0));
    }
    Ok(worst)
}

/// Exhaustive minimum of [`weighted_imbalance`] over all `k^n` colorings.
pub fn min_weighted_imbalance_oracle(weighted: &WeightedInstance, limit_n: usize) -> Result<(u64, Coloring)> {
    let n = weighted.instance.len();
    let k = weighted.instance.k();
    if n > limit_n {
        return Err(Error::TooLarge(format!("{n} intervals exceed the limit of {limit_n}")));
    }
    let mut colors = vec![1usize; n];
    let mut best = (
        weighted_imbalance(weighted, &Coloring::from_vec(colors.clone()))?,
        colors.clone(),
    );
    while let Some(pos) = colors.iter().position(|&c| c < k) {
        colors[pos] += 1;
        colors[..pos].fill(1);
        let value = weighted_imbalance(weighted, &Coloring::from_vec(colors.clone()))?;
        if value < best.0 {
            best = (value, colors.clone());
        }
    }
    Ok((best.0, Coloring::from_vec(best.1)))
}
