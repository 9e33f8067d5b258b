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

//! Iterative pairwise rebalancing starting from an arbitrary coloring.

use crate::error::{Error, Result};
use crate::interval::{for_each_location, normalize, Coloring, Instance, SweepStep};
use crate::two_color::two_color_any;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DeWerraOutcome {
    pub coloring: Coloring,
    /// Number of pair recolorings performed.
    pub recolorings: usize,
}

/// Starts from the round-robin coloring `i -> i mod k + 1`.
pub fn k_color_dewerra(instance: &Instance) -> Result<DeWerraOutcome> {
    let k = instance.k();
    let start = (0..instance.len()).map(|i| i % k + 1).collect();
    k_color_dewerra_from(instance, Coloring::new(start, k)?)
}

/// Repeatedly picks the color pair `(i, j)` with the largest
/// `max_x |c_i(x) - c_j(x)|` (smallest pair on ties) and replaces the coloring
/// of the intervals colored `i` or `j` by a balanced 2-coloring of them. The
/// class holding the lowest-id such interval keeps color `i`.
pub fn k_color_dewerra_from(instance: &Instance, start: Coloring) -> Result<DeWerraOutcome> {
    let k = instance.k();
    start.check(instance.len(), k)?;
    let mut colors = start.into_vec();
    if k == 1 {
        return Ok(DeWerraOutcome {
            coloring: Coloring::from_vec(colors),
            recolorings: 0,
        });
    }
    let limit = k * (k - 1) / 2 + k;
    let norm = normalize(instance);
    let mut recolorings = 0;
    loop {
        let (worst, (ci, cj)) = worst_pair(&norm, &colors, k);
        if worst <= 1 {
            break;
        }
        if recolorings == limit {
            return Err(Error::RecoloringBound(limit));
        }
        let ids: Vec<usize> = (0..colors.len())
            .filter(|&i| colors[i] == ci || colors[i] == cj)
            .collect();
        let sub = instance.subset(&ids, 2)?;
        let sub_colors = two_color_any(&sub)?;
        let keep = sub_colors.colors()[0];
        for (pos, &id) in ids.iter().enumerate() {
            colors[id] = if sub_colors.colors()[pos] == keep { ci } else { cj };
        }
        recolorings += 1;
    }
    Ok(DeWerraOutcome {
        coloring: Coloring::from_vec(colors),
        recolorings,
    })
}

/// Largest pairwise count difference over all points and the pair attaining it.
fn worst_pair(norm: &crate::interval::NormalizedInstance<'_>, colors: &[usize], k: usize) -> (usize, (usize, usize)) {
    let mut counts = vec![0i64; k + 1];
    let mut best = vec![0usize; k * k];
    for_each_location(norm, |step| match step {
        SweepStep::Enter(i) => counts[colors[i]] += 1,
        SweepStep::Leave(i) => counts[colors[i]] -= 1,
        SweepStep::At(_) => {
            for a in 1..=k {
                for b in a + 1..=k {
                    let d = counts[a].abs_diff(counts[b]) as usize;
                    let slot = &mut best[(a - 1) * k + (b - 1)];
                    *slot = (*slot).max(d);
                }
            }
        }
    });
    let mut out = (0, (1, 2));
    for a in 1..=k {
        for b in a + 1..=k {
            let d = best[(a - 1) * k + (b - 1)];
            if d > out.0 {
                out = (d, (a, b));
            }
        }
    }
    out
}
