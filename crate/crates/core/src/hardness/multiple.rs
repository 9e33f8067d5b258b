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

//! NAE-3SAT to balanced 2-coloring of interval groups sharing one color.

use super::NaeFormula;
use crate::error::{Error, Result};
use crate::interval::{is_balanced, Coloring, Instance};

/// Intervals whose `groups[v - 1]` must all receive the color of variable `v`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiIntervalInstance {
    pub instance: Instance,
    pub groups: Vec<Vec<usize>>,
}

/// Clause `i` becomes three copies of `[3i, 3i + 1]`, one per literal.
pub fn reduce_nae_to_multiple_intervals(formula: &NaeFormula) -> Result<MultiIntervalInstance> {
    let mut bounds = Vec::with_capacity(3 * formula.clauses().len());
    let mut groups = vec![Vec::new(); formula.num_vars()];
    for (i, clause) in formula.clauses().iter().enumerate() {
        let lo = 3 * i as i64;
        for &v in clause {
            groups[v - 1].push(bounds.len());
            bounds.push((lo, lo + 1));
        }
    }
    Ok(MultiIntervalInstance {
        instance: Instance::from_ints(&bounds, 2)?,
        groups,
    })
}

pub const MULTIPLE_INTERVALS_LIMIT: usize = 24;

/// A balanced coloring that is constant on every group, by trying all
/// group colorings with the first nonempty group fixed to color 1.
pub fn decide_multiple_intervals(multi: &MultiIntervalInstance) -> Result<Option<Coloring>> {
    let used: Vec<&Vec<usize>> = multi.groups.iter().filter(|g| !g.is_empty()).collect();
    if used.len() > MULTIPLE_INTERVALS_LIMIT {
        return Err(Error::TooLarge(format!(
            "{} groups exceed {MULTIPLE_INTERVALS_LIMIT}",
            used.len()
        )));
    }
    let n = multi.instance.len();
    let free = used.len().saturating_sub(1);
    for mask in 0u64..1 << free {
        let mut colors = vec![1usize; n];
        for (g, members) in used.iter().enumerate().skip(1) {
            let color = 1 + (mask >> (g - 1) & 1) as usize;
            for &i in members.iter() {
                colors[i] = color;
            }
        }
        let coloring = Coloring::new(colors, multi.instance.k())?;
        if is_balanced(&multi.instance, &coloring)? {
            return Ok(Some(coloring));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::super::nae_brute_force;
    use super::*;

    fn formula(clauses: &[[usize; 3]]) -> NaeFormula {
        NaeFormula::from_clauses(clauses.to_vec()).unwrap()
    }

    #[test]
    fn examples() {
        let multi = reduce_nae_to_multiple_intervals(&formula(&[[1, 2, 3]])).unwrap();
        assert_eq!(multi.instance.len(), 3);
        assert_eq!(multi.groups, vec![vec![0], vec![1], vec![2]]);
        assert!(decide_multiple_intervals(&multi).unwrap().is_some());

        let multi = reduce_nae_to_multiple_intervals(&formula(&[[1, 1, 1]])).unwrap();
        assert_eq!(multi.groups, vec![vec![0, 1, 2]]);
        assert_eq!(decide_multiple_intervals(&multi).unwrap(), None);

        let multi = reduce_nae_to_multiple_intervals(&formula(&[[1, 2, 3], [1, 2, 4]])).unwrap();
        assert_eq!(multi.instance.len(), 6);
        assert_eq!(multi.groups, vec![vec![0, 3], vec![1, 4], vec![2], vec![5]]);
        let second = &multi.instance.intervals()[3];
        assert_eq!((second.lo.to_f64(), second.hi.to_f64()), (3.0, 4.0));
    }

    #[test]
    fn agrees_with_brute_force() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(5);
        for _ in 0..200 {
            let vars = rng.gen_range(1..=5);
            let m = rng.gen_range(0..=4);
            let clauses = (0..m)
                .map(|_| {
                    [
                        rng.gen_range(1..=vars),
                        rng.gen_range(1..=vars),
                        rng.gen_range(1..=vars),
                    ]
                })
                .collect();
            let f = NaeFormula::new(vars, clauses).unwrap();
            let multi = reduce_nae_to_multiple_intervals(&f).unwrap();
            assert_eq!(
                decide_multiple_intervals(&multi).unwrap().is_some(),
                nae_brute_force(&f).unwrap().is_some()
            );
        }
    }
}
