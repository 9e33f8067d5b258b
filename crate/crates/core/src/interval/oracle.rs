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

//! Exhaustive minimum-imbalance search for desk-scale instances.

use super::{divisibility_predicts_zero, point_cliques, Coloring, Instance};
use crate::error::{Error, Result};

pub const DEFAULT_ORACLE_LIMIT: usize = 12;

/// Smallest spread over all `k`-colorings of items `0..n`, where the spread is
/// the maximum over `cliques` of the largest minus the smallest color count.
///
/// Colorings are visited in lexicographic order restricted to first-occurrence
/// labeling (item 0 gets color 1, each item uses at most one more color than
/// its predecessors). Every coloring has such a relabeling that is
/// lexicographically no larger, so the returned minimizer is the
/// lexicographically smallest one overall. The search stops early once
/// `lower_bound` is reached.
pub fn min_spread_search(n: usize, k: usize, cliques: &[Vec<usize>], lower_bound: usize) -> (usize, Vec<usize>) {
    if n == 0 {
        return (0, Vec::new());
    }
    let mut complete_at: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (idx, clique) in cliques.iter().enumerate() {
        if let Some(&last) = clique.iter().max() {
            complete_at[last].push(idx);
        }
    }
    let mut search = Search {
        k,
        cliques,
        complete_at,
        colors: vec![0; n],
        best: usize::MAX,
        best_colors: Vec::new(),
        lower_bound,
        counts: vec![0; k + 1],
    };
    search.descend(0, 0, 0);
    (search.best, search.best_colors)
}

struct Search<'c> {
    k: usize,
    cliques: &'c [Vec<usize>],
    complete_at: Vec<Vec<usize>>,
    colors: Vec<usize>,
    best: usize,
    best_colors: Vec<usize>,
    lower_bound: usize,
    counts: Vec<usize>,
}

impl Search<'_> {
    /// Returns true once the lower bound has been reached.
    fn descend(&mut self, pos: usize, used: usize, path_max: usize) -> bool {
        if pos == self.colors.len() {
            if path_max < self.best {
                self.best = path_max;
                self.best_colors = self.colors.clone();
            }
            return self.best <= self.lower_bound;
        }
        let top = (used + 1).min(self.k);
        for c in 1..=top {
            self.colors[pos] = c;
            let mut worst = path_max;
            for j in 0..self.complete_at[pos].len() {
                let idx = self.complete_at[pos][j];
                worst = worst.max(self.spread_of(idx));
            }
            if worst >= self.best {
                continue;
            }
            if self.descend(pos + 1, used.max(c), worst) {
                return true;
            }
        }
        false
    }

    fn spread_of(&mut self, idx: usize) -> usize {
        self.counts.iter_mut().for_each(|c| *c = 0);
        for &item in &self.cliques[idx] {
            self.counts[self.colors[item]] += 1;
        }
        let slice = &self.counts[1..];
        slice.iter().max().unwrap() - slice.iter().min().unwrap()
    }
}

/// Minimum imbalance of `instance` by exhaustive search, with the
/// lexicographically smallest minimizing coloring.
pub fn min_imbalance_oracle(instance: &Instance, limit_n: usize) -> Result<(usize, Coloring)> {
    let n = instance.len();
    if n > limit_n {
        return Err(Error::TooLarge(format!("{n} intervals exceed the limit of {limit_n}")));
    }
    let lower_bound = usize::from(!divisibility_predicts_zero(instance));
    let cliques = point_cliques(instance);
    let (value, colors) = min_spread_search(n, instance.k(), &cliques, lower_bound);
    Ok((value, Coloring::from_vec(colors)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::interval::imbalance;

    fn inst(pairs: &[(i64, i64)], k: usize) -> Instance {
        Instance::from_ints(pairs, k).unwrap()
    }

    #[test]
    fn small_cases() {
        let (v, c) = min_imbalance_oracle(&inst(&[(0, 2), (1, 3), (0, 3)], 2), 12).unwrap();
        assert_eq!(v, 1);
        assert_eq!(c.colors(), &[1, 1, 2]);
        let (v, c) = min_imbalance_oracle(&inst(&[(0, 1), (0, 1)], 2), 12).unwrap();
        assert_eq!(v, 0);
        assert_eq!(c.colors(), &[1, 2]);
        let (v, c) = min_imbalance_oracle(&inst(&[(0, 1)], 2), 12).unwrap();
        assert_eq!(v, 1);
        assert_eq!(c.colors(), &[1]);
        let (v, c) = min_imbalance_oracle(&inst(&[], 2), 12).unwrap();
        assert_eq!((v, c.len()), (0, 0));
    }

    #[test]
    fn too_large() {
        let pairs: Vec<(i64, i64)> = (0..13).map(|i| (i, i + 1)).collect();
        assert!(matches!(
            min_imbalance_oracle(&inst(&pairs, 2), DEFAULT_ORACLE_LIMIT),
            Err(Error::TooLarge(_))
        ));
    }

    /// Plain k^n enumeration, no pruning, for cross-checking.
    fn naive(instance: &Instance) -> (usize, Vec<usize>) {
        let n = instance.len();
        let k = instance.k();
        let mut best = (usize::MAX, Vec::new());
        let total = k.pow(n as u32);
        for code in 0..total {
            let mut colors = vec![0; n];
            let mut c = code;
            for slot in colors.iter_mut().rev() {
                *slot = c % k + 1;
                c /= k;
            }
            let v = imbalance(instance, &Coloring::new(colors.clone(), k).unwrap())
                .unwrap()
                .value;
            if v < best.0 {
                best = (v, colors);
            }
        }
        best
    }

    #[test]
    fn agrees_with_naive_enumeration() {
        let cases: &[(&[(i64, i64)], usize)] = &[
            (&[(0, 4), (1, 2), (1, 5), (3, 6), (5, 7)], 2),
            (&[(0, 4), (1, 2), (1, 5), (3, 6), (5, 7)], 3),
            (&[(0, 0), (0, 0), (0, 0), (0, 1)], 3),
            (&[(0, 3), (0, 3), (1, 2), (2, 4), (2, 2)], 2),
        ];
        for &(pairs, k) in cases {
            let i = inst(pairs, k);
            let (v, c) = min_imbalance_oracle(&i, 12).unwrap();
            let (nv, nc) = naive(&i);
            assert_eq!(v, nv);
            assert_eq!(c.colors(), nc.as_slice());
        }
    }
}
