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

//! Exact imbalance evaluation by sweeping the distinct points of the line.

use std::collections::BTreeSet;

use super::normalize::{normalize, EventKind, NormalizedInstance};
use super::{Coloring, Coord, Instance};
use crate::error::Result;

/// Per-color counts with O(1) updates and O(1) spread queries.
///
/// Counts change by one at a time, so the minimum and maximum can be kept
/// current with a histogram of count values.
#[derive(Debug, Clone)]
pub struct ColorCounter {
    counts: Vec<usize>,
    freq: Vec<usize>,
    min: usize,
    max: usize,
}

impl ColorCounter {
    pub fn new(k: usize) -> ColorCounter {
        ColorCounter {
            counts: vec![0; k],
            freq: vec![k],
            min: 0,
            max: 0,
        }
    }

    /// `color` is 1-based.
    pub fn add(&mut self, color: usize) {
        let v = self.counts[color - 1];
        self.counts[color - 1] = v + 1;
        self.freq[v] -= 1;
        if self.freq.len() <= v + 1 {
            self.freq.push(0);
        }
        self.freq[v + 1] += 1;
        self.max = self.max.max(v + 1);
        if v == self.min && self.freq[v] == 0 {
            self.min = v + 1;
        }
    }

    pub fn remove(&mut self, color: usize) {
        let v = self.counts[color - 1];
        assert!(v > 0, "removing color {color} with zero count");
        self.counts[color - 1] = v - 1;
        self.freq[v] -= 1;
        self.freq[v - 1] += 1;
        self.min = self.min.min(v - 1);
        if v == self.max && self.freq[v] == 0 {
            self.max = v - 1;
        }
    }

    /// Largest minus smallest count, zero-count colors included.
    pub fn spread(&self) -> usize {
        self.max - self.min
    }

    pub fn counts(&self) -> &[usize] {
        &self.counts
    }

    pub fn total(&self) -> usize {
        self.counts.iter().sum()
    }
}

/// A place on the line where the covering set is constant.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Location<'a> {
    /// A single endpoint coordinate.
    Point(&'a Coord),
    /// The open gap between two consecutive distinct endpoint coordinates.
    Gap(&'a Coord, &'a Coord),
}

impl Location<'_> {
    pub fn witness(&self) -> Coord {
        match self {
            Location::Point(x) => (*x).clone(),
            Location::Gap(a, b) => a.midpoint(b),
        }
    }
}

/// One step of the point sweep.
#[derive(Debug, Clone, Copy)]
pub enum SweepStep<'a> {
    Enter(usize),
    Leave(usize),
    At(Location<'a>),
}

/// Walks every distinct covering set of the closed intervals in order.
///
/// At each coordinate the starts are applied, the point itself is reported,
/// then the ends are applied and the following open gap is reported. Regions
/// left of the first and right of the last endpoint are empty and skipped.
pub fn for_each_location<'a>(norm: &NormalizedInstance<'a>, mut visit: impl FnMut(SweepStep<'a>)) {
    let events = norm.events();
    let mut i = 0;
    while i < events.len() {
        let x = norm.coord_of(&events[i]);
        while i < events.len() && events[i].kind == EventKind::Start && norm.coord_of(&events[i]) == x {
            visit(SweepStep::Enter(events[i].interval));
            i += 1;
        }
        visit(SweepStep::At(Location::Point(x)));
        while i < events.len() && norm.coord_of(&events[i]) == x {
            debug_assert_eq!(events[i].kind, EventKind::End);
            visit(SweepStep::Leave(events[i].interval));
            i += 1;
        }
        if i < events.len() {
            visit(SweepStep::At(Location::Gap(x, norm.coord_of(&events[i]))));
        }
    }
}

/// Counts of one location, as reported by [`imbalance_with_regions`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RegionCounts {
    /// `lo == hi` for a point, otherwise the open gap `(lo, hi)`.
    pub lo: Coord,
    pub hi: Coord,
    pub counts: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ImbalanceReport {
    pub value: usize,
    /// A point where `value` is attained.
    pub witness: Coord,
    pub per_region: Option<Vec<RegionCounts>>,
}

fn sweep_report(instance: &Instance, coloring: &Coloring, keep_regions: bool) -> Result<ImbalanceReport> {
    coloring.check(instance.len(), instance.k())?;
    let norm = normalize(instance);
    let colors = coloring.colors();
    let mut counter = ColorCounter::new(instance.k());
    let mut best: Option<(usize, Location<'_>)> = None;
    let mut regions = Vec::new();
    for_each_location(&norm, |step| match step {
        SweepStep::Enter(i) => counter.add(colors[i]),
        SweepStep::Leave(i) => counter.remove(colors[i]),
        SweepStep::At(loc) => {
            let spread = counter.spread();
            if best.is_none_or(|(v, _)| spread > v) {
                best = Some((spread, loc));
            }
            if keep_regions {
                let (lo, hi) = match loc {
                    Location::Point(x) => (x.clone(), x.clone()),
                    Location::Gap(a, b) => (a.clone(), b.clone()),
                };
                regions.push(RegionCounts {
                    lo,
                    hi,
                    counts: counter.counts().to_vec(),
                });
            }
        }
    });
    let (value, witness) = match best {
        Some((v, loc)) => (v, loc.witness()),
        None => (0, Coord::zero()),
    };
    Ok(ImbalanceReport {
        value,
        witness,
        per_region: keep_regions.then_some(regions),
    })
}

/// Maximum over all points of the largest minus the smallest color count.
pub fn imbalance(instance: &Instance, coloring: &Coloring) -> Result<ImbalanceReport> {
    sweep_report(instance, coloring, false)
}

/// Like [`imbalance`], also listing the counts at every point and gap.
pub fn imbalance_with_regions(instance: &Instance, coloring: &Coloring) -> Result<ImbalanceReport> {
    sweep_report(instance, coloring, true)
}

pub fn is_balanced(instance: &Instance, coloring: &Coloring) -> Result<bool> {
    Ok(imbalance(instance, coloring)?.value <= 1)
}

/// True iff every point is covered by a multiple of `k` intervals, in which
/// case the minimum imbalance is 0; otherwise it is 1.
pub fn divisibility_predicts_zero(instance: &Instance) -> bool {
    let k = instance.k();
    let norm = normalize(instance);
    let mut depth = 0usize;
    let mut all_divisible = true;
    for_each_location(&norm, |step| match step {
        SweepStep::Enter(_) => depth += 1,
        SweepStep::Leave(_) => depth -= 1,
        SweepStep::At(_) => all_divisible &= depth.is_multiple_of(k),
    });
    all_divisible
}

/// Distinct nonempty covering sets `S(x)` over all points `x`.
pub fn point_cliques(instance: &Instance) -> Vec<Vec<usize>> {
    let norm = normalize(instance);
    let mut active = BTreeSet::new();
    let mut seen = BTreeSet::new();
    for_each_location(&norm, |step| match step {
        SweepStep::Enter(i) => {
            active.insert(i);
        }
        SweepStep::Leave(i) => {
            active.remove(&i);
        }
        SweepStep::At(_) => {
            if !active.is_empty() {
                seen.insert(active.iter().copied().collect::<Vec<_>>());
            }
        }
    });
    seen.into_iter().collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn inst(pairs: &[(i64, i64)], k: usize) -> Instance {
        Instance::from_ints(pairs, k).unwrap()
    }

    fn col(colors: &[usize], k: usize) -> Coloring {
        Coloring::new(colors.to_vec(), k).unwrap()
    }

    #[test]
    fn monochromatic_overlap() {
        let i = inst(&[(0, 2), (1, 3)], 2);
        let r = imbalance(&i, &col(&[1, 1], 2)).unwrap();
        assert_eq!(r.value, 2);
        assert!(r.witness >= Coord::from_int(1) && r.witness <= Coord::from_int(2));
        assert!(!is_balanced(&i, &col(&[1, 1], 2)).unwrap());
        assert!(is_balanced(&i, &col(&[1, 2], 2)).unwrap());
    }

    #[test]
    fn zero_count_colors_matter() {
        let i = inst(&[(0, 1)], 3);
        assert_eq!(imbalance(&i, &col(&[1], 3)).unwrap().value, 1);
    }

    #[test]
    fn three_interval_example() {
        let i = inst(&[(0, 2), (1, 3), (0, 3)], 2);
        // [0,2] and [0,3] share color 1 on [0,1).
        let r = imbalance(&i, &col(&[1, 2, 1], 2)).unwrap();
        assert_eq!(r.value, 2);
        assert!(r.witness >= Coord::zero() && r.witness < Coord::from_int(1));
        assert_eq!(imbalance(&i, &col(&[1, 1, 2], 2)).unwrap().value, 1);
    }

    #[test]
    fn empty_instance_is_balanced() {
        for k in 1..5 {
            let i = inst(&[], k);
            assert!(is_balanced(&i, &col(&[], k)).unwrap());
            assert_eq!(imbalance(&i, &col(&[], k)).unwrap().value, 0);
        }
    }

    #[test]
    fn length_mismatch_is_an_error() {
        let i = inst(&[(0, 1), (2, 3)], 2);
        assert!(matches!(
            imbalance(&i, &col(&[1], 2)),
            Err(crate::Error::LengthMismatch { expected: 2, got: 1 })
        ));
    }

    #[test]
    fn perturbation_regions_are_not_points() {
        // Two point intervals at 1 together with [0,1]: at x = 1 the counts
        // are (2,1). The rank region between the two starts at 1 would
        // show (2,0), which no real point has.
        let i = inst(&[(0, 1), (1, 1), (1, 1)], 2);
        assert_eq!(imbalance(&i, &col(&[1, 1, 2], 2)).unwrap().value, 1);
    }

    #[test]
    fn divisibility() {
        assert!(divisibility_predicts_zero(&inst(&[(0, 1), (0, 1)], 2)));
        assert!(!divisibility_predicts_zero(&inst(&[(0, 1)], 2)));
        assert!(!divisibility_predicts_zero(&inst(&[(0, 2), (1, 3), (0, 3)], 3)));
        assert!(divisibility_predicts_zero(&inst(&[], 3)));
    }

    #[test]
    fn regions_report_counts() {
        let i = inst(&[(0, 2), (1, 3)], 2);
        let r = imbalance_with_regions(&i, &col(&[1, 2], 2)).unwrap();
        let regions = r.per_region.unwrap();
        // points 0,1,2,3 and gaps between them
        assert_eq!(regions.len(), 7);
        assert_eq!(regions[2].counts, vec![1, 1]);
        assert_eq!(
            regions
                .iter()
                .map(|g| g.counts.iter().max().unwrap() - g.counts.iter().min().unwrap())
                .max(),
            Some(r.value)
        );
    }

    #[test]
    fn counter_tracks_spread() {
        let mut c = ColorCounter::new(3);
        c.add(1);
        c.add(1);
        assert_eq!(c.spread(), 2);
        c.add(2);
        c.add(3);
        assert_eq!(c.spread(), 1);
        c.remove(1);
        assert_eq!(c.spread(), 0);
        c.remove(2);
        assert_eq!(c.spread(), 1);
    }

    /// Direct count over `{i : lo_i <= x <= hi_i}`.
    fn direct_spread(i: &Instance, colors: &[usize], x: &Coord) -> usize {
        let mut counts = vec![0usize; i.k()];
        for iv in i.intervals() {
            if iv.contains(x) {
                counts[colors[iv.id] - 1] += 1;
            }
        }
        counts.iter().max().unwrap() - counts.iter().min().unwrap()
    }

    fn colored_instance() -> impl Strategy<Value = (Instance, Vec<usize>)> {
        (1usize..5, prop::collection::vec((0i64..10, 0i64..5, 0usize..4), 0..20)).prop_map(|(k, v)| {
            let pairs: Vec<(i64, i64)> = v.iter().map(|&(a, l, _)| (a, a + l)).collect();
            let colors = v.iter().map(|&(_, _, c)| c % k + 1).collect();
            (Instance::from_ints(&pairs, k).unwrap(), colors)
        })
    }

    proptest! {
        #[test]
        fn sweep_matches_direct_count((i, colors) in colored_instance()) {
            let coloring = col(&colors, i.k());
            let r = imbalance(&i, &coloring).unwrap();
            let mut xs: Vec<Coord> = i.intervals().iter().flat_map(|iv| [iv.lo.clone(), iv.hi.clone()]).collect();
            xs.sort();
            xs.dedup();
            let mut expected = 0;
            for w in xs.windows(2) {
                expected = expected.max(direct_spread(&i, &colors, &w[0].midpoint(&w[1])));
            }
            for x in &xs {
                expected = expected.max(direct_spread(&i, &colors, x));
            }
            prop_assert_eq!(r.value, expected);
            if !i.is_empty() {
                prop_assert_eq!(direct_spread(&i, &colors, &r.witness), r.value);
            }
        }

        #[test]
        fn invariant_under_relabeling((i, colors) in colored_instance(), shift in 0usize..4) {
            let k = i.k();
            let relabeled: Vec<usize> = colors.iter().map(|c| (c - 1 + shift) % k + 1).collect();
            let reversed: Vec<usize> = colors.iter().map(|c| k + 1 - c).collect();
            let base = imbalance(&i, &col(&colors, k)).unwrap().value;
            prop_assert_eq!(imbalance(&i, &col(&relabeled, k)).unwrap().value, base);
            prop_assert_eq!(imbalance(&i, &col(&reversed, k)).unwrap().value, base);
        }
    }
}
