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

//! Arcs of a circle, colored by cutting the circle open at zero.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::interval::{min_spread_search, ColorCounter, Coloring, Coord, ImbalanceReport, Instance};
use crate::k_color::k_color;

/// Closed arc from `start` running `length` counterclockwise.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Arc {
    pub id: usize,
    pub start: Coord,
    pub length: Coord,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ArcInstance {
    arcs: Vec<Arc>,
    circumference: Coord,
    k: usize,
}

impl Arc {
    /// Covers the whole circle.
    pub fn is_full(&self, circumference: &Coord) -> bool {
        self.length >= *circumference
    }

    /// Passes through zero without covering the whole circle.
    pub fn wraps(&self, circumference: &Coord) -> bool {
        !self.is_full(circumference) && &self.start + &self.length > *circumference
    }

    /// Circle position of the far endpoint, in `[0, C)`.
    pub fn end_position(&self, circumference: &Coord) -> Coord {
        let end = &self.start + &self.length;
        if end >= *circumference {
            &end - circumference
        } else {
            end
        }
    }

    /// Whether the circle point `p` in `[0, C)` lies on the arc.
    pub fn contains(&self, p: &Coord, circumference: &Coord) -> bool {
        if self.is_full(circumference) {
            return true;
        }
        let end = &self.start + &self.length;
        if end > *circumference {
            *p >= self.start || *p <= &end - circumference
        } else {
            (self.start <= *p && *p <= end) || (end == *circumference && p.is_zero())
        }
    }
}

impl ArcInstance {
    /// Arcs given as `(start, length)` pairs on a circle of the given
    /// circumference.
    pub fn new<I>(circumference: Coord, arcs: I, k: usize) -> Result<ArcInstance>
    where
        I: IntoIterator<Item = (Coord, Coord)>,
    {
        if k == 0 {
            return Err(Error::InvalidColorCount { k, min: 1 });
        }
        if !circumference.is_positive() {
            return Err(Error::InvalidArc {
                id: 0,
                reason: format!("circumference {circumference} is not positive"),
            });
        }
        let mut out = Vec::new();
        for (id, (start, length)) in arcs.into_iter().enumerate() {
            if start.is_negative() || start >= circumference {
                return Err(Error::InvalidArc {
                    id,
                    reason: format!("start {start} is outside [0, {circumference})"),
                });
            }
            if !length.is_positive() {
                return Err(Error::InvalidArc {
                    id,
                    reason: format!("length {length} is not positive"),
                });
            }
            out.push(Arc { id, start, length });
        }
        Ok(ArcInstance {
            arcs: out,
            circumference,
            k,
        })
    }

    pub fn arcs(&self) -> &[Arc] {
        &self.arcs
    }

    pub fn circumference(&self) -> &Coord {
        &self.circumference
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn len(&self) -> usize {
        self.arcs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.arcs.is_empty()
    }
}

/// Line instance obtained from a circle; interval `i` comes from arc
/// `arc_of[i]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Unfolded {
    pub instance: Instance,
    pub arc_of: Vec<usize>,
}

fn unfold_with(arcs: &ArcInstance, full: impl FnOnce(&[(Coord, Coord)]) -> (Coord, Coord)) -> Result<Unfolded> {
    let c = &arcs.circumference;
    let mut bounds: Vec<Option<(Coord, Coord)>> = Vec::with_capacity(arcs.len());
    for arc in &arcs.arcs {
        bounds.push(if arc.is_full(c) {
            None
        } else if arc.wraps(c) {
            Some((&arc.start - c, &(&arc.start + &arc.length) - c))
        } else {
            Some((arc.start.clone(), &arc.start + &arc.length))
        });
    }
    let proper: Vec<(Coord, Coord)> = bounds.iter().flatten().cloned().collect();
    let spanning = full(&proper);
    let bounds = bounds.into_iter().map(|b| b.unwrap_or_else(|| spanning.clone()));
    Ok(Unfolded {
        instance: Instance::new(bounds, arcs.k)?,
        arc_of: (0..arcs.len()).collect(),
    })
}

/// Cuts the circle at zero. Proper arcs become intervals of the same
/// length, those through zero shifted left by `C`; full arcs become one
/// interval spanning all others with a margin of half the smallest gap
/// between distinct endpoints (1 when there is no such gap).
pub fn unfold(arcs: &ArcInstance) -> Result<Unfolded> {
    let c = arcs.circumference.clone();
    unfold_with(arcs, |proper| {
        let mut coords: Vec<&Coord> = proper.iter().flat_map(|(a, b)| [a, b]).collect();
        coords.sort();
        coords.dedup();
        let margin = coords
            .windows(2)
            .map(|w| w[1] - w[0])
            .min()
            .map_or(Coord::from_int(1), |gap| gap.half());
        match (coords.first(), coords.last()) {
            (Some(lo), Some(hi)) => (*lo - &margin, *hi + &margin),
            _ => (Coord::zero(), c),
        }
    })
}

/// As [`unfold`], except that full arcs become `[e − C, e]` for a point `e`
/// strictly inside a gap between circle endpoints. Every circle point other
/// than `e` then meets a full arc through exactly one of its two images,
/// which is what keeps the circle imbalance at most 2.
pub fn unfold_cut(arcs: &ArcInstance) -> Result<Unfolded> {
    let c = arcs.circumference.clone();
    let e = cut_point(arcs);
    unfold_with(arcs, |_| (&e - &c, e))
}

fn cut_point(arcs: &ArcInstance) -> Coord {
    let c = &arcs.circumference;
    let positions = circle_events(arcs);
    let mut keys = positions.keys();
    let first = keys.next().cloned().unwrap_or_else(Coord::zero);
    match keys.next() {
        Some(second) => first.midpoint(second),
        None => first.midpoint(c),
    }
}

#[derive(Debug, Default)]
struct CircleEvents {
    starts: Vec<usize>,
    ends: Vec<usize>,
}

/// Endpoint positions on `[0, C)` of the proper arcs, always including 0.
fn circle_events(arcs: &ArcInstance) -> BTreeMap<Coord, CircleEvents> {
    let c = &arcs.circumference;
    let mut events: BTreeMap<Coord, CircleEvents> = BTreeMap::new();
    events.entry(Coord::zero()).or_default();
    for arc in &arcs.arcs {
        if arc.is_full(c) {
            continue;
        }
        events.entry(arc.start.clone()).or_default().starts.push(arc.id);
        events.entry(arc.end_position(c)).or_default().ends.push(arc.id);
    }
    events
}

enum CircleStep {
    Enter(usize),
    Leave(usize),
    At(Coord),
}

/// Sweeps the circle once from zero, announcing arcs as they start and stop
/// covering the sweep position, and each point and open gap in between.
fn sweep_circle(arcs: &ArcInstance, mut visit: impl FnMut(CircleStep)) {
    let c = &arcs.circumference;
    // arcs covering the points just before zero
    for arc in &arcs.arcs {
        if arc.is_full(c) || &arc.start + &arc.length >= *c {
            visit(CircleStep::Enter(arc.id));
        }
    }
    let events = circle_events(arcs);
    let positions: Vec<&Coord> = events.keys().collect();
    for (idx, (x, ev)) in events.iter().enumerate() {
        ev.starts.iter().for_each(|&i| visit(CircleStep::Enter(i)));
        visit(CircleStep::At(x.clone()));
        ev.ends.iter().for_each(|&i| visit(CircleStep::Leave(i)));
        let next = positions.get(idx + 1).copied().unwrap_or(c);
        visit(CircleStep::At(x.midpoint(next)));
    }
}

/// Largest color-count spread over the circle.
pub fn arc_imbalance(arcs: &ArcInstance, coloring: &Coloring) -> Result<ImbalanceReport> {
    coloring.check(arcs.len(), arcs.k)?;
    let colors = coloring.colors();
    let mut counter = ColorCounter::new(arcs.k);
    let mut best: Option<(usize, Coord)> = None;
    sweep_circle(arcs, |step| match step {
        CircleStep::Enter(i) => counter.add(colors[i]),
        CircleStep::Leave(i) => counter.remove(colors[i]),
        CircleStep::At(witness) => {
            let spread = counter.spread();
            if best.as_ref().is_none_or(|(v, _)| spread > *v) {
                best = Some((spread, witness));
            }
        }
    });
    let (value, witness) = best.unwrap_or((0, Coord::zero()));
    Ok(ImbalanceReport {
        value,
        witness,
        per_region: None,
    })
}

/// Distinct nonempty sets of arcs sharing a circle point.
pub fn arc_point_cliques(arcs: &ArcInstance) -> Vec<Vec<usize>> {
    let mut active = vec![false; arcs.len()];
    let mut out: Vec<Vec<usize>> = Vec::new();
    sweep_circle(arcs, |step| match step {
        CircleStep::Enter(i) => active[i] = true,
        CircleStep::Leave(i) => active[i] = false,
        CircleStep::At(_) => {
            let m: Vec<usize> = (0..active.len()).filter(|&i| active[i]).collect();
            if !m.is_empty() {
                out.push(m);
            }
        }
    });
    out.sort();
    out.dedup();
    out
}

/// Exhaustive minimum circle imbalance for small instances.
pub fn arc_min_imbalance_oracle(arcs: &ArcInstance, limit_n: usize) -> Result<(usize, Coloring)> {
    let n = arcs.len();
    if n > limit_n {
        return Err(Error::TooLarge(format!("{n} arcs exceed the limit of {limit_n}")));
    }
    let cliques = arc_point_cliques(arcs);
    let lower_bound = usize::from(cliques.iter().any(|q| q.len() % arcs.k != 0));
    let (value, colors) = min_spread_search(n, arcs.k, &cliques, lower_bound);
    Ok((value, Coloring::from_vec(colors)))
}

/// Coloring with circle imbalance at most 2.
pub fn arc_color(arcs: &ArcInstance) -> Result<Coloring> {
    let unfolded = unfold_cut(arcs)?;
    let line = k_color(&unfolded.instance)?;
    let mut colors = vec![0; arcs.len()];
    for (i, &arc) in unfolded.arc_of.iter().enumerate() {
        colors[arc] = line.colors()[i];
    }
    Coloring::new(colors, arcs.k)
}
