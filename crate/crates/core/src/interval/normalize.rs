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

//! Symbolic perturbation of coinciding endpoints into a strict event order.

use std::cmp::Ordering;

use num_traits::ToPrimitive;

use super::{Coord, Instance};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum EventKind {
    Start,
    End,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Event {
    pub interval: usize,
    pub kind: EventKind,
}

/// An instance whose 2n events carry distinct ranks `1..=2n`.
///
/// Equal coordinates are ordered starts first, then by interval id. Moving
/// ends to the right of coinciding starts only enlarges intervals by an
/// infinitesimal amount, so every point clique of the closed intervals is
/// the clique of some rank region.
#[derive(Debug, Clone)]
pub struct NormalizedInstance<'a> {
    source: &'a Instance,
    start_rank: Vec<usize>,
    end_rank: Vec<usize>,
    events: Vec<Event>,
}

/// Reduced fraction with machine-word parts, denominator positive.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
struct SmallRatio(i64, i64);

impl SmallRatio {
    fn of(c: &Coord) -> Option<SmallRatio> {
        Some(SmallRatio(c.numer().to_i64()?, c.denom().to_i64()?))
    }
}

impl Ord for SmallRatio {
    fn cmp(&self, other: &Self) -> Ordering {
        if self.1 == other.1 {
            self.0.cmp(&other.0)
        } else {
            (self.0 as i128 * other.1 as i128).cmp(&(other.0 as i128 * self.1 as i128))
        }
    }
}

impl PartialOrd for SmallRatio {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

pub fn normalize(instance: &Instance) -> NormalizedInstance<'_> {
    let intervals = instance.intervals();
    let n = intervals.len();
    let mut events: Vec<Event> = Vec::with_capacity(2 * n);
    for interval in intervals {
        events.push(Event {
            interval: interval.id,
            kind: EventKind::Start,
        });
        events.push(Event {
            interval: interval.id,
            kind: EventKind::End,
        });
    }
    let coord = |e: &Event| -> &Coord {
        let interval = &intervals[e.interval];
        match e.kind {
            EventKind::Start => &interval.lo,
            EventKind::End => &interval.hi,
        }
    };
    let small: Option<Vec<(SmallRatio, Event)>> =
        events.iter().map(|e| Some((SmallRatio::of(coord(e))?, *e))).collect();
    match small {
        Some(mut keyed) => {
            keyed.sort_unstable_by(|(x, a), (y, b)| {
                x.cmp(y).then(a.kind.cmp(&b.kind)).then(a.interval.cmp(&b.interval))
            });
            events = keyed.into_iter().map(|(_, e)| e).collect();
        }
        None => events.sort_unstable_by(|a, b| {
            coord(a)
                .cmp(coord(b))
                .then(a.kind.cmp(&b.kind))
                .then(a.interval.cmp(&b.interval))
        }),
    }

    let mut start_rank = vec![0; n];
    let mut end_rank = vec![0; n];
    for (pos, e) in events.iter().enumerate() {
        match e.kind {
            EventKind::Start => start_rank[e.interval] = pos + 1,
            EventKind::End => end_rank[e.interval] = pos + 1,
        }
    }
    NormalizedInstance {
        source: instance,
        start_rank,
        end_rank,
        events,
    }
}

impl<'a> NormalizedInstance<'a> {
    pub fn source(&self) -> &'a Instance {
        self.source
    }

    pub fn start_rank(&self) -> &[usize] {
        &self.start_rank
    }

    pub fn end_rank(&self) -> &[usize] {
        &self.end_rank
    }

    /// Events in rank order; `events()[r - 1]` has rank `r`.
    pub fn events(&self) -> &[Event] {
        &self.events
    }

    pub fn coord_of(&self, event: &Event) -> &'a Coord {
        let interval = &self.source.intervals()[event.interval];
        match event.kind {
            EventKind::Start => &interval.lo,
            EventKind::End => &interval.hi,
        }
    }

    /// Intervals covering the rank region between ranks `r` and `r + 1`.
    pub fn region_clique(&self, r: usize) -> Vec<usize> {
        (0..self.start_rank.len())
            .filter(|&i| self.start_rank[i] <= r && r < self.end_rank[i])
            .collect()
    }

    /// Depth of every rank region `1..2n`, in order.
    pub fn region_depths(&self) -> Vec<usize> {
        let mut depth = 0usize;
        let mut out = Vec::with_capacity(self.events.len().saturating_sub(1));
        for e in self.events.iter().take(self.events.len().saturating_sub(1)) {
            match e.kind {
                EventKind::Start => depth += 1,
                EventKind::End => depth -= 1,
            }
            out.push(depth);
        }
        out
    }
}

impl PartialEq for NormalizedInstance<'_> {
    fn eq(&self, other: &Self) -> bool {
        self.source == other.source && self.start_rank == other.start_rank && self.end_rank == other.end_rank
    }
}
