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

//! Balanced 2-coloring by event pairing.
//!
//! After normalization the regions between consecutive events alternate in
//! depth parity, so only the event pairs with ranks `(2i-1, 2i)` matter. A
//! pair made of the start and end of one interval is free. A start and an
//! end of different intervals merges them into one chain that must share a
//! color. Two starts or two ends force opposite colors. The chains with
//! those forced-opposite edges form a graph of maximum degree two whose
//! edges alternate between start pairs and end pairs, so it is bipartite.

use std::collections::VecDeque;

use petgraph::unionfind::UnionFind;

use crate::error::{Error, Result};
use crate::interval::{normalize, Coloring, EventKind, Instance, NormalizedInstance};

/// One event together with its rank.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RankedEvent {
    pub rank: usize,
    pub interval: usize,
    pub kind: EventKind,
}

/// Events of ranks `2i - 1` and `2i`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EventPair {
    pub first: RankedEvent,
    pub second: RankedEvent,
}

pub fn pair_events(norm: &NormalizedInstance<'_>) -> Vec<EventPair> {
    norm.events()
        .chunks_exact(2)
        .enumerate()
        .map(|(i, pair)| EventPair {
            first: RankedEvent {
                rank: 2 * i + 1,
                interval: pair[0].interval,
                kind: pair[0].kind,
            },
            second: RankedEvent {
                rank: 2 * i + 2,
                interval: pair[1].interval,
                kind: pair[1].kind,
            },
        })
        .collect()
}

/// Intervals merged by start/end pairs, numbered by their smallest member.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChainPartition {
    chain_of: Vec<usize>,
    members: Vec<Vec<usize>>,
}

impl ChainPartition {
    pub fn chain_of(&self, interval: usize) -> usize {
        self.chain_of[interval]
    }

    /// Members of each chain, in increasing id order.
    pub fn chains(&self) -> &[Vec<usize>] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }
}

/// An opposite-color constraint between two chains.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ChainEdge {
    pub a: usize,
    pub b: usize,
    /// `Start` for a pair of starts, `End` for a pair of ends.
    pub side: EventKind,
    /// Index of the source pair in the output of [`pair_events`].
    pub pair: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConstraintGraph2 {
    pub chain_count: usize,
    pub edges: Vec<ChainEdge>,
}

impl ConstraintGraph2 {
    pub fn adjacency(&self) -> Vec<Vec<(usize, usize)>> {
        let mut adj = vec![Vec::new(); self.chain_count];
        for (idx, e) in self.edges.iter().enumerate() {
            adj[e.a].push((e.b, idx));
            adj[e.b].push((e.a, idx));
        }
        adj
    }
}

pub fn build_constraint_graph(pairs: &[EventPair]) -> (ChainPartition, ConstraintGraph2) {
    let n = pairs.len();
    let mut uf = UnionFind::<usize>::new(n);
    let mut same_type = Vec::new();
    for (idx, p) in pairs.iter().enumerate() {
        let (a, b) = (p.first.interval, p.second.interval);
        if p.first.kind == p.second.kind {
            same_type.push((a, b, p.first.kind, idx));
        } else if a != b {
            uf.union(a, b);
        }
    }

    let mut chain_of = vec![usize::MAX; n];
    let mut label_of_root = vec![usize::MAX; n];
    let mut members: Vec<Vec<usize>> = Vec::new();
    for (i, slot) in chain_of.iter_mut().enumerate() {
        let root = uf.find_mut(i);
        if label_of_root[root] == usize::MAX {
            label_of_root[root] = members.len();
            members.push(Vec::new());
        }
        *slot = label_of_root[root];
        members[*slot].push(i);
    }

    let edges = same_type
        .into_iter()
        .map(|(a, b, side, pair)| ChainEdge {
            a: chain_of[a],
            b: chain_of[b],
            side,
            pair,
        })
        .collect();
    let graph = ConstraintGraph2 {
        chain_count: members.len(),
        edges,
    };
    (ChainPartition { chain_of, members }, graph)
}

/// Balanced 2-coloring of an instance with `k = 2`.
pub fn two_color(instance: &Instance) -> Result<Coloring> {
    if instance.k() != 2 {
        return Err(Error::ColorCountMismatch {
            expected: 2,
            got: instance.k(),
        });
    }
    two_color_any(instance)
}

/// The 2-coloring algorithm applied regardless of `instance.k()`.
pub(crate) fn two_color_any(instance: &Instance) -> Result<Coloring> {
    let norm = normalize(instance);
    let pairs = pair_events(&norm);
    let (chains, graph) = build_constraint_graph(&pairs);
    let adj = graph.adjacency();

    let mut chain_color = vec![0usize; chains.len()];
    let mut queue = VecDeque::new();
    for start in 0..chains.len() {
        if chain_color[start] != 0 {
            continue;
        }
        chain_color[start] = 1;
        queue.push_back(start);
        while let Some(v) = queue.pop_front() {
            let opposite = 3 - chain_color[v];
            for &(w, edge) in &adj[v] {
                if chain_color[w] == 0 {
                    chain_color[w] = opposite;
                    queue.push_back(w);
                } else if chain_color[w] != opposite {
                    return Err(Error::Internal(format!(
                        "odd cycle through constraint edge {edge} of the 2-coloring graph"
                    )));
                }
            }
        }
    }

    let colors = (0..instance.len()).map(|i| chain_color[chains.chain_of(i)]).collect();
    Ok(Coloring::from_vec(colors))
}
