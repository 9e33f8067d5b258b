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

//! Kőnig edge coloring of bipartite multigraphs by alternating paths.

use crate::error::{Error, Result};

/// A bipartite multigraph; edge `(u, v)` joins left vertex `u` to right vertex `v`.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct BipartiteMultigraph {
    pub left: usize,
    pub right: usize,
    pub edges: Vec<(usize, usize)>,
}

impl BipartiteMultigraph {
    pub fn new(left: usize, right: usize) -> BipartiteMultigraph {
        BipartiteMultigraph {
            left,
            right,
            edges: Vec::new(),
        }
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> usize {
        assert!(u < self.left && v < self.right, "edge ({u}, {v}) out of range");
        self.edges.push((u, v));
        self.edges.len() - 1
    }

    /// Degrees with left vertices first, then right vertices.
    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.left + self.right];
        for &(u, v) in &self.edges {
            deg[u] += 1;
            deg[self.left + v] += 1;
        }
        deg
    }

    pub fn max_degree(&self) -> usize {
        self.degrees().into_iter().max().unwrap_or(0)
    }
}

/// Color `1..=k` of every edge, in edge order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeColoring {
    pub colors: Vec<usize>,
}

impl EdgeColoring {
    /// Edges sharing a vertex differ and all colors lie in `1..=k`.
    pub fn is_proper(&self, graph: &BipartiteMultigraph, k: usize) -> bool {
        if self.colors.len() != graph.edges.len() {
            return false;
        }
        let vertices = graph.left + graph.right;
        let mut seen = vec![false; vertices * (k + 1)];
        for (&(u, v), &c) in graph.edges.iter().zip(&self.colors) {
            if c == 0 || c > k {
                return false;
            }
            for w in [u, graph.left + v] {
                let slot = &mut seen[w * (k + 1) + c];
                if *slot {
                    return false;
                }
                *slot = true;
            }
        }
        true
    }

    pub fn colors_used(&self) -> usize {
        let mut c = self.colors.clone();
        c.sort_unstable();
        c.dedup();
        c.len()
    }
}

const NONE: u32 = u32::MAX;

/// Edge-colors `graph` with colors `1..=k`, which succeeds whenever the
/// maximum degree is at most `k`.
///
/// Edges are inserted one at a time. A color free at both ends of `(u, v)`
/// is used directly if one exists. Otherwise let `a` be the smallest color
/// free at `u` and `b` the smallest free at `v`; the maximal path from `v`
/// alternating between `a` and `b` edges is flipped. That path cannot end at
/// `u`, by parity of the bipartition, so afterwards `a` is free at both ends.
pub fn edge_color(graph: &BipartiteMultigraph, k: usize) -> Result<EdgeColoring> {
    let degrees = graph.degrees();
    if let Some((vertex, &degree)) = degrees.iter().enumerate().find(|(_, &d)| d > k) {
        return Err(Error::DegreeTooLarge { vertex, degree, k });
    }
    if graph.edges.len() >= NONE as usize {
        return Err(Error::TooLarge(format!("{} edges", graph.edges.len())));
    }
    let vertices = graph.left + graph.right;
    // at[w * k + c] = edge of color c + 1 at vertex w
    let mut at = vec![NONE; vertices * k];
    let mut color = vec![usize::MAX; graph.edges.len()];
    let ends = |e: usize| (graph.edges[e].0, graph.left + graph.edges[e].1);
    let mut path: Vec<usize> = Vec::new();

    for e in 0..graph.edges.len() {
        let (u, v) = ends(e);
        let free = |at: &[u32], w: usize| (0..k).find(|&c| at[w * k + c] == NONE);
        let common = (0..k).find(|&c| at[u * k + c] == NONE && at[v * k + c] == NONE);
        let a = match common {
            Some(c) => c,
            None => free(&at, u).ok_or_else(|| Error::Internal(format!("no free color at vertex {u}")))?,
        };
        if common.is_none() {
            let b = free(&at, v).ok_or_else(|| Error::Internal(format!("no free color at vertex {v}")))?;
            path.clear();
            let (mut cur, mut c) = (v, a);
            while at[cur * k + c] != NONE {
                let f = at[cur * k + c] as usize;
                path.push(f);
                let (x, y) = ends(f);
                cur = if x == cur { y } else { x };
                c = if c == a { b } else { a };
            }
            if cur == u {
                return Err(Error::Internal("alternating path reached its origin".into()));
            }
            for &f in &path {
                let (x, y) = ends(f);
                at[x * k + color[f]] = NONE;
                at[y * k + color[f]] = NONE;
            }
            for &f in &path {
                let (x, y) = ends(f);
                let flipped = if color[f] == a { b } else { a };
                color[f] = flipped;
                at[x * k + flipped] = f as u32;
                at[y * k + flipped] = f as u32;
            }
        }
        color[e] = a;
        at[u * k + a] = e as u32;
        at[v * k + a] = e as u32;
    }
    Ok(EdgeColoring {
        colors: color.into_iter().map(|c| c + 1).collect(),
    })
}
