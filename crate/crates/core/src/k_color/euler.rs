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

//! Edge coloring by repeated Euler partition, `O(m log m)` overall.
//!
//! The graph is first padded to a `k`-regular bipartite multigraph: vertices
//! on each side are packed into groups of total degree at most `k`, the
//! smaller side gets empty groups, and dummy edges fill the remaining
//! degree. A proper coloring of the padded graph restricts to one of the
//! original. An even-regular graph splits into two halves of half the degree
//! along closed trails; an odd-regular graph first gives up a perfect
//! matching.

use crate::error::{Error, Result};

use super::edge_coloring::{BipartiteMultigraph, EdgeColoring};

/// Same contract as [`edge_color`](super::edge_color), different method.
pub fn edge_color_euler(graph: &BipartiteMultigraph, k: usize) -> Result<EdgeColoring> {
    let degrees = graph.degrees();
    if let Some((vertex, &degree)) = degrees.iter().enumerate().find(|(_, &d)| d > k) {
        return Err(Error::DegreeTooLarge { vertex, degree, k });
    }
    let m = graph.edges.len();
    if m == 0 {
        return Ok(EdgeColoring { colors: Vec::new() });
    }
    let (left_group, left_count) = pack(&degrees[..graph.left], k);
    let (right_group, right_count) = pack(&degrees[graph.left..], k);
    let side = left_count.max(right_count);
    if side.checked_mul(k).is_none_or(|total| total > u32::MAX as usize / 2) {
        return Err(Error::TooLarge(format!("{m} edges")));
    }

    let mut edges: Vec<(u32, u32)> = graph
        .edges
        .iter()
        .map(|&(u, v)| (left_group[u] as u32, right_group[v] as u32))
        .collect();
    let mut left_deg = vec![0usize; side];
    let mut right_deg = vec![0usize; side];
    for &(u, v) in &edges {
        left_deg[u as usize] += 1;
        right_deg[v as usize] += 1;
    }
    let (mut u, mut v) = (0, 0);
    loop {
        while u < side && left_deg[u] == k {
            u += 1;
        }
        while v < side && right_deg[v] == k {
            v += 1;
        }
        if u == side || v == side {
            break;
        }
        edges.push((u as u32, v as u32));
        left_deg[u] += 1;
        right_deg[v] += 1;
    }

    // renumber edges by left endpoint so trails touch nearby memory
    let mut order: Vec<u32> = (0..edges.len() as u32).collect();
    order.sort_by_key(|&e| edges[e as usize].0);
    let sorted: Vec<(u32, u32)> = order.iter().map(|&e| edges[e as usize]).collect();

    let mut color = vec![0u8; sorted.len()];
    color_regular(&sorted, side, (0..sorted.len() as u32).collect(), k, 0, &mut color);
    let mut colors = vec![0usize; m];
    for (pos, &e) in order.iter().enumerate() {
        if (e as usize) < m {
            colors[e as usize] = color[pos] as usize + 1;
        }
    }
    Ok(EdgeColoring { colors })
}

/// Next-fit packing of vertex degrees into groups of total at most `k`.
fn pack(degrees: &[usize], k: usize) -> (Vec<usize>, usize) {
    let mut group = Vec::with_capacity(degrees.len());
    let (mut current, mut load) = (0, 0);
    for &d in degrees {
        if load + d > k {
            current += 1;
            load = 0;
        }
        load += d;
        group.push(current);
    }
    (group, if degrees.is_empty() { 0 } else { current + 1 })
}

/// Colors `ids` (a `d`-regular subgraph) with `offset..offset + d`.
fn color_regular(edges: &[(u32, u32)], side: usize, ids: Vec<u32>, d: usize, offset: usize, color: &mut [u8]) {
    match d {
        0 => {}
        1 => ids.iter().for_each(|&e| color[e as usize] = offset as u8),
        _ if d.is_multiple_of(2) => {
            let first = euler_split(side, ids.iter().map(|&e| edges[e as usize]), ids.len());
            let (mut a, mut b) = (Vec::with_capacity(ids.len() / 2), Vec::with_capacity(ids.len() / 2));
            for (&e, &f) in ids.iter().zip(&first) {
                if f {
                    a.push(e);
                } else {
                    b.push(e);
                }
            }
            drop(ids);
            color_regular(edges, side, a, d / 2, offset, color);
            color_regular(edges, side, b, d / 2, offset + d / 2, color);
        }
        _ => {
            let matched = perfect_matching(edges, side, &ids, d);
            let mut rest = Vec::with_capacity(ids.len() - side);
            for (&e, &in_matching) in ids.iter().zip(&matched) {
                if in_matching {
                    color[e as usize] = offset as u8;
                } else {
                    rest.push(e);
                }
            }
            drop(ids);
            color_regular(edges, side, rest, d - 1, offset + 1, color);
        }
    }
}

/// Labels the `count` given edges so that every vertex has as many `true`
/// as `false` edges. Every degree must be even.
fn euler_split(side: usize, edges: impl Iterator<Item = (u32, u32)> + Clone, count: usize) -> Vec<bool> {
    // vertices 0..side are left, side..2*side right; adjacency holds (edge, far end)
    let mut adj_start = vec![0u32; 2 * side + 1];
    for (u, v) in edges.clone() {
        adj_start[u as usize + 1] += 1;
        adj_start[side + v as usize + 1] += 1;
    }
    for w in 0..2 * side {
        adj_start[w + 1] += adj_start[w];
    }
    let mut next = adj_start.clone();
    let mut adj = vec![(0u32, 0u32); 2 * count];
    for (i, (u, v)) in edges.enumerate() {
        let (l, r) = (u as usize, side + v as usize);
        adj[next[l] as usize] = (i as u32, r as u32);
        next[l] += 1;
        adj[next[r] as usize] = (i as u32, l as u32);
        next[r] += 1;
    }
    next[..2 * side].copy_from_slice(&adj_start[..2 * side]);
    let mut used = vec![false; count];
    let mut first = vec![false; count];
    for root in 0..2 * side {
        // each pass is a closed trail from root; bipartite so its length is even
        loop {
            let mut cur = root;
            let mut label = true;
            let mut moved = false;
            loop {
                let end = adj_start[cur + 1];
                while next[cur] < end && used[adj[next[cur] as usize].0 as usize] {
                    next[cur] += 1;
                }
                if next[cur] == end {
                    break;
                }
                let (i, far) = adj[next[cur] as usize];
                used[i as usize] = true;
                first[i as usize] = label;
                moved = true;
                label = !label;
                cur = far as usize;
            }
            if !moved {
                break;
            }
        }
    }
    first
}

/// Perfect matching of a `d`-regular bipartite multigraph: give every edge
/// weight `α = ⌊2^t / d⌋` and add weight `2^t − dα` on the non-edges
/// `(i, i)`, then halve `t` times keeping the half with less such weight.
fn perfect_matching(edges: &[(u32, u32)], side: usize, ids: &[u32], d: usize) -> Vec<bool> {
    let total = (side * d) as u64;
    let t = 64 - (total.max(1) - 1).leading_zeros();
    let alpha = (1u64 << t) / d as u64;
    let beta = (1u64 << t) - alpha * d as u64;
    // real edges keep their position in ids; fillers are marked u32::MAX
    let mut weighted: Vec<(u32, u32, u64)> = ids
        .iter()
        .map(|&e| (edges[e as usize].0, edges[e as usize].1, alpha))
        .collect();
    let mut origin: Vec<u32> = (0..ids.len() as u32).collect();
    if beta > 0 {
        for i in 0..side as u32 {
            weighted.push((i, i, beta));
            origin.push(u32::MAX);
        }
    }
    for _ in 0..t {
        // even parts of each weight split evenly, odd remainders by trail
        let odd: Vec<usize> = (0..weighted.len()).filter(|&i| weighted[i].2 % 2 == 1).collect();
        let labels = euler_split(side, odd.iter().map(|&i| (weighted[i].0, weighted[i].1)), odd.len());
        let mut first: Vec<u64> = weighted.iter().map(|&(_, _, w)| w / 2).collect();
        for (&i, &f) in odd.iter().zip(&labels) {
            if f {
                first[i] += 1;
            }
        }
        let (mut bad0, mut bad1) = (0u64, 0u64);
        for ((&(_, _, w), &o), &w0) in weighted.iter().zip(&origin).zip(&first) {
            if o == u32::MAX {
                bad0 += w0;
                bad1 += w - w0;
            }
        }
        let keep_first = bad0 <= bad1;
        let mut next_w = Vec::with_capacity(weighted.len());
        let mut next_o = Vec::with_capacity(weighted.len());
        for ((&(u, v, w), &o), &w0) in weighted.iter().zip(&origin).zip(&first) {
            let kept = if keep_first { w0 } else { w - w0 };
            if kept > 0 {
                next_w.push((u, v, kept));
                next_o.push(o);
            }
        }
        weighted = next_w;
        origin = next_o;
    }
    let mut matched = vec![false; ids.len()];
    for o in origin {
        if o != u32::MAX {
            matched[o as usize] = true;
        }
    }
    matched
}
