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

//! Axis-parallel boxes in `d` dimensions and exhaustive balanced coloring.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::interval::{min_spread_search, Coloring, Coord};

/// Where a box of a reduced instance came from.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Provenance {
    /// Rectangle `slot` (0, 1, 2) of the gadget for `clause`.
    Clause {
        clause: usize,
        slot: usize,
        variable: usize,
    },
    Variable {
        variable: usize,
    },
    /// Rectangle `index` of chain `chain`, counted from the variable end.
    Chain {
        chain: usize,
        index: usize,
    },
    /// A chain rectangle passing across chain `crosses`, between that
    /// chain's rectangles `at` and `at + 1`.
    Crossing {
        chain: usize,
        index: usize,
        crosses: usize,
        at: usize,
    },
    Cover {
        index: usize,
    },
}

/// One `[lo, hi]` per dimension.
pub type Sides = Vec<(Coord, Coord)>;

/// Closed box, one `[lo, hi]` per dimension.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AxisBox {
    pub id: usize,
    pub sides: Sides,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub tag: Option<Provenance>,
}

impl AxisBox {
    pub fn contains(&self, point: &[Coord]) -> bool {
        self.sides.iter().zip(point).all(|((lo, hi), x)| lo <= x && x <= hi)
    }

    pub fn intersects(&self, other: &AxisBox) -> bool {
        self.sides
            .iter()
            .zip(&other.sides)
            .all(|((a0, a1), (b0, b1))| a0 <= b1 && b0 <= a1)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoxInstance {
    pub d: usize,
    pub k: usize,
    pub boxes: Vec<AxisBox>,
}

impl BoxInstance {
    /// Boxes given by their sides; ids follow input order.
    pub fn new(d: usize, k: usize, boxes: Vec<(Sides, Option<Provenance>)>) -> Result<BoxInstance> {
        if d == 0 {
            return Err(Error::InvalidBox {
                id: 0,
                reason: "dimension must be at least 1".into(),
            });
        }
        if k == 0 {
            return Err(Error::InvalidColorCount { k, min: 1 });
        }
        let mut out = Vec::with_capacity(boxes.len());
        for (id, (sides, tag)) in boxes.into_iter().enumerate() {
            if sides.len() != d {
                return Err(Error::InvalidBox {
                    id,
                    reason: format!("{} sides in dimension {d}", sides.len()),
                });
            }
            if let Some(j) = sides.iter().position(|(lo, hi)| lo > hi) {
                return Err(Error::InvalidBox {
                    id,
                    reason: format!("side {j} has lower end above upper end"),
                });
            }
            out.push(AxisBox { id, sides, tag });
        }
        Ok(BoxInstance { d, k, boxes: out })
    }

    /// Checks the invariants of a deserialized instance and renumbers ids.
    pub fn validated(self) -> Result<BoxInstance> {
        let boxes = self.boxes.into_iter().map(|b| (b.sides, b.tag)).collect();
        BoxInstance::new(self.d, self.k, boxes)
    }

    pub fn len(&self) -> usize {
        self.boxes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.boxes.is_empty()
    }

    /// The same boxes in `d` dimensions, padded with `[0, 0]` sides.
    pub fn lift(&self, d: usize) -> Result<BoxInstance> {
        if d < self.d {
            return Err(Error::InvalidBox {
                id: 0,
                reason: format!("cannot lift from dimension {} down to {d}", self.d),
            });
        }
        let boxes = self
            .boxes
            .iter()
            .map(|b| {
                let mut sides = b.sides.clone();
                sides.resize(d, (Coord::zero(), Coord::zero()));
                (sides, b.tag.clone())
            })
            .collect();
        BoxInstance::new(d, self.k, boxes)
    }
}

/// A point of the arrangement and the boxes containing it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cell {
    pub witness: Vec<Coord>,
    pub members: Vec<usize>,
}

/// One representative point for every distinct nonempty `S(x)`, found on
/// the grid of endpoint coordinates and the midpoints between them.
pub fn box_cells(instance: &BoxInstance) -> Vec<Cell> {
    let n = instance.len();
    if n == 0 {
        return Vec::new();
    }
    let words = n.div_ceil(64);
    // per dimension: candidate coordinates and, for each, the boxes covering it
    let mut axes: Vec<Vec<(Coord, Vec<u64>)>> = Vec::with_capacity(instance.d);
    for j in 0..instance.d {
        let mut coords: Vec<&Coord> = instance
            .boxes
            .iter()
            .flat_map(|b| [&b.sides[j].0, &b.sides[j].1])
            .collect();
        coords.sort();
        coords.dedup();
        let mut candidates: Vec<Coord> = Vec::with_capacity(2 * coords.len());
        for (i, c) in coords.iter().enumerate() {
            candidates.push((*c).clone());
            if let Some(next) = coords.get(i + 1) {
                candidates.push(c.midpoint(next));
            }
        }
        let axis = candidates
            .into_iter()
            .map(|x| {
                let mut bits = vec![0u64; words];
                for b in &instance.boxes {
                    let (lo, hi) = &b.sides[j];
                    if *lo <= x && x <= *hi {
                        bits[b.id / 64] |= 1 << (b.id % 64);
                    }
                }
                (x, bits)
            })
            .collect();
        axes.push(axis);
    }

    let mut seen: HashMap<Vec<u64>, Vec<Coord>> = HashMap::new();
    let mut order: Vec<Vec<u64>> = Vec::new();
    let mut index = vec![0usize; instance.d];
    'grid: loop {
        let mut bits = axes[0][index[0]].1.clone();
        for j in 1..instance.d {
            for (w, other) in bits.iter_mut().zip(&axes[j][index[j]].1) {
                *w &= other;
            }
        }
        if bits.iter().any(|&w| w != 0) && !seen.contains_key(&bits) {
            let witness = (0..instance.d).map(|j| axes[j][index[j]].0.clone()).collect();
            seen.insert(bits.clone(), witness);
            order.push(bits);
        }
        for j in 0..instance.d {
            index[j] += 1;
            if index[j] < axes[j].len() {
                continue 'grid;
            }
            index[j] = 0;
        }
        break;
    }
    order
        .into_iter()
        .map(|bits| {
            let members = (0..n).filter(|&i| bits[i / 64] >> (i % 64) & 1 == 1).collect();
            let witness = seen.remove(&bits).unwrap_or_default();
            Cell { witness, members }
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoxImbalance {
    pub value: usize,
    /// A point where `value` is attained; empty for an empty instance.
    pub witness: Vec<Coord>,
}

fn spread(members: &[usize], colors: &[usize], k: usize) -> usize {
    let mut counts = vec![0usize; k];
    for &i in members {
        counts[colors[i] - 1] += 1;
    }
    counts.iter().max().unwrap_or(&0) - counts.iter().min().unwrap_or(&0)
}

/// Largest color-count spread over all points.
pub fn box_imbalance(instance: &BoxInstance, coloring: &Coloring) -> Result<BoxImbalance> {
    coloring.check(instance.len(), instance.k)?;
    let mut best = BoxImbalance {
        value: 0,
        witness: Vec::new(),
    };
    for cell in box_cells(instance) {
        let s = spread(&cell.members, coloring.colors(), instance.k);
        if s > best.value || best.witness.is_empty() {
            best = BoxImbalance {
                value: s,
                witness: cell.witness,
            };
        }
    }
    Ok(best)
}

/// Exhaustive minimum imbalance for small instances.
pub fn box_min_imbalance_oracle(instance: &BoxInstance, limit_n: usize) -> Result<(usize, Coloring)> {
    let n = instance.len();
    if n > limit_n {
        return Err(Error::TooLarge(format!("{n} boxes exceed the limit of {limit_n}")));
    }
    let cliques: Vec<Vec<usize>> = box_cells(instance).into_iter().map(|c| c.members).collect();
    let lower_bound = usize::from(cliques.iter().any(|q| q.len() % instance.k != 0));
    let (value, colors) = min_spread_search(n, instance.k, &cliques, lower_bound);
    Ok((value, Coloring::from_vec(colors)))
}

pub const DEFAULT_NODE_BUDGET: u64 = 20_000_000;

/// Balanced coloring if one exists. Boxes are colored in id order, colors
/// ascending; a branch is cut as soon as a cell whose last box was just
/// colored has spread above 1. Gives up after `node_budget` assignments.
pub fn decide_balanced_boxes(instance: &BoxInstance, node_budget: u64) -> Result<Option<Coloring>> {
    let n = instance.len();
    let k = instance.k;
    if n == 0 {
        return Ok(Some(Coloring::from_vec(Vec::new())));
    }
    let mut complete_at: Vec<Vec<Vec<usize>>> = vec![Vec::new(); n];
    for cell in box_cells(instance) {
        let last = *cell.members.iter().max().expect("cells are nonempty");
        complete_at[last].push(cell.members);
    }
    let mut colors = vec![0usize; n];
    let mut nodes = 0u64;
    // explicit stack of the next color to try at each depth
    let mut depth = 0usize;
    loop {
        colors[depth] += 1;
        if colors[depth] > k {
            colors[depth] = 0;
            if depth == 0 {
                return Ok(None);
            }
            depth -= 1;
            continue;
        }
        nodes += 1;
        if nodes > node_budget {
            return Err(Error::SearchBudgetExhausted(node_budget));
        }
        let ok = complete_at[depth]
            .iter()
            .all(|members| spread(members, &colors, k) <= 1);
        if ok {
            if depth + 1 == n {
                return Ok(Some(Coloring::from_vec(colors)));
            }
            depth += 1;
        }
    }
}
