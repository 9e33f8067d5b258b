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

//! Construction of the `k`-element constraints from an event scan.

use std::fmt;

use crate::error::{Error, Result};
use crate::interval::{EventKind, NormalizedInstance};

/// A member of a constraint: a real interval or a placeholder.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Item {
    Real(usize),
    /// Carries the colors missing from a partial window into its closing constraint.
    VirtualX(usize),
    /// Stands in for the still-open members of a window after one of them closed.
    VirtualY(usize),
}

impl fmt::Display for Item {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Item::Real(i) => write!(f, "I{i}"),
            Item::VirtualX(u) => write!(f, "x{}", u + 1),
            Item::VirtualY(u) => write!(f, "y{}", u + 1),
        }
    }
}

/// Which side of the bipartite constraint graph a constraint sits on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Side {
    /// ⊢
    Start,
    /// ⊣
    End,
}

impl Side {
    pub fn opposite(self) -> Side {
        match self {
            Side::Start => Side::End,
            Side::End => Side::Start,
        }
    }

    fn index(self) -> usize {
        match self {
            Side::Start => 0,
            Side::End => 1,
        }
    }

    fn of(kind: EventKind) -> Side {
        match kind {
            EventKind::Start => Side::Start,
            EventKind::End => Side::End,
        }
    }
}

/// `k` items that must all receive distinct colors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Constraint {
    pub id: usize,
    pub items: Vec<Item>,
    pub side: Side,
}

/// Scan state between two events.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ActiveSet {
    AtRoot,
    CollectingStarts(Vec<Item>),
    CollectingEnds(Vec<Item>),
}

const UNSET: u32 = u32::MAX;

/// For every item, the constraint on each side that contains it.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Occurrences {
    real: Vec<[u32; 2]>,
    x: Vec<[u32; 2]>,
    y: Vec<[u32; 2]>,
}

impl Occurrences {
    fn slot(&mut self, item: Item) -> &mut [u32; 2] {
        let (table, idx) = match item {
            Item::Real(i) => (&mut self.real, i),
            Item::VirtualX(u) => (&mut self.x, u),
            Item::VirtualY(u) => (&mut self.y, u),
        };
        if table.len() <= idx {
            table.resize(idx + 1, [UNSET; 2]);
        }
        &mut table[idx]
    }

    /// `(⊢ constraint, ⊣ constraint)` containing `item`.
    pub fn get(&self, item: Item) -> (Option<usize>, Option<usize>) {
        let entry = match item {
            Item::Real(i) => self.real.get(i),
            Item::VirtualX(u) => self.x.get(u),
            Item::VirtualY(u) => self.y.get(u),
        };
        let opt = |v: u32| (v != UNSET).then_some(v as usize);
        entry.map_or((None, None), |e| (opt(e[0]), opt(e[1])))
    }

    /// All items that occur at least once, reals first.
    pub fn items(&self) -> impl Iterator<Item = Item> + '_ {
        (0..self.real.len())
            .map(Item::Real)
            .chain((0..self.x.len()).map(Item::VirtualX))
            .chain((0..self.y.len()).map(Item::VirtualY))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConstraintSystem {
    pub k: usize,
    pub constraints: Vec<Constraint>,
    pub occurrences: Occurrences,
    pub virtual_x: usize,
    pub virtual_y: usize,
}

struct Builder {
    k: usize,
    constraints: Vec<Constraint>,
    occurrences: Occurrences,
    next_x: usize,
    next_y: usize,
}

impl Builder {
    fn emit(&mut self, items: Vec<Item>, side: Side) -> Result<()> {
        debug_assert_eq!(items.len(), self.k);
        let id = self.constraints.len();
        if id >= UNSET as usize {
            return Err(Error::TooLarge(format!("{id} constraints")));
        }
        for &item in &items {
            let slot = &mut self.occurrences.slot(item)[side.index()];
            if *slot != UNSET {
                return Err(Error::Internal(format!(
                    "{item} would appear in two {side:?} constraints ({} and {id})",
                    *slot
                )));
            }
            *slot = id as u32;
        }
        self.constraints.push(Constraint { id, items, side });
        Ok(())
    }

    fn fresh_x(&mut self, count: usize) -> Vec<Item> {
        let out = (self.next_x..self.next_x + count).map(Item::VirtualX).collect();
        self.next_x += count;
        out
    }

    fn fresh_y(&mut self, count: usize) -> Vec<Item> {
        let out = (self.next_y..self.next_y + count).map(Item::VirtualY).collect();
        self.next_y += count;
        out
    }
}

/// Scans the events in rank order and emits the constraints.
///
/// The active list is cleared whenever the depth returns to a multiple of
/// `k`. Starting from the root, the first event fixes the collecting side.
/// Collecting starts (ends mirror this), each start joins the list and a full
/// list of `k` becomes one ⊢ constraint. When an interval `e` ends while `j`
/// items are active, two constraints are emitted that share fresh
/// placeholders `x_{j+1..k}`:
///
/// ```text
/// (I_1, .., I_j, x_{j+1}, .., x_k)          ⊢
/// (y_1, .., y_{j-1}, e, x_{j+1}, .., x_k)   ⊣
/// ```
///
/// and the fresh `y`s replace the active list, which forces `e` to take
/// one of the colors of `I_1..I_j` and the `y`s to hold the rest.
pub fn build_constraints(norm: &NormalizedInstance<'_>, k: usize) -> Result<ConstraintSystem> {
    build_labeled(norm, k, |i| i)
}

/// As [`build_constraints`], with interval `i` appearing as `Real(label(i))`.
pub(crate) fn build_labeled(
    norm: &NormalizedInstance<'_>,
    k: usize,
    label: impl Fn(usize) -> usize,
) -> Result<ConstraintSystem> {
    if k < 2 {
        return Err(Error::InvalidColorCount { k, min: 2 });
    }
    let mut b = Builder {
        k,
        constraints: Vec::new(),
        occurrences: Occurrences::default(),
        next_x: 0,
        next_y: 0,
    };
    let mut collecting: Option<Side> = None;
    let mut active: Vec<Item> = Vec::with_capacity(k);

    for event in norm.events() {
        let kind = Side::of(event.kind);
        let side = *collecting.get_or_insert(kind);
        let item = Item::Real(label(event.interval));
        if kind == side {
            active.push(item);
            if active.len() == k {
                b.emit(std::mem::take(&mut active), side)?;
                collecting = None;
            }
        } else {
            let j = active.len();
            let xs = b.fresh_x(k - j);
            let ys = b.fresh_y(j - 1);
            let mut first = std::mem::take(&mut active);
            first.extend_from_slice(&xs);
            b.emit(first, side)?;
            let mut second = ys.clone();
            second.push(item);
            second.extend_from_slice(&xs);
            b.emit(second, side.opposite())?;
            active = ys;
            if active.is_empty() {
                collecting = None;
            }
        }
    }
    if collecting.is_some() {
        return Err(Error::Internal(format!(
            "event scan ended with {} active items",
            active.len()
        )));
    }
    Ok(ConstraintSystem {
        k,
        constraints: b.constraints,
        occurrences: b.occurrences,
        virtual_x: b.next_x,
        virtual_y: b.next_y,
    })
}

impl ConstraintSystem {
    /// Checks the structural facts the edge-coloring reduction relies on.
    pub fn check_structure(&self, n: usize) -> Result<()> {
        for c in &self.constraints {
            if c.items.len() != self.k {
                return Err(Error::Internal(format!(
                    "constraint {} has {} items",
                    c.id,
                    c.items.len()
                )));
            }
            let mut sorted = c.items.clone();
            sorted.sort_unstable();
            if sorted.windows(2).any(|w| w[0] == w[1]) {
                return Err(Error::Internal(format!("constraint {} repeats an item", c.id)));
            }
        }
        for item in self.occurrences.items() {
            let (start, end) = self.occurrences.get(item);
            let (Some(start), Some(end)) = (start, end) else {
                return Err(Error::Internal(format!("{item} is missing a side")));
            };
            match item {
                Item::VirtualX(_) if start.abs_diff(end) != 1 => {
                    return Err(Error::Internal(format!("{item} is not shared by a consecutive pair")));
                }
                Item::VirtualY(_) => {
                    // Created by the second constraint of a closing pair,
                    // consumed later on the opposite side.
                    let created = start.min(end);
                    let paired = created > 0
                        && self.constraints[created].items.iter().any(|it| {
                            matches!(it, Item::VirtualX(_))
                                && self.occurrences.get(*it) == Self::ordered(&self.constraints, created - 1, created)
                        });
                    if !paired {
                        return Err(Error::Internal(format!("{item} was not created by a closing pair")));
                    }
                }
                _ => {}
            }
        }
        if self.occurrences.real.len() != n {
            return Err(Error::Internal(format!(
                "constraints mention {} intervals, expected {n}",
                self.occurrences.real.len()
            )));
        }
        Ok(())
    }

    fn ordered(constraints: &[Constraint], a: usize, b: usize) -> (Option<usize>, Option<usize>) {
        match constraints[a].side {
            Side::Start => (Some(a), Some(b)),
            Side::End => (Some(b), Some(a)),
        }
    }
}
