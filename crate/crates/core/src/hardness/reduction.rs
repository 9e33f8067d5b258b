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

//! NAE-3SAT to balanced 2-coloring of rectangles, plus covers for `k > 2`.
//!
//! Every clause gets three rectangles meeting pairwise in one common corner
//! region, every variable a horizontal bar on top, and every clause slot a
//! chain of rectangles from its variable bar to its clause rectangle.
//! Consecutive chain rectangles overlap in a small window, so in a balanced
//! 2-coloring they alternate; chains have an odd number of rectangles.
//! A chain runs down from the bar, left along its own track, and down to
//! the clause. Where a vertical run of one chain meets the horizontal run
//! of another, the horizontal chain places a window wider than the vertical
//! strip and the vertical chain passes over it with a single rectangle,
//! which touches the two horizontal rectangles only where both overlap.

use std::collections::HashMap;

use super::boxes::{AxisBox, BoxInstance, Provenance};
use super::NaeFormula;
use crate::error::{Error, Result};
use crate::interval::Coord;

/// `[x0, x1, y0, y1]`
type Rect = [i64; 4];

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Mark {
    Plain,
    /// Horizontal run, vertical run of chain `other` passes here.
    Under(usize),
    /// First window of a vertical pass over chain `other`; the next window
    /// ends the pass.
    Over(usize),
}

const CLAUSE_PITCH: i64 = 100;
const TRACK_PITCH: i64 = 20;
/// Column offset and top of the attach point of each clause rectangle.
const ATTACH: [(i64, i64); 3] = [(10, 20), (70, 20), (40, 50)];

fn clause_rects(c: usize) -> [Rect; 3] {
    let gx = CLAUSE_PITCH * c as i64;
    [
        [gx, gx + 50, 0, 20],
        [gx + 30, gx + 80, 0, 20],
        [gx + 30, gx + 50, 0, 50],
    ]
}

fn bbox(a: &Rect, b: &Rect) -> Rect {
    [a[0].min(b[0]), a[1].max(b[1]), a[2].min(b[2]), a[3].max(b[3])]
}

fn column(x: i64, y0: i64, y1: i64) -> Rect {
    [x - 1, x + 1, y0, y1]
}

struct Layout {
    /// Per slot: column of the lower run, top of its clause rectangle,
    /// track height, column of the upper run.
    lower: Vec<i64>,
    bottom: Vec<i64>,
    track: Vec<i64>,
    upper: Vec<i64>,
    bar_y: i64,
    bars: Vec<Rect>,
}

impl Layout {
    fn new(formula: &NaeFormula) -> Layout {
        let m = formula.clauses().len();
        let slots = 3 * m;
        let var_of = |q: usize| formula.clauses()[q / 3][q % 3];
        let lower = (0..slots)
            .map(|q| CLAUSE_PITCH * (q / 3) as i64 + ATTACH[q % 3].0)
            .collect();
        let bottom = (0..slots).map(|q| ATTACH[q % 3].1).collect();
        let track = (0..slots).map(|q| 100 + TRACK_PITCH * q as i64).collect();
        let bar_y = 100 + TRACK_PITCH * slots as i64 + 40;

        // upper columns grouped by variable so bars stay disjoint
        let mut order: Vec<usize> = (0..slots).collect();
        order.sort_by_key(|&q| (var_of(q), q));
        let mut upper = vec![0i64; slots];
        let mut next = CLAUSE_PITCH * m as i64 + 100;
        let mut span: Vec<Option<(i64, i64)>> = vec![None; formula.num_vars()];
        for (pos, &q) in order.iter().enumerate() {
            if pos > 0 && var_of(order[pos - 1]) != var_of(q) {
                next += TRACK_PITCH;
            }
            upper[q] = next;
            let s = span[var_of(q) - 1].get_or_insert((next, next));
            s.1 = next;
            next += TRACK_PITCH;
        }
        let bars = span
            .into_iter()
            .map(|s| {
                let (a, b) = s.unwrap_or_else(|| {
                    next += TRACK_PITCH;
                    (next, next)
                });
                [a - 5, b + 5, bar_y, bar_y + 20]
            })
            .collect();
        Layout {
            lower,
            bottom,
            track,
            upper,
            bar_y,
            bars,
        }
    }

    /// Windows of chain `q` from its variable bar down to its clause.
    fn windows(&self, q: usize) -> Vec<(Rect, Mark)> {
        let slots = self.track.len();
        let (x, u, h) = (self.lower[q], self.upper[q], self.track[q]);
        let mut w = vec![(column(u, self.bar_y, self.bar_y + 1), Mark::Plain)];

        let pass_over = |w: &mut Vec<(Rect, Mark)>, col: i64, other: usize| {
            let t = self.track[other];
            w.push((column(col, t + 3, t + 4), Mark::Over(other)));
            w.push((column(col, t - 4, t - 3), Mark::Plain));
        };

        // upper run crosses the tracks above its own that reach past it
        for other in (q + 1..slots).rev() {
            if self.upper[other] > u {
                pass_over(&mut w, u, other);
            }
        }
        w.push((column(u, h - 1, h + 1), Mark::Plain));

        // own track, right to left
        let mut under: Vec<(i64, usize)> = Vec::new();
        for other in 0..slots {
            if other > q && self.lower[other] > x {
                under.push((self.lower[other], other));
            }
            if other < q && self.upper[other] > x && self.upper[other] < u {
                under.push((self.upper[other], other));
            }
        }
        under.sort_unstable_by(|a, b| b.cmp(a));
        for (col, other) in under {
            w.push(([col - 1, col + 3, h - 1, h + 1], Mark::Under(other)));
        }
        w.push((column(x, h - 1, h + 1), Mark::Plain));

        // lower run crosses the tracks below that start left of it
        for other in (0..q).rev() {
            if self.lower[other] < x {
                pass_over(&mut w, x, other);
            }
        }
        let b = self.bottom[q];
        w.push((column(x, b - 1, b), Mark::Plain));

        if w.len() % 2 == 1 {
            // an even number of rectangles would flip the clause color
            let y = self.bar_y;
            w.insert(1, (column(u, y - 5, y - 4), Mark::Plain));
        }
        w
    }
}

/// Rectangles (`k = 2`) or rectangles plus `k - 2` covers whose balanced
/// `k`-colorings correspond to NAE assignments of `formula`.
///
/// Box order: covers, variable bars, chains by slot, clause rectangles.
pub fn reduce_nae_to_boxes(formula: &NaeFormula, k: usize) -> Result<BoxInstance> {
    if k < 2 {
        return Err(Error::InvalidColorCount { k, min: 2 });
    }
    let layout = Layout::new(formula);
    let slots = 3 * formula.clauses().len();

    let mut rects: Vec<(Rect, Provenance)> = Vec::new();
    for (v, bar) in layout.bars.iter().enumerate() {
        rects.push((*bar, Provenance::Variable { variable: v + 1 }));
    }

    let windows: Vec<Vec<(Rect, Mark)>> = (0..slots).map(|q| layout.windows(q)).collect();
    // chain `b`'s window index where chain `a` passes under it
    let mut under_at: HashMap<(usize, usize), usize> = HashMap::new();
    for (b, w) in windows.iter().enumerate() {
        for (j, (_, mark)) in w.iter().enumerate() {
            if let Mark::Under(a) = *mark {
                under_at.insert((a, b), j);
            }
        }
    }
    for (q, w) in windows.iter().enumerate() {
        for (i, pair) in w.windows(2).enumerate() {
            let tag = match pair[0].1 {
                Mark::Over(other) => {
                    let j = under_at.get(&(q, other)).copied().ok_or_else(|| {
                        Error::Internal(format!("chain {q} passes over chain {other} without a matching window"))
                    })?;
                    Provenance::Crossing {
                        chain: q,
                        index: i,
                        crosses: other,
                        at: j - 1,
                    }
                }
                _ => Provenance::Chain { chain: q, index: i },
            };
            rects.push((bbox(&pair[0].0, &pair[1].0), tag));
        }
    }
    for (c, clause) in formula.clauses().iter().enumerate() {
        for (slot, r) in clause_rects(c).into_iter().enumerate() {
            rects.push((
                r,
                Provenance::Clause {
                    clause: c,
                    slot,
                    variable: clause[slot],
                },
            ));
        }
    }

    let mut covers: Vec<(Rect, Provenance)> = Vec::new();
    if let Some(first) = rects.first() {
        let outer = rects.iter().fold(first.0, |acc, (r, _)| bbox(&acc, r));
        // nested, all containing the strip just right of everything else
        for j in 0..k - 2 {
            let j = j as i64;
            let cover = [outer[0] - 1 - j, outer[1] + 10 + j, outer[2] - 1 - j, outer[3] + 1 + j];
            covers.push((cover, Provenance::Cover { index: j as usize }));
        }
    }

    let boxes = covers
        .into_iter()
        .chain(rects)
        .map(|(r, tag)| {
            let sides = vec![
                (Coord::from_int(r[0]), Coord::from_int(r[1])),
                (Coord::from_int(r[2]), Coord::from_int(r[3])),
            ];
            (sides, Some(tag))
        })
        .collect();
    BoxInstance::new(2, k, boxes)
}

fn overlap(a: &AxisBox, b: &AxisBox) -> Option<Vec<(Coord, Coord)>> {
    let sides: Vec<(Coord, Coord)> = a
        .sides
        .iter()
        .zip(&b.sides)
        .map(|((a0, a1), (b0, b1))| (a0.max(b0).clone(), a1.min(b1).clone()))
        .collect();
    sides.iter().all(|(lo, hi)| lo <= hi).then_some(sides)
}

fn within(inner: &[(Coord, Coord)], outer: &[(Coord, Coord)]) -> bool {
    inner.iter().zip(outer).all(|((a0, a1), (b0, b1))| b0 <= a0 && a1 <= b1)
}

fn fail(msg: String) -> Error {
    Error::Internal(format!("gadget audit: {msg}"))
}

/// Checks that the boxes of a reduced instance intersect exactly as their
/// tags say: chain neighbours, chain ends with their bar and clause
/// rectangle, the three rectangles of a clause in one common region, every
/// crossing rectangle with the two rectangles it passes between, and
/// covers with everything.
pub fn audit_reduction(instance: &BoxInstance) -> Result<()> {
    let mut chain_of: HashMap<(usize, usize), usize> = HashMap::new();
    let mut chain_len: HashMap<usize, usize> = HashMap::new();
    let mut bar_of: HashMap<usize, usize> = HashMap::new();
    let mut clause_of: HashMap<(usize, usize), (usize, usize)> = HashMap::new();
    for b in &instance.boxes {
        match b.tag {
            Some(Provenance::Chain { chain, index }) | Some(Provenance::Crossing { chain, index, .. }) => {
                chain_of.insert((chain, index), b.id);
                let len = chain_len.entry(chain).or_default();
                *len = (*len).max(index + 1);
            }
            Some(Provenance::Variable { variable }) => {
                bar_of.insert(variable, b.id);
            }
            Some(Provenance::Clause { clause, slot, variable }) => {
                clause_of.insert((clause, slot), (b.id, variable));
            }
            Some(Provenance::Cover { .. }) => {}
            None => return Err(fail(format!("box {} has no tag", b.id))),
        }
    }
    for (&chain, &len) in &chain_len {
        if len % 2 == 0 {
            return Err(fail(format!("chain {chain} has an even number of rectangles")));
        }
        if !clause_of.contains_key(&(chain / 3, chain % 3)) {
            return Err(fail(format!("chain {chain} has no clause rectangle")));
        }
    }

    let mut expected: Vec<(usize, usize)> = Vec::new();
    for (&(chain, index), &id) in &chain_of {
        if let Some(&next) = chain_of.get(&(chain, index + 1)) {
            expected.push((id, next));
        }
        let (clause_box, variable) = clause_of[&(chain / 3, chain % 3)];
        if index == 0 {
            let bar = *bar_of
                .get(&variable)
                .ok_or_else(|| fail(format!("variable {variable} has no bar")))?;
            expected.push((bar, id));
        }
        if index + 1 == chain_len[&chain] {
            expected.push((id, clause_box));
        }
    }
    for b in &instance.boxes {
        if let Some(Provenance::Crossing { crosses, at, .. }) = b.tag {
            for j in [at, at + 1] {
                let other = *chain_of
                    .get(&(crosses, j))
                    .ok_or_else(|| fail(format!("box {} crosses a missing rectangle", b.id)))?;
                expected.push((b.id, other));
            }
        }
    }
    for (&(clause, slot), &(id, _)) in &clause_of {
        for later in slot + 1..3 {
            if let Some(&(other, _)) = clause_of.get(&(clause, later)) {
                expected.push((id, other));
            }
        }
    }
    let mut expected: std::collections::HashSet<(usize, usize)> =
        expected.into_iter().map(|(a, b)| (a.min(b), a.max(b))).collect();
    let is_cover = |b: &AxisBox| matches!(b.tag, Some(Provenance::Cover { .. }));
    for a in &instance.boxes {
        for b in &instance.boxes[a.id + 1..] {
            if is_cover(a) || is_cover(b) {
                if !a.intersects(b) {
                    return Err(fail(format!(
                        "cover misses box {}",
                        if is_cover(a) { b.id } else { a.id }
                    )));
                }
                continue;
            }
            let want = expected.remove(&(a.id, b.id));
            if a.intersects(b) != want {
                return Err(fail(format!(
                    "boxes {} and {} {}",
                    a.id,
                    b.id,
                    if want { "should meet" } else { "meet unexpectedly" }
                )));
            }
        }
    }

    // a clause's pairwise overlaps coincide
    let clauses: std::collections::BTreeSet<usize> = clause_of.keys().map(|&(c, _)| c).collect();
    for c in clauses {
        let ids: Vec<usize> = (0..3)
            .filter_map(|s| clause_of.get(&(c, s)).map(|&(id, _)| id))
            .collect();
        if ids.len() != 3 {
            return Err(fail(format!("clause {c} has {} rectangles", ids.len())));
        }
        let r = |i: usize| &instance.boxes[ids[i]];
        let pairs = [overlap(r(0), r(1)), overlap(r(0), r(2)), overlap(r(1), r(2))];
        if pairs[0].is_none() || pairs.iter().any(|p| p != &pairs[0]) {
            return Err(fail(format!("clause {c} rectangles do not share one region")));
        }
    }
    // the crossing rectangle meets both neighbours in the same place, and
    // the neighbours also overlap outside it
    for b in &instance.boxes {
        if let Some(Provenance::Crossing { crosses, at, .. }) = b.tag {
            let v1 = &instance.boxes[chain_of[&(crosses, at)]];
            let v2 = &instance.boxes[chain_of[&(crosses, at + 1)]];
            let shared = overlap(v1, v2);
            let (Some(w1), Some(w2), Some(shared)) = (overlap(b, v1), overlap(b, v2), shared) else {
                return Err(fail(format!("crossing box {} is detached", b.id)));
            };
            if w1 != w2 || within(&shared, &b.sides) {
                return Err(fail(format!("crossing box {} overlaps its neighbours unevenly", b.id)));
            }
        }
    }
    Ok(())
}
