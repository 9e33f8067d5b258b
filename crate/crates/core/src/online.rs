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

//! Online coloring, where each interval is colored on arrival in order of
//! startpoints, and the adversary that drives any such algorithm to
//! unbounded imbalance.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::interval::{imbalance, Coloring, Coord, Instance, Interval};

/// What an online algorithm may look at: everything presented so far and
/// its own earlier answers.
#[derive(Debug, Clone, Copy)]
pub struct History<'a> {
    pub intervals: &'a [Interval],
    pub colors: &'a [usize],
}

pub trait OnlineAlgorithm {
    fn name(&self) -> &str;

    /// Called once before a run.
    fn init(&mut self, k: usize);

    /// Irrevocable color in `1..=k` for `interval`.
    fn assign(&mut self, interval: &Interval, history: History<'_>) -> usize;
}

#[derive(Debug, Clone, Default)]
pub struct RoundRobin {
    k: usize,
    next: usize,
}

impl OnlineAlgorithm for RoundRobin {
    fn name(&self) -> &str {
        "round_robin"
    }

    fn init(&mut self, k: usize) {
        self.k = k;
        self.next = 0;
    }

    fn assign(&mut self, _: &Interval, _: History<'_>) -> usize {
        let color = self.next % self.k + 1;
        self.next += 1;
        color
    }
}

/// Least used color among earlier intervals containing the new startpoint,
/// lowest on ties.
#[derive(Debug, Clone, Default)]
pub struct GreedyLeastLoaded {
    k: usize,
}

impl OnlineAlgorithm for GreedyLeastLoaded {
    fn name(&self) -> &str {
        "greedy"
    }

    fn init(&mut self, k: usize) {
        self.k = k;
    }

    fn assign(&mut self, interval: &Interval, history: History<'_>) -> usize {
        let mut counts = vec![0usize; self.k];
        for (prev, &c) in history.intervals.iter().zip(history.colors) {
            if prev.contains(&interval.lo) {
                counts[c - 1] += 1;
            }
        }
        let (best, _) = counts
            .iter()
            .enumerate()
            .min_by_key(|&(c, &count)| (count, c))
            .unwrap_or((0, &0));
        best + 1
    }
}

/// Uniform colors from a seeded ChaCha stream, restarted by `init`.
#[derive(Debug, Clone)]
pub struct SeededRandom {
    seed: u64,
    k: usize,
    rng: ChaCha8Rng,
}

impl SeededRandom {
    pub fn new(seed: u64) -> SeededRandom {
        SeededRandom {
            seed,
            k: 1,
            rng: ChaCha8Rng::seed_from_u64(seed),
        }
    }
}

impl OnlineAlgorithm for SeededRandom {
    fn name(&self) -> &str {
        "random"
    }

    fn init(&mut self, k: usize) {
        self.k = k;
        self.rng = ChaCha8Rng::seed_from_u64(self.seed);
    }

    fn assign(&mut self, _: &Interval, _: History<'_>) -> usize {
        self.rng.gen_range(1..=self.k)
    }
}

/// Always the same color.
#[derive(Debug, Clone)]
pub struct FixedColor(pub usize);

impl OnlineAlgorithm for FixedColor {
    fn name(&self) -> &str {
        "fixed"
    }

    fn init(&mut self, _: usize) {}

    fn assign(&mut self, _: &Interval, _: History<'_>) -> usize {
        self.0
    }
}

/// Built-in algorithm by name: `round_robin`, `greedy` or `random`.
pub fn builtin(name: &str, seed: u64) -> Option<Box<dyn OnlineAlgorithm>> {
    match name {
        "round_robin" => Some(Box::new(RoundRobin::default())),
        "greedy" | "greedy_least_loaded" => Some(Box::new(GreedyLeastLoaded::default())),
        "random" | "seeded_random" => Some(Box::new(SeededRandom::new(seed))),
        _ => None,
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OnlineRun {
    pub coloring: Coloring,
    /// Imbalance of each prefix, measured by the offline sweep.
    pub trace: Vec<usize>,
}

/// Feeds `stream` to `alg` one interval at a time.
pub fn run_online(alg: &mut dyn OnlineAlgorithm, stream: &Instance) -> Result<OnlineRun> {
    let k = stream.k();
    let intervals = stream.intervals();
    if let Some(i) = (1..intervals.len()).find(|&i| intervals[i].lo < intervals[i - 1].lo) {
        return Err(Error::UnorderedStream(i));
    }
    alg.init(k);
    let mut colors = Vec::with_capacity(intervals.len());
    let mut trace = Vec::with_capacity(intervals.len());
    for (i, interval) in intervals.iter().enumerate() {
        let history = History {
            intervals: &intervals[..i],
            colors: &colors,
        };
        let color = alg.assign(interval, history);
        if color == 0 || color > k {
            return Err(Error::ColorOutOfRange { index: i, color, k });
        }
        colors.push(color);
        let prefix: Vec<usize> = (0..=i).collect();
        let report = imbalance(&stream.subset(&prefix, k)?, &Coloring::from_vec(colors.clone()))?;
        trace.push(report.value);
    }
    Ok(OnlineRun {
        coloring: Coloring::from_vec(colors),
        trace,
    })
}

/// One interval shown to the algorithm during an adversary run.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Presentation {
    pub round: usize,
    pub lo: Coord,
    pub hi: Coord,
    pub color: usize,
    /// Tracked-color balance inside the current `L` and `R` afterwards.
    pub simb_l: i64,
    pub simb_r: i64,
    /// Imbalance of everything presented so far.
    pub imbalance: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Transcript {
    pub algorithm: String,
    pub k: usize,
    /// Colors counted as +1 and −1.
    pub tracked: (usize, usize),
    pub presentations: Vec<Presentation>,
    /// Rounds ending in the first and second tracked color.
    pub plus: usize,
    pub minus: usize,
    /// The algorithm spent the whole repeat budget on untracked colors.
    pub stalled: bool,
    pub l: (Coord, Coord),
    pub r: (Coord, Coord),
    pub max_imbalance: usize,
}

impl Transcript {
    pub fn instance(&self) -> Result<Instance> {
        Instance::new(self.presentations.iter().map(|p| (p.lo.clone(), p.hi.clone())), self.k)
    }

    pub fn coloring(&self) -> Coloring {
        Coloring::from_vec(self.presentations.iter().map(|p| p.color).collect())
    }

    /// One JSON object per presentation.
    pub fn to_json_lines(&self) -> String {
        self.presentations
            .iter()
            .map(|p| serde_json::to_string(p).expect("presentation serializes"))
            .collect::<Vec<_>>()
            .join("\n")
    }
}

/// Two-color adversary for `t` rounds; color 1 counts +1 and color 2 −1.
pub fn adversary_k2(alg: &mut dyn OnlineAlgorithm, t: usize) -> Result<Transcript> {
    adversary_general(alg, 2, t, 0, (1, 2))
}

/// Adversary for any `k`, tracking two colors. An untracked answer makes it
/// present the same interval again with the startpoint moved
/// `g (1 − 2^−j)` to the right, `g` being a quarter of the current `L`, at
/// most `repeat_budget` times per round.
pub fn adversary_general(
    alg: &mut dyn OnlineAlgorithm,
    k: usize,
    t: usize,
    repeat_budget: usize,
    tracked: (usize, usize),
) -> Result<Transcript> {
    if k < 2 {
        return Err(Error::InvalidColorCount { k, min: 2 });
    }
    for c in [tracked.0, tracked.1] {
        if c == 0 || c > k || tracked.0 == tracked.1 {
            return Err(Error::ColorOutOfRange { index: 0, color: c, k });
        }
    }
    alg.init(k);
    let mut l = (Coord::from_int(0), Coord::from_int(1));
    let mut r = (Coord::from_int(2), Coord::from_int(3));
    let mut intervals: Vec<Interval> = Vec::new();
    let mut colors: Vec<usize> = Vec::new();
    let mut presentations = Vec::new();
    let (mut plus, mut minus) = (0, 0);
    let mut stalled = false;
    let mut max_imbalance = 0;

    'rounds: for round in 0..t {
        let mid_l = l.0.midpoint(&l.1);
        let mid_r = r.0.midpoint(&r.1);
        let mut step = (&l.1 - &mid_l).half();
        let mut start = mid_l.clone();
        let mut repeats = 0;
        loop {
            let interval = Interval {
                id: intervals.len(),
                lo: start.clone(),
                hi: mid_r.clone(),
            };
            let color = alg.assign(
                &interval,
                History {
                    intervals: &intervals,
                    colors: &colors,
                },
            );
            if color == 0 || color > k {
                return Err(Error::ColorOutOfRange {
                    index: intervals.len(),
                    color,
                    k,
                });
            }
            intervals.push(interval);
            colors.push(color);
            let accepted = color == tracked.0 || color == tracked.1;
            if accepted {
                l = (start.clone(), l.1.clone());
                if color == tracked.0 {
                    plus += 1;
                    r = (r.0.clone(), mid_r.clone());
                } else {
                    minus += 1;
                    r = (mid_r.clone(), r.1.clone());
                }
            }
            let instance = Instance::new(intervals.iter().map(|i| (i.lo.clone(), i.hi.clone())), k)?;
            let value = imbalance(&instance, &Coloring::from_vec(colors.clone()))?.value;
            max_imbalance = max_imbalance.max(value);
            presentations.push(Presentation {
                round,
                lo: start.clone(),
                hi: mid_r.clone(),
                color,
                simb_l: signed_balance(&intervals, &colors, tracked, &l.0.midpoint(&l.1)),
                simb_r: signed_balance(&intervals, &colors, tracked, &r.0.midpoint(&r.1)),
                imbalance: value,
            });
            if accepted {
                break;
            }
            if repeats == repeat_budget {
                stalled = true;
                break 'rounds;
            }
            repeats += 1;
            start = &start + &step;
            step = step.half();
        }
    }
    Ok(Transcript {
        algorithm: alg.name().to_string(),
        k,
        tracked,
        presentations,
        plus,
        minus,
        stalled,
        l,
        r,
        max_imbalance,
    })
}

fn signed_balance(intervals: &[Interval], colors: &[usize], tracked: (usize, usize), x: &Coord) -> i64 {
    intervals
        .iter()
        .zip(colors)
        .filter(|(i, _)| i.contains(x))
        .map(|(_, &c)| {
            if c == tracked.0 {
                1
            } else if c == tracked.1 {
                -1
            } else {
                0
            }
        })
        .sum()
}
