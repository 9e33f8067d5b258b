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

//! Balanced k-colorings of intervals.
//!
//! A coloring assigns each interval one of `k` colors; its imbalance is the
//! largest difference between two color counts at any point of the line.
//! Every interval set admits a coloring with imbalance at most one, and this
//! crate constructs one in `O(n log n + k n log k)`-style time through a
//! sweep that emits `k`-element constraints and edge-colors the resulting
//! bipartite multigraph.
//!
//! Around that core sit a simpler two-color algorithm, an iterative pairwise
//! rebalancing variant, consecutive-ones hypergraphs, circular arcs
//! (imbalance at most two), an online adversary, and constructions that
//! reduce NAE-3SAT and Partition to the box, weighted and multiple-interval
//! variants together with brute-force deciders.

pub mod arcs;
pub mod cli;
pub mod error;
pub mod formats;
pub mod hardness;
pub mod interval;
pub mod k_color;
pub mod online;
pub mod two_color;

pub use error::{Error, ParseError, Result};
pub use interval::{Coloring, Coord, Instance, Interval};
