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

//! Balanced `k`-coloring through constraints and bipartite edge coloring.
//!
//! The event scan in [`build_constraints`] produces `k`-element constraints
//! whose solutions (all members pairwise distinct) are balanced colorings.
//! Each item lies in exactly one ⊢ and one ⊣ constraint, so constraints and
//! items form a `k`-regular bipartite multigraph, and a proper `k`-edge
//! coloring of it colors every interval.

mod constraints;
mod dewerra;
mod edge_coloring;
mod euler;
mod hypergraph;

use constraints::build_labeled;
pub use constraints::{build_constraints, ActiveSet, Constraint, ConstraintSystem, Item, Occurrences, Side};
pub use dewerra::{k_color_dewerra, k_color_dewerra_from, DeWerraOutcome};
pub use edge_coloring::{edge_color, BipartiteMultigraph, EdgeColoring};
pub use euler::edge_color_euler;
pub use hypergraph::{color_hypergraph, column_spread, hypergraph_to_instance, BinaryMatrix};

use crate::error::{Error, Result};
use crate::interval::{normalize, Coloring, EventKind, Instance};

/// Constraints as vertices, items as edges between their two constraints.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeGraph {
    /// Constraint ids of the ⊢ side, indexed by left vertex.
    pub start_side: Vec<usize>,
    /// Constraint ids of the ⊣ side, indexed by right vertex.
    pub end_side: Vec<usize>,
    /// Item carried by each edge.
    pub items: Vec<Item>,
    pub graph: BipartiteMultigraph,
}

pub fn constraints_to_graph(system: &ConstraintSystem) -> Result<EdgeGraph> {
    let mut local = vec![0usize; system.constraints.len()];
    let mut start_side = Vec::new();
    let mut end_side = Vec::new();
    for c in &system.constraints {
        let list = match c.side {
            Side::Start => &mut start_side,
            Side::End => &mut end_side,
        };
        local[c.id] = list.len();
        list.push(c.id);
    }
    let mut graph = BipartiteMultigraph::new(start_side.len(), end_side.len());
    graph.edges.reserve(start_side.len() * system.k);
    let mut items = Vec::with_capacity(start_side.len() * system.k);
    // edges in sweep order of their ⊢ constraint
    for &s in &start_side {
        for &item in &system.constraints[s].items {
            match system.occurrences.get(item) {
                (Some(_), Some(e)) if system.constraints[e].side == Side::End => {
                    graph.add_edge(local[s], local[e]);
                    items.push(item);
                }
                _ => {
                    return Err(Error::Internal(format!(
                        "{item} does not occur in exactly two constraints"
                    )))
                }
            }
        }
    }
    if items.len() != system.occurrences.items().count() {
        return Err(Error::Internal("an item occurs only in a ⊣ constraint".into()));
    }
    Ok(EdgeGraph {
        start_side,
        end_side,
        items,
        graph,
    })
}

/// Balanced `k`-coloring of `instance`.
pub fn k_color(instance: &Instance) -> Result<Coloring> {
    let k = instance.k();
    let n = instance.len();
    if k == 1 {
        return Ok(Coloring::from_vec(vec![1; n]));
    }
    let norm = normalize(instance);
    // intervals renamed by start order keep the per-item tables sequential
    let mut label = vec![0; n];
    let mut next = 0;
    for e in norm.events() {
        if e.kind == EventKind::Start {
            label[e.interval] = next;
            next += 1;
        }
    }
    let system = build_labeled(&norm, k, |i| label[i])?;
    let edge_graph = constraints_to_graph(&system)?;
    let edge_colors = edge_color_euler(&edge_graph.graph, k)?;
    let mut by_label = vec![0; n];
    for (item, &c) in edge_graph.items.iter().zip(&edge_colors.colors) {
        if let Item::Real(i) = *item {
            by_label[i] = c;
        }
    }
    let colors: Vec<usize> = label.iter().map(|&l| by_label[l]).collect();
    if colors.contains(&0) {
        return Err(Error::Internal("an interval received no color".into()));
    }
    Ok(Coloring::from_vec(colors))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::interval::{imbalance, is_balanced, Coord};
    use Item::{Real, VirtualX as X, VirtualY as Y};

    fn c(s: &str) -> Coord {
        s.parse().unwrap()
    }

    fn system_of(pairs: &[(i64, i64)], k: usize) -> ConstraintSystem {
        let inst = Instance::from_ints(pairs, k).unwrap();
        build_constraints(&normalize(&inst), k).unwrap()
    }

    fn shape(system: &ConstraintSystem) -> Vec<(Vec<Item>, Side)> {
        system.constraints.iter().map(|c| (c.items.clone(), c.side)).collect()
    }

    #[test]
    fn three_starts_form_one_constraint() {
        let inst = Instance::new([(c("0"), c("1")), (c("0.2"), c("1.5")), (c("0.4"), c("2"))], 3).unwrap();
        let system = build_constraints(&normalize(&inst), 3).unwrap();
        assert_eq!(system.constraints[0].items, vec![Real(0), Real(1), Real(2)]);
        assert_eq!(system.constraints[0].side, Side::Start);
        system.check_structure(3).unwrap();
    }

    #[test]
    fn mixed_scan_matches_hand_derivation() {
        // x_i / y_i are zero-based here: X(0) is x1.
        let system = system_of(&[(0, 2), (1, 5), (4, 6)], 3);
        assert_eq!(
            shape(&system),
            vec![
                (vec![Real(0), Real(1), X(0)], Side::Start),
                (vec![Y(0), Real(0), X(0)], Side::End),
                (vec![Y(0), Real(2), X(1)], Side::Start),
                (vec![Y(1), Real(1), X(1)], Side::End),
                (vec![Y(1), X(2), X(3)], Side::Start),
                (vec![Real(2), X(2), X(3)], Side::End),
            ]
        );
        system.check_structure(3).unwrap();
    }

    #[test]
    fn single_interval_k2() {
        let system = system_of(&[(0, 1)], 2);
        assert_eq!(
            shape(&system),
            vec![(vec![Real(0), X(0)], Side::Start), (vec![Real(0), X(0)], Side::End)]
        );
    }

    #[test]
    fn ends_first_branch_mirrors() {
        // After [0,1] and [0,1] start together (k=2 clears), [2,3] ... use nested
        // windows so the root sees an end first.
        let system = system_of(&[(0, 10), (0, 10), (1, 3), (2, 5)], 2);
        system.check_structure(4).unwrap();
        assert!(system
            .constraints
            .iter()
            .any(|c| c.side == Side::End && c.items.iter().all(|i| matches!(i, Real(_)))));
    }

    #[test]
    fn graph_of_single_interval() {
        let g = constraints_to_graph(&system_of(&[(0, 1)], 2)).unwrap();
        assert_eq!((g.graph.left, g.graph.right), (1, 1));
        assert_eq!(g.graph.edges, vec![(0, 0), (0, 0)]);
    }

    #[test]
    fn graph_of_mixed_case_is_three_regular() {
        let g = constraints_to_graph(&system_of(&[(0, 2), (1, 5), (4, 6)], 3)).unwrap();
        assert_eq!(g.graph.left + g.graph.right, 6);
        assert_eq!(g.graph.edges.len(), 9);
        assert!(g.graph.degrees().iter().all(|&d| d == 3));
    }

    #[test]
    fn empty_system_gives_empty_graph() {
        let g = constraints_to_graph(&system_of(&[], 4)).unwrap();
        assert!(g.graph.edges.is_empty());
        assert_eq!(g.graph.left + g.graph.right, 0);
    }

    #[test]
    fn duplicate_side_is_reported() {
        let mut system = system_of(&[(0, 1)], 2);
        system.constraints[1].side = Side::Start;
        assert!(matches!(constraints_to_graph(&system), Err(Error::Internal(_))));
    }

    #[test]
    fn k_color_examples() {
        let inst = Instance::from_ints(&[(0, 2), (1, 5), (4, 6)], 3).unwrap();
        let col = k_color(&inst).unwrap();
        assert!(imbalance(&inst, &col).unwrap().value <= 1);
        assert_ne!(col.colors()[0], col.colors()[1]);
        assert_ne!(col.colors()[1], col.colors()[2]);

        let inst = Instance::from_ints(&[(0, 2), (1, 3), (0, 3)], 2).unwrap();
        assert_eq!(imbalance(&inst, &k_color(&inst).unwrap()).unwrap().value, 1);
    }

    #[test]
    fn single_color() {
        let inst = Instance::from_ints(&[(0, 2), (1, 3), (5, 5)], 1).unwrap();
        let col = k_color(&inst).unwrap();
        assert_eq!(col.colors(), &[1, 1, 1]);
        assert_eq!(imbalance(&inst, &col).unwrap().value, 0);
    }

    #[test]
    fn coinciding_endpoints() {
        let inst = Instance::from_ints(&[(0, 0), (0, 0), (0, 1), (1, 1), (0, 1), (1, 2)], 3).unwrap();
        assert!(is_balanced(&inst, &k_color(&inst).unwrap()).unwrap());
    }
}
