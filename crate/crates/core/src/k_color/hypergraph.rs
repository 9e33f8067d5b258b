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

//! Hypergraphs whose incidence matrix has consecutive ones in every row.

use crate::error::{Error, Result};
use crate::interval::{Coloring, Coord, Instance};

use super::k_color;

/// Dense 0/1 matrix; rows are vertices, columns are hyperedges.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BinaryMatrix {
    rows: usize,
    cols: usize,
    data: Vec<bool>,
}

impl BinaryMatrix {
    pub fn new(rows: usize, cols: usize, data: Vec<bool>) -> Result<BinaryMatrix> {
        if data.len() != rows * cols {
            return Err(Error::LengthMismatch {
                expected: rows * cols,
                got: data.len(),
            });
        }
        Ok(BinaryMatrix { rows, cols, data })
    }

    pub fn from_rows(rows: &[Vec<bool>]) -> Result<BinaryMatrix> {
        let cols = rows.first().map_or(0, Vec::len);
        if let Some(bad) = rows.iter().find(|r| r.len() != cols) {
            return Err(Error::LengthMismatch {
                expected: cols,
                got: bad.len(),
            });
        }
        BinaryMatrix::new(rows.len(), cols, rows.concat())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, r: usize) -> &[bool] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn get(&self, r: usize, c: usize) -> bool {
        self.data[r * self.cols + c]
    }

    /// First and last 1-column of row `r` (0-based), if the row is nonzero
    /// and its ones are contiguous.
    fn span(&self, r: usize) -> Result<Option<(usize, usize)>> {
        let row = self.row(r);
        let Some(first) = row.iter().position(|&b| b) else {
            return Ok(None);
        };
        let last = row.iter().rposition(|&b| b).unwrap_or(first);
        if row[first..=last].iter().all(|&b| b) {
            Ok(Some((first, last)))
        } else {
            Err(Error::NotConsecutiveOnes { row: r })
        }
    }
}

/// Row `i` with ones in columns `a..=b` (1-based) becomes `[a, b]`; all-zero
/// rows become distinct points right of column `m`.
pub fn hypergraph_to_instance(matrix: &BinaryMatrix, k: usize) -> Result<Instance> {
    let m = matrix.cols() as i64;
    let mut next_dummy = m + 1;
    let mut bounds = Vec::with_capacity(matrix.rows());
    for r in 0..matrix.rows() {
        match matrix.span(r)? {
            Some((a, b)) => bounds.push((Coord::from_int(a as i64 + 1), Coord::from_int(b as i64 + 1))),
            None => {
                bounds.push((Coord::from_int(next_dummy), Coord::from_int(next_dummy)));
                next_dummy += 1;
            }
        }
    }
    Instance::new(bounds, k)
}

/// Balanced `k`-coloring of the rows.
pub fn color_hypergraph(matrix: &BinaryMatrix, k: usize) -> Result<Coloring> {
    k_color(&hypergraph_to_instance(matrix, k)?)
}

/// Largest color-count spread over the hyperedges (columns).
pub fn column_spread(matrix: &BinaryMatrix, coloring: &Coloring, k: usize) -> Result<usize> {
    coloring.check(matrix.rows(), k)?;
    let mut worst = 0;
    let mut counts = vec![0usize; k];
    for c in 0..matrix.cols() {
        counts.iter_mut().for_each(|x| *x = 0);
        for r in 0..matrix.rows() {
            if matrix.get(r, c) {
                counts[coloring.colors()[r] - 1] += 1;
            }
        }
        let spread = counts.iter().max().unwrap() - counts.iter().min().unwrap();
        worst = worst.max(spread);
    }
    Ok(worst)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::interval::min_imbalance_oracle;

    fn matrix(rows: &[&[u8]]) -> BinaryMatrix {
        let rows: Vec<Vec<bool>> = rows.iter().map(|r| r.iter().map(|&b| b == 1).collect()).collect();
        BinaryMatrix::from_rows(&rows).unwrap()
    }

    #[test]
    fn identity_matrix() {
        let m = matrix(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]]);
        let inst = hypergraph_to_instance(&m, 3).unwrap();
        let spans: Vec<(Coord, Coord)> = inst.intervals().iter().map(|i| (i.lo.clone(), i.hi.clone())).collect();
        let expect: Vec<(Coord, Coord)> = (1..=3).map(|i| (Coord::from_int(i), Coord::from_int(i))).collect();
        assert_eq!(spans, expect);
        for colors in [[1, 1, 1], [1, 2, 3], [3, 3, 1]] {
            let c = Coloring::new(colors.to_vec(), 3).unwrap();
            assert!(column_spread(&m, &c, 3).unwrap() <= 1);
        }
    }

    #[test]
    fn overlapping_rows_must_differ() {
        let m = matrix(&[&[1, 1, 0], &[0, 1, 1]]);
        let inst = hypergraph_to_instance(&m, 2).unwrap();
        assert_eq!(inst.intervals()[1].lo, Coord::from_int(2));
        let c = color_hypergraph(&m, 2).unwrap();
        assert_ne!(c.colors()[0], c.colors()[1]);
        assert_eq!(column_spread(&m, &c, 2).unwrap(), 1);
        let (best, _) = min_imbalance_oracle(&inst, 12).unwrap();
        assert_eq!(best, 1);
    }

    #[test]
    fn gap_in_row_is_rejected() {
        let m = matrix(&[&[1, 1, 1], &[1, 0, 1]]);
        assert!(matches!(
            hypergraph_to_instance(&m, 2),
            Err(Error::NotConsecutiveOnes { row: 1 })
        ));
    }

    #[test]
    fn zero_rows_become_disjoint_points() {
        let m = matrix(&[&[0, 0], &[1, 1], &[0, 0]]);
        let inst = hypergraph_to_instance(&m, 2).unwrap();
        assert_eq!(inst.intervals()[0].lo, Coord::from_int(3));
        assert_eq!(inst.intervals()[2].lo, Coord::from_int(4));
        let c = color_hypergraph(&m, 2).unwrap();
        assert_eq!(column_spread(&m, &c, 2).unwrap(), 1);
    }
}
