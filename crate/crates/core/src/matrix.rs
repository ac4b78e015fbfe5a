//! The 0/1 incidence matrix of the parametrization.
//!
//! Rows are labelled `a_0^(1), ..., a_0^(n+1), a_1^(1), ..., a_1^(n+1)` and
//! columns by leaf words in binary-counting order. Entry `(a_g^(i), q_w)` is 1
//! iff `a_g^(i)` divides the image of `q_w`.

use bitvec::prelude::*;

use crate::algebra::{check_leaf_count, phi_variable, LeafWord, ParamVariable};
use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct IncidenceMatrix {
    n: usize,
    rows: Vec<BitVec<u64, Lsb0>>,
}

impl IncidenceMatrix {
    /// Builds the matrix row by row: block pattern for the leaf rows, the
    /// parity rule for the root row, then the complemented lower half.
    pub fn build(n: usize, cap: usize) -> Result<Self> {
        check_leaf_count(n, 2, cap.min(crate::MAX_LEAVES))?;
        let cols = 1usize << n;
        let mut rows = vec![bitvec![u64, Lsb0; 0; cols]; 2 * (n + 1)];
        for k in 1..=n {
            let block = 1usize << (n - k);
            for c in (0..1usize << k).step_by(2) {
                rows[k - 1][c * block..(c + 1) * block].fill(true);
            }
        }
        for j in 0..cols {
            let zeros = (0..n).filter(|&r| rows[r][j]).count();
            if zeros % 2 == n % 2 {
                rows[n].set(j, true);
            }
        }
        for i in 0..=n {
            let complement = !rows[i].clone();
            rows[n + 1 + i] = complement;
        }
        Ok(Self { n, rows })
    }

    /// Builds the matrix entrywise from the images of the coordinates.
    pub fn from_definition(n: usize, cap: usize) -> Result<Self> {
        check_leaf_count(n, 2, cap.min(crate::MAX_LEAVES))?;
        let labels = row_labels(n);
        let mut rows = vec![bitvec![u64, Lsb0; 0; 1 << n]; labels.len()];
        for w in LeafWord::all(n) {
            let image = phi_variable(w);
            for (r, label) in labels.iter().enumerate() {
                if image.contains(label) {
                    rows[r].set(w.binary_value() as usize, true);
                }
            }
        }
        Ok(Self { n, rows })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn num_rows(&self) -> usize {
        self.rows.len()
    }

    pub fn num_cols(&self) -> usize {
        1 << self.n
    }

    pub fn row_labels(&self) -> Vec<ParamVariable> {
        row_labels(self.n)
    }

    pub fn col_labels(&self) -> Vec<LeafWord> {
        LeafWord::all(self.n).collect()
    }

    /// Row index of `a_g^(position)`, 0-based.
    pub fn row_index(&self, g: u8, position: usize) -> usize {
        usize::from(g) * (self.n + 1) + position - 1
    }

    pub fn entry(&self, row: usize, col: usize) -> bool {
        self.rows[row][col]
    }

    pub fn row(&self, row: usize) -> &BitSlice<u64, Lsb0> {
        &self.rows[row]
    }

    pub fn to_rows(&self) -> Vec<Vec<u8>> {
        self.rows
            .iter()
            .map(|r| r.iter().map(|b| u8::from(*b)).collect())
            .collect()
    }

    /// Flips one entry; used to produce perturbed matrices.
    pub fn flip(&mut self, row: usize, col: usize) {
        let v = self.rows[row][col];
        self.rows[row].set(col, !v);
    }

    /// Drops the two rows of `leaf` and keeps the columns whose word is 0 at
    /// that leaf. The result is the matrix for `n - 1` leaves.
    pub fn extract_submatrix(&self, leaf: usize) -> Result<Self> {
        check_leaf_count(self.n, 3, crate::MAX_LEAVES)?;
        if !(1..=self.n).contains(&leaf) {
            return Err(Error::PositionOutOfRange {
                position: leaf,
                max: self.n,
            });
        }
        let keep: Vec<usize> = LeafWord::all(self.n)
            .filter(|w| w.bit(leaf) == 0)
            .map(|w| w.binary_value() as usize)
            .collect();
        let drop = [self.row_index(0, leaf), self.row_index(1, leaf)];
        let rows = self
            .rows
            .iter()
            .enumerate()
            .filter(|(r, _)| !drop.contains(r))
            .map(|(_, row)| keep.iter().map(|&c| row[c]).collect())
            .collect();
        Ok(Self { n: self.n - 1, rows })
    }

    /// For every position, the rows of `a_0` and `a_1` add up to the all-ones row.
    pub fn row_sum_identity(&self) -> bool {
        if self.rows.len() != 2 * (self.n + 1) {
            return false;
        }
        (0..=self.n).all(|i| {
            let (zero, one) = (&self.rows[i], &self.rows[self.n + 1 + i]);
            zero.len() == one.len() && zero.iter().zip(one.iter()).all(|(a, b)| *a != *b)
        })
    }

    pub fn column_sums(&self) -> Vec<usize> {
        (0..self.num_cols())
            .map(|c| self.rows.iter().filter(|r| r[c]).count())
            .collect()
    }

    /// `B * v` over the integers.
    pub fn mul_vec(&self, v: &[i64]) -> Vec<i64> {
        assert_eq!(v.len(), self.num_cols(), "vector length must match column count");
        self.rows.iter().map(|r| r.iter_ones().map(|c| v[c]).sum()).collect()
    }
}

fn row_labels(n: usize) -> Vec<ParamVariable> {
    (0..=1u8)
        .flat_map(|g| (1..=n + 1).map(move |i| ParamVariable::new(g, i)))
        .collect()
}
