//! A basis of the integer kernel of the incidence matrix, built recursively
//! from the three-leaf seed, and the binomials it defines.

use rayon::prelude::*;

use crate::algebra::{check_leaf_count, Binomial, LeafWord, Monomial};
use crate::error::{Error, Result};
use crate::matrix::IncidenceMatrix;

/// Seed basis for three leaves.
pub const SEED: [[i8; 8]; 3] = [
    [0, 0, 1, -1, -1, 1, 0, 0],
    [0, 1, 0, -1, -1, 0, 1, 0],
    [1, 0, 0, -1, -1, 0, 0, 1],
];

/// Kernel vector placed in the last eight columns of every basis.
pub const TAIL: [i8; 8] = [1, 0, 0, -1, -1, 0, 0, 1];

/// Number of basis vectors, `2^n - n - 2`.
pub fn basis_size(n: usize) -> usize {
    (1usize << n) - n - 2
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LatticeBasis {
    n: usize,
    rows: Vec<Vec<i8>>,
}

impl LatticeBasis {
    /// Lifts the seed one leaf at a time. Every produced row is checked
    /// against the incidence matrix of its leaf count.
    pub fn build(n: usize, cap: usize) -> Result<Self> {
        check_leaf_count(n, 3, cap.min(crate::MAX_LEAVES))?;
        let mut basis = Self {
            n: 3,
            rows: SEED.iter().map(|r| r.to_vec()).collect(),
        };
        basis.validate()?;
        for _ in 4..=n {
            basis = basis.lift();
            basis.validate()?;
        }
        Ok(basis)
    }

    /// Wraps explicit rows after checking every basis invariant except
    /// linear independence.
    pub fn from_rows(n: usize, rows: Vec<Vec<i8>>) -> Result<Self> {
        check_leaf_count(n, 3, crate::MAX_LEAVES)?;
        let basis = Self { n, rows };
        basis.validate()?;
        Ok(basis)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn rows(&self) -> &[Vec<i8>] {
        &self.rows
    }

    pub fn col_labels(&self) -> Vec<LeafWord> {
        LeafWord::all(self.n).collect()
    }

    /// Builds the basis for `self.n + 1` leaves.
    #[allow(clippy::needless_range_loop)]
    fn lift(&self) -> Self {
        let k = self.n + 1;
        let prev = &self.rows;
        let prev_len = basis_size(k - 1);
        debug_assert_eq!(prev.len(), prev_len);
        let cols: Vec<Vec<usize>> = (0..=k)
            .map(|i| if i == 0 { Vec::new() } else { zero_columns(k, i) })
            .collect();
        let width = 1usize << k;
        let mut rows = vec![vec![0i8; width]; basis_size(k)];
        let place = |dst: &mut Vec<i8>, src: &[i8], cols: &[usize]| {
            for (&c, &x) in cols.iter().zip(src) {
                dst[c] = x;
            }
        };

        // 1-based indices below follow the recursive construction literally.
        for j in 1..=prev_len {
            place(&mut rows[j - 1], &prev[j - 1], &cols[1]);
        }
        let second = (1usize << (k - 2)) - 1;
        for j in 1..=second {
            place(&mut rows[prev_len + j - 1], &prev[prev_len - second + j - 1], &cols[2]);
        }
        for i in 3..=k {
            let offset = (1usize << k) - (1usize << (k + 1 - i)) - k - 2;
            let count = 1usize << (k - i);
            for j in 1..=count {
                place(&mut rows[offset + j - 1], &prev[prev_len - count + j - 1], &cols[i]);
            }
        }
        let last = rows.len() - 1;
        rows[last][width - 8..].copy_from_slice(&TAIL);
        Self { n: k, rows }
    }

    fn validate(&self) -> Result<()> {
        let b = IncidenceMatrix::build(self.n, crate::MAX_LEAVES)?;
        self.rows.par_iter().enumerate().try_for_each(|(r, row)| {
            check_row_shape(self.n, r, row)?;
            let v: Vec<i64> = row.iter().map(|&x| i64::from(x)).collect();
            if b.mul_vec(&v).iter().any(|&x| x != 0) {
                return Err(Error::KernelViolation { row: r });
            }
            Ok(())
        })
    }

    /// Rows widened to `i64` for exact arithmetic.
    pub fn to_i64_rows(&self) -> Vec<Vec<i64>> {
        self.rows
            .iter()
            .map(|r| r.iter().map(|&x| i64::from(x)).collect())
            .collect()
    }
}

/// Columns (0-based, ascending) whose word has 0 at leaf `position`.
pub fn zero_columns(n: usize, position: usize) -> Vec<usize> {
    LeafWord::all(n)
        .filter(|w| w.bit(position) == 0)
        .map(|w| w.binary_value() as usize)
        .collect()
}

fn check_row_shape(n: usize, r: usize, row: &[i8]) -> Result<()> {
    let invalid = |reason: String| Err(Error::InvalidLatticeRow { row: r, reason });
    if row.len() != 1 << n {
        return invalid(format!("length {} instead of {}", row.len(), 1 << n));
    }
    if row.iter().any(|&x| !(-1..=1).contains(&x)) {
        return invalid("entry outside {-1, 0, 1}".into());
    }
    let pos = row.iter().filter(|&&x| x == 1).count();
    let neg = row.iter().filter(|&&x| x == -1).count();
    if pos != 2 || neg != 2 {
        return invalid(format!("{pos} entries +1 and {neg} entries -1, expected 2 and 2"));
    }
    Ok(())
}

/// The quadratic binomial of one lattice row: `+1` columns give the first
/// term, `-1` columns the second.
pub fn row_binomial(n: usize, index: usize, row: &[i8]) -> Result<Binomial> {
    check_row_shape(n, index, row)?;
    let side = |sign: i8| {
        let words = row
            .iter()
            .enumerate()
            .filter(move |(_, &x)| x == sign)
            .map(|(c, _)| LeafWord::from_raw(n, c as u32));
        Monomial::new(n, words)
    };
    Binomial::new(side(1)?, side(-1)?)?.ok_or_else(|| Error::InvalidLatticeRow {
        row: index,
        reason: "both terms coincide".into(),
    })
}

/// Generators of the lattice basis ideal, in row order.
pub fn lattice_binomials(basis: &LatticeBasis) -> Result<Vec<Binomial>> {
    basis
        .rows()
        .iter()
        .enumerate()
        .map(|(i, row)| row_binomial(basis.n(), i, row))
        .collect()
}
