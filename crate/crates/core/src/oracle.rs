//! Brute-force ground truth: exact ranks over the rationals and exhaustive
//! enumeration of the quadratic invariants.

use std::collections::BTreeMap;

use bitvec::prelude::*;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::algebra::{check_leaf_count, phi_monomial, Binomial, Monomial, ParamVariable};
use crate::error::{Error, Result};
use crate::matrix::IncidenceMatrix;

/// Largest leaf count accepted by [`enumerate_quadratic_kernel`].
pub const ENUMERATION_CAP: usize = 5;

/// A dense matrix of exact rationals.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExactMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigRational>,
}

impl ExactMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![BigRational::zero(); rows * cols],
        }
    }

    pub fn from_integer_rows<T: Copy + Into<i64>>(rows: &[Vec<T>]) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        let mut m = Self::zeros(rows.len(), cols);
        for (r, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), cols, "ragged rows");
            for (c, &x) in row.iter().enumerate() {
                m.data[r * cols + c] = BigRational::from_integer(BigInt::from(x.into()));
            }
        }
        m
    }

    pub fn from_incidence(b: &IncidenceMatrix) -> Self {
        Self::from_integer_rows(&b.to_rows())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &BigRational {
        &self.data[r * self.cols + c]
    }

    /// Keeps only the listed columns, in the given order.
    pub fn select_columns(&self, cols: &[usize]) -> Self {
        let mut m = Self::zeros(self.rows, cols.len());
        for r in 0..self.rows {
            for (k, &c) in cols.iter().enumerate() {
                m.data[r * cols.len() + k] = self.get(r, c).clone();
            }
        }
        m
    }
}

/// Rank over the rationals by Gaussian elimination, pivoting on the first
/// nonzero entry of each column.
pub fn exact_rank(m: &ExactMatrix) -> usize {
    let (rows, cols) = (m.rows, m.cols);
    let mut a = m.data.clone();
    let mut rank = 0;
    for c in 0..cols {
        if rank == rows {
            break;
        }
        let Some(p) = (rank..rows).find(|&r| !a[r * cols + c].is_zero()) else {
            continue;
        };
        if p != rank {
            for k in c..cols {
                a.swap(p * cols + k, rank * cols + k);
            }
        }
        let pivot = a[rank * cols + c].clone();
        for r in rank + 1..rows {
            if a[r * cols + c].is_zero() {
                continue;
            }
            let factor = &a[r * cols + c] / &pivot;
            a[r * cols + c] = BigRational::zero();
            for k in c + 1..cols {
                if !a[rank * cols + k].is_zero() {
                    let delta = &factor * &a[rank * cols + k];
                    a[r * cols + k] -= delta;
                }
            }
        }
        rank += 1;
    }
    rank
}

pub fn nullspace_dimension(m: &ExactMatrix) -> usize {
    m.cols - exact_rank(m)
}

/// Rank over GF(2) of an integer matrix reduced mod 2.
pub fn rank_mod2(rows: &[Vec<i64>]) -> usize {
    let mut work: Vec<BitVec<u64, Lsb0>> = rows
        .iter()
        .map(|r| r.iter().map(|x| x.rem_euclid(2) == 1).collect())
        .collect();
    let cols = work.first().map_or(0, |r| r.len());
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..work.len()).find(|&r| work[r][c]) else {
            continue;
        };
        work.swap(p, rank);
        let (head, tail) = work.split_at_mut(rank + 1);
        let pivot = &head[rank];
        for row in tail.iter_mut().filter(|row| row[c]) {
            *row ^= pivot;
        }
        rank += 1;
    }
    rank
}

/// How full row rank over the rationals was established.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RankWitness {
    /// Rank mod 2 equals the row count; since rank over GF(2) never exceeds
    /// rank over Q for an integer matrix, the rational rank is full too.
    Mod2,
    /// Full rank found by rational elimination.
    Rational,
}

/// Whether the integer rows are linearly independent over the rationals.
/// Returns the witness on success.
pub fn full_row_rank(rows: &[Vec<i64>]) -> Option<RankWitness> {
    if rank_mod2(rows) == rows.len() {
        return Some(RankWitness::Mod2);
    }
    (exact_rank(&ExactMatrix::from_integer_rows(rows)) == rows.len()).then_some(RankWitness::Rational)
}

/// Every quadratic binomial in the kernel of the monomial map, found by
/// grouping all degree-2 monomials (squares included) by their image.
pub fn enumerate_quadratic_kernel(n: usize) -> Result<Vec<Binomial>> {
    check_leaf_count(n, 1, ENUMERATION_CAP)?;
    let mut out = Vec::new();
    for fiber in quadratic_fibers(n)?.values() {
        for (i, a) in fiber.iter().enumerate() {
            for c in &fiber[i + 1..] {
                out.extend(Binomial::new(a.clone(), c.clone())?);
            }
        }
    }
    out.sort_unstable_by(|x, y| y.cmp(x));
    Ok(out)
}

/// Degree-2 monomials grouped by image.
pub fn quadratic_fibers(n: usize) -> Result<BTreeMap<Vec<ParamVariable>, Vec<Monomial>>> {
    check_leaf_count(n, 1, ENUMERATION_CAP)?;
    let vars = 1u32 << n;
    let mut fibers: BTreeMap<Vec<ParamVariable>, Vec<Monomial>> = BTreeMap::new();
    for a in 0..vars {
        for c in a..vars {
            let m = Monomial::pair(n, a, c);
            fibers.entry(phi_monomial(&m)).or_default().push(m);
        }
    }
    Ok(fibers)
}

/// True iff no nonzero rational kernel vector of `b` is supported on a proper
/// subset of the support of `v`, i.e. every proper subset of those columns
/// is linearly independent.
pub fn circuit_support_check(v: &[i64], b: &IncidenceMatrix) -> Result<bool> {
    if v.len() != b.num_cols() {
        return Err(Error::InvalidLatticeRow {
            row: 0,
            reason: format!("length {} instead of {}", v.len(), b.num_cols()),
        });
    }
    let support: Vec<usize> = v.iter().enumerate().filter(|(_, &x)| x != 0).map(|(c, _)| c).collect();
    if support.len() > 16 {
        return Err(Error::InvalidLatticeRow {
            row: 0,
            reason: "support too large for subset enumeration".into(),
        });
    }
    let full = ExactMatrix::from_incidence(b);
    let k = support.len();
    for mask in 1u32..(1 << k) - 1 {
        let cols: Vec<usize> = (0..k).filter(|&i| mask >> i & 1 == 1).map(|i| support[i]).collect();
        if exact_rank(&full.select_columns(&cols)) < cols.len() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Identity matrix, handy for sanity checks.
pub fn identity(size: usize) -> ExactMatrix {
    let mut m = ExactMatrix::zeros(size, size);
    for i in 0..size {
        m.data[i * size + i] = BigRational::one();
    }
    m
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::in_kernel;
    use crate::lattice::LatticeBasis;

    fn incidence(n: usize) -> ExactMatrix {
        ExactMatrix::from_incidence(&IncidenceMatrix::build(n, 16).unwrap())
    }

    #[test]
    fn ranks() {
        assert_eq!(exact_rank(&incidence(2)), 4);
        assert_eq!(exact_rank(&incidence(4)), 6);
        assert_eq!(exact_rank(&ExactMatrix::zeros(3, 5)), 0);
        assert_eq!(exact_rank(&identity(7)), 7);
    }

    #[test]
    fn nullities() {
        assert_eq!(nullspace_dimension(&incidence(3)), 3);
        assert_eq!(nullspace_dimension(&incidence(4)), 10);
        assert_eq!(nullspace_dimension(&incidence(10)), 1012);
    }

    #[test]
    fn rank_grows_by_one_per_leaf() {
        let ranks: Vec<usize> = (2..=10).map(|n| exact_rank(&incidence(n))).collect();
        assert!(ranks.windows(2).all(|w| w[1] == w[0] + 1));
        for (k, r) in ranks.iter().enumerate() {
            assert_eq!(r + nullspace_dimension(&incidence(k + 2)), 1 << (k + 2));
        }
    }

    #[test]
    fn rational_rank_handles_non_integral_pivots() {
        let m = ExactMatrix::from_integer_rows(&[vec![2i64, 4, 6], vec![3, 6, 9], vec![1, 0, 1]]);
        assert_eq!(exact_rank(&m), 2);
    }

    #[test]
    fn mod2_rank_is_a_lower_bound() {
        // Rank 2 over Q, rank 1 over GF(2).
        let rows = vec![vec![1i64, 1], vec![1, -1]];
        assert_eq!(rank_mod2(&rows), 1);
        assert_eq!(full_row_rank(&rows), Some(RankWitness::Rational));
        assert_eq!(full_row_rank(&[vec![1i64, 1], vec![2, 2]]), None);
    }

    #[test]
    fn lattice_rank_agrees_between_routes() {
        for n in 3..=7 {
            let rows = LatticeBasis::build(n, 16).unwrap().to_i64_rows();
            let rational = exact_rank(&ExactMatrix::from_integer_rows(&rows));
            assert_eq!(rational, rows.len(), "n = {n}");
            assert!(full_row_rank(&rows).is_some());
        }
    }

    #[test]
    fn quadratic_kernel_small_cases() {
        assert!(enumerate_quadratic_kernel(2).unwrap().is_empty());
        let three = enumerate_quadratic_kernel(3).unwrap();
        for g in crate::ideal::base_generators().iter() {
            assert!(three.contains(g), "{g}");
        }
        for n in 3..=4 {
            let all = enumerate_quadratic_kernel(n).unwrap();
            assert!(all.iter().all(in_kernel));
            let mut dedup = all.clone();
            dedup.dedup();
            assert_eq!(dedup.len(), all.len());
        }
        assert!(matches!(
            enumerate_quadratic_kernel(6),
            Err(Error::LeafCountOutOfRange { .. })
        ));
    }

    #[test]
    fn circuits() {
        let b3 = IncidenceMatrix::build(3, 16).unwrap();
        for row in LatticeBasis::build(3, 16).unwrap().to_i64_rows() {
            assert!(circuit_support_check(&row, &b3).unwrap());
        }
        let b4 = IncidenceMatrix::build(4, 16).unwrap();
        let l4 = LatticeBasis::build(4, 16).unwrap().to_i64_rows();
        // Rows 0 and 3 share columns 2 and 3; their sum has support 6.
        let combined: Vec<i64> = l4[0].iter().zip(&l4[3]).map(|(a, b)| a + b).collect();
        assert_eq!(combined.iter().filter(|&&x| x != 0).count(), 4 + 2);
        assert!(!circuit_support_check(&combined, &b4).unwrap());
    }
}
