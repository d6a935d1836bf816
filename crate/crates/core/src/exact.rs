//! Exact rank computation over the rationals.
//!
//! Betti numbers and the Euler-Poincare identity must hold as integer
//! identities, so ranks of boundary matrices are computed with arbitrary
//! precision rational arithmetic rather than floating-point elimination.

use nalgebra::DMatrix;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

/// Rank of an integer matrix over the rationals, by Gaussian elimination with
/// `BigRational` entries. An empty matrix has rank zero.
pub fn rational_rank(m: &DMatrix<i64>) -> usize {
    if m.nrows() == 0 || m.ncols() == 0 {
        return 0;
    }
    let mut a: Vec<Vec<BigRational>> = (0..m.nrows())
        .map(|i| {
            (0..m.ncols())
                .map(|j| BigRational::from(BigInt::from(m[(i, j)])))
                .collect()
        })
        .collect();
    let (rows, cols) = (m.nrows(), m.ncols());
    let mut rank = 0;
    let mut pivot_row = 0;
    for col in 0..cols {
        if pivot_row >= rows {
            break;
        }
        // pick the largest-magnitude candidate to keep entries tame
        let pivot = (pivot_row..rows)
            .filter(|&r| !a[r][col].is_zero())
            .max_by(|&x, &y| a[x][col].abs().cmp(&a[y][col].abs()));
        let Some(p) = pivot else { continue };
        a.swap(pivot_row, p);
        let (head, tail) = a.split_at_mut(pivot_row + 1);
        let pivot_vec = &head[pivot_row];
        for row in tail.iter_mut() {
            if row[col].is_zero() {
                continue;
            }
            let factor = &row[col] / &pivot_vec[col];
            for (entry, pivot_entry) in row[col..].iter_mut().zip(&pivot_vec[col..]) {
                *entry -= &factor * pivot_entry;
            }
        }
        pivot_row += 1;
        rank += 1;
    }
    rank
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_of_zero_and_identity() {
        assert_eq!(rational_rank(&DMatrix::zeros(3, 4)), 0);
        assert_eq!(rational_rank(&DMatrix::identity(4, 4)), 4);
    }

    #[test]
    fn rank_of_rank_deficient_matrix() {
        // rows 2 and 3 are multiples of row 1
        let m = DMatrix::from_row_slice(3, 3, &[1, 2, 3, 2, 4, 6, -1, -2, -3]);
        assert_eq!(rational_rank(&m), 1);
    }

    #[test]
    fn rank_survives_entries_that_overflow_naive_elimination() {
        // large entries whose fraction-free combinations exceed i64
        let big = 3_037_000_499i64; // floor(sqrt(i64::MAX))
        let m = DMatrix::from_row_slice(2, 2, &[big, big - 1, big - 1, big]);
        // determinant is big^2 - (big-1)^2 = 2*big - 1 != 0
        assert_eq!(rational_rank(&m), 2);
    }

    #[test]
    fn rank_of_empty_shapes() {
        assert_eq!(rational_rank(&DMatrix::zeros(0, 5)), 0);
        assert_eq!(rational_rank(&DMatrix::zeros(5, 0)), 0);
    }
}
