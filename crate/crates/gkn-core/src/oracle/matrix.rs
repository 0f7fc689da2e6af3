//! Exact rational matrices and fraction-free rank computation.
//!
//! Ranks are computed over the integers: each row is scaled by the least
//! common multiple of its denominators (row scaling preserves rank), then a
//! Bareiss-style fraction-free elimination runs with exact divisions only.

use num_bigint::BigInt;
use num_integer::Integer as _;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// Dense row-major matrix of exact rationals.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigRational>,
}

impl RationalMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![BigRational::zero(); rows * cols],
        }
    }

    pub fn from_rows(rows: Vec<Vec<BigRational>>) -> Self {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == ncols), "ragged rows");
        Self {
            rows: nrows,
            cols: ncols,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, r: usize, c: usize) -> &BigRational {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, value: BigRational) {
        self.data[r * self.cols + c] = value;
    }

    pub fn row(&self, r: usize) -> &[BigRational] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    /// Row-wise denominator clearing; the result has equal rank.
    pub fn to_integer_rows(&self) -> Vec<Vec<BigInt>> {
        (0..self.rows)
            .map(|r| {
                let lcm = self
                    .row(r)
                    .iter()
                    .fold(BigInt::one(), |acc, v| acc.lcm(v.denom()));
                self.row(r)
                    .iter()
                    .map(|v| v.numer() * (&lcm / v.denom()))
                    .collect()
            })
            .collect()
    }
}

/// Rank over the rationals via fraction-free elimination; no rounding anywhere.
pub fn exact_rank(matrix: &RationalMatrix) -> usize {
    bareiss_rank(matrix.to_integer_rows())
}

/// Fraction-free Gaussian elimination (one-step Bareiss). Every division is
/// exact because each intermediate entry is a minor of the input matrix, up
/// to sign.
pub fn bareiss_rank(mut a: Vec<Vec<BigInt>>) -> usize {
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut rank = 0;
    let mut prev = BigInt::one();
    for col in 0..cols {
        if rank == rows {
            break;
        }
        let Some(pivot_row) = (rank..rows).find(|&r| !a[r][col].is_zero()) else {
            continue;
        };
        a.swap(rank, pivot_row);
        let (pivot_rows, rest) = a.split_at_mut(rank + 1);
        let pivot = &pivot_rows[rank];
        for row in rest {
            for j in (col + 1)..cols {
                let num = &pivot[col] * &row[j] - &row[col] * &pivot[j];
                let (q, r) = num.div_rem(&prev);
                debug_assert!(r.is_zero(), "Bareiss division must be exact");
                row[j] = q;
            }
            row[col] = BigInt::zero();
        }
        prev = a[rank][col].clone();
        rank += 1;
    }
    rank
}

#[cfg(test)]
#[allow(clippy::needless_range_loop)]
pub(crate) fn naive_rational_rank(matrix: &RationalMatrix) -> usize {
    let mut a: Vec<Vec<BigRational>> = (0..matrix.rows()).map(|r| matrix.row(r).to_vec()).collect();
    let rows = a.len();
    let cols = matrix.cols();
    let mut rank = 0;
    for col in 0..cols {
        if rank == rows {
            break;
        }
        let Some(pivot_row) = (rank..rows).find(|&r| !a[r][col].is_zero()) else {
            continue;
        };
        a.swap(rank, pivot_row);
        let pivot = a[rank][col].clone();
        for r in (rank + 1)..rows {
            if a[r][col].is_zero() {
                continue;
            }
            let factor = &a[r][col] / &pivot;
            for j in col..cols {
                let delta = &factor * &a[rank][j];
                let updated = &a[r][j] - delta;
                a[r][j] = updated;
            }
        }
        rank += 1;
    }
    rank
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn rat(n: i64) -> BigRational {
        BigRational::from(BigInt::from(n))
    }

    fn rational_matrix(rows: Vec<Vec<i64>>) -> RationalMatrix {
        RationalMatrix::from_rows(
            rows.into_iter()
                .map(|r| r.into_iter().map(rat).collect())
                .collect(),
        )
    }

    #[test]
    fn zero_matrix_has_rank_zero() {
        assert_eq!(exact_rank(&RationalMatrix::zero(4, 5)), 0);
    }

    #[test]
    fn identity_has_full_rank() {
        for n in 1..6 {
            let mut m = RationalMatrix::zero(n, n);
            for i in 0..n {
                m.set(i, i, rat(1));
            }
            assert_eq!(exact_rank(&m), n);
        }
    }

    #[test]
    fn collinear_evaluation_matrix_has_rank_two() {
        // Rows are (x, y, z) evaluated at three collinear points.
        let m = RationalMatrix::from_rows(vec![
            vec![rat(1), rat(0), rat(1)],
            vec![rat(0), rat(1), rat(1)],
            vec![
                BigRational::new(BigInt::from(1), BigInt::from(2)),
                BigRational::new(BigInt::from(1), BigInt::from(2)),
                rat(1),
            ],
        ]);
        assert_eq!(exact_rank(&m), 2);
    }

    #[test]
    fn rank_handles_wide_and_tall_shapes() {
        let wide = rational_matrix(vec![vec![1, 2, 3, 4], vec![2, 4, 6, 8]]);
        assert_eq!(exact_rank(&wide), 1);
        let tall = rational_matrix(vec![vec![1, 0], vec![0, 1], vec![1, 1], vec![2, 3]]);
        assert_eq!(exact_rank(&tall), 2);
    }

    #[test]
    fn denominators_are_cleared_rowwise() {
        let m = RationalMatrix::from_rows(vec![vec![
            BigRational::new(BigInt::from(1), BigInt::from(2)),
            BigRational::new(BigInt::from(1), BigInt::from(3)),
        ]]);
        let ints = m.to_integer_rows();
        assert_eq!(ints, vec![vec![BigInt::from(3), BigInt::from(2)]]);
    }

    proptest! {
        // Bareiss agrees with plain rational elimination on small matrices.
        #[test]
        fn bareiss_matches_naive(rows in 1usize..=8, cols in 1usize..=8, seed in any::<u64>()) {
            use rand::{Rng, SeedableRng};
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
            let data: Vec<Vec<BigRational>> = (0..rows)
                .map(|_| (0..cols).map(|_| rat(rng.gen_range(-9..=9))).collect())
                .collect();
            let m = RationalMatrix::from_rows(data);
            prop_assert_eq!(exact_rank(&m), naive_rational_rank(&m));
        }
    }
}
