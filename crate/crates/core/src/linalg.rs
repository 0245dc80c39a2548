//! Exact rank of integer matrices.
//!
//! Cohomology dimensions come from ranks of incidence matrices, and the
//! Euler-Poincaré identity is an exact equality, so rank must be exact too:
//! no floating point, no probabilistic shortcuts. The workhorse is Bareiss
//! fraction-free elimination, which stays in integers (every intermediate
//! entry is a minor of the input). A fixed-width `i128` pass handles the
//! overwhelmingly common case where those minors stay small; any overflow
//! restarts the elimination in arbitrary precision.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

/// Dense integer matrix, row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<i64>,
}

impl IntMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        IntMatrix { rows, cols, data: vec![0; rows * cols] }
    }

    /// Build from row vectors; all rows must have equal length.
    pub fn from_rows(rows: Vec<Vec<i64>>) -> Self {
        let ncols = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == ncols), "ragged rows");
        let nrows = rows.len();
        IntMatrix { rows: nrows, cols: ncols, data: rows.into_iter().flatten().collect() }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: i64) {
        self.data[i * self.cols + j] = v;
    }

    /// Exact rank by fraction-free (Bareiss) elimination with full pivoting.
    pub fn rank(&self) -> usize {
        if self.rows == 0 || self.cols == 0 {
            return 0;
        }
        match rank_i128(self) {
            Some(r) => r,
            None => rank_bigint(self),
        }
    }
}

/// One Bareiss step at pivot position `r` on an abstract matrix accessor.
/// Shared shape of the two implementations below; kept duplicated per scalar
/// type because i128 needs checked arithmetic and BigInt needs references.
///
/// Pivot choice: the smallest-magnitude nonzero entry of the remaining
/// submatrix. Bareiss entries are minors of the (permuted) input, so swaps
/// are sound, and small pivots keep growth down.
fn rank_i128(m: &IntMatrix) -> Option<usize> {
    let (rows, cols) = (m.rows, m.cols);
    let mut a: Vec<i128> = m.data.iter().map(|&x| x as i128).collect();
    let at = |a: &[i128], i: usize, j: usize| a[i * cols + j];

    let mut prev: i128 = 1;
    let mut r = 0;
    while r < rows && r < cols {
        // Find the smallest nonzero entry in the submatrix.
        let mut pivot: Option<(usize, usize)> = None;
        for i in r..rows {
            for j in r..cols {
                let v = at(&a, i, j);
                if v != 0 && pivot.is_none_or(|(pi, pj)| v.abs() < at(&a, pi, pj).abs()) {
                    pivot = Some((i, j));
                }
            }
        }
        let Some((pi, pj)) = pivot else { break };
        if pi != r {
            for j in 0..cols {
                a.swap(pi * cols + j, r * cols + j);
            }
        }
        if pj != r {
            for i in 0..rows {
                a.swap(i * cols + pj, i * cols + r);
            }
        }
        let p = at(&a, r, r);
        for i in r + 1..rows {
            let airr = at(&a, i, r);
            for j in r + 1..cols {
                let t1 = at(&a, i, j).checked_mul(p)?;
                let t2 = airr.checked_mul(at(&a, r, j))?;
                // Exact by the Bareiss identity: this is a minor of the input.
                a[i * cols + j] = t1.checked_sub(t2)? / prev;
            }
            a[i * cols + r] = 0;
        }
        prev = p;
        r += 1;
    }
    Some(r)
}

fn rank_bigint(m: &IntMatrix) -> usize {
    let (rows, cols) = (m.rows, m.cols);
    let mut a: Vec<BigInt> = m.data.iter().map(|&x| BigInt::from(x)).collect();

    let mut prev = BigInt::from(1);
    let mut r = 0;
    while r < rows && r < cols {
        let mut pivot: Option<(usize, usize)> = None;
        for i in r..rows {
            for j in r..cols {
                let v = &a[i * cols + j];
                if !v.is_zero()
                    && pivot
                        .is_none_or(|(pi, pj): (usize, usize)| v.abs() < a[pi * cols + pj].abs())
                {
                    pivot = Some((i, j));
                }
            }
        }
        let Some((pi, pj)) = pivot else { break };
        if pi != r {
            for j in 0..cols {
                a.swap(pi * cols + j, r * cols + j);
            }
        }
        if pj != r {
            for i in 0..rows {
                a.swap(i * cols + pj, i * cols + r);
            }
        }
        let p = a[r * cols + r].clone();
        for i in r + 1..rows {
            let airr = a[i * cols + r].clone();
            for j in r + 1..cols {
                let t = &a[i * cols + j] * &p - &airr * &a[r * cols + j];
                a[i * cols + j] = t / &prev;
            }
            a[i * cols + r] = BigInt::zero();
        }
        prev = p;
        r += 1;
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;

    fn identity(n: usize) -> IntMatrix {
        let mut m = IntMatrix::zero(n, n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    #[test]
    fn trivial_ranks() {
        assert_eq!(IntMatrix::zero(0, 5).rank(), 0);
        assert_eq!(IntMatrix::zero(5, 0).rank(), 0);
        assert_eq!(IntMatrix::zero(3, 4).rank(), 0);
        assert_eq!(identity(7).rank(), 7);
    }

    #[test]
    fn dependent_rows_detected() {
        // Third row = first + second; rank 2.
        let m = IntMatrix::from_rows(vec![
            vec![1, 2, 3],
            vec![4, 5, 6],
            vec![5, 7, 9],
        ]);
        assert_eq!(m.rank(), 2);
    }

    #[test]
    fn rank_of_wide_and_tall() {
        let m = IntMatrix::from_rows(vec![vec![2, 4, 6, 8]]);
        assert_eq!(m.rank(), 1);
        let m = IntMatrix::from_rows(vec![vec![1], vec![2], vec![3]]);
        assert_eq!(m.rank(), 1);
    }

    #[test]
    fn path_incidence_rank() {
        // Vertex-edge incidence (signed) of the path 0-1-2-3: rank = n - 1.
        let m = IntMatrix::from_rows(vec![
            vec![-1, 0, 0],
            vec![1, -1, 0],
            vec![0, 1, -1],
            vec![0, 0, 1],
        ]);
        assert_eq!(m.rank(), 3);
    }

    #[test]
    fn overflow_falls_back_to_bigint() {
        // Diagonal of huge values: the trailing Bareiss entries are products
        // of earlier pivots and overflow i128 long before the end.
        let n = 6;
        let mut m = IntMatrix::zero(n, n);
        for i in 0..n {
            m.set(i, i, 9_000_000_000_000_000_000);
        }
        assert!(rank_i128(&m).is_none(), "test should actually exercise the fallback");
        assert_eq!(m.rank(), n);
    }

    #[test]
    fn agreement_between_paths_on_small_matrices() {
        // Deterministic pseudo-random small matrices: both eliminations agree.
        let mut state = 0x9e3779b97f4a7c15u64;
        let mut next = move || {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            (state % 7) as i64 - 3
        };
        for _ in 0..50 {
            let rows = 1 + (next().unsigned_abs() as usize % 6);
            let cols = 1 + (next().unsigned_abs() as usize % 6);
            let mut m = IntMatrix::zero(rows, cols);
            for i in 0..rows {
                for j in 0..cols {
                    m.set(i, j, next());
                }
            }
            assert_eq!(rank_i128(&m), Some(rank_bigint(&m)), "matrix {m:?}");
        }
    }
}
