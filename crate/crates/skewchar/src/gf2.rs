//! Linear algebra over the field of two elements.
//!
//! Rows are packed into single `u64` words (every cap in this crate keeps matrices
//! far below 64 columns), so elimination steps are word-parallel XORs. Rank is the
//! inner loop of the 2^n subset sums in the graph module, which is why this module
//! exists instead of a generic matrix crate.

use crate::error::{Error, Result};

pub const MAX_DIM: usize = 64;

/// Square bit matrix over GF(2). Adjacency matrices of simple graphs are symmetric
/// with zero diagonal, but the type itself accepts any square bit pattern.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Gf2Matrix {
    n: usize,
    rows: Vec<u64>,
}

impl Gf2Matrix {
    pub fn new(n: usize, rows: Vec<u64>) -> Result<Self> {
        if n > MAX_DIM {
            return Err(Error::CapExceeded {
                what: "GF(2) matrix dimension",
                value: n,
                cap: MAX_DIM,
            });
        }
        if rows.len() != n {
            return Err(Error::invalid(format!(
                "expected {n} rows, got {}",
                rows.len()
            )));
        }
        let mask = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
        if rows.iter().any(|r| r & !mask != 0) {
            return Err(Error::invalid("row has bits beyond the matrix dimension"));
        }
        Ok(Gf2Matrix { n, rows })
    }

    pub fn zero(n: usize) -> Self {
        Gf2Matrix {
            n,
            rows: vec![0; n],
        }
    }

    pub fn identity(n: usize) -> Self {
        Gf2Matrix {
            n,
            rows: (0..n).map(|i| 1u64 << i).collect(),
        }
    }

    pub fn from_fn(n: usize, f: impl Fn(usize, usize) -> bool) -> Self {
        let rows = (0..n)
            .map(|i| {
                (0..n)
                    .filter(|&j| f(i, j))
                    .fold(0u64, |acc, j| acc | (1 << j))
            })
            .collect();
        Gf2Matrix { n, rows }
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> bool {
        (self.rows[i] >> j) & 1 == 1
    }

    pub fn rows(&self) -> &[u64] {
        &self.rows
    }

    /// Rank over GF(2) by Gaussian elimination on packed rows.
    pub fn rank(&self) -> usize {
        rank_of_rows(&mut self.rows.clone(), self.n)
    }

    pub fn corank(&self) -> usize {
        self.n - self.rank()
    }

    /// A matrix is nondegenerate when it has full rank; the 0x0 matrix counts as
    /// nondegenerate (empty determinant is 1).
    pub fn is_nondegenerate(&self) -> bool {
        self.rank() == self.n
    }
}

/// Rank of `rows[..k]` treated as a k-dimensional GF(2) matrix. Destroys `rows`.
pub(crate) fn rank_of_rows(rows: &mut [u64], k: usize) -> usize {
    let mut rank = 0;
    for col in 0..k {
        let bit = 1u64 << col;
        let Some(pivot) = (rank..k).find(|&r| rows[r] & bit != 0) else {
            continue;
        };
        rows.swap(rank, pivot);
        let pivot_row = rows[rank];
        for row in rows.iter_mut().take(k).skip(rank + 1) {
            if *row & bit != 0 {
                *row ^= pivot_row;
            }
        }
        rank += 1;
        if rank == k {
            break;
        }
    }
    rank
}

/// Rank of the submatrix of `adj` induced by the bits of `mask`. `scratch` must have
/// room for the submatrix rows; this is the hot path of the subset sums.
pub(crate) fn induced_rank(adj: &[u64], mask: u64, scratch: &mut [u64]) -> usize {
    let mut k = 0;
    let mut bits = mask;
    while bits != 0 {
        let i = bits.trailing_zeros() as usize;
        bits &= bits - 1;
        // Compress row i to the columns selected by mask.
        let mut row = adj[i] & mask;
        let mut packed = 0u64;
        let mut out = 0;
        while row != 0 {
            let j = row.trailing_zeros();
            row &= row - 1;
            // Position of column j within mask.
            let below = mask & ((1u64 << j) - 1);
            let pos = below.count_ones();
            packed |= 1u64 << pos;
            out += 1;
            let _ = out;
        }
        scratch[k] = packed;
        k += 1;
    }
    rank_of_rows(&mut scratch[..k], k)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn complete(n: usize) -> Gf2Matrix {
        Gf2Matrix::from_fn(n, |i, j| i != j)
    }

    fn cycle(n: usize) -> Gf2Matrix {
        Gf2Matrix::from_fn(n, |i, j| (i + 1) % n == j || (j + 1) % n == i)
    }

    #[test]
    fn rank_examples() {
        assert_eq!(Gf2Matrix::identity(4).rank(), 4);
        // K3 has rank 2, corank 1.
        assert_eq!(complete(3).rank(), 2);
        assert_eq!(complete(3).corank(), 1);
        // The 4-cycle has rank 2.
        assert_eq!(cycle(4).rank(), 2);
    }

    #[test]
    fn nondegeneracy_examples() {
        assert!(complete(2).is_nondegenerate());
        for n in [1, 3, 5, 7] {
            assert!(!complete(n).is_nondegenerate(), "odd n = {n}");
        }
        assert!(!cycle(4).is_nondegenerate());
        // Empty matrix is nondegenerate.
        assert!(Gf2Matrix::zero(0).is_nondegenerate());
    }

    #[test]
    fn induced_rank_matches_explicit_submatrix() {
        let m = complete(5);
        let mut scratch = [0u64; 8];
        // {0,2,4} induces K3.
        let mask = 0b10101u64;
        assert_eq!(induced_rank(m.rows(), mask, &mut scratch), 2);
        assert_eq!(induced_rank(m.rows(), 0, &mut scratch), 0);
        assert_eq!(induced_rank(m.rows(), 0b11, &mut scratch), 2);
    }

    fn arb_sym_matrix() -> impl Strategy<Value = Gf2Matrix> {
        (1usize..9).prop_flat_map(|n| {
            proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
                let mut k = 0;
                let mut edges = vec![vec![false; n]; n];
                for i in 0..n {
                    for j in (i + 1)..n {
                        edges[i][j] = bits[k];
                        edges[j][i] = bits[k];
                        k += 1;
                    }
                }
                Gf2Matrix::from_fn(n, |i, j| edges[i][j])
            })
        })
    }

    proptest! {
        // Alternating forms have even rank: over GF(2) a symmetric zero-diagonal
        // matrix is alternating.
        #[test]
        fn symmetric_zero_diagonal_rank_is_even(m in arb_sym_matrix()) {
            prop_assert_eq!(m.rank() % 2, 0);
        }

        #[test]
        fn rank_invariant_under_permutation(m in arb_sym_matrix(), seed in any::<u64>()) {
            let n = m.dim();
            let mut perm: Vec<usize> = (0..n).collect();
            // Cheap seeded shuffle.
            let mut state = seed | 1;
            for i in (1..n).rev() {
                state = state.wrapping_mul(6364136223846793005).wrapping_add(1);
                let j = (state >> 33) as usize % (i + 1);
                perm.swap(i, j);
            }
            let permuted = Gf2Matrix::from_fn(n, |i, j| m.get(perm[i], perm[j]));
            prop_assert_eq!(permuted.rank(), m.rank());
        }
    }
}
