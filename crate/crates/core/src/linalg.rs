//! Exact linear algebra over the integers and rationals.
//!
//! Ranks are computed by fraction-free (Bareiss) Gaussian elimination: every
//! intermediate entry is a minor of the input matrix and the one-step
//! division is exact, so no fractions ever appear. An `i128` fast path covers
//! the sizes arising here; on overflow the computation restarts with
//! arbitrary-precision integers.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;
use rayon::prelude::*;
use std::sync::atomic::{AtomicBool, Ordering};

use crate::rational::Rational;

/// Rank of an integer matrix given as dense rows.
pub fn rank_int(rows: &[Vec<BigInt>]) -> usize {
    if let Some(small) = to_i128(rows) {
        if let Some(r) = rank_i128(small) {
            return r;
        }
    }
    rank_bigint(rows.to_vec())
}

/// Rank of a rational matrix: denominators are cleared rowwise first.
pub fn rank_rational(rows: &[Vec<Rational>]) -> usize {
    rank_int(&clear_denominators(rows))
}

/// A sparse row: `(column, value)` pairs with distinct columns.
pub type SparseRow = Vec<(usize, Rational)>;

/// Rank of a sparse rational matrix.
///
/// Rows touching disjoint column sets form independent blocks; the matrix is
/// split into its connected components first and each block is eliminated
/// densely. Rank is additive across blocks, so this is exactly the rank of
/// the whole matrix, computed without materializing it.
pub fn rank_sparse_rational(rows: &[SparseRow], ncols: usize) -> usize {
    let mut uf = UnionFind::new(ncols);
    for row in rows {
        for pair in row.windows(2) {
            uf.union(pair[0].0, pair[1].0);
        }
    }
    let mut buckets: std::collections::BTreeMap<usize, Vec<&SparseRow>> =
        std::collections::BTreeMap::new();
    for row in rows {
        if let Some(&(first_col, _)) = row.first() {
            buckets.entry(uf.find(first_col)).or_default().push(row);
        }
    }
    let blocks: Vec<Vec<&SparseRow>> = buckets.into_values().collect();
    blocks
        .par_iter()
        .map(|block| {
            let mut col_index: std::collections::BTreeMap<usize, usize> =
                std::collections::BTreeMap::new();
            for row in block {
                for &(c, _) in row.iter() {
                    let next = col_index.len();
                    col_index.entry(c).or_insert(next);
                }
            }
            let dense: Vec<Vec<Rational>> = block
                .iter()
                .map(|row| {
                    let mut out = vec![Rational::zero(); col_index.len()];
                    for &(c, ref v) in row.iter() {
                        out[col_index[&c]] = v.clone();
                    }
                    out
                })
                .collect();
            rank_rational(&dense)
        })
        .sum()
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        Self {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let ra = self.find(a);
        let rb = self.find(b);
        if ra != rb {
            self.parent[ra] = rb;
        }
    }
}

fn to_i128(rows: &[Vec<BigInt>]) -> Option<Vec<Vec<i128>>> {
    rows.iter()
        .map(|r| r.iter().map(|v| i128::try_from(v).ok()).collect())
        .collect()
}

fn clear_denominators(rows: &[Vec<Rational>]) -> Vec<Vec<BigInt>> {
    rows.iter()
        .map(|row| {
            let lcm = row
                .iter()
                .fold(BigInt::from(1), |acc, v| acc.lcm(v.denom()));
            row.iter()
                .map(|v| v.numer() * (&lcm / v.denom()))
                .collect()
        })
        .collect()
}

fn rank_i128(mut m: Vec<Vec<i128>>) -> Option<usize> {
    let nrows = m.len();
    let ncols = m.first().map_or(0, Vec::len);
    let overflow = AtomicBool::new(false);
    let mut rank = 0;
    let mut prev: i128 = 1;
    for col in 0..ncols {
        if rank == nrows {
            break;
        }
        let Some(pivot_row) = (rank..nrows).find(|&i| m[i][col] != 0) else {
            continue;
        };
        m.swap(rank, pivot_row);
        let (pivot_slice, rest) = m.split_at_mut(rank + 1);
        let prow = &pivot_slice[rank];
        let pivot = prow[col];
        rest.par_iter_mut().for_each(|row| {
            if overflow.load(Ordering::Relaxed) {
                return;
            }
            let factor = row[col];
            if factor == 0 && pivot == prev {
                // row * pivot / prev is the identity; nothing to do.
                return;
            }
            for j in col..ncols {
                let a = match pivot.checked_mul(row[j]) {
                    Some(v) => v,
                    None => {
                        overflow.store(true, Ordering::Relaxed);
                        return;
                    }
                };
                let b = match factor.checked_mul(prow[j]) {
                    Some(v) => v,
                    None => {
                        overflow.store(true, Ordering::Relaxed);
                        return;
                    }
                };
                let Some(num) = a.checked_sub(b) else {
                    overflow.store(true, Ordering::Relaxed);
                    return;
                };
                debug_assert_eq!(num % prev, 0, "fraction-free step must divide exactly");
                row[j] = num / prev;
            }
        });
        if overflow.load(Ordering::Relaxed) {
            return None;
        }
        prev = pivot;
        rank += 1;
    }
    Some(rank)
}

fn rank_bigint(mut m: Vec<Vec<BigInt>>) -> usize {
    let nrows = m.len();
    let ncols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    let mut prev = BigInt::from(1);
    for col in 0..ncols {
        if rank == nrows {
            break;
        }
        let Some(pivot_row) = (rank..nrows).find(|&i| !m[i][col].is_zero()) else {
            continue;
        };
        m.swap(rank, pivot_row);
        let (pivot_slice, rest) = m.split_at_mut(rank + 1);
        let prow = &pivot_slice[rank];
        let pivot = prow[col].clone();
        rest.par_iter_mut().for_each(|row| {
            let factor = row[col].clone();
            if factor.is_zero() && pivot == prev {
                return;
            }
            for j in col..ncols {
                let num = &pivot * &row[j] - &factor * &prow[j];
                debug_assert!(
                    (&num % &prev).is_zero(),
                    "fraction-free step must divide exactly"
                );
                row[j] = num / &prev;
            }
        });
        prev = pivot;
        rank += 1;
    }
    rank
}

/// Basis of the solution space `{x : M x = 0}` for a rational matrix whose
/// rows are the linear equations. Returned vectors have length `ncols`.
pub fn kernel_basis(rows: &[Vec<Rational>], ncols: usize) -> Vec<Vec<Rational>> {
    let mut m: Vec<Vec<Rational>> = rows
        .iter()
        .filter(|r| r.iter().any(|v| !v.is_zero()))
        .cloned()
        .collect();
    let nrows = m.len();
    let mut pivot_cols: Vec<usize> = Vec::new();
    let mut rank = 0;
    for col in 0..ncols {
        if rank == nrows {
            break;
        }
        let Some(pivot_row) = (rank..nrows).find(|&i| !m[i][col].is_zero()) else {
            continue;
        };
        m.swap(rank, pivot_row);
        let inv = m[rank][col].clone();
        for v in m[rank].iter_mut() {
            *v = &*v / &inv;
        }
        for i in 0..nrows {
            if i != rank && !m[i][col].is_zero() {
                let f = m[i][col].clone();
                for j in 0..ncols {
                    let delta = &f * &m[rank][j];
                    m[i][j] = &m[i][j] - &delta;
                }
            }
        }
        pivot_cols.push(col);
        rank += 1;
    }
    let pivot_of_col = |c: usize| pivot_cols.iter().position(|&p| p == c);
    let mut basis = Vec::new();
    for free in 0..ncols {
        if pivot_of_col(free).is_some() {
            continue;
        }
        let mut v = vec![Rational::zero(); ncols];
        v[free] = Rational::from_integer(1.into());
        for (r, &pc) in pivot_cols.iter().enumerate() {
            v[pc] = -m[r][free].clone();
        }
        basis.push(v);
    }
    basis
}
