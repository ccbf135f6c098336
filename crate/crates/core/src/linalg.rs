//! Exact linear algebra: fraction-free ranks and sparse echelon forms.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::scalar::Scalar;

/// Clears denominators row by row.
fn integer_rows<S: Scalar>(rows: &[Vec<S>]) -> Vec<Vec<BigInt>> {
    rows.iter()
        .map(|row| {
            let fr: Vec<(BigInt, BigInt)> = row.iter().map(Scalar::to_fraction).collect();
            let l = fr.iter().fold(BigInt::one(), |acc, (_, d)| acc.lcm(d));
            fr.into_iter().map(|(n, d)| n * (&l / d)).collect()
        })
        .collect()
}

/// Rank of an integer matrix by Bareiss elimination.
pub fn rank_bigint(mut m: Vec<Vec<BigInt>>) -> usize {
    let rows = m.len();
    if rows == 0 {
        return 0;
    }
    let cols = m[0].len();
    let mut prev = BigInt::one();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        for i in r + 1..rows {
            for j in c + 1..cols {
                let v = &m[r][c] * &m[i][j] - &m[i][c] * &m[r][j];
                m[i][j] = v / &prev;
            }
            m[i][c] = BigInt::zero();
        }
        prev = m[r][c].clone();
        r += 1;
    }
    r
}

/// Rank of a dense matrix over an exact field.
pub fn rank<S: Scalar>(rows: &[Vec<S>]) -> usize {
    rank_bigint(integer_rows(rows))
}

/// Rank of sparse rows given as column maps.
pub fn rank_sparse<S: Scalar>(rows: &[BTreeMap<usize, S>]) -> usize {
    let mut e = SparseEchelon::new();
    for r in rows {
        e.insert(r.clone());
    }
    e.rank()
}

pub type SparseVec<S> = BTreeMap<usize, S>;

/// Incremental row echelon form over a field. Each stored row has its
/// smallest column as a pivot with coefficient one.
#[derive(Clone, Debug, Default)]
pub struct SparseEchelon<S: Scalar> {
    pivots: BTreeMap<usize, SparseVec<S>>,
}

impl<S: Scalar> SparseEchelon<S> {
    pub fn new() -> Self {
        SparseEchelon { pivots: BTreeMap::new() }
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    pub fn pivot_columns(&self) -> impl Iterator<Item = &usize> {
        self.pivots.keys()
    }

    pub fn is_pivot(&self, c: usize) -> bool {
        self.pivots.contains_key(&c)
    }

    /// Residual after eliminating every pivot column.
    pub fn reduce(&self, mut v: SparseVec<S>) -> SparseVec<S> {
        let mut cursor = 0usize;
        loop {
            let next = v.range(cursor..).map(|(&c, _)| c).find(|c| self.pivots.contains_key(c));
            let Some(c) = next else { break };
            let coef = v.remove(&c).expect("present");
            for (&j, a) in self.pivots[&c].iter().skip(1) {
                let e = v.entry(j).or_insert_with(S::zero);
                *e = e.clone() - coef.clone() * a.clone();
                if e.is_zero() {
                    v.remove(&j);
                }
            }
            cursor = c + 1;
        }
        v
    }

    /// Adds a row; returns its pivot column if it was independent.
    pub fn insert(&mut self, v: SparseVec<S>) -> Option<usize> {
        let r = self.reduce(v);
        let (&c, lead) = r.iter().next()?;
        let inv = S::one() / lead.clone();
        let row: SparseVec<S> = r.iter().map(|(&j, a)| (j, a.clone() * inv.clone())).collect();
        self.pivots.insert(c, row);
        Some(c)
    }

    pub fn contains(&self, v: SparseVec<S>) -> bool {
        self.reduce(v).is_empty()
    }
}

/// Dense matrix product.
pub fn mat_mul<S: Scalar>(a: &[Vec<S>], b: &[Vec<S>]) -> Vec<Vec<S>> {
    let m = b.first().map(Vec::len).unwrap_or(0);
    a.iter()
        .map(|row| {
            (0..m)
                .map(|j| {
                    row.iter()
                        .zip(b)
                        .fold(S::zero(), |acc, (x, brow)| acc + x.clone() * brow[j].clone())
                })
                .collect()
        })
        .collect()
}

/// Dimension of the generalised eigenspace of `m` for `mu`.
pub fn generalized_eigenspace_dim<S: Scalar>(m: &[Vec<S>], mu: &S) -> usize {
    let d = m.len();
    let shifted: Vec<Vec<S>> = (0..d)
        .map(|i| {
            (0..d)
                .map(|j| if i == j { m[i][j].clone() - mu.clone() } else { m[i][j].clone() })
                .collect()
        })
        .collect();
    let mut p = shifted.clone();
    for _ in 1..d {
        p = mat_mul(&p, &shifted);
    }
    d - rank(&p)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Rat;

    fn r(v: i64) -> Rat {
        Rat::from_int(v)
    }

    #[test]
    fn ranks() {
        let m = vec![vec![r(1), r(2), r(3)], vec![r(2), r(4), r(6)], vec![r(1), r(0), r(1)]];
        assert_eq!(rank(&m), 2);
        let half = Rat::new(1.into(), 2.into());
        let m = vec![vec![half.clone(), r(1)], vec![r(1), r(2)]];
        assert_eq!(rank(&m), 1);
        assert_eq!(rank::<Rat>(&[]), 0);
    }

    #[test]
    fn echelon_membership() {
        let mut e = SparseEchelon::<Rat>::new();
        let v1: SparseVec<Rat> = [(0, r(1)), (2, r(1))].into_iter().collect();
        let v2: SparseVec<Rat> = [(1, r(1)), (2, r(-1))].into_iter().collect();
        assert!(e.insert(v1.clone()).is_some());
        assert!(e.insert(v2.clone()).is_some());
        let sum: SparseVec<Rat> = [(0, r(2)), (1, r(3)), (2, r(-1))].into_iter().collect();
        assert!(e.contains(sum.clone()));
        assert!(e.insert(sum).is_none());
        let other: SparseVec<Rat> = [(2, r(1))].into_iter().collect();
        assert!(!e.contains(other));
    }

    #[test]
    fn eigenspace() {
        let m = vec![vec![r(2), r(1)], vec![r(0), r(2)]];
        assert_eq!(generalized_eigenspace_dim(&m, &r(2)), 2);
        assert_eq!(generalized_eigenspace_dim(&m, &r(1)), 0);
    }
}
