//! Dense linear algebra over the rationals.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

pub type Q = BigRational;

pub fn q(v: i64) -> Q {
    Q::from_integer(BigInt::from(v))
}

/// Row-major rational matrix.
pub type QMat = Vec<Vec<Q>>;

pub fn zeros(rows: usize, cols: usize) -> QMat {
    vec![vec![Q::zero(); cols]; rows]
}

/// Reduced row echelon form in place; returns pivot columns.
#[allow(clippy::needless_range_loop)]
pub fn rref(m: &mut QMat) -> Vec<usize> {
    let rows = m.len();
    if rows == 0 {
        return Vec::new();
    }
    let cols = m[0].len();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = Q::one() / &m[r][c];
        for v in m[r].iter_mut() {
            *v *= &inv;
        }
        for i in 0..rows {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                for j in c..cols {
                    if !m[r][j].is_zero() {
                        let d = &f * &m[r][j];
                        m[i][j] -= d;
                    }
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub fn rank(m: &QMat) -> usize {
    let mut a = m.clone();
    rref(&mut a).len()
}

/// Basis of `{v : m v = 0}` for a matrix with `cols` columns.
pub fn nullspace(m: &QMat, cols: usize) -> Vec<Vec<Q>> {
    let mut a: QMat = m.iter().filter(|r| r.iter().any(|v| !v.is_zero())).cloned().collect();
    let pivots = rref(&mut a);
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![Q::zero(); cols];
            v[f] = Q::one();
            for (row, &pc) in pivots.iter().enumerate() {
                v[pc] = -a[row][f].clone();
            }
            v
        })
        .collect()
}

/// Greedily extends a basis of span(`base`) by vectors of `cands`, returning the
/// indices of the candidates that were added.
pub fn extend_basis(base: &[Vec<Q>], cands: &[Vec<Q>]) -> Vec<usize> {
    let mut current: QMat = base.to_vec();
    let mut r = rank(&current);
    let mut chosen = Vec::new();
    for (i, c) in cands.iter().enumerate() {
        current.push(c.clone());
        let nr = rank(&current);
        if nr > r {
            r = nr;
            chosen.push(i);
        } else {
            current.pop();
        }
    }
    chosen
}

pub fn mat_mul(a: &QMat, b: &QMat, inner: usize, cols: usize) -> QMat {
    let mut out = zeros(a.len(), cols);
    for (i, row) in a.iter().enumerate() {
        for k in 0..inner {
            if row[k].is_zero() {
                continue;
            }
            for j in 0..cols {
                if !b[k][j].is_zero() {
                    out[i][j] += &row[k] * &b[k][j];
                }
            }
        }
    }
    out
}

pub fn is_invertible(m: &QMat) -> bool {
    m.len() == m.first().map_or(0, |r| r.len()) && rank(m) == m.len()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn nullspace_of_small_matrix() {
        let m = vec![vec![q(1), q(2), q(3)], vec![q(2), q(4), q(6)]];
        let ns = nullspace(&m, 3);
        assert_eq!(ns.len(), 2);
        for v in &ns {
            let s: Q = (0..3).map(|i| &m[0][i] * &v[i]).sum();
            assert!(s.is_zero());
        }
        assert_eq!(rank(&m), 1);
    }

    #[test]
    fn empty_constraints_give_full_space() {
        assert_eq!(nullspace(&Vec::new(), 4).len(), 4);
    }

    #[test]
    fn extend_basis_skips_dependent() {
        let base = vec![vec![q(1), q(0)]];
        let c = vec![vec![q(2), q(0)], vec![q(1), q(1)], vec![q(0), q(5)]];
        assert_eq!(extend_basis(&base, &c), vec![1]);
    }
}
