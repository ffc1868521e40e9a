//! Matrix representations: decategorified action matrices, the LKB
//! representation, identification matrices and the monomial representation.
//!
//! Rows and columns are indexed by roots `(i, j)` in lexicographic order and
//! columns hold images of basis vectors.

use crate::braid::{apply_word, BraidWord};
use crate::complex::ProjComplex;
use crate::error::{Error, Result};
use crate::ring::{xy_to_qt, LaurentQT, LaurentXY, MatrixQT, MatrixXY};
use crate::stability::{root_index, roots, Root, StableBasis};

fn xy(c: i64, a: i32, b: i32) -> LaurentXY {
    LaurentXY::monomial(c, a, b)
}

fn qt(c: i64, q: i32, t: i32) -> LaurentQT {
    LaurentQT::monomial(c, q, t)
}

/// `1 - x^-1`.
pub fn alpha() -> LaurentXY {
    &xy(1, 0, 0) - &xy(1, -1, 0)
}

pub fn dim(n: usize) -> usize {
    n * (n + 1) / 2
}

fn check_gen(n: usize, k: usize) -> Result<()> {
    if n < 2 || k == 0 || k > n {
        return Err(Error::Vertex { vertex: k, n });
    }
    Ok(())
}

/// Image of `e_ij` under the LKB generator `s_k`, as `(root, coefficient)` terms.
pub fn lkb_column(k: usize, i: usize, j: usize) -> Vec<(Root, LaurentXY)> {
    let x = xy(1, 1, 0);
    let one_minus_x = &xy(1, 0, 0) - &x;
    let xm1 = &x - &xy(1, 0, 0);
    let kk = (k, k + 1);
    if k + 1 == i {
        vec![((i - 1, j), x), ((i, j), one_minus_x)]
    } else if k == i && i < j - 1 {
        vec![((i + 1, j), xy(1, 0, 0)), (kk, -(&xy(1, 1, 1) * &xm1))]
    } else if k == i && i == j - 1 {
        vec![(kk, xy(-1, 2, 1))]
    } else if i < k && k < j - 1 {
        vec![((i, j), xy(1, 0, 0)), (kk, -(&xy(1, 0, 1) * &(&xm1 * &xm1)))]
    } else if i < j - 1 && j - 1 == k {
        vec![((i, j - 1), xy(1, 0, 0)), (kk, -(&xy(1, 1, 1) * &xm1))]
    } else if k == j {
        vec![((i, j + 1), x), ((i, j), one_minus_x)]
    } else {
        vec![((i, j), xy(1, 0, 0))]
    }
}

fn matrix_from_columns<V: crate::ring::Vars>(
    n: usize,
    col: impl Fn(Root) -> Vec<(Root, crate::ring::Laurent2<V>)>,
) -> crate::ring::Matrix<crate::ring::Laurent2<V>> {
    let d = dim(n);
    let mut m = crate::ring::Matrix::zeros(d, d);
    for (c, r) in roots(n).into_iter().enumerate() {
        for (tgt, v) in col(r) {
            m.add_to(root_index(n, tgt), c, &v);
        }
    }
    m
}

/// LKB matrix of `s_k^sign`.
pub fn lkb_generator(n: usize, k: usize, sign: i8) -> Result<MatrixXY> {
    check_gen(n, k)?;
    let m = matrix_from_columns(n, |(i, j)| lkb_column(k, i, j));
    if sign > 0 {
        Ok(m)
    } else {
        m.inverse()
    }
}

/// Product of generator matrices; consistent with the rightmost letter acting first.
pub fn lkb_word(w: &BraidWord) -> Result<MatrixXY> {
    let n = w.n();
    let mut out = MatrixXY::identity(dim(n));
    for &(k, s) in w.letters() {
        out = out.mul(&lkb_generator(n, k, s)?)?;
    }
    Ok(out)
}

/// Closed form of the LKB matrix of `s_n ... s_1`.
pub fn gamma_lkb_closed_form(n: usize) -> MatrixXY {
    let n32 = n as i32;
    let xm1 = &xy(1, 1, 0) - &xy(1, 0, 0);
    let xm1sq = &xm1 * &xm1;
    matrix_from_columns(n, |(i, j)| {
        if i > 1 {
            return vec![((i - 1, j - 1), xy(1, 1, 0))];
        }
        let mut out = Vec::new();
        for r in 1..=j.saturating_sub(2) {
            for s in r + 1..=n {
                out.push(((r, s), &xm1sq * &xy(1, (s - r) as i32, 1)));
            }
            out.push(((r, n + 1), -(&xm1 * &xy(1, n32 + 1 - r as i32, 1))));
        }
        out.push(((j - 1, n + 1), xy(-1, n32 - j as i32 + 3, 1)));
        for s in j..=n {
            out.push(((j - 1, s), &xm1 * &xy(1, (s - j) as i32 + 2, 1)));
        }
        out
    })
}

/// Image of `e_12` under `s_n ... s_1`: `-x^(n+1) y e_(1,n+1) + sum_s x^s y (x-1) e_(1,s)`.
pub fn gamma_lkb_e12(n: usize) -> Vec<LaurentXY> {
    let xm1 = &xy(1, 1, 0) - &xy(1, 0, 0);
    let mut v = vec![LaurentXY::zero(); dim(n)];
    v[root_index(n, (1, n + 1))] = xy(-1, n as i32 + 1, 1);
    for s in 2..=n {
        v[root_index(n, (1, s))] = &xm1 * &xy(1, s as i32, 1);
    }
    v
}

/// Reference identification matrix and its inverse, from the explicit formulas.
pub fn m_tau0(n: usize) -> (MatrixXY, MatrixXY) {
    let a = alpha();
    let m = matrix_from_columns(n, |(i, j)| {
        let mut out = vec![((i, j), xy(1, 0, 0))];
        for s in i + 1..j {
            out.push(((i, s), a.clone()));
        }
        out
    });
    let xm1 = &xy(1, 1, 0) - &xy(1, 0, 0);
    let inv = matrix_from_columns(n, |(i, j)| {
        let mut out = vec![((i, j), xy(1, 0, 0))];
        for s in i + 1..j {
            out.push(((i, s), -(&xy(1, s as i32 - j as i32, 0) * &xm1)));
        }
        out
    });
    (m, inv)
}

/// Identification matrix for `tau_k` from the explicit expansion.
pub fn m_tau_k(n: usize, k: usize) -> Result<MatrixXY> {
    if k > n {
        return Err(Error::Invalid(format!("tau index {k} out of range for n = {n}")));
    }
    let a = alpha();
    let a2 = &a * &a;
    Ok(matrix_from_columns(n, |(i, j)| {
        let mut out = vec![((i, j), xy(1, 0, 0))];
        for jp in i + 1..j {
            if jp != k + 1 {
                out.push(((i, jp), a.clone()));
            }
        }
        if k + 1 > i {
            for jp in k + 2..j {
                out.push(((k + 1, jp), a2.clone()));
            }
        }
        if i < k + 1 && j > k + 1 {
            out.push(((k + 1, j), a.clone()));
        }
        out
    }))
}

/// Expected conjugate of the LKB matrix of `s_n ... s_1` by the reference identification.
pub fn mgamma_display(n: usize) -> MatrixXY {
    matrix_from_columns(n, |(i, j)| {
        if i != 1 {
            vec![((i - 1, j - 1), xy(1, 1, 0))]
        } else {
            vec![((j - 1, n + 1), xy(-1, (n + 3 - j) as i32, 1))]
        }
    })
}

/// Expected action matrix of `s_n^-1 ... s_1^-1` on the reference stables.
pub fn homgamma_display(n: usize) -> MatrixQT {
    matrix_from_columns(n, |(i, j)| {
        if i != 1 {
            vec![((i - 1, j - 1), qt(1, -1, 1))]
        } else {
            let (n, j) = (n as i32, j as i32);
            vec![((j as usize - 1, n as usize + 1), qt(1, j - 3 - n, 2 - j + n))]
        }
    })
}

/// Expected `(label, k, l)` of `s_k^-1 ... s_1^-1 P_ij` in the `tau_k` basis.
pub fn action_partial_gamma(k: usize, i: usize, j: usize) -> (Root, i32, i32) {
    let (ki, ji) = (k as i32, j as i32);
    if i == 1 {
        if k < j - 1 {
            ((k + 1, j), 0, 0)
        } else if k == j - 1 {
            ((k, k + 1), 1, -2)
        } else {
            ((j - 1, k + 1), ki - ji + 2, ji - ki - 3)
        }
    } else if i <= k && j <= k + 1 {
        ((i - 1, j - 1), 1, -1)
    } else if i <= k + 1 {
        ((i - 1, j), 1, -1)
    } else {
        ((i, j), 0, 0)
    }
}

/// Decategorified action of `w` from the basis `tau` to `w . tau`, with the target basis.
pub fn ptau_matrix(w: &BraidWord, tau: &StableBasis) -> Result<(MatrixQT, StableBasis)> {
    let n = tau.n();
    let (target, moves) = tau.transport_with_moves(w)?;
    let mut m = MatrixQT::zeros(dim(n), dim(n));
    for mv in moves {
        m.set(root_index(n, mv.target), root_index(n, mv.source), qt(1, mv.l, mv.k));
    }
    Ok((m, target))
}

/// Column images of `s_m^-1` in the monomial representation.
pub fn perm_column(m: usize, i: usize, j: usize) -> (Root, LaurentQT) {
    if i == m && j == m + 1 {
        ((m, m + 1), qt(1, -2, 1))
    } else if i == m && j > m + 1 {
        ((m + 1, j), qt(1, 0, 0))
    } else if i == m + 1 {
        ((m, j), qt(1, -1, 1))
    } else if j == m {
        ((i, m + 1), qt(1, -1, 1))
    } else if i < m && j == m + 1 {
        ((i, m), qt(1, 0, 0))
    } else {
        ((i, j), qt(1, 0, 0))
    }
}

/// Monomial-representation matrix of `s_m^sign`.
pub fn perm_generator(n: usize, m: usize, sign: i8) -> Result<MatrixQT> {
    check_gen(n, m)?;
    let inv = matrix_from_columns(n, |(i, j)| vec![perm_column(m, i, j)]);
    if sign < 0 {
        Ok(inv)
    } else {
        inv.inverse()
    }
}

pub fn perm_word(w: &BraidWord) -> Result<MatrixQT> {
    let n = w.n();
    let mut out = MatrixQT::identity(dim(n));
    for &(k, s) in w.letters() {
        out = out.mul(&perm_generator(n, k, s)?)?;
    }
    Ok(out)
}

/// Classical `K_0` matrix: column `i` is the class of `w . P_i`.
pub fn burau_matrix(w: &BraidWord) -> Result<MatrixQT> {
    let n = w.n();
    let mut m = MatrixQT::zeros(n, n);
    for i in 1..=n {
        let img = apply_word(w, &ProjComplex::proj(n, i, 0, 0)?)?;
        for (r, c) in img.classical_class().into_iter().enumerate() {
            m.set(r, i - 1, c);
        }
    }
    Ok(m)
}

pub fn to_qt(m: &MatrixXY) -> MatrixQT {
    m.map(xy_to_qt)
}

/// LKB matrix of `w` with `x = t q^-1`, `y = -t^-1`.
pub fn lkb_word_qt(w: &BraidWord) -> Result<MatrixQT> {
    Ok(to_qt(&lkb_word(w)?))
}

/// Identification matrix of `beta . tau_0`: `P(beta) M_0 rho(beta~)^-1`, with its basis.
pub fn m_for_word(beta: &BraidWord) -> Result<(MatrixQT, StableBasis)> {
    let n = beta.n();
    let (p, basis) = ptau_matrix(beta, &StableBasis::tau0(n)?)?;
    let m0 = to_qt(&m_tau0(n).0);
    let rho_inv = lkb_word_qt(&beta.tilde().inverse())?;
    Ok((p.mul(&m0)?.mul(&rho_inv)?, basis))
}

/// Identification matrix attached to a basis: the explicit one on `tau_k` classes,
/// otherwise the one induced by its defining word.
pub fn m_for_basis(basis: &StableBasis) -> Result<MatrixQT> {
    match basis.tau_class() {
        Some(k) => Ok(to_qt(&m_tau_k(basis.n(), k)?)),
        None => Ok(m_for_word(basis.word())?.0),
    }
}

/// First entry where two matrices differ, formatted for reports.
pub fn describe_difference(n: usize, a: &MatrixQT, b: &MatrixQT) -> Option<String> {
    let (r, c) = a.first_difference(b)?;
    let rs = roots(n);
    Some(format!("entry (row {:?}, column {:?}): {} vs {}", rs[r], rs[c], a.get(r, c).to_text(), b.get(r, c).to_text()))
}

/// Checks `M_(w tau)^-1 P_tau(w) M_tau = rho(w~)` for `tau = beta0 . tau_0`.
pub fn verify_identification(w: &BraidWord, beta0: &BraidWord) -> Result<Option<String>> {
    let n = w.n();
    let tau = StableBasis::tau0(n)?.transport(beta0)?;
    let (p, target) = ptau_matrix(w, &tau)?;
    let m_src = m_for_basis(&tau)?;
    let m_tgt = m_for_basis(&target)?;
    let lhs = m_tgt.inverse()?.mul(&p)?.mul(&m_src)?;
    let rhs = lkb_word_qt(&w.tilde())?;
    Ok(describe_difference(n, &lhs, &rhs))
}

/// Checks that `beta` and `beta gamma^l` give the same basis and identification matrix.
pub fn verify_path_independence(beta: &BraidWord, l: i32) -> Result<Option<String>> {
    let n = beta.n();
    let other = beta.then_after(&BraidWord::garside(n).pow(l));
    let (m1, b1) = m_for_word(beta)?;
    let (m2, b2) = m_for_word(&other)?;
    if !b1.same_stables(&b2) {
        return Ok(Some(format!("bases of {beta} and {other} differ")));
    }
    Ok(describe_difference(n, &m1, &m2))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lkb_examples() {
        let s1 = lkb_generator(2, 1, 1).unwrap();
        let c = root_index(2, (1, 2));
        assert_eq!(*s1.get(c, c), xy(-1, 2, 1));
        let c = root_index(2, (2, 3));
        assert_eq!(*s1.get(root_index(2, (1, 3)), c), xy(1, 1, 0));
        assert_eq!(*s1.get(c, c), &xy(1, 0, 0) - &xy(1, 1, 0));
    }

    #[test]
    fn m0_inverse() {
        for n in 2..=4 {
            let (m, inv) = m_tau0(n);
            assert!(m.mul(&inv).unwrap().is_identity());
            assert_eq!(m_tau_k(n, 0).unwrap(), m);
        }
    }

    #[test]
    fn perm_is_monomial() {
        for m in 1..=3 {
            for s in [1, -1] {
                assert!(perm_generator(3, m, s).unwrap().is_generalized_permutation());
            }
        }
    }
}
