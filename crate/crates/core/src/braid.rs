//! Braid words and the twist action on complexes.
//!
//! A word acts like a composite of functors: the rightmost letter is applied first.

use std::collections::BTreeMap;
use std::fmt;

use rand::Rng;

use crate::complex::{cone, ChainMap, ProjComplex, Summand};
use crate::error::{Error, Result};
use crate::homotopy::{is_isomorphic, reduce};
use crate::linalg::{zeros, Q};
use crate::zigzag::{Path, Zigzag};
use num_traits::One;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BraidWord {
    n: usize,
    letters: Vec<(usize, i8)>,
}

impl BraidWord {
    /// Word in the generators `s_1 .. s_n` of the braid group on `n + 1` strands.
    pub fn new(n: usize, letters: Vec<(usize, i8)>) -> Result<Self> {
        for &(i, s) in &letters {
            if i == 0 || i > n {
                return Err(Error::Invalid(format!("generator s{i} out of range for n = {n}")));
            }
            if s != 1 && s != -1 {
                return Err(Error::Invalid(format!("bad exponent {s}")));
            }
        }
        Ok(Self { n, letters })
    }

    pub fn empty(n: usize) -> Self {
        Self { n, letters: Vec::new() }
    }

    pub fn generator(n: usize, i: usize, sign: i8) -> Result<Self> {
        Self::new(n, vec![(i, sign)])
    }

    /// `s_1 s_2 ... s_n`.
    pub fn garside(n: usize) -> Self {
        Self { n, letters: (1..=n).map(|i| (i, 1)).collect() }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn letters(&self) -> &[(usize, i8)] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// `self * o` (so `o` acts first).
    pub fn then_after(&self, o: &BraidWord) -> BraidWord {
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&o.letters);
        BraidWord { n: self.n, letters }
    }

    pub fn pow(&self, e: i32) -> BraidWord {
        let base = if e < 0 { self.inverse() } else { self.clone() };
        let mut out = BraidWord::empty(self.n);
        for _ in 0..e.unsigned_abs() {
            out = out.then_after(&base);
        }
        out
    }

    pub fn inverse(&self) -> BraidWord {
        BraidWord { n: self.n, letters: self.letters.iter().rev().map(|&(i, s)| (i, -s)).collect() }
    }

    /// Inverts every letter but keeps their order.
    pub fn tilde(&self) -> BraidWord {
        BraidWord { n: self.n, letters: self.letters.iter().map(|&(i, s)| (i, -s)).collect() }
    }

    pub fn random<R: Rng>(n: usize, max_len: usize, rng: &mut R) -> BraidWord {
        let len = rng.gen_range(0..=max_len);
        let letters = (0..len).map(|_| (rng.gen_range(1..=n), if rng.gen_bool(0.5) { 1 } else { -1 })).collect();
        BraidWord { n, letters }
    }

    /// Parses comma separated tokens `s1`, `s2^-1`, `garside`, `garside^-1`.
    pub fn parse(text: &str, n: usize) -> Result<BraidWord> {
        let mut letters = Vec::new();
        let mut pos = 0;
        for raw in text.split(',') {
            let tok = raw.trim();
            let here = pos + raw.len() - raw.trim_start().len();
            pos += raw.len() + 1;
            if tok.is_empty() {
                if text.trim().is_empty() {
                    continue;
                }
                return Err(Error::Parse { pos: here, msg: "empty token".into() });
            }
            let (base, exp) = match tok.split_once('^') {
                Some((b, e)) => {
                    let e: i32 = e
                        .trim()
                        .parse()
                        .map_err(|_| Error::Parse { pos: here, msg: format!("bad exponent in '{tok}'") })?;
                    (b.trim(), e)
                }
                None => (tok, 1),
            };
            let unit: Vec<(usize, i8)> = if base == "garside" {
                BraidWord::garside(n).letters
            } else if let Some(num) = base.strip_prefix('s') {
                let i: usize =
                    num.parse().map_err(|_| Error::Parse { pos: here, msg: format!("bad generator '{tok}'") })?;
                if i == 0 || i > n {
                    return Err(Error::Parse { pos: here, msg: format!("generator s{i} out of range for n = {n}") });
                }
                vec![(i, 1)]
            } else {
                return Err(Error::Parse { pos: here, msg: format!("unknown token '{tok}'") });
            };
            let w = BraidWord { n, letters: unit }.pow(exp);
            letters.extend(w.letters);
        }
        Ok(BraidWord { n, letters })
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let toks: Vec<String> =
            self.letters.iter().map(|&(i, s)| if s > 0 { format!("s{i}") } else { format!("s{i}^-1") }).collect();
        write!(f, "{}", toks.join(","))
    }
}

/// Summands `P_i<a + deg p + shift>` of `A e_i (x) e_i X`, one per basis path `p`
/// from `i` to the vertex of each summand of `X`. Returns the complex and, per
/// degree, the list of `(source summand index, path)`.
fn tensor_part(i: usize, x: &ProjComplex, qshift: i32) -> (ProjComplex, BTreeMap<i32, Vec<(usize, Path)>>) {
    let n = x.n();
    let z = Zigzag::new(n).expect("valid n");
    let mut index = BTreeMap::new();
    let mut terms = Vec::new();
    for m in x.degrees() {
        let mut lst = Vec::new();
        let mut t = Vec::new();
        for (s, sm) in x.term(m).iter().enumerate() {
            for d in 0..=2 {
                if let Some(p) = z.path(i, sm.vertex, d) {
                    lst.push((s, p));
                    t.push(Summand::new(i, sm.q + d + qshift));
                }
            }
        }
        index.insert(m, lst);
        terms.push(t);
    }
    let mut diffs = Vec::new();
    for m in x.degrees() {
        if m + 1 >= x.degrees().end {
            break;
        }
        let src = &index[&m];
        let tgt = &index[&(m + 1)];
        let d = x.diff(m);
        let mut w = zeros(tgt.len(), src.len());
        for (c, &(s, p)) in src.iter().enumerate() {
            for (r, &(u, p2)) in tgt.iter().enumerate() {
                let Some(rpath) = crate::complex::link(&x.term(m)[s], &x.term(m + 1)[u]) else {
                    continue;
                };
                if p.mul(&rpath) == Some(p2) {
                    w[r][c] = d[u][s].clone();
                }
            }
        }
        diffs.push(w);
    }
    let lo = x.support().map_or(0, |s| s.0);
    (ProjComplex::from_parts_unchecked(n, lo, terms, diffs), index)
}

/// Unreduced image of `X` under the twist at vertex `i` or its inverse.
pub fn twist_unreduced(i: usize, sign: i8, x: &ProjComplex) -> Result<ProjComplex> {
    let n = x.n();
    Zigzag::new(n)?.check_vertex(i)?;
    if x.is_zero() {
        return Ok(x.clone());
    }
    let out = if sign > 0 {
        let (w, index) = tensor_part(i, x, 0);
        let mut comps = BTreeMap::new();
        for (m, lst) in &index {
            let mut c = zeros(x.term(*m).len(), lst.len());
            for (col, &(s, _)) in lst.iter().enumerate() {
                c[s][col] = Q::one();
            }
            comps.insert(*m, c);
        }
        let f = ChainMap::new_unchecked(w, x.clone(), comps);
        cone(&f).object
    } else {
        let (w, index) = tensor_part(i, x, -2);
        let mut comps = BTreeMap::new();
        for (m, lst) in &index {
            let mut c = zeros(lst.len(), x.term(*m).len());
            for (row, &(s, _)) in lst.iter().enumerate() {
                c[row][s] = Q::one();
            }
            comps.insert(*m, c);
        }
        let g = ChainMap::new_unchecked(x.clone(), w, comps);
        cone(&g).object.shift(1, 0)
    };
    Ok(out)
}

/// Reduced image of `X` under `s_i^sign`.
pub fn apply_generator(i: usize, sign: i8, x: &ProjComplex) -> Result<ProjComplex> {
    Ok(reduce(&twist_unreduced(i, sign, x)?))
}

/// Reduced image of `X` under the word; the rightmost letter acts first.
pub fn apply_word(w: &BraidWord, x: &ProjComplex) -> Result<ProjComplex> {
    if w.n() != x.n() {
        return Err(Error::Rank(w.n(), x.n()));
    }
    let mut cur = reduce(x);
    for &(i, s) in w.letters().iter().rev() {
        cur = apply_generator(i, s, &cur)?;
    }
    Ok(cur)
}

/// True if the two words give isomorphic images on every test object.
pub fn words_act_equally(w1: &BraidWord, w2: &BraidWord, objects: &[ProjComplex]) -> Result<bool> {
    for x in objects {
        if !is_isomorphic(&apply_word(w1, x)?, &apply_word(w2, x)?) {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(n: usize, i: usize) -> ProjComplex {
        ProjComplex::proj(n, i, 0, 0).unwrap()
    }

    #[test]
    fn inverse_twist_on_own_projective() {
        let y = apply_generator(1, -1, &p(3, 1)).unwrap();
        assert_eq!(y, ProjComplex::proj(3, 1, 1, -2).unwrap());
        let y = apply_generator(1, 1, &p(3, 1)).unwrap();
        assert_eq!(y, ProjComplex::proj(3, 1, -1, 2).unwrap());
    }

    #[test]
    fn far_projective_is_fixed() {
        assert_eq!(apply_generator(1, 1, &p(3, 3)).unwrap(), p(3, 3));
    }

    #[test]
    fn inverse_pairs() {
        for i in 1..=3 {
            let w = BraidWord::new(3, vec![(1, 1), (1, -1)]).unwrap();
            assert!(is_isomorphic(&apply_word(&w, &p(3, i)).unwrap(), &p(3, i)));
            let w = BraidWord::new(3, vec![(2, -1), (2, 1)]).unwrap();
            assert!(is_isomorphic(&apply_word(&w, &p(3, i)).unwrap(), &p(3, i)));
        }
    }

    #[test]
    fn parse_tokens() {
        let w = BraidWord::parse("s1, s2^-1,garside", 3).unwrap();
        assert_eq!(w.letters(), &[(1, 1), (2, -1), (1, 1), (2, 1), (3, 1)]);
        let g = BraidWord::parse("garside^-1", 3).unwrap();
        assert_eq!(g.letters(), &[(3, -1), (2, -1), (1, -1)]);
        assert!(BraidWord::parse("", 3).unwrap().is_empty());
        assert!(matches!(BraidWord::parse("s1,s9", 3), Err(Error::Parse { pos: 3, .. })));
        assert!(BraidWord::parse("s1,,s2", 3).is_err());
        assert_eq!(BraidWord::parse(&w.to_string(), 3).unwrap(), w);
    }

    #[test]
    fn tilde_and_inverse() {
        let w = BraidWord::parse("s1,s2^-1", 2).unwrap();
        assert_eq!(w.tilde().to_string(), "s1^-1,s2");
        assert_eq!(w.inverse().to_string(), "s2,s1^-1");
    }
}
