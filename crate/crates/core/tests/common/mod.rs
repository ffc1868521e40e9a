//! Independent oracles shared by the integration tests: the zigzag algebra as a
//! quotient of a path algebra, and an exhaustive search over HN filtrations.
#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet};

use zlkb_core::braid::{apply_word, BraidWord};
use zlkb_core::complex::{cone, ProjComplex};
use zlkb_core::homotopy::{hom, is_isomorphic, reduce};
use zlkb_core::linalg::{q, rank, Q};
use zlkb_core::stability::{Condition, Phase, Root};
use zlkb_core::zigzag::Path;

pub type QuiverPath = Vec<usize>;
pub type Vector = BTreeMap<QuiverPath, i64>;

pub struct PathAlgebra {
    n: usize,
    ideal: Vec<Vector>,
}

impl PathAlgebra {
    pub fn paths(&self, len: usize) -> Vec<QuiverPath> {
        let mut layer: Vec<QuiverPath> = (1..=self.n).map(|i| vec![i]).collect();
        for _ in 0..len {
            let mut next = Vec::new();
            for p in &layer {
                let v = *p.last().unwrap();
                for w in [v.wrapping_sub(1), v + 1] {
                    if (1..=self.n).contains(&w) {
                        let mut p2 = p.clone();
                        p2.push(w);
                        next.push(p2);
                    }
                }
            }
            layer = next;
        }
        layer
    }

    pub fn new(n: usize, max_len: usize) -> Self {
        let mut me = Self { n, ideal: Vec::new() };
        let mut rels: Vec<Vector> = Vec::new();
        for i in 1..=n {
            if i + 2 <= n {
                rels.push(BTreeMap::from([(vec![i, i + 1, i + 2], 1)]));
                rels.push(BTreeMap::from([(vec![i + 2, i + 1, i], 1)]));
            }
            if i > 1 && i < n {
                rels.push(BTreeMap::from([(vec![i, i + 1, i], 1), (vec![i, i - 1, i], -1)]));
            }
        }
        for len in 2..=max_len {
            for a in 0..=len - 2 {
                for u in me.paths(a) {
                    for v in me.paths(len - 2 - a) {
                        for r in &rels {
                            let mut out = Vector::new();
                            for (p, c) in r {
                                if p[0] == *u.last().unwrap() && *p.last().unwrap() == v[0] {
                                    out.insert(concat(&concat(&u, p), &v), *c);
                                }
                            }
                            if !out.is_empty() {
                                me.ideal.push(out);
                            }
                        }
                    }
                }
            }
            if n == 2 && len >= 3 {
                for p in me.paths(len) {
                    me.ideal.push(BTreeMap::from([(p, 1)]));
                }
            }
        }
        me
    }

    fn ideal_rank(&self, cols: &[QuiverPath], extra: Option<&Vector>) -> usize {
        let row = |v: &Vector| -> Vec<Q> { cols.iter().map(|p| q(*v.get(p).unwrap_or(&0))).collect() };
        let mut m: Vec<Vec<Q>> = self.ideal.iter().filter(|v| v.keys().any(|p| cols.contains(p))).map(row).collect();
        if let Some(e) = extra {
            m.push(row(e));
        }
        rank(&m)
    }

    pub fn dim(&self, i: usize, j: usize, len: usize) -> usize {
        let cols: Vec<QuiverPath> =
            self.paths(len).into_iter().filter(|p| p[0] == i && *p.last().unwrap() == j).collect();
        cols.len() - self.ideal_rank(&cols, None)
    }

    pub fn in_ideal(&self, v: &Vector) -> bool {
        let v: Vector = v.iter().filter(|(_, c)| **c != 0).map(|(p, c)| (p.clone(), *c)).collect();
        if v.is_empty() {
            return true;
        }
        let cols: Vec<QuiverPath> = self.paths(v.keys().next().unwrap().len() - 1);
        self.ideal_rank(&cols, None) == self.ideal_rank(&cols, Some(&v))
    }
}

pub fn concat(a: &[usize], b: &[usize]) -> QuiverPath {
    assert_eq!(a.last(), b.first());
    let mut out = a.to_vec();
    out.extend_from_slice(&b[1..]);
    out
}

pub fn rep(p: &Path, n: usize) -> QuiverPath {
    match *p {
        Path::E(i) => vec![i],
        Path::A(i, j) => vec![i, j],
        Path::L(i) if i < n => vec![i, i + 1, i],
        Path::L(i) => vec![i, i - 1, i],
    }
}

pub type Multiset = Vec<(Root, i32, i32)>;

pub struct Oracle<'a> {
    pub cond: &'a Condition,
    pub memo: BTreeMap<(String, Option<Phase>), BTreeSet<Multiset>>,
}

impl Oracle<'_> {
    fn below(&self, p: &Phase, bound: &Option<Phase>) -> bool {
        bound.as_ref().is_none_or(|b| self.cond.charges.cmp_phase(p, b) != std::cmp::Ordering::Greater)
    }

    /// Every multiset of shifted stables arising from a filtration of `x` whose
    /// factors have non-increasing phase bounded by `bound`.
    pub fn filtrations(&mut self, x: &ProjComplex, bound: Option<Phase>, depth: usize) -> BTreeSet<Multiset> {
        if x.is_zero() {
            return BTreeSet::from([Vec::new()]);
        }
        if depth == 0 {
            return BTreeSet::new();
        }
        let key = (x.to_json().to_string(), bound);
        if let Some(v) = self.memo.get(&key) {
            return v.clone();
        }
        let mut out = BTreeSet::new();
        let cands = self.cond.candidates(x);
        // Hom vanishing: nothing of phase above the bound may map in.
        for (idx, k, l, phase) in &cands {
            if !self.below(phase, &bound) {
                let src = self.cond.basis.members()[*idx].object.shift(*k, *l);
                if hom(&src, x, 0, 0).dim > 0 {
                    self.memo.insert(key, out.clone());
                    return out;
                }
            }
        }
        for (idx, k, l, phase) in cands {
            if !self.below(&phase, &bound) {
                continue;
            }
            let s = &self.cond.basis.members()[idx];
            let src = s.object.shift(k, l);
            let mut children: Vec<ProjComplex> = Vec::new();
            for f in hom(&src, x, 0, 0).basis {
                let y = reduce(&cone(&f).object);
                let ms = y.summand_multiset();
                if children.iter().any(|c| c.summand_multiset() == ms && is_isomorphic(c, &y)) {
                    continue;
                }
                children.push(y);
            }
            for y in children {
                for mut rest in self.filtrations(&y, Some(phase), depth - 1) {
                    rest.push((s.label, k, l));
                    rest.sort();
                    out.insert(rest);
                }
            }
        }
        self.memo.insert(key, out.clone());
        out
    }
}

pub fn normalized(x: &ProjComplex) -> ProjComplex {
    let (lo, _) = x.support().unwrap();
    let ql = x.term(lo).iter().map(|s| s.q).min().unwrap();
    x.shift(-lo, -ql)
}

pub fn push_unique(pool: &mut Vec<ProjComplex>, x: ProjComplex, cap: usize) {
    let x = reduce(&x);
    if x.is_zero() || x.num_summands() > cap {
        return;
    }
    let x = normalized(&x);
    let ms = x.summand_multiset();
    if pool.iter().any(|y| y.summand_multiset() == ms && is_isomorphic(y, &x)) {
        return;
    }
    pool.push(x);
}

pub fn words(n: usize, len: usize) -> Vec<BraidWord> {
    let gens: Vec<(usize, i8)> = (1..=n).flat_map(|i| [(i, 1), (i, -1)]).collect();
    let mut out = vec![BraidWord::empty(n)];
    let mut layer = vec![BraidWord::empty(n)];
    for _ in 0..len {
        let mut next = Vec::new();
        for w in &layer {
            for &g in &gens {
                next.push(BraidWord::new(n, vec![g]).unwrap().then_after(w));
            }
        }
        out.extend(next.iter().cloned());
        layer = next;
    }
    out
}

/// Objects at `n = 2` with at most six summands: braid images of stables, sums of
/// pairs and cones of basis maps between small objects, up to isomorphism and shift.
pub fn corpus(cond: &Condition) -> Vec<ProjComplex> {
    let n = 2;
    let mut small = Vec::new();
    for w in words(n, 4) {
        for s in cond.basis.members() {
            push_unique(&mut small, apply_word(&w, &s.object).unwrap(), 3);
        }
    }
    let mut pool = Vec::new();
    for w in words(n, 4) {
        for s in cond.basis.members() {
            push_unique(&mut pool, apply_word(&w, &s.object).unwrap(), 6);
        }
    }
    for (a_i, a) in small.iter().enumerate() {
        for b in &small[a_i..] {
            for k in -2..=2 {
                for l in -2..=2 {
                    let bs = b.shift(k, l);
                    push_unique(&mut pool, a.direct_sum(&bs).unwrap(), 6);
                    for dir in [(a, &bs), (&bs, a)] {
                        for f in hom(dir.0, dir.1, 0, 0).basis {
                            push_unique(&mut pool, cone(&f).object, 6);
                        }
                    }
                }
            }
        }
    }
    pool
}

/// Greedy HN pieces as a sorted multiset.
pub fn greedy_multiset(cond: &Condition, x: &ProjComplex) -> Multiset {
    let mut g: Multiset = cond.hn(x).unwrap().pieces.iter().map(|p| (p.label, p.k, p.l)).collect();
    g.sort();
    g
}
