//! Bounded complexes of graded indecomposable projectives.
//!
//! A differential entry from `P_j<a>` to `P_i<b>` is a rational multiple of the
//! unique basis path from `j` to `i` of length `a - b`, so matrices store only
//! the scalars. Complexes are cochain complexes; `X{k}` moves `X^0` to
//! homological degree `k`, and `P_i<l>` has its generator in degree `l`.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::linalg::{zeros, QMat, Q};
use crate::ring::LaurentQT;
use crate::zigzag::{Path, Zigzag};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Summand {
    pub vertex: usize,
    pub q: i32,
}

impl Summand {
    pub fn new(vertex: usize, q: i32) -> Self {
        Self { vertex, q }
    }
}

/// The basis path carried by a map between two summands, if any.
pub fn link(src: &Summand, tgt: &Summand) -> Option<Path> {
    let d = src.q - tgt.q;
    match d {
        0 if src.vertex == tgt.vertex => Some(Path::E(src.vertex)),
        1 if src.vertex.abs_diff(tgt.vertex) == 1 => Some(Path::A(src.vertex, tgt.vertex)),
        2 if src.vertex == tgt.vertex => Some(Path::L(src.vertex)),
        _ => None,
    }
}

/// Structure constant of composing `a -> b -> c` through the basis paths.
pub fn mu(a: &Summand, b: &Summand, c: &Summand) -> bool {
    match (link(a, b), link(b, c)) {
        (Some(p), Some(r)) => p.mul(&r).is_some(),
        _ => false,
    }
}

/// Composite `g . f` of summand-indexed matrices `f: src -> mid`, `g: mid -> tgt`.
pub fn compose(f: &QMat, g: &QMat, src: &[Summand], mid: &[Summand], tgt: &[Summand]) -> QMat {
    let mut out = zeros(tgt.len(), src.len());
    for (s, ss) in src.iter().enumerate() {
        for (t, ts) in mid.iter().enumerate() {
            let a = &f[t][s];
            if a.is_zero() {
                continue;
            }
            for (u, us) in tgt.iter().enumerate() {
                let b = &g[u][t];
                if !b.is_zero() && mu(ss, ts, us) {
                    out[u][s] += a * b;
                }
            }
        }
    }
    out
}

fn is_zero_mat(m: &QMat) -> bool {
    m.iter().all(|r| r.iter().all(|v| v.is_zero()))
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ProjComplex {
    n: usize,
    lo: i32,
    terms: Vec<Vec<Summand>>,
    diffs: Vec<QMat>,
}

impl ProjComplex {
    pub fn zero(n: usize) -> Self {
        Self { n, lo: 0, terms: Vec::new(), diffs: Vec::new() }
    }

    /// `P_i<l>` in homological degree `k`.
    pub fn proj(n: usize, i: usize, k: i32, l: i32) -> Result<Self> {
        Zigzag::new(n)?.check_vertex(i)?;
        Ok(Self { n, lo: k, terms: vec![vec![Summand::new(i, l)]], diffs: Vec::new() })
    }

    /// Builds a complex from its terms starting at degree `lo` and its
    /// differentials (`diffs[t]` maps `terms[t]` to `terms[t + 1]`).
    pub fn from_parts(n: usize, lo: i32, terms: Vec<Vec<Summand>>, diffs: Vec<QMat>) -> Result<Self> {
        let z = Zigzag::new(n)?;
        for s in terms.iter().flatten() {
            z.check_vertex(s.vertex)?;
        }
        if diffs.len() + 1 != terms.len().max(1) {
            return Err(Error::Dimension("need one differential per adjacent pair of terms".into()));
        }
        for (t, d) in diffs.iter().enumerate() {
            if d.len() != terms[t + 1].len() || d.iter().any(|r| r.len() != terms[t].len()) {
                return Err(Error::Dimension(format!("differential {t} has the wrong shape")));
            }
            for (r, row) in d.iter().enumerate() {
                for (c, v) in row.iter().enumerate() {
                    if !v.is_zero() && link(&terms[t][c], &terms[t + 1][r]).is_none() {
                        return Err(Error::Invalid(format!(
                            "differential entry at degree {} is not homogeneous of the forced degree",
                            lo + t as i32
                        )));
                    }
                }
            }
        }
        let mut x = Self { n, lo, terms, diffs };
        x.trim();
        Ok(x)
    }

    /// Like `from_parts` but skips validation; callers guarantee the invariants.
    pub(crate) fn from_parts_unchecked(n: usize, lo: i32, terms: Vec<Vec<Summand>>, diffs: Vec<QMat>) -> Self {
        let mut x = Self { n, lo, terms, diffs };
        x.trim();
        x
    }

    fn trim(&mut self) {
        while self.terms.last().is_some_and(|t| t.is_empty()) {
            self.terms.pop();
            self.diffs.pop();
        }
        while self.terms.first().is_some_and(|t| t.is_empty()) {
            self.terms.remove(0);
            if !self.diffs.is_empty() {
                self.diffs.remove(0);
            }
            self.lo += 1;
        }
        if self.terms.is_empty() {
            self.lo = 0;
            self.diffs.clear();
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Lowest and highest nonzero degree.
    pub fn support(&self) -> Option<(i32, i32)> {
        if self.terms.is_empty() {
            None
        } else {
            Some((self.lo, self.lo + self.terms.len() as i32 - 1))
        }
    }

    pub fn degrees(&self) -> std::ops::Range<i32> {
        self.lo..self.lo + self.terms.len() as i32
    }

    pub fn term(&self, m: i32) -> &[Summand] {
        let idx = m - self.lo;
        if idx < 0 || idx as usize >= self.terms.len() {
            &[]
        } else {
            &self.terms[idx as usize]
        }
    }

    /// Differential from degree `m` to `m + 1` (zero matrix outside the support).
    pub fn diff(&self, m: i32) -> QMat {
        let idx = m - self.lo;
        if idx >= 0 && (idx as usize) < self.diffs.len() {
            self.diffs[idx as usize].clone()
        } else {
            zeros(self.term(m + 1).len(), self.term(m).len())
        }
    }

    pub(crate) fn diff_ref(&self, m: i32) -> Option<&QMat> {
        let idx = m - self.lo;
        if idx >= 0 && (idx as usize) < self.diffs.len() {
            Some(&self.diffs[idx as usize])
        } else {
            None
        }
    }

    pub fn num_summands(&self) -> usize {
        self.terms.iter().map(|t| t.len()).sum()
    }

    /// Sorted list of `(degree, vertex, q)` over all summands.
    pub fn summand_multiset(&self) -> Vec<(i32, usize, i32)> {
        let mut v: Vec<_> = self.degrees().flat_map(|m| self.term(m).iter().map(move |s| (m, s.vertex, s.q))).collect();
        v.sort();
        v
    }

    /// The differential entry as an algebra element (rational scalar times a path).
    pub fn entry(&self, m: i32, row: usize, col: usize) -> Option<(Q, Path)> {
        let d = self.diff_ref(m)?;
        let v = d.get(row)?.get(col)?;
        if v.is_zero() {
            return None;
        }
        let p = link(&self.term(m)[col], &self.term(m + 1)[row])?;
        Some((v.clone(), p))
    }

    pub fn shift(&self, k: i32, l: i32) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let sign = if k.rem_euclid(2) == 1 { -Q::one() } else { Q::one() };
        Self {
            n: self.n,
            lo: self.lo + k,
            terms: self.terms.iter().map(|t| t.iter().map(|s| Summand::new(s.vertex, s.q + l)).collect()).collect(),
            diffs: self
                .diffs
                .iter()
                .map(|d| d.iter().map(|r| r.iter().map(|v| v * &sign).collect()).collect())
                .collect(),
        }
    }

    /// `X[k] = X{k}<-k>`.
    pub fn triangulated_shift(&self, k: i32) -> Self {
        self.shift(k, -k)
    }

    pub fn direct_sum(&self, o: &Self) -> Result<Self> {
        if self.n != o.n {
            return Err(Error::Rank(self.n, o.n));
        }
        if self.is_zero() {
            return Ok(o.clone());
        }
        if o.is_zero() {
            return Ok(self.clone());
        }
        let lo = self.lo.min(o.lo);
        let hi = self.support().unwrap().1.max(o.support().unwrap().1);
        let mut terms = Vec::new();
        let mut diffs = Vec::new();
        for m in lo..=hi {
            let mut t = self.term(m).to_vec();
            t.extend_from_slice(o.term(m));
            terms.push(t);
            if m < hi {
                diffs.push(block_diag(&self.diff(m), &o.diff(m), self.term(m).len(), o.term(m).len()));
            }
        }
        Ok(Self::from_parts_unchecked(self.n, lo, terms, diffs))
    }

    pub fn check_d_squared(&self) -> bool {
        self.degrees().all(|m| {
            let (Some(a), Some(b)) = (self.diff_ref(m), self.diff_ref(m + 1)) else {
                return true;
            };
            is_zero_mat(&compose(a, b, self.term(m), self.term(m + 1), self.term(m + 2)))
        })
    }

    /// Every nonzero entry carries a path of the forced degree.
    pub fn check_homogeneous(&self) -> bool {
        self.degrees().all(|m| {
            let Some(d) = self.diff_ref(m) else { return true };
            d.iter().enumerate().all(|(r, row)| {
                row.iter()
                    .enumerate()
                    .all(|(c, v)| v.is_zero() || link(&self.term(m)[c], &self.term(m + 1)[r]).is_some())
            })
        })
    }

    /// Classical Grothendieck class: coefficient of `[P_i]` is the sum of `(-1)^k q^l`.
    pub fn classical_class(&self) -> Vec<LaurentQT> {
        let mut out = vec![LaurentQT::zero(); self.n];
        for (m, v, l) in self.summand_multiset() {
            let c = if m.rem_euclid(2) == 0 { 1 } else { -1 };
            out[v - 1] = &out[v - 1] + &LaurentQT::monomial(c, l, 0);
        }
        out
    }

    /// Class with weight `(-1)^(k+l)`, i.e. the classical class at `q = -1`.
    pub fn root_vector(&self) -> Vec<i64> {
        let mut out = vec![0i64; self.n];
        for (m, v, l) in self.summand_multiset() {
            out[v - 1] += if (m + l).rem_euclid(2) == 0 { 1 } else { -1 };
        }
        out
    }

    pub fn to_json(&self) -> Value {
        let degrees: Vec<Value> = self
            .degrees()
            .map(|m| {
                let summands: Vec<Value> = self.term(m).iter().map(|s| json!({"i": s.vertex, "l": s.q})).collect();
                let dnext: Vec<Vec<String>> = match self.diff_ref(m) {
                    Some(d) => d
                        .iter()
                        .enumerate()
                        .map(|(r, row)| {
                            row.iter()
                                .enumerate()
                                .map(|(c, v)| match link(&self.term(m)[c], &self.term(m + 1)[r]) {
                                    Some(p) if !v.is_zero() => entry_text(v, &p),
                                    _ => "0".to_string(),
                                })
                                .collect()
                        })
                        .collect(),
                    None => Vec::new(),
                };
                json!({"k": m, "summands": summands, "dnext": dnext})
            })
            .collect();
        json!({"n": self.n, "degrees": degrees})
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        let bad = |m: &str| Error::Parse { pos: 0, msg: m.to_string() };
        let n = v.get("n").and_then(|x| x.as_u64()).ok_or_else(|| bad("missing n"))? as usize;
        let degs = v.get("degrees").and_then(|x| x.as_array()).ok_or_else(|| bad("missing degrees"))?;
        let mut by_deg: BTreeMap<i32, (Vec<Summand>, Vec<Vec<String>>)> = BTreeMap::new();
        for d in degs {
            let k = d.get("k").and_then(|x| x.as_i64()).ok_or_else(|| bad("missing k"))? as i32;
            let mut summands = Vec::new();
            for s in d.get("summands").and_then(|x| x.as_array()).ok_or_else(|| bad("missing summands"))? {
                let i = s.get("i").and_then(|x| x.as_u64()).ok_or_else(|| bad("missing i"))? as usize;
                let l = s.get("l").and_then(|x| x.as_i64()).ok_or_else(|| bad("missing l"))? as i32;
                summands.push(Summand::new(i, l));
            }
            let dnext: Vec<Vec<String>> = match d.get("dnext") {
                Some(Value::Array(rows)) => rows
                    .iter()
                    .map(|r| {
                        r.as_array()
                            .map(|xs| xs.iter().map(|x| x.as_str().unwrap_or("0").to_string()).collect())
                            .unwrap_or_default()
                    })
                    .collect(),
                _ => Vec::new(),
            };
            by_deg.insert(k, (summands, dnext));
        }
        let Some((&lo, _)) = by_deg.iter().next() else {
            return Ok(Self::zero(n));
        };
        let hi = *by_deg.keys().last().unwrap();
        let terms: Vec<Vec<Summand>> =
            (lo..=hi).map(|m| by_deg.get(&m).map(|x| x.0.clone()).unwrap_or_default()).collect();
        let mut diffs = Vec::new();
        for m in lo..hi {
            let src = &terms[(m - lo) as usize];
            let tgt = &terms[(m - lo + 1) as usize];
            let mut d = zeros(tgt.len(), src.len());
            if let Some((_, rows)) = by_deg.get(&m) {
                for (r, row) in rows.iter().enumerate() {
                    for (c, txt) in row.iter().enumerate() {
                        if r >= tgt.len() || c >= src.len() {
                            return Err(bad("dnext has the wrong shape"));
                        }
                        let (coef, path) = parse_entry(txt)?;
                        if let Some(p) = path {
                            if link(&src[c], &tgt[r]) != Some(p) {
                                return Err(bad(&format!("entry '{txt}' does not match its summands")));
                            }
                        }
                        d[r][c] = coef;
                    }
                }
            }
            diffs.push(d);
        }
        Self::from_parts(n, lo, terms, diffs)
    }
}

fn entry_text(v: &Q, p: &Path) -> String {
    if v.is_one() {
        p.to_string()
    } else if (-v).is_one() {
        format!("-{p}")
    } else {
        format!("{v}*{p}")
    }
}

fn parse_entry(s: &str) -> Result<(Q, Option<Path>)> {
    let s = s.trim();
    if s == "0" {
        return Ok((Q::zero(), None));
    }
    let bad = || Error::Parse { pos: 0, msg: format!("bad entry '{s}'") };
    let (coef, path) = match s.split_once('*') {
        Some((c, p)) => (c.trim().parse::<BigRational>().map_err(|_| bad())?, p),
        None => match s.strip_prefix('-') {
            Some(p) => (-Q::one(), p),
            None => (Q::one(), s),
        },
    };
    Ok((coef, Some(Path::parse(path)?)))
}

fn block_diag(a: &QMat, b: &QMat, ac: usize, bc: usize) -> QMat {
    let mut out = Vec::with_capacity(a.len() + b.len());
    for r in a {
        let mut row = r.clone();
        row.extend(std::iter::repeat_n(Q::zero(), bc));
        out.push(row);
    }
    for r in b {
        let mut row = vec![Q::zero(); ac];
        row.extend(r.iter().cloned());
        out.push(row);
    }
    out
}

impl fmt::Display for ProjComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .degrees()
            .map(|m| {
                let t: Vec<String> = self.term(m).iter().map(|s| format!("P{}<{}>", s.vertex, s.q)).collect();
                format!("[{m}: {}]", t.join(" + "))
            })
            .collect();
        write!(f, "{}", parts.join(" -> "))
    }
}

/// Degree-preserving chain map; `comps[m]` maps `source^m` to `target^m`.
#[derive(Clone, Debug, PartialEq)]
pub struct ChainMap {
    pub source: ProjComplex,
    pub target: ProjComplex,
    comps: BTreeMap<i32, QMat>,
}

impl ChainMap {
    pub fn new(source: ProjComplex, target: ProjComplex, comps: BTreeMap<i32, QMat>) -> Result<Self> {
        if source.n != target.n {
            return Err(Error::Rank(source.n, target.n));
        }
        for (&m, c) in &comps {
            let (s, t) = (source.term(m), target.term(m));
            if c.len() != t.len() || c.iter().any(|r| r.len() != s.len()) {
                return Err(Error::MapMismatch);
            }
            for (r, row) in c.iter().enumerate() {
                for (col, v) in row.iter().enumerate() {
                    if !v.is_zero() && link(&s[col], &t[r]).is_none() {
                        return Err(Error::Invalid("chain map entry has no path of the forced degree".into()));
                    }
                }
            }
        }
        Ok(Self::new_unchecked(source, target, comps))
    }

    pub(crate) fn new_unchecked(source: ProjComplex, target: ProjComplex, mut comps: BTreeMap<i32, QMat>) -> Self {
        comps.retain(|_, c| !is_zero_mat(c));
        Self { source, target, comps }
    }

    pub fn zero(source: ProjComplex, target: ProjComplex) -> Self {
        Self { source, target, comps: BTreeMap::new() }
    }

    pub fn identity(x: &ProjComplex) -> Self {
        let comps = x
            .degrees()
            .map(|m| {
                let k = x.term(m).len();
                let mut id = zeros(k, k);
                for (i, row) in id.iter_mut().enumerate() {
                    row[i] = Q::one();
                }
                (m, id)
            })
            .collect();
        Self::new_unchecked(x.clone(), x.clone(), comps)
    }

    pub fn comp(&self, m: i32) -> QMat {
        self.comps.get(&m).cloned().unwrap_or_else(|| zeros(self.target.term(m).len(), self.source.term(m).len()))
    }

    pub fn is_zero(&self) -> bool {
        self.comps.is_empty()
    }

    pub fn is_chain_map(&self) -> bool {
        let sup: Vec<(i32, i32)> = [self.source.support(), self.target.support()].into_iter().flatten().collect();
        let Some(lo) = sup.iter().map(|s| s.0).min() else { return true };
        let hi = sup.iter().map(|s| s.1).max().unwrap();
        let (lo, hi) = (lo - 1, hi);
        (lo..=hi).all(|m| {
            let (s0, s1) = (self.source.term(m), self.source.term(m + 1));
            let (t0, t1) = (self.target.term(m), self.target.term(m + 1));
            let a = compose(&self.source.diff(m), &self.comp(m + 1), s0, s1, t1);
            let b = compose(&self.comp(m), &self.target.diff(m), s0, t0, t1);
            a == b
        })
    }

    /// `g . self`.
    pub fn then(&self, g: &ChainMap) -> Result<ChainMap> {
        if self.target != g.source {
            return Err(Error::MapMismatch);
        }
        let mut comps = BTreeMap::new();
        for m in self.source.degrees() {
            let c = compose(&self.comp(m), &g.comp(m), self.source.term(m), self.target.term(m), g.target.term(m));
            comps.insert(m, c);
        }
        Ok(ChainMap::new_unchecked(self.source.clone(), g.target.clone(), comps))
    }

    pub fn add(&self, o: &ChainMap) -> Result<ChainMap> {
        if self.source != o.source || self.target != o.target {
            return Err(Error::MapMismatch);
        }
        let mut comps = self.comps.clone();
        for (m, c) in &o.comps {
            let e = comps.entry(*m).or_insert_with(|| zeros(c.len(), c.first().map_or(0, |r| r.len())));
            for (r, row) in c.iter().enumerate() {
                for (col, v) in row.iter().enumerate() {
                    e[r][col] += v;
                }
            }
        }
        Ok(ChainMap::new_unchecked(self.source.clone(), self.target.clone(), comps))
    }

    pub fn scale(&self, c: &Q) -> ChainMap {
        let comps = self
            .comps
            .iter()
            .map(|(m, x)| (*m, x.iter().map(|r| r.iter().map(|v| v * c).collect()).collect()))
            .collect();
        ChainMap::new_unchecked(self.source.clone(), self.target.clone(), comps)
    }

    /// `f{k}<l>` between the shifted complexes.
    pub fn shift(&self, k: i32, l: i32) -> ChainMap {
        let comps = self.comps.iter().map(|(m, c)| (m + k, c.clone())).collect();
        ChainMap::new_unchecked(self.source.shift(k, l), self.target.shift(k, l), comps)
    }

    pub(crate) fn comps(&self) -> &BTreeMap<i32, QMat> {
        &self.comps
    }
}

/// Mapping cone of `f: A -> B` with its triangle maps `B -> Cone(f)` and `Cone(f) -> A{-1}`.
#[derive(Clone, Debug)]
pub struct Cone {
    pub object: ProjComplex,
    pub inclusion: ChainMap,
    pub projection: ChainMap,
}

/// `Cone(f)^m = B^m + A^(m+1)` with differential `[[d_B, f], [0, -d_A]]`.
pub fn cone(f: &ChainMap) -> Cone {
    let (a, b) = (&f.source, &f.target);
    let n = a.n;
    if a.is_zero() && b.is_zero() {
        let z = ProjComplex::zero(n);
        return Cone {
            object: z.clone(),
            inclusion: ChainMap::zero(b.clone(), z.clone()),
            projection: ChainMap::zero(z, a.shift(-1, 0)),
        };
    }
    let lo = match (a.support(), b.support()) {
        (Some((al, _)), Some((bl, _))) => (al - 1).min(bl),
        (Some((al, _)), None) => al - 1,
        (None, Some((bl, _))) => bl,
        (None, None) => unreachable!(),
    };
    let hi = match (a.support(), b.support()) {
        (Some((_, ah)), Some((_, bh))) => (ah - 1).max(bh),
        (Some((_, ah)), None) => ah - 1,
        (None, Some((_, bh))) => bh,
        (None, None) => unreachable!(),
    };
    let mut terms = Vec::new();
    let mut diffs = Vec::new();
    for m in lo..=hi {
        let mut t = b.term(m).to_vec();
        t.extend_from_slice(a.term(m + 1));
        terms.push(t);
        if m < hi {
            let (nb0, na1) = (b.term(m).len(), a.term(m + 1).len());
            let (nb1, na2) = (b.term(m + 1).len(), a.term(m + 2).len());
            let mut d = zeros(nb1 + na2, nb0 + na1);
            let db = b.diff(m);
            let da = a.diff(m + 1);
            let fm = f.comp(m + 1);
            for r in 0..nb1 {
                for c in 0..nb0 {
                    d[r][c] = db[r][c].clone();
                }
                for c in 0..na1 {
                    d[r][nb0 + c] = fm[r][c].clone();
                }
            }
            for r in 0..na2 {
                for c in 0..na1 {
                    d[nb1 + r][nb0 + c] = -da[r][c].clone();
                }
            }
            diffs.push(d);
        }
    }
    let object = ProjComplex::from_parts_unchecked(n, lo, terms, diffs);
    let mut inc = BTreeMap::new();
    let mut proj = BTreeMap::new();
    for m in lo..=hi {
        let (nb, na) = (b.term(m).len(), a.term(m + 1).len());
        let mut i = zeros(nb + na, nb);
        for (r, row) in i.iter_mut().enumerate().take(nb) {
            row[r] = Q::one();
        }
        inc.insert(m, i);
        let mut p = zeros(na, nb + na);
        for (r, row) in p.iter_mut().enumerate() {
            row[nb + r] = Q::one();
        }
        proj.insert(m, p);
    }
    let inclusion = ChainMap::new_unchecked(b.clone(), object.clone(), inc);
    let projection = ChainMap::new_unchecked(object.clone(), a.shift(-1, 0), proj);
    Cone { object, inclusion, projection }
}

/// Integer-valued scalar helper for building differentials by hand.
pub fn qmat(rows: &[&[i64]]) -> QMat {
    rows.iter().map(|r| r.iter().map(|&v| Q::from_integer(BigInt::from(v))).collect()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p13() -> ProjComplex {
        ProjComplex::from_parts(3, -1, vec![vec![Summand::new(1, 1)], vec![Summand::new(2, 0)]], vec![qmat(&[&[1]])])
            .unwrap()
    }

    #[test]
    fn d_squared() {
        assert!(p13().check_d_squared());
        let p14 = ProjComplex::from_parts(
            3,
            -2,
            vec![vec![Summand::new(1, 2)], vec![Summand::new(2, 1)], vec![Summand::new(3, 0)]],
            vec![qmat(&[&[1]]), qmat(&[&[1]])],
        )
        .unwrap();
        assert!(p14.check_d_squared());
        // a(1,2) followed by a(2,1) is the loop, so this square is nonzero
        let bad = ProjComplex::from_parts(
            3,
            0,
            vec![vec![Summand::new(1, 2)], vec![Summand::new(2, 1)], vec![Summand::new(1, 0)]],
            vec![qmat(&[&[1]]), qmat(&[&[1]])],
        )
        .unwrap();
        assert!(!bad.check_d_squared());
    }

    #[test]
    fn inhomogeneous_entry_rejected() {
        let r = ProjComplex::from_parts(
            3,
            0,
            vec![vec![Summand::new(1, 0)], vec![Summand::new(3, 0)]],
            vec![qmat(&[&[1]])],
        );
        assert!(r.is_err());
    }

    #[test]
    fn shifts() {
        let x = p13();
        assert_eq!(x.triangulated_shift(1).shift(0, 1), x.shift(1, 0));
        assert_eq!(x.shift(1, 0).shift(-1, 0), x);
        assert_eq!(x.triangulated_shift(1).triangulated_shift(-1), x);
        let p1 = ProjComplex::proj(3, 1, 0, 0).unwrap();
        assert_eq!(p1.triangulated_shift(2), ProjComplex::proj(3, 1, 2, -2).unwrap());
    }

    #[test]
    fn cone_of_zero_is_sum() {
        let x = p13();
        let y = ProjComplex::proj(3, 3, 0, 0).unwrap();
        let c = cone(&ChainMap::zero(x.clone(), y.clone()));
        assert_eq!(c.object.summand_multiset(), y.direct_sum(&x.shift(-1, 0)).unwrap().summand_multiset());
        assert!(c.object.check_d_squared());
        assert!(c.inclusion.is_chain_map());
        assert!(c.projection.is_chain_map());
    }

    #[test]
    fn cone_of_arrow_is_p13() {
        let a = ProjComplex::proj(3, 1, 0, 1).unwrap();
        let b = ProjComplex::proj(3, 2, 0, 0).unwrap();
        let f = ChainMap::new(a, b, [(0, qmat(&[&[1]]))].into()).unwrap();
        assert!(f.is_chain_map());
        assert_eq!(cone(&f).object, p13());
    }

    #[test]
    fn json_round_trip() {
        let x = p13().direct_sum(&ProjComplex::proj(3, 2, 1, -3).unwrap()).unwrap();
        let v = x.to_json();
        assert_eq!(v["degrees"][0]["dnext"][0][0], "a(1,2)");
        assert_eq!(ProjComplex::from_json(&v).unwrap(), x);
    }

    #[test]
    fn direct_sum_counts() {
        let x = p13();
        assert_eq!(x.direct_sum(&ProjComplex::zero(3)).unwrap(), x);
        let s = x.direct_sum(&x.shift(1, 0)).unwrap();
        assert_eq!(s.term(0).len(), 2);
        assert_eq!(s.num_summands(), 4);
    }
}
