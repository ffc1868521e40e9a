//! Stable bases, central charges, Harder-Narasimhan extraction, masses and
//! thin-triangle Grothendieck classes.
//!
//! Phases: the heart of `tau_0` consists of the complexes whose summands
//! `P_s{h}<q>` all satisfy `h + q = 0`. The charge of `P_s{h}<q>` is
//! `(-1)^(h+q) v_s`, and `S{k}<l>` has phase `phase(S) - k - l`.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::path::Path as FsPath;

use num_traits::{Signed, Zero};
use serde_json::{json, Value};

use crate::braid::{apply_word, BraidWord};
use crate::complex::{cone, link, ChainMap, ProjComplex, Summand};
use crate::error::{Error, Result};
use crate::homotopy::{find_isomorphism, hom, reduce};
use crate::linalg::{q, zeros, Q};
use crate::ring::LaurentQT;

/// Positive root `alpha_ij = alpha_i + ... + alpha_(j-1)`, `1 <= i < j <= n + 1`.
pub type Root = (usize, usize);

pub fn roots(n: usize) -> Vec<Root> {
    let mut out = Vec::new();
    for i in 1..=n {
        for j in i + 1..=n + 1 {
            out.push((i, j));
        }
    }
    out
}

pub fn root_index(n: usize, r: Root) -> usize {
    roots(n).iter().position(|x| *x == r).expect("root in range")
}

/// Reads `+-alpha_ij` off a vector of simple-root coefficients.
pub fn root_from_vector(v: &[i64]) -> Option<(Root, i64)> {
    let nz: Vec<usize> = (0..v.len()).filter(|&i| v[i] != 0).collect();
    let (&a, &b) = (nz.first()?, nz.last()?);
    let sign = v[a];
    if sign.abs() != 1 || b - a + 1 != nz.len() || nz.iter().any(|&i| v[i] != sign) {
        return None;
    }
    Some(((a + 1, b + 2), sign))
}

/// Planar vectors for the simple roots; root charges are sums.
#[derive(Clone, Debug, PartialEq)]
pub struct ChargeParams {
    n: usize,
    vectors: Vec<(Q, Q)>,
}

fn cross(a: &(Q, Q), b: &(Q, Q)) -> Q {
    &a.0 * &b.1 - &a.1 * &b.0
}

impl ChargeParams {
    /// `v_i = (i, (n + 1 - i)^2 + 1)`: a concave arc with strictly decreasing arguments.
    pub fn default_for(n: usize) -> Self {
        let vectors = (1..=n).map(|i| (q(i as i64), q(((n + 1 - i) * (n + 1 - i) + 1) as i64))).collect();
        Self::new(n, vectors).expect("default charges are valid")
    }

    pub fn new(n: usize, vectors: Vec<(Q, Q)>) -> Result<Self> {
        if vectors.len() != n {
            return Err(Error::Charge(format!("expected {n} vectors, got {}", vectors.len())));
        }
        if let Some(i) = vectors.iter().position(|v| !v.1.is_positive()) {
            return Err(Error::Charge(format!("vector {} is not in the upper half-plane", i + 1)));
        }
        for i in 1..n {
            if !cross(&vectors[i], &vectors[i - 1]).is_positive() {
                return Err(Error::Charge(format!(
                    "arguments must strictly decrease along the simple roots (vectors {} and {})",
                    i,
                    i + 1
                )));
            }
        }
        let p = Self { n, vectors };
        let rs = roots(n);
        for (a, ra) in rs.iter().enumerate() {
            for rb in &rs[a + 1..] {
                if cross(&p.charge(*ra), &p.charge(*rb)).is_zero() {
                    return Err(Error::Charge(format!("roots {ra:?} and {rb:?} have equal phase")));
                }
            }
        }
        Ok(p)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn charge(&self, r: Root) -> (Q, Q) {
        let mut acc = (Q::zero(), Q::zero());
        for i in r.0..r.1 {
            acc.0 += &self.vectors[i - 1].0;
            acc.1 += &self.vectors[i - 1].1;
        }
        acc
    }

    /// Compares phases `phi_a + sa` and `phi_b + sb`.
    pub fn cmp_phase(&self, a: &Phase, b: &Phase) -> Ordering {
        a.shift.cmp(&b.shift).then_with(|| {
            let c = cross(&self.charge(b.root), &self.charge(a.root));
            if c.is_positive() {
                Ordering::Greater
            } else if c.is_negative() {
                Ordering::Less
            } else {
                Ordering::Equal
            }
        })
    }

    /// JSON form `{"n": n, "vectors": [["x", "y"], ...]}`; coordinates may be
    /// integers or rational strings such as `"3/2"`.
    pub fn from_json(v: &Value) -> Result<Self> {
        let bad = |m: &str| Error::Charge(m.to_string());
        let n = v.get("n").and_then(|x| x.as_u64()).ok_or_else(|| bad("missing n"))? as usize;
        let arr = v.get("vectors").and_then(|x| x.as_array()).ok_or_else(|| bad("missing vectors"))?;
        let coord = |c: &Value| -> Result<Q> {
            match c {
                Value::Number(x) => x.as_i64().map(q).ok_or_else(|| bad("coordinates must be integers or strings")),
                Value::String(s) => s.trim().parse::<Q>().map_err(|_| bad(&format!("bad rational '{s}'"))),
                _ => Err(bad("bad coordinate")),
            }
        };
        let mut vectors = Vec::new();
        for p in arr {
            let pair = p.as_array().filter(|a| a.len() == 2).ok_or_else(|| bad("each vector needs two coordinates"))?;
            vectors.push((coord(&pair[0])?, coord(&pair[1])?));
        }
        Self::new(n, vectors)
    }

    pub fn to_json(&self) -> Value {
        json!({
            "n": self.n,
            "vectors": self.vectors.iter().map(|(x, y)| json!([x.to_string(), y.to_string()])).collect::<Vec<_>>()
        })
    }

    pub fn load(path: &FsPath) -> Result<Self> {
        let text = std::fs::read_to_string(path).map_err(|e| Error::Charge(format!("{}: {e}", path.display())))?;
        let v: Value = serde_json::from_str(&text).map_err(|e| Error::Charge(format!("{}: {e}", path.display())))?;
        Self::from_json(&v)
    }
}

/// Phase `phi(root) + shift` with `phi(root)` in (0, 1).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Phase {
    pub root: Root,
    pub shift: i64,
}

impl Phase {
    /// Phase of `{k}<l>` applied to an object of this phase.
    pub fn shifted(&self, k: i32, l: i32) -> Phase {
        Phase { root: self.root, shift: self.shift - k as i64 - l as i64 }
    }
}

/// `w . S_source = S'_target{k}<l>` for a transport by `w`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Move {
    pub source: Root,
    pub target: Root,
    pub k: i32,
    pub l: i32,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Stable {
    pub label: Root,
    pub object: ProjComplex,
    pub phase: Phase,
}

#[derive(Clone, Debug, PartialEq)]
pub struct StableBasis {
    n: usize,
    /// Word carrying `tau_0` to this condition.
    word: BraidWord,
    /// `Some(k)` if the stables are those of `tau_k`.
    tau_class: Option<usize>,
    members: Vec<Stable>,
}

/// The complex `P^k_ij` (for `k = 0` or `k = n` this is `P_ij`).
pub fn tau_k_complex(n: usize, k: usize, i: usize, j: usize) -> Result<ProjComplex> {
    if i == 0 || i >= j || j > n + 1 {
        return Err(Error::Invalid(format!("no root ({i},{j}) for n = {n}")));
    }
    if k > n {
        return Err(Error::Invalid(format!("tau index {k} out of range for n = {n}")));
    }
    let verts: Vec<usize> = (i..j).collect();
    let bent = k >= 1 && i <= k && j >= k + 2;
    let mut deg: BTreeMap<usize, i32> = BTreeMap::new();
    if bent {
        let top = if j >= k + 3 { -1 } else { 0 };
        let d = if j >= k + 3 { top - (j as i32 - k as i32 - 3) } else { 0 };
        for &s in &verts {
            let v = if s <= k { d - (k - s) as i32 } else { d + s as i32 - k as i32 - 2 };
            deg.insert(s, v);
        }
    } else {
        for &s in &verts {
            deg.insert(s, s as i32 - j as i32 + 1);
        }
    }
    let lo = *deg.values().min().unwrap();
    let hi = *deg.values().max().unwrap();
    let mut terms: Vec<Vec<Summand>> = vec![Vec::new(); (hi - lo + 1) as usize];
    for (&s, &m) in &deg {
        terms[(m - lo) as usize].push(Summand::new(s, -m));
    }
    let mut diffs = Vec::new();
    for m in lo..hi {
        let src = &terms[(m - lo) as usize];
        let tgt = &terms[(m - lo + 1) as usize];
        let mut d = zeros(tgt.len(), src.len());
        for (c, sc) in src.iter().enumerate() {
            for (r, sr) in tgt.iter().enumerate() {
                if sc.vertex.abs_diff(sr.vertex) == 1 && link(sc, sr).is_some() {
                    d[r][c] = q(1);
                }
            }
        }
        diffs.push(d);
    }
    ProjComplex::from_parts(n, lo, terms, diffs)
}

/// Finds `(k, l)` with `x = s{k}<l>` up to isomorphism; `x` must be reduced.
pub fn find_shift(x: &ProjComplex, s: &ProjComplex) -> Option<(i32, i32)> {
    let xm = x.summand_multiset();
    let sm = s.summand_multiset();
    if xm.len() != sm.len() || xm.is_empty() {
        return None;
    }
    let first = xm[0];
    let mut tried = Vec::new();
    for &(m, v, l) in &sm {
        if v != first.1 {
            continue;
        }
        let (k, dl) = (first.0 - m, first.2 - l);
        if tried.contains(&(k, dl)) {
            continue;
        }
        tried.push((k, dl));
        let mut shifted: Vec<_> = sm.iter().map(|&(a, b, c)| (a + k, b, c + dl)).collect();
        shifted.sort();
        if shifted != xm {
            continue;
        }
        if find_isomorphism(x, &s.shift(k, dl)).is_some() {
            return Some((k, dl));
        }
    }
    None
}

impl StableBasis {
    /// The reference stables of `tau_0` with phases `phi_ij`.
    pub fn tau0(n: usize) -> Result<Self> {
        let members = roots(n)
            .into_iter()
            .map(|r| {
                Ok(Stable { label: r, object: tau_k_complex(n, 0, r.0, r.1)?, phase: Phase { root: r, shift: 0 } })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Self { n, word: BraidWord::empty(n), tau_class: Some(0), members })
    }

    /// Stables of `tau_k`, reached from `tau_0` by `s_k^-1 ... s_1^-1`.
    pub fn tau_k(n: usize, k: usize) -> Result<Self> {
        if k > n {
            return Err(Error::Invalid(format!("tau index {k} out of range for n = {n}")));
        }
        let t0 = Self::tau0(n)?;
        if k == 0 {
            return Ok(t0);
        }
        t0.transport(&tau_k_word(n, k))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn word(&self) -> &BraidWord {
        &self.word
    }

    pub fn tau_class(&self) -> Option<usize> {
        self.tau_class
    }

    pub fn members(&self) -> &[Stable] {
        &self.members
    }

    pub fn member(&self, r: Root) -> Option<&Stable> {
        self.members.iter().find(|s| s.label == r)
    }

    /// Basis of `w . tau`, normalized canonically.
    pub fn transport(&self, w: &BraidWord) -> Result<Self> {
        Ok(self.transport_with_moves(w)?.0)
    }

    /// Like `transport`, also returning where each member lands.
    pub fn transport_with_moves(&self, w: &BraidWord) -> Result<(Self, Vec<Move>)> {
        let n = self.n;
        let mut images = Vec::new();
        for s in &self.members {
            let img = apply_word(w, &s.object)?;
            let (label, _) = root_from_vector(&img.root_vector())
                .ok_or_else(|| Error::Identify(format!("image of {:?} has no root class", s.label)))?;
            images.push((s, img, label));
        }
        let mut class = None;
        'k: for k in 0..n {
            let mut found = Vec::new();
            for (_, img, label) in &images {
                let target = tau_k_complex(n, k, label.0, label.1)?;
                match find_shift(img, &target) {
                    Some(sh) => found.push((target, sh)),
                    None => continue 'k,
                }
            }
            class = Some((k, found));
            break;
        }
        let mut members = Vec::new();
        let mut moves = Vec::new();
        match class {
            Some((_, found)) => {
                for ((s, _, label), (obj, (k, l))) in images.iter().zip(found) {
                    members.push(Stable { label: *label, object: obj, phase: s.phase.shifted(-k, -l) });
                    moves.push(Move { source: s.label, target: *label, k, l });
                }
            }
            None => {
                for (s, img, label) in &images {
                    let (_, top) = img.support().expect("nonzero image");
                    let ql = img.term(top).iter().map(|x| x.q).max().unwrap();
                    let obj = img.shift(-top, -ql);
                    members.push(Stable { label: *label, object: obj, phase: s.phase.shifted(-top, -ql) });
                    moves.push(Move { source: s.label, target: *label, k: top, l: ql });
                }
            }
        }
        members.sort_by_key(|s| s.label);
        for pair in members.windows(2) {
            if pair[0].label == pair[1].label {
                return Err(Error::Identify(format!("two stables share the root {:?}", pair[0].label)));
            }
        }
        let basis = Self { n, word: w.then_after(&self.word), tau_class: class_index(&members, n), members };
        Ok((basis, moves))
    }

    /// True if both bases have the same labelled stables up to isomorphism.
    pub fn same_stables(&self, o: &StableBasis) -> bool {
        self.n == o.n
            && self.members.len() == o.members.len()
            && self.members.iter().zip(&o.members).all(|(a, b)| {
                a.label == b.label
                    && a.object.summand_multiset() == b.object.summand_multiset()
                    && find_isomorphism(&a.object, &b.object).is_some()
            })
    }

    /// `(label, k, l)` with `x = S_label{k}<l>`, if `x` is a shifted member.
    pub fn identify(&self, x: &ProjComplex) -> Option<(Root, i32, i32)> {
        let x = reduce(x);
        let rv = root_from_vector(&x.root_vector())?;
        let s = self.member(rv.0)?;
        find_shift(&x, &s.object).map(|(k, l)| (s.label, k, l))
    }
}

fn class_index(members: &[Stable], n: usize) -> Option<usize> {
    (0..n).find(|&k| members.iter().all(|s| tau_k_complex(n, k, s.label.0, s.label.1).is_ok_and(|t| t == s.object)))
}

/// `s_k^-1 ... s_1^-1`.
pub fn tau_k_word(n: usize, k: usize) -> BraidWord {
    BraidWord::new(n, (1..=k).rev().map(|i| (i, -1)).collect()).expect("valid generators")
}

/// `(label, k, l)` with `x = S_label{k}<l>` for some member of `basis`.
pub fn identify_stable(x: &ProjComplex, basis: &StableBasis) -> Option<(Root, i32, i32)> {
    basis.identify(x)
}

#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct MassVector {
    pub refined: BTreeMap<(Root, i32, i32), usize>,
    pub aggregated: BTreeMap<Root, usize>,
}

impl MassVector {
    pub fn add(&self, o: &MassVector) -> MassVector {
        let mut out = self.clone();
        for (k, v) in &o.refined {
            *out.refined.entry(*k).or_default() += v;
        }
        for (k, v) in &o.aggregated {
            *out.aggregated.entry(*k).or_default() += v;
        }
        out
    }

    pub fn total(&self) -> usize {
        self.aggregated.values().sum()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Piece {
    pub label: Root,
    pub k: i32,
    pub l: i32,
    pub phase: Phase,
}

#[derive(Clone, Debug)]
pub struct HNResult {
    /// Extracted stables in order of extraction (non-increasing phase).
    pub pieces: Vec<Piece>,
    pub mass: MassVector,
    pub k0: BTreeMap<Root, LaurentQT>,
}

impl HNResult {
    fn from_pieces(pieces: Vec<Piece>) -> Self {
        let mut mass = MassVector::default();
        let mut k0: BTreeMap<Root, LaurentQT> = BTreeMap::new();
        for p in &pieces {
            *mass.refined.entry((p.label, p.k, p.l)).or_default() += 1;
            *mass.aggregated.entry(p.label).or_default() += 1;
            let e = k0.entry(p.label).or_insert_with(LaurentQT::zero);
            *e = &*e + &LaurentQT::monomial(1, p.l, p.k);
        }
        k0.retain(|_, v| !v.is_zero());
        Self { pieces, mass, k0 }
    }

    pub fn to_json(&self) -> Value {
        json!({
            "stables": self.pieces.iter().map(|p| json!({
                "root": [p.label.0, p.label.1], "k": p.k, "l": p.l,
                "phase": {"root": [p.phase.root.0, p.phase.root.1], "shift": p.phase.shift}
            })).collect::<Vec<_>>(),
            "mass": self.mass.aggregated.iter().map(|(r, m)| json!({"root": [r.0, r.1], "multiplicity": m})).collect::<Vec<_>>(),
            "k0": self.k0.iter().map(|(r, c)| json!({"root": [r.0, r.1], "class": c.to_text()})).collect::<Vec<_>>(),
        })
    }
}

/// A stability condition: stables with phases plus the charge data ordering them.
#[derive(Clone, Debug)]
pub struct Condition {
    pub basis: StableBasis,
    pub charges: ChargeParams,
}

impl Condition {
    pub fn new(basis: StableBasis, charges: ChargeParams) -> Result<Self> {
        if basis.n != charges.n {
            return Err(Error::Rank(basis.n, charges.n));
        }
        Ok(Self { basis, charges })
    }

    pub fn tau0(n: usize) -> Result<Self> {
        Self::new(StableBasis::tau0(n)?, ChargeParams::default_for(n))
    }

    /// Shifted stables `S{k}<l>` that could map nontrivially to `x`, sorted by
    /// decreasing phase (ties broken by label and shifts).
    pub fn candidates(&self, x: &ProjComplex) -> Vec<(usize, i32, i32, Phase)> {
        let mut out = Vec::new();
        for (idx, s) in self.basis.members.iter().enumerate() {
            for (m, v, ql) in x.summand_multiset() {
                for (m2, v2, q2) in s.object.summand_multiset() {
                    for d in 0..=2 {
                        let l = ql + d - q2;
                        if link(&Summand::new(v2, q2 + l), &Summand::new(v, ql)).is_some() {
                            let k = m - m2;
                            let key = (idx, k, l, s.phase.shifted(k, l));
                            if !out.contains(&key) {
                                out.push(key);
                            }
                        }
                    }
                }
            }
        }
        out.sort_by(|a, b| self.charges.cmp_phase(&b.3, &a.3).then_with(|| (a.0, a.1, a.2).cmp(&(b.0, b.1, b.2))));
        out
    }

    /// Greedy Harder-Narasimhan extraction.
    pub fn hn(&self, x: &ProjComplex) -> Result<HNResult> {
        let mut cur = reduce(x);
        let cap = 4 * cur.num_summands() + 4;
        let mut pieces = Vec::new();
        while !cur.is_zero() {
            if pieces.len() >= cap {
                return Err(Error::IterationCap(cap));
            }
            let mut step = None;
            for (idx, k, l, phase) in self.candidates(&cur) {
                let s = &self.basis.members[idx];
                let src = s.object.shift(k, l);
                let h = hom(&src, &cur, 0, 0);
                if let Some(f) = h.basis.into_iter().next() {
                    step = Some((Piece { label: s.label, k, l, phase }, f));
                    break;
                }
            }
            let (piece, f) = step.ok_or_else(|| Error::Identify("no stable maps to the remaining object".into()))?;
            cur = reduce(&cone(&f).object);
            pieces.push(piece);
        }
        Ok(HNResult::from_pieces(pieces))
    }

    pub fn mass(&self, x: &ProjComplex) -> Result<MassVector> {
        Ok(self.hn(x)?.mass)
    }

    /// Thin-triangle class: `sum t^k q^l alpha` over the extracted stables.
    pub fn k0_class(&self, x: &ProjComplex) -> Result<BTreeMap<Root, LaurentQT>> {
        Ok(self.hn(x)?.k0)
    }

    /// Whether `A -> B -> Cone(f)` is thin (aggregated masses add).
    pub fn thin_check(&self, f: &ChainMap) -> Result<bool> {
        let c = cone(f).object;
        Ok(self.is_thin(&f.source, &f.target, &c)?.aggregated)
    }

    /// Aggregated and refined additivity for a triangle `A -> B -> C`.
    pub fn is_thin(&self, a: &ProjComplex, b: &ProjComplex, c: &ProjComplex) -> Result<Thinness> {
        let (ma, mb, mc) = (self.mass(a)?, self.mass(b)?, self.mass(c)?);
        let sum = ma.add(&mc);
        Ok(Thinness { aggregated: mb.aggregated == sum.aggregated, refined: mb.refined == sum.refined })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Thinness {
    pub aggregated: bool,
    pub refined: bool,
}

/// Classical class recomputed from HN pieces: `sum (-1)^k q^l [S]`.
pub fn classical_from_pieces(basis: &StableBasis, pieces: &[Piece]) -> Vec<LaurentQT> {
    let n = basis.n;
    let mut out = vec![LaurentQT::zero(); n];
    for p in pieces {
        let s = basis.member(p.label).expect("piece label in basis");
        let cls = s.object.shift(p.k, p.l).classical_class();
        for i in 0..n {
            out[i] = &out[i] + &cls[i];
        }
    }
    out
}

/// Sum of integer multiples of basis maps; used to sample morphisms.
pub fn combine(maps: &[ChainMap], coeffs: &[i64], source: &ProjComplex, target: &ProjComplex) -> ChainMap {
    let mut f = ChainMap::zero(source.clone(), target.clone());
    for (m, &c) in maps.iter().zip(coeffs) {
        if c != 0 {
            f = f.add(&m.scale(&q(c))).expect("maps share source and target");
        }
    }
    f
}
