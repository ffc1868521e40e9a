//! Minimal models, morphism spaces in the homotopy category and isomorphism tests.

use std::collections::{BTreeMap, HashMap};

use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::complex::{link, mu, ChainMap, ProjComplex, Summand};
use crate::linalg::{self, q, zeros, QMat, Q};

/// Result of Gaussian elimination together with the homotopy equivalences.
#[derive(Clone, Debug)]
pub struct Reduction {
    pub object: ProjComplex,
    /// `X -> reduce(X)`.
    pub to_reduced: ChainMap,
    /// `reduce(X) -> X`.
    pub from_reduced: ChainMap,
}

struct Work {
    lo: i32,
    terms: Vec<Vec<Summand>>,
    diffs: Vec<QMat>,
}

impl Work {
    fn new(x: &ProjComplex) -> Self {
        let lo = x.support().map_or(0, |s| s.0);
        let terms: Vec<Vec<Summand>> = x.degrees().map(|m| x.term(m).to_vec()).collect();
        let diffs = (0..terms.len().saturating_sub(1)).map(|t| x.diff(lo + t as i32)).collect();
        Self { lo, terms, diffs }
    }

    /// First invertible entry, scanning lowest degree first, then columns, then rows.
    fn pivot(&self) -> Option<(usize, usize, usize)> {
        for (t, d) in self.diffs.iter().enumerate() {
            for (c, sc) in self.terms[t].iter().enumerate() {
                for (r, sr) in self.terms[t + 1].iter().enumerate() {
                    if sc == sr && !d[r][c].is_zero() {
                        return Some((t, r, c));
                    }
                }
            }
        }
        None
    }
}

pub fn reduce(x: &ProjComplex) -> ProjComplex {
    reduce_impl(x, false).0
}

/// Gaussian elimination keeping track of the equivalence maps.
pub fn reduce_with_maps(x: &ProjComplex) -> Reduction {
    let (object, maps) = reduce_impl(x, true);
    let (f, g) = maps.unwrap();
    let to_reduced = ChainMap::new_unchecked(x.clone(), object.clone(), f);
    let from_reduced = ChainMap::new_unchecked(object.clone(), x.clone(), g);
    Reduction { object, to_reduced, from_reduced }
}

type Maps = (BTreeMap<i32, QMat>, BTreeMap<i32, QMat>);

fn reduce_impl(x: &ProjComplex, track: bool) -> (ProjComplex, Option<Maps>) {
    let mut w = Work::new(x);
    let orig: Vec<Vec<Summand>> = w.terms.clone();
    let mut fmaps: Vec<QMat> = Vec::new();
    let mut gmaps: Vec<QMat> = Vec::new();
    if track {
        for t in &w.terms {
            let k = t.len();
            let mut id = zeros(k, k);
            for (i, row) in id.iter_mut().enumerate() {
                row[i] = Q::one();
            }
            fmaps.push(id.clone());
            gmaps.push(id);
        }
    }
    while let Some((t, r, c)) = w.pivot() {
        let d = &w.diffs[t];
        let a_inv = Q::one() / &d[r][c];
        let piv = w.terms[t][c];
        let src = &w.terms[t];
        let tgt = &w.terms[t + 1];
        let b: Vec<Q> = d[r].clone();
        let gam: Vec<Q> = d.iter().map(|row| row[c].clone()).collect();
        let mut nd = Vec::with_capacity(tgt.len() - 1);
        for (y, ty) in tgt.iter().enumerate() {
            if y == r {
                continue;
            }
            let mut row = Vec::with_capacity(src.len() - 1);
            for (xi, sx) in src.iter().enumerate() {
                if xi == c {
                    continue;
                }
                let mut v = d[y][xi].clone();
                if !gam[y].is_zero() && !b[xi].is_zero() && mu(sx, &piv, ty) {
                    v -= &gam[y] * &b[xi] * &a_inv;
                }
                row.push(v);
            }
            nd.push(row);
        }
        if track {
            // F at t+1: rows y get -gam[y]/a times row r, then row r is dropped
            let fo = &orig[t + 1];
            let fm = &mut fmaps[t + 1];
            for (y, ty) in tgt.iter().enumerate() {
                if y == r || gam[y].is_zero() {
                    continue;
                }
                let coef = -&gam[y] * &a_inv;
                for (s, ss) in fo.iter().enumerate() {
                    if !fm[r][s].is_zero() && mu(ss, &tgt[r], ty) {
                        let add = &coef * &fm[r][s];
                        fm[y][s] += add;
                    }
                }
            }
            fm.remove(r);
            fmaps[t].remove(c);
            // G at t: column x gets -b[x]/a times column c, then column c is dropped
            let go = &orig[t];
            let gm = &mut gmaps[t];
            for (xi, sx) in src.iter().enumerate() {
                if xi == c || b[xi].is_zero() {
                    continue;
                }
                let coef = -&b[xi] * &a_inv;
                for (o, so) in go.iter().enumerate() {
                    if !gm[o][c].is_zero() && mu(sx, &piv, so) {
                        let add = &coef * &gm[o][c];
                        gm[o][xi] += add;
                    }
                }
            }
            for row in gm.iter_mut() {
                row.remove(c);
            }
            for row in gmaps[t + 1].iter_mut() {
                row.remove(r);
            }
        }
        w.diffs[t] = nd;
        if t > 0 {
            w.diffs[t - 1].remove(c);
        }
        if t + 1 < w.diffs.len() {
            for row in w.diffs[t + 1].iter_mut() {
                row.remove(r);
            }
        }
        w.terms[t].remove(c);
        w.terms[t + 1].remove(r);
    }
    let n = x.n();
    let lo = w.lo;
    let object = ProjComplex::from_parts_unchecked(n, lo, w.terms, w.diffs);
    let maps = track.then(|| {
        let f = fmaps.into_iter().enumerate().map(|(t, m)| (lo + t as i32, m)).collect();
        let g = gmaps.into_iter().enumerate().map(|(t, m)| (lo + t as i32, m)).collect();
        (f, g)
    });
    (object, maps)
}

/// True if no differential entry is an isomorphism between equal summands.
pub fn is_minimal(x: &ProjComplex) -> bool {
    Work::new(x).pivot().is_none()
}

/// Morphisms `X -> Y{k}<l>` modulo null-homotopic ones.
#[derive(Clone, Debug)]
pub struct HomSpace {
    pub k: i32,
    pub l: i32,
    pub dim: usize,
    /// Chain maps `X -> Y{k}<l>` whose classes form a basis.
    pub basis: Vec<ChainMap>,
}

type Var = (i32, usize, usize);

fn map_vars(x: &ProjComplex, y: &ProjComplex, offset: i32) -> Vec<Var> {
    // components X^m -> Y^(m - offset)
    let mut vars = Vec::new();
    for m in x.degrees() {
        let tgt = y.term(m - offset);
        for (s, ss) in x.term(m).iter().enumerate() {
            for (t, ts) in tgt.iter().enumerate() {
                if link(ss, ts).is_some() {
                    vars.push((m, t, s));
                }
            }
        }
    }
    vars
}

/// Basis of the space of all degree-preserving chain maps `X -> Y`.
fn cycle_space(x: &ProjComplex, y: &ProjComplex) -> (Vec<Var>, Vec<Vec<Q>>) {
    let vars = map_vars(x, y, 0);
    let index: HashMap<Var, usize> = vars.iter().enumerate().map(|(i, v)| (*v, i)).collect();
    let mut rows: QMat = Vec::new();
    let lo = x.support().map_or(0, |s| s.0).min(y.support().map_or(0, |s| s.0)) - 1;
    let hi = x.support().map_or(0, |s| s.1).max(y.support().map_or(0, |s| s.1));
    for m in lo..=hi {
        let xs = x.term(m);
        let xs1 = x.term(m + 1);
        let ys = y.term(m);
        let ys1 = y.term(m + 1);
        let dx = x.diff_ref(m);
        let dy = y.diff_ref(m);
        for (s, ss) in xs.iter().enumerate() {
            for (u, us) in ys1.iter().enumerate() {
                if link(ss, us).is_none() {
                    continue;
                }
                let mut row = vec![Q::zero(); vars.len()];
                let mut any = false;
                if let Some(dx) = dx {
                    for (t, ts) in xs1.iter().enumerate() {
                        if !dx[t][s].is_zero() && mu(ss, ts, us) {
                            if let Some(&i) = index.get(&(m + 1, u, t)) {
                                row[i] += &dx[t][s];
                                any = true;
                            }
                        }
                    }
                }
                if let Some(dy) = dy {
                    for (t, ts) in ys.iter().enumerate() {
                        if !dy[u][t].is_zero() && mu(ss, ts, us) {
                            if let Some(&i) = index.get(&(m, t, s)) {
                                row[i] -= &dy[u][t];
                                any = true;
                            }
                        }
                    }
                }
                if any {
                    rows.push(row);
                }
            }
        }
    }
    let ns = linalg::nullspace(&rows, vars.len());
    (vars, ns)
}

fn boundary_vectors(x: &ProjComplex, y: &ProjComplex, vars: &[Var]) -> Vec<Vec<Q>> {
    let index: HashMap<Var, usize> = vars.iter().enumerate().map(|(i, v)| (*v, i)).collect();
    let mut out = Vec::new();
    for (m, t, s) in map_vars(x, y, 1) {
        // h: X^m -> Y^(m-1), entry (t, s)
        let ss = x.term(m)[s];
        let ts = y.term(m - 1)[t];
        let mut v = vec![Q::zero(); vars.len()];
        if let Some(dy) = y.diff_ref(m - 1) {
            for (u, us) in y.term(m).iter().enumerate() {
                if !dy[u][t].is_zero() && mu(&ss, &ts, us) {
                    if let Some(&i) = index.get(&(m, u, s)) {
                        v[i] += &dy[u][t];
                    }
                }
            }
        }
        if let Some(dx) = x.diff_ref(m - 1) {
            for (s2, ss2) in x.term(m - 1).iter().enumerate() {
                if !dx[s][s2].is_zero() && mu(ss2, &ss, &ts) {
                    if let Some(&i) = index.get(&(m - 1, t, s2)) {
                        v[i] += &dx[s][s2];
                    }
                }
            }
        }
        if v.iter().any(|c| !c.is_zero()) {
            out.push(v);
        }
    }
    out
}

fn vector_to_map(x: &ProjComplex, y: &ProjComplex, vars: &[Var], v: &[Q]) -> ChainMap {
    let mut comps: BTreeMap<i32, QMat> = BTreeMap::new();
    for (&(m, t, s), c) in vars.iter().zip(v) {
        if c.is_zero() {
            continue;
        }
        let e = comps.entry(m).or_insert_with(|| zeros(y.term(m).len(), x.term(m).len()));
        e[t][s] = c.clone();
    }
    ChainMap::new_unchecked(x.clone(), y.clone(), comps)
}

/// All chain maps `X -> Y` of bidegree (0, 0), as a basis.
pub fn chain_maps(x: &ProjComplex, y: &ProjComplex) -> Vec<ChainMap> {
    let (vars, ns) = cycle_space(x, y);
    ns.iter().map(|v| vector_to_map(x, y, &vars, v)).collect()
}

/// Graded morphism space `Hom(X, Y{k}<l>)` in the homotopy category.
pub fn hom(x: &ProjComplex, y: &ProjComplex, k: i32, l: i32) -> HomSpace {
    let ys = y.shift(k, l);
    let (vars, cycles) = cycle_space(x, &ys);
    if cycles.is_empty() {
        return HomSpace { k, l, dim: 0, basis: Vec::new() };
    }
    let bounds = boundary_vectors(x, &ys, &vars);
    let chosen = linalg::extend_basis(&bounds, &cycles);
    let basis = chosen.iter().map(|&i| vector_to_map(x, &ys, &vars, &cycles[i])).collect::<Vec<_>>();
    HomSpace { k, l, dim: basis.len(), basis }
}

/// True if `f` is null-homotopic.
pub fn is_null_homotopic(f: &ChainMap) -> bool {
    let (x, y) = (&f.source, &f.target);
    let vars = map_vars(x, y, 0);
    let bounds = boundary_vectors(x, y, &vars);
    let v: Vec<Q> = vars.iter().map(|&(m, t, s)| f.comps().get(&m).map_or_else(Q::zero, |c| c[t][s].clone())).collect();
    if v.iter().all(|c| c.is_zero()) {
        return true;
    }
    linalg::extend_basis(&bounds, &[v]).is_empty()
}

/// Degree-zero part of a component: entries between identical summands.
fn degree_zero_block(c: &QMat, src: &[Summand], tgt: &[Summand]) -> QMat {
    let mut out = zeros(tgt.len(), src.len());
    for (r, ts) in tgt.iter().enumerate() {
        for (col, ss) in src.iter().enumerate() {
            if ts == ss {
                out[r][col] = c[r][col].clone();
            }
        }
    }
    out
}

/// True if `f` is an isomorphism of complexes.
pub fn is_iso_map(f: &ChainMap) -> bool {
    if f.source.summand_multiset() != f.target.summand_multiset() {
        return false;
    }
    f.source.degrees().all(|m| {
        let block = degree_zero_block(&f.comp(m), f.source.term(m), f.target.term(m));
        linalg::is_invertible(&block)
    })
}

/// Finds an isomorphism between two minimal complexes, if one exists.
pub fn find_isomorphism(x: &ProjComplex, y: &ProjComplex) -> Option<ChainMap> {
    if x.n() != y.n() || x.summand_multiset() != y.summand_multiset() {
        return None;
    }
    if x.is_zero() {
        return Some(ChainMap::zero(x.clone(), y.clone()));
    }
    if x == y {
        return Some(ChainMap::identity(x));
    }
    let basis = chain_maps(x, y);
    if basis.is_empty() {
        return None;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    for _ in 0..6 {
        let mut f = ChainMap::zero(x.clone(), y.clone());
        for b in &basis {
            let c: i64 = rng.gen_range(-97..=97);
            f = f.add(&b.scale(&q(c))).expect("same source and target");
        }
        if is_iso_map(&f) {
            return Some(f);
        }
    }
    None
}

/// Isomorphism in the homotopy category; both sides are reduced first.
pub fn is_isomorphic(x: &ProjComplex, y: &ProjComplex) -> bool {
    let (rx, ry) = (reduce(x), reduce(y));
    find_isomorphism(&rx, &ry).is_some()
}
