//! Sampling of thin triangles and closure checks for the thin-triangle structure.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::braid::{apply_word, BraidWord};
use crate::complex::{cone, ChainMap, ProjComplex};
use crate::error::Result;
use crate::homotopy::{hom, reduce, reduce_with_maps};
use crate::stability::{combine, Condition, MassVector};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum TriangleKind {
    HnStep,
    Split,
    RandomCone,
}

/// The triangle `A -> B -> Cone(f)` of a map `f: A -> B`.
#[derive(Clone, Debug)]
pub struct Triangle {
    pub map: ChainMap,
    pub kind: TriangleKind,
}

impl Triangle {
    pub fn third(&self) -> ProjComplex {
        reduce(&cone(&self.map).object)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Outcome {
    Pass,
    Fail(String),
    PreconditionViolated,
}

fn masses_add(b: &MassVector, a: &MassVector, c: &MassVector) -> bool {
    b.aggregated == a.add(c).aggregated
}

fn describe(x: &ProjComplex) -> String {
    x.to_string()
}

/// Pushout along `g: A -> A'` of a thin `A -> B -> C`: checks `A' -> B' -> C` is thin.
pub fn check_et1(cond: &Condition, f: &ChainMap, g: &ChainMap) -> Result<Outcome> {
    let c = cone(f);
    if !cond.is_thin(&f.source, &f.target, &c.object)?.aggregated {
        return Ok(Outcome::PreconditionViolated);
    }
    let delta = c.projection.then(&g.shift(-1, 0))?;
    let b2 = reduce(&cone(&delta).object.shift(1, 0));
    let (ma, mb, mc) = (cond.mass(&g.target)?, cond.mass(&b2)?, cond.mass(&c.object)?);
    if masses_add(&mb, &ma, &mc) {
        Ok(Outcome::Pass)
    } else {
        Ok(Outcome::Fail(format!(
            "A = {}, B = {}, A' = {}, B' = {}",
            describe(&f.source),
            describe(&f.target),
            describe(&g.target),
            describe(&b2)
        )))
    }
}

/// Octahedral closure for thin `X -> Y -> Z'` and `Y -> Z -> X'` with `Y' = Cone(g f)`.
pub fn check_et4(cond: &Condition, f: &ChainMap, g: &ChainMap) -> Result<Outcome> {
    let z1 = cone(f).object;
    let x1 = cone(g).object;
    if !cond.is_thin(&f.source, &f.target, &z1)?.aggregated || !cond.is_thin(&g.source, &g.target, &x1)?.aggregated {
        return Ok(Outcome::PreconditionViolated);
    }
    let gf = f.then(g)?;
    let y1 = reduce(&cone(&gf).object);
    let (mx, mz, my1) = (cond.mass(&f.source)?, cond.mass(&g.target)?, cond.mass(&y1)?);
    let (mz1, mx1) = (cond.mass(&z1)?, cond.mass(&x1)?);
    let first = masses_add(&mz, &mx, &my1);
    let second = masses_add(&my1, &mz1, &mx1);
    if first && second {
        Ok(Outcome::Pass)
    } else {
        Ok(Outcome::Fail(format!(
            "X = {}, Y = {}, Z = {}, Y' = {} (X->Z->Y' thin: {first}, Z'->Y'->X' thin: {second})",
            describe(&f.source),
            describe(&f.target),
            describe(&g.target),
            describe(&y1)
        )))
    }
}

/// Deterministic random source of small objects, maps and thin triangles.
pub struct Sampler<'a> {
    cond: &'a Condition,
    rng: ChaCha8Rng,
    max_summands: usize,
}

impl<'a> Sampler<'a> {
    pub fn new(cond: &'a Condition, seed: u64, max_summands: usize) -> Self {
        Self { cond, rng: ChaCha8Rng::seed_from_u64(seed), max_summands }
    }

    fn shifted_stable(&mut self) -> ProjComplex {
        let members = self.cond.basis.members();
        let s = &members[self.rng.gen_range(0..members.len())];
        let k = self.rng.gen_range(-1..=1);
        let l = self.rng.gen_range(-1..=1);
        s.object.shift(k, l)
    }

    /// A nonzero reduced object with at most `max_summands` summands.
    pub fn object(&mut self) -> Result<ProjComplex> {
        let n = self.cond.basis.n();
        loop {
            let x = match self.rng.gen_range(0..3) {
                0 => self.shifted_stable(),
                1 => {
                    let w = BraidWord::random(n, 3, &mut self.rng);
                    apply_word(&w, &self.shifted_stable())?
                }
                _ => {
                    let a = self.shifted_stable();
                    let b = self.shifted_stable();
                    a.direct_sum(&b)?
                }
            };
            let x = reduce(&x);
            if !x.is_zero() && x.num_summands() <= self.max_summands {
                return Ok(x);
            }
        }
    }

    /// A random integer combination of a basis of `Hom(a, b)`; `None` if that space is zero.
    pub fn map(&mut self, a: &ProjComplex, b: &ProjComplex) -> Option<ChainMap> {
        let h = hom(a, b, 0, 0);
        if h.dim == 0 {
            return None;
        }
        loop {
            let coeffs: Vec<i64> = (0..h.dim).map(|_| self.rng.gen_range(-3..=3)).collect();
            if coeffs.iter().any(|&c| c != 0) {
                return Some(combine(&h.basis, &coeffs, a, b));
            }
        }
    }

    fn hn_step(&mut self) -> Result<Option<Triangle>> {
        let x = self.object()?;
        Ok(self.hn_step_of(&x)?.map(|map| Triangle { map, kind: TriangleKind::HnStep }))
    }

    fn split(&mut self) -> Result<Triangle> {
        let a = self.object()?;
        let c = self.object()?;
        let sum = a.direct_sum(&c)?;
        let mut comps = std::collections::BTreeMap::new();
        for m in a.degrees() {
            let na = a.term(m).len();
            let mut block = crate::linalg::zeros(sum.term(m).len(), na);
            for (r, row) in block.iter_mut().enumerate().take(na) {
                row[r] = crate::linalg::q(1);
            }
            comps.insert(m, block);
        }
        let map = ChainMap::new(a, sum, comps)?;
        Ok(Triangle { map, kind: TriangleKind::Split })
    }

    fn random_cone(&mut self) -> Result<Option<Triangle>> {
        let a = self.object()?;
        let b = self.object()?;
        let Some(map) = self.map(&a, &b) else { return Ok(None) };
        if !self.cond.thin_check(&map)? {
            return Ok(None);
        }
        Ok(Some(Triangle { map, kind: TriangleKind::RandomCone }))
    }

    /// `count` thin triangles cycling through HN steps, splits and filtered random cones.
    pub fn thin_triangles(&mut self, count: usize) -> Result<Vec<Triangle>> {
        let mut out = Vec::new();
        let mut attempts = 0;
        while out.len() < count {
            attempts += 1;
            let t = match out.len() % 3 {
                0 => self.hn_step()?,
                1 => Some(self.split()?),
                _ if attempts % 50 == 0 => Some(self.split()?),
                _ => self.random_cone()?,
            };
            if let Some(t) = t {
                out.push(t);
            }
        }
        Ok(out)
    }

    /// First HN step `S -> x` of a reduced object.
    pub fn hn_step_of(&self, x: &ProjComplex) -> Result<Option<ChainMap>> {
        let hn = self.cond.hn(x)?;
        let Some(p) = hn.pieces.first() else { return Ok(None) };
        let s = self.cond.basis.member(p.label).expect("label in basis").object.shift(p.k, p.l);
        Ok(hom(&s, x, 0, 0).basis.into_iter().next())
    }

    /// The map `Y -> z` from the part of the reduced object `z` filtered by its first
    /// `r` HN pieces.
    pub fn hn_sub_inclusion(&self, z: &ProjComplex, r: usize) -> Result<Option<ChainMap>> {
        let hn = self.cond.hn(z)?;
        if r == 0 || r >= hn.pieces.len() {
            return Ok(None);
        }
        let mut cur = z.clone();
        let mut quot = ChainMap::identity(z);
        for p in &hn.pieces[..r] {
            let s = self.cond.basis.member(p.label).expect("label in basis").object.shift(p.k, p.l);
            let Some(f) = hom(&s, &cur, 0, 0).basis.into_iter().next() else { return Ok(None) };
            let c = cone(&f);
            let red = reduce_with_maps(&c.object);
            quot = quot.then(&c.inclusion)?.then(&red.to_reduced)?;
            cur = red.object;
        }
        let c = cone(&quot);
        let red = reduce_with_maps(&c.object.shift(1, 0));
        Ok(Some(red.from_reduced.then(&c.projection.shift(1, 0))?))
    }

    /// Composable thin maps `X -> Y -> Z` taken from an HN filtration of a random `Z`.
    pub fn hn_composable(&mut self, tries: usize) -> Result<Option<(ChainMap, ChainMap)>> {
        for _ in 0..tries {
            let z = self.object()?;
            let len = self.cond.hn(&z)?.pieces.len();
            if len < 2 {
                continue;
            }
            let r = self.rng.gen_range(1..len);
            let Some(g) = self.hn_sub_inclusion(&z, r)? else { continue };
            if let Some(f) = self.hn_step_of(&g.source)? {
                return Ok(Some((f, g)));
            }
        }
        Ok(None)
    }

    /// A map out of `y` whose triangle is thin: random when possible, otherwise a
    /// split inclusion (flagged by the returned boolean).
    pub fn thin_map_from(&mut self, y: &ProjComplex, tries: usize) -> Result<(ChainMap, bool)> {
        for _ in 0..tries {
            let z = self.object()?;
            if let Some(g) = self.map(y, &z) {
                if self.cond.thin_check(&g)? {
                    return Ok((g, false));
                }
            }
        }
        let w = self.object()?;
        let sum = y.direct_sum(&w)?;
        let mut comps = std::collections::BTreeMap::new();
        for m in y.degrees() {
            let ny = y.term(m).len();
            let mut block = crate::linalg::zeros(sum.term(m).len(), ny);
            for (r, row) in block.iter_mut().enumerate().take(ny) {
                row[r] = crate::linalg::q(1);
            }
            comps.insert(m, block);
        }
        Ok((ChainMap::new(y.clone(), sum, comps)?, true))
    }
}

#[derive(Clone, Debug, Default)]
pub struct ExtriangReport {
    pub triangles: usize,
    pub et1_checked: usize,
    pub et4_checked: usize,
    /// Octahedral checks whose second map fell back to a split inclusion.
    pub et4_split: usize,
    pub failures: Vec<String>,
    pub preconditions_violated: usize,
}

impl ExtriangReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Runs both closure checks on `samples` thin triangles.
pub fn extriang_suite(cond: &Condition, samples: usize, seed: u64) -> Result<ExtriangReport> {
    let mut sampler = Sampler::new(cond, seed, 4);
    let tris = sampler.thin_triangles(samples)?;
    let mut rep = ExtriangReport { triangles: tris.len(), ..Default::default() };
    for t in &tris {
        let a2 = sampler.object()?;
        let g = match sampler.map(&t.map.source, &a2) {
            Some(g) => g,
            None => ChainMap::zero(t.map.source.clone(), a2),
        };
        record(&mut rep, check_et1(cond, &t.map, &g)?, true);
        let (g, split) = sampler.thin_map_from(&t.map.target, 4)?;
        rep.et4_split += split as usize;
        record(&mut rep, check_et4(cond, &t.map, &g)?, false);
        if let Some((f, g)) = sampler.hn_composable(8)? {
            record(&mut rep, check_et4(cond, &f, &g)?, false);
        }
    }
    Ok(rep)
}

fn record(rep: &mut ExtriangReport, o: Outcome, et1: bool) {
    let name = if et1 { "pushout closure" } else { "octahedral closure" };
    match o {
        Outcome::Pass => {}
        Outcome::Fail(d) => rep.failures.push(format!("{name}: {d}")),
        Outcome::PreconditionViolated => {
            rep.preconditions_violated += 1;
            return;
        }
    }
    if et1 {
        rep.et1_checked += 1;
    } else {
        rep.et4_checked += 1;
    }
}

#[derive(Clone, Debug, Default)]
pub struct PsiReport {
    pub triangles: usize,
    pub aggregated_failures: Vec<String>,
    pub refined_failures: Vec<String>,
}

/// Additivity of HN multisets over thin triangles, refined (with shifts) and aggregated (per root).
pub fn psi_check(cond: &Condition, tris: &[Triangle]) -> Result<PsiReport> {
    let mut rep = PsiReport { triangles: tris.len(), ..Default::default() };
    for t in tris {
        let c = t.third();
        let th = cond.is_thin(&t.map.source, &t.map.target, &c)?;
        let d = format!("{:?}: {} -> {} -> {}", t.kind, t.map.source, t.map.target, c);
        if !th.aggregated {
            rep.aggregated_failures.push(d.clone());
        }
        if !th.refined {
            rep.refined_failures.push(d);
        }
    }
    Ok(rep)
}
