//! The zigzag algebra of type A_n.
//!
//! Paths are read left to right: `x * y` is nonzero only if `x` ends where `y`
//! starts. `e_i A e_j` is spanned by the paths from `i` to `j`, and a degree
//! zero map `P_j<a> -> P_i<b>` is right multiplication by a path from `j` to
//! `i` of length `a - b`.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Path {
    /// Idempotent `e_i`.
    E(usize),
    /// Arrow from the first vertex to the second.
    A(usize, usize),
    /// Loop `l_i`.
    L(usize),
}

impl Path {
    pub fn source(&self) -> usize {
        match *self {
            Path::E(i) | Path::L(i) | Path::A(i, _) => i,
        }
    }

    pub fn target(&self) -> usize {
        match *self {
            Path::E(i) | Path::L(i) | Path::A(_, i) => i,
        }
    }

    pub fn degree(&self) -> i32 {
        match self {
            Path::E(_) => 0,
            Path::A(..) => 1,
            Path::L(_) => 2,
        }
    }

    /// The dual basis element under the trace pairing `e_i <-> l_i`.
    pub fn dual(&self) -> Path {
        match *self {
            Path::E(i) => Path::L(i),
            Path::L(i) => Path::E(i),
            Path::A(i, j) => Path::A(j, i),
        }
    }

    /// Product of two basis paths, `None` when it vanishes.
    pub fn mul(&self, o: &Path) -> Option<Path> {
        if self.target() != o.source() {
            return None;
        }
        match (*self, *o) {
            (Path::E(_), p) | (p, Path::E(_)) => Some(p),
            (Path::A(i, _), Path::A(_, k)) if i == k => Some(Path::L(i)),
            _ => None,
        }
    }

    pub fn parse(s: &str) -> Result<Path> {
        let bad = || Error::Parse { pos: 0, msg: format!("bad path name '{s}'") };
        let s = s.trim();
        if let Some(rest) = s.strip_prefix('e') {
            return rest.parse().map(Path::E).map_err(|_| bad());
        }
        if let Some(rest) = s.strip_prefix('l') {
            return rest.parse().map(Path::L).map_err(|_| bad());
        }
        let inner = s.strip_prefix("a(").and_then(|r| r.strip_suffix(')')).ok_or_else(bad)?;
        let (a, b) = inner.split_once(',').ok_or_else(bad)?;
        let a: usize = a.trim().parse().map_err(|_| bad())?;
        let b: usize = b.trim().parse().map_err(|_| bad())?;
        if a.abs_diff(b) != 1 {
            return Err(bad());
        }
        Ok(Path::A(a, b))
    }
}

impl fmt::Display for Path {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Path::E(i) => write!(f, "e{i}"),
            Path::A(i, j) => write!(f, "a({i},{j})"),
            Path::L(i) => write!(f, "l{i}"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Zigzag {
    n: usize,
}

impl Zigzag {
    pub fn new(n: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::Invalid(format!("zigzag algebra needs n >= 2, got {n}")));
        }
        Ok(Self { n })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn check_vertex(&self, i: usize) -> Result<()> {
        if i == 0 || i > self.n {
            return Err(Error::Vertex { vertex: i, n: self.n });
        }
        Ok(())
    }

    /// All basis paths.
    pub fn basis(&self) -> Vec<Path> {
        let mut out = Vec::new();
        for i in 1..=self.n {
            out.push(Path::E(i));
            out.push(Path::L(i));
            if i > 1 {
                out.push(Path::A(i, i - 1));
            }
            if i < self.n {
                out.push(Path::A(i, i + 1));
            }
        }
        out.sort();
        out
    }

    /// Basis of `e_i A e_j` in path degree `d`.
    pub fn hom_basis(&self, i: usize, j: usize, d: i32) -> Vec<Path> {
        self.path(i, j, d).into_iter().collect()
    }

    /// The unique basis path from `i` to `j` of length `d`, if any.
    pub fn path(&self, i: usize, j: usize, d: i32) -> Option<Path> {
        if i == 0 || j == 0 || i > self.n || j > self.n {
            return None;
        }
        match d {
            0 if i == j => Some(Path::E(i)),
            1 if i.abs_diff(j) == 1 => Some(Path::A(i, j)),
            2 if i == j => Some(Path::L(i)),
            _ => None,
        }
    }

    /// All basis paths starting at `i`.
    pub fn paths_from(&self, i: usize) -> Vec<Path> {
        self.basis().into_iter().filter(|p| p.source() == i).collect()
    }

    pub fn mul(&self, a: &ZigzagElement, b: &ZigzagElement) -> Result<ZigzagElement> {
        if a.n != self.n || b.n != self.n {
            return Err(Error::Rank(a.n.max(b.n), self.n));
        }
        Ok(a.mul(b))
    }
}

/// Integer combination of basis paths.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct ZigzagElement {
    n: usize,
    terms: BTreeMap<Path, BigInt>,
}

impl ZigzagElement {
    pub fn zero(n: usize) -> Self {
        Self { n, terms: BTreeMap::new() }
    }

    pub fn path(n: usize, p: Path) -> Self {
        Self::scaled(n, p, BigInt::one())
    }

    pub fn scaled(n: usize, p: Path, c: BigInt) -> Self {
        let mut e = Self::zero(n);
        if !c.is_zero() {
            e.terms.insert(p, c);
        }
        e
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Path, &BigInt)> {
        self.terms.iter()
    }

    pub fn coeff(&self, p: &Path) -> BigInt {
        self.terms.get(p).cloned().unwrap_or_default()
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut terms = self.terms.clone();
        for (p, c) in &o.terms {
            *terms.entry(*p).or_default() += c;
        }
        terms.retain(|_, c| !c.is_zero());
        Self { n: self.n.max(o.n), terms }
    }

    pub fn mul(&self, o: &Self) -> Self {
        let mut terms: BTreeMap<Path, BigInt> = BTreeMap::new();
        for (p, a) in &self.terms {
            for (r, b) in &o.terms {
                if let Some(pr) = p.mul(r) {
                    *terms.entry(pr).or_default() += a * b;
                }
            }
        }
        terms.retain(|_, c| !c.is_zero());
        Self { n: self.n, terms }
    }

    /// Degree if homogeneous.
    pub fn degree(&self) -> Option<i32> {
        let mut ds = self.terms.keys().map(|p| p.degree());
        let d = ds.next()?;
        ds.all(|x| x == d).then_some(d)
    }
}

impl fmt::Display for ZigzagElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> =
            self.terms.iter().map(|(p, c)| if c.is_one() { p.to_string() } else { format!("{c}*{p}") }).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn relations() {
        let z = Zigzag::new(3).unwrap();
        let a12 = ZigzagElement::path(3, Path::A(1, 2));
        let a23 = ZigzagElement::path(3, Path::A(2, 3));
        let a21 = ZigzagElement::path(3, Path::A(2, 1));
        let a32 = ZigzagElement::path(3, Path::A(3, 2));
        assert!(z.mul(&a12, &a23).unwrap().is_zero());
        assert_eq!(z.mul(&a12, &a21).unwrap(), ZigzagElement::path(3, Path::L(1)));
        assert_eq!(a21.mul(&a12), a23.mul(&a32));
        let l1 = ZigzagElement::path(3, Path::L(1));
        assert!(l1.mul(&l1).is_zero());
        assert!(z.mul(&ZigzagElement::zero(4), &l1).is_err());
    }

    #[test]
    fn hom_basis_examples() {
        let z = Zigzag::new(3).unwrap();
        assert_eq!(z.hom_basis(1, 1, 0), vec![Path::E(1)]);
        assert_eq!(z.hom_basis(1, 2, 1), vec![Path::A(1, 2)]);
        for d in -2..5 {
            assert!(z.hom_basis(1, 3, d).is_empty());
        }
    }

    #[test]
    fn names_round_trip() {
        for p in Zigzag::new(4).unwrap().basis() {
            assert_eq!(Path::parse(&p.to_string()).unwrap(), p);
        }
        assert!(Path::parse("a(1,3)").is_err());
    }

    #[test]
    fn dual_pairs_into_loop() {
        let z = Zigzag::new(4).unwrap();
        for p in z.basis() {
            assert_eq!(p.mul(&p.dual()), Some(Path::L(p.source())));
        }
    }
}
