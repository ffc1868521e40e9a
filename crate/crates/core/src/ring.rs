//! Laurent polynomials in two variables with integer coefficients, and
//! dense matrices over them.

use std::collections::BTreeMap;
use std::fmt;
use std::marker::PhantomData;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Names of the two variables of a Laurent ring.
pub trait Vars: Clone + fmt::Debug + PartialEq + Eq + Send + Sync + 'static {
    const NAMES: [&'static str; 2];
    const JSON_KEYS: [&'static str; 2];
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QT;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct XY;

impl Vars for QT {
    const NAMES: [&'static str; 2] = ["q", "t"];
    const JSON_KEYS: [&'static str; 2] = ["qexp", "texp"];
}

impl Vars for XY {
    const NAMES: [&'static str; 2] = ["x", "y"];
    const JSON_KEYS: [&'static str; 2] = ["xexp", "yexp"];
}

/// Element of `Z[a^{±1}, b^{±1}]`, stored as exponent pair -> nonzero coefficient.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Laurent2<V: Vars> {
    terms: BTreeMap<(i32, i32), BigInt>,
    _vars: PhantomData<V>,
}

pub type LaurentQT = Laurent2<QT>;
pub type LaurentXY = Laurent2<XY>;

impl<V: Vars> Laurent2<V> {
    pub fn zero() -> Self {
        Self { terms: BTreeMap::new(), _vars: PhantomData }
    }

    pub fn one() -> Self {
        Self::monomial(1, 0, 0)
    }

    pub fn constant(c: i64) -> Self {
        Self::monomial(c, 0, 0)
    }

    pub fn monomial(c: i64, a: i32, b: i32) -> Self {
        Self::from_terms([((a, b), BigInt::from(c))])
    }

    /// The first variable (`q` or `x`).
    pub fn var0() -> Self {
        Self::monomial(1, 1, 0)
    }

    /// The second variable (`t` or `y`).
    pub fn var1() -> Self {
        Self::monomial(1, 0, 1)
    }

    pub fn from_terms<I: IntoIterator<Item = ((i32, i32), BigInt)>>(it: I) -> Self {
        let mut terms: BTreeMap<(i32, i32), BigInt> = BTreeMap::new();
        for (e, c) in it {
            *terms.entry(e).or_insert_with(BigInt::zero) += c;
        }
        terms.retain(|_, c| !c.is_zero());
        Self { terms, _vars: PhantomData }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(i32, i32), &BigInt)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&(0, 0)).is_some_and(|c| c.is_one())
    }

    /// True iff the polynomial is plus or minus a single monomial.
    pub fn is_unit(&self) -> bool {
        self.terms.len() == 1 && self.terms.values().all(|c| c.abs().is_one())
    }

    /// The single term `(c, a, b)` if this is a monomial.
    pub fn as_monomial(&self) -> Option<(BigInt, i32, i32)> {
        if self.terms.len() != 1 {
            return None;
        }
        let (&(a, b), c) = self.terms.iter().next()?;
        Some((c.clone(), a, b))
    }

    pub fn inverse_unit(&self) -> Option<Self> {
        let (c, a, b) = self.as_monomial()?;
        if !c.abs().is_one() {
            return None;
        }
        Some(Self::from_terms([((-a, -b), c)]))
    }

    pub fn pow(&self, e: i32) -> Self {
        if e < 0 {
            let inv = self.inverse_unit().expect("negative power of a non-unit");
            return inv.pow(-e);
        }
        let mut acc = Self::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        Self::from_terms(self.terms.iter().map(|(e, x)| (*e, x * c)))
    }

    /// Leading exponent in lexicographic order.
    fn leading(&self) -> Option<((i32, i32), &BigInt)> {
        self.terms.iter().next_back().map(|(e, c)| (*e, c))
    }

    /// Exact division; `None` when `self` is not a multiple of `d` in the Laurent ring.
    pub fn div_exact(&self, d: &Self) -> Option<Self> {
        if d.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Self::zero());
        }
        if let Some(inv) = d.inverse_unit() {
            return Some(self * &inv);
        }
        let (dlead, dc) = d.leading().unwrap();
        let dlead_c = dc.clone();
        let (dmin0, dmax0) = exp_range(d, 0);
        let (dmin1, dmax1) = exp_range(d, 1);
        let (amin0, amax0) = exp_range(self, 0);
        let (amin1, amax1) = exp_range(self, 1);
        let box0 = (amin0 - dmax0, amax0 - dmin0);
        let box1 = (amin1 - dmax1, amax1 - dmin1);

        let mut rem = self.clone();
        let mut quot: BTreeMap<(i32, i32), BigInt> = BTreeMap::new();
        while let Some((rlead, rc)) = rem.leading() {
            let e = (rlead.0 - dlead.0, rlead.1 - dlead.1);
            if e.0 < box0.0 || e.0 > box0.1 || e.1 < box1.0 || e.1 > box1.1 {
                return None;
            }
            if !(rc % &dlead_c).is_zero() {
                return None;
            }
            let c = rc / &dlead_c;
            let term = Self::from_terms([(e, c.clone())]);
            rem = &rem - &(&term * d);
            *quot.entry(e).or_insert_with(BigInt::zero) += c;
        }
        Some(Self::from_terms(quot))
    }

    /// Evaluate at integer values of both variables (units required for negative exponents).
    pub fn eval_i64(&self, a: i64, b: i64) -> Option<BigInt> {
        let mut acc = BigInt::zero();
        for (&(ea, eb), c) in &self.terms {
            let fa = int_pow(a, ea)?;
            let fb = int_pow(b, eb)?;
            acc += c * fa * fb;
        }
        Some(acc)
    }

    /// Canonical text, e.g. `-1*q^-1*t^2 + 3`.
    pub fn to_text(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let names = V::NAMES;
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(&(a, b), c)| {
                let mut s = c.to_string();
                for (e, name) in [(a, names[0]), (b, names[1])] {
                    match e {
                        0 => {}
                        1 => s.push_str(&format!("*{name}")),
                        _ => s.push_str(&format!("*{name}^{e}")),
                    }
                }
                s
            })
            .collect();
        parts.join(" + ")
    }

    pub fn parse(s: &str) -> Result<Self> {
        let names = V::NAMES;
        let cleaned = s.replace(" - ", " + -");
        let mut out = Self::zero();
        for raw in cleaned.split('+') {
            let term = raw.trim();
            if term.is_empty() {
                return Err(Error::Parse { pos: 0, msg: format!("empty term in '{s}'") });
            }
            let mut coeff = BigInt::one();
            let mut exps = [0i32; 2];
            for (idx, factor) in term.split('*').enumerate() {
                let mut f = factor.trim();
                if idx == 0 && f.starts_with('-') && !f[1..].starts_with(|c: char| c.is_ascii_digit()) {
                    coeff = -coeff;
                    f = &f[1..];
                }
                if let Ok(c) = f.parse::<BigInt>() {
                    coeff *= c;
                    continue;
                }
                let (name, exp) = match f.split_once('^') {
                    Some((n, e)) => (
                        n.trim(),
                        e.trim()
                            .parse::<i32>()
                            .map_err(|_| Error::Parse { pos: 0, msg: format!("bad exponent in '{f}'") })?,
                    ),
                    None => (f, 1),
                };
                let slot = names
                    .iter()
                    .position(|n| *n == name)
                    .ok_or_else(|| Error::Parse { pos: 0, msg: format!("unknown variable '{name}'") })?;
                exps[slot] += exp;
            }
            out = &out + &Self::from_terms([((exps[0], exps[1]), coeff)]);
        }
        Ok(out)
    }

    pub fn to_json(&self) -> serde_json::Value {
        let keys = V::JSON_KEYS;
        serde_json::Value::Array(
            self.terms
                .iter()
                .map(|(&(a, b), c)| {
                    let coeff = match c.to_i64() {
                        Some(v) => serde_json::Value::from(v),
                        None => serde_json::Value::from(c.to_string()),
                    };
                    let mut m = serde_json::Map::new();
                    m.insert(keys[0].into(), a.into());
                    m.insert(keys[1].into(), b.into());
                    m.insert("coeff".into(), coeff);
                    serde_json::Value::Object(m)
                })
                .collect(),
        )
    }

    pub fn from_json(v: &serde_json::Value) -> Result<Self> {
        let keys = V::JSON_KEYS;
        let bad = |m: &str| Error::Parse { pos: 0, msg: m.to_string() };
        let arr = v.as_array().ok_or_else(|| bad("polynomial must be a JSON array"))?;
        let mut terms = Vec::new();
        for t in arr {
            let a = t.get(keys[0]).and_then(|x| x.as_i64()).ok_or_else(|| bad("missing exponent"))?;
            let b = t.get(keys[1]).and_then(|x| x.as_i64()).ok_or_else(|| bad("missing exponent"))?;
            let c = match t.get("coeff") {
                Some(serde_json::Value::Number(n)) => BigInt::from(n.as_i64().ok_or_else(|| bad("bad coefficient"))?),
                Some(serde_json::Value::String(s)) => s.parse().map_err(|_| bad("bad coefficient"))?,
                _ => return Err(bad("missing coefficient")),
            };
            terms.push(((a as i32, b as i32), c));
        }
        Ok(Self::from_terms(terms))
    }
}

fn exp_range<V: Vars>(p: &Laurent2<V>, slot: usize) -> (i32, i32) {
    let it = p.terms.keys().map(|e| if slot == 0 { e.0 } else { e.1 });
    let lo = it.clone().min().unwrap_or(0);
    let hi = it.max().unwrap_or(0);
    (lo, hi)
}

fn int_pow(base: i64, e: i32) -> Option<BigInt> {
    if e >= 0 {
        Some(num_traits::pow(BigInt::from(base), e as usize))
    } else if base == 1 || base == -1 {
        Some(num_traits::pow(BigInt::from(base), (-e) as usize))
    } else {
        None
    }
}

impl<V: Vars> fmt::Display for Laurent2<V> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

impl<V: Vars> fmt::Debug for Laurent2<V> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Laurent({})", self.to_text())
    }
}

impl<V: Vars> Serialize for Laurent2<V> {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_json().serialize(s)
    }
}

impl<'de, V: Vars> Deserialize<'de> for Laurent2<V> {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let v = serde_json::Value::deserialize(d)?;
        Self::from_json(&v).map_err(serde::de::Error::custom)
    }
}

impl<V: Vars> Add for &Laurent2<V> {
    type Output = Laurent2<V>;
    fn add(self, o: &Laurent2<V>) -> Laurent2<V> {
        let mut terms = self.terms.clone();
        for (e, c) in &o.terms {
            *terms.entry(*e).or_insert_with(BigInt::zero) += c;
        }
        terms.retain(|_, c| !c.is_zero());
        Laurent2 { terms, _vars: PhantomData }
    }
}

impl<V: Vars> Sub for &Laurent2<V> {
    type Output = Laurent2<V>;
    fn sub(self, o: &Laurent2<V>) -> Laurent2<V> {
        let mut terms = self.terms.clone();
        for (e, c) in &o.terms {
            *terms.entry(*e).or_insert_with(BigInt::zero) -= c;
        }
        terms.retain(|_, c| !c.is_zero());
        Laurent2 { terms, _vars: PhantomData }
    }
}

impl<V: Vars> Mul for &Laurent2<V> {
    type Output = Laurent2<V>;
    fn mul(self, o: &Laurent2<V>) -> Laurent2<V> {
        let mut terms: BTreeMap<(i32, i32), BigInt> = BTreeMap::new();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &o.terms {
                *terms.entry((e1.0 + e2.0, e1.1 + e2.1)).or_insert_with(BigInt::zero) += c1 * c2;
            }
        }
        terms.retain(|_, c| !c.is_zero());
        Laurent2 { terms, _vars: PhantomData }
    }
}

impl<V: Vars> Neg for &Laurent2<V> {
    type Output = Laurent2<V>;
    fn neg(self) -> Laurent2<V> {
        Laurent2 { terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(), _vars: PhantomData }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl<V: Vars> $tr for Laurent2<V> {
            type Output = Laurent2<V>;
            fn $m(self, o: Laurent2<V>) -> Laurent2<V> {
                $tr::$m(&self, &o)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl<V: Vars> Neg for Laurent2<V> {
    type Output = Laurent2<V>;
    fn neg(self) -> Laurent2<V> {
        -&self
    }
}

/// Ring homomorphism `x -> t q^-1`, `y -> -t^-1`.
pub fn xy_to_qt(p: &LaurentXY) -> LaurentQT {
    // x^a y^b -> (-1)^b q^-a t^(a-b)
    LaurentQT::from_terms(p.terms().map(|(&(a, b), c)| {
        let c = if b.rem_euclid(2) == 1 { -c } else { c.clone() };
        ((-a, a - b), c)
    }))
}

/// Inverse of [`xy_to_qt`]: `q -> -x^-1 y^-1`, `t -> -y^-1`.
pub fn qt_to_xy(p: &LaurentQT) -> LaurentXY {
    // q^a t^b -> (-1)^(a+b) x^-a y^-(a+b)
    LaurentXY::from_terms(p.terms().map(|(&(a, b), c)| {
        let c = if (a + b).rem_euclid(2) == 1 { -c } else { c.clone() };
        ((-a, -(a + b)), c)
    }))
}

/// Minimal ring interface for [`Matrix`].
pub trait Ring: Clone + PartialEq + fmt::Debug {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, o: &Self) -> Self;
    fn sub(&self, o: &Self) -> Self;
    fn mul(&self, o: &Self) -> Self;
    /// Exact quotient, `None` if not divisible.
    fn div_exact(&self, o: &Self) -> Option<Self>;
}

impl<V: Vars> Ring for Laurent2<V> {
    fn zero() -> Self {
        Laurent2::zero()
    }
    fn one() -> Self {
        Laurent2::one()
    }
    fn is_zero(&self) -> bool {
        Laurent2::is_zero(self)
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn div_exact(&self, o: &Self) -> Option<Self> {
        Laurent2::div_exact(self, o)
    }
}

#[derive(Clone, PartialEq, Debug)]
pub struct Matrix<R: Ring> {
    rows: usize,
    cols: usize,
    data: Vec<R>,
}

pub type MatrixQT = Matrix<LaurentQT>;
pub type MatrixXY = Matrix<LaurentXY>;

impl<R: Ring> Matrix<R> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self { rows, cols, data: vec![R::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, R::one());
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, f: impl Fn(usize, usize) -> R) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        Self { rows, cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &R {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: R) {
        self.data[r * self.cols + c] = v;
    }

    pub fn add_to(&mut self, r: usize, c: usize, v: &R) {
        let cur = self.get(r, c).add(v);
        self.set(r, c, cur);
    }

    pub fn map<S: Ring>(&self, f: impl Fn(&R) -> S) -> Matrix<S> {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(f).collect() }
    }

    pub fn mul(&self, o: &Self) -> Result<Self> {
        if self.cols != o.rows {
            return Err(Error::Dimension(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, o.rows, o.cols
            )));
        }
        let mut out = Self::zeros(self.rows, o.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..o.cols {
                    let b = o.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    out.add_to(i, j, &a.mul(b));
                }
            }
        }
        Ok(out)
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|r| {
                (0..self.cols).all(|c| {
                    let v = self.get(r, c);
                    if r == c {
                        *v == R::one()
                    } else {
                        v.is_zero()
                    }
                })
            })
    }

    /// First entry `(row, col)` where the two matrices differ.
    pub fn first_difference(&self, o: &Self) -> Option<(usize, usize)> {
        if self.rows != o.rows || self.cols != o.cols {
            return Some((usize::MAX, usize::MAX));
        }
        (0..self.rows).flat_map(|r| (0..self.cols).map(move |c| (r, c))).find(|&(r, c)| self.get(r, c) != o.get(r, c))
    }

    /// Inverse over the base ring. Fraction-free Gauss-Jordan elimination on
    /// `[M | I]`; the result is accepted only if every entry of the adjugate
    /// divides exactly by the determinant.
    #[allow(clippy::needless_range_loop)]
    pub fn inverse(&self) -> Result<Self> {
        if self.rows != self.cols {
            return Err(Error::Dimension("inverse of a non-square matrix".into()));
        }
        let n = self.rows;
        let w = 2 * n;
        let mut a: Vec<Vec<R>> = (0..n)
            .map(|r| {
                let mut row: Vec<R> = (0..n).map(|c| self.get(r, c).clone()).collect();
                row.extend((0..n).map(|c| if c == r { R::one() } else { R::zero() }));
                row
            })
            .collect();
        let mut prev = R::one();
        for k in 0..n {
            let p = (k..n).find(|&r| !a[r][k].is_zero()).ok_or(Error::Singular)?;
            a.swap(k, p);
            let pivot = a[k][k].clone();
            for i in 0..n {
                if i == k {
                    continue;
                }
                let f = a[i][k].clone();
                for j in 0..w {
                    let v = pivot.mul(&a[i][j]).sub(&f.mul(&a[k][j]));
                    a[i][j] = v.div_exact(&prev).ok_or(Error::NotInvertible)?;
                }
            }
            prev = pivot;
        }
        // left block is now det * I up to sign
        let mut out = Self::zeros(n, n);
        for r in 0..n {
            let d = a[r][r].clone();
            for c in 0..n {
                let v = a[r][n + c].div_exact(&d).ok_or(Error::NotInvertible)?;
                out.set(r, c, v);
            }
        }
        Ok(out)
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |r, c| self.get(c, r).clone())
    }
}

impl<V: Vars> Matrix<Laurent2<V>> {
    pub fn to_text_rows(&self) -> Vec<Vec<String>> {
        (0..self.rows).map(|r| (0..self.cols).map(|c| self.get(r, c).to_text()).collect()).collect()
    }

    /// True iff there is exactly one nonzero entry per row and column and it is a unit.
    pub fn is_generalized_permutation(&self) -> bool {
        if self.rows != self.cols {
            return false;
        }
        let rows_ok = (0..self.rows).all(|r| {
            let nz: Vec<_> = (0..self.cols).filter(|&c| !self.get(r, c).is_zero()).collect();
            nz.len() == 1 && self.get(r, nz[0]).is_unit()
        });
        let cols_ok = (0..self.cols).all(|c| (0..self.rows).filter(|&r| !self.get(r, c).is_zero()).count() == 1);
        rows_ok && cols_ok
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> LaurentQT {
        LaurentQT::var0()
    }
    fn t() -> LaurentQT {
        LaurentQT::var1()
    }

    #[test]
    fn qt_products() {
        let lhs = &(&q() + &t()) * &(&q() - &t());
        let rhs = &(&q() * &q()) - &(&t() * &t());
        assert_eq!(lhs, rhs);
        let a = LaurentQT::parse("3*q^2*t^-1 + -2").unwrap();
        assert_eq!(&a * &LaurentQT::one(), a);
        let m = &LaurentQT::monomial(1, -1, 1) * &LaurentQT::monomial(-1, 0, -1);
        assert_eq!(m, LaurentQT::monomial(-1, -1, 0));
    }

    #[test]
    fn substitution_values() {
        assert_eq!(xy_to_qt(&LaurentXY::var0()), LaurentQT::monomial(1, -1, 1));
        assert_eq!(xy_to_qt(&LaurentXY::var1()), LaurentQT::monomial(-1, 0, -1));
        // -x^2 y -> t q^-2
        assert_eq!(xy_to_qt(&LaurentXY::monomial(-1, 2, 1)), LaurentQT::monomial(1, -2, 1));
        let p = LaurentXY::parse("1 + -3*x^2*y^-1 + 5*y^4").unwrap();
        assert_eq!(qt_to_xy(&xy_to_qt(&p)), p);
    }

    #[test]
    fn units() {
        assert!(LaurentQT::monomial(1, 3, -2).is_unit());
        assert!(LaurentQT::monomial(-1, 0, 0).is_unit());
        assert!(!LaurentXY::parse("1 + -1*x").unwrap().is_unit());
        assert!(!LaurentXY::zero().is_unit());
        assert!(!LaurentQT::monomial(2, 1, 1).is_unit());
    }

    #[test]
    fn text_round_trip() {
        let p = LaurentQT::from_terms([((-1, 2), BigInt::from(-1)), ((0, 0), BigInt::from(3))]);
        assert_eq!(p.to_text(), "-1*q^-1*t^2 + 3");
        assert_eq!(LaurentQT::parse(&p.to_text()).unwrap(), p);
        assert_eq!(LaurentQT::parse("q - t").unwrap(), &q() - &t());
        assert_eq!(LaurentQT::parse("-q^2").unwrap(), LaurentQT::monomial(-1, 2, 0));
        assert_eq!(LaurentQT::zero().to_text(), "0");
        assert!(LaurentQT::parse("q + z").is_err());
    }

    #[test]
    fn json_round_trip() {
        let p = LaurentXY::parse("-1*x^2*y + 7*y^-3").unwrap();
        let v = p.to_json();
        assert_eq!(v[0]["xexp"], 0);
        assert_eq!(LaurentXY::from_json(&v).unwrap(), p);
        let s = serde_json::to_string(&p).unwrap();
        let back: LaurentXY = serde_json::from_str(&s).unwrap();
        assert_eq!(back, p);
    }

    #[test]
    fn exact_division() {
        let a = LaurentXY::parse("1 + -1*x").unwrap();
        let b = LaurentXY::parse("2 + x^-1*y").unwrap();
        let prod = &a * &b;
        assert_eq!(prod.div_exact(&a).unwrap(), b);
        assert_eq!(prod.div_exact(&b).unwrap(), a);
        assert!(b.div_exact(&a).is_none());
        assert!(LaurentXY::one().div_exact(&a).is_none());
    }

    #[test]
    fn matrix_inverse_over_laurent() {
        let x = LaurentXY::var0();
        let y = LaurentXY::var1();
        let one = LaurentXY::one();
        let m = Matrix::from_fn(3, 3, |r, c| match (r, c) {
            (0, 0) => &one - &x,
            (0, 1) => x.clone(),
            (1, 0) => one.clone(),
            (1, 2) => &x * &y,
            (2, 2) => y.clone(),
            _ => LaurentXY::zero(),
        });
        let inv = m.inverse().unwrap();
        assert!(m.mul(&inv).unwrap().is_identity());
        assert!(inv.mul(&m).unwrap().is_identity());
        let sing = Matrix::from_fn(2, 2, |_, _| x.clone());
        assert!(sing.inverse().is_err());
        let non_unit_det = Matrix::from_fn(1, 1, |_, _| &one + &x);
        assert!(matches!(non_unit_det.inverse(), Err(Error::NotInvertible)));
    }
}
