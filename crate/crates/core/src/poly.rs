//! Exact polynomials with arbitrary-precision integer coefficients.
//!
//! [`QPoly`] is dense in one variable. [`MultiPoly`] is sparse in a fixed
//! number of named variables and carries the bivariate and trivariate
//! distributions.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};

/// The operations a truncated power series needs from its coefficients.
pub trait Ring: Clone + PartialEq + fmt::Debug {
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn is_zero(&self) -> bool;
    fn is_one(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
}

fn bigint_json(c: &BigInt) -> serde_json::Value {
    match c.to_i64() {
        Some(v) => serde_json::Value::from(v),
        None => serde_json::Value::from(c.to_string()),
    }
}

fn write_term(
    f: &mut fmt::Formatter<'_>,
    first: bool,
    c: &BigInt,
    monomial: &str,
) -> fmt::Result {
    let neg = c.is_negative();
    let abs = c.abs();
    if first {
        if neg {
            f.write_str("-")?;
        }
    } else {
        f.write_str(if neg { " - " } else { " + " })?;
    }
    if monomial.is_empty() {
        write!(f, "{abs}")
    } else if abs.is_one() {
        f.write_str(monomial)
    } else {
        write!(f, "{abs}*{monomial}")
    }
}

fn power(var: &str, e: u32) -> String {
    match e {
        0 => String::new(),
        1 => var.to_string(),
        _ => format!("{var}^{e}"),
    }
}

// ---------------------------------------------------------------------------
// QPoly

/// A polynomial in `q`, coefficients lowest power first, trailing zeros
/// trimmed so that equality is structural.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct QPoly {
    coeffs: Vec<BigInt>,
}

impl QPoly {
    pub fn zero() -> Self {
        QPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        QPoly::constant(1)
    }

    pub fn constant(c: i64) -> Self {
        QPoly::from_coeffs(vec![BigInt::from(c)])
    }

    /// `c·q^e`
    pub fn monomial(c: i64, e: u32) -> Self {
        let mut coeffs = vec![BigInt::zero(); e as usize + 1];
        coeffs[e as usize] = BigInt::from(c);
        QPoly::from_coeffs(coeffs)
    }

    pub fn q() -> Self {
        QPoly::monomial(1, 1)
    }

    pub fn from_coeffs(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        QPoly { coeffs }
    }

    pub fn from_i64s(c: &[i64]) -> Self {
        QPoly::from_coeffs(c.iter().map(|&v| BigInt::from(v)).collect())
    }

    /// Builds `Σ counts[e] q^e` from a histogram.
    pub fn from_counts(counts: &[u64]) -> Self {
        QPoly::from_coeffs(counts.iter().map(|&v| BigInt::from(v)).collect())
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, e: usize) -> BigInt {
        self.coeffs.get(e).cloned().unwrap_or_default()
    }

    /// Coefficients as machine integers; `None` if one does not fit.
    pub fn to_i64s(&self) -> Option<Vec<i64>> {
        self.coeffs.iter().map(ToPrimitive::to_i64).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Value at `q = 1`, the coefficient sum.
    pub fn at_one(&self) -> BigInt {
        self.coeffs.iter().sum()
    }

    pub fn eval(&self, q: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * q + c)
    }

    pub fn has_nonnegative_coeffs(&self) -> bool {
        self.coeffs.iter().all(|c| !c.is_negative())
    }

    /// Multiplies by `q^k`.
    pub fn shift(&self, k: u32) -> Self {
        if self.is_zero() {
            return QPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); k as usize];
        coeffs.extend(self.coeffs.iter().cloned());
        QPoly { coeffs }
    }

    /// `P(q^k)`
    pub fn substitute_power(&self, k: u32) -> Self {
        if self.is_zero() {
            return QPoly::zero();
        }
        let k = k as usize;
        let mut coeffs = vec![BigInt::zero(); (self.coeffs.len() - 1) * k + 1];
        for (e, c) in self.coeffs.iter().enumerate() {
            coeffs[e * k] = c.clone();
        }
        QPoly::from_coeffs(coeffs)
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        QPoly::from_coeffs(self.coeffs.iter().map(|v| v * c).collect())
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(QPoly::one(), |acc, _| &acc * self)
    }

    /// Exact division; `None` if the remainder is non-zero or the divisor's
    /// leading coefficient does not divide.
    pub fn div_exact(&self, d: &QPoly) -> Option<QPoly> {
        let dl = d.coeffs.last()?;
        if self.is_zero() {
            return Some(QPoly::zero());
        }
        let dd = d.coeffs.len() - 1;
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return None;
        }
        let mut quot = vec![BigInt::zero(); rem.len() - dd];
        for i in (0..quot.len()).rev() {
            let top = &rem[i + dd];
            if (top % dl) != BigInt::zero() {
                return None;
            }
            let c = top / dl;
            for (j, dc) in d.coeffs.iter().enumerate() {
                rem[i + j] -= &c * dc;
            }
            quot[i] = c;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return None;
        }
        Some(QPoly::from_coeffs(quot))
    }

    pub fn display_in(&self, var: &str) -> String {
        struct D<'a>(&'a QPoly, &'a str);
        impl fmt::Display for D<'_> {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                let mut first = true;
                for (e, c) in self.0.coeffs.iter().enumerate() {
                    if c.is_zero() {
                        continue;
                    }
                    write_term(f, first, c, &power(self.1, e as u32))?;
                    first = false;
                }
                if first {
                    f.write_str("0")?;
                }
                Ok(())
            }
        }
        D(self, var).to_string()
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::Value::Array(self.coeffs.iter().map(bigint_json).collect())
    }
}

/// `11 + 4*q + q^2`; the zero polynomial prints as `0`.
impl fmt::Display for QPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_in("q"))
    }
}

impl fmt::Debug for QPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QPoly({self})")
    }
}

/// A JSON array of coefficients, lowest power first.
impl Serialize for QPoly {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(self.coeffs.len()))?;
        for c in &self.coeffs {
            seq.serialize_element(&bigint_json(c))?;
        }
        seq.end()
    }
}

impl Add for &QPoly {
    type Output = QPoly;

    fn add(self, o: &QPoly) -> QPoly {
        let n = self.coeffs.len().max(o.coeffs.len());
        QPoly::from_coeffs(
            (0..n)
                .map(|i| self.coeff(i) + o.coeff(i))
                .collect(),
        )
    }
}

impl Add for QPoly {
    type Output = QPoly;

    fn add(self, o: QPoly) -> QPoly {
        &self + &o
    }
}

impl AddAssign<&QPoly> for QPoly {
    fn add_assign(&mut self, o: &QPoly) {
        if self.coeffs.len() < o.coeffs.len() {
            self.coeffs.resize(o.coeffs.len(), BigInt::zero());
        }
        for (a, b) in self.coeffs.iter_mut().zip(&o.coeffs) {
            *a += b;
        }
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }
}

impl Sub for &QPoly {
    type Output = QPoly;

    fn sub(self, o: &QPoly) -> QPoly {
        let n = self.coeffs.len().max(o.coeffs.len());
        QPoly::from_coeffs((0..n).map(|i| self.coeff(i) - o.coeff(i)).collect())
    }
}

impl Sub for QPoly {
    type Output = QPoly;

    fn sub(self, o: QPoly) -> QPoly {
        &self - &o
    }
}

impl Neg for &QPoly {
    type Output = QPoly;

    fn neg(self) -> QPoly {
        QPoly::from_coeffs(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl Mul for &QPoly {
    type Output = QPoly;

    fn mul(self, o: &QPoly) -> QPoly {
        if self.is_zero() || o.is_zero() {
            return QPoly::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        QPoly::from_coeffs(out)
    }
}

impl Mul for QPoly {
    type Output = QPoly;

    fn mul(self, o: QPoly) -> QPoly {
        &self * &o
    }
}

impl std::iter::Sum for QPoly {
    fn sum<I: Iterator<Item = QPoly>>(iter: I) -> QPoly {
        iter.fold(QPoly::zero(), |mut acc, p| {
            acc += &p;
            acc
        })
    }
}

impl Ring for QPoly {
    fn zero_like(&self) -> Self {
        QPoly::zero()
    }
    fn one_like(&self) -> Self {
        QPoly::one()
    }
    fn is_zero(&self) -> bool {
        QPoly::is_zero(self)
    }
    fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
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
}

// ---------------------------------------------------------------------------
// MultiPoly

/// A sparse polynomial in `vars.len()` named variables.
#[derive(Clone, PartialEq, Eq)]
pub struct MultiPoly {
    vars: Vec<&'static str>,
    terms: BTreeMap<Vec<u32>, BigInt>,
}

impl MultiPoly {
    pub fn zero(vars: &[&'static str]) -> Self {
        MultiPoly {
            vars: vars.to_vec(),
            terms: BTreeMap::new(),
        }
    }

    pub fn one(vars: &[&'static str]) -> Self {
        MultiPoly::monomial(vars, 1, &vec![0; vars.len()])
    }

    pub fn monomial(vars: &[&'static str], c: i64, exps: &[u32]) -> Self {
        assert_eq!(vars.len(), exps.len());
        let mut p = MultiPoly::zero(vars);
        p.add_term(exps.to_vec(), BigInt::from(c));
        p
    }

    /// Single variable `vars[idx]`.
    pub fn var(vars: &[&'static str], idx: usize) -> Self {
        let mut e = vec![0; vars.len()];
        e[idx] = 1;
        MultiPoly::monomial(vars, 1, &e)
    }

    pub fn vars(&self) -> &[&'static str] {
        &self.vars
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn add_term(&mut self, exps: Vec<u32>, c: BigInt) {
        debug_assert_eq!(exps.len(), self.vars.len());
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(exps.clone()).or_default();
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&exps);
        }
    }

    /// Builds a polynomial from a histogram keyed by exponent vectors.
    pub fn from_counts<I: IntoIterator<Item = (Vec<u32>, u64)>>(
        vars: &[&'static str],
        counts: I,
    ) -> Self {
        let mut p = MultiPoly::zero(vars);
        for (e, c) in counts {
            p.add_term(e, BigInt::from(c));
        }
        p
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &BigInt)> {
        self.terms.iter()
    }

    pub fn coeff(&self, exps: &[u32]) -> BigInt {
        self.terms.get(exps).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn at_ones(&self) -> BigInt {
        self.terms.values().sum()
    }

    /// Swaps two variables' exponents.
    pub fn swap_vars(&self, a: usize, b: usize) -> Self {
        let mut out = MultiPoly::zero(&self.vars);
        for (e, c) in &self.terms {
            let mut e = e.clone();
            e.swap(a, b);
            out.add_term(e, c.clone());
        }
        out
    }

    /// True iff invariant under exchanging the first two variables.
    pub fn is_symmetric(&self) -> bool {
        self.nvars() >= 2 && self.swap_vars(0, 1) == *self
    }

    /// Sets variable `idx` to 1 and drops it.
    pub fn set_one(&self, idx: usize) -> Self {
        let vars: Vec<&'static str> = self
            .vars
            .iter()
            .enumerate()
            .filter(|&(i, _)| i != idx)
            .map(|(_, v)| *v)
            .collect();
        let mut out = MultiPoly::zero(&vars);
        for (e, c) in &self.terms {
            let mut e = e.clone();
            e.remove(idx);
            out.add_term(e, c.clone());
        }
        out
    }

    /// Identifies variable `b` with variable `a` and drops `b`.
    pub fn merge_vars(&self, a: usize, b: usize) -> Self {
        assert_ne!(a, b);
        let vars: Vec<&'static str> = self
            .vars
            .iter()
            .enumerate()
            .filter(|&(i, _)| i != b)
            .map(|(_, v)| *v)
            .collect();
        let mut out = MultiPoly::zero(&vars);
        for (e, c) in &self.terms {
            let mut e = e.clone();
            e[a] += e[b];
            e.remove(b);
            out.add_term(e, c.clone());
        }
        out
    }

    /// Same terms under new variable names.
    pub fn with_vars(&self, vars: &[&'static str]) -> Self {
        assert_eq!(vars.len(), self.vars.len());
        MultiPoly {
            vars: vars.to_vec(),
            terms: self.terms.clone(),
        }
    }

    /// Converts a one-variable polynomial to [`QPoly`].
    pub fn to_qpoly(&self) -> Option<QPoly> {
        if self.nvars() != 1 {
            return None;
        }
        let deg = self.terms.keys().map(|e| e[0]).max().unwrap_or(0) as usize;
        let mut coeffs = vec![BigInt::zero(); deg + 1];
        for (e, c) in &self.terms {
            coeffs[e[0] as usize] = c.clone();
        }
        Some(QPoly::from_coeffs(coeffs))
    }

    pub fn from_qpoly(p: &QPoly, var: &'static str) -> Self {
        let mut out = MultiPoly::zero(&[var]);
        for (e, c) in p.coeffs().iter().enumerate() {
            out.add_term(vec![e as u32], c.clone());
        }
        out
    }

    pub fn to_json(&self) -> serde_json::Value {
        let terms: Vec<serde_json::Value> = self
            .terms
            .iter()
            .map(|(e, c)| serde_json::json!({"exponents": e, "coeff": bigint_json(c)}))
            .collect();
        serde_json::json!({"vars": self.vars, "terms": terms})
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        // graded order: total degree, then lexicographic
        let mut keys: Vec<&Vec<u32>> = self.terms.keys().collect();
        keys.sort_by_key(|e| (e.iter().sum::<u32>(), std::cmp::Reverse((*e).clone())));
        for e in keys {
            let mono: Vec<String> = e
                .iter()
                .zip(&self.vars)
                .filter(|(&x, _)| x > 0)
                .map(|(&x, v)| power(v, x))
                .collect();
            write_term(f, first, &self.terms[e], &mono.join("*"))?;
            first = false;
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

impl fmt::Debug for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MultiPoly[{}]({self})", self.vars.join(","))
    }
}

impl Serialize for MultiPoly {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_json().serialize(s)
    }
}

impl Ring for MultiPoly {
    fn zero_like(&self) -> Self {
        MultiPoly::zero(&self.vars)
    }
    fn one_like(&self) -> Self {
        MultiPoly::one(&self.vars)
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
    fn is_one(&self) -> bool {
        *self == MultiPoly::one(&self.vars)
    }
    fn add(&self, o: &Self) -> Self {
        assert_eq!(self.vars, o.vars, "variable mismatch");
        let mut out = self.clone();
        for (e, c) in &o.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }
    fn sub(&self, o: &Self) -> Self {
        assert_eq!(self.vars, o.vars, "variable mismatch");
        let mut out = self.clone();
        for (e, c) in &o.terms {
            out.add_term(e.clone(), -c);
        }
        out
    }
    fn mul(&self, o: &Self) -> Self {
        assert_eq!(self.vars, o.vars, "variable mismatch");
        let mut out = MultiPoly::zero(&self.vars);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &o.terms {
                let e: Vec<u32> = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                out.add_term(e, c1 * c2);
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn display_forms() {
        assert_eq!(QPoly::from_i64s(&[11, 4, 1]).to_string(), "11 + 4*q + q^2");
        assert_eq!(QPoly::zero().to_string(), "0");
        assert_eq!(QPoly::from_i64s(&[0, 1]).to_string(), "q");
        assert_eq!(QPoly::from_i64s(&[1, -1]).to_string(), "1 - q");
        assert_eq!(QPoly::from_i64s(&[-2]).to_string(), "-2");
        let x = MultiPoly::var(&["x", "y"], 0);
        let y = MultiPoly::var(&["x", "y"], 1);
        assert_eq!(Ring::add(&x, &y).to_string(), "x + y");
        assert_eq!(Ring::mul(&x, &Ring::mul(&y, &y)).to_string(), "x*y^2");
    }

    #[test]
    fn arithmetic() {
        let a = QPoly::from_i64s(&[1, 1]);
        assert_eq!(a.pow(3), QPoly::from_i64s(&[1, 3, 3, 1]));
        assert_eq!(a.pow(3).div_exact(&a), Some(a.pow(2)));
        assert_eq!(QPoly::from_i64s(&[1, 0, 1]).div_exact(&a), None);
        assert_eq!(QPoly::from_i64s(&[1, 1, 1]).substitute_power(2), QPoly::from_i64s(&[1, 0, 1, 0, 1]));
        assert_eq!(&a - &a, QPoly::zero());
        assert_eq!(a.at_one(), BigInt::from(2));
        assert_eq!(QPoly::from_i64s(&[0, 0, 0]), QPoly::zero());
        assert_eq!(serde_json::to_string(&QPoly::from_i64s(&[4, 1])).unwrap(), "[4,1]");
    }

    #[test]
    fn multipoly_ops() {
        let v = ["q", "p"];
        let q = MultiPoly::var(&v, 0);
        let p = MultiPoly::var(&v, 1);
        let s = Ring::add(&q, &p);
        assert!(s.is_symmetric());
        assert!(!Ring::add(&q, &Ring::mul(&p, &p)).is_symmetric());
        let m = Ring::mul(&s, &s).merge_vars(0, 1);
        assert_eq!(m.to_qpoly().unwrap(), QPoly::from_i64s(&[0, 0, 4]));
        assert_eq!(s.set_one(0).to_qpoly().unwrap(), QPoly::from_i64s(&[1, 1]));
        assert!(Ring::sub(&s, &s).is_zero());
    }
}
