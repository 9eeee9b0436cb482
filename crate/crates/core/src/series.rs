//! Truncated power series in `z` over a polynomial coefficient ring.

use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::poly::{MultiPoly, QPoly, Ring};

/// `Σ_{n ≤ order} c_n zⁿ`. Every operation truncates at `order`.
#[derive(Clone, PartialEq, Debug)]
pub struct Series<R: Ring> {
    coeffs: Vec<R>,
}

pub type QSeries = Series<QPoly>;
pub type QPSeries = Series<MultiPoly>;

impl<R: Ring> Series<R> {
    /// Pads or truncates `coeffs` to exactly `order + 1` terms, using
    /// `unit` to manufacture zeros of the right shape.
    pub fn new(mut coeffs: Vec<R>, order: usize, unit: &R) -> Self {
        coeffs.resize(order + 1, unit.zero_like());
        Series { coeffs }
    }

    pub fn constant(c: R, order: usize) -> Self {
        let zero = c.zero_like();
        let mut coeffs = vec![zero; order + 1];
        coeffs[0] = c;
        Series { coeffs }
    }

    pub fn one(order: usize, unit: &R) -> Self {
        Series::constant(unit.one_like(), order)
    }

    /// `c·z^k`
    pub fn monomial(c: R, k: usize, order: usize) -> Self {
        let mut coeffs = vec![c.zero_like(); order + 1];
        if k <= order {
            coeffs[k] = c;
        }
        Series { coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[R] {
        &self.coeffs
    }

    pub fn coeff(&self, n: usize) -> &R {
        &self.coeffs[n]
    }

    pub fn add(&self, o: &Self) -> Self {
        Series {
            coeffs: self.coeffs.iter().zip(&o.coeffs).map(|(a, b)| a.add(b)).collect(),
        }
    }

    pub fn sub(&self, o: &Self) -> Self {
        Series {
            coeffs: self.coeffs.iter().zip(&o.coeffs).map(|(a, b)| a.sub(b)).collect(),
        }
    }

    pub fn mul(&self, o: &Self) -> Self {
        let n = self.order().min(o.order());
        let zero = self.coeffs[0].zero_like();
        let mut out = vec![zero; n + 1];
        for i in 0..=n {
            if self.coeffs[i].is_zero() {
                continue;
            }
            for j in 0..=n - i {
                if o.coeffs[j].is_zero() {
                    continue;
                }
                out[i + j] = out[i + j].add(&self.coeffs[i].mul(&o.coeffs[j]));
            }
        }
        Series { coeffs: out }
    }

    pub fn scale(&self, c: &R) -> Self {
        Series {
            coeffs: self.coeffs.iter().map(|a| a.mul(c)).collect(),
        }
    }

    /// Multiplies by `z^k`.
    pub fn shift(&self, k: usize) -> Self {
        let zero = self.coeffs[0].zero_like();
        let n = self.order();
        let coeffs = (0..=n)
            .map(|i| if i >= k { self.coeffs[i - k].clone() } else { zero.clone() })
            .collect();
        Series { coeffs }
    }

    /// Reciprocal of a series whose constant term is exactly `1` or `-1`.
    pub fn inverse(&self) -> Result<Self> {
        let c0 = &self.coeffs[0];
        let neg_one = c0.zero_like().sub(&c0.one_like());
        let sign_flip = if c0.is_one() {
            false
        } else if *c0 == neg_one {
            true
        } else {
            return Err(Error::NonUnitDenominator(format!("{c0:?}")));
        };
        let n = self.order();
        let mut out: Vec<R> = Vec::with_capacity(n + 1);
        out.push(c0.one_like());
        for m in 1..=n {
            // Σ_{i=1..m} a_i b_{m-i} + a_0 b_m = 0
            let mut acc = c0.zero_like();
            for i in 1..=m {
                if !self.coeffs[i].is_zero() {
                    acc = acc.add(&self.coeffs[i].mul(&out[m - i]));
                }
            }
            out.push(acc.zero_like().sub(&acc));
        }
        let s = Series { coeffs: out };
        Ok(if sign_flip {
            s.scale(&neg_one)
        } else {
            s
        })
    }

    pub fn div(&self, den: &Self) -> Result<Self> {
        Ok(self.mul(&den.inverse()?))
    }
}

impl Series<QPoly> {
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::Value::Array(self.coeffs.iter().map(QPoly::to_json).collect())
    }
}

impl Series<MultiPoly> {
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::Value::Array(self.coeffs.iter().map(MultiPoly::to_json).collect())
    }
}

impl<R: Ring + Serialize> Serialize for Series<R> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.coeffs.serialize(s)
    }
}

impl<R: Ring + fmt::Display> fmt::Display for Series<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (n, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            let z = match n {
                0 => String::new(),
                1 => "z".to_string(),
                _ => format!("z^{n}"),
            };
            let body = c.to_string();
            let simple = !body.contains(' ');
            match (n, c.is_one()) {
                (0, _) => f.write_str(&body)?,
                (_, true) => f.write_str(&z)?,
                _ if simple => write!(f, "{body}*{z}")?,
                _ => write!(f, "({body})*{z}")?,
            }
        }
        if first {
            f.write_str("0")?;
        }
        write!(f, " + O(z^{})", self.order() + 1)
    }
}

/// Expands `1/(1 - a_1 z/(1 - a_2 z/(1 - ...)))` up to `z^order`.
///
/// Level `t` first influences the coefficient of `z^t`, so the ladder must
/// have at least `order` entries; deeper entries are ignored.
pub fn cf_series<R: Ring>(ladder: &[R], order: usize, unit: &R) -> Result<Series<R>> {
    if ladder.len() < order {
        return Err(Error::InsufficientDepth {
            depth: ladder.len(),
            order,
        });
    }
    let one = Series::one(order, unit);
    let mut tail = one.clone();
    for a in ladder[..order].iter().rev() {
        let denom = one.sub(&tail.shift(1).scale(a));
        tail = denom.inverse()?;
    }
    Ok(tail)
}

/// Expands `numerator / denominator`, both given as coefficient lists in `z`.
pub fn rational_series<R: Ring>(
    numerator: &[R],
    denominator: &[R],
    order: usize,
    unit: &R,
) -> Result<Series<R>> {
    let num = Series::new(numerator.to_vec(), order, unit);
    let den = Series::new(denominator.to_vec(), order, unit);
    num.div(&den)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn qp(c: &[i64]) -> QPoly {
        QPoly::from_i64s(c)
    }

    #[test]
    fn geometric() {
        let one = QPoly::one();
        let s = rational_series(std::slice::from_ref(&one), &[one.clone(), qp(&[-1])], 3, &one).unwrap();
        assert!(s.coeffs().iter().all(|c| *c == one));
    }

    #[test]
    fn non_unit_denominator() {
        let one = QPoly::one();
        let err = rational_series(std::slice::from_ref(&one), &[qp(&[2])], 3, &one).unwrap_err();
        assert!(matches!(err, Error::NonUnitDenominator(_)));
        let err = rational_series(std::slice::from_ref(&one), &[qp(&[1, 1])], 3, &one).unwrap_err();
        assert!(matches!(err, Error::NonUnitDenominator(_)));
    }

    #[test]
    fn shallow_ladder_is_an_error() {
        let one = QPoly::one();
        let err = cf_series(&[one.clone(), one.clone()], 3, &one).unwrap_err();
        assert_eq!(err, Error::InsufficientDepth { depth: 2, order: 3 });
        let zeros = vec![QPoly::zero(); 5];
        let s = cf_series(&zeros, 5, &one).unwrap();
        assert_eq!(s, Series::one(5, &one));
    }

    #[test]
    fn crossing_ladder_low_terms() {
        let one = QPoly::one();
        let ladder: Vec<QPoly> = (0..3).map(|i| QPoly::monomial(1, i / 2)).collect();
        let s = cf_series(&ladder, 3, &one).unwrap();
        assert_eq!(s.coeffs(), &[qp(&[1]), qp(&[1]), qp(&[2]), qp(&[4, 1])]);
        assert_eq!(s.to_string(), "1 + z + 2*z^2 + (4 + q)*z^3 + O(z^4)");
    }
}
