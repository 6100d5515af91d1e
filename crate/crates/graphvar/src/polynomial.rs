//! Exact polynomial arithmetic over arbitrary-precision integers.
//!
//! [`QPolynomial`] is a dense univariate polynomial in `q`; [`XYPolynomial`]
//! is a sparse bivariate polynomial in `x, y`. Both keep no spurious zero
//! entries, so structural equality is semantic equality.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::de::Error as _;
use serde::ser::{SerializeSeq, SerializeStruct};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

// ---------------------------------------------------------------------------
// QPolynomial
// ---------------------------------------------------------------------------

/// Dense polynomial in `q` with big-integer coefficients; the coefficient of
/// the highest stored degree is nonzero unless the polynomial is zero.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct QPolynomial {
    coeffs: Vec<BigInt>,
}

impl QPolynomial {
    pub fn zero() -> QPolynomial {
        QPolynomial { coeffs: Vec::new() }
    }

    pub fn one() -> QPolynomial {
        QPolynomial::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> QPolynomial {
        let mut p = QPolynomial { coeffs: vec![c] };
        p.trim();
        p
    }

    /// From low-to-high coefficients; trailing zeros are trimmed.
    pub fn from_coeffs(coeffs: Vec<BigInt>) -> QPolynomial {
        let mut p = QPolynomial { coeffs };
        p.trim();
        p
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading_coeff(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading_coeff().is_some_and(|c| c.is_one())
    }

    /// Coefficient of `q^i` (zero beyond the stored degree).
    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_else(BigInt::zero)
    }

    /// Low-to-high coefficients, no trailing zeros.
    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn scale(&self, c: &BigInt) -> QPolynomial {
        if c.is_zero() {
            return QPolynomial::zero();
        }
        QPolynomial {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    pub fn pow(&self, mut e: u32) -> QPolynomial {
        let mut base = self.clone();
        let mut acc = QPolynomial::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }
}

impl Add for &QPolynomial {
    type Output = QPolynomial;
    fn add(self, rhs: &QPolynomial) -> QPolynomial {
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len().max(rhs.coeffs.len())];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[i] += c;
        }
        for (i, c) in rhs.coeffs.iter().enumerate() {
            coeffs[i] += c;
        }
        QPolynomial::from_coeffs(coeffs)
    }
}

impl Sub for &QPolynomial {
    type Output = QPolynomial;
    fn sub(self, rhs: &QPolynomial) -> QPolynomial {
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len().max(rhs.coeffs.len())];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[i] += c;
        }
        for (i, c) in rhs.coeffs.iter().enumerate() {
            coeffs[i] -= c;
        }
        QPolynomial::from_coeffs(coeffs)
    }
}

impl Mul for &QPolynomial {
    type Output = QPolynomial;
    fn mul(self, rhs: &QPolynomial) -> QPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return QPolynomial::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        QPolynomial::from_coeffs(coeffs)
    }
}

impl fmt::Display for QPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            write_term(f, &mut first, c, &monomial_q(i))?;
        }
        Ok(())
    }
}

impl Serialize for QPolynomial {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("QPolynomial", 1)?;
        let coeffs: Vec<String> = self.coeffs.iter().map(|c| c.to_string()).collect();
        s.serialize_field("coeffs", &coeffs)?;
        s.end()
    }
}

impl<'de> Deserialize<'de> for QPolynomial {
    fn deserialize<D: Deserializer<'de>>(
        deserializer: D,
    ) -> std::result::Result<QPolynomial, D::Error> {
        #[derive(Deserialize)]
        struct Doc {
            coeffs: Vec<String>,
        }
        let doc = Doc::deserialize(deserializer)?;
        let coeffs = doc
            .coeffs
            .iter()
            .map(|s| s.parse::<BigInt>().map_err(D::Error::custom))
            .collect::<std::result::Result<Vec<_>, _>>()?;
        Ok(QPolynomial::from_coeffs(coeffs))
    }
}

// ---------------------------------------------------------------------------
// q-integers
// ---------------------------------------------------------------------------

/// The q-integer `1 + q + ... + q^(d-1)`, kept with its defining `d`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QInteger {
    d: u32,
    expansion: QPolynomial,
}

impl QInteger {
    pub fn new(d: u32) -> Result<QInteger> {
        Ok(QInteger {
            d,
            expansion: q_integer(d)?,
        })
    }

    pub fn d(&self) -> u32 {
        self.d
    }

    pub fn expansion(&self) -> &QPolynomial {
        &self.expansion
    }
}

/// The expansion `1 + q + ... + q^(d-1)`; rejects `d = 0`.
pub fn q_integer(d: u32) -> Result<QPolynomial> {
    if d == 0 {
        return Err(Error::InvalidParameter(
            "q-integer requires d >= 1".into(),
        ));
    }
    Ok(QPolynomial::from_coeffs(vec![BigInt::one(); d as usize]))
}

// ---------------------------------------------------------------------------
// XYPolynomial
// ---------------------------------------------------------------------------

/// Sparse bivariate polynomial in `x, y`, exponent pairs mapped to nonzero
/// big-integer coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct XYPolynomial {
    terms: BTreeMap<(u32, u32), BigInt>,
}

impl XYPolynomial {
    pub fn zero() -> XYPolynomial {
        XYPolynomial::default()
    }

    pub fn one() -> XYPolynomial {
        XYPolynomial::monomial(0, 0, BigInt::one())
    }

    pub fn x() -> XYPolynomial {
        XYPolynomial::monomial(1, 0, BigInt::one())
    }

    pub fn y() -> XYPolynomial {
        XYPolynomial::monomial(0, 1, BigInt::one())
    }

    pub fn monomial(i: u32, j: u32, c: BigInt) -> XYPolynomial {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert((i, j), c);
        }
        XYPolynomial { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, i: u32, j: u32) -> BigInt {
        self.terms.get(&(i, j)).cloned().unwrap_or_else(BigInt::zero)
    }

    /// Terms in increasing `(i, j)` order.
    pub fn terms(&self) -> impl Iterator<Item = (&(u32, u32), &BigInt)> {
        self.terms.iter()
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    /// Largest exponent of `x` appearing (zero polynomial gives `None`).
    pub fn x_degree(&self) -> Option<u32> {
        self.terms.keys().map(|&(i, _)| i).max()
    }

    pub fn add_term(&mut self, i: u32, j: u32, c: &BigInt) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry((i, j)).or_insert_with(BigInt::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&(i, j));
        }
    }

    /// Evaluates at integer points (used by spanning-tree counting).
    pub fn eval(&self, x: &BigInt, y: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for (&(i, j), c) in &self.terms {
            acc += c * x.pow(i) * y.pow(j);
        }
        acc
    }
}

impl Add for &XYPolynomial {
    type Output = XYPolynomial;
    fn add(self, rhs: &XYPolynomial) -> XYPolynomial {
        let mut out = self.clone();
        for (&(i, j), c) in &rhs.terms {
            out.add_term(i, j, c);
        }
        out
    }
}

impl Mul for &XYPolynomial {
    type Output = XYPolynomial;
    fn mul(self, rhs: &XYPolynomial) -> XYPolynomial {
        let mut out = XYPolynomial::zero();
        for (&(i1, j1), c1) in &self.terms {
            for (&(i2, j2), c2) in &rhs.terms {
                out.add_term(i1 + i2, j1 + j2, &(c1 * c2));
            }
        }
        out
    }
}

impl Mul<&BigInt> for &XYPolynomial {
    type Output = XYPolynomial;
    fn mul(self, rhs: &BigInt) -> XYPolynomial {
        let mut out = XYPolynomial::zero();
        for (&(i, j), c) in &self.terms {
            out.add_term(i, j, &(c * rhs));
        }
        out
    }
}

impl fmt::Display for XYPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        // Highest total degree first, then higher x-degree first.
        let mut keys: Vec<&(u32, u32)> = self.terms.keys().collect();
        keys.sort_by_key(|&&(i, j)| (std::cmp::Reverse(i + j), std::cmp::Reverse(i)));
        let mut first = true;
        for &(i, j) in keys {
            let c = &self.terms[&(i, j)];
            write_term(f, &mut first, c, &monomial_xy(i, j))?;
        }
        Ok(())
    }
}

impl Serialize for XYPolynomial {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        struct Terms<'a>(&'a XYPolynomial);
        impl Serialize for Terms<'_> {
            fn serialize<S: Serializer>(
                &self,
                serializer: S,
            ) -> std::result::Result<S::Ok, S::Error> {
                let mut seq = serializer.serialize_seq(Some(self.0.terms.len()))?;
                for (&(i, j), c) in &self.0.terms {
                    seq.serialize_element(&(i, j, c.to_string()))?;
                }
                seq.end()
            }
        }
        let mut s = serializer.serialize_struct("XYPolynomial", 1)?;
        s.serialize_field("terms", &Terms(self))?;
        s.end()
    }
}

impl<'de> Deserialize<'de> for XYPolynomial {
    fn deserialize<D: Deserializer<'de>>(
        deserializer: D,
    ) -> std::result::Result<XYPolynomial, D::Error> {
        #[derive(Deserialize)]
        struct Doc {
            terms: Vec<(u32, u32, String)>,
        }
        let doc = Doc::deserialize(deserializer)?;
        let mut out = XYPolynomial::zero();
        for (i, j, s) in doc.terms {
            let c = s.parse::<BigInt>().map_err(D::Error::custom)?;
            out.add_term(i, j, &c);
        }
        Ok(out)
    }
}

// ---------------------------------------------------------------------------
// Display helpers
// ---------------------------------------------------------------------------

fn monomial_q(i: usize) -> String {
    match i {
        0 => String::new(),
        1 => "q".into(),
        _ => format!("q^{i}"),
    }
}

fn monomial_xy(i: u32, j: u32) -> String {
    let x = match i {
        0 => String::new(),
        1 => "x".into(),
        _ => format!("x^{i}"),
    };
    let y = match j {
        0 => String::new(),
        1 => "y".into(),
        _ => format!("y^{j}"),
    };
    if x.is_empty() {
        y
    } else if y.is_empty() {
        x
    } else {
        format!("{x}*{y}")
    }
}

fn write_term(
    f: &mut fmt::Formatter<'_>,
    first: &mut bool,
    c: &BigInt,
    mono: &str,
) -> fmt::Result {
    use num_bigint::Sign;
    let (sign, mag) = (c.sign(), c.magnitude());
    if *first {
        if sign == Sign::Minus {
            write!(f, "-")?;
        }
        *first = false;
    } else if sign == Sign::Minus {
        write!(f, " - ")?;
    } else {
        write!(f, " + ")?;
    }
    if mono.is_empty() {
        write!(f, "{mag}")
    } else if mag.is_one() {
        write!(f, "{mono}")
    } else {
        write!(f, "{mag}*{mono}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn qp(cs: &[i64]) -> QPolynomial {
        QPolynomial::from_coeffs(cs.iter().map(|&c| BigInt::from(c)).collect())
    }

    #[test]
    fn q_integer_examples() {
        assert_eq!(q_integer(1).unwrap(), qp(&[1]));
        assert_eq!(q_integer(2).unwrap(), qp(&[1, 1]));
        assert_eq!(q_integer(4).unwrap(), qp(&[1, 1, 1, 1]));
        assert!(q_integer(0).is_err());
        let qi = QInteger::new(3).unwrap();
        assert_eq!(qi.d(), 3);
        assert_eq!(qi.expansion().coeffs().len(), 3);
        assert!(qi.expansion().coeffs().iter().all(|c| c.is_one()));
    }

    #[test]
    fn qpoly_degree_and_leading() {
        assert_eq!(QPolynomial::zero().degree(), None);
        assert_eq!(qp(&[3]).degree(), Some(0));
        let p = qp(&[0, 0, 5]);
        assert_eq!(p.degree(), Some(2));
        assert_eq!(p.leading_coeff(), Some(&BigInt::from(5)));
        assert!(!p.is_monic());
        assert!(qp(&[2, 1]).is_monic());
        // Trailing zeros trim away.
        assert_eq!(qp(&[1, 2, 0, 0]).degree(), Some(1));
    }

    #[test]
    fn qpoly_arithmetic() {
        let a = qp(&[1, 1]);
        let b = qp(&[-1, 1]);
        assert_eq!(&a * &b, qp(&[-1, 0, 1]));
        assert_eq!(&a + &b, qp(&[0, 2]));
        assert_eq!(&a - &a, QPolynomial::zero());
        assert_eq!(a.pow(0), QPolynomial::one());
        assert_eq!(a.pow(3), qp(&[1, 3, 3, 1]));
        assert_eq!(QPolynomial::zero().pow(0), QPolynomial::one());
        assert_eq!(QPolynomial::zero().pow(2), QPolynomial::zero());
    }

    #[test]
    fn xy_arithmetic_and_display() {
        let t = &(&XYPolynomial::x() * &XYPolynomial::x()) + &XYPolynomial::x();
        let t = &t + &XYPolynomial::y();
        assert_eq!(t.to_string(), "x^2 + x + y");
        assert_eq!(t.coeff(1, 0), BigInt::one());
        assert_eq!(t.coeff(5, 5), BigInt::zero());
        assert_eq!(t.eval(&BigInt::from(1), &BigInt::from(1)), BigInt::from(3));
        let neg = XYPolynomial::monomial(1, 1, BigInt::from(-2));
        assert_eq!(neg.to_string(), "-2*x*y");
    }

    #[test]
    fn xy_zero_coefficients_never_stored() {
        let mut p = XYPolynomial::monomial(2, 1, BigInt::from(4));
        p.add_term(2, 1, &BigInt::from(-4));
        assert!(p.is_zero());
        assert_eq!(p.term_count(), 0);
    }

    #[test]
    fn serde_wire_formats() {
        let p = qp(&[1, 0, 3]);
        assert_eq!(
            serde_json::to_string(&p).unwrap(),
            r#"{"coeffs":["1","0","3"]}"#
        );
        let back: QPolynomial = serde_json::from_str(r#"{"coeffs":["1","0","3"]}"#).unwrap();
        assert_eq!(back, p);

        let t = &(&XYPolynomial::x() * &XYPolynomial::x()) + &XYPolynomial::y();
        assert_eq!(
            serde_json::to_string(&t).unwrap(),
            r#"{"terms":[[0,1,"1"],[2,0,"1"]]}"#
        );
        let back: XYPolynomial = serde_json::from_str(r#"{"terms":[[0,1,"1"],[2,0,"1"]]}"#).unwrap();
        assert_eq!(back, t);
    }
}
