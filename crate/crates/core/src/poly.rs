//! Dense univariate polynomials over [`Rational`] and the [`Discrepancy`]
//! classifier.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::arith::Rational;

/// A polynomial with exponent-ascending coefficients.
///
/// The coefficient vector never ends in a zero, so the zero polynomial is the
/// empty vector and structural equality is mathematical equality.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Poly {
    coeffs: Vec<Rational>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Poly::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Poly::from_coeffs(vec![c])
    }

    /// The indeterminate itself.
    pub fn x() -> Self {
        Poly::monomial(Rational::one(), 1)
    }

    /// `c * x^k`.
    pub fn monomial(c: Rational, k: usize) -> Self {
        if c.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![Rational::zero(); k + 1];
        coeffs[k] = c;
        Poly { coeffs }
    }

    /// `slope * x + intercept`.
    pub fn linear(slope: Rational, intercept: Rational) -> Self {
        Poly::from_coeffs(vec![intercept, slope])
    }

    pub fn from_coeffs(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Rational::is_zero) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Poly::from_coeffs(coeffs.iter().map(|&c| Rational::from(c)).collect())
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<Rational> {
        self.coeffs
    }

    /// Coefficient of `x^k`; zero past the degree.
    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    /// `None` for the zero polynomial (degree minus infinity).
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn leading_coeff(&self) -> Rational {
        self.coeffs.last().cloned().unwrap_or_else(Rational::zero)
    }

    pub fn constant_term(&self) -> Rational {
        self.coeff(0)
    }

    pub fn scale(&self, c: &Rational) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly { coeffs: self.coeffs.iter().map(|a| a * c).collect() }
    }

    /// `self + c * other` without building the scaled intermediate.
    pub fn add_scaled(&mut self, other: &Poly, c: &Rational) {
        if c.is_zero() || other.is_zero() {
            return;
        }
        if self.coeffs.len() < other.coeffs.len() {
            self.coeffs.resize(other.coeffs.len(), Rational::zero());
        }
        for (a, b) in self.coeffs.iter_mut().zip(&other.coeffs) {
            *a += b * c;
        }
        self.trim();
    }

    /// Multiplication by `x^k`.
    pub fn shift(&self, k: usize) -> Poly {
        if self.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![Rational::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Poly { coeffs }
    }

    pub fn pow(&self, exp: u32) -> Poly {
        let mut acc = Poly::one();
        for _ in 0..exp {
            acc = &acc * self;
        }
        acc
    }

    /// Horner evaluation.
    pub fn eval(&self, v: &Rational) -> Rational {
        self.coeffs.iter().rev().fold(Rational::zero(), |acc, c| acc * v + c)
    }

    /// `self(inner(x))`, by Horner's scheme over polynomials.
    pub fn compose(&self, inner: &Poly) -> Poly {
        let mut acc = Poly::zero();
        for c in self.coeffs.iter().rev() {
            acc = &acc * inner;
            acc = acc + Poly::constant(c.clone());
        }
        acc
    }

    pub fn derivative(&self) -> Poly {
        Poly::from_coeffs(self.coeffs.iter().enumerate().skip(1).map(|(k, c)| c * Rational::from(k as i64)).collect())
    }

    /// The antiderivative vanishing at zero.
    pub fn integrate_from_zero(&self) -> Poly {
        if self.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = Vec::with_capacity(self.coeffs.len() + 1);
        coeffs.push(Rational::zero());
        for (k, c) in self.coeffs.iter().enumerate() {
            coeffs.push(c / Rational::from(k as i64 + 1));
        }
        Poly { coeffs }
    }

    /// Renders as `c_k*v^k + ... + c_0` with the given variable name.
    pub fn display_with<'a>(&'a self, var: &'a str) -> PolyDisplay<'a> {
        PolyDisplay { poly: self, var }
    }

    /// Exponent-ascending coefficient strings, the report form.
    pub fn to_strings(&self) -> Vec<String> {
        self.coeffs.iter().map(Rational::to_string).collect()
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(Rational::is_zero) {
            self.coeffs.pop();
        }
    }
}

pub fn poly_add(p: &Poly, q: &Poly) -> Poly {
    p + q
}

pub fn poly_sub(p: &Poly, q: &Poly) -> Poly {
    p - q
}

pub fn poly_mul(p: &Poly, q: &Poly) -> Poly {
    p * q
}

pub fn poly_compose(p: &Poly, q: &Poly) -> Poly {
    p.compose(q)
}

pub fn poly_eval(p: &Poly, v: &Rational) -> Rational {
    p.eval(v)
}

pub fn poly_derivative(p: &Poly) -> Poly {
    p.derivative()
}

pub fn poly_integrate_from_zero(p: &Poly) -> Poly {
    p.integrate_from_zero()
}

impl Add<&Poly> for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let mut out = self.clone();
        out.add_scaled(rhs, &Rational::one());
        out
    }
}

impl Add for Poly {
    type Output = Poly;
    fn add(mut self, rhs: Poly) -> Poly {
        self.add_scaled(&rhs, &Rational::one());
        self
    }
}

impl Add<&Poly> for Poly {
    type Output = Poly;
    fn add(mut self, rhs: &Poly) -> Poly {
        self.add_scaled(rhs, &Rational::one());
        self
    }
}

impl Sub<&Poly> for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        let mut out = self.clone();
        out.add_scaled(rhs, &-Rational::one());
        out
    }
}

impl Sub for Poly {
    type Output = Poly;
    fn sub(mut self, rhs: Poly) -> Poly {
        self.add_scaled(&rhs, &-Rational::one());
        self
    }
}

impl Sub<&Poly> for Poly {
    type Output = Poly;
    fn sub(mut self, rhs: &Poly) -> Poly {
        self.add_scaled(rhs, &-Rational::one());
        self
    }
}

impl Mul<&Poly> for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        Poly::from_coeffs(coeffs)
    }
}

impl Mul for Poly {
    type Output = Poly;
    fn mul(self, rhs: Poly) -> Poly {
        &self * &rhs
    }
}

impl Mul<&Poly> for Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        &self * rhs
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl Neg for Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        -&self
    }
}

pub struct PolyDisplay<'a> {
    poly: &'a Poly,
    var: &'a str,
}

impl fmt::Display for PolyDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.poly.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, c) in self.poly.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let magnitude = c.abs();
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else if c.is_negative() {
                f.write_str(" - ")?;
            } else {
                f.write_str(" + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "{magnitude}")?,
                _ => {
                    if !magnitude.is_one() {
                        write!(f, "{magnitude}*")?;
                    }
                    f.write_str(self.var)?;
                    if k > 1 {
                        write!(f, "^{k}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.display_with("x").fmt(f)
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly({self})")
    }
}

impl Serialize for Poly {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.coeffs.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Poly {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        Ok(Poly::from_coeffs(Vec::<Rational>::deserialize(deserializer)?))
    }
}

/// The exact difference between two sides of an identity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Discrepancy {
    Zero,
    /// The sides differ by a nonzero constant.
    Constant(Rational),
    /// `witness` is the smallest positive exponent with a nonzero coefficient.
    NonConstant {
        difference: Poly,
        witness: usize,
    },
}

impl Discrepancy {
    pub fn of_difference(difference: Poly) -> Self {
        match difference.degree() {
            None => Discrepancy::Zero,
            Some(0) => Discrepancy::Constant(difference.constant_term()),
            Some(_) => {
                let witness = difference
                    .coeffs()
                    .iter()
                    .enumerate()
                    .skip(1)
                    .find(|(_, c)| !c.is_zero())
                    .map(|(k, _)| k)
                    .expect("nonconstant polynomial has a positive-degree term");
                Discrepancy::NonConstant { difference, witness }
            }
        }
    }

    /// For scalar identities.
    pub fn of_scalars(lhs: &Rational, rhs: &Rational) -> Self {
        let d = lhs - rhs;
        if d.is_zero() {
            Discrepancy::Zero
        } else {
            Discrepancy::Constant(d)
        }
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, Discrepancy::Zero)
    }

    pub fn is_nonconstant(&self) -> bool {
        matches!(self, Discrepancy::NonConstant { .. })
    }

    /// Zero or Constant.
    pub fn is_constant_or_zero(&self) -> bool {
        !self.is_nonconstant()
    }

    pub fn class_name(&self) -> &'static str {
        match self {
            Discrepancy::Zero => "zero",
            Discrepancy::Constant(_) => "constant",
            Discrepancy::NonConstant { .. } => "nonconstant",
        }
    }

    /// The constant difference, zero included.
    pub fn constant(&self) -> Option<Rational> {
        match self {
            Discrepancy::Zero => Some(Rational::zero()),
            Discrepancy::Constant(c) => Some(c.clone()),
            Discrepancy::NonConstant { .. } => None,
        }
    }
}

impl fmt::Display for Discrepancy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Discrepancy::Zero => f.write_str("zero"),
            Discrepancy::Constant(c) => write!(f, "constant {c}"),
            Discrepancy::NonConstant { difference, witness } => {
                write!(f, "nonconstant (witness x^{witness}): {difference}")
            }
        }
    }
}

/// Classifies `lhs - rhs`.
pub fn classify_discrepancy(lhs: &Poly, rhs: &Poly) -> Discrepancy {
    Discrepancy::of_difference(lhs - rhs)
}
