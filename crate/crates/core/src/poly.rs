//! Dense polynomials over [`Rational`].

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::rational::Rational;
use crate::sequences::binomial;

/// `Σ coefficients[i] · x^i`.
///
/// The highest stored coefficient is always nonzero; the zero polynomial
/// stores no coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct RationalPolynomial {
    coefficients: Vec<Rational>,
}

impl RationalPolynomial {
    pub fn new(mut coefficients: Vec<Rational>) -> Self {
        while coefficients.last().is_some_and(Rational::is_zero) {
            coefficients.pop();
        }
        RationalPolynomial { coefficients }
    }

    pub fn zero() -> Self {
        RationalPolynomial::default()
    }

    pub fn constant(c: Rational) -> Self {
        RationalPolynomial::new(vec![c])
    }

    /// `c · x^k`
    pub fn monomial(c: Rational, k: usize) -> Self {
        let mut coefficients = vec![Rational::zero(); k + 1];
        coefficients[k] = c;
        RationalPolynomial::new(coefficients)
    }

    pub fn coefficients(&self) -> &[Rational] {
        &self.coefficients
    }

    /// Coefficient of `x^k`, zero past the degree.
    pub fn coefficient(&self, k: usize) -> Rational {
        self.coefficients.get(k).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coefficients.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coefficients.len().checked_sub(1)
    }

    pub fn leading_coefficient(&self) -> Rational {
        self.coefficients.last().cloned().unwrap_or_default()
    }

    pub fn scale(&self, c: &Rational) -> Self {
        RationalPolynomial::new(self.coefficients.iter().map(|a| a * c).collect())
    }

    /// Horner evaluation.
    pub fn eval(&self, x: &Rational) -> Rational {
        self.coefficients
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * x + c)
    }

    pub fn eval_f64(&self, x: f64) -> f64 {
        self.coefficients
            .iter()
            .rev()
            .fold(0.0, |acc, c| acc * x + c.to_f64())
    }

    /// `p(a·x + b)`, expanded coefficient-wise:
    /// `[x^i] = Σ_{j≥i} c_j · C(j, i) · a^i · b^(j-i)`.
    pub fn compose_affine(&self, a: &Rational, b: &Rational) -> Self {
        let n = self.coefficients.len();
        let a_pows = powers(a, n);
        let b_pows = powers(b, n);
        let out = (0..n)
            .map(|i| {
                let mut acc = Rational::zero();
                for j in i..n {
                    let c = &self.coefficients[j];
                    if c.is_zero() || b_pows[j - i].is_zero() {
                        continue;
                    }
                    acc += Rational::from_integer(binomial(j, i)) * c * &b_pows[j - i];
                }
                acc * &a_pows[i]
            })
            .collect();
        RationalPolynomial::new(out)
    }

    pub fn derivative(&self) -> Self {
        RationalPolynomial::new(
            self.coefficients
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * Rational::from_integer(k as i64))
                .collect(),
        )
    }

    /// Antiderivative with zero constant term.
    pub fn antiderivative(&self) -> Self {
        let mut out = Vec::with_capacity(self.coefficients.len() + 1);
        out.push(Rational::zero());
        out.extend(
            self.coefficients
                .iter()
                .enumerate()
                .map(|(k, c)| c / Rational::from_integer(k as i64 + 1)),
        );
        RationalPolynomial::new(out)
    }

    /// `∫_0^1 p(x) dx`.
    pub fn integral_unit(&self) -> Rational {
        self.coefficients
            .iter()
            .enumerate()
            .map(|(k, c)| c / Rational::from_integer(k as i64 + 1))
            .sum()
    }

    /// Index of the lowest-degree coefficient where `self` and `other` differ.
    pub fn first_difference(&self, other: &Self) -> Option<usize> {
        let len = self.coefficients.len().max(other.coefficients.len());
        (0..len).find(|&k| self.coefficient(k) != other.coefficient(k))
    }
}

fn powers(base: &Rational, count: usize) -> Vec<Rational> {
    let mut out = Vec::with_capacity(count);
    let mut p = Rational::one();
    for _ in 0..count {
        out.push(p.clone());
        p = p * base;
    }
    out
}

impl Add<&RationalPolynomial> for &RationalPolynomial {
    type Output = RationalPolynomial;
    fn add(self, rhs: &RationalPolynomial) -> RationalPolynomial {
        let len = self.coefficients.len().max(rhs.coefficients.len());
        RationalPolynomial::new(
            (0..len)
                .map(|k| self.coefficient(k) + rhs.coefficient(k))
                .collect(),
        )
    }
}

impl Sub<&RationalPolynomial> for &RationalPolynomial {
    type Output = RationalPolynomial;
    fn sub(self, rhs: &RationalPolynomial) -> RationalPolynomial {
        let len = self.coefficients.len().max(rhs.coefficients.len());
        RationalPolynomial::new(
            (0..len)
                .map(|k| self.coefficient(k) - rhs.coefficient(k))
                .collect(),
        )
    }
}

impl Mul<&RationalPolynomial> for &RationalPolynomial {
    type Output = RationalPolynomial;
    fn mul(self, rhs: &RationalPolynomial) -> RationalPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return RationalPolynomial::zero();
        }
        let mut out = vec![Rational::zero(); self.coefficients.len() + rhs.coefficients.len() - 1];
        for (i, a) in self.coefficients.iter().enumerate() {
            for (j, b) in rhs.coefficients.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        RationalPolynomial::new(out)
    }
}

impl Neg for &RationalPolynomial {
    type Output = RationalPolynomial;
    fn neg(self) -> RationalPolynomial {
        RationalPolynomial::new(self.coefficients.iter().map(|c| -c).collect())
    }
}

impl fmt::Display for RationalPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coefficients.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let magnitude = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            first = false;
            let show_coef = k == 0 || magnitude != Rational::one();
            if show_coef {
                write!(f, "{magnitude}")?;
            }
            match k {
                0 => {}
                1 => write!(f, "{}x", if show_coef { "·" } else { "" })?,
                _ => write!(f, "{}x^{k}", if show_coef { "·" } else { "" })?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for RationalPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

// JSON array of "p/q" strings, constant term first; zero is ["0"].
impl Serialize for RationalPolynomial {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        if self.is_zero() {
            [Rational::zero()].serialize(serializer)
        } else {
            self.coefficients.serialize(serializer)
        }
    }
}

impl<'de> Deserialize<'de> for RationalPolynomial {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        Ok(RationalPolynomial::new(Vec::<Rational>::deserialize(
            deserializer,
        )?))
    }
}
