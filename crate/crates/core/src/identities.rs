//! Bernoulli and Genocchi polynomials and exact certificates for the
//! identities relating them.
//!
//! Every check compares two [`RationalPolynomial`]s coefficient by
//! coefficient (scalars are compared as constant polynomials), so a passing
//! certificate is an exact equality, not a sampled one.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::poly::RationalPolynomial;
use crate::rational::Rational;
use crate::sequences::{binomial, SequenceCache};

/// `B_n(x) = Σ_k C(n,k) B_{n-k} x^k`.
pub fn bernoulli_polynomial(n: usize) -> Result<RationalPolynomial> {
    let b = SequenceCache::global().bernoulli_prefix(n)?;
    Ok(RationalPolynomial::new(
        (0..=n)
            .map(|k| Rational::from_integer(binomial(n, k)) * &b[n - k])
            .collect(),
    ))
}

/// `G_n(x) = Σ_k C(n,k) G_{n-k} x^k`.
pub fn genocchi_polynomial(n: usize) -> Result<RationalPolynomial> {
    let g = SequenceCache::global().genocchi_prefix(n)?;
    Ok(RationalPolynomial::new(
        (0..=n)
            .map(|k| Rational::from_integer(binomial(n, k)) * &g[n - k])
            .collect(),
    ))
}

/// The same polynomial through the other ordering, `Σ_k C(n,k) G_k x^{n-k}`.
pub fn genocchi_polynomial_by_index(n: usize) -> Result<RationalPolynomial> {
    let g = SequenceCache::global().genocchi_prefix(n)?;
    let mut coefficients = vec![Rational::zero(); n + 1];
    for (k, gk) in g.iter().enumerate() {
        coefficients[n - k] = Rational::from_integer(binomial(n, k)) * gk;
    }
    Ok(RationalPolynomial::new(coefficients))
}

/// Outcome of one exact identity check.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Certificate {
    pub identity: String,
    pub index: usize,
    pub passed: bool,
    /// Lowest degree whose coefficients differ, if any.
    pub first_difference: Option<usize>,
    /// Largest absolute coefficient difference; zero on pass.
    pub max_abs_deviation: Rational,
}

impl Certificate {
    pub fn compare(
        identity: impl Into<String>,
        index: usize,
        lhs: &RationalPolynomial,
        rhs: &RationalPolynomial,
    ) -> Self {
        let diff = lhs - rhs;
        let max_abs_deviation = diff
            .coefficients()
            .iter()
            .map(Rational::abs)
            .max()
            .unwrap_or_default();
        let first_difference = lhs.first_difference(rhs);
        Certificate {
            identity: identity.into(),
            index,
            passed: first_difference.is_none(),
            first_difference,
            max_abs_deviation,
        }
    }

    pub fn compare_values(
        identity: impl Into<String>,
        index: usize,
        lhs: &Rational,
        rhs: &Rational,
    ) -> Self {
        Certificate::compare(
            identity,
            index,
            &RationalPolynomial::constant(lhs.clone()),
            &RationalPolynomial::constant(rhs.clone()),
        )
    }
}

/// Ordered collection of certificates for one index.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CertificateBundle {
    pub certificates: Vec<Certificate>,
}

impl CertificateBundle {
    pub fn passed(&self) -> bool {
        self.certificates.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Certificate> {
        self.certificates.iter().filter(|c| !c.passed)
    }
}

fn sign_power(k: usize) -> Rational {
    if k % 2 == 0 {
        Rational::one()
    } else {
        -Rational::one()
    }
}

/// `G_n(1 - x) = (-1)^{n+1} G_n(x)`.
pub fn check_reflection(n: usize) -> Result<Certificate> {
    let g = genocchi_polynomial(n)?;
    let lhs = g.compose_affine(&-Rational::one(), &Rational::one());
    let rhs = g.scale(&sign_power(n + 1));
    Ok(Certificate::compare("G_n(1-x) = (-1)^(n+1) G_n(x)", n, &lhs, &rhs))
}

/// Which halving identity to certify.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum HalvingVariant {
    /// `G_n(x) = B_n(x) - 2^n B_n(x/2)`
    Ii,
    /// `G_n(x) = 2^n B_n((x+1)/2) - B_n(x)`
    Iii,
    /// `B_n(x) = 2^{n-1} [B_n((x+1)/2) + B_n(x/2)]`
    Iv,
}

impl HalvingVariant {
    pub const ALL: [HalvingVariant; 3] = [HalvingVariant::Ii, HalvingVariant::Iii, HalvingVariant::Iv];

    pub fn name(self) -> &'static str {
        match self {
            HalvingVariant::Ii => "ii",
            HalvingVariant::Iii => "iii",
            HalvingVariant::Iv => "iv",
        }
    }
}

pub fn check_halving(n: usize, variant: HalvingVariant) -> Result<Certificate> {
    let b = bernoulli_polynomial(n)?;
    let half = Rational::new(1, 2);
    let b_half = b.compose_affine(&half, &Rational::zero());
    let b_shift = b.compose_affine(&half, &half);
    let two_n = Rational::pow2(n as i64);
    let (identity, lhs, rhs) = match variant {
        HalvingVariant::Ii => (
            "G_n(x) = B_n(x) - 2^n B_n(x/2)",
            genocchi_polynomial(n)?,
            &b - &b_half.scale(&two_n),
        ),
        HalvingVariant::Iii => (
            "G_n(x) = 2^n B_n((x+1)/2) - B_n(x)",
            genocchi_polynomial(n)?,
            &b_shift.scale(&two_n) - &b,
        ),
        HalvingVariant::Iv => (
            "B_n(x) = 2^(n-1) [B_n((x+1)/2) + B_n(x/2)]",
            b.clone(),
            (&b_shift + &b_half).scale(&Rational::pow2(n as i64 - 1)),
        ),
    };
    Ok(Certificate::compare(identity, n, &lhs, &rhs))
}

/// `G_k(x+1) + G_k(x) = k x^{k-1}`, stated for `k ≥ 2`.
pub fn check_addition_recurrence(k: usize) -> Result<Certificate> {
    if k < 2 {
        return Err(Error::domain(format!(
            "addition recurrence holds for k >= 2, got k = {k}"
        )));
    }
    let g = genocchi_polynomial(k)?;
    let lhs = &g.compose_affine(&Rational::one(), &Rational::one()) + &g;
    let rhs = RationalPolynomial::monomial(Rational::from_integer(k as i64), k - 1);
    Ok(Certificate::compare("G_k(x+1) + G_k(x) = k x^(k-1)", k, &lhs, &rhs))
}

/// `G_k(1) + 2 Σ_{i=2}^n G_k(i) + G_k(n+1) = k Σ_{i=1}^n i^{k-1}`.
pub fn power_sum_check(k: usize, n: usize) -> Result<Certificate> {
    if k < 2 || n < 1 {
        return Err(Error::domain(format!(
            "power-sum identity needs k >= 2 and n >= 1, got k = {k}, n = {n}"
        )));
    }
    let g = genocchi_polynomial(k)?;
    let at = |i: usize| g.eval(&Rational::from_integer(i as i64));
    let middle: Rational = (2..=n).map(at).sum();
    let lhs = at(1) + Rational::from_integer(2) * middle + at(n + 1);
    let rhs = Rational::from_integer(k as i64)
        * (1..=n)
            .map(|i| Rational::from_integer(i as i64).pow(k as i32 - 1))
            .sum::<Rational>();
    Ok(Certificate::compare_values(
        format!("G_k(1) + 2 sum G_k(i) + G_k(n+1) = k sum i^(k-1) [n = {n}]"),
        k,
        &lhs,
        &rhs,
    ))
}

/// `G_n(1) = -G_n` for `n ≥ 2`.
pub fn check_genocchi_at_one(n: usize) -> Result<Certificate> {
    if n < 2 {
        return Err(Error::domain(format!("G_n(1) = -G_n needs n >= 2, got {n}")));
    }
    let g = genocchi_polynomial(n)?;
    Ok(Certificate::compare_values(
        "G_n(1) = -G_n",
        n,
        &g.eval(&Rational::one()),
        &-g.eval(&Rational::zero()),
    ))
}

/// Both orderings of the defining sum for `G_n(x)` agree.
pub fn check_genocchi_orderings(n: usize) -> Result<Certificate> {
    Ok(Certificate::compare(
        "sum C(n,k) G_(n-k) x^k = sum C(n,k) G_k x^(n-k)",
        n,
        &genocchi_polynomial(n)?,
        &genocchi_polynomial_by_index(n)?,
    ))
}

/// Special values at `1/2` and `1/4`, for index `n ≥ 1`.
pub fn check_special_values(n: usize) -> Result<CertificateBundle> {
    if n == 0 {
        return Err(Error::domain("special values are checked for n >= 1"));
    }
    let half = Rational::new(1, 2);
    let quarter = Rational::new(1, 4);
    let one = Rational::one();
    let seq = SequenceCache::global();

    let b_n = bernoulli_polynomial(n)?;
    let b_2n = bernoulli_polynomial(2 * n)?;
    let g_2n = genocchi_polynomial(2 * n)?;
    let bn = seq.bernoulli(n)?;
    let b2n = seq.bernoulli(2 * n)?;
    let ni = n as i64;

    let certificates = vec![
        Certificate::compare_values(
            "G_2n(1/2) = 0",
            n,
            &g_2n.eval(&half),
            &Rational::zero(),
        ),
        Certificate::compare_values(
            "B_2n(1/2) = 4^n B_2n(1/4)",
            n,
            &b_2n.eval(&half),
            &(Rational::pow2(2 * ni) * b_2n.eval(&quarter)),
        ),
        Certificate::compare_values(
            "B_n(1/2) = (2^(1-n) - 1) B_n",
            n,
            &b_n.eval(&half),
            &((Rational::pow2(1 - ni) - &one) * &bn),
        ),
        Certificate::compare_values(
            "B_2n(1/2) = (2^(1-2n) - 1) B_2n",
            n,
            &b_2n.eval(&half),
            &((Rational::pow2(1 - 2 * ni) - &one) * &b2n),
        ),
        Certificate::compare_values(
            "B_2n(1/4) = 2^(-2n) (2^(1-2n) - 1) B_2n",
            n,
            &b_2n.eval(&quarter),
            &(Rational::pow2(-2 * ni) * (Rational::pow2(1 - 2 * ni) - &one) * &b2n),
        ),
        Certificate::compare_values(
            "G_n = (1 - 2^n) B_n",
            n,
            &seq.genocchi(n)?,
            &((&one - Rational::pow2(ni)) * &bn),
        ),
    ];
    Ok(CertificateBundle { certificates })
}

/// `G_n'(x) = n G_{n-1}(x)` and `∫_0^1 G_n = -2 G_{n+1} / (n+1)`.
pub fn check_calculus(n: usize) -> Result<CertificateBundle> {
    if n == 0 {
        return Err(Error::domain("calculus relations are checked for n >= 1"));
    }
    let g = genocchi_polynomial(n)?;
    let g_prev = genocchi_polynomial(n - 1)?;
    let g_next = SequenceCache::global().genocchi(n + 1)?;
    let derivative = Certificate::compare(
        "G_n'(x) = n G_(n-1)(x)",
        n,
        &g.derivative(),
        &g_prev.scale(&Rational::from_integer(n as i64)),
    );
    let integral = Certificate::compare_values(
        "int_0^1 G_n = -2 G_(n+1) / (n+1)",
        n,
        &g.integral_unit(),
        &(Rational::from_integer(-2) * g_next / Rational::from_integer(n as i64 + 1)),
    );
    Ok(CertificateBundle {
        certificates: vec![derivative, integral],
    })
}
