//! Numerical evaluation of the four log-singular integrals on `(0, 1)`,
//! their Riemann-sum and product-form limits, the power series `S(x)` and
//! the functional equations of the associated dilogarithm-type integrals.

pub mod dilog;
pub mod limits;
pub mod tanh_sinh;

use std::f64::consts::PI;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use dilog::{
    dilog_s, functional_eq_dilog, functional_eq_inverse, lesko_pair, log1m_integral,
    log_ratio_integral, ode_residual, s_prime, DilogMode, LeskoPair,
};
pub use limits::{product_form, riemann_sum, sampled_monotonicity, Monotonicity, ProductKind};

pub const MIN_TOL: f64 = 1e-15;
pub const MAX_TOL: f64 = 1e-3;

/// Value, heuristic error bound and integrand evaluation count.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct QuadResult {
    pub value: f64,
    pub err_estimate: f64,
    pub evaluations: u64,
}

/// One of the four integrals over `(0, 1)` with a closed form in `π²`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum IntegralKind {
    /// `∫ ln t / (1 - t) dt = -π²/6`
    #[serde(rename = "LOG_OVER_1MT")]
    LogOver1mt,
    /// `∫ ln t / (1 + t) dt = -π²/12`
    #[serde(rename = "LOG_OVER_1PT")]
    LogOver1pt,
    /// `∫ ln(1 + t) / t dt = π²/12`
    #[serde(rename = "LOG1P_OVER_T")]
    Log1pOverT,
    /// `∫ ln(1 - t) / t dt = -π²/6`
    #[serde(rename = "LOG1M_OVER_T")]
    Log1mOverT,
}

impl IntegralKind {
    pub const ALL: [IntegralKind; 4] = [
        IntegralKind::LogOver1mt,
        IntegralKind::LogOver1pt,
        IntegralKind::Log1pOverT,
        IntegralKind::Log1mOverT,
    ];

    pub fn closed_form(self) -> f64 {
        match self {
            IntegralKind::LogOver1mt | IntegralKind::Log1mOverT => -PI * PI / 6.0,
            IntegralKind::LogOver1pt => -PI * PI / 12.0,
            IntegralKind::Log1pOverT => PI * PI / 12.0,
        }
    }

    /// Integrand at `t`, given both `t` and `1 - t`.
    pub fn integrand(self, t: f64, complement: f64) -> f64 {
        use tanh_sinh::{ln_complement, ln_t};
        match self {
            IntegralKind::LogOver1mt => ln_t(t, complement) / complement,
            IntegralKind::LogOver1pt => ln_t(t, complement) / (1.0 + t),
            IntegralKind::Log1pOverT => t.ln_1p() / t,
            IntegralKind::Log1mOverT => ln_complement(t, complement) / t,
        }
    }

    pub fn tag(self) -> &'static str {
        match self {
            IntegralKind::LogOver1mt => "LOG_OVER_1MT",
            IntegralKind::LogOver1pt => "LOG_OVER_1PT",
            IntegralKind::Log1pOverT => "LOG1P_OVER_T",
            IntegralKind::Log1mOverT => "LOG1M_OVER_T",
        }
    }

    pub fn slug(self) -> &'static str {
        match self {
            IntegralKind::LogOver1mt => "log-over-1mt",
            IntegralKind::LogOver1pt => "log-over-1pt",
            IntegralKind::Log1pOverT => "log1p-over-t",
            IntegralKind::Log1mOverT => "log1m-over-t",
        }
    }
}

impl fmt::Display for IntegralKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for IntegralKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        IntegralKind::ALL
            .into_iter()
            .find(|k| k.tag().eq_ignore_ascii_case(s) || k.slug() == s)
            .ok_or_else(|| Error::domain(format!("unknown integral kind `{s}`")))
    }
}

pub(crate) fn check_tol(tol: f64) -> Result<()> {
    if (MIN_TOL..=MAX_TOL).contains(&tol) {
        Ok(())
    } else {
        Err(Error::domain(format!(
            "tolerance {tol:e} outside [{MIN_TOL:e}, {MAX_TOL:e}]"
        )))
    }
}

pub fn integrate(kind: IntegralKind, tol: f64) -> Result<QuadResult> {
    check_tol(tol)?;
    tanh_sinh::integrate_unit(|t, c| kind.integrand(t, c), tol)
}

/// `|I(LOG_OVER_1MT) - 2 I(LOG_OVER_1PT)|`.
pub fn two_integral_residual(tol: f64) -> Result<f64> {
    let minus = integrate(IntegralKind::LogOver1mt, tol)?;
    let plus = integrate(IntegralKind::LogOver1pt, tol)?;
    Ok((minus.value - 2.0 * plus.value).abs())
}

/// Compensated (Neumaier) running sum.
#[derive(Clone, Copy, Debug, Default)]
pub struct NeumaierSum {
    sum: f64,
    compensation: f64,
}

impl NeumaierSum {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add(&mut self, x: f64) {
        let t = self.sum + x;
        if self.sum.abs() >= x.abs() {
            self.compensation += (self.sum - t) + x;
        } else {
            self.compensation += (x - t) + self.sum;
        }
        self.sum = t;
    }

    pub fn value(&self) -> f64 {
        self.sum + self.compensation
    }
}

impl FromIterator<f64> for NeumaierSum {
    fn from_iter<I: IntoIterator<Item = f64>>(iter: I) -> Self {
        let mut s = NeumaierSum::new();
        for x in iter {
            s.add(x);
        }
        s
    }
}
