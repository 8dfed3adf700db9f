//! Every threshold used by the verification suite.

use serde::Serialize;

/// Tolerance table. No check carries its own epsilon.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Tolerances {
    /// Requested absolute tolerance for every quadrature call.
    pub quadrature: f64,
    /// `|I - closed form|` for the four integrals.
    pub integral_closed_form: f64,
    /// `|I(1-t) - 2 I(1+t)|`.
    pub two_integral: f64,
    /// `|I(ln(1+t)/t) + I(ln t/(1+t))|`.
    pub integration_by_parts: f64,
    /// Residuals of both functional equations.
    pub functional_equation: f64,
    /// Series/integral agreement for the Lesko pair.
    pub lesko: f64,
    /// Relative error of the bisection identity.
    pub bisection_relative: f64,
    /// Slack on the `0 < E_n < 2^-n` bound.
    pub remainder_slack: f64,
    /// Partial-fraction expansion against `1/sin²x`.
    pub partial_fraction: f64,
    /// Riemann sums and product forms at `n = 10^5`.
    pub riemann_value: f64,
    /// Series vs integral evaluation of `S(x)`.
    pub dilog_agreement: f64,
    /// Series-mode tolerance used for that comparison.
    pub dilog_series: f64,
    /// `S(±1/2)` against `π²/6`, `-π²/12`.
    pub dilog_endpoint: f64,
    pub ode_residual: f64,
    /// Quadrature of `t^n ln t` and `(ln t)^k` against the exact values.
    pub term_integral: f64,
    /// Regularized targets against their closed forms.
    pub regularized_target: f64,
    /// Bracketing average of the Bernoulli series against `π²/6 - 3/2`.
    pub bracketing_average: f64,
    /// Partial sums at 40 terms must exceed this in magnitude.
    pub divergence_threshold: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Tolerances {
            quadrature: 1e-12,
            integral_closed_form: 1e-10,
            two_integral: 1e-11,
            integration_by_parts: 1e-10,
            functional_equation: 1e-9,
            lesko: 1e-8,
            bisection_relative: 1e-9,
            remainder_slack: 1e-12,
            partial_fraction: 1e-8,
            riemann_value: 1e-2,
            dilog_agreement: 1e-9,
            dilog_series: 1e-11,
            dilog_endpoint: 1e-10,
            ode_residual: 1e-12,
            term_integral: 1e-12,
            regularized_target: 1e-9,
            bracketing_average: 5e-3,
            divergence_threshold: 1e6,
        }
    }
}

impl Tolerances {
    /// Defaults with the quadrature tolerance replaced.
    pub fn with_quadrature(tol: f64) -> Self {
        Tolerances {
            quadrature: tol,
            ..Tolerances::default()
        }
    }
}
