//! Double-exponential quadrature on `(0, 1)`.
//!
//! The substitution `t = 1 / (1 + e^{-π sinh u})` maps the real line onto
//! `(0, 1)` and makes the Jacobian `π cosh u · t · (1 - t)` decay doubly
//! exponentially, so logarithmic endpoint singularities cost nothing extra.
//! Both `t` and its complement `1 - t` are produced directly from `u`, which
//! lets integrands evaluate `ln t` or `ln(1 - t)` without cancellation when
//! the node is within a few ulps of an endpoint. The endpoints themselves
//! are never evaluated.

use std::f64::consts::PI;

use super::{NeumaierSum, QuadResult};
use crate::error::{Error, Result};

/// Refinement levels after the unit-step level; step size is `2^-level`.
pub const MAX_LEVEL: u32 = 12;

const MIN_LEVEL: u32 = 3;

/// Outermost abscissa considered; at `u = 6.5` the complement `1 - t`
/// underflows binary64.
const U_LIMIT: f64 = 6.5;

#[derive(Clone, Copy, Debug)]
struct Node {
    t: f64,
    complement: f64,
    weight: f64,
}

fn node(u: f64) -> Node {
    let s = PI * u.sinh();
    let t = 1.0 / (1.0 + (-s).exp());
    let complement = 1.0 / (1.0 + s.exp());
    Node {
        t,
        complement,
        weight: PI * u.cosh() * t * complement,
    }
}

struct Evaluator<F> {
    f: F,
    evaluations: u64,
}

impl<F: Fn(f64, f64) -> f64> Evaluator<F> {
    /// Weighted contribution of the node pair `±u`, plus its magnitude.
    fn pair(&mut self, u: f64) -> (f64, f64) {
        let mut value = 0.0;
        let mut magnitude = 0.0;
        for n in [node(u), node(-u)] {
            if n.weight == 0.0 || n.t == 0.0 || n.complement == 0.0 {
                continue;
            }
            self.evaluations += 1;
            let term = n.weight * (self.f)(n.t, n.complement);
            value += term;
            magnitude += term.abs();
        }
        (value, magnitude)
    }
}

/// Smallest half-width whose outermost pair is negligible against the
/// centre contribution.
fn truncation_radius<F: Fn(f64, f64) -> f64>(eval: &mut Evaluator<F>, scale: f64) -> f64 {
    let mut u = 1.0;
    while u < U_LIMIT {
        let (_, magnitude) = eval.pair(u);
        if magnitude <= 1e-20 * scale.max(f64::MIN_POSITIVE) {
            return u;
        }
        u += 0.5;
    }
    U_LIMIT
}

/// Integrates `f(t, 1 - t)` over `(0, 1)` to absolute tolerance `tol`.
///
/// Stops once successive levels differ by at most `tol` (or by the
/// rounding floor of the current sum, whichever is larger); the reported
/// error estimate is that difference, never below the rounding floor.
pub fn integrate_unit<F>(f: F, tol: f64) -> Result<QuadResult>
where
    F: Fn(f64, f64) -> f64,
{
    let mut eval = Evaluator { f, evaluations: 0 };
    let centre = node(0.0);
    eval.evaluations += 1;
    let centre_term = centre.weight * (eval.f)(centre.t, centre.complement);
    let radius = truncation_radius(&mut eval, centre_term.abs().max(1e-300));

    // Level 0, unit step.
    let mut sum = NeumaierSum::new();
    let mut magnitude = centre_term.abs();
    sum.add(centre_term);
    let mut k = 1.0;
    while k <= radius {
        let (v, m) = eval.pair(k);
        sum.add(v);
        magnitude += m;
        k += 1.0;
    }
    let mut estimate = sum.value();
    let mut step = 1.0;
    let mut err_estimate = f64::INFINITY;

    for level in 1..=MAX_LEVEL {
        step *= 0.5;
        let mut fresh = NeumaierSum::new();
        let mut fresh_magnitude = 0.0;
        let mut j = 1u64;
        loop {
            let u = j as f64 * step;
            if u > radius {
                break;
            }
            let (v, m) = eval.pair(u);
            fresh.add(v);
            fresh_magnitude += m;
            j += 2;
        }
        // Trapezoid sums on a halved grid: T_h = T_{2h}/2 + h Σ_odd
        let previous = estimate;
        estimate = 0.5 * previous + step * fresh.value();
        magnitude = 0.5 * magnitude + step * fresh_magnitude;
        let floor = 16.0 * f64::EPSILON * magnitude;
        let diff = (estimate - previous).abs();
        err_estimate = diff.max(floor);
        if level >= MIN_LEVEL && diff <= tol.max(floor) {
            return Ok(QuadResult {
                value: estimate,
                err_estimate,
                evaluations: eval.evaluations,
            });
        }
    }
    Err(Error::Accuracy {
        tol,
        best: QuadResult {
            value: estimate,
            err_estimate,
            evaluations: eval.evaluations,
        },
    })
}

/// `ln t`, switching to `ln1p(-(1 - t))` near `t = 1`.
pub fn ln_t(t: f64, complement: f64) -> f64 {
    if t < 0.5 {
        t.ln()
    } else {
        (-complement).ln_1p()
    }
}

/// `ln(1 - t)`, switching to `ln1p(-t)` near `t = 0`.
pub fn ln_complement(t: f64, complement: f64) -> f64 {
    if t < 0.5 {
        (-t).ln_1p()
    } else {
        complement.ln()
    }
}
