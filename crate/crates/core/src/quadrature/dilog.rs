//! The power series `S(x) = Σ 2^n x^n / n²`, its derivative and ODE, the two
//! functional equations and the Lesko series/integral pair.

use std::fmt;

use serde::{Deserialize, Serialize};

use super::tanh_sinh::{integrate_unit, ln_complement};
use super::{check_tol, NeumaierSum, QuadResult};
use crate::error::{Error, Result};

/// `h(x) = ∫_0^x ln(1 - t)/t dt` for `|x| ≤ 1`, via `t = x·s`:
/// `h(x) = ∫_0^1 ln(1 - x s)/s ds`.
pub fn log1m_integral(x: f64, tol: f64) -> Result<QuadResult> {
    if !(-1.0..=1.0).contains(&x) {
        return Err(Error::domain(format!("h(x) needs |x| <= 1, got {x}")));
    }
    check_tol(tol)?;
    integrate_unit(
        |s, c| {
            let log = if x == 1.0 {
                ln_complement(s, c)
            } else if s < 0.5 {
                (-x * s).ln_1p()
            } else {
                // 1 - x s = (1 - x) + x (1 - s)
                ((1.0 - x) + x * c).ln()
            };
            log / s
        },
        tol,
    )
}

fn logistic(y: f64) -> f64 {
    if y >= 0.0 {
        1.0 / (1.0 + (-y).exp())
    } else {
        let e = y.exp();
        e / (1.0 + e)
    }
}

/// `∫_1^x ln t/(1 + t) dt` for `x > 0`, via `t = e^{Ls}`, `L = ln x`:
/// `L² ∫_0^1 s / (1 + e^{-Ls}) ds`.
pub fn log_ratio_integral(x: f64, tol: f64) -> Result<QuadResult> {
    if !(x > 0.0) || !x.is_finite() {
        return Err(Error::domain(format!("needs finite x > 0, got {x}")));
    }
    check_tol(tol)?;
    let l = x.ln();
    let inner = integrate_unit(|s, _| s * logistic(l * s), tol)?;
    Ok(QuadResult {
        value: l * l * inner.value,
        err_estimate: l * l * inner.err_estimate,
        evaluations: inner.evaluations,
    })
}

/// `|h(x) + h(-x) - h(x²)/2|`.
pub fn functional_eq_dilog(x: f64, tol: f64) -> Result<f64> {
    if !(-1.0..=1.0).contains(&x) {
        return Err(Error::domain(format!("needs |x| <= 1, got {x}")));
    }
    let a = log1m_integral(x, tol)?.value;
    let b = log1m_integral(-x, tol)?.value;
    let c = log1m_integral(x * x, tol)?.value;
    Ok((a + b - 0.5 * c).abs())
}

/// `|g(x) + g(1/x) - (ln x)²/2|` with `g(x) = ∫_1^x ln t/(1+t) dt`.
pub fn functional_eq_inverse(x: f64, tol: f64) -> Result<f64> {
    if !(x > 0.0) {
        return Err(Error::domain(format!("needs x > 0, got {x}")));
    }
    let a = log_ratio_integral(x, tol)?.value;
    let b = log_ratio_integral(1.0 / x, tol)?.value;
    let l = x.ln();
    Ok((a + b - 0.5 * l * l).abs())
}

/// How to evaluate `S(x)`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "mode", content = "tol")]
pub enum DilogMode {
    Series(f64),
    Integral(f64),
}

impl DilogMode {
    pub fn name(&self) -> &'static str {
        match self {
            DilogMode::Series(_) => "series",
            DilogMode::Integral(_) => "integral",
        }
    }
}

impl fmt::Display for DilogMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Parses `series` or `integral` paired with a tolerance.
pub fn parse_dilog_mode(name: &str, tol: f64) -> Result<DilogMode> {
    match name {
        "series" => Ok(DilogMode::Series(tol)),
        "integral" => Ok(DilogMode::Integral(tol)),
        _ => Err(Error::domain(format!("unknown mode `{name}`"))),
    }
}

/// `S(x) = Σ_{n≥1} (2x)^n / n²` on `[-1/2, 1/2]`.
///
/// Series mode stops on an explicit tail bound: geometric for `|2x| < 1`;
/// at `2x = 1` the telescoping bracket `1/(N+1) < tail < 1/N` (its midpoint
/// is added, error `≤ 1/(2N(N+1))`); at `2x = -1` the alternating tail is
/// estimated by half the next term (error `≤ 1/(N+1)³`). Integral mode
/// evaluates `-h(2x)`.
pub fn dilog_s(x: f64, mode: DilogMode) -> Result<f64> {
    if !(-0.5..=0.5).contains(&x) {
        return Err(Error::domain(format!("S(x) needs |x| <= 1/2, got {x}")));
    }
    match mode {
        DilogMode::Integral(tol) => Ok(-log1m_integral(2.0 * x, tol)?.value),
        DilogMode::Series(tol) => {
            if !(tol > 0.0) {
                return Err(Error::domain(format!("tolerance must be positive, got {tol}")));
            }
            Ok(s_series(2.0 * x, tol))
        }
    }
}

fn s_series(r: f64, tol: f64) -> f64 {
    if r == 0.0 {
        return 0.0;
    }
    let mut sum = NeumaierSum::new();
    if r.abs() < 1.0 {
        let q = r.abs();
        let mut power = 1.0;
        let mut n = 1u64;
        loop {
            power *= r;
            let nf = n as f64;
            sum.add(power / (nf * nf));
            let tail = q.powi(n as i32 + 1) / ((nf + 1.0) * (nf + 1.0) * (1.0 - q));
            if tail < tol || power == 0.0 {
                return sum.value();
            }
            n += 1;
        }
    }
    if r > 0.0 {
        let n_terms = (1.0 / (2.0 * tol)).sqrt().ceil() as u64;
        for n in (1..=n_terms).rev() {
            let nf = n as f64;
            sum.add(1.0 / (nf * nf));
        }
        let nf = n_terms as f64;
        sum.add(0.5 * (1.0 / nf + 1.0 / (nf + 1.0)));
        sum.value()
    } else {
        let n_terms = tol.powf(-1.0 / 3.0).ceil() as u64;
        for n in (1..=n_terms).rev() {
            let nf = n as f64;
            let sign = if n % 2 == 1 { -1.0 } else { 1.0 };
            sum.add(sign / (nf * nf));
        }
        let next = (n_terms + 1) as f64;
        let sign = if (n_terms + 1) % 2 == 1 { -1.0 } else { 1.0 };
        sum.add(0.5 * sign / (next * next));
        sum.value()
    }
}

fn check_open_half(x: f64) -> Result<()> {
    if x.abs() < 0.5 {
        Ok(())
    } else {
        Err(Error::domain(format!("needs |x| < 1/2, got {x}")))
    }
}

/// `S'(x) = -ln(1 - 2x)/x`, with `S'(0) = 2`.
pub fn s_prime(x: f64) -> Result<f64> {
    check_open_half(x)?;
    if x == 0.0 {
        return Ok(2.0);
    }
    Ok(-(-2.0 * x).ln_1p() / x)
}

/// `|S_N'(x) + x S_N''(x) - 2/(1 - 2x)|` for the series truncated after
/// `n_terms` terms and differentiated term by term.
pub fn ode_residual(x: f64, n_terms: u32) -> Result<f64> {
    check_open_half(x)?;
    if n_terms == 0 {
        return Err(Error::domain("truncation must keep at least one term"));
    }
    let mut first = NeumaierSum::new();
    let mut second = NeumaierSum::new();
    for n in 1..=n_terms {
        let coef = 2f64.powi(n as i32) / n as f64;
        first.add(coef * x.powi(n as i32 - 1));
        if n >= 2 {
            second.add(coef * (n - 1) as f64 * x.powi(n as i32 - 2));
        }
    }
    Ok((first.value() + x * second.value() - 2.0 / (1.0 - 2.0 * x)).abs())
}

/// Both sides of `Σ r^n/(an + b) = (1/a) ∫_0^1 r u^{b/a} / (1 - r u) du`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct LeskoPair {
    pub series_value: f64,
    pub integral_value: f64,
    pub terms: u64,
}

/// Series truncation: for `|r| < 1` stop once
/// `|r|^{N+1} / ((aN + b)(1 - |r|)) < tol`; for `r = -1` the alternating
/// series is summed until consecutive terms differ by at most `2 tol`, and
/// the average of the last two partial sums is returned.
pub fn lesko_pair(r: f64, a: f64, b: f64, tol: f64) -> Result<LeskoPair> {
    if !(-1.0..1.0).contains(&r) {
        return Err(Error::domain(format!("r must lie in [-1, 1), got {r}")));
    }
    if !(a > 0.0) {
        return Err(Error::domain(format!("a must be positive, got {a}")));
    }
    if !(b >= 0.0) {
        return Err(Error::domain(format!("b must be non-negative, got {b}")));
    }
    check_tol(tol)?;

    let term = |n: u64| 1.0 / (a * n as f64 + b);
    let mut sum = NeumaierSum::new();
    let mut terms = 0u64;
    if r == 0.0 {
        // every term vanishes
    } else if r > -1.0 {
        let q = r.abs();
        let mut power = 1.0;
        loop {
            terms += 1;
            power *= r;
            sum.add(power * term(terms));
            let bound = q.powi(terms as i32 + 1) / ((a * terms as f64 + b) * (1.0 - q));
            if bound < tol || power == 0.0 {
                break;
            }
        }
    } else {
        loop {
            terms += 1;
            let sign = if terms % 2 == 1 { -1.0 } else { 1.0 };
            sum.add(sign * term(terms));
            if (term(terms + 1) - term(terms + 2)) <= 2.0 * tol {
                break;
            }
        }
        let sign = if (terms + 1) % 2 == 1 { -1.0 } else { 1.0 };
        sum.add(0.5 * sign * term(terms + 1));
    }

    let exponent = b / a;
    let integral = integrate_unit(
        |u, c| {
            let power = if exponent == 0.0 { 1.0 } else { u.powf(exponent) };
            // 1 - r u = (1 - r) + r (1 - u)
            r * power / ((1.0 - r) + r * c)
        },
        tol,
    )?;
    Ok(LeskoPair {
        series_value: sum.value(),
        integral_value: integral.value / a,
        terms,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::{E, LN_2, PI};

    const TOL: f64 = 1e-12;

    #[test]
    fn h_closed_values() {
        let h1 = log1m_integral(1.0, TOL).unwrap().value;
        let hm1 = log1m_integral(-1.0, TOL).unwrap().value;
        assert!((h1 + PI * PI / 6.0).abs() < 1e-12);
        assert!((hm1 - PI * PI / 12.0).abs() < 1e-12);
        assert_eq!(log1m_integral(0.0, TOL).unwrap().value, 0.0);
        assert!(log1m_integral(1.5, TOL).is_err());
    }

    #[test]
    fn functional_equations() {
        assert_eq!(functional_eq_dilog(0.0, TOL).unwrap(), 0.0);
        assert!(functional_eq_dilog(1.0, TOL).unwrap() < 1e-9);
        for i in 1..=9 {
            let x = i as f64 / 10.0;
            assert!(functional_eq_dilog(x, TOL).unwrap() < 1e-9, "x={x}");
            assert!(functional_eq_dilog(-x, TOL).unwrap() < 1e-9, "x=-{x}");
        }
        assert_eq!(functional_eq_inverse(1.0, TOL).unwrap(), 0.0);
        assert!(functional_eq_inverse(E, TOL).unwrap() < 1e-9);
        let a = functional_eq_inverse(0.1, TOL).unwrap();
        let b = functional_eq_inverse(10.0, TOL).unwrap();
        assert!(a < 1e-9 && b < 1e-9);
        assert!((a - b).abs() < 1e-12);
        assert!(functional_eq_inverse(0.0, TOL).is_err());
        assert!(functional_eq_inverse(-2.0, TOL).is_err());
    }

    #[test]
    fn log_ratio_against_direct_quadrature() {
        // g(x) for x in (0, 1] straight on [x, 1]: ∫_x^1 = -g(x)
        let x: f64 = 0.3;
        let direct = integrate_unit(
            |s, _| {
                let t = x + (1.0 - x) * s;
                t.ln() / (1.0 + t) * (1.0 - x)
            },
            TOL,
        )
        .unwrap()
        .value;
        let g = log_ratio_integral(x, TOL).unwrap().value;
        assert!((g + direct).abs() < 1e-12);
    }

    #[test]
    fn s_examples() {
        for mode in [DilogMode::Series(1e-12), DilogMode::Integral(1e-12)] {
            assert_eq!(dilog_s(0.0, mode).unwrap(), 0.0);
            assert!((dilog_s(0.5, mode).unwrap() - PI * PI / 6.0).abs() < 1e-11, "{mode}");
            assert!((dilog_s(-0.5, mode).unwrap() + PI * PI / 12.0).abs() < 1e-11, "{mode}");
        }
        assert!(dilog_s(0.51, DilogMode::Series(1e-9)).is_err());
    }

    #[test]
    fn series_and_integral_agree_on_grid() {
        for i in 0..=20 {
            let x = -0.5 + i as f64 / 20.0;
            let s = dilog_s(x, DilogMode::Series(1e-11)).unwrap();
            let q = dilog_s(x, DilogMode::Integral(1e-12)).unwrap();
            assert!((s - q).abs() < 1e-9, "x={x}: {s} vs {q}");
        }
    }

    #[test]
    fn derivative_and_ode() {
        assert_eq!(s_prime(0.0).unwrap(), 2.0);
        assert!((s_prime(0.25).unwrap() - 2.772588722239781).abs() < 1e-14);
        assert!(ode_residual(0.25, 60).unwrap() < 1e-12);
        assert!(s_prime(0.5).is_err());
        assert!(ode_residual(-0.5, 10).is_err());
        // residual of the truncated series is 2 (2x)^N / (1 - 2x)
        let x = 0.3;
        let n = 10;
        let expected = 2.0 * (2.0 * x as f64).powi(n) / (1.0 - 2.0 * x);
        assert!((ode_residual(x, n as u32).unwrap() - expected).abs() < 1e-12);
    }

    #[test]
    fn s_prime_is_derivative_of_s() {
        // central difference of the integral form
        for x in [-0.3, -0.1, 0.05, 0.2, 0.4] {
            let h = 1e-4;
            let fwd = dilog_s(x + h, DilogMode::Integral(1e-13)).unwrap();
            let bwd = dilog_s(x - h, DilogMode::Integral(1e-13)).unwrap();
            let fd = (fwd - bwd) / (2.0 * h);
            assert!((fd - s_prime(x).unwrap()).abs() < 1e-6, "x={x}");
        }
    }

    #[test]
    fn lesko_examples() {
        let p = lesko_pair(0.5, 1.0, 0.0, TOL).unwrap();
        assert!((p.series_value - LN_2).abs() < 1e-11);
        assert!((p.series_value - p.integral_value).abs() < 10.0 * TOL);
        let p = lesko_pair(-1.0, 1.0, 0.0, TOL).unwrap();
        assert!((p.series_value + LN_2).abs() < 1e-11, "{}", p.series_value);
        assert!((p.integral_value + LN_2).abs() < 1e-11);
        for (r, a, b) in [(-0.9, 1.0, 0.0), (0.9, 2.0, 3.0), (0.3, 1.5, 0.7)] {
            let p = lesko_pair(r, a, b, TOL).unwrap();
            assert!((p.series_value - p.integral_value).abs() < 1e-8, "{r} {a} {b}");
        }
        assert!(lesko_pair(1.0, 1.0, 0.0, TOL).is_err());
        assert!(lesko_pair(0.5, 0.0, 0.0, TOL).is_err());
        assert!(lesko_pair(0.5, 1.0, -1.0, TOL).is_err());
    }
}
