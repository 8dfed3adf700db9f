//! Partial sums of `ζ(2)` and `η(2)`, the bisection identity for `1/sin²x`,
//! and the two divergent Bernoulli/Genocchi sums read as asymptotic series.

use std::f64::consts::PI;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::One;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::quadrature::{integrate, IntegralKind, NeumaierSum};
use crate::rational::Rational;
use crate::sequences::SequenceCache;
use crate::DEFAULT_TOL;

/// Largest `N` accepted by the exact partial sums.
pub const EXACT_PARTIAL_LIMIT: u64 = 10_000;

fn check_partial(n: u64, exact: bool) -> Result<()> {
    if n == 0 {
        return Err(Error::domain("partial sums need N >= 1"));
    }
    if exact && n > EXACT_PARTIAL_LIMIT {
        return Err(Error::Capacity {
            requested: n as usize,
            limit: EXACT_PARTIAL_LIMIT as usize,
        });
    }
    Ok(())
}

// Σ sign(k) / k², over the common denominator lcm(1..N)².
fn exact_square_sum(n: u64, alternating: bool) -> Rational {
    let lcm = (1..=n).fold(BigInt::one(), |acc, k| acc.lcm(&BigInt::from(k)));
    let mut numer = BigInt::from(0);
    for k in 1..=n {
        let q = &lcm / BigInt::from(k);
        let sq = &q * &q;
        if alternating && k % 2 == 0 {
            numer -= sq;
        } else {
            numer += sq;
        }
    }
    Rational::new(numer, &lcm * &lcm)
}

/// `Σ_{n=1}^N 1/n²` exactly.
pub fn zeta2_partial(n: u64) -> Result<Rational> {
    check_partial(n, true)?;
    Ok(exact_square_sum(n, false))
}

/// `Σ_{n=1}^N 1/n²` in binary64, summed smallest term first.
pub fn zeta2_partial_f64(n: u64) -> Result<f64> {
    check_partial(n, false)?;
    let sum: NeumaierSum = (1..=n)
        .rev()
        .map(|k| {
            let kf = k as f64;
            1.0 / (kf * kf)
        })
        .collect();
    Ok(sum.value())
}

/// `Σ_{n=1}^N (-1)^{n-1}/n²` exactly.
pub fn eta2_partial(n: u64) -> Result<Rational> {
    check_partial(n, true)?;
    Ok(exact_square_sum(n, true))
}

pub fn eta2_partial_f64(n: u64) -> Result<f64> {
    check_partial(n, false)?;
    let sum: NeumaierSum = (1..=n)
        .rev()
        .map(|k| {
            let kf = k as f64;
            let sign = if k % 2 == 1 { 1.0 } else { -1.0 };
            sign / (kf * kf)
        })
        .collect();
    Ok(sum.value())
}

/// Default truncation of the partial-fraction expansion.
pub const PARTIAL_FRACTION_TERMS: u64 = 10_000;
pub const MAX_BISECTION_LEVEL: u32 = 20;

/// Bisection identity, remainder and partial-fraction expansion at one `x`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct MeiReport {
    pub x: f64,
    pub level: u32,
    /// `4^{-n} Σ_k 1/sin²((x + kπ)/2^n)` over the centred index range.
    pub bisection_value: f64,
    /// `1/sin²x`.
    pub exact_value: f64,
    /// `4^{-n} Σ_k [1/sin²θ_k - 1/θ_k²]`, `θ_k = (x + kπ)/2^n`.
    pub remainder: f64,
    /// `2^{-n}`.
    pub e_n_bound: f64,
    /// `1/x² + Σ_{k≤K} [(x+kπ)^{-2} + (x-kπ)^{-2}] + 2/(π²K)`.
    pub partial_fraction_value: f64,
    pub truncation: u64,
    pub tail_estimate: f64,
}

// 1/sin²θ - 1/θ², with a series near zero to avoid cancellation.
fn csc2_minus_inv2(theta: f64) -> f64 {
    if theta.abs() < 1e-2 {
        let t2 = theta * theta;
        1.0 / 3.0 + t2 / 15.0 + 2.0 * t2 * t2 / 189.0 + t2 * t2 * t2 / 675.0
    } else {
        let s = theta.sin();
        1.0 / (s * s) - 1.0 / (theta * theta)
    }
}

/// Index range `-2^{n-1} ..= 2^{n-1} - 1` (just `0` at level zero).
fn centred_indices(level: u32) -> std::ops::RangeInclusive<i64> {
    if level == 0 {
        0..=0
    } else {
        let half = 1i64 << (level - 1);
        -half..=half - 1
    }
}

pub fn mei_bisection(x: f64, level: u32) -> Result<MeiReport> {
    mei_bisection_with_terms(x, level, PARTIAL_FRACTION_TERMS)
}

/// As [`mei_bisection`] with an explicit partial-fraction truncation `K`.
pub fn mei_bisection_with_terms(x: f64, level: u32, terms: u64) -> Result<MeiReport> {
    if !(x > 0.0 && x < PI) || x < 1e-9 || PI - x < 1e-9 {
        return Err(Error::domain(format!(
            "x must lie in (0, π) away from the poles, got {x}"
        )));
    }
    if level > MAX_BISECTION_LEVEL {
        return Err(Error::domain(format!(
            "bisection level {level} exceeds {MAX_BISECTION_LEVEL}"
        )));
    }
    if terms == 0 {
        return Err(Error::domain("partial-fraction truncation must be positive"));
    }
    let scale = (1u64 << level) as f64;
    let mut bisection = NeumaierSum::new();
    let mut remainder = NeumaierSum::new();
    for k in centred_indices(level) {
        let theta = (x + k as f64 * PI) / scale;
        let s = theta.sin();
        bisection.add(1.0 / (s * s));
        remainder.add(csc2_minus_inv2(theta));
    }
    let inv_sq = 1.0 / (scale * scale);

    let mut partial = NeumaierSum::new();
    for k in (1..=terms).rev() {
        let kp = k as f64 * PI;
        partial.add(1.0 / ((x + kp) * (x + kp)) + 1.0 / ((x - kp) * (x - kp)));
    }
    partial.add(1.0 / (x * x));
    let tail_estimate = 2.0 / (PI * PI * terms as f64);
    partial.add(tail_estimate);

    let s = x.sin();
    Ok(MeiReport {
        x,
        level,
        bisection_value: bisection.value() * inv_sq,
        exact_value: 1.0 / (s * s),
        remainder: remainder.value() * inv_sq,
        e_n_bound: 1.0 / scale,
        partial_fraction_value: partial.value(),
        truncation: terms,
        tail_estimate,
    })
}

/// Which divergent sum.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Proposition {
    /// `Σ (-1)^{n-1} script_b(n)`, regularized to `π²/6 - 3/2`.
    #[serde(rename = "PROP_B")]
    B,
    /// `Σ (-1)^{n-1} G_n`, regularized to `π²/12`.
    #[serde(rename = "PROP_G")]
    G,
}

impl Proposition {
    pub fn closed_form(self) -> f64 {
        match self {
            Proposition::B => PI * PI / 6.0 - 1.5,
            Proposition::G => PI * PI / 12.0,
        }
    }

    pub fn tag(self) -> &'static str {
        match self {
            Proposition::B => "PROP_B",
            Proposition::G => "PROP_G",
        }
    }

    /// Term `n ≥ 1` of the series.
    pub fn term(self, n: usize) -> Result<Rational> {
        let seq = SequenceCache::global();
        match self {
            // (-1)^{n-1} (-1)^{n-1} B_{2n} = B_{2n}
            Proposition::B => seq.bernoulli(2 * n),
            Proposition::G => {
                let g = seq.genocchi(n)?;
                Ok(if n % 2 == 1 { g } else { -g })
            }
        }
    }
}

impl fmt::Display for Proposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for Proposition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().replace('-', "_").as_str() {
            "prop_b" | "b" => Ok(Proposition::B),
            "prop_g" | "g" => Ok(Proposition::G),
            _ => Err(Error::domain(format!("unknown proposition `{s}`"))),
        }
    }
}

/// Value assigned to the divergent sum through its defining integral.
pub fn regularized_target(which: Proposition) -> Result<f64> {
    regularized_target_with_tol(which, DEFAULT_TOL)
}

pub fn regularized_target_with_tol(which: Proposition, tol: f64) -> Result<f64> {
    Ok(match which {
        Proposition::B => -integrate(IntegralKind::LogOver1mt, tol)?.value - 1.5,
        Proposition::G => -integrate(IntegralKind::LogOver1pt, tol)?.value,
    })
}

pub const MAX_ASYMPTOTIC_TERMS: usize = 40;

/// Partial sums and optimal-truncation diagnostics for a divergent series.
///
/// `terms[i]` is the term of index `n = i + 1`. The smallest term is taken
/// over the nonzero terms (the odd Genocchi terms vanish identically), and
/// among equal magnitudes the last one wins: that is where the terms stop
/// shrinking.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SeriesReport {
    pub which: Proposition,
    pub terms: Vec<Rational>,
    pub term_values: Vec<f64>,
    pub partial_sums: Vec<Rational>,
    pub partial_sum_values: Vec<f64>,
    /// Zero-based position in `terms`.
    pub smallest_term_index: usize,
    pub smallest_term: Rational,
    /// Partial sum of the terms before the smallest one.
    pub optimal_estimate: f64,
    /// Mean of the partial sums just before and just after the smallest term.
    pub bracketing_average: f64,
    /// `min_i |partial_sums[i] - regularized_target|`.
    pub best_truncation_error: f64,
    /// Term `m_max + 1`, the first one left out.
    pub next_term: Rational,
    pub regularized_target: f64,
    pub classically_convergent: bool,
}

pub fn asymptotic_report(which: Proposition, m_max: usize) -> Result<SeriesReport> {
    asymptotic_report_with_tol(which, m_max, DEFAULT_TOL)
}

pub fn asymptotic_report_with_tol(which: Proposition, m_max: usize, tol: f64) -> Result<SeriesReport> {
    if !(1..=MAX_ASYMPTOTIC_TERMS).contains(&m_max) {
        return Err(Error::domain(format!(
            "m_max must lie in 1..={MAX_ASYMPTOTIC_TERMS}, got {m_max}"
        )));
    }
    let terms = (1..=m_max)
        .map(|n| which.term(n))
        .collect::<Result<Vec<_>>>()?;
    let mut partial_sums = Vec::with_capacity(m_max);
    let mut acc = Rational::zero();
    for t in &terms {
        acc += t;
        partial_sums.push(acc.clone());
    }

    let smallest_term_index = terms
        .iter()
        .enumerate()
        .filter(|(_, t)| !t.is_zero())
        .fold(None::<(usize, Rational)>, |best, (i, t)| {
            let mag = t.abs();
            match best {
                Some((_, ref b)) if mag > *b => best,
                _ => Some((i, mag)),
            }
        })
        .map_or(0, |(i, _)| i);
    let smallest_term = terms[smallest_term_index].clone();

    let before = if smallest_term_index == 0 {
        Rational::zero()
    } else {
        partial_sums[smallest_term_index - 1].clone()
    };
    let after = &partial_sums[smallest_term_index];
    let optimal_estimate = before.to_f64();
    let bracketing_average = ((&before + after) / Rational::from_integer(2)).to_f64();

    let target = regularized_target_with_tol(which, tol)?;
    let partial_sum_values: Vec<f64> = partial_sums.iter().map(Rational::to_f64).collect();
    let best_truncation_error = partial_sum_values
        .iter()
        .map(|s| (s - target).abs())
        .fold(f64::INFINITY, f64::min);

    Ok(SeriesReport {
        which,
        term_values: terms.iter().map(Rational::to_f64).collect(),
        terms,
        partial_sums,
        partial_sum_values,
        smallest_term_index,
        smallest_term,
        optimal_estimate,
        bracketing_average,
        best_truncation_error,
        next_term: which.term(m_max + 1)?,
        regularized_target: target,
        classically_convergent: false,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    const ZETA2: f64 = PI * PI / 6.0;
    const ETA2: f64 = PI * PI / 12.0;

    #[test]
    fn exact_partials() {
        assert_eq!(zeta2_partial(1).unwrap(), Rational::one());
        assert_eq!(zeta2_partial(3).unwrap(), Rational::new(49, 36));
        assert_eq!(eta2_partial(1).unwrap(), Rational::one());
        assert_eq!(eta2_partial(2).unwrap(), Rational::new(3, 4));
        assert!(zeta2_partial(0).is_err());
        assert!(matches!(zeta2_partial(10_001), Err(Error::Capacity { .. })));
    }

    #[test]
    fn exact_matches_naive_rational_sum() {
        for n in [1u64, 2, 7, 30] {
            let naive: Rational = (1..=n as i64).map(|k| Rational::new(1, k * k)).sum();
            assert_eq!(zeta2_partial(n).unwrap(), naive);
        }
    }

    #[test]
    fn telescoping_tail_bound() {
        for n in [10u64, 100, 1000, 10_000] {
            let gap = ZETA2 - zeta2_partial(n).unwrap().to_f64();
            assert!(gap > 0.0 && gap < 1.0 / n as f64, "N={n}");
        }
        let gap = ZETA2 - zeta2_partial_f64(1_000_000).unwrap();
        assert!(gap > 0.0 && gap < 1e-6);
    }

    #[test]
    fn alternating_tail_bound() {
        for n in 1..=50u64 {
            let err = ETA2 - eta2_partial(n).unwrap().to_f64();
            let next = 1.0 / ((n + 1) * (n + 1)) as f64;
            assert!(err.abs() < next, "N={n}");
            // even N undershoots, odd N overshoots
            assert_eq!(err > 0.0, n % 2 == 0, "N={n}");
        }
        assert!((ETA2 - eta2_partial_f64(1000).unwrap()).abs() < 1e-6);
    }

    #[test]
    fn bisection_hand_values() {
        let r = mei_bisection(PI / 2.0, 0).unwrap();
        assert!((r.bisection_value - 1.0).abs() < 1e-15);
        let r = mei_bisection(PI / 2.0, 1).unwrap();
        assert!((r.bisection_value - 1.0).abs() < 1e-15);
        let r = mei_bisection(1.0, 10).unwrap();
        assert!((r.bisection_value - r.exact_value).abs() < 1e-10 * r.exact_value);
        assert!((r.exact_value - 1.412_282_927_437_392).abs() < 1e-12);
        assert_eq!(r.e_n_bound, 1.0 / 1024.0);
    }

    #[test]
    fn bisection_grid_and_remainder_bound() {
        for i in 0..=20 {
            let x = 0.1 + (PI - 0.2) * i as f64 / 20.0;
            for n in 0..=12 {
                let r = mei_bisection_with_terms(x, n, 10).unwrap();
                let rel = (r.bisection_value - r.exact_value).abs() / r.exact_value;
                assert!(rel < 1e-9, "x={x} n={n} rel={rel:e}");
            }
        }
        for i in 0..=20 {
            let x = 0.05 + (PI / 2.0 - 0.05) * i as f64 / 20.0;
            for n in 0..=12 {
                let r = mei_bisection_with_terms(x, n, 10).unwrap();
                assert!(r.remainder > 0.0, "x={x} n={n}");
                assert!(r.remainder < r.e_n_bound + 1e-12, "x={x} n={n}");
            }
        }
    }

    #[test]
    fn partial_fraction_expansion() {
        for x in [0.3, 1.0, 2.5] {
            let r = mei_bisection(x, 4).unwrap();
            assert!((r.partial_fraction_value - r.exact_value).abs() < 1e-8, "x={x}");
        }
    }

    #[test]
    fn bisection_domain() {
        assert!(mei_bisection(0.0, 3).is_err());
        assert!(mei_bisection(PI, 3).is_err());
        assert!(mei_bisection(1.0, 21).is_err());
        assert!(mei_bisection(1.0, 20).is_ok());
    }

    #[test]
    fn remainder_series_branch_is_continuous() {
        let a = csc2_minus_inv2(0.0099999);
        let b = csc2_minus_inv2(0.0100001);
        assert!((a - b).abs() < 1e-9);
    }

    #[test]
    fn prop_b_first_terms() {
        let report = asymptotic_report(Proposition::B, 6).unwrap();
        let expected = [(1, 6), (-1, 30), (1, 42), (-1, 30), (5, 66), (-691, 2730)];
        for (t, (p, q)) in report.terms.iter().zip(expected) {
            assert_eq!(t, &Rational::new(p, q));
        }
        assert_eq!(report.smallest_term_index, 2);
        assert!((report.bracketing_average - 0.1452).abs() < 1e-4);
        assert!((report.regularized_target - 0.144934).abs() < 1e-6);
        assert!((report.optimal_estimate - report.regularized_target).abs()
            <= report.smallest_term.abs().to_f64());
        assert!(report.best_truncation_error <= report.smallest_term.abs().to_f64());
        assert!(!report.classically_convergent);
    }

    #[test]
    fn prop_g_single_term() {
        let report = asymptotic_report(Proposition::G, 1).unwrap();
        assert_eq!(report.terms, vec![Rational::new(1, 2)]);
        let gap = (report.partial_sum_values[0] - ETA2).abs();
        assert!((gap - 0.32).abs() < 0.01);
        assert!(gap < report.next_term.abs().to_f64());
    }

    #[test]
    fn divergence_at_forty_terms() {
        for which in [Proposition::B, Proposition::G] {
            let report = asymptotic_report(which, 40).unwrap();
            assert!(report.partial_sum_values[39].abs() > 1e6, "{which}");
            let best = report.best_truncation_error;
            assert!(best <= report.smallest_term.abs().to_f64(), "{which}");
            assert!(
                (report.optimal_estimate - report.regularized_target).abs()
                    <= report.smallest_term.abs().to_f64(),
                "{which}"
            );
        }
        let b = asymptotic_report(Proposition::B, 40).unwrap();
        assert!(b.term_values[39].abs() > 1e10);
        for (i, w) in b.partial_sums.windows(2).enumerate() {
            assert_eq!(&w[1] - &w[0], b.terms[i + 1]);
        }
    }

    #[test]
    fn report_domain() {
        assert!(asymptotic_report(Proposition::B, 0).is_err());
        assert!(asymptotic_report(Proposition::B, 41).is_err());
    }

    #[test]
    fn targets() {
        let b = regularized_target(Proposition::B).unwrap();
        let g = regularized_target(Proposition::G).unwrap();
        assert!((b - (ZETA2 - 1.5)).abs() < 1e-9);
        assert!((g - ETA2).abs() < 1e-9);
        assert!((b + 1.5 - 2.0 * g).abs() < 1e-9);
    }
}
