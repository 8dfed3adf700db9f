//! Interior Riemann sums and product-form limits over `k = 1..n-1`.

use std::f64::consts::PI;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::{IntegralKind, NeumaierSum};
use crate::error::{Error, Result};

fn check_n(n: u64) -> Result<()> {
    if n < 2 {
        Err(Error::domain(format!("need n >= 2, got {n}")))
    } else {
        Ok(())
    }
}

fn sample(kind: IntegralKind, k: u64, n: u64) -> f64 {
    let nf = n as f64;
    kind.integrand(k as f64 / nf, (n - k) as f64 / nf)
}

/// `(1/n) Σ_{k=1}^{n-1} f(k/n)` for the kind's integrand.
pub fn riemann_sum(kind: IntegralKind, n: u64) -> Result<f64> {
    check_n(n)?;
    let sum: NeumaierSum = (1..n).map(|k| sample(kind, k, n)).collect();
    Ok(sum.value() / n as f64)
}

/// Which product `Π_{k=1}^{n-1} (1 ± k/n)^{1/k}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum ProductKind {
    /// `(1 - k/n)`, log tends to `-π²/6`
    Minus,
    /// `(1 + k/n)`, log tends to `π²/12`
    Plus,
}

impl ProductKind {
    pub fn limit(self) -> f64 {
        match self {
            ProductKind::Minus => -PI * PI / 6.0,
            ProductKind::Plus => PI * PI / 12.0,
        }
    }
}

impl fmt::Display for ProductKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ProductKind::Minus => "MINUS",
            ProductKind::Plus => "PLUS",
        })
    }
}

impl FromStr for ProductKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "minus" => Ok(ProductKind::Minus),
            "plus" => Ok(ProductKind::Plus),
            _ => Err(Error::domain(format!("unknown product kind `{s}`"))),
        }
    }
}

/// Logarithm of the product, accumulated as `Σ (1/k) ln(1 ± k/n)`.
pub fn product_form(kind: ProductKind, n: u64) -> Result<f64> {
    check_n(n)?;
    let nf = n as f64;
    let sum: NeumaierSum = (1..n)
        .map(|k| {
            let ratio = k as f64 / nf;
            let log = match kind {
                ProductKind::Minus if 2 * k <= n => (-ratio).ln_1p(),
                ProductKind::Minus => ((n - k) as f64 / nf).ln(),
                ProductKind::Plus => ratio.ln_1p(),
            };
            log / k as f64
        })
        .collect();
    Ok(sum.value())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Monotonicity {
    Increasing,
    Decreasing,
    NotMonotone,
}

/// Direction of `f(k/n)` over `k = 1..n-1`, strict.
pub fn sampled_monotonicity(kind: IntegralKind, n: u64) -> Result<Monotonicity> {
    check_n(n)?;
    let mut increasing = true;
    let mut decreasing = true;
    let mut prev = sample(kind, 1, n);
    for k in 2..n {
        let cur = sample(kind, k, n);
        increasing &= cur > prev;
        decreasing &= cur < prev;
        prev = cur;
    }
    Ok(match (increasing, decreasing) {
        (true, false) => Monotonicity::Increasing,
        (false, true) => Monotonicity::Decreasing,
        _ => Monotonicity::NotMonotone,
    })
}
