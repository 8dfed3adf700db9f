//! Bernoulli and Genocchi numbers, their sign-straightened variants, exact
//! even zeta values and a pair of exact auxiliary integrals.
//!
//! Conventions follow the generating functions
//!
//! ```text
//! z / (e^z - 1) = Σ B_n z^n / n!        z / (e^z + 1) = Σ G_n z^n / n!
//! ```
//!
//! so `B_1 = -1/2` and `G_1 = 1/2`, and `G_n = -(2^n - 1) B_n` holds for every
//! `n ≥ 0`.

use std::sync::{OnceLock, RwLock};

use num_bigint::BigInt;
use num_traits::One;

use crate::error::{Error, Result};
use crate::rational::{PiPower, Rational};

/// Largest index served by the default cache.
pub const DEFAULT_CAPACITY: usize = 5000;

/// Write-once memo tables for `B_n` and `G_n`.
///
/// Tables only ever grow; an entry is never rewritten once pushed. Readers
/// share a read lock, and the first caller needing a longer prefix extends
/// the table under the write lock.
#[derive(Debug)]
pub struct SequenceCache {
    limit: usize,
    bernoulli: RwLock<Vec<Rational>>,
    genocchi: RwLock<Vec<Rational>>,
}

impl SequenceCache {
    pub fn new(limit: usize) -> Self {
        SequenceCache {
            limit,
            bernoulli: RwLock::new(vec![Rational::one()]),
            genocchi: RwLock::new(vec![Rational::zero(), Rational::new(1, 2)]),
        }
    }

    /// Process-wide cache with [`DEFAULT_CAPACITY`].
    pub fn global() -> &'static SequenceCache {
        static CACHE: OnceLock<SequenceCache> = OnceLock::new();
        CACHE.get_or_init(|| SequenceCache::new(DEFAULT_CAPACITY))
    }

    pub fn limit(&self) -> usize {
        self.limit
    }

    fn check_capacity(&self, n: usize) -> Result<()> {
        if n > self.limit {
            Err(Error::Capacity {
                requested: n,
                limit: self.limit,
            })
        } else {
            Ok(())
        }
    }

    /// `B_n`.
    pub fn bernoulli(&self, n: usize) -> Result<Rational> {
        self.check_capacity(n)?;
        if n > 1 && n % 2 == 1 {
            return Ok(Rational::zero());
        }
        if let Some(value) = self.bernoulli.read().unwrap().get(n) {
            return Ok(value.clone());
        }
        let mut table = self.bernoulli.write().unwrap();
        extend_bernoulli(&mut table, n);
        Ok(table[n].clone())
    }

    /// `G_n`.
    pub fn genocchi(&self, n: usize) -> Result<Rational> {
        self.check_capacity(n)?;
        if n > 1 && n % 2 == 1 {
            return Ok(Rational::zero());
        }
        if let Some(value) = self.genocchi.read().unwrap().get(n) {
            return Ok(value.clone());
        }
        let mut table = self.genocchi.write().unwrap();
        extend_genocchi(&mut table, n);
        Ok(table[n].clone())
    }

    /// `B_0, ..., B_n` in one lock acquisition.
    pub fn bernoulli_prefix(&self, n: usize) -> Result<Vec<Rational>> {
        self.check_capacity(n)?;
        {
            let table = self.bernoulli.read().unwrap();
            if table.len() > n {
                return Ok(table[..=n].to_vec());
            }
        }
        let mut table = self.bernoulli.write().unwrap();
        extend_bernoulli(&mut table, n);
        Ok(table[..=n].to_vec())
    }

    /// `G_0, ..., G_n` in one lock acquisition.
    pub fn genocchi_prefix(&self, n: usize) -> Result<Vec<Rational>> {
        self.check_capacity(n)?;
        {
            let table = self.genocchi.read().unwrap();
            if table.len() > n {
                return Ok(table[..=n].to_vec());
            }
        }
        let mut table = self.genocchi.write().unwrap();
        extend_genocchi(&mut table, n);
        Ok(table[..=n].to_vec())
    }
}

/// Row `m` of Pascal's triangle.
fn pascal_row(m: usize) -> Vec<BigInt> {
    let mut row = Vec::with_capacity(m + 1);
    row.push(BigInt::one());
    for k in 0..m {
        let next = &row[k] * BigInt::from(m - k) / BigInt::from(k + 1);
        row.push(next);
    }
    row
}

/// Advances a Pascal row from `m` to `m + 1` in place.
fn advance_pascal_row(row: &mut Vec<BigInt>) {
    row.push(BigInt::one());
    for k in (1..row.len() - 1).rev() {
        let prev = row[k - 1].clone();
        row[k] += prev;
    }
}

// B_m = -1/(m+1) Σ_{k<m} C(m+1, k) B_k
fn extend_bernoulli(table: &mut Vec<Rational>, n: usize) {
    if table.len() > n {
        return;
    }
    let mut row = pascal_row(table.len() + 1);
    for m in table.len()..=n {
        let value = if m > 1 && m % 2 == 1 {
            Rational::zero()
        } else {
            let mut acc = Rational::zero();
            for (k, b) in table.iter().enumerate() {
                if !b.is_zero() {
                    acc += Rational::from_integer(row[k].clone()) * b;
                }
            }
            -acc / Rational::from_integer(m as i64 + 1)
        };
        table.push(value);
        advance_pascal_row(&mut row);
    }
}

// G_m = -1/2 Σ_{k<m} C(m, k) G_k, m > 1
fn extend_genocchi(table: &mut Vec<Rational>, n: usize) {
    if table.len() > n {
        return;
    }
    let mut row = pascal_row(table.len());
    for m in table.len()..=n {
        let value = if m % 2 == 1 {
            Rational::zero()
        } else {
            let mut acc = Rational::zero();
            for (k, g) in table.iter().enumerate() {
                if !g.is_zero() {
                    acc += Rational::from_integer(row[k].clone()) * g;
                }
            }
            -acc / Rational::from_integer(2)
        };
        table.push(value);
        advance_pascal_row(&mut row);
    }
}

pub fn bernoulli(n: usize) -> Result<Rational> {
    SequenceCache::global().bernoulli(n)
}

pub fn genocchi(n: usize) -> Result<Rational> {
    SequenceCache::global().genocchi(n)
}

/// `-(2^n - 1) B_n`.
pub fn genocchi_from_bernoulli(n: usize) -> Result<Rational> {
    let b = bernoulli(n)?;
    Ok(-(Rational::pow2(n as i64) - Rational::one()) * b)
}

/// `G_n / (1 - 2^n)`; undefined at `n = 0`.
pub fn bernoulli_from_genocchi(n: usize) -> Result<Rational> {
    if n == 0 {
        return Err(Error::domain(
            "bernoulli_from_genocchi(0) divides by 2^0 - 1 = 0",
        ));
    }
    let g = genocchi(n)?;
    Ok(g / (Rational::one() - Rational::pow2(n as i64)))
}

fn alternating_sign(n: usize) -> Rational {
    // (-1)^(n-1)
    if n % 2 == 1 {
        Rational::one()
    } else {
        -Rational::one()
    }
}

/// `(-1)^(n-1) B_{2n}`, positive for every `n ≥ 1`.
pub fn script_b(n: usize) -> Result<Rational> {
    if n == 0 {
        return Err(Error::domain("script_b is defined for n >= 1"));
    }
    Ok(alternating_sign(n) * bernoulli(2 * n)?)
}

/// `(-1)^(n-1) G_{2n} = -(2^{2n} - 1) · script_b(n)`.
pub fn script_g(n: usize) -> Result<Rational> {
    if n == 0 {
        return Err(Error::domain("script_g is defined for n >= 1"));
    }
    Ok(alternating_sign(n) * genocchi(2 * n)?)
}

pub fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * BigInt::from(k))
}

pub fn binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::from(0);
    }
    let k = k.min(n - k);
    (0..k).fold(BigInt::one(), |acc, i| acc * BigInt::from(n - i) / BigInt::from(i + 1))
}

/// `ζ(2n) = 2^{2n-1} · script_b(n) / (2n)! · π^{2n}`.
pub fn zeta_even_exact(n: usize) -> Result<PiPower> {
    if n == 0 {
        return Err(Error::domain("zeta_even_exact is defined for n >= 1"));
    }
    let coefficient = Rational::pow2(2 * n as i64 - 1) * script_b(n)?
        / Rational::from_integer(factorial(2 * n));
    PiPower::new(coefficient, 2 * n as u32)
}

/// `∫_0^1 t^n ln t dt = -1/(n+1)^2`.
pub fn term_log_integral(n: usize) -> Rational {
    let m = BigInt::from(n + 1);
    Rational::new(-1, &m * &m)
}

/// `∫_{-∞}^0 s^k e^s ds = (-1)^k k!`.
pub fn signed_factorial_integral(k: usize) -> Rational {
    let magnitude = Rational::from_integer(factorial(k));
    if k % 2 == 0 {
        magnitude
    } else {
        -magnitude
    }
}
