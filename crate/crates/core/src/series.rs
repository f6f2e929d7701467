//! Truncated power series over the integers.
//!
//! A [`CoefficientSeries`] of order `N` stores the coefficients of
//! `x^0 … x^N` exactly. Every operation truncates its result to the smaller
//! order of its operands, so all stored coefficients are exact.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoefficientSeries {
    coeffs: Vec<BigInt>,
}

impl CoefficientSeries {
    pub fn zero(order: usize) -> Self {
        CoefficientSeries {
            coeffs: vec![BigInt::zero(); order + 1],
        }
    }

    pub fn one(order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = BigInt::one();
        s
    }

    /// Takes the first `order + 1` coefficients, padding with zeros.
    pub fn from_coeffs<T: Into<BigInt>>(coeffs: impl IntoIterator<Item = T>, order: usize) -> Self {
        let mut c: Vec<BigInt> = coeffs.into_iter().take(order + 1).map(Into::into).collect();
        c.resize(order + 1, BigInt::zero());
        CoefficientSeries { coeffs: c }
    }

    /// Highest power of `x` whose coefficient is known.
    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, n: usize) -> &BigInt {
        &self.coeffs[n]
    }

    pub fn truncate(&self, order: usize) -> Self {
        assert!(order <= self.order(), "cannot extend a truncated series");
        CoefficientSeries {
            coeffs: self.coeffs[..=order].to_vec(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// Formal derivative; the result has order one less (order 0 stays 0).
    pub fn derivative(&self) -> Self {
        let order = self.order().saturating_sub(1);
        let coeffs = (0..=order)
            .map(|n| {
                self.coeffs
                    .get(n + 1)
                    .map_or_else(BigInt::zero, |c| c * BigInt::from(n + 1))
            })
            .collect();
        CoefficientSeries { coeffs }
    }

    /// Multiplies by `x^k`, keeping the order.
    pub fn shift(&self, k: usize) -> Self {
        let mut s = Self::zero(self.order());
        for n in k..=self.order() {
            s.coeffs[n] = self.coeffs[n - k].clone();
        }
        s
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        CoefficientSeries {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Multiplicative inverse; defined over the integers when the constant
    /// term is `±1`.
    pub fn reciprocal(&self) -> Option<Self> {
        let c0 = &self.coeffs[0];
        if !(c0.is_one() || (-c0).is_one()) {
            return None;
        }
        let mut inv = Self::zero(self.order());
        inv.coeffs[0] = c0.clone();
        for n in 1..=self.order() {
            let mut acc = BigInt::zero();
            for k in 1..=n {
                acc += &self.coeffs[k] * &inv.coeffs[n - k];
            }
            // c0 is its own inverse.
            inv.coeffs[n] = -(acc * c0);
        }
        Some(inv)
    }

    /// `self(inner(x))`; `inner` must have zero constant term.
    pub fn compose(&self, inner: &CoefficientSeries) -> Option<Self> {
        if !inner.coeffs[0].is_zero() {
            return None;
        }
        let order = self.order().min(inner.order());
        let inner = inner.truncate(order);
        let mut result = Self::zero(order);
        let mut power = Self::one(order);
        for m in 0..=order {
            if !self.coeffs[m].is_zero() {
                result = &result + &power.scale(&self.coeffs[m]);
            }
            power = &power * &inner;
        }
        Some(result)
    }

    /// One line per coefficient, `n<TAB>value`.
    pub fn to_tsv(&self) -> String {
        self.to_string()
    }
}

impl fmt::Display for CoefficientSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (n, c) in self.coeffs.iter().enumerate() {
            writeln!(f, "{n}\t{c}")?;
        }
        Ok(())
    }
}

impl Add for &CoefficientSeries {
    type Output = CoefficientSeries;

    fn add(self, rhs: &CoefficientSeries) -> CoefficientSeries {
        let order = self.order().min(rhs.order());
        CoefficientSeries {
            coeffs: (0..=order)
                .map(|n| &self.coeffs[n] + &rhs.coeffs[n])
                .collect(),
        }
    }
}

impl Sub for &CoefficientSeries {
    type Output = CoefficientSeries;

    fn sub(self, rhs: &CoefficientSeries) -> CoefficientSeries {
        let order = self.order().min(rhs.order());
        CoefficientSeries {
            coeffs: (0..=order)
                .map(|n| &self.coeffs[n] - &rhs.coeffs[n])
                .collect(),
        }
    }
}

impl Neg for &CoefficientSeries {
    type Output = CoefficientSeries;

    fn neg(self) -> CoefficientSeries {
        CoefficientSeries {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Mul for &CoefficientSeries {
    type Output = CoefficientSeries;

    fn mul(self, rhs: &CoefficientSeries) -> CoefficientSeries {
        let order = self.order().min(rhs.order());
        let mut out = CoefficientSeries::zero(order);
        for (i, a) in self.coeffs.iter().enumerate().take(order + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate().take(order + 1 - i) {
                out.coeffs[i + j] += a * b;
            }
        }
        out
    }
}
