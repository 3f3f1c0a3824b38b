//! Truncated power series with exact rational coefficients.
//!
//! A [`TruncatedSeries`] of order `N` stands for `c_0 + c_1 t + … + c_N t^N + O(t^{N+1})`.
//! Binary operations truncate to the smaller order of their operands.

use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::rational::{factorial, Rational};
use crate::sequences::falling_lambda;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TruncatedSeries {
    #[serde(serialize_with = "serialize_coeffs")]
    coeffs: Vec<Rational>,
}

fn serialize_coeffs<S: serde::Serializer>(c: &[Rational], s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(c.iter().map(crate::rational::display))
}

impl TruncatedSeries {
    /// Builds a series from `c_0..c_N`. An empty vector is treated as the order-0 zero series.
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        if coeffs.is_empty() {
            coeffs.push(Rational::zero());
        }
        Self { coeffs }
    }

    pub fn zero(order: usize) -> Self {
        Self { coeffs: vec![Rational::zero(); order + 1] }
    }

    pub fn constant(c: Rational, order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = c;
        s
    }

    pub fn one(order: usize) -> Self {
        Self::constant(Rational::one(), order)
    }

    /// The series `t`.
    pub fn variable(order: usize) -> Self {
        let mut s = Self::zero(order);
        if order >= 1 {
            s.coeffs[1] = Rational::one();
        }
        s
    }

    /// Series whose EGF coefficients are `a_0..a_N`, i.e. `c_i = a_i / i!`.
    pub fn from_egf(values: Vec<Rational>) -> Self {
        Self::new(values.into_iter().enumerate().map(|(i, a)| a / factorial(i)).collect())
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> Option<&Rational> {
        self.coeffs.get(i)
    }

    pub fn truncate(&self, order: usize) -> Self {
        let order = order.min(self.order());
        Self { coeffs: self.coeffs[..=order].to_vec() }
    }

    pub fn scale(&self, k: &Rational) -> Self {
        Self { coeffs: self.coeffs.iter().map(|c| c * k).collect() }
    }

    /// `self^e`; keeps the operand order.
    pub fn pow(&self, mut e: usize) -> Self {
        let mut result = Self::one(self.order());
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        result
    }

    /// `outer(inner(t))`, requiring `inner(0) = 0`. The result has the order of `outer`; an
    /// inner series of lower order is read as a polynomial (missing coefficients are zero).
    pub fn compose(outer: &Self, inner: &Self) -> Result<Self> {
        if !inner.coeffs[0].is_zero() {
            return Err(Error::NonzeroInnerConstant);
        }
        let order = outer.order();
        let mut inner = inner.truncate(order);
        inner.coeffs.resize(order + 1, Rational::zero());
        // Horner: outer_0 + inner (outer_1 + inner (outer_2 + …))
        let mut acc = Self::zero(order);
        for c in outer.coeffs[..=order].iter().rev() {
            acc = &acc * &inner;
            acc.coeffs[0] += c;
        }
        Ok(acc)
    }

    /// `n! c_n`, the `n`-th coefficient when the series is read as an exponential generating
    /// function.
    pub fn egf_coefficient(&self, n: usize) -> Result<Rational> {
        let c = self
            .coeffs
            .get(n)
            .ok_or(Error::OrderExceeded { index: n, order: self.order() })?;
        Ok(c * factorial(n))
    }
}

/// `e_λ^x(t) = (1 + λt)^{x/λ}` truncated at `order`: coefficient `i` is `(x)_{i,λ} / i!`.
/// At `λ = 0` this is `e^{xt}`.
pub fn deg_exp_series(x: &Rational, lambda: &Rational, order: usize) -> TruncatedSeries {
    TruncatedSeries::from_egf((0..=order).map(|i| falling_lambda(x, i, lambda)).collect())
}

impl Add for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn add(self, rhs: Self) -> TruncatedSeries {
        let order = self.order().min(rhs.order());
        TruncatedSeries { coeffs: (0..=order).map(|i| &self.coeffs[i] + &rhs.coeffs[i]).collect() }
    }
}

impl Sub for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn sub(self, rhs: Self) -> TruncatedSeries {
        let order = self.order().min(rhs.order());
        TruncatedSeries { coeffs: (0..=order).map(|i| &self.coeffs[i] - &rhs.coeffs[i]).collect() }
    }
}

impl Mul for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn mul(self, rhs: Self) -> TruncatedSeries {
        let order = self.order().min(rhs.order());
        let mut out = TruncatedSeries::zero(order);
        for (i, a) in self.coeffs[..=order].iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs[..=order - i].iter().enumerate() {
                out.coeffs[i + j] += a * b;
            }
        }
        out
    }
}

impl Neg for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn neg(self) -> TruncatedSeries {
        TruncatedSeries { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for TruncatedSeries {
            type Output = TruncatedSeries;
            fn $m(self, rhs: Self) -> TruncatedSeries {
                (&self).$m(&rhs)
            }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);
