//! Generating-function oracle.
//!
//! Each [`GfDescriptor`] names one generating function as a concrete object in the truncated
//! series ring. [`gf_extract_family`] builds it from its defining expression (powers,
//! compositions, literal hypergeometric coefficients) and reads off an EGF coefficient. None of
//! this goes through the closed-form routines it is used to check.

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::rational::{factorial, int, nonneg_int_quotient, pow, sign, Rational};
use crate::sequences::{falling, rising_lambda};
use crate::series::{deg_exp_series, TruncatedSeries};

/// Default truncation order for oracle runs.
pub const DEFAULT_ORDER: usize = 16;

/// One generating function, with concrete rational parameters.
#[derive(Debug, Clone, PartialEq)]
pub enum GfDescriptor {
    /// `(e_λ(t) − 1)^k / k!` → `S_{2,λ}(n, k)`.
    DegStirling2 { k: usize, lambda: Rational },
    /// `(((1+t)^λ − 1)/λ)^k / k!` → `S_{1,λ}(n, k)`.
    DegStirling1 { k: usize, lambda: Rational },
    /// `(e_λ(t) + 1)^k` → `B*_λ(n, k)` for `n ≥ 1`.
    Golombek { k: usize, lambda: Rational },
    /// `F_λ(−n, −n; λ; λ e_λ(t))` → `Q_λ(m, 2)`.
    HyperQ { n: usize, lambda: Rational },
    /// `(1 + λ e_λ(t))^{n/λ}` → `H_λ(n, m)`.
    HyperH { n: usize, lambda: Rational },
    /// `e_λ^x(e_λ(t) − 1)` → `Bel_{m,λ}(x)`.
    DegBell { x: Rational, lambda: Rational },
    /// `e_λ^x(y (e_λ(t) − 1))` → `Bel_{m,λ}(x, y)`.
    DegBellBivariate { x: Rational, y: Rational, lambda: Rational },
    /// `F_λ^{(p,p−1)}(−n,…,−n; λ,…,λ; (−1)^p λ^{p−1} e_λ(t))` → `H_λ^{(p)}(n, m)`.
    HyperOrderP { n: usize, p: usize, lambda: Rational },
    /// `F^{(p,p−1)}(−n,…; 1,…; (−1)^p e_λ(t))` → `H_{m,λ}^{(p)}(n)`.
    LambdaHyperH { n: usize, p: usize, lambda: Rational },
    /// `F^{(p,p−1)}(−n,…; 1,…; (−1)^{p−1} e_λ(t))` → `T_{m,λ}^{(p)}(n)`.
    LambdaHyperT { n: usize, p: usize, lambda: Rational },
    /// `F^{(p,p−1)}(−n,…; 1,…; (−1)^{p−1} λ₁ e_λ(t))` → `T_{m,λ}^{(p)}(n | λ₁)`.
    ApostolT { n: usize, p: usize, lambda: Rational, lambda1: Rational },
    /// `F^{(p,p−1)}(−n,…; 1,…; (−1)^p λ₁ e_λ(t))` → `H_{m,λ}^{(p)}(n | λ₁)`.
    ApostolH { n: usize, p: usize, lambda: Rational, lambda1: Rational },
    /// `(λ₁ e^t − 1)^n / n!` → `S(m, n | λ₁)`.
    ApostolStirling2 { n: usize, lambda1: Rational },
}

impl GfDescriptor {
    /// Builds the generating function truncated at `order`.
    pub fn build(&self, order: usize) -> Result<TruncatedSeries> {
        let one = Rational::one();
        let e_lambda = |lambda: &Rational| deg_exp_series(&one, lambda, order);
        match self {
            Self::DegStirling2 { k, lambda } => {
                let u = &e_lambda(lambda) - &TruncatedSeries::one(order);
                Ok(u.pow(*k).scale(&factorial(*k).recip()))
            }
            Self::DegStirling1 { k, lambda } => {
                // ((1+t)^λ − 1)/λ = Σ_{j≥1} (λ−1)_{j−1} t^j / j!, finite at λ = 0 (log(1+t)).
                let mut c = vec![Rational::zero(); order + 1];
                for (j, cj) in c.iter_mut().enumerate().skip(1) {
                    *cj = falling(&(lambda - &one), j - 1) / factorial(j);
                }
                Ok(TruncatedSeries::new(c).pow(*k).scale(&factorial(*k).recip()))
            }
            Self::Golombek { k, lambda } => {
                Ok((&e_lambda(lambda) + &TruncatedSeries::one(order)).pow(*k))
            }
            Self::HyperQ { n, lambda } => hypergeometric_gf(
                &[-int(*n as i64), -int(*n as i64)],
                std::slice::from_ref(lambda),
                lambda,
                lambda,
                &e_lambda(lambda),
            ),
            Self::HyperH { n, lambda } => {
                let exponent = nonneg_int_quotient(&int(*n as i64), lambda).ok_or_else(|| {
                    Error::NonTerminating(format!("(1 + λe_λ(t))^(n/λ) with n/λ = {n}/{lambda} not in ℕ₀"))
                })?;
                let base = &TruncatedSeries::one(order) + &e_lambda(lambda).scale(lambda);
                Ok(base.pow(exponent))
            }
            Self::DegBell { x, lambda } => {
                let inner = &e_lambda(lambda) - &TruncatedSeries::one(order);
                TruncatedSeries::compose(&deg_exp_series(x, lambda, order), &inner)
            }
            Self::DegBellBivariate { x, y, lambda } => {
                let inner = (&e_lambda(lambda) - &TruncatedSeries::one(order)).scale(y);
                TruncatedSeries::compose(&deg_exp_series(x, lambda, order), &inner)
            }
            Self::HyperOrderP { n, p, lambda } => {
                check_order(*p)?;
                let z = sign(*p) * pow(lambda, p - 1);
                hypergeometric_gf(&vec![-int(*n as i64); *p], &vec![lambda.clone(); p - 1], lambda, &z, &e_lambda(lambda))
            }
            Self::LambdaHyperH { n, p, lambda } => classical_order_p(*n, *p, &sign(*p), &e_lambda(lambda)),
            Self::LambdaHyperT { n, p, lambda } => classical_order_p(*n, *p, &sign(p + 1), &e_lambda(lambda)),
            Self::ApostolT { n, p, lambda, lambda1 } => {
                classical_order_p(*n, *p, &(sign(p + 1) * lambda1), &e_lambda(lambda))
            }
            Self::ApostolH { n, p, lambda, lambda1 } => {
                classical_order_p(*n, *p, &(sign(*p) * lambda1), &e_lambda(lambda))
            }
            Self::ApostolStirling2 { n, lambda1 } => {
                let exp = deg_exp_series(&one, &Rational::zero(), order);
                let u = &exp.scale(lambda1) - &TruncatedSeries::one(order);
                Ok(u.pow(*n).scale(&factorial(*n).recip()))
            }
        }
    }
}

fn check_order(p: usize) -> Result<()> {
    if p == 0 {
        return Err(Error::Domain("order p must be at least 1".into()));
    }
    Ok(())
}

fn classical_order_p(n: usize, p: usize, z: &Rational, inner: &TruncatedSeries) -> Result<TruncatedSeries> {
    check_order(p)?;
    let one = Rational::one();
    hypergeometric_gf(&vec![-int(n as i64); p], &vec![one.clone(); p - 1], &one, z, inner)
}

/// `Σ_k [Π⟨a_i⟩_{k,λ} / Π⟨b_j⟩_{k,λ}] z^k/k! · inner^k` for a series that terminates through
/// one of its upper parameters.
fn hypergeometric_gf(
    upper: &[Rational],
    lower: &[Rational],
    lambda: &Rational,
    z: &Rational,
    inner: &TruncatedSeries,
) -> Result<TruncatedSeries> {
    let last = upper
        .iter()
        .filter_map(|a| nonneg_int_quotient(&-a, lambda))
        .min()
        .ok_or_else(|| Error::NonTerminating("no upper parameter terminates the series".into()))?;
    let order = inner.order();
    let mut acc = TruncatedSeries::zero(order);
    let mut power = TruncatedSeries::one(order);
    for k in 0..=last {
        let num: Rational = upper.iter().map(|a| rising_lambda(a, k, lambda)).product();
        let den: Rational = lower.iter().map(|b| rising_lambda(b, k, lambda)).product();
        if den.is_zero() {
            return Err(Error::LowerParamPole { param: format!("{lower:?}"), index: k });
        }
        let coeff = num / den * pow(z, k) / factorial(k);
        acc = &acc + &power.scale(&coeff);
        power = &power * inner;
    }
    Ok(acc)
}

/// The `n`-th EGF coefficient of the generating function `descriptor`, built at order
/// `max(n, DEFAULT_ORDER)`.
pub fn gf_extract_family(descriptor: &GfDescriptor, n: usize) -> Result<Rational> {
    descriptor.build(n.max(DEFAULT_ORDER))?.egf_coefficient(n)
}
