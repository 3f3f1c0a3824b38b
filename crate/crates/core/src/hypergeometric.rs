//! Degenerate generalized hypergeometric series
//!
//! ```text
//! F_λ^{(p,q)}(a_1..a_p; b_1..b_q; z) = Σ_k ⟨a_1⟩_{k,λ}⋯⟨a_p⟩_{k,λ} / (⟨b_1⟩_{k,λ}⋯⟨b_q⟩_{k,λ}) · z^k/k!
//! ```
//!
//! with `⟨a⟩_{k,λ} = a(a+λ)⋯(a+(k−1)λ)`; `λ = 1` is the classical `pFq`. Also: the Euler
//! integral representation of the `(2,1)` case, its value at `z = 1/λ`, and the central sum
//! `Σ λ^{−2k} binom(n,k)_λ²`.

use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::gamma::gamma_real;
use crate::quadrature::integrate_unit;
use crate::rational::{as_i64, display, from_usize, nonneg_int_quotient, powi, ratio, to_f64, Rational};
use crate::sequences::lambda_binomial;
use crate::value::Value;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum ModeKind {
    /// Terminating sums only, evaluated in exact rationals.
    Exact,
    /// Floating-point summation with a truncation rule.
    Numeric,
}

/// How an (possibly infinite) series is evaluated.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct EvalMode {
    pub kind: ModeKind,
    /// Relative tolerance of the truncation test (numeric mode).
    pub tol: f64,
    /// Hard cap on the number of terms.
    pub max_terms: usize,
    /// Stop only after two consecutive small terms.
    pub two_term_stop: bool,
}

impl EvalMode {
    pub const DEFAULT_TOL: f64 = 1e-12;
    pub const DEFAULT_MAX_TERMS: usize = 10_000;

    pub fn exact() -> Self {
        Self { kind: ModeKind::Exact, ..Self::numeric() }
    }

    pub fn numeric() -> Self {
        Self {
            kind: ModeKind::Numeric,
            tol: Self::DEFAULT_TOL,
            max_terms: Self::DEFAULT_MAX_TERMS,
            two_term_stop: true,
        }
    }

    pub fn with_tol(mut self, tol: f64) -> Self {
        self.tol = tol;
        self
    }

    pub fn with_max_terms(mut self, max_terms: usize) -> Self {
        self.max_terms = max_terms;
        self
    }

    pub fn is_exact(&self) -> bool {
        self.kind == ModeKind::Exact
    }

    pub fn validate(&self) -> Result<()> {
        if self.tol.is_nan() || self.tol <= 0.0 {
            return Err(Error::Domain(format!("tolerance must be positive, got {}", self.tol)));
        }
        if self.max_terms == 0 {
            return Err(Error::Domain("max_terms must be at least 1".into()));
        }
        Ok(())
    }
}

impl Default for EvalMode {
    fn default() -> Self {
        Self::exact()
    }
}

/// Parameters of `F_λ^{(p,q)}(upper; lower; z)`.
#[derive(Debug, Clone, PartialEq)]
pub struct HyperParams {
    pub upper: Vec<Rational>,
    pub lower: Vec<Rational>,
    pub z: Rational,
    pub lambda: Rational,
}

impl HyperParams {
    pub fn new(upper: Vec<Rational>, lower: Vec<Rational>, z: Rational, lambda: Rational) -> Self {
        Self { upper, lower, z, lambda }
    }

    /// Classical `pFq` (`λ = 1`).
    pub fn classical(upper: Vec<Rational>, lower: Vec<Rational>, z: Rational) -> Self {
        Self::new(upper, lower, z, Rational::one())
    }
}

/// Smallest `j ≥ 0` with `a + jλ = 0`, i.e. the factor index at which `⟨a⟩_{k,λ}` starts
/// vanishing.
pub(crate) fn vanishing_index(a: &Rational, lambda: &Rational) -> Option<usize> {
    if lambda.is_zero() {
        return a.is_zero().then_some(0);
    }
    nonneg_int_quotient(&-a, lambda)
}

/// Float summation `Σ_{k≥0} next(k)` until `next` returns `None` (termination) or the stop
/// rule fires: `|term| < tol·|partial sum|`, once or on two consecutive terms. The test is
/// skipped for `k < check_from`.
pub(crate) fn sum_numeric(
    mode: &EvalMode,
    check_from: usize,
    mut next: impl FnMut(usize) -> Option<f64>,
) -> Result<f64> {
    let needed = if mode.two_term_stop { 2 } else { 1 };
    let mut sum = 0.0;
    let mut small = 0;
    for k in 0..mode.max_terms {
        let Some(term) = next(k) else {
            return Ok(sum);
        };
        if !term.is_finite() {
            return Err(Error::NoConvergence(format!("term {k} is not finite")));
        }
        sum += term;
        if k >= check_from && term.abs() < mode.tol * sum.abs() {
            small += 1;
            if small >= needed {
                return Ok(sum);
            }
        } else {
            small = 0;
        }
    }
    if next(mode.max_terms).is_none() {
        return Ok(sum);
    }
    Err(Error::NoConvergence(format!("tolerance {:e} not reached within {} terms", mode.tol, mode.max_terms)))
}

/// Evaluates `F_λ^{(p,q)}(upper; lower; z)`.
///
/// Exact mode sums a terminating series in rationals. For `(p,q) = (2,1)` a series that does
/// not terminate itself is still evaluated exactly when its Pfaff transform
/// `(1−w)^{−a/λ} ₂F₁(a/λ, (c−b)/λ; c/λ; w/(w−1))`, `w = λz ∈ [−1, 1/2]`, terminates with a
/// rational prefactor. On `w = −1` this is the Abel value of the series.
///
/// Numeric mode sums in `f64` and uses the same transform for `w ∈ [−1, −1/2]`.
pub fn hyper_deg_general(params: &HyperParams, mode: &EvalMode) -> Result<Value> {
    mode.validate()?;
    let lambda = &params.lambda;
    let terminate = params.upper.iter().filter_map(|a| vanishing_index(a, lambda)).min();
    let pole = params
        .lower
        .iter()
        .filter_map(|b| vanishing_index(b, lambda).map(|j| (j, b)))
        .min_by_key(|(j, _)| *j);
    if let Some((j, b)) = pole {
        // an upper factor vanishing at the same or an earlier index terminates the series first
        if terminate.is_none_or(|t| j < t) {
            return Err(Error::LowerParamPole { param: display(b), index: j + 1 });
        }
    }
    match mode.kind {
        ModeKind::Exact => match terminate {
            Some(last) => Ok(Value::Exact(exact_sum(params, last))),
            None => pfaff_exact(params).unwrap_or_else(|| {
                Err(Error::NonTerminatingExact(
                    "no upper parameter makes the series terminate; use numeric mode".into(),
                ))
            }),
        },
        ModeKind::Numeric => numeric_sum(params, terminate, mode),
    }
}

fn exact_sum(params: &HyperParams, last: usize) -> Rational {
    let lambda = &params.lambda;
    let mut term = Rational::one();
    let mut sum = Rational::one();
    for k in 0..last {
        let kl = from_usize(k) * lambda;
        let num: Rational = params.upper.iter().map(|a| a + &kl).product();
        let den: Rational = params.lower.iter().map(|b| b + &kl).product();
        term = term * num / den * &params.z / from_usize(k + 1);
        sum += &term;
    }
    sum
}

/// Scaled classical parameters and argument `w = λ z` of a `(2,1)` series.
struct Pfaff {
    alpha: Rational,
    beta: Rational,
    gamma: Rational,
    w: Rational,
}

impl Pfaff {
    fn of(params: &HyperParams) -> Option<[Self; 2]> {
        let lambda = &params.lambda;
        if params.upper.len() != 2 || params.lower.len() != 1 || lambda.is_zero() {
            return None;
        }
        let (a, b, c) = (&params.upper[0] / lambda, &params.upper[1] / lambda, &params.lower[0] / lambda);
        let w = lambda * &params.z;
        Some([
            Self { alpha: a.clone(), beta: b.clone(), gamma: c.clone(), w: w.clone() },
            Self { alpha: b, beta: a, gamma: c, w },
        ])
    }

    fn transformed(&self) -> HyperParams {
        let w_new = &self.w / (&self.w - Rational::one());
        HyperParams::classical(vec![self.alpha.clone(), &self.gamma - &self.beta], vec![self.gamma.clone()], w_new)
    }
}

fn pfaff_exact(params: &HyperParams) -> Option<Result<Value>> {
    let candidates = Pfaff::of(params)?;
    let w = &candidates[0].w;
    if w < &-Rational::one() || w > &ratio(1, 2) {
        return None;
    }
    candidates.into_iter().find_map(|cand| {
        let alpha = as_i64(&cand.alpha)?;
        vanishing_index(&(&cand.gamma - &cand.beta), &Rational::one())?;
        let prefactor = powi(&(Rational::one() - &cand.w), -alpha).ok()?;
        Some(hyper_deg_general(&cand.transformed(), &EvalMode::exact()).map(|v| match v {
            Value::Exact(r) => Value::Exact(prefactor * r),
            Value::Approx(x) => Value::Approx(to_f64(&prefactor) * x),
        }))
    })
}

fn numeric_sum(params: &HyperParams, terminate: Option<usize>, mode: &EvalMode) -> Result<Value> {
    let lambda = &params.lambda;
    if terminate.is_none() && !lambda.is_zero() {
        let excess = params.upper.len() as i64 - params.lower.len() as i64;
        if excess >= 2 {
            return Err(Error::NoConvergence(format!(
                "series with p = q + {excess} and no terminating parameter diverges"
            )));
        }
        if excess == 1 {
            let ratio_limit = (lambda * &params.z).abs();
            if ratio_limit > Rational::one() {
                return Err(Error::NoConvergence(format!(
                    "term ratio tends to |λz| = {} > 1",
                    display(&ratio_limit)
                )));
            }
            if let Some([cand, _]) = Pfaff::of(params) {
                if cand.w >= -Rational::one() && cand.w <= ratio(-1, 2) {
                    let factor = (1.0 - to_f64(&cand.w)).powf(-to_f64(&cand.alpha));
                    let inner = hyper_deg_general(&cand.transformed(), mode)?;
                    return Ok(Value::Approx(factor * inner.to_f64()));
                }
            }
        }
    }
    let upper: Vec<f64> = params.upper.iter().map(to_f64).collect();
    let lower: Vec<f64> = params.lower.iter().map(to_f64).collect();
    let (z, lam) = (to_f64(&params.z), to_f64(lambda));
    let mut term = 1.0;
    let sum = sum_numeric(mode, 0, |k| {
        if terminate.is_some_and(|t| k > t) {
            return None;
        }
        if k > 0 {
            let shift = (k - 1) as f64 * lam;
            let num: f64 = upper.iter().map(|a| a + shift).product();
            let den: f64 = lower.iter().map(|b| b + shift).product();
            term *= num / den * z / k as f64;
        }
        Some(term)
    })?;
    Ok(Value::Approx(sum))
}

/// `Γ(c/λ) Γ((c−a−b)/λ) / (Γ((c−b)/λ) Γ((c−a)/λ))`, the value of `F_λ(a, b; c; 1/λ)`.
/// Arguments on or beyond the convergence boundary are rejected.
pub fn gauss_value_deg(a: &Rational, b: &Rational, c: &Rational, lambda: &Rational) -> Result<f64> {
    if !lambda.is_positive() {
        return Err(Error::Domain(format!("λ must be positive, got {}", display(lambda))));
    }
    let args = [c / lambda, (c - a - b) / lambda, (c - b) / lambda, (c - a) / lambda];
    if let Some(bad) = args.iter().find(|x| !x.is_positive()) {
        return Err(Error::Domain(format!("Gamma argument {} is not positive", display(bad))));
    }
    let g: Vec<f64> = args.iter().map(|x| gamma_real(to_f64(x))).collect::<Result<_>>()?;
    Ok(g[0] * g[1] / (g[2] * g[3]))
}

/// `F_λ(a, b; c; z)` through its Euler integral
///
/// ```text
/// Γ(c/λ) / (Γ(b/λ) Γ((c−b)/λ)) ∫₀¹ t^{b/λ−1} (1−t)^{(c−b)/λ−1} (1 − λtz)^{−a/λ} dt
/// ```
///
/// by composite Gauss–Legendre quadrature. Both endpoint exponents must be non-negative
/// (`b/λ ≥ 1`, `(c−b)/λ ≥ 1`) and `1 − λtz` must stay positive on `[0, 1]`.
pub fn euler_integral_deg(a: &Rational, b: &Rational, c: &Rational, z: f64, lambda: &Rational) -> Result<f64> {
    if lambda.is_zero() {
        return Err(Error::Domain("λ = 0 has no Euler integral representation".into()));
    }
    let one = Rational::one();
    let (b_l, cb_l) = (b / lambda, (c - b) / lambda);
    if b_l < one || cb_l < one {
        return Err(Error::EndpointSingularity(format!(
            "need b/λ ≥ 1 and (c−b)/λ ≥ 1, got {} and {}",
            display(&b_l),
            display(&cb_l)
        )));
    }
    let lz = to_f64(lambda) * z;
    if !z.is_finite() || lz >= 1.0 {
        return Err(Error::PoleOnPath(format!("1 − λtz vanishes on [0, 1] (λz = {lz})")));
    }
    let (p, q, r) = (to_f64(&b_l) - 1.0, to_f64(&cb_l) - 1.0, -to_f64(&(a / lambda)));
    let norm = gamma_real(to_f64(&(c / lambda)))? / (gamma_real(p + 1.0)? * gamma_real(q + 1.0)?);
    let integral = integrate_unit(|t| t.powf(p) * (1.0 - t).powf(q) * (1.0 - lz * t).powf(r));
    Ok(norm * integral)
}

/// Both sides of `Σ_k λ^{−2k} binom(n,k)_λ² = (2λ/n) Γ(2n/λ) / Γ(n/λ)²`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CentralSum {
    pub lhs: Value,
    pub rhs: f64,
}

/// Evaluates the central sum and its Gamma closed form. The series is exact when `n/λ ∈ ℕ`;
/// otherwise it is `Σ C(n/λ, k)²`, which converges for every `λ > 0` and needs numeric mode.
pub fn central_sum_deg(n: usize, lambda: &Rational, mode: &EvalMode) -> Result<CentralSum> {
    mode.validate()?;
    if !lambda.is_positive() {
        return Err(Error::Domain(format!("λ must be positive, got {}", display(lambda))));
    }
    if n == 0 {
        return Err(Error::Domain("n must be at least 1".into()));
    }
    let n_r = from_usize(n);
    let alpha = &n_r / lambda;
    let rhs = 2.0 * to_f64(lambda) / n as f64 * gamma_real(to_f64(&(&alpha * crate::rational::int(2))))?
        / gamma_real(to_f64(&alpha))?.powi(2);
    let terminating = alpha.is_integer().then(|| alpha.to_integer().to_usize()).flatten();
    let lhs = match (mode.kind, terminating) {
        (ModeKind::Exact, Some(last)) => {
            let inv = lambda.recip();
            Value::Exact(
                (0..=last)
                    .map(|k| crate::rational::pow(&inv, 2 * k) * crate::rational::pow(&lambda_binomial(&n_r, k, lambda), 2))
                    .sum(),
            )
        }
        (ModeKind::Exact, None) => {
            return Err(Error::NonTerminatingExact(format!("n/λ = {} is not a natural number", display(&alpha))))
        }
        (ModeKind::Numeric, _) => {
            let a = to_f64(&alpha);
            let mut c = 1.0;
            Value::Approx(sum_numeric(mode, 0, |k| {
                if terminating.is_some_and(|t| k > t) {
                    return None;
                }
                if k > 0 {
                    c *= (a - (k - 1) as f64) / k as f64;
                }
                Some(c * c)
            })?)
        }
    };
    Ok(CentralSum { lhs, rhs })
}
