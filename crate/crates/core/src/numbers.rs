//! Degenerate hypergeometric numbers and their relatives.
//!
//! Every family is available in each representation it has (the defining series, Stirling
//! sums, Bell-polynomial form, low-order closed forms, hypergeometric coefficients) so that
//! the representations can be checked against one another.

use std::str::FromStr;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::bell::bell_deg_bivariate;
use crate::error::{Error, Result};
use crate::hypergeometric::{sum_numeric, vanishing_index, EvalMode, ModeKind};
use crate::rational::{display, factorial, from_usize, int, pow, powi, sign, to_f64, Rational};
use crate::sequences::{binom, falling, falling_lambda, rising_lambda};
use crate::stirling::{self, s2_deg, StirlingKind};
use crate::value::Value;

/// Index at which `binom(n, k)_λ` stops being nonzero: the series over `k` ends at `n/λ`.
fn last_term(n: usize, lambda: &Rational) -> Option<usize> {
    vanishing_index(&from_usize(n), &-lambda)
}

fn check_p(p: usize) -> Result<()> {
    if p == 0 {
        return Err(Error::Domain("order p must be at least 1".into()));
    }
    Ok(())
}

fn require_terminating(n: usize, lambda: &Rational) -> Result<usize> {
    last_term(n, lambda).ok_or_else(|| {
        Error::NonTerminatingExact(format!("n/λ = {n}/({}) is not in ℕ₀", display(lambda)))
    })
}

/// `(1+λ)^{n/λ}` when `n/λ ∈ ℕ₀`.
fn rational_power_base(n: usize, lambda: &Rational) -> Result<(Rational, usize)> {
    let exponent = last_term(n, lambda).filter(|_| !lambda.is_zero()).ok_or_else(|| {
        Error::NonRationalPower(format!("(1+λ)^(n/λ) with n/λ = {n}/{} not in ℕ₀", display(lambda)))
    })?;
    Ok((Rational::one() + lambda, exponent))
}

/// `Σ_{k=0}^{last} binom(n,k)_λ^p · weight(k)`, exact.
fn exact_binomial_power_sum(
    n: usize,
    p: usize,
    lambda: &Rational,
    last: usize,
    weight: impl Fn(usize) -> Rational,
) -> Rational {
    let n_r = from_usize(n);
    let mut b = Rational::one();
    let mut sum = Rational::zero();
    for k in 0..=last {
        if k > 0 {
            b = b * (&n_r - from_usize(k - 1) * lambda) / from_usize(k);
        }
        let w = weight(k);
        if !w.is_zero() {
            sum += pow(&b, p) * w;
        }
    }
    sum
}

/// Same sum in floating point under `mode`.
fn numeric_binomial_power_sum(
    n: usize,
    p: usize,
    lambda: &Rational,
    mode: &EvalMode,
    check_from: usize,
    weight: impl Fn(usize) -> f64,
) -> Result<f64> {
    let last = last_term(n, lambda);
    let in_range = lambda > &Rational::zero() && lambda < &Rational::one();
    if last.is_none() && !in_range {
        return Err(Error::Domain(format!(
            "non-terminating series needs 0 < λ < 1 in numeric mode, got λ = {}",
            display(lambda)
        )));
    }
    let (nf, lam) = (n as f64, to_f64(lambda));
    let mut b = 1.0;
    sum_numeric(mode, check_from, |k| {
        if last.is_some_and(|t| k > t) {
            return None;
        }
        if k > 0 {
            b *= (nf - (k - 1) as f64 * lam) / k as f64;
        }
        Some(b.powi(p as i32) * weight(k))
    })
}

fn falling_f64(x: f64, m: usize, lambda: f64) -> f64 {
    (0..m).map(|j| x - j as f64 * lambda).product()
}

/// `H_λ^{(p)}(n, m) = Σ_{k≥0} binom(n,k)_λ^p (k)_{m,λ}`. `p = 1` is `H_λ(n, m)`; `p = 2` is
/// `Q_λ(m, 2)` for the given `n`.
pub fn h_p_series(n: usize, m: usize, p: usize, lambda: &Rational, mode: &EvalMode) -> Result<Value> {
    check_p(p)?;
    mode.validate()?;
    match mode.kind {
        ModeKind::Exact => {
            let last = require_terminating(n, lambda)?;
            Ok(Value::Exact(exact_binomial_power_sum(n, p, lambda, last, |k| {
                falling_lambda(&from_usize(k), m, lambda)
            })))
        }
        ModeKind::Numeric => {
            let lam = to_f64(lambda);
            numeric_binomial_power_sum(n, p, lambda, mode, m + 1, |k| falling_f64(k as f64, m, lam)).map(Value::Approx)
        }
    }
}

/// `H_λ^{(p)}(n, m)` from the coefficients of its hypergeometric generating function:
/// `Σ_k ⟨−n⟩_{k,λ}^p / ⟨λ⟩_{k,λ}^{p−1} · ((−1)^p λ^{p−1})^k / k! · (k)_{m,λ}`.
pub fn h_p_hypergeometric(n: usize, m: usize, p: usize, lambda: &Rational, mode: &EvalMode) -> Result<Value> {
    check_p(p)?;
    mode.validate()?;
    if lambda.is_zero() && p > 1 {
        return Err(Error::LowerParamPole { param: "0".into(), index: 1 });
    }
    let z = sign(p) * pow(lambda, p - 1);
    let minus_n = -from_usize(n);
    match mode.kind {
        ModeKind::Exact => {
            let last = require_terminating(n, lambda)?;
            let sum = (0..=last)
                .map(|k| {
                    let num = pow(&rising_lambda(&minus_n, k, lambda), p);
                    let den = pow(&rising_lambda(lambda, k, lambda), p - 1);
                    num / den * pow(&z, k) / factorial(k) * falling_lambda(&from_usize(k), m, lambda)
                })
                .sum();
            Ok(Value::Exact(sum))
        }
        ModeKind::Numeric => {
            let last = last_term(n, lambda);
            let in_range = lambda > &Rational::zero() && lambda < &Rational::one();
            if last.is_none() && !in_range {
                return Err(Error::Domain(format!(
                    "non-terminating series needs 0 < λ < 1 in numeric mode, got λ = {}",
                    display(lambda)
                )));
            }
            let (nf, lam, zf) = (n as f64, to_f64(lambda), to_f64(&z));
            let mut c = 1.0;
            sum_numeric(mode, m + 1, |k| {
                if last.is_some_and(|t| k > t) {
                    return None;
                }
                if k > 0 {
                    let j = (k - 1) as f64;
                    c *= (-nf + j * lam).powi(p as i32) / (lam + j * lam).powi(p as i32 - 1) * zf / k as f64;
                }
                Some(c * falling_f64(k as f64, m, lam))
            })
            .map(Value::Approx)
        }
    }
}

/// Stirling-number form. `p = 1`:
/// `H_λ(n, m) = (1+λ)^{n/λ} Σ_{k=0}^{m} (n)_{k,λ} (1+λ)^{−k} S_{2,λ}(m, k)`;
/// `p ≥ 2` uses [`h_double_sum`].
pub fn h_stirling_form(n: usize, m: usize, p: usize, lambda: &Rational) -> Result<Rational> {
    check_p(p)?;
    if p >= 2 {
        return h_double_sum(n, m, p, lambda).map_err(|e| match e {
            Error::NonTerminatingExact(msg) => Error::NonRationalPower(msg),
            other => other,
        });
    }
    let (base, exponent) = rational_power_base(n, lambda)?;
    let inv = base.recip();
    let n_r = from_usize(n);
    let s2 = stirling::table(StirlingKind::S2Deg, lambda, &Rational::one(), m);
    let inner: Rational = (0..=m)
        .map(|k| falling_lambda(&n_r, k, lambda) * pow(&inv, k) * s2.get(m, k).unwrap())
        .sum();
    Ok(pow(&base, exponent) * inner)
}

/// `H_λ^{(p)}(n, m) = Σ_k Σ_{l=0}^{k} binom(n,k)_λ^p (k)_l S_{2,λ}(m, l)`, exact; needs the
/// outer sum to terminate.
pub fn h_double_sum(n: usize, m: usize, p: usize, lambda: &Rational) -> Result<Rational> {
    check_p(p)?;
    let last = require_terminating(n, lambda)?;
    let s2 = stirling::table(StirlingKind::S2Deg, lambda, &Rational::one(), m);
    Ok(exact_binomial_power_sum(n, p, lambda, last, |k| {
        let k_r = from_usize(k);
        (0..=k.min(m)).map(|l| falling(&k_r, l) * s2.get(m, l).unwrap()).sum()
    }))
}

/// `H_λ(n, m) = (1+λ)^{n/λ} Bel_{m,λ}(n, 1/(1+λ))`.
pub fn h_bell_form(n: usize, m: usize, lambda: &Rational) -> Result<Rational> {
    let (base, exponent) = rational_power_base(n, lambda)?;
    if base.is_zero() {
        return Err(Error::Domain("λ = −1".into()));
    }
    Ok(pow(&base, exponent) * bell_deg_bivariate(m, &from_usize(n), &base.recip(), lambda))
}

/// Closed forms of `H_λ(n, m)` for `m = 1, 2, 3`:
///
/// * `n (1+λ)^{n/λ−1}`
/// * `n (n + 1 − λ − λ²) (1+λ)^{n/λ−2}`
/// * `(n)_{3,λ}(1+λ)^{n/λ−3} + 3(1−λ)(n)_{2,λ}(1+λ)^{n/λ−2} + (1−λ)(1−2λ) n (1+λ)^{n/λ−1}`
pub fn h_low_closed(n: usize, m: usize, lambda: &Rational) -> Result<Rational> {
    if !(1..=3).contains(&m) {
        return Err(Error::UnsupportedM(m));
    }
    let (base, exponent) = rational_power_base(n, lambda)?;
    if base.is_zero() {
        return Err(Error::Domain("closed forms need λ ≠ −1".into()));
    }
    let e = exponent as i64;
    let bp = |shift: i64| powi(&base, e - shift);
    let one = Rational::one();
    let n_r = from_usize(n);
    Ok(match m {
        1 => &n_r * bp(1)?,
        2 => &n_r * (&n_r + &one - lambda - lambda * lambda) * bp(2)?,
        _ => {
            let one_minus = &one - lambda;
            falling_lambda(&n_r, 3, lambda) * bp(3)?
                + int(3) * &one_minus * falling_lambda(&n_r, 2, lambda) * bp(2)?
                + &one_minus * (&one - int(2) * lambda) * &n_r * bp(1)?
        }
    })
}

/// `Σ_{k≥0} (−1)^k binom(n,k)_λ^p`.
pub fn alt_power_sum(n: usize, p: usize, lambda: &Rational, mode: &EvalMode) -> Result<Value> {
    check_p(p)?;
    mode.validate()?;
    match mode.kind {
        ModeKind::Exact => {
            let last = require_terminating(n, lambda)?;
            Ok(Value::Exact(exact_binomial_power_sum(n, p, lambda, last, sign)))
        }
        ModeKind::Numeric => numeric_binomial_power_sum(n, p, lambda, mode, 1, |k| {
            if k % 2 == 0 {
                1.0
            } else {
                -1.0
            }
        })
        .map(Value::Approx),
    }
}

/// `H_{m,λ}^{(p)}(n) = Σ_{k=0}^{n} C(n,k)^p (k)_{m,λ}`.
pub fn lambda_hyper_h(n: usize, m: usize, p: usize, lambda: &Rational) -> Rational {
    apostol_h(n, m, p, lambda, &Rational::one())
}

/// `T_{m,λ}^{(p)}(n) = Σ_{k=0}^{n} (−1)^k C(n,k)^p (k)_{m,λ}`.
pub fn lambda_hyper_t(n: usize, m: usize, p: usize, lambda: &Rational) -> Rational {
    (0..=n)
        .map(|k| sign(k) * pow(&binom(n, k), p) * falling_lambda(&from_usize(k), m, lambda))
        .sum()
}

/// `T_{m,λ}^{(1)}(n) = (−1)^n n! S_{2,λ}(m, n)`, which is zero for `m < n`.
pub fn t1_closed(n: usize, m: usize, lambda: &Rational) -> Rational {
    if m < n {
        return Rational::zero();
    }
    sign(n) * factorial(n) * s2_deg(m, n, lambda)
}

/// The two sides of the Apostol-type alternating number `T_{m,λ}^{(1)}(n | λ₁)`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ApostolT {
    /// `Σ_j C(n,j) (−1)^j λ₁^j (j)_{m,λ}`
    #[serde(serialize_with = "crate::rational::serialize_display")]
    pub direct: Rational,
    /// `Σ_j Σ_{l≤j} C(n,j) (−1)^j λ₁^j (j)_l S_{2,λ}(m, l)`
    #[serde(serialize_with = "crate::rational::serialize_display")]
    pub stirling_form: Rational,
}

pub fn apostol_t(n: usize, m: usize, lambda: &Rational, lambda1: &Rational) -> ApostolT {
    let s2 = stirling::table(StirlingKind::S2Deg, lambda, &Rational::one(), m);
    let mut direct = Rational::zero();
    let mut stirling_form = Rational::zero();
    for j in 0..=n {
        let j_r = from_usize(j);
        let w = binom(n, j) * sign(j) * pow(lambda1, j);
        direct += &w * falling_lambda(&j_r, m, lambda);
        let inner: Rational = (0..=j.min(m)).map(|l| falling(&j_r, l) * s2.get(m, l).unwrap()).sum();
        stirling_form += w * inner;
    }
    ApostolT { direct, stirling_form }
}

/// `H_{m,λ}^{(p)}(n | λ₁) = Σ_{k=0}^{n} C(n,k)^p λ₁^k (k)_{m,λ}`.
pub fn apostol_h(n: usize, m: usize, p: usize, lambda: &Rational, lambda1: &Rational) -> Rational {
    (0..=n)
        .map(|k| pow(&binom(n, k), p) * pow(lambda1, k) * falling_lambda(&from_usize(k), m, lambda))
        .sum()
}

/// `B*_λ(n, k) = Σ_{j=1}^{k} C(k,j) (j)_{n,λ}` for `n, k ≥ 1`.
pub fn golombek_b_deg(n: usize, k: usize, lambda: &Rational) -> Result<Rational> {
    if n == 0 || k == 0 {
        return Err(Error::Domain(format!("B*_λ(n, k) needs n, k ≥ 1, got n = {n}, k = {k}")));
    }
    Ok((1..=k).map(|j| binom(k, j) * falling_lambda(&from_usize(j), n, lambda)).sum())
}

/// Number families reachable through [`NumberQuery`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    /// `H_λ^{(p)}(n, m)` by its defining series.
    Hseries,
    /// Stirling form (`p = 1`) or double sum (`p ≥ 2`).
    Hstirling,
    /// Bell-polynomial form (`p = 1`).
    Hbell,
    /// Closed forms for `m ∈ {1, 2, 3}` (`p = 1`).
    Hlow,
    /// Hypergeometric-coefficient form of `H_λ^{(p)}(n, m)`; `p = 2` is `Q_λ(m, 2)`.
    Qp,
    /// `Σ (−1)^k binom(n,k)_λ^p` (ignores `m`).
    AltPow,
    LamH,
    LamT,
    T1closed,
    ApostolT,
    ApostolH,
    /// `B*_λ(n, k)` with `k` carried in the `m` slot.
    GolombekB,
}

impl Family {
    pub const ALL: [Family; 12] = [
        Family::Hseries,
        Family::Hstirling,
        Family::Hbell,
        Family::Hlow,
        Family::Qp,
        Family::AltPow,
        Family::LamH,
        Family::LamT,
        Family::T1closed,
        Family::ApostolT,
        Family::ApostolH,
        Family::GolombekB,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::Hseries => "Hseries",
            Family::Hstirling => "Hstirling",
            Family::Hbell => "Hbell",
            Family::Hlow => "Hlow",
            Family::Qp => "Qp",
            Family::AltPow => "AltPow",
            Family::LamH => "LamH",
            Family::LamT => "LamT",
            Family::T1closed => "T1closed",
            Family::ApostolT => "ApostolT",
            Family::ApostolH => "ApostolH",
            Family::GolombekB => "GolombekB",
        }
    }

    /// Families whose value depends on the evaluation mode (the infinite-`k` series).
    pub fn uses_mode(self) -> bool {
        matches!(self, Family::Hseries | Family::Qp | Family::AltPow)
    }
}

impl std::fmt::Display for Family {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Family::ALL
            .into_iter()
            .find(|f| f.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::Parse(format!("unknown family {s:?}")))
    }
}

/// One number of one family.
#[derive(Debug, Clone, PartialEq)]
pub struct NumberQuery {
    pub family: Family,
    pub n: usize,
    pub m: usize,
    pub p: usize,
    pub lambda: Rational,
    pub lambda1: Rational,
    pub mode: EvalMode,
}

impl NumberQuery {
    pub fn new(family: Family, n: usize, m: usize, p: usize, lambda: Rational) -> Self {
        Self { family, n, m, p, lambda, lambda1: Rational::one(), mode: EvalMode::exact() }
    }

    pub fn with_lambda1(mut self, lambda1: Rational) -> Self {
        self.lambda1 = lambda1;
        self
    }

    pub fn with_mode(mut self, mode: EvalMode) -> Self {
        self.mode = mode;
        self
    }

    pub fn evaluate(&self) -> Result<Value> {
        check_p(self.p)?;
        let (n, m, p, lam) = (self.n, self.m, self.p, &self.lambda);
        let exact = |r: Rational| Ok(Value::Exact(r));
        match self.family {
            Family::Hseries => h_p_series(n, m, p, lam, &self.mode),
            Family::Qp => h_p_hypergeometric(n, m, p, lam, &self.mode),
            Family::AltPow => alt_power_sum(n, p, lam, &self.mode),
            Family::Hstirling => exact(h_stirling_form(n, m, p, lam)?),
            Family::Hbell => exact(h_bell_form(n, m, lam)?),
            Family::Hlow => exact(h_low_closed(n, m, lam)?),
            Family::LamH => exact(lambda_hyper_h(n, m, p, lam)),
            Family::LamT => exact(lambda_hyper_t(n, m, p, lam)),
            Family::T1closed => exact(t1_closed(n, m, lam)),
            Family::ApostolT => exact(apostol_t(n, m, lam, &self.lambda1).direct),
            Family::ApostolH => exact(apostol_h(n, m, p, lam, &self.lambda1)),
            Family::GolombekB => exact(golombek_b_deg(n, m, lam)?),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::ratio;

    fn ex() -> EvalMode {
        EvalMode::exact()
    }

    /// Term-by-term brute force straight from the definitions.
    fn brute_h(n: usize, m: usize, p: usize, lambda: &Rational, terms: usize) -> Rational {
        (0..terms)
            .map(|k| {
                pow(&crate::sequences::lambda_binomial(&from_usize(n), k, lambda), p)
                    * falling_lambda(&from_usize(k), m, lambda)
            })
            .sum()
    }

    #[test]
    fn h_p_series_examples() {
        let half = ratio(1, 2);
        assert_eq!(h_p_series(1, 1, 1, &half, &ex()).unwrap(), Value::Exact(ratio(3, 2)));
        assert_eq!(h_p_series(1, 2, 1, &half, &ex()).unwrap(), Value::Exact(ratio(5, 4)));
        assert_eq!(h_p_series(2, 0, 2, &int(1), &ex()).unwrap(), Value::Exact(int(6)));
        assert_eq!(brute_h(1, 2, 1, &half, 40), ratio(5, 4));
        assert!(matches!(h_p_series(1, 0, 1, &ratio(2, 3), &ex()), Err(Error::NonTerminatingExact(_))));
        assert!(matches!(h_p_series(1, 0, 1, &ratio(3, 2), &EvalMode::numeric()), Err(Error::Domain(_))));
        assert!(h_p_series(1, 0, 0, &half, &ex()).is_err());
    }

    #[test]
    fn h_p_series_matches_brute_force() {
        for (n, lam) in [(2, ratio(1, 3)), (3, ratio(3, 2)), (0, ratio(1, 2)), (4, int(2))] {
            for p in 1..=3 {
                for m in 0..=5 {
                    let v = h_p_series(n, m, p, &lam, &ex()).unwrap();
                    assert_eq!(v, Value::Exact(brute_h(n, m, p, &lam, 30)), "n={n} m={m} p={p}");
                }
            }
        }
    }

    #[test]
    fn numeric_matches_exact_and_handles_zero_terms() {
        // λ = 1/2, m = 3: the k = 0 and k = 1 terms vanish
        for (n, m, lam) in [(1, 3, ratio(1, 2)), (2, 5, ratio(1, 3)), (3, 2, ratio(1, 4))] {
            let exact = h_p_series(n, m, 1, &lam, &ex()).unwrap().to_f64();
            let approx = h_p_series(n, m, 1, &lam, &EvalMode::numeric()).unwrap().to_f64();
            assert!(((approx - exact) / exact).abs() < 1e-12, "{approx} vs {exact}");
        }
        // non-terminating λ = 2/3 against a long exact partial sum
        let lam = ratio(2, 3);
        let approx = h_p_series(1, 2, 1, &lam, &EvalMode::numeric()).unwrap().to_f64();
        let partial = to_f64(&brute_h(1, 2, 1, &lam, 120));
        assert!(((approx - partial) / partial).abs() < 1e-11);
    }

    #[test]
    fn stirling_and_bell_forms() {
        let half = ratio(1, 2);
        assert_eq!(h_stirling_form(1, 2, 1, &half).unwrap(), ratio(5, 4));
        assert_eq!(h_stirling_form(1, 0, 1, &half).unwrap(), ratio(9, 4));
        assert_eq!(h_stirling_form(2, 1, 2, &int(1)).unwrap(), int(6));
        assert_eq!(h_bell_form(1, 2, &half).unwrap(), ratio(5, 4));
        assert_eq!(h_bell_form(1, 0, &half).unwrap(), ratio(9, 4));
        assert_eq!(h_bell_form(2, 1, &int(1)).unwrap(), int(4));
        assert!(matches!(h_bell_form(1, 1, &ratio(2, 3)), Err(Error::NonRationalPower(_))));
        assert!(matches!(h_stirling_form(1, 1, 1, &int(0)), Err(Error::NonRationalPower(_))));
        assert!(matches!(h_stirling_form(1, 1, 2, &ratio(2, 3)), Err(Error::NonRationalPower(_))));
    }

    #[test]
    fn low_closed_forms() {
        let half = ratio(1, 2);
        assert_eq!(h_low_closed(1, 1, &half).unwrap(), ratio(3, 2));
        assert_eq!(h_low_closed(1, 2, &half).unwrap(), ratio(5, 4));
        assert_eq!(h_low_closed(1, 3, &half).unwrap(), ratio(3, 4));
        assert_eq!(brute_h(1, 3, 1, &half, 10), ratio(3, 4));
        assert_eq!(h_low_closed(1, 4, &half), Err(Error::UnsupportedM(4)));
        assert_eq!(h_low_closed(1, 0, &half), Err(Error::UnsupportedM(0)));
    }

    #[test]
    fn alternating_sums() {
        assert_eq!(alt_power_sum(3, 1, &int(1), &ex()).unwrap(), Value::Exact(int(0)));
        assert_eq!(alt_power_sum(2, 2, &int(1), &ex()).unwrap(), Value::Exact(int(-2)));
        assert_eq!(alt_power_sum(2, 3, &int(1), &ex()).unwrap(), Value::Exact(int(-6)));
    }

    #[test]
    fn lambda_hyper_examples() {
        for lam in [int(0), ratio(1, 3), int(2)] {
            for n in 0..8usize {
                assert_eq!(lambda_hyper_h(n, 0, 1, &lam), pow(&int(2), n));
                if n >= 1 {
                    assert_eq!(lambda_hyper_h(n, 1, 1, &lam), int(n as i64) * pow(&int(2), n - 1));
                    assert_eq!(lambda_hyper_t(n, 0, 1, &lam), int(0));
                    let delta = if n == 1 { int(-1) } else { int(0) };
                    assert_eq!(lambda_hyper_t(n, 1, 1, &lam), delta);
                }
            }
            assert_eq!(lambda_hyper_h(2, 1, 2, &lam), int(6));
            assert_eq!(lambda_hyper_t(2, 0, 2, &lam), int(-2));
        }
    }

    #[test]
    fn t1_closed_examples() {
        let lam = ratio(2, 5);
        assert_eq!(t1_closed(1, 1, &lam), int(-1));
        assert_eq!(t1_closed(2, 2, &lam), int(2));
        assert_eq!(t1_closed(3, 2, &lam), int(0));
    }

    #[test]
    fn apostol_examples() {
        let lam = ratio(1, 3);
        let t = apostol_t(1, 1, &lam, &int(1));
        assert_eq!(t.direct, int(-1));
        let l1 = ratio(3, 7);
        assert_eq!(apostol_t(1, 1, &lam, &l1).direct, -l1.clone());
        // −2·2·1 + 4·4 at λ = 0, and 2!·S(2,2|2) with S(2,2|λ₁) = 2λ₁² − λ₁
        let t = apostol_t(2, 2, &int(0), &int(2));
        assert_eq!((t.direct, t.stirling_form), (int(12), int(12)));
        assert_eq!(crate::stirling::apostol_s2(2, 2, &int(2)), int(6));
        assert_eq!(apostol_h(3, 0, 1, &lam, &int(2)), int(27));
        assert_eq!(apostol_h(1, 1, 1, &lam, &l1), l1);
        assert_eq!(apostol_h(4, 3, 2, &lam, &int(1)), lambda_hyper_h(4, 3, 2, &lam));
    }

    #[test]
    fn golombek_examples() {
        assert_eq!(golombek_b_deg(1, 3, &ratio(1, 2)).unwrap(), int(12));
        assert_eq!(golombek_b_deg(4, 1, &ratio(1, 3)).unwrap(), falling_lambda(&int(1), 4, &ratio(1, 3)));
        assert_eq!(golombek_b_deg(2, 2, &int(0)).unwrap(), int(6));
        assert!(golombek_b_deg(0, 2, &int(0)).is_err());
        assert!(golombek_b_deg(2, 0, &int(0)).is_err());
    }

    #[test]
    fn hypergeometric_coefficient_form() {
        for p in 1..=3 {
            for m in 0..=4 {
                let a = h_p_hypergeometric(2, m, p, &ratio(1, 2), &ex()).unwrap();
                let b = h_p_series(2, m, p, &ratio(1, 2), &ex()).unwrap();
                assert_eq!(a, b);
            }
        }
        let a = h_p_hypergeometric(1, 2, 1, &ratio(2, 3), &EvalMode::numeric()).unwrap().to_f64();
        let b = h_p_series(1, 2, 1, &ratio(2, 3), &EvalMode::numeric()).unwrap().to_f64();
        assert!(((a - b) / b).abs() < 1e-12);
    }

    #[test]
    fn query_dispatch_and_family_names() {
        for f in Family::ALL {
            assert_eq!(f.name().parse::<Family>().unwrap(), f);
        }
        assert!("nope".parse::<Family>().is_err());
        let q = NumberQuery::new(Family::LamH, 4, 1, 1, int(1));
        assert_eq!(q.evaluate().unwrap(), Value::Exact(int(32)));
        let q = NumberQuery::new(Family::GolombekB, 1, 3, 1, ratio(1, 2));
        assert_eq!(q.evaluate().unwrap(), Value::Exact(int(12)));
    }
}
