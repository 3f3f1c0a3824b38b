//! Registry of identities, each bound to two or more independent computations that must agree
//! on a parameter grid.
//!
//! Identities whose printed form is known to be wrong appear twice: once as printed (expected
//! to fail at a witness point) and once corrected (expected to pass everywhere).

use std::fmt;

use num_traits::{One, Signed, Zero};
use serde::ser::SerializeMap;
use serde::{Serialize, Serializer};

use crate::bell::{bell_deg, bell_deg_bivariate};
use crate::error::Result;
use crate::hypergeometric::{
    central_sum_deg, euler_integral_deg, gauss_value_deg, hyper_deg_general, EvalMode, HyperParams,
};
use crate::numbers::{
    alt_power_sum, apostol_h, apostol_t, golombek_b_deg, h_bell_form, h_double_sum, h_low_closed,
    h_p_hypergeometric, h_p_series, h_stirling_form, lambda_hyper_h, lambda_hyper_t, t1_closed,
};
use crate::oracle::{gf_extract_family, GfDescriptor};
use crate::rational::{
    as_i64, display, factorial, from_usize, int, nonneg_int_quotient, pow, powi, ratio, sign, to_f64, Rational,
};
use crate::gamma::gamma_real;
use crate::sequences::{binom, falling, falling_lambda, lambda_binomial, rising_lambda};
use crate::series::TruncatedSeries;
use crate::stirling::{apostol_s2, s1_classical, s1_deg, s2_classical, s2_deg};
use crate::value::Value;

/// A named assignment of grid parameters.
#[derive(Debug, Clone, PartialEq)]
pub struct Point(Vec<(&'static str, Rational)>);

impl Point {
    pub fn new(entries: Vec<(&'static str, Rational)>) -> Self {
        Self(entries)
    }

    /// The parameter `name`. Sides only ask for parameters their grid defines.
    pub fn get(&self, name: &str) -> &Rational {
        self.0
            .iter()
            .find(|(k, _)| *k == name)
            .map(|(_, v)| v)
            .unwrap_or_else(|| panic!("point {self} has no parameter {name}"))
    }

    /// The parameter `name` as an index.
    pub fn idx(&self, name: &str) -> usize {
        let v = self.get(name);
        as_i64(v)
            .and_then(|i| usize::try_from(i).ok())
            .unwrap_or_else(|| panic!("parameter {name} = {} is not an index", display(v)))
    }

    pub fn entries(&self) -> &[(&'static str, Rational)] {
        &self.0
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (k, v)) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{k}={}", display(v))?;
        }
        Ok(())
    }
}

impl Serialize for Point {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut map = s.serialize_map(Some(self.0.len()))?;
        for (k, v) in &self.0 {
            map.serialize_entry(k, &display(v))?;
        }
        map.end()
    }
}

type SideFn = Box<dyn Fn(&Point) -> Result<Value> + Send + Sync>;

/// One computation of the identity's common value.
pub struct Side {
    pub label: &'static str,
    eval: SideFn,
}

impl Side {
    pub fn new(label: &'static str, eval: impl Fn(&Point) -> Result<Value> + Send + Sync + 'static) -> Self {
        Self { label, eval: Box::new(eval) }
    }

    pub fn exact(label: &'static str, eval: impl Fn(&Point) -> Rational + Send + Sync + 'static) -> Self {
        Self::new(label, move |p| Ok(Value::Exact(eval(p))))
    }

    pub fn fallible(label: &'static str, eval: impl Fn(&Point) -> Result<Rational> + Send + Sync + 'static) -> Self {
        Self::new(label, move |p| eval(p).map(Value::Exact))
    }

    pub fn real(label: &'static str, eval: impl Fn(&Point) -> Result<f64> + Send + Sync + 'static) -> Self {
        Self::new(label, move |p| eval(p).map(Value::Approx))
    }

    pub fn eval(&self, point: &Point) -> Result<Value> {
        (self.eval)(point)
    }
}

impl fmt::Debug for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Side").field("label", &self.label).finish_non_exhaustive()
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Comparison {
    /// Every side must be an exact rational, all equal.
    ExactEqual,
    /// `|side − first side| ≤ tol · |first side|` (absolute when the first side is zero).
    RelTol(f64),
}

impl fmt::Display for Comparison {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Comparison::ExactEqual => f.write_str("exact"),
            Comparison::RelTol(tol) => write!(f, "rel-tol {tol:e}"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

/// A known misprint: its id and the corrected reading.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Erratum {
    pub id: &'static str,
    pub note: &'static str,
}

#[derive(Debug)]
pub struct IdentitySpec {
    pub id: &'static str,
    pub description: &'static str,
    pub sides: Vec<Side>,
    pub comparison: Comparison,
    pub grid: Vec<Point>,
    pub erratum: Option<Erratum>,
    pub expected: Status,
}

impl IdentitySpec {
    fn new(id: &'static str, description: &'static str, comparison: Comparison, grid: Vec<Point>, sides: Vec<Side>) -> Self {
        assert!(sides.len() >= 2, "{id}: an identity needs at least two sides");
        assert!(!grid.is_empty(), "{id}: empty grid");
        Self { id, description, sides, comparison, grid, erratum: None, expected: Status::Pass }
    }

    fn corrects(mut self, id: &'static str, note: &'static str) -> Self {
        self.erratum = Some(Erratum { id, note });
        self
    }

    fn misprinted(mut self, id: &'static str, note: &'static str) -> Self {
        self.erratum = Some(Erratum { id, note });
        self.expected = Status::Fail;
        self
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PointFailure {
    pub point: Point,
    /// Side values in side order, or the error a side raised.
    pub values: Vec<String>,
    pub residual: Option<f64>,
}

/// Largest residual seen; `ExactZero` when every exact comparison matched bit for bit.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum MaxResidual {
    ExactZero,
    Real(f64),
}

impl Serialize for MaxResidual {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            MaxResidual::ExactZero => s.serialize_str("exact-zero"),
            MaxResidual::Real(x) => s.serialize_f64(*x),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct IdentityReport {
    pub id: String,
    pub description: String,
    pub status: Status,
    pub expected: Status,
    pub comparison: String,
    pub sides: Vec<String>,
    pub points_checked: usize,
    pub failures: Vec<PointFailure>,
    pub max_residual: MaxResidual,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub erratum: Option<String>,
}

impl IdentityReport {
    pub fn as_expected(&self) -> bool {
        self.status == self.expected
    }

    /// `PASS`, `FAIL`, or `FAIL-EXPECTED` for a misprint that fails as it should.
    pub fn label(&self) -> &'static str {
        match (self.status, self.expected) {
            (Status::Pass, _) => "PASS",
            (Status::Fail, Status::Fail) => "FAIL-EXPECTED",
            (Status::Fail, Status::Pass) => "FAIL",
        }
    }

    pub fn summary_line(&self) -> String {
        format!("{} {} ({})", self.id, self.label(), self.points_checked)
    }
}

fn compare(values: &[Value], comparison: Comparison) -> (bool, Option<f64>) {
    match comparison {
        Comparison::ExactEqual => {
            let exact: Option<Vec<&Rational>> = values.iter().map(Value::exact).collect();
            let Some(exact) = exact else {
                return (false, None);
            };
            let first = exact[0];
            let residual = exact[1..].iter().map(|v| to_f64(&(*v - first).abs())).fold(0.0, f64::max);
            (exact[1..].iter().all(|v| *v == first), Some(residual))
        }
        Comparison::RelTol(tol) => {
            let first = values[0].to_f64();
            let scale = if first == 0.0 { 1.0 } else { first.abs() };
            let residual = values[1..].iter().map(|v| (v.to_f64() - first).abs() / scale).fold(0.0, f64::max);
            (residual.is_finite() && residual <= tol, Some(residual))
        }
    }
}

/// Evaluates every side at every grid point. Evaluation errors become failures at their point.
pub fn run_identity(spec: &IdentitySpec) -> IdentityReport {
    let mut failures = Vec::new();
    let mut max_residual: Option<f64> = None;
    for point in &spec.grid {
        let results: Vec<Result<Value>> = spec.sides.iter().map(|s| s.eval(point)).collect();
        let rendered = results
            .iter()
            .map(|r| match r {
                Ok(v) => v.to_string(),
                Err(e) => format!("error: {}: {e}", e.name()),
            })
            .collect();
        let values: Option<Vec<Value>> = results.into_iter().map(|r| r.ok()).collect();
        let (ok, residual) = match &values {
            Some(values) => compare(values, spec.comparison),
            None => (false, None),
        };
        if let Some(r) = residual {
            max_residual = Some(max_residual.map_or(r, |m| m.max(r)));
        }
        if !ok {
            failures.push(PointFailure { point: point.clone(), values: rendered, residual });
        }
    }
    let max_residual = match (spec.comparison, max_residual) {
        (Comparison::ExactEqual, Some(r)) if r == 0.0 && failures.is_empty() => MaxResidual::ExactZero,
        (_, r) => MaxResidual::Real(r.unwrap_or(f64::NAN)),
    };
    IdentityReport {
        id: spec.id.to_string(),
        description: spec.description.to_string(),
        status: if failures.is_empty() { Status::Pass } else { Status::Fail },
        expected: spec.expected,
        comparison: spec.comparison.to_string(),
        sides: spec.sides.iter().map(|s| s.label.to_string()).collect(),
        points_checked: spec.grid.len(),
        failures,
        max_residual,
        erratum: spec.erratum.map(|e| format!("{}: {}", e.id, e.note)),
    }
}

/// True when every report has the status its spec expects.
pub fn all_as_expected(reports: &[IdentityReport]) -> bool {
    reports.iter().all(IdentityReport::as_expected)
}

// ---------------------------------------------------------------------------------------------
// grids

/// Default λ values.
pub fn lambda_grid() -> Vec<Rational> {
    vec![int(0), ratio(1, 3), ratio(1, 2), ratio(2, 3), int(1), ratio(3, 2)]
}

/// Default λ₁ values.
pub fn lambda1_grid() -> Vec<Rational> {
    vec![ratio(1, 2), int(1), int(2)]
}

fn range(lo: usize, hi: usize) -> Vec<Rational> {
    (lo..=hi).map(from_usize).collect()
}

fn grid(axes: Vec<(&'static str, Vec<Rational>)>) -> Vec<Point> {
    let mut points = vec![Vec::new()];
    for (name, values) in axes {
        points = points
            .into_iter()
            .flat_map(|prefix: Vec<(&'static str, Rational)>| {
                values.iter().map(move |v| {
                    let mut p = prefix.clone();
                    p.push((name, v.clone()));
                    p
                })
            })
            .collect();
    }
    points.into_iter().map(Point::new).collect()
}

fn grid_where(axes: Vec<(&'static str, Vec<Rational>)>, keep: impl Fn(&Point) -> bool) -> Vec<Point> {
    grid(axes).into_iter().filter(keep).collect()
}

/// `(n, λ)` with `1 ≤ n ≤ 6`, `λ > 0` from the default grid and `n/λ ∈ ℕ`.
fn terminating(extra: Vec<(&'static str, Vec<Rational>)>) -> Vec<Point> {
    let mut axes = vec![("n", range(1, 6)), ("lambda", lambda_grid().into_iter().filter(|l| l.is_positive()).collect())];
    axes.extend(extra);
    grid_where(axes, |p| nonneg_int_quotient(&from_usize(p.idx("n")), p.get("lambda")).is_some())
}

// ---------------------------------------------------------------------------------------------
// shared pieces

fn lam(p: &Point) -> &Rational {
    p.get("lambda")
}

fn exact_mode() -> EvalMode {
    EvalMode::exact()
}

fn gf(desc: GfDescriptor, n: usize) -> Result<Rational> {
    gf_extract_family(&desc, n)
}

/// `(1+λ)^{n/λ − shift}` for terminating `n/λ`.
fn one_plus_lambda_power(n: usize, lambda: &Rational, shift: i64) -> Result<Rational> {
    let e = nonneg_int_quotient(&from_usize(n), lambda).unwrap_or_default() as i64;
    powi(&(Rational::one() + lambda), e - shift)
}

fn kronecker(a: usize, b: usize) -> Rational {
    if a == b {
        Rational::one()
    } else {
        Rational::zero()
    }
}

/// `C(n, k)` over the integers, zero outside `0 ≤ k ≤ n`.
fn binom_i(n: i64, k: i64) -> Rational {
    if n < 0 || k < 0 || k > n {
        return Rational::zero();
    }
    binom(n as usize, k as usize)
}

fn order_p_params(n: usize, p: usize, lambda: &Rational, z: Rational) -> HyperParams {
    HyperParams::new(vec![-from_usize(n); p], vec![lambda.clone(); p - 1], z, lambda.clone())
}

/// `n`-th EGF coefficient of `((t^λ − 1)/λ)^k / k!` for a positive integer `λ`.
fn printed_first_kind_kernel(n: usize, k: usize, lambda: usize) -> Result<Rational> {
    let l = from_usize(lambda);
    let mut c = vec![Rational::zero(); n.max(lambda) + 1];
    c[0] = -l.recip();
    c[lambda] = l.recip();
    TruncatedSeries::new(c).pow(k).scale(&factorial(k).recip()).egf_coefficient(n)
}

// ---------------------------------------------------------------------------------------------
// registry

const E1: &str = "the first-kind kernel is ((1+t)^λ − 1)/λ, not (t^λ − 1)/λ";
const E2: &str = "H_λ(n,2) has coefficient (n + 1 − λ − λ²), not (n + 1 − 2λ)";
const E3: &str = "the printed right side is the alternating sum of squares; cubes give (−1)^{n/2}(3n/2)!/((n/2)!)³";
const E4: &str = "the alternating factor is (−1)^{n−j}, not (−1)^j";
const E5: &str = "the middle sum uses (−1)^j, not (−1)^{n−j}";
const E6: &str = "the weight is λ₁^k, not λ₁^p";

fn classical_binomial_specs() -> Vec<IdentitySpec> {
    let n_axis = || vec![("n", range(0, 10))];
    let even_closed = |p: &Point, top: fn(usize) -> usize, power: usize| {
        let n = p.idx("n");
        if n % 2 == 1 {
            return Rational::zero();
        }
        sign(n / 2) * factorial(top(n)) / pow(&factorial(n / 2), power)
    };
    let alt_sum = |power: usize| {
        move |p: &Point| {
            let n = p.idx("n");
            (0..=n).map(|k| sign(k) * pow(&binom(n, k), power)).sum::<Rational>()
        }
    };
    vec![
        IdentitySpec::new("eq13", "Σ C(n,k) = 2^n", Comparison::ExactEqual, grid(n_axis()), vec![
            Side::exact("sum", |p| { let n = p.idx("n"); (0..=n).map(|k| binom(n, k)).sum() }),
            Side::exact("2^n", |p| pow(&int(2), p.idx("n"))),
        ]),
        IdentitySpec::new("eq14", "Σ (−1)^k C(n,k) = 0 for n ≥ 1", Comparison::ExactEqual, grid(vec![("n", range(1, 10))]), vec![
            Side::exact("alternating sum", alt_sum(1)),
            Side::exact("zero", |_| Rational::zero()),
        ]),
        IdentitySpec::new("eq15", "Σ C(n,k)² = (2n)!/(n!)² = C(2n,n)", Comparison::ExactEqual, grid(n_axis()), vec![
            Side::exact("sum of squares", |p| { let n = p.idx("n"); (0..=n).map(|k| pow(&binom(n, k), 2)).sum() }),
            Side::exact("(2n)!/(n!)^2", |p| { let n = p.idx("n"); factorial(2 * n) / pow(&factorial(n), 2) }),
            Side::exact("C(2n,n)", |p| { let n = p.idx("n"); binom(2 * n, n) }),
        ]),
        IdentitySpec::new("eq16-squares", "Σ (−1)^k C(n,k)² = (−1)^{n/2} n!/((n/2)!)², zero for odd n", Comparison::ExactEqual, grid(n_axis()), vec![
            Side::exact("alternating squares", alt_sum(2)),
            Side::exact("closed form", move |p| even_closed(p, |n| n, 2)),
        ]).corrects("E3", E3),
        IdentitySpec::new("eq16-cubes", "Σ (−1)^k C(n,k)³ = (−1)^{n/2} (3n/2)!/((n/2)!)³, zero for odd n", Comparison::ExactEqual, grid(n_axis()), vec![
            Side::exact("alternating cubes", alt_sum(3)),
            Side::exact("closed form", move |p| even_closed(p, |n| 3 * n / 2, 3)),
        ]).corrects("E3", E3),
        IdentitySpec::new("eq16-as-printed", "Σ (−1)^k C(n,k)³ against (−1)^{n/2} n!/((n/2)!)²", Comparison::ExactEqual, grid(n_axis()), vec![
            Side::exact("printed right side", move |p| even_closed(p, |n| n, 2)),
            Side::exact("alternating cubes", alt_sum(3)),
        ]).misprinted("E3", E3),
        IdentitySpec::new(
            "dixon-eq17",
            "Σ_{k=−n}^{n} (−1)^k C(n+b,n+k) C(n+c,c+k) C(b+c,b+k) = (b+c+n)!/(n! b! c!)",
            Comparison::ExactEqual,
            grid(vec![("n", range(0, 5)), ("b", range(0, 3)), ("c", range(0, 3))]),
            vec![
                Side::exact("alternating triple product", |p| {
                    let (n, b, c) = (p.idx("n") as i64, p.idx("b") as i64, p.idx("c") as i64);
                    (-n..=n)
                        .map(|k| sign(k.unsigned_abs() as usize) * binom_i(n + b, n + k) * binom_i(n + c, c + k) * binom_i(b + c, b + k))
                        .sum()
                }),
                Side::exact("factorial form", |p| {
                    let (n, b, c) = (p.idx("n"), p.idx("b"), p.idx("c"));
                    factorial(b + c + n) / (factorial(n) * factorial(b) * factorial(c))
                }),
            ],
        ),
    ]
}

fn stirling_specs() -> Vec<IdentitySpec> {
    let x_values = || {
        let mut xs: Vec<Rational> = (-3..=3).map(int).collect();
        xs.extend([ratio(1, 2), ratio(5, 7)]);
        xs
    };
    let triangle = |lambdas: Vec<Rational>| {
        grid_where(vec![("n", range(0, 10)), ("k", range(0, 10)), ("lambda", lambdas)], |p| p.idx("k") <= p.idx("n"))
    };
    vec![
        IdentitySpec::new("eq4", "S_{2,λ}(n,k) by explicit sum and from (e_λ(t) − 1)^k / k!", Comparison::ExactEqual, triangle(lambda_grid()), vec![
            Side::exact("explicit sum", |p| s2_deg(p.idx("n"), p.idx("k"), lam(p))),
            Side::fallible("generating function", |p| gf(GfDescriptor::DegStirling2 { k: p.idx("k"), lambda: lam(p).clone() }, p.idx("n"))),
        ]),
        IdentitySpec::new("eq6", "x^n = Σ S_2(n,l) (x)_l", Comparison::ExactEqual, grid(vec![("n", range(0, 10)), ("x", x_values())]), vec![
            Side::exact("x^n", |p| pow(p.get("x"), p.idx("n"))),
            Side::exact("Stirling expansion", |p| {
                let n = p.idx("n");
                (0..=n).map(|l| s2_classical(n, l) * falling(p.get("x"), l)).sum()
            }),
        ]),
        IdentitySpec::new("eq8", "(x)_n = Σ S_1(n,l) x^l", Comparison::ExactEqual, grid(vec![("n", range(0, 10)), ("x", x_values())]), vec![
            Side::exact("(x)_n", |p| falling(p.get("x"), p.idx("n"))),
            Side::exact("Stirling expansion", |p| {
                let n = p.idx("n");
                (0..=n).map(|l| s1_classical(n, l) * pow(p.get("x"), l)).sum()
            }),
        ]),
        IdentitySpec::new("stirling-inversion", "Σ_l S_2(n,l) S_1(l,k) = δ_{n,k}", Comparison::ExactEqual, grid(vec![("n", range(0, 10)), ("k", range(0, 10))]), vec![
            Side::exact("product", |p| {
                let (n, k) = (p.idx("n"), p.idx("k"));
                (0..=n).map(|l| s2_classical(n, l) * s1_classical(l, k)).sum()
            }),
            Side::exact("delta", |p| kronecker(p.idx("n"), p.idx("k"))),
        ]),
        IdentitySpec::new("eq9", "S_{1,λ}(n,k) by recurrence and from (((1+t)^λ − 1)/λ)^k / k!", Comparison::ExactEqual, triangle(lambda_grid()), vec![
            Side::exact("recurrence", |p| s1_deg(p.idx("n"), p.idx("k"), lam(p))),
            Side::fallible("generating function", |p| gf(GfDescriptor::DegStirling1 { k: p.idx("k"), lambda: lam(p).clone() }, p.idx("n"))),
        ]).corrects("E1", E1),
        IdentitySpec::new(
            "eq9-as-printed",
            "S_{1,λ}(n,k) against the coefficients of ((t^λ − 1)/λ)^k / k! for integer λ",
            Comparison::ExactEqual,
            grid_where(vec![("n", range(0, 6)), ("k", range(0, 3)), ("lambda", vec![int(1), int(2)])], |p| p.idx("k") <= p.idx("n") + 1),
            vec![
                Side::fallible("printed kernel", |p| {
                    printed_first_kind_kernel(p.idx("n"), p.idx("k"), p.idx("lambda"))
                }),
                Side::exact("recurrence", |p| s1_deg(p.idx("n"), p.idx("k"), lam(p))),
            ],
        )
        .misprinted("E1", E1),
        IdentitySpec::new("eq29", "Bel_{n,λ}(x) = Σ (x)_{k,λ} S_{2,λ}(n,k) and from e_λ^x(e_λ(t) − 1)", Comparison::ExactEqual,
            grid(vec![("n", range(0, 8)), ("x", vec![int(-2), ratio(1, 2), int(3)]), ("lambda", lambda_grid())]), vec![
            Side::exact("Stirling sum", |p| bell_deg(p.idx("n"), p.get("x"), lam(p))),
            Side::fallible("generating function", |p| gf(GfDescriptor::DegBell { x: p.get("x").clone(), lambda: lam(p).clone() }, p.idx("n"))),
        ]),
        IdentitySpec::new("eq31", "Bel_{n,λ}(x,y) = Σ (x)_{k,λ} y^k S_{2,λ}(n,k) and from e_λ^x(y(e_λ(t) − 1))", Comparison::ExactEqual,
            grid(vec![("n", range(0, 8)), ("x", vec![int(-1), ratio(2, 3), int(2)]), ("y", vec![ratio(-1, 2), ratio(2, 3), int(3)]), ("lambda", lambda_grid())]), vec![
            Side::exact("Stirling sum", |p| bell_deg_bivariate(p.idx("n"), p.get("x"), p.get("y"), lam(p))),
            Side::fallible("generating function", |p| gf(GfDescriptor::DegBellBivariate { x: p.get("x").clone(), y: p.get("y").clone(), lambda: lam(p).clone() }, p.idx("n"))),
        ]),
    ]
}

fn lambda_binomial_specs() -> Vec<IdentitySpec> {
    vec![
        IdentitySpec::new(
            "eq19",
            "binom(x+y, n)_λ = Σ binom(x, l)_λ binom(y, n−l)_λ",
            Comparison::ExactEqual,
            grid(vec![("n", range(0, 6)), ("x", vec![int(-2), ratio(1, 2), int(3)]), ("y", vec![ratio(-1, 3), int(2)]), ("lambda", lambda_grid())]),
            vec![
                Side::exact("binom(x+y, n)", |p| lambda_binomial(&(p.get("x") + p.get("y")), p.idx("n"), lam(p))),
                Side::exact("convolution", |p| {
                    let n = p.idx("n");
                    (0..=n).map(|l| lambda_binomial(p.get("x"), l, lam(p)) * lambda_binomial(p.get("y"), n - l, lam(p))).sum()
                }),
            ],
        ),
        IdentitySpec::new(
            "eq20",
            "B*_λ(n,k) = Σ C(k,j) (j)_{n,λ} = n-th derivative of (e_λ(t) + 1)^k at 0",
            Comparison::ExactEqual,
            grid(vec![("n", range(1, 8)), ("k", range(1, 4)), ("lambda", lambda_grid())]),
            vec![
                Side::fallible("finite sum", |p| golombek_b_deg(p.idx("n"), p.idx("k"), lam(p))),
                Side::fallible("generating function", |p| gf(GfDescriptor::Golombek { k: p.idx("k"), lambda: lam(p).clone() }, p.idx("n"))),
            ],
        ),
    ]
}

fn hypergeometric_specs() -> Vec<IdentitySpec> {
    let minus_one_points = grid(vec![("a", range(1, 3)), ("b", vec![int(1), int(2), ratio(5, 2)])]);
    let two_f_one_at_minus_one = |p: &Point| {
        HyperParams::new(vec![p.get("a").clone(), p.get("b").clone()], vec![p.get("b").clone()], int(-1), int(1))
    };
    let euler_grid = grid(vec![
        ("lambda", vec![ratio(1, 3), ratio(1, 2), int(1)]),
        ("a_over", vec![int(-1), int(-2), int(-3)]),
        ("b_over", vec![int(1), ratio(3, 2), int(2)]),
        ("cb_over", vec![int(1), ratio(5, 2)]),
        ("lz", vec![ratio(1, 2), ratio(-1, 3)]),
    ]);
    let euler_abc = |p: &Point| {
        let l = lam(p);
        let b = p.get("b_over") * l;
        (p.get("a_over") * l, b.clone(), b + p.get("cb_over") * l)
    };
    let gauss_grid = grid_where(
        vec![
            ("lambda", vec![ratio(1, 3), ratio(1, 2), int(1), int(2)]),
            ("a_over", vec![int(-1), int(-2), int(-4)]),
            ("b_over", vec![ratio(1, 2), int(2)]),
            ("c_over", vec![int(3), ratio(7, 2)]),
        ],
        |p| p.get("c_over") - p.get("b_over") > Rational::zero(),
    );
    vec![
        IdentitySpec::new(
            "eq10-examples",
            "₂F₁(a, b; b; −1) = 2^{−a} for a = 1, 2, 3",
            Comparison::RelTol(1e-12),
            minus_one_points,
            vec![
                Side::new("numeric series", move |p| hyper_deg_general(&two_f_one_at_minus_one(p), &EvalMode::numeric())),
                Side::new("exact series", move |p| hyper_deg_general(&two_f_one_at_minus_one(p), &exact_mode())),
                Side::fallible("(1 − z)^{−a}", |p| powi(&int(2), -as_i64(p.get("a")).unwrap_or_default())),
            ],
        ),
        IdentitySpec::new(
            "gamma-ratio",
            "⟨b⟩_{n,λ}/⟨c⟩_{n,λ} = Γ(b/λ + n) Γ(c/λ) / (Γ(c/λ + n) Γ(b/λ))",
            Comparison::RelTol(1e-9),
            grid(vec![("n", range(0, 8)), ("b", vec![ratio(1, 3), int(2)]), ("c", vec![ratio(1, 2), ratio(7, 3)]), ("lambda", vec![ratio(1, 3), ratio(1, 2), int(1), ratio(3, 2)])]),
            vec![
                Side::exact("rising ratio", |p| {
                    let n = p.idx("n");
                    rising_lambda(p.get("b"), n, lam(p)) / rising_lambda(p.get("c"), n, lam(p))
                }),
                Side::real("Gamma ratio", |p| {
                    let n = p.idx("n") as f64;
                    let (b, c) = (to_f64(&(p.get("b") / lam(p))), to_f64(&(p.get("c") / lam(p))));
                    Ok(gamma_real(b + n)? * gamma_real(c)? / (gamma_real(c + n)? * gamma_real(b)?))
                }),
            ],
        ),
        IdentitySpec::new(
            "eq37",
            "F_λ(a, b; c; z) equals its Euler integral",
            Comparison::RelTol(1e-6),
            euler_grid,
            vec![
                Side::new("series", move |p| {
                    let (a, b, c) = euler_abc(p);
                    let z = p.get("lz") / lam(p);
                    hyper_deg_general(&HyperParams::new(vec![a, b], vec![c], z, lam(p).clone()), &exact_mode())
                }),
                Side::real("Euler integral", move |p| {
                    let (a, b, c) = euler_abc(p);
                    euler_integral_deg(&a, &b, &c, to_f64(&(p.get("lz") / lam(p))), lam(p))
                }),
            ],
        ),
        IdentitySpec::new(
            "eq38",
            "F_λ(a, b; c; 1/λ) = Γ(c/λ) Γ((c−a−b)/λ) / (Γ((c−b)/λ) Γ((c−a)/λ))",
            Comparison::RelTol(1e-8),
            gauss_grid,
            vec![
                Side::new("terminating series", |p| {
                    let l = lam(p);
                    let params = HyperParams::new(
                        vec![p.get("a_over") * l, p.get("b_over") * l],
                        vec![p.get("c_over") * l],
                        l.recip(),
                        l.clone(),
                    );
                    hyper_deg_general(&params, &exact_mode())
                }),
                Side::real("Gamma quotient", |p| {
                    let l = lam(p);
                    gauss_value_deg(&(p.get("a_over") * l), &(p.get("b_over") * l), &(p.get("c_over") * l), l)
                }),
            ],
        ),
        IdentitySpec::new(
            "thm2.4",
            "Σ λ^{−2k} binom(n,k)_λ² = (2λ/n) Γ(2n/λ) / Γ(n/λ)²",
            Comparison::RelTol(1e-9),
            grid(vec![("n", range(1, 6)), ("lambda", vec![ratio(1, 3), ratio(1, 2), ratio(2, 3), int(1), ratio(3, 2)])]),
            vec![
                Side::new("series", |p| {
                    let mode = match nonneg_int_quotient(&from_usize(p.idx("n")), lam(p)) {
                        Some(_) => exact_mode(),
                        None => EvalMode::numeric().with_tol(1e-15).with_max_terms(200_000),
                    };
                    central_sum_deg(p.idx("n"), lam(p), &mode).map(|c| c.lhs)
                }),
                Side::real("Gamma closed form", |p| central_sum_deg(p.idx("n"), lam(p), &EvalMode::numeric()).map(|c| c.rhs)),
            ],
        ),
    ]
}

fn h_number_specs() -> Vec<IdentitySpec> {
    let m_axis = || ("m", range(0, 6));
    let p_axis = || ("p", range(1, 3));
    let series = |p: &Point, order: usize| h_p_series(p.idx("n"), p.idx("m"), order, lam(p), &exact_mode());
    vec![
        IdentitySpec::new("thm2.1", "Q_λ(m,2) = Σ binom(n,k)_λ² (k)_{m,λ}, by series, coefficient form and generating function", Comparison::ExactEqual, terminating(vec![m_axis()]), vec![
            Side::new("series", move |p| series(p, 2)),
            Side::new("coefficient form", |p| h_p_hypergeometric(p.idx("n"), p.idx("m"), 2, lam(p), &exact_mode())),
            Side::fallible("generating function", |p| gf(GfDescriptor::HyperQ { n: p.idx("n"), lambda: lam(p).clone() }, p.idx("m"))),
        ]),
        IdentitySpec::new("thm2.2", "H_λ(n,m) by series, Stirling form, Bell form and (1 + λe_λ(t))^{n/λ}", Comparison::ExactEqual, terminating(vec![m_axis()]), vec![
            Side::new("series", move |p| series(p, 1)),
            Side::fallible("Stirling form", |p| h_stirling_form(p.idx("n"), p.idx("m"), 1, lam(p))),
            Side::fallible("Bell form", |p| h_bell_form(p.idx("n"), p.idx("m"), lam(p))),
            Side::fallible("generating function", |p| gf(GfDescriptor::HyperH { n: p.idx("n"), lambda: lam(p).clone() }, p.idx("m"))),
        ]),
        IdentitySpec::new("cor2.3", "H_λ(n,m) = (1+λ)^{n/λ} Bel_{m,λ}(n, 1/(1+λ))", Comparison::ExactEqual, terminating(vec![m_axis()]), vec![
            Side::new("series", move |p| series(p, 1)),
            Side::fallible("Bell form", |p| h_bell_form(p.idx("n"), p.idx("m"), lam(p))),
        ]),
        IdentitySpec::new("eq33", "(1+λ) H_λ(n,1) = n (1+λ)^{n/λ}", Comparison::ExactEqual, terminating(vec![]), vec![
            Side::fallible("(1+λ) H_λ(n,1)", |p| {
                let h = h_p_series(p.idx("n"), 1, 1, lam(p), &exact_mode())?.into_exact().unwrap_or_default();
                Ok((Rational::one() + lam(p)) * h)
            }),
            Side::fallible("n (1+λ)^{n/λ}", |p| Ok(from_usize(p.idx("n")) * one_plus_lambda_power(p.idx("n"), lam(p), 0)?)),
            Side::fallible("closed form times (1+λ)", |p| Ok((Rational::one() + lam(p)) * h_low_closed(p.idx("n"), 1, lam(p))?)),
        ]),
        IdentitySpec::new("eq35", "H_λ(n,2) = n (n + 1 − λ − λ²) (1+λ)^{n/λ−2}", Comparison::ExactEqual, terminating(vec![]), vec![
            Side::fallible("closed form", |p| h_low_closed(p.idx("n"), 2, lam(p))),
            Side::new("series", |p| h_p_series(p.idx("n"), 2, 1, lam(p), &exact_mode())),
        ]).corrects("E2", E2),
        IdentitySpec::new("eq35-as-printed", "H_λ(n,2) against n (n + 1 − 2λ) (1+λ)^{n/λ−2}", Comparison::ExactEqual, terminating(vec![]), vec![
            Side::fallible("printed closed form", |p| {
                let (n, l) = (from_usize(p.idx("n")), lam(p));
                Ok(&n * (&n + int(1) - int(2) * l) * one_plus_lambda_power(p.idx("n"), l, 2)?)
            }),
            Side::new("series", |p| h_p_series(p.idx("n"), 2, 1, lam(p), &exact_mode())),
        ]).misprinted("E2", E2),
        IdentitySpec::new("h3-closed", "H_λ(n,3) closed form", Comparison::ExactEqual, terminating(vec![]), vec![
            Side::fallible("closed form", |p| h_low_closed(p.idx("n"), 3, lam(p))),
            Side::new("series", |p| h_p_series(p.idx("n"), 3, 1, lam(p), &exact_mode())),
        ]),
        IdentitySpec::new(
            "h-limit-lambda0",
            "H_λ(n,m) at λ = 1/1000 against e^n Σ n^k S_2(m,k)",
            Comparison::RelTol(1e-2),
            grid(vec![("n", range(1, 4)), ("m", range(0, 4))]),
            vec![
                Side::real("λ → 0 limit", |p| {
                    let (n, m) = (p.idx("n"), p.idx("m"));
                    let poly: Rational = (0..=m).map(|k| pow(&from_usize(n), k) * s2_classical(m, k)).sum();
                    Ok((n as f64).exp() * to_f64(&poly))
                }),
                Side::new("series at λ = 1/1000", |p| h_p_series(p.idx("n"), p.idx("m"), 1, &ratio(1, 1000), &EvalMode::numeric())),
            ],
        ),
        IdentitySpec::new("thm2.5", "H_λ^{(p)}(n,m) by series and hypergeometric coefficients", Comparison::ExactEqual, terminating(vec![m_axis(), p_axis()]), vec![
            Side::new("series", |p| h_p_series(p.idx("n"), p.idx("m"), p.idx("p"), lam(p), &exact_mode())),
            Side::new("coefficient form", |p| h_p_hypergeometric(p.idx("n"), p.idx("m"), p.idx("p"), lam(p), &exact_mode())),
        ]),
        IdentitySpec::new("thm2.6", "H_λ^{(p)}(n,m) = Σ_k Σ_l binom(n,k)_λ^p (k)_l S_{2,λ}(m,l)", Comparison::ExactEqual, terminating(vec![m_axis(), p_axis()]), vec![
            Side::new("series", |p| h_p_series(p.idx("n"), p.idx("m"), p.idx("p"), lam(p), &exact_mode())),
            Side::fallible("double sum", |p| h_double_sum(p.idx("n"), p.idx("m"), p.idx("p"), lam(p))),
        ]),
        IdentitySpec::new("eq42", "H_λ^{(p)}(n,m) from its generating function", Comparison::ExactEqual, terminating(vec![m_axis(), p_axis()]), vec![
            Side::new("series", |p| h_p_series(p.idx("n"), p.idx("m"), p.idx("p"), lam(p), &exact_mode())),
            Side::fallible("generating function", |p| gf(GfDescriptor::HyperOrderP { n: p.idx("n"), p: p.idx("p"), lambda: lam(p).clone() }, p.idx("m"))),
        ]),
        IdentitySpec::new("h-lambda1", "H_1^{(p)}(n,m) = Σ C(n,k)^p (k)_m", Comparison::ExactEqual, grid(vec![("n", range(1, 8)), m_axis(), p_axis()]), vec![
            Side::new("series at λ = 1", |p| h_p_series(p.idx("n"), p.idx("m"), p.idx("p"), &int(1), &exact_mode())),
            Side::exact("finite sum", |p| lambda_hyper_h(p.idx("n"), p.idx("m"), p.idx("p"), &int(1))),
        ]),
        IdentitySpec::new("h-p-zero", "H_λ^{(p)}(n,0) = F_λ(−n,…,−n; λ,…,λ; (−1)^p λ^{p−1})", Comparison::ExactEqual, terminating(vec![p_axis()]), vec![
            Side::new("series", |p| h_p_series(p.idx("n"), 0, p.idx("p"), lam(p), &exact_mode())),
            Side::new("hypergeometric value", |p| {
                let order = p.idx("p");
                let z = sign(order) * pow(lam(p), order - 1);
                hyper_deg_general(&order_p_params(p.idx("n"), order, lam(p), z), &exact_mode())
            }),
        ]),
        IdentitySpec::new("eq46", "Σ (−1)^k binom(n,k)_λ^p = F_λ(−n,…,−n; λ,…,λ; (−λ)^{p−1})", Comparison::ExactEqual, terminating(vec![p_axis()]), vec![
            Side::new("alternating sum", |p| alt_power_sum(p.idx("n"), p.idx("p"), lam(p), &exact_mode())),
            Side::new("hypergeometric value", |p| {
                let order = p.idx("p");
                let z = pow(&-lam(p), order - 1);
                hyper_deg_general(&order_p_params(p.idx("n"), order, lam(p), z), &exact_mode())
            }),
        ]),
    ]
}

fn section_three_specs() -> Vec<IdentitySpec> {
    let small = || vec![int(0), ratio(1, 3), ratio(1, 2), int(1), int(2)];
    let h_example = |p: &Point| -> Result<Rational> {
        let (n, m, l) = (p.idx("n"), p.idx("m"), lam(p));
        let two = |e: i64| powi(&int(2), n as i64 - e);
        let nr = from_usize(n);
        let one_minus = Rational::one() - l;
        Ok(match m {
            0 => two(0)?,
            1 => &nr * two(1)?,
            2 => &nr * (&nr + int(1) - int(2) * l) * two(2)?,
            _ => {
                falling(&nr, 3) * two(3)?
                    + int(3) * falling(&nr, 2) * &one_minus * two(2)?
                    + &nr * falling_lambda(&one_minus, 2, l) * two(1)?
            }
        })
    };
    let t_example = |p: &Point| {
        let (n, m, l) = (p.idx("n"), p.idx("m"), lam(p));
        match m {
            0 => Rational::zero(),
            1 => -kronecker(1, n),
            _ => from_usize(n * (n - 1)) * kronecker(2, n) + (l - int(1)) * kronecker(1, n),
        }
    };
    let printed_middle = |p: &Point| {
        let (n, m) = (p.idx("n"), p.idx("m"));
        (0..=n).map(|j| binom(n, j) * sign(n - j) * falling_lambda(&from_usize(j), m, lam(p))).sum::<Rational>()
    };
    let cor32 = |alternate_from_top: bool| {
        move |p: &Point| {
            let (n, k) = (p.idx("n"), p.idx("k"));
            let s: Rational = (0..=n)
                .map(|j| {
                    let sgn = if alternate_from_top { sign(n - j) } else { sign(j) };
                    binom(n, j) * sgn * pow(&from_usize(j), n + k)
                })
                .sum();
            s / factorial(n)
        }
    };
    let nk_grid = || grid(vec![("n", range(1, 6)), ("k", range(0, 4))]);
    vec![
        IdentitySpec::new("eq48", "H_{m,λ}^{(p)}(n) = Σ C(n,k)^p (k)_{m,λ} and from its generating function", Comparison::ExactEqual,
            grid(vec![("n", range(1, 6)), ("m", range(0, 6)), ("p", range(1, 3)), ("lambda", lambda_grid())]), vec![
            Side::exact("finite sum", |p| lambda_hyper_h(p.idx("n"), p.idx("m"), p.idx("p"), lam(p))),
            Side::fallible("generating function", |p| gf(GfDescriptor::LambdaHyperH { n: p.idx("n"), p: p.idx("p"), lambda: lam(p).clone() }, p.idx("m"))),
        ]),
        IdentitySpec::new("eq50", "T_{m,λ}^{(p)}(n) = Σ (−1)^k C(n,k)^p (k)_{m,λ} and from its generating function", Comparison::ExactEqual,
            grid(vec![("n", range(1, 6)), ("m", range(0, 6)), ("p", range(1, 3)), ("lambda", lambda_grid())]), vec![
            Side::exact("finite sum", |p| lambda_hyper_t(p.idx("n"), p.idx("m"), p.idx("p"), lam(p))),
            Side::fallible("generating function", |p| gf(GfDescriptor::LambdaHyperT { n: p.idx("n"), p: p.idx("p"), lambda: lam(p).clone() }, p.idx("m"))),
        ]),
        IdentitySpec::new("sec3-examples-h", "H_{m,λ}^{(1)}(n) closed forms for m ≤ 3", Comparison::ExactEqual,
            grid(vec![("n", range(1, 8)), ("m", range(0, 3)), ("lambda", lambda_grid())]), vec![
            Side::exact("finite sum", |p| lambda_hyper_h(p.idx("n"), p.idx("m"), 1, lam(p))),
            Side::fallible("closed form", h_example),
        ]),
        IdentitySpec::new("sec3-examples", "T_{m,λ}^{(1)}(n) closed forms for m ≤ 2", Comparison::ExactEqual,
            grid(vec![("n", range(1, 8)), ("m", range(0, 2)), ("lambda", lambda_grid())]), vec![
            Side::exact("finite sum", |p| lambda_hyper_t(p.idx("n"), p.idx("m"), 1, lam(p))),
            Side::exact("closed form", t_example),
        ]),
        IdentitySpec::new("thm3.1", "T_{m,λ}^{(1)}(n) = (−1)^n n! S_{2,λ}(m,n), zero for m < n", Comparison::ExactEqual,
            grid(vec![("n", range(1, 8)), ("m", range(0, 10)), ("lambda", small())]), vec![
            Side::exact("finite sum", |p| lambda_hyper_t(p.idx("n"), p.idx("m"), 1, lam(p))),
            Side::exact("Stirling closed form", |p| t1_closed(p.idx("n"), p.idx("m"), lam(p))),
            Side::fallible("generating function", |p| gf(GfDescriptor::LambdaHyperT { n: p.idx("n"), p: 1, lambda: lam(p).clone() }, p.idx("m"))),
        ]).corrects("E5", E5),
        IdentitySpec::new("thm3.1-as-printed", "Σ C(n,j) (−1)^{n−j} (j)_{m,λ} against (−1)^n n! S_{2,λ}(m,n)", Comparison::ExactEqual,
            grid(vec![("n", range(1, 8)), ("m", range(0, 10)), ("lambda", small())]), vec![
            Side::exact("printed middle sum", printed_middle),
            Side::exact("Stirling closed form", |p| t1_closed(p.idx("n"), p.idx("m"), lam(p))),
        ]).misprinted("E5", E5),
        IdentitySpec::new("thm3.3", "T_{m,λ}^{(1)}(n | λ₁) by direct sum, Stirling double sum and generating function", Comparison::ExactEqual,
            grid(vec![("n", range(1, 6)), ("m", range(0, 8)), ("lambda", vec![int(0), ratio(1, 3), ratio(1, 2), int(1)]), ("lambda1", lambda1_grid())]), vec![
            Side::exact("direct", |p| apostol_t(p.idx("n"), p.idx("m"), lam(p), p.get("lambda1")).direct),
            Side::exact("Stirling form", |p| apostol_t(p.idx("n"), p.idx("m"), lam(p), p.get("lambda1")).stirling_form),
            Side::fallible("generating function", |p| gf(GfDescriptor::ApostolT { n: p.idx("n"), p: 1, lambda: lam(p).clone(), lambda1: p.get("lambda1").clone() }, p.idx("m"))),
        ]),
        IdentitySpec::new("cor3.2", "(1/n!) Σ (−1)^{n−j} C(n,j) j^{n+k} = S_2(n+k, n)", Comparison::ExactEqual, nk_grid(), vec![
            Side::exact("alternating sum", cor32(true)),
            Side::exact("S_2(n+k, n)", |p| s2_classical(p.idx("n") + p.idx("k"), p.idx("n"))),
        ]).corrects("E4", E4),
        IdentitySpec::new("cor3.2-as-printed", "(1/n!) Σ (−1)^j C(n,j) j^{n+k} against S_2(n+k, n)", Comparison::ExactEqual, nk_grid(), vec![
            Side::exact("printed alternating sum", cor32(false)),
            Side::exact("S_2(n+k, n)", |p| s2_classical(p.idx("n") + p.idx("k"), p.idx("n"))),
        ]).misprinted("E4", E4),
        IdentitySpec::new("eq59", "S_2(n+k, n) = (1/n!) Σ_j Σ_l C(n,j) (j)_l (−1)^{n−j} S_2(n+k, l)", Comparison::ExactEqual, nk_grid(), vec![
            Side::exact("S_2(n+k, n)", |p| s2_classical(p.idx("n") + p.idx("k"), p.idx("n"))),
            Side::exact("double sum", |p| {
                let (n, k) = (p.idx("n"), p.idx("k"));
                let s: Rational = (0..=n)
                    .flat_map(|j| (0..=n + k).map(move |l| (j, l)))
                    .map(|(j, l)| binom(n, j) * falling(&from_usize(j), l) * sign(n - j) * s2_classical(n + k, l))
                    .sum();
                s / factorial(n)
            }),
        ]),
        IdentitySpec::new("cor3.4", "Σ C(n,j) λ₁^j (−1)^j j^{n+k} = (−1)^n n! S(n+k, n | λ₁) = T_{n+k,0}^{(1)}(n | λ₁)", Comparison::ExactEqual,
            grid(vec![("n", range(1, 6)), ("k", range(0, 4)), ("lambda1", lambda1_grid())]), vec![
            Side::exact("power sum", |p| {
                let (n, k, l1) = (p.idx("n"), p.idx("k"), p.get("lambda1"));
                (0..=n).map(|j| binom(n, j) * pow(l1, j) * sign(j) * pow(&from_usize(j), n + k)).sum()
            }),
            Side::exact("Apostol-Stirling", |p| {
                let n = p.idx("n");
                sign(n) * factorial(n) * apostol_s2(n + p.idx("k"), n, p.get("lambda1"))
            }),
            Side::exact("T at λ = 0", |p| apostol_t(p.idx("n"), p.idx("n") + p.idx("k"), &int(0), p.get("lambda1")).direct),
        ]),
        IdentitySpec::new("eq66", "S(m, n | λ₁) by explicit sum and from (λ₁e^t − 1)^n / n!", Comparison::ExactEqual,
            grid(vec![("m", range(0, 10)), ("n", range(0, 6)), ("lambda1", lambda1_grid())]), vec![
            Side::exact("explicit sum", |p| apostol_s2(p.idx("m"), p.idx("n"), p.get("lambda1"))),
            Side::fallible("generating function", |p| gf(GfDescriptor::ApostolStirling2 { n: p.idx("n"), lambda1: p.get("lambda1").clone() }, p.idx("m"))),
        ]),
        IdentitySpec::new("eq69", "H_{m,λ}^{(p)}(n | λ₁) = Σ C(n,k)^p λ₁^k (k)_{m,λ} and from its generating function", Comparison::ExactEqual,
            grid(vec![("n", range(1, 5)), ("m", range(0, 4)), ("p", range(1, 3)), ("lambda", vec![int(0), ratio(1, 2), int(1)]), ("lambda1", lambda1_grid())]), vec![
            Side::exact("finite sum", |p| apostol_h(p.idx("n"), p.idx("m"), p.idx("p"), lam(p), p.get("lambda1"))),
            Side::fallible("generating function", |p| gf(GfDescriptor::ApostolH { n: p.idx("n"), p: p.idx("p"), lambda: lam(p).clone(), lambda1: p.get("lambda1").clone() }, p.idx("m"))),
        ]).corrects("E6", E6),
        IdentitySpec::new("eq68-as-printed", "Σ C(n,k)^p λ₁^p (k)_{m,λ} against the generating function", Comparison::ExactEqual,
            grid(vec![("n", range(1, 5)), ("m", range(0, 4)), ("p", range(1, 3)), ("lambda", vec![int(0), ratio(1, 2), int(1)]), ("lambda1", lambda1_grid())]), vec![
            Side::exact("printed finite sum", |p| {
                let (n, m, order, l1) = (p.idx("n"), p.idx("m"), p.idx("p"), p.get("lambda1"));
                (0..=n).map(|k| pow(&binom(n, k), order) * pow(l1, order) * falling_lambda(&from_usize(k), m, lam(p))).sum()
            }),
            Side::fallible("generating function", |p| gf(GfDescriptor::ApostolH { n: p.idx("n"), p: p.idx("p"), lambda: lam(p).clone(), lambda1: p.get("lambda1").clone() }, p.idx("m"))),
        ]).misprinted("E6", E6),
    ]
}

/// Every registered identity, in a fixed order.
pub fn registry() -> Vec<IdentitySpec> {
    let mut specs = classical_binomial_specs();
    specs.extend(stirling_specs());
    specs.extend(lambda_binomial_specs());
    specs.extend(hypergeometric_specs());
    specs.extend(h_number_specs());
    specs.extend(section_three_specs());
    specs
}

pub fn ids() -> Vec<&'static str> {
    registry().iter().map(|s| s.id).collect()
}

pub fn find(id: &str) -> Option<IdentitySpec> {
    registry().into_iter().find(|s| s.id == id)
}

pub fn run_all() -> Vec<IdentityReport> {
    registry().iter().map(run_identity).collect()
}

/// The binomial-coefficient identities: sums, alternating sums, squares, cubes and Dixon.
pub fn classical_binomial_suite() -> Vec<IdentityReport> {
    classical_binomial_specs().iter().map(run_identity).collect()
}

/// Cross-checks between alternating power sums and (Apostol-)Stirling numbers.
pub fn stirling_cross_suite() -> Vec<IdentityReport> {
    section_three_specs()
        .iter()
        .filter(|s| matches!(s.id, "cor3.2" | "cor3.2-as-printed" | "eq59" | "cor3.4"))
        .map(run_identity)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn report(id: &str) -> IdentityReport {
        run_identity(&find(id).unwrap_or_else(|| panic!("no identity {id}")))
    }

    #[test]
    fn ids_are_unique() {
        let mut ids = ids();
        let n = ids.len();
        ids.sort_unstable();
        ids.dedup();
        assert_eq!(ids.len(), n);
    }

    #[test]
    fn binomial_sum_passes_on_eleven_points() {
        let r = report("eq13");
        assert_eq!(r.summary_line(), "eq13 PASS (11)");
        assert_eq!(r.max_residual, MaxResidual::ExactZero);
    }

    #[test]
    fn printed_second_moment_fails_at_witness() {
        let r = report("eq35-as-printed");
        assert_eq!(r.label(), "FAIL-EXPECTED");
        let witness = r
            .failures
            .iter()
            .find(|f| f.point.idx("n") == 1 && *f.point.get("lambda") == ratio(1, 2))
            .expect("witness point fails");
        assert_eq!(witness.values, vec!["1".to_string(), "5/4".to_string()]);
    }

    #[test]
    fn every_erratum_has_a_red_and_a_green_spec() {
        let specs = registry();
        for e in ["E1", "E2", "E3", "E4", "E5", "E6"] {
            let tagged: Vec<_> = specs.iter().filter(|s| s.erratum.is_some_and(|x| x.id == e)).collect();
            assert!(tagged.iter().any(|s| s.expected == Status::Fail), "{e} red");
            assert!(tagged.iter().any(|s| s.expected == Status::Pass), "{e} green");
        }
    }

    #[test]
    fn classical_and_cross_suites() {
        let classical = classical_binomial_suite();
        assert!(all_as_expected(&classical));
        let cubes = classical.iter().find(|r| r.id == "eq16-as-printed").unwrap();
        let n2 = cubes.failures.iter().find(|f| f.point.idx("n") == 2).unwrap();
        assert_eq!(n2.values, vec!["-2".to_string(), "-6".to_string()]);
        let cross = stirling_cross_suite();
        assert_eq!(cross.len(), 4);
        assert!(all_as_expected(&cross));
    }

    #[test]
    fn errors_become_point_failures() {
        let spec = IdentitySpec::new(
            "probe",
            "error propagation",
            Comparison::ExactEqual,
            grid(vec![("n", range(0, 1))]),
            vec![
                Side::fallible("fails at zero", |p| golombek_b_deg(p.idx("n"), 1, &int(0))),
                Side::exact("one", |_| int(1)),
            ],
        );
        let r = run_identity(&spec);
        assert_eq!(r.failures.len(), 1);
        assert!(r.failures[0].values[0].starts_with("error: DomainError"));
        assert_eq!(r.status, Status::Fail);
    }

    #[test]
    fn reports_are_deterministic() {
        let a = serde_json::to_string(&report("thm2.4")).unwrap();
        let b = serde_json::to_string(&report("thm2.4")).unwrap();
        assert_eq!(a, b);
    }
}
