//! Degenerate Bell polynomials `Bel_{n,λ}(x)` and their bivariate form `Bel_{n,λ}(x, y)`.

use num_traits::One;

use crate::rational::{pow, Rational};
use crate::sequences::falling_lambda;
use crate::stirling::s2_deg;

/// `Bel_{n,λ}(x) = Σ_{k=0}^{n} (x)_{k,λ} S_{2,λ}(n,k)`.
pub fn bell_deg(n: usize, x: &Rational, lambda: &Rational) -> Rational {
    bell_deg_bivariate(n, x, &Rational::one(), lambda)
}

/// `Bel_{n,λ}(x, y) = Σ_{k=0}^{n} (x)_{k,λ} y^k S_{2,λ}(n,k)`.
pub fn bell_deg_bivariate(n: usize, x: &Rational, y: &Rational, lambda: &Rational) -> Rational {
    bivariate_coefficients(n, x, lambda)
        .into_iter()
        .enumerate()
        .map(|(k, c)| c * pow(y, k))
        .sum()
}

/// Coefficients of `Bel_{n,λ}(x, y)` as a polynomial in `y`: entry `k` is
/// `(x)_{k,λ} S_{2,λ}(n,k)`.
pub fn bivariate_coefficients(n: usize, x: &Rational, lambda: &Rational) -> Vec<Rational> {
    (0..=n).map(|k| falling_lambda(x, k, lambda) * s2_deg(n, k, lambda)).collect()
}
