//! λ-falling and λ-rising products and λ-binomial coefficients.
//!
//! The classical falling factorial, rising factorial and binomial coefficient are the
//! `lambda = 1` instances of these functions; there is no separate code path for them.
//! `lambda = 0` is allowed and gives plain powers, `(x)_{n,0} = x^n`.

use num_traits::{One, Zero};

use crate::rational::{factorial, int, Rational};

/// `(x)_{n,λ} = x (x − λ) ⋯ (x − (n−1)λ)`, with `(x)_{0,λ} = 1`.
pub fn falling_lambda(x: &Rational, n: usize, lambda: &Rational) -> Rational {
    let mut acc = Rational::one();
    let mut factor = x.clone();
    for _ in 0..n {
        if factor.is_zero() {
            return Rational::zero();
        }
        acc *= &factor;
        factor -= lambda;
    }
    acc
}

/// `⟨a⟩_{n,λ} = a (a + λ) ⋯ (a + (n−1)λ)`, with `⟨a⟩_{0,λ} = 1`.
pub fn rising_lambda(a: &Rational, n: usize, lambda: &Rational) -> Rational {
    falling_lambda(a, n, &-lambda)
}

/// `binom(x, n)_λ = (x)_{n,λ} / n!`.
pub fn lambda_binomial(x: &Rational, n: usize, lambda: &Rational) -> Rational {
    falling_lambda(x, n, lambda) / factorial(n)
}

/// Classical falling factorial `(x)_n`.
pub fn falling(x: &Rational, n: usize) -> Rational {
    falling_lambda(x, n, &Rational::one())
}

/// Classical rising factorial (Pochhammer symbol) `⟨a⟩_n`.
pub fn rising(a: &Rational, n: usize) -> Rational {
    rising_lambda(a, n, &Rational::one())
}

/// Classical binomial coefficient `C(x, n)` for rational `x`.
pub fn binomial(x: &Rational, n: usize) -> Rational {
    lambda_binomial(x, n, &Rational::one())
}

/// `C(n, k)` for non-negative integers; zero when `k > n`.
pub fn binom(n: usize, k: usize) -> Rational {
    binomial(&int(n as i64), k)
}
