//! Stirling numbers of both kinds, their degenerate versions, and Apostol–Stirling numbers of
//! the second kind.
//!
//! Single values use explicit finite sums (second kind, Apostol) or the triangular recurrence
//! (degenerate first kind). Whole tables are built by recurrence and memoized; the
//! generating-function route in [`crate::oracle`] is kept independent of both.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use num_traits::{One, Zero};
use serde::Serialize;

use crate::rational::{factorial, from_usize, pow, sign, Rational};
use crate::sequences::{binom, falling_lambda};

/// `S_2(n, k)`, ordinary Stirling numbers of the second kind.
pub fn s2_classical(n: usize, k: usize) -> Rational {
    s2_deg(n, k, &Rational::zero())
}

/// Signed Stirling numbers of the first kind, `(x)_n = Σ S_1(n,l) x^l`.
pub fn s1_classical(n: usize, k: usize) -> Rational {
    s1_deg(n, k, &Rational::zero())
}

/// `S_{2,λ}(n, k) = (1/k!) Σ_{j=0}^{k} (−1)^{k−j} C(k,j) (j)_{n,λ}`.
pub fn s2_deg(n: usize, k: usize, lambda: &Rational) -> Rational {
    if k > n {
        return Rational::zero();
    }
    let sum: Rational = (0..=k)
        .map(|j| sign(k - j) * binom(k, j) * falling_lambda(&from_usize(j), n, lambda))
        .sum();
    sum / factorial(k)
}

/// `S_{1,λ}(n, k)`, generated by `(1/k!) (((1+t)^λ − 1)/λ)^k`; computed with
/// `S_{1,λ}(n+1,k) = S_{1,λ}(n,k−1) + (kλ − n) S_{1,λ}(n,k)`.
pub fn s1_deg(n: usize, k: usize, lambda: &Rational) -> Rational {
    if k > n {
        return Rational::zero();
    }
    // Only columns 0..=k are needed.
    let mut row = vec![Rational::zero(); k + 1];
    row[0] = Rational::one();
    for i in 0..n {
        for j in (0..=k).rev() {
            let stay = (from_usize(j) * lambda - from_usize(i)) * &row[j];
            row[j] = if j == 0 { stay } else { &row[j - 1] + stay };
        }
    }
    row.swap_remove(k)
}

/// `S(m, n | λ₁) = ((−1)^n / n!) Σ_{j=0}^{n} C(n,j) λ₁^j (−1)^j j^m`, the coefficients of
/// `(λ₁ e^t − 1)^n / n!`. Unlike the other kinds this is nonzero for `n > m` when `λ₁ ≠ 1`.
pub fn apostol_s2(m: usize, n: usize, lambda1: &Rational) -> Rational {
    let sum: Rational = (0..=n)
        .map(|j| binom(n, j) * pow(lambda1, j) * sign(j) * pow(&from_usize(j), m))
        .sum();
    sign(n) * sum / factorial(n)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum StirlingKind {
    S1,
    S2,
    S1Deg,
    S2Deg,
    ApostolS2,
}

impl std::str::FromStr for StirlingKind {
    type Err = crate::Error;
    fn from_str(s: &str) -> crate::Result<Self> {
        Ok(match s.to_ascii_lowercase().as_str() {
            "s1" => Self::S1,
            "s2" => Self::S2,
            "s1deg" => Self::S1Deg,
            "s2deg" => Self::S2Deg,
            "apostols2" | "apostol" => Self::ApostolS2,
            _ => return Err(crate::Error::Parse(format!("unknown Stirling kind {s:?}"))),
        })
    }
}

/// Square table of `entries(n, k)` for `0 ≤ n, k ≤ max_n`. For every kind except
/// [`StirlingKind::ApostolS2`] the part above the diagonal is zero.
#[derive(Debug, Clone, PartialEq)]
pub struct StirlingTable {
    kind: StirlingKind,
    lambda: Rational,
    lambda1: Rational,
    max_n: usize,
    entries: Vec<Vec<Rational>>,
}

impl StirlingTable {
    /// Builds the table by recurrence. `lambda` is ignored for the classical kinds and
    /// `lambda1` for everything but Apostol.
    pub fn build(kind: StirlingKind, lambda: &Rational, lambda1: &Rational, max_n: usize) -> Self {
        let (lambda, lambda1) = normalize_params(kind, lambda, lambda1);
        let size = max_n + 1;
        let mut entries = vec![vec![Rational::zero(); size]; size];
        match kind {
            StirlingKind::ApostolS2 => {
                let base = &lambda1 - Rational::one();
                for (k, e) in entries[0].iter_mut().enumerate() {
                    *e = pow(&base, k) / factorial(k);
                }
                // d/dt of (λ₁e^t − 1)^k/k! is F_{k−1} + k F_k.
                for m in 0..max_n {
                    for k in 0..size {
                        let mut v = from_usize(k) * &entries[m][k];
                        if k > 0 {
                            v += &entries[m][k - 1];
                        }
                        entries[m + 1][k] = v;
                    }
                }
            }
            _ => {
                entries[0][0] = Rational::one();
                for n in 0..max_n {
                    for k in 1..=n + 1 {
                        let (k_r, n_r) = (from_usize(k), from_usize(n));
                        let weight = match kind {
                            StirlingKind::S2 | StirlingKind::S2Deg => k_r - n_r * &lambda,
                            StirlingKind::S1 | StirlingKind::S1Deg => k_r * &lambda - n_r,
                            StirlingKind::ApostolS2 => unreachable!(),
                        };
                        entries[n + 1][k] = &entries[n][k - 1] + weight * &entries[n][k];
                    }
                }
            }
        }
        Self { kind, lambda, lambda1, max_n, entries }
    }

    pub fn kind(&self) -> StirlingKind {
        self.kind
    }

    pub fn max_n(&self) -> usize {
        self.max_n
    }

    pub fn lambda(&self) -> &Rational {
        &self.lambda
    }

    pub fn lambda1(&self) -> &Rational {
        &self.lambda1
    }

    /// `entries(n, k)`, or `None` outside the table.
    pub fn get(&self, n: usize, k: usize) -> Option<&Rational> {
        self.entries.get(n)?.get(k)
    }

    pub fn rows(&self) -> &[Vec<Rational>] {
        &self.entries
    }
}

fn normalize_params(kind: StirlingKind, lambda: &Rational, lambda1: &Rational) -> (Rational, Rational) {
    let lambda = match kind {
        StirlingKind::S1Deg | StirlingKind::S2Deg => lambda.clone(),
        // The classical kinds are the λ = 0 members of the degenerate recurrences.
        StirlingKind::S1 | StirlingKind::S2 | StirlingKind::ApostolS2 => Rational::zero(),
    };
    let lambda1 = match kind {
        StirlingKind::ApostolS2 => lambda1.clone(),
        _ => Rational::one(),
    };
    (lambda, lambda1)
}

type TableKey = (StirlingKind, Rational, Rational);

fn cache() -> &'static Mutex<HashMap<TableKey, Arc<StirlingTable>>> {
    static CACHE: OnceLock<Mutex<HashMap<TableKey, Arc<StirlingTable>>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// Memoized [`StirlingTable::build`]. A cached table is reused when it is at least as large
/// as requested; entries never depend on the table size.
pub fn table(kind: StirlingKind, lambda: &Rational, lambda1: &Rational, max_n: usize) -> Arc<StirlingTable> {
    let (lambda, lambda1) = normalize_params(kind, lambda, lambda1);
    let key = (kind, lambda, lambda1);
    if let Some(t) = cache().lock().unwrap().get(&key) {
        if t.max_n >= max_n {
            return Arc::clone(t);
        }
    }
    // Built outside the lock; a concurrent builder of the same key produces an equal table.
    let built = Arc::new(StirlingTable::build(kind, &key.1, &key.2, max_n));
    let mut guard = cache().lock().unwrap();
    let slot = guard.entry(key).or_insert_with(|| Arc::clone(&built));
    if slot.max_n < max_n {
        *slot = Arc::clone(&built);
    }
    Arc::clone(slot)
}
