use serde::{Serialize, Serializer};

use crate::rational::{display, to_f64, Rational};

/// Result of an evaluation: an exact rational, or a float when the series had to be truncated.
#[derive(Debug, Clone, PartialEq)]
pub enum Value {
    Exact(Rational),
    Approx(f64),
}

impl Value {
    pub fn to_f64(&self) -> f64 {
        match self {
            Value::Exact(r) => to_f64(r),
            Value::Approx(x) => *x,
        }
    }

    pub fn exact(&self) -> Option<&Rational> {
        match self {
            Value::Exact(r) => Some(r),
            Value::Approx(_) => None,
        }
    }

    pub fn into_exact(self) -> Option<Rational> {
        match self {
            Value::Exact(r) => Some(r),
            Value::Approx(_) => None,
        }
    }

    pub fn is_exact(&self) -> bool {
        matches!(self, Value::Exact(_))
    }
}

impl std::fmt::Display for Value {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Value::Exact(r) => f.write_str(&display(r)),
            Value::Approx(x) => f.write_str(&format_significant(*x, 15)),
        }
    }
}

impl Serialize for Value {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

/// Decimal rendering with `digits` significant digits; scientific notation outside
/// `[1e-5, 1e15)`.
pub fn format_significant(x: f64, digits: usize) -> String {
    if !x.is_finite() {
        return x.to_string();
    }
    if x == 0.0 {
        return "0".to_string();
    }
    let magnitude = x.abs().log10().floor() as i32;
    if !(-5..15).contains(&magnitude) {
        return format!("{:.*e}", digits - 1, x);
    }
    let decimals = (digits as i32 - 1 - magnitude).max(0) as usize;
    let s = format!("{x:.decimals$}");
    // the rounding may have bumped the magnitude (9.99… -> 10.0…); recount once
    let rounded: f64 = s.parse().unwrap_or(x);
    let magnitude2 = rounded.abs().log10().floor() as i32;
    if magnitude2 != magnitude {
        let decimals = (digits as i32 - 1 - magnitude2).max(0) as usize;
        return format!("{x:.decimals$}");
    }
    s
}
