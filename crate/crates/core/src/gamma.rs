#![allow(clippy::excessive_precision)]

use crate::error::{Error, Result};

const LANCZOS_G: f64 = 671.0 / 128.0;
const LANCZOS_C0: f64 = 0.999_999_999_999_997_092;
const LANCZOS_COEFFS: [f64; 14] = [
    57.156_235_665_862_923_5,
    -59.597_960_355_475_491_2,
    14.136_097_974_741_747_1,
    -0.491_913_816_097_620_199,
    0.339_946_499_848_118_887e-4,
    0.465_236_289_270_485_756e-4,
    -0.983_744_753_048_795_646e-4,
    0.158_088_703_224_912_494e-3,
    -0.210_264_441_724_104_883e-3,
    0.217_439_618_115_212_643e-3,
    -0.164_318_106_536_763_890e-3,
    0.844_182_239_838_527_433e-4,
    -0.261_908_384_015_814_087e-4,
    0.368_991_826_595_316_234e-5,
];

/// Γ(x) for real `x > 0`.
///
/// Integers up to 20 are returned as exact factorials; other arguments use a Lanczos
/// approximation (g = 671/128, fourteen terms), shifted up by the recurrence
/// `Γ(x) = Γ(x+1)/x` when `x < 1`.
pub fn gamma_real(x: f64) -> Result<f64> {
    if x.is_nan() || x <= 0.0 || !x.is_finite() {
        return Err(Error::Domain(format!("gamma_real requires x > 0, got {x}")));
    }
    if x.fract() == 0.0 && x <= 20.0 {
        return Ok((1..x as u64).fold(1.0, |acc, i| acc * i as f64));
    }
    if x < 1.0 {
        return Ok(lanczos(x + 1.0) / x);
    }
    Ok(lanczos(x))
}

fn lanczos(x: f64) -> f64 {
    let mut series = LANCZOS_C0;
    for (i, c) in LANCZOS_COEFFS.iter().enumerate() {
        series += c / (x + 1.0 + i as f64);
    }
    let t = x + LANCZOS_G;
    ((x + 0.5) * t.ln() - t).exp() * (2.0 * std::f64::consts::PI).sqrt() * series / x
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rel(a: f64, b: f64) -> f64 {
        ((a - b) / b).abs()
    }

    #[test]
    fn exact_integers() {
        assert_eq!(gamma_real(1.0).unwrap(), 1.0);
        assert_eq!(gamma_real(5.0).unwrap(), 24.0);
        assert_eq!(gamma_real(20.0).unwrap(), 121_645_100_408_832_000.0);
    }

    #[test]
    fn half_integers() {
        // √π from the standard library constant, and Γ(n + 1/2) = (2n)! √π / (4^n n!).
        let sqrt_pi = std::f64::consts::PI.sqrt();
        assert!(rel(gamma_real(0.5).unwrap(), 1.772_453_850_905_516) < 1e-14);
        assert!(rel(gamma_real(0.5).unwrap(), sqrt_pi) < 1e-14);
        assert!(rel(gamma_real(3.5).unwrap(), 15.0 / 8.0 * sqrt_pi) < 1e-13);
        let g = 2_432_902_008_176_640_000.0 * sqrt_pi / (4f64.powi(10) * 3_628_800.0);
        assert!(rel(gamma_real(10.5).unwrap(), g) < 1e-13);
    }

    #[test]
    fn recurrence_holds_on_a_grid() {
        let mut x = 0.05;
        while x < 30.0 {
            let lhs = gamma_real(x + 1.0).unwrap();
            let rhs = x * gamma_real(x).unwrap();
            assert!(rel(lhs, rhs) < 1e-12, "x = {x}");
            x += 0.37;
        }
    }

    #[test]
    fn rejects_non_positive() {
        assert!(gamma_real(0.0).is_err());
        assert!(gamma_real(-1.5).is_err());
        assert!(gamma_real(f64::NAN).is_err());
    }
}
