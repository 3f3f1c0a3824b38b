//! Closed-form and finite-sum routines against coefficients of their generating functions.

use degen::bell::{bell_deg, bell_deg_bivariate};
use degen::numbers::golombek_b_deg;
use degen::rational::{int, ratio, Rational};
use degen::stirling::{apostol_s2, s1_deg, s2_deg};
use degen::GfDescriptor;

const N: usize = 12;

fn lambdas() -> Vec<Rational> {
    vec![int(0), ratio(1, 3), ratio(1, 2), ratio(2, 3), int(1), ratio(3, 2), int(-1)]
}

fn lambda1s() -> Vec<Rational> {
    vec![ratio(1, 2), int(1), int(2)]
}

fn coefficients(d: GfDescriptor) -> Vec<Rational> {
    let s = d.build(N).unwrap();
    (0..=N).map(|n| s.egf_coefficient(n).unwrap()).collect()
}

#[test]
fn degenerate_stirling_second_kind() {
    for lambda in lambdas() {
        for k in 0..=N {
            let gf = coefficients(GfDescriptor::DegStirling2 { k, lambda: lambda.clone() });
            for n in 0..=N {
                assert_eq!(s2_deg(n, k, &lambda), gf[n], "n={n} k={k} λ={lambda}");
            }
        }
    }
}

#[test]
fn degenerate_stirling_first_kind() {
    for lambda in lambdas() {
        for k in 0..=N {
            let gf = coefficients(GfDescriptor::DegStirling1 { k, lambda: lambda.clone() });
            for n in 0..=N {
                assert_eq!(s1_deg(n, k, &lambda), gf[n], "n={n} k={k} λ={lambda}");
            }
        }
    }
}

#[test]
fn apostol_stirling() {
    for lambda1 in lambda1s() {
        for n in 0..=N {
            let gf = coefficients(GfDescriptor::ApostolStirling2 { n, lambda1: lambda1.clone() });
            for m in 0..=N {
                assert_eq!(apostol_s2(m, n, &lambda1), gf[m], "m={m} n={n} λ₁={lambda1}");
            }
        }
    }
}

#[test]
fn degenerate_bell() {
    let xs = [int(-2), ratio(-1, 3), int(0), ratio(1, 2), int(1), int(3)];
    for lambda in lambdas() {
        for x in &xs {
            let gf = coefficients(GfDescriptor::DegBell { x: x.clone(), lambda: lambda.clone() });
            for n in 0..=N {
                assert_eq!(bell_deg(n, x, &lambda), gf[n], "n={n} x={x} λ={lambda}");
            }
            for y in [ratio(-1, 2), ratio(2, 3), int(2)] {
                let gf = coefficients(GfDescriptor::DegBellBivariate { x: x.clone(), y: y.clone(), lambda: lambda.clone() });
                for n in 0..=N {
                    assert_eq!(bell_deg_bivariate(n, x, &y, &lambda), gf[n], "n={n} x={x} y={y} λ={lambda}");
                }
            }
        }
    }
}

#[test]
fn golombek() {
    for lambda in lambdas() {
        for k in 1..=6 {
            let gf = coefficients(GfDescriptor::Golombek { k, lambda: lambda.clone() });
            for n in 1..=N {
                assert_eq!(golombek_b_deg(n, k, &lambda).unwrap(), gf[n], "n={n} k={k} λ={lambda}");
            }
        }
    }
}
