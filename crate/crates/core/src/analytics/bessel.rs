//! Modified Bessel function `K₀`.

use std::f64::consts::PI;

use crate::error::{Error, Result};

pub const EULER_GAMMA: f64 = 0.577_215_664_901_532_9;

/// `K₀(x)` for `x > 0`: power series below 2, Steed's continued fraction above.
pub fn modified_bessel_k0(x: f64) -> Result<f64> {
    if !(x > 0.0) || x.is_nan() {
        return Err(Error::Domain(format!("K0 needs x > 0, got {x}")));
    }
    if x.is_infinite() {
        return Ok(0.0);
    }
    Ok(if x <= 2.0 { series(x) } else { continued_fraction(x) })
}

/// `-(ln(x/2) + γ) I₀(x) + Σ (x²/4)^k H_k / (k!)²`.
fn series(x: f64) -> f64 {
    let q = 0.25 * x * x;
    let mut term = 1.0;
    let mut i0 = 1.0;
    let mut harmonic = 0.0;
    let mut tail = 0.0;
    for k in 1..60 {
        let kf = k as f64;
        term *= q / (kf * kf);
        harmonic += 1.0 / kf;
        i0 += term;
        tail += term * harmonic;
        if term * harmonic < 1e-17 * tail.abs().max(1e-300) && term < 1e-17 * i0 {
            break;
        }
    }
    -((0.5 * x).ln() + EULER_GAMMA) * i0 + tail
}

/// Steed's algorithm for `K_ν` at `ν = 0`.
fn continued_fraction(x: f64) -> f64 {
    let a1 = 0.25;
    let mut b = 2.0 * (1.0 + x);
    let mut d = 1.0 / b;
    let mut delh = d;
    let mut q1 = 0.0;
    let mut q2 = 1.0;
    let mut q = a1;
    let mut c = a1;
    let mut a = -a1;
    let mut s = 1.0 + q * delh;
    for i in 2..10_000 {
        let fi = i as f64;
        a -= 2.0 * (fi - 1.0);
        c = -a * c / fi;
        let qnew = (q1 - b * q2) / a;
        q1 = q2;
        q2 = qnew;
        q += c * qnew;
        b += 2.0;
        d = 1.0 / (b + a * d);
        delh = (b * d - 1.0) * delh;
        let dels = q * delh;
        s += dels;
        if (dels / s).abs() < 1e-17 {
            break;
        }
    }
    (PI / (2.0 * x)).sqrt() * (-x).exp() / s
}

/// `-ln(x e^γ/2)`, the small-argument form.
pub fn k0_small_x(x: f64) -> f64 {
    -(x * EULER_GAMMA.exp() / 2.0).ln()
}

/// `√(π/2x) e^{-x}`, the large-argument form.
pub fn k0_large_x(x: f64) -> f64 {
    (PI / (2.0 * x)).sqrt() * (-x).exp()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quad::{integrate_to_infinity, Tolerance};
    use proptest::prelude::*;

    /// `e^{-x} ∫₀^∞ e^{-x(cosh t - 1)} dt`.
    fn k0_integral(x: f64) -> f64 {
        (-x).exp() * integrate_to_infinity(|t| (-x * (t.cosh() - 1.0)).exp(), 0.0, Tolerance::relative(1e-13)).unwrap()
    }

    #[test]
    fn reference_values() {
        assert!((modified_bessel_k0(1.0).unwrap() - 0.42102443824070834).abs() < 1e-15);
        assert!((modified_bessel_k0(0.1).unwrap() - 2.4270690247020166).abs() < 1e-14);
        assert!((modified_bessel_k0(5.0).unwrap() / 0.0036910983340425942 - 1.0).abs() < 1e-13);
        assert!((modified_bessel_k0(2.0).unwrap() / 0.11389387274953344 - 1.0).abs() < 1e-14);
    }

    #[test]
    fn asymptotes() {
        assert!((k0_small_x(0.01) / modified_bessel_k0(0.01).unwrap() - 1.0).abs() < 0.01);
        assert!((k0_large_x(10.0) / modified_bessel_k0(10.0).unwrap() - 1.0).abs() < 0.02);
        assert!((k0_large_x(4.0) / modified_bessel_k0(4.0).unwrap() - 1.0).abs() < 0.05);
    }

    #[test]
    fn domain() {
        assert!(modified_bessel_k0(0.0).is_err());
        assert!(modified_bessel_k0(-1.0).is_err());
        assert_eq!(modified_bessel_k0(f64::INFINITY).unwrap(), 0.0);
    }

    #[test]
    fn continuous_at_branch_point() {
        let below = series(2.0);
        let above = continued_fraction(2.0);
        assert!((below / above - 1.0).abs() < 1e-14);
    }

    proptest! {
        #[test]
        fn matches_integral_representation(lx in -3.0f64..1.699) {
            let x = 10f64.powf(lx);
            let k = modified_bessel_k0(x).unwrap();
            prop_assert!((k / k0_integral(x) - 1.0).abs() < 1e-10, "x = {}", x);
        }
    }
}
