//! Ohmic environment: spectral density and thermal occupation.

use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// High-energy cutoff of the Ohmic spectral density.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Cutoff {
    Finite(f64),
    Infinite,
}

impl Cutoff {
    /// `exp(-eps/E_c)`, or 1 without a cutoff.
    pub fn factor(self, eps: f64) -> f64 {
        match self {
            Cutoff::Finite(ec) => (-eps / ec).exp(),
            Cutoff::Infinite => 1.0,
        }
    }

    pub fn value(self) -> Option<f64> {
        match self {
            Cutoff::Finite(ec) => Some(ec),
            Cutoff::Infinite => None,
        }
    }
}

/// Ohmic bath: coupling `alpha`, cutoff, temperature and low-frequency weight `j0`.
///
/// Energies are in units of the qubit gap Δ.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct BathSpec {
    pub alpha: f64,
    pub cutoff: Cutoff,
    pub temperature: f64,
    pub j0: f64,
}

impl BathSpec {
    pub fn new(alpha: f64, cutoff: Cutoff, temperature: f64) -> Result<Self> {
        let bath = BathSpec { alpha, cutoff, temperature, j0: 0.0 };
        bath.validate()?;
        Ok(bath)
    }

    pub fn with_j0(mut self, j0: f64) -> Result<Self> {
        self.j0 = j0;
        self.validate()?;
        Ok(self)
    }

    /// A bath with no coupling at all.
    pub fn decoupled() -> Self {
        BathSpec { alpha: 0.0, cutoff: Cutoff::Infinite, temperature: 0.0, j0: 0.0 }
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |what: &str| Err(Error::Validation(what.to_string()));
        if !(self.alpha >= 0.0 && self.alpha.is_finite()) {
            return bad("alpha must be finite and >= 0");
        }
        if let Cutoff::Finite(ec) = self.cutoff {
            if !(ec > 0.0 && ec.is_finite()) {
                return bad("finite cutoff must be > 0 (use Cutoff::Infinite for no cutoff)");
            }
        }
        if !(self.temperature >= 0.0 && self.temperature.is_finite()) {
            return bad("temperature must be finite and >= 0");
        }
        if !(self.j0 >= 0.0 && self.j0.is_finite()) {
            return bad("j0 must be finite and >= 0");
        }
        Ok(())
    }
}

/// Bose occupation `1/(exp(eps/T) - 1)`; exactly 0 at `T = 0`.
pub fn planck_occupation(eps: f64, temperature: f64) -> Result<f64> {
    if temperature == 0.0 {
        return Ok(0.0);
    }
    if !(eps > 0.0) {
        return Err(Error::Domain(format!(
            "occupation diverges for eps = {eps} at T = {temperature}"
        )));
    }
    Ok(1.0 / (eps / temperature).exp_m1())
}

/// `J(eps) = 2π α eps exp(-eps/E_c)`.
pub fn ohmic_spectral_density(eps: f64, bath: &BathSpec) -> Result<f64> {
    if !(eps >= 0.0) {
        return Err(Error::Domain(format!("spectral density needs eps >= 0, got {eps}")));
    }
    Ok(2.0 * PI * bath.alpha * eps * bath.cutoff.factor(eps))
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;
    use proptest::prelude::*;

    fn bath(alpha: f64, ec: f64, t: f64) -> BathSpec {
        BathSpec::new(alpha, Cutoff::Finite(ec), t).unwrap()
    }

    #[test]
    fn occupation_examples() {
        assert_eq!(planck_occupation(1.0, 0.0).unwrap(), 0.0);
        assert_relative_eq!(planck_occupation(1.0, 1.0).unwrap(), 0.58198, max_relative = 1e-5);
        assert_relative_eq!(planck_occupation(10.0, 1.0).unwrap(), 4.54e-5, max_relative = 1e-3);
        assert!(planck_occupation(0.0, 1.0).is_err());
        assert!(planck_occupation(-1.0, 0.5).is_err());
    }

    #[test]
    fn spectral_density_examples() {
        assert_eq!(ohmic_spectral_density(0.0, &bath(0.05, 10.0, 0.0)).unwrap(), 0.0);
        assert_relative_eq!(
            ohmic_spectral_density(1.0, &bath(0.05, 10.0, 0.0)).unwrap(),
            0.28427,
            max_relative = 1e-4
        );
        assert_eq!(ohmic_spectral_density(3.0, &bath(0.0, 10.0, 0.0)).unwrap(), 0.0);
        let open = BathSpec::new(0.05, Cutoff::Infinite, 0.0).unwrap();
        assert_relative_eq!(ohmic_spectral_density(2.0, &open).unwrap(), 0.1 * PI * 2.0);
        assert!(ohmic_spectral_density(-1.0, &open).is_err());
    }

    #[test]
    fn bath_validation() {
        assert!(BathSpec::new(-0.1, Cutoff::Infinite, 0.0).is_err());
        assert!(BathSpec::new(0.1, Cutoff::Finite(0.0), 0.0).is_err());
        assert!(BathSpec::new(0.1, Cutoff::Finite(5.0), -1.0).is_err());
        assert!(BathSpec::new(0.1, Cutoff::Infinite, 0.0).unwrap().with_j0(-1.0).is_err());
    }

    proptest! {
        #[test]
        fn density_peaks_at_cutoff(ec in 0.5f64..50.0, x in 0.01f64..10.0) {
            let b = bath(0.1, ec, 0.0);
            let peak = ohmic_spectral_density(ec, &b).unwrap();
            prop_assert!(ohmic_spectral_density(ec * x, &b).unwrap() <= peak * (1.0 + 1e-14));
        }

        #[test]
        fn occupation_ratio_is_boltzmann(eps in 1e-3f64..30.0, t in 0.05f64..10.0) {
            let n = planck_occupation(eps, t).unwrap();
            let ratio = n / (n + 1.0);
            prop_assert!((ratio / (-eps / t).exp() - 1.0).abs() < 1e-12);
        }
    }

    #[test]
    fn density_vanishes_far_above_cutoff() {
        let b = bath(0.1, 2.0, 0.0);
        assert!(ohmic_spectral_density(200.0, &b).unwrap() < 1e-30);
    }
}
