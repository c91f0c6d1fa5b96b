//! Direction of the fluctuating environment field.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Coupling geometry relative to the control field.
///
/// `InPlaneZ` is the "transverse" coupling of the Landau–Zener scenario
/// (`n = ẑ`, in the plane swept by the field).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum CouplingMode {
    PerpY,
    #[serde(rename = "inplane-z")]
    InPlaneZ,
    Longitudinal,
}

impl CouplingMode {
    pub const ALL: [CouplingMode; 3] =
        [CouplingMode::PerpY, CouplingMode::InPlaneZ, CouplingMode::Longitudinal];

    pub fn name(self) -> &'static str {
        match self {
            CouplingMode::PerpY => "perp-y",
            CouplingMode::InPlaneZ => "inplane-z",
            CouplingMode::Longitudinal => "longitudinal",
        }
    }
}

impl std::str::FromStr for CouplingMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "perp-y" | "perp_y" => Ok(CouplingMode::PerpY),
            "inplane-z" | "inplane_z" | "transverse" => Ok(CouplingMode::InPlaneZ),
            "longitudinal" => Ok(CouplingMode::Longitudinal),
            other => Err(Error::Config(format!(
                "unknown coupling '{other}' (expected perp-y, inplane-z or longitudinal)"
            ))),
        }
    }
}

/// Coupling operator `n·σ`.
///
/// For `Longitudinal` the direction follows the control field and `n` only
/// records its value at `t = 0`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CouplingSpec {
    pub mode: CouplingMode,
    pub n: [f64; 3],
}

impl CouplingSpec {
    /// Canonical lab direction for each mode: `ŷ`, `ẑ`, and `ẑ` (field at `t = 0`).
    pub fn new(mode: CouplingMode) -> Self {
        let n = match mode {
            CouplingMode::PerpY => [0.0, 1.0, 0.0],
            CouplingMode::InPlaneZ | CouplingMode::Longitudinal => [0.0, 0.0, 1.0],
        };
        CouplingSpec { mode, n }
    }

    /// Arbitrary fixed direction, used with [`crate::rates::static_rates`].
    pub fn with_direction(mode: CouplingMode, n: [f64; 3]) -> Result<Self> {
        let norm = (n[0] * n[0] + n[1] * n[1] + n[2] * n[2]).sqrt();
        if (norm - 1.0).abs() > 1e-12 {
            return Err(Error::Validation(format!("coupling direction has length {norm}")));
        }
        Ok(CouplingSpec { mode, n })
    }
}
