//! Velocity, Lorentz factor, rapidity and Bondi k-factor for collinear motion.
//!
//! Velocities are fractions of `c`. A [`Beta`] keeps both `β` and its
//! complement `1 - β`; the complement is what carries the information once
//! `β` rounds to within an ulp of one, which the planners hit routinely for
//! large workloads (`γ = 1e8` needs `1 - β = 5e-17`).

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// Smallest complement `1 - β` still treated as finite.
const MIN_GAP: f64 = f64::MIN_POSITIVE;

/// Speed as a fraction of `c`, `0 <= β < 1`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Beta {
    value: f64,
    gap: f64,
}

impl Beta {
    pub const ZERO: Beta = Beta {
        value: 0.0,
        gap: 1.0,
    };

    pub fn new(value: f64) -> Result<Self> {
        if !(0.0..1.0).contains(&value) {
            return Err(Error::Velocity(value));
        }
        Self::from_parts(value, 1.0 - value)
    }

    /// Builds a velocity from its complement `1 - β`.
    pub fn from_gap(gap: f64) -> Result<Self> {
        if gap.is_nan() || gap > 1.0 {
            return Err(Error::Velocity(1.0 - gap));
        }
        Self::from_parts(1.0 - gap, gap)
    }

    /// `β = tanh(φ)` for a non-negative rapidity.
    pub fn from_rapidity(rapidity: f64) -> Result<Self> {
        if !(rapidity >= 0.0) {
            return Err(Error::Velocity(rapidity.tanh()));
        }
        // 1 - tanh φ = 2 e^{-2φ} / (1 + e^{-2φ})
        let decay = (-2.0 * rapidity).exp();
        Self::from_parts(rapidity.tanh(), 2.0 * decay / (1.0 + decay))
    }

    /// Velocity whose Lorentz factor is `exp(ln_gamma)`.
    pub fn from_ln_gamma(ln_gamma: f64) -> Result<Self> {
        if !(ln_gamma >= 0.0) {
            return Err(Error::Velocity(f64::NAN));
        }
        // q = 1/γ² = 1 - β²
        let q = (-2.0 * ln_gamma).exp();
        let root = (-(-2.0 * ln_gamma).exp_m1()).sqrt();
        let gap = q / (1.0 + root);
        let value = if gap < 0.25 { 1.0 - gap } else { root };
        Self::from_parts(value, gap)
    }

    pub(crate) fn from_parts(value: f64, gap: f64) -> Result<Self> {
        if gap < MIN_GAP {
            return Err(Error::Saturated);
        }
        Ok(Beta { value, gap })
    }

    /// `β`; may round to `1.0` when the complement is below half an ulp.
    pub fn value(self) -> f64 {
        self.value
    }

    /// `1 - β`, accurate to full relative precision.
    pub fn gap(self) -> f64 {
        self.gap
    }

    /// `1 - β²`, evaluated as `(1 - β)(1 + β)`.
    pub fn one_minus_beta_sq(self) -> f64 {
        self.gap * (2.0 - self.gap)
    }
}

impl Serialize for Beta {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_f64(self.value)
    }
}

/// Mutually consistent `(β, γ, φ, k)` for one relative velocity.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct KinematicState {
    pub beta: Beta,
    pub gamma: f64,
    pub rapidity: f64,
    pub k: f64,
}

pub fn kinematic_state(beta: Beta) -> KinematicState {
    let gap = beta.gap();
    let rapidity = if beta.value() < 0.5 {
        beta.value().atanh()
    } else {
        0.5 * ((2.0 - gap) / gap).ln()
    };
    KinematicState {
        beta,
        gamma: gamma_of_beta(beta),
        rapidity,
        k: ((2.0 - gap) / gap).sqrt(),
    }
}

/// Lorentz factor `1/√((1-β)(1+β))`.
pub fn gamma_of_beta(beta: Beta) -> f64 {
    1.0 / beta.one_minus_beta_sq().sqrt()
}

/// Inverts the Bondi relation `k = √((1+β)/(1-β))`.
pub fn beta_of_k(k: f64) -> Result<Beta> {
    if !(k >= 1.0) || k.is_infinite() {
        return Err(Error::KFactor(k));
    }
    let k2p1 = k * k + 1.0;
    Beta::from_parts((k - 1.0) * (k + 1.0) / k2p1, 2.0 / k2p1)
}
