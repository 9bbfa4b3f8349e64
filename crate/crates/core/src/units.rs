//! Unit conventions.
//!
//! All core math runs with `c = 1` and the per-query time as the unit of
//! time. Distances are therefore light-time units and accelerations are in
//! units of c per time unit. SI values are only produced at the edges.

use serde::{Deserialize, Serialize};

/// Speed of light in vacuum, m/s (exact by definition).
pub const SPEED_OF_LIGHT: f64 = 299_792_458.0;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum UnitSystem {
    /// `c = 1`, `Δt = 1`.
    #[default]
    Natural,
    /// Seconds, metres, kilograms, joules.
    Si,
}

impl UnitSystem {
    pub fn c(self) -> f64 {
        match self {
            UnitSystem::Natural => 1.0,
            UnitSystem::Si => SPEED_OF_LIGHT,
        }
    }

    /// Converts a light-time distance (c = 1) into this system's length unit.
    pub fn length(self, light_time: f64) -> f64 {
        light_time * self.c()
    }

    /// Converts an acceleration in c per time unit into this system.
    pub fn acceleration(self, natural: f64) -> f64 {
        natural * self.c()
    }

    /// Rest energy `m c^2` in this system's energy unit.
    pub fn rest_energy(self, rest_mass: f64) -> f64 {
        let c = self.c();
        rest_mass * c * c
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn natural_is_identity() {
        let u = UnitSystem::Natural;
        assert_eq!(u.length(3.5), 3.5);
        assert_eq!(u.rest_energy(2.0), 2.0);
    }

    #[test]
    fn si_rest_energy_of_one_kilogram() {
        assert_eq!(UnitSystem::Si.rest_energy(1.0), 8.987_551_787_368_176e16);
    }
}
