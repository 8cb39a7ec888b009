//! Distance-dependent collective rates of two identical dipoles.
//!
//! Both dipoles are parallel and polarized perpendicular to the interatomic
//! axis. Rates are expressed relative to the single-atom decay rate `gamma`;
//! all times elsewhere in the crate are measured in units of `1/gamma`.

use std::f64::consts::PI;

use serde::Serialize;

use crate::error::{Error, Result};

/// Below this value of `k r` the collective damping is evaluated from its
/// Taylor expansion; the direct form loses digits to cancellation between
/// the `1/kr^2` and `1/kr^3` terms.
pub const SERIES_THRESHOLD: f64 = 0.05;

/// Interatomic distance in units of the transition wavelength.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Separation {
    r_over_lambda: f64,
    kr: f64,
}

impl Separation {
    pub fn new(r_over_lambda: f64) -> Result<Self> {
        if !r_over_lambda.is_finite() || r_over_lambda <= 0.0 {
            return Err(Error::Domain {
                what: "r/lambda",
                value: r_over_lambda,
                reason: "separation must be positive and finite",
            });
        }
        Ok(Self {
            r_over_lambda,
            kr: 2.0 * PI * r_over_lambda,
        })
    }

    pub fn r_over_lambda(&self) -> f64 {
        self.r_over_lambda
    }

    /// `k r = 2 pi r / lambda`.
    pub fn kr(&self) -> f64 {
        self.kr
    }
}

fn check_kr(kr: f64) -> Result<()> {
    if !kr.is_finite() || kr <= 0.0 {
        return Err(Error::Domain {
            what: "kr",
            value: kr,
            reason: "must be positive and finite",
        });
    }
    Ok(())
}

/// Collective damping `gamma12 / gamma` at dimensionless distance `kr`.
pub fn collective_damping(kr: f64) -> Result<f64> {
    check_kr(kr)?;
    if kr < SERIES_THRESHOLD {
        let x2 = kr * kr;
        return Ok(1.0 - x2 / 5.0 + 3.0 * x2 * x2 / 280.0);
    }
    let (s, c) = kr.sin_cos();
    Ok(1.5 * (s / kr + c / (kr * kr) - s / (kr * kr * kr)))
}

/// Dipole-dipole shift `Omega12 / gamma` at dimensionless distance `kr`.
///
/// Diverges like `(3/4) / kr^3` at short distance; no regularization is
/// applied.
pub fn dipole_dipole_shift(kr: f64) -> Result<f64> {
    check_kr(kr)?;
    let (s, c) = kr.sin_cos();
    Ok(0.75 * (-c / kr + s / (kr * kr) + c / (kr * kr * kr)))
}

/// The rate triple `(gamma, gamma12, Omega12)`.
///
/// `separation` is `None` for independent atoms, where both collective
/// rates vanish.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct CollectiveCoupling {
    pub gamma: f64,
    pub gamma12: f64,
    pub omega12: f64,
    pub separation: Option<Separation>,
}

fn check_gamma(gamma: f64) -> Result<()> {
    if !gamma.is_finite() || gamma <= 0.0 {
        return Err(Error::Domain {
            what: "gamma",
            value: gamma,
            reason: "decay rate must be positive and finite",
        });
    }
    Ok(())
}

impl CollectiveCoupling {
    /// Atoms that radiate into the vacuum without any mutual coupling.
    pub fn independent(gamma: f64) -> Result<Self> {
        check_gamma(gamma)?;
        Ok(Self {
            gamma,
            gamma12: 0.0,
            omega12: 0.0,
            separation: None,
        })
    }

    /// Explicit rates, e.g. to switch off `Omega12` while keeping `gamma12`.
    pub fn with_rates(gamma: f64, gamma12: f64, omega12: f64) -> Result<Self> {
        check_gamma(gamma)?;
        if !gamma12.is_finite() || gamma12.abs() >= gamma {
            return Err(Error::Domain {
                what: "gamma12",
                value: gamma12,
                reason: "collective damping must satisfy |gamma12| < gamma",
            });
        }
        if !omega12.is_finite() {
            return Err(Error::Domain {
                what: "omega12",
                value: omega12,
                reason: "must be finite",
            });
        }
        Ok(Self {
            gamma,
            gamma12,
            omega12,
            separation: None,
        })
    }
}

/// Builds the coupling for atoms `r_over_lambda` wavelengths apart.
pub fn coupling_from_separation(r_over_lambda: f64, gamma: f64) -> Result<CollectiveCoupling> {
    let separation = Separation::new(r_over_lambda)?;
    check_gamma(gamma)?;
    let kr = separation.kr();
    Ok(CollectiveCoupling {
        gamma,
        gamma12: gamma * collective_damping(kr)?,
        omega12: gamma * dipole_dipole_shift(kr)?,
        separation: Some(separation),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    // Reference values from a 30-digit evaluation of the closed forms.
    const GAMMA12_LAMBDA_20: f64 = 0.980_364_904_101_543_4;
    const OMEGA12_LAMBDA_20: f64 = 23.082_541_374_162;
    const GAMMA12_LAMBDA: f64 = 0.037_995_443_865_876_66;
    const OMEGA12_LAMBDA: f64 = -0.116_342_625_965_809_05;

    #[test]
    fn lambda_over_twenty() {
        let kr = 2.0 * PI / 20.0;
        assert!((collective_damping(kr).unwrap() - GAMMA12_LAMBDA_20).abs() < 1e-12);
        assert!((dipole_dipole_shift(kr).unwrap() - OMEGA12_LAMBDA_20).abs() < 1e-10);
        assert!((collective_damping(kr).unwrap() - 0.9804).abs() < 5e-4);
        assert!((dipole_dipole_shift(kr).unwrap() - 23.08).abs() < 1e-2);
    }

    #[test]
    fn one_wavelength_matches_exact_trig() {
        let kr = 2.0 * PI;
        let g = collective_damping(kr).unwrap();
        assert!((g - 3.0 / (8.0 * PI * PI)).abs() < 1e-15);
        assert!((g - GAMMA12_LAMBDA).abs() < 1e-15);
        let o = dipole_dipole_shift(kr).unwrap();
        let exact = 0.75 * (-1.0 / (2.0 * PI) + 1.0 / (8.0 * PI.powi(3)));
        assert!((o - exact).abs() < 1e-15);
        assert!((o - OMEGA12_LAMBDA).abs() < 1e-15);
    }

    #[test]
    fn short_distance_limits() {
        for kr in [1e-3, 1e-4] {
            assert!((collective_damping(kr).unwrap() - 1.0).abs() < 1e-5);
            let scaled = kr.powi(3) * dipole_dipole_shift(kr).unwrap();
            assert!((scaled - 0.75).abs() < 1e-5);
        }
        assert_eq!(collective_damping(1e-300).unwrap(), 1.0);
    }

    #[test]
    fn series_is_continuous_at_threshold() {
        let below = collective_damping(SERIES_THRESHOLD * (1.0 - 1e-12)).unwrap();
        let above = collective_damping(SERIES_THRESHOLD).unwrap();
        assert!((below - above).abs() < 1e-10);
        // 0.999500066960152263 at kr = 0.05
        assert!((above - 0.999_500_066_960_152_3).abs() < 1e-11);
    }

    #[test]
    fn far_field_vanishes() {
        assert!(dipole_dipole_shift(1e6).unwrap().abs() < 1e-6);
        assert!(collective_damping(1e6).unwrap().abs() < 1e-6);
    }

    #[test]
    fn rejects_bad_distances() {
        for kr in [0.0, -1.0, f64::NAN, f64::INFINITY] {
            assert!(collective_damping(kr).is_err());
            assert!(dipole_dipole_shift(kr).is_err());
        }
        assert!(coupling_from_separation(0.0, 1.0).is_err());
        assert!(coupling_from_separation(0.05, 0.0).is_err());
    }

    #[test]
    fn coupling_scales_with_gamma() {
        let one = coupling_from_separation(0.05, 1.0).unwrap();
        let two = coupling_from_separation(0.05, 2.0).unwrap();
        assert_eq!(two.gamma12, 2.0 * one.gamma12);
        assert_eq!(two.omega12, 2.0 * one.omega12);
        let sep = one.separation.unwrap();
        assert_eq!(sep.kr(), 2.0 * PI * 0.05);
    }

    #[test]
    fn explicit_rates_are_validated() {
        assert!(CollectiveCoupling::with_rates(1.0, 1.0, 0.0).is_err());
        assert!(CollectiveCoupling::with_rates(1.0, -1.2, 0.0).is_err());
        assert!(CollectiveCoupling::with_rates(1.0, 0.98, 23.0).is_ok());
    }
}
