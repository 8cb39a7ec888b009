use num_complex::Complex64;

use super::basis::XState;
use crate::error::{Error, Result};

/// Weight `p` of the initial superposition `sqrt(p)|e> + sqrt(1-p)|g>`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct InitialState {
    p: f64,
}

impl InitialState {
    pub fn new(p: f64) -> Result<Self> {
        if !(0.0..=1.0).contains(&p) {
            return Err(Error::Domain {
                what: "p",
                value: p,
                reason: "probability must lie in [0, 1]",
            });
        }
        Ok(Self { p })
    }

    pub fn p(&self) -> f64 {
        self.p
    }

    pub fn xstate(&self) -> XState {
        let p = self.p;
        XState {
            rho_ee: p,
            rho_gg: 1.0 - p,
            rho_ss: 0.0,
            rho_aa: 0.0,
            rho_eg: Complex64::new((p * (1.0 - p)).sqrt(), 0.0),
        }
    }
}

pub fn initial_state_matrix(p: f64) -> Result<XState> {
    Ok(InitialState::new(p)?.xstate())
}

/// Closed-form evolution of the X elements for a fixed initial weight and
/// decay rates. Validated once; evaluation is infallible.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ClosedForm {
    initial: InitialState,
    gamma: f64,
    gamma12: f64,
}

impl ClosedForm {
    pub fn new(p: f64, gamma: f64, gamma12: f64) -> Result<Self> {
        let initial = InitialState::new(p)?;
        if !gamma.is_finite() || gamma <= 0.0 {
            return Err(Error::Domain {
                what: "gamma",
                value: gamma,
                reason: "decay rate must be positive and finite",
            });
        }
        if !gamma12.is_finite() || gamma12.abs() >= gamma {
            return Err(Error::Domain {
                what: "gamma12",
                value: gamma12,
                reason: "collective damping must satisfy |gamma12| < gamma",
            });
        }
        Ok(Self {
            initial,
            gamma,
            gamma12,
        })
    }

    pub fn p(&self) -> f64 {
        self.initial.p()
    }

    pub fn gamma(&self) -> f64 {
        self.gamma
    }

    pub fn gamma12(&self) -> f64 {
        self.gamma12
    }

    /// X elements at time `t` (`t >= 0`).
    ///
    /// The symmetric and antisymmetric populations are written with
    /// `exp_m1` so that `gamma12 -> gamma` needs no special case.
    pub fn elements(&self, t: f64) -> XState {
        let p = self.initial.p();
        let (g, g12) = (self.gamma, self.gamma12);
        let slow = g - g12;
        let fast = g + g12;
        let decay2 = (-2.0 * g * t).exp();

        let rho_ee = p * decay2;
        let rho_ss = p * decay2 * fast * exp_m1_over(slow, t);
        let rho_aa = p * decay2 * slow * exp_m1_over(fast, t);
        let rho_eg = (p * (1.0 - p)).sqrt() * (-g * t).exp();
        XState {
            rho_ee,
            rho_gg: 1.0 - rho_ee - rho_ss - rho_aa,
            rho_ss,
            rho_aa,
            rho_eg: Complex64::new(rho_eg, 0.0),
        }
    }
}

/// `(exp(rate t) - 1) / rate`, equal to `t` at `rate = 0`.
fn exp_m1_over(rate: f64, t: f64) -> f64 {
    if rate == 0.0 {
        t
    } else {
        (rate * t).exp_m1() / rate
    }
}

pub fn analytic_elements(p: f64, gamma: f64, gamma12: f64, t: f64) -> Result<XState> {
    if !t.is_finite() || t < 0.0 {
        return Err(Error::Domain {
            what: "t",
            value: t,
            reason: "time must be finite and nonnegative",
        });
    }
    Ok(ClosedForm::new(p, gamma, gamma12)?.elements(t))
}
