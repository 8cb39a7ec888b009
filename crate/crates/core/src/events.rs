//! Entanglement sudden death, dark periods and revivals.
//!
//! Closed-form estimates ([`death_time_independent`],
//! [`approx_death_revival`], [`second_revival_estimate`]) sit next to an
//! exact detector ([`find_zero_crossings`]) that scans a sampled
//! concurrence curve and refines every transition on the closed-form
//! evolution. All times are `gamma t` values divided by `gamma`.

use serde::Serialize;

use crate::collective_params::{coupling_from_separation, CollectiveCoupling};
use crate::concurrence::x_state_concurrence;
use crate::dynamics::{ClosedForm, Trajectory};
use crate::error::{Error, Result};

/// Concurrence at or below this value counts as zero.
pub const DEFAULT_THRESHOLD: f64 = 1e-12;

/// Absolute time tolerance of refined crossings.
pub const REFINE_TOLERANCE: f64 = 1e-6;

/// Default horizon of event scans, in units of `1/gamma`.
pub const DEFAULT_T_MAX: f64 = 20.0;

/// Grid step used by [`death_time_scan`] before refinement.
pub const SCAN_STEP: f64 = 1e-3;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Direction {
    Death,
    Revival,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Crossing {
    pub t: f64,
    pub direction: Direction,
}

#[derive(Debug, Clone, PartialEq, Default, Serialize)]
pub struct EntanglementEvents {
    pub crossings: Vec<Crossing>,
    /// `(start, end)` of every interval with zero concurrence that follows
    /// a death. An interval still open at the end of the trajectory ends at
    /// the last sample time.
    pub dark_intervals: Vec<(f64, f64)>,
    pub death_time: Option<f64>,
    pub first_revival: Option<f64>,
    pub second_revival: Option<f64>,
}

impl EntanglementEvents {
    fn from_crossings(crossings: Vec<Crossing>, t_last: f64) -> Self {
        let mut dark_intervals = Vec::new();
        let mut open: Option<f64> = None;
        for c in &crossings {
            match c.direction {
                Direction::Death => open = Some(c.t),
                Direction::Revival => {
                    if let Some(start) = open.take() {
                        dark_intervals.push((start, c.t));
                    }
                }
            }
        }
        if let Some(start) = open {
            dark_intervals.push((start, t_last));
        }
        let mut revivals = crossings
            .iter()
            .filter(|c| c.direction == Direction::Revival)
            .map(|c| c.t);
        let first_revival = revivals.next();
        let second_revival = revivals.next();
        Self {
            death_time: crossings
                .iter()
                .find(|c| c.direction == Direction::Death)
                .map(|c| c.t),
            first_revival,
            second_revival,
            crossings,
            dark_intervals,
        }
    }
}

/// Interval and absolute tolerance for a bisection search.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RootBracket {
    lo: f64,
    hi: f64,
    tolerance: f64,
}

impl RootBracket {
    pub fn new(lo: f64, hi: f64, tolerance: f64) -> Result<Self> {
        if lo.partial_cmp(&hi) != Some(std::cmp::Ordering::Less)
            || tolerance.is_nan()
            || tolerance <= 0.0
        {
            return Err(Error::Config(format!(
                "invalid bracket [{lo}, {hi}] with tolerance {tolerance}"
            )));
        }
        Ok(Self { lo, hi, tolerance })
    }

    pub fn lo(&self) -> f64 {
        self.lo
    }

    pub fn hi(&self) -> f64 {
        self.hi
    }

    /// Bisects on a predicate that differs at the two ends, returning the
    /// midpoint of the final interval.
    pub fn bisect_predicate<F: FnMut(f64) -> bool>(&self, mut pred: F) -> Result<f64> {
        let (mut lo, mut hi) = (self.lo, self.hi);
        let at_lo = pred(lo);
        if at_lo == pred(hi) {
            return Err(Error::Resolution { lo, hi });
        }
        while hi - lo > self.tolerance {
            let mid = 0.5 * (lo + hi);
            if mid <= lo || mid >= hi {
                break;
            }
            if pred(mid) == at_lo {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        Ok(0.5 * (lo + hi))
    }

    /// Root of a continuous `f` with a sign change over the bracket.
    pub fn bisect<F: FnMut(f64) -> f64>(&self, mut f: F) -> Result<f64> {
        self.bisect_predicate(|x| f(x) > 0.0)
    }
}

/// Death time of independent atoms,
/// `ln((p + sqrt(p(1-p))) / (2p - 1)) / gamma`, which exists only for
/// `p > 1/2`.
pub fn death_time_independent(p: f64, gamma: f64) -> Option<f64> {
    if !(p > 0.5 && p <= 1.0) {
        return None;
    }
    let ratio = (p + (p * (1.0 - p)).sqrt()) / (2.0 * p - 1.0);
    Some(ratio.ln() / gamma)
}

/// Tolerance of the root searches in [`approx_death_revival`], in `gamma t`.
pub const APPROX_ROOT_TOLERANCE: f64 = 1e-9;

/// Below this margin over the maximum `1/e` of `x exp(-x)` the two roots
/// are treated as a degenerate double root.
const DOUBLE_ROOT_MARGIN: f64 = 1e-12;

/// Roots of `gamma t exp(-gamma t) = sqrt((1-p)/p)`, the death and first
/// revival times obtained when `gamma12` is close to `gamma`.
///
/// Two distinct roots exist only for `p > e^2 / (1 + e^2)`; otherwise
/// `None`.
pub fn approx_death_revival(p: f64, gamma: f64) -> Option<(f64, f64)> {
    if !(p > 0.0 && p < 1.0) || gamma.is_nan() || gamma <= 0.0 {
        return None;
    }
    let level = ((1.0 - p) / p).sqrt();
    let f = |x: f64| x * (-x).exp() - level;
    if f(1.0) <= DOUBLE_ROOT_MARGIN {
        return None;
    }
    let mut hi = 40.0;
    while f(hi) >= 0.0 {
        hi *= 2.0;
        if !hi.is_finite() {
            return None;
        }
    }
    let death = RootBracket::new(0.0, 1.0, APPROX_ROOT_TOLERANCE)
        .and_then(|b| b.bisect(f))
        .ok()?;
    let revival = RootBracket::new(1.0, hi, APPROX_ROOT_TOLERANCE)
        .and_then(|b| b.bisect(f))
        .ok()?;
    Some((death / gamma, revival / gamma))
}

/// Onset of the long-time revival carried by the antisymmetric population,
/// `ln(4 gamma / (sqrt(p) (gamma - gamma12))) / gamma12`.
pub fn second_revival_estimate(p: f64, coupling: &CollectiveCoupling) -> Result<f64> {
    if !(p > 0.0 && p <= 1.0) {
        return Err(Error::Domain {
            what: "p",
            value: p,
            reason: "second revival estimate needs 0 < p <= 1",
        });
    }
    let (g, g12) = (coupling.gamma, coupling.gamma12);
    if !(g12 > 0.0 && g12 < g) {
        return Err(Error::Domain {
            what: "gamma12",
            value: g12,
            reason: "second revival needs 0 < gamma12 < gamma",
        });
    }
    Ok((4.0 * g / (p.sqrt() * (g - g12))).ln() / g12)
}

/// Scans the sampled concurrence of `trajectory` for entry into and exit
/// from the zero region, refining each transition by bisection on `model`.
///
/// A death requires the concurrence to stay at or below `threshold` for at
/// least two consecutive samples; a revival is any exit from the zero
/// region. Crossing directions therefore alternate.
pub fn find_zero_crossings(
    trajectory: &Trajectory,
    model: &ClosedForm,
    threshold: f64,
) -> Result<EntanglementEvents> {
    if trajectory.is_empty() {
        return Err(Error::Config("trajectory is empty".into()));
    }
    if threshold.is_nan() || threshold < 0.0 {
        return Err(Error::Config(format!(
            "threshold must be nonnegative, got {threshold}"
        )));
    }
    let times = trajectory.times();
    let c: Vec<f64> = trajectory.concurrence().collect();
    let entangled_at = |t: f64| x_state_concurrence(&model.elements(t)) > threshold;

    let mut crossings = Vec::new();
    let mut entangled = c[0] > threshold;
    for i in 0..c.len() - 1 {
        let direction = if entangled {
            let sustained = c[i + 1] <= threshold && c.get(i + 2).is_some_and(|&x| x <= threshold);
            if !sustained {
                continue;
            }
            Direction::Death
        } else if c[i + 1] > threshold {
            Direction::Revival
        } else {
            continue;
        };
        let bracket = RootBracket::new(times[i], times[i + 1], REFINE_TOLERANCE)?;
        let t = bracket.bisect_predicate(entangled_at)?;
        crossings.push(Crossing { t, direction });
        entangled = direction == Direction::Revival;
    }
    Ok(EntanglementEvents::from_crossings(
        crossings,
        *times.last().expect("non-empty"),
    ))
}

/// Events of the closed-form evolution sampled every `dt` on `[0, t_max]`.
pub fn closed_form_events(model: &ClosedForm, t_max: f64, dt: f64) -> Result<EntanglementEvents> {
    let trajectory = Trajectory::closed_form_uniform(model, t_max, dt)?;
    find_zero_crossings(&trajectory, model, DEFAULT_THRESHOLD)
}

/// First death time before `t_max` for each initial weight in `p_grid`, at
/// separation `r_over_lambda`. `None` when the state is never entangled or
/// does not die within the horizon.
pub fn death_time_scan(
    r_over_lambda: f64,
    gamma: f64,
    p_grid: &[f64],
    t_max: f64,
) -> Result<Vec<(f64, Option<f64>)>> {
    let coupling = coupling_from_separation(r_over_lambda, gamma)?;
    death_time_scan_with(&coupling, p_grid, t_max)
}

/// [`death_time_scan`] for an explicit coupling.
pub fn death_time_scan_with(
    coupling: &CollectiveCoupling,
    p_grid: &[f64],
    t_max: f64,
) -> Result<Vec<(f64, Option<f64>)>> {
    let dt = SCAN_STEP / coupling.gamma;
    p_grid
        .iter()
        .map(|&p| {
            let model = ClosedForm::new(p, coupling.gamma, coupling.gamma12)?;
            if x_state_concurrence(&model.elements(0.0)) <= DEFAULT_THRESHOLD {
                return Ok((p, None));
            }
            let events = closed_form_events(&model, t_max, dt)?;
            Ok((p, events.death_time))
        })
        .collect()
}
