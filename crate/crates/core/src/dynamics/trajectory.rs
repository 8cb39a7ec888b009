use super::analytic::ClosedForm;
use super::basis::XState;
use crate::concurrence::{x_state_weights, ConcurrenceBreakdown};
use crate::error::{Error, Result};

/// State and entanglement at one instant.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Sample {
    pub x: XState,
    pub weights: ConcurrenceBreakdown,
}

/// Samples on a strictly increasing grid of `gamma t` values.
#[derive(Debug, Clone, PartialEq)]
pub struct Trajectory {
    times: Vec<f64>,
    samples: Vec<Sample>,
}

impl Trajectory {
    pub(crate) fn new(times: Vec<f64>, samples: Vec<Sample>) -> Self {
        debug_assert_eq!(times.len(), samples.len());
        Self { times, samples }
    }

    /// Evaluates the closed form on the given grid.
    pub fn from_closed_form(model: &ClosedForm, times: &[f64]) -> Result<Self> {
        if times.windows(2).any(|w| w[1] <= w[0]) {
            return Err(Error::Config(
                "sample times must be strictly increasing".into(),
            ));
        }
        if times.first().is_some_and(|&t| t < 0.0) {
            return Err(Error::Config("sample times must be nonnegative".into()));
        }
        let samples = times
            .iter()
            .map(|&t| {
                let x = model.elements(t);
                Sample {
                    x,
                    weights: x_state_weights(&x),
                }
            })
            .collect();
        Ok(Self::new(times.to_vec(), samples))
    }

    /// Closed form on the uniform grid `0, dt, ..., t_end`.
    pub fn closed_form_uniform(model: &ClosedForm, t_end: f64, dt: f64) -> Result<Self> {
        Self::from_closed_form(model, &super::master::uniform_grid(t_end, dt)?)
    }

    pub fn times(&self) -> &[f64] {
        &self.times
    }

    pub fn samples(&self) -> &[Sample] {
        &self.samples
    }

    pub fn len(&self) -> usize {
        self.times.len()
    }

    pub fn is_empty(&self) -> bool {
        self.times.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (f64, &Sample)> {
        self.times.iter().copied().zip(&self.samples)
    }

    pub fn concurrence(&self) -> impl Iterator<Item = f64> + '_ {
        self.samples.iter().map(|s| s.weights.c)
    }
}
