use std::sync::Arc;

use super::{BeliefFunction, MassFunction};
use crate::tolerance::epsilon;
use crate::{Error, Result, StateSet, Universe};

/// A probability measure given by its point masses.
#[derive(Clone, Debug, PartialEq)]
pub struct ProbabilityMeasure {
    universe: Arc<Universe>,
    point: Vec<f64>,
}

impl ProbabilityMeasure {
    pub fn new(universe: Arc<Universe>, point: Vec<f64>) -> Result<Self> {
        if point.len() != universe.len() {
            return Err(Error::InvalidMeasure(format!(
                "{} point masses for {} states",
                point.len(),
                universe.len()
            )));
        }
        if let Some((i, w)) = point
            .iter()
            .enumerate()
            .find(|(_, w)| !w.is_finite() || **w < 0.0)
        {
            return Err(Error::InvalidMeasure(format!(
                "point mass {w} of `{}` is not a nonnegative number",
                universe.states()[i]
            )));
        }
        let total: f64 = point.iter().sum();
        if (total - 1.0).abs() > epsilon() {
            return Err(Error::InvalidMeasure(format!(
                "point masses sum to {total}, not 1"
            )));
        }
        Ok(ProbabilityMeasure { universe, point })
    }

    pub fn uniform(universe: Arc<Universe>) -> Self {
        let n = universe.len();
        ProbabilityMeasure {
            universe,
            point: vec![1.0 / n as f64; n],
        }
    }

    pub(crate) fn from_raw(universe: Arc<Universe>, point: Vec<f64>) -> Self {
        debug_assert_eq!(point.len(), universe.len());
        ProbabilityMeasure { universe, point }
    }

    pub fn universe(&self) -> &Arc<Universe> {
        &self.universe
    }

    pub fn point(&self) -> &[f64] {
        &self.point
    }

    /// `μ(X) = Σ_{s ∈ X} μ({s})`.
    pub fn measure(&self, set: StateSet) -> f64 {
        set.iter().filter_map(|i| self.point.get(i)).sum()
    }

    /// The additive set function as a (Bayesian) belief function.
    pub fn to_belief(&self) -> Result<BeliefFunction> {
        let len = self.universe.dense_len()?;
        let values = (0..len as u64)
            .map(|x| self.measure(StateSet::from_bits(x)))
            .collect();
        Ok(BeliefFunction::from_raw(self.universe.clone(), values))
    }

    /// Mass concentrated on singletons.
    pub fn to_mass(&self) -> Result<MassFunction> {
        let mut weights = vec![0.0; self.universe.dense_len()?];
        for (i, w) in self.point.iter().enumerate() {
            weights[StateSet::singleton(i).index()] = *w;
        }
        Ok(MassFunction::from_dense(self.universe.clone(), weights))
    }
}
