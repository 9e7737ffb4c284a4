use std::sync::Arc;

use crate::tolerance::epsilon;
use crate::{Error, Result, StateSet, Universe};

/// Nonnegative weights on subsets of a universe, summing to one.
///
/// Stored densely over all `2^n` subsets. Sets of weight zero are not focal.
#[derive(Clone, Debug, PartialEq)]
pub struct MassFunction {
    universe: Arc<Universe>,
    weights: Vec<f64>,
}

impl MassFunction {
    /// Builds a mass function from `(set, weight)` entries. Repeated sets are
    /// rejected; weights must be finite, nonnegative and sum to 1 within ε.
    pub fn new<I>(universe: Arc<Universe>, entries: I) -> Result<Self>
    where
        I: IntoIterator<Item = (StateSet, f64)>,
    {
        let mut weights = vec![0.0; universe.dense_len()?];
        let mut seen = vec![false; weights.len()];
        for (set, w) in entries {
            if !universe.contains_set(set) {
                return Err(Error::InvalidMass(format!(
                    "focal set {set:?} is not a subset of the universe"
                )));
            }
            if !w.is_finite() || w < 0.0 {
                return Err(Error::InvalidMass(format!(
                    "weight {w} of {:?} is not a nonnegative number",
                    universe.ids(set)
                )));
            }
            if std::mem::replace(&mut seen[set.index()], true) {
                return Err(Error::InvalidMass(format!(
                    "set {:?} listed twice",
                    universe.ids(set)
                )));
            }
            weights[set.index()] = w;
        }
        let total: f64 = weights.iter().sum();
        if (total - 1.0).abs() > epsilon() {
            return Err(Error::InvalidMass(format!("weights sum to {total}, not 1")));
        }
        Ok(MassFunction { universe, weights })
    }

    /// Entries given by state ids, e.g. `(&["s1"], 0.2)`.
    pub fn from_ids<'a, I>(universe: Arc<Universe>, entries: I) -> Result<Self>
    where
        I: IntoIterator<Item = (&'a [&'a str], f64)>,
    {
        let entries = entries
            .into_iter()
            .map(|(ids, w)| Ok((universe.set_of(ids)?, w)))
            .collect::<Result<Vec<_>>>()?;
        MassFunction::new(universe, entries)
    }

    /// All mass on `set`: the evidence "exactly `set`".
    pub fn categorical(universe: Arc<Universe>, set: StateSet) -> Result<Self> {
        MassFunction::new(universe, [(set, 1.0)])
    }

    /// All mass on the whole universe: total ignorance.
    pub fn vacuous(universe: Arc<Universe>) -> Result<Self> {
        let full = universe.full();
        MassFunction::categorical(universe, full)
    }

    pub(crate) fn from_dense(universe: Arc<Universe>, weights: Vec<f64>) -> Self {
        debug_assert_eq!(weights.len(), 1 << universe.len());
        MassFunction { universe, weights }
    }

    pub fn universe(&self) -> &Arc<Universe> {
        &self.universe
    }

    pub fn weight(&self, set: StateSet) -> f64 {
        self.weights.get(set.index()).copied().unwrap_or(0.0)
    }

    /// Dense weights indexed by subset bitmask.
    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    /// Sets with positive weight, in bitmask order.
    pub fn focal_elements(&self) -> impl Iterator<Item = (StateSet, f64)> + '_ {
        self.weights
            .iter()
            .enumerate()
            .filter(|(_, w)| **w > 0.0)
            .map(|(i, w)| (StateSet::from_bits(i as u64), *w))
    }
}
