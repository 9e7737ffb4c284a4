use std::sync::Arc;

use super::transform::{subset_mobius, subset_zeta};
use super::MassFunction;
use crate::tolerance::epsilon;
use crate::{Error, Result, StateSet, Universe};

/// A belief function on the powerset of a universe, as a dense table.
#[derive(Clone, Debug, PartialEq)]
pub struct BeliefFunction {
    universe: Arc<Universe>,
    values: Vec<f64>,
}

/// A plausibility function on the powerset of a universe, as a dense table.
#[derive(Clone, Debug, PartialEq)]
pub struct PlausibilityFunction {
    universe: Arc<Universe>,
    values: Vec<f64>,
}

fn check_table(universe: &Universe, values: &[f64]) -> Result<()> {
    let len = universe.dense_len()?;
    if values.len() != len {
        return Err(Error::InvalidSetFunction(format!(
            "table has {} entries, expected {len}",
            values.len()
        )));
    }
    if let Some(v) = values.iter().find(|v| !v.is_finite()) {
        return Err(Error::InvalidSetFunction(format!("non-finite value {v}")));
    }
    Ok(())
}

/// Möbius coefficients of a belief table, with values in `(−ε, 0)` clamped to
/// zero and the result renormalized.
fn mobius_nonnegative(values: &[f64]) -> Result<Vec<f64>> {
    let eps = epsilon();
    let mut mass = values.to_vec();
    subset_mobius(&mut mass);
    for (i, w) in mass.iter_mut().enumerate() {
        if *w < -eps {
            return Err(Error::NotBelief {
                witness: StateSet::from_bits(i as u64),
                value: *w,
            });
        }
        if *w < 0.0 {
            *w = 0.0;
        }
    }
    let total: f64 = mass.iter().sum();
    if total > 0.0 && total != 1.0 {
        mass.iter_mut().for_each(|w| *w /= total);
    }
    Ok(mass)
}

impl BeliefFunction {
    /// Validates a dense table: `bel(∅) = 0`, `bel(S) = 1` and a
    /// nonnegative Möbius transform, which on a finite powerset is equivalent
    /// to monotonicity plus total monotonicity.
    pub fn from_table(universe: Arc<Universe>, values: Vec<f64>) -> Result<Self> {
        check_table(&universe, &values)?;
        let eps = epsilon();
        if values[0].abs() > eps {
            return Err(Error::InvalidSetFunction(format!(
                "bel(∅) = {}, expected 0",
                values[0]
            )));
        }
        let top = values[universe.full().index()];
        if (top - 1.0).abs() > eps {
            return Err(Error::InvalidSetFunction(format!(
                "bel(S) = {top}, expected 1"
            )));
        }
        mobius_nonnegative(&values)?;
        Ok(BeliefFunction { universe, values })
    }

    pub(crate) fn from_raw(universe: Arc<Universe>, values: Vec<f64>) -> Self {
        debug_assert_eq!(values.len(), 1 << universe.len());
        BeliefFunction { universe, values }
    }

    pub fn universe(&self) -> &Arc<Universe> {
        &self.universe
    }

    pub fn value(&self, set: StateSet) -> f64 {
        self.values[set.index()]
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }
}

impl PlausibilityFunction {
    /// Validates a dense table by checking that its dual `1 − pl(X̄)` is a
    /// belief function.
    pub fn from_table(universe: Arc<Universe>, values: Vec<f64>) -> Result<Self> {
        check_table(&universe, &values)?;
        let pl = PlausibilityFunction { universe, values };
        BeliefFunction::from_table(pl.universe.clone(), dual(&pl.universe, &pl.values))?;
        Ok(pl)
    }

    pub(crate) fn from_raw(universe: Arc<Universe>, values: Vec<f64>) -> Self {
        debug_assert_eq!(values.len(), 1 << universe.len());
        PlausibilityFunction { universe, values }
    }

    pub fn universe(&self) -> &Arc<Universe> {
        &self.universe
    }

    pub fn value(&self, set: StateSet) -> f64 {
        self.values[set.index()]
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }
}

/// `X ↦ 1 − f(X̄)`.
fn dual(universe: &Universe, values: &[f64]) -> Vec<f64> {
    let full = universe.full().index();
    (0..values.len()).map(|x| 1.0 - values[full ^ x]).collect()
}

/// `bel_m(X) = Σ_{Y ⊆ X} m(Y)`. Requires `m(∅) = 0`.
pub fn belief_from_mass(mass: &MassFunction) -> Result<BeliefFunction> {
    let empty = mass.weight(StateSet::EMPTY);
    if empty > epsilon() {
        return Err(Error::InvalidMass(format!(
            "m(∅) = {empty}; a belief function needs m(∅) = 0"
        )));
    }
    let mut values = mass.weights().to_vec();
    values[0] = 0.0;
    subset_zeta(&mut values);
    Ok(BeliefFunction::from_raw(mass.universe().clone(), values))
}

/// Möbius inversion `m(X) = Σ_{Y ⊆ X} (−1)^{|X∖Y|} bel(Y)`.
///
/// Coefficients below −ε are reported with the offending set; smaller
/// negative rounding noise is clamped to zero.
pub fn mass_from_belief(bel: &BeliefFunction) -> Result<MassFunction> {
    let weights = mobius_nonnegative(bel.values())?;
    Ok(MassFunction::from_dense(bel.universe().clone(), weights))
}

/// `pl(X) = 1 − bel(X̄)`.
pub fn plausibility_from_belief(bel: &BeliefFunction) -> PlausibilityFunction {
    PlausibilityFunction::from_raw(bel.universe().clone(), dual(bel.universe(), bel.values()))
}

/// `bel_pl(X) = 1 − pl(X̄)`.
pub fn belief_from_plausibility(pl: &PlausibilityFunction) -> BeliefFunction {
    BeliefFunction::from_raw(pl.universe().clone(), dual(pl.universe(), pl.values()))
}

/// The mass of `bel_pl`, so that `pl(X) = 1 − Σ_{Y ⊆ X̄} m_pl(Y)`.
pub fn mass_from_plausibility(pl: &PlausibilityFunction) -> Result<MassFunction> {
    mass_from_belief(&belief_from_plausibility(pl))
}

/// `pl_m(X) = Σ_{Y ∩ X ≠ ∅} m(Y)`.
pub fn plausibility_from_mass(mass: &MassFunction) -> Result<PlausibilityFunction> {
    belief_from_mass(mass).map(|bel| plausibility_from_belief(&bel))
}
