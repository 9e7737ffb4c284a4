//! Dempster-Shafer combination and conditioning rules on `P(S)`.
//!
//! Two families of updates are provided:
//!
//! * lower/upper conditioning ([`condition_bel_lower`],
//!   [`condition_pl_lower`]): the envelopes of the Bayes-updated core,
//!   computed in closed form;
//! * DS-conditioning ([`ds_condition_bel`], [`ds_condition_pl`]):
//!   combination with the categorical mass on the observed set.
//!
//! All outputs are full dense tables.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::measures::{
    belief_from_mass, mass_from_belief, mass_from_plausibility, plausibility_from_belief,
    plausibility_from_mass, BeliefFunction, MassFunction, PlausibilityFunction,
};
use crate::tolerance::{epsilon, is_positive};
use crate::{Error, Result, StateSet};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ConditioningMethod {
    /// Conditioning of the lower/upper envelopes: `Bel_B`, `Pl_B`.
    #[serde(rename = "lower")]
    LowerUpper,
    /// DS-conditioning: `Bel^B`, `Pl^B`.
    #[serde(rename = "ds")]
    Ds,
}

impl fmt::Display for ConditioningMethod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ConditioningMethod::LowerUpper => "lower",
            ConditioningMethod::Ds => "ds",
        })
    }
}

impl FromStr for ConditioningMethod {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "lower" | "lower_upper" | "lower-upper" => Ok(ConditioningMethod::LowerUpper),
            "ds" => Ok(ConditioningMethod::Ds),
            other => Err(Error::InvalidArgument(format!(
                "unknown conditioning method `{other}` (expected `lower` or `ds`)"
            ))),
        }
    }
}

/// How DS-conditioning of an independent plausibility is computed.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum DsRoute {
    /// `Pl(X∩B) / Pl(B)` directly.
    #[default]
    ClosedForm,
    /// Combine `m_pl` with the categorical mass on `B` and take the
    /// plausibility of the result.
    Mass,
}

/// Dempster's rule of combination, normalized.
pub fn ds_combine(m1: &MassFunction, m2: &MassFunction) -> Result<MassFunction> {
    if m1.universe() != m2.universe() {
        return Err(Error::UniverseMismatch);
    }
    let mut combined = vec![0.0; m1.weights().len()];
    let mut normalizer = 0.0;
    let right: Vec<_> = m2.focal_elements().collect();
    for (x1, w1) in m1.focal_elements() {
        for &(x2, w2) in &right {
            let meet = x1 & x2;
            if !meet.is_empty() {
                combined[meet.index()] += w1 * w2;
                normalizer += w1 * w2;
            }
        }
    }
    if !is_positive(normalizer) {
        return Err(Error::TotalConflict { normalizer });
    }
    combined.iter_mut().for_each(|w| *w /= normalizer);
    Ok(MassFunction::from_dense(m1.universe().clone(), combined))
}

fn gate(value: f64, what: &str) -> Result<()> {
    if is_positive(value) {
        Ok(())
    } else {
        Err(Error::Undefined {
            gate: format!("{what} > {:e}", epsilon()),
            value,
        })
    }
}

/// `Bel_B(X) = 1` if `Pl(X̄∩B) = 0`, otherwise
/// `Bel(X∩B) / (Bel(X∩B) + Pl(X̄∩B))`, with `Pl` the plausibility
/// associated with `bel`. Defined when `Pl(B) > 0`.
pub fn condition_bel_lower(bel: &BeliefFunction, given: StateSet) -> Result<BeliefFunction> {
    let pl = plausibility_from_belief(bel);
    gate(pl.value(given), "Pl(B)")?;
    let universe = bel.universe();
    let values = universe
        .full()
        .subsets()
        .map(|x| {
            let against = pl.value(universe.complement(x) & given);
            if is_positive(against) {
                let support = bel.value(x & given);
                support / (support + against)
            } else {
                1.0
            }
        })
        .collect();
    Ok(BeliefFunction::from_raw(universe.clone(), values))
}

/// `Pl_B(X) = 0` if `Pl(X∩B) = 0`, otherwise
/// `Pl(X∩B) / (Pl(X∩B) + Bel(X̄∩B))`, with `Bel(Y) = 1 − Pl(Ȳ)` the belief
/// associated with `pl`. Defined when `Pl(B) > 0`.
///
/// This is the upper envelope of the Bayes-updated core of `Bel`, and the
/// dual of [`condition_bel_lower`]: `Pl_B(X) = 1 − Bel_B(X̄)`. `pl` may be any
/// plausibility function, not only one derived from a belief function in
/// the same model.
pub fn condition_pl_lower(
    pl: &PlausibilityFunction,
    given: StateSet,
) -> Result<PlausibilityFunction> {
    gate(pl.value(given), "Pl(B)")?;
    let universe = pl.universe();
    let full = universe.full();
    let values = full
        .subsets()
        .map(|x| {
            let inside = pl.value(x & given);
            if !is_positive(inside) {
                return 0.0;
            }
            let certain_outside = 1.0 - pl.value(full.difference(universe.complement(x) & given));
            inside / (inside + certain_outside.max(0.0))
        })
        .collect();
    Ok(PlausibilityFunction::from_raw(universe.clone(), values))
}

/// `Bel^B(X) = (Bel(X∪B̄) − Bel(B̄)) / (1 − Bel(B̄))`, defined when
/// `1 − Bel(B̄) > 0`.
pub fn ds_condition_bel(bel: &BeliefFunction, given: StateSet) -> Result<BeliefFunction> {
    let universe = bel.universe();
    let outside = universe.complement(given);
    let base = bel.value(outside);
    let normalizer = 1.0 - base;
    gate(normalizer, "1 − Bel(B̄)")?;
    let values = universe
        .full()
        .subsets()
        .map(|x| ((bel.value(x | outside) - base) / normalizer).max(0.0))
        .collect();
    Ok(BeliefFunction::from_raw(universe.clone(), values))
}

/// `Bel^B` through the mass route: the belief of `m_Bel ⊕ m_B`.
pub fn ds_condition_bel_by_combination(
    bel: &BeliefFunction,
    given: StateSet,
) -> Result<BeliefFunction> {
    let pl = plausibility_from_belief(bel);
    gate(pl.value(given), "1 − Bel(B̄)")?;
    let evidence = MassFunction::categorical(bel.universe().clone(), given)?;
    belief_from_mass(&ds_combine(&mass_from_belief(bel)?, &evidence)?)
}

/// `Pl^B(X) = Pl(X∩B) / Pl(B)`, defined when `Pl(B) > 0`.
pub fn ds_condition_pl(pl: &PlausibilityFunction, given: StateSet) -> Result<PlausibilityFunction> {
    ds_condition_pl_with(pl, given, DsRoute::ClosedForm)
}

pub fn ds_condition_pl_with(
    pl: &PlausibilityFunction,
    given: StateSet,
    route: DsRoute,
) -> Result<PlausibilityFunction> {
    let normalizer = pl.value(given);
    gate(normalizer, "Pl(B)")?;
    match route {
        DsRoute::ClosedForm => {
            let universe = pl.universe();
            let values = universe
                .full()
                .subsets()
                .map(|x| pl.value(x & given) / normalizer)
                .collect();
            Ok(PlausibilityFunction::from_raw(universe.clone(), values))
        }
        DsRoute::Mass => {
            let evidence = MassFunction::categorical(pl.universe().clone(), given)?;
            plausibility_from_mass(&ds_combine(&mass_from_plausibility(pl)?, &evidence)?)
        }
    }
}
