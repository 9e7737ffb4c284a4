//! JSON schemas for mass functions and models (`"format": 1`).
//!
//! Mass file:
//!
//! ```json
//! {"format": 1, "states": ["s1", "s2"], "mass": [{"set": ["s1"], "w": 0.2}, {"set": ["s1", "s2"], "w": 0.8}]}
//! ```
//!
//! Model file:
//!
//! ```json
//! {"format": 1, "states": ["s1", "s2", "s3"],
//!  "vplus": {"p": ["s1", "s2"]}, "vminus": {"p": ["s2", "s3"]},
//!  "mass": [...], "pl_mass": [...], "mu": {"s1": 0.5, "s2": 0.5}}
//! ```
//!
//! `mass`, `mu` and the independent plausibility are optional. The
//! plausibility is given either as `pl_mass`, the mass of its associated
//! belief `1 − Pl(X̄)`, or as `pl_table`, a dense list of
//! `{"set": [...], "v": ...}` entries covering every subset. A model file is
//! also a valid mass file: unknown fields are ignored.

use std::collections::BTreeMap;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::measures::{
    belief_from_mass, mass_from_belief, mass_from_plausibility, plausibility_from_belief,
    BeliefFunction, MassFunction, PlausibilityFunction, ProbabilityMeasure,
};
use crate::models::{DSModel, DSplModel, ProbabilisticBDModel};
use crate::{BDModel, Error, Result, StateSet, Universe};

pub const FORMAT_VERSION: u32 = 1;

/// Weights at or below this magnitude are dropped when a computed mass is
/// written out; they are rounding residue of the Möbius transform.
const WRITE_NOISE: f64 = 1e-15;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct MassEntry {
    pub set: Vec<String>,
    pub w: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TableEntry {
    pub set: Vec<String>,
    pub v: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct MassFile {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub format: Option<u32>,
    pub states: Vec<String>,
    pub mass: Vec<MassEntry>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ModelFile {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub format: Option<u32>,
    pub states: Vec<String>,
    #[serde(default)]
    pub vplus: BTreeMap<String, Vec<String>>,
    #[serde(default)]
    pub vminus: BTreeMap<String, Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub mass: Option<Vec<MassEntry>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub pl_mass: Option<Vec<MassEntry>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub pl_table: Option<Vec<TableEntry>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub mu: Option<BTreeMap<String, f64>>,
}

fn check_format(format: Option<u32>) -> Result<()> {
    match format {
        None | Some(FORMAT_VERSION) => Ok(()),
        Some(other) => Err(Error::Json(format!(
            "unsupported format {other} (this build reads format {FORMAT_VERSION})"
        ))),
    }
}

fn mass_from_entries(universe: &Arc<Universe>, entries: &[MassEntry]) -> Result<MassFunction> {
    let entries = entries
        .iter()
        .map(|e| Ok((universe.set_of(&e.set)?, e.w)))
        .collect::<Result<Vec<_>>>()?;
    MassFunction::new(universe.clone(), entries)
}

fn entries_from_mass(mass: &MassFunction) -> Vec<MassEntry> {
    mass.focal_elements()
        .filter(|(_, w)| *w > WRITE_NOISE)
        .map(|(set, w)| MassEntry {
            set: ids(mass.universe(), set),
            w,
        })
        .collect()
}

fn ids(universe: &Universe, set: StateSet) -> Vec<String> {
    universe.ids(set).into_iter().map(str::to_string).collect()
}

impl MassFile {
    pub fn from_mass(mass: &MassFunction) -> Self {
        MassFile {
            format: Some(FORMAT_VERSION),
            states: mass.universe().states().to_vec(),
            mass: entries_from_mass(mass),
        }
    }

    pub fn to_mass(&self) -> Result<MassFunction> {
        check_format(self.format)?;
        let universe = Universe::new(self.states.iter().cloned())?;
        mass_from_entries(&universe, &self.mass)
    }
}

/// The contents of a model file after validation.
#[derive(Clone, Debug, PartialEq)]
pub struct LoadedModel {
    pub bd: BDModel,
    pub bel: Option<BeliefFunction>,
    /// Independent plausibility, if the file supplies one.
    pub pl: Option<PlausibilityFunction>,
    pub mu: Option<ProbabilityMeasure>,
}

impl LoadedModel {
    pub fn universe(&self) -> &Arc<Universe> {
        self.bd.universe()
    }

    pub fn ds(&self) -> Result<DSModel> {
        let bel = self
            .bel
            .clone()
            .ok_or_else(|| Error::InvalidModel("the model has no `mass`".into()))?;
        DSModel::new(self.bd.clone(), bel)
    }

    /// The DS_pl model: the independent plausibility if present, otherwise
    /// the one associated with the belief function.
    pub fn dspl(&self) -> Result<DSplModel> {
        let ds = self.ds()?;
        match &self.pl {
            Some(pl) => DSplModel::new(ds, pl.clone()),
            None => Ok(DSplModel::with_associated(ds)),
        }
    }

    pub fn probabilistic(&self) -> Result<ProbabilisticBDModel> {
        let mu = self
            .mu
            .clone()
            .ok_or_else(|| Error::InvalidModel("the model has no `mu`".into()))?;
        ProbabilisticBDModel::new(self.bd.clone(), mu)
    }
}

impl ModelFile {
    pub fn load(&self) -> Result<LoadedModel> {
        check_format(self.format)?;
        let universe = Universe::new(self.states.iter().cloned())?;
        let valuation =
            |map: &BTreeMap<String, Vec<String>>| -> Result<BTreeMap<String, StateSet>> {
                map.iter()
                    .map(|(atom, states)| Ok((atom.clone(), universe.set_of(states)?)))
                    .collect()
            };
        let bd = BDModel::new(
            universe.clone(),
            valuation(&self.vplus)?,
            valuation(&self.vminus)?,
        )?;

        let bel = match &self.mass {
            Some(entries) => Some(belief_from_mass(&mass_from_entries(&universe, entries)?)?),
            None => None,
        };
        let pl = match (&self.pl_mass, &self.pl_table) {
            (Some(_), Some(_)) => {
                return Err(Error::InvalidModel(
                    "give the plausibility as `pl_mass` or `pl_table`, not both".into(),
                ))
            }
            (Some(entries), None) => {
                let bel_pl = belief_from_mass(&mass_from_entries(&universe, entries)?)?;
                Some(plausibility_from_belief(&bel_pl))
            }
            (None, Some(table)) => Some(pl_from_table(&universe, table)?),
            (None, None) => None,
        };
        let mu = match &self.mu {
            Some(points) => {
                let mut point = vec![0.0; universe.len()];
                for (state, w) in points {
                    let i = universe
                        .position(state)
                        .ok_or_else(|| Error::UnknownState(state.clone()))?;
                    point[i] = *w;
                }
                Some(ProbabilityMeasure::new(universe.clone(), point)?)
            }
            None => None,
        };
        if bel.is_none() && pl.is_some() {
            return Err(Error::InvalidModel(
                "an independent plausibility needs a `mass` for the belief function".into(),
            ));
        }
        Ok(LoadedModel { bd, bel, pl, mu })
    }

    /// Serializes a model. Belief functions are written as their masses and an
    /// independent plausibility as `pl_mass`.
    pub fn from_parts(
        bd: &BDModel,
        bel: Option<&BeliefFunction>,
        pl: Option<&PlausibilityFunction>,
        mu: Option<&ProbabilityMeasure>,
    ) -> Result<Self> {
        let universe = bd.universe();
        let valuation = |map: &BTreeMap<String, StateSet>| {
            map.iter()
                .map(|(atom, set)| (atom.clone(), ids(universe, *set)))
                .collect()
        };
        Ok(ModelFile {
            format: Some(FORMAT_VERSION),
            states: universe.states().to_vec(),
            vplus: valuation(bd.vplus()),
            vminus: valuation(bd.vminus()),
            mass: bel
                .map(|b| mass_from_belief(b).map(|m| entries_from_mass(&m)))
                .transpose()?,
            pl_mass: pl
                .map(|p| mass_from_plausibility(p).map(|m| entries_from_mass(&m)))
                .transpose()?,
            pl_table: None,
            mu: mu.map(|mu| {
                universe
                    .states()
                    .iter()
                    .cloned()
                    .zip(mu.point().iter().copied())
                    .collect()
            }),
        })
    }
}

fn pl_from_table(universe: &Arc<Universe>, table: &[TableEntry]) -> Result<PlausibilityFunction> {
    let len = universe.dense_len()?;
    let mut values = vec![f64::NAN; len];
    for entry in table {
        let set = universe.set_of(&entry.set)?;
        if !values[set.index()].is_nan() {
            return Err(Error::InvalidSetFunction(format!(
                "set {:?} listed twice in `pl_table`",
                entry.set
            )));
        }
        values[set.index()] = entry.v;
    }
    if let Some(missing) = values.iter().position(|v| v.is_nan()) {
        return Err(Error::InvalidSetFunction(format!(
            "`pl_table` has no entry for {:?}",
            universe.ids(StateSet::from_bits(missing as u64))
        )));
    }
    PlausibilityFunction::from_table(universe.clone(), values)
}

pub fn parse_model(text: &str) -> Result<LoadedModel> {
    serde_json::from_str::<ModelFile>(text)?.load()
}

pub fn parse_mass(text: &str) -> Result<MassFunction> {
    serde_json::from_str::<MassFile>(text)?.to_mass()
}
