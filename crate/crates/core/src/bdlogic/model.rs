use std::collections::BTreeMap;
use std::sync::Arc;

use super::{is_valid_atom, Formula, FourValue};
use crate::{Error, Result, StateSet, Universe};

/// A finite Belnap-Dunn model: states plus independent positive and
/// negative valuations of every atom in the vocabulary.
#[derive(Clone, Debug, PartialEq)]
pub struct BDModel {
    universe: Arc<Universe>,
    vplus: BTreeMap<String, StateSet>,
    vminus: BTreeMap<String, StateSet>,
}

impl BDModel {
    pub fn new(
        universe: Arc<Universe>,
        vplus: BTreeMap<String, StateSet>,
        vminus: BTreeMap<String, StateSet>,
    ) -> Result<Self> {
        if !vplus.keys().eq(vminus.keys()) {
            let missing = vplus
                .keys()
                .find(|k| !vminus.contains_key(*k))
                .or_else(|| vminus.keys().find(|k| !vplus.contains_key(*k)));
            return Err(Error::InvalidModel(format!(
                "atom `{}` lacks a positive or a negative valuation",
                missing.map_or("", String::as_str)
            )));
        }
        for (atom, set) in vplus.iter().chain(vminus.iter()) {
            if !is_valid_atom(atom) {
                return Err(Error::InvalidModel(format!("invalid atom name `{atom}`")));
            }
            if !universe.contains_set(*set) {
                return Err(Error::InvalidModel(format!(
                    "valuation of `{atom}` mentions states outside the universe"
                )));
            }
        }
        Ok(BDModel {
            universe,
            vplus,
            vminus,
        })
    }

    /// Builds a model from state ids, e.g. `("p", ["s1", "s2"], ["s2"])`.
    pub fn from_ids<'a, I>(universe: Arc<Universe>, valuations: I) -> Result<Self>
    where
        I: IntoIterator<Item = (&'a str, &'a [&'a str], &'a [&'a str])>,
    {
        let mut vplus = BTreeMap::new();
        let mut vminus = BTreeMap::new();
        for (atom, pos, neg) in valuations {
            vplus.insert(atom.to_string(), universe.set_of(pos)?);
            vminus.insert(atom.to_string(), universe.set_of(neg)?);
        }
        BDModel::new(universe, vplus, vminus)
    }

    pub fn universe(&self) -> &Arc<Universe> {
        &self.universe
    }

    pub fn vocabulary(&self) -> impl Iterator<Item = &str> {
        self.vplus.keys().map(String::as_str)
    }

    pub fn vplus(&self) -> &BTreeMap<String, StateSet> {
        &self.vplus
    }

    pub fn vminus(&self) -> &BTreeMap<String, StateSet> {
        &self.vminus
    }

    /// `(|φ|⁺, |φ|⁻)` computed together by the frame clauses.
    pub fn extensions(&self, formula: &Formula) -> Result<(StateSet, StateSet)> {
        Ok(match formula {
            Formula::Atom(name) => {
                let pos = self
                    .vplus
                    .get(name)
                    .ok_or_else(|| Error::UnknownAtom(name.clone()))?;
                (*pos, self.vminus[name])
            }
            Formula::Not(inner) => {
                let (pos, neg) = self.extensions(inner)?;
                (neg, pos)
            }
            Formula::And(l, r) => {
                let (lp, ln) = self.extensions(l)?;
                let (rp, rn) = self.extensions(r)?;
                (lp & rp, ln | rn)
            }
            Formula::Or(l, r) => {
                let (lp, ln) = self.extensions(l)?;
                let (rp, rn) = self.extensions(r)?;
                (lp | rp, ln & rn)
            }
            Formula::Top => (self.universe.full(), StateSet::EMPTY),
            Formula::Bottom => (StateSet::EMPTY, self.universe.full()),
        })
    }

    /// `|φ|⁺`, the states positively supporting `φ`.
    pub fn positive_extension(&self, formula: &Formula) -> Result<StateSet> {
        self.extensions(formula).map(|(pos, _)| pos)
    }

    /// `|φ|⁻`, the states negatively supporting `φ`.
    pub fn negative_extension(&self, formula: &Formula) -> Result<StateSet> {
        self.extensions(formula).map(|(_, neg)| neg)
    }

    pub fn eval4(&self, state: &str, formula: &Formula) -> Result<FourValue> {
        let i = self
            .universe
            .position(state)
            .ok_or_else(|| Error::UnknownState(state.to_string()))?;
        let (pos, neg) = self.extensions(formula)?;
        Ok(FourValue::from_support(pos.contains(i), neg.contains(i)))
    }
}
