//! Belief, plausibility and probability over Belnap-Dunn models.
//!
//! Formula-level measures read the set function at the formula's positive
//! extension: `bel⁺(φ) = Bel(|φ|⁺)`, `bel⁻(φ) = Bel(|φ|⁻) = bel⁺(¬φ)`, and
//! likewise for `pl` and `p`. Updating on `φ` conditions the set functions on
//! `|φ|⁺` and leaves the valuations untouched; learning negative information
//! about `φ` is updating on `¬φ`.

use crate::bdlogic::{BDModel, Formula};
use crate::conditioning::{
    condition_bel_lower, condition_pl_lower, ds_condition_bel, ds_condition_pl, ConditioningMethod,
};
use crate::measures::{
    plausibility_from_belief, BeliefFunction, PlausibilityFunction, ProbabilityMeasure,
};
use crate::tolerance::epsilon;
use crate::{Error, Result};

/// A BD model with a belief function on the powerset of its states.
#[derive(Clone, Debug, PartialEq)]
pub struct DSModel {
    bd: BDModel,
    bel: BeliefFunction,
}

/// A DS model with an additional plausibility function that need not be the
/// one associated with the belief function.
#[derive(Clone, Debug, PartialEq)]
pub struct DSplModel {
    ds: DSModel,
    pl: PlausibilityFunction,
}

/// A BD model with a probability measure on its states.
#[derive(Clone, Debug, PartialEq)]
pub struct ProbabilisticBDModel {
    bd: BDModel,
    mu: ProbabilityMeasure,
}

fn undefined_update(err: Error, gate: &str) -> Error {
    match err {
        Error::Undefined { value, .. } => Error::Undefined {
            gate: format!("{gate} > {:e}", epsilon()),
            value,
        },
        other => other,
    }
}

impl DSModel {
    pub fn new(bd: BDModel, bel: BeliefFunction) -> Result<Self> {
        if bd.universe() != bel.universe() {
            return Err(Error::UniverseMismatch);
        }
        Ok(DSModel { bd, bel })
    }

    pub fn bd(&self) -> &BDModel {
        &self.bd
    }

    pub fn bel(&self) -> &BeliefFunction {
        &self.bel
    }

    /// `bel⁺(φ) = Bel(|φ|⁺)`.
    pub fn bel_pos(&self, formula: &Formula) -> Result<f64> {
        Ok(self.bel.value(self.bd.positive_extension(formula)?))
    }

    /// `bel⁻(φ) = Bel(|φ|⁻)`.
    pub fn bel_neg(&self, formula: &Formula) -> Result<f64> {
        Ok(self.bel.value(self.bd.negative_extension(formula)?))
    }

    /// The plausibility associated with `Bel`, `1 − Bel(X̄)`.
    pub fn associated_pl(&self) -> PlausibilityFunction {
        plausibility_from_belief(&self.bel)
    }

    /// Conditions `Bel` on `|φ|⁺`.
    pub fn update(&self, on: &Formula, method: ConditioningMethod) -> Result<DSModel> {
        let given = self.bd.positive_extension(on)?;
        let bel = match method {
            ConditioningMethod::LowerUpper => condition_bel_lower(&self.bel, given)
                .map_err(|e| undefined_update(e, "Pl_Bel(|φ|⁺)"))?,
            ConditioningMethod::Ds => ds_condition_bel(&self.bel, given)
                .map_err(|e| undefined_update(e, "1 − Bel(complement of |φ|⁺)"))?,
        };
        Ok(DSModel {
            bd: self.bd.clone(),
            bel,
        })
    }
}

impl DSplModel {
    pub fn new(ds: DSModel, pl: PlausibilityFunction) -> Result<Self> {
        if ds.bd.universe() != pl.universe() {
            return Err(Error::UniverseMismatch);
        }
        Ok(DSplModel { ds, pl })
    }

    /// Pairs a DS model with its associated plausibility.
    pub fn with_associated(ds: DSModel) -> Self {
        let pl = ds.associated_pl();
        DSplModel { ds, pl }
    }

    pub fn ds(&self) -> &DSModel {
        &self.ds
    }

    pub fn bd(&self) -> &BDModel {
        &self.ds.bd
    }

    pub fn bel(&self) -> &BeliefFunction {
        &self.ds.bel
    }

    pub fn pl(&self) -> &PlausibilityFunction {
        &self.pl
    }

    pub fn bel_pos(&self, formula: &Formula) -> Result<f64> {
        self.ds.bel_pos(formula)
    }

    pub fn bel_neg(&self, formula: &Formula) -> Result<f64> {
        self.ds.bel_neg(formula)
    }

    /// `pl⁺(φ) = Pl(|φ|⁺)`.
    pub fn pl_pos(&self, formula: &Formula) -> Result<f64> {
        Ok(self.pl.value(self.bd().positive_extension(formula)?))
    }

    /// `pl⁻(φ) = Pl(|φ|⁻)`.
    pub fn pl_neg(&self, formula: &Formula) -> Result<f64> {
        Ok(self.pl.value(self.bd().negative_extension(formula)?))
    }

    /// Conditions `Bel` and `Pl` on `|φ|⁺`, each under its own definedness
    /// gate.
    pub fn update(&self, on: &Formula, method: ConditioningMethod) -> Result<DSplModel> {
        let ds = self.ds.update(on, method)?;
        let given = self.bd().positive_extension(on)?;
        let pl = match method {
            ConditioningMethod::LowerUpper => condition_pl_lower(&self.pl, given),
            ConditioningMethod::Ds => ds_condition_pl(&self.pl, given),
        }
        .map_err(|e| undefined_update(e, "Pl(|φ|⁺)"))?;
        Ok(DSplModel { ds, pl })
    }
}

impl ProbabilisticBDModel {
    pub fn new(bd: BDModel, mu: ProbabilityMeasure) -> Result<Self> {
        if bd.universe() != mu.universe() {
            return Err(Error::UniverseMismatch);
        }
        Ok(ProbabilisticBDModel { bd, mu })
    }

    pub fn bd(&self) -> &BDModel {
        &self.bd
    }

    pub fn mu(&self) -> &ProbabilityMeasure {
        &self.mu
    }

    /// `p(φ) = μ(|φ|⁺)`.
    pub fn prob(&self, formula: &Formula) -> Result<f64> {
        Ok(self.mu.measure(self.bd.positive_extension(formula)?))
    }
}
