//! Belief functions over Belnap-Dunn logic.
//!
//! The crate is layered bottom-up:
//!
//! * [`bdlogic`]: formulas, four-valued models, positive and negative
//!   extensions, semantic equivalence.
//! * [`measures`]: mass, belief, plausibility and probability set functions on
//!   the powerset of a finite state set, stored as dense tables.
//! * [`credal`]: sets of probability measures, their envelopes and Bayesian
//!   updates. This is the brute-force oracle for the closed forms.
//! * [`conditioning`]: Dempster-Shafer combination and the closed-form
//!   conditioning rules.
//! * [`models`]: DS models, DS models with an independent plausibility, and
//!   probabilistic BD models, with formula-level measures and updates.
//! * [`json`]: the on-disk schemas for mass functions and models.

pub mod bdlogic;
pub mod conditioning;
pub mod credal;
mod error;
pub mod json;
pub mod measures;
pub mod models;
mod stateset;
pub mod tolerance;

pub use bdlogic::{parse, BDModel, Formula, FourValue};
pub use conditioning::ConditioningMethod;
pub use credal::CredalSet;
pub use error::{Error, Result};
pub use measures::{BeliefFunction, MassFunction, PlausibilityFunction, ProbabilityMeasure};
pub use models::{DSModel, DSplModel, ProbabilisticBDModel};
pub use stateset::{StateSet, Universe, MAX_DENSE_STATES, MAX_STATES};
