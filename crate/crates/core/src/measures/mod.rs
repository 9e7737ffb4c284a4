//! Set functions on the powerset of a finite universe.

mod axioms;
mod belief;
mod mass;
mod probability;
pub mod transform;

pub use axioms::{
    check_belief_axioms, check_plausibility_axioms, AxiomReport, Violation, DEFAULT_KMAX,
};
pub use belief::{
    belief_from_mass, belief_from_plausibility, mass_from_belief, mass_from_plausibility,
    plausibility_from_belief, plausibility_from_mass, BeliefFunction, PlausibilityFunction,
};
pub use mass::MassFunction;
pub use probability::ProbabilityMeasure;
