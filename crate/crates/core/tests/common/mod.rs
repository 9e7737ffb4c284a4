//! Random instance generators shared by the integration tests.
#![allow(dead_code)]

use std::collections::BTreeMap;
use std::sync::Arc;

use bdbelief::measures::{belief_from_mass, BeliefFunction, MassFunction, ProbabilityMeasure};
use bdbelief::{BDModel, Formula, StateSet, Universe};
use rand::Rng;
use rand_distr::{Distribution, Exp1};

pub const ATOMS: [&str; 3] = ["p", "q", "r"];

/// Flat-Dirichlet weights.
pub fn dirichlet<R: Rng>(rng: &mut R, k: usize) -> Vec<f64> {
    let raw: Vec<f64> = (0..k).map(|_| Exp1.sample(rng)).collect();
    let total: f64 = raw.iter().sum();
    raw.into_iter().map(|w| w / total).collect()
}

/// A mass with 1..=6 distinct nonempty focal sets and Dirichlet weights.
pub fn random_mass<R: Rng>(rng: &mut R, universe: &Arc<Universe>) -> MassFunction {
    let n = universe.len();
    let subsets = (1u64 << n) - 1;
    let k = rng.random_range(1..=6usize.min(subsets as usize));
    let mut focal: Vec<StateSet> = Vec::with_capacity(k);
    while focal.len() < k {
        let set = StateSet::from_bits(rng.random_range(1..=subsets));
        if !focal.contains(&set) {
            focal.push(set);
        }
    }
    let weights = dirichlet(rng, k);
    MassFunction::new(universe.clone(), focal.into_iter().zip(weights)).unwrap()
}

pub fn random_belief<R: Rng>(rng: &mut R, universe: &Arc<Universe>) -> BeliefFunction {
    belief_from_mass(&random_mass(rng, universe)).unwrap()
}

pub fn random_measure<R: Rng>(rng: &mut R, universe: &Arc<Universe>) -> ProbabilityMeasure {
    ProbabilityMeasure::new(universe.clone(), dirichlet(rng, universe.len())).unwrap()
}

pub fn random_nonempty_set<R: Rng>(rng: &mut R, universe: &Universe) -> StateSet {
    StateSet::from_bits(rng.random_range(1..=universe.full().bits()))
}

pub fn random_bd_model<R: Rng>(rng: &mut R, universe: &Arc<Universe>) -> BDModel {
    let full = universe.full().bits();
    let mut vplus = BTreeMap::new();
    let mut vminus = BTreeMap::new();
    for atom in ATOMS {
        vplus.insert(
            atom.to_string(),
            StateSet::from_bits(rng.random_range(0..=full)),
        );
        vminus.insert(
            atom.to_string(),
            StateSet::from_bits(rng.random_range(0..=full)),
        );
    }
    BDModel::new(universe.clone(), vplus, vminus).unwrap()
}

pub fn random_formula<R: Rng>(rng: &mut R, depth: usize) -> Formula {
    if depth == 0 || rng.random_bool(0.3) {
        return match rng.random_range(0..10) {
            0 => Formula::Top,
            1 => Formula::Bottom,
            _ => Formula::Atom(ATOMS[rng.random_range(0..ATOMS.len())].to_string()),
        };
    }
    match rng.random_range(0..3) {
        0 => random_formula(rng, depth - 1).negate(),
        1 => random_formula(rng, depth - 1).and(random_formula(rng, depth - 1)),
        _ => random_formula(rng, depth - 1).or(random_formula(rng, depth - 1)),
    }
}

pub fn max_abs_diff(a: &[f64], b: &[f64]) -> f64 {
    assert_eq!(a.len(), b.len());
    a.iter()
        .zip(b)
        .map(|(x, y)| (x - y).abs())
        .fold(0.0, f64::max)
}
