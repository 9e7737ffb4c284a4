//! Finite sets of probability measures and their envelopes.
//!
//! A [`CredalSet`] stands for the convex hull of its generators. Because
//! `μ ↦ μ(X)` is linear, envelopes of the hull are attained at generators, so
//! they are computed there. Bayesian updating is applied generator-wise.
//!
//! [`extreme_points`] builds the core of a belief function from permutation
//! allocations: for each ordering of the states, every focal element hands
//! its whole mass to its first member in that ordering. This layer is the
//! brute-force reference for the closed-form rules in
//! [`conditioning`](crate::conditioning).

use std::sync::Arc;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, Exp1};

use crate::measures::{mass_from_belief, BeliefFunction, MassFunction, ProbabilityMeasure};
use crate::tolerance::{epsilon, is_positive};
use crate::{Error, Result, StateSet, Universe};

/// Largest universe for which all `n!` permutation measures are enumerated.
pub const MAX_EXTREME_STATES: usize = 8;

#[derive(Clone, Debug, PartialEq)]
pub struct CredalSet {
    universe: Arc<Universe>,
    generators: Vec<ProbabilityMeasure>,
}

impl CredalSet {
    pub fn new(generators: Vec<ProbabilityMeasure>) -> Result<Self> {
        let universe = generators
            .first()
            .ok_or_else(|| Error::InvalidArgument("a credal set needs a generator".into()))?
            .universe()
            .clone();
        if generators.iter().any(|mu| mu.universe() != &universe) {
            return Err(Error::UniverseMismatch);
        }
        Ok(CredalSet {
            universe,
            generators,
        })
    }

    pub fn universe(&self) -> &Arc<Universe> {
        &self.universe
    }

    pub fn generators(&self) -> &[ProbabilityMeasure] {
        &self.generators
    }

    pub fn len(&self) -> usize {
        self.generators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }

    /// `inf { μ(X) : μ ∈ A }`.
    pub fn lower_envelope(&self, set: StateSet) -> f64 {
        self.generators
            .iter()
            .map(|mu| mu.measure(set))
            .fold(f64::INFINITY, f64::min)
    }

    /// `sup { μ(X) : μ ∈ A }`.
    pub fn upper_envelope(&self, set: StateSet) -> f64 {
        self.generators
            .iter()
            .map(|mu| mu.measure(set))
            .fold(f64::NEG_INFINITY, f64::max)
    }

    /// Lower envelope of every subset, as a dense table.
    pub fn lower_table(&self) -> Result<Vec<f64>> {
        self.table(|s| self.lower_envelope(s))
    }

    /// Upper envelope of every subset, as a dense table.
    pub fn upper_table(&self) -> Result<Vec<f64>> {
        self.table(|s| self.upper_envelope(s))
    }

    fn table(&self, f: impl Fn(StateSet) -> f64) -> Result<Vec<f64>> {
        let len = self.universe.dense_len()?;
        Ok((0..len as u64).map(|x| f(StateSet::from_bits(x))).collect())
    }
}

/// The measure that gives each focal element's mass to its first member
/// under `order` (a permutation of the state indices).
pub fn permutation_measure(mass: &MassFunction, order: &[usize]) -> Result<ProbabilityMeasure> {
    let n = mass.universe().len();
    let mut rank = vec![usize::MAX; n];
    for (r, &i) in order.iter().enumerate() {
        if i >= n || rank[i] != usize::MAX {
            return Err(Error::InvalidArgument(format!(
                "{order:?} is not a permutation of 0..{n}"
            )));
        }
        rank[i] = r;
    }
    if order.len() != n {
        return Err(Error::InvalidArgument(format!(
            "{order:?} is not a permutation of 0..{n}"
        )));
    }
    let mut point = vec![0.0; n];
    for (set, w) in mass.focal_elements() {
        if let Some(first) = set.iter().min_by_key(|&i| rank[i]) {
            point[first] += w;
        }
    }
    Ok(ProbabilityMeasure::from_raw(mass.universe().clone(), point))
}

/// Advances `perm` to the next permutation in lexicographic order.
fn next_permutation(perm: &mut [usize]) -> bool {
    let Some(i) = perm.windows(2).rposition(|w| w[0] < w[1]) else {
        return false;
    };
    let j = perm
        .iter()
        .rposition(|&x| x > perm[i])
        .expect("pivot has a successor");
    perm.swap(i, j);
    perm[i + 1..].reverse();
    true
}

/// One permutation measure per ordering of the states, in lexicographic
/// order of the orderings (the first is the universe order).
pub fn extreme_points(bel: &BeliefFunction) -> Result<CredalSet> {
    let n = bel.universe().len();
    if n > MAX_EXTREME_STATES {
        return Err(Error::TooManyStates {
            got: n,
            limit: MAX_EXTREME_STATES,
        });
    }
    let mass = mass_from_belief(bel)?;
    let mut order: Vec<usize> = (0..n).collect();
    let mut generators = Vec::new();
    loop {
        generators.push(permutation_measure(&mass, &order)?);
        if !next_permutation(&mut order) {
            break;
        }
    }
    CredalSet::new(generators)
}

/// `count` random points of the core of `bel`: convex combinations of the
/// permutation measures with flat-Dirichlet weights. Sample `i` draws from
/// its own ChaCha stream, so output depends only on `(seed, count)`.
pub fn sample_credal(bel: &BeliefFunction, count: usize, seed: u64) -> Result<CredalSet> {
    if count == 0 {
        return Err(Error::InvalidArgument(
            "sample count must be at least 1".into(),
        ));
    }
    let extremes = extreme_points(bel)?;
    let n = bel.universe().len();
    let samples = (0..count)
        .map(|i| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            rng.set_stream(i as u64);
            let weights: Vec<f64> = (0..extremes.len()).map(|_| Exp1.sample(&mut rng)).collect();
            let total: f64 = weights.iter().sum();
            let mut point = vec![0.0; n];
            for (w, mu) in weights.iter().zip(extremes.generators()) {
                for (p, q) in point.iter_mut().zip(mu.point()) {
                    *p += w / total * q;
                }
            }
            ProbabilityMeasure::from_raw(bel.universe().clone(), point)
        })
        .collect();
    CredalSet::new(samples)
}

/// `μ_B(C) = μ(B ∩ C) / μ(B)`.
pub fn bayes_update_measure(
    mu: &ProbabilityMeasure,
    given: StateSet,
) -> Result<ProbabilityMeasure> {
    let mass = mu.measure(given);
    if !is_positive(mass) {
        return Err(Error::Undefined {
            gate: format!("μ(B) > {:e}", epsilon()),
            value: mass,
        });
    }
    let point = mu
        .point()
        .iter()
        .enumerate()
        .map(|(i, p)| if given.contains(i) { p / mass } else { 0.0 })
        .collect();
    Ok(ProbabilityMeasure::from_raw(mu.universe().clone(), point))
}

/// `A_B = { μ_B : μ ∈ A, μ(B) > 0 }`.
pub fn update_credal(credal: &CredalSet, given: StateSet) -> Result<CredalSet> {
    let updated: Vec<_> = credal
        .generators()
        .iter()
        .filter(|mu| is_positive(mu.measure(given)))
        .map(|mu| bayes_update_measure(mu, given))
        .collect::<Result<_>>()?;
    if updated.is_empty() {
        return Err(Error::Undefined {
            gate: "no measure gives B positive probability".into(),
            value: credal.upper_envelope(given),
        });
    }
    CredalSet::new(updated)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::measures::{belief_from_mass, plausibility_from_belief};

    fn s(ids: &[usize]) -> StateSet {
        StateSet::from_indices(ids.iter().copied())
    }

    fn m0() -> MassFunction {
        MassFunction::new(
            Universe::numbered(3).unwrap(),
            [(s(&[0]), 0.2), (s(&[1, 2]), 0.5), (s(&[0, 1, 2]), 0.3)],
        )
        .unwrap()
    }

    fn bel0() -> BeliefFunction {
        belief_from_mass(&m0()).unwrap()
    }

    fn close(a: f64, b: f64) -> bool {
        (a - b).abs() < 1e-12
    }

    #[test]
    fn singleton_set_envelopes() {
        let u = Universe::numbered(3).unwrap();
        let mu = ProbabilityMeasure::new(u, vec![0.2, 0.3, 0.5]).unwrap();
        let a = CredalSet::new(vec![mu.clone()]).unwrap();
        for x in (0..8).map(StateSet::from_bits) {
            assert_eq!(a.lower_envelope(x), mu.measure(x));
            assert_eq!(a.upper_envelope(x), mu.measure(x));
        }
        assert_eq!(a.lower_envelope(StateSet::EMPTY), 0.0);
        assert!(close(a.upper_envelope(StateSet::full(3)), 1.0));
    }

    #[test]
    fn credal_set_needs_generators() {
        assert!(CredalSet::new(vec![]).is_err());
        let mu = ProbabilityMeasure::uniform(Universe::numbered(2).unwrap());
        let nu = ProbabilityMeasure::uniform(Universe::numbered(3).unwrap());
        assert_eq!(CredalSet::new(vec![mu, nu]), Err(Error::UniverseMismatch));
    }

    #[test]
    fn permutation_allocations_of_m0() {
        let m = m0();
        // σ = (s1, s2, s3): {s1}→s1, {s2,s3}→s2, S→s1
        let mu = permutation_measure(&m, &[0, 1, 2]).unwrap();
        assert!(close(mu.point()[0], 0.5) && close(mu.point()[1], 0.5) && mu.point()[2] == 0.0);
        // σ = (s2, s3, s1): only m({s1}) lands on s1
        let mu = permutation_measure(&m, &[1, 2, 0]).unwrap();
        assert!(close(mu.point()[0], 0.2));
        assert!(permutation_measure(&m, &[0, 0, 1]).is_err());
        assert!(permutation_measure(&m, &[0, 1]).is_err());
    }

    #[test]
    fn extreme_points_of_m0() {
        let bel = bel0();
        let a = extreme_points(&bel).unwrap();
        assert_eq!(a.len(), 6);
        assert_eq!(
            a.generators()[0],
            permutation_measure(&m0(), &[0, 1, 2]).unwrap()
        );
        // brute force: min over the six measures of μ({s1}) is m({s1}) = 0.2
        assert!(close(a.lower_envelope(s(&[0])), 0.2));
        let pl = plausibility_from_belief(&bel);
        for x in (0..8).map(StateSet::from_bits) {
            assert!(close(a.lower_envelope(x), bel.value(x)));
            assert!(close(a.upper_envelope(x), pl.value(x)));
        }
    }

    #[test]
    fn unanimity_on_a_singleton_has_one_measure() {
        let u = Universe::numbered(3).unwrap();
        let m = MassFunction::categorical(u, s(&[1])).unwrap();
        let a = extreme_points(&belief_from_mass(&m).unwrap()).unwrap();
        assert!(a
            .generators()
            .iter()
            .all(|mu| mu.point() == [0.0, 1.0, 0.0]));
    }

    #[test]
    fn refuses_large_universes() {
        let u = Universe::numbered(9).unwrap();
        let bel = belief_from_mass(&MassFunction::vacuous(u).unwrap()).unwrap();
        assert_eq!(
            extreme_points(&bel).unwrap_err(),
            Error::TooManyStates { got: 9, limit: 8 }
        );
    }

    #[test]
    fn samples_dominate_belief_and_are_deterministic() {
        let bel = bel0();
        let pl = plausibility_from_belief(&bel);
        let a = sample_credal(&bel, 200, 7).unwrap();
        assert_eq!(a.len(), 200);
        for mu in a.generators() {
            for x in (0..8).map(StateSet::from_bits) {
                assert!(mu.measure(x) >= bel.value(x) - 1e-12);
                assert!(mu.measure(x) <= pl.value(x) + 1e-12);
            }
        }
        assert_eq!(a, sample_credal(&bel, 200, 7).unwrap());
        assert_ne!(a, sample_credal(&bel, 200, 8).unwrap());
        // prefix stability: sample i only depends on (seed, i)
        let short = sample_credal(&bel, 10, 7).unwrap();
        assert_eq!(short.generators(), &a.generators()[..10]);
        assert!(sample_credal(&bel, 0, 7).is_err());
    }

    #[test]
    fn degenerate_sampling_returns_the_extreme_point() {
        let u = Universe::numbered(2).unwrap();
        let m = MassFunction::categorical(u, s(&[0])).unwrap();
        let bel = belief_from_mass(&m).unwrap();
        let a = sample_credal(&bel, 1, 0).unwrap();
        assert_eq!(
            a.generators()[0].point(),
            extreme_points(&bel).unwrap().generators()[0].point()
        );
    }

    #[test]
    fn bayes_update() {
        let u = Universe::numbered(3).unwrap();
        let mu = ProbabilityMeasure::uniform(u.clone());
        let updated = bayes_update_measure(&mu, s(&[0, 1])).unwrap();
        assert!(close(updated.point()[0], 0.5));
        assert!(close(updated.point()[1], 0.5));
        assert_eq!(updated.point()[2], 0.0);
        assert!(close(updated.measure(s(&[0, 1])), 1.0));

        assert_eq!(
            bayes_update_measure(&mu, u.full()).unwrap().point(),
            mu.point()
        );

        let nu = ProbabilityMeasure::new(u, vec![1.0, 0.0, 0.0]).unwrap();
        assert!(matches!(
            bayes_update_measure(&nu, s(&[1, 2])),
            Err(Error::Undefined { .. })
        ));
    }

    #[test]
    fn credal_update() {
        let u = Universe::numbered(3).unwrap();
        let mu = ProbabilityMeasure::new(u.clone(), vec![0.2, 0.3, 0.5]).unwrap();
        let single = update_credal(&CredalSet::new(vec![mu.clone()]).unwrap(), s(&[0, 1])).unwrap();
        assert_eq!(
            single.generators(),
            &[bayes_update_measure(&mu, s(&[0, 1])).unwrap()]
        );

        let a = extreme_points(&bel0()).unwrap();
        let b = s(&[0, 1]);
        assert!(a.generators().iter().all(|mu| mu.measure(b) >= 0.2 - 1e-12));
        let updated = update_credal(&a, b).unwrap();
        assert_eq!(updated.len(), 6);
        for (before, after) in a.generators().iter().zip(updated.generators()) {
            assert_eq!(after, &bayes_update_measure(before, b).unwrap());
        }

        let point = ProbabilityMeasure::new(u, vec![0.0, 0.0, 1.0]).unwrap();
        let err = update_credal(&CredalSet::new(vec![point]).unwrap(), b).unwrap_err();
        assert!(matches!(err, Error::Undefined { .. }));
    }

    #[test]
    fn null_generators_are_dropped() {
        let u = Universe::numbered(2).unwrap();
        let a = CredalSet::new(vec![
            ProbabilityMeasure::new(u.clone(), vec![1.0, 0.0]).unwrap(),
            ProbabilityMeasure::new(u, vec![0.5, 0.5]).unwrap(),
        ])
        .unwrap();
        let updated = update_credal(&a, s(&[1])).unwrap();
        assert_eq!(updated.len(), 1);
        assert_eq!(updated.generators()[0].point(), [0.0, 1.0]);
    }
}
