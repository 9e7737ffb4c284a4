//! Exhaustive axiom checkers for belief and plausibility set functions.
//!
//! A check walks boundary conditions, the `[0, 1]` range, monotonicity over
//! every `X ⊆ Y` pair and finally the `k`-family inequality for every
//! family of `k` distinct sets, `2 ≤ k ≤ kmax`. Cost grows as
//! `C(2^n, kmax) · 2^kmax`; callers bound `n` and `kmax`.

use std::fmt;

use crate::tolerance::epsilon;
use crate::StateSet;

pub const DEFAULT_KMAX: usize = 3;

#[derive(Clone, Debug, PartialEq)]
pub enum Violation {
    /// The table length is not `2^n`.
    BadTable {
        len: usize,
    },
    EmptySet {
        value: f64,
    },
    FullSet {
        value: f64,
    },
    OutOfRange {
        set: StateSet,
        value: f64,
    },
    NotMonotone {
        subset: StateSet,
        superset: StateSet,
        subset_value: f64,
        superset_value: f64,
    },
    /// The inclusion-exclusion inequality fails for `family`; `lhs` is the
    /// value of the union (belief) or intersection (plausibility), `rhs` the
    /// alternating sum.
    Inequality {
        family: Vec<StateSet>,
        lhs: f64,
        rhs: f64,
    },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::BadTable { len } => write!(f, "table length {len} is not a power of two"),
            Violation::EmptySet { value } => write!(f, "f(∅)≠0 (f(∅) = {value})"),
            Violation::FullSet { value } => write!(f, "f(S)≠1 (f(S) = {value})"),
            Violation::OutOfRange { set, value } => {
                write!(f, "f({set:?}) = {value} is outside [0, 1]")
            }
            Violation::NotMonotone {
                subset,
                superset,
                subset_value,
                superset_value,
            } => write!(
                f,
                "not monotone: f({subset:?}) = {subset_value} > f({superset:?}) = {superset_value}"
            ),
            Violation::Inequality { family, lhs, rhs } => write!(
                f,
                "{}-family inequality fails for {family:?}: {lhs} vs {rhs}",
                family.len()
            ),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum AxiomReport {
    Pass,
    Fail(Violation),
}

impl AxiomReport {
    pub fn is_pass(&self) -> bool {
        matches!(self, AxiomReport::Pass)
    }

    pub fn violation(&self) -> Option<&Violation> {
        match self {
            AxiomReport::Pass => None,
            AxiomReport::Fail(v) => Some(v),
        }
    }
}

#[derive(Clone, Copy, PartialEq)]
enum Kind {
    Belief,
    Plausibility,
}

/// Checks the belief-function axioms on a dense table indexed by bitmask.
pub fn check_belief_axioms(values: &[f64], kmax: usize) -> AxiomReport {
    check(values, kmax, Kind::Belief)
}

/// Checks the plausibility-function axioms on a dense table.
pub fn check_plausibility_axioms(values: &[f64], kmax: usize) -> AxiomReport {
    check(values, kmax, Kind::Plausibility)
}

fn check(values: &[f64], kmax: usize, kind: Kind) -> AxiomReport {
    match first_violation(values, kmax, kind) {
        Some(v) => AxiomReport::Fail(v),
        None => AxiomReport::Pass,
    }
}

fn first_violation(values: &[f64], kmax: usize, kind: Kind) -> Option<Violation> {
    let eps = epsilon();
    let len = values.len();
    if !len.is_power_of_two() || len > 1 << crate::MAX_DENSE_STATES {
        return Some(Violation::BadTable { len });
    }
    if values[0].abs() > eps {
        return Some(Violation::EmptySet { value: values[0] });
    }
    let full = len - 1;
    if (values[full] - 1.0).abs() > eps {
        return Some(Violation::FullSet {
            value: values[full],
        });
    }
    for (i, v) in values.iter().enumerate() {
        if !(v.is_finite() && *v >= -eps && *v <= 1.0 + eps) {
            return Some(Violation::OutOfRange {
                set: StateSet::from_bits(i as u64),
                value: *v,
            });
        }
    }
    for y in 0..len {
        let superset = StateSet::from_bits(y as u64);
        for subset in superset.subsets() {
            if values[subset.index()] > values[y] + eps {
                return Some(Violation::NotMonotone {
                    subset,
                    superset,
                    subset_value: values[subset.index()],
                    superset_value: values[y],
                });
            }
        }
    }
    for k in 2..=kmax.min(len) {
        if let Some(v) = family_violation(values, k, kind, eps) {
            return Some(v);
        }
    }
    None
}

fn family_violation(values: &[f64], k: usize, kind: Kind, eps: f64) -> Option<Violation> {
    let len = values.len();
    let mut idx: Vec<usize> = (0..k).collect();
    let mut family = vec![StateSet::EMPTY; k];
    loop {
        for (slot, &i) in family.iter_mut().zip(&idx) {
            *slot = StateSet::from_bits(i as u64);
        }
        let (lhs, rhs) = inequality_sides(values, &family, kind);
        let violated = match kind {
            Kind::Belief => lhs < rhs - eps,
            Kind::Plausibility => lhs > rhs + eps,
        };
        if violated {
            return Some(Violation::Inequality {
                family: family.clone(),
                lhs,
                rhs,
            });
        }
        // next k-combination of 0..len in lexicographic order
        let mut pos = k;
        while pos > 0 && idx[pos - 1] == len - k + pos - 1 {
            pos -= 1;
        }
        if pos == 0 {
            return None;
        }
        idx[pos - 1] += 1;
        for j in pos..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

/// Belief: `(f(⋃ aᵢ), Σ_J (−1)^{|J|+1} f(⋂_J aⱼ))`.
/// Plausibility: `(f(⋂ aᵢ), Σ_J (−1)^{|J|+1} f(⋃_J aⱼ))`.
fn inequality_sides(values: &[f64], family: &[StateSet], kind: Kind) -> (f64, f64) {
    let all = StateSet::full(family.len()).bits();
    let combine = |acc: StateSet, a: StateSet, first: bool| match (kind, first) {
        (_, true) => a,
        (Kind::Belief, false) => acc & a,
        (Kind::Plausibility, false) => acc | a,
    };
    let mut rhs = 0.0;
    for j in 1..=all {
        let members = StateSet::from_bits(j);
        let mut acc = StateSet::EMPTY;
        for (n, i) in members.iter().enumerate() {
            acc = combine(acc, family[i], n == 0);
        }
        let sign = if members.len() % 2 == 1 { 1.0 } else { -1.0 };
        rhs += sign * values[acc.index()];
    }
    let outer = family.iter().copied().reduce(|a, b| match kind {
        Kind::Belief => a | b,
        Kind::Plausibility => a & b,
    });
    (values[outer.unwrap_or_default().index()], rhs)
}
