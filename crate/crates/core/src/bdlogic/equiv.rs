use std::collections::HashMap;

use super::{Formula, FourValue};
use crate::{Error, Result};

/// Truth tables are enumerated over `4^k` assignments; `k` is capped here.
pub const MAX_EQUIVALENCE_ATOMS: usize = 10;

/// Evaluates `formula` under an assignment of atoms to truth values.
pub fn eval_truth_table(
    formula: &Formula,
    assignment: &HashMap<&str, FourValue>,
) -> Result<FourValue> {
    Ok(match formula {
        Formula::Atom(name) => *assignment
            .get(name.as_str())
            .ok_or_else(|| Error::UnknownAtom(name.clone()))?,
        Formula::Not(inner) => eval_truth_table(inner, assignment)?.negate(),
        Formula::And(l, r) => {
            eval_truth_table(l, assignment)?.meet(eval_truth_table(r, assignment)?)
        }
        Formula::Or(l, r) => {
            eval_truth_table(l, assignment)?.join(eval_truth_table(r, assignment)?)
        }
        Formula::Top => FourValue::T,
        Formula::Bottom => FourValue::F,
    })
}

/// Decides `φ ~ ψ` by comparing four-valued truth tables over every
/// assignment of the atoms occurring in either formula.
pub fn equivalent(lhs: &Formula, rhs: &Formula) -> Result<bool> {
    let mut atoms = lhs.atoms();
    atoms.extend(rhs.atoms());
    let atoms: Vec<&str> = atoms.into_iter().collect();
    if atoms.len() > MAX_EQUIVALENCE_ATOMS {
        return Err(Error::TooManyAtoms {
            got: atoms.len(),
            limit: MAX_EQUIVALENCE_ATOMS,
        });
    }
    let mut assignment: HashMap<&str, FourValue> = HashMap::with_capacity(atoms.len());
    for code in 0..(1usize << (2 * atoms.len())) {
        for (i, atom) in atoms.iter().enumerate() {
            assignment.insert(atom, FourValue::ALL[(code >> (2 * i)) & 3]);
        }
        if eval_truth_table(lhs, &assignment)? != eval_truth_table(rhs, &assignment)? {
            return Ok(false);
        }
    }
    Ok(true)
}
