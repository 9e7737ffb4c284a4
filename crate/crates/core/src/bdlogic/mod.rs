//! Belnap-Dunn formulas, models and semantics.

mod equiv;
mod formula;
mod four;
mod model;
mod parser;

pub use equiv::{equivalent, eval_truth_table, MAX_EQUIVALENCE_ATOMS};
pub use formula::{is_valid_atom, Formula, KEYWORDS};
pub use four::FourValue;
pub use model::BDModel;
pub use parser::parse;
