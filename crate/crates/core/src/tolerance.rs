//! Process-wide comparison tolerance.
//!
//! Every definedness gate ("Pl(B) > 0", "μ(B) > 0", the normalizer of the
//! combination rule) and every validation compares against the same ε.

use std::sync::atomic::{AtomicU64, Ordering};

pub const DEFAULT_EPSILON: f64 = 1e-9;

static EPSILON_BITS: AtomicU64 = AtomicU64::new(0x3E11_2E0B_E826_D695); // 1e-9

pub fn epsilon() -> f64 {
    f64::from_bits(EPSILON_BITS.load(Ordering::Relaxed))
}

/// Replaces the global tolerance. Non-finite or non-positive values are
/// ignored and `false` is returned.
pub fn set_epsilon(eps: f64) -> bool {
    if !(eps.is_finite() && eps > 0.0) {
        return false;
    }
    EPSILON_BITS.store(eps.to_bits(), Ordering::Relaxed);
    true
}

pub(crate) fn is_positive(x: f64) -> bool {
    x > epsilon()
}
