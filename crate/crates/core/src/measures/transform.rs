//! Zeta and Möbius transforms over the subset lattice, in place.
//!
//! Tables are indexed by subset bitmask and have length `2^n`. Both
//! transforms run in `O(2^n · n)`.

/// `out[X] = Σ_{Y ⊆ X} in[Y]`.
pub fn subset_zeta(table: &mut [f64]) {
    debug_assert!(table.len().is_power_of_two());
    let mut bit = 1;
    while bit < table.len() {
        for mask in 0..table.len() {
            if mask & bit != 0 {
                table[mask] += table[mask ^ bit];
            }
        }
        bit <<= 1;
    }
}

/// Inverse of [`subset_zeta`]: `out[X] = Σ_{Y ⊆ X} (−1)^{|X∖Y|} in[Y]`.
pub fn subset_mobius(table: &mut [f64]) {
    debug_assert!(table.len().is_power_of_two());
    let mut bit = 1;
    while bit < table.len() {
        for mask in 0..table.len() {
            if mask & bit != 0 {
                table[mask] -= table[mask ^ bit];
            }
        }
        bit <<= 1;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn brute_zeta(table: &[f64]) -> Vec<f64> {
        (0..table.len())
            .map(|x| {
                (0..table.len())
                    .filter(|y| y & !x == 0)
                    .map(|y| table[y])
                    .sum()
            })
            .collect()
    }

    fn brute_mobius(table: &[f64]) -> Vec<f64> {
        (0..table.len())
            .map(|x: usize| {
                (0..table.len())
                    .filter(|y| y & !x == 0)
                    .map(|y: usize| {
                        let sign = if (x & !y).count_ones().is_multiple_of(2) {
                            1.0
                        } else {
                            -1.0
                        };
                        sign * table[y]
                    })
                    .sum()
            })
            .collect()
    }

    #[test]
    fn matches_direct_sums() {
        let table: Vec<f64> = (0..16).map(|i| ((i * 7) % 5) as f64 * 0.1).collect();
        let mut zeta = table.clone();
        subset_zeta(&mut zeta);
        let mut mobius = table.clone();
        subset_mobius(&mut mobius);
        for (a, b) in zeta.iter().zip(brute_zeta(&table)) {
            assert!((a - b).abs() < 1e-12);
        }
        for (a, b) in mobius.iter().zip(brute_mobius(&table)) {
            assert!((a - b).abs() < 1e-12);
        }
    }

    #[test]
    fn inverse_pair() {
        let table: Vec<f64> = (0..32).map(|i| (i as f64).sin()).collect();
        let mut t = table.clone();
        subset_zeta(&mut t);
        subset_mobius(&mut t);
        for (a, b) in t.iter().zip(&table) {
            assert!((a - b).abs() < 1e-12);
        }
    }
}
