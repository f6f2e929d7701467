//! Foata's fundamental transformation.
//!
//! The forward map writes the canonical cycle decomposition of `π` (each cycle
//! starting at its minimum, cycles by decreasing minimum) and erases the
//! parentheses. Cycle minima become exactly the left-to-right minima of the
//! resulting word, which is what makes the map invertible: cutting the word
//! before every left-to-right minimum recovers the cycles.

use crate::perm::{CycleDecomposition, Permutation};

pub fn foata_forward(pi: &Permutation) -> Permutation {
    Permutation::from_vec_unchecked(pi.cycle_decomposition().flatten())
}

pub fn foata_inverse(sigma: &Permutation) -> Permutation {
    let values = sigma.values();
    let mut cycles: Vec<Vec<usize>> = Vec::new();
    let mut running_min = usize::MAX;
    for &v in values {
        if v < running_min {
            running_min = v;
            cycles.push(Vec::new());
        }
        cycles
            .last_mut()
            .expect("first entry opens a block")
            .push(v);
    }
    CycleDecomposition::from_cycles(cycles)
        .expect("blocks of a permutation partition 1..=n")
        .to_permutation()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mesh::{named_pattern, NamedPattern};

    fn perm(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    #[test]
    fn worked_example() {
        assert_eq!(foata_forward(&perm("213967548")), perm("567498312"));
        assert_eq!(foata_inverse(&perm("567498312")), perm("213967548"));
    }

    #[test]
    fn small_cases() {
        assert_eq!(foata_forward(&perm("1")), perm("1"));
        assert_eq!(foata_forward(&perm("123")), perm("321"));
        assert_eq!(foata_inverse(&perm("321")), perm("123"));
        assert_eq!(foata_inverse(&perm("1")), perm("1"));
        assert_eq!(foata_forward(&perm("")), perm(""));
        assert_eq!(foata_inverse(&perm("")), perm(""));
    }

    #[test]
    fn bijective_and_transfers_statistics() {
        let ssfp = named_pattern(NamedPattern::SkewStrongFixedPoint);
        for n in 0..=7 {
            for pi in Permutation::all(n) {
                let sigma = foata_forward(&pi);
                assert_eq!(foata_inverse(&sigma), pi);
                assert_eq!(foata_forward(&foata_inverse(&pi)), pi);
                assert_eq!(pi.num_cycles(), sigma.left_to_right_minima().len());
                assert_eq!(
                    pi.strong_fixed_points().len(),
                    ssfp.count_occurrences(&sigma)
                );
            }
        }
    }
}
