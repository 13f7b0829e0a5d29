//! Puiseux characteristics straight from the derived vector, no recursion.
//!
//! The multiplicity is the last block value `M_{v+1}`. Each characteristic
//! exponent comes from one distinguished block index: the positions where a
//! block value divides the next one.

use crate::arith::{add, mul};
use crate::codes::derived_to_rvt;
use crate::error::{Error, Result};
use crate::puiseux::PuiseuxCharacteristic;
use crate::vectors::DerivedVector;

/// The block values `N_1 > N_2 > ... > N_g` with `M_{k-1} | M_k`, and their
/// 1-based block indices `k_1 > k_2 > ... > k_g`.
///
/// For realizable vectors the smallest value is always `N_g = M_2` (the first
/// block value is 1, which divides everything), so `g >= 1`; `g` is the genus
/// of the Puiseux characteristic.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DivisibilityProfile {
    pub values: Vec<u64>,
    pub block_indices: Vec<usize>,
}

impl DivisibilityProfile {
    pub fn g(&self) -> usize {
        self.values.len()
    }
}

/// Collects the block values divisible by their predecessor, in decreasing
/// order.
pub fn divisibility_points(der: &DerivedVector) -> DivisibilityProfile {
    let blocks = der.blocks();
    let mut values = Vec::new();
    let mut block_indices = Vec::new();
    for i in 1..blocks.len() {
        if blocks[i].value % blocks[i - 1].value == 0 {
            values.push(blocks[i].value);
            block_indices.push(i + 1);
        }
    }
    values.reverse();
    block_indices.reverse();
    DivisibilityProfile { values, block_indices }
}

/// Puiseux characteristic of a critical germ, straight from its derived
/// vector.
///
/// `lambda_0 = M_{v+1}` and, for the j-th distinguished index `k = k_j`,
/// `lambda_j = sum_{i >= k} m_i M_i + M_k + M_{k-1}`. The vector must be
/// critical (`m_1 = M_2`) and realizable; both are checked first.
pub fn puiseux_from_derived(der: &DerivedVector) -> Result<PuiseuxCharacteristic> {
    if !der.is_critical() {
        return Err(Error::NotCritical(
            "m_1 = M_2 fails; the germ is immersed with normal form (t, 0)".into(),
        ));
    }
    derived_to_rvt(der)?;

    let blocks = der.blocks();
    let n = blocks.len();
    // tail[i] = sum of m_j M_j over blocks j >= i, 1-based.
    let mut tail = vec![0u64; n + 2];
    for i in (1..=n).rev() {
        let term = mul(blocks[i - 1].value, blocks[i - 1].count, "entry sum")?;
        tail[i] = add(tail[i + 1], term, "entry sum")?;
    }

    let profile = divisibility_points(der);
    let mut exps = Vec::with_capacity(profile.g());
    for &k in &profile.block_indices {
        let base = add(tail[k], blocks[k - 1].value, "exponent")?;
        exps.push(add(base, blocks[k - 2].value, "exponent")?);
    }
    PuiseuxCharacteristic::new(blocks[n - 1].value, exps)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::recursion::puiseux_from_rvt;

    fn der(entries: &[u64]) -> DerivedVector {
        DerivedVector::from_flat(entries).unwrap()
    }

    #[test]
    fn distinguished_blocks_in_decreasing_order() {
        let d = DerivedVector::parse_blocks("1^2 2^6 4 6^3 18 24^2").unwrap();
        let p = divisibility_points(&d);
        assert_eq!(p.values, vec![18, 4, 2]);
        assert_eq!(p.block_indices, vec![5, 3, 2]);
        assert_eq!(p.g(), 3);

        let p = divisibility_points(&der(&[1, 1, 2, 3, 3, 8]));
        assert_eq!(p.values, vec![2]);
        assert_eq!(p.block_indices, vec![2]);

        let p = divisibility_points(&der(&[1]));
        assert!(p.values.is_empty());
    }

    #[test]
    fn formula_matches_known_characteristics() {
        let d = DerivedVector::parse_blocks("1^2 2^6 4 6^3 18 24^2").unwrap();
        assert_eq!(puiseux_from_derived(&d).unwrap().to_string(), "[24; 90, 94, 103]");

        assert_eq!(puiseux_from_derived(&der(&[1, 1, 2])).unwrap().to_string(), "[2; 5]");
        assert_eq!(puiseux_from_derived(&der(&[1, 1, 1, 3])).unwrap().to_string(), "[3; 7]");
        assert_eq!(
            puiseux_from_derived(&der(&[1, 1, 2, 3, 5, 8])).unwrap().to_string(),
            "[8; 21]"
        );
    }

    #[test]
    fn formula_agrees_with_stage_recursion() {
        for entries in [
            vec![1u64, 1, 2],
            vec![1, 1, 1, 3, 3],
            vec![1, 1, 2, 2, 4],
            vec![1, 1, 2, 3, 3, 8],
            vec![1, 1, 2, 3, 3, 3, 9, 12, 12],
        ] {
            let d = der(&entries);
            let direct = puiseux_from_derived(&d).unwrap();
            let staged = puiseux_from_rvt(&derived_to_rvt(&d).unwrap()).unwrap();
            assert_eq!(direct, staged, "{entries:?}");
        }
    }

    #[test]
    fn rejects_non_critical_and_unrealizable() {
        assert!(matches!(
            puiseux_from_derived(&der(&[1, 2, 3])).unwrap_err(),
            Error::NotCritical(_)
        ));
        assert!(matches!(
            puiseux_from_derived(&der(&[1, 1, 1])).unwrap_err(),
            Error::NotCritical(_)
        ));
        // Critical (m_1 = 2 = M_2) but fails the block recurrence.
        let d = DerivedVector::from_blocks(&[(1, 2), (2, 2), (7, 1)]).unwrap();
        assert!(matches!(
            puiseux_from_derived(&d).unwrap_err(),
            Error::NotRealizable(_)
        ));
    }

    #[test]
    fn one_stage_closed_form() {
        // R^{m+1} V T^{M-2} gives [M; (m+1)M + 1].
        for m2 in 2u64..=6 {
            for count in 1u64..=6 {
                let d = DerivedVector::from_blocks(&[(1, m2), (m2, count)]).unwrap();
                let pc = puiseux_from_derived(&d).unwrap();
                assert_eq!(pc.lambda0(), m2);
                assert_eq!(pc.exponents(), &[(count + 1) * m2 + 1]);
            }
        }
    }
}
