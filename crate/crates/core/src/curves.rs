//! Plane branch supports and the classical gcd-chain reading of their
//! Puiseux characteristic.

use crate::arith::gcd;
use crate::error::{Error, Result};
use crate::puiseux::PuiseuxCharacteristic;

/// A parametrized plane branch `(t^m, sum of c_k t^k)`, reduced to its
/// multiplicity `m >= 2` and the set of exponents `k >= m` appearing with a
/// nonzero coefficient. Exponents are kept sorted and deduplicated.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BranchSupport {
    multiplicity: u64,
    exponents: Vec<u64>,
}

impl BranchSupport {
    pub fn new(multiplicity: u64, mut exponents: Vec<u64>) -> Result<Self> {
        if multiplicity < 2 {
            return Err(Error::MalformedBranch(format!(
                "multiplicity must be at least 2, got {multiplicity}"
            )));
        }
        exponents.sort_unstable();
        exponents.dedup();
        if let Some(&low) = exponents.first() {
            if low < multiplicity {
                return Err(Error::MalformedBranch(format!(
                    "exponent {low} lies below the multiplicity {multiplicity}"
                )));
            }
        }
        Ok(BranchSupport { multiplicity, exponents })
    }

    pub fn multiplicity(&self) -> u64 {
        self.multiplicity
    }

    pub fn exponents(&self) -> &[u64] {
        &self.exponents
    }
}

/// True when the parametrization cannot be rewritten in a smaller variable,
/// i.e. the multiplicity and all support exponents are globally coprime.
pub fn is_well_parametrized(branch: &BranchSupport) -> bool {
    overall_gcd(branch) == 1
}

fn overall_gcd(branch: &BranchSupport) -> u64 {
    let mut g = branch.multiplicity;
    for &k in &branch.exponents {
        g = gcd(g, k);
    }
    g
}

/// Reads the Puiseux characteristic off a branch support.
///
/// Starting with `e = m`, each characteristic exponent is the smallest
/// support exponent not divisible by the current `e`; then `e` drops to
/// `gcd(e, lambda)`. The walk must reach `e = 1`, otherwise the branch is
/// badly parametrized and the shared factor is reported.
pub fn puiseux_from_exponents(branch: &BranchSupport) -> Result<PuiseuxCharacteristic> {
    let mut e = branch.multiplicity;
    let mut exps = Vec::new();
    while e != 1 {
        match branch.exponents.iter().find(|&&k| k % e != 0) {
            Some(&k) => {
                exps.push(k);
                e = gcd(e, k);
            }
            None => return Err(Error::BadlyParametrized { gcd: overall_gcd(branch) }),
        }
    }
    PuiseuxCharacteristic::new(branch.multiplicity, exps)
}

/// The smallest support realizing a characteristic: the multiplicity plus
/// the characteristic exponents themselves.
pub fn witness_exponents(pc: &PuiseuxCharacteristic) -> BranchSupport {
    BranchSupport::new(pc.lambda0(), pc.exponents().to_vec())
        .expect("characteristic exponents form a valid support")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn branch(m: u64, exps: &[u64]) -> BranchSupport {
        BranchSupport::new(m, exps.to_vec()).unwrap()
    }

    #[test]
    fn reads_characteristic_from_support() {
        assert_eq!(
            puiseux_from_exponents(&branch(4, &[6, 7])).unwrap().to_string(),
            "[4; 6, 7]"
        );
        // 8 and 12 are divisible by 4, so 14 opens the chain; then 15.
        assert_eq!(
            puiseux_from_exponents(&branch(4, &[8, 12, 14, 15])).unwrap().to_string(),
            "[4; 14, 15]"
        );
        assert_eq!(
            puiseux_from_exponents(&branch(2, &[3])).unwrap().to_string(),
            "[2; 3]"
        );
        assert_eq!(
            puiseux_from_exponents(&branch(24, &[90, 94, 103])).unwrap().to_string(),
            "[24; 90, 94, 103]"
        );
    }

    #[test]
    fn exponents_divisible_by_the_running_gcd_do_not_matter() {
        let lean = puiseux_from_exponents(&branch(4, &[6, 7])).unwrap();
        let padded = puiseux_from_exponents(&branch(4, &[6, 7, 8, 10, 100])).unwrap();
        assert_eq!(lean, padded);
    }

    #[test]
    fn badly_parametrized_branches_are_rejected() {
        assert_eq!(
            puiseux_from_exponents(&branch(2, &[4])).unwrap_err(),
            Error::BadlyParametrized { gcd: 2 }
        );
        // The chain starts 6 -> 3 but every exponent is divisible by 3.
        assert_eq!(
            puiseux_from_exponents(&branch(6, &[9, 15])).unwrap_err(),
            Error::BadlyParametrized { gcd: 3 }
        );
        // Empty support: the curve is (t^m, 0).
        assert_eq!(
            puiseux_from_exponents(&branch(5, &[])).unwrap_err(),
            Error::BadlyParametrized { gcd: 5 }
        );
        assert!(is_well_parametrized(&branch(4, &[6, 7])));
        assert!(!is_well_parametrized(&branch(6, &[9, 15])));
    }

    #[test]
    fn support_validation() {
        assert!(BranchSupport::new(1, vec![3]).is_err());
        assert!(BranchSupport::new(4, vec![3]).is_err());
        // Unsorted input with duplicates is normalized.
        let b = BranchSupport::new(4, vec![7, 6, 7]).unwrap();
        assert_eq!(b.exponents(), &[6, 7]);
    }

    #[test]
    fn witness_supports_round_trip() {
        for (m, exps) in [(2u64, vec![3u64]), (4, vec![6, 7]), (24, vec![90, 94, 103])] {
            let pc = PuiseuxCharacteristic::new(m, exps).unwrap();
            let support = witness_exponents(&pc);
            assert_eq!(puiseux_from_exponents(&support).unwrap(), pc);
        }
    }
}
