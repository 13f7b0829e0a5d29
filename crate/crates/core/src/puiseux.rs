//! The Puiseux characteristic `[λ0; λ1, ..., λg]` and its validity rules.

use std::fmt;

use crate::arith::gcd;
use crate::error::{Error, Result};

/// The Puiseux characteristic of a well-parametrized singular plane branch.
///
/// `λ0` is the multiplicity and `λ1 < ... < λg` are the characteristic
/// exponents. Validity: `λ0 >= 2`, the full sequence increases strictly, and
/// the chain `e0 = λ0`, `e_j = gcd(e_{j-1}, λ_j)` decreases strictly until
/// `e_g = 1`. Values outside u64 are not representable.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PuiseuxCharacteristic {
    lambda0: u64,
    exponents: Vec<u64>,
}

/// Outcome of running the gcd-chain rules over a candidate characteristic.
///
/// `e_chain` holds as much of the chain as was built before a rule failed;
/// on success it is the full chain `e0, e1, ..., eg` ending in 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PuiseuxCheck {
    pub valid: bool,
    pub e_chain: Vec<u64>,
    pub reason: Option<String>,
}

/// Runs every validity rule and reports the first failure, if any.
pub fn check_puiseux(lambda0: u64, exponents: &[u64]) -> PuiseuxCheck {
    let mut e_chain = vec![lambda0];
    let fail = |e_chain: Vec<u64>, reason: String| PuiseuxCheck {
        valid: false,
        e_chain,
        reason: Some(reason),
    };

    if lambda0 < 2 {
        return fail(e_chain, format!("λ0 must be at least 2, got {lambda0}"));
    }
    let mut e = lambda0;
    let mut prev = lambda0;
    for (idx, &lam) in exponents.iter().enumerate() {
        let j = idx + 1;
        if lam <= prev {
            return fail(
                e_chain,
                format!("exponents must increase strictly: λ{j} = {lam} does not exceed {prev}"),
            );
        }
        let next = gcd(e, lam);
        if next == e {
            return fail(
                e_chain,
                format!("gcd chain must decrease strictly: e{j} = gcd({e}, {lam}) stays at {e}"),
            );
        }
        e = next;
        prev = lam;
        e_chain.push(e);
    }
    if e != 1 {
        return fail(e_chain, format!("gcd chain must end at 1, got e{} = {e}", exponents.len()));
    }
    PuiseuxCheck { valid: true, e_chain, reason: None }
}

impl PuiseuxCharacteristic {
    /// Validates and builds a characteristic; see the type docs for the rules.
    pub fn new(lambda0: u64, exponents: Vec<u64>) -> Result<Self> {
        let check = check_puiseux(lambda0, &exponents);
        match check.reason {
            None => Ok(PuiseuxCharacteristic { lambda0, exponents }),
            Some(reason) => Err(Error::InvalidPuiseux(reason)),
        }
    }

    /// The multiplicity λ0 = e0.
    pub fn lambda0(&self) -> u64 {
        self.lambda0
    }

    /// The characteristic exponents λ1, ..., λg.
    pub fn exponents(&self) -> &[u64] {
        &self.exponents
    }

    /// The genus g, i.e. the number of characteristic exponents.
    pub fn g(&self) -> usize {
        self.exponents.len()
    }

    /// The chain e0 = λ0, e_j = gcd(e_{j-1}, λ_j); always ends in 1.
    pub fn gcd_chain(&self) -> Vec<u64> {
        let mut chain = vec![self.lambda0];
        let mut e = self.lambda0;
        for &lam in &self.exponents {
            e = gcd(e, lam);
            chain.push(e);
        }
        chain
    }
}

impl fmt::Display for PuiseuxCharacteristic {
    /// Renders as `[λ0; λ1, λ2, ...]`, e.g. `[24; 90, 94, 103]`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}; ", self.lambda0)?;
        for (i, lam) in self.exponents.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{lam}")?;
        }
        write!(f, "]")
    }
}
