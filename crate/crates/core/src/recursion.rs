//! Puiseux characteristics computed stage by stage from the code word.
//!
//! A critical code factors into alternating R runs and critical strings
//! (maximal V/T runs). Each critical string contracts, through the E
//! operator, to a coprime pair (a, b); the pairs drive a recursion that adds
//! one characteristic exponent per stage.

use crate::arith::{add, gcd, mul};
use crate::codes::{Letter, RvtCode};
use crate::error::{Error, Result};
use crate::puiseux::PuiseuxCharacteristic;

/// A pair (a, b) with `1 <= a < b` and `gcd(a, b) = 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EPair {
    a: u64,
    b: u64,
}

impl EPair {
    pub fn new(a: u64, b: u64) -> Result<Self> {
        if a == 0 || a >= b || gcd(a, b) != 1 {
            return Err(Error::Precondition(format!(
                "an E-pair needs 1 <= a < b coprime, got ({a}, {b})"
            )));
        }
        Ok(EPair { a, b })
    }

    pub fn a(&self) -> u64 {
        self.a
    }

    pub fn b(&self) -> u64 {
        self.b
    }
}

/// A critical code split into R runs and critical strings.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CodeDecomposition {
    /// R-run lengths `c_0, ..., c_{q-1}`; the leading run has length >= 2.
    pub runs: Vec<u64>,
    /// Critical strings `omega_1, ..., omega_q`, each starting with V.
    pub strings: Vec<Vec<Letter>>,
}

impl CodeDecomposition {
    /// Number of stages; equals the genus of the Puiseux characteristic.
    pub fn q(&self) -> usize {
        self.strings.len()
    }
}

/// Splits a critical code into its R runs and critical strings.
pub fn split_code(code: &RvtCode) -> Result<CodeDecomposition> {
    let letters = code.letters();
    if !letters.contains(&Letter::V) {
        return Err(Error::NoCriticalLetters);
    }
    if !code.is_critical() {
        return Err(Error::NotCritical(
            "a trailing R run leaves nothing for the last stage".into(),
        ));
    }
    let mut runs = Vec::new();
    let mut strings = Vec::new();
    let mut i = 0;
    while i < letters.len() {
        let start = i;
        while i < letters.len() && letters[i] == Letter::R {
            i += 1;
        }
        runs.push((i - start) as u64);
        let s = i;
        while i < letters.len() && letters[i] != Letter::R {
            i += 1;
        }
        strings.push(letters[s..i].to_vec());
    }
    debug_assert!(runs[0] >= 2);
    debug_assert!(strings.iter().all(|s| s.first() == Some(&Letter::V)));
    Ok(CodeDecomposition { runs, strings })
}

/// Contracts one critical string to its pair.
///
/// Starting from (1, 2) and reading the string right to left, T sends
/// (a, b) to (a, a + b) and V sends (a, b) to (b, a + b). Both moves keep
/// a < b and gcd(a, b) = 1.
pub fn e_operator(omega: &[Letter]) -> Result<EPair> {
    if omega.is_empty() {
        return Err(Error::MalformedCriticalString("must be nonempty".into()));
    }
    if omega[0] != Letter::V {
        return Err(Error::MalformedCriticalString(format!(
            "must start with V, got {}",
            omega[0]
        )));
    }
    if omega.contains(&Letter::R) {
        return Err(Error::MalformedCriticalString("must use only V and T".into()));
    }
    let (mut a, mut b) = (1u64, 2u64);
    for &l in omega.iter().rev() {
        let sum = add(a, b, "E-pair entry")?;
        match l {
            Letter::T => b = sum,
            Letter::V => {
                a = b;
                b = sum;
            }
            Letter::R => unreachable!("rejected above"),
        }
    }
    EPair::new(a, b)
}

/// Puiseux characteristic of a critical germ, from its code word.
///
/// With decomposition runs `c_i` and pairs `(a_i, b_i) = E(omega_i)`, stage 1
/// starts `[a_1; (c_0 - 1) a_1 + b_1]`; each later stage scales everything by
/// `a_i` and appends `a_i (lambda_{i-1} + c_{i-1} - 1) + b_i - a_i`, built
/// from the previous stage's unscaled last exponent.
pub fn puiseux_from_rvt(code: &RvtCode) -> Result<PuiseuxCharacteristic> {
    if !code.is_critical() {
        return Err(Error::NotCritical(
            "the code ends in R; the germ is immersed with normal form (t, 0)".into(),
        ));
    }
    let decomp = split_code(code)?;
    let first = e_operator(&decomp.strings[0])?;
    let mut lambda0 = first.a();
    let mut exps = vec![add(
        mul(decomp.runs[0] - 1, first.a(), "first exponent")?,
        first.b(),
        "first exponent",
    )?];
    for i in 1..decomp.q() {
        let pair = e_operator(&decomp.strings[i])?;
        let (a, b) = (pair.a(), pair.b());
        let prev = *exps.last().unwrap();
        let shifted = add(prev, decomp.runs[i] - 1, "stage shift")?;
        let next = add(mul(a, shifted, "stage exponent")?, b - a, "stage exponent")?;
        lambda0 = mul(a, lambda0, "multiplicity")?;
        for e in &mut exps {
            *e = mul(a, *e, "exponent scaling")?;
        }
        exps.push(next);
    }
    PuiseuxCharacteristic::new(lambda0, exps)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn code(word: &str) -> RvtCode {
        RvtCode::parse(word).unwrap()
    }

    fn letters(word: &str) -> Vec<Letter> {
        word.chars().map(|c| Letter::from_char(c).unwrap()).collect()
    }

    #[test]
    fn e_operator_contracts_strings() {
        let cases = [("V", (2, 3)), ("VV", (3, 5)), ("VT", (3, 4)), ("VVT", (4, 7)), ("VVVV", (8, 13))];
        for (word, (a, b)) in cases {
            let pair = e_operator(&letters(word)).unwrap();
            assert_eq!((pair.a(), pair.b()), (a, b), "E({word})");
        }
    }

    #[test]
    fn e_operator_rejects_bad_strings() {
        assert!(matches!(
            e_operator(&[]).unwrap_err(),
            Error::MalformedCriticalString(_)
        ));
        assert!(matches!(
            e_operator(&letters("TV")).unwrap_err(),
            Error::MalformedCriticalString(_)
        ));
        assert!(matches!(
            e_operator(&letters("VRV")).unwrap_err(),
            Error::MalformedCriticalString(_)
        ));
    }

    #[test]
    fn epair_validation() {
        assert!(EPair::new(2, 3).is_ok());
        assert!(EPair::new(2, 2).is_err());
        assert!(EPair::new(3, 2).is_err());
        assert!(EPair::new(0, 1).is_err());
        assert!(EPair::new(3, 6).is_err());
    }

    #[test]
    fn split_walks_runs_and_strings() {
        let d = split_code(&code("RRRVVTRVVRRRRRV")).unwrap();
        assert_eq!(d.runs, vec![3, 1, 5]);
        let words: Vec<String> = d.strings.iter().map(|s| crate::codes::word_of(s)).collect();
        assert_eq!(words, vec!["VVT", "VV", "V"]);
        assert_eq!(d.q(), 3);

        let d = split_code(&code("RRV")).unwrap();
        assert_eq!(d.runs, vec![2]);
        assert_eq!(d.strings, vec![letters("V")]);
    }

    #[test]
    fn split_needs_a_critical_tail() {
        assert!(matches!(
            split_code(&code("RRRR")).unwrap_err(),
            Error::NoCriticalLetters
        ));
        assert!(matches!(
            split_code(&code("RRVR")).unwrap_err(),
            Error::NotCritical(_)
        ));
    }

    #[test]
    fn stage_recursion_matches_known_values() {
        let cases = [
            ("RRV", "[2; 5]"),
            ("RRVT", "[3; 7]"),
            ("RRVVVV", "[8; 21]"),
            ("RRRVVTRVV", "[12; 45, 47]"),
            ("RRRVVTRVVRRRRRV", "[24; 90, 94, 103]"),
        ];
        for (word, expected) in cases {
            assert_eq!(puiseux_from_rvt(&code(word)).unwrap().to_string(), expected, "{word}");
        }
    }

    #[test]
    fn immersed_codes_have_no_characteristic() {
        assert!(matches!(
            puiseux_from_rvt(&code("RRVR")).unwrap_err(),
            Error::NotCritical(_)
        ));
        assert!(matches!(
            puiseux_from_rvt(&code("RR")).unwrap_err(),
            Error::NotCritical(_)
        ));
    }
}
