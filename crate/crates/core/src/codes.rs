//! Letter codes over {R, V, T} and the coding relations that pair each code
//! with a derived vector.
//!
//! Grammar: a code starts with R, never places T directly after R, and needs
//! at least two leading R letters as soon as any V appears. Codes ending in V
//! or T are critical; those are exactly the germs with Puiseux data.

use std::fmt;
use std::str::FromStr;

use crate::arith::{add, as_len, mul};
use crate::error::{Error, Result};
use crate::vectors::DerivedVector;

/// One code letter.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Letter {
    R,
    V,
    T,
}

impl Letter {
    pub fn as_char(self) -> char {
        match self {
            Letter::R => 'R',
            Letter::V => 'V',
            Letter::T => 'T',
        }
    }

    pub fn from_char(c: char) -> Option<Letter> {
        match c {
            'R' => Some(Letter::R),
            'V' => Some(Letter::V),
            'T' => Some(Letter::T),
            _ => None,
        }
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.as_char())
    }
}

/// Renders a letter slice as an uppercase word.
pub fn word_of(letters: &[Letter]) -> String {
    letters.iter().map(|l| l.as_char()).collect()
}

/// A grammar-checked code word. Positions in errors are 1-based from the left.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RvtCode {
    letters: Vec<Letter>,
}

/// Run lengths of a code, read off right to left.
///
/// The word factors as `R^{r_{v+1}} V T^{t_v} R^{r_v} ... V T^{t_1} R^{r_1}`
/// where `v` counts the V letters. Slot `j - 1` of `t` and `r` holds `t_j`
/// and `r_j`; the extra last entry of `r` is the leading run `r_{v+1}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CodeProfile {
    pub v: usize,
    pub t: Vec<u64>,
    pub r: Vec<u64>,
}

impl RvtCode {
    /// Parses an uppercase word such as `"RRVT"`.
    pub fn parse(word: &str) -> Result<Self> {
        let mut letters = Vec::with_capacity(word.len());
        for (idx, c) in word.chars().enumerate() {
            match Letter::from_char(c) {
                Some(l) => letters.push(l),
                None => return Err(Error::BadAlphabet { position: idx + 1, found: c }),
            }
        }
        Self::from_letters(letters)
    }

    /// Validates the grammar and takes ownership of the letters.
    pub fn from_letters(letters: Vec<Letter>) -> Result<Self> {
        if letters.first() != Some(&Letter::R) {
            return Err(Error::MissingLeadingRr { position: 1 });
        }
        if letters.get(1) == Some(&Letter::V) {
            return Err(Error::MissingLeadingRr { position: 2 });
        }
        for (idx, w) in letters.windows(2).enumerate() {
            if w[1] == Letter::T && w[0] == Letter::R {
                return Err(Error::TAfterR { position: idx + 2 });
            }
        }
        Ok(RvtCode { letters })
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn word(&self) -> String {
        word_of(&self.letters)
    }

    /// The code length; equals the level of the germ it names.
    pub fn level(&self) -> u64 {
        self.letters.len() as u64
    }

    /// True when the last letter is V or T.
    pub fn is_critical(&self) -> bool {
        matches!(self.letters.last(), Some(Letter::V) | Some(Letter::T))
    }

    /// Reads the run lengths right to left.
    pub fn profile(&self) -> CodeProfile {
        let v = self.letters.iter().filter(|&&l| l == Letter::V).count();
        let mut t = Vec::with_capacity(v);
        let mut r = Vec::with_capacity(v + 1);
        let mut i = self.letters.len();
        for _ in 0..v {
            let mut run = 0u64;
            while i > 0 && self.letters[i - 1] == Letter::R {
                run += 1;
                i -= 1;
            }
            r.push(run);
            run = 0;
            while i > 0 && self.letters[i - 1] == Letter::T {
                run += 1;
                i -= 1;
            }
            t.push(run);
            debug_assert_eq!(self.letters[i - 1], Letter::V);
            i -= 1;
        }
        // The grammar leaves only R letters before the first V.
        debug_assert!(self.letters[..i].iter().all(|&l| l == Letter::R));
        r.push(i as u64);
        CodeProfile { v, t, r }
    }
}

impl fmt::Display for RvtCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for l in &self.letters {
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

impl FromStr for RvtCode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        RvtCode::parse(s)
    }
}

/// Result of cutting the last characteristic stage off a critical germ.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StageTruncation {
    /// Derived vector of the germ one stage down.
    pub beta: DerivedVector,
    /// Length of the R run removed together with `omega`.
    pub s: u64,
    /// The removed critical string; the full code is the beta code followed
    /// by `R^s` followed by `omega`.
    pub omega: Vec<Letter>,
}

impl StageTruncation {
    pub fn omega_word(&self) -> String {
        word_of(&self.omega)
    }
}

fn push_run(out: &mut Vec<Letter>, letter: Letter, count: u64) -> Result<()> {
    let n = as_len(count, "code length")?;
    out.extend(std::iter::repeat(letter).take(n));
    Ok(())
}

/// Encodes a derived vector as its unique code word.
///
/// Realizable vectors have `M_1 = 1` and satisfy, per block `j = 2..=v`,
/// either `M_j | M_{j+1}` with `m_j >= M_{j+1}/M_j` (the run `r_j` must stay
/// positive) or the recurrence `M_{j+1} = m_j M_j + M_{j-1}`. Everything else
/// is rejected as [`Error::NotRealizable`].
pub fn derived_to_rvt(der: &DerivedVector) -> Result<RvtCode> {
    let blocks = der.blocks();
    if blocks[0].value != 1 {
        return Err(Error::NotRealizable(format!(
            "the first block value must be 1, got M_1 = {}",
            blocks[0].value
        )));
    }
    let v = blocks.len() - 1;
    if v == 0 {
        let len = as_len(blocks[0].count, "code length")?;
        return RvtCode::from_letters(vec![Letter::R; len]);
    }

    let m2 = blocks[1].value;
    if blocks[0].count < m2 {
        return Err(Error::NotRealizable(format!(
            "r_1 = m_1 - M_2 would be negative: m_1 = {}, M_2 = {m2}",
            blocks[0].count
        )));
    }
    // Slot j - 1 holds t_j / r_j.
    let mut t = vec![m2 - 2];
    let mut r = vec![blocks[0].count - m2];
    for j in 2..=v {
        let value = blocks[j - 1].value;
        let next = blocks[j].value;
        let count = blocks[j - 1].count;
        if next % value == 0 {
            let ratio = next / value;
            if count < ratio {
                return Err(Error::NotRealizable(format!(
                    "block {j}: r_{j} = m_{j} - M_{}/M_{j} + 1 must be positive, \
                     got m_{j} = {count} against ratio {ratio}",
                    j + 1
                )));
            }
            t.push(ratio - 2);
            r.push(count - ratio + 1);
        } else {
            let expected = add(mul(count, value, "block recurrence")?, blocks[j - 2].value, "block recurrence")?;
            if next != expected {
                return Err(Error::NotRealizable(format!(
                    "block {j}: M_{} must equal m_{j} M_{j} + M_{} = {expected}, got {next}",
                    j + 1,
                    j - 1
                )));
            }
            t.push(count - 1);
            r.push(0);
        }
    }
    let leading = add(blocks[v].count, 1, "leading run length")?;

    let cap = as_len(der.level(), "code length")?;
    let mut letters = Vec::with_capacity(cap);
    push_run(&mut letters, Letter::R, leading)?;
    for j in (1..=v).rev() {
        letters.push(Letter::V);
        push_run(&mut letters, Letter::T, t[j - 1])?;
        push_run(&mut letters, Letter::R, r[j - 1])?;
    }
    RvtCode::from_letters(letters)
}

/// Decodes a code word back to its derived vector.
///
/// The result is re-encoded and compared against the input; a mismatch means
/// the word lies outside the image of the coding relations (or an
/// implementation fault) and comes back as [`Error::RoundTripFailure`].
pub fn rvt_to_derived(code: &RvtCode) -> Result<DerivedVector> {
    let der = decode_profile(&code.profile())?;
    match derived_to_rvt(&der) {
        Ok(back) if back == *code => Ok(der),
        _ => Err(Error::RoundTripFailure { code: code.word() }),
    }
}

fn decode_profile(p: &CodeProfile) -> Result<DerivedVector> {
    if p.v == 0 {
        return DerivedVector::from_blocks(&[(1, p.r[0])]);
    }
    // values[i] = M_{i+1}, counts[i] = m_{i+1}.
    let mut values = vec![1u64, add(p.t[0], 2, "M_2")?];
    let mut counts = vec![add(values[1], p.r[0], "m_1")?];
    for j in 2..=p.v {
        let tj = p.t[j - 1];
        let rj = p.r[j - 1];
        if rj >= 1 {
            values.push(mul(add(tj, 2, "block value")?, values[j - 1], "block value")?);
            counts.push(add(rj, add(tj, 1, "block count")?, "block count")?);
        } else {
            let count = add(tj, 1, "block count")?;
            values.push(add(mul(count, values[j - 1], "block value")?, values[j - 2], "block value")?);
            counts.push(count);
        }
    }
    // The leading run r_{v+1} is at least 2 whenever v >= 1.
    counts.push(p.r[p.v] - 1);
    let pairs: Vec<(u64, u64)> = values.into_iter().zip(counts).collect();
    DerivedVector::from_blocks(&pairs)
}

/// Cuts the final characteristic stage off a critical germ.
///
/// Needs `m_1 = M_2` (criticality) and at least two stages, i.e. a second
/// divisible block pair beyond `(M_1, M_2)`. Where `r` is the smallest block
/// index `j >= 2` with `M_j | M_{j+1}`, the removed suffix is `R^s omega` with
/// `s = m_r - M_{r+1}/M_r + 1` and `omega` the code's trailing critical
/// string; `beta` is checked to decode from the remaining prefix.
pub fn truncate_last_stage(der: &DerivedVector) -> Result<StageTruncation> {
    if !der.is_critical() {
        return Err(Error::NotCritical("truncation needs m_1 = M_2".into()));
    }
    let code = derived_to_rvt(der)?;
    if der.divisible_pairs() < 2 {
        return Err(Error::SingleStage);
    }
    let blocks = der.blocks();
    let v = der.v();
    let r = (2..=v)
        .find(|&j| blocks[j].value % blocks[j - 1].value == 0)
        .expect("a second divisible pair exists past the first block");

    let ratio = blocks[r].value / blocks[r - 1].value;
    let s = blocks[r - 1].count - ratio + 1;

    // omega = V T^{m_{r-1}-1} ... V T^{m_2-1} V T^{M_2-2}.
    let mut omega = Vec::new();
    for idx in (2..r).rev() {
        omega.push(Letter::V);
        push_run(&mut omega, Letter::T, blocks[idx - 1].count - 1)?;
    }
    omega.push(Letter::V);
    push_run(&mut omega, Letter::T, blocks[1].value - 2)?;

    // Scale the tail of the vector down by M_r.
    let m_r_value = blocks[r - 1].value;
    let mut pairs = vec![(1u64, ratio)];
    for i in 2..=(v - r + 2) {
        let b = blocks[r + i - 2];
        debug_assert_eq!(b.value % m_r_value, 0);
        pairs.push((b.value / m_r_value, b.count));
    }
    let beta = DerivedVector::from_blocks(&pairs)?;

    // The full code must split as (beta code) R^s omega.
    let fail = || Error::RoundTripFailure { code: code.word() };
    let suffix_len = as_len(s, "suffix length")? + omega.len();
    let letters = code.letters();
    let head_len = letters.len().checked_sub(suffix_len).ok_or_else(fail)?;
    let (head, tail) = letters.split_at(head_len);
    let mut expected_tail = vec![Letter::R; as_len(s, "suffix length")?];
    expected_tail.extend_from_slice(&omega);
    if tail != expected_tail.as_slice() {
        return Err(fail());
    }
    let beta_code = RvtCode::from_letters(head.to_vec()).map_err(|_| fail())?;
    if rvt_to_derived(&beta_code)? != beta {
        return Err(fail());
    }

    Ok(StageTruncation { beta, s, omega })
}
