//! Exhaustive code enumeration by level, oracle counts, identity
//! cross-validation, and catalog export.
//!
//! The enumerator walks every grammar-valid word of each length in
//! lexicographic order (R < V < T). A three-state transfer matrix predicts
//! the counts independently; [`cross_validate`] checks the counts and every
//! structural identity the crate promises, code by code, and reports all
//! violations as data instead of panicking.

use std::io::Write;
use std::time::{Duration, Instant};

use serde::{Deserialize, Serialize};

use crate::arith::add;
use crate::codes::{derived_to_rvt, rvt_to_derived, truncate_last_stage, Letter, RvtCode};
use crate::error::{Error, Result};
use crate::formula::{divisibility_points, puiseux_from_derived};
use crate::recursion::{e_operator, puiseux_from_rvt, split_code};
use crate::curves::{puiseux_from_exponents, witness_exponents};
use crate::vectors::DerivedVector;

/// How many codes a level holds, split by criticality.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LevelCounts {
    pub level: u64,
    pub total: u64,
    pub critical: u64,
}

/// Predicts per-level code counts without enumerating.
///
/// Tracks how many valid words of each length end in R, V and T: R and V may
/// follow anything, T only follows V or T. Seeded with the single level-2
/// word RR.
pub fn transfer_matrix_counts(max_level: u64) -> Result<Vec<LevelCounts>> {
    let mut out = Vec::new();
    if max_level < 2 {
        return Ok(out);
    }
    let (mut r, mut v, mut t) = (1u64, 0u64, 0u64);
    out.push(LevelCounts { level: 2, total: 1, critical: 0 });
    for level in 3..=max_level {
        let any = add(add(r, v, "transfer matrix")?, t, "transfer matrix")?;
        let vt = add(v, t, "transfer matrix")?;
        (r, v, t) = (any, any, vt);
        let critical = add(v, t, "transfer matrix")?;
        out.push(LevelCounts {
            level,
            total: add(any, critical, "transfer matrix")?,
            critical,
        });
    }
    Ok(out)
}

/// Fibonacci numbers with F(1) = F(2) = 1, checked.
pub fn fibonacci(n: u64) -> Result<u64> {
    let (mut a, mut b) = (0u64, 1u64);
    for _ in 0..n {
        (a, b) = (b, add(a, b, "Fibonacci number")?);
    }
    Ok(a)
}

fn generate_level(level: usize, only_critical: bool) -> Vec<RvtCode> {
    fn extend(letters: &mut Vec<Letter>, target: usize, only_critical: bool, out: &mut Vec<RvtCode>) {
        if letters.len() == target {
            if !only_critical || *letters.last().unwrap() != Letter::R {
                out.push(
                    RvtCode::from_letters(letters.clone())
                        .expect("generated words satisfy the grammar"),
                );
            }
            return;
        }
        let last = *letters.last().unwrap();
        for next in [Letter::R, Letter::V, Letter::T] {
            if next == Letter::T && last == Letter::R {
                continue;
            }
            letters.push(next);
            extend(letters, target, only_critical, out);
            letters.pop();
        }
    }

    let mut out = Vec::new();
    if level < 2 {
        return out;
    }
    let mut letters = Vec::with_capacity(level);
    letters.push(Letter::R);
    letters.push(Letter::R);
    extend(&mut letters, level, only_critical, &mut out);
    out
}

/// Iterates every valid code of levels 2 through `max_level`, level by level,
/// lexicographically (R < V < T) within a level.
///
/// Counts grow like Fibonacci numbers, so levels much past 25 stop being
/// practical to walk.
pub struct CodeEnumerator {
    max_level: u64,
    only_critical: bool,
    level: u64,
    buffer: std::vec::IntoIter<RvtCode>,
}

impl CodeEnumerator {
    pub fn new(max_level: u64, only_critical: bool) -> Self {
        CodeEnumerator {
            max_level,
            only_critical,
            level: 1,
            buffer: Vec::new().into_iter(),
        }
    }
}

impl Iterator for CodeEnumerator {
    type Item = RvtCode;

    fn next(&mut self) -> Option<RvtCode> {
        loop {
            if let Some(code) = self.buffer.next() {
                return Some(code);
            }
            if self.level >= self.max_level {
                return None;
            }
            self.level += 1;
            self.buffer = generate_level(self.level as usize, self.only_critical).into_iter();
        }
    }
}

/// Everything the catalog knows about one germ.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InfoRecord {
    pub code: String,
    pub level: u64,
    pub dim: u64,
    pub sgv: String,
    pub der: String,
    pub der_blocks: String,
    pub critical: bool,
    pub puiseux: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
    pub g: u64,
    pub sgv_length: u64,
}

/// [`InfoRecord`] wrapped with a schema marker, for single-record JSON output.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InfoDocument {
    pub schema: u32,
    #[serde(flatten)]
    pub record: InfoRecord,
}

impl InfoRecord {
    pub fn from_code(code: &RvtCode) -> Result<Self> {
        let der = rvt_to_derived(code)?;
        let geo = der.geometry()?;
        let critical = code.is_critical();
        let (puiseux, reason) = if critical {
            (Some(puiseux_from_derived(&der)?.to_string()), None)
        } else {
            (
                None,
                Some("the code ends in R; the germ is immersed with normal form (t, 0)".to_string()),
            )
        };
        Ok(InfoRecord {
            code: code.word(),
            level: geo.level,
            dim: geo.dim,
            sgv: der.to_sgv()?.to_string(),
            der: der.to_string(),
            der_blocks: der.blocks_string(),
            critical,
            puiseux,
            reason,
            g: geo.g,
            sgv_length: geo.sgv_length,
        })
    }

    pub fn from_derived(der: &DerivedVector) -> Result<Self> {
        Self::from_code(&derived_to_rvt(der)?)
    }

    pub fn into_document(self) -> InfoDocument {
        InfoDocument { schema: 1, record: self }
    }
}

/// One failed identity, reported as data.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub code: String,
    pub check: String,
    pub left: String,
    pub right: String,
}

/// Per-level record of the growth-vector length bound.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FibExtreme {
    pub level: u64,
    /// The bound F(level + 2).
    pub bound: u64,
    /// Largest growth-vector length seen at this level.
    pub max_sgv_length: u64,
    /// Lexicographically first code attaining the maximum.
    pub code: String,
}

/// Outcome of a full cross-validation sweep.
#[derive(Debug, Clone)]
pub struct CensusReport {
    pub max_level: u64,
    pub levels: Vec<LevelCounts>,
    pub fib_extremes: Vec<FibExtreme>,
    pub failures: Vec<Violation>,
    pub elapsed: Duration,
}

impl CensusReport {
    pub fn is_clean(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn total_codes(&self) -> u64 {
        self.levels.iter().map(|l| l.total).sum()
    }

    pub fn total_critical(&self) -> u64 {
        self.levels.iter().map(|l| l.critical).sum()
    }

    /// Human-readable table plus any failures.
    pub fn summary(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!(
            "census to level {}: {} codes, {} critical, {} failed checks, {:.3}s\n",
            self.max_level,
            self.total_codes(),
            self.total_critical(),
            self.failures.len(),
            self.elapsed.as_secs_f64(),
        ));
        out.push_str("level    codes  critical  max_sgv_len  bound  extremal_code\n");
        for (counts, fib) in self.levels.iter().zip(&self.fib_extremes) {
            out.push_str(&format!(
                "{:>5} {:>8} {:>9} {:>12} {:>6}  {}\n",
                counts.level, counts.total, counts.critical, fib.max_sgv_length, fib.bound, fib.code,
            ));
        }
        for v in &self.failures {
            out.push_str(&format!(
                "FAIL {}: {} (left = {}, right = {})\n",
                v.code, v.check, v.left, v.right
            ));
        }
        out
    }
}

fn record(failures: &mut Vec<Violation>, code: &RvtCode, check: &str, left: String, right: String) {
    failures.push(Violation {
        code: code.word(),
        check: check.to_string(),
        left,
        right,
    });
}

/// Runs every promised identity on one code. Returns the growth-vector
/// length, or `None` when decoding already failed; hard errors are reserved
/// for overflow.
fn examine(code: &RvtCode, failures: &mut Vec<Violation>) -> Result<Option<u64>> {
    let der = match rvt_to_derived(code) {
        Ok(der) => der,
        Err(e @ Error::Overflow(_)) => return Err(e),
        Err(e) => {
            record(failures, code, "decode", e.to_string(), String::new());
            return Ok(None);
        }
    };

    // Code -> vector -> code.
    match derived_to_rvt(&der) {
        Ok(back) if back == *code => {}
        Ok(back) => record(failures, code, "re-encode", back.word(), code.word()),
        Err(e) => record(failures, code, "re-encode", e.to_string(), String::new()),
    }

    // Vector -> growth vector -> vector.
    let sgv = der.to_sgv()?;
    if sgv.to_derived() != der {
        record(failures, code, "growth-vector round trip", sgv.to_string(), der.to_string());
    }

    let geo = der.geometry()?;

    if code.is_critical() {
        examine_critical(code, &der, failures)?;
    }

    Ok(Some(geo.sgv_length))
}

fn examine_critical(code: &RvtCode, der: &DerivedVector, failures: &mut Vec<Violation>) -> Result<()> {
    let blocks = der.blocks();

    // The two Puiseux routes must agree exactly.
    let direct = match puiseux_from_derived(der) {
        Ok(pc) => pc,
        Err(e @ Error::Overflow(_)) => return Err(e),
        Err(e) => {
            record(failures, code, "direct formula", e.to_string(), String::new());
            return Ok(());
        }
    };
    let staged = match puiseux_from_rvt(code) {
        Ok(pc) => pc,
        Err(e @ Error::Overflow(_)) => return Err(e),
        Err(e) => {
            record(failures, code, "stage recursion", e.to_string(), String::new());
            return Ok(());
        }
    };
    if direct != staged {
        record(failures, code, "formula vs recursion", direct.to_string(), staged.to_string());
    }

    // The multiplicity must be the last block value.
    if direct.lambda0() != blocks[blocks.len() - 1].value {
        record(
            failures,
            code,
            "multiplicity = M_{v+1}",
            direct.lambda0().to_string(),
            blocks[blocks.len() - 1].value.to_string(),
        );
    }

    // Genus from three angles: gcd chain, distinguished blocks, stages.
    let profile = divisibility_points(der);
    let decomp = split_code(code)?;
    if profile.g() != direct.g() || decomp.q() != direct.g() {
        record(
            failures,
            code,
            "genus agreement",
            format!("blocks {} stages {}", profile.g(), decomp.q()),
            direct.g().to_string(),
        );
    }

    // Divisible pairs past the first block must keep their R run positive.
    let runs = code.profile();
    for j in 2..blocks.len() {
        if blocks[j].value % blocks[j - 1].value == 0 && runs.r[j - 1] == 0 {
            record(
                failures,
                code,
                "positive R run at divisible pair",
                format!("r_{j}"),
                "0".to_string(),
            );
        }
    }

    // Stage pairs stay coprime with a < b.
    for omega in &decomp.strings {
        let pair = e_operator(omega)?;
        if pair.a() >= pair.b() || crate::arith::gcd(pair.a(), pair.b()) != 1 {
            record(
                failures,
                code,
                "stage pair coprime",
                pair.a().to_string(),
                pair.b().to_string(),
            );
        }
    }

    // The characteristic itself passes the gcd-chain rules.
    let check = crate::puiseux::check_puiseux(direct.lambda0(), direct.exponents());
    if !check.valid {
        record(
            failures,
            code,
            "gcd chain",
            direct.to_string(),
            check.reason.unwrap_or_default(),
        );
    }

    // The smallest support with these exponents reads back identically.
    let support = witness_exponents(&direct);
    match puiseux_from_exponents(&support) {
        Ok(pc) if pc == direct => {}
        Ok(pc) => record(failures, code, "witness round trip", pc.to_string(), direct.to_string()),
        Err(e) => record(failures, code, "witness round trip", e.to_string(), String::new()),
    }

    // Dropping the last stage must match cutting the code's tail.
    if profile.g() >= 2 {
        match truncate_last_stage(der) {
            Ok(t) => {
                let mut rebuilt = derived_to_rvt(&t.beta)?.letters().to_vec();
                for _ in 0..t.s {
                    rebuilt.push(Letter::R);
                }
                rebuilt.extend_from_slice(&t.omega);
                if rebuilt != code.letters() {
                    record(
                        failures,
                        code,
                        "stage truncation reassembly",
                        crate::codes::word_of(&rebuilt),
                        code.word(),
                    );
                }
            }
            Err(e) => record(failures, code, "stage truncation", e.to_string(), String::new()),
        }
    }

    Ok(())
}

/// Walks every code up to `max_level` and checks the full identity suite:
/// decode/encode round trips, growth-vector round trips, agreement of the
/// two Puiseux routes, multiplicity and genus identities, positive R runs at
/// divisible pairs, coprime stage pairs, gcd-chain validity, witness round
/// trips, stage truncation, per-level counts against the transfer matrix,
/// and the Fibonacci bound on growth-vector length.
pub fn cross_validate(max_level: u64) -> Result<CensusReport> {
    if max_level < 3 {
        return Err(Error::Precondition("cross-validation needs max_level >= 3".into()));
    }
    let start = Instant::now();
    let predicted = transfer_matrix_counts(max_level)?;
    let mut levels = Vec::new();
    let mut fib_extremes = Vec::new();
    let mut failures = Vec::new();

    for level in 2..=max_level {
        let codes = generate_level(level as usize, false);
        let mut critical = 0u64;
        let mut best: Option<(u64, String)> = None;
        for code in &codes {
            if code.is_critical() {
                critical += 1;
            }
            let sgv_length = examine(code, &mut failures)
                .map_err(|e| census_overflow(e, level))?;
            if let Some(len) = sgv_length {
                let beats = best.as_ref().map_or(true, |(max, _)| len > *max);
                if beats {
                    best = Some((len, code.word()));
                }
            }
        }

        let counted = LevelCounts { level, total: codes.len() as u64, critical };
        let expected = predicted[(level - 2) as usize];
        if counted != expected {
            failures.push(Violation {
                code: format!("<level {level}>"),
                check: "enumeration vs transfer matrix".to_string(),
                left: format!("{} total, {} critical", counted.total, counted.critical),
                right: format!("{} total, {} critical", expected.total, expected.critical),
            });
        }

        let bound = fibonacci(add(level, 2, "Fibonacci index")?)?;
        let (max_sgv_length, extremal) = best.expect("every level holds at least one code");
        if max_sgv_length > bound {
            failures.push(Violation {
                code: extremal.clone(),
                check: "Fibonacci bound".to_string(),
                left: max_sgv_length.to_string(),
                right: bound.to_string(),
            });
        }
        levels.push(counted);
        fib_extremes.push(FibExtreme { level, bound, max_sgv_length, code: extremal });
    }

    Ok(CensusReport {
        max_level,
        levels,
        fib_extremes,
        failures,
        elapsed: start.elapsed(),
    })
}

fn census_overflow(e: Error, level: u64) -> Error {
    match e {
        Error::Overflow(what) => Error::Overflow(format!("census at level {level}: {what}")),
        other => other,
    }
}

/// The per-level growth-vector length maxima alone, without the full check
/// suite.
pub fn fibonacci_extremes(max_level: u64) -> Result<Vec<FibExtreme>> {
    let mut out = Vec::new();
    for level in 2..=max_level {
        let mut best: Option<(u64, String)> = None;
        for code in generate_level(level as usize, false) {
            let der = rvt_to_derived(&code).map_err(|e| census_overflow(e, level))?;
            let len = der.geometry().map_err(|e| census_overflow(e, level))?.sgv_length;
            let beats = best.as_ref().map_or(true, |(max, _)| len > *max);
            if beats {
                best = Some((len, code.word()));
            }
        }
        let bound = fibonacci(add(level, 2, "Fibonacci index")?)?;
        let (max_sgv_length, code) = best.expect("every level holds at least one code");
        out.push(FibExtreme { level, bound, max_sgv_length, code });
    }
    Ok(out)
}

/// Writes one JSON object per code, levels 2 through `max_level`.
pub fn write_catalog_jsonl<W: Write>(mut writer: W, max_level: u64) -> Result<()> {
    for code in CodeEnumerator::new(max_level, false) {
        let mut rec = InfoRecord::from_code(&code)?;
        rec.reason = None;
        let line = serde_json::to_string(&rec).map_err(|e| Error::Io(e.to_string()))?;
        writeln!(writer, "{line}")?;
    }
    Ok(())
}

/// Writes an RFC 4180 CSV catalog with a header row, levels 2 through
/// `max_level`.
pub fn write_catalog_csv<W: Write>(writer: W, max_level: u64) -> Result<()> {
    let mut wtr = csv::Writer::from_writer(writer);
    wtr.write_record([
        "code", "level", "dim", "sgv", "der", "der_blocks", "critical", "puiseux", "g",
        "sgv_length",
    ])
    .map_err(|e| Error::Io(e.to_string()))?;
    for code in CodeEnumerator::new(max_level, false) {
        let rec = InfoRecord::from_code(&code)?;
        wtr.write_record([
            rec.code.as_str(),
            &rec.level.to_string(),
            &rec.dim.to_string(),
            &rec.sgv,
            &rec.der,
            &rec.der_blocks,
            if rec.critical { "true" } else { "false" },
            rec.puiseux.as_deref().unwrap_or(""),
            &rec.g.to_string(),
            &rec.sgv_length.to_string(),
        ])
        .map_err(|e| Error::Io(e.to_string()))?;
    }
    wtr.flush()?;
    Ok(())
}
