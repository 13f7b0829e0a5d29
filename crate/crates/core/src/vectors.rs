//! Small growth vectors and derived vectors, with conversions between them.
//!
//! A small growth vector lists flag dimensions `(2, 3, ..., n)` where each
//! dimension below the last may repeat. Its derived vector records the
//! multiplicities of all dimensions except the last, which always appears
//! exactly once. The two forms carry the same data; the derived vector is the
//! compact one and is what the coding relations consume.

use std::fmt;
use std::str::FromStr;

use crate::arith::{add, as_len, mul};
use crate::error::{Error, Result};

/// One run `value^count` inside a derived vector.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Block {
    /// The repeated entry `M`.
    pub value: u64,
    /// How many consecutive flat entries equal `value`; written `m` in block form.
    pub count: u64,
}

/// A derived vector: positive, non-decreasing, nonempty.
///
/// Stored in run-length block form `(M_1^{m_1}, ..., M_{v+1}^{m_{v+1}})` with
/// `M_1 < M_2 < ... < M_{v+1}`. The flat entry at 1-based position `i` is the
/// multiplicity of flag dimension `i + 1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DerivedVector {
    blocks: Vec<Block>,
}

/// A small growth vector: starts at 2, climbs by steps of 0 or 1, and the
/// final dimension appears exactly once. Multiplicities of the non-final
/// dimensions must be non-decreasing so that the derived vector they form is
/// again non-decreasing.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SmallGrowthVector {
    dims: Vec<u64>,
}

/// Headline numbers attached to one derived vector.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GeometrySummary {
    /// Number of flat entries `N`; equals the letter-code length.
    pub level: u64,
    /// Ambient manifold dimension `N + 2`.
    pub dim: u64,
    /// Length of the small growth vector, `1 + sum of all entries`.
    pub sgv_length: u64,
    /// Number of blocks minus one.
    pub v: u64,
    /// Number of adjacent block pairs whose values divide, `M_i | M_{i+1}`.
    pub g: u64,
}

impl DerivedVector {
    /// Builds from flat entries, e.g. `[1, 1, 2, 2, 2]`.
    pub fn from_flat(entries: &[u64]) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::MalformedDerived("needs at least one entry".into()));
        }
        let mut blocks: Vec<Block> = Vec::new();
        for (idx, &d) in entries.iter().enumerate() {
            if d == 0 {
                return Err(Error::MalformedDerived(format!(
                    "entries must be positive, got 0 at position {}",
                    idx + 1
                )));
            }
            match blocks.last_mut() {
                Some(last) if last.value == d => last.count += 1,
                Some(last) if last.value > d => {
                    return Err(Error::MalformedDerived(format!(
                        "entries must be non-decreasing, got {d} after {} at position {}",
                        last.value,
                        idx + 1
                    )));
                }
                _ => blocks.push(Block { value: d, count: 1 }),
            }
        }
        Ok(DerivedVector { blocks })
    }

    /// Builds from `(value, count)` runs, e.g. `[(1, 2), (2, 6), (4, 1)]`.
    pub fn from_blocks(pairs: &[(u64, u64)]) -> Result<Self> {
        if pairs.is_empty() {
            return Err(Error::MalformedDerived("needs at least one block".into()));
        }
        let mut blocks = Vec::with_capacity(pairs.len());
        let mut total = 0u64;
        for (idx, &(value, count)) in pairs.iter().enumerate() {
            if value == 0 {
                return Err(Error::MalformedDerived(format!(
                    "block values must be positive, got 0 in block {}",
                    idx + 1
                )));
            }
            if count == 0 {
                return Err(Error::MalformedDerived(format!(
                    "block counts must be positive, got {value}^0 in block {}",
                    idx + 1
                )));
            }
            if let Some(prev) = pairs.get(idx.wrapping_sub(1)).filter(|_| idx > 0) {
                if prev.0 >= value {
                    return Err(Error::MalformedDerived(format!(
                        "block values must increase strictly, got {value} after {} in block {}",
                        prev.0,
                        idx + 1
                    )));
                }
            }
            total = add(total, count, "derived vector length")?;
            blocks.push(Block { value, count });
        }
        Ok(DerivedVector { blocks })
    }

    /// Parses the flat comma-separated form, e.g. `"1,1,2,2,2"`.
    pub fn parse_flat(text: &str) -> Result<Self> {
        Self::from_flat(&parse_u64_list(text)?)
    }

    /// Parses the block form, e.g. `"1^2 2^6 4 6^3 18 24^2"`. A bare value
    /// means count 1.
    pub fn parse_blocks(text: &str) -> Result<Self> {
        let mut pairs = Vec::new();
        for atom in text.split_whitespace() {
            let (value, count) = match atom.split_once('^') {
                Some((v, c)) => (parse_u64(v)?, parse_u64(c)?),
                None => (parse_u64(atom)?, 1),
            };
            pairs.push((value, count));
        }
        if pairs.is_empty() {
            return Err(Error::Parse("empty block form".into()));
        }
        Self::from_blocks(&pairs)
    }

    /// The run-length blocks, values strictly increasing.
    pub fn blocks(&self) -> &[Block] {
        &self.blocks
    }

    /// The blocks as plain `(value, count)` pairs.
    pub fn block_pairs(&self) -> Vec<(u64, u64)> {
        self.blocks.iter().map(|b| (b.value, b.count)).collect()
    }

    /// Expands to the flat entry list.
    pub fn flat(&self) -> Result<Vec<u64>> {
        let cap = as_len(self.level(), "flat derived vector")?;
        let mut out = Vec::with_capacity(cap);
        for b in &self.blocks {
            for _ in 0..b.count {
                out.push(b.value);
            }
        }
        Ok(out)
    }

    /// Number of flat entries `N`. Equals the level of the germ and the
    /// length of its letter code.
    pub fn level(&self) -> u64 {
        // The sum was overflow-checked when the blocks were built.
        self.blocks.iter().map(|b| b.count).sum()
    }

    /// Number of blocks minus one; the letter codes pair `v` with the number
    /// of V letters.
    pub fn v(&self) -> usize {
        self.blocks.len() - 1
    }

    /// True when `m_1 = M_2`, i.e. the first block is exactly as long as the
    /// second block's value. Critical vectors are the ones with Puiseux data.
    pub fn is_critical(&self) -> bool {
        self.blocks.len() >= 2 && self.blocks[0].count == self.blocks[1].value
    }

    /// `sum of m_i * M_i` over all blocks, checked.
    pub fn sum_entries(&self) -> Result<u64> {
        let mut total = 0u64;
        for b in &self.blocks {
            total = add(total, mul(b.value, b.count, "derived entry sum")?, "derived entry sum")?;
        }
        Ok(total)
    }

    /// Expands back to the small growth vector.
    pub fn to_sgv(&self) -> Result<SmallGrowthVector> {
        let total = add(self.sum_entries()?, 1, "growth vector length")?;
        let cap = as_len(total, "growth vector length")?;
        let mut dims = Vec::with_capacity(cap);
        let mut position = 0u64;
        for b in &self.blocks {
            for _ in 0..b.count {
                // position + 2 <= sum_entries + 1, so this cannot wrap.
                let dim = position + 2;
                for _ in 0..b.value {
                    dims.push(dim);
                }
                position += 1;
            }
        }
        dims.push(position + 2);
        Ok(SmallGrowthVector { dims })
    }

    /// Level, ambient dimension, growth-vector length, v and g in one struct.
    pub fn geometry(&self) -> Result<GeometrySummary> {
        let level = self.level();
        Ok(GeometrySummary {
            level,
            dim: add(level, 2, "ambient dimension")?,
            sgv_length: add(self.sum_entries()?, 1, "growth vector length")?,
            v: self.v() as u64,
            g: self.divisible_pairs(),
        })
    }

    /// Counts adjacent block pairs with `M_i | M_{i+1}`.
    pub(crate) fn divisible_pairs(&self) -> u64 {
        self.blocks
            .windows(2)
            .filter(|w| w[1].value % w[0].value == 0)
            .count() as u64
    }

    /// Renders the block form, e.g. `"1^2 2^6 4 6^3 18 24^2"`; count 1 is
    /// written bare.
    pub fn blocks_string(&self) -> String {
        let atoms: Vec<String> = self
            .blocks
            .iter()
            .map(|b| {
                if b.count == 1 {
                    b.value.to_string()
                } else {
                    format!("{}^{}", b.value, b.count)
                }
            })
            .collect();
        atoms.join(" ")
    }
}

impl fmt::Display for DerivedVector {
    /// Flat comma-separated form, e.g. `1,1,2,2,2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for b in &self.blocks {
            for _ in 0..b.count {
                if !first {
                    write!(f, ",")?;
                }
                write!(f, "{}", b.value)?;
                first = false;
            }
        }
        Ok(())
    }
}

impl FromStr for DerivedVector {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        DerivedVector::parse_flat(s)
    }
}

impl SmallGrowthVector {
    /// Validates and builds from flag dimensions.
    pub fn new(dims: Vec<u64>) -> Result<Self> {
        if dims.len() < 2 {
            return Err(Error::MalformedSgv(
                "needs at least two entries, starting (2, 3, ...)".into(),
            ));
        }
        if dims[0] != 2 {
            return Err(Error::MalformedSgv(format!("must start at 2, got {}", dims[0])));
        }
        for (idx, w) in dims.windows(2).enumerate() {
            let ok = w[1] == w[0] || w[1] == w[0] + 1;
            if !ok {
                return Err(Error::MalformedSgv(format!(
                    "consecutive entries may repeat or grow by 1, got {} then {} at position {}",
                    w[0],
                    w[1],
                    idx + 2
                )));
            }
        }
        if dims[dims.len() - 1] == dims[dims.len() - 2] {
            return Err(Error::MalformedSgv(format!(
                "the final dimension {} must appear exactly once",
                dims[dims.len() - 1]
            )));
        }
        // Multiplicities of the non-final dimensions must be non-decreasing,
        // otherwise the derived vector would decrease.
        let runs = run_lengths(&dims);
        for (idx, w) in runs[..runs.len() - 1].windows(2).enumerate() {
            if w[1] < w[0] {
                return Err(Error::MalformedSgv(format!(
                    "dimension {} repeats {} times but dimension {} before it repeats {} times",
                    dims[0] + idx as u64 + 1,
                    w[1],
                    dims[0] + idx as u64,
                    w[0]
                )));
            }
        }
        Ok(SmallGrowthVector { dims })
    }

    /// Parses the comma-separated form, e.g. `"2,3,4,4,5"`.
    pub fn parse(text: &str) -> Result<Self> {
        Self::new(parse_u64_list(text)?)
    }

    /// The flag dimensions.
    pub fn dims(&self) -> &[u64] {
        &self.dims
    }

    /// Collapses to the derived vector: run lengths of every dimension except
    /// the final one.
    pub fn to_derived(&self) -> DerivedVector {
        let runs = run_lengths(&self.dims);
        DerivedVector::from_flat(&runs[..runs.len() - 1])
            .expect("run lengths of a valid growth vector form a valid derived vector")
    }
}

impl fmt::Display for SmallGrowthVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, d) in self.dims.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{d}")?;
        }
        Ok(())
    }
}

impl FromStr for SmallGrowthVector {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        SmallGrowthVector::parse(s)
    }
}

fn run_lengths(values: &[u64]) -> Vec<u64> {
    let mut runs = Vec::new();
    let mut iter = values.iter();
    if let Some(&first) = iter.next() {
        let mut current = first;
        let mut count = 1u64;
        for &x in iter {
            if x == current {
                count += 1;
            } else {
                runs.push(count);
                current = x;
                count = 1;
            }
        }
        runs.push(count);
    }
    runs
}

fn parse_u64(text: &str) -> Result<u64> {
    let t = text.trim();
    t.parse::<u64>().map_err(|_| Error::Parse(format!("expected a number, got '{t}'")))
}

fn parse_u64_list(text: &str) -> Result<Vec<u64>> {
    let trimmed = text.trim();
    if trimmed.is_empty() {
        return Err(Error::Parse("empty list".into()));
    }
    trimmed.split(',').map(parse_u64).collect()
}
