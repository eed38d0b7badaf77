//! Value types shared by every construction.

use std::fmt;
use std::ops::Deref;

use crate::error::{Error, Result};
use crate::oracle;

/// A non-empty byte string to be preprocessed.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Pattern {
    bytes: Box<[u8]>,
}

impl Pattern {
    pub fn new(raw: impl Into<Vec<u8>>) -> Result<Self> {
        let bytes = raw.into();
        if bytes.is_empty() {
            return Err(Error::EmptyPattern);
        }
        Ok(Pattern {
            bytes: bytes.into_boxed_slice(),
        })
    }

    pub fn as_bytes(&self) -> &[u8] {
        &self.bytes
    }

    /// Pattern length `m`, always at least 1.
    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> usize {
        self.bytes.len()
    }

    /// The last letter, the pivot of the run-based constructions.
    pub fn last(&self) -> u8 {
        self.bytes[self.bytes.len() - 1]
    }

    /// Distinct bytes occurring in the pattern, in increasing order.
    pub fn alphabet(&self) -> Vec<u8> {
        let mut seen = [false; 256];
        for &b in self.bytes.iter() {
            seen[b as usize] = true;
        }
        (0..=255u8).filter(|&b| seen[b as usize]).collect()
    }

    /// Length of the maximal run of the last letter that ends the pattern.
    pub fn trailing_run(&self) -> usize {
        let a = self.last();
        self.bytes.iter().rev().take_while(|&&b| b == a).count()
    }
}

impl fmt::Debug for Pattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Pattern({:?})", String::from_utf8_lossy(&self.bytes))
    }
}

impl Deref for Pattern {
    type Target = [u8];

    fn deref(&self) -> &[u8] {
        &self.bytes
    }
}

impl TryFrom<&[u8]> for Pattern {
    type Error = Error;

    fn try_from(raw: &[u8]) -> Result<Self> {
        Pattern::new(raw)
    }
}

impl TryFrom<&str> for Pattern {
    type Error = Error;

    fn try_from(raw: &str) -> Result<Self> {
        Pattern::new(raw.as_bytes())
    }
}

pub fn pattern_from_bytes(raw: &[u8]) -> Result<Pattern> {
    Pattern::new(raw)
}

/// `suff[i]`: length of the longest common suffix of the pattern and its
/// prefix ending at `i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuffTable(Vec<usize>);

impl SuffTable {
    pub fn from_vec(values: Vec<usize>) -> Self {
        SuffTable(values)
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn into_vec(self) -> Vec<usize> {
        self.0
    }

    /// Checks every structural invariant of a `suff` table against `x`.
    pub fn check(&self, x: &Pattern) -> Result<()> {
        let m = x.len();
        let v = &self.0;
        if v.len() != m {
            return Err(Error::Invariant(format!(
                "suff has {} entries for m = {m}",
                v.len()
            )));
        }
        if v[m - 1] != m {
            return Err(Error::Invariant(format!("suff[{}] = {} != m", m - 1, v[m - 1])));
        }
        let a = x.last();
        for i in 0..m - 1 {
            if v[i] > i + 1 {
                return Err(Error::Invariant(format!("suff[{i}] = {} > {}", v[i], i + 1)));
            }
            if x[i] != a && v[i] != 0 {
                return Err(Error::Invariant(format!(
                    "suff[{i}] = {} but x[{i}] differs from the last letter",
                    v[i]
                )));
            }
            let prefix_is_suffix = x[m - 1 - i..] == x[..=i];
            if (v[i] == i + 1) != prefix_is_suffix {
                return Err(Error::Invariant(format!(
                    "suff[{i}] = {} disagrees with border test ({prefix_is_suffix})",
                    v[i]
                )));
            }
        }
        Ok(())
    }
}

impl Deref for SuffTable {
    type Target = [usize];

    fn deref(&self) -> &[usize] {
        &self.0
    }
}

/// Good-suffix shift per pattern position.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GoodSuffTable(Vec<usize>);

impl GoodSuffTable {
    pub fn from_vec(values: Vec<usize>) -> Self {
        GoodSuffTable(values)
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn into_vec(self) -> Vec<usize> {
        self.0
    }

    /// Checks `1 <= gs[i] <= m` and that `gs[0]` is the period of `x`.
    pub fn check(&self, x: &Pattern) -> Result<()> {
        let m = x.len();
        if self.0.len() != m {
            return Err(Error::Invariant(format!(
                "good-suff has {} entries for m = {m}",
                self.0.len()
            )));
        }
        if let Some((i, v)) = self.0.iter().enumerate().find(|(_, &v)| v == 0 || v > m) {
            return Err(Error::Invariant(format!("good-suff[{i}] = {v} outside [1, {m}]")));
        }
        let p = oracle::period(x);
        if self.0[0] != p {
            return Err(Error::Invariant(format!(
                "good-suff[0] = {} but the period is {p}",
                self.0[0]
            )));
        }
        Ok(())
    }
}

impl Deref for GoodSuffTable {
    type Target = [usize];

    fn deref(&self) -> &[usize] {
        &self.0
    }
}

/// Bad-character shifts indexed by byte value.
#[derive(Clone, PartialEq, Eq)]
pub struct BadCharTable {
    shift: [usize; 256],
}

impl BadCharTable {
    pub fn new(x: &Pattern) -> Self {
        let m = x.len();
        let mut shift = [m; 256];
        for (i, &c) in x[..m - 1].iter().enumerate() {
            shift[c as usize] = m - 1 - i;
        }
        BadCharTable { shift }
    }

    #[inline]
    pub fn shift(&self, c: u8) -> usize {
        self.shift[c as usize]
    }

    pub fn as_array(&self) -> &[usize; 256] {
        &self.shift
    }
}

impl fmt::Debug for BadCharTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map()
            .entries(self.shift.iter().enumerate())
            .finish()
    }
}

/// Observer of the byte comparisons a construction performs.
///
/// Constructions are generic over the probe so the uninstrumented path
/// compiles down to plain comparisons.
pub trait Probe {
    fn tick(&mut self);

    #[inline(always)]
    fn same(&mut self, a: u8, b: u8) -> bool {
        self.tick();
        a == b
    }
}

/// Probe that records nothing.
#[derive(Clone, Copy, Debug, Default)]
pub struct NoProbe;

impl Probe for NoProbe {
    #[inline(always)]
    fn tick(&mut self) {}
}

/// Counts byte-equality tests.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct ComparisonCounter {
    count: u64,
}

impl ComparisonCounter {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn count(&self) -> u64 {
        self.count
    }

    pub fn reset(&mut self) {
        self.count = 0;
    }
}

impl Probe for ComparisonCounter {
    #[inline(always)]
    fn tick(&mut self) {
        self.count += 1;
    }
}
