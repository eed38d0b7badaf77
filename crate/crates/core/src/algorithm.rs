//! The five interchangeable good-suffix constructions.

use std::fmt;
use std::str::FromStr;

use crate::error::Error;
use crate::types::{GoodSuffTable, Pattern, SuffTable};
use crate::{classical, finetuned, oracle};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Algorithm {
    /// Brute force straight from the definition.
    Bf,
    /// Classical `suff` then good-suffix passes.
    Cl,
    /// Linear run-based construction.
    Ft1,
    /// Quadratic run-based construction, no `suff` table.
    Ft2,
    /// Mixed run-based / classical construction.
    Ft3,
}

impl Algorithm {
    pub const ALL: [Algorithm; 5] = [
        Algorithm::Bf,
        Algorithm::Cl,
        Algorithm::Ft1,
        Algorithm::Ft2,
        Algorithm::Ft3,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Algorithm::Bf => "bf",
            Algorithm::Cl => "cl",
            Algorithm::Ft1 => "ft1",
            Algorithm::Ft2 => "ft2",
            Algorithm::Ft3 => "ft3",
        }
    }

    pub fn good_suffix(self, x: &Pattern) -> GoodSuffTable {
        match self {
            Algorithm::Bf => oracle::good_suff(x),
            Algorithm::Cl => classical::good_suffixes(x, &classical::suffixes(x)),
            Algorithm::Ft1 => finetuned::ft1(x).1,
            Algorithm::Ft2 => finetuned::ft2(x),
            Algorithm::Ft3 => finetuned::ft3(x).1,
        }
    }

    /// Both tables, for the constructions that produce a `suff` table.
    pub fn tables(self, x: &Pattern) -> (Option<SuffTable>, GoodSuffTable) {
        match self {
            Algorithm::Cl => {
                let suff = classical::suffixes(x);
                let gs = classical::good_suffixes(x, &suff);
                (Some(suff), gs)
            }
            Algorithm::Ft1 => {
                let (suff, gs) = finetuned::ft1(x);
                (Some(suff), gs)
            }
            Algorithm::Ft3 => {
                let (suff, gs) = finetuned::ft3(x);
                (Some(suff), gs)
            }
            Algorithm::Bf | Algorithm::Ft2 => (None, self.good_suffix(x)),
        }
    }

    /// Runs the construction into reusable buffers. Only the good-suffix
    /// buffer is meaningful afterwards.
    #[inline]
    pub fn build_into(self, x: &[u8], scratch: &mut Scratch) {
        let m = x.len();
        let (suff, gs) = (&mut scratch.suff[..m], &mut scratch.gs[..m]);
        match self {
            Algorithm::Bf => oracle::good_suff_into(x, gs),
            Algorithm::Cl => classical::build_into(x, suff, gs, &mut crate::NoProbe),
            Algorithm::Ft1 => finetuned::ft1_build(x, suff, gs),
            Algorithm::Ft2 => finetuned::ft2_build(x, gs),
            Algorithm::Ft3 => finetuned::ft3_build(x, suff, gs),
        }
    }
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Algorithm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        Algorithm::ALL
            .into_iter()
            .find(|a| a.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::UnknownAlgorithm(s.to_owned()))
    }
}

/// Preallocated table buffers, so timed runs exclude allocation.
#[derive(Clone, Debug)]
pub struct Scratch {
    suff: Vec<usize>,
    gs: Vec<usize>,
}

impl Scratch {
    pub fn new(max_len: usize) -> Self {
        Scratch {
            suff: vec![0; max_len],
            gs: vec![0; max_len],
        }
    }

    pub fn good_suff(&self, m: usize) -> &[usize] {
        &self.gs[..m]
    }
}
