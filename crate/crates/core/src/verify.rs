//! Oracle-equivalence runs over exhaustive and sampled pattern corpora.

use std::fmt;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::rng::{check_sigma, gen_random_string, SplitMix64};
use crate::types::{GoodSuffTable, Pattern, SuffTable};
use crate::{classical, finetuned, oracle};

/// A length is enumerated exhaustively when it has at most this many
/// patterns.
pub const EXHAUSTIVE_LIMIT: u64 = 1 << 20;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerifyConfig {
    pub sigma: usize,
    pub m_max: usize,
    /// Random patterns drawn for the lengths too large to enumerate.
    pub samples: usize,
    pub seed: u64,
}

/// Which `suff` positions a candidate is expected to get right.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SuffScope {
    None,
    Everywhere,
    /// Only where `x[i]` equals the last letter; elsewhere `suff` is 0 by
    /// definition and run-based constructions never look.
    LastLetter,
}

#[derive(Clone, Copy)]
pub struct Candidate {
    pub name: &'static str,
    pub build: fn(&Pattern) -> (GoodSuffTable, Option<SuffTable>),
    pub suff_scope: SuffScope,
}

impl fmt::Debug for Candidate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Candidate")
            .field("name", &self.name)
            .field("suff_scope", &self.suff_scope)
            .finish()
    }
}

/// `cl`, `ft1`, `ft2` and `ft3`.
pub fn standard_candidates() -> Vec<Candidate> {
    vec![
        Candidate {
            name: "cl",
            build: |x| {
                let suff = classical::suffixes(x);
                (classical::good_suffixes(x, &suff), Some(suff))
            },
            suff_scope: SuffScope::Everywhere,
        },
        Candidate {
            name: "ft1",
            build: |x| {
                let (suff, gs) = finetuned::ft1(x);
                (gs, Some(suff))
            },
            suff_scope: SuffScope::LastLetter,
        },
        Candidate {
            name: "ft2",
            build: |x| (finetuned::ft2(x), None),
            suff_scope: SuffScope::None,
        },
        Candidate {
            name: "ft3",
            build: |x| {
                let (suff, gs) = finetuned::ft3(x);
                (gs, Some(suff))
            },
            suff_scope: SuffScope::LastLetter,
        },
    ]
}

/// A deliberately broken `ft1`, for checking that verification fails.
pub fn mutant_candidate() -> Candidate {
    Candidate {
        name: "ft1-mutant",
        build: |x| (finetuned::ft1_mutant_without_long_run_update(x), None),
        suff_scope: SuffScope::None,
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Counterexample {
    pub algo: &'static str,
    pub table: &'static str,
    pub pattern: Vec<u8>,
    pub expected: Vec<usize>,
    pub got: Vec<usize>,
}

#[derive(Clone, Debug)]
pub struct VerifyReport {
    pub config: VerifyConfig,
    pub candidates: Vec<&'static str>,
    /// Largest length enumerated exhaustively (0 if none).
    pub exhaustive_up_to: usize,
    pub exhaustive_patterns: u64,
    pub sampled_patterns: usize,
    pub failure: Option<Counterexample>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }
}

impl fmt::Display for VerifyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = &self.config;
        writeln!(
            f,
            "verify sigma={} m_max={} samples={} seed={}",
            c.sigma, c.m_max, c.samples, c.seed
        )?;
        writeln!(f, "candidates: {}", self.candidates.join(", "))?;
        if self.exhaustive_up_to > 0 {
            writeln!(
                f,
                "exhaustive: all {} patterns of length 1..={}",
                self.exhaustive_patterns, self.exhaustive_up_to
            )?;
        }
        if self.sampled_patterns > 0 {
            writeln!(
                f,
                "sampled: {} patterns of length {}..={}",
                self.sampled_patterns,
                self.exhaustive_up_to + 1,
                c.m_max
            )?;
        }
        match &self.failure {
            None => write!(f, "PASS"),
            Some(ce) => {
                writeln!(
                    f,
                    "FAIL: {} {} differs from the oracle on pattern {:?} (m = {})",
                    ce.algo,
                    ce.table,
                    ce.pattern,
                    ce.pattern.len()
                )?;
                writeln!(f, "  expected {:?}", ce.expected)?;
                write!(f, "  got      {:?}", ce.got)
            }
        }
    }
}

/// Checks every candidate on one pattern; the first disagreement wins.
pub fn check_pattern(x: &Pattern, candidates: &[Candidate]) -> Option<Counterexample> {
    let want_gs = oracle::good_suff(x);
    let mut want_suff: Option<SuffTable> = None;
    let a = x.last();
    for c in candidates {
        let (gs, suff) = (c.build)(x);
        if gs != want_gs {
            return Some(Counterexample {
                algo: c.name,
                table: "good-suff",
                pattern: x.to_vec(),
                expected: want_gs.into_vec(),
                got: gs.into_vec(),
            });
        }
        let Some(suff) = suff else { continue };
        let want = want_suff.get_or_insert_with(|| oracle::suff(x));
        let agrees = match c.suff_scope {
            SuffScope::None => true,
            SuffScope::Everywhere => suff == *want,
            SuffScope::LastLetter => (0..x.len()).all(|i| x[i] != a || suff[i] == want[i]),
        };
        if !agrees {
            return Some(Counterexample {
                algo: c.name,
                table: "suff",
                pattern: x.to_vec(),
                expected: want.to_vec(),
                got: suff.into_vec(),
            });
        }
    }
    None
}

/// Number of strings of length `m` over `sigma` letters, if at most the
/// exhaustive limit.
fn enumerable(sigma: usize, m: usize) -> Option<u64> {
    let mut n: u64 = 1;
    for _ in 0..m {
        n = n.checked_mul(sigma as u64)?;
        if n > EXHAUSTIVE_LIMIT {
            return None;
        }
    }
    Some(n)
}

/// The `index`-th string of length `m` in lexicographic order.
pub fn nth_string(index: u64, sigma: usize, m: usize) -> Vec<u8> {
    let mut out = vec![0u8; m];
    let mut rest = index;
    for slot in out.iter_mut().rev() {
        *slot = (rest % sigma as u64) as u8;
        rest /= sigma as u64;
    }
    out
}

/// Random patterns for the lengths past the exhaustive range, in the order
/// they are checked.
pub fn sampled_corpus(cfg: &VerifyConfig, from_len: usize) -> Result<Vec<Pattern>> {
    if from_len > cfg.m_max {
        return Ok(Vec::new());
    }
    let mut rng = SplitMix64::new(cfg.seed);
    let span = (cfg.m_max - from_len + 1) as u64;
    (0..cfg.samples)
        .map(|_| {
            let len = from_len + rng.below(span) as usize;
            gen_random_string(len, cfg.sigma, &mut rng)
        })
        .collect()
}

pub fn verify(cfg: &VerifyConfig, candidates: &[Candidate]) -> Result<VerifyReport> {
    check_sigma(cfg.sigma)?;
    if cfg.m_max == 0 {
        return Err(Error::InvalidConfig("m_max must be at least 1".into()));
    }
    let mut report = VerifyReport {
        config: cfg.clone(),
        candidates: candidates.iter().map(|c| c.name).collect(),
        exhaustive_up_to: 0,
        exhaustive_patterns: 0,
        sampled_patterns: 0,
        failure: None,
    };

    for m in 1..=cfg.m_max {
        let Some(count) = enumerable(cfg.sigma, m) else { break };
        report.exhaustive_up_to = m;
        report.exhaustive_patterns += count;
        let failure = (0..count).into_par_iter().find_map_first(|index| {
            let x = Pattern::new(nth_string(index, cfg.sigma, m)).expect("m >= 1");
            check_pattern(&x, candidates)
        });
        if failure.is_some() {
            report.failure = failure;
            return Ok(report);
        }
    }

    let samples = sampled_corpus(cfg, report.exhaustive_up_to + 1)?;
    report.sampled_patterns = samples.len();
    report.failure = samples
        .par_iter()
        .find_map_first(|x| check_pattern(x, candidates));
    Ok(report)
}
