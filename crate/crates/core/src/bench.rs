//! Construction-time benchmark with CSV output.
//!
//! Every `(sigma, m)` cell draws its own patterns from a seed derived from
//! the run seed, so pattern sets are identical across runs and independent
//! of which cells or algorithms are selected. Only table construction is
//! timed: patterns and buffers are prepared beforehand, and one untimed
//! pass over the cell's patterns warms each algorithm up.

use std::fmt::Write as _;
use std::hint::black_box;
use std::io::Write as _;
use std::path::{Path, PathBuf};
use std::time::Instant;

use tempfile::NamedTempFile;

use crate::algorithm::{Algorithm, Scratch};
use crate::error::{Error, Result};
use crate::rng::{cell_seed, gen_random_string, SplitMix64};
use crate::types::Pattern;

pub const CSV_HEADER: &str = "sigma,m,algo,strings,reps,total_ns,ns_per_call";

/// Above this length the brute-force oracle needs `allow_slow`.
pub const BF_MAX_LEN: usize = 4096;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BenchConfig {
    pub sigmas: Vec<usize>,
    pub lengths: Vec<usize>,
    pub strings_per_cell: usize,
    pub reps: usize,
    pub seed: u64,
    pub algos: Vec<Algorithm>,
    pub out: Option<PathBuf>,
    pub allow_slow: bool,
}

impl Default for BenchConfig {
    fn default() -> Self {
        BenchConfig {
            sigmas: vec![2, 4, 20, 70],
            lengths: doubling(2, 1024),
            strings_per_cell: 100,
            reps: 100,
            seed: 0x5EED,
            algos: Algorithm::ALL.to_vec(),
            out: None,
            allow_slow: false,
        }
    }
}

/// `from, 2*from, ..` up to and including `to`.
pub fn doubling(from: usize, to: usize) -> Vec<usize> {
    std::iter::successors(Some(from), |&m| m.checked_mul(2))
        .take_while(|&m| m <= to)
        .collect()
}

impl BenchConfig {
    pub fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::InvalidConfig(msg));
        if self.sigmas.is_empty() || self.lengths.is_empty() || self.algos.is_empty() {
            return bad("sigmas, lengths and algos must be non-empty".into());
        }
        if let Some(s) = self.sigmas.iter().find(|s| !(2..=256).contains(*s)) {
            return bad(format!("alphabet size {s} is outside [2, 256]"));
        }
        if let Some(m) = self.lengths.iter().find(|&&m| m < 2) {
            return bad(format!("pattern length {m} is below 2"));
        }
        if self.reps == 0 || self.strings_per_cell == 0 {
            return bad("reps and strings per cell must be at least 1".into());
        }
        let longest = self.lengths.iter().copied().max().unwrap_or(0);
        if self.algos.contains(&Algorithm::Bf) && longest > BF_MAX_LEN && !self.allow_slow {
            return bad(format!(
                "bf is cubic; m = {longest} exceeds {BF_MAX_LEN} (pass --allow-slow to run it anyway)"
            ));
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct BenchRecord {
    pub sigma: usize,
    pub m: usize,
    pub algo: Algorithm,
    pub strings: usize,
    pub reps: usize,
    pub total_ns: u64,
    pub ns_per_call: f64,
}

impl BenchRecord {
    pub fn csv_row(&self) -> String {
        format!(
            "{},{},{},{},{},{},{:.3}",
            self.sigma, self.m, self.algo, self.strings, self.reps, self.total_ns, self.ns_per_call
        )
    }
}

/// The patterns timed in cell `(sigma, m)`.
pub fn cell_patterns(seed: u64, sigma: usize, m: usize, count: usize) -> Result<Vec<Pattern>> {
    let mut rng = SplitMix64::new(cell_seed(seed, sigma, m));
    (0..count)
        .map(|_| gen_random_string(m, sigma, &mut rng))
        .collect()
}

/// Total nanoseconds for `reps` constructions of each pattern.
pub fn time_cell(algo: Algorithm, patterns: &[Pattern], reps: usize) -> u64 {
    let max_len = patterns.iter().map(|p| p.len()).max().unwrap_or(0);
    let mut scratch = Scratch::new(max_len);
    for p in patterns {
        algo.build_into(black_box(p), &mut scratch);
    }
    let mut total = 0u128;
    for p in patterns {
        let start = Instant::now();
        for _ in 0..reps {
            algo.build_into(black_box(p.as_bytes()), &mut scratch);
            black_box(scratch.good_suff(p.len()));
        }
        total += start.elapsed().as_nanos();
    }
    u64::try_from(total).unwrap_or(u64::MAX)
}

/// Runs every cell in order, one at a time, and writes the CSV when
/// `cfg.out` is set. The output location is claimed before any timing so an
/// unwritable path fails fast.
pub fn run_benchmark(cfg: &BenchConfig) -> Result<Vec<BenchRecord>> {
    cfg.validate()?;
    let pending = cfg.out.as_deref().map(open_output).transpose()?;

    let mut records = Vec::new();
    for &sigma in &cfg.sigmas {
        for &m in &cfg.lengths {
            let patterns = cell_patterns(cfg.seed, sigma, m, cfg.strings_per_cell)?;
            for &algo in &cfg.algos {
                let total_ns = time_cell(algo, &patterns, cfg.reps);
                let calls = (cfg.strings_per_cell * cfg.reps) as f64;
                records.push(BenchRecord {
                    sigma,
                    m,
                    algo,
                    strings: cfg.strings_per_cell,
                    reps: cfg.reps,
                    total_ns,
                    ns_per_call: total_ns as f64 / calls,
                });
            }
        }
    }

    if let (Some(file), Some(path)) = (pending, cfg.out.as_deref()) {
        persist_csv(file, path, &records)?;
    }
    Ok(records)
}

pub fn to_csv(records: &[BenchRecord]) -> String {
    let mut out = String::with_capacity(64 * (records.len() + 1));
    out.push_str(CSV_HEADER);
    out.push('\n');
    for r in records {
        let _ = writeln!(out, "{}", r.csv_row());
    }
    out
}

fn open_output(path: &Path) -> Result<NamedTempFile> {
    let dir = match path.parent() {
        Some(d) if !d.as_os_str().is_empty() => d,
        _ => Path::new("."),
    };
    NamedTempFile::new_in(dir).map_err(|e| Error::io(path, e))
}

fn persist_csv(mut file: NamedTempFile, path: &Path, records: &[BenchRecord]) -> Result<()> {
    file.write_all(to_csv(records).as_bytes())
        .and_then(|_| file.flush())
        .map_err(|e| Error::io(path, e))?;
    file.persist(path).map_err(|e| Error::io(path, e.error))?;
    Ok(())
}

/// Writes `records` to `path` atomically.
pub fn write_csv(records: &[BenchRecord], path: &Path) -> Result<()> {
    let file = open_output(path)?;
    persist_csv(file, path, records)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tiny() -> BenchConfig {
        BenchConfig {
            sigmas: vec![2],
            lengths: doubling(2, 1024),
            strings_per_cell: 2,
            reps: 1,
            seed: 9,
            algos: Algorithm::ALL.to_vec(),
            out: None,
            allow_slow: false,
        }
    }

    #[test]
    fn doubling_lengths() {
        assert_eq!(doubling(2, 1024).len(), 10);
        assert_eq!(doubling(2, 16), vec![2, 4, 8, 16]);
    }

    #[test]
    fn record_count_and_csv_rows() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("bench.csv");
        let cfg = BenchConfig { out: Some(path.clone()), ..tiny() };
        let records = run_benchmark(&cfg).unwrap();
        assert_eq!(records.len(), 50);
        let text = std::fs::read_to_string(&path).unwrap();
        let mut lines = text.split('\n');
        assert_eq!(lines.next(), Some(CSV_HEADER));
        assert_eq!(text.lines().count(), 51);
        assert!(text.ends_with('\n') && !text.contains('\r'));
    }

    #[test]
    fn single_call_cells() {
        let cfg = BenchConfig {
            strings_per_cell: 1,
            lengths: vec![8],
            ..tiny()
        };
        for r in run_benchmark(&cfg).unwrap() {
            assert_eq!(r.ns_per_call, r.total_ns as f64);
        }
    }

    #[test]
    fn validation() {
        assert!(BenchConfig::default().validate().is_ok());
        let slow = BenchConfig { lengths: vec![8192], ..tiny() };
        assert!(slow.validate().is_err());
        assert!(BenchConfig { allow_slow: true, ..slow.clone() }.validate().is_ok());
        assert!(BenchConfig { algos: vec![Algorithm::Cl], ..slow }.validate().is_ok());
        assert!(BenchConfig { sigmas: vec![1], ..tiny() }.validate().is_err());
        assert!(BenchConfig { sigmas: vec![257], ..tiny() }.validate().is_err());
        assert!(BenchConfig { lengths: vec![1], ..tiny() }.validate().is_err());
        assert!(BenchConfig { reps: 0, ..tiny() }.validate().is_err());
        assert!(BenchConfig { strings_per_cell: 0, ..tiny() }.validate().is_err());
    }

    #[test]
    fn unwritable_output_fails_before_timing() {
        let cfg = BenchConfig {
            out: Some(PathBuf::from("/nonexistent-dir/for/bench.csv")),
            ..tiny()
        };
        assert!(matches!(run_benchmark(&cfg), Err(Error::Io { .. })));
    }

    #[test]
    fn cell_patterns_are_reproducible() {
        let a = cell_patterns(1, 4, 32, 5).unwrap();
        assert_eq!(a, cell_patterns(1, 4, 32, 5).unwrap());
        assert_ne!(a, cell_patterns(2, 4, 32, 5).unwrap());
        assert!(a.iter().all(|p| p.len() == 32 && p.iter().all(|&b| b < 4)));
    }
}
