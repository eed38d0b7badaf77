//! Run-based good-suffix constructions.
//!
//! Let `a` be the last letter of `x` and `k1` the length of the run of `a`
//! ending `x`. Positions holding a letter other than `a` have `suff = 0` and
//! never improve a shift, so the scan walks the maximal runs of `a` from
//! right to left:
//!
//! * the trailing run fixes `good-suff` on its own positions and
//!   `good-suff[m-1] = k1` ([`ft_part1`]);
//! * a run shorter than `k1` is preceded by a letter other than `a`, so its
//!   `suff` values are `1, 2, ..` and every shift they imply is already
//!   beaten by the trailing run;
//! * in a run `[l, r]` of length `k >= k1`, positions right of
//!   `e = l + k1 - 1` have `suff = k1` (only `r` matters), positions left of
//!   `e` behave like a short run, and only `e` needs letter comparisons;
//! * once a border of `x` is found, positions inside it only matter when
//!   they end a shorter border.
//!
//! Unassigned shifts start at `m` and every contribution is a min-update, so
//! the order in which runs and borders are processed does not matter.
//!
//! [`ft1`] keeps the classical `f`/`g` window so comparisons stay linear,
//! [`ft2`] recompares every candidate position from scratch and skips the
//! `suff` table entirely, and [`ft3`] runs the classical scan restricted to
//! occurrences of `a`.

use crate::types::{ComparisonCounter, GoodSuffTable, NoProbe, Pattern, Probe, SuffTable};

/// Result of processing the trailing run of the last letter.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TailRun {
    /// Rightmost position left of the trailing run, `None` when `x` is a
    /// single repeated letter.
    pub boundary: Option<usize>,
    /// Length of the trailing run.
    pub k1: usize,
    /// `suff` filled on the trailing run, zero elsewhere.
    pub suff: Vec<usize>,
    /// Final shifts on the trailing run, `m` elsewhere.
    pub good_suff: Vec<usize>,
}

pub fn ft_part1(x: &Pattern) -> TailRun {
    let m = x.len();
    let mut suff = vec![0; m];
    let mut gs = vec![0; m];
    let i = tail_run_into::<_, true>(x, &mut suff, &mut gs, &mut NoProbe);
    TailRun {
        boundary: usize::try_from(i).ok(),
        k1: (m as isize - 1 - i) as usize,
        suff,
        good_suff: gs,
    }
}

/// Fills the trailing run and returns the position just left of it (or -1).
fn tail_run_into<P: Probe, const WRITE_SUFF: bool>(
    x: &[u8],
    suff: &mut [usize],
    gs: &mut [usize],
    probe: &mut P,
) -> isize {
    let m = x.len();
    let a = x[m - 1];
    let mut i = m as isize - 2;
    while i >= 0 && probe.same(x[i as usize], a) {
        i -= 1;
    }
    gs[m - 1] = (m as isize - 1 - i) as usize;
    let start = (i + 1) as usize;
    for (k, j) in (start..m - 1).enumerate() {
        gs[j] = k + 1;
    }
    if WRITE_SUFF {
        suff[m - 1] = m;
        for (k, j) in (start..m - 1).enumerate() {
            suff[j] = k + 1;
        }
    }
    gs[..start].fill(m);
    i
}

/// Applies the shift implied by a border, never revisiting a table index.
///
/// Borders must be reported from longest to shortest; the fill frontier
/// then only moves right, so all calls in one construction write at most
/// `m` cells in total.
#[derive(Clone, Debug, Default)]
pub struct BorderFrontier {
    next: usize,
    writes: usize,
}

impl BorderFrontier {
    pub fn new() -> Self {
        Self::default()
    }

    /// Records the border `x[0..=v]`: every index below `m-1-v` not yet
    /// covered gets `min(gs[t], m-1-v)`.
    ///
    /// Panics when `v >= m - 1`: a border is a proper prefix.
    #[inline]
    pub fn update(&mut self, gs: &mut [usize], v: usize) {
        let m = gs.len();
        assert!(v + 1 < m, "border of length {} is not proper (m = {m})", v + 1);
        let shift = m - 1 - v;
        while self.next < shift {
            let t = self.next;
            gs[t] = gs[t].min(shift);
            self.next += 1;
            self.writes += 1;
        }
    }

    /// Index of the next cell a shorter border would fill.
    pub fn frontier(&self) -> usize {
        self.next
    }

    /// Total cells written so far.
    pub fn writes(&self) -> usize {
        self.writes
    }
}

/// Mutable scan context shared by the three variants.
struct RunScan<'a, P> {
    x: &'a [u8],
    a: u8,
    m: isize,
    k1: isize,
    suff: &'a mut [usize],
    gs: &'a mut [usize],
    borders: BorderFrontier,
    probe: &'a mut P,
}

/// A maximal run `x[l..=r]` of the last letter.
#[derive(Clone, Copy, Debug)]
struct Run {
    l: isize,
    r: isize,
}

impl Run {
    fn len(self) -> isize {
        self.r - self.l + 1
    }
}

impl<'a, P: Probe> RunScan<'a, P> {
    #[inline(always)]
    fn relax(&mut self, index: isize, shift: isize) {
        let cell = &mut self.gs[index as usize];
        *cell = (*cell).min(shift as usize);
    }

    /// Finds the next run at or left of `pos`. `pos` is left one past the
    /// letter that ends the run on the left, which is known not to be `a`.
    #[inline]
    fn next_run(&mut self, pos: &mut isize) -> Option<Run> {
        while *pos >= 0 && !self.probe.same(self.x[*pos as usize], self.a) {
            *pos -= 1;
        }
        if *pos < 0 {
            return None;
        }
        let r = *pos;
        *pos -= 1;
        while *pos >= 0 && self.probe.same(self.x[*pos as usize], self.a) {
            *pos -= 1;
        }
        let l = *pos + 1;
        *pos -= 1;
        Some(Run { l, r })
    }

    #[inline]
    fn fill_ramp(&mut self, from: isize, to: isize) {
        // suff = 1, 2, .. on x[from..to]
        for (k, h) in (from..to).enumerate() {
            self.suff[h as usize] = k + 1;
        }
    }

    /// A run of length > k1 sets `suff = k1` right of `e`; its right end
    /// gives the only useful shift.
    #[inline]
    fn long_run_tail<const WRITE_SUFF: bool>(&mut self, run: Run, e: isize) {
        if WRITE_SUFF {
            for h in e + 1..=run.r {
                self.suff[h as usize] = self.k1 as usize;
            }
        }
        if run.len() > self.k1 {
            self.relax(self.m - 1 - self.k1, self.m - 1 - run.r);
        }
    }

    /// The run touching position 0: each of its prefixes up to length k1
    /// is a border. No position is left to scan afterwards.
    fn leading_run<const WRITE_SUFF: bool, const LONG_RUN: bool>(&mut self, run: Run) {
        debug_assert_eq!(run.l, 0);
        let borders = run.len().min(self.k1);
        if LONG_RUN {
            self.long_run_tail::<WRITE_SUFF>(run, borders - 1);
        } else if WRITE_SUFF {
            for h in borders..=run.r {
                self.suff[h as usize] = self.k1 as usize;
            }
        }
        for v in (0..borders).rev() {
            if WRITE_SUFF {
                self.suff[v as usize] = v as usize + 1;
            }
            self.borders.update(self.gs, v as usize);
        }
    }

    fn border(&mut self, v: isize) {
        self.borders.update(self.gs, v as usize);
    }

    /// Positions left of the longest border `x[0..=f]`: `suff` is read off
    /// the copy of the border that ends `x`, and only shorter borders
    /// change the table.
    fn inside_border(&mut self, mut i: isize, f: isize) {
        let offset = self.m - 1 - f;
        while i >= 0 {
            if self.probe.same(self.x[i as usize], self.a) {
                let mirrored = self.suff[(i + offset) as usize];
                if mirrored > i as usize {
                    self.suff[i as usize] = i as usize + 1;
                    self.border(i);
                } else {
                    self.suff[i as usize] = mirrored;
                }
            }
            i -= 1;
        }
    }

    /// Extends the match of `x[..=f]` against the suffix of `x` leftward
    /// from `g`; returns the first mismatch position or -1.
    #[inline(always)]
    fn extend(&mut self, mut g: isize, f: isize) -> isize {
        let offset = self.m - 1 - f;
        while g >= 0 && self.probe.same(self.x[g as usize], self.x[(g + offset) as usize]) {
            g -= 1;
        }
        g
    }
}

/// Linear run-based construction. `LONG_RUN` switches off the update for
/// runs longer than k1, which only exists to build a known-bad mutant.
fn ft1_into<P: Probe, const LONG_RUN: bool>(
    x: &[u8],
    suff: &mut [usize],
    gs: &mut [usize],
    probe: &mut P,
) {
    let m = x.len() as isize;
    let i0 = tail_run_into::<P, true>(x, suff, gs, probe);
    if i0 < 0 {
        return;
    }
    let mut scan = RunScan {
        x,
        a: x[(m - 1) as usize],
        m,
        k1: m - 1 - i0,
        suff,
        gs,
        borders: BorderFrontier::new(),
        probe,
    };
    let k1 = scan.k1;
    // x[g+1..=f] matches the suffix of x of length f - g; g = m means no
    // window yet.
    let (mut f, mut g) = (0isize, m);
    let mut pos = i0 - 1;
    while let Some(run) = scan.next_run(&mut pos) {
        if run.l == 0 {
            scan.leading_run::<true, LONG_RUN>(run);
            return;
        }
        if run.len() < k1 {
            scan.fill_ramp(run.l, run.r + 1);
            continue;
        }
        let e = run.l + k1 - 1;
        if LONG_RUN {
            scan.long_run_tail::<true>(run, e);
        } else {
            for h in e + 1..=run.r {
                scan.suff[h as usize] = k1 as usize;
            }
        }
        scan.fill_ramp(run.l, e);

        let mut known = false;
        if g < e {
            let mirrored = scan.suff[(e + m - 1 - f) as usize];
            let bound = (e - g) as usize;
            if mirrored != bound {
                scan.suff[e as usize] = mirrored.min(bound);
                known = true;
            }
        }
        if !known {
            // x[l..=e] is a^k1 and already matches the end of x.
            g = g.min(run.l - 1);
            f = e;
            g = scan.extend(g, f);
            scan.suff[e as usize] = (f - g) as usize;
            if g < 0 {
                scan.border(e);
                // run.l - 1 holds a letter other than a
                scan.inside_border(run.l - 2, e);
                return;
            }
        }
        let s = scan.suff[e as usize] as isize;
        scan.relax(m - 1 - s, m - 1 - e);
    }
}

fn ft2_into<P: Probe>(x: &[u8], gs: &mut [usize], probe: &mut P) {
    let m = x.len() as isize;
    let i0 = tail_run_into::<P, false>(x, &mut [], gs, probe);
    if i0 < 0 {
        return;
    }
    let mut scan = RunScan {
        x,
        a: x[(m - 1) as usize],
        m,
        k1: m - 1 - i0,
        suff: &mut [],
        gs,
        borders: BorderFrontier::new(),
        probe,
    };
    let k1 = scan.k1;
    let mut pos = i0 - 1;
    while let Some(run) = scan.next_run(&mut pos) {
        if run.l == 0 {
            scan.leading_run::<false, true>(run);
            return;
        }
        if run.len() < k1 {
            continue;
        }
        let e = run.l + k1 - 1;
        scan.long_run_tail::<false>(run, e);
        let g = scan.extend(run.l - 1, e);
        if g < 0 {
            scan.border(e);
        } else {
            scan.relax(m - 1 - (e - g), m - 1 - e);
        }
    }
}

fn ft3_into<P: Probe>(x: &[u8], suff: &mut [usize], gs: &mut [usize], probe: &mut P) {
    let m = x.len() as isize;
    let i0 = tail_run_into::<P, true>(x, suff, gs, probe);
    if i0 < 0 {
        return;
    }
    let mut scan = RunScan {
        x,
        a: x[(m - 1) as usize],
        m,
        k1: m - 1 - i0,
        suff,
        gs,
        borders: BorderFrontier::new(),
        probe,
    };
    let (mut f, mut g) = (0isize, m);
    let mut i = i0 - 1;
    while i >= 0 {
        if scan.probe.same(x[i as usize], scan.a) {
            let mut known = false;
            if g < i {
                let mirrored = scan.suff[(i + m - 1 - f) as usize];
                let bound = (i - g) as usize;
                if mirrored != bound {
                    scan.suff[i as usize] = mirrored.min(bound);
                    known = true;
                }
            }
            if !known {
                // x[i] = a already matches x[m-1].
                g = g.min(i - 1);
                f = i;
                g = scan.extend(g, f);
                scan.suff[i as usize] = (f - g) as usize;
                if g < 0 {
                    scan.border(i);
                    scan.inside_border(i - 1, i);
                    return;
                }
            }
            let s = scan.suff[i as usize] as isize;
            scan.relax(m - 1 - s, m - 1 - i);
        }
        i -= 1;
    }
}

/// Zero-filled `suff` buffer plus `good-suff` buffer for one pattern.
fn tables(m: usize) -> (Vec<usize>, Vec<usize>) {
    (vec![0; m], vec![0; m])
}

/// Linear run-based construction; returns `suff` (exact everywhere, since
/// positions not holding the last letter have `suff = 0`) and `good-suff`.
pub fn ft1(x: &Pattern) -> (SuffTable, GoodSuffTable) {
    let (mut suff, mut gs) = tables(x.len());
    ft1_into::<_, true>(x, &mut suff, &mut gs, &mut NoProbe);
    (SuffTable::from_vec(suff), GoodSuffTable::from_vec(gs))
}

pub fn ft1_counted(x: &Pattern, counter: &mut ComparisonCounter) -> (SuffTable, GoodSuffTable) {
    let (mut suff, mut gs) = tables(x.len());
    ft1_into::<_, true>(x, &mut suff, &mut gs, counter);
    (SuffTable::from_vec(suff), GoodSuffTable::from_vec(gs))
}

/// `ft1` with the long-run update removed. Deliberately wrong; used to
/// check that verification catches a broken construction.
#[doc(hidden)]
pub fn ft1_mutant_without_long_run_update(x: &Pattern) -> GoodSuffTable {
    let (mut suff, mut gs) = tables(x.len());
    ft1_into::<_, false>(x, &mut suff, &mut gs, &mut NoProbe);
    GoodSuffTable::from_vec(gs)
}

/// Quadratic run-based construction without a `suff` table.
pub fn ft2(x: &Pattern) -> GoodSuffTable {
    let mut gs = vec![0; x.len()];
    ft2_into(x, &mut gs, &mut NoProbe);
    GoodSuffTable::from_vec(gs)
}

pub fn ft2_counted(x: &Pattern, counter: &mut ComparisonCounter) -> GoodSuffTable {
    let mut gs = vec![0; x.len()];
    ft2_into(x, &mut gs, counter);
    GoodSuffTable::from_vec(gs)
}

/// Mixed construction: tail run, then the classical scan over occurrences
/// of the last letter, then the border regime.
pub fn ft3(x: &Pattern) -> (SuffTable, GoodSuffTable) {
    let (mut suff, mut gs) = tables(x.len());
    ft3_into(x, &mut suff, &mut gs, &mut NoProbe);
    (SuffTable::from_vec(suff), GoodSuffTable::from_vec(gs))
}

pub fn ft3_counted(x: &Pattern, counter: &mut ComparisonCounter) -> (SuffTable, GoodSuffTable) {
    let (mut suff, mut gs) = tables(x.len());
    ft3_into(x, &mut suff, &mut gs, counter);
    (SuffTable::from_vec(suff), GoodSuffTable::from_vec(gs))
}

// Buffer-reusing entry points for the benchmark. `suff` must be zeroed when
// the caller wants a complete table; the constructions themselves never read
// entries they did not write.

pub(crate) fn ft1_build(x: &[u8], suff: &mut [usize], gs: &mut [usize]) {
    ft1_into::<_, true>(x, suff, gs, &mut NoProbe);
}

pub(crate) fn ft2_build(x: &[u8], gs: &mut [usize]) {
    ft2_into(x, gs, &mut NoProbe);
}

pub(crate) fn ft3_build(x: &[u8], suff: &mut [usize], gs: &mut [usize]) {
    ft3_into(x, suff, gs, &mut NoProbe);
}
