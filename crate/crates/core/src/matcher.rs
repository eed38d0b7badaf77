//! Boyer-Moore search over any good-suffix backend, plus the naive
//! searcher it is checked against.

use std::ops::Deref;

use crate::algorithm::Algorithm;
use crate::types::{BadCharTable, GoodSuffTable, Pattern};

/// Start offsets of the occurrences of a pattern, strictly increasing.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct MatchList(Vec<usize>);

impl MatchList {
    pub fn into_vec(self) -> Vec<usize> {
        self.0
    }
}

impl Deref for MatchList {
    type Target = [usize];

    fn deref(&self) -> &[usize] {
        &self.0
    }
}

pub fn bad_char(x: &Pattern) -> BadCharTable {
    BadCharTable::new(x)
}

/// Every alignment, compared directly.
pub fn naive_search(x: &[u8], y: &[u8]) -> MatchList {
    if x.is_empty() || y.len() < x.len() {
        return MatchList::default();
    }
    MatchList(
        y.windows(x.len())
            .enumerate()
            .filter_map(|(p, w)| (w == x).then_some(p))
            .collect(),
    )
}

/// A pattern with its shift tables.
#[derive(Clone, Debug)]
pub struct BoyerMoore {
    pattern: Pattern,
    good_suffix: GoodSuffTable,
    bad_char: BadCharTable,
}

impl BoyerMoore {
    pub fn new(pattern: Pattern, backend: Algorithm) -> Self {
        let good_suffix = backend.good_suffix(&pattern);
        Self::with_table(pattern, good_suffix)
    }

    pub fn with_table(pattern: Pattern, good_suffix: GoodSuffTable) -> Self {
        let bad_char = BadCharTable::new(&pattern);
        BoyerMoore {
            pattern,
            good_suffix,
            bad_char,
        }
    }

    pub fn pattern(&self) -> &Pattern {
        &self.pattern
    }

    pub fn find_all(&self, y: &[u8]) -> MatchList {
        let mut out = Vec::new();
        self.scan(y, |pos, matched, _| {
            if matched {
                out.push(pos);
            }
        });
        MatchList(out)
    }

    /// Like [`find_all`](Self::find_all), also returning each attempt as
    /// `(window start, shift taken)`.
    pub fn find_all_traced(&self, y: &[u8]) -> (MatchList, Vec<(usize, usize)>) {
        let mut out = Vec::new();
        let mut attempts = Vec::new();
        self.scan(y, |pos, matched, shift| {
            attempts.push((pos, shift));
            if matched {
                out.push(pos);
            }
        });
        (MatchList(out), attempts)
    }

    /// Calls `visit(window start, matched, shift)` once per attempt.
    #[inline]
    fn scan(&self, y: &[u8], mut visit: impl FnMut(usize, bool, usize)) {
        let x = self.pattern.as_bytes();
        let m = x.len();
        let gs = self.good_suffix.as_slice();
        let mut s = 0;
        while s + m <= y.len() {
            let mut i = m;
            while i > 0 && x[i - 1] == y[s + i - 1] {
                i -= 1;
            }
            if i == 0 {
                visit(s, true, gs[0]);
                s += gs[0];
            } else {
                let i = i - 1;
                let matched = m - 1 - i;
                let bc = self.bad_char.shift(y[s + i]) as isize - matched as isize;
                let shift = (gs[i] as isize).max(bc).max(1) as usize;
                visit(s, false, shift);
                s += shift;
            }
        }
    }
}

pub fn bm_search(x: &Pattern, y: &[u8], backend: Algorithm) -> MatchList {
    BoyerMoore::new(x.clone(), backend).find_all(y)
}
