//! Classical two-step construction: the `suff` table first, then the
//! good-suffix table derived from it.

use crate::types::{ComparisonCounter, GoodSuffTable, NoProbe, Pattern, Probe, SuffTable};

/// Computes `suff` right to left in linear time.
pub fn suffixes(x: &Pattern) -> SuffTable {
    let mut suff = vec![0; x.len()];
    suffixes_into(x, &mut suff, &mut NoProbe);
    SuffTable::from_vec(suff)
}

/// [`suffixes`], recording every byte comparison in `counter`.
pub fn suffixes_counted(x: &Pattern, counter: &mut ComparisonCounter) -> SuffTable {
    let mut suff = vec![0; x.len()];
    suffixes_into(x, &mut suff, counter);
    SuffTable::from_vec(suff)
}

/// Window state of the suffix scan: `x[g+1..=f]` is known to equal the
/// suffix of `x` of length `f - g`.
#[derive(Clone, Copy, Debug)]
pub(crate) struct SuffixScanState {
    pub f: isize,
    pub g: isize,
}

pub(crate) fn suffixes_into<P: Probe>(x: &[u8], suff: &mut [usize], probe: &mut P) {
    let m = x.len();
    suff[m - 1] = m;
    let m = m as isize;
    // f is only read once g < i, which the first iteration never satisfies.
    let mut st = SuffixScanState { f: m - 1, g: m - 1 };
    for i in (0..m - 1).rev() {
        if i > st.g {
            let mirrored = suff[(i + m - 1 - st.f) as usize];
            let bound = (i - st.g) as usize;
            if mirrored != bound {
                suff[i as usize] = mirrored.min(bound);
                continue;
            }
        }
        st.g = st.g.min(i);
        st.f = i;
        while st.g >= 0 && probe.same(x[st.g as usize], x[(st.g + m - 1 - st.f) as usize]) {
            st.g -= 1;
        }
        suff[i as usize] = (st.f - st.g) as usize;
    }
}

/// Derives the good-suffix table from `suff`.
pub fn good_suffixes(x: &Pattern, suff: &SuffTable) -> GoodSuffTable {
    let mut gs = vec![0; x.len()];
    good_suffixes_into(suff, &mut gs, |_| {});
    GoodSuffTable::from_vec(gs)
}

/// Which loop of [`good_suffixes`] performed a write.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Pass {
    /// Border pass: `j = -1` or `x[0..=j]` is a border.
    Borders,
    /// Reoccurrence pass: `good-suff[m-1-suff[j]] = m-1-j`.
    Reoccurrences,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TableWrite {
    pub pass: Pass,
    pub j: isize,
    pub index: usize,
    pub value: usize,
}

/// [`good_suffixes`] plus the ordered list of every table write.
pub fn good_suffixes_traced(x: &Pattern, suff: &SuffTable) -> (GoodSuffTable, Vec<TableWrite>) {
    let mut gs = vec![0; x.len()];
    let mut trace = Vec::new();
    good_suffixes_into(suff, &mut gs, |w| trace.push(w));
    (GoodSuffTable::from_vec(gs), trace)
}

#[inline(always)]
pub(crate) fn good_suffixes_into(suff: &[usize], gs: &mut [usize], mut on_write: impl FnMut(TableWrite)) {
    let m = suff.len();
    let mut i = 0;
    // j = -1 is the empty border and completes the table.
    for j in (-1..m as isize - 1).rev() {
        if j == -1 || suff[j as usize] == (j + 1) as usize {
            let shift = (m as isize - 1 - j) as usize;
            while i < shift {
                gs[i] = shift;
                on_write(TableWrite { pass: Pass::Borders, j, index: i, value: shift });
                i += 1;
            }
        }
    }
    for (j, &s) in suff.iter().enumerate().take(m.saturating_sub(1)) {
        let index = m - 1 - s;
        gs[index] = m - 1 - j;
        on_write(TableWrite {
            pass: Pass::Reoccurrences,
            j: j as isize,
            index,
            value: m - 1 - j,
        });
    }
}

/// Full classical construction into caller-provided buffers.
pub(crate) fn build_into<P: Probe>(x: &[u8], suff: &mut [usize], gs: &mut [usize], probe: &mut P) {
    suffixes_into(x, suff, probe);
    good_suffixes_into(suff, gs, |_| {});
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle;

    fn p(s: &str) -> Pattern {
        Pattern::try_from(s).unwrap()
    }

    const EXAMPLE: &str = "aabbaaaabbaaaaabbaaabbaaaa";

    #[test]
    fn suffixes_examples() {
        assert_eq!(
            suffixes(&p(EXAMPLE)).as_slice(),
            &[1, 2, 0, 0, 1, 2, 3, 8, 0, 0, 1, 2, 3, 9, 4, 0, 0, 1, 2, 3, 0, 0, 1, 2, 3, 26]
        );
        assert_eq!(suffixes(&p("abab")).as_slice(), &[0, 2, 0, 4]);
        assert_eq!(suffixes(&p("aaaa")).as_slice(), &[1, 2, 3, 4]);
        assert_eq!(suffixes(&p("a")).as_slice(), &[1]);
    }

    #[test]
    fn good_suffixes_examples() {
        let x = p(EXAMPLE);
        assert_eq!(good_suffixes(&x, &suffixes(&x)), oracle::good_suff(&x));
        let x = p("abab");
        assert_eq!(
            good_suffixes(&x, &SuffTable::from_vec(vec![0, 2, 0, 4])).as_slice(),
            &[2, 2, 4, 1]
        );
        let x = p("a");
        assert_eq!(good_suffixes(&x, &SuffTable::from_vec(vec![1])).as_slice(), &[1]);
    }

    #[test]
    fn trace_matches_worked_example() {
        let x = p(EXAMPLE);
        let (gs, trace) = good_suffixes_traced(&x, &suffixes(&x));
        assert_eq!(gs, oracle::good_suff(&x));

        let first: Vec<_> = trace.iter().filter(|w| w.pass == Pass::Borders).collect();
        let by_j = |j: isize| -> Vec<(usize, usize)> {
            first.iter().filter(|w| w.j == j).map(|w| (w.index, w.value)).collect()
        };
        assert_eq!(by_j(7), (0..18).map(|i| (i, 18)).collect::<Vec<_>>());
        assert_eq!(by_j(1), (18..24).map(|i| (i, 24)).collect::<Vec<_>>());
        assert_eq!(by_j(0), vec![(24, 25)]);
        assert_eq!(by_j(-1), vec![(25, 26)]);
        assert_eq!(first.len(), 26);

        let second: Vec<_> = trace
            .iter()
            .filter(|w| w.pass == Pass::Reoccurrences)
            .map(|w| (w.j, w.index, w.value))
            .collect();
        let expected_index = [
            24, 23, 25, 25, 24, 23, 22, 17, 25, 25, 24, 23, 22, 16, 21, 25, 25, 24, 23, 22, 25,
            25, 24, 23, 22,
        ];
        assert_eq!(second.len(), 25);
        for (j, &(tj, index, value)) in second.iter().enumerate() {
            assert_eq!(tj, j as isize);
            assert_eq!(index, expected_index[j], "j = {j}");
            assert_eq!(value, 25 - j);
        }
        assert!(second.contains(&(24, 22, 1)));
    }

    #[test]
    fn counted_matches_uncounted() {
        let x = p(EXAMPLE);
        let mut c = ComparisonCounter::new();
        assert_eq!(suffixes_counted(&x, &mut c), suffixes(&x));
        assert!(c.count() > 0 && c.count() <= 4 * x.len() as u64);
    }
}
