//! Definitional implementations. Slow, but each one reads directly off the
//! definition it implements, so every faster construction is tested against
//! these. [`good_suff`] doubles as the brute-force (`bf`) benchmark contender.

use crate::error::{Error, Result};
use crate::types::{GoodSuffTable, Pattern, SuffTable};

/// Length of the longest common suffix of `u` and `v`.
pub fn lcs_len(u: &[u8], v: &[u8]) -> usize {
    u.iter()
        .rev()
        .zip(v.iter().rev())
        .take_while(|(a, b)| a == b)
        .count()
}

/// Is `x[lo..=hi]` a suffix of `x`? An inverted range is the empty string.
fn factor_is_suffix(x: &[u8], lo: isize, hi: isize) -> bool {
    if hi < lo {
        return true;
    }
    let (lo, hi) = (lo as usize, hi as usize);
    let len = hi - lo + 1;
    x[lo..=hi] == x[x.len() - len..]
}

fn check_position(x: &Pattern, i: usize, d: usize) -> Result<()> {
    let m = x.len();
    if i >= m {
        return Err(Error::OutOfRange { name: "i", value: i, m });
    }
    if d == 0 || d > m {
        return Err(Error::OutOfRange { name: "d", value: d, m });
    }
    Ok(())
}

fn suffix_condition(x: &[u8], i: usize, d: usize) -> bool {
    let m = x.len() as isize;
    let (i, d) = (i as isize, d as isize);
    if d <= i + 1 {
        factor_is_suffix(x, i - d + 1, m - d - 1)
    } else {
        factor_is_suffix(x, 0, m - d - 1)
    }
}

fn occurrence_condition(x: &[u8], i: usize, d: usize) -> bool {
    if d <= i {
        x[i - d] != x[i]
    } else {
        true
    }
}

/// Suffix condition: shifting by `d` keeps the matched suffix
/// `x[i+1..m-1]` consistent with the pattern.
pub fn cond_suf(x: &Pattern, i: usize, d: usize) -> Result<bool> {
    check_position(x, i, d)?;
    Ok(suffix_condition(x, i, d))
}

/// Occurrence condition: the letter brought under the mismatch differs
/// from `x[i]`, or lies left of the pattern.
pub fn cond_occ(x: &Pattern, i: usize, d: usize) -> Result<bool> {
    check_position(x, i, d)?;
    Ok(occurrence_condition(x, i, d))
}

/// Smallest `d` in `[1, m]` satisfying both conditions, for every `i`.
pub fn good_suff(x: &Pattern) -> GoodSuffTable {
    let mut gs = vec![0; x.len()];
    good_suff_into(x, &mut gs);
    GoodSuffTable::from_vec(gs)
}

pub(crate) fn good_suff_into(x: &[u8], gs: &mut [usize]) {
    let m = x.len();
    for (i, slot) in gs.iter_mut().enumerate() {
        // d = m always qualifies.
        *slot = (1..=m)
            .find(|&d| occurrence_condition(x, i, d) && suffix_condition(x, i, d))
            .unwrap_or(m);
    }
}

/// `suff[i] = lcs_len(x, x[0..=i])`.
pub fn suff(x: &Pattern) -> SuffTable {
    SuffTable::from_vec((0..x.len()).map(|i| lcs_len(x, &x[..=i])).collect())
}

/// Smallest period of `x`.
pub fn period(x: &[u8]) -> usize {
    let m = x.len();
    (1..=m)
        .find(|&p| (0..m - p).all(|i| x[i] == x[i + p]))
        .unwrap_or(m)
}

/// Length of the longest proper prefix of `x` that is also a suffix.
pub fn longest_border(x: &[u8]) -> usize {
    let m = x.len();
    (0..m).rev().find(|&b| x[..b] == x[m - b..]).unwrap_or(0)
}
