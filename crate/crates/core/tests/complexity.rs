mod common;

use common::*;
use goodsuff::{classical, finetuned, ComparisonCounter, Pattern};

/// Comparison counts of the linear constructions: suffixes, ft1, ft3.
fn linear_counts(x: &Pattern) -> (u64, u64, u64) {
    let mut c = ComparisonCounter::new();
    classical::suffixes_counted(x, &mut c);
    let cl = c.count();
    c.reset();
    finetuned::ft1_counted(x, &mut c);
    let ft1 = c.count();
    c.reset();
    finetuned::ft3_counted(x, &mut c);
    (cl, ft1, c.count())
}

fn assert_linear(x: &Pattern) {
    let m = x.len() as u64;
    let (cl, ft1, ft3) = linear_counts(x);
    assert!(cl <= 4 * m, "suffixes: {cl} comparisons for m = {m}");
    assert!(ft1 <= 4 * m, "ft1: {ft1} comparisons for m = {m}");
    // ft3 shares the classical window discipline.
    assert!(ft3 <= 4 * m, "ft3: {ft3} comparisons for m = {m}");
}

#[test]
fn linear_on_random_patterns_up_to_a_million() {
    for sigma in SIGMAS {
        for shift in [4, 8, 12, 16, 20] {
            for x in random_patterns(sigma, 1 << shift, 2, 11) {
                assert_linear(&x);
            }
        }
    }
}

#[test]
fn linear_on_adversarial_families() {
    for x in adversarial(4000) {
        assert_linear(&x);
    }
    for k in [1, 2, 3, 4, 8, 31] {
        assert_linear(&blocks(k, (1 << 20) / (k + 1)));
    }
}

#[test]
fn linear_on_exhaustive_small_patterns() {
    for x in exhaustive(2, 12) {
        assert_linear(&x);
    }
}

#[test]
fn ft2_goes_quadratic_on_block_patterns() {
    let x = blocks(4, 64);
    assert_eq!(x.len(), 320);
    let (_, ft1, _) = linear_counts(&x);
    let mut c = ComparisonCounter::new();
    finetuned::ft2_counted(&x, &mut c);
    let ft2 = c.count();
    assert!(ft2 > 8 * 320, "ft2 made only {ft2} comparisons");
    assert!(ft1 <= 4 * 320);
}

#[test]
fn counter_resets_between_runs() {
    let x = blocks(3, 10);
    let mut c = ComparisonCounter::new();
    finetuned::ft1_counted(&x, &mut c);
    let first = c.count();
    c.reset();
    finetuned::ft1_counted(&x, &mut c);
    assert_eq!(c.count(), first);
}
