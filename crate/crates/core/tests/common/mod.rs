#![allow(dead_code)]

use goodsuff::rng::{gen_random_string, SplitMix64};
use goodsuff::verify::nth_string;
use goodsuff::Pattern;

pub const EXAMPLE: &str = "aabbaaaabbaaaaabbaaabbaaaa";
pub const EXAMPLE_SUFF: [usize; 26] = [
    1, 2, 0, 0, 1, 2, 3, 8, 0, 0, 1, 2, 3, 9, 4, 0, 0, 1, 2, 3, 0, 0, 1, 2, 3, 26,
];
pub const EXAMPLE_GS: [usize; 26] = [
    18, 18, 18, 18, 18, 18, 18, 18, 18, 18, 18, 18, 18, 18, 18, 18, 12, 18, 24, 24, 24, 11, 1, 2,
    3, 4,
];

pub const SIGMAS: [usize; 4] = [2, 4, 20, 70];

/// All strings over `sigma` letters with lengths `1..=max_len`.
pub fn exhaustive(sigma: usize, max_len: usize) -> impl Iterator<Item = Pattern> {
    (1..=max_len).flat_map(move |m| {
        let count = (sigma as u64).pow(m as u32);
        (0..count).map(move |i| Pattern::new(nth_string(i, sigma, m)).unwrap())
    })
}

/// `count` seeded random patterns of length `m`.
pub fn random_patterns(sigma: usize, m: usize, count: usize, seed: u64) -> Vec<Pattern> {
    let mut rng = SplitMix64::new(seed ^ ((sigma as u64) << 40) ^ ((m as u64) << 20));
    (0..count)
        .map(|_| gen_random_string(m, sigma, &mut rng).unwrap())
        .collect()
}

/// 2, 4, .., 1024
pub fn doubling_lengths() -> Vec<usize> {
    goodsuff::bench::doubling(2, 1024)
}

/// (a^k b)^j
pub fn blocks(k: usize, j: usize) -> Pattern {
    let mut v = Vec::with_capacity((k + 1) * j);
    for _ in 0..j {
        v.extend(std::iter::repeat_n(b'a', k));
        v.push(b'b');
    }
    Pattern::new(v).unwrap()
}

/// Adversarial families: (a^k b)^j, a^k b a^k, a^k with a twist, and
/// their rotations ending in a.
pub fn adversarial(max_len: usize) -> Vec<Pattern> {
    let mut out = Vec::new();
    for k in 1..=12 {
        for j in 1..=40 {
            if (k + 1) * j > max_len {
                break;
            }
            let x = blocks(k, j);
            let mut rotated = x.to_vec();
            rotated.rotate_right(1);
            out.push(x);
            out.push(Pattern::new(rotated).unwrap());
        }
        let sym = format!("{}b{}", "a".repeat(k), "a".repeat(k));
        out.push(Pattern::try_from(sym.as_str()).unwrap());
        let twist = format!("{}b{}", "a".repeat(2 * k), "a".repeat(k));
        out.push(Pattern::try_from(twist.as_str()).unwrap());
        out.push(Pattern::try_from("a".repeat(k).as_str()).unwrap());
    }
    out
}
