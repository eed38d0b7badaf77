//! Good-suffix table constructions for the Boyer-Moore string matcher.
//!
//! Five interchangeable ways to build the good-suffix shift table of a
//! pattern live here:
//!
//! * [`oracle`]: definitional brute force, the reference every other
//!   construction is checked against (`bf`);
//! * [`classical`]: the two-pass `suff` then good-suffix computation (`cl`);
//! * [`finetuned`]: run-based constructions that only look at occurrences of
//!   the pattern's last letter, in a linear (`ft1`), a quadratic (`ft2`) and
//!   a mixed (`ft3`) flavour.
//!
//! [`matcher`] puts the tables to work in a Boyer-Moore searcher, and
//! [`bench`], [`verify`] and [`render`] back the `goodsuff` command-line tool.

pub mod algorithm;
pub mod bench;
pub mod classical;
mod error;
pub mod finetuned;
pub mod matcher;
pub mod oracle;
pub mod render;
pub mod rng;
pub mod types;
pub mod verify;

pub use algorithm::Algorithm;
pub use error::{Error, Result};
pub use types::{
    pattern_from_bytes, BadCharTable, ComparisonCounter, GoodSuffTable, NoProbe, Pattern, Probe,
    SuffTable,
};
