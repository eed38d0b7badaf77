//! Column-aligned table dumps in the layout of the usual worked examples.

use std::fmt::Write;

use crate::algorithm::Algorithm;
use crate::oracle;
use crate::types::Pattern;

fn letter(b: u8) -> String {
    if b.is_ascii_graphic() {
        (b as char).to_string()
    } else {
        format!("\\x{b:02x}")
    }
}

/// Renders index, pattern, optional `suff` and good-suffix rows.
///
/// Backends without their own `suff` table (`bf`, `ft2`) show the
/// definitional one.
pub fn render_tables(x: &Pattern, algo: Algorithm, show_suff: bool) -> String {
    let (suff, gs) = algo.tables(x);
    let mut rows: Vec<(&str, Vec<String>)> = vec![
        ("i", (0..x.len()).map(|i| i.to_string()).collect()),
        ("x[i]", x.iter().map(|&b| letter(b)).collect()),
    ];
    if show_suff {
        let suff = suff.unwrap_or_else(|| oracle::suff(x));
        rows.push(("suff[i]", suff.iter().map(usize::to_string).collect()));
    }
    rows.push(("good-suff[i]", gs.iter().map(usize::to_string).collect()));

    let label_width = rows.iter().map(|(l, _)| l.len()).max().unwrap_or(0);
    let widths: Vec<usize> = (0..x.len())
        .map(|c| rows.iter().map(|(_, cells)| cells[c].len()).max().unwrap_or(1))
        .collect();

    let mut out = String::new();
    for (label, cells) in &rows {
        let _ = write!(out, "{label:<label_width$}");
        for (cell, w) in cells.iter().zip(&widths) {
            let _ = write!(out, " {cell:>w$}");
        }
        out.push('\n');
    }
    out
}

/// Numbers on the row labelled `label` in [`render_tables`] output.
pub fn parse_row(rendered: &str, label: &str) -> Option<Vec<usize>> {
    rendered.lines().find_map(|line| {
        let rest = line.strip_prefix(label)?;
        if !rest.starts_with(' ') {
            return None;
        }
        rest.split_whitespace().map(|v| v.parse().ok()).collect()
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_letter() {
        let out = render_tables(&Pattern::try_from("a").unwrap(), Algorithm::Cl, false);
        assert_eq!(parse_row(&out, "good-suff[i]"), Some(vec![1]));
        assert_eq!(parse_row(&out, "suff[i]"), None);
    }

    #[test]
    fn abab_rows() {
        let out = render_tables(&Pattern::try_from("abab").unwrap(), Algorithm::Ft2, true);
        assert_eq!(parse_row(&out, "good-suff[i]"), Some(vec![2, 2, 4, 1]));
        assert_eq!(parse_row(&out, "suff[i]"), Some(vec![0, 2, 0, 4]));
        assert!(out.lines().nth(1).unwrap().ends_with("a b a b"));
    }

    #[test]
    fn columns_align() {
        let out = render_tables(
            &Pattern::try_from("aabbaaaabbaaaaabbaaabbaaaa").unwrap(),
            Algorithm::Ft1,
            true,
        );
        let lens: Vec<usize> = out.lines().map(str::len).collect();
        assert!(lens.windows(2).all(|w| w[0] == w[1]), "{out}");
    }

    #[test]
    fn unprintable_bytes_are_escaped() {
        let out = render_tables(&Pattern::new(vec![0u8, 1, 0]).unwrap(), Algorithm::Bf, false);
        assert!(out.contains("\\x00 \\x01 \\x00"), "{out}");
    }
}
