mod common;

use std::path::Path;
use std::process::{Command, Output};

use common::*;
use goodsuff::matcher::naive_search;
use goodsuff::render::parse_row;

fn goodsuff(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_goodsuff"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn tables_golden() {
    for algo in ["bf", "cl", "ft1", "ft2", "ft3"] {
        let o = goodsuff(&["tables", EXAMPLE, "--algo", algo, "--suff"]);
        assert!(o.status.success());
        let out = stdout(&o);
        assert_eq!(parse_row(&out, "suff[i]").unwrap(), EXAMPLE_SUFF, "{algo}");
        assert_eq!(parse_row(&out, "good-suff[i]").unwrap(), EXAMPLE_GS, "{algo}");
    }
    let out = stdout(&goodsuff(&["tables", "abab", "--algo", "ft2"]));
    assert_eq!(
        out,
        "i            0 1 2 3\nx[i]         a b a b\ngood-suff[i] 2 2 4 1\n"
    );
    let out = stdout(&goodsuff(&["tables", "a"]));
    assert_eq!(parse_row(&out, "good-suff[i]").unwrap(), vec![1]);
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(goodsuff(&["tables", "ab", "--algo", "zz"]).status.code(), Some(2));
    assert_eq!(goodsuff(&["tables", ""]).status.code(), Some(2));
    assert_eq!(goodsuff(&["bogus"]).status.code(), Some(2));
    assert_eq!(goodsuff(&["verify", "--sigma", "1"]).status.code(), Some(2));
}

#[test]
fn search_prints_offsets() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("text");
    std::fs::write(&path, "abab").unwrap();
    let p = path.to_str().unwrap();

    let o = goodsuff(&["search", "ab", p]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), "0\n2\ntotal: 2\n");

    let o = goodsuff(&["search", "zz", p]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "total: 0\n");

    let text: String = EXAMPLE.repeat(20);
    std::fs::write(&path, &text).unwrap();
    let outputs: Vec<_> = ["bf", "cl", "ft1", "ft2", "ft3"]
        .iter()
        .map(|b| stdout(&goodsuff(&["search", "aabbaa", p, "--backend", b])))
        .collect();
    assert!(outputs.windows(2).all(|w| w[0] == w[1]));
    let want = naive_search(b"aabbaa", text.as_bytes());
    assert!(outputs[0].ends_with(&format!("total: {}\n", want.len())), "{}", outputs[0]);
    assert_eq!(outputs[0].lines().count(), want.len() + 1);
}

#[test]
fn missing_file_exits_3() {
    let o = goodsuff(&["search", "ab", "/nonexistent/text"]);
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn verify_exit_codes() {
    let o = goodsuff(&["verify", "--sigma", "2", "--m-max", "10", "--samples", "10"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("PASS"));

    let o = goodsuff(&["verify", "--sigma", "2", "--m-max", "8", "--mutant"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("FAIL"));
}

fn bench_args<'a>(out: &'a str, extra: &[&'a str]) -> Vec<&'a str> {
    let mut v = vec![
        "bench", "--sigmas", "2,4", "--lengths", "2,4,8", "--strings", "3", "--reps", "2", "--out",
        out,
    ];
    v.extend_from_slice(extra);
    v
}

#[test]
fn bench_writes_csv() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("bench.csv");
    let o = goodsuff(&bench_args(out.to_str().unwrap(), &[]));
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let csv = std::fs::read_to_string(&out).unwrap();
    let mut lines = csv.lines();
    assert_eq!(lines.next(), Some("sigma,m,algo,strings,reps,total_ns,ns_per_call"));
    assert_eq!(lines.count(), 2 * 3 * 5);
}

#[test]
fn bench_errors() {
    let o = goodsuff(&bench_args("/nonexistent/dir/bench.csv", &[]));
    assert_eq!(o.status.code(), Some(3));

    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("b.csv");
    let o = goodsuff(&[
        "bench", "--lengths", "8192", "--algos", "bf", "--strings", "1", "--reps", "1", "--out",
        out.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(2));
    assert!(!Path::new(&out).exists());
}
