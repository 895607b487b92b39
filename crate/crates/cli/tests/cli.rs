use std::path::PathBuf;
use std::process::{Command, Output};

use overabundant_cli::{run, EXIT_IO, EXIT_USAGE, REPORT_HEADER};

fn data(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/data").join(name)
}

fn bin(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_overabundant")).args(args).output().unwrap()
}

fn stdout_of(args: &[&str]) -> String {
    let out = bin(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

/// Data rows (neither header nor comment) split into columns.
fn rows(report: &str) -> Vec<Vec<String>> {
    report
        .lines()
        .skip(1)
        .filter(|l| !l.starts_with('#'))
        .map(|l| l.split('\t').map(String::from).collect())
        .collect()
}

#[test]
fn baab_two_rows() {
    let input = data("baab.fa");
    let out = stdout_of(&["--input", input.to_str().unwrap(), "--rho", "0.3"]);
    let mut lines = out.lines();
    assert_eq!(lines.next(), Some(REPORT_HEADER));
    assert_eq!(lines.next(), Some("# baab n=4 count=2"));
    assert_eq!(
        rows(&out),
        [
            ["baab", "AAB", "3", "1", "0.500000", "0.500000"],
            ["baab", "BAA", "3", "1", "0.500000", "0.500000"],
        ]
    );
}

#[test]
fn length_filter() {
    let input = data("baaab.fa");
    let out = stdout_of(&["--input", input.to_str().unwrap(), "--rho", "0.1", "--length", "4"]);
    let words: Vec<String> = rows(&out).into_iter().map(|r| r[1].clone()).collect();
    assert_eq!(words, ["AAAB", "BAAA"]);
    assert!(out.contains("# baaab n=5 count=2\n"));

    let all = stdout_of(&["--input", input.to_str().unwrap(), "--rho", "0.1"]);
    assert_eq!(rows(&all).len(), 4);
    let ranged = stdout_of(&["--input", input.to_str().unwrap(), "--rho", "0.1", "--min-length", "4", "--max-length", "9"]);
    assert_eq!(rows(&ranged), rows(&out));
}

#[test]
fn oracle_passes_on_bundled_inputs() {
    for name in ["baab.fa", "baaab.fa", "multi.fa"] {
        let input = data(name);
        for rho in ["1e-6", "0.1", "0.3", "1"] {
            let out = bin(&["--input", input.to_str().unwrap(), "--rho", rho, "--oracle", "--seed", "7"]);
            assert_eq!(out.status.code(), Some(0), "{name} rho={rho}: {}", String::from_utf8_lossy(&out.stderr));
        }
    }
}

#[test]
fn multi_record_in_input_order() {
    let input = data("multi.fa");
    let out = stdout_of(&["--input", input.to_str().unwrap(), "--rho", "0.5"]);
    let comments: Vec<&str> = out.lines().filter(|l| l.starts_with('#')).collect();
    assert_eq!(comments.len(), 4);
    assert!(comments[0].starts_with("# s1 first record n=18 "));
    assert!(comments[1].starts_with("# s2 n=14 "));
    // Too short for any word with a positive deviation.
    assert_eq!(comments[2], "# short n=2 count=0");
    assert!(comments[3].starts_with("# s3 binary n=10 "));
    let mut ids: Vec<String> = rows(&out).into_iter().map(|r| r[0].clone()).collect();
    ids.dedup();
    assert_eq!(ids, ["s1", "s2", "s3"]);
}

#[test]
fn rows_sorted_within_record() {
    let input = data("multi.fa");
    let out = stdout_of(&["--input", input.to_str().unwrap(), "--rho", "1e-6"]);
    for id in ["s1", "s2", "s3"] {
        let words: Vec<String> = rows(&out).into_iter().filter(|r| r[0] == id).map(|r| r[1].clone()).collect();
        assert!(!words.is_empty());
        assert!(words.windows(2).all(|w| w[0] < w[1]), "{id}: {words:?}");
    }
}

#[test]
fn output_is_byte_identical_across_runs_and_threads() {
    let input = data("multi.fa");
    let args = ["--input", input.to_str().unwrap(), "--rho", "1e-6"];
    let first = bin(&args).stdout;
    assert_eq!(first, bin(&args).stdout);
    for threads in ["1", "3"] {
        let out = Command::new(env!("CARGO_BIN_EXE_overabundant"))
            .args(args)
            .env("OW_THREADS", threads)
            .output()
            .unwrap();
        assert_eq!(out.stdout, first);
    }
}

#[test]
fn writes_output_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("out.tsv");
    let input = data("baab.fa");
    let code = run(["overabundant", "--input", input.to_str().unwrap(), "--rho", "0.3", "--output", path.to_str().unwrap()]);
    assert_eq!(code, 0);
    let text = std::fs::read_to_string(&path).unwrap();
    assert_eq!(text, stdout_of(&["--input", input.to_str().unwrap(), "--rho", "0.3"]));
}

#[test]
fn usage_errors_exit_2() {
    let input = data("baab.fa");
    let input = input.to_str().unwrap();
    for args in [
        vec!["overabundant"],
        vec!["overabundant", "--input", input],
        vec!["overabundant", "--rho", "0.3"],
        vec!["overabundant", "--input", input, "--rho", "0"],
        vec!["overabundant", "--input", input, "--rho", "-1"],
        vec!["overabundant", "--input", input, "--rho", "abc"],
        vec!["overabundant", "--input", input, "--rho", "0.3", "--length", "x"],
        vec!["overabundant", "--input", input, "--rho", "0.3", "--min-length", "5", "--max-length", "4"],
        vec!["overabundant", "--input", input, "--rho", "0.3", "--bogus"],
        vec!["overabundant", "--search", "5"],
        vec!["overabundant", "--search", "0,2"],
    ] {
        assert_eq!(run(args.clone()), EXIT_USAGE, "{args:?}");
    }
}

#[test]
fn io_and_parse_errors_exit_1() {
    let dir = tempfile::tempdir().unwrap();
    let missing = dir.path().join("missing.fa");
    assert_eq!(run(["overabundant", "--input", missing.to_str().unwrap(), "--rho", "1"]), EXIT_IO);

    let bad = dir.path().join("bad.fa");
    std::fs::write(&bad, "ACGT\n>x\nAC\n").unwrap();
    let out = bin(&["--input", bad.to_str().unwrap(), "--rho", "1"]);
    assert_eq!(out.status.code(), Some(EXIT_IO));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 1"));

    let unwritable = dir.path().join("no/such/dir/out.tsv");
    let input = data("baab.fa");
    let code = run(["overabundant", "--input", input.to_str().unwrap(), "--rho", "1", "--output", unwritable.to_str().unwrap()]);
    assert_eq!(code, EXIT_IO);
}

#[test]
fn bench_mode_emits_tsv() {
    let out = stdout_of(&["--bench", "200,400", "--sigma", "20", "--seed", "3"]);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines[0], "n\tsigma\trho\tseed\tmillis");
    assert_eq!(lines.len(), 3);
    assert!(lines[1].starts_with("200\t20\t10\t3\t"));
    assert!(lines[2].starts_with("400\t20\t10\t3\t"));
}

#[test]
fn search_mode() {
    let out = stdout_of(&["--search", "5,2"]);
    let mut lines = out.lines();
    let head = lines.next().unwrap();
    assert_eq!(head, "# n=5 sigma=2 rho=0.1 best_count=4 witnesses=1");
    assert_eq!(lines.collect::<Vec<_>>(), ["abbba"]);
}
