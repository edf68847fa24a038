//! End-to-end tests of the `aslw` binary: golden outputs, exit codes,
//! cache round-trips, and the documented text formats.

use std::path::Path;
use std::process::{Command, Output};

use aslw::slw::SLTable;
use aslw::words::{compare, AlphabetOrder, Word};

/// Runs the binary with the given arguments and a scrubbed environment.
fn aslw(args: &[&str]) -> Output {
    aslw_in(args, None)
}

/// Same, with an optional `ASLW_CACHE_DIR`.
fn aslw_in(args: &[&str], cache_dir: Option<&Path>) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_aslw"));
    cmd.args(args).env_remove("ASLW_CACHE_DIR");
    if let Some(dir) = cache_dir {
        cmd.env("ASLW_CACHE_DIR", dir);
    }
    cmd.output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf-8 stdout")
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).expect("utf-8 stderr")
}

#[test]
fn table_emits_the_known_g2_rows() {
    let out = aslw(&["table", "G2:0,1,2", "--max-delta", "2"]);
    assert!(out.status.success(), "{}", stderr(&out));
    let text = stdout(&out);
    assert!(text.contains("family 1,1,2"), "{text}");
    assert!(text.contains("  k=0  1,1,2  0122\n"), "{text}");
    assert!(text.contains("  k=1  2,3,5  0122101222\n"), "{text}");
    assert!(text.contains("  (δ,1)  012221\n"), "{text}");
    assert!(text.contains("  (δ,2)  012212\n"), "{text}");
}

#[test]
fn table_under_the_reversed_order() {
    let out = aslw(&["table", "G2:2,1,0", "--max-delta", "1"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("  (δ,1)  221021\n"), "{text}");
}

#[test]
fn table_markdown_and_json_formats() {
    let md = stdout(&aslw(&["table", "A1:0,1", "--format", "markdown"]));
    assert!(md.contains("| k | degree | word |"), "{md}");
    let js = stdout(&aslw(&["table", "A1:0,1", "--format", "json"]));
    let value: serde_json::Value = serde_json::from_str(&js).expect("valid JSON");
    assert_eq!(value["system"], "A1:0,1");
    assert_eq!(value["imaginary"][0]["slots"][0], "01");
}

#[test]
fn gen_writes_a_deterministic_cache_that_round_trips() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("g2.json");
    let path_text = path.to_str().unwrap();
    let out = aslw(&["gen", "G2:0,1,2", "--max-delta", "3", "--cache", path_text]);
    assert!(out.status.success(), "{}", stderr(&out));
    let text = stdout(&out);
    assert!(text.contains("total: 42 words"), "{text}");
    let first = std::fs::read(&path).unwrap();
    assert!(String::from_utf8_lossy(&first).contains("012221"));

    // Re-running reproduces the identical file and summary.
    let rerun = aslw(&["gen", "G2:0,1,2", "--max-delta", "3", "--cache", path_text]);
    assert_eq!(stdout(&rerun), text);
    assert_eq!(std::fs::read(&path).unwrap(), first);

    // The cache loads back into an identical table.
    let loaded = SLTable::load_cache(first.as_slice()).unwrap();
    assert_eq!(loaded.watermark_k(), 3);
    assert_eq!(loaded.system().descriptor(), "G2:0,1,2");
}

#[test]
fn gen_defaults_to_the_cache_dir_from_the_environment() {
    let dir = tempfile::tempdir().unwrap();
    let out = aslw_in(&["gen", "A1:0,1", "--max-delta", "2"], Some(dir.path()));
    assert!(out.status.success(), "{}", stderr(&out));
    assert!(dir.path().join("A1-01.json").exists());

    // Commands pick the cached table up from the same location.
    let table = aslw_in(&["table", "A1:0,1", "--max-delta", "2"], Some(dir.path()));
    assert!(table.status.success());
    assert!(stdout(&table).contains("  (2δ,1)  0011\n"), "{}", stdout(&table));
}

#[test]
fn wset_prints_the_pairs_in_order_with_costandard_markers() {
    let out = aslw(&["wset", "G2:0,1,2", "--max-delta", "1"]);
    assert!(out.status.success());
    let lines: Vec<String> = stdout(&out).lines().map(str::to_string).collect();
    assert_eq!(lines[0], "# W-set of G2:0,1,2 at level δ (6 pairs)");
    assert_eq!(lines[1], "(01222, 1)  [costandard of SL_1(δ)]");
    assert_eq!(lines[2], "(0122, 12)  [costandard of SL_2(δ)]");
    assert_eq!(lines[3], "(01221, 2)");
    assert_eq!(lines.len(), 7);
}

#[test]
fn block_of_a_level_one_word_is_a_single_token() {
    let out = aslw(&["block", "G2:0,1,2", "--degree", "1,2,3"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("(δ,1)  [im,1,1]"), "{text}");
    assert!(text.contains("(δ,2)  [im,2,1]"), "{text}");
    // Repeated blocks expand with the (word)*count notation.
    assert!(text.contains("= (012221)*1"), "{text}");
}

#[test]
fn block_reaches_past_max_delta_when_the_degree_needs_it() {
    let out = aslw(&["block", "G2:0,1,2", "--degree", "3,6,9"]);
    assert!(out.status.success(), "{}", stderr(&out));
    let text = stdout(&out);
    assert!(text.contains("(3δ,1)  01222 [im,1,2] 1"), "{text}");
}

#[test]
fn chain_lists_an_increasing_family() {
    let out = aslw(&["chain", "G2:1,2,0", "--degree", "0,1,0", "--max-delta", "3"]);
    assert!(out.status.success());
    let text = stdout(&out);
    let words: Vec<Word> = text
        .lines()
        .map(|line| Word::parse(line.split("  ").last().unwrap()).unwrap())
        .collect();
    // α_1 + 3δ has height 19 > 3|δ|, so the chain stops at k = 2.
    let order = AlphabetOrder::from_ascending(&[1, 2, 0]).unwrap();
    assert_eq!(words.len(), 3);
    for pair in words.windows(2) {
        assert_eq!(compare(&pair[0], &pair[1], &order), std::cmp::Ordering::Less);
    }
}

#[test]
fn verify_passes_on_sound_tables() {
    let out = aslw(&["verify", "A1:0,1", "--max-delta", "3"]);
    assert!(out.status.success(), "{}", stdout(&out));
    assert!(stdout(&out).contains("all checks passed"));
}

#[test]
fn verify_fans_out_over_all_orders_deterministically() {
    let a = aslw(&["verify", "A2:0,1,2", "--order", "all", "--max-delta", "2"]);
    assert!(a.status.success(), "{}", stdout(&a));
    let b = aslw(&["verify", "A2:0,1,2", "--order", "all", "--max-delta", "2"]);
    assert_eq!(stdout(&a), stdout(&b));
    let text = stdout(&a);
    for order in ["0,1,2", "0,2,1", "1,0,2", "1,2,0", "2,0,1", "2,1,0"] {
        assert!(text.contains(&format!("conjecture on A2:{order}")), "{text}");
    }
}

#[test]
fn verify_emits_json_reports() {
    let out = aslw(&["verify", "A1:0,1", "--checks", "convexity,flags", "--format", "json"]);
    assert!(out.status.success());
    let reports: Vec<serde_json::Value> = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(reports.len(), 2);
    assert_eq!(reports[0]["check"], "convexity");
    assert_eq!(reports[1]["check"], "flag-shift");
    assert!(reports.iter().all(|r| r["pass"] == true));
}

#[test]
fn verify_fails_with_a_witness_on_a_corrupted_cache() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("g2.json");
    let gen = aslw(&["gen", "G2:0,1,2", "--max-delta", "1", "--cache", path.to_str().unwrap()]);
    assert!(gen.status.success());
    let text = std::fs::read_to_string(&path).unwrap();
    let bad = text.replace("\"01\"", "\"00\"");
    assert_ne!(text, bad);
    std::fs::write(&path, bad).unwrap();

    let out = aslw(&["verify", "G2:0,1,2", "--max-delta", "1", "--cache", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    let text = stdout(&out);
    assert!(text.contains("FAIL"), "{text}");
    assert!(text.contains("witness"), "{text}");
}

#[test]
fn usage_errors_exit_with_code_two() {
    let bad_type = aslw(&["table", "Z9:0,1"]);
    assert_eq!(bad_type.status.code(), Some(2));

    let bad_order = aslw(&["table", "G2:0,1,2", "--order", "0,0,1"]);
    assert_eq!(bad_order.status.code(), Some(2));

    let all_outside_verify = aslw(&["table", "G2:0,1,2", "--order", "all"]);
    assert_eq!(all_outside_verify.status.code(), Some(2));

    let not_a_root = aslw(&["block", "G2:0,1,2", "--degree", "0,0,2"]);
    assert_eq!(not_a_root.status.code(), Some(2));

    let imaginary_chain = aslw(&["chain", "G2:0,1,2", "--degree", "1,2,3"]);
    assert_eq!(imaginary_chain.status.code(), Some(2));

    let missing_system = aslw(&["table"]);
    assert_eq!(missing_system.status.code(), Some(2));
}

#[test]
fn io_errors_exit_with_code_three() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("occupied.json");
    std::fs::write(&file, b"{}").unwrap();
    // Writing *under* an existing file fails with an I/O error.
    let nested = file.join("sub.json");
    let out = aslw(&["gen", "A1:0,1", "--cache", nested.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(3));

    // A corrupt cache is an I/O-class failure outside verify.
    std::fs::write(&file, b"not json").unwrap();
    let out = aslw(&["table", "A1:0,1", "--cache", file.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn type_rank_order_flags_select_the_system() {
    let out = aslw(&["table", "--type", "G", "--rank", "2", "--order", "2,1,0", "--max-delta", "1"]);
    assert!(out.status.success(), "{}", stderr(&out));
    assert!(stdout(&out).contains("G2:2,1,0"));

    // The descriptor's order can be overridden by --order.
    let out = aslw(&["table", "G2:0,1,2", "--order", "2,1,0", "--max-delta", "1"]);
    assert!(stdout(&out).contains("221021"));
}

#[test]
fn a_closed_stdout_pipe_is_a_quiet_success() {
    use std::process::Stdio;
    // Close the read end of the pipe before the table is printed; the tool
    // must treat the broken pipe as "stop printing" and exit 0, the way
    // line-oriented tools behave under `... | head`.
    let mut child = Command::new(env!("CARGO_BIN_EXE_aslw"))
        .args(["table", "G2:0,1,2", "--max-delta", "6"])
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary runs");
    drop(child.stdout.take());
    let status = child.wait().expect("child reaped");
    assert!(status.success(), "expected a quiet exit, got {status:?}");
}
