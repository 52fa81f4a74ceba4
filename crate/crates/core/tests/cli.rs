use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use ctl_fragments::altgraph::{apath, gen_random, write_slice_graph, GenParams};
use ctl_fragments::kripke::write_model;
use ctl_fragments::sampling::{random_formula, random_model, Fragment};
use ctl_fragments::syntax::{BooleanOp, TemporalOp};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use tempfile::TempDir;

fn ctlfrag(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ctlfrag"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exited normally")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

fn path_str(p: &Path) -> &str {
    p.to_str().unwrap()
}

const LOOP_MODEL: &str = "states:\nw0\nw1\nedges:\nw0 -> w1\nw1 -> w1\nw0 -> w0\nlabels:\nw0 : p\nw1 : p q\nstart: w0\n";

#[test]
fn check_exit_codes() {
    let dir = TempDir::new().unwrap();
    let model = dir.path().join("m.kripke");
    fs::write(&model, LOOP_MODEL).unwrap();
    let m = path_str(&model);

    let out = ctlfrag(&["check", "-m", m, "-f", "EG p"]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out).trim(), "true");
    assert_eq!(code(&ctlfrag(&["check", "-m", m, "-f", "AX q"])), 1);
    assert_eq!(code(&ctlfrag(&["check", "-m", m, "-s", "w1", "-f", "AX q"])), 0);

    let out = ctlfrag(&["fastcheck", "-m", m, "-f", "EG p"]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out).trim(), "true engine=eg-frag");
}

#[test]
fn errors_exit_2() {
    let dir = TempDir::new().unwrap();
    let model = dir.path().join("m.kripke");
    fs::write(&model, LOOP_MODEL).unwrap();
    let m = path_str(&model);
    assert_eq!(code(&ctlfrag(&["check", "-m", m, "-f", "EG ("])), 2);
    assert_eq!(code(&ctlfrag(&["check", "-m", m, "-s", "nope", "-f", "p"])), 2);
    assert_eq!(code(&ctlfrag(&["check", "-m", "/nonexistent/file", "-f", "p"])), 2);
    assert_eq!(code(&ctlfrag(&["frobnicate"])), 2);
    assert_eq!(code(&ctlfrag(&["gen", "-c", "no-such", "--out", "x"])), 2);
    assert_eq!(code(&ctlfrag(&["--help"])), 0);
}

#[test]
fn classify_line_and_json() {
    let out = ctlfrag(&["classify", "-f", "E[p U q]"]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out).trim(), "ops={EU} clone=id fingerprint=P-complete engine=generic");

    let out = ctlfrag(&["--json", "classify", "-f", "EF (p ^ q)"]);
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["clone"], "L");
    assert_eq!(v["fingerprint"], "AC1-hard (in P)");
}

#[test]
fn fastcheck_and_check_agree() {
    let dir = TempDir::new().unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(77);
    let frags = [
        Fragment::new(&[TemporalOp::EG], &[BooleanOp::Or]),
        Fragment::new(&[TemporalOp::ER], &[]),
        Fragment::new(&[TemporalOp::EF, TemporalOp::AG], &[BooleanOp::Not]),
        Fragment::new(&[TemporalOp::EU, TemporalOp::AX], &[BooleanOp::And, BooleanOp::Xor]),
    ];
    for (k, frag) in frags.iter().cycle().take(24).enumerate() {
        let m = random_model(&mut rng, 6);
        let phi = random_formula(&mut rng, frag, 3);
        let start = m.states().next().unwrap();
        let path = dir.path().join(format!("m{k}.kripke"));
        fs::write(&path, write_model(&m, Some(start))).unwrap();
        let text = phi.to_string();
        let slow = ctlfrag(&["check", "-m", path_str(&path), "-f", &text]);
        let fast = ctlfrag(&["fastcheck", "-m", path_str(&path), "-f", &text]);
        assert_eq!(code(&slow), code(&fast), "{text}");
    }
}

#[test]
fn gen_then_check_matches_apath() {
    let dir = TempDir::new().unwrap();
    for (k, c) in ["eu", "er-or", "er-only", "eg-xor", "ef-xor", "er-neg-guarded"].iter().enumerate() {
        for seed in 0..4u64 {
            let out_dir = dir.path().join(format!("{c}-{seed}"));
            let out = ctlfrag(&["gen", "-c", c, "--seed", &seed.to_string(), "--out", path_str(&out_dir)]);
            assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stderr));
            let formula = fs::read_to_string(out_dir.join("formula.ctl")).unwrap();
            let model = out_dir.join("model.kripke");
            let verdict = code(&ctlfrag(&["check", "-m", path_str(&model), "-f", formula.trim()]));
            let input = out_dir.join("input.slices");
            assert_eq!(verdict, code(&ctlfrag(&["apath", "--in", path_str(&input)])), "{c} seed {seed} ({k})");
        }
    }
    let out_dir = dir.path().join("gap");
    assert_eq!(code(&ctlfrag(&["gen", "-c", "gap-ef", "--seed", "3", "--out", path_str(&out_dir)])), 0);
    let formula = fs::read_to_string(out_dir.join("formula.ctl")).unwrap();
    let verdict = code(&ctlfrag(&["check", "-m", path_str(&out_dir.join("model.kripke")), "-f", formula.trim()]));
    assert_eq!(verdict, code(&ctlfrag(&["apath", "--in", path_str(&out_dir.join("input.gap"))])));
}

#[test]
fn gen_reads_an_input_file() {
    let dir = TempDir::new().unwrap();
    let g = gen_random(GenParams::new(3, 4, 9).restricted()).unwrap();
    let input = dir.path().join("g.slices");
    fs::write(&input, write_slice_graph(&g)).unwrap();
    let expected = if apath(&g, g.start().unwrap()) { 0 } else { 1 };
    assert_eq!(code(&ctlfrag(&["apath", "--in", path_str(&input)])), expected);
    let out_dir = dir.path().join("out");
    let out = ctlfrag(&["--json", "gen", "-c", "eu", "--in", path_str(&input), "--out", path_str(&out_dir)]);
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["expected"], expected == 0);
}

#[test]
fn compare_reports_only_er_neg() {
    let out = ctlfrag(&["--json", "compare", "--seeds", "50"]);
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    let suites = v["suites"].as_array().unwrap();
    assert!(suites.len() >= 21);
    for s in suites {
        let bad = s["mismatches"].as_array().unwrap().len();
        if s["name"] == "reduction er-neg" {
            assert!(bad > 0);
        } else {
            assert_eq!(bad, 0, "{}", s["name"]);
        }
    }
    assert_eq!(code(&out), 1);
}

#[test]
fn bench_runs() {
    let out = ctlfrag(&["--json", "bench", "--sizes", "4,8", "--repeat", "1"]);
    assert_eq!(code(&out), 0);
    let rows: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    let rows = rows.as_array().unwrap();
    assert_eq!(rows.len(), 12);
    // each fast row is followed by its fixpoint row with the same verdict
    for pair in rows.chunks(2) {
        assert_eq!(pair[1]["engine"], "fixpoint");
        assert_eq!(pair[0]["verdict"], pair[1]["verdict"]);
    }
}
