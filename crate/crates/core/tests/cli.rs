mod common;

use std::process::Command;

use common::corpus_dir;
use roundfold::cli::run;

fn cli(args: &[&str]) -> (i32, String, String) {
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let status = run(std::iter::once("roundfold").chain(args.iter().copied()), &mut out, &mut err);
    (status.code(), String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn corpus(name: &str) -> String {
    corpus_dir().join(name).to_string_lossy().into_owned()
}

#[test]
fn classify_sphere_times_circle() {
    let (code, out, _) = cli(&["classify", &corpus("s2xs1.rgf")]);
    assert_eq!(code, 0);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines[..2], ["tier: Directed", "embedding: 3-sphere"]);
}

#[test]
fn classify_tiers() {
    let (_, out, _) = cli(&["classify", &corpus("theta.rgf")]);
    assert!(out.starts_with("tier: PlanarRound\nembedding: 3-sphere\n"));
    let (_, out, _) = cli(&["classify", &corpus("k33.rgf")]);
    assert!(out.starts_with("tier: GenusG(1)\nembedding: union of S¹×Σ_{1,1} and D²×S¹ glued along boundaries\n"));
    assert!(out.contains("bounds: 0 <= genus <= 1 (lower bound not computed)"));
}

#[test]
fn genus_of_k33() {
    assert_eq!(cli(&["genus", &corpus("k33.rgf")]), (0, "genus: 1\n".into(), String::new()));
}

#[test]
fn invalid_inputs_exit_one() {
    let (code, out, _) = cli(&["validate", &corpus("bad-loop.rgf")]);
    assert_eq!(code, 1);
    assert!(out.contains("[loop]"));
    let (code, out, _) = cli(&["validate", &corpus("index-mismatch.rmd")]);
    assert_eq!(code, 1);
    assert!(out.contains("[index-event]"));
    let (code, _, err) = cli(&["genus", &corpus("no-such-file.rgf")]);
    assert_eq!(code, 1);
    assert!(err.starts_with("error:"));
    let (code, _, err) = cli(&["examples", "torus"]);
    assert_eq!(code, 1);
    assert!(err.contains("s2xs1"));
    let (code, _, err) = cli(&["smap", "1", "0", "5", "0", "0"]);
    assert_eq!(code, 1);
    assert!(err.contains("i1 in {0, 2}"));
}

#[test]
fn parse_errors_report_positions() {
    let dir = std::env::temp_dir().join(format!("roundfold-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let file = dir.join("broken.rgf");
    std::fs::write(&file, "vertex a disk\nedge e1 a zz\n").unwrap();
    let (code, _, err) = cli(&["validate", &file.to_string_lossy()]);
    assert_eq!(code, 1);
    assert!(err.contains("2:11:"), "{err}");
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(cli(&[]).0, 2);
    assert_eq!(cli(&["genus"]).0, 2);
    assert_eq!(cli(&["reeb", &corpus("lens.rgf"), "--style", "fancy"]).0, 2);
    assert_eq!(cli(&["genus", &corpus("birth.rmd")]).0, 2);
    assert_eq!(cli(&["genus", "graph.txt"]).0, 2);
    assert_eq!(cli(&["--help"]).0, 0);
}

#[test]
fn smap_accepts_negative_signs() {
    let (code, out, _) = cli(&["smap", "2", "2", "7", "-1", "1"]);
    assert_eq!(code, 0, "{out}");
    assert!(out.contains("border inner 1 "));
    assert!(out.contains("border outer 5 "));
    assert!(out.ends_with("# counts: 1 2 1 2 3 2 1\n"));
}

#[test]
fn reeb_and_euler() {
    let (code, out, _) = cli(&["reeb", &corpus("s2xs1.rmd")]);
    assert_eq!(code, 0);
    assert!(out.contains("totals: regions 3, free-edge 1, triple 1, border 0\n"));
    assert!(out.ends_with("euler: 2\n"));
    assert_eq!(cli(&["euler", &corpus("theta.rgf")]).1, "euler: 0\n");
    assert_eq!(cli(&["euler", &corpus("lens.rgf")]).1, "euler: 2\n");
    assert_eq!(cli(&["euler", &corpus("lens.rgf"), "--style", "doubled"]).1, "euler: 3\n");
}

#[test]
fn build_round_prints_descriptor() {
    let (code, out, _) = cli(&["build-round", &corpus("s2xs1.rgf")]);
    assert_eq!(code, 0);
    assert_eq!(out, "circles 2\ncircle 2 index 0 birth e1\ncircle 1 index 1 split e1 e2 e3\n");
    let (_, fiber, _) = cli(&["fiber-graph", &corpus("s2xs1.rmd")]);
    assert_eq!(fiber.lines().filter(|l| l.starts_with("vertex")).count(), 4);
    assert_eq!(fiber.lines().filter(|l| l.starts_with("edge")).count(), 3);
}

#[test]
fn svg_to_file() {
    let dir = std::env::temp_dir().join(format!("roundfold-svg-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let out = dir.join("birth.svg");
    let (code, stdout, _) = cli(&["emit-svg", &corpus("birth.rmd"), "-o", &out.to_string_lossy()]);
    assert_eq!((code, stdout.as_str()), (0, ""));
    let svg = std::fs::read_to_string(&out).unwrap();
    assert_eq!(svg.matches("<circle").count(), 1);
    assert!(svg.contains("stroke=\"red\""));
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn binary_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_roundfold");
    let status = |args: &[&str]| Command::new(bin).args(args).output().unwrap();
    let ok = status(&["examples"]);
    assert_eq!(ok.status.code(), Some(0));
    assert_eq!(String::from_utf8(ok.stdout).unwrap(), "s2xs1\nlens\ntheta\nk4\nk33\npetersen\n");
    assert_eq!(status(&["validate", &corpus("bad-loop.rgf")]).status.code(), Some(1));
    assert_eq!(status(&["frobnicate"]).status.code(), Some(2));
}
