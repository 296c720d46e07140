//! End-to-end behaviour of the command-line interface.

use basesize::cli::{run, Outcome, EXIT_INCONCLUSIVE, EXIT_INVALID, EXIT_OK};
use serde_json::Value;

const SL4_2: &str = r#"{"family":"SL","n":4,"subgroup":{"subspace":{"d":2}}}"#;

fn cli(args: &[&str]) -> Outcome {
    run(std::iter::once("basesize").chain(args.iter().copied()))
}

fn json(out: &Outcome) -> Value {
    assert_eq!(out.code, EXIT_OK, "stderr: {}", out.stderr);
    serde_json::from_str(&out.stdout).unwrap()
}

#[test]
fn missing_subcommand_prints_usage() {
    let out = cli(&[]);
    assert_eq!(out.code, EXIT_INVALID);
    assert!(out.stderr.contains("Usage") || out.stdout.contains("Usage"));
}

#[test]
fn formula_emits_a_run_record() {
    let v = json(&cli(&["formula", "--spec", SL4_2]));
    assert_eq!(v["subcommand"], "formula");
    assert_eq!(v["version"], env!("CARGO_PKG_VERSION"));
    let t = &v["output"]["triple"];
    assert_eq!((t["b0"].as_u64(), t["b"].as_u64(), t["b1"].as_u64()), (Some(5), Some(5), Some(5)));
    assert!(v["wall_time_ms"].is_u64());
}

#[test]
fn invalid_specs_exit_with_code_two() {
    assert_eq!(cli(&["formula", "--spec", "{not json"]).code, EXIT_INVALID);
    assert_eq!(cli(&["formula", "--spec", r#"{"family":"SL","n":4,"subgroup":{"subspace":{"d":7}}}"#]).code, EXIT_INVALID);
    assert_eq!(cli(&["emit", "table:nope"]).code, EXIT_INVALID);
    assert_eq!(cli(&["bounds", "--dataset", "no_such_dataset"]).code, EXIT_INVALID);
    assert_eq!(cli(&["finite", "--family", "GL", "--n", "2", "--q", "4", "--action", "points"]).code, EXIT_INVALID);
}

#[test]
fn bounds_modes() {
    let v = json(&cli(&["bounds", "--dataset", "g2_na2", "--refine-long-root"]));
    assert_eq!(v["output"]["value"].as_u64(), Some(3));
    let v = json(&cli(&["bounds", "--dataset", "e8_a1e7", "--mode", "sandwich"]));
    assert_eq!(v["output"]["consistent"], true);
    assert_eq!(cli(&["bounds", "--dataset", "f4_b4", "--mode", "b0"]).code, EXIT_INCONCLUSIVE);
}

#[test]
fn verify_and_search() {
    let v = json(&cli(&["verify", "--spec", SL4_2, "--c", "4", "--trials", "2"]));
    assert_eq!(v["output"]["projective_dim"].as_u64(), Some(1));
    let v = json(&cli(&["verify", "--spec", SL4_2, "--c-max", "6"]));
    assert_eq!(v["output"]["b0"].as_u64(), Some(5));
    let v = json(&cli(&["verify", "--module", "sym2", "--n", "2", "--c", "2"]));
    assert_eq!(v["output"]["algebra_dim"].as_u64(), Some(0));
}

#[test]
fn finite_modes() {
    let v = json(&cli(&["finite", "--family", "GL", "--n", "2", "--q", "5", "--action", "points"]));
    assert_eq!(v["output"]["base_size"].as_u64(), Some(3));
    let v = json(&cli(&["finite", "--family", "SL", "--n", "4", "--q", "3", "--action", "subspaces:2", "--mode", "order", "--c", "5", "--linear"]));
    assert_eq!(v["output"]["min_order"].as_u64(), Some(2));
}

#[test]
fn runs_replay_identically_apart_from_timing() {
    let strip = |mut v: Value| {
        v["wall_time_ms"] = Value::Null;
        v
    };
    let args = ["verify", "--spec", SL4_2, "--c", "3"];
    assert_eq!(strip(json(&cli(&args))), strip(json(&cli(&args))));
}

#[test]
fn emit_is_byte_stable() {
    for target in ["table:parab", "table:ep", "table:c", "table:e"] {
        for format in ["csv", "json"] {
            let a = cli(&["emit", target, "--format", format]);
            assert_eq!(a.code, EXIT_OK);
            assert_eq!(a.stdout, cli(&["emit", target, "--format", format]).stdout);
            assert!(!a.stdout.contains("wall_time_ms"));
        }
    }
}
