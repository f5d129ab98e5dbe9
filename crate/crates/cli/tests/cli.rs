use std::process::{Command, Output};

use degseq::DegreeSequence;
use serde_json::Value;

fn degseq(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_degseq")).args(args).output().expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = degseq(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

fn envelope(args: &[&str]) -> Value {
    let mut full = vec!["--json"];
    full.extend_from_slice(args);
    serde_json::from_str(&stdout(&full)).expect("valid JSON")
}

fn schema() -> jsonschema::JSONSchema {
    let text = std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/schema/output.json")).unwrap();
    let value: Value = serde_json::from_str(&text).unwrap();
    jsonschema::JSONSchema::compile(&value).expect("schema compiles")
}

const SAMPLES: &[&[&str]] = &[
    &["check", "4,4,3,1,1,1,1,1"],
    &["check", "--tv", "3,3,1,1"],
    &["leg", "--n", "8", "--sigma", "16", "--c1", "4", "--c2", "1"],
    &["region", "--n", "8", "--sigma", "16", "--c1", "4", "--c2", "1", "--predicate", "jms-star-sigma"],
    &["region", "--n", "6", "--c1", "5", "--c2", "1", "--predicate", "fg"],
    &["region", "--n", "12", "--sigma", "90", "--c1", "8", "--c2", "5", "--predicate", "eps:1/2"],
    &["count", "2,1,1,1,1"],
    &["enumerate", "1,1,1,1"],
    &["pmeasure", "2,2,1,1"],
    &["verify-appendix", "2,2,1,1"],
    &["h-family", "--m", "2", "--to", "4"],
    &["split-check", "3,3,1,1,1,1"],
    &["split-witness", "--n", "10", "--c1", "9", "--c2", "3"],
    &["tyshkevich", "--g", "3:0-1,0-2", "--clique", "0,1", "--h", "2:0-1", "--verify"],
    &["nonstab-witness", "--n", "6", "--n-prime", "8", "--c1", "5", "--c2", "1", "--verify"],
    &["mcmc", "--degrees", "1,1,1,1", "--steps", "2000", "--seed", "4", "--report-every", "1000"],
    &["sweep", "--n-max", "4", "--skip-empty", "--predicate", "jms"],
    &["sweep", "--n-max", "4", "--very-simple"],
];

#[test]
fn documented_examples() {
    assert_eq!(stdout(&["check", "4,4,3,1,1,1,1,1"]).trim(), "graphic");
    assert_eq!(stdout(&["leg", "--n", "8", "--sigma", "16", "--c1", "4", "--c2", "1"]).trim(), "4,4,3,1,1,1,1,1");
    assert_eq!(stdout(&["count", "2,1,1,1,1"]).trim(), "6");
}

#[test]
fn unsorted_input_is_normalized_with_a_notice() {
    let out = degseq(&["count", "1,1,2,1,1"]);
    assert!(out.status.success());
    assert_eq!(String::from_utf8_lossy(&out.stdout).trim(), "6");
    assert!(String::from_utf8_lossy(&out.stderr).contains("2,1,1,1,1"));
}

#[test]
fn envelopes_match_the_schema() {
    let schema = schema();
    for args in SAMPLES {
        let v = envelope(args);
        if let Err(errors) = schema.validate(&v) {
            let msgs: Vec<String> = errors.map(|e| format!("{e} at {}", e.instance_path)).collect();
            panic!("{args:?}: {msgs:?}");
        }
        assert_eq!(v["command"], args[0]);
        assert_eq!(v["version"], env!("CARGO_PKG_VERSION"));
    }
}

#[test]
fn schema_rejects_malformed_envelopes() {
    let schema = schema();
    let mut v = envelope(&["count", "2,1,1,1,1"]);
    assert!(schema.is_valid(&v));
    v["result"]["count"] = Value::from(6);
    assert!(!schema.is_valid(&v));
    let bogus = serde_json::json!({ "command": "nope", "inputs": {}, "result": {}, "version": "1.0.0" });
    assert!(!schema.is_valid(&bogus));
}

fn printed_sequences(v: &Value, out: &mut Vec<String>) {
    const KEYS: &[&str] = &["sequence", "leg", "e", "perturbed", "h", "h_prime", "degrees"];
    match v {
        Value::Object(map) => {
            for (k, x) in map {
                match x {
                    Value::String(s) if KEYS.contains(&k.as_str()) => out.push(s.clone()),
                    _ => printed_sequences(x, out),
                }
            }
        }
        Value::Array(items) => items.iter().for_each(|x| printed_sequences(x, out)),
        _ => {}
    }
}

#[test]
fn printed_sequences_round_trip() {
    let mut seen = Vec::new();
    for args in SAMPLES {
        printed_sequences(&envelope(args)["result"], &mut seen);
    }
    assert!(seen.len() > 15);
    for s in seen {
        let d: DegreeSequence = s.parse().unwrap();
        assert_eq!(d.to_string(), s);
        assert!(stdout(&["count", &s]).trim().parse::<u64>().is_ok());
    }
    let human = stdout(&["leg", "--n", "10", "--sigma", "30", "--c1", "5", "--c2", "2"]);
    let d: DegreeSequence = human.trim().parse().unwrap();
    assert_eq!(d.to_string(), human.trim());
}

#[test]
fn exit_codes() {
    assert_eq!(degseq(&["leg", "--n", "3", "--sigma", "3", "--c1", "2", "--c2", "1"]).status.code(), Some(1));
    assert_eq!(degseq(&["pmeasure", "3,3,1,1"]).status.code(), Some(1));
    assert_eq!(degseq(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(degseq(&["count", "1,x"]).status.code(), Some(2));
    assert_eq!(degseq(&["count", &["7"; 17].join(",")]).status.code(), Some(3));
    let out = Command::new(env!("CARGO_BIN_EXE_degseq"))
        .args(["count", "5,5,5,5,5,5,5,5,5,5"])
        .env("DEGSEQ_NODE_BUDGET", "2")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(3));
    let out = Command::new(env!("CARGO_BIN_EXE_degseq"))
        .args(["count", "1,1,1,1"])
        .env("DEGSEQ_MAX_VERTICES", "3")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn mcmc_reports_distance_and_metadata() {
    let v = envelope(&["mcmc", "--degrees", "2,2,1,1,1,1", "--steps", "100000", "--seed", "1"]);
    let r = &v["result"];
    assert_eq!(r["state_count"], "18");
    assert!(r["tv_distance"].as_f64().unwrap() < 0.05);
    assert_eq!(r["metadata"]["rng"], degseq::mcmc::RNG_ALGORITHM);
    let total: u64 = r["histogram"].as_object().unwrap().values().map(|c| c.as_u64().unwrap()).sum();
    assert_eq!(total, 100_000);
    let again = envelope(&["mcmc", "--degrees", "2,2,1,1,1,1", "--steps", "100000", "--seed", "1"]);
    assert_eq!(v, again);
}

#[test]
fn sweep_rows_are_ordered_and_labeled() {
    let v = envelope(&["sweep", "--n-min", "2", "--n-max", "6"]);
    let rows = v["result"]["rows"].as_array().unwrap();
    let key = |r: &Value| ["n", "sigma", "c1", "c2"].map(|k| r[k].as_u64().unwrap());
    assert!(rows.windows(2).all(|w| key(&w[0]) < key(&w[1])));
    let label = |n: u64, s: u64, c1: u64, c2: u64| {
        rows.iter().find(|r| key(r) == [n, s, c1, c2]).unwrap()["label"].as_str().unwrap().to_string()
    };
    assert_eq!(label(6, 14, 5, 1), "NOT_FULLY_GRAPHIC");
    assert_eq!(label(4, 12, 3, 3), "FULLY_GRAPHIC");
    assert_eq!(label(4, 11, 3, 2), "EMPTY");
    assert_eq!(label(3, 5, 2, 0), "EMPTY");
    assert_eq!(label(3, 6, 1, 0), "EMPTY");
}
