use std::process::Command;

use serde_json::Value;

fn ospds(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_ospds"))
        .args(args)
        .output()
        .expect("binary runs");
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

#[test]
fn ds_json_matches_schema() {
    let (code, out, _) = ospds(&["ds", "+xoox", "--t", "1", "--json"]);
    assert_eq!(code, 0);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["t"], 1);
    assert_eq!(v["rank"], 1);
    assert_eq!(v["input"], "+xoox");
    let comps = v["components"].as_array().unwrap();
    let got: Vec<(String, u64, u64)> = comps
        .iter()
        .map(|c| {
            (
                c["diagram"].as_str().unwrap().to_string(),
                c["d0"].as_u64().unwrap(),
                c["d1"].as_u64().unwrap(),
            )
        })
        .collect();
    assert!(got.contains(&("ooox".into(), 1, 0)));
    assert!(got.contains(&("+x".into(), 0, 2)));
    assert_eq!(got.len(), 2);
}

#[test]
fn ds_rank_two() {
    let (code, out, _) = ospds(&["ds", "-x^2oxoox", "--t", "1", "--rank", "2", "--json"]);
    assert_eq!(code, 0);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["rank"], 2);
    assert_eq!(v["components"].as_array().unwrap().len(), 3);
}

#[test]
fn exit_codes() {
    let (code, _, err) = ospds(&["ds", "+xoox"]);
    assert_eq!(code, 2);
    assert!(
        err.contains("diagram :="),
        "grammar printed on usage errors"
    );
    assert_eq!(ospds(&["nonsense"]).0, 2);
    assert_eq!(ospds(&["ds", "+xo?ox", "--t", "1"]).0, 2);
    assert_eq!(ospds(&["ds", "+xoox", "--t", "5"]).0, 2);
    // parses but is not a valid t=1 diagram
    assert_eq!(ospds(&["ds", "xoox", "--t", "1"]).0, 1);
    assert_eq!(ospds(&["ds", "+xoox", "--t", "1", "--rank", "3"]).0, 1);
    assert_eq!(ospds(&["tau", "+x", "--t", "1"]).0, 1);
    assert_eq!(
        ospds(&["sdim", "x<", "--t", "1", "--m", "1", "--n", "2"]).0,
        1
    );
}

#[test]
fn every_subcommand_runs() {
    let cases: &[&[&str]] = &[
        &["parse", "-x^2oxoox", "--t", "1"],
        &["validate", "x^2/>oox", "--t", "2"],
        &["core", "+o>x<x", "--t", "0"],
        &["howl", "x^2/>oo>x", "--t", "2"],
        &["unhowl", "+o>", "o", "--t", "0"],
        &["tau", "x^2/>", "--t", "2"],
        &["tau", "-x^2", "--t", "1", "--inverse"],
        &["stabilize", "x/>>ox", "--t", "1"],
        &["arcs", "-x^2oxoox", "--t", "1", "--render"],
        &["arcs", "-x^2oxoox", "--t", "1", "--json"],
        &["es", "+x^3x", "--series", "B"],
        &["es", "+x^3x", "--t", "1"],
        &["ds", ">xoox", "--t", "2"],
        &["oracle", "-x^2oooox", "-x^2", "--t", "1", "--trace"],
        &["sdim", "+ooxox", "--t", "0", "--m", "2", "--n", "2"],
        &["enumerate", "--t", "1", "--k", "2", "--width", "4"],
        &["weight", "+xx", "--t", "1", "--m", "2", "--n", "2"],
        &["sdim", "D 2 2 / 1,0 / 1,0"],
    ];
    for args in cases {
        let (code, out, err) = ospds(args);
        assert_eq!(code, 0, "{args:?}: {err}");
        assert!(!out.is_empty(), "{args:?}");
    }
}

#[test]
fn text_outputs() {
    assert_eq!(ospds(&["stabilize", ">x", "--t", "1"]).1, "+x>\nmoves: 0\n");
    assert_eq!(ospds(&["unhowl", "+o>", "o", "--t", "0"]).1, "+o>\n-o>\n");
    assert_eq!(ospds(&["oracle", "+xoox", "+x", "--t", "1"]).1, "(0|2)\n");
    assert_eq!(
        ospds(&["sdim", "+ooxoxox", "--t", "0", "--m", "3", "--n", "3"]).1,
        "24\n"
    );
    assert_eq!(
        ospds(&["enumerate", "--t", "1", "--k", "1", "--width", "2"]).1,
        "-x\n+x\nox\n"
    );
    let (_, out, _) = ospds(&["es", "+x^3x", "--series", "B"]);
    assert!(out.contains("dotted: (4;5) (6;7)"), "{out}");
    let (_, _, err) = ospds(&["oracle", "+xoox", "+x", "--t", "1", "--trace"]);
    assert!(
        err.contains("sign flip") && err.contains("drop empties"),
        "{err}"
    );
}

#[test]
fn output_is_deterministic() {
    let args = ["ds", "-x^3ooooxx", "--t", "1", "--rank", "2", "--json"];
    let first = ospds(&args);
    for _ in 0..3 {
        assert_eq!(ospds(&args), first);
    }
}
