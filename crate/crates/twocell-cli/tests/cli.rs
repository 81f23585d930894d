use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn data(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/data").join(name).display().to_string()
}

fn twocell(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_twocell")).args(args).output().expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| panic!("{e}: {}", String::from_utf8_lossy(&out.stdout)))
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exited normally")
}

#[test]
fn info_weighted_z3() {
    let out = twocell(&["info", &data("z3_weighted.tc"), "--json"]);
    assert_eq!(code(&out), 0);
    let v = json(&out);
    let per: Vec<u64> = v["edges"].as_array().unwrap().iter().map(|e| e["perimeter"].as_u64().unwrap()).collect();
    assert_eq!(per, [5, 12, 5]);
    let wt: Vec<u64> = v["cells"].as_array().unwrap().iter().map(|c| c["weight"].as_u64().unwrap()).collect();
    assert_eq!(wt, [10, 3, 9]);
}

#[test]
fn info_aab_cubed_sides_and_exponent() {
    let v = json(&twocell(&["info", &data("aab3.tc"), "--json"]));
    assert_eq!(v["edges"][0]["perimeter"], 6);
    assert_eq!(v["edges"][1]["perimeter"], 3);
    assert_eq!(v["cells"][0]["exponent"], 3);
    assert_eq!(v["cells"][0]["period"], 3);
}

#[test]
fn info_without_relators() {
    let out = twocell(&["info", &data("empty_relator.tc"), "--json"]);
    let v = json(&out);
    assert!(v["edges"].as_array().unwrap().iter().all(|e| e["perimeter"] == 0));
    let text = String::from_utf8(twocell(&["info", &data("empty_relator.tc")]).stdout).unwrap();
    assert!(text.contains("P(a) = 0"));
}

#[test]
fn check_surface_strict_c4t4() {
    let out = twocell(&["check", &data("surface3.tc"), "--criterion", "sc-c4t4-strict"]);
    assert_eq!(code(&out), 0);
    let v = json(&out);
    assert_eq!(v["holds"], true);
    assert_eq!(v["conclusion"], "both");
}

#[test]
fn check_uv_unit_fails_with_witness() {
    let out = twocell(&["check", &data("uv.tc"), "--criterion", "sc-c4t4"]);
    assert_eq!(code(&out), 1);
    let v = json(&out);
    assert_eq!(v["holds"], false);
    let w = &v["witnesses"][0];
    assert_eq!(w["word"], "1 1 1 2 2 2");
    assert_eq!((w["perimeter"].as_u64(), w["bound"].as_u64()), (Some(48), Some(32)));
}

#[test]
fn check_inapplicable_exits_three() {
    let out = twocell(&["check", &data("one_relator.tc"), "--criterion", "one-relator-torsion"]);
    assert_eq!(code(&out), 3);
    assert!(json(&out)["notes"][0].as_str().unwrap().starts_with("inapplicable"));
}

#[test]
fn check_all_lists_every_criterion() {
    let out = twocell(&["check", &data("surface3.tc")]);
    assert_eq!(code(&out), 0);
    assert_eq!(json(&out).as_array().unwrap().len(), twocell::criteria::CRITERIA.len());
}

#[test]
fn json_keys_are_sorted() {
    let text = String::from_utf8(twocell(&["check", &data("surface3.tc"), "--criterion", "sc-c6t3"]).stdout).unwrap();
    let keys: Vec<&str> = text.lines().filter(|l| l.starts_with("  \"")).map(|l| l.trim().split('"').nth(1).unwrap()).collect();
    let mut sorted = keys.clone();
    sorted.sort_unstable();
    assert_eq!(keys, sorted);
}

#[test]
fn free_membership() {
    let f = data("free2.tc");
    let out = twocell(&["member", &f, "--gens", "a^2,ab", "--word", "ab"]);
    assert_eq!((code(&out), String::from_utf8_lossy(&out.stdout).trim()), (0, "true"));
    let out = twocell(&["member", &f, "--gens", "@H", "--word", "b"]);
    assert_eq!(code(&out), 1);
    assert_eq!(code(&twocell(&["member", &f, "--gens", "@H", "--word", ""])), 0);
}

#[test]
fn free_subgroup_rank() {
    let out = twocell(&["subgroup", &data("free2.tc"), "--gens", "a^2,ab", "--json"]);
    assert_eq!(code(&out), 0);
    let v = json(&out);
    assert_eq!(v["presentation"]["generators"].as_array().unwrap().len(), 2);
    assert!(v["presentation"]["relators"].as_array().unwrap().is_empty());
    assert_eq!(v["heuristic"], false);
}

#[test]
fn uncertified_needs_force() {
    let f = data("one_relator.tc");
    assert_eq!(code(&twocell(&["subgroup", &f, "--gens", "a"])), 3);
    let out = twocell(&["subgroup", &f, "--gens", "a", "--force", "--json"]);
    assert_eq!(code(&out), 0);
    assert_eq!(json(&out)["heuristic"], true);
}

#[test]
fn trace_file_follows_the_line_grammar() {
    let dir = std::env::temp_dir().join(format!("twocell-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("trace.txt");
    let out = twocell(&["subgroup", &data("torus.tc"), "--gens", "@H", "--trace", path.to_str().unwrap()]);
    assert_eq!(code(&out), 0);
    let trace = std::fs::read_to_string(&path).unwrap();
    assert!(!trace.is_empty());
    for (i, line) in trace.lines().enumerate() {
        let f: Vec<&str> = line.split(' ').collect();
        assert_eq!(f.len(), 4, "{line}");
        assert_eq!(f[0], format!("step={}", i + 1));
        assert!(["kind=fold", "kind=attach-complete", "kind=attach-incomplete", "kind=repair", "kind=redundant"]
            .contains(&f[1]));
        assert!(f[2].strip_prefix("P=").unwrap().parse::<u64>().is_ok());
        assert!(f[3].strip_prefix("edges=").unwrap().parse::<usize>().is_ok());
    }
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn intersect_in_free_group() {
    let out = twocell(&["intersect", &data("free2.tc"), "--gens", "@H", "--with", "@K", "--json"]);
    assert_eq!(code(&out), 0);
    assert_eq!(json(&out)["presentation"]["generators"].as_array().unwrap().len(), 1);
}

#[test]
fn errors_exit_two() {
    let out = twocell(&["info", &data("bad.tc")]);
    assert_eq!(code(&out), 2);
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 2, column 7"));
    assert_eq!(code(&twocell(&["check", &data("aab3.tc"), "--criterion", "nope"])), 2);
    assert_eq!(code(&twocell(&["member", &data("free2.tc"), "--gens", "@Missing", "--word", "a"])), 2);
    assert_eq!(code(&twocell(&["info", &data("no_such_file.tc")])), 2);
}
