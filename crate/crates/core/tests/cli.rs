// Licensed under the Apache License, Version 2.0 (the "License"); you may
// not use this file except in compliance with the License. You may obtain
// a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS, WITHOUT
// WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied. See the
// License for the specific language governing permissions and limitations
// under the License.

use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;
use tempfile::TempDir;

struct Scratch(TempDir);

impl Scratch {
    fn new() -> Scratch {
        Scratch(tempfile::tempdir().unwrap())
    }

    fn file(&self, name: &str, body: &str) -> PathBuf {
        let path = self.0.path().join(name);
        std::fs::write(&path, body).unwrap();
        path
    }
}

fn balcol(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_balcol")).args(args).output().unwrap()
}

fn code(out: &Output) -> i32 {
    out.status.code().unwrap()
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap()
}

fn p(path: &std::path::Path) -> &str {
    path.to_str().unwrap()
}

#[test]
fn color_two_intervals() {
    let s = Scratch::new();
    let input = s.file("pair.txt", "2 2\n0 1\n0.5 2\n");
    let out = balcol(&["color", "--input", p(&input), "--k", "2"]);
    assert_eq!(code(&out), 0);
    let v = json(&out);
    let colors: Vec<u64> = v["colors"]
        .as_array()
        .unwrap()
        .iter()
        .map(|c| c.as_u64().unwrap())
        .collect();
    assert!(colors == [1, 2] || colors == [2, 1]);
    assert_eq!(v["imbalance"], 1);
    for alg in ["dewerra", "two-color"] {
        let out = balcol(&["color", "--input", p(&input), "--algorithm", alg]);
        assert_eq!(json(&out)["imbalance"], 1, "{alg}");
    }
}

#[test]
fn color_empty_and_malformed() {
    let s = Scratch::new();
    let out = balcol(&["color", "--input", p(&s.file("empty.txt", "")), "--k", "3"]);
    assert_eq!(code(&out), 0);
    assert_eq!(json(&out), serde_json::json!({"colors": [], "imbalance": 0}));

    let out = balcol(&["color", "--input", p(&s.file("bad.txt", "2 2\n0 1\nzero 2\n"))]);
    assert_eq!(code(&out), 2);
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 3"));
}

#[test]
fn verify_exit_codes() {
    let s = Scratch::new();
    let input = s.file("pair.json", r#"{"k": 2, "intervals": [[0, 2], [1, 3]]}"#);
    let good = s.file("good.txt", "1 2\n");
    let bad = s.file("bad.json", r#"{"colors": [1, 1]}"#);
    let short = s.file("short.txt", "1\n");
    assert_eq!(
        code(&balcol(&["verify", "--input", p(&input), "--coloring", p(&good)])),
        0
    );
    let out = balcol(&["verify", "--input", p(&input), "--coloring", p(&bad)]);
    assert_eq!(code(&out), 1);
    assert_eq!(json(&out)["imbalance"], 2);
    assert_eq!(
        code(&balcol(&["verify", "--input", p(&input), "--coloring", p(&short)])),
        2
    );
    let out = balcol(&[
        "--format",
        "text",
        "verify",
        "--input",
        p(&input),
        "--coloring",
        p(&bad),
    ]);
    assert!(String::from_utf8_lossy(&out.stdout).starts_with("imbalance 2 at "));
}

#[test]
fn color_then_verify_round_trip() {
    let s = Scratch::new();
    let body = "6 3\n0 0\n0 0\n0 1\n1 1\n0 1\n1 2\n";
    let input = s.file("points.txt", body);
    let out = balcol(&["color", "--input", p(&input)]);
    assert_eq!(code(&out), 0);
    let coloring = s.file("coloring.json", std::str::from_utf8(&out.stdout).unwrap());
    assert_eq!(
        code(&balcol(&["verify", "--input", p(&input), "--coloring", p(&coloring)])),
        0
    );
}

#[test]
fn oracle_and_hypergraph() {
    let s = Scratch::new();
    let input = s.file("three.txt", "3 2\n0 2\n1 3\n0 3\n");
    let out = balcol(&["oracle", "--input", p(&input)]);
    assert_eq!(json(&out)["minimum"], 1);

    let matrix = s.file("m.txt", "3 4\n1 1 0 0\n0 1 1 0\n0 0 1 1\n");
    let out = balcol(&["hypergraph", "--input", p(&matrix), "--k", "2"]);
    assert_eq!(code(&out), 0);
    assert!(json(&out)["spread"].as_u64().unwrap() <= 1);
    let bad = s.file("bad.txt", "1 3\n1 0 1\n");
    let out = balcol(&["hypergraph", "--input", p(&bad), "--k", "2"]);
    assert_eq!(code(&out), 2);
    assert!(String::from_utf8_lossy(&out.stderr).contains("consecutive ones"));
}

#[test]
fn arcs_subcommand() {
    let s = Scratch::new();
    let input = s.file(
        "arcs.json",
        r#"{"k": 2, "circumference": 6, "arcs": [[0, 4], [2, 4], [4, 4]]}"#,
    );
    let out = balcol(&["arcs", "--input", p(&input)]);
    assert_eq!(json(&out)["imbalance"], 2);
    let out = balcol(&["arcs", "--input", p(&input), "--oracle"]);
    assert_eq!(json(&out)["imbalance"], 2);
}

#[test]
fn online_subcommand() {
    let out = balcol(&[
        "online",
        "--algorithm",
        "round_robin",
        "--k",
        "2",
        "--rounds",
        "30",
        "--adversary",
    ]);
    assert_eq!(code(&out), 0);
    let text = String::from_utf8(out.stdout).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 31);
    let last: Value = serde_json::from_str(lines[30]).unwrap();
    assert!(last["final_imbalance"].as_u64().unwrap() >= 10);

    let s = Scratch::new();
    let stream = s.file("stream.txt", "4 2\n0 3\n1 4\n2 5\n3 6\n");
    let out = balcol(&[
        "online",
        "--algorithm",
        "greedy",
        "--k",
        "2",
        "--rounds",
        "3",
        "--input",
        p(&stream),
    ]);
    assert_eq!(code(&out), 0);
    assert_eq!(String::from_utf8(out.stdout).unwrap().lines().count(), 3);

    assert_eq!(
        code(&balcol(&[
            "online",
            "--algorithm",
            "bogus",
            "--rounds",
            "3",
            "--adversary"
        ])),
        2
    );
}

#[test]
fn online_output_is_deterministic() {
    let args = [
        "online",
        "--algorithm",
        "random",
        "--k",
        "3",
        "--rounds",
        "20",
        "--seed",
        "9",
        "--adversary",
    ];
    assert_eq!(balcol(&args).stdout, balcol(&args).stdout);
}

#[test]
fn reduce_and_decide() {
    let s = Scratch::new();
    let sat = s.file("sat.cnf", "c one clause\np nae 3 1\n1 2 3\n");
    let svg = s.0.path().join("boxes.svg");
    let out = balcol(&["reduce", "nae3sat", "--input", p(&sat), "--svg", p(&svg)]);
    assert_eq!(code(&out), 0);
    assert!(std::fs::read_to_string(&svg).unwrap().starts_with("<svg"));
    let boxes = s.file("sat.json", std::str::from_utf8(&out.stdout).unwrap());
    let out = balcol(&["decide-boxes", "--input", p(&boxes)]);
    assert_eq!(code(&out), 0);
    assert_eq!(json(&out)["balanced"], true);

    let unsat = s.file("unsat.cnf", "p nae 1 1\n1 1 1\n");
    let out = balcol(&["reduce", "nae3sat", "--input", p(&unsat), "--k", "3"]);
    let boxes = s.file("unsat.json", std::str::from_utf8(&out.stdout).unwrap());
    let out = balcol(&["decide-boxes", "--input", p(&boxes)]);
    assert_eq!(code(&out), 1);
    assert_eq!(json(&out)["colors"], Value::Null);

    let two = s.file("two.cnf", "p nae 4 2\n1 2 3\n1 2 4\n");
    let out = balcol(&["reduce", "multiple", "--input", p(&two)]);
    assert_eq!(json(&out)["groups"], serde_json::json!([[0, 3], [1, 4], [2], [5]]));

    let out = balcol(&[
        "reduce",
        "nae3sat",
        "--input",
        p(&s.file("bad.cnf", "p nae 2 1\n1 2 3\n")),
    ]);
    assert_eq!(code(&out), 2);
}
