use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Output, Stdio};

use serde_json::Value;
use sturdy_core::{parse_family, sturdiness};

fn sturdy(args: &[&str]) -> Output {
    sturdy_with(args, None, &[])
}

fn sturdy_with(args: &[&str], stdin: Option<&str>, env: &[(&str, &str)]) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_sturdy"));
    cmd.args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped());
    cmd.env_remove("STURDY_BUDGET_NODES");
    for (k, v) in env {
        cmd.env(k, v);
    }
    let mut child = cmd.spawn().expect("binary runs");
    if let Some(input) = stdin {
        child
            .stdin
            .take()
            .unwrap()
            .write_all(input.as_bytes())
            .unwrap();
    } else {
        drop(child.stdin.take());
    }
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).unwrap_or_else(|e| panic!("bad JSON ({e}): {}", stdout(o)))
}

fn construct(dir: &tempfile::TempDir, spec: &str, name: &str) -> PathBuf {
    let path = dir.path().join(name);
    let o = sturdy(&["construct", spec, "-o", path.to_str().unwrap()]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    path
}

fn line<'a>(text: &'a str, key: &str) -> &'a str {
    text.lines()
        .find_map(|l| l.strip_prefix(key).and_then(|rest| rest.strip_prefix(' ')))
        .unwrap_or_else(|| panic!("no `{key}` line in:\n{text}"))
}

#[test]
fn construct_pipes_into_metrics() {
    let fam = stdout(&sturdy(&["construct", "powerset:n=4"]));
    assert!(fam.starts_with("n=4\n-\n1\n"));
    let o = sturdy_with(&["metrics", "-"], Some(&fam), &[]);
    assert!(o.status.success());
    assert_eq!(line(&stdout(&o), "beta"), "4");
}

#[test]
fn metrics_on_files() {
    let dir = tempfile::tempdir().unwrap();
    let t = construct(&dir, "triangle:n=8,k=4", "t.fam");
    let out = stdout(&sturdy(&["metrics", t.to_str().unwrap()]));
    assert_eq!(line(&out, "beta"), "4");
    assert_eq!(line(&out, "gamma"), "10");
    let s = construct(&dir, "star:n=8,k=4,c=1", "s.fam");
    assert_eq!(
        line(&stdout(&sturdy(&["metrics", s.to_str().unwrap()])), "beta"),
        "0"
    );

    let j = json(&sturdy(&[
        "metrics",
        "--matrix",
        "--json",
        t.to_str().unwrap(),
    ]));
    assert_eq!(j["results"]["beta"], "4");
    assert_eq!(j["results"]["matrix"][3][0], "4");
    assert_eq!(j["results"]["matrix"][0][0], "0");
}

#[test]
fn check_exit_codes_and_witnesses() {
    let dir = tempfile::tempdir().unwrap();
    let t = construct(&dir, "triangle:n=8,k=4", "t.fam");
    let t = t.to_str().unwrap();
    assert_eq!(sturdy(&["check", "intersecting", t]).status.code(), Some(0));

    let o = sturdy(&["check", "t-intersecting", "--t", "2", t]);
    assert_eq!(o.status.code(), Some(1));
    let j = json(&sturdy(&[
        "check",
        "t-intersecting",
        "--t",
        "2",
        "--json",
        t,
    ]));
    let w: Vec<String> = j["verdicts"]["witness"]
        .as_array()
        .unwrap()
        .iter()
        .map(|v| v.as_str().unwrap().to_string())
        .collect();
    assert_eq!(w.len(), 2);
    assert!(stdout(&o).starts_with("fails: "));

    let star2 = construct(&dir, "star:n=6,k=3,c=2", "s.fam");
    assert_eq!(
        sturdy(&["check", "shifted", star2.to_str().unwrap()])
            .status
            .code(),
        Some(1)
    );
    assert_eq!(
        sturdy(&["check", "no-such-predicate", t]).status.code(),
        Some(2)
    );
    assert_eq!(
        sturdy(&["check", "t-intersecting", t]).status.code(),
        Some(2)
    );

    let ball = construct(&dir, "hamming_ball:n=4,r=1", "b.fam");
    let o = sturdy(&["check", "hamming-ball", ball.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("radius 1"));
}

#[test]
fn parse_errors_exit_2() {
    let o = sturdy_with(&["metrics", "-"], Some("n=3\n1 2\n1 2\n"), &[]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 3"));
    assert_eq!(
        sturdy(&["construct", "triangle:n=8"]).status.code(),
        Some(2)
    );
}

#[test]
fn transforms() {
    let dir = tempfile::tempdir().unwrap();
    let s = construct(&dir, "star:n=6,k=3,c=4", "s.fam");
    let shifted = stdout(&sturdy(&["transform", "shift", s.to_str().unwrap()]));
    let fam = parse_family(&shifted).unwrap();
    assert!(sturdy_core::metrics::is_shifted(&fam));
    assert_eq!(fam.len(), 10);

    let a1 = construct(&dir, "frankl:n=8,k=4,t=1,i=1", "a1.fam");
    let basis = stdout(&sturdy(&[
        "transform",
        "basis",
        "--t",
        "1",
        a1.to_str().unwrap(),
    ]));
    assert!(basis.contains("# weight_sum 3/4"));
    assert!(basis.ends_with("n=8\n1 2\n1 3\n2 3\n"));

    let gens = dir.path().join("g.fam");
    std::fs::write(&gens, "n=8\n1 2\n1 3\n2 3\n").unwrap();
    let generated = stdout(&sturdy(&[
        "transform",
        "generated",
        "--k",
        "4",
        gens.to_str().unwrap(),
    ]));
    assert_eq!(
        parse_family(&generated).unwrap(),
        parse_family(&std::fs::read_to_string(&a1).unwrap()).unwrap()
    );
}

#[test]
fn formulas() {
    let v = |args: &[&str]| line(&stdout(&sturdy(args)), "value").to_string();
    assert_eq!(
        v(&[
            "formula",
            "nonuniform-t-intersecting-beta",
            "--n",
            "8",
            "--t",
            "2"
        ]),
        "22"
    );
    assert_eq!(v(&["formula", "katona", "--n", "6", "--t", "2"]), "22");
    assert_eq!(
        v(&["formula", "diameter-beta", "--n", "6", "--w", "2"]),
        "1"
    );
    assert_eq!(v(&["formula", "binom", "--a", "3", "--b", "-1"]), "0");
    assert_eq!(
        v(&[
            "formula",
            "frankl-beta",
            "--n",
            "12",
            "--k",
            "6",
            "--t",
            "1",
            "--i",
            "2"
        ]),
        "66"
    );
    let ratio = stdout(&sturdy(&[
        "formula",
        "frankl-ratio",
        "--n",
        "10",
        "--k",
        "5",
        "--t",
        "1",
    ]));
    assert_eq!(line(&ratio, "exact"), "17/15");
    assert_eq!(line(&ratio, "asymptotic"), "17/25");
    let j = json(&sturdy(&[
        "formula",
        "--json",
        "triangle-cases",
        "--n",
        "8",
        "--k",
        "4",
    ]));
    assert_eq!(j["results"]["min"], "4");
    assert_eq!(sturdy(&["formula", "nope"]).status.code(), Some(2));
    assert!(stdout(&sturdy(&["formula", "--list"])).lines().count() >= 20);
}

#[test]
fn search_reports_are_reproducible_and_round_trip() {
    let args = [
        "search",
        "max-beta",
        "--constraint",
        "t-intersecting-any",
        "--n",
        "6",
        "--t",
        "2",
        "--json",
    ];
    let one = sturdy(&[&args[..], &["--workers", "1"]].concat());
    let four = sturdy(&[&args[..], &["--workers", "4"]].concat());
    assert!(one.status.success());
    assert_eq!(one.stdout, four.stdout);
    let j = json(&one);
    assert_eq!(j["results"]["max_beta"], "5");
    assert_eq!(j["results"]["exhausted"], true);
    assert!(j.get("timing").is_none());
    let witness = parse_family(j["witnesses"]["witness"].as_str().unwrap()).unwrap();
    assert_eq!(sturdiness(&witness).unwrap(), 5);

    let timed = json(&sturdy(&[&args[..], &["--timing"]].concat()));
    assert!(timed["timing"]["seconds"].is_string());
}

#[test]
fn budget_exhaustion_exits_3() {
    let args = [
        "search",
        "max-beta",
        "--constraint",
        "diameter",
        "--n",
        "6",
        "--w",
        "5",
    ];
    let o = sturdy(&[&args[..], &["--budget-nodes", "2000"]].concat());
    assert_eq!(o.status.code(), Some(3));
    assert_eq!(line(&stdout(&o), "exhausted"), "false");
    let o = sturdy_with(&args, None, &[("STURDY_BUDGET_NODES", "2000")]);
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn probe() {
    let o = sturdy(&[
        "search",
        "probe",
        "--conjecture",
        "c63",
        "--n",
        "5",
        "--json",
    ]);
    assert!(o.status.success());
    let j = json(&o);
    assert_eq!(j["results"]["bound"], "2");
    assert_eq!(j["verdicts"]["within_bound"], true);
    let o = sturdy(&[
        "search",
        "probe",
        "--conjecture",
        "c61",
        "--n",
        "6",
        "--s",
        "1",
    ]);
    assert!(o.status.success());
    assert_eq!(
        line(&stdout(&o), "bound"),
        "1 (outside the conjectured range of n)"
    );
    assert_eq!(
        sturdy(&["search", "probe", "--conjecture", "c99", "--n", "5"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn verify_claims() {
    let o = sturdy(&["verify", "claim16"]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("β(T(8,4)) = 4 = C(4,1)"));

    let o = sturdy(&["verify", "f0-prop36", "prop12-duality"]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("printed coefficient 16; derived N₄ = 15"));

    assert_eq!(sturdy(&["verify", "no-such-claim"]).status.code(), Some(2));

    let list = stdout(&sturdy(&["verify", "--list"]));
    assert_eq!(list.lines().count(), 21);

    let all = sturdy(&["verify", "--all", "--json"]);
    assert!(all.status.success(), "{}", stdout(&all));
    let j = json(&all);
    assert_eq!(j["verdicts"]["passed"], "21");
    assert_eq!(j["verdicts"]["failed"], "0");
    let again = sturdy(&["verify", "--all", "--json"]);
    assert_eq!(all.stdout, again.stdout);
}

#[test]
fn verify_is_seeded() {
    let a = sturdy(&["verify", "prop12-duality", "--seed", "7", "--json"]);
    let b = sturdy(&["verify", "prop12-duality", "--seed", "7", "--json"]);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(json(&a)["parameters"]["seed"], "7");
}
