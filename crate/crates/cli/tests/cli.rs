use std::path::PathBuf;
use std::process::Command;

struct Run {
    stdout: String,
    stderr: String,
    code: i32,
}

fn ordring(args: &[&str]) -> Run {
    let out = Command::new(env!("CARGO_BIN_EXE_ordring")).args(args).output().expect("binary runs");
    Run {
        stdout: String::from_utf8(out.stdout).unwrap(),
        stderr: String::from_utf8(out.stderr).unwrap(),
        code: out.status.code().expect("exit code"),
    }
}

fn script(name: &str, body: &str) -> PathBuf {
    let path = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join(name);
    std::fs::write(&path, body).unwrap();
    path
}

#[test]
fn cmp_laurent() {
    let r = ordring(&["cmp", "--group", "free_abelian:1", "1*[1]", "1*[0]"]);
    assert_eq!(r.code, 0);
    assert_eq!(r.stdout, "Greater\ndeciding term: 1*[1]\n");
}

#[test]
fn cmp_heisenberg_center_is_positive() {
    let r = ordring(&["cmp", "--group", "heisenberg", "1*[0,0,1]", "0"]);
    assert_eq!(r.code, 0);
    assert!(r.stdout.starts_with("Greater\n"), "{}", r.stdout);
}

#[test]
fn cmp_equal_has_no_deciding_term() {
    let r = ordring(&["cmp", "--group", "klein", "2*[1,0] - 1*[0,0]", "-1*[0,0] + 2*[1,0]"]);
    assert_eq!(r.stdout, "Equal\ndeciding term: none\n");
}

#[test]
fn cmp_tower_literals() {
    let r = ordring(&["cmp", "--group", "free_abelian:1", "--rank", "1", "--flavors", "divisible", "g0/2", "e0*(5*[3])"]);
    assert_eq!(r.code, 0, "{}", r.stderr);
    assert_eq!(r.stdout, "Greater\ndeciding term: g0: 1*[0]\n");
}

#[test]
fn malformed_literal_exits_2_with_position() {
    let r = ordring(&["cmp", "--group", "heisenberg", "1*[0,0", "0"]);
    assert_eq!(r.code, 2);
    assert!(r.stderr.contains("position"), "{}", r.stderr);
    let r = ordring(&["cmp", "--group", "heisenberg", "1*[0,0]", "0"]);
    assert_eq!(r.code, 2, "wrong arity");
}

#[test]
fn unit_verdicts() {
    let r = ordring(&["unit", "--group", "free_abelian:1", "1*[3]"]);
    assert_eq!((r.code, r.stdout.as_str()), (0, "unit\ninverse: 1*[-3]\njustified_by_biorder: true\n"));
    let r = ordring(&["unit", "--group", "free_abelian:1", "2*[0]"]);
    assert!(r.stdout.contains("reason: CoefficientNotUnit"));
    let r = ordring(&["unit", "--group", "free_abelian:1", "1*[1] + 1*[0]"]);
    assert!(r.stdout.contains("reason: NonSingletonSupport"));
    let r = ordring(&["unit", "--group", "klein", "1*[1] + 1*[0]"]);
    assert_eq!(r.code, 2, "klein elements have two coordinates");
}

#[test]
fn text_and_structured_agree() {
    let text = ordring(&["unit", "--group", "heisenberg", "-1*[1,2,3]"]);
    let doc = ordring(&["unit", "--group", "heisenberg", "-1*[1,2,3]", "--format", "structured"]);
    let v: serde_json::Value = serde_json::from_str(&doc.stdout).unwrap();
    assert_eq!(v["verdict"], "unit");
    assert!(text.stdout.contains(&format!("inverse: {}", v["inverse"].as_str().unwrap())));
    assert_eq!(v["inverse"], "-1*[-1,-2,-1]");
}

#[test]
fn structured_error_is_one_document() {
    let r = ordring(&["cmp", "--format", "structured", "--group", "nope", "0", "0"]);
    assert_eq!(r.code, 2);
    let v: serde_json::Value = serde_json::from_str(&r.stdout).unwrap();
    assert_eq!(v["command"], "cmp");
    assert!(v["error"].is_string());
}

#[test]
fn suite_rejects_zero_trials() {
    let r = ordring(&["suite", "--trials", "0"]);
    assert_eq!(r.code, 2);
    assert!(r.stderr.contains("trials"));
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(ordring(&["frobnicate"]).code, 2);
    assert_eq!(ordring(&["suite", "--flavors", "sticky"]).code, 2);
}

#[test]
fn suite_is_reproducible() {
    let args = ["suite", "--trials", "200", "--seed", "0x2a", "--format", "structured"];
    let a = ordring(&args);
    let b = ordring(&args);
    assert_eq!(a.code, 0, "{}", a.stdout);
    assert_eq!(a.stdout, b.stdout);
    let v: serde_json::Value = serde_json::from_str(&a.stdout).unwrap();
    assert_eq!(v["passed"], true);
    assert_eq!(v["config"]["seed"], 42);
}

#[test]
fn tower_divisible_lift_is_positive() {
    let s = script("lift_div.txt", "lift y = 0 by (1*[0])/2\n");
    let r = ordring(&["tower", "--group", "free_abelian:1", "--rank", "1", "--flavors", "divisible", s.to_str().unwrap()]);
    assert_eq!(r.code, 0, "{}", r.stderr);
    assert!(r.stdout.contains("step 1: y = g0*(1*[0])/2  stage 1  sign Positive"), "{}", r.stdout);
    assert!(r.stdout.contains(", 0 failures"));
}

#[test]
fn tower_free_lift_fails_at_its_step() {
    let s = script("lift_free.txt", "let x = e0\n\n# now the bad one\nlift y = x by (1*[0])/2\n");
    let r = ordring(&["tower", "--group", "free_abelian:1", "--rank", "1", "--flavors", "free", s.to_str().unwrap()]);
    assert_eq!(r.code, 2);
    assert!(r.stderr.contains("step 2"), "{}", r.stderr);
}

#[test]
fn tower_three_stage_positive_action() {
    let s = script(
        "three_stage.txt",
        "let x = e0\n\
         lift y1 = x by (1*[0])/2\n\
         lift y2 = y1 by (1*[0] - 3*[-1])\n\
         lift y3 = y2 by (2*[1])/9\n\
         act z1 = y1 by 1*[1]\n\
         act z2 = y2 by 1*[1]\n\
         act z3 = y3 by 1*[1]\n",
    );
    let r = ordring(&[
        "tower", "--group", "free_abelian:1", "--rank", "1", "--flavors", "d,f,d", "--format", "structured",
        s.to_str().unwrap(),
    ]);
    assert_eq!(r.code, 0, "{}", r.stderr);
    let v: serde_json::Value = serde_json::from_str(&r.stdout).unwrap();
    let steps = v["steps"].as_array().unwrap();
    assert_eq!(steps.len(), 7);
    assert!(steps.iter().all(|s| s["sign"] == "Positive"), "{steps:?}");
    assert_eq!(steps[6]["stage"], 3);
    assert!(v["well_definedness"]["failures"].as_array().unwrap().is_empty());
}

#[test]
fn tower_config_file() {
    let cfg = script("tower.toml", "group = \"heisenberg\"\nrank = 1\nprimes = [5]\nflavors = [\"divisible\"]\n");
    let s = script("five.txt", "lift y = 0 by (-1*[0,0,0])/25\nsign y\n");
    let r = ordring(&["tower", "--config", cfg.to_str().unwrap(), s.to_str().unwrap()]);
    assert_eq!(r.code, 0, "{}", r.stderr);
    assert!(r.stdout.contains("primes=5"));
    assert!(r.stdout.contains("step 2: sign y -> Negative"), "{}", r.stdout);
    let bad = script("bad.toml", "colour = 1\n");
    assert_eq!(ordring(&["tower", "--config", bad.to_str().unwrap(), s.to_str().unwrap()]).code, 2);
}

#[test]
fn klein_probe_is_informational_and_seed_stable() {
    let a = ordring(&["probe", "--group", "klein", "--trials", "300", "--seed", "1"]);
    let b = ordring(&["probe", "--group", "klein", "--trials", "300", "--seed", "2"]);
    assert_eq!(a.code, 0);
    assert_eq!(b.code, 0);
    let verdict = |s: &str| s.lines().find(|l| l.starts_with("verdict:")).map(str::to_owned);
    assert_eq!(verdict(&a.stdout), Some("verdict: violation found".into()));
    assert_eq!(verdict(&a.stdout), verdict(&b.stdout));
    assert!(a.stdout.contains("scope: not verified"));
}

#[test]
fn heisenberg_probe_passes() {
    let r = ordring(&["probe", "--group", "heisenberg", "--trials", "300", "--format", "structured"]);
    assert_eq!(r.code, 0);
    let v: serde_json::Value = serde_json::from_str(&r.stdout).unwrap();
    assert_eq!(v["verdict"], "closed");
    assert!(v["exhaustive"].is_null());
}
