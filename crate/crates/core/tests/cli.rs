use std::io::Write;
use std::process::{Command, Stdio};

struct Run {
    code: i32,
    stdout: String,
    stderr: String,
}

fn run_with(args: &[&str], stdin: &str, env: &[(&str, &str)]) -> Run {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_hyperfam"));
    cmd.args(args).stdin(Stdio::piped()).stdout(Stdio::piped()).stderr(Stdio::piped());
    for var in ["QUAD_TOL", "SERIES_TOL", "PRECISION"] {
        cmd.env_remove(var);
    }
    for (k, v) in env {
        cmd.env(k, v);
    }
    let mut child = cmd.spawn().expect("binary runs");
    child.stdin.take().unwrap().write_all(stdin.as_bytes()).unwrap();
    let out = child.wait_with_output().unwrap();
    Run {
        code: out.status.code().unwrap_or(-1),
        stdout: String::from_utf8(out.stdout).unwrap(),
        stderr: String::from_utf8(out.stderr).unwrap(),
    }
}

fn run(args: &[&str]) -> Run {
    run_with(args, "", &[])
}

fn rows(out: &str) -> Vec<Vec<f64>> {
    out.lines()
        .filter(|l| !l.starts_with('#'))
        .skip(1)
        .map(|l| l.split(',').map(|c| c.parse().unwrap()).collect())
        .collect()
}

#[test]
fn eval_closed_forms() {
    let r = run(&["eval", "--which", "xi0", "--s", "1"]);
    assert_eq!(r.code, 0);
    assert_eq!(r.stdout, "s,value\n1,0.386294361120\n");
    assert_eq!(run(&["eval", "--which", "xi0", "--s", "0"]).stdout, "s,value\n0,1\n");
    assert_eq!(run(&["eval", "--which", "xi0", "--s", "inf"]).stdout, "s,value\ninf,0\n");
    let f = rows(&run(&["eval", "--which", "F", "--s", "1"]).stdout);
    assert!((f[0][1] - std::f64::consts::LN_2).abs() < 1e-12);
}

#[test]
fn eval_grid_and_complex() {
    let r = run(&["eval", "--which", "xi3", "--smin", "1", "--smax", "2", "--n", "2"]);
    let v = rows(&r.stdout);
    assert_eq!(v.len(), 2);
    assert!(v[0][1] < v[1][1]);
    let h = run(&["eval", "--which", "hyp", "--s", "1", "--z-re", "-1"]);
    assert_eq!(h.stdout, "s,re,im\n1,0.693147180560,0\n");
}

#[test]
fn domain_errors_exit_2() {
    let r = run(&["eval", "--which", "psi1", "--s", "-1"]);
    assert_eq!(r.code, 2);
    assert!(r.stderr.starts_with("hyperfam: "), "{}", r.stderr);
    assert_eq!(r.stderr.lines().count(), 1);
    assert_eq!(run(&["include", "1", "-0.1", "1", "0"]).code, 2);
    assert_eq!(run(&["curve", "--kind", "forward", "--s0", "1", "--t0", "1.5", "--smin", "1", "--smax", "2", "--n", "2"]).code, 2);
    assert_eq!(run(&["eval", "--which", "xi0"]).code, 2);
}

#[test]
fn config_flags_and_env() {
    assert_eq!(run_with(&["eval", "--which", "xi0", "--s", "1"], "", &[("QUAD_TOL", "-1")]).code, 2);
    assert_eq!(run(&["--precision", "20", "eval", "--which", "xi0", "--s", "1"]).code, 2);
    let r = run_with(&["eval", "--which", "xi0", "--s", "1"], "", &[("PRECISION", "4")]);
    assert_eq!(r.stdout, "s,value\n1,0.3863\n");
    // The flag wins over the environment.
    let r = run_with(&["--precision", "6", "eval", "--which", "xi0", "--s", "1"], "", &[("PRECISION", "4")]);
    assert_eq!(r.stdout, "s,value\n1,0.386294\n");
}

#[test]
fn curves() {
    let f = rows(&run(&["curve", "--kind", "forward", "--s0", "1", "--t0", "0", "--smin", "1", "--smax", "2", "--n", "2"]).stdout);
    assert_eq!(f[0], vec![1.0, 0.0]);
    assert!((f[1][1] - 0.193147180560).abs() < 1e-11);

    let s = run(&["curve", "--kind", "sharp", "--s0", "1", "--t0", "0.5", "--smin", "1", "--smax", "1", "--n", "1"]);
    assert_eq!(s.stdout, "s,t\n1,0.5\n");

    let b = run(&["curve", "--kind", "backward", "--s0", "2", "--t0", "0.5", "--smin", "1", "--smax", "2", "--n", "2"]);
    assert_eq!(b.code, 0);
    assert!(b.stdout.starts_with("# s_star="));
    let v = rows(&b.stdout);
    assert!((v[0][1] - 0.380308294210).abs() < 1e-11);
    assert_eq!(v[1], vec![2.0, 0.5]);
}

#[test]
fn include_queries() {
    let r = run(&["include", "1", "0", "2", "0.19"]);
    assert_eq!(r.code, 0);
    assert!(r.stdout.starts_with("Subset margin=0.00314718"), "{}", r.stdout);
    assert!(run(&["include", "1", "0.2", "1", "0.1"]).stdout.starts_with("Subset"));
    assert!(run(&["include", "2", "0.5", "1", "0"]).stdout.starts_with("Incomparable"));
    let j = run(&["--format", "json", "include", "1", "0", "2", "0.19"]);
    let v: serde_json::Value = serde_json::from_str(&j.stdout).unwrap();
    assert_eq!(v["relation"], "Subset");
}

#[test]
fn filtration_round_trip() {
    let sharp = run(&["curve", "--kind", "sharp", "--s0", "1", "--t0", "0", "--smin", "1", "--smax", "2", "--n", "1000"]);
    let r = run_with(&["filtration", "--input", "-"], &sharp.stdout, &[]);
    assert_eq!(r.code, 0, "{}", r.stdout);
    assert!(r.stdout.contains("true,999"));

    let back = run(&["curve", "--kind", "backward", "--s0", "2", "--t0", "0.5", "--smin", "1", "--smax", "2", "--n", "5"]);
    let r = run_with(&["filtration", "--input", "-"], &back.stdout, &[]);
    assert!(r.code == 0 || r.code == 1, "comment line must parse: {}", r.stderr);

    let rational = "s,t\n1,0.5\n1.5,0.6\n2,0.6666666666666666\n";
    let r = run_with(&["filtration", "--input", "-"], rational, &[]);
    assert_eq!(r.code, 1);
    assert!(r.stdout.lines().nth(1).unwrap().starts_with("false,1,0,1,1.5,0.6"), "{}", r.stdout);

    let constant = "s,t\n1,0.3\n2,0.3\n3,0.3\n";
    assert_eq!(run_with(&["filtration", "--input", "-"], constant, &[]).code, 0);
    assert_eq!(run_with(&["filtration", "--input", "-"], "s,t\n1,abc\n", &[]).code, 2);
    assert_eq!(run_with(&["filtration", "--input", "-"], "a,b\n1,2\n", &[]).code, 2);
    assert_eq!(run_with(&["filtration", "--input", "-"], "s,t\n2,0.1\n1,0.1\n", &[]).code, 2);
    assert_eq!(run(&["filtration", "--input", "/nonexistent/path.csv"]).code, 2);
}

#[test]
fn quasi_extrema() {
    let sup = rows(&run(&["quasi", "sup", "1", "0", "2", "0.5", "--smin", "2", "--smax", "4", "--n", "3"]).stdout);
    assert_eq!(sup.len(), 3);
    assert_eq!(sup[0][0], 2.0);
    assert!((sup[0][1] - 0.193147180560).abs() < 1e-11);

    let inf = rows(&run(&["quasi", "inf", "1", "0", "2", "0.5", "--smin", "0.5", "--smax", "1", "--n", "2"]).stdout);
    assert_eq!(inf[1][0], 1.0);
    assert!((inf[1][1] - 0.380308294210).abs() < 1e-11);

    let comparable = run(&["quasi", "sup", "1", "0", "2", "0.19", "--smin", "2", "--smax", "4"]);
    assert_eq!(comparable.stdout, "s,t\n2,0.19\n");
}

#[test]
fn verify_reports() {
    let r = run(&["verify", "appendix"]);
    assert_eq!(r.code, 0);
    let v: serde_json::Value = serde_json::from_str(&r.stdout).unwrap();
    assert_eq!(v["suite"], "appendix");
    assert_eq!(v["pass"], true);
    assert_eq!(v["details"]["step3"]["count"], 0);
    assert!(v["details"]["step2"]["root"].as_f64().unwrap() > 10.0);
    for key in ["suite", "config", "checks", "pass"] {
        assert!(v.get(key).is_some(), "missing {key}");
    }

    let csv = run(&["--format", "csv", "verify", "witness"]);
    assert_eq!(csv.code, 0);
    assert!(csv.stdout.starts_with("name,margin,pass\n"));
}

#[test]
fn output_is_deterministic_and_can_go_to_a_file() {
    let args = ["curve", "--kind", "sharp", "--s0", "0.5", "--t0", "0.1", "--smin", "0.2", "--smax", "3", "--n", "7", "--spacing", "log"];
    assert_eq!(run(&args).stdout, run(&args).stdout);

    let path = std::env::temp_dir().join(format!("hyperfam-cli-{}.csv", std::process::id()));
    let p = path.to_str().unwrap();
    let mut with_out = args.to_vec();
    with_out.extend(["-o", p]);
    let r = run(&with_out);
    assert_eq!(r.code, 0);
    assert!(r.stdout.is_empty());
    assert_eq!(std::fs::read_to_string(&path).unwrap(), run(&args).stdout);
    std::fs::remove_file(&path).unwrap();
}
