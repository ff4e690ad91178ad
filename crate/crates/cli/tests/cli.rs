use std::path::PathBuf;
use std::process::{Command, Output};

fn gvpf(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_gvpf")).args(args).output().expect("run gvpf")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn scratch(name: &str, body: &str) -> PathBuf {
    let path = std::env::temp_dir().join(format!("gvpf-cli-{}-{name}", std::process::id()));
    std::fs::write(&path, body).unwrap();
    path
}

#[test]
fn list_prints_every_key() {
    let o = gvpf(&["list"]);
    assert!(o.status.success());
    let text = stdout(&o);
    assert_eq!(text.lines().count(), 45);
    assert!(text.lines().any(|l| l.starts_with("main2 ")));
}

#[test]
fn verify_symbolic_cauchy() {
    let o = gvpf(&["verify", "--name", "cauchy", "--param", "n=1", "--mode", "symbolic"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("PASS cauchy symbolic [n=1]"));
}

#[test]
fn verify_json_is_stable() {
    let args = ["verify", "--name", "main2", "--trials", "25", "--seed", "3", "--bound", "40", "--json"];
    let (a, b) = (gvpf(&args), gvpf(&args));
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    let text = stdout(&a);
    let order: Vec<usize> = ["\"identity\"", "\"params\"", "\"mode\"", "\"trials\"", "\"seed\"", "\"bound\"", "\"passed\"", "\"failures\""]
        .iter()
        .map(|k| text.find(k).unwrap())
        .collect();
    assert!(order.windows(2).all(|w| w[0] < w[1]));
    let v: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(v["passed"], true);
    assert_eq!(v["params"]["s"], 1);
}

#[test]
fn verify_failures_and_usage_errors() {
    assert_eq!(gvpf(&["verify", "--name", "nope"]).status.code(), Some(1));
    assert_eq!(gvpf(&["verify", "--name", "cauchy", "--param", "k=2"]).status.code(), Some(1));
    assert_eq!(gvpf(&["verify", "--name", "cauchy", "--param", "n"]).status.code(), Some(1));
    assert_eq!(gvpf(&["frobnicate"]).status.code(), Some(1));
    let guard = gvpf(&["verify", "--name", "schur", "--param", "n=6", "--bound", "1", "--trials", "1"]);
    assert_eq!(guard.status.code(), Some(2));
    assert!(gvpf(&["--help"]).status.success());
}

#[test]
fn lr_queries() {
    let o = gvpf(&["lr", "--lambda", "[2,1]", "--mu", "[1,1]", "--nu", "[1]"]);
    assert_eq!(stdout(&o).trim(), "1");
    let all = gvpf(&["lr", "--rect", "--n", "1", "--e", "2", "--f", "1", "--lambda", "[2,1]", "--mu", "[2]", "--method", "all"]);
    assert_eq!(all.status.code(), Some(0));
    assert_eq!(stdout(&all).trim(), "1");
    let json = gvpf(&["lr", "--rect", "--n", "1", "--e", "2", "--f", "1", "--lambda", "[2,1]", "--mu", "[1]", "--method", "all", "--json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&json)).unwrap();
    assert_eq!(v["values"]["pfaffian"], 0);
    assert_eq!(v["agree"], true);
    let no_rect = gvpf(&["lr", "--lambda", "[2,1]", "--mu", "[1]", "--nu", "[1]", "--method", "pfaffian"]);
    assert_eq!(no_rect.status.code(), Some(1));
    assert_eq!(gvpf(&["lr", "--lambda", "[1,2]", "--mu", "[1]", "--nu", "[1]"]).status.code(), Some(1));
}

#[test]
fn schur_text_form() {
    assert_eq!(stdout(&gvpf(&["schur", "--shape", "[2,1]", "--vars", "2"])).trim(), "x1^2*x2 + x1*x2^2");
    let skew = gvpf(&["schur", "--shape", "[2,1]", "--inner", "[1]", "--vars", "2"]);
    assert_eq!(stdout(&skew).trim(), "x1^2 + 2*x1*x2 + x2^2");
}

#[test]
fn pf_from_json() {
    let m = scratch(
        "pf.json",
        r#"{"dim":4,"upper":[[0,1,"1"],[2,3,"2/3"],[0,2,"1/2"],[1,3,"3"],[0,3,"-1"],[1,2,"5"]]}"#,
    );
    let o = gvpf(&["pf", "--matrix", m.to_str().unwrap()]);
    assert_eq!(stdout(&o).trim(), "-35/6");
    let odd = scratch("odd.json", r#"{"dim":3,"upper":[[0,1,"2"]]}"#);
    assert_eq!(stdout(&gvpf(&["pf", "--matrix", odd.to_str().unwrap()])).trim(), "0");
    let bad = scratch("bad.json", r#"{"dim":2,"upper":[[1,0,"1"]]}"#);
    assert_eq!(gvpf(&["pf", "--matrix", bad.to_str().unwrap()]).status.code(), Some(1));
}

#[test]
fn campaign_replays_byte_identically() {
    let cfg = scratch(
        "desk.toml",
        "seed = 9\n\n[[identity]]\nname = \"main1\"\ntrials = 6\n\n[[identity]]\nname = \"schur\"\nmode = \"symbolic\"\nparams = { n = 1 }\n",
    );
    let (ja, jb) = (cfg.with_extension("a.json"), cfg.with_extension("b.json"));
    let a = gvpf(&["campaign", "--config", cfg.to_str().unwrap(), "--json", ja.to_str().unwrap(), "--workers", "3"]);
    let b = gvpf(&["campaign", "--config", cfg.to_str().unwrap(), "--json", jb.to_str().unwrap(), "--workers", "1"]);
    assert!(a.status.success() && b.status.success());
    assert_eq!(a.stdout, b.stdout);
    assert!(stdout(&a).ends_with("2/2 passed\n"));
    assert_eq!(std::fs::read(&ja).unwrap(), std::fs::read(&jb).unwrap());
    let bad = scratch("bad.toml", "[[identity]]\nnom = \"x\"\n");
    assert_eq!(gvpf(&["campaign", "--config", bad.to_str().unwrap()]).status.code(), Some(1));
    let empty = scratch("empty.toml", "");
    assert!(gvpf(&["campaign", "--config", empty.to_str().unwrap()]).status.success());
}
