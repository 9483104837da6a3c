use pentagon_cli::render_document;
use serde_json::Value;
use std::process::{Command, Output};

fn pentagon(args: &[&str], cache: &std::path::Path) -> Output {
    Command::new(env!("CARGO_BIN_EXE_pentagon"))
        .args(args)
        .env("PENTAGON_CACHE_DIR", cache)
        .output()
        .expect("binary runs")
}

fn json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).expect("json on stdout")
}

fn strip_elapsed(v: &mut Value) {
    match v {
        Value::Object(m) => {
            m.remove("elapsed_ms");
            m.values_mut().for_each(strip_elapsed);
        }
        Value::Array(a) => a.iter_mut().for_each(strip_elapsed),
        _ => {}
    }
}

#[test]
fn multipartite_count() {
    let dir = tempfile::tempdir().unwrap();
    let o = pentagon(&["count", "multipartite", "--parts", "2,2,2", "--format", "json"], dir.path());
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_eq!(v["schema"], 1);
    assert_eq!(v["data"]["value"], "24");
}

#[test]
fn oracle_emits_turan_graph() {
    let dir = tempfile::tempdir().unwrap();
    let o = pentagon(&["oracle", "--n", "6", "--forbid", "4", "--emit", "graph6", "--format", "json"], dir.path());
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert!(v["data"]["max_count"].as_u64().unwrap() >= 24);
    // K_{2,2,2}
    assert!(v["data"]["argmax"].as_array().unwrap().contains(&Value::from("E]~o")));
}

#[test]
fn certificate_command() {
    let dir = tempfile::tempdir().unwrap();
    let o = pentagon(&["verify", "certificate", "--k-max", "1000"], dir.path());
    let text = String::from_utf8_lossy(&o.stdout);
    assert!(text.contains("C1 == OPT: identity"), "{text}");
    assert_eq!(o.status.code(), Some(0), "{text}");
}

#[test]
fn failing_verdicts_exit_one() {
    let dir = tempfile::tempdir().unwrap();
    let o = pentagon(&["verify", "claim-4.7", "--k-max", "50"], dir.path());
    assert_eq!(o.status.code(), Some(1));
    let o = pentagon(&["verify", "claim-4.5", "--k-max", "50"], dir.path());
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn usage_errors_exit_two() {
    let dir = tempfile::tempdir().unwrap();
    for args in [
        &["enumerate", "--n", "9"][..],
        &["frobnicate"],
        &["verify", "certificate", "--k-max", "3"],
        &["count", "multipartite", "--parts", "2,0"],
        &["oracle", "--n", "5", "--forbid", "1"],
        &["enumerate", "--n", "4", "--threads", "0"],
    ] {
        assert_eq!(pentagon(args, dir.path()).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn reports_are_deterministic_and_text_is_derived() {
    let dir = tempfile::tempdir().unwrap();
    let args = ["verify", "tight-set", "--format", "json", "--no-cache"];
    let mut a = json(&pentagon(&args, dir.path()));
    let mut b = json(&pentagon(&args, dir.path()));
    let text = pentagon(&["verify", "tight-set", "--no-cache"], dir.path());
    let mut from_json = render_document(&a);
    let mut shown = String::from_utf8(text.stdout).unwrap();
    // timings differ between runs
    let ms = regex_free_strip(&mut from_json);
    let ms2 = regex_free_strip(&mut shown);
    assert_eq!(ms, ms2);
    assert_eq!(from_json, shown);
    strip_elapsed(&mut a);
    strip_elapsed(&mut b);
    assert_eq!(serde_json::to_string(&a).unwrap(), serde_json::to_string(&b).unwrap());
}

/// Drops the "(N ms)" timing suffixes; returns how many there were.
fn regex_free_strip(s: &mut String) -> usize {
    let mut out = String::new();
    let mut n = 0;
    for line in s.lines() {
        match line.rfind(" (").filter(|_| line.ends_with(" ms)")) {
            Some(i) => {
                n += 1;
                out += &line[..i];
            }
            None => out += line,
        }
        out.push('\n');
    }
    *s = out;
    n
}

#[test]
fn cache_hits_and_recovers_from_corruption() {
    let dir = tempfile::tempdir().unwrap();
    let args = ["enumerate", "--n", "5", "--format", "json"];
    let first = pentagon(&args, dir.path());
    assert_eq!(first.status.code(), Some(0));
    let entries: Vec<_> = walk(dir.path());
    assert_eq!(entries.len(), 1);
    assert!(entries[0].parent().unwrap().ends_with("v1"));
    let second = pentagon(&args, dir.path());
    let (mut a, mut b) = (json(&first), json(&second));
    strip_elapsed(&mut a);
    strip_elapsed(&mut b);
    assert_eq!(a, b);
    std::fs::write(&entries[0], "{ truncated").unwrap();
    let third = pentagon(&args, dir.path());
    assert!(String::from_utf8_lossy(&third.stderr).contains("corrupt"));
    let mut c = json(&third);
    strip_elapsed(&mut c);
    assert_eq!(a, c);
    assert_eq!(a["data"]["count"], 34);
}

fn walk(p: &std::path::Path) -> Vec<std::path::PathBuf> {
    let mut out = Vec::new();
    for e in std::fs::read_dir(p).unwrap() {
        let path = e.unwrap().path();
        if path.is_dir() {
            out.extend(walk(&path));
        } else {
            out.push(path);
        }
    }
    out
}

#[test]
fn counts_and_thread_override() {
    let dir = tempfile::tempdir().unwrap();
    let o = pentagon(&["count", "turan", "--k", "3", "--n", "6", "--threads", "1", "--format", "json"], dir.path());
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_eq!(v["data"]["results"][1]["value"], "4");
    let o = pentagon(&["count", "zykov", "--k", "5", "--n", "25", "--format", "json"], dir.path());
    assert_eq!(json(&o)["data"]["results"][1]["value"], "24/625");
}
