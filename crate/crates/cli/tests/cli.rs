use std::io::Write;
use std::process::{Command, Output, Stdio};

fn tilecheck(args: &[&str], stdin: Option<&str>) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_tilecheck"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary runs");
    {
        let mut pipe = child.stdin.take().unwrap();
        if let Some(s) = stdin {
            pipe.write_all(s.as_bytes()).unwrap();
        }
    }
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> serde_json::Value {
    serde_json::from_slice(&o.stdout).expect("JSON on stdout")
}

#[test]
fn family_piped_into_verify() {
    let fam = tilecheck(&["family", "--name", "sevenfold"], None);
    assert_eq!(fam.status.code(), Some(0));
    let text = String::from_utf8(fam.stdout).unwrap();
    let v = tilecheck(&["verify", "--mode", "exact"], Some(&text));
    assert_eq!(v.status.code(), Some(0), "{}", String::from_utf8_lossy(&v.stderr));
    let out = stdout(&v);
    assert_eq!(out["verified"], true);
    assert_eq!(out["report"]["fold"], 7);

    let s = tilecheck(&["verify", "--mode", "sampled", "--samples", "200", "--seed", "4", "--sequential"], Some(&text));
    assert_eq!(s.status.code(), Some(0));
    assert_eq!(stdout(&s)["report"]["histogram"]["7"], 200);
}

#[test]
fn forged_fold_fails_verification() {
    let fam = tilecheck(&["family", "--name", "octA", "--param", "1/5"], None);
    let mut inst: serde_json::Value = serde_json::from_slice(&fam.stdout).unwrap();
    inst["fold"] = 4.into();
    let v = tilecheck(&["verify", "--json", &inst.to_string()], None);
    assert_eq!(v.status.code(), Some(1));
    assert_eq!(stdout(&v)["verified"], false);
}

#[test]
fn bolle_reports_fold_or_failure() {
    let fam = tilecheck(&["family", "--name", "decagon", "--param", "-3/5,4/5"], None);
    let text = String::from_utf8(fam.stdout).unwrap();
    let b = tilecheck(&["bolle"], Some(&text));
    assert_eq!(b.status.code(), Some(0));
    assert_eq!(stdout(&b)["fold"], 5);

    let square = r#"{"polygon": {"vertices": [["-3/4","-3/4"], ["3/4","-3/4"], ["3/4","3/4"], ["-3/4","3/4"]]},
                     "lattice": {"basis": [["1","0"], ["0","1"]]}}"#;
    let b = tilecheck(&["bolle", "--json", square], None);
    assert_eq!(b.status.code(), Some(1));
    assert!(stdout(&b)["failure"].is_object());
}

#[test]
fn regular_pentagon_is_not_a_tile() {
    // Vertices of a regular pentagon rounded to a 2^-20 grid.
    let pts: Vec<[String; 2]> = (0..5)
        .map(|k| {
            let t = 2.0 * std::f64::consts::PI * k as f64 / 5.0;
            let r = |x: f64| format!("{}/1048576", (x * 1048576.0).round() as i64);
            [r(t.cos()), r(t.sin())]
        })
        .collect();
    let json = serde_json::json!({ "vertices": pts }).to_string();
    let c = tilecheck(&["classify", "--json", &json], None);
    assert_eq!(c.status.code(), Some(1));
    assert_eq!(stdout(&c)["verdict"], "NotTile");
}

#[test]
fn archimedean_sequences() {
    let a = tilecheck(&["archimedean", "3", "12", "12"], None);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(stdout(&a)["type"], "Listed");
    let b = tilecheck(&["archimedean", "5", "5", "10"], None);
    assert_eq!(b.status.code(), Some(1));
    assert_eq!(stdout(&b)["type"], "AngleValidOnly");
}

#[test]
fn bad_input_exits_two() {
    let m = tilecheck(&["classify"], Some(r#"{"vertices": [["0","0"], "#));
    assert_eq!(m.status.code(), Some(2));
    let err = String::from_utf8(m.stderr).unwrap();
    assert!(err.contains("line 1 column"), "{err}");

    let r = tilecheck(&["family", "--name", "octA", "--param", "1/0"], None);
    assert_eq!(r.status.code(), Some(2));
    let r = tilecheck(&["family", "--name", "octA", "--param", "1/-4"], None);
    assert_eq!(r.status.code(), Some(2));
    let out_of_range = tilecheck(&["family", "--name", "octB", "--param", "1/5"], None);
    assert_eq!(out_of_range.status.code(), Some(2));
    let unknown_flag = tilecheck(&["search", "--bogus"], None);
    assert_eq!(unknown_flag.status.code(), Some(2));
}

#[test]
fn wheels_search_and_render() {
    let w = tilecheck(&["wheels", "--name", "octBPrime", "--param", "1", "--window", "4"], None);
    assert_eq!(w.status.code(), Some(0), "{}", String::from_utf8_lossy(&w.stderr));
    let report = stdout(&w);
    assert_eq!(report["passed"], true);
    assert!(report["histogram"].as_array().unwrap().iter().all(|h| h["varphi"].as_u64().unwrap() + h["phi"].as_u64().unwrap() == 5));

    let fam = tilecheck(&["family", "--name", "octA", "--param", "1/8"], None);
    let inst: serde_json::Value = serde_json::from_slice(&fam.stdout).unwrap();
    let s = tilecheck(&["search", "--pool-bound", "2", "--json", &inst["polygon"].to_string()], None);
    assert_eq!(s.status.code(), Some(0));
    assert_eq!(stdout(&s)["hit"]["fold"], 5);

    let r1 = tilecheck(&["render", "--name", "sevenfold", "--window", "3"], None);
    let r2 = tilecheck(&["render", "--name", "sevenfold", "--window", "3"], None);
    assert_eq!(r1.status.code(), Some(0));
    assert_eq!(r1.stdout, r2.stdout);
    assert!(String::from_utf8(r1.stdout).unwrap().starts_with("<svg"));
}
