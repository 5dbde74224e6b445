use ffkernel::liealg::build_so_skew;
use ffkernel::sympoly::CommPoly;
use serde_json::Value;
use std::process::Command;

fn run(args: &[&str], jobs: Option<&str>) -> (i32, Vec<Value>) {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_ffkernel"));
    cmd.args(args).env_remove("FFKERNEL_JOBS");
    if let Some(j) = jobs {
        cmd.env("FFKERNEL_JOBS", j);
    }
    let out = cmd.output().expect("run ffkernel");
    let lines = String::from_utf8(out.stdout)
        .unwrap()
        .lines()
        .filter(|l| !l.trim().is_empty())
        .map(|l| serde_json::from_str(l).unwrap_or_else(|e| panic!("not JSON: {l}: {e}")))
        .collect();
    (out.status.code().unwrap(), lines)
}

fn without_time(mut v: Value) -> Value {
    v.as_object_mut().unwrap().remove("wall_time");
    v
}

#[test]
fn verify_reports_centrality() {
    let (code, out) = run(&["verify", "--family", "C", "--n", "4", "--k", "2"], None);
    assert_eq!(code, 0);
    assert_eq!(out[0]["central"], true);
    assert_eq!(out[0]["remainder_terms"], 0);
    for key in ["family", "n", "k", "central", "remainder_terms", "wall_time"] {
        assert!(out[0].get(key).is_some(), "missing {key}");
    }
}

#[test]
fn verify_g2_defaults_to_degree_six() {
    let (code, out) = run(&["verify", "--family", "G2"], None);
    assert_eq!(code, 0);
    assert_eq!(out[0]["k"], 6);
    assert_eq!(out[0]["central"], true);
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(run(&["verify", "--family", "A", "--n", "1", "--k", "2"], None).0, 2);
    assert_eq!(run(&["verify", "--family", "X", "--n", "3", "--k", "2"], None).0, 2);
    assert_eq!(run(&["verify", "--family", "C", "--n", "4"], None).0, 2);
    assert_eq!(run(&["gaudin", "--family", "A", "--n", "2", "--sites", "2", "--z", "1,x"], None).0, 2);
    assert_eq!(run(&["gaudin", "--family", "A", "--n", "2", "--sites", "2", "--z", "2,2"], None).0, 2);
    assert_eq!(run(&["gaudin", "--family", "A", "--n", "2", "--sites", "3", "--z", "1,2"], None).0, 2);
    assert_eq!(run(&["qmf", "--family", "A", "--n", "3", "--mu", "1,2"], None).0, 2);
    assert_eq!(run(&["--no-such-flag"], None).0, 2);
    assert_eq!(run(&[], None).0, 2);
}

#[test]
fn mmap_scalars() {
    let (code, out) = run(&["mmap", "--family", "BD", "--n", "7", "--k", "2"], None);
    assert_eq!((code, out[0]["scalar"].as_str(), out[0]["match"].as_bool()), (0, Some("6"), Some(true)));
    let (code, out) = run(&["mmap", "--family", "C", "--n", "4", "--k", "2"], None);
    assert_eq!((code, out[0]["scalar"].as_str(), out[0]["match"].as_bool()), (0, Some("1/2"), Some(true)));
    let (code, out) = run(&["mmap", "--family", "Pf", "--n", "8"], None);
    assert_eq!((code, out[0]["scalar"].as_str()), (0, Some("0")));
    // 𝗆²(Δ̃_5) = (1/5)Δ̃_1 and Δ̃_1 = 0 on sl_5
    let (code, out) = run(&["mmap", "--family", "A", "--n", "5", "--k", "5", "--r", "2"], None);
    assert_eq!((code, out[0]["expected"].as_str(), out[0]["scalar"].as_str()), (0, Some("1/5"), Some("0")));
    let (code, out) = run(&["mmap", "--family", "A", "--n", "5", "--k", "4"], None);
    assert_eq!((code, out[0]["scalar"].as_str()), (0, Some("1/2")));
    let (code, out) = run(&["mmap", "--family", "G2", "--k", "6"], None);
    assert_eq!((code, out[0]["scalar"].as_str()), (0, Some("-13/12")));
}

#[test]
fn gaudin_and_qmf_reports() {
    let (code, out) = run(&["gaudin", "--family", "A", "--n", "2", "--sites", "2", "--z", "1,-1"], None);
    assert_eq!(code, 0);
    assert_eq!(out[0]["failures"], 0);
    assert!(out[0]["pairs_checked"].as_u64().unwrap() > 0);
    let (code, out) = run(&["qmf", "--family", "A", "--n", "3", "--mu", "1,2,-3-diag"], None);
    assert_eq!(code, 0);
    assert_eq!(out[0]["failures"], 0);
    assert_eq!(out[0]["regular"], true);
}

#[test]
fn emit_round_trips() {
    let dir = std::env::temp_dir().join(format!("ffkernel-emit-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("pf8.json");
    let (code, out) = run(&["emit", "--what", "Pf", "--n", "8", "--out", path.to_str().unwrap()], None);
    assert_eq!(code, 0);
    assert_eq!(out[0]["terms"], 105);
    let text = std::fs::read_to_string(&path).unwrap();
    let v: Value = serde_json::from_str(&text).unwrap();
    let g = build_so_skew(8).unwrap();
    let p = CommPoly::from_json(&v["poly"], &g).unwrap();
    assert_eq!(p.len(), 105);
    assert_eq!(serde_json::to_string(&p.to_json(&g)).unwrap(), serde_json::to_string(&v["poly"]).unwrap());
    let gens = dir.join("gens.json");
    let (code, _) = run(&["gaudin", "--family", "A", "--n", "2", "--sites", "2", "--z", "1,-1", "--out", gens.to_str().unwrap()], None);
    assert_eq!(code, 0);
    let arr: Value = serde_json::from_str(&std::fs::read_to_string(&gens).unwrap()).unwrap();
    assert_eq!(arr.as_array().unwrap().len(), 5);
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn results_do_not_depend_on_jobs() {
    let args = ["verify", "--family", "C", "--n", "6", "--k", "2"];
    let one = run(&[&args[..], &["--jobs", "1"]].concat(), None);
    let three = run(&[&args[..], &["--jobs", "3"]].concat(), None);
    let env = run(&args, Some("2"));
    assert_eq!(one.0, 0);
    assert_eq!(without_time(one.1[0].clone()), without_time(three.1[0].clone()));
    assert_eq!(without_time(one.1[0].clone()), without_time(env.1[0].clone()));
    assert_eq!(run(&[&args[..], &["--jobs", "0"]].concat(), None).0, 2);
}

#[test]
fn paper_suite_subset() {
    let (code, out) = run(&["--paper-suite", "--only", "7,8"], None);
    assert_eq!(code, 0);
    assert_eq!(out.len(), 2);
    assert!(out.iter().all(|l| l["pass"] == true && l["statement"].is_string()));
}
