use std::process::{Command, Output};

fn apoly(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_apoly")).args(args).output().unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().unwrap()
}

#[test]
fn compute_is_deterministic() {
    let args = ["compute", "a", "--fixture", "fig-exp-Apoly", "--jobs", "3"];
    let (a, b) = (apoly(&args), apoly(&args));
    assert_eq!(code(&a), 0);
    assert_eq!(a.stdout, b.stdout);
    let at = apoly(&["compute", "a", "--fixture", "fig-exp-Apoly", "--at", "q=3"]);
    let v: serde_json::Value = serde_json::from_slice(&at.stdout).unwrap();
    assert_eq!(v["terms"].as_array().unwrap().len(), 6);
}

#[test]
fn exit_codes() {
    assert_eq!(code(&apoly(&["verify", "--suite", "classes", "--fixture", "fig-cocycle-classes"])), 0);
    assert_eq!(code(&apoly(&["verify", "--suite", "tutte", "--fixture", "U24-assume-tu"])), 0, "xfail counts as success");
    assert_eq!(code(&apoly(&["verify", "--suite", "nonsense"])), 2);
    assert_eq!(code(&apoly(&["compute", "a"])), 2);
    assert_eq!(code(&apoly(&["compute", "a", "--fixture", "R10", "--budget", "1000"])), 3);
    assert_eq!(code(&apoly(&["compute", "tutte", "--fixture", "P2", "--at", "q=3"])), 2);
}

#[test]
fn corpus_writes_fixtures() {
    let dir = std::env::temp_dir().join(format!("apoly-corpus-{}", std::process::id()));
    let o = apoly(&[
        "corpus",
        "--out",
        dir.to_str().unwrap(),
        "--corpus-max-vertices",
        "2",
        "--corpus-max-arcs",
        "2",
        "--corpus-no-doubled",
        "--corpus-named",
        "R10",
    ]);
    assert_eq!(code(&o), 0);
    let r10: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(dir.join("R10.json")).unwrap()).unwrap();
    assert!(r10["source"].is_string());
    let files = std::fs::read_dir(&dir).unwrap().count();
    std::fs::remove_dir_all(&dir).unwrap();
    assert!(files > 5);
}

#[test]
fn classes_output() {
    let o = apoly(&["classes", "--fixture", "fig-cocycle-classes"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!((v["count"].as_u64(), v["acyclic_count"].as_u64()), (Some(3), Some(1)));
}
