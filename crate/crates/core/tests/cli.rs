use std::process::Command;

fn jackbern(args: &[&str]) -> (Option<i32>, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_jackbern"))
        .args(args)
        .env_remove("JACKBERN_CACHE")
        .output()
        .expect("spawn jackbern");
    (
        out.status.code(),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

#[test]
fn compute_plain() {
    let (code, out, _) = jackbern(&["compute", "jack", "--r", "2", "--d", "2", "--partition", "2", "--format", "plain"]);
    assert_eq!((code, out.trim()), (Some(0), "m[2] + m[1,1]"));
    let (code, out, _) = jackbern(&["compute", "bernoulli", "--r", "2", "--d", "1", "--partition", "1"]);
    assert_eq!((code, out.trim()), (Some(0), "1/2·m[1] − 1/2"));
    let (code, out, _) = jackbern(&["compute", "binom", "--r", "1", "--d", "2", "--partition", "3", "--of", "2"]);
    assert_eq!((code, out.trim()), (Some(0), "3"));
}

#[test]
fn compute_json_carries_family() {
    let (code, out, _) = jackbern(&["compute", "shifted-jack", "--r", "1", "--d", "2", "--partition", "1", "--format", "json"]);
    assert_eq!(code, Some(0));
    let v: serde_json::Value = serde_json::from_str(out.trim()).unwrap();
    assert_eq!(v["family"], "Pip");
    assert_eq!(v["basis"], "monomial");
}

#[test]
fn exit_codes() {
    assert_eq!(jackbern(&["compute", "jack", "--r", "2", "--partition", "2"]).0, Some(2));
    assert_eq!(jackbern(&["compute", "jack", "--r", "2", "--d", "0", "--partition", "2"]).0, Some(3));
    assert_eq!(jackbern(&["verify", "--suite", "thm2", "--r", "1", "--d", "2", "--omega", "0"]).0, Some(3));
    assert_eq!(jackbern(&["compute", "jack", "--r", "2", "--d", "1", "--partition", "2", "--cache-dir", "/proc/nope"]).0, Some(4));
}

#[test]
fn verify_emits_json_lines() {
    let (code, out, _) = jackbern(&["verify", "--suite", "pieri", "--r", "2", "--d", "1/2", "--max-weight", "3"]);
    assert_eq!(code, Some(0));
    for line in out.lines() {
        let v: serde_json::Value = serde_json::from_str(line).unwrap();
        assert_eq!(v["status"], "pass");
    }
}

#[test]
fn cache_warm_twice_hits() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path().to_str().unwrap();
    let args = ["cache", "warm", "--r", "2", "--d", "2", "--max-weight", "3", "--dir", d];
    let (c1, first, _) = jackbern(&args);
    let (c2, second, _) = jackbern(&args);
    assert_eq!((c1, c2), (Some(0), Some(0)));
    assert!(first.contains("0 hits"), "{first}");
    assert!(second.contains("0 written"), "{second}");
    let (_, stats, _) = jackbern(&["cache", "stats", "--dir", d]);
    assert!(stats.contains("total: 12"), "{stats}");
    let (_, cleared, _) = jackbern(&["cache", "clear", "--dir", d]);
    assert!(cleared.contains("removed 12"), "{cleared}");
}
