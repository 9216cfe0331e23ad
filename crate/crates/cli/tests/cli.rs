use std::process::{Command, Output};

fn so5cg(args: &[&str], cache: Option<&std::path::Path>) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_so5cg"));
    cmd.args(args).env_remove("SO5CG_CACHE");
    if let Some(dir) = cache {
        cmd.env("SO5CG_CACHE", dir);
    }
    cmd.output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn eval_prints_exact_then_float() {
    let o = so5cg(&["eval", "--source", "0,0", "--target", "1,1", "--source-so4", "0,0", "--entry", "+1,+1", "--part", "1,1"], None);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "1\n1\n");
}

#[test]
fn eval_full_coefficient() {
    let o = so5cg(
        &[
            "eval", "--source", "1/2,1/2", "--target", "3/2,3/2", "--source-so4", "1/2,1/2", "--entry", "+1,+1", "--part",
            "1,1", "--source-m", "1/2,1/2", "--part-m", "1,1",
        ],
        None,
    );
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "1\n1\n");
}

#[test]
fn exit_codes() {
    let malformed = so5cg(&["branch", "1/3,0"], None);
    assert_eq!(malformed.status.code(), Some(2));
    assert!(!malformed.stderr.is_empty());

    let absent = so5cg(&["table", "--source", "1,0", "--channel", "+1,0"], None);
    assert_eq!(absent.status.code(), Some(3));

    let io = so5cg(&["branch", "1,1", "--out", "/nonexistent-dir/out.csv"], None);
    assert_eq!(io.status.code(), Some(4));
}

#[test]
fn decompose_fourteen() {
    let o = so5cg(&["decompose", "1,1", "--format", "json"], None);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["schema"], "so5cg/1");
    assert_eq!(v["entries"].as_array().unwrap().len(), 6);
    assert_eq!(v["total_dim"], 196);
}

#[test]
fn branch_fourteen() {
    let o = so5cg(&["branch", "1,1"], None);
    assert_eq!(stdout(&o), "twice_j1,twice_j2,dim\n0,0,1\n1,1,4\n2,2,9\n");
}

#[test]
fn trivial_table_has_fourteen_rows() {
    let o = so5cg(&["table", "--source", "0,0", "--channel", "+1,+1"], None);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).lines().count(), 15);
}

#[test]
fn cache_hit_matches_miss() {
    let dir = tempfile::tempdir().unwrap();
    for args in [
        &["table", "--source", "3/2,1/2", "--channel", "0,0#2", "--format", "json"][..],
        &["matrix", "1/2,0"][..],
        &["decompose", "3/2,1/2"][..],
    ] {
        let plain = so5cg(args, None);
        let miss = so5cg(args, Some(dir.path()));
        let hit = so5cg(args, Some(dir.path()));
        let mut bypass_args = args.to_vec();
        bypass_args.push("--no-cache");
        let bypass = so5cg(&bypass_args, Some(dir.path()));
        assert_eq!(plain.status.code(), Some(0), "{args:?}");
        assert_eq!(plain.stdout, miss.stdout);
        assert_eq!(miss.stdout, hit.stdout);
        assert_eq!(hit.stdout, bypass.stdout);
    }
    assert_eq!(std::fs::read_dir(dir.path()).unwrap().count(), 3);
}

#[test]
fn out_file_matches_stdout() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("m.json");
    let o = so5cg(&["matrix", "0,0", "--format", "json", "--out", path.to_str().unwrap()], None);
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    let direct = so5cg(&["matrix", "0,0", "--format", "json"], None);
    assert_eq!(std::fs::read(&path).unwrap(), direct.stdout);
}

#[test]
fn verify_symmetry_passes() {
    let o = so5cg(&["verify", "symmetry", "--max-twice-j", "3"], None);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["pass"], true);
    assert!(!v["checks"].as_array().unwrap().is_empty());
}

#[test]
fn verify_oracle_on_one_source() {
    let o = so5cg(&["verify", "oracle", "--source", "1/2,0"], None);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["checks"][0]["subject"], "(1/2,0)");
}
