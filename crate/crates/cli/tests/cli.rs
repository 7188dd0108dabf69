use std::path::Path;
use std::process::{Command, Output};

fn d2rep(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_d2rep")).args(args).env_remove("D2REP_SEED").env_remove("D2REP_CONFIG").output().unwrap()
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn write_module(dir: &Path, name: &str, args: &[&str]) -> String {
    let out = d2rep(args);
    assert!(out.status.success(), "{args:?}");
    let path = dir.join(name);
    std::fs::write(&path, &out.stdout).unwrap();
    path.to_str().unwrap().to_string()
}

#[test]
fn word_commands() {
    assert_eq!(stdout(&d2rep(&["string", "phi", "aB", "--order", "8"])), "babAB\n");
    assert_eq!(stdout(&d2rep(&["string", "phi", "aB", "--order", "8", "--side", "t1"])), "abaBA\n");
    assert_eq!(stdout(&d2rep(&["string", "compare", "AbAbAbAb", "--order", "8"])), "> < > > < > <\n");
    assert_eq!(stdout(&d2rep(&["string", "inverse", "bAb"])), "BaB\n");
    assert_eq!(stdout(&d2rep(&["string", "segments", "babAB", "--order", "2^3"])), "bab AB\n");
    assert_eq!(stdout(&d2rep(&["string", "cband", "1"])), "bABa\n");
    let parsed = stdout(&d2rep(&["string", "parse", "1a"]));
    assert!(parsed.ends_with("length 0 dimension 1\no\n"), "{parsed}");
}

#[test]
fn module_pipeline() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    let bab = write_module(d, "bab.json", &["module", "build-string", "bab"]);
    assert_eq!(stdout(&d2rep(&["vertex", &bab])), "<y>\n");
    let small = write_module(d, "ab.json", &["module", "build-string", "aB", "--order", "4"]);
    let induced = write_module(d, "ind.json", &["induce", "--from", "T0", "--file", &small]);
    let lifted = write_module(d, "lift.json", &["module", "build-string", "babAB"]);
    let iso = d2rep(&["iso", &lifted, &induced]);
    assert_eq!((stdout(&iso), iso.status.code()), ("true\n".to_string(), Some(0)));
    let not = d2rep(&["summand", &bab, &induced]);
    assert_eq!((stdout(&not), not.status.code()), ("false\n".to_string(), Some(1)));
    let back = write_module(d, "res.json", &["restrict", "--to", "T0", "--file", &induced]);
    assert_eq!(d2rep(&["summand", &small, &back]).status.code(), Some(0));
    assert_eq!(stdout(&d2rep(&["hom", &bab, &bab, "--dim-only"])), "3\n");
    let om = write_module(d, "om.json", &["omega", "--n", "-1", &bab]);
    assert_eq!(stdout(&d2rep(&["vertex", &om])), "<y>\n");
    let band = write_module(d, "band.json", &["module", "build-band", "aB", "--order", "4", "--lambda", "2", "--field-m", "2"]);
    assert!(std::fs::read_to_string(band).unwrap().contains("\"field_m\":2"));
}

#[test]
fn error_exit_codes_are_distinct() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.json");
    std::fs::write(&bad, "{\"algebra\":").unwrap();
    let bab = write_module(dir.path(), "bab.json", &["module", "build-string", "bab"]);
    assert_eq!(d2rep(&["vertex", bad.to_str().unwrap()]).status.code(), Some(3));
    assert_eq!(d2rep(&["vertex", "/nonexistent/m.json"]).status.code(), Some(3));
    assert_eq!(d2rep(&["string", "parse", "abx"]).status.code(), Some(4));
    assert_eq!(d2rep(&["string", "parse", "bb"]).status.code(), Some(4));
    assert_eq!(d2rep(&["restrict", "--to", "Q8", "--file", &bab]).status.code(), Some(5));
    assert_eq!(d2rep(&["module", "build-band", "aB", "--order", "4", "--lambda", "2"]).status.code(), Some(3));
    assert_eq!(d2rep(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn verify_reports_are_reproducible() {
    let a = d2rep(&["verify", "prop3.9", "--max-n", "2", "--json"]);
    let b = d2rep(&["--workers", "2", "verify", "prop3.9", "--max-n", "2", "--json"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let first = stdout(&a).lines().next().unwrap().to_string();
    let line: serde_json::Value = serde_json::from_str(&first).unwrap();
    assert_eq!(line["pass"], true);
    let lemmas = d2rep(&["verify", "lemmas"]);
    assert_eq!(lemmas.status.code(), Some(0), "{}", stdout(&lemmas));
    let sweep = d2rep(&["verify", "conj4.3", "--order", "8", "--max-len", "5", "--decompose-count", "3"]);
    assert_eq!(sweep.status.code(), Some(0));
    assert!(stdout(&sweep).contains("local minima 0:"));
}

#[test]
fn seed_and_config_are_honoured() {
    let dir = tempfile::tempdir().unwrap();
    let config = dir.path().join("d2rep.toml");
    std::fs::write(&config, "field_m = 3\n").unwrap();
    let out = d2rep(&["--config", config.to_str().unwrap(), "module", "build-string", "b"]);
    assert!(stdout(&out).contains("\"field_m\":3"));
    std::fs::write(&config, "colour = 1\n").unwrap();
    assert_eq!(d2rep(&["--config", config.to_str().unwrap(), "string", "inverse", "b"]).status.code(), Some(3));
    let seeded = Command::new(env!("CARGO_BIN_EXE_d2rep"))
        .args(["verify", "conj4.3", "--order", "8", "--max-len", "3", "--decompose-count", "2", "--json"])
        .env("D2REP_SEED", "7")
        .output()
        .unwrap();
    assert!(stdout(&seeded).contains("\"seed\":7"));
}

#[test]
fn cache_replays_outputs() {
    let dir = tempfile::tempdir().unwrap();
    let cache = dir.path().join("cache");
    let args = ["--cache-dir", cache.to_str().unwrap(), "string", "phi", "aB"];
    let first = d2rep(&args);
    assert_eq!(std::fs::read_dir(&cache).unwrap().count(), 1);
    let second = d2rep(&args);
    assert_eq!(first.stdout, second.stdout);
    assert_eq!(stdout(&second), "babAB\n");
}
