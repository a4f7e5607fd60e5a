use std::path::PathBuf;

#[allow(dead_code)]
#[path = "../examples/corpus.rs"]
mod generator;

fn dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("corpus")
}

fn files() -> Vec<PathBuf> {
    let mut v: Vec<_> = std::fs::read_dir(dir()).unwrap().map(|e| e.unwrap().path()).collect();
    v.sort();
    v
}

#[test]
fn checked_in_corpus_matches_generator() {
    let docs = generator::documents();
    assert_eq!(docs.len(), files().len());
    for (name, doc) in docs {
        let path = dir().join(format!("{name}.json"));
        let text = std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()));
        assert_eq!(text, cli::encode(&doc), "{name} is stale; rerun the corpus example");
    }
}

#[test]
fn corpus_round_trips() {
    for path in files() {
        let text = std::fs::read_to_string(&path).unwrap();
        let doc = cli::parse(&text).unwrap_or_else(|e| panic!("{}: {e}", path.display()));
        let again = cli::encode(&doc);
        assert_eq!(again, text, "{} is not canonical", path.display());
        assert_eq!(cli::parse(&again).unwrap(), doc);
        let a: serde_json::Value = serde_json::from_str(&text).unwrap();
        let b: serde_json::Value = serde_json::from_str(&again).unwrap();
        assert_eq!(a, b);
    }
}

#[test]
fn corpus_validates() {
    for path in files() {
        let out = cli::execute(["comod", "validate", "--input", path.to_str().unwrap()]);
        assert_eq!(out.code, 0, "{}\n{}{}", path.display(), out.stdout, out.stderr);
        assert!(out.stdout.contains(" 0 fail, 0 unsupported"));
    }
}

#[test]
fn repeated_runs_are_identical() {
    let path = dir().join("objects_gf2.json");
    let p = path.to_str().unwrap();
    for args in [
        vec!["validate"],
        vec!["check", "cartesian"],
        vec!["adjunction", "ex-ev", "--output", "json"],
        vec!["generators"],
    ] {
        let argv: Vec<&str> = ["comod"].into_iter().chain(args.iter().copied()).chain(["--input", p]).collect();
        let first = cli::execute(argv.clone());
        for _ in 0..2 {
            assert_eq!(cli::execute(argv.clone()), first);
        }
    }
}

#[test]
fn json_reports_round_trip() {
    let path = dir().join("pairings_q.json");
    let out = cli::execute(["comod", "rationalize", "--output", "json", "--input", path.to_str().unwrap()]);
    let report = cli::Report::from_json(&out.stdout).unwrap();
    assert_eq!(report.to_json(), out.stdout);
    assert_eq!(report.exit_code(), out.code);
    let text = cli::execute(["comod", "rationalize", "--input", path.to_str().unwrap()]);
    assert_eq!(report.to_text(), text.stdout);
}
