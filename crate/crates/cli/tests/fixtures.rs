//! Each file under fixtures/ is `$ args`, `exit N`, then the expected stdout.

use std::path::PathBuf;
use std::process::Command;

struct Case {
    name: String,
    args: Vec<String>,
    code: i32,
    stdout: String,
}

fn cases() -> Vec<Case> {
    let root = PathBuf::from(env!("CARGO_MANIFEST_DIR"));
    let mut paths: Vec<_> = std::fs::read_dir(root.join("tests/fixtures")).unwrap().map(|e| e.unwrap().path()).collect();
    paths.sort();
    paths
        .into_iter()
        .map(|p| {
            let text = std::fs::read_to_string(&p).unwrap();
            let mut lines = text.splitn(3, '\n');
            let args = lines.next().unwrap().strip_prefix("$ ").unwrap();
            let code = lines.next().unwrap().strip_prefix("exit ").unwrap().parse().unwrap();
            let args = args
                .split_whitespace()
                .map(|a| if a.starts_with("corpus/") { root.join(a).to_string_lossy().into_owned() } else { a.to_string() })
                .collect();
            Case { name: p.file_name().unwrap().to_string_lossy().into_owned(), args, code, stdout: lines.next().unwrap().to_string() }
        })
        .collect()
}

#[test]
fn library_matches_fixtures() {
    let all = cases();
    assert!(all.len() >= 10);
    for c in all {
        let out = cli::execute(std::iter::once("comod".to_string()).chain(c.args.clone()));
        assert_eq!(out.code, c.code, "{}", c.name);
        assert_eq!(out.stdout, c.stdout, "{}", c.name);
    }
}

#[test]
fn binary_matches_fixtures() {
    for c in cases() {
        let out = Command::new(env!("CARGO_BIN_EXE_comod")).args(&c.args).output().unwrap();
        assert_eq!(out.status.code(), Some(c.code), "{}", c.name);
        assert_eq!(String::from_utf8(out.stdout).unwrap(), c.stdout, "{}", c.name);
    }
}
