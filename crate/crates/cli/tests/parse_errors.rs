use cli::{parse, ParseError};
use proptest::prelude::*;

const K: &str = r#""K": {"dim": 1, "delta": [[1]], "eps": [[1]]}"#;

fn doc(field: &str, rest: &str) -> String {
    format!(r#"{{"field": {field}, "coalgebras": {{{K}}}{rest}}}"#)
}

#[test]
fn dangling_reference_names_its_path() {
    let text = doc(r#"{"kind": "gf", "p": 3}"#, r#", "morphisms": {"f": {"kind": "coalgebra", "source": "K", "target": "L", "matrix": [[1]]}}"#);
    match parse(&text) {
        Err(ParseError::Dangling { path, name }) => {
            assert_eq!(path, "/morphisms/f/target");
            assert_eq!(name, "L");
        }
        other => panic!("{other:?}"),
    }
}

#[test]
fn composite_modulus_is_rejected() {
    let e = parse(&doc(r#"{"kind": "gf", "p": 9}"#, "")).unwrap_err();
    assert!(matches!(e, ParseError::NotPrime { p: 9, .. }), "{e:?}");
    assert_eq!(e.path(), Some("/field/p"));
}

#[test]
fn unknown_field_kind() {
    let e = parse(&doc(r#"{"kind": "reals"}"#, "")).unwrap_err();
    assert!(matches!(&e, ParseError::UnknownFieldKind { kind, .. } if kind == "reals"), "{e:?}");
}

#[test]
fn shape_mismatch_points_at_the_matrix() {
    let text = r#"{"field": {"kind": "q"}, "coalgebras": {"C": {"dim": 2, "delta": [["1/1","0/1"]], "eps": [["1/1","1/1"]]}}}"#;
    let e = parse(text).unwrap_err();
    assert!(matches!(e, ParseError::Shape { .. }), "{e:?}");
    assert!(e.path().unwrap().starts_with("/coalgebras/C/delta"), "{e:?}");
}

#[test]
fn bad_entries() {
    let text = r#"{"field": {"kind": "q"}, "coalgebras": {"K": {"dim": 1, "delta": [["1/0"]], "eps": [["1"]]}}}"#;
    assert_eq!(parse(text).unwrap_err().path(), Some("/coalgebras/K/delta/0/0"));
    let text = r#"{"field": {"kind": "gf", "p": 2}, "coalgebras": {"K": {"dim": 1, "delta": [["1"]], "eps": [[1]]}}}"#;
    assert_eq!(parse(text).unwrap_err().path(), Some("/coalgebras/K/delta/0/0"));
}

#[test]
fn unknown_keys_and_bad_json() {
    assert!(matches!(parse("{"), Err(ParseError::Json(_))));
    let text = r#"{"field": {"kind": "q"}, "coalgebra": {}}"#;
    assert!(matches!(parse(text), Err(ParseError::Json(_))));
}

#[test]
fn fraction_survives_round_trip() {
    let text = r#"{"field": {"kind": "q"}, "coalgebras": {"K": {"dim": 1, "delta": [["3/7"]], "eps": [["-6/14"]]}}}"#;
    let d = parse(text).unwrap();
    let out = cli::encode(&d);
    assert!(out.contains("\"3/7\""), "{out}");
    assert!(out.contains("\"-3/7\""), "{out}");
    assert_eq!(parse(&out).unwrap(), d);
}

#[test]
fn gf_entries_are_reduced() {
    let text = r#"{"field": {"kind": "gf", "p": 5}, "coalgebras": {"K": {"dim": 1, "delta": [[6]], "eps": [[-4]]}}}"#;
    let out = cli::encode(&parse(text).unwrap());
    assert!(!out.contains('6') && !out.contains('-'), "{out}");
}

fn entry() -> impl Strategy<Value = String> {
    (-20i64..20, 1i64..9).prop_map(|(n, d)| format!("\"{n}/{d}\""))
}

proptest! {
    #[test]
    fn random_coalgebra_data_round_trips(d in 1usize..4, seed in proptest::collection::vec(entry(), 30)) {
        let mut it = seed.iter().cycle();
        let rows = |r: usize, c: usize, it: &mut dyn Iterator<Item = &String>| {
            (0..r).map(|_| format!("[{}]", (0..c).map(|_| it.next().unwrap().clone()).collect::<Vec<_>>().join(","))).collect::<Vec<_>>().join(",")
        };
        let delta = rows(d * d, d, &mut it);
        let eps = rows(1, d, &mut it);
        let text = format!(r#"{{"field": {{"kind": "q"}}, "coalgebras": {{"C": {{"dim": {d}, "delta": [{delta}], "eps": [{eps}]}}}}}}"#);
        let doc = parse(&text).unwrap();
        let once = cli::encode(&doc);
        prop_assert_eq!(parse(&once).unwrap(), doc);
        prop_assert_eq!(cli::encode(&parse(&once).unwrap()), once);
    }
}
