use std::io::Write;
use std::process::Command;

fn dsym(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_dsym")).args(args).output().expect("binary runs");
    (out.status.code().unwrap_or(-1), String::from_utf8(out.stdout).unwrap(), String::from_utf8(out.stderr).unwrap())
}

#[test]
fn documented_outputs() {
    assert_eq!(dsym(&["lr", "--lambda", "2", "--mu", "1", "--nu", "2"]).1, "a[-1] - a[1]\n");
    assert_eq!(dsym(&["duallr", "--lambda", "1", "--mu", "2", "--nu", "2,2", "--method", "tableau"]).1, "a[0] - a[1]\n");
    assert_eq!(dsym(&["double-schur", "--lambda", "1,1,1", "--nx", "2"]).1, "0\n");
}

#[test]
fn exit_codes() {
    let (code, _, err) = dsym(&["lr", "--lambda", "2,x", "--mu", "1", "--nu", "2"]);
    assert_eq!(code, 2);
    assert!(err.contains("--lambda"));
    let (code, _, err) = dsym(&["kostka", "--lambda", "2,1", "--mu", "1", "--degree", "2"]);
    assert_eq!(code, 1);
    assert!(err.contains("TruncationTooSmall") && err.contains("--lambda 2,1"), "{err}");
    let (code, _, err) = dsym(&["duallr", "--lambda", "1,1", "--mu", "1", "--nu", "2,1", "--method", "tableau", "--n", "1"]);
    assert_eq!(code, 1);
    assert!(err.contains("LengthBoundViolated"), "{err}");
    assert_eq!(dsym(&["--help"]).0, 0);
    assert_eq!(dsym(&["verify", "--suite", "11"]).0, 1);
}

#[test]
fn specializations_and_json() {
    assert_eq!(dsym(&["lr", "--lambda", "2", "--mu", "1", "--nu", "2", "--spec", "shifted"]).1, "2\n");
    assert_eq!(dsym(&["eval", "--poly", "a[0]*a[1] - 1/2", "--spec", "frobenius"]).1, "-3/4\n");
    assert_eq!(dsym(&["eval", "--poly", "a[0] +"]).0, 1);

    let mut path = std::env::temp_dir();
    path.push(format!("dsym-spec-{}.txt", std::process::id()));
    let mut file = std::fs::File::create(&path).unwrap();
    writeln!(file, "# two values\n-1 = 3\n1 = 1/2\ndefault = 2*i").unwrap();
    let spec = format!("custom:{}", path.display());
    assert_eq!(dsym(&["lr", "--lambda", "2", "--mu", "1", "--nu", "2", "--spec", &spec]).1, "5/2\n");
    assert_eq!(dsym(&["eval", "--poly", "a[4]", "--spec", &spec]).1, "8\n");
    std::fs::remove_file(&path).unwrap();

    let (code, out, _) = dsym(&["dual-schur", "--mu", "1", "--degree", "2", "--json"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["schema"], 1);
    assert_eq!(v["coeffs"]["1,1"]["text"], "-a[1]");
    let poly = dsym::format::apoly_from_json(&v["coeffs"]["2"]).unwrap();
    assert_eq!(poly.to_string(), "a[0]");
}

#[test]
fn deterministic_output() {
    let args = ["kostka", "--max-size", "3", "--dual"];
    let first = dsym(&args);
    assert_eq!(first.0, 0);
    assert_eq!(first, dsym(&args));
    assert!(first.1.lines().count() > 5);
}

mod roundtrip {
    use dsym::format::{apoly_from_json, apoly_json, parse_apoly};
    use dsym_core::{AMonomial, APoly, Rational};
    use proptest::prelude::*;

    fn poly() -> impl Strategy<Value = APoly> {
        proptest::collection::vec((-5i64..6, 1i64..4, proptest::collection::vec((-3i32..4, 1u32..3), 0..3)), 0..5).prop_map(
            |terms| {
                APoly::from_terms(
                    terms.into_iter().map(|(n, d, vars)| (AMonomial::from_pairs(vars), Rational::new(n, d))),
                )
            },
        )
    }

    proptest! {
        #[test]
        fn text_and_json_round_trip(p in poly()) {
            prop_assert_eq!(parse_apoly(&p.to_string()).unwrap(), p.clone());
            prop_assert_eq!(apoly_from_json(&apoly_json(&p)).unwrap(), p);
        }
    }
}
