use std::path::{Path, PathBuf};
use std::process::Command;

use capax::capacities::Verdict;
use capax::cli::{run_with_config, CliError, OutputDocument, Payload};
use capax::contact::Squeezing;
use capax::{q, CapacityConfig, Rational};

fn golden(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(name)
}

struct Scratch(PathBuf);

impl Scratch {
    fn new(tag: &str) -> Self {
        let dir = std::env::temp_dir().join(format!("capax-cli-{tag}-{}", std::process::id()));
        std::fs::create_dir_all(&dir).unwrap();
        Scratch(dir)
    }

    fn file(&self, name: &str, text: &str) -> String {
        let p = self.0.join(name);
        std::fs::write(&p, text).unwrap();
        p.to_str().unwrap().to_string()
    }
}

impl Drop for Scratch {
    fn drop(&mut self) {
        let _ = std::fs::remove_dir_all(&self.0);
    }
}

struct Run {
    code: i32,
    out: String,
    err: String,
}

fn run(args: &[&str]) -> Run {
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let argv = std::iter::once("capax").chain(args.iter().copied());
    let code = run_with_config(argv, &CapacityConfig::default(), &mut out, &mut err);
    Run {
        code,
        out: String::from_utf8(out).unwrap(),
        err: String::from_utf8(err).unwrap(),
    }
}

fn json(args: &[&str]) -> (i32, OutputDocument) {
    let mut argv = args.to_vec();
    argv.extend(["--format", "json"]);
    let r = run(&argv);
    let doc: OutputDocument = serde_json::from_str(&r.out).unwrap_or_else(|e| panic!("{e}: {}{}", r.out, r.err));
    (r.code, doc)
}

#[test]
fn caps_table_for_the_ellipsoid() {
    let e = golden("e35_4.json");
    let r = run(&["caps", "--domain", e.to_str().unwrap(), "--kmax", "3", "--method", "cross-check"]);
    assert_eq!(r.code, 0, "{}", r.err);
    let rows: Vec<Vec<&str>> = r
        .out
        .lines()
        .filter(|l| l.trim_start().starts_with(|c: char| c.is_ascii_digit()))
        .map(|l| l.split_whitespace().collect())
        .collect();
    let pairs: Vec<(&str, &str)> = rows.iter().map(|r| (r[0], r[1])).collect();
    assert_eq!(pairs, [("1", "3.5"), ("2", "4"), ("3", "7")]);
}

#[test]
fn caps_for_ball_in_every_method() {
    let s = Scratch::new("ball");
    let ball = s.file("b.json", r#"{"type": "ball", "r": 1, "d": 2}"#);
    for method in ["lattice", "polar", "closed", "cross-check"] {
        let (code, doc) = json(&["caps", "--domain", &ball, "--kmax", "4", "--method", method]);
        assert_eq!(code, 0);
        let Payload::Capacities(report) = doc.payload else {
            panic!("wrong payload")
        };
        assert_eq!(report.values(), [q("1"), q("1"), q("2"), q("2")], "{method}");
    }
}

#[test]
fn validation_errors_exit_1() {
    let s = Scratch::new("bad");
    let malformed = s.file("m.json", r#"{"type": "ellipsoid", "a": [1, "#);
    let negative = s.file("n.json", r#"{"type": "polydisk", "a": [1, -2]}"#);
    let poly = s.file("p.json", r#"{"type": "polytope", "vertices": [[0,0],[2,0],[0,2],[2,2]]}"#);
    let e = golden("e35_4.json");
    let e = e.to_str().unwrap();
    assert_eq!(run(&["caps", "--domain", &malformed]).code, 1);
    assert_eq!(run(&["caps", "--domain", &negative]).code, 1);
    assert_eq!(run(&["caps", "--domain", "/no/such/file.json"]).code, 1);
    assert_eq!(run(&["caps", "--domain", e, "--kmax", "0"]).code, 1);
    assert_eq!(run(&["caps", "--domain", &poly, "--method", "closed"]).code, 1);
    assert_eq!(run(&["caps", "--domain", e, "--format", "xml"]).code, 1);
    assert_eq!(run(&["frobnicate"]).code, 1);
    assert_eq!(run(&["--help"]).code, 0);
}

#[test]
fn golden_contact_table_csv() {
    let r = run(&[
        "contact-caps",
        "--domain",
        golden("e35_4.json").to_str().unwrap(),
        "--kmax",
        "10",
        "--override",
        golden("quoted_row.json").to_str().unwrap(),
        "--format",
        "csv",
    ]);
    assert_eq!(r.code, 0, "{}", r.err);
    let expected = std::fs::read_to_string(golden("contact_table.csv")).unwrap();
    assert_eq!(r.out, expected);
    // the note goes to stderr so the data stays byte-exact
    assert!(r.err.contains("E(3.5, 4)"));
}

#[test]
fn contact_caps_without_override_and_not_big() {
    let (code, doc) = json(&["contact-caps", "--domain", golden("e35_4.json").to_str().unwrap(), "--kmax", "3"]);
    assert_eq!(code, 0);
    let Payload::Contact(report) = doc.payload else {
        panic!("wrong payload")
    };
    assert_eq!(report.contact_values(), [5, 5, 7]);
    assert_eq!(report.polar_inf_norm, q("2/7"));

    let s = Scratch::new("notbig");
    let ball = s.file("b.json", r#"{"type": "ball", "r": 1, "d": 2}"#);
    let r = run(&["contact-caps", "--domain", &ball]);
    assert_eq!(r.code, 4);
    assert!(r.err.contains("not big"));

    let short = s.file("row.json", "[1, 2]");
    let r = run(&["contact-caps", "--domain", golden("e35_4.json").to_str().unwrap(), "--override", &short]);
    assert_eq!(r.code, 1);
}

#[test]
fn structure_command() {
    let e = golden("e35_4.json");
    let e = e.to_str().unwrap();
    let (code, doc) = json(&["structure", "--domain", e, "--T", "8", "--ell", "11", "--eta=-2,-2"]);
    assert_eq!(code, 0);
    let Payload::Structure(r) = doc.payload else {
        panic!("wrong payload")
    };
    let inv = r.invariants.unwrap();
    assert_eq!(inv.min_degree, -8);
    assert_eq!(inv.eta_exponents[0].exponent, 4);

    let (_, doc) = json(&["structure", "--domain", e, "--T", "0", "--ell", "3"]);
    let Payload::Structure(r) = doc.payload else {
        panic!("wrong payload")
    };
    assert_eq!(r.invariants.unwrap().min_degree, 0);

    assert_eq!(run(&["structure", "--domain", e, "--T", "1", "--ell", "4"]).code, 1);
    assert_eq!(run(&["structure", "--domain", e, "--T", "-1", "--ell", "3"]).code, 1);
    assert_eq!(run(&["structure", "--domain", e, "--T", "1", "--ell", "3", "--eta=-9,-9"]).code, 1);

    // 3 / (2/7) = 10.5 is the bound for ℓ = 3
    let r = run(&["structure", "--domain", e, "--T", "21/2", "--ell", "3"]);
    assert_eq!(r.code, 5);
    assert!(r.out.contains("admissible           false"), "{}", r.out);
}

#[test]
fn obstruct_command() {
    let s = Scratch::new("obstruct");
    let b1 = s.file("b1.json", r#"{"type": "ball", "r": 1, "d": 2}"#);
    let b09 = s.file("b09.json", r#"{"type": "ball", "r": "9/10", "d": 2}"#);
    let (code, doc) = json(&["obstruct", "--source", &b1, "--target", &b09, "--kmax", "5"]);
    assert_eq!(code, 0);
    let Payload::Obstruction(r) = doc.payload else {
        panic!("wrong payload")
    };
    assert!(matches!(r.verdict, Verdict::Obstructed { first_k: 1, .. }));

    let (code, doc) = json(&["obstruct", "--source", &b09, "--target", &b1]);
    assert_eq!(code, 0);
    let Payload::Obstruction(r) = doc.payload else {
        panic!("wrong payload")
    };
    assert_eq!(r.verdict, Verdict::NoObstructionFound);

    // contact comparison needs big domains
    assert_eq!(run(&["obstruct", "--contact", "--source", &b1, "--target", &b09]).code, 4);

    for (r2, big, expect) in [
        ("1/2", "3/2", Squeezing::NonSqueezable),
        ("3/2", "5/2", Squeezing::ChiuNonSqueezable),
    ] {
        let (code, doc) = json(&["obstruct", "--ekp", "--r2", r2, "--R2", big]);
        assert_eq!(code, 0);
        let Payload::Squeezing(v) = doc.payload else {
            panic!("wrong payload")
        };
        assert_eq!(v.verdict, expect);
    }
    assert_eq!(run(&["obstruct", "--ekp", "--r2", "2", "--R2", "1"]).code, 1);
    assert_eq!(run(&["obstruct", "--ekp", "--r2", "2"]).code, 1);
}

#[test]
fn spectrum_command() {
    let (code, doc) = json(&["spectrum", "--M", "3", "--ell", "5", "--z", "-6/5"]);
    assert_eq!(code, 0);
    let Payload::Spectrum(r) = doc.payload else {
        panic!("wrong payload")
    };
    assert_eq!((r.index_count, r.fixed_index_count, r.oracle_agrees), (3, 1, true));

    let (_, doc) = json(&["spectrum", "--M", "1", "--ell", "5", "--z", "0"]);
    let Payload::Spectrum(r) = doc.payload else {
        panic!("wrong payload")
    };
    assert_eq!(r.index_count, 1);

    assert_eq!(run(&["spectrum", "--M", "3", "--ell", "5", "--z", "-10"]).code, 1);
    assert_eq!(run(&["spectrum", "--M", "2", "--ell", "5", "--z", "0"]).code, 1);
}

#[test]
fn json_round_trips_for_every_payload() {
    let e = golden("e35_4.json");
    let e = e.to_str().unwrap();
    let s = Scratch::new("rt");
    let poly = s.file("p.json", r#"{"type": "polytope", "vertices": [[0,0],[3,0],[2,2],[0,3]]}"#);
    let cases: Vec<Vec<&str>> = vec![
        vec!["caps", "--domain", e, "--kmax", "6"],
        vec!["caps", "--domain", &poly, "--kmax", "6", "--method", "polar"],
        vec!["contact-caps", "--domain", e, "--kmax", "5"],
        vec!["structure", "--domain", e, "--T", "8", "--ell", "11", "--eta=-1,-2"],
        vec!["structure", "--domain", e, "--T", "30", "--ell", "3"],
        vec!["obstruct", "--source", e, "--target", &poly],
        vec!["obstruct", "--ekp", "--r2", "1/3", "--R2", "7/9", "--dim", "3"],
        vec!["spectrum", "--ell", "7", "--z", "-9/2"],
    ];
    for args in cases {
        let mut argv = args.clone();
        argv.extend(["--format", "json"]);
        let r = run(&argv);
        let doc: OutputDocument = serde_json::from_str(&r.out).unwrap();
        let again = serde_json::to_string_pretty(&doc).unwrap() + "\n";
        assert_eq!(again, r.out, "{args:?}");
        let reparsed: OutputDocument = serde_json::from_str(&again).unwrap();
        assert_eq!(reparsed, doc);
        assert_eq!(doc.command.input_digest.len(), 64);
    }
}

#[test]
fn rationals_are_exact_in_json_and_decimal_in_tables() {
    let s = Scratch::new("third");
    let e = s.file("e.json", r#"{"type": "ellipsoid", "a": ["1/3", 0.25]}"#);
    let r = run(&["caps", "--domain", &e, "--kmax", "2", "--format", "json"]);
    assert!(r.out.contains(r#""1/4""#) && r.out.contains(r#""1/3""#), "{}", r.out);
    let t = run(&["caps", "--domain", &e, "--kmax", "2"]);
    assert!(t.out.contains("0.25") && t.out.contains("1/3"), "{}", t.out);
    assert_eq!(t.out, run(&["caps", "--domain", &e, "--kmax", "2"]).out);
}

#[test]
fn discrepancy_note_can_be_switched_off() {
    let e = golden("e35_4.json");
    let on = run(&["caps", "--domain", e.to_str().unwrap(), "--kmax", "7"]);
    let off = run(&["caps", "--domain", e.to_str().unwrap(), "--kmax", "7", "--note-discrepancy", "false"]);
    assert!(on.out.contains("7.5 and 11"));
    assert!(!off.out.contains("7.5 and 11"));
}

#[test]
fn oracle_mismatch_maps_to_exit_3() {
    let e = CliError::OracleMismatch {
        k: 4,
        lattice: q("8"),
        polar: Rational::new(15, 2),
    };
    assert_eq!(e.exit_code(), 3);
}

#[test]
fn binary_reads_budget_from_environment() {
    let exe = env!("CARGO_BIN_EXE_capax");
    let e = golden("e35_4.json");
    let out = Command::new(exe)
        .args(["caps", "--domain", e.to_str().unwrap(), "--kmax", "40", "--method", "lattice"])
        .env("CAPAX_ENUM_BUDGET", "10")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("budget"));

    let out = Command::new(exe)
        .args(["caps", "--domain", e.to_str().unwrap()])
        .env("CAPAX_ENUM_BUDGET", "lots")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));

    let out = Command::new(exe)
        .args(["spectrum", "--M", "3", "--ell", "5", "--z", "-6/5", "--format", "csv"])
        .env_remove("CAPAX_ENUM_BUDGET")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&out.stdout).starts_with("field,value\n"));
}
