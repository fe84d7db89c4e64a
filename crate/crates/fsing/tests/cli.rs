//! End-to-end checks of the `fsing` binary: subcommand behavior, exit
//! codes, output determinism and the render/parse round trip.

mod common;

use std::io::Write;
use std::process::{Command, Output};

use common::{random_poly, small_rings};
use fsing::cli::parse::parse_polynomial;
use rand::rngs::StdRng;
use rand::SeedableRng;

fn fsing(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_fsing"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn write_fixture(name: &str, contents: &str) -> std::path::PathBuf {
    let dir = std::env::temp_dir().join("fsing-cli-tests");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    let mut f = std::fs::File::create(&path).unwrap();
    f.write_all(contents.as_bytes()).unwrap();
    path
}

const SQUARES: &str = "\
[ring]
p = 2
variables = x, y

[ideal I]
x^2
y^2
";

const DETERMINANTAL: &str = "\
[ring]
p = 2
variables = x1, x2, x3, x4, x5

[ideal I]
x1*x4 + x2*x4
x1*x3 + x2*x4
x1^2 + x4*x5
x2*x3 + x2*x4
x1*x2 + x4*x5
x1*x2 + x3*x5

[canonical]
x1
x4
x5
";

const CUSP: &str = "\
[ring]
p = 2
variables = x, y, z

[ideal I]
x^3 + y^3 + z^3
";

#[test]
fn root_prints_generators_line_by_line() {
    let file = write_fixture("squares.ring", SQUARES);
    let out = fsing(&["root", "--e", "1", file.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(String::from_utf8_lossy(&out.stdout), "x\ny\n");
}

#[test]
fn test_ideal_reproduces_the_determinantal_example() {
    let file = write_fixture("determinantal.ring", DETERMINANTAL);
    let out = fsing(&["test-ideal", file.to_str().unwrap()]);
    assert_eq!(
        out.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    let stdout = String::from_utf8_lossy(&out.stdout);
    assert!(
        stdout.contains("tau:\nx4*x5\nx1\nx2\nx3 + x4\n"),
        "{stdout}"
    );
    assert!(stdout.contains("f_rational: false"), "{stdout}");
    assert!(stdout.contains("seed: 0"), "{stdout}");
}

#[test]
fn torsion_failure_exits_with_code_two() {
    let file = write_fixture("cusp.ring", CUSP);
    let out = fsing(&["test-ideal", "--gorenstein", file.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    let stderr = String::from_utf8_lossy(&out.stderr);
    assert!(stderr.contains("not T-torsion-free"), "{stderr}");
}

#[test]
fn input_errors_exit_with_code_one() {
    let out = fsing(&["gb", "/no/such/file.ring"]);
    assert_eq!(out.status.code(), Some(1));

    let file = write_fixture("bad.ring", "[ring]\np = 2\nvariables = x\n[ideal I]\nx*q\n");
    let out = fsing(&["gb", file.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("unknown identifier `q`"));
}

#[test]
fn machine_format_emits_key_value_lines() {
    let file = write_fixture("squares2.ring", SQUARES);
    let out = fsing(&["dim", "--format", "machine", file.to_str().unwrap()]);
    assert_eq!(String::from_utf8_lossy(&out.stdout), "dim=0\n");

    let out = fsing(&["gb", "--format", "machine", file.to_str().unwrap()]);
    let stdout = String::from_utf8_lossy(&out.stdout);
    assert!(stdout.contains("ideal.count=2"), "{stdout}");
    assert!(stdout.contains("ideal.0=x^2"), "{stdout}");
}

#[test]
fn reports_are_byte_identical_across_runs() {
    let file = write_fixture("determinantal2.ring", DETERMINANTAL);
    let args = ["test-ideal", file.to_str().unwrap()];
    let first = fsing(&args);
    let second = fsing(&args);
    assert_eq!(first.status.code(), Some(0));
    assert_eq!(first.stdout, second.stdout, "stdout must be deterministic");

    let args = ["ext", "--format", "machine", file.to_str().unwrap()];
    let first = fsing(&args);
    let second = fsing(&args);
    assert_eq!(first.stdout, second.stdout);
}

#[test]
fn fedder_subcommand_reports_the_verdict() {
    let file = write_fixture("cusp2.ring", CUSP);
    let out = fsing(&["fedder", file.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let stdout = String::from_utf8_lossy(&out.stdout);
    assert!(stdout.contains("f_injective: false"), "{stdout}");
}

#[test]
fn render_parse_round_trip() {
    let mut rng = StdRng::seed_from_u64(800);
    let rings = small_rings();
    for case in 0..200 {
        let ring = &rings[case % rings.len()];
        let f = random_poly(&mut rng, ring, 5, 4, 10);
        let rendered = f.to_string();
        let reparsed = parse_polynomial(&rendered, ring).unwrap();
        assert_eq!(f, reparsed, "case {case}: `{rendered}`");
    }
}
