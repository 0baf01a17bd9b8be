use repequiv::cli::*;

fn fixture(name: &str) -> String {
    format!("{}/fixtures/{name}.wt", env!("CARGO_MANIFEST_DIR"))
}

fn run(args: &[&str]) -> Outcome {
    let mut all = vec!["repequiv"];
    all.extend_from_slice(args);
    main_with(all)
}

#[test]
fn empty_file_is_an_empty_workspace() {
    let ws = parse_str("").unwrap();
    assert!(ws.algebras.is_empty() && ws.modules.is_empty() && ws.complexes.is_empty());
    let ws = parse_str("# only a comment\n\n").unwrap();
    assert!(ws.tiltings.is_empty());
}

#[test]
fn a2_fixture_parses() {
    let ws = parse_workspace(std::path::Path::new(&fixture("a2"))).unwrap();
    assert_eq!(ws.algebra("A2").unwrap().dim(), 3);
    assert_eq!(ws.modules.len(), 4);
    let i2 = ws.module("I2").unwrap();
    let p1 = ws.module("P1").unwrap();
    assert!(repequiv::rmod::is_isomorphic(i2, p1).unwrap().is_some());
}

#[test]
fn sec5_fixture_parses() {
    let ws = parse_workspace(std::path::Path::new(&fixture("sec5"))).unwrap();
    assert_eq!(ws.algebra("R7").unwrap().dim(), 16);
    assert_eq!(ws.tilting("T").unwrap().summands().len(), 7);
}

#[test]
fn dangling_reference_is_reported_with_line() {
    let src = "algebra A\n  vertices 1\nend\nmodule S = simple A 1\ncotorsion D over A\n  a S\n  b Nope\nend\n";
    let err = parse_str(src).unwrap_err();
    assert_eq!(err, CliError::Reference { line: 7, msg: "unknown module `Nope`".into() });
}

#[test]
fn syntax_and_invariant_errors() {
    assert!(matches!(parse_str("algebra A\n  vertices 1\n"), Err(CliError::Syntax { line: 1, .. })));
    assert!(matches!(parse_str("frobnicate\n"), Err(CliError::Syntax { line: 1, .. })));
    let dup = "algebra A\n  vertices 1\nend\nmodule A = simple A 1\n";
    assert!(matches!(parse_str(dup), Err(CliError::Invariant { line: 4, .. })));
    let range = "algebra A\n  vertices 2\n  arrow a 1 3\nend\n";
    assert!(matches!(parse_str(range), Err(CliError::Invariant { line: 3, .. })));
    let bad_rep = "algebra A\n  vertices 2\n  arrow a 1 2\nend\nmodule M over A\n  dims 1 1\n  arrow a [[1, 1]]\nend\n";
    assert!(matches!(parse_str(bad_rep), Err(CliError::Syntax { line: 7, .. })));
    let bad_dims = "algebra A\n  vertices 2\nend\nmodule M over A\n  dims 1\nend\n";
    assert!(matches!(parse_str(bad_dims), Err(CliError::Invariant { line: 5, .. })));
}

#[test]
fn relations_are_parsed() {
    let src = "algebra K\n  vertices 2\n  arrow a 1 2\n  arrow b 1 2\n  arrow c 2 1\n  relation a*c - b*c\n  relation c*a\n  relation c*b\nend\n";
    let ws = parse_str(src).unwrap();
    // Paths: e1, e2, a, b, c, and a·c = b·c.
    assert_eq!(ws.algebra("K").unwrap().dim(), 6);
}

#[test]
fn complex_blocks_are_validated() {
    let src = "algebra A\n  vertices 1\nend\nmodule S = simple A 1\ncomplex X over A\n  component 0 S\n  component 1 S\n  component 2 S\n  delta 1 [[1]]\n  delta 2 [[1]]\nend\n";
    assert!(matches!(parse_str(src), Err(CliError::Invariant { line: 5, .. })));
    let ok = "algebra A\n  vertices 1\nend\nmodule S = simple A 1\ncomplex X over A\n  component 0 S\n  component 1 S\n  delta 1 [[1]]\nend\n";
    let ws = parse_str(ok).unwrap();
    assert!(!ws.complex("X").unwrap().is_trivial());
}

#[test]
fn check_tilting_on_sec5_passes() {
    let out = run(&[&fixture("sec5"), "check-tilting", "T", "--depth", "10"]);
    assert_eq!(out.status, 0, "{}{}", out.stdout, out.stderr);
    assert!(out.stdout.contains("certified to depth 10"));
}

#[test]
fn check_tilting_on_a_simple_fails() {
    let out = run(&[&fixture("a3"), "check-tilting", "S3", "--depth", "2"]);
    assert_eq!(out.status, 1);
    assert!(out.stdout.starts_with("repequiv report: 1 results, 1 failed\nFAIL check-tilting S3"));
    assert!(out.stdout.contains("fails at stage 0"));
    assert!(out.stdout.contains("not certified to depth 2"));
}

#[test]
fn roundtrip_command_logs_phi_dims() {
    let out = run(&[&fixture("a3t"), "verify-roundtrip", "X"]);
    assert_eq!(out.status, 0, "{}", out.stdout);
    assert!(out.stdout.contains("phi dims"));
    let out = run(&[&fixture("a3t"), "verify-roundtrip", "Y"]);
    assert_eq!(out.status, 0, "{}", out.stdout);
}

#[test]
fn functor_and_info_commands() {
    let f = fixture("a3t");
    for args in [
        vec![f.as_str(), "apply-st", "X"],
        vec![f.as_str(), "apply-qdt", "Y", "--data-s", "D2"],
        vec![f.as_str(), "check-good", "T", "--data-r", "D1", "--data-s", "D2"],
        vec![f.as_str(), "restriction-check"],
        vec![f.as_str(), "end-algebra", "T"],
        vec![f.as_str(), "describe-basis", "X2", "0"],
    ] {
        let out = run(&args);
        assert_eq!(out.status, 0, "{args:?}: {}{}", out.stdout, out.stderr);
    }
    let out = run(&[&f, "describe-basis", "X2", "0"]);
    assert_eq!(out.stdout.lines().filter(|l| l.trim_start().starts_with("basis")).count(), 3);
}

#[test]
fn input_errors_exit_with_two() {
    assert_eq!(run(&[&fixture("a3t"), "frobnicate"]).status, 2);
    assert_eq!(run(&[&fixture("a3t"), "apply-st", "Nope"]).status, 2);
    assert_eq!(run(&["/nonexistent/file.wt", "report"]).status, 2);
    assert_eq!(run(&[&fixture("a3t"), "apply-st", "Y"]).status, 2);
}

#[test]
fn machine_report_is_deterministic() {
    let a = run(&[&fixture("a3t"), "report", "--format", "machine"]);
    let b = run(&[&fixture("a3t"), "report", "--format", "machine"]);
    assert_eq!(a.status, 0, "{}", a.stdout);
    assert_eq!(a.stdout, b.stdout);
    assert!(a.stdout.starts_with("report=repequiv results=6 failed=0\n"));
    assert!(a.stdout.lines().skip(1).all(|l| l.contains("certification=")));
}

fn result(status: Status, subject: &str) -> CheckResult {
    CheckResult {
        command: "check-tilting".into(),
        subject: subject.into(),
        status,
        depth: 3,
        relative: false,
        summary: "s".into(),
        items: if status == Status::Fail { vec![("clause".into(), "detail".into())] } else { Vec::new() },
    }
}

#[test]
fn report_layout() {
    assert_eq!(emit_report(&[], Format::Machine), "report=repequiv results=0 failed=0\n");
    assert_eq!(emit_report(&[], Format::Text).lines().count(), 1);
    let one = emit_report(&[result(Status::Pass, "T")], Format::Machine);
    assert_eq!(one.lines().count(), 2);
    assert!(one.contains("certification=\"certified to depth 3\""));
    let mixed = [result(Status::Pass, "A"), result(Status::Fail, "B"), result(Status::Pass, "C")];
    for fmt in [Format::Text, Format::Machine] {
        let text = emit_report(&mixed, fmt);
        let subjects: Vec<&str> = text.lines().skip(1).filter(|l| !l.starts_with(' ') && !l.starts_with("item")).collect();
        assert!(subjects[0].contains("FAIL"), "{text}");
        assert!(subjects[1].contains("A") && subjects[2].contains("C"));
    }
}
