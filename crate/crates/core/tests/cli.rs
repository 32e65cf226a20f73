use std::path::Path;
use std::process::Command;

use skewbrace::cli::run_with_env;
use skewbrace::io::{brace_to_text, parse_brace, BraceFile};
use skewbrace::{groups, SkewBrace};

struct Outcome {
    code: i32,
    out: String,
    err: String,
}

fn run(args: &[&str]) -> Outcome {
    run_env(args, None)
}

fn run_env(args: &[&str], cap: Option<&str>) -> Outcome {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("skewbrace").chain(args.iter().copied());
    let code = run_with_env(argv, cap.map(str::to_string), &mut out, &mut err);
    Outcome {
        code,
        out: String::from_utf8(out).unwrap(),
        err: String::from_utf8(err).unwrap(),
    }
}

fn path_str(p: &Path) -> &str {
    p.to_str().unwrap()
}

fn write_brace(dir: &Path, name: &str, a: &SkewBrace) -> String {
    let p = dir.join(name);
    std::fs::write(&p, brace_to_text(a)).unwrap();
    path_str(&p).to_string()
}

#[test]
fn build_24_then_aut_reports_trivial_group() {
    let dir = tempfile::tempdir().unwrap();
    let f = dir.path().join("a24.brace");
    let r = run(&["build-24", "--out", path_str(&f)]);
    assert_eq!(r.code, 0, "{}", r.err);
    assert!(r.out.starts_with("order: 24\n"));
    let r = run(&["aut", path_str(&f)]);
    assert_eq!(r.code, 0, "{}", r.err);
    assert!(r.out.contains("aut_order: 1\n"), "{}", r.out);
    let r = run(&["rigid", path_str(&f)]);
    assert_eq!(r.out, "order: 24\nrigid: true\n");
}

#[test]
fn build_2p3_then_rigid() {
    let dir = tempfile::tempdir().unwrap();
    let f = dir.path().join("a54.brace");
    let r = run(&["build-2p3", "--p", "3", "--out", path_str(&f)]);
    assert_eq!(r.code, 0, "{}", r.err);
    assert_eq!(r.out, format!("order: 54\nwritten: {}\n", path_str(&f)));
    let r = run(&["rigid", path_str(&f)]);
    assert_eq!((r.code, r.out.as_str()), (0, "order: 54\nrigid: true\n"), "{}", r.err);
    let r = run(&["verify", path_str(&f)]);
    assert_eq!(r.code, 0, "{}", r.err);
}

#[test]
fn build_without_out_prints_the_brace() {
    let r = run(&["build-24"]);
    assert_eq!(r.code, 0);
    let a = parse_brace(&r.out).unwrap();
    assert_eq!(a.order(), 24);
}

#[test]
fn non_prime_parameter_is_rejected() {
    let r = run(&["build-2p3", "--p", "9"]);
    assert_eq!(r.code, 1);
    assert_eq!(r.err, "error: PrimeRequired: 9 is not an odd prime\n");
    let r = run(&[
        "build-2p3",
        "--p",
        "3",
        "--eps",
        "-1",
        "--d1",
        "1",
        "--d2",
        "1",
        "--d3",
        "1",
        "--d4",
        "0",
    ]);
    assert_eq!(r.code, 1);
    assert!(r.err.starts_with("error: ConstraintViolated"), "{}", r.err);
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(run(&["frobnicate"]).code, 2);
    assert_eq!(run(&["verify"]).code, 2);
    assert_eq!(run(&["build-2p3", "--p", "three"]).code, 2);
    assert_eq!(run_env(&["build-24"], Some("lots")).code, 2);
}

#[test]
fn missing_file_exits_one() {
    let r = run(&["verify", "/nonexistent/x.brace"]);
    assert_eq!(r.code, 1);
    assert!(r.err.starts_with("error: "));
}

#[test]
fn corrupted_circ_entry_is_not_a_group() {
    let dir = tempfile::tempdir().unwrap();
    let a = SkewBrace::trivial(&groups::cyclic(3));
    let text = brace_to_text(&a).replace("circ:\n0 1 2\n", "circ:\n0 1 1\n");
    let f = dir.path().join("bad.brace");
    std::fs::write(&f, text).unwrap();
    let r = run(&["verify", path_str(&f)]);
    assert_eq!(r.code, 1);
    assert!(r.err.starts_with("error: NotAGroup"), "{}", r.err);
}

#[test]
fn relabelled_circ_violates_the_brace_relation() {
    // circ on Z4 conjugated by the transposition (1 2) is still a group but
    // does not satisfy the brace relation with the original dot.
    let dir = tempfile::tempdir().unwrap();
    let z4 = groups::cyclic(4);
    let t = [0usize, 2, 1, 3];
    let dot: Vec<Vec<usize>> = z4.rows();
    let circ: Vec<Vec<usize>> = (0..4).map(|a| (0..4).map(|b| t[dot[t[a]][t[b]]]).collect()).collect();
    let mut text = String::from("skewbrace v1\nn=4\ndot:\n");
    for row in dot.iter() {
        text += &format!("{}\n", row.iter().map(usize::to_string).collect::<Vec<_>>().join(" "));
    }
    text += "circ:\n";
    for row in &circ {
        text += &format!("{}\n", row.iter().map(usize::to_string).collect::<Vec<_>>().join(" "));
    }
    let f = dir.path().join("bad.brace");
    std::fs::write(&f, text).unwrap();
    let r = run(&["verify", path_str(&f)]);
    assert_eq!(r.code, 1);
    assert!(r.err.starts_with("error: BraceAxiomViolated at (a,b,c)=("), "{}", r.err);
}

#[test]
fn info_and_witness_on_a_small_brace() {
    let dir = tempfile::tempdir().unwrap();
    let r = run(&["enumerate", "--order", "4", "--out", path_str(dir.path())]);
    assert_eq!(r.code, 0, "{}", r.err);
    let summary = std::fs::read_to_string(dir.path().join("summary.txt")).unwrap();
    assert!(
        summary.starts_with("order: 4\ngroup C4: 2\ngroup C2xC2: 2\ntotal: 4\n"),
        "{summary}"
    );
    assert!(summary.contains("lambda_trivial: 2\n"));

    let f = dir.path().join("C2xC2_1.brace");
    let r = run(&["info", path_str(&f)]);
    assert_eq!(r.code, 0);
    let keys: Vec<&str> = r.out.lines().map(|l| l.split(':').next().unwrap()).collect();
    assert_eq!(
        keys,
        [
            "order",
            "dot_abelian",
            "circ_abelian",
            "dot_nilpotent",
            "circ_nilpotent",
            "two_sided",
            "bi_skew",
            "lambda_trivial",
            "ker_lambda",
            "ker_rho",
            "aut_order"
        ]
    );
    assert!(r.out.contains("lambda_trivial: false\n"));

    let r = run(&["witness", path_str(&f)]);
    assert_eq!(r.code, 0);
    assert!(r.out.starts_with("kind: "));
    assert!(r.out.ends_with("verified: true\n"));
}

#[test]
fn isocheck_distinguishes_and_matches() {
    let dir = tempfile::tempdir().unwrap();
    let a = SkewBrace::trivial(&groups::cyclic(4));
    let t = skewbrace::Permutation::from_images(vec![0, 3, 2, 1]).unwrap();
    let f1 = write_brace(dir.path(), "a.brace", &a);
    let f2 = write_brace(dir.path(), "b.brace", &a.relabel(&t));
    let f3 = write_brace(dir.path(), "c.brace", &SkewBrace::trivial(&groups::klein()));
    let r = run(&["isocheck", &f1, &f2]);
    assert_eq!(r.code, 0);
    assert!(r.out.starts_with("isomorphic: true"), "{}", r.out);
    let r = run(&["isocheck", &f1, &f3]);
    assert_eq!(r.out, "isomorphic: false\n");
}

#[test]
fn search_cap_from_flag_and_env() {
    let dir = tempfile::tempdir().unwrap();
    let f = write_brace(dir.path(), "z5.brace", &SkewBrace::trivial(&groups::cyclic(5)));
    let r = run(&["--cap", "4", "aut", &f]);
    assert_eq!(r.code, 1);
    assert_eq!(r.err, "error: SearchCapExceeded: order 5 exceeds search cap 4\n");
    let r = run_env(&["aut", &f], Some("3"));
    assert_eq!(r.code, 1);
    assert!(r.err.contains("search cap 3"));
    let r = run_env(&["--cap", "8", "aut", &f], Some("3"));
    assert_eq!(r.code, 0, "{}", r.err);
    assert!(r.out.contains("aut_order: 4\n"));
}

#[test]
fn brace_files_round_trip_byte_for_byte() {
    let dir = tempfile::tempdir().unwrap();
    let f = dir.path().join("a.brace");
    run(&["build-24", "--out", path_str(&f)]);
    let text = std::fs::read_to_string(&f).unwrap();
    assert!(text.ends_with("\n# rigid brace of order 24\n"));
    assert_eq!(BraceFile::parse(&text).unwrap().to_text(), text);
}

#[test]
fn construction_files_build_and_use_structured_search() {
    let dir = tempfile::tempdir().unwrap();
    let c = dir.path().join("a24.construction");
    std::fs::write(
        &c,
        skewbrace::io::construction_to_text(&skewbrace::families::order24_construction()),
    )
    .unwrap();
    let out = dir.path().join("a24.brace");
    let r = run(&["build", path_str(&c), "--out", path_str(&out)]);
    assert_eq!(r.code, 0, "{}", r.err);
    let built = parse_brace(&std::fs::read_to_string(&out).unwrap()).unwrap();
    assert_eq!(built, skewbrace::families::order24_rigid_brace());
    let r = run(&["aut", path_str(&c)]);
    assert_eq!(r.code, 0, "{}", r.err);
    assert!(r.out.contains("aut_order: 1\n"), "{}", r.out);
}

#[test]
fn binary_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_skewbrace");
    let st = Command::new(bin).args(["build-2p3", "--p", "9"]).output().unwrap();
    assert_eq!(st.status.code(), Some(1));
    let st = Command::new(bin).arg("--bogus").output().unwrap();
    assert_eq!(st.status.code(), Some(2));
    let st = Command::new(bin).arg("build-24").output().unwrap();
    assert_eq!(st.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&st.stdout).starts_with("skewbrace v1\nn=24\n"));
}
