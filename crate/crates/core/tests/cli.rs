use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_pseudoknot")).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

#[test]
fn jones_of_the_hopf_link() {
    let o = run(&["jones", "catalog:hopf_L2a1_1"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "-A^-2 - A^-10\n");
}

#[test]
fn bracket_and_alexander() {
    assert_eq!(stdout(&run(&["bracket", "catalog:hopf_L2a1_1"])), "-A^4 - A^-4\n");
    assert_eq!(stdout(&run(&["alexander", "catalog:trefoil_rh"])), "t^2 - t + 1\n");
}

#[test]
fn smoothing_invariant_of_the_pseudo_trefoil() {
    let o = run(&["invariant", "catalog:pseudo_trefoil", "--base", "jones", "--tangles", "smooth:1/(-A^2 - A^-2)"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "(1 + A^-8)/(A^4 + 1)\n");
}

#[test]
fn failing_relation_exits_one() {
    let o = run(&["relation", "--base", "jones", "--tangles", "+1:1,-1:-1"]);
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(stdout(&o), "relation FAILED: sum = 0\n");
    let ok = run(&["relation", "--base", "jones", "--tangles", "+1:1/2,-1:1/2"]);
    assert_eq!(ok.status.code(), Some(0));
    assert_eq!(stdout(&ok), "relation holds: sum = 1\n");
}

#[test]
fn were_set_with_names() {
    let o = run(&["wereset", "catalog:pseudo_trefoil", "--identify"]);
    assert_eq!(o.status.code(), Some(0));
    let mut lines: Vec<String> = stdout(&o).lines().map(str::to_string).collect();
    lines.sort();
    assert_eq!(lines, ["1/2\ttrefoil_rh", "1/2\tunknot"]);
}

#[test]
fn diagram_files_are_accepted() {
    let path = std::env::temp_dir().join(format!("pseudoknot-cli-{}.pd", std::process::id()));
    std::fs::write(&path, "components: 1-6\npd: X+[1,5,2,4] X+[3,1,4,6] X+[5,3,6,2]\n").unwrap();
    let o = run(&["alexander", path.to_str().unwrap()]);
    std::fs::remove_file(&path).unwrap();
    assert_eq!(stdout(&o), "t^2 - t + 1\n");
}

#[test]
fn fuzz_output_is_deterministic() {
    let args = ["fuzz", "catalog:pseudo_trefoil", "--iterations", "8", "--seed", "3", "--max-crossings", "8"];
    let (a, b) = (run(&args), run(&args));
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    assert!(stdout(&a).ends_with("fuzz PASSED\n"));
}

#[test]
fn ungated_vassiliev_recipe_fails_under_pr1() {
    let o = run(&[
        "fuzz", "catalog:pseudo_trefoil", "--moves", "pr1", "--iterations", "5", "--base", "jones", "--tangles",
        "+1:1,-1:-1", "--hat",
    ]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).ends_with("fuzz FAILED\n"));
}

#[test]
fn errors_are_one_line_with_exit_codes() {
    for (args, code) in [
        (&["jones"][..], 2),
        (&["frobnicate"][..], 2),
        (&["fuzz", "--moves", "r4"][..], 2),
        (&["jones", "catalog:nonesuch"][..], 1),
        (&["alexander", "catalog:hopf_L2a1_1"][..], 1),
        (&["invariant", "catalog:pseudo_trefoil", "--base", "jones", "--tangles", "+1:1,-1:-1"][..], 1),
        (&["jones", "/nonexistent/file.pd"][..], 1),
    ] {
        let o = run(args);
        assert_eq!(o.status.code(), Some(code), "{args:?}");
        let err = stderr(&o);
        assert!(err.starts_with("error: "), "{args:?}: {err}");
        assert_eq!(err.lines().count(), 1, "{args:?}: {err}");
    }
}

#[test]
fn catalog_listing_and_entry() {
    let names = stdout(&run(&["catalog"]));
    assert!(names.lines().any(|l| l == "pseudo_perko_b"));
    let entry = run(&["catalog", "trefoil_rh"]);
    assert_eq!(entry.status.code(), Some(0));
    assert!(stdout(&entry).contains("pd:"));
}
