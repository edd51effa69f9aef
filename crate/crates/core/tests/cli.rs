use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cubefactor")).args(args).output().expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = run(args);
    assert_eq!(out.status.code(), Some(0), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

#[test]
fn poly_methods_agree() {
    for family in ["gamma", "omega"] {
        for n in ["0", "7", "30"] {
            let rec = stdout(&["poly", "--family", family, "--n", n, "--method", "rec"]);
            for method in ["closed", "gf"] {
                assert_eq!(stdout(&["poly", "--family", family, "--n", n, "--method", method]), rec);
            }
        }
    }
    assert_eq!(stdout(&["poly", "--family", "gamma", "--n", "5", "--csv"]), "1,2,0,1\n");
    assert_eq!(
        stdout(&["poly", "--family", "omega", "--n", "4", "--json"]),
        "{\"family\":\"omega\",\"n\":4,\"coeffs\":[\"1\",\"1\",\"1\"]}\n"
    );
}

#[test]
fn table_csv_and_seq() {
    assert_eq!(stdout(&["table", "--family", "gamma", "--rows", "3", "--csv"]), "1\n0,1\n1,1\n");
    assert_eq!(stdout(&["table", "--family", "omega", "--rows", "0"]), "");
    assert_eq!(stdout(&["seq", "--name", "lucas", "--count", "5"]), "2\n1\n3\n4\n7\n");
    assert_eq!(stdout(&["seq", "--name", "fibonacci", "--count", "3"]), "0\n1\n1\n");
}

#[test]
fn graph_exports() {
    assert_eq!(stdout(&["graph", "--family", "gamma", "--n", "1", "--emit", "edgelist"]), "0 1\n");
    assert_eq!(stdout(&["graph", "--family", "omega", "--n", "1", "--emit", "edgelist"]).lines().count(), 1);
    let dot = stdout(&["graph", "--family", "gamma", "--n", "2", "--emit", "dot"]);
    assert_eq!(dot.matches(" -- ").count(), 2);
    assert_eq!(dot.lines().filter(|l| l.trim_end().ends_with("\";") && !l.contains("--")).count(), 3);
    let edges = stdout(&["graph", "--family", "omega", "--n", "6", "--emit", "edgelist"]);
    assert_eq!(edges.lines().count(), 30);
    let big = stdout(&["graph", "--family", "gamma", "--n", "18", "--cap", "18"]);
    assert!(big.lines().count() > 0);
}

#[test]
fn factor_output_and_check() {
    let text = stdout(&["factor", "--family", "gamma", "--n", "8"]);
    assert!(text.ends_with("parts 9\nprofile 1 3 0 4 1\n"), "{text}");
    let json = stdout(&["factor", "--family", "omega", "--n", "6", "--method", "greedy", "--json"]);
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("f.json");
    std::fs::write(&path, &json).unwrap();
    let checked = stdout(&["factor", "--family", "omega", "--n", "6", "--check", path.to_str().unwrap()]);
    assert!(checked.ends_with("profile 0 3 1 1\n"), "{checked}");

    std::fs::write(
        &path,
        r#"[{"k":1,"vertices":["000","001"]},{"k":1,"vertices":["001","01"]},{"k":0,"vertices":["1"]}]"#,
    )
    .unwrap();
    let out = run(&["factor", "--family", "omega", "--n", "3", "--check", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("lies in parts"));
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["poly", "--family", "gamma"]).status.code(), Some(2));
    assert_eq!(run(&["poly", "--family", "gamma", "--n", "3", "--bogus"]).status.code(), Some(2));
    assert_eq!(run(&["factor", "--family", "gamma", "--n", "9"]).status.code(), Some(2));
    assert_eq!(run(&["graph", "--family", "omega", "--n", "17"]).status.code(), Some(2));
    assert_eq!(run(&["--help"]).status.code(), Some(0));
    let oracle = run(&["verify", "--suite", "oracle", "--max-n", "6"]);
    assert_eq!(oracle.status.code(), Some(0));
    let text = String::from_utf8(oracle.stdout).unwrap();
    assert!(text.lines().last().unwrap().contains(" 0 fail"), "{text}");
}

#[test]
fn verify_reports_known_discrepancies() {
    let out = run(&["verify", "--suite", "identities", "--max-n", "12"]);
    let text = String::from_utf8(out.stdout).unwrap();
    let fails: Vec<&str> = text.lines().filter(|l| l.starts_with("FAIL")).collect();
    assert_eq!(fails.len(), 1, "{text}");
    assert!(fails[0].contains("nonzero terms = floor((n+5)/3)"));
    assert_eq!(out.status.code(), Some(1));
    assert!(text.contains("INFO identities gamma n<=12: skew sum"));
}
