use std::process::{Command, Output};

fn sperner(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_sperner"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).unwrap()
}

#[test]
fn gen_lists_points() {
    let out = sperner(&["gen", "--spec", "a=1,2,2;k=3"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "101\n110\n");
}

#[test]
fn gen_with_prime() {
    let out = sperner(&["gen", "--spec", "a=1,1,1,1;k=1", "--prime", "5"]);
    assert_eq!(stdout(&out).lines().count(), 4);
}

#[test]
fn sm_of_uniform_family() {
    let out = sperner(&["sm", "--spec", "a=1,1,1;k=1", "--order", "lex"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "1\n[2]\n[3]\n");
}

#[test]
fn sm_from_points() {
    let out = sperner(&["sm", "--points", "110,101", "--order", "deglex"]);
    assert_eq!(stdout(&out).lines().count(), 2);
}

#[test]
fn lexgame_winner() {
    let out = sperner(&["lexgame", "--spec", "a=1,1;k=1", "--monomial", "[1]"]);
    assert_eq!(stdout(&out), "Lea\n");
    let out = sperner(&["lexgame", "--spec", "a=1,1;k=1", "--monomial", "[2]"]);
    assert_eq!(stdout(&out), "Stan\n");
}

#[test]
fn certificate_and_qpoly() {
    let out = sperner(&["certificate", "--points", "110,101", "--monomial", "[1]"]);
    assert_eq!(stdout(&out), "(1,[1]) (-1,1)\n");
    let out = sperner(&["certificate", "--points", "110,101", "--monomial", "1"]);
    assert_eq!(out.status.code(), Some(2));
    let out = sperner(&["qpoly", "--spec", "a=1,2,3,4,5;k=5", "--monomial", "[2,3]"]);
    assert!(out.status.success());
    assert!(stdout(&out).starts_with("(1,[2,3])"));
}

#[test]
fn shatter_and_linearity() {
    let out = sperner(&["shatter", "--spec", "a=1,1,1,1;k=2"]);
    assert_eq!(stdout(&out), "min_unshattered_size 3\nantichain true\n");
    let out = sperner(&["shatter", "--spec", "a=1,1,1,1;k=2", "--monomial", "[1,2]"]);
    assert_eq!(stdout(&out), "shattered\n");
    let out = sperner(&["is-linear", "--points", "11000,10100,10010,10001,01100,00111"]);
    assert_eq!(stdout(&out), "none\n");
    let out = sperner(&["is-linear", "--points", "1100,1010,1001,0110,0101,0011"]);
    assert_eq!(stdout(&out), "a=1,1,1,1;k=2\n");
}

#[test]
fn verify_theorem_main_passes() {
    let out = sperner(&["verify", "--suite", "theorem-main", "--n", "8", "--max-weight", "4"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.lines().last().unwrap().starts_with("PASS theorem-main"));
    assert!(text.starts_with("suite,n,params,pass,size,bound,witness\n"));
}

#[test]
fn structured_output_is_json() {
    let cases: [&[&str]; 8] = [
        &["gen", "--spec", "a=1,2,2;k=3"],
        &["sm", "--spec", "a=1,1,1;k=1"],
        &["lexgame", "--spec", "a=1,1;k=1", "--monomial", "[1]"],
        &["certificate", "--points", "110,101", "--monomial", "[1]"],
        &["qpoly", "--spec", "a=1,2,3,4,5;k=5", "--monomial", "[2,3]"],
        &["shatter", "--points", "110,101"],
        &["is-linear", "--points", "110,101"],
        &["verify", "--suite", "pelda", "--n", "6"],
    ];
    for args in cases {
        let mut args = args.to_vec();
        args.extend(["--format", "structured"]);
        let out = sperner(&args);
        assert!(out.status.success(), "{args:?}");
        let value: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
        assert!(value.is_object(), "{args:?}");
    }
}

#[test]
fn output_is_deterministic() {
    let args = ["verify", "--suite", "engines", "--n", "5", "--samples", "200", "--seed", "3"];
    let first = stdout(&sperner(&args));
    assert_eq!(first, stdout(&sperner(&args)));
    let mut sequential = args.to_vec();
    sequential.push("--sequential");
    assert_eq!(first, stdout(&sperner(&sequential)));
}

#[test]
fn usage_errors_exit_2_with_hint() {
    for args in [
        &["gen", "--spec", "a=1;k=x"][..],
        &["verify", "--suite", "nope"],
        &["frobnicate"],
        &["sm"],
        &["gen", "--spec", "a=0,1;k=1"],
        &["verify", "--suite", "modp", "--prime", "4"],
    ] {
        let out = sperner(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(!stderr(&out).is_empty());
    }
    let out = sperner(&["gen", "--spec", "a=1;k=x"]);
    assert!(stderr(&out).contains("--help"));
}

#[test]
fn size_guards() {
    let ones = vec!["1"; 25].join(",");
    let spec = format!("a={ones};k=1");
    let out = sperner(&["gen", "--spec", &spec]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("--allow-large"));
    let out = sperner(&["gen", "--spec", &spec, "--allow-large"]);
    assert_eq!(stdout(&out).lines().count(), 25);
    let out = sperner(&["sm", "--spec", "a=1,1,1,1,1,1,1,1,1,1,1,1,1;k=1"]);
    assert_eq!(out.status.code(), Some(2));
    let out = sperner(&["verify", "--suite", "engines", "--n", "13"]);
    assert_eq!(out.status.code(), Some(2));
}
