use std::path::PathBuf;
use std::process::{Command, Output};

fn epslocal(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_epslocal")).args(args).env_remove("EPSLOCAL_PRECISION").output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn scratch(name: &str, body: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("epslocal-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, body).unwrap();
    path
}

#[test]
fn gauss_sum_over_f5() {
    let o = epslocal(&["gauss-sum", "-p", "5", "-r", "1", "--chi", "1"]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    let m = v["modulus"].as_f64().unwrap();
    assert!((m - 5f64.sqrt()).abs() < 1e-12);
    assert_eq!(v["order"], 4);
}

#[test]
fn trivial_gauss_sum_is_minus_one() {
    let o = epslocal(&["gauss-sum", "-p", "3", "-r", "2", "--chi", "0"]);
    let v: serde_json::Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    assert_eq!(v["exact"], "-1");
}

#[test]
fn scaled_additive_character() {
    // psi(2x) multiplies G(chi) by chi(2)^-1; the quadratic character of F_5 has chi(2) = -1
    let a = epslocal(&["gauss-sum", "-p", "5", "--chi", "2"]);
    let b = epslocal(&["gauss-sum", "-p", "5", "--chi", "2", "--scale", "2"]);
    let re = |o: &Output| serde_json::from_str::<serde_json::Value>(stdout(o).trim()).unwrap()["complex"][0].as_f64().unwrap();
    assert!((re(&a) + re(&b)).abs() < 1e-12);
    assert_eq!(epslocal(&["gauss-sum", "-p", "5", "--chi", "1", "--scale", "5"]).status.code(), Some(2));
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(epslocal(&["gauss-sum", "-p", "5", "--chi", "x"]).status.code(), Some(2));
    assert_eq!(epslocal(&["gauss-sum", "-p", "6", "--chi", "1"]).status.code(), Some(2));
    assert_eq!(epslocal(&["gamma-p", "-p", "7", "-z", "1/7", "-k", "4"]).status.code(), Some(2));
    assert_eq!(epslocal(&["gamma-p", "-p", "7", "-z", "a/b"]).status.code(), Some(2));
    assert_eq!(epslocal(&["verify", "nonsense"]).status.code(), Some(2));
    assert_eq!(epslocal(&[]).status.code(), Some(2));
}

#[test]
fn gamma_p_at_one_is_minus_one() {
    let o = epslocal(&["gamma-p", "-p", "7", "-z", "1", "-k", "6"]);
    let v: serde_json::Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    assert_eq!(v["residue"], (7u64.pow(6) - 1).to_string());
    let o = epslocal(&["gamma-p", "-p", "7", "-z", "1/3", "-k", "8"]);
    let v: serde_json::Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    assert_eq!(v["digits"].as_array().unwrap().len(), 8);
}

#[test]
fn verify_exit_codes_and_header() {
    let ok = epslocal(&["verify", "corollary-x0", "--pmax", "13"]);
    assert_eq!(ok.status.code(), Some(0));
    let text = stdout(&ok);
    let head: serde_json::Value = serde_json::from_str(text.lines().next().unwrap()).unwrap();
    assert_eq!(head["suite"], "corollary-x0");
    assert_eq!(head["grid"]["pmax"], 13);
    assert_eq!(head["convention"]["precision"], 10);
    assert!(String::from_utf8(ok.stderr).unwrap().contains("passed"));
    // the p = 2 value of the chi_p constant is not unimodular-compatible
    assert_eq!(epslocal(&["verify", "chip", "--pmax", "3"]).status.code(), Some(1));
    assert_eq!(epslocal(&["verify", "chip", "--pmax", "2"]).status.code(), Some(1));
}

#[test]
fn precision_from_environment() {
    let run = |v: &str| {
        Command::new(env!("CARGO_BIN_EXE_epslocal"))
            .args(["verify", "corollary-x0", "--pmax", "7"])
            .env("EPSLOCAL_PRECISION", v)
            .output()
            .unwrap()
    };
    let o = run("14");
    assert!(stdout(&o).contains(r#""precision":14"#));
    assert_eq!(run("many").status.code(), Some(2));
}

#[test]
fn verify_writes_output_file() {
    let path = scratch("out.jsonl", "");
    let o = epslocal(&["verify", "sp", "--pmax", "3", "-o", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert!(o.stdout.is_empty());
    let body = std::fs::read_to_string(&path).unwrap();
    assert_eq!(body.lines().count(), 2 + 6);
}

#[test]
fn classify_records() {
    let input = scratch(
        "newforms.jsonl",
        concat!(
            r#"{"p": 11, "Np": 1, "Cp": 0, "weight": 2, "ap": 1}"#,
            "\n",
            r#"{"p": 7, "Np": 3, "Cp": 0, "minimal": true, "epsF": 1, "epsFtwist": -1, "Nprime_factors": [[3, 1]]}"#,
            "\n"
        ),
    );
    let o = epslocal(&["classify", input.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let lines: Vec<&str> = text.lines().collect();
    assert!(lines[0].contains(r#""type":"Steinberg""#));
    assert!(lines[1].contains("Q_7(sqrt(-7)) ramified"));

    let bad = scratch("bad.jsonl", "{\"p\": 5, \"Np\": 1, \"Cp\": 2}\n");
    let out = scratch("bad.out", "");
    let o = epslocal(&["classify", bad.to_str().unwrap(), out.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(std::fs::read_to_string(&out).unwrap().contains("C_p cannot exceed N_p"));
    assert!(String::from_utf8(o.stderr).unwrap().contains("rejected"));
    assert_eq!(epslocal(&["classify", "/nonexistent/input.jsonl"]).status.code(), Some(2));
}
