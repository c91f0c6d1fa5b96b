use std::path::Path;
use std::process::{Command, Output};

const HEADER: &str = "t,mx,my,mz,pe,gamma_r,gamma_e,gamma_2";

fn tlsdyn(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_tlsdyn"))
        .args(args)
        .env_remove("TLSDYN_OUTPUT_DIR")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn column(csv: &str, name: &str) -> Vec<f64> {
    let mut lines = csv.lines();
    let idx = lines.next().unwrap().split(',').position(|c| c == name).unwrap();
    lines.map(|l| l.split(',').nth(idx).unwrap().parse().unwrap()).collect()
}

#[test]
fn rotate_writes_header_and_reaches_universal_response() {
    let o = tlsdyn(&["rotate", "--omega", "0.1", "--alpha", "0.05", "--coupling", "perp-y", "--temp", "0", "--t-final", "80"]);
    assert!(o.status.success(), "{}", stderr(&o));
    let text = stdout(&o);
    assert_eq!(text.lines().next().unwrap(), HEADER);
    assert_eq!(text.lines().count(), 1002);
    // At T = 0 the response settles to -Ω/W.
    let my = *column(&text, "my").last().unwrap();
    assert!((my + 0.1 / 1.01f64.sqrt()).abs() < 2e-3, "m_y(80) = {my}");
    // At least 12 significant digits.
    let first = text.lines().nth(1).unwrap().split(',').next().unwrap();
    assert!(first.split('e').next().unwrap().len() >= 14);
}

#[test]
fn lz_saturates_with_finite_cutoff() {
    let o = tlsdyn(&["lz", "--v", "0.5", "--alpha", "0.05", "--temp", "0", "--ec", "5", "--basis", "eigen", "--samples", "401"]);
    assert!(o.status.success(), "{}", stderr(&o));
    let pe = column(&stdout(&o), "pe");
    let n = pe.len();
    assert!((pe[n - 1] - pe[n - 40]).abs() < 1e-4, "not saturated: {} vs {}", pe[n - 40], pe[n - 1]);
    assert!(pe[n - 1] > 0.0 && pe[n - 1] < 0.0433);
}

#[test]
fn config_errors_exit_1() {
    for args in [
        vec!["rotate", "--v", "0.5"],
        vec!["rotate", "--no-such-flag"],
        vec!["lz", "--coupling", "perp-y"],
        vec!["lz", "--basis", "sideways"],
        vec!["rotate", "--preset", "fig99"],
        vec!["lz", "--preset", "fig1"],
        vec!["rotate", "--preset", "fig1"],
        vec!["rotate", "--alpha", "-1"],
        vec!["sweep", "rotate", "--param", "v", "--values", "1,2"],
        vec!["sweep", "rotate", "--param", "alpha", "--values", "1,x"],
    ] {
        let o = tlsdyn(&args);
        assert_eq!(o.status.code(), Some(1), "{args:?}: {}", stderr(&o));
        assert!(stderr(&o).contains("error"), "{args:?}");
    }
}

#[test]
fn unknown_config_key_names_the_field() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.toml");
    std::fs::write(&path, "scenario = \"rotate\"\n\n[params]\nomgea = 0.1\n").unwrap();
    let o = tlsdyn(&["rotate", "--config", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    let err = stderr(&o);
    assert!(err.contains("omgea") && err.contains("line 4"), "{err}");
}

#[test]
fn solver_failure_exits_2_with_time() {
    // A fixed step far beyond the stability limit blows up.
    let o = tlsdyn(&["rotate", "--method", "fixed-rk4", "--initial-step", "40", "--omega", "0.1", "--alpha", "5", "--t-final", "2000"]);
    assert_eq!(o.status.code(), Some(2), "{}", stderr(&o));
    assert!(stderr(&o).contains("t = "), "{}", stderr(&o));
}

#[test]
fn empty_sweep_is_an_empty_table() {
    let o = tlsdyn(&["sweep", "lindblad-lz", "--param", "gamma", "--values", ""]);
    assert!(o.status.success(), "{}", stderr(&o));
    assert_eq!(stdout(&o), "gamma,final_pe,error\n");
}

#[test]
fn sweep_rows_are_sorted_and_deterministic() {
    let args = ["sweep", "lindblad-lz", "--param", "gamma", "--values", "2,0,1", "--samples", "51", "--v", "0.5"];
    let a = tlsdyn(&[&args[..], &["--jobs", "3"]].concat());
    let b = tlsdyn(&[&args[..], &["--jobs", "1"]].concat());
    assert!(a.status.success(), "{}", stderr(&a));
    assert_eq!(a.stdout, b.stdout);
    let text = stdout(&a);
    assert_eq!(column(&text, "gamma"), vec![0.0, 1.0, 2.0]);
    // γ = 0 is the unitary result e^{-π}.
    let p = column(&text, "final_pe");
    assert!((p[0] - (-std::f64::consts::PI).exp()).abs() < 1e-4, "{p:?}");
}

#[test]
fn sweep_records_point_failures_in_row() {
    let o = tlsdyn(&["sweep", "lz", "--param", "temp", "--values", "0,1", "--equation", "rate-equation", "--samples", "21"]);
    assert!(o.status.success(), "{}", stderr(&o));
    let text = stdout(&o);
    let rows: Vec<&str> = text.lines().skip(1).collect();
    assert_eq!(rows.len(), 2);
    assert!(rows[0].contains("T > 0"));
    assert!(rows[1].ends_with(','));
}

#[test]
fn json_echo_round_trips() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.json");
    let b = dir.path().join("b.json");
    let o = tlsdyn(&["lz", "--v", "0.5", "--alpha", "0.05", "--ec", "inf", "--samples", "21", "-o", a.to_str().unwrap()]);
    assert!(o.status.success(), "{}", stderr(&o));
    let o = tlsdyn(&["lz", "--config", a.to_str().unwrap(), "-o", b.to_str().unwrap()]);
    assert!(o.status.success(), "{}", stderr(&o));
    let (ta, tb) = (std::fs::read(&a).unwrap(), std::fs::read(&b).unwrap());
    assert_eq!(ta, tb);
    let doc: serde_json::Value = serde_json::from_slice(&ta).unwrap();
    assert_eq!(doc["config"]["params"]["ec"], "inf");
    assert_eq!(doc["columns"].as_array().unwrap().len(), 8);
    assert!(doc["core_version"].is_string());
}

#[test]
fn flags_override_preset() {
    let base = tlsdyn(&["lz", "--preset", "fig8", "--samples", "11", "--format", "json"]);
    let over = tlsdyn(&["lz", "--preset", "fig8", "--samples", "11", "--format", "json", "--alpha", "0.02"]);
    assert!(base.status.success() && over.status.success());
    let b: serde_json::Value = serde_json::from_slice(&base.stdout).unwrap();
    let o: serde_json::Value = serde_json::from_slice(&over.stdout).unwrap();
    assert_eq!(b["config"]["params"]["alpha"], 0.05);
    assert_eq!(o["config"]["params"]["alpha"], 0.02);
    assert_eq!(o["config"]["params"]["ec"], 5.0);
}

#[test]
fn output_dir_env_is_the_default_destination() {
    let dir = tempfile::tempdir().unwrap();
    let o = Command::new(env!("CARGO_BIN_EXE_tlsdyn"))
        .args(["lindblad-rotate", "--samples", "11"])
        .env("TLSDYN_OUTPUT_DIR", dir.path())
        .output()
        .unwrap();
    assert!(o.status.success());
    assert!(o.stdout.is_empty());
    let text = std::fs::read_to_string(dir.path().join("lindblad-rotate.csv")).unwrap();
    assert!(text.starts_with(HEADER));
}

#[test]
fn oracle_check_reports() {
    let o = tlsdyn(&["oracle-check", "lz-ideal", "--format", "json"]);
    assert!(o.status.success(), "{}", stderr(&o));
    let doc: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    let rows = doc["rows"].as_array().unwrap();
    assert!(!rows.is_empty());
    let v05 = rows.iter().find(|r| r[2].as_str().unwrap().contains("v = 0.5")).unwrap();
    assert!((v05[3].as_f64().unwrap() - 0.0432).abs() < 1e-4);
    assert_eq!(v05[8], "pass");

    let o = tlsdyn(&["oracle-check", "my-universal"]);
    assert!(o.status.success(), "{}", stderr(&o));
    assert!(stdout(&o).lines().skip(1).all(|l| l.ends_with(",pass")), "{}", stdout(&o));

    let o = tlsdyn(&["oracle-check", "bogus"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("lz-ideal") && stderr(&o).contains("structural"));
}

#[test]
fn help_and_version_exit_0() {
    assert!(tlsdyn(&["--help"]).status.success());
    assert!(tlsdyn(&["--version"]).status.success());
    assert!(tlsdyn(&["oracle-check", "--list"]).status.success());
}

#[test]
fn presets_are_shipped() {
    let dir = Path::new(env!("CARGO_MANIFEST_DIR")).join("presets");
    for i in 1..=14 {
        assert!(dir.join(format!("fig{i}.toml")).exists());
    }
}
