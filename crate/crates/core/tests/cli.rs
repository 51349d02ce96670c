use std::process::{Command, Output};

use siegel_core::output::{parse_table, TableFormat};
use siegel_core::Rational;

fn siegel(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_siegel"))
        .args(args)
        .output()
        .expect("run siegel")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

#[test]
fn chi_all_routes_agree() {
    let o = siegel(&["chi", "--g", "2", "--route", "all"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    for route in ["product", "recursive", "gaussbonnet"] {
        assert!(text.contains(&format!("chi[g=2] = -1/1440 ({route})")), "{text}");
    }
}

#[test]
fn chi_genus_one_and_zero() {
    let o = siegel(&["chi", "--g", "1", "--route", "product"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "chi[g=1] = -1/12 (product)");
    assert_eq!(siegel(&["chi", "--g", "0", "--route", "all"]).status.code(), Some(1));
}

#[test]
fn chi_json_output() {
    let o = siegel(&["chi", "--g", "3", "--route", "recursive", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v[0]["value"]["num"], "1");
    assert_eq!(v[0]["value"]["den"], "362880");
    assert_eq!(v[0]["route"], "recursive");
}

#[test]
fn gaussbonnet_respects_ring_cap() {
    let o = Command::new(env!("CARGO_BIN_EXE_siegel"))
        .args(["chi", "--g", "4", "--route", "gaussbonnet"])
        .env("SIEGEL_CHI_MAX_G", "3")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("SIEGEL_CHI_MAX_G"));
}

#[test]
fn chi_level_examples() {
    let o = siegel(&["chi-level", "--delta", "1,2"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("degree_ratio[g=2, delta=(1,2)] = 5"), "{text}");
    assert!(text.contains("chi_level[g=2, delta=(1,2)] = -1/288"), "{text}");

    let o = siegel(&["chi-level", "--delta", "3,3,3"]);
    assert!(stdout(&o).contains("degree_ratio[g=3, delta=(3,3,3)] = 1"));

    let o = siegel(&["chi-level", "--delta", "2,3"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("2 does not divide 3"));
}

#[test]
fn integrate_examples() {
    let o = siegel(&["integrate", "--g", "2", "--exp", "1,1"]);
    let text = stdout(&o);
    assert!(text.contains("abar[g=2, exp=1,1] = 1/5760"), "{text}");
    assert!(text.contains("lg[g=2, exp=1,1] = -1"), "{text}");

    let text = stdout(&siegel(&["integrate", "--g", "2", "--exp", "3,0"]));
    assert!(text.contains("= 1/2880"));
    assert!(text.contains("lg[g=2, exp=3,0] = -2"));

    let o = siegel(&["integrate", "--g", "2", "--exp", "1,0"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("abar[g=2, exp=1,0] = 0"));
    assert!(stderr(&o).contains("not the top degree"));

    assert_eq!(siegel(&["integrate", "--g", "2", "--exp", "1"]).status.code(), Some(1));
}

#[test]
fn verify_suites() {
    for (suite, gmax) in [("mumford", "5"), ("recursion", "12"), ("strata", "5")] {
        let o = siegel(&["verify", "--suite", suite, "--gmax", gmax]);
        assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
        assert!(stdout(&o).contains(&format!("PASS {suite} (")));
    }
    let text = stdout(&siegel(&["verify", "--suite", "strata", "--gmax", "5"]));
    assert!(text.contains("ROOT_ZERO same=0 finer=36"), "{text}");
    assert_eq!(siegel(&["verify", "--suite", "strata", "--gmax", "50"]).status.code(), Some(1));
    assert_eq!(siegel(&["verify", "--suite", "bogus"]).status.code(), Some(1));
}

#[test]
fn table_formats() {
    let o = siegel(&["table", "--gmax", "3", "--format", "csv"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let last = text.lines().last().unwrap();
    assert!(last.starts_with("3,1/362880,"), "{last}");

    let v: serde_json::Value =
        serde_json::from_str(&stdout(&siegel(&["table", "--gmax", "1", "--format", "json"]))).unwrap();
    assert_eq!(v[0]["g"], 1);
    assert_eq!(v[0]["chi"], serde_json::json!({"num": "-1", "den": "12"}));

    assert_eq!(siegel(&["table", "--gmax", "0"]).status.code(), Some(1));
    assert_eq!(siegel(&["table", "--gmax", "2", "--format", "xml"]).status.code(), Some(1));
}

#[test]
fn table_cells_round_trip() {
    for (name, fmt) in [("md", TableFormat::Md), ("csv", TableFormat::Csv), ("json", TableFormat::Json)] {
        let text = stdout(&siegel(&["table", "--gmax", "8", "--format", name]));
        let rows = parse_table(&text, fmt).unwrap();
        assert_eq!(rows.len(), 8);
        for r in &rows {
            assert_eq!(r.chi, siegel_core::eulerhodge::chi_product(r.g).unwrap());
            assert_eq!(r.chi_lg, Rational::from_int(1u64 << r.g));
            assert_eq!(r.k, &r.chi / &r.chi_lg);
        }
    }
}

#[test]
fn help_and_version_exit_zero() {
    assert_eq!(siegel(&["--help"]).status.code(), Some(0));
    assert_eq!(siegel(&["--version"]).status.code(), Some(0));
    assert_eq!(siegel(&["chi"]).status.code(), Some(1));
}
