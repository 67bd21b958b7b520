use std::process::{Command, Output};

use num_rational::BigRational;
use num_traits::One;
use serde_json::Value;

fn tcore(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_tcore"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn tcore_with_threads(threads: &str, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_tcore"))
        .env("TCORE_THREADS", threads)
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    assert_eq!(
        out.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn records(text: &str) -> Vec<Vec<String>> {
    csv::Reader::from_reader(text.as_bytes())
        .records()
        .map(|r| r.unwrap().iter().map(str::to_string).collect())
        .collect()
}

#[test]
fn counts_shape() {
    let text = stdout(&tcore(&[
        "counts", "--t", "3", "--max-n", "100", "--series", "p,c,d,C", "--format", "csv",
    ]));
    assert!(text.starts_with("n,p,c_t,d_t,C_t\n"));
    let rows = records(&text);
    assert_eq!(rows.len(), 101);
    assert_eq!(rows[100][1], "190569292");
    assert_eq!(rows[4], ["4", "5", "2", "0", "3"]);
    let only = stdout(&tcore(&[
        "counts", "--t", "2", "--max-n", "6", "--series", "c",
    ]));
    assert_eq!(only.lines().next(), Some("n,c_t"));
    assert_eq!(only.lines().nth(7), Some("6,1"));
}

#[test]
fn figure2_reproduces_the_mean_curve() {
    let rows = records(&stdout(&tcore(&["figure2", "--t", "3", "--max-n", "100"])));
    assert_eq!(rows.len(), 100);
    let last: Vec<f64> = rows[99][1..].iter().map(|v| v.parse().unwrap()).collect();
    assert!((last[0] - 7.77834).abs() < 1e-4);
    assert!((last[1] - 600f64.sqrt() / std::f64::consts::PI).abs() < 1e-12);
    assert!((last[0] / last[1] - 1.0).abs() < 0.15);
    for row in &rows {
        for v in &row[1..] {
            let x: f64 = v.parse().unwrap();
            assert_eq!(&format!("{x:.16e}"), v);
        }
    }
}

#[test]
fn orbit_table_layout() {
    let text = stdout(&tcore(&[
        "orbit", "--nu", "7,3,2", "--t", "3", "--max-b", "2",
    ]));
    let rows = records(&text);
    let words: Vec<&str> = rows.iter().map(|r| r[0].as_str()).collect();
    assert_eq!(words, ["123", "132", "213", "231", "312", "321"]);
    let members: Vec<&str> = rows.iter().map(|r| r[1].as_str()).collect();
    assert_eq!(
        members,
        ["(7,3,2)", "(7,4,1)", "(8,2,2)", "(8,4)", "(9,2,1)", "(9,3)"]
    );
    assert!(rows.iter().all(|r| r[2..] == ["(7,2)", "(4)", "(2)"]));
}

#[test]
fn pmf_masses_are_exact() {
    let doc: Value = serde_json::from_str(&stdout(&tcore(&[
        "pmf", "--t", "3", "--n", "30", "--format", "json",
    ])))
    .unwrap();
    assert_eq!(doc["schema_version"], 1);
    assert_eq!(doc["command"], "pmf");
    assert_eq!(doc["columns"][3], "mass");
    let total: BigRational = doc["rows"]
        .as_array()
        .unwrap()
        .iter()
        .map(|r| r[3].as_str().unwrap().parse::<BigRational>().unwrap())
        .sum();
    assert!(total.is_one());
}

#[test]
fn moments_and_figure1() {
    let rows = records(&stdout(&tcore(&[
        "moments", "--t", "3", "--n", "100,1600", "--max-k", "3",
    ])));
    assert_eq!(rows.len(), 6);
    for k in 0..3 {
        let before: f64 = rows[k][5].parse().unwrap();
        let after: f64 = rows[k + 3][5].parse().unwrap();
        assert!(after < before);
    }
    let text = stdout(&tcore(&["figure1", "--points", "11"]));
    assert!(text.starts_with("x,cdf_n20,cdf_n62,cdf_n103,gamma\n"));
    let rows = records(&text);
    assert_eq!(rows.len(), 11);
    for col in 1..5 {
        let values: Vec<f64> = rows.iter().map(|r| r[col].parse().unwrap()).collect();
        assert!(values.windows(2).all(|w| w[0] <= w[1]));
    }
}

#[test]
fn hooks_modes() {
    let exact = records(&stdout(&tcore(&[
        "hooks", "--t", "3", "--n", "10", "--mode", "exact",
    ])));
    assert_eq!(exact[0][1], "17/70");
    let sampled = records(&stdout(&tcore(&[
        "hooks",
        "--t",
        "3",
        "--n",
        "10",
        "--mode",
        "sample",
        "--samples",
        "20000",
        "--seed",
        "4",
    ])));
    for (e, s) in exact.iter().zip(&sampled) {
        let want: f64 = e[2].parse().unwrap();
        let mean: f64 = s[1].parse().unwrap();
        let se: f64 = s[2].parse().unwrap();
        assert!((mean - want).abs() < 4.0 * se);
    }
    assert_eq!(
        tcore(&["hooks", "--t", "3", "--n", "60"]).status.code(),
        Some(2)
    );
    assert_eq!(
        tcore(&[
            "hooks",
            "--t",
            "3",
            "--n",
            "10",
            "--mode",
            "sample",
            "--samples",
            "0"
        ])
        .status
        .code(),
        Some(2)
    );
}

#[test]
fn reruns_are_byte_identical() {
    let args = ["sample", "--n", "200", "--samples", "500", "--seed", "17"];
    let a = tcore_with_threads("1", &args);
    let b = tcore_with_threads("4", &args);
    assert_eq!(stdout(&a), stdout(&b));
    assert_eq!(records(&stdout(&a)).len(), 500);
    let args = [
        "hooks",
        "--t",
        "4",
        "--n",
        "300",
        "--mode",
        "sample",
        "--samples",
        "3000",
        "--seed",
        "5",
        "--format",
        "json",
    ];
    assert_eq!(
        stdout(&tcore_with_threads("2", &args)),
        stdout(&tcore(&args))
    );
    assert_ne!(
        stdout(&tcore(&["sample", "--n", "50", "--seed", "1"])),
        stdout(&tcore(&["sample", "--n", "50", "--seed", "2"]))
    );
}

#[test]
fn verify_suite_passes() {
    let out = tcore(&[
        "verify", "--suite", "all", "--max-n", "22", "--format", "json",
    ]);
    let doc: Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(doc["schema_version"], 1);
    assert_eq!(doc["suite"], "all");
    assert_eq!(doc["passed"], true);
    let cases = doc["cases"].as_array().unwrap();
    assert!(cases.len() >= 10);
    assert!(cases.iter().all(|c| c["passed"] == true));
    assert!(doc["elapsed_ms"].is_u64());
    let csv = stdout(&tcore(&["verify", "--suite", "sampling", "--max-n", "8"]));
    assert!(csv.starts_with("name,params,passed,detail\n"));
}

#[test]
fn usage_errors_exit_with_two() {
    for args in [
        vec!["counts", "--t", "1", "--max-n", "3"],
        vec!["counts", "--t", "three", "--max-n", "3"],
        vec!["counts", "--t", "3", "--max-n", "3", "--bogus"],
        vec!["counts", "--t", "3", "--max-n", "3", "--series", "q"],
        vec!["moments", "--t", "3", "--n", "400,100"],
        vec!["orbit", "--nu", "3,1", "--t", "3"],
        vec!["orbit", "--nu", "1,3", "--t", "3"],
        vec!["verify", "--suite", "nothing"],
        vec!["frobnicate"],
    ] {
        assert_eq!(tcore(&args).status.code(), Some(2), "{args:?}");
    }
    let bad_threads = tcore_with_threads("zero", &["counts", "--t", "3", "--max-n", "3"]);
    assert_eq!(bad_threads.status.code(), Some(2));
    assert_eq!(tcore(&["--help"]).status.code(), Some(0));
}

#[test]
fn output_file() {
    let path = std::env::temp_dir().join(format!("tcore-cli-test-{}.csv", std::process::id()));
    let p = path.to_str().unwrap();
    let out = tcore(&["counts", "--t", "4", "--max-n", "10", "--output", p]);
    assert_eq!(stdout(&out), "");
    let written = std::fs::read_to_string(&path).unwrap();
    std::fs::remove_file(&path).unwrap();
    assert_eq!(
        written,
        stdout(&tcore(&["counts", "--t", "4", "--max-n", "10"]))
    );
}
