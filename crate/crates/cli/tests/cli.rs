use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_spin-orbits"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = run(args);
    assert!(
        out.status.success(),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

fn code(args: &[&str]) -> i32 {
    run(args).status.code().expect("exit code")
}

#[test]
fn classify_examples() {
    assert_eq!(
        stdout(&["classify", "5", "11111/10111"]),
        "m\t2\ncanonical\t11100/10100\narf\t0\n"
    );
    assert!(stdout(&["classify", "6", "111111/101101"]).starts_with("m\t0\n"));
    assert!(stdout(&["classify", "3", "000/000"]).starts_with("m\t0\n"));
}

#[test]
fn reduce_trace_shows_intermediates() {
    let out = stdout(&["reduce", "5", "11111/10111", "--trace"]);
    assert_eq!(
        out,
        "c2 9 -> 11100/10111\na 8,10 -> 11100/10100\nword\t9,8,10\nresult\t11100/10100\nm\t2\n"
    );

    let out = stdout(&["reduce", "6", "111111/101101", "--trace"]);
    for m in ["110011/100001", "100001/100001", "110000/111111"] {
        assert!(out.contains(&format!("-> {m}\n")), "{m} missing:\n{out}");
    }
    assert!(out.contains("word\t7,6,8,9,7,5,4,6,8,10,11,9,7,5,3,2,4,6,8,10,12\n"));
}

#[test]
fn reduce_canonical_input_is_empty() {
    assert_eq!(
        stdout(&["reduce", "5", "11100/10100", "--trace"]),
        "word\t\nresult\t11100/10100\nm\t2\n"
    );
}

#[test]
fn reduce_json() {
    let out = stdout(&["reduce", "5", "11111/10111", "--trace", "--json"]);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["class_index"], 2);
    assert_eq!(v["total_word"], serde_json::json!([9, 8, 10]));
    assert_eq!(v["steps"][0]["after"], "11100/10111");
    assert_eq!(v["steps"][0]["move"], "c2");

    let out = stdout(&["reduce", "5", "11111/10111", "--json"]);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert!(v.get("steps").is_none());
}

#[test]
fn orbits_table() {
    assert_eq!(
        stdout(&["orbits", "3"]),
        "g\tm\tsize\tstabilizer_order\tarf\tbinomial_predicted\tmatch\n\
         3\t0\t35\t1152\t0\t35\ttrue\n\
         3\t1\t28\t1440\t1\t28\ttrue\n\
         3\t2\t1\t40320\t0\t1\ttrue\n"
    );
    let out = stdout(&["orbits", "5"]);
    let sizes: Vec<&str> = out
        .lines()
        .skip(1)
        .map(|l| l.split('\t').nth(2).unwrap())
        .collect();
    assert_eq!(sizes, ["462", "495", "66", "1"]);
}

#[test]
fn orbits_json_has_exact_orders() {
    let out = stdout(&["orbits", "10", "--json"]);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    // 22!/22 = 21!
    assert_eq!(v[5]["stabilizer_order"], "51090942171709440000");
}

#[test]
fn isotropy_reports() {
    let out = stdout(&["isotropy", "3", "0"]);
    assert!(out.contains("matrix\t101/101\n"));
    assert!(out.contains("fixing\t1,2,3,5,6,7\n"));
    assert!(out.contains("moving\t4\n"));
    assert!(out.contains("tau_fixes\ttrue\n"));
    assert!(out.contains("observed_order\t1152\n"));
    assert!(out.ends_with("passes\ttrue\n"));

    let out = stdout(&["isotropy", "5", "3"]);
    assert!(out.contains("matrix\t11111/10101\n"));
    assert!(out.contains("moving\t\n"));
    assert!(out.contains("predicted_order\t479001600\n"));
}

#[test]
fn fixed_points() {
    assert_eq!(stdout(&["fixed-point", "4"]), "none\n");
    assert_eq!(stdout(&["fixed-point", "5"]), "11111/10101\n");
    assert_eq!(stdout(&["fixed-point", "3"]), "111/101\n");
}

#[test]
fn verify_small_range() {
    let out = stdout(&["verify", "4"]);
    assert!(out.contains("4\tnormal-form-membership\tpass\t"));
    assert!(out.contains("summary\tpass="));
    assert!(out.contains("\tfail=0\tskip=0\n"));

    let out = stdout(&["verify", "2"]);
    assert!(out.contains("2\torbit-count\tpass\t2 orbits"));
}

#[test]
fn verify_is_independent_of_thread_count() {
    assert_eq!(
        stdout(&["verify", "3..6"]),
        stdout(&["--threads", "1", "verify", "3..6"])
    );
    assert_eq!(
        stdout(&["verify", "3..=6"]),
        stdout(&["verify", "3..6", "--threads", "3"])
    );
}

#[test]
fn skips_and_strict_mode() {
    let out = stdout(&["verify", "7", "--max-g", "6"]);
    assert!(out.contains("7\torbit-count\tskip\t"));
    assert_eq!(code(&["verify", "7", "--max-g", "6", "--strict"]), 3);
}

#[test]
fn usage_errors() {
    assert_eq!(code(&["classify", "3", "11/10"]), 2);
    assert_eq!(code(&["classify", "3", "1x1/101"]), 2);
    assert_eq!(code(&["classify", "2", "11/10"]), 2);
    assert_eq!(code(&["verify", "--max-g", "13"]), 2);
    assert_eq!(code(&["verify", "5..3"]), 2);
    assert_eq!(code(&["isotropy", "3", "3"]), 2);
    assert_eq!(code(&["orbits", "13"]), 2);
    assert_eq!(code(&["frobnicate"]), 2);
}
