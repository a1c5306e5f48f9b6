use basefano::cli::run;
use basefano::report::Report;

fn call(args: &[&str]) -> (i32, String, String) {
    let mut argv = vec!["basefano"];
    argv.extend_from_slice(args);
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = run(&argv, &mut out, &mut err);
    (
        code,
        String::from_utf8(out).unwrap(),
        String::from_utf8(err).unwrap(),
    )
}

#[test]
fn verify_command_prints_thirteen_green_sections() {
    let (code, out, err) = call(&["verify-paper"]);
    assert_eq!(code, 0, "{err}");
    assert_eq!(out.lines().filter(|l| l.starts_with("== ")).count(), 13);
    assert!(!out.contains("FAIL"));
    assert!(out.lines().last().unwrap().contains("0 failed"));
}

#[test]
fn cover_analyze_thirteen_fails_but_exits_zero() {
    let (code, out, _) = call(&["cover", "analyze", "--m", "13"]);
    assert_eq!(code, 0);
    assert!(out.contains("verdict: Fails"));
    assert!(out.contains("fibre multiplicity at x3: 4"));
    let (code, out, _) = call(&["cover", "analyze", "--m", "12", "--json"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["verdict"], "passes_du_val_necessary");
    assert_eq!(v["fiber_mult"], 3);
}

#[test]
fn scroll_commands() {
    assert_eq!(
        call(&["scroll", "h0", "--d", "5,1,0", "--class", "4,-8"])
            .1
            .trim(),
        "43"
    );
    assert_eq!(
        call(&["scroll", "intersect", "--d", "5,1,0", "--class", "1,0"])
            .1
            .trim(),
        "6"
    );
    assert_eq!(
        call(&[
            "scroll",
            "intersect",
            "--d",
            "5,1,0",
            "--classes",
            "1,0;1,0;0,1"
        ])
        .1
        .trim(),
        "1"
    );
    assert_eq!(
        call(&["scroll", "canonical", "--d", "4,0"]).1.trim(),
        "(-2,2)"
    );
    assert_eq!(
        call(&["scroll", "support", "--d", "4,0", "--class", "1,-4"])
            .1
            .trim(),
        "1,0"
    );
    assert_eq!(
        call(&["scroll", "fixed", "--d", "12,8,0", "--comp", "1,-12", "--class", "4,-36"])
            .1
            .trim(),
        "1"
    );
    assert_eq!(
        call(&["scroll", "mult", "--d", "13,9,0", "--class", "4,-40", "--index", "3"])
            .1
            .trim(),
        "4"
    );
    assert_eq!(call(&["scroll", "intersect", "--d", "5,1,0"]).0, 2);
}

#[test]
fn other_modules() {
    assert_eq!(
        call(&["surface", "split", "--e", "4", "--class", "4,12"])
            .1
            .trim(),
        "1ξ + (3,12)"
    );
    assert_eq!(
        call(&["surface", "genus", "--e", "4", "--class", "3,12"])
            .1
            .trim(),
        "10"
    );
    assert_eq!(
        call(&["k3", "dot", "--class", "1,5", "--other", "1,0"])
            .1
            .trim(),
        "3"
    );
    assert!(call(&["k3", "chain", "--m", "7"])
        .1
        .contains("m = 7, (-K)^3 = 12"));
    assert_eq!(call(&["k3", "degree", "--m", "1"]).0, 3);
    assert_eq!(
        call(&[
            "wps",
            "hilbert",
            "--weights",
            "1,1,1,1,2,3",
            "--degrees",
            "2,6",
            "--max",
            "3"
        ])
        .1
        .trim(),
        "1,4,10,21"
    );
    let (_, out, _) = call(&["wps", "infer", "--series", "1,3,7,14,25,41,63"]);
    assert_eq!(out, "generators: 1,1,1,2,3\nrelations: 6\n");
    assert!(
        call(&["wps", "degree", "--weights", "1,1,1,2,3", "--degrees", "6"])
            .1
            .contains("(-K)^3 = 8")
    );
    assert_eq!(
        call(&["wps", "rr", "--degree", "2", "--k", "-2"]).1.trim(),
        "-4"
    );
    assert_eq!(
        call(&[
            "blowup",
            "degree",
            "--ambient",
            "8",
            "--curve",
            "2",
            "--genus",
            "1"
        ])
        .1
        .trim(),
        "4"
    );
    assert_eq!(call(&["classify", "enumerate"]).1.lines().count(), 13);
    assert!(call(&["classify", "prune", "--a", "3", "--b", "-2"])
        .1
        .contains("m = 5"));
    assert_eq!(call(&["classify", "prune", "--a", "0", "--b", "-3"]).0, 3);
}

#[test]
fn json_report_round_trips() {
    let (code, out, _) = call(&["verify-paper", "--json"]);
    assert_eq!(code, 0);
    let report: Report = serde_json::from_str(&out).unwrap();
    assert!(report.all_passed());
    assert_eq!(report.summary.passed, report.checks.len());
    assert_eq!(format!("{}\n", report.to_json()), out);
    let value: serde_json::Value = serde_json::from_str(&out).unwrap();
    fn no_floats(v: &serde_json::Value) -> bool {
        match v {
            serde_json::Value::Number(n) => n.is_i64() || n.is_u64(),
            serde_json::Value::Array(a) => a.iter().all(no_floats),
            serde_json::Value::Object(o) => o.values().all(no_floats),
            _ => true,
        }
    }
    assert!(no_floats(&value));
}

#[test]
fn ordering_is_deterministic_across_thread_counts() {
    let runs: Vec<String> = ["1", "2", "8", "1"]
        .iter()
        .map(|t| call(&["verify-paper", "--json", "--threads", t]).1)
        .collect();
    assert!(runs.windows(2).all(|w| w[0] == w[1]));
    assert_eq!(call(&["verify-paper", "--threads", "0"]).0, 2);
}

#[test]
fn short_truncation_is_a_domain_error() {
    assert_eq!(call(&["verify-paper", "--max-degree", "5"]).0, 3);
    assert_eq!(call(&["verify-paper", "--max-degree", "6"]).0, 0);
}

#[test]
fn help_and_version() {
    let (code, out, _) = call(&["scroll", "--help"]);
    assert_eq!(code, 0);
    assert!(out.contains("k,-l"));
    let (code, out, _) = call(&["--version"]);
    assert_eq!(code, 0);
    assert!(out.contains(env!("CARGO_PKG_VERSION")));
    assert_eq!(call(&[]).0, 2);
}
