use serde_json::Value;

use walled_brauer::cli::run;
use walled_brauer::cycletype::CycleType;
use walled_brauer::diagrams::{AlgebraElement, WalledDiagram, WalledShape};
use walled_brauer::scalars::Delta;

const X: &str = "r=4,s=2;t1-b2,t2-b1,t3-t6,t4-t5,b3-b5,b4-b6";
const Y: &str = "r=4,s=2;t1-b1,t2-b2,t3-t5,t4-t6,b3-b5,b4-b6";

fn call(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = run(
        std::iter::once("wbrauer").chain(args.iter().copied()),
        &mut out,
        &mut err,
    );
    (
        code,
        String::from_utf8(out).unwrap(),
        String::from_utf8(err).unwrap(),
    )
}

fn json(args: &[&str]) -> (i32, Value) {
    let mut full = vec!["--format", "json"];
    full.extend_from_slice(args);
    let (code, out, err) = call(&full);
    assert!(err.is_empty(), "{err}");
    (code, serde_json::from_str(&out).unwrap())
}

#[test]
fn multiply_reports_the_loop_coefficient() {
    let (code, out, _) = call(&["multiply", X, Y]);
    assert_eq!(code, 0);
    assert!(out.contains("coefficient: δ^2"));
    assert!(out.contains(&format!("diagram: {X}")));

    let (_, v) = json(&["multiply", Y, X, "--delta", "3"]);
    assert_eq!(v["coefficient"], "δ");
    assert_eq!(v["value"], "3");
    assert_eq!(v["diagram"], "r=4,s=2;t1-b2,t2-b1,t3-t5,t4-t6,b3-b5,b4-b6");
}

#[test]
fn cycletype_of_the_example_diagram() {
    let (code, out, _) = call(&["cycletype", X]);
    assert_eq!(code, 0);
    assert_eq!(out.trim(), "LL+NSNS");
}

#[test]
fn centre_of_b31_at_one() {
    let (code, v) = json(&["centre", "--r", "3", "--s", "1", "--delta", "1"]);
    assert_eq!(code, 0);
    assert_eq!(v["centre_dim"], 5);
    assert_eq!(v["methods_agree"], true);
    for key in [
        "r",
        "s",
        "delta",
        "centre_dim",
        "lambda_count",
        "cycle_type_count",
        "semisimple",
        "supersym_span_dim",
        "relation",
        "verdict",
        "basis",
        "timing_ms",
    ] {
        assert!(v.get(key).is_some(), "missing {key}");
    }
}

#[test]
fn json_strings_parse_back() {
    let shape = WalledShape::new(2, 2).unwrap();
    let delta: Delta = "1/2".parse().unwrap();
    let (code, v) = json(&["verify", "--r", "2", "--s", "2", "--delta", "1/2"]);
    assert_eq!(code, 0);
    assert_eq!(v["verdict"], "holds");
    assert_eq!(
        v["delta"].as_str().unwrap().parse::<Delta>().unwrap(),
        delta
    );
    let basis = v["basis"].as_array().unwrap();
    assert_eq!(basis.len(), 6);
    for b in basis {
        let text = b.as_str().unwrap();
        let element = AlgebraElement::parse(text, shape, &delta).unwrap();
        assert_eq!(element.to_string(), text);
    }

    let (_, v) = json(&["cycletype", X]);
    let d: WalledDiagram = v["diagram"].as_str().unwrap().parse().unwrap();
    assert_eq!(d.to_string(), X);
    let ct: CycleType = v["cycle_type"].as_str().unwrap().parse().unwrap();
    assert_eq!(ct.to_string(), "LL+NSNS");

    let (_, v) = json(&["cycletypes", "--r", "2", "--s", "1"]);
    let types = v["types"].as_array().unwrap();
    assert_eq!(types.len(), 4);
    for t in types {
        let text = t["cycle_type"].as_str().unwrap();
        assert_eq!(text.parse::<CycleType>().unwrap().to_string(), text);
    }
}

#[test]
fn sweep_csv_has_the_fixed_header() {
    let (code, out, _) = call(&[
        "--format",
        "csv",
        "sweep",
        "--r",
        "2",
        "--s",
        "1",
        "--deltas",
        "generic,0,1/2",
    ]);
    assert_eq!(code, 0);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines[0], "r,s,delta,centre_dim,lambda,semisimple,verdict");
    assert_eq!(lines[1], "2,1,generic,3,3,true,holds");
    assert_eq!(lines[2], "2,1,0,3,3,true,holds");
    assert_eq!(lines.len(), 4);
}

#[test]
fn open_cases_exit_zero() {
    let (code, out, _) = call(&["verify", "--r", "2", "--s", "2", "--delta", "0"]);
    assert_eq!(code, 0);
    assert!(out.contains("verdict: exploratory"));
    assert!(out.contains("open case"));
}

#[test]
fn output_is_deterministic_for_a_seed() {
    let args = [
        "--seed", "11", "verify", "--r", "2", "--s", "1", "--delta", "generic",
    ];
    let (c1, o1, _) = call(&args);
    let (c2, o2, _) = call(&args);
    assert_eq!((c1, c2), (0, 0));
    assert_eq!(o1, o2);
    assert!(o1.contains("rank at δ ="));
}

#[test]
fn usage_errors_exit_two() {
    let cases: [(&[&str], &str); 6] = [
        (
            &["centre", "--r", "2", "--s", "1", "--delta", "0.5"],
            "delta must be",
        ),
        (
            &["cycletype", "r=2,s=1;t1-t2,t3-b3,b1-b2"],
            "malformed diagram",
        ),
        (
            &[
                "centre", "--r", "3", "--s", "4", "--delta", "1", "--method", "brute",
            ],
            "bound exceeded",
        ),
        (
            &["centre", "--r", "0", "--s", "0", "--delta", "1"],
            "invalid shape",
        ),
        (&["frobnicate"], "unrecognized subcommand"),
        (
            &["--max-strands", "0", "cycletypes", "--r", "1", "--s", "1"],
            "--max-strands",
        ),
    ];
    for (args, needle) in cases {
        let (code, _, err) = call(args);
        assert_eq!(code, 2, "{args:?}");
        assert!(err.contains(needle), "{args:?}: {err}");
    }
}

#[test]
fn suite_passes_and_help_succeeds() {
    let (code, out, _) = call(&["suite5", "--r", "3"]);
    assert_eq!(code, 0);
    assert!(out.contains("all checks passed"));
    let (code, out, _) = call(&["help"]);
    assert_eq!(code, 0);
    assert!(out.contains("sweep"));
}
