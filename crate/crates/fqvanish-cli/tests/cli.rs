//! End-to-end tests of the installed binary: output shapes, exit codes,
//! and agreement with the library.

use std::process::{Command, Output};

use fqvanish::field::FieldSpec;
use fqvanish::parse::{parse_polynomial, VarStyle};
use fqvanish::reduce::field_equations;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_fqvanish"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn lines(output: &Output) -> Vec<String> {
    String::from_utf8(output.stdout.clone())
        .unwrap()
        .lines()
        .map(str::to_string)
        .collect()
}

fn exit_code(output: &Output) -> i32 {
    output.status.code().expect("no signal")
}

#[test]
fn reduce_normal_forms() {
    let out = run(&["reduce", "--q", "2", "--n", "1", "x1^2"]);
    assert_eq!(exit_code(&out), 0);
    assert_eq!(lines(&out), ["x1"]);

    let out = run(&["reduce", "--q", "2", "--n", "2", "--projective", "x0^2*x1"]);
    assert_eq!(exit_code(&out), 0);
    assert_eq!(lines(&out), ["x0*x1^2"]);

    let out = run(&["reduce", "--q", "2", "--n", "1", "x1 - x1"]);
    assert_eq!(exit_code(&out), 0);
    assert_eq!(lines(&out), ["0"]);
}

#[test]
fn reduce_cofactors_recombine_to_the_input() {
    let input = "x1^4*x2 + x2^3";
    let out = run(&["reduce", "--q", "3", "--n", "2", "--cofactors", input]);
    assert_eq!(exit_code(&out), 0);
    let printed = lines(&out);
    assert_eq!(printed.len(), 3);

    let field = FieldSpec::prime(3).unwrap();
    let parse = |text: &str| parse_polynomial(text, &field, 2, VarStyle::Affine).unwrap();
    let reduced = parse(&printed[0]);
    let mut recombined = reduced;
    for (cof_line, gen) in printed[1..].iter().zip(field_equations(&field, 2)) {
        let text = cof_line.split_once(": ").expect("cofactor line").1;
        recombined = &recombined + &(&parse(text) * &gen);
    }
    assert_eq!(recombined, parse(input));
}

#[test]
fn vanish_verdicts_and_witness() {
    let out = run(&["vanish", "--q", "2", "--n", "1", "x1^2 + x1"]);
    assert_eq!(exit_code(&out), 0);
    assert_eq!(lines(&out), ["vanishes: true"]);

    let out = run(&["vanish", "--q", "2", "--n", "1", "x1"]);
    assert_eq!(exit_code(&out), 0);
    assert_eq!(lines(&out), ["vanishes: false", "witness: (1)"]);

    let out = run(&[
        "vanish",
        "--q",
        "2",
        "--n",
        "1",
        "--projective",
        "x0^2*x1 + x0*x1^2",
    ]);
    assert_eq!(exit_code(&out), 0);
    assert_eq!(lines(&out), ["vanishes: true"]);
}

#[test]
fn points_lists_zeros_and_count() {
    let out = run(&["points", "--q", "2", "--n", "2", "x1*x2 + 1"]);
    assert_eq!(exit_code(&out), 0);
    assert_eq!(lines(&out), ["(1,1)", "count: 1"]);

    let out = run(&["points", "--q", "2", "--n", "1", "--projective"]);
    assert_eq!(exit_code(&out), 0);
    assert_eq!(lines(&out), ["[1:0]", "[1:1]", "[0:1]", "count: 3"]);
}

#[test]
fn member_verdicts() {
    let out = run(&[
        "member", "--q", "2", "--n", "2", "--ideal", "x1 + x2", "x1*x2 + x1",
    ]);
    assert_eq!(exit_code(&out), 0);
    assert_eq!(lines(&out), ["member: true"]);

    let out = run(&["member", "--q", "2", "--n", "2", "--ideal", "x1 + x2", "x1"]);
    assert_eq!(exit_code(&out), 0);
    assert_eq!(lines(&out), ["member: false"]);
}

#[test]
fn bounds_reports_the_chain() {
    let out = run(&["bounds", "--q", "3", "--n", "2", "x1 - x2"]);
    assert_eq!(exit_code(&out), 0);
    assert_eq!(
        lines(&out),
        [
            "exact: 3",
            "footprint bound: 3",
            "degree bound: 3",
            "degree bound clamped: 3",
        ]
    );
}

#[test]
fn gb_prints_basis_and_footprint() {
    let out = run(&[
        "gb", "--q", "2", "--n", "2", "x1*x2 + 1", "x1^2 + x1", "x2^2 + x2",
    ]);
    assert_eq!(exit_code(&out), 0);
    assert_eq!(lines(&out), ["x2 + 1", "x1 + 1", "footprint: 1"]);

    let out = run(&["gb", "--q", "3", "--n", "2", "x1^2"]);
    assert_eq!(exit_code(&out), 0);
    assert_eq!(lines(&out), ["x1^2", "footprint: infinite"]);
}

#[test]
fn json_schema_and_round_trip() {
    let out = run(&["reduce", "--q", "4", "--n", "2", "--json", "(t+1)x1^5 + t"]);
    assert_eq!(exit_code(&out), 0);
    let payload: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(payload["command"], "reduce");
    assert_eq!(payload["field"]["p"], 2);
    assert_eq!(payload["field"]["e"], 2);
    assert_eq!(payload["field"]["modulus"], "t^2+t+1");
    assert!(payload["witness"].is_null());

    let field = FieldSpec::from_order(4).unwrap();
    let parse = |text: &str| parse_polynomial(text, &field, 2, VarStyle::Affine).unwrap();
    let reparsed = parse(payload["result"].as_str().unwrap());
    assert_eq!(reparsed, parse("(t+1)*x1^2 + t"));

    let out = run(&["vanish", "--q", "2", "--n", "2", "--json", "x1"]);
    let payload: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(payload["result"], false);
    assert_eq!(payload["witness"], serde_json::json!(["1", "0"]));

    let out = run(&["bounds", "--q", "3", "--n", "2", "--json", "x1 - x2"]);
    let payload: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(payload["result"]["exact"], 3);
    assert_eq!(payload["result"]["degree_bound"]["space"], 9);
}

#[test]
fn field_order_shorthand_matches_the_integer_form() {
    let shorthand = run(&["vanish", "--q", "2^2", "--n", "1", "x1^4 + x1"]);
    let integer = run(&["vanish", "--q", "4", "--n", "1", "x1^4 + x1"]);
    assert_eq!(exit_code(&shorthand), 0);
    assert_eq!(shorthand.stdout, integer.stdout);
    assert_eq!(lines(&shorthand), ["vanishes: true"]);
}

#[test]
fn identical_invocations_give_identical_bytes() {
    let args = ["gb", "--q", "3", "--n", "2", "x1^2 + x2", "x1*x2 + 1"];
    let first = run(&args);
    let second = run(&args);
    assert_eq!(exit_code(&first), 0);
    assert_eq!(first.stdout, second.stdout);
}

#[test]
fn exit_codes_follow_the_contract() {
    let out = run(&["vanish", "--q", "2", "--n", "1", "y1"]);
    assert_eq!(exit_code(&out), 2);
    assert!(String::from_utf8_lossy(&out.stderr).starts_with("error:"));

    let out = run(&["vanish", "--q", "6", "--n", "1", "x1"]);
    assert_eq!(exit_code(&out), 2);

    let out = run(&["reduce", "--q", "2", "--n", "1", "--projective", "x0 + 1"]);
    assert_eq!(exit_code(&out), 2);

    let out = run(&[
        "member", "--q", "2", "--n", "1", "--projective", "--ideal", "x0", "x1",
    ]);
    assert_eq!(exit_code(&out), 2);

    let out = run(&["reduce", "--q", "4", "--modulus", "t^2+1", "--n", "1", "x1"]);
    assert_eq!(exit_code(&out), 2);

    let out = run(&["vanish", "--q", "2", "--n", "1", "--order", "foo", "x1"]);
    assert_eq!(exit_code(&out), 2);

    let out = run(&["points", "--q", "1021", "--n", "3"]);
    assert_eq!(exit_code(&out), 4);
}
