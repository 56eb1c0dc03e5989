//! End-to-end tests of the binary: spawn it exactly as a user would and
//! assert on exit codes and report contents.

use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn corpus(name: &str) -> String {
    format!("{}/../../corpus/{name}", env!("CARGO_MANIFEST_DIR"))
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_comodec"))
        .args(args)
        .output()
        .expect("binary spawns")
}

fn run_with_env(args: &[&str], key: &str, value: &str) -> Output {
    Command::new(env!("CARGO_BIN_EXE_comodec"))
        .args(args)
        .env(key, value)
        .output()
        .expect("binary spawns")
}

fn stdout_json(output: &Output) -> Value {
    serde_json::from_slice(&output.stdout).expect("stdout is a JSON report")
}

fn stderr_text(output: &Output) -> String {
    String::from_utf8_lossy(&output.stderr).into_owned()
}

fn exit_code(output: &Output) -> i32 {
    output.status.code().expect("not killed by a signal")
}

fn temp_path(name: &str) -> PathBuf {
    let mut p = std::env::temp_dir();
    p.push(format!("comodec-test-{}-{name}", std::process::id()));
    p
}

#[test]
fn decompose_reports_one_summand_for_the_arrow() {
    let out = run(&["decompose", &corpus("path_regular.json")]);
    assert_eq!(exit_code(&out), 0, "stderr: {}", stderr_text(&out));
    let report = stdout_json(&out);
    let summands = report["comodule"]["summands"].as_array().expect("summands");
    assert_eq!(summands.len(), 1);
    assert_eq!(summands[0]["module_summand"]["dim"], 3);
    assert_eq!(summands[0]["coalgebra_summand"]["dim"], 3);
    assert_eq!(report["coalgebra"]["graph"]["edges"][0], Value::from(vec![0, 1]));
}

#[test]
fn a_zero_dimensional_comodule_reports_no_summands() {
    let doc = r#"{
      "field": { "type": "rationals" },
      "coalgebra": {
        "dim": 3,
        "delta": [
          { "source": 0, "left": 0, "right": 0, "coeff": "1" },
          { "source": 1, "left": 1, "right": 1, "coeff": "1" },
          { "source": 2, "left": 0, "right": 2, "coeff": "1" },
          { "source": 2, "left": 2, "right": 1, "coeff": "1" }
        ],
        "counit": ["1", "1", "0"]
      },
      "comodule": { "dim": 0, "rho": [] }
    }"#;
    let path = temp_path("empty-comodule.json");
    std::fs::write(&path, doc).expect("temp document written");

    let out = run(&["decompose", path.to_str().expect("utf-8 temp path")]);
    assert_eq!(exit_code(&out), 0, "stderr: {}", stderr_text(&out));
    let report = stdout_json(&out);
    let comodule = &report["comodule"];
    assert_eq!(comodule["dim"], 0);
    assert_eq!(comodule["summands"].as_array().expect("summands").len(), 0);
    // The coalgebra still splits; its lone class carries the zero module.
    assert_eq!(report["coalgebra"]["summands"].as_array().expect("parts").len(), 1);
    assert_eq!(comodule["zero_classes"], Value::from(vec![0]));

    std::fs::remove_file(&path).ok();
}

#[test]
fn reports_are_byte_identical_across_runs() {
    for command in ["decompose", "classify", "verify", "socle"] {
        let first = run(&[command, &corpus("path_regular.json")]);
        let second = run(&[command, &corpus("path_regular.json")]);
        assert_eq!(exit_code(&first), 0);
        assert_eq!(first.stdout, second.stdout, "{command} output drifted");
    }
}

#[test]
fn wedges_of_the_vertex_lines_are_order_sensitive() {
    let forward = run(&["wedge", &corpus("path_regular.json"), "kx", "ky"]);
    assert_eq!(exit_code(&forward), 0);
    assert_eq!(stdout_json(&forward)["wedge"]["dim"], 3);

    let backward = run(&["wedge", &corpus("path_regular.json"), "ky", "kx"]);
    assert_eq!(stdout_json(&backward)["wedge"]["dim"], 2);

    // Over the regular comodule the module-side wedge agrees.
    let module = run(&["wedge", "--module", &corpus("path_regular.json"), "kx", "ky"]);
    assert_eq!(exit_code(&module), 0, "stderr: {}", stderr_text(&module));
    let report = stdout_json(&module);
    assert_eq!(report["ambient"], "module");
    assert_eq!(report["wedge"]["dim"], 3);
}

#[test]
fn the_verified_wedge_mode_is_accepted() {
    let out = run(&["wedge", "--verify-wedge", &corpus("path_regular.json"), "ky", "kx"]);
    assert_eq!(exit_code(&out), 0);
    assert_eq!(stdout_json(&out)["wedge"]["dim"], 2);
}

#[test]
fn closure_of_a_non_closed_subspace_reaches_the_whole_module() {
    let out = run(&["closure", &corpus("path_regular.json"), "xa"]);
    assert_eq!(exit_code(&out), 0);
    let report = stdout_json(&out);
    assert_eq!(report["input_dim"], 2);
    assert_eq!(report["input_closed"], false);
    assert_eq!(report["closure"]["dim"], 3);
    assert_eq!(report["input_weak_closed"], "false");
}

#[test]
fn closure_of_a_vertex_line_is_itself() {
    let out = run(&["closure", &corpus("path_regular.json"), "kx"]);
    let report = stdout_json(&out);
    assert_eq!(report["input_closed"], true);
    assert_eq!(report["closure"]["dim"], 1);
    assert_eq!(report["input_weak_closed"], "true");
}

#[test]
fn components_over_the_vertex_lines() {
    let out = run(&["component", &corpus("path_regular.json"), "kx"]);
    assert_eq!(exit_code(&out), 0);
    let report = stdout_json(&out);
    assert_eq!(report["component"]["dim"], 1);
    assert_eq!(report["component"]["basis"][0], Value::from(vec!["1", "0", "0"]));

    let vertex_span = run(&["component", &corpus("path_regular.json"), "vertex_span"]);
    assert_eq!(stdout_json(&vertex_span)["component"]["dim"], 2);
}

#[test]
fn the_socle_report_carries_the_filtration() {
    let out = run(&["socle", &corpus("path_regular.json")]);
    let report = stdout_json(&out);
    assert_eq!(report["socle"]["dim"], 2);
    assert_eq!(report["filtration_dims"], Value::from(vec![2, 3]));
    assert_eq!(report["cosemisimple"], false);
}

#[test]
fn coradical_and_simples_of_the_arrow() {
    let coradical = run(&["coradical", &corpus("path_regular.json")]);
    let report = stdout_json(&coradical);
    assert_eq!(report["coradical"]["dim"], 2);
    assert_eq!(report["filtration_dims"], Value::from(vec![2, 3]));

    let simples = run(&["simples", &corpus("path_regular.json")]);
    assert_eq!(stdout_json(&simples)["count"], 2);
}

#[test]
fn classification_flags_of_the_running_example() {
    let out = run(&["classify", &corpus("path_regular.json")]);
    let flags = &stdout_json(&out)["flags"];
    assert_eq!(flags["full"], true);
    assert_eq!(flags["component_faithful"], true);
    assert_eq!(flags["pi_commutative_C"], false);
    assert_eq!(flags["pi_commutative_M"], false);
    assert_eq!(flags["w_relational_hereditary"], true);
    assert_eq!(flags["indecomposable_C"], true);
    assert_eq!(flags["indecomposable_M"], true);
    assert_eq!(flags["relative_irreducible_M"], false);
    assert_eq!(flags["cosemisimple"], false);
}

#[test]
fn the_split_socle_instance_defeats_heredity() {
    let out = run(&["classify", &corpus("split_socle.json")]);
    let report = stdout_json(&out);
    let flags = &report["flags"];
    assert_eq!(flags["full"], false);
    assert_eq!(flags["w_relational_hereditary"], false);
    assert_eq!(flags["indecomposable_C"], true);
    assert_eq!(flags["indecomposable_M"], false);
    assert_eq!(flags["pi_commutative_M"], true);
    assert_eq!(flags["cosemisimple"], true);
    assert_eq!(report["comodule_link_classes"], 2);
}

#[test]
fn verify_passes_on_the_running_example() {
    let out = run(&["verify", &corpus("path_regular.json")]);
    assert_eq!(exit_code(&out), 0, "stderr: {}", stderr_text(&out));
    let report = stdout_json(&out);
    assert_eq!(report["failed"], 0);
    assert!(report["passed"].as_u64().expect("count") >= 30);
}

#[test]
fn broken_laws_exit_two_with_a_witness() {
    let out = run(&["check", &corpus("broken_coassociativity.json")]);
    assert_eq!(exit_code(&out), 2);
    let report = stdout_json(&out);
    assert_eq!(report["ok"], false);
    let violations = report["coalgebra_violations"].as_array().expect("violations");
    assert!(violations
        .iter()
        .any(|v| v.as_str().expect("string").contains("coassociativity")));
    assert!(stderr_text(&out).contains("coassociativity"));
}

#[test]
fn check_passes_on_a_valid_document() {
    let out = run(&["check", &corpus("path_regular.json")]);
    assert_eq!(exit_code(&out), 0);
    assert_eq!(stdout_json(&out)["ok"], true);
}

#[test]
fn unreduced_scalars_are_rejected() {
    let out = run(&["check", &corpus("unreduced_scalar.json")]);
    assert_eq!(exit_code(&out), 2);
    let err = stderr_text(&out);
    assert!(err.contains("lowest terms"), "stderr: {err}");
    assert!(err.contains("coalgebra.delta[0].coeff"), "stderr: {err}");
}

#[test]
fn small_prime_fields_are_refused_for_simples() {
    let out = run(&["simples", &corpus("arrow_f2.json")]);
    assert_eq!(exit_code(&out), 1);
    assert!(stderr_text(&out).contains("unsupported"));
}

#[test]
fn non_split_semisimple_duals_are_refused_but_the_coradical_works() {
    let simples = run(&["simples", &corpus("nonsplit_rationals.json")]);
    assert_eq!(exit_code(&simples), 1);

    let coradical = run(&["coradical", &corpus("nonsplit_rationals.json")]);
    assert_eq!(exit_code(&coradical), 0);
    assert_eq!(stdout_json(&coradical)["coradical"]["dim"], 2);
}

#[test]
fn commands_needing_a_comodule_reject_coalgebra_only_documents() {
    for command in ["classify", "socle", "verify"] {
        let out = run(&[command, &corpus("nonsplit_rationals.json")]);
        assert_eq!(exit_code(&out), 2, "{command} should be an input error");
        assert!(stderr_text(&out).contains("no comodule block"));
    }
}

#[test]
fn decompose_works_without_a_comodule_block() {
    let out = run(&["decompose", &corpus("nonsplit_rationals.json")]);
    // The non-split dual refuses simple-subcoalgebra analysis, which the
    // link graph needs.
    assert_eq!(exit_code(&out), 1);

    let f101 = run(&["decompose", &corpus("arrow_f2.json")]);
    assert_eq!(exit_code(&f101), 1, "p = 2 is below the dimension bound");
}

#[test]
fn prime_field_reports_match_the_rational_ones() {
    let out = run(&["decompose", &corpus("path_f101.json")]);
    assert_eq!(exit_code(&out), 0);
    let report = stdout_json(&out);
    let summands = report["comodule"]["summands"].as_array().expect("summands");
    assert_eq!(summands.len(), 1);
    assert_eq!(summands[0]["module_summand"]["dim"], 3);

    let wedge = run(&["wedge", &corpus("path_f101.json"), "kx", "ky"]);
    assert_eq!(stdout_json(&wedge)["wedge"]["dim"], 3);
}

#[test]
fn generated_documents_round_trip_and_analyze() {
    let path = temp_path("grouplike.json");
    let path_str = path.to_str().expect("utf-8 path");
    let gen = run(&["gen", "grouplike", "3", "--regular", "--output", path_str]);
    assert_eq!(exit_code(&gen), 0, "stderr: {}", stderr_text(&gen));

    let again = run(&["gen", "grouplike", "3", "--regular"]);
    let bytes = std::fs::read(&path).expect("output file exists");
    assert_eq!(bytes, again.stdout, "gen is deterministic");

    let decompose = run(&["decompose", path_str]);
    assert_eq!(exit_code(&decompose), 0);
    let report = stdout_json(&decompose);
    assert_eq!(report["comodule"]["summands"].as_array().expect("summands").len(), 3);

    std::fs::remove_file(&path).ok();
}

#[test]
fn twisted_generation_preserves_the_classification() {
    let path = temp_path("twisted.json");
    let path_str = path.to_str().expect("utf-8 path");
    let gen = run(&[
        "gen", "path", "--vertices", "2", "--arrow", "0:1", "--max-len", "1", "--regular",
        "--twist", "--seed", "9", "--output", path_str,
    ]);
    assert_eq!(exit_code(&gen), 0, "stderr: {}", stderr_text(&gen));

    let classify = run(&["classify", path_str]);
    assert_eq!(exit_code(&classify), 0);
    let report = stdout_json(&classify);
    assert_eq!(report["flags"]["full"], true);
    assert_eq!(report["flags"]["indecomposable_M"], true);
    assert_eq!(report["socle_dim"], 2);

    std::fs::remove_file(&path).ok();
}

#[test]
fn the_standard_matrix_comodule_generates_with_all_flags_set() {
    let out = run(&["gen", "matrix", "2", "--standard"]);
    assert_eq!(exit_code(&out), 0);
    let path = temp_path("matrix.json");
    std::fs::write(&path, &out.stdout).expect("write temp doc");
    let classify = run(&["classify", path.to_str().expect("utf-8 path")]);
    let flags = &stdout_json(&classify)["flags"];
    for key in [
        "full",
        "component_faithful",
        "pi_commutative_C",
        "pi_commutative_M",
        "w_relational_hereditary",
        "indecomposable_C",
        "indecomposable_M",
        "relative_irreducible_M",
        "cosemisimple",
    ] {
        assert_eq!(flags[key], true, "flag {key}");
    }
    std::fs::remove_file(&path).ok();
}

#[test]
fn malformed_arrows_and_bad_env_values_are_input_errors() {
    let arrow = run(&["gen", "path", "--vertices", "2", "--arrow", "0-1"]);
    assert_eq!(exit_code(&arrow), 2);
    assert!(stderr_text(&arrow).contains("FROM:TO"));

    let env = run_with_env(
        &["classify", &corpus("path_regular.json")],
        "COMODEC_WEAK_SAMPLES",
        "plenty",
    );
    assert_eq!(exit_code(&env), 2);
    assert!(stderr_text(&env).contains("COMODEC_WEAK_SAMPLES"));

    let valid = run_with_env(
        &["classify", &corpus("path_regular.json")],
        "COMODEC_WEAK_SAMPLES",
        "8",
    );
    assert_eq!(exit_code(&valid), 0);
}

#[test]
fn unknown_subspace_names_list_the_known_ones() {
    let out = run(&["wedge", &corpus("path_regular.json"), "kx", "nope"]);
    assert_eq!(exit_code(&out), 2);
    let err = stderr_text(&out);
    assert!(err.contains("nope") && err.contains("kx"), "stderr: {err}");
}

#[test]
fn the_help_text_documents_the_sample_override() {
    let out = run(&["--help"]);
    assert_eq!(exit_code(&out), 0);
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.contains("COMODEC_WEAK_SAMPLES"));
    assert!(text.contains("byte-identical"));
}
