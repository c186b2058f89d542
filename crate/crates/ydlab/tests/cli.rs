use std::path::Path;
use std::process::{Command, Output};

use ydlab::cli::dispatch;
use ydlab::report::VerificationReport;
use ydlab::workspace::{catalog_manifest, to_json_pretty};
use ydlab::ydcat::YDObjectFile;

fn ydlab(dir: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ydlab"))
        .args(args)
        .current_dir(dir)
        .env_remove("YDLAB_WORKSPACE")
        .output()
        .expect("run ydlab")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn argv(args: &[&str]) -> Vec<String> {
    std::iter::once("ydlab").chain(args.iter().copied()).map(String::from).collect()
}

#[test]
fn verify_bimonad_sweedler_passes() {
    let dir = tempfile::tempdir().unwrap();
    let out = ydlab(dir.path(), &["verify-bimonad", "sweedler"]);
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));
    assert!(stdout(&out).starts_with("bimonad sweedler: PASS"));
}

#[test]
fn regular_object_fails_twisted_yd_at_wrong_grading() {
    let dir = tempfile::tempdir().unwrap();
    let out = ydlab(dir.path(), &["--json", "verify-yd", "--object", "regular", "--alpha", "id", "--beta", "phi_neg1"]);
    assert_eq!(out.status.code(), Some(1));
    let r: VerificationReport = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(r.failed_labels(), vec!["twisted-YD"]);
    let cx = r.check("twisted-YD").unwrap().counterexample.as_ref().unwrap();
    assert_eq!(cx.coordinate.len(), 2);
}

#[test]
fn iso_writes_the_trivially_graded_object() {
    let dir = tempfile::tempdir().unwrap();
    let out = ydlab(dir.path(), &["iso", "--pair", "eps_g", "--object", "antiYD", "--direction", "forward"]);
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));
    let text = std::fs::read_to_string(dir.path().join("antiYD.forward.json")).unwrap();
    let f: YDObjectFile = serde_json::from_str(&text).unwrap();
    assert_eq!((f.alpha.as_str(), f.beta.as_str(), f.xdim), ("id", "id", 1));
    assert_eq!((f.source.as_str(), f.target.as_str()), ("sweedler", "sweedler"));
}

#[test]
fn written_objects_load_back() {
    let dir = tempfile::tempdir().unwrap();
    let out = ydlab(dir.path(), &["compose", "--left", "regular", "--right", "antiYD", "--output", "ra.json"]);
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));
    let mut m = catalog_manifest("sweedler").unwrap();
    let obj: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(dir.path().join("ra.json")).unwrap()).unwrap();
    let mut entry = obj.as_object().unwrap().clone();
    entry.insert("name".into(), "ra".into());
    let mut manifest = serde_json::to_value(&m).unwrap();
    manifest["objects"].as_array_mut().unwrap().push(serde_json::Value::Object(entry));
    m = serde_json::from_value(manifest).unwrap();
    std::fs::write(dir.path().join("ydlab.json"), to_json_pretty(&m).unwrap()).unwrap();
    // The composite sits at (φ₋₁, id), so it is YD and classifies there.
    let out = ydlab(dir.path(), &["--json", "classify", "--object", "ra"]);
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));
    let r: VerificationReport = serde_json::from_slice(&out.stdout).unwrap();
    let hits = r.data.unwrap()["gradings"].clone();
    assert!(hits.as_array().unwrap().contains(&serde_json::json!(["phi_neg1", "id"])), "{hits}");
}

#[test]
fn every_subcommand_runs_on_bundled_data() {
    let dir = tempfile::tempdir().unwrap();
    let cases: &[(&[&str], i32)] = &[
        (&["verify-aut", "sweedler", "phi_half"], 0),
        (&["verify-aut", "sweedler", "--family"], 0),
        (&["group-axioms", "s3_chain", "--sequential"], 0),
        (&["classify", "--object", "antiYD"], 0),
        (&["twist", "--object", "regular", "--mode", "target", "--aut", "phi_neg1"], 0),
        (&["phi-laws", "--object", "adjoint", "--with", "sign"], 0),
        (&["involution-check", "--pair", "eps_g", "--helpers"], 0),
        (&["involution-check", "--pair", "eps_eta_neg1"], 0),
        (&["iso", "--pair", "eps_g", "--object", "regular", "--direction", "backward"], 0),
        (&["tau-build", "--pair", "eps_g", "--output", "tau.json"], 0),
        (&["--workspace", "cyclic2", "verify-yd", "--object", "minus_g"], 0),
    ];
    for (args, code) in cases {
        let out = ydlab(dir.path(), args);
        assert_eq!(out.status.code(), Some(*code), "{args:?}: {}{}", stdout(&out), String::from_utf8_lossy(&out.stderr));
    }
    assert!(dir.path().join("regular.backward.json").exists());
    assert!(dir.path().join("tau.json").exists());
}

#[test]
fn input_errors_exit_two() {
    let dir = tempfile::tempdir().unwrap();
    for args in [
        &["frobnicate"][..],
        &["verify-yd", "--object", "nope"],
        &["verify-bimonad", "sweedler", "--workspace", "missing.json"],
        &["verify-aut", "sweedler", "phi_7"],
        &["iso", "--pair", "eps_g", "--object", "regular", "--direction", "forward"],
    ] {
        let out = ydlab(dir.path(), args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(!out.stderr.is_empty());
    }
    assert_eq!(ydlab(dir.path(), &["--help"]).status.code(), Some(0));
}

#[test]
fn environment_selects_the_workspace() {
    let args = argv(&["verify-bimonad", "sweedler"]);
    assert_eq!(dispatch(&args, Some("cyclic2".into())).code, 2);
    assert_eq!(dispatch(&args, Some("sweedler".into())).code, 0);
    // An explicit flag wins over the environment.
    let flagged = argv(&["--workspace", "sweedler", "verify-bimonad", "sweedler"]);
    assert_eq!(dispatch(&flagged, Some("cyclic2".into())).code, 0);
}

#[test]
fn json_reports_are_deterministic_up_to_timing() {
    let args = argv(&["--json", "--seed", "3", "phi-laws", "--object", "regular", "--with", "antiYD"]);
    let strip = |s: &str| {
        let mut r: VerificationReport = serde_json::from_str(s).unwrap();
        r.elapsed_ms = 0;
        r
    };
    let (a, b) = (dispatch(&args, None), dispatch(&args, None));
    assert_eq!(a.code, 0, "{}", a.stdout);
    assert_eq!(strip(&a.stdout), strip(&b.stdout));
    assert_eq!(a.code, strip(&a.stdout).exit_code());
}
