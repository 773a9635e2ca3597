mod common;

use common::{cli_goldens, run_bin};
use toric_brauer::cli::parse_structured;
use toric_brauer::cli::CliError;
use toric_brauer::fan::{to_json, GENERATORS};
use toric_brauer::toric::{build_cech_with, cohomological_brauer, ToricError};
use toric_brauer::IntMatrix;

#[test]
fn golden_reports_from_file_and_pipe() {
    let dir = std::env::temp_dir().join(format!("toric-brauer-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    for (gen, text, structured) in cli_goldens() {
        let mut args = vec!["gen"];
        args.extend_from_slice(gen);
        let fan = run_bin(&args, "");
        assert_eq!(fan.code, 0);

        let path = dir.join(format!("{}.fan.json", gen[0]));
        std::fs::write(&path, &fan.stdout).unwrap();
        let path = path.to_str().unwrap();
        let r = run_bin(&["compute", path], "");
        assert_eq!((r.code, r.stdout.as_str()), (0, text), "{gen:?}");

        let r = run_bin(&["compute", "-", "--format", "structured"], &fan.stdout);
        assert_eq!((r.code, r.stdout.as_str()), (0, structured), "{gen:?}");
    }
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn structured_output_round_trips() {
    for (name, fan) in common::golden_fans() {
        let r = run_bin(&["compute", "-", "--format", "structured"], &to_json(&fan));
        assert_eq!(r.code, 0, "{name}");
        assert_eq!(
            parse_structured(&r.stdout).unwrap(),
            cohomological_brauer(&fan).unwrap(),
            "{name}"
        );
    }
}

#[test]
fn every_generator_validates() {
    let samples: &[(&str, &[&str])] = &[
        ("projective", &["3"]),
        ("torus", &["2"]),
        ("affine_plane", &[]),
        ("quotient_cone", &["2", "5"]),
        ("hirzebruch", &["2"]),
        ("weighted", &["1", "2", "3"]),
        ("weighted", &["2", "3", "5"]),
        ("product-of-two-projective-lines", &[]),
    ];
    for (name, _) in GENERATORS {
        assert!(
            samples.iter().any(|(n, _)| n == name),
            "no sample for generator {name}"
        );
    }
    for (name, params) in samples {
        let mut args = vec!["gen", name];
        args.extend_from_slice(params);
        let fan = run_bin(&args, "");
        assert_eq!(fan.code, 0, "{name}: {}", fan.stderr);
        let v = run_bin(&["validate", "-"], &fan.stdout);
        assert_eq!(v.code, 0, "{name}: {}", v.stdout);
        assert!(
            v.stdout.ends_with("valid: no violations\n"),
            "{name}: {}",
            v.stdout
        );
    }
}

#[test]
fn usage_and_syntax_errors_exit_1() {
    let r = run_bin(&["compute", "-"], "{\"rank\": 2,");
    assert_eq!(r.code, 1);
    assert!(r.stderr.contains("syntax"), "{}", r.stderr);
    assert_eq!(run_bin(&["compute", "/nonexistent/fan.json"], "").code, 1);
    assert_eq!(run_bin(&["frobnicate"], "").code, 1);
    assert_eq!(run_bin(&["compute", "-", "--format", "yaml"], "").code, 1);
    assert_eq!(run_bin(&["gen", "projective", "x"], "").code, 1);
}

#[test]
fn invalid_fans_exit_2() {
    let bad = [
        r#"{"rank": 2, "rays": [[2, 0]], "max_cones": [[0]]}"#,
        r#"{"rank": 2, "rays": [[1, 0]], "max_cones": [[0, 1]]}"#,
        r#"{"rank": 2, "rays": [[1, 0], [0, 1]], "max_cones": [[0, 1], [0]]}"#,
        r#"{"rank": 2, "rays": [[1, 0, 0]], "max_cones": [[0]]}"#,
        r#"{"rank": 2, "rays": [[1, 0]], "max_cones": []}"#,
    ];
    for doc in bad {
        let r = run_bin(&["compute", "-"], doc);
        assert_eq!(r.code, 2, "{doc}: {}", r.stderr);
        let v = run_bin(&["validate", "-"], doc);
        assert_eq!(v.code, 2, "{doc}: {}", v.stdout);
        assert!(v.stdout.contains("violation"), "{doc}: {}", v.stdout);
    }
}

#[test]
fn normalize_flag_accepts_scaled_rays() {
    let doc = r#"{"rank": 2, "rays": [[2, 0], [0, 3]], "max_cones": [[0, 1]]}"#;
    let r = run_bin(
        &["compute", "-", "--normalize-rays", "--groups", "cl,pic"],
        doc,
    );
    assert_eq!((r.code, r.stdout.as_str()), (0, "Cl = 0\nPic = 0\n"));
}

#[test]
fn consistency_failures_map_to_exit_3() {
    // A fan file cannot produce nonzero compositions, so inject a basis that
    // is not a basis of the right lattice.
    let fan = toric_brauer::Fan::from_i64(
        3,
        &[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]],
        &[&[0, 1], &[1, 2]],
    )
    .unwrap();
    let mut rebase = |c: &toric_brauer::Cone, b: IntMatrix| {
        if c.len() == 1 {
            IntMatrix::from_rows(vec![vec![1], vec![1], vec![1]])
        } else {
            b
        }
    };
    let err = build_cech_with(&fan, &mut rebase).unwrap_err();
    assert!(matches!(err, ToricError::InternalInconsistency(_)));
    assert_eq!(CliError::from(err).exit_code(), 3);
}
