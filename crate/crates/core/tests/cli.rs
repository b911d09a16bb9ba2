use std::process::{Command, Output};

fn hardylab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hardylab"))
        .args(args)
        .output()
        .unwrap()
}

fn stdout(args: &[&str]) -> String {
    let out = hardylab(args);
    assert_eq!(
        out.status.code(),
        Some(0),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

const SUBCOMMANDS: &[&str] = &[
    "classify",
    "winding",
    "valence",
    "profile",
    "factor",
    "fit",
    "commutant",
    "density",
    "wold",
    "fejer",
    "malmquist",
    "plot",
    "examples",
];

#[test]
fn cardioid_winding_at_origin() {
    assert_eq!(
        stdout(&["winding", "--symbol", "(z+0.5)^2", "--at", "0,0"]),
        "2\n"
    );
    assert_eq!(
        stdout(&["winding", "--example", "cardioid", "--at", "1.21,0"]),
        "1\n"
    );
}

#[test]
fn every_subcommand_has_help_with_defaults() {
    for sub in SUBCOMMANDS {
        let help = stdout(&[sub, "--help"]);
        assert!(help.contains("Usage:"), "{sub}");
        if *sub != "examples" {
            assert!(help.contains("--format"), "{sub}");
        }
    }
    assert!(stdout(&["classify", "--help"]).contains("[default: 24]"));
    assert!(stdout(&["density", "--help"]).contains("[default: 6]"));
}

#[test]
fn outputs_are_byte_identical() {
    for args in [
        &["classify", "--example", "cardioid", "--format", "json"][..],
        &[
            "profile",
            "--example",
            "zsquare-plus-z4",
            "--grid",
            "8",
            "--format",
            "json",
        ],
        &["commutant", "--example", "power:2", "--order", "6"],
        &[
            "plot",
            "--example",
            "cardioid",
            "--grid",
            "40",
            "--format",
            "svg",
        ],
    ] {
        assert_eq!(hardylab(args).stdout, hardylab(args).stdout, "{args:?}");
    }
}

#[test]
fn json_floats_carry_seventeen_digits() {
    let out = stdout(&[
        "fejer", "--symbol", "z+0.5", "--degree", "4", "--format", "json",
    ]);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert!(v.is_object());
    assert!(out.contains("0.50000000000000000"), "{out}");
}

#[test]
fn exit_codes() {
    assert_eq!(
        hardylab(&["winding", "--symbol", "z", "--at", "1,0"])
            .status
            .code(),
        Some(3)
    );
    assert_eq!(
        hardylab(&["winding", "--symbol", "z+", "--at", "0,0"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(hardylab(&["nonsense"]).status.code(), Some(2));
    assert_eq!(
        hardylab(&["winding", "--symbol", "z", "--at", "0,0", "--format", "svg"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn coeffs_file_round_trip() {
    let dir = std::env::temp_dir().join(format!("hardylab-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("cardioid.json");
    let path_str = path.to_str().unwrap();
    std::fs::write(
        &path,
        r#"{"label": "cardioid", "order": 2, "coeffs": [[0.25, 0.0], [1.0, 0.0], [1.0, 0.0]]}"#,
    )
    .unwrap();
    assert_eq!(
        stdout(&["winding", "--coeffs", path_str, "--at", "0,0"]),
        "2\n"
    );
    let svg = dir.join("plot.svg");
    stdout(&[
        "plot",
        "--coeffs",
        path_str,
        "--grid",
        "30",
        "--format",
        "svg",
        "--out",
        svg.to_str().unwrap(),
    ]);
    assert!(std::fs::read_to_string(&svg).unwrap().starts_with("<svg"));
    std::fs::remove_dir_all(&dir).unwrap();
}
