use std::process::{Command, Output};

fn scatter(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_scatter")).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

#[test]
fn psi_exact_to_stdout() {
    let o = scatter(&[
        "psi_exact",
        "--gamma",
        "1",
        "--rho-range",
        "10",
        "--theta-range",
        "0:pi:3",
    ]);
    assert!(o.status.success(), "{}", stderr(&o));
    let text = stdout(&o);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "rho,theta,re_psi,im_psi,abs_psi");
    assert_eq!(lines.len(), 4);
    let abs: f64 = lines[1].split(',').nth(4).unwrap().parse().unwrap();
    assert!((abs - 0.108422).abs() < 1e-6);
}

#[test]
fn forward_angle_for_asymptotic_quantity_is_rejected() {
    let o = scatter(&["psi_asymptotic", "--theta-range", "0:1:5"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("theta = 0"));
}

#[test]
fn bad_ranges_are_rejected() {
    for args in [
        ["psi_exact", "--theta-range", "0:4:5"],
        ["psi_exact", "--theta-range", "1:0:5"],
        ["psi_exact", "--theta-range", "0:1:1"],
        ["psi_exact", "--rho-range", "a:b:c"],
    ] {
        let o = scatter(&args);
        assert_eq!(o.status.code(), Some(2), "{args:?}: {}", stderr(&o));
    }
}

#[test]
fn describe_known_and_unknown() {
    let o = scatter(&["describe", "psi_asymptotic"]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("rho s >> 1"));

    let o = scatter(&["describe", "bogus"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("field_map"));
}

#[test]
fn unknown_quantity_and_preset() {
    assert_eq!(scatter(&["bogus"]).status.code(), Some(2));
    let o = scatter(&["--preset", "fig9"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("fig1"));
}

#[test]
fn flags_override_preset() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("fig6.csv");
    let o = scatter(&[
        "--preset",
        "fig6",
        "--cesaro-n",
        "50",
        "--theta-range",
        "1:2:3",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert!(o.status.success(), "{}", stderr(&o));
    let text = std::fs::read_to_string(&path).unwrap();
    let rows: Vec<&str> = text.lines().skip(1).collect();
    assert_eq!(rows.len(), 3);
    assert!(rows.iter().all(|r| r.starts_with("50,")));
}

#[test]
fn thread_count_does_not_change_output() {
    let run = |threads: &str| {
        Command::new(env!("CARGO_BIN_EXE_scatter"))
            .args(["--preset", "fig4", "--rho-range", "10"])
            .env("SCATTER_THREADS", threads)
            .output()
            .unwrap()
    };
    let (a, b) = (run("1"), run("4"));
    assert!(a.status.success() && b.status.success());
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(run("zero").status.code(), Some(2));
}

#[test]
fn unwritable_output_path() {
    let o = scatter(&["psi_exact", "--out", "/nonexistent-dir/x.csv"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn classical_cross_section_requires_acknowledgement() {
    let base = [
        "cross_section",
        "--mass",
        "0.05",
        "--omega",
        "1",
        "--theta-range",
        "0.5:3:4",
    ];
    assert_eq!(scatter(&base).status.code(), Some(2));
    let mut args = base.to_vec();
    args.push("--acknowledge-classical-cross-section");
    assert!(scatter(&args).status.success());
}

#[test]
fn negative_gamma_is_accepted() {
    let o = scatter(&[
        "reduced_series",
        "--gamma",
        "-0.5",
        "--ell-max",
        "200",
        "--theta-range",
        "1,2",
    ]);
    assert!(o.status.success(), "{}", stderr(&o));
}
