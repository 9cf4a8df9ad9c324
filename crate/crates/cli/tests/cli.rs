use std::process::{Command, Output};

use nellipse::raster::ContourSet;
use nellipse_cli::cli::parse_size;

fn nellipse(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_nellipse"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn equation_for_fig2() {
    let out = nellipse(&["equation", "--preset", "fig2"]);
    assert!(out.status.success());
    let text = stdout(&out);
    let mut lines = text.lines();
    assert!(lines.next().unwrap().ends_with("+ 27720x + 3600y - 14175"));
    assert_eq!(lines.next(), Some("degree 8"));
}

#[test]
fn equation_in_classic_order() {
    let out = nellipse(&["equation", "--preset", "fig3-lemniscate", "--style", "classic"]);
    assert_eq!(
        stdout(&out).lines().next(),
        Some("3x^4 + 3y^4 + 6x^2y^2 - 12x^2 + 4y^2")
    );
}

#[test]
fn equation_for_scene_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("circle.json");
    std::fs::write(&path, r#"{"foci":[{"x":"0","y":"0"}],"s":"1"}"#).unwrap();
    let out = nellipse(&["equation", "--scene", path.to_str().unwrap()]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.starts_with("x^2 + y^2 - 1\ndegree 2\n"), "{text}");
}

#[test]
fn analyze_right_almost_circle() {
    let out = nellipse(&[
        "analyze-circle",
        "--preset",
        "fig4-almost-circles",
        "--side",
        "right",
        "--point",
        "9/5,8/5",
    ]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("center (4/3, 0)"), "{text}");
    assert!(text.contains("radius 5/3"), "{text}");
    let max: f64 = text
        .lines()
        .find_map(|l| l.strip_prefix("max deviation "))
        .and_then(|rest| rest.split_whitespace().next())
        .unwrap()
        .parse()
        .unwrap();
    assert!((0.027730..=0.03429).contains(&max), "{max}");
    assert!(text.contains("deviation at (9/5,8/5) 0.027730"), "{text}");
}

#[test]
fn analyze_left_side_mirrors_right() {
    let out = nellipse(&["analyze-circle", "--preset", "fig4-almost-circles", "--side", "left"]);
    let text = stdout(&out);
    assert!(text.contains("center (-4/3, 0)"), "{text}");
    assert!(text.contains("signs (+,+,-)"), "{text}");
}

#[test]
fn analyze_with_explicit_points() {
    let out = nellipse(&[
        "analyze-circle",
        "--preset",
        "van-schooten",
        "--points",
        "-1,0;1,0;0,-1",
        "--samples",
        "1000",
    ]);
    // (0,-1) is off the circumcircle; the fitted circle is still reported
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    assert!(stdout(&out).contains("center (0, 0)"));
}

#[test]
fn van_schooten_report() {
    let out = nellipse(&["van-schooten", "--samples", "3000"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("uncovered 0"));
    assert_eq!(text.lines().filter(|l| l.starts_with("arc ")).count(), 3);
}

#[test]
fn verify_paper_passes() {
    let out = nellipse(&["verify-paper"]);
    let text = stdout(&out);
    assert!(out.status.success(), "{text}");
    assert!(!text.contains("FAIL"));
    assert!(text.lines().last().unwrap().ends_with("checks passed"));
}

#[test]
fn raster_subcommands_write_files() {
    let dir = tempfile::tempdir().unwrap();
    let ppm = dir.path().join("a.ppm");
    let json = dir.path().join("a.json");
    let p = ppm.to_str().unwrap();
    for sub in ["classify", "hue", "render"] {
        let out = nellipse(&[sub, "--preset", "fig4-almost-circles", "--size", "64x48", "--out", p]);
        assert!(out.status.success(), "{sub}");
        let bytes = std::fs::read(&ppm).unwrap();
        assert!(bytes.starts_with(b"P6\n64 48\n255\n"));
        assert_eq!(bytes.len(), 13 + 64 * 48 * 3);
    }
    let out = nellipse(&[
        "render",
        "--preset",
        "fig3-lemniscate",
        "--window",
        "-2,2,-2,2",
        "--json",
        "--out",
        json.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let set: ContourSet = serde_json::from_slice(&std::fs::read(&json).unwrap()).unwrap();
    assert!(!set.polylines.is_empty());
}

#[test]
fn classify_tolerance_widens_band() {
    let dir = tempfile::tempdir().unwrap();
    let count = |tol: &str| {
        let path = dir.path().join(format!("t{tol}.ppm"));
        let out = nellipse(&[
            "classify", "--preset", "fig5-dyncol", "--size", "96x96", "--tol", tol, "--out",
            path.to_str().unwrap(),
        ]);
        assert!(out.status.success());
        let bytes = std::fs::read(&path).unwrap();
        bytes[15..].chunks(3).filter(|px| *px != [255, 255, 255]).count()
    };
    assert!(count("4") > count("1"));
}

#[test]
fn errors_exit_nonzero() {
    let out = nellipse(&["equation", "--preset", "fig2", "--bogus"]);
    assert!(!out.status.success());
    assert!(!out.stderr.is_empty());

    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.json");
    std::fs::write(&path, r#"{"foci":[],"s":"1"}"#).unwrap();
    let out = nellipse(&["equation", "--scene", path.to_str().unwrap()]);
    assert!(!out.status.success());
    assert!(String::from_utf8_lossy(&out.stderr).contains("foci"));

    let out = nellipse(&["hue", "--preset", "fig2", "--size", "9000x9000", "--out", "/dev/null"]);
    assert!(!out.status.success());
    let out = nellipse(&["equation"]);
    assert!(!out.status.success());
}

#[test]
fn size_parsing() {
    assert_eq!(parse_size("512x512").unwrap(), (512, 512));
    assert_eq!(parse_size("64X32").unwrap(), (64, 32));
    assert!(parse_size("64").is_err());
    assert!(parse_size("ax3").is_err());
}
