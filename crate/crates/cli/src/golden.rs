//! Reference checks behind `nellipse verify-paper`.

use std::time::Instant;

use nellipse::catalog::{ALMOST_CIRCLES, FIG2_CURVE, LEMNISCATE, TWO_CIRCLES};
use nellipse::locus::{classify_point, color_of, signed_sum, XY};
use nellipse::poly::parse_rational_poly;
use nellipse::presets::preset;
use nellipse::raster::{circle_through, deviation_at, max_deviation, van_schooten_check};
use nellipse::{closure_poly, elimination_oracle, MultiPoly, Point, QuadraticNumber, Rational, Scene, SignVector, TermOrder};

#[derive(Debug, Clone)]
pub struct Check {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

fn q(n: i64, d: i64) -> Rational {
    Rational::new(n, d).expect("nonzero denominator")
}

fn scene_of(name: &str) -> Scene {
    preset(name).expect("shipped preset").scene
}

fn closure_matches(name: &'static str, scene: &Scene, expected: &str) -> Check {
    let start = Instant::now();
    let expected = parse_rational_poly(&XY, expected).expect("catalog parses");
    match closure_poly(scene) {
        Ok(r) => Check {
            name,
            passed: *r.closure.poly() == expected,
            detail: format!(
                "degree {}, {} terms, {:.2?}",
                r.total_degree,
                r.closure.num_terms(),
                start.elapsed()
            ),
        },
        Err(e) => Check {
            name,
            passed: false,
            detail: e.to_string(),
        },
    }
}

/// Exact zeros of the almost-circle polynomial, and the nonzero value at F.
fn almost_circle_points() -> Check {
    let c = parse_rational_poly(&XY, ALMOST_CIRCLES).expect("catalog parses");
    let zeros = [(q(-1, 3), q(0, 1)), (q(3, 1), q(0, 1)), (q(0, 1), q(1, 1))];
    let all_zero = zeros.iter().all(|(x, y)| c.eval(&[x.clone(), y.clone()]).is_zero());
    let at_f = c.eval(&[q(9, 5), q(8, 5)]);
    Check {
        name: "C vanishes at (-1/3,0), (3,0), (0,1) and not at (9/5,8/5)",
        passed: all_zero && !at_f.is_zero(),
        detail: format!("C(9/5,8/5) = {at_f}"),
    }
}

fn lemniscate_identity() -> Check {
    let l = parse_rational_poly(&XY, LEMNISCATE).expect("catalog parses");
    let rhs = parse_rational_poly(&XY, "x^4 + 2x^2y^2 + y^4 - 4x^2 + 4/3y^2").expect("parses");
    Check {
        name: "L/3 = (x^2+y^2)^2 - 4x^2 + (4/3)y^2",
        passed: l.scale_rational(&q(1, 3)) == rhs,
        detail: String::new(),
    }
}

/// `3D = (3x² + 3y² + 2√3y − 3)(3x² + 3y² − 2√3y − 3)`.
fn two_circle_factorization() -> Check {
    let d = parse_rational_poly(&XY, TWO_CIRCLES)
        .expect("catalog parses")
        .map_coeffs(|c| QuadraticNumber::rational(c.clone()));
    let circle = |sign: i64| {
        MultiPoly::from_terms(
            &XY,
            vec![
                (vec![2, 0], QuadraticNumber::from_int(3)),
                (vec![0, 2], QuadraticNumber::from_int(3)),
                (vec![0, 1], QuadraticNumber::sqrt(3).expect("squarefree").scale(&Rational::from(2 * sign))),
                (vec![0, 0], QuadraticNumber::from_int(-3)),
            ],
        )
    };
    let passed = match d.scale_rational(&Rational::from(3)).exact_div(&circle(1)) {
        Ok(quotient) => quotient == circle(-1),
        Err(_) => false,
    };
    Check {
        name: "D splits into two conjugate circles over Q(√3)",
        passed,
        detail: "3x^2 + 3y^2 ± 2√3y - 3".into(),
    }
}

fn oracle_agreement() -> Check {
    let start = Instant::now();
    let names = ["fig2", "fig4-almost-circles", "fig3-lemniscate", "van-schooten"];
    let passed = names.iter().all(|n| {
        let s = scene_of(n);
        match (closure_poly(&s), elimination_oracle(&s)) {
            (Ok(a), Ok(b)) => a.closure == b.closure,
            _ => false,
        }
    });
    Check {
        name: "elimination oracle agrees on the reference scenes",
        passed,
        detail: format!("{:.2?}", start.elapsed()),
    }
}

fn signed_sums() -> Check {
    let scene = scene_of("fig4-almost-circles");
    let sigma: SignVector = "-++".parse().expect("valid");
    let a = signed_sum(&scene, (-1.0 / 3.0, 0.0), &sigma);
    let b = signed_sum(&scene, (0.0, 1.0), &sigma);
    let e = signed_sum(&scene, (3.0, 0.0), &sigma);
    let f = signed_sum(&scene, (1.8, 1.6), &sigma);
    let hits = classify_point(&scene, (-1.0 / 3.0, 0.0), 1e-9);
    let passed = [a, b, e].iter().all(|v| (v - 1.0).abs() < 1e-12)
        && (f - 0.972270).abs() < 5e-7
        && hits == vec![sigma];
    Check {
        name: "signed sums -|A1P|+|A2P|+|A3P| = 1 at (-1/3,0), (0,1), (3,0)",
        passed,
        detail: format!("value at (9/5,8/5) = {f:.6}"),
    }
}

fn coloring() -> Check {
    let c = |s: &str| color_of(&s.parse().expect("valid"));
    let passed = c("+++") == [0, 0, 0] && c("++-") == [0, 0, 255] && c("--+") == [255, 255, 0];
    Check {
        name: "coloring: (+,+,+) black, (+,+,-) blue, (-,-,+) yellow",
        passed,
        detail: String::new(),
    }
}

fn almost_circle_deviation() -> Check {
    let start = Instant::now();
    let scene = scene_of("fig4-almost-circles");
    let circle = circle_through(
        &Point::rational(q(-1, 3), q(0, 1)),
        &Point::int(3, 0),
        &Point::int(0, 1),
    )
    .expect("not collinear");
    let sigmas = ["-++".parse().expect("valid")];
    let report = max_deviation(&scene, &circle, &sigmas, 100_000).expect("enough samples");
    let at_f = deviation_at(&scene, (1.8, 1.6), &sigmas, 1.0);
    let center_ok = circle.center == (QuadraticNumber::rational(q(4, 3)), QuadraticNumber::zero());
    let passed = center_ok
        && circle.radius_exact() == Some(q(5, 3))
        && (at_f - 0.027730).abs() <= 1e-5
        && report.max >= 0.027730
        && report.max <= 0.03429;
    Check {
        name: "almost-circle deviation below 3.429%",
        passed,
        detail: format!(
            "at F {:.6}, max {:.6} at θ = {:.4}, {:.2?}",
            at_f,
            report.max,
            report.argmax_theta,
            start.elapsed()
        ),
    }
}

fn van_schooten() -> Check {
    match van_schooten_check(10_000) {
        Ok(r) => Check {
            name: "van Schooten: circumcircle splits into three single-relation arcs",
            passed: r.max_min_residual <= 1e-9
                && r.uncovered == 0
                && r.ambiguous_off_vertex == 0
                && r.arcs.len() == 3,
            detail: format!("max residual {:.1e}, {} arcs", r.max_min_residual, r.arcs.len()),
        },
        Err(e) => Check {
            name: "van Schooten: circumcircle splits into three single-relation arcs",
            passed: false,
            detail: e.to_string(),
        },
    }
}

fn fig2_tail() -> Check {
    let text = closure_poly(&scene_of("fig2"))
        .map(|r| r.closure.to_text(TermOrder::GradedLex))
        .unwrap_or_default();
    Check {
        name: "E ends with + 27720x + 3600y - 14175",
        passed: text.ends_with("+ 27720x + 3600y - 14175"),
        detail: String::new(),
    }
}

pub fn run_checks() -> Vec<Check> {
    vec![
        closure_matches("closure E for foci (0,2), (1,0), (2,0), s = 4", &scene_of("fig2"), FIG2_CURVE),
        fig2_tail(),
        closure_matches("closure C for foci (-1,0), (0,0), (1,0), s = 1", &scene_of("fig4-almost-circles"), ALMOST_CIRCLES),
        almost_circle_points(),
        closure_matches("closure L for foci (-1,0), (0,0), (1,0), s = 0", &scene_of("fig3-lemniscate"), LEMNISCATE),
        lemniscate_identity(),
        closure_matches("closure D for foci (-1,0), (1,0), (0,√3), s = 0", &scene_of("van-schooten"), TWO_CIRCLES),
        two_circle_factorization(),
        oracle_agreement(),
        signed_sums(),
        coloring(),
        almost_circle_deviation(),
        van_schooten(),
    ]
}
