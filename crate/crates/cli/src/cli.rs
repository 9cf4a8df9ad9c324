use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use nellipse::locus::SignVector;
use nellipse::raster::{
    circle_through, deviation_at, max_deviation, van_schooten_check, Window, DEFAULT_BAND,
};
use nellipse::scene_io::parse_scene_file;
use nellipse::{closure_poly, Point, Rational, Scene, TermOrder};

use crate::golden::run_checks;
use crate::output::{raster_bytes, RasterMode};
use crate::server::serve_blocking;
use crate::source::{auto_window, resolve, SceneSource};
use crate::AppError;

#[derive(Debug, Parser)]
#[command(name = "nellipse", version, about = "Closure polynomials, rasters and deviation analysis for n-ellipses")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct SceneArgs {
    /// Scene JSON file.
    #[arg(long, conflicts_with = "preset")]
    pub scene: Option<PathBuf>,
    /// Shipped scene name.
    #[arg(long)]
    pub preset: Option<String>,
}

#[derive(Debug, Args)]
pub struct RasterArgs {
    #[command(flatten)]
    pub source: SceneArgs,
    /// Output file.
    #[arg(long)]
    pub out: PathBuf,
    /// View window `xmin,xmax,ymin,ymax`.
    #[arg(long, allow_hyphen_values = true)]
    pub window: Option<String>,
    /// Raster size `WxH`.
    #[arg(long, default_value = "512x512")]
    pub size: String,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum Style {
    Graded,
    Classic,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum Side {
    Left,
    Right,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print the closure polynomial and its degree.
    Equation {
        #[command(flatten)]
        source: SceneArgs,
        #[arg(long, value_enum, default_value = "graded")]
        style: Style,
    },
    /// Draw the closure contours (PPM), or export them with `--json`.
    Render {
        #[command(flatten)]
        raster: RasterArgs,
        /// Write contour polylines as JSON instead of a PPM.
        #[arg(long)]
        json: bool,
    },
    /// Sign-classified raster (PPM).
    Classify {
        #[command(flatten)]
        raster: RasterArgs,
        /// On-locus band in pixel diagonals.
        #[arg(long, default_value_t = DEFAULT_BAND)]
        tol: f64,
    },
    /// Distance-sum hue heatmap (PPM).
    Hue {
        #[command(flatten)]
        raster: RasterArgs,
    },
    /// Fit a circle through three points and measure its deviation from a branch.
    AnalyzeCircle {
        #[command(flatten)]
        source: SceneArgs,
        /// Reference almost-circle of the three-collinear-foci scene.
        #[arg(long, value_enum, conflicts_with = "points")]
        side: Option<Side>,
        /// Three exact points `x,y;x,y;x,y`.
        #[arg(long, allow_hyphen_values = true)]
        points: Option<String>,
        /// Sign vectors of the branch, e.g. `-++` (repeatable).
        #[arg(long, allow_hyphen_values = true)]
        sigma: Vec<String>,
        #[arg(long, default_value_t = 100_000)]
        samples: usize,
        /// Also report the deviation at this point `x,y`.
        #[arg(long, allow_hyphen_values = true)]
        point: Option<String>,
    },
    /// Check the three distance relations on the circumcircle of a regular triangle.
    VanSchooten {
        #[arg(long, default_value_t = 10_000)]
        samples: usize,
    },
    /// Run the reference checks and report pass/fail.
    VerifyPaper,
    /// Start the HTTP/JSON service.
    Serve {
        #[arg(long, default_value_t = 8080)]
        port: u16,
    },
}

fn load(args: &SceneArgs) -> Result<(Scene, Window), AppError> {
    match (&args.scene, &args.preset) {
        (Some(path), None) => {
            let text = std::fs::read_to_string(path)?;
            let file = parse_scene_file(&text).map_err(|e| AppError::bad(e.path, e.message))?;
            let window = auto_window(&file.scene);
            Ok((file.scene, window))
        }
        (None, Some(name)) => resolve(&SceneSource {
            scene: None,
            preset: Some(name.clone()),
        }),
        _ => Err(AppError::bad("--scene", "give --scene FILE or --preset NAME")),
    }
}

pub fn parse_size(text: &str) -> Result<(usize, usize), AppError> {
    let bad = || AppError::bad("--size", format!("expected WxH, got {text:?}"));
    let (w, h) = text.split_once(['x', 'X']).ok_or_else(bad)?;
    Ok((w.trim().parse().map_err(|_| bad())?, h.trim().parse().map_err(|_| bad())?))
}

fn parse_rational(text: &str, flag: &str) -> Result<Rational, AppError> {
    text.trim()
        .parse()
        .map_err(|e: nellipse::NumericError| AppError::bad(flag, e.to_string()))
}

fn parse_point(text: &str, flag: &str) -> Result<Point, AppError> {
    let (x, y) = text
        .split_once(',')
        .ok_or_else(|| AppError::bad(flag, format!("expected x,y, got {text:?}")))?;
    Ok(Point::rational(parse_rational(x, flag)?, parse_rational(y, flag)?))
}

fn write_raster(args: &RasterArgs, mode: RasterMode, band: f64) -> Result<String, AppError> {
    let (scene, default_window) = load(&args.source)?;
    let window = match &args.window {
        Some(w) => Window::parse(w).map_err(|e| AppError::bad("--window", e.to_string()))?,
        None => default_window,
    };
    let (width, height) = parse_size(&args.size)?;
    let out = raster_bytes(&scene, &window, width, height, mode, band)?;
    std::fs::write(&args.out, &out.bytes)?;
    Ok(format!(
        "wrote {} ({} bytes, {}x{}, window {},{},{},{})",
        args.out.display(),
        out.bytes.len(),
        width,
        height,
        window.xmin,
        window.xmax,
        window.ymin,
        window.ymax
    ))
}

fn analyze_circle(
    source: &SceneArgs,
    side: Option<Side>,
    points: Option<&str>,
    sigma: &[String],
    samples: usize,
    point: Option<&str>,
) -> Result<String, AppError> {
    let (scene, _) = load(source)?;
    let (pts, default_sigma): (Vec<Point>, Option<&str>) = match (side, points) {
        (Some(side), None) => {
            let third = |n| Rational::new(n, 3).expect("nonzero");
            let reference = scene.foci() == [Point::int(-1, 0), Point::int(0, 0), Point::int(1, 0)]
                && scene.s() == &Rational::one();
            if !reference {
                return Err(AppError::bad(
                    "--side",
                    "only defined for foci (-1,0), (0,0), (1,0) with s = 1; use --points",
                ));
            }
            match side {
                Side::Right => (
                    vec![Point::rational(third(-1), Rational::zero()), Point::int(3, 0), Point::int(0, 1)],
                    Some("-++"),
                ),
                Side::Left => (
                    vec![Point::rational(third(1), Rational::zero()), Point::int(-3, 0), Point::int(0, 1)],
                    Some("++-"),
                ),
            }
        }
        (None, Some(text)) => {
            let pts = text
                .split(';')
                .map(|p| parse_point(p, "--points"))
                .collect::<Result<Vec<_>, _>>()?;
            if pts.len() != 3 {
                return Err(AppError::bad("--points", "exactly three points are required"));
            }
            (pts, None)
        }
        _ => return Err(AppError::bad("--points", "give --side or --points")),
    };
    let sigmas: Vec<SignVector> = if sigma.is_empty() {
        match default_sigma {
            Some(s) => vec![s.parse()?],
            None => scene.candidate_signs().collect(),
        }
    } else {
        sigma.iter().map(|s| s.parse()).collect::<Result<_, _>>()?
    };
    if let Some(bad) = sigmas.iter().find(|s| s.len() != scene.n()) {
        return Err(AppError::bad("--sigma", format!("{bad} does not match {} foci", scene.n())));
    }
    let circle = circle_through(&pts[0], &pts[1], &pts[2])?;
    let report = max_deviation(&scene, &circle, &sigmas, samples)?;
    let (cx, cy) = &circle.center;
    let radius = match circle.radius_exact() {
        Some(r) => r.to_string(),
        None => format!("sqrt({})", circle.radius_sq),
    };
    let sig: Vec<String> = sigmas.iter().map(|s| s.to_string()).collect();
    let mut lines = vec![
        format!("center ({cx}, {cy})"),
        format!("radius {radius} ({:.6})", circle.radius()),
        format!("signs {}", sig.join(" ")),
        format!(
            "max deviation {:.6} at theta {:.6}, point ({:.6}, {:.6}) over {} samples",
            report.max, report.argmax_theta, report.at_point.0, report.at_point.1, samples
        ),
    ];
    if let Some(text) = point {
        let p = parse_point(text, "--point")?.to_f64();
        let scale = if scene.s().is_zero() { circle.radius() } else { scene.s_f64() };
        let dev = deviation_at(&scene, p, &sigmas, scale);
        lines.push(format!("deviation at ({}) {:.6}", text, dev));
    }
    Ok(lines.join("\n"))
}

fn van_schooten(samples: usize) -> Result<String, AppError> {
    let r = van_schooten_check(samples)?;
    let mut lines = vec![
        format!("samples {}", r.samples),
        format!("max min-residual {:.3e}", r.max_min_residual),
        format!("uncovered {}", r.uncovered),
        format!("ambiguous away from vertices {}", r.ambiguous_off_vertex),
        format!("near a vertex {}", r.near_vertex),
    ];
    for arc in &r.arcs {
        lines.push(format!(
            "arc {} signs {} theta {:.6}..{:.6} ({} samples)",
            arc.relation,
            arc.relation.sign_vector(),
            arc.start_theta,
            arc.end_theta,
            arc.samples
        ));
    }
    Ok(lines.join("\n"))
}

fn execute(cli: Cli) -> Result<(String, bool), AppError> {
    match cli.command {
        Command::Equation { source, style } => {
            let (scene, _) = load(&source)?;
            let order = match style {
                Style::Graded => TermOrder::GradedLex,
                Style::Classic => TermOrder::Classic,
            };
            let r = closure_poly(&scene)?;
            Ok((
                format!(
                    "{}\ndegree {}\nterms {}",
                    r.closure.to_text(order),
                    r.total_degree,
                    r.closure.num_terms()
                ),
                true,
            ))
        }
        Command::Render { raster, json } => {
            let mode = if json { RasterMode::Contour } else { RasterMode::Render };
            Ok((write_raster(&raster, mode, DEFAULT_BAND)?, true))
        }
        Command::Classify { raster, tol } => Ok((write_raster(&raster, RasterMode::Classify, tol)?, true)),
        Command::Hue { raster } => Ok((write_raster(&raster, RasterMode::Hue, DEFAULT_BAND)?, true)),
        Command::AnalyzeCircle {
            source,
            side,
            points,
            sigma,
            samples,
            point,
        } => Ok((
            analyze_circle(&source, side, points.as_deref(), &sigma, samples, point.as_deref())?,
            true,
        )),
        Command::VanSchooten { samples } => Ok((van_schooten(samples)?, true)),
        Command::VerifyPaper => {
            let checks = run_checks();
            let ok = checks.iter().all(|c| c.passed);
            let mut lines: Vec<String> = checks
                .iter()
                .map(|c| {
                    let tag = if c.passed { "PASS" } else { "FAIL" };
                    if c.detail.is_empty() {
                        format!("{tag} {}", c.name)
                    } else {
                        format!("{tag} {} ({})", c.name, c.detail)
                    }
                })
                .collect();
            let passed = checks.iter().filter(|c| c.passed).count();
            lines.push(format!("{passed}/{} checks passed", checks.len()));
            Ok((lines.join("\n"), ok))
        }
        Command::Serve { port } => {
            serve_blocking(port)?;
            Ok((String::new(), true))
        }
    }
}

/// Runs the CLI and returns the process exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    match execute(cli) {
        Ok((text, ok)) => {
            if !text.is_empty() {
                let mut out = std::io::stdout().lock();
                let _ = writeln!(out, "{text}");
            }
            if ok {
                0
            } else {
                1
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            1
        }
    }
}
