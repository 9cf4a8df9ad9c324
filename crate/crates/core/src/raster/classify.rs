use rayon::prelude::*;

use super::{check_size, hsv_to_rgb, ContourSet, RasterError, RgbImage, Window};
use crate::locus::{color_of, Scene, SignVector};

/// Default on-locus band, in pixel diagonals.
pub const DEFAULT_BAND: f64 = 1.5;

const WHITE: [u8; 3] = [255, 255, 255];

fn render_rows<F>(window: &Window, width: usize, height: usize, shade: F) -> RgbImage
where
    F: Fn(f64, f64) -> [u8; 3] + Sync,
{
    let pixels: Vec<u8> = (0..height)
        .into_par_iter()
        .flat_map_iter(|j| {
            let y = window.row_y(j, height);
            let shade = &shade;
            (0..width).flat_map(move |i| shade(window.column_x(i, width), y))
        })
        .collect();
    RgbImage::from_raw(width, height, pixels)
}

/// Sign-classified raster: a sample is on the locus when
/// `min_σ |Σ σᵢ|AᵢP| − s| ≤ band · (pixel diagonal)`, and is then painted with
/// the color of the minimizing sign vector (first in index order on ties).
/// Everything else is white.
pub fn classify_raster(
    scene: &Scene,
    window: &Window,
    width: usize,
    height: usize,
    band: f64,
) -> Result<RgbImage, RasterError> {
    window.validate()?;
    check_size(width, height)?;
    let threshold = band * window.pixel_diagonal(width, height);
    let foci = scene.foci_f64();
    let s = scene.s_f64();
    let signs: Vec<(SignVector, [u8; 3])> = scene
        .candidate_signs()
        .map(|sg| {
            let c = color_of(&sg);
            (sg, c)
        })
        .collect();
    Ok(render_rows(window, width, height, |x, y| {
        let dists: Vec<f64> = foci.iter().map(|&(ax, ay)| (x - ax).hypot(y - ay)).collect();
        let mut best = f64::INFINITY;
        let mut color = WHITE;
        for (sg, c) in &signs {
            let sum: f64 = sg
                .signs()
                .iter()
                .zip(&dists)
                .map(|(&g, &d)| g as f64 * d)
                .sum();
            let residual = (sum - s).abs();
            if residual < best {
                best = residual;
                color = *c;
            }
        }
        if best <= threshold {
            color
        } else {
            WHITE
        }
    }))
}

/// Hue in `[0, 1)` for a distance sum: its fractional part.
pub fn hue_of(distance_sum: f64) -> f64 {
    distance_sum.rem_euclid(1.0)
}

/// Heatmap of the unsigned distance sum: hue cycles once per unit of `Σ|AᵢP|`.
pub fn hue_heatmap(
    scene: &Scene,
    window: &Window,
    width: usize,
    height: usize,
) -> Result<RgbImage, RasterError> {
    window.validate()?;
    check_size(width, height)?;
    let foci = scene.foci_f64();
    Ok(render_rows(window, width, height, |x, y| {
        let sum: f64 = foci.iter().map(|&(ax, ay)| (x - ax).hypot(y - ay)).sum();
        hsv_to_rgb(hue_of(sum))
    }))
}

/// Draws contour polylines in black on white.
pub fn render_contours(
    contours: &ContourSet,
    window: &Window,
    width: usize,
    height: usize,
) -> Result<RgbImage, RasterError> {
    window.validate()?;
    check_size(width, height)?;
    let mut img = RgbImage::filled(width, height, WHITE);
    let to_px = |p: [f64; 2]| {
        (
            (p[0] - window.xmin) / (window.xmax - window.xmin) * (width - 1) as f64,
            (window.ymax - p[1]) / (window.ymax - window.ymin) * (height - 1) as f64,
        )
    };
    let mut plot = |x: f64, y: f64| {
        let (i, j) = (x.round(), y.round());
        if i >= 0.0 && j >= 0.0 && (i as usize) < width && (j as usize) < height {
            img.set(i as usize, j as usize, [0, 0, 0]);
        }
    };
    for line in &contours.polylines {
        let mut pts: Vec<(f64, f64)> = line.points.iter().map(|&p| to_px(p)).collect();
        if line.closed {
            pts.push(pts[0]);
        }
        for pair in pts.windows(2) {
            let (a, b) = (pair[0], pair[1]);
            let steps = ((b.0 - a.0).abs().max((b.1 - a.1).abs()) * 2.0).ceil().max(1.0) as usize;
            for k in 0..=steps {
                let t = k as f64 / steps as f64;
                plot(a.0 + t * (b.0 - a.0), a.1 + t * (b.1 - a.1));
            }
        }
    }
    Ok(img)
}
