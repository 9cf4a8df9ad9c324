use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use nellipse::raster::{
    classify_raster, eval_grid_poly, hue_heatmap, marching_squares, render_contours, Window,
};
use nellipse::{closure_poly, Scene, TermOrder};

use crate::AppError;

/// Largest raster served or written, in pixels.
pub const MAX_PIXELS: usize = 4096 * 4096;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum RasterMode {
    /// Sign-classified locus (PPM).
    Classify,
    /// Distance-sum hue heatmap (PPM).
    Hue,
    /// Closure contour polylines (JSON).
    Contour,
    /// Closure contours drawn black on white (PPM).
    Render,
}

#[derive(Debug, Clone, PartialEq)]
pub struct RasterOutput {
    pub bytes: Vec<u8>,
    pub content_type: &'static str,
}

pub fn check_size(width: usize, height: usize) -> Result<(), AppError> {
    if width < 2 {
        return Err(AppError::bad("width", "must be at least 2"));
    }
    if height < 2 {
        return Err(AppError::bad("height", "must be at least 2"));
    }
    if width.saturating_mul(height) > MAX_PIXELS {
        return Err(AppError::TooLarge {
            width,
            height,
            max: MAX_PIXELS,
        });
    }
    Ok(())
}

/// Produces the bytes of a raster request.
pub fn raster_bytes(
    scene: &Scene,
    window: &Window,
    width: usize,
    height: usize,
    mode: RasterMode,
    band: f64,
) -> Result<RasterOutput, AppError> {
    check_size(width, height)?;
    window.validate().map_err(|e| AppError::bad("window", e.to_string()))?;
    if !(band.is_finite() && band > 0.0) {
        return Err(AppError::bad("tol", "must be a positive number"));
    }
    let ppm = |bytes| RasterOutput {
        bytes,
        content_type: "application/octet-stream",
    };
    match mode {
        RasterMode::Classify => Ok(ppm(classify_raster(scene, window, width, height, band)?.to_ppm())),
        RasterMode::Hue => Ok(ppm(hue_heatmap(scene, window, width, height)?.to_ppm())),
        RasterMode::Contour | RasterMode::Render => {
            let closure = closure_poly(scene)?.closure;
            let grid = eval_grid_poly(closure.poly(), window, width, height)?;
            let contours = marching_squares(&grid, window, 0.0);
            if mode == RasterMode::Contour {
                Ok(RasterOutput {
                    bytes: contours.to_json().into_bytes(),
                    content_type: "application/json",
                })
            } else {
                Ok(ppm(render_contours(&contours, window, width, height)?.to_ppm()))
            }
        }
    }
}

/// `{terms, degree, text}` for a scene's closure polynomial.
pub fn equation_json(scene: &Scene, order: TermOrder) -> Result<Value, AppError> {
    let result = closure_poly(scene)?;
    let poly = result.closure.poly();
    let terms: Vec<Value> = poly
        .ordered_terms(order)
        .into_iter()
        .map(|(m, c)| json!({"coefficient": c.to_string(), "x": m.exps()[0], "y": m.exps()[1]}))
        .collect();
    Ok(json!({
        "terms": terms,
        "degree": result.total_degree,
        "text": poly.to_text(order),
    }))
}
