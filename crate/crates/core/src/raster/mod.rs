//! Sampling, contouring, sign-classified and hue rasters, circle fitting and
//! deviation analysis.
//!
//! A `width × height` raster over a window samples the lattice that includes
//! the window's edges: column `i` sits at `x = (xmin·(w−1−i) + xmax·i)/(w−1)`,
//! row `j` (top row first) at `y = (ymax·(h−1−j) + ymin·j)/(h−1)`. The
//! symmetric form makes mirrored windows sample bit-identical mirrored points.

mod circle;
mod classify;
mod contour;
mod image;
mod schooten;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use circle::{circle_through, deviation_at, max_deviation, Circle, DeviationReport};
pub use classify::{classify_raster, hue_heatmap, hue_of, render_contours, DEFAULT_BAND};
pub use contour::{marching_squares, ContourSet, Polyline};
pub use image::RgbImage;
pub use schooten::{
    circumcircle, regular_triangle, relations_at, van_schooten_check, ArcSummary, Relation,
    VanSchootenReport, RELATION_TOL, VERTEX_EXCLUSION,
};

use crate::numeric::{QuadraticNumber, Rational};
use crate::poly::{Coefficient, MultiPoly};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum RasterError {
    #[error("invalid window: need xmin < xmax and ymin < ymax")]
    BadWindow,
    #[error("raster size must be at least 2x2, got {0}x{1}")]
    BadSize(usize, usize),
    #[error("points are collinear; no circle passes through them")]
    Collinear,
    #[error("sample count {got} is below the minimum {min}")]
    TooFewSamples { got: usize, min: usize },
    #[error(transparent)]
    Numeric(#[from] crate::numeric::NumericError),
}

/// Axis-aligned view rectangle.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Window {
    pub xmin: f64,
    pub xmax: f64,
    pub ymin: f64,
    pub ymax: f64,
}

impl Window {
    pub fn new(xmin: f64, xmax: f64, ymin: f64, ymax: f64) -> Result<Self, RasterError> {
        let ok = [xmin, xmax, ymin, ymax].iter().all(|v| v.is_finite()) && xmin < xmax && ymin < ymax;
        if !ok {
            return Err(RasterError::BadWindow);
        }
        Ok(Window {
            xmin,
            xmax,
            ymin,
            ymax,
        })
    }

    /// Parses `xmin,xmax,ymin,ymax`.
    pub fn parse(text: &str) -> Result<Self, RasterError> {
        let vals: Vec<f64> = text
            .split(',')
            .map(|v| v.trim().parse::<f64>())
            .collect::<Result<_, _>>()
            .map_err(|_| RasterError::BadWindow)?;
        match vals[..] {
            [a, b, c, d] => Window::new(a, b, c, d),
            _ => Err(RasterError::BadWindow),
        }
    }

    pub fn validate(&self) -> Result<(), RasterError> {
        Window::new(self.xmin, self.xmax, self.ymin, self.ymax).map(|_| ())
    }

    pub fn column_x(&self, i: usize, width: usize) -> f64 {
        let last = (width - 1) as f64;
        let i = i as f64;
        (self.xmin * (last - i) + self.xmax * i) / last
    }

    pub fn row_y(&self, j: usize, height: usize) -> f64 {
        let last = (height - 1) as f64;
        let j = j as f64;
        (self.ymax * (last - j) + self.ymin * j) / last
    }

    pub fn sample(&self, i: usize, j: usize, width: usize, height: usize) -> (f64, f64) {
        (self.column_x(i, width), self.row_y(j, height))
    }

    pub fn step(&self, width: usize, height: usize) -> (f64, f64) {
        (
            (self.xmax - self.xmin) / (width - 1) as f64,
            (self.ymax - self.ymin) / (height - 1) as f64,
        )
    }

    /// Distance between diagonally adjacent samples.
    pub fn pixel_diagonal(&self, width: usize, height: usize) -> f64 {
        let (dx, dy) = self.step(width, height);
        dx.hypot(dy)
    }

    pub fn contains(&self, p: (f64, f64)) -> bool {
        p.0 >= self.xmin && p.0 <= self.xmax && p.1 >= self.ymin && p.1 <= self.ymax
    }
}

fn check_size(width: usize, height: usize) -> Result<(), RasterError> {
    if width < 2 || height < 2 {
        return Err(RasterError::BadSize(width, height));
    }
    Ok(())
}

/// Row-major samples, top row first.
#[derive(Debug, Clone, PartialEq)]
pub struct Grid {
    pub width: usize,
    pub height: usize,
    pub values: Vec<f64>,
}

impl Grid {
    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.values[j * self.width + i]
    }
}

/// Samples `f` on the window lattice.
pub fn eval_grid<F>(f: F, window: &Window, width: usize, height: usize) -> Result<Grid, RasterError>
where
    F: Fn(f64, f64) -> f64 + Sync,
{
    window.validate()?;
    check_size(width, height)?;
    let values: Vec<f64> = (0..height)
        .into_par_iter()
        .flat_map_iter(|j| {
            let y = window.row_y(j, height);
            let f = &f;
            (0..width).map(move |i| f(window.column_x(i, width), y))
        })
        .collect();
    Ok(Grid {
        width,
        height,
        values,
    })
}

/// Floating copy of a bivariate polynomial, for fast repeated evaluation.
#[derive(Debug, Clone)]
pub struct FloatPoly {
    terms: Vec<(f64, u32, u32)>,
}

impl FloatPoly {
    pub fn new<C: Coefficient>(poly: &MultiPoly<C>) -> Self {
        assert_eq!(poly.vars().len(), 2, "bivariate polynomial expected");
        FloatPoly {
            terms: poly
                .terms()
                .map(|(m, c)| (c.to_f64(), m.exps()[0], m.exps()[1]))
                .collect(),
        }
    }

    pub fn eval(&self, x: f64, y: f64) -> f64 {
        self.terms
            .iter()
            .map(|&(c, a, b)| c * x.powi(a as i32) * y.powi(b as i32))
            .sum()
    }

    /// Largest monomial magnitude `|c·xᵃ·yᵇ|` at a point.
    pub fn max_term(&self, x: f64, y: f64) -> f64 {
        self.terms
            .iter()
            .map(|&(c, a, b)| (c * x.powi(a as i32) * y.powi(b as i32)).abs())
            .fold(0.0, f64::max)
    }
}

pub fn eval_grid_poly(
    poly: &MultiPoly<Rational>,
    window: &Window,
    width: usize,
    height: usize,
) -> Result<Grid, RasterError> {
    let fp = FloatPoly::new(poly);
    eval_grid(|x, y| fp.eval(x, y), window, width, height)
}

/// HSV to RGB at full saturation and value; `hue` in `[0, 1)`.
pub fn hsv_to_rgb(hue: f64) -> [u8; 3] {
    let h6 = hue.rem_euclid(1.0) * 6.0;
    let sector = h6.floor();
    let f = h6 - sector;
    let (r, g, b) = match sector as u8 {
        0 => (1.0, f, 0.0),
        1 => (1.0 - f, 1.0, 0.0),
        2 => (0.0, 1.0, f),
        3 => (0.0, 1.0 - f, 1.0),
        4 => (f, 0.0, 1.0),
        _ => (1.0, 0.0, 1.0 - f),
    };
    let byte = |v: f64| (v * 255.0).round() as u8;
    [byte(r), byte(g), byte(b)]
}

/// Exact point → floating point, for circle sampling helpers.
pub(crate) fn qpoint_f64(p: &(QuadraticNumber, QuadraticNumber)) -> (f64, f64) {
    (p.0.to_f64(), p.1.to_f64())
}
