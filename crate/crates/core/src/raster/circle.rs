use std::f64::consts::TAU;

use super::{qpoint_f64, RasterError};
use crate::locus::{signed_sum, Point, Scene, SignVector};
use crate::numeric::{QuadraticNumber, Rational};

/// Circle with an exact center and squared radius.
#[derive(Debug, Clone, PartialEq)]
pub struct Circle {
    pub center: (QuadraticNumber, QuadraticNumber),
    pub radius_sq: QuadraticNumber,
}

impl Circle {
    pub fn center_f64(&self) -> (f64, f64) {
        qpoint_f64(&self.center)
    }

    pub fn radius(&self) -> f64 {
        self.radius_sq.to_f64().sqrt()
    }

    /// Exact radius when the squared radius is a rational square.
    pub fn radius_exact(&self) -> Option<Rational> {
        self.radius_sq.as_rational().and_then(Rational::sqrt_exact)
    }

    pub fn point_at(&self, theta: f64) -> (f64, f64) {
        let (cx, cy) = self.center_f64();
        let r = self.radius();
        (cx + r * theta.cos(), cy + r * theta.sin())
    }

    /// Angle of a point as seen from the center.
    pub fn angle_of(&self, p: (f64, f64)) -> f64 {
        let (cx, cy) = self.center_f64();
        (p.1 - cy).atan2(p.0 - cx).rem_euclid(TAU)
    }

    /// Exact membership test.
    pub fn contains_exact(&self, p: &Point) -> Result<bool, RasterError> {
        let dx = p.x.checked_sub(&self.center.0)?;
        let dy = p.y.checked_sub(&self.center.1)?;
        let d2 = dx.checked_mul(&dx)?.checked_add(&dy.checked_mul(&dy)?)?;
        Ok(d2 == self.radius_sq)
    }

    pub fn scaled(&self, k: &Rational) -> Circle {
        Circle {
            center: (self.center.0.scale(k), self.center.1.scale(k)),
            radius_sq: self.radius_sq.scale(&(k * k)),
        }
    }
}

/// Circumscribed circle of three points, solved exactly from the two
/// perpendicular-bisector equations.
pub fn circle_through(p1: &Point, p2: &Point, p3: &Point) -> Result<Circle, RasterError> {
    let two = QuadraticNumber::from_int(2);
    let sq = |p: &Point| -> Result<QuadraticNumber, RasterError> {
        Ok(p.x.checked_mul(&p.x)?.checked_add(&p.y.checked_mul(&p.y)?)?)
    };
    let row = |p: &Point| -> Result<[QuadraticNumber; 3], RasterError> {
        Ok([
            two.checked_mul(&p.x.checked_sub(&p1.x)?)?,
            two.checked_mul(&p.y.checked_sub(&p1.y)?)?,
            sq(p)?.checked_sub(&sq(p1)?)?,
        ])
    };
    let [a11, a12, b1] = row(p2)?;
    let [a21, a22, b2] = row(p3)?;
    let det = a11.checked_mul(&a22)?.checked_sub(&a12.checked_mul(&a21)?)?;
    if det.is_zero() {
        return Err(RasterError::Collinear);
    }
    let cx = b1
        .checked_mul(&a22)?
        .checked_sub(&a12.checked_mul(&b2)?)?
        .checked_div(&det)?;
    let cy = a11
        .checked_mul(&b2)?
        .checked_sub(&b1.checked_mul(&a21)?)?
        .checked_div(&det)?;
    let dx = p1.x.checked_sub(&cx)?;
    let dy = p1.y.checked_sub(&cy)?;
    let radius_sq = dx.checked_mul(&dx)?.checked_add(&dy.checked_mul(&dy)?)?;
    Ok(Circle {
        center: (cx, cy),
        radius_sq,
    })
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DeviationReport {
    pub max: f64,
    pub argmax_theta: f64,
    pub at_point: (f64, f64),
}

/// Relative residual `min_σ |Σσᵢ|AᵢP| − s| / scale` at one point, where the
/// scale is `s`, or the circle radius when `s = 0`.
pub fn deviation_at(scene: &Scene, p: (f64, f64), sigmas: &[SignVector], scale: f64) -> f64 {
    let s = scene.s_f64();
    sigmas
        .iter()
        .map(|sg| (signed_sum(scene, p, sg) - s).abs())
        .fold(f64::INFINITY, f64::min)
        / scale
}

/// Largest relative deviation over `samples` equally spaced angles on the
/// circle. The result is a sampled maximum, a lower bound of the supremum.
pub fn max_deviation(
    scene: &Scene,
    circle: &Circle,
    sigmas: &[SignVector],
    samples: usize,
) -> Result<DeviationReport, RasterError> {
    const MIN_SAMPLES: usize = 1000;
    if samples < MIN_SAMPLES {
        return Err(RasterError::TooFewSamples {
            got: samples,
            min: MIN_SAMPLES,
        });
    }
    let scale = if scene.s().is_zero() {
        circle.radius()
    } else {
        scene.s_f64()
    };
    let mut best = DeviationReport {
        max: f64::NEG_INFINITY,
        argmax_theta: 0.0,
        at_point: circle.point_at(0.0),
    };
    for k in 0..samples {
        let theta = TAU * k as f64 / samples as f64;
        let p = circle.point_at(theta);
        let dev = deviation_at(scene, p, sigmas, scale);
        if dev > best.max {
            best = DeviationReport {
                max: dev,
                argmax_theta: theta,
                at_point: p,
            };
        }
    }
    Ok(best)
}
