use std::f64::consts::TAU;
use std::fmt;

use serde::Serialize;

use super::{circle_through, Circle, RasterError};
use crate::locus::{Point, SignVector};
use crate::numeric::{QuadraticNumber, Rational};

/// Tolerance for a relation to hold at a sample.
pub const RELATION_TOL: f64 = 1e-9;
/// Samples closer than this to a vertex are not required to satisfy exactly one relation.
pub const VERTEX_EXCLUSION: f64 = 1e-3;

/// One of the three distance relations on the circumcircle of a regular triangle.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Relation {
    /// `d₁ + d₂ = d₃`
    D1PlusD2,
    /// `d₁ + d₃ = d₂`
    D1PlusD3,
    /// `d₂ + d₃ = d₁`
    D2PlusD3,
}

impl Relation {
    pub const ALL: [Relation; 3] = [Relation::D1PlusD2, Relation::D1PlusD3, Relation::D2PlusD3];

    /// Residual `|lhs − rhs|` for distances `(d₁, d₂, d₃)`.
    pub fn residual(self, d: [f64; 3]) -> f64 {
        match self {
            Relation::D1PlusD2 => (d[0] + d[1] - d[2]).abs(),
            Relation::D1PlusD3 => (d[0] + d[2] - d[1]).abs(),
            Relation::D2PlusD3 => (d[1] + d[2] - d[0]).abs(),
        }
    }

    /// Sign vector (with `σ₁ = +1`) whose signed sum vanishes on this relation.
    pub fn sign_vector(self) -> SignVector {
        let signs = match self {
            Relation::D1PlusD2 => vec![1, 1, -1],
            Relation::D1PlusD3 => vec![1, -1, 1],
            Relation::D2PlusD3 => vec![1, -1, -1],
        };
        SignVector::new(signs).expect("valid signs")
    }

    /// Index of the triangle vertex opposite the arc on which this relation holds.
    pub fn opposite_vertex(self) -> usize {
        match self {
            Relation::D1PlusD2 => 2,
            Relation::D1PlusD3 => 1,
            Relation::D2PlusD3 => 0,
        }
    }
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Relation::D1PlusD2 => "d1+d2=d3",
            Relation::D1PlusD3 => "d1+d3=d2",
            Relation::D2PlusD3 => "d2+d3=d1",
        })
    }
}

/// Maximal run of consecutive samples satisfying a single relation.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ArcSummary {
    pub relation: Relation,
    /// Angle of the first sample in the run; runs may wrap through θ = 0.
    pub start_theta: f64,
    pub end_theta: f64,
    pub samples: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VanSchootenReport {
    pub samples: usize,
    /// Largest, over samples, of the smallest relation residual.
    pub max_min_residual: f64,
    /// Samples where no relation holds within tolerance.
    pub uncovered: usize,
    /// Samples away from the vertices where other than exactly one relation holds.
    pub ambiguous_off_vertex: usize,
    /// Samples within the vertex exclusion radius.
    pub near_vertex: usize,
    /// Angles of the three vertices as seen from the circumcenter.
    pub vertex_thetas: [f64; 3],
    pub arcs: Vec<ArcSummary>,
}

/// Regular triangle `(−1,0), (1,0), (0,√3)`.
pub fn regular_triangle() -> [Point; 3] {
    let sqrt3 = QuadraticNumber::sqrt(3).expect("3 is squarefree");
    [
        Point::int(-1, 0),
        Point::int(1, 0),
        Point::new(QuadraticNumber::rational(Rational::zero()), sqrt3),
    ]
}

pub fn circumcircle() -> Circle {
    let [a, b, c] = regular_triangle();
    circle_through(&a, &b, &c).expect("triangle is not degenerate")
}

/// Relations that hold at `p` within `tol`.
pub fn relations_at(p: (f64, f64), tol: f64) -> Vec<Relation> {
    let d = distances(p);
    Relation::ALL
        .into_iter()
        .filter(|r| r.residual(d) <= tol)
        .collect()
}

fn distances(p: (f64, f64)) -> [f64; 3] {
    let v = regular_triangle().map(|q| q.to_f64());
    [0, 1, 2].map(|k| (p.0 - v[k].0).hypot(p.1 - v[k].1))
}

/// Samples the circumcircle of the regular triangle and records which of the
/// three relations hold along it.
pub fn van_schooten_check(samples: usize) -> Result<VanSchootenReport, RasterError> {
    const MIN_SAMPLES: usize = 100;
    if samples < MIN_SAMPLES {
        return Err(RasterError::TooFewSamples {
            got: samples,
            min: MIN_SAMPLES,
        });
    }
    let circle = circumcircle();
    let vertices = regular_triangle().map(|q| q.to_f64());
    let vertex_thetas = vertices.map(|v| circle.angle_of(v));

    let mut max_min_residual: f64 = 0.0;
    let mut uncovered = 0;
    let mut ambiguous_off_vertex = 0;
    let mut near_vertex = 0;
    let mut labels: Vec<Option<Relation>> = Vec::with_capacity(samples);
    for k in 0..samples {
        let theta = TAU * k as f64 / samples as f64;
        let p = circle.point_at(theta);
        let d = distances(p);
        let min_res = Relation::ALL
            .iter()
            .map(|r| r.residual(d))
            .fold(f64::INFINITY, f64::min);
        max_min_residual = max_min_residual.max(min_res);
        let holding: Vec<Relation> = Relation::ALL
            .into_iter()
            .filter(|r| r.residual(d) <= RELATION_TOL)
            .collect();
        if holding.is_empty() {
            uncovered += 1;
        }
        let close = vertices
            .iter()
            .any(|v| (p.0 - v.0).hypot(p.1 - v.1) <= VERTEX_EXCLUSION);
        if close {
            near_vertex += 1;
        } else if holding.len() != 1 {
            ambiguous_off_vertex += 1;
        }
        labels.push(if holding.len() == 1 { Some(holding[0]) } else { None });
    }

    let theta_of = |k: usize| TAU * k as f64 / samples as f64;
    let mut arcs: Vec<ArcSummary> = Vec::new();
    let mut k = 0;
    while k < samples {
        let Some(rel) = labels[k] else {
            k += 1;
            continue;
        };
        let start = k;
        while k + 1 < samples && labels[k + 1] == Some(rel) {
            k += 1;
        }
        arcs.push(ArcSummary {
            relation: rel,
            start_theta: theta_of(start),
            end_theta: theta_of(k),
            samples: k - start + 1,
        });
        k += 1;
    }
    // merge a run that wraps through θ = 0
    if arcs.len() > 1 && labels[0].is_some() && labels[samples - 1] == labels[0] {
        let first = arcs.remove(0);
        let last = arcs.last_mut().expect("at least one arc");
        last.end_theta = first.end_theta;
        last.samples += first.samples;
    }

    Ok(VanSchootenReport {
        samples,
        max_min_residual,
        uncovered,
        ambiguous_off_vertex,
        near_vertex,
        vertex_thetas,
        arcs,
    })
}
