use crate::numeric::{QuadraticNumber, Rational};

use super::{LocusError, SignVector};

/// Point with coordinates in Q or a single Q(√d).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Point {
    pub x: QuadraticNumber,
    pub y: QuadraticNumber,
}

impl Point {
    pub fn new(x: QuadraticNumber, y: QuadraticNumber) -> Self {
        Point { x, y }
    }

    pub fn rational(x: Rational, y: Rational) -> Self {
        Point {
            x: x.into(),
            y: y.into(),
        }
    }

    pub fn int(x: i64, y: i64) -> Self {
        Self::rational(x.into(), y.into())
    }

    pub fn to_f64(&self) -> (f64, f64) {
        (self.x.to_f64(), self.y.to_f64())
    }
}

/// Foci `A₁ … Aₙ` and radius `s` of a (signed) n-ellipse.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Scene {
    foci: Vec<Point>,
    s: Rational,
    radicand: Option<u64>,
}

impl Scene {
    pub fn new(foci: Vec<Point>, s: Rational) -> Result<Self, LocusError> {
        if foci.is_empty() {
            return Err(LocusError::EmptyFoci);
        }
        if s.is_negative() {
            return Err(LocusError::NegativeRadius(s));
        }
        let mut radicand = None;
        for d in foci.iter().flat_map(|p| [p.x.radicand(), p.y.radicand()]).flatten() {
            match radicand {
                Some(r) if r != d => return Err(LocusError::MixedField(r, d)),
                _ => radicand = Some(d),
            }
        }
        Ok(Scene { foci, s, radicand })
    }

    pub fn n(&self) -> usize {
        self.foci.len()
    }

    pub fn foci(&self) -> &[Point] {
        &self.foci
    }

    pub fn s(&self) -> &Rational {
        &self.s
    }

    pub fn s_f64(&self) -> f64 {
        self.s.to_f64()
    }

    /// The scene's common radicand, if any coordinate is irrational.
    pub fn radicand(&self) -> Option<u64> {
        self.radicand
    }

    pub fn foci_f64(&self) -> Vec<(f64, f64)> {
        self.foci.iter().map(Point::to_f64).collect()
    }

    /// Sign vectors that name distinct branches: all of them, or only those
    /// with `σ₁ = +1` when `s = 0`.
    pub fn candidate_signs(&self) -> impl Iterator<Item = SignVector> {
        let zero = self.s.is_zero();
        SignVector::all(self.n()).filter(move |sg| !zero || sg.signs()[0] == 1)
    }

    /// Same scene with every focus moved by an integer vector.
    pub fn translated(&self, dx: i64, dy: i64) -> Self {
        let shift = |v: &QuadraticNumber, k: i64| v.checked_add(&QuadraticNumber::from_int(k)).expect("rational shift");
        Scene {
            foci: self
                .foci
                .iter()
                .map(|p| Point::new(shift(&p.x, dx), shift(&p.y, dy)))
                .collect(),
            s: self.s.clone(),
            radicand: self.radicand,
        }
    }

    /// Same scene scaled about the origin by a positive rational factor.
    pub fn scaled(&self, k: &Rational) -> Self {
        assert!(k.is_positive(), "scale factor must be positive");
        Scene {
            foci: self
                .foci
                .iter()
                .map(|p| Point::new(p.x.scale(k), p.y.scale(k)))
                .collect(),
            s: &self.s * k,
            radicand: self.radicand,
        }
    }
}
