//! Closure polynomials of signed distance-sum loci `Σ σᵢ|AᵢP| = s`.

mod oracle;
mod scene;
mod sign;

use std::collections::HashMap;

use thiserror::Error;

pub use oracle::{elimination_oracle, ORACLE_MAX_FOCI};
pub use scene::{Point, Scene};
pub use sign::SignVector;

use crate::numeric::{QuadraticNumber, Rational};
use crate::poly::{squarefree, CanonicalForm, MultiPoly, PolyError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LocusError {
    #[error("a scene needs at least one focus")]
    EmptyFoci,
    #[error("radius s must be non-negative, got {0}")]
    NegativeRadius(Rational),
    #[error("foci mix Q(√{0}) and Q(√{1}); one radicand per scene")]
    MixedField(u64, u64),
    #[error("sign vector has length {got}, scene has {expected} foci")]
    SignLength { expected: usize, got: usize },
    #[error("invalid sign vector {0:?}")]
    BadSignVector(String),
    #[error("the locus polynomial vanishes identically (degenerate scene)")]
    DegenerateLocus,
    #[error("elimination oracle supports at most {max} foci, got {n}")]
    TooManyFoci { n: usize, max: usize },
    #[error(transparent)]
    Poly(#[from] PolyError),
}

pub const XY: [&str; 2] = ["x", "y"];

/// Names `d1 … dn` of the distance variables.
pub fn distance_vars(n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("d{i}")).collect()
}

/// Outcome of deriving a closure polynomial.
#[derive(Debug, Clone, PartialEq)]
pub struct LocusResult {
    pub closure: CanonicalForm<Rational>,
    pub total_degree: u32,
    pub half_product_used: bool,
    pub norm_applied: bool,
}

/// `ρ(x, y) = (x − a)² + (y − b)²`, expanded.
pub fn squared_distance_poly(focus: &Point) -> MultiPoly<QuadraticNumber> {
    let x = MultiPoly::var(&XY, "x").expect("x");
    let y = MultiPoly::var(&XY, "y").expect("y");
    let dx = &x - &MultiPoly::constant(&XY, focus.x.clone());
    let dy = &y - &MultiPoly::constant(&XY, focus.y.clone());
    &(&dx * &dx) + &(&dy * &dy)
}

/// `Σ σᵢ·|AᵢP|` in double precision.
pub fn signed_sum(scene: &Scene, p: (f64, f64), sigma: &SignVector) -> f64 {
    scene
        .foci_f64()
        .iter()
        .zip(sigma.signs())
        .map(|(&(ax, ay), &sg)| sg as f64 * (p.0 - ax).hypot(p.1 - ay))
        .sum()
}

/// Product of `s − Σ σᵢ dᵢ` over sign vectors, as a polynomial in `d1 … dn`.
#[derive(Debug, Clone, PartialEq)]
pub struct SignProduct {
    pub poly: MultiPoly<Rational>,
    /// Only sign vectors with `σ₁ = +1` were used (the `s = 0`, `n ≥ 2` case).
    pub half: bool,
}

impl SignProduct {
    /// Whether every exponent of every `dᵢ` is even.
    pub fn is_even(&self) -> bool {
        self.poly
            .terms()
            .all(|(m, _)| m.exps().iter().all(|e| e % 2 == 0))
    }
}

pub fn sign_product(scene: &Scene) -> SignProduct {
    let n = scene.n();
    let names = distance_vars(n);
    let vars: Vec<&str> = names.iter().map(String::as_str).collect();
    let half = scene.s().is_zero() && n >= 2;
    let mut acc = MultiPoly::constant(&vars, Rational::one());
    for sigma in SignVector::all(n).filter(|sg| !half || sg.signs()[0] == 1) {
        let mut terms = vec![(vec![0; n], scene.s().clone())];
        for (i, &sg) in sigma.signs().iter().enumerate() {
            let mut e = vec![0; n];
            e[i] = 1;
            terms.push((e, Rational::from(-(sg as i64))));
        }
        acc = &acc * &MultiPoly::from_terms(&vars, terms);
    }
    SignProduct { poly: acc, half }
}

/// Replaces every `dᵢ^(2k)` by `ρᵢ^k`.
fn substitute_distances(scene: &Scene, product: &SignProduct) -> MultiPoly<QuadraticNumber> {
    let rhos: Vec<MultiPoly<QuadraticNumber>> =
        scene.foci().iter().map(squared_distance_poly).collect();
    let mut cache: HashMap<(usize, u32), MultiPoly<QuadraticNumber>> = HashMap::new();
    let mut out = MultiPoly::zero(&XY);
    for (m, c) in product.poly.terms() {
        let mut term = MultiPoly::constant(&XY, QuadraticNumber::rational(c.clone()));
        for (i, &e) in m.exps().iter().enumerate() {
            if e == 0 {
                continue;
            }
            let pw = cache
                .entry((i, e / 2))
                .or_insert_with(|| rhos[i].pow(e / 2));
            term = &term * pw;
        }
        out = &out + &term;
    }
    out
}

/// Rational polynomial `P · P̄`, where `P̄` conjugates every coefficient.
fn field_norm(p: &MultiPoly<QuadraticNumber>) -> MultiPoly<Rational> {
    let conj = p.map_coeffs(QuadraticNumber::conjugate);
    (p * &conj).map_coeffs(|c| {
        debug_assert!(c.is_rational());
        c.a().clone()
    })
}

/// Shared tail of both pipelines: primitive part, squarefree part, canonical form.
pub(crate) fn finish_closure(
    poly: MultiPoly<Rational>,
    half_product_used: bool,
    norm_applied: bool,
) -> Result<LocusResult, LocusError> {
    if poly.is_zero() {
        return Err(LocusError::DegenerateLocus);
    }
    let primitive = poly.canonical().into_poly();
    let closure = squarefree(&primitive).canonical();
    Ok(LocusResult {
        total_degree: closure.total_degree(),
        closure,
        half_product_used,
        norm_applied,
    })
}

/// Zariski-closure polynomial of the scene's extended locus, via the
/// sign-product construction.
pub fn closure_poly(scene: &Scene) -> Result<LocusResult, LocusError> {
    let product = sign_product(scene);
    assert!(product.is_even(), "sign product must be even in every distance");
    let substituted = substitute_distances(scene, &product);
    let norm_applied = substituted.radicand()?.is_some();
    let rational = if norm_applied {
        field_norm(&substituted)
    } else {
        substituted.map_coeffs(|c| c.a().clone())
    };
    finish_closure(rational, product.half, norm_applied)
}

/// Sign vectors whose signed sum at `p` is within `tol` of `s`.
///
/// For `s = 0` a sign vector and its negation describe the same branch; only
/// the representative with `σ₁ = +1` is reported.
pub fn classify_point(scene: &Scene, p: (f64, f64), tol: f64) -> Vec<SignVector> {
    let s = scene.s_f64();
    scene
        .candidate_signs()
        .filter(|sg| (signed_sum(scene, p, sg) - s).abs() <= tol)
        .collect()
}

/// Dynamic-coloring rule: a minus sign on focus i switches RGB channel i on.
/// Scenes with more than three foci use a fixed palette indexed by the
/// sign vector's binary index (index 0, the unsigned branch, stays black).
pub fn color_of(sigma: &SignVector) -> [u8; 3] {
    let n = sigma.len();
    if n <= 3 {
        let mut rgb = [0u8; 3];
        for (i, &sg) in sigma.signs().iter().enumerate() {
            if sg < 0 {
                rgb[i] = 255;
            }
        }
        return rgb;
    }
    let idx = sigma.index();
    if idx == 0 {
        return [0, 0, 0];
    }
    let slots = (1usize << n) - 1;
    crate::raster::hsv_to_rgb((idx - 1) as f64 / slots as f64)
}

#[cfg(test)]
mod tests;
