//! Independent derivation of the closure by chained resultants.
//!
//! Starts from the single linear relation `s − Σ dᵢ` and eliminates each
//! distance with `Res_{dᵢ}(·, dᵢ² − ρᵢ)`. Surd coordinates are carried by a
//! variable `t` with `t² = d`, eliminated last by `Res_t(·, t² − d)`. All
//! arithmetic stays over Q.

use crate::numeric::{QuadraticNumber, Rational};
use crate::poly::{resultant, MultiPoly};

use super::{distance_vars, finish_closure, LocusError, LocusResult, Point, Scene};

pub const ORACLE_MAX_FOCI: usize = 4;

/// `a + b·t` as a polynomial in `vars`.
fn surd_poly(vars: &[&str], v: &QuadraticNumber) -> MultiPoly<Rational> {
    let n = vars.len();
    let mut t = vec![0; n];
    t[n - 1] = 1;
    MultiPoly::from_terms(
        vars,
        vec![(vec![0; n], v.a().clone()), (t, v.b().clone())],
    )
}

fn squared_distance_with_t(vars: &[&str], focus: &Point) -> MultiPoly<Rational> {
    let x = MultiPoly::var(vars, "x").expect("x");
    let y = MultiPoly::var(vars, "y").expect("y");
    let dx = &x - &surd_poly(vars, &focus.x);
    let dy = &y - &surd_poly(vars, &focus.y);
    &(&dx * &dx) + &(&dy * &dy)
}

pub fn elimination_oracle(scene: &Scene) -> Result<LocusResult, LocusError> {
    let n = scene.n();
    if n > ORACLE_MAX_FOCI {
        return Err(LocusError::TooManyFoci {
            n,
            max: ORACLE_MAX_FOCI,
        });
    }
    let dnames = distance_vars(n);
    let mut vars: Vec<&str> = vec!["x", "y"];
    vars.extend(dnames.iter().map(String::as_str));
    vars.push("t");
    let t_index = vars.len() - 1;

    let mut f = MultiPoly::constant(&vars, scene.s().clone());
    for name in &dnames {
        f = &f - &MultiPoly::var(&vars, name)?;
    }
    for (i, focus) in scene.foci().iter().enumerate() {
        let di = 2 + i;
        let d_sq = MultiPoly::var(&vars, &dnames[i])?.pow(2);
        let relation = &d_sq - &squared_distance_with_t(&vars, focus);
        f = resultant(&f, &relation, di);
    }
    let mut norm_applied = false;
    if let Some(d) = scene.radicand() {
        if f.uses_var(t_index) {
            let t_sq = MultiPoly::var(&vars, "t")?.pow(2);
            let minimal = &t_sq - &MultiPoly::constant(&vars, Rational::from(d as i64));
            f = resultant(&f, &minimal, t_index);
            norm_applied = true;
        }
    }
    let f = f.with_vars(&super::XY)?;
    finish_closure(f, false, norm_applied)
}
