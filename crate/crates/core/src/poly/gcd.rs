//! Recursive primitive-PRS gcd and squarefree reduction.
//!
//! The main variable is the highest-indexed variable that occurs (for
//! bivariate `[x, y]` input that is `y`), with contents taken over the
//! remaining variables recursively.

use super::{Coefficient, MultiPoly};

fn normalize<C: Coefficient>(p: MultiPoly<C>) -> MultiPoly<C> {
    p.canonical().into_poly()
}

fn main_var<C: Coefficient>(p: &MultiPoly<C>, q: &MultiPoly<C>) -> Option<usize> {
    (0..p.vars().len())
        .rev()
        .find(|&v| p.uses_var(v) || q.uses_var(v))
}

/// Gcd of the coefficients of `p` with respect to `var`.
fn content<C: Coefficient>(p: &MultiPoly<C>, var: usize) -> MultiPoly<C> {
    let mut acc: Option<MultiPoly<C>> = None;
    for c in p.coeffs_in(var).into_iter().filter(|c| !c.is_zero()) {
        let next = match acc {
            None => normalize(c),
            Some(a) => gcd_rec(&a, &c),
        };
        if next.is_constant() {
            return next.one_like();
        }
        acc = Some(next);
    }
    acc.unwrap_or_else(|| p.one_like())
}

fn primitive_part<C: Coefficient>(p: &MultiPoly<C>, var: usize) -> MultiPoly<C> {
    let c = content(p, var);
    normalize(p.exact_div(&c).expect("content divides polynomial"))
}

/// Sparse pseudo-remainder of `a` by `b` in `var`.
fn pseudo_rem<C: Coefficient>(a: &MultiPoly<C>, b: &MultiPoly<C>, var: usize) -> MultiPoly<C> {
    let db = b.degree_in(var);
    let bc = b.coeffs_in(var);
    let lb = &bc[db as usize];
    let mut r = a.clone();
    while !r.is_zero() && r.degree_in(var) >= db {
        let dr = r.degree_in(var);
        let lr = r.coeffs_in(var).swap_remove(dr as usize);
        r = &(lb * &r) - &(&lr * &b.shift(var, dr - db));
    }
    r
}

fn gcd_rec<C: Coefficient>(p: &MultiPoly<C>, q: &MultiPoly<C>) -> MultiPoly<C> {
    if p.is_zero() {
        return normalize(q.clone());
    }
    if q.is_zero() {
        return normalize(p.clone());
    }
    let Some(var) = main_var(p, q) else {
        return p.one_like();
    };
    let cp = content(p, var);
    let cq = content(q, var);
    let c = gcd_rec(&cp, &cq);
    let mut a = normalize(p.exact_div(&cp).expect("content divides"));
    let mut b = normalize(q.exact_div(&cq).expect("content divides"));
    if a.degree_in(var) < b.degree_in(var) {
        std::mem::swap(&mut a, &mut b);
    }
    let g = loop {
        if b.degree_in(var) == 0 {
            break b.one_like();
        }
        let r = pseudo_rem(&a, &b, var);
        if r.is_zero() {
            break b;
        }
        a = b;
        b = primitive_part(&r, var);
    };
    normalize(&c * &g)
}

/// Greatest common divisor, returned in canonical form.
pub fn gcd<C: Coefficient>(p: &MultiPoly<C>, q: &MultiPoly<C>) -> MultiPoly<C> {
    gcd_rec(p, q)
}

/// Squarefree part: `p / gcd(p, ∂p/∂v₁, ∂p/∂v₂, …)`, canonicalized.
///
/// In characteristic zero a factor of multiplicity `e` divides the gcd of
/// `p` and all of its partial derivatives exactly `e − 1` times, so dividing
/// it out keeps every distinct factor once, including factors free of the
/// main variable.
pub fn squarefree<C: Coefficient>(p: &MultiPoly<C>) -> MultiPoly<C> {
    if p.is_constant() {
        return normalize(p.clone());
    }
    let mut g = p.clone();
    for var in (0..p.vars().len()).rev() {
        if !p.uses_var(var) {
            continue;
        }
        g = gcd(&g, &p.derivative(var));
        if g.is_constant() {
            break;
        }
    }
    let reduced = p.exact_div(&g).expect("gcd divides its argument");
    debug_assert!((&reduced * &g).canonical() == p.canonical());
    normalize(reduced)
}
