//! Sparse multivariate polynomials over an exact coefficient field.
//!
//! Terms are kept in a map keyed by exponent vectors ordered graded
//! lexicographically, with variable priority given by the order of the
//! polynomial's variable list (`x > y > d1 > … > t` throughout this crate).

mod coefficient;
mod display;
mod gcd;
mod resultant;

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use thiserror::Error;

pub use coefficient::Coefficient;
pub use display::{parse_rational_poly, TermOrder};
pub use gcd::{gcd, squarefree};
pub use resultant::{resultant, sylvester_matrix};

use crate::numeric::Rational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("polynomials live in different variable sets: {0:?} vs {1:?}")]
    VariableMismatch(Vec<String>, Vec<String>),
    #[error("unknown variable {0:?}")]
    UnknownVariable(String),
    #[error("variable {0:?} has no assigned value")]
    UnboundVariable(String),
    #[error("polynomial is not divisible by the given divisor")]
    NotDivisible,
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("cannot combine coefficients from Q(√{0}) and Q(√{1})")]
    MixedField(u64, u64),
    #[error("cannot parse polynomial: {0}")]
    Parse(String),
}

/// Exponent vector, ordered graded-lexicographically.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn new(exps: Vec<u32>) -> Self {
        Monomial(exps)
    }

    pub fn one(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    pub fn exps(&self) -> &[u32] {
        &self.0
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    fn checked_div(&self, other: &Monomial) -> Option<Monomial> {
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| a.checked_sub(*b))
            .collect::<Option<Vec<_>>>()
            .map(Monomial)
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

#[derive(Clone, PartialEq)]
pub struct MultiPoly<C> {
    vars: Arc<[String]>,
    terms: BTreeMap<Monomial, C>,
}

impl<C: Coefficient> MultiPoly<C> {
    pub fn zero(vars: &[&str]) -> Self {
        MultiPoly {
            vars: vars.iter().map(|v| v.to_string()).collect(),
            terms: BTreeMap::new(),
        }
    }

    fn zero_like(&self) -> Self {
        MultiPoly {
            vars: self.vars.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(vars: &[&str], c: C) -> Self {
        let mut p = Self::zero(vars);
        if !c.is_zero() {
            p.terms.insert(Monomial::one(vars.len()), c);
        }
        p
    }

    fn constant_like(&self, c: C) -> Self {
        let mut p = self.zero_like();
        if !c.is_zero() {
            p.terms.insert(Monomial::one(self.vars.len()), c);
        }
        p
    }

    pub fn one_like(&self) -> Self {
        self.constant_like(C::one())
    }

    /// The polynomial consisting of a single variable.
    pub fn var(vars: &[&str], name: &str) -> Result<Self, PolyError> {
        let idx = vars
            .iter()
            .position(|v| *v == name)
            .ok_or_else(|| PolyError::UnknownVariable(name.to_string()))?;
        let mut exps = vec![0; vars.len()];
        exps[idx] = 1;
        Ok(Self::from_terms(vars, vec![(exps, C::one())]))
    }

    pub fn from_terms(vars: &[&str], terms: impl IntoIterator<Item = (Vec<u32>, C)>) -> Self {
        let mut p = Self::zero(vars);
        for (exps, c) in terms {
            assert_eq!(exps.len(), vars.len(), "exponent vector length");
            p.add_term(Monomial(exps), c);
        }
        p
    }

    fn add_term(&mut self, m: Monomial, c: C) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get().plus(&c);
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn var_index(&self, name: &str) -> Result<usize, PolyError> {
        self.vars
            .iter()
            .position(|v| v == name)
            .ok_or_else(|| PolyError::UnknownVariable(name.to_string()))
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &C)> + ExactSizeIterator {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|m| m.is_one())
    }

    pub fn coefficient(&self, exps: &[u32]) -> C {
        self.terms
            .get(&Monomial(exps.to_vec()))
            .cloned()
            .unwrap_or_else(C::zero)
    }

    /// Leading term under the graded-lex order.
    pub fn leading(&self) -> Option<(&Monomial, &C)> {
        self.terms.iter().next_back()
    }

    pub fn total_degree(&self) -> u32 {
        self.leading().map(|(m, _)| m.degree()).unwrap_or(0)
    }

    pub fn degree_in(&self, var: usize) -> u32 {
        self.terms.keys().map(|m| m.0[var]).max().unwrap_or(0)
    }

    pub fn uses_var(&self, var: usize) -> bool {
        self.terms.keys().any(|m| m.0[var] > 0)
    }

    /// Radicand shared by the coefficients, or an error when two fields mix.
    pub fn radicand(&self) -> Result<Option<u64>, PolyError> {
        let mut found: Option<u64> = None;
        for c in self.terms.values() {
            if let Some(d) = c.radicand() {
                match found {
                    Some(f) if f != d => return Err(PolyError::MixedField(f, d)),
                    _ => found = Some(d),
                }
            }
        }
        Ok(found)
    }

    fn check_compatible(&self, other: &Self) -> Result<(), PolyError> {
        if self.vars != other.vars {
            return Err(PolyError::VariableMismatch(
                self.vars.to_vec(),
                other.vars.to_vec(),
            ));
        }
        if let (Some(a), Some(b)) = (self.radicand()?, other.radicand()?) {
            if a != b {
                return Err(PolyError::MixedField(a, b));
            }
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self, PolyError> {
        self.check_compatible(other)?;
        Ok(self.add_impl(other, false))
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self, PolyError> {
        self.check_compatible(other)?;
        Ok(self.add_impl(other, true))
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self, PolyError> {
        self.check_compatible(other)?;
        Ok(self.mul_impl(other))
    }

    fn assert_same_vars(&self, other: &Self) {
        assert!(
            Arc::ptr_eq(&self.vars, &other.vars) || self.vars == other.vars,
            "variable sets differ: {:?} vs {:?}",
            self.vars,
            other.vars
        );
    }

    fn add_impl(&self, other: &Self, subtract: bool) -> Self {
        self.assert_same_vars(other);
        let mut out = self.clone();
        for (m, c) in &other.terms {
            let c = if subtract { c.negated() } else { c.clone() };
            out.add_term(m.clone(), c);
        }
        out
    }

    fn mul_impl(&self, other: &Self) -> Self {
        self.assert_same_vars(other);
        let mut out = self.zero_like();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                out.add_term(m1.mul(m2), c1.times(c2));
            }
        }
        out
    }

    pub fn scale(&self, k: &C) -> Self {
        if k.is_zero() {
            return self.zero_like();
        }
        MultiPoly {
            vars: self.vars.clone(),
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), c.times(k)))
                .collect(),
        }
    }

    pub fn scale_rational(&self, k: &Rational) -> Self {
        if k.is_zero() {
            return self.zero_like();
        }
        MultiPoly {
            vars: self.vars.clone(),
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), c.scale(k)))
                .collect(),
        }
    }

    pub fn pow(&self, exp: u32) -> Self {
        let mut acc = self.one_like();
        let mut base = self.clone();
        let mut e = exp;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Multiplies by `c · m` and subtracts from `self` in place.
    fn sub_scaled_shifted(&mut self, q: &Self, c: &C, m: &Monomial) {
        for (qm, qc) in &q.terms {
            self.add_term(qm.mul(m), qc.times(c).negated());
        }
    }

    /// Exact quotient `self / divisor`, failing when the division leaves a remainder.
    ///
    /// Uses repeated leading-term cancellation; for a single divisor this
    /// terminates with a zero remainder exactly when the divisor divides `self`.
    pub fn exact_div(&self, divisor: &Self) -> Result<Self, PolyError> {
        self.check_compatible(divisor)?;
        let (lm_q, lc_q) = divisor.leading().ok_or(PolyError::DivisionByZero)?;
        let inv = lc_q.inverse().ok_or(PolyError::DivisionByZero)?;
        let mut rem = self.clone();
        let mut quot = self.zero_like();
        while let Some((lm, lc)) = rem.leading() {
            let m = lm.checked_div(lm_q).ok_or(PolyError::NotDivisible)?;
            let c = lc.times(&inv);
            rem.sub_scaled_shifted(divisor, &c, &m);
            quot.add_term(m, c);
        }
        Ok(quot)
    }

    /// Formal partial derivative.
    pub fn derivative(&self, var: usize) -> Self {
        let mut out = self.zero_like();
        for (m, c) in &self.terms {
            let e = m.0[var];
            if e == 0 {
                continue;
            }
            let mut exps = m.0.clone();
            exps[var] -= 1;
            out.add_term(Monomial(exps), c.scale(&Rational::from(e as i64)));
        }
        out
    }

    /// Coefficients with respect to `var`, indexed by degree; each lives in
    /// the same variable set with `var` absent.
    pub fn coeffs_in(&self, var: usize) -> Vec<Self> {
        let deg = self.degree_in(var) as usize;
        let mut out = vec![self.zero_like(); if self.is_zero() { 0 } else { deg + 1 }];
        for (m, c) in &self.terms {
            let e = m.0[var] as usize;
            let mut exps = m.0.clone();
            exps[var] = 0;
            out[e].add_term(Monomial(exps), c.clone());
        }
        out
    }

    /// Multiplies by `var^k`.
    pub fn shift(&self, var: usize, k: u32) -> Self {
        MultiPoly {
            vars: self.vars.clone(),
            terms: self
                .terms
                .iter()
                .map(|(m, c)| {
                    let mut exps = m.0.clone();
                    exps[var] += k;
                    (Monomial(exps), c.clone())
                })
                .collect(),
        }
    }

    /// Exact evaluation at a point given positionally.
    pub fn eval(&self, point: &[C]) -> C {
        assert_eq!(point.len(), self.vars.len(), "point dimension");
        let powers: Vec<Vec<C>> = (0..self.vars.len())
            .map(|i| {
                let deg = self.degree_in(i) as usize;
                let mut pw = Vec::with_capacity(deg + 1);
                pw.push(C::one());
                for k in 1..=deg {
                    let next = pw[k - 1].times(&point[i]);
                    pw.push(next);
                }
                pw
            })
            .collect();
        let mut acc = C::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (i, &e) in m.0.iter().enumerate() {
                if e > 0 {
                    t = t.times(&powers[i][e as usize]);
                }
            }
            acc = acc.plus(&t);
        }
        acc
    }

    /// Exact evaluation with named assignments; every variable must be bound.
    pub fn eval_named(&self, assignment: &[(&str, C)]) -> Result<C, PolyError> {
        let point = self
            .vars
            .iter()
            .map(|v| {
                assignment
                    .iter()
                    .find(|(name, _)| name == v)
                    .map(|(_, c)| c.clone())
                    .ok_or_else(|| PolyError::UnboundVariable(v.clone()))
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(self.eval(&point))
    }

    /// Floating evaluation at a point given positionally.
    pub fn eval_f64(&self, point: &[f64]) -> f64 {
        self.terms
            .iter()
            .map(|(m, c)| {
                m.0.iter()
                    .zip(point)
                    .fold(c.to_f64(), |acc, (&e, &x)| acc * x.powi(e as i32))
            })
            .sum()
    }

    pub fn map_coeffs<D: Coefficient>(&self, f: impl Fn(&C) -> D) -> MultiPoly<D> {
        let mut out = MultiPoly {
            vars: self.vars.clone(),
            terms: BTreeMap::new(),
        };
        for (m, c) in &self.terms {
            out.add_term(m.clone(), f(c));
        }
        out
    }

    /// Fallible coefficient conversion.
    pub fn try_map_coeffs<D: Coefficient, E>(
        &self,
        f: impl Fn(&C) -> Result<D, E>,
    ) -> Result<MultiPoly<D>, E> {
        let mut out = MultiPoly {
            vars: self.vars.clone(),
            terms: BTreeMap::new(),
        };
        for (m, c) in &self.terms {
            out.add_term(m.clone(), f(c)?);
        }
        Ok(out)
    }

    /// Re-expresses the polynomial over another variable list. Variables that
    /// are dropped must not occur.
    pub fn with_vars(&self, vars: &[&str]) -> Result<Self, PolyError> {
        let mapping: Vec<Option<usize>> = self
            .vars
            .iter()
            .map(|v| vars.iter().position(|w| w == v))
            .collect();
        for (i, target) in mapping.iter().enumerate() {
            if target.is_none() && self.uses_var(i) {
                return Err(PolyError::UnknownVariable(self.vars[i].clone()));
            }
        }
        let mut out = Self::zero(vars);
        for (m, c) in &self.terms {
            let mut exps = vec![0; vars.len()];
            for (i, &e) in m.0.iter().enumerate() {
                if let Some(j) = mapping[i] {
                    exps[j] += e;
                }
            }
            out.add_term(Monomial(exps), c.clone());
        }
        Ok(out)
    }

    /// Substitutes `var ↦ var + shift` (or `−var` when `negate`), used for
    /// translating and mirroring curves.
    pub fn substitute_affine(&self, var: usize, negate: bool, shift: &C) -> Self {
        let mut base = MultiPoly::<C> {
            vars: self.vars.clone(),
            terms: BTreeMap::new(),
        };
        let mut e = vec![0; self.vars.len()];
        e[var] = 1;
        base.add_term(
            Monomial(e),
            if negate { C::one().negated() } else { C::one() },
        );
        base.add_term(Monomial::one(self.vars.len()), shift.clone());
        let deg = self.degree_in(var);
        let powers: Vec<Self> = (0..=deg).map(|k| base.pow(k)).collect();
        let mut out = self.zero_like();
        for (k, coeff) in self.coeffs_in(var).iter().enumerate() {
            if !coeff.is_zero() {
                out = &out + &(coeff * &powers[k]);
            }
        }
        out
    }

    /// Integer-primitive form with positive leading orientation.
    pub fn canonical(&self) -> CanonicalForm<C> {
        let factor = coefficient::canonical_factor(self.terms.values().rev());
        CanonicalForm(self.scale_rational(&factor))
    }
}

impl<C: Coefficient> fmt::Debug for MultiPoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_text(TermOrder::GradedLex))
    }
}

impl<C: Coefficient> fmt::Display for MultiPoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_text(TermOrder::GradedLex))
    }
}

impl<C: Coefficient> Add for &MultiPoly<C> {
    type Output = MultiPoly<C>;
    fn add(self, rhs: Self) -> MultiPoly<C> {
        self.add_impl(rhs, false)
    }
}

impl<C: Coefficient> Sub for &MultiPoly<C> {
    type Output = MultiPoly<C>;
    fn sub(self, rhs: Self) -> MultiPoly<C> {
        self.add_impl(rhs, true)
    }
}

impl<C: Coefficient> Mul for &MultiPoly<C> {
    type Output = MultiPoly<C>;
    fn mul(self, rhs: Self) -> MultiPoly<C> {
        self.mul_impl(rhs)
    }
}

impl<C: Coefficient> Neg for &MultiPoly<C> {
    type Output = MultiPoly<C>;
    fn neg(self) -> MultiPoly<C> {
        self.scale(&C::one().negated())
    }
}

/// Polynomial normalized to integer coefficients with content 1 and a
/// positive graded-lex leading coefficient.
#[derive(Clone, PartialEq)]
pub struct CanonicalForm<C: Coefficient>(MultiPoly<C>);

impl<C: Coefficient> fmt::Debug for CanonicalForm<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(&self.0, f)
    }
}

impl<C: Coefficient> CanonicalForm<C> {
    pub fn poly(&self) -> &MultiPoly<C> {
        &self.0
    }

    pub fn into_poly(self) -> MultiPoly<C> {
        self.0
    }
}

impl<C: Coefficient> std::ops::Deref for CanonicalForm<C> {
    type Target = MultiPoly<C>;
    fn deref(&self) -> &MultiPoly<C> {
        &self.0
    }
}

impl<C: Coefficient> fmt::Display for CanonicalForm<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.0, f)
    }
}
