use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

use crate::numeric::{QuadraticNumber, Rational};

/// Exact field of polynomial coefficients.
pub trait Coefficient: Clone + PartialEq + fmt::Debug + fmt::Display + Send + Sync + 'static {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn plus(&self, other: &Self) -> Self;
    fn minus(&self, other: &Self) -> Self;
    fn times(&self, other: &Self) -> Self;
    fn negated(&self) -> Self;
    /// Multiplicative inverse, `None` for zero.
    fn inverse(&self) -> Option<Self>;
    fn from_rational(r: Rational) -> Self;
    fn scale(&self, k: &Rational) -> Self;
    /// Radicand of the surd part, if any.
    fn radicand(&self) -> Option<u64>;
    fn to_f64(&self) -> f64;
    /// Rational components (`a`, and `b` for `a + b√d`).
    fn rational_parts(&self) -> (&Rational, Option<&Rational>);
    /// Sign used to orient canonical forms: sign of the rational part, tie-broken by the surd part.
    fn orientation(&self) -> i32;
    /// `(negative, magnitude)` for term rendering; magnitude is empty for unit coefficients.
    fn term_parts(&self) -> (bool, String);
}

fn rat_sign(r: &Rational) -> i32 {
    if r.is_positive() {
        1
    } else if r.is_negative() {
        -1
    } else {
        0
    }
}

impl Coefficient for Rational {
    fn zero() -> Self {
        Rational::zero()
    }
    fn one() -> Self {
        Rational::one()
    }
    fn is_zero(&self) -> bool {
        Rational::is_zero(self)
    }
    fn plus(&self, other: &Self) -> Self {
        self + other
    }
    fn minus(&self, other: &Self) -> Self {
        self - other
    }
    fn times(&self, other: &Self) -> Self {
        self * other
    }
    fn negated(&self) -> Self {
        -self
    }
    fn inverse(&self) -> Option<Self> {
        self.recip().ok()
    }
    fn from_rational(r: Rational) -> Self {
        r
    }
    fn scale(&self, k: &Rational) -> Self {
        self * k
    }
    fn radicand(&self) -> Option<u64> {
        None
    }
    fn to_f64(&self) -> f64 {
        Rational::to_f64(self)
    }
    fn rational_parts(&self) -> (&Rational, Option<&Rational>) {
        (self, None)
    }
    fn orientation(&self) -> i32 {
        rat_sign(self)
    }
    fn term_parts(&self) -> (bool, String) {
        let mag = self.abs();
        let text = if mag.is_one() {
            String::new()
        } else if mag.is_integer() {
            mag.to_string()
        } else {
            format!("({mag})")
        };
        (self.is_negative(), text)
    }
}

impl Coefficient for QuadraticNumber {
    fn zero() -> Self {
        QuadraticNumber::zero()
    }
    fn one() -> Self {
        QuadraticNumber::one()
    }
    fn is_zero(&self) -> bool {
        QuadraticNumber::is_zero(self)
    }
    fn plus(&self, other: &Self) -> Self {
        self.checked_add(other).expect("mixed quadratic fields")
    }
    fn minus(&self, other: &Self) -> Self {
        self.checked_sub(other).expect("mixed quadratic fields")
    }
    fn times(&self, other: &Self) -> Self {
        self.checked_mul(other).expect("mixed quadratic fields")
    }
    fn negated(&self) -> Self {
        self.neg()
    }
    fn inverse(&self) -> Option<Self> {
        QuadraticNumber::inverse(self).ok()
    }
    fn from_rational(r: Rational) -> Self {
        QuadraticNumber::rational(r)
    }
    fn scale(&self, k: &Rational) -> Self {
        QuadraticNumber::scale(self, k)
    }
    fn radicand(&self) -> Option<u64> {
        QuadraticNumber::radicand(self)
    }
    fn to_f64(&self) -> f64 {
        QuadraticNumber::to_f64(self)
    }
    fn rational_parts(&self) -> (&Rational, Option<&Rational>) {
        (self.a(), Some(self.b()))
    }
    fn orientation(&self) -> i32 {
        match rat_sign(self.a()) {
            0 => rat_sign(self.b()),
            s => s,
        }
    }
    fn term_parts(&self) -> (bool, String) {
        if self.is_rational() {
            return self.a().term_parts();
        }
        if self.a().is_zero() {
            let (neg, mag) = self.b().term_parts();
            return (neg, format!("{mag}√{}", self.d()));
        }
        (false, format!("({self})"))
    }
}

/// Rational multiplier that clears denominators, removes the integer content
/// and makes the first coefficient's orientation positive.
pub(crate) fn canonical_factor<'a, C: Coefficient>(
    mut coeffs: impl Iterator<Item = &'a C>,
) -> Rational {
    let Some(first) = coeffs.next() else {
        return Rational::one();
    };
    let mut parts: Vec<&Rational> = Vec::new();
    let push = |parts: &mut Vec<&'a Rational>, c: &'a C| {
        let (a, b) = c.rational_parts();
        parts.push(a);
        if let Some(b) = b {
            parts.push(b);
        }
    };
    push(&mut parts, first);
    for c in coeffs {
        push(&mut parts, c);
    }
    let lcm = Rational::lcm_denominators(parts.iter().copied());
    let mut content = BigInt::zero();
    for r in &parts {
        if r.is_zero() {
            continue;
        }
        let scaled = r.numer() * (&lcm / r.denom());
        content = content.gcd(&scaled);
    }
    if content.is_zero() {
        return Rational::one();
    }
    let factor = Rational::new(lcm, content).expect("nonzero content");
    if first.orientation() < 0 {
        -factor
    } else {
        factor
    }
}
