use std::fmt;

use super::{NumericError, Rational};

/// Largest trial divisor used when validating a radicand.
const SQUAREFREE_TRIAL_LIMIT: u64 = 1_000_000;

/// Checks that `d` is a squarefree integer greater than one, by trial division
/// with every `p <= 10^6` such that `p^2 <= d`.
pub fn validate_radicand(d: u64) -> Result<(), NumericError> {
    if d < 2 {
        return Err(NumericError::BadRadicand(d));
    }
    let mut p = 2u64;
    while p <= SQUAREFREE_TRIAL_LIMIT {
        match p.checked_mul(p) {
            Some(sq) if sq <= d => {
                if d.is_multiple_of(sq) {
                    return Err(NumericError::BadRadicand(d));
                }
            }
            _ => break,
        }
        p += 1;
    }
    Ok(())
}

/// An element `a + b·√d` of the quadratic field Q(√d).
///
/// When `b = 0` the value is rational and the radicand is irrelevant: it takes
/// part in neither equality nor field compatibility checks.
#[derive(Clone)]
pub struct QuadraticNumber {
    a: Rational,
    b: Rational,
    d: u64,
}

impl QuadraticNumber {
    pub fn new(a: Rational, b: Rational, d: u64) -> Result<Self, NumericError> {
        validate_radicand(d)?;
        Ok(QuadraticNumber { a, b, d })
    }

    pub fn rational(a: Rational) -> Self {
        QuadraticNumber {
            a,
            b: Rational::zero(),
            d: 1,
        }
    }

    pub fn from_int(n: i64) -> Self {
        Self::rational(Rational::from(n))
    }

    /// `√d` itself.
    pub fn sqrt(d: u64) -> Result<Self, NumericError> {
        Self::new(Rational::zero(), Rational::one(), d)
    }

    pub fn zero() -> Self {
        Self::rational(Rational::zero())
    }

    pub fn one() -> Self {
        Self::rational(Rational::one())
    }

    pub fn a(&self) -> &Rational {
        &self.a
    }

    pub fn b(&self) -> &Rational {
        &self.b
    }

    /// Stored radicand, meaningful only when `b != 0`.
    pub fn d(&self) -> u64 {
        self.d
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    /// The radicand this value actually depends on.
    pub fn radicand(&self) -> Option<u64> {
        if self.b.is_zero() {
            None
        } else {
            Some(self.d)
        }
    }

    pub fn as_rational(&self) -> Option<&Rational> {
        if self.is_rational() {
            Some(&self.a)
        } else {
            None
        }
    }

    fn common_radicand(&self, other: &Self) -> Result<u64, NumericError> {
        match (self.radicand(), other.radicand()) {
            (Some(x), Some(y)) if x != y => Err(NumericError::MixedField(x, y)),
            (Some(x), _) | (_, Some(x)) => Ok(x),
            (None, None) => Ok(1),
        }
    }

    fn build(a: Rational, b: Rational, d: u64) -> Self {
        QuadraticNumber { a, b, d }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self, NumericError> {
        let d = self.common_radicand(other)?;
        Ok(Self::build(&self.a + &other.a, &self.b + &other.b, d))
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self, NumericError> {
        let d = self.common_radicand(other)?;
        Ok(Self::build(&self.a - &other.a, &self.b - &other.b, d))
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self, NumericError> {
        let d = self.common_radicand(other)?;
        let rd = Rational::from(d as i64);
        let a = &self.a * &other.a + &(&self.b * &other.b) * &rd;
        let b = &self.a * &other.b + &other.a * &self.b;
        Ok(Self::build(a, b, d))
    }

    pub fn checked_div(&self, other: &Self) -> Result<Self, NumericError> {
        self.common_radicand(other)?;
        self.checked_mul(&other.inverse()?)
    }

    pub fn neg(&self) -> Self {
        Self::build(-&self.a, -&self.b, self.d)
    }

    pub fn conjugate(&self) -> Self {
        Self::build(self.a.clone(), -&self.b, self.d)
    }

    /// Field norm `a² − d·b²`.
    pub fn norm(&self) -> Rational {
        let d = Rational::from(self.d as i64);
        &self.a * &self.a - &(&self.b * &self.b) * &d
    }

    pub fn inverse(&self) -> Result<Self, NumericError> {
        if self.is_zero() {
            return Err(NumericError::DivisionByZero);
        }
        let n = self.norm().recip()?;
        Ok(Self::build(&self.a * &n, -(&self.b * &n), self.d))
    }

    pub fn scale(&self, k: &Rational) -> Self {
        Self::build(&self.a * k, &self.b * k, self.d)
    }

    pub fn to_f64(&self) -> f64 {
        if self.b.is_zero() {
            self.a.to_f64()
        } else {
            self.a.to_f64() + self.b.to_f64() * (self.d as f64).sqrt()
        }
    }

    /// Exact sign, decided without floating point.
    pub fn signum(&self) -> i32 {
        let sa = sign(&self.a);
        let sb = sign(&self.b);
        if sb == 0 {
            return sa;
        }
        if sa == 0 || sa == sb {
            return if sa == 0 { sb } else { sa };
        }
        // opposite signs: compare a² with d·b²
        let a2 = &self.a * &self.a;
        let db2 = &(&self.b * &self.b) * &Rational::from(self.d as i64);
        if a2 > db2 {
            sa
        } else {
            sb
        }
    }
}

fn sign(r: &Rational) -> i32 {
    if r.is_positive() {
        1
    } else if r.is_negative() {
        -1
    } else {
        0
    }
}

impl PartialEq for QuadraticNumber {
    fn eq(&self, other: &Self) -> bool {
        self.a == other.a && self.b == other.b && (self.b.is_zero() || self.d == other.d)
    }
}

impl Eq for QuadraticNumber {}

impl From<Rational> for QuadraticNumber {
    fn from(r: Rational) -> Self {
        QuadraticNumber::rational(r)
    }
}

fn fmt_surd_part(f: &mut fmt::Formatter<'_>, b: &Rational, d: u64) -> fmt::Result {
    if b.is_one() {
        write!(f, "√{d}")
    } else if b.is_integer() {
        write!(f, "{b}√{d}")
    } else {
        write!(f, "({b})√{d}")
    }
}

impl fmt::Display for QuadraticNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b.is_zero() {
            return write!(f, "{}", self.a);
        }
        if !self.a.is_zero() {
            write!(f, "{}", self.a)?;
            if self.b.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            fmt_surd_part(f, &self.b.abs(), self.d)
        } else {
            if self.b.is_negative() {
                write!(f, "-")?;
            }
            fmt_surd_part(f, &self.b.abs(), self.d)
        }
    }
}

impl fmt::Debug for QuadraticNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} + {}√{}", self.a, self.b, self.d)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(a: (i64, i64), b: (i64, i64)) -> QuadraticNumber {
        QuadraticNumber::new(
            Rational::new(a.0, a.1).unwrap(),
            Rational::new(b.0, b.1).unwrap(),
            3,
        )
        .unwrap()
    }

    #[test]
    fn multiplication_examples() {
        let prod = q((1, 1), (1, 1)).checked_mul(&q((1, 1), (-1, 1))).unwrap();
        assert_eq!(prod, QuadraticNumber::from_int(-2));
        let sq = q((0, 1), (1, 1)).checked_mul(&q((0, 1), (1, 1))).unwrap();
        assert_eq!(sq, QuadraticNumber::from_int(3));
        let p = q((0, 1), (2, 3)).checked_mul(&q((0, 1), (-2, 3))).unwrap();
        assert_eq!(p, QuadraticNumber::rational(Rational::new(-4, 3).unwrap()));
    }

    #[test]
    fn conjugate_examples() {
        assert_eq!(q((1, 1), (2, 1)).conjugate(), q((1, 1), (-2, 1)));
        let five = q((5, 1), (0, 1));
        assert_eq!(five.conjugate(), five);
        let x = q((1, 1), (1, 1));
        let n = x.conjugate().checked_mul(&x).unwrap();
        assert!(n.is_rational());
        assert_eq!(n, QuadraticNumber::from_int(-2));
    }

    #[test]
    fn mixed_radicands_rejected() {
        let s2 = QuadraticNumber::sqrt(2).unwrap();
        let s3 = QuadraticNumber::sqrt(3).unwrap();
        assert_eq!(s2.checked_mul(&s3), Err(NumericError::MixedField(2, 3)));
        assert_eq!(s2.checked_add(&s3), Err(NumericError::MixedField(2, 3)));
        // a rational operand combines with any field
        let r = QuadraticNumber::new(Rational::from(4), Rational::zero(), 7).unwrap();
        assert!(s2.checked_mul(&r).is_ok());
    }

    #[test]
    fn radicand_validation() {
        assert!(validate_radicand(3).is_ok());
        assert!(validate_radicand(30).is_ok());
        assert_eq!(validate_radicand(12), Err(NumericError::BadRadicand(12)));
        assert_eq!(validate_radicand(1), Err(NumericError::BadRadicand(1)));
        assert_eq!(validate_radicand(0), Err(NumericError::BadRadicand(0)));
        assert!(validate_radicand(999_983 * 999_983).is_err());
    }

    #[test]
    fn inverse_and_sign() {
        let x = q((1, 1), (1, 1));
        let one = x.checked_mul(&x.inverse().unwrap()).unwrap();
        assert_eq!(one, QuadraticNumber::one());
        assert!(QuadraticNumber::zero().inverse().is_err());
        assert_eq!(q((2, 1), (-1, 1)).signum(), 1); // 2 - √3
        assert_eq!(q((1, 1), (-1, 1)).signum(), -1); // 1 - √3
        assert_eq!(q((0, 1), (-1, 1)).signum(), -1);
    }

    #[test]
    fn display() {
        assert_eq!(q((0, 1), (2, 3)).to_string(), "(2/3)√3");
        assert_eq!(q((1, 1), (-1, 1)).to_string(), "1 - √3");
        assert_eq!(q((5, 1), (0, 1)).to_string(), "5");
    }
}
