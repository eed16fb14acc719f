//! Exact arithmetic in Q and in quadratic fields Q(sqrt(D)).
//!
//! Elements are stored as `(a + b*sqrt(D))/c` in lowest terms with `c > 0`,
//! which keeps Q (where `b = 0`) and Q(sqrt(D)) uniform.

use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

/// Q itself, or a quadratic field Q(sqrt(D)) for a squarefree D != 0, 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum QuadraticField {
    Rational,
    Quadratic { d: i64 },
}

fn is_squarefree(n: i64) -> bool {
    let mut n = n.unsigned_abs();
    if n == 0 {
        return false;
    }
    let mut p = 2u64;
    while p.saturating_mul(p) <= n {
        if n.is_multiple_of(p) {
            n /= p;
            if n.is_multiple_of(p) {
                return false;
            }
        }
        p += 1;
    }
    true
}

impl QuadraticField {
    pub const RATIONAL: QuadraticField = QuadraticField::Rational;

    /// Q(sqrt(d)) for squarefree d, d != 0, 1.
    pub fn quadratic(d: i64) -> Result<Self> {
        if d == 0 || d == 1 || !is_squarefree(d) {
            return Err(Error::InvalidField(d));
        }
        Ok(QuadraticField::Quadratic { d })
    }

    pub fn is_rational(&self) -> bool {
        matches!(self, QuadraticField::Rational)
    }

    pub fn d(&self) -> Option<i64> {
        match self {
            QuadraticField::Rational => None,
            QuadraticField::Quadratic { d } => Some(*d),
        }
    }

    /// Field discriminant: D if D = 1 mod 4, else 4D.
    pub fn discriminant(&self) -> Option<i64> {
        self.d()
            .map(|d| if d.rem_euclid(4) == 1 { d } else { 4 * d })
    }

    pub fn is_imaginary(&self) -> bool {
        matches!(self, QuadraticField::Quadratic { d } if *d < 0)
    }

    /// The element n/1.
    pub fn int(&self, n: i64) -> FieldElement {
        FieldElement::new(*self, BigInt::from(n), BigInt::zero(), BigInt::one())
    }

    /// The element (a + b*sqrt(D))/c. Panics if c = 0 or if b != 0 over Q.
    pub fn elem(&self, a: i64, b: i64, c: i64) -> FieldElement {
        FieldElement::new(*self, BigInt::from(a), BigInt::from(b), BigInt::from(c))
    }

    /// sqrt(D) as an element; panics over Q.
    pub fn sqrt_d(&self) -> FieldElement {
        assert!(!self.is_rational(), "Q has no adjoined square root");
        self.elem(0, 1, 1)
    }

    /// Module generator of the ring of integers over Z:
    /// (1 + sqrt(D))/2 when D = 1 mod 4, sqrt(D) otherwise.
    pub fn integral_generator(&self) -> FieldElement {
        let d = self.d().expect("quadratic field required");
        if d.rem_euclid(4) == 1 {
            self.elem(1, 1, 2)
        } else {
            self.sqrt_d()
        }
    }
}

impl fmt::Display for QuadraticField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            QuadraticField::Rational => write!(f, "Q"),
            QuadraticField::Quadratic { d } => write!(f, "Q(sqrt({d}))"),
        }
    }
}

/// An element (a + b*sqrt(D))/c in lowest terms, c > 0; b = 0 over Q.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FieldElement {
    field: QuadraticField,
    a: BigInt,
    b: BigInt,
    c: BigInt,
}

impl FieldElement {
    pub fn new(field: QuadraticField, a: BigInt, b: BigInt, c: BigInt) -> Self {
        assert!(!c.is_zero(), "denominator must be nonzero");
        assert!(
            !(field.is_rational() && !b.is_zero()),
            "rational elements have no sqrt(D) part"
        );
        let mut e = FieldElement { field, a, b, c };
        e.normalize();
        e
    }

    pub fn from_int(field: QuadraticField, n: impl Into<BigInt>) -> Self {
        FieldElement::new(field, n.into(), BigInt::zero(), BigInt::one())
    }

    fn normalize(&mut self) {
        if self.c.is_negative() {
            self.a = -std::mem::take(&mut self.a);
            self.b = -std::mem::take(&mut self.b);
            self.c = -std::mem::take(&mut self.c);
        }
        let g = self.a.gcd(&self.b).gcd(&self.c);
        if !g.is_one() {
            self.a /= &g;
            self.b /= &g;
            self.c /= &g;
        }
    }

    pub fn field(&self) -> QuadraticField {
        self.field
    }

    /// Numerator coefficient of 1.
    pub fn a(&self) -> &BigInt {
        &self.a
    }

    /// Numerator coefficient of sqrt(D).
    pub fn b(&self) -> &BigInt {
        &self.b
    }

    /// Denominator, always positive.
    pub fn c(&self) -> &BigInt {
        &self.c
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn is_rational_value(&self) -> bool {
        self.b.is_zero()
    }

    /// Exact rational value as (numerator, denominator), if b = 0.
    pub fn as_rational(&self) -> Option<(BigInt, BigInt)> {
        self.b.is_zero().then(|| (self.a.clone(), self.c.clone()))
    }

    /// True when this element equals the integer n.
    pub fn eq_int(&self, n: i64) -> bool {
        self.b.is_zero() && self.c.is_one() && self.a == BigInt::from(n)
    }

    /// Two elements live in a common field when their fields agree or one is Q.
    fn unify(&self, other: &Self) -> QuadraticField {
        match (self.field, other.field) {
            (f, g) if f == g => f,
            (QuadraticField::Rational, g) => g,
            (f, QuadraticField::Rational) => f,
            _ => panic!("field mismatch: {} vs {}", self.field, other.field),
        }
    }

    fn d_of(field: QuadraticField) -> BigInt {
        BigInt::from(field.d().unwrap_or(0))
    }

    pub fn conjugate(&self) -> Self {
        FieldElement::new(self.field, self.a.clone(), -self.b.clone(), self.c.clone())
    }

    /// Field norm to Q as (numerator, denominator) = ((a^2 - D b^2), c^2).
    pub fn norm(&self) -> (BigInt, BigInt) {
        let d = Self::d_of(self.field);
        (&self.a * &self.a - d * &self.b * &self.b, &self.c * &self.c)
    }

    pub fn inverse(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        // ((a + b sqrt D)/c)^-1 = c (a - b sqrt D) / (a^2 - D b^2)
        let (n, _) = self.norm();
        Ok(FieldElement::new(
            self.field,
            &self.a * &self.c,
            -(&self.b * &self.c),
            n,
        ))
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut out = FieldElement::from_int(self.field, 1);
        for _ in 0..e {
            out = &out * self;
        }
        out
    }
}

impl Add for &FieldElement {
    type Output = FieldElement;
    fn add(self, rhs: &FieldElement) -> FieldElement {
        let field = self.unify(rhs);
        FieldElement::new(
            field,
            &self.a * &rhs.c + &rhs.a * &self.c,
            &self.b * &rhs.c + &rhs.b * &self.c,
            &self.c * &rhs.c,
        )
    }
}

impl Sub for &FieldElement {
    type Output = FieldElement;
    fn sub(self, rhs: &FieldElement) -> FieldElement {
        self + &(-rhs)
    }
}

impl Neg for &FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        FieldElement::new(self.field, -self.a.clone(), -self.b.clone(), self.c.clone())
    }
}

impl Mul for &FieldElement {
    type Output = FieldElement;
    fn mul(self, rhs: &FieldElement) -> FieldElement {
        let field = self.unify(rhs);
        let d = FieldElement::d_of(field);
        FieldElement::new(
            field,
            &self.a * &rhs.a + &d * &self.b * &rhs.b,
            &self.a * &rhs.b + &self.b * &rhs.a,
            &self.c * &rhs.c,
        )
    }
}

impl Div for &FieldElement {
    type Output = FieldElement;
    #[allow(clippy::suspicious_arithmetic_impl)] // division is multiplication by the inverse
    fn div(self, rhs: &FieldElement) -> FieldElement {
        self * &rhs.inverse().expect("division by zero field element")
    }
}

macro_rules! forward_owned {
    ($trait:ident, $method:ident) => {
        impl $trait for FieldElement {
            type Output = FieldElement;
            fn $method(self, rhs: FieldElement) -> FieldElement {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&FieldElement> for FieldElement {
            type Output = FieldElement;
            fn $method(self, rhs: &FieldElement) -> FieldElement {
                (&self).$method(rhs)
            }
        }
        impl $trait<FieldElement> for &FieldElement {
            type Output = FieldElement;
            fn $method(self, rhs: FieldElement) -> FieldElement {
                self.$method(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
forward_owned!(Div, div);

impl Neg for FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        -&self
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b.is_zero() {
            if self.c.is_one() {
                write!(f, "{}", self.a)
            } else {
                write!(f, "{}/{}", self.a, self.c)
            }
        } else if self.c.is_one() {
            write!(f, "{}+{}*sqrt({})", self.a, self.b, self.field.d().unwrap())
        } else {
            write!(
                f,
                "({}+{}*sqrt({}))/{}",
                self.a,
                self.b,
                self.field.d().unwrap(),
                self.c
            )
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn squarefree_gate() {
        assert!(QuadraticField::quadratic(-7).is_ok());
        assert!(QuadraticField::quadratic(12).is_err());
        assert!(QuadraticField::quadratic(0).is_err());
        assert!(QuadraticField::quadratic(1).is_err());
        assert!(QuadraticField::quadratic(-4).is_err());
    }

    #[test]
    fn discriminants() {
        assert_eq!(QuadraticField::quadratic(-7).unwrap().discriminant(), Some(-7));
        assert_eq!(QuadraticField::quadratic(-1).unwrap().discriminant(), Some(-4));
        assert_eq!(QuadraticField::quadratic(-11).unwrap().discriminant(), Some(-11));
        assert_eq!(QuadraticField::quadratic(-3).unwrap().discriminant(), Some(-3));
        assert_eq!(QuadraticField::quadratic(-5).unwrap().discriminant(), Some(-20));
    }

    #[test]
    fn arithmetic_closes_and_normalizes() {
        let k = QuadraticField::quadratic(-7).unwrap();
        let a = k.elem(1, 1, 2); // (1+sqrt(-7))/2
        let n = &a * &a.conjugate();
        assert!(n.eq_int(2), "N((1+sqrt(-7))/2) = 2, got {n}");
        let s = &a + &a.conjugate();
        assert!(s.eq_int(1));
        // (a + conj - 1) = 0 normalizes to the canonical zero
        let z = &s - &k.int(1);
        assert!(z.is_zero());
        assert!(z.c().is_one());
    }

    #[test]
    fn division_round_trip() {
        let k = QuadraticField::quadratic(-11).unwrap();
        let x = k.elem(3, -2, 5);
        let y = k.elem(-1, 7, 3);
        let q = &x / &y;
        assert_eq!(&q * &y, x);
    }

    #[test]
    fn rational_mixes_into_quadratic() {
        let k = QuadraticField::quadratic(-3).unwrap();
        let two = FieldElement::from_int(QuadraticField::RATIONAL, 2);
        let w = k.elem(1, 1, 2);
        let sum = &w + &two;
        assert_eq!(sum, k.elem(5, 1, 2));
    }

    #[test]
    #[should_panic]
    fn mismatched_fields_panic() {
        let x = QuadraticField::quadratic(-7).unwrap().int(1);
        let y = QuadraticField::quadratic(-11).unwrap().int(1);
        let _ = &x + &y;
    }
}
