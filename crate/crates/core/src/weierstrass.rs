//! Weierstrass models, their standard derived quantities, coordinate
//! changes, integral models, and quadratic twists.

use crate::error::{Error, Result};
use crate::field::{FieldElement, QuadraticField};
use crate::place::LocalPlace;

/// A nonsingular long Weierstrass equation
/// y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeierstrassModel {
    pub a1: FieldElement,
    pub a2: FieldElement,
    pub a3: FieldElement,
    pub a4: FieldElement,
    pub a6: FieldElement,
}

/// The b-, c-invariants, discriminant, and j-invariant of a model.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DerivedQuantities {
    pub b2: FieldElement,
    pub b4: FieldElement,
    pub b6: FieldElement,
    pub b8: FieldElement,
    pub c4: FieldElement,
    pub c6: FieldElement,
    pub delta: FieldElement,
    pub j: FieldElement,
}

impl WeierstrassModel {
    /// Build a model, rejecting singular equations.
    pub fn new(
        a1: FieldElement,
        a2: FieldElement,
        a3: FieldElement,
        a4: FieldElement,
        a6: FieldElement,
    ) -> Result<Self> {
        let m = WeierstrassModel { a1, a2, a3, a4, a6 };
        if m.discriminant().is_zero() {
            return Err(Error::SingularModel);
        }
        Ok(m)
    }

    /// Short model y^2 = x^3 + a4 x + a6.
    pub fn short(field: QuadraticField, a4: FieldElement, a6: FieldElement) -> Result<Self> {
        let z = field.int(0);
        WeierstrassModel::new(z.clone(), z.clone(), z, a4, a6)
    }

    pub fn field(&self) -> QuadraticField {
        [&self.a1, &self.a2, &self.a3, &self.a4, &self.a6]
            .into_iter()
            .map(|a| a.field())
            .find(|f| !f.is_rational())
            .unwrap_or(QuadraticField::Rational)
    }

    fn discriminant(&self) -> FieldElement {
        self.derived_unchecked().delta
    }

    fn derived_unchecked(&self) -> DerivedQuantities {
        let (a1, a2, a3, a4, a6) = (&self.a1, &self.a2, &self.a3, &self.a4, &self.a6);
        let k = |n: i64| FieldElement::from_int(QuadraticField::RATIONAL, n);
        let b2 = a1 * a1 + k(4) * a2;
        let b4 = k(2) * a4 + a1 * a3;
        let b6 = a3 * a3 + k(4) * a6;
        let b8 = a1 * a1 * a6 + k(4) * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4;
        let c4 = &b2 * &b2 - k(24) * &b4;
        let c6 = -(&b2 * &b2 * &b2) + k(36) * &b2 * &b4 - k(216) * &b6;
        let delta = -(&b2 * &b2 * &b8) - k(8) * &b4 * &b4 * &b4 - k(27) * &b6 * &b6
            + k(9) * &b2 * &b4 * &b6;
        let j = if delta.is_zero() {
            k(0)
        } else {
            &(&(&c4 * &c4) * &c4) / &delta
        };
        DerivedQuantities {
            b2,
            b4,
            b6,
            b8,
            c4,
            c6,
            delta,
            j,
        }
    }

    /// Standard derived quantities; errors on a singular equation.
    pub fn derived(&self) -> Result<DerivedQuantities> {
        let d = self.derived_unchecked();
        if d.delta.is_zero() {
            return Err(Error::SingularModel);
        }
        debug_assert!(d.check_identities());
        Ok(d)
    }

    /// Apply the substitution x = u^2 x' + r, y = u^3 y' + s u^2 x' + t.
    pub fn apply_transform(&self, t: &Transform) -> Result<WeierstrassModel> {
        if t.u.is_zero() {
            return Err(Error::ZeroScale);
        }
        let (u, r, s, tt) = (&t.u, &t.r, &t.s, &t.t);
        let k = |n: i64| FieldElement::from_int(QuadraticField::RATIONAL, n);
        let ui = |e: u32| u.pow(e).inverse().expect("u != 0");
        let a1 = &(&self.a1 + &(k(2) * s)) * &ui(1);
        let a2 = &(&self.a2 - &(s * &self.a1) + &(k(3) * r) - &(s * s)) * &ui(2);
        let a3 = &(&self.a3 + &(r * &self.a1) + &(k(2) * tt)) * &ui(3);
        let a4 = &(&self.a4 - &(s * &self.a3) + &(k(2) * r * &self.a2)
            - &(&(tt + &(r * s)) * &self.a1)
            + &(k(3) * r * r)
            - &(k(2) * s * tt))
            * &ui(4);
        let a6 = &(&self.a6 + &(r * &self.a4) + &(r * r * &self.a2) + &(r * r * r)
            - &(tt * &self.a3)
            - &(tt * tt)
            - &(r * tt * &self.a1))
            * &ui(6);
        WeierstrassModel::new(a1, a2, a3, a4, a6)
    }

    /// Rescale by u = pi^{-k} with the least k >= 0 making every a_i
    /// integral at the place.
    pub fn integralize(&self, place: &LocalPlace) -> (WeierstrassModel, Transform) {
        let needed = [
            (&self.a1, 1i64),
            (&self.a2, 2),
            (&self.a3, 3),
            (&self.a4, 4),
            (&self.a6, 6),
        ]
        .iter()
        .map(|(a, w)| match place.valuation(a) {
            crate::place::Valuation::Infinity => 0,
            crate::place::Valuation::Finite(v) if v >= 0 => 0,
            crate::place::Valuation::Finite(v) => (-v + w - 1) / w,
        })
        .max()
        .unwrap_or(0);
        if needed == 0 {
            return (self.clone(), Transform::identity(self.field()));
        }
        let pi = place.uniformizer();
        let u = pi
            .pow(needed as u32)
            .inverse()
            .expect("uniformizer is nonzero");
        let t = Transform::scale(u);
        let m = self.apply_transform(&t).expect("u != 0");
        (m, t)
    }

    /// The quadratic twist by d, via completing the square over the field
    /// (characteristic 0, so always legal) and substituting x -> x/d,
    /// y -> y/d^2 after scaling the quadratic character in.
    pub fn quadratic_twist(&self, d: &FieldElement) -> Result<WeierstrassModel> {
        if d.is_zero() {
            return Err(Error::ZeroTwist);
        }
        let der = self.derived()?;
        let k = |n: i64| FieldElement::from_int(QuadraticField::RATIONAL, n);
        // completed square: y^2 = x^3 + (b2/4) x^2 + (b4/2) x + b6/4
        let m2 = &der.b2 / &k(4);
        let m4 = &der.b4 / &k(2);
        let m6 = &der.b6 / &k(4);
        let field = self.field();
        let z = field.int(0);
        WeierstrassModel::new(
            z.clone(),
            &m2 * d,
            z,
            &m4 * &(d * d),
            &m6 * &(d * d * d),
        )
    }
}

impl DerivedQuantities {
    /// The three defining identities, exactly.
    pub fn check_identities(&self) -> bool {
        let k = |n: i64| FieldElement::from_int(QuadraticField::RATIONAL, n);
        let id1 = k(1728) * &self.delta == &(&self.c4 * &self.c4) * &self.c4 - &self.c6 * &self.c6;
        let id2 = k(4) * &self.b8 == &self.b2 * &self.b6 - &self.b4 * &self.b4;
        let id3 = &self.j * &self.delta == &(&self.c4 * &self.c4) * &self.c4;
        id1 && id2 && id3
    }
}

/// An invertible change of Weierstrass coordinates (u, r, s, t).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Transform {
    pub u: FieldElement,
    pub r: FieldElement,
    pub s: FieldElement,
    pub t: FieldElement,
}

impl Transform {
    pub fn new(u: FieldElement, r: FieldElement, s: FieldElement, t: FieldElement) -> Result<Self> {
        if u.is_zero() {
            return Err(Error::ZeroScale);
        }
        Ok(Transform { u, r, s, t })
    }

    pub fn identity(field: QuadraticField) -> Self {
        Transform {
            u: field.int(1),
            r: field.int(0),
            s: field.int(0),
            t: field.int(0),
        }
    }

    pub fn scale(u: FieldElement) -> Self {
        let field = u.field();
        Transform {
            u,
            r: field.int(0),
            s: field.int(0),
            t: field.int(0),
        }
    }

    pub fn translate(r: FieldElement, t: FieldElement) -> Self {
        let field = r.field();
        Transform {
            u: field.int(1),
            r,
            s: field.int(0),
            t,
        }
    }

    pub fn shear(s: FieldElement, t: FieldElement) -> Self {
        let field = s.field();
        Transform {
            u: field.int(1),
            r: field.int(0),
            s,
            t,
        }
    }

    /// The transform equal to applying `self` first and `next` second.
    pub fn then(&self, next: &Transform) -> Transform {
        let u1sq = &self.u * &self.u;
        Transform {
            u: &self.u * &next.u,
            r: &self.r + &(&u1sq * &next.r),
            s: &self.s + &(&self.u * &next.s),
            t: &self.t + &(&u1sq * &self.s * &next.r) + &(&(&u1sq * &self.u) * &next.t),
        }
    }
}
