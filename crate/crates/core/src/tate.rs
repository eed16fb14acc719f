//! The step-by-step reduction algorithm over the supported local places:
//! Kodaira type, minimal model, minimal discriminant valuation, and
//! component group data.
//!
//! The implementation follows the classical formulation over a complete
//! discrete valuation ring with perfect residue field, with every residue
//! computation delegated to exhaustive root finding in F_{p^f}. There are
//! no characteristic-specific shortcut tables; the residue characteristic
//! 2 and 3 sub-cases flow through the same steps, with root multiplicities
//! (which always live in the residue field for the degrees involved)
//! driving the coordinate shifts.

use crate::error::Result;
use crate::field::FieldElement;
use crate::kodaira::{geometric_component_group, AbelianGroup, KodairaType};
use crate::place::{LocalPlace, Valuation};
use crate::residue::{ResidueElem, RootReport};
use crate::weierstrass::{Transform, WeierstrassModel};
use serde::Serialize;

/// Everything the algorithm reports about a model at a place.
#[derive(Debug, Clone, Serialize)]
pub struct LocalData {
    pub kodaira: KodairaType,
    pub v_delta_min: u32,
    /// Order of the component group over the actual (finite) residue field:
    /// the Tamagawa-style local component order.
    pub c_local: u64,
    /// Component group over the algebraic closure of the residue field.
    pub phi_geom: AbelianGroup,
    /// v(Delta_min) - (components - 1), exposed only for residue
    /// characteristic >= 5; wild conductor contributions are out of scope.
    pub conductor_exponent: Option<u32>,
    #[serde(skip)]
    pub minimal_model: WeierstrassModel,
    #[serde(skip)]
    pub transform: Transform,
}

/// Projection of the full algorithm onto the minimal model.
pub fn minimal_model(
    model: &WeierstrassModel,
    place: &LocalPlace,
) -> Result<(WeierstrassModel, Transform)> {
    let data = tate_algorithm(model, place)?;
    Ok((data.minimal_model, data.transform))
}

struct Ctx<'a> {
    place: &'a LocalPlace,
    pi: FieldElement,
    model: WeierstrassModel,
    acc: Transform,
}

impl<'a> Ctx<'a> {
    fn v(&self, x: &FieldElement) -> Valuation {
        self.place.valuation(x)
    }

    fn apply(&mut self, t: Transform) {
        self.model = self.model.apply_transform(&t).expect("invertible transform");
        self.acc = self.acc.then(&t);
    }

    /// a_i / pi^k reduced into the residue field; requires v(a_i) >= k.
    fn digit(&self, x: &FieldElement, k: u32) -> ResidueElem {
        let scaled = x / &self.pi.pow(k);
        self.place.reduce(&scaled).expect("digit must be integral")
    }

    fn solve(&self, poly: &[ResidueElem]) -> RootReport {
        self.place
            .residue_field()
            .solve(poly)
            .expect("nonzero residue polynomial")
    }

    /// Lift of a residue element times pi^k.
    fn lift_at(&self, x: ResidueElem, k: u32) -> FieldElement {
        &self.place.lift(x) * &self.pi.pow(k)
    }
}

/// Run the full algorithm. The model need not be integral or minimal: it is
/// made integral first, and the final step rescales and restarts whenever it
/// detects non-minimality.
pub fn tate_algorithm(model: &WeierstrassModel, place: &LocalPlace) -> Result<LocalData> {
    if !model.field().is_rational() && model.field() != place.field() {
        return Err(crate::error::Error::FieldMismatch);
    }
    model.derived()?; // reject singular input early
    let (integral, tr0) = model.integralize(place);
    let mut ctx = Ctx {
        place,
        pi: place.uniformizer(),
        model: integral,
        acc: tr0,
    };

    loop {
        match run_steps(&mut ctx)? {
            Some((kodaira, c_local)) => {
                let der = ctx.model.derived()?;
                let v_delta_min = match ctx.v(&der.delta) {
                    Valuation::Finite(v) => {
                        debug_assert!(v >= 0);
                        v as u32
                    }
                    Valuation::Infinity => unreachable!("nonsingular model"),
                };
                let phi_geom = geometric_component_group(kodaira);
                debug_assert_eq!(phi_geom.order() % c_local, 0);
                let conductor_exponent = (place.residue_characteristic() >= 5)
                    .then(|| v_delta_min + 1 - kodaira.components());
                return Ok(LocalData {
                    kodaira,
                    v_delta_min,
                    c_local,
                    phi_geom,
                    conductor_exponent,
                    minimal_model: ctx.model.clone(),
                    transform: ctx.acc.clone(),
                });
            }
            None => {
                // non-minimal equation: rescale a_i -> a_i / pi^i and restart
                let u = ctx.pi.clone();
                ctx.apply(Transform::scale(u));
            }
        }
    }
}

/// One pass of steps 1-10; `None` signals the non-minimality restart.
fn run_steps(ctx: &mut Ctx) -> Result<Option<(KodairaType, u64)>> {
    let der = ctx.model.derived()?;
    let v_delta = match ctx.v(&der.delta) {
        Valuation::Finite(v) => v,
        Valuation::Infinity => unreachable!("nonsingular model"),
    };
    debug_assert!(v_delta >= 0, "model must be integral here");

    // Step 1: good reduction.
    if v_delta == 0 {
        return Ok(Some((KodairaType::I(0), 1)));
    }
    let n = v_delta as u32;

    // Move the singular point of the reduced curve to the origin. It is
    // unique over the closure, hence rational over the residue field.
    let (x0, y0) = singular_point(ctx);
    ctx.apply(Transform::translate(ctx.lift_at(x0, 0), ctx.lift_at(y0, 0)));
    let der = ctx.model.derived()?;

    // Step 2: a node (v(b2) = 0) gives multiplicative reduction I_n. The
    // tangent directions split according to T^2 + a1 T - a2 mod pi.
    if ctx.v(&der.b2) == Valuation::Finite(0) {
        let rf = ctx.place.residue_field();
        let poly = [
            rf.neg(ctx.digit(&ctx.model.a2, 0)),
            ctx.digit(&ctx.model.a1, 0),
            ResidueElem::ONE,
        ];
        let split = !ctx.solve(&poly).roots.is_empty();
        let c = if split {
            n as u64
        } else if n.is_multiple_of(2) {
            2
        } else {
            1
        };
        return Ok(Some((KodairaType::I(n), c)));
    }

    // Additive reduction; the cusp at the origin makes pi divide a3, a4, a6.
    debug_assert!(ctx.v(&ctx.model.a3).at_least(1));
    debug_assert!(ctx.v(&ctx.model.a4).at_least(1));
    debug_assert!(ctx.v(&ctx.model.a6).at_least(1));

    // Step 3.
    if !ctx.v(&ctx.model.a6).at_least(2) {
        return Ok(Some((KodairaType::II, 1)));
    }
    // Step 4.
    if !ctx.v(&der.b8).at_least(3) {
        return Ok(Some((KodairaType::III, 2)));
    }
    // Step 5: type IV with the auxiliary quadratic Y^2 + a_{3,1} Y - a_{6,2}.
    if !ctx.v(&der.b6).at_least(3) {
        let rf = ctx.place.residue_field();
        let poly = [
            rf.neg(ctx.digit(&ctx.model.a6, 2)),
            ctx.digit(&ctx.model.a3, 1),
            ResidueElem::ONE,
        ];
        let c = 1 + ctx.solve(&poly).roots.len() as u64;
        return Ok(Some((KodairaType::IV, c)));
    }

    // Step 6 preparation: arrange pi | a1, a2; pi^2 | a3, a4; pi^3 | a6.
    // The tangent-cone quadratic T^2 + a1 T - a2 has a double root (cusp),
    // and so does X^2 + a_{3,1} X - a_{6,2} (its discriminant is b6/pi^2);
    // shifting by their lifted roots produces the divisibilities uniformly
    // in every residue characteristic.
    {
        let rf = ctx.place.residue_field();
        let cone = [
            rf.neg(ctx.digit(&ctx.model.a2, 0)),
            ctx.digit(&ctx.model.a1, 0),
            ResidueElem::ONE,
        ];
        let (s0, _) = ctx
            .solve(&cone)
            .multiple_root()
            .expect("cusp tangent cone has a double root");
        ctx.apply(Transform::shear(ctx.lift_at(s0, 0), ctx.model.a1.field().int(0)));

        let rf = ctx.place.residue_field();
        let q = [
            rf.neg(ctx.digit(&ctx.model.a6, 2)),
            ctx.digit(&ctx.model.a3, 1),
            ResidueElem::ONE,
        ];
        let (t0, _) = ctx
            .solve(&q)
            .multiple_root()
            .expect("step-6 quadratic has a double root since pi^3 | b6");
        let zero = ctx.model.a1.field().int(0);
        ctx.apply(Transform::shear(zero, ctx.lift_at(t0, 1)));
    }
    debug_assert!(ctx.v(&ctx.model.a1).at_least(1));
    debug_assert!(ctx.v(&ctx.model.a2).at_least(1));
    debug_assert!(ctx.v(&ctx.model.a3).at_least(2));
    debug_assert!(ctx.v(&ctx.model.a4).at_least(2));
    debug_assert!(ctx.v(&ctx.model.a6).at_least(3));

    // Step 6: the cubic P(T) = T^3 + a_{2,1} T^2 + a_{4,2} T + a_{6,3}.
    let p_poly = [
        ctx.digit(&ctx.model.a6, 3),
        ctx.digit(&ctx.model.a4, 2),
        ctx.digit(&ctx.model.a2, 1),
        ResidueElem::ONE,
    ];
    let report = ctx.solve(&p_poly);
    if report.separable {
        let c = 1 + report.roots.len() as u64;
        return Ok(Some((KodairaType::IStar(0), c)));
    }
    let (theta, mult) = report
        .multiple_root()
        .expect("inseparable cubic has its multiple root in the residue field");

    if mult == 2 {
        // Step 7: I_n* for some n >= 1. Translate the double root to zero,
        // then probe quadratics alternately in Y and X at climbing levels.
        let zero = ctx.model.a1.field().int(0);
        ctx.apply(Transform::translate(ctx.lift_at(theta, 1), zero));
        debug_assert_eq!(ctx.v(&ctx.model.a2), Valuation::Finite(1));
        debug_assert!(ctx.v(&ctx.model.a3).at_least(2));
        debug_assert!(ctx.v(&ctx.model.a4).at_least(3));
        debug_assert!(ctx.v(&ctx.model.a6).at_least(4));

        let mut q = 1u32;
        loop {
            // odd n = 2q - 1: Y^2 + a_{3,q+1} Y - a_{6,2q+2}
            let rf = ctx.place.residue_field();
            let y_poly = [
                rf.neg(ctx.digit(&ctx.model.a6, 2 * q + 2)),
                ctx.digit(&ctx.model.a3, q + 1),
                ResidueElem::ONE,
            ];
            let rep = ctx.solve(&y_poly);
            if rep.separable {
                let c = 2 + rep.roots.len() as u64;
                return Ok(Some((KodairaType::IStar(2 * q - 1), c)));
            }
            let (y0, _) = rep.multiple_root().expect("double root lies in the field");
            let zero = ctx.model.a1.field().int(0);
            ctx.apply(Transform::shear(zero, ctx.lift_at(y0, q + 1)));
            debug_assert!(ctx.v(&ctx.model.a3).at_least((q + 2) as i64));
            debug_assert!(ctx.v(&ctx.model.a6).at_least((2 * q + 3) as i64));

            // even n = 2q: a_{2,1} X^2 + a_{4,q+2} X + a_{6,2q+3}
            let x_poly = [
                ctx.digit(&ctx.model.a6, 2 * q + 3),
                ctx.digit(&ctx.model.a4, q + 2),
                ctx.digit(&ctx.model.a2, 1),
            ];
            let rep = ctx.solve(&x_poly);
            if rep.separable {
                let c = 2 + rep.roots.len() as u64;
                return Ok(Some((KodairaType::IStar(2 * q), c)));
            }
            let (x1, _) = rep.multiple_root().expect("double root lies in the field");
            let zero = ctx.model.a1.field().int(0);
            ctx.apply(Transform::translate(ctx.lift_at(x1, q + 1), zero));
            debug_assert!(ctx.v(&ctx.model.a4).at_least((q + 3) as i64));
            debug_assert!(ctx.v(&ctx.model.a6).at_least((2 * q + 4) as i64));

            q += 1;
            assert!(
                2 * q <= n,
                "I_n* probing exceeded v(Delta); the step bookkeeping is broken"
            );
        }
    }

    // Step 8: triple root; move it to zero.
    let zero = ctx.model.a1.field().int(0);
    ctx.apply(Transform::translate(ctx.lift_at(theta, 1), zero));
    debug_assert!(ctx.v(&ctx.model.a2).at_least(2));
    debug_assert!(ctx.v(&ctx.model.a4).at_least(3));
    debug_assert!(ctx.v(&ctx.model.a6).at_least(4));

    // Type IV* against Y^2 + a_{3,2} Y - a_{6,4}.
    let rf = ctx.place.residue_field();
    let y_poly = [
        rf.neg(ctx.digit(&ctx.model.a6, 4)),
        ctx.digit(&ctx.model.a3, 2),
        ResidueElem::ONE,
    ];
    let rep = ctx.solve(&y_poly);
    if rep.separable {
        let c = 1 + rep.roots.len() as u64;
        return Ok(Some((KodairaType::IVStar, c)));
    }

    // Step 9: kill the double root; then III* if v(a4) < 4.
    let (y0, _) = rep.multiple_root().expect("double root lies in the field");
    let zero = ctx.model.a1.field().int(0);
    ctx.apply(Transform::shear(zero, ctx.lift_at(y0, 2)));
    debug_assert!(ctx.v(&ctx.model.a3).at_least(3));
    debug_assert!(ctx.v(&ctx.model.a6).at_least(5));
    if !ctx.v(&ctx.model.a4).at_least(4) {
        return Ok(Some((KodairaType::IIIStar, 2)));
    }

    // Step 10: II* if v(a6) < 6.
    if !ctx.v(&ctx.model.a6).at_least(6) {
        return Ok(Some((KodairaType::IIStar, 1)));
    }

    // Step 11: every a_i now has v(a_i) >= i; not minimal.
    debug_assert!(ctx.v(&ctx.model.a1).at_least(1));
    debug_assert!(ctx.v(&ctx.model.a2).at_least(2));
    Ok(None)
}

/// The unique singular point of the reduced curve, by scanning x in the
/// residue field: candidate y-values are the roots of the curve equation at
/// x, and singularity is checked on both partial derivatives.
fn singular_point(ctx: &Ctx) -> (ResidueElem, ResidueElem) {
    let rf = ctx.place.residue_field();
    let a1 = ctx.digit(&ctx.model.a1, 0);
    let a2 = ctx.digit(&ctx.model.a2, 0);
    let a3 = ctx.digit(&ctx.model.a3, 0);
    let a4 = ctx.digit(&ctx.model.a4, 0);
    let a6 = ctx.digit(&ctx.model.a6, 0);
    for x in rf.elements() {
        let x2 = rf.mul(x, x);
        let x3 = rf.mul(x2, x);
        // f(x, Y) = Y^2 + (a1 x + a3) Y - (x^3 + a2 x^2 + a4 x + a6)
        let lin = rf.add(rf.mul(a1, x), a3);
        let cubic = rf.add(rf.add(x3, rf.mul(a2, x2)), rf.add(rf.mul(a4, x), a6));
        let poly = [rf.neg(cubic), lin, ResidueElem::ONE];
        let Ok(rep) = rf.solve(&poly) else {
            continue;
        };
        for (y, _) in rep.roots {
            // df/dy = 2y + a1 x + a3, df/dx = a1 y - 3x^2 - 2 a2 x - a4
            let fy = rf.add(rf.add(y, y), lin);
            let fx = rf.sub(
                rf.mul(a1, y),
                rf.add(
                    rf.add(rf.mul(rf.from_int(3), x2), rf.mul(rf.from_int(2), rf.mul(a2, x))),
                    a4,
                ),
            );
            if fy.is_zero() && fx.is_zero() {
                return (x, y);
            }
        }
    }
    unreachable!("a reduced Weierstrass equation with v(Delta) > 0 has a singular point");
}
