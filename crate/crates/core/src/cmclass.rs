//! The elliptic CM classification tables and a curve-level conformance
//! checker that mechanizes the table statements as assertions.

use crate::error::{Error, Result};
use crate::field::{FieldElement, QuadraticField};
use crate::kodaira::KodairaType;
use crate::place::LocalPlace;
use crate::tate::{tate_algorithm, LocalData};
use crate::weierstrass::WeierstrassModel;
use serde::Serialize;
use std::collections::BTreeSet;
use std::fmt;

/// Asserted CM data for a curve: the tables' hypotheses are caller facts.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CmSpec {
    pub field: QuadraticField,
    /// |mu(K)|: 4 for Q(i), 6 for Q(sqrt(-3)), else 2.
    pub mu: u32,
    pub order_is_maximal: bool,
    /// True when the CM is defined over the base field itself, false for
    /// potential CM.
    pub defined_over_base: bool,
}

impl CmSpec {
    pub fn new(field: QuadraticField, order_is_maximal: bool, defined_over_base: bool) -> Result<Self> {
        Ok(CmSpec {
            field,
            mu: mu_of_imaginary_quadratic(field)?,
            order_is_maximal,
            defined_over_base,
        })
    }
}

/// Number of roots of unity in an imaginary quadratic field.
pub fn mu_of_imaginary_quadratic(field: QuadraticField) -> Result<u32> {
    match field.d() {
        Some(-1) => Ok(4),
        Some(-3) => Ok(6),
        Some(d) if d < 0 => Ok(2),
        _ => Err(Error::NotImaginary),
    }
}

/// Classification of the j-invariant into the table columns.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum JClass {
    Zero,
    J1728,
    Generic,
}

impl JClass {
    pub fn of(j: &FieldElement) -> JClass {
        if j.is_zero() {
            JClass::Zero
        } else if j.eq_int(1728) {
            JClass::J1728
        } else {
            JClass::Generic
        }
    }
}

impl fmt::Display for JClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            JClass::Zero => write!(f, "0"),
            JClass::J1728 => write!(f, "1728"),
            JClass::Generic => write!(f, "generic"),
        }
    }
}

/// A table lookup either lands on a row or falls outside the hypotheses;
/// no-row is an explicit outcome, never silently "everything allowed".
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TableLookup {
    Covered(BTreeSet<KodairaType>),
    NotCovered,
}

impl TableLookup {
    pub fn covered(self) -> Option<BTreeSet<KodairaType>> {
        match self {
            TableLookup::Covered(s) => Some(s),
            TableLookup::NotCovered => None,
        }
    }
}

fn set(types: &[KodairaType]) -> TableLookup {
    TableLookup::Covered(types.iter().copied().collect())
}

/// Possible reduction types when the CM is defined over the base field.
pub fn allowed_types_cm(p: u64, vp: u32, jc: JClass) -> TableLookup {
    use KodairaType::*;
    match jc {
        JClass::Generic => {
            if p != 2 {
                set(&[I(0), IStar(0)])
            } else if vp == 1 {
                set(&[I(0), IStar(4), IStar(8), II, IIStar])
            } else {
                TableLookup::NotCovered
            }
        }
        JClass::J1728 => {
            if p != 2 {
                set(&[I(0), III, IIIStar, IStar(0)])
            } else {
                TableLookup::NotCovered
            }
        }
        JClass::Zero => {
            if p != 3 {
                set(&[I(0), II, IIStar, IV, IVStar, IStar(0)])
            } else {
                TableLookup::NotCovered
            }
        }
    }
}

/// Possible reduction types under potential CM.
pub fn allowed_types_potential_cm(p: u64, vp: u32, jc: JClass) -> TableLookup {
    use KodairaType::*;
    match jc {
        JClass::Generic => {
            if p != 2 {
                set(&[I(0), III, IIIStar, IStar(0)])
            } else {
                TableLookup::NotCovered
            }
        }
        JClass::J1728 => {
            if p != 2 {
                set(&[I(0), III, IIIStar, IStar(0)])
            } else if vp == 1 {
                set(&[I(0), II, III, IIIStar, IStar(2), IStar(3)])
            } else {
                TableLookup::NotCovered
            }
        }
        JClass::Zero => {
            if p != 3 {
                set(&[I(0), II, IIStar, IV, IVStar, IStar(0)])
            } else {
                TableLookup::NotCovered
            }
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Verdict {
    Pass,
    Fail,
}

/// Divisibility facts about v(Delta_min) implied by the j-invariant.
#[derive(Debug, Clone, Default, Serialize)]
pub struct DivisibilityChecks {
    /// 3 | v(Delta_min), checked when j = 1728 and p != 2.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub mod3: Option<bool>,
    /// 2 | v(Delta_min), checked when j = 0 and p != 3.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub mod2: Option<bool>,
}

/// Outcome of checking a curve against the applicable table.
#[derive(Debug, Clone, Serialize)]
pub struct ConformanceReport {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub label: Option<String>,
    pub computed: KodairaType,
    pub allowed: Vec<KodairaType>,
    pub verdict: Verdict,
    pub divisibility: DivisibilityChecks,
    pub phi_geom: Vec<u64>,
    /// Component group constrained to (0) or Z/2 x Z/2, evaluated only
    /// under the first-row hypotheses (CM over base, p != 2, generic j,
    /// K distinct from Q(i) and Q(sqrt(-3))).
    #[serde(skip_serializing_if = "Option::is_none")]
    pub phi_in_row1_list: Option<bool>,
    /// Component group killed by |mu(K)|, evaluated when CM is over base.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub phi_killed_by_mu: Option<bool>,
    #[serde(skip)]
    pub local: LocalData,
    pub j_class: JClass,
}

/// Run the algorithm at the place, pick the applicable table, and report
/// membership plus the structural side conditions.
pub fn check_curve(
    model: &WeierstrassModel,
    place: &LocalPlace,
    spec: &CmSpec,
    label: Option<String>,
) -> Result<ConformanceReport> {
    let local = tate_algorithm(model, place)?;
    let j = model.derived()?.j;
    let jc = JClass::of(&j);
    let p = place.residue_characteristic();
    let vp = place.e_abs();

    // Tables for Q(i) and Q(sqrt(-3)) require the maximal order.
    let hypotheses_ok = spec.order_is_maximal || !matches!(spec.field.d(), Some(-1) | Some(-3));
    let lookup = if !hypotheses_ok {
        TableLookup::NotCovered
    } else if spec.defined_over_base {
        allowed_types_cm(p, vp, jc)
    } else {
        allowed_types_potential_cm(p, vp, jc)
    };
    let allowed = match lookup {
        TableLookup::Covered(s) => s,
        TableLookup::NotCovered => {
            return Err(Error::HypothesisNotMet {
                p,
                vp,
                jclass: jc.to_string(),
            })
        }
    };

    let mut verdict = if allowed.contains(&local.kodaira) {
        Verdict::Pass
    } else {
        Verdict::Fail
    };

    let mut divisibility = DivisibilityChecks::default();
    if jc == JClass::J1728 && p != 2 {
        let ok = local.v_delta_min % 3 == 0;
        divisibility.mod3 = Some(ok);
        if !ok {
            verdict = Verdict::Fail;
        }
    }
    if jc == JClass::Zero && p != 3 {
        let ok = local.v_delta_min % 2 == 0;
        divisibility.mod2 = Some(ok);
        if !ok {
            verdict = Verdict::Fail;
        }
    }

    let row1 = spec.defined_over_base
        && p != 2
        && jc == JClass::Generic
        && !matches!(spec.field.d(), Some(-1) | Some(-3));
    let phi_in_row1_list = row1.then(|| {
        let ok = local.phi_geom.is_trivial() || local.phi_geom.factors() == [2, 2];
        if !ok {
            verdict = Verdict::Fail;
        }
        ok
    });
    let phi_killed_by_mu = spec.defined_over_base.then(|| {
        let ok = local.phi_geom.killed_by(spec.mu as u64);
        if !ok {
            verdict = Verdict::Fail;
        }
        ok
    });

    Ok(ConformanceReport {
        label,
        computed: local.kodaira,
        allowed: allowed.into_iter().collect(),
        verdict,
        divisibility,
        phi_geom: local.phi_geom.factors().to_vec(),
        phi_in_row1_list,
        phi_killed_by_mu,
        local,
        j_class: jc,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::QuadraticField;

    #[test]
    fn mu_values() {
        let f = |d| QuadraticField::quadratic(d).unwrap();
        assert_eq!(mu_of_imaginary_quadratic(f(-1)).unwrap(), 4);
        assert_eq!(mu_of_imaginary_quadratic(f(-3)).unwrap(), 6);
        assert_eq!(mu_of_imaginary_quadratic(f(-7)).unwrap(), 2);
        assert_eq!(
            mu_of_imaginary_quadratic(f(2)),
            Err(Error::NotImaginary)
        );
        assert_eq!(
            mu_of_imaginary_quadratic(QuadraticField::RATIONAL),
            Err(Error::NotImaginary)
        );
    }

    #[test]
    fn cm_table_rows_verbatim() {
        use KodairaType::*;
        let s = |t: TableLookup| t.covered().unwrap();
        assert_eq!(
            s(allowed_types_cm(7, 1, JClass::Generic)),
            [I(0), IStar(0)].into_iter().collect()
        );
        assert_eq!(
            s(allowed_types_cm(2, 1, JClass::Generic)),
            [I(0), IStar(4), IStar(8), II, IIStar].into_iter().collect()
        );
        assert_eq!(
            s(allowed_types_cm(5, 2, JClass::J1728)),
            [I(0), III, IIIStar, IStar(0)].into_iter().collect()
        );
        assert_eq!(
            s(allowed_types_cm(2, 1, JClass::Zero)),
            [I(0), II, IIStar, IV, IVStar, IStar(0)].into_iter().collect()
        );
        assert_eq!(allowed_types_cm(2, 2, JClass::Generic), TableLookup::NotCovered);
        assert_eq!(allowed_types_cm(3, 1, JClass::Zero), TableLookup::NotCovered);
        assert_eq!(allowed_types_cm(2, 1, JClass::J1728), TableLookup::NotCovered);
    }

    #[test]
    fn potential_cm_table_rows_verbatim() {
        use KodairaType::*;
        let s = |t: TableLookup| t.covered().unwrap();
        assert_eq!(
            s(allowed_types_potential_cm(7, 1, JClass::Generic)),
            [I(0), III, IIIStar, IStar(0)].into_iter().collect()
        );
        assert_eq!(
            s(allowed_types_potential_cm(3, 1, JClass::J1728)),
            [I(0), III, IIIStar, IStar(0)].into_iter().collect()
        );
        assert_eq!(
            s(allowed_types_potential_cm(2, 1, JClass::J1728)),
            [I(0), II, III, IIIStar, IStar(2), IStar(3)].into_iter().collect()
        );
        assert_eq!(
            s(allowed_types_potential_cm(5, 3, JClass::Zero)),
            [I(0), II, IIStar, IV, IVStar, IStar(0)].into_iter().collect()
        );
        assert_eq!(
            allowed_types_potential_cm(2, 1, JClass::Generic),
            TableLookup::NotCovered
        );
        assert_eq!(
            allowed_types_potential_cm(2, 2, JClass::J1728),
            TableLookup::NotCovered
        );
        assert_eq!(
            allowed_types_potential_cm(3, 2, JClass::Zero),
            TableLookup::NotCovered
        );
    }

    #[test]
    fn cm_rows_nest_inside_potential_rows() {
        let a = allowed_types_cm(7, 1, JClass::Generic).covered().unwrap();
        let b = allowed_types_potential_cm(7, 1, JClass::Generic)
            .covered()
            .unwrap();
        assert!(a.is_subset(&b));
        assert!(a.len() < b.len());
    }

    #[test]
    fn check_curve_on_printed_rational_example() {
        // the conductor-49 curve with potential CM: type III at 7
        let q = QuadraticField::RATIONAL;
        let m = WeierstrassModel::new(q.int(1), q.int(-1), q.int(0), q.int(-2), q.int(-1)).unwrap();
        let place = LocalPlace::factor_prime(q, 7).unwrap()[0];
        let spec = CmSpec::new(QuadraticField::quadratic(-7).unwrap(), true, false).unwrap();
        let rep = check_curve(&m, &place, &spec, Some("49.a4".into())).unwrap();
        assert_eq!(rep.computed, KodairaType::III);
        assert_eq!(rep.verdict, Verdict::Pass);
        assert_eq!(rep.j_class, JClass::Generic);

        // good reduction passes every covered row trivially
        let place5 = LocalPlace::factor_prime(q, 5).unwrap()[0];
        let rep5 = check_curve(&m, &place5, &spec, None).unwrap();
        assert_eq!(rep5.computed, KodairaType::I(0));
        assert_eq!(rep5.verdict, Verdict::Pass);
        assert!(rep5.phi_geom.is_empty());
    }

    #[test]
    fn hypothesis_not_met_is_an_error() {
        // p = 2 with v(2) = 2 and generic j has no row
        let ki = QuadraticField::quadratic(-1).unwrap();
        let m = WeierstrassModel::new(ki.int(1), ki.int(-1), ki.int(0), ki.int(-2), ki.int(-1))
            .unwrap();
        let place = LocalPlace::factor_prime(ki, 2).unwrap()[0];
        let spec = CmSpec::new(QuadraticField::quadratic(-7).unwrap(), true, true).unwrap();
        assert!(matches!(
            check_curve(&m, &place, &spec, None),
            Err(Error::HypothesisNotMet { p: 2, vp: 2, .. })
        ));
    }
}
