//! Genus-2 CM reduction-type constraints: admissible type tables for the
//! potentially-good and non-potentially-good cases, the exclusion list,
//! degree-of-singularity arithmetic, and the parity constraint on v(J_2).
//!
//! Type symbols use a canonical ASCII grammar: components joined by `-`,
//! stars as `*`, a leading multiplicity digit (`2III`), and the integer
//! parameter (or its defining expression `(d-2)/2` when uninstantiated)
//! as the final `-`-separated token.

use crate::error::{Error, Result};
use num_rational::Ratio;
use serde::Serialize;
use std::collections::BTreeSet;
use std::fmt;

/// A quartic CM field enters only through its count of roots of unity and
/// a descriptive label.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuarticCmSpec {
    pub mu: u32,
    pub label: String,
}

impl QuarticCmSpec {
    pub fn new(mu: u32, label: impl Into<String>) -> Result<Self> {
        check_mu(mu)?;
        Ok(QuarticCmSpec {
            mu,
            label: label.into(),
        })
    }
}

fn check_mu(mu: u32) -> Result<()> {
    if matches!(mu, 2 | 4 | 6 | 8 | 10 | 12) {
        Ok(())
    } else {
        Err(Error::InvalidMu(mu))
    }
}

/// Which invariant parametrizes a family.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ParamVar {
    D,
    R,
}

impl fmt::Display for ParamVar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParamVar::D => write!(f, "d"),
            ParamVar::R => write!(f, "r"),
        }
    }
}

/// The integer parameter of a family, written (var - offset)/divisor.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ParamExpr {
    pub var: ParamVar,
    pub offset: i64,
    pub divisor: i64,
}

impl ParamExpr {
    /// Evaluate at var = value; `None` unless the result is a nonnegative
    /// integer.
    pub fn evaluate(&self, value: i64) -> Option<u64> {
        let num = value - self.offset;
        if num < 0 || num % self.divisor != 0 {
            None
        } else {
            Some((num / self.divisor) as u64)
        }
    }
}

impl fmt::Display for ParamExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.offset == 0 && self.divisor == 1 {
            write!(f, "{}", self.var)
        } else {
            write!(f, "({}-{})/{}", self.var, self.offset, self.divisor)
        }
    }
}

/// A reduction type: an elementary symbol, or a parametric family with an
/// optional instantiated parameter value.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct NuTypeInstance {
    /// Component part of the symbol, e.g. "I_0-0-0*", "2III", "I_0*-II*".
    pub base: String,
    /// The family parameter; absent for elementary types.
    pub param_expr: Option<ParamExpr>,
    /// Evaluated parameter; present iff the instance is instantiated.
    pub param_value: Option<u64>,
}

impl NuTypeInstance {
    pub fn elementary(base: &str) -> Self {
        NuTypeInstance {
            base: base.to_string(),
            param_expr: None,
            param_value: None,
        }
    }

    fn family(base: &str, expr: ParamExpr) -> Self {
        NuTypeInstance {
            base: base.to_string(),
            param_expr: Some(expr),
            param_value: None,
        }
    }

    pub fn is_instantiated(&self) -> bool {
        self.param_expr.is_none() || self.param_value.is_some()
    }

    /// Canonical symbol: the parameter value when instantiated, the
    /// parameter expression otherwise.
    pub fn symbol(&self) -> String {
        match (&self.param_expr, self.param_value) {
            (None, _) => self.base.clone(),
            (Some(_), Some(v)) => format!("{}-{}", self.base, v),
            (Some(e), None) => format!("{}-{}", self.base, e),
        }
    }

    /// Instantiate against supplied invariants, requiring the family's own
    /// variable; elementary types pass through.
    pub fn instantiate(&self, d: Option<i64>, r: Option<i64>) -> Result<Option<NuTypeInstance>> {
        let Some(expr) = self.param_expr else {
            return Ok(Some(self.clone()));
        };
        let value = match expr.var {
            ParamVar::D => d.ok_or(Error::MissingInvariant('d'))?,
            ParamVar::R => r.ok_or(Error::MissingInvariant('r'))?,
        };
        Ok(expr.evaluate(value).map(|v| NuTypeInstance {
            base: self.base.clone(),
            param_expr: self.param_expr,
            param_value: Some(v),
        }))
    }
}

impl PartialOrd for NuTypeInstance {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for NuTypeInstance {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.symbol().cmp(&other.symbol())
    }
}

impl fmt::Display for NuTypeInstance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.symbol())
    }
}

impl Serialize for NuTypeInstance {
    fn serialize<S: serde::Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        ser.serialize_str(&self.symbol())
    }
}

const fn expr(var: ParamVar, offset: i64, divisor: i64) -> ParamExpr {
    ParamExpr {
        var,
        offset,
        divisor,
    }
}

use ParamVar::{D, R};

/// Families shared by every non-potentially-good row.
const FAM_I0S_I0S: (&str, ParamExpr) = ("I_0*-I_0*", expr(D, 2, 2));

const FAMS_MU4: [(&str, ParamExpr); 5] = [
    FAM_I0S_I0S,
    ("III-III", expr(D, 2, 4)),
    ("III-III*", expr(D, 4, 4)),
    ("III*-III*", expr(D, 6, 4)),
    ("2I_0*", expr(R, 1, 2)),
];

const FAMS_MU6: [(&str, ParamExpr); 11] = [
    FAM_I0S_I0S,
    ("IV-IV", expr(D, 2, 3)),
    ("IV-IV*", expr(D, 3, 3)),
    ("IV*-IV*", expr(D, 4, 3)),
    ("II-II", expr(D, 2, 6)),
    ("II-II*", expr(D, 6, 6)),
    ("II*-II*", expr(D, 10, 6)),
    ("I_0*-II", expr(D, 4, 6)),
    ("I_0*-II*", expr(D, 8, 6)),
    ("2IV", expr(R, 1, 3)),
    ("2IV*", expr(R, 2, 3)),
];

const FAMS_MU8_EXTRA: [(&str, ParamExpr); 2] = [("2III", expr(R, 1, 4)), ("2III*", expr(R, 3, 4))];
const FAMS_MU12_EXTRA: [(&str, ParamExpr); 2] = [("2II", expr(R, 1, 6)), ("2II*", expr(R, 5, 6))];

/// Possible special fibers under potential good reduction, by mu.
pub fn allowed_potentially_good(mu: u32) -> Result<BTreeSet<NuTypeInstance>> {
    check_mu(mu)?;
    let rows: &[&str] = match mu {
        2 => &["I_0-0-0", "I_0-0-0*"],
        4 => &["I_0-0-0", "I_0-0-0*", "VI"],
        6 => &["I_0-0-0", "I_0-0-0*", "III", "IV"],
        8 => &["I_0-0-0", "I_0-0-0*", "VI", "VII", "VII*"],
        10 => &[
            "I_0-0-0", "I_0-0-0*", "IX-1", "IX-2", "IX-3", "IX-4", "VIII-1", "VIII-2", "VIII-3",
            "VIII-4",
        ],
        12 => &["I_0-0-0", "I_0-0-0*", "III", "IV", "VI"],
        _ => unreachable!(),
    };
    Ok(rows.iter().map(|s| NuTypeInstance::elementary(s)).collect())
}

/// The sharper potentially-good tables when the stable special fiber is
/// neither y^2 = x^5 - 1 nor y^2 = x^5 - x; only mu = 8 and 10 change.
pub fn allowed_potentially_good_restricted(mu: u32) -> Result<BTreeSet<NuTypeInstance>> {
    let rows: &[&str] = match mu {
        8 => &["I_0-0-0", "I_0-0-0*", "VI"],
        10 => &["I_0-0-0", "I_0-0-0*"],
        _ => return Err(Error::InvalidMu(mu)),
    };
    Ok(rows.iter().map(|s| NuTypeInstance::elementary(s)).collect())
}

/// The family list of a non-potentially-good row, uninstantiated.
pub fn not_potentially_good_families(mu: u32) -> Result<Vec<NuTypeInstance>> {
    check_mu(mu)?;
    let fams: Vec<(&str, ParamExpr)> = match mu {
        2 | 10 => vec![FAM_I0S_I0S],
        4 => FAMS_MU4.to_vec(),
        6 => FAMS_MU6.to_vec(),
        8 => FAMS_MU4.iter().chain(FAMS_MU8_EXTRA.iter()).copied().collect(),
        12 => {
            let mut v = FAMS_MU4.to_vec();
            v.extend(FAMS_MU6.iter().skip(1)); // the shared family appears once
            v.extend(FAMS_MU12_EXTRA);
            v
        }
        _ => unreachable!(),
    };
    Ok(fams
        .into_iter()
        .map(|(b, e)| NuTypeInstance::family(b, e))
        .collect())
}

/// The caller-assertion record for a genus-2 CM curve: which reduction
/// regime it is in, whether the special stable fiber avoids the two
/// exceptional curves, and the numeric invariants when known. With
/// potential good reduction there is no degenerate fiber, hence no d or r.
#[derive(Debug, Clone, Default)]
pub struct Genus2Context {
    pub potentially_good: bool,
    /// The stable special fiber is not y^2 = x^5 - 1 or y^2 = x^5 - x.
    pub special_fiber_excluded_c0_c1: bool,
    pub d: Option<i64>,
    pub r: Option<i64>,
    /// Asserted parity of v_L(J_2), when the caller knows it.
    pub v_j2_odd: Option<bool>,
}

/// Admissible types for a full assertion record: dispatches between the
/// potentially-good tables (restricted when the special fiber permits)
/// and the instantiated family lists.
pub fn admissible_types(spec: &QuarticCmSpec, ctx: &Genus2Context) -> Result<Vec<NuTypeInstance>> {
    if ctx.potentially_good {
        assert!(
            ctx.d.is_none() && ctx.r.is_none(),
            "potential good reduction carries no d or r invariant"
        );
        let set = if ctx.special_fiber_excluded_c0_c1 && matches!(spec.mu, 8 | 10) {
            allowed_potentially_good_restricted(spec.mu)?
        } else {
            allowed_potentially_good(spec.mu)?
        };
        Ok(set.into_iter().collect())
    } else {
        allowed_not_potentially_good(spec.mu, ctx)
    }
}

/// Instantiate the mu-row at the supplied invariants: a family is kept
/// exactly when its parameter evaluates to a nonnegative integer; families
/// whose variable is absent from the context are returned uninstantiated.
pub fn allowed_not_potentially_good(
    mu: u32,
    ctx: &Genus2Context,
) -> Result<Vec<NuTypeInstance>> {
    let mut out = Vec::new();
    for fam in not_potentially_good_families(mu)? {
        let var = fam.param_expr.expect("all rows are parametric").var;
        let supplied = match var {
            ParamVar::D => ctx.d,
            ParamVar::R => ctx.r,
        };
        match supplied {
            None => out.push(fam),
            Some(value) => {
                if let Some(inst) = fam
                    .instantiate(ctx.d, ctx.r)
                    .expect("variable is supplied")
                {
                    debug_assert_eq!(
                        inst.param_value,
                        fam.param_expr.unwrap().evaluate(value)
                    );
                    out.push(inst);
                }
            }
        }
    }
    out.sort();
    Ok(out)
}

/// Types a genus-2 CM curve can never have: the three elementary symbols
/// plus the nineteen-family table of obstructed configurations.
pub fn excluded_cm_types() -> BTreeSet<NuTypeInstance> {
    let elementary = ["II", "V", "V*"];
    let families: [(&str, ParamExpr); 19] = [
        ("I_0-I_0", expr(D, 0, 1)),
        ("I_0-I_0*", expr(D, 1, 2)),
        ("2I_0", expr(R, 0, 1)),
        ("I_0-IV", expr(D, 1, 3)),
        ("I_0-IV*", expr(D, 2, 3)),
        ("I_0-III", expr(D, 1, 4)),
        ("I_0-III*", expr(D, 3, 4)),
        ("I_0*-III*", expr(D, 5, 4)),
        ("I_0*-III", expr(D, 3, 4)),
        ("2IV", expr(R, 1, 3)),
        ("2IV*", expr(R, 2, 3)),
        ("I_0-II", expr(D, 1, 6)),
        ("I_0-II*", expr(D, 5, 6)),
        ("I_0*-IV*", expr(D, 7, 6)),
        ("I_0*-IV", expr(D, 5, 6)),
        ("II*-IV", expr(D, 7, 6)),
        ("II-IV", expr(D, 3, 6)),
        ("II-IV*", expr(D, 5, 6)),
        ("II*-IV*", expr(D, 9, 6)),
    ];
    elementary
        .iter()
        .map(|s| NuTypeInstance::elementary(s))
        .chain(families.iter().map(|(b, e)| NuTypeInstance::family(b, *e)))
        .collect()
}

/// Degree-of-singularity data for the two-elliptic-components stable fiber.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SingularityData {
    pub v_j2: i64,
    pub v_j10: i64,
    pub extension_degree: u32,
    /// d_L = (v(J_10) - 5 v(J_2)) / 12.
    #[serde(with = "ratio_serde")]
    pub d_l: Ratio<i64>,
    /// d = [M:L] * d_L, the degree of singularity when admissible.
    #[serde(with = "ratio_serde")]
    pub d: Ratio<i64>,
    /// Whether d is a positive integer.
    pub admissible: bool,
}

mod ratio_serde {
    use num_rational::Ratio;
    use serde::Serializer;

    pub fn serialize<S: Serializer>(r: &Ratio<i64>, ser: S) -> Result<S::Ok, S::Error> {
        ser.serialize_str(&r.to_string())
    }
}

/// d_L = (v(J_10) - 5 v(J_2))/12 and d = [M:L] d_L; non-integral or
/// non-positive d is flagged inadmissible rather than rejected.
pub fn degree_of_singularity(v_j2: i64, v_j10: i64, extension_degree: u32) -> SingularityData {
    assert!(extension_degree >= 1);
    let d_l = Ratio::new(v_j10 - 5 * v_j2, 12);
    let d = d_l * Ratio::from_integer(extension_degree as i64);
    let admissible = d.is_integer() && *d.numer() > 0;
    SingularityData {
        v_j2,
        v_j10,
        extension_degree,
        d_l,
        d,
        admissible,
    }
}

/// Verdict of the v(J_2) parity constraint.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ParityVerdict {
    MustBeOdd,
    NoConstraint,
}

/// Families exempt from the parity constraint on v_L(J_2).
const J2_PARITY_EXCEPTIONS: [&str; 5] = ["II-II", "II-II*", "II*-II*", "I_0*-II", "I_0*-II*"];

/// When stable reduction arrives after an extension of degree 6 or 12,
/// v_L(J_2) must be odd unless every candidate lies in the five exception
/// families.
pub fn j2_parity_constraint(
    mu: u32,
    extension_degree: u32,
    types: &[NuTypeInstance],
) -> Result<ParityVerdict> {
    check_mu(mu)?;
    if extension_degree != 6 && extension_degree != 12 {
        return Err(Error::InvalidDegree(extension_degree));
    }
    let all_exempt = types
        .iter()
        .all(|t| J2_PARITY_EXCEPTIONS.contains(&t.base.as_str()));
    Ok(if all_exempt {
        ParityVerdict::NoConstraint
    } else {
        ParityVerdict::MustBeOdd
    })
}

/// Whether a stable-reduction extension degree is consistent with the CM
/// constraint: it must divide mu and cannot exceed 10.
pub fn semistability_degree_check(mu: u32, degree: u32) -> bool {
    degree >= 1 && mu.is_multiple_of(degree) && degree <= 10
}
