//! Kodaira reduction types and (geometric) component groups.

use crate::error::{Error, Result};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::fmt;
use std::str::FromStr;

/// The Kodaira symbol of the special fiber; `I(0)` is good reduction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum KodairaType {
    I(u32),
    IStar(u32),
    II,
    III,
    IV,
    IVStar,
    IIIStar,
    IIStar,
}

impl KodairaType {
    pub fn is_good(&self) -> bool {
        matches!(self, KodairaType::I(0))
    }

    pub fn is_multiplicative(&self) -> bool {
        matches!(self, KodairaType::I(n) if *n > 0)
    }

    pub fn is_additive(&self) -> bool {
        !self.is_good() && !self.is_multiplicative()
    }

    /// Canonical ASCII symbol: "I0", "I4*", "II", "IV*", ...
    pub fn symbol(&self) -> String {
        match self {
            KodairaType::I(n) => format!("I{n}"),
            KodairaType::IStar(n) => format!("I{n}*"),
            KodairaType::II => "II".into(),
            KodairaType::III => "III".into(),
            KodairaType::IV => "IV".into(),
            KodairaType::IVStar => "IV*".into(),
            KodairaType::IIIStar => "III*".into(),
            KodairaType::IIStar => "II*".into(),
        }
    }

    /// Number of irreducible components of the special fiber over the
    /// algebraic closure of the residue field.
    pub fn components(&self) -> u32 {
        match self {
            KodairaType::I(0) => 1,
            KodairaType::I(n) => *n,
            KodairaType::IStar(n) => n + 5,
            KodairaType::II => 1,
            KodairaType::III => 2,
            KodairaType::IV => 3,
            KodairaType::IVStar => 7,
            KodairaType::IIIStar => 8,
            KodairaType::IIStar => 9,
        }
    }
}

impl FromStr for KodairaType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::BadKodairaSymbol(s.to_string());
        match s {
            "II" => return Ok(KodairaType::II),
            "III" => return Ok(KodairaType::III),
            "IV" => return Ok(KodairaType::IV),
            "II*" => return Ok(KodairaType::IIStar),
            "III*" => return Ok(KodairaType::IIIStar),
            "IV*" => return Ok(KodairaType::IVStar),
            _ => {}
        }
        let body = s.strip_prefix('I').ok_or_else(bad)?;
        if let Some(n) = body.strip_suffix('*') {
            Ok(KodairaType::IStar(n.parse().map_err(|_| bad())?))
        } else {
            Ok(KodairaType::I(body.parse().map_err(|_| bad())?))
        }
    }
}

impl fmt::Display for KodairaType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.symbol())
    }
}

impl PartialOrd for KodairaType {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// Ordered by the canonical ASCII symbol so that serialized sets are
/// diff-stable.
impl Ord for KodairaType {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.symbol().cmp(&other.symbol())
    }
}

impl Serialize for KodairaType {
    fn serialize<S: Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        ser.serialize_str(&self.symbol())
    }
}

impl<'de> Deserialize<'de> for KodairaType {
    fn deserialize<D: Deserializer<'de>>(de: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(de)?;
        s.parse().map_err(|_| D::Error::custom(format!("bad Kodaira symbol `{s}`")))
    }
}

/// A finite abelian group as a divisibility chain of cyclic factors;
/// the empty chain is the trivial group.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct AbelianGroup {
    factors: Vec<u64>,
}

impl AbelianGroup {
    pub fn trivial() -> Self {
        AbelianGroup { factors: vec![] }
    }

    pub fn cyclic(n: u64) -> Self {
        if n <= 1 {
            Self::trivial()
        } else {
            AbelianGroup { factors: vec![n] }
        }
    }

    /// Product of cyclic groups, renormalized into a divisibility chain
    /// by repeated (gcd, lcm) exchanges.
    pub fn product(ns: &[u64]) -> Self {
        let mut fs: Vec<u64> = ns.iter().copied().filter(|&n| n > 1).collect();
        let mut changed = true;
        while changed {
            changed = false;
            for i in 0..fs.len() {
                for j in i + 1..fs.len() {
                    if !fs[j].is_multiple_of(fs[i]) {
                        let g = num_integer::gcd(fs[i], fs[j]);
                        let l = fs[i] / g * fs[j];
                        fs[i] = g;
                        fs[j] = l;
                        changed = true;
                    }
                }
            }
            fs.retain(|&n| n > 1);
            fs.sort_unstable();
        }
        AbelianGroup { factors: fs }
    }

    pub fn factors(&self) -> &[u64] {
        &self.factors
    }

    pub fn order(&self) -> u64 {
        self.factors.iter().product()
    }

    pub fn exponent(&self) -> u64 {
        self.factors.iter().copied().max().unwrap_or(1)
    }

    pub fn is_trivial(&self) -> bool {
        self.factors.is_empty()
    }

    /// Whether multiplication by m annihilates the group.
    pub fn killed_by(&self, m: u64) -> bool {
        m.is_multiple_of(self.exponent())
    }
}

impl fmt::Display for AbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            write!(f, "0")
        } else {
            let parts: Vec<String> = self.factors.iter().map(|n| format!("Z/{n}")).collect();
            write!(f, "{}", parts.join(" x "))
        }
    }
}

/// Component group of the Neron model over the algebraic closure of the
/// residue field, as a function of the Kodaira type alone.
pub fn geometric_component_group(k: KodairaType) -> AbelianGroup {
    match k {
        KodairaType::I(n) => AbelianGroup::cyclic(n as u64),
        KodairaType::II | KodairaType::IIStar => AbelianGroup::trivial(),
        KodairaType::III | KodairaType::IIIStar => AbelianGroup::cyclic(2),
        KodairaType::IV | KodairaType::IVStar => AbelianGroup::cyclic(3),
        KodairaType::IStar(n) => {
            if n % 2 == 0 {
                AbelianGroup::product(&[2, 2])
            } else {
                AbelianGroup::cyclic(4)
            }
        }
    }
}
