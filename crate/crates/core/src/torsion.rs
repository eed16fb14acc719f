//! Exact evaluation of the local torsion-bound formulas for CM abelian
//! varieties. All arithmetic is integer-exact; no floating-point logs.

use num_bigint::BigUint;
use serde::Serialize;

/// Inputs of the torsion bound.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TorsionInput {
    /// Dimension of the abelian variety.
    pub g: u32,
    /// Residue characteristic.
    pub p: u64,
    /// Residue cardinality, a power of p.
    pub q: u64,
    /// Absolute ramification index.
    pub e: u32,
    /// Number of roots of unity in the CM field.
    pub mu: u32,
}

impl TorsionInput {
    pub fn new(g: u32, p: u64, q: u64, e: u32, mu: u32) -> Self {
        assert!(g >= 1 && e >= 1 && mu >= 2);
        let mut r = q;
        while r.is_multiple_of(p) {
            r /= p;
        }
        assert_eq!(r, 1, "q must be a power of p");
        TorsionInput { g, p, q, e, mu }
    }
}

/// gamma_p(m) = floor(log_p(p m / (p-1))): the largest k >= 0 with
/// p^k (p - 1) <= p m, found by an exact integer scan.
pub fn gamma_p(p: u64, m: u64) -> u32 {
    assert!(p >= 2 && m >= 1);
    let target = p as u128 * m as u128;
    let pm1 = (p - 1) as u128;
    let mut k = 0u32;
    let mut pk = 1u128;
    loop {
        let next = match pk.checked_mul(p as u128) {
            Some(n) if n.checked_mul(pm1).is_some_and(|v| v <= target) => n,
            _ => return k,
        };
        pk = next;
        k += 1;
    }
}

/// floor((1 + sqrt(q))^2) = q + 1 + isqrt(4q), exactly.
pub fn hasse_floor(q: u64) -> u64 {
    assert!(q >= 2);
    let isqrt_4q: u64 = BigUint::from(4u128 * q as u128)
        .sqrt()
        .try_into()
        .expect("isqrt(4q) fits in u64");
    q + 1 + isqrt_4q
}

/// Both branches of the torsion bound, exactly evaluated.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TorsionBound {
    pub bound: BigUint,
    /// (bad-reduction branch, good-reduction branch).
    pub branches: [BigUint; 2],
}

/// max { mu * p^{2g gamma_p(e mu)}, floor((1+sqrt(q))^2)^g * p^{2g gamma_p(e)} }.
pub fn torsion_bound(input: &TorsionInput) -> TorsionBound {
    let TorsionInput { g, p, q, e, mu } = *input;
    let bad = bad_reduction_bound(g, p, e, mu);
    let good = BigUint::from(hasse_floor(q)).pow(g)
        * BigUint::from(p).pow(2 * g * gamma_p(p, e as u64));
    TorsionBound {
        bound: bad.clone().max(good.clone()),
        branches: [bad, good],
    }
}

/// mu * p^{2g gamma_p(e mu)}: the bound when good reduction fails.
pub fn bad_reduction_bound(g: u32, p: u64, e: u32, mu: u32) -> BigUint {
    BigUint::from(mu) * BigUint::from(p).pow(2 * g * gamma_p(p, e as u64 * mu as u64))
}
