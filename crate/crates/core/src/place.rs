//! Places of Q and of quadratic fields: prime splitting, normalized
//! valuations, and reduction to the residue field.
//!
//! Valuations are normalized so that a uniformizer has valuation 1; in
//! particular v(p) = e where e is the absolute ramification index.

use crate::error::{Error, Result};
use crate::field::{FieldElement, QuadraticField};
use crate::residue::{ResidueBound, ResidueElem, ResidueField};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};
use std::fmt;

/// A valuation value: an integer or +infinity (the valuation of 0).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Valuation {
    Finite(i64),
    Infinity,
}

impl Valuation {
    pub fn finite(self) -> i64 {
        match self {
            Valuation::Finite(v) => v,
            Valuation::Infinity => panic!("valuation of zero is infinite"),
        }
    }

    pub fn is_infinite(self) -> bool {
        matches!(self, Valuation::Infinity)
    }

    pub fn at_least(self, bound: i64) -> bool {
        match self {
            Valuation::Finite(v) => v >= bound,
            Valuation::Infinity => true,
        }
    }
}

impl PartialOrd for Valuation {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Valuation {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        use Valuation::*;
        match (self, other) {
            (Infinity, Infinity) => std::cmp::Ordering::Equal,
            (Infinity, Finite(_)) => std::cmp::Ordering::Greater,
            (Finite(_), Infinity) => std::cmp::Ordering::Less,
            (Finite(a), Finite(b)) => a.cmp(b),
        }
    }
}

/// How the rational prime p decomposes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Splitting {
    /// The p-adic place of Q itself.
    Rational,
    /// p splits; `root` is the canonical square-root representative of D:
    /// mod p for odd p, mod 8 for p = 2.
    Split { root: u64 },
    Inert,
    Ramified,
}

/// A place of the field above the rational prime p.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LocalPlace {
    field: QuadraticField,
    p: u64,
    splitting: Splitting,
    e_abs: u32,
    f: u32,
}

fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for q in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n == q {
            return true;
        }
        if n.is_multiple_of(q) {
            return false;
        }
    }
    // deterministic Miller-Rabin for u64
    let d = (n - 1) >> (n - 1).trailing_zeros();
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = mod_pow(a % n, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        let mut r = d;
        while r != n - 1 {
            x = ((x as u128 * x as u128) % n as u128) as u64;
            r <<= 1;
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

fn mod_pow(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1u64;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = ((acc as u128 * base as u128) % m as u128) as u64;
        }
        base = ((base as u128 * base as u128) % m as u128) as u64;
        exp >>= 1;
    }
    acc
}

/// v_p(n) for n != 0.
fn int_val(p: u64, n: &BigInt) -> i64 {
    debug_assert!(!n.is_zero());
    let p = BigInt::from(p);
    let mut n = n.clone();
    let mut v = 0;
    loop {
        let (q, r) = n.div_rem(&p);
        if r.is_zero() {
            v += 1;
            n = q;
        } else {
            return v;
        }
    }
}

fn legendre(a: i64, p: u64) -> i64 {
    let a = a.rem_euclid(p as i64) as u64;
    if a == 0 {
        return 0;
    }
    match mod_pow(a, (p - 1) / 2, p) {
        1 => 1,
        x if x == p - 1 => -1,
        _ => unreachable!("p must be an odd prime"),
    }
}

/// Square root of a mod p by scan; callers only use small p via the bound.
fn sqrt_mod_p(a: u64, p: u64) -> Option<u64> {
    let a = a % p;
    (0..p).find(|&x| mul_mod_u(x, x, p) == a)
}

fn mul_mod_u(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

impl LocalPlace {
    /// Decompose the prime p in the field: one place (inert/ramified/rational)
    /// or two (split). Split places come in a documented deterministic order:
    /// index 0 carries the smaller canonical root representative (r < p - r
    /// mod p for odd p; the representative mod 8 below 4 for p = 2).
    pub fn factor_prime(field: QuadraticField, p: u64) -> Result<Vec<LocalPlace>> {
        Self::factor_prime_bounded(field, p, ResidueBound::default())
    }

    pub fn factor_prime_bounded(
        field: QuadraticField,
        p: u64,
        bound: ResidueBound,
    ) -> Result<Vec<LocalPlace>> {
        if !is_prime_u64(p) {
            return Err(Error::NotPrime(p));
        }
        let check = |f: u32| -> Result<()> {
            let cap = if f == 1 { bound.degree_one } else { bound.degree_two };
            if p > cap {
                return Err(Error::UnsupportedPlace {
                    size: (p as u128).pow(f),
                    bound: (cap as u128).pow(f),
                });
            }
            Ok(())
        };
        let d = match field {
            QuadraticField::Rational => {
                check(1)?;
                return Ok(vec![LocalPlace {
                    field,
                    p,
                    splitting: Splitting::Rational,
                    e_abs: 1,
                    f: 1,
                }]);
            }
            QuadraticField::Quadratic { d } => d,
        };
        let disc = field.discriminant().unwrap();
        let ramified = if p == 2 {
            disc.rem_euclid(2) == 0
        } else {
            disc.rem_euclid(p as i64) == 0
        };
        if ramified {
            check(1)?;
            return Ok(vec![LocalPlace {
                field,
                p,
                splitting: Splitting::Ramified,
                e_abs: 2,
                f: 1,
            }]);
        }
        let split = if p == 2 {
            d.rem_euclid(8) == 1
        } else {
            legendre(d, p) == 1
        };
        if !split {
            check(2)?;
            return Ok(vec![LocalPlace {
                field,
                p,
                splitting: Splitting::Inert,
                e_abs: 1,
                f: 2,
            }]);
        }
        check(1)?;
        let (r0, r1) = if p == 2 {
            // the two 2-adic square roots of D reduce mod 8 to r and 8 - r
            let d16 = d.rem_euclid(16) as u64;
            let r = (1..8)
                .find(|&r| (r * r) % 16 == d16 % 16)
                .expect("D = 1 mod 8 is a 2-adic square");
            (r.min(8 - r), r.max(8 - r))
        } else {
            let r = sqrt_mod_p(d.rem_euclid(p as i64) as u64, p)
                .expect("quadratic residue has a root");
            (r.min(p - r), r.max(p - r))
        };
        let mk = |root| LocalPlace {
            field,
            p,
            splitting: Splitting::Split { root },
            e_abs: 1,
            f: 1,
        };
        Ok(vec![mk(r0), mk(r1)])
    }

    pub fn field(&self) -> QuadraticField {
        self.field
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn splitting(&self) -> Splitting {
        self.splitting
    }

    /// Absolute ramification index, = v(p).
    pub fn e_abs(&self) -> u32 {
        self.e_abs
    }

    /// Residue degree.
    pub fn residue_degree(&self) -> u32 {
        self.f
    }

    pub fn residue_characteristic(&self) -> u64 {
        self.p
    }

    pub fn residue_field(&self) -> ResidueField {
        match self.splitting {
            Splitting::Inert => {
                let d = self.field.d().unwrap();
                if d.rem_euclid(4) == 1 {
                    // t = image of (1+sqrt(D))/2, t^2 - t + (1-D)/4 = 0
                    let q4 = ((1 - d) / 4).rem_euclid(self.p as i64) as u64;
                    ResidueField::quadratic_ext(self.p, 1, (self.p - q4 % self.p) % self.p)
                } else {
                    // t = image of sqrt(D), t^2 = D
                    ResidueField::quadratic_ext(self.p, 0, d.rem_euclid(self.p as i64) as u64)
                }
            }
            _ => ResidueField::prime_field(self.p),
        }
    }

    /// Canonical uniformizer: p for rational, split, and inert places; a
    /// generator built from sqrt(D) for ramified places.
    pub fn uniformizer(&self) -> FieldElement {
        match self.splitting {
            Splitting::Rational | Splitting::Split { .. } | Splitting::Inert => {
                FieldElement::from_int(self.field, self.p as i64)
            }
            Splitting::Ramified => {
                let d = self.field.d().unwrap();
                if self.p == 2 && d.rem_euclid(4) == 3 {
                    // v(1 + sqrt(D)) = 1 since N = 1 - D = 2 mod 4
                    self.field.elem(1, 1, 1)
                } else {
                    // p | D exactly once, so v(sqrt(D)) = 1
                    self.field.sqrt_d()
                }
            }
        }
    }

    /// The square root of D in Z_p carried to `digits` p-adic digits
    /// (agreeing with the stored canonical root), as an integer mod p^digits.
    fn lifted_root(&self, digits: u32) -> BigInt {
        let root = match self.splitting {
            Splitting::Split { root } => root,
            _ => panic!("lifted_root only applies to split places"),
        };
        let d = BigInt::from(self.field.d().unwrap());
        let p = BigInt::from(self.p);
        if self.p == 2 {
            // Bit-lifting with the invariant r^2 = D mod 4*modulus, where r
            // is known mod `modulus`. Of the two lift candidates r and
            // r + modulus, exactly one squares to D one bit further; the
            // increments never touch r mod 8, so the canonical class (and
            // with it the identity of the place) is preserved.
            let mut modulus = BigInt::from(8);
            let mut r = BigInt::from(root);
            debug_assert!((&r * &r - &d).mod_floor(&(&modulus * 2)).is_zero());
            let mut k = 3u32;
            while k < digits {
                let test = &modulus * 4;
                if (&r * &r - &d).mod_floor(&test) != BigInt::zero() {
                    r += &modulus;
                }
                debug_assert!((&r * &r - &d).mod_floor(&test).is_zero());
                modulus *= 2;
                k += 1;
            }
            r.mod_floor(&modulus)
        } else {
            // linear Hensel steps: r += t*p^k with t = (D - r^2)/p^k * (2r)^{-1}
            let mut r = BigInt::from(root);
            let mut modulus = p.clone();
            let mut k = 1u32;
            let inv2r = BigInt::from(inv_mod_u64(
                (2 * root) % self.p,
                self.p,
            ));
            while k < digits {
                let next = &modulus * &p;
                let defect = (&d - &r * &r).mod_floor(&next) / &modulus;
                let t = (defect * &inv2r).mod_floor(&p);
                r += t * &modulus;
                debug_assert!((&r * &r - &d).mod_floor(&next).is_zero());
                modulus = next;
                k += 1;
            }
            r
        }
    }

    /// Normalized valuation; +infinity exactly for x = 0.
    pub fn valuation(&self, x: &FieldElement) -> Valuation {
        if x.is_zero() {
            return Valuation::Infinity;
        }
        let vc = int_val(self.p, x.c());
        match self.splitting {
            Splitting::Rational => Valuation::Finite(int_val(self.p, x.a()) - vc),
            Splitting::Inert => {
                // v = v_p(Norm)/2 with Norm = (a^2 - D b^2)/c^2
                let (n, _) = x.norm();
                let vn = int_val(self.p, &n);
                debug_assert!(vn % 2 == 0, "inert norms have even valuation");
                Valuation::Finite(vn / 2 - vc)
            }
            Splitting::Ramified => {
                let (n, _) = x.norm();
                Valuation::Finite(int_val(self.p, &n) - 2 * vc)
            }
            Splitting::Split { .. } => {
                if x.b().is_zero() {
                    return Valuation::Finite(int_val(self.p, x.a()) - vc);
                }
                // embed sqrt(D) -> lifted root, at adaptively growing
                // precision; v_P(a + b sqrt D) <= v_p(a^2 - D b^2) bounds it
                let d = BigInt::from(self.field.d().unwrap());
                let norm_num = x.a() * x.a() - &d * x.b() * x.b();
                let cap = int_val(self.p, &norm_num) as u32 + 1;
                let mut digits = 8u32.min(cap);
                loop {
                    let r = self.lifted_root(digits);
                    let modulus = BigInt::from(self.p).pow(digits);
                    let t = (x.a() + x.b() * &r).mod_floor(&modulus);
                    if !t.is_zero() {
                        return Valuation::Finite(int_val(self.p, &t) - vc);
                    }
                    debug_assert!(digits < cap, "valuation exceeded the norm bound");
                    digits = (digits * 2).min(cap);
                }
            }
        }
    }

    /// Ring-homomorphic reduction to the residue field; defined exactly on
    /// elements of nonnegative valuation.
    pub fn reduce(&self, x: &FieldElement) -> Result<ResidueElem> {
        if !self.valuation(x).at_least(0) {
            return Err(Error::NegativeValuation);
        }
        if x.is_zero() {
            return Ok(ResidueElem::ZERO);
        }
        let p = self.p;
        let pb = BigInt::from(p);
        let s = int_val(p, x.c());
        let ps = pb.pow(s as u32);
        let c_unit = (x.c() / &ps).mod_floor(&pb).to_u64().unwrap();
        let cinv = inv_mod_u64(c_unit, p);
        match self.splitting {
            Splitting::Rational => {
                let num = (x.a() / &ps).mod_floor(&pb).to_u64().unwrap();
                Ok(ResidueElem::scalar(mul_mod_u(num, cinv, p)))
            }
            Splitting::Split { .. } => {
                let digits = s as u32 + 1;
                let modulus = pb.pow(digits);
                let t = if x.b().is_zero() {
                    x.a().mod_floor(&modulus)
                } else {
                    (x.a() + x.b() * self.lifted_root(digits)).mod_floor(&modulus)
                };
                debug_assert!((&t % &ps).is_zero());
                let num = (t / &ps).mod_floor(&pb).to_u64().unwrap();
                Ok(ResidueElem::scalar(mul_mod_u(num, cinv, p)))
            }
            Splitting::Inert => {
                // coordinates (u, v) in the basis {1, w} of the ring of
                // integers; v >= 0 forces p^s | u and p^s | v
                let d = self.field.d().unwrap();
                let (u, v) = if d.rem_euclid(4) == 1 {
                    (x.a() - x.b(), x.b() * 2)
                } else {
                    (x.a().clone(), x.b().clone())
                };
                let e0 = ((&u / &ps).mod_floor(&pb)).to_u64().unwrap();
                let e1 = ((&v / &ps).mod_floor(&pb)).to_u64().unwrap();
                debug_assert!((&u % &ps).is_zero() && (&v % &ps).is_zero());
                let rf = self.residue_field();
                Ok(rf.mul(ResidueElem { e0, e1 }, ResidueElem::scalar(cinv)))
            }
            Splitting::Ramified => {
                // sqrt(D) reduces to the square root of D mod p (0 unless
                // p = 2 and D odd, where it is 1); v >= 0 forces p^s | a, b
                let a0 = (x.a() / &ps).mod_floor(&pb).to_u64().unwrap();
                let b0 = (x.b() / &ps).mod_floor(&pb).to_u64().unwrap();
                debug_assert!((x.a() % &ps).is_zero() && (x.b() % &ps).is_zero());
                let sqrt_d_img = self.field.d().unwrap().rem_euclid(p as i64) as u64;
                let sqrt_img = sqrt_mod_p(sqrt_d_img, p)
                    .expect("D mod p is a square at a ramified place");
                let num = (a0 + mul_mod_u(b0, sqrt_img, p)) % p;
                Ok(ResidueElem::scalar(mul_mod_u(num, cinv, p)))
            }
        }
    }

    /// A canonical lift: reduce(lift(x)) = x and lift(0) = 0.
    pub fn lift(&self, x: ResidueElem) -> FieldElement {
        match self.splitting {
            Splitting::Inert => {
                let w = self.field.integral_generator();
                let e0 = FieldElement::from_int(self.field, x.e0 as i64);
                let e1 = FieldElement::from_int(self.field, x.e1 as i64);
                &e0 + &(&e1 * &w)
            }
            _ => {
                debug_assert_eq!(x.e1, 0);
                FieldElement::from_int(self.field, x.e0 as i64)
            }
        }
    }
}

fn inv_mod_u64(a: u64, p: u64) -> u64 {
    let (mut r0, mut r1) = (p as i128, (a % p) as i128);
    let (mut t0, mut t1) = (0i128, 1i128);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (t0, t1) = (t1, t0 - q * t1);
    }
    assert_eq!(r0, 1, "{a} not invertible mod {p}");
    t0.rem_euclid(p as i128) as u64
}

impl fmt::Display for LocalPlace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let kind = match self.splitting {
            Splitting::Rational => "rational",
            Splitting::Split { .. } => "split",
            Splitting::Inert => "inert",
            Splitting::Ramified => "ramified",
        };
        write!(f, "({kind} place above {} of {})", self.p, self.field)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn place(field: QuadraticField, p: u64, idx: usize) -> LocalPlace {
        LocalPlace::factor_prime(field, p).unwrap()[idx]
    }

    #[test]
    fn splitting_of_two() {
        let k7 = QuadraticField::quadratic(-7).unwrap();
        let places = LocalPlace::factor_prime(k7, 2).unwrap();
        assert_eq!(places.len(), 2, "2 splits in Q(sqrt(-7))");
        assert!(places.iter().all(|p| p.residue_degree() == 1));

        let ki = QuadraticField::quadratic(-1).unwrap();
        let places = LocalPlace::factor_prime(ki, 2).unwrap();
        assert_eq!(places.len(), 1);
        assert_eq!(places[0].splitting(), Splitting::Ramified);
        assert_eq!(places[0].e_abs(), 2);

        // -11 = 5 mod 8 and 2 does not divide disc(-11), so 2 is inert;
        // brute-force confirmation that x^2 = -11 mod 2 has the sole root 1
        // yet -11 is not 1 mod 8
        assert_eq!((-11i64).rem_euclid(8), 5);
        let k11 = QuadraticField::quadratic(-11).unwrap();
        let places = LocalPlace::factor_prime(k11, 2).unwrap();
        assert_eq!(places.len(), 1);
        assert_eq!(places[0].splitting(), Splitting::Inert);
        assert_eq!(places[0].residue_degree(), 2);
    }

    #[test]
    fn valuation_of_two_across_place_kinds() {
        let k7 = QuadraticField::quadratic(-7).unwrap();
        let a = k7.elem(1, 1, 2); // N(a) = 2, so (2) = (a)(abar)
        let p0 = place(k7, 2, 0);
        let p1 = place(k7, 2, 1);
        let two = k7.int(2);
        assert_eq!(p0.valuation(&two), Valuation::Finite(1));
        assert_eq!(p1.valuation(&two), Valuation::Finite(1));
        // index 0 is the place (a) fixed by the canonical root order
        assert_eq!(p0.valuation(&a), Valuation::Finite(1));
        assert_eq!(p1.valuation(&a), Valuation::Finite(0));
        assert_eq!(p1.valuation(&a.conjugate()), Valuation::Finite(1));

        let k11 = QuadraticField::quadratic(-11).unwrap();
        let inert = place(k11, 2, 0);
        assert_eq!(inert.valuation(&k11.int(2)), Valuation::Finite(1));

        let ki = QuadraticField::quadratic(-1).unwrap();
        let ram = place(ki, 2, 0);
        assert_eq!(ram.valuation(&ki.int(2)), Valuation::Finite(2));
        assert_eq!(ram.valuation(&ram.uniformizer()), Valuation::Finite(1));
    }

    #[test]
    fn reduce_examples() {
        let q7 = place(QuadraticField::RATIONAL, 7, 0);
        assert_eq!(
            q7.reduce(&QuadraticField::RATIONAL.int(10)).unwrap(),
            ResidueElem::scalar(3)
        );
        assert_eq!(
            q7.reduce(&QuadraticField::RATIONAL.int(0)).unwrap(),
            ResidueElem::ZERO
        );

        // (1 + sqrt(-11))/2 satisfies t^2 - t + 3 = 0; mod 2 its image must
        // satisfy t^2 + t + 1 = 0 in F_4, found here by exhaustion
        let k11 = QuadraticField::quadratic(-11).unwrap();
        let inert = place(k11, 2, 0);
        let w = k11.elem(1, 1, 2);
        let img = inert.reduce(&w).unwrap();
        let rf = inert.residue_field();
        let poly = [rf.from_int(1), rf.from_int(1), rf.from_int(1)];
        assert!(rf.eval(&poly, img).is_zero());

        let bad = k11.elem(1, 0, 2); // v = -1 at 2
        assert_eq!(inert.reduce(&bad), Err(Error::NegativeValuation));
    }

    #[test]
    fn reduction_is_ring_homomorphic_with_denominators() {
        let k7 = QuadraticField::quadratic(-7).unwrap();
        let p0 = place(k7, 2, 0);
        // x = conj(a)/1 has v = 0 at (a); a/conj(a) has v = 1 - 0 = 1
        let a = k7.elem(1, 1, 2);
        let x = &a / &a.conjugate();
        assert_eq!(p0.valuation(&x), Valuation::Finite(1));
        assert_eq!(p0.reduce(&x).unwrap(), ResidueElem::ZERO);
        let y = &a.conjugate() / &a;
        assert_eq!(p0.valuation(&y), Valuation::Finite(-1));
        assert!(p0.reduce(&y).is_err());
    }

    #[test]
    fn lift_round_trips() {
        let k11 = QuadraticField::quadratic(-11).unwrap();
        let inert = place(k11, 2, 0);
        let rf = inert.residue_field();
        for x in rf.elements() {
            assert_eq!(inert.reduce(&inert.lift(x)).unwrap(), x);
        }
        let ki = QuadraticField::quadratic(-1).unwrap();
        let ram = place(ki, 2, 0);
        for x in ram.residue_field().elements() {
            assert_eq!(ram.reduce(&ram.lift(x)).unwrap(), x);
        }
    }

    #[test]
    fn ramified_place_above_three() {
        let k3 = QuadraticField::quadratic(-3).unwrap();
        let places = LocalPlace::factor_prime(k3, 3).unwrap();
        assert_eq!(places.len(), 1);
        let pl = places[0];
        assert_eq!(pl.splitting(), Splitting::Ramified);
        assert_eq!(pl.valuation(&k3.int(3)), Valuation::Finite(2));
        let pi = pl.uniformizer();
        assert_eq!(pl.valuation(&pi), Valuation::Finite(1));
        // (3) = (sqrt(-3))^2 up to a unit
        let ratio = &k3.int(3) / &(&pi * &pi);
        assert_eq!(pl.valuation(&ratio), Valuation::Finite(0));
    }

    #[test]
    fn split_place_of_three_in_q_sqrt_minus_11() {
        let k11 = QuadraticField::quadratic(-11).unwrap();
        let places = LocalPlace::factor_prime(k11, 3).unwrap();
        assert_eq!(places.len(), 2, "x^2 = -11 = 1 mod 3 has roots 1, 2");
        let x = k11.elem(5, 8, 1); // norm 729 = 3^6
        let v0 = places[0].valuation(&x).finite();
        let v1 = places[1].valuation(&x).finite();
        assert_eq!(v0 + v1, 6, "split valuations sum to v_p(Norm)");
        assert_eq!((v0, v1), (0, 6));
    }

    #[test]
    fn values_are_shareable_between_threads() {
        fn assert_send_sync<T: Send + Sync>() {}
        assert_send_sync::<QuadraticField>();
        assert_send_sync::<FieldElement>();
        assert_send_sync::<LocalPlace>();
        assert_send_sync::<ResidueField>();
        assert_send_sync::<crate::weierstrass::WeierstrassModel>();
        assert_send_sync::<crate::tate::LocalData>();
    }

    #[test]
    fn unsupported_place_cap() {
        let k = QuadraticField::quadratic(-11).unwrap();
        let bound = ResidueBound {
            degree_one: 100,
            degree_two: 100,
        };
        // 101 is prime and exceeds the cap
        assert!(matches!(
            LocalPlace::factor_prime_bounded(k, 101, bound),
            Err(Error::UnsupportedPlace { .. })
        ));
        assert!(LocalPlace::factor_prime_bounded(k, 97, bound).is_ok());
        assert_eq!(
            LocalPlace::factor_prime(QuadraticField::RATIONAL, 10),
            Err(Error::NotPrime(10))
        );
    }
}
