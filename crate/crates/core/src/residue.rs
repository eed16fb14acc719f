//! Residue fields F_p and F_{p^2} with exhaustive polynomial root finding.
//!
//! F_{p^2} elements are written e0 + e1*t where t is a fixed root of an
//! irreducible quadratic t^2 = s*t + u over F_p supplied by the place.

use crate::error::{Error, Result};

/// Caps on the supported residue characteristic; root finding is exhaustive.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ResidueBound {
    pub degree_one: u64,
    pub degree_two: u64,
}

impl Default for ResidueBound {
    fn default() -> Self {
        ResidueBound {
            degree_one: 1_000_000,
            degree_two: 10_000,
        }
    }
}

/// F_{p^f}, f in {1, 2}.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ResidueField {
    p: u64,
    /// `Some((s, u))` encodes the quadratic relation t^2 = s*t + u of F_{p^2}.
    ext: Option<(u64, u64)>,
}

/// An element of F_{p^f}: e0 + e1*t (e1 = 0 when f = 1).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ResidueElem {
    pub e0: u64,
    pub e1: u64,
}

impl ResidueElem {
    pub const ZERO: ResidueElem = ResidueElem { e0: 0, e1: 0 };
    pub const ONE: ResidueElem = ResidueElem { e0: 1, e1: 0 };

    pub fn scalar(e0: u64) -> Self {
        ResidueElem { e0, e1: 0 }
    }

    pub fn is_zero(&self) -> bool {
        self.e0 == 0 && self.e1 == 0
    }
}

fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn inv_mod(a: u64, p: u64) -> u64 {
    // extended Euclid; p prime, a != 0 mod p
    let (mut r0, mut r1) = (p as i128, (a % p) as i128);
    let (mut t0, mut t1) = (0i128, 1i128);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (t0, t1) = (t1, t0 - q * t1);
    }
    assert_eq!(r0, 1, "not invertible mod {p}");
    t0.rem_euclid(p as i128) as u64
}

impl ResidueField {
    pub fn prime_field(p: u64) -> Self {
        ResidueField { p, ext: None }
    }

    /// F_{p^2} with t^2 = s*t + u; the caller guarantees irreducibility.
    pub fn quadratic_ext(p: u64, s: u64, u: u64) -> Self {
        ResidueField {
            p,
            ext: Some((s % p, u % p)),
        }
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn degree(&self) -> u32 {
        if self.ext.is_some() {
            2
        } else {
            1
        }
    }

    pub fn cardinality(&self) -> u128 {
        let p = self.p as u128;
        if self.ext.is_some() {
            p * p
        } else {
            p
        }
    }

    pub fn from_int(&self, n: i64) -> ResidueElem {
        ResidueElem::scalar(n.rem_euclid(self.p as i64) as u64)
    }

    pub fn add(&self, x: ResidueElem, y: ResidueElem) -> ResidueElem {
        ResidueElem {
            e0: (x.e0 + y.e0) % self.p,
            e1: (x.e1 + y.e1) % self.p,
        }
    }

    pub fn neg(&self, x: ResidueElem) -> ResidueElem {
        ResidueElem {
            e0: (self.p - x.e0 % self.p) % self.p,
            e1: (self.p - x.e1 % self.p) % self.p,
        }
    }

    pub fn sub(&self, x: ResidueElem, y: ResidueElem) -> ResidueElem {
        self.add(x, self.neg(y))
    }

    pub fn mul(&self, x: ResidueElem, y: ResidueElem) -> ResidueElem {
        let p = self.p;
        match self.ext {
            None => ResidueElem::scalar(mul_mod(x.e0, y.e0, p)),
            Some((s, u)) => {
                // (x0 + x1 t)(y0 + y1 t) with t^2 = s t + u
                let cross = (mul_mod(x.e0, y.e1, p) + mul_mod(x.e1, y.e0, p)) % p;
                let tt = mul_mod(x.e1, y.e1, p);
                ResidueElem {
                    e0: (mul_mod(x.e0, y.e0, p) + mul_mod(tt, u, p)) % p,
                    e1: (cross + mul_mod(tt, s, p)) % p,
                }
            }
        }
    }

    pub fn inv(&self, x: ResidueElem) -> Result<ResidueElem> {
        if x.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let p = self.p;
        match self.ext {
            None => Ok(ResidueElem::scalar(inv_mod(x.e0, p))),
            Some((s, _)) => {
                // conjugate of t is s - t, so N(x) = x * conj(x) lies in F_p
                let conj = ResidueElem {
                    e0: (x.e0 + mul_mod(x.e1, s, p)) % p,
                    e1: (p - x.e1 % p) % p,
                };
                let n = self.mul(x, conj);
                debug_assert_eq!(n.e1, 0);
                let ninv = inv_mod(n.e0, p);
                Ok(self.mul(conj, ResidueElem::scalar(ninv)))
            }
        }
    }

    pub fn elements(&self) -> impl Iterator<Item = ResidueElem> + '_ {
        let p = self.p;
        let top = if self.ext.is_some() { p } else { 1 };
        (0..top).flat_map(move |e1| (0..p).map(move |e0| ResidueElem { e0, e1 }))
    }

    pub fn eval(&self, poly: &[ResidueElem], x: ResidueElem) -> ResidueElem {
        let mut acc = ResidueElem::ZERO;
        for &coeff in poly.iter().rev() {
            acc = self.add(self.mul(acc, x), coeff);
        }
        acc
    }

    /// Divide `poly` (ascending coefficients) by (X - root); remainder must vanish.
    fn deflate(&self, poly: &[ResidueElem], root: ResidueElem) -> Vec<ResidueElem> {
        let mut out = vec![ResidueElem::ZERO; poly.len() - 1];
        let mut carry = ResidueElem::ZERO;
        for i in (0..poly.len()).rev() {
            let cur = self.add(poly[i], self.mul(carry, root));
            if i == 0 {
                debug_assert!(cur.is_zero(), "deflation by a non-root");
            } else {
                out[i - 1] = cur;
                carry = cur;
            }
        }
        out
    }

    fn trim(poly: &[ResidueElem]) -> &[ResidueElem] {
        let mut n = poly.len();
        while n > 0 && poly[n - 1].is_zero() {
            n -= 1;
        }
        &poly[..n]
    }

    /// All roots in F_{p^f} with multiplicities, found by exhaustive search,
    /// together with a separability flag for the splitting field.
    pub fn solve(&self, poly: &[ResidueElem]) -> Result<RootReport> {
        let poly = Self::trim(poly);
        if poly.is_empty() {
            return Err(Error::ZeroPolynomial);
        }
        let degree = poly.len() - 1;
        let mut roots = Vec::new();
        for x in self.elements() {
            if self.eval(poly, x).is_zero() {
                let mut m = 1;
                let mut reduced = self.deflate(poly, x);
                while ResidueField::trim(&reduced).len() > 1
                    && self.eval(&reduced, x).is_zero()
                {
                    reduced = self.deflate(&reduced, x);
                    m += 1;
                }
                roots.push((x, m));
            }
        }
        roots.sort();
        let separable = match degree {
            0 | 1 => true,
            2..=4 => !self.discriminant(poly).is_zero(),
            // beyond the supported degrees repeated roots may hide in an
            // extension; fall back to what exhaustion saw
            _ => roots.iter().all(|&(_, m)| m == 1),
        };
        Ok(RootReport {
            degree,
            roots,
            separable,
        })
    }

    /// Discriminant of a degree 2..4 polynomial via the universal integer
    /// formulas, so `disc = 0` detects repeated roots over the closure in
    /// every characteristic.
    pub fn discriminant(&self, poly: &[ResidueElem]) -> ResidueElem {
        let poly = Self::trim(poly);
        let f = |i: usize| poly[i];
        let m = |x: ResidueElem, y: ResidueElem| self.mul(x, y);
        let s = |x: ResidueElem, y: ResidueElem| self.add(x, y);
        let k = |n: i64| self.from_int(n);
        match poly.len() - 1 {
            2 => {
                let (c, b, a) = (f(0), f(1), f(2));
                // b^2 - 4ac
                self.sub(m(b, b), m(k(4), m(a, c)))
            }
            3 => {
                let (d, c, b, a) = (f(0), f(1), f(2), f(3));
                // 18abcd - 4b^3d + b^2c^2 - 4ac^3 - 27a^2d^2
                let mut acc = m(k(18), m(a, m(b, m(c, d))));
                acc = s(acc, m(k(-4), m(b, m(b, m(b, d)))));
                acc = s(acc, m(b, m(b, m(c, c))));
                acc = s(acc, m(k(-4), m(a, m(c, m(c, c)))));
                acc = s(acc, m(k(-27), m(a, m(a, m(d, d)))));
                acc
            }
            4 => {
                let (e, d, c, b, a) = (f(0), f(1), f(2), f(3), f(4));
                let terms: [(i64, ResidueElem); 16] = [
                    (256, m(a, m(a, m(a, m(e, m(e, e)))))),
                    (-192, m(a, m(a, m(b, m(d, m(e, e)))))),
                    (-128, m(a, m(a, m(c, m(c, m(e, e)))))),
                    (144, m(a, m(a, m(c, m(d, m(d, e)))))),
                    (-27, m(a, m(a, m(d, m(d, m(d, d)))))),
                    (144, m(a, m(b, m(b, m(c, m(e, e)))))),
                    (-6, m(a, m(b, m(b, m(d, m(d, e)))))),
                    (-80, m(a, m(b, m(c, m(c, m(d, e)))))),
                    (18, m(a, m(b, m(c, m(d, m(d, d)))))),
                    (16, m(a, m(c, m(c, m(c, m(c, e)))))),
                    (-4, m(a, m(c, m(c, m(c, m(d, d)))))),
                    (-27, m(b, m(b, m(b, m(b, m(e, e)))))),
                    (18, m(b, m(b, m(b, m(c, m(d, e)))))),
                    (-4, m(b, m(b, m(b, m(d, m(d, d)))))),
                    (-4, m(b, m(b, m(c, m(c, m(c, e)))))),
                    (1, m(b, m(b, m(c, m(c, m(d, d)))))),
                ];
                let mut acc = ResidueElem::ZERO;
                for (coeff, t) in terms {
                    acc = s(acc, m(k(coeff), t));
                }
                acc
            }
            _ => panic!("discriminant only implemented for degrees 2..=4"),
        }
    }
}

/// Outcome of exhaustive root finding.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootReport {
    pub degree: usize,
    /// Roots in F_{p^f} with multiplicities, sorted.
    pub roots: Vec<(ResidueElem, usize)>,
    /// Whether the polynomial is squarefree over the algebraic closure.
    pub separable: bool,
}

impl RootReport {
    pub fn roots_only(&self) -> Vec<ResidueElem> {
        self.roots.iter().map(|&(r, _)| r).collect()
    }

    pub fn multiple_root(&self) -> Option<(ResidueElem, usize)> {
        self.roots.iter().copied().find(|&(_, m)| m > 1)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f7() -> ResidueField {
        ResidueField::prime_field(7)
    }

    fn f4() -> ResidueField {
        // F_4 = F_2[t]/(t^2 + t + 1), i.e. t^2 = t + 1
        ResidueField::quadratic_ext(2, 1, 1)
    }

    #[test]
    fn roots_of_x2_minus_2_in_f7() {
        let rf = f7();
        let poly = [rf.from_int(-2), rf.from_int(0), rf.from_int(1)];
        let rep = rf.solve(&poly).unwrap();
        assert_eq!(
            rep.roots_only(),
            vec![ResidueElem::scalar(3), ResidueElem::scalar(4)]
        );
        assert!(rep.separable);
    }

    #[test]
    fn irreducible_quadratic_over_f2() {
        let rf = ResidueField::prime_field(2);
        let poly = [rf.from_int(1), rf.from_int(1), rf.from_int(1)];
        let rep = rf.solve(&poly).unwrap();
        assert!(rep.roots.is_empty());
        // x^2+x+1 splits with distinct roots in F_4
        assert!(rep.separable);
    }

    #[test]
    fn same_quadratic_splits_in_f4() {
        let rf = f4();
        let poly = [rf.from_int(1), rf.from_int(1), rf.from_int(1)];
        let rep = rf.solve(&poly).unwrap();
        assert_eq!(rep.roots.len(), 2);
        for (r, m) in &rep.roots {
            assert_eq!(*m, 1);
            assert_ne!(r.e1, 0, "roots are the non-prime-field elements");
        }
    }

    #[test]
    fn char2_double_root_detected_by_discriminant() {
        // x^2 + 1 = (x+1)^2 over F_2
        let rf = ResidueField::prime_field(2);
        let poly = [rf.from_int(1), rf.from_int(0), rf.from_int(1)];
        let rep = rf.solve(&poly).unwrap();
        assert_eq!(rep.roots, vec![(ResidueElem::scalar(1), 2)]);
        assert!(!rep.separable);
    }

    #[test]
    fn root_count_bounded_by_degree() {
        let rf = f7();
        for a in 0..7 {
            for b in 0..7 {
                for c in 1..7 {
                    let poly = [rf.from_int(a), rf.from_int(b), rf.from_int(c)];
                    let rep = rf.solve(&poly).unwrap();
                    let total: usize = rep.roots.iter().map(|&(_, m)| m).sum();
                    assert!(total <= rep.degree);
                    for (r, _) in &rep.roots {
                        assert!(rf.eval(&poly, *r).is_zero());
                    }
                }
            }
        }
    }

    #[test]
    fn f4_inverses() {
        let rf = f4();
        for x in rf.elements().filter(|x| !x.is_zero()) {
            let i = rf.inv(x).unwrap();
            assert_eq!(rf.mul(x, i), ResidueElem::ONE);
        }
    }

    #[test]
    fn zero_polynomial_rejected() {
        let rf = f7();
        assert_eq!(rf.solve(&[]), Err(Error::ZeroPolynomial));
        assert_eq!(
            rf.solve(&[ResidueElem::ZERO, ResidueElem::ZERO]),
            Err(Error::ZeroPolynomial)
        );
    }
}
