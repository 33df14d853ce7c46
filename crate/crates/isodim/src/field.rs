//! Scalar arithmetic: the prime fields GF(p) and the rationals Q.
//!
//! Every element is stored in canonical form — a reduced residue in
//! `[0, p)` over GF(p), a reduced fraction with positive denominator over
//! Q — so structural equality is field equality and formatting is
//! deterministic.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::Error;

/// Identifies a scalar field: GF(p) for a prime modulus p, or Q.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FieldSpec(Kind);

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
enum Kind {
    Prime(u64),
    Rationals,
}

impl FieldSpec {
    /// The prime field GF(p).  Primality is checked by trial division.
    pub fn prime(p: u64) -> Result<FieldSpec, Error> {
        if is_prime(p) {
            Ok(FieldSpec(Kind::Prime(p)))
        } else {
            Err(Error::CompositeModulus(p))
        }
    }

    /// The field of rational numbers.
    pub const fn rationals() -> FieldSpec {
        FieldSpec(Kind::Rationals)
    }

    pub fn is_prime_field(self) -> bool {
        matches!(self.0, Kind::Prime(_))
    }

    /// The modulus of a prime field, `None` for Q.
    pub fn modulus(self) -> Option<u64> {
        match self.0 {
            Kind::Prime(p) => Some(p),
            Kind::Rationals => None,
        }
    }

    pub(crate) fn require_same(self, other: FieldSpec) -> Result<(), Error> {
        if self == other {
            Ok(())
        } else {
            Err(Error::MismatchedField(self, other))
        }
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.0 {
            Kind::Prime(p) => write!(f, "GF({p})"),
            Kind::Rationals => write!(f, "Q"),
        }
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3u64;
    while (d as u128) * (d as u128) <= n as u128 {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

/// An element of a specific field.
///
/// The element remembers which field it belongs to; binary operations
/// reject operands from different fields.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FieldElement {
    spec: FieldSpec,
    repr: Repr,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
enum Repr {
    Residue(u64),
    Ratio(BigRational),
}

impl FieldElement {
    pub fn zero(spec: FieldSpec) -> FieldElement {
        FieldElement::from_integer(spec, 0)
    }

    pub fn one(spec: FieldSpec) -> FieldElement {
        FieldElement::from_integer(spec, 1)
    }

    /// The image of an integer in the field: reduced mod p over GF(p),
    /// the fraction n/1 over Q.
    pub fn from_integer(spec: FieldSpec, n: i64) -> FieldElement {
        let repr = match spec.0 {
            Kind::Prime(p) => Repr::Residue((n as i128).rem_euclid(p as i128) as u64),
            Kind::Rationals => Repr::Ratio(BigRational::from_integer(BigInt::from(n))),
        };
        FieldElement { spec, repr }
    }

    /// The fraction n/d in the field; fails when d maps to zero.
    pub fn from_ratio(spec: FieldSpec, numer: i64, denom: i64) -> Result<FieldElement, Error> {
        FieldElement::from_integer(spec, numer).div(&FieldElement::from_integer(spec, denom))
    }

    /// The element of a prime field with the given residue, reduced mod p.
    pub fn from_residue(spec: FieldSpec, r: u64) -> Result<FieldElement, Error> {
        match spec.modulus() {
            Some(p) => Ok(FieldElement {
                spec,
                repr: Repr::Residue(r % p),
            }),
            None => Err(Error::PrimeFieldRequired),
        }
    }

    pub fn spec(&self) -> FieldSpec {
        self.spec
    }

    pub fn is_zero(&self) -> bool {
        match &self.repr {
            Repr::Residue(r) => *r == 0,
            Repr::Ratio(q) => q.is_zero(),
        }
    }

    pub fn is_one(&self) -> bool {
        match &self.repr {
            Repr::Residue(r) => *r == 1,
            Repr::Ratio(q) => q.is_one(),
        }
    }

    /// The residue in `[0, p)` for a prime-field element, `None` over Q.
    pub fn residue(&self) -> Option<u64> {
        match &self.repr {
            Repr::Residue(r) => Some(*r),
            Repr::Ratio(_) => None,
        }
    }

    /// The reduced fraction behind a rational element, `None` over GF(p).
    pub fn rational(&self) -> Option<&BigRational> {
        match &self.repr {
            Repr::Ratio(q) => Some(q),
            Repr::Residue(_) => None,
        }
    }

    pub fn add(&self, rhs: &FieldElement) -> Result<FieldElement, Error> {
        self.spec.require_same(rhs.spec)?;
        Ok(self.plus(rhs))
    }

    pub fn sub(&self, rhs: &FieldElement) -> Result<FieldElement, Error> {
        self.spec.require_same(rhs.spec)?;
        Ok(self.minus(rhs))
    }

    pub fn mul(&self, rhs: &FieldElement) -> Result<FieldElement, Error> {
        self.spec.require_same(rhs.spec)?;
        Ok(self.times(rhs))
    }

    pub fn div(&self, rhs: &FieldElement) -> Result<FieldElement, Error> {
        self.spec.require_same(rhs.spec)?;
        if rhs.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(self.times(&rhs.recip()))
    }

    pub fn inv(&self) -> Result<FieldElement, Error> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(self.recip())
    }

    pub fn neg(&self) -> FieldElement {
        let repr = match &self.repr {
            Repr::Residue(r) => {
                let p = self.modulus();
                Repr::Residue((p - r) % p)
            }
            Repr::Ratio(q) => Repr::Ratio(-q),
        };
        FieldElement { spec: self.spec, repr }
    }

    /// Parses one scalar token: `sign? digits` over a prime field
    /// (reduced mod p), `sign? digits (/ sign? digits)?` over Q.
    pub fn parse(spec: FieldSpec, text: &str) -> Result<FieldElement, Error> {
        let parse_int = |part: &str| {
            BigInt::from_str(part).map_err(|_| Error::Parse(format!("invalid scalar `{text}`")))
        };
        match spec.0 {
            Kind::Prime(p) => {
                if text.contains('/') {
                    return Err(Error::Parse(format!(
                        "fractions are not valid over {spec}: `{text}`"
                    )));
                }
                let n = parse_int(text)?;
                let p = BigInt::from(p);
                let r = ((n % &p) + &p) % &p;
                Ok(FieldElement {
                    spec,
                    repr: Repr::Residue(r.to_u64().expect("reduced residue fits u64")),
                })
            }
            Kind::Rationals => {
                let (ns, ds) = text.split_once('/').unwrap_or((text, "1"));
                let n = parse_int(ns)?;
                let d = parse_int(ds)?;
                if d.is_zero() {
                    return Err(Error::Parse(format!("zero denominator in `{text}`")));
                }
                Ok(FieldElement {
                    spec,
                    repr: Repr::Ratio(BigRational::new(n, d)),
                })
            }
        }
    }

    // Crate-internal arithmetic for algorithms that already hold uniform
    // field invariants; panics instead of surfacing mismatch errors.

    pub(crate) fn plus(&self, rhs: &FieldElement) -> FieldElement {
        let repr = match (&self.repr, &rhs.repr) {
            (Repr::Residue(a), Repr::Residue(b)) => {
                let p = self.modulus() as u128;
                Repr::Residue(((*a as u128 + *b as u128) % p) as u64)
            }
            (Repr::Ratio(a), Repr::Ratio(b)) => Repr::Ratio(a + b),
            _ => panic!("mismatched fields in internal arithmetic"),
        };
        self.check_same(rhs);
        FieldElement { spec: self.spec, repr }
    }

    pub(crate) fn minus(&self, rhs: &FieldElement) -> FieldElement {
        let repr = match (&self.repr, &rhs.repr) {
            (Repr::Residue(a), Repr::Residue(b)) => {
                let p = self.modulus() as u128;
                Repr::Residue(((*a as u128 + p - *b as u128) % p) as u64)
            }
            (Repr::Ratio(a), Repr::Ratio(b)) => Repr::Ratio(a - b),
            _ => panic!("mismatched fields in internal arithmetic"),
        };
        self.check_same(rhs);
        FieldElement { spec: self.spec, repr }
    }

    pub(crate) fn times(&self, rhs: &FieldElement) -> FieldElement {
        let repr = match (&self.repr, &rhs.repr) {
            (Repr::Residue(a), Repr::Residue(b)) => {
                let p = self.modulus() as u128;
                Repr::Residue(((*a as u128 * *b as u128) % p) as u64)
            }
            (Repr::Ratio(a), Repr::Ratio(b)) => Repr::Ratio(a * b),
            _ => panic!("mismatched fields in internal arithmetic"),
        };
        self.check_same(rhs);
        FieldElement { spec: self.spec, repr }
    }

    pub(crate) fn recip(&self) -> FieldElement {
        let repr = match &self.repr {
            Repr::Residue(r) => Repr::Residue(inv_mod(*r, self.modulus())),
            Repr::Ratio(q) => Repr::Ratio(BigRational::new(q.denom().clone(), q.numer().clone())),
        };
        FieldElement { spec: self.spec, repr }
    }

    fn modulus(&self) -> u64 {
        self.spec.modulus().expect("prime-field representation")
    }

    fn check_same(&self, rhs: &FieldElement) {
        assert_eq!(
            self.spec, rhs.spec,
            "mismatched fields in internal arithmetic"
        );
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.repr {
            Repr::Residue(r) => write!(f, "{r}"),
            Repr::Ratio(q) => {
                if q.denom().is_one() {
                    write!(f, "{}", q.numer())
                } else {
                    write!(f, "{}/{}", q.numer(), q.denom())
                }
            }
        }
    }
}

/// Modular inverse by the extended Euclidean algorithm; `a` must be a
/// nonzero residue mod the prime `p`.
fn inv_mod(a: u64, p: u64) -> u64 {
    debug_assert!(a != 0 && a < p);
    let (mut t, mut new_t): (i128, i128) = (0, 1);
    let (mut r, mut new_r): (i128, i128) = (p as i128, a as i128);
    while new_r != 0 {
        let q = r / new_r;
        (t, new_t) = (new_t, t - q * new_t);
        (r, new_r) = (new_r, r - q * new_r);
    }
    debug_assert_eq!(r, 1, "prime modulus guarantees gcd 1");
    (t.rem_euclid(p as i128)) as u64
}
