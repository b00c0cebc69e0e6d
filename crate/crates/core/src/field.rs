//! Exact scalars: arbitrary-precision rationals and prime fields `F_p`.
//!
//! Every other module works over a [`FieldSpec`] chosen at runtime, so the
//! scalar type is a small tagged enum rather than a generic parameter. Mixing
//! scalars from different fields is a programming error and panics; the
//! polynomial and matrix layers check field compatibility before that can
//! happen and report it as an error instead.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Largest admissible prime characteristic (exclusive).
pub const MAX_PRIME: u64 = 1 << 31;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FieldError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("{0} is not a prime below 2^31")]
    InvalidCharacteristic(u64),
}

/// The ground field: `Q` or `F_p` with `p < 2^31`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum FieldSpec {
    Rationals,
    PrimeField(u32),
}

impl FieldSpec {
    /// `0` gives the rationals, a prime `p` gives `F_p`.
    pub fn from_characteristic(characteristic: u64) -> Result<Self, FieldError> {
        if characteristic == 0 {
            return Ok(FieldSpec::Rationals);
        }
        if characteristic >= MAX_PRIME || !is_prime(characteristic) {
            return Err(FieldError::InvalidCharacteristic(characteristic));
        }
        Ok(FieldSpec::PrimeField(characteristic as u32))
    }

    pub fn characteristic(&self) -> u64 {
        match self {
            FieldSpec::Rationals => 0,
            FieldSpec::PrimeField(p) => *p as u64,
        }
    }

    pub fn is_finite(&self) -> bool {
        matches!(self, FieldSpec::PrimeField(_))
    }

    pub fn zero(&self) -> Scalar {
        self.from_i64(0)
    }

    pub fn one(&self) -> Scalar {
        self.from_i64(1)
    }

    pub fn from_i64(&self, z: i64) -> Scalar {
        match *self {
            FieldSpec::Rationals => Scalar::Rational(BigRational::from_integer(BigInt::from(z))),
            FieldSpec::PrimeField(p) => Scalar::Modular {
                value: z.rem_euclid(p as i64) as u32,
                modulus: p,
            },
        }
    }

    /// Canonical image of an integer in the field.
    pub fn from_integer(&self, z: &BigInt) -> Scalar {
        match *self {
            FieldSpec::Rationals => Scalar::Rational(BigRational::from_integer(z.clone())),
            FieldSpec::PrimeField(p) => {
                let r = z.mod_floor(&BigInt::from(p));
                Scalar::Modular {
                    value: r.to_u32().expect("residue below modulus"),
                    modulus: p,
                }
            }
        }
    }

    /// Image of the fraction `num/den`; fails when `den` vanishes in the field.
    pub fn from_fraction(&self, num: &BigInt, den: &BigInt) -> Result<Scalar, FieldError> {
        let d = self.from_integer(den);
        Ok(self.from_integer(num).mul(&d.invert()?))
    }

    /// Re-interpret a scalar of another field in this one. Only rationals can
    /// be mapped into `F_p`, and only when `p` does not divide the denominator.
    pub fn coerce(&self, s: &Scalar) -> Result<Scalar, FieldError> {
        match (self, s) {
            (FieldSpec::Rationals, Scalar::Rational(_)) => Ok(s.clone()),
            (FieldSpec::PrimeField(p), Scalar::Modular { modulus, .. }) if p == modulus => {
                Ok(s.clone())
            }
            (FieldSpec::PrimeField(_), Scalar::Rational(q)) => self.from_fraction(q.numer(), q.denom()),
            _ => Err(FieldError::InvalidCharacteristic(s.field().characteristic())),
        }
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Rationals => write!(f, "QQ"),
            FieldSpec::PrimeField(p) => write!(f, "GF({p})"),
        }
    }
}

/// Deterministic trial division; characteristics are below 2^31.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut d = 3;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// An exact field element. Rationals are kept in lowest terms with a
/// positive denominator (guaranteed by `BigRational`); residues lie in `[0, p)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rational(BigRational),
    Modular { value: u32, modulus: u32 },
}

#[inline]
fn mulmod(a: u32, b: u32, p: u32) -> u32 {
    ((a as u64 * b as u64) % p as u64) as u32
}

fn powmod(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        exp >>= 1;
    }
    acc
}

impl Scalar {
    pub fn field(&self) -> FieldSpec {
        match self {
            Scalar::Rational(_) => FieldSpec::Rationals,
            Scalar::Modular { modulus, .. } => FieldSpec::PrimeField(*modulus),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rational(q) => q.is_zero(),
            Scalar::Modular { value, .. } => *value == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rational(q) => q.is_one(),
            Scalar::Modular { value, .. } => *value == 1,
        }
    }

    /// Multiplicative inverse.
    pub fn invert(&self) -> Result<Scalar, FieldError> {
        if self.is_zero() {
            return Err(FieldError::DivisionByZero);
        }
        Ok(match self {
            Scalar::Rational(q) => Scalar::Rational(q.recip()),
            Scalar::Modular { value, modulus } => Scalar::Modular {
                value: powmod(*value as u64, *modulus as u64 - 2, *modulus as u64) as u32,
                modulus: *modulus,
            },
        })
    }

    pub fn div(&self, rhs: &Scalar) -> Result<Scalar, FieldError> {
        Ok(self.mul(&rhs.invert()?))
    }

    pub fn pow(&self, exp: u32) -> Scalar {
        match self {
            Scalar::Rational(q) => Scalar::Rational(num_traits::pow(q.clone(), exp as usize)),
            Scalar::Modular { value, modulus } => Scalar::Modular {
                value: powmod(*value as u64, exp as u64, *modulus as u64) as u32,
                modulus: *modulus,
            },
        }
    }

    /// Residue modulo `p` of a rational (or the residue itself); `None` when
    /// `p` divides the denominator or the scalar lives in another prime field.
    pub fn residue_mod(&self, p: u32) -> Option<u32> {
        match self {
            Scalar::Rational(q) => {
                let pb = BigInt::from(p);
                let den = q.denom().mod_floor(&pb).to_u64()?;
                if den == 0 {
                    return None;
                }
                let num = q.numer().mod_floor(&pb).to_u64()?;
                let inv = powmod(den, p as u64 - 2, p as u64);
                Some((num * inv % p as u64) as u32)
            }
            Scalar::Modular { value, modulus } if *modulus == p => Some(*value),
            Scalar::Modular { .. } => None,
        }
    }

    /// Rational value, if this is a rational scalar.
    pub fn as_rational(&self) -> Option<&BigRational> {
        match self {
            Scalar::Rational(q) => Some(q),
            Scalar::Modular { .. } => None,
        }
    }

    /// `"num/den"` for rationals, the residue for prime-field elements.
    pub fn to_canonical_string(&self) -> String {
        match self {
            Scalar::Rational(q) => format!("{}/{}", q.numer(), q.denom()),
            Scalar::Modular { value, .. } => value.to_string(),
        }
    }

    /// Whether the scalar prints with a leading minus sign.
    pub fn is_negative(&self) -> bool {
        match self {
            Scalar::Rational(q) => q.is_negative(),
            Scalar::Modular { .. } => false,
        }
    }

    fn binop(&self, rhs: &Scalar, op: char) -> Scalar {
        match (self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(match op {
                '+' => a + b,
                '-' => a - b,
                _ => a * b,
            }),
            (
                Scalar::Modular { value: a, modulus: p },
                Scalar::Modular { value: b, modulus: q },
            ) if p == q => {
                let value = match op {
                    '+' => ((*a as u64 + *b as u64) % *p as u64) as u32,
                    '-' => ((*a as u64 + *p as u64 - *b as u64) % *p as u64) as u32,
                    _ => mulmod(*a, *b, *p),
                };
                Scalar::Modular { value, modulus: *p }
            }
            _ => panic!("scalar field mismatch: {} vs {}", self.field(), rhs.field()),
        }
    }
}

impl Add for &Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        self.binop(rhs, '+')
    }
}

impl Sub for &Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        self.binop(rhs, '-')
    }
}

impl Mul for &Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        self.binop(rhs, '*')
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Rational(q) => Scalar::Rational(-q),
            Scalar::Modular { value, modulus } => Scalar::Modular {
                value: if *value == 0 { 0 } else { modulus - value },
                modulus: *modulus,
            },
        }
    }
}

impl Scalar {
    pub fn add(&self, rhs: &Scalar) -> Scalar {
        self + rhs
    }
    pub fn sub(&self, rhs: &Scalar) -> Scalar {
        self - rhs
    }
    pub fn mul(&self, rhs: &Scalar) -> Scalar {
        self * rhs
    }
    pub fn neg(&self) -> Scalar {
        -self
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rational(q) => write!(f, "{q}"),
            Scalar::Modular { value, .. } => write!(f, "{value}"),
        }
    }
}

impl Serialize for Scalar {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_canonical_string())
    }
}

/// Canonical image of `z` in the field named by `spec`.
pub fn scalar_from_integer(spec: FieldSpec, z: i64) -> Scalar {
    spec.from_i64(z)
}

/// Inverse of a nonzero scalar.
pub fn scalar_invert(spec: FieldSpec, s: &Scalar) -> Result<Scalar, FieldError> {
    spec.coerce(s)?.invert()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn q(n: i64, d: i64) -> Scalar {
        Scalar::Rational(BigRational::new(n.into(), d.into()))
    }

    #[test]
    fn embeds_integers() {
        assert_eq!(scalar_from_integer(FieldSpec::Rationals, 7), q(7, 1));
        assert_eq!(scalar_from_integer(FieldSpec::Rationals, 7).to_canonical_string(), "7/1");
        let f2 = FieldSpec::from_characteristic(2).unwrap();
        assert_eq!(scalar_from_integer(f2, 2), Scalar::Modular { value: 0, modulus: 2 });
        let f5 = FieldSpec::from_characteristic(5).unwrap();
        assert_eq!(scalar_from_integer(f5, -3), Scalar::Modular { value: 2, modulus: 5 });
    }

    #[test]
    fn inverts() {
        assert_eq!(scalar_invert(FieldSpec::Rationals, &q(3, 4)).unwrap(), q(4, 3));
        let f5 = FieldSpec::PrimeField(5);
        assert_eq!(scalar_invert(f5, &f5.from_i64(2)).unwrap(), f5.from_i64(3));
        assert_eq!(
            scalar_invert(FieldSpec::Rationals, &q(0, 1)),
            Err(FieldError::DivisionByZero)
        );
        assert_eq!(scalar_invert(f5, &f5.zero()), Err(FieldError::DivisionByZero));
    }

    #[test]
    fn rejects_bad_characteristics() {
        assert!(FieldSpec::from_characteristic(4).is_err());
        assert!(FieldSpec::from_characteristic(1).is_err());
        assert!(FieldSpec::from_characteristic(MAX_PRIME + 11).is_err());
        assert_eq!(
            FieldSpec::from_characteristic(2_147_483_647).unwrap(),
            FieldSpec::PrimeField(2_147_483_647)
        );
    }

    #[test]
    fn residues_of_rationals() {
        assert_eq!(q(1, 2).residue_mod(5), Some(3));
        assert_eq!(q(-1, 3).residue_mod(7), Some(2));
        assert_eq!(q(1, 5).residue_mod(5), None);
    }

    #[test]
    fn big_numerators_stay_exact() {
        let big: BigInt = BigInt::from(2).pow(256u32) + 1;
        let a = Scalar::Rational(BigRational::new(big.clone(), BigInt::from(3)));
        let b = Scalar::Rational(BigRational::new(big.clone(), BigInt::from(7)));
        let s = &(&a * &b) - &(&a * &a);
        let expect = BigRational::new(&big * &big, BigInt::from(21))
            - BigRational::new(&big * &big, BigInt::from(9));
        assert_eq!(s, Scalar::Rational(expect));
        let back = &(&s * &s.invert().unwrap()) - &FieldSpec::Rationals.one();
        assert!(back.is_zero());
    }

    fn field_elems(spec: FieldSpec) -> impl Strategy<Value = (Scalar, Scalar, Scalar)> {
        let elem = (-1000i64..1000, 1i64..50).prop_map(move |(n, d)| match spec {
            FieldSpec::Rationals => q(n, d),
            FieldSpec::PrimeField(_) => spec.from_i64(n * d),
        });
        (elem.clone(), elem.clone(), elem)
    }

    fn check_axioms(a: &Scalar, b: &Scalar, c: &Scalar) {
        assert_eq!(&(a + b) + c, a + &(b + c));
        assert_eq!(&(a * b) * c, a * &(b * c));
        assert_eq!(a * &(b + c), &(a * b) + &(a * c));
        assert_eq!(a + b, b + a);
        assert_eq!(a * b, b * a);
        assert!((a + &a.neg()).is_zero());
        if !a.is_zero() {
            assert!((a * &a.invert().unwrap()).is_one());
        }
    }

    proptest! {
        #[test]
        fn rational_field_axioms((a, b, c) in field_elems(FieldSpec::Rationals)) {
            check_axioms(&a, &b, &c);
        }

        #[test]
        fn prime_field_axioms((a, b, c) in field_elems(FieldSpec::PrimeField(65521))) {
            check_axioms(&a, &b, &c);
        }

        #[test]
        fn small_prime_field_axioms((a, b, c) in field_elems(FieldSpec::PrimeField(7))) {
            check_axioms(&a, &b, &c);
        }
    }
}
