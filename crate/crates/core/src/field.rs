//! Exact scalars: rationals with unbounded integers, and prime fields GF(p).
//!
//! Every [`FieldElement`] carries its [`FieldSpec`]. Combining elements of two
//! different fields is a hard error: the `checked_*` methods return
//! [`Error::FieldMismatch`], and the operator impls panic. Containers in this
//! crate check field agreement when they are built, so the operators are only
//! reached on values already known to agree.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
enum Kind {
    Rationals,
    Prime(u64),
}

/// Which field a scalar lives in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct FieldSpec(Kind);

impl FieldSpec {
    /// The rational numbers.
    pub const fn rationals() -> Self {
        FieldSpec(Kind::Rationals)
    }

    /// GF(p). Fails with [`Error::NonPrimeModulus`] unless `p` is prime.
    pub fn prime(p: u64) -> Result<Self> {
        if is_prime(p) {
            Ok(FieldSpec(Kind::Prime(p)))
        } else {
            Err(Error::NonPrimeModulus(p))
        }
    }

    /// 0 for the rationals, p for GF(p).
    pub fn characteristic(&self) -> u64 {
        match self.0 {
            Kind::Rationals => 0,
            Kind::Prime(p) => p,
        }
    }

    pub fn is_rational(&self) -> bool {
        matches!(self.0, Kind::Rationals)
    }

    pub fn modulus(&self) -> Option<u64> {
        match self.0 {
            Kind::Rationals => None,
            Kind::Prime(p) => Some(p),
        }
    }

    pub fn zero(&self) -> FieldElement {
        FieldElement::from_i64(*self, 0)
    }

    pub fn one(&self) -> FieldElement {
        FieldElement::from_i64(*self, 1)
    }

    pub fn int(&self, n: i64) -> FieldElement {
        FieldElement::from_i64(*self, n)
    }
}

/// The characteristic of a field: 0 for Q, p for GF(p).
pub fn characteristic(spec: FieldSpec) -> u64 {
    spec.characteristic()
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.0 {
            Kind::Rationals => write!(f, "q"),
            Kind::Prime(p) => write!(f, "gf:{p}"),
        }
    }
}

impl FromStr for FieldSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "q" {
            return Ok(FieldSpec::rationals());
        }
        let digits = s
            .strip_prefix("gf:")
            .ok_or_else(|| Error::MalformedFieldSpec(s.to_string()))?;
        if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
            return Err(Error::MalformedFieldSpec(s.to_string()));
        }
        let p: u64 = digits
            .parse()
            .map_err(|_| Error::MalformedFieldSpec(s.to_string()))?;
        FieldSpec::prime(p)
    }
}

/// Deterministic Miller-Rabin, exact for every `u64`.
fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    const SMALL: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    for &q in &SMALL {
        if n.is_multiple_of(q) {
            return n == q;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d.is_multiple_of(2) {
        d /= 2;
        s += 1;
    }
    'witness: for &a in &SMALL {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

fn reduce_bigint(n: &BigInt, p: u64) -> u64 {
    n.mod_floor(&BigInt::from(p)).to_u64().expect("residue fits in u64")
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
enum Repr {
    Q(BigRational),
    P(u64),
}

/// An exact scalar in Q or GF(p).
///
/// Rationals are kept in lowest terms with a positive denominator; residues
/// are kept in `[0, p)`. Equality is therefore structural.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FieldElement {
    spec: FieldSpec,
    repr: Repr,
}

impl FieldElement {
    pub fn from_i64(spec: FieldSpec, n: i64) -> Self {
        Self::from_bigint(spec, &BigInt::from(n))
    }

    pub fn from_bigint(spec: FieldSpec, n: &BigInt) -> Self {
        let repr = match spec.0 {
            Kind::Rationals => Repr::Q(BigRational::from_integer(n.clone())),
            Kind::Prime(p) => Repr::P(reduce_bigint(n, p)),
        };
        FieldElement { spec, repr }
    }

    /// `num / den` in the given field.
    pub fn from_ratio(spec: FieldSpec, num: i64, den: i64) -> Result<Self> {
        Self::from_bigint_ratio(spec, &BigInt::from(num), &BigInt::from(den))
    }

    fn from_bigint_ratio(spec: FieldSpec, num: &BigInt, den: &BigInt) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        match spec.0 {
            Kind::Rationals => Ok(FieldElement {
                spec,
                repr: Repr::Q(BigRational::new(num.clone(), den.clone())),
            }),
            Kind::Prime(_) => {
                Self::from_bigint(spec, num).checked_div(&Self::from_bigint(spec, den))
            }
        }
    }

    pub fn spec(&self) -> FieldSpec {
        self.spec
    }

    pub fn is_zero(&self) -> bool {
        match &self.repr {
            Repr::Q(q) => q.is_zero(),
            Repr::P(v) => *v == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match &self.repr {
            Repr::Q(q) => q.is_one(),
            Repr::P(v) => *v == 1,
        }
    }

    /// The rational value, when the element lives in Q.
    pub fn as_rational(&self) -> Option<&BigRational> {
        match &self.repr {
            Repr::Q(q) => Some(q),
            Repr::P(_) => None,
        }
    }

    /// The canonical residue, when the element lives in GF(p).
    pub fn as_residue(&self) -> Option<u64> {
        match &self.repr {
            Repr::Q(_) => None,
            Repr::P(v) => Some(*v),
        }
    }

    fn same_field(&self, other: &Self) -> Result<()> {
        if self.spec == other.spec {
            Ok(())
        } else {
            Err(Error::FieldMismatch(
                self.spec.to_string(),
                other.spec.to_string(),
            ))
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.same_field(other)?;
        let repr = match (&self.repr, &other.repr, self.spec.0) {
            (Repr::Q(a), Repr::Q(b), _) => Repr::Q(a + b),
            (Repr::P(a), Repr::P(b), Kind::Prime(p)) => {
                Repr::P(((*a as u128 + *b as u128) % p as u128) as u64)
            }
            _ => unreachable!("representation always matches the field"),
        };
        Ok(FieldElement { spec: self.spec, repr })
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.same_field(other)?;
        self.checked_add(&other.neg_ref())
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.same_field(other)?;
        let repr = match (&self.repr, &other.repr, self.spec.0) {
            (Repr::Q(a), Repr::Q(b), _) => Repr::Q(a * b),
            (Repr::P(a), Repr::P(b), Kind::Prime(p)) => Repr::P(mul_mod(*a, *b, p)),
            _ => unreachable!("representation always matches the field"),
        };
        Ok(FieldElement { spec: self.spec, repr })
    }

    pub fn checked_div(&self, other: &Self) -> Result<Self> {
        self.same_field(other)?;
        self.checked_mul(&other.inv()?)
    }

    /// Multiplicative inverse; [`Error::DivisionByZero`] for 0.
    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let repr = match (&self.repr, self.spec.0) {
            (Repr::Q(q), _) => Repr::Q(q.recip()),
            (Repr::P(v), Kind::Prime(p)) => Repr::P(pow_mod(*v, p - 2, p)),
            _ => unreachable!("representation always matches the field"),
        };
        Ok(FieldElement { spec: self.spec, repr })
    }

    fn neg_ref(&self) -> Self {
        let repr = match (&self.repr, self.spec.0) {
            (Repr::Q(q), _) => Repr::Q(-q),
            (Repr::P(v), Kind::Prime(p)) => Repr::P(if *v == 0 { 0 } else { p - v }),
            _ => unreachable!("representation always matches the field"),
        };
        FieldElement { spec: self.spec, repr }
    }

    /// Integer power; negative exponents invert first.
    pub fn pow(&self, exp: i64) -> Result<Self> {
        let mut base = if exp < 0 { self.inv()? } else { self.clone() };
        let mut e = exp.unsigned_abs();
        let mut acc = self.spec.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        Ok(acc)
    }

    /// `(-1)^k` in this element's field.
    pub fn sign(spec: FieldSpec, odd: bool) -> Self {
        if odd {
            spec.int(-1)
        } else {
            spec.one()
        }
    }
}

/// Parses `-?digits` or `-?digits/-?digits` into the given field.
pub fn parse_scalar(text: &str, spec: FieldSpec) -> Result<FieldElement> {
    let malformed = || Error::MalformedScalar(text.to_string());
    let parse_int = |s: &str| -> Result<BigInt> {
        let digits = s.strip_prefix('-').unwrap_or(s);
        if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
            return Err(malformed());
        }
        s.parse::<BigInt>().map_err(|_| malformed())
    };
    let t = text.trim();
    let (num, den) = match t.split_once('/') {
        Some((n, d)) => (parse_int(n)?, parse_int(d)?),
        None => (parse_int(t)?, BigInt::one()),
    };
    if den.is_zero() {
        return Err(Error::ZeroDenominator(text.to_string()));
    }
    FieldElement::from_bigint_ratio(spec, &num, &den)
}

/// Inverse of `a`; errors on zero.
pub fn invert(a: &FieldElement) -> Result<FieldElement> {
    a.inv()
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.repr {
            Repr::Q(q) => {
                if q.denom().is_one() {
                    write!(f, "{}", q.numer())
                } else {
                    write!(f, "{}/{}", q.numer(), q.denom())
                }
            }
            Repr::P(v) => write!(f, "{v}"),
        }
    }
}

impl FieldElement {
    /// True when the printed form starts with a minus sign.
    pub fn is_negative_literal(&self) -> bool {
        match &self.repr {
            Repr::Q(q) => q.is_negative(),
            Repr::P(_) => false,
        }
    }
}

macro_rules! binop {
    ($tr:ident, $method:ident, $checked:ident, $assign_tr:ident, $assign:ident) => {
        impl $tr<&FieldElement> for &FieldElement {
            type Output = FieldElement;
            fn $method(self, rhs: &FieldElement) -> FieldElement {
                self.$checked(rhs).expect("mixed-field arithmetic")
            }
        }
        impl $tr<FieldElement> for FieldElement {
            type Output = FieldElement;
            fn $method(self, rhs: FieldElement) -> FieldElement {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&FieldElement> for FieldElement {
            type Output = FieldElement;
            fn $method(self, rhs: &FieldElement) -> FieldElement {
                (&self).$method(rhs)
            }
        }
        impl $tr<FieldElement> for &FieldElement {
            type Output = FieldElement;
            fn $method(self, rhs: FieldElement) -> FieldElement {
                self.$method(&rhs)
            }
        }
        impl $assign_tr<&FieldElement> for FieldElement {
            fn $assign(&mut self, rhs: &FieldElement) {
                *self = (&*self).$method(rhs);
            }
        }
        impl $assign_tr<FieldElement> for FieldElement {
            fn $assign(&mut self, rhs: FieldElement) {
                *self = (&*self).$method(&rhs);
            }
        }
    };
}

binop!(Add, add, checked_add, AddAssign, add_assign);
binop!(Sub, sub, checked_sub, SubAssign, sub_assign);
binop!(Mul, mul, checked_mul, MulAssign, mul_assign);

impl Neg for &FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        self.neg_ref()
    }
}

impl Neg for FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        self.neg_ref()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> FieldSpec {
        FieldSpec::rationals()
    }

    fn gf(p: u64) -> FieldSpec {
        FieldSpec::prime(p).unwrap()
    }

    #[test]
    fn parse_examples() {
        assert_eq!(parse_scalar("3/4", q()).unwrap().to_string(), "3/4");
        assert_eq!(parse_scalar("9", gf(7)).unwrap().to_string(), "2");
        assert_eq!(parse_scalar("-2/-4", q()).unwrap().to_string(), "1/2");
        assert_eq!(parse_scalar("-6/4", q()).unwrap().to_string(), "-3/2");
        assert_eq!(parse_scalar("-1", gf(7)).unwrap().to_string(), "6");
    }

    #[test]
    fn parse_errors() {
        assert!(matches!(parse_scalar("1/0", q()), Err(Error::ZeroDenominator(_))));
        assert!(matches!(parse_scalar("abc", q()), Err(Error::MalformedScalar(_))));
        assert!(matches!(parse_scalar("1.5", q()), Err(Error::MalformedScalar(_))));
        assert!(matches!(parse_scalar("", q()), Err(Error::MalformedScalar(_))));
        assert!(matches!(parse_scalar("--1", q()), Err(Error::MalformedScalar(_))));
        assert_eq!(FieldSpec::prime(9), Err(Error::NonPrimeModulus(9)));
        assert_eq!(FieldSpec::prime(1), Err(Error::NonPrimeModulus(1)));
        assert!(matches!(parse_scalar("1/7", gf(7)), Err(Error::DivisionByZero)));
    }

    #[test]
    fn field_selectors() {
        assert_eq!("q".parse::<FieldSpec>().unwrap(), q());
        assert_eq!("gf:101".parse::<FieldSpec>().unwrap(), gf(101));
        assert_eq!(gf(101).to_string(), "gf:101");
        assert!("gf:100".parse::<FieldSpec>().is_err());
        assert!("r".parse::<FieldSpec>().is_err());
        assert!("gf:".parse::<FieldSpec>().is_err());
    }

    #[test]
    fn invert_examples() {
        assert_eq!(invert(&q().one()).unwrap(), q().one());
        let two_thirds = FieldElement::from_ratio(q(), 2, 3).unwrap();
        assert_eq!(invert(&two_thirds).unwrap().to_string(), "3/2");
        // brute-force scan for the inverse of 3 in GF(7)
        let three = gf(7).int(3);
        let oracle = (1..7).find(|k| (3 * k) % 7 == 1).unwrap();
        assert_eq!(oracle, 5);
        assert_eq!(invert(&three).unwrap(), gf(7).int(oracle));
        assert_eq!(invert(&q().zero()), Err(Error::DivisionByZero));
    }

    #[test]
    fn characteristic_values() {
        assert_eq!(characteristic(q()), 0);
        assert_eq!(characteristic(gf(7)), 7);
        assert_eq!(characteristic(gf(2)), 2);
    }

    #[test]
    fn mixed_fields_are_rejected() {
        let a = q().one();
        let b = gf(7).one();
        assert!(matches!(a.checked_add(&b), Err(Error::FieldMismatch(..))));
        assert!(matches!(a.checked_mul(&b), Err(Error::FieldMismatch(..))));
    }

    #[test]
    fn primality_matches_trial_division() {
        for n in 0u64..2000 {
            let trial = n >= 2 && (2..n).take_while(|k| k * k <= n).all(|k| n % k != 0);
            assert_eq!(is_prime(n), trial, "n = {n}");
        }
        assert!(is_prime(18_446_744_073_709_551_557));
        assert!(!is_prime(18_446_744_073_709_551_559));
    }

    #[test]
    fn large_prime_arithmetic_does_not_overflow() {
        let p = gf(18_446_744_073_709_551_557);
        let a = p.int(-2);
        let b = a.inv().unwrap();
        assert!((&a * &b).is_one());
    }

    #[test]
    fn pow_and_sign() {
        let two = q().int(2);
        assert_eq!(two.pow(10).unwrap(), q().int(1024));
        assert_eq!(two.pow(-1).unwrap().to_string(), "1/2");
        assert_eq!(FieldElement::sign(q(), true), q().int(-1));
    }
}
