//! Rationals whose denominators only involve a declared set of inverted primes.

use std::collections::BTreeSet;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d.saturating_mul(d) <= p {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Distinct prime factors of `n`, ascending. Zero and units have none.
pub fn prime_factors(n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut n = n;
    let mut d = 2u64;
    while d.saturating_mul(d) <= n {
        if n % d == 0 {
            out.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// A finite set of primes `S`, standing for the ring `Z[1/S]`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<u64>", into = "Vec<u64>")]
pub struct InvertedSet {
    primes: BTreeSet<u64>,
}

impl InvertedSet {
    /// The empty set: plain integers.
    pub fn integers() -> Self {
        Self::default()
    }

    pub fn new(primes: impl IntoIterator<Item = u64>) -> Result<Self> {
        let mut set = BTreeSet::new();
        for p in primes {
            if !is_prime(p) {
                return Err(Error::NotPrime(p));
            }
            set.insert(p);
        }
        Ok(Self { primes: set })
    }

    /// The primes dividing `n`, i.e. the set needed to form `Z[1/n]`.
    pub fn inverting(n: i64) -> Self {
        Self {
            primes: prime_factors(n.unsigned_abs()).into_iter().collect(),
        }
    }

    pub fn primes(&self) -> impl Iterator<Item = u64> + '_ {
        self.primes.iter().copied()
    }

    pub fn contains(&self, p: u64) -> bool {
        self.primes.contains(&p)
    }

    pub fn is_empty(&self) -> bool {
        self.primes.is_empty()
    }

    pub fn union(&self, other: &Self) -> Self {
        Self {
            primes: self.primes.union(&other.primes).copied().collect(),
        }
    }

    pub fn with(&self, primes: impl IntoIterator<Item = u64>) -> Result<Self> {
        Ok(self.union(&Self::new(primes)?))
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        self.primes.is_subset(&other.primes)
    }

    /// True when every prime factor of `n` lies in the set.
    pub fn inverts(&self, n: &BigUint) -> bool {
        self.strip(n).is_one()
    }

    /// Removes every prime of the set from `n`, leaving the part of `n`
    /// that stays a non-unit in `Z[1/S]`.
    pub fn strip(&self, n: &BigUint) -> BigUint {
        if n.is_zero() {
            return BigUint::zero();
        }
        let mut n = n.clone();
        for &p in &self.primes {
            let p = BigUint::from(p);
            while (&n % &p).is_zero() {
                n /= &p;
            }
        }
        n
    }

    pub fn strip_u64(&self, n: u64) -> u64 {
        self.strip(&BigUint::from(n))
            .to_u64()
            .expect("stripping primes cannot grow a u64")
    }
}

impl TryFrom<Vec<u64>> for InvertedSet {
    type Error = Error;

    fn try_from(v: Vec<u64>) -> Result<Self> {
        Self::new(v)
    }
}

impl From<InvertedSet> for Vec<u64> {
    fn from(s: InvertedSet) -> Self {
        s.primes.into_iter().collect()
    }
}

impl fmt::Display for InvertedSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.primes.is_empty() {
            return write!(f, "Z");
        }
        let n: Vec<String> = self.primes.iter().map(|p| p.to_string()).collect();
        write!(f, "Z[1/{}]", n.join("*"))
    }
}

/// An element of `Z[1/S]`, stored as a reduced fraction together with `S`.
///
/// Equality compares values only; two scalars living in different rings
/// but naming the same rational number are equal.
#[derive(Clone, Debug)]
pub struct LocalizedScalar {
    value: BigRational,
    context: InvertedSet,
}

impl LocalizedScalar {
    pub fn new(numerator: BigInt, denominator: BigInt, context: InvertedSet) -> Result<Self> {
        if denominator.is_zero() {
            return Err(Error::ZeroDenominator(format!("{numerator}/0")));
        }
        Self::from_rational(BigRational::new(numerator, denominator), context)
    }

    pub fn from_rational(value: BigRational, context: InvertedSet) -> Result<Self> {
        let den = value.denom().magnitude().clone();
        if !context.inverts(&den) {
            return Err(Error::NotInvertible {
                value: format!("1/{den}"),
                context: context.to_string(),
            });
        }
        Ok(Self { value, context })
    }

    pub fn integer(n: impl Into<BigInt>, context: &InvertedSet) -> Self {
        Self {
            value: BigRational::from_integer(n.into()),
            context: context.clone(),
        }
    }

    pub fn zero(context: &InvertedSet) -> Self {
        Self::integer(0, context)
    }

    pub fn one(context: &InvertedSet) -> Self {
        Self::integer(1, context)
    }

    pub fn value(&self) -> &BigRational {
        &self.value
    }

    pub fn numerator(&self) -> &BigInt {
        self.value.numer()
    }

    pub fn denominator(&self) -> &BigInt {
        self.value.denom()
    }

    pub fn context(&self) -> &InvertedSet {
        &self.context
    }

    pub fn is_zero(&self) -> bool {
        self.value.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.value.is_one()
    }

    pub fn is_integer(&self) -> bool {
        self.value.is_integer()
    }

    /// Moves the scalar into a larger ring.
    pub fn widen(&self, context: &InvertedSet) -> Self {
        Self {
            value: self.value.clone(),
            context: self.context.union(context),
        }
    }

    /// Re-reads the value in `context`, failing if its denominator is not a unit there.
    pub fn in_context(&self, context: &InvertedSet) -> Result<Self> {
        Self::from_rational(self.value.clone(), context.clone())
    }

    /// True when combining with `other` has to enlarge either ring.
    pub fn mixes_context(&self, other: &Self) -> bool {
        self.context != other.context
    }

    /// `self + other` together with a flag recording whether the contexts differed.
    pub fn add_flagged(&self, other: &Self) -> (Self, bool) {
        (self + other, self.mixes_context(other))
    }

    /// `self * other` together with a flag recording whether the contexts differed.
    pub fn mul_flagged(&self, other: &Self) -> (Self, bool) {
        (self * other, self.mixes_context(other))
    }

    pub fn inverse(&self) -> Result<Self> {
        let num = self.value.numer().magnitude();
        if self.value.is_zero() || !self.context.inverts(num) {
            return Err(Error::NotInvertible {
                value: self.to_string(),
                context: self.context.to_string(),
            });
        }
        Ok(Self {
            value: self.value.recip(),
            context: self.context.clone(),
        })
    }

    pub fn checked_div(&self, other: &Self) -> Result<Self> {
        let ctx = self.context.union(&other.context);
        let inv = other.widen(&ctx).inverse()?;
        Ok(self * &inv)
    }

    /// Integer power; negative exponents require the value to be a unit.
    pub fn pow(&self, exp: i64) -> Result<Self> {
        let base = if exp < 0 { self.inverse()? } else { self.clone() };
        let e = i32::try_from(exp.unsigned_abs()).map_err(|_| Error::Overflow)?;
        Ok(Self {
            value: num_traits::pow::Pow::pow(&base.value, e as u32),
            context: self.context.clone(),
        })
    }

    /// The residue of this scalar acting on `Z/order`, if its denominator
    /// is prime to `order`.
    pub fn residue_mod(&self, order: u64) -> Option<u64> {
        let m = BigInt::from(order);
        let den = self.value.denom().mod_floor(&m);
        let inv = mod_inverse(&den, &m)?;
        let r = (self.value.numer().mod_floor(&m) * inv).mod_floor(&m);
        r.to_u64()
    }
}

fn mod_inverse(a: &BigInt, m: &BigInt) -> Option<BigInt> {
    if m.is_one() {
        return Some(BigInt::zero());
    }
    let g = a.extended_gcd(m);
    if !g.gcd.is_one() {
        return None;
    }
    Some(g.x.mod_floor(m))
}

impl PartialEq for LocalizedScalar {
    fn eq(&self, other: &Self) -> bool {
        self.value == other.value
    }
}

impl Eq for LocalizedScalar {}

impl fmt::Display for LocalizedScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.value.is_integer() {
            write!(f, "{}", self.value.numer())
        } else {
            write!(f, "{}/{}", self.value.numer(), self.value.denom())
        }
    }
}

impl FromStr for LocalizedScalar {
    type Err = Error;

    /// Parses `p` or `p/q`; the context is the smallest one making the value legal.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::ParseScalar(s.to_string());
        let (n, d) = match s.trim().split_once('/') {
            Some((n, d)) => (n.trim(), d.trim()),
            None => (s.trim(), "1"),
        };
        let n: BigInt = n.parse().map_err(|_| bad())?;
        let d: BigInt = d.parse().map_err(|_| bad())?;
        if d.is_zero() {
            return Err(Error::ZeroDenominator(s.to_string()));
        }
        let value = BigRational::new(n, d);
        let ctx = minimal_context(value.denom());
        Ok(Self {
            value,
            context: ctx,
        })
    }
}

fn minimal_context(den: &BigInt) -> InvertedSet {
    let mut primes = Vec::new();
    let mut n = den.magnitude().clone();
    let mut p = BigUint::from(2u32);
    while &p * &p <= n {
        if (&n % &p).is_zero() {
            primes.push(p.to_u64().expect("prime factor of a parsed denominator fits u64"));
            while (&n % &p).is_zero() {
                n /= &p;
            }
        }
        p += 1u32;
    }
    if n > BigUint::one() {
        primes.push(n.to_u64().expect("prime factor of a parsed denominator fits u64"));
    }
    InvertedSet::new(primes).expect("trial division yields primes")
}

impl Serialize for LocalizedScalar {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for LocalizedScalar {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

macro_rules! binop {
    ($tr:ident, $method:ident, $op:tt) => {
        impl $tr<&LocalizedScalar> for &LocalizedScalar {
            type Output = LocalizedScalar;

            fn $method(self, rhs: &LocalizedScalar) -> LocalizedScalar {
                LocalizedScalar {
                    value: &self.value $op &rhs.value,
                    context: self.context.union(&rhs.context),
                }
            }
        }

        impl $tr for LocalizedScalar {
            type Output = LocalizedScalar;

            fn $method(self, rhs: LocalizedScalar) -> LocalizedScalar {
                &self $op &rhs
            }
        }
    };
}

binop!(Add, add, +);
binop!(Sub, sub, -);
binop!(Mul, mul, *);

impl Neg for &LocalizedScalar {
    type Output = LocalizedScalar;

    fn neg(self) -> LocalizedScalar {
        LocalizedScalar {
            value: -&self.value,
            context: self.context.clone(),
        }
    }
}

impl Neg for LocalizedScalar {
    type Output = LocalizedScalar;

    fn neg(self) -> LocalizedScalar {
        -&self
    }
}

/// `n^exp` as an element of `Z[1/S]`.
pub fn int_pow(n: i64, exp: i64, context: &InvertedSet) -> Result<LocalizedScalar> {
    LocalizedScalar::integer(n, context).pow(exp)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ctx(p: &[u64]) -> InvertedSet {
        InvertedSet::new(p.iter().copied()).unwrap()
    }

    #[test]
    fn inverted_set_rejects_composites() {
        assert_eq!(InvertedSet::new([2, 6]), Err(Error::NotPrime(6)));
        assert_eq!(InvertedSet::new([3, 2, 3]).unwrap().primes().collect::<Vec<_>>(), vec![2, 3]);
        assert_eq!(InvertedSet::inverting(-30), ctx(&[2, 3, 5]));
    }

    #[test]
    fn denominators_must_be_units() {
        let z6 = ctx(&[2, 3]);
        assert!(LocalizedScalar::new(1.into(), 12.into(), z6.clone()).is_ok());
        assert!(matches!(
            LocalizedScalar::new(1.into(), 5.into(), z6),
            Err(Error::NotInvertible { .. })
        ));
    }

    #[test]
    fn negative_powers() {
        let z5 = ctx(&[5]);
        let s = int_pow(5, -10, &z5).unwrap();
        assert_eq!(s.to_string(), "1/9765625");
        assert!(int_pow(5, -1, &InvertedSet::integers()).is_err());
        assert!(int_pow(5, 4, &InvertedSet::integers()).unwrap().is_integer());
        assert_eq!(int_pow(-1, -3, &InvertedSet::integers()).unwrap().to_string(), "-1");
    }

    #[test]
    fn mixed_contexts_are_flagged() {
        let a = LocalizedScalar::new(1.into(), 2.into(), ctx(&[2])).unwrap();
        let b = LocalizedScalar::new(1.into(), 3.into(), ctx(&[3])).unwrap();
        let (sum, widened) = a.add_flagged(&b);
        assert!(widened);
        assert_eq!(sum.context(), &ctx(&[2, 3]));
        assert_eq!(sum.to_string(), "5/6");
        let (_, widened) = a.mul_flagged(&a);
        assert!(!widened);
    }

    #[test]
    fn parse_and_print() {
        let s: LocalizedScalar = "-6/4".parse().unwrap();
        assert_eq!(s.to_string(), "-3/2");
        assert_eq!(s.context(), &ctx(&[2]));
        assert!("1/0".parse::<LocalizedScalar>().is_err());
        assert!("x".parse::<LocalizedScalar>().is_err());
    }

    #[test]
    fn residues() {
        let s = int_pow(5, -10, &ctx(&[5])).unwrap();
        assert_eq!(s.residue_mod(3), Some(1));
        assert_eq!(s.residue_mod(8), Some(1));
        let half = LocalizedScalar::new(1.into(), 2.into(), ctx(&[2])).unwrap();
        assert_eq!(half.residue_mod(2), None);
        assert_eq!(half.residue_mod(3), Some(2));
    }
}
