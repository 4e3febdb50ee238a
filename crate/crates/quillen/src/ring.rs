//! Coefficient rings and exact scalars.
//!
//! A [`CoefficientRing`] is a runtime descriptor of the base ring (ℤ, ℚ, 𝔽_p
//! or ℤ/m) and owns all scalar arithmetic: a [`Scalar`] is just an
//! arbitrary-precision integer or rational, and the ring decides how to
//! reduce, invert and compare. Modular scalars are kept as canonical
//! residues in `0..m`, so equality of scalars is plain structural equality.

use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Exact base ring descriptor.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum CoefficientRing {
    /// The integers ℤ.
    Integers,
    /// The rationals ℚ.
    Rationals,
    /// The prime field 𝔽_p; primality is checked at construction.
    PrimeField(u64),
    /// ℤ/m for m ≥ 2, not necessarily prime.
    IntegersMod(u64),
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d.checked_mul(d).map(|s| s <= p).unwrap_or(false) {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

impl CoefficientRing {
    /// 𝔽_p, rejecting composite p by trial division.
    pub fn prime_field(p: u64) -> Result<Self> {
        if is_prime(p) {
            Ok(CoefficientRing::PrimeField(p))
        } else {
            Err(Error::Arithmetic(alloc::format!("{p} is not prime")))
        }
    }

    /// ℤ/m, m ≥ 2.
    pub fn integers_mod(m: u64) -> Result<Self> {
        if m >= 2 {
            Ok(CoefficientRing::IntegersMod(m))
        } else {
            Err(Error::Arithmetic("modulus must be at least 2".into()))
        }
    }

    pub fn is_field(&self) -> bool {
        matches!(
            self,
            CoefficientRing::Rationals | CoefficientRing::PrimeField(_)
        )
    }

    /// The modulus when the ring is 𝔽_p or ℤ/m.
    pub fn modulus(&self) -> Option<u64> {
        match self {
            CoefficientRing::PrimeField(p) => Some(*p),
            CoefficientRing::IntegersMod(m) => Some(*m),
            _ => None,
        }
    }

    pub fn zero(&self) -> Scalar {
        Scalar::Int(BigInt::zero())
    }

    pub fn one(&self) -> Scalar {
        self.from_i64(1)
    }

    pub fn from_i64(&self, v: i64) -> Scalar {
        self.from_bigint(BigInt::from(v))
    }

    pub fn from_bigint(&self, v: BigInt) -> Scalar {
        self.normalize(Scalar::Int(v))
    }

    /// Canonical form: residues in `0..m` for modular rings, reduced
    /// fractions (integral ones collapsing to `Int`) over ℚ.
    pub fn normalize(&self, s: Scalar) -> Scalar {
        match (self, s) {
            (CoefficientRing::PrimeField(m) | CoefficientRing::IntegersMod(m), Scalar::Int(v)) => {
                let m = BigInt::from(*m);
                Scalar::Int(v.mod_floor(&m))
            }
            (CoefficientRing::Rationals, Scalar::Rat(r)) => {
                if r.denom().is_one() {
                    Scalar::Int(r.numer().clone())
                } else {
                    Scalar::Rat(r)
                }
            }
            (_, s) => s,
        }
    }

    pub fn add(&self, a: &Scalar, b: &Scalar) -> Scalar {
        match (a, b) {
            (Scalar::Int(x), Scalar::Int(y)) => self.normalize(Scalar::Int(x + y)),
            _ => self.normalize(Scalar::Rat(a.to_rational() + b.to_rational())),
        }
    }

    pub fn sub(&self, a: &Scalar, b: &Scalar) -> Scalar {
        match (a, b) {
            (Scalar::Int(x), Scalar::Int(y)) => self.normalize(Scalar::Int(x - y)),
            _ => self.normalize(Scalar::Rat(a.to_rational() - b.to_rational())),
        }
    }

    pub fn neg(&self, a: &Scalar) -> Scalar {
        match a {
            Scalar::Int(x) => self.normalize(Scalar::Int(-x)),
            Scalar::Rat(r) => self.normalize(Scalar::Rat(-r)),
        }
    }

    pub fn mul(&self, a: &Scalar, b: &Scalar) -> Scalar {
        match (a, b) {
            (Scalar::Int(x), Scalar::Int(y)) => self.normalize(Scalar::Int(x * y)),
            _ => self.normalize(Scalar::Rat(a.to_rational() * b.to_rational())),
        }
    }

    /// Multiplicative inverse. Over ℤ only ±1 invert; over ℤ/m only residues
    /// coprime to m.
    pub fn inv(&self, a: &Scalar) -> Result<Scalar> {
        if a.is_zero() {
            return Err(Error::Arithmetic("inverse of zero".into()));
        }
        match self {
            CoefficientRing::Rationals => Ok(self.normalize(Scalar::Rat(a.to_rational().recip()))),
            CoefficientRing::Integers => {
                let v = a.as_int().expect("integer scalar");
                if v.abs().is_one() {
                    Ok(Scalar::Int(v.clone()))
                } else {
                    Err(Error::Arithmetic(alloc::format!("{v} is not a unit in Z")))
                }
            }
            CoefficientRing::PrimeField(m) | CoefficientRing::IntegersMod(m) => {
                let v = a.as_int().expect("integer scalar");
                let m_big = BigInt::from(*m);
                let e = v.extended_gcd(&m_big);
                if e.gcd.is_one() {
                    Ok(self.normalize(Scalar::Int(e.x)))
                } else {
                    Err(Error::Arithmetic(alloc::format!(
                        "{v} is not a unit mod {m}"
                    )))
                }
            }
        }
    }

    pub fn div(&self, a: &Scalar, b: &Scalar) -> Result<Scalar> {
        Ok(self.mul(a, &self.inv(b)?))
    }

    pub fn pow(&self, a: &Scalar, e: u64) -> Scalar {
        let mut acc = self.one();
        let mut base = a.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            e >>= 1;
        }
        acc
    }

    /// Sum of a slice (convenience for matrix kernels).
    pub fn sum<'a, I: Iterator<Item = &'a Scalar>>(&self, it: I) -> Scalar {
        let mut acc = self.zero();
        for s in it {
            acc = self.add(&acc, s);
        }
        acc
    }
}

impl fmt::Display for CoefficientRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CoefficientRing::Integers => write!(f, "Z"),
            CoefficientRing::Rationals => write!(f, "Q"),
            CoefficientRing::PrimeField(p) => write!(f, "Fp({p})"),
            CoefficientRing::IntegersMod(m) => write!(f, "Zmod({m})"),
        }
    }
}

/// An exact scalar: integer or rational. Which variant is legal is governed
/// by the ring; modular values are canonical residues.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Scalar {
    Int(BigInt),
    Rat(BigRational),
}

impl Scalar {
    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Int(v) => v.is_zero(),
            Scalar::Rat(r) => r.is_zero(),
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Int(v) => v.is_one(),
            Scalar::Rat(r) => r.is_one(),
        }
    }

    pub fn as_int(&self) -> Option<&BigInt> {
        match self {
            Scalar::Int(v) => Some(v),
            Scalar::Rat(_) => None,
        }
    }

    pub fn to_rational(&self) -> BigRational {
        match self {
            Scalar::Int(v) => BigRational::from_integer(v.clone()),
            Scalar::Rat(r) => r.clone(),
        }
    }

    pub fn from_int(v: i64) -> Self {
        Scalar::Int(BigInt::from(v))
    }

    /// Machine-word value for residues and small integers, when it fits.
    pub fn to_i64(&self) -> Option<i64> {
        match self {
            Scalar::Int(v) => i64::try_from(v).ok(),
            Scalar::Rat(_) => None,
        }
    }

    /// Decimal rendering, `num/den` for non-integral rationals. Used by the
    /// serializers so that coefficient strings are width-independent.
    pub fn to_decimal_string(&self) -> String {
        match self {
            Scalar::Int(v) => v.to_string(),
            Scalar::Rat(r) => {
                if r.denom().is_one() {
                    r.numer().to_string()
                } else {
                    alloc::format!("{}/{}", r.numer(), r.denom())
                }
            }
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_decimal_string())
    }
}

/// Parse a scalar literal: an optionally signed integer, or `a/b` over ℚ.
pub fn parse_scalar(ring: &CoefficientRing, text: &str) -> Result<Scalar> {
    let t = text.trim();
    if let Some((n, d)) = t.split_once('/') {
        if *ring != CoefficientRing::Rationals {
            return Err(Error::Parse(alloc::format!(
                "fractional literal {t} needs base Q"
            )));
        }
        let n: BigInt = n
            .trim()
            .parse()
            .map_err(|_| Error::Parse(alloc::format!("bad numerator in {t}")))?;
        let d: BigInt = d
            .trim()
            .parse()
            .map_err(|_| Error::Parse(alloc::format!("bad denominator in {t}")))?;
        if d.is_zero() {
            return Err(Error::Parse("zero denominator".into()));
        }
        return Ok(ring.normalize(Scalar::Rat(BigRational::new(n, d))));
    }
    let v: BigInt = t
        .parse()
        .map_err(|_| Error::Parse(alloc::format!("bad integer literal {t}")))?;
    Ok(ring.from_bigint(v))
}

/// Scalars of a finite ring in a fixed order (0, 1, ..., m-1).
pub fn enumerate_residues(ring: &CoefficientRing) -> Result<Vec<Scalar>> {
    match ring.modulus() {
        Some(m) => Ok((0..m).map(|v| ring.from_i64(v as i64)).collect()),
        None => Err(Error::InfiniteClassGroup),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_check() {
        assert!(CoefficientRing::prime_field(5).is_ok());
        assert!(CoefficientRing::prime_field(2).is_ok());
        assert!(CoefficientRing::prime_field(9).is_err());
        assert!(CoefficientRing::prime_field(1).is_err());
    }

    #[test]
    fn modular_arithmetic() {
        let r = CoefficientRing::prime_field(5).unwrap();
        let a = r.from_i64(7); // 2
        let b = r.from_i64(-1); // 4
        assert_eq!(r.add(&a, &b), r.from_i64(1));
        assert_eq!(r.mul(&a, &b), r.from_i64(3));
        let inv = r.inv(&a).unwrap();
        assert!(r.mul(&a, &inv).is_one());
    }

    #[test]
    fn zmod_units() {
        let r = CoefficientRing::integers_mod(9).unwrap();
        assert!(r.inv(&r.from_i64(2)).is_ok());
        assert!(r.inv(&r.from_i64(3)).is_err());
    }

    #[test]
    fn rational_collapse() {
        let r = CoefficientRing::Rationals;
        let half = parse_scalar(&r, "1/2").unwrap();
        let sum = r.add(&half, &half);
        assert_eq!(sum, Scalar::from_int(1));
        assert_eq!(half.to_decimal_string(), "1/2");
    }
}
