//! Exact field arithmetic over the rationals and prime fields GF(p).
//!
//! Every value in this crate is tagged (directly or through its container)
//! with a [`FieldDescriptor`]; arithmetic is dispatched through the
//! descriptor so that an element never silently changes field. No floating
//! point is involved anywhere: rationals use arbitrary-precision
//! numerator/denominator, prime-field elements are reduced residues.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use std::fmt;
use thiserror::Error;

/// Largest admissible prime modulus (arithmetic stays in `u64`).
pub const MAX_PRIME: u64 = 1 << 31;

#[derive(Debug, Error, PartialEq, Eq, Clone)]
pub enum FieldError {
    #[error("modulus {0} is not prime")]
    NotPrime(u64),
    #[error("modulus {0} exceeds the supported bound 2^31")]
    ModulusTooLarge(u64),
    #[error("cannot parse {0:?} as a field element")]
    BadElement(String),
}

/// The coefficient field: the rationals or GF(p) for a prime p ≤ 2³¹.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FieldDescriptor {
    Rationals,
    Prime(u64),
}

/// A single field element. Prime-field elements store the reduced residue;
/// the modulus lives in the surrounding [`FieldDescriptor`].
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Scalar {
    Fp(u64),
    Q(BigRational),
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3u64;
    while d.saturating_mul(d) <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

impl FieldDescriptor {
    /// GF(p), verifying primality by trial division.
    pub fn prime(p: u64) -> Result<Self, FieldError> {
        if p > MAX_PRIME {
            return Err(FieldError::ModulusTooLarge(p));
        }
        if !is_prime(p) {
            return Err(FieldError::NotPrime(p));
        }
        Ok(FieldDescriptor::Prime(p))
    }

    pub fn rationals() -> Self {
        FieldDescriptor::Rationals
    }

    /// 0 for the rationals, p for GF(p).
    pub fn characteristic(&self) -> u64 {
        match self {
            FieldDescriptor::Rationals => 0,
            FieldDescriptor::Prime(p) => *p,
        }
    }

    pub fn zero(&self) -> Scalar {
        match self {
            FieldDescriptor::Rationals => Scalar::Q(BigRational::zero()),
            FieldDescriptor::Prime(_) => Scalar::Fp(0),
        }
    }

    pub fn one(&self) -> Scalar {
        match self {
            FieldDescriptor::Rationals => Scalar::Q(BigRational::one()),
            FieldDescriptor::Prime(_) => Scalar::Fp(1),
        }
    }

    pub fn from_i64(&self, v: i64) -> Scalar {
        match self {
            FieldDescriptor::Rationals => Scalar::Q(BigRational::from(BigInt::from(v))),
            FieldDescriptor::Prime(p) => {
                let r = v.rem_euclid(*p as i64);
                Scalar::Fp(r as u64)
            }
        }
    }

    pub fn add(&self, a: &Scalar, b: &Scalar) -> Scalar {
        match (self, a, b) {
            (FieldDescriptor::Rationals, Scalar::Q(x), Scalar::Q(y)) => Scalar::Q(x + y),
            (FieldDescriptor::Prime(p), Scalar::Fp(x), Scalar::Fp(y)) => Scalar::Fp((x + y) % p),
            _ => panic!("scalar kind does not match field"),
        }
    }

    pub fn sub(&self, a: &Scalar, b: &Scalar) -> Scalar {
        self.add(a, &self.neg(b))
    }

    pub fn neg(&self, a: &Scalar) -> Scalar {
        match (self, a) {
            (FieldDescriptor::Rationals, Scalar::Q(x)) => Scalar::Q(-x),
            (FieldDescriptor::Prime(p), Scalar::Fp(x)) => Scalar::Fp(if *x == 0 { 0 } else { p - x }),
            _ => panic!("scalar kind does not match field"),
        }
    }

    pub fn mul(&self, a: &Scalar, b: &Scalar) -> Scalar {
        match (self, a, b) {
            (FieldDescriptor::Rationals, Scalar::Q(x), Scalar::Q(y)) => Scalar::Q(x * y),
            (FieldDescriptor::Prime(p), Scalar::Fp(x), Scalar::Fp(y)) => {
                Scalar::Fp(((*x as u128 * *y as u128) % *p as u128) as u64)
            }
            _ => panic!("scalar kind does not match field"),
        }
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self, a: &Scalar) -> Option<Scalar> {
        match (self, a) {
            (FieldDescriptor::Rationals, Scalar::Q(x)) => {
                if x.is_zero() {
                    None
                } else {
                    Some(Scalar::Q(x.recip()))
                }
            }
            (FieldDescriptor::Prime(p), Scalar::Fp(x)) => {
                if *x == 0 {
                    None
                } else {
                    // extended Euclid on (x, p)
                    let (mut r0, mut r1) = (*x as i128, *p as i128);
                    let (mut s0, mut s1) = (1i128, 0i128);
                    while r1 != 0 {
                        let q = r0 / r1;
                        (r0, r1) = (r1, r0 - q * r1);
                        (s0, s1) = (s1, s0 - q * s1);
                    }
                    debug_assert_eq!(r0, 1);
                    Some(Scalar::Fp(s0.rem_euclid(*p as i128) as u64))
                }
            }
            _ => panic!("scalar kind does not match field"),
        }
    }

    pub fn div(&self, a: &Scalar, b: &Scalar) -> Option<Scalar> {
        self.inv(b).map(|bi| self.mul(a, &bi))
    }

    pub fn is_zero(&self, a: &Scalar) -> bool {
        match a {
            Scalar::Q(x) => x.is_zero(),
            Scalar::Fp(x) => *x == 0,
        }
    }

    pub fn is_one(&self, a: &Scalar) -> bool {
        match a {
            Scalar::Q(x) => x.is_one(),
            Scalar::Fp(x) => *x == 1,
        }
    }

    /// All field elements, in residue order. Only for prime fields.
    pub fn elements(&self) -> Option<Vec<Scalar>> {
        match self {
            FieldDescriptor::Rationals => None,
            FieldDescriptor::Prime(p) => Some((0..*p).map(Scalar::Fp).collect()),
        }
    }

    /// Parses the exact textual form used by the file format: a decimal
    /// integer or `a/b`.
    pub fn parse_element(&self, s: &str) -> Result<Scalar, FieldError> {
        let bad = || FieldError::BadElement(s.to_string());
        match self {
            FieldDescriptor::Rationals => {
                let (num, den) = match s.split_once('/') {
                    Some((n, d)) => (n, d),
                    None => (s, "1"),
                };
                let n: BigInt = num.parse().map_err(|_| bad())?;
                let d: BigInt = den.parse().map_err(|_| bad())?;
                if d.is_zero() {
                    return Err(bad());
                }
                Ok(Scalar::Q(BigRational::new(n, d)))
            }
            FieldDescriptor::Prime(p) => {
                let v: i64 = s.parse().map_err(|_| bad())?;
                Ok(Scalar::Fp(v.rem_euclid(*p as i64) as u64))
            }
        }
    }
}

impl Scalar {
    /// Canonical textual form: reduced `a/b` with positive denominator, or
    /// the reduced residue.
    pub fn to_canonical_string(&self) -> String {
        match self {
            Scalar::Fp(v) => v.to_string(),
            Scalar::Q(r) => {
                if r.denom().is_one() {
                    r.numer().to_string()
                } else {
                    format!("{}/{}", r.numer(), r.denom())
                }
            }
        }
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        match self {
            Scalar::Q(r) => Some(r),
            Scalar::Fp(_) => None,
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_canonical_string())
    }
}

impl fmt::Display for FieldDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldDescriptor::Rationals => write!(f, "Q"),
            FieldDescriptor::Prime(p) => write!(f, "F{p}"),
        }
    }
}

impl FieldDescriptor {
    /// `Q` or `F<p>`, as accepted by the CLI `--field` flag.
    pub fn parse(s: &str) -> Result<Self, FieldError> {
        if s == "Q" {
            return Ok(FieldDescriptor::Rationals);
        }
        let p = s
            .strip_prefix('F')
            .and_then(|t| t.parse::<u64>().ok())
            .ok_or_else(|| FieldError::BadElement(s.to_string()))?;
        FieldDescriptor::prime(p)
    }

    /// The file-format object `{"kind":"Q"}` or `{"kind":"Fp","p":5}`.
    pub fn to_json(&self) -> serde_json::Value {
        match self {
            FieldDescriptor::Rationals => serde_json::json!({"kind": "Q"}),
            FieldDescriptor::Prime(p) => serde_json::json!({"kind": "Fp", "p": p}),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primality_check_at_construction() {
        assert!(FieldDescriptor::prime(2).is_ok());
        assert!(FieldDescriptor::prime(101).is_ok());
        assert_eq!(FieldDescriptor::prime(1), Err(FieldError::NotPrime(1)));
        assert_eq!(FieldDescriptor::prime(91), Err(FieldError::NotPrime(91)));
        assert!(matches!(
            FieldDescriptor::prime(u64::MAX),
            Err(FieldError::ModulusTooLarge(_))
        ));
    }

    #[test]
    fn inverses_exhaustive_small_primes() {
        for p in [2u64, 3, 5, 7, 11, 13] {
            let f = FieldDescriptor::prime(p).unwrap();
            for a in 1..p {
                let x = Scalar::Fp(a);
                let xi = f.inv(&x).unwrap();
                assert!(f.is_one(&f.mul(&x, &xi)), "a·a⁻¹ ≠ 1 for {a} mod {p}");
            }
            assert_eq!(f.inv(&f.zero()), None);
        }
    }

    #[test]
    fn rational_arithmetic_is_reduced() {
        let f = FieldDescriptor::rationals();
        let half = f.parse_element("2/4").unwrap();
        assert_eq!(half.to_canonical_string(), "1/2");
        let neg = f.parse_element("3/-6").unwrap();
        assert_eq!(neg.to_canonical_string(), "-1/2");
        let s = f.add(&half, &neg);
        assert!(f.is_zero(&s));
    }

    #[test]
    fn parse_rejects_garbage() {
        let f = FieldDescriptor::rationals();
        assert!(f.parse_element("1/0").is_err());
        assert!(f.parse_element("x").is_err());
        let g = FieldDescriptor::prime(5).unwrap();
        assert_eq!(g.parse_element("-1").unwrap(), Scalar::Fp(4));
    }
}
