//! Dense univariate polynomials over the crate's fields.
//!
//! Coefficients are stored lowest degree first with the leading coefficient
//! nonzero (the zero polynomial is the empty vector). The module exists to
//! support drop-direction finding over the rationals: Euclidean gcd and
//! rational-root extraction by the rational-root theorem, every root
//! verified by exact evaluation.

use crate::field::{FieldDescriptor, Scalar};
use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq, Clone)]
pub enum PolyError {
    #[error("the zero polynomial has no well-defined roots")]
    ZeroPolynomial,
    #[error("rational root finding requires coefficients over Q")]
    NotRationals,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UniPoly {
    field: FieldDescriptor,
    coeffs: Vec<Scalar>,
}

impl UniPoly {
    pub fn new(mut coeffs: Vec<Scalar>, field: FieldDescriptor) -> Self {
        while coeffs.last().is_some_and(|c| field.is_zero(c)) {
            coeffs.pop();
        }
        UniPoly { field, coeffs }
    }

    pub fn zero(field: FieldDescriptor) -> Self {
        UniPoly {
            field,
            coeffs: Vec::new(),
        }
    }

    pub fn from_i64(coeffs: &[i64], field: FieldDescriptor) -> Self {
        Self::new(coeffs.iter().map(|&c| field.from_i64(c)).collect(), field)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    pub fn field(&self) -> &FieldDescriptor {
        &self.field
    }

    pub fn eval(&self, x: &Scalar) -> Scalar {
        let f = &self.field;
        let mut acc = f.zero();
        for c in self.coeffs.iter().rev() {
            acc = f.add(&f.mul(&acc, x), c);
        }
        acc
    }

    pub fn add(&self, rhs: &UniPoly) -> UniPoly {
        let f = &self.field;
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = vec![f.zero(); n];
        for (i, c) in self.coeffs.iter().enumerate() {
            out[i] = f.add(&out[i], c);
        }
        for (i, c) in rhs.coeffs.iter().enumerate() {
            out[i] = f.add(&out[i], c);
        }
        UniPoly::new(out, self.field)
    }

    pub fn neg(&self) -> UniPoly {
        let f = &self.field;
        UniPoly::new(self.coeffs.iter().map(|c| f.neg(c)).collect(), self.field)
    }

    pub fn sub(&self, rhs: &UniPoly) -> UniPoly {
        self.add(&rhs.neg())
    }

    pub fn mul(&self, rhs: &UniPoly) -> UniPoly {
        if self.is_zero() || rhs.is_zero() {
            return UniPoly::zero(self.field);
        }
        let f = &self.field;
        let mut out = vec![f.zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if f.is_zero(a) {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = f.add(&out[i + j], &f.mul(a, b));
            }
        }
        UniPoly::new(out, self.field)
    }

    /// Quotient and remainder; `d` must be nonzero.
    pub fn divrem(&self, d: &UniPoly) -> (UniPoly, UniPoly) {
        assert!(!d.is_zero(), "division by the zero polynomial");
        let f = self.field;
        let dd = d.degree().unwrap();
        let lead_inv = f.inv(&d.coeffs[dd]).expect("nonzero leading coefficient");
        let mut rem = self.coeffs.clone();
        let mut quo = vec![f.zero(); self.coeffs.len().saturating_sub(dd)];
        while rem.len() > dd && !rem.is_empty() {
            let k = rem.len() - 1;
            let c = f.mul(&rem[k], &lead_inv);
            if !f.is_zero(&c) {
                quo[k - dd] = c.clone();
                for j in 0..=dd {
                    let s = f.sub(&rem[k - dd + j], &f.mul(&c, &d.coeffs[j]));
                    rem[k - dd + j] = s;
                }
            }
            rem.pop();
        }
        (UniPoly::new(quo, f), UniPoly::new(rem, f))
    }

    pub fn monic(&self) -> UniPoly {
        if self.is_zero() {
            return self.clone();
        }
        let f = &self.field;
        let inv = f.inv(self.coeffs.last().unwrap()).unwrap();
        UniPoly::new(self.coeffs.iter().map(|c| f.mul(c, &inv)).collect(), self.field)
    }

    pub fn derivative(&self) -> UniPoly {
        let f = &self.field;
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, c)| f.mul(&f.from_i64(k as i64), c))
            .collect();
        UniPoly::new(coeffs, self.field)
    }

    /// Monic polynomial with the same roots, each simple (over Q).
    pub fn squarefree_part(&self) -> UniPoly {
        if self.degree().unwrap_or(0) <= 1 {
            return self.monic();
        }
        let g = poly_gcd(self, &self.derivative());
        if g.degree().unwrap_or(0) == 0 {
            return self.monic();
        }
        self.divrem(&g).0.monic()
    }
}

/// Monic Euclidean gcd; `gcd(0, 0) = 0`. Over Q the remainders are
/// renormalized to primitive integer form at every step, which keeps
/// coefficient heights linear instead of doubling per division.
pub fn poly_gcd(p: &UniPoly, q: &UniPoly) -> UniPoly {
    let mut a = primitive_part(p);
    let mut b = primitive_part(q);
    while !b.is_zero() {
        let (_, r) = a.divrem(&b);
        a = b;
        b = primitive_part(&r);
    }
    a.monic()
}

/// Scales a polynomial over Q to integer coefficients with content 1 and
/// positive leading coefficient; other fields pass through unchanged.
fn primitive_part(p: &UniPoly) -> UniPoly {
    if *p.field() != FieldDescriptor::Rationals || p.is_zero() {
        return p.clone();
    }
    let ints = clear_denominators(p);
    let lead_neg = ints.last().map(|c| c.sign() == num_bigint::Sign::Minus);
    let coeffs = ints
        .into_iter()
        .map(|c| Scalar::Q(BigRational::from(if lead_neg == Some(true) { -c } else { c })))
        .collect();
    UniPoly::new(coeffs, FieldDescriptor::Rationals)
}

/// All rational roots of a nonzero polynomial over Q, multiplicities
/// discarded, each verified by exact evaluation. Candidates come from the
/// rational-root theorem applied to the primitive integer form; divisor
/// enumeration relies on factoring the extreme coefficients, so if one of
/// them has a huge composite cofactor that resists factoring, roots with a
/// correspondingly huge numerator or denominator could be missed (callers
/// that care track this through an explicit completeness flag).
pub fn rational_roots(p: &UniPoly) -> Result<Vec<BigRational>, PolyError> {
    if *p.field() != FieldDescriptor::Rationals {
        return Err(PolyError::NotRationals);
    }
    if p.is_zero() {
        return Err(PolyError::ZeroPolynomial);
    }
    // candidates come from the squarefree part: same root set, much
    // smaller extreme coefficients (minor determinants of alternating
    // pencils are perfect squares, for instance)
    let mut ints: Vec<BigInt> = clear_denominators(&p.squarefree_part());
    let mut roots = Vec::new();
    // strip powers of x: zero is a root iff the constant term vanishes
    if ints.iter().take_while(|c| c.is_zero()).count() > 0 {
        roots.push(BigRational::zero());
        while ints.first().is_some_and(|c| c.is_zero()) {
            ints.remove(0);
        }
    }
    if ints.len() <= 1 {
        roots.sort();
        return Ok(roots);
    }
    // degrees 1 and 2 are solved exactly (integer square root), with no
    // dependence on factoring the extreme coefficients
    if ints.len() == 2 {
        roots.push(BigRational::new(-ints[0].clone(), ints[1].clone()));
        roots.sort();
        roots.dedup();
        return Ok(roots);
    }
    if ints.len() == 3 {
        let (a, b, c) = (&ints[2], &ints[1], &ints[0]);
        let disc = b * b - BigInt::from(4) * a * c;
        if disc.sign() != num_bigint::Sign::Minus {
            let s = disc.sqrt();
            if &s * &s == disc {
                for sign in [&s, &(-s.clone())] {
                    roots.push(BigRational::new(-b + sign, BigInt::from(2) * a));
                }
            }
        }
        roots.sort();
        roots.dedup();
        return Ok(roots);
    }
    let a0 = ints[0].magnitude().clone();
    let an = ints.last().unwrap().magnitude().clone();
    let nums = divisors(&a0);
    let dens = divisors(&an);
    let mut candidates = Vec::new();
    for n in &nums {
        for d in &dens {
            let r = BigRational::new(BigInt::from(n.clone()), BigInt::from(d.clone()));
            candidates.push(r.clone());
            candidates.push(-r);
        }
    }
    candidates.sort();
    candidates.dedup();
    for cand in candidates {
        if eval_int_poly(&ints, &cand).is_zero() {
            roots.push(cand);
        }
    }
    roots.sort();
    roots.dedup();
    Ok(roots)
}

fn clear_denominators(p: &UniPoly) -> Vec<BigInt> {
    let mut lcm = BigInt::one();
    for c in p.coeffs() {
        let r = c.as_rational().unwrap();
        lcm = lcm.lcm(r.denom());
    }
    let mut ints: Vec<BigInt> = p
        .coeffs()
        .iter()
        .map(|c| {
            let r = c.as_rational().unwrap();
            (r * BigRational::from(lcm.clone())).to_integer()
        })
        .collect();
    let mut content = BigInt::zero();
    for c in &ints {
        content = content.gcd(c);
    }
    if !content.is_zero() && !content.is_one() {
        for c in &mut ints {
            *c /= &content;
        }
    }
    ints
}

fn eval_int_poly(ints: &[BigInt], x: &BigRational) -> BigRational {
    let mut acc = BigRational::zero();
    for c in ints.iter().rev() {
        acc = acc * x + BigRational::from(c.clone());
    }
    acc
}

/// Positive divisors, via trial division plus Pollard rho on any remaining
/// cofactor that fits in 64 bits. An unfactorable cofactor is treated as
/// prime (missing divisors are possible only past 10^12).
fn divisors(n: &BigUint) -> Vec<BigUint> {
    if n.is_zero() {
        return vec![BigUint::one()];
    }
    let mut factors: Vec<(BigUint, u32)> = Vec::new();
    let mut m = n.clone();
    let push = |p: BigUint, factors: &mut Vec<(BigUint, u32)>| {
        if let Some(e) = factors.iter_mut().find(|(q, _)| *q == p) {
            e.1 += 1;
        } else {
            factors.push((p, 1));
        }
    };
    for small in 2u64..=65536 {
        let sp = BigUint::from(small);
        if &sp * &sp > m {
            break;
        }
        while (&m % &sp).is_zero() {
            m /= &sp;
            push(sp.clone(), &mut factors);
        }
    }
    if !m.is_one() {
        if let Some(v) = m.to_u64() {
            for p in factor_u64(v) {
                push(BigUint::from(p), &mut factors);
            }
        } else {
            push(m, &mut factors);
        }
    }
    let mut divs = vec![BigUint::one()];
    for (p, e) in factors {
        let mut next = Vec::with_capacity(divs.len() * (e as usize + 1));
        for d in &divs {
            let mut pk = BigUint::one();
            for _ in 0..=e {
                next.push(d * &pk);
                pk *= &p;
            }
        }
        divs = next;
        if divs.len() > 100_000 {
            break; // pathological input; verified-roots semantics still hold
        }
    }
    divs
}

fn factor_u64(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    if n <= 1 {
        return out;
    }
    while n % 2 == 0 {
        out.push(2);
        n /= 2;
    }
    let mut stack = vec![n];
    while let Some(v) = stack.pop() {
        if v == 1 {
            continue;
        }
        if is_prime_u64(v) {
            out.push(v);
            continue;
        }
        let d = pollard_rho(v);
        stack.push(d);
        stack.push(v / d);
    }
    out
}

fn mulmod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn powmod(mut a: u64, mut e: u64, m: u64) -> u64 {
    let mut r = 1u64;
    a %= m;
    while e > 0 {
        if e & 1 == 1 {
            r = mulmod(r, a, m);
        }
        a = mulmod(a, a, m);
        e >>= 1;
    }
    r
}

fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n % p == 0 {
            return n == p;
        }
    }
    let d = n - 1;
    let s = d.trailing_zeros();
    let d = d >> s;
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = powmod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mulmod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

fn pollard_rho(n: u64) -> u64 {
    if n % 2 == 0 {
        return 2;
    }
    let mut c = 1u64;
    loop {
        let mut x = 2u64;
        let mut y = 2u64;
        let mut d = 1u64;
        while d == 1 {
            x = (mulmod(x, x, n) + c) % n;
            y = (mulmod(y, y, n) + c) % n;
            y = (mulmod(y, y, n) + c) % n;
            d = gcd_u64(x.abs_diff(y), n);
        }
        if d != n {
            return d;
        }
        c += 1;
    }
}

fn gcd_u64(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}
