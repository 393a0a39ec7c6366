//! Exact coefficient fields: the rationals and prime fields GF(p).
//!
//! A [`FieldSpec`] is a small copyable tag describing the field; it carries
//! the arithmetic. A [`Scalar`] is one element. Rationals use arbitrary
//! precision and stay fully reduced; prime-field residues stay in `[0, p)`.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash)]
enum Kind {
    Rationals,
    Prime(u64),
}

/// A coefficient field: `Q` or `GF(p)` for a prime `p`.
///
/// Construction is validated, so a `FieldSpec` with a composite modulus
/// cannot exist.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash)]
pub struct FieldSpec {
    kind: Kind,
}

/// One field element. Which field it belongs to is tracked by the caller
/// through a [`FieldSpec`]; every operation checks membership.
#[derive(Clone, PartialEq, Eq, Debug, Hash)]
pub enum Scalar {
    /// Arbitrary-precision rational, fully reduced.
    Rat(BigRational),
    /// Residue in `[0, p)`.
    Mod(u64),
}

impl FieldSpec {
    pub fn rationals() -> FieldSpec {
        FieldSpec { kind: Kind::Rationals }
    }

    /// GF(p). Fails with [`Error::NonPrimeModulus`] unless `p` is prime.
    pub fn prime(p: u64) -> Result<FieldSpec> {
        if is_prime_u64(p) {
            Ok(FieldSpec { kind: Kind::Prime(p) })
        } else {
            Err(Error::NonPrimeModulus(p))
        }
    }

    /// 0 for the rationals, p for GF(p).
    pub fn characteristic(&self) -> u64 {
        match self.kind {
            Kind::Rationals => 0,
            Kind::Prime(p) => p,
        }
    }

    pub fn modulus(&self) -> Option<u64> {
        match self.kind {
            Kind::Rationals => None,
            Kind::Prime(p) => Some(p),
        }
    }

    pub fn zero(&self) -> Scalar {
        match self.kind {
            Kind::Rationals => Scalar::Rat(BigRational::zero()),
            Kind::Prime(_) => Scalar::Mod(0),
        }
    }

    pub fn one(&self) -> Scalar {
        match self.kind {
            Kind::Rationals => Scalar::Rat(BigRational::one()),
            Kind::Prime(_) => Scalar::Mod(1),
        }
    }

    /// Image of an integer in the field.
    pub fn integer(&self, n: i64) -> Scalar {
        match self.kind {
            Kind::Rationals => Scalar::Rat(BigRational::from_integer(BigInt::from(n))),
            Kind::Prime(p) => {
                let p = p as i128;
                Scalar::Mod((((n as i128) % p + p) % p) as u64)
            }
        }
    }

    /// Image of a big integer in the field.
    pub fn big_integer(&self, n: &BigInt) -> Scalar {
        match self.kind {
            Kind::Rationals => Scalar::Rat(BigRational::from_integer(n.clone())),
            Kind::Prime(p) => {
                let p = BigInt::from(p);
                let mut r = n % &p;
                if r.is_negative() {
                    r += &p;
                }
                Scalar::Mod(u64::try_from(r).expect("reduced residue fits in u64"))
            }
        }
    }

    /// Exact quotient of two integers; fails in GF(p) when `den ≡ 0`.
    pub fn fraction(&self, num: &BigInt, den: &BigInt) -> Result<Scalar> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        match self.kind {
            Kind::Rationals => Ok(Scalar::Rat(BigRational::new(num.clone(), den.clone()))),
            Kind::Prime(_) => {
                let d = self.big_integer(den);
                self.mul(&self.big_integer(num), &self.inv(&d)?)
            }
        }
    }

    fn member(&self, x: &Scalar) -> Result<()> {
        let ok = match (self.kind, x) {
            (Kind::Rationals, Scalar::Rat(_)) => true,
            (Kind::Prime(p), Scalar::Mod(v)) => *v < p,
            _ => false,
        };
        if ok {
            Ok(())
        } else {
            Err(Error::FieldMismatch(*self, describe(x)))
        }
    }

    pub fn is_zero(&self, x: &Scalar) -> bool {
        match x {
            Scalar::Rat(r) => r.is_zero(),
            Scalar::Mod(v) => *v == 0,
        }
    }

    pub fn is_one(&self, x: &Scalar) -> bool {
        match x {
            Scalar::Rat(r) => r.is_one(),
            Scalar::Mod(v) => *v == 1,
        }
    }

    pub fn add(&self, a: &Scalar, b: &Scalar) -> Result<Scalar> {
        self.member(a)?;
        self.member(b)?;
        Ok(match (a, b) {
            (Scalar::Rat(x), Scalar::Rat(y)) => Scalar::Rat(x + y),
            (Scalar::Mod(x), Scalar::Mod(y)) => {
                let p = self.characteristic() as u128;
                Scalar::Mod(((*x as u128 + *y as u128) % p) as u64)
            }
            _ => unreachable!("membership checked"),
        })
    }

    pub fn sub(&self, a: &Scalar, b: &Scalar) -> Result<Scalar> {
        self.add(a, &self.neg(b)?)
    }

    pub fn neg(&self, a: &Scalar) -> Result<Scalar> {
        self.member(a)?;
        Ok(match a {
            Scalar::Rat(x) => Scalar::Rat(-x),
            Scalar::Mod(x) => {
                let p = self.characteristic();
                Scalar::Mod(if *x == 0 { 0 } else { p - x })
            }
        })
    }

    pub fn mul(&self, a: &Scalar, b: &Scalar) -> Result<Scalar> {
        self.member(a)?;
        self.member(b)?;
        Ok(match (a, b) {
            (Scalar::Rat(x), Scalar::Rat(y)) => Scalar::Rat(x * y),
            (Scalar::Mod(x), Scalar::Mod(y)) => {
                let p = self.characteristic() as u128;
                Scalar::Mod(((*x as u128 * *y as u128) % p) as u64)
            }
            _ => unreachable!("membership checked"),
        })
    }

    pub fn inv(&self, a: &Scalar) -> Result<Scalar> {
        self.member(a)?;
        if self.is_zero(a) {
            return Err(Error::DivisionByZero);
        }
        Ok(match a {
            Scalar::Rat(x) => Scalar::Rat(x.recip()),
            Scalar::Mod(x) => {
                let p = self.characteristic();
                Scalar::Mod(pow_mod(*x, p - 2, p))
            }
        })
    }

    pub fn div(&self, a: &Scalar, b: &Scalar) -> Result<Scalar> {
        self.mul(a, &self.inv(b)?)
    }

    /// `a^n` by binary exponentiation; `a^0 = 1` including for `a = 0`.
    pub fn pow(&self, a: &Scalar, mut n: u64) -> Result<Scalar> {
        self.member(a)?;
        let mut base = a.clone();
        let mut acc = self.one();
        while n > 0 {
            if n & 1 == 1 {
                acc = self.mul(&acc, &base)?;
            }
            base = self.mul(&base, &base)?;
            n >>= 1;
        }
        Ok(acc)
    }

    /// Enumerates all field elements; only available for prime fields.
    pub fn elements(&self) -> Option<Vec<Scalar>> {
        match self.kind {
            Kind::Rationals => None,
            Kind::Prime(p) => Some((0..p).map(Scalar::Mod).collect()),
        }
    }
}

fn describe(x: &Scalar) -> FieldSpec {
    // Best-effort field tag for error messages only.
    match x {
        Scalar::Rat(_) => FieldSpec { kind: Kind::Rationals },
        Scalar::Mod(_) => FieldSpec { kind: Kind::Prime(0) },
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            Kind::Rationals => write!(f, "Q"),
            Kind::Prime(p) => write!(f, "Fp:{p}"),
        }
    }
}

impl FromStr for FieldSpec {
    type Err = Error;

    /// Accepts `Q` or `Fp:<p>`.
    fn from_str(s: &str) -> Result<FieldSpec> {
        let s = s.trim();
        if s == "Q" {
            return Ok(FieldSpec::rationals());
        }
        if let Some(rest) = s.strip_prefix("Fp:") {
            let p: u64 = rest.parse().map_err(|_| {
                Error::CoreFile(format!("bad field {s:?}: expected Q or Fp:<prime>"))
            })?;
            return FieldSpec::prime(p);
        }
        Err(Error::CoreFile(format!("bad field {s:?}: expected Q or Fp:<prime>")))
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rat(r) => write!(f, "{r}"),
            Scalar::Mod(v) => write!(f, "{v}"),
        }
    }
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

/// Deterministic Miller–Rabin; the witness set covers all of u64.
fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n == p {
            return true;
        }
        if n.is_multiple_of(p) {
            return false;
        }
    }
    let mut d = n - 1;
    let mut s = 0u32;
    while d.is_multiple_of(2) {
        d /= 2;
        s += 1;
    }
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
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
