//! Dense univariate polynomials over an exact field.
//!
//! Coefficients are stored in ascending degree with no trailing zeros, so
//! `coeffs.len() - 1` is the degree and the last entry is the leading
//! coefficient. "Leading" always means highest degree.

use std::fmt;

use crate::error::{Error, Result};
use crate::field::{FieldSpec, Scalar};

#[derive(Clone, PartialEq, Eq, Debug, Hash)]
pub struct Poly {
    field: FieldSpec,
    coeffs: Vec<Scalar>,
}

// ---- Constructors ----

impl Poly {
    pub fn zero(field: FieldSpec) -> Poly {
        Poly { field, coeffs: Vec::new() }
    }

    pub fn one(field: FieldSpec) -> Poly {
        Poly { field, coeffs: vec![field.one()] }
    }

    /// The monomial `t^k`.
    pub fn t_power(field: FieldSpec, k: usize) -> Poly {
        let mut coeffs = vec![field.zero(); k + 1];
        coeffs[k] = field.one();
        Poly { field, coeffs }
    }

    /// The monomial `c·t^k`.
    pub fn monomial(field: FieldSpec, c: &Scalar, k: usize) -> Result<Poly> {
        Poly::t_power(field, k).scale(c)
    }

    pub fn constant(field: FieldSpec, c: &Scalar) -> Result<Poly> {
        Poly::from_coeffs(field, vec![c.clone()])
    }

    /// Builds from ascending coefficients, validating field membership.
    pub fn from_coeffs(field: FieldSpec, coeffs: Vec<Scalar>) -> Result<Poly> {
        for c in &coeffs {
            // Route a membership check through field arithmetic.
            field.add(c, &field.zero())?;
        }
        let mut p = Poly { field, coeffs };
        p.normalize();
        Ok(p)
    }

    /// Convenience over integer coefficients, ascending degree.
    pub fn from_ints(field: FieldSpec, coeffs: &[i64]) -> Poly {
        let mut p = Poly { field, coeffs: coeffs.iter().map(|&n| field.integer(n)).collect() };
        p.normalize();
        p
    }

    fn normalize(&mut self) {
        while let Some(last) = self.coeffs.last() {
            if self.field.is_zero(last) {
                self.coeffs.pop();
            } else {
                break;
            }
        }
    }
}

// ---- Inspection ----

impl Poly {
    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Lowest exponent with nonzero coefficient, or `None` for zero.
    pub fn order(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !self.field.is_zero(c))
    }

    /// Coefficient of `t^k` (zero beyond the degree).
    pub fn coeff(&self, k: usize) -> Scalar {
        self.coeffs.get(k).cloned().unwrap_or_else(|| self.field.zero())
    }

    pub fn leading_coeff(&self) -> Option<&Scalar> {
        self.coeffs.last()
    }

    pub fn is_monomial(&self) -> bool {
        match self.order() {
            Some(o) => o + 1 == self.coeffs.len(),
            None => false,
        }
    }

    fn same_field(&self, other: &Poly) -> Result<()> {
        if self.field == other.field {
            Ok(())
        } else {
            Err(Error::FieldMismatch(self.field, other.field))
        }
    }
}

// ---- Arithmetic ----

impl Poly {
    pub fn add(&self, other: &Poly) -> Result<Poly> {
        self.same_field(other)?;
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for k in 0..n {
            coeffs.push(self.field.add(&self.coeff(k), &other.coeff(k))?);
        }
        let mut p = Poly { field: self.field, coeffs };
        p.normalize();
        Ok(p)
    }

    pub fn sub(&self, other: &Poly) -> Result<Poly> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Poly {
        let coeffs = self
            .coeffs
            .iter()
            .map(|c| self.field.neg(c).expect("coefficients live in the field"))
            .collect();
        Poly { field: self.field, coeffs }
    }

    pub fn scale(&self, c: &Scalar) -> Result<Poly> {
        let mut coeffs = Vec::with_capacity(self.coeffs.len());
        for a in &self.coeffs {
            coeffs.push(self.field.mul(a, c)?);
        }
        let mut p = Poly { field: self.field, coeffs };
        p.normalize();
        Ok(p)
    }

    pub fn mul(&self, other: &Poly) -> Result<Poly> {
        self.same_field(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Poly::zero(self.field));
        }
        // Monomial factors reduce to a shift and a scale.
        if self.is_monomial() {
            let k = self.order().expect("nonzero");
            return other.shift(k).scale(&self.coeff(k));
        }
        if other.is_monomial() {
            let k = other.order().expect("nonzero");
            return self.shift(k).scale(&other.coeff(k));
        }
        let mut coeffs = vec![self.field.zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if self.field.is_zero(a) {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                let prod = self.field.mul(a, b)?;
                coeffs[i + j] = self.field.add(&coeffs[i + j], &prod)?;
            }
        }
        let mut p = Poly { field: self.field, coeffs };
        p.normalize();
        Ok(p)
    }

    /// Multiplication by `t^k`.
    pub fn shift(&self, k: usize) -> Poly {
        if self.is_zero() {
            return self.clone();
        }
        let mut coeffs = vec![self.field.zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Poly { field: self.field, coeffs }
    }

    /// Keeps only the terms of exponent `< cut`.
    pub fn truncated(&self, cut: usize) -> Poly {
        let mut p =
            Poly { field: self.field, coeffs: self.coeffs.iter().take(cut).cloned().collect() };
        p.normalize();
        p
    }

    /// Euclidean division: returns `(q, r)` with `self = q·div + r` and
    /// `deg r < deg div`.
    pub fn divrem(&self, div: &Poly) -> Result<(Poly, Poly)> {
        self.same_field(div)?;
        let d = div.degree().ok_or(Error::DivisionByZero)?;
        let lead_inv = self.field.inv(div.leading_coeff().expect("nonzero"))?;
        let mut rem = self.clone();
        let mut quo = vec![self.field.zero(); self.coeffs.len().saturating_sub(d)];
        while let Some(rd) = rem.degree() {
            if rd < d {
                break;
            }
            let c = self.field.mul(&rem.coeff(rd), &lead_inv)?;
            quo[rd - d] = c.clone();
            let sub = div.scale(&c)?.shift(rd - d);
            rem = rem.sub(&sub)?;
        }
        let q = Poly::from_coeffs(self.field, quo)?;
        Ok((q, rem))
    }

    /// True when `div` divides `self` exactly.
    pub fn divisible_by(&self, div: &Poly) -> Result<bool> {
        Ok(self.divrem(div)?.1.is_zero())
    }

    /// Monic gcd via Euclid; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &Poly) -> Result<Poly> {
        self.same_field(other)?;
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.divrem(&b)?.1;
            a = b;
            b = r;
        }
        a.into_monic()
    }

    /// Scales so the leading coefficient is 1 (zero stays zero).
    pub fn into_monic(self) -> Result<Poly> {
        match self.leading_coeff() {
            None => Ok(self),
            Some(lc) => {
                let inv = self.field.inv(lc)?;
                self.scale(&inv)
            }
        }
    }

    /// Horner evaluation.
    pub fn eval(&self, at: &Scalar) -> Result<Scalar> {
        let mut acc = self.field.zero();
        for c in self.coeffs.iter().rev() {
            acc = self.field.add(&self.field.mul(&acc, at)?, c)?;
        }
        Ok(acc)
    }
}

// ---- Truncated inversion ----

impl Poly {
    /// The unique polynomial `g` of degree `< ell` with `f·g ≡ 1 (mod t^ell)`,
    /// for `f` with constant term 1.
    ///
    /// Coefficients follow the forward recurrence
    /// `v_n = -(a_1 v_{n-1} + ... + a_n v_0)` with `v_0 = 1`, where `a_i` are
    /// the coefficients of `f`.
    pub fn inverse_mod_power(&self, ell: usize) -> Result<Poly> {
        if ell < 1 {
            return Err(Error::BoundTooSmall { required: 1, got: ell });
        }
        if !self.field.is_one(&self.coeff(0)) {
            return Err(Error::NonUnitConstantTerm);
        }
        let f = self.field;
        let mut v = Vec::with_capacity(ell);
        v.push(f.one());
        for n in 1..ell {
            let mut acc = f.zero();
            for i in 1..=n {
                let term = f.mul(&self.coeff(i), &v[n - i])?;
                acc = f.add(&acc, &term)?;
            }
            v.push(f.neg(&acc)?);
        }
        Poly::from_coeffs(f, v)
    }
}

// ---- Printing ----

impl fmt::Display for Poly {
    /// Canonical form: ascending exponents, zero terms suppressed,
    /// coefficient 1 left implicit, e.g. `1 - t^2 + 2*t^5`.
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(out, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if self.field.is_zero(c) {
                continue;
            }
            let (sign, mag) = match c {
                Scalar::Rat(r) if r.numer().sign() == num_bigint::Sign::Minus => {
                    ("-", Scalar::Rat(-r))
                }
                _ => ("+", c.clone()),
            };
            if first {
                if sign == "-" {
                    write!(out, "-")?;
                }
                first = false;
            } else {
                write!(out, " {sign} ")?;
            }
            let is_unit = self.field.is_one(&mag);
            match (k, is_unit) {
                (0, _) => write!(out, "{mag}")?,
                (1, true) => write!(out, "t")?,
                (1, false) => write!(out, "{mag}*t")?,
                (_, true) => write!(out, "t^{k}")?,
                (_, false) => write!(out, "{mag}*t^{k}")?,
            }
        }
        Ok(())
    }
}
