use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigUint;

use super::{Domain, Scalar};
use crate::error::{Error, Result};

/// Univariate polynomial with coefficients in ascending degree order and no
/// trailing zeros; the zero polynomial has no coefficients.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Poly {
    domain: Domain,
    coeffs: Vec<Scalar>,
}

impl Poly {
    pub fn new(domain: &Domain, coeffs: Vec<Scalar>) -> Poly {
        let mut p = Poly { domain: domain.clone(), coeffs };
        p.normalize();
        p
    }

    pub fn from_i64(domain: &Domain, coeffs: &[i64]) -> Poly {
        Poly::new(domain, coeffs.iter().map(|&c| domain.from_i64(c)).collect())
    }

    pub fn zero(domain: &Domain) -> Poly {
        Poly { domain: domain.clone(), coeffs: Vec::new() }
    }

    pub fn one(domain: &Domain) -> Poly {
        Poly::constant(domain, domain.one())
    }

    pub fn x(domain: &Domain) -> Poly {
        Poly::new(domain, vec![domain.zero(), domain.one()])
    }

    pub fn constant(domain: &Domain, c: Scalar) -> Poly {
        Poly::new(domain, vec![c])
    }

    /// `c * x^deg`.
    pub fn monomial(domain: &Domain, c: Scalar, deg: usize) -> Poly {
        let mut coeffs = vec![domain.zero(); deg];
        coeffs.push(c);
        Poly::new(domain, coeffs)
    }

    /// `x - r`.
    pub fn linear(domain: &Domain, root: &Scalar) -> Poly {
        Poly::new(domain, vec![domain.neg(root), domain.one()])
    }

    fn normalize(&mut self) {
        while self.coeffs.last().is_some_and(|c| self.domain.is_zero(c)) {
            self.coeffs.pop();
        }
    }

    pub fn domain(&self) -> &Domain {
        &self.domain
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> Scalar {
        self.coeffs.get(i).cloned().unwrap_or_else(|| self.domain.zero())
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.domain.is_one(&self.coeffs[0])
    }

    pub fn leading(&self) -> Option<&Scalar> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(|c| self.domain.is_one(c))
    }

    fn check_same(&self, other: &Poly) -> Result<()> {
        if self.domain != other.domain {
            return Err(Error::DomainMismatch(alloc::format!(
                "{} vs {}",
                self.domain.descriptor(),
                other.domain.descriptor()
            )));
        }
        Ok(())
    }

    fn assert_same(&self, other: &Poly) {
        assert_eq!(self.domain, other.domain, "polynomial domain mismatch");
    }

    pub fn add(&self, other: &Poly) -> Poly {
        self.assert_same(other);
        let d = &self.domain;
        let n = self.coeffs.len().max(other.coeffs.len());
        Poly::new(d, (0..n).map(|i| d.add(&self.coeff(i), &other.coeff(i))).collect())
    }

    pub fn neg(&self) -> Poly {
        Poly::new(&self.domain, self.coeffs.iter().map(|c| self.domain.neg(c)).collect())
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        self.assert_same(other);
        let d = &self.domain;
        if self.is_zero() || other.is_zero() {
            return Poly::zero(d);
        }
        let mut out = vec![d.zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if d.is_zero(a) {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] = d.add(&out[i + j], &d.mul(a, b));
            }
        }
        Poly::new(d, out)
    }

    pub fn scale(&self, c: &Scalar) -> Poly {
        Poly::new(&self.domain, self.coeffs.iter().map(|a| self.domain.mul(c, a)).collect())
    }

    pub fn pow(&self, mut e: u32) -> Poly {
        let mut base = self.clone();
        let mut acc = Poly::one(&self.domain);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }

    /// Monic normalization; the zero polynomial stays zero.
    pub fn monic(&self) -> Poly {
        match self.leading() {
            None => self.clone(),
            Some(l) => {
                let inv = self.domain.inv(l).expect("nonzero leading coefficient");
                self.scale(&inv)
            }
        }
    }

    pub fn div_rem(&self, divisor: &Poly) -> Result<(Poly, Poly)> {
        self.check_same(divisor)?;
        let d = &self.domain;
        if !d.is_field() {
            return Err(Error::NotAField(d.descriptor()));
        }
        let lead = divisor.leading().ok_or(Error::DivisionByZero)?;
        let lead_inv = d.inv(lead).expect("nonzero leading coefficient");
        let mut r = self.coeffs.clone();
        let dn = divisor.coeffs.len();
        if r.len() < dn {
            return Ok((Poly::zero(d), self.clone()));
        }
        let mut q = vec![d.zero(); r.len() - dn + 1];
        for shift in (0..q.len()).rev() {
            let c = d.mul(&r[shift + dn - 1], &lead_inv);
            if d.is_zero(&c) {
                continue;
            }
            for (j, b) in divisor.coeffs.iter().enumerate() {
                r[shift + j] = d.sub(&r[shift + j], &d.mul(&c, b));
            }
            q[shift] = c;
        }
        Ok((Poly::new(d, q), Poly::new(d, r)))
    }

    pub fn rem(&self, divisor: &Poly) -> Result<Poly> {
        Ok(self.div_rem(divisor)?.1)
    }

    /// Exact quotient; errors if the division leaves a remainder.
    pub fn div_exact(&self, divisor: &Poly) -> Result<Poly> {
        let (q, r) = self.div_rem(divisor)?;
        if !r.is_zero() {
            return Err(Error::InvalidInput(alloc::format!("{divisor} does not divide {self}")));
        }
        Ok(q)
    }

    pub fn divides(&self, other: &Poly) -> Result<bool> {
        Ok(other.rem(self)?.is_zero())
    }

    /// Monic gcd; `gcd(f, 0) = monic(f)`.
    pub fn gcd(&self, other: &Poly) -> Result<Poly> {
        self.check_same(other)?;
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b)?;
            a = b;
            b = r;
        }
        Ok(a.monic())
    }

    pub fn derivative(&self) -> Poly {
        let d = &self.domain;
        Poly::new(
            d,
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| d.mul(&d.from_i64(i as i64), c))
                .collect(),
        )
    }

    pub fn eval(&self, x: &Scalar) -> Scalar {
        let d = &self.domain;
        self.coeffs
            .iter()
            .rev()
            .fold(d.zero(), |acc, c| d.add(&d.mul(&acc, x), c))
    }

    /// `self^e mod m`.
    pub fn pow_mod(&self, e: &BigUint, m: &Poly) -> Result<Poly> {
        let base = self.rem(m)?;
        let mut acc = Poly::one(&self.domain).rem(m)?;
        for i in (0..e.bits()).rev() {
            acc = acc.mul(&acc).rem(m)?;
            if e.bit(i) {
                acc = acc.mul(&base).rem(m)?;
            }
        }
        Ok(acc)
    }

    /// Substitutes `x -> x^k`.
    pub fn inflate(&self, k: usize) -> Poly {
        let d = &self.domain;
        let mut out = vec![d.zero(); (self.coeffs.len().saturating_sub(1)) * k + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            out[i * k] = c.clone();
        }
        Poly::new(d, out)
    }

    pub fn to_string_in(&self, var: &str) -> String {
        use core::fmt::Write;
        let d = &self.domain;
        if self.is_zero() {
            return "0".into();
        }
        let mut s = String::new();
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if d.is_zero(c) {
                continue;
            }
            let (neg, mag) = if c.is_negative_rational() { (true, d.neg(c)) } else { (false, c.clone()) };
            if s.is_empty() {
                if neg {
                    s.push('-');
                }
            } else {
                s.push_str(if neg { " - " } else { " + " });
            }
            let coeff_str = alloc::format!("{mag}");
            let needs_parens = matches!(mag, Scalar::Quat(_));
            if i == 0 || !d.is_one(&mag) {
                if needs_parens {
                    let _ = write!(s, "({coeff_str})");
                } else {
                    s.push_str(&coeff_str);
                }
            }
            match i {
                0 => {}
                1 => s.push_str(var),
                _ => {
                    let _ = write!(s, "{var}^{i}");
                }
            }
        }
        s
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_string_in("x"))
    }
}
