//! Rational quaternions `a + bi + cj + dk`, a division ring with center Q.

use core::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::scalars::{format_rational, Domain, Poly, Rational, Scalar};

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Quaternion {
    pub a: Rational,
    pub b: Rational,
    pub c: Rational,
    pub d: Rational,
}

impl Quaternion {
    pub fn new(a: Rational, b: Rational, c: Rational, d: Rational) -> Self {
        Quaternion { a, b, c, d }
    }

    pub fn from_ints(a: i64, b: i64, c: i64, d: i64) -> Self {
        let r = |v: i64| Rational::from_integer(BigInt::from(v));
        Quaternion::new(r(a), r(b), r(c), r(d))
    }

    pub fn zero() -> Self {
        Self::from_ints(0, 0, 0, 0)
    }

    pub fn one() -> Self {
        Self::from_ints(1, 0, 0, 0)
    }

    pub fn i() -> Self {
        Self::from_ints(0, 1, 0, 0)
    }

    pub fn j() -> Self {
        Self::from_ints(0, 0, 1, 0)
    }

    pub fn k() -> Self {
        Self::from_ints(0, 0, 0, 1)
    }

    pub fn from_rational(a: Rational) -> Self {
        let z = Rational::zero();
        Quaternion::new(a, z.clone(), z.clone(), z)
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero() && self.c.is_zero() && self.d.is_zero()
    }

    /// Central elements are exactly the rationals.
    pub fn is_central(&self) -> bool {
        self.b.is_zero() && self.c.is_zero() && self.d.is_zero()
    }

    pub fn add(&self, o: &Self) -> Self {
        Quaternion::new(&self.a + &o.a, &self.b + &o.b, &self.c + &o.c, &self.d + &o.d)
    }

    pub fn sub(&self, o: &Self) -> Self {
        Quaternion::new(&self.a - &o.a, &self.b - &o.b, &self.c - &o.c, &self.d - &o.d)
    }

    pub fn neg(&self) -> Self {
        Quaternion::new(-&self.a, -&self.b, -&self.c, -&self.d)
    }

    /// Hamilton product; `i*j = k`, `j*i = -k`.
    pub fn mul(&self, o: &Self) -> Self {
        let (a1, b1, c1, d1) = (&self.a, &self.b, &self.c, &self.d);
        let (a2, b2, c2, d2) = (&o.a, &o.b, &o.c, &o.d);
        Quaternion::new(
            a1 * a2 - b1 * b2 - c1 * c2 - d1 * d2,
            a1 * b2 + b1 * a2 + c1 * d2 - d1 * c2,
            a1 * c2 - b1 * d2 + c1 * a2 + d1 * b2,
            a1 * d2 + b1 * c2 - c1 * b2 + d1 * a2,
        )
    }

    pub fn scale(&self, r: &Rational) -> Self {
        Quaternion::new(&self.a * r, &self.b * r, &self.c * r, &self.d * r)
    }

    pub fn conj(&self) -> Self {
        Quaternion::new(self.a.clone(), -&self.b, -&self.c, -&self.d)
    }

    pub fn norm(&self) -> Rational {
        &self.a * &self.a + &self.b * &self.b + &self.c * &self.c + &self.d * &self.d
    }

    /// `conj(q) / N(q)`; `None` for zero.
    pub fn inverse(&self) -> Option<Self> {
        let n = self.norm();
        if n.is_zero() {
            return None;
        }
        Some(self.conj().scale(&n.recip()))
    }

    /// Monic minimal polynomial over the center Q: `x - a` for rationals,
    /// otherwise `x^2 - 2a x + N(q)`.
    pub fn min_poly_over_center(&self) -> Poly {
        let q = Domain::Rational;
        if self.is_central() {
            return Poly::new(&q, alloc::vec![Scalar::Rat(-&self.a), Scalar::Rat(Rational::one())]);
        }
        let two = Rational::from_integer(BigInt::from(2));
        Poly::new(
            &q,
            alloc::vec![
                Scalar::Rat(self.norm()),
                Scalar::Rat(-(two * &self.a)),
                Scalar::Rat(Rational::one()),
            ],
        )
    }

    pub fn coords(&self) -> [&Rational; 4] {
        [&self.a, &self.b, &self.c, &self.d]
    }
}

impl fmt::Display for Quaternion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut wrote = false;
        for (coef, unit) in self.coords().into_iter().zip(["", "i", "j", "k"]) {
            if coef.is_zero() {
                continue;
            }
            if wrote {
                f.write_str(if coef.is_negative() { "-" } else { "+" })?;
            } else if coef.is_negative() {
                f.write_str("-")?;
            }
            let mag = coef.abs();
            if unit.is_empty() || !mag.is_one() {
                f.write_str(&format_rational(&mag))?;
            }
            f.write_str(unit)?;
            wrote = true;
        }
        if !wrote {
            f.write_str("0")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    fn half(v: i64) -> Rational {
        Rational::new(BigInt::from(v), BigInt::from(2))
    }

    #[test]
    fn hamilton_rules() {
        let (i, j, k) = (Quaternion::i(), Quaternion::j(), Quaternion::k());
        assert_eq!(i.mul(&j), k);
        assert_eq!(j.mul(&i), k.neg());
        assert_eq!(i.mul(&i), Quaternion::one().neg());
        assert_eq!(i.mul(&j).mul(&k), Quaternion::one().neg());
    }

    #[test]
    fn inverse_examples() {
        assert_eq!(Quaternion::one().inverse().unwrap(), Quaternion::one());
        assert_eq!(Quaternion::i().inverse().unwrap(), Quaternion::i().neg());
        let q = Quaternion::from_ints(1, 1, 0, 0);
        let inv = q.inverse().unwrap();
        let z = Rational::zero();
        assert_eq!(inv, Quaternion::new(half(1), half(-1), z.clone(), z));
        assert_eq!(q.mul(&inv), Quaternion::one());
        assert_eq!(inv.mul(&q), Quaternion::one());
        assert!(Quaternion::zero().inverse().is_none());
    }

    #[test]
    fn min_poly_examples() {
        let q = Domain::Rational;
        assert_eq!(
            Quaternion::from_ints(3, 0, 0, 0).min_poly_over_center(),
            Poly::from_i64(&q, &[-3, 1])
        );
        assert_eq!(Quaternion::i().min_poly_over_center(), Poly::from_i64(&q, &[1, 0, 1]));
        assert_eq!(
            Quaternion::from_ints(1, 0, 1, 0).min_poly_over_center(),
            Poly::from_i64(&q, &[2, -2, 1])
        );
    }

    #[test]
    fn display() {
        assert_eq!(Quaternion::from_ints(1, -1, 0, 2).to_string(), "1-i+2k");
        assert_eq!(Quaternion::zero().to_string(), "0");
        assert_eq!(Quaternion::new(half(1), half(0), half(-3), half(0)).to_string(), "1/2-3/2j");
    }
}
