//! Ground arithmetic: Q, GF(p), GF(p^k), and the rational quaternions, plus
//! univariate polynomials over the commutative fields.

mod factor_finite;
mod factor_rational;
pub(crate) mod gfpoly;
mod irreducible;
mod poly;

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::Rng;

use crate::error::{Error, Result};
use crate::quaternion::Quaternion;

pub use factor_rational::{integer_divisors, primitive_integer_form};
pub use irreducible::{
    find_irreducible_poly, is_k_closed, poly_factor, poly_gcd, poly_irreducible, poly_splits,
    KClosedness, PolyIrreducibility, Splitting, RATIONAL_DEGREE_LIMIT,
};
pub use poly::Poly;

pub type Rational = BigRational;

/// Largest prime modulus accepted for GF(p).
pub const MAX_PRIME: u64 = 1 << 31;

/// Descriptor of the ground arithmetic.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Domain {
    Rational,
    Prime(u64),
    /// GF(p)[t]/(modulus); the modulus is monic irreducible, ascending coefficients.
    Ext { p: u64, modulus: Vec<u64> },
    /// The rational quaternions; center Q.
    Quaternion,
}

/// A scalar in canonical form. Equality is representation equality.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Scalar {
    Rat(Rational),
    Mod(u64),
    /// Residue polynomial, ascending, no trailing zeros, degree below the modulus.
    Ext(Vec<u64>),
    Quat(Quaternion),
}

pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

pub(crate) fn rat(v: i64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

pub fn format_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Parses `"a"` or `"a/b"`; the result is reduced to lowest terms.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let bad = || Error::Parse(format!("not a rational number: {s:?}"));
    match s.split_once('/') {
        None => Ok(Rational::from_integer(s.parse::<BigInt>().map_err(|_| bad())?)),
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().map_err(|_| bad())?;
            let d: BigInt = d.trim().parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(Error::Parse(format!("zero denominator in {s:?}")));
            }
            Ok(Rational::new(n, d))
        }
    }
}

impl Domain {
    pub fn prime(p: u64) -> Result<Domain> {
        if p >= MAX_PRIME {
            return Err(Error::InvalidField(format!("p = {p} exceeds 2^31")));
        }
        if !is_prime(p) {
            return Err(Error::InvalidField(format!("{p} is not prime")));
        }
        Ok(Domain::Prime(p))
    }

    /// GF(p^k) as GF(p)[t]/(modulus). The modulus is made monic and must be
    /// irreducible over GF(p).
    pub fn ext(p: u64, modulus: &[u64]) -> Result<Domain> {
        let base = Domain::prime(p)?;
        let mut m: Vec<u64> = modulus.iter().map(|c| c % p).collect();
        gfpoly::trim(&mut m);
        if m.len() < 2 {
            return Err(Error::InvalidField("extension modulus must have degree >= 1".into()));
        }
        let lead_inv = gfpoly::inv_mod(*m.last().unwrap(), p);
        let m = gfpoly::scale(&m, lead_inv, p);
        let f = Poly::new(&base, m.iter().map(|&c| Scalar::Mod(c)).collect());
        match poly_irreducible(&f)? {
            PolyIrreducibility::Irreducible => Ok(Domain::Ext { p, modulus: m }),
            _ => Err(Error::InvalidField(format!("modulus {f} is reducible over GF({p})"))),
        }
    }

    pub fn is_field(&self) -> bool {
        !matches!(self, Domain::Quaternion)
    }

    pub fn is_finite(&self) -> bool {
        matches!(self, Domain::Prime(_) | Domain::Ext { .. })
    }

    /// 0 for Q and the quaternions.
    pub fn characteristic(&self) -> u64 {
        match self {
            Domain::Prime(p) | Domain::Ext { p, .. } => *p,
            _ => 0,
        }
    }

    /// Degree over the prime field (1 for GF(p)).
    pub fn ext_degree(&self) -> usize {
        match self {
            Domain::Ext { modulus, .. } => modulus.len() - 1,
            _ => 1,
        }
    }

    /// Number of elements, when finite and representable.
    pub fn order(&self) -> Option<u64> {
        match self {
            Domain::Prime(p) => Some(*p),
            Domain::Ext { p, modulus } => p.checked_pow((modulus.len() - 1) as u32),
            _ => None,
        }
    }

    pub fn order_big(&self) -> Option<BigUint> {
        match self {
            Domain::Prime(p) => Some(BigUint::from(*p)),
            Domain::Ext { p, modulus } => Some(BigUint::from(*p).pow((modulus.len() - 1) as u32)),
            _ => None,
        }
    }

    /// The subfield F that algebras are taken over: Q for the quaternions,
    /// the field itself otherwise.
    pub fn center(&self) -> Domain {
        match self {
            Domain::Quaternion => Domain::Rational,
            d => d.clone(),
        }
    }

    /// Dimension of the domain as a vector space over its center.
    pub fn center_dim(&self) -> usize {
        match self {
            Domain::Quaternion => 4,
            _ => 1,
        }
    }

    pub fn zero(&self) -> Scalar {
        match self {
            Domain::Rational => Scalar::Rat(Rational::zero()),
            Domain::Prime(_) => Scalar::Mod(0),
            Domain::Ext { .. } => Scalar::Ext(Vec::new()),
            Domain::Quaternion => Scalar::Quat(Quaternion::zero()),
        }
    }

    pub fn one(&self) -> Scalar {
        self.from_i64(1)
    }

    pub fn from_i64(&self, v: i64) -> Scalar {
        match self {
            Domain::Rational => Scalar::Rat(rat(v)),
            Domain::Prime(p) => Scalar::Mod(v.rem_euclid(*p as i64) as u64),
            Domain::Ext { p, .. } => {
                let c = v.rem_euclid(*p as i64) as u64;
                Scalar::Ext(if c == 0 { Vec::new() } else { vec![c] })
            }
            Domain::Quaternion => Scalar::Quat(Quaternion::from_rational(rat(v))),
        }
    }

    /// Checks that `s` belongs to this domain in canonical form.
    pub fn contains(&self, s: &Scalar) -> bool {
        match (self, s) {
            (Domain::Rational, Scalar::Rat(_)) | (Domain::Quaternion, Scalar::Quat(_)) => true,
            (Domain::Prime(p), Scalar::Mod(v)) => v < p,
            (Domain::Ext { p, modulus }, Scalar::Ext(v)) => {
                v.len() < modulus.len() && v.iter().all(|c| c < p) && v.last() != Some(&0)
            }
            _ => false,
        }
    }

    pub fn is_zero(&self, s: &Scalar) -> bool {
        match s {
            Scalar::Rat(r) => r.is_zero(),
            Scalar::Mod(v) => *v == 0,
            Scalar::Ext(v) => v.is_empty(),
            Scalar::Quat(q) => q.is_zero(),
        }
    }

    pub fn is_one(&self, s: &Scalar) -> bool {
        *s == self.one()
    }

    pub fn add(&self, x: &Scalar, y: &Scalar) -> Scalar {
        match (self, x, y) {
            (_, Scalar::Rat(a), Scalar::Rat(b)) => Scalar::Rat(a + b),
            (Domain::Prime(p), Scalar::Mod(a), Scalar::Mod(b)) => Scalar::Mod((a + b) % p),
            (Domain::Ext { p, .. }, Scalar::Ext(a), Scalar::Ext(b)) => Scalar::Ext(gfpoly::add(a, b, *p)),
            (_, Scalar::Quat(a), Scalar::Quat(b)) => Scalar::Quat(a.add(b)),
            _ => panic!("scalar/domain mismatch in add: {x:?} + {y:?} over {self:?}"),
        }
    }

    pub fn neg(&self, x: &Scalar) -> Scalar {
        match (self, x) {
            (_, Scalar::Rat(a)) => Scalar::Rat(-a),
            (Domain::Prime(p), Scalar::Mod(a)) => Scalar::Mod((p - a) % p),
            (Domain::Ext { p, .. }, Scalar::Ext(a)) => Scalar::Ext(gfpoly::neg(a, *p)),
            (_, Scalar::Quat(a)) => Scalar::Quat(a.neg()),
            _ => panic!("scalar/domain mismatch in neg: {x:?} over {self:?}"),
        }
    }

    pub fn sub(&self, x: &Scalar, y: &Scalar) -> Scalar {
        self.add(x, &self.neg(y))
    }

    pub fn mul(&self, x: &Scalar, y: &Scalar) -> Scalar {
        match (self, x, y) {
            (_, Scalar::Rat(a), Scalar::Rat(b)) => Scalar::Rat(a * b),
            (Domain::Prime(p), Scalar::Mod(a), Scalar::Mod(b)) => Scalar::Mod(a * b % p),
            (Domain::Ext { p, modulus }, Scalar::Ext(a), Scalar::Ext(b)) => {
                Scalar::Ext(gfpoly::mulmod(a, b, modulus, *p))
            }
            (_, Scalar::Quat(a), Scalar::Quat(b)) => Scalar::Quat(a.mul(b)),
            _ => panic!("scalar/domain mismatch in mul: {x:?} * {y:?} over {self:?}"),
        }
    }

    /// Two-sided inverse; `None` for zero.
    pub fn inv(&self, x: &Scalar) -> Option<Scalar> {
        if self.is_zero(x) {
            return None;
        }
        Some(match (self, x) {
            (_, Scalar::Rat(a)) => Scalar::Rat(a.recip()),
            (Domain::Prime(p), Scalar::Mod(a)) => Scalar::Mod(gfpoly::inv_mod(*a, *p)),
            (Domain::Ext { p, modulus }, Scalar::Ext(a)) => Scalar::Ext(gfpoly::inv_poly_mod(a, modulus, *p)),
            (_, Scalar::Quat(a)) => Scalar::Quat(a.inverse()?),
            _ => panic!("scalar/domain mismatch in inv: {x:?} over {self:?}"),
        })
    }

    pub fn pow(&self, x: &Scalar, mut e: u64) -> Scalar {
        let mut base = x.clone();
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            e >>= 1;
        }
        acc
    }

    pub fn pow_big(&self, x: &Scalar, e: &BigUint) -> Scalar {
        let mut acc = self.one();
        for i in (0..e.bits()).rev() {
            acc = self.mul(&acc, &acc);
            if e.bit(i) {
                acc = self.mul(&acc, x);
            }
        }
        acc
    }

    /// Inverse of the Frobenius map `x -> x^p` on a finite field.
    pub fn pth_root(&self, x: &Scalar) -> Scalar {
        match self {
            Domain::Ext { p, modulus } => {
                let k = (modulus.len() - 1) as u32;
                self.pow_big(x, &BigUint::from(*p).pow(k - 1))
            }
            _ => x.clone(),
        }
    }

    pub fn conj(&self, x: &Scalar) -> Scalar {
        match x {
            Scalar::Quat(q) => Scalar::Quat(q.conj()),
            _ => x.clone(),
        }
    }

    pub fn is_central(&self, x: &Scalar) -> bool {
        match x {
            Scalar::Quat(q) => q.is_central(),
            _ => true,
        }
    }

    /// Coordinates of `x` over the center, `center_dim()` of them.
    pub fn center_coords(&self, x: &Scalar) -> Vec<Scalar> {
        match x {
            Scalar::Quat(q) => q.coords().into_iter().map(|c| Scalar::Rat(c.clone())).collect(),
            _ => vec![x.clone()],
        }
    }

    pub fn from_center_coords(&self, coords: &[Scalar]) -> Scalar {
        match self {
            Domain::Quaternion => {
                let r = |s: &Scalar| match s {
                    Scalar::Rat(r) => r.clone(),
                    _ => panic!("quaternion coordinates must be rational"),
                };
                Scalar::Quat(Quaternion::new(r(&coords[0]), r(&coords[1]), r(&coords[2]), r(&coords[3])))
            }
            _ => coords[0].clone(),
        }
    }

    /// Embeds a scalar of `self.center()` into `self`.
    pub fn embed_center(&self, c: &Scalar) -> Scalar {
        match (self, c) {
            (Domain::Quaternion, Scalar::Rat(r)) => Scalar::Quat(Quaternion::from_rational(r.clone())),
            _ => c.clone(),
        }
    }

    /// The central part of a scalar when it is central.
    pub fn to_center(&self, x: &Scalar) -> Option<Scalar> {
        match x {
            Scalar::Quat(q) if q.is_central() => Some(Scalar::Rat(q.a.clone())),
            Scalar::Quat(_) => None,
            _ => Some(x.clone()),
        }
    }

    /// The `index`-th element of a finite field in base-p digit order;
    /// index 0 is zero and index 1 is one.
    pub fn element(&self, index: u64) -> Scalar {
        match self {
            Domain::Prime(p) => Scalar::Mod(index % p),
            Domain::Ext { p, modulus } => {
                let mut digits = Vec::with_capacity(modulus.len() - 1);
                let mut i = index;
                for _ in 0..modulus.len() - 1 {
                    digits.push(i % p);
                    i /= p;
                }
                gfpoly::trim(&mut digits);
                Scalar::Ext(digits)
            }
            _ => panic!("element enumeration needs a finite field"),
        }
    }

    /// All elements of a small finite field.
    pub fn elements(&self) -> Option<Vec<Scalar>> {
        let q = self.order()?;
        Some((0..q).map(|i| self.element(i)).collect())
    }

    /// Uniform over finite fields; coefficients from {-2..2} over Q and the
    /// quaternions.
    pub fn random<R: Rng + ?Sized>(&self, rng: &mut R) -> Scalar {
        match self {
            Domain::Rational => Scalar::Rat(rat(rng.gen_range(-2..=2))),
            Domain::Quaternion => Scalar::Quat(Quaternion::from_ints(
                rng.gen_range(-2..=2),
                rng.gen_range(-2..=2),
                rng.gen_range(-2..=2),
                rng.gen_range(-2..=2),
            )),
            Domain::Prime(p) => Scalar::Mod(rng.gen_range(0..*p)),
            Domain::Ext { p, modulus } => {
                let mut v: Vec<u64> = (0..modulus.len() - 1).map(|_| rng.gen_range(0..*p)).collect();
                gfpoly::trim(&mut v);
                Scalar::Ext(v)
            }
        }
    }

    /// Parses the string form of a scalar of this domain. Rationals accept
    /// `"a"` and `"a/b"`; GF(p) accepts any integer; GF(p^k) accepts an
    /// integer or `"[c0,c1,...]"` (ascending residue coefficients);
    /// quaternions accept a rational (central element).
    pub fn parse_scalar(&self, s: &str) -> Result<Scalar> {
        let s = s.trim();
        match self {
            Domain::Rational => Ok(Scalar::Rat(parse_rational(s)?)),
            Domain::Quaternion => Ok(Scalar::Quat(Quaternion::from_rational(parse_rational(s)?))),
            Domain::Prime(p) => Ok(Scalar::Mod(parse_residue(s, *p)?)),
            Domain::Ext { p, modulus } => {
                let mut coeffs = if let Some(inner) = s.strip_prefix('[').and_then(|t| t.strip_suffix(']')) {
                    inner
                        .split(',')
                        .filter(|t| !t.trim().is_empty())
                        .map(|t| parse_residue(t, *p))
                        .collect::<Result<Vec<u64>>>()?
                } else {
                    vec![parse_residue(s, *p)?]
                };
                gfpoly::trim(&mut coeffs);
                let reduced = gfpoly::rem(&coeffs, modulus, *p);
                Ok(Scalar::Ext(reduced))
            }
        }
    }

    pub fn descriptor(&self) -> String {
        match self {
            Domain::Rational => "Q".into(),
            Domain::Prime(p) => format!("GF({p})"),
            Domain::Ext { p, modulus } => format!("GF({p}^{})", modulus.len() - 1),
            Domain::Quaternion => "H(Q)".into(),
        }
    }
}

fn parse_residue(s: &str, p: u64) -> Result<u64> {
    let v: BigInt = s
        .trim()
        .parse()
        .map_err(|_| Error::Parse(format!("not an integer residue: {s:?}")))?;
    let r = ((v % BigInt::from(p)) + BigInt::from(p)) % BigInt::from(p);
    Ok(r.to_u64().expect("residue fits"))
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rat(r) => f.write_str(&format_rational(r)),
            Scalar::Mod(v) => write!(f, "{v}"),
            Scalar::Ext(v) if v.len() <= 1 => write!(f, "{}", v.first().copied().unwrap_or(0)),
            Scalar::Ext(v) => {
                f.write_str("[")?;
                for (i, c) in v.iter().enumerate() {
                    if i > 0 {
                        f.write_str(",")?;
                    }
                    write!(f, "{c}")?;
                }
                f.write_str("]")
            }
            Scalar::Quat(q) => write!(f, "{q}"),
        }
    }
}

impl Scalar {
    pub fn as_rational(&self) -> Option<&Rational> {
        match self {
            Scalar::Rat(r) => Some(r),
            _ => None,
        }
    }

    pub fn is_negative_rational(&self) -> bool {
        matches!(self, Scalar::Rat(r) if r.is_negative())
    }
}
