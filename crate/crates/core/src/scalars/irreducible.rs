use alloc::format;
use alloc::vec::Vec;

use num_bigint::BigUint;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::factor_finite;
use super::factor_rational;
use super::{Domain, Poly, Scalar};
use crate::error::{Error, Result};

/// Largest degree for which irreducibility over Q is decided.
pub const RATIONAL_DEGREE_LIMIT: usize = 12;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PolyIrreducibility {
    Irreducible,
    /// A monic nontrivial factor.
    Reducible(Poly),
    /// Only over Q above the supported degree.
    Unknown,
}

impl PolyIrreducibility {
    pub fn is_irreducible(&self) -> bool {
        matches!(self, PolyIrreducibility::Irreducible)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Splitting {
    pub splits: bool,
    /// Distinct roots found in the field with their multiplicities, sorted.
    pub roots: Vec<(Scalar, usize)>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KClosedness {
    pub k: usize,
    pub closed: bool,
    /// An irreducible polynomial of degree k when the field is not k-closed.
    pub witness: Option<Poly>,
}

fn require_field(d: &Domain) -> Result<()> {
    if d.is_field() {
        Ok(())
    } else {
        Err(Error::NotAField(d.descriptor()))
    }
}

fn require_nonconstant(f: &Poly) -> Result<usize> {
    match f.degree() {
        Some(n) if n >= 1 => Ok(n),
        _ => Err(Error::InvalidInput(format!("constant polynomial {f}"))),
    }
}

pub fn poly_gcd(f: &Poly, g: &Poly) -> Result<Poly> {
    f.gcd(g)
}

/// Square-free decomposition in characteristic zero (Yun).
fn yun(f: &Poly) -> Result<Vec<(Poly, usize)>> {
    let mut out = Vec::new();
    let f = f.monic();
    let df = f.derivative();
    let b = f.gcd(&df)?;
    let mut c = f.div_exact(&b)?;
    let mut d = df.div_exact(&b)?.sub(&c.derivative());
    let mut i = 1;
    while c.degree().unwrap_or(0) > 0 {
        let a = c.gcd(&d)?;
        if a.degree().unwrap_or(0) > 0 {
            out.push((a.clone(), i));
        }
        c = c.div_exact(&a)?;
        d = d.div_exact(&a)?.sub(&c.derivative());
        i += 1;
    }
    Ok(out)
}

/// Monic irreducible factors with multiplicities, sorted by degree then
/// coefficients. `None` over Q above the supported degree.
pub fn poly_factor(f: &Poly) -> Result<Option<Vec<(Poly, usize)>>> {
    let d = f.domain();
    require_field(d)?;
    require_nonconstant(f)?;
    if d.is_finite() {
        return Ok(Some(factor_finite::factor(f)?));
    }
    if f.degree().unwrap() > RATIONAL_DEGREE_LIMIT {
        return Ok(None);
    }
    let mut out = Vec::new();
    for (g, m) in yun(f)? {
        for h in factor_rational::factor_square_free(&g)? {
            out.push((h, m));
        }
    }
    out.sort_by(|a, b| (a.0.degree(), &a.0).cmp(&(b.0.degree(), &b.0)));
    Ok(Some(out))
}

/// Rabin's test over finite fields; over Q the rational-root test up to
/// degree 3, then a mod-p certificate or Zassenhaus factorization up to
/// degree 12, and `Unknown` beyond.
pub fn poly_irreducible(f: &Poly) -> Result<PolyIrreducibility> {
    let d = f.domain();
    require_field(d)?;
    let n = require_nonconstant(f)?;
    if n == 1 {
        return Ok(PolyIrreducibility::Irreducible);
    }
    if d.is_finite() {
        if factor_finite::rabin_irreducible(f)? {
            return Ok(PolyIrreducibility::Irreducible);
        }
        let first = factor_finite::factor(f)?.remove(0).0;
        return Ok(PolyIrreducibility::Reducible(first));
    }
    if n > RATIONAL_DEGREE_LIMIT {
        return Ok(PolyIrreducibility::Unknown);
    }
    if n <= 3 {
        return Ok(match factor_rational::rational_roots(f).first() {
            Some(r) => PolyIrreducibility::Reducible(Poly::linear(d, &Scalar::Rat(r.clone()))),
            None => PolyIrreducibility::Irreducible,
        });
    }
    let g = f.gcd(&f.derivative())?;
    if g.degree().unwrap_or(0) > 0 {
        return Ok(PolyIrreducibility::Reducible(g));
    }
    if factor_rational::mod_p_certificate(f)?.is_some() {
        return Ok(PolyIrreducibility::Irreducible);
    }
    let mut facs = factor_rational::factor_square_free(f)?;
    Ok(if facs.len() == 1 {
        PolyIrreducibility::Irreducible
    } else {
        PolyIrreducibility::Reducible(facs.remove(0))
    })
}

fn multiplicity(f: &Poly, root: &Scalar) -> Result<(usize, Poly)> {
    let lin = Poly::linear(f.domain(), root);
    let mut g = f.clone();
    let mut m = 0;
    loop {
        let (q, r) = g.div_rem(&lin)?;
        if !r.is_zero() {
            return Ok((m, g));
        }
        g = q;
        m += 1;
    }
}

/// Whether `f` splits into linear factors, with the roots found.
pub fn poly_splits(f: &Poly) -> Result<Splitting> {
    let d = f.domain();
    require_field(d)?;
    require_nonconstant(f)?;
    let distinct: Vec<Scalar> = if d.is_finite() {
        factor_finite::roots(f)?
    } else {
        factor_rational::rational_roots(f).into_iter().map(Scalar::Rat).collect()
    };
    let mut rest = f.clone();
    let mut roots = Vec::new();
    for r in distinct {
        let (m, q) = multiplicity(&rest, &r)?;
        rest = q;
        roots.push((r, m));
    }
    let splits = if d.is_finite() {
        // radical of f divides x^q - x
        let radical = factor_finite::square_free(f)?
            .into_iter()
            .fold(Poly::one(d), |acc, (g, _)| acc.mul(&g));
        let q = d.order_big().unwrap();
        let xq = Poly::x(d).pow_mod(&q, &radical)?;
        xq.sub(&Poly::x(d)).rem(&radical)?.is_zero()
    } else {
        rest.degree() == Some(0)
    };
    debug_assert_eq!(splits, rest.degree() == Some(0));
    Ok(Splitting { splits, roots })
}

/// A monic irreducible polynomial of degree `k >= 2`: lexicographic
/// enumeration over small finite fields, seeded sampling over large ones,
/// and `x^k - 2` over Q.
pub fn find_irreducible_poly(d: &Domain, k: usize) -> Result<Poly> {
    require_field(d)?;
    if k < 2 {
        return Err(Error::InvalidInput(format!("degree {k} < 2")));
    }
    match d {
        Domain::Rational => {
            let mut coeffs = alloc::vec![d.zero(); k + 1];
            coeffs[0] = d.from_i64(-2);
            coeffs[k] = d.one();
            Ok(Poly::new(d, coeffs))
        }
        _ => {
            let q = d.order_big().unwrap();
            let count = q.pow(k as u32);
            let monic_from = |digits: Vec<Scalar>| {
                let mut coeffs = digits;
                coeffs.push(d.one());
                Poly::new(d, coeffs)
            };
            if count <= BigUint::from(1u32 << 16) {
                let q = d.order().unwrap();
                for idx in 0..(q.pow(k as u32)) {
                    let mut i = idx;
                    let digits = (0..k)
                        .map(|_| {
                            let s = d.element(i % q);
                            i /= q;
                            s
                        })
                        .collect();
                    let f = monic_from(digits);
                    if factor_finite::rabin_irreducible(&f)? {
                        return Ok(f);
                    }
                }
                unreachable!("irreducible polynomials exist in every degree");
            }
            let mut rng = ChaCha8Rng::seed_from_u64(k as u64);
            loop {
                let f = monic_from((0..k).map(|_| d.random(&mut rng)).collect());
                if factor_finite::rabin_irreducible(&f)? {
                    return Ok(f);
                }
            }
        }
    }
}

/// No supported field is k-closed; the verdict carries an irreducible witness.
pub fn is_k_closed(d: &Domain, k: usize) -> Result<KClosedness> {
    let witness = find_irreducible_poly(d, k)?;
    Ok(KClosedness { k, closed: false, witness: Some(witness) })
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn q(c: &[i64]) -> Poly {
        Poly::from_i64(&Domain::Rational, c)
    }

    #[test]
    fn irreducibility_examples() {
        assert_eq!(poly_irreducible(&q(&[1, 0, 1])).unwrap(), PolyIrreducibility::Irreducible);
        let f2 = Domain::Prime(2);
        assert!(poly_irreducible(&Poly::from_i64(&f2, &[1, 1, 1])).unwrap().is_irreducible());
        assert_eq!(
            poly_irreducible(&q(&[-1, 0, 1])).unwrap(),
            PolyIrreducibility::Reducible(q(&[-1, 1]))
        );
        assert!(poly_irreducible(&q(&[3])).is_err());
        let mut big = vec![0i64; 21];
        big[0] = 1;
        big[20] = 1;
        assert_eq!(poly_irreducible(&q(&big)).unwrap(), PolyIrreducibility::Unknown);
        // x^4 + 4 = (x^2 + 2x + 2)(x^2 - 2x + 2)
        assert!(matches!(poly_irreducible(&q(&[4, 0, 0, 0, 1])).unwrap(), PolyIrreducibility::Reducible(_)));
        assert!(poly_irreducible(&q(&[-2, 0, 0, 0, 0, 0, 0, 1])).unwrap().is_irreducible());
    }

    #[test]
    fn splitting_examples() {
        let f = q(&[-1, 1]).pow(2).mul(&q(&[-2, 1]));
        let s = poly_splits(&f).unwrap();
        assert!(s.splits);
        assert_eq!(s.roots, vec![(Domain::Rational.from_i64(1), 2), (Domain::Rational.from_i64(2), 1)]);
        let f7 = Domain::Prime(7);
        assert!(!poly_splits(&Poly::from_i64(&f7, &[1, 0, 1])).unwrap().splits);
        let s = poly_splits(&Poly::from_i64(&f7, &[-1, 0, 1])).unwrap();
        assert!(s.splits);
        assert_eq!(s.roots, vec![(Scalar::Mod(1), 1), (Scalar::Mod(6), 1)]);
        // derivative vanishes: x^2 + 1 = (x + 1)^2 over GF(2)
        let s = poly_splits(&Poly::from_i64(&Domain::Prime(2), &[1, 0, 1])).unwrap();
        assert!(s.splits);
        assert_eq!(s.roots, vec![(Scalar::Mod(1), 2)]);
    }

    #[test]
    fn find_irreducible_examples() {
        assert_eq!(find_irreducible_poly(&Domain::Prime(2), 2).unwrap(), Poly::from_i64(&Domain::Prime(2), &[1, 1, 1]));
        assert_eq!(find_irreducible_poly(&Domain::Rational, 3).unwrap(), q(&[-2, 0, 0, 1]));
        assert_eq!(find_irreducible_poly(&Domain::Prime(3), 2).unwrap(), Poly::from_i64(&Domain::Prime(3), &[1, 0, 1]));
        let w = |d: Domain, k| is_k_closed(&d, k).unwrap().witness.unwrap();
        assert_eq!(w(Domain::Prime(5), 2), Poly::from_i64(&Domain::Prime(5), &[2, 0, 1]));
        assert_eq!(w(Domain::Rational, 4), q(&[-2, 0, 0, 0, 1]));
        assert_eq!(w(Domain::Prime(2), 3), Poly::from_i64(&Domain::Prime(2), &[1, 1, 0, 1]));
        assert!(!is_k_closed(&Domain::Prime(3), 2).unwrap().closed);
        // sampled branch
        let big = Domain::prime(65_537).unwrap();
        let f = find_irreducible_poly(&big, 2).unwrap();
        assert!(poly_irreducible(&f).unwrap().is_irreducible());
    }

    #[test]
    fn factor_with_multiplicity_over_q() {
        let f = q(&[1, 0, 1]).pow(2).mul(&q(&[-3, 1]));
        let fac = poly_factor(&f).unwrap().unwrap();
        assert_eq!(fac, vec![(q(&[-3, 1]), 1), (q(&[1, 0, 1]), 2)]);
    }
}
