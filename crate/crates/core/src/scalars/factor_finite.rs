//! Factorization over GF(q): square-free decomposition, distinct-degree and
//! equal-degree (Cantor-Zassenhaus) splitting, and Rabin's irreducibility test.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigUint;
use num_traits::One;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::{Domain, Poly, Scalar};
use crate::error::Result;

fn q_of(d: &Domain) -> BigUint {
    d.order_big().expect("finite field")
}

/// `f = g(x^p)`: returns the p-th root polynomial `h` with `h^p = f`.
fn pth_root_poly(f: &Poly) -> Poly {
    let d = f.domain();
    let p = d.characteristic() as usize;
    let coeffs = f
        .coeffs()
        .iter()
        .enumerate()
        .filter(|(i, _)| i % p == 0)
        .map(|(_, c)| d.pth_root(c))
        .collect();
    Poly::new(d, coeffs)
}

/// Square-free decomposition: pairs `(g, m)` with `f = lc * prod g^m`,
/// each `g` monic and square-free.
pub fn square_free(f: &Poly) -> Result<Vec<(Poly, usize)>> {
    let d = f.domain();
    let p = d.characteristic() as usize;
    let mut out = Vec::new();
    let f = f.monic();
    if f.degree().unwrap_or(0) == 0 {
        return Ok(out);
    }
    let mut c = f.gcd(&f.derivative())?;
    let mut w = f.div_exact(&c)?;
    let mut i = 1;
    while !w.is_one() {
        let y = w.gcd(&c)?;
        let fac = w.div_exact(&y)?;
        if !fac.is_one() {
            out.push((fac, i));
        }
        w = y;
        c = c.div_exact(&w)?;
        i += 1;
    }
    if !c.is_one() {
        let root = pth_root_poly(&c);
        for (g, m) in square_free(&root)? {
            out.push((g, m * p));
        }
    }
    Ok(out)
}

/// Distinct-degree factorization of a monic square-free `f`:
/// pairs `(g, d)` where `g` is the product of all degree-`d` irreducible factors.
pub fn distinct_degree(f: &Poly) -> Result<Vec<(Poly, usize)>> {
    let d = f.domain();
    let q = q_of(d);
    let x = Poly::x(d);
    let mut out = Vec::new();
    let mut rest = f.monic();
    let mut h = x.rem(&rest)?;
    let mut i = 1;
    while rest.degree().unwrap_or(0) >= 2 * i {
        h = h.pow_mod(&q, &rest)?;
        let g = rest.gcd(&h.sub(&x))?;
        if !g.is_one() {
            rest = rest.div_exact(&g)?;
            h = h.rem(&rest)?;
            out.push((g, i));
        }
        i += 1;
    }
    if rest.degree().unwrap_or(0) > 0 {
        let deg = rest.degree().unwrap();
        out.push((rest, deg));
    }
    Ok(out)
}

/// Splits a monic product of distinct irreducibles of degree `deg` into its
/// factors (Cantor-Zassenhaus), with a fixed-seed generator so results are
/// reproducible.
pub fn equal_degree(f: &Poly, deg: usize) -> Result<Vec<Poly>> {
    let d = f.domain();
    let n = f.degree().unwrap_or(0);
    if n == deg {
        return Ok(vec![f.monic()]);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed ^ n as u64);
    let q = q_of(d);
    let qd = q.pow(deg as u32);
    let char2 = d.characteristic() == 2;
    loop {
        let a = Poly::new(d, (0..n).map(|_| d.random(&mut rng)).collect());
        if a.degree().unwrap_or(0) == 0 {
            continue;
        }
        let b = if char2 {
            // trace map a + a^2 + ... + a^(2^(k*deg - 1))
            let bits = d.ext_degree() * deg;
            let mut t = a.rem(f)?;
            let mut acc = t.clone();
            for _ in 1..bits {
                t = t.mul(&t).rem(f)?;
                acc = acc.add(&t);
            }
            acc
        } else {
            let e = (&qd - BigUint::one()) / BigUint::from(2u32);
            a.pow_mod(&e, f)?.sub(&Poly::one(d))
        };
        let g = f.gcd(&b)?;
        let gd = g.degree().unwrap_or(0);
        if gd > 0 && gd < n {
            let mut left = equal_degree(&g, deg)?;
            left.extend(equal_degree(&f.div_exact(&g)?, deg)?);
            return Ok(left);
        }
    }
}

/// Complete factorization into monic irreducibles with multiplicities,
/// sorted by (degree, coefficients).
pub fn factor(f: &Poly) -> Result<Vec<(Poly, usize)>> {
    let mut out = Vec::new();
    for (g, m) in square_free(f)? {
        for (h, deg) in distinct_degree(&g)? {
            for irr in equal_degree(&h, deg)? {
                out.push((irr, m));
            }
        }
    }
    out.sort_by(|a, b| (a.0.degree(), &a.0).cmp(&(b.0.degree(), &b.0)));
    Ok(out)
}

fn prime_divisors(mut n: usize) -> Vec<usize> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            out.push(p);
            while n.is_multiple_of(p) {
                n /= p;
            }
        }
        p += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// `x^(q^m) mod f`.
fn frobenius_power(f: &Poly, m: usize) -> Result<Poly> {
    let d = f.domain();
    let q = q_of(d);
    let mut h = Poly::x(d).rem(f)?;
    for _ in 0..m {
        h = h.pow_mod(&q, f)?;
    }
    Ok(h)
}

/// Rabin's test: `f` of degree n is irreducible iff `x^(q^n) = x mod f` and
/// `gcd(f, x^(q^(n/r)) - x) = 1` for every prime `r | n`.
pub fn rabin_irreducible(f: &Poly) -> Result<bool> {
    let d = f.domain();
    let n = f.degree().unwrap_or(0);
    if n == 0 {
        return Ok(false);
    }
    if n == 1 {
        return Ok(true);
    }
    let f = f.monic();
    let x = Poly::x(d);
    for r in prime_divisors(n) {
        let h = frobenius_power(&f, n / r)?;
        if !f.gcd(&h.sub(&x))?.is_one() {
            return Ok(false);
        }
    }
    Ok(frobenius_power(&f, n)?.sub(&x).rem(&f)?.is_zero())
}

/// Distinct roots of `f` in GF(q).
pub fn roots(f: &Poly) -> Result<Vec<Scalar>> {
    let d = f.domain();
    if f.degree().unwrap_or(0) == 0 {
        return Ok(Vec::new());
    }
    // product of the distinct linear factors: gcd(f, x^q - x)
    let g = f.gcd(&frobenius_power(&f.monic(), 1)?.sub(&Poly::x(d)))?;
    let mut out = match d.order() {
        Some(q) if q <= 10_000 => (0..q)
            .map(|i| d.element(i))
            .filter(|r| d.is_zero(&g.eval(r)))
            .collect(),
        _ => {
            if g.degree().unwrap_or(0) == 0 {
                Vec::new()
            } else {
                equal_degree(&g, 1)?
                    .into_iter()
                    .map(|lin| d.neg(&lin.coeff(0)))
                    .collect()
            }
        }
    };
    out.sort();
    Ok(out)
}
