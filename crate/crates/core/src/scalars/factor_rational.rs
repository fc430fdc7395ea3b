//! Factorization over Q for small degrees: rational roots, mod-p
//! irreducibility certificates, and Zassenhaus recombination of Hensel-lifted
//! modular factors.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::factor_finite;
use super::{gfpoly, is_prime, Domain, Poly, Rational, Scalar};
use crate::error::Result;

type IntPoly = Vec<BigInt>;

/// Primitive integer polynomial proportional to `f` with positive leading
/// coefficient.
pub fn primitive_integer_form(f: &Poly) -> IntPoly {
    let mut lcm = BigInt::one();
    for c in f.coeffs() {
        let r = c.as_rational().expect("rational polynomial");
        lcm = lcm.lcm(r.denom());
    }
    let ints: IntPoly = f
        .coeffs()
        .iter()
        .map(|c| {
            let r = c.as_rational().unwrap();
            r.numer() * (&lcm / r.denom())
        })
        .collect();
    primitive_part(&ints)
}

fn content(f: &[BigInt]) -> BigInt {
    f.iter().fold(BigInt::zero(), |g, c| g.gcd(c))
}

fn primitive_part(f: &[BigInt]) -> IntPoly {
    let mut c = content(f);
    if c.is_zero() {
        return Vec::new();
    }
    if f.last().is_some_and(|l| l.is_negative()) {
        c = -c;
    }
    f.iter().map(|x| x / &c).collect()
}

fn trim(f: &mut IntPoly) {
    while f.last().is_some_and(|c| c.is_zero()) {
        f.pop();
    }
}

fn to_rational_poly(f: &[BigInt]) -> Poly {
    Poly::new(
        &Domain::Rational,
        f.iter().map(|c| Scalar::Rat(Rational::from_integer(c.clone()))).collect(),
    )
}

/// Positive divisors of `n != 0`, ascending.
pub fn integer_divisors(n: &BigInt) -> Vec<BigInt> {
    let n = n.abs();
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = BigInt::one();
    let root = n.sqrt();
    while d <= root {
        if (&n % &d).is_zero() {
            let other = &n / &d;
            if other != d {
                large.push(other);
            }
            small.push(d.clone());
        }
        d += 1;
    }
    large.reverse();
    small.extend(large);
    small
}

fn eval_scaled(f: &[BigInt], num: &BigInt, den: &BigInt) -> BigInt {
    // den^deg * f(num/den)
    let n = f.len() - 1;
    let mut acc = BigInt::zero();
    let mut num_pow = BigInt::one();
    let mut den_pows = vec![BigInt::one(); n + 1];
    for i in 1..=n {
        den_pows[i] = &den_pows[i - 1] * den;
    }
    for (i, c) in f.iter().enumerate() {
        acc += c * &num_pow * &den_pows[n - i];
        num_pow *= num;
    }
    acc
}

/// Distinct rational roots of `f`, ordered by absolute value, positive first.
pub fn rational_roots(f: &Poly) -> Vec<Rational> {
    let mut ints = primitive_integer_form(f);
    let mut roots = Vec::new();
    if ints.len() < 2 {
        return roots;
    }
    if ints[0].is_zero() {
        roots.push(Rational::zero());
        while ints.first().is_some_and(|c| c.is_zero()) {
            ints.remove(0);
        }
        if ints.len() < 2 {
            return roots;
        }
    }
    let mut cands: Vec<Rational> = Vec::new();
    let nums = integer_divisors(&ints[0]);
    let dens = integer_divisors(ints.last().unwrap());
    for p in &nums {
        for q in &dens {
            if !p.gcd(q).is_one() {
                continue;
            }
            cands.push(Rational::new(p.clone(), q.clone()));
            cands.push(Rational::new(-p.clone(), q.clone()));
        }
    }
    cands.sort_by(|a, b| a.abs().cmp(&b.abs()).then(b.cmp(a)));
    for r in cands {
        if eval_scaled(&ints, r.numer(), r.denom()).is_zero() {
            roots.push(r);
        }
    }
    roots
}

fn reduce_mod_p(f: &[BigInt], p: u64) -> Vec<u64> {
    let pb = BigInt::from(p);
    let mut out: Vec<u64> = f.iter().map(|c| c.mod_floor(&pb).to_u64().unwrap()).collect();
    gfpoly::trim(&mut out);
    out
}

fn sym_mod(c: &BigInt, m: &BigInt) -> BigInt {
    let r = c.mod_floor(m);
    if &r * 2 > *m {
        r - m
    } else {
        r
    }
}

fn mul_int(a: &[BigInt], b: &[BigInt]) -> IntPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(&mut out);
    out
}

fn reduce_mod(a: &[BigInt], m: &BigInt) -> IntPoly {
    let mut out: IntPoly = a.iter().map(|c| c.mod_floor(m)).collect();
    trim(&mut out);
    out
}

/// Exact division over Z; `None` when `b` does not divide `a`.
fn div_exact_int(a: &[BigInt], b: &[BigInt]) -> Option<IntPoly> {
    let mut r = a.to_vec();
    trim(&mut r);
    if r.len() < b.len() {
        return if r.is_empty() { Some(Vec::new()) } else { None };
    }
    let lb = b.last().unwrap();
    let mut q = vec![BigInt::zero(); r.len() - b.len() + 1];
    for shift in (0..q.len()).rev() {
        let top = &r[shift + b.len() - 1];
        if top.is_zero() {
            continue;
        }
        let (c, rem) = top.div_rem(lb);
        if !rem.is_zero() {
            return None;
        }
        for (j, bj) in b.iter().enumerate() {
            r[shift + j] -= &c * bj;
        }
        q[shift] = c;
    }
    trim(&mut r);
    if r.is_empty() {
        trim(&mut q);
        Some(q)
    } else {
        None
    }
}

fn from_u64(v: &[u64]) -> IntPoly {
    v.iter().map(|&c| BigInt::from(c)).collect()
}

/// Lifts `f = g*h (mod p)` to `f = G*H (mod p^k)` with `G` monic.
fn lift_pair(f: &[BigInt], g: &[u64], h: &[u64], p: u64, k: u32) -> (IntPoly, IntPoly) {
    let (one, s, t) = gfpoly::xgcd(g, h, p);
    debug_assert_eq!(one, vec![1]);
    let pb = BigInt::from(p);
    let mut big_g = from_u64(g);
    let mut big_h = from_u64(h);
    let mut m = pb.clone();
    for _ in 1..k {
        let diff: IntPoly = {
            let prod = mul_int(&big_g, &big_h);
            let n = f.len().max(prod.len());
            (0..n)
                .map(|i| {
                    f.get(i).cloned().unwrap_or_default() - prod.get(i).cloned().unwrap_or_default()
                })
                .collect()
        };
        let e: Vec<u64> = {
            let scaled: IntPoly = diff.iter().map(|c| c / &m).collect();
            reduce_mod_p(&scaled, p)
        };
        let r = gfpoly::rem(&gfpoly::mul(&t, &e, p), g, p);
        let (hc, rest) = gfpoly::divrem(&gfpoly::sub(&e, &gfpoly::mul(h, &r, p), p), g, p);
        debug_assert!(rest.is_empty());
        let add = |acc: &mut IntPoly, corr: &[u64]| {
            if acc.len() < corr.len() {
                acc.resize(corr.len(), BigInt::zero());
            }
            for (i, c) in corr.iter().enumerate() {
                acc[i] += &m * BigInt::from(*c);
            }
        };
        add(&mut big_g, &r);
        add(&mut big_h, &hc);
        m *= &pb;
        big_g = reduce_mod(&big_g, &m);
        big_h = reduce_mod(&big_h, &m);
    }
    let _ = s;
    (big_g, big_h)
}

fn mod_inverse(a: &BigInt, m: &BigInt) -> BigInt {
    let e = a.mod_floor(m).extended_gcd(m);
    e.x.mod_floor(m)
}

/// Monic lifts modulo `p^k` of the monic modular factors of `f`.
fn hensel_lift(f: &[BigInt], factors: &[Vec<u64>], p: u64, k: u32) -> Vec<IntPoly> {
    let m = BigInt::from(p).pow(k);
    if factors.len() == 1 {
        let inv = mod_inverse(f.last().unwrap(), &m);
        return vec![reduce_mod(&f.iter().map(|c| c * &inv).collect::<IntPoly>(), &m)];
    }
    let lc = reduce_mod_p(&f[f.len() - 1..], p)[0];
    let mut h = vec![lc];
    for u in &factors[1..] {
        h = gfpoly::mul(&h, u, p);
    }
    let (g_lift, h_lift) = lift_pair(f, &factors[0], &h, p, k);
    let mut out = vec![g_lift];
    out.extend(hensel_lift(&h_lift, &factors[1..], p, k));
    out
}

fn modular_factors(f: &[BigInt], p: u64) -> Result<Vec<Vec<u64>>> {
    let dom = Domain::Prime(p);
    let fp = Poly::new(&dom, reduce_mod_p(f, p).into_iter().map(Scalar::Mod).collect());
    Ok(factor_finite::factor(&fp)?
        .into_iter()
        .map(|(g, _)| {
            g.coeffs()
                .iter()
                .map(|c| match c {
                    Scalar::Mod(v) => *v,
                    _ => unreachable!(),
                })
                .collect()
        })
        .collect())
}

fn good_prime(f: &[BigInt], p: u64) -> bool {
    let fp = reduce_mod_p(f, p);
    if fp.len() != f.len() {
        return false;
    }
    let deriv: Vec<u64> = {
        let mut d: Vec<u64> = fp.iter().enumerate().skip(1).map(|(i, &c)| (i as u64 % p) * c % p).collect();
        gfpoly::trim(&mut d);
        d
    };
    !deriv.is_empty() && gfpoly::gcd(&fp, &deriv, p) == vec![1]
}

fn candidate_primes(f: &[BigInt], wanted: usize) -> Vec<u64> {
    let mut out = Vec::new();
    let mut p = 2u64;
    while out.len() < wanted && p < 10_000 {
        if is_prime(p) && good_prime(f, p) {
            out.push(p);
        }
        p += 1;
    }
    out
}

/// A prime modulo which the primitive square-free `f` stays irreducible of
/// the same degree, if one is found among the first few good primes.
pub fn mod_p_certificate(f: &Poly) -> Result<Option<u64>> {
    let ints = primitive_integer_form(f);
    for p in candidate_primes(&ints, 8) {
        if modular_factors(&ints, p)?.len() == 1 {
            return Ok(Some(p));
        }
    }
    Ok(None)
}

/// Irreducible factors (monic, over Q) of a square-free `f`.
pub fn factor_square_free(f: &Poly) -> Result<Vec<Poly>> {
    let ints = primitive_integer_form(f);
    if ints.len() <= 2 {
        return Ok(vec![f.monic()]);
    }
    let primes = candidate_primes(&ints, 5);
    let mut best: Option<(u64, Vec<Vec<u64>>)> = None;
    for p in primes {
        let facs = modular_factors(&ints, p)?;
        if best.as_ref().is_none_or(|(_, b)| facs.len() < b.len()) {
            best = Some((p, facs));
        }
    }
    let (p, facs) = best.expect("a good prime below 10000");
    if facs.len() == 1 {
        return Ok(vec![f.monic()]);
    }
    let n = ints.len() - 1;
    let norm2: BigInt = ints.iter().map(|c| c * c).sum();
    let bound = BigInt::from(2).pow(n as u32 + 1) * (norm2.sqrt() + 1) * ints.last().unwrap().abs();
    let pb = BigInt::from(p);
    let mut k = 1u32;
    let mut m = pb.clone();
    while m <= bound {
        m *= &pb;
        k += 1;
    }
    let mut lifted = hensel_lift(&ints, &facs, p, k);
    let mut remaining = ints;
    let mut found: Vec<IntPoly> = Vec::new();
    let mut size = 1;
    while 2 * size <= lifted.len() {
        let mut hit = None;
        for subset in subsets(lifted.len(), size) {
            let lc = remaining.last().unwrap().clone();
            let mut cand = vec![lc];
            for &i in &subset {
                cand = reduce_mod(&mul_int(&cand, &lifted[i]), &m);
            }
            let mut cand: IntPoly = cand.iter().map(|c| sym_mod(c, &m)).collect();
            trim(&mut cand);
            let cand = primitive_part(&cand);
            if let Some(q) = div_exact_int(&remaining, &cand) {
                hit = Some((subset, cand, q));
                break;
            }
        }
        match hit {
            Some((subset, cand, q)) => {
                found.push(cand);
                remaining = q;
                for &i in subset.iter().rev() {
                    lifted.remove(i);
                }
            }
            None => size += 1,
        }
    }
    if remaining.len() > 1 {
        found.push(primitive_part(&remaining));
    }
    let mut out: Vec<Poly> = found.iter().map(|g| to_rational_poly(g).monic()).collect();
    out.sort_by(|a, b| (a.degree(), a).cmp(&(b.degree(), b)));
    Ok(out)
}

/// Index subsets of `{0..n}` of the given size in lexicographic order.
fn subsets(n: usize, size: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (0..size).collect();
    if size > n {
        return out;
    }
    loop {
        out.push(cur.clone());
        let mut i = size;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if cur[i] < n - size + i {
                cur[i] += 1;
                for j in i + 1..size {
                    cur[j] = cur[j - 1] + 1;
                }
                break;
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(c: &[i64]) -> Poly {
        Poly::from_i64(&Domain::Rational, c)
    }

    #[test]
    fn divisors() {
        let d: Vec<i64> = integer_divisors(&BigInt::from(-12)).iter().map(|x| x.to_i64().unwrap()).collect();
        assert_eq!(d, vec![1, 2, 3, 4, 6, 12]);
    }

    #[test]
    fn roots_in_order() {
        // (x-2)(x-1)(2x+1)
        let f = q(&[-2, 1]).mul(&q(&[-1, 1])).mul(&q(&[1, 2]));
        let r = rational_roots(&f);
        assert_eq!(
            r,
            vec![
                Rational::new(BigInt::from(-1), BigInt::from(2)),
                Rational::from_integer(BigInt::from(1)),
                Rational::from_integer(BigInt::from(2))
            ]
        );
        assert!(rational_roots(&q(&[1, 0, 1])).is_empty());
    }

    #[test]
    fn zassenhaus_swinnerton_dyer_like() {
        // x^4 + 1 is irreducible over Q but reducible mod every prime.
        let f = q(&[1, 0, 0, 0, 1]);
        assert_eq!(factor_square_free(&f).unwrap(), vec![f.clone()]);
        assert_eq!(mod_p_certificate(&f).unwrap(), None);
        // (x^2 - 2)(x^2 + x + 1)(x^3 - 3x + 1)
        let parts = [q(&[-2, 0, 1]), q(&[1, 1, 1]), q(&[1, -3, 0, 1])];
        let f = parts.iter().fold(q(&[1]), |a, b| a.mul(b));
        let fac = factor_square_free(&f).unwrap();
        assert_eq!(fac.len(), 3);
        let prod = fac.iter().fold(q(&[1]), |a, b| a.mul(b));
        assert_eq!(prod, f);
    }

    #[test]
    fn non_monic_factors() {
        // (3x^2 + 1)(2x^3 - x + 5)
        let f = q(&[1, 0, 3]).mul(&q(&[5, -1, 0, 2]));
        let fac = factor_square_free(&f).unwrap();
        assert_eq!(fac, vec![q(&[1, 0, 3]).monic(), q(&[5, -1, 0, 2]).monic()]);
    }

    #[test]
    fn subset_enumeration() {
        assert_eq!(subsets(4, 2).len(), 6);
        assert_eq!(subsets(3, 1), vec![vec![0], vec![1], vec![2]]);
    }
}
