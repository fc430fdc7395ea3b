//! Independent oracles over GF(p) with plain integer arithmetic, plus
//! random generator families. Shared by the integration and acceptance
//! tests.
#![allow(dead_code)]

use std::collections::{BTreeSet, VecDeque};

use matalg_core::{Domain, Matrix, Poly, Scalar};
use rand::Rng;

pub type Mat = Vec<Vec<u64>>;

pub fn to_mod(m: &Matrix) -> Mat {
    m.to_rows()
        .iter()
        .map(|r| {
            r.iter()
                .map(|s| match s {
                    Scalar::Mod(v) => *v,
                    other => panic!("not a prime field entry: {other}"),
                })
                .collect()
        })
        .collect()
}

fn apply(m: &Mat, v: &[u64], p: u64) -> Vec<u64> {
    m.iter().map(|row| row.iter().zip(v).map(|(a, b)| a * b).sum::<u64>() % p).collect()
}

fn all_vectors(n: usize, p: u64) -> Vec<Vec<u64>> {
    let total = p.pow(n as u32);
    (0..total)
        .map(|mut x| {
            (0..n)
                .map(|_| {
                    let d = x % p;
                    x /= p;
                    d
                })
                .collect()
        })
        .collect()
}

/// The set of vectors of the smallest subspace containing `v` and invariant
/// under `gens`, grown by breadth-first closure under addition and the
/// generators (scalar multiples over GF(p) are repeated sums).
pub fn cyclic_set(gens: &[Mat], v: &[u64], p: u64) -> BTreeSet<Vec<u64>> {
    let n = v.len();
    let mut set: BTreeSet<Vec<u64>> = BTreeSet::new();
    set.insert(vec![0; n]);
    let mut queue = VecDeque::new();
    if set.insert(v.to_vec()) {
        queue.push_back(v.to_vec());
    }
    while let Some(x) = queue.pop_front() {
        let mut next: Vec<Vec<u64>> = gens.iter().map(|g| apply(g, &x, p)).collect();
        let members: Vec<Vec<u64>> = set.iter().cloned().collect();
        next.extend(members.iter().map(|y| x.iter().zip(y).map(|(a, b)| (a + b) % p).collect()));
        for y in next {
            if set.insert(y.clone()) {
                queue.push_back(y);
            }
        }
    }
    set
}

/// Exhaustive decision: a proper nonzero invariant subspace exists iff some
/// nonzero vector generates a proper one. A family of zero matrices is
/// never irreducible.
pub fn brute_irreducible(gens: &[Matrix], n: usize, p: u64) -> bool {
    let mats: Vec<Mat> = gens.iter().map(to_mod).collect();
    if mats.iter().all(|m| m.iter().flatten().all(|&x| x == 0)) {
        return false;
    }
    let total = p.pow(n as u32) as usize;
    all_vectors(n, p).iter().skip(1).all(|v| cyclic_set(&mats, v, p).len() == total)
}

/// Every invariant subspace, as vector sets: sums of cyclic subspaces.
pub fn invariant_subspaces(gens: &[Matrix], n: usize, p: u64) -> BTreeSet<BTreeSet<Vec<u64>>> {
    let mats: Vec<Mat> = gens.iter().map(to_mod).collect();
    let cyclic: BTreeSet<BTreeSet<Vec<u64>>> = all_vectors(n, p).iter().map(|v| cyclic_set(&mats, v, p)).collect();
    let mut all = cyclic.clone();
    loop {
        let mut grown = all.clone();
        for a in &all {
            for c in &cyclic {
                let sum: BTreeSet<Vec<u64>> = a
                    .iter()
                    .flat_map(|x| c.iter().map(move |y| x.iter().zip(y).map(|(s, t)| (s + t) % p).collect()))
                    .collect();
                grown.insert(sum);
            }
        }
        if grown.len() == all.len() {
            return all;
        }
        all = grown;
    }
}

/// The vectors of a library subspace, enumerated over GF(p).
pub fn subspace_set(s: &matalg_core::Subspace, p: u64) -> BTreeSet<Vec<u64>> {
    let n = s.ambient();
    let basis: Vec<Vec<u64>> = s
        .basis()
        .iter()
        .map(|v| v.iter().map(|x| if let Scalar::Mod(c) = x { *c } else { panic!() }).collect())
        .collect();
    all_vectors(basis.len(), p)
        .into_iter()
        .map(|coef| {
            let mut out = vec![0; n];
            for (c, b) in coef.iter().zip(&basis) {
                for (o, x) in out.iter_mut().zip(b) {
                    *o = (*o + c * x) % p;
                }
            }
            out
        })
        .collect()
}

/// Determinant by cofactor expansion of a matrix of polynomials.
pub fn laplace_det(d: &Domain, m: &[Vec<Poly>]) -> Poly {
    let n = m.len();
    if n == 0 {
        return Poly::one(d);
    }
    let mut acc = Poly::zero(d);
    for j in 0..n {
        let minor: Vec<Vec<Poly>> =
            m[1..].iter().map(|row| row.iter().enumerate().filter(|(c, _)| *c != j).map(|(_, x)| x.clone()).collect()).collect();
        let term = m[0][j].mul(&laplace_det(d, &minor));
        acc = if j % 2 == 0 { acc.add(&term) } else { acc.sub(&term) };
    }
    acc
}

/// `det(xI - A)` by cofactor expansion.
pub fn laplace_char_poly(a: &Matrix) -> Poly {
    let d = a.domain();
    let n = a.rows();
    let m: Vec<Vec<Poly>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let c = Poly::constant(d, d.neg(a.get(i, j)));
                    if i == j {
                        c.add(&Poly::x(d))
                    } else {
                        c
                    }
                })
                .collect()
        })
        .collect();
    laplace_det(d, &m)
}

/// Trial division by every monic polynomial of degree up to half.
pub fn brute_poly_irreducible(f: &Poly, p: u64) -> bool {
    let d = Domain::Prime(p);
    let deg = f.degree().unwrap();
    if deg == 0 {
        return false;
    }
    for k in 1..=deg / 2 {
        for code in 0..p.pow(k as u32) {
            let mut coeffs: Vec<Scalar> = (0..k).map(|i| Scalar::Mod((code / p.pow(i as u32)) % p)).collect();
            coeffs.push(d.one());
            let g = Poly::new(&d, coeffs);
            if f.rem(&g).unwrap().is_zero() {
                return false;
            }
        }
    }
    true
}

pub fn strictly_upper<R: Rng>(d: &Domain, n: usize, rng: &mut R) -> Matrix {
    let mut m = Matrix::zero(d, n, n);
    for i in 0..n {
        for j in i + 1..n {
            m.set(i, j, d.random(rng));
        }
    }
    m
}

/// A random generator of one of three kinds: uniform, a conjugated
/// strictly upper triangular matrix, or a conjugated 0/1 diagonal.
pub fn mixed_generator<R: Rng>(d: &Domain, n: usize, rng: &mut R) -> Matrix {
    match rng.gen_range(0..3) {
        0 => Matrix::random(d, n, n, rng),
        1 => {
            let p = Matrix::random_invertible(d, n, rng);
            p.inverse().unwrap().mul(&strictly_upper(d, n, rng)).mul(&p)
        }
        _ => {
            let p = Matrix::random_invertible(d, n, rng);
            let diag: Vec<Scalar> = (0..n).map(|_| if rng.gen_bool(0.5) { d.one() } else { d.zero() }).collect();
            p.inverse().unwrap().mul(&Matrix::diag(d, &diag)).mul(&p)
        }
    }
}
