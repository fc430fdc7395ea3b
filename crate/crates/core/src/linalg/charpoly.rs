use alloc::vec::Vec;

use super::{vector, Matrix, Vector};
use crate::error::{Error, Result};
use crate::scalars::{Poly, Scalar};

/// Characteristic polynomial by Berkowitz's division-free recurrence.
pub fn char_poly(a: &Matrix) -> Result<Poly> {
    let d = a.domain().clone();
    if !d.is_field() {
        return Err(Error::NotAField(d.descriptor()));
    }
    if !a.is_square() {
        return Err(Error::DimensionMismatch("characteristic polynomial of a non-square matrix".into()));
    }
    let n = a.rows();
    if n == 0 {
        return Ok(Poly::one(&d));
    }
    // descending coefficients of det(xI - A[k.., k..])
    let mut cur: Vec<Scalar> = alloc::vec![d.one(), d.neg(a.get(n - 1, n - 1))];
    for k in (0..n - 1).rev() {
        let m = n - k - 1;
        let mut t = Vec::with_capacity(m + 2);
        t.push(d.one());
        t.push(d.neg(a.get(k, k)));
        let mut w: Vector = (k + 1..n).map(|i| a.get(i, k).clone()).collect();
        for step in 0..m {
            let rw = (k + 1..n)
                .zip(&w)
                .fold(d.zero(), |acc, (j, x)| d.add(&acc, &d.mul(a.get(k, j), x)));
            t.push(d.neg(&rw));
            if step + 1 < m {
                w = (k + 1..n)
                    .map(|i| (k + 1..n).zip(&w).fold(d.zero(), |acc, (j, x)| d.add(&acc, &d.mul(a.get(i, j), x))))
                    .collect();
            }
        }
        let next = (0..m + 2)
            .map(|i| {
                (0..=i.min(m))
                    .fold(d.zero(), |acc, j| d.add(&acc, &d.mul(&t[i - j], &cur[j])))
            })
            .collect::<Vec<_>>();
        cur = next;
    }
    cur.reverse();
    Ok(Poly::new(&d, cur))
}

/// Least-degree monic `f` over the center with `f(A) = 0`: the first linear
/// dependence among `I, A, A², …` over the center.
pub fn min_poly(a: &Matrix) -> Poly {
    assert!(a.is_square(), "minimal polynomial of a non-square matrix");
    let f = a.domain().center();
    let n = a.rows();
    // echelon rows paired with the power combination that produced them
    let mut rows: Vec<(Vector, Vector, usize)> = Vec::new();
    let mut power = Matrix::identity(a.domain(), n);
    for k in 0.. {
        let mut v = power.center_flat();
        let mut combo = vector::unit(&f, k + 1, k);
        for (row, rc, p) in &rows {
            let c = v[*p].clone();
            if f.is_zero(&c) {
                continue;
            }
            v = vector::sub(&f, &v, &vector::scale(&f, row, &c));
            for (x, y) in combo.iter_mut().zip(rc) {
                *x = f.sub(x, &f.mul(y, &c));
            }
        }
        match v.iter().position(|x| !f.is_zero(x)) {
            None => return Poly::new(&f, combo),
            Some(p) => {
                let inv = f.inv(&v[p]).unwrap();
                rows.push((vector::scale(&f, &v, &inv), vector::scale(&f, &combo, &inv), p));
            }
        }
        power = power.mul(a);
    }
    unreachable!()
}

/// Companion matrix: ones on the subdiagonal, `-f_i` down the last column.
pub fn companion(f: &Poly) -> Result<Matrix> {
    let d = f.domain();
    let deg = match f.degree() {
        Some(k) if k >= 1 && f.is_monic() => k,
        _ => return Err(Error::InvalidInput(alloc::format!("companion of {f} needs a monic polynomial of degree >= 1"))),
    };
    let mut c = Matrix::zero(d, deg, deg);
    for i in 0..deg {
        if i + 1 < deg {
            c.set(i + 1, i, d.one());
        }
        c.set(i, deg - 1, d.neg(&f.coeff(i)));
    }
    Ok(c)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::Domain;
    use crate::Quaternion;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    /// Laplace expansion of det(xI - A) over polynomial entries.
    fn det_oracle(a: &Matrix) -> Poly {
        let d = a.domain();
        let n = a.rows();
        let entries: Vec<Vec<Poly>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        let c = Poly::constant(d, d.neg(a.get(i, j)));
                        if i == j { c.add(&Poly::x(d)) } else { c }
                    })
                    .collect()
            })
            .collect();
        fn det(m: &[Vec<Poly>], d: &Domain) -> Poly {
            if m.is_empty() {
                return Poly::one(d);
            }
            let mut acc = Poly::zero(d);
            for j in 0..m.len() {
                let minor: Vec<Vec<Poly>> = m[1..]
                    .iter()
                    .map(|row| row.iter().enumerate().filter(|(c, _)| *c != j).map(|(_, p)| p.clone()).collect())
                    .collect();
                let term = m[0][j].mul(&det(&minor, d));
                acc = if j % 2 == 0 { acc.add(&term) } else { acc.sub(&term) };
            }
            acc
        }
        det(&entries, d)
    }

    #[test]
    fn char_poly_examples() {
        let q = Domain::Rational;
        assert_eq!(char_poly(&Matrix::identity(&q, 2)).unwrap(), Poly::from_i64(&q, &[1, -2, 1]));
        assert_eq!(char_poly(&Matrix::unit(&q, 2, 0, 1)).unwrap(), Poly::from_i64(&q, &[0, 0, 1]));
        for coeffs in [&[5, -1, 3, 1][..], &[1, 0, 0, 2, 1], &[-7, 1]] {
            let f = Poly::from_i64(&q, coeffs);
            assert_eq!(char_poly(&companion(&f).unwrap()).unwrap(), f);
        }
        assert!(char_poly(&Matrix::identity(&Domain::Quaternion, 2)).is_err());
    }

    #[test]
    fn berkowitz_matches_laplace() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for d in [Domain::Rational, Domain::Prime(2), Domain::Prime(5), Domain::ext(3, &[1, 0, 1]).unwrap()] {
            for n in 1..=4 {
                let a = Matrix::random(&d, n, n, &mut rng);
                let chi = char_poly(&a).unwrap();
                assert_eq!(chi, det_oracle(&a));
                assert!(a.eval_poly(&chi).is_zero());
            }
        }
    }

    #[test]
    fn min_poly_examples() {
        let q = Domain::Rational;
        let c = companion(&Poly::from_i64(&q, &[1, 0, 1])).unwrap();
        assert_eq!(c, Matrix::from_i64(&q, 2, 2, &[0, -1, 1, 0]));
        assert_eq!(min_poly(&c), Poly::from_i64(&q, &[1, 0, 1]));
        assert_eq!(min_poly(&Matrix::scalar(&q, 3, &q.from_i64(4))), Poly::from_i64(&q, &[-4, 1]));
        let h = Domain::Quaternion;
        let i = Matrix::diag(&h, &[Scalar::Quat(Quaternion::i())]);
        assert_eq!(min_poly(&i), Poly::from_i64(&q, &[1, 0, 1]));
        assert_eq!(min_poly(&Matrix::zero(&q, 2, 2)), Poly::x(&q));
        let f2 = Domain::Prime(2);
        assert_eq!(
            companion(&Poly::from_i64(&f2, &[1, 1, 1])).unwrap(),
            Matrix::from_i64(&f2, 2, 2, &[0, 1, 1, 1])
        );
        assert_eq!(companion(&Poly::from_i64(&q, &[-3, 1])).unwrap(), Matrix::from_i64(&q, 1, 1, &[3]));
        assert!(companion(&Poly::from_i64(&q, &[1, 2])).is_err());
    }

    #[test]
    fn min_poly_divides_char_poly() {
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        let d = Domain::Prime(3);
        for _ in 0..20 {
            let a = Matrix::random(&d, 4, 4, &mut rng);
            assert!(min_poly(&a).divides(&char_poly(&a).unwrap()).unwrap());
        }
    }
}
