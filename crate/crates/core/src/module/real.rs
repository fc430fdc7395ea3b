use alloc::vec::Vec;

use crate::linalg::{Matrix, Vector};
use crate::quaternion::Quaternion;
use crate::scalars::{Domain, Scalar};

fn quat(s: &Scalar) -> &Quaternion {
    match s {
        Scalar::Quat(q) => q,
        _ => panic!("expected a quaternion scalar"),
    }
}

fn basis() -> [Quaternion; 4] {
    [Quaternion::one(), Quaternion::i(), Quaternion::j(), Quaternion::k()]
}

fn coords(q: &Quaternion) -> Vec<Scalar> {
    q.coords().into_iter().map(|c| Scalar::Rat(c.clone())).collect()
}

/// `ℍ^n → ℚ^{4n}`, four rational coordinates per entry.
pub fn realify_vector(v: &[Scalar]) -> Vector {
    v.iter().flat_map(|s| coords(quat(s))).collect()
}

pub fn unrealify_vector(v: &[Scalar]) -> Vector {
    v.chunks(4).map(|c| Domain::Quaternion.from_center_coords(c)).collect()
}

/// The rational `4n × 4n` matrix of `x ↦ A·x` on `ℍ^n`.
pub fn realify(a: &Matrix) -> Matrix {
    let q = Domain::Rational;
    let (r, c) = (a.rows(), a.cols());
    let mut m = Matrix::zero(&q, 4 * r, 4 * c);
    for s in 0..r {
        for t in 0..c {
            let x = quat(a.get(s, t));
            for (col, e) in basis().iter().enumerate() {
                for (row, v) in coords(&x.mul(e)).into_iter().enumerate() {
                    m.set(4 * s + row, 4 * t + col, v);
                }
            }
        }
    }
    m
}

/// The rational matrix of `x ↦ x·q` on `ℍ^n`.
pub fn right_multiplication(n: usize, q: &Quaternion) -> Matrix {
    let d = Domain::Rational;
    let mut m = Matrix::zero(&d, 4 * n, 4 * n);
    for s in 0..n {
        for (col, e) in basis().iter().enumerate() {
            for (row, v) in coords(&e.mul(q)).into_iter().enumerate() {
                m.set(4 * s + row, 4 * s + col, v);
            }
        }
    }
    m
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn realification_is_a_homomorphism() {
        let h = Domain::Quaternion;
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let a = Matrix::random(&h, 2, 2, &mut rng);
        let b = Matrix::random(&h, 2, 2, &mut rng);
        assert_eq!(realify(&a.mul(&b)), realify(&a).mul(&realify(&b)));
        let x: Vector = vec![h.random(&mut rng), h.random(&mut rng)];
        assert_eq!(realify_vector(&a.mul_vec(&x)), realify(&a).mul_vec(&realify_vector(&x)));
        assert_eq!(unrealify_vector(&realify_vector(&x)), x);
        let j = Quaternion::j();
        let xj: Vector = x.iter().map(|s| Scalar::Quat(quat(s).mul(&j))).collect();
        assert_eq!(right_multiplication(2, &j).mul_vec(&realify_vector(&x)), realify_vector(&xj));
        assert!(realify(&a).commutes_with(&right_multiplication(2, &Quaternion::i())));
    }
}
