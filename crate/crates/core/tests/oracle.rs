mod support;

use matalg_core::algebra::{semigroup_close, AlgebraBasis, SEMIGROUP_CAP};
use matalg_core::linalg::char_poly;
use matalg_core::module::{commutant, composition_chain, hyperinvariant_check, is_irreducible};
use matalg_core::theorems::counterexample_algebra;
use matalg_core::{Domain, Matrix};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use support::*;

#[test]
fn irreducibility_matches_enumeration() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for trial in 0..80 {
        let p = [2u64, 3][trial % 2];
        let d = Domain::Prime(p);
        let n = rng.gen_range(1..=3);
        let gens: Vec<Matrix> = (0..rng.gen_range(1..=3)).map(|_| mixed_generator(&d, n, &mut rng)).collect();
        let verdict = is_irreducible(&d, n, &gens, trial as u64).unwrap();
        assert_eq!(verdict.is_irreducible(), brute_irreducible(&gens, n, p), "trial {trial}: {gens:?}");
        if let Some(w) = verdict.witness() {
            if n > 1 {
                let all = invariant_subspaces(&gens, n, p);
                assert!(all.contains(&subspace_set(w, p)));
                assert!(w.is_proper_nonzero());
            }
        }
    }
}

#[test]
fn chain_members_are_invariant() {
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    for trial in 0..30 {
        let d = Domain::Prime(2);
        let n = rng.gen_range(2..=4);
        let gens: Vec<Matrix> = (0..2).map(|_| mixed_generator(&d, n, &mut rng)).collect();
        let chain = composition_chain(&d, n, &gens, trial).unwrap();
        let all = invariant_subspaces(&gens, n, 2);
        for m in chain.members() {
            assert!(all.contains(&subspace_set(m, 2)));
        }
    }
}

#[test]
fn char_poly_matches_cofactor_expansion() {
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    for d in [Domain::Prime(5), Domain::Rational, Domain::ext(2, &[1, 1, 1]).unwrap()] {
        for n in 1..=4 {
            let a = Matrix::random(&d, n, n, &mut rng);
            assert_eq!(char_poly(&a).unwrap(), laplace_char_poly(&a));
        }
    }
}

#[test]
fn counterexamples_survive_enumeration() {
    for (p, n, k) in [(2u64, 2, 2), (2, 4, 2), (2, 4, 4), (3, 2, 2), (3, 3, 3)] {
        let cx = counterexample_algebra(&Domain::Prime(p), n, k).unwrap();
        assert!(brute_irreducible(cx.algebra.basis(), n, p));
        assert!(cx.dim() < n * n);
    }
}

#[test]
fn hyperinvariant_matches_enumeration() {
    let mut rng = ChaCha8Rng::seed_from_u64(14);
    for trial in 0..40 {
        let d = Domain::Prime(2);
        let n = rng.gen_range(2..=4);
        let a = Matrix::random(&d, n, n, &mut rng);
        let h = hyperinvariant_check(&a, trial).unwrap();
        let mut family = commutant(&d, n, std::slice::from_ref(&a)).unwrap().basis().to_vec();
        family.push(a.clone());
        assert_eq!(h.has_nontrivial, !brute_irreducible(&family, n, 2), "{a:?}");
        assert_eq!(h.min_poly_irreducible, brute_poly_irreducible(&h.min_poly, 2));
    }
}

#[test]
fn semigroup_of_units_is_closed() {
    let d = Domain::Prime(3);
    let gens: Vec<Matrix> = (0..4).map(|t| Matrix::unit(&d, 2, t / 2, t % 2)).collect();
    let s = semigroup_close(&d, 2, &gens, SEMIGROUP_CAP).unwrap();
    assert!(s.is_closed());
    assert_eq!(s.len(), 5);
    let a = AlgebraBasis::close(&d, 2, s.elements(), false).unwrap();
    assert_eq!(a.dim(), 4);
}
