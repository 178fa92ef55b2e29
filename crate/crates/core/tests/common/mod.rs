#![allow(dead_code)]

use std::sync::Arc;

use prufer_core::algebra::Algebra;
use prufer_core::rep::{direct_sum, hom_space, ModHom, Rep};
use prufer_core::{Field, Mat};
use rand_chacha::ChaCha8Rng;
use rand_core::RngCore;

pub fn rng(seed: u64) -> ChaCha8Rng {
    use rand_core::SeedableRng;
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn below(rng: &mut ChaCha8Rng, n: u64) -> u64 {
    rng.next_u64() % n
}

pub fn random_dims(rng: &mut ChaCha8Rng, vertices: usize, max: u64) -> Vec<usize> {
    loop {
        let dims: Vec<usize> = (0..vertices).map(|_| below(rng, max + 1) as usize).collect();
        if dims.iter().any(|&d| d > 0) {
            return dims;
        }
    }
}

/// A random representation of a quiver without relations.
pub fn random_rep<F: Field>(alg: &Arc<Algebra<F>>, dims: &[usize], rng: &mut ChaCha8Rng) -> Rep<F> {
    let k = alg.field().clone();
    let action = alg
        .quiver()
        .arrows()
        .iter()
        .map(|a| Mat::from_fn(&k, dims[a.target], dims[a.source], |_, _| k.random(rng, 2)))
        .collect();
    Rep::new(alg.clone(), dims.to_vec(), action).expect("no relations to violate")
}

pub fn random_hom<F: Field>(m: &Rep<F>, n: &Rep<F>, rng: &mut ChaCha8Rng) -> ModHom<F> {
    let hs = hom_space(m, n).expect("same algebra");
    let k = m.field();
    let c: Vec<F::Elem> = (0..hs.dim()).map(|_| k.random(rng, 2)).collect();
    hs.combination(&c)
}

/// A random nilpotent endomorphism of `A ⊕ B` factoring as `A -> B`.
pub fn strictly_triangular<F: Field>(a: &Rep<F>, b: &Rep<F>, rng: &mut ChaCha8Rng) -> (Rep<F>, ModHom<F>) {
    let ds = direct_sum(a.algebra(), &[a.clone(), b.clone()]).expect("same algebra");
    let h = random_hom(a, b, rng);
    let phi = ds.injections[1].after(&h).after(&ds.projections[0]);
    (ds.sum, phi)
}

/// `A^n` with the nilpotent shift `(a_1, ..., a_n) ↦ (0, a_1, ..., a_{n-1})`.
pub fn shift<F: Field>(a: &Rep<F>, n: usize) -> (Rep<F>, ModHom<F>) {
    let ds = direct_sum(a.algebra(), &vec![a.clone(); n]).expect("same algebra");
    let mut phi = ModHom::zero(&ds.sum, &ds.sum);
    for i in 0..n - 1 {
        phi = phi.add(&ds.injections[i + 1].after(&ds.projections[i]));
    }
    (ds.sum, phi)
}
