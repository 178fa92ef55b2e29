//! Small algebras and modules used as worked examples: the Kronecker quiver,
//! the three-arrow Kronecker quiver, `D4` with subspace orientation, a loop
//! with `β³ = 0`, a loop with `x² = 0`, and a three-vertex algebra with
//! commutativity-type relations.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::sync::Arc;
use alloc::vec::Vec;

use crate::algebra::{path_basis, Algebra, AlgebraPresentation, Quiver};
use crate::error::Result;
use crate::field::Field;
use crate::linalg::Mat;
use crate::rep::{ModHom, Rep};
use crate::squares::ShortExact;

/// A representation from integer matrices given in arrow order; the shape of
/// each matrix follows from `dims`.
pub fn rep_from_i64<F: Field>(alg: &Arc<Algebra<F>>, dims: &[usize], mats: &[&[i64]]) -> Result<Rep<F>> {
    let k = alg.field();
    let action = alg
        .quiver()
        .arrows()
        .iter()
        .zip(mats)
        .map(|(a, m)| Mat::from_i64(k, dims[a.target], dims[a.source], m))
        .collect();
    Rep::new(alg.clone(), dims.to_vec(), action)
}

/// A homomorphism from integer blocks given in vertex order.
pub fn hom_from_i64<F: Field>(source: &Rep<F>, target: &Rep<F>, blocks: &[&[i64]]) -> Result<ModHom<F>> {
    let k = source.field();
    let mats = (0..source.dims().len())
        .map(|v| Mat::from_i64(k, target.dim(v), source.dim(v), blocks[v]))
        .collect();
    ModHom::new(source, target, mats)
}

fn build<F: Field>(name: &str, vertices: &[&str], arrows: &[(&str, &str, &str)], k: F) -> Result<AlgebraPresentation<F>> {
    Ok(AlgebraPresentation::new(name, Quiver::from_names(vertices, arrows)?, k))
}

/// `alpha, beta: a -> b`.
pub fn kronecker<F: Field>(k: F) -> Result<Arc<Algebra<F>>> {
    path_basis(build("kronecker", &["a", "b"], &[("alpha", "a", "b"), ("beta", "a", "b")], k)?)
}

/// `P(b) = (0,1)` and `P(a) = (1,2)` with the `b`-basis of `P(a)` ordered
/// `alpha, beta`.
pub fn kronecker_projectives<F: Field>(alg: &Arc<Algebra<F>>) -> Result<(Rep<F>, Rep<F>)> {
    let pb = rep_from_i64(alg, &[0, 1], &[&[], &[]])?;
    let pa = rep_from_i64(alg, &[1, 2], &[&[1, 0], &[0, 1]])?;
    Ok((pb, pa))
}

/// The two arrows as maps `P(b) -> P(a)`: `w0(e_b) = alpha`, `v0(e_b) = beta`.
pub fn kronecker_seed<F: Field>(alg: &Arc<Algebra<F>>) -> Result<(ModHom<F>, ModHom<F>)> {
    let (pb, pa) = kronecker_projectives(alg)?;
    let w0 = hom_from_i64(&pb, &pa, &[&[], &[1, 0]])?;
    let v0 = hom_from_i64(&pb, &pa, &[&[], &[0, 1]])?;
    Ok((w0, v0))
}

/// `w0` as in [`kronecker_seed`] and `v0 = c * w0`.
pub fn kronecker_dependent_seed<F: Field>(alg: &Arc<Algebra<F>>, c: i64) -> Result<(ModHom<F>, ModHom<F>)> {
    let (pb, pa) = kronecker_projectives(alg)?;
    let w0 = hom_from_i64(&pb, &pa, &[&[], &[1, 0]])?;
    let v0 = hom_from_i64(&pb, &pa, &[&[], &[c, 0]])?;
    Ok((w0, v0))
}

fn identity_entries(n: usize) -> Vec<i64> {
    (0..n * n).map(|i| i64::from(i / n == i % n)).collect()
}

fn jordan_entries(n: usize, lambda: i64) -> Vec<i64> {
    (0..n * n)
        .map(|i| {
            let (r, c) = (i / n, i % n);
            if r == c {
                lambda
            } else {
                i64::from(r == c + 1)
            }
        })
        .collect()
}

/// The indecomposable Kronecker modules of total dimension at most 6 that
/// are defined over the prime field, plus the regular module at the point
/// `beta = [[0,-1],[1,0]]` (a degree-two point over `Q`).
pub fn kronecker_indecomposables<F: Field>(alg: &Arc<Algebra<F>>) -> Result<Vec<(String, Rep<F>)>> {
    let mut out = Vec::new();
    for n in 0..3usize {
        // preprojective (n, n+1)
        let a: Vec<i64> = (0..(n + 1) * n).map(|i| i64::from(i / n.max(1) == i % n.max(1) && i / n.max(1) < n)).collect();
        let b: Vec<i64> = (0..(n + 1) * n).map(|i| i64::from(n > 0 && i / n == i % n + 1)).collect();
        out.push((format!("preprojective ({n},{})", n + 1), rep_from_i64(alg, &[n, n + 1], &[&a, &b])?));
        // preinjective (n+1, n)
        let a: Vec<i64> = (0..n * (n + 1)).map(|i| i64::from(i / (n + 1) == i % (n + 1))).collect();
        let b: Vec<i64> = (0..n * (n + 1)).map(|i| i64::from(i % (n + 1) == i / (n + 1) + 1)).collect();
        out.push((format!("preinjective ({},{n})", n + 1), rep_from_i64(alg, &[n + 1, n], &[&a, &b])?));
    }
    for n in 1..=3usize {
        for lambda in [0, 1] {
            let rep = rep_from_i64(alg, &[n, n], &[&identity_entries(n), &jordan_entries(n, lambda)])?;
            out.push((format!("regular ({n},{n}) at {lambda}"), rep));
        }
        let rep = rep_from_i64(alg, &[n, n], &[&jordan_entries(n, 0), &identity_entries(n)])?;
        out.push((format!("regular ({n},{n}) at infinity"), rep));
    }
    out.push(("regular (2,2) at x^2+1".to_string(), rep_from_i64(alg, &[2, 2], &[&[1, 0, 0, 1], &[0, -1, 1, 0]])?));
    Ok(out)
}

/// `alpha, beta, gamma: a -> b`.
pub fn three_kronecker<F: Field>(k: F) -> Result<Arc<Algebra<F>>> {
    path_basis(build(
        "three-kronecker",
        &["a", "b"],
        &[("alpha", "a", "b"), ("beta", "a", "b"), ("gamma", "a", "b")],
        k,
    )?)
}

/// The projective presentation `0 -> ΩH -> PH -> H -> 0` of the
/// two-dimensional module `H` on which only `alpha` acts non-trivially,
/// together with the two maps `f, g: ΩH -> PH` whose ladders agree at
/// stage 2 and differ at stage 3.
#[derive(Clone, Debug)]
pub struct ThreeKronecker<F: Field> {
    pub algebra: Arc<Algebra<F>>,
    /// `P(a)` with `b`-basis `alpha e, beta e, gamma e`.
    pub ph: Rep<F>,
    /// Spanned by `beta e` and `gamma e`.
    pub omega: Rep<F>,
    pub h: Rep<F>,
    pub w: ModHom<F>,
    pub q: ModHom<F>,
    /// `beta e ↦ alpha e`, `gamma e ↦ 0`.
    pub f: ModHom<F>,
    /// `beta e ↦ alpha e`, `gamma e ↦ beta e`.
    pub g: ModHom<F>,
}

pub fn three_kronecker_example<F: Field>(k: F) -> Result<ThreeKronecker<F>> {
    let algebra = three_kronecker(k)?;
    let ph = rep_from_i64(&algebra, &[1, 3], &[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]])?;
    let omega = rep_from_i64(&algebra, &[0, 2], &[&[], &[], &[]])?;
    let h = rep_from_i64(&algebra, &[1, 1], &[&[1], &[0], &[0]])?;
    let w = hom_from_i64(&omega, &ph, &[&[], &[0, 0, 1, 0, 0, 1]])?;
    let q = hom_from_i64(&ph, &h, &[&[1], &[1, 0, 0]])?;
    let f = hom_from_i64(&omega, &ph, &[&[], &[1, 0, 0, 0, 0, 0]])?;
    let g = hom_from_i64(&omega, &ph, &[&[], &[1, 0, 0, 1, 0, 0]])?;
    Ok(ThreeKronecker { algebra, ph, omega, h, w, q, f, g })
}

/// `D4` with subspace orientation: `beta: b -> a`, `gamma: c -> a`,
/// `delta: d -> a`.
pub fn d4<F: Field>(k: F) -> Result<Arc<Algebra<F>>> {
    path_basis(build(
        "d4",
        &["a", "b", "c", "d"],
        &[("beta", "b", "a"), ("gamma", "c", "a"), ("delta", "d", "a")],
        k,
    )?)
}

/// The `D4` degeneration data: `U0 = S(a)`, `U1 = (2;1,1,1)` and the three
/// monomorphisms `mu[i]: U0 -> U1` through `P(b)`, `P(c)`, `P(d)`, normalized
/// so that `mu[2] = -mu[0] - mu[1]`.
#[derive(Clone, Debug)]
pub struct D4Example<F: Field> {
    pub algebra: Arc<Algebra<F>>,
    pub u0: Rep<F>,
    pub u1: Rep<F>,
    pub mu: [ModHom<F>; 3],
    /// `(1;1,1,1)`.
    pub w: Rep<F>,
    /// `(1;0,1,1) ⊕ (0;1,0,0)`.
    pub w_prime: Rep<F>,
    /// `(1;0,1,1)`, `(1;1,0,1)`, `(1;1,1,0)`.
    pub u2_summands: [Rep<F>; 3],
}

pub fn d4_example<F: Field>(k: F) -> Result<D4Example<F>> {
    let algebra = d4(k)?;
    let u0 = rep_from_i64(&algebra, &[1, 0, 0, 0], &[&[], &[], &[]])?;
    let u1 = rep_from_i64(&algebra, &[2, 1, 1, 1], &[&[1, 0], &[0, 1], &[-1, -1]])?;
    let mu = [
        hom_from_i64(&u0, &u1, &[&[1, 0], &[], &[], &[]])?,
        hom_from_i64(&u0, &u1, &[&[0, 1], &[], &[], &[]])?,
        hom_from_i64(&u0, &u1, &[&[-1, -1], &[], &[], &[]])?,
    ];
    let w = rep_from_i64(&algebra, &[1, 1, 1, 1], &[&[1], &[1], &[1]])?;
    let w_prime = rep_from_i64(&algebra, &[1, 1, 1, 1], &[&[0], &[1], &[1]])?;
    let u2_summands = [
        rep_from_i64(&algebra, &[1, 0, 1, 1], &[&[], &[1], &[1]])?,
        rep_from_i64(&algebra, &[1, 1, 0, 1], &[&[1], &[], &[1]])?,
        rep_from_i64(&algebra, &[1, 1, 1, 0], &[&[1], &[1], &[]])?,
    ];
    Ok(D4Example { algebra, u0, u1, mu, w, w_prime, u2_summands })
}

impl<F: Field> D4Example<F> {
    /// `w0 = mu[0] + q * mu[1]`; its cokernel is `W` exactly when `q ∉ {0, 1}`.
    pub fn w0(&self, q: i64) -> ModHom<F> {
        let k = self.u0.field();
        self.mu[0].add(&self.mu[1].scale(&k.from_i64(q)))
    }

    /// `v0 = mu[0]`.
    pub fn v0(&self) -> ModHom<F> {
        self.mu[0].clone()
    }
}

/// `alpha: a -> b` and a loop `beta` at `b` with `beta^3 = 0`.
pub fn loop_beta<F: Field>(k: F) -> Result<Arc<Algebra<F>>> {
    path_basis(
        build("loop-beta", &["a", "b"], &[("alpha", "a", "b"), ("beta", "b", "b")], k)?
            .with_relation(&[(1, &["beta", "beta", "beta"])])?,
    )
}

/// The self-extension `0 -> H -> H' -> H -> 0` with `H = (1,2)` uniserial
/// (`alpha` then `beta`) and `H' = (2,4)` obtained by gluing two copies of
/// `H` along a `D5` pattern in the universal cover.
pub fn loop_beta_extension<F: Field>(alg: &Arc<Algebra<F>>) -> Result<ShortExact<F>> {
    let h = rep_from_i64(alg, &[1, 2], &[&[1, 0], &[0, 0, 1, 0]])?;
    // b-basis of H': b0, e1, e2, b2
    let hp = rep_from_i64(
        alg,
        &[2, 4],
        &[&[0, 0, 1, 0, 0, 0, 0, 1], &[0, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0]],
    )?;
    let i = hom_from_i64(&h, &hp, &[&[1, 0], &[0, 1, 1, 0, 0, 0, 0, 0]])?;
    let p = hom_from_i64(&hp, &h, &[&[0, 1], &[0, 0, 0, 1, 0, 0, 1, 0]])?;
    ShortExact::new(i, p)
}

/// One vertex with a loop `x` and `x^2 = 0`.
pub fn loop_square<F: Field>(k: F) -> Result<Arc<Algebra<F>>> {
    path_basis(build("loop-square", &["o"], &[("x", "o", "o")], k)?.with_relation(&[(1, &["x", "x"])])?)
}

/// `alpha, beta: a -> b`, `gamma, delta: b -> c` with `alpha*delta = 0`,
/// `beta*gamma = 0` and `alpha*gamma = beta*delta` (travel order).
pub fn two_step_kronecker<F: Field>(k: F) -> Result<Arc<Algebra<F>>> {
    path_basis(
        build(
            "two-step-kronecker",
            &["a", "b", "c"],
            &[("alpha", "a", "b"), ("beta", "a", "b"), ("gamma", "b", "c"), ("delta", "b", "c")],
            k,
        )?
        .with_relation(&[(1, &["alpha", "delta"])])?
        .with_relation(&[(1, &["beta", "gamma"])])?
        .with_relation(&[(1, &["alpha", "gamma"]), (-1, &["beta", "delta"])])?,
    )
}

/// The length-two module `beta: a -> b`, killed by `alpha`.
pub fn two_step_module<F: Field>(alg: &Arc<Algebra<F>>) -> Result<Rep<F>> {
    rep_from_i64(alg, &[1, 1, 0], &[&[0], &[1], &[], &[]])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Rationals;
    use crate::rep::{cokernel, is_faithful};

    #[test]
    fn fixtures_load() {
        let alg = kronecker(Rationals).unwrap();
        let inds = kronecker_indecomposables(&alg).unwrap();
        assert_eq!(inds.len(), 16);
        assert!(inds.iter().all(|(_, m)| m.total_dim() <= 6 && !m.is_zero()));
        let tk = three_kronecker_example(Rationals).unwrap();
        assert!(cokernel(&tk.w).module().dims() == tk.h.dims());
        assert_eq!(tk.q.after(&tk.f), tk.q.after(&tk.g));
        assert!(!is_faithful(&tk.h));
        let d = d4_example(Rationals).unwrap();
        assert!(d.w0(2).is_injective());
        let lb = loop_beta(Rationals).unwrap();
        assert!(loop_beta_extension(&lb).unwrap().is_exact());
        let ts = two_step_kronecker(Rationals).unwrap();
        assert_eq!(ts.dimension(), 8);
        two_step_module(&ts).unwrap();
        loop_square(Rationals).unwrap();
    }
}
