//! Endomorphism algebras, indecomposability certificates, direct-sum
//! decompositions and isomorphism testing.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};

use crate::error::{Error, Result};
use crate::field::{Field, FieldSpec};
use crate::linalg::{Mat, Subspace};
use crate::poly::{distinct_factors, minimal_polynomial, Poly, PolyRing};
use crate::rep::{annihilator, hom_space, image, kernel, HomSpace, ModHom, Rep, Submodule};

/// Largest search space enumerated exhaustively over a finite field.
pub const ENUMERATION_LIMIT: u64 = 1 << 16;
/// Minimum number of random trials when looking for an invertible map.
pub const RANDOM_TRIALS: usize = 64;
/// Largest evaluation grid for the generic determinant check.
pub const GRID_LIMIT: u64 = 4096;

/// `End(M)` with its structure constants: `basis[i] ∘ basis[j] =
/// Σ_k table[i][j][k] basis[k]`.
#[derive(Clone, Debug)]
pub struct EndAlgebra<F: Field> {
    hom: HomSpace<F>,
    table: Vec<Vec<Vec<F::Elem>>>,
    identity: Vec<F::Elem>,
}

pub fn end_algebra<F: Field>(m: &Rep<F>) -> EndAlgebra<F> {
    let hom = hom_space(m, m).expect("a module shares its own algebra");
    let basis = hom.basis();
    let table = basis
        .iter()
        .map(|a| basis.iter().map(|b| hom.coordinates(&a.after(b)).expect("End is closed under composition")).collect())
        .collect();
    let identity = hom.coordinates(&ModHom::identity(m)).expect("End contains the identity");
    EndAlgebra { hom, table, identity }
}

impl<F: Field> EndAlgebra<F> {
    pub fn module(&self) -> &Rep<F> {
        self.hom.source()
    }
    pub fn dim(&self) -> usize {
        self.hom.dim()
    }
    pub fn basis(&self) -> &[ModHom<F>] {
        self.hom.basis()
    }
    pub fn table(&self) -> &[Vec<Vec<F::Elem>>] {
        &self.table
    }
    pub fn identity_coordinates(&self) -> &[F::Elem] {
        &self.identity
    }
    pub fn element(&self, coeffs: &[F::Elem]) -> ModHom<F> {
        self.hom.combination(coeffs)
    }
    pub fn coordinates(&self, f: &ModHom<F>) -> Option<Vec<F::Elem>> {
        self.hom.coordinates(f)
    }
    fn field(&self) -> &F {
        self.module().field()
    }

    /// Product `a ∘ b` in coordinates.
    pub fn mul(&self, a: &[F::Elem], b: &[F::Elem]) -> Vec<F::Elem> {
        let k = self.field();
        let mut out = vec![k.zero(); self.dim()];
        for (i, x) in a.iter().enumerate() {
            if k.is_zero(x) {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                if k.is_zero(y) {
                    continue;
                }
                let c = k.mul(x, y);
                for (o, t) in out.iter_mut().zip(&self.table[i][j]) {
                    *o = k.add(o, &k.mul(&c, t));
                }
            }
        }
        out
    }

    /// Smallest `j` with `R^j = 0`, if the subspace `R` is nilpotent.
    pub fn nilpotency_index(&self, r: &Subspace<F>) -> Option<usize> {
        let k = self.field();
        let gens = r.basis_vectors();
        let mut p = r.clone();
        let mut j = 1;
        while p.dim() > 0 {
            let prods: Vec<Vec<F::Elem>> =
                p.basis_vectors().iter().flat_map(|x| gens.iter().map(move |y| (x, y))).map(|(x, y)| self.mul(x, y)).collect();
            let next = Subspace::from_vectors(k, self.dim(), &prods);
            if next.dim() == p.dim() {
                return None;
            }
            p = next;
            j += 1;
        }
        Some(j)
    }

    fn is_two_sided_ideal(&self, r: &Subspace<F>) -> bool {
        let k = self.field();
        let unit = |i: usize| (0..self.dim()).map(|j| if i == j { k.one() } else { k.zero() }).collect::<Vec<_>>();
        r.basis_vectors().iter().all(|x| {
            (0..self.dim()).all(|i| r.contains(&self.mul(&unit(i), x)) && r.contains(&self.mul(x, &unit(i))))
        })
    }

    /// Radical of the trace form `(x, y) ↦ tr(L_{xy})`; in characteristic
    /// zero this is the Jacobson radical.
    pub fn trace_radical(&self) -> Subspace<F> {
        let k = self.field();
        let n = self.dim();
        let tr: Vec<F::Elem> =
            (0..n).map(|m| (0..n).fold(k.zero(), |acc, j| k.add(&acc, &self.table[m][j][j]))).collect();
        let form = Mat::from_fn(k, n, n, |i, j| {
            self.table[i][j].iter().zip(&tr).fold(k.zero(), |acc, (c, t)| k.add(&acc, &k.mul(c, t)))
        });
        Subspace::from_vectors(k, n, &form.null_space())
    }
}

/// Why a module is, or is not, indecomposable.
#[derive(Clone, Debug)]
pub enum Certificate<F: Field> {
    /// `End = k·1 ⊕ R` with `R^nilpotency = 0`.
    Local { radical_dim: usize, nilpotency: usize },
    /// `End/J` is the field `k[θ]/(μ)` with `J` a nilpotent ideal and `μ`
    /// irreducible of the given degree.
    FieldQuotient { radical_dim: usize, degree: usize },
    /// Every element of `End` was checked; only `0` and `1` are idempotent.
    NoIdempotent { searched: u64 },
    /// A proper idempotent endomorphism.
    Idempotent(ModHom<F>),
}

#[derive(Clone, Debug)]
pub struct Indecomposability<F: Field> {
    pub indecomposable: bool,
    pub certificate: Certificate<F>,
}

enum Search<F: Field> {
    Split(Submodule<F>, Submodule<F>),
    Local(Certificate<F>),
}

fn minpoly_of_hom<F: Field>(f: &ModHom<F>) -> Poly<F::Elem> {
    minimal_polynomial(f.field(), &Mat::block_diag(f.field(), f.blocks()))
}

/// Fitting decomposition for `g(φ)`: `M = ker g(φ)^N ⊕ im g(φ)^N`.
fn fitting<F: Field>(phi: &ModHom<F>, g: &Poly<F::Elem>) -> (Submodule<F>, Submodule<F>) {
    let m = phi.source();
    let ring = PolyRing::new(m.field());
    let n = m.total_dim().max(1);
    let blocks = phi.blocks().iter().map(|b| ring.eval_matrix(g, b).pow(n)).collect();
    let psi = ModHom::new(m, m, blocks).expect("polynomials in an endomorphism are endomorphisms");
    (kernel(&psi), image(&psi))
}

fn try_split<F: Field>(phi: &ModHom<F>, rng: &mut dyn RngCore) -> Option<(Submodule<F>, Submodule<F>)> {
    let mu = minpoly_of_hom(phi);
    if mu.degree().unwrap_or(0) <= 1 {
        return None;
    }
    let fac = distinct_factors(phi.field(), &mu, rng);
    if fac.factors.len() < 2 {
        return None;
    }
    let (a, b) = fitting(phi, &fac.factors[0]);
    (!a.is_zero() && !b.is_zero()).then_some((a, b))
}

fn unit_vec<F: Field>(k: &F, n: usize, i: usize) -> Vec<F::Elem> {
    (0..n).map(|j| if i == j { k.one() } else { k.zero() }).collect()
}

fn search<F: Field>(m: &Rep<F>, rng: &mut ChaCha8Rng) -> Result<Search<F>> {
    let k = m.field().clone();
    let e = end_algebra(m);
    let n = e.dim();
    let basis: Vec<Vec<F::Elem>> = (0..n).map(|i| unit_vec(&k, n, i)).collect();
    let mut candidates: Vec<Vec<F::Elem>> = basis.clone();
    if n <= 12 {
        for i in 0..n {
            for j in 0..n {
                candidates.push(e.mul(&basis[i], &basis[j]));
                if i < j {
                    candidates.push(basis[i].iter().zip(&basis[j]).map(|(x, y)| k.add(x, y)).collect());
                }
            }
        }
    }
    for _ in 0..16 {
        candidates.push((0..n).map(|_| k.random(rng, 3)).collect());
    }
    for c in &candidates {
        if let Some((a, b)) = try_split(&e.element(c), rng) {
            return Ok(Search::Split(a, b));
        }
    }

    // No splitting element found: look for a locality certificate.
    let ring = PolyRing::new(&k);
    let mut eigen = Vec::new();
    for b in e.basis() {
        let mu = minpoly_of_hom(b);
        let fac = distinct_factors(&k, &mu, rng);
        match fac.factors.as_slice() {
            [lin] if lin.degree() == Some(1) => eigen.push(k.neg(&lin.coeffs[0])),
            _ => break,
        }
    }
    if eigen.len() == n {
        let shifted: Vec<Vec<F::Elem>> = (0..n)
            .map(|i| basis[i].iter().zip(e.identity_coordinates()).map(|(x, u)| k.sub(x, &k.mul(&eigen[i], u))).collect())
            .collect();
        let r = Subspace::from_vectors(&k, n, &shifted);
        if r.dim() + 1 == n && !r.contains(e.identity_coordinates()) {
            if let Some(idx) = e.nilpotency_index(&r) {
                return Ok(Search::Local(Certificate::Local { radical_dim: r.dim(), nilpotency: idx }));
            }
        }
    }
    if k.spec() == FieldSpec::Rationals {
        let j = e.trace_radical();
        if e.is_two_sided_ideal(&j) && e.nilpotency_index(&j).is_some() {
            let quotient_dim = n - j.dim();
            for c in candidates.iter().take(n + 16) {
                if let Some(mu) = min_poly_modulo(&e, c, &j) {
                    if mu.degree() == Some(quotient_dim) {
                        let fac = distinct_factors(&k, &mu, rng);
                        if fac.complete && fac.factors.len() == 1 && ring.monic(&mu) == fac.factors[0] {
                            return Ok(Search::Local(Certificate::FieldQuotient {
                                radical_dim: j.dim(),
                                degree: quotient_dim,
                            }));
                        }
                    }
                }
            }
        }
    }
    if let Some(order) = k.order() {
        if let Some(total) = order.checked_pow(n as u32).filter(|t| *t <= ENUMERATION_LIMIT) {
            for idx in 0..total {
                let c = enumerate_coeffs(&k, order, n, idx);
                let f = e.element(&c);
                if f.after(&f) == f && !f.is_zero() && f != ModHom::identity(m) {
                    let img = image(&f);
                    let ker = kernel(&f);
                    return Ok(Search::Split(img, ker));
                }
            }
            return Ok(Search::Local(Certificate::NoIdempotent { searched: total }));
        }
    }
    Err(Error::Undecided(format!("no splitting element and no locality certificate for End of dimension {n}")))
}

/// Minimal polynomial of `θ` acting on `End/J`, in coordinates.
fn min_poly_modulo<F: Field>(e: &EndAlgebra<F>, theta: &[F::Elem], j: &Subspace<F>) -> Option<Poly<F::Elem>> {
    let k = e.field();
    let n = e.dim();
    let mut powers: Vec<Vec<F::Elem>> = Vec::new();
    let mut cur = e.identity_coordinates().to_vec();
    for _ in 0..=n {
        let red = j.reduce(&cur);
        let span = Subspace::from_vectors(k, n, &powers);
        if span.contains(&red) {
            let sys = Mat::from_columns(k, n, &powers);
            let c = sys.solve_vec(&red)?;
            let mut coeffs: Vec<F::Elem> = c.iter().map(|x| k.neg(x)).collect();
            coeffs.push(k.one());
            return Some(PolyRing::new(k).make(coeffs));
        }
        powers.push(red);
        cur = e.mul(&cur, theta);
    }
    None
}

fn enumerate_coeffs<F: Field>(k: &F, order: u64, n: usize, mut idx: u64) -> Vec<F::Elem> {
    (0..n)
        .map(|_| {
            let d = idx % order;
            idx /= order;
            k.element(d)
        })
        .collect()
}

/// Projection of `m` onto `a` along `b`, as a map to `a`'s module.
fn projection_onto<F: Field>(a: &Submodule<F>, b: &Submodule<F>) -> ModHom<F> {
    let m = a.ambient();
    let blocks = (0..m.dims().len())
        .map(|v| {
            let c = a.inclusion().block(v).hstack(b.inclusion().block(v));
            let inv = c.inverse().expect("complementary submodules");
            inv.submatrix(0..a.module().dim(v), 0..m.dim(v))
        })
        .collect();
    ModHom::new(m, a.module(), blocks).expect("projection along a complement is a homomorphism")
}

pub fn is_indecomposable<F: Field>(m: &Rep<F>) -> Result<Indecomposability<F>> {
    is_indecomposable_seeded(m, 0)
}

pub fn is_indecomposable_seeded<F: Field>(m: &Rep<F>, seed: u64) -> Result<Indecomposability<F>> {
    if m.is_zero() {
        return Err(Error::ZeroModule);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    Ok(match search(m, &mut rng)? {
        Search::Local(certificate) => Indecomposability { indecomposable: true, certificate },
        Search::Split(a, b) => {
            let e = a.inclusion().after(&projection_onto(&a, &b));
            Indecomposability { indecomposable: false, certificate: Certificate::Idempotent(e) }
        }
    })
}

/// One indecomposable summand with its split inclusion and projection.
#[derive(Clone, Debug)]
pub struct Summand<F: Field> {
    pub module: Rep<F>,
    pub inclusion: ModHom<F>,
    pub projection: ModHom<F>,
    pub certificate: Certificate<F>,
}

impl<F: Field> Summand<F> {
    pub fn idempotent(&self) -> ModHom<F> {
        self.inclusion.after(&self.projection)
    }
}

#[derive(Clone, Debug)]
pub struct Decomposition<F: Field> {
    pub module: Rep<F>,
    pub summands: Vec<Summand<F>>,
    /// `(index of a representative summand, multiplicity)` per isomorphism
    /// class.
    pub classes: Vec<(usize, usize)>,
    /// Pairs of summands whose isomorphism test was inconclusive; they are
    /// kept in separate classes.
    pub inconclusive_pairs: Vec<(usize, usize)>,
}

impl<F: Field> Decomposition<F> {
    /// Orthogonal idempotents summing to the identity, each cutting out its
    /// summand.
    pub fn verify(&self) -> bool {
        let id = ModHom::identity(&self.module);
        let mut total = ModHom::zero(&self.module, &self.module);
        for (i, s) in self.summands.iter().enumerate() {
            if s.projection.after(&s.inclusion) != ModHom::identity(&s.module)
                || !s.inclusion.is_homomorphism()
                || !s.projection.is_homomorphism()
            {
                return false;
            }
            for (j, t) in self.summands.iter().enumerate() {
                if i != j && !t.projection.after(&s.inclusion).is_zero() {
                    return false;
                }
            }
            total = total.add(&s.idempotent());
        }
        total == id
    }

    pub fn multiplicities(&self) -> Vec<(Rep<F>, usize)> {
        self.classes.iter().map(|&(i, mult)| (self.summands[i].module.clone(), mult)).collect()
    }

    pub fn dimension_vectors(&self) -> Vec<Vec<usize>> {
        let mut out: Vec<Vec<usize>> = self.summands.iter().map(|s| s.module.dims().to_vec()).collect();
        out.sort();
        out
    }
}

pub fn decompose<F: Field>(m: &Rep<F>) -> Result<Decomposition<F>> {
    decompose_seeded(m, 0)
}

pub fn decompose_seeded<F: Field>(m: &Rep<F>, seed: u64) -> Result<Decomposition<F>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut summands = Vec::new();
    let mut stack = vec![(m.clone(), ModHom::identity(m), ModHom::identity(m))];
    while let Some((s, incl, proj)) = stack.pop() {
        if s.is_zero() {
            continue;
        }
        match search(&s, &mut rng)? {
            Search::Local(certificate) => summands.push(Summand { module: s, inclusion: incl, projection: proj, certificate }),
            Search::Split(a, b) => {
                let pa = projection_onto(&a, &b);
                let pb = projection_onto(&b, &a);
                stack.push((b.module().clone(), incl.after(b.inclusion()), pb.after(&proj)));
                stack.push((a.module().clone(), incl.after(a.inclusion()), pa.after(&proj)));
            }
        }
    }
    summands.sort_by_key(|s| s.module.dims().to_vec());
    let mut classes: Vec<(usize, usize)> = Vec::new();
    let mut inconclusive_pairs = Vec::new();
    for i in 0..summands.len() {
        let mut placed = false;
        for class in classes.iter_mut() {
            let report = are_isomorphic_seeded(&summands[class.0].module, &summands[i].module, seed)?;
            match report.verdict {
                Verdict::Isomorphic => {
                    class.1 += 1;
                    placed = true;
                    break;
                }
                Verdict::Inconclusive => inconclusive_pairs.push((class.0, i)),
                Verdict::NotIsomorphic => {}
            }
        }
        if !placed {
            classes.push((i, 1));
        }
    }
    Ok(Decomposition { module: m.clone(), summands, classes, inconclusive_pairs })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    Isomorphic,
    NotIsomorphic,
    Inconclusive,
}

impl core::fmt::Display for Verdict {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.write_str(match self {
            Verdict::Isomorphic => "isomorphic",
            Verdict::NotIsomorphic => "not-isomorphic",
            Verdict::Inconclusive => "inconclusive",
        })
    }
}

/// An invariant that differs between two modules, or an exhaustive
/// certificate that no invertible map exists.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Refutation {
    DimensionVector { left: Vec<usize>, right: Vec<usize> },
    /// `dim Hom(M, N)` differs from `dim End(M)`.
    HomLeftToRight { hom: usize, end: usize },
    /// `dim Hom(N, M)` differs from `dim End(N)`.
    HomRightToLeft { hom: usize, end: usize },
    EndDimension { left: usize, right: usize },
    AnnihilatorDimension { left: usize, right: usize },
    /// Every element of `Hom(M, N)` over the finite field was tried.
    NoInvertibleMap { searched: u64 },
    /// The determinant of a generic element of `Hom(M, N)` vanishes on a
    /// grid large enough to force it to be identically zero.
    GenericDeterminantVanishes { grid: u64 },
}

impl core::fmt::Display for Refutation {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            Refutation::DimensionVector { left, right } => write!(f, "dimension vectors {left:?} and {right:?} differ"),
            Refutation::HomLeftToRight { hom, end } => write!(f, "dim Hom(M,N) = {hom} but dim End(M) = {end}"),
            Refutation::HomRightToLeft { hom, end } => write!(f, "dim Hom(N,M) = {hom} but dim End(N) = {end}"),
            Refutation::EndDimension { left, right } => write!(f, "dim End(M) = {left} but dim End(N) = {right}"),
            Refutation::AnnihilatorDimension { left, right } => {
                write!(f, "annihilator dimensions {left} and {right} differ")
            }
            Refutation::NoInvertibleMap { searched } => write!(f, "none of the {searched} maps M -> N is invertible"),
            Refutation::GenericDeterminantVanishes { grid } => {
                write!(f, "generic determinant vanishes on a grid of {grid} points")
            }
        }
    }
}

#[derive(Clone, Debug)]
pub struct IsoReport<F: Field> {
    pub verdict: Verdict,
    pub witness: Option<ModHom<F>>,
    pub refutation: Option<Refutation>,
}

impl<F: Field> IsoReport<F> {
    fn iso(w: ModHom<F>) -> Self {
        IsoReport { verdict: Verdict::Isomorphic, witness: Some(w), refutation: None }
    }
    fn refuted(r: Refutation) -> Self {
        IsoReport { verdict: Verdict::NotIsomorphic, witness: None, refutation: Some(r) }
    }

    /// Re-checks the witness: commutation and vertexwise invertibility.
    pub fn witness_is_valid(&self) -> bool {
        self.witness.as_ref().is_some_and(|w| w.is_homomorphism() && w.is_iso())
    }
}

pub fn are_isomorphic<F: Field>(m: &Rep<F>, n: &Rep<F>) -> Result<IsoReport<F>> {
    are_isomorphic_seeded(m, n, 0)
}

pub fn are_isomorphic_seeded<F: Field>(m: &Rep<F>, n: &Rep<F>, seed: u64) -> Result<IsoReport<F>> {
    m.check_same_algebra(n)?;
    if m.dims() != n.dims() {
        return Ok(IsoReport::refuted(Refutation::DimensionVector { left: m.dims().to_vec(), right: n.dims().to_vec() }));
    }
    if m == n {
        return Ok(IsoReport::iso(ModHom::identity(m)));
    }
    let (am, an) = (annihilator(m).dim(), annihilator(n).dim());
    if am != an {
        return Ok(IsoReport::refuted(Refutation::AnnihilatorDimension { left: am, right: an }));
    }
    let h_mn = hom_space(m, n)?;
    let h_nm = hom_space(n, m)?;
    let end_m = hom_space(m, m)?.dim();
    let end_n = hom_space(n, n)?.dim();
    if end_m != end_n {
        return Ok(IsoReport::refuted(Refutation::EndDimension { left: end_m, right: end_n }));
    }
    if h_mn.dim() != end_m {
        return Ok(IsoReport::refuted(Refutation::HomLeftToRight { hom: h_mn.dim(), end: end_m }));
    }
    if h_nm.dim() != end_n {
        return Ok(IsoReport::refuted(Refutation::HomRightToLeft { hom: h_nm.dim(), end: end_n }));
    }
    if m.is_zero() {
        return Ok(IsoReport::iso(ModHom::zero(m, n)));
    }

    let k = m.field().clone();
    let h = h_mn.dim();
    if let Some(order) = k.order() {
        if let Some(total) = order.checked_pow(h as u32).filter(|t| *t <= ENUMERATION_LIMIT) {
            for idx in 0..total {
                let f = h_mn.combination(&enumerate_coeffs(&k, order, h, idx));
                if f.is_iso() {
                    return Ok(IsoReport::iso(f));
                }
            }
            return Ok(IsoReport::refuted(Refutation::NoInvertibleMap { searched: total }));
        }
    }

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for f in h_mn.basis() {
        if f.is_iso() {
            return Ok(IsoReport::iso(f.clone()));
        }
    }
    for _ in 0..RANDOM_TRIALS {
        let c: Vec<F::Elem> = (0..h).map(|_| k.random(&mut rng, 16)).collect();
        let f = h_mn.combination(&c);
        if f.is_iso() {
            return Ok(IsoReport::iso(f));
        }
        let g = h_nm.combination(&c);
        if g.is_iso() {
            return Ok(IsoReport::iso(g.inverse().expect("invertible")));
        }
    }

    // The determinant of Σ c_i f_i has degree at most d in each c_i, so
    // vanishing on S^h with |S| = d + 1 forces it to be zero.
    let d = m.total_dim() as u64;
    let side = d + 1;
    if k.order().is_none_or(|q| q >= side) {
        if let Some(grid) = side.checked_pow(h as u32).filter(|g| *g <= GRID_LIMIT) {
            for idx in 0..grid {
                let f = h_mn.combination(&enumerate_coeffs(&k, side, h, idx));
                if f.is_iso() {
                    return Ok(IsoReport::iso(f));
                }
            }
            return Ok(IsoReport::refuted(Refutation::GenericDeterminantVanishes { grid }));
        }
    }
    Ok(IsoReport { verdict: Verdict::Inconclusive, witness: None, refutation: None })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{path_basis, AlgebraPresentation, Quiver};
    use crate::field::{PrimeField, Rationals};
    use crate::rep::direct_sum;
    use alloc::sync::Arc;

    fn kronecker<F: Field>(k: F) -> Arc<crate::algebra::Algebra<F>> {
        let q = Quiver::from_names(&["a", "b"], &[("alpha", "a", "b"), ("beta", "a", "b")]).unwrap();
        path_basis(AlgebraPresentation::new("kronecker", q, k)).unwrap()
    }

    fn regular<F: Field>(alg: &Arc<crate::algebra::Algebra<F>>, x: i64, y: i64) -> Rep<F> {
        let k = alg.field().clone();
        Rep::new(alg.clone(), vec![1, 1], vec![Mat::from_i64(&k, 1, 1, &[x]), Mat::from_i64(&k, 1, 1, &[y])]).unwrap()
    }

    #[test]
    fn simple_is_local() {
        let alg = kronecker(Rationals);
        let s = Rep::simple(&alg, 0);
        assert_eq!(end_algebra(&s).dim(), 1);
        assert!(is_indecomposable(&s).unwrap().indecomposable);
    }

    #[test]
    fn double_splits() {
        let alg = kronecker(Rationals);
        let r = regular(&alg, 1, 0);
        let ds = direct_sum(&alg, &[r.clone(), r.clone()]).unwrap();
        let res = is_indecomposable(&ds.sum).unwrap();
        assert!(!res.indecomposable);
        let dec = decompose(&ds.sum).unwrap();
        assert!(dec.verify());
        assert_eq!(dec.classes, vec![(0, 2)]);
    }

    #[test]
    fn degree_two_point_is_a_field_quotient() {
        let alg = kronecker(Rationals);
        let k = Rationals;
        let m = Rep::new(
            alg.clone(),
            vec![2, 2],
            vec![Mat::identity(&k, 2), Mat::from_i64(&k, 2, 2, &[0, -1, 1, 0])],
        )
        .unwrap();
        let res = is_indecomposable(&m).unwrap();
        assert!(res.indecomposable);
        assert!(matches!(res.certificate, Certificate::FieldQuotient { degree: 2, .. }));
    }

    #[test]
    fn distinct_points_are_not_isomorphic() {
        let alg = kronecker(PrimeField::new(7).unwrap());
        let a = regular(&alg, 1, 0);
        let b = regular(&alg, 1, 1);
        let rep = are_isomorphic(&a, &b).unwrap();
        assert_eq!(rep.verdict, Verdict::NotIsomorphic);
        let rep = are_isomorphic(&a, &regular(&alg, 2, 0)).unwrap();
        assert_eq!(rep.verdict, Verdict::Isomorphic);
        assert!(rep.witness_is_valid());
    }
}
