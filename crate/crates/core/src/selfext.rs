//! Projective covers, syzygies, `Ext^1` via a minimal presentation, and
//! standard self-extensions.
//!
//! For `0 -> ΩM -u-> PM -p-> M -> 0` we use
//! `Ext^1(M, N) = Hom(ΩM, N) / Im Hom(u, N)`.

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::ladder::solve_linear;
use crate::linalg::{Mat, Subspace};
use crate::rep::{cokernel, direct_sum, hom_space, kernel, top, HomSpace, ModHom, Rep, Submodule};
use crate::squares::ShortExact;

/// A projective cover `p: P -> M` and its kernel `u: ΩM -> P`.
#[derive(Clone, Debug)]
pub struct Presentation<F: Field> {
    pub p: ModHom<F>,
    pub u: ModHom<F>,
    /// Vertex of each indecomposable projective summand of `P`, in order.
    pub summands: Vec<usize>,
}

impl<F: Field> Presentation<F> {
    pub fn projective(&self) -> &Rep<F> {
        self.p.source()
    }
    pub fn omega(&self) -> &Rep<F> {
        self.u.source()
    }
    pub fn module(&self) -> &Rep<F> {
        self.p.target()
    }
}

/// The map `P(i) -> M` sending `e_i` to `x ∈ M_i`.
pub fn map_from_projective<F: Field>(m: &Rep<F>, i: usize, x: &[F::Elem]) -> (Rep<F>, ModHom<F>) {
    let alg = m.algebra();
    let p = Rep::projective(alg, i);
    let pb = alg.basis();
    let k = m.field();
    let blocks = (0..m.dims().len())
        .map(|j| {
            let cols: Vec<Vec<F::Elem>> = pb.between(i, j).iter().map(|&b| m.basis_element_matrix(b).apply(x)).collect();
            Mat::from_columns(k, m.dim(j), &cols)
        })
        .collect();
    let f = ModHom::from_parts(&p, m, blocks);
    (p, f)
}

pub fn projective_cover<F: Field>(m: &Rep<F>) -> Result<(Rep<F>, ModHom<F>)> {
    let pres = presentation(m)?;
    Ok((pres.projective().clone(), pres.p))
}

/// Lifts a basis of `top(M)` to generators and maps the matching projectives onto `M`.
pub fn presentation<F: Field>(m: &Rep<F>) -> Result<Presentation<F>> {
    if m.is_zero() {
        return Err(Error::ZeroModule);
    }
    let alg = m.algebra();
    let t = top(m);
    let mut parts = Vec::new();
    let mut maps = Vec::new();
    let mut summands = Vec::new();
    for (i, sec) in t.sections().iter().enumerate() {
        for c in 0..sec.cols() {
            let (p, f) = map_from_projective(m, i, &sec.column(c));
            parts.push(p);
            maps.push(f);
            summands.push(i);
        }
    }
    let ds = direct_sum(alg, &parts)?;
    let p = ds.row(&maps);
    let ker = kernel(&p);
    Ok(Presentation { p, u: ker.inclusion().clone(), summands })
}

pub fn syzygy<F: Field>(m: &Rep<F>) -> Result<(Rep<F>, ModHom<F>)> {
    let pres = presentation(m)?;
    Ok((pres.omega().clone(), pres.u))
}

/// A class in `Ext^1(M, N)`, represented by a map `ΩM -> N`.
#[derive(Clone, Debug)]
pub struct ExtClass<F: Field> {
    pub representative: ModHom<F>,
    pub presentation: Presentation<F>,
}

/// `Ext^1(M, N)` relative to a fixed presentation of `M`.
#[derive(Clone, Debug)]
pub struct Ext1<F: Field> {
    pub presentation: Presentation<F>,
    pub hom_omega: HomSpace<F>,
    /// `Im Hom(u, N)` in the coordinates of `hom_omega`.
    pub trivial: Subspace<F>,
}

/// `Ext^1(M, N)`; for projective (or zero) `M` the group is zero.
pub fn ext1<F: Field>(m: &Rep<F>, n: &Rep<F>) -> Result<Ext1<F>> {
    m.check_same_algebra(n)?;
    let pres = if m.is_zero() {
        let z = Rep::zero(m.algebra());
        Presentation { p: ModHom::zero(&z, m), u: ModHom::zero(&z, &z), summands: Vec::new() }
    } else {
        presentation(m)?
    };
    let hom_omega = hom_space(pres.omega(), n)?;
    let hom_p = hom_space(pres.projective(), n)?;
    let k = m.field();
    let vecs: Vec<Vec<F::Elem>> = hom_p
        .basis()
        .iter()
        .map(|phi| hom_omega.coordinates(&phi.after(&pres.u)).expect("restriction is a homomorphism"))
        .collect();
    let trivial = Subspace::from_vectors(k, hom_omega.dim(), &vecs);
    Ok(Ext1 { presentation: pres, hom_omega, trivial })
}

impl<F: Field> Ext1<F> {
    pub fn dim(&self) -> usize {
        self.hom_omega.dim() - self.trivial.dim()
    }

    /// Representatives of a basis of the quotient.
    pub fn classes(&self) -> Vec<ExtClass<F>> {
        let k = self.trivial.field();
        self.trivial
            .complement()
            .into_iter()
            .map(|c| {
                let mut coeffs: Vec<F::Elem> = (0..self.hom_omega.dim()).map(|_| k.zero()).collect();
                coeffs[c] = k.one();
                self.class(self.hom_omega.combination(&coeffs))
            })
            .collect()
    }

    pub fn class(&self, representative: ModHom<F>) -> ExtClass<F> {
        ExtClass { representative, presentation: self.presentation.clone() }
    }

    /// Coordinates of the class of `f` in the basis of [`Ext1::classes`].
    pub fn class_coordinates(&self, f: &ModHom<F>) -> Option<Vec<F::Elem>> {
        let c = self.hom_omega.coordinates(f)?;
        let r = self.trivial.reduce(&c);
        Some(self.trivial.complement().into_iter().map(|i| r[i].clone()).collect())
    }

    pub fn is_trivial(&self, f: &ModHom<F>) -> bool {
        self.class_coordinates(f).is_some_and(|c| c.iter().all(|x| self.trivial.field().is_zero(x)))
    }

    pub fn same_class(&self, f: &ModHom<F>, g: &ModHom<F>) -> bool {
        self.is_trivial(&f.sub(g))
    }
}

/// The pushout of the presentation along the representative:
/// `0 -> N -> E -> M -> 0`.
pub fn class_to_sequence<F: Field>(c: &ExtClass<F>) -> Result<ShortExact<F>> {
    let pres = &c.presentation;
    let f = &c.representative;
    let n = f.target();
    let alg = n.algebra();
    let ds = direct_sum(alg, &[pres.projective().clone(), n.clone()])?;
    let rel = ds.column(&[pres.u.clone(), f.neg()]);
    let q = cokernel(&rel);
    let into_e = q.projection().after(&ds.injections[1]);
    let onto_m = q
        .descend(&ds.row(&[pres.p.clone(), ModHom::zero(n, pres.module())]))
        .ok_or_else(|| Error::Internal("presentation map does not descend".into()))?;
    ShortExact::new(into_e, onto_m)
}

/// The class of `0 -> N -> E -> M -> 0`: lift `p: PM -> M` to `PM -> E`,
/// restrict to `ΩM` and pull back along `N -> E`.
pub fn sequence_class<F: Field>(ext: &Ext1<F>, seq: &ShortExact<F>) -> Result<ExtClass<F>> {
    let pres = &ext.presentation;
    if seq.c() != pres.module() || seq.a() != ext.hom_omega.target() {
        return Err(Error::DimensionMismatch("sequence does not match the Ext group".into()));
    }
    let lifts = hom_space(pres.projective(), seq.b())?;
    let lift = solve_linear(lifts.basis(), |l| seq.p.after(l), &pres.p)
        .map(|x| lifts.combination(&x))
        .ok_or_else(|| Error::Internal("presentation does not lift".into()))?;
    let restricted = lift.after(&pres.u);
    let into_n = &ext.hom_omega;
    let coeffs = solve_linear(into_n.basis(), |h| seq.i.after(h), &restricted)
        .ok_or_else(|| Error::Internal("restricted lift does not land in N".into()))?;
    Ok(ext.class(into_n.combination(&coeffs)))
}

/// `Ext^1(M, M)_s`: the image of `Hom(ΩM, p)` in `Ext^1(M, M)`.
#[derive(Clone, Debug)]
pub struct StandardSubspace<F: Field> {
    pub ext: Ext1<F>,
    /// Spanning set of `Im Hom(ΩM, p)` in the coordinates of `Hom(ΩM, M)`.
    pub image: Subspace<F>,
}

impl<F: Field> StandardSubspace<F> {
    pub fn dim(&self) -> usize {
        self.image.sum(&self.ext.trivial).dim() - self.ext.trivial.dim()
    }

    /// `Im Hom(u, M) ⊆ Im Hom(ΩM, p)`.
    pub fn contains_trivial(&self) -> bool {
        self.image.contains_subspace(&self.ext.trivial)
    }
}

pub fn standard_subspace<F: Field>(m: &Rep<F>) -> Result<StandardSubspace<F>> {
    let ext = ext1(m, m)?;
    let pres = &ext.presentation;
    let k = m.field();
    let through_p = hom_space(pres.omega(), pres.projective())?;
    let vecs: Vec<Vec<F::Elem>> = through_p
        .basis()
        .iter()
        .map(|psi| ext.hom_omega.coordinates(&pres.p.after(psi)).expect("composite is a homomorphism"))
        .collect();
    let image = Subspace::from_vectors(k, ext.hom_omega.dim(), &vecs);
    Ok(StandardSubspace { ext, image })
}

/// A map `w'` with `p ∘ w' = f`, if the class of `f` is standard.
pub fn standard_lift<F: Field>(c: &ExtClass<F>) -> Result<Option<ModHom<F>>> {
    let pres = &c.presentation;
    let hs = hom_space(pres.omega(), pres.projective())?;
    Ok(solve_linear(hs.basis(), |w| pres.p.after(w), &c.representative).map(|x| hs.combination(&x)))
}

pub fn is_standard<F: Field>(c: &ExtClass<F>) -> Result<bool> {
    Ok(standard_lift(c)?.is_some())
}

/// The seed `(u, w')` whose ladder extension realizes a standard class.
pub fn standard_to_ladder<F: Field>(c: &ExtClass<F>) -> Result<(ModHom<F>, ModHom<F>)> {
    if c.representative.target() != c.presentation.module() {
        return Err(Error::NotSelfExtension);
    }
    let w_prime = standard_lift(c)?.ok_or(Error::NotStandard)?;
    Ok((c.presentation.u.clone(), w_prime))
}

/// A seed through the quotient presentation: with `K = ker f`, the maps
/// `ΩM/K -> PM/u(K)` induced by `u` and a lift `v0` of `f` along `PM/u(K) -> M`.
pub fn quotient_presentation_witness<F: Field>(c: &ExtClass<F>) -> Result<Option<(ModHom<F>, ModHom<F>)>> {
    let pres = &c.presentation;
    let f = &c.representative;
    if f.target() != pres.module() {
        return Err(Error::NotSelfExtension);
    }
    let kf = kernel(f);
    let u0 = kf.quotient();
    let uk = Submodule::generated_by(
        pres.projective(),
        pres.u.after(kf.inclusion()).blocks().iter().map(Subspace::column_span).collect(),
    );
    let u1 = uk.quotient();
    let w0 = u0
        .descend(&u1.projection().after(&pres.u))
        .ok_or_else(|| Error::Internal("u does not descend".into()))?;
    let pbar = u1.descend(&pres.p).ok_or_else(|| Error::Internal("p does not descend".into()))?;
    let fbar = u0.descend(f).ok_or_else(|| Error::Internal("f does not descend".into()))?;
    let hs = hom_space(u0.module(), u1.module())?;
    Ok(solve_linear(hs.basis(), |v| pbar.after(v), &fbar).map(|x| (w0, hs.combination(&x))))
}

/// Whether `ΩM` is projective (trivially true for projective `M`).
pub fn proj_dim_at_most_one<F: Field>(m: &Rep<F>) -> Result<bool> {
    if m.is_zero() {
        return Ok(true);
    }
    let (omega, _) = syzygy(m)?;
    if omega.is_zero() {
        return Ok(true);
    }
    let pres = presentation(&omega)?;
    Ok(pres.omega().is_zero())
}
