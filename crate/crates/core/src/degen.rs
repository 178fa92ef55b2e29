//! Degenerations: Riedtmann–Zwara sequences `0 -> U -> X ⊕ U -> Y -> 0`,
//! nilpotent steering maps, the Prüfer module `Y[∞]` with its eventual
//! splitting `Y[n+1] ≅ Y[n] ⊕ X`, and cokernels of monomorphisms with rigid
//! cokernel.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::decomp::{are_isomorphic, Verdict};
use crate::error::{Error, Result, Side};
use crate::field::Field;
use crate::ladder::{build_ladder, Ladder};
use crate::linalg::Mat;
use crate::rep::{cokernel, direct_sum, kernel, DirectSum, ModHom, Quotient, Rep};
use crate::selfext::ext1;
use crate::squares::{is_split_mono, pushout, ShortExact};

/// `0 -> U -[g; φ]-> X ⊕ U -> Y -> 0` with steering map `φ`.
#[derive(Clone, Debug)]
pub struct RZSequence<F: Field> {
    pub u: Rep<F>,
    pub x: Rep<F>,
    pub y: Rep<F>,
    /// `X ⊕ U`, in this order.
    pub sum: DirectSum<F>,
    pub mono: ModHom<F>,
    pub epi: ModHom<F>,
    pub g: ModHom<F>,
    pub phi: ModHom<F>,
}

impl<F: Field> RZSequence<F> {
    pub fn sequence(&self) -> ShortExact<F> {
        ShortExact { i: self.mono.clone(), p: self.epi.clone() }
    }

    /// Smallest `t` with `φ^t = 0`.
    pub fn nilpotency_index(&self) -> Option<usize> {
        hom_nilpotency(&self.phi)
    }
}

pub fn check_rz<F: Field>(u: &Rep<F>, x: &Rep<F>, y: &Rep<F>, mono: &ModHom<F>, epi: &ModHom<F>) -> Result<RZSequence<F>> {
    let sum = direct_sum(u.algebra(), &[x.clone(), u.clone()])?;
    if mono.source() != u || mono.target() != &sum.sum || epi.source() != &sum.sum || epi.target() != y {
        return Err(Error::DimensionMismatch("expected U -> X ⊕ U -> Y".into()));
    }
    ShortExact { i: mono.clone(), p: epi.clone() }.check()?;
    let g = sum.projections[0].after(mono);
    let phi = sum.projections[1].after(mono);
    Ok(RZSequence { u: u.clone(), x: x.clone(), y: y.clone(), sum, mono: mono.clone(), epi: epi.clone(), g, phi })
}

/// Smallest `t` with `f^t = 0` for an endomorphism.
pub fn hom_nilpotency<F: Field>(f: &ModHom<F>) -> Option<usize> {
    if f.source().is_zero() {
        return Some(0);
    }
    Mat::block_diag(f.field(), f.blocks()).nilpotency_index()
}

fn hom_pow<F: Field>(f: &ModHom<F>, e: usize) -> ModHom<F> {
    let mut acc = ModHom::identity(f.source());
    for _ in 0..e {
        acc = f.after(&acc);
    }
    acc
}

/// Restricts to the Fitting summand `ker φ^m` (`m = dim U`), on which the
/// steering map is nilpotent.
pub fn make_steering_nilpotent<F: Field>(rz: &RZSequence<F>) -> Result<RZSequence<F>> {
    if rz.nilpotency_index().is_some() {
        return Ok(rz.clone());
    }
    let m = rz.u.total_dim();
    let u1 = kernel(&hom_pow(&rz.phi, m));
    let i1 = u1.inclusion();
    let phi1 = u1
        .factor_through(&rz.phi.after(i1))
        .ok_or_else(|| Error::Internal("generalized kernel is not invariant".into()))?;
    let g1 = rz.g.after(i1);
    let ds = direct_sum(rz.u.algebra(), &[rz.x.clone(), u1.module().clone()])?;
    let mono = ds.column(&[g1, phi1]);
    let e_x = rz.epi.after(&rz.sum.injections[0]);
    let e_u = rz.epi.after(&rz.sum.injections[1]).after(i1);
    let epi = ds.row(&[e_x, e_u]);
    check_rz(u1.module(), &rz.x, &rz.y, &mono, &epi)
}

/// The ladder of `w = [φ; g]` and `v = [1; 0]: U -> U ⊕ X`, with explicit
/// rungs `U_n = U ⊕ X^n`, and the splitting witnesses.
#[derive(Clone, Debug)]
pub struct DegenerationCertificate<F: Field> {
    pub rz: RZSequence<F>,
    /// Nilpotency index of the steering map.
    pub t: usize,
    pub ladder: Ladder<F>,
    /// `U_n = U ⊕ X ⊕ ... ⊕ X` as direct sums, `n = 0..=depth`.
    pub rungs: Vec<DirectSum<F>>,
    /// `Y[1] = coker(w) -> Y`.
    pub y_iso: ModHom<F>,
    /// Whether `h_t: U -> Y[t]` is a split monomorphism.
    pub h_t_splits: bool,
    /// `(n, Y[n+1] -> Y[n] ⊕ X)` for `t <= n < depth`.
    pub witnesses: Vec<(usize, ModHom<F>)>,
}

fn rung_sums<F: Field>(u: &Rep<F>, x: &Rep<F>, depth: usize) -> Result<Vec<DirectSum<F>>> {
    (0..=depth)
        .map(|n| {
            let mut parts = vec![u.clone()];
            parts.extend(core::iter::repeat_n(x.clone(), n));
            direct_sum(u.algebra(), &parts)
        })
        .collect()
}

/// `w_n = [w; 1_{X^n}]` and `v_n = [1; 0]: U ⊕ X^n -> U ⊕ X^{n+1}`.
fn explicit_rungs<F: Field>(rz: &RZSequence<F>, sums: &[DirectSum<F>]) -> (Vec<ModHom<F>>, Vec<ModHom<F>>) {
    let mut ws = Vec::new();
    let mut vs = Vec::new();
    for n in 0..sums.len() - 1 {
        let (a, b) = (&sums[n], &sums[n + 1]);
        let p0 = &a.projections[0];
        let mut w = b.injections[0].after(&rz.phi).after(p0).add(&b.injections[1].after(&rz.g).after(p0));
        let mut v = b.injections[0].after(p0);
        for i in 1..=n {
            w = w.add(&b.injections[i + 1].after(&a.projections[i]));
            v = v.add(&b.injections[i].after(&a.projections[i]));
        }
        ws.push(w);
        vs.push(v);
    }
    (ws, vs)
}

/// The unique `θ` with `θ g' = g2`, `θ f' = f2` for the generic pushout of
/// `(f, g)`; `None` if it is not an isomorphism.
fn pushout_comparison<F: Field>(f: &ModHom<F>, g: &ModHom<F>, g2: &ModHom<F>, f2: &ModHom<F>) -> Option<ModHom<F>> {
    let sq = pushout(f, g).ok()?;
    let blocks: Option<Vec<Mat<F>>> = (0..sq.z.dims().len())
        .map(|v| {
            let a = sq.g_prime.block(v).hstack(sq.f_prime.block(v));
            let b = g2.block(v).hstack(f2.block(v));
            a.transpose().solve(&b.transpose()).map(|t| t.transpose())
        })
        .collect();
    let theta = ModHom::new(&sq.z, g2.target(), blocks?).ok()?;
    (theta.is_iso() && theta.after(&sq.g_prime) == *g2 && theta.after(&sq.f_prime) == *f2).then_some(theta)
}

/// `Y[n+1] -> Y[n] ⊕ X` induced by `(u, x_1, x_2, ..., x_{n+1}) ↦ ((u, x_2, ...), x_1)`;
/// an isomorphism once `φ^n = 0`.
fn splitting_witness<F: Field>(rz: &RZSequence<F>, ladder: &Ladder<F>, sums: &[DirectSum<F>], n: usize) -> Result<ModHom<F>> {
    let qn = cokernel(&ladder.w_composite(0, n));
    let qn1 = cokernel(&ladder.w_composite(0, n + 1));
    let (a, b) = (&sums[n], &sums[n + 1]);
    let mut drop_first = a.injections[0].after(&b.projections[0]);
    for i in 1..=n {
        drop_first = drop_first.add(&a.injections[i].after(&b.projections[i + 1]));
    }
    let target = direct_sum(rz.u.algebra(), &[qn.module().clone(), rz.x.clone()])?;
    let map = target.column(&[qn.projection().after(&drop_first), b.projections[1].clone()]);
    let theta = qn1.descend(&map).ok_or_else(|| Error::Internal("shift map does not descend".into()))?;
    if !theta.is_iso() {
        return Err(Error::Internal(format!("Y[{}] -> Y[{n}] ⊕ X is not invertible", n + 1)));
    }
    Ok(theta)
}

pub fn rz_to_prufer<F: Field>(rz: &RZSequence<F>, depth: usize) -> Result<DegenerationCertificate<F>> {
    let t = rz.nilpotency_index().ok_or(Error::NotNilpotent)?;
    let depth = depth.max(t + 1).max(2);
    let sums = rung_sums(&rz.u, &rz.x, depth)?;
    let (ws, vs) = explicit_rungs(rz, &sums);
    for n in 0..depth - 1 {
        if pushout_comparison(&ws[n], &vs[n], &vs[n + 1], &ws[n + 1]).is_none() {
            return Err(Error::Internal(format!("explicit rung {n} differs from the pushout")));
        }
    }
    let ladder = Ladder::from_rungs(ws, vs)?;
    let q1 = cokernel(ladder.w(0));
    let to_y = sums[1].row(&[rz.epi.after(&rz.sum.injections[1]), rz.epi.after(&rz.sum.injections[0])]);
    let y_iso = q1.descend(&to_y).filter(|f| f.is_iso()).ok_or_else(|| Error::Internal("coker(w) is not Y".into()))?;
    let qt = cokernel(&ladder.w_composite(0, t));
    let h_t = qt.projection().after(&sums[t].injections[0]);
    let h_t_splits = is_split_mono(&h_t).is_some();
    let mut witnesses = Vec::new();
    for n in t..depth {
        witnesses.push((n, splitting_witness(rz, &ladder, &sums, n)?));
    }
    Ok(DegenerationCertificate { rz: rz.clone(), t, ladder, rungs: sums, y_iso, h_t_splits, witnesses })
}

impl<F: Field> DegenerationCertificate<F> {
    pub fn depth(&self) -> usize {
        self.ladder.depth()
    }

    /// `Y[n] = U_n / U_0`.
    pub fn truncation(&self, n: usize) -> Quotient<F> {
        cokernel(&self.ladder.w_composite(0, n))
    }

    /// The sequence `0 -> U -> U ⊕ X^n -> Y[n] -> 0` showing that `Y[n]`
    /// is a degeneration of `X^n`.
    pub fn stage_sequence(&self, n: usize) -> Result<ShortExact<F>> {
        let q = self.truncation(n);
        ShortExact::new(self.ladder.w_composite(0, n), q.projection().clone())
    }
}

/// An isomorphism `Y[n+1] -> Y[n] ⊕ X` for `n` at least the nilpotency index.
pub fn eventual_splitting<F: Field>(cert: &DegenerationCertificate<F>, n: usize) -> Result<ModHom<F>> {
    if n < cert.t {
        return Err(Error::BelowIndex { n, t: cert.t });
    }
    if n + 1 > cert.depth() {
        return Err(Error::OutOfRange { n: n + 1, depth: cert.depth() });
    }
    if let Some((_, w)) = cert.witnesses.iter().find(|(m, _)| *m == n) {
        return Ok(w.clone());
    }
    splitting_witness(&cert.rz, &cert.ladder, &cert.rungs, n)
}

/// `0 -> Y -> Y[t] ⊕ X -> Y[t] -> 0`, with steering module `Y[t]`.
pub fn co_rz<F: Field>(cert: &DegenerationCertificate<F>) -> Result<ShortExact<F>> {
    let t = cert.t;
    let theta = eventual_splitting(cert, t)?;
    let q1 = cokernel(cert.ladder.w(0));
    let qt1 = cert.truncation(t + 1);
    let iota = q1
        .descend(&qt1.projection().after(&cert.ladder.w_composite(1, t + 1)))
        .ok_or_else(|| Error::Internal("Y[1] does not embed".into()))?;
    let psi = cert.ladder.truncation(t + 1)?.phi;
    let y_inv = cert.y_iso.inverse().ok_or_else(|| Error::Internal("Y[1] -> Y not invertible".into()))?;
    let theta_inv = theta.inverse().ok_or_else(|| Error::Internal("witness not invertible".into()))?;
    ShortExact::new(theta.after(&iota).after(&y_inv), psi.after(&theta_inv))
}

/// `[1 + λφ; g]: U -> U ⊕ X` and its retraction `[(1 + λφ)^{-1}, 0]`, for
/// nilpotent `φ`.
pub fn combination_retraction<F: Field>(rz: &RZSequence<F>, lambda: &F::Elem) -> Result<(ModHom<F>, ModHom<F>)> {
    hom_nilpotency(&rz.phi).ok_or(Error::NotNilpotent)?;
    let ds = direct_sum(rz.u.algebra(), &[rz.u.clone(), rz.x.clone()])?;
    let a = ModHom::identity(&rz.u).add(&rz.phi.scale(lambda));
    let eta = a.inverse().ok_or_else(|| Error::Internal("1 + λφ is not invertible".into()))?;
    let map = ds.column(&[a, rz.g.clone()]);
    let retraction = ds.row(&[eta, ModHom::zero(&rz.x, &rz.u)]);
    if retraction.after(&map) != ModHom::identity(&rz.u) {
        return Err(Error::Internal("retraction fails".into()));
    }
    Ok((map, retraction))
}

fn check_monos<F: Field>(w0: &ModHom<F>, v0: &ModHom<F>) -> Result<()> {
    if w0.source() != v0.source() || w0.target() != v0.target() {
        return Err(Error::DimensionMismatch("maps need a common source and target".into()));
    }
    if !w0.is_injective() || !v0.is_injective() {
        return Err(Error::NotMono);
    }
    Ok(())
}

fn is_rigid<F: Field>(m: &Rep<F>) -> Result<bool> {
    Ok(ext1(m, m)?.dim() == 0)
}

/// The isomorphism `coker(a_0) -> coker(a_n)` along a ladder side, where
/// `a` is the w-side (`along_w`) or the v-side.
fn transport<F: Field>(ladder: &Ladder<F>, n: usize, along_w: bool) -> Result<ModHom<F>> {
    let (a, b): (fn(&Ladder<F>, usize) -> &ModHom<F>, fn(&Ladder<F>, usize) -> &ModHom<F>) =
        if along_w { (Ladder::w, Ladder::v) } else { (Ladder::v, Ladder::w) };
    let mut q = cokernel(a(ladder, 0));
    let mut acc = ModHom::identity(q.module());
    for i in 0..n {
        let next = cokernel(a(ladder, i + 1));
        let step = q
            .descend(&next.projection().after(b(ladder, i + 1)))
            .ok_or_else(|| Error::Internal("rung does not induce a cokernel map".into()))?;
        acc = step.after(&acc);
        q = next;
    }
    if !acc.is_iso() {
        return Err(Error::Internal("cokernels along the ladder are not isomorphic".into()));
    }
    Ok(acc)
}

#[derive(Clone, Debug)]
pub struct CokernelDegeneration<F: Field> {
    /// `0 -> U_{n0} -> U_{n0} ⊕ W -> W' -> 0`.
    pub rz: RZSequence<F>,
    pub n0: usize,
    /// `dim Ext^1(W, U_0)`.
    pub bound: usize,
    pub ladder: Ladder<F>,
}

/// For rigid `W = coker(w0)`: the first split rung `w_{n0}` and the
/// resulting sequence exhibiting `W' = coker(v0)` as a degeneration of `W`.
pub fn cokernel_degeneration<F: Field>(w0: &ModHom<F>, v0: &ModHom<F>) -> Result<CokernelDegeneration<F>> {
    check_monos(w0, v0)?;
    let w = cokernel(w0).module().clone();
    if !is_rigid(&w)? {
        return Err(Error::NotRigid(Side::W));
    }
    let bound = ext1(&w, w0.source())?.dim();
    let ladder = build_ladder(w0, v0, bound + 2)?;
    let n0 = (0..=bound)
        .find(|&n| is_split_mono(ladder.w(n)).is_some())
        .ok_or_else(|| Error::Internal(format!("no split rung within the bound {bound}")))?;
    let r = is_split_mono(ladder.w(n0)).expect("split rung");
    let un = ladder.module(n0);
    let c = cokernel(ladder.w(n0));
    let beta = transport(&ladder, n0, true)?.inverse().expect("isomorphism");
    let ds = direct_sum(un.algebra(), &[w.clone(), un.clone()])?;
    let psi = ds.column(&[beta.after(c.projection()), r]);
    let psi_inv = psi.inverse().ok_or_else(|| Error::Internal("U_{n0+1} -> W ⊕ U_{n0} not invertible".into()))?;
    let delta = transport(&ladder, n0, false)?.inverse().expect("isomorphism");
    let cv = cokernel(ladder.v(n0));
    let mono = psi.after(ladder.v(n0));
    let epi = delta.after(cv.projection()).after(&psi_inv);
    let rz = check_rz(un, &w, delta.target(), &mono, &epi)?;
    Ok(CokernelDegeneration { rz, n0, bound, ladder })
}

#[derive(Clone, Debug)]
pub struct RigidIso<F: Field> {
    /// First index where both `w_n` and `v_n` split.
    pub n: usize,
    /// `coker(w0) -> coker(v0)`.
    pub witness: ModHom<F>,
}

/// For two monomorphisms with rigid cokernels: an isomorphism of the
/// cokernels, after locating a rung where both sides split.
pub fn rigid_cokernel_iso<F: Field>(w0: &ModHom<F>, v0: &ModHom<F>) -> Result<RigidIso<F>> {
    check_monos(w0, v0)?;
    let w = cokernel(w0).module().clone();
    let w2 = cokernel(v0).module().clone();
    if !is_rigid(&w)? {
        return Err(Error::NotRigid(Side::W));
    }
    if !is_rigid(&w2)? {
        return Err(Error::NotRigid(Side::WPrime));
    }
    let u0 = w0.source();
    let bound = ext1(&w, u0)?.dim().max(ext1(&w2, u0)?.dim());
    let ladder = build_ladder(w0, v0, bound + 2)?;
    let n = (0..=bound)
        .find(|&n| is_split_mono(ladder.w(n)).is_some() && is_split_mono(ladder.v(n)).is_some())
        .ok_or_else(|| Error::Internal(format!("no rung with both sides split within {bound}")))?;
    let report = are_isomorphic(&w, &w2)?;
    match report.verdict {
        Verdict::Isomorphic => Ok(RigidIso { n, witness: report.witness.expect("witness") }),
        Verdict::NotIsomorphic => Err(Error::Internal("rigid cokernels refuted as non-isomorphic".into())),
        Verdict::Inconclusive => Err(Error::Undecided("no isomorphism found between the cokernels".into())),
    }
}

/// Whether `w0` and `v0` split; under rigid cokernels the answers agree.
pub fn split_iff_split<F: Field>(w0: &ModHom<F>, v0: &ModHom<F>) -> Result<(bool, bool)> {
    check_monos(w0, v0)?;
    if !is_rigid(cokernel(w0).module())? {
        return Err(Error::NotRigid(Side::W));
    }
    if !is_rigid(cokernel(v0).module())? {
        return Err(Error::NotRigid(Side::WPrime));
    }
    Ok((is_split_mono(w0).is_some(), is_split_mono(v0).is_some()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{path_basis, Algebra, AlgebraPresentation, Quiver};
    use crate::field::Rationals;
    use alloc::sync::Arc;

    fn kronecker() -> Arc<Algebra<Rationals>> {
        let q = Quiver::from_names(&["a", "b"], &[("alpha", "a", "b"), ("beta", "a", "b")]).unwrap();
        path_basis(AlgebraPresentation::new("kronecker", q, Rationals)).unwrap()
    }

    /// `U = P(b)`, `X = P(a)`, `g` one of the arrows, `φ = 0`.
    fn kronecker_rz() -> RZSequence<Rationals> {
        let alg = kronecker();
        let pb = Rep::projective(&alg, 1);
        let pa = Rep::projective(&alg, 0);
        let g = crate::rep::hom_space(&pb, &pa).unwrap().basis()[0].clone();
        let ds = direct_sum(&alg, &[pa.clone(), pb.clone()]).unwrap();
        let mono = ds.column(&[g, ModHom::zero(&pb, &pb)]);
        let q = cokernel(&mono);
        check_rz(&pb, &pa, q.module(), &mono, q.projection()).unwrap()
    }

    #[test]
    fn trivial_degeneration() {
        let alg = kronecker();
        let x = Rep::projective(&alg, 0);
        let u = Rep::zero(&alg);
        let ds = direct_sum(&alg, &[x.clone(), u.clone()]).unwrap();
        let rz = check_rz(&u, &x, &x, &ModHom::zero(&u, &ds.sum), &ds.projections[0]).unwrap();
        let cert = rz_to_prufer(&rz, 3).unwrap();
        assert_eq!(cert.t, 0);
        assert_eq!(cert.truncation(2).module().dims(), &[2, 4]);
        assert!(co_rz(&cert).unwrap().is_exact());
    }

    #[test]
    fn kronecker_certificate() {
        let rz = kronecker_rz();
        let cert = rz_to_prufer(&rz, 4).unwrap();
        assert_eq!(cert.t, 1);
        assert!(cert.h_t_splits);
        assert_eq!(cert.witnesses.len(), 3);
        assert!(matches!(eventual_splitting(&cert, 0), Err(Error::BelowIndex { n: 0, t: 1 })));
        for (_, w) in &cert.witnesses {
            assert!(w.is_iso());
        }
        let co = co_rz(&cert).unwrap();
        assert_eq!(co.a(), &rz.y);
        assert!(cert.stage_sequence(3).unwrap().is_exact());
    }

    #[test]
    fn combination_retractions() {
        let rz = kronecker_rz();
        for l in [0, 1, -1, 2] {
            let (map, r) = combination_retraction(&rz, &Rationals.from_i64(l)).unwrap();
            assert_eq!(r.after(&map), ModHom::identity(&rz.u));
        }
    }
}
