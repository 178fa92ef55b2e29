//! Pushout ladders and their Prüfer truncations.
//!
//! Starting from `w0, v0: U0 -> U1` the rungs are produced by iterated
//! pushouts: the square `(U_i, U_{i+1}, U_{i+1}, U_{i+2})` is the pushout of
//! `w_i` and `v_i`, its right edge is `v_{i+1}` and its bottom edge `w_{i+1}`.
//! The truncation `H[n]` is `U_n` modulo the image of `w_{n-1} ... w_0`.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::rep::{cokernel, hom_space, kernel, ModHom, Quotient, Rep};
use crate::squares::{is_exact_square, is_split_mono, pushout, ShortExact, Square};

pub const DEFAULT_DEPTH: usize = 6;

#[derive(Clone, Debug)]
pub struct Ladder<F: Field> {
    modules: Vec<Rep<F>>,
    w: Vec<ModHom<F>>,
    v: Vec<ModHom<F>>,
    squares: Vec<Square<F>>,
}

fn check_seed<F: Field>(w0: &ModHom<F>, v0: &ModHom<F>) -> Result<()> {
    if w0.source() != v0.source() || w0.target() != v0.target() {
        return Err(Error::DimensionMismatch("seed maps need a common source and target".into()));
    }
    Ok(())
}

/// Builds `U_0, ..., U_depth` with the maps `w_i, v_i: U_i -> U_{i+1}`.
pub fn build_ladder<F: Field>(w0: &ModHom<F>, v0: &ModHom<F>, depth: usize) -> Result<Ladder<F>> {
    check_seed(w0, v0)?;
    if !w0.is_injective() {
        return Err(Error::NotMono);
    }
    if cokernel(w0).module().is_zero() {
        return Err(Error::ZeroCokernel);
    }
    let depth = depth.max(1);
    let mut modules = vec![w0.source().clone(), w0.target().clone()];
    let mut w = vec![w0.clone()];
    let mut v = vec![v0.clone()];
    let mut squares = Vec::new();
    for i in 0..depth - 1 {
        let sq = pushout(&w[i], &v[i])?;
        modules.push(sq.z.clone());
        w.push(sq.f_prime.clone());
        v.push(sq.g_prime.clone());
        squares.push(sq);
    }
    Ok(Ladder { modules, w, v, squares })
}

impl<F: Field> Ladder<F> {
    /// A ladder from explicitly given rungs `w_i, v_i: U_i -> U_{i+1}`.
    /// Every rung square must be exact.
    pub fn from_rungs(w: Vec<ModHom<F>>, v: Vec<ModHom<F>>) -> Result<Self> {
        if w.is_empty() || w.len() != v.len() {
            return Err(Error::DimensionMismatch("need as many w-rungs as v-rungs".into()));
        }
        check_seed(&w[0], &v[0])?;
        let mut modules = vec![w[0].source().clone()];
        for (wi, vi) in w.iter().zip(&v) {
            check_seed(wi, vi)?;
            if wi.source() != modules.last().unwrap() {
                return Err(Error::DimensionMismatch("rungs are not consecutive".into()));
            }
            modules.push(wi.target().clone());
        }
        let mut squares = Vec::new();
        for i in 0..w.len() - 1 {
            let sq = Square::new(w[i].clone(), v[i].clone(), v[i + 1].clone(), w[i + 1].clone())?;
            if !is_exact_square(&sq) {
                return Err(Error::Internal(alloc::format!("rung square {i} is not exact")));
            }
            squares.push(sq);
        }
        Ok(Ladder { modules, w, v, squares })
    }

    pub fn depth(&self) -> usize {
        self.modules.len() - 1
    }
    pub fn module(&self, i: usize) -> &Rep<F> {
        &self.modules[i]
    }
    pub fn modules(&self) -> &[Rep<F>] {
        &self.modules
    }
    pub fn w(&self, i: usize) -> &ModHom<F> {
        &self.w[i]
    }
    pub fn v(&self, i: usize) -> &ModHom<F> {
        &self.v[i]
    }
    pub fn squares(&self) -> &[Square<F>] {
        &self.squares
    }

    /// `H = coker(w0)`.
    pub fn h(&self) -> Rep<F> {
        cokernel(&self.w[0]).module().clone()
    }

    /// `w_{b-1} ... w_a: U_a -> U_b`.
    pub fn w_composite(&self, a: usize, b: usize) -> ModHom<F> {
        let mut acc = ModHom::identity(&self.modules[a]);
        for i in a..b {
            acc = self.w[i].after(&acc);
        }
        acc
    }

    /// The `i` maps `U_1 -> U_i` made of `j` v-rungs after `i - 1 - j` w-rungs.
    pub fn canonical_maps(&self, i: usize) -> Vec<ModHom<F>> {
        (0..i)
            .map(|j| {
                let mut acc = ModHom::identity(&self.modules[1]);
                let mut at = 1;
                for _ in 0..(i - 1 - j) {
                    acc = self.w[at].after(&acc);
                    at += 1;
                }
                for _ in 0..j {
                    acc = self.v[at].after(&acc);
                    at += 1;
                }
                acc
            })
            .collect()
    }

    /// The structural invariants: exact rung squares and constant
    /// kernel/cokernel dimension vectors along the rungs.
    pub fn verify(&self) -> Result<()> {
        for sq in &self.squares {
            if !is_exact_square(sq) {
                return Err(Error::Internal("rung square is not exact".into()));
            }
        }
        let h = cokernel(&self.w[0]).module().dims().to_vec();
        let k0 = kernel(&self.v[0]).dims().to_vec();
        let q0 = cokernel(&self.v[0]).module().dims().to_vec();
        for i in 0..self.depth() {
            if cokernel(&self.w[i]).module().dims() != h.as_slice() {
                return Err(Error::Internal("cokernel of a w-rung changed".into()));
            }
            if kernel(&self.v[i]).dims() != k0.as_slice() || cokernel(&self.v[i]).module().dims() != q0.as_slice() {
                return Err(Error::Internal("kernel or cokernel of a v-rung changed".into()));
            }
        }
        Ok(())
    }

    /// First `n < depth` with `w_n` split, and whether every later rung splits too.
    pub fn first_split_index(&self) -> (Option<usize>, bool) {
        let splits: Vec<bool> = (0..self.depth()).map(|i| is_split_mono(&self.w[i]).is_some()).collect();
        let first = splits.iter().position(|&s| s);
        let monotone = first.is_none_or(|n| splits[n..].iter().all(|&s| s));
        (first, monotone)
    }

    pub fn truncation(&self, n: usize) -> Result<Truncation<F>> {
        if n > self.depth() {
            return Err(Error::OutOfRange { n, depth: self.depth() });
        }
        let quotients: Vec<Quotient<F>> = (0..=n).map(|m| cokernel(&self.w_composite(0, m))).collect();
        let mut phis = Vec::new();
        for m in 1..=n {
            // v-bar: U_{m-1}/U_0 -> U_m/U_1 is invertible; phi = v-bar^{-1} p.
            let q1 = cokernel(&self.w_composite(1, m));
            let vbar = quotients[m - 1]
                .descend(&q1.projection().after(&self.v[m - 1]))
                .ok_or_else(|| Error::Internal("v does not respect the filtration".into()))?;
            let p = quotients[m]
                .descend(q1.projection())
                .ok_or_else(|| Error::Internal("projection does not descend".into()))?;
            let inv = vbar.inverse().ok_or_else(|| Error::Internal("v-bar is not invertible".into()))?;
            phis.push(inv.after(&p));
        }
        let hn = quotients[n].module().clone();
        let (phi, incl) = if n == 0 {
            (ModHom::zero(&hn, &hn), ModHom::zero(&hn, &hn))
        } else {
            let incl = quotients[n]
                .projection()
                .after(&self.w[n - 1]);
            let incl = quotients[n - 1]
                .descend(&incl)
                .ok_or_else(|| Error::Internal("w does not respect the filtration".into()))?;
            (phis[n - 1].clone(), incl)
        };
        let pi_to_h = if n == 0 {
            ModHom::zero(&hn, quotients[0].module())
        } else {
            let mut acc = ModHom::identity(&hn);
            for m in (2..=n).rev() {
                acc = phis[m - 1].after(&acc);
            }
            acc
        };
        Ok(Truncation { n, hn, phi, incl, pi_to_h })
    }
}

/// `H[n]` with `phi: H[n] -> H[n-1]`, `incl: H[n-1] -> H[n]` and
/// `pi_to_h = phi^{n-1}: H[n] -> H[1]`.
#[derive(Clone, Debug)]
pub struct Truncation<F: Field> {
    pub n: usize,
    pub hn: Rep<F>,
    pub phi: ModHom<F>,
    pub incl: ModHom<F>,
    pub pi_to_h: ModHom<F>,
}

impl<F: Field> Truncation<F> {
    /// `0 -> H[n-1] -> H[n] -> H -> 0`.
    pub fn incl_sequence(&self) -> Result<ShortExact<F>> {
        ShortExact::new(self.incl.clone(), self.pi_to_h.clone())
    }

    /// `0 -> H[1] -> H[n] -phi-> H[n-1] -> 0`, given the inclusion `H[1] -> H[n]`.
    pub fn phi_sequence(&self, bottom: &ModHom<F>) -> Result<ShortExact<F>> {
        ShortExact::new(bottom.clone(), self.phi.clone())
    }

    /// `(incl ∘ phi)^n = 0` on `H[n]`.
    pub fn phi_is_nilpotent(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        let e = self.incl.after(&self.phi);
        let mut acc = ModHom::identity(&self.hn);
        for _ in 0..self.n {
            acc = e.after(&acc);
        }
        acc.is_zero()
    }
}

/// Checks both truncation sequences and local nilpotency for `n = 1..=depth`.
pub fn verify_truncations<F: Field>(ladder: &Ladder<F>) -> Result<()> {
    let t1 = ladder.truncation(1)?;
    let mut bottom = ModHom::identity(&t1.hn);
    for n in 1..=ladder.depth() {
        let t = ladder.truncation(n)?;
        if n >= 2 {
            bottom = t.incl.after(&bottom);
            t.incl_sequence()?;
            t.phi_sequence(&bottom)?;
        }
        if !t.phi_is_nilpotent() {
            return Err(Error::Internal("phi is not nilpotent on a truncation".into()));
        }
    }
    Ok(())
}

/// The horizontal ladder of `(w0, v0)` and the vertical one of `(v0, w0)`,
/// built on the same rung modules.
pub fn chessboard<F: Field>(w0: &ModHom<F>, v0: &ModHom<F>, depth: usize) -> Result<(Ladder<F>, Ladder<F>)> {
    check_seed(w0, v0)?;
    if !w0.is_injective() || !v0.is_injective() {
        return Err(Error::NotMono);
    }
    if cokernel(v0).module().is_zero() {
        return Err(Error::ZeroCokernel);
    }
    let horizontal = build_ladder(w0, v0, depth)?;
    let squares = horizontal
        .squares
        .iter()
        .map(|s| Square {
            x: s.x.clone(),
            y1: s.y2.clone(),
            y2: s.y1.clone(),
            z: s.z.clone(),
            f: s.g.clone(),
            g: s.f.clone(),
            g_prime: s.f_prime.clone(),
            f_prime: s.g_prime.clone(),
        })
        .collect();
    let vertical =
        Ladder { modules: horizontal.modules.clone(), w: horizontal.v.clone(), v: horizontal.w.clone(), squares };
    Ok((horizontal, vertical))
}

/// `H[2; w0, v0]` for `w0 = ker(q)` with its middle row `0 -> H -> H[2] -> H -> 0`,
/// where `H` is the target of `q`.
#[derive(Clone, Debug)]
pub struct LadderExtension<F: Field> {
    pub ext: ShortExact<F>,
    pub h2: Rep<F>,
    pub ladder: Ladder<F>,
}

/// The kernel inclusion of `q`, as used by [`ladder_extension`].
pub fn kernel_seed<F: Field>(q: &ModHom<F>) -> ModHom<F> {
    kernel(q).inclusion().clone()
}

pub fn ladder_extension<F: Field>(q: &ModHom<F>, v0: &ModHom<F>) -> Result<LadderExtension<F>> {
    if !q.is_surjective() {
        return Err(Error::NotEpi);
    }
    let w0 = kernel_seed(q);
    if v0.source() != w0.source() || v0.target() != w0.target() {
        return Err(Error::DimensionMismatch("v0 must map ker(q) to the source of q".into()));
    }
    let ladder = build_ladder(&w0, v0, 2)?;
    let t2 = ladder.truncation(2)?;
    // H[1] = U1 / ker q is identified with H through q.
    let h1 = cokernel(&w0);
    let qbar = h1.descend(q).ok_or_else(|| Error::Internal("q does not kill its kernel".into()))?;
    let qinv = qbar.inverse().ok_or_else(|| Error::Internal("induced map is not invertible".into()))?;
    let ext = ShortExact::new(t2.incl.after(&qinv), qbar.after(&t2.pi_to_h))?;
    Ok(LadderExtension { ext, h2: t2.hn.clone(), ladder })
}

/// Given a self-extension `0 -> H -> H' -> H -> 0` and a simple submodule
/// `S ⊆ H`, produces `w, v: S -> U` with `H[2; w, v] ≅ H'`.
///
/// `U` is the kernel of a map `t: H' -> H/S` extending the projection
/// `H -> H/S`; `w` is the inclusion of `S` and `v` lifts the inclusion
/// `S -> H` along `U -> H`. Returns `None` when `t` or the lift does not exist,
/// or when `Ext^1(S, S)` is non-zero.
pub fn simple_socle_seed<F: Field>(ext: &ShortExact<F>, s_incl: &ModHom<F>) -> Result<Option<(ModHom<F>, ModHom<F>)>> {
    let h = ext.a();
    if ext.c() != h || s_incl.target() != h || !ext.is_exact() {
        return Err(Error::NotSelfExtension);
    }
    let s = s_incl.source();
    if s.total_dim() != 1 || !s_incl.is_injective() {
        return Err(Error::NotSimple);
    }
    if crate::selfext::ext1(s, s)?.dim() != 0 {
        return Ok(None);
    }
    let hs = cokernel(s_incl);
    let pi = hs.projection();
    // t: H' -> H/S with t ∘ i = pi
    let cands = hom_space(ext.b(), hs.module())?;
    let Some(coeffs) = solve_linear(cands.basis(), |t| t.after(&ext.i), pi) else {
        return Ok(None);
    };
    let t = cands.combination(&coeffs);
    let u_sub = kernel(&t);
    let u = u_sub.module().clone();
    let w = u_sub
        .factor_through(&ext.i.after(s_incl))
        .ok_or_else(|| Error::Internal("S does not land in ker t".into()))?;
    let q = ext.p.after(u_sub.inclusion());
    let lifts = hom_space(s, &u)?;
    let Some(coeffs) = solve_linear(lifts.basis(), |v| q.after(v), s_incl) else {
        return Ok(None);
    };
    let v = lifts.combination(&coeffs);
    Ok(Some((w, v)))
}

pub(crate) fn solve_linear<F: Field>(
    basis: &[ModHom<F>],
    apply: impl Fn(&ModHom<F>) -> ModHom<F>,
    rhs: &ModHom<F>,
) -> Option<Vec<F::Elem>> {
    let k = rhs.field();
    let target = rhs.flatten();
    let cols: Vec<Vec<F::Elem>> = basis.iter().map(|b| apply(b).flatten()).collect();
    crate::linalg::Mat::from_columns(k, target.len(), &cols).solve_vec(&target)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{path_basis, Algebra, AlgebraPresentation, Quiver};
    use crate::field::Rationals;
    use crate::rep::is_generated_by;
    use alloc::sync::Arc;

    fn kronecker() -> Arc<Algebra<Rationals>> {
        let q = Quiver::from_names(&["a", "b"], &[("alpha", "a", "b"), ("beta", "a", "b")]).unwrap();
        path_basis(AlgebraPresentation::new("K2", q, Rationals).with_loewy_bound(2)).unwrap()
    }

    fn seeds(alg: &Arc<Algebra<Rationals>>) -> (ModHom<Rationals>, ModHom<Rationals>) {
        let pa = Rep::projective(alg, 0);
        let pb = Rep::projective(alg, 1);
        let hs = hom_space(&pb, &pa).unwrap();
        (hs.basis()[0].clone(), hs.basis()[1].clone())
    }

    #[test]
    fn kronecker_rungs_and_truncations() {
        let alg = kronecker();
        let (w, v) = seeds(&alg);
        let l = build_ladder(&w, &v, 4).unwrap();
        for n in 0..=4 {
            assert_eq!(l.module(n).dims(), &[n, n + 1]);
        }
        l.verify().unwrap();
        verify_truncations(&l).unwrap();
        let t3 = l.truncation(3).unwrap();
        assert_eq!(t3.hn.dims(), &[3, 3]);
        assert_eq!(kernel(&t3.phi).dims(), &[1, 1]);
        assert_eq!(l.truncation(5).unwrap_err(), Error::OutOfRange { n: 5, depth: 4 });
        for i in 1..=4 {
            assert!(is_generated_by(l.module(i), &l.canonical_maps(i)));
        }
    }

    #[test]
    fn seed_errors() {
        let alg = kronecker();
        let (w, _) = seeds(&alg);
        let zero = ModHom::zero(w.source(), w.target());
        assert_eq!(build_ladder(&zero, &w, 3).unwrap_err(), Error::NotMono);
        let id = ModHom::identity(w.target());
        assert_eq!(build_ladder(&id, &id, 3).unwrap_err(), Error::ZeroCokernel);
    }

    #[test]
    fn chessboard_shares_rungs() {
        let alg = kronecker();
        let (w, v) = seeds(&alg);
        let (h, vert) = chessboard(&w, &v, 3).unwrap();
        assert_eq!(h.modules(), vert.modules());
        vert.verify().unwrap();
        for n in 1..=3 {
            assert_eq!(vert.truncation(n).unwrap().hn.dims(), &[n, n]);
        }
    }

    #[test]
    fn zero_v_gives_split_extension() {
        let alg = kronecker();
        let (w, _) = seeds(&alg);
        let q = cokernel(&w).projection().clone();
        let w0 = kernel_seed(&q);
        let le = ladder_extension(&q, &ModHom::zero(w0.source(), w0.target())).unwrap();
        assert!(le.ext.splits());
        assert_eq!(le.h2.dims(), &[2, 2]);
    }
}
