//! Commutative squares, pushouts and pullbacks, exactness, and split tests.
//!
//! A square is drawn as
//!
//! ```text
//!   X --f--> Y1
//!   |g        |g'
//!   v         v
//!   Y2 --f'-> Z
//! ```
//!
//! and is exact when `0 -> X -[f;g]-> Y1 ⊕ Y2 -[g', -f']-> Z -> 0` is exact.

use alloc::format;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::linalg::Mat;
use crate::rep::{cokernel, direct_sum, hom_space, kernel, DirectSum, ModHom, Rep};

#[derive(Clone, Debug, PartialEq)]
pub struct Square<F: Field> {
    pub x: Rep<F>,
    pub y1: Rep<F>,
    pub y2: Rep<F>,
    pub z: Rep<F>,
    pub f: ModHom<F>,
    pub g: ModHom<F>,
    pub g_prime: ModHom<F>,
    pub f_prime: ModHom<F>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Orientation {
    /// `right.x = left.y1`, `right.y2 = left.z`, glued along `left.g'`.
    Horizontal,
    /// `bottom.x = top.y2`, `bottom.y1 = top.z`, glued along `top.f'`.
    Vertical,
}

impl<F: Field> Square<F> {
    pub fn new(f: ModHom<F>, g: ModHom<F>, g_prime: ModHom<F>, f_prime: ModHom<F>) -> Result<Self> {
        if f.source() != g.source()
            || g_prime.source() != f.target()
            || f_prime.source() != g.target()
            || g_prime.target() != f_prime.target()
        {
            return Err(Error::DimensionMismatch("square edges do not fit together".into()));
        }
        let s = Square {
            x: f.source().clone(),
            y1: f.target().clone(),
            y2: g.target().clone(),
            z: g_prime.target().clone(),
            f,
            g,
            g_prime,
            f_prime,
        };
        if !s.commutes() {
            return Err(Error::NotCommuting("square".into()));
        }
        Ok(s)
    }

    pub fn commutes(&self) -> bool {
        self.g_prime.after(&self.f) == self.f_prime.after(&self.g)
    }

    /// `Y1 ⊕ Y2` with `[f; g]` and `[g', -f']`.
    pub fn total_sequence(&self) -> (DirectSum<F>, ModHom<F>, ModHom<F>) {
        let ds = direct_sum(self.x.algebra(), &[self.y1.clone(), self.y2.clone()]).expect("same algebra");
        let left = ds.column(&[self.f.clone(), self.g.clone()]);
        let right = ds.row(&[self.g_prime.clone(), self.f_prime.neg()]);
        (ds, left, right)
    }
}

/// Pushout of `w: X -> Y1` and `v: X -> Y2`: `Z = (Y1 ⊕ Y2) / {(w x, -v x)}`.
pub fn pushout<F: Field>(w: &ModHom<F>, v: &ModHom<F>) -> Result<Square<F>> {
    if w.source() != v.source() {
        return Err(Error::DimensionMismatch("pushout maps need a common source".into()));
    }
    let ds = direct_sum(w.source().algebra(), &[w.target().clone(), v.target().clone()])?;
    let rel = ds.column(&[w.clone(), v.neg()]);
    let q = cokernel(&rel);
    let pi = q.projection();
    Ok(Square {
        x: w.source().clone(),
        y1: w.target().clone(),
        y2: v.target().clone(),
        z: q.module().clone(),
        f: w.clone(),
        g: v.clone(),
        g_prime: pi.after(&ds.injections[0]),
        f_prime: pi.after(&ds.injections[1]),
    })
}

/// Pullback of `f: Y1 -> Z` and `g: Y2 -> Z`: `X = {(y1, y2) : f y1 = g y2}`.
pub fn pullback<F: Field>(f: &ModHom<F>, g: &ModHom<F>) -> Result<Square<F>> {
    if f.target() != g.target() {
        return Err(Error::DimensionMismatch("pullback maps need a common target".into()));
    }
    let ds = direct_sum(f.source().algebra(), &[f.source().clone(), g.source().clone()])?;
    let diff = ds.row(&[f.clone(), g.neg()]);
    let k = kernel(&diff);
    let incl = k.inclusion();
    Ok(Square {
        x: k.module().clone(),
        y1: f.source().clone(),
        y2: g.source().clone(),
        z: f.target().clone(),
        f: ds.projections[0].after(incl),
        g: ds.projections[1].after(incl),
        g_prime: f.clone(),
        f_prime: g.clone(),
    })
}

pub fn is_exact_square<F: Field>(s: &Square<F>) -> bool {
    if !s.commutes() {
        return false;
    }
    let (_, left, right) = s.total_sequence();
    if !left.is_injective() || !right.is_surjective() {
        return false;
    }
    (0..s.x.dims().len()).all(|v| s.x.dim(v) + s.z.dim(v) == s.y1.dim(v) + s.y2.dim(v))
}

pub fn compose_squares<F: Field>(first: &Square<F>, second: &Square<F>, orientation: Orientation) -> Result<Square<F>> {
    match orientation {
        Orientation::Horizontal => {
            if second.g != first.g_prime {
                return Err(Error::EdgeMismatch);
            }
            Ok(Square {
                x: first.x.clone(),
                y1: second.y1.clone(),
                y2: first.y2.clone(),
                z: second.z.clone(),
                f: second.f.after(&first.f),
                g: first.g.clone(),
                g_prime: second.g_prime.clone(),
                f_prime: second.f_prime.after(&first.f_prime),
            })
        }
        Orientation::Vertical => {
            if second.f != first.f_prime {
                return Err(Error::EdgeMismatch);
            }
            Ok(Square {
                x: first.x.clone(),
                y1: first.y1.clone(),
                y2: second.y2.clone(),
                z: second.z.clone(),
                f: first.f.clone(),
                g: second.g.after(&first.g),
                g_prime: second.g_prime.after(&first.g_prime),
                f_prime: second.f_prime.clone(),
            })
        }
    }
}

/// The square `a: U -> V` over `a ⊕ 1_X: U ⊕ X -> V ⊕ X`, with the
/// canonical inclusions `[1; 0]` as vertical maps. It is always exact.
pub fn trivial_square<F: Field>(a: &ModHom<F>, x: &Rep<F>) -> Result<Square<F>> {
    let alg = a.source().algebra();
    let ux = direct_sum(alg, &[a.source().clone(), x.clone()])?;
    let vx = direct_sum(alg, &[a.target().clone(), x.clone()])?;
    let bottom = ux_map(&ux, &vx, a, x);
    Ok(Square {
        x: a.source().clone(),
        y1: a.target().clone(),
        y2: ux.sum.clone(),
        z: vx.sum.clone(),
        f: a.clone(),
        g: ux.injections[0].clone(),
        g_prime: vx.injections[0].clone(),
        f_prime: bottom,
    })
}

fn ux_map<F: Field>(ux: &DirectSum<F>, vx: &DirectSum<F>, a: &ModHom<F>, x: &Rep<F>) -> ModHom<F> {
    crate::rep::sum_of_maps(ux, vx, &[a.clone(), ModHom::identity(x)])
}

fn solve_in_hom<F: Field>(
    candidates: &[ModHom<F>],
    apply: impl Fn(&ModHom<F>) -> ModHom<F>,
    rhs: &ModHom<F>,
) -> Option<Vec<F::Elem>> {
    let k = rhs.field();
    let cols: Vec<Vec<F::Elem>> = candidates.iter().map(|c| apply(c).flatten()).collect();
    let target = rhs.flatten();
    let sys = Mat::from_columns(k, target.len(), &cols);
    sys.solve_vec(&target)
}

/// A retraction `r` with `r ∘ f = 1`, found by exact linear algebra.
pub fn is_split_mono<F: Field>(f: &ModHom<F>) -> Option<ModHom<F>> {
    let hs = hom_space(f.target(), f.source()).ok()?;
    let id = ModHom::identity(f.source());
    let c = solve_in_hom(hs.basis(), |r| r.after(f), &id)?;
    Some(hs.combination(&c))
}

/// A section `s` with `f ∘ s = 1`, found by exact linear algebra.
pub fn is_split_epi<F: Field>(f: &ModHom<F>) -> Option<ModHom<F>> {
    let hs = hom_space(f.target(), f.source()).ok()?;
    let id = ModHom::identity(f.target());
    let c = solve_in_hom(hs.basis(), |s| f.after(s), &id)?;
    Some(hs.combination(&c))
}

/// `0 -> A -i-> B -p-> C -> 0`.
#[derive(Clone, Debug, PartialEq)]
pub struct ShortExact<F: Field> {
    pub i: ModHom<F>,
    pub p: ModHom<F>,
}

impl<F: Field> ShortExact<F> {
    pub fn new(i: ModHom<F>, p: ModHom<F>) -> Result<Self> {
        if i.target() != p.source() {
            return Err(Error::DimensionMismatch("sequence maps are not composable".into()));
        }
        let s = ShortExact { i, p };
        s.check()?;
        Ok(s)
    }

    pub fn a(&self) -> &Rep<F> {
        self.i.source()
    }
    pub fn b(&self) -> &Rep<F> {
        self.i.target()
    }
    pub fn c(&self) -> &Rep<F> {
        self.p.target()
    }

    /// Exactness with the first failing vertex named.
    pub fn check(&self) -> Result<()> {
        let q = self.a().algebra().quiver();
        let comp = self.p.after(&self.i);
        for v in 0..q.vertex_count() {
            let name = q.vertices()[v].clone();
            let ri = self.i.block(v).rank();
            let rp = self.p.block(v).rank();
            let (a, b, c) = (self.a().dim(v), self.b().dim(v), self.c().dim(v));
            let detail = if ri != a {
                Some(format!("left map has rank {ri}, source has dimension {a}"))
            } else if rp != c {
                Some(format!("right map has rank {rp}, target has dimension {c}"))
            } else if !comp.block(v).is_zero() {
                Some("composite is non-zero".into())
            } else if a + c != b {
                Some(format!("dimensions {a} + {c} != {b}"))
            } else {
                None
            };
            if let Some(detail) = detail {
                return Err(Error::NotExact { vertex: name, detail });
            }
        }
        Ok(())
    }

    pub fn is_exact(&self) -> bool {
        self.check().is_ok()
    }

    pub fn splits(&self) -> bool {
        is_split_epi(&self.p).is_some()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{path_basis, Algebra, AlgebraPresentation, Quiver};
    use crate::field::Rationals;
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
    fn pushout_of_kronecker_seeds() {
        let alg = kronecker();
        let (w, v) = seeds(&alg);
        let s = pushout(&w, &v).unwrap();
        assert_eq!(s.z.dims(), &[2, 3]);
        assert!(is_exact_square(&s));
        assert!(s.f_prime.is_injective());
    }

    #[test]
    fn pushout_along_identity() {
        let alg = kronecker();
        let (w, _) = seeds(&alg);
        let id = ModHom::identity(w.source());
        let s = pushout(&w, &id).unwrap();
        assert!(s.g_prime.is_iso());
        assert_eq!(s.z.dims(), w.target().dims());
    }

    #[test]
    fn pullback_dimensions() {
        let alg = kronecker();
        let (w, _) = seeds(&alg);
        let q = cokernel(&w);
        let p = q.projection().clone();
        let s = pullback(&p, &p).unwrap();
        let expect: Vec<usize> = (0..2).map(|v| 2 * p.source().dim(v) - p.target().dim(v)).collect();
        assert_eq!(s.x.dims(), expect.as_slice());
        assert!(is_exact_square(&s));
        let id = ModHom::identity(p.target());
        assert_eq!(pullback(&p, &id).unwrap().x.dims(), p.source().dims());
    }

    #[test]
    fn non_exact_square() {
        let alg = kronecker();
        let m = Rep::projective(&alg, 0);
        let zero = Rep::zero(&alg);
        let zm = ModHom::zero(&zero, &m);
        let id = ModHom::identity(&m);
        // f = g = 0 from the zero module, Y1 = Y2 = Z = M, f' = g' = 1
        let s = Square::new(zm.clone(), zm, id.clone(), id).unwrap();
        assert!(!is_exact_square(&s));
        let z0 = ModHom::identity(&zero);
        assert!(is_exact_square(&Square::new(z0.clone(), z0.clone(), z0.clone(), z0).unwrap()));
    }

    #[test]
    fn composition_of_rung_squares() {
        let alg = kronecker();
        let (w, v) = seeds(&alg);
        let s1 = pushout(&w, &v).unwrap();
        // the next rung square is the pushout of (w1, v1)
        let s2 = pushout(&s1.f_prime, &s1.g_prime).unwrap();
        for o in [Orientation::Horizontal, Orientation::Vertical] {
            let c = compose_squares(&s1, &s2, o).unwrap();
            assert!(is_exact_square(&c));
        }
        let bad = pushout(&s1.g_prime, &s1.f_prime).unwrap();
        assert_eq!(compose_squares(&s1, &bad, Orientation::Horizontal).unwrap_err(), Error::EdgeMismatch);
        let id = Square::new(
            ModHom::identity(&s1.y1),
            s1.g_prime.clone(),
            s1.g_prime.clone(),
            ModHom::identity(&s1.z),
        )
        .unwrap();
        assert_eq!(compose_squares(&s1, &id, Orientation::Horizontal).unwrap(), s1);
    }

    #[test]
    fn trivial_square_is_exact_and_split_tests() {
        let alg = kronecker();
        let (w, _) = seeds(&alg);
        let x = Rep::simple(&alg, 0);
        let s = trivial_square(&w, &x).unwrap();
        assert!(is_exact_square(&s));
        assert!(is_split_mono(&w).is_none());
        let r = is_split_mono(&ModHom::identity(w.target())).unwrap();
        assert_eq!(r, ModHom::identity(w.target()));
        assert!(is_split_mono(&s.g).is_some());
        assert!(is_split_epi(&cokernel(&w).projection().clone()).is_none());
        let seq = ShortExact::new(w.clone(), cokernel(&w).projection().clone()).unwrap();
        assert!(!seq.splits());
    }
}
