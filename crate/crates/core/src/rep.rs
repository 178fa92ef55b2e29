//! Representations (modules), homomorphisms, hom-spaces and subquotients.

use alloc::format;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::algebra::{Algebra, Path};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::linalg::{Mat, Subspace};

struct RepData<F: Field> {
    algebra: Arc<Algebra<F>>,
    dims: Vec<usize>,
    action: Vec<Mat<F>>,
}

/// A finite-dimensional module: one vector space per vertex and one matrix
/// per arrow (`dim(target) x dim(source)`). Cloning is cheap.
#[derive(Clone)]
pub struct Rep<F: Field> {
    inner: Arc<RepData<F>>,
}

impl<F: Field> PartialEq for Rep<F> {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.inner, &other.inner)
            || (same_algebra(&self.inner.algebra, &other.inner.algebra)
                && self.inner.dims == other.inner.dims
                && self.inner.action == other.inner.action)
    }
}

fn same_algebra<F: Field>(a: &Arc<Algebra<F>>, b: &Arc<Algebra<F>>) -> bool {
    Arc::ptr_eq(a, b) || a.presentation() == b.presentation()
}

impl<F: Field> fmt::Debug for Rep<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let q = self.algebra().quiver();
        write!(f, "Rep{:?}", self.dims())?;
        for (a, m) in self.inner.action.iter().enumerate() {
            write!(f, " {}={:?}", q.arrow(a).name, m)?;
        }
        Ok(())
    }
}

impl<F: Field> Rep<F> {
    /// Validates shapes and relations.
    pub fn new(algebra: Arc<Algebra<F>>, dims: Vec<usize>, action: Vec<Mat<F>>) -> Result<Self> {
        let q = algebra.quiver();
        if dims.len() != q.vertex_count() || action.len() != q.arrow_count() {
            return Err(Error::DimensionMismatch("one dimension per vertex and one matrix per arrow".into()));
        }
        for (a, arrow) in q.arrows().iter().enumerate() {
            let m = &action[a];
            if m.rows() != dims[arrow.target] || m.cols() != dims[arrow.source] {
                return Err(Error::DimensionMismatch(format!(
                    "matrix of `{}` is {}x{}, expected {}x{}",
                    arrow.name,
                    m.rows(),
                    m.cols(),
                    dims[arrow.target],
                    dims[arrow.source]
                )));
            }
        }
        let rep = Self::from_parts(algebra, dims, action);
        for r in rep.algebra().relations() {
            let (_, first) = &r.terms[0];
            let k = rep.field();
            let mut acc = Mat::zeros(k, rep.dim(first.target(rep.algebra().quiver())), rep.dim(first.source()));
            for (c, p) in &r.terms {
                acc = acc.add(&rep.path_matrix(p).scale(c));
            }
            if !acc.is_zero() {
                return Err(Error::RelationViolated(r.display(k, rep.algebra().quiver())));
            }
        }
        Ok(rep)
    }

    pub(crate) fn from_parts(algebra: Arc<Algebra<F>>, dims: Vec<usize>, action: Vec<Mat<F>>) -> Self {
        Rep { inner: Arc::new(RepData { algebra, dims, action }) }
    }

    pub fn zero(algebra: &Arc<Algebra<F>>) -> Self {
        let k = algebra.field().clone();
        let n = algebra.quiver().vertex_count();
        let action = algebra.quiver().arrows().iter().map(|_| Mat::zeros(&k, 0, 0)).collect();
        Self::from_parts(algebra.clone(), vec![0; n], action)
    }

    pub fn simple(algebra: &Arc<Algebra<F>>, v: usize) -> Self {
        let k = algebra.field().clone();
        let mut dims = vec![0; algebra.quiver().vertex_count()];
        dims[v] = 1;
        let action =
            algebra.quiver().arrows().iter().map(|a| Mat::zeros(&k, dims[a.target], dims[a.source])).collect();
        Self::from_parts(algebra.clone(), dims, action)
    }

    /// The indecomposable projective `P(v)`; its basis at `j` is the list of
    /// basis paths `v -> j`, and `e_v` is the first basis vector at `v`.
    pub fn projective(algebra: &Arc<Algebra<F>>, v: usize) -> Self {
        let k = algebra.field().clone();
        let q = algebra.quiver();
        let pb = algebra.basis();
        let dims: Vec<usize> = (0..q.vertex_count()).map(|j| pb.between(v, j).len()).collect();
        let action = q
            .arrows()
            .iter()
            .enumerate()
            .map(|(a, arrow)| {
                let src = pb.between(v, arrow.source);
                let tgt = pb.between(v, arrow.target);
                let mut m = Mat::zeros(&k, tgt.len(), src.len());
                for (c, &b) in src.iter().enumerate() {
                    for (coef, idx) in pb.append_arrow(&k, b, a) {
                        let r = tgt.iter().position(|&t| t == idx).expect("basis path in target block");
                        m.set(r, c, coef);
                    }
                }
                m
            })
            .collect();
        Self::from_parts(algebra.clone(), dims, action)
    }

    pub fn algebra(&self) -> &Arc<Algebra<F>> {
        &self.inner.algebra
    }
    pub fn field(&self) -> &F {
        self.inner.algebra.field()
    }
    pub fn dims(&self) -> &[usize] {
        &self.inner.dims
    }
    pub fn dim(&self, v: usize) -> usize {
        self.inner.dims[v]
    }
    pub fn total_dim(&self) -> usize {
        self.inner.dims.iter().sum()
    }
    pub fn is_zero(&self) -> bool {
        self.total_dim() == 0
    }
    pub fn action(&self, arrow: usize) -> &Mat<F> {
        &self.inner.action[arrow]
    }
    pub fn actions(&self) -> &[Mat<F>] {
        &self.inner.action
    }

    pub fn check_same_algebra(&self, other: &Rep<F>) -> Result<()> {
        if same_algebra(self.algebra(), other.algebra()) {
            Ok(())
        } else {
            Err(Error::AlgebraMismatch)
        }
    }

    /// Matrix of a path (`M_xk ... M_x1`).
    pub fn path_matrix(&self, path: &Path) -> Mat<F> {
        let mut m = Mat::identity(self.field(), self.dim(path.start));
        for &a in &path.arrows {
            m = self.action(a).mul(&m);
        }
        m
    }

    /// Matrix of the `idx`-th basis element of the algebra.
    pub fn basis_element_matrix(&self, idx: usize) -> Mat<F> {
        self.path_matrix(&self.algebra().basis().element(idx).path)
    }

    /// Whether the algebra element with the given coordinates acts as zero.
    pub fn annihilates(&self, element: &[F::Elem]) -> bool {
        let k = self.field();
        let pb = self.algebra().basis();
        let n = self.algebra().quiver().vertex_count();
        for i in 0..n {
            for j in 0..n {
                let mut acc = Mat::zeros(k, self.dim(j), self.dim(i));
                for &b in pb.between(i, j) {
                    if !k.is_zero(&element[b]) {
                        acc = acc.add(&self.basis_element_matrix(b).scale(&element[b]));
                    }
                }
                if !acc.is_zero() {
                    return false;
                }
            }
        }
        true
    }
}

/// A module homomorphism: one block per vertex, commuting with the arrows.
#[derive(Clone, Debug, PartialEq)]
pub struct ModHom<F: Field> {
    source: Rep<F>,
    target: Rep<F>,
    blocks: Vec<Mat<F>>,
}

impl<F: Field> ModHom<F> {
    pub fn new(source: &Rep<F>, target: &Rep<F>, blocks: Vec<Mat<F>>) -> Result<Self> {
        source.check_same_algebra(target)?;
        let n = source.algebra().quiver().vertex_count();
        if blocks.len() != n {
            return Err(Error::DimensionMismatch("one block per vertex".into()));
        }
        for (v, b) in blocks.iter().enumerate() {
            if b.rows() != target.dim(v) || b.cols() != source.dim(v) {
                return Err(Error::DimensionMismatch(format!(
                    "block at `{}` is {}x{}, expected {}x{}",
                    source.algebra().quiver().vertices()[v],
                    b.rows(),
                    b.cols(),
                    target.dim(v),
                    source.dim(v)
                )));
            }
        }
        let f = Self::from_parts(source, target, blocks);
        if let Some(a) = f.failing_arrow() {
            return Err(Error::NotCommuting(source.algebra().quiver().arrow(a).name.clone()));
        }
        Ok(f)
    }

    pub(crate) fn from_parts(source: &Rep<F>, target: &Rep<F>, blocks: Vec<Mat<F>>) -> Self {
        ModHom { source: source.clone(), target: target.clone(), blocks }
    }

    fn failing_arrow(&self) -> Option<usize> {
        let q = self.source.algebra().quiver();
        q.arrows().iter().enumerate().find_map(|(a, arrow)| {
            let lhs = self.target.action(a).mul(&self.blocks[arrow.source]);
            let rhs = self.blocks[arrow.target].mul(self.source.action(a));
            (lhs != rhs).then_some(a)
        })
    }

    /// Re-checks the commutation squares.
    pub fn is_homomorphism(&self) -> bool {
        self.failing_arrow().is_none()
    }

    pub fn zero(source: &Rep<F>, target: &Rep<F>) -> Self {
        let k = source.field();
        let blocks = (0..source.dims().len()).map(|v| Mat::zeros(k, target.dim(v), source.dim(v))).collect();
        Self::from_parts(source, target, blocks)
    }

    pub fn identity(m: &Rep<F>) -> Self {
        let k = m.field();
        let blocks = m.dims().iter().map(|&d| Mat::identity(k, d)).collect();
        Self::from_parts(m, m, blocks)
    }

    pub fn source(&self) -> &Rep<F> {
        &self.source
    }
    pub fn target(&self) -> &Rep<F> {
        &self.target
    }
    pub fn blocks(&self) -> &[Mat<F>] {
        &self.blocks
    }
    pub fn block(&self, v: usize) -> &Mat<F> {
        &self.blocks[v]
    }
    pub fn field(&self) -> &F {
        self.source.field()
    }

    /// `self ∘ f`.
    pub fn after(&self, f: &ModHom<F>) -> ModHom<F> {
        assert!(f.target == self.source, "composition of non-composable maps");
        let blocks = self.blocks.iter().zip(&f.blocks).map(|(g, f)| g.mul(f)).collect();
        Self::from_parts(&f.source, &self.target, blocks)
    }

    pub fn add(&self, other: &ModHom<F>) -> ModHom<F> {
        let blocks = self.blocks.iter().zip(&other.blocks).map(|(a, b)| a.add(b)).collect();
        Self::from_parts(&self.source, &self.target, blocks)
    }

    pub fn sub(&self, other: &ModHom<F>) -> ModHom<F> {
        let blocks = self.blocks.iter().zip(&other.blocks).map(|(a, b)| a.sub(b)).collect();
        Self::from_parts(&self.source, &self.target, blocks)
    }

    pub fn scale(&self, s: &F::Elem) -> ModHom<F> {
        let blocks = self.blocks.iter().map(|a| a.scale(s)).collect();
        Self::from_parts(&self.source, &self.target, blocks)
    }

    pub fn neg(&self) -> ModHom<F> {
        let blocks = self.blocks.iter().map(|a| a.neg()).collect();
        Self::from_parts(&self.source, &self.target, blocks)
    }

    pub fn is_zero(&self) -> bool {
        self.blocks.iter().all(|b| b.is_zero())
    }

    pub fn is_injective(&self) -> bool {
        self.blocks.iter().all(|b| b.is_injective())
    }

    pub fn is_surjective(&self) -> bool {
        self.blocks.iter().all(|b| b.is_surjective())
    }

    pub fn is_iso(&self) -> bool {
        self.blocks.iter().all(|b| b.rows() == b.cols() && b.is_injective())
    }

    pub fn inverse(&self) -> Option<ModHom<F>> {
        let blocks = self.blocks.iter().map(|b| b.inverse()).collect::<Option<Vec<_>>>()?;
        Some(Self::from_parts(&self.target, &self.source, blocks))
    }

    /// Rank of each block.
    pub fn rank_vector(&self) -> Vec<usize> {
        self.blocks.iter().map(|b| b.rank()).collect()
    }

    /// The blocks concatenated in vertex order, each row-major.
    pub fn flatten(&self) -> Vec<F::Elem> {
        self.blocks.iter().flat_map(|b| b.entries().iter().cloned()).collect()
    }

    fn from_flat(source: &Rep<F>, target: &Rep<F>, flat: &[F::Elem]) -> Self {
        let k = source.field();
        let mut off = 0;
        let blocks = (0..source.dims().len())
            .map(|v| {
                let (r, c) = (target.dim(v), source.dim(v));
                let m = Mat::from_fn(k, r, c, |i, j| flat[off + i * c + j].clone());
                off += r * c;
                m
            })
            .collect();
        Self::from_parts(source, target, blocks)
    }
}

/// A basis of `Hom(M, N)`.
///
/// Basis maps come from the null space of the commutation equations; the
/// coordinates of a homomorphism are its entries at the free positions.
#[derive(Clone, Debug)]
pub struct HomSpace<F: Field> {
    source: Rep<F>,
    target: Rep<F>,
    basis: Vec<ModHom<F>>,
    free: Vec<usize>,
}

pub fn hom_space<F: Field>(m: &Rep<F>, n: &Rep<F>) -> Result<HomSpace<F>> {
    m.check_same_algebra(n)?;
    let k = m.field().clone();
    let q = m.algebra().quiver();
    let nv = q.vertex_count();
    let mut offset = vec![0; nv + 1];
    for v in 0..nv {
        offset[v + 1] = offset[v] + n.dim(v) * m.dim(v);
    }
    let unknowns = offset[nv];
    // N_x f_i - f_j M_x = 0 for x: i -> j
    let mut rows: Vec<Vec<F::Elem>> = Vec::new();
    for (a, arrow) in q.arrows().iter().enumerate() {
        let (i, j) = (arrow.source, arrow.target);
        let (nx, mx) = (n.action(a), m.action(a));
        for r in 0..n.dim(j) {
            for c in 0..m.dim(i) {
                let mut row = vec![k.zero(); unknowns];
                for s in 0..n.dim(i) {
                    let pos = offset[i] + s * m.dim(i) + c;
                    row[pos] = k.add(&row[pos], nx.get(r, s));
                }
                for s in 0..m.dim(j) {
                    let pos = offset[j] + r * m.dim(j) + s;
                    row[pos] = k.sub(&row[pos], mx.get(s, c));
                }
                if row.iter().any(|x| !k.is_zero(x)) {
                    rows.push(row);
                }
            }
        }
    }
    let sys = Mat::from_fn(&k, rows.len(), unknowns, |r, c| rows[r][c].clone());
    let rr = sys.rref();
    let mut is_pivot = vec![false; unknowns];
    for &p in &rr.pivots {
        is_pivot[p] = true;
    }
    let free: Vec<usize> = (0..unknowns).filter(|&c| !is_pivot[c]).collect();
    let basis = sys.null_space().iter().map(|v| ModHom::from_flat(m, n, v)).collect();
    Ok(HomSpace { source: m.clone(), target: n.clone(), basis, free })
}

impl<F: Field> HomSpace<F> {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }
    pub fn basis(&self) -> &[ModHom<F>] {
        &self.basis
    }
    pub fn source(&self) -> &Rep<F> {
        &self.source
    }
    pub fn target(&self) -> &Rep<F> {
        &self.target
    }

    pub fn combination(&self, coeffs: &[F::Elem]) -> ModHom<F> {
        let mut acc = ModHom::zero(&self.source, &self.target);
        for (c, b) in coeffs.iter().zip(&self.basis) {
            if !self.source.field().is_zero(c) {
                acc = acc.add(&b.scale(c));
            }
        }
        acc
    }

    pub fn coordinates(&self, f: &ModHom<F>) -> Option<Vec<F::Elem>> {
        let flat = f.flatten();
        let coords: Vec<F::Elem> = self.free.iter().map(|&p| flat[p].clone()).collect();
        (self.combination(&coords).flatten() == flat).then_some(coords)
    }

    /// Flattened basis maps as columns: the matrix of coordinates -> maps.
    pub fn basis_matrix(&self) -> Mat<F> {
        let cols: Vec<Vec<F::Elem>> = self.basis.iter().map(|b| b.flatten()).collect();
        Mat::from_columns(self.source.field(), flat_len(&self.source, &self.target), &cols)
    }
}

fn flat_len<F: Field>(m: &Rep<F>, n: &Rep<F>) -> usize {
    m.dims().iter().zip(n.dims()).map(|(a, b)| a * b).sum()
}

/// A submodule, stored as one echelonized subspace per vertex, together with
/// the module it spans and its inclusion.
#[derive(Clone, Debug)]
pub struct Submodule<F: Field> {
    ambient: Rep<F>,
    spaces: Vec<Subspace<F>>,
    module: Rep<F>,
    incl: ModHom<F>,
}

impl<F: Field> Submodule<F> {
    /// Smallest submodule containing the given `(vertex, vector)` pairs.
    pub fn closure(ambient: &Rep<F>, generators: &[(usize, Vec<F::Elem>)]) -> Self {
        let k = ambient.field();
        let n = ambient.dims().len();
        let mut spaces: Vec<Subspace<F>> = (0..n)
            .map(|v| {
                let vecs: Vec<Vec<F::Elem>> =
                    generators.iter().filter(|(g, _)| *g == v).map(|(_, x)| x.clone()).collect();
                Subspace::from_vectors(k, ambient.dim(v), &vecs)
            })
            .collect();
        Self::close(ambient, &mut spaces);
        Self::from_closed(ambient, spaces)
    }

    /// The submodule generated by the given vertexwise subspaces.
    pub fn generated_by(ambient: &Rep<F>, mut spaces: Vec<Subspace<F>>) -> Self {
        Self::close(ambient, &mut spaces);
        Self::from_closed(ambient, spaces)
    }

    fn close(ambient: &Rep<F>, spaces: &mut [Subspace<F>]) {
        let q = ambient.algebra().quiver();
        loop {
            let mut grew = false;
            for (a, arrow) in q.arrows().iter().enumerate() {
                let img = ambient.action(a).mul(&spaces[arrow.source].basis_matrix());
                let next = spaces[arrow.target].sum(&Subspace::column_span(&img));
                if next.dim() > spaces[arrow.target].dim() {
                    spaces[arrow.target] = next;
                    grew = true;
                }
            }
            if !grew {
                break;
            }
        }
    }

    fn from_closed(ambient: &Rep<F>, spaces: Vec<Subspace<F>>) -> Self {
        let q = ambient.algebra().quiver();
        let dims: Vec<usize> = spaces.iter().map(|s| s.dim()).collect();
        let action = q
            .arrows()
            .iter()
            .enumerate()
            .map(|(a, arrow)| {
                spaces[arrow.target]
                    .coordinate_matrix()
                    .mul(&ambient.action(a).mul(&spaces[arrow.source].basis_matrix()))
            })
            .collect();
        let module = Rep::from_parts(ambient.algebra().clone(), dims, action);
        let incl = ModHom::from_parts(&module, ambient, spaces.iter().map(|s| s.basis_matrix()).collect());
        Submodule { ambient: ambient.clone(), spaces, module, incl }
    }

    pub fn ambient(&self) -> &Rep<F> {
        &self.ambient
    }
    pub fn spaces(&self) -> &[Subspace<F>] {
        &self.spaces
    }
    pub fn module(&self) -> &Rep<F> {
        &self.module
    }
    pub fn inclusion(&self) -> &ModHom<F> {
        &self.incl
    }
    pub fn dims(&self) -> &[usize] {
        self.module.dims()
    }
    pub fn is_zero(&self) -> bool {
        self.module.is_zero()
    }
    pub fn is_whole(&self) -> bool {
        self.dims() == self.ambient.dims()
    }

    pub fn contains(&self, other: &Submodule<F>) -> bool {
        self.spaces.iter().zip(&other.spaces).all(|(a, b)| a.contains_subspace(b))
    }

    pub fn sum(&self, other: &Submodule<F>) -> Submodule<F> {
        let spaces = self.spaces.iter().zip(&other.spaces).map(|(a, b)| a.sum(b)).collect();
        Self::from_closed(&self.ambient, spaces)
    }

    pub fn intersection(&self, other: &Submodule<F>) -> Submodule<F> {
        let spaces = self.spaces.iter().zip(&other.spaces).map(|(a, b)| a.intersection(b)).collect();
        Self::from_closed(&self.ambient, spaces)
    }

    /// Corestricts `f: X -> ambient` to the submodule, if its image lies inside.
    pub fn factor_through(&self, f: &ModHom<F>) -> Option<ModHom<F>> {
        if *f.target() != self.ambient {
            return None;
        }
        let mut blocks = Vec::new();
        for (v, s) in self.spaces.iter().enumerate() {
            let b = f.block(v);
            for c in 0..b.cols() {
                if !s.contains(&b.column(c)) {
                    return None;
                }
            }
            blocks.push(s.coordinate_matrix().mul(b));
        }
        Some(ModHom::from_parts(f.source(), &self.module, blocks))
    }

    pub fn quotient(&self) -> Quotient<F> {
        let q = self.ambient.algebra().quiver();
        let projs: Vec<Mat<F>> = self.spaces.iter().map(|s| s.quotient_projection()).collect();
        let sections: Vec<Mat<F>> = self.spaces.iter().map(|s| s.quotient_section()).collect();
        let dims: Vec<usize> = projs.iter().map(|p| p.rows()).collect();
        let action = q
            .arrows()
            .iter()
            .enumerate()
            .map(|(a, arrow)| projs[arrow.target].mul(&self.ambient.action(a).mul(&sections[arrow.source])))
            .collect();
        let module = Rep::from_parts(self.ambient.algebra().clone(), dims, action);
        let proj = ModHom::from_parts(&self.ambient, &module, projs);
        Quotient { module, proj, sections, sub: self.clone() }
    }
}

/// `ambient / sub` with its projection and a vertexwise linear section.
#[derive(Clone, Debug)]
pub struct Quotient<F: Field> {
    module: Rep<F>,
    proj: ModHom<F>,
    sections: Vec<Mat<F>>,
    sub: Submodule<F>,
}

impl<F: Field> Quotient<F> {
    pub fn module(&self) -> &Rep<F> {
        &self.module
    }
    pub fn projection(&self) -> &ModHom<F> {
        &self.proj
    }
    pub fn sections(&self) -> &[Mat<F>] {
        &self.sections
    }
    pub fn submodule(&self) -> &Submodule<F> {
        &self.sub
    }

    /// The map `ambient/sub -> Y` induced by `f: ambient -> Y`, when `f`
    /// vanishes on the submodule.
    pub fn descend(&self, f: &ModHom<F>) -> Option<ModHom<F>> {
        if *f.source() != *self.sub.ambient() || !f.after(self.sub.inclusion()).is_zero() {
            return None;
        }
        let blocks = f.blocks().iter().zip(&self.sections).map(|(b, s)| b.mul(s)).collect();
        Some(ModHom::from_parts(&self.module, f.target(), blocks))
    }
}

pub fn kernel<F: Field>(f: &ModHom<F>) -> Submodule<F> {
    let k = f.field();
    let spaces = f.blocks().iter().map(|b| Subspace::from_vectors(k, b.cols(), &b.null_space())).collect();
    Submodule::from_closed(f.source(), spaces)
}

pub fn image<F: Field>(f: &ModHom<F>) -> Submodule<F> {
    let spaces = f.blocks().iter().map(Subspace::column_span).collect();
    Submodule::from_closed(f.target(), spaces)
}

pub fn cokernel<F: Field>(f: &ModHom<F>) -> Quotient<F> {
    image(f).quotient()
}

/// `S = P_1 ⊕ ... ⊕ P_r` with injections and projections.
#[derive(Clone, Debug)]
pub struct DirectSum<F: Field> {
    pub sum: Rep<F>,
    pub injections: Vec<ModHom<F>>,
    pub projections: Vec<ModHom<F>>,
}

impl<F: Field> DirectSum<F> {
    /// `[f_1; ...; f_r]: X -> S` from maps `f_i: X -> P_i`.
    pub fn column(&self, maps: &[ModHom<F>]) -> ModHom<F> {
        let x = maps[0].source();
        let mut acc = ModHom::zero(x, &self.sum);
        for (f, i) in maps.iter().zip(&self.injections) {
            acc = acc.add(&i.after(f));
        }
        acc
    }

    /// `[g_1, ..., g_r]: S -> Z` from maps `g_i: P_i -> Z`.
    pub fn row(&self, maps: &[ModHom<F>]) -> ModHom<F> {
        let z = maps[0].target();
        let mut acc = ModHom::zero(&self.sum, z);
        for (g, p) in maps.iter().zip(&self.projections) {
            acc = acc.add(&g.after(p));
        }
        acc
    }
}

pub fn direct_sum<F: Field>(algebra: &Arc<Algebra<F>>, parts: &[Rep<F>]) -> Result<DirectSum<F>> {
    for p in parts {
        if !same_algebra(p.algebra(), algebra) {
            return Err(Error::AlgebraMismatch);
        }
    }
    let k = algebra.field().clone();
    let q = algebra.quiver();
    let nv = q.vertex_count();
    let dims: Vec<usize> = (0..nv).map(|v| parts.iter().map(|p| p.dim(v)).sum()).collect();
    let action = (0..q.arrow_count()).map(|a| Mat::block_diag(&k, &parts.iter().map(|p| p.action(a).clone()).collect::<Vec<_>>())).collect();
    let sum = Rep::from_parts(algebra.clone(), dims.clone(), action);
    let mut injections = Vec::new();
    let mut projections = Vec::new();
    let mut offs = vec![0usize; nv];
    for p in parts {
        let mut inj = Vec::new();
        let mut proj = Vec::new();
        for v in 0..nv {
            let e = Mat::from_fn(&k, dims[v], p.dim(v), |r, c| if r == offs[v] + c { k.one() } else { k.zero() });
            proj.push(e.transpose());
            inj.push(e);
            offs[v] += p.dim(v);
        }
        injections.push(ModHom::from_parts(p, &sum, inj));
        projections.push(ModHom::from_parts(&sum, p, proj));
    }
    Ok(DirectSum { sum, injections, projections })
}

/// `f_1 ⊕ ... ⊕ f_r` between the given sums.
pub fn sum_of_maps<F: Field>(src: &DirectSum<F>, tgt: &DirectSum<F>, maps: &[ModHom<F>]) -> ModHom<F> {
    let mut acc = ModHom::zero(&src.sum, &tgt.sum);
    for (i, f) in maps.iter().enumerate() {
        acc = acc.add(&tgt.injections[i].after(f).after(&src.projections[i]));
    }
    acc
}

/// The sum of the images of all arrows.
pub fn radical<F: Field>(m: &Rep<F>) -> Submodule<F> {
    let k = m.field();
    let q = m.algebra().quiver();
    let mut spaces: Vec<Subspace<F>> = m.dims().iter().map(|&d| Subspace::zero(k, d)).collect();
    for (a, arrow) in q.arrows().iter().enumerate() {
        spaces[arrow.target] = spaces[arrow.target].sum(&Subspace::column_span(m.action(a)));
    }
    Submodule::generated_by(m, spaces)
}

/// Vectors killed by every arrow.
pub fn socle<F: Field>(m: &Rep<F>) -> Submodule<F> {
    let k = m.field();
    let q = m.algebra().quiver();
    let mut spaces: Vec<Subspace<F>> = m.dims().iter().map(|&d| Subspace::full(k, d)).collect();
    for (a, arrow) in q.arrows().iter().enumerate() {
        let ker = Subspace::from_vectors(k, m.dim(arrow.source), &m.action(a).null_space());
        spaces[arrow.source] = spaces[arrow.source].intersection(&ker);
    }
    Submodule::from_closed(m, spaces)
}

pub fn top<F: Field>(m: &Rep<F>) -> Quotient<F> {
    radical(m).quotient()
}

/// The annihilator of a module as a subspace of the algebra (coordinates on
/// the path basis).
#[derive(Clone, Debug)]
pub struct Annihilator<F: Field> {
    pub basis: Vec<Vec<F::Elem>>,
}

impl<F: Field> Annihilator<F> {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }
}

pub fn annihilator<F: Field>(m: &Rep<F>) -> Annihilator<F> {
    let k = m.field().clone();
    let alg = m.algebra();
    let pb = alg.basis();
    let n = alg.quiver().vertex_count();
    let total = pb.total_dimension();
    let mut basis = Vec::new();
    for i in 0..n {
        for j in 0..n {
            let paths = pb.between(i, j);
            if paths.is_empty() {
                continue;
            }
            let cols: Vec<Vec<F::Elem>> =
                paths.iter().map(|&b| m.basis_element_matrix(b).entries().to_vec()).collect();
            let sys = Mat::from_columns(&k, m.dim(i) * m.dim(j), &cols);
            for v in sys.null_space() {
                let mut e = vec![k.zero(); total];
                for (c, &b) in v.into_iter().zip(paths) {
                    e[b] = c;
                }
                basis.push(e);
            }
        }
    }
    Annihilator { basis }
}

pub fn is_faithful<F: Field>(m: &Rep<F>) -> bool {
    annihilator(m).dim() == 0
}

/// Whether the images of the given maps together span `m`.
pub fn is_generated_by<F: Field>(m: &Rep<F>, gens: &[ModHom<F>]) -> bool {
    let k = m.field();
    let mut spaces: Vec<Subspace<F>> = m.dims().iter().map(|&d| Subspace::zero(k, d)).collect();
    for g in gens {
        if g.target() != m {
            return false;
        }
        for (v, s) in spaces.iter_mut().enumerate() {
            *s = s.sum(&Subspace::column_span(g.block(v)));
        }
    }
    Submodule::generated_by(m, spaces).is_whole()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{path_basis, AlgebraPresentation, Quiver};
    use crate::field::{PrimeField, Rationals};

    fn kronecker() -> Arc<Algebra<Rationals>> {
        let q = Quiver::from_names(&["a", "b"], &[("alpha", "a", "b"), ("beta", "a", "b")]).unwrap();
        path_basis(AlgebraPresentation::new("K2", q, Rationals).with_loewy_bound(2)).unwrap()
    }

    fn regular(alg: &Arc<Algebra<Rationals>>) -> Rep<Rationals> {
        let k = Rationals;
        Rep::new(alg.clone(), vec![1, 1], vec![Mat::from_i64(&k, 1, 1, &[1]), Mat::from_i64(&k, 1, 1, &[0])]).unwrap()
    }

    #[test]
    fn projectives_of_kronecker() {
        let alg = kronecker();
        assert_eq!(Rep::projective(&alg, 1).dims(), &[0, 1]);
        let pa = Rep::projective(&alg, 0);
        assert_eq!(pa.dims(), &[1, 2]);
        assert_eq!(top(&pa).module().dims(), &[1, 0]);
        assert_eq!(radical(&pa).dims(), &[0, 2]);
    }

    #[test]
    fn hom_dimensions() {
        let alg = kronecker();
        let pa = Rep::projective(&alg, 0);
        let pb = Rep::projective(&alg, 1);
        assert_eq!(hom_space(&pb, &pa).unwrap().dim(), 2);
        assert_eq!(hom_space(&pa, &pb).unwrap().dim(), 0);
        assert_eq!(hom_space(&pa, &Rep::zero(&alg)).unwrap().dim(), 0);
        let h = regular(&alg);
        let s = direct_sum(&alg, &[pa.clone(), h.clone()]).unwrap();
        let lhs = hom_space(&pb, &s.sum).unwrap().dim();
        assert_eq!(lhs, hom_space(&pb, &pa).unwrap().dim() + hom_space(&pb, &h).unwrap().dim());
    }

    #[test]
    fn hom_coordinates_round_trip() {
        let alg = kronecker();
        let pa = Rep::projective(&alg, 0);
        let hs = hom_space(&pa, &pa).unwrap();
        assert_eq!(hs.dim(), 1);
        let id = ModHom::identity(&pa);
        assert_eq!(hs.coordinates(&id), Some(vec![Rationals.one()]));
    }

    #[test]
    fn cokernel_of_kronecker_seed() {
        let alg = kronecker();
        let pa = Rep::projective(&alg, 0);
        let pb = Rep::projective(&alg, 1);
        let hs = hom_space(&pb, &pa).unwrap();
        let w = hs.basis()[0].clone();
        assert!(w.is_injective());
        let c = cokernel(&w);
        assert_eq!(c.module().dims(), &[1, 1]);
        assert!(c.projection().after(&w).is_zero());
        assert!(c.projection().is_homomorphism());
        assert_eq!(kernel(&w).dims(), &[0, 0]);
        assert!(kernel(&ModHom::identity(&pa)).is_zero());
    }

    #[test]
    fn socle_and_annihilator_of_regular_module() {
        let alg = kronecker();
        let h = regular(&alg);
        assert_eq!(socle(&h).dims(), &[0, 1]);
        // beta acts as zero, nothing else does.
        let ann = annihilator(&h);
        assert_eq!(ann.dim(), 1);
        assert!(!is_faithful(&h));
        assert_eq!(annihilator(&Rep::zero(&alg)).dim(), alg.dimension());
    }

    #[test]
    fn relation_violations_are_rejected() {
        let q = Quiver::from_names(&["v"], &[("x", "v", "v")]).unwrap();
        let k = PrimeField::new(3).unwrap();
        let alg = path_basis(AlgebraPresentation::new("L", q, k).with_relation(&[(1, &["x", "x"])]).unwrap()).unwrap();
        let bad = Rep::new(alg.clone(), vec![1], vec![Mat::from_i64(&k, 1, 1, &[1])]);
        assert!(matches!(bad, Err(Error::RelationViolated(_))));
        let s = Rep::simple(&alg, 0);
        let p = Rep::projective(&alg, 0);
        assert_eq!(p.dims(), &[2]);
        assert!(!is_generated_by(&p, &[ModHom::zero(&s, &p)]));
        assert!(is_generated_by(&p, &[ModHom::identity(&p)]));
    }

    #[test]
    fn non_commuting_blocks_name_the_arrow() {
        let alg = kronecker();
        let h = regular(&alg);
        let k = Rationals;
        let f = ModHom::new(&h, &h, vec![Mat::from_i64(&k, 1, 1, &[1]), Mat::from_i64(&k, 1, 1, &[2])]);
        assert_eq!(f.unwrap_err(), Error::NotCommuting("alpha".into()));
    }
}
