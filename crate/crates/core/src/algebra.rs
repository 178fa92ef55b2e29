//! Quivers, admissible relations and the path basis of `kQ/I`.
//!
//! Paths are written in travel order: `[x, y]` means "first `x`, then `y`",
//! so on a representation it acts by the matrix `M_y * M_x`.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::linalg::Mat;

pub const DEFAULT_LOEWY_BOUND: usize = 12;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Arrow {
    pub name: String,
    pub source: usize,
    pub target: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Quiver {
    vertices: Vec<String>,
    arrows: Vec<Arrow>,
}

impl Quiver {
    pub fn new(vertices: Vec<String>, arrows: Vec<(String, String, String)>) -> Result<Self> {
        for (i, v) in vertices.iter().enumerate() {
            if vertices[..i].contains(v) {
                return Err(Error::InvalidQuiver(format!("duplicate vertex `{v}`")));
            }
        }
        let mut out = Quiver { vertices, arrows: Vec::new() };
        for (name, s, t) in arrows {
            if out.arrows.iter().any(|a| a.name == name) {
                return Err(Error::InvalidQuiver(format!("duplicate arrow `{name}`")));
            }
            let source = out.vertex_index(&s)?;
            let target = out.vertex_index(&t)?;
            out.arrows.push(Arrow { name, source, target });
        }
        Ok(out)
    }

    /// Convenience constructor from string slices.
    pub fn from_names(vertices: &[&str], arrows: &[(&str, &str, &str)]) -> Result<Self> {
        Self::new(
            vertices.iter().map(|v| v.to_string()).collect(),
            arrows.iter().map(|(n, s, t)| (n.to_string(), s.to_string(), t.to_string())).collect(),
        )
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }
    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }
    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }
    pub fn arrow_count(&self) -> usize {
        self.arrows.len()
    }
    pub fn arrow(&self, i: usize) -> &Arrow {
        &self.arrows[i]
    }

    pub fn vertex_index(&self, name: &str) -> Result<usize> {
        self.vertices.iter().position(|v| v == name).ok_or_else(|| Error::UnknownVertex(name.to_string()))
    }

    pub fn arrow_index(&self, name: &str) -> Result<usize> {
        self.arrows.iter().position(|a| a.name == name).ok_or_else(|| Error::UnknownArrow(name.to_string()))
    }

    /// Path through the named arrows in travel order.
    pub fn path(&self, names: &[&str]) -> Result<Path> {
        let arrows = names.iter().map(|n| self.arrow_index(n)).collect::<Result<Vec<_>>>()?;
        let start = match arrows.first() {
            Some(&a) => self.arrows[a].source,
            None => return Err(Error::InvalidQuiver("empty path needs a vertex".into())),
        };
        Path::new(self, start, arrows)
    }
}

/// A path: a start vertex and a composable arrow sequence in travel order.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Path {
    pub start: usize,
    pub arrows: Vec<usize>,
}

impl Path {
    pub fn trivial(vertex: usize) -> Self {
        Path { start: vertex, arrows: Vec::new() }
    }

    pub fn new(quiver: &Quiver, start: usize, arrows: Vec<usize>) -> Result<Self> {
        let mut at = start;
        for &a in &arrows {
            let arrow = quiver.arrows.get(a).ok_or_else(|| Error::UnknownArrow(format!("#{a}")))?;
            if arrow.source != at {
                return Err(Error::InvalidQuiver(format!(
                    "arrow `{}` does not start where the path ends",
                    arrow.name
                )));
            }
            at = arrow.target;
        }
        Ok(Path { start, arrows })
    }

    pub fn len(&self) -> usize {
        self.arrows.len()
    }
    pub fn is_empty(&self) -> bool {
        self.arrows.is_empty()
    }
    pub fn source(&self) -> usize {
        self.start
    }
    pub fn target(&self, quiver: &Quiver) -> usize {
        self.arrows.last().map_or(self.start, |&a| quiver.arrows[a].target)
    }

    pub fn display(&self, quiver: &Quiver) -> String {
        if self.arrows.is_empty() {
            return format!("e_{}", quiver.vertices[self.start]);
        }
        self.arrows.iter().map(|&a| quiver.arrows[a].name.as_str()).collect::<Vec<_>>().join("*")
    }
}

/// A k-linear combination of parallel paths.
#[derive(Clone, Debug, PartialEq)]
pub struct Relation<F: Field> {
    pub terms: Vec<(F::Elem, Path)>,
}

impl<F: Field> Relation<F> {
    pub fn display(&self, field: &F, quiver: &Quiver) -> String {
        let mut s = String::new();
        for (i, (c, p)) in self.terms.iter().enumerate() {
            let lit = field.format(c);
            let (sign, mag) = match lit.strip_prefix('-') {
                Some(m) => ("-", m.to_string()),
                None => ("+", lit),
            };
            if i == 0 {
                if sign == "-" {
                    s.push('-');
                }
            } else {
                s.push_str(&format!(" {sign} "));
            }
            s.push_str(&format!("{mag}*{}", p.display(quiver)));
        }
        s.push_str(" = 0");
        s
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct AlgebraPresentation<F: Field> {
    pub name: String,
    pub quiver: Quiver,
    pub field: F,
    pub relations: Vec<Relation<F>>,
    pub loewy_bound: usize,
}

impl<F: Field> AlgebraPresentation<F> {
    pub fn new(name: &str, quiver: Quiver, field: F) -> Self {
        AlgebraPresentation { name: name.to_string(), quiver, field, relations: Vec::new(), loewy_bound: DEFAULT_LOEWY_BOUND }
    }

    /// Adds `sum c_i * path_i = 0`, paths given by arrow names in travel order.
    pub fn with_relation(mut self, terms: &[(i64, &[&str])]) -> Result<Self> {
        let mut rel = Vec::new();
        for (c, names) in terms {
            rel.push((self.field.from_i64(*c), self.quiver.path(names)?));
        }
        self.relations.push(Relation { terms: rel });
        Ok(self)
    }

    pub fn with_loewy_bound(mut self, bound: usize) -> Self {
        self.loewy_bound = bound;
        self
    }

    fn check_relations(&self) -> Result<()> {
        let q = &self.quiver;
        for r in &self.relations {
            let shown = r.display(&self.field, q);
            let Some((_, first)) = r.terms.first() else {
                return Err(Error::NotAdmissible(format!("empty relation `{shown}`")));
            };
            let (s, t, l) = (first.source(), first.target(q), first.len());
            for (_, p) in &r.terms {
                if p.len() < 2 {
                    return Err(Error::NotAdmissible(format!("path `{}` in `{shown}` has length < 2", p.display(q))));
                }
                if p.source() != s || p.target(q) != t {
                    return Err(Error::NotAdmissible(format!("`{shown}` mixes paths with different endpoints")));
                }
                if p.len() != l {
                    return Err(Error::Inhomogeneous(shown.clone()));
                }
            }
        }
        Ok(())
    }
}

/// A residue class of a path, chosen as a basis element of `kQ/I`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BasisPath {
    pub path: Path,
    pub source: usize,
    pub target: usize,
}

/// Sparse combination of basis paths.
pub type Combination<F> = Vec<(<F as Field>::Elem, usize)>;

/// The path basis of `kQ/I` together with its multiplication tables.
#[derive(Clone, Debug, PartialEq)]
pub struct PathBasis<F: Field> {
    elements: Vec<BasisPath>,
    degree_of: Vec<usize>,
    /// For each basis element and arrow leaving its target: the reduced
    /// class of "element, then arrow".
    extend: Vec<BTreeMap<usize, Combination<F>>>,
    by_pair: BTreeMap<(usize, usize), Vec<usize>>,
    max_degree: usize,
}

impl<F: Field> PathBasis<F> {
    pub fn total_dimension(&self) -> usize {
        self.elements.len()
    }
    pub fn elements(&self) -> &[BasisPath] {
        &self.elements
    }
    pub fn element(&self, i: usize) -> &BasisPath {
        &self.elements[i]
    }
    pub fn degree(&self, i: usize) -> usize {
        self.degree_of[i]
    }
    pub fn max_degree(&self) -> usize {
        self.max_degree
    }

    /// Basis elements that are classes of paths `source -> target`.
    pub fn between(&self, source: usize, target: usize) -> &[usize] {
        self.by_pair.get(&(source, target)).map_or(&[], |v| v.as_slice())
    }

    /// Index of the idempotent `e_v`.
    pub fn idempotent(&self, v: usize) -> usize {
        self.elements.iter().position(|b| b.path.is_empty() && b.source == v).expect("vertex idempotent")
    }

    /// Class of "basis element `i`, then arrow `a`".
    pub fn append_arrow(&self, field: &F, i: usize, a: usize) -> Combination<F> {
        let _ = field;
        self.extend[i].get(&a).cloned().unwrap_or_default()
    }

    fn append_to_combination(&self, field: &F, comb: &Combination<F>, a: usize) -> Combination<F> {
        let mut acc: BTreeMap<usize, F::Elem> = BTreeMap::new();
        for (c, i) in comb {
            for (d, j) in self.append_arrow(field, *i, a) {
                let e = acc.entry(j).or_insert_with(|| field.zero());
                *e = field.add(e, &field.mul(c, &d));
            }
        }
        acc.into_iter().filter(|(_, c)| !field.is_zero(c)).map(|(j, c)| (c, j)).collect()
    }

    /// Normal form of an arbitrary path.
    pub fn reduce_path(&self, field: &F, path: &Path) -> Combination<F> {
        let mut comb = vec![(field.one(), self.idempotent(path.start))];
        for &a in &path.arrows {
            comb = self.append_to_combination(field, &comb, a);
        }
        comb
    }

    /// Product "first `i`, then `j`" of two basis elements.
    pub fn multiply(&self, field: &F, i: usize, j: usize) -> Combination<F> {
        let (bi, bj) = (&self.elements[i], &self.elements[j]);
        if bi.target != bj.source {
            return Vec::new();
        }
        let mut comb = vec![(field.one(), i)];
        for &a in &bj.path.arrows {
            comb = self.append_to_combination(field, &comb, a);
        }
        comb
    }
}

/// A presentation together with its computed path basis.
#[derive(Clone, Debug, PartialEq)]
pub struct Algebra<F: Field> {
    presentation: AlgebraPresentation<F>,
    basis: PathBasis<F>,
}

impl<F: Field> Algebra<F> {
    pub fn presentation(&self) -> &AlgebraPresentation<F> {
        &self.presentation
    }
    pub fn basis(&self) -> &PathBasis<F> {
        &self.basis
    }
    pub fn quiver(&self) -> &Quiver {
        &self.presentation.quiver
    }
    pub fn field(&self) -> &F {
        &self.presentation.field
    }
    pub fn relations(&self) -> &[Relation<F>] {
        &self.presentation.relations
    }
    pub fn name(&self) -> &str {
        &self.presentation.name
    }
    pub fn dimension(&self) -> usize {
        self.basis.total_dimension()
    }
    pub fn is_hereditary_presentation(&self) -> bool {
        self.presentation.relations.is_empty()
    }
}

/// Computes the path basis of `kQ/I` degree by degree.
///
/// In degree `d` the candidates are "basis element of degree `d-1`, then an
/// arrow"; the relations of length `l` contribute the classes of
/// "basis element of degree `d-l`, then the relation". Candidates are
/// eliminated from the back, so the lexicographically first paths survive.
pub fn path_basis<F: Field>(presentation: AlgebraPresentation<F>) -> Result<Arc<Algebra<F>>> {
    presentation.check_relations()?;
    let k = presentation.field.clone();
    let q = &presentation.quiver;

    let mut elements: Vec<BasisPath> = Vec::new();
    let mut degree_of = Vec::new();
    let mut extend: Vec<BTreeMap<usize, Combination<F>>> = Vec::new();
    let mut by_degree: Vec<Vec<usize>> = Vec::new();

    let mut deg0 = Vec::new();
    for v in 0..q.vertex_count() {
        deg0.push(elements.len());
        elements.push(BasisPath { path: Path::trivial(v), source: v, target: v });
        degree_of.push(0);
        extend.push(BTreeMap::new());
    }
    by_degree.push(deg0);

    let mut max_degree = 0;
    let bound = presentation.loewy_bound.max(1);
    for d in 1..=bound {
        // candidates of degree d
        let mut cands: Vec<(usize, usize)> = Vec::new();
        for &n in &by_degree[d - 1] {
            for (a, arrow) in q.arrows().iter().enumerate() {
                if arrow.source == elements[n].target {
                    cands.push((n, a));
                }
            }
        }
        let cand_index: BTreeMap<(usize, usize), usize> = cands.iter().enumerate().map(|(i, &c)| (c, i)).collect();

        // Partial table so relations of degree d can be expressed through the candidates.
        let partial = PathBasis {
            elements: elements.clone(),
            degree_of: degree_of.clone(),
            extend: extend.clone(),
            by_pair: BTreeMap::new(),
            max_degree: d - 1,
        };
        let mut rel_rows: Vec<Vec<F::Elem>> = Vec::new();
        for r in &presentation.relations {
            let l = r.terms[0].1.len();
            if l > d {
                continue;
            }
            let src = r.terms[0].1.source();
            for &n in &by_degree[d - l] {
                if elements[n].target != src {
                    continue;
                }
                let mut row = vec![k.zero(); cands.len()];
                for (lambda, p) in &r.terms {
                    let (last, init) = p.arrows.split_last().expect("relation paths have length >= 2");
                    let mut comb = vec![(k.one(), n)];
                    for &a in init {
                        comb = partial.append_to_combination(&k, &comb, a);
                    }
                    for (mu, m) in comb {
                        let ci = cand_index[&(m, *last)];
                        row[ci] = k.add(&row[ci], &k.mul(lambda, &mu));
                    }
                }
                rel_rows.push(row);
            }
        }

        // Reversed column order: later candidates become pivots and are eliminated.
        let nc = cands.len();
        let rel = Mat::from_fn(&k, rel_rows.len(), nc, |r, c| rel_rows[r][nc - 1 - c].clone());
        let rr = rel.rref();
        let pivot_cands: Vec<usize> = rr.pivots.iter().map(|&c| nc - 1 - c).collect();
        let mut new_index: BTreeMap<usize, usize> = BTreeMap::new();
        let mut deg_d = Vec::new();
        for (ci, &(n, a)) in cands.iter().enumerate() {
            if pivot_cands.contains(&ci) {
                continue;
            }
            let idx = elements.len();
            let mut arrows = elements[n].path.arrows.clone();
            arrows.push(a);
            elements.push(BasisPath {
                path: Path { start: elements[n].source, arrows },
                source: elements[n].source,
                target: q.arrow(a).target,
            });
            degree_of.push(d);
            extend.push(BTreeMap::new());
            new_index.insert(ci, idx);
            deg_d.push(idx);
        }
        for (ci, &(n, a)) in cands.iter().enumerate() {
            let comb: Combination<F> = if let Some(&idx) = new_index.get(&ci) {
                vec![(k.one(), idx)]
            } else {
                let row = rr.pivots.iter().position(|&c| nc - 1 - c == ci).expect("pivot row");
                let mut comb = Vec::new();
                for (&cj, &idx) in &new_index {
                    let coeff = rr.reduced.get(row, nc - 1 - cj);
                    if !k.is_zero(coeff) {
                        comb.push((k.neg(coeff), idx));
                    }
                }
                comb
            };
            extend[n].insert(a, comb);
        }
        if deg_d.is_empty() {
            break;
        }
        if d == bound {
            return Err(Error::BoundExceeded { bound });
        }
        max_degree = d;
        by_degree.push(deg_d);
    }

    let mut by_pair: BTreeMap<(usize, usize), Vec<usize>> = BTreeMap::new();
    for (i, b) in elements.iter().enumerate() {
        by_pair.entry((b.source, b.target)).or_default().push(i);
    }
    let basis = PathBasis { elements, degree_of, extend, by_pair, max_degree };
    Ok(Arc::new(Algebra { presentation, basis }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Rationals;

    fn kronecker() -> AlgebraPresentation<Rationals> {
        let q = Quiver::from_names(&["a", "b"], &[("alpha", "a", "b"), ("beta", "a", "b")]).unwrap();
        AlgebraPresentation::new("K2", q, Rationals).with_loewy_bound(2)
    }

    #[test]
    fn kronecker_has_dimension_four() {
        let alg = path_basis(kronecker()).unwrap();
        assert_eq!(alg.dimension(), 4);
        assert_eq!(alg.basis().between(0, 1).len(), 2);
    }

    #[test]
    fn truncated_loop() {
        let q = Quiver::from_names(&["v"], &[("x", "v", "v")]).unwrap();
        let p = AlgebraPresentation::new("dual numbers", q, Rationals).with_relation(&[(1, &["x", "x"])]).unwrap();
        let alg = path_basis(p).unwrap();
        assert_eq!(alg.dimension(), 2);
    }

    #[test]
    fn arrow_and_cubed_loop() {
        // Paths a -> b: alpha, alpha beta, alpha beta beta; b -> b: e_b, beta, beta^2.
        let q = Quiver::from_names(&["a", "b"], &[("alpha", "a", "b"), ("beta", "b", "b")]).unwrap();
        let p = AlgebraPresentation::new("loop", q, Rationals)
            .with_relation(&[(1, &["beta", "beta", "beta"])])
            .unwrap()
            .with_loewy_bound(4);
        let alg = path_basis(p).unwrap();
        assert_eq!(alg.basis().between(0, 1).len(), 3);
        assert_eq!(alg.basis().between(1, 1).len(), 3);
        assert_eq!(alg.dimension(), 1 + 3 + 3);
    }

    #[test]
    fn admissibility_errors() {
        let q = Quiver::from_names(&["v"], &[("x", "v", "v")]).unwrap();
        let short = AlgebraPresentation::new("bad", q.clone(), Rationals).with_relation(&[(1, &["x"])]).unwrap();
        assert!(matches!(path_basis(short), Err(Error::NotAdmissible(_))));
        let free_loop = AlgebraPresentation::new("free", q, Rationals).with_loewy_bound(5);
        assert_eq!(path_basis(free_loop).unwrap_err(), Error::BoundExceeded { bound: 5 });
    }

    #[test]
    fn multiplication_is_associative_with_commutativity_relation() {
        let q = Quiver::from_names(
            &["a", "b", "c"],
            &[("alpha", "a", "b"), ("beta", "a", "b"), ("gamma", "b", "c"), ("delta", "b", "c")],
        )
        .unwrap();
        let p = AlgebraPresentation::new("A", q, Rationals)
            .with_relation(&[(1, &["alpha", "delta"])])
            .unwrap()
            .with_relation(&[(1, &["beta", "gamma"])])
            .unwrap()
            .with_relation(&[(1, &["alpha", "gamma"]), (-1, &["beta", "delta"])])
            .unwrap();
        let alg = path_basis(p).unwrap();
        let k = Rationals;
        assert_eq!(alg.basis().between(0, 2).len(), 1);
        let n = alg.dimension();
        let expand = |comb: Combination<Rationals>, right: usize| -> BTreeMap<usize, num_rational::BigRational> {
            let mut acc = BTreeMap::new();
            for (c, i) in comb {
                for (d, j) in alg.basis().multiply(&k, i, right) {
                    let e = acc.entry(j).or_insert_with(|| k.zero());
                    *e = k.add(e, &k.mul(&c, &d));
                }
            }
            acc.into_iter().filter(|(_, c)| !k.is_zero(c)).collect()
        };
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    let left = expand(alg.basis().multiply(&k, a, b), c);
                    let bc = alg.basis().multiply(&k, b, c);
                    let mut right = BTreeMap::new();
                    for (d, j) in bc {
                        for (e, m) in alg.basis().multiply(&k, a, j) {
                            let x = right.entry(m).or_insert_with(|| k.zero());
                            *x = k.add(x, &k.mul(&d, &e));
                        }
                    }
                    let right: BTreeMap<_, _> = right.into_iter().filter(|(_, c)| !k.is_zero(c)).collect();
                    assert_eq!(left, right);
                }
            }
        }
    }
}
