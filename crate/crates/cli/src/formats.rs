//! Line-oriented text formats for algebras, modules and homomorphisms.
//!
//! Blank lines and lines starting with `#` are ignored.

use std::fmt::Write as _;
use std::sync::Arc;

use prufer_core::algebra::{path_basis, Algebra, AlgebraPresentation, Path, Quiver, Relation};
use prufer_core::rep::{ModHom, Rep};
use prufer_core::{Field, Mat, PrimeField, Rationals};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum FormatError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("{0}")]
    Invalid(#[from] prufer_core::Error),
}

fn syntax(line: usize, message: impl Into<String>) -> FormatError {
    FormatError::Syntax { line, message: message.into() }
}

type Result<T> = std::result::Result<T, FormatError>;

/// An algebra over whichever field its header names.
#[derive(Clone, Debug)]
pub enum AnyAlgebra {
    Q(Arc<Algebra<Rationals>>),
    Gf(Arc<Algebra<PrimeField>>),
}

fn lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

fn keyword(line: &str) -> (&str, &str) {
    match line.split_once(char::is_whitespace) {
        Some((k, rest)) => (k, rest.trim()),
        None => (line, ""),
    }
}

struct AlgebraSkeleton {
    name: String,
    field: String,
    vertices: Vec<String>,
    arrows: Vec<(String, String, String)>,
    relations: Vec<(usize, String)>,
    loewy_bound: Option<usize>,
}

pub fn parse_algebra(text: &str) -> Result<AnyAlgebra> {
    let mut sk = AlgebraSkeleton {
        name: String::new(),
        field: String::new(),
        vertices: Vec::new(),
        arrows: Vec::new(),
        relations: Vec::new(),
        loewy_bound: None,
    };
    let mut header = false;
    for (n, line) in lines(text) {
        let (kw, rest) = keyword(line);
        if !header && kw != "algebra" {
            return Err(syntax(n, "expected `algebra NAME over FIELD`"));
        }
        match kw {
            "algebra" => {
                if header {
                    return Err(syntax(n, "second `algebra` header"));
                }
                let (name, field) = rest
                    .split_once(" over ")
                    .ok_or_else(|| syntax(n, "expected `algebra NAME over Q` or `over GF(p)`"))?;
                sk.name = name.trim().to_string();
                sk.field = field.trim().to_string();
                header = true;
            }
            "vertex" => sk.vertices.extend(rest.split_whitespace().map(str::to_string)),
            "arrow" => {
                let (name, ends) = rest.split_once(':').ok_or_else(|| syntax(n, "expected `arrow NAME : a -> b`"))?;
                let (s, t) = ends.split_once("->").ok_or_else(|| syntax(n, "expected `arrow NAME : a -> b`"))?;
                sk.arrows.push((name.trim().to_string(), s.trim().to_string(), t.trim().to_string()));
            }
            "relation" => sk.relations.push((n, rest.to_string())),
            "loewybound" => {
                sk.loewy_bound = Some(rest.parse().map_err(|_| syntax(n, format!("invalid loewy bound `{rest}`")))?);
            }
            _ => return Err(syntax(n, format!("unknown declaration `{kw}`"))),
        }
    }
    if !header {
        return Err(syntax(1, "missing `algebra` header"));
    }
    if sk.field == "Q" {
        return Ok(AnyAlgebra::Q(build_algebra(&sk, Rationals)?));
    }
    let p = sk
        .field
        .strip_prefix("GF(")
        .and_then(|s| s.strip_suffix(')'))
        .and_then(|s| s.trim().parse::<u64>().ok())
        .ok_or_else(|| syntax(1, format!("unknown field `{}`", sk.field)))?;
    Ok(AnyAlgebra::Gf(build_algebra(&sk, PrimeField::new(p)?)?))
}

fn build_algebra<F: Field>(sk: &AlgebraSkeleton, k: F) -> Result<Arc<Algebra<F>>> {
    let quiver = Quiver::new(sk.vertices.clone(), sk.arrows.clone())?;
    let mut pres = AlgebraPresentation::new(&sk.name, quiver, k);
    for (n, text) in &sk.relations {
        let rel = parse_relation(&pres.field, &pres.quiver, text).map_err(|m| syntax(*n, m))?;
        pres.relations.push(rel);
    }
    if let Some(b) = sk.loewy_bound {
        pres = pres.with_loewy_bound(b);
    }
    Ok(path_basis(pres)?)
}

/// `c1*x*y - c2*z*w = 0`, paths in travel order; a missing coefficient is 1.
fn parse_relation<F: Field>(k: &F, q: &Quiver, text: &str) -> std::result::Result<Relation<F>, String> {
    let (lhs, rhs) = text.split_once('=').ok_or("expected `... = 0`")?;
    if rhs.trim() != "0" {
        return Err("right-hand side must be 0".into());
    }
    let mut terms = Vec::new();
    let mut sign = 1;
    let mut current = String::new();
    let mut flush = |sign: i64, s: &str| -> std::result::Result<(), String> {
        let s = s.trim();
        if s.is_empty() {
            return Err("empty term".into());
        }
        let parts: Vec<&str> = s.split('*').map(str::trim).collect();
        let starts_numeric = parts[0].chars().next().is_some_and(|c| c.is_ascii_digit());
        let (coef, names) = if starts_numeric {
            (k.parse(parts[0]).map_err(|e| e.to_string())?, &parts[1..])
        } else {
            (k.one(), &parts[..])
        };
        let coef = if sign < 0 { k.neg(&coef) } else { coef };
        if names.is_empty() {
            return Err(format!("term `{s}` has no path"));
        }
        let path: Path = q.path(names).map_err(|e| e.to_string())?;
        terms.push((coef, path));
        Ok(())
    };
    for ch in lhs.chars() {
        if (ch == '+' || ch == '-') && !current.trim().is_empty() {
            flush(sign, &current)?;
            current.clear();
            sign = if ch == '-' { -1 } else { 1 };
        } else if ch == '+' || ch == '-' {
            if ch == '-' {
                sign = -sign;
            }
        } else {
            current.push(ch);
        }
    }
    flush(sign, &current)?;
    Ok(Relation { terms })
}

pub fn emit_algebra<F: Field>(alg: &Algebra<F>) -> String {
    let q = alg.quiver();
    let mut s = String::new();
    let _ = writeln!(s, "algebra {} over {}", alg.name(), alg.field().spec());
    let _ = writeln!(s, "vertex {}", q.vertices().join(" "));
    for a in q.arrows() {
        let _ = writeln!(s, "arrow {} : {} -> {}", a.name, q.vertices()[a.source], q.vertices()[a.target]);
    }
    for r in alg.relations() {
        let _ = writeln!(s, "relation {}", r.display(alg.field(), q));
    }
    let _ = writeln!(s, "loewybound {}", alg.presentation().loewy_bound);
    s
}

/// `[[1,0],[0,1]]`; `[]` stands for any matrix with no entries.
fn parse_matrix<F: Field>(k: &F, text: &str, rows: usize, cols: usize) -> std::result::Result<Mat<F>, String> {
    let t: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    let inner = t.strip_prefix('[').and_then(|s| s.strip_suffix(']')).ok_or("matrix must be `[[...],...]`")?;
    let mut entries = Vec::new();
    if !inner.is_empty() {
        let body = inner.strip_prefix('[').and_then(|s| s.strip_suffix(']')).ok_or("rows must be bracketed")?;
        for row in body.split("],[") {
            if row.contains('[') || row.contains(']') {
                return Err("malformed row".into());
            }
            let vals: Vec<F::Elem> = if row.is_empty() {
                Vec::new()
            } else {
                row.split(',').map(|x| k.parse(x).map_err(|e| e.to_string())).collect::<std::result::Result<_, _>>()?
            };
            entries.push(vals);
        }
    }
    if entries.is_empty() && rows * cols == 0 {
        return Ok(Mat::zeros(k, rows, cols));
    }
    if entries.len() != rows || entries.iter().any(|r| r.len() != cols) {
        let got_cols = entries.first().map_or(0, Vec::len);
        return Err(format!("expected a {rows}x{cols} matrix, found {}x{got_cols}", entries.len()));
    }
    Mat::from_rows(k, rows, cols, entries).map_err(|e| e.to_string())
}

pub fn format_matrix<F: Field>(m: &Mat<F>) -> String {
    if m.rows() == 0 {
        return "[]".into();
    }
    let k = m.field();
    let rows: Vec<String> = (0..m.rows())
        .map(|r| format!("[{}]", m.row(r).iter().map(|x| k.format(x)).collect::<Vec<_>>().join(",")))
        .collect();
    format!("[{}]", rows.join(","))
}

/// A parsed module file: its name and the representation.
#[derive(Clone, Debug)]
pub struct NamedRep<F: Field> {
    pub name: String,
    pub rep: Rep<F>,
}

pub fn parse_module<F: Field>(alg: &Arc<Algebra<F>>, text: &str) -> Result<NamedRep<F>> {
    let q = alg.quiver();
    let k = alg.field();
    let mut name = None;
    let mut dims = vec![0; q.vertex_count()];
    let mut mats: Vec<Option<(usize, String)>> = vec![None; q.arrow_count()];
    for (n, line) in lines(text) {
        let (kw, rest) = keyword(line);
        if name.is_none() && kw != "module" {
            return Err(syntax(n, "expected `module NAME over ALGEBRA`"));
        }
        match kw {
            "module" => {
                if name.is_some() {
                    return Err(syntax(n, "second `module` header"));
                }
                let (nm, over) =
                    rest.split_once(" over ").ok_or_else(|| syntax(n, "expected `module NAME over ALGEBRA`"))?;
                if over.trim() != alg.name() {
                    return Err(syntax(n, format!("module is over `{}`, loaded algebra is `{}`", over.trim(), alg.name())));
                }
                name = Some(nm.trim().to_string());
            }
            "dim" => {
                let (v, d) = rest.split_once('=').ok_or_else(|| syntax(n, "expected `dim VERTEX = N`"))?;
                let v = q.vertex_index(v.trim()).map_err(|e| syntax(n, e.to_string()))?;
                dims[v] = d.trim().parse().map_err(|_| syntax(n, format!("invalid dimension `{}`", d.trim())))?;
            }
            "matrix" => {
                let (a, m) = rest.split_once('=').ok_or_else(|| syntax(n, "expected `matrix ARROW = [[...]]`"))?;
                let a = q.arrow_index(a.trim()).map_err(|e| syntax(n, e.to_string()))?;
                mats[a] = Some((n, m.trim().to_string()));
            }
            _ => return Err(syntax(n, format!("unknown declaration `{kw}`"))),
        }
    }
    let name = name.ok_or_else(|| syntax(1, "missing `module` header"))?;
    let mut action = Vec::new();
    for (i, a) in q.arrows().iter().enumerate() {
        let (r, c) = (dims[a.target], dims[a.source]);
        action.push(match &mats[i] {
            Some((n, text)) => parse_matrix(k, text, r, c).map_err(|m| syntax(*n, format!("arrow `{}`: {m}", a.name)))?,
            None => Mat::zeros(k, r, c),
        });
    }
    Ok(NamedRep { name, rep: Rep::new(alg.clone(), dims, action)? })
}

pub fn emit_module<F: Field>(name: &str, m: &Rep<F>) -> String {
    let q = m.algebra().quiver();
    let mut s = String::new();
    let _ = writeln!(s, "module {name} over {}", m.algebra().name());
    for (v, d) in q.vertices().iter().zip(m.dims()) {
        let _ = writeln!(s, "dim {v} = {d}");
    }
    for (a, mat) in q.arrows().iter().zip(m.actions()) {
        let _ = writeln!(s, "matrix {} = {}", a.name, format_matrix(mat));
    }
    s
}

#[derive(Clone, Debug)]
pub struct NamedHom<F: Field> {
    pub name: String,
    pub source: String,
    pub target: String,
    pub hom: ModHom<F>,
}

/// `hom NAME : SOURCE -> TARGET` followed by `block VERTEX = [[...]]`; the
/// module names are looked up in `modules`.
pub fn parse_hom<F: Field>(modules: &[NamedRep<F>], text: &str) -> Result<NamedHom<F>> {
    let mut header: Option<(String, &NamedRep<F>, &NamedRep<F>)> = None;
    let mut blocks: Vec<(usize, String, String)> = Vec::new();
    for (n, line) in lines(text) {
        let (kw, rest) = keyword(line);
        match (kw, &header) {
            ("hom", None) => {
                let (nm, ends) = rest.split_once(':').ok_or_else(|| syntax(n, "expected `hom NAME : M -> N`"))?;
                let (s, t) = ends.split_once("->").ok_or_else(|| syntax(n, "expected `hom NAME : M -> N`"))?;
                let find = |x: &str| {
                    modules
                        .iter()
                        .find(|m| m.name == x.trim())
                        .ok_or_else(|| syntax(n, format!("unknown module `{}`", x.trim())))
                };
                header = Some((nm.trim().to_string(), find(s)?, find(t)?));
            }
            ("hom", Some(_)) => return Err(syntax(n, "second `hom` header")),
            (_, None) => return Err(syntax(n, "expected `hom NAME : M -> N`")),
            ("block", Some(_)) => {
                let (v, m) = rest.split_once('=').ok_or_else(|| syntax(n, "expected `block VERTEX = [[...]]`"))?;
                blocks.push((n, v.trim().to_string(), m.trim().to_string()));
            }
            _ => return Err(syntax(n, format!("unknown declaration `{kw}`"))),
        }
    }
    let (name, src, tgt) = header.ok_or_else(|| syntax(1, "missing `hom` header"))?;
    let alg = src.rep.algebra();
    let q = alg.quiver();
    let k = alg.field();
    let mut mats: Vec<Mat<F>> =
        (0..q.vertex_count()).map(|v| Mat::zeros(k, tgt.rep.dim(v), src.rep.dim(v))).collect();
    for (n, v, text) in blocks {
        let vi = q.vertex_index(&v).map_err(|e| syntax(n, e.to_string()))?;
        mats[vi] = parse_matrix(k, &text, tgt.rep.dim(vi), src.rep.dim(vi))
            .map_err(|m| syntax(n, format!("vertex `{v}`: {m}")))?;
    }
    let hom = ModHom::new(&src.rep, &tgt.rep, mats)?;
    Ok(NamedHom { name, source: src.name.clone(), target: tgt.name.clone(), hom })
}

pub fn emit_hom<F: Field>(name: &str, source: &str, target: &str, f: &ModHom<F>) -> String {
    let q = f.source().algebra().quiver();
    let mut s = String::new();
    let _ = writeln!(s, "hom {name} : {source} -> {target}");
    for (v, b) in q.vertices().iter().zip(f.blocks()) {
        let _ = writeln!(s, "block {v} = {}", format_matrix(b));
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    const KRONECKER: &str = "\
# two arrows
algebra kronecker over Q
vertex a b
arrow alpha : a -> b
arrow beta : a -> b
";

    fn kronecker() -> Arc<Algebra<Rationals>> {
        match parse_algebra(KRONECKER).unwrap() {
            AnyAlgebra::Q(a) => a,
            AnyAlgebra::Gf(_) => panic!("expected Q"),
        }
    }

    #[test]
    fn relations_with_signs_and_fractions() {
        let text = "algebra t over Q\nvertex a b c\narrow x : a -> b\narrow y : a -> b\narrow z : b -> c\n\
                    relation 1/2*x*z - y*z = 0\n";
        let AnyAlgebra::Q(alg) = parse_algebra(text).unwrap() else { panic!() };
        let r = &alg.relations()[0];
        assert_eq!(r.terms.len(), 2);
        assert_eq!(Rationals.format(&r.terms[0].0), "1/2");
        assert_eq!(Rationals.format(&r.terms[1].0), "-1");
    }

    #[test]
    fn matrix_shapes_are_checked() {
        let alg = kronecker();
        let text = "module m over kronecker\ndim a = 1\ndim b = 2\nmatrix alpha = [[1,0]]\n";
        let err = parse_module(&alg, text).unwrap_err();
        assert!(matches!(err, FormatError::Syntax { line: 4, .. }), "{err}");
    }

    #[test]
    fn module_over_wrong_algebra() {
        let err = parse_module(&kronecker(), "module m over d4\n").unwrap_err();
        assert!(matches!(err, FormatError::Syntax { line: 1, .. }));
    }

    fn round_trip<F: Field>(alg: &Arc<Algebra<F>>, modules: &[&str], homs: &[&str]) {
        let mut loaded = Vec::new();
        for text in modules {
            let m = parse_module(alg, text).unwrap();
            let again = parse_module(alg, &emit_module(&m.name, &m.rep)).unwrap();
            assert_eq!((&again.name, &again.rep), (&m.name, &m.rep));
            loaded.push(m);
        }
        for text in homs {
            let h = parse_hom(&loaded, text).unwrap();
            let again = parse_hom(&loaded, &emit_hom(&h.name, &h.source, &h.target, &h.hom)).unwrap();
            assert_eq!(again.hom, h.hom);
            assert_eq!((again.name, again.source, again.target), (h.name, h.source, h.target));
        }
    }

    #[test]
    fn files_round_trip() {
        let AnyAlgebra::Q(kr) = parse_algebra(include_str!("../data/kronecker.alg")).unwrap() else { panic!() };
        let AnyAlgebra::Q(again) = parse_algebra(&emit_algebra(&kr)).unwrap() else { panic!() };
        assert_eq!(again.presentation(), kr.presentation());
        round_trip(
            &kr,
            &[include_str!("../data/kronecker_pb.mod"), include_str!("../data/kronecker_pa.mod")],
            &[include_str!("../data/kronecker_w.hom"), include_str!("../data/kronecker_v.hom")],
        );
        let AnyAlgebra::Gf(d4) = parse_algebra(include_str!("../data/d4.alg")).unwrap() else { panic!() };
        round_trip(
            &d4,
            &[include_str!("../data/d4_u0.mod"), include_str!("../data/d4_u1.mod")],
            &[include_str!("../data/d4_w.hom"), include_str!("../data/d4_v.hom")],
        );
        let AnyAlgebra::Q(ts) = parse_algebra(include_str!("../data/two_step.alg")).unwrap() else { panic!() };
        let again = match parse_algebra(&emit_algebra(&ts)).unwrap() {
            AnyAlgebra::Q(a) => a,
            AnyAlgebra::Gf(_) => panic!(),
        };
        assert_eq!(again.presentation(), ts.presentation());
        assert_eq!(again.dimension(), 8);
        round_trip(&ts, &[include_str!("../data/two_step_h.mod")], &[]);
    }

    #[test]
    fn empty_matrices() {
        let alg = kronecker();
        let m = parse_module(&alg, "module pb over kronecker\ndim b = 1\nmatrix alpha = []\n").unwrap();
        assert_eq!(m.rep.dims(), [0, 1]);
        assert_eq!(format_matrix(m.rep.action(0)), "[[]]");
    }
}
