//! Pushout ladders of finitely generated abelian groups, starting from
//! `w, v: Z -> Z`, computed with integer presentations and Smith normal form.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::snf::{cokernel_invariants, IntMat};

/// `Z^n / rowspace(relations)` together with its invariant factors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AbGroup {
    pub generators: usize,
    pub relations: IntMat,
    /// Non-unit invariant factors in divisibility order, then a `0` per free
    /// summand.
    pub invariants: Vec<BigInt>,
}

impl AbGroup {
    pub fn new(generators: usize, relations: IntMat) -> Self {
        let invariants = if relations.rows == 0 {
            (0..generators).map(|_| BigInt::zero()).collect()
        } else {
            cokernel_invariants(&relations)
        };
        AbGroup { generators, relations, invariants }
    }

    pub fn free_rank(&self) -> usize {
        self.invariants.iter().filter(|d| d.is_zero()).count()
    }

    pub fn torsion(&self) -> Vec<BigInt> {
        self.invariants.iter().filter(|d| !d.is_zero()).cloned().collect()
    }

    /// `None` for infinite groups.
    pub fn order(&self) -> Option<BigInt> {
        (self.free_rank() == 0).then(|| self.invariants.iter().fold(BigInt::one(), |acc, d| acc * d))
    }

    pub fn is_trivial(&self) -> bool {
        self.invariants.is_empty()
    }

    pub fn is_cyclic(&self) -> bool {
        self.invariants.len() <= 1
    }

    /// Least common multiple of the torsion orders (`None` if infinite).
    pub fn exponent(&self) -> Option<BigInt> {
        (self.free_rank() == 0).then(|| self.invariants.iter().fold(BigInt::one(), |acc, d| acc.lcm(d)))
    }
}

impl core::fmt::Display for AbGroup {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        if self.is_trivial() {
            return write!(f, "0");
        }
        for (i, d) in self.invariants.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            if d.is_zero() {
                write!(f, "Z")?;
            } else {
                write!(f, "Z/{d}")?;
            }
        }
        Ok(())
    }
}

/// A presented group with homomorphisms acting on row vectors:
/// `x ↦ x M` for an `n_source x n_target` matrix `M`.
#[derive(Clone, Debug)]
struct Presented {
    gens: usize,
    rels: Vec<Vec<BigInt>>,
}

fn mat_rows(m: &IntMat) -> Vec<Vec<BigInt>> {
    (0..m.rows).map(|r| (0..m.cols).map(|c| m.get(r, c).clone()).collect()).collect()
}

fn from_rows(rows: &[Vec<BigInt>], cols: usize) -> IntMat {
    let mut m = IntMat::zeros(rows.len(), cols);
    for (r, row) in rows.iter().enumerate() {
        for (c, x) in row.iter().enumerate() {
            m.set(r, c, x.clone());
        }
    }
    m
}

/// Pushout of `f: A -> B1`, `g: A -> B2`; returns `Z` with `g': B1 -> Z` and
/// `f': B2 -> Z`.
fn pushout(a: &Presented, b1: &Presented, b2: &Presented, f: &IntMat, g: &IntMat) -> (Presented, IntMat, IntMat) {
    let n = b1.gens + b2.gens;
    let mut rels = Vec::new();
    for r in &b1.rels {
        let mut row = r.clone();
        row.resize(n, BigInt::zero());
        rels.push(row);
    }
    for r in &b2.rels {
        let mut row = alloc::vec![BigInt::zero(); b1.gens];
        row.extend(r.iter().cloned());
        rels.push(row);
    }
    for i in 0..a.gens {
        let mut row: Vec<BigInt> = (0..b1.gens).map(|c| f.get(i, c).clone()).collect();
        row.extend((0..b2.gens).map(|c| -g.get(i, c)));
        rels.push(row);
    }
    let mut gp = IntMat::zeros(b1.gens, n);
    for i in 0..b1.gens {
        gp.set(i, i, BigInt::one());
    }
    let mut fp = IntMat::zeros(b2.gens, n);
    for i in 0..b2.gens {
        fp.set(i, b1.gens + i, BigInt::one());
    }
    (Presented { gens: n, rels }, gp, fp)
}

/// The truncations `H[k] = U_k / U_0`, `k = 1..=depth`, of the ladder seeded
/// by multiplication by `w` and `v` on `Z`.
pub fn z_ladder(w: i64, v: i64, depth: usize) -> Result<Vec<AbGroup>> {
    if w == 0 {
        return Err(Error::ZeroMap);
    }
    let z = Presented { gens: 1, rels: Vec::new() };
    let mut modules = alloc::vec![z.clone(), z];
    let mut ws = alloc::vec![IntMat::from_i64(1, 1, &[w])];
    let mut vs = alloc::vec![IntMat::from_i64(1, 1, &[v])];
    for i in 0..depth.saturating_sub(1) {
        let (zmod, gp, fp) = pushout(&modules[i], &modules[i + 1], &modules[i + 1], &ws[i], &vs[i]);
        modules.push(zmod);
        vs.push(gp);
        ws.push(fp);
    }
    let mut out = Vec::new();
    let mut composite = IntMat::identity(1);
    for k in 1..=depth {
        composite = composite.mul(&ws[k - 1]);
        let uk = &modules[k];
        let mut rows = uk.rels.clone();
        rows.extend(mat_rows(&composite));
        out.push(AbGroup::new(uk.gens, from_rows(&rows, uk.gens)));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prufer_two_group() {
        let hs = z_ladder(2, 3, 4).unwrap();
        for (k, h) in hs.iter().enumerate() {
            assert!(h.is_cyclic());
            assert_eq!(h.order(), Some(BigInt::from(1u64 << (k + 1))));
        }
    }

    #[test]
    fn elementary_abelian() {
        let hs = z_ladder(2, 2, 3).unwrap();
        for (k, h) in hs.iter().enumerate() {
            assert_eq!(h.invariants, alloc::vec![BigInt::from(2); k + 1]);
        }
    }

    #[test]
    fn split_seed_and_zero_map() {
        assert!(z_ladder(1, 5, 3).unwrap().iter().all(AbGroup::is_trivial));
        assert_eq!(z_ladder(0, 1, 2), Err(Error::ZeroMap));
    }
}
