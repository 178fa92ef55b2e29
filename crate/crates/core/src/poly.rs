//! Univariate polynomials over an exact field, minimal polynomials of
//! matrices, and the factorizations needed to split endomorphisms.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand_core::RngCore;

use crate::field::{Field, FieldSpec, Rationals};
use crate::linalg::{Mat, Subspace};

/// Coefficients from the constant term upwards, without trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poly<E> {
    pub coeffs: Vec<E>,
}

impl<E: Clone> Poly<E> {
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }
    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

pub struct PolyRing<'a, F: Field> {
    pub k: &'a F,
}

impl<'a, F: Field> PolyRing<'a, F> {
    pub fn new(k: &'a F) -> Self {
        PolyRing { k }
    }

    pub fn make(&self, mut coeffs: Vec<F::Elem>) -> Poly<F::Elem> {
        while coeffs.last().is_some_and(|c| self.k.is_zero(c)) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn constant(&self, c: F::Elem) -> Poly<F::Elem> {
        self.make(vec![c])
    }

    pub fn one(&self) -> Poly<F::Elem> {
        self.constant(self.k.one())
    }

    pub fn x(&self) -> Poly<F::Elem> {
        self.make(vec![self.k.zero(), self.k.one()])
    }

    /// `x - c`
    pub fn linear(&self, c: &F::Elem) -> Poly<F::Elem> {
        self.make(vec![self.k.neg(c), self.k.one()])
    }

    fn lead(&self, a: &Poly<F::Elem>) -> F::Elem {
        a.coeffs.last().cloned().unwrap_or_else(|| self.k.zero())
    }

    pub fn add(&self, a: &Poly<F::Elem>, b: &Poly<F::Elem>) -> Poly<F::Elem> {
        let n = a.coeffs.len().max(b.coeffs.len());
        let z = self.k.zero();
        self.make(
            (0..n).map(|i| self.k.add(a.coeffs.get(i).unwrap_or(&z), b.coeffs.get(i).unwrap_or(&z))).collect(),
        )
    }

    pub fn sub(&self, a: &Poly<F::Elem>, b: &Poly<F::Elem>) -> Poly<F::Elem> {
        let n = a.coeffs.len().max(b.coeffs.len());
        let z = self.k.zero();
        self.make(
            (0..n).map(|i| self.k.sub(a.coeffs.get(i).unwrap_or(&z), b.coeffs.get(i).unwrap_or(&z))).collect(),
        )
    }

    pub fn mul(&self, a: &Poly<F::Elem>, b: &Poly<F::Elem>) -> Poly<F::Elem> {
        if a.is_zero() || b.is_zero() {
            return self.make(Vec::new());
        }
        let mut out = vec![self.k.zero(); a.coeffs.len() + b.coeffs.len() - 1];
        for (i, x) in a.coeffs.iter().enumerate() {
            if self.k.is_zero(x) {
                continue;
            }
            for (j, y) in b.coeffs.iter().enumerate() {
                out[i + j] = self.k.add(&out[i + j], &self.k.mul(x, y));
            }
        }
        self.make(out)
    }

    pub fn scale(&self, a: &Poly<F::Elem>, s: &F::Elem) -> Poly<F::Elem> {
        self.make(a.coeffs.iter().map(|c| self.k.mul(c, s)).collect())
    }

    pub fn monic(&self, a: &Poly<F::Elem>) -> Poly<F::Elem> {
        match self.k.inv(&self.lead(a)) {
            Some(inv) => self.scale(a, &inv),
            None => a.clone(),
        }
    }

    /// Quotient and remainder; `b` must be non-zero.
    pub fn divrem(&self, a: &Poly<F::Elem>, b: &Poly<F::Elem>) -> (Poly<F::Elem>, Poly<F::Elem>) {
        let db = b.degree().expect("division by the zero polynomial");
        let inv = self.k.inv(&self.lead(b)).expect("non-zero leading coefficient");
        let mut r = a.coeffs.clone();
        let mut q = vec![self.k.zero(); a.coeffs.len().saturating_sub(db)];
        while r.len() > db && !r.is_empty() {
            let top = r.len() - 1;
            let c = self.k.mul(&r[top], &inv);
            let shift = top - db;
            if !self.k.is_zero(&c) {
                for (j, bc) in b.coeffs.iter().enumerate() {
                    r[shift + j] = self.k.sub(&r[shift + j], &self.k.mul(&c, bc));
                }
            }
            q[shift] = c;
            r.pop();
            while r.last().is_some_and(|x| self.k.is_zero(x)) {
                r.pop();
            }
        }
        (self.make(q), self.make(r))
    }

    pub fn rem(&self, a: &Poly<F::Elem>, b: &Poly<F::Elem>) -> Poly<F::Elem> {
        self.divrem(a, b).1
    }

    pub fn div_exact(&self, a: &Poly<F::Elem>, b: &Poly<F::Elem>) -> Poly<F::Elem> {
        self.divrem(a, b).0
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, a: &Poly<F::Elem>, b: &Poly<F::Elem>) -> Poly<F::Elem> {
        let (mut a, mut b) = (a.clone(), b.clone());
        while !b.is_zero() {
            let r = self.rem(&a, &b);
            a = b;
            b = r;
        }
        self.monic(&a)
    }

    pub fn derivative(&self, a: &Poly<F::Elem>) -> Poly<F::Elem> {
        self.make(a.coeffs.iter().enumerate().skip(1).map(|(i, c)| self.k.mul(c, &self.k.from_i64(i as i64))).collect())
    }

    pub fn mul_mod(&self, a: &Poly<F::Elem>, b: &Poly<F::Elem>, m: &Poly<F::Elem>) -> Poly<F::Elem> {
        self.rem(&self.mul(a, b), m)
    }

    pub fn pow_mod(&self, a: &Poly<F::Elem>, e: &BigUint, m: &Poly<F::Elem>) -> Poly<F::Elem> {
        let mut acc = self.rem(&self.one(), m);
        let base = self.rem(a, m);
        for i in (0..e.bits()).rev() {
            acc = self.mul_mod(&acc, &acc, m);
            if e.bit(i) {
                acc = self.mul_mod(&acc, &base, m);
            }
        }
        acc
    }

    pub fn eval_matrix(&self, a: &Poly<F::Elem>, m: &Mat<F>) -> Mat<F> {
        let n = m.rows();
        let mut acc = Mat::zeros(self.k, n, n);
        for c in a.coeffs.iter().rev() {
            acc = acc.mul(m).add(&Mat::identity(self.k, n).scale(c));
        }
        acc
    }
}

/// The monic minimal polynomial of a square matrix (first linear relation
/// among `1, A, A^2, ...`).
pub fn minimal_polynomial<F: Field>(k: &F, a: &Mat<F>) -> Poly<F::Elem> {
    let ring = PolyRing::new(k);
    let n = a.rows();
    let mut powers: Vec<Vec<F::Elem>> = Vec::new();
    let mut p = Mat::identity(k, n);
    loop {
        let flat = p.entries().to_vec();
        let span = Subspace::from_vectors(k, n * n, &powers);
        if span.contains(&flat) {
            // solve sum c_i A^i = A^d
            let sys = Mat::from_columns(k, n * n, &powers);
            let c = sys.solve_vec(&flat).expect("vector lies in the span");
            let mut coeffs: Vec<F::Elem> = c.iter().map(|x| k.neg(x)).collect();
            coeffs.push(k.one());
            return ring.make(coeffs);
        }
        powers.push(flat);
        p = p.mul(a);
    }
}

/// Product of the distinct monic irreducible factors.
pub fn squarefree_part<F: Field>(k: &F, f: &Poly<F::Elem>) -> Poly<F::Elem> {
    let ring = PolyRing::new(k);
    let f = ring.monic(f);
    if f.degree().unwrap_or(0) == 0 {
        return f;
    }
    let d = ring.derivative(&f);
    if d.is_zero() {
        // f = h(x^p) = h_root(x)^p over a prime field
        let p = k.spec().characteristic() as usize;
        let root = ring.make(f.coeffs.iter().step_by(p).cloned().collect());
        return squarefree_part(k, &root);
    }
    let g = ring.gcd(&f, &d);
    let u = ring.div_exact(&f, &g);
    let mut w = g;
    loop {
        let c = ring.gcd(&w, &u);
        if c.degree() == Some(0) {
            break;
        }
        w = ring.div_exact(&w, &c);
    }
    if w.degree().unwrap_or(0) == 0 {
        u
    } else {
        ring.mul(&u, &squarefree_part(k, &w))
    }
}

/// Result of splitting a squarefree polynomial into coprime factors.
#[derive(Clone, Debug, PartialEq)]
pub struct Factorization<E> {
    /// Pairwise coprime monic factors whose product is the input.
    pub factors: Vec<Poly<E>>,
    /// Whether every listed factor is known to be irreducible.
    pub complete: bool,
}

/// Distinct irreducible factors of `f` (as far as the field allows).
pub fn distinct_factors<F: Field>(k: &F, f: &Poly<F::Elem>, rng: &mut dyn RngCore) -> Factorization<F::Elem> {
    let s = squarefree_part(k, f);
    match k.spec() {
        FieldSpec::Prime(p) => Factorization { factors: factor_prime_field(k, &s, p, rng), complete: true },
        FieldSpec::Rationals => factor_rational_generic(k, &s),
    }
}

fn factor_prime_field<F: Field>(k: &F, s: &Poly<F::Elem>, p: u64, rng: &mut dyn RngCore) -> Vec<Poly<F::Elem>> {
    let ring = PolyRing::new(k);
    let mut rest = ring.monic(s);
    let mut out = Vec::new();
    let mut xp = ring.x();
    let mut d = 0;
    while rest.degree().unwrap_or(0) > 0 {
        d += 1;
        if 2 * d > rest.degree().unwrap() {
            out.push(rest.clone());
            break;
        }
        xp = ring.pow_mod(&xp, &BigUint::from(p), &rest);
        let g = ring.gcd(&ring.sub(&xp, &ring.x()), &rest);
        if g.degree().unwrap_or(0) > 0 {
            out.extend(equal_degree_split(k, &g, d, p, rng));
            rest = ring.div_exact(&rest, &g);
            xp = ring.rem(&xp, &rest);
        }
    }
    out
}

/// Cantor–Zassenhaus: split a product of distinct irreducibles of degree `d`.
fn equal_degree_split<F: Field>(k: &F, g: &Poly<F::Elem>, d: usize, p: u64, rng: &mut dyn RngCore) -> Vec<Poly<F::Elem>> {
    let ring = PolyRing::new(k);
    let n = g.degree().unwrap_or(0);
    if n <= d {
        return vec![ring.monic(g)];
    }
    loop {
        let a = ring.make((0..n).map(|_| k.random(rng, 0)).collect());
        if a.degree().unwrap_or(0) == 0 {
            continue;
        }
        let b = if p == 2 {
            let mut t = a.clone();
            let mut acc = a.clone();
            for _ in 1..d {
                t = ring.mul_mod(&t, &t, g);
                acc = ring.add(&acc, &t);
            }
            acc
        } else {
            let e = (BigUint::from(p).pow(d as u32) - 1u32) / 2u32;
            ring.sub(&ring.pow_mod(&a, &e, g), &ring.one())
        };
        let c = ring.gcd(&b, g);
        let dc = c.degree().unwrap_or(0);
        if dc > 0 && dc < n {
            let mut out = equal_degree_split(k, &c, d, p, rng);
            out.extend(equal_degree_split(k, &ring.div_exact(g, &c), d, p, rng));
            return out;
        }
    }
}

fn factor_rational_generic<F: Field>(k: &F, s: &Poly<F::Elem>) -> Factorization<F::Elem> {
    // Only reachable with F = Rationals; go through formatted literals to
    // stay generic without specialization.
    let q = Rationals;
    let coeffs: Vec<BigRational> = s.coeffs.iter().map(|c| q.parse(&k.format(c)).expect("rational literal")).collect();
    let fac = factor_rational(&Poly { coeffs });
    Factorization {
        factors: fac
            .factors
            .into_iter()
            .map(|f| Poly { coeffs: f.coeffs.iter().map(|c| k.parse(&q.format(c)).expect("literal")).collect() })
            .collect(),
        complete: fac.complete,
    }
}

/// Splits a squarefree rational polynomial into its rational roots and a
/// remaining factor; the remainder is certified irreducible when its degree
/// is at most three.
pub fn factor_rational(s: &Poly<BigRational>) -> Factorization<BigRational> {
    let q = Rationals;
    let ring = PolyRing::new(&q);
    let mut rest = ring.monic(s);
    let mut factors = Vec::new();
    for r in rational_roots(&rest) {
        let lin = ring.linear(&r);
        let (quo, rem) = ring.divrem(&rest, &lin);
        if rem.is_zero() {
            factors.push(lin);
            rest = quo;
        }
    }
    let deg = rest.degree().unwrap_or(0);
    let complete = deg <= 3;
    if deg > 0 {
        factors.push(rest);
    }
    Factorization { factors, complete }
}

const DIVISOR_LIMIT: u64 = 1 << 40;

fn divisors(n: &BigInt) -> Option<Vec<BigInt>> {
    let n = n.abs().to_u64()?;
    if n > DIVISOR_LIMIT {
        return None;
    }
    let mut out = Vec::new();
    let mut d = 1u64;
    while d * d <= n {
        if n % d == 0 {
            out.push(BigInt::from(d));
            if d * d != n {
                out.push(BigInt::from(n / d));
            }
        }
        d += 1;
    }
    Some(out)
}

/// Rational roots by the rational root theorem (empty when the integer
/// coefficients are too large to enumerate divisors).
pub fn rational_roots(f: &Poly<BigRational>) -> Vec<BigRational> {
    if f.is_zero() {
        return Vec::new();
    }
    let lcm = f.coeffs.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let mut ints: Vec<BigInt> = f.coeffs.iter().map(|c| (c * BigRational::from_integer(lcm.clone())).to_integer()).collect();
    let mut roots = Vec::new();
    let mut shift = 0;
    while ints.first().is_some_and(|c| c.is_zero()) {
        ints.remove(0);
        shift += 1;
    }
    if shift > 0 {
        roots.push(BigRational::zero());
    }
    if ints.len() <= 1 {
        return roots;
    }
    let (Some(ps), Some(qs)) = (divisors(&ints[0]), divisors(ints.last().unwrap())) else {
        return roots;
    };
    let q = Rationals;
    let ring = PolyRing::new(&q);
    let g = Poly { coeffs: ints.iter().map(|c| BigRational::from_integer(c.clone())).collect() };
    let mut seen = Vec::new();
    for p in &ps {
        for d in &qs {
            for sign in [1, -1] {
                let r = BigRational::new(p * sign, d.clone());
                if seen.contains(&r) {
                    continue;
                }
                seen.push(r.clone());
                if ring.rem(&g, &ring.linear(&r)).is_zero() {
                    roots.push(r);
                }
            }
        }
    }
    roots
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::PrimeField;
    use rand_chacha::ChaCha8Rng;
    use rand_core::SeedableRng;

    fn qpoly(c: &[i64]) -> Poly<BigRational> {
        PolyRing::new(&Rationals).make(c.iter().map(|&x| Rationals.from_i64(x)).collect())
    }

    #[test]
    fn minimal_polynomial_of_jordan_block() {
        let k = Rationals;
        let a = Mat::from_i64(&k, 3, 3, &[2, 1, 0, 0, 2, 0, 0, 0, 2]);
        // (x - 2)^2 = x^2 - 4x + 4
        assert_eq!(minimal_polynomial(&k, &a), qpoly(&[4, -4, 1]));
    }

    #[test]
    fn rational_splitting() {
        // (x - 1)(x + 2)(x^2 + 1)
        let f = qpoly(&[-2, 1, -1, 1, 1]);
        let fac = factor_rational(&squarefree_part(&Rationals, &f));
        assert_eq!(fac.factors.len(), 3);
        assert!(fac.complete);
        assert_eq!(rational_roots(&qpoly(&[1, 0, 1])), Vec::<BigRational>::new());
    }

    #[test]
    fn squarefree_in_characteristic_p() {
        let k = PrimeField::new(3).unwrap();
        let ring = PolyRing::new(&k);
        // (x + 1)^3 = x^3 + 1 over GF(3)
        let f = ring.make(vec![1, 0, 0, 1]);
        assert_eq!(squarefree_part(&k, &f), ring.make(vec![1, 1]));
    }

    #[test]
    fn prime_field_factorization_matches_brute_force() {
        let k = PrimeField::new(5).unwrap();
        let ring = PolyRing::new(&k);
        let mut rng = ChaCha8Rng::seed_from_u64(0);
        // (x - 1)(x - 2)(x^2 + 2), with x^2 + 2 irreducible mod 5
        let f = ring.mul(&ring.mul(&ring.linear(&1), &ring.linear(&2)), &ring.make(vec![2, 0, 1]));
        let fac = distinct_factors(&k, &f, &mut rng);
        let mut degs: Vec<usize> = fac.factors.iter().map(|g| g.degree().unwrap()).collect();
        degs.sort();
        assert_eq!(degs, vec![1, 1, 2]);
        // every factor of degree two has no roots
        for g in &fac.factors {
            if g.degree() == Some(2) {
                assert!((0..5).all(|r| !ring.rem(g, &ring.linear(&r)).is_zero()));
            }
        }
    }
}
