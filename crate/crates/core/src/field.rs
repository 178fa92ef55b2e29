//! Exact scalar fields: the rationals and prime fields GF(p).

use alloc::format;
use alloc::string::String;
use core::fmt::Debug;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand_core::RngCore;

use crate::error::{Error, Result};

/// Which field a presentation lives over.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FieldSpec {
    Rationals,
    Prime(u64),
}

impl FieldSpec {
    pub fn characteristic(&self) -> u64 {
        match self {
            FieldSpec::Rationals => 0,
            FieldSpec::Prime(p) => *p,
        }
    }
}

impl core::fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            FieldSpec::Rationals => write!(f, "Q"),
            FieldSpec::Prime(p) => write!(f, "GF({p})"),
        }
    }
}

/// A field given as a context object: elements are plain values, all
/// arithmetic goes through the field.
pub trait Field: Clone + Debug + PartialEq + Send + Sync + 'static {
    type Elem: Clone + Debug + PartialEq + Eq + Send + Sync + 'static;

    fn spec(&self) -> FieldSpec;
    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn from_i64(&self, n: i64) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    /// `None` exactly when `a` is zero.
    fn inv(&self, a: &Self::Elem) -> Option<Self::Elem>;
    fn is_zero(&self, a: &Self::Elem) -> bool;

    /// Number of elements, `None` for infinite fields.
    fn order(&self) -> Option<u64>;
    /// The `idx`-th element in a fixed enumeration (finite fields only;
    /// infinite fields map `idx` onto small integers).
    fn element(&self, idx: u64) -> Self::Elem;
    /// A uniformly random element (finite fields) or a random small
    /// rational with numerator in `[-bound, bound]`.
    fn random(&self, rng: &mut dyn RngCore, bound: u64) -> Self::Elem;

    fn format(&self, a: &Self::Elem) -> String;
    fn parse(&self, s: &str) -> Result<Self::Elem>;

    fn is_one(&self, a: &Self::Elem) -> bool {
        *a == self.one()
    }

    fn div(&self, a: &Self::Elem, b: &Self::Elem) -> Option<Self::Elem> {
        self.inv(b).map(|ib| self.mul(a, &ib))
    }
}

/// The field of rational numbers with arbitrary-precision entries.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Rationals;

impl Field for Rationals {
    type Elem = BigRational;

    fn spec(&self) -> FieldSpec {
        FieldSpec::Rationals
    }
    fn zero(&self) -> BigRational {
        BigRational::zero()
    }
    fn one(&self) -> BigRational {
        BigRational::one()
    }
    fn from_i64(&self, n: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(n))
    }
    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }
    fn sub(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a - b
    }
    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }
    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }
    fn inv(&self, a: &BigRational) -> Option<BigRational> {
        if a.is_zero() {
            None
        } else {
            Some(a.recip())
        }
    }
    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }
    fn order(&self) -> Option<u64> {
        None
    }
    fn element(&self, idx: u64) -> BigRational {
        // 0, 1, -1, 2, -2, ...
        let k = idx.div_ceil(2) as i64;
        if idx % 2 == 1 {
            self.from_i64(k)
        } else {
            self.from_i64(-k)
        }
    }
    fn random(&self, rng: &mut dyn RngCore, bound: u64) -> BigRational {
        let span = 2 * bound + 1;
        let v = (rng.next_u64() % span) as i64 - bound as i64;
        self.from_i64(v)
    }
    fn format(&self, a: &BigRational) -> String {
        if a.is_integer() {
            format!("{}", a.numer())
        } else {
            format!("{}/{}", a.numer(), a.denom())
        }
    }
    fn parse(&self, s: &str) -> Result<BigRational> {
        let s = s.trim();
        let bad = || Error::Parse(format!("invalid rational literal `{s}`"));
        match s.split_once('/') {
            None => s.parse::<BigInt>().map(BigRational::from_integer).map_err(|_| bad()),
            Some((n, d)) => {
                let n: BigInt = n.trim().parse().map_err(|_| bad())?;
                let d: BigInt = d.trim().parse().map_err(|_| bad())?;
                if !d.is_positive() {
                    return Err(bad());
                }
                Ok(BigRational::new(n, d))
            }
        }
    }
}

/// The prime field GF(p); elements are canonical residues in `0..p`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PrimeField {
    p: u64,
}

impl PrimeField {
    pub fn new(p: u64) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if p >= 1 << 32 {
            return Err(Error::Unsupported(format!("prime {p} exceeds 2^32")));
        }
        Ok(PrimeField { p })
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    fn pow(&self, mut base: u64, mut exp: u64) -> u64 {
        let mut acc = 1 % self.p;
        base %= self.p;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc * base % self.p;
            }
            base = base * base % self.p;
            exp >>= 1;
        }
        acc
    }
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

impl Field for PrimeField {
    type Elem = u64;

    fn spec(&self) -> FieldSpec {
        FieldSpec::Prime(self.p)
    }
    fn zero(&self) -> u64 {
        0
    }
    fn one(&self) -> u64 {
        1
    }
    fn from_i64(&self, n: i64) -> u64 {
        n.rem_euclid(self.p as i64) as u64
    }
    fn add(&self, a: &u64, b: &u64) -> u64 {
        (a + b) % self.p
    }
    fn sub(&self, a: &u64, b: &u64) -> u64 {
        (a + self.p - b) % self.p
    }
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        a * b % self.p
    }
    fn neg(&self, a: &u64) -> u64 {
        (self.p - a) % self.p
    }
    fn inv(&self, a: &u64) -> Option<u64> {
        if *a == 0 {
            None
        } else {
            Some(self.pow(*a, self.p - 2))
        }
    }
    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }
    fn order(&self) -> Option<u64> {
        Some(self.p)
    }
    fn element(&self, idx: u64) -> u64 {
        idx % self.p
    }
    fn random(&self, rng: &mut dyn RngCore, _bound: u64) -> u64 {
        rng.next_u64() % self.p
    }
    fn format(&self, a: &u64) -> String {
        format!("{a}")
    }
    fn parse(&self, s: &str) -> Result<u64> {
        let s = s.trim();
        let v: BigInt = s
            .parse()
            .map_err(|_| Error::Parse(format!("invalid GF({}) literal `{s}`", self.p)))?;
        let r = v.mod_floor(&BigInt::from(self.p));
        Ok(r.to_u64().expect("residue fits"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec::Vec;

    #[test]
    fn prime_field_axioms_exhaustive_gf7() {
        let k = PrimeField::new(7).unwrap();
        let elems: Vec<u64> = (0..7).map(|i| k.element(i)).collect();
        for a in &elems {
            assert_eq!(k.add(a, &k.neg(a)), 0);
            if *a != 0 {
                assert_eq!(k.mul(a, &k.inv(a).unwrap()), 1);
            }
            for b in &elems {
                for c in &elems {
                    assert_eq!(k.mul(a, &k.add(b, c)), k.add(&k.mul(a, b), &k.mul(a, c)));
                }
            }
        }
        assert!(k.inv(&0).is_none());
    }

    #[test]
    fn rejects_composite_modulus() {
        assert!(PrimeField::new(9).is_err());
        assert!(PrimeField::new(1).is_err());
    }

    #[test]
    fn rational_literals() {
        let q = Rationals;
        assert_eq!(q.parse("-3/6").unwrap(), q.div(&q.from_i64(-1), &q.from_i64(2)).unwrap());
        assert_eq!(q.format(&q.parse("4/2").unwrap()), "2");
        assert!(q.parse("1/0").is_err());
        assert!(q.parse("1/-2").is_err());
        let k = PrimeField::new(5).unwrap();
        assert_eq!(k.parse("-1").unwrap(), 4);
        assert_eq!(k.parse("12").unwrap(), 2);
    }
}
