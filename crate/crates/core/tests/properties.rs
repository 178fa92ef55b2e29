mod common;

use proptest::prelude::*;

use prufer_core::decomp::{are_isomorphic, decompose, Verdict};
use prufer_core::fixtures;
use prufer_core::rep::{cokernel, direct_sum, hom_space, image, kernel, radical};
use prufer_core::snf::{smith_normal_form, IntMat};
use prufer_core::squares::{compose_squares, is_exact_square, pushout, Orientation};
use prufer_core::{Field, Mat, PrimeField, Rationals};

fn small_matrix() -> impl Strategy<Value = (usize, usize, Vec<i64>)> {
    (1usize..5, 1usize..5).prop_flat_map(|(r, c)| (Just(r), Just(c), prop::collection::vec(-3i64..=3, r * c)))
}

fn check_null_space<F: Field>(k: &F, r: usize, c: usize, entries: &[i64]) {
    let a = Mat::from_i64(k, r, c, entries);
    let ns = a.null_space();
    assert_eq!(a.rank() + ns.len(), c);
    for v in &ns {
        assert!(a.apply(v).iter().all(|x| k.is_zero(x)));
    }
    let span = Mat::from_columns(k, c, &ns);
    assert_eq!(span.rank(), ns.len());
    let red = a.rref();
    assert_eq!(red.reduced.rref().reduced, red.reduced);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn null_space_and_rref_over_q((r, c, entries) in small_matrix()) {
        check_null_space(&Rationals, r, c, &entries);
    }

    #[test]
    fn null_space_and_rref_over_gf5((r, c, entries) in small_matrix()) {
        check_null_space(&PrimeField::new(5).unwrap(), r, c, &entries);
    }

    #[test]
    fn smith_normal_form_reconstructs((r, c, entries) in small_matrix()) {
        let a = IntMat::from_i64(r, c, &entries);
        let s = smith_normal_form(&a);
        let d = s.diagonal_matrix(r, c);
        prop_assert_eq!(s.left.mul(&a).mul(&s.right), d);
        prop_assert!(s.left.determinant().magnitude() == &1u32.into());
        prop_assert!(s.right.determinant().magnitude() == &1u32.into());
        let nonzero: Vec<_> = s.d.iter().filter(|x| !num_traits::Zero::is_zero(*x)).collect();
        for w in nonzero.windows(2) {
            prop_assert!(num_integer::Integer::is_multiple_of(w[1], w[0]));
        }
    }

    #[test]
    fn kernel_image_cokernel_bookkeeping(seed in any::<u64>()) {
        let alg = fixtures::kronecker(Rationals).unwrap();
        let mut r = common::rng(seed);
        let m = common::random_rep(&alg, &common::random_dims(&mut r, 2, 3), &mut r);
        let n = common::random_rep(&alg, &common::random_dims(&mut r, 2, 3), &mut r);
        let f = common::random_hom(&m, &n, &mut r);
        let (k, i, c) = (kernel(&f), image(&f), cokernel(&f));
        for v in 0..2 {
            prop_assert_eq!(k.dims()[v] + i.dims()[v], m.dim(v));
            prop_assert_eq!(c.module().dim(v) + i.dims()[v], n.dim(v));
        }
        prop_assert!(f.after(k.inclusion()).is_zero());
        prop_assert!(c.projection().after(&f).is_zero());
        let sum = direct_sum(&alg, &[n.clone(), m.clone()]).unwrap().sum;
        prop_assert_eq!(
            hom_space(&m, &sum).unwrap().dim(),
            hom_space(&m, &n).unwrap().dim() + hom_space(&m, &m).unwrap().dim()
        );
        let top = cokernel(radical(&m).inclusion());
        prop_assert!(top.module().actions().iter().all(Mat::is_zero));
    }

    #[test]
    fn pushout_of_mono_is_mono_and_compositions_are_exact(seed in any::<u64>()) {
        let alg = fixtures::kronecker(Rationals).unwrap();
        let mut r = common::rng(seed);
        let x = common::random_rep(&alg, &common::random_dims(&mut r, 2, 2), &mut r);
        let y1 = common::random_rep(&alg, &common::random_dims(&mut r, 2, 3), &mut r);
        let y2 = common::random_rep(&alg, &common::random_dims(&mut r, 2, 2), &mut r);
        let w = common::random_hom(&x, &y1, &mut r);
        let v = common::random_hom(&x, &y2, &mut r);
        let sq = pushout(&w, &v).unwrap();
        prop_assert!(sq.commutes());
        if w.is_injective() {
            prop_assert!(sq.f_prime.is_injective());
            prop_assert!(is_exact_square(&sq));
            let y3 = common::random_rep(&alg, &common::random_dims(&mut r, 2, 2), &mut r);
            let w2 = common::random_hom(&y1, &y3, &mut r);
            if w2.is_injective() {
                let second = pushout(&w2, &sq.g_prime).unwrap();
                let c = compose_squares(&sq, &second, Orientation::Horizontal).unwrap();
                prop_assert!(is_exact_square(&c));
            }
        }
    }
}

fn modules() -> Vec<prufer_core::rep::Rep<Rationals>> {
    let alg = fixtures::kronecker(Rationals).unwrap();
    let mut out: Vec<_> = fixtures::kronecker_indecomposables(&alg).unwrap().into_iter().map(|(_, m)| m).collect();
    out.retain(|m| m.total_dim() <= 4);
    out
}

#[test]
fn krull_remak_schmidt_consistency() {
    let ms = modules();
    for (i, m) in ms.iter().enumerate() {
        for n in ms.iter().skip(i).step_by(3) {
            let sum = direct_sum(m.algebra(), &[m.clone(), n.clone()]).unwrap().sum;
            let dec = decompose(&sum).unwrap();
            assert!(dec.verify());
            let mut expected = vec![m.dims().to_vec(), n.dims().to_vec()];
            expected.sort();
            assert_eq!(dec.dimension_vectors(), expected);
            let parts_iso = |a: &prufer_core::rep::Rep<Rationals>| {
                dec.summands.iter().any(|s| are_isomorphic(&s.module, a).unwrap().verdict == Verdict::Isomorphic)
            };
            assert!(parts_iso(m) && parts_iso(n));
        }
    }
}

#[test]
fn isomorphism_verdicts_are_symmetric() {
    let ms = modules();
    for m in &ms {
        for n in &ms {
            let a = are_isomorphic(m, n).unwrap().verdict;
            let b = are_isomorphic(n, m).unwrap().verdict;
            assert_eq!(a, b);
            assert_eq!(a == Verdict::Isomorphic, m == n);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn integer_ladder_orders_multiply(w in prop_oneof![-6i64..=-1, 1i64..=6], v in -6i64..=6, depth in 1usize..5) {
        let hs = prufer_core::zladder::z_ladder(w, v, depth).unwrap();
        for (k, h) in hs.iter().enumerate() {
            prop_assert_eq!(h.free_rank(), 0);
            let expected = num_bigint::BigInt::from(w.unsigned_abs()).pow(k as u32 + 1);
            prop_assert_eq!(h.order(), Some(expected));
        }
    }
}
