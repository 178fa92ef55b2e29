mod common;

use prufer_core::decomp::{are_isomorphic, decompose, Verdict};
use prufer_core::degen::{
    combination_retraction, check_rz, cokernel_degeneration, make_steering_nilpotent, rigid_cokernel_iso, rz_to_prufer,
    split_iff_split,
};
use prufer_core::error::{Error, Side};
use prufer_core::fixtures;
use prufer_core::ladder::{build_ladder, chessboard, ladder_extension, simple_socle_seed, verify_truncations};
use prufer_core::rep::{
    annihilator, cokernel, direct_sum, hom_space, is_faithful, is_generated_by, kernel, radical, socle, top, ModHom, Rep,
    Submodule,
};
use prufer_core::selfext::{
    class_to_sequence, ext1, presentation, proj_dim_at_most_one, standard_subspace, standard_to_ladder,
};
use prufer_core::squares::{is_split_mono, pushout};
use prufer_core::{Field, PrimeField, Rationals};

fn iso<F: Field>(m: &Rep<F>, n: &Rep<F>) -> bool {
    let r = are_isomorphic(m, n).unwrap();
    assert_ne!(r.verdict, Verdict::Inconclusive);
    r.verdict == Verdict::Isomorphic && r.witness_is_valid()
}

#[test]
fn kronecker_projectives_and_seed() {
    let alg = fixtures::kronecker(Rationals).unwrap();
    assert_eq!(Rep::projective(&alg, 1).dims(), [0, 1]);
    assert_eq!(Rep::projective(&alg, 0).dims(), [1, 2]);
    let (w0, v0) = fixtures::kronecker_seed(&alg).unwrap();
    assert_eq!(hom_space(w0.source(), w0.target()).unwrap().dim(), 2);
    assert_eq!(cokernel(&w0).module().dims(), [1, 1]);
    let sq = pushout(&w0, &v0).unwrap();
    assert_eq!(sq.z.dims(), [2, 3]);
}

#[test]
fn three_kronecker_presentation() {
    let tk = fixtures::three_kronecker_example(Rationals).unwrap();
    assert_eq!(Rep::projective(&tk.algebra, 0).dims(), [1, 3]);
    let k = kernel(&tk.q);
    assert_eq!(k.dims(), [0, 2]);
    assert!(k.contains(&Submodule::generated_by(&tk.ph, tk.w.blocks().iter().map(prufer_core::Subspace::column_span).collect())));
    // ΩH is semisimple, so e13 alone generates a line.
    let line = Submodule::closure(&tk.omega, &[(1, vec![Rationals.zero(), Rationals.one()])]);
    assert_eq!(line.dims(), [0, 1]);
    // H is killed by beta and gamma; alpha acts non-trivially.
    let quiver = tk.algebra.quiver();
    for (name, zero) in [("alpha", false), ("beta", true), ("gamma", true)] {
        assert_eq!(tk.h.action(quiver.arrow_index(name).unwrap()).is_zero(), zero, "{name}");
    }
    assert!(!is_faithful(&tk.h));
    // presentation agrees with the hand-built one
    let pres = presentation(&tk.h).unwrap();
    assert!(iso(pres.projective(), &tk.ph));
    assert!(iso(pres.omega(), &tk.omega));
}

#[test]
fn three_kronecker_warning() {
    let tk = fixtures::three_kronecker_example(Rationals).unwrap();
    let lf = build_ladder(&tk.w, &tk.f, 3).unwrap();
    let lg = build_ladder(&tk.w, &tk.g, 3).unwrap();
    assert!(iso(&lf.truncation(2).unwrap().hn, &lg.truncation(2).unwrap().hn));
    let (h3f, h3g) = (lf.truncation(3).unwrap().hn, lg.truncation(3).unwrap().hn);
    assert!(annihilator(&h3f).dim() > 0);
    assert!(is_faithful(&h3g));
    assert!(!iso(&h3f, &h3g));
    assert_eq!(are_isomorphic(&h3g, &h3f).unwrap().verdict, Verdict::NotIsomorphic);
}

#[test]
fn two_step_presentation_has_one_map_into_the_cover() {
    let alg = fixtures::two_step_kronecker(Rationals).unwrap();
    let h = fixtures::two_step_module(&alg).unwrap();
    let pres = presentation(&h).unwrap();
    assert_eq!(pres.omega().dims(), [0, 1, 1]);
    let hs = hom_space(pres.omega(), pres.projective()).unwrap();
    assert_eq!(hs.dim(), 1);
    assert!(hs.coordinates(&pres.u).is_some());
    let ss = standard_subspace(&h).unwrap();
    assert_eq!(ss.ext.dim(), 1);
    assert_eq!(ss.dim(), 0);
}

#[test]
fn radical_top_socle() {
    let alg = fixtures::kronecker(Rationals).unwrap();
    let (_, pa) = fixtures::kronecker_projectives(&alg).unwrap();
    assert_eq!(radical(&pa).dims(), [0, 2]);
    assert_eq!(top(&pa).module().dims(), [1, 0]);
    let (w0, _) = fixtures::kronecker_seed(&alg).unwrap();
    let h = cokernel(&w0).module().clone();
    assert_eq!(socle(&h).dims(), [0, 1]);
    let semisimple = fixtures::rep_from_i64(&alg, &[1, 1], &[&[0], &[0]]).unwrap();
    assert!(radical(&semisimple).is_zero());
    assert!(socle(&semisimple).is_whole());
    assert_eq!(annihilator(&Rep::zero(&alg)).dim(), alg.dimension());
}

#[test]
fn generation_examples() {
    let alg = fixtures::kronecker(Rationals).unwrap();
    let (w0, v0) = fixtures::kronecker_seed(&alg).unwrap();
    let ladder = build_ladder(&w0, &v0, 3).unwrap();
    let u3 = ladder.module(3);
    assert!(is_generated_by(u3, &ladder.canonical_maps(3)));
    assert!(is_generated_by(u3, &[ModHom::identity(u3)]));
    assert!(!is_generated_by(u3, &[ModHom::zero(ladder.module(1), u3)]));
}

#[test]
fn d4_sum_of_summands() {
    let d = fixtures::d4_example(Rationals).unwrap();
    let s = direct_sum(&d.algebra, &d.u2_summands).unwrap();
    assert_eq!(s.sum.dims(), [3, 2, 2, 2]);
    let ladder = build_ladder(&d.w0(2), &d.v0(), 2).unwrap();
    assert!(iso(ladder.module(2), &s.sum));
    let dec = decompose(ladder.module(2)).unwrap();
    assert!(dec.verify());
    assert_eq!(dec.dimension_vectors(), vec![vec![1, 0, 1, 1], vec![1, 1, 0, 1], vec![1, 1, 1, 0]]);
}

#[test]
fn d4_rigidity_hypotheses() {
    let d = fixtures::d4_example(Rationals).unwrap();
    let (w0, v0) = (d.w0(2), d.v0());
    assert_eq!(ext1(&d.w, &d.w).unwrap().dim(), 0);
    assert!(ext1(&d.w_prime, &d.w_prime).unwrap().dim() > 0);
    assert_eq!(rigid_cokernel_iso(&w0, &v0).unwrap_err(), Error::NotRigid(Side::WPrime));
    assert_eq!(split_iff_split(&w0, &v0).unwrap_err(), Error::NotRigid(Side::WPrime));
    let cd = cokernel_degeneration(&w0, &v0).unwrap();
    assert_eq!(cd.n0, 2);
    assert_eq!(cd.bound, 2);
    assert!(iso(&cd.rz.y, &d.w_prime));
    assert!(iso(&cd.rz.x, &d.w));
    // swapped roles: coker(v0) = W' is not rigid
    assert_eq!(cokernel_degeneration(&v0, &w0).unwrap_err(), Error::NotRigid(Side::W));
}

#[test]
fn rigid_cokernels_are_isomorphic() {
    // Two different embeddings of S(a) in U1 with cokernel W.
    let d = fixtures::d4_example(Rationals).unwrap();
    let (w0, v0) = (d.w0(2), d.w0(-1));
    let ri = rigid_cokernel_iso(&w0, &v0).unwrap();
    assert!(ri.witness.is_iso() && ri.witness.is_homomorphism());
    assert_eq!(split_iff_split(&w0, &v0).unwrap(), (false, false));
}

#[test]
fn scalar_shift_gives_isomorphic_extensions() {
    let alg = fixtures::kronecker(Rationals).unwrap();
    let (w0, v0) = fixtures::kronecker_seed(&alg).unwrap();
    let h2 = build_ladder(&w0, &v0, 2).unwrap().truncation(2).unwrap().hn;
    for mu in [1, -1, 3] {
        let shifted = v0.add(&w0.scale(&Rationals.from_i64(mu)));
        let h2s = build_ladder(&w0, &shifted, 2).unwrap().truncation(2).unwrap().hn;
        assert!(iso(&h2, &h2s), "mu = {mu}");
    }
}

#[test]
fn ladder_invariants_and_chessboard() {
    let alg = fixtures::kronecker(PrimeField::new(5).unwrap()).unwrap();
    let (w0, v0) = fixtures::kronecker_seed(&alg).unwrap();
    let ladder = build_ladder(&w0, &v0, 4).unwrap();
    ladder.verify().unwrap();
    verify_truncations(&ladder).unwrap();
    for n in 1..=4 {
        assert!(ladder.truncation(n).unwrap().phi_is_nilpotent());
    }
    let (horizontal, vertical) = chessboard(&w0, &v0, 3).unwrap();
    horizontal.verify().unwrap();
    vertical.verify().unwrap();
}

#[test]
fn ladder_extension_of_presentation() {
    let tk = fixtures::three_kronecker_example(Rationals).unwrap();
    let le = ladder_extension(&tk.q, &tk.f).unwrap();
    assert!(le.ext.is_exact());
    assert!(!le.ext.splits());
    assert_eq!(le.h2.dims(), [2, 2]);
}

#[test]
fn simple_socle_seed_on_kronecker_regular_module() {
    // H regular (1,1) at 0 with its almost split self-extension (2,2).
    let alg = fixtures::kronecker(Rationals).unwrap();
    let h = fixtures::rep_from_i64(&alg, &[1, 1], &[&[1], &[0]]).unwrap();
    let ext = ext1(&h, &h).unwrap();
    let c = ext.classes().into_iter().next().unwrap();
    let seq = class_to_sequence(&c).unwrap();
    let s = Rep::simple(&alg, 1);
    let s_incl = fixtures::hom_from_i64(&s, &h, &[&[], &[1]]).unwrap();
    let (w, v) = simple_socle_seed(&seq, &s_incl).unwrap().expect("hypotheses hold");
    let h2 = build_ladder(&w, &v, 2).unwrap().truncation(2).unwrap().hn;
    assert!(iso(&h2, seq.b()));
}

#[test]
fn standard_classes_on_hereditary_fixtures() {
    let alg = fixtures::kronecker(Rationals).unwrap();
    for (name, m) in fixtures::kronecker_indecomposables(&alg).unwrap() {
        assert!(proj_dim_at_most_one(&m).unwrap());
        let ss = standard_subspace(&m).unwrap();
        assert!(ss.contains_trivial(), "{name}");
        assert_eq!(ss.dim(), ss.ext.dim(), "{name}");
        let pres = presentation(&m).unwrap();
        let euler = hom_space(pres.omega(), &m).unwrap().dim() + hom_space(&m, &m).unwrap().dim()
            - hom_space(pres.projective(), &m).unwrap().dim();
        assert_eq!(ext1(&m, &m).unwrap().dim(), euler, "{name}");
        for c in ss.ext.classes() {
            let (u, w) = standard_to_ladder(&c).unwrap();
            let h2 = build_ladder(&u, &w, 2).unwrap().truncation(2).unwrap().hn;
            assert!(iso(&h2, class_to_sequence(&c).unwrap().b()), "{name}");
        }
    }
}

#[test]
fn steering_and_corollary_at_finite_stages() {
    let alg = fixtures::kronecker(Rationals).unwrap();
    let mut r = common::rng(11);
    let a = common::random_rep(&alg, &[1, 1], &mut r);
    let (u, phi) = common::shift(&a, 2);
    // g is the projection onto the copy killed by the shift.
    let x = a.clone();
    let g = direct_sum(&alg, &[a.clone(), a.clone()]).unwrap().projections[1].clone();
    let ds = direct_sum(&alg, &[x.clone(), u.clone()]).unwrap();
    let mono = ds.column(&[g, phi]);
    assert!(mono.is_injective());
    let q = cokernel(&mono);
    let rz = check_rz(&u, &x, q.module(), &mono, q.projection()).unwrap();
    let rz = make_steering_nilpotent(&rz).unwrap();
    let t = rz.nilpotency_index().unwrap();
    assert_eq!(t, 2);
    for lambda in [0, 1, -1, 2] {
        let (map, retraction) = combination_retraction(&rz, &Rationals.from_i64(lambda)).unwrap();
        assert!(is_split_mono(&map).is_some());
        assert_eq!(retraction.after(&map), ModHom::identity(&u));
    }
    let cert = rz_to_prufer(&rz, 5).unwrap();
    let yt = cert.truncation(t).module().clone();
    for n in t..=5 {
        let mut parts = vec![yt.clone()];
        parts.extend(std::iter::repeat_n(x.clone(), n - t));
        let expected = direct_sum(&alg, &parts).unwrap().sum;
        assert!(iso(cert.truncation(n).module(), &expected), "n = {n}");
    }
}

#[test]
fn non_nilpotent_steering_is_restricted() {
    let alg = fixtures::kronecker(Rationals).unwrap();
    let mut r = common::rng(12);
    let u = common::random_rep(&alg, &[1, 1], &mut r);
    let x = common::random_rep(&alg, &[1, 1], &mut r);
    let ds = direct_sum(&alg, &[x.clone(), u.clone()]).unwrap();
    let mono = ds.column(&[ModHom::zero(&u, &x), ModHom::identity(&u)]);
    let q = cokernel(&mono);
    let rz = check_rz(&u, &x, q.module(), &mono, q.projection()).unwrap();
    assert_eq!(rz.nilpotency_index(), None);
    assert_eq!(rz_to_prufer(&rz, 3).unwrap_err(), Error::NotNilpotent);
    let fixed = make_steering_nilpotent(&rz).unwrap();
    assert!(fixed.u.is_zero());
    assert!(iso(&fixed.y, &x));
}
