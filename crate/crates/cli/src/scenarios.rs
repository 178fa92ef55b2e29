//! Built-in scenarios and the invariant suites run by `check`.

use std::fmt::Write as _;
use std::sync::Arc;

use prufer_core::algebra::Algebra;
use prufer_core::decomp::{are_isomorphic, decompose, is_indecomposable, Refutation, Verdict};
use prufer_core::degen::{check_rz, cokernel_degeneration, RZSequence};
use prufer_core::fixtures::{self, D4Example};
use prufer_core::ladder::build_ladder;
use prufer_core::rep::{annihilator, cokernel, direct_sum, hom_space, radical, ModHom, Rep};
use prufer_core::selfext::{ext1, is_standard, quotient_presentation_witness, sequence_class, standard_subspace};
use prufer_core::squares::{compose_squares, is_exact_square, is_split_epi, is_split_mono, pushout, Orientation};
use prufer_core::{Field, PrimeField, Rationals};
use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};

use crate::checks::{self, iso};
use crate::report::{err, Report};

pub const EXAMPLES: &[&str] = &["kronecker", "three-kronecker", "d4", "loop-beta", "loop-square", "z"];

pub fn example(name: &str, depth: Option<usize>, emit: bool) -> Option<Report> {
    let mut r = Report::new(name, emit);
    match name {
        "kronecker" => kronecker(&mut r, depth.unwrap_or(6)),
        "three-kronecker" => three_kronecker(&mut r),
        "d4" => d4(&mut r),
        "loop-beta" => loop_beta(&mut r),
        "loop-square" => loop_square(&mut r),
        "z" => z(&mut r, depth.unwrap_or(6)),
        _ => return None,
    }
    Some(r)
}

fn kronecker(r: &mut Report, depth: usize) {
    r.input("algebra", "kronecker over Q");
    r.input("depth", depth);
    let run = |r: &mut Report| -> Result<(), String> {
        let alg = fixtures::kronecker(Rationals).map_err(err)?;
        let (w0, v0) = fixtures::kronecker_seed(&alg).map_err(err)?;
        r.hom("w0", &w0);
        r.hom("v0", &v0);
        let ladder = build_ladder(&w0, &v0, depth).map_err(err)?;
        checks::ladder_structure(r, "independent seed", &ladder);
        for n in 1..=depth {
            let hn = ladder.truncation(n).map_err(err)?.hn;
            r.module(&format!("H[{n}]"), &hn);
            let ind = is_indecomposable(&hn).map_err(err)?;
            r.assert(
                format!("H[{n}] has dimension vector ({n},{n}) and is indecomposable"),
                "build_ladder + Ladder::truncation + is_indecomposable",
                hn.dims() == [n, n] && ind.indecomposable,
                format!("dims {:?}; {}", hn.dims(), checks::certificate_name(&ind.certificate)),
            );
        }
        checks::split_bound(r, "independent seed", &w0, &v0)?;
        for c in [0, 1, -2] {
            let (w0, v0) = fixtures::kronecker_dependent_seed(&alg, c).map_err(err)?;
            let ladder = build_ladder(&w0, &v0, 4).map_err(err)?;
            checks::generation(r, &format!("seed v0 = {c}·w0"), &ladder);
            r.record(
                format!("seed v0 = {c}·w0: H[n] ≅ H^n"),
                "build_ladder + are_isomorphic",
                checks::dependent_seed_powers(&ladder, 4),
            );
            checks::split_bound(r, &format!("seed v0 = {c}·w0"), &w0, &v0)?;
        }
        Ok(())
    };
    if let Err(e) = run(r) {
        r.record("scenario runs to completion", "kronecker", Err(e));
    }
}

fn three_kronecker(r: &mut Report) {
    r.input("algebra", "three-arrow kronecker over Q");
    let run = |r: &mut Report| -> Result<(), String> {
        let tk = fixtures::three_kronecker_example(Rationals).map_err(err)?;
        for (name, f) in [("w", &tk.w), ("f", &tk.f), ("g", &tk.g)] {
            r.hom(name, f);
        }
        r.assert(
            "f and g agree after the projection PH -> H",
            "ModHom::after",
            tk.q.after(&tk.f) == tk.q.after(&tk.g),
            "q∘f = q∘g",
        );
        let lf = build_ladder(&tk.w, &tk.f, 3).map_err(err)?;
        let lg = build_ladder(&tk.w, &tk.g, 3).map_err(err)?;
        checks::generation(r, "ladder (w, f)", &lf);
        checks::generation(r, "ladder (w, g)", &lg);
        let h2f = lf.truncation(2).map_err(err)?.hn;
        let h2g = lg.truncation(2).map_err(err)?.hn;
        let h3f = lf.truncation(3).map_err(err)?.hn;
        let h3g = lg.truncation(3).map_err(err)?.hn;
        for (n, m) in [("H[2;w,f]", &h2f), ("H[2;w,g]", &h2g), ("H[3;w,f]", &h3f), ("H[3;w,g]", &h3g)] {
            r.module(n, m);
        }
        let r2 = are_isomorphic(&h2f, &h2g).map_err(err)?;
        r.assert(
            "H[2;w,f] ≅ H[2;w,g]",
            "are_isomorphic",
            r2.verdict == Verdict::Isomorphic && r2.witness_is_valid(),
            format!("{}; witness verified: {}", r2.verdict, r2.witness_is_valid()),
        );
        if let Some(w) = &r2.witness {
            r.hom("H[2] witness", w);
        }
        let gamma = tk.algebra.quiver().arrow_index("gamma").map_err(err)?;
        let (af, ag) = (annihilator(&h3f).dim(), annihilator(&h3g).dim());
        r.assert(
            "H[3;w,f] is annihilated by gamma",
            "Rep::action + annihilator",
            h3f.action(gamma).is_zero(),
            format!("annihilator dimension {af}"),
        );
        r.assert("H[3;w,g] is faithful", "annihilator", ag == 0, format!("annihilator dimension {ag}"));
        let r3 = are_isomorphic(&h3f, &h3g).map_err(err)?;
        r.assert(
            "H[3;w,f] and H[3;w,g] are not isomorphic, refuted by annihilators",
            "are_isomorphic",
            r3.verdict == Verdict::NotIsomorphic
                && matches!(r3.refutation, Some(Refutation::AnnihilatorDimension { .. })),
            format!("{}: {}", r3.verdict, r3.refutation.map(|x| x.to_string()).unwrap_or_default()),
        );
        Ok(())
    };
    if let Err(e) = run(r) {
        r.record("scenario runs to completion", "three-kronecker", Err(e));
    }
}

/// Every injective `U0 -> U1` over a finite field, tested for cokernel `W`.
fn cokernel_w_exists<F: Field>(d: &D4Example<F>) -> Result<(bool, u64), String> {
    let hs = hom_space(&d.u0, &d.u1).map_err(err)?;
    let k = d.u0.field();
    let order = k.order().ok_or("infinite field")?;
    let total = order.pow(hs.dim() as u32);
    for idx in 0..total {
        let mut rest = idx;
        let coeffs: Vec<F::Elem> = (0..hs.dim())
            .map(|_| {
                let c = k.element(rest % order);
                rest /= order;
                c
            })
            .collect();
        let f = hs.combination(&coeffs);
        if f.is_injective() && iso(cokernel(&f).module(), &d.w)? {
            return Ok((true, total));
        }
    }
    Ok((false, total))
}

fn d4_over<F: Field>(r: &mut Report, d: &D4Example<F>, q: i64) -> Result<(), String> {
    let field = d.u0.field().spec();
    let label = format!("{field}, w0 = mu0 + {q}·mu1");
    let (w0, v0) = (d.w0(q), d.v0());
    r.hom(&format!("w0 over {field}"), &w0);
    r.assert(
        format!("{label}: w0 is injective with cokernel W"),
        "cokernel + are_isomorphic",
        w0.is_injective() && iso(cokernel(&w0).module(), &d.w)?,
        format!("W = {:?}", d.w.dims()),
    );
    let ladder = build_ladder(&w0, &v0, 4).map_err(err)?;
    checks::ladder_structure(r, &label, &ladder);
    let u2 = ladder.module(2);
    r.module(&format!("U2 over {field}"), u2);
    let dec = decompose(u2).map_err(err)?;
    let mut hits = Vec::new();
    for target in &d.u2_summands {
        let mut n = 0;
        for s in &dec.summands {
            if iso(&s.module, target)? {
                n += 1;
            }
        }
        hits.push(n);
    }
    r.assert(
        format!("{label}: U2 is the sum of the three listed indecomposables, each once"),
        "decompose + are_isomorphic",
        dec.verify() && dec.summands.len() == 3 && hits == [1, 1, 1],
        format!("summands {:?}", dec.dimension_vectors()),
    );
    let ext = ext1(&d.w, &d.u0).map_err(err)?.dim();
    r.assert(format!("{label}: dim Ext^1(W, U0) = 2"), "ext1", ext == 2, format!("{ext}"));
    r.assert(
        format!("{label}: w1 is not split"),
        "is_split_mono",
        is_split_mono(ladder.w(1)).is_none(),
        "no retraction of w1",
    );
    let u2w = direct_sum(&d.algebra, &[u2.clone(), d.w.clone()]).map_err(err)?.sum;
    r.assert(format!("{label}: U3 ≅ U2 ⊕ W"), "are_isomorphic", iso(ladder.module(3), &u2w)?, "witness verified");
    let cd = cokernel_degeneration(&w0, &v0).map_err(err)?;
    r.assert(
        format!("{label}: the first split rung n0 is at most 2"),
        "cokernel_degeneration",
        cd.n0 <= 2,
        format!("n0 = {}, bound {}", cd.n0, cd.bound),
    );
    r.assert(
        format!("{label}: W' = coker(v0) is a degeneration of W"),
        "cokernel_degeneration + check_rz",
        iso(&cd.rz.y, &d.w_prime)? && cd.rz.sequence().check().is_ok(),
        format!("0 -> U{} -> U{} ⊕ W -> W' -> 0", cd.n0, cd.n0),
    );
    Ok(())
}

fn d4(r: &mut Report) {
    r.input("algebra", "d4 (subspace orientation) over GF(2), GF(3), Q");
    let run = |r: &mut Report| -> Result<(), String> {
        let gf2 = fixtures::d4_example(PrimeField::new(2).map_err(err)?).map_err(err)?;
        let (found, searched) = cokernel_w_exists(&gf2)?;
        r.assert(
            "over GF(2) no injective U0 -> U1 has cokernel W",
            "hom_space enumeration + are_isomorphic",
            !found,
            format!("{searched} maps searched"),
        );
        let gf3 = fixtures::d4_example(PrimeField::new(3).map_err(err)?).map_err(err)?;
        let (found, searched) = cokernel_w_exists(&gf3)?;
        r.assert(
            "over GF(3) some injective U0 -> U1 has cokernel W",
            "hom_space enumeration + are_isomorphic",
            found,
            format!("found within {searched} maps"),
        );
        d4_over(r, &gf3, 2)?;
        let q = fixtures::d4_example(Rationals).map_err(err)?;
        d4_over(r, &q, 2)?;
        d4_over(r, &q, -1)
    };
    if let Err(e) = run(r) {
        r.record("scenario runs to completion", "d4", Err(e));
    }
}

fn loop_beta(r: &mut Report) {
    r.input("algebra", "alpha: a -> b, loop beta at b, beta^3 = 0, over Q");
    let run = |r: &mut Report| -> Result<(), String> {
        let alg = fixtures::loop_beta(Rationals).map_err(err)?;
        let seq = fixtures::loop_beta_extension(&alg).map_err(err)?;
        r.module("H", seq.a());
        r.module("H'", seq.b());
        r.record("0 -> H -> H' -> H -> 0 is exact", "ShortExact::check", seq.check().map(|_| "checked vertexwise".into()).map_err(err));
        let ext = ext1(seq.a(), seq.a()).map_err(err)?;
        let c = sequence_class(&ext, &seq).map_err(err)?;
        r.assert(
            "the extension does not split",
            "sequence_class + Ext1::is_trivial",
            !ext.is_trivial(&c.representative),
            format!("dim Ext^1(H,H) = {}", ext.dim()),
        );
        r.assert("the extension is not standard", "is_standard", !is_standard(&c).map_err(err)?, "no lift through PH -> H");
        let witness = quotient_presentation_witness(&c).map_err(err)?;
        r.assert(
            "the extension is not a ladder extension",
            "quotient_presentation_witness",
            witness.is_none(),
            "no quotient of the presentation carries a ladder seed realizing the class",
        );
        checks::ext_report(r, seq.a(), seq.a(), true);
        Ok(())
    };
    if let Err(e) = run(r) {
        r.record("scenario runs to completion", "loop-beta", Err(e));
    }
}

fn loop_square(r: &mut Report) {
    r.input("algebra", "one vertex, loop x, x^2 = 0, over Q");
    let run = |r: &mut Report| -> Result<(), String> {
        let alg = fixtures::loop_square(Rationals).map_err(err)?;
        let s = Rep::simple(&alg, 0);
        let ss = standard_subspace(&s).map_err(err)?;
        r.assert(
            "Ext^1(S,S) is one-dimensional and contains no standard class",
            "standard_subspace",
            ss.ext.dim() == 1 && ss.dim() == 0,
            format!("dim Ext^1 = {}, standard {}", ss.ext.dim(), ss.dim()),
        );
        Ok(())
    };
    if let Err(e) = run(r) {
        r.record("scenario runs to completion", "loop-square", Err(e));
    }
}

fn z(r: &mut Report, depth: usize) {
    r.input("depth", depth);
    checks::zladder_report(r, 2, 3, depth);
    if let Ok(hs) = prufer_core::zladder::z_ladder(2, 3, depth) {
        r.assert("w = 2, v = 3: every H[k] is cyclic", "z_ladder + AbGroup::is_cyclic", hs.iter().all(|h| h.is_cyclic()), "Prüfer 2-group truncations");
    }
    checks::zladder_report(r, 2, 2, depth.min(4));
    if let Ok(hs) = prufer_core::zladder::z_ladder(2, 2, depth.min(4)) {
        let ok = hs.iter().enumerate().all(|(i, h)| h.invariants == vec![num_bigint::BigInt::from(2); i + 1]);
        r.assert("w = v = 2: H[k] = (Z/2)^k", "z_ladder", ok, hs.iter().map(|h| h.to_string()).collect::<Vec<_>>().join("; "));
    }
}

// Random data for the invariant suites.

fn below(rng: &mut ChaCha8Rng, n: u64) -> u64 {
    rng.next_u64() % n
}

fn random_dims(rng: &mut ChaCha8Rng, vertices: usize, max: u64) -> Vec<usize> {
    loop {
        let dims: Vec<usize> = (0..vertices).map(|_| below(rng, max + 1) as usize).collect();
        if dims.iter().any(|&d| d > 0) {
            return dims;
        }
    }
}

fn random_rep<F: Field>(alg: &Arc<Algebra<F>>, dims: &[usize], rng: &mut ChaCha8Rng) -> Rep<F> {
    let k = alg.field().clone();
    let action = alg
        .quiver()
        .arrows()
        .iter()
        .map(|a| prufer_core::Mat::from_fn(&k, dims[a.target], dims[a.source], |_, _| k.random(rng, 2)))
        .collect();
    Rep::new(alg.clone(), dims.to_vec(), action).expect("quiver without relations")
}

fn random_hom<F: Field>(m: &Rep<F>, n: &Rep<F>, rng: &mut ChaCha8Rng) -> ModHom<F> {
    let hs = hom_space(m, n).expect("same algebra");
    let k = m.field();
    let c: Vec<F::Elem> = (0..hs.dim()).map(|_| k.random(rng, 2)).collect();
    hs.combination(&c)
}

fn shift<F: Field>(a: &Rep<F>, n: usize) -> (Rep<F>, ModHom<F>) {
    let ds = direct_sum(a.algebra(), &vec![a.clone(); n]).expect("same algebra");
    let mut phi = ModHom::zero(&ds.sum, &ds.sum);
    for i in 0..n - 1 {
        phi = phi.add(&ds.injections[i + 1].after(&ds.projections[i]));
    }
    (ds.sum, phi)
}

fn random_rz<F: Field>(alg: &Arc<Algebra<F>>, rng: &mut ChaCha8Rng) -> Result<RZSequence<F>, String> {
    let nv = alg.quiver().vertex_count();
    loop {
        let (u, phi) = match below(rng, 3) {
            0 => {
                let u = random_rep(alg, &random_dims(rng, nv, 2), rng);
                let phi = random_hom(&u, &u, rng);
                (u, phi)
            }
            1 => {
                let u = random_rep(alg, &random_dims(rng, nv, 2), rng);
                (u.clone(), ModHom::zero(&u, &u))
            }
            _ => {
                let a = random_rep(alg, &random_dims(rng, nv, 1), rng);
                shift(&a, 2 + below(rng, 2) as usize)
            }
        };
        let x = random_rep(alg, &random_dims(rng, nv, 3), rng);
        let g = random_hom(&u, &x, rng);
        let ds = direct_sum(alg, &[x.clone(), u.clone()]).map_err(err)?;
        let mono = ds.column(&[g, phi]);
        if mono.is_injective() {
            let q = cokernel(&mono);
            return check_rz(&u, &x, q.module(), &mono, q.projection()).map_err(err);
        }
    }
}

fn squares_suite(r: &mut Report, rng: &mut ChaCha8Rng, count: usize) -> Result<(), String> {
    let alg = fixtures::kronecker(Rationals).map_err(err)?;
    let (mut composed, mut draws) = (0, 0);
    while composed < count && draws < 100 * count {
        draws += 1;
        let x = random_rep(&alg, &random_dims(rng, 2, 2), rng);
        let y1 = random_rep(&alg, &random_dims(rng, 2, 2), rng);
        let y2 = random_rep(&alg, &random_dims(rng, 2, 2), rng);
        let first = pushout(&random_hom(&x, &y1, rng), &random_hom(&x, &y2, rng)).map_err(err)?;
        if !is_exact_square(&first) {
            continue;
        }
        let extra = random_rep(&alg, &random_dims(rng, 2, 2), rng);
        let (second, orient) = if composed % 2 == 0 {
            (pushout(&random_hom(&first.y1, &extra, rng), &first.g_prime).map_err(err)?, Orientation::Horizontal)
        } else {
            (pushout(&first.f_prime, &random_hom(&first.y2, &extra, rng)).map_err(err)?, Orientation::Vertical)
        };
        if !is_exact_square(&second) {
            continue;
        }
        let c = compose_squares(&first, &second, orient).map_err(err)?;
        if !is_exact_square(&c) {
            r.record("composites of exact squares are exact", "compose_squares", Err(format!("composite #{composed} ({orient:?})")));
            return Ok(());
        }
        composed += 1;
    }
    r.assert(
        "composites of exact squares are exact",
        "pushout + compose_squares + is_exact_square",
        composed == count,
        format!("{composed} composites from {draws} draws"),
    );
    let (mut along_zero, mut along_split, mut bad) = (0, 0, 0);
    while along_zero < count / 2 || along_split < count / 2 {
        let x = random_rep(&alg, &random_dims(rng, 2, 2), rng);
        let y1 = random_rep(&alg, &random_dims(rng, 2, 3), rng);
        let y2 = random_rep(&alg, &random_dims(rng, 2, 2), rng);
        let f = random_hom(&x, &y1, rng);
        if f.is_injective() {
            let sq = pushout(&f, &ModHom::zero(&x, &y2)).map_err(err)?;
            if !is_exact_square(&sq) || is_split_mono(&sq.f_prime).is_none() {
                bad += 1;
            }
            along_zero += 1;
        }
        let rest = random_rep(&alg, &random_dims(rng, 2, 2), rng);
        let ds = direct_sum(&alg, &[x.clone(), rest.clone()]).map_err(err)?;
        let b = ds.injections[0].add(&ds.injections[1].after(&random_hom(&x, &rest, rng)));
        let sq = pushout(&b, &random_hom(&x, &y2, rng)).map_err(err)?;
        let (_, _, right) = sq.total_sequence();
        if !is_exact_square(&sq) || is_split_epi(&right).is_none() {
            bad += 1;
        }
        along_split += 1;
    }
    r.assert(
        "pushouts along a split mono or of a mono along zero split",
        "pushout + is_split_mono + is_split_epi",
        bad == 0,
        format!("{along_zero} pushouts along zero, {along_split} along split monos, {bad} failures"),
    );
    Ok(())
}

fn module_suite(r: &mut Report, rng: &mut ChaCha8Rng, count: usize) -> Result<(), String> {
    let alg = fixtures::kronecker(Rationals).map_err(err)?;
    let mut failures = Vec::new();
    for i in 0..count {
        let m = random_rep(&alg, &random_dims(rng, 2, 3), rng);
        let n = random_rep(&alg, &random_dims(rng, 2, 2), rng);
        let f = random_hom(&m, &n, rng);
        let (k, im, c) = (prufer_core::rep::kernel(&f), prufer_core::rep::image(&f), cokernel(&f));
        let ranks = (0..2).all(|v| k.dims()[v] + im.dims()[v] == m.dim(v) && c.module().dim(v) + im.dims()[v] == n.dim(v));
        let zeros = f.after(k.inclusion()).is_zero() && c.projection().after(&f).is_zero();
        let top = cokernel(radical(&m).inclusion());
        let sum = direct_sum(&alg, &[m.clone(), n.clone()]).map_err(err)?.sum;
        let dec = decompose(&sum).map_err(err)?;
        let (dm, dn) = (decompose(&m).map_err(err)?, decompose(&n).map_err(err)?);
        let mut expected: Vec<Vec<usize>> = dm.dimension_vectors();
        expected.extend(dn.dimension_vectors());
        expected.sort();
        if !(ranks && zeros && top.module().actions().iter().all(|a| a.is_zero()) && dec.verify() && dec.dimension_vectors() == expected) {
            failures.push(i);
        }
    }
    r.assert(
        "kernels, images, cokernels, tops and decompositions of direct sums are consistent",
        "kernel + image + cokernel + radical + decompose",
        failures.is_empty(),
        format!("{count} random Kronecker modules; failures {failures:?}"),
    );
    Ok(())
}

fn degeneration_suite(r: &mut Report, rng: &mut ChaCha8Rng, count: usize) -> Result<(), String> {
    let kr = fixtures::kronecker(Rationals).map_err(err)?;
    let d4 = fixtures::d4(Rationals).map_err(err)?;
    for i in 0..count {
        let rz = random_rz(&kr, rng)?;
        checks::rz_report(r, &format!("random RZ sequence {i} (kronecker)"), &rz, 5)?;
        let rz = random_rz(&d4, rng)?;
        checks::rz_report(r, &format!("random RZ sequence {i} (d4)"), &rz, 5)?;
    }
    Ok(())
}

fn self_extension_suite(r: &mut Report) -> Result<(), String> {
    let kr = fixtures::kronecker(Rationals).map_err(err)?;
    let mut log = String::new();
    let mut ok = true;
    for (name, h) in fixtures::kronecker_indecomposables(&kr).map_err(err)? {
        let ss = standard_subspace(&h).map_err(err)?;
        ok &= ss.dim() == ss.ext.dim();
        let _ = write!(log, "{name}: {}/{}; ", ss.dim(), ss.ext.dim());
        let mut sub = Report::new(&name, false);
        checks::ext_report(&mut sub, &h, &h, true);
        if !sub.passed() {
            ok = false;
        }
        r.absorb(sub);
    }
    r.assert(
        "over a hereditary algebra every self-extension is standard",
        "standard_subspace",
        ok,
        log.trim_end_matches("; ").to_string(),
    );
    let ts = fixtures::two_step_kronecker(Rationals).map_err(err)?;
    let h = fixtures::two_step_module(&ts).map_err(err)?;
    let mut sub = Report::new("two-step algebra", false);
    checks::ext_report(&mut sub, &h, &h, true);
    r.absorb(sub);
    Ok(())
}

/// Every scenario and invariant suite, run concurrently.
pub fn check(seed: u64, emit: bool) -> Report {
    let mut out = Report::new("check", emit);
    out.input("seed", seed);
    let mut jobs: Vec<Box<dyn FnOnce() -> Report + Send>> = Vec::new();
    for &name in EXAMPLES {
        jobs.push(Box::new(move || example(name, None, emit).expect("built-in")));
    }
    jobs.push(Box::new(move || {
        let mut r = Report::new("exact squares", emit);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        if let Err(e) = squares_suite(&mut r, &mut rng, 40) {
            r.record("suite runs to completion", "squares", Err(e));
        }
        r
    }));
    jobs.push(Box::new(move || {
        let mut r = Report::new("modules", emit);
        let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_add(1));
        if let Err(e) = module_suite(&mut r, &mut rng, 20) {
            r.record("suite runs to completion", "modules", Err(e));
        }
        r
    }));
    jobs.push(Box::new(move || {
        let mut r = Report::new("degenerations", emit);
        let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_add(2));
        if let Err(e) = degeneration_suite(&mut r, &mut rng, 4) {
            r.record("suite runs to completion", "degenerations", Err(e));
        }
        r
    }));
    jobs.push(Box::new(move || {
        let mut r = Report::new("self-extensions", emit);
        if let Err(e) = self_extension_suite(&mut r) {
            r.record("suite runs to completion", "self-extensions", Err(e));
        }
        r
    }));
    let reports: Vec<Report> = std::thread::scope(|s| {
        let handles: Vec<_> = jobs.into_iter().map(|job| s.spawn(job)).collect();
        handles.into_iter().map(|h| h.join().expect("scenario thread")).collect()
    });
    for r in reports {
        out.absorb(r);
    }
    out
}
