//! Claim builders shared by the file-driven subcommands and the built-in
//! scenarios. Each one runs an operation and records what was verified.

use prufer_core::decomp::{are_isomorphic, decompose, Certificate, Verdict};
use prufer_core::degen::{
    co_rz, cokernel_degeneration, eventual_splitting, make_steering_nilpotent, rigid_cokernel_iso, rz_to_prufer,
    split_iff_split, RZSequence,
};
use prufer_core::ladder::{build_ladder, chessboard, verify_truncations, Ladder};
use prufer_core::rep::{cokernel, direct_sum, is_generated_by, ModHom, Rep};
use prufer_core::selfext::{
    class_to_sequence, ext1, is_standard, quotient_presentation_witness, standard_subspace, standard_to_ladder,
};
use prufer_core::squares::is_split_mono;
use prufer_core::zladder::z_ladder;
use prufer_core::Field;

use crate::report::{err, Outcome, Report};

/// `Ok(true)` for a verified isomorphism, `Ok(false)` for a refutation.
pub fn iso<F: Field>(m: &Rep<F>, n: &Rep<F>) -> Result<bool, String> {
    let r = are_isomorphic(m, n).map_err(err)?;
    match r.verdict {
        Verdict::Isomorphic if r.witness_is_valid() => Ok(true),
        Verdict::Isomorphic => Err("isomorphism witness failed verification".into()),
        Verdict::NotIsomorphic => Ok(false),
        Verdict::Inconclusive => Err("isomorphism test inconclusive".into()),
    }
}

pub fn power<F: Field>(h: &Rep<F>, n: usize) -> Rep<F> {
    direct_sum(h.algebra(), &vec![h.clone(); n]).expect("same algebra").sum
}

pub fn certificate_name<F: Field>(c: &Certificate<F>) -> String {
    match c {
        Certificate::Local { radical_dim, nilpotency } => {
            format!("local endomorphism ring, radical dim {radical_dim}, nilpotent of index {nilpotency}")
        }
        Certificate::FieldQuotient { radical_dim, degree } => {
            format!("End/J a field of degree {degree}, radical dim {radical_dim}")
        }
        Certificate::NoIdempotent { searched } => format!("no proper idempotent among {searched} endomorphisms"),
        Certificate::Idempotent(_) => "proper idempotent endomorphism".into(),
    }
}

pub fn generation<F: Field>(r: &mut Report, label: &str, ladder: &Ladder<F>) -> bool {
    let bad: Vec<usize> =
        (1..=ladder.depth()).filter(|&i| !is_generated_by(ladder.module(i), &ladder.canonical_maps(i))).collect();
    r.assert(
        format!("{label}: every U_i is generated by the i canonical images of U_1"),
        "Ladder::canonical_maps + is_generated_by",
        bad.is_empty(),
        if bad.is_empty() { format!("closure checked for i = 1..{}", ladder.depth()) } else { format!("fails at {bad:?}") },
    )
}

/// Structural checks on a ladder: exact squares, truncation sequences,
/// generation and monotone splitting.
pub fn ladder_structure<F: Field>(r: &mut Report, label: &str, ladder: &Ladder<F>) {
    r.record(
        format!("{label}: every rung square is exact"),
        "build_ladder + Ladder::verify",
        ladder.verify().map(|_| format!("{} squares", ladder.depth())).map_err(err),
    );
    r.record(
        format!("{label}: truncations fit 0 -> H[n-1] -> H[n] -> H -> 0"),
        "Ladder::truncation + verify_truncations",
        verify_truncations(ladder).map(|_| format!("n = 1..{}", ladder.depth())).map_err(err),
    );
    generation(r, label, ladder);
    let (first, monotone) = ladder.first_split_index();
    r.assert(
        format!("{label}: once a rung w_i splits, every later rung splits"),
        "Ladder::first_split_index",
        monotone,
        format!("first split rung {first:?}"),
    );
}

/// For rigid `H = coker(w0)`: builds far enough to see the first split
/// rung and checks it against `dim Ext^1(H, U_0)`.
pub fn split_bound<F: Field>(r: &mut Report, label: &str, w0: &ModHom<F>, v0: &ModHom<F>) -> Outcome {
    let h = cokernel(w0).module().clone();
    let self_ext = ext1(&h, &h).map_err(err)?.dim();
    if self_ext != 0 {
        let note = format!("dim Ext^1(H,H) = {self_ext}; the split bound needs rigid H and does not apply");
        r.record(format!("{label}: rigidity of H"), "ext1", Ok(note.clone()));
        return Ok(note);
    }
    let bound = ext1(&h, w0.source()).map_err(err)?.dim();
    let mut depth = 3;
    let ladder = loop {
        let ladder = build_ladder(w0, v0, depth).map_err(err)?;
        match ladder.first_split_index().0 {
            Some(n) if depth >= n + 3 => break ladder,
            Some(n) => depth = n + 3,
            None if depth > bound => break ladder,
            None => depth = (depth * 2).min(bound + 1),
        }
    };
    let (first, monotone) = ladder.first_split_index();
    let ok = first.is_some_and(|n| n <= bound) && monotone;
    let evidence = format!("n0 = {first:?}, dim Ext^1(H, U_0) = {bound}, monotone through rung {}", ladder.depth() - 1);
    r.assert(format!("{label}: H rigid, first split index n0 <= dim Ext^1(H, U_0)"), "Ladder::first_split_index + ext1", ok, evidence.clone());
    Ok(evidence)
}

pub fn ladder_report<F: Field>(r: &mut Report, w0: &ModHom<F>, v0: &ModHom<F>, depth: usize) {
    let ladder = match build_ladder(w0, v0, depth) {
        Ok(l) => l,
        Err(e) => {
            r.record("ladder is built", "build_ladder", Err(err(e)));
            return;
        }
    };
    ladder_structure(r, "ladder", &ladder);
    for i in 0..=ladder.depth() {
        r.module(&format!("U{i}"), ladder.module(i));
    }
    for n in 1..=depth {
        let hn = match ladder.truncation(n) {
            Ok(t) => t.hn,
            Err(e) => {
                r.record(format!("H[{n}] is computed"), "Ladder::truncation", Err(err(e)));
                continue;
            }
        };
        r.module(&format!("H[{n}]"), &hn);
        r.record(format!("H[{n}] decomposes into verified summands"), "decompose", decomposition_evidence(&hn));
    }
    if let Err(e) = split_bound(r, "ladder", w0, v0) {
        r.record("split bound is evaluated", "ext1", Err(e));
    }
}

fn decomposition_evidence<F: Field>(m: &Rep<F>) -> Outcome {
    let dec = decompose(m).map_err(err)?;
    if !dec.verify() {
        return Err("idempotents fail verification".into());
    }
    let parts: Vec<String> = dec
        .classes
        .iter()
        .map(|&(i, mult)| format!("{:?}^{mult}", dec.summands[i].module.dims()))
        .collect();
    Ok(format!("dims {:?} = {}", m.dims(), parts.join(" ⊕ ")))
}

pub fn chessboard_report<F: Field>(r: &mut Report, w0: &ModHom<F>, v0: &ModHom<F>, depth: usize) {
    match chessboard(w0, v0, depth) {
        Ok((a, b)) => {
            ladder_structure(r, "ladder of (w0, v0)", &a);
            ladder_structure(r, "ladder of (v0, w0)", &b);
            let same = (0..=depth).all(|i| a.module(i).dims() == b.module(i).dims());
            r.assert(
                "both ladders of the chessboard have rungs of equal dimension",
                "chessboard",
                same,
                format!("U_i dims {:?}", (0..=depth).map(|i| a.module(i).total_dim()).collect::<Vec<_>>()),
            );
        }
        Err(e) => {
            r.record("chessboard is built", "chessboard", Err(err(e)));
        }
    }
}

pub fn ext_report<F: Field>(r: &mut Report, m: &Rep<F>, n: &Rep<F>, self_ext: bool) {
    let ext = match ext1(m, n) {
        Ok(e) => e,
        Err(e) => {
            r.record("Ext^1 is computed", "ext1", Err(err(e)));
            return;
        }
    };
    let pres = &ext.presentation;
    r.record(
        "Ext^1 is computed from a minimal presentation",
        "ext1",
        Ok(format!(
            "dim Ext^1 = {}, PM dims {:?}, ΩM dims {:?}, dim Hom(ΩM, N) = {}",
            ext.dim(),
            pres.projective().dims(),
            pres.omega().dims(),
            ext.hom_omega.dim()
        )),
    );
    if !self_ext {
        return;
    }
    let ss = match standard_subspace(m) {
        Ok(s) => s,
        Err(e) => {
            r.record("standard subspace is computed", "standard_subspace", Err(err(e)));
            return;
        }
    };
    r.record(
        "standard self-extensions form a subspace of Ext^1(M,M)",
        "standard_subspace",
        Ok(format!("dim Ext^1(M,M)_s = {} of {}", ss.dim(), ss.ext.dim())),
    );
    for (i, c) in ext.classes().into_iter().enumerate() {
        let outcome = (|| -> Outcome {
            let seq = class_to_sequence(&c).map_err(err)?;
            if is_standard(&c).map_err(err)? {
                let (u, w) = standard_to_ladder(&c).map_err(err)?;
                let h2 = build_ladder(&u, &w, 2).map_err(err)?.truncation(2).map_err(err)?.hn;
                return if iso(&h2, seq.b())? {
                    Ok("standard; H[2] of the ladder seed is isomorphic to the middle term".into())
                } else {
                    Err("standard, but H[2] differs from the middle term".into())
                };
            }
            match quotient_presentation_witness(&c).map_err(err)? {
                Some((w0, v0)) => {
                    let h2 = build_ladder(&w0, &v0, 2).map_err(err)?.truncation(2).map_err(err)?.hn;
                    if iso(&h2, seq.b())? {
                        Ok("not standard; a quotient-presentation ladder reconstructs the middle term".into())
                    } else {
                        Err("not standard; the quotient-presentation ladder gives a different H[2]".into())
                    }
                }
                None => Ok("not standard and not a ladder extension".into()),
            }
        })();
        r.record(format!("basis class {i} is classified"), "is_standard + standard_to_ladder", outcome);
    }
}

pub fn decompose_report<F: Field>(r: &mut Report, m: &Rep<F>) {
    let dec = match decompose(m) {
        Ok(d) => d,
        Err(e) => {
            r.record("module decomposes", "decompose", Err(err(e)));
            return;
        }
    };
    r.assert(
        "summand idempotents are orthogonal and sum to the identity",
        "decompose + Decomposition::verify",
        dec.verify(),
        format!("{} summands", dec.summands.len()),
    );
    for (i, s) in dec.summands.iter().enumerate() {
        r.module(&format!("summand {i}"), &s.module);
        r.assert(
            format!("summand {i} {:?} is indecomposable", s.module.dims()),
            "decompose",
            !matches!(s.certificate, Certificate::Idempotent(_)),
            certificate_name(&s.certificate),
        );
    }
    let classes: Vec<String> =
        dec.classes.iter().map(|&(i, mult)| format!("{:?} x{mult}", dec.summands[i].module.dims())).collect();
    r.assert(
        "summands are grouped into isomorphism classes",
        "are_isomorphic",
        dec.inconclusive_pairs.is_empty(),
        format!("{}; inconclusive pairs {:?}", classes.join(", "), dec.inconclusive_pairs),
    );
}

/// Runs the degeneration pipeline on an RZ sequence: nilpotent steering,
/// Prüfer ladder, splitting witnesses and the dual sequence.
pub fn rz_report<F: Field>(r: &mut Report, label: &str, rz: &RZSequence<F>, depth: usize) -> Outcome {
    let rz1 = make_steering_nilpotent(rz).map_err(err)?;
    let t = rz1.nilpotency_index().ok_or("steering map is not nilpotent after restriction")?;
    let top = t.max(depth);
    let cert = rz_to_prufer(&rz1, top + 1).map_err(err)?;
    ladder_structure(r, label, &cert.ladder);
    let alg = rz.u.algebra();
    let mut bad = Vec::new();
    for n in t..=top {
        let theta = eventual_splitting(&cert, n).map_err(err)?;
        let yn1 = cert.truncation(n + 1).module().clone();
        let expected = direct_sum(alg, &[cert.truncation(n).module().clone(), rz1.x.clone()]).map_err(err)?.sum;
        if theta.source() != &yn1 || theta.target() != &expected || !theta.is_homomorphism() || !theta.is_iso() {
            bad.push(n);
        }
    }
    r.assert(
        format!("{label}: Y[n+1] ≅ Y[n] ⊕ X from the nilpotency index on"),
        "rz_to_prufer + eventual_splitting",
        bad.is_empty(),
        format!("t = {t}, witnesses verified for n = {t}..{top}; failures {bad:?}"),
    );
    let dual = co_rz(&cert).map_err(err)?;
    let ok = dual.check().is_ok() && dual.a() == &rz1.y && dual.c() == cert.truncation(t).module();
    r.assert(
        format!("{label}: the dual sequence 0 -> Y -> M -> Y[t] -> 0 is exact"),
        "co_rz",
        ok,
        format!("middle term dims {:?}", dual.b().dims()),
    );
    Ok(format!("t = {t}"))
}

pub fn cokernel_report<F: Field>(r: &mut Report, w0: &ModHom<F>, v0: &ModHom<F>) {
    r.module("coker(w0)", cokernel(w0).module());
    r.module("coker(v0)", cokernel(v0).module());
    match cokernel_degeneration(w0, v0) {
        Ok(cd) => {
            let ok = cd.n0 <= cd.bound && cd.rz.sequence().check().is_ok();
            r.assert(
                "coker(v0) is a degeneration of coker(w0) via U_{n0}",
                "cokernel_degeneration",
                ok,
                format!("n0 = {}, dim Ext^1(W, U_0) = {}", cd.n0, cd.bound),
            );
            let split = is_split_mono(cd.ladder.w(cd.n0)).is_some();
            r.assert("rung w_{n0} is a split monomorphism", "is_split_mono", split, format!("n0 = {}", cd.n0));
        }
        Err(e) => {
            r.record("cokernel degeneration applies", "cokernel_degeneration", Err(err(e)));
        }
    }
    match rigid_cokernel_iso(w0, v0) {
        Ok(ri) => {
            r.assert(
                "with both cokernels rigid they are isomorphic",
                "rigid_cokernel_iso",
                ri.witness.is_homomorphism() && ri.witness.is_iso(),
                format!("both rungs split at n = {}", ri.n),
            );
            r.hom("coker(w0) -> coker(v0)", &ri.witness);
        }
        Err(prufer_core::Error::NotRigid(side)) => {
            r.record("rigidity hypothesis of the isomorphism test", "rigid_cokernel_iso", Ok(format!("{side} is not rigid; not applicable")));
        }
        Err(e) => {
            r.record("rigid cokernels are compared", "rigid_cokernel_iso", Err(err(e)));
        }
    }
    if let Ok((a, b)) = split_iff_split(w0, v0) {
        r.assert("w0 splits iff v0 splits", "split_iff_split", a == b, format!("w0 split {a}, v0 split {b}"));
    }
}

pub fn zladder_report(r: &mut Report, w: i64, v: i64, depth: usize) {
    match z_ladder(w, v, depth) {
        Ok(hs) => {
            let shown: Vec<String> = hs.iter().enumerate().map(|(i, h)| format!("H[{}] = {h}", i + 1)).collect();
            let expected = num_bigint::BigInt::from(w.unsigned_abs());
            let ok = hs.iter().enumerate().all(|(i, h)| h.order() == Some(expected.pow(i as u32 + 1)));
            r.assert(format!("|H[k]| = |w|^k for k = 1..{depth}"), "z_ladder", ok, shown.join("; "));
        }
        Err(e) => {
            r.record("integer ladder is built", "z_ladder", Err(err(e)));
        }
    }
}

/// `H[n] ≅ H^n` for a seed whose maps are proportional.
pub fn dependent_seed_powers<F: Field>(ladder: &Ladder<F>, depth: usize) -> Outcome {
    let h = ladder.h();
    for n in 1..=depth {
        let hn = ladder.truncation(n).map_err(err)?.hn;
        if !iso(&hn, &power(&h, n))? {
            return Err(format!("H[{n}] is not H^{n}"));
        }
    }
    Ok(format!("H = {:?}, checked n = 1..{depth}", h.dims()))
}
