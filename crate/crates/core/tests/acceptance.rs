//! One line per acceptance criterion. The criteria that fail do so because
//! the stated identity is false on the stated input; the expected failing
//! set is asserted at the end.

use std::collections::BTreeSet;

use smashcheck_core::actions::{check_partial, BimoduleData};
use smashcheck_core::algebra::{check_hopf_map, dual_hopf, matrix_to_end, CoalgebraData, HopfData, Level};
use smashcheck_core::catalog::{self, bimodule, group_algebra, h4_named_dual_basis, sweedler_h4, BIMODULE_ENTRIES};
use smashcheck_core::duality::{build_duality_maps, check_duality, lambda_phi_isos};
use smashcheck_core::envelope::{build_envelope, check_envelope, check_phi_identities, check_right_ideal, ideal_criterion, HomContext};
use smashcheck_core::format::{parse_json, to_json, BuildOutput};
use smashcheck_core::linalg::{display_vec, is_zero_vec, kron, unit_vec, Matrix};
use smashcheck_core::morita::{build_morita, check_morita, check_phi_embedding};
use smashcheck_core::partial_rep::{check_partial_rep, rep_into_end_a, rep_into_underline, PartialRepData};
use smashcheck_core::pipeline::{build, verify_build_output, verify_hopf, BuildKind};
use smashcheck_core::smash::{build_underline_smash, check_associativity, AmbientProduct};
use smashcheck_core::{Field, Scalar, VerificationReport};

const EXPECTED_FAILURES: &[u32] = &[1, 4, 5, 7, 10];

fn q() -> Field {
    Field::Rational
}

fn failed_names(r: &VerificationReport) -> String {
    r.failures()
        .map(|c| format!("{} at {:?}", c.name, c.counterexample.as_ref().map(|x| x.indices.clone()).unwrap_or_default()))
        .collect::<Vec<_>>()
        .join("; ")
}

fn global_entries() -> Vec<(&'static str, BimoduleData)> {
    ["trivial-h4-on-kx", "kz2-sign"].into_iter().map(|n| (n, bimodule(q(), n).unwrap())).collect()
}

fn criterion_1() -> (bool, String) {
    let h4 = sweedler_h4(q()).unwrap();
    let dual = dual_hopf(&h4);
    let axioms = verify_hopf(&h4, "H4");
    let dual_axioms = dual.check_structure(Level::Hopf, "H4*");
    let iso = check_hopf_map(&h4_named_dual_basis(q()), &h4, &dual, "1↦1*+c*, c↦T, x↦P, cx↦TP");
    let ok = axioms.passed() && dual_axioms.passed() && iso.passed();
    (
        ok,
        format!(
            "H4 axioms {}, H4* axioms {}, stated map {}",
            axioms.passed(),
            dual_axioms.passed(),
            if iso.passed() { "is a Hopf isomorphism".into() } else { failed_names(&iso) }
        ),
    )
}

fn criterion_2() -> (bool, String) {
    let d = catalog::kx_in_h4(q()).unwrap();
    let amb = AmbientProduct::new(&d);
    let nh = d.dim_h();
    let f = q();
    let x_t = unit_vec(f, amb.dim(), nh + 1);
    let x_p = unit_vec(f, amb.dim(), nh + 2);
    let p = amb.multiply(&x_t, &x_p);
    (is_zero_vec(&p), format!("(x⊗T)(x⊗P) = {:?}", display_vec(&p)))
}

fn criterion_3() -> (bool, String) {
    let mut ok = true;
    let mut detail = Vec::new();
    for name in BIMODULE_ENTRIES {
        let d = bimodule(q(), name).unwrap();
        match build_underline_smash(&d) {
            Ok(s) => {
                let r = check_associativity(&s, name);
                ok &= r.passed() && s.algebra.unit.is_some();
                detail.push(format!("{name}: dim {}", s.dim()));
            }
            Err(e) => {
                ok = false;
                detail.push(format!("{name}: {e}"));
            }
        }
    }
    (ok, detail.join(", "))
}

fn criterion_4() -> (bool, String) {
    let mut ok = true;
    let mut detail = Vec::new();
    for name in ["central-idempotent-kz2", "kx-in-h4"] {
        let d = bimodule(q(), name).unwrap();
        let ctx = HomContext::new(&d).unwrap();
        let mut r = check_phi_identities(&ctx, &d, name).unwrap();
        r.extend(check_right_ideal(&ctx, &d, name).unwrap());
        let gate = check_partial(&d, name).passed();
        ok &= r.passed();
        detail.push(format!(
            "{name} (partial gate {}): {}",
            if gate { "passes" } else { "fails, run forced" },
            if r.passed() { "all hold".into() } else { failed_names(&r) }
        ));
    }
    (ok, detail.join(" | "))
}

fn criterion_5() -> (bool, String) {
    let mut ok = true;
    let mut detail = Vec::new();
    for name in BIMODULE_ENTRIES {
        let d = bimodule(q(), name).unwrap();
        let ctx = HomContext::new(&d).unwrap();
        let r = ideal_criterion(&ctx, &d, name).unwrap();
        let agree = r.check("criterion agrees with ideal test").unwrap().passed();
        ok &= agree;
        if !agree {
            detail.push(name.to_string());
        }
    }
    (ok, format!("verdicts disagree on [{}]", detail.join(", ")))
}

fn criterion_6() -> (bool, String) {
    let d = bimodule(q(), "central-idempotent-kz2").unwrap();
    let e = build_envelope(&d).unwrap();
    let r = check_envelope(&e, &d, "central");
    let mut ok = r.passed();
    let mut detail = vec![format!("central: (a)-(e) {}", if r.passed() { "pass".into() } else { failed_names(&r) })];
    for (name, g) in global_entries() {
        let e = build_envelope(&g).unwrap();
        let iso = e.dim_b() == g.dim_a() && e.theta.rank() == g.dim_a();
        ok &= iso;
        detail.push(format!("{name}: dim B = {}, dim A = {}, rank θ = {}", e.dim_b(), g.dim_a(), e.theta.rank()));
    }
    (ok, detail.join(", "))
}

fn criterion_7() -> (bool, String) {
    let mut ok = true;
    let mut detail = Vec::new();
    for name in BIMODULE_ENTRIES {
        let d = bimodule(q(), name).unwrap();
        let e = match build_envelope(&d) {
            Ok(e) => e,
            Err(err) => {
                ok = false;
                detail.push(format!("{name}: envelope: {err}"));
                continue;
            }
        };
        let s = build_underline_smash(&d).unwrap();
        match build_morita(&d, &e, &s) {
            Ok(md) => {
                let mut r = check_phi_embedding(&d, &md.phi, &s, &md.twisted, name);
                r.extend(check_morita(&md, name));
                ok &= r.passed();
                detail.push(format!("{name}: {}", if r.passed() { "pass".into() } else { failed_names(&r) }));
            }
            Err(err) => {
                ok = false;
                detail.push(format!("{name}: {err}"));
            }
        }
    }
    (ok, detail.join(" | "))
}

fn criterion_8() -> (bool, String) {
    let mut ok = true;
    let mut detail = Vec::new();
    for name in BIMODULE_ENTRIES {
        let d = bimodule(q(), name).unwrap();
        let s = build_underline_smash(&d).unwrap();
        for rep in [rep_into_end_a(&d).unwrap(), rep_into_underline(&d, &s).unwrap()] {
            let r = check_partial_rep(&rep, name);
            let exhaustive = r.checks.iter().all(|c| c.status != smashcheck_core::Status::Skipped);
            ok &= r.passed() && exhaustive;
            if !r.passed() {
                detail.push(format!("{name}: {}", failed_names(&r)));
            }
        }
    }
    (ok, if detail.is_empty() { "all entries, both targets".into() } else { detail.join(" | ") })
}

fn criterion_9() -> (bool, String) {
    let f7 = Field::prime(7).unwrap();
    let inputs = [
        ("kZ2", group_algebra(q(), 2).unwrap()),
        ("kZ3/F7", group_algebra(f7, 3).unwrap()),
        ("H4", sweedler_h4(q()).unwrap()),
    ];
    let mut ok = true;
    let mut detail = Vec::new();
    for (name, h) in inputs {
        let n = h.dim();
        let (lambda, phi, r) = lambda_phi_isos(&h, name).unwrap();
        let full = lambda.rank() == n * n && phi.rank() == n * n;
        ok &= full && r.passed();
        detail.push(format!("{name}: ranks {}/{} of {}", lambda.rank(), phi.rank(), n * n));
    }
    (ok, detail.join(", "))
}

fn criterion_10() -> (bool, String) {
    let d = bimodule(q(), "kx-in-h4").unwrap();
    let s = build_underline_smash(&d).unwrap();
    let dd = build_duality_maps(&d, &s).unwrap();
    let r = check_duality(&dd, &d, "kx");
    let carrier = dd.carrier.dim();
    let names = ["Thm 6.3 homomorphism", "e idempotent", "corner containment"];
    let ok = carrier == 32 && names.iter().all(|n| r.check(n).is_some_and(|c| c.passed()));
    let verdicts: Vec<String> = names
        .iter()
        .map(|n| format!("{n} {}", if r.check(n).is_some_and(|c| c.passed()) { "pass" } else { "fail" }))
        .collect();
    (ok, format!("carrier dim {carrier}; {}", verdicts.join(", ")))
}

fn honest(rep: &PartialRepData) -> bool {
    let n = rep.hopf.dim();
    let one_ok = rep.target.unit.as_ref().is_some_and(|u| rep.eval(rep.hopf.unit()) == *u);
    one_ok
        && (0..n).all(|h| {
            (0..n).all(|k| {
                rep.eval(rep.hopf.basis_mul(h, k)) == rep.target.mul(&rep.pi.column(h), &rep.pi.column(k))
            })
        })
}

fn criterion_11() -> (bool, String) {
    let mut ok = true;
    let mut detail = Vec::new();
    for (name, d) in global_entries() {
        let f = d.field();
        let (na, nh) = (d.dim_a(), d.dim_h());
        let s = build_underline_smash(&d).unwrap();
        let underline_full = s.dim() == na * nh;

        let e = build_envelope(&d).unwrap();
        let envelope_iso = e.dim_b() == na && e.theta.rank() == na;

        let md = build_morita(&d, &e, &s).unwrap();
        let mut mr = check_phi_embedding(&d, &md.phi, &s, &md.twisted, name);
        mr.extend(check_morita(&md, name));
        let total = md.twisted.dim();
        let morita_trivial =
            mr.passed() && md.m.dim() == total && md.n.dim() == total && md.image.dim() == total;

        let reps_honest = honest(&rep_into_end_a(&d).unwrap()) && honest(&rep_into_underline(&d, &s).unwrap());

        let dd = build_duality_maps(&d, &s).unwrap();
        let id = matrix_to_end(&Matrix::identity(f, nh));
        let one_id = kron(d.algebra.one().unwrap(), &id);
        let e_is_one = dd.e == one_id;
        let duality_ok = check_duality(&dd, &d, name).passed();

        let all = underline_full && envelope_iso && morita_trivial && reps_honest && e_is_one && duality_ok;
        ok &= all;
        detail.push(format!(
            "{name}: underline full {underline_full}, B≅A {envelope_iso}, Morita trivial {morita_trivial}, π honest {reps_honest}, e = 1⊗id {e_is_one}, duality {duality_ok}"
        ));
    }
    (ok, detail.join(" | "))
}

fn corrupted(x: &Scalar) -> Scalar {
    x + &x.field().one()
}

fn criterion_12() -> (bool, String) {
    let mut ok = true;
    let mut detail = Vec::new();

    let mut outputs = 0;
    for name in BIMODULE_ENTRIES {
        let d = bimodule(q(), name).unwrap();
        for kind in [
            BuildKind::UnderlineSmash,
            BuildKind::TwistedSmash,
            BuildKind::Envelope,
            BuildKind::Morita,
            BuildKind::DualityMaps,
        ] {
            let first = build(kind, &d, name, true).unwrap();
            let second = build(kind, &d, name, true).unwrap();
            ok &= first.report.to_json() == second.report.to_json();
            let Some(out) = first.output else { continue };
            let text = to_json(&out);
            let back: BuildOutput = parse_json(&text, "output").unwrap();
            let same = to_json(&back) == text
                && verify_build_output(&out, name).unwrap().to_json() == verify_build_output(&back, name).unwrap().to_json();
            ok &= same;
            outputs += 1;
        }
    }
    detail.push(format!("{outputs} build outputs round-trip"));

    let h4 = sweedler_h4(q()).unwrap();
    let n = h4.dim();
    let mut flipped = 0;
    let mut total = 0;
    let mut missed = Vec::new();
    let mut certified = Vec::new();
    let mut record = |label: String, r: VerificationReport| {
        total += 1;
        if !r.passed() && r.failures().all(|c| c.counterexample.is_some()) {
            flipped += 1;
        } else {
            missed.push(label);
        }
    };
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let mut h = h4.clone();
                h.algebra.mult.set(i, j, k, corrupted(h4.algebra.mult.get(i, j, k)));
                record(format!("mult[{i}][{j}][{k}]"), verify_hopf(&h, "corrupt"));

                let mut comult = h4.coalgebra.comult.clone();
                comult.set(i, j, k, corrupted(comult.get(i, j, k)));
                let coalgebra = CoalgebraData::new(comult, h4.coalgebra.counit.clone()).unwrap();
                let h = HopfData::new(h4.algebra.clone(), coalgebra, h4.antipode.clone()).unwrap();
                record(format!("comult[{i}][{j}][{k}]"), verify_hopf(&h, "corrupt"));
            }
            let mut h = h4.clone();
            h.antipode.set(i, j, corrupted(h4.antipode.get(i, j)));
            record(format!("antipode[{i}][{j}]"), verify_hopf(&h, "corrupt"));
        }
        let mut counit = h4.coalgebra.counit.clone();
        counit[i] = corrupted(&counit[i]);
        let coalgebra = CoalgebraData::new(h4.coalgebra.comult.clone(), counit).unwrap();
        let h = HopfData::new(h4.algebra.clone(), coalgebra, h4.antipode.clone()).unwrap();
        record(format!("counit[{i}]"), verify_hopf(&h, "corrupt"));
    }
    for name in BIMODULE_ENTRIES {
        let d = bimodule(q(), name).unwrap();
        if !check_partial(&d, name).passed() {
            continue;
        }
        let trivial = catalog::trivial_action(&d.hopf, &d.algebra).unwrap();
        let [nh, na, _] = d.left.dims();
        for h in 0..nh {
            for a in 0..na {
                for k in 0..na {
                    for side in ["left", "right"] {
                        let mut c = d.clone();
                        let t = if side == "left" { &mut c.left } else { &mut c.right };
                        let v = corrupted(t.get(h, a, k));
                        t.set(h, a, k, v);
                        let r = check_partial(&c, name);
                        let valid = if side == "left" { c.left == trivial.left } else { c.right == trivial.right };
                        if r.passed() && valid {
                            // The corrupted tensor is the trivial action's, a valid structure.
                            certified.push(format!("{name} {side}[{h}][{a}][{k}]"));
                            continue;
                        }
                        record(format!("{name} {side}[{h}][{a}][{k}]"), r);
                    }
                }
            }
        }
    }
    ok &= missed.is_empty();
    detail.push(format!("{flipped}/{total} single-constant corruptions caught"));
    if !certified.is_empty() {
        detail.push(format!("equal to the trivial action, hence valid: {}", certified.join(", ")));
    }
    if !missed.is_empty() {
        detail.push(format!("missed: {}", missed.join(", ")));
    }
    (ok, detail.join(", "))
}

#[test]
fn acceptance() {
    let criteria: [(u32, &str, fn() -> (bool, String)); 12] = [
        (1, "H4 and its dual are Hopf; stated map H4 → H4* is an isomorphism", criterion_1),
        (2, "(x⊗T)(x⊗P) = 0 in the k[x] ambient product", criterion_2),
        (3, "underline smash products closed, associative, unital", criterion_3),
        (4, "φ identities (i)-(iii) and right ideal on central and k[x]", criterion_4),
        (5, "ideal criterion verdict equals direct ideal verdict", criterion_5),
        (6, "envelope axioms on central; global input gives B ≅ A", criterion_6),
        (7, "Φ embedding and Morita identities on catalog inputs", criterion_7),
        (8, "partial representations into End(A) and the underline smash", criterion_8),
        (9, "λ and φ are bijective algebra maps", criterion_9),
        (10, "duality homomorphism, e² = e, corner containment on k[x]", criterion_10),
        (11, "global inputs degenerate to the classical objects", criterion_11),
        (12, "round-trip determinism and corruption detection", criterion_12),
    ];
    let mut failing = BTreeSet::new();
    for (n, title, run) in criteria {
        let (ok, detail) = run();
        println!("criterion {n:>2} {}  {title}  [{detail}]", if ok { "PASS" } else { "FAIL" });
        if !ok {
            failing.insert(n);
        }
    }
    let expected: BTreeSet<u32> = EXPECTED_FAILURES.iter().copied().collect();
    assert_eq!(failing, expected, "failing criteria differ from the documented set");
}
