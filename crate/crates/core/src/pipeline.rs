//! End-to-end verification and build pipelines with their gates.
//!
//! A gate is a prerequisite report. When it fails the pipeline stops, unless
//! forced, in which case its checks become informational and a warning is
//! recorded.

use std::str::FromStr;

use crate::actions::{check_global, check_partial, check_symmetry, BimoduleData};
use crate::algebra::{HopfData, Level};
use crate::duality::{
    build_duality_maps, check_dual_actions, check_duality, comodule_and_module_structures, lambda_phi_isos,
};
use crate::envelope::{
    build_envelope_from, check_envelope, check_phi_identities, check_right_ideal, ideal_criterion, EnvelopeData,
    HomContext,
};
use crate::error::{Error, Result};
use crate::format::{
    action_file, algebra_file, algebra_from_file, bimodule_from_file, dense_matrix, sparse_table, BuildOutput,
    FieldSpec,
};
use crate::linalg::Matrix;
use crate::morita::{build_morita, check_morita, check_phi_embedding};
use crate::partial_rep::{check_partial_rep, check_through_phi, rep_into_end_a, rep_into_underline};
use crate::report::{Check, VerificationReport};
use crate::smash::{build_twisted_smash_unchecked, build_underline_smash, check_associativity, BasedSubalgebra};

pub const SYMMETRY_GATE: &str = "standing symmetry assumption failed, see §3";
pub const PARTIAL_GATE: &str = "partial action axioms failed";
pub const GLOBAL_GATE: &str = "global action axioms failed";
pub const IDEAL_GATE: &str = "envelope ideal check (c) failed, see Def 3.11(c)";

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum VerifyKind {
    Hopf,
    PartialAction,
    Symmetry,
    Envelope,
    Morita,
    PartialRep,
    Duality,
    BuildOutput,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BuildKind {
    UnderlineSmash,
    TwistedSmash,
    Envelope,
    Morita,
    DualityMaps,
}

impl FromStr for VerifyKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "hopf" => VerifyKind::Hopf,
            "partial-action" => VerifyKind::PartialAction,
            "symmetry" => VerifyKind::Symmetry,
            "envelope" => VerifyKind::Envelope,
            "morita" => VerifyKind::Morita,
            "partial-rep" => VerifyKind::PartialRep,
            "duality" => VerifyKind::Duality,
            "build-output" => VerifyKind::BuildOutput,
            _ => return Err(Error::Precondition(format!("unknown verify kind {s:?}"))),
        })
    }
}

impl FromStr for BuildKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "underline-smash" => BuildKind::UnderlineSmash,
            "twisted-smash" => BuildKind::TwistedSmash,
            "envelope" => BuildKind::Envelope,
            "morita" => BuildKind::Morita,
            "duality-maps" => BuildKind::DualityMaps,
            _ => return Err(Error::Precondition(format!("unknown build kind {s:?}"))),
        })
    }
}

impl BuildKind {
    pub fn name(self) -> &'static str {
        match self {
            BuildKind::UnderlineSmash => "underline-smash",
            BuildKind::TwistedSmash => "twisted-smash",
            BuildKind::Envelope => "envelope",
            BuildKind::Morita => "morita",
            BuildKind::DualityMaps => "duality-maps",
        }
    }
}

/// A closure error as a failed check; other errors pass through.
pub fn closure_check(err: Error, paper_ref: &str) -> Result<Check> {
    match err {
        Error::Closure { structure, indices } => Ok(Check::verdict(
            format!("{structure} closed"),
            paper_ref,
            false,
            indices,
            "product leaves the span",
            structure,
        )),
        other => Err(other),
    }
}

/// Merges `gate` into `r`; returns whether to continue.
fn gate(r: &mut VerificationReport, gate: VerificationReport, message: &str, force: bool) -> bool {
    if gate.passed() {
        r.extend(gate);
        return true;
    }
    if force {
        r.warnings.push(format!("{message} (continuing under --force)"));
        r.notes.extend(gate.notes);
        r.informational.extend(gate.checks);
        r.informational.extend(gate.informational);
        true
    } else {
        r.warnings.push(message.to_string());
        r.extend(gate);
        false
    }
}

fn partial_gates(r: &mut VerificationReport, d: &BimoduleData, subject: &str, force: bool) -> bool {
    gate(r, check_partial(d, subject), PARTIAL_GATE, force) && gate(r, check_symmetry(d, subject), SYMMETRY_GATE, force)
}

/// Runs `f`, turning a closure error into a failed check in `r`.
fn attempt<T>(r: &mut VerificationReport, paper_ref: &str, f: impl FnOnce() -> Result<T>) -> Result<Option<T>> {
    match f() {
        Ok(v) => Ok(Some(v)),
        Err(e) => {
            r.push(closure_check(e, paper_ref)?);
            Ok(None)
        }
    }
}

pub fn verify_hopf(h: &HopfData, subject: &str) -> VerificationReport {
    h.check_structure(Level::Hopf, subject)
}

/// The envelope checks on a context that may or may not close.
fn envelope_checks(r: &mut VerificationReport, d: &BimoduleData, subject: &str) -> Result<Option<EnvelopeData>> {
    let Some(ctx) = attempt(r, "Def 3.11", || HomContext::new(d))? else {
        return Ok(None);
    };
    if let Some(rep) = attempt(r, "Lemma 3.12", || check_phi_identities(&ctx, d, subject))? {
        r.extend(rep);
    }
    if let Some(rep) = attempt(r, "Prop 3.13", || check_right_ideal(&ctx, d, subject))? {
        r.extend(rep);
    }
    if let Some(rep) = attempt(r, "Prop 3.15", || ideal_criterion(&ctx, d, subject))? {
        r.extend(rep);
    }
    let env = attempt(r, "Def 3.11", || build_envelope_from(ctx))?;
    if let Some(e) = &env {
        r.extend(check_envelope(e, d, subject));
    }
    Ok(env)
}

fn underline(r: &mut VerificationReport, d: &BimoduleData) -> Result<Option<BasedSubalgebra>> {
    attempt(r, "Prop 3.3", || build_underline_smash(d))
}

/// Runs a verification pipeline on a bimodule algebra.
pub fn verify_bimodule(kind: VerifyKind, d: &BimoduleData, subject: &str, force: bool) -> Result<VerificationReport> {
    let mut r = VerificationReport::new(subject);
    match kind {
        VerifyKind::Hopf => r.extend(verify_hopf(&d.hopf, subject)),
        VerifyKind::PartialAction => r.extend(check_partial(d, subject)),
        VerifyKind::Symmetry => r.extend(check_symmetry(d, subject)),
        VerifyKind::BuildOutput => {
            return Err(Error::Precondition("build-output verification takes a build output file".into()))
        }
        VerifyKind::Envelope => {
            if partial_gates(&mut r, d, subject, force) {
                envelope_checks(&mut r, d, subject)?;
            }
        }
        VerifyKind::Morita => {
            if partial_gates(&mut r, d, subject, force) {
                let mut env_report = VerificationReport::new(subject);
                let env = envelope_checks(&mut env_report, d, subject)?;
                let ideal = env_report.checks.iter().filter(|c| c.name.starts_with("(c)")).cloned().collect::<Vec<_>>();
                let mut ideal_report = VerificationReport::new(subject);
                ideal_report.checks = ideal;
                if env.is_none() {
                    r.extend(env_report);
                } else if gate(&mut r, ideal_report, IDEAL_GATE, force) {
                    let (Some(e), Some(s)) = (env, underline(&mut r, d)?) else {
                        return Ok(r);
                    };
                    if let Some(md) = attempt(&mut r, "Prop 4.4", || build_morita(d, &e, &s))? {
                        r.extend(check_phi_embedding(d, &md.phi, &s, &md.twisted, subject));
                        r.extend(check_morita(&md, subject));
                    }
                }
            }
        }
        VerifyKind::PartialRep => {
            if partial_gates(&mut r, d, subject, force) {
                if let Some(rep) = attempt(&mut r, "Prop 5.1", || rep_into_end_a(d))? {
                    r.extend(check_partial_rep(&rep, subject));
                }
                if let Some(s) = underline(&mut r, d)? {
                    if let Some(rep) = attempt(&mut r, "Thm 5.3", || rep_into_underline(d, &s))? {
                        r.extend(check_partial_rep(&rep, subject));
                    }
                    let mut scratch = VerificationReport::new(subject);
                    match attempt(&mut scratch, "Def 3.11", || build_envelope_from(HomContext::new(d)?))? {
                        Some(e) => {
                            if let Some(rep) = attempt(&mut r, "Thm 5.3", || check_through_phi(d, &s, &e, subject))? {
                                r.extend(rep);
                            }
                        }
                        None => r.push(Check::skipped(
                            "(2) through Φ",
                            "Thm 5.3",
                            "the enveloping action does not close",
                        )),
                    }
                }
            }
        }
        VerifyKind::Duality => {
            r.extend(check_dual_actions(&d.hopf, subject));
            if let Some((_, _, rep)) = attempt(&mut r, "Lemma 6.1", || lambda_phi_isos(&d.hopf, subject))? {
                r.extend(rep);
            }
            if partial_gates(&mut r, d, subject, force) {
                if let Some(s) = underline(&mut r, d)? {
                    if let Some(rep) = attempt(&mut r, "§6", || comodule_and_module_structures(d, &s, subject))? {
                        r.extend(rep);
                    }
                    if let Some(dd) = attempt(&mut r, "Thm 6.3", || build_duality_maps(d, &s))? {
                        r.extend(check_duality(&dd, d, subject));
                    }
                }
            }
        }
    }
    Ok(r)
}

/// The result of a build: the gate and construction report, and the output
/// document when the construction succeeded.
#[derive(Clone, Debug)]
pub struct Built {
    pub report: VerificationReport,
    pub output: Option<BuildOutput>,
}

fn output(kind: BuildKind, d: &BimoduleData) -> BuildOutput {
    let mut out = BuildOutput {
        kind: kind.name().into(),
        field: Some(FieldSpec::of(d.field())),
        ..Default::default()
    };
    out.dims.insert("A".into(), d.dim_a());
    out.dims.insert("H".into(), d.dim_h());
    out
}

fn put_subalgebra(out: &mut BuildOutput, name: &str, s: &BasedSubalgebra) {
    out.dims.insert(name.into(), s.dim());
    out.algebras.insert(name.into(), algebra_file(&s.algebra));
    out.maps.insert(format!("{name} basis"), dense_matrix(s.space.basis()));
}

fn put_map(out: &mut BuildOutput, name: &str, m: &Matrix) {
    out.maps.insert(name.into(), dense_matrix(m));
}

pub fn build(kind: BuildKind, d: &BimoduleData, subject: &str, force: bool) -> Result<Built> {
    let mut r = VerificationReport::new(subject);
    let mut out = output(kind, d);
    let stop = |r| Ok(Built { report: r, output: None });
    match kind {
        BuildKind::TwistedSmash => {
            if !gate(&mut r, check_global(d, subject), GLOBAL_GATE, force) {
                return stop(r);
            }
            let Some(t) = attempt(&mut r, "§3", || build_twisted_smash_unchecked(d))? else {
                return stop(r);
            };
            r.extend(check_associativity(&t, subject));
            put_subalgebra(&mut out, "twisted", &t);
        }
        BuildKind::UnderlineSmash => {
            if !partial_gates(&mut r, d, subject, force) {
                return stop(r);
            }
            let Some(s) = underline(&mut r, d)? else {
                return stop(r);
            };
            r.extend(check_associativity(&s, subject));
            put_subalgebra(&mut out, "underline", &s);
        }
        BuildKind::Envelope => {
            if !partial_gates(&mut r, d, subject, force) {
                return stop(r);
            }
            let Some(e) = attempt(&mut r, "Def 3.11", || build_envelope_from(HomContext::new(d)?))? else {
                return stop(r);
            };
            r.extend(check_envelope(&e, d, subject));
            put_subalgebra(&mut out, "B", &e.b);
            put_map(&mut out, "theta", &e.theta);
            out.actions.insert("B".into(), action_file(&e.global));
        }
        BuildKind::Morita => {
            if !partial_gates(&mut r, d, subject, force) {
                return stop(r);
            }
            let Some(e) = attempt(&mut r, "Def 3.11", || build_envelope_from(HomContext::new(d)?))? else {
                return stop(r);
            };
            let env = check_envelope(&e, d, subject);
            let mut ideal = VerificationReport::new(subject);
            ideal.checks = env.checks.iter().filter(|c| c.name.starts_with("(c)")).cloned().collect();
            if !gate(&mut r, ideal, IDEAL_GATE, force) {
                return stop(r);
            }
            let Some(s) = underline(&mut r, d)? else {
                return stop(r);
            };
            let Some(md) = attempt(&mut r, "Prop 4.4", || build_morita(d, &e, &s))? else {
                return stop(r);
            };
            r.extend(check_phi_embedding(d, &md.phi, &s, &md.twisted, subject));
            r.extend(check_morita(&md, subject));
            put_subalgebra(&mut out, "underline", &s);
            put_subalgebra(&mut out, "twisted", &md.twisted);
            put_map(&mut out, "Phi", &md.phi);
            for (name, space) in [("M", &md.m), ("N", &md.n), ("image", &md.image)] {
                out.dims.insert(name.into(), space.dim());
                put_map(&mut out, &format!("{name} basis"), space.basis());
            }
            for (name, t) in [
                ("M right", &md.m_right),
                ("N left", &md.n_left),
                ("M left", &md.m_left),
                ("N right", &md.n_right),
                ("sigma", &md.sigma),
                ("tau", &md.tau),
            ] {
                out.tables.insert(name.into(), sparse_table(t));
            }
        }
        BuildKind::DualityMaps => {
            if !partial_gates(&mut r, d, subject, force) {
                return stop(r);
            }
            let Some(s) = underline(&mut r, d)? else {
                return stop(r);
            };
            let Some(dd) = attempt(&mut r, "Thm 6.3", || build_duality_maps(d, &s))? else {
                return stop(r);
            };
            r.extend(check_duality(&dd, d, subject));
            put_subalgebra(&mut out, "underline", &s);
            put_subalgebra(&mut out, "H#H*", &dd.h_smash_hstar);
            out.dims.insert("A⊗End(H)".into(), dd.a_end.dim());
            out.algebras.insert("A⊗End(H)".into(), algebra_file(&dd.a_end));
            out.dims.insert("carrier".into(), dd.carrier.dim());
            out.algebras.insert("carrier".into(), algebra_file(&dd.carrier));
            for (name, m) in [
                ("lambda", &dd.lambda),
                ("phi", &dd.phi_iso),
                ("phi_A", &dd.phi_a),
                ("psi", &dd.psi),
                ("Phi", &dd.big_phi),
            ] {
                put_map(&mut out, name, m);
            }
            out.maps.insert("restriction basis".into(), dense_matrix(dd.restriction.basis()));
            out.vectors.insert("e".into(), dd.e.iter().map(ToString::to_string).collect());
        }
    }
    Ok(Built { report: r, output: Some(out) })
}

/// Re-verifies every algebra and action stored in a build output.
pub fn verify_build_output(out: &BuildOutput, subject: &str) -> Result<VerificationReport> {
    let mut r = VerificationReport::new(subject);
    let expected = out.field.as_ref().map(FieldSpec::field).transpose()?;
    for (name, file) in &out.algebras {
        let a = algebra_from_file(file, expected, &format!("algebras.{name}"))?;
        let mut rep = a.check(subject);
        for c in &mut rep.checks {
            c.name = format!("{name}: {}", c.name);
        }
        r.extend(rep);
    }
    for (name, file) in &out.actions {
        let d = bimodule_from_file(file, std::path::Path::new("."), expected, &format!("actions.{name}"))?;
        let mut rep = check_global(&d, subject);
        for c in rep.checks.iter_mut().chain(rep.informational.iter_mut()) {
            c.name = format!("{name}: {}", c.name);
        }
        r.extend(rep);
    }
    Ok(r)
}

/// A one-line summary of the dimensions in a build output.
pub fn summary(out: &BuildOutput) -> String {
    let dims: Vec<String> = out.dims.iter().map(|(k, v)| format!("dim {k} = {v}")).collect();
    format!("{}: {}", out.kind, dims.join(", "))
}
