//! Partial representations `π: H → B`: the checker for the two defining
//! conditions, and the two representations a partial bimodule algebra
//! carries, on `End(A)` and on `⟨A⊛H⟩`.

use crate::actions::BimoduleData;
use crate::algebra::{end_algebra, matrix_to_end, AlgebraData, HopfData};
use crate::error::{Error, Result};
use crate::linalg::{axpy, unit_vec, zero_vec, Matrix, Vector};
use crate::report::{Check, VerificationReport};
use crate::scalar::Scalar;
use crate::envelope::EnvelopeData;
use crate::morita::phi_embedding;
use crate::smash::{build_twisted_smash_unchecked, BasedSubalgebra};

const DEFINITION: &str = "Def 5.2";
const ON_END: &str = "Prop 5.1";
const ON_UNDERLINE: &str = "Thm 5.3";

#[derive(Clone, Debug)]
pub struct PartialRepData {
    pub hopf: HopfData,
    pub target: AlgebraData,
    /// Column `i` is `π(e_i)` in target coordinates.
    pub pi: Matrix,
    pub paper_ref: &'static str,
}

impl PartialRepData {
    pub fn new(hopf: HopfData, target: AlgebraData, pi: Matrix) -> Result<Self> {
        if pi.rows() != target.dim() || pi.cols() != hopf.dim() {
            return Err(Error::Dimension(format!(
                "π is {}×{}, expected {}×{}",
                pi.rows(),
                pi.cols(),
                target.dim(),
                hopf.dim()
            )));
        }
        Ok(PartialRepData { hopf, target, pi, paper_ref: DEFINITION })
    }

    pub fn eval(&self, h: &[Scalar]) -> Vector {
        self.pi.apply(h)
    }

    /// `f∘π` for an algebra map `f` given as a matrix into `target`.
    pub fn push_forward(&self, f: &Matrix, target: AlgebraData) -> Result<PartialRepData> {
        PartialRepData::new(self.hopf.clone(), target, f.mul(&self.pi)?)
    }
}

/// Conditions (1) and (2) on all basis pairs `(h, k)`.
pub fn check_partial_rep(r: &PartialRepData, subject: &str) -> VerificationReport {
    let mut rep = VerificationReport::new(subject);
    let b = &r.target;
    let n = r.hopf.dim();
    let f = r.hopf.field();
    match b.unit.as_ref() {
        Some(u) => rep.push(Check::exhaustive("(1) π(1_H) = 1_B", r.paper_ref, &[], |_| {
            (r.eval(r.hopf.unit()), u.clone())
        })),
        None => rep.push(Check::verdict(
            "(1) π(1_H) = 1_B",
            r.paper_ref,
            false,
            vec![],
            "target has no unit",
            "unital target",
        )),
    }
    let s_inv = match r.hopf.antipode_inverse() {
        Ok(m) => m,
        Err(e) => {
            rep.push(Check::skipped(
                "(2) π(S⁻¹(h₍₂₎))π(h₍₁₎)π(k) = π(S⁻¹(h₍₂₎))π(h₍₁₎k)",
                r.paper_ref,
                e.to_string(),
            ));
            return rep;
        }
    };
    let pis: Vec<Vector> = (0..n).map(|i| r.pi.column(i)).collect();
    let pi_s_inv: Vec<Vector> = (0..n).map(|i| r.eval(&s_inv.column(i))).collect();
    rep.push(Check::exhaustive(
        "(2) π(S⁻¹(h₍₂₎))π(h₍₁₎)π(k) = π(S⁻¹(h₍₂₎))π(h₍₁₎k)",
        r.paper_ref,
        &[n, n],
        |t| {
            let (h, k) = (t[0], t[1]);
            let mut lhs = zero_vec(f, b.dim());
            let mut rhs = zero_vec(f, b.dim());
            for (h1, h2, c) in r.hopf.coalgebra.coproduct(h) {
                let left = b.mul(&pi_s_inv[*h2], &pis[*h1]);
                axpy(&mut lhs, c, &b.mul(&left, &pis[k]));
                let h1k = r.hopf.basis_mul(*h1, k);
                axpy(&mut rhs, c, &b.mul(&pi_s_inv[*h2], &r.eval(h1k)));
            }
            (lhs, rhs)
        },
    ));
    rep
}

/// `π(h)(a) = h₍₁₎ ⇀ a ↼ S(h₍₂₎)` into `End(A)`.
pub fn rep_into_end_a(d: &BimoduleData) -> Result<PartialRepData> {
    let f = d.field();
    let na = d.dim_a();
    let target = end_algebra(f, na)?;
    let cols: Vec<Vector> = (0..d.dim_h())
        .map(|h| {
            let m = Matrix::from_columns(f, na, &(0..na).map(|a| d.conj(h, &unit_vec(f, na, a))).collect::<Vec<_>>())
                .expect("shape");
            matrix_to_end(&m)
        })
        .collect();
    let mut r = PartialRepData::new(d.hopf.clone(), target, Matrix::from_columns(f, na * na, &cols)?)?;
    r.paper_ref = ON_END;
    Ok(r)
}

/// `π(h) = (h₍₁₎ ⇀ 1_A ↼ S(h₍₃₎)) ⊗ h₍₂₎` into `⟨A⊛H⟩`, in its internal
/// coordinates.
pub fn rep_into_underline(d: &BimoduleData, s: &BasedSubalgebra) -> Result<PartialRepData> {
    let one = d.algebra.one()?.clone();
    let cols = (0..d.dim_h())
        .map(|h| {
            s.coords(&d.conj_middle(h, &one)).ok_or_else(|| Error::Closure {
                structure: "π(h) in ⟨A⊛H⟩".into(),
                indices: vec![h],
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let mut r = PartialRepData::new(d.hopf.clone(), s.algebra.clone(), Matrix::from_columns(d.field(), s.dim(), &cols)?)?;
    r.paper_ref = ON_UNDERLINE;
    Ok(r)
}

/// The inclusion `⟨A⊛H⟩ → A⊗H` followed by `phi`, as a matrix on internal
/// coordinates.
pub fn embedding_matrix(s: &BasedSubalgebra, phi: &Matrix) -> Result<Matrix> {
    phi.mul(&s.space.basis().transpose())
}

/// `Φ∘π` for the representation on `⟨A⊛H⟩`, into `B⊛H`. Condition (2)
/// is required; condition (1) is informational since `Φ(1)` is `θ(1_A)⊛1_H`.
pub fn check_through_phi(d: &BimoduleData, s: &BasedSubalgebra, e: &EnvelopeData, subject: &str) -> Result<VerificationReport> {
    let r = rep_into_underline(d, s)?;
    let twisted = build_twisted_smash_unchecked(&e.global)?;
    let phi = phi_embedding(e, d.dim_h());
    let pushed = r.push_forward(&embedding_matrix(s, &phi)?, twisted.algebra)?;
    let full = check_partial_rep(&pushed, subject);
    let mut out = VerificationReport::new(subject);
    for c in full.checks {
        if c.name.starts_with("(1)") {
            out.inform(c);
        } else {
            out.push(c);
        }
    }
    Ok(out)
}
