//! Duality maps: the actions `→`, `←` of `H*` on `H`, the smash products
//! `H#H*` and `H*#H` with their maps `λ`, `φ` into `End(H)`, the comodule and
//! `H*`-module structures on `⟨A⊛H⟩`, and the homomorphism
//! `Φ: A⊗H#H* → A⊗End(H)` with its idempotent `e`.

use crate::actions::BimoduleData;
use crate::algebra::{dual_hopf, end_algebra, matrix_to_end, support, tensor_algebra, AlgebraData, HopfData};
use crate::error::{Error, Result};
use crate::linalg::{axpy, kron, scaled, unit_vec, zero_vec, Matrix, Subspace, Tensor3, Vector};
use crate::report::{Check, VerificationReport};
use crate::scalar::{Field, Scalar};
use crate::smash::BasedSubalgebra;

const SECTION: &str = "§6";
const ISOS: &str = "Lemma 6.1";
const LEMMA: &str = "Lemma 6.2";
const THEOREM: &str = "Thm 6.3";

/// Header note attached to duality reports.
pub const UNIT_NOTE: &str = "e is built from φ(S⁻¹(p_i)#1_H); the printed 1_A in its formula is read as 1_H";
/// Header note for the `φ` map of `H*#H`.
pub const OPPOSITE_NOTE: &str =
    "φ(f#h)(k) = (k←f)h composes in reverse: it is checked as an algebra map H*#H → End(H)^op";

/// `left[f][h] = f → h = h₍₁₎⟨f, h₍₂₎⟩` and `right[f][h] = h ← f = h₍₂₎⟨f, h₍₁₎⟩`.
pub fn dual_actions(h: &HopfData) -> (Tensor3, Tensor3) {
    let n = h.dim();
    let f = h.field();
    let mut left = Tensor3::zeros(f, [n, n, n]);
    let mut right = Tensor3::zeros(f, [n, n, n]);
    for k in 0..n {
        for (k1, k2, c) in h.coalgebra.coproduct(k) {
            let l = left.get(*k2, k, *k1).clone() + c.clone();
            left.set(*k2, k, *k1, l);
            let r = right.get(*k1, k, *k2).clone() + c.clone();
            right.set(*k1, k, *k2, r);
        }
    }
    (left, right)
}

/// Module-algebra axioms of `H` under `→` (left) and `←` (right).
pub fn check_dual_actions(h: &HopfData, subject: &str) -> VerificationReport {
    let mut r = VerificationReport::new(subject);
    let hs = dual_hopf(h);
    let (left, right) = dual_actions(h);
    let n = h.dim();
    let f = h.field();
    let e = |i: usize| unit_vec(f, n, i);
    let la = |x: &[Scalar], y: &[Scalar]| left.contract(x, y);
    let ra = |y: &[Scalar], x: &[Scalar]| right.contract(x, y);
    r.push(Check::exhaustive("ε → h = h", SECTION, &[n], |t| (la(hs.unit(), &e(t[0])), e(t[0]))));
    r.push(Check::exhaustive("h ← ε = h", SECTION, &[n], |t| (ra(&e(t[0]), hs.unit()), e(t[0]))));
    r.push(Check::exhaustive("f → (g → h) = (f*g) → h", SECTION, &[n, n, n], |t| {
        (la(&e(t[0]), &la(&e(t[1]), &e(t[2]))), la(hs.basis_mul(t[0], t[1]), &e(t[2])))
    }));
    r.push(Check::exhaustive("(h ← f) ← g = h ← (f*g)", SECTION, &[n, n, n], |t| {
        (ra(&ra(&e(t[0]), &e(t[1])), &e(t[2])), ra(&e(t[0]), hs.basis_mul(t[1], t[2])))
    }));
    r.push(Check::exhaustive("f → (hk) = (f₍₁₎ → h)(f₍₂₎ → k)", SECTION, &[n, n, n], |t| {
        let mut rhs = zero_vec(f, n);
        for (f1, f2, c) in hs.coalgebra.coproduct(t[0]) {
            axpy(&mut rhs, c, &h.mul(left.fiber(*f1, t[1]), left.fiber(*f2, t[2])));
        }
        (la(&e(t[0]), h.basis_mul(t[1], t[2])), rhs)
    }));
    r.push(Check::exhaustive("(hk) ← f = (h ← f₍₁₎)(k ← f₍₂₎)", SECTION, &[n, n, n], |t| {
        let mut rhs = zero_vec(f, n);
        for (f1, f2, c) in hs.coalgebra.coproduct(t[0]) {
            axpy(&mut rhs, c, &h.mul(right.fiber(*f1, t[1]), right.fiber(*f2, t[2])));
        }
        (ra(h.basis_mul(t[1], t[2]), &e(t[0])), rhs)
    }));
    r.push(Check::exhaustive("f → 1 = ⟨f, 1⟩1 and 1 ← f = ⟨f, 1⟩1", SECTION, &[n], |t| {
        let c = h.unit().iter().zip(hs.basis_vector(t[0])).fold(f.zero(), |acc, (a, b)| acc + a.clone() * b);
        let l = la(&e(t[0]), h.unit());
        let rr = ra(h.unit(), &e(t[0]));
        ([l, rr].concat(), [scaled(h.unit(), &c), scaled(h.unit(), &c)].concat())
    }));
    r
}

fn full(algebra: AlgebraData) -> Result<BasedSubalgebra> {
    let space = Subspace::new(Matrix::identity(algebra.field(), algebra.dim()))?;
    Ok(BasedSubalgebra { space, algebra })
}

/// `H#H*` on `e_h # p_f` (index `h·n + f`) with
/// `(h#f)(k#g) = h(f₍₁₎ → k) # f₍₂₎*g`.
pub fn build_h_smash_hstar(h: &HopfData) -> Result<BasedSubalgebra> {
    let n = h.dim();
    let fld = h.field();
    let hs = dual_hopf(h);
    let (left, _) = dual_actions(h);
    let mult = Tensor3::from_fn(fld, [n * n, n * n, n * n], |x, y| {
        let (hh, ff) = (x / n, x % n);
        let (k, g) = (y / n, y % n);
        let mut out = zero_vec(fld, n * n);
        for (f1, f2, c) in hs.coalgebra.coproduct(ff) {
            let hk = h.algebra.mul_basis_left(hh, left.fiber(*f1, k));
            axpy(&mut out, c, &kron(&hk, hs.basis_mul(*f2, g)));
        }
        out
    });
    let names = pair_names(h.names(), hs.names(), "#");
    let unit = kron(h.unit(), hs.unit());
    full(AlgebraData::new(names, mult, Some(unit))?)
}

/// `H*#H` on `p_f # e_h` (index `f·n + h`) with the standard smash product
/// `(f#h)(g#k) = f(h₍₁₎ ⇀ g) # h₍₂₎k`, `(h ⇀ g)(x) = g(xh)`.
pub fn build_hstar_smash_h(h: &HopfData) -> Result<AlgebraData> {
    let n = h.dim();
    let fld = h.field();
    let hs = dual_hopf(h);
    // (e_h ⇀ p_g) = Σ_x ⟨p_g, e_x e_h⟩ p_x
    let hit = |hh: usize, g: usize| -> Vector { (0..n).map(|x| h.basis_mul(x, hh)[g].clone()).collect() };
    let mult = Tensor3::from_fn(fld, [n * n, n * n, n * n], |x, y| {
        let (ff, hh) = (x / n, x % n);
        let (g, k) = (y / n, y % n);
        let mut out = zero_vec(fld, n * n);
        for (h1, h2, c) in h.coalgebra.coproduct(hh) {
            let fg = hs.algebra.mul_basis_left(ff, &hit(*h1, g));
            axpy(&mut out, c, &kron(&fg, h.basis_mul(*h2, k)));
        }
        out
    });
    AlgebraData::new(pair_names(hs.names(), h.names(), "#"), mult, Some(kron(hs.unit(), h.unit())))
}

fn pair_names(a: &[String], b: &[String], sep: &str) -> Vec<String> {
    a.iter().flat_map(|x| b.iter().map(move |y| format!("{x}{sep}{y}"))).collect()
}

/// `λ(h#f)(k) = h(f → k)` and `φ(f#h)(k) = (k ← f)h` as matrices into
/// `End(H)` coordinates, with the verification report.
pub fn lambda_phi_isos(h: &HopfData, subject: &str) -> Result<(Matrix, Matrix, VerificationReport)> {
    let n = h.dim();
    let fld = h.field();
    let (left, right) = dual_actions(h);
    let end = end_algebra(fld, n)?;
    let lambda_cols: Vec<Vector> = (0..n * n)
        .map(|x| {
            let (hh, ff) = (x / n, x % n);
            let cols: Vec<Vector> = (0..n).map(|k| h.algebra.mul_basis_left(hh, left.fiber(ff, k))).collect();
            matrix_to_end(&Matrix::from_columns(fld, n, &cols).expect("shape"))
        })
        .collect();
    let phi_cols: Vec<Vector> = (0..n * n)
        .map(|x| {
            let (ff, hh) = (x / n, x % n);
            let cols: Vec<Vector> = (0..n).map(|k| h.algebra.mul_basis_right(right.fiber(ff, k), hh)).collect();
            matrix_to_end(&Matrix::from_columns(fld, n, &cols).expect("shape"))
        })
        .collect();
    let lambda = Matrix::from_columns(fld, n * n, &lambda_cols)?;
    let phi = Matrix::from_columns(fld, n * n, &phi_cols)?;

    let mut r = VerificationReport::new(subject);
    r.note(OPPOSITE_NOTE);
    let hh = build_h_smash_hstar(h)?;
    let sh = build_hstar_smash_h(h)?;
    let d = n * n;
    r.push(Check::exhaustive("λ multiplicative", ISOS, &[d, d], |t| {
        (lambda.apply(hh.algebra.basis_mul(t[0], t[1])), end.mul(&lambda_cols[t[0]], &lambda_cols[t[1]]))
    }));
    r.push(Check::exhaustive("λ(1#ε) = id", ISOS, &[], |_| {
        (lambda.apply(hh.algebra.unit.as_ref().expect("unit")), end.unit.clone().expect("unit"))
    }));
    let lr = lambda.rank();
    r.push(Check::verdict("λ bijective", ISOS, lr == d, vec![], format!("rank {lr}"), format!("(dim H)² = {d}")));
    r.push(Check::exhaustive("φ multiplicative into End(H)^op", ISOS, &[d, d], |t| {
        (phi.apply(sh.basis_mul(t[0], t[1])), end.mul(&phi_cols[t[1]], &phi_cols[t[0]]))
    }));
    r.inform(Check::exhaustive("φ multiplicative into End(H)", ISOS, &[d, d], |t| {
        (phi.apply(sh.basis_mul(t[0], t[1])), end.mul(&phi_cols[t[0]], &phi_cols[t[1]]))
    }));
    r.push(Check::exhaustive("φ(ε#1) = id", ISOS, &[], |_| {
        (phi.apply(sh.unit.as_ref().expect("unit")), end.unit.clone().expect("unit"))
    }));
    let pr = phi.rank();
    r.push(Check::verdict("φ bijective", ISOS, pr == d, vec![], format!("rank {pr}"), format!("(dim H)² = {d}")));
    Ok((lambda, phi, r))
}

/// The right `H`-comodule structure `ρ = id⊗Δ` and the `H*`-action
/// `f·z = (id ⊗ (f →))z` on `⟨A⊛H⟩`, with their axioms and the displayed
/// formulas on typical elements `(a⊗h)(1_A⊗1_H)`.
pub fn comodule_and_module_structures(d: &BimoduleData, s: &BasedSubalgebra, subject: &str) -> Result<VerificationReport> {
    let h = &d.hopf;
    let hs = dual_hopf(h);
    let n = h.dim();
    let na = d.dim_a();
    let fld = d.field();
    let k = s.dim();
    let (left, _) = dual_actions(h);

    // ρ on A⊗H, landing in (A⊗H)⊗H.
    let rho_ambient = |z: &[Scalar]| -> Vector {
        let mut out = zero_vec(fld, na * n * n);
        for (i, c) in support(z) {
            let (a, hh) = (i / n, i % n);
            for (h1, h2, cc) in h.coalgebra.coproduct(hh) {
                let idx = (a * n + h1) * n + h2;
                out[idx] = out[idx].clone() + c.clone() * cc.clone();
            }
        }
        out
    };
    // (A⊗H)⊗H → coordinates in ⟨A⊛H⟩⊗H, or None.
    let to_s_h = |v: &[Scalar]| -> Option<Vector> {
        let mut out = zero_vec(fld, k * n);
        for t in 0..n {
            let slice: Vector = (0..na * n).map(|i| v[i * n + t].clone()).collect();
            let c = s.coords(&slice)?;
            for (i, x) in c.into_iter().enumerate() {
                out[i * n + t] = x;
            }
        }
        Some(out)
    };
    let rho = (0..k)
        .map(|i| {
            to_s_h(&rho_ambient(s.space.basis_vector(i))).ok_or_else(|| Error::Closure {
                structure: "ρ into ⟨A⊛H⟩⊗H".into(),
                indices: vec![i],
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let rho_t = Matrix::from_columns(fld, k * n, &rho)?;
    let act_ambient = |ff: &[Scalar], z: &[Scalar]| -> Vector {
        let mut out = zero_vec(fld, na * n);
        for (i, c) in support(z) {
            let (a, hh) = (i / n, i % n);
            let img = left.contract(ff, &unit_vec(fld, n, hh));
            axpy(&mut out, c, &kron(&unit_vec(fld, na, a), &img));
        }
        out
    };
    let act = (0..n)
        .map(|ff| {
            (0..k)
                .map(|i| {
                    s.coords(&act_ambient(&hs.basis_vector(ff), s.space.basis_vector(i))).ok_or_else(|| Error::Closure {
                        structure: "H*-action on ⟨A⊛H⟩".into(),
                        indices: vec![ff, i],
                    })
                })
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    let act_t = Tensor3::from_fn(fld, [n, k, k], |ff, i| act[ff][i].clone());

    let sh = tensor_algebra(&s.algebra, &h.algebra);
    let mut r = VerificationReport::new(subject);
    let e = |m: usize, i: usize| unit_vec(fld, m, i);
    // (ρ⊗id)ρ and (id⊗Δ)ρ on ⟨A⊛H⟩⊗H⊗H, index (i·n + t)·n + u.
    let rho_rho = |z: &[Scalar]| -> Vector {
        let first = rho_t.apply(z);
        let mut out = zero_vec(fld, k * n * n);
        for (x, c) in support(&first) {
            let (i, t) = (x / n, x % n);
            for (y, cc) in support(&rho[i]) {
                let (j, u) = (y / n, y % n);
                let idx = (j * n + u) * n + t;
                out[idx] = out[idx].clone() + c.clone() * cc.clone();
            }
        }
        out
    };
    let delta_rho = |z: &[Scalar]| -> Vector {
        let first = rho_t.apply(z);
        let mut out = zero_vec(fld, k * n * n);
        for (x, c) in support(&first) {
            let (i, t) = (x / n, x % n);
            for (t1, t2, cc) in h.coalgebra.coproduct(t) {
                let idx = (i * n + t1) * n + t2;
                out[idx] = out[idx].clone() + c.clone() * cc.clone();
            }
        }
        out
    };
    r.push(Check::exhaustive("(ρ⊗id)ρ = (id⊗Δ)ρ", SECTION, &[k], |t| (rho_rho(&e(k, t[0])), delta_rho(&e(k, t[0])))));
    r.push(Check::exhaustive("(id⊗ε)ρ = id", SECTION, &[k], |t| {
        let v = rho_t.apply(&e(k, t[0]));
        let mut out = zero_vec(fld, k);
        for (x, c) in support(&v) {
            out[x / n] = out[x / n].clone() + c.clone() * h.counit()[x % n].clone();
        }
        (out, e(k, t[0]))
    }));
    r.push(Check::exhaustive("ρ multiplicative", SECTION, &[k, k], |t| {
        (rho_t.apply(s.algebra.basis_mul(t[0], t[1])), sh.mul(&rho[t[0]], &rho[t[1]]))
    }));
    if let Some(u) = &s.algebra.unit {
        r.push(Check::exhaustive("ρ(1) = 1⊗1_H", SECTION, &[], |_| (rho_t.apply(u), kron(u, h.unit()))));
    }

    let fa = |ff: &[Scalar], z: &[Scalar]| act_t.contract(ff, z);
    r.push(Check::exhaustive("ε·z = z", SECTION, &[k], |t| (fa(hs.unit(), &e(k, t[0])), e(k, t[0]))));
    r.push(Check::exhaustive("f·(g·z) = (f*g)·z", SECTION, &[n, n, k], |t| {
        (fa(&e(n, t[0]), &fa(&e(n, t[1]), &e(k, t[2]))), fa(hs.basis_mul(t[0], t[1]), &e(k, t[2])))
    }));
    r.push(Check::exhaustive("f·(zw) = (f₍₁₎·z)(f₍₂₎·w)", SECTION, &[n, k, k], |t| {
        let mut rhs = zero_vec(fld, k);
        for (f1, f2, c) in hs.coalgebra.coproduct(t[0]) {
            axpy(&mut rhs, c, &s.algebra.mul(act_t.fiber(*f1, t[1]), act_t.fiber(*f2, t[2])));
        }
        (fa(&e(n, t[0]), s.algebra.basis_mul(t[1], t[2])), rhs)
    }));
    if let Some(u) = &s.algebra.unit {
        r.push(Check::exhaustive("f·1 = ⟨f, 1_H⟩1", SECTION, &[n], |t| {
            let c = hs.basis_vector(t[0]).iter().zip(h.unit()).fold(fld.zero(), |acc, (a, b)| acc + a.clone() * b.clone());
            (fa(&e(n, t[0]), u), scaled(u, &c))
        }));
    }

    // Displayed formulas on typical elements (a⊗h)(1_A⊗1_H).
    let one = d.algebra.one()?.clone();
    let typical = |a: usize, hh: usize| -> Vector { d.conj_middle(hh, &e(na, a)) };
    r.push(Check::exhaustive(
        "ρ((a⊗h)1_A) = a(h₍₁₎⇀1_A↼S(h₍₂₎))⊗h₍₃₎⊗h₍₄₎",
        SECTION,
        &[na, n],
        |t| {
            let (a, hh) = (t[0], t[1]);
            let lhs = rho_ambient(&typical(a, hh));
            let mut rhs = zero_vec(fld, na * n * n);
            for (idx, c) in h.coalgebra.iterated(hh, 4) {
                let v = d.act_right(&d.left_basis(idx[0], &one), &h.antipode.column(idx[1]));
                let av = d.algebra.mul(&e(na, a), &v);
                axpy(&mut rhs, &c, &kron(&kron(&av, &e(n, idx[2])), &e(n, idx[3])));
            }
            (lhs, rhs)
        },
    ));
    r.push(Check::exhaustive(
        "a(h₍₁₎⇀1_A↼S(h₍₃₎))#(f→h₍₂₎) = (a#(f→h))1_A",
        SECTION,
        &[n, na, n],
        |t| {
            let (ff, a, hh) = (t[0], t[1], t[2]);
            let lhs = act_ambient(&e(n, ff), &typical(a, hh));
            let fh = left.fiber(ff, hh).to_vec();
            let mut rhs = zero_vec(fld, na * n);
            for (x, c) in support(&fh) {
                axpy(&mut rhs, c, &typical(a, x));
            }
            (lhs, rhs)
        },
    ));
    Ok(r)
}

#[derive(Clone, Debug)]
pub struct DualityData {
    pub hopf: HopfData,
    pub hstar: HopfData,
    pub h_smash_hstar: BasedSubalgebra,
    pub lambda: Matrix,
    pub phi_iso: Matrix,
    /// `A⊗End(H)`, index `a·n² + (i·n + j)`.
    pub a_end: AlgebraData,
    pub phi_a: Matrix,
    pub psi: Matrix,
    /// `A⊗H#H*`, index `a·n² + h·n + f`.
    pub carrier: AlgebraData,
    pub big_phi: Matrix,
    /// `⟨A⊛H⟩#H*` inside the carrier.
    pub restriction: Subspace,
    pub e: Vector,
}

impl DualityData {
    pub fn field(&self) -> Field {
        self.hopf.field()
    }
}

/// Builds `φ_A`, `ψ`, `Φ`, `e` and the carrier algebra for `d` and its
/// `⟨A⊛H⟩`.
pub fn build_duality_maps(d: &BimoduleData, s: &BasedSubalgebra) -> Result<DualityData> {
    let h = d.hopf.clone();
    let hs = dual_hopf(&h);
    let n = h.dim();
    let na = d.dim_a();
    let fld = d.field();
    let (lambda, phi_iso, _) = lambda_phi_isos(&h, "λ, φ")?;
    let hh = build_h_smash_hstar(&h)?;
    let end = end_algebra(fld, n)?;
    let a_end = tensor_algebra(&d.algebra, &end);
    let s_inv_star = hs.antipode_inverse()?;

    // X(p_i) = φ(S⁻¹(p_i) # 1_H)
    let x: Vec<Vector> = (0..n)
        .map(|i| {
            let f = s_inv_star.column(i);
            phi_iso.apply(&kron(&f, h.unit()))
        })
        .collect();
    let phi_a_cols: Vec<Vector> = (0..na)
        .map(|a| {
            let mut out = zero_vec(fld, na * n * n);
            for (i, xi) in x.iter().enumerate() {
                axpy(&mut out, &fld.one(), &kron(&d.conj(i, &unit_vec(fld, na, a)), xi));
            }
            out
        })
        .collect();
    let phi_a = Matrix::from_columns(fld, na * n * n, &phi_a_cols)?;
    let one = d.algebra.one()?.clone();
    let psi_cols: Vec<Vector> = (0..n * n).map(|i| kron(&one, &lambda.column(i))).collect();
    let psi = Matrix::from_columns(fld, na * n * n, &psi_cols)?;

    let big_cols: Vec<Vector> = (0..na * n * n)
        .map(|x| a_end.mul(&phi_a_cols[x / (n * n)], &psi_cols[x % (n * n)]))
        .collect();
    let big_phi = Matrix::from_columns(fld, na * n * n, &big_cols)?;

    let (left, _) = dual_actions(&h);
    let mult = Tensor3::from_fn(fld, [na * n * n, na * n * n, na * n * n], |x, y| {
        let (a, hx, fx) = (x / (n * n), (x / n) % n, x % n);
        let (b, ky, gy) = (y / (n * n), (y / n) % n, y % n);
        let mut out = zero_vec(fld, na * n * n);
        for (idx, c) in h.coalgebra.iterated(hx, 3) {
            let conj = d.act_right(&d.left_basis(idx[0], &unit_vec(fld, na, b)), &h.antipode.column(idx[2]));
            let av = d.algebra.mul_basis_left(a, &conj);
            for (f1, f2, cc) in hs.coalgebra.coproduct(fx) {
                let hv = h.algebra.mul_basis_left(idx[1], left.fiber(*f1, ky));
                let fg = hs.basis_mul(*f2, gy);
                axpy(&mut out, &(c.clone() * cc.clone()), &kron(&kron(&av, &hv), fg));
            }
        }
        out
    });
    let names = pair_names(&d.algebra.names, &hh.algebra.names, "⊗");
    let carrier = AlgebraData::new(names, mult, Some(kron(&one, hh.algebra.unit.as_ref().expect("unit"))))?;

    let restriction_gens: Vec<Vector> = (0..s.dim())
        .flat_map(|i| (0..n).map(move |f| (i, f)))
        .map(|(i, f)| kron(s.space.basis_vector(i), &unit_vec(fld, n, f)))
        .collect();
    let restriction = Subspace::span(fld, na * n * n, &restriction_gens)?;
    let unit_s = s.ambient_unit().ok_or_else(|| Error::Precondition("⟨A⊛H⟩ has no unit".into()))?;
    let e = big_phi.apply(&kron(&unit_s, hs.unit()));

    Ok(DualityData {
        hopf: h,
        hstar: hs,
        h_smash_hstar: hh,
        lambda,
        phi_iso,
        a_end,
        phi_a,
        psi,
        carrier,
        big_phi,
        restriction,
        e,
    })
}

/// `φ_A` multiplicative, the intertwining identity, `Φ` multiplicative,
/// `e² = e` and `Φ(⟨A⊛H⟩#H*) ⊆ e(A⊗End(H))e`.
pub fn check_duality(dd: &DualityData, d: &BimoduleData, subject: &str) -> VerificationReport {
    let mut r = VerificationReport::new(subject);
    r.note(UNIT_NOTE);
    let fld = dd.field();
    let n = dd.hopf.dim();
    let na = d.dim_a();
    let big = &dd.a_end;
    let phi_a = |a: &[Scalar]| dd.phi_a.apply(a);
    let ea = |i: usize| unit_vec(fld, na, i);

    r.push(Check::exhaustive("φ_A homomorphism", SECTION, &[na, na], |t| {
        (phi_a(d.algebra.basis_mul(t[0], t[1])), big.mul(&dd.phi_a.column(t[0]), &dd.phi_a.column(t[1])))
    }));
    r.push(Check::exhaustive("ψ multiplicative", SECTION, &[n * n, n * n], |t| {
        (
            dd.psi.apply(dd.h_smash_hstar.algebra.basis_mul(t[0], t[1])),
            big.mul(&dd.psi.column(t[0]), &dd.psi.column(t[1])),
        )
    }));
    let one = d.algebra.one().expect("unital").clone();
    let phi_one = phi_a(&one);
    r.push(Check::exhaustive("Lemma 6.2", LEMMA, &[n, n, na], |t| {
        let (h, f, a) = (t[0], t[1], t[2]);
        let lhs = big.mul(&big.mul(&phi_one, &dd.psi.column(h * n + f)), &dd.phi_a.column(a));
        let mut rhs = zero_vec(fld, big.dim());
        for (idx, c) in dd.hopf.coalgebra.iterated(h, 3) {
            let conj = d.act_right(&d.left_basis(idx[0], &ea(a)), &dd.hopf.antipode.column(idx[2]));
            axpy(&mut rhs, &c, &big.mul(&phi_a(&conj), &dd.psi.column(idx[1] * n + f)));
        }
        (lhs, rhs)
    }));
    let dim_c = dd.carrier.dim();
    r.push(Check::exhaustive("carrier associative", THEOREM, &[dim_c, dim_c, dim_c], |t| {
        (
            dd.carrier.mul(dd.carrier.basis_mul(t[0], t[1]), &unit_vec(fld, dim_c, t[2])),
            dd.carrier.mul(&unit_vec(fld, dim_c, t[0]), dd.carrier.basis_mul(t[1], t[2])),
        )
    }));
    r.push(Check::exhaustive("Thm 6.3 homomorphism", THEOREM, &[dim_c, dim_c], |t| {
        (
            dd.big_phi.apply(dd.carrier.basis_mul(t[0], t[1])),
            big.mul(&dd.big_phi.column(t[0]), &dd.big_phi.column(t[1])),
        )
    }));
    r.push(Check::exhaustive("e idempotent", THEOREM, &[], |_| (big.mul(&dd.e, &dd.e), dd.e.clone())));
    r.push(Check::exhaustive("φ_A(1_A) = e", THEOREM, &[], |_| (phi_one.clone(), dd.e.clone())));

    let corner_gens: Vec<Vector> = (0..big.dim())
        .map(|i| big.mul(&big.mul(&dd.e, &unit_vec(fld, big.dim(), i)), &dd.e))
        .collect();
    let corner = Subspace::span(fld, big.dim(), &corner_gens).expect("shape");
    let images: Vec<Vector> = (0..dd.restriction.dim()).map(|i| dd.big_phi.apply(dd.restriction.basis_vector(i))).collect();
    r.push(Check::exhaustive_membership("corner containment", THEOREM, &[images.len()], "e(A⊗End(H))e", |t| {
        let v = &images[t[0]];
        if corner.contains(v) {
            None
        } else {
            Some(v.clone())
        }
    }));
    r.inform(Check::exhaustive("corner containment agrees with eΦ(γ)e = Φ(γ)", THEOREM, &[images.len()], |t| {
        let v = &images[t[0]];
        let sandwiched = big.mul(&big.mul(&dd.e, v), &dd.e);
        let direct = corner.contains(v);
        (vec![if direct { fld.one() } else { fld.zero() }], vec![if sandwiched == *v { fld.one() } else { fld.zero() }])
    }));
    let rank = if images.is_empty() { 0 } else { Matrix::from_rows(fld, big.dim(), &images).map(|m| m.rank()).unwrap_or(0) };
    r.inform(Check::verdict(
        "Φ injective on ⟨A⊛H⟩#H*",
        THEOREM,
        rank == dd.restriction.dim(),
        vec![],
        format!("rank {rank}"),
        format!("dim ⟨A⊛H⟩#H* = {}", dd.restriction.dim()),
    ));
    r.inform(Check::verdict(
        "Φ(⟨A⊛H⟩#H*) = e(A⊗End(H))e",
        THEOREM,
        rank == corner.dim(),
        vec![],
        format!("rank {rank}"),
        format!("dim corner = {}", corner.dim()),
    ));
    r
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{bimodule, central_idempotent_example, group_algebra, sweedler_h4};
    use crate::smash::build_underline_smash;

    fn q() -> Field {
        Field::Rational
    }

    #[test]
    fn dual_action_values() {
        let h = group_algebra(q(), 2).unwrap();
        let (left, _) = dual_actions(&h);
        // δ_g → g = g, δ_g → 1 = 0
        assert_eq!(left.fiber(1, 1), &unit_vec(q(), 2, 1)[..]);
        assert_eq!(left.fiber(1, 0), &zero_vec(q(), 2)[..]);
        let h4 = sweedler_h4(q()).unwrap();
        let (left, _) = dual_actions(&h4);
        // x* → x = x₍₁₎⟨x*, x₍₂₎⟩ = c
        assert_eq!(left.fiber(2, 2), &unit_vec(q(), 4, 1)[..]);
        assert!(check_dual_actions(&h4, "H4").passed());
    }

    #[test]
    fn smash_products_and_isos() {
        for h in [group_algebra(q(), 2).unwrap(), sweedler_h4(q()).unwrap()] {
            let n = h.dim();
            let s = build_h_smash_hstar(&h).unwrap();
            assert_eq!(s.dim(), n * n);
            assert!(s.algebra.check("H#H*").passed());
            assert!(build_hstar_smash_h(&h).unwrap().check("H*#H").passed());
            let (lambda, phi, r) = lambda_phi_isos(&h, "isos").unwrap();
            assert!(r.passed(), "{}", r.to_json());
            assert_eq!(lambda.rank(), n * n);
            assert_eq!(phi.rank(), n * n);
        }
    }

    #[test]
    fn phi_reverses_products_on_h4() {
        let (_, _, r) = lambda_phi_isos(&sweedler_h4(q()).unwrap(), "H4").unwrap();
        assert!(r.informational.iter().any(|c| c.name == "φ multiplicative into End(H)" && c.failed()));
    }

    #[test]
    fn kz3_over_f7() {
        let f7 = Field::prime(7).unwrap();
        let h = group_algebra(f7, 3).unwrap();
        let (lambda, phi, r) = lambda_phi_isos(&h, "Z3").unwrap();
        assert!(r.passed());
        assert_eq!((lambda.rank(), phi.rank()), (9, 9));
    }

    #[test]
    fn global_scalar_action_gives_unit_e() {
        // e = 1_H makes k a global bimodule algebra; Φ reduces to λ.
        let h = group_algebra(q(), 2).unwrap();
        let d = central_idempotent_example(&h, h.unit()).unwrap();
        let s = build_underline_smash(&d).unwrap();
        let dd = build_duality_maps(&d, &s).unwrap();
        assert_eq!(Some(dd.e.clone()), dd.a_end.unit.clone());
        assert_eq!(dd.big_phi, dd.lambda);
        let r = check_duality(&dd, &d, "global");
        assert!(r.passed(), "{}", r.to_json());
        let c = comodule_and_module_structures(&d, &s, "global").unwrap();
        assert!(c.passed(), "{}", c.to_json());
    }

    #[test]
    fn kx_carrier_is_32_dimensional() {
        let d = bimodule(q(), "kx-in-h4").unwrap();
        let s = build_underline_smash(&d).unwrap();
        let dd = build_duality_maps(&d, &s).unwrap();
        assert_eq!(dd.carrier.dim(), 32);
        let r = check_duality(&dd, &d, "kx");
        assert!(r.check("e idempotent").unwrap().passed(), "{}", r.to_json());
    }

    /// `H*` as a global `H`-bimodule algebra: `(h ⇀ f)(x) = f(xh)`,
    /// `(f ↼ h)(x) = f(hx)`.
    fn regular_dual(h: &HopfData) -> BimoduleData {
        let n = h.dim();
        let mut left = Tensor3::zeros(q(), [n, n, n]);
        let mut right = Tensor3::zeros(q(), [n, n, n]);
        for hh in 0..n {
            for a in 0..n {
                for x in 0..n {
                    left.set(hh, a, x, h.basis_mul(x, hh)[a].clone());
                    right.set(hh, a, x, h.basis_mul(hh, x)[a].clone());
                }
            }
        }
        BimoduleData::new(h.clone(), dual_hopf(h).algebra, left, right).unwrap()
    }

    #[test]
    fn regular_h4_conjugation_is_not_measuring() {
        let h = sweedler_h4(q()).unwrap();
        let d = regular_dual(&h);
        assert!(crate::actions::check_global(&d, "regular").passed());
        // Direct witness: h₍₁₎⇀ab↼S(h₍₂₎) ≠ (h₍₁₎⇀a↼S(h₍₂₎))(h₍₃₎⇀b↼S(h₍₄₎)).
        let e = |i: usize| unit_vec(q(), 4, i);
        let broken = crate::report::tuples(&[4, 4, 4]).any(|t| {
            let lhs = d.conj(t[0], d.algebra.basis_mul(t[1], t[2]));
            let mut rhs = zero_vec(q(), 4);
            for (h1, h2, c) in h.coalgebra.coproduct(t[0]) {
                axpy(&mut rhs, c, &d.algebra.mul(&d.conj(*h1, &e(t[1])), &d.conj(*h2, &e(t[2]))));
            }
            lhs != rhs
        });
        assert!(broken);
        let s = build_underline_smash(&d).unwrap();
        let dd = build_duality_maps(&d, &s).unwrap();
        let r = check_duality(&dd, &d, "regular");
        for name in ["φ_A homomorphism", "Lemma 6.2", "Thm 6.3 homomorphism"] {
            assert!(r.check(name).unwrap().failed(), "{name}");
        }
        for name in ["ψ multiplicative", "e idempotent", "corner containment"] {
            assert!(r.check(name).unwrap().passed(), "{name}");
        }
        let c = comodule_and_module_structures(&d, &s, "regular").unwrap();
        assert!(c.check("ρ multiplicative").unwrap().failed());
        assert!(c.check("(ρ⊗id)ρ = (id⊗Δ)ρ").unwrap().passed());
    }

    #[test]
    fn catalog_duality_verdicts() {
        for name in ["central-idempotent-kz2", "kz2-skew-pair", "induced-kz2", "trivial-h4-on-kx", "kz2-sign"] {
            let d = bimodule(q(), name).unwrap();
            let s = build_underline_smash(&d).unwrap();
            let dd = build_duality_maps(&d, &s).unwrap();
            let r = check_duality(&dd, &d, name);
            assert!(r.passed(), "{name}: {}", r.to_json());
            assert!(comodule_and_module_structures(&d, &s, name).unwrap().passed(), "{name}");
        }
    }
}
