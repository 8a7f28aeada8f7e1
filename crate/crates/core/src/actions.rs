//! Partial and global bimodule-algebra actions of a Hopf algebra, their
//! axiom checkers, and the standard ways of producing them: restriction of a
//! global action to an ideal, skew pairs, and partial coactions.

use crate::algebra::{dual_hopf, support, AlgebraData, HopfData};
use crate::error::{Error, Result};
use crate::linalg::{axpy, kron, scaled, unit_vec, zero_vec, Matrix, Subspace, Tensor3, Vector};
use crate::report::{Check, VerificationReport};
use crate::scalar::{Field, Scalar};

/// Left and right actions of `hopf` on `algebra`, stored `H`-major:
/// `left[h][a]` is `h ⇀ a` and `right[h][a]` is `a ↼ h`.
///
/// Whether the actions are partial or global is a property established by
/// [`check_partial`] or [`check_global`], never assumed.
#[derive(Clone, Debug)]
pub struct BimoduleData {
    pub hopf: HopfData,
    pub algebra: AlgebraData,
    pub left: Tensor3,
    pub right: Tensor3,
}

impl BimoduleData {
    pub fn new(hopf: HopfData, algebra: AlgebraData, left: Tensor3, right: Tensor3) -> Result<Self> {
        let (h, a) = (hopf.dim(), algebra.dim());
        for (name, t) in [("left", &left), ("right", &right)] {
            if t.dims() != [h, a, a] {
                return Err(Error::Dimension(format!(
                    "{name} action tensor has shape {:?}, expected [{h}, {a}, {a}]",
                    t.dims()
                )));
            }
        }
        if hopf.field() != algebra.field() || left.field() != hopf.field() || right.field() != hopf.field() {
            return Err(Error::Field("Hopf algebra, algebra and actions use different fields".into()));
        }
        Ok(BimoduleData { hopf, algebra, left, right })
    }

    pub fn field(&self) -> Field {
        self.hopf.field()
    }

    pub fn dim_h(&self) -> usize {
        self.hopf.dim()
    }

    pub fn dim_a(&self) -> usize {
        self.algebra.dim()
    }

    /// `e_h ⇀ a`
    pub fn left_basis(&self, h: usize, a: &[Scalar]) -> Vector {
        let mut out = zero_vec(self.field(), self.dim_a());
        for (j, c) in support(a) {
            axpy(&mut out, c, self.left.fiber(h, j));
        }
        out
    }

    /// `a ↼ e_h`
    pub fn right_basis(&self, a: &[Scalar], h: usize) -> Vector {
        let mut out = zero_vec(self.field(), self.dim_a());
        for (j, c) in support(a) {
            axpy(&mut out, c, self.right.fiber(h, j));
        }
        out
    }

    pub fn act_left(&self, h: &[Scalar], a: &[Scalar]) -> Vector {
        self.left.contract(h, a)
    }

    pub fn act_right(&self, a: &[Scalar], h: &[Scalar]) -> Vector {
        self.right.contract(h, a)
    }

    /// `h ⇀ a ↼ g`
    pub fn two_sided(&self, h: &[Scalar], a: &[Scalar], g: &[Scalar]) -> Vector {
        self.act_right(&self.act_left(h, a), g)
    }

    /// `h₍₁₎ ⇀ a ↼ S(h₍₂₎)` for the basis element `e_h`.
    pub fn conj(&self, h: usize, a: &[Scalar]) -> Vector {
        let mut out = zero_vec(self.field(), self.dim_a());
        for (j, k, c) in self.hopf.coalgebra.coproduct(h) {
            let v = self.act_right(&self.left_basis(*j, a), &self.hopf.antipode.column(*k));
            axpy(&mut out, c, &v);
        }
        out
    }

    /// `conj` extended linearly to arbitrary `h`.
    pub fn conj_vec(&self, h: &[Scalar], a: &[Scalar]) -> Vector {
        let mut out = zero_vec(self.field(), self.dim_a());
        for (i, c) in support(h) {
            axpy(&mut out, c, &self.conj(i, a));
        }
        out
    }

    /// `h₍₁₎ ⇀ a ↼ S(h₍₃₎) ⊗ h₍₂₎` on `A ⊗ H` (index `a·dim H + h`).
    pub fn conj_middle(&self, h: usize, a: &[Scalar]) -> Vector {
        let n = self.dim_h();
        let mut out = zero_vec(self.field(), self.dim_a() * n);
        for (idx, c) in self.hopf.coalgebra.iterated(h, 3) {
            let v = self.act_right(&self.left_basis(idx[0], a), &self.hopf.antipode.column(idx[2]));
            axpy(&mut out, &c, &kron(&v, &unit_vec(self.field(), n, idx[1])));
        }
        out
    }

    /// The same actions with the Hopf algebra expressed in the basis given
    /// by the columns of `p`.
    pub fn rebase_hopf(&self, p: &Matrix, names: Vec<String>) -> Result<BimoduleData> {
        let hopf = self.hopf.rebase(p, names)?;
        let (nh, na) = (self.dim_h(), self.dim_a());
        let f = self.field();
        let rebase = |t: &Tensor3| {
            Tensor3::from_fn(f, [nh, na, na], |h, a| {
                let mut out = zero_vec(f, na);
                for (k, c) in support(&p.column(h)) {
                    axpy(&mut out, c, t.fiber(k, a));
                }
                out
            })
        };
        BimoduleData::new(hopf, self.algebra.clone(), rebase(&self.left), rebase(&self.right))
    }

    fn one_a(&self) -> Option<&Vector> {
        self.algebra.unit.as_ref()
    }
}

const LEFT_PARTIAL: &str = "Def 2.1";
const RIGHT_PARTIAL: &str = "Def 3.1";
const BIMODULE: &str = "Def 3.2";

/// The seven partial bimodule-algebra axioms, exhaustively on basis tuples.
pub fn check_partial(d: &BimoduleData, subject: &str) -> VerificationReport {
    let mut r = VerificationReport::new(subject);
    let (nh, na) = (d.dim_h(), d.dim_a());
    let alg = &d.algebra;
    let co = &d.hopf.coalgebra;
    let f = d.field();
    let e = |i: usize| unit_vec(f, na, i);
    let Some(one) = d.one_a() else {
        r.push(Check::verdict(
            "unital algebra",
            LEFT_PARTIAL,
            false,
            vec![],
            "no unit",
            "1_A",
        ));
        return r;
    };
    let one_h = d.hopf.unit().clone();

    r.push(Check::exhaustive("left multiplicativity", LEFT_PARTIAL, &[nh, na, na], |t| {
        let lhs = d.left_basis(t[0], alg.basis_mul(t[1], t[2]));
        let mut rhs = zero_vec(f, na);
        for (j, k, c) in co.coproduct(t[0]) {
            axpy(&mut rhs, c, &alg.mul(d.left.fiber(*j, t[1]), d.left.fiber(*k, t[2])));
        }
        (lhs, rhs)
    }));
    r.push(Check::exhaustive("1_H acts as identity", LEFT_PARTIAL, &[na], |t| {
        (d.act_left(&one_h, &e(t[0])), e(t[0]))
    }));
    r.push(Check::exhaustive("left partial associativity", LEFT_PARTIAL, &[nh, nh, na], |t| {
        let lhs = d.left_basis(t[0], d.left.fiber(t[1], t[2]));
        let mut rhs = zero_vec(f, na);
        for (j, k, c) in co.coproduct(t[0]) {
            let h2g = d.hopf.basis_mul(*k, t[1]);
            axpy(&mut rhs, c, &alg.mul(&d.left_basis(*j, one), &d.act_left(h2g, &e(t[2]))));
        }
        (lhs, rhs)
    }));
    r.push(Check::exhaustive("right multiplicativity", RIGHT_PARTIAL, &[nh, na, na], |t| {
        let lhs = d.right_basis(alg.basis_mul(t[1], t[2]), t[0]);
        let mut rhs = zero_vec(f, na);
        for (j, k, c) in co.coproduct(t[0]) {
            axpy(&mut rhs, c, &alg.mul(d.right.fiber(*j, t[1]), d.right.fiber(*k, t[2])));
        }
        (lhs, rhs)
    }));
    r.push(Check::exhaustive("1_H acts as identity (right)", RIGHT_PARTIAL, &[na], |t| {
        (d.act_right(&e(t[0]), &one_h), e(t[0]))
    }));
    // (a ↼ g) ↼ h = (1_A ↼ h₍₁₎)(a ↼ g h₍₂₎), tuple (h, g, a)
    r.push(Check::exhaustive("right partial associativity", RIGHT_PARTIAL, &[nh, nh, na], |t| {
        let lhs = d.right_basis(d.right.fiber(t[1], t[2]), t[0]);
        let mut rhs = zero_vec(f, na);
        for (j, k, c) in co.coproduct(t[0]) {
            let gh2 = d.hopf.basis_mul(t[1], *k);
            axpy(&mut rhs, c, &alg.mul(&d.right_basis(one, *j), &d.act_right(&e(t[2]), gh2)));
        }
        (lhs, rhs)
    }));
    r.push(Check::exhaustive("compatibility", BIMODULE, &[nh, na, nh], |t| {
        (
            d.right_basis(d.left.fiber(t[0], t[1]), t[2]),
            d.left_basis(t[0], d.right.fiber(t[2], t[1])),
        )
    }));
    r.inform(Check::exhaustive("h ⇀ 1_A idempotent-like", LEFT_PARTIAL, &[nh], |t| {
        let mut lhs = zero_vec(f, na);
        for (j, k, c) in co.coproduct(t[0]) {
            axpy(&mut lhs, c, &alg.mul(&d.left_basis(*j, one), &d.left_basis(*k, one)));
        }
        (lhs, d.left_basis(t[0], one))
    }));
    r
}

/// `(a ↼ S(h₍₁₎)) ⊗ h₍₂₎ = (a ↼ S(h₍₂₎)) ⊗ h₍₁₎` in `A ⊗ H`, for all basis
/// pairs `(a, h)`.
pub fn check_symmetry(d: &BimoduleData, subject: &str) -> VerificationReport {
    let mut r = VerificationReport::new(subject);
    let (nh, na) = (d.dim_h(), d.dim_a());
    let f = d.field();
    r.push(Check::exhaustive("symmetry assumption", "§3 standing assumption", &[na, nh], |t| {
        let a = unit_vec(f, na, t[0]);
        let mut lhs = zero_vec(f, na * nh);
        let mut rhs = zero_vec(f, na * nh);
        for (j, k, c) in d.hopf.coalgebra.coproduct(t[1]) {
            let l = d.act_right(&a, &d.hopf.antipode.column(*j));
            axpy(&mut lhs, c, &kron(&l, &unit_vec(f, nh, *k)));
            let rr = d.act_right(&a, &d.hopf.antipode.column(*k));
            axpy(&mut rhs, c, &kron(&rr, &unit_vec(f, nh, *j)));
        }
        (lhs, rhs)
    }));
    r
}

/// Global bimodule-algebra axioms. Unitality of the actions is skipped when
/// the algebra has no unit.
pub fn check_global(d: &BimoduleData, subject: &str) -> VerificationReport {
    const REF: &str = "Lemma 3.8 (global H-bimodule algebra)";
    let mut r = VerificationReport::new(subject);
    let (nh, na) = (d.dim_h(), d.dim_a());
    let alg = &d.algebra;
    let co = &d.hopf.coalgebra;
    let f = d.field();
    let e = |i: usize| unit_vec(f, na, i);
    let one_h = d.hopf.unit().clone();
    let eps = d.hopf.counit();

    r.push(Check::exhaustive("left multiplicativity", REF, &[nh, na, na], |t| {
        let lhs = d.left_basis(t[0], alg.basis_mul(t[1], t[2]));
        let mut rhs = zero_vec(f, na);
        for (j, k, c) in co.coproduct(t[0]) {
            axpy(&mut rhs, c, &alg.mul(d.left.fiber(*j, t[1]), d.left.fiber(*k, t[2])));
        }
        (lhs, rhs)
    }));
    r.push(Check::exhaustive("1_H acts as identity", REF, &[na], |t| {
        (d.act_left(&one_h, &e(t[0])), e(t[0]))
    }));
    r.push(Check::exhaustive("left associativity", REF, &[nh, nh, na], |t| {
        (
            d.left_basis(t[0], d.left.fiber(t[1], t[2])),
            d.act_left(d.hopf.basis_mul(t[0], t[1]), &e(t[2])),
        )
    }));
    r.push(Check::exhaustive("right multiplicativity", REF, &[nh, na, na], |t| {
        let lhs = d.right_basis(alg.basis_mul(t[1], t[2]), t[0]);
        let mut rhs = zero_vec(f, na);
        for (j, k, c) in co.coproduct(t[0]) {
            axpy(&mut rhs, c, &alg.mul(d.right.fiber(*j, t[1]), d.right.fiber(*k, t[2])));
        }
        (lhs, rhs)
    }));
    r.push(Check::exhaustive("1_H acts as identity (right)", REF, &[na], |t| {
        (d.act_right(&e(t[0]), &one_h), e(t[0]))
    }));
    r.push(Check::exhaustive("right associativity", REF, &[nh, nh, na], |t| {
        (
            d.right_basis(d.right.fiber(t[1], t[2]), t[0]),
            d.act_right(&e(t[2]), d.hopf.basis_mul(t[1], t[0])),
        )
    }));
    r.push(Check::exhaustive("compatibility", REF, &[nh, na, nh], |t| {
        (
            d.right_basis(d.left.fiber(t[0], t[1]), t[2]),
            d.left_basis(t[0], d.right.fiber(t[2], t[1])),
        )
    }));
    match d.one_a() {
        Some(one) => {
            r.push(Check::exhaustive("h ▷ 1 = ε(h)1", REF, &[nh], |t| {
                (d.left_basis(t[0], one), scaled(one, &eps[t[0]]))
            }));
            r.push(Check::exhaustive("1 ◁ h = ε(h)1", REF, &[nh], |t| {
                (d.right_basis(one, t[0]), scaled(one, &eps[t[0]]))
            }));
        }
        None => {
            r.push(Check::skipped("h ▷ 1 = ε(h)1", REF, "algebra has no unit"));
            r.push(Check::skipped("1 ◁ h = ε(h)1", REF, "algebra has no unit"));
        }
    }
    r
}

/// The algebra structure on the span of `basis` (rows, in `b` coordinates)
/// with unit `unit`, failing if the span is not closed.
pub fn restrict_algebra(b: &AlgebraData, space: &Subspace, unit: Option<&[Scalar]>, what: &str) -> Result<AlgebraData> {
    let k = space.dim();
    let f = b.field();
    let mult = Tensor3::try_from_fn(f, [k, k, k], |i, j| {
        let p = b.mul(space.basis_vector(i), space.basis_vector(j));
        space.coords(&p).ok_or_else(|| Error::Closure {
            structure: what.into(),
            indices: vec![i, j],
        })
    })?;
    let unit = match unit {
        Some(u) => Some(space.coords(u).ok_or_else(|| Error::Precondition(format!("unit of {what} is not in its span")))?),
        None => None,
    };
    let names = (0..k).map(|i| format!("v{i}")).collect();
    AlgebraData::new(names, mult, unit)
}

/// The partial action induced on a unital two-sided ideal `A` of a global
/// bimodule algebra `B`: `h ⇀ a = 1_A (h ▷ a)` and `a ↼ h = (a ◁ h) 1_A`.
///
/// The result is expressed in the echelon basis of the span of
/// `ideal_basis`.
pub fn induced_partial_from_global(g: &BimoduleData, ideal_basis: &[Vector], unit: &[Scalar]) -> Result<(BimoduleData, Subspace)> {
    let b = &g.algebra;
    let nb = b.dim();
    let f = g.field();
    let space = Subspace::span(f, nb, ideal_basis)?;
    if space.dim() == 0 {
        return Err(Error::Precondition("the zero ideal has no unity".into()));
    }
    if !space.contains(unit) {
        return Err(Error::Precondition("1_A is not in the ideal".into()));
    }
    if b.mul(unit, unit) != unit {
        return Err(Error::Precondition("1_A is not idempotent".into()));
    }
    for i in 0..space.dim() {
        let v = space.basis_vector(i);
        if b.mul(unit, v) != v || b.mul(v, unit) != v {
            return Err(Error::Precondition(format!("1_A is not a unit for ideal basis element {i}")));
        }
        for j in 0..nb {
            let e = unit_vec(f, nb, j);
            if !space.contains(&b.mul(&e, v)) || !space.contains(&b.mul(v, &e)) {
                return Err(Error::Closure {
                    structure: "ideal".into(),
                    indices: vec![i, j],
                });
            }
        }
    }
    let algebra = restrict_algebra(b, &space, Some(unit), "ideal")?;
    let (nh, na) = (g.dim_h(), space.dim());
    let coords = |v: &[Scalar]| {
        space.coords(v).ok_or_else(|| Error::Closure {
            structure: "induced action".into(),
            indices: vec![],
        })
    };
    let left = Tensor3::try_from_fn(f, [nh, na, na], |h, a| coords(&b.mul(unit, &g.left_basis(h, space.basis_vector(a)))))?;
    let right = Tensor3::try_from_fn(f, [nh, na, na], |h, a| coords(&b.mul(&g.right_basis(space.basis_vector(a), h), unit)))?;
    Ok((BimoduleData::new(g.hopf.clone(), algebra, left, right)?, space))
}

/// A bilinear form `σ(a_i, h_j) = sigma[i][j]` between two Hopf algebras.
#[derive(Clone, Debug)]
pub struct SkewPairData {
    pub a: HopfData,
    pub h: HopfData,
    pub sigma: Matrix,
}

impl SkewPairData {
    pub fn new(a: HopfData, h: HopfData, sigma: Matrix) -> Result<Self> {
        if sigma.rows() != a.dim() || sigma.cols() != h.dim() {
            return Err(Error::Dimension(format!(
                "σ is {}x{}, expected {}x{}",
                sigma.rows(),
                sigma.cols(),
                a.dim(),
                h.dim()
            )));
        }
        Ok(SkewPairData { a, h, sigma })
    }

    pub fn eval(&self, x: &[Scalar], y: &[Scalar]) -> Scalar {
        let mut acc = self.a.field().zero();
        for (i, c) in support(x) {
            for (j, d) in support(y) {
                acc += &(&(c * d) * self.sigma.get(i, j));
            }
        }
        acc
    }
}

/// Skew-pair conditions (1), (2) (both equalities) and (3).
pub fn check_skew_pair(s: &SkewPairData, subject: &str) -> VerificationReport {
    const REF: &str = "Def 3.4";
    let mut r = VerificationReport::new(subject);
    let (na, nh) = (s.a.dim(), s.h.dim());
    let f = s.a.field();
    let ea = |i: usize| unit_vec(f, na, i);
    let eh = |i: usize| unit_vec(f, nh, i);
    let one_a = s.a.unit().clone();
    r.push(Check::exhaustive("skew pair (1)", REF, &[na, na, nh], |t| {
        let lhs = s.eval(s.a.basis_mul(t[0], t[1]), &eh(t[2]));
        let mut rhs = f.zero();
        for (j, k, c) in s.h.coalgebra.coproduct(t[2]) {
            rhs += &(&(c * s.sigma.get(t[0], *j)) * s.sigma.get(t[1], *k));
        }
        (vec![lhs], vec![rhs])
    }));
    let lhs2 = |t: &[usize]| {
        let mut acc = f.zero();
        for (j, k, c) in s.a.coalgebra.coproduct(t[0]) {
            acc += &(&(c * s.sigma.get(*j, t[1])) * s.sigma.get(*k, t[2]));
        }
        acc
    };
    // tuple (a, h, g)
    r.push(Check::exhaustive("skew pair (2a)", REF, &[na, nh, nh], |t| {
        let mut rhs = f.zero();
        for (j, k, c) in s.h.coalgebra.coproduct(t[2]) {
            let g2h = s.h.basis_mul(*k, t[1]);
            rhs += &(&(c * &s.eval(&one_a, &eh(*j))) * &s.eval(&ea(t[0]), g2h));
        }
        (vec![lhs2(t)], vec![rhs])
    }));
    r.push(Check::exhaustive("skew pair (2b)", REF, &[na, nh, nh], |t| {
        let mut rhs = f.zero();
        for (j, k, c) in s.h.coalgebra.coproduct(t[1]) {
            let gh2 = s.h.basis_mul(t[2], *k);
            rhs += &(&(c * &s.eval(&one_a, &eh(*j))) * &s.eval(&ea(t[0]), gh2));
        }
        (vec![lhs2(t)], vec![rhs])
    }));
    r.push(Check::exhaustive("skew pair (3)", REF, &[na], |t| {
        (vec![s.eval(&ea(t[0]), s.h.unit())], vec![s.a.counit()[t[0]].clone()])
    }));
    r
}

/// `h ⇀ b = b₍₂₎ σ(b₍₁₎, h)` and `b ↼ h = b₍₁₎ σ(b₍₂₎, (S⁻¹)²(h))`.
pub fn skew_pair_action(s: &SkewPairData) -> Result<BimoduleData> {
    let report = check_skew_pair(s, "skew pair");
    if let Some(c) = report.failures().next() {
        let idx = c.counterexample.as_ref().map(|x| x.indices.clone()).unwrap_or_default();
        return Err(Error::Precondition(format!("{} fails at basis indices {idx:?}", c.name)));
    }
    let sinv = s.h.antipode_inverse()?;
    let sinv2 = sinv.mul(&sinv)?;
    let (na, nh) = (s.a.dim(), s.h.dim());
    let f = s.a.field();
    let mut left = Tensor3::zeros(f, [nh, na, na]);
    let mut right = Tensor3::zeros(f, [nh, na, na]);
    for h in 0..nh {
        let hh = sinv2.column(h);
        for b in 0..na {
            let mut l = zero_vec(f, na);
            let mut r = zero_vec(f, na);
            for (j, k, c) in s.a.coalgebra.coproduct(b) {
                l[*k] += &(c * s.sigma.get(*j, h));
                r[*j] += &(c * &s.eval(&unit_vec(f, na, *k), &hh));
            }
            left.set_fiber(h, b, &l);
            right.set_fiber(h, b, &r);
        }
    }
    BimoduleData::new(s.h.clone(), s.a.algebra.clone(), left, right)
}

/// Actions of `H*` (on the dual basis) induced by partial coactions of `H`:
/// `f ⇀ a = ⟨f, a₍₁₎⟩ a₍₀₎` from the right coaction and
/// `a ↼ g = ⟨g, a₍₋₁₎⟩ a₍₀₎` from the left one.
///
/// `rho_r[a][a'][h]` is the coefficient of `e_a' ⊗ e_h` in `ρʳ(e_a)`, and
/// `rho_l[a][h][a']` that of `e_h ⊗ e_a'` in `ρˡ(e_a)`.
pub fn coaction_to_action(h: &HopfData, a: &AlgebraData, rho_l: &Tensor3, rho_r: &Tensor3) -> Result<BimoduleData> {
    let (nh, na) = (h.dim(), a.dim());
    if rho_r.dims() != [na, na, nh] || rho_l.dims() != [na, nh, na] {
        return Err(Error::Dimension(format!(
            "coaction shapes {:?} / {:?} do not match dim A = {na}, dim H = {nh}",
            rho_l.dims(),
            rho_r.dims()
        )));
    }
    let f = h.field();
    let mut left = Tensor3::zeros(f, [nh, na, na]);
    let mut right = Tensor3::zeros(f, [nh, na, na]);
    for p in 0..nh {
        for x in 0..na {
            for y in 0..na {
                left.set(p, x, y, rho_r.get(x, y, p).clone());
                right.set(p, x, y, rho_l.get(x, p, y).clone());
            }
        }
    }
    BimoduleData::new(dual_hopf(h), a.clone(), left, right)
}

/// Checks that `theta` (columns in `dst` coordinates) is a morphism of
/// bimodule algebras. The flag is true when it is moreover bijective.
pub fn check_action_morphism(theta: &Matrix, src: &BimoduleData, dst: &BimoduleData, subject: &str) -> (VerificationReport, bool) {
    const REF: &str = "Def 3.7";
    let mut r = VerificationReport::new(subject);
    let (na, nb, nh) = (src.dim_a(), dst.dim_a(), src.dim_h());
    if theta.rows() != nb || theta.cols() != na || dst.dim_h() != nh {
        r.push(Check::verdict(
            "shape",
            REF,
            false,
            vec![],
            format!("{}x{}", theta.rows(), theta.cols()),
            format!("{nb}x{na}"),
        ));
        return (r, false);
    }
    let f = src.field();
    let img: Vec<Vector> = (0..na).map(|j| theta.column(j)).collect();
    r.push(Check::exhaustive("multiplicative", REF, &[na, na], |t| {
        (theta.apply(src.algebra.basis_mul(t[0], t[1])), dst.algebra.mul(&img[t[0]], &img[t[1]]))
    }));
    let unital = match (&src.algebra.unit, &dst.algebra.unit) {
        (Some(u), Some(v)) => Check::exhaustive("unital", REF, &[], |_| (theta.apply(u), v.clone())),
        _ => Check::skipped("unital", REF, "an algebra has no unit"),
    };
    r.push(unital);
    r.push(Check::exhaustive("equivariance", REF, &[nh, na, nh], |t| {
        let eh = |i: usize| unit_vec(f, nh, i);
        (
            theta.apply(&src.two_sided(&eh(t[0]), &unit_vec(f, na, t[1]), &eh(t[2]))),
            dst.two_sided(&eh(t[0]), &img[t[1]], &eh(t[2])),
        )
    }));
    let rank = theta.rank();
    let bijective = na == nb && rank == na;
    r.inform(Check::verdict("bijective", REF, bijective, vec![], format!("rank {rank}"), format!("{nb} = {na}")));
    let equivalence = r.passed() && bijective;
    (r, equivalence)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{CoalgebraData, Level};

    fn q() -> Field {
        Field::Rational
    }

    fn kz2() -> HopfData {
        let f = q();
        let mut mult = Tensor3::zeros(f, [2, 2, 2]);
        mult.set(0, 0, 0, f.one());
        mult.set(0, 1, 1, f.one());
        mult.set(1, 0, 1, f.one());
        mult.set(1, 1, 0, f.one());
        let mut comult = Tensor3::zeros(f, [2, 2, 2]);
        comult.set(0, 0, 0, f.one());
        comult.set(1, 1, 1, f.one());
        let a = AlgebraData::new(vec!["1".into(), "g".into()], mult, Some(vec![f.one(), f.zero()])).unwrap();
        let c = CoalgebraData::new(comult, vec![f.one(), f.one()]).unwrap();
        HopfData::new(a, c, Matrix::identity(f, 2)).unwrap()
    }

    /// kZ2 acting on itself by g·1 = 1, g·g = −g on both sides.
    fn sign_action() -> BimoduleData {
        let h = kz2();
        let f = q();
        let mut t = Tensor3::zeros(f, [2, 2, 2]);
        t.set(0, 0, 0, f.one());
        t.set(0, 1, 1, f.one());
        t.set(1, 0, 0, f.one());
        t.set(1, 1, 1, f.int(-1));
        BimoduleData::new(h.clone(), h.algebra.clone(), t.clone(), t).unwrap()
    }

    #[test]
    fn global_action_passes_both_checkers() {
        let d = sign_action();
        assert!(d.hopf.check_structure(Level::Hopf, "kZ2").passed());
        let g = check_global(&d, "sign");
        assert!(g.passed(), "{}", g.to_json());
        let p = check_partial(&d, "sign");
        assert!(p.passed(), "{}", p.to_json());
        assert!(check_symmetry(&d, "sign").passed());
    }

    #[test]
    fn zeroed_left_action_fails_identity_axiom() {
        let mut d = sign_action();
        d.left = Tensor3::zeros(q(), [2, 2, 2]);
        let r = check_partial(&d, "zeroed");
        let c = r.check("1_H acts as identity").unwrap();
        assert!(c.failed());
        assert_eq!(c.counterexample.as_ref().unwrap().indices, vec![0]);
    }

    #[test]
    fn induced_action_on_the_sign_ideal() {
        // e = (1+g)/2 spans an ideal; g ⇀ e = e·(g ▷ e) = e·(1−g)/2 = 0.
        let d = sign_action();
        let f = q();
        let half = f.ratio(1, 2).unwrap();
        let e = vec![half.clone(), half.clone()];
        let (p, space) = induced_partial_from_global(&d, &[e.clone()], &e).unwrap();
        assert_eq!(space.dim(), 1);
        assert_eq!(p.left.fiber(0, 0), &[f.one()][..]);
        assert_eq!(p.left.fiber(1, 0), &[f.zero()][..]);
        assert_eq!(p.right.fiber(1, 0), &[f.zero()][..]);
        assert!(check_partial(&p, "induced").passed());
        assert!(!check_global(&p, "induced").passed());
    }

    #[test]
    fn induced_action_on_whole_algebra_is_the_global_action() {
        let d = sign_action();
        let f = q();
        let basis = vec![unit_vec(f, 2, 0), unit_vec(f, 2, 1)];
        let (p, _) = induced_partial_from_global(&d, &basis, &unit_vec(f, 2, 0)).unwrap();
        assert_eq!(p.left, d.left);
        assert_eq!(p.right, d.right);
    }

    #[test]
    fn zero_ideal_is_rejected() {
        let d = sign_action();
        let z = zero_vec(q(), 2);
        assert!(induced_partial_from_global(&d, &[z.clone()], &z).is_err());
    }

    #[test]
    fn trivial_skew_pair_gives_trivial_actions() {
        let h = kz2();
        let f = q();
        // σ = ε ⊗ ε
        let sigma = Matrix::from_rows(f, 2, &[vec![f.one(), f.one()], vec![f.one(), f.one()]]).unwrap();
        let s = SkewPairData::new(h.clone(), h.clone(), sigma).unwrap();
        let d = skew_pair_action(&s).unwrap();
        for hh in 0..2 {
            for b in 0..2 {
                assert_eq!(d.left.fiber(hh, b), &unit_vec(f, 2, b)[..]);
                assert_eq!(d.right.fiber(hh, b), &unit_vec(f, 2, b)[..]);
            }
        }
    }

    #[test]
    fn sign_skew_pair_matches_hand_built_tensor() {
        let h = kz2();
        let f = q();
        let sigma = Matrix::from_rows(f, 2, &[vec![f.one(), f.one()], vec![f.one(), f.int(-1)]]).unwrap();
        let s = SkewPairData::new(h.clone(), h, sigma).unwrap();
        assert!(check_skew_pair(&s, "sign").passed());
        let d = skew_pair_action(&s).unwrap();
        assert_eq!(d.left, sign_action().left);
        assert_eq!(d.right, sign_action().right);
        assert!(check_partial(&d, "sign skew pair").passed());
    }

    #[test]
    fn skew_pair_violating_condition_three_is_rejected() {
        let h = kz2();
        let f = q();
        let sigma = Matrix::from_rows(f, 2, &[vec![f.one(), f.one()], vec![f.int(2), f.one()]]).unwrap();
        let s = SkewPairData::new(h.clone(), h, sigma).unwrap();
        let r = check_skew_pair(&s, "bad");
        assert!(r.check("skew pair (3)").unwrap().failed());
        assert!(skew_pair_action(&s).is_err());
    }

    #[test]
    fn identity_morphism_is_an_equivalence_and_zero_is_not() {
        let d = sign_action();
        let (r, eq) = check_action_morphism(&Matrix::identity(q(), 2), &d, &d, "id");
        assert!(r.passed() && eq);
        let (r, eq) = check_action_morphism(&Matrix::zeros(q(), 2, 2), &d, &d, "zero");
        assert!(r.check("unital").unwrap().failed());
        assert!(!eq);
    }

    #[test]
    fn global_coaction_gives_global_dual_action() {
        // ρ = Δ on A = H = kZ2 gives the dual action f ⇀ a = a₍₁₎ f(a₍₂₎).
        let h = kz2();
        let f = q();
        let mut rho = Tensor3::zeros(f, [2, 2, 2]);
        rho.set(0, 0, 0, f.one());
        rho.set(1, 1, 1, f.one());
        let d = coaction_to_action(&h, &h.algebra, &rho, &rho).unwrap();
        assert!(check_global(&d, "Δ").passed());
        assert!(check_partial(&d, "Δ").passed());
    }
}
