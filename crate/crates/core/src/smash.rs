//! Smash products on `A ⊗ H`: the ambient product
//! `(a⊗h)(b⊗g) = a(h₍₁₎⇀b↼S(h₍₃₎)) ⊗ h₍₂₎g`, the unital subalgebra
//! `⟨A⊛H⟩ = (A⊗H)(1_A⊗1_H)` and the global twisted smash product `B⊛H`.
//!
//! Elements of `A ⊗ H` use index `a·dim H + h`.

use crate::actions::{check_global, BimoduleData};
use crate::algebra::{support, AlgebraData};
use crate::error::{Error, Result};
use crate::linalg::{axpy, kron, unit_vec, zero_vec, Subspace, Tensor3, Vector};
use crate::report::{Check, VerificationReport};
use crate::scalar::{Field, Scalar};

const AMBIENT: &str = "§3";
const UNDERLINE: &str = "Prop 3.3";

/// The product on `A ⊗ H` induced by a (partial or global) bimodule
/// algebra, tabulated on basis pairs.
#[derive(Clone, Debug)]
pub struct AmbientProduct {
    pub bimodule: BimoduleData,
    pub table: Tensor3,
}

impl AmbientProduct {
    pub fn new(d: &BimoduleData) -> Self {
        let (na, nh) = (d.dim_a(), d.dim_h());
        let n = na * nh;
        let f = d.field();
        let a = &d.algebra;
        let h = &d.hopf;
        let table = Tensor3::from_fn(f, [n, n, n], |i, j| {
            let (ai, hi) = (i / nh, i % nh);
            let (bj, gj) = (j / nh, j % nh);
            let middle = d.conj_middle(hi, &unit_vec(f, na, bj));
            let mut out = zero_vec(f, n);
            for (k, c) in support(&middle) {
                let (ak, hk) = (k / nh, k % nh);
                let left = a.basis_mul(ai, ak);
                let right = h.basis_mul(hk, gj);
                axpy(&mut out, c, &kron(left, right));
            }
            out
        });
        AmbientProduct {
            bimodule: d.clone(),
            table,
        }
    }

    pub fn field(&self) -> Field {
        self.bimodule.field()
    }

    pub fn dim(&self) -> usize {
        self.bimodule.dim_a() * self.bimodule.dim_h()
    }

    /// `a ⊗ h` as a vector.
    pub fn pure(&self, a: &[Scalar], h: &[Scalar]) -> Vector {
        kron(a, h)
    }

    /// `1_A ⊗ 1_H`
    pub fn one(&self) -> Result<Vector> {
        Ok(kron(self.bimodule.algebra.one()?, self.bimodule.hopf.unit()))
    }

    pub fn multiply(&self, z1: &[Scalar], z2: &[Scalar]) -> Vector {
        self.table.contract(z1, z2)
    }

    /// `z · (1_A ⊗ 1_H)`
    pub fn underline_project(&self, z: &[Scalar]) -> Result<Vector> {
        Ok(self.multiply(z, &self.one()?))
    }

    pub fn basis_vector(&self, i: usize) -> Vector {
        unit_vec(self.field(), self.dim(), i)
    }

    /// Associativity of the ambient product on all basis triples.
    pub fn check_associativity(&self, subject: &str) -> VerificationReport {
        let mut r = VerificationReport::new(subject);
        let n = self.dim();
        r.push(Check::exhaustive("ambient associativity", AMBIENT, &[n, n, n], |t| {
            let ij = self.table.fiber(t[0], t[1]).to_vec();
            let jk = self.table.fiber(t[1], t[2]).to_vec();
            (
                self.multiply(&ij, &self.basis_vector(t[2])),
                self.multiply(&self.basis_vector(t[0]), &jk),
            )
        }));
        r
    }

    /// The product of typical elements agrees with the typical element of
    /// the ambient product: `⟨a⊛h⟩⟨b⊛g⟩ = ⟨a(h₍₁₎⇀b↼S(h₍₃₎))⊛h₍₂₎g⟩`.
    pub fn check_typical_products(&self, subject: &str) -> Result<VerificationReport> {
        let mut r = VerificationReport::new(subject);
        let n = self.dim();
        let one = self.one()?;
        let typical: Vec<Vector> = (0..n).map(|i| self.multiply(&self.basis_vector(i), &one)).collect();
        r.push(Check::exhaustive("typical element product", UNDERLINE, &[n, n], |t| {
            (
                self.multiply(&typical[t[0]], &typical[t[1]]),
                self.multiply(self.table.fiber(t[0], t[1]), &one),
            )
        }));
        Ok(r)
    }
}

/// A subalgebra of an ambient space with a chosen basis (rows of
/// `space.basis()`) and its internal structure constants.
#[derive(Clone, Debug)]
pub struct BasedSubalgebra {
    pub space: Subspace,
    pub algebra: AlgebraData,
}

impl BasedSubalgebra {
    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn ambient_dim(&self) -> usize {
        self.space.ambient_dim()
    }

    pub fn field(&self) -> Field {
        self.algebra.field()
    }

    /// Internal coordinates of an ambient vector, if it lies in the span.
    pub fn coords(&self, v: &[Scalar]) -> Option<Vector> {
        self.space.coords(v)
    }

    pub fn embed(&self, c: &[Scalar]) -> Vector {
        self.space.embed(c)
    }

    /// The unit in ambient coordinates.
    pub fn ambient_unit(&self) -> Option<Vector> {
        self.algebra.unit.as_ref().map(|u| self.embed(u))
    }
}

/// Structure constants of the span of `vectors` under `mul`, failing with
/// [`Error::Closure`] at the first product that leaves the span.
pub fn based_subalgebra(
    field: Field,
    ambient_dim: usize,
    vectors: &[Vector],
    unit: Option<&[Scalar]>,
    names: Option<Vec<String>>,
    structure: &str,
    mul: impl Fn(&[Scalar], &[Scalar]) -> Vector,
) -> Result<BasedSubalgebra> {
    let space = Subspace::span(field, ambient_dim, vectors)?;
    let k = space.dim();
    let mult = Tensor3::try_from_fn(field, [k, k, k], |i, j| {
        space
            .coords(&mul(space.basis_vector(i), space.basis_vector(j)))
            .ok_or_else(|| Error::Closure {
                structure: structure.into(),
                indices: vec![i, j],
            })
    })?;
    let unit = match unit {
        Some(u) => Some(
            space
                .coords(u)
                .ok_or_else(|| Error::Precondition(format!("unit of {structure} is not in its span")))?,
        ),
        None => None,
    };
    let names = names.unwrap_or_else(|| (0..k).map(|i| format!("v{i}")).collect());
    let algebra = AlgebraData::new(names, mult, unit)?;
    Ok(BasedSubalgebra { space, algebra })
}

fn pair_names(d: &BimoduleData) -> Vec<String> {
    let mut names = Vec::with_capacity(d.dim_a() * d.dim_h());
    for a in &d.algebra.names {
        for h in d.hopf.names() {
            names.push(format!("{a}⊗{h}"));
        }
    }
    names
}

/// `⟨A⊛H⟩`: the span of the projections `(e_a⊗e_h)(1_A⊗1_H)` with the
/// restricted ambient product and unit `⟨1_A⊛1_H⟩`.
pub fn build_underline_smash(d: &BimoduleData) -> Result<BasedSubalgebra> {
    let amb = AmbientProduct::new(d);
    build_underline_smash_from(&amb)
}

pub fn build_underline_smash_from(amb: &AmbientProduct) -> Result<BasedSubalgebra> {
    let n = amb.dim();
    let one = amb.one()?;
    let projections: Vec<Vector> = (0..n).map(|i| amb.multiply(&amb.basis_vector(i), &one)).collect();
    let unit = amb.multiply(&one, &one);
    based_subalgebra(amb.field(), n, &projections, Some(&unit), None, "underline smash product", |x, y| {
        amb.multiply(x, y)
    })
}

/// `B⊛H` for a global bimodule algebra `B`, on the full `B ⊗ H` basis.
pub fn build_twisted_smash(g: &BimoduleData) -> Result<BasedSubalgebra> {
    let report = check_global(g, "global action");
    if !report.passed() {
        let failed: Vec<&str> = report.failures().map(|c| c.name.as_str()).collect();
        return Err(Error::Precondition(format!("global axioms fail: {}", failed.join(", "))));
    }
    build_twisted_smash_unchecked(g)
}

/// `B⊛H` without verifying the global axioms first. The unit, when `B` has
/// one, is `1_B ⊗ 1_H`.
pub fn build_twisted_smash_unchecked(g: &BimoduleData) -> Result<BasedSubalgebra> {
    let amb = AmbientProduct::new(g);
    let n = amb.dim();
    let f = amb.field();
    let basis: Vec<Vector> = (0..n).map(|i| unit_vec(f, n, i)).collect();
    let unit = g.algebra.unit.as_ref().map(|u| kron(u, g.hopf.unit()));
    based_subalgebra(f, n, &basis, unit.as_deref(), Some(pair_names(g)), "twisted smash product", |x, y| {
        amb.multiply(x, y)
    })
}

/// Associativity and unit of the internal table, on all basis triples.
pub fn check_associativity(s: &BasedSubalgebra, subject: &str) -> VerificationReport {
    let mut r = s.algebra.check(subject);
    for c in r.checks.iter_mut() {
        c.paper_ref = UNDERLINE.into();
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::actions::check_partial;
    use crate::catalog::{bimodule, kx_in_h4, kz2_sign_action, trivial_action, sweedler_h4, dual_numbers};
    use crate::linalg::Matrix;

    fn q() -> Field {
        Field::Rational
    }

    #[test]
    fn unit_acts_trivially_on_the_left() {
        for name in ["kx-in-h4", "central-idempotent-kz2", "induced-kz2", "kz2-sign"] {
            let d = bimodule(q(), name).unwrap();
            let amb = AmbientProduct::new(&d);
            let one = amb.one().unwrap();
            for i in 0..amb.dim() {
                assert_eq!(amb.multiply(&one, &amb.basis_vector(i)), amb.basis_vector(i), "{name} {i}");
            }
        }
    }

    #[test]
    fn kx_example_product_vanishes() {
        let d = kx_in_h4(q()).unwrap();
        let amb = AmbientProduct::new(&d);
        let f = q();
        let x = unit_vec(f, 2, 1);
        let t = unit_vec(f, 4, 1);
        let p = unit_vec(f, 4, 2);
        let prod = amb.multiply(&amb.pure(&x, &t), &amb.pure(&x, &p));
        assert!(prod.iter().all(Scalar::is_zero));
    }

    #[test]
    fn projection_is_idempotent() {
        for name in ["kx-in-h4", "central-idempotent-kz2", "induced-kz2"] {
            let amb = AmbientProduct::new(&bimodule(q(), name).unwrap());
            for i in 0..amb.dim() {
                let once = amb.underline_project(&amb.basis_vector(i)).unwrap();
                assert_eq!(amb.underline_project(&once).unwrap(), once, "{name} {i}");
            }
        }
    }

    #[test]
    fn global_action_projection_is_identity() {
        let d = kz2_sign_action(q()).unwrap();
        let amb = AmbientProduct::new(&d);
        for i in 0..amb.dim() {
            assert_eq!(amb.underline_project(&amb.basis_vector(i)).unwrap(), amb.basis_vector(i));
        }
        let s = build_underline_smash(&d).unwrap();
        assert_eq!(s.dim(), 4);
        assert!(s.space.basis().is_identity());
        let t = build_twisted_smash(&d).unwrap();
        assert_eq!(s.algebra.mult, t.algebra.mult);
    }

    #[test]
    fn typical_element_of_kx_example() {
        // ⟨x⊛T⟩ = x(T₍₁₎⇀1↼S(T₍₃₎))⊗T₍₂₎ with Δ²(T) = T⊗T⊗T and S(T) = T.
        let d = kx_in_h4(q()).unwrap();
        let amb = AmbientProduct::new(&d);
        let f = q();
        let x = unit_vec(f, 2, 1);
        let t = unit_vec(f, 4, 1);
        let got = amb.underline_project(&amb.pure(&x, &t)).unwrap();
        let one_a = unit_vec(f, 2, 0);
        let coeff = d.two_sided(&t, &one_a, &t);
        let expected = kron(&d.algebra.mul(&x, &coeff), &t);
        assert_eq!(got, expected);
    }

    #[test]
    fn underline_dimension_matches_rank_oracle() {
        for name in ["kx-in-h4", "central-idempotent-kz2", "induced-kz2", "kz2-skew-pair"] {
            let d = bimodule(q(), name).unwrap();
            let amb = AmbientProduct::new(&d);
            let one = amb.one().unwrap();
            let n = amb.dim();
            // Rank of the matrix of right multiplication by 1⊗1.
            let cols: Vec<Vector> = (0..n).map(|i| amb.multiply(&amb.basis_vector(i), &one)).collect();
            let rank = Matrix::from_columns(q(), n, &cols).unwrap().rank();
            match build_underline_smash(&d) {
                Ok(s) => assert_eq!(s.dim(), rank, "{name}"),
                Err(e) => panic!("{name}: {e}"),
            }
        }
    }

    #[test]
    fn underline_smash_is_associative_for_valid_bimodules() {
        for name in ["central-idempotent-kz2", "induced-kz2", "kz2-skew-pair", "trivial-h4-on-kx", "kz2-sign"] {
            let d = bimodule(q(), name).unwrap();
            assert!(check_partial(&d, name).passed());
            let s = build_underline_smash(&d).unwrap();
            let r = check_associativity(&s, name);
            assert!(r.passed(), "{name}: {}", r.to_json());
        }
    }

    #[test]
    fn central_idempotent_product_carries_pairings() {
        // A = k over (kZ2)*, e = (1+g)/2: (1⊗f)(1⊗g) = ⟨f₍₁₎,e⟩⟨S f₍₃₎,e⟩ 1⊗f₍₂₎g.
        let d = bimodule(q(), "central-idempotent-kz2").unwrap();
        let amb = AmbientProduct::new(&d);
        let f = q();
        let one = unit_vec(f, 1, 0);
        let half = f.ratio(1, 2).unwrap();
        for i in 0..2 {
            for j in 0..2 {
                let got = amb.multiply(&amb.pure(&one, &unit_vec(f, 2, i)), &amb.pure(&one, &unit_vec(f, 2, j)));
                // Δ²(δ_x) = Σ_{yzw=x} δ_y⊗δ_z⊗δ_w and every δ pairs with e to ½,
                // so the sum is ¼(2δ_x + 2δ_xg)δ_j = ½ ε δ_j = ½ δ_j.
                let mut expected = zero_vec(f, 2);
                expected[j] = half.clone();
                assert_eq!(got, expected, "{i} {j}");
            }
        }
    }

    #[test]
    fn trivial_action_gives_tensor_product() {
        let h = sweedler_h4(q()).unwrap();
        let a = dual_numbers(q());
        let d = trivial_action(&h, &a).unwrap();
        let s = build_twisted_smash(&d).unwrap();
        let t = crate::algebra::tensor_algebra(&a, &h.algebra);
        assert_eq!(s.algebra.mult, t.mult);
    }

    #[test]
    fn kx_underline_smash_is_associative_and_unital() {
        let d = kx_in_h4(q()).unwrap();
        let s = build_underline_smash(&d).unwrap();
        assert!(check_associativity(&s, "kx").passed());
        let amb = AmbientProduct::new(&d);
        assert!(amb.check_associativity("kx").passed());
        assert!(amb.check_typical_products("kx").unwrap().passed());
    }

    #[test]
    fn twisted_smash_rejects_partial_input() {
        let d = bimodule(q(), "induced-kz2").unwrap();
        assert!(matches!(build_twisted_smash(&d), Err(Error::Precondition(_))));
    }

    #[test]
    fn corrupted_table_fails_associativity() {
        let d = kz2_sign_action(q()).unwrap();
        let mut s = build_twisted_smash(&d).unwrap();
        let v = s.algebra.mult.get(1, 1, 0).clone() + q().one();
        s.algebra.mult.set(1, 1, 0, v);
        let r = check_associativity(&s, "corrupted");
        assert!(!r.passed());
        assert_eq!(r.failures().next().unwrap().counterexample.as_ref().unwrap().indices.len(), 3);
    }
}
