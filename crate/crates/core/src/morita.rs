//! The Morita context between `⟨A⊛H⟩` and `B⊛H`: the embedding
//! `Φ(a⊗h) = θ(a)⊛h`, the bimodules `M = Φ(A⊗H)` and
//! `N = span{(h₍₁₎▷θ(a)◁S(h₍₃₎))⊛h₍₂₎}`, their four module structures and the
//! pairings `σ: N⊗M → B⊛H`, `τ: M⊗N → Φ(⟨A⊛H⟩)`, all given by multiplication
//! in `B⊛H`.

use crate::actions::BimoduleData;
use crate::envelope::EnvelopeData;
use crate::error::{Error, Result};
use crate::linalg::{kron, unit_vec, Matrix, Subspace, Tensor3, Vector};
use crate::report::{Check, VerificationReport};
use crate::scalar::{Field, Scalar};
use crate::smash::{build_twisted_smash_unchecked, BasedSubalgebra};

const EMBEDDING: &str = "Lemma 4.1";
const MODULES: &str = "Prop 4.2";
const INDUCED: &str = "Prop 4.3";
const CONTEXT: &str = "Prop 4.4";

/// `Φ: A⊗H → B⊗H`, `a⊗h ↦ θ(a)⊗h`, as a matrix.
pub fn phi_embedding(e: &EnvelopeData, dim_h: usize) -> Matrix {
    let f = e.field();
    let (nb, na) = (e.theta.rows(), e.theta.cols());
    let cols: Vec<Vector> = (0..na * dim_h)
        .map(|i| kron(&e.theta.column(i / dim_h), &unit_vec(f, dim_h, i % dim_h)))
        .collect();
    Matrix::from_columns(f, nb * dim_h, &cols).expect("shape")
}

/// Algebra-morphism and injectivity checks for `Φ` restricted to `⟨A⊛H⟩`.
pub fn check_phi_embedding(
    d: &BimoduleData,
    phi: &Matrix,
    underline: &BasedSubalgebra,
    twisted: &BasedSubalgebra,
    subject: &str,
) -> VerificationReport {
    let mut r = VerificationReport::new(subject);
    let k = underline.dim();
    let images: Vec<Vector> = (0..k).map(|i| phi.apply(underline.space.basis_vector(i))).collect();
    r.push(Check::exhaustive("Φ multiplicative", EMBEDDING, &[k, k], |t| {
        (
            phi.apply(&underline.embed(underline.algebra.basis_mul(t[0], t[1]))),
            twisted.algebra.mul(&images[t[0]], &images[t[1]]),
        )
    }));
    let rank = Matrix::from_rows(phi.field(), phi.rows(), &images).map(|m| m.rank()).unwrap_or(0);
    r.push(Check::verdict(
        "Φ injective",
        EMBEDDING,
        rank == k,
        vec![],
        format!("rank {rank}"),
        format!("dim ⟨A⊛H⟩ = {k}"),
    ));
    if let (Some(u), Ok(one_a)) = (underline.ambient_unit(), d.algebra.one()) {
        let one = phi.apply(&kron(one_a, d.hopf.unit()));
        r.push(Check::exhaustive("Φ(⟨1_A⊛1_H⟩) = θ(1_A)⊛1_H", EMBEDDING, &[], |_| (phi.apply(&u), one.clone())));
    }
    r
}

#[derive(Clone, Debug)]
pub struct MoritaData {
    /// `Φ` on the full `A⊗H`.
    pub phi: Matrix,
    pub underline: BasedSubalgebra,
    /// `B⊛H` on the full `B⊗H` basis.
    pub twisted: BasedSubalgebra,
    /// Subspaces of `B⊛H`.
    pub m: Subspace,
    pub n: Subspace,
    /// `Φ(⟨A⊛H⟩)` with basis `Φ` of the `⟨A⊛H⟩` basis.
    pub image: Subspace,
    /// `m_i · y_j` in `M` coordinates.
    pub m_right: Tensor3,
    /// `y_i · n_j` in `N` coordinates.
    pub n_left: Tensor3,
    /// `x_i ▶ m_j` in `M` coordinates.
    pub m_left: Tensor3,
    /// `n_i ◀ x_j` in `N` coordinates.
    pub n_right: Tensor3,
    /// `σ(n_i, m_j)` in `B⊛H` coordinates.
    pub sigma: Tensor3,
    /// `τ(m_i, n_j)` in `⟨A⊛H⟩` coordinates.
    pub tau: Tensor3,
}

impl MoritaData {
    pub fn field(&self) -> Field {
        self.twisted.field()
    }
}

fn table(
    field: Field,
    rows: &[Vector],
    cols: &[Vector],
    target: &Subspace,
    structure: &str,
    mul: impl Fn(&[Scalar], &[Scalar]) -> Vector,
) -> Result<Tensor3> {
    Tensor3::try_from_fn(field, [rows.len(), cols.len(), target.dim()], |i, j| {
        target.coords(&mul(&rows[i], &cols[j])).ok_or_else(|| Error::Closure {
            structure: structure.into(),
            indices: vec![i, j],
        })
    })
}

/// Builds the context. `d` is the partial bimodule, `e` its envelope and
/// `underline` its `⟨A⊛H⟩`.
pub fn build_morita(d: &BimoduleData, e: &EnvelopeData, underline: &BasedSubalgebra) -> Result<MoritaData> {
    let f = d.field();
    let nh = d.dim_h();
    let twisted = build_twisted_smash_unchecked(&e.global)?;
    let nbh = twisted.dim();
    let phi = phi_embedding(e, nh);

    let m = Subspace::span(f, nbh, &(0..phi.cols()).map(|j| phi.column(j)).collect::<Vec<_>>())?;
    let mut n_gens = Vec::with_capacity(nh * d.dim_a());
    for h in 0..nh {
        for a in 0..d.dim_a() {
            n_gens.push(e.global.conj_middle(h, &e.theta.column(a)));
        }
    }
    let n = Subspace::span(f, nbh, &n_gens)?;
    assemble(underline, twisted, phi, m, n)
}

/// Computes the six tables for given `M` and `N` spans.
pub(crate) fn assemble(
    underline: &BasedSubalgebra,
    twisted: BasedSubalgebra,
    phi: Matrix,
    m: Subspace,
    n: Subspace,
) -> Result<MoritaData> {
    let f = twisted.field();
    let nbh = twisted.dim();
    let image_rows: Vec<Vector> = (0..underline.dim()).map(|i| phi.apply(underline.space.basis_vector(i))).collect();
    let image = Subspace::new(Matrix::from_rows(f, nbh, &image_rows)?)
        .map_err(|_| Error::Precondition("Φ is not injective on ⟨A⊛H⟩".into()))?;

    let mb = m.basis().row_vectors();
    let nb = n.basis().row_vectors();
    let yb: Vec<Vector> = (0..nbh).map(|i| unit_vec(f, nbh, i)).collect();
    let mul = |x: &[Scalar], y: &[Scalar]| twisted.algebra.mul(x, y);
    let whole = Subspace::new(Matrix::identity(f, nbh))?;

    let m_right = table(f, &mb, &yb, &m, "M as a right B⊛H-module", mul)?;
    let n_left = table(f, &yb, &nb, &n, "N as a left B⊛H-module", mul)?;
    let m_left = table(f, &image_rows, &mb, &m, "M under ▶", mul)?;
    let n_right = table(f, &nb, &image_rows, &n, "N under ◀", mul)?;
    let sigma = table(f, &nb, &mb, &whole, "σ", mul)?;
    let tau = table(f, &mb, &nb, &image, "τ into Φ(⟨A⊛H⟩)", mul)?;

    Ok(MoritaData {
        phi,
        underline: underline.clone(),
        twisted,
        m,
        n,
        image,
        m_right,
        n_left,
        m_left,
        n_right,
        sigma,
        tau,
    })
}

/// Module axioms, balance and mixed associativity, evaluated from the stored
/// tables on all basis tuples.
pub fn check_morita(md: &MoritaData, subject: &str) -> VerificationReport {
    let mut r = VerificationReport::new(subject);
    let f = md.field();
    let (dm, dn, dy, dx) = (md.m.dim(), md.n.dim(), md.twisted.dim(), md.underline.dim());
    let y = &md.twisted.algebra;
    let x = &md.underline.algebra;
    let ev = |n: usize, i: usize| unit_vec(f, n, i);

    // m·y, y·n, x▶m, n◀x, σ(n,m), τ(m,n) on coordinate vectors.
    let mr = |m: &[Scalar], yy: &[Scalar]| md.m_right.contract(m, yy);
    let nl = |yy: &[Scalar], n: &[Scalar]| md.n_left.contract(yy, n);
    let ml = |xx: &[Scalar], m: &[Scalar]| md.m_left.contract(xx, m);
    let nr = |n: &[Scalar], xx: &[Scalar]| md.n_right.contract(n, xx);
    let sg = |n: &[Scalar], m: &[Scalar]| md.sigma.contract(n, m);
    let ta = |m: &[Scalar], n: &[Scalar]| md.tau.contract(m, n);

    r.push(Check::exhaustive("M right B⊛H-module", MODULES, &[dm, dy, dy], |t| {
        (
            mr(&mr(&ev(dm, t[0]), &ev(dy, t[1])), &ev(dy, t[2])),
            mr(&ev(dm, t[0]), y.basis_mul(t[1], t[2])),
        )
    }));
    r.push(Check::exhaustive("N left B⊛H-module", MODULES, &[dy, dy, dn], |t| {
        (
            nl(&ev(dy, t[0]), &nl(&ev(dy, t[1]), &ev(dn, t[2]))),
            nl(y.basis_mul(t[0], t[1]), &ev(dn, t[2])),
        )
    }));
    match &y.unit {
        Some(u) => {
            r.push(Check::exhaustive("M·1 = M", MODULES, &[dm], |t| (mr(&ev(dm, t[0]), u), ev(dm, t[0]))));
            r.push(Check::exhaustive("1·N = N", MODULES, &[dn], |t| (nl(u, &ev(dn, t[0])), ev(dn, t[0]))));
        }
        None => {
            r.push(Check::skipped("M·1 = M", MODULES, "B⊛H has no unit"));
            r.push(Check::skipped("1·N = N", MODULES, "B⊛H has no unit"));
        }
    }
    r.push(Check::exhaustive("M left ⟨A⊛H⟩-module (▶)", INDUCED, &[dx, dx, dm], |t| {
        (
            ml(&ev(dx, t[0]), &ml(&ev(dx, t[1]), &ev(dm, t[2]))),
            ml(x.basis_mul(t[0], t[1]), &ev(dm, t[2])),
        )
    }));
    r.push(Check::exhaustive("N right ⟨A⊛H⟩-module (◀)", INDUCED, &[dn, dx, dx], |t| {
        (
            nr(&nr(&ev(dn, t[0]), &ev(dx, t[1])), &ev(dx, t[2])),
            nr(&ev(dn, t[0]), x.basis_mul(t[1], t[2])),
        )
    }));
    match &x.unit {
        Some(u) => {
            r.push(Check::exhaustive("Φ(⟨1_A⊛1_H⟩) ▶ m = m", INDUCED, &[dm], |t| (ml(u, &ev(dm, t[0])), ev(dm, t[0]))));
            r.push(Check::exhaustive("n ◀ Φ(⟨1_A⊛1_H⟩) = n", INDUCED, &[dn], |t| (nr(&ev(dn, t[0]), u), ev(dn, t[0]))));
        }
        None => {
            r.push(Check::skipped("Φ(⟨1_A⊛1_H⟩) ▶ m = m", INDUCED, "⟨A⊛H⟩ has no unit"));
            r.push(Check::skipped("n ◀ Φ(⟨1_A⊛1_H⟩) = n", INDUCED, "⟨A⊛H⟩ has no unit"));
        }
    }
    r.push(Check::exhaustive("M bimodule: (x▶m)·y = x▶(m·y)", INDUCED, &[dx, dm, dy], |t| {
        (
            mr(&ml(&ev(dx, t[0]), &ev(dm, t[1])), &ev(dy, t[2])),
            ml(&ev(dx, t[0]), &mr(&ev(dm, t[1]), &ev(dy, t[2]))),
        )
    }));
    r.push(Check::exhaustive("N bimodule: (y·n)◀x = y·(n◀x)", INDUCED, &[dy, dn, dx], |t| {
        (
            nr(&nl(&ev(dy, t[0]), &ev(dn, t[1])), &ev(dx, t[2])),
            nl(&ev(dy, t[0]), &nr(&ev(dn, t[1]), &ev(dx, t[2]))),
        )
    }));
    r.push(Check::exhaustive("σ balanced: σ(n◀x, m) = σ(n, x▶m)", CONTEXT, &[dn, dx, dm], |t| {
        (
            sg(&nr(&ev(dn, t[0]), &ev(dx, t[1])), &ev(dm, t[2])),
            sg(&ev(dn, t[0]), &ml(&ev(dx, t[1]), &ev(dm, t[2]))),
        )
    }));
    r.push(Check::exhaustive("τ balanced: τ(m·y, n) = τ(m, y·n)", CONTEXT, &[dm, dy, dn], |t| {
        (
            ta(&mr(&ev(dm, t[0]), &ev(dy, t[1])), &ev(dn, t[2])),
            ta(&ev(dm, t[0]), &nl(&ev(dy, t[1]), &ev(dn, t[2]))),
        )
    }));
    r.push(Check::exhaustive("σ bimodule: σ(y·n, m) = y·σ(n, m)", CONTEXT, &[dy, dn, dm], |t| {
        (
            sg(&nl(&ev(dy, t[0]), &ev(dn, t[1])), &ev(dm, t[2])),
            y.mul(&ev(dy, t[0]), &sg(&ev(dn, t[1]), &ev(dm, t[2]))),
        )
    }));
    r.push(Check::exhaustive("σ bimodule: σ(n, m·y) = σ(n, m)·y", CONTEXT, &[dn, dm, dy], |t| {
        (
            sg(&ev(dn, t[0]), &mr(&ev(dm, t[1]), &ev(dy, t[2]))),
            y.mul(&sg(&ev(dn, t[0]), &ev(dm, t[1])), &ev(dy, t[2])),
        )
    }));
    r.push(Check::exhaustive("τ bimodule: τ(x▶m, n) = x·τ(m, n)", CONTEXT, &[dx, dm, dn], |t| {
        (
            ta(&ml(&ev(dx, t[0]), &ev(dm, t[1])), &ev(dn, t[2])),
            x.mul(&ev(dx, t[0]), &ta(&ev(dm, t[1]), &ev(dn, t[2]))),
        )
    }));
    r.push(Check::exhaustive("τ bimodule: τ(m, n◀x) = τ(m, n)·x", CONTEXT, &[dm, dn, dx], |t| {
        (
            ta(&ev(dm, t[0]), &nr(&ev(dn, t[1]), &ev(dx, t[2]))),
            x.mul(&ta(&ev(dm, t[0]), &ev(dn, t[1])), &ev(dx, t[2])),
        )
    }));
    r.push(Check::exhaustive("mixed: τ(m, n)▶m′ = m·σ(n, m′)", CONTEXT, &[dm, dn, dm], |t| {
        (
            ml(&ta(&ev(dm, t[0]), &ev(dn, t[1])), &ev(dm, t[2])),
            mr(&ev(dm, t[0]), &sg(&ev(dn, t[1]), &ev(dm, t[2]))),
        )
    }));
    r.push(Check::exhaustive("mixed: σ(n, m)·n′ = n◀τ(m, n′)", CONTEXT, &[dn, dm, dn], |t| {
        (
            nl(&sg(&ev(dn, t[0]), &ev(dm, t[1])), &ev(dn, t[2])),
            nr(&ev(dn, t[0]), &ta(&ev(dm, t[1]), &ev(dn, t[2]))),
        )
    }));

    let sigma_rank = value_rank(&md.sigma);
    r.inform(Check::verdict(
        "σ surjective",
        CONTEXT,
        sigma_rank == dy,
        vec![],
        format!("rank {sigma_rank}"),
        format!("dim B⊛H = {dy}"),
    ));
    let tau_rank = value_rank(&md.tau);
    r.inform(Check::verdict(
        "τ surjective",
        CONTEXT,
        tau_rank == dx,
        vec![],
        format!("rank {tau_rank}"),
        format!("dim ⟨A⊛H⟩ = {dx}"),
    ));
    r
}

/// Dimension of the span of all fibers of a bilinear table.
fn value_rank(t: &Tensor3) -> usize {
    let [a, b, c] = t.dims();
    let fibers: Vec<Vector> = (0..a).flat_map(|i| (0..b).map(move |j| (i, j))).map(|(i, j)| t.fiber(i, j).to_vec()).collect();
    if fibers.is_empty() {
        return 0;
    }
    Matrix::from_rows(t.field(), c, &fibers).map(|m| m.rank()).unwrap_or(0)
}
