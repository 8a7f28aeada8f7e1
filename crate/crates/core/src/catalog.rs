//! Built-in examples, constructed exactly.
//!
//! Constructors return data without asserting the axioms; callers run the
//! checkers, so an example that fails an axiom is reported rather than
//! hidden.

use crate::actions::{coaction_to_action, induced_partial_from_global, BimoduleData, SkewPairData};
use crate::algebra::{dual_hopf, solve_antipode, AlgebraData, CoalgebraData, HopfData};
use crate::error::{Error, Result};
use crate::linalg::{kron, unit_vec, Matrix, Tensor3, Vector};
use crate::scalar::{Field, Scalar};

fn require_odd(field: Field, what: &str) -> Result<()> {
    if field.characteristic() == 2 {
        return Err(Error::Field(format!("{what} needs a field of characteristic ≠ 2")));
    }
    Ok(())
}

fn names(xs: &[&str]) -> Vec<String> {
    xs.iter().map(|s| s.to_string()).collect()
}

/// Sweedler's four-dimensional Hopf algebra on the basis `(1, c, x, cx)`,
/// with `c² = 1`, `x² = 0`, `xc = −cx`, `Δ(c) = c⊗c`, `Δ(x) = x⊗1 + c⊗x`.
/// The antipode is solved from the antipode axioms.
pub fn sweedler_h4(field: Field) -> Result<HopfData> {
    require_odd(field, "H4")?;
    let (one, neg) = (field.one(), field.int(-1));
    let mut mult = Tensor3::zeros(field, [4, 4, 4]);
    // indices: 1 → 0, c → 1, x → 2, cx → 3
    let table: [(usize, usize, usize, &Scalar); 10] = [
        (1, 1, 0, &one),
        (1, 2, 3, &one),
        (1, 3, 2, &one),
        (2, 1, 3, &neg),
        (3, 1, 2, &neg),
        (0, 0, 0, &one),
        (0, 1, 1, &one),
        (0, 2, 2, &one),
        (0, 3, 3, &one),
        (1, 0, 1, &one),
    ];
    for (i, j, k, c) in table {
        mult.set(i, j, k, c.clone());
    }
    mult.set(2, 0, 2, one.clone());
    mult.set(3, 0, 3, one.clone());
    let algebra = AlgebraData::new(names(&["1", "c", "x", "cx"]), mult, Some(unit_vec(field, 4, 0)))?;
    let mut comult = Tensor3::zeros(field, [4, 4, 4]);
    comult.set(0, 0, 0, one.clone());
    comult.set(1, 1, 1, one.clone());
    comult.set(2, 2, 0, one.clone());
    comult.set(2, 1, 2, one.clone());
    // Δ(cx) = cx⊗c + 1⊗cx
    comult.set(3, 3, 1, one.clone());
    comult.set(3, 0, 3, one.clone());
    let counit = vec![one.clone(), one, field.zero(), field.zero()];
    let coalgebra = CoalgebraData::new(comult, counit)?;
    let antipode = solve_antipode(&algebra, &coalgebra)?;
    HopfData::new(algebra, coalgebra, antipode)
}

/// Columns: `1* + c*`, `T = 1* − c*`, `P = x* + (cx)*`, `TP = x* − (cx)*` in
/// the dual basis of `(1, c, x, cx)`.
pub fn h4_named_dual_basis(field: Field) -> Matrix {
    let (o, m, z) = (field.one(), field.int(-1), field.zero());
    Matrix::from_rows(
        field,
        4,
        &[
            vec![o.clone(), o.clone(), z.clone(), z.clone()],
            vec![o.clone(), m.clone(), z.clone(), z.clone()],
            vec![z.clone(), z.clone(), o.clone(), o.clone()],
            vec![z.clone(), z, o, m],
        ],
    )
    .expect("4x4")
}

/// The dual of `H4` on the basis `{1, T, P, TP}` (the first element is
/// `1* + c*`, the unit of the dual).
pub fn h4_dual_named(field: Field) -> Result<HopfData> {
    let dual = dual_hopf(&sweedler_h4(field)?);
    dual.rebase(&h4_named_dual_basis(field), names(&["1", "T", "P", "TP"]))
}

/// `k[x]/(x²)` on the basis `(1, x)`.
pub fn dual_numbers(field: Field) -> AlgebraData {
    let mut mult = Tensor3::zeros(field, [2, 2, 2]);
    mult.set(0, 0, 0, field.one());
    mult.set(0, 1, 1, field.one());
    mult.set(1, 0, 1, field.one());
    AlgebraData::new(names(&["1", "x"]), mult, Some(unit_vec(field, 2, 0))).expect("2x2x2")
}

/// The partial coactions of `H4` on `k[x] = span{1, x}`:
/// `ρʳ(a) = ½ a ⊗ (1 + c + cx)` and `ρˡ(a) = ½ (1 + c + cx) ⊗ a`.
/// Returned as `(rho_l, rho_r)` in the layouts of [`coaction_to_action`].
pub fn kx_coactions(field: Field) -> Result<(Tensor3, Tensor3)> {
    require_odd(field, "the k[x] coactions")?;
    let half = field.ratio(1, 2)?;
    let mut rho_l = Tensor3::zeros(field, [2, 4, 2]);
    let mut rho_r = Tensor3::zeros(field, [2, 2, 4]);
    for a in 0..2 {
        for h in [0, 1, 3] {
            rho_l.set(a, h, a, half.clone());
            rho_r.set(a, a, h, half.clone());
        }
    }
    Ok((rho_l, rho_r))
}

/// `k[x] ⊂ H4` as a bimodule algebra over `H4*` (basis `{1, T, P, TP}`),
/// with actions induced by [`kx_coactions`]: `f ⇀ a` pairs `f` with the
/// right coaction and `a ↼ g` pairs `g` with the left one.
pub fn kx_in_h4(field: Field) -> Result<BimoduleData> {
    let h4 = sweedler_h4(field)?;
    let (rho_l, rho_r) = kx_coactions(field)?;
    let d = coaction_to_action(&h4, &dual_numbers(field), &rho_l, &rho_r)?;
    d.rebase_hopf(&h4_named_dual_basis(field), names(&["1", "T", "P", "TP"]))
}

/// `A = k` over `H*` with `f ⇀ x = ⟨f, e⟩x = x ↼ f`, from the coactions
/// `ρˡ(x) = e ⊗ x`, `ρʳ(x) = x ⊗ e`. The requirements on `e` are checked.
pub fn central_idempotent_example(h: &HopfData, e: &[Scalar]) -> Result<BimoduleData> {
    let n = h.dim();
    let f = h.field();
    if e.len() != n {
        return Err(Error::Dimension(format!("e has length {}, expected {n}", e.len())));
    }
    let ee = h.mul(e, e);
    if ee != e {
        return Err(Error::Precondition("e is not idempotent".into()));
    }
    if h.coalgebra.counit_of(e) != f.one() {
        return Err(Error::Precondition("ε(e) ≠ 1".into()));
    }
    for i in 0..n {
        let b = unit_vec(f, n, i);
        if h.mul(e, &b) != h.mul(&b, e) {
            return Err(Error::Precondition(format!("e is not central: fails against basis element {i}")));
        }
    }
    let hh = crate::algebra::tensor_algebra(&h.algebra, &h.algebra);
    let de = h.coalgebra.comult_vec(e);
    let e1 = kron(e, h.unit());
    let e_e = kron(e, e);
    if hh.mul(&e1, &de) != e_e {
        return Err(Error::Precondition("(e⊗1)Δ(e) ≠ e⊗e".into()));
    }
    if hh.mul(&de, &e1) != e_e {
        return Err(Error::Precondition("Δ(e)(e⊗1) ≠ e⊗e".into()));
    }
    let mut rho_l = Tensor3::zeros(f, [1, n, 1]);
    let mut rho_r = Tensor3::zeros(f, [1, 1, n]);
    for (i, c) in e.iter().enumerate() {
        rho_l.set(0, i, 0, c.clone());
        rho_r.set(0, 0, i, c.clone());
    }
    let k = ground_algebra(f);
    coaction_to_action(h, &k, &rho_l, &rho_r)
}

/// The one-dimensional algebra `k`.
pub fn ground_algebra(field: Field) -> AlgebraData {
    let mut mult = Tensor3::zeros(field, [1, 1, 1]);
    mult.set(0, 0, 0, field.one());
    AlgebraData::new(names(&["1"]), mult, Some(vec![field.one()])).expect("1x1x1")
}

/// The group algebra of `Z_n` on `(1, g, …, g^{n-1})`.
pub fn group_algebra(field: Field, n: usize) -> Result<HopfData> {
    if n == 0 {
        return Err(Error::Dimension("group order must be positive".into()));
    }
    let mut mult = Tensor3::zeros(field, [n, n, n]);
    let mut comult = Tensor3::zeros(field, [n, n, n]);
    let mut antipode = Matrix::zeros(field, n, n);
    for i in 0..n {
        for j in 0..n {
            mult.set(i, j, (i + j) % n, field.one());
        }
        comult.set(i, i, i, field.one());
        antipode.set((n - i) % n, i, field.one());
    }
    let names = (0..n)
        .map(|i| match i {
            0 => "1".to_string(),
            1 => "g".to_string(),
            _ => format!("g^{i}"),
        })
        .collect();
    let algebra = AlgebraData::new(names, mult, Some(unit_vec(field, n, 0)))?;
    let coalgebra = CoalgebraData::new(comult, vec![field.one(); n])?;
    HopfData::new(algebra, coalgebra, antipode)
}

/// A primitive `n`-th root of unity in `field`, if one exists.
pub fn primitive_root_of_unity(field: Field, n: usize) -> Option<Scalar> {
    match field {
        Field::Rational => match n {
            1 => Some(field.one()),
            2 => Some(field.int(-1)),
            _ => None,
        },
        Field::Prime(p) => {
            let n64 = n as u64;
            if n64 == 0 || (p - 1) % n64 != 0 {
                return None;
            }
            let prime_factors: Vec<u64> = (2..=n64).filter(|q| n64 % q == 0 && (2..*q).all(|d| q % d != 0)).collect();
            (1..p).map(|x| field.int(x as i64)).find(|x| {
                x.pow(n64).is_one() && prime_factors.iter().all(|q| !x.pow(n64 / q).is_one())
            })
        }
    }
}

/// `σ(g^a, g^b) = ω^{ab}` on `kZ_n × kZ_n` for a primitive `n`-th root `ω`.
pub fn zn_skew_pair(field: Field, n: usize) -> Result<SkewPairData> {
    let omega = primitive_root_of_unity(field, n)
        .ok_or_else(|| Error::Field(format!("{field} has no primitive {n}-th root of unity")))?;
    let h = group_algebra(field, n)?;
    let mut sigma = Matrix::zeros(field, n, n);
    for a in 0..n {
        for b in 0..n {
            sigma.set(a, b, omega.pow((a * b % n) as u64));
        }
    }
    SkewPairData::new(h.clone(), h, sigma)
}

/// `h ▷ a = ε(h)a = a ◁ h`.
pub fn trivial_action(h: &HopfData, a: &AlgebraData) -> Result<BimoduleData> {
    let (nh, na) = (h.dim(), a.dim());
    let f = h.field();
    let t = Tensor3::from_fn(f, [nh, na, na], |i, j| {
        let mut v = unit_vec(f, na, j);
        v[j] = h.counit()[i].clone();
        v
    });
    BimoduleData::new(h.clone(), a.clone(), t.clone(), t)
}

/// `kZ2` acting on the algebra `kZ2` by the automorphism `g ↦ −g` from both
/// sides.
pub fn kz2_sign_action(field: Field) -> Result<BimoduleData> {
    require_odd(field, "the sign action")?;
    let h = group_algebra(field, 2)?;
    let mut t = Tensor3::zeros(field, [2, 2, 2]);
    t.set(0, 0, 0, field.one());
    t.set(0, 1, 1, field.one());
    t.set(1, 0, 0, field.one());
    t.set(1, 1, 1, field.int(-1));
    BimoduleData::new(h.clone(), h.algebra.clone(), t.clone(), t)
}

/// `(1 + g)/2` in `kZ2`.
pub fn kz2_half_idempotent(field: Field) -> Result<Vector> {
    let half = field.ratio(1, 2)?;
    Ok(vec![half.clone(), half])
}

/// The partial action induced by [`kz2_sign_action`] on the ideal spanned
/// by `(1 + g)/2`.
pub fn induced_kz2(field: Field) -> Result<BimoduleData> {
    let g = kz2_sign_action(field)?;
    let e = kz2_half_idempotent(field)?;
    Ok(induced_partial_from_global(&g, &[e.clone()], &e)?.0)
}

/// A catalog payload.
#[derive(Clone, Debug)]
pub enum Payload {
    Hopf(HopfData),
    Bimodule { data: BimoduleData, global: bool },
    SkewPair(SkewPairData),
}

#[derive(Clone, Debug)]
pub struct CatalogEntry {
    pub name: &'static str,
    pub provenance: &'static str,
    pub payload: Payload,
}

/// Names and provenance strings of all entries.
pub const ENTRIES: &[(&str, &str)] = &[
    ("h4", "Ex 3.6"),
    ("h4-dual", "Ex 3.6"),
    ("kz2", "group algebra kZ2"),
    ("kz3", "group algebra kZ3"),
    ("kx-in-h4", "Ex 3.6"),
    ("central-idempotent-kz2", "§3"),
    ("kz2-skew-pair", "Ex 3.5"),
    ("induced-kz2", "Lemma 3.8"),
    ("trivial-h4-on-kx", "global action (trivial)"),
    ("kz2-sign", "global action (sign automorphism)"),
];

/// Names of the entries whose payload is a bimodule algebra.
pub const BIMODULE_ENTRIES: &[&str] = &[
    "kx-in-h4",
    "central-idempotent-kz2",
    "kz2-skew-pair",
    "induced-kz2",
    "trivial-h4-on-kx",
    "kz2-sign",
];

pub fn lookup(field: Field, name: &str) -> Result<CatalogEntry> {
    let Some(&(name, provenance)) = ENTRIES.iter().find(|(n, _)| *n == name) else {
        return Err(Error::UnknownEntry {
            name: name.to_string(),
            available: ENTRIES.iter().map(|(n, _)| *n).collect::<Vec<_>>().join(", "),
        });
    };
    let payload = match name {
        "h4" => Payload::Hopf(sweedler_h4(field)?),
        "h4-dual" => Payload::Hopf(h4_dual_named(field)?),
        "kz2" => Payload::Hopf(group_algebra(field, 2)?),
        "kz3" => Payload::Hopf(group_algebra(field, 3)?),
        "kx-in-h4" => Payload::Bimodule {
            data: kx_in_h4(field)?,
            global: false,
        },
        "central-idempotent-kz2" => Payload::Bimodule {
            data: central_idempotent_example(&group_algebra(field, 2)?, &kz2_half_idempotent(field)?)?,
            global: false,
        },
        "kz2-skew-pair" => Payload::Bimodule {
            data: crate::actions::skew_pair_action(&zn_skew_pair(field, 2)?)?,
            global: false,
        },
        "induced-kz2" => Payload::Bimodule {
            data: induced_kz2(field)?,
            global: false,
        },
        "trivial-h4-on-kx" => Payload::Bimodule {
            data: trivial_action(&sweedler_h4(field)?, &dual_numbers(field))?,
            global: true,
        },
        "kz2-sign" => Payload::Bimodule {
            data: kz2_sign_action(field)?,
            global: true,
        },
        _ => unreachable!("every listed entry is handled"),
    };
    Ok(CatalogEntry { name, provenance, payload })
}

/// The bimodule of a catalog entry, failing for other payloads.
pub fn bimodule(field: Field, name: &str) -> Result<BimoduleData> {
    match lookup(field, name)?.payload {
        Payload::Bimodule { data, .. } => Ok(data),
        _ => Err(Error::Precondition(format!("{name} is not a bimodule algebra"))),
    }
}
