//! Based finite-dimensional algebras, coalgebras and Hopf algebras given by
//! structure constants, with exhaustive axiom checkers.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::linalg::{axpy, invert, is_zero_vec, kron, scaled, solve, unit_vec, zero_vec, Matrix, Tensor3, Vector};
use crate::report::{Check, VerificationReport};
use crate::scalar::{Field, Scalar};

/// A linear map between based spaces; column `j` is the image of `e_j`.
pub type LinMap = Matrix;

/// Nonzero entries of a coordinate vector.
pub fn support(v: &[Scalar]) -> impl Iterator<Item = (usize, &Scalar)> {
    v.iter().enumerate().filter(|(_, x)| !x.is_zero())
}

/// Structure constants `e_i · e_j = Σ_k mult[i][j][k] e_k`.
#[derive(Clone, Debug)]
pub struct AlgebraData {
    pub names: Vec<String>,
    pub mult: Tensor3,
    pub unit: Option<Vector>,
}

impl AlgebraData {
    pub fn new(names: Vec<String>, mult: Tensor3, unit: Option<Vector>) -> Result<Self> {
        let n = names.len();
        if mult.dims() != [n, n, n] {
            return Err(Error::Dimension(format!(
                "multiplication tensor has shape {:?}, expected [{n}, {n}, {n}]",
                mult.dims()
            )));
        }
        if let Some(u) = &unit {
            if u.len() != n {
                return Err(Error::Dimension(format!("unit has length {}, expected {n}", u.len())));
            }
        }
        Ok(AlgebraData { names, mult, unit })
    }

    pub fn field(&self) -> Field {
        self.mult.field()
    }

    pub fn dim(&self) -> usize {
        self.names.len()
    }

    pub fn basis_mul(&self, i: usize, j: usize) -> &[Scalar] {
        self.mult.fiber(i, j)
    }

    pub fn mul(&self, x: &[Scalar], y: &[Scalar]) -> Vector {
        self.mult.contract(x, y)
    }

    /// `e_i · y`
    pub fn mul_basis_left(&self, i: usize, y: &[Scalar]) -> Vector {
        let mut out = zero_vec(self.field(), self.dim());
        for (j, c) in support(y) {
            axpy(&mut out, c, self.basis_mul(i, j));
        }
        out
    }

    /// `x · e_j`
    pub fn mul_basis_right(&self, x: &[Scalar], j: usize) -> Vector {
        let mut out = zero_vec(self.field(), self.dim());
        for (i, c) in support(x) {
            axpy(&mut out, c, self.basis_mul(i, j));
        }
        out
    }

    pub fn one(&self) -> Result<&Vector> {
        self.unit
            .as_ref()
            .ok_or_else(|| Error::Precondition("algebra has no unit".into()))
    }

    pub fn basis_vector(&self, i: usize) -> Vector {
        unit_vec(self.field(), self.dim(), i)
    }

    /// Solves `u·e_j = e_j = e_j·u` for `u`.
    pub fn find_unit(&self) -> Option<Vector> {
        let n = self.dim();
        let f = self.field();
        let mut rows = Vec::with_capacity(2 * n * n);
        let mut rhs = Vec::with_capacity(2 * n * n);
        for j in 0..n {
            for k in 0..n {
                let target = if j == k { f.one() } else { f.zero() };
                rows.push((0..n).map(|i| self.mult.get(i, j, k).clone()).collect::<Vector>());
                rhs.push(target.clone());
                rows.push((0..n).map(|i| self.mult.get(j, i, k).clone()).collect::<Vector>());
                rhs.push(target);
            }
        }
        let a = Matrix::from_rows(f, n, &rows).ok()?;
        solve(&a, &rhs)
    }

    /// Matrix of `y ↦ x·y`.
    pub fn left_mult_matrix(&self, x: &[Scalar]) -> Matrix {
        let cols: Vec<Vector> = (0..self.dim()).map(|j| self.mul_basis_right(x, j)).collect();
        Matrix::from_columns(self.field(), self.dim(), &cols).expect("square")
    }

    /// Associativity and two-sided unit, exhaustively on basis elements.
    pub fn check(&self, subject: &str) -> VerificationReport {
        let mut r = VerificationReport::new(subject);
        self.push_checks(&mut r);
        r
    }

    fn push_checks(&self, r: &mut VerificationReport) {
        let n = self.dim();
        r.push(Check::exhaustive("associativity", "algebra axioms", &[n, n, n], |t| {
            let (i, j, k) = (t[0], t[1], t[2]);
            (
                self.mul_basis_right(self.basis_mul(i, j), k),
                self.mul_basis_left(i, self.basis_mul(j, k)),
            )
        }));
        match &self.unit {
            Some(u) => {
                r.push(Check::exhaustive("left unit", "algebra axioms", &[n], |t| {
                    (self.mul_basis_right(u, t[0]), self.basis_vector(t[0]))
                }));
                r.push(Check::exhaustive("right unit", "algebra axioms", &[n], |t| {
                    (self.mul_basis_left(t[0], u), self.basis_vector(t[0]))
                }));
            }
            None => {
                r.push(Check::skipped("left unit", "algebra axioms", "no unit declared"));
                r.push(Check::skipped("right unit", "algebra axioms", "no unit declared"));
            }
        }
    }

    /// Structure constants in the basis given by the columns of `p`.
    pub fn rebase(&self, p: &Matrix, names: Vec<String>) -> Result<AlgebraData> {
        let pinv = invert(p).ok_or_else(|| Error::Singular("change of basis".into()))?;
        let n = self.dim();
        let cols: Vec<Vector> = (0..n).map(|j| p.column(j)).collect();
        let mult = Tensor3::from_fn(self.field(), [n, n, n], |i, j| pinv.apply(&self.mul(&cols[i], &cols[j])));
        let unit = self.unit.as_ref().map(|u| pinv.apply(u));
        AlgebraData::new(names, mult, unit)
    }
}

/// Comultiplication constants `Δ(e_i) = Σ comult[i][j][k] e_j ⊗ e_k` and the
/// counit `ε(e_i) = counit[i]`.
#[derive(Clone, Debug)]
pub struct CoalgebraData {
    pub comult: Tensor3,
    pub counit: Vector,
    terms: Vec<Vec<(usize, usize, Scalar)>>,
}

impl CoalgebraData {
    pub fn new(comult: Tensor3, counit: Vector) -> Result<Self> {
        let n = counit.len();
        if comult.dims() != [n, n, n] {
            return Err(Error::Dimension(format!(
                "comultiplication tensor has shape {:?}, expected [{n}, {n}, {n}]",
                comult.dims()
            )));
        }
        let terms = (0..n)
            .map(|i| {
                let mut t = Vec::new();
                for j in 0..n {
                    for (k, c) in support(comult.fiber(i, j)) {
                        t.push((j, k, c.clone()));
                    }
                }
                t
            })
            .collect();
        Ok(CoalgebraData { comult, counit, terms })
    }

    pub fn field(&self) -> Field {
        self.comult.field()
    }

    pub fn dim(&self) -> usize {
        self.counit.len()
    }

    /// Nonzero terms `(j, k, c)` of `Δ(e_i)`.
    pub fn coproduct(&self, i: usize) -> &[(usize, usize, Scalar)] {
        &self.terms[i]
    }

    /// `Δ(x)` as a vector on the lexicographic basis of `C ⊗ C`.
    pub fn comult_vec(&self, x: &[Scalar]) -> Vector {
        let n = self.dim();
        let mut out = zero_vec(self.field(), n * n);
        for (i, c) in support(x) {
            for (j, k, d) in self.coproduct(i) {
                out[j * n + k] += &(c * d);
            }
        }
        out
    }

    pub fn counit_of(&self, x: &[Scalar]) -> Scalar {
        let mut acc = self.field().zero();
        for (i, c) in support(x) {
            acc += &(c * &self.counit[i]);
        }
        acc
    }

    /// The iterated coproduct `Δ^{(parts-1)}(e_i)`, expanded left-nested, as
    /// sorted nonzero terms `(indices, coefficient)`.
    pub fn iterated(&self, i: usize, parts: usize) -> Vec<(Vec<usize>, Scalar)> {
        self.sweedler(&unit_vec(self.field(), self.dim(), i), parts)
    }

    /// Sweedler expansion of an arbitrary element into `parts` tensor factors.
    pub fn sweedler(&self, x: &[Scalar], parts: usize) -> Vec<(Vec<usize>, Scalar)> {
        assert!(parts >= 1);
        let mut cur: BTreeMap<Vec<usize>, Scalar> = BTreeMap::new();
        for (i, c) in support(x) {
            cur.insert(vec![i], c.clone());
        }
        for _ in 1..parts {
            let mut next: BTreeMap<Vec<usize>, Scalar> = BTreeMap::new();
            for (idx, c) in &cur {
                for (j, k, d) in self.coproduct(idx[0]) {
                    let mut key = Vec::with_capacity(idx.len() + 1);
                    key.push(*j);
                    key.push(*k);
                    key.extend_from_slice(&idx[1..]);
                    let v = c * d;
                    next.entry(key)
                        .and_modify(|acc| *acc += &v)
                        .or_insert(v);
                }
            }
            cur = next;
        }
        cur.into_iter().filter(|(_, c)| !c.is_zero()).collect()
    }

    pub fn check(&self, subject: &str) -> VerificationReport {
        let mut r = VerificationReport::new(subject);
        self.push_checks(&mut r);
        r
    }

    fn push_checks(&self, r: &mut VerificationReport) {
        let n = self.dim();
        let f = self.field();
        r.push(Check::exhaustive("coassociativity", "coalgebra axioms", &[n], |t| {
            let mut lhs = zero_vec(f, n * n * n);
            let mut rhs = zero_vec(f, n * n * n);
            for (j, k, c) in self.coproduct(t[0]) {
                for (a, b, d) in self.coproduct(*j) {
                    lhs[(a * n + b) * n + k] += &(c * d);
                }
                for (a, b, d) in self.coproduct(*k) {
                    rhs[(j * n + a) * n + b] += &(c * d);
                }
            }
            (lhs, rhs)
        }));
        r.push(Check::exhaustive("left counit", "coalgebra axioms", &[n], |t| {
            let mut lhs = zero_vec(f, n);
            for (j, k, c) in self.coproduct(t[0]) {
                lhs[*k] += &(c * &self.counit[*j]);
            }
            (lhs, unit_vec(f, n, t[0]))
        }));
        r.push(Check::exhaustive("right counit", "coalgebra axioms", &[n], |t| {
            let mut lhs = zero_vec(f, n);
            for (j, k, c) in self.coproduct(t[0]) {
                lhs[*j] += &(c * &self.counit[*k]);
            }
            (lhs, unit_vec(f, n, t[0]))
        }));
    }

    /// Structure constants in the basis given by the columns of `p`.
    pub fn rebase(&self, p: &Matrix) -> Result<CoalgebraData> {
        let pinv = invert(p).ok_or_else(|| Error::Singular("change of basis".into()))?;
        let n = self.dim();
        let f = self.field();
        let mut comult = Tensor3::zeros(f, [n, n, n]);
        for i in 0..n {
            let d = self.comult_vec(&p.column(i));
            // (P⁻¹ ⊗ P⁻¹) Δ(P e_i)
            for a in 0..n {
                for b in 0..n {
                    let c = &d[a * n + b];
                    if c.is_zero() {
                        continue;
                    }
                    for j in 0..n {
                        let x = pinv.get(j, a);
                        if x.is_zero() {
                            continue;
                        }
                        for k in 0..n {
                            let y = pinv.get(k, b);
                            if y.is_zero() {
                                continue;
                            }
                            let v = &(c * x) * y;
                            let cur = comult.get(i, j, k) + &v;
                            comult.set(i, j, k, cur);
                        }
                    }
                }
            }
        }
        let counit = (0..n).map(|j| self.counit_of(&p.column(j))).collect();
        CoalgebraData::new(comult, counit)
    }
}

/// How much structure [`HopfData::check_structure`] verifies.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Level {
    Algebra,
    Coalgebra,
    Bialgebra,
    Hopf,
}

impl FromStr for Level {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "algebra" => Ok(Level::Algebra),
            "coalgebra" => Ok(Level::Coalgebra),
            "bialgebra" => Ok(Level::Bialgebra),
            "hopf" => Ok(Level::Hopf),
            _ => Err(Error::Parse {
                path: "level".into(),
                message: format!("unknown level {s:?}"),
            }),
        }
    }
}

impl fmt::Display for Level {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Level::Algebra => "algebra",
            Level::Coalgebra => "coalgebra",
            Level::Bialgebra => "bialgebra",
            Level::Hopf => "hopf",
        };
        f.write_str(s)
    }
}

/// A Hopf algebra on a fixed basis. The antipode is stored, never derived.
#[derive(Clone, Debug)]
pub struct HopfData {
    pub algebra: AlgebraData,
    pub coalgebra: CoalgebraData,
    pub antipode: Matrix,
}

impl HopfData {
    pub fn new(algebra: AlgebraData, coalgebra: CoalgebraData, antipode: Matrix) -> Result<Self> {
        let n = algebra.dim();
        if coalgebra.dim() != n || antipode.rows() != n || antipode.cols() != n {
            return Err(Error::Dimension(format!(
                "algebra has dimension {n}, coalgebra {}, antipode {}x{}",
                coalgebra.dim(),
                antipode.rows(),
                antipode.cols()
            )));
        }
        if algebra.unit.is_none() {
            return Err(Error::Precondition("a Hopf algebra needs a unit".into()));
        }
        if algebra.field() != coalgebra.field() || algebra.field() != antipode.field() {
            return Err(Error::Field("algebra, coalgebra and antipode use different fields".into()));
        }
        Ok(HopfData { algebra, coalgebra, antipode })
    }

    pub fn field(&self) -> Field {
        self.algebra.field()
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    pub fn names(&self) -> &[String] {
        &self.algebra.names
    }

    pub fn unit(&self) -> &Vector {
        self.algebra.unit.as_ref().expect("checked at construction")
    }

    pub fn mul(&self, x: &[Scalar], y: &[Scalar]) -> Vector {
        self.algebra.mul(x, y)
    }

    pub fn basis_mul(&self, i: usize, j: usize) -> &[Scalar] {
        self.algebra.basis_mul(i, j)
    }

    pub fn basis_vector(&self, i: usize) -> Vector {
        self.algebra.basis_vector(i)
    }

    pub fn counit(&self) -> &[Scalar] {
        &self.coalgebra.counit
    }

    pub fn s(&self, x: &[Scalar]) -> Vector {
        self.antipode.apply(x)
    }

    /// Runs every axiom up to `level`.
    pub fn check_structure(&self, level: Level, subject: &str) -> VerificationReport {
        let mut r = VerificationReport::new(subject);
        self.algebra.push_checks(&mut r);
        if level == Level::Algebra {
            return r;
        }
        self.coalgebra.push_checks(&mut r);
        if level == Level::Coalgebra {
            return r;
        }
        let n = self.dim();
        let f = self.field();
        let co = &self.coalgebra;
        let unit = self.unit();
        r.push(Check::exhaustive(
            "comultiplication multiplicative",
            "bialgebra axioms",
            &[n, n],
            |t| {
                let lhs = co.comult_vec(self.basis_mul(t[0], t[1]));
                let mut rhs = zero_vec(f, n * n);
                for (a, b, c) in co.coproduct(t[0]) {
                    for (d, e, c2) in co.coproduct(t[1]) {
                        axpy(&mut rhs, &(c * c2), &kron(self.basis_mul(*a, *d), self.basis_mul(*b, *e)));
                    }
                }
                (lhs, rhs)
            },
        ));
        r.push(Check::exhaustive("comultiplication unital", "bialgebra axioms", &[], |_| {
            (co.comult_vec(unit), kron(unit, unit))
        }));
        r.push(Check::exhaustive("counit multiplicative", "bialgebra axioms", &[n, n], |t| {
            (
                vec![co.counit_of(self.basis_mul(t[0], t[1]))],
                vec![&co.counit[t[0]] * &co.counit[t[1]]],
            )
        }));
        r.push(Check::exhaustive("counit unital", "bialgebra axioms", &[], |_| {
            (vec![co.counit_of(unit)], vec![f.one()])
        }));
        if level == Level::Bialgebra {
            return r;
        }
        let s_cols: Vec<Vector> = (0..n).map(|j| self.antipode.column(j)).collect();
        r.push(Check::exhaustive("antipode left", "antipode axiom", &[n], |t| {
            let mut lhs = zero_vec(f, n);
            for (j, k, c) in co.coproduct(t[0]) {
                axpy(&mut lhs, c, &self.algebra.mul_basis_right(&s_cols[*j], *k));
            }
            (lhs, scaled(unit, &co.counit[t[0]]))
        }));
        r.push(Check::exhaustive("antipode right", "antipode axiom", &[n], |t| {
            let mut lhs = zero_vec(f, n);
            for (j, k, c) in co.coproduct(t[0]) {
                axpy(&mut lhs, c, &self.algebra.mul_basis_left(*j, &s_cols[*k]));
            }
            (lhs, scaled(unit, &co.counit[t[0]]))
        }));
        r
    }

    /// `S⁻¹`, verified against `S`.
    pub fn antipode_inverse(&self) -> Result<Matrix> {
        let inv = invert(&self.antipode).ok_or_else(|| {
            Error::Singular("the antipode is not invertible; constructions that need S⁻¹ are unavailable".into())
        })?;
        debug_assert!(self.antipode.mul(&inv)?.is_identity());
        Ok(inv)
    }

    /// All structure in the basis given by the columns of `p`.
    pub fn rebase(&self, p: &Matrix, names: Vec<String>) -> Result<HopfData> {
        let pinv = invert(p).ok_or_else(|| Error::Singular("change of basis".into()))?;
        let antipode = pinv.mul(&self.antipode)?.mul(p)?;
        HopfData::new(self.algebra.rebase(p, names)?, self.coalgebra.rebase(p)?, antipode)
    }
}

/// The dual Hopf algebra on the dual basis `p_i` of the basis of `h`.
pub fn dual_hopf(h: &HopfData) -> HopfData {
    let n = h.dim();
    let f = h.field();
    let mut mult = Tensor3::zeros(f, [n, n, n]);
    let mut comult = Tensor3::zeros(f, [n, n, n]);
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                // (p_i * p_j)(e_k) = Δ^{ij}_k and Δ(p_k) = Σ μ^k_{ij} p_i ⊗ p_j
                mult.set(i, j, k, h.coalgebra.comult.get(k, i, j).clone());
                comult.set(k, i, j, h.algebra.mult.get(i, j, k).clone());
            }
        }
    }
    let names = h.names().iter().map(|s| format!("{s}*")).collect();
    let algebra = AlgebraData::new(names, mult, Some(h.coalgebra.counit.clone())).expect("square");
    let coalgebra = CoalgebraData::new(comult, h.unit().clone()).expect("square");
    HopfData::new(algebra, coalgebra, h.antipode.transpose()).expect("consistent")
}

/// `H^{op,cop}`: opposite multiplication and opposite comultiplication on
/// the same basis, with the same antipode.
pub fn op_cop(h: &HopfData) -> HopfData {
    let n = h.dim();
    let f = h.field();
    let mult = Tensor3::from_fn(f, [n, n, n], |i, j| h.basis_mul(j, i).to_vec());
    let mut comult = Tensor3::zeros(f, [n, n, n]);
    for i in 0..n {
        for (j, k, c) in h.coalgebra.coproduct(i) {
            comult.set(i, *k, *j, c.clone());
        }
    }
    let algebra = AlgebraData::new(h.names().to_vec(), mult, h.algebra.unit.clone()).expect("square");
    let coalgebra = CoalgebraData::new(comult, h.coalgebra.counit.clone()).expect("square");
    HopfData::new(algebra, coalgebra, h.antipode.clone()).expect("consistent")
}

/// Solves the antipode axioms `μ(S⊗id)Δ = uε = μ(id⊗S)Δ` as a linear system
/// in the entries of `S`.
pub fn solve_antipode(algebra: &AlgebraData, coalgebra: &CoalgebraData) -> Result<Matrix> {
    let n = algebra.dim();
    let f = algebra.field();
    let unit = algebra.one()?;
    // unknown s[a][b] = S(e_b)[a] at column a*n + b
    let mut rows = Vec::new();
    let mut rhs = Vec::new();
    for i in 0..n {
        let mut left = vec![zero_vec(f, n * n); n];
        let mut right = vec![zero_vec(f, n * n); n];
        for (j, k, c) in coalgebra.coproduct(i) {
            for a in 0..n {
                for (l, m) in support(algebra.basis_mul(a, *k)) {
                    left[l][a * n + j] += &(c * m);
                }
                for (l, m) in support(algebra.basis_mul(*j, a)) {
                    right[l][a * n + k] += &(c * m);
                }
            }
        }
        for l in 0..n {
            let target = &coalgebra.counit[i] * &unit[l];
            rows.push(left[l].clone());
            rhs.push(target.clone());
            rows.push(right[l].clone());
            rhs.push(target);
        }
    }
    let a = Matrix::from_rows(f, n * n, &rows)?;
    let x = solve(&a, &rhs).ok_or_else(|| Error::Precondition("the antipode equations have no solution".into()))?;
    let mut s = Matrix::zeros(f, n, n);
    for a in 0..n {
        for b in 0..n {
            s.set(a, b, x[a * n + b].clone());
        }
    }
    Ok(s)
}

/// Checks that `map` (columns in `dst` coordinates) is a morphism of Hopf
/// algebras, and whether it is bijective.
pub fn check_hopf_map(map: &Matrix, src: &HopfData, dst: &HopfData, subject: &str) -> VerificationReport {
    let mut r = VerificationReport::new(subject);
    let (n, m) = (src.dim(), dst.dim());
    if map.rows() != m || map.cols() != n {
        r.push(Check::verdict(
            "shape",
            "Hopf algebra morphism",
            false,
            vec![],
            format!("{}x{}", map.rows(), map.cols()),
            format!("{m}x{n}"),
        ));
        return r;
    }
    let img: Vec<Vector> = (0..n).map(|j| map.column(j)).collect();
    let f = src.field();
    r.push(Check::exhaustive("multiplicative", "Hopf algebra morphism", &[n, n], |t| {
        (map.apply(src.basis_mul(t[0], t[1])), dst.mul(&img[t[0]], &img[t[1]]))
    }));
    r.push(Check::exhaustive("unital", "Hopf algebra morphism", &[], |_| {
        (map.apply(src.unit()), dst.unit().clone())
    }));
    r.push(Check::exhaustive("comultiplicative", "Hopf algebra morphism", &[n], |t| {
        let mut lhs = zero_vec(f, m * m);
        for (j, k, c) in src.coalgebra.coproduct(t[0]) {
            axpy(&mut lhs, c, &kron(&img[*j], &img[*k]));
        }
        (lhs, dst.coalgebra.comult_vec(&img[t[0]]))
    }));
    r.push(Check::exhaustive("counital", "Hopf algebra morphism", &[n], |t| {
        (vec![dst.coalgebra.counit_of(&img[t[0]])], vec![src.counit()[t[0]].clone()])
    }));
    r.push(Check::exhaustive("commutes with antipode", "Hopf algebra morphism", &[n], |t| {
        (map.apply(&src.antipode.column(t[0])), dst.s(&img[t[0]]))
    }));
    let rank = map.rank();
    r.push(Check::verdict(
        "bijective",
        "Hopf algebra isomorphism",
        n == m && rank == n,
        vec![],
        format!("rank {rank}"),
        format!("rank {m} = dim {n}"),
    ));
    r
}

/// Convolution `(f*g)(x) = f(x₍₁₎) g(x₍₂₎)` of maps `C → A`.
pub fn convolution(f: &LinMap, g: &LinMap, c: &CoalgebraData, a: &AlgebraData) -> Result<LinMap> {
    for (name, m) in [("f", f), ("g", g)] {
        if m.rows() != a.dim() || m.cols() != c.dim() {
            return Err(Error::Dimension(format!(
                "{name} is {}x{}, expected {}x{}",
                m.rows(),
                m.cols(),
                a.dim(),
                c.dim()
            )));
        }
    }
    let cols: Vec<Vector> = (0..c.dim())
        .map(|i| {
            let mut out = zero_vec(a.field(), a.dim());
            for (j, k, coef) in c.coproduct(i) {
                axpy(&mut out, coef, &a.mul(&f.column(*j), &g.column(*k)));
            }
            out
        })
        .collect();
    Matrix::from_columns(a.field(), a.dim(), &cols)
}

/// `A ⊗ B` on the lexicographic basis `e_i ⊗ f_j` (index `i·dim B + j`).
pub fn tensor_algebra(a: &AlgebraData, b: &AlgebraData) -> AlgebraData {
    let (n, m) = (a.dim(), b.dim());
    let f = a.field();
    let d = n * m;
    let mut mult = Tensor3::zeros(f, [d, d, d]);
    for i in 0..n {
        for k in 0..n {
            let ab = a.basis_mul(i, k);
            if is_zero_vec(ab) {
                continue;
            }
            for j in 0..m {
                for l in 0..m {
                    let bb = b.basis_mul(j, l);
                    if is_zero_vec(bb) {
                        continue;
                    }
                    mult.set_fiber(i * m + j, k * m + l, &kron(ab, bb));
                }
            }
        }
    }
    let names = a
        .names
        .iter()
        .flat_map(|x| b.names.iter().map(move |y| format!("{x}⊗{y}")))
        .collect();
    let unit = match (&a.unit, &b.unit) {
        (Some(u), Some(v)) => Some(kron(u, v)),
        _ => None,
    };
    AlgebraData::new(names, mult, unit).expect("square")
}

/// `End(k^n)` on matrix units `E_ij` (index `i·n + j`), composition product.
pub fn end_algebra(field: Field, n: usize) -> Result<AlgebraData> {
    if n == 0 {
        return Err(Error::Dimension("End(V) needs dim V ≥ 1".into()));
    }
    let d = n * n;
    let mut mult = Tensor3::zeros(field, [d, d, d]);
    for i in 0..n {
        for j in 0..n {
            for l in 0..n {
                mult.set(i * n + j, j * n + l, i * n + l, field.one());
            }
        }
    }
    let names = (0..n)
        .flat_map(|i| (0..n).map(move |j| format!("E{i}{j}")))
        .collect();
    let mut unit = zero_vec(field, d);
    for i in 0..n {
        unit[i * n + i] = field.one();
    }
    AlgebraData::new(names, mult, Some(unit))
}

/// Flattens a square matrix into `End` coordinates (`E_ij` at `i·n + j`).
pub fn matrix_to_end(m: &Matrix) -> Vector {
    (0..m.rows())
        .flat_map(|i| (0..m.cols()).map(move |j| (i, j)))
        .map(|(i, j)| m.get(i, j).clone())
        .collect()
}

/// Inverse of [`matrix_to_end`].
pub fn end_to_matrix(field: Field, n: usize, v: &[Scalar]) -> Matrix {
    let mut m = Matrix::zeros(field, n, n);
    for i in 0..n {
        for j in 0..n {
            m.set(i, j, v[i * n + j].clone());
        }
    }
    m
}
