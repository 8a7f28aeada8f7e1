//! Dense exact linear algebra: matrices, three-index structure tensors, row
//! reduction, spans and coordinates.
//!
//! Matrices act on column vectors: `m.apply(v)` is `m · v`, so the image of
//! the `j`-th basis vector is column `j`.

use std::fmt;

use crate::error::{Error, Result};
use crate::scalar::{Field, Scalar};

pub type Vector = Vec<Scalar>;

pub fn zero_vec(field: Field, n: usize) -> Vector {
    vec![field.zero(); n]
}

pub fn unit_vec(field: Field, n: usize, i: usize) -> Vector {
    let mut v = zero_vec(field, n);
    v[i] = field.one();
    v
}

/// `acc += c · v`
pub fn axpy(acc: &mut [Scalar], c: &Scalar, v: &[Scalar]) {
    debug_assert_eq!(acc.len(), v.len());
    if c.is_zero() {
        return;
    }
    for (a, x) in acc.iter_mut().zip(v) {
        if !x.is_zero() {
            *a += &(c * x);
        }
    }
}

pub fn scaled(v: &[Scalar], c: &Scalar) -> Vector {
    v.iter().map(|x| c * x).collect()
}

pub fn is_zero_vec(v: &[Scalar]) -> bool {
    v.iter().all(Scalar::is_zero)
}

pub fn sub_vec(a: &[Scalar], b: &[Scalar]) -> Vector {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

/// Kronecker product of coordinate vectors, left factor major.
pub fn kron(a: &[Scalar], b: &[Scalar]) -> Vector {
    let mut out = Vec::with_capacity(a.len() * b.len());
    for x in a {
        for y in b {
            out.push(x * y);
        }
    }
    out
}

pub fn display_vec(v: &[Scalar]) -> Vec<String> {
    v.iter().map(ToString::to_string).collect()
}

#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    field: Field,
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} over {}", self.rows, self.cols, self.field)?;
        for i in 0..self.rows {
            writeln!(f, "  {:?}", display_vec(self.row(i)))?;
        }
        Ok(())
    }
}

impl Matrix {
    pub fn zeros(field: Field, rows: usize, cols: usize) -> Self {
        Matrix {
            field,
            rows,
            cols,
            data: vec![field.zero(); rows * cols],
        }
    }

    pub fn identity(field: Field, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, field.one());
        }
        m
    }

    pub fn from_rows(field: Field, cols: usize, rows: &[Vector]) -> Result<Self> {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for (i, r) in rows.iter().enumerate() {
            if r.len() != cols {
                return Err(Error::Dimension(format!(
                    "row {i} has length {}, expected {cols}",
                    r.len()
                )));
            }
            data.extend(r.iter().cloned());
        }
        Ok(Matrix {
            field,
            rows: rows.len(),
            cols,
            data,
        })
    }

    pub fn from_columns(field: Field, rows: usize, columns: &[Vector]) -> Result<Self> {
        Ok(Self::from_rows(field, rows, columns)?.transpose())
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Scalar) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_vectors(&self) -> Vec<Vector> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn column(&self, j: usize) -> Vector {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.field, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    pub fn mul(&self, rhs: &Matrix) -> Result<Matrix> {
        if self.cols != rhs.rows {
            return Err(Error::Dimension(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let mut out = Matrix::zeros(self.field, self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                let start = i * rhs.cols;
                axpy(&mut out.data[start..start + rhs.cols], a, rhs.row(k));
            }
        }
        Ok(out)
    }

    /// `self · v`
    pub fn apply(&self, v: &[Scalar]) -> Vector {
        assert_eq!(v.len(), self.cols, "vector length does not match matrix columns");
        let mut out = zero_vec(self.field, self.rows);
        for (i, o) in out.iter_mut().enumerate() {
            for (a, x) in self.row(i).iter().zip(v) {
                if !a.is_zero() && !x.is_zero() {
                    *o += &(a * x);
                }
            }
        }
        out
    }

    pub fn rank(&self) -> usize {
        rref(self).1.len()
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|i| {
                (0..self.cols).all(|j| {
                    let x = self.get(i, j);
                    if i == j {
                        x.is_one()
                    } else {
                        x.is_zero()
                    }
                })
            })
    }

    pub fn pow(&self, e: u32) -> Result<Matrix> {
        let mut acc = Matrix::identity(self.field, self.rows);
        for _ in 0..e {
            acc = acc.mul(self)?;
        }
        Ok(acc)
    }
}

/// Reduced row echelon form and its pivot columns.
///
/// Pivots are chosen as the first nonzero entry scanning columns left to
/// right, which is all exact arithmetic needs.
pub fn rref(m: &Matrix) -> (Matrix, Vec<usize>) {
    let mut a = m.clone();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..a.cols {
        if r == a.rows {
            break;
        }
        let Some(p) = (r..a.rows).find(|&i| !a.get(i, c).is_zero()) else {
            continue;
        };
        if p != r {
            for j in 0..a.cols {
                a.data.swap(p * a.cols + j, r * a.cols + j);
            }
        }
        let inv = a.get(r, c).inv().expect("pivot is nonzero");
        for j in 0..a.cols {
            let x = &a.data[r * a.cols + j] * &inv;
            a.data[r * a.cols + j] = x;
        }
        let pivot_row = a.row(r).to_vec();
        for i in 0..a.rows {
            if i == r {
                continue;
            }
            let f = a.get(i, c).clone();
            if f.is_zero() {
                continue;
            }
            let neg = -&f;
            let start = i * a.cols;
            axpy(&mut a.data[start..start + a.cols], &neg, &pivot_row);
        }
        pivots.push(c);
        r += 1;
    }
    (a, pivots)
}

/// Basis of the span of `vectors`: the nonzero rows of their reduced echelon
/// form.
pub fn span_basis(field: Field, len: usize, vectors: &[Vector]) -> Result<Matrix> {
    let m = Matrix::from_rows(field, len, vectors)?;
    let (r, pivots) = rref(&m);
    let rows: Vec<Vector> = (0..pivots.len()).map(|i| r.row(i).to_vec()).collect();
    Matrix::from_rows(field, len, &rows)
}

/// Exact two-sided inverse, `None` when singular.
pub fn invert(m: &Matrix) -> Option<Matrix> {
    if m.rows != m.cols {
        return None;
    }
    let n = m.rows;
    let mut aug = Matrix::zeros(m.field, n, 2 * n);
    for i in 0..n {
        for j in 0..n {
            aug.set(i, j, m.get(i, j).clone());
        }
        aug.set(i, n + i, m.field.one());
    }
    let (r, pivots) = rref(&aug);
    if n > 0 && (pivots.len() < n || pivots[n - 1] >= n) {
        return None;
    }
    let mut inv = Matrix::zeros(m.field, n, n);
    for i in 0..n {
        for j in 0..n {
            inv.set(i, j, r.get(i, n + j).clone());
        }
    }
    Some(inv)
}

/// Some solution `x` of `a · x = b`, or `None` if the system is inconsistent.
/// Free variables are set to zero.
pub fn solve(a: &Matrix, b: &[Scalar]) -> Option<Vector> {
    assert_eq!(a.rows, b.len());
    let mut aug = Matrix::zeros(a.field, a.rows, a.cols + 1);
    for i in 0..a.rows {
        for j in 0..a.cols {
            aug.set(i, j, a.get(i, j).clone());
        }
        aug.set(i, a.cols, b[i].clone());
    }
    let (r, pivots) = rref(&aug);
    if pivots.last() == Some(&a.cols) {
        return None;
    }
    let mut x = zero_vec(a.field, a.cols);
    for (i, &c) in pivots.iter().enumerate() {
        x[c] = r.get(i, a.cols).clone();
    }
    Some(x)
}

/// Coordinates of `v` against the rows of `basis`, or `None` when `v` is
/// outside their span. The rows must be linearly independent.
pub fn membership(v: &[Scalar], basis: &Matrix) -> Result<Option<Vector>> {
    Ok(Subspace::new(basis.clone())?.coords(v))
}

/// A subspace with a fixed, linearly independent basis (stored as rows) and a
/// precomputed coordinate solver.
#[derive(Clone, Debug)]
pub struct Subspace {
    basis: Matrix,
    pivots: Vec<usize>,
    // Inverse of the basis restricted to its pivot columns.
    pivot_inverse: Matrix,
}

impl Subspace {
    pub fn new(basis: Matrix) -> Result<Self> {
        let (_, pivots) = rref(&basis);
        if pivots.len() != basis.rows {
            return Err(Error::Dimension(format!(
                "basis rows are dependent (rank {} < {})",
                pivots.len(),
                basis.rows
            )));
        }
        let k = basis.rows;
        let mut block = Matrix::zeros(basis.field, k, k);
        for i in 0..k {
            for (jj, &j) in pivots.iter().enumerate() {
                block.set(i, jj, basis.get(i, j).clone());
            }
        }
        let pivot_inverse = invert(&block).expect("pivot block of an independent basis is invertible");
        Ok(Subspace {
            basis,
            pivots,
            pivot_inverse,
        })
    }

    /// The span of arbitrary (possibly dependent) vectors, with the echelon
    /// basis.
    pub fn span(field: Field, len: usize, vectors: &[Vector]) -> Result<Self> {
        Self::new(span_basis(field, len, vectors)?)
    }

    pub fn dim(&self) -> usize {
        self.basis.rows
    }

    pub fn ambient_dim(&self) -> usize {
        self.basis.cols
    }

    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    pub fn basis_vector(&self, i: usize) -> &[Scalar] {
        self.basis.row(i)
    }

    /// Unique `c` with `Σ c_i · basis_i = v`, if any.
    pub fn coords(&self, v: &[Scalar]) -> Option<Vector> {
        assert_eq!(v.len(), self.basis.cols, "vector length does not match ambient dimension");
        let k = self.basis.rows;
        let restricted: Vector = self.pivots.iter().map(|&j| v[j].clone()).collect();
        // c · B_P = v_P  <=>  c = v_P · B_P^{-1}
        let mut c = zero_vec(self.basis.field, k);
        for (jj, x) in restricted.iter().enumerate() {
            axpy(&mut c, x, self.pivot_inverse.row(jj));
        }
        (self.embed(&c) == v).then_some(c)
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        self.coords(v).is_some()
    }

    /// `Σ c_i · basis_i`
    pub fn embed(&self, c: &[Scalar]) -> Vector {
        assert_eq!(c.len(), self.basis.rows);
        let mut out = zero_vec(self.basis.field, self.basis.cols);
        for (i, x) in c.iter().enumerate() {
            axpy(&mut out, x, self.basis.row(i));
        }
        out
    }
}

/// A dense three-index array, stored `[i][j][k]` with `k` fastest.
///
/// Structure constants use it as `T[i][j]` = the coordinate vector of the
/// image of the pair of basis elements `(i, j)`.
#[derive(Clone, PartialEq, Eq)]
pub struct Tensor3 {
    field: Field,
    dims: [usize; 3],
    data: Vec<Scalar>,
}

impl fmt::Debug for Tensor3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Tensor3 {:?} over {}", self.dims, self.field)
    }
}

impl Tensor3 {
    pub fn zeros(field: Field, dims: [usize; 3]) -> Self {
        Tensor3 {
            field,
            dims,
            data: vec![field.zero(); dims[0] * dims[1] * dims[2]],
        }
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn dims(&self) -> [usize; 3] {
        self.dims
    }

    pub fn get(&self, i: usize, j: usize, k: usize) -> &Scalar {
        &self.data[(i * self.dims[1] + j) * self.dims[2] + k]
    }

    pub fn set(&mut self, i: usize, j: usize, k: usize, v: Scalar) {
        let idx = (i * self.dims[1] + j) * self.dims[2] + k;
        self.data[idx] = v;
    }

    /// The vector `T[i][j][..]`.
    pub fn fiber(&self, i: usize, j: usize) -> &[Scalar] {
        let start = (i * self.dims[1] + j) * self.dims[2];
        &self.data[start..start + self.dims[2]]
    }

    pub fn set_fiber(&mut self, i: usize, j: usize, v: &[Scalar]) {
        assert_eq!(v.len(), self.dims[2]);
        let start = (i * self.dims[1] + j) * self.dims[2];
        self.data[start..start + self.dims[2]].clone_from_slice(v);
    }

    /// Bilinear evaluation `Σ x_i y_j T[i][j]`.
    pub fn contract(&self, x: &[Scalar], y: &[Scalar]) -> Vector {
        assert_eq!(x.len(), self.dims[0]);
        assert_eq!(y.len(), self.dims[1]);
        let mut out = zero_vec(self.field, self.dims[2]);
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if yj.is_zero() {
                    continue;
                }
                axpy(&mut out, &(xi * yj), self.fiber(i, j));
            }
        }
        out
    }

    /// Builds a tensor from a function of the first two indices.
    pub fn from_fn(
        field: Field,
        dims: [usize; 3],
        mut f: impl FnMut(usize, usize) -> Vector,
    ) -> Self {
        let mut t = Tensor3::zeros(field, dims);
        for i in 0..dims[0] {
            for j in 0..dims[1] {
                t.set_fiber(i, j, &f(i, j));
            }
        }
        t
    }

    pub fn try_from_fn(
        field: Field,
        dims: [usize; 3],
        mut f: impl FnMut(usize, usize) -> Result<Vector>,
    ) -> Result<Self> {
        let mut t = Tensor3::zeros(field, dims);
        for i in 0..dims[0] {
            for j in 0..dims[1] {
                t.set_fiber(i, j, &f(i, j)?);
            }
        }
        Ok(t)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn q() -> Field {
        Field::Rational
    }

    fn m(field: Field, rows: &[&[i64]]) -> Matrix {
        let cols = rows.first().map_or(0, |r| r.len());
        let rows: Vec<Vector> = rows
            .iter()
            .map(|r| r.iter().map(|&x| field.int(x)).collect())
            .collect();
        Matrix::from_rows(field, cols, &rows).unwrap()
    }

    #[test]
    fn rref_identity_and_zero() {
        let id = Matrix::identity(q(), 3);
        assert_eq!(rref(&id), (id.clone(), vec![0, 1, 2]));
        let z = Matrix::zeros(q(), 2, 4);
        assert_eq!(rref(&z), (z.clone(), vec![]));
    }

    #[test]
    fn rref_over_f2() {
        let f2 = Field::prime(2).unwrap();
        let (r, p) = rref(&m(f2, &[&[1, 1], &[1, 1]]));
        assert_eq!(r, m(f2, &[&[1, 1], &[0, 0]]));
        assert_eq!(p, vec![0]);
    }

    #[test]
    fn span_examples() {
        let v = |xs: &[i64]| xs.iter().map(|&x| q().int(x)).collect::<Vector>();
        let b = span_basis(q(), 2, &[v(&[1, 0]), v(&[2, 0])]).unwrap();
        assert_eq!(b, m(q(), &[&[1, 0]]));
        assert_eq!(span_basis(q(), 3, &[]).unwrap().rows(), 0);
        let b = span_basis(q(), 3, &[v(&[1, 1, 0]), v(&[0, 1, 1]), v(&[1, 0, -1])]).unwrap();
        assert_eq!(b.rows(), 2);
    }

    #[test]
    fn membership_examples() {
        let basis = m(q(), &[&[1, 2, 0], &[0, 1, 1]]);
        assert_eq!(
            membership(&zero_vec(q(), 3), &basis).unwrap(),
            Some(zero_vec(q(), 2))
        );
        assert_eq!(
            membership(basis.row(1), &basis).unwrap(),
            Some(unit_vec(q(), 2, 1))
        );
        let e0 = m(q(), &[&[1, 0]]);
        assert_eq!(membership(&[q().one(), q().one()], &e0).unwrap(), None);
        assert!(membership(&[q().one(), q().one()], &m(q(), &[&[1, 1], &[2, 2]])).is_err());
    }

    #[test]
    fn invert_examples() {
        let id = Matrix::identity(q(), 3);
        assert_eq!(invert(&id), Some(id));
        let swap = m(q(), &[&[0, 1], &[1, 0]]);
        assert_eq!(invert(&swap), Some(swap.clone()));
        assert_eq!(invert(&m(q(), &[&[1, 1], &[0, 0]])), None);
    }

    #[test]
    fn solve_finds_a_solution_or_reports_inconsistency() {
        let a = m(q(), &[&[1, 1], &[2, 2]]);
        let x = solve(&a, &[q().int(3), q().int(6)]).unwrap();
        assert_eq!(a.apply(&x), vec![q().int(3), q().int(6)]);
        assert!(solve(&a, &[q().int(3), q().int(5)]).is_none());
    }

    fn arb_matrix(max: usize) -> impl Strategy<Value = Matrix> {
        (1..=max, 1..=max).prop_flat_map(|(r, c)| {
            proptest::collection::vec(-2i64..=2, r * c).prop_map(move |xs| {
                let rows: Vec<Vector> = xs.chunks(c).map(|ch| ch.iter().map(|&x| q().int(x)).collect()).collect();
                Matrix::from_rows(q(), c, &rows).unwrap()
            })
        })
    }

    /// Exhaustive membership over F_5: enumerate every coefficient vector.
    fn brute_force_in_span(f5: Field, vectors: &[Vector], target: &[Scalar]) -> bool {
        let k = vectors.len();
        let mut coeffs = vec![0i64; k];
        loop {
            let mut acc = zero_vec(f5, target.len());
            for (c, v) in coeffs.iter().zip(vectors) {
                axpy(&mut acc, &f5.int(*c), v);
            }
            if acc == target {
                return true;
            }
            let mut i = 0;
            loop {
                if i == k {
                    return false;
                }
                coeffs[i] += 1;
                if coeffs[i] < 5 {
                    break;
                }
                coeffs[i] = 0;
                i += 1;
            }
        }
    }

    proptest! {
        #[test]
        fn rref_is_idempotent(a in arb_matrix(6)) {
            let (r, p) = rref(&a);
            let (rr, pp) = rref(&r);
            prop_assert_eq!(r, rr);
            prop_assert_eq!(p, pp);
        }

        #[test]
        fn inverse_is_two_sided(a in arb_matrix(4)) {
            if let Some(inv) = invert(&a) {
                prop_assert!(inv.mul(&a).unwrap().is_identity());
                prop_assert!(a.mul(&inv).unwrap().is_identity());
            } else if a.rows() == a.cols() {
                prop_assert!(a.rank() < a.rows());
            }
        }

        #[test]
        fn membership_matches_brute_force(
            len in 1usize..=6,
            raw in proptest::collection::vec(proptest::collection::vec(0i64..5, 6), 0..=4),
            target in proptest::collection::vec(0i64..5, 6),
        ) {
            let f5 = Field::prime(5).unwrap();
            let vectors: Vec<Vector> = raw.iter().map(|v| v[..len].iter().map(|&x| f5.int(x)).collect()).collect();
            let target: Vector = target[..len].iter().map(|&x| f5.int(x)).collect();
            let space = Subspace::span(f5, len, &vectors).unwrap();
            prop_assert_eq!(space.contains(&target), brute_force_in_span(f5, &vectors, &target));
            if let Some(c) = space.coords(&target) {
                prop_assert_eq!(space.embed(&c), target);
            }
        }
    }
}
