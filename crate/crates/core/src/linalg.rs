//! Exact linear algebra over the rationals.
//!
//! Rank, null spaces and linear solves go through a fraction-free (Bareiss)
//! elimination on integer rows: each rational row is first scaled by the lcm
//! of its denominators, the integer matrix is brought to echelon form with
//! exact divisions, and only the final back substitution returns to
//! rationals.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num::bigint::BigInt;
use num::{Integer, One, Signed, Zero};

use crate::scalar::{common_denominator, Scalar};

/// Coordinate vector relative to a fixed basis.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Vector(pub Vec<Scalar>);

impl Vector {
    pub fn zeros(n: usize) -> Self {
        Vector(vec![Scalar::zero(); n])
    }

    /// The `i`-th standard basis vector of length `n`.
    pub fn basis(n: usize, i: usize) -> Self {
        let mut v = Self::zeros(n);
        v.0[i] = Scalar::one();
        v
    }

    pub fn from_ints(xs: &[i64]) -> Self {
        Vector(xs.iter().map(|&x| Scalar::from_integer(x.into())).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn coords(&self) -> &[Scalar] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    pub fn scale(&self, c: &Scalar) -> Vector {
        Vector(self.0.iter().map(|x| x * c).collect())
    }

    pub fn dot(&self, other: &Vector) -> Scalar {
        assert_eq!(self.len(), other.len(), "dimension mismatch");
        self.0
            .iter()
            .zip(&other.0)
            .fold(Scalar::zero(), |acc, (a, b)| acc + a * b)
    }

    /// `self + c * other`.
    pub fn axpy(&self, c: &Scalar, other: &Vector) -> Vector {
        assert_eq!(self.len(), other.len(), "dimension mismatch");
        Vector(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| a + c * b)
                .collect(),
        )
    }

    /// Indices and values of the nonzero coordinates.
    pub fn support(&self) -> impl Iterator<Item = (usize, &Scalar)> {
        self.0.iter().enumerate().filter(|(_, x)| !x.is_zero())
    }

    /// Appends `extra` zero coordinates.
    pub fn padded(&self, extra: usize) -> Vector {
        let mut v = self.0.clone();
        v.extend(std::iter::repeat_n(Scalar::zero(), extra));
        Vector(v)
    }
}

impl fmt::Display for Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ")")
    }
}

impl Add for &Vector {
    type Output = Vector;
    fn add(self, rhs: &Vector) -> Vector {
        assert_eq!(self.len(), rhs.len(), "dimension mismatch");
        Vector(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &Vector {
    type Output = Vector;
    fn sub(self, rhs: &Vector) -> Vector {
        assert_eq!(self.len(), rhs.len(), "dimension mismatch");
        Vector(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl Neg for &Vector {
    type Output = Vector;
    fn neg(self) -> Vector {
        Vector(self.0.iter().map(|a| -a).collect())
    }
}

/// Dense rational matrix, row-major.
///
/// As an endomorphism it acts on column vectors: column `j` holds the image
/// of the `j`-th basis vector.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

/// Linear map of a Lie algebra to itself (`ad X`, `J`, derivations).
pub type Endomorphism = Matrix;

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![Scalar::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Scalar::one());
        }
        m
    }

    /// Builds a matrix from rows; panics on ragged input.
    pub fn from_rows(rows: Vec<Vec<Scalar>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Matrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn from_row_major(rows: usize, cols: usize, data: Vec<Scalar>) -> Self {
        assert_eq!(data.len(), rows * cols, "wrong number of entries");
        Matrix { rows, cols, data }
    }

    pub fn from_ints(rows: &[&[i64]]) -> Self {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| Scalar::from_integer(x.into())).collect())
                .collect(),
        )
    }

    /// Matrix whose `j`-th column is `cols[j]`.
    pub fn from_columns(n: usize, cols: &[Vector]) -> Self {
        let mut m = Self::zeros(n, cols.len());
        for (j, c) in cols.iter().enumerate() {
            assert_eq!(c.len(), n, "column length mismatch");
            for i in 0..n {
                m.set(i, j, c.0[i].clone());
            }
        }
        m
    }

    /// Rank-one map `v ↦ form·v · target`, i.e. `target ⊗ form`.
    pub fn outer(target: &Vector, form: &[Scalar]) -> Self {
        let mut m = Self::zeros(target.len(), form.len());
        for i in 0..target.len() {
            for j in 0..form.len() {
                m.set(i, j, &target.0[i] * &form[j]);
            }
        }
        m
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, x: Scalar) {
        self.data[i * self.cols + j] = x;
    }

    pub fn row(&self, i: usize) -> Vec<Scalar> {
        self.data[i * self.cols..(i + 1) * self.cols].to_vec()
    }

    pub fn rows(&self) -> Vec<Vec<Scalar>> {
        (0..self.rows).map(|i| self.row(i)).collect()
    }

    pub fn column(&self, j: usize) -> Vector {
        Vector((0..self.rows).map(|i| self.get(i, j).clone()).collect())
    }

    pub fn entries(&self) -> &[Scalar] {
        &self.data
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    pub fn apply(&self, v: &Vector) -> Vector {
        assert_eq!(self.cols, v.len(), "dimension mismatch");
        Vector(
            (0..self.rows)
                .map(|i| {
                    (0..self.cols).fold(Scalar::zero(), |acc, j| acc + self.get(i, j) * &v.0[j])
                })
                .collect(),
        )
    }

    /// Bilinear form `xᵀ M y`.
    pub fn bilinear(&self, x: &Vector, y: &Vector) -> Scalar {
        x.dot(&self.apply(y))
    }

    pub fn scale(&self, c: &Scalar) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| x * c).collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| (0..i).all(|j| self.get(i, j) == self.get(j, i)))
    }

    pub fn trace(&self) -> Scalar {
        assert!(self.is_square(), "trace of a non-square matrix");
        (0..self.rows).fold(Scalar::zero(), |acc, i| acc + self.get(i, i))
    }

    /// `self * other - other * self`.
    pub fn commutator(&self, other: &Matrix) -> Matrix {
        &(self * other) - &(other * self)
    }

    /// Block-diagonal sum `diag(self, other)`.
    pub fn block_diag(&self, other: &Matrix) -> Matrix {
        let mut m = Matrix::zeros(self.rows + other.rows, self.cols + other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                m.set(i, j, self.get(i, j).clone());
            }
        }
        for i in 0..other.rows {
            for j in 0..other.cols {
                m.set(self.rows + i, self.cols + j, other.get(i, j).clone());
            }
        }
        m
    }

    pub fn rank(&self) -> usize {
        echelon(&self.rows()).pivots.len()
    }

    /// Basis of `{v : M v = 0}` read off the reduced row echelon form.
    pub fn nullspace(&self) -> Vec<Vector> {
        let rref = Rref::of(&self.rows(), self.cols);
        rref.kernel_basis()
    }

    /// Some `x` with `M x = b`, or `None` when the system is inconsistent.
    /// Free variables are set to zero.
    pub fn solve(&self, b: &Vector) -> Option<Vector> {
        assert_eq!(b.len(), self.rows, "right-hand side length mismatch");
        let aug: Vec<Vec<Scalar>> = (0..self.rows)
            .map(|i| {
                let mut r = self.row(i);
                r.push(b.0[i].clone());
                r
            })
            .collect();
        let rref = Rref::of(&aug, self.cols + 1);
        if rref.pivots.last() == Some(&self.cols) {
            return None;
        }
        let mut x = Vector::zeros(self.cols);
        for (r, &p) in rref.pivots.iter().enumerate() {
            x.0[p] = rref.rows[r][self.cols].clone();
        }
        Some(x)
    }

    pub fn determinant(&self) -> Scalar {
        assert!(self.is_square(), "determinant of a non-square matrix");
        let n = self.rows;
        if n == 0 {
            return Scalar::one();
        }
        let (int_rows, scale) = integer_rows(&self.rows());
        let e = bareiss(int_rows, n, true);
        if e.pivots.len() < n {
            return Scalar::zero();
        }
        let mut d = Scalar::from_integer(e.rows[n - 1][n - 1].clone());
        if e.swaps % 2 == 1 {
            d = -d;
        }
        d / Scalar::from_integer(scale)
    }

    pub fn inverse(&self) -> Option<Matrix> {
        assert!(self.is_square(), "inverse of a non-square matrix");
        let n = self.rows;
        let aug: Vec<Vec<Scalar>> = (0..n)
            .map(|i| {
                let mut r = self.row(i);
                r.extend(Matrix::identity(n).row(i));
                r
            })
            .collect();
        let rref = Rref::of(&aug, 2 * n);
        if rref.pivots.len() < n || rref.pivots[n - 1] != n - 1 {
            return None;
        }
        Some(Matrix::from_rows(
            rref.rows.iter().map(|r| r[n..].to_vec()).collect(),
        ))
    }

    /// Leading principal minors `Δ₁, …, Δₙ`.
    ///
    /// Fraction-free elimination without pivoting leaves `Δₖ` (times a
    /// positive row-scaling factor) on the diagonal; once some `Δₖ` vanishes
    /// the remaining minors are computed directly.
    pub fn leading_principal_minors(&self) -> Vec<Scalar> {
        assert!(self.is_square(), "minors of a non-square matrix");
        let n = self.rows;
        let mut rows = Vec::with_capacity(n);
        let mut scales = Vec::with_capacity(n);
        for r in self.rows() {
            let d = common_denominator(&r);
            rows.push(
                r.iter()
                    .map(|x| (x * Scalar::from_integer(d.clone())).to_integer())
                    .collect::<Vec<BigInt>>(),
            );
            scales.push(d);
        }
        let mut minors = Vec::with_capacity(n);
        let mut prev = BigInt::one();
        let mut scale_prod = BigInt::one();
        for k in 0..n {
            scale_prod *= &scales[k];
            let pivot = rows[k][k].clone();
            minors.push(Scalar::new(pivot.clone(), scale_prod.clone()));
            if pivot.is_zero() {
                break;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = &pivot * &rows[i][j] - &rows[i][k] * &rows[k][j];
                    rows[i][j] = exact_div(v, &prev);
                }
                rows[i][k] = BigInt::zero();
            }
            prev = pivot;
        }
        for k in minors.len()..n {
            let sub = Matrix::from_rows(
                (0..=k).map(|i| self.row(i)[..=k].to_vec()).collect(),
            );
            minors.push(sub.determinant());
        }
        minors
    }

    /// Sylvester's criterion; `None` if the matrix is not symmetric.
    pub fn is_positive_definite(&self) -> Option<bool> {
        if !self.is_symmetric() {
            return None;
        }
        Some(
            self.leading_principal_minors()
                .iter()
                .all(Signed::is_positive),
        )
    }

    /// Coefficients of `det(u·I − M)`, constant term first (Faddeev–LeVerrier).
    pub fn charpoly(&self) -> Vec<Scalar> {
        assert!(self.is_square(), "characteristic polynomial of a non-square matrix");
        let n = self.rows;
        let mut coeffs = vec![Scalar::zero(); n + 1];
        coeffs[n] = Scalar::one();
        let mut m = Matrix::zeros(n, n);
        for k in 1..=n {
            let mut next = self * &m;
            for i in 0..n {
                let d = next.get(i, i) + &coeffs[n - k + 1];
                next.set(i, i, d);
            }
            let am = self * &next;
            coeffs[n - k] = -am.trace() / Scalar::from_integer(BigInt::from(k));
            m = next;
        }
        coeffs
    }

    /// Inertia `(positive, negative, zero)` of a symmetric matrix, by
    /// congruence diagonalization.
    pub fn inertia(&self) -> Option<(usize, usize, usize)> {
        if !self.is_symmetric() {
            return None;
        }
        let n = self.rows;
        let mut a = self.clone();
        let mut diag = Vec::with_capacity(n);
        for k in 0..n {
            if a.get(k, k).is_zero() {
                if let Some(j) = (k + 1..n).find(|&j| !a.get(j, j).is_zero()) {
                    a.swap_sym(k, j);
                } else if let Some(j) = (k + 1..n).find(|&j| !a.get(k, j).is_zero()) {
                    a.add_sym(k, j);
                } else {
                    diag.push(Scalar::zero());
                    continue;
                }
            }
            let p = a.get(k, k).clone();
            for i in k + 1..n {
                let f = a.get(i, k) / &p;
                if f.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let v = a.get(i, j) - &f * a.get(k, j);
                    a.set(i, j, v);
                }
                for j in 0..n {
                    let v = a.get(j, i) - &f * a.get(j, k);
                    a.set(j, i, v);
                }
            }
            diag.push(p);
        }
        let pos = diag.iter().filter(|x| x.is_positive()).count();
        let neg = diag.iter().filter(|x| x.is_negative()).count();
        Some((pos, neg, n - pos - neg))
    }

    fn swap_sym(&mut self, a: usize, b: usize) {
        for j in 0..self.cols {
            let (x, y) = (self.get(a, j).clone(), self.get(b, j).clone());
            self.set(a, j, y);
            self.set(b, j, x);
        }
        for i in 0..self.rows {
            let (x, y) = (self.get(i, a).clone(), self.get(i, b).clone());
            self.set(i, a, y);
            self.set(i, b, x);
        }
    }

    // row_a += row_b, col_a += col_b
    fn add_sym(&mut self, a: usize, b: usize) {
        for j in 0..self.cols {
            let v = self.get(a, j) + self.get(b, j);
            self.set(a, j, v);
        }
        for i in 0..self.rows {
            let v = self.get(i, a) + self.get(i, b);
            self.set(i, a, v);
        }
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            write!(f, "[")?;
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self.get(i, j))?;
            }
            writeln!(f, "]")?;
        }
        Ok(())
    }
}

impl Mul for &Matrix {
    type Output = Matrix;
    fn mul(self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.cols, rhs.rows, "dimension mismatch");
        let mut m = Matrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let v = m.get(i, j) + a * rhs.get(k, j);
                    m.set(i, j, v);
                }
            }
        }
        m
    }
}

impl Add for &Matrix {
    type Output = Matrix;
    fn add(self, rhs: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "dimension mismatch");
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a + b).collect(),
        }
    }
}

impl Sub for &Matrix {
    type Output = Matrix;
    fn sub(self, rhs: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "dimension mismatch");
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a - b).collect(),
        }
    }
}

impl Neg for &Matrix {
    type Output = Matrix;
    fn neg(self) -> Matrix {
        self.scale(&-Scalar::one())
    }
}

fn exact_div(v: BigInt, d: &BigInt) -> BigInt {
    let (q, r) = v.div_rem(d);
    debug_assert!(r.is_zero(), "inexact division in fraction-free elimination");
    q
}

/// Clears denominators row by row. Returns the integer rows and the product
/// of the (positive) row scale factors.
fn integer_rows(rows: &[Vec<Scalar>]) -> (Vec<Vec<BigInt>>, BigInt) {
    let mut prod = BigInt::one();
    let out = rows
        .iter()
        .map(|r| {
            let d = common_denominator(r);
            let ds = Scalar::from_integer(d.clone());
            prod *= &d;
            r.iter().map(|x| (x * &ds).to_integer()).collect()
        })
        .collect();
    (out, prod)
}

struct IntEchelon {
    rows: Vec<Vec<BigInt>>,
    pivots: Vec<usize>,
    swaps: usize,
}

/// Fraction-free row echelon form. With `stop_on_missing_pivot` the scan
/// gives up on the first column without a pivot (enough for determinants).
fn bareiss(mut m: Vec<Vec<BigInt>>, ncols: usize, stop_on_missing_pivot: bool) -> IntEchelon {
    let nrows = m.len();
    let mut prev = BigInt::one();
    let mut pivots = Vec::new();
    let mut swaps = 0;
    let mut r = 0;
    for c in 0..ncols {
        if r == nrows {
            break;
        }
        let Some(p) = (r..nrows).find(|&i| !m[i][c].is_zero()) else {
            if stop_on_missing_pivot {
                break;
            }
            continue;
        };
        if p != r {
            m.swap(p, r);
            swaps += 1;
        }
        let (head, tail) = m.split_at_mut(r + 1);
        let pivot_row = &head[r];
        let pivot = pivot_row[c].clone();
        for row in tail.iter_mut() {
            let lead = row[c].clone();
            for j in c + 1..ncols {
                let v = &pivot * &row[j] - &lead * &pivot_row[j];
                row[j] = exact_div(v, &prev);
            }
            row[c] = BigInt::zero();
        }
        prev = pivot;
        pivots.push(c);
        r += 1;
    }
    IntEchelon {
        rows: m,
        pivots,
        swaps,
    }
}

fn echelon(rows: &[Vec<Scalar>]) -> IntEchelon {
    let ncols = rows.first().map_or(0, Vec::len);
    bareiss(integer_rows(rows).0, ncols, false)
}

/// Reduced row echelon form over ℚ (nonzero rows only).
#[derive(Clone, Debug)]
pub(crate) struct Rref {
    pub rows: Vec<Vec<Scalar>>,
    pub pivots: Vec<usize>,
    pub ncols: usize,
}

impl Rref {
    pub fn of(rows: &[Vec<Scalar>], ncols: usize) -> Rref {
        if rows.is_empty() {
            return Rref {
                rows: Vec::new(),
                pivots: Vec::new(),
                ncols,
            };
        }
        let e = echelon(rows);
        let rank = e.pivots.len();
        let mut out: Vec<Vec<Scalar>> = e.rows[..rank]
            .iter()
            .zip(&e.pivots)
            .map(|(r, &p)| {
                let lead = Scalar::from_integer(r[p].clone());
                r.iter()
                    .map(|x| Scalar::from_integer(x.clone()) / &lead)
                    .collect()
            })
            .collect();
        for k in (0..rank).rev() {
            let p = e.pivots[k];
            let (above, rest) = out.split_at_mut(k);
            let pivot_row = &rest[0];
            for row in above.iter_mut() {
                let f = row[p].clone();
                if f.is_zero() {
                    continue;
                }
                for j in p..ncols {
                    let v = &row[j] - &f * &pivot_row[j];
                    row[j] = v;
                }
            }
        }
        Rref {
            rows: out,
            pivots: e.pivots,
            ncols,
        }
    }

    pub fn kernel_basis(&self) -> Vec<Vector> {
        let free: Vec<usize> = (0..self.ncols)
            .filter(|c| !self.pivots.contains(c))
            .collect();
        free.iter()
            .map(|&f| {
                let mut v = Vector::basis(self.ncols, f);
                for (r, &p) in self.pivots.iter().enumerate() {
                    v.0[p] = -self.rows[r][f].clone();
                }
                v
            })
            .collect()
    }
}

/// Linear subspace of `ℚⁿ`, stored as the reduced row echelon basis of its
/// span. Two subspaces are equal exactly when their stored bases are.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subspace {
    ambient: usize,
    basis: Vec<Vector>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn full(ambient: usize) -> Self {
        Self::span(ambient, &(0..ambient).map(|i| Vector::basis(ambient, i)).collect::<Vec<_>>())
    }

    /// Span of arbitrary (possibly dependent) vectors.
    pub fn span(ambient: usize, vectors: &[Vector]) -> Self {
        assert!(
            vectors.iter().all(|v| v.len() == ambient),
            "vector length does not match ambient dimension"
        );
        let rows: Vec<Vec<Scalar>> = vectors.iter().map(|v| v.0.clone()).collect();
        let rref = Rref::of(&rows, ambient);
        Subspace {
            ambient,
            basis: rref.rows.into_iter().map(Vector).collect(),
            pivots: rref.pivots,
        }
    }

    /// Null space of the linear forms given as rows.
    pub fn kernel_of_forms(ambient: usize, forms: &[Vec<Scalar>]) -> Self {
        let rref = Rref::of(forms, ambient);
        Self::span(ambient, &rref.kernel_basis())
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn basis(&self) -> &[Vector] {
        &self.basis
    }

    /// Coordinates used as pivots by the echelon basis.
    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Coordinates not used as pivots; the corresponding standard basis
    /// vectors span a complement.
    pub fn complement_indices(&self) -> Vec<usize> {
        (0..self.ambient)
            .filter(|c| !self.pivots.contains(c))
            .collect()
    }

    /// Canonical representative of `v` modulo the subspace: the unique
    /// vector congruent to `v` that vanishes on every pivot coordinate.
    pub fn reduce(&self, v: &Vector) -> Vector {
        let mut out = v.clone();
        for (b, &p) in self.basis.iter().zip(&self.pivots) {
            let c = out.0[p].clone();
            if !c.is_zero() {
                out = out.axpy(&-c, b);
            }
        }
        out
    }

    pub fn contains(&self, v: &Vector) -> bool {
        self.reduce(v).is_zero()
    }

    pub fn contains_subspace(&self, other: &Subspace) -> bool {
        other.basis.iter().all(|v| self.contains(v))
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        let mut vs = self.basis.clone();
        vs.extend(other.basis.iter().cloned());
        Subspace::span(self.ambient, &vs)
    }

    /// Coordinates of a member `v` in the stored basis.
    pub fn coordinates(&self, v: &Vector) -> Option<Vec<Scalar>> {
        if !self.contains(v) {
            return None;
        }
        Some(self.pivots.iter().map(|&p| v.0[p].clone()).collect())
    }

    /// Image of the subspace under `m`.
    pub fn image(&self, m: &Matrix) -> Subspace {
        let imgs: Vec<Vector> = self.basis.iter().map(|v| m.apply(v)).collect();
        Subspace::span(m.nrows(), &imgs)
    }

    /// Subspace of `ℚ^(n+extra)` obtained by padding every basis vector.
    pub fn padded(&self, extra: usize) -> Subspace {
        Subspace::span(
            self.ambient + extra,
            &self.basis.iter().map(|v| v.padded(extra)).collect::<Vec<_>>(),
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{frac, int};
    use proptest::prelude::*;

    fn naive_rank(rows: &[Vec<Scalar>]) -> usize {
        // Plain rational Gaussian elimination, kept independent of Bareiss.
        let mut m: Vec<Vec<Scalar>> = rows.to_vec();
        let ncols = m.first().map_or(0, Vec::len);
        let mut r = 0;
        for c in 0..ncols {
            let Some(p) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else {
                continue;
            };
            m.swap(p, r);
            for i in 0..m.len() {
                if i != r && !m[i][c].is_zero() {
                    let f = &m[i][c] / &m[r][c];
                    for j in 0..ncols {
                        let v = &m[i][j] - &f * &m[r][j];
                        m[i][j] = v;
                    }
                }
            }
            r += 1;
        }
        r
    }

    fn laplace_det(m: &Matrix) -> Scalar {
        let n = m.nrows();
        if n == 0 {
            return int(1);
        }
        (0..n).fold(Scalar::zero(), |acc, j| {
            let minor = Matrix::from_rows(
                (1..n)
                    .map(|i| (0..n).filter(|&c| c != j).map(|c| m.get(i, c).clone()).collect())
                    .collect(),
            );
            let term = m.get(0, j) * laplace_det(&minor);
            if j % 2 == 0 {
                acc + term
            } else {
                acc - term
            }
        })
    }

    fn small_matrix(max_n: usize) -> impl Strategy<Value = Matrix> {
        (1..=max_n, 1..=max_n).prop_flat_map(|(r, c)| {
            proptest::collection::vec((-4i64..=4, 1i64..=3), r * c).prop_map(move |xs| {
                Matrix::from_row_major(r, c, xs.into_iter().map(|(a, b)| frac(a, b)).collect())
            })
        })
    }

    fn small_square(max_n: usize) -> impl Strategy<Value = Matrix> {
        (1..=max_n).prop_flat_map(|n| {
            proptest::collection::vec((-3i64..=3, 1i64..=2), n * n).prop_map(move |xs| {
                Matrix::from_row_major(n, n, xs.into_iter().map(|(a, b)| frac(a, b)).collect())
            })
        })
    }

    proptest! {
        #[test]
        fn rank_matches_naive_elimination(m in small_matrix(5)) {
            prop_assert_eq!(m.rank(), naive_rank(&m.rows()));
        }

        #[test]
        fn nullspace_is_kernel_of_right_dimension(m in small_matrix(5)) {
            let ns = m.nullspace();
            prop_assert_eq!(ns.len() + m.rank(), m.ncols());
            for v in &ns {
                prop_assert!(m.apply(v).is_zero());
            }
        }

        #[test]
        fn determinant_matches_laplace(m in small_square(4)) {
            prop_assert_eq!(m.determinant(), laplace_det(&m));
        }

        #[test]
        fn solve_finds_preimage(m in small_matrix(4), seed in proptest::collection::vec(-3i64..=3, 4)) {
            let x = Vector::from_ints(&seed[..m.ncols()]);
            let b = m.apply(&x);
            let y = m.solve(&b).expect("consistent system");
            prop_assert_eq!(m.apply(&y), b);
        }

        #[test]
        fn minors_match_submatrix_determinants(m in small_square(4)) {
            let minors = m.leading_principal_minors();
            for (k, d) in minors.iter().enumerate() {
                let sub = Matrix::from_rows((0..=k).map(|i| m.row(i)[..=k].to_vec()).collect());
                prop_assert_eq!(d, &laplace_det(&sub));
            }
        }

        #[test]
        fn inertia_counts_match_rank(m in small_square(4)) {
            let s = &m + &m.transpose();
            let (p, q, z) = s.inertia().unwrap();
            prop_assert_eq!(p + q, s.rank());
            prop_assert_eq!(p + q + z, s.nrows());
        }
    }

    #[test]
    fn inverse_round_trip() {
        let m = Matrix::from_ints(&[&[2, 1, 0], &[1, 3, 1], &[0, 1, 4]]);
        let inv = m.inverse().unwrap();
        assert_eq!(&m * &inv, Matrix::identity(3));
        assert!(Matrix::from_ints(&[&[1, 2], &[2, 4]]).inverse().is_none());
    }

    #[test]
    fn inconsistent_system_has_no_solution() {
        let m = Matrix::from_ints(&[&[1, 1], &[2, 2]]);
        assert!(m.solve(&Vector::from_ints(&[1, 3])).is_none());
    }

    #[test]
    fn charpoly_of_companion_like_matrix() {
        // det(uI - [[0,-2],[1,3]]) = u^2 - 3u + 2
        let m = Matrix::from_ints(&[&[0, -2], &[1, 3]]);
        assert_eq!(m.charpoly(), vec![int(2), int(-3), int(1)]);
    }

    #[test]
    fn inertia_of_indefinite_forms() {
        assert_eq!(Matrix::from_ints(&[&[0, 1], &[1, 0]]).inertia(), Some((1, 1, 0)));
        assert_eq!(
            Matrix::from_ints(&[&[2, 0, 0], &[0, 2, 0], &[0, 0, -2]]).inertia(),
            Some((2, 1, 0))
        );
        assert_eq!(Matrix::from_ints(&[&[1, 2], &[3, 4]]).inertia(), None);
    }

    #[test]
    fn positive_definite_by_minors() {
        assert_eq!(Matrix::identity(3).is_positive_definite(), Some(true));
        assert_eq!(
            Matrix::from_ints(&[&[1, 2], &[2, 1]]).is_positive_definite(),
            Some(false)
        );
        assert_eq!(Matrix::from_ints(&[&[0, 0], &[0, 1]]).is_positive_definite(), Some(false));
        assert_eq!(Matrix::from_ints(&[&[1, 1], &[0, 1]]).is_positive_definite(), None);
    }

    #[test]
    fn subspace_reduction_is_canonical() {
        let s = Subspace::span(3, &[Vector::from_ints(&[1, 1, 0]), Vector::from_ints(&[2, 2, 0])]);
        assert_eq!(s.dim(), 1);
        let a = s.reduce(&Vector::from_ints(&[3, 1, 5]));
        let b = s.reduce(&Vector::from_ints(&[0, -2, 5]));
        assert_eq!(a, b);
        assert!(s.contains(&Vector::from_ints(&[-7, -7, 0])));
        assert_eq!(s.complement_indices(), vec![1, 2]);
        assert_eq!(
            s.coordinates(&Vector::from_ints(&[4, 4, 0])),
            Some(vec![int(4)])
        );
    }
}
