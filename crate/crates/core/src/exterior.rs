//! Left-invariant differential forms on a Lie algebra.
//!
//! Sign conventions, used everywhere in the crate:
//!
//! * `(α ∧ β)` is evaluated with the determinant convention, so
//!   `(e¹ ∧ e²)(e_1, e_2) = 1` and the coefficient of a form on the
//!   increasing tuple `I` is its value on `(e_{i_1}, …, e_{i_k})`.
//! * Chevalley–Eilenberg differential:
//!   `dα(X_0, …, X_k) = Σ_{a<b} (−1)^{a+b} α([X_a, X_b], X_0, …, X̂_a, …, X̂_b, …, X_k)`,
//!   in particular `dα(X, Y) = −α([X, Y])` on 1-forms.
//! * `i(v)α` contracts the first slot.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use num::{One, Zero};

use crate::error::{Error, Result};
use crate::lie::LieAlgebra;
use crate::linalg::{Matrix, Vector};
use crate::scalar::Scalar;

/// Alternating `k`-linear form on an `n`-dimensional space, stored sparsely
/// on strictly increasing index tuples. Forms with `k > n` exist only as
/// zero.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct KForm {
    dim: usize,
    degree: usize,
    coeffs: BTreeMap<Vec<usize>, Scalar>,
}

/// Sign of the permutation sorting `idx`, or `None` on a repeated index.
fn sort_sign(idx: &mut [usize]) -> Option<i8> {
    let mut sign = 1i8;
    // insertion sort, counting transpositions
    for a in 1..idx.len() {
        let mut b = a;
        while b > 0 && idx[b - 1] > idx[b] {
            idx.swap(b - 1, b);
            sign = -sign;
            b -= 1;
        }
    }
    if idx.windows(2).any(|w| w[0] == w[1]) {
        None
    } else {
        Some(sign)
    }
}

fn signed(c: &Scalar, sign: i8) -> Scalar {
    if sign < 0 {
        -c.clone()
    } else {
        c.clone()
    }
}

/// All strictly increasing `k`-tuples from `0..n`.
pub fn increasing_tuples(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if k <= n {
        rec(0, n, k, &mut Vec::with_capacity(k), &mut out);
    }
    out
}

impl KForm {
    pub fn zero(dim: usize, degree: usize) -> Self {
        KForm {
            dim,
            degree,
            coeffs: BTreeMap::new(),
        }
    }

    /// Degree-0 form.
    pub fn constant(dim: usize, c: Scalar) -> Self {
        let mut f = Self::zero(dim, 0);
        if !c.is_zero() {
            f.coeffs.insert(Vec::new(), c);
        }
        f
    }

    /// Dual basis 1-form `e^i`.
    pub fn dual(dim: usize, i: usize) -> Self {
        assert!(i < dim, "index out of range");
        let mut f = Self::zero(dim, 1);
        f.coeffs.insert(vec![i], Scalar::one());
        f
    }

    /// Builds a form from `(indices, coeff)` terms in any index order;
    /// tuples are sorted with the permutation sign and repeated indices
    /// contribute nothing.
    pub fn from_terms(
        dim: usize,
        degree: usize,
        terms: impl IntoIterator<Item = (Vec<usize>, Scalar)>,
    ) -> Result<Self> {
        let mut f = Self::zero(dim, degree);
        for (mut idx, c) in terms {
            if idx.len() != degree {
                return Err(Error::DimensionMismatch {
                    expected: degree,
                    found: idx.len(),
                });
            }
            if let Some(&bad) = idx.iter().find(|&&i| i >= dim) {
                return Err(Error::IndexOutOfRange { index: bad, dim });
            }
            if let Some(s) = sort_sign(&mut idx) {
                f.add_term(idx, signed(&c, s));
            }
        }
        Ok(f)
    }

    /// 1-form with the given values on the basis.
    pub fn from_linear(values: &[Scalar]) -> Self {
        let mut f = Self::zero(values.len(), 1);
        for (i, c) in values.iter().enumerate() {
            f.add_term(vec![i], c.clone());
        }
        f
    }

    /// 2-form with values `m[i][j]` for `i < j` (the lower triangle is
    /// ignored).
    pub fn from_bilinear(m: &Matrix) -> Self {
        let n = m.nrows();
        let mut f = Self::zero(n, 2);
        for i in 0..n {
            for j in i + 1..n {
                f.add_term(vec![i, j], m.get(i, j).clone());
            }
        }
        f
    }

    fn add_term(&mut self, idx: Vec<usize>, c: Scalar) {
        if c.is_zero() {
            return;
        }
        match self.coeffs.entry(idx) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Nonzero coefficients keyed by increasing index tuple.
    pub fn terms(&self) -> &BTreeMap<Vec<usize>, Scalar> {
        &self.coeffs
    }

    /// Value on `(e_{i_1}, …, e_{i_k})` for any index order.
    pub fn coeff(&self, idx: &[usize]) -> Scalar {
        let mut v = idx.to_vec();
        match sort_sign(&mut v) {
            None => Scalar::zero(),
            Some(s) => self
                .coeffs
                .get(&v)
                .map(|c| signed(c, s))
                .unwrap_or_else(Scalar::zero),
        }
    }

    pub fn scale(&self, c: &Scalar) -> KForm {
        if c.is_zero() {
            return Self::zero(self.dim, self.degree);
        }
        KForm {
            dim: self.dim,
            degree: self.degree,
            coeffs: self.coeffs.iter().map(|(k, v)| (k.clone(), v * c)).collect(),
        }
    }

    /// Values on the basis vectors of a 1-form.
    pub fn as_linear(&self) -> Vec<Scalar> {
        assert_eq!(self.degree, 1, "not a 1-form");
        (0..self.dim).map(|i| self.coeff(&[i])).collect()
    }

    /// Antisymmetric matrix `ω(e_i, e_j)` of a 2-form.
    pub fn as_matrix(&self) -> Matrix {
        assert_eq!(self.degree, 2, "not a 2-form");
        let mut m = Matrix::zeros(self.dim, self.dim);
        for (k, c) in &self.coeffs {
            m.set(k[0], k[1], c.clone());
            m.set(k[1], k[0], -c.clone());
        }
        m
    }

    /// `α(v_1, …, v_k)`.
    pub fn eval(&self, vs: &[Vector]) -> Scalar {
        assert_eq!(vs.len(), self.degree, "wrong number of arguments");
        let mut total = Scalar::zero();
        for (idx, c) in &self.coeffs {
            let minor = Matrix::from_rows(
                vs.iter()
                    .map(|v| idx.iter().map(|&i| v.0[i].clone()).collect())
                    .collect(),
            );
            total += c * minor.transpose().determinant();
        }
        total
    }

    /// Exterior product.
    pub fn wedge(&self, other: &KForm) -> KForm {
        assert_eq!(self.dim, other.dim, "ambient dimension mismatch");
        let mut out = KForm::zero(self.dim, self.degree + other.degree);
        for (i, a) in &self.coeffs {
            for (j, b) in &other.coeffs {
                let mut idx = i.clone();
                idx.extend_from_slice(j);
                if let Some(s) = sort_sign(&mut idx) {
                    out.add_term(idx, signed(&(a * b), s));
                }
            }
        }
        out
    }

    /// `α ∧ α ∧ … ∧ α` (`k` factors; the constant 1 for `k = 0`).
    pub fn power(&self, k: usize) -> KForm {
        let mut out = KForm::constant(self.dim, Scalar::one());
        for _ in 0..k {
            out = out.wedge(self);
        }
        out
    }

    /// Interior product `i(v)α`, contracting the first slot.
    pub fn interior(&self, v: &Vector) -> Result<KForm> {
        if self.degree == 0 {
            return Err(Error::CannotContractScalar);
        }
        if v.len() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: v.len(),
            });
        }
        let mut out = KForm::zero(self.dim, self.degree - 1);
        for (idx, c) in &self.coeffs {
            for (p, &m) in idx.iter().enumerate() {
                if v.0[m].is_zero() {
                    continue;
                }
                let mut rest = idx.clone();
                rest.remove(p);
                let val = c * &v.0[m];
                out.add_term(rest, if p % 2 == 0 { val } else { -val });
            }
        }
        Ok(out)
    }

    /// The same form on `ℚ^dim`, with index `i` sent to `i + offset`.
    pub fn embed(&self, dim: usize, offset: usize) -> KForm {
        assert!(offset + self.dim <= dim, "embedding does not fit");
        KForm {
            dim,
            degree: self.degree,
            coeffs: self
                .coeffs
                .iter()
                .map(|(k, v)| (k.iter().map(|i| i + offset).collect(), v.clone()))
                .collect(),
        }
    }

    /// Restriction to the span of `basis`, expressed on that basis.
    pub fn restrict(&self, basis: &[Vector]) -> KForm {
        let m = basis.len();
        let mut out = KForm::zero(m, self.degree);
        for idx in increasing_tuples(m, self.degree) {
            let args: Vec<Vector> = idx.iter().map(|&i| basis[i].clone()).collect();
            out.add_term(idx, self.eval(&args));
        }
        out
    }

    /// Pull-back along the linear map whose `j`-th column is the image of
    /// the new `j`-th basis vector.
    pub fn pullback(&self, map: &Matrix) -> KForm {
        let cols: Vec<Vector> = (0..map.ncols()).map(|j| map.column(j)).collect();
        self.restrict(&cols)
    }
}

impl fmt::Display for KForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        for (n, (idx, c)) in self.coeffs.iter().enumerate() {
            if n > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({c})")?;
            if idx.is_empty() {
                continue;
            }
            let names: Vec<String> = idx.iter().map(|i| format!("e{i}")).collect();
            write!(f, " {}", names.join("∧"))?;
        }
        Ok(())
    }
}

impl Add for &KForm {
    type Output = KForm;
    fn add(self, rhs: &KForm) -> KForm {
        assert_eq!(self.dim, rhs.dim, "ambient dimension mismatch");
        assert_eq!(self.degree, rhs.degree, "degree mismatch");
        let mut out = self.clone();
        for (k, v) in &rhs.coeffs {
            out.add_term(k.clone(), v.clone());
        }
        out
    }
}

impl Sub for &KForm {
    type Output = KForm;
    fn sub(self, rhs: &KForm) -> KForm {
        self + &(-rhs)
    }
}

impl Neg for &KForm {
    type Output = KForm;
    fn neg(self) -> KForm {
        self.scale(&-Scalar::one())
    }
}

/// Chevalley–Eilenberg differential of a left-invariant form.
///
/// A top-degree input yields the (necessarily zero) form of degree `n + 1`.
pub fn ce_d(g: &LieAlgebra, alpha: &KForm) -> Result<KForm> {
    if alpha.dim != g.dim() {
        return Err(Error::DimensionMismatch {
            expected: g.dim(),
            found: alpha.dim,
        });
    }
    let mut out = KForm::zero(alpha.dim, alpha.degree + 1);
    if alpha.degree == 0 || alpha.degree >= alpha.dim {
        return Ok(out);
    }
    // α(e_m, e_K) = (−1)^s c for the term (I, c) with m = I[s], K = I \ {m}.
    for (idx, c) in &alpha.coeffs {
        for (s, &m) in idx.iter().enumerate() {
            let mut rest = idx.clone();
            rest.remove(s);
            let base = if s % 2 == 0 { c.clone() } else { -c.clone() };
            for (&(p, q), w) in g.bracket_table() {
                let wm = &w.0[m];
                if wm.is_zero() || rest.contains(&p) || rest.contains(&q) {
                    continue;
                }
                let mut j = rest.clone();
                j.push(p);
                j.push(q);
                j.sort_unstable();
                let a = j.iter().position(|&x| x == p).expect("present");
                let b = j.iter().position(|&x| x == q).expect("present");
                let val = &base * wm;
                out.add_term(j, if (a + b) % 2 == 0 { val } else { -val });
            }
        }
    }
    Ok(out)
}

/// Solves `dΩ = Ω ∧ θ` for a 1-form `θ` without checking that `θ` is
/// closed. See [`solve_lee_form`].
pub fn lee_candidate(g: &LieAlgebra, omega: &KForm) -> Result<KForm> {
    let n = g.dim();
    if n < 4 || n % 2 == 1 {
        return Err(Error::LckDimension(n));
    }
    if omega.dim != n || omega.degree != 2 {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: omega.dim,
        });
    }
    if omega.power(n / 2).is_zero() {
        return Err(Error::DegenerateForm);
    }
    let d_omega = ce_d(g, omega)?;
    let triples = increasing_tuples(n, 3);
    let images: Vec<KForm> = (0..n).map(|i| omega.wedge(&KForm::dual(n, i))).collect();
    let rows: Vec<Vec<Scalar>> = triples
        .iter()
        .map(|t| images.iter().map(|f| f.coeff(t)).collect())
        .collect();
    let rhs = Vector(triples.iter().map(|t| d_omega.coeff(t)).collect());
    let a = Matrix::from_rows(rows);
    let theta = a.solve(&rhs).ok_or(Error::NoLeeForm)?;
    Ok(KForm::from_linear(theta.coords()))
}

/// The Lee form of a nondegenerate 2-form: the unique closed `θ` with
/// `dΩ = Ω ∧ θ`. Needs even dimension `≥ 4`, where `θ ↦ Ω ∧ θ` is
/// injective.
pub fn solve_lee_form(g: &LieAlgebra, omega: &KForm) -> Result<KForm> {
    let theta = lee_candidate(g, omega)?;
    if !ce_d(g, &theta)?.is_zero() {
        return Err(Error::LeeFormNotClosed { theta });
    }
    Ok(theta)
}
