//! Finite-dimensional Lie algebras given by rational structure constants.

use std::collections::{BTreeMap, HashSet};

use num::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exterior::KForm;
use crate::linalg::{Matrix, Subspace, Vector};
use crate::scalar::Scalar;

/// Lie algebra on a named basis `e_0, …, e_{n-1}`.
///
/// Only `[e_i, e_j]` with `i < j` is stored, and only when nonzero;
/// `[e_j, e_i] = -[e_i, e_j]` and `[e_i, e_i] = 0` are implied.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LieAlgebra {
    names: Vec<String>,
    brackets: BTreeMap<(usize, usize), Vector>,
}

/// Nonzero Jacobi cyclic sum on a basis triple `i < j < k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JacobiDefect {
    pub i: usize,
    pub j: usize,
    pub k: usize,
    pub defect: Vector,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SeriesKind {
    Derived,
    LowerCentral,
}

impl LieAlgebra {
    /// Validated constructor: names unique, entries `i < j < n`, and the
    /// Jacobi identity holds.
    pub fn new(names: Vec<String>, brackets: BTreeMap<(usize, usize), Vector>) -> Result<Self> {
        let g = Self::new_unchecked(names, brackets)?;
        if let Some(d) = g.jacobi_defect().first() {
            return Err(Error::JacobiViolation {
                i: d.i,
                j: d.j,
                k: d.k,
            });
        }
        Ok(g)
    }

    /// Like [`LieAlgebra::new`] but leaves the Jacobi identity unchecked, for
    /// intermediate bracket tables.
    pub fn new_unchecked(
        names: Vec<String>,
        brackets: BTreeMap<(usize, usize), Vector>,
    ) -> Result<Self> {
        let n = names.len();
        let mut seen = HashSet::new();
        for name in &names {
            if !seen.insert(name.as_str()) {
                return Err(Error::DuplicateBasisName(name.clone()));
            }
        }
        let mut clean = BTreeMap::new();
        for ((i, j), v) in brackets {
            if i >= j {
                return Err(Error::NonIncreasingPair { i, j });
            }
            if j >= n {
                return Err(Error::IndexOutOfRange { index: j, dim: n });
            }
            if v.len() != n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    found: v.len(),
                });
            }
            if !v.is_zero() {
                clean.insert((i, j), v);
            }
        }
        Ok(LieAlgebra {
            names,
            brackets: clean,
        })
    }

    pub fn abelian(n: usize) -> Self {
        Self::abelian_named((1..=n).map(|i| format!("e{i}")).collect())
    }

    pub fn abelian_named(names: Vec<String>) -> Self {
        Self::new_unchecked(names, BTreeMap::new()).expect("abelian algebra with unique names")
    }

    /// Start a bracket table on the given basis names.
    pub fn builder<S: Into<String>>(names: impl IntoIterator<Item = S>) -> LieAlgebraBuilder {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        LieAlgebraBuilder {
            n: names.len(),
            names,
            table: BTreeMap::new(),
        }
    }

    pub fn dim(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    /// Stored entries `(i, j) ↦ [e_i, e_j]`, `i < j`, nonzero only.
    pub fn bracket_table(&self) -> &BTreeMap<(usize, usize), Vector> {
        &self.brackets
    }

    /// `[e_i, e_j]` for any pair of indices.
    pub fn bracket_basis(&self, i: usize, j: usize) -> Vector {
        use std::cmp::Ordering::*;
        match i.cmp(&j) {
            Equal => Vector::zeros(self.dim()),
            Less => self
                .brackets
                .get(&(i, j))
                .cloned()
                .unwrap_or_else(|| Vector::zeros(self.dim())),
            Greater => self
                .brackets
                .get(&(j, i))
                .map(|v| -v)
                .unwrap_or_else(|| Vector::zeros(self.dim())),
        }
    }

    /// Structure constant `c_{ij}^k`.
    pub fn structure_constant(&self, i: usize, j: usize, k: usize) -> Scalar {
        self.bracket_basis(i, j).0[k].clone()
    }

    fn check_len(&self, v: &Vector) -> Result<()> {
        if v.len() != self.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                found: v.len(),
            });
        }
        Ok(())
    }

    /// Bilinear extension of the bracket table.
    pub fn bracket(&self, v: &Vector, w: &Vector) -> Result<Vector> {
        self.check_len(v)?;
        self.check_len(w)?;
        Ok(self.br(v, w))
    }

    pub(crate) fn br(&self, v: &Vector, w: &Vector) -> Vector {
        let mut out = Vector::zeros(self.dim());
        for (&(i, j), c) in &self.brackets {
            let coeff = &v.0[i] * &w.0[j] - &v.0[j] * &w.0[i];
            if !coeff.is_zero() {
                out = out.axpy(&coeff, c);
            }
        }
        out
    }

    /// Matrix of `ad v = [v, ·]`.
    pub fn ad(&self, v: &Vector) -> Matrix {
        let n = self.dim();
        let cols: Vec<Vector> = (0..n).map(|j| self.br(v, &Vector::basis(n, j))).collect();
        Matrix::from_columns(n, &cols)
    }

    pub fn ad_basis(&self, i: usize) -> Matrix {
        self.ad(&Vector::basis(self.dim(), i))
    }

    /// Every triple `i < j < k` whose Jacobi cyclic sum is nonzero.
    pub fn jacobi_defect(&self) -> Vec<JacobiDefect> {
        let n = self.dim();
        let mut out = Vec::new();
        for i in 0..n {
            let ei = Vector::basis(n, i);
            for j in i + 1..n {
                let ej = Vector::basis(n, j);
                for k in j + 1..n {
                    let ek = Vector::basis(n, k);
                    let s1 = self.br(&ei, &self.bracket_basis(j, k));
                    let s2 = self.br(&ej, &self.bracket_basis(k, i));
                    let s3 = self.br(&ek, &self.bracket_basis(i, j));
                    let defect = &(&s1 + &s2) + &s3;
                    if !defect.is_zero() {
                        out.push(JacobiDefect { i, j, k, defect });
                    }
                }
            }
        }
        out
    }

    pub fn is_unimodular(&self) -> bool {
        (0..self.dim()).all(|i| self.ad_basis(i).trace().is_zero())
    }

    /// The linear form `X ↦ tr ad X`.
    pub fn modular_form(&self) -> Vec<Scalar> {
        (0..self.dim()).map(|i| self.ad_basis(i).trace()).collect()
    }

    /// `{v : [v, e_j] = 0 for all j}`.
    pub fn center(&self) -> Subspace {
        let n = self.dim();
        // Row (j, k) of the stacked system is the linear form v ↦ [v, e_j]_k.
        let mut rows = Vec::with_capacity(n * n);
        for j in 0..n {
            for k in 0..n {
                rows.push((0..n).map(|i| self.structure_constant(i, j, k)).collect());
            }
        }
        Subspace::kernel_of_forms(n, &rows)
    }

    /// `[a, b]` as a subspace.
    pub fn bracket_subspaces(&self, a: &Subspace, b: &Subspace) -> Subspace {
        let mut vs = Vec::new();
        for x in a.basis() {
            for y in b.basis() {
                vs.push(self.br(x, y));
            }
        }
        Subspace::span(self.dim(), &vs)
    }

    pub fn derived_algebra(&self) -> Subspace {
        let g = Subspace::full(self.dim());
        self.bracket_subspaces(&g, &g)
    }

    /// Descending series starting at `g`, ending at the first term that is
    /// zero or equal to its predecessor.
    pub fn series(&self, kind: SeriesKind) -> Vec<Subspace> {
        let g = Subspace::full(self.dim());
        let mut out = vec![g.clone()];
        loop {
            let last = out.last().expect("nonempty");
            if last.is_zero() {
                break;
            }
            let next = match kind {
                SeriesKind::Derived => self.bracket_subspaces(last, last),
                SeriesKind::LowerCentral => self.bracket_subspaces(&g, last),
            };
            let stable = &next == last;
            out.push(next);
            if stable {
                break;
            }
        }
        out
    }

    pub fn is_nilpotent(&self) -> bool {
        self.series(SeriesKind::LowerCentral)
            .last()
            .is_some_and(Subspace::is_zero)
    }

    pub fn is_solvable(&self) -> bool {
        self.series(SeriesKind::Derived)
            .last()
            .is_some_and(Subspace::is_zero)
    }

    /// `B(e_i, e_j) = tr(ad e_i ∘ ad e_j)`.
    pub fn killing_form(&self) -> Matrix {
        let n = self.dim();
        let ads: Vec<Matrix> = (0..n).map(|i| self.ad_basis(i)).collect();
        let mut b = Matrix::zeros(n, n);
        for i in 0..n {
            for j in i..n {
                let t = (&ads[i] * &ads[j]).trace();
                b.set(i, j, t.clone());
                b.set(j, i, t);
            }
        }
        b
    }

    /// Cartan's criterion: the Killing form is nondegenerate.
    pub fn is_semisimple(&self) -> bool {
        self.dim() > 0 && !self.killing_form().determinant().is_zero()
    }

    /// Direct product `self × other`; colliding names of `other` get primes.
    pub fn direct_sum(&self, other: &LieAlgebra) -> LieAlgebra {
        let n = self.dim();
        let m = other.dim();
        let mut names = self.names.clone();
        for name in &other.names {
            let mut nm = name.clone();
            while names.contains(&nm) || self.names.contains(&nm) {
                nm.push('\'');
            }
            names.push(nm);
        }
        let mut table = BTreeMap::new();
        for (&(i, j), v) in &self.brackets {
            table.insert((i, j), v.padded(m));
        }
        for (&(i, j), v) in &other.brackets {
            let mut c = Vector::zeros(n);
            c.0.extend(v.0.iter().cloned());
            table.insert((n + i, n + j), c);
        }
        LieAlgebra {
            names,
            brackets: table,
        }
    }

    pub fn is_subalgebra(&self, s: &Subspace) -> bool {
        self.bracket_subspaces(s, s).basis().iter().all(|v| s.contains(v))
    }

    pub fn is_ideal(&self, s: &Subspace) -> bool {
        let g = Subspace::full(self.dim());
        s.contains_subspace(&self.bracket_subspaces(&g, s))
    }

    /// Largest ideal of `self` contained in `s`.
    pub fn largest_ideal_in(&self, s: &Subspace) -> Subspace {
        let n = self.dim();
        let mut w = s.clone();
        loop {
            // {x ∈ w : [e_i, x] ∈ w for all i}
            let b = w.basis().to_vec();
            if b.is_empty() {
                return w;
            }
            let mut rows: Vec<Vec<Scalar>> = Vec::new();
            for i in 0..n {
                let ad = self.ad_basis(i);
                let imgs: Vec<Vector> = b.iter().map(|x| w.reduce(&ad.apply(x))).collect();
                for k in 0..n {
                    rows.push(imgs.iter().map(|v| v.0[k].clone()).collect());
                }
            }
            let coeffs = Subspace::kernel_of_forms(b.len(), &rows);
            let vs: Vec<Vector> = coeffs
                .basis()
                .iter()
                .map(|c| {
                    b.iter()
                        .zip(c.coords())
                        .fold(Vector::zeros(n), |acc, (x, a)| acc.axpy(a, x))
                })
                .collect();
            let next = Subspace::span(n, &vs);
            if next == w {
                return w;
            }
            w = next;
        }
    }

    /// The subalgebra spanned by `s`, on the basis `s.basis()`, with the
    /// given names.
    pub fn subalgebra(&self, s: &Subspace, names: Vec<String>) -> Result<LieAlgebra> {
        if names.len() != s.dim() {
            return Err(Error::DimensionMismatch {
                expected: s.dim(),
                found: names.len(),
            });
        }
        let b = s.basis();
        let mut table = BTreeMap::new();
        for i in 0..b.len() {
            for j in i + 1..b.len() {
                let v = self.br(&b[i], &b[j]);
                let c = s.coordinates(&v).ok_or(Error::NotSubalgebra)?;
                table.insert((i, j), Vector(c));
            }
        }
        LieAlgebra::new_unchecked(names, table)
    }

    /// Rebases the algebra: new basis vector `k` is `order[k]`-th old one.
    pub fn permuted(&self, order: &[usize]) -> Result<LieAlgebra> {
        let n = self.dim();
        let mut check = order.to_vec();
        check.sort_unstable();
        if check != (0..n).collect::<Vec<_>>() {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: order.len(),
            });
        }
        let mut inv = vec![0; n];
        for (new, &old) in order.iter().enumerate() {
            inv[old] = new;
        }
        let names = order.iter().map(|&o| self.names[o].clone()).collect();
        let mut table = BTreeMap::new();
        for a in 0..n {
            for b in a + 1..n {
                let v = self.bracket_basis(order[a], order[b]);
                let mut w = Vector::zeros(n);
                for (k, c) in v.support() {
                    w.0[inv[k]] = c.clone();
                }
                table.insert((a, b), w);
            }
        }
        LieAlgebra::new_unchecked(names, table)
    }

    pub fn with_names(&self, names: Vec<String>) -> Result<LieAlgebra> {
        if names.len() != self.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                found: names.len(),
            });
        }
        LieAlgebra::new_unchecked(names, self.brackets.clone())
    }

    /// `v` written in basis names, e.g. `2/3*T + X`.
    pub fn format_vector(&self, v: &Vector) -> String {
        let parts: Vec<(String, &Scalar)> = v
            .support()
            .map(|(i, c)| (self.names[i].clone(), c))
            .collect();
        join_terms(parts)
    }

    /// `α` written in dual basis names, e.g. `X*^Y* - Z*^T*`.
    pub fn format_form(&self, alpha: &KForm) -> String {
        if alpha.degree() == 0 {
            return alpha
                .terms()
                .values()
                .next()
                .map(ToString::to_string)
                .unwrap_or_else(|| "0".into());
        }
        let parts: Vec<(String, &Scalar)> = alpha
            .terms()
            .iter()
            .map(|(idx, c)| {
                let names: Vec<String> = idx.iter().map(|&i| format!("{}*", self.names[i])).collect();
                (names.join("^"), c)
            })
            .collect();
        join_terms(parts)
    }

    /// Structure-constant equality, ignoring basis names.
    pub fn same_structure(&self, other: &LieAlgebra) -> bool {
        self.dim() == other.dim() && self.brackets == other.brackets
    }
}

fn join_terms(parts: Vec<(String, &Scalar)>) -> String {
    if parts.is_empty() {
        return "0".into();
    }
    let mut out = String::new();
    for (n, (name, c)) in parts.into_iter().enumerate() {
        let neg = c.is_negative();
        let abs = c.abs();
        if n == 0 {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        if !abs.is_one() {
            out.push_str(&format!("{abs}*"));
        }
        out.push_str(&name);
    }
    out
}

/// Incremental bracket-table construction by name.
#[derive(Clone, Debug)]
pub struct LieAlgebraBuilder {
    names: Vec<String>,
    n: usize,
    table: BTreeMap<(usize, usize), Vector>,
}

impl LieAlgebraBuilder {
    /// Adds `[a, b] = Σ c·e_k` for the listed `(name_k, c)`; `a > b` is
    /// stored with the sign flipped. Panics on unknown names (builder use is
    /// for fixed tables).
    pub fn bracket(mut self, a: &str, b: &str, terms: &[(&str, Scalar)]) -> Self {
        let idx = |s: &str| {
            self.names
                .iter()
                .position(|n| n == s)
                .unwrap_or_else(|| panic!("unknown basis name `{s}`"))
        };
        let (i, j) = (idx(a), idx(b));
        assert_ne!(i, j, "bracket of a basis vector with itself");
        let mut v = Vector::zeros(self.n);
        for (name, c) in terms {
            let k = idx(name);
            v.0[k] = &v.0[k] + c;
        }
        let (key, v) = if i < j { ((i, j), v) } else { ((j, i), -&v) };
        let entry = self.table.entry(key).or_insert_with(|| Vector::zeros(self.n));
        *entry = &*entry + &v;
        self
    }

    pub fn build(self) -> Result<LieAlgebra> {
        LieAlgebra::new(self.names, self.table)
    }

    pub fn build_unchecked(self) -> Result<LieAlgebra> {
        LieAlgebra::new_unchecked(self.names, self.table)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::int;

    fn heisenberg() -> LieAlgebra {
        LieAlgebra::builder(["X", "Y", "Z"])
            .bracket("X", "Y", &[("Z", int(-1))])
            .build()
            .unwrap()
    }

    fn sl2r() -> LieAlgebra {
        LieAlgebra::builder(["X", "Y", "Z"])
            .bracket("X", "Y", &[("Z", int(-1))])
            .bracket("Z", "X", &[("Y", int(1))])
            .bracket("Z", "Y", &[("X", int(-1))])
            .build()
            .unwrap()
    }

    fn su2() -> LieAlgebra {
        LieAlgebra::builder(["e1", "e2", "e3"])
            .bracket("e1", "e2", &[("e3", int(1))])
            .bracket("e2", "e3", &[("e1", int(1))])
            .bracket("e3", "e1", &[("e2", int(1))])
            .build()
            .unwrap()
    }

    fn v(xs: &[i64]) -> Vector {
        Vector::from_ints(xs)
    }

    #[test]
    fn brackets_of_catalog_tables() {
        let h = heisenberg();
        assert_eq!(h.bracket(&v(&[1, 0, 0]), &v(&[0, 1, 0])).unwrap(), v(&[0, 0, -1]));
        let s = sl2r();
        assert_eq!(s.bracket(&v(&[0, 0, 1]), &v(&[1, 0, 0])).unwrap(), v(&[0, 1, 0]));
        let x = v(&[3, -1, 2]);
        assert!(s.bracket(&x, &x).unwrap().is_zero());
        assert!(matches!(
            s.bracket(&v(&[1, 0]), &x),
            Err(Error::DimensionMismatch { expected: 3, found: 2 })
        ));
    }

    #[test]
    fn jacobi_defect_detects_bad_table() {
        assert!(heisenberg().jacobi_defect().is_empty());
        assert!(sl2r().jacobi_defect().is_empty());
        // [e1,e2]=e3, [e1,e3]=e1: cyclic sum on (e1,e2,e3) is
        // [e1,[e2,e3]] + [e2,[e3,e1]] + [e3,[e1,e2]] = 0 + [e2,-e1] + [e3,e3] = e3.
        let bad = LieAlgebra::builder(["e1", "e2", "e3"])
            .bracket("e1", "e2", &[("e3", int(1))])
            .bracket("e1", "e3", &[("e1", int(1))])
            .build_unchecked()
            .unwrap();
        let d = bad.jacobi_defect();
        assert_eq!(d.len(), 1);
        assert_eq!(d[0].defect, v(&[0, 0, 1]));
        assert!(matches!(
            LieAlgebra::new(bad.names().to_vec(), bad.bracket_table().clone()),
            Err(Error::JacobiViolation { i: 0, j: 1, k: 2 })
        ));
    }

    #[test]
    fn construction_rejects_malformed_tables() {
        let names = vec!["a".to_string(), "a".to_string()];
        assert!(matches!(
            LieAlgebra::new(names, BTreeMap::new()),
            Err(Error::DuplicateBasisName(_))
        ));
        let names = vec!["a".to_string(), "b".to_string()];
        let mut t = BTreeMap::new();
        t.insert((1, 0), v(&[1, 0]));
        assert!(matches!(
            LieAlgebra::new(names.clone(), t),
            Err(Error::NonIncreasingPair { i: 1, j: 0 })
        ));
        let mut t = BTreeMap::new();
        t.insert((0, 2), v(&[1, 0]));
        assert!(matches!(
            LieAlgebra::new(names, t),
            Err(Error::IndexOutOfRange { index: 2, dim: 2 })
        ));
    }

    #[test]
    fn unimodularity() {
        assert!(heisenberg().is_unimodular());
        assert!(sl2r().is_unimodular());
        // [e1, e2] = e2: tr ad e1 = 1.
        let aff = LieAlgebra::builder(["e1", "e2"])
            .bracket("e1", "e2", &[("e2", int(1))])
            .build()
            .unwrap();
        assert!(!aff.is_unimodular());
        assert_eq!(aff.modular_form(), vec![int(1), int(0)]);
    }

    #[test]
    fn centers() {
        let z = heisenberg().center();
        assert_eq!(z, Subspace::span(3, &[v(&[0, 0, 1])]));
        assert!(sl2r().center().is_zero());
        let r_sl2 = LieAlgebra::abelian_named(vec!["T".into()]).direct_sum(&sl2r());
        assert_eq!(r_sl2.center(), Subspace::span(4, &[v(&[1, 0, 0, 0])]));
    }

    #[test]
    fn series_terminate_as_expected() {
        let h = heisenberg();
        let lc = h.series(SeriesKind::LowerCentral);
        assert_eq!(lc.len(), 3);
        assert_eq!(lc[1], Subspace::span(3, &[v(&[0, 0, 1])]));
        assert!(lc[2].is_zero());
        assert!(h.is_nilpotent() && h.is_solvable());

        let d = sl2r().series(SeriesKind::Derived);
        assert_eq!(d.len(), 2);
        assert_eq!(d[1], Subspace::full(3));
        assert!(!sl2r().is_solvable());

        for kind in [SeriesKind::Derived, SeriesKind::LowerCentral] {
            let s = LieAlgebra::abelian(3).series(kind);
            assert_eq!(s.len(), 2);
            assert!(s[1].is_zero());
        }
    }

    #[test]
    fn killing_forms() {
        assert_eq!(su2().killing_form(), Matrix::identity(3).scale(&int(-2)));
        assert_eq!(
            sl2r().killing_form(),
            Matrix::from_ints(&[&[2, 0, 0], &[0, 2, 0], &[0, 0, -2]])
        );
        assert!(LieAlgebra::abelian(4).killing_form().is_zero());
        assert!(su2().is_semisimple());
        assert!(!heisenberg().is_semisimple());
        let r_su2 = LieAlgebra::abelian_named(vec!["T".into()]).direct_sum(&su2());
        assert!(!r_su2.is_semisimple());
    }

    #[test]
    fn direct_sums() {
        let r = LieAlgebra::abelian(1);
        let g = r.direct_sum(&heisenberg());
        assert_eq!(g.dim(), 4);
        assert_eq!(g.center().dim(), 2);
        let a = LieAlgebra::abelian(1).direct_sum(&LieAlgebra::abelian(1));
        assert!(a.same_structure(&LieAlgebra::abelian(2)));
        assert_eq!(a.names(), &["e1".to_string(), "e1'".to_string()]);
    }

    #[test]
    fn largest_ideal_and_subalgebras() {
        let s = sl2r();
        let z = Subspace::span(3, &[v(&[0, 0, 1])]);
        assert!(s.is_subalgebra(&z));
        assert!(s.largest_ideal_in(&z).is_zero());
        let h = heisenberg();
        let zc = h.center();
        assert_eq!(h.largest_ideal_in(&zc), zc);
        let xz = Subspace::span(3, &[v(&[1, 0, 0]), v(&[0, 0, 1])]);
        assert_eq!(h.largest_ideal_in(&xz), xz);
        let x = Subspace::span(3, &[v(&[1, 0, 0])]);
        assert!(h.largest_ideal_in(&x).is_zero());
        let sub = h.subalgebra(&xz, vec!["X".into(), "Z".into()]).unwrap();
        assert!(sub.same_structure(&LieAlgebra::abelian(2)));
        let xy = Subspace::span(3, &[v(&[1, 0, 0]), v(&[0, 1, 0])]);
        assert!(matches!(
            h.subalgebra(&xy, vec!["X".into(), "Y".into()]),
            Err(Error::NotSubalgebra)
        ));
    }

    #[test]
    fn permutation_preserves_structure() {
        let s = sl2r();
        let p = s.permuted(&[2, 0, 1]).unwrap();
        assert_eq!(p.names()[0], "Z");
        // [Z, X] = Y becomes [e0, e1] = e2.
        assert_eq!(p.bracket_basis(0, 1), v(&[0, 0, 1]));
        assert!(p.jacobi_defect().is_empty());
        let back = p.permuted(&[1, 2, 0]).unwrap();
        assert_eq!(back, s);
    }
}
