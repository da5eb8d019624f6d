//! Modification of Hermitian Lie algebras by commuting skew derivations.

use std::collections::BTreeMap;

use num::Zero;

use crate::error::{Error, Result};
use crate::lie::LieAlgebra;
use crate::linalg::{Matrix, Subspace, Vector};
use crate::report::{StructureReport, Witness};
use crate::scalar::Scalar;
use crate::structures::HermitianData;

/// A linear map `φ: g → k` into the span of a list of derivations,
/// `φ(e_i) = Σ_a coeffs[i][a] σ_a`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModificationMap {
    derivations: Vec<Matrix>,
    coeffs: Vec<Vec<Scalar>>,
}

impl ModificationMap {
    pub fn new(derivations: Vec<Matrix>, coeffs: Vec<Vec<Scalar>>) -> Result<Self> {
        let n = coeffs.len();
        for s in &derivations {
            if s.nrows() != n || s.ncols() != n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    found: s.nrows(),
                });
            }
        }
        for row in &coeffs {
            if row.len() != derivations.len() {
                return Err(Error::DimensionMismatch {
                    expected: derivations.len(),
                    found: row.len(),
                });
            }
        }
        Ok(ModificationMap {
            derivations,
            coeffs,
        })
    }

    /// The zero map on an `n`-dimensional algebra.
    pub fn zero(n: usize) -> Self {
        ModificationMap {
            derivations: Vec::new(),
            coeffs: vec![Vec::new(); n],
        }
    }

    /// `φ(X) = λ(X) σ`.
    pub fn single(sigma: Matrix, form: &[Scalar]) -> Result<Self> {
        Self::new(vec![sigma], form.iter().map(|c| vec![c.clone()]).collect())
    }

    pub fn dim(&self) -> usize {
        self.coeffs.len()
    }

    pub fn derivations(&self) -> &[Matrix] {
        &self.derivations
    }

    pub fn coeffs(&self) -> &[Vec<Scalar>] {
        &self.coeffs
    }

    /// `φ(v)` as an endomorphism.
    pub fn phi(&self, v: &Vector) -> Matrix {
        let n = self.dim();
        let mut out = Matrix::zeros(n, n);
        for (a, s) in self.derivations.iter().enumerate() {
            let c: Scalar = v
                .support()
                .map(|(i, x)| x * &self.coeffs[i][a])
                .fold(Scalar::zero(), |acc, t| acc + t);
            if !c.is_zero() {
                out = &out + &s.scale(&c);
            }
        }
        out
    }

    pub fn negated(&self) -> Self {
        ModificationMap {
            derivations: self.derivations.clone(),
            coeffs: self
                .coeffs
                .iter()
                .map(|r| r.iter().map(|c| -c).collect())
                .collect(),
        }
    }

    /// Pointwise sum. Both maps must use the same derivation list.
    pub fn sum(&self, other: &Self) -> Result<Self> {
        if self.derivations != other.derivations || self.dim() != other.dim() {
            return Err(Error::MismatchedDerivations);
        }
        Ok(ModificationMap {
            derivations: self.derivations.clone(),
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a.iter().zip(b).map(|(x, y)| x + y).collect())
                .collect(),
        })
    }
}

fn witness(indices: Vec<usize>, detail: String) -> Option<Witness> {
    Some(Witness { indices, detail })
}

/// First basis pair where `σ[e_i, e_j] ≠ [σe_i, e_j] + [e_i, σe_j]`.
pub(crate) fn derivation_failure(g: &LieAlgebra, s: &Matrix) -> Option<(usize, usize)> {
    let n = g.dim();
    for i in 0..n {
        let ei = Vector::basis(n, i);
        for j in i + 1..n {
            let ej = Vector::basis(n, j);
            let lhs = s.apply(&g.bracket_basis(i, j));
            let rhs = &g.bracket(&s.apply(&ei), &ej).expect("dims")
                + &g.bracket(&ei, &s.apply(&ej)).expect("dims");
            if lhs != rhs {
                return Some((i, j));
            }
        }
    }
    None
}

/// Conditions on a modification map: each derivation is a derivation,
/// `g`-skew and commutes with `J`; the derivations commute; `φ` kills
/// `[g, g]` and every `σ(X)`.
pub fn validate_modification(h: &HermitianData, m: &ModificationMap) -> StructureReport {
    let g = h.algebra();
    let n = g.dim();
    let names = g.names();
    let mut r = StructureReport::new("modification");
    if m.dim() != n {
        r.push(
            "shape",
            "map is defined on the algebra",
            witness(vec![], format!("map has dimension {}, algebra {n}", m.dim())),
        );
        return r;
    }
    let sig = m.derivations();

    let w = sig.iter().enumerate().find_map(|(a, s)| {
        derivation_failure(g, s).map(|(i, j)| (a, i, j))
    });
    r.push(
        "derivation",
        "σ[X,Y] = [σX,Y] + [X,σY]",
        w.and_then(|(a, i, j)| {
            witness(
                vec![i, j],
                format!("derivation {a} fails on ({}, {})", names[i], names[j]),
            )
        }),
    );

    let metric = h.metric();
    let w = sig.iter().enumerate().find_map(|(a, s)| {
        let d = &(&s.transpose() * metric) + &(metric * s);
        first_nonzero(&d).map(|(i, j, v)| (a, i, j, v))
    });
    r.push(
        "skew",
        "g(σX, Y) + g(X, σY) = 0",
        w.and_then(|(a, i, j, v)| {
            witness(
                vec![i, j],
                format!(
                    "derivation {a}: g(σ{0},{1}) + g({0},σ{1}) = {v}",
                    names[i], names[j]
                ),
            )
        }),
    );

    let jm = h.complex_structure();
    let w = sig.iter().enumerate().find_map(|(a, s)| {
        first_nonzero(&(&(jm * s) - &(s * jm))).map(|(i, j, v)| (a, i, j, v))
    });
    r.push(
        "j_commute",
        "Jσ = σJ",
        w.and_then(|(a, i, j, v)| {
            witness(
                vec![i, j],
                format!("derivation {a}: (Jσ − σJ)[{i}][{j}] = {v}"),
            )
        }),
    );

    let mut w = None;
    'c: for a in 0..sig.len() {
        for b in a + 1..sig.len() {
            if !sig[a].commutator(&sig[b]).is_zero() {
                w = witness(vec![], format!("derivations {a} and {b} do not commute"));
                break 'c;
            }
        }
    }
    r.push("commuting", "the derivations commute pairwise", w);

    let w = g
        .bracket_table()
        .iter()
        .find(|(_, v)| !m.phi(v).is_zero())
        .and_then(|(&(i, j), _)| {
            witness(
                vec![i, j],
                format!("φ([{}, {}]) ≠ 0", names[i], names[j]),
            )
        });
    r.push("kills_derived", "φ([g, g]) = 0", w);

    let mut w = None;
    'k: for (a, s) in sig.iter().enumerate() {
        for i in 0..n {
            if !m.phi(&s.column(i)).is_zero() {
                w = witness(vec![i], format!("φ(σ_{a} {}) ≠ 0", names[i]));
                break 'k;
            }
        }
    }
    r.push("kills_images", "φ(σ(X)) = 0", w);
    r
}

fn first_nonzero(m: &Matrix) -> Option<(usize, usize, Scalar)> {
    for i in 0..m.nrows() {
        for j in 0..m.ncols() {
            if !m.get(i, j).is_zero() {
                return Some((i, j, m.get(i, j).clone()));
            }
        }
    }
    None
}

/// `[X, Y]⁻ = [X, Y] + φ(X)Y − φ(Y)X`, without validation.
pub fn modified_algebra(g: &LieAlgebra, m: &ModificationMap) -> Result<LieAlgebra> {
    let n = g.dim();
    if m.dim() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: m.dim(),
        });
    }
    let phis: Vec<Matrix> = (0..n).map(|i| m.phi(&Vector::basis(n, i))).collect();
    let mut table = BTreeMap::new();
    for i in 0..n {
        for j in i + 1..n {
            let v = &(&g.bracket_basis(i, j) + &phis[i].column(j)) - &phis[j].column(i);
            table.insert((i, j), v);
        }
    }
    LieAlgebra::new(g.names().to_vec(), table)
}

/// Validates `m` and returns the modified algebra with the same metric
/// and complex structure.
pub fn modify(h: &HermitianData, m: &ModificationMap) -> Result<HermitianData> {
    let report = validate_modification(h, m);
    if !report.pass {
        return Err(Error::InvalidModification(report.failing().join(", ")));
    }
    let g = modified_algebra(h.algebra(), m)?;
    HermitianData::new(g, h.metric().clone(), h.complex_structure().clone())
}

/// Basis of the space of derivations that are skew for the metric and
/// commute with `J`.
pub fn compatible_derivations(h: &HermitianData) -> Vec<Matrix> {
    let g = h.algebra();
    let n = g.dim();
    let nn = n * n;
    let var = |p: usize, q: usize| p * n + q;
    let mut rows: Vec<Vec<Scalar>> = Vec::new();
    let c = |i: usize, j: usize| g.bracket_basis(i, j);
    for i in 0..n {
        for j in i + 1..n {
            let cij = c(i, j);
            for k in 0..n {
                let mut row = vec![Scalar::zero(); nn];
                for (mm, x) in cij.support() {
                    row[var(k, mm)] += x;
                }
                for p in 0..n {
                    row[var(p, i)] -= &c(p, j).0[k];
                    row[var(p, j)] -= &c(i, p).0[k];
                }
                rows.push(row);
            }
        }
    }
    let gm = h.metric();
    let jm = h.complex_structure();
    for a in 0..n {
        for b in 0..n {
            let mut skew = vec![Scalar::zero(); nn];
            let mut comm = vec![Scalar::zero(); nn];
            for p in 0..n {
                skew[var(p, a)] += gm.get(p, b);
                skew[var(p, b)] += gm.get(a, p);
                comm[var(p, b)] += jm.get(a, p);
                comm[var(a, p)] -= jm.get(p, b);
            }
            rows.push(skew);
            rows.push(comm);
        }
    }
    Subspace::kernel_of_forms(nn, &rows)
        .basis()
        .iter()
        .map(|v| Matrix::from_row_major(n, n, v.0.clone()))
        .collect()
}

/// Linear forms vanishing on `[g, g]` and on the images of `derivations`;
/// exactly the admissible coefficient forms of a map `X ↦ λ(X) σ`.
pub fn admissible_forms(g: &LieAlgebra, derivations: &[Matrix]) -> Subspace {
    let n = g.dim();
    let mut s = g.derived_algebra();
    for d in derivations {
        s = s.sum(&Subspace::full(n).image(d));
    }
    let vecs: Vec<Vec<Scalar>> = s.basis().iter().map(|v| v.0.clone()).collect();
    Subspace::kernel_of_forms(n, &vecs)
}

/// Result of a pair modification `(g ⋊ k, h ⋊ k)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModifiedPair {
    pub algebra: LieAlgebra,
    pub isotropy: Subspace,
    /// `J` extended by zero on the new directions.
    pub j: Matrix,
}

/// `g′ = g ⋊ k`, `h′ = h ⋊ k` for commuting derivations satisfying
/// `σ(h) ⊂ h` and `Jσ = σJ (mod h)`. New basis vectors are appended with
/// the given names.
pub fn modify_pair(
    g: &LieAlgebra,
    h: &Subspace,
    j: &Matrix,
    derivations: &[Matrix],
    names: &[String],
) -> Result<ModifiedPair> {
    let n = g.dim();
    let k = derivations.len();
    if names.len() != k {
        return Err(Error::DimensionMismatch {
            expected: k,
            found: names.len(),
        });
    }
    for (a, s) in derivations.iter().enumerate() {
        if s.nrows() != n || s.ncols() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: s.nrows(),
            });
        }
        if let Some((i, jj)) = derivation_failure(g, s) {
            return Err(Error::PairCondition(format!(
                "σ_{a} is not a derivation on ({i}, {jj})"
            )));
        }
        if !h.contains_subspace(&h.image(s)) {
            return Err(Error::PairCondition(format!("σ_{a}(h) ⊄ h")));
        }
        let c = &(j * s) - &(s * j);
        if (0..n).any(|col| !h.contains(&c.column(col))) {
            return Err(Error::PairCondition(format!("Jσ_{a} ≠ σ_{a}J mod h")));
        }
        for (b, t) in derivations.iter().enumerate().skip(a + 1) {
            if !s.commutator(t).is_zero() {
                return Err(Error::PairCondition(format!(
                    "σ_{a} and σ_{b} do not commute"
                )));
            }
        }
    }
    let m = n + k;
    let mut table = BTreeMap::new();
    for (&(p, q), v) in g.bracket_table() {
        table.insert((p, q), v.padded(k));
    }
    for (a, s) in derivations.iter().enumerate() {
        for i in 0..n {
            // [e_i, σ_a] = −σ_a e_i
            let v = -&s.column(i).padded(k);
            if !v.is_zero() {
                table.insert((i, n + a), v);
            }
        }
    }
    let mut all = g.names().to_vec();
    all.extend(names.iter().cloned());
    let algebra = LieAlgebra::new(all, table)?;
    let mut hv: Vec<Vector> = h.basis().iter().map(|v| v.padded(k)).collect();
    hv.extend((0..k).map(|a| Vector::basis(m, n + a)));
    let isotropy = Subspace::span(m, &hv);
    let mut jx = Matrix::zeros(m, m);
    for p in 0..n {
        for q in 0..n {
            jx.set(p, q, j.get(p, q).clone());
        }
    }
    Ok(ModifiedPair {
        algebra,
        isotropy,
        j: jx,
    })
}
