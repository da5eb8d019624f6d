//! Central extensions of Kähler algebras and the reverse quotient.

use std::collections::BTreeMap;

use num::One;

use crate::error::{Error, Result};
use crate::exterior::{ce_d, KForm};
use crate::lie::LieAlgebra;
use crate::linalg::{Matrix, Subspace, Vector};
use crate::scalar::Scalar;
use crate::structures::{check_sasaki, KahlerAlgebraData, SasakiData};

/// `g₁ = g₂ ⊕ ℝη` with `[X, Y]₁ = [X, Y]₂ − ω(X, Y)η`, together with the
/// base data and the contact form `ψ = η*`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CentralExtensionData {
    pub base: KahlerAlgebraData,
    pub total: LieAlgebra,
    pub eta: Vector,
    pub psi: KForm,
}

fn fresh_name(taken: &[String], wanted: &str) -> String {
    let mut name = wanted.to_string();
    while taken.contains(&name) {
        name.push('\'');
    }
    name
}

/// Central extension of a Kähler algebra by its form. `η` is appended as
/// the last basis vector, named `eta_name` (primed on collision).
pub fn quantize(k: &KahlerAlgebraData, eta_name: &str) -> Result<CentralExtensionData> {
    let g2 = k.algebra();
    let n = g2.dim();
    if !ce_d(g2, k.omega())?.is_zero() {
        return Err(Error::CocycleViolation);
    }
    let mut names = g2.names().to_vec();
    names.push(fresh_name(&names, eta_name));
    let mut table = BTreeMap::new();
    for i in 0..n {
        for j in i + 1..n {
            let mut v = g2.bracket_basis(i, j).padded(1);
            v.0[n] = -k.omega().coeff(&[i, j]);
            if !v.is_zero() {
                table.insert((i, j), v);
            }
        }
    }
    let total = LieAlgebra::new(names, table)?;
    Ok(CentralExtensionData {
        base: k.clone(),
        total,
        eta: Vector::basis(n + 1, n),
        psi: KForm::dual(n + 1, n),
    })
}

impl CentralExtensionData {
    /// Sasaki data on the total algebra: `φ = ψ`, `J̃ = −J` lifted by zero
    /// on `η`, and the metric forced by the metric law. Meaningful when the
    /// base has trivial isotropy.
    pub fn sasaki(&self) -> Result<SasakiData> {
        let n = self.base.algebra().dim();
        let j = self.base.complex_structure();
        let mut jt = Matrix::zeros(n + 1, n + 1);
        for p in 0..n {
            for q in 0..n {
                jt.set(p, q, -j.get(p, q).clone());
            }
        }
        let metric = SasakiData::metric_from_law(&self.total, &self.psi, &jt)?;
        SasakiData::new(
            self.total.clone(),
            self.psi.clone(),
            self.eta.clone(),
            jt,
            metric,
        )
    }
}

/// `(g₁ ⊕ g₁′)/span{(η, −η′)}` for a central `z = (η, −η′)`: the basis
/// drops index `drop`, and brackets are reduced along `z`.
fn quotient_by_central(g: &LieAlgebra, z: &Vector, drop: usize) -> Result<LieAlgebra> {
    if !g.center().contains(z) {
        return Err(Error::NotCentral);
    }
    let n = g.dim();
    let keep: Vec<usize> = (0..n).filter(|&i| i != drop).collect();
    let zd = z.0[drop].clone();
    let reduce = |v: &Vector| {
        let c = &v.0[drop] / &zd;
        let w = v.axpy(&-c, z);
        Vector(keep.iter().map(|&i| w.0[i].clone()).collect())
    };
    let mut table = BTreeMap::new();
    for (a, &i) in keep.iter().enumerate() {
        for (b, &j) in keep.iter().enumerate().skip(a + 1) {
            let v = reduce(&g.bracket_basis(i, j));
            if !v.is_zero() {
                table.insert((a, b), v);
            }
        }
    }
    let names = keep.iter().map(|&i| g.names()[i].clone()).collect();
    LieAlgebra::new(names, table)
}

/// Direct sum of Kähler algebras.
pub fn kahler_direct_sum(a: &KahlerAlgebraData, b: &KahlerAlgebraData) -> Result<KahlerAlgebraData> {
    let (n, m) = (a.algebra().dim(), b.algebra().dim());
    let algebra = a.algebra().direct_sum(b.algebra());
    let mut hv: Vec<Vector> = a.isotropy().basis().iter().map(|v| v.padded(m)).collect();
    hv.extend(b.isotropy().basis().iter().map(|v| {
        let mut w = Vector::zeros(n);
        w.0.extend(v.0.iter().cloned());
        w
    }));
    let h = Subspace::span(n + m, &hv);
    let j = a.complex_structure().block_diag(b.complex_structure());
    let omega = &a.omega().embed(n + m, 0) + &b.omega().embed(n + m, n);
    KahlerAlgebraData::new(algebra, h, j, omega)
}

/// The `Δ`-sum: `(g₁ × g₁′)/Δ` with `Δ = span{(η, −η′)}`. The kept basis
/// is all of `g₁` followed by `g₁′` without the pivot coordinate of `η′`,
/// so `η` is the class of `(η, 0)`.
pub fn delta_sum(a: &CentralExtensionData, b: &CentralExtensionData) -> Result<CentralExtensionData> {
    let (n1, n2) = (a.total.dim(), b.total.dim());
    let sum = a.total.direct_sum(&b.total);
    let mut z = a.eta.padded(n2);
    let drop = n1
        + b.eta
            .support()
            .next()
            .map(|(i, _)| i)
            .ok_or(Error::NotCentral)?;
    for (i, c) in b.eta.support() {
        z.0[n1 + i] = -c.clone();
    }
    let total = quotient_by_central(&sum, &z, drop)?;
    let keep: Vec<usize> = (0..n1 + n2).filter(|&i| i != drop).collect();
    let psi_full: Vec<Scalar> = a
        .psi
        .as_linear()
        .into_iter()
        .chain(b.psi.as_linear())
        .collect();
    let psi = KForm::from_linear(&keep.iter().map(|&i| psi_full[i].clone()).collect::<Vec<_>>());
    Ok(CentralExtensionData {
        base: kahler_direct_sum(&a.base, &b.base)?,
        total,
        eta: a.eta.padded(n2 - 1),
        psi,
    })
}

/// `(g₁/ℝη, 0, J, ω)` for a Sasaki algebra with central Reeb field. The
/// quotient basis is the basis of `g₁` without the pivot coordinate of
/// `η`; `J = −J̃` and `ω = dφ`, both computed on lifts into `ker φ`.
pub fn kahler_quotient(s: &SasakiData) -> Result<KahlerAlgebraData> {
    let report = check_sasaki(s);
    if !report.pass {
        return Err(Error::SasakiInvalid(report.failing().join(", ")));
    }
    let g = s.algebra();
    let eta = s.eta();
    if !g.center().contains(eta) {
        return Err(Error::NotCentral);
    }
    let n = g.dim();
    let line = Subspace::span(n, std::slice::from_ref(eta));
    let keep = line.complement_indices();
    let m = keep.len();
    let phi = s.phi();
    let phi_eta = phi.eval(std::slice::from_ref(eta));
    let lift = |v: &Vector| {
        let c = phi.eval(std::slice::from_ref(v)) / &phi_eta;
        v.axpy(&-c, eta)
    };
    let coords = |v: &Vector| Vector(keep.iter().map(|&i| line.reduce(v).0[i].clone()).collect());
    let lifts: Vec<Vector> = keep.iter().map(|&i| lift(&Vector::basis(n, i))).collect();

    let mut table = BTreeMap::new();
    for a in 0..m {
        for b in a + 1..m {
            let v = coords(&g.bracket(&lifts[a], &lifts[b])?);
            if !v.is_zero() {
                table.insert((a, b), v);
            }
        }
    }
    let names = keep.iter().map(|&i| g.names()[i].clone()).collect();
    let g2 = LieAlgebra::new(names, table)?;
    let cols: Vec<Vector> = lifts
        .iter()
        .map(|v| coords(&s.jtilde().apply(v).scale(&-Scalar::one())))
        .collect();
    let j = Matrix::from_columns(m, &cols);
    let omega = ce_d(g, phi)?.restrict(&lifts);
    KahlerAlgebraData::new(g2, Subspace::zero(m), j, omega)
}

/// The pair-level Kähler algebra `(g₁, span{η}, −J̃, dφ)`, defined whether
/// or not `η` is central.
pub fn kahler_pair(s: &SasakiData) -> Result<KahlerAlgebraData> {
    let g = s.algebra();
    let h = Subspace::span(g.dim(), std::slice::from_ref(s.eta()));
    let j = s.jtilde().scale(&-Scalar::one());
    let omega = ce_d(g, s.phi())?;
    KahlerAlgebraData::new(g.clone(), h, j, omega)
}

/// `ℂ^k` with `J X_i = −Y_i`, `J Y_i = X_i` and `ω = Σ x_i ∧ y_i`, on the
/// basis `X_1, …, X_k, Y_1, …, Y_k` (`X, Y` when `k = 1`).
pub fn flat_kahler(k: usize) -> KahlerAlgebraData {
    let names: Vec<String> = if k == 1 {
        vec!["X".into(), "Y".into()]
    } else {
        (1..=k)
            .map(|i| format!("X{i}"))
            .chain((1..=k).map(|i| format!("Y{i}")))
            .collect()
    };
    let n = 2 * k;
    let mut j = Matrix::zeros(n, n);
    for i in 0..k {
        j.set(k + i, i, -Scalar::one());
        j.set(i, k + i, Scalar::one());
    }
    let omega = KForm::from_terms(n, 2, (0..k).map(|i| (vec![i, k + i], Scalar::one())))
        .expect("indices in range");
    KahlerAlgebraData::new(LieAlgebra::abelian_named(names), Subspace::zero(n), j, omega)
        .expect("abelian algebra")
}

/// `ℝη` over the zero algebra: the trivial extension.
pub fn trivial_extension(eta_name: &str) -> CentralExtensionData {
    let base = KahlerAlgebraData::new(
        LieAlgebra::abelian(0),
        Subspace::zero(0),
        Matrix::zeros(0, 0),
        KForm::zero(0, 2),
    )
    .expect("empty data");
    quantize(&base, eta_name).expect("zero form is closed")
}
