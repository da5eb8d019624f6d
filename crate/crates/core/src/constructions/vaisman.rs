//! Canonical Vaisman structures, centralization and the classifier for
//! unimodular Vaisman algebras.

use std::fmt;

use num::{One, Zero};
use serde::Serialize;

use crate::constructions::modification::{modify, modify_pair, ModificationMap};
use crate::error::{Error, Result};
use crate::exterior::{ce_d, KForm};
use crate::lie::LieAlgebra;
use crate::linalg::{Matrix, Subspace, Vector};
use crate::scalar::Scalar;
use crate::structures::{check_lck, check_sasaki, HermitianData, SasakiData};

fn fresh_name(taken: &[String], wanted: &str) -> String {
    let mut name = wanted.to_string();
    while taken.iter().any(|t| t == &name) {
        name.push('\'');
    }
    name
}

/// `ℝT ⊕ g₁` over a Sasaki algebra, with `T` central and first in the
/// basis, `Ω = −t ∧ φ + dφ` and
///
/// ```text
/// J T = b T + (1 + b²) η
/// J v = φ(v)(−T − b η) − J̃(v − φ(v) η)      (v ∈ g₁)
/// ```
///
/// The metric is `g(U, V) = Ω(JU, V)` and the Lee form is `t`.
pub fn canonical_vaisman(s: &SasakiData, b: &Scalar) -> Result<HermitianData> {
    let report = check_sasaki(s);
    if !report.pass {
        return Err(Error::SasakiInvalid(report.failing().join(", ")));
    }
    let g1 = s.algebra();
    let m = g1.dim();
    let n = m + 1;
    let t_name = fresh_name(g1.names(), "T");
    let mut names = vec![t_name];
    names.extend(g1.names().iter().cloned());
    let algebra = LieAlgebra::abelian_named(vec![names[0].clone()]).direct_sum(g1);
    let algebra = algebra.with_names(names)?;

    let phi = s.phi().as_linear();
    let eta = s.eta().clone();
    let lift = |v: &Vector| {
        let mut w = Vector::zeros(1);
        w.0.extend(v.0.iter().cloned());
        w
    };
    let t_vec = Vector::basis(n, 0);
    let eta_up = lift(&eta);
    let one = Scalar::one();

    let mut cols = Vec::with_capacity(n);
    cols.push(&t_vec.scale(b) + &eta_up.scale(&(&one + b * b)));
    for i in 0..m {
        let v = Vector::basis(m, i);
        let p = &phi[i];
        let horizontal = v.axpy(&-p.clone(), &eta);
        let jh = s.jtilde().apply(&horizontal);
        let vertical = &t_vec.scale(&-p.clone()) - &eta_up.scale(&(b * p));
        cols.push(&vertical - &lift(&jh));
    }
    let j = Matrix::from_columns(n, &cols);

    let t = KForm::dual(n, 0);
    let phi_up = s.phi().embed(n, 1);
    let omega = &ce_d(g1, s.phi())?.embed(n, 1) - &t.wedge(&phi_up);
    HermitianData::from_fundamental_form(algebra, &omega, j)
}

/// Output of the two-step centralization.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Centralized {
    /// The algebra after the `ad_ξ` modification, with the original metric
    /// and `J`.
    pub modified: HermitianData,
    /// Final algebra: `modified`, or `modified ⋊ ⟨ad_η⟩` when `η` was not
    /// central.
    pub algebra: LieAlgebra,
    /// Metric and `J` on `algebra`, extended by zero on the new direction.
    pub hermitian: HermitianData,
    /// `0`, or the span of the adjoined derivation.
    pub isotropy: Subspace,
    pub xi: Vector,
    pub eta: Vector,
    /// Human-readable record of the steps taken.
    pub steps: Vec<String>,
}

fn require_vaisman(h: &HermitianData) -> Result<(KForm, Vector)> {
    let lck = check_lck(h);
    let hermitian = lck.positive_definite && lck.j_squared && lck.j_compatible && lck.j_integrable;
    if !(lck.vaisman && hermitian) {
        let mut failing: Vec<String> = lck
            .vaisman_report()
            .failing()
            .into_iter()
            .map(String::from)
            .collect();
        if let Some(why) = &lck.lee_failure {
            failing.push(why.clone());
        }
        return Err(Error::NotVaisman(failing.join(", ")));
    }
    Ok((lck.theta.expect("vaisman"), lck.xi.expect("vaisman")))
}

/// Step one: `φ = −(θ/θ(ξ)) ⊗ ad_ξ`, which makes `ξ` central.
fn central_lee_field(h: &HermitianData, theta: &KForm, xi: &Vector) -> Result<Option<HermitianData>> {
    let g = h.algebra();
    if g.center().contains(xi) {
        return Ok(None);
    }
    let c = theta.eval(std::slice::from_ref(xi));
    let form: Vec<Scalar> = theta.as_linear().iter().map(|x| -x / &c).collect();
    let m = ModificationMap::single(g.ad(xi), &form)?;
    Ok(Some(modify(h, &m)?))
}

/// Makes `ξ` and `η = Jξ` central: first by the modification
/// `−(θ/θ(ξ)) ⊗ ad_ξ`, then, if needed, by the pair modification with
/// `ad_η`. Each step is skipped when the field is already central.
pub fn centralize(h: &HermitianData) -> Result<Centralized> {
    let (theta, xi) = require_vaisman(h)?;
    let eta = h.complex_structure().apply(&xi);
    let mut steps = Vec::new();
    let modified = match central_lee_field(h, &theta, &xi)? {
        Some(m) => {
            steps.push(format!(
                "modified by -(theta/theta(xi)) * ad_xi with xi = {}",
                h.algebra().format_vector(&xi)
            ));
            m
        }
        None => {
            steps.push("xi already central".to_string());
            h.clone()
        }
    };
    let g = modified.algebra();
    let n = g.dim();
    if g.center().contains(&eta) {
        steps.push("eta already central".to_string());
        return Ok(Centralized {
            algebra: g.clone(),
            hermitian: modified.clone(),
            isotropy: Subspace::zero(n),
            xi,
            eta,
            steps,
            modified,
        });
    }
    let name = fresh_name(g.names(), "ad_eta");
    let pair = modify_pair(
        g,
        &Subspace::zero(n),
        modified.complex_structure(),
        &[g.ad(&eta)],
        &[name],
    )?;
    steps.push(format!(
        "adjoined ad_eta with eta = {}; eta - ad_eta is central",
        g.format_vector(&eta)
    ));
    let mut metric = Matrix::zeros(n + 1, n + 1);
    for p in 0..n {
        for q in 0..n {
            metric.set(p, q, modified.metric().get(p, q).clone());
        }
    }
    let hermitian = HermitianData::new(pair.algebra.clone(), metric, pair.j.clone())?;
    Ok(Centralized {
        algebra: pair.algebra,
        hermitian,
        isotropy: pair.isotropy,
        xi: xi.padded(1),
        eta: eta.padded(1),
        steps,
        modified,
    })
}

/// The three types of unimodular Vaisman algebras.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum VaismanType {
    /// `ℝ × heisenberg(k)`, of dimension `2k + 2`.
    Heisenberg(usize),
    Su2,
    Sl2r,
}

impl fmt::Display for VaismanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            VaismanType::Heisenberg(k) => write!(f, "HEISENBERG({k})"),
            VaismanType::Su2 => write!(f, "SU2"),
            VaismanType::Sl2r => write!(f, "SL2R"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClassificationVerdict {
    pub kind: VaismanType,
    /// `dim Z(ker θ)` after making `ξ` central.
    pub center_dim: usize,
    /// Killing form inertia of `ker θ` as `(positive, negative, zero)`.
    pub killing_inertia: (usize, usize, usize),
    pub note: String,
}

impl fmt::Display for ClassificationVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (p, q, z) = self.killing_inertia;
        write!(
            f,
            "{} (center of ker theta: dim {}, Killing inertia {p} positive, {q} negative, {z} zero): {}",
            self.kind, self.center_dim, self.note
        )
    }
}

/// Decides which of the three types a unimodular Vaisman algebra is.
///
/// After making `ξ` central, `g₀ = ker θ` is an ideal with `g = ℝξ ⊕ g₀`.
/// A one-dimensional center of `g₀` means the Heisenberg type, confirmed
/// directly when `g₀` is 2-step nilpotent and otherwise through
/// `Z(g₀) = ℝη` with unimodular quotient `g₀/ℝη`. A trivial center means
/// `g₀` is three-dimensional simple and its Killing form picks `su(2)` or
/// `sl(2, ℝ)`.
pub fn classify_vaisman(h: &HermitianData) -> Result<ClassificationVerdict> {
    let (theta, xi) = require_vaisman(h)?;
    if !h.algebra().is_unimodular() {
        return Err(Error::NotUnimodular);
    }
    let modified = central_lee_field(h, &theta, &xi)?.unwrap_or_else(|| h.clone());
    let g = modified.algebra();
    let n = g.dim();
    let kernel = Subspace::kernel_of_forms(n, &[theta.as_linear()]);
    let names: Vec<String> = (0..kernel.dim()).map(|i| format!("e{}", i + 1)).collect();
    let g0 = g.subalgebra(&kernel, names)?;
    let center = g0.center();
    let killing = g0.killing_form();
    let inertia = killing.inertia().expect("Killing form is symmetric");
    let d0 = g0.dim();
    match center.dim() {
        1 => {
            let k = (d0 - 1) / 2;
            if d0 % 2 == 0 {
                return Err(Error::UnrecognizedShape(format!(
                    "ker theta has even dimension {d0}"
                )));
            }
            let derived = g0.derived_algebra();
            if !derived.is_zero() && center.contains_subspace(&derived) {
                return Ok(ClassificationVerdict {
                    kind: VaismanType::Heisenberg(k),
                    center_dim: 1,
                    killing_inertia: inertia,
                    note: "ker theta is 2-step nilpotent with 1-dimensional center".into(),
                });
            }
            let eta = h.complex_structure().apply(&xi);
            let eta0 = Vector(kernel.coordinates(&eta).ok_or_else(|| {
                Error::UnrecognizedShape("eta does not lie in ker theta".into())
            })?);
            if !center.contains(&eta0) {
                return Err(Error::UnrecognizedShape(
                    "center of ker theta is not spanned by eta".into(),
                ));
            }
            if !quotient_is_unimodular(&g0, &eta0) {
                return Err(Error::UnrecognizedShape(
                    "ker theta / eta is not unimodular".into(),
                ));
            }
            Ok(ClassificationVerdict {
                kind: VaismanType::Heisenberg(k),
                center_dim: 1,
                killing_inertia: inertia,
                note: "center of ker theta is spanned by eta with unimodular quotient; \
                       Heisenberg up to modification"
                    .into(),
            })
        }
        0 => {
            if d0 != 3 || !g0.is_semisimple() {
                return Err(Error::UnrecognizedShape(format!(
                    "ker theta has trivial center but is not 3-dimensional semisimple (dim {d0})"
                )));
            }
            let kind = match inertia {
                (0, 3, 0) => VaismanType::Su2,
                (p, q, 0) if p > 0 && q > 0 => VaismanType::Sl2r,
                _ => {
                    return Err(Error::UnrecognizedShape(format!(
                        "Killing form inertia {inertia:?}"
                    )))
                }
            };
            Ok(ClassificationVerdict {
                kind,
                center_dim: 0,
                killing_inertia: inertia,
                note: if kind == VaismanType::Su2 {
                    "Killing form of ker theta is negative definite".into()
                } else {
                    "Killing form of ker theta is indefinite".into()
                },
            })
        }
        d => Err(Error::UnrecognizedShape(format!(
            "center of ker theta has dimension {d}"
        ))),
    }
}

/// Whether `g/ℝz` is unimodular for central `z`: the trace of `ad` on the
/// quotient, computed on the non-pivot coordinates.
fn quotient_is_unimodular(g: &LieAlgebra, z: &Vector) -> bool {
    let n = g.dim();
    let line = Subspace::span(n, std::slice::from_ref(z));
    let keep = line.complement_indices();
    keep.iter().all(|&i| {
        let ad = g.ad_basis(i);
        keep.iter()
            .map(|&c| line.reduce(&ad.column(c)).0[c].clone())
            .fold(Scalar::zero(), |a, b| a + b)
            .is_zero()
    })
}

/// Hermitian data on a reordered basis: new basis vector `k` is the
/// `order[k]`-th old one.
pub fn permute_hermitian(h: &HermitianData, order: &[usize]) -> Result<HermitianData> {
    let n = h.dim();
    let g = h.algebra().permuted(order)?;
    let mut p = Matrix::zeros(n, n);
    for (new, &old) in order.iter().enumerate() {
        p.set(old, new, Scalar::one());
    }
    let pt = p.transpose();
    let metric = &(&pt * h.metric()) * &p;
    let j = &(&pt * h.complex_structure()) * &p;
    HermitianData::new(g, metric, j)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{frac, int};
    use crate::structures::{check_lck, lee_field};

    fn heisenberg_sasaki() -> SasakiData {
        let g = LieAlgebra::builder(["X", "Y", "Z"])
            .bracket("X", "Y", &[("Z", int(-1))])
            .build()
            .unwrap();
        let jt = Matrix::from_ints(&[&[0, -1, 0], &[1, 0, 0], &[0, 0, 0]]);
        SasakiData::new(g, KForm::dual(3, 2), Vector::basis(3, 2), jt, Matrix::identity(3)).unwrap()
    }

    fn su2_sasaki() -> SasakiData {
        let g = LieAlgebra::builder(["e1", "e2", "e3"])
            .bracket("e1", "e2", &[("e3", int(1))])
            .bracket("e2", "e3", &[("e1", int(1))])
            .bracket("e3", "e1", &[("e2", int(1))])
            .build()
            .unwrap();
        let jt = Matrix::from_ints(&[&[0, 1, 0], &[-1, 0, 0], &[0, 0, 0]]);
        SasakiData::new(g, KForm::dual(3, 2), Vector::basis(3, 2), jt, Matrix::identity(3)).unwrap()
    }

    #[test]
    fn heisenberg_b0_is_kodaira_primary() {
        let h = canonical_vaisman(&heisenberg_sasaki(), &int(0)).unwrap();
        // (T, X, Y, Z) → (X, Y, Z, T)
        let p = permute_hermitian(&h, &[1, 2, 3, 0]).unwrap();
        let om = p.fundamental_form().unwrap();
        let expect = KForm::from_terms(4, 2, [(vec![0, 1], int(1)), (vec![2, 3], int(1))]).unwrap();
        assert_eq!(om, expect);
        assert_eq!(p.metric(), &Matrix::identity(4));
        let lck = check_lck(&p);
        assert!(lck.vaisman);
        assert_eq!(lck.theta, Some(KForm::dual(4, 3)));
    }

    #[test]
    fn canonical_is_vaisman_for_all_b() {
        for b in [int(-1), int(0), frac(1, 2), int(3)] {
            for s in [heisenberg_sasaki(), su2_sasaki()] {
                let h = canonical_vaisman(&s, &b).unwrap();
                let lck = check_lck(&h);
                assert!(lck.vaisman, "b = {b}");
                assert_eq!(lck.theta, Some(KForm::dual(4, 0)));
                let (xi, norm) = lee_field(&h, &KForm::dual(4, 0)).unwrap();
                let expect = &Vector::basis(4, 0) + &Vector::basis(4, 3).scale(&b);
                assert_eq!(xi, expect);
                assert_eq!(norm, int(1));
            }
        }
    }

    #[test]
    fn classify_heisenberg_and_su2() {
        for b in [int(0), frac(1, 2), int(-1)] {
            let h = canonical_vaisman(&heisenberg_sasaki(), &b).unwrap();
            assert_eq!(classify_vaisman(&h).unwrap().kind, VaismanType::Heisenberg(1));
            let h = canonical_vaisman(&su2_sasaki(), &b).unwrap();
            let v = classify_vaisman(&h).unwrap();
            assert_eq!(v.kind, VaismanType::Su2);
            assert_eq!(v.killing_inertia, (0, 3, 0));
        }
    }

    #[test]
    fn centralize_su2_adjoins_ad_eta() {
        let h = canonical_vaisman(&su2_sasaki(), &int(0)).unwrap();
        let c = centralize(&h).unwrap();
        assert_eq!(c.algebra.dim(), 5);
        assert_eq!(c.algebra.center().dim(), 2);
        assert!(c.algebra.center().contains(&c.xi));
        assert_eq!(c.isotropy.dim(), 1);
        assert_eq!(c.steps.len(), 2);
    }

    #[test]
    fn centralize_heisenberg_is_identity() {
        let h = canonical_vaisman(&heisenberg_sasaki(), &int(0)).unwrap();
        let c = centralize(&h).unwrap();
        assert_eq!(&c.algebra, h.algebra());
        assert_eq!(c.hermitian, h);
        assert_eq!(c.algebra.center().dim(), 2);
    }

    #[test]
    fn non_vaisman_is_rejected() {
        let h = canonical_vaisman(&heisenberg_sasaki(), &int(0)).unwrap();
        let neg = HermitianData::new(
            h.algebra().clone(),
            h.metric().scale(&int(-1)),
            h.complex_structure().clone(),
        )
        .unwrap();
        assert!(matches!(classify_vaisman(&neg), Err(Error::NotVaisman(_))));
        assert!(matches!(centralize(&neg), Err(Error::NotVaisman(_))));
    }

    #[test]
    fn non_unimodular_is_rejected() {
        let g = LieAlgebra::builder(["A", "B", "C", "D"])
            .bracket("A", "B", &[("B", int(1))])
            .build()
            .unwrap();
        let j = Matrix::from_ints(&[&[0, -1, 0, 0], &[1, 0, 0, 0], &[0, 0, 0, -1], &[0, 0, 1, 0]]);
        let h = HermitianData::new(g, Matrix::identity(4), j).unwrap();
        assert_eq!(classify_vaisman(&h), Err(Error::NotUnimodular));
    }
}
