//! Hermitian, l.c.K., Vaisman, Sasaki and Kähler-algebra structures and
//! their axiom checks.
//!
//! The fundamental form of a Hermitian pair is `Ω(X, Y) = g(X, JY)`, so that
//! `g(U, V) = Ω(JU, V)`.

use num::{One, Zero};

use crate::error::{Error, Result};
use crate::exterior::{ce_d, increasing_tuples, lee_candidate, KForm};
use crate::lie::LieAlgebra;
use crate::linalg::{Matrix, Subspace, Vector};
use crate::report::{StructureReport, Witness};
use crate::scalar::Scalar;

/// Sylvester test. Errors on a non-symmetric matrix.
pub fn is_positive_definite(m: &Matrix) -> Result<bool> {
    m.is_positive_definite().ok_or(Error::NonSymmetric)
}

fn check_square(m: &Matrix, n: usize) -> Result<()> {
    if m.nrows() != n || m.ncols() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: if m.nrows() != n { m.nrows() } else { m.ncols() },
        });
    }
    Ok(())
}

fn witness(indices: Vec<usize>, detail: impl Into<String>) -> Option<Witness> {
    Some(Witness {
        indices,
        detail: detail.into(),
    })
}

/// First leading principal minor that is not positive, for the witness of
/// a failed definiteness test.
fn definiteness_witness(m: &Matrix) -> Option<Witness> {
    if !m.is_symmetric() {
        return witness(vec![], "matrix is not symmetric");
    }
    let minors = m.leading_principal_minors();
    minors
        .iter()
        .position(|d| d <= &Scalar::zero())
        .map(|k| Witness {
            indices: (0..=k).collect(),
            detail: format!("leading principal minor of order {} is {}", k + 1, minors[k]),
        })
}

/// `X ↦ g([v, X], ·) + g(X, [v, ·])`, the obstruction to `ad v` being
/// skew for `g`.
pub fn killing_matrix(g: &LieAlgebra, metric: &Matrix, v: &Vector) -> Matrix {
    let ad = g.ad(v);
    &(&ad.transpose() * metric) + &(metric * &ad)
}

/// Nonzero entries `(i, j, value)`, `i ≤ j`, of a symmetric matrix.
fn upper_support(m: &Matrix) -> Vec<(usize, usize, Scalar)> {
    let mut out = Vec::new();
    for i in 0..m.nrows() {
        for j in i..m.ncols() {
            if !m.get(i, j).is_zero() {
                out.push((i, j, m.get(i, j).clone()));
            }
        }
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NijenhuisDefect {
    pub i: usize,
    pub j: usize,
    pub defect: Vector,
}

/// Basis pairs `i < j` where
/// `N(e_i, e_j) = [Je_i, Je_j] − [e_i, e_j] − J[Je_i, e_j] − J[e_i, Je_j]`
/// is nonzero (modulo `h` when given).
pub fn nijenhuis_defect(
    g: &LieAlgebra,
    j: &Matrix,
    h: Option<&Subspace>,
) -> Result<Vec<NijenhuisDefect>> {
    let n = g.dim();
    check_square(j, n)?;
    let zero = Subspace::zero(n);
    let h = h.unwrap_or(&zero);
    if h.ambient_dim() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: h.ambient_dim(),
        });
    }
    if !h.contains_subspace(&h.image(j)) {
        return Err(Error::IsotropyNotPreserved);
    }
    let mut out = Vec::new();
    for a in 0..n {
        let ea = Vector::basis(n, a);
        let ja = j.apply(&ea);
        for b in a + 1..n {
            let eb = Vector::basis(n, b);
            let jb = j.apply(&eb);
            let mut v = g.bracket(&ja, &jb)?;
            v = &v - &g.bracket(&ea, &eb)?;
            v = &v - &j.apply(&g.bracket(&ja, &eb)?);
            v = &v - &j.apply(&g.bracket(&ea, &jb)?);
            let v = h.reduce(&v);
            if !v.is_zero() {
                out.push(NijenhuisDefect {
                    i: a,
                    j: b,
                    defect: v,
                });
            }
        }
    }
    Ok(out)
}

/// A metric and an almost complex structure on a Lie algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HermitianData {
    algebra: LieAlgebra,
    metric: Matrix,
    j: Matrix,
}

impl HermitianData {
    /// Checks shapes and symmetry of the metric only; the remaining
    /// axioms are reported by [`HermitianData::check`].
    pub fn new(algebra: LieAlgebra, metric: Matrix, j: Matrix) -> Result<Self> {
        let n = algebra.dim();
        check_square(&metric, n)?;
        check_square(&j, n)?;
        if !metric.is_symmetric() {
            return Err(Error::NonSymmetric);
        }
        Ok(HermitianData { algebra, metric, j })
    }

    /// The metric `g(U, V) = Ω(JU, V)` determined by a 2-form and `J`.
    pub fn from_fundamental_form(algebra: LieAlgebra, omega: &KForm, j: Matrix) -> Result<Self> {
        let n = algebra.dim();
        check_square(&j, n)?;
        if omega.dim() != n || omega.degree() != 2 {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: omega.dim(),
            });
        }
        let metric = &j.transpose() * &omega.as_matrix();
        Self::new(algebra, metric, j)
    }

    pub fn algebra(&self) -> &LieAlgebra {
        &self.algebra
    }

    pub fn metric(&self) -> &Matrix {
        &self.metric
    }

    pub fn complex_structure(&self) -> &Matrix {
        &self.j
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    /// Indices `i` with `J² e_i ≠ −e_i`.
    fn j_square_failures(&self) -> Vec<usize> {
        let sq = &self.j * &self.j;
        let n = self.dim();
        (0..n)
            .filter(|&i| sq.column(i) != Vector::basis(n, i).scale(&-Scalar::one()))
            .collect()
    }

    /// Pairs with `g(Je_i, Je_j) ≠ g(e_i, e_j)`.
    fn compatibility_failures(&self) -> Vec<(usize, usize, Scalar)> {
        let d = &(&(&self.j.transpose() * &self.metric) * &self.j) - &self.metric;
        upper_support(&d)
    }

    /// `Ω(X, Y) = g(X, JY)`. Errors unless `J² = −I` and `J` is
    /// `g`-orthogonal.
    pub fn fundamental_form(&self) -> Result<KForm> {
        if let Some(&i) = self.j_square_failures().first() {
            return Err(Error::Incompatible(format!(
                "J² e_{i} ≠ −e_{i} ({})",
                self.algebra.names()[i]
            )));
        }
        if let Some((i, j, _)) = self.compatibility_failures().first() {
            return Err(Error::Incompatible(format!(
                "g(Je_{i}, Je_{j}) ≠ g(e_{i}, e_{j})"
            )));
        }
        Ok(self.raw_fundamental_form())
    }

    fn raw_fundamental_form(&self) -> KForm {
        KForm::from_bilinear(&(&self.metric * &self.j))
    }

    /// Metric, complex-structure and integrability axioms.
    pub fn check(&self) -> StructureReport {
        let names = self.algebra.names();
        let mut r = StructureReport::new("hermitian");
        r.push(
            "metric_positive_definite",
            "g is positive definite (leading principal minors > 0)",
            definiteness_witness(&self.metric),
        );
        r.push(
            "j_squared",
            "J² = −I",
            self.j_square_failures().first().and_then(|&i| {
                witness(
                    vec![i],
                    format!(
                        "J²({}) = {}",
                        names[i],
                        self.algebra
                            .format_vector(&(&self.j * &self.j).column(i))
                    ),
                )
            }),
        );
        r.push(
            "j_compatible",
            "g(JX, JY) = g(X, Y)",
            self.compatibility_failures().first().and_then(|(i, j, d)| {
                witness(
                    vec![*i, *j],
                    format!(
                        "g(J{a}, J{b}) − g({a}, {b}) = {d}",
                        a = names[*i],
                        b = names[*j]
                    ),
                )
            }),
        );
        r.push(
            "j_integrable",
            "Nijenhuis tensor of J vanishes",
            nijenhuis_witness(&self.algebra, &self.j, None),
        );
        r
    }
}

fn nijenhuis_witness(g: &LieAlgebra, j: &Matrix, h: Option<&Subspace>) -> Option<Witness> {
    match nijenhuis_defect(g, j, h) {
        Err(e) => witness(vec![], e.to_string()),
        Ok(d) => d.first().and_then(|d| {
            witness(
                vec![d.i, d.j],
                format!(
                    "N({}, {}) = {}",
                    g.names()[d.i],
                    g.names()[d.j],
                    g.format_vector(&d.defect)
                ),
            )
        }),
    }
}

/// Metric dual of a 1-form: the unique `ξ` with `g(ξ, ·) = θ`, together
/// with `g(ξ, ξ)`.
pub fn lee_field(h: &HermitianData, theta: &KForm) -> Result<(Vector, Scalar)> {
    if theta.degree() != 1 || theta.dim() != h.dim() {
        return Err(Error::DimensionMismatch {
            expected: h.dim(),
            found: theta.dim(),
        });
    }
    if h.metric.determinant().is_zero() {
        return Err(Error::DegenerateMetric);
    }
    let xi = h
        .metric
        .solve(&Vector(theta.as_linear()))
        .ok_or(Error::DegenerateMetric)?;
    let norm = h.metric.bilinear(&xi, &xi);
    Ok((xi, norm))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KillingDefect {
    pub i: usize,
    pub j: usize,
    /// `g([ξ, e_i], e_j) + g(e_i, [ξ, e_j])`
    pub value: Scalar,
}

/// Outcome of the l.c.K. and Vaisman checks.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LcKReport {
    pub positive_definite: bool,
    pub j_squared: bool,
    pub j_compatible: bool,
    pub j_integrable: bool,
    /// A 1-form `θ` with `dΩ = Ω ∧ θ` exists.
    pub lck_identity: bool,
    pub theta_closed: bool,
    pub omega: KForm,
    pub theta: Option<KForm>,
    pub xi: Option<Vector>,
    pub xi_norm: Option<Scalar>,
    /// Nonzero entries of the Killing defect of `ξ`, `i ≤ j`.
    pub killing_defects: Vec<KillingDefect>,
    pub vaisman: bool,
    /// Why no `θ` was produced, when it was not.
    pub lee_failure: Option<String>,
    hermitian: StructureReport,
    names: Vec<String>,
}

/// Computes `Ω`, solves for the Lee form, and tests the Killing condition
/// on the Lee field. Never fails: every outcome is a report entry.
pub fn check_lck(h: &HermitianData) -> LcKReport {
    let g = &h.algebra;
    let hermitian = h.check();
    let pass = |id: &str| hermitian.axiom(id).is_some_and(|a| a.pass);
    let omega = h.raw_fundamental_form();
    let (mut theta, mut lee_failure) = (None, None);
    match lee_candidate(g, &omega) {
        Ok(t) => theta = Some(t),
        Err(e) => lee_failure = Some(e.to_string()),
    }
    let lck_identity = theta.is_some();
    let theta_closed = theta
        .as_ref()
        .is_some_and(|t| ce_d(g, t).is_ok_and(|d| d.is_zero()));
    let (mut xi, mut xi_norm, mut killing_defects) = (None, None, Vec::new());
    if let Some(t) = &theta {
        match lee_field(h, t) {
            Ok((v, nrm)) => {
                killing_defects = upper_support(&killing_matrix(g, &h.metric, &v))
                    .into_iter()
                    .map(|(i, j, value)| KillingDefect { i, j, value })
                    .collect();
                xi = Some(v);
                xi_norm = Some(nrm);
            }
            Err(e) => lee_failure = Some(e.to_string()),
        }
    }
    let vaisman = lck_identity && theta_closed && xi.is_some() && killing_defects.is_empty();
    LcKReport {
        positive_definite: pass("metric_positive_definite"),
        j_squared: pass("j_squared"),
        j_compatible: pass("j_compatible"),
        j_integrable: pass("j_integrable"),
        lck_identity,
        theta_closed,
        omega,
        theta,
        xi,
        xi_norm,
        killing_defects,
        vaisman,
        lee_failure,
        hermitian,
        names: g.names().to_vec(),
    }
}

impl LcKReport {
    fn names_algebra(&self) -> LieAlgebra {
        LieAlgebra::abelian_named(self.names.clone())
    }

    /// Hermitian axioms plus `dΩ = Ω ∧ θ` and `dθ = 0`.
    pub fn lck_report(&self) -> StructureReport {
        let a = self.names_algebra();
        let mut r = self.hermitian.clone();
        r.structure = "lck".into();
        r.push(
            "lck_identity",
            "dΩ = Ω ∧ θ has a solution θ",
            if self.lck_identity {
                None
            } else {
                witness(
                    vec![],
                    self.lee_failure.clone().unwrap_or_else(|| "no solution".into()),
                )
            },
        );
        r.push(
            "theta_closed",
            "dθ = 0",
            if self.theta_closed {
                None
            } else {
                witness(
                    vec![],
                    match &self.theta {
                        Some(t) => format!("θ = {} is not closed", a.format_form(t)),
                        None => "no θ to test".into(),
                    },
                )
            },
        );
        r.property("omega", a.format_form(&self.omega));
        if let Some(t) = &self.theta {
            r.property("theta", a.format_form(t));
        }
        if let Some(x) = &self.xi {
            r.property("lee_field", a.format_vector(x));
        }
        if let Some(n) = &self.xi_norm {
            r.property("lee_field_norm", n);
        }
        r
    }

    /// [`LcKReport::lck_report`] plus the Killing condition on `ξ`.
    pub fn vaisman_report(&self) -> StructureReport {
        let mut r = self.lck_report();
        r.structure = "vaisman".into();
        let w = if self.xi.is_none() {
            witness(vec![], "no Lee field")
        } else if self.killing_defects.is_empty() {
            None
        } else {
            let parts: Vec<String> = self
                .killing_defects
                .iter()
                .map(|d| {
                    let (a, b) = (&self.names[d.i], &self.names[d.j]);
                    format!("g([ξ,{a}],{b}) + g({a},[ξ,{b}]) = {}", d.value)
                })
                .collect();
            let first = &self.killing_defects[0];
            witness(vec![first.i, first.j], parts.join("; "))
        };
        r.push(
            "lee_field_killing",
            "g([ξ,X],Y) + g(X,[ξ,Y]) = 0 for all basis pairs",
            w,
        );
        r
    }
}

/// Contact metric data `{φ, η, J̃, g}` on an odd-dimensional algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SasakiData {
    algebra: LieAlgebra,
    phi: KForm,
    eta: Vector,
    jtilde: Matrix,
    metric: Matrix,
}

impl SasakiData {
    pub fn new(
        algebra: LieAlgebra,
        phi: KForm,
        eta: Vector,
        jtilde: Matrix,
        metric: Matrix,
    ) -> Result<Self> {
        let n = algebra.dim();
        if n % 2 == 0 {
            return Err(Error::EvenDimension(n));
        }
        if phi.dim() != n || phi.degree() != 1 {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: phi.dim(),
            });
        }
        if eta.len() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: eta.len(),
            });
        }
        check_square(&jtilde, n)?;
        check_square(&metric, n)?;
        if !metric.is_symmetric() {
            return Err(Error::NonSymmetric);
        }
        Ok(SasakiData {
            algebra,
            phi,
            eta,
            jtilde,
            metric,
        })
    }

    pub fn algebra(&self) -> &LieAlgebra {
        &self.algebra
    }

    pub fn phi(&self) -> &KForm {
        &self.phi
    }

    pub fn eta(&self) -> &Vector {
        &self.eta
    }

    pub fn jtilde(&self) -> &Matrix {
        &self.jtilde
    }

    pub fn metric(&self) -> &Matrix {
        &self.metric
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    pub fn with_eta(&self, eta: Vector) -> Result<Self> {
        Self::new(
            self.algebra.clone(),
            self.phi.clone(),
            eta,
            self.jtilde.clone(),
            self.metric.clone(),
        )
    }

    pub fn with_metric(&self, metric: Matrix) -> Result<Self> {
        Self::new(
            self.algebra.clone(),
            self.phi.clone(),
            self.eta.clone(),
            self.jtilde.clone(),
            metric,
        )
    }

    /// The metric forced by the metric law, `φ(X)φ(Y) + dφ(X, J̃Y)`.
    pub fn metric_from_law(algebra: &LieAlgebra, phi: &KForm, jtilde: &Matrix) -> Result<Matrix> {
        let dphi = ce_d(algebra, phi)?.as_matrix();
        let p = phi.as_linear();
        let pp = Matrix::outer(&Vector(p.clone()), &p);
        Ok(&pp + &(&dphi * jtilde))
    }
}

/// The five Sasaki verdicts: contact, Reeb, tensor law, metric law (with
/// positivity), and Killing Reeb field with CR integrability.
pub fn check_sasaki(s: &SasakiData) -> StructureReport {
    let g = &s.algebra;
    let n = g.dim();
    let names = g.names();
    let mut r = StructureReport::new("sasaki");
    let dphi = match ce_d(g, &s.phi) {
        Ok(d) => d,
        Err(e) => {
            r.push("contact", "φ ∧ (dφ)^k ≠ 0", witness(vec![], e.to_string()));
            return r;
        }
    };
    let k = (n - 1) / 2;

    let top = s.phi.wedge(&dphi.power(k));
    r.push(
        "contact",
        "φ ∧ (dφ)^k is a nonzero top form",
        if top.is_zero() {
            witness((0..n).collect(), "φ ∧ (dφ)^k = 0")
        } else {
            None
        },
    );

    let phi_eta = s.phi.eval(std::slice::from_ref(&s.eta));
    let i_eta_dphi = dphi.interior(&s.eta).expect("degree 2");
    let reeb = if !phi_eta.is_one() {
        witness(vec![], format!("i(η)φ = {phi_eta}"))
    } else if !i_eta_dphi.is_zero() {
        witness(vec![], format!("i(η)dφ = {}", g.format_form(&i_eta_dphi)))
    } else {
        None
    };
    r.push("reeb", "i(η)φ = 1 and i(η)dφ = 0", reeb);

    // the law is tested against the Reeb field of φ, so that a bad η is
    // reported by "reeb" alone
    let zeta = reeb_field(&s.phi, &dphi).unwrap_or_else(|| s.eta.clone());
    let target = &Matrix::outer(&zeta, &s.phi.as_linear()) - &Matrix::identity(n);
    let diff = &(&s.jtilde * &s.jtilde) - &target;
    let tensor = (0..n).find(|&i| !diff.column(i).is_zero()).and_then(|i| {
        witness(
            vec![i],
            format!(
                "(J̃² + I − φ⊗η)({}) = {}",
                names[i],
                g.format_vector(&diff.column(i))
            ),
        )
    });
    r.push("tensor", "J̃² = −I + φ ⊗ ζ for the Reeb field ζ of φ", tensor);

    let law = SasakiData::metric_from_law(g, &s.phi, &s.jtilde).expect("dimensions checked");
    let metric_w = upper_support(&(&s.metric - &law))
        .first()
        .map(|(i, j, d)| Witness {
            indices: vec![*i, *j],
            detail: format!(
                "g({a},{b}) − φ({a})φ({b}) − dφ({a}, J̃{b}) = {d}",
                a = names[*i],
                b = names[*j]
            ),
        })
        .or_else(|| definiteness_witness(&s.metric));
    r.push(
        "metric",
        "g(X,Y) = φ(X)φ(Y) + dφ(X, J̃Y) and g is positive definite",
        metric_w,
    );

    let killing = upper_support(&killing_matrix(g, &s.metric, &s.eta))
        .first()
        .map(|(i, j, d)| Witness {
            indices: vec![*i, *j],
            detail: format!(
                "g([η,{a}],{b}) + g({a},[η,{b}]) = {d}",
                a = names[*i],
                b = names[*j]
            ),
        });
    let cr = killing.or_else(|| cr_witness(s));
    r.push(
        "killing_cr",
        "η is Killing and J̃ restricted to ker φ is integrable (brackets projected along η)",
        cr,
    );
    r
}

/// The vector `ζ` with `φ(ζ) = 1` and `i(ζ)dφ = 0`, when it is unique.
pub fn reeb_field(phi: &KForm, dphi: &KForm) -> Option<Vector> {
    let n = phi.dim();
    let m = dphi.as_matrix();
    let rows: Vec<Vec<Scalar>> = (0..n).map(|j| m.column(j).0).collect();
    let ker = Subspace::kernel_of_forms(n, &rows);
    if ker.dim() != 1 {
        return None;
    }
    let v = &ker.basis()[0];
    let c = phi.eval(std::slice::from_ref(v));
    if c.is_zero() {
        return None;
    }
    Some(v.scale(&(Scalar::one() / c)))
}

/// CR integrability on `ker φ`, projecting along `η`.
fn cr_witness(s: &SasakiData) -> Option<Witness> {
    let g = &s.algebra;
    let n = g.dim();
    let phi = s.phi.as_linear();
    let phi_eta = Vector(phi.clone()).dot(&s.eta);
    if phi_eta.is_zero() {
        return witness(vec![], "φ(η) = 0, projection along η undefined");
    }
    let proj = |v: &Vector| {
        let c = Vector(phi.clone()).dot(v) / &phi_eta;
        v.axpy(&-c, &s.eta)
    };
    let jp = |v: &Vector| proj(&s.jtilde.apply(v));
    let dist = Subspace::kernel_of_forms(n, std::slice::from_ref(&phi));
    let b = dist.basis();
    for a in 0..b.len() {
        for c in a + 1..b.len() {
            let (x, y) = (&b[a], &b[c]);
            let (jx, jy) = (jp(x), jp(y));
            let mut v = proj(&g.br(&jx, &jy));
            v = &v - &proj(&g.br(x, y));
            v = &v - &jp(&proj(&g.br(&jx, y)));
            v = &v - &jp(&proj(&g.br(x, &jy)));
            if !v.is_zero() {
                return witness(
                    vec![],
                    format!(
                        "N({}, {}) = {} on ker φ",
                        g.format_vector(x),
                        g.format_vector(y),
                        g.format_vector(&v)
                    ),
                );
            }
        }
    }
    None
}

/// Tuple `(g, h, J, ω)` of a Kähler algebra candidate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KahlerAlgebraData {
    algebra: LieAlgebra,
    h: Subspace,
    j: Matrix,
    omega: KForm,
}

impl KahlerAlgebraData {
    /// Checks shapes and that `h` is a subalgebra.
    pub fn new(algebra: LieAlgebra, h: Subspace, j: Matrix, omega: KForm) -> Result<Self> {
        let n = algebra.dim();
        check_square(&j, n)?;
        if h.ambient_dim() != n || omega.dim() != n || omega.degree() != 2 {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: if h.ambient_dim() != n {
                    h.ambient_dim()
                } else {
                    omega.dim()
                },
            });
        }
        if !algebra.is_subalgebra(&h) {
            return Err(Error::NotSubalgebra);
        }
        Ok(KahlerAlgebraData {
            algebra,
            h,
            j,
            omega,
        })
    }

    pub fn algebra(&self) -> &LieAlgebra {
        &self.algebra
    }

    pub fn isotropy(&self) -> &Subspace {
        &self.h
    }

    pub fn complex_structure(&self) -> &Matrix {
        &self.j
    }

    pub fn omega(&self) -> &KForm {
        &self.omega
    }

    fn check_isotropy(&self) -> Result<()> {
        if self.h.contains_subspace(&self.h.image(&self.j)) {
            Ok(())
        } else {
            Err(Error::IsotropyNotPreserved)
        }
    }

    /// Trace of the map induced by `m` on `g/h`, computed on the
    /// complement spanned by the non-pivot basis vectors.
    fn quotient_trace(&self, m: &Matrix) -> Scalar {
        let n = self.algebra.dim();
        self.h
            .complement_indices()
            .into_iter()
            .map(|c| self.h.reduce(&m.apply(&Vector::basis(n, c))).0[c].clone())
            .fold(Scalar::zero(), |a, b| a + b)
    }

    /// 1-form `ρ` with `dρ = ω`, if one exists.
    pub fn j_algebra_potential(&self) -> Option<KForm> {
        let g = &self.algebra;
        let n = g.dim();
        let ds: Vec<KForm> = (0..n)
            .map(|i| ce_d(g, &KForm::dual(n, i)).expect("dimensions match"))
            .collect();
        let pairs = increasing_tuples(n, 2);
        let rows = pairs
            .iter()
            .map(|p| ds.iter().map(|d| d.coeff(p)).collect())
            .collect();
        let rhs = Vector(pairs.iter().map(|p| self.omega.coeff(p)).collect());
        Matrix::from_rows(rows)
            .solve(&rhs)
            .map(|rho| KForm::from_linear(rho.coords()))
    }
}

/// `κ(X) = Tr_{g/h}(ad JX − J ad X)`.
pub fn koszul_form(k: &KahlerAlgebraData) -> Result<KForm> {
    k.check_isotropy()?;
    let g = &k.algebra;
    let n = g.dim();
    let vals: Vec<Scalar> = (0..n)
        .map(|i| {
            let e = Vector::basis(n, i);
            let m = &g.ad(&k.j.apply(&e)) - &(&k.j * &g.ad(&e));
            k.quotient_trace(&m)
        })
        .collect();
    Ok(KForm::from_linear(&vals))
}

/// `𝔯(X, Y) = −κ([X, Y])`.
pub fn ricci_form(k: &KahlerAlgebraData) -> Result<KForm> {
    let kappa = Vector(koszul_form(k)?.as_linear());
    let g = &k.algebra;
    let n = g.dim();
    let terms = increasing_tuples(n, 2)
        .into_iter()
        .map(|p| (p.clone(), -kappa.dot(&g.bracket_basis(p[0], p[1]))));
    KForm::from_terms(n, 2, terms)
}

/// Axioms (i)–(vi) of a Kähler algebra, with effectivity and the J-algebra
/// potential as informational properties.
pub fn check_kahler_algebra(k: &KahlerAlgebraData) -> StructureReport {
    let g = &k.algebra;
    let n = g.dim();
    let names = g.names();
    let h = &k.h;
    let j = &k.j;
    let om = k.omega.as_matrix();
    let mut r = StructureReport::new("kahler");

    // (i)
    let i_w = if !h.contains_subspace(&h.image(j)) {
        witness(vec![], "J h ⊄ h")
    } else {
        let sq = j * j;
        (0..n)
            .find(|&i| !h.contains(&(&sq.column(i) + &Vector::basis(n, i))))
            .and_then(|i| {
                witness(
                    vec![i],
                    format!("J²{0} + {0} ∉ h", names[i]),
                )
            })
    };
    r.push("i", "J h ⊂ h and J² = −I (mod h)", i_w);

    // (ii)
    let mut ii_w = None;
    'outer: for x in h.basis() {
        let ad = g.ad(x);
        let c = &(&ad * j) - &(j * &ad);
        for col in 0..n {
            if !h.contains(&c.column(col)) {
                ii_w = witness(
                    vec![col],
                    format!(
                        "(ad_X J − J ad_X)({}) ∉ h for X = {}",
                        names[col],
                        g.format_vector(x)
                    ),
                );
                break 'outer;
            }
        }
    }
    r.push("ii", "ad_X J = J ad_X (mod h) for X ∈ h", ii_w);

    // (iii)
    r.push(
        "iii",
        "[JX,JY] = [X,Y] + J[JX,Y] + J[X,JY] (mod h)",
        nijenhuis_witness(g, j, Some(h)),
    );

    // (iv)
    let mut iv_w = None;
    for x in h.basis() {
        let row = om.transpose().apply(x);
        let first = row.support().next().map(|(c, v)| (c, v.clone()));
        if let Some((c, v)) = first {
            iv_w = witness(
                vec![c],
                format!("ω({}, {}) = {v}", g.format_vector(x), names[c]),
            );
            break;
        }
    }
    if iv_w.is_none() {
        let d = &(&j.transpose() * &(&om * j)) - &om;
        iv_w = upper_support(&d).first().and_then(|(a, b, v)| {
            witness(
                vec![*a, *b],
                format!("ω(J{0}, J{1}) − ω({0}, {1}) = {v}", names[*a], names[*b]),
            )
        });
    }
    r.push("iv", "ω(h, g) = 0 and ω(JX, JY) = ω(X, Y)", iv_w);

    // (v)
    let mut v_w = None;
    'cyc: for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                let e = |i| Vector::basis(n, i);
                let s = om.bilinear(&g.bracket_basis(a, b), &e(c))
                    + om.bilinear(&g.bracket_basis(b, c), &e(a))
                    + om.bilinear(&g.bracket_basis(c, a), &e(b));
                if !s.is_zero() {
                    v_w = witness(
                        vec![a, b, c],
                        format!(
                            "cyclic sum on ({}, {}, {}) = {s}",
                            names[a], names[b], names[c]
                        ),
                    );
                    break 'cyc;
                }
            }
        }
    }
    r.push("v", "ω([X,Y],Z) + ω([Y,Z],X) + ω([Z,X],Y) = 0", v_w);

    // (vi): ω(JX, X) ≠ 0 off h ⟺ X ↦ ω(JX, X) is definite on a complement.
    let comp = h.complement_indices();
    let s = &j.transpose() * &om;
    let sym = Matrix::from_rows(
        comp.iter()
            .map(|&a| {
                comp.iter()
                    .map(|&b| (s.get(a, b) + s.get(b, a)) / Scalar::from_integer(2.into()))
                    .collect()
            })
            .collect(),
    );
    let definite = comp.is_empty()
        || sym.is_positive_definite() == Some(true)
        || sym.scale(&-Scalar::one()).is_positive_definite() == Some(true);
    let vi_w = if definite {
        None
    } else {
        let (p, m, z) = sym.inertia().unwrap_or((0, 0, 0));
        witness(
            comp.clone(),
            format!("ω(JX, X) on a complement of h has inertia (+{p}, −{m}, 0×{z})"),
        )
    };
    r.push("vi", "ω(JX, X) ≠ 0 for X ∉ h", vi_w);

    let ideal = g.largest_ideal_in(h);
    r.property("effective", ideal.is_zero());
    match k.j_algebra_potential() {
        Some(rho) => {
            r.property("j_algebra", true);
            r.property("rho", g.format_form(&rho));
        }
        None => r.property("j_algebra", false),
    }
    if let Ok(kappa) = koszul_form(k) {
        r.property("koszul_form", g.format_form(&kappa));
    }
    if let Ok(ric) = ricci_form(k) {
        r.property("ricci_form", g.format_form(&ric));
    }
    r
}

/// Jacobi identity, with structural facts as properties.
pub fn lie_report(g: &LieAlgebra) -> StructureReport {
    let mut r = StructureReport::new("lie");
    let w = g.jacobi_defect().first().and_then(|d| {
        witness(
            vec![d.i, d.j, d.k],
            format!(
                "Jacobi sum on ({}, {}, {}) = {}",
                g.names()[d.i],
                g.names()[d.j],
                g.names()[d.k],
                g.format_vector(&d.defect)
            ),
        )
    });
    let valid = w.is_none();
    r.push("jacobi", "Jacobi identity on all basis triples", w);
    r.property("dim", g.dim());
    if valid {
        r.property("unimodular", g.is_unimodular());
        r.property("nilpotent", g.is_nilpotent());
        r.property("solvable", g.is_solvable());
        r.property("semisimple", g.is_semisimple());
        r.property("center_dim", g.center().dim());
        r.property("derived_dim", g.derived_algebra().dim());
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::int;

    fn heisenberg_r() -> LieAlgebra {
        LieAlgebra::builder(["X", "Y", "Z", "W"])
            .bracket("X", "Y", &[("Z", int(-1))])
            .build()
            .unwrap()
    }

    fn kodaira_j() -> Matrix {
        // JX = −Y, JY = X, JZ = −W, JW = Z
        Matrix::from_ints(&[
            &[0, 1, 0, 0],
            &[-1, 0, 0, 0],
            &[0, 0, 0, 1],
            &[0, 0, -1, 0],
        ])
    }

    #[test]
    fn kodaira_primary_is_vaisman() {
        let h = HermitianData::new(heisenberg_r(), Matrix::identity(4), kodaira_j()).unwrap();
        let omega = h.fundamental_form().unwrap();
        let expect = KForm::from_terms(4, 2, [(vec![0, 1], int(1)), (vec![2, 3], int(1))]).unwrap();
        assert_eq!(omega, expect);
        let rep = check_lck(&h);
        assert!(rep.vaisman, "{}", rep.vaisman_report());
        assert_eq!(rep.theta, Some(KForm::dual(4, 3)));
        assert_eq!(rep.xi, Some(Vector::basis(4, 3)));
        assert!(rep.vaisman_report().pass);
        let back = HermitianData::from_fundamental_form(heisenberg_r(), &omega, kodaira_j()).unwrap();
        assert_eq!(back, h);
    }

    #[test]
    fn positive_definiteness_rejects_non_symmetric() {
        assert_eq!(
            is_positive_definite(&Matrix::from_ints(&[&[1, 1], &[0, 1]])),
            Err(Error::NonSymmetric)
        );
        assert_eq!(is_positive_definite(&Matrix::identity(3)), Ok(true));
    }

    #[test]
    fn lee_field_of_euclidean_metric() {
        let h = HermitianData::new(LieAlgebra::abelian(2), Matrix::identity(2), Matrix::from_ints(&[&[0, 1], &[-1, 0]])).unwrap();
        let (xi, n) = lee_field(&h, &KForm::dual(2, 0)).unwrap();
        assert_eq!(xi, Vector::basis(2, 0));
        assert_eq!(n, int(1));
        let degenerate = HermitianData::new(LieAlgebra::abelian(2), Matrix::zeros(2, 2), Matrix::identity(2)).unwrap();
        assert_eq!(lee_field(&degenerate, &KForm::dual(2, 0)), Err(Error::DegenerateMetric));
    }

    #[test]
    fn abelian_hermitian_form() {
        let j = Matrix::from_ints(&[&[0, 1], &[-1, 0]]);
        let h = HermitianData::new(LieAlgebra::abelian(2), Matrix::identity(2), j.clone()).unwrap();
        assert_eq!(h.fundamental_form().unwrap(), KForm::from_terms(2, 2, [(vec![0, 1], int(1))]).unwrap());
        assert!(nijenhuis_defect(&LieAlgebra::abelian(2), &j, None).unwrap().is_empty());
        let bad = HermitianData::new(LieAlgebra::abelian(2), Matrix::identity(2), Matrix::identity(2)).unwrap();
        assert!(matches!(bad.fundamental_form(), Err(Error::Incompatible(_))));
        assert!(!bad.check().pass);
    }

    fn heis_sasaki() -> SasakiData {
        let g = LieAlgebra::builder(["X", "Y", "Z"])
            .bracket("X", "Y", &[("Z", int(-1))])
            .build()
            .unwrap();
        // J̃X = Y, J̃Y = −X
        let jt = Matrix::from_ints(&[&[0, -1, 0], &[1, 0, 0], &[0, 0, 0]]);
        SasakiData::new(g, KForm::dual(3, 2), Vector::basis(3, 2), jt, Matrix::identity(3)).unwrap()
    }

    #[test]
    fn heisenberg_sasaki_and_perturbations() {
        let s = heis_sasaki();
        let r = check_sasaki(&s);
        assert!(r.pass, "{r}");
        assert_eq!(
            s.phi().eval(std::slice::from_ref(s.eta())),
            int(1)
        );
        let scaled = s.with_eta(Vector::from_ints(&[0, 0, 2])).unwrap();
        let r = check_sasaki(&scaled);
        assert_eq!(r.failing(), vec!["reeb"]);
        let mut m = Matrix::identity(3);
        m.set(2, 2, int(2));
        let r = check_sasaki(&s.with_metric(m).unwrap());
        assert_eq!(r.failing(), vec!["metric"]);
        assert!(matches!(
            SasakiData::new(LieAlgebra::abelian(2), KForm::dual(2, 0), Vector::basis(2, 0), Matrix::identity(2), Matrix::identity(2)),
            Err(Error::EvenDimension(2))
        ));
    }

    fn sl2r() -> LieAlgebra {
        LieAlgebra::builder(["X", "Y", "Z"])
            .bracket("X", "Y", &[("Z", int(-1))])
            .bracket("Z", "X", &[("Y", int(1))])
            .bracket("Z", "Y", &[("X", int(-1))])
            .build()
            .unwrap()
    }

    #[test]
    fn sl2r_kahler_pair() {
        let g = sl2r();
        let h = Subspace::span(3, &[Vector::basis(3, 2)]);
        // J = −J̃: JX = −Y, JY = X, JZ = 0
        let j = Matrix::from_ints(&[&[0, 1, 0], &[-1, 0, 0], &[0, 0, 0]]);
        let omega = ce_d(&g, &KForm::dual(3, 2)).unwrap();
        let k = KahlerAlgebraData::new(g.clone(), h, j, omega.clone()).unwrap();
        let r = check_kahler_algebra(&k);
        assert!(r.pass, "{r}");
        assert_eq!(r.properties["effective"], "true");
        assert_eq!(r.properties["j_algebra"], "true");
        // hand expansion: ad JX − J ad X etc. traced on span{X, Y}
        let kappa = koszul_form(&k).unwrap();
        assert_eq!(kappa, KForm::dual(3, 2).scale(&int(-2)));
        let ric = ricci_form(&k).unwrap();
        assert_eq!(ric, omega.scale(&int(-2)));
        assert!(!ric.restrict(&[Vector::basis(3, 0), Vector::basis(3, 1)]).is_zero());
        let rho = k.j_algebra_potential().unwrap();
        assert_eq!(ce_d(&g, &rho).unwrap(), omega);
    }

    #[test]
    fn abelian_kahler_is_not_j_algebra() {
        let j = Matrix::from_ints(&[&[0, 1], &[-1, 0]]);
        let omega = KForm::from_terms(2, 2, [(vec![0, 1], int(1))]).unwrap();
        let k = KahlerAlgebraData::new(LieAlgebra::abelian(2), Subspace::zero(2), j, omega).unwrap();
        let r = check_kahler_algebra(&k);
        assert!(r.pass);
        assert_eq!(r.properties["j_algebra"], "false");
        assert!(koszul_form(&k).unwrap().is_zero());
        assert!(ricci_form(&k).unwrap().is_zero());
    }

    #[test]
    fn kahler_axiom_failures_carry_witnesses() {
        let j = Matrix::from_ints(&[&[0, 1], &[-1, 0]]);
        let k = KahlerAlgebraData::new(LieAlgebra::abelian(2), Subspace::zero(2), j, KForm::zero(2, 2)).unwrap();
        let r = check_kahler_algebra(&k);
        assert_eq!(r.failing(), vec!["vi"]);
        assert!(r.axiom("vi").unwrap().witness.is_some());
    }
}
