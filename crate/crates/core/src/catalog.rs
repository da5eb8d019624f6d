//! Built-in algebras and structures with their expected verdicts.

use std::collections::BTreeMap;

use num::{One, Signed, ToPrimitive, Zero};

use crate::constructions::{canonical_vaisman, flat_kahler, kahler_pair, kahler_quotient};
use crate::error::{Error, Result};
use crate::exterior::{ce_d, KForm};
use crate::lie::LieAlgebra;
use crate::linalg::{Matrix, Subspace, Vector};
use crate::scalar::{int, Scalar};
use crate::structures::{check_kahler_algebra, check_lck, check_sasaki, nijenhuis_defect};
use crate::structures::{HermitianData, KahlerAlgebraData, SasakiData};

/// Largest `k` accepted by the `heisenberg`-type entries.
pub const MAX_RANK: usize = 8;

/// Predicates an entry may carry an expected verdict for.
pub const PREDICATES: &[&str] = &[
    "lie",
    "unimodular",
    "nilpotent",
    "solvable",
    "semisimple",
    "center_dim_2",
    "hermitian",
    "positive_definite",
    "nijenhuis_defect_empty",
    "lck_identity",
    "theta_closed",
    "vaisman",
    "sasaki",
    "kahler",
    "effective",
    "j_algebra",
];

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CatalogEntry {
    pub name: String,
    pub params: BTreeMap<String, Scalar>,
    pub algebra: LieAlgebra,
    pub hermitian: Option<HermitianData>,
    pub sasaki: Option<SasakiData>,
    /// Kähler algebra attached to the entry; for Sasaki entries with a
    /// central Reeb field this lives on the quotient, otherwise on the
    /// algebra itself.
    pub kahler: Option<KahlerAlgebraData>,
    pub vectors: BTreeMap<String, Vector>,
    pub subspaces: BTreeMap<String, Subspace>,
    pub expected: BTreeMap<String, bool>,
}

struct EntryDef {
    name: &'static str,
    params: &'static [(&'static str, &'static str)],
    summary: &'static str,
}

const REGISTRY: &[EntryDef] = &[
    EntryDef { name: "abelian", params: &[("n", "2")], summary: "abelian algebra of dimension n >= 1" },
    EntryDef { name: "cn", params: &[("k", "1")], summary: "flat Kähler algebra C^k with omega = sum x_i^y_i" },
    EntryDef { name: "heisenberg", params: &[("k", "1")], summary: "Heisenberg algebra [X_i,Y_i] = -Z with standard Sasaki data" },
    EntryDef { name: "su2", params: &[], summary: "su(2), [e1,e2] = e3 cyclic, Sasaki data with phi = e3*" },
    EntryDef { name: "sl2r", params: &[], summary: "sl(2,R), [X,Y] = -Z, [Z,X] = Y, [Z,Y] = -X, Sasaki data with phi = z" },
    EntryDef { name: "r_times_heisenberg", params: &[("k", "1"), ("b", "0")], summary: "canonical Vaisman structure on R x heisenberg(k)" },
    EntryDef { name: "r_times_su2", params: &[("b", "0")], summary: "canonical Vaisman structure on R x su(2)" },
    EntryDef { name: "r_times_sl2r", params: &[("b", "0")], summary: "canonical Vaisman structure on R x sl(2,R)" },
    EntryDef { name: "kodaira_primary", params: &[], summary: "R x heisenberg(1) with Omega = x^y + z^w" },
    EntryDef { name: "kodaira_secondary", params: &[], summary: "modification of kodaira_primary by phi(W) = J on span{X, Y}" },
    EntryDef { name: "omega_psi", params: &[("a", "0"), ("b", "0"), ("c", "1")], summary: "R x sl(2,R) with Omega = psi^t + d psi, psi = ax + by + cz" },
    EntryDef { name: "gl2r_mod", params: &[], summary: "R x gl(2,R) on T, X, Y, Z, W with S = W - Z" },
];

/// Names, default parameters and one-line descriptions of all entries.
pub fn catalog_list() -> Vec<(String, Vec<(String, String)>, String)> {
    REGISTRY
        .iter()
        .map(|s| {
            (
                s.name.to_string(),
                s.params
                    .iter()
                    .map(|(k, v)| (k.to_string(), v.to_string()))
                    .collect(),
                s.summary.to_string(),
            )
        })
        .collect()
}

fn bad(name: &str, reason: impl Into<String>) -> Error {
    Error::InvalidParameter {
        name: name.into(),
        reason: reason.into(),
    }
}

/// Fills defaults and rejects parameters the entry does not take.
fn resolve(def: &EntryDef, given: &BTreeMap<String, Scalar>) -> Result<BTreeMap<String, Scalar>> {
    for k in given.keys() {
        if !def.params.iter().any(|(p, _)| p == k) {
            return Err(bad(k, format!("`{}` takes no such parameter", def.name)));
        }
    }
    def.params
        .iter()
        .map(|(p, default)| {
            let v = match given.get(*p) {
                Some(v) => v.clone(),
                None => crate::scalar::parse_scalar(default).expect("valid default"),
            };
            Ok((p.to_string(), v))
        })
        .collect()
}

fn count(params: &BTreeMap<String, Scalar>, key: &str, max: usize) -> Result<usize> {
    let v = &params[key];
    if !v.is_integer() || !v.is_positive() {
        return Err(bad(key, format!("must be a positive integer, got {v}")));
    }
    match v.to_integer().to_usize() {
        Some(k) if k <= max => Ok(k),
        _ => Err(bad(key, format!("must be at most {max}, got {v}"))),
    }
}

/// Looks up an entry by name with the given parameters (missing ones take
/// their defaults).
pub fn catalog_get(name: &str, params: &BTreeMap<String, Scalar>) -> Result<CatalogEntry> {
    let def = REGISTRY
        .iter()
        .find(|s| s.name == name)
        .ok_or_else(|| Error::UnknownCatalogEntry(name.to_string()))?;
    let p = resolve(def, params)?;
    let mut e = match name {
        "abelian" => abelian_entry(count(&p, "n", 64)?),
        "cn" => cn_entry(count(&p, "k", MAX_RANK)?),
        "heisenberg" => heisenberg_entry(count(&p, "k", MAX_RANK)?)?,
        "su2" => three_dim_entry(su2_sasaki())?,
        "sl2r" => three_dim_entry(sl2r_sasaki())?,
        "r_times_heisenberg" => {
            let k = count(&p, "k", MAX_RANK)?;
            canonical_entry(heisenberg_sasaki(k), &p["b"], true, true)?
        }
        "r_times_su2" => canonical_entry(su2_sasaki(), &p["b"], false, false)?,
        "r_times_sl2r" => canonical_entry(sl2r_sasaki(), &p["b"], false, false)?,
        "kodaira_primary" => kodaira_entry(false)?,
        "kodaira_secondary" => kodaira_entry(true)?,
        "omega_psi" => omega_psi_entry(&p["a"], &p["b"], &p["c"])?,
        "gl2r_mod" => gl2r_mod_entry(),
        _ => unreachable!("registry and dispatch agree"),
    };
    e.name = name.to_string();
    e.params = p;
    Ok(e)
}

/// `catalog_get` with all parameters at their defaults.
pub fn catalog_default(name: &str) -> Result<CatalogEntry> {
    catalog_get(name, &BTreeMap::new())
}

fn bare(algebra: LieAlgebra) -> CatalogEntry {
    CatalogEntry {
        name: String::new(),
        params: BTreeMap::new(),
        algebra,
        hermitian: None,
        sasaki: None,
        kahler: None,
        vectors: BTreeMap::new(),
        subspaces: BTreeMap::new(),
        expected: BTreeMap::new(),
    }
}

fn expect(e: &mut CatalogEntry, pairs: &[(&str, bool)]) {
    for (k, v) in pairs {
        e.expected.insert(k.to_string(), *v);
    }
}

fn abelian_entry(n: usize) -> CatalogEntry {
    let mut e = bare(LieAlgebra::abelian(n));
    expect(
        &mut e,
        &[
            ("lie", true),
            ("unimodular", true),
            ("nilpotent", true),
            ("solvable", true),
            ("semisimple", false),
            ("center_dim_2", n == 2),
        ],
    );
    e
}

fn cn_entry(k: usize) -> CatalogEntry {
    let kahler = flat_kahler(k);
    let mut e = bare(kahler.algebra().clone());
    e.kahler = Some(kahler);
    expect(
        &mut e,
        &[
            ("lie", true),
            ("unimodular", true),
            ("nilpotent", true),
            ("solvable", true),
            ("semisimple", false),
            ("center_dim_2", k == 1),
            ("kahler", true),
            ("effective", true),
            ("j_algebra", false),
        ],
    );
    e
}

fn heisenberg_names(k: usize) -> Vec<String> {
    if k == 1 {
        return vec!["X".into(), "Y".into(), "Z".into()];
    }
    (1..=k)
        .map(|i| format!("X{i}"))
        .chain((1..=k).map(|i| format!("Y{i}")))
        .chain(["Z".to_string()])
        .collect()
}

/// `[X_i, Y_i] = −Z`, `φ = z`, `η = Z`, `J̃X_i = Y_i`, `J̃Y_i = −X_i`,
/// identity metric.
pub fn heisenberg_sasaki(k: usize) -> SasakiData {
    let n = 2 * k + 1;
    let mut table = BTreeMap::new();
    for i in 0..k {
        table.insert((i, k + i), Vector::basis(n, n - 1).scale(&int(-1)));
    }
    let g = LieAlgebra::new(heisenberg_names(k), table).expect("heisenberg");
    let mut jt = Matrix::zeros(n, n);
    for i in 0..k {
        jt.set(k + i, i, Scalar::one());
        jt.set(i, k + i, -Scalar::one());
    }
    SasakiData::new(g, KForm::dual(n, n - 1), Vector::basis(n, n - 1), jt, Matrix::identity(n))
        .expect("heisenberg Sasaki data")
}

/// `[e1, e2] = e3` cyclic, `φ = e3*`, `J̃e1 = −e2`, `J̃e2 = e1`, identity
/// metric (minus half the Killing form).
pub fn su2_sasaki() -> SasakiData {
    let one = Scalar::one;
    let g = LieAlgebra::builder(["e1", "e2", "e3"])
        .bracket("e1", "e2", &[("e3", one())])
        .bracket("e2", "e3", &[("e1", one())])
        .bracket("e3", "e1", &[("e2", one())])
        .build()
        .expect("su2");
    let jt = Matrix::from_ints(&[&[0, 1, 0], &[-1, 0, 0], &[0, 0, 0]]);
    SasakiData::new(g, KForm::dual(3, 2), Vector::basis(3, 2), jt, Matrix::identity(3))
        .expect("su2 Sasaki data")
}

pub fn sl2r_algebra() -> LieAlgebra {
    LieAlgebra::builder(["X", "Y", "Z"])
        .bracket("X", "Y", &[("Z", int(-1))])
        .bracket("Z", "X", &[("Y", int(1))])
        .bracket("Z", "Y", &[("X", int(-1))])
        .build()
        .expect("sl2r")
}

/// `φ = z`, `η = Z`, `J̃X = Y`, `J̃Y = −X`, identity metric.
pub fn sl2r_sasaki() -> SasakiData {
    let jt = Matrix::from_ints(&[&[0, -1, 0], &[1, 0, 0], &[0, 0, 0]]);
    SasakiData::new(sl2r_algebra(), KForm::dual(3, 2), Vector::basis(3, 2), jt, Matrix::identity(3))
        .expect("sl2r Sasaki data")
}

fn heisenberg_entry(k: usize) -> Result<CatalogEntry> {
    let s = heisenberg_sasaki(k);
    let mut e = bare(s.algebra().clone());
    e.kahler = Some(kahler_quotient(&s)?);
    e.vectors.insert("eta".into(), s.eta().clone());
    e.sasaki = Some(s);
    expect(
        &mut e,
        &[
            ("lie", true),
            ("unimodular", true),
            ("nilpotent", true),
            ("solvable", true),
            ("semisimple", false),
            ("center_dim_2", false),
            ("sasaki", true),
            ("kahler", true),
            ("effective", true),
            ("j_algebra", false),
        ],
    );
    Ok(e)
}

fn three_dim_entry(s: SasakiData) -> Result<CatalogEntry> {
    let mut e = bare(s.algebra().clone());
    let k = kahler_pair(&s)?;
    e.subspaces.insert("h".into(), k.isotropy().clone());
    e.kahler = Some(k);
    e.vectors.insert("eta".into(), s.eta().clone());
    e.sasaki = Some(s);
    expect(
        &mut e,
        &[
            ("lie", true),
            ("unimodular", true),
            ("nilpotent", false),
            ("solvable", false),
            ("semisimple", true),
            ("center_dim_2", false),
            ("sasaki", true),
            ("kahler", true),
            ("effective", true),
            ("j_algebra", true),
        ],
    );
    Ok(e)
}

fn vaisman_expectations(e: &mut CatalogEntry) {
    expect(
        e,
        &[
            ("hermitian", true),
            ("positive_definite", true),
            ("nijenhuis_defect_empty", true),
            ("lck_identity", true),
            ("theta_closed", true),
            ("vaisman", true),
        ],
    );
}

fn canonical_entry(s: SasakiData, b: &Scalar, nilpotent: bool, center2: bool) -> Result<CatalogEntry> {
    let h = canonical_vaisman(&s, b)?;
    let mut e = bare(h.algebra().clone());
    let mut eta = Vector::zeros(1);
    eta.0.extend(s.eta().0.iter().cloned());
    e.vectors.insert("T".into(), Vector::basis(h.dim(), 0));
    e.vectors.insert("eta".into(), eta);
    e.hermitian = Some(h);
    expect(
        &mut e,
        &[
            ("lie", true),
            ("unimodular", true),
            ("nilpotent", nilpotent),
            ("solvable", nilpotent),
            ("semisimple", false),
            ("center_dim_2", center2),
        ],
    );
    vaisman_expectations(&mut e);
    Ok(e)
}

/// `J X = −Y`, `J Y = X`, `J Z = −W`, `J W = Z` on `(X, Y, Z, W)`.
pub fn kodaira_complex_structure() -> Matrix {
    Matrix::from_ints(&[&[0, 1, 0, 0], &[-1, 0, 0, 0], &[0, 0, 0, 1], &[0, 0, -1, 0]])
}

fn kodaira_entry(secondary: bool) -> Result<CatalogEntry> {
    let mut b = LieAlgebra::builder(["X", "Y", "Z", "W"]).bracket("X", "Y", &[("Z", int(-1))]);
    if secondary {
        b = b
            .bracket("W", "X", &[("Y", int(-1))])
            .bracket("W", "Y", &[("X", int(1))]);
    }
    let g = b.build()?;
    let omega = KForm::from_terms(4, 2, [(vec![0, 1], int(1)), (vec![2, 3], int(1))])?;
    let h = HermitianData::from_fundamental_form(g.clone(), &omega, kodaira_complex_structure())?;
    let mut e = bare(g);
    e.hermitian = Some(h);
    e.vectors.insert("W".into(), Vector::basis(4, 3));
    expect(
        &mut e,
        &[
            ("lie", true),
            ("unimodular", true),
            ("nilpotent", !secondary),
            ("solvable", true),
            ("semisimple", false),
            ("center_dim_2", !secondary),
        ],
    );
    vaisman_expectations(&mut e);
    Ok(e)
}

fn r_times_sl2r_algebra() -> LieAlgebra {
    LieAlgebra::abelian_named(vec!["T".into()]).direct_sum(&sl2r_algebra())
}

/// `J Y = X`, `J X = −Y`, `J T = Z`, `J Z = −T` on `(T, X, Y, Z)`.
pub fn omega_psi_complex_structure() -> Matrix {
    Matrix::from_ints(&[&[0, 0, 0, -1], &[0, 0, 1, 0], &[0, -1, 0, 0], &[1, 0, 0, 0]])
}

/// `ℝT × sl(2, ℝ)` with `Ω = ψ ∧ t + dψ`, `ψ = ax + by + cz`.
pub fn omega_psi(a: &Scalar, b: &Scalar, c: &Scalar) -> Result<HermitianData> {
    let g = r_times_sl2r_algebra();
    let psi = KForm::from_linear(&[Scalar::zero(), a.clone(), b.clone(), c.clone()]);
    let omega = &psi.wedge(&KForm::dual(4, 0)) + &ce_d(&g, &psi)?;
    HermitianData::from_fundamental_form(g, &omega, omega_psi_complex_structure())
}

fn omega_psi_entry(a: &Scalar, b: &Scalar, c: &Scalar) -> Result<CatalogEntry> {
    let h = omega_psi(a, b, c)?;
    let mut e = bare(h.algebra().clone());
    e.hermitian = Some(h);
    let r = a * a + b * b;
    let d = c * c - &r;
    let nondegenerate = !d.is_zero();
    let pd = c.is_positive() && d.is_positive();
    expect(
        &mut e,
        &[
            ("lie", true),
            ("unimodular", true),
            ("nilpotent", false),
            ("solvable", false),
            ("semisimple", false),
            ("center_dim_2", false),
            ("hermitian", pd),
            ("positive_definite", pd),
            ("nijenhuis_defect_empty", true),
            ("lck_identity", nondegenerate),
            ("theta_closed", nondegenerate),
            ("vaisman", nondegenerate && r.is_zero()),
        ],
    );
    Ok(e)
}

fn gl2r_mod_entry() -> CatalogEntry {
    let g = LieAlgebra::builder(["T", "X", "Y", "Z", "W"])
        .bracket("X", "Y", &[("Z", int(-1))])
        .bracket("Z", "X", &[("Y", int(1))])
        .bracket("Z", "Y", &[("X", int(-1))])
        .build()
        .expect("gl2r");
    let s = &Vector::basis(5, 4) - &Vector::basis(5, 3);
    let mut e = bare(g);
    e.subspaces.insert("h".into(), Subspace::span(5, std::slice::from_ref(&s)));
    e.vectors.insert("S".into(), s);
    expect(
        &mut e,
        &[
            ("lie", true),
            ("unimodular", true),
            ("nilpotent", false),
            ("solvable", false),
            ("semisimple", false),
            ("center_dim_2", true),
        ],
    );
    e
}

/// Runs the operation behind `predicate` on the entry. `None` when the
/// entry lacks the structure the predicate needs.
pub fn evaluate(e: &CatalogEntry, predicate: &str) -> Option<bool> {
    let g = &e.algebra;
    let lie = || g.jacobi_defect().is_empty();
    match predicate {
        "lie" => Some(lie()),
        "unimodular" => Some(g.is_unimodular()),
        "nilpotent" => Some(g.is_nilpotent()),
        "solvable" => Some(g.is_solvable()),
        "semisimple" => Some(g.is_semisimple()),
        "center_dim_2" => Some(g.center().dim() == 2),
        "hermitian" => e.hermitian.as_ref().map(|h| h.check().pass),
        "positive_definite" => e
            .hermitian
            .as_ref()
            .map(|h| h.metric().is_positive_definite() == Some(true)),
        "nijenhuis_defect_empty" => e.hermitian.as_ref().map(|h| {
            nijenhuis_defect(h.algebra(), h.complex_structure(), None).is_ok_and(|d| d.is_empty())
        }),
        "lck_identity" => e.hermitian.as_ref().map(|h| check_lck(h).lck_identity),
        "theta_closed" => e.hermitian.as_ref().map(|h| check_lck(h).theta_closed),
        "vaisman" => e.hermitian.as_ref().map(|h| check_lck(h).vaisman),
        "sasaki" => e.sasaki.as_ref().map(|s| check_sasaki(s).pass),
        "kahler" => e.kahler.as_ref().map(|k| check_kahler_algebra(k).pass),
        "effective" => e
            .kahler
            .as_ref()
            .map(|k| check_kahler_algebra(k).properties.get("effective").map(String::as_str) == Some("true")),
        "j_algebra" => e
            .kahler
            .as_ref()
            .map(|k| check_kahler_algebra(k).properties.get("j_algebra").map(String::as_str) == Some("true")),
        _ => None,
    }
}

/// `(predicate, expected, actual)` for every expected verdict that the
/// operations do not reproduce.
pub fn mismatches(e: &CatalogEntry) -> Vec<(String, bool, Option<bool>)> {
    e.expected
        .iter()
        .filter_map(|(p, &want)| {
            let got = evaluate(e, p);
            (got != Some(want)).then(|| (p.clone(), want, got))
        })
        .collect()
}

/// Every registered entry at its default parameters.
pub fn all_default_entries() -> Vec<CatalogEntry> {
    REGISTRY
        .iter()
        .map(|s| catalog_default(s.name).expect("defaults are valid"))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::frac;

    fn params(kv: &[(&str, Scalar)]) -> BTreeMap<String, Scalar> {
        kv.iter().map(|(k, v)| (k.to_string(), v.clone())).collect()
    }

    #[test]
    fn defaults_reproduce_expectations() {
        for e in all_default_entries() {
            assert!(mismatches(&e).is_empty(), "{}: {:?}", e.name, mismatches(&e));
            for p in e.expected.keys() {
                assert!(PREDICATES.contains(&p.as_str()));
            }
        }
    }

    #[test]
    fn parameterized_entries() {
        for k in 1..=3 {
            let e = catalog_get("heisenberg", &params(&[("k", int(k))])).unwrap();
            assert_eq!(e.algebra.dim(), 2 * k as usize + 1);
            assert!(mismatches(&e).is_empty());
            let e = catalog_get("r_times_heisenberg", &params(&[("k", int(k)), ("b", frac(-1, 3))])).unwrap();
            assert!(mismatches(&e).is_empty());
        }
        for (a, b, c) in [(0, 0, 1), (1, 0, 2), (1, 1, 1), (0, 0, -1), (2, 1, 1), (3, 4, 5)] {
            let e = catalog_get("omega_psi", &params(&[("a", int(a)), ("b", int(b)), ("c", int(c))])).unwrap();
            assert!(mismatches(&e).is_empty(), "({a},{b},{c}): {:?}", mismatches(&e));
        }
    }

    #[test]
    fn omega_psi_metric_matches_table() {
        let (a, b, c) = (frac(1, 2), int(-3), int(7));
        let h = omega_psi(&a, &b, &c).unwrap();
        let m = Matrix::from_rows(vec![
            vec![c.clone(), -b.clone(), a.clone(), int(0)],
            vec![-b.clone(), c.clone(), int(0), a.clone()],
            vec![a.clone(), int(0), c.clone(), b.clone()],
            vec![int(0), a.clone(), b.clone(), c.clone()],
        ]);
        assert_eq!(h.metric(), &m);
    }

    #[test]
    fn r_times_sl2r_is_omega_psi_001() {
        let e = catalog_default("r_times_sl2r").unwrap();
        let o = omega_psi(&int(0), &int(0), &int(1)).unwrap();
        assert_eq!(e.hermitian.unwrap(), o);
    }

    #[test]
    fn bad_lookups() {
        assert_eq!(
            catalog_default("nope"),
            Err(Error::UnknownCatalogEntry("nope".into()))
        );
        for kv in [("k", int(0)), ("k", frac(1, 2)), ("q", int(1))] {
            assert!(matches!(
                catalog_get("heisenberg", &params(&[kv])),
                Err(Error::InvalidParameter { .. })
            ));
        }
    }
}
