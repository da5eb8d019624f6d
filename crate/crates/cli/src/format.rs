//! The algebra file format: a JSON document with exact rationals written
//! as strings.

use std::collections::BTreeMap;

use num::Zero;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use vaisman_core::catalog::CatalogEntry;
use vaisman_core::constructions::ModificationMap;
use vaisman_core::error::Error as CoreError;
use vaisman_core::exterior::KForm;
use vaisman_core::lie::LieAlgebra;
use vaisman_core::linalg::{Matrix, Subspace, Vector};
use vaisman_core::scalar::{format_scalar, parse_scalar, Scalar, ScalarParseError};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraFile {
    pub name: String,
    pub dim: usize,
    pub basis: Vec<String>,
    pub brackets: Vec<BracketEntry>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub metric: Option<Vec<Vec<String>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub complex_structure: Option<Vec<Vec<String>>>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub forms: Vec<FormEntry>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub vectors: Vec<VectorEntry>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub subspaces: Vec<SubspaceEntry>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BracketEntry {
    pub i: usize,
    pub j: usize,
    pub terms: Vec<BracketTerm>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BracketTerm {
    pub k: usize,
    pub coeff: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FormEntry {
    pub name: String,
    pub degree: usize,
    pub terms: Vec<FormTerm>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FormTerm {
    pub indices: Vec<usize>,
    pub coeff: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct VectorEntry {
    pub name: String,
    pub coords: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SubspaceEntry {
    pub name: String,
    pub vectors: Vec<Vec<String>>,
}

/// A modification map file: derivation matrices and, per basis vector,
/// the coefficients of `φ(e_i)` on them.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MapFile {
    pub derivations: Vec<Vec<Vec<String>>>,
    pub coeffs: Vec<Vec<String>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum FormatErrorKind {
    #[error("syntax error: {0}")]
    Syntax(String),
    #[error("division by zero in `{0}`")]
    DivisionByZero(String),
    #[error("malformed rational `{0}`")]
    MalformedRational(String),
    #[error("duplicate basis name `{0}`")]
    DuplicateBasisName(String),
    #[error("duplicate entry name `{0}`")]
    DuplicateName(String),
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("index {index} out of range for dimension {dim}")]
    IndexOutOfRange { index: usize, dim: usize },
    #[error("bracket entry ({i}, {j}) must have i < j")]
    NonIncreasingPair { i: usize, j: usize },
    #[error("bracket entry ({i}, {j}) appears twice")]
    DuplicateBracket { i: usize, j: usize },
    #[error("{0}")]
    Invalid(String),
}

/// A format error with the path of the offending field, e.g.
/// `brackets[2].terms[0].coeff`.
#[derive(Clone, Debug, PartialEq, Eq, Error)]
#[error("{path}: {kind}")]
pub struct FormatError {
    pub path: String,
    pub kind: FormatErrorKind,
}

fn err(path: impl Into<String>, kind: FormatErrorKind) -> FormatError {
    FormatError {
        path: path.into(),
        kind,
    }
}

fn scalar(s: &str, path: &str) -> Result<Scalar, FormatError> {
    parse_scalar(s).map_err(|e| match e {
        ScalarParseError::DivisionByZero(s) => err(path, FormatErrorKind::DivisionByZero(s)),
        ScalarParseError::Empty => err(path, FormatErrorKind::MalformedRational(String::new())),
        ScalarParseError::Malformed(s) => err(path, FormatErrorKind::MalformedRational(s)),
    })
}

fn vector(xs: &[String], dim: usize, path: &str) -> Result<Vector, FormatError> {
    if xs.len() != dim {
        return Err(err(
            path,
            FormatErrorKind::DimensionMismatch {
                expected: dim,
                found: xs.len(),
            },
        ));
    }
    xs.iter()
        .enumerate()
        .map(|(i, s)| scalar(s, &format!("{path}[{i}]")))
        .collect::<Result<_, _>>()
        .map(Vector)
}

fn matrix(rows: &[Vec<String>], nrows: usize, ncols: usize, path: &str) -> Result<Matrix, FormatError> {
    if rows.len() != nrows {
        return Err(err(
            path,
            FormatErrorKind::DimensionMismatch {
                expected: nrows,
                found: rows.len(),
            },
        ));
    }
    let rows = rows
        .iter()
        .enumerate()
        .map(|(r, row)| vector(row, ncols, &format!("{path}[{r}]")).map(|v| v.0))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(if nrows == 0 {
        Matrix::zeros(0, ncols)
    } else {
        Matrix::from_rows(rows)
    })
}

fn index(i: usize, dim: usize, path: &str) -> Result<usize, FormatError> {
    if i >= dim {
        Err(err(path, FormatErrorKind::IndexOutOfRange { index: i, dim }))
    } else {
        Ok(i)
    }
}

fn core(path: &str, e: CoreError) -> FormatError {
    let kind = match e {
        CoreError::DuplicateBasisName(n) => FormatErrorKind::DuplicateBasisName(n),
        CoreError::DimensionMismatch { expected, found } => {
            FormatErrorKind::DimensionMismatch { expected, found }
        }
        CoreError::IndexOutOfRange { index, dim } => FormatErrorKind::IndexOutOfRange { index, dim },
        other => FormatErrorKind::Invalid(other.to_string()),
    };
    err(path, kind)
}

/// The validated content of an algebra file. Named items keep file order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bundle {
    pub name: String,
    pub algebra: LieAlgebra,
    pub metric: Option<Matrix>,
    pub complex_structure: Option<Matrix>,
    pub forms: Vec<(String, KForm)>,
    pub vectors: Vec<(String, Vector)>,
    pub subspaces: Vec<(String, Subspace)>,
}

impl Bundle {
    pub fn form(&self, name: &str) -> Option<&KForm> {
        self.forms.iter().find(|(n, _)| n == name).map(|(_, f)| f)
    }

    pub fn vector(&self, name: &str) -> Option<&Vector> {
        self.vectors.iter().find(|(n, _)| n == name).map(|(_, v)| v)
    }

    pub fn subspace(&self, name: &str) -> Option<&Subspace> {
        self.subspaces.iter().find(|(n, _)| n == name).map(|(_, s)| s)
    }

    pub fn bare(name: impl Into<String>, algebra: LieAlgebra) -> Self {
        Bundle {
            name: name.into(),
            algebra,
            metric: None,
            complex_structure: None,
            forms: Vec::new(),
            vectors: Vec::new(),
            subspaces: Vec::new(),
        }
    }
}

fn unique<'a>(names: impl Iterator<Item = &'a String>, path: &str) -> Result<(), FormatError> {
    let mut seen = std::collections::HashSet::new();
    for n in names {
        if !seen.insert(n) {
            return Err(err(path, FormatErrorKind::DuplicateName(n.clone())));
        }
    }
    Ok(())
}

/// Parses a document. Syntax errors carry line and column; validation
/// errors carry the field path. The Jacobi identity is not enforced here,
/// so that `check --structure lie` can report where it fails.
pub fn parse(text: &str) -> Result<Bundle, FormatError> {
    let file: AlgebraFile = serde_json::from_str(text).map_err(|e| {
        err(
            format!("line {} column {}", e.line(), e.column()),
            FormatErrorKind::Syntax(e.to_string()),
        )
    })?;
    validate(&file)
}

/// Checks a deserialized file and builds exact objects from it.
pub fn validate(f: &AlgebraFile) -> Result<Bundle, FormatError> {
    let n = f.dim;
    if f.basis.len() != n {
        return Err(err(
            "basis",
            FormatErrorKind::DimensionMismatch {
                expected: n,
                found: f.basis.len(),
            },
        ));
    }
    let mut seen = std::collections::HashSet::new();
    for (i, b) in f.basis.iter().enumerate() {
        if !seen.insert(b) {
            return Err(err(
                format!("basis[{i}]"),
                FormatErrorKind::DuplicateBasisName(b.clone()),
            ));
        }
    }
    let mut table = BTreeMap::new();
    for (e, entry) in f.brackets.iter().enumerate() {
        let p = format!("brackets[{e}]");
        index(entry.i, n, &format!("{p}.i"))?;
        index(entry.j, n, &format!("{p}.j"))?;
        if entry.i >= entry.j {
            return Err(err(
                p,
                FormatErrorKind::NonIncreasingPair {
                    i: entry.i,
                    j: entry.j,
                },
            ));
        }
        let mut v = Vector::zeros(n);
        for (t, term) in entry.terms.iter().enumerate() {
            let tp = format!("{p}.terms[{t}]");
            let k = index(term.k, n, &format!("{tp}.k"))?;
            let c = scalar(&term.coeff, &format!("{tp}.coeff"))?;
            v.0[k] = &v.0[k] + &c;
        }
        if table.insert((entry.i, entry.j), v).is_some() {
            return Err(err(
                p,
                FormatErrorKind::DuplicateBracket {
                    i: entry.i,
                    j: entry.j,
                },
            ));
        }
    }
    let algebra = LieAlgebra::new_unchecked(f.basis.clone(), table).map_err(|e| core("brackets", e))?;

    let metric = f
        .metric
        .as_ref()
        .map(|m| matrix(m, n, n, "metric"))
        .transpose()?;
    let complex_structure = f
        .complex_structure
        .as_ref()
        .map(|m| matrix(m, n, n, "complex_structure"))
        .transpose()?;

    unique(f.forms.iter().map(|x| &x.name), "forms")?;
    let mut forms = Vec::new();
    for (a, fe) in f.forms.iter().enumerate() {
        let p = format!("forms[{a}]");
        if fe.degree > n {
            return Err(err(
                format!("{p}.degree"),
                FormatErrorKind::IndexOutOfRange {
                    index: fe.degree,
                    dim: n + 1,
                },
            ));
        }
        let mut terms = Vec::new();
        for (t, term) in fe.terms.iter().enumerate() {
            let tp = format!("{p}.terms[{t}]");
            if term.indices.len() != fe.degree {
                return Err(err(
                    format!("{tp}.indices"),
                    FormatErrorKind::DimensionMismatch {
                        expected: fe.degree,
                        found: term.indices.len(),
                    },
                ));
            }
            for (q, &i) in term.indices.iter().enumerate() {
                index(i, n, &format!("{tp}.indices[{q}]"))?;
            }
            terms.push((term.indices.clone(), scalar(&term.coeff, &format!("{tp}.coeff"))?));
        }
        let form = KForm::from_terms(n, fe.degree, terms).map_err(|e| core(&p, e))?;
        forms.push((fe.name.clone(), form));
    }

    unique(f.vectors.iter().map(|x| &x.name), "vectors")?;
    let vectors = f
        .vectors
        .iter()
        .enumerate()
        .map(|(a, v)| Ok((v.name.clone(), vector(&v.coords, n, &format!("vectors[{a}].coords"))?)))
        .collect::<Result<Vec<_>, FormatError>>()?;

    unique(f.subspaces.iter().map(|x| &x.name), "subspaces")?;
    let subspaces = f
        .subspaces
        .iter()
        .enumerate()
        .map(|(a, s)| {
            let vs = s
                .vectors
                .iter()
                .enumerate()
                .map(|(b, v)| vector(v, n, &format!("subspaces[{a}].vectors[{b}]")))
                .collect::<Result<Vec<_>, _>>()?;
            Ok((s.name.clone(), Subspace::span(n, &vs)))
        })
        .collect::<Result<Vec<_>, FormatError>>()?;

    Ok(Bundle {
        name: f.name.clone(),
        algebra,
        metric,
        complex_structure,
        forms,
        vectors,
        subspaces,
    })
}

fn strings(v: &Vector) -> Vec<String> {
    v.0.iter().map(format_scalar).collect()
}

fn matrix_strings(m: &Matrix) -> Vec<Vec<String>> {
    m.rows()
        .iter()
        .map(|r| r.iter().map(format_scalar).collect())
        .collect()
}

/// Canonical document for a bundle: brackets in index order, zero terms
/// dropped, subspaces written by their reduced basis.
pub fn to_file(b: &Bundle) -> AlgebraFile {
    let g = &b.algebra;
    let brackets = g
        .bracket_table()
        .iter()
        .filter(|(_, v)| !v.is_zero())
        .map(|(&(i, j), v)| BracketEntry {
            i,
            j,
            terms: v
                .support()
                .map(|(k, c)| BracketTerm {
                    k,
                    coeff: format_scalar(c),
                })
                .collect(),
        })
        .collect();
    AlgebraFile {
        name: b.name.clone(),
        dim: g.dim(),
        basis: g.names().to_vec(),
        brackets,
        metric: b.metric.as_ref().map(matrix_strings),
        complex_structure: b.complex_structure.as_ref().map(matrix_strings),
        forms: b
            .forms
            .iter()
            .map(|(name, f)| FormEntry {
                name: name.clone(),
                degree: f.degree(),
                terms: f
                    .terms()
                    .iter()
                    .filter(|(_, c)| !c.is_zero())
                    .map(|(idx, c)| FormTerm {
                        indices: idx.clone(),
                        coeff: format_scalar(c),
                    })
                    .collect(),
            })
            .collect(),
        vectors: b
            .vectors
            .iter()
            .map(|(name, v)| VectorEntry {
                name: name.clone(),
                coords: strings(v),
            })
            .collect(),
        subspaces: b
            .subspaces
            .iter()
            .map(|(name, s)| SubspaceEntry {
                name: name.clone(),
                vectors: s.basis().iter().map(strings).collect(),
            })
            .collect(),
    }
}

/// Pretty-printed JSON with a trailing newline.
pub fn serialize(b: &Bundle) -> String {
    let mut s = serde_json::to_string_pretty(&to_file(b)).expect("plain data serializes");
    s.push('\n');
    s
}

fn entry_title(e: &CatalogEntry) -> String {
    if e.params.is_empty() {
        return e.name.clone();
    }
    let ps: Vec<String> = e
        .params
        .iter()
        .map(|(k, v)| format!("{k}={}", format_scalar(v)))
        .collect();
    format!("{}({})", e.name, ps.join(", "))
}

/// Export of a catalog entry. Hermitian entries carry `metric`,
/// `complex_structure` = J and the form `Omega`; Sasaki entries carry
/// `metric`, `complex_structure` = J̃, the form `phi` and the vector
/// `eta`; a Kähler algebra on the entry's own algebra without Sasaki data
/// carries `complex_structure` = J, the form `omega` and the subspace `h`.
pub fn export_entry(e: &CatalogEntry) -> Bundle {
    let mut b = Bundle::bare(entry_title(e), e.algebra.clone());
    if let Some(h) = &e.hermitian {
        b.metric = Some(h.metric().clone());
        b.complex_structure = Some(h.complex_structure().clone());
        if let Ok(om) = h.fundamental_form() {
            b.forms.push(("Omega".into(), om));
        }
    } else if let Some(s) = &e.sasaki {
        b.metric = Some(s.metric().clone());
        b.complex_structure = Some(s.jtilde().clone());
        b.forms.push(("phi".into(), s.phi().clone()));
    } else if let Some(k) = &e.kahler {
        if k.algebra() == &e.algebra {
            b.complex_structure = Some(k.complex_structure().clone());
            b.forms.push(("omega".into(), k.omega().clone()));
            if !k.isotropy().is_zero() {
                b.subspaces.push(("h".into(), k.isotropy().clone()));
            }
        }
    }
    for (name, v) in &e.vectors {
        b.vectors.push((name.clone(), v.clone()));
    }
    for (name, s) in &e.subspaces {
        if b.subspace(name).is_none() {
            b.subspaces.push((name.clone(), s.clone()));
        }
    }
    b
}

/// Parses a modification map for an algebra of dimension `dim`.
pub fn parse_map(text: &str, dim: usize) -> Result<ModificationMap, FormatError> {
    let f: MapFile = serde_json::from_str(text).map_err(|e| {
        err(
            format!("line {} column {}", e.line(), e.column()),
            FormatErrorKind::Syntax(e.to_string()),
        )
    })?;
    let derivations = f
        .derivations
        .iter()
        .enumerate()
        .map(|(a, m)| matrix(m, dim, dim, &format!("derivations[{a}]")))
        .collect::<Result<Vec<_>, _>>()?;
    let k = derivations.len();
    if f.coeffs.len() != dim {
        return Err(err(
            "coeffs",
            FormatErrorKind::DimensionMismatch {
                expected: dim,
                found: f.coeffs.len(),
            },
        ));
    }
    let coeffs = f
        .coeffs
        .iter()
        .enumerate()
        .map(|(i, row)| vector(row, k, &format!("coeffs[{i}]")).map(|v| v.0))
        .collect::<Result<Vec<_>, _>>()?;
    ModificationMap::new(derivations, coeffs).map_err(|e| core("derivations", e))
}

/// Canonical map document.
pub fn serialize_map(m: &ModificationMap) -> String {
    let f = MapFile {
        derivations: m.derivations().iter().map(matrix_strings).collect(),
        coeffs: m
            .coeffs()
            .iter()
            .map(|r| r.iter().map(format_scalar).collect())
            .collect(),
    };
    let mut s = serde_json::to_string_pretty(&f).expect("plain data serializes");
    s.push('\n');
    s
}
