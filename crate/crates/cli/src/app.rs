//! Command dispatch. `run` never panics on user input; every outcome is
//! an exit code plus text for stdout and stderr.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde_json::json;

use vaisman_core::catalog::{catalog_get, catalog_list, CatalogEntry};
use vaisman_core::constructions::{
    canonical_vaisman, classify_vaisman, kahler_pair, kahler_quotient, modify, quantize,
    validate_modification, ClassificationVerdict,
};
use vaisman_core::error::Error as CoreError;
use vaisman_core::exterior::KForm;
use vaisman_core::linalg::{Subspace, Vector};
use vaisman_core::report::StructureReport;
use vaisman_core::scalar::{format_scalar, parse_scalar};
use vaisman_core::structures::{
    check_kahler_algebra, check_lck, check_sasaki, lie_report, HermitianData, KahlerAlgebraData,
    SasakiData,
};

use crate::format::{export_entry, parse, parse_map, serialize, to_file, Bundle};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_INPUT: i32 = 2;

#[derive(Parser, Debug)]
#[command(
    name = "vaisman",
    version,
    about = "Exact checks and constructions for l.c.K., Vaisman, Sasaki and Kähler Lie algebras",
    after_help = "Exit status: 0 when every check passes, 1 when a check fails, 2 on input errors."
)]
pub struct Cli {
    /// Report format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Write the main output to this file instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Structure {
    Lie,
    Hermitian,
    Lck,
    Vaisman,
    Sasaki,
    Kahler,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Check one structure on an algebra file, or on every `.json` file in
    /// a directory.
    Check {
        path: PathBuf,
        #[arg(long, value_enum)]
        structure: Structure,
    },
    /// Type of a unimodular Vaisman algebra: HEISENBERG(k), SU2 or SL2R.
    Classify { path: PathBuf },
    /// Modify the bracket by a map read from `--map`.
    Modify {
        path: PathBuf,
        #[arg(long)]
        map: PathBuf,
    },
    /// Central extension of a Kähler algebra by its Kähler form.
    Quantize {
        path: PathBuf,
        /// Name of the new central basis vector.
        #[arg(long, default_value = "eta")]
        eta_name: String,
    },
    /// Kähler algebra underlying a Sasaki algebra.
    Quotient {
        path: PathBuf,
        /// Return the pair-level algebra (g, span{eta}, J, dphi) instead of
        /// the quotient; needed when eta is not central.
        #[arg(long)]
        pair: bool,
    },
    /// Canonical Vaisman structure on R x (Sasaki algebra).
    CanonicalVaisman {
        path: PathBuf,
        #[arg(long, default_value = "0", allow_hyphen_values = true)]
        b: String,
    },
    /// Built-in algebras.
    Catalog {
        #[command(subcommand)]
        action: CatalogAction,
    },
}

#[derive(Subcommand, Debug)]
pub enum CatalogAction {
    List,
    /// Summary and expected verdicts of an entry.
    Show {
        name: String,
        #[arg(long = "param", value_name = "KEY=VALUE", allow_hyphen_values = true)]
        params: Vec<String>,
    },
    /// The entry as an algebra file.
    Export {
        name: String,
        #[arg(long = "param", value_name = "KEY=VALUE", allow_hyphen_values = true)]
        params: Vec<String>,
    },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

#[derive(Debug)]
enum Failure {
    /// A mathematical check failed; `output` is still the main result.
    Math { output: String, message: String },
    Input(String),
}

fn input(msg: impl Into<String>) -> Failure {
    Failure::Input(msg.into())
}

fn math(output: String, message: impl Into<String>) -> Failure {
    Failure::Math {
        output,
        message: message.into(),
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome {
                    code: EXIT_INPUT,
                    stdout: String::new(),
                    stderr: text,
                }
            } else {
                Outcome {
                    code: EXIT_OK,
                    stdout: text,
                    stderr: String::new(),
                }
            };
        }
    };
    let (code, out, stderr) = match execute(&cli) {
        Ok((code, out)) => (code, out, String::new()),
        Err(Failure::Math { output, message }) => (EXIT_FAILED, output, message + "\n"),
        Err(Failure::Input(m)) => (EXIT_INPUT, String::new(), format!("error: {m}\n")),
    };
    match &cli.out {
        Some(path) if !out.is_empty() => match std::fs::write(path, &out) {
            Ok(()) => Outcome {
                code,
                stdout: String::new(),
                stderr,
            },
            Err(e) => Outcome {
                code: EXIT_INPUT,
                stdout: String::new(),
                stderr: format!("error: cannot write {}: {e}\n", path.display()),
            },
        },
        _ => Outcome {
            code,
            stdout: out,
            stderr,
        },
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| input(format!("cannot read {}: {e}", path.display())))
}

fn load(path: &Path) -> Result<Bundle, Failure> {
    parse(&read(path)?).map_err(|e| input(format!("{}: {e}", path.display())))
}

fn core_input(e: CoreError) -> Failure {
    input(e.to_string())
}

/// `complex_structure` as `J`, and `metric`, or failing that the metric
/// `Ω(J·, ·)` of a form named `Omega`.
pub fn hermitian_of(b: &Bundle) -> Result<HermitianData, String> {
    let j = b
        .complex_structure
        .clone()
        .ok_or("file has no complex_structure")?;
    match (&b.metric, b.form("Omega")) {
        (Some(m), _) => HermitianData::new(b.algebra.clone(), m.clone(), j),
        (None, Some(om)) => HermitianData::from_fundamental_form(b.algebra.clone(), om, j),
        (None, None) => return Err("file has neither a metric nor a form named Omega".into()),
    }
    .map_err(|e| e.to_string())
}

/// Form `phi`, vector `eta`, `complex_structure` as `J̃`, and `metric` or
/// the metric forced by the metric law.
pub fn sasaki_of(b: &Bundle) -> Result<SasakiData, String> {
    let phi = b.form("phi").ok_or("file has no form named phi")?;
    if phi.degree() != 1 {
        return Err(format!("form phi has degree {}, expected 1", phi.degree()));
    }
    let eta = b.vector("eta").ok_or("file has no vector named eta")?;
    let jt = b
        .complex_structure
        .clone()
        .ok_or("file has no complex_structure")?;
    let metric = match &b.metric {
        Some(m) => m.clone(),
        None => SasakiData::metric_from_law(&b.algebra, phi, &jt).map_err(|e| e.to_string())?,
    };
    SasakiData::new(b.algebra.clone(), phi.clone(), eta.clone(), jt, metric).map_err(|e| e.to_string())
}

fn kahler_from_form(b: &Bundle, omega: &KForm) -> Result<KahlerAlgebraData, String> {
    let j = b
        .complex_structure
        .clone()
        .ok_or("file has no complex_structure")?;
    if omega.degree() != 2 {
        return Err(format!("form omega has degree {}, expected 2", omega.degree()));
    }
    let n = b.algebra.dim();
    let h = b.subspace("h").cloned().unwrap_or_else(|| Subspace::zero(n));
    KahlerAlgebraData::new(b.algebra.clone(), h, j, omega.clone()).map_err(|e| e.to_string())
}

fn structure_name(s: Structure) -> &'static str {
    match s {
        Structure::Lie => "lie",
        Structure::Hermitian => "hermitian",
        Structure::Lck => "lck",
        Structure::Vaisman => "vaisman",
        Structure::Sasaki => "sasaki",
        Structure::Kahler => "kahler",
    }
}

/// The report for one structure. `Err` is an input problem (missing or
/// malformed structure data).
pub fn check_bundle(b: &Bundle, s: Structure) -> Result<StructureReport, String> {
    let lie = lie_report(&b.algebra);
    if s == Structure::Lie || !lie.pass {
        return Ok(lie);
    }
    Ok(match s {
        Structure::Lie => unreachable!(),
        Structure::Hermitian => hermitian_of(b)?.check(),
        Structure::Lck => check_lck(&hermitian_of(b)?).lck_report(),
        Structure::Vaisman => check_lck(&hermitian_of(b)?).vaisman_report(),
        Structure::Sasaki => check_sasaki(&sasaki_of(b)?),
        Structure::Kahler => {
            let k = match b.form("omega") {
                Some(om) => kahler_from_form(b, om)?,
                None => {
                    let s = sasaki_of(b)
                        .map_err(|e| format!("no form omega and no Sasaki data ({e})"))?;
                    if b.algebra.center().contains(s.eta()) {
                        match kahler_quotient(&s) {
                            Ok(k) => k,
                            Err(CoreError::SasakiInvalid(why)) => {
                                let mut r = check_sasaki(&s);
                                r.structure = "kahler".into();
                                r.property("note", format!("Sasaki data fails: {why}"));
                                return Ok(r);
                            }
                            Err(e) => return Err(e.to_string()),
                        }
                    } else {
                        kahler_pair(&s).map_err(|e| e.to_string())?
                    }
                }
            };
            check_kahler_algebra(&k)
        }
    })
}

fn execute(cli: &Cli) -> Result<(i32, String), Failure> {
    let fmt = cli.format;
    match &cli.command {
        Command::Check { path, structure } => {
            if path.is_dir() {
                batch_check(path, *structure, fmt)
            } else {
                let b = load(path)?;
                let r = check_bundle(&b, *structure).map_err(input)?;
                let out = render_report(&r, fmt);
                if r.pass {
                    Ok((EXIT_OK, out))
                } else {
                    Err(math(out, format!("{} check failed: {}", r.structure, r.failing().join(", "))))
                }
            }
        }
        Command::Classify { path } => {
            let b = load(path)?;
            let lie = lie_report(&b.algebra);
            if !lie.pass {
                return Err(math(render_report(&lie, fmt), "not a Lie algebra"));
            }
            let h = hermitian_of(&b).map_err(input)?;
            match classify_vaisman(&h) {
                Ok(v) => Ok((EXIT_OK, render_verdict(&v, fmt))),
                Err(e @ (CoreError::NotVaisman(_)
                | CoreError::NotUnimodular
                | CoreError::UnrecognizedShape(_))) => {
                    let out = match fmt {
                        Format::Text => String::new(),
                        Format::Json => json_line(&json!({ "error": e.to_string() })),
                    };
                    Err(math(out, e.to_string()))
                }
                Err(e) => Err(core_input(e)),
            }
        }
        Command::Modify { path, map } => {
            let b = load(path)?;
            let h = hermitian_of(&b).map_err(input)?;
            let m = parse_map(&read(map)?, h.dim())
                .map_err(|e| input(format!("{}: {e}", map.display())))?;
            let report = validate_modification(&h, &m);
            if !report.pass {
                return Err(math(
                    render_report(&report, fmt),
                    format!("invalid modification: {}", report.failing().join(", ")),
                ));
            }
            let out = modify(&h, &m).map_err(core_input)?;
            let mut nb = hermitian_bundle(format!("{} (modified)", b.name), &out);
            nb.vectors = b.vectors.clone();
            nb.subspaces = b.subspaces.clone();
            Ok((EXIT_OK, serialize(&nb)))
        }
        Command::Quantize { path, eta_name } => {
            let b = load(path)?;
            let om = b.form("omega").ok_or_else(|| input("file has no form named omega"))?;
            let k = kahler_from_form(&b, om).map_err(input)?;
            let q = match quantize(&k, eta_name) {
                Ok(q) => q,
                Err(CoreError::CocycleViolation) => {
                    return Err(math(String::new(), CoreError::CocycleViolation.to_string()))
                }
                Err(e) => return Err(core_input(e)),
            };
            let mut nb = Bundle::bare(format!("{} (quantized)", b.name), q.total.clone());
            if k.isotropy().is_zero() {
                let s = q.sasaki().map_err(core_input)?;
                nb.metric = Some(s.metric().clone());
                nb.complex_structure = Some(s.jtilde().clone());
            }
            nb.forms.push(("phi".into(), q.psi.clone()));
            nb.vectors.push(("eta".into(), q.eta.clone()));
            Ok((EXIT_OK, serialize(&nb)))
        }
        Command::Quotient { path, pair } => {
            let b = load(path)?;
            let s = sasaki_of(&b).map_err(input)?;
            let result = if *pair { kahler_pair(&s) } else { kahler_quotient(&s) };
            let k = match result {
                Ok(k) => k,
                Err(e @ (CoreError::NotCentral | CoreError::SasakiInvalid(_))) => {
                    return Err(math(String::new(), e.to_string()))
                }
                Err(e) => return Err(core_input(e)),
            };
            let mut nb = Bundle::bare(format!("{} (Kähler)", b.name), k.algebra().clone());
            nb.complex_structure = Some(k.complex_structure().clone());
            nb.forms.push(("omega".into(), k.omega().clone()));
            if !k.isotropy().is_zero() {
                nb.subspaces.push(("h".into(), k.isotropy().clone()));
            }
            Ok((EXIT_OK, serialize(&nb)))
        }
        Command::CanonicalVaisman { path, b: bstr } => {
            let b = load(path)?;
            let s = sasaki_of(&b).map_err(input)?;
            let bv = parse_scalar(bstr).map_err(|e| input(format!("--b: {e}")))?;
            let h = match canonical_vaisman(&s, &bv) {
                Ok(h) => h,
                Err(e @ CoreError::SasakiInvalid(_)) => return Err(math(String::new(), e.to_string())),
                Err(e) => return Err(core_input(e)),
            };
            let mut nb = hermitian_bundle(
                format!("canonical Vaisman over {} (b={})", b.name, format_scalar(&bv)),
                &h,
            );
            let n = h.dim();
            nb.vectors.push(("T".into(), Vector::basis(n, 0)));
            let mut eta = Vector::zeros(1);
            eta.0.extend(s.eta().0.iter().cloned());
            nb.vectors.push(("eta".into(), eta));
            Ok((EXIT_OK, serialize(&nb)))
        }
        Command::Catalog { action } => catalog(action, fmt),
    }
}

fn hermitian_bundle(name: String, h: &HermitianData) -> Bundle {
    let mut b = Bundle::bare(name, h.algebra().clone());
    b.metric = Some(h.metric().clone());
    b.complex_structure = Some(h.complex_structure().clone());
    if let Ok(om) = h.fundamental_form() {
        b.forms.push(("Omega".into(), om));
    }
    b
}

fn parse_params(raw: &[String]) -> Result<std::collections::BTreeMap<String, vaisman_core::scalar::Scalar>, Failure> {
    raw.iter()
        .map(|p| {
            let (k, v) = p
                .split_once('=')
                .ok_or_else(|| input(format!("--param `{p}` is not KEY=VALUE")))?;
            let v = parse_scalar(v).map_err(|e| input(format!("--param {k}: {e}")))?;
            Ok((k.to_string(), v))
        })
        .collect()
}

fn entry(name: &str, raw: &[String]) -> Result<CatalogEntry, Failure> {
    catalog_get(name, &parse_params(raw)?).map_err(core_input)
}

fn catalog(action: &CatalogAction, fmt: Format) -> Result<(i32, String), Failure> {
    match action {
        CatalogAction::List => {
            let list = catalog_list();
            let out = match fmt {
                Format::Text => {
                    let mut s = String::new();
                    for (name, params, summary) in &list {
                        let ps: Vec<String> = params.iter().map(|(k, v)| format!("{k}={v}")).collect();
                        let _ = writeln!(s, "{name:<20} {:<12} {summary}", ps.join(","));
                    }
                    s
                }
                Format::Json => json_line(&serde_json::Value::Array(
                    list.iter()
                        .map(|(name, params, summary)| {
                            json!({
                                "name": name,
                                "params": params.iter().cloned().collect::<std::collections::BTreeMap<_, _>>(),
                                "summary": summary,
                            })
                        })
                        .collect(),
                )),
            };
            Ok((EXIT_OK, out))
        }
        CatalogAction::Show { name, params } => {
            let e = entry(name, params)?;
            let out = match fmt {
                Format::Text => show_text(&e),
                Format::Json => json_line(&json!({
                    "name": e.name,
                    "params": e.params.iter().map(|(k, v)| (k.clone(), format_scalar(v))).collect::<std::collections::BTreeMap<_, _>>(),
                    "expected": e.expected,
                    "file": to_file(&export_entry(&e)),
                })),
            };
            Ok((EXIT_OK, out))
        }
        CatalogAction::Export { name, params } => {
            let e = entry(name, params)?;
            Ok((EXIT_OK, serialize(&export_entry(&e))))
        }
    }
}

fn show_text(e: &CatalogEntry) -> String {
    let g = &e.algebra;
    let mut s = String::new();
    let _ = writeln!(s, "{}", export_entry(e).name);
    let _ = writeln!(s, "  dim {}: {}", g.dim(), g.names().join(", "));
    for (&(i, j), v) in g.bracket_table() {
        let _ = writeln!(s, "  [{}, {}] = {}", g.names()[i], g.names()[j], g.format_vector(v));
    }
    if let Some(h) = &e.hermitian {
        if let Ok(om) = h.fundamental_form() {
            let _ = writeln!(s, "  Omega = {}", g.format_form(&om));
        }
    }
    if let Some(sd) = &e.sasaki {
        let _ = writeln!(s, "  phi = {}, eta = {}", g.format_form(sd.phi()), g.format_vector(sd.eta()));
    }
    if let Some(k) = &e.kahler {
        let _ = writeln!(s, "  Kähler omega = {}", k.algebra().format_form(k.omega()));
    }
    for (name, v) in &e.vectors {
        let _ = writeln!(s, "  {name} = {}", g.format_vector(v));
    }
    let _ = writeln!(s, "  expected:");
    for (k, v) in &e.expected {
        let _ = writeln!(s, "    {k} = {v}");
    }
    s
}

fn json_line(v: &serde_json::Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("json value");
    s.push('\n');
    s
}

pub fn render_report(r: &StructureReport, fmt: Format) -> String {
    match fmt {
        Format::Text => r.to_string(),
        Format::Json => json_line(&serde_json::to_value(r).expect("report serializes")),
    }
}

fn render_verdict(v: &ClassificationVerdict, fmt: Format) -> String {
    match fmt {
        Format::Text => format!("{v}\n"),
        Format::Json => json_line(&json!({
            "type": v.kind.to_string(),
            "center_dim": v.center_dim,
            "killing_inertia": [v.killing_inertia.0, v.killing_inertia.1, v.killing_inertia.2],
            "note": v.note,
        })),
    }
}

/// Result of checking one file in batch mode.
#[derive(Clone, Debug)]
pub struct FileResult {
    pub file: String,
    pub code: i32,
    pub report: Option<StructureReport>,
    pub error: Option<String>,
}

/// Checks every `.json` file of a directory independently (in parallel);
/// results are sorted by file name.
pub fn check_directory(dir: &Path, s: Structure) -> Result<Vec<FileResult>, String> {
    let mut files: Vec<PathBuf> = std::fs::read_dir(dir)
        .map_err(|e| format!("cannot read {}: {e}", dir.display()))?
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| p.is_file() && p.extension().is_some_and(|x| x == "json"))
        .collect();
    files.sort();
    Ok(files
        .par_iter()
        .map(|p| {
            let file = p.file_name().map(|f| f.to_string_lossy().into_owned()).unwrap_or_default();
            let result = std::fs::read_to_string(p)
                .map_err(|e| e.to_string())
                .and_then(|t| parse(&t).map_err(|e| e.to_string()))
                .and_then(|b| check_bundle(&b, s));
            match result {
                Ok(r) => FileResult {
                    file,
                    code: if r.pass { EXIT_OK } else { EXIT_FAILED },
                    report: Some(r),
                    error: None,
                },
                Err(e) => FileResult {
                    file,
                    code: EXIT_INPUT,
                    report: None,
                    error: Some(e),
                },
            }
        })
        .collect())
}

fn batch_check(dir: &Path, s: Structure, fmt: Format) -> Result<(i32, String), Failure> {
    let results = check_directory(dir, s).map_err(input)?;
    let code = results.iter().map(|r| r.code).max().unwrap_or(EXIT_OK);
    let out = match fmt {
        Format::Text => {
            let mut out = String::new();
            for r in &results {
                let _ = writeln!(out, "== {} ==", r.file);
                match (&r.report, &r.error) {
                    (Some(rep), _) => out.push_str(&rep.to_string()),
                    (None, Some(e)) => {
                        let _ = writeln!(out, "input error: {e}");
                    }
                    _ => {}
                }
            }
            out
        }
        Format::Json => json_line(&serde_json::Value::Array(
            results
                .iter()
                .map(|r| {
                    json!({
                        "file": r.file,
                        "structure": structure_name(s),
                        "exit": r.code,
                        "report": r.report,
                        "error": r.error,
                    })
                })
                .collect(),
        )),
    };
    match code {
        EXIT_OK => Ok((code, out)),
        EXIT_FAILED => Err(math(out, "some files failed the check")),
        _ => {
            // input errors in a batch are reported inline; keep the output
            Ok((code, out))
        }
    }
}
