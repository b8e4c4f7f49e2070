use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use multideg::bifiltered::{multidegree_fv, slope_scan, BifilteredPresentation};
use multideg::hypergeom::{self, Beta, GkzSystem};
use multideg::poly::text::format_polynomial;
use multideg::{Error, Rational};
use serde::Deserialize;
use serde_json::{json, Value};

#[derive(Parser)]
#[command(name = "multideg", version, about = "K-polynomials and multidegrees of bifiltered D-modules")]
struct Cli {
    #[command(subcommand)]
    verb: Verb,
    /// Master seed for every random draw.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// `generic`, or comma-separated rationals. `scan-beta` takes several
    /// separated by `;`.
    #[arg(long, global = true, allow_hyphen_values = true)]
    beta: Option<String>,
    /// Slopes `p/q`, comma-separated.
    #[arg(long, global = true, allow_hyphen_values = true)]
    slopes: Option<String>,
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Append wall-clock timings to the report.
    #[arg(long, global = true)]
    timings: bool,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Subcommand)]
enum Verb {
    /// Generators of the toric ideal of a matrix.
    Toric { input: PathBuf },
    /// Multidegree of a presentation file.
    Multidegree { input: PathBuf },
    /// Full analysis of the hypergeometric system of a matrix.
    Hypergeom { input: PathBuf },
    /// Homogeneity, pointedness, Cohen-Macaulayness and volume.
    Check { input: PathBuf },
    /// Closed-form multidegree `vol * sum C(n-d, j-d) T1^j T2^(n-j)`.
    Formula { input: PathBuf },
    /// Group slopes by their `gr^L`.
    Grl { input: PathBuf },
    /// Multidegrees for a list of parameters.
    ScanBeta { input: PathBuf },
}

impl Verb {
    fn name(&self) -> &'static str {
        match self {
            Verb::Toric { .. } => "toric",
            Verb::Multidegree { .. } => "multidegree",
            Verb::Hypergeom { .. } => "hypergeom",
            Verb::Check { .. } => "check",
            Verb::Formula { .. } => "formula",
            Verb::Grl { .. } => "grl",
            Verb::ScanBeta { .. } => "scan-beta",
        }
    }
}

#[derive(Debug, thiserror::Error)]
enum CliError {
    #[error("{path}: {msg}")]
    Io { path: String, msg: String },
    #[error("{0}")]
    Json(String),
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Core(#[from] Error),
}

/// A failure together with the pipeline stage it came from.
struct Failure {
    stage: &'static str,
    err: CliError,
}

impl Failure {
    fn at(stage: &'static str) -> impl FnOnce(CliError) -> Failure {
        move |err| Failure { stage, err }
    }

    fn to_json(&self) -> Value {
        let kind = match &self.err {
            CliError::Io { .. } => "io",
            CliError::Json(_) => "json",
            CliError::Usage(_) => "usage",
            CliError::Core(e) => core_kind(e),
        };
        let mut obj = json!({ "kind": kind, "stage": self.stage, "message": self.err.to_string() });
        if let CliError::Core(Error::Syntax { line, col, .. }) = &self.err {
            obj["line"] = json!(line);
            obj["col"] = json!(col);
        }
        json!({ "error": obj })
    }
}

fn core_kind(e: &Error) -> &'static str {
    match e {
        Error::Coeff(_) => "coefficient",
        Error::RingMismatch(_) => "ring_mismatch",
        Error::ZeroElement => "zero_element",
        Error::BadOrder(_) => "bad_order",
        Error::NotHomogeneous { .. } => "not_homogeneous",
        Error::NonPositiveGrading => "non_positive_grading",
        Error::SpecializationExhausted { .. } => "specialization_exhausted",
        Error::NotHolonomic { .. } => "not_holonomic",
        Error::NotNice => "not_nice",
        Error::BadMatrix(_) => "bad_matrix",
        Error::Degenerate(_) => "degenerate",
        Error::Syntax { .. } => "syntax",
        Error::Invalid(_) => "invalid",
    }
}

type Outcome<T> = Result<T, Failure>;

/// A report: the JSON value and its plain-text rendering.
struct Report {
    json: Value,
    text: String,
}

fn read(path: &Path) -> Outcome<String> {
    fs::read_to_string(path)
        .map_err(|e| CliError::Io { path: path.display().to_string(), msg: e.to_string() })
        .map_err(Failure::at("read"))
}

#[derive(Deserialize)]
struct MatrixInput {
    #[serde(flatten)]
    system: GkzSystem,
    #[serde(default)]
    betas: Vec<Vec<Rational>>,
}

fn read_matrix(path: &Path) -> Outcome<MatrixInput> {
    let text = read(path)?;
    let m: MatrixInput = serde_json::from_str(&text).map_err(|e| Failure::at("parse")(CliError::Json(e.to_string())))?;
    let system = GkzSystem::new(m.system.a, m.system.beta).map_err(|e| Failure::at("parse")(e.into()))?;
    for b in &m.betas {
        if b.len() != system.d() {
            return Err(Failure::at("parse")(CliError::Usage(format!("β {} has {} entries for {} rows", csv(b), b.len(), system.d()))));
        }
    }
    Ok(MatrixInput { system, betas: m.betas })
}

fn read_presentation(path: &Path) -> Outcome<BifilteredPresentation> {
    BifilteredPresentation::parse(&read(path)?).map_err(|e| Failure::at("parse")(e.into()))
}

fn parse_beta(s: &str) -> Result<Beta, CliError> {
    if s.trim() == "generic" {
        return Ok(Beta::Generic);
    }
    s.split(',')
        .map(|x| x.trim().parse::<Rational>().map_err(|e| CliError::Usage(format!("bad β entry {x:?}: {e}"))))
        .collect::<Result<Vec<_>, _>>()
        .map(Beta::Values)
}

fn parse_slopes(s: &str) -> Result<Vec<(i64, i64)>, CliError> {
    s.split(',')
        .map(|w| {
            let bad = || CliError::Usage(format!("bad slope {w:?}, expected p/q"));
            let (p, q) = w.trim().split_once('/').ok_or_else(bad)?;
            Ok((p.trim().parse().map_err(|_| bad())?, q.trim().parse().map_err(|_| bad())?))
        })
        .collect()
}

fn csv(v: &[Rational]) -> String {
    v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
}

fn to_json<T: serde::Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("reports serialize")
}

fn run(cli: &Cli) -> Outcome<Report> {
    let stage = cli.verb.name();
    let fail = |e: Error| Failure { stage, err: e.into() };
    match &cli.verb {
        Verb::Toric { input } => {
            let m = read_matrix(input)?;
            let gens = hypergeom::toric_ideal(&m.system.a).map_err(fail)?;
            let names: Vec<String> = (1..=m.system.n()).map(|j| format!("dt{j}")).collect();
            let gens: Vec<String> = gens.iter().map(|g| format_polynomial(g, &names)).collect();
            let text = gens.join("\n");
            Ok(Report { json: json!({ "A": m.system.a, "toric_ideal": gens }), text })
        }
        Verb::Multidegree { input } => {
            let m = read_presentation(input)?;
            let r = multidegree_fv(&m, cli.seed).map_err(fail)?;
            let text = format!("K = {}\ncodim = {}\nmultidegree = {}\nnice = {}", r.k_polynomial, r.codim, r.multidegree, r.nice);
            Ok(Report { json: to_json(&r), text })
        }
        Verb::Hypergeom { input } => {
            let m = read_matrix(input)?;
            let beta = match &cli.beta {
                Some(s) => parse_beta(s).map_err(Failure::at("arguments"))?,
                None => m.system.beta.clone(),
            };
            let system = GkzSystem::new(m.system.a, beta).map_err(|e| Failure::at("arguments")(e.into()))?;
            let r = hypergeom::analyze(&system.a, &system.beta, cli.seed).map_err(fail)?;
            let text = format!(
                "beta = {}{}\nmultidegree = {}\nnice = {}\nvolume = {}\nclosed form = {}\nformula match = {}",
                csv(&r.beta),
                if r.generic { " (generic)" } else { "" },
                r.multidegree.multidegree,
                r.multidegree.nice,
                r.volume,
                r.closed_form,
                r.formula_match
            );
            Ok(Report { json: to_json(&r), text })
        }
        Verb::Check { input } => {
            let a = read_matrix(input)?.system.a;
            let (pointed, witness) = hypergeom::is_pointed(&a);
            let homogeneous = hypergeom::is_homogeneous(&a);
            let cm = hypergeom::cohen_macaulay(&a).map_err(fail)?;
            let volume = hypergeom::volume(&a).map_err(fail)?;
            let by_degree = hypergeom::volume_by_degree(&a).map_err(fail)?;
            let text = format!("homogeneous = {homogeneous}\npointed = {pointed}\ncohen_macaulay = {cm}\nvolume = {volume}");
            let json = json!({
                "homogeneous": homogeneous,
                "pointed": pointed,
                "pointed_witness": witness,
                "cohen_macaulay": cm,
                "volume": volume,
                "volume_by_degree": by_degree,
            });
            Ok(Report { json, text })
        }
        Verb::Formula { input } => {
            let a = read_matrix(input)?.system.a;
            let f = hypergeom::closed_form_multidegree(&a).map_err(fail)?;
            let text = f.to_string();
            Ok(Report { json: json!({ "A": a, "closed_form": text }), text })
        }
        Verb::Grl { input } => {
            let m = read_presentation(input)?;
            let slopes = cli.slopes.as_deref().ok_or_else(|| Failure::at("arguments")(CliError::Usage("grl needs --slopes".into())))?;
            let slopes = parse_slopes(slopes).map_err(Failure::at("arguments"))?;
            let groups = slope_scan(&m, &slopes).map_err(fail)?;
            let text = groups
                .iter()
                .map(|g| {
                    let s: Vec<String> = g.slopes.iter().map(|(p, q)| format!("{p}/{q}")).collect();
                    format!("[{}]\n  {}", s.join(", "), g.basis.join("\n  "))
                })
                .collect::<Vec<_>>()
                .join("\n");
            Ok(Report { json: json!({ "groups": to_json(&groups) }), text })
        }
        Verb::ScanBeta { input } => {
            let m = read_matrix(input)?;
            let mut betas = m.betas;
            if let Some(s) = &cli.beta {
                betas.clear();
                for part in s.split(';') {
                    match parse_beta(part).map_err(Failure::at("arguments"))? {
                        Beta::Values(b) if b.len() == m.system.d() => betas.push(b),
                        Beta::Values(b) => {
                            return Err(Failure::at("arguments")(CliError::Usage(format!("β {} has the wrong length", csv(&b)))))
                        }
                        Beta::Generic => return Err(Failure::at("arguments")(CliError::Usage("scan-beta needs explicit β".into()))),
                    }
                }
            }
            if betas.is_empty() {
                if let Beta::Values(b) = m.system.beta {
                    betas.push(b);
                }
            }
            if betas.is_empty() {
                return Err(Failure::at("arguments")(CliError::Usage("no β to scan; pass --beta or a \"betas\" list".into())));
            }
            let entries = hypergeom::scan_beta(&m.system.a, &betas, cli.seed).map_err(fail)?;
            let text = entries.iter().map(|e| format!("{}: {} (nice = {})", csv(&e.beta), e.multidegree, e.nice)).collect::<Vec<_>>().join("\n");
            Ok(Report { json: json!({ "A": m.system.a, "scan": to_json(&entries) }), text })
        }
    }
}

fn emit(cli: &Cli, body: &str) -> Result<(), Failure> {
    match &cli.out {
        Some(p) => fs::write(p, body).map_err(|e| Failure::at("write")(CliError::Io { path: p.display().to_string(), msg: e.to_string() })),
        None => {
            let _ = std::io::stdout().write_all(body.as_bytes());
            Ok(())
        }
    }
}

fn render_failure(f: &Failure, format: Format) {
    match format {
        Format::Json => println!("{}", serde_json::to_string_pretty(&f.to_json()).unwrap()),
        Format::Text => eprintln!("error ({}): {}", f.stage, f.err),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) if !e.use_stderr() => {
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            let f = Failure { stage: "arguments", err: CliError::Usage(e.kind().to_string()) };
            render_failure(&f, Format::Json);
            let _ = e.print();
            return ExitCode::from(2);
        }
    };
    let start = Instant::now();
    let outcome = run(&cli).and_then(|mut r| {
        let ms = start.elapsed().as_secs_f64() * 1e3;
        let body = match cli.format {
            Format::Json => {
                if cli.timings {
                    r.json["timings_ms"] = json!({ "total": ms });
                }
                serde_json::to_string_pretty(&r.json).unwrap() + "\n"
            }
            Format::Text => {
                if cli.timings {
                    r.text.push_str(&format!("\ntime = {ms:.1} ms"));
                }
                r.text + "\n"
            }
        };
        emit(&cli, &body)
    });
    match outcome {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            render_failure(&f, cli.format);
            ExitCode::FAILURE
        }
    }
}
