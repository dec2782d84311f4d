mod error;
mod expr;
mod output;

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use lapgap::bounds::{effective_d, gap_bound_with_d, BoundReport};
use lapgap::extremal::{conjecture_probe, equality_case_check, verify_z_family, ProbeConfig, ProbeMode, ZParams};
use lapgap::linalg::IntMatrix;
use lapgap::operators::{bochner_split, boundary_matrix, coboundary_matrix, laplacian, laplacian_closed_form};
use lapgap::spectral::{betti_with_tolerance, profile_record, spectral_gap, ProfileRecord, ZERO_TOL};
use lapgap::{Simplex, SimplicialComplex};

use error::CliError;
use output::{fmt_float, json, Sink};

/// Reduced simplicial Laplacians: spectra, Betti numbers, degree bounds and
/// extremal complexes.
///
/// Complexes are given either as a constructor expression
/// (`skeleton(m,k)`, `simplex(m)`, `Z(d,t,r)`, `join(e1,e2)`, `clique(path)`,
/// `file(path)`) or with `--facets <path>`.
///
/// Exit codes: 0 success, 1 a checked statement failed, 2 input error.
#[derive(Parser)]
#[command(name = "lapgap", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,

    /// Write the report here instead of stdout.
    #[arg(short, long, global = true, value_name = "PATH")]
    output: Option<PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct Source {
    /// Constructor expression, e.g. `join(skeleton(1,0),Z(1,1,1))`.
    expr: Option<String>,

    /// Facet file: `n <count>` then one facet per line.
    #[arg(long, value_name = "PATH")]
    facets: Option<PathBuf>,
}

impl Source {
    fn load(&self) -> Result<SimplicialComplex, CliError> {
        match (&self.expr, &self.facets) {
            (Some(e), None) => expr::parse(e)?.build(),
            (None, Some(p)) => Ok(lapgap::parse_facet_file(&expr::read_file(p)?)?),
            _ => Err(CliError::Usage("give exactly one input source".into())),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum KSel {
    All,
    One(isize),
}

fn parse_k(s: &str) -> Result<KSel, String> {
    if s == "all" {
        return Ok(KSel::All);
    }
    s.parse().map(KSel::One).map_err(|_| format!("expected an integer or `all`, got `{s}`"))
}

impl KSel {
    fn dims(self, x: &SimplicialComplex) -> Vec<isize> {
        match self {
            KSel::All => (-1..=x.dim()).collect(),
            KSel::One(k) => vec![k],
        }
    }
}

#[derive(Args)]
struct KArg {
    /// Dimension to report, or `all`.
    #[arg(long, value_name = "INT|all", value_parser = parse_k, default_value = "all", allow_hyphen_values = true)]
    k: KSel,
}

#[derive(Args)]
struct DumpArg {
    /// Also write `L_k` in the sparse dump format (needs a single `--k`).
    #[arg(long, value_name = "PATH")]
    dump_matrix: Option<PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Mode {
    Exhaustive,
    Random,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Operator {
    /// `L_k` by composing coboundaries.
    Laplacian,
    /// `L_k` from the entrywise closed form.
    ClosedForm,
    /// `δ_k : C^k → C^{k+1}`.
    Coboundary,
    /// `∂_k`, the transpose of `δ_k`.
    Boundary,
    /// Diagonal part `D_k` of `L_k = D_k + K_k`.
    BochnerD,
    /// Signed-graph Laplacian `K_k`.
    BochnerK,
}

#[derive(Subcommand)]
enum Command {
    /// Build a complex and print it as a facet file (text) or summary (json).
    Build {
        #[command(flatten)]
        source: Source,
    },
    /// Gap, Betti number and full spectrum of `L_k`.
    Spectrum {
        #[command(flatten)]
        source: Source,
        #[command(flatten)]
        k: KArg,
        /// Grouping tolerance for multiplicities in text output.
        #[arg(long)]
        tol: Option<f64>,
        #[command(flatten)]
        dump: DumpArg,
    },
    /// Smallest eigenvalue `μ_k` of `L_k`.
    Gap {
        #[command(flatten)]
        source: Source,
        #[command(flatten)]
        k: KArg,
        #[command(flatten)]
        dump: DumpArg,
    },
    /// Reduced Betti numbers, numerically and over a prime field.
    Betti {
        #[command(flatten)]
        source: Source,
        #[command(flatten)]
        k: KArg,
        /// Zero threshold for the numerical kernel.
        #[arg(long)]
        tol: Option<f64>,
    },
    /// Minimal non-faces and `h(X)`.
    Missing {
        #[command(flatten)]
        source: Source,
    },
    /// Degree lower bound on `μ_k` with its Gershgorin chain, one JSON line per k.
    Bound {
        #[command(flatten)]
        source: Source,
        #[command(flatten)]
        k: KArg,
        /// Use this `d` instead of recomputing `h(X)`; checked against `h(X)` unless `--no-verify-d`.
        #[arg(long, value_name = "INT")]
        assume_d: Option<i64>,
        #[arg(long, requires = "assume_d")]
        no_verify_d: bool,
        /// Evaluate the bound with an arbitrary `d`; failed checks are reported but do not set the exit code.
        #[arg(long, value_name = "INT", conflicts_with = "assume_d")]
        experimental_d: Option<i64>,
    },
    /// Check the closed-form gaps and degrees of `Z(d,t,r)`.
    VerifyZ { d: usize, t: usize, r: usize },
    /// Test `μ_k = 2(k+1) - n` on a clique complex and match the canonical complex.
    Equality {
        #[command(flatten)]
        source: Source,
        #[command(flatten)]
        k: KArg,
    },
    /// Search complexes with `h(X) = d` for `μ_k = (d+1)(k+1) - dn`.
    Probe {
        #[arg(long)]
        d: usize,
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = Mode::Exhaustive)]
        mode: Mode,
        /// Exhaustive: cap on complexes examined. Random: sample count.
        #[arg(long)]
        budget: Option<u64>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Write an operator matrix in the sparse dump format.
    DumpMatrix {
        #[command(flatten)]
        source: Source,
        #[arg(long, allow_hyphen_values = true)]
        k: isize,
        #[arg(long, value_enum, default_value_t = Operator::Laplacian)]
        operator: Operator,
        /// Destination; defaults to the report output.
        #[arg(long, value_name = "PATH")]
        dump_matrix: Option<PathBuf>,
    },
}

fn write_file(path: &Path, text: &str) -> Result<(), CliError> {
    std::fs::write(path, text).map_err(|source| CliError::Io { path: path.to_path_buf(), source })
}

fn dump_laplacian(x: &SimplicialComplex, k: KSel, dump: &DumpArg) -> Result<(), CliError> {
    let Some(path) = &dump.dump_matrix else { return Ok(()) };
    let KSel::One(k) = k else {
        return Err(CliError::Usage("--dump-matrix needs a single --k".into()));
    };
    write_file(path, &laplacian(x, k)?.entries.dump())
}

fn facet_lists(x: &SimplicialComplex) -> Vec<Vec<usize>> {
    x.facets().iter().map(|f| f.vertices().to_vec()).collect()
}

#[derive(Serialize)]
struct BuildReport {
    n: usize,
    dim: isize,
    f_vector: Vec<usize>,
    facets: Vec<Vec<usize>>,
}

#[derive(Serialize)]
struct SpectrumReport {
    n: usize,
    dim: isize,
    profile: Vec<ProfileRecord>,
}

#[derive(Serialize)]
struct GapLine {
    k: isize,
    gap: f64,
}

#[derive(Serialize)]
struct BettiLine {
    k: isize,
    betti: usize,
}

#[derive(Serialize)]
struct MissingReport {
    n: usize,
    h: Option<isize>,
    missing_faces: Vec<Simplex>,
}

#[derive(Serialize)]
struct ProbeSummary {
    d: usize,
    n: usize,
    mode: ProbeMode,
    seed: u64,
    examined: u64,
    eigensolved: u64,
    complete: bool,
    hits: usize,
    counterexamples: usize,
    bound_violations: usize,
    canonical_found: Vec<isize>,
}

fn run(cli: &Cli) -> Result<(), CliError> {
    let mut out = Sink::open(cli.output.as_deref())?;
    let text = cli.format == Format::Text;
    let result = dispatch(cli, &mut out, text);
    out.flush()?;
    result
}

fn dispatch(cli: &Cli, out: &mut Sink, text: bool) -> Result<(), CliError> {
    match &cli.command {
        Command::Build { source } => {
            let x = source.load()?;
            if text {
                for line in x.to_facet_file().lines() {
                    out.line(line)?;
                }
            } else {
                out.line(&json(&BuildReport {
                    n: x.n(),
                    dim: x.dim(),
                    f_vector: x.f_vector(),
                    facets: facet_lists(&x),
                }))?;
            }
        }
        Command::Spectrum { source, k, tol, dump } => {
            let x = source.load()?;
            dump_laplacian(&x, k.k, dump)?;
            let profile = k.k.dims(&x).into_iter().map(|k| profile_record(&x, k)).collect::<Result<Vec<_>, _>>()?;
            if text {
                out.line(&format!("n = {}, dim = {}", x.n(), x.dim()))?;
                for rec in &profile {
                    let spectrum = rec.spectrum.clone().with_tolerance(tol.unwrap_or(lapgap::spectral::GROUPING_TOL));
                    let groups: Vec<String> =
                        spectrum.multiplicities().iter().map(|(v, m)| format!("{}^{m}", fmt_float(*v))).collect();
                    out.line(&format!(
                        "k = {:>2}  gap = {:<16} betti = {:<4} spectrum = {}",
                        rec.k,
                        fmt_float(rec.gap),
                        rec.betti,
                        groups.join(" ")
                    ))?;
                }
            } else {
                out.line(&json(&SpectrumReport { n: x.n(), dim: x.dim(), profile }))?;
            }
        }
        Command::Gap { source, k, dump } => {
            let x = source.load()?;
            dump_laplacian(&x, k.k, dump)?;
            for k in k.k.dims(&x) {
                let gap = spectral_gap(&x, k)?;
                out.line(&if text {
                    format!("k = {k:>2}  gap = {}", fmt_float(gap))
                } else {
                    json(&GapLine { k, gap })
                })?;
            }
        }
        Command::Betti { source, k, tol } => {
            let x = source.load()?;
            for k in k.k.dims(&x) {
                let betti = betti_with_tolerance(&x, k, tol.unwrap_or(ZERO_TOL))?;
                out.line(&if text { format!("k = {k:>2}  betti = {betti}") } else { json(&BettiLine { k, betti }) })?;
            }
        }
        Command::Missing { source } => {
            let x = source.load()?;
            let rep = x.missing_faces();
            if text {
                let h = rep.h.map_or("absent".to_string(), |h| h.to_string());
                out.line(&format!("n = {}, h = {h}", x.n()))?;
                for m in &rep.missing_faces {
                    out.line(&m.to_string())?;
                }
            } else {
                out.line(&json(&MissingReport { n: x.n(), h: rep.h, missing_faces: rep.missing_faces }))?;
            }
        }
        Command::Bound { source, k, assume_d, no_verify_d, experimental_d } => {
            let x = source.load()?;
            let (d, convention, experimental) = match (assume_d, experimental_d) {
                (Some(d), _) => {
                    if !no_verify_d {
                        let (h, _) = effective_d(&x);
                        if h != *d {
                            return Err(CliError::Usage(format!("--assume-d {d} but h(X) gives d = {h}")));
                        }
                    }
                    (*d, false, false)
                }
                (None, Some(d)) => (*d, false, true),
                (None, None) => {
                    let (d, c) = effective_d(&x);
                    (d, c, false)
                }
            };
            if d < 0 {
                return Err(CliError::Usage(format!("d must be non-negative, got {d}")));
            }
            let mut failures = Vec::new();
            for k in k.k.dims(&x) {
                let rep = gap_bound_with_d(&x, k, d, convention)?;
                failures.extend(rep.failures());
                out.line(&if text { bound_text(&rep) } else { json(&rep) })?;
            }
            if !failures.is_empty() {
                if experimental {
                    eprintln!("note: {} check(s) fail with d = {d}: {}", failures.len(), failures.join("; "));
                } else {
                    return Err(CliError::Assertion(failures.join("; ")));
                }
            }
        }
        Command::VerifyZ { d, t, r } => {
            let rep = verify_z_family(ZParams::new(*d, *t, *r)?)?;
            for row in &rep.rows {
                out.line(&if text {
                    format!(
                        "k = {:>2}  mu: predicted {} actual {} join {}  delta: predicted {} actual {}  {}",
                        row.k,
                        row.predicted_mu,
                        fmt_float(row.actual_mu),
                        fmt_float(row.join_mu),
                        row.predicted_delta,
                        row.actual_delta,
                        if row.ok { "ok" } else { "FAIL" }
                    )
                } else {
                    json(row)
                })?;
            }
            if !rep.ok() {
                return Err(CliError::Assertion(format!("Z({d},{t},{r}) deviates from its closed forms")));
            }
        }
        Command::Equality { source, k } => {
            let x = source.load()?;
            for k in k.k.dims(&x) {
                let v = equality_case_check(&x, k)?;
                out.line(&if text {
                    format!(
                        "k = {k:>2}  mu = {}  target = {}  holds = {}  witness = {:?}",
                        fmt_float(v.mu),
                        v.target,
                        v.holds,
                        v.canonical_iso
                    )
                } else {
                    json(&v)
                })?;
            }
        }
        Command::Probe { d, n, mode, budget, seed } => {
            let mode = match mode {
                Mode::Exhaustive => ProbeMode::Exhaustive,
                Mode::Random => ProbeMode::Random,
            };
            let rep = conjecture_probe(ProbeConfig { d: *d, n: *n, mode, budget: *budget, seed: *seed })?;
            for hit in &rep.hits {
                out.line(&if text {
                    format!(
                        "k = {}  mu = {}  target = {}  canonical = {}  facets = {:?}",
                        hit.k,
                        fmt_float(hit.mu),
                        hit.target,
                        hit.isomorphic_to_canonical,
                        hit.facets
                    )
                } else {
                    json(hit)
                })?;
            }
            let summary = ProbeSummary {
                d: rep.d,
                n: rep.n,
                mode: rep.mode,
                seed: rep.seed,
                examined: rep.examined,
                eigensolved: rep.eigensolved,
                complete: rep.complete,
                hits: rep.hits.len(),
                counterexamples: rep.counterexamples,
                bound_violations: rep.bound_violations.len(),
                canonical_found: rep.canonical_found.clone(),
            };
            eprintln!("{}", json(&summary));
            if mode == ProbeMode::Exhaustive && !rep.complete {
                eprintln!("note: budget exhausted; report is incomplete");
            }
            if !rep.bound_violations.is_empty() {
                return Err(CliError::Assertion(format!("lower bound violated: {}", json(&rep.bound_violations))));
            }
        }
        Command::DumpMatrix { source, k, operator, dump_matrix } => {
            let x = source.load()?;
            let m: IntMatrix = match operator {
                Operator::Laplacian => laplacian(&x, *k)?.entries,
                Operator::ClosedForm => laplacian_closed_form(&x, *k)?.entries,
                Operator::Coboundary => coboundary_matrix(&x, *k)?.entries,
                Operator::Boundary => boundary_matrix(&x, *k)?.entries,
                Operator::BochnerD => bochner_split(&x, *k)?.d,
                Operator::BochnerK => bochner_split(&x, *k)?.k_matrix,
            };
            match dump_matrix {
                Some(path) => write_file(path, &m.dump())?,
                None => {
                    for line in m.dump().lines() {
                        out.line(line)?;
                    }
                }
            }
        }
    }
    Ok(())
}

fn bound_text(r: &BoundReport) -> String {
    format!(
        "k = {:>2}  d = {}{}  delta = {}  bound = {}  degree min = {}  gershgorin = {}  mu = {}  tight = {}  {}",
        r.k,
        r.d,
        if r.d_convention { " (no missing faces)" } else { "" },
        r.delta_k,
        r.degree_bound,
        r.degree_min,
        r.gershgorin_bound,
        fmt_float(r.mu_k),
        r.tight,
        if r.ok() { "ok" } else { "FAIL" }
    )
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("lapgap: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
