//! Command-line surface for the R_II-type polynomial library: sequence
//! generation, zero tables with embedded reference digits, perturbation
//! routes with cross-checking, chain-sequence reports, unit-circle
//! coefficients, figure datasets, electrostatic energy, and a built-in
//! invariant suite.
//!
//! Exit codes: 0 success, 1 I/O or internal error, 2 usage error, 3 numeric
//! mismatch against reference data or between computation routes, 4 violated
//! mathematical invariant. The `R2SPECTRA_TOL` environment variable overrides
//! the default comparison tolerance where one applies.

mod familyspec;
mod golden;
mod output;
mod selftest;
mod tablespec;

use clap::{Parser, Subcommand, ValueEnum};
use num_complex::Complex64;
use output::{csv, emit, json, sig10, sig10_complex};
use r2spectra_core::zeros::classify_real;
use r2spectra_core::{
    generate_associated, generate_first, generate_second, perturb_direct, perturb_via_structure,
    perturb_via_transfer, roots, tol, ChainSeq, Error as CoreError, PerturbationSpec, Poly,
    PolySequence, RecurrenceFamily, Verdict,
};
use std::path::PathBuf;
use std::process::ExitCode;

/// A command outcome that maps onto the documented exit codes.
#[derive(Debug)]
pub enum Failure {
    /// Bad invocation or unusable configuration — exit 2.
    Usage(String),
    /// Computed values disagree with reference data or with each other — exit 3.
    Numeric(String),
    /// A mathematical invariant failed — exit 4.
    Invariant(String),
    /// File-system problem — exit 1.
    Io(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Io(_) => 1,
            Failure::Usage(_) => 2,
            Failure::Numeric(_) => 3,
            Failure::Invariant(_) => 4,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Usage(m) | Failure::Numeric(m) | Failure::Invariant(m) | Failure::Io(m) => m,
        }
    }
}

impl From<CoreError> for Failure {
    fn from(e: CoreError) -> Self {
        match e {
            CoreError::InvalidFamily(_)
            | CoreError::NonPositiveLambda { .. }
            | CoreError::DegreeCapExceeded { .. }
            | CoreError::LevelOutOfRange { .. }
            | CoreError::InvalidPerturbation(_)
            | CoreError::SizeCapExceeded { .. }
            | CoreError::Config(_) => Failure::Usage(e.to_string()),
            CoreError::NotAChainSequence { .. } | CoreError::InvalidDilation { .. } => {
                Failure::Numeric(e.to_string())
            }
            CoreError::IdentityViolation { .. }
            | CoreError::ConvergenceFailure { .. }
            | CoreError::CoincidentPoints(_)
            | CoreError::InvalidVerblunsky { .. }
            | CoreError::InconsistentInput { .. }
            | CoreError::DegenerateGrid
            | CoreError::InvariantViolation(_) => Failure::Invariant(e.to_string()),
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Io(e.to_string())
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Csv,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Kind {
    First,
    Second,
    Associated,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Route {
    All,
    Direct,
    Structure,
    Transfer,
}

#[derive(Parser)]
#[command(
    name = "r2spectra",
    version,
    about = "Numerics for R_II-type orthogonal polynomial sequences"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Generate a polynomial sequence and print its coefficients.
    Gen {
        /// Builtin name (example1, lambda2half, crr(ζ,θ), crr_offset(ζ,θ),
        /// chebyshev_r2(a,b)), inline JSON, or a JSON file path.
        #[arg(long)]
        family: String,
        /// Highest degree to generate.
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = Kind::First)]
        kind: Kind,
        /// Index shift r for the associated sequence.
        #[arg(long, default_value_t = 1)]
        order: usize,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Zeros of the degree-n polynomial, optionally after a perturbation.
    Zeros {
        #[arg(long)]
        family: String,
        #[arg(long)]
        n: usize,
        /// Perturbation JSON: {"entries": [{"k": 3, "mu": -0.3, "nu": 1.0}]}.
        #[arg(long)]
        perturb: Option<String>,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Perturbed sequences, cross-checked across independent routes.
    Perturb {
        #[arg(long)]
        family: String,
        #[arg(long)]
        perturb: String,
        #[arg(long)]
        n: usize,
        /// Which route's coefficients to print; `all` also cross-checks them.
        #[arg(long, value_enum, default_value_t = Route::All)]
        route: Route,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Chain-sequence report: values, minimal/maximal parameters,
    /// complementary values, and the parameter-uniqueness series test.
    Chain {
        /// Family whose λ sequence provides the chain values.
        #[arg(long, conflicts_with = "constant")]
        family: Option<String>,
        /// Constant chain value d_n = v instead of a family.
        #[arg(long)]
        constant: Option<f64>,
        /// Number of leading indices to report.
        #[arg(long, default_value_t = 20)]
        count: usize,
        /// Backward-recursion horizon for the maximal parameters.
        #[arg(long, default_value_t = 1_000_000)]
        horizon: usize,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Unit-circle coefficients: α, rotation chain τ, and the second-system β.
    Verblunsky {
        #[arg(long)]
        family: String,
        /// How many coefficients α_0 … α_{count−1} to emit.
        #[arg(long, default_value_t = 20)]
        count: usize,
        /// Also emit the α of the perturbed family.
        #[arg(long)]
        perturb: Option<String>,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Regenerate reference table 1–7 and compare against embedded digits.
    Table {
        /// Table number, 1–7.
        id: u8,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Zero sets plotted by figure 1–12, as labeled series.
    Figdata {
        /// Figure number, 1–12.
        id: u8,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Electrostatic energy of the degree-n zero configuration.
    Energy {
        #[arg(long)]
        family: String,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        perturb: Option<String>,
        /// Field strength ζ of the log(1+x²) term.
        #[arg(long, default_value_t = 0.0)]
        zeta: f64,
        /// Field strength θ of the arctan term.
        #[arg(long, default_value_t = 0.0)]
        theta: f64,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run the full invariant suite and print a pass/fail matrix.
    Selftest,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.cmd) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.message());
            ExitCode::from(f.code())
        }
    }
}

/// Comparison tolerance: the `R2SPECTRA_TOL` environment variable when set,
/// otherwise the given default.
fn comparison_tol(default: f64) -> Result<f64, Failure> {
    match std::env::var("R2SPECTRA_TOL") {
        Err(_) => Ok(default),
        Ok(raw) => raw
            .trim()
            .parse::<f64>()
            .ok()
            .filter(|t| *t > 0.0)
            .ok_or_else(|| {
                Failure::Usage(format!(
                    "R2SPECTRA_TOL must be a positive number, got '{raw}'"
                ))
            }),
    }
}

fn run(cmd: Cmd) -> Result<(), Failure> {
    match cmd {
        Cmd::Gen {
            family,
            n,
            kind,
            order,
            format,
            out,
        } => {
            let fam = familyspec::resolve_family(&family)?;
            let seq = match kind {
                Kind::First => generate_first(&fam, n)?,
                Kind::Second => generate_second(&fam, n)?,
                Kind::Associated => generate_associated(&fam, order, n)?,
            };
            let content = match format {
                Format::Csv => coefficients_csv(&[("p", &seq)]),
                Format::Json => json(&serde_json::json!({
                    "family": fam.name,
                    "kind": match kind {
                        Kind::First => "first",
                        Kind::Second => "second",
                        Kind::Associated => "associated",
                    },
                    "order": if kind == Kind::Associated { order } else { 0 },
                    "polynomials": coefficients_json(&seq),
                })),
            };
            emit(out.as_deref(), &content)?;
            Ok(())
        }
        Cmd::Zeros {
            family,
            n,
            perturb,
            format,
            out,
        } => {
            let fam = familyspec::resolve_family(&family)?;
            let mut series: Vec<(String, Vec<Complex64>)> = Vec::new();
            let base = generate_first(&fam, n)?;
            series.push((format!("P{n}"), roots(&base[n])?));
            if let Some(arg) = perturb {
                let spec = familyspec::resolve_perturbation(&arg)?;
                let (p, _) = perturb_direct(&fam, &spec, n)?;
                series.push((format!("P{n}_perturbed"), roots(&p[n])?));
            }
            // Sorted real zeros first, genuinely complex ones after them.
            let classified: Vec<(String, Vec<f64>, Vec<Complex64>)> = series
                .iter()
                .map(|(label, zs)| {
                    let (mut real, complex) = classify_real(zs);
                    real.sort_by(|a, b| a.partial_cmp(b).unwrap());
                    (label.clone(), real, complex)
                })
                .collect();
            let content = match format {
                Format::Csv => {
                    let header: Vec<String> =
                        classified.iter().map(|(l, _, _)| l.clone()).collect();
                    let rows: Vec<Vec<String>> = (0..n)
                        .map(|i| {
                            classified
                                .iter()
                                .map(|(_, real, complex)| {
                                    if i < real.len() {
                                        sig10(real[i])
                                    } else {
                                        sig10_complex(complex[i - real.len()])
                                    }
                                })
                                .collect()
                        })
                        .collect();
                    csv(&header, &rows)
                }
                Format::Json => {
                    let items: Vec<serde_json::Value> = classified
                        .iter()
                        .map(|(label, real, complex)| {
                            serde_json::json!({
                                "label": label,
                                "real": real,
                                "complex": complex.iter().map(|&z| output::complex_json(z)).collect::<Vec<_>>(),
                            })
                        })
                        .collect();
                    json(&serde_json::json!({
                        "family": fam.name, "n": n, "series": items,
                    }))
                }
            };
            emit(out.as_deref(), &content)?;
            Ok(())
        }
        Cmd::Perturb {
            family,
            perturb,
            n,
            route,
            format,
            out,
        } => {
            let fam = familyspec::resolve_family(&family)?;
            let spec = familyspec::resolve_perturbation(&perturb)?;
            cmd_perturb(&fam, &spec, n, route, format, out)
        }
        Cmd::Chain {
            family,
            constant,
            count,
            horizon,
            format,
            out,
        } => {
            let (label, chain) = match (family, constant) {
                (Some(f), None) => {
                    let fam = familyspec::resolve_family(&f)?;
                    (fam.name.clone(), ChainSeq::from_family(&fam))
                }
                (None, Some(v)) => (format!("constant {v}"), ChainSeq::constant(v)),
                _ => {
                    return Err(Failure::Usage(
                        "chain needs exactly one of --family or --constant".into(),
                    ))
                }
            };
            cmd_chain(&label, &chain, count, horizon, format, out)
        }
        Cmd::Verblunsky {
            family,
            count,
            perturb,
            format,
            out,
        } => {
            let fam = familyspec::resolve_family(&family)?;
            let spec = perturb
                .map(|arg| familyspec::resolve_perturbation(&arg))
                .transpose()?;
            cmd_verblunsky(&fam, count, spec.as_ref(), format, out)
        }
        Cmd::Table { id, format, out } => cmd_table(id, format, out),
        Cmd::Figdata { id, format, out } => cmd_figdata(id, format, out),
        Cmd::Energy {
            family,
            n,
            perturb,
            zeta,
            theta,
            format,
            out,
        } => {
            let fam = familyspec::resolve_family(&family)?;
            let spec = perturb
                .map(|arg| familyspec::resolve_perturbation(&arg))
                .transpose()?;
            cmd_energy(&fam, n, spec.as_ref(), zeta, theta, format, out)
        }
        Cmd::Selftest => {
            if selftest::run() {
                Ok(())
            } else {
                Err(Failure::Invariant(
                    "invariant suite reported failures".into(),
                ))
            }
        }
    }
}

// ---------------------------------------------------------------------------
// Shared output assembly
// ---------------------------------------------------------------------------

/// CSV long form for polynomial sequences: kind,m,j,re,im.
fn coefficients_csv(seqs: &[(&str, &PolySequence)]) -> String {
    let header = vec![
        "kind".to_string(),
        "m".to_string(),
        "j".to_string(),
        "re".to_string(),
        "im".to_string(),
    ];
    let mut rows = Vec::new();
    for (kind, seq) in seqs {
        for m in 0..=seq.max_index() {
            for (j, c) in seq[m].coeffs().iter().enumerate() {
                rows.push(vec![
                    kind.to_string(),
                    m.to_string(),
                    j.to_string(),
                    sig10(c.re),
                    sig10(c.im),
                ]);
            }
        }
    }
    csv(&header, &rows)
}

fn coefficients_json(seq: &PolySequence) -> Vec<serde_json::Value> {
    (0..=seq.max_index())
        .map(|m| {
            serde_json::json!({
                "m": m,
                "coeffs": seq[m].coeffs().iter().map(|&c| output::complex_json(c)).collect::<Vec<_>>(),
            })
        })
        .collect()
}

fn seq_distance(a: &PolySequence, b: &PolySequence) -> f64 {
    (0..=a.max_index().min(b.max_index()))
        .map(|m| a[m].rel_distance(&b[m]))
        .fold(0.0, f64::max)
}

// ---------------------------------------------------------------------------
// perturb
// ---------------------------------------------------------------------------

fn cmd_perturb(
    fam: &RecurrenceFamily,
    spec: &PerturbationSpec,
    n: usize,
    route: Route,
    format: Format,
    out: Option<PathBuf>,
) -> Result<(), Failure> {
    let tolerance = comparison_tol(1e-8)?;
    let (first, second, checked, max_dist) = match route {
        Route::Direct => {
            let (p, q) = perturb_direct(fam, spec, n)?;
            (p, q, false, 0.0)
        }
        Route::Structure => {
            let (p, q) = perturb_via_structure(fam, spec, n)?;
            (p, q, false, 0.0)
        }
        Route::Transfer => {
            let (p, q) = perturb_via_transfer(fam, spec, n)?;
            (p, q, false, 0.0)
        }
        Route::All => {
            let (pd, qd) = perturb_direct(fam, spec, n)?;
            let (ps, qs) = perturb_via_structure(fam, spec, n)?;
            let (pt, qt) = perturb_via_transfer(fam, spec, n)?;
            let mut worst = 0.0f64;
            for (a, b) in [(&pd, &ps), (&pd, &pt), (&ps, &pt)] {
                worst = worst.max(seq_distance(a, b));
            }
            for (a, b) in [(&qd, &qs), (&qd, &qt), (&qs, &qt)] {
                worst = worst.max(seq_distance(a, b));
            }
            (pd, qd, true, worst)
        }
    };
    if checked {
        eprintln!(
            "route agreement: max pairwise relative distance {max_dist:.3e} (tolerance {tolerance:.1e})"
        );
    }
    let content = match format {
        Format::Csv => coefficients_csv(&[("first", &first), ("second", &second)]),
        Format::Json => json(&serde_json::json!({
            "family": fam.name,
            "n": n,
            "routes_cross_checked": checked,
            "max_route_distance": if checked { Some(max_dist) } else { None },
            "tolerance": tolerance,
            "first": coefficients_json(&first),
            "second": coefficients_json(&second),
        })),
    };
    emit(out.as_deref(), &content)?;
    if checked && max_dist > tolerance {
        return Err(Failure::Numeric(format!(
            "perturbation routes disagree: {max_dist:.3e} > {tolerance:.1e}"
        )));
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// chain
// ---------------------------------------------------------------------------

fn cmd_chain(
    label: &str,
    chain: &ChainSeq,
    count: usize,
    horizon: usize,
    format: Format,
    out: Option<PathBuf>,
) -> Result<(), Failure> {
    if count == 0 {
        return Err(Failure::Usage("--count must be at least 1".into()));
    }
    let minimal = chain.minimal_params(count)?;
    let maximal = chain.maximal_params_approx(count, horizon)?;
    let complement = chain.complementary(count)?;
    let values: Vec<f64> = (1..=count)
        .map(|n| chain.value(n))
        .collect::<Result<_, _>>()?;
    let comp_values: Vec<f64> = (1..=count)
        .map(|n| complement.value(n))
        .collect::<Result<_, _>>()?;
    let wall = r2spectra_core::wall_heuristic(chain, 100_000)?;
    let verdict = match wall.verdict {
        Verdict::DivergesLikely => "diverges-likely (single parameter sequence)",
        Verdict::ConvergesLikely => "converges-likely (interval of parameter sequences)",
        Verdict::Inconclusive => "inconclusive",
    };
    let content = match format {
        Format::Csv => {
            let header: Vec<String> = ["n", "value", "minimal", "maximal", "complementary"]
                .iter()
                .map(|s| s.to_string())
                .collect();
            let rows: Vec<Vec<String>> = (0..count)
                .map(|i| {
                    vec![
                        (i + 1).to_string(),
                        sig10(values[i]),
                        sig10(minimal[i]),
                        sig10(maximal[i]),
                        sig10(comp_values[i]),
                    ]
                })
                .collect();
            eprintln!(
                "{label}: series test {verdict}, partial sum {:.6e}",
                wall.sum
            );
            csv(&header, &rows)
        }
        Format::Json => json(&serde_json::json!({
            "chain": label,
            "values": values,
            "minimal_params": minimal,
            "maximal_params_horizon": horizon,
            "maximal_params": maximal,
            "complementary_values": comp_values,
            "series_test": {
                "verdict": verdict,
                "partial_sum": wall.sum,
                "checkpoints": wall.checkpoints,
            },
        })),
    };
    emit(out.as_deref(), &content)?;
    Ok(())
}

// ---------------------------------------------------------------------------
// verblunsky
// ---------------------------------------------------------------------------

fn cmd_verblunsky(
    fam: &RecurrenceFamily,
    count: usize,
    spec: Option<&PerturbationSpec>,
    format: Format,
    out: Option<PathBuf>,
) -> Result<(), Failure> {
    let alpha = r2spectra_core::verblunsky(fam, count)?;
    let tau = r2spectra_core::tau_sequence(fam, count)?;
    let beta = r2spectra_core::verblunsky_complementary(fam, count)?;
    let alpha_pert = spec
        .map(|s| r2spectra_core::verblunsky_perturbed(fam, s, count))
        .transpose()?;
    let content = match format {
        Format::Csv => {
            let mut header: Vec<String> = [
                "n", "alpha_re", "alpha_im", "tau_re", "tau_im", "beta_re", "beta_im",
            ]
            .iter()
            .map(|s| s.to_string())
            .collect();
            if alpha_pert.is_some() {
                header.push("alpha_perturbed_re".to_string());
                header.push("alpha_perturbed_im".to_string());
            }
            let rows: Vec<Vec<String>> = (0..count)
                .map(|i| {
                    let mut row = vec![
                        (i + 1).to_string(),
                        sig10(alpha[i].re),
                        sig10(alpha[i].im),
                        sig10(tau[i + 1].re),
                        sig10(tau[i + 1].im),
                        sig10(beta[i].re),
                        sig10(beta[i].im),
                    ];
                    if let Some(ap) = &alpha_pert {
                        row.push(sig10(ap[i].re));
                        row.push(sig10(ap[i].im));
                    }
                    row
                })
                .collect();
            csv(&header, &rows)
        }
        Format::Json => json(&serde_json::json!({
            "family": fam.name,
            "alpha": alpha.iter().map(|&z| output::complex_json(z)).collect::<Vec<_>>(),
            "tau": tau.iter().map(|&z| output::complex_json(z)).collect::<Vec<_>>(),
            "beta": beta.iter().map(|&z| output::complex_json(z)).collect::<Vec<_>>(),
            "alpha_perturbed": alpha_pert.map(|v| v.iter().map(|&z| output::complex_json(z)).collect::<Vec<_>>()),
        })),
    };
    emit(out.as_deref(), &content)?;
    Ok(())
}

// ---------------------------------------------------------------------------
// table
// ---------------------------------------------------------------------------

fn cmd_table(id: u8, format: Format, out: Option<PathBuf>) -> Result<(), Failure> {
    let cfg = tablespec::table_config(id)
        .ok_or_else(|| Failure::Usage(format!("table id must be 1–7, got {id}")))?;
    let gold = golden::golden(id).expect("every table config has golden digits");
    let tolerance = comparison_tol(tol::TABLE_ABS)?;
    let computed = tablespec::compute_table(cfg)?;
    let mut max_diff = 0.0f64;
    let mut columns_json = Vec::new();
    let mut header: Vec<String> = vec!["row".to_string()];
    let mut cell_columns: Vec<(Vec<String>, Vec<String>, Vec<String>)> = Vec::new();
    for (ci, col) in cfg.columns.iter().enumerate() {
        let label = gold.labels[ci];
        debug_assert_eq!(label, col.label);
        let reference_sorted = {
            // Keep the printed strings attached to their parsed values while
            // sorting, so the emitted reference column stays verbatim.
            let mut pairs: Vec<(&str, f64)> = gold.columns[ci]
                .iter()
                .map(|s| (*s, s.parse::<f64>().expect("golden digits parse")))
                .collect();
            pairs.sort_by(|a, b| a.1.partial_cmp(&b.1).unwrap());
            pairs
        };
        let comp = &computed[ci];
        if comp.len() != reference_sorted.len() {
            return Err(Failure::Invariant(format!(
                "table {id} column {}: expected {} real zeros, computed {}",
                col.label,
                reference_sorted.len(),
                comp.len()
            )));
        }
        let mut col_max = 0.0f64;
        let mut refs = Vec::new();
        let mut comps = Vec::new();
        let mut diffs = Vec::new();
        for (i, (s, v)) in reference_sorted.iter().enumerate() {
            let d = (comp[i] - v).abs();
            col_max = col_max.max(d);
            refs.push(s.to_string());
            comps.push(sig10(comp[i]));
            diffs.push(format!("{d:.3e}"));
        }
        max_diff = max_diff.max(col_max);
        header.push(format!("{label}_ref"));
        header.push(format!("{label}_computed"));
        header.push(format!("{label}_absdiff"));
        cell_columns.push((refs, comps, diffs));
        columns_json.push(serde_json::json!({
            "label": label,
            "reference": reference_sorted.iter().map(|(_, v)| *v).collect::<Vec<_>>(),
            "computed": comp,
            "max_abs_diff": col_max,
        }));
    }
    let pass = max_diff <= tolerance;
    let content = match format {
        Format::Csv => {
            let rows: Vec<Vec<String>> = (0..cfg.n)
                .map(|i| {
                    let mut row = vec![(i + 1).to_string()];
                    for (refs, comps, diffs) in &cell_columns {
                        row.push(refs[i].clone());
                        row.push(comps[i].clone());
                        row.push(diffs[i].clone());
                    }
                    row
                })
                .collect();
            csv(&header, &rows)
        }
        Format::Json => json(&serde_json::json!({
            "table": id,
            "tolerance": tolerance,
            "max_abs_diff": max_diff,
            "pass": pass,
            "columns": columns_json,
        })),
    };
    emit(out.as_deref(), &content)?;
    eprintln!(
        "table {id}: max |diff| = {max_diff:.3e} (tolerance {tolerance:.1e}) — {}",
        if pass { "PASS" } else { "FAIL" }
    );
    if pass {
        Ok(())
    } else {
        Err(Failure::Numeric(format!(
            "table {id} differs from reference digits by {max_diff:.3e} > {tolerance:.1e}"
        )))
    }
}

// ---------------------------------------------------------------------------
// figdata
// ---------------------------------------------------------------------------

fn cmd_figdata(id: u8, format: Format, out: Option<PathBuf>) -> Result<(), Failure> {
    let cfg = tablespec::figure_config(id)
        .ok_or_else(|| Failure::Usage(format!("figure id must be 1–12, got {id}")))?;
    let series = tablespec::compute_figure(cfg)?;
    let content = match format {
        Format::Json => {
            let items: Vec<serde_json::Value> = series
                .iter()
                .map(|s| {
                    serde_json::json!({
                        "label": s.label,
                        "real": s.real,
                        "complex": s.complex.iter().map(|&z| output::complex_json(z)).collect::<Vec<_>>(),
                    })
                })
                .collect();
            json(&serde_json::json!({ "figure": id, "series": items }))
        }
        Format::Csv => {
            let header: Vec<String> = ["label", "index", "re", "im"]
                .iter()
                .map(|s| s.to_string())
                .collect();
            let mut rows = Vec::new();
            for s in &series {
                for (i, r) in s.real.iter().enumerate() {
                    rows.push(vec![
                        s.label.to_string(),
                        i.to_string(),
                        sig10(*r),
                        "0".to_string(),
                    ]);
                }
                for (i, z) in s.complex.iter().enumerate() {
                    rows.push(vec![
                        s.label.to_string(),
                        (s.real.len() + i).to_string(),
                        sig10(z.re),
                        sig10(z.im),
                    ]);
                }
            }
            csv(&header, &rows)
        }
    };
    emit(out.as_deref(), &content)?;
    Ok(())
}

// ---------------------------------------------------------------------------
// energy
// ---------------------------------------------------------------------------

fn cmd_energy(
    fam: &RecurrenceFamily,
    n: usize,
    spec: Option<&PerturbationSpec>,
    zeta: f64,
    theta: f64,
    format: Format,
    out: Option<PathBuf>,
) -> Result<(), Failure> {
    let mut series: Vec<(String, Poly)> = Vec::new();
    let base = generate_first(fam, n)?;
    series.push((format!("P{n}"), base[n].clone()));
    if let Some(s) = spec {
        let (p, _) = perturb_direct(fam, s, n)?;
        series.push((format!("P{n}_perturbed"), p[n].clone()));
    }
    let mut rows = Vec::new();
    let mut items = Vec::new();
    let mut energies = Vec::new();
    for (label, poly) in &series {
        let zs = roots(poly)?;
        let (real, complex) = classify_real(&zs);
        if !complex.is_empty() {
            return Err(Failure::Numeric(format!(
                "{label}: {} zeros are not real; the energy functional needs a real configuration",
                complex.len()
            )));
        }
        let e = r2spectra_core::electrostatic_energy(&real, zeta, theta)?;
        energies.push(e);
        rows.push(vec![label.clone(), sig10(e)]);
        items.push(serde_json::json!({ "label": label, "energy": e }));
    }
    let content = match format {
        Format::Csv => csv(&["label".to_string(), "energy".to_string()], &rows),
        Format::Json => json(&serde_json::json!({
            "family": fam.name,
            "zeta": zeta,
            "theta": theta,
            "series": items,
            "difference": if energies.len() == 2 { Some(energies[0] - energies[1]) } else { None },
        })),
    };
    emit(out.as_deref(), &content)?;
    Ok(())
}
