use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::json;

use edm_shrinkage::harness::io::{fmt_f64, matrix_to_csv, with_suffix, write_text};
use edm_shrinkage::harness::{
    load_coords, read_matrix_csv, read_sym_hollow_csv, report, run_experiment, CoordFormat, HarnessError, Helix,
    LambdaChoice, NoiseModel, ReportFormat, SimConfig,
};
use edm_shrinkage::{
    analyze_dim3, classical_mds, default_lambda, distance_shrinkage, edm_from_points, objective_value,
    similarity_to_dissimilarity, truncate_rank, DykstraConfig, EdmError, Embedding, SymHollowMatrix,
};

const EMBEDDING_HEADER: &str = "squared-distance convention; centered coordinates";

/// Distance-matrix estimation by shrinkage and projection onto the EDM cone.
///
/// Dissimilarity matrices are read as CSV (one row per line, optional
/// leading '#' line) and hold squared distances.
#[derive(Parser)]
#[command(name = "edm-shrink", version)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Fit the shrinkage estimator to an observed dissimilarity matrix.
    Estimate(EstimateArgs),
    /// Compare shrinkage and classical MDS on noisy copies of a geometry.
    Simulate(SimulateArgs),
    /// Classical multidimensional scaling only.
    Mds(MdsArgs),
    /// Closed-form analysis of a 3x3 dissimilarity matrix.
    Dim3(Dim3Args),
    /// Convert a similarity matrix to squared-distance dissimilarities.
    Convert(ConvertArgs),
}

#[derive(Args)]
struct Projection {
    /// Stop when a full cycle moves the iterate by at most TOL relative.
    #[arg(long, default_value_t = DykstraConfig::default().tol)]
    tol: f64,
    #[arg(long, default_value_t = DykstraConfig::default().max_cycles)]
    max_cycles: usize,
    /// Feasibility tolerance for the final iterate.
    #[arg(long, default_value_t = DykstraConfig::default().feas_tol)]
    feas_tol: f64,
}

impl Projection {
    fn config(&self) -> DykstraConfig {
        DykstraConfig { tol: self.tol, max_cycles: self.max_cycles, feas_tol: self.feas_tol }
    }
}

#[derive(Args)]
struct EstimateArgs {
    #[arg(long)]
    input: PathBuf,
    /// Tuning parameter; entries are shrunk by lambda/(2n).
    #[arg(long, group = "tuning")]
    lambda: Option<f64>,
    /// Noise level; uses lambda = 4 sigma (sqrt(n) + 1).
    #[arg(long, group = "tuning")]
    sigma: Option<f64>,
    /// Comma-separated lambdas; fits each in turn.
    #[arg(long, group = "tuning", value_delimiter = ',')]
    lambda_grid: Option<Vec<f64>>,
    /// Rank of the reported embedding.
    #[arg(long, default_value_t = 3)]
    rank: usize,
    #[command(flatten)]
    projection: Projection,
    /// Output prefix: writes PREFIX_dhat.csv, PREFIX_khat.csv,
    /// PREFIX_embedding.csv and PREFIX_fit.json.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct SimulateArgs {
    /// Coordinate file.
    #[arg(long, required_unless_present = "helix", conflicts_with = "helix")]
    input: Option<PathBuf>,
    /// Coordinate format: csv, xyz or pdb.
    #[arg(long, default_value = "csv")]
    format: CoordFormat,
    /// Use a synthetic helix with this many points instead of a file.
    #[arg(long)]
    helix: Option<usize>,
    /// Noise model: gaussian or gamma.
    #[arg(long, default_value = "gaussian")]
    noise: String,
    /// Gaussian noise variance.
    #[arg(long)]
    sigma2: Option<f64>,
    #[arg(long, conflicts_with = "sigma")]
    lambda: Option<f64>,
    #[arg(long)]
    sigma: Option<f64>,
    #[arg(long, default_value_t = 100)]
    reps: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = 3)]
    rank: usize,
    #[command(flatten)]
    projection: Projection,
    /// Report path; standard output if omitted.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Report format: json or csv.
    #[arg(long, default_value = "json")]
    out_format: ReportFormat,
}

#[derive(Args)]
struct MdsArgs {
    #[arg(long)]
    input: PathBuf,
    #[arg(long, default_value_t = 3)]
    rank: usize,
    /// Output prefix: writes PREFIX_embedding.csv and PREFIX_dhat.csv.
    /// The embedding goes to standard output if omitted.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct Dim3Args {
    #[arg(long)]
    input: PathBuf,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct ConvertArgs {
    #[arg(long)]
    input: PathBuf,
    #[arg(long)]
    out: Option<PathBuf>,
}

enum Failure {
    Input(String),
    NotConverged(String),
}

impl From<HarnessError> for Failure {
    fn from(e: HarnessError) -> Self {
        match e {
            HarnessError::Edm(e) => e.into(),
            e => Failure::Input(e.to_string()),
        }
    }
}

impl From<EdmError> for Failure {
    fn from(e: EdmError) -> Self {
        match e {
            EdmError::NotConverged(_) => Failure::NotConverged(e.to_string()),
            e => Failure::Input(e.to_string()),
        }
    }
}

type CliResult = Result<(), Failure>;

fn emit(out: Option<&Path>, text: &str) -> CliResult {
    match out {
        Some(p) => Ok(write_text(p, text)?),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn embedding_csv(e: &Embedding) -> String {
    matrix_to_csv(e.coords(), Some(EMBEDDING_HEADER))
}

fn estimate(args: EstimateArgs) -> CliResult {
    let x = read_sym_hollow_csv(&args.input)?;
    let n = x.n();
    let cfg = args.projection.config();
    let lambdas = match (args.lambda, args.sigma, args.lambda_grid) {
        (Some(l), _, _) => vec![l],
        (_, Some(s), _) => vec![default_lambda(n, s)],
        (_, _, Some(grid)) if !grid.is_empty() => grid,
        _ => return Err(Failure::Input("one of --lambda, --sigma or --lambda-grid is required".into())),
    };
    let grid = lambdas.len() > 1;
    for (idx, &lambda) in lambdas.iter().enumerate() {
        let fit = distance_shrinkage(&x, lambda, &cfg)?;
        let trunc = truncate_rank(&fit, args.rank)?;
        let summary = json!({
            "n": n,
            "lambda": lambda,
            "eta": fit.eta,
            "embed_dim": fit.d_hat.embed_dim(),
            "rank": args.rank,
            "objective": objective_value(&fit.d_hat, &x, lambda)?,
            "diagnostics": fit.diagnostics,
        });
        let summary = serde_json::to_string_pretty(&summary).expect("json") + "\n";
        match &args.out {
            Some(prefix) => {
                let prefix = if grid { with_suffix(prefix, &format!("l{idx}")) } else { prefix.clone() };
                write_text(
                    &with_suffix(&prefix, "dhat.csv"),
                    &matrix_to_csv(fit.d_hat.as_matrix(), Some("squared distances")),
                )?;
                write_text(&with_suffix(&prefix, "khat.csv"), &matrix_to_csv(fit.k_hat.as_matrix(), Some("kernel")))?;
                write_text(&with_suffix(&prefix, "embedding.csv"), &embedding_csv(&trunc.embedding))?;
                write_text(&with_suffix(&prefix, "fit.json"), &summary)?;
            }
            None => print!("{summary}"),
        }
    }
    Ok(())
}

fn simulate(args: SimulateArgs) -> CliResult {
    let points = match (&args.input, args.helix) {
        (Some(p), _) => load_coords(p, args.format)?,
        (None, Some(n)) if n >= 2 => Helix::standard(n).points(),
        _ => return Err(Failure::Input("--helix needs at least 2 points".into())),
    };
    let noise = match args.noise.as_str() {
        "gaussian" => match args.sigma2 {
            Some(sigma2) => NoiseModel::Gaussian { sigma2 },
            None => return Err(Failure::Input("--sigma2 is required for gaussian noise".into())),
        },
        "gamma" => NoiseModel::Gamma,
        other => return Err(Failure::Input(format!("unknown noise model '{other}'"))),
    };
    let lambda = match (args.lambda, args.sigma) {
        (Some(l), _) => LambdaChoice::Lambda(l),
        (_, Some(s)) => LambdaChoice::Sigma(s),
        _ => LambdaChoice::FromNoise,
    };
    let cfg = SimConfig {
        reps: args.reps,
        seed: args.seed,
        noise,
        lambda,
        rank_r: args.rank,
        dykstra: args.projection.config(),
    };
    let truth = edm_from_points(&points);
    let rep = run_experiment(&truth, &cfg)?;
    let fmt = |v: Option<f64>| v.map_or_else(|| "n/a".to_string(), fmt_f64);
    eprintln!(
        "n={} lambda={} shrinkage={} (se {}) mds={} (se {}) not_converged={}",
        rep.n,
        fmt_f64(rep.lambda),
        fmt(rep.shrinkage.mean),
        fmt(rep.shrinkage.std_error),
        fmt(rep.classical_mds.mean),
        fmt(rep.classical_mds.std_error),
        rep.convergence.not_converged,
    );
    match &args.out {
        Some(p) => Ok(report::report_write(&rep, p, args.out_format)?),
        None => {
            let text = match args.out_format {
                ReportFormat::Json => report::to_json(&rep).expect("json") + "\n",
                ReportFormat::Csv => report::to_csv(&rep),
            };
            emit(None, &text)
        }
    }
}

fn mds(args: MdsArgs) -> CliResult {
    let x = read_sym_hollow_csv(&args.input)?;
    let fit = classical_mds(&x, args.rank)?;
    match &args.out {
        Some(prefix) => {
            write_text(&with_suffix(prefix, "embedding.csv"), &embedding_csv(&fit.embedding))?;
            write_text(
                &with_suffix(prefix, "dhat.csv"),
                &matrix_to_csv(fit.d_hat_r.as_matrix(), Some("squared distances")),
            )?;
            Ok(())
        }
        None => emit(None, &embedding_csv(&fit.embedding)),
    }
}

fn dim3(args: Dim3Args) -> CliResult {
    let x: SymHollowMatrix = read_sym_hollow_csv(&args.input)?;
    let a = analyze_dim3(&x)?;
    emit(args.out.as_deref(), &(serde_json::to_string_pretty(&a).expect("json") + "\n"))
}

fn convert(args: ConvertArgs) -> CliResult {
    let s = read_matrix_csv(&args.input)?;
    let d = similarity_to_dissimilarity(&s)?;
    emit(args.out.as_deref(), &matrix_to_csv(d.as_matrix(), Some("squared distances")))
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = Cli::parse();
    let result = match cli.cmd {
        Cmd::Estimate(a) => estimate(a),
        Cmd::Simulate(a) => simulate(a),
        Cmd::Mds(a) => mds(a),
        Cmd::Dim3(a) => dim3(a),
        Cmd::Convert(a) => convert(a),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::NotConverged(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(3)
        }
    }
}
