//! `psdkit` — positivity oracles, Schur parameters, Bloch coordinates,
//! quantum-channel verdicts, Toeplitz PPT checks and relaxation-rate
//! constraints over JSON matrix files.
//!
//! Exit codes: 0 success / true verdict, 1 false verdict (with a JSON
//! witness report on stdout), 2 usage or IO error, 3 numerical failure.
//! `PSDKIT_TOL` overrides the default tolerance when `--tol` is absent.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use psdkit::formats::{
    matrix_from_csv, matrix_to_csv, BetaJson, KrausJson, MatrixJson, ParamsJson, RatesJson,
};
use psdkit::selftest;
use psdkit_core::channel::{self, ChoiMatrix, ChoiRoot};
use psdkit_core::positivity::{self, Method, PositivityVerdict, Witness};
use psdkit_core::relax;
use psdkit_core::schur::{self, RootChoice};
use psdkit_core::toeplitz;
use psdkit_core::{bloch, ComplexMatrix, Error as CoreError, Tolerance};

const EXIT_FALSE: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_NUMERIC: u8 = 3;

#[derive(Parser)]
#[command(name = "psdkit", version, about = "Positive-matrix toolkit", long_about = None)]
struct Cli {
    /// Tolerance for gates and verdicts (default 1e-10; PSDKIT_TOL
    /// overrides).
    #[arg(long, global = true)]
    tol: Option<f64>,
    /// Matrix file format for inputs and bare-matrix outputs.
    #[arg(long, global = true, value_enum, default_value_t = FileFormat::Json)]
    format: FileFormat,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FileFormat {
    Json,
    Csv,
}

#[derive(Subcommand)]
enum Command {
    /// Positivity verdict for a Hermitian matrix.
    Check {
        file: PathBuf,
        /// One oracle or the cross-checked consensus.
        #[arg(long, default_value = "all")]
        method: MethodArg,
    },
    /// Schur-parameter operations.
    Schur {
        #[command(subcommand)]
        action: SchurCmd,
    },
    /// Bloch-coordinate operations.
    Bloch {
        #[command(subcommand)]
        action: BlochCmd,
    },
    /// Choi/Kraus channel operations.
    Channel {
        #[command(subcommand)]
        action: ChannelCmd,
    },
    /// Toeplitz constructions and PPT checks.
    Toeplitz {
        #[command(subcommand)]
        action: ToeplitzCmd,
    },
    /// Relaxation-rate constraints.
    Relax {
        #[command(subcommand)]
        action: RelaxCmd,
    },
    /// Run the seeded randomized invariant suite.
    Selftest {
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum MethodArg {
    P1,
    P2,
    P3,
    P4,
    P5,
    P6,
    All,
}

#[derive(Args)]
struct BlockArgs {
    /// Square block size of the parametrization.
    #[arg(long, default_value_t = 1)]
    block: usize,
    /// Which square root of the diagonal blocks to use.
    #[arg(long, value_enum, default_value_t = RootArg::Sqrt)]
    root: RootArg,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum RootArg {
    Sqrt,
    Chol,
}

#[derive(Subcommand)]
enum SchurCmd {
    /// Matrix file -> parameter-set JSON.
    Extract {
        file: PathBuf,
        #[command(flatten)]
        opts: BlockArgs,
    },
    /// Parameter-set file -> matrix.
    Reconstruct { file: PathBuf },
    /// Determinant from the parameters (accepts a matrix or parameter
    /// file).
    Det {
        file: PathBuf,
        #[command(flatten)]
        opts: BlockArgs,
    },
    /// Rank-one verdict from the parameters (accepts a matrix or parameter
    /// file).
    Rankone {
        file: PathBuf,
        #[command(flatten)]
        opts: BlockArgs,
    },
}

#[derive(Subcommand)]
enum BlochCmd {
    /// Density-matrix file -> Bloch coordinates.
    ToBeta {
        file: PathBuf,
        #[arg(long)]
        dim: usize,
    },
    /// Coordinate file -> Hermitian trace-one matrix.
    FromBeta {
        file: PathBuf,
        #[arg(long)]
        dim: usize,
    },
    /// Pure-state verdict for a coordinate file.
    Pure {
        file: PathBuf,
        #[arg(long)]
        dim: usize,
    },
    /// Square-root representation from a free vector file.
    Represent {
        file: PathBuf,
        #[arg(long)]
        dim: usize,
    },
}

#[derive(Subcommand)]
enum ChannelCmd {
    /// Kraus-set file -> Choi matrix.
    Choi { file: PathBuf },
    /// Choi-matrix file -> Kraus set.
    Kraus {
        file: PathBuf,
        #[arg(long)]
        din: usize,
        #[arg(long)]
        dout: usize,
        #[arg(long, value_enum, default_value_t = ChoiRootArg::Chol)]
        root: ChoiRootArg,
    },
    /// CP / TP / unital verdicts for a Choi-matrix file.
    Verdicts {
        file: PathBuf,
        #[arg(long)]
        din: usize,
        #[arg(long)]
        dout: usize,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ChoiRootArg {
    Chol,
    Spectral,
}

#[derive(Subcommand)]
enum ToeplitzCmd {
    /// PPT verdict of a matrix under the d1 x d2 split.
    Ppt {
        file: PathBuf,
        #[arg(long)]
        d1: usize,
        #[arg(long)]
        d2: usize,
    },
    /// Check the blockwise-reversal permutation identity against the
    /// partial transpose.
    Ptcheck {
        file: PathBuf,
        /// Inner block length (the reversal acts within blocks of this
        /// size).
        #[arg(long)]
        block: usize,
    },
}

#[derive(Subcommand)]
enum RelaxCmd {
    /// Complete-positivity constraints for a four-level system.
    Check4 {
        #[arg(long)]
        rates: PathBuf,
    },
    /// Dissipator matrix for an N-level system.
    Ld {
        #[arg(long)]
        rates: PathBuf,
        #[arg(long, default_value_t = 4)]
        levels: usize,
    },
}

/// Ways a command can stop early; mapped onto exit codes in `main`.
enum Failure {
    /// A negative verdict whose witness report has already been printed.
    Verdict,
    /// Bad arguments, unreadable files, malformed JSON.
    Usage(anyhow::Error),
    /// The numerics could not deliver a verdict.
    Numeric(anyhow::Error),
}

type CmdResult = Result<u8, Failure>;

fn usage<T>(e: impl Into<anyhow::Error>) -> Result<T, Failure> {
    Err(Failure::Usage(e.into()))
}

/// Core errors that express a negative verdict get a report + exit 1;
/// everything else is a numerical failure.
fn core_fail(e: CoreError) -> Failure {
    Failure::Numeric(anyhow!("{e}"))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let tol = match resolve_tolerance(cli.tol) {
        Ok(t) => t,
        Err(e) => {
            eprintln!("psdkit: {e:#}");
            return ExitCode::from(EXIT_USAGE);
        }
    };
    match dispatch(&cli, &tol) {
        Ok(code) => ExitCode::from(code),
        Err(Failure::Verdict) => ExitCode::from(EXIT_FALSE),
        Err(Failure::Usage(e)) => {
            eprintln!("psdkit: {e:#}");
            ExitCode::from(EXIT_USAGE)
        }
        Err(Failure::Numeric(e)) => {
            eprintln!("psdkit: numerical failure: {e:#}");
            ExitCode::from(EXIT_NUMERIC)
        }
    }
}

fn resolve_tolerance(flag: Option<f64>) -> anyhow::Result<Tolerance> {
    let eps = match flag {
        Some(x) => x,
        None => match std::env::var("PSDKIT_TOL") {
            Ok(s) => s
                .trim()
                .parse::<f64>()
                .context("PSDKIT_TOL must be a number")?,
            Err(_) => Tolerance::DEFAULT_EPS,
        },
    };
    if !(eps > 0.0) {
        bail!("tolerance must be positive");
    }
    Tolerance::new(eps).map_err(|e| anyhow!("{e}"))
}

fn dispatch(cli: &Cli, tol: &Tolerance) -> CmdResult {
    match &cli.command {
        Command::Check { file, method } => cmd_check(file, *method, cli.format, tol),
        Command::Schur { action } => cmd_schur(action, cli.format, tol),
        Command::Bloch { action } => cmd_bloch(action, cli.format, tol),
        Command::Channel { action } => cmd_channel(action, cli.format, tol),
        Command::Toeplitz { action } => cmd_toeplitz(action, cli.format, tol),
        Command::Relax { action } => cmd_relax(action, cli.format, tol),
        Command::Selftest { seed } => {
            let report = selftest::run(*seed);
            println!(
                "{}",
                serde_json::to_string_pretty(&report).expect("report serializes")
            );
            Ok(if report.all_passed { 0 } else { EXIT_FALSE })
        }
    }
}

fn read_text(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path)
        .with_context(|| format!("reading {}", path.display()))
        .map_err(Failure::Usage)
}

fn load_matrix(path: &Path, format: FileFormat) -> Result<ComplexMatrix, Failure> {
    let text = read_text(path)?;
    let parsed = match format {
        FileFormat::Json => serde_json::from_str::<MatrixJson>(&text)
            .context("parsing matrix JSON")
            .and_then(|mj| mj.to_matrix()),
        FileFormat::Csv => matrix_from_csv(&text),
    };
    parsed.map_err(Failure::Usage)
}

fn print_matrix(m: &ComplexMatrix, format: FileFormat) {
    match format {
        FileFormat::Json => println!(
            "{}",
            serde_json::to_string(&MatrixJson::from_matrix(m)).expect("matrix serializes")
        ),
        FileFormat::Csv => print!("{}", matrix_to_csv(m)),
    }
}

fn witness_json(w: &Option<Witness>) -> serde_json::Value {
    match w {
        None => serde_json::Value::Null,
        Some(Witness::QuadraticForm { value, vector }) => json!({
            "kind": "quadratic_form",
            "value": value,
            "vector": vector.iter().map(|z| [z.re, z.im]).collect::<Vec<_>>(),
        }),
        Some(Witness::Eigenvalue(w)) => json!({"kind": "eigenvalue", "value": w}),
        Some(Witness::PivotIndex { index, pivot }) => {
            json!({"kind": "pivot", "index": index, "value": pivot})
        }
        Some(Witness::Minor { mask, value }) => {
            json!({"kind": "minor", "mask": mask, "value": value})
        }
        Some(Witness::Coefficient { index, value }) => {
            json!({"kind": "coefficient", "index": index, "value": value})
        }
    }
}

fn verdict_json(v: &PositivityVerdict) -> serde_json::Value {
    json!({
        "method": v.method.name(),
        "is_psd": v.is_psd,
        "necessary_only": v.method == Method::P1,
        "witness": witness_json(&v.witness),
    })
}

fn cmd_check(path: &Path, method: MethodArg, format: FileFormat, tol: &Tolerance) -> CmdResult {
    let m = load_matrix(path, format)?;
    let single = |v: PositivityVerdict| -> CmdResult {
        println!("{}", verdict_json(&v));
        Ok(if v.is_psd { 0 } else { EXIT_FALSE })
    };
    match method {
        MethodArg::P1 => {
            // Seeded so repeated runs agree.
            let mut rng = <rand_chacha::ChaCha8Rng as rand::SeedableRng>::seed_from_u64(0);
            single(
                positivity::check_p1_quadratic_form(&m, 512, tol, &mut rng)
                    .map_err(core_fail)?,
            )
        }
        MethodArg::P2 => single(positivity::check_p2_eigen(&m, tol).map_err(core_fail)?),
        MethodArg::P3 => single(positivity::check_p3_cholesky(&m, tol).map_err(core_fail)?),
        MethodArg::P4 => single(positivity::check_p4_minors(&m, tol).map_err(core_fail)?),
        MethodArg::P5 => single(positivity::check_p5_charpoly(&m, tol).map_err(core_fail)?),
        MethodArg::P6 => single(positivity::check_p6_sqrt(&m, tol).map_err(core_fail)?),
        MethodArg::All => {
            let rep = positivity::consensus(&m, tol).map_err(core_fail)?;
            let report = json!({
                "consistent": rep.consistent,
                "is_psd": rep.is_psd(),
                "verdicts": rep.verdicts.iter().map(verdict_json).collect::<Vec<_>>(),
            });
            println!("{report}");
            match rep.is_psd() {
                Some(true) => Ok(0),
                Some(false) => Ok(EXIT_FALSE),
                None => Err(Failure::Numeric(anyhow!(
                    "positivity oracles disagreed; see report"
                ))),
            }
        }
    }
}

fn root_choice(arg: RootArg) -> RootChoice {
    match arg {
        RootArg::Sqrt => RootChoice::PositiveSqrt,
        RootArg::Chol => RootChoice::Cholesky,
    }
}

/// Load a parameter set either from a parameter-set file or by extracting
/// from a matrix file (detected by the presence of a "gamma" field).
fn load_params(
    path: &Path,
    opts: &BlockArgs,
    format: FileFormat,
    tol: &Tolerance,
) -> Result<schur::SchurParameterSet, Failure> {
    if format == FileFormat::Json {
        let text = read_text(path)?;
        let value: serde_json::Value = serde_json::from_str(&text)
            .context("parsing JSON")
            .map_err(Failure::Usage)?;
        if value.get("gamma").is_some() {
            let pj: ParamsJson = serde_json::from_value(value)
                .context("parsing parameter-set JSON")
                .map_err(Failure::Usage)?;
            return pj.to_params(tol).map_err(Failure::Usage);
        }
    }
    let m = load_matrix(path, format)?;
    extract_or_witness(&m, opts.block, root_choice(opts.root), tol)
}

/// Extraction with the positivity gate surfaced as a false-verdict exit.
fn extract_or_witness(
    m: &ComplexMatrix,
    block: usize,
    root: RootChoice,
    tol: &Tolerance,
) -> Result<schur::SchurParameterSet, Failure> {
    schur::extract(m, block, root, tol).map_err(|e| match e {
        CoreError::NotPsd { witness, index } => {
            println!(
                "{}",
                json!({
                    "is_psd": false,
                    "witness": {"kind": "eigenvalue", "value": witness, "index": index},
                })
            );
            Failure::Verdict
        }
        CoreError::NotSquare { .. }
        | CoreError::ShapeMismatch { .. }
        | CoreError::InvalidArgument(_) => Failure::Usage(anyhow!("{e}")),
        other => core_fail(other),
    })
}

fn cmd_schur(action: &SchurCmd, format: FileFormat, tol: &Tolerance) -> CmdResult {
    match action {
        SchurCmd::Extract { file, opts } => {
            let m = load_matrix(file, format)?;
            let params = extract_or_witness(&m, opts.block, root_choice(opts.root), tol)?;
            println!(
                "{}",
                serde_json::to_string(&ParamsJson::from_params(&params))
                    .expect("params serialize")
            );
            Ok(0)
        }
        SchurCmd::Reconstruct { file } => {
            let opts = BlockArgs {
                block: 1,
                root: RootArg::Sqrt,
            };
            let params = load_params(file, &opts, format, tol)?;
            print_matrix(&schur::reconstruct(&params), format);
            Ok(0)
        }
        SchurCmd::Det { file, opts } => {
            let params = load_params(file, opts, format, tol)?;
            let det = schur::determinant_formula(&params);
            println!("{}", json!({ "det": det }));
            Ok(0)
        }
        SchurCmd::Rankone { file, opts } => {
            let params = load_params(file, opts, format, tol)?;
            let verdict = schur::is_rank_one(&params, tol).map_err(|e| match e {
                CoreError::InvalidArgument(_) => Failure::Usage(anyhow!("{e}")),
                other => core_fail(other),
            })?;
            println!("{}", json!({ "rank_one": verdict }));
            Ok(if verdict { 0 } else { EXIT_FALSE })
        }
    }
}

fn load_beta(path: &Path, dim: usize) -> Result<Vec<f64>, Failure> {
    let text = read_text(path)?;
    let beta: BetaJson = serde_json::from_str(&text)
        .context("parsing Bloch-coordinate JSON")
        .map_err(Failure::Usage)?;
    if let Some(d) = beta.dim_hint() {
        if d != dim {
            return usage(anyhow!("file declares dim {d}, flag says {dim}"));
        }
    }
    if beta.coords().len() != dim * dim - 1 {
        return usage(anyhow!(
            "expected {} coordinates for dim {dim}, got {}",
            dim * dim - 1,
            beta.coords().len()
        ));
    }
    Ok(beta.coords().to_vec())
}

fn cmd_bloch(action: &BlochCmd, format: FileFormat, tol: &Tolerance) -> CmdResult {
    match action {
        BlochCmd::ToBeta { file, dim } => {
            let basis = bloch::gellmann(*dim).map_err(|e| Failure::Usage(anyhow!("{e}")))?;
            let rho = load_matrix(file, format)?;
            let beta = bloch::to_bloch(&rho, &basis, tol).map_err(|e| match e {
                CoreError::InvalidArgument(_) | CoreError::ShapeMismatch { .. } => {
                    Failure::Usage(anyhow!("{e}"))
                }
                other => core_fail(other),
            })?;
            println!("{}", json!({"dim": dim, "beta": beta.coords()}));
            Ok(0)
        }
        BlochCmd::FromBeta { file, dim } => {
            let basis = bloch::gellmann(*dim).map_err(|e| Failure::Usage(anyhow!("{e}")))?;
            let coords = load_beta(file, *dim)?;
            let beta = bloch::BlochVector::new(*dim, coords)
                .map_err(|e| Failure::Usage(anyhow!("{e}")))?;
            let rho = bloch::from_bloch(&beta, &basis).map_err(core_fail)?;
            print_matrix(&rho, format);
            Ok(0)
        }
        BlochCmd::Pure { file, dim } => {
            let basis = bloch::gellmann(*dim).map_err(|e| Failure::Usage(anyhow!("{e}")))?;
            let tensor = bloch::structure_tensor(&basis);
            let coords = load_beta(file, *dim)?;
            let beta = bloch::BlochVector::new(*dim, coords)
                .map_err(|e| Failure::Usage(anyhow!("{e}")))?;
            let pure = bloch::is_pure(&beta, &basis, &tensor, tol).map_err(core_fail)?;
            println!(
                "{}",
                json!({
                    "dim": dim,
                    "pure": pure,
                    "norm_sqr": beta.norm_sqr(),
                    "target_norm_sqr": 0.5 * ((dim * dim - dim) as f64),
                })
            );
            Ok(if pure { 0 } else { EXIT_FALSE })
        }
        BlochCmd::Represent { file, dim } => {
            let basis = bloch::gellmann(*dim).map_err(|e| Failure::Usage(anyhow!("{e}")))?;
            let tensor = bloch::structure_tensor(&basis);
            let beta0 = load_beta(file, *dim)?;
            let rep = bloch::represent_from_beta0(&beta0, &basis, &tensor, tol).map_err(
                |e| match e {
                    CoreError::NormBound { .. } => Failure::Usage(anyhow!("{e}")),
                    other => core_fail(other),
                },
            )?;
            println!(
                "{}",
                json!({
                    "dim": dim,
                    "kappa": rep.kappa,
                    "beta": rep.beta.coords(),
                    "rho": MatrixJson::from_matrix(&rep.rho),
                })
            );
            Ok(0)
        }
    }
}

fn cmd_channel(action: &ChannelCmd, format: FileFormat, tol: &Tolerance) -> CmdResult {
    match action {
        ChannelCmd::Choi { file } => {
            let text = read_text(file)?;
            let kj: KrausJson = serde_json::from_str(&text)
                .context("parsing Kraus-set JSON")
                .map_err(Failure::Usage)?;
            let kraus = kj.to_kraus().map_err(Failure::Usage)?;
            let choi = channel::choi_from_kraus(&kraus);
            print_matrix(choi.matrix(), format);
            Ok(0)
        }
        ChannelCmd::Kraus {
            file,
            din,
            dout,
            root,
        } => {
            let m = load_matrix(file, format)?;
            let choi =
                ChoiMatrix::new(*din, *dout, m, tol).map_err(|e| Failure::Usage(anyhow!("{e}")))?;
            let which = match root {
                ChoiRootArg::Chol => ChoiRoot::Cholesky,
                ChoiRootArg::Spectral => ChoiRoot::Spectral,
            };
            let kraus = channel::kraus_from_choi(&choi, which, tol).map_err(|e| match e {
                CoreError::NotPsd { witness, index } => {
                    println!(
                        "{}",
                        json!({
                            "is_psd": false,
                            "witness": {"kind": "eigenvalue", "value": witness, "index": index},
                        })
                    );
                    Failure::Verdict
                }
                other => core_fail(other),
            })?;
            println!(
                "{}",
                serde_json::to_string(&KrausJson::from_kraus(&kraus)).expect("kraus serialize")
            );
            Ok(0)
        }
        ChannelCmd::Verdicts { file, din, dout } => {
            let m = load_matrix(file, format)?;
            let choi =
                ChoiMatrix::new(*din, *dout, m, tol).map_err(|e| Failure::Usage(anyhow!("{e}")))?;
            let cp = channel::is_cp(&choi, tol).map_err(core_fail)?;
            let tp = channel::is_tp(&choi, tol).map_err(core_fail)?;
            let unital = channel::is_unital(&choi, tol).map_err(core_fail)?;
            println!(
                "{}",
                json!({
                    "cp": cp.is_psd,
                    "tp": tp,
                    "unital": unital,
                    "witness": witness_json(&cp.witness),
                })
            );
            Ok(if cp.is_psd { 0 } else { EXIT_FALSE })
        }
    }
}

fn cmd_toeplitz(action: &ToeplitzCmd, format: FileFormat, tol: &Tolerance) -> CmdResult {
    match action {
        ToeplitzCmd::Ppt { file, d1, d2 } => {
            let m = load_matrix(file, format)?;
            let verdict = toeplitz::ppt_verdict(&m, *d1, *d2, tol).map_err(|e| match e {
                CoreError::ShapeMismatch { .. } | CoreError::NotSquare { .. } => {
                    Failure::Usage(anyhow!("{e}"))
                }
                other => core_fail(other),
            })?;
            println!(
                "{}",
                json!({
                    "d1": d1,
                    "d2": d2,
                    "ppt": verdict.is_psd,
                    "witness": witness_json(&verdict.witness),
                })
            );
            Ok(if verdict.is_psd { 0 } else { EXIT_FALSE })
        }
        ToeplitzCmd::Ptcheck { file, block } => {
            let m = load_matrix(file, format)?;
            if *block == 0 || m.rows() % *block != 0 {
                return usage(anyhow!(
                    "matrix dimension {} is not a multiple of block {}",
                    m.rows(),
                    block
                ));
            }
            let d1 = m.rows() / *block;
            let holds = toeplitz::pt_identity_check(&m, d1, *block).map_err(|e| match e {
                CoreError::ShapeMismatch { .. } | CoreError::NotSquare { .. } => {
                    Failure::Usage(anyhow!("{e}"))
                }
                other => core_fail(other),
            })?;
            println!("{}", json!({"block": block, "holds": holds}));
            Ok(if holds { 0 } else { EXIT_FALSE })
        }
    }
}

fn cmd_relax(action: &RelaxCmd, format: FileFormat, tol: &Tolerance) -> CmdResult {
    match action {
        RelaxCmd::Check4 { rates } => {
            let text = read_text(rates)?;
            let rj: RatesJson = serde_json::from_str(&text)
                .context("parsing rates JSON")
                .map_err(Failure::Usage)?;
            let r = rj.to_rates(4).map_err(Failure::Usage)?;
            let d4 = r
                .dephasing4()
                .map_err(|e| Failure::Usage(anyhow!("{e}")))?;
            let rep = relax::cp_constraints_n4(&d4, tol);
            println!(
                "{}",
                json!({
                    "b": rep.b,
                    "diag_ok": rep.diag_ok,
                    "g12": rep.g12,
                    "g23": rep.g23,
                    "g13": rep.g13,
                    "inequality_values": rep.inequality_values,
                    "degenerate": rep.degenerate,
                    "verdict": rep.verdict,
                })
            );
            Ok(if rep.verdict { 0 } else { EXIT_FALSE })
        }
        RelaxCmd::Ld { rates, levels } => {
            let text = read_text(rates)?;
            let rj: RatesJson = serde_json::from_str(&text)
                .context("parsing rates JSON")
                .map_err(Failure::Usage)?;
            let r = rj.to_rates(*levels).map_err(Failure::Usage)?;
            if r.levels() != *levels {
                return usage(anyhow!(
                    "rates file declares {} levels, flag says {levels}",
                    r.levels()
                ));
            }
            print_matrix(&relax::build_ld(&r), format);
            Ok(0)
        }
    }
}
