//! Command-line harness: dataset generation, single runs, parameter grids,
//! a runtime-scaling benchmark and the bound calculator.
//!
//! Everything is CSV. Matrices are written without a header, one row per
//! line; result files carry the header in [`RESULT_HEADER`].

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;

use crate::bounds::{eta_bound, CrossTermConstant, TheoryBoundInputs};
use crate::detect::DetectionResult;
use crate::matrix::DenseMatrix;
use crate::metrics::{inlier_relative_error, precision_recall, subspace_error};
use crate::pipeline::{run_pipeline, PipelineConfig};
use crate::rsvd::{best_rank_k_oracle, reconstruct, RsvdConfig};
use crate::sketch::{SketchDistribution, SketchSpec};
use crate::synth::{generate, SynthParams};

pub const RESULT_HEADER: &str = "alpha,outlier_scale,c,epsilon,seed,s,projection_bypassed,precision,recall,rel_error,subspace_angle_deg,n_retained,runtime_ms";
pub const NORM_DUMP_HEADER: &str = "row_index,row_norm,retained";
pub const BENCH_HEADER: &str = "m,runtime_ms_median";
pub const THREADS_ENV: &str = "ROWGUARD_THREADS";

const AGG_METRICS: [&str; 6] = [
    "precision",
    "recall",
    "rel_error",
    "subspace_angle_deg",
    "n_retained",
    "runtime_ms",
];

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error(transparent)]
    Pipeline(#[from] crate::Error),
    #[error("{}: {source}", path.display())]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("{}:{line}: {msg}", path.display())]
    Parse {
        path: PathBuf,
        line: u64,
        msg: String,
    },
    #[error("usage error: {0}")]
    Usage(String),
}

impl CliError {
    /// 1 when the pipeline itself gave up, 2 for anything the caller got wrong.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Pipeline(crate::Error::AllRowsDiscarded { .. }) => 1,
            _ => 2,
        }
    }
}

pub type CliResult<T> = std::result::Result<T, CliError>;

fn io_err(path: &Path) -> impl FnOnce(std::io::Error) -> CliError + '_ {
    move |source| CliError::Io {
        path: path.to_path_buf(),
        source,
    }
}

#[derive(Debug, Parser)]
#[command(name = "rowguard", version, about = "Robust randomized low-rank approximation")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

impl Cli {
    /// `clap` parsing without requiring the trait in scope.
    pub fn parse_args<I, T>(args: I) -> std::result::Result<Self, clap::Error>
    where
        I: IntoIterator<Item = T>,
        T: Into<OsString> + Clone,
    {
        Self::try_parse_from(args)
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Write a synthetic dataset (A.csv, mask.csv, B.csv).
    Synth(SynthArgs),
    /// Run the pipeline once on a CSV matrix or a synthetic dataset.
    Run(RunArgs),
    /// Sweep alpha, outlier scale, c and epsilon over several trials.
    Grid(GridArgs),
    /// Median runtime per row count, with a log-log slope fit.
    Bench(BenchArgs),
    /// Evaluate the additive error term of the recovery bound.
    Bound(BoundArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SketchKind {
    Gaussian,
    Sparse,
}

impl From<SketchKind> for SketchDistribution {
    fn from(k: SketchKind) -> Self {
        match k {
            SketchKind::Gaussian => SketchDistribution::Gaussian,
            SketchKind::Sparse => SketchDistribution::SparseRademacher,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Default)]
pub enum Baseline {
    /// Sketch, filter, then randomized SVD.
    #[default]
    None,
    /// Exact rank-k SVD of the full matrix, no filtering.
    Pca,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum CrossTerm {
    OnePlusEpsilon,
    Two,
}

#[derive(Debug, Clone, Args)]
pub struct ShapeArgs {
    #[arg(long, default_value_t = 1000)]
    pub m: usize,
    #[arg(long, default_value_t = 500)]
    pub n: usize,
    /// Rank of the clean signal and of the approximation.
    #[arg(long, default_value_t = 10)]
    pub k: usize,
    /// Row-norm bound on inlier noise.
    #[arg(long, default_value_t = 0.1)]
    pub delta: f64,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
}

#[derive(Debug, Clone, Args)]
pub struct MethodArgs {
    #[arg(long = "delta-prime", default_value_t = 0.05)]
    pub delta_prime: f64,
    #[arg(long, default_value_t = 10)]
    pub oversampling: usize,
    #[arg(long, value_enum, default_value_t = SketchKind::Gaussian)]
    pub sketch: SketchKind,
    #[arg(long = "dim-constant", default_value_t = 8.0)]
    pub dim_constant: f64,
    #[arg(long = "sparse-density", default_value_t = 1.0 / 3.0)]
    pub sparse_density: f64,
    #[arg(long, value_enum, default_value_t = Baseline::None)]
    pub baseline: Baseline,
}

#[derive(Debug, Clone, Args)]
pub struct SynthArgs {
    #[command(flatten)]
    pub shape: ShapeArgs,
    #[arg(long, default_value_t = 0.1)]
    pub alpha: f64,
    #[arg(long = "outlier-scale", default_value_t = 10.0)]
    pub outlier_scale: f64,
    /// Output directory.
    #[arg(long, default_value = ".")]
    pub out: PathBuf,
}

#[derive(Debug, Clone, Args)]
pub struct RunArgs {
    #[command(flatten)]
    pub shape: ShapeArgs,
    #[command(flatten)]
    pub method: MethodArgs,
    /// Contamination of the synthetic data, and the bound used for the sketch width.
    #[arg(long, default_value_t = 0.1)]
    pub alpha: f64,
    #[arg(long = "outlier-scale", default_value_t = 10.0)]
    pub outlier_scale: f64,
    #[arg(long, default_value_t = 0.1)]
    pub epsilon: f64,
    #[arg(long = "threshold-c", default_value_t = 3.0)]
    pub threshold_c: f64,
    /// Matrix CSV to process instead of generating one.
    #[arg(long)]
    pub input: Option<PathBuf>,
    /// Ground-truth outlier mask for --input (one 0/1 per line).
    #[arg(long, requires = "input")]
    pub mask: Option<PathBuf>,
    /// Clean signal matrix for --input, enables rel_error and the angle.
    #[arg(long, requires = "input")]
    pub clean: Option<PathBuf>,
    /// Also write the approximation to B_tilde.csv.
    #[arg(long = "save-approx")]
    pub save_approx: bool,
    /// Write projected row norms to this CSV.
    #[arg(long = "dump-norms")]
    pub dump_norms: Option<PathBuf>,
    /// Output directory.
    #[arg(long, default_value = ".")]
    pub out: PathBuf,
}

#[derive(Debug, Clone, Args)]
pub struct GridArgs {
    #[command(flatten)]
    pub shape: ShapeArgs,
    #[command(flatten)]
    pub method: MethodArgs,
    #[arg(long, value_delimiter = ',', default_value = "0.1,0.2,0.3,0.4")]
    pub alphas: Vec<f64>,
    #[arg(long, value_delimiter = ',', default_value = "5,10")]
    pub scales: Vec<f64>,
    #[arg(long, value_delimiter = ',', default_value = "2.5,3,3.5")]
    pub cs: Vec<f64>,
    #[arg(long, value_delimiter = ',', default_value = "0.05,0.1,0.15")]
    pub epsilons: Vec<f64>,
    #[arg(long, default_value_t = 10)]
    pub trials: usize,
    /// Per-run CSV; the aggregate goes next to it with an `_agg` suffix.
    #[arg(long, default_value = "grid.csv")]
    pub out: PathBuf,
}

#[derive(Debug, Clone, Args)]
pub struct BenchArgs {
    #[arg(long, value_delimiter = ',', default_value = "1000,2000,4000,8000,16000")]
    pub ms: Vec<usize>,
    #[arg(long, default_value_t = 200)]
    pub n: usize,
    #[arg(long, default_value_t = 10)]
    pub k: usize,
    #[arg(long, default_value_t = 0.1)]
    pub delta: f64,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, default_value_t = 0.1)]
    pub alpha: f64,
    #[arg(long = "outlier-scale", default_value_t = 10.0)]
    pub outlier_scale: f64,
    #[arg(long, default_value_t = 0.1)]
    pub epsilon: f64,
    #[arg(long = "threshold-c", default_value_t = 3.0)]
    pub threshold_c: f64,
    #[command(flatten)]
    pub method: MethodArgs,
    /// Timed repetitions per m (at least 3).
    #[arg(long, default_value_t = 3)]
    pub reps: usize,
    #[arg(long, default_value = "bench.csv")]
    pub out: PathBuf,
}

#[derive(Debug, Clone, Args)]
pub struct BoundArgs {
    #[arg(long, default_value_t = 0.1)]
    pub epsilon: f64,
    #[arg(long, default_value_t = 0.1)]
    pub alpha: f64,
    /// Normalized gap Δ / max clean norm.
    #[arg(long)]
    pub gamma: f64,
    #[arg(long, default_value_t = 0.1)]
    pub delta: f64,
    #[arg(long)]
    pub kappa: Option<f64>,
    #[arg(long = "threshold-c", default_value_t = 3.0)]
    pub threshold_c: f64,
    #[arg(long = "max-norm")]
    pub max_norm: f64,
    #[arg(long = "min-norm")]
    pub min_norm: f64,
    /// Use this false-positive rate instead of 2·exp(−c²/2).
    #[arg(long)]
    pub beta: Option<f64>,
    #[arg(long = "cross-term", value_enum, default_value_t = CrossTerm::OnePlusEpsilon)]
    pub cross_term: CrossTerm,
}

/// One row of `result.csv`. `None` fields are written empty.
#[derive(Debug, Clone, PartialEq)]
pub struct RunRecord {
    pub alpha: f64,
    pub outlier_scale: Option<f64>,
    pub c: f64,
    pub epsilon: f64,
    pub seed: u64,
    pub s: Option<usize>,
    pub projection_bypassed: Option<bool>,
    pub precision: Option<f64>,
    pub recall: Option<f64>,
    pub rel_error: Option<f64>,
    pub subspace_angle_deg: Option<f64>,
    pub n_retained: usize,
    pub runtime_ms: f64,
}

impl RunRecord {
    pub fn fields(&self) -> Vec<String> {
        let opt = |v: Option<f64>| v.map(fmt_f64).unwrap_or_default();
        vec![
            fmt_f64(self.alpha),
            opt(self.outlier_scale),
            fmt_f64(self.c),
            fmt_f64(self.epsilon),
            self.seed.to_string(),
            self.s.map(|s| s.to_string()).unwrap_or_default(),
            self.projection_bypassed
                .map(|b| (b as u8).to_string())
                .unwrap_or_default(),
            opt(self.precision),
            opt(self.recall),
            opt(self.rel_error),
            opt(self.subspace_angle_deg),
            self.n_retained.to_string(),
            fmt_f64(self.runtime_ms),
        ]
    }

    fn metric(&self, name: &str) -> Option<f64> {
        match name {
            "precision" => self.precision,
            "recall" => self.recall,
            "rel_error" => self.rel_error,
            "subspace_angle_deg" => self.subspace_angle_deg,
            "n_retained" => Some(self.n_retained as f64),
            "runtime_ms" => Some(self.runtime_ms),
            _ => None,
        }
    }
}

/// Shortest round-trip decimal; exponent form only at extreme magnitudes.
pub fn fmt_f64(x: f64) -> String {
    let a = x.abs();
    if a != 0.0 && !(1e-5..1e16).contains(&a) {
        format!("{x:e}")
    } else {
        format!("{x}")
    }
}

/// Ground truth available for evaluation.
#[derive(Debug, Clone, Copy, Default)]
pub struct Truth<'a> {
    pub clean: Option<&'a DenseMatrix>,
    pub mask: Option<&'a [bool]>,
}

/// Everything that fixes one pipeline run apart from the data.
#[derive(Debug, Clone)]
pub struct RunSpec {
    pub alpha: f64,
    pub outlier_scale: Option<f64>,
    pub seed: u64,
    pub config: PipelineConfig,
    pub baseline: Baseline,
}

impl RunSpec {
    fn record(&self) -> RunRecord {
        RunRecord {
            alpha: self.alpha,
            outlier_scale: self.outlier_scale,
            c: self.config.threshold_c,
            epsilon: self.config.sketch.epsilon,
            seed: self.seed,
            s: None,
            projection_bypassed: None,
            precision: None,
            recall: None,
            rel_error: None,
            subspace_angle_deg: None,
            n_retained: 0,
            runtime_ms: 0.0,
        }
    }
}

fn pipeline_config(
    method: &MethodArgs,
    k: usize,
    alpha: f64,
    epsilon: f64,
    c: f64,
    seed: u64,
) -> PipelineConfig {
    PipelineConfig {
        sketch: SketchSpec {
            epsilon,
            delta_prime: method.delta_prime,
            alpha,
            distribution: method.sketch.into(),
            dim_constant: method.dim_constant,
            sparse_density: method.sparse_density,
            seed,
        },
        threshold_c: c,
        rsvd: RsvdConfig {
            k,
            p: method.oversampling,
            seed,
        },
    }
}

/// Output of a single run: the CSV record plus what it was computed from.
#[derive(Debug, Clone)]
pub struct RunOutput {
    pub record: RunRecord,
    pub b_tilde: DenseMatrix,
    pub detection: Option<DetectionResult>,
}

/// Runs the method (or the PCA baseline) once and fills in every metric
/// the ground truth allows.
pub fn execute(a: &DenseMatrix, truth: Truth<'_>, spec: &RunSpec) -> CliResult<RunOutput> {
    let mut rec = spec.record();
    let (b_tilde, detection, k) = match spec.baseline {
        Baseline::None => {
            let out = run_pipeline(a, &spec.config)?;
            rec.s = Some(out.s);
            rec.projection_bypassed = Some(out.projection_bypassed);
            rec.n_retained = out.detection.retained.len();
            rec.runtime_ms = out.wall_time_ms;
            let k = out.factors.k();
            (out.b_tilde, Some(out.detection), k)
        }
        Baseline::Pca => {
            let start = Instant::now();
            let k = spec.config.rsvd.k.min(a.rows()).min(a.cols());
            let b = reconstruct(&best_rank_k_oracle(a, k)?);
            rec.runtime_ms = start.elapsed().as_secs_f64() * 1e3;
            rec.n_retained = a.rows();
            (b, None, k)
        }
    };

    if let Some(mask) = truth.mask {
        if mask.len() != a.rows() {
            return Err(CliError::Usage(format!(
                "mask has {} entries for {} rows",
                mask.len(),
                a.rows()
            )));
        }
        let discarded: &[usize] = detection.as_ref().map_or(&[], |d| &d.discarded);
        let (p, r) = precision_recall(mask, discarded);
        rec.precision = Some(p);
        rec.recall = Some(r);
    }
    if let Some(clean) = truth.clean {
        if clean.shape() != a.shape() {
            return Err(CliError::Usage(format!(
                "clean matrix is {:?}, input is {:?}",
                clean.shape(),
                a.shape()
            )));
        }
        let all_clean = vec![false; a.rows()];
        let mask = truth.mask.unwrap_or(&all_clean);
        rec.rel_error = Some(inlier_relative_error(clean, &b_tilde, mask)?);
        let inliers: Vec<usize> = (0..a.rows()).filter(|&i| !mask[i]).collect();
        let bc = clean.select_rows(&inliers)?;
        let tc = b_tilde.select_rows(&inliers)?;
        // A rank-deficient approximation leaves the angle undefined.
        rec.subspace_angle_deg = subspace_error(&bc, &tc, k).ok();
    }
    Ok(RunOutput {
        record: rec,
        b_tilde,
        detection,
    })
}

fn csv_writer(path: &Path) -> CliResult<csv::Writer<fs::File>> {
    if let Some(dir) = path.parent().filter(|d| !d.as_os_str().is_empty()) {
        fs::create_dir_all(dir).map_err(io_err(dir))?;
    }
    let file = fs::File::create(path).map_err(io_err(path))?;
    Ok(csv::WriterBuilder::new().has_headers(false).from_writer(file))
}

fn csv_fail(path: &Path) -> impl Fn(csv::Error) -> CliError + '_ {
    move |e| match e.into_kind() {
        csv::ErrorKind::Io(source) => CliError::Io {
            path: path.to_path_buf(),
            source,
        },
        other => CliError::Usage(format!("{}: {other:?}", path.display())),
    }
}

fn write_rows<I, R>(path: &Path, header: Option<&str>, rows: I) -> CliResult<()>
where
    I: IntoIterator<Item = R>,
    R: IntoIterator,
    R::Item: AsRef<[u8]>,
{
    let mut w = csv_writer(path)?;
    if let Some(h) = header {
        w.write_record(h.split(',')).map_err(csv_fail(path))?;
    }
    for r in rows {
        w.write_record(r).map_err(csv_fail(path))?;
    }
    w.flush().map_err(io_err(path))
}

pub fn write_matrix(path: &Path, m: &DenseMatrix) -> CliResult<()> {
    write_rows(
        path,
        None,
        (0..m.rows()).map(|i| m.row(i).iter().map(|&x| fmt_f64(x)).collect::<Vec<_>>()),
    )
}

pub fn write_mask(path: &Path, mask: &[bool]) -> CliResult<()> {
    write_rows(path, None, mask.iter().map(|&b| [if b { "1" } else { "0" }]))
}

pub fn write_records(path: &Path, records: &[RunRecord]) -> CliResult<()> {
    write_rows(path, Some(RESULT_HEADER), records.iter().map(RunRecord::fields))
}

pub fn write_norm_dump(path: &Path, det: &DetectionResult) -> CliResult<()> {
    write_rows(
        path,
        Some(NORM_DUMP_HEADER),
        det.row_norms.iter().enumerate().map(|(i, &r)| {
            vec![
                i.to_string(),
                fmt_f64(r),
                (det.is_retained(i) as u8).to_string(),
            ]
        }),
    )
}

fn read_records(path: &Path) -> CliResult<Vec<(u64, Vec<String>)>> {
    let text = fs::read(path).map_err(io_err(path))?;
    let mut rdr = csv::ReaderBuilder::new()
        .has_headers(false)
        .flexible(true)
        .trim(csv::Trim::All)
        .from_reader(text.as_slice());
    let mut out = Vec::new();
    for rec in rdr.records() {
        let rec = rec.map_err(|e| {
            let line = e.position().map_or(0, |p| p.line());
            CliError::Parse {
                path: path.to_path_buf(),
                line,
                msg: e.to_string(),
            }
        })?;
        let line = rec.position().map_or(0, |p| p.line());
        out.push((line, rec.iter().map(str::to_owned).collect()));
    }
    Ok(out)
}

/// Reads a headerless numeric CSV. Ragged rows and non-numeric or
/// non-finite fields are reported with their line number.
pub fn read_matrix(path: &Path) -> CliResult<DenseMatrix> {
    let parse_err = |line: u64, msg: String| CliError::Parse {
        path: path.to_path_buf(),
        line,
        msg,
    };
    let records = read_records(path)?;
    let Some((_, first)) = records.first() else {
        return Err(parse_err(1, "empty matrix".into()));
    };
    let cols = first.len();
    let mut data = Vec::with_capacity(records.len() * cols);
    for (line, fields) in &records {
        if fields.len() != cols {
            return Err(parse_err(
                *line,
                format!("expected {cols} fields, found {}", fields.len()),
            ));
        }
        for f in fields {
            let v: f64 = f
                .parse()
                .map_err(|_| parse_err(*line, format!("not a number: '{f}'")))?;
            if !v.is_finite() {
                return Err(parse_err(*line, format!("non-finite value '{f}'")));
            }
            data.push(v);
        }
    }
    Ok(DenseMatrix::from_vec(records.len(), cols, data)?)
}

pub fn read_mask(path: &Path) -> CliResult<Vec<bool>> {
    read_records(path)?
        .into_iter()
        .map(|(line, fields)| match fields.as_slice() {
            [f] if f == "0" => Ok(false),
            [f] if f == "1" => Ok(true),
            _ => Err(CliError::Parse {
                path: path.to_path_buf(),
                line,
                msg: format!("expected a single 0 or 1, found '{}'", fields.join(",")),
            }),
        })
        .collect()
}

/// `results.csv` → `results_agg.csv`.
pub fn agg_path(out: &Path) -> PathBuf {
    let stem = out
        .file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_else(|| "grid".into());
    out.with_file_name(format!("{stem}_agg.csv"))
}

/// Worker count from `ROWGUARD_THREADS`, else the machine's parallelism.
pub fn worker_threads() -> CliResult<usize> {
    match std::env::var(THREADS_ENV) {
        Ok(v) => match v.trim().parse::<usize>() {
            Ok(n) if n >= 1 => Ok(n),
            _ => Err(CliError::Usage(format!(
                "{THREADS_ENV} must be a positive integer, got '{v}'"
            ))),
        },
        Err(_) => Ok(std::thread::available_parallelism().map_or(1, |n| n.get())),
    }
}

fn synth_params(shape: &ShapeArgs, alpha: f64, outlier_scale: f64, seed: u64) -> SynthParams {
    SynthParams {
        m: shape.m,
        n: shape.n,
        k: shape.k,
        delta: shape.delta,
        alpha,
        outlier_scale,
        seed,
    }
}

pub fn cmd_synth(args: &SynthArgs) -> CliResult<()> {
    let ds = generate(&synth_params(&args.shape, args.alpha, args.outlier_scale, args.shape.seed))?;
    fs::create_dir_all(&args.out).map_err(io_err(&args.out))?;
    write_matrix(&args.out.join("A.csv"), &ds.a)?;
    write_mask(&args.out.join("mask.csv"), &ds.outlier_mask)?;
    write_matrix(&args.out.join("B.csv"), &ds.b)?;
    println!(
        "m={} n={} outliers={} max_clean_norm={} min_clean_norm/delta={}",
        ds.a.rows(),
        ds.a.cols(),
        ds.outliers().len(),
        fmt_f64(ds.max_clean_norm),
        fmt_f64(ds.signal_to_noise_floor())
    );
    Ok(())
}

pub fn cmd_run(args: &RunArgs) -> CliResult<RunRecord> {
    if args.dump_norms.is_some() && args.method.baseline == Baseline::Pca {
        return Err(CliError::Usage("--dump-norms needs the robust pipeline, not --baseline pca".into()));
    }
    let seed = args.shape.seed;
    let config = pipeline_config(
        &args.method,
        args.shape.k,
        args.alpha,
        args.epsilon,
        args.threshold_c,
        seed,
    );
    let (a, clean, mask, scale) = match &args.input {
        Some(path) => {
            let a = read_matrix(path)?;
            let clean = args.clean.as_deref().map(read_matrix).transpose()?;
            let mask = args.mask.as_deref().map(read_mask).transpose()?;
            (a, clean, mask, None)
        }
        None => {
            let ds = generate(&synth_params(&args.shape, args.alpha, args.outlier_scale, seed))?;
            (ds.a, Some(ds.b), Some(ds.outlier_mask), Some(args.outlier_scale))
        }
    };
    let spec = RunSpec {
        alpha: args.alpha,
        outlier_scale: scale,
        seed,
        config,
        baseline: args.method.baseline,
    };
    let truth = Truth {
        clean: clean.as_ref(),
        mask: mask.as_deref(),
    };
    let out = execute(&a, truth, &spec)?;

    fs::create_dir_all(&args.out).map_err(io_err(&args.out))?;
    write_records(&args.out.join("result.csv"), std::slice::from_ref(&out.record))?;
    if args.save_approx {
        write_matrix(&args.out.join("B_tilde.csv"), &out.b_tilde)?;
    }
    if let (Some(path), Some(det)) = (&args.dump_norms, &out.detection) {
        write_norm_dump(path, det)?;
    }
    println!("{RESULT_HEADER}");
    println!("{}", out.record.fields().join(","));
    Ok(out.record)
}

fn check_list(name: &str, v: &[f64]) -> CliResult<()> {
    if v.is_empty() {
        return Err(CliError::Usage(format!("--{name} must not be empty")));
    }
    Ok(())
}

/// Runs the grid in order `(α, scale, c, ε, trial)`. One dataset per
/// `(α, scale, trial)` is shared by every `(c, ε)`. A run that discards
/// every row is kept as a record with `n_retained = 0` and empty metrics.
pub fn run_grid(args: &GridArgs, threads: usize) -> CliResult<Vec<RunRecord>> {
    check_list("alphas", &args.alphas)?;
    check_list("scales", &args.scales)?;
    check_list("cs", &args.cs)?;
    check_list("epsilons", &args.epsilons)?;
    if args.trials == 0 {
        return Err(CliError::Usage("--trials must be at least 1".into()));
    }
    let groups: Vec<(f64, f64, usize)> = args
        .alphas
        .iter()
        .flat_map(|&a| args.scales.iter().map(move |&s| (a, s)))
        .flat_map(|(a, s)| (0..args.trials).map(move |t| (a, s, t)))
        .collect();
    let conditions: Vec<(f64, f64)> = args
        .cs
        .iter()
        .flat_map(|&c| args.epsilons.iter().map(move |&e| (c, e)))
        .collect();

    let run_group = |&(alpha, scale, trial): &(f64, f64, usize)| -> CliResult<Vec<RunRecord>> {
        let seed = args.shape.seed.wrapping_add(trial as u64);
        let ds = generate(&synth_params(&args.shape, alpha, scale, seed))?;
        let truth = Truth {
            clean: Some(&ds.b),
            mask: Some(&ds.outlier_mask),
        };
        conditions
            .iter()
            .map(|&(c, eps)| {
                let spec = RunSpec {
                    alpha,
                    outlier_scale: Some(scale),
                    seed,
                    config: pipeline_config(&args.method, args.shape.k, alpha, eps, c, seed),
                    baseline: args.method.baseline,
                };
                match execute(&ds.a, truth, &spec) {
                    Ok(out) => Ok(out.record),
                    Err(CliError::Pipeline(crate::Error::AllRowsDiscarded { .. })) => {
                        Ok(spec.record())
                    }
                    Err(e) => Err(e),
                }
            })
            .collect()
    };

    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()
        .map_err(|e| CliError::Usage(format!("thread pool: {e}")))?;
    let per_group: Vec<Vec<RunRecord>> = pool
        .install(|| groups.par_iter().map(run_group).collect::<Vec<_>>())
        .into_iter()
        .collect::<CliResult<_>>()?;

    let n_scales = args.scales.len();
    let mut records = Vec::with_capacity(per_group.len() * conditions.len());
    for ai in 0..args.alphas.len() {
        for si in 0..n_scales {
            for ci in 0..conditions.len() {
                for t in 0..args.trials {
                    let g = (ai * n_scales + si) * args.trials + t;
                    records.push(per_group[g][ci].clone());
                }
            }
        }
    }
    Ok(records)
}

/// Mean and sample standard deviation of every metric per
/// `(α, scale, c, ε)` cell, in first-appearance order. Empty metric
/// values are skipped; a cell with none gets empty fields.
pub fn aggregate(records: &[RunRecord]) -> (String, Vec<Vec<String>>) {
    let mut header = vec!["alpha", "outlier_scale", "c", "epsilon", "trials"]
        .into_iter()
        .map(String::from)
        .collect::<Vec<_>>();
    for m in AGG_METRICS {
        header.push(format!("{m}_mean"));
        header.push(format!("{m}_std"));
    }
    let key = |r: &RunRecord| (r.alpha.to_bits(), r.outlier_scale.map(f64::to_bits), r.c.to_bits(), r.epsilon.to_bits());
    let mut cells: Vec<(_, Vec<&RunRecord>)> = Vec::new();
    for r in records {
        match cells.iter_mut().find(|(k, _)| *k == key(r)) {
            Some((_, v)) => v.push(r),
            None => cells.push((key(r), vec![r])),
        }
    }
    let rows = cells
        .into_iter()
        .map(|(_, rs)| {
            let first = rs[0];
            let mut row = vec![
                fmt_f64(first.alpha),
                first.outlier_scale.map(fmt_f64).unwrap_or_default(),
                fmt_f64(first.c),
                fmt_f64(first.epsilon),
                rs.len().to_string(),
            ];
            for m in AGG_METRICS {
                let vals: Vec<f64> = rs.iter().filter_map(|r| r.metric(m)).collect();
                match mean_std(&vals) {
                    Some((mean, std)) => {
                        row.push(fmt_f64(mean));
                        row.push(fmt_f64(std));
                    }
                    None => row.extend([String::new(), String::new()]),
                }
            }
            row
        })
        .collect();
    (header.join(","), rows)
}

fn mean_std(v: &[f64]) -> Option<(f64, f64)> {
    if v.is_empty() {
        return None;
    }
    let n = v.len() as f64;
    let mean = v.iter().sum::<f64>() / n;
    let std = if v.len() < 2 {
        0.0
    } else {
        (v.iter().map(|x| (x - mean) * (x - mean)).sum::<f64>() / (n - 1.0)).sqrt()
    };
    Some((mean, std))
}

pub fn cmd_grid(args: &GridArgs) -> CliResult<Vec<RunRecord>> {
    let records = run_grid(args, worker_threads()?)?;
    write_records(&args.out, &records)?;
    let (header, rows) = aggregate(&records);
    let agg = agg_path(&args.out);
    write_rows(&agg, Some(&header), rows)?;
    println!(
        "wrote {} runs to {} and {}",
        records.len(),
        args.out.display(),
        agg.display()
    );
    Ok(records)
}

/// Least-squares slope of `ln(runtime)` against `ln(m)`; `None` with
/// fewer than two distinct `m`.
pub fn loglog_slope(points: &[(usize, f64)]) -> Option<f64> {
    let first = points.first()?.0;
    if points.iter().all(|p| p.0 == first) || points.iter().any(|p| !(p.1 > 0.0)) {
        return None;
    }
    let xs: Vec<f64> = points.iter().map(|p| (p.0 as f64).ln()).collect();
    let ys: Vec<f64> = points.iter().map(|p| p.1.ln()).collect();
    let n = xs.len() as f64;
    let mx = xs.iter().sum::<f64>() / n;
    let my = ys.iter().sum::<f64>() / n;
    let sxy: f64 = xs.iter().zip(&ys).map(|(x, y)| (x - mx) * (y - my)).sum();
    let sxx: f64 = xs.iter().map(|x| (x - mx) * (x - mx)).sum();
    Some(sxy / sxx)
}

fn median_of(mut v: Vec<f64>) -> f64 {
    v.sort_by(f64::total_cmp);
    let n = v.len();
    if n % 2 == 1 {
        v[n / 2]
    } else {
        0.5 * (v[n / 2 - 1] + v[n / 2])
    }
}

/// Median pipeline wall time for each `m`, excluding data generation.
pub fn run_bench(args: &BenchArgs) -> CliResult<Vec<(usize, f64)>> {
    if args.ms.is_empty() {
        return Err(CliError::Usage("--ms must not be empty".into()));
    }
    if args.ms.windows(2).any(|w| w[0] > w[1]) {
        return Err(CliError::Usage("--ms must be ascending".into()));
    }
    if args.reps < 3 {
        return Err(CliError::Usage("--reps must be at least 3".into()));
    }
    let shape = ShapeArgs {
        m: 0,
        n: args.n,
        k: args.k,
        delta: args.delta,
        seed: args.seed,
    };
    let mut out = Vec::with_capacity(args.ms.len());
    for &m in &args.ms {
        let ds = generate(&synth_params(&ShapeArgs { m, ..shape.clone() }, args.alpha, args.outlier_scale, args.seed))?;
        let spec = RunSpec {
            alpha: args.alpha,
            outlier_scale: Some(args.outlier_scale),
            seed: args.seed,
            config: pipeline_config(&args.method, args.k, args.alpha, args.epsilon, args.threshold_c, args.seed),
            baseline: args.method.baseline,
        };
        let times = (0..args.reps)
            .map(|_| execute(&ds.a, Truth::default(), &spec).map(|o| o.record.runtime_ms))
            .collect::<CliResult<Vec<_>>>()?;
        out.push((m, median_of(times)));
    }
    Ok(out)
}

pub fn cmd_bench(args: &BenchArgs) -> CliResult<Option<f64>> {
    let points = run_bench(args)?;
    write_rows(
        &args.out,
        Some(BENCH_HEADER),
        points.iter().map(|&(m, t)| vec![m.to_string(), fmt_f64(t)]),
    )?;
    let slope = loglog_slope(&points);
    println!("{BENCH_HEADER}");
    for (m, t) in &points {
        println!("{m},{}", fmt_f64(*t));
    }
    println!("slope={}", slope.map(fmt_f64).unwrap_or_default());
    Ok(slope)
}

pub fn cmd_bound(args: &BoundArgs) -> CliResult<()> {
    let inp = TheoryBoundInputs {
        epsilon: args.epsilon,
        alpha: args.alpha,
        gamma: args.gamma,
        delta: args.delta,
        kappa: args
            .kappa
            .unwrap_or_else(|| crate::bounds::kappa_condition(args.epsilon)),
        c: args.threshold_c,
        max_clean_norm: args.max_norm,
        min_clean_norm: args.min_norm,
        beta_override: args.beta,
        cross_term: match args.cross_term {
            CrossTerm::OnePlusEpsilon => CrossTermConstant::OnePlusEpsilon,
            CrossTerm::Two => CrossTermConstant::Two,
        },
    };
    let r = eta_bound(&inp)?;
    let mut stdout = std::io::stdout().lock();
    for (name, v) in [
        ("beta", r.beta),
        ("C", r.c),
        ("C1", r.c1),
        ("C2", r.c2),
        ("psi", r.psi),
        ("eta", r.eta),
    ] {
        writeln!(stdout, "{name}={}", fmt_f64(v)).map_err(io_err(Path::new("<stdout>")))?;
    }
    Ok(())
}

pub fn dispatch(cli: &Cli) -> CliResult<()> {
    match &cli.command {
        Command::Synth(a) => cmd_synth(a),
        Command::Run(a) => cmd_run(a).map(drop),
        Command::Grid(a) => cmd_grid(a).map(drop),
        Command::Bench(a) => cmd_bench(a).map(drop),
        Command::Bound(a) => cmd_bound(a),
    }
}

/// Parses `args`, runs the subcommand and returns the process exit code.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::parse_args(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return e.exit_code();
        }
    };
    match dispatch(&cli) {
        Ok(()) => 0,
        Err(e) => {
            eprintln!("rowguard: {e}");
            e.exit_code()
        }
    }
}
