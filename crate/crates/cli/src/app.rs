//! Argument parsing and dispatch.
//!
//! Exit codes: 0 success, 1 a verification failed, 2 bad invocation or
//! input outside a check's hypotheses, 3 file errors.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::{Instant, SystemTime, UNIX_EPOCH};

use avgconn_core::bounds::limit_bound;
use avgconn_core::connectivity::{
    all_pairs_report_with, is_minimally_k_connected_with, ConnectivityMode, MinimalityStrategy, PairStrategy,
};
use avgconn_core::search::{enumerate_connected_graphs, find_optimal, judge, Evidence, NATIVE_LIMIT};
use avgconn_core::separators::{verify_gkp_separators, DEFAULT_BRUTE_FORCE_LIMIT};
use avgconn_core::{graph6, ConstructionSpec, Family, Graph};
use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::io::{self, IoError, OnError};
use crate::report::{
    fmt_rational, pair_report_csv, to_json, BoundReportDto, ConstructionSidecar, EvidenceDto, MetaSidecar,
    MinimalityDto, PairReportDto, SearchReportDto, SeparatorReportDto, WitnessCheckDto, WitnessReportDto,
};
use crate::suites::{self, BoundOutcome, PathPlan, Tier};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_IO: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "avgconn", version, about = "Exact average connectivity and minimally k-connected constructions")]
pub struct Cli {
    /// Worker threads; 0 picks one per core.
    #[arg(long, global = true, env = "AVGCONN_THREADS", default_value_t = 0)]
    pub threads: usize,
    /// Seed for every sampled or randomized check.
    #[arg(long, global = true, default_value_t = suites::DEFAULT_SEED)]
    pub seed: u64,
    #[arg(long, global = true, value_enum, default_value_t = TierArg::Default)]
    pub tier: TierArg,
    /// What goes to standard output.
    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Text)]
    pub output: OutputFormat,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TierArg {
    Default,
    Long,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Text,
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ModeArg {
    Vertex,
    Edge,
}

impl From<ModeArg> for ConnectivityMode {
    fn from(m: ModeArg) -> Self {
        match m {
            ModeArg::Vertex => ConnectivityMode::Vertex,
            ModeArg::Edge => ConnectivityMode::Edge,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FamilyArg {
    Gkp,
    Gamma,
    Psi,
    Phi,
}

impl From<FamilyArg> for Family {
    fn from(f: FamilyArg) -> Self {
        match f {
            FamilyArg::Gkp => Family::Gkp,
            FamilyArg::Gamma => Family::Gamma,
            FamilyArg::Psi => Family::Psi,
            FamilyArg::Phi => Family::Phi,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum GraphFormatArg {
    Graph6,
    Edgelist,
    Dot,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Build a construction and write it out.
    Construct {
        #[command(flatten)]
        family: FamilyArgs,
        #[arg(long, value_enum, default_value_t = GraphFormatArg::Graph6)]
        format: GraphFormatArg,
        /// Graph file; standard output if absent.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Label table and parameters; defaults to `<out>.labels.json` when
        /// `--out` is given.
        #[arg(long)]
        sidecar: Option<PathBuf>,
    },
    /// All-pairs connectivity report of one graph.
    Analyze {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long, value_enum, default_value_t = ModeArg::Vertex)]
        mode: ModeArg,
        /// Fill pairs at a minimum-degree vertex from the global value.
        #[arg(long)]
        shortcut: bool,
        /// Report file (JSON, or CSV with `--output csv`).
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check structural properties and formulas.
    #[command(subcommand)]
    Verify(VerifyCommand),
    /// Exhaustive search over connected graphs of one order.
    #[command(subcommand)]
    Search(SearchCommand),
}

#[derive(Debug, Args)]
pub struct FamilyArgs {
    #[arg(long, value_enum)]
    pub family: FamilyArg,
    #[arg(long)]
    pub k: usize,
    #[arg(long)]
    pub p: Option<usize>,
    /// Multiplier for phi, with p = r k^2 - 1.
    #[arg(long)]
    pub r: Option<usize>,
}

impl FamilyArgs {
    fn spec(&self) -> Result<ConstructionSpec, CliError> {
        let need_p = || self.p.ok_or_else(|| CliError::Usage("--p is required for this family".into()));
        let spec = match self.family {
            FamilyArg::Gkp => ConstructionSpec::gkp(self.k, need_p()?),
            FamilyArg::Gamma => ConstructionSpec::gamma(self.k, need_p()?),
            FamilyArg::Psi => ConstructionSpec::psi(self.k, need_p()?),
            FamilyArg::Phi => {
                let r = self.r.ok_or_else(|| CliError::Usage("--r is required for phi".into()))?;
                ConstructionSpec::phi(self.k, r)
            }
        }?;
        Ok(spec)
    }
}

#[derive(Debug, Subcommand)]
pub enum VerifyCommand {
    /// Minimal k-(edge-)connectivity of a file or a construction.
    Minimal {
        #[arg(long = "in", conflicts_with = "family")]
        input: Option<PathBuf>,
        #[arg(long, value_enum, requires = "p_or_r")]
        family: Option<FamilyArg>,
        #[arg(long, group = "p_or_r")]
        p: Option<usize>,
        #[arg(long, group = "p_or_r")]
        r: Option<usize>,
        #[arg(long)]
        k: usize,
        #[arg(long, value_enum, default_value_t = ModeArg::Vertex)]
        mode: ModeArg,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Size and shape of every minimal separator of every pair of G_{k,p}.
    Separators {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        p: usize,
        #[arg(long, default_value_t = DEFAULT_BRUTE_FORCE_LIMIT)]
        max_n: usize,
        /// Include every certificate in the report.
        #[arg(long)]
        certificates: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Disjoint-path witnesses on Psi_{k,p}.
    Paths {
        #[arg(long)]
        k: usize,
        /// `A:B`, inclusive.
        #[arg(long, value_parser = parse_range)]
        t_range: Option<(usize, usize)>,
        #[arg(long, value_parser = parse_range)]
        r_range: Option<(usize, usize)>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Average against k + k(n-2)^2 / (8n(n-1)).
    Bound {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        k: usize,
        #[arg(long, value_enum, default_value_t = ModeArg::Vertex)]
        mode: ModeArg,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Exact average of gamma (edge) or psi (vertex) against (9p-3)k/(8p-2).
    Formula {
        #[command(flatten)]
        family: FamilyArgs,
        /// Percent of pairs re-checked by full flow (psi only).
        #[arg(long, default_value_t = 10)]
        sample_percent: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Global connectivity and W-pair values of phi.
    Phi {
        #[arg(long, default_value_t = 6)]
        k: usize,
        #[arg(long, default_value_t = 7)]
        r: usize,
        /// Sampled W-pairs on the default tier.
        #[arg(long, default_value_t = 200)]
        pairs: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SourceArg {
    Native,
    File,
}

#[derive(Debug, Args)]
pub struct SourceArgs {
    /// `native` enumerates up to the native order limit; otherwise
    /// graphs come from `--in`.
    #[arg(long, value_enum, default_value_t = SourceArg::Native)]
    pub source: SourceArg,
    /// graph6 file; an `n` wrapped in braces anywhere in the path is
    /// replaced by the order.
    #[arg(long = "in")]
    pub input: Option<String>,
    /// Skip malformed lines instead of stopping.
    #[arg(long)]
    pub skip_bad_lines: bool,
}

#[derive(Debug, Subcommand)]
pub enum SearchCommand {
    /// Optimal minimally k-(edge-)connected graphs of one order.
    Optimal {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long, value_enum, default_value_t = ModeArg::Vertex)]
        mode: ModeArg,
        #[command(flatten)]
        source: SourceArgs,
        #[arg(long)]
        report: Option<PathBuf>,
        /// graph6 file of the optima; defaults to the report path with a
        /// `.g6` extension.
        #[arg(long)]
        optima: Option<PathBuf>,
    },
    /// Whether every optimum is degree-partitioned, over a range of orders.
    Conjecture {
        #[arg(long)]
        k: usize,
        #[arg(long, value_parser = parse_range)]
        n_range: (usize, usize),
        #[arg(long, value_enum, default_value_t = ModeArg::Vertex)]
        mode: ModeArg,
        #[command(flatten)]
        source: SourceArgs,
        #[arg(long)]
        report: Option<PathBuf>,
    },
}

fn parse_range(s: &str) -> Result<(usize, usize), String> {
    let (a, b) = s.split_once(':').ok_or_else(|| format!("expected A:B, got {s:?}"))?;
    let a: usize = a.trim().parse().map_err(|e| format!("{a:?}: {e}"))?;
    let b: usize = b.trim().parse().map_err(|e| format!("{b:?}: {e}"))?;
    if a > b {
        return Err(format!("empty range {a}:{b}"));
    }
    Ok((a, b))
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Io(#[from] IoError),
    #[error(transparent)]
    Core(#[from] avgconn_core::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) | CliError::Core(_) => EXIT_USAGE,
            CliError::Io(_) => EXIT_IO,
        }
    }
}

/// What a command produced.
struct Outcome {
    /// Primary report (JSON unless stated otherwise).
    report: String,
    text: String,
    csv: Option<String>,
    /// `None` for commands that verify nothing.
    passed: Option<bool>,
}

impl Outcome {
    fn code(&self) -> i32 {
        match self.passed {
            Some(false) => EXIT_FAIL,
            _ => EXIT_OK,
        }
    }
}

struct Ctx {
    seed: u64,
    tier: Tier,
    threads: usize,
    output: OutputFormat,
    argv: Vec<String>,
    started: Instant,
}

impl Ctx {
    /// Writes a primary report plus its timing sidecar.
    fn write_report(&self, path: &Path, contents: &str) -> Result<(), CliError> {
        io::write_atomic(path, contents.as_bytes())?;
        let meta = MetaSidecar {
            command: self.argv.clone(),
            elapsed_seconds: self.started.elapsed().as_secs_f64(),
            threads: rayon::current_num_threads(),
            finished_unix: SystemTime::now().duration_since(UNIX_EPOCH).map_or(0, |d| d.as_secs()),
            version: env!("CARGO_PKG_VERSION").into(),
        };
        io::write_atomic(&meta_path(path), to_json(&meta).as_bytes())?;
        Ok(())
    }
}

/// `out.json` → `out.meta.json`.
pub fn meta_path(path: &Path) -> PathBuf {
    let stem = path.file_stem().map_or_else(|| "report".into(), |s| s.to_string_lossy().into_owned());
    path.with_file_name(format!("{stem}.meta.json"))
}

/// Parses `args` (program name first) and runs the command.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let args: Vec<OsString> = args.into_iter().map(Into::into).collect();
    let cli = match Cli::try_parse_from(&args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let rendered = e.render().to_string();
            let _ = if code == EXIT_OK { write!(stdout, "{rendered}") } else { write!(stderr, "{rendered}") };
            return code;
        }
    };
    let ctx = Ctx {
        seed: cli.seed,
        tier: match cli.tier {
            TierArg::Default => Tier::Default,
            TierArg::Long => Tier::Long,
        },
        threads: cli.threads,
        output: cli.output,
        argv: args.iter().map(|a| a.to_string_lossy().into_owned()).collect(),
        started: Instant::now(),
    };
    let pool = match rayon::ThreadPoolBuilder::new().num_threads(ctx.threads).build() {
        Ok(pool) => pool,
        Err(e) => {
            let _ = writeln!(stderr, "error: thread pool: {e}");
            return EXIT_USAGE;
        }
    };
    let mut buffered = Vec::new();
    let result = pool.install(|| dispatch(&ctx, cli.command, &mut buffered));
    let _ = stdout.write_all(&buffered);
    match result {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            e.exit_code()
        }
    }
}

fn dispatch(ctx: &Ctx, command: Command, stdout: &mut dyn Write) -> Result<i32, CliError> {
    let (outcome, out) = match command {
        Command::Construct { family, format, out, sidecar } => {
            return construct(ctx, &family, format, out.as_deref(), sidecar.as_deref(), stdout);
        }
        Command::Analyze { input, mode, shortcut, out } => (analyze(&input, mode.into(), shortcut)?, out),
        Command::Verify(v) => match v {
            VerifyCommand::Minimal { input, family, p, r, k, mode, out } => {
                let g = match (input, family) {
                    (Some(path), _) => io::read_graph(&path)?,
                    (None, Some(family)) => FamilyArgs { family, k, p, r }.spec()?.build()?,
                    (None, None) => return Err(CliError::Usage("give --in FILE or --family".into())),
                };
                (verify_minimal(&g, k, mode.into())?, out)
            }
            VerifyCommand::Separators { k, p, max_n, certificates, out } => {
                (verify_separators(k, p, max_n, certificates)?, out)
            }
            VerifyCommand::Paths { k, t_range, r_range, out } => (verify_paths(ctx, k, t_range, r_range)?, out),
            VerifyCommand::Bound { input, k, mode, out } => (verify_bound(&input, k, mode.into())?, out),
            VerifyCommand::Formula { family, sample_percent, out } => {
                (verify_formula(ctx, &family, sample_percent)?, out)
            }
            VerifyCommand::Phi { k, r, pairs, out } => (verify_phi(ctx, k, r, pairs)?, out),
        },
        Command::Search(s) => match s {
            SearchCommand::Optimal { n, k, mode, source, report, optima } => {
                return search_optimal(ctx, n, k, mode.into(), &source, report.as_deref(), optima.as_deref(), stdout);
            }
            SearchCommand::Conjecture { k, n_range, mode, source, report } => {
                (search_conjecture(k, n_range, mode.into(), &source)?, report)
            }
        },
    };
    emit(ctx, &outcome, out.as_deref(), stdout)?;
    Ok(outcome.code())
}

fn emit(ctx: &Ctx, outcome: &Outcome, out: Option<&Path>, stdout: &mut dyn Write) -> Result<(), CliError> {
    if let Some(path) = out {
        let body = match (&outcome.csv, ctx.output) {
            (Some(csv), OutputFormat::Csv) => csv,
            _ => &outcome.report,
        };
        ctx.write_report(path, body)?;
    }
    let shown = match ctx.output {
        OutputFormat::Text => &outcome.text,
        OutputFormat::Json => &outcome.report,
        OutputFormat::Csv => outcome.csv.as_ref().ok_or_else(|| CliError::Usage("CSV output is only available for analyze".into()))?,
    };
    write_stdout(stdout, shown)
}

fn write_stdout(stdout: &mut dyn Write, text: &str) -> Result<(), CliError> {
    stdout
        .write_all(text.as_bytes())
        .map_err(|source| CliError::Io(IoError::File { path: "<stdout>".into(), source }))
}

fn verdict(passed: bool) -> &'static str {
    if passed {
        "PASS"
    } else {
        "FAIL"
    }
}

fn construct(
    ctx: &Ctx,
    family: &FamilyArgs,
    format: GraphFormatArg,
    out: Option<&Path>,
    sidecar: Option<&Path>,
    stdout: &mut dyn Write,
) -> Result<i32, CliError> {
    let spec = family.spec()?;
    let g = spec.build()?;
    let body = match format {
        GraphFormatArg::Graph6 => format!("{}\n", graph6::encode(&g)),
        GraphFormatArg::Edgelist => io::format_edge_list(&g),
        GraphFormatArg::Dot => io::format_dot(&g),
    };
    let side = to_json(&ConstructionSidecar::new(&spec));
    let sidecar = sidecar.map(Path::to_path_buf).or_else(|| {
        out.map(|o| {
            let stem = o.file_stem().map_or_else(|| "graph".into(), |s| s.to_string_lossy().into_owned());
            o.with_file_name(format!("{stem}.labels.json"))
        })
    });
    match out {
        Some(path) => io::write_atomic(path, body.as_bytes())?,
        None => write_stdout(stdout, &body)?,
    }
    if let Some(path) = sidecar {
        ctx.write_report(&path, &side)?;
    }
    Ok(EXIT_OK)
}

fn analyze(input: &Path, mode: ConnectivityMode, shortcut: bool) -> Result<Outcome, CliError> {
    let g = io::read_graph(input)?;
    let strategy = if shortcut { PairStrategy::DegreeShortcut } else { PairStrategy::Full };
    let r = all_pairs_report_with(&g, mode, strategy)?;
    let text = format!(
        "order {}  mode {}  total {}  average {}  global {}\n",
        r.order,
        mode.as_str(),
        r.total,
        fmt_rational(r.average()),
        r.global()
    );
    Ok(Outcome { report: to_json(&PairReportDto::from(&r)), text, csv: Some(pair_report_csv(&r)), passed: None })
}

fn verify_minimal(g: &Graph, k: usize, mode: ConnectivityMode) -> Result<Outcome, CliError> {
    if k == 0 {
        return Err(CliError::Usage("k must be at least 1".into()));
    }
    let outcome = is_minimally_k_connected_with(g, k as u32, mode, MinimalityStrategy::Exhaustive)?;
    let dto = MinimalityDto::new(mode, k as u32, &outcome);
    let mut text = format!("minimally {k}-connected ({}): {}\n", mode.as_str(), verdict(dto.passed));
    if let Some(c) = dto.global_connectivity.filter(|&c| c as usize != k) {
        let _ = writeln!(text, "global connectivity is {c}");
    }
    if let Some([u, v]) = dto.removable_edge {
        let _ = writeln!(text, "deleting edge {u}-{v} keeps connectivity {k}");
    }
    Ok(Outcome { report: to_json(&dto), text, csv: None, passed: Some(dto.passed) })
}

fn verify_separators(k: usize, p: usize, max_n: usize, certificates: bool) -> Result<Outcome, CliError> {
    let spec = ConstructionSpec::gkp(k, p)?;
    let g = spec.build()?;
    let summaries = verify_gkp_separators(k, p, max_n)?;
    let dto = SeparatorReportDto::new(&g, k, p, &summaries, certificates);
    let mut text = String::from("pair        seps  size k  size 2k-2  other  nbhd  two-run  touch  result\n");
    for s in &dto.pairs {
        let _ = writeln!(
            text,
            "{:<5} {:<5} {:>4} {:>7} {:>10} {:>6} {:>5} {:>8} {:>6}  {}",
            s.u,
            s.v,
            s.separators,
            s.size_k,
            s.size_2k_minus_2,
            s.other_size,
            s.neighbourhood,
            s.two_run,
            s.runs_touch,
            verdict(s.passed)
        );
    }
    let _ = writeln!(text, "G_{{{k},{p}}}: {} pairs, {}", dto.pairs.len(), verdict(dto.passed));
    Ok(Outcome { report: to_json(&dto), text, csv: None, passed: Some(dto.passed) })
}

fn verify_paths(
    ctx: &Ctx,
    k: usize,
    t_range: Option<(usize, usize)>,
    r_range: Option<(usize, usize)>,
) -> Result<Outcome, CliError> {
    if k == 5 && ctx.tier == Tier::Default && t_range.is_none() && r_range.is_none() {
        return Err(CliError::Usage("the full k=5 suite runs with --tier long".into()));
    }
    let plan = match (t_range, r_range) {
        (None, None) => PathPlan::standard(k)?,
        (Some((a, b)), None) => PathPlan::for_t_range(k, a, b)?,
        (None, Some((a, b))) => PathPlan::for_r_range(k, a, b)?,
        (Some((a, b)), Some((c, d))) => PathPlan::for_t_range(k, a, b)?.merge(PathPlan::for_r_range(k, c, d)?),
    };
    let s = k * k * k - k * k;
    if let Some((_, b)) = r_range.filter(|&(_, b)| b >= s) {
        return Err(CliError::Usage(format!("--r-range must stay below s={s}, got {b}")));
    }
    if t_range.is_some_and(|(a, _)| a == 0) {
        return Err(CliError::Usage("--t-range starts at 1".into()));
    }
    let run = suites::run_path_plan(&plan)?;
    let g = run.witness.graph();
    let checks: Vec<WitnessCheckDto> = run.checks.iter().map(|c| WitnessCheckDto::new(g, c)).collect();
    let passed = run.passed();
    let mut text = String::new();
    for kind in ["small-t", "P", "R", "Q", "full"] {
        let of_kind: Vec<&WitnessCheckDto> = checks.iter().filter(|c| c.kind == kind).collect();
        if of_kind.is_empty() {
            continue;
        }
        let ok = of_kind.iter().filter(|c| c.passed).count();
        let _ = writeln!(text, "{kind:<8} {ok}/{} {}", of_kind.len(), verdict(ok == of_kind.len()));
        for c in of_kind.iter().filter(|c| !c.passed) {
            let _ = writeln!(text, "  {kind} {}: {}", c.parameter, c.error.as_deref().unwrap_or("failed"));
        }
    }
    let _ = writeln!(text, "Psi_{{{k},{}}} paths: {}", plan.p, verdict(passed));
    let dto = WitnessReportDto { k, p: plan.p, s, checks, passed };
    Ok(Outcome { report: to_json(&dto), text, csv: None, passed: Some(passed) })
}

fn verify_bound(input: &Path, k: usize, mode: ConnectivityMode) -> Result<Outcome, CliError> {
    let g = io::read_graph(input)?;
    let check = match suites::bound_check(&input.display().to_string(), &g, k, mode, None)? {
        BoundOutcome::Checked(c) => c,
        BoundOutcome::NotApplicable(why) => {
            return Err(CliError::Usage(format!(
                "{}: input is not a degree-partitioned minimally {k}-{}connected graph of order at least 2k+1 ({why})",
                input.display(),
                if mode == ConnectivityMode::Edge { "edge-" } else { "" }
            )));
        }
    };
    let passed = check.passed();
    let dto = BoundReportDto {
        mode: mode.as_str().into(),
        k,
        n: check.n,
        average: check.average.into(),
        bound: check.bound.into(),
        margin: (check.bound - check.average).into(),
        limit: limit_bound(k as u64).into(),
        passed,
    };
    let text = format!(
        "average {}  bound {}  margin {}  {}\n",
        fmt_rational(check.average),
        fmt_rational(check.bound),
        fmt_rational(check.bound - check.average),
        verdict(passed)
    );
    Ok(Outcome { report: to_json(&dto), text, csv: None, passed: Some(passed) })
}

#[derive(serde::Serialize)]
struct FormulaDto {
    family: String,
    k: usize,
    p: usize,
    mode: String,
    computed: crate::report::RationalDto,
    expected: crate::report::RationalDto,
    sampled_pairs: Option<usize>,
    shortcut_mismatches: Option<Vec<[usize; 2]>>,
    passed: bool,
}

fn verify_formula(ctx: &Ctx, family: &FamilyArgs, percent: usize) -> Result<Outcome, CliError> {
    let p = family.p.ok_or_else(|| CliError::Usage("--p is required".into()))?;
    let k = family.k;
    let dto = match family.family {
        FamilyArg::Gamma => {
            let c = suites::gamma_edge_formula(k, p)?;
            FormulaDto {
                family: "gamma".into(),
                k,
                p,
                mode: "edge".into(),
                computed: c.computed.into(),
                expected: c.expected.into(),
                sampled_pairs: None,
                shortcut_mismatches: None,
                passed: c.passed(),
            }
        }
        FamilyArg::Psi => {
            if percent == 0 || percent > 100 {
                return Err(CliError::Usage("--sample-percent must be in 1..=100".into()));
            }
            let c = suites::psi_vertex_formula(k, p, percent, ctx.seed)?;
            FormulaDto {
                family: "psi".into(),
                k,
                p,
                mode: "vertex".into(),
                computed: c.formula.computed.into(),
                expected: c.formula.expected.into(),
                sampled_pairs: Some(c.sampled),
                shortcut_mismatches: Some(c.mismatches.iter().map(|&(u, v)| [u, v]).collect()),
                passed: c.passed(),
            }
        }
        _ => return Err(CliError::Usage("the closed form applies to gamma and psi".into())),
    };
    let text = format!(
        "{} k={k} p={p}: computed {}/{}  expected {}/{}  {}\n",
        dto.family,
        dto.computed.num,
        dto.computed.den,
        dto.expected.num,
        dto.expected.den,
        verdict(dto.passed)
    );
    let passed = dto.passed;
    Ok(Outcome { report: to_json(&dto), text, csv: None, passed: Some(passed) })
}

#[derive(serde::Serialize)]
struct PhiDto {
    k: usize,
    r: usize,
    p: usize,
    global_connectivity: u32,
    /// `[i, j, κ(w_i, w_j)]`.
    pairs: Vec<[usize; 3]>,
    passed: bool,
}

fn verify_phi(ctx: &Ctx, k: usize, r: usize, sample: usize) -> Result<Outcome, CliError> {
    let c = suites::phi_check(k, r, sample, ctx.seed, ctx.tier)?;
    let p = c.p;
    let dto = PhiDto {
        k,
        r,
        p,
        global_connectivity: c.global,
        pairs: c.pairs.iter().zip(&c.values).map(|(&(u, v), &x)| [u, v, x as usize]).collect(),
        passed: c.passed(),
    };
    let low = dto.pairs.iter().filter(|t| t[2] != 3 * k).count();
    let text = format!(
        "Phi_{{{k},{p}}}: global {}  W-pairs checked {}  below {}: {}  {}\n",
        c.global,
        dto.pairs.len(),
        3 * k,
        low,
        verdict(dto.passed)
    );
    let passed = dto.passed;
    Ok(Outcome { report: to_json(&dto), text, csv: None, passed: Some(passed) })
}

fn candidates(n: usize, source: &SourceArgs) -> Result<Vec<Graph>, CliError> {
    match source.source {
        SourceArg::Native => {
            if n > NATIVE_LIMIT {
                return Err(CliError::Usage(format!(
                    "native enumeration stops at n={NATIVE_LIMIT}; use --source file --in FILE"
                )));
            }
            Ok(enumerate_connected_graphs(n)?)
        }
        SourceArg::File => {
            let pattern = source.input.as_ref().ok_or_else(|| CliError::Usage("--source file needs --in".into()))?;
            let path = PathBuf::from(pattern.replace("{n}", &n.to_string()));
            let policy = if source.skip_bad_lines { OnError::Skip } else { OnError::Abort };
            let mut lines = io::open_graph6(&path, policy)?;
            let graphs = lines.by_ref().collect::<Result<Vec<_>, _>>()?;
            for (line, why) in &lines.skipped {
                eprintln!("warning: {}:{line}: skipped ({why})", path.display());
            }
            Ok(graphs)
        }
    }
}

fn search_text(r: &SearchReportDto) -> String {
    let best = r.best_value.map_or_else(|| "none".into(), |b| fmt_rational(b.into()));
    format!(
        "n={} k={} {}: candidates {}  minimal {}  best {}  optima {}  degree-partitioned {}  bound {}\n",
        r.n,
        r.k,
        r.mode,
        r.count_candidates,
        r.count_minimal,
        best,
        r.optima.join(" "),
        r.all_optima_degree_partitioned,
        r.bound_satisfied.map_or("n/a", |b| if b { "ok" } else { "violated" })
    )
}

#[allow(clippy::too_many_arguments)]
fn search_optimal(
    ctx: &Ctx,
    n: usize,
    k: usize,
    mode: ConnectivityMode,
    source: &SourceArgs,
    report: Option<&Path>,
    optima: Option<&Path>,
    stdout: &mut dyn Write,
) -> Result<i32, CliError> {
    let graphs = candidates(n, source)?;
    let r = find_optimal(n, k, mode, graphs)?;
    let dto = SearchReportDto::from(&r);
    let outcome = Outcome {
        report: to_json(&dto),
        text: search_text(&dto),
        csv: None,
        passed: Some(dto.bound_satisfied != Some(false)),
    };
    emit(ctx, &outcome, report, stdout)?;
    let optima = optima.map(Path::to_path_buf).or_else(|| report.map(|p| p.with_extension("g6")));
    if let Some(path) = optima {
        let body: String = dto.optima.iter().map(|s| format!("{s}\n")).collect();
        io::write_atomic(&path, body.as_bytes())?;
    }
    Ok(outcome.code())
}

fn search_conjecture(
    k: usize,
    (a, b): (usize, usize),
    mode: ConnectivityMode,
    source: &SourceArgs,
) -> Result<Outcome, CliError> {
    let mut reports = Vec::new();
    for n in a..=b {
        reports.push(find_optimal(n, k, mode, candidates(n, source)?)?);
    }
    let verdict_value = judge(k, &reports)?;
    let evidence = Evidence { k, mode, reports, verdict: verdict_value };
    let dto = EvidenceDto::from(&evidence);
    let mut text: String = dto.reports.iter().map(search_text).collect();
    let _ = writeln!(text, "verdict: {}", dto.verdict);
    if let Some(c) = &dto.counterexample {
        let _ = writeln!(text, "counterexample at n={}: {}", c.n, c.graph6);
    }
    let passed = dto.passed;
    Ok(Outcome { report: to_json(&dto), text, csv: None, passed: Some(passed) })
}
