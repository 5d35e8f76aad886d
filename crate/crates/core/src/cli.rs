// Copyright 2026 The qvf Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

//! The `qvf` command-line front end.
//!
//! ```text
//! qvf bench list
//! qvf bench build bv --secret 011 --out bv.qasm
//! qvf campaign run bench:bv --grid-step 15 --mode exact --out bv.csv
//! qvf report heatmap --in bv.csv --format svg --overlay --out bv.svg
//! ```
//!
//! Outputs without an explicit `--out` land in `$QVF_OUT_DIR` (default: the
//! working directory).

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::circuits::{emit_qasm, parse_qasm, BenchmarkSpec, DjOracle};
use crate::injector::{Campaign, CampaignConfig, GridPoint, SimMode, SiteSelection, DEFAULT_GRID_STEP_DEG};
use crate::metrics::{
    aggregate_heatmap, delta_qvf, histogram_stats, timeline, CorrectStates, GroupKey, Grouping, HeatmapGrid,
    DEFAULT_HISTOGRAM_BINS,
};
use crate::noise::{load_noise_file, NoiseModel};
use crate::report::{self, ColorScale, HeatmapOptions, RecordWriter};
use crate::sim::Circuit;
use crate::{Error, ErrorClass, Result};

/// Environment variable naming the default output directory.
pub const OUT_DIR_ENV: &str = "QVF_OUT_DIR";

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 64;
pub const EXIT_PARSE: i32 = 65;
pub const EXIT_SIMULATION: i32 = 70;
pub const EXIT_IO: i32 = 74;

pub fn exit_code(err: &Error) -> i32 {
    match err.class() {
        ErrorClass::Parse => EXIT_PARSE,
        ErrorClass::Simulation => EXIT_SIMULATION,
        ErrorClass::Io => EXIT_IO,
    }
}

#[derive(Debug, Parser)]
#[command(name = "qvf", version, about = "Fault injection and QVF analysis for small quantum circuits")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// List or build benchmark circuits.
    #[command(subcommand)]
    Bench(BenchCommand),
    /// Run fault-injection campaigns.
    #[command(subcommand)]
    Campaign(CampaignCommand),
    /// Render reports from a record file.
    #[command(subcommand)]
    Report(ReportCommand),
}

#[derive(Debug, Subcommand)]
enum BenchCommand {
    List,
    /// Write a benchmark circuit as OpenQASM 2.0.
    Build(BuildArgs),
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum BenchKind {
    Bv,
    Dj,
    Grover,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum OracleKind {
    Balanced,
    Constant0,
    Constant1,
}

#[derive(Debug, Args)]
struct BuildArgs {
    kind: BenchKind,
    /// Bernstein-Vazirani secret, character k for qubit k.
    #[arg(long, default_value = crate::circuits::DEFAULT_BV_SECRET)]
    secret: String,
    #[arg(long, value_enum, default_value = "balanced")]
    oracle: OracleKind,
    /// Balanced-oracle CX mask.
    #[arg(long, default_value = crate::circuits::DEFAULT_DJ_MASK)]
    mask: String,
    /// Balanced-oracle X-conjugated qubits.
    #[arg(long, default_value = crate::circuits::DEFAULT_DJ_WRAP)]
    wrap: String,
    /// Grover marked state.
    #[arg(long, default_value = crate::circuits::DEFAULT_GROVER_MARKED)]
    marked: String,
    #[arg(long, default_value_t = 1)]
    iterations: usize,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
enum CampaignCommand {
    /// Sweep the fault grid over every site of a circuit.
    Run(RunArgs),
}

#[derive(Debug, Args)]
struct RunArgs {
    /// A QASM file, or bench:bv, bench:dj, bench:grover.
    circuit: String,
    #[arg(long, default_value_t = DEFAULT_GRID_STEP_DEG)]
    grid_step: u32,
    #[arg(long, default_value_t = 1024)]
    shots: u64,
    #[arg(long, default_value = "exact")]
    mode: SimMode,
    /// Noise config path, `representative`, or `none`.
    #[arg(long)]
    noise: Option<String>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Worker threads (default: available parallelism).
    #[arg(long)]
    jobs: Option<usize>,
    /// Comma-separated site indices to restrict the sweep to.
    #[arg(long, value_delimiter = ',')]
    sites: Option<Vec<usize>>,
    /// Comma-separated correct output states.
    #[arg(long, value_delimiter = ',')]
    correct: Option<Vec<String>>,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Svg,
    Ppm,
    Csv,
}

impl Format {
    fn ext(self) -> &'static str {
        match self {
            Format::Svg => "svg",
            Format::Ppm => "ppm",
            Format::Csv => "csv",
        }
    }
}

#[derive(Debug, Args)]
struct CommonReport {
    /// Record file written by `campaign run`.
    #[arg(long = "in")]
    input: PathBuf,
    #[arg(long, value_enum, default_value = "svg")]
    format: Format,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct HeatmapArgs {
    #[command(flatten)]
    common: CommonReport,
    /// Mark the reference-gate shifts.
    #[arg(long)]
    overlay: bool,
    #[arg(long, default_value_t = 0.45)]
    green_below: f64,
    #[arg(long, default_value_t = 0.55)]
    red_above: f64,
    #[arg(long, default_value_t = 16)]
    cell_px: u32,
}

impl HeatmapArgs {
    fn options(&self) -> Result<HeatmapOptions> {
        Ok(HeatmapOptions {
            scale: ColorScale::new(self.green_below, self.red_above)?,
            overlay: self.overlay,
            cell_px: self.cell_px,
        })
    }
}

#[derive(Debug, Args)]
struct DeltaArgs {
    #[command(flatten)]
    heatmap: HeatmapArgs,
    /// Second record file (default: the --in file).
    #[arg(long)]
    against: Option<PathBuf>,
    /// Restrict the first grid to one qubit.
    #[arg(long)]
    qubit_a: Option<usize>,
    /// Restrict the second grid to one qubit.
    #[arg(long)]
    qubit_b: Option<usize>,
}

#[derive(Debug, Args)]
struct TimelineArgs {
    #[command(flatten)]
    common: CommonReport,
    #[arg(long)]
    theta: u32,
    #[arg(long)]
    phi: u32,
}

#[derive(Debug, Args)]
struct HistArgs {
    #[command(flatten)]
    common: CommonReport,
    #[arg(long, default_value_t = DEFAULT_HISTOGRAM_BINS)]
    bins: usize,
}

#[derive(Debug, Subcommand)]
enum ReportCommand {
    /// Whole-circuit mean QVF per (theta, phi).
    Heatmap(HeatmapArgs),
    /// One heatmap per qubit.
    Perqubit(HeatmapArgs),
    /// Cellwise difference of two heatmaps.
    Delta(DeltaArgs),
    /// QVF against gate index for a fixed fault.
    Timeline(TimelineArgs),
    /// QVF histogram with mean and standard deviation.
    Hist(HistArgs),
}

fn default_path(explicit: &Option<PathBuf>, file_name: &str) -> PathBuf {
    match explicit {
        Some(p) => p.clone(),
        None => std::env::var_os(OUT_DIR_ENV)
            .map(PathBuf::from)
            .unwrap_or_default()
            .join(file_name),
    }
}

fn write_file(path: &Path, bytes: &[u8]) -> Result<()> {
    if let Some(dir) = path.parent().filter(|d| !d.as_os_str().is_empty()) {
        std::fs::create_dir_all(dir)?;
    }
    std::fs::write(path, bytes)?;
    Ok(())
}

fn stem(path: &Path) -> String {
    path.file_stem().map(|s| s.to_string_lossy().into_owned()).unwrap_or_else(|| "report".into())
}

fn bench_spec(args: &BuildArgs) -> BenchmarkSpec {
    match args.kind {
        BenchKind::Bv => BenchmarkSpec::BernsteinVazirani { secret: args.secret.clone() },
        BenchKind::Dj => BenchmarkSpec::DeutschJozsa {
            oracle: match args.oracle {
                OracleKind::Balanced => DjOracle::Balanced { mask: args.mask.clone(), wrap: args.wrap.clone() },
                OracleKind::Constant0 => DjOracle::Constant(false),
                OracleKind::Constant1 => DjOracle::Constant(true),
            },
        },
        BenchKind::Grover => BenchmarkSpec::Grover { marked: args.marked.clone(), iterations: args.iterations },
    }
}

fn run_bench(cmd: BenchCommand, out: &mut dyn Write) -> Result<()> {
    match cmd {
        BenchCommand::List => {
            for spec in BenchmarkSpec::defaults() {
                let c = spec.build()?;
                writeln!(
                    out,
                    "{:<7} {} qubits, {} fault sites, correct {}",
                    spec.id(),
                    c.n_qubits(),
                    crate::injector::enumerate_sites(&c).len(),
                    c.correct_state_strings().unwrap_or_default().join(",")
                )?;
            }
        }
        BenchCommand::Build(args) => {
            let spec = bench_spec(&args);
            let circuit = spec.build()?;
            let path = default_path(&args.out, &format!("{}.qasm", spec.id()));
            write_file(&path, emit_qasm(&circuit).as_bytes())?;
            writeln!(out, "wrote {}", path.display())?;
        }
    }
    Ok(())
}

fn load_circuit(arg: &str) -> Result<Circuit> {
    match arg.strip_prefix("bench:") {
        Some("bv") => BenchmarkSpec::default_bv().build(),
        Some("dj") => BenchmarkSpec::default_dj().build(),
        Some("grover") => BenchmarkSpec::default_grover().build(),
        Some(other) => Err(Error::InvalidBenchmark(format!("unknown benchmark {other:?}"))),
        None => {
            let text = std::fs::read_to_string(arg)?;
            let c = parse_qasm(&text)?;
            Ok(match c.name() {
                Some(_) => c,
                None => {
                    let name = stem(Path::new(arg));
                    c.with_name(name)
                }
            })
        }
    }
}

fn load_noise(arg: Option<&str>) -> Result<Option<NoiseModel>> {
    match arg {
        None | Some("none") => Ok(None),
        Some("representative") => Ok(Some(NoiseModel::representative())),
        Some(path) => load_noise_file(path).map(Some),
    }
}

fn run_campaign_cmd(cmd: CampaignCommand, out: &mut dyn Write) -> Result<()> {
    let CampaignCommand::Run(args) = cmd;
    let circuit = load_circuit(&args.circuit)?;
    let config = CampaignConfig {
        grid_step_deg: args.grid_step,
        shots: args.shots,
        mode: args.mode,
        noise: load_noise(args.noise.as_deref())?,
        seed: args.seed,
        sites: args.sites.clone().map_or(SiteSelection::All, SiteSelection::Subset),
        jobs: args.jobs,
    };
    let mut campaign = Campaign::new(&circuit, &config)?;
    if let Some(states) = &args.correct {
        campaign = campaign.with_correct_states(CorrectStates::new(circuit.measured().len(), states)?);
    }
    let id = circuit.name().unwrap_or("circuit").to_string();
    let path = default_path(&args.out, &format!("{id}_campaign.csv"));
    if let Some(dir) = path.parent().filter(|d| !d.as_os_str().is_empty()) {
        std::fs::create_dir_all(dir)?;
    }
    let mut writer = RecordWriter::create(&path)?;
    let summary = campaign.run(|r| writer.write(&r))?;
    let rows = writer.rows();
    writer.finish()?;

    writeln!(
        out,
        "circuit {id}: {} sites x {} grid points, {} mode",
        campaign.sites().len(),
        campaign.grid().len(),
        config.mode
    )?;
    writeln!(out, "records: {rows} ({} faults + 1 baseline)", summary.fault_records)?;
    writeln!(out, "executions: {} ({} shots per fault)", summary.executions, config.shots)?;
    writeln!(out, "baseline qvf: {:.6}", summary.baseline.qvf)?;
    writeln!(out, "mean qvf: {:.4}  stddev: {:.4}", summary.mean_qvf, summary.stddev_qvf)?;
    writeln!(out, "improved faults: {:.2}%", 100.0 * summary.improved_fraction)?;
    writeln!(out, "wrote {}", path.display())?;
    Ok(())
}

fn pick_grid(grids: Vec<HeatmapGrid>, qubit: Option<usize>) -> Result<HeatmapGrid> {
    let key = qubit.map_or(GroupKey::All, GroupKey::Qubit);
    grids
        .into_iter()
        .find(|g| g.key == key)
        .ok_or_else(|| Error::Report(format!("no records for {key}")))
}

fn heatmap_bytes(grids: &[HeatmapGrid], format: Format, opts: &HeatmapOptions) -> Result<Vec<u8>> {
    Ok(match format {
        Format::Svg => report::heatmap_svg(grids, opts)?.into_bytes(),
        Format::Ppm => report::heatmap_ppm(grids, opts)?,
        Format::Csv => report::heatmap_csv(grids).into_bytes(),
    })
}

fn run_report(cmd: ReportCommand, out: &mut dyn Write) -> Result<()> {
    let (path, bytes) = match cmd {
        ReportCommand::Heatmap(a) => {
            let records = report::read_records_file(&a.common.input)?;
            let grids = aggregate_heatmap(&records, Grouping::All)?;
            let name = format!("{}_heatmap.{}", stem(&a.common.input), a.common.format.ext());
            (default_path(&a.common.out, &name), heatmap_bytes(&grids, a.common.format, &a.options()?)?)
        }
        ReportCommand::Perqubit(a) => {
            let records = report::read_records_file(&a.common.input)?;
            let grids = aggregate_heatmap(&records, Grouping::PerQubit)?;
            let name = format!("{}_perqubit.{}", stem(&a.common.input), a.common.format.ext());
            (default_path(&a.common.out, &name), heatmap_bytes(&grids, a.common.format, &a.options()?)?)
        }
        ReportCommand::Delta(a) => {
            let h = &a.heatmap;
            let grouping = |q: Option<usize>| if q.is_some() { Grouping::PerQubit } else { Grouping::All };
            let first = report::read_records_file(&h.common.input)?;
            let second = match &a.against {
                Some(p) => report::read_records_file(p)?,
                None => first.clone(),
            };
            let ga = pick_grid(aggregate_heatmap(&first, grouping(a.qubit_a))?, a.qubit_a)?;
            let gb = pick_grid(aggregate_heatmap(&second, grouping(a.qubit_b))?, a.qubit_b)?;
            let delta = delta_qvf(&ga, &gb)?;
            let opts = h.options()?;
            let bytes = match h.common.format {
                Format::Svg => report::delta_svg(&delta, &opts).into_bytes(),
                Format::Ppm => report::delta_ppm(&delta, &opts),
                Format::Csv => report::delta_csv(&delta).into_bytes(),
            };
            writeln!(out, "max |delta qvf|: {:.4}", delta.max_abs())?;
            let name = format!("{}_delta.{}", stem(&h.common.input), h.common.format.ext());
            (default_path(&h.common.out, &name), bytes)
        }
        ReportCommand::Timeline(a) => {
            let records = report::read_records_file(&a.common.input)?;
            let point = GridPoint::new(a.theta, a.phi);
            let series = timeline(&records, point)?;
            let bytes = match a.common.format {
                Format::Svg => report::timeline_svg(&series, point).into_bytes(),
                Format::Csv => report::timeline_csv(&series).into_bytes(),
                Format::Ppm => return Err(Error::Report("timeline supports svg and csv only".into())),
            };
            let name = format!("{}_timeline.{}", stem(&a.common.input), a.common.format.ext());
            (default_path(&a.common.out, &name), bytes)
        }
        ReportCommand::Hist(a) => {
            let records = report::read_records_file(&a.common.input)?;
            let stats = histogram_stats(&records, a.bins)?;
            writeln!(out, "mean qvf: {:.4}  stddev: {:.4}", stats.mean, stats.stddev)?;
            let bytes = match a.common.format {
                Format::Svg => report::histogram_svg(&stats).into_bytes(),
                Format::Csv => report::histogram_csv(&stats).into_bytes(),
                Format::Ppm => return Err(Error::Report("hist supports svg and csv only".into())),
            };
            let name = format!("{}_hist.{}", stem(&a.common.input), a.common.format.ext());
            (default_path(&a.common.out, &name), bytes)
        }
    };
    write_file(&path, &bytes)?;
    writeln!(out, "wrote {}", path.display())?;
    Ok(())
}

/// Parse `args` (including the program name) and run, returning the exit code.
pub fn run_with<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{text}");
                    EXIT_OK
                }
                _ => {
                    let _ = write!(err, "{text}");
                    EXIT_USAGE
                }
            };
        }
    };
    let result = match cli.command {
        Command::Bench(c) => run_bench(c, out),
        Command::Campaign(c) => run_campaign_cmd(c, out),
        Command::Report(c) => run_report(c, out),
    };
    match result {
        Ok(()) => EXIT_OK,
        Err(e) => {
            let _ = writeln!(err, "qvf: error: {e}");
            exit_code(&e)
        }
    }
}
