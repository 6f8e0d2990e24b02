//! Command dispatch for the `alpha-polytope` tool.
//!
//! Exit codes: 0 success, 1 usage error, 2 malformed input, 3 W-invariance
//! or Fano mismatch, 4 domain error during computation.

mod document;
mod report;

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Map, Value};

use crate::error::{Error, Result};
use crate::invariants::{
    alpha_group, alpha_group_delcroix, alpha_mk, alpha_pi, alpha_toric, conjecture_check, min_face_set,
    quantization_m0, t_function, DimensionMode, FailReason, SweepOptions, Verdict,
};
use crate::kernel::{parse_point, Point};

pub use document::{
    bundled, bundled_document, bundled_names, cpn_document, parse_document, parse_input, InequalityDoc, InputDocument,
    Loaded, Num, PolytopeDoc, RootSystemDoc, SCHEMA_VERSION,
};
pub use report::Report;

/// A computation to run against one loaded document.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Command {
    Alpha,
    AlphaDelcroix,
    AlphaMk { m: u32, k: u64, mode: DimensionMode },
    AlphaPi { m: u32, weights: Vec<Point> },
    ToricAlpha,
    T { point: Point },
    MinFaces,
    Conjecture { k: usize, max_m: u32 },
    QuantizeM0,
    ReportAll,
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::Alpha => "alpha",
            Command::AlphaDelcroix => "alpha-delcroix",
            Command::AlphaMk { .. } => "alpha-mk",
            Command::AlphaPi { .. } => "alpha-pi",
            Command::ToricAlpha => "toric-alpha",
            Command::T { .. } => "t",
            Command::MinFaces => "min-faces",
            Command::Conjecture { .. } => "conjecture",
            Command::QuantizeM0 => "quantize-m0",
            Command::ReportAll => "report-all",
        }
    }
}

fn require_toric(loaded: &Loaded) -> Result<()> {
    if loaded.data.is_toric() {
        Ok(())
    } else {
        Err(Error::Precondition("this command needs toric data (empty root system)".into()))
    }
}

fn mode_name(mode: DimensionMode) -> &'static str {
    match mode {
        DimensionMode::BlockCount => "block",
        DimensionMode::TrueDimension => "dim",
    }
}

/// Runs `cmd`, returning `(summary, results)`.
fn compute(cmd: &Command, loaded: &Loaded, threads: usize) -> Result<(String, Map<String, Value>)> {
    let data = &loaded.data;
    Ok(match cmd {
        Command::Alpha => {
            let a = alpha_group(data)?;
            (a.to_string(), report::alpha(&a, loaded))
        }
        Command::AlphaDelcroix => {
            let a = alpha_group_delcroix(data)?;
            (a.to_string(), report::alpha(&a, loaded))
        }
        Command::AlphaMk { m, k, mode } => {
            let r = alpha_mk(data, *m, *k, SweepOptions { mode: *mode, threads })?;
            let mut res = report::alpha(&r.alpha, loaded);
            res.insert("m".into(), json!(m));
            res.insert("k".into(), json!(k));
            res.insert("mode".into(), json!(mode_name(*mode)));
            res.insert("weights".into(), Value::Array(r.weights.weights().iter().map(report::pt).collect()));
            res.insert("candidates".into(), json!(r.candidates));
            (r.alpha.to_string(), res)
        }
        Command::AlphaPi { m, weights } => {
            let ws = data.weight_set(*m, weights.clone())?;
            let a = alpha_pi(data, &ws)?;
            let mut res = report::alpha(&a, loaded);
            res.insert("m".into(), json!(m));
            res.insert("weights".into(), Value::Array(ws.weights().iter().map(report::pt).collect()));
            res.insert("method".into(), json!(if data.is_fano() { "fano_lp" } else { "chamber_rays" }));
            (a.to_string(), res)
        }
        Command::ToricAlpha => {
            require_toric(loaded)?;
            let a = alpha_toric(data.polytope())?;
            (a.to_string(), report::alpha(&a, loaded))
        }
        Command::T { point } => {
            let t = t_function(data.polytope(), point)?;
            let mut res = Map::new();
            res.insert("point".into(), report::pt(point));
            res.insert("value".into(), report::q(&t));
            (crate::kernel::format_rational(&t), res)
        }
        Command::MinFaces => {
            require_toric(loaded)?;
            let faces = min_face_set(data.polytope())?;
            let r = data.polytope().rank();
            let kind = if faces.iter().all(|f| f.dimension + 1 == r) {
                "facet"
            } else if faces.iter().all(|f| f.dimension == 0) {
                "vertex"
            } else {
                "face"
            };
            let plural = match (kind, faces.len()) {
                (k, 1) => k.to_string(),
                ("vertex", _) => "vertices".to_string(),
                (k, _) => format!("{k}s"),
            };
            let mut res = Map::new();
            res.insert("faces".into(), Value::Array(faces.iter().map(|f| report::face(f, loaded)).collect()));
            (format!("{} {}", faces.len(), plural), res)
        }
        Command::Conjecture { k, max_m } => {
            require_toric(loaded)?;
            let c = conjecture_check(data.polytope(), *k, *max_m)?;
            let mut res = Map::new();
            res.insert("k".into(), json!(k));
            res.insert("max_m".into(), json!(max_m));
            res.insert("alpha".into(), report::q(&c.alpha));
            res.insert(
                "minimizing_faces".into(),
                Value::Array(c.minimizing_faces.iter().map(|f| report::face(f, loaded)).collect()),
            );
            let summary = match &c.verdict {
                Verdict::Holds { m_k, facet, count } => {
                    res.insert("verdict".into(), json!("holds"));
                    res.insert("m_k".into(), json!(m_k));
                    res.insert("facet".into(), json!(loaded.label(*facet)));
                    res.insert("count".into(), json!(count));
                    format!("holds with m_k = {m_k} (facet {}, {count} lattice points)", loaded.label(*facet))
                }
                Verdict::Fails(reason) => {
                    let why = match reason {
                        FailReason::NoFacetInMinimizingSet => "no facet in minimizing set",
                        FailReason::FacetTooSmall => "minimizing facets are single points",
                    };
                    res.insert("verdict".into(), json!("fails"));
                    res.insert("reason".into(), json!(why));
                    format!("fails ({why})")
                }
            };
            (summary, res)
        }
        Command::QuantizeM0 => {
            let qz = quantization_m0(data)?;
            let mut res = Map::new();
            res.insert("m0".into(), json!(qz.m0));
            res.insert("vertex".into(), report::pt(&qz.vertex));
            res.insert("alpha".into(), Value::Object(report::alpha(&qz.alpha, loaded)));
            (format!("m0 = {}", qz.m0), res)
        }
        Command::ReportAll => {
            let mut res = Map::new();
            let mut sub = |key: &str, cmd: Command| -> Result<String> {
                let (s, r) = compute(&cmd, loaded, threads)?;
                res.insert(key.into(), Value::Object(r));
                Ok(s)
            };
            let headline = sub("alpha", Command::Alpha)?;
            if data.is_fano() {
                sub("alpha_delcroix", Command::AlphaDelcroix)?;
            }
            let m0 = quantization_m0(data)?.m0;
            sub("quantize_m0", Command::QuantizeM0)?;
            sub("alpha_mk_m0_k1", Command::AlphaMk { m: m0, k: 1, mode: DimensionMode::TrueDimension })?;
            if data.is_toric() && data.polytope().is_reflexive() {
                sub("toric_alpha", Command::ToricAlpha)?;
                sub("min_faces", Command::MinFaces)?;
                sub("conjecture_k2", Command::Conjecture { k: 2, max_m: 10 })?;
            }
            (format!("alpha = {headline}"), res)
        }
    })
}

/// Runs one command and wraps the result in a [`Report`].
pub fn run(cmd: &Command, loaded: &Loaded, threads: usize, timing: bool) -> Result<Report> {
    let start = Instant::now();
    let (summary, results) = compute(cmd, loaded, threads)?;
    Ok(Report {
        command: cmd.name().into(),
        input: loaded.name.clone(),
        summary,
        results,
        warnings: loaded.data.warnings(),
        timing_ms: timing.then(|| start.elapsed().as_millis()),
    })
}

/// Writes `<name>.input.json` and `<name>.report.json` for every bundled
/// example (and `CPⁿ` when `cpn` is given). Returns the written paths.
pub fn emit_goldens(dir: &Path, cpn: Option<usize>) -> Result<Vec<PathBuf>> {
    std::fs::create_dir_all(dir)?;
    let mut docs: Vec<InputDocument> = bundled_names().into_iter().map(bundled_document).collect::<Result<_>>()?;
    if let Some(n) = cpn {
        if n == 0 {
            return Err(Error::Precondition("--cpn needs n >= 1".into()));
        }
        let d = cpn_document(n);
        docs.retain(|x| x.name != d.name);
        docs.push(d);
    }
    let mut written = Vec::new();
    for doc in docs {
        let name = doc.name.clone().unwrap_or_else(|| "input".into());
        let input_path = dir.join(format!("{name}.input.json"));
        std::fs::write(&input_path, doc.to_json())?;
        let report = run(&Command::ReportAll, &doc.into_loaded()?, 1, false)?;
        let report_path = dir.join(format!("{name}.report.json"));
        std::fs::write(&report_path, report.to_json())?;
        written.push(input_path);
        written.push(report_path);
    }
    Ok(written)
}

#[derive(Parser, Debug)]
#[command(name = "alpha-polytope", version, about = "Exact alpha-invariants of group compactifications")]
struct Cli {
    #[command(subcommand)]
    command: CliCommand,
    /// Machine-readable JSON output.
    #[arg(long, global = true)]
    json: bool,
    /// Write output to FILE instead of stdout.
    #[arg(long, global = true, value_name = "FILE")]
    out: Option<PathBuf>,
    /// Worker threads for the weight-set sweep (0 = all cores).
    #[arg(long, global = true, env = "ALPHA_POLYTOPE_THREADS")]
    threads: Option<usize>,
    /// Include wall-clock timing in the report.
    #[arg(long, global = true)]
    timing: bool,
}

#[derive(Args, Debug, Clone)]
struct InputArgs {
    /// Input document (JSON).
    input: Option<PathBuf>,
    /// Use a bundled example instead of a file.
    #[arg(long, conflicts_with = "input")]
    example: Option<String>,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum ModeArg {
    Block,
    Dim,
}

#[derive(Subcommand, Debug)]
enum CliCommand {
    /// α^{K×K} from the center slice of P.
    Alpha(InputArgs),
    /// α^{K×K} from the erosion formula (Fano data).
    AlphaDelcroix(InputArgs),
    /// α_{m,k}: minimum over weight sets of size k at level m.
    AlphaMk {
        #[arg(long)]
        m: u32,
        #[arg(long)]
        k: u64,
        #[arg(long, value_enum, default_value = "dim")]
        mode: ModeArg,
        #[command(flatten)]
        input: InputArgs,
    },
    /// α^Π for one weight set read from FILE.
    AlphaPi {
        #[arg(long)]
        m: u32,
        #[arg(long, value_name = "FILE")]
        weights: PathBuf,
        #[command(flatten)]
        input: InputArgs,
    },
    /// Toric α as the minimum of t over P.
    ToricAlpha(InputArgs),
    /// The t-function at a point, e.g. --point "-1/2,1".
    T {
        #[arg(long, allow_hyphen_values = true)]
        point: String,
        #[command(flatten)]
        input: InputArgs,
    },
    /// Maximal faces on which t attains its minimum.
    MinFaces(InputArgs),
    /// Facet lattice-point criterion for α_{m,k} = α.
    Conjecture {
        #[arg(long)]
        k: usize,
        #[arg(long, default_value_t = 10)]
        max_m: u32,
        #[command(flatten)]
        input: InputArgs,
    },
    /// Least m with m·v_z0 integral.
    QuantizeM0(InputArgs),
    /// Every applicable invariant in one report.
    ReportAll(InputArgs),
    /// Write input documents and reports for the bundled examples to DIR.
    EmitGoldens {
        dir: PathBuf,
        /// Also emit CPⁿ for this n.
        #[arg(long)]
        cpn: Option<usize>,
    },
}

fn load(args: &InputArgs) -> Result<Loaded> {
    match (&args.input, &args.example) {
        (Some(path), _) => parse_input(path),
        (None, Some(name)) => bundled(name),
        (None, None) => Err(Error::Schema("no input: give a document path or --example NAME".into())),
    }
}

fn read_weights(path: &Path) -> Result<Vec<Point>> {
    let v: Value = serde_json::from_str(&std::fs::read_to_string(path)?)
        .map_err(|e| Error::Schema(format!("weights file: {e}")))?;
    let list = match &v {
        Value::Object(o) => o.get("weights").cloned().unwrap_or(Value::Null),
        other => other.clone(),
    };
    let rows: Vec<Vec<Num>> = serde_json::from_value(list).map_err(|e| Error::Schema(format!("weights file: {e}")))?;
    rows.iter().map(|r| r.iter().map(Num::to_rational).collect::<Result<Vec<_>>>().map(Point)).collect()
}

fn dispatch(cli: &Cli) -> Result<String> {
    let threads = match cli.threads {
        Some(0) => std::thread::available_parallelism().map_or(1, |n| n.get()),
        Some(n) => n,
        None => 1,
    };
    let (cmd, input) = match &cli.command {
        CliCommand::EmitGoldens { dir, cpn } => {
            let written = emit_goldens(dir, *cpn)?;
            let mut out = String::new();
            for p in written {
                out.push_str(&format!("{}\n", p.display()));
            }
            return Ok(out);
        }
        CliCommand::Alpha(i) => (Command::Alpha, i),
        CliCommand::AlphaDelcroix(i) => (Command::AlphaDelcroix, i),
        CliCommand::AlphaMk { m, k, mode, input } => {
            let mode = match mode {
                ModeArg::Block => DimensionMode::BlockCount,
                ModeArg::Dim => DimensionMode::TrueDimension,
            };
            (Command::AlphaMk { m: *m, k: *k, mode }, input)
        }
        CliCommand::AlphaPi { m, weights, input } => {
            (Command::AlphaPi { m: *m, weights: read_weights(weights)? }, input)
        }
        CliCommand::ToricAlpha(i) => (Command::ToricAlpha, i),
        CliCommand::T { point, input } => (Command::T { point: parse_point(point)? }, input),
        CliCommand::MinFaces(i) => (Command::MinFaces, i),
        CliCommand::Conjecture { k, max_m, input } => (Command::Conjecture { k: *k, max_m: *max_m }, input),
        CliCommand::QuantizeM0(i) => (Command::QuantizeM0, i),
        CliCommand::ReportAll(i) => (Command::ReportAll, i),
    };
    let loaded = load(input)?;
    let report = run(&cmd, &loaded, threads, cli.timing)?;
    Ok(if cli.json { report.to_json() } else { report.to_text() })
}

/// Entry point shared by the binary and the tests; returns the exit code.
pub fn run_cli<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(stdout, "{text}");
                    0
                }
                _ => {
                    let _ = write!(stderr, "{text}");
                    1
                }
            };
        }
    };
    match dispatch(&cli) {
        Ok(text) => {
            let written = match &cli.out {
                Some(path) => std::fs::write(path, &text).map_err(Error::from),
                None => stdout.write_all(text.as_bytes()).map_err(Error::from),
            };
            match written {
                Ok(()) => 0,
                Err(e) => {
                    let _ = writeln!(stderr, "error: {e}");
                    e.exit_code()
                }
            }
        }
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            e.exit_code()
        }
    }
}
