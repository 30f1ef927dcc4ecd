//! Command-line front end. `run` returns the process exit code:
//! 0 success, 1 axiom or invariant failure, 2 input error, 3 search budget
//! exhausted.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use serde_json::json;

use crate::biquandle::{AxiomReport, FiniteBiquandle};
use crate::bracket::{bracket_matrix, fundamental_bracket, BracketEquation, VirtualBracket};
use crate::coloring::counting_matrix;
use crate::corpus::Corpus;
use crate::diagram::{random_move, KnotoidDiagram, MoveKind, R1Order, R2Variant, Sign};
use crate::report::{compute_row, error_row, to_csv, to_json, to_text, Order, Report, RunManifest};
use crate::ring::Modulus;
use crate::search::{search_brackets, Ansatz, SearchConfig};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "vknotoid", version, about = "Biquandle invariants of virtual knotoids")]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Debug, Args)]
struct Output {
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Write to this file instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Biquandle tables.
    Biquandle {
        #[command(subcommand)]
        command: BiquandleCommand,
    },
    /// Counting and bracket invariants of one diagram.
    Invariants(InvariantsArgs),
    /// Invariants for every diagram in a corpus directory.
    Corpus(CorpusArgs),
    /// Random move insertions; checks that invariants are unchanged.
    Selftest(SelftestArgs),
    /// Search for virtual brackets over Z_p.
    Search(SearchArgs),
    /// Move rewrites on diagram files.
    Moves {
        #[command(subcommand)]
        command: MovesCommand,
    },
    /// Virtual bracket files.
    Bracket {
        #[command(subcommand)]
        command: BracketCommand,
    },
}

#[derive(Debug, Subcommand)]
enum BiquandleCommand {
    /// Verify the biquandle axioms.
    Check {
        file: PathBuf,
        #[command(flatten)]
        output: Output,
    },
    /// Emit the affine table x▷̲y = t x + (r−t) y + c, x▷̄y = r x + c on Z_m.
    Alexander {
        #[arg(long)]
        modulus: u32,
        #[arg(long)]
        t: i64,
        #[arg(long)]
        r: i64,
        #[arg(long, default_value_t = 0)]
        offset: i64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Debug, Args)]
struct DataArgs {
    #[arg(long)]
    biquandle: PathBuf,
    #[arg(long)]
    bracket: Option<PathBuf>,
    /// Skip axiom checks of the biquandle and bracket.
    #[arg(long)]
    no_verify: bool,
    #[arg(long, value_enum, default_value_t = Order::Element)]
    order: Order,
}

#[derive(Debug, Args)]
struct InvariantsArgs {
    diagram: PathBuf,
    #[command(flatten)]
    data: DataArgs,
    #[command(flatten)]
    output: Output,
}

#[derive(Debug, Args)]
struct CorpusArgs {
    #[arg(long)]
    dir: PathBuf,
    #[command(flatten)]
    data: DataArgs,
    #[command(flatten)]
    output: Output,
}

#[derive(Debug, Args)]
struct SelftestArgs {
    diagram: PathBuf,
    #[command(flatten)]
    data: DataArgs,
    #[arg(long, default_value_t = 100)]
    trials: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Insert same-sign crossing pairs instead of genuine moves. The
    /// harness is expected to report failures.
    #[arg(long, hide = true)]
    mis_signed_r2: bool,
    #[command(flatten)]
    output: Output,
}

#[derive(Debug, Args)]
struct SearchArgs {
    #[arg(long)]
    biquandle: PathBuf,
    #[arg(long)]
    modulus: u32,
    #[arg(long, value_enum, default_value_t = Ansatz::Diagonal)]
    ansatz: Ansatz,
    #[arg(long, default_value_t = 10_000_000)]
    budget: u64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long)]
    require_delta_unit: bool,
    /// Write each solution as a bracket file in this directory.
    #[arg(long)]
    out_dir: Option<PathBuf>,
    #[command(flatten)]
    output: Output,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum MoveArg {
    R1,
    Vr1,
    R2,
    Vr2,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum SignArg {
    #[value(alias = "pos")]
    Positive,
    #[value(alias = "neg")]
    Negative,
}

#[derive(Debug, Subcommand)]
enum MovesCommand {
    /// Insert a move and print the resulting diagram file.
    Insert {
        diagram: PathBuf,
        #[arg(long, value_enum)]
        kind: MoveArg,
        #[arg(long, value_enum, default_value_t = SignArg::Positive)]
        sign: SignArg,
        #[arg(long = "r1-order", value_enum, default_value_t = R1Order::OverFirst)]
        r1_order: R1Order,
        #[arg(long, value_enum, default_value_t = R2Variant::Parallel)]
        variant: R2Variant,
        /// Token gap; give twice for two-gap moves.
        #[arg(long = "gap", required = true)]
        gaps: Vec<usize>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Debug, Subcommand)]
enum BracketCommand {
    /// Verify the 23 equation families against a biquandle.
    Check {
        file: PathBuf,
        #[arg(long)]
        biquandle: PathBuf,
        #[command(flatten)]
        output: Output,
    },
    /// Print the fundamental bracket of a diagram.
    Fundamental {
        diagram: PathBuf,
        #[command(flatten)]
        output: Output,
    },
}

impl clap::ValueEnum for R1Order {
    fn value_variants<'a>() -> &'a [Self] {
        &[R1Order::OverFirst, R1Order::UnderFirst]
    }
    fn to_possible_value(&self) -> Option<clap::builder::PossibleValue> {
        Some(clap::builder::PossibleValue::new(match self {
            R1Order::OverFirst => "over-first",
            R1Order::UnderFirst => "under-first",
        }))
    }
}

impl clap::ValueEnum for R2Variant {
    fn value_variants<'a>() -> &'a [Self] {
        &[R2Variant::Parallel, R2Variant::Antiparallel]
    }
    fn to_possible_value(&self) -> Option<clap::builder::PossibleValue> {
        Some(clap::builder::PossibleValue::new(match self {
            R2Variant::Parallel => "parallel",
            R2Variant::Antiparallel => "antiparallel",
        }))
    }
}

#[derive(Debug)]
enum Fail {
    Input(String),
    Check(String),
}

type Res<T> = Result<T, Fail>;

fn read(path: &Path) -> Res<String> {
    std::fs::read_to_string(path).map_err(|e| Fail::Input(format!("cannot read {}: {e}", path.display())))
}

fn load_diagram(path: &Path) -> Res<KnotoidDiagram> {
    KnotoidDiagram::parse(&read(path)?).map_err(|e| Fail::Input(format!("{}: {e}", path.display())))
}

fn load_biquandle(path: &Path) -> Res<FiniteBiquandle> {
    FiniteBiquandle::parse_operation_matrix(&read(path)?).map_err(|e| Fail::Input(format!("{}: {e}", path.display())))
}

fn load_bracket(path: &Path) -> Res<VirtualBracket> {
    VirtualBracket::parse(&read(path)?).map_err(|e| Fail::Input(format!("{}: {e}", path.display())))
}

struct Loaded {
    x: FiniteBiquandle,
    b: Option<VirtualBracket>,
    inputs: Vec<String>,
}

fn load_data(data: &DataArgs) -> Res<Loaded> {
    let x = load_biquandle(&data.biquandle)?;
    let mut inputs = vec![data.biquandle.display().to_string()];
    if !data.no_verify {
        let rep = x.verify_axioms();
        if !rep.passed {
            return Err(Fail::Check(format!("{}: not a biquandle\n{}", data.biquandle.display(), violations_text(&rep, 20))));
        }
    }
    let b = match &data.bracket {
        None => None,
        Some(p) => {
            let b = load_bracket(p)?;
            inputs.push(p.display().to_string());
            let rep = b.verify_axioms(&x).map_err(|e| Fail::Input(format!("{}: {e}", p.display())))?;
            if !data.no_verify && !rep.passed {
                return Err(Fail::Check(format!(
                    "{}: bracket fails its axioms (use --no-verify to evaluate anyway)\n{}",
                    p.display(),
                    violations_text(&rep, 20)
                )));
            }
            Some(b)
        }
    };
    Ok(Loaded { x, b, inputs })
}

fn violations_text<A: std::fmt::Display>(rep: &AxiomReport<A>, limit: usize) -> String {
    let mut s = String::new();
    for v in rep.violations.iter().take(limit) {
        let w: Vec<String> = v.witness.iter().map(|i| format!("x{i}")).collect();
        s.push_str(&format!("  {} at ({})\n", v.axiom, w.join(", ")));
    }
    if rep.violations.len() > limit {
        s.push_str(&format!("  ... {} violations in total\n", rep.violations.len()));
    }
    s
}

fn manifest(command: &str, inputs: Vec<String>, config: serde_json::Value, start: Instant) -> RunManifest {
    RunManifest {
        command: command.to_string(),
        inputs,
        config,
        version: env!("CARGO_PKG_VERSION").to_string(),
        wall_time_us: start.elapsed().as_micros() as u64,
    }
}

fn emit(out: &mut dyn Write, path: Option<&Path>, text: &str) -> Res<()> {
    match path {
        Some(p) => std::fs::write(p, text).map_err(|e| Fail::Input(format!("cannot write {}: {e}", p.display()))),
        None => out.write_all(text.as_bytes()).map_err(|e| Fail::Input(format!("cannot write output: {e}"))),
    }
}

fn json_text<T: Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("output serializes");
    s.push('\n');
    s
}

#[derive(Serialize)]
struct AxiomOutput<'a, A> {
    manifest: RunManifest,
    report: &'a AxiomReport<A>,
}

fn axiom_output<A: Serialize + std::fmt::Display>(
    out: &mut dyn Write,
    output: &Output,
    m: RunManifest,
    rep: &AxiomReport<A>,
    what: &str,
) -> Res<i32> {
    let text = match output.format {
        Format::Json => json_text(&AxiomOutput { manifest: m, report: rep }),
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(["axiom", "witness"]).expect("in-memory csv");
            for v in &rep.violations {
                let wit: Vec<String> = v.witness.iter().map(usize::to_string).collect();
                w.write_record([v.axiom.to_string(), wit.join(" ")]).expect("in-memory csv");
            }
            String::from_utf8(w.into_inner().expect("flush")).expect("utf-8")
        }
        Format::Text if rep.passed => format!("{what}: all axioms hold\n"),
        Format::Text => format!("{what}: {} violation(s)\n{}", rep.violations.len(), violations_text(rep, usize::MAX)),
    };
    emit(out, output.out.as_deref(), &text)?;
    Ok(if rep.passed { EXIT_OK } else { EXIT_FAILURE })
}

fn render_report(report: &Report, format: Format) -> String {
    match format {
        Format::Json => {
            let mut s = to_json(report);
            s.push('\n');
            s
        }
        Format::Csv => to_csv(&report.rows),
        Format::Text => to_text(&report.rows),
    }
}

fn cmd_invariants(a: &InvariantsArgs, out: &mut dyn Write, start: Instant) -> Res<i32> {
    let d = load_diagram(&a.diagram)?;
    let data = load_data(&a.data)?;
    let row = compute_row(&d, &data.x, data.b.as_ref(), a.data.order).map_err(|e| Fail::Input(e.to_string()))?;
    let mut inputs = vec![a.diagram.display().to_string()];
    inputs.extend(data.inputs);
    let m = manifest("invariants", inputs, json!({ "order": a.data.order, "no_verify": a.data.no_verify }), start);
    let report = Report { manifest: m, rows: vec![row] };
    emit(out, a.output.out.as_deref(), &render_report(&report, a.output.format))?;
    Ok(EXIT_OK)
}

fn cmd_corpus(a: &CorpusArgs, out: &mut dyn Write, start: Instant) -> Res<i32> {
    let corpus = Corpus::load(&a.dir).map_err(|e| Fail::Input(e.to_string()))?;
    let data = load_data(&a.data)?;
    let rows = corpus
        .entries
        .par_iter()
        .map(|e| {
            let status = Some(format!("{:?}", e.status).to_lowercase());
            match &e.diagram {
                None => error_row(&e.name, status, "no diagram file".into()),
                Some(Err(msg)) => error_row(&e.name, status, msg.clone()),
                Some(Ok(d)) => match compute_row(d, &data.x, data.b.as_ref(), a.data.order) {
                    Ok(mut r) => {
                        r.name = e.name.clone();
                        r.status = status;
                        r
                    }
                    Err(err) => error_row(&e.name, status, err.to_string()),
                },
            }
        })
        .collect();
    let mut inputs = vec![a.dir.display().to_string()];
    inputs.extend(data.inputs);
    let m = manifest("corpus", inputs, json!({ "order": a.data.order, "no_verify": a.data.no_verify }), start);
    let report = Report { manifest: m, rows };
    emit(out, a.output.out.as_deref(), &render_report(&report, a.output.format))?;
    Ok(EXIT_OK)
}

#[derive(Debug, Clone, Serialize)]
struct TrialFailure {
    trial: usize,
    kind: String,
    gaps: Vec<usize>,
    code: String,
    what: String,
}

fn cmd_selftest(a: &SelftestArgs, out: &mut dyn Write, start: Instant) -> Res<i32> {
    let d = load_diagram(&a.diagram)?;
    let data = load_data(&a.data)?;
    let base_m = counting_matrix(&d, &data.x);
    let base_b = data.b.as_ref().map(|b| bracket_matrix(&d, &data.x, b)).transpose().map_err(|e| Fail::Input(e.to_string()))?;
    let mut rng = ChaCha8Rng::seed_from_u64(a.seed);
    let mut failures = Vec::new();
    for trial in 0..a.trials {
        let (mut kind, gaps) = random_move(&d, &mut rng);
        if a.mis_signed_r2 {
            let variant = if trial % 2 == 0 { R2Variant::Parallel } else { R2Variant::Antiparallel };
            kind = MoveKind::MisSignedR2 { variant, sign: Sign::Positive };
        }
        let gaps = if gaps.len() == kind.gap_count() { gaps } else { vec![gaps[0]; kind.gap_count()] };
        let e = d.insert_move(kind, &gaps).map_err(|err| Fail::Input(err.to_string()))?;
        let mut what = Vec::new();
        if counting_matrix(&e, &data.x) != base_m {
            what.push("counting matrix");
        }
        if let (Some(b), Some(bm)) = (&data.b, &base_b) {
            if bracket_matrix(&e, &data.x, b).map_err(|err| Fail::Input(err.to_string()))? != *bm {
                what.push("bracket matrix");
            }
        }
        if !what.is_empty() {
            failures.push(TrialFailure { trial, kind: format!("{kind:?}"), gaps, code: e.code(), what: what.join(", ") });
        }
    }
    let mut inputs = vec![a.diagram.display().to_string()];
    inputs.extend(data.inputs);
    let m = manifest(
        "selftest",
        inputs,
        json!({ "trials": a.trials, "seed": a.seed, "mis_signed_r2": a.mis_signed_r2 }),
        start,
    );
    let text = match a.output.format {
        Format::Json => json_text(&json!({ "manifest": m, "trials": a.trials, "failures": failures })),
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(["trial", "kind", "gaps", "code", "changed"]).expect("in-memory csv");
            for f in &failures {
                let g: Vec<String> = f.gaps.iter().map(usize::to_string).collect();
                w.write_record([f.trial.to_string(), f.kind.clone(), g.join(" "), f.code.clone(), f.what.clone()]).expect("in-memory csv");
            }
            String::from_utf8(w.into_inner().expect("flush")).expect("utf-8")
        }
        Format::Text => {
            let mut s = format!("{} trials, {} failed\n", a.trials, failures.len());
            for f in &failures {
                s.push_str(&format!("trial {}: {} at {:?} changed the {}\n  code {}\n", f.trial, f.kind, f.gaps, f.what, f.code));
            }
            s
        }
    };
    emit(out, a.output.out.as_deref(), &text)?;
    Ok(if failures.is_empty() { EXIT_OK } else { EXIT_FAILURE })
}

fn cmd_search(a: &SearchArgs, out: &mut dyn Write, start: Instant) -> Res<i32> {
    let x = load_biquandle(&a.biquandle)?;
    let modulus = Modulus::new(a.modulus).map_err(|e| Fail::Input(e.to_string()))?;
    let cfg = SearchConfig { modulus, ansatz: a.ansatz, budget: a.budget, seed: a.seed, require_delta_unit: a.require_delta_unit };
    let outcome = search_brackets(&x, &cfg).map_err(|e| Fail::Input(e.to_string()))?;
    if let Some(dir) = &a.out_dir {
        std::fs::create_dir_all(dir).map_err(|e| Fail::Input(format!("cannot create {}: {e}", dir.display())))?;
        for (k, f) in outcome.found.iter().enumerate() {
            let p = dir.join(format!("bracket_{:04}.br", k + 1));
            std::fs::write(&p, f.bracket.render()).map_err(|e| Fail::Input(format!("cannot write {}: {e}", p.display())))?;
        }
    }
    let ansatz = format!("{:?}", a.ansatz).to_lowercase();
    let m = manifest("search", vec![a.biquandle.display().to_string()], serde_json::to_value(&cfg).expect("config serializes"), start);
    let text = match a.output.format {
        Format::Json => {
            let sols: Vec<_> = outcome
                .found
                .iter()
                .map(|f| json!({ "delta": f.bracket.delta(), "omega": f.bracket.omega(), "node": f.node, "bracket": f.bracket.render() }))
                .collect();
            json_text(&json!({ "manifest": m, "nodes": outcome.nodes, "budget_exhausted": outcome.budget_exhausted, "solutions": sols }))
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(["p", "delta", "omega", "ansatz", "node", "rows"]).expect("in-memory csv");
            for f in &outcome.found {
                let rows: Vec<String> =
                    f.bracket.block_rows().iter().map(|r| r.iter().map(u32::to_string).collect::<Vec<_>>().join(" ")).collect();
                w.write_record([
                    a.modulus.to_string(),
                    f.bracket.delta().to_string(),
                    f.bracket.omega().to_string(),
                    ansatz.clone(),
                    f.node.to_string(),
                    rows.join(" | "),
                ])
                .expect("in-memory csv");
            }
            String::from_utf8(w.into_inner().expect("flush")).expect("utf-8")
        }
        Format::Text => {
            let mut s = String::new();
            for f in &outcome.found {
                s.push_str(&format!(
                    "p={} delta={} omega={} ansatz={ansatz} node={}\n",
                    a.modulus,
                    f.bracket.delta(),
                    f.bracket.omega(),
                    f.node
                ));
            }
            s.push_str(&format!(
                "{} solution(s), {} nodes{}\n",
                outcome.found.len(),
                outcome.nodes,
                if outcome.budget_exhausted { ", budget exhausted (partial results)" } else { "" }
            ));
            s
        }
    };
    emit(out, a.output.out.as_deref(), &text)?;
    Ok(if outcome.budget_exhausted { EXIT_BUDGET } else { EXIT_OK })
}

fn cmd_bracket(c: &BracketCommand, out: &mut dyn Write, start: Instant) -> Res<i32> {
    match c {
        BracketCommand::Check { file, biquandle, output } => {
            let x = load_biquandle(biquandle)?;
            let b = load_bracket(file)?;
            let rep: AxiomReport<BracketEquation> = b.verify_axioms(&x).map_err(|e| Fail::Input(e.to_string()))?;
            let m = manifest("bracket check", vec![file.display().to_string(), biquandle.display().to_string()], json!({}), start);
            axiom_output(out, output, m, &rep, &file.display().to_string())
        }
        BracketCommand::Fundamental { diagram, output } => {
            let d = load_diagram(diagram)?;
            let sym = fundamental_bracket(&d);
            let text = match output.format {
                Format::Json => json_text(&json!({
                    "manifest": manifest("bracket fundamental", vec![diagram.display().to_string()], json!({}), start),
                    "states": sym.states,
                })),
                Format::Csv => {
                    let mut w = csv::Writer::from_writer(Vec::new());
                    w.write_record(["omega_exponent", "delta_exponent", "factors"]).expect("in-memory csv");
                    for s in &sym.states {
                        let f: Vec<String> = s.factors.iter().map(|f| f.to_string()).collect();
                        w.write_record([s.omega_exponent.to_string(), s.delta_exponent.to_string(), f.join(" ")]).expect("in-memory csv");
                    }
                    String::from_utf8(w.into_inner().expect("flush")).expect("utf-8")
                }
                Format::Text => sym.states.iter().map(|s| format!("{s}\n")).collect(),
            };
            emit(out, output.out.as_deref(), &text)?;
            Ok(EXIT_OK)
        }
    }
}

fn dispatch(cli: Cli, out: &mut dyn Write) -> Res<i32> {
    let start = Instant::now();
    match cli.command {
        Command::Biquandle { command: BiquandleCommand::Check { file, output } } => {
            let x = load_biquandle(&file)?;
            let rep = x.verify_axioms();
            let m = manifest("biquandle check", vec![file.display().to_string()], json!({}), start);
            axiom_output(out, &output, m, &rep, &file.display().to_string())
        }
        Command::Biquandle { command: BiquandleCommand::Alexander { modulus, t, r, offset, out: path } } => {
            let m = Modulus::new(modulus).map_err(|e| Fail::Input(e.to_string()))?;
            let x = FiniteBiquandle::affine(m, m.reduce(t), m.reduce(r), m.reduce(offset)).map_err(|e| Fail::Input(e.to_string()))?;
            emit(out, path.as_deref(), &x.render())?;
            Ok(EXIT_OK)
        }
        Command::Invariants(a) => cmd_invariants(&a, out, start),
        Command::Corpus(a) => cmd_corpus(&a, out, start),
        Command::Selftest(a) => cmd_selftest(&a, out, start),
        Command::Search(a) => cmd_search(&a, out, start),
        Command::Moves { command: MovesCommand::Insert { diagram, kind, sign, r1_order, variant, gaps, out: path } } => {
            let d = load_diagram(&diagram)?;
            let sign = match sign {
                SignArg::Positive => Sign::Positive,
                SignArg::Negative => Sign::Negative,
            };
            let kind = match kind {
                MoveArg::R1 => MoveKind::R1 { sign, order: r1_order },
                MoveArg::Vr1 => MoveKind::VR1,
                MoveArg::R2 => MoveKind::R2 { variant, sign },
                MoveArg::Vr2 => MoveKind::VR2 { variant },
            };
            let e = d.insert_move(kind, &gaps).map_err(|err| Fail::Input(err.to_string()))?;
            emit(out, path.as_deref(), &e.render())?;
            Ok(EXIT_OK)
        }
        Command::Bracket { command } => cmd_bracket(&command, out, start),
    }
}

/// Parses `args` (program name first) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { err.write_all(text.as_bytes()) } else { out.write_all(text.as_bytes()) };
            return code;
        }
    };
    match dispatch(cli, out) {
        Ok(code) => code,
        Err(Fail::Input(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_INPUT
        }
        Err(Fail::Check(msg)) => {
            let _ = writeln!(err, "{msg}");
            EXIT_FAILURE
        }
    }
}
