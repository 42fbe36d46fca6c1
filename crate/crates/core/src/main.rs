use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Duration;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use groupwidth::generators::{
    generate_circle, generate_torus, min_arc_len, parse_word, presentation_complex, product_complex, pullback_labeling,
    spread_wedge, tent_for, tent_labeling, wedge, LabeledComplex,
};
use groupwidth::scx::{load_scx, to_scx_string};
use groupwidth::search::{anneal_min, exhaustive_min, AnnealParams, Fraction};
use groupwidth::verify::{run_suite, summary_json, Status, VerifyOptions};
use groupwidth::{betti1, hcwr_value, Error, FieldSpec, MorseLabeling};

#[derive(Parser)]
#[command(name = "groupwidth", version, about = "Connected width rank of simplicial complexes")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a witness complex and write it as SCX.
    Generate(GenerateArgs),
    /// Evaluate the width of one labeling.
    Analyze(AnalyzeArgs),
    /// Search for a labeling of minimal width.
    Search(SearchArgs),
    /// Replay the built-in width claims.
    Verify(VerifyArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Kind {
    Circle,
    Torus,
    Wedge,
    SpreadWedge,
    Product,
    Presentation,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum LabelSource {
    Tent,
    Constant,
    File,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Mode {
    Exhaustive,
    Anneal,
}

#[derive(Args)]
struct GenerateArgs {
    kind: Kind,
    /// Cycle length for `circle`.
    #[arg(long)]
    m: Option<usize>,
    /// Torus dimension.
    #[arg(long)]
    dim: Option<usize>,
    /// Vertices per torus axis.
    #[arg(long)]
    res: Option<usize>,
    /// Generator count for `presentation`.
    #[arg(long)]
    gens: Option<usize>,
    /// Relator word (letters a..z, capitals for inverses); repeatable.
    #[arg(long = "relator")]
    relators: Vec<String>,
    /// Left operand (SCX) for wedge, spread-wedge and product.
    #[arg(long)]
    left: Option<PathBuf>,
    /// Right operand (SCX).
    #[arg(long)]
    right: Option<PathBuf>,
    /// Gluing vertex in the left operand.
    #[arg(long, default_value_t = 0)]
    v1: usize,
    /// Gluing vertex in the right operand.
    #[arg(long, default_value_t = 0)]
    v2: usize,
    /// Arc length for spread-wedge (default: the shortest that works).
    #[arg(long)]
    arc_len: Option<usize>,
    /// Attach a tent labeling (circle, torus).
    #[arg(long)]
    tent: bool,
    /// Tent axis.
    #[arg(long, default_value_t = 0)]
    axis: usize,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct AnalyzeArgs {
    input: PathBuf,
    #[arg(long, default_value = "Q")]
    field: FieldSpec,
    #[arg(long, value_enum, default_value_t = LabelSource::File)]
    labels: LabelSource,
    /// Tent axis.
    #[arg(long, default_value_t = 0)]
    axis: usize,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct SearchArgs {
    input: PathBuf,
    #[arg(long, default_value = "Q")]
    field: FieldSpec,
    #[arg(long, value_enum, default_value_t = Mode::Exhaustive)]
    mode: Mode,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long)]
    steps: Option<u64>,
    #[arg(long)]
    restarts: Option<u32>,
    /// Initial annealing temperature as NUM/DEN.
    #[arg(long, value_parser = parse_fraction)]
    temperature: Option<Fraction>,
    /// Per-step cooling factor as NUM/DEN.
    #[arg(long, value_parser = parse_fraction)]
    cooling: Option<Fraction>,
    /// Time limit for exhaustive search.
    #[arg(long)]
    budget_seconds: Option<u64>,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct VerifyArgs {
    /// Run only the named case.
    #[arg(long = "case")]
    case: Option<String>,
    /// Time limit for each budgeted search.
    #[arg(long, default_value_t = 600)]
    budget_seconds: u64,
    #[arg(long)]
    out: Option<PathBuf>,
}

fn parse_fraction(s: &str) -> Result<Fraction, String> {
    let (n, d) = s.split_once('/').unwrap_or((s, "1"));
    let num = n.trim().parse().map_err(|e| format!("bad numerator: {e}"))?;
    let den = d.trim().parse().map_err(|e| format!("bad denominator: {e}"))?;
    Ok(Fraction::new(num, den))
}

#[derive(Debug)]
enum Failure {
    Input(String),
    Verification,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let mut msg = e.to_string();
        if let Error::InvalidLabeling(bad) = &e {
            for s in bad {
                msg.push_str(&format!("\n  {s:?}"));
            }
        }
        Failure::Input(msg)
    }
}

fn emit(value: &serde_json::Value, out: Option<&Path>) -> Result<(), Failure> {
    let text = serde_json::to_string_pretty(value).expect("json renders") + "\n";
    match out {
        Some(p) => fs::write(p, text).map_err(|e| Failure::Input(format!("{}: {e}", p.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn need<T>(v: Option<T>, flag: &str) -> Result<T, Failure> {
    v.ok_or_else(|| Failure::Input(format!("missing --{flag}")))
}

fn load(path: &Path) -> Result<LabeledComplex, Failure> {
    load_scx(path).map_err(|e| match Failure::from(e) {
        Failure::Input(msg) => Failure::Input(format!("{}: {msg}", path.display())),
        other => other,
    })
}

fn generate(a: GenerateArgs) -> Result<(), Failure> {
    let lc = match a.kind {
        Kind::Circle => {
            let k = generate_circle(need(a.m, "m")?)?;
            let f = if a.tent { Some(tent_for(&k, 0)?) } else { None };
            LabeledComplex::new(k, f)?
        }
        Kind::Torus => {
            let t = generate_torus(need(a.dim, "dim")?, need(a.res, "res")?)?;
            let f = if a.tent { Some(tent_labeling(&t, a.axis)?) } else { None };
            LabeledComplex::new(t.into_complex(), f)?
        }
        Kind::Wedge => {
            let (l, r) = (load(&need(a.left, "left")?)?, load(&need(a.right, "right")?)?);
            LabeledComplex::unlabeled(wedge(&l.complex, a.v1, &r.complex, a.v2)?)
        }
        Kind::SpreadWedge => {
            let (l, r) = (load(&need(a.left, "left")?)?, load(&need(a.right, "right")?)?);
            let len = match a.arc_len {
                Some(n) => n,
                None => min_arc_len(&l, a.v1, &r, a.v2)?,
            };
            spread_wedge(&l, a.v1, &r, a.v2, len)?
        }
        Kind::Product => {
            let (l, r) = (load(&need(a.left, "left")?)?, load(&need(a.right, "right")?)?);
            let p = product_complex(&l.complex, &r.complex);
            let f = l.labeling.as_ref().map(|f| pullback_labeling(&p, f)).transpose()?;
            LabeledComplex::new(p.into_complex(), f)?
        }
        Kind::Presentation => {
            let words = a.relators.iter().map(|w| parse_word(w)).collect::<Result<Vec<_>, _>>()?;
            LabeledComplex::unlabeled(presentation_complex(need(a.gens, "gens")?, &words)?)
        }
    };
    let k = &lc.complex;
    let summary = json!({
        "vertices": k.vertex_count(),
        "simplices": k.simplex_count(),
        "f_vector": k.f_vector(),
        "euler": k.euler_characteristic(),
        "betti1_Q": betti1(k, FieldSpec::Rationals),
        "labeled": lc.labeling.is_some(),
    });
    match &a.out {
        Some(p) => {
            fs::write(p, to_scx_string(&lc)).map_err(|e| Failure::Input(format!("{}: {e}", p.display())))?;
            emit(&summary, None)
        }
        None => {
            eprintln!("{summary}");
            print!("{}", to_scx_string(&lc));
            Ok(())
        }
    }
}

fn labeling(lc: &LabeledComplex, source: LabelSource, axis: usize) -> Result<MorseLabeling, Failure> {
    Ok(match source {
        LabelSource::File => lc.labeling.clone().ok_or(Error::MissingLabels)?,
        LabelSource::Constant => MorseLabeling::constant(lc.complex.vertex_count(), 0),
        LabelSource::Tent => tent_for(&lc.complex, axis)?,
    })
}

fn analyze(a: AnalyzeArgs) -> Result<(), Failure> {
    let lc = load(&a.input)?;
    let f = labeling(&lc, a.labels, a.axis)?;
    let report = hcwr_value(&lc.complex, &f, a.field)?;
    emit(&report.to_json(), a.out.as_deref())
}

fn search(a: SearchArgs) -> Result<(), Failure> {
    let lc = load(&a.input)?;
    let result = match a.mode {
        Mode::Exhaustive => exhaustive_min(&lc.complex, a.field, a.budget_seconds.map(Duration::from_secs))?,
        Mode::Anneal => {
            let d = AnnealParams::with_seed(a.seed);
            let params = AnnealParams {
                steps: a.steps.unwrap_or(d.steps),
                restarts: a.restarts.unwrap_or(d.restarts),
                initial_temperature: a.temperature.unwrap_or(d.initial_temperature),
                cooling_rate: a.cooling.unwrap_or(d.cooling_rate),
                seed: a.seed,
            };
            anneal_min(&lc.complex, a.field, &params)?
        }
    };
    emit(&result.to_json(a.field), a.out.as_deref())
}

fn verify(a: VerifyArgs) -> Result<(), Failure> {
    let opts = VerifyOptions { budget: Duration::from_secs(a.budget_seconds) };
    let reports = run_suite(a.case.as_deref(), &opts)
        .ok_or_else(|| Failure::Input(format!("no case named {:?}", a.case.unwrap_or_default())))?;
    for r in &reports {
        eprintln!("{:<22} {}", r.name, r.status);
    }
    emit(&summary_json(&reports), a.out.as_deref())?;
    if reports.iter().any(|r| r.status == Status::Fail) {
        return Err(Failure::Verification);
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Generate(a) => generate(a),
        Command::Analyze(a) => analyze(a),
        Command::Search(a) => search(a),
        Command::Verify(a) => verify(a),
    };
    match outcome {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verification) => ExitCode::from(1),
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
