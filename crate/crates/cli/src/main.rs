use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

use theta_loci_core::bott::{
    bott_type_a, bott_type_c, cohomology_of_resolution, parse_weight, rho_type_a, rho_type_c, schur_dim,
    schur_module_construct, verlinde, BottOutcome, CohomologyTable, Partition, Resolution,
};
use theta_loci_core::groebner::{eliminate, saturate};
use theta_loci_core::linalg::RANK_PRIME;
use theta_loci_core::multilinear::{random_section, Case, Section};
use theta_loci_core::pipeline::{example_gallery, run_case, run_section, CaseReport, Example, Format};
use theta_loci_core::poly::parse_polynomial;
use theta_loci_core::vinberg::{enumerate_supports, orbit_dimension, orbit_table, parse_brackets, SupportType};
use theta_loci_core::{Ideal, PrimeField, Ring, TermOrder, DEFAULT_PRIME};

const THREADS_VAR: &str = "THETA_LOCI_THREADS";

#[derive(Parser)]
#[command(name = "theta-loci", version, about = "Pfaffian degeneracy loci, Bott cohomology and orbit tables")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run a degeneracy-locus case on a random (or given) section.
    Run(RunArgs),
    /// Run an example from the gallery of singular quintic curves.
    Example(ExampleArgs),
    /// Bott's theorem for a single weight, or the cohomology of a resolution.
    Bott(BottArgs),
    /// Orbits of SL_7 on three-forms in seven variables.
    Vinberg {
        #[command(subcommand)]
        command: VinbergCommand,
    },
    /// Dimension of the Schur module S_λ(C^n).
    SchurDim(SchurArgs),
    /// Dimension of the space of level-k generalized theta functions for rank 2.
    Verlinde {
        #[arg(long)]
        g: u32,
        #[arg(long)]
        k: u32,
    },
    /// Gröbner basis of an ideal read from JSON.
    Gb(GbArgs),
    /// Print the random section a seed produces.
    Section {
        #[arg(long)]
        case: CaseArg,
        #[arg(long, default_value_t = DEFAULT_PRIME)]
        prime: u64,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum CaseArg {
    C5w25,
    W39,
    C3c3c3,
}

impl From<CaseArg> for Case {
    fn from(c: CaseArg) -> Case {
        match c {
            CaseArg::C5w25 => Case::C5w25,
            CaseArg::W39 => Case::W39,
            CaseArg::C3c3c3 => Case::C3c3c3,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Json,
    Text,
}

impl From<FormatArg> for Format {
    fn from(f: FormatArg) -> Format {
        match f {
            FormatArg::Json => Format::Json,
            FormatArg::Text => Format::Text,
        }
    }
}

#[derive(Args)]
struct RunArgs {
    #[arg(long, required_unless_present = "section")]
    case: Option<CaseArg>,
    #[arg(long, default_value_t = DEFAULT_PRIME)]
    prime: u64,
    /// Seeds for the random section; several seeds run in parallel.
    #[arg(long, value_delimiter = ',', default_value = "42")]
    seed: Vec<u64>,
    /// Coordinate to saturate by (default: the last one).
    #[arg(long)]
    chart: Option<usize>,
    /// Read the section from a JSON file instead of drawing one.
    #[arg(long, conflicts_with_all = ["case", "prime"])]
    section: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "json")]
    format: FormatArg,
    #[arg(long)]
    out: Option<PathBuf>,
    /// Keep per-step wall-clock timings in the report.
    #[arg(long)]
    timings: bool,
}

#[derive(Args)]
struct ExampleArgs {
    /// nodal, triangle, pentagon, nonreduced, cuspidal or all
    #[arg(long)]
    name: String,
    #[arg(long, default_value_t = DEFAULT_PRIME)]
    prime: u64,
    #[arg(long, value_enum, default_value = "text")]
    format: FormatArg,
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long)]
    timings: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum LieType {
    A,
    C,
}

#[derive(Args)]
#[command(args_conflicts_with_subcommands = true)]
struct BottArgs {
    #[command(subcommand)]
    command: Option<BottCommand>,
    #[arg(long = "type", value_enum, ignore_case = true, requires = "weight")]
    lie_type: Option<LieType>,
    /// Comma-separated weight, e.g. 5,7,6,4,3,2,1,0,-1
    #[arg(long, allow_hyphen_values = true)]
    weight: Option<String>,
    /// The weight already includes ρ.
    #[arg(long)]
    rho_added: bool,
    #[arg(long, value_enum, default_value = "text")]
    format: FormatArg,
}

#[derive(Subcommand)]
enum BottCommand {
    /// Cohomology of the sheaf resolved by the terms in a JSON file.
    Resolution {
        #[arg(long)]
        file: PathBuf,
        #[arg(long, value_enum, default_value = "text")]
        format: FormatArg,
    },
}

#[derive(Subcommand)]
enum VinbergCommand {
    /// The ten orbits with recomputed dimensions.
    Table {
        #[arg(long, value_enum, default_value = "text")]
        format: FormatArg,
    },
    /// Orbit dimension of a sum of basis three-forms.
    Dim {
        /// e.g. "[1,2,3]+[4,5,6]"
        #[arg(long)]
        terms: String,
        #[arg(long, default_value_t = 7)]
        n: usize,
    },
    /// Classes of triple configurations realizing a support type.
    Supports {
        /// A1, 2A1, 3A1, 4A1, A2, A2+A1, A2+2A1 or A2+3A1
        #[arg(long = "type")]
        support_type: String,
    },
}

#[derive(Args)]
struct SchurArgs {
    /// Comma-separated parts, e.g. 2,1,1,1,1 or 2,1^4
    #[arg(long, allow_hyphen_values = true)]
    lambda: String,
    #[arg(long)]
    n: usize,
    /// Also build the module explicitly and report its rank.
    #[arg(long)]
    construct: bool,
}

#[derive(Args)]
struct GbArgs {
    /// JSON {prime, variables, generators}; stdin when omitted.
    #[arg(long)]
    file: Option<PathBuf>,
    /// Saturate by this polynomial.
    #[arg(long, allow_hyphen_values = true)]
    saturate: Option<String>,
    /// Eliminate these variables (comma-separated names), after saturating.
    #[arg(long, value_delimiter = ',')]
    eliminate: Vec<String>,
    /// Add the Hilbert series data to the output.
    #[arg(long)]
    hilbert: bool,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct GbInput {
    prime: u64,
    variables: Vec<String>,
    generators: Vec<String>,
}

#[derive(Serialize)]
struct GbOutput {
    basis: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    numerator: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    dim: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    degree: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    hilbert_polynomial: Option<String>,
}

#[derive(Serialize)]
struct OrbitRow {
    label: usize,
    support: String,
    representative: String,
    expected_dimension: usize,
    dimension: usize,
    verified: bool,
}

fn main() -> ExitCode {
    // exit code 2 is reserved for non-generic sections, so usage errors exit 1
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    match dispatch(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}

fn dispatch(command: Command) -> Result<u8> {
    match command {
        Command::Run(args) => cmd_run(args),
        Command::Example(args) => cmd_example(args),
        Command::Bott(args) => cmd_bott(args),
        Command::Vinberg { command } => cmd_vinberg(command),
        Command::SchurDim(args) => cmd_schur(args),
        Command::Verlinde { g, k } => {
            println!("{}", verlinde(g, k)?);
            Ok(0)
        }
        Command::Gb(args) => cmd_gb(args),
        Command::Section { case, prime, seed, out } => {
            let section = random_section(case.into(), seed, prime)?;
            emit(out.as_deref(), &(serde_json::to_string_pretty(&section)? + "\n"))?;
            Ok(0)
        }
    }
}

fn emit(out: Option<&Path>, text: &str) -> Result<()> {
    match out {
        Some(path) => fs::write(path, text).with_context(|| format!("writing {}", path.display())),
        None => {
            io::stdout().write_all(text.as_bytes())?;
            Ok(())
        }
    }
}

fn read_input(path: Option<&Path>) -> Result<String> {
    match path {
        Some(p) => fs::read_to_string(p).with_context(|| format!("reading {}", p.display())),
        None => {
            let mut s = String::new();
            io::stdin().read_to_string(&mut s)?;
            Ok(s)
        }
    }
}

fn parse_json<T: for<'de> Deserialize<'de>>(text: &str, path: Option<&Path>) -> Result<T> {
    let name = path.map_or_else(|| "<stdin>".to_string(), |p| p.display().to_string());
    serde_json::from_str(text).map_err(|e| anyhow!("malformed input {name}: {e}"))
}

fn thread_cap() -> Result<usize> {
    match std::env::var(THREADS_VAR) {
        Ok(v) => match v.trim().parse::<usize>() {
            Ok(n) if n > 0 => Ok(n),
            _ => bail!("{THREADS_VAR}: expected a positive integer, got `{v}`"),
        },
        Err(_) => Ok(std::thread::available_parallelism().map_or(1, |n| n.get())),
    }
}

/// Maps `f` over `items` on at most `threads` worker threads, keeping order.
fn parallel_map<T: Sync, R: Send>(items: &[T], threads: usize, f: impl Fn(&T) -> R + Sync) -> Vec<R> {
    let workers = threads.clamp(1, items.len().max(1));
    let next = AtomicUsize::new(0);
    let slots: Mutex<Vec<Option<R>>> = Mutex::new((0..items.len()).map(|_| None).collect());
    std::thread::scope(|s| {
        for _ in 0..workers {
            s.spawn(|| loop {
                let i = next.fetch_add(1, Ordering::Relaxed);
                if i >= items.len() {
                    break;
                }
                let r = f(&items[i]);
                slots.lock().expect("worker panicked")[i] = Some(r);
            });
        }
    });
    slots.into_inner().expect("worker panicked").into_iter().map(|r| r.expect("every slot filled")).collect()
}

/// Writes one report as is, several as a JSON array (or concatenated text),
/// and combines exit codes: any failure gives 1, else any non-generic run 2.
fn emit_reports(mut reports: Vec<CaseReport>, format: Format, timings: bool, out: Option<&Path>) -> Result<u8> {
    if !timings {
        for r in &mut reports {
            r.timings.clear();
        }
    }
    let text = match (format, reports.len()) {
        (Format::Json, n) if n > 1 => serde_json::to_string_pretty(&reports)? + "\n",
        _ => reports.iter().map(|r| r.emit(format)).collect(),
    };
    emit(out, &text)?;
    let codes: Vec<i32> = reports.iter().map(CaseReport::exit_code).collect();
    Ok(if codes.contains(&1) {
        1
    } else if codes.contains(&2) {
        2
    } else {
        0
    })
}

fn cmd_run(args: RunArgs) -> Result<u8> {
    let threads = thread_cap()?;
    let reports = if let Some(path) = &args.section {
        let text = read_input(Some(path))?;
        let section: Section = parse_json(&text, Some(path))?;
        section.validate().map_err(|e| anyhow!("malformed input {}: {e}", path.display()))?;
        vec![run_section(&section, None, args.chart)?]
    } else {
        let case: Case = args.case.expect("clap enforces --case").into();
        parallel_map(&args.seed, threads, |&seed| run_case(case, args.prime, seed, args.chart))
            .into_iter()
            .collect::<Result<Vec<_>, _>>()?
    };
    emit_reports(reports, args.format.into(), args.timings, args.out.as_deref())
}

fn cmd_example(args: ExampleArgs) -> Result<u8> {
    let examples: Vec<Example> = if args.name == "all" { Example::ALL.to_vec() } else { vec![args.name.parse()?] };
    let threads = thread_cap()?;
    let reports = parallel_map(&examples, threads, |&e| example_gallery(e, args.prime))
        .into_iter()
        .collect::<Result<Vec<_>, _>>()?;
    emit_reports(reports, args.format.into(), args.timings, args.out.as_deref())
}

fn outcome_text(outcome: &BottOutcome) -> String {
    match outcome {
        BottOutcome::Vanishes => "all cohomology vanishes".to_string(),
        BottOutcome::Nonzero { degree, dominant_weight, dimension } => {
            format!("H^{degree} is irreducible of highest weight {dominant_weight:?}, dimension {dimension}")
        }
    }
}

fn cmd_bott(args: BottArgs) -> Result<u8> {
    if let Some(BottCommand::Resolution { file, format }) = args.command {
        let text = read_input(Some(&file))?;
        let res: Resolution = parse_json(&text, Some(&file))?;
        let table = cohomology_of_resolution(res.space, &res.terms)?;
        match format {
            FormatArg::Json => println!("{}", serde_json::to_string_pretty(&table)?),
            FormatArg::Text => print!("{}", table_text(&table)),
        }
        return Ok(0);
    }
    let (Some(lie_type), Some(weight)) = (args.lie_type, args.weight) else {
        bail!("bott needs --type and --weight, or the `resolution` subcommand");
    };
    let mut w = parse_weight(&weight).map_err(|e| anyhow!("--weight: {e}"))?;
    let rho = match lie_type {
        LieType::A => rho_type_a(w.len()),
        LieType::C => rho_type_c(w.len()),
    };
    if args.rho_added {
        for (x, r) in w.iter_mut().zip(&rho) {
            *x -= r;
        }
    }
    let outcome = match lie_type {
        LieType::A => bott_type_a(&w),
        LieType::C => bott_type_c(&w),
    };
    match args.format {
        FormatArg::Json => println!("{}", serde_json::to_string_pretty(&outcome)?),
        FormatArg::Text => println!("{}", outcome_text(&outcome)),
    }
    Ok(0)
}

fn table_text(table: &CohomologyTable) -> String {
    let mut s = String::new();
    for c in &table.log {
        let cell = match c.degree {
            Some(j) => format!("H^{j} = {}", c.dimension),
            None => "0".to_string(),
        };
        s += &format!("  h={} weight {:?} twist {}: {cell}\n", c.h, c.weight, c.twist);
    }
    for (a, b) in &table.forced_cancellations {
        s += &format!("  cancelled (h={}, j={}) against (h={}, j={})\n", a.0, a.1, b.0, b.1);
    }
    match &table.entries {
        Some(e) => {
            let parts: Vec<String> = e.iter().enumerate().map(|(i, d)| format!("h^{i} = {d}")).collect();
            s += &format!("{}\n", parts.join(", "));
        }
        None => s += "spectral sequence not certified to degenerate\n",
    }
    s
}

fn cmd_vinberg(command: VinbergCommand) -> Result<u8> {
    match command {
        VinbergCommand::Table { format } => {
            let rows: Vec<OrbitRow> = orbit_table()?
                .into_iter()
                .map(|r| OrbitRow {
                    label: r.label,
                    support: r.support_type.map_or("0", |t| t.name()).to_string(),
                    representative: r.representative_string(),
                    expected_dimension: r.expected_dimension,
                    dimension: r.dimension,
                    verified: r.verified(),
                })
                .collect();
            match format {
                FormatArg::Json => println!("{}", serde_json::to_string_pretty(&rows)?),
                FormatArg::Text => {
                    println!(
                        "{:<3} {:<8} {:<36} {:>8} {:>8}",
                        "#", "support", "representative", "expected", "computed"
                    );
                    for r in &rows {
                        let mark = if r.verified { "" } else { "  MISMATCH" };
                        println!(
                            "{:<3} {:<8} {:<36} {:>8} {:>8}{mark}",
                            r.label, r.support, r.representative, r.expected_dimension, r.dimension
                        );
                    }
                }
            }
            Ok(if rows.iter().all(|r| r.verified) { 0 } else { 1 })
        }
        VinbergCommand::Dim { terms, n } => {
            let v = parse_brackets(&terms, n, PrimeField::new(RANK_PRIME)?).map_err(|e| anyhow!("--terms: {e}"))?;
            println!("{}", orbit_dimension(&v)?);
            Ok(0)
        }
        VinbergCommand::Supports { support_type } => {
            let ty: SupportType = support_type.parse().map_err(|e| anyhow!("--type: {e}"))?;
            let classes = enumerate_supports(ty);
            println!("{}: {} class(es) from {} ordered tuples", ty.name(), classes.class_count(), classes.raw_tuples);
            for rep in &classes.representatives {
                println!("  {}", rep.iter().map(ToString::to_string).collect::<Vec<_>>().join("+"));
            }
            for inc in &classes.incomplete {
                let s = inc.iter().map(ToString::to_string).collect::<Vec<_>>().join("+");
                println!("  rejected (not complete): {s}");
            }
            Ok(0)
        }
    }
}

fn cmd_schur(args: SchurArgs) -> Result<u8> {
    let lambda = parse_weight(&args.lambda).map_err(|e| anyhow!("--lambda: {e}"))?;
    println!("{}", schur_dim(&lambda, args.n)?);
    if args.construct {
        let parts = lambda
            .iter()
            .map(|&x| u32::try_from(x).map_err(|_| anyhow!("--lambda: --construct needs nonnegative parts")))
            .collect::<Result<Vec<_>>>()?;
        let rank = schur_module_construct(&Partition::new(parts)?, args.n)?;
        println!("constructed rank {rank}");
    }
    Ok(0)
}

fn cmd_gb(args: GbArgs) -> Result<u8> {
    let path = args.file.as_deref();
    let text = read_input(path)?;
    let input: GbInput = parse_json(&text, path)?;
    let field = PrimeField::new(input.prime).map_err(|e| anyhow!("prime: {e}"))?;
    let ring =
        Ring::new(field, input.variables.clone(), TermOrder::DegRevLex).map_err(|e| anyhow!("variables: {e}"))?;
    let gens = input
        .generators
        .iter()
        .enumerate()
        .map(|(i, g)| parse_polynomial(&ring, g).map_err(|e| anyhow!("generators[{i}]: {e}")))
        .collect::<Result<Vec<_>>>()?;
    let mut ideal = Ideal::new(&ring, gens)?;
    if let Some(f) = &args.saturate {
        let f = parse_polynomial(&ring, f).map_err(|e| anyhow!("--saturate: {e}"))?;
        ideal = saturate(&ideal, &f)?;
    }
    if !args.eliminate.is_empty() {
        let vars = args
            .eliminate
            .iter()
            .map(|name| ring.index_of(name.trim()).ok_or_else(|| anyhow!("--eliminate: unknown variable `{name}`")))
            .collect::<Result<Vec<_>>>()?;
        ideal = eliminate(&ideal, &vars)?;
    }
    let mut out = GbOutput {
        basis: ideal.groebner_basis().elements().iter().map(|p| p.to_canonical_string()).collect(),
        numerator: None,
        dim: None,
        degree: None,
        hilbert_polynomial: None,
    };
    if args.hilbert {
        let h = ideal.hilbert()?;
        out.numerator = Some(h.numerator.to_string());
        out.dim = Some(h.krull_dimension);
        out.degree = Some(h.degree);
        out.hilbert_polynomial = Some(h.polynomial_string());
    }
    println!("{}", serde_json::to_string_pretty(&out)?);
    Ok(0)
}
