//! Command-line front end: analyze a single relation, run the verification
//! campaign, generate input documents, or shrink a failing example.
//!
//! Exit codes: 0 on success, 1 when a verification campaign found a failing
//! theorem, 2 on usage or input errors, 3 when a size cap was exceeded.

use std::fs;
use std::io::Read;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use rough_lattice::relation::{self, BinaryRelation, InformationSystem};
use rough_lattice::verify::{self, CampaignConfig, TheoremId};
use rough_lattice::{report, Caps, Error, Result};

#[derive(Parser)]
#[command(
    name = "rough-lattice",
    version,
    about = "Approximation families, rough-set completions, and their lattice structure \
             for reflexive relations on finite universes"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Analyze one relation: families, completion, classification, conditions.
    Analyze(AnalyzeArgs),
    /// Check the theorem catalogue against generated relations.
    Verify(VerifyArgs),
    /// Generate a relation document.
    Generate(GenerateArgs),
    /// Shrink a relation on which a theorem fails to a smaller failing one.
    Shrink(ShrinkArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(clap::Args)]
struct AnalyzeArgs {
    /// Input relation document (JSON); `-` reads standard input.
    input: PathBuf,
    /// Report format.
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
    /// Also write the completion's cover diagram in DOT form to this file.
    #[arg(long)]
    dot: Option<PathBuf>,
    /// Number elements from 0 instead of 1 in the DOT labels.
    #[arg(long)]
    zero_based: bool,
    /// Write the report here instead of standard output.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Cap family, lattice, and completion sizes at this many elements.
    #[arg(long)]
    max_elements: Option<usize>,
}

#[derive(clap::Args)]
struct VerifyArgs {
    /// Theorems to check: `all`, or a comma-separated list such as `T1,T5`.
    #[arg(long, default_value = "all")]
    theorems: String,
    /// Largest universe size.
    #[arg(long, default_value_t = 6)]
    n_max: usize,
    /// Random relations per universe size beyond the exhaustive range.
    #[arg(long, default_value_t = 200)]
    samples: usize,
    /// Seed for the deterministic relation stream.
    #[arg(long, default_value_t = 2024)]
    seed: u64,
    /// Worker threads (default: one per core).
    #[arg(long)]
    jobs: Option<usize>,
    /// Report format.
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
    /// Write the report here instead of standard output.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Cap family, lattice, and completion sizes at this many elements.
    #[arg(long)]
    max_elements: Option<usize>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Kind {
    /// The identity relation (classical, trivial).
    Identity,
    /// The full relation.
    Full,
    /// Random reflexive relation with the given off-diagonal density.
    RandomReflexive,
    /// Random quasiorder (reflexive and transitive).
    RandomQuasiorder,
    /// Tolerance relation of a random covering.
    Tolerance,
    /// Equivalence relation of a random partition.
    Equivalence,
    /// Relation of a random irredundant covering with a block assignment.
    Clinker,
    /// Rough beta-inclusion relation of an information system (needs --table).
    InformationSystem,
}

#[derive(clap::Args)]
struct GenerateArgs {
    /// What to generate.
    #[arg(long, value_enum)]
    kind: Kind,
    /// Universe size (ignored for information-system, which sizes itself
    /// from the table).
    #[arg(long)]
    size: Option<usize>,
    /// Seed for the generator.
    #[arg(long, default_value_t = 2024)]
    seed: u64,
    /// Off-diagonal pair density for the random kinds.
    #[arg(long, default_value_t = 0.5)]
    density: f64,
    /// Information system document (JSON) for --kind information-system.
    #[arg(long)]
    table: Option<PathBuf>,
    /// Inclusion-error threshold for --kind information-system.
    #[arg(long, default_value_t = 0.0)]
    beta: f64,
    /// Write the relation here instead of standard output.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(clap::Args)]
struct ShrinkArgs {
    /// Input relation document (JSON); `-` reads standard input.
    input: PathBuf,
    /// The single theorem that fails on the input, e.g. `T3`.
    #[arg(long)]
    theorem: String,
    /// Write the shrunk relation here instead of standard output.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Cap family, lattice, and completion sizes at this many elements.
    #[arg(long)]
    max_elements: Option<usize>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Analyze(args) => run_analyze(args),
        Command::Verify(args) => run_verify(args),
        Command::Generate(args) => run_generate(args),
        Command::Shrink(args) => run_shrink(args),
    };
    match outcome {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            match e {
                Error::CapExceeded { .. } => ExitCode::from(3),
                _ => ExitCode::from(2),
            }
        }
    }
}

fn caps_for(max_elements: Option<usize>) -> Caps {
    let caps = Caps::from_env();
    match max_elements {
        Some(m) if m > 0 => caps.with_max_elements(m),
        _ => caps,
    }
}

fn read_input(path: &Path) -> Result<String> {
    if path.as_os_str() == "-" {
        let mut text = String::new();
        std::io::stdin().read_to_string(&mut text)?;
        Ok(text)
    } else {
        Ok(fs::read_to_string(path)?)
    }
}

fn write_output(out: Option<&Path>, body: &str) -> Result<()> {
    match out {
        Some(path) => fs::write(path, body)?,
        None => print!("{body}"),
    }
    Ok(())
}

fn run_analyze(args: AnalyzeArgs) -> Result<ExitCode> {
    let caps = caps_for(args.max_elements);
    let r = BinaryRelation::from_json(&read_input(&args.input)?)?;
    let (rep, system) = report::analyze_with_system(&r, &caps)?;
    if let Some(path) = &args.dot {
        fs::write(path, report::render_dot(&system, !args.zero_based))?;
    }
    let body = match args.format {
        Format::Text => report::render_text(&rep),
        Format::Json => serde_json::to_string_pretty(&rep)? + "\n",
    };
    write_output(args.out.as_deref(), &body)?;
    Ok(ExitCode::SUCCESS)
}

fn run_verify(args: VerifyArgs) -> Result<ExitCode> {
    let caps = caps_for(args.max_elements);
    let cfg = CampaignConfig {
        n_max: args.n_max,
        samples_per_n: args.samples,
        seed: args.seed,
        theorems: TheoremId::parse_list(&args.theorems)?,
        jobs: args.jobs,
    };
    let result = verify::run_campaign(&cfg, &caps)?;
    let body = match args.format {
        Format::Text => report::render_campaign(&result),
        Format::Json => serde_json::to_string_pretty(&result)? + "\n",
    };
    write_output(args.out.as_deref(), &body)?;
    if result.all_hold {
        Ok(ExitCode::SUCCESS)
    } else {
        Ok(ExitCode::from(1))
    }
}

fn run_generate(args: GenerateArgs) -> Result<ExitCode> {
    let size = |what: &str| {
        args.size
            .ok_or_else(|| Error::Invalid(format!("--size is required for --kind {what}")))
    };
    let mut rng = ChaCha8Rng::seed_from_u64(args.seed);
    let r = match args.kind {
        Kind::Identity => BinaryRelation::identity(size("identity")?)?,
        Kind::Full => BinaryRelation::full(size("full")?)?,
        Kind::RandomReflexive => {
            BinaryRelation::random_reflexive(size("random-reflexive")?, args.density, &mut rng)?
        }
        Kind::RandomQuasiorder => {
            BinaryRelation::random_quasiorder(size("random-quasiorder")?, args.density, &mut rng)?
        }
        Kind::Tolerance => {
            let n = size("tolerance")?;
            let blocks = relation::random_covering(n, &mut rng);
            BinaryRelation::tolerance_from_covering(n, &blocks)?
        }
        Kind::Equivalence => {
            let n = size("equivalence")?;
            let blocks = relation::random_partition(n, &mut rng);
            BinaryRelation::equivalence_from_partition(n, &blocks)?
        }
        Kind::Clinker => {
            let n = size("clinker")?;
            let (blocks, assignment) = relation::random_irredundant_covering(n, &mut rng);
            BinaryRelation::from_irredundant_covering(n, &blocks, &assignment)?
        }
        Kind::InformationSystem => {
            let path = args.table.as_ref().ok_or_else(|| {
                Error::Invalid("--table is required for --kind information-system".into())
            })?;
            let table = InformationSystem::from_json(&fs::read_to_string(path)?)?;
            BinaryRelation::from_information_system(&table, args.beta)?
        }
    };
    write_output(args.out.as_deref(), &(r.to_json() + "\n"))?;
    Ok(ExitCode::SUCCESS)
}

fn run_shrink(args: ShrinkArgs) -> Result<ExitCode> {
    let caps = caps_for(args.max_elements);
    let theorems = TheoremId::parse_list(&args.theorem)?;
    if theorems.len() != 1 {
        return Err(Error::Invalid(
            "--theorem must name exactly one theorem".into(),
        ));
    }
    let theorem = theorems[0];
    let r = BinaryRelation::from_json(&read_input(&args.input)?)?;
    let small = verify::minimize_witness(&r, theorem, &caps)?;
    eprintln!(
        "shrunk from {} elements / {} pairs to {} elements / {} pairs",
        r.n(),
        r.pair_count(),
        small.n(),
        small.pair_count()
    );
    write_output(args.out.as_deref(), &(small.to_json() + "\n"))?;
    Ok(ExitCode::SUCCESS)
}
