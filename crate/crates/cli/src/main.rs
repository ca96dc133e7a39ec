use std::path::Path;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use hochcap::hochschild::{cohomology, homology, HomologySpace};
use hochcap::io::parse_algebra_file;
use hochcap::verify::{run_suite, Axiom, AxiomReport, Status, SuiteReport};
use hochcap::{cap::cap_table, with_algebra, zoo, AlgebraFile, AnyAlgebra, Error, Field, FieldSpec};
use serde::Serialize;

#[derive(Parser)]
#[command(name = "hochcap", version, about = "Hochschild (co)homology and the cap product over Q and F_p")]
struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    /// Largest number of coordinates any (co)chain space may have.
    #[arg(long, global = true)]
    memory_cap: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Parse and validate an algebra file.
    Validate { algebra: String },
    /// Dimensions of H_n(A, N).
    Homology {
        algebra: String,
        #[arg(long, default_value = "regular")]
        module: String,
        #[arg(long, default_value_t = 3)]
        max_degree: usize,
        /// Also print a representative of each basis class.
        #[arg(long)]
        generators: bool,
    },
    /// Dimensions of H^m(A, M).
    Cohomology {
        algebra: String,
        #[arg(long, default_value = "regular")]
        module: String,
        #[arg(long, default_value_t = 3)]
        max_degree: usize,
        #[arg(long)]
        generators: bool,
    },
    /// Cap products of basis classes of HH_n(A) and HH^m(A).
    Cap { algebra: String, n: usize, m: usize },
    /// Run the axiom checks.
    Verify {
        algebra: String,
        /// Comma-separated list of QI, QII1, QII2, QIII, uniqueness, cap_equivalence, descent, diagonal, or "all".
        #[arg(long, default_value = "all")]
        axioms: String,
        #[arg(long, default_value_t = 3)]
        max_degree: usize,
        #[arg(long, default_value_t = 42)]
        seed: u64,
    },
    /// The built-in algebras.
    Zoo {
        #[command(subcommand)]
        command: ZooCommand,
    },
}

#[derive(Subcommand)]
enum ZooCommand {
    List,
    Show { name: String },
}

enum Failure {
    Engine(Error),
    Usage(String),
    AxiomsFailed(usize),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Engine(e)
    }
}

type Outcome = Result<(), Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Engine(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(match e {
                Error::Parse { .. } => 2,
                Error::ResourceGuard { .. } => 3,
                _ => 1,
            })
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::AxiomsFailed(n)) => {
            eprintln!("{n} check(s) failed");
            ExitCode::from(1)
        }
    }
}

fn run(cli: &Cli) -> Outcome {
    match &cli.command {
        Command::Validate { algebra } => {
            let any = load(algebra, cli.memory_cap)?;
            with_algebra!(&any, file => validate(cli.format, algebra, file))
        }
        Command::Homology { algebra, module, max_degree, generators } => {
            let any = load(algebra, cli.memory_cap)?;
            with_algebra!(&any, file => dims(cli.format, algebra, file, module, *max_degree, *generators, true))
        }
        Command::Cohomology { algebra, module, max_degree, generators } => {
            let any = load(algebra, cli.memory_cap)?;
            with_algebra!(&any, file => dims(cli.format, algebra, file, module, *max_degree, *generators, false))
        }
        Command::Cap { algebra, n, m } => {
            let any = load(algebra, cli.memory_cap)?;
            with_algebra!(&any, file => cap(cli.format, algebra, file, *n, *m))
        }
        Command::Verify { algebra, axioms, max_degree, seed } => {
            let selection = parse_axioms(axioms)?;
            let any = load(algebra, cli.memory_cap)?;
            let report = with_algebra!(&any, file => run_suite(file, algebra, &selection, *max_degree, *seed))?;
            print_suite(cli.format, &report);
            if report.failed > 0 {
                return Err(Failure::AxiomsFailed(report.failed));
            }
            Ok(())
        }
        Command::Zoo { command: ZooCommand::List } => {
            let entries: Vec<ZooEntry> =
                zoo::NAMES.iter().map(|n| ZooEntry { name: n, description: zoo::description(n).unwrap_or_default() }).collect();
            match cli.format {
                Format::Json => println!("{}", to_json(&entries)),
                Format::Text => {
                    for e in &entries {
                        println!("{:<22}{}", e.name, e.description);
                    }
                }
            }
            Ok(())
        }
        Command::Zoo { command: ZooCommand::Show { name } } => {
            let text = zoo::json(name).ok_or_else(|| Failure::Usage(format!("no zoo algebra named {name:?}")))?;
            print!("{text}");
            if !text.ends_with('\n') {
                println!();
            }
            Ok(())
        }
    }
}

/// A zoo name or a path to a JSON file.
fn load(source: &str, memory_cap: Option<usize>) -> Result<AnyAlgebra, Failure> {
    let any = if zoo::json(source).is_some() { zoo::load(source)? } else { parse_algebra_file(Path::new(source))? };
    Ok(match (any, memory_cap) {
        (any, None) => any,
        (AnyAlgebra::Rational(f), Some(c)) => AnyAlgebra::Rational(f.with_coord_cap(c)),
        (AnyAlgebra::Prime(f), Some(c)) => AnyAlgebra::Prime(f.with_coord_cap(c)),
    })
}

fn parse_axioms(s: &str) -> Result<Vec<Axiom>, Failure> {
    if s.eq_ignore_ascii_case("all") {
        return Ok(Axiom::ALL.to_vec());
    }
    s.split(',')
        .map(|t| Axiom::parse(t.trim()).ok_or_else(|| Failure::Usage(format!("unknown axiom {t:?}"))))
        .collect()
}

fn to_json<T: Serialize>(v: &T) -> String {
    serde_json::to_string_pretty(v).expect("reports serialize")
}

#[derive(Serialize)]
struct ZooEntry<'a> {
    name: &'a str,
    description: &'a str,
}

#[derive(Serialize)]
struct Validated<'a> {
    algebra: &'a str,
    valid: bool,
    field: FieldSpec,
    dimension: usize,
    basis: &'a [String],
    bimodules: Vec<ModuleInfo>,
}

#[derive(Serialize)]
struct ModuleInfo {
    name: String,
    dimension: usize,
}

fn validate<F: Field>(format: Format, source: &str, file: &AlgebraFile<F>) -> Outcome {
    let a = &file.algebra;
    let bimodules = file
        .module_names()
        .into_iter()
        .map(|n| file.module(&n).map(|m| ModuleInfo { dimension: m.dim(), name: n }))
        .collect::<Result<Vec<_>, _>>()?;
    let v = Validated { algebra: source, valid: true, field: a.field().spec(), dimension: a.dim(), basis: a.labels(), bimodules };
    match format {
        Format::Json => println!("{}", to_json(&v)),
        Format::Text => {
            println!("{source}: valid, dimension {} over {}", v.dimension, field_name(v.field));
            println!("basis: {}", v.basis.join(", "));
            for m in &v.bimodules {
                println!("bimodule {}: dimension {}", m.name, m.dimension);
            }
        }
    }
    Ok(())
}

fn field_name(f: FieldSpec) -> String {
    match f {
        FieldSpec::Rationals => "Q".into(),
        FieldSpec::PrimeField { p } => format!("F_{p}"),
    }
}

#[derive(Serialize)]
struct DimTable<'a> {
    algebra: &'a str,
    module: &'a str,
    variance: &'static str,
    dims: Vec<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    generators: Option<Vec<Vec<Vec<String>>>>,
}

fn representatives<F: Field>(space: &std::sync::Arc<HomologySpace<F>>) -> Vec<Vec<String>> {
    let f = space.field();
    space.basis_classes().iter().map(|c| c.representative().iter().map(|x| f.format_elem(x)).collect()).collect()
}

fn dims<F: Field>(
    format: Format,
    source: &str,
    file: &AlgebraFile<F>,
    module: &str,
    max_degree: usize,
    generators: bool,
    lower: bool,
) -> Outcome {
    let m = file.module(module)?;
    let mut dims = Vec::new();
    let mut gens = Vec::new();
    for k in 0..=max_degree {
        let space = if lower { homology(&m, k)? } else { cohomology(&m, k)? };
        dims.push(space.dim());
        if generators {
            gens.push(representatives(&space));
        }
    }
    let t = DimTable {
        algebra: source,
        module,
        variance: if lower { "homology" } else { "cohomology" },
        dims,
        generators: generators.then_some(gens),
    };
    match format {
        Format::Json => println!("{}", to_json(&t)),
        Format::Text => {
            for (k, d) in t.dims.iter().enumerate() {
                let h = if lower { format!("H_{k}") } else { format!("H^{k}") };
                println!("{h}(A, {module}) = {d}");
                if let Some(g) = &t.generators {
                    for (i, rep) in g[k].iter().enumerate() {
                        println!("  [{i}] ({})", rep.join(", "));
                    }
                }
            }
        }
    }
    Ok(())
}

#[derive(Serialize)]
struct CapOutput<'a> {
    algebra: &'a str,
    n: usize,
    m: usize,
    homology_dim: usize,
    cohomology_dim: usize,
    target_dim: usize,
    /// `entries[i][k]` are the coordinates of `γ_i ∩ ε_k`.
    entries: Vec<Vec<Vec<String>>>,
}

fn cap<F: Field>(format: Format, source: &str, file: &AlgebraFile<F>, n: usize, m: usize) -> Outcome {
    let f = file.algebra.field();
    let t = cap_table(&file.algebra, n, m)?;
    let out = CapOutput {
        algebra: source,
        n,
        m,
        homology_dim: t.homology_dim,
        cohomology_dim: t.cohomology_dim,
        target_dim: t.target_dim,
        entries: t.entries.iter().map(|row| row.iter().map(|e| e.iter().map(|x| f.format_elem(x)).collect()).collect()).collect(),
    };
    match format {
        Format::Json => println!("{}", to_json(&out)),
        Format::Text => {
            println!(
                "HH_{n} (dim {}) x HH^{m} (dim {}) -> HH_{} (dim {})",
                out.homology_dim,
                out.cohomology_dim,
                n - m,
                out.target_dim
            );
            for (i, row) in out.entries.iter().enumerate() {
                let cells: Vec<String> = row.iter().map(|e| format!("({})", e.join(", "))).collect();
                println!("γ{i}: {}", cells.join("  "));
            }
        }
    }
    Ok(())
}

fn status_word(r: &AxiomReport) -> &'static str {
    match r.status {
        Status::Pass => "PASS",
        Status::Fail => "FAIL",
        Status::Skipped { .. } => "SKIP",
    }
}

fn print_suite(format: Format, report: &SuiteReport) {
    match format {
        Format::Json => println!("{}", to_json(report)),
        Format::Text => {
            for r in &report.reports {
                let (n, m) = r.degrees;
                print!("{} {:<16} {} (n={n}, m={m}) checked {}", status_word(r), r.axiom.name(), r.instance, r.checked);
                match (&r.status, &r.witness) {
                    (Status::Skipped { reason }, _) => println!(": {reason}"),
                    (_, Some(w)) => println!(
                        ": item {:?}, {}: [{}] != [{}]",
                        w.item,
                        w.description,
                        w.lhs.join(", "),
                        w.rhs.join(", ")
                    ),
                    _ => println!(),
                }
            }
            println!(
                "{}: {} passed, {} failed, {} skipped (max degree {}, seed {})",
                report.algebra, report.passed, report.failed, report.skipped, report.max_degree, report.seed
            );
        }
    }
}
