use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use serde_json::json;

use minorcat::experiments::{
    cmd_homology, growth_check, render_table, resolve_graph, torsion_audit, with_jobs, write_json_lines,
    ExperimentConfig, NRange,
};
use minorcat::graph::format::GraphJson;
use minorcat::grobner::json::{OrderedMorphismJson, QuartetJson};
use minorcat::grobner::{admissible_compare, Quartet};
use minorcat::minor::json::MorphismJson;
use minorcat::minor::{compose, hom_set};
use minorcat::swiatkowski::{generator_search, SwiatkowskiComplex};
use minorcat::{Error, Graph};

#[derive(Parser)]
#[command(name = "minorcat", version, about = "Graph minor category and configuration-space homology")]
struct Cli {
    /// Worker threads; 0 uses every core.
    #[arg(long, global = true, default_value_t = 0)]
    jobs: usize,

    /// Also write JSON lines to this file.
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct Family {
    /// Graph file or builder name (`*`, `R2`, `P3`, `C4`, `K5`, `K3,3`, `S3`, `L`); repeatable.
    #[arg(long = "graph")]
    graphs: Vec<String>,
    /// Without --graph, use every connected graph with at most this many edges.
    #[arg(long)]
    max_edges: Option<usize>,
    #[arg(long)]
    imax: Option<usize>,
    #[arg(long)]
    nmax: Option<usize>,
    /// Inclusive range of n, e.g. `1..4`; overrides --nmax.
    #[arg(long)]
    n_range: Option<NRange>,
    /// Cap on the rank of any chain group built.
    #[arg(long)]
    basis_limit: Option<u128>,
}

#[derive(Subcommand)]
enum Command {
    /// Homology of configuration spaces via the reduced Świątkowski complex.
    Homology {
        #[command(flatten)]
        family: Family,
        /// Cross-check against the discretized model.
        #[arg(long)]
        oracle: bool,
        /// Record wall-clock timings (makes output nondeterministic).
        #[arg(long)]
        timing: bool,
    },
    /// Check that H_1 torsion is 2-torsion and appears exactly for non-planar graphs.
    TorsionAudit {
        #[command(flatten)]
        family: Family,
        /// Where to write the offending graph if the audit fails.
        #[arg(long, default_value = "torsion_reproducer.graph")]
        reproducer: PathBuf,
    },
    /// Minimal generators of S̃_{i,i} from graphs with at most 2i edges.
    Generators {
        #[arg(long, default_value_t = 1)]
        imax: usize,
    },
    /// Check the morphism-count and rank growth bounds.
    GrowthCheck {
        #[command(flatten)]
        family: Family,
    },
    /// Validate a morphism file.
    Validate { morphism: PathBuf },
    /// Compose two morphisms, first then second.
    Compose { first: PathBuf, second: PathBuf },
    /// List every minor morphism between two graphs.
    Homset { source: String, target: String },
    /// Compare quartets.
    Quartet {
        #[command(subcommand)]
        op: QuartetOp,
    },
    /// Ranks and differentials of the reduced Świątkowski complex.
    Complex {
        #[arg(long)]
        graph: String,
        #[arg(long, default_value_t = 1)]
        imax: usize,
        #[arg(long, default_value_t = 2)]
        nmax: usize,
        #[arg(long)]
        emit_matrices: bool,
    },
}

#[derive(Subcommand)]
enum QuartetOp {
    /// Admissible order: prints LT, EQ or GT.
    Compare { first: PathBuf, second: PathBuf },
    /// Partial order: exit 0 with a witness if first <= second, else exit 1.
    Leq { first: PathBuf, second: PathBuf },
}

enum Outcome {
    Ok,
    /// Violation, empty result or failed check.
    Negative,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let jobs = cli.jobs;
    let out = cli.out.clone();
    match with_jobs(jobs, move || run(cli.command, out.as_deref())).and_then(|r| r) {
        Ok(Outcome::Ok) => ExitCode::SUCCESS,
        Ok(Outcome::Negative) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Parse { .. } | Error::Json(_) | Error::UnknownGraphSpec(_) | Error::Io(_) | Error::InvalidGraph(_) => 2,
        _ => 1,
    }
}

fn config(family: &Family, defaults: ExperimentConfig) -> minorcat::Result<ExperimentConfig> {
    Ok(ExperimentConfig {
        graphs: family.graphs.iter().map(|s| resolve_graph(s)).collect::<minorcat::Result<_>>()?,
        i_max: family.imax.unwrap_or(defaults.i_max),
        n_max: family.nmax.unwrap_or(defaults.n_max),
        n_range: family.n_range.clone().or(defaults.n_range),
        max_edges: family.max_edges.unwrap_or(defaults.max_edges),
        basis_limit: family.basis_limit.unwrap_or(defaults.basis_limit),
        ..defaults
    })
}

fn emit<T: Serialize>(out: Option<&Path>, rows: &[T]) -> minorcat::Result<()> {
    if let Some(path) = out {
        let mut w = BufWriter::new(File::create(path)?);
        write_json_lines(&mut w, rows)?;
        w.flush()?;
    }
    Ok(())
}

fn print_json(value: &impl Serialize) -> minorcat::Result<()> {
    let mut stdout = io::stdout().lock();
    serde_json::to_writer(&mut stdout, value)?;
    writeln!(stdout)?;
    Ok(())
}

fn read_json<T: serde::de::DeserializeOwned>(path: &Path) -> minorcat::Result<T> {
    Ok(serde_json::from_str(&std::fs::read_to_string(path)?)?)
}

fn run(command: Command, out: Option<&Path>) -> minorcat::Result<Outcome> {
    match command {
        Command::Homology { family, oracle, timing } => {
            let cfg = ExperimentConfig {
                oracle,
                timing,
                ..config(&family, ExperimentConfig::default())?
            };
            let rows = cmd_homology(&cfg)?;
            emit(out, &rows)?;
            print!("{}", render_table(&rows));
            let disagree = rows.iter().any(|r| r.oracle_agrees == Some(false));
            Ok(if disagree { Outcome::Negative } else { Outcome::Ok })
        }
        Command::TorsionAudit { family, reproducer } => {
            let cfg = config(
                &family,
                ExperimentConfig {
                    max_edges: 5,
                    ..Default::default()
                },
            )?;
            let report = torsion_audit(&cfg, Some(&reproducer))?;
            emit(out, &report.rows)?;
            println!("{:<10}  {:>2}  {:<6}  {:<16}  ok", "graph", "n", "planar", "H_1");
            for r in &report.rows {
                println!("{:<10}  {:>2}  {:<6}  {:<16}  {}", r.graph, r.n, r.planar, r.h1.to_string(), r.ok);
            }
            for (g, n) in &report.skipped {
                println!("{g:<10}  {n:>2}  skipped (size)");
            }
            if let Some(e) = &report.epsilon2_candidate {
                println!("epsilon_2 candidate: {e}");
            }
            if let Some(c) = &report.counterexample {
                eprintln!("counterexample on {} at n = {}; wrote {}", c.graph, c.n, reproducer.display());
                return Ok(Outcome::Negative);
            }
            Ok(Outcome::Ok)
        }
        Command::Generators { imax } => {
            let rows = generator_search(imax)?;
            emit(out, &rows)?;
            println!("{:<8}  {:>4}  {:>5}  {:<12}  generators", "graph", "rank", "image", "cokernel");
            for r in &rows {
                println!(
                    "{:<8}  {:>4}  {:>5}  {:<12}  {}",
                    r.graph,
                    r.rank,
                    r.image_rank,
                    r.cokernel.to_string(),
                    r.generators
                );
            }
            println!("total: {}", rows.iter().map(|r| r.generators).sum::<usize>());
            Ok(Outcome::Ok)
        }
        Command::GrowthCheck { family } => {
            let cfg = config(
                &family,
                ExperimentConfig {
                    max_edges: 5,
                    n_range: Some(NRange(1..=2)),
                    ..Default::default()
                },
            )?;
            let report = growth_check(&cfg)?;
            emit(out, std::slice::from_ref(&report))?;
            println!("i = {}, alpha = {} over {:?}", report.i, report.alpha, report.generator_graphs);
            let bad_pairs: Vec<_> = report.pairs.iter().filter(|p| !p.ok).collect();
            let bad_ranks: Vec<_> = report.ranks.iter().filter(|r| !r.ok).collect();
            println!("{} pairs, {} failing", report.pairs.len(), bad_pairs.len());
            println!("{} rank checks, {} failing", report.ranks.len(), bad_ranks.len());
            for p in bad_pairs {
                println!("  hom({}, {}) = {} > {}", p.graph, p.target, p.homs, p.bound);
            }
            for r in bad_ranks {
                println!("  rank H_{}(U_{}({})) = {:?} > {}", r.i, r.n, r.graph, r.rank, r.bound);
            }
            Ok(if report.passed() { Outcome::Ok } else { Outcome::Negative })
        }
        Command::Validate { morphism } => {
            let m = read_json::<MorphismJson>(&morphism)?.to_morphism_unchecked()?;
            match m.validate() {
                Ok(()) => {
                    println!("valid");
                    Ok(Outcome::Ok)
                }
                Err(v) => {
                    println!("invalid: {v}");
                    Ok(Outcome::Negative)
                }
            }
        }
        Command::Compose { first, second } => {
            let f = read_json::<MorphismJson>(&first)?.to_morphism_unchecked()?;
            let g = read_json::<MorphismJson>(&second)?.to_morphism_unchecked()?;
            for (m, path) in [(&f, &first), (&g, &second)] {
                if let Err(v) = m.validate() {
                    println!("{}: invalid: {v}", path.display());
                    return Ok(Outcome::Negative);
                }
            }
            match compose(&f, &g) {
                Ok(h) => {
                    print_json(&MorphismJson::from(&h))?;
                    Ok(Outcome::Ok)
                }
                Err(Error::ObjectMismatch(msg)) => {
                    println!("not composable: {msg}");
                    Ok(Outcome::Negative)
                }
                Err(e) => Err(e),
            }
        }
        Command::Homset { source, target } => {
            let (g, h): (Graph, Graph) = (resolve_graph(&source)?, resolve_graph(&target)?);
            let homs = hom_set(&g, &h)?;
            let rows: Vec<MorphismJson> = homs.iter().map(MorphismJson::from).collect();
            emit(out, &rows)?;
            for r in &rows {
                print_json(r)?;
            }
            eprintln!("{} morphisms", rows.len());
            Ok(if rows.is_empty() { Outcome::Negative } else { Outcome::Ok })
        }
        Command::Quartet { op } => match op {
            QuartetOp::Compare { first, second } => {
                let a = Quartet::try_from(&read_json::<QuartetJson>(&first)?)?;
                let b = Quartet::try_from(&read_json::<QuartetJson>(&second)?)?;
                let order = match admissible_compare(&a, &b)? {
                    std::cmp::Ordering::Less => "LT",
                    std::cmp::Ordering::Equal => "EQ",
                    std::cmp::Ordering::Greater => "GT",
                };
                print_json(&json!({ "order": order }))?;
                Ok(Outcome::Ok)
            }
            QuartetOp::Leq { first, second } => {
                let a = Quartet::try_from(&read_json::<QuartetJson>(&first)?)?;
                let b = Quartet::try_from(&read_json::<QuartetJson>(&second)?)?;
                match a.leq_witness(&b)? {
                    Some((psi, n)) => {
                        print_json(&json!({
                            "leq": true,
                            "psi": OrderedMorphismJson::from(&psi),
                            "n": n,
                        }))?;
                        Ok(Outcome::Ok)
                    }
                    None => {
                        print_json(&json!({ "leq": false }))?;
                        Ok(Outcome::Negative)
                    }
                }
            }
        },
        Command::Complex {
            graph,
            imax,
            nmax,
            emit_matrices,
        } => {
            let g = Arc::new(resolve_graph(&graph)?);
            let cx = SwiatkowskiComplex::build_shared(g.clone(), imax, nmax)?;
            let mut rows = Vec::new();
            for i in 0..=imax {
                for n in 0..=nmax {
                    let mut row = json!({
                        "graph": g.name(),
                        "i": i,
                        "n": n,
                        "rank": cx.rank(i, n)?,
                        "homology": cx.homology(i, n)?,
                    });
                    if emit_matrices {
                        row["differential"] = cx.differential(i, n)?.to_dense().to_json_rows();
                    }
                    rows.push(row);
                }
            }
            emit(out, &rows)?;
            if out.is_none() {
                print_json(&json!({ "graph": GraphJson::from(&*g) }))?;
                for r in &rows {
                    print_json(r)?;
                }
            }
            Ok(Outcome::Ok)
        }
    }
}
