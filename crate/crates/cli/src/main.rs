//! Command-line front end: document validation, lattice reports, DOT
//! emission, lattice-function arithmetic, path-space evaluation, and the
//! groupoid verification suites.
//!
//! Exit codes: 0 when every requested check passes, 1 when a check ran and
//! failed, 2 for input errors (malformed documents, violated hypotheses,
//! exceeded enumeration budgets).

mod docs;
mod verify;

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, bail, Result};
use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use steinberg_core::graph::{Graph, ShLattice};
use steinberg_core::pi::{CarrierLattice, PiError, PiFunction};
use steinberg_core::ring::RingSpec;

use docs::{
    read_json, GraphDoc, GroupoidDoc, IdealDoc, LassoDoc, MonomialDoc, PiDoc, RingDoc,
};

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Dot,
}

#[derive(Parser)]
#[command(
    name = "steinberg",
    version,
    about = "Exact ideal-lattice computations for graph and groupoid convolution algebras"
)]
struct Cli {
    /// Output format; `dot` applies to lattice reports.
    #[arg(long, global = true, value_enum, default_value = "text")]
    format: Format,
    /// Seed for the randomized parts of verification suites; printed by the
    /// commands that use it.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Parse and validate a document file of any supported kind.
    Validate {
        /// A ring, ideal, graph, groupoid, lattice-function, monomial, or
        /// lasso document.
        file: PathBuf,
    },
    /// Reports about a graph.
    #[command(subcommand)]
    Graph(GraphCmd),
    /// Operations on a graph's ideal lattice, via ideal-valued functions.
    #[command(subcommand)]
    Ideal(IdealCmd),
    /// Path-space evaluation of a lattice function.
    #[command(subcommand)]
    Rho(RhoCmd),
    /// Groupoid-algebra verification.
    #[command(subcommand)]
    Gpd(GpdCmd),
    /// Brute-force cross-checks.
    #[command(subcommand)]
    Oracle(OracleCmd),
}

#[derive(Subcommand)]
enum GraphCmd {
    /// Print the lattice of saturated hereditary vertex sets.
    Lattice {
        graph: PathBuf,
        /// Emit the Hasse diagram in DOT (shorthand for --format dot).
        #[arg(long)]
        dot: bool,
    },
    /// Decide Condition (K); exits 1 when it fails.
    #[command(name = "check-k")]
    CheckK { graph: PathBuf },
}

#[derive(Subcommand)]
enum IdealCmd {
    /// Whether the first function is below the second (pointwise
    /// containment of ideals); exits 1 on "false".
    Leq { graph: PathBuf, pi1: PathBuf, pi2: PathBuf },
    /// Greatest lower bound of two functions.
    Meet { graph: PathBuf, pi1: PathBuf, pi2: PathBuf },
    /// Least valid upper bound of two functions.
    Join { graph: PathBuf, pi1: PathBuf, pi2: PathBuf },
    /// Whether a monomial lies in the ideal the function parameterizes;
    /// exits 1 on "false".
    Member { graph: PathBuf, pi: PathBuf, monomial: PathBuf },
}

#[derive(Subcommand)]
enum RhoCmd {
    /// Evaluate the function along an eventually periodic path.
    Eval { graph: PathBuf, pi: PathBuf, lasso: PathBuf },
}

#[derive(Subcommand)]
enum GpdCmd {
    /// Run the full ideal-lattice verification suite on a groupoid algebra.
    Verify {
        groupoid: PathBuf,
        /// Coefficient ring: a JSON file path or inline JSON such as
        /// '{"kind":"Zmod","n":4}'.
        #[arg(long)]
        ring: String,
    },
}

#[derive(Subcommand)]
enum OracleCmd {
    /// Compare brute-force ideal enumeration against the lattice
    /// parameterization.
    Compare {
        groupoid: PathBuf,
        /// Coefficient ring: a JSON file path or inline JSON.
        #[arg(long)]
        ring: String,
    },
}

fn main() -> ExitCode {
    // Die quietly on a closed pipe (`steinberg ... | head`) instead of
    // panicking mid-write; Rust ignores SIGPIPE by default.
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: &Cli) -> Result<u8> {
    match &cli.command {
        Command::Validate { file } => cmd_validate(file),
        Command::Graph(GraphCmd::Lattice { graph, dot }) => {
            let format = if *dot { Format::Dot } else { cli.format };
            cmd_lattice(graph, format)
        }
        Command::Graph(GraphCmd::CheckK { graph }) => cmd_check_k(graph, cli.format),
        Command::Ideal(IdealCmd::Leq { graph, pi1, pi2 }) => {
            let (carrier, p1, p2) = load_pair(graph, pi1, pi2)?;
            let below = p1.leq(&p2, &carrier)?;
            emit_bool("leq", below, cli.format)
        }
        Command::Ideal(IdealCmd::Meet { graph, pi1, pi2 }) => {
            let (carrier, p1, p2) = load_pair(graph, pi1, pi2)?;
            emit_pi(&p1.meet(&p2, &carrier)?, &carrier, cli.format)
        }
        Command::Ideal(IdealCmd::Join { graph, pi1, pi2 }) => {
            let (carrier, p1, p2) = load_pair(graph, pi1, pi2)?;
            match p1.join(&p2, &carrier) {
                Ok(join) => emit_pi(&join, &carrier, cli.format),
                // A join that fails its own postconditions is a failed
                // check, not bad input; surface it as such.
                Err(PiError::JoinUnsound(w)) => {
                    eprintln!("join check failed: {w}");
                    Ok(1)
                }
                Err(e) => Err(e.into()),
            }
        }
        Command::Ideal(IdealCmd::Member { graph, pi, monomial }) => {
            let g = load_graph(graph)?;
            let carrier = CarrierLattice::from_graph(&g)?;
            let p = read_json::<PiDoc>(pi)?.to_pi(&carrier)?;
            let m = read_json::<MonomialDoc>(monomial)?.to_monomial(&g, p.ring())?;
            let inside = p.monomial_in_ideal(&g, &carrier, &m)?;
            emit_bool("member", inside, cli.format)
        }
        Command::Rho(RhoCmd::Eval { graph, pi, lasso }) => {
            let g = load_graph(graph)?;
            let carrier = CarrierLattice::from_graph(&g)?;
            let p = read_json::<PiDoc>(pi)?.to_pi(&carrier)?;
            let x = read_json::<LassoDoc>(lasso)?.to_lasso(&g)?;
            let value = p.rho_eval(&g, &carrier, &x)?;
            match cli.format {
                Format::Json => println!(
                    "{}",
                    serde_json::to_string(&serde_json::json!({
                        "ideal": IdealDoc::from_ideal(&value)
                    }))?
                ),
                _ => println!("{}", value.render(p.ring())),
            }
            Ok(0)
        }
        Command::Gpd(GpdCmd::Verify { groupoid, ring }) => {
            verify::gpd_verify(groupoid, &parse_ring_arg(ring)?, cli.seed, cli.format == Format::Json)
        }
        Command::Oracle(OracleCmd::Compare { groupoid, ring }) => {
            verify::oracle_compare(groupoid, &parse_ring_arg(ring)?, cli.format == Format::Json)
        }
    }
}

/// Accepts a ring as inline JSON (starts with `{`) or as a file path.
fn parse_ring_arg(arg: &str) -> Result<RingSpec> {
    let doc: RingDoc = if arg.trim_start().starts_with('{') {
        serde_json::from_str(arg).map_err(|e| anyhow!("cannot parse inline ring spec: {e}"))?
    } else {
        read_json(Path::new(arg))?
    };
    doc.to_spec()
}

fn load_graph(path: &Path) -> Result<Graph> {
    read_json::<GraphDoc>(path)?.to_graph()
}

fn load_pair(
    graph: &Path,
    pi1: &Path,
    pi2: &Path,
) -> Result<(CarrierLattice, PiFunction, PiFunction)> {
    let g = load_graph(graph)?;
    let carrier = CarrierLattice::from_graph(&g)?;
    let p1 = read_json::<PiDoc>(pi1)?.to_pi(&carrier)?;
    let p2 = read_json::<PiDoc>(pi2)?.to_pi(&carrier)?;
    Ok((carrier, p1, p2))
}

fn emit_bool(key: &str, value: bool, format: Format) -> Result<u8> {
    match format {
        Format::Json => {
            println!("{}", serde_json::to_string(&serde_json::json!({ key: value }))?)
        }
        _ => println!("{value}"),
    }
    Ok(if value { 0 } else { 1 })
}

fn emit_pi(pi: &PiFunction, carrier: &CarrierLattice, format: Format) -> Result<u8> {
    match format {
        Format::Json => {
            println!("{}", serde_json::to_string(&PiDoc::from_pi(pi, carrier))?)
        }
        _ => {
            for i in 1..carrier.member_count() {
                println!("π({}) = {}", carrier.member_label(i), pi.value(i).render(pi.ring()));
            }
        }
    }
    Ok(0)
}

fn cmd_validate(file: &Path) -> Result<u8> {
    let value: serde_json::Value = read_json(file)?;
    let obj = value
        .as_object()
        .ok_or_else(|| anyhow!("expected a JSON object at the top level"))?;
    let reparse = value.clone();
    let (kind, detail) = if obj.contains_key("vertices") {
        let g = serde_json::from_value::<GraphDoc>(reparse)?.to_graph()?;
        if let Err(sources) = g.validate() {
            bail!("graph has source vertices: {}", sources.join(", "));
        }
        ("graph", format!("{} vertices, {} edges", g.vertex_count(), g.edge_count()))
    } else if obj.contains_key("units") {
        let g = serde_json::from_value::<GroupoidDoc>(reparse)?.to_groupoid()?;
        ("groupoid", format!("{} units, {} morphisms", g.unit_count(), g.morphism_count()))
    } else if obj.contains_key("entries") {
        let doc = serde_json::from_value::<PiDoc>(reparse)?;
        let spec = doc.ring.to_spec()?;
        for entry in &doc.entries {
            entry.ideal.to_ideal(&spec)?;
        }
        (
            "lattice function",
            format!(
                "ring {}, {} entries; membership is checked against a graph at use",
                spec,
                doc.entries.len()
            ),
        )
    } else if obj.contains_key("kind") {
        let spec = serde_json::from_value::<RingDoc>(reparse)?.to_spec()?;
        ("ring", format!("{spec}"))
    } else if obj.contains_key("coeff") {
        let m = serde_json::from_value::<MonomialDoc>(reparse)?;
        ("monomial", format!("coefficient {}, paths of length {}/{}", m.coeff, m.mu.len(), m.nu.len()))
    } else if obj.contains_key("stem") || obj.contains_key("cycle") {
        let x = serde_json::from_value::<LassoDoc>(reparse)?;
        ("lasso", format!("stem length {}, cycle length {}", x.stem.len(), x.cycle.len()))
    } else if obj.contains_key("gen") || obj.contains_key("factors") {
        serde_json::from_value::<IdealDoc>(reparse)?;
        ("ideal", "generators normalize against a ring at use".to_string())
    } else {
        bail!("unrecognized document: no identifying field found");
    };
    println!("ok: {kind} ({detail})");
    Ok(0)
}

fn cmd_lattice(path: &Path, format: Format) -> Result<u8> {
    let g = load_graph(path)?;
    let lattice = ShLattice::compute(&g)?;
    let labels: Vec<String> =
        lattice.members().iter().map(|&m| g.render_vertex_set(m)).collect();
    match format {
        Format::Dot => {
            let mut nodes = labels.clone();
            nodes.sort();
            let mut edges: Vec<String> = lattice
                .covers()
                .into_iter()
                .map(|(lo, hi)| format!("  \"{}\" -> \"{}\";", labels[lo], labels[hi]))
                .collect();
            edges.sort();
            println!("digraph sh_lattice {{");
            for n in &nodes {
                println!("  \"{n}\";");
            }
            for e in &edges {
                println!("{e}");
            }
            println!("}}");
        }
        Format::Json => {
            #[derive(Serialize)]
            struct LatticeOut {
                members: Vec<Vec<String>>,
                covers: Vec<(usize, usize)>,
            }
            let members = lattice
                .members()
                .iter()
                .map(|m| m.iter().map(|v| g.vertex_name(v).to_string()).collect())
                .collect();
            let mut covers = lattice.covers();
            covers.sort();
            println!("{}", serde_json::to_string(&LatticeOut { members, covers })?);
        }
        Format::Text => {
            println!("saturated hereditary sets: {}", labels.len());
            for l in &labels {
                println!("{l}");
            }
        }
    }
    Ok(0)
}

fn cmd_check_k(path: &Path, format: Format) -> Result<u8> {
    let g = load_graph(path)?;
    let witness = g.condition_k_violation();
    let holds = witness.is_none();
    match format {
        Format::Json => {
            let witness_name = witness.map(|v| g.vertex_name(v).to_string());
            println!(
                "{}",
                serde_json::to_string(&serde_json::json!({
                    "condition_k": holds,
                    "witness": witness_name,
                }))?
            );
        }
        _ => {
            println!("Condition (K): {holds}");
            if let Some(v) = witness {
                println!("vertex {} has exactly one return path", g.vertex_name(v));
            }
        }
    }
    Ok(if holds { 0 } else { 1 })
}
