//! `edgefix`: construct graphs, compute fixity reports and automorphism
//! groups, and run the threshold verification over catalogues and censuses.

mod input;

use std::fs;
use std::io::{self, BufWriter, Write};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use edgefix::families::{px_groups, PxGroups};
use edgefix::fixity::{fixity_report, max_edge_fpr, max_edge_fpr_by_class, FixitySummary};
use edgefix::graph::graph6;
use edgefix::scalar::fraction_string;
use edgefix::symmetry::{
    automorphism_group_with, automorphism_search, identify_px, transitivity_profile, Limits, PxIdentification,
};
use edgefix::verify::{catalogue, verify_entries, verify_graph, CatalogueEntry, Summary, VerificationRecord};
use edgefix::{BigFraction, BigInt, Error, Graph, Permutation, PermutationGroup};
use serde::Serialize;

#[derive(Parser)]
#[command(name = "edgefix", version, about = "Edge fixity of automorphisms of vertex-transitive graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print a family member as graph6 or JSON.
    Construct {
        /// px, split-px, k5, k55-5k2, q4, bch, petersen, heawood, prism, moebius, circulant, complete, cycle, hypercube, gp
        family: String,
        params: Vec<usize>,
        #[arg(long, value_enum, default_value_t = Format::Graph6)]
        format: Format,
    },
    /// One JSON line per non-identity automorphism (or conjugacy class).
    Fixity {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, value_enum, default_value_t = GroupChoice::Auto)]
        group: GroupChoice,
        /// One representative per conjugacy class.
        #[arg(long)]
        classes: bool,
    },
    /// Automorphism group order, generators and transitivity profile.
    Aut {
        #[command(flatten)]
        input: InputArgs,
    },
    /// Verify the threshold classification on the built-in catalogue or on graph6 files.
    VerifyTheorem {
        #[arg(long, value_parser = clap::value_parser!(u8).range(3..=4))]
        valency: u8,
        /// graph6 files; the built-in catalogue when absent.
        #[arg(long)]
        file: Vec<String>,
    },
    /// Verify every graph of a graph6 census file.
    Scan {
        #[arg(long)]
        file: String,
        #[arg(long, value_parser = clap::value_parser!(u8).range(3..=4))]
        valency: u8,
        #[arg(long, default_value_t = 0)]
        jobs: usize,
    },
}

#[derive(clap::Args)]
struct InputArgs {
    /// A graph6 string.
    #[arg(long)]
    g6: Option<String>,
    /// A file of graph6 lines.
    #[arg(long)]
    file: Option<String>,
    /// A family spec such as px(5,2) or split-px(3,1).
    #[arg(long)]
    build: Option<String>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Graph6,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum GroupChoice {
    Auto,
    #[value(name = "px-H")]
    PxH,
    #[value(name = "px-H+")]
    PxHPlus,
    #[value(name = "px-K")]
    PxK,
}

pub enum Failure {
    Usage(String),
    Decode(String),
    Cap(String),
    Other(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::CapExceeded { .. } | Error::SearchBudgetExceeded { .. } => Failure::Cap(e.to_string()),
            other => Failure::Other(other.to_string()),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Other(e.to_string())
    }
}

type Outcome = Result<ExitCode, Failure>;

fn emit<T: Serialize>(out: &mut impl Write, value: &T) -> Result<(), Failure> {
    let line = serde_json::to_string(value).map_err(|e| Failure::Other(e.to_string()))?;
    writeln!(out, "{line}")?;
    Ok(())
}

#[derive(Serialize)]
struct JsonGraph<'a> {
    vertices: usize,
    edges: &'a [(usize, usize)],
}

fn construct(family: &str, params: &[usize], format: Format) -> Outcome {
    let g = input::family(family, params)?;
    let mut out = io::stdout().lock();
    match format {
        Format::Graph6 => writeln!(out, "{}", graph6::encode(&g))?,
        Format::Json => emit(&mut out, &JsonGraph { vertices: g.order(), edges: g.edges() })?,
    }
    Ok(ExitCode::SUCCESS)
}

/// Carries automorphisms of `C(r, s)` to the input graph along an
/// isomorphism `map: input -> C(r, s)`.
fn pull_back(group: &PermutationGroup, map: &[usize]) -> Result<PermutationGroup, Failure> {
    let inverse = Permutation::from_images(map.to_vec())?.inverse();
    let generators = group
        .generators()
        .iter()
        .map(|a| Permutation::from_images(map.iter().map(|&y| inverse.apply(a.apply(y))).collect()))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(PermutationGroup::new(map.len(), generators)?.with_cap(group.cap()))
}

fn choose_group(g: &Graph, choice: GroupChoice, limits: &Limits) -> Result<PermutationGroup, Failure> {
    if let GroupChoice::Auto = choice {
        return Ok(automorphism_group_with(g, limits)?);
    }
    let PxIdentification::Found { r, s, isomorphism } = identify_px(g, limits)? else {
        return Err(Failure::Usage("--group px-* needs a graph isomorphic to some C(r, s)".into()));
    };
    let PxGroups { k, h_plus, h } = px_groups(r, s)?;
    let chosen = match choice {
        GroupChoice::PxK => k,
        GroupChoice::PxHPlus => h_plus,
        _ => h,
    };
    pull_back(&chosen.with_cap(limits.enumeration_cap), &isomorphism)
}

#[derive(Serialize)]
struct ElementLine<'a> {
    graph: &'a str,
    #[serde(flatten)]
    report: FixitySummary,
    class_size: Option<usize>,
}

#[derive(Serialize)]
struct MaxLine<'a> {
    graph: &'a str,
    group_order: usize,
    max_edge_fpr: String,
    witness: usize,
    witness_cycle_type: String,
}

fn fixity(args: &InputArgs, choice: GroupChoice, classes: bool, limits: &Limits) -> Outcome {
    let graphs = input::read_graphs(args.g6.as_deref(), args.file.as_deref(), args.build.as_deref())?;
    let mut out = BufWriter::new(io::stdout().lock());
    for item in &graphs {
        let g = &item.graph;
        let group = choose_group(g, choice, limits)?;
        let elements = group.elements()?;
        let chosen: Vec<(usize, Option<usize>)> = if classes {
            group.conjugacy_classes()?.iter().map(|c| (c[0], Some(c.len()))).collect()
        } else {
            (0..elements.len()).map(|i| (i, None)).collect()
        };
        for (i, class_size) in chosen {
            let p = &elements[i];
            if p.is_identity() {
                continue;
            }
            let report = fixity_report::<BigInt>(g, p, i)?;
            emit(&mut out, &ElementLine { graph: &item.id, report: report.summary(p), class_size })?;
        }
        if elements.len() > 1 && g.size() > 0 {
            let best = if classes { max_edge_fpr_by_class(g, &group)? } else { max_edge_fpr(g, &group)? };
            let ratio: BigFraction = best.ratio;
            emit(
                &mut out,
                &MaxLine {
                    graph: &item.id,
                    group_order: elements.len(),
                    max_edge_fpr: fraction_string(&ratio),
                    witness: best.witness_index,
                    witness_cycle_type: best.witness.cycle_type_string(),
                },
            )?;
        }
    }
    out.flush()?;
    Ok(ExitCode::SUCCESS)
}

#[derive(Serialize)]
struct AutLine<'a> {
    graph: &'a str,
    vertices: usize,
    edges: usize,
    order: String,
    orbit_lengths: Vec<usize>,
    generators: Vec<String>,
    profile: Option<edgefix::symmetry::TransitivityProfile>,
}

fn aut(args: &InputArgs, limits: &Limits) -> Outcome {
    let graphs = input::read_graphs(args.g6.as_deref(), args.file.as_deref(), args.build.as_deref())?;
    let mut out = BufWriter::new(io::stdout().lock());
    for item in &graphs {
        let g = &item.graph;
        let found = automorphism_search(g, limits)?;
        let profile = if found.order() <= limits.enumeration_cap as u128 {
            let group = automorphism_group_with(g, limits)?;
            Some(transitivity_profile(g, &group)?)
        } else {
            None
        };
        let line = AutLine {
            graph: &item.id,
            vertices: g.order(),
            edges: g.size(),
            order: found.order().to_string(),
            orbit_lengths: found.orbit_lengths.clone(),
            generators: found.generators.iter().map(ToString::to_string).collect(),
            profile,
        };
        emit(&mut out, &line)?;
    }
    out.flush()?;
    Ok(ExitCode::SUCCESS)
}

fn finish(records: &[VerificationRecord]) -> Outcome {
    let mut out = BufWriter::new(io::stdout().lock());
    for r in records {
        emit(&mut out, r)?;
    }
    out.flush()?;
    let summary = Summary::of(records);
    let line = serde_json::to_string(&summary).map_err(|e| Failure::Other(e.to_string()))?;
    eprintln!("{line}");
    Ok(if summary.counterexamples > 0 { ExitCode::from(1) } else { ExitCode::SUCCESS })
}

/// Decodes a census file; malformed lines become error records in place.
fn census(path: &str, valency: usize, limits: &Limits) -> Result<Vec<VerificationRecord>, Failure> {
    let text = fs::read_to_string(path).map_err(|e| Failure::Decode(format!("{path}: {e}")))?;
    let lines = graph6::decode_lines(&text);
    use rayon::prelude::*;
    Ok(lines
        .par_iter()
        .map(|(line, r)| {
            let id = format!("line {line}");
            match r {
                Ok(g) => verify_graph(&id, path, g, valency, limits),
                Err(e) => VerificationRecord::input_error(&id, path, format!("graph6: {e}")),
            }
        })
        .collect())
}

fn verify_theorem(valency: usize, files: &[String], limits: &Limits) -> Outcome {
    let records = if files.is_empty() {
        let entries: Vec<CatalogueEntry> = catalogue(valency)?;
        verify_entries(&entries, valency, "catalogue", limits)
    } else {
        let mut all = Vec::new();
        for f in files {
            all.extend(census(f, valency, limits)?);
        }
        all
    };
    finish(&records)
}

fn scan(path: &str, valency: usize, jobs: usize, limits: &Limits) -> Outcome {
    let pool = rayon::ThreadPoolBuilder::new().num_threads(jobs).build().map_err(|e| Failure::Other(e.to_string()))?;
    let records = pool.install(|| census(path, valency, limits))?;
    finish(&records)
}

fn run(cli: Cli) -> Outcome {
    let limits = Limits::from_env();
    match cli.command {
        Command::Construct { family, params, format } => construct(&family, &params, format),
        Command::Fixity { input, group, classes } => fixity(&input, group, classes, &limits),
        Command::Aut { input } => aut(&input, &limits),
        Command::VerifyTheorem { valency, file } => verify_theorem(valency as usize, &file, &limits),
        Command::Scan { file, valency, jobs } => scan(&file, valency as usize, jobs, &limits),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(failure) => {
            let (code, message) = match failure {
                Failure::Usage(m) | Failure::Other(m) => (2, m),
                Failure::Decode(m) => (3, m),
                Failure::Cap(m) => (4, m),
            };
            eprintln!("edgefix: {message}");
            ExitCode::from(code)
        }
    }
}
