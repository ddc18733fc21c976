//! `drset`: verify, solve and construct resolving-type sets, print the
//! coin-weighing bounds, build reduction gadgets and regenerate the tables.
//!
//! Exit status: 0 on success or a passing check, 1 when a check fails or a
//! budget-limited search is not proven optimal, 2 on usage or input errors.

mod tables;

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use drset::coinweigh::bounds_up_to;
use drset::families::{
    double_resolving_map, fold_resolving_map, folded_ddrs_even, folded_ddrs_odd,
    hamming_ddrs_constant, hamming_ddrs_levels, unfold_resolving_map,
};
use drset::gadget::{build_gadget, witness_set, ThreeDMInstance, Variant};
use drset::resolving::{
    check_ddrs, check_doubly_resolving, check_resolving, is_ddrs, is_resolving,
};
use drset::solver::{
    solve_beta, solve_phi, solve_phi_max, solve_psi, Objective, SolveOptions, SolveResult, Symmetry,
};
use drset::{Family, Graph, LandmarkSet, Metric, Verdict, VertexId};
use serde::Serialize;

#[derive(Parser)]
#[command(
    name = "drset",
    version,
    about = "Resolving, doubly resolving and doubly distance resolving sets"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check whether a vertex set is resolving, doubly resolving or doubly
    /// distance resolving.
    Verify(VerifyArgs),
    /// Compute β, Ψ or φ exactly.
    Solve(SolveArgs),
    /// Print the complex-based upper bounds on Ψ(Q_n) as CSV.
    Bounds {
        /// Largest n to report.
        #[arg(long)]
        upto: usize,
    },
    /// Run one of the explicit constructions and verify its output.
    Construct(ConstructArgs),
    /// Build the 3-dimensional-matching reduction graph.
    Gadget(GadgetArgs),
    /// Regenerate one of the result tables as CSV.
    Tables {
        /// Table number, 1 to 5.
        #[arg(long, value_parser = clap::value_parser!(u8).range(1..=5))]
        which: u8,
        /// Largest n solved exactly for tables 1 and 5; larger cells are
        /// reported as `skipped`.
        #[arg(long, default_value_t = 6)]
        limit: u32,
        #[arg(long)]
        threads: Option<usize>,
    },
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct Target {
    /// Edge-list file (`n m` header, one `u v` pair per line; `-` for stdin).
    #[arg(long)]
    graph: Option<PathBuf>,
    /// Family descriptor: `q<n>`, `f<n>` or `h<n>,<q>`.
    #[arg(long)]
    family: Option<Family>,
}

#[derive(Args)]
struct VerifyArgs {
    #[command(flatten)]
    target: Target,
    /// Comma-separated vertex ids.
    #[arg(long, value_parser = parse_set)]
    set: LandmarkSet,
    #[arg(long, value_enum)]
    kind: VerifyKind,
    /// Anchor vertex, required for `ddrs`.
    #[arg(long)]
    anchor: Option<VertexId>,
}

#[derive(Clone, Copy, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
enum VerifyKind {
    Resolving,
    Doubly,
    Ddrs,
}

#[derive(Args)]
struct SolveArgs {
    #[command(flatten)]
    target: Target,
    #[arg(long, value_enum)]
    objective: ObjectiveArg,
    /// Anchor for `phi`. Without it, `phi` is maximised over all anchors.
    #[arg(long)]
    anchor: Option<VertexId>,
    /// Stop after this many search nodes and report the best set found.
    #[arg(long)]
    budget: Option<u64>,
    /// Worker threads for the anchor sweep.
    #[arg(long)]
    threads: Option<usize>,
}

#[derive(Clone, Copy, ValueEnum)]
enum ObjectiveArg {
    Beta,
    Psi,
    Phi,
}

#[derive(Args)]
struct ConstructArgs {
    /// `f<n>` for the folded constructions and maps, `h<n>,<q>` for the
    /// Hamming ones; `q<n>` is also accepted by `unfold` and `double`.
    #[arg(long)]
    family: Family,
    #[arg(long, value_enum)]
    kind: ConstructKind,
    /// Resolving set fed to `fold`, `unfold` and `double`.
    #[arg(long, value_parser = parse_set)]
    input_set: Option<LandmarkSet>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ConstructKind {
    DdrsOdd,
    DdrsEven,
    HammingConst,
    HammingLevels,
    Fold,
    Unfold,
    Double,
}

#[derive(Args)]
struct GadgetArgs {
    /// Instance file: `n <int>`, then one `a b c` triple per line.
    #[arg(long = "3dm")]
    instance: PathBuf,
    #[arg(long, value_enum, default_value = "bipartite")]
    variant: VariantArg,
    /// Number of copies of the instance.
    #[arg(long, default_value_t = 1)]
    copies: usize,
    /// Triple indices of a perfect matching, used in every copy; the
    /// resulting witness set is verified.
    #[arg(long, value_parser = parse_set)]
    matching: Option<LandmarkSet>,
    /// What to print.
    #[arg(long, value_enum, default_value = "summary")]
    emit: Emit,
}

#[derive(Clone, Copy, ValueEnum)]
enum VariantArg {
    Split,
    Bipartite,
    Cobipartite,
}

impl From<VariantArg> for Variant {
    fn from(v: VariantArg) -> Self {
        match v {
            VariantArg::Split => Variant::Split,
            VariantArg::Bipartite => Variant::Bipartite,
            VariantArg::Cobipartite => Variant::Cobipartite,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Emit {
    /// JSON with sizes, thresholds and the witness check.
    Summary,
    /// The graph in edge-list format.
    Edges,
    /// `<id> <role>` lines.
    Roles,
}

fn parse_ids(s: &str) -> std::result::Result<Vec<usize>, String> {
    s.split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|t| t.parse().map_err(|_| format!("{t:?} is not a vertex id")))
        .collect()
}

fn parse_set(s: &str) -> std::result::Result<LandmarkSet, String> {
    LandmarkSet::new(parse_ids(s)?).map_err(|e| e.to_string())
}

/// Outcome of a command that completed without an input error.
enum Status {
    Ok,
    Failed,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(cli.command) {
        Ok(Status::Ok) => ExitCode::SUCCESS,
        Ok(Status::Failed) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn run(command: Command) -> Result<Status> {
    match command {
        Command::Verify(a) => verify(a),
        Command::Solve(a) => solve(a),
        Command::Bounds { upto } => {
            print!("{}", bounds_up_to(upto)?.to_csv());
            Ok(Status::Ok)
        }
        Command::Construct(a) => construct(a),
        Command::Gadget(a) => gadget(a),
        Command::Tables {
            which,
            limit,
            threads,
        } => {
            set_threads(threads)?;
            print!("{}", tables::render(which, limit)?);
            Ok(Status::Ok)
        }
    }
}

fn set_threads(threads: Option<usize>) -> Result<()> {
    if let Some(t) = threads {
        rayon::ThreadPoolBuilder::new()
            .num_threads(t)
            .build_global()
            .context("configuring the thread pool")?;
    }
    Ok(())
}

fn read_input(path: &Path) -> Result<String> {
    if path == Path::new("-") {
        std::io::read_to_string(std::io::stdin()).context("reading standard input")
    } else {
        std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
    }
}

/// A graph from either source, dispatched through [`Metric`].
enum Loaded {
    Graph(Graph),
    Family(Family),
}

impl Loaded {
    fn load(t: &Target) -> Result<Self> {
        match (&t.graph, t.family) {
            (Some(path), _) => Ok(Loaded::Graph(Graph::parse_edge_list(&read_input(path)?)?)),
            (None, Some(f)) => Ok(Loaded::Family(f)),
            (None, None) => bail!("one of --graph or --family is required"),
        }
    }

    fn metric(&self) -> &dyn MetricObj {
        match self {
            Loaded::Graph(g) => g,
            Loaded::Family(f) => f,
        }
    }

    fn symmetry(&self) -> Symmetry {
        match self {
            Loaded::Family(f) if f.is_vertex_transitive() => Symmetry::VertexTransitive,
            _ => Symmetry::General,
        }
    }
}

/// Object-safe bridge to the generic library entry points.
trait MetricObj {
    fn check(&self, kind: VerifyKind, anchor: Option<VertexId>, s: &LandmarkSet)
        -> Result<Verdict>;
    fn solve(
        &self,
        objective: ObjectiveArg,
        anchor: Option<VertexId>,
        sym: Symmetry,
        opts: SolveOptions,
    ) -> Result<SolveResult>;
}

impl<M: Metric> MetricObj for M {
    fn check(
        &self,
        kind: VerifyKind,
        anchor: Option<VertexId>,
        s: &LandmarkSet,
    ) -> Result<Verdict> {
        Ok(match kind {
            VerifyKind::Resolving => check_resolving(self, s)?,
            VerifyKind::Doubly => check_doubly_resolving(self, s)?,
            VerifyKind::Ddrs => {
                let a = anchor.context("--kind ddrs needs --anchor")?;
                check_ddrs(self, a, s)?
            }
        })
    }

    fn solve(
        &self,
        objective: ObjectiveArg,
        anchor: Option<VertexId>,
        sym: Symmetry,
        opts: SolveOptions,
    ) -> Result<SolveResult> {
        Ok(match (objective, anchor) {
            (ObjectiveArg::Beta, _) => solve_beta(self, opts)?,
            (ObjectiveArg::Psi, _) => solve_psi(self, sym, opts)?,
            (ObjectiveArg::Phi, Some(a)) => solve_phi(self, a, opts)?,
            (ObjectiveArg::Phi, None) => solve_phi_max(self, sym, opts)?.1,
        })
    }
}

#[derive(Serialize)]
struct VerifyReport {
    kind: VerifyKind,
    verdict: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    witness_pair: Option<(VertexId, VertexId)>,
}

fn print_json<T: Serialize>(value: &T) -> Result<()> {
    println!("{}", serde_json::to_string(value)?);
    Ok(())
}

fn verify(a: VerifyArgs) -> Result<Status> {
    if matches!(a.kind, VerifyKind::Ddrs) && a.anchor.is_none() {
        bail!("--kind ddrs needs --anchor");
    }
    let loaded = Loaded::load(&a.target)?;
    let verdict = loaded.metric().check(a.kind, a.anchor, &a.set)?;
    print_json(&VerifyReport {
        kind: a.kind,
        verdict: if verdict.passed() { "pass" } else { "fail" },
        witness_pair: verdict.witness(),
    })?;
    Ok(if verdict.passed() {
        Status::Ok
    } else {
        Status::Failed
    })
}

fn solve(a: SolveArgs) -> Result<Status> {
    set_threads(a.threads)?;
    let loaded = Loaded::load(&a.target)?;
    let opts = SolveOptions::with_budget(a.budget);
    let result = loaded
        .metric()
        .solve(a.objective, a.anchor, loaded.symmetry(), opts)?;
    debug_assert!(result.objective != Objective::Cover);
    print_json(&result)?;
    Ok(if result.optimal {
        Status::Ok
    } else {
        Status::Failed
    })
}

#[derive(Serialize)]
struct ConstructReport {
    /// Graph the output set lives in.
    graph: String,
    kind: &'static str,
    set: LandmarkSet,
    size: usize,
    /// Predicate the set was checked against.
    property: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    anchor: Option<VertexId>,
    verified: bool,
}

fn construct(a: ConstructArgs) -> Result<Status> {
    let fam = a.family;
    let n = fam.dimension();
    let input = || {
        a.input_set
            .as_ref()
            .context("this construction needs --input-set")
    };
    let need = |ok: bool, what: &str| -> Result<()> {
        if ok {
            Ok(())
        } else {
            bail!("--kind {what} does not apply to {fam}")
        }
    };
    let folded = matches!(fam, Family::Folded { .. });
    let hamming = matches!(fam, Family::Hamming { .. });
    let (graph, kind, set, property): (Family, _, LandmarkSet, _) = match a.kind {
        ConstructKind::DdrsOdd => {
            need(folded, "ddrs-odd")?;
            (fam, "ddrs-odd", folded_ddrs_odd(n)?, "ddrs")
        }
        ConstructKind::DdrsEven => {
            need(folded, "ddrs-even")?;
            (fam, "ddrs-even", folded_ddrs_even(n)?, "ddrs")
        }
        ConstructKind::HammingConst => {
            need(hamming, "hamming-const")?;
            (
                fam,
                "hamming-const",
                hamming_ddrs_constant(n, fam.alphabet())?,
                "ddrs",
            )
        }
        ConstructKind::HammingLevels => {
            need(hamming, "hamming-levels")?;
            (
                fam,
                "hamming-levels",
                hamming_ddrs_levels(n, fam.alphabet())?,
                "ddrs",
            )
        }
        ConstructKind::Fold => {
            need(folded, "fold")?;
            (
                Family::cube(n)?,
                "fold",
                fold_resolving_map(n, input()?)?,
                "resolving",
            )
        }
        ConstructKind::Unfold => {
            need(!hamming, "unfold")?;
            (
                Family::folded(n)?,
                "unfold",
                unfold_resolving_map(n, input()?)?,
                "resolving",
            )
        }
        ConstructKind::Double => {
            need(!hamming, "double")?;
            (
                Family::folded(n + 1)?,
                "double",
                double_resolving_map(n, input()?)?,
                "resolving",
            )
        }
    };
    let (verified, anchor) = if property == "ddrs" {
        (is_ddrs(&graph, 0, &set)?, Some(0))
    } else {
        (is_resolving(&graph, &set)?, None)
    };
    print_json(&ConstructReport {
        graph: graph.to_string(),
        kind,
        size: set.len(),
        set,
        property,
        anchor,
        verified,
    })?;
    Ok(if verified { Status::Ok } else { Status::Failed })
}

#[derive(Serialize)]
struct GadgetSummary {
    variant: String,
    copies: usize,
    vertices: usize,
    edges: usize,
    i_count: usize,
    j_count: usize,
    selectors: usize,
    thresholds: ThresholdReport,
    #[serde(skip_serializing_if = "Option::is_none")]
    witness: Option<WitnessReport>,
}

#[derive(Serialize)]
struct ThresholdReport {
    n_prime: usize,
    k: usize,
    gap: f64,
    witness_size: usize,
}

#[derive(Serialize)]
struct WitnessReport {
    set: LandmarkSet,
    size: usize,
    doubly_resolving: bool,
    hub_ddrs: bool,
}

fn gadget(a: GadgetArgs) -> Result<Status> {
    let inst = ThreeDMInstance::parse(&read_input(&a.instance)?)?;
    let g = build_gadget(&inst, a.variant.into(), a.copies)?;
    let witness = match &a.matching {
        None => None,
        Some(m) => {
            let w = witness_set(&g, &inst, &vec![m.as_slice().to_vec(); a.copies])?;
            let (anchor, hubs) = g.hub_ddrs();
            Some(WitnessReport {
                size: w.len(),
                doubly_resolving: drset::resolving::is_doubly_resolving(&g.graph, &w)?,
                hub_ddrs: is_ddrs(&g.graph, anchor, &hubs)?,
                set: w,
            })
        }
    };
    let passed = witness
        .as_ref()
        .is_none_or(|w| w.doubly_resolving && w.hub_ddrs);
    match a.emit {
        Emit::Edges => print!("{}", g.graph.to_edge_list_text()),
        Emit::Roles => print!("{}", g.role_map_text()),
        Emit::Summary => {
            let t = g.thresholds();
            print_json(&GadgetSummary {
                variant: g.variant.to_string(),
                copies: g.copies,
                vertices: g.graph.vertex_count(),
                edges: g.graph.edge_count(),
                i_count: g.i_count(),
                j_count: g.j_count(),
                selectors: g.selectors,
                thresholds: ThresholdReport {
                    n_prime: t.n_prime,
                    k: t.k,
                    gap: t.gap,
                    witness_size: t.witness_size,
                },
                witness,
            })?;
        }
    }
    Ok(if passed { Status::Ok } else { Status::Failed })
}
