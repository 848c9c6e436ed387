use std::fmt;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use graceful_core::equivalence::{lift_to_spike, project_to_contree};
use graceful_core::lobster::label_lobster_traced;
use graceful_core::search::{
    enumerate_report, explore_case2b, hunt_generalized_perms, sweep_anchor_paths, Caps, Family, HuntScope,
    HuntStrategy, SearchConfig, SearchError, SearchReport,
};
use graceful_core::{
    contract_matching, end_edge_perfect_matching, is_graceful, is_strongly_graceful, parse_tree, perfect_matching,
    spike, to_dot, Labelling, Matching, Tree,
};

#[derive(Parser)]
#[command(name = "graceful", version, about = "Graceful and strongly graceful tree labellings")]
struct Cli {
    /// Suppress informational output.
    #[arg(long, global = true)]
    quiet: bool,
    /// Directory for output files.
    #[arg(long, global = true, value_name = "DIR")]
    out: Option<PathBuf>,
    /// Replace every search size cap with this value.
    #[arg(long, global = true, value_name = "CAP")]
    max_n: Option<usize>,
    /// Worker threads for searches (0 = one per CPU).
    #[arg(long, global = true, default_value_t = 0)]
    workers: usize,
    /// Record elapsed time in search reports.
    #[arg(long, global = true)]
    timing: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check a labelling of a tree.
    Verify {
        tree: PathBuf,
        labelling: PathBuf,
        #[arg(long)]
        matching: Option<PathBuf>,
        /// Check strong gracefulness instead of gracefulness.
        #[arg(long)]
        strong: bool,
    },
    /// Label a lobster whose end edges form a perfect matching.
    Label { tree: PathBuf },
    /// Tree constructions.
    #[command(subcommand)]
    Transform(Transform),
    /// Exhaustive searches.
    #[command(subcommand)]
    Search(Search),
    /// Write a tree as a Graphviz document.
    ExportDot {
        tree: PathBuf,
        #[arg(long)]
        labelling: Option<PathBuf>,
        #[arg(long)]
        matching: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum Transform {
    /// Attach a pendant vertex to every vertex.
    Spike { tree: PathBuf },
    /// Contract every edge of a perfect matching.
    Contract { tree: PathBuf, matching: PathBuf },
    /// Turn a graceful labelling into a strongly graceful labelling of the spike tree.
    Lift { tree: PathBuf, labelling: PathBuf },
    /// Turn a strongly graceful labelling into a graceful labelling of the contree.
    Project { tree: PathBuf, matching: PathBuf, labelling: PathBuf },
}

#[derive(Subcommand)]
enum Search {
    /// List the trees on n vertices, optionally restricted to a family.
    Enumerate {
        n: usize,
        #[arg(long)]
        family: Option<String>,
    },
    /// Find every label permutation preserving strong gracefulness.
    HuntPerms {
        n: usize,
        #[command(flatten)]
        scope: HuntArgs,
        #[arg(long, value_enum, default_value_t = StrategyArg::Auto)]
        strategy: StrategyArg,
    },
    /// Classify 3-distant trees with matched end edges and check for the four anchored labellings.
    ExploreCase2b { n_max: usize },
    /// Check where labels 0, n-1, 1, n-2 sit in every strongly graceful labelling.
    VerifyAnchors { n_max: usize },
}

#[derive(Args)]
struct HuntArgs {
    /// Family of instances (default any-pm).
    #[arg(long, conflicts_with = "tree")]
    family: Option<String>,
    /// A single tree; its perfect matching is used.
    #[arg(long)]
    tree: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum StrategyArg {
    Auto,
    Exhaustive,
    PairPreserving,
}

/// Exit status 1: the property does not hold or a domain precondition fails.
/// Exit status 2: an input could not be read or parsed.
enum Failure {
    Domain(String),
    Input(String),
}

impl Failure {
    fn domain(e: impl fmt::Display) -> Self {
        Failure::Domain(e.to_string())
    }
}

impl From<SearchError> for Failure {
    fn from(e: SearchError) -> Self {
        Failure::Domain(e.to_string())
    }
}

type Outcome = Result<(), Failure>;

struct Ctx {
    quiet: bool,
    out: Option<PathBuf>,
    config: SearchConfig,
}

impl Ctx {
    fn say(&self, text: &str) {
        if !self.quiet {
            print!("{text}");
        }
    }

    fn out_dir(&self) -> Result<PathBuf, Failure> {
        let dir = self.out.clone().unwrap_or_else(|| PathBuf::from("."));
        fs::create_dir_all(&dir).map_err(|e| Failure::Input(format!("{}: {e}", dir.display())))?;
        Ok(dir)
    }

    fn write(&self, name: &str, contents: &str) -> Outcome {
        let path = self.out_dir()?.join(name);
        fs::write(&path, contents).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
        self.say(&format!("wrote {}\n", path.display()));
        Ok(())
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn read_tree(path: &Path) -> Result<Tree, Failure> {
    parse_tree(&read(path)?).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn read_labelling(path: &Path) -> Result<Labelling, Failure> {
    Labelling::parse(&read(path)?).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn read_matching(path: &Path, tree: &Tree) -> Result<Matching, Failure> {
    Matching::parse(&read(path)?, tree).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn parse_family(name: &str) -> Result<Family, Failure> {
    name.parse().map_err(|e: SearchError| Failure::Input(e.to_string()))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut caps = Caps::default();
    if let Some(cap) = cli.max_n {
        caps = Caps {
            free_trees: cap,
            graceful: cap,
            strong: cap,
            hunt_exhaustive: cap,
            hunt_structured: cap,
            anchor_sweep: cap,
            case2b: cap,
        };
    }
    let ctx =
        Ctx { quiet: cli.quiet, out: cli.out, config: SearchConfig { caps, workers: cli.workers, timing: cli.timing } };
    let outcome = match cli.command {
        Command::Verify { tree, labelling, matching, strong } => {
            verify(&ctx, &tree, &labelling, matching.as_deref(), strong)
        }
        Command::Label { tree } => label(&ctx, &tree),
        Command::Transform(t) => transform(&ctx, t),
        Command::Search(s) => search(&ctx, s),
        Command::ExportDot { tree, labelling, matching } => {
            export_dot(&ctx, &tree, labelling.as_deref(), matching.as_deref())
        }
    };
    match outcome {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Domain(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn verify(ctx: &Ctx, tree: &Path, labelling: &Path, matching: Option<&Path>, strong: bool) -> Outcome {
    let t = read_tree(tree)?;
    let f = read_labelling(labelling)?;
    if f.len() != t.n() {
        return Err(Failure::Input(format!("labelling has {} vertices, tree has {}", f.len(), t.n())));
    }
    let m = match matching {
        Some(p) => Some(read_matching(p, &t)?),
        None if strong => {
            Some(perfect_matching(&t).ok_or_else(|| Failure::Domain("tree has no perfect matching".into()))?)
        }
        None => None,
    };
    let mut text = String::new();
    let mut seen = vec![None; t.n()];
    let mut duplicates = Vec::new();
    for &(u, v) in t.edges() {
        let d = f.get(u).abs_diff(f.get(v));
        text.push_str(&format!("edge {u} {v} label {d}\n"));
        match seen[d] {
            Some((a, b)) => duplicates.push(format!("edge label {d} on {a}-{b} and {u}-{v}")),
            None => seen[d] = Some((u, v)),
        }
    }
    if let Some(m) = &m {
        for &(u, v) in m.pairs() {
            text.push_str(&format!("matched {u} {v} sum {}\n", f.get(u) + f.get(v)));
        }
    }
    for d in &duplicates {
        text.push_str(&format!("duplicate {d}\n"));
    }
    let holds = match (&m, strong) {
        (Some(m), true) => is_strongly_graceful(&t, m, &f).map_err(Failure::domain)?,
        _ => is_graceful(&t, &f),
    };
    let property = if strong { "strongly graceful" } else { "graceful" };
    text.push_str(&format!("verdict {}{property}\n", if holds { "" } else { "not " }));
    ctx.say(&text);
    if holds {
        Ok(())
    } else {
        Err(Failure::Domain(format!("labelling is not {property}")))
    }
}

fn label(ctx: &Ctx, tree: &Path) -> Outcome {
    let t = read_tree(tree)?;
    let traced = label_lobster_traced(&t).map_err(Failure::domain)?;
    let quad = &traced.quad;
    for (name, f) in quad.members() {
        ctx.write(&format!("{name}.lab"), &f.to_text())?;
    }
    let m = end_edge_perfect_matching(&t).expect("labeller checked the matching");
    ctx.write("matching.txt", &m.to_text())?;
    let [v0, v1, v2, u2] = quad.anchors();
    let cases: Vec<String> = traced.cases.iter().map(ToString::to_string).collect();
    let spine: Vec<String> = traced.spine.vertices().iter().map(ToString::to_string).collect();
    let summary = format!(
        "v0 {v0}\nv1 {v1}\nv2 {v2}\nu2 {u2}\nspine {}\nreversed {}\ncases {}\n",
        spine.join(","),
        traced.reversed,
        if cases.is_empty() { "-".to_string() } else { cases.join(",") }
    );
    ctx.write("anchors.txt", &summary)
}

fn transform(ctx: &Ctx, op: Transform) -> Outcome {
    match op {
        Transform::Spike { tree } => {
            let s = spike(&read_tree(&tree)?);
            ctx.write("spike.tree", &s.tree.to_edge_list())?;
            ctx.write("spike.match", &s.matching.to_text())
        }
        Transform::Contract { tree, matching } => {
            let t = read_tree(&tree)?;
            let m = read_matching(&matching, &t)?;
            let c = contract_matching(&t, &m).map_err(Failure::domain)?;
            ctx.write("contree.tree", &c.tree.to_edge_list())
        }
        Transform::Lift { tree, labelling } => {
            let t = read_tree(&tree)?;
            let f = read_labelling(&labelling)?;
            let lifted = lift_to_spike(&t, &f).map_err(Failure::domain)?;
            ctx.write("lift.tree", &lifted.tree.to_edge_list())?;
            ctx.write("lift.match", &lifted.matching.to_text())?;
            ctx.write("lift.lab", &lifted.labelling.to_text())
        }
        Transform::Project { tree, matching, labelling } => {
            let t = read_tree(&tree)?;
            let m = read_matching(&matching, &t)?;
            let g = read_labelling(&labelling)?;
            let p = project_to_contree(&t, &m, &g).map_err(Failure::domain)?;
            ctx.write("project.tree", &p.tree.to_edge_list())?;
            ctx.write("project.lab", &p.labelling.to_text())
        }
    }
}

fn search(ctx: &Ctx, op: Search) -> Outcome {
    let config = &ctx.config;
    let (stem, report) = match op {
        Search::Enumerate { n, family } => {
            let family = family.as_deref().map(parse_family).transpose()?;
            (format!("enumerate-n{n}"), enumerate_report(n, family, &config.caps)?)
        }
        Search::HuntPerms { n, scope, strategy } => {
            let scope = match (scope.tree, scope.family) {
                (Some(path), _) => {
                    let tree = read_tree(&path)?;
                    let matching = perfect_matching(&tree)
                        .ok_or_else(|| Failure::Domain("tree has no perfect matching".into()))?;
                    HuntScope::Single { tree, matching }
                }
                (None, family) => HuntScope::Family(parse_family(family.as_deref().unwrap_or("any-pm"))?),
            };
            let strategy = match strategy {
                StrategyArg::Auto => HuntStrategy::Auto,
                StrategyArg::Exhaustive => HuntStrategy::Exhaustive,
                StrategyArg::PairPreserving => HuntStrategy::PairPreserving,
            };
            (format!("hunt-perms-n{n}"), hunt_generalized_perms(n, &scope, strategy, config)?)
        }
        Search::ExploreCase2b { n_max } => (format!("explore-case2b-n{n_max}"), explore_case2b(n_max, config)?),
        Search::VerifyAnchors { n_max } => (format!("verify-anchors-n{n_max}"), sweep_anchor_paths(n_max, config)?),
    };
    emit_report(ctx, &stem, &report)
}

fn emit_report(ctx: &Ctx, stem: &str, report: &SearchReport) -> Outcome {
    if ctx.out.is_some() {
        ctx.write(&format!("{stem}.txt"), &report.to_text())?;
        ctx.write(&format!("{stem}.json"), &report.to_json())
    } else {
        ctx.say(&report.to_text());
        Ok(())
    }
}

fn export_dot(ctx: &Ctx, tree: &Path, labelling: Option<&Path>, matching: Option<&Path>) -> Outcome {
    let t = read_tree(tree)?;
    let f = labelling.map(read_labelling).transpose()?;
    let m = matching.map(|p| read_matching(p, &t)).transpose()?;
    let dot = to_dot(&t, f.as_ref(), m.as_ref()).map_err(|e| Failure::Input(e.to_string()))?;
    if ctx.out.is_some() {
        ctx.write("tree.dot", &dot)
    } else {
        print!("{dot}");
        Ok(())
    }
}
