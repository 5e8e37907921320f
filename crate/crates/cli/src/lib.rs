//! `unidist`: canonical decomposition, unigraph recognition and
//! distinguishing numbers from the command line.
//!
//! Exit codes: 0 success, 1 not a unigraph, 2 parse or validation error,
//! 3 oracle cap exceeded, 4 internal error.

pub mod parse;

use std::io::{Read, Write};
use std::time::{Duration, Instant};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use unigraph::decompose::{decompose, decompose_compact, Component};
use unigraph::degseq::{DegreeRun, DegreeSequence, RelativeTag};
use unigraph::dist::{classify_component, find_dist_unigraph, ClassifiedComponent, UnigraphKind};
use unigraph::family::realize;
use unigraph::graph::Graph;
use unigraph::oracle::Oracle;
use unigraph::random::{random_threshold, random_threshold_sequence, random_unigraph};
use unigraph::Error;

pub use parse::{parse_degree_sequence_text, parse_edge_list, ParseError, ParsedSequence};

const STACK_NOTE: &str = "leftmost first, i.e. bottom-to-top of the peeling stack";

#[derive(Debug, Parser)]
#[command(name = "unidist", version, about = "Unigraph decomposition and distinguishing numbers")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    /// Seed for random generators.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Largest vertex count (and color count) the oracle accepts.
    #[arg(long, global = true, default_value_t = 10, value_parser = clap::value_parser!(u64).range(1..))]
    pub cap: u64,
}

#[derive(Debug, Clone, Args)]
#[group(required = true, multiple = false)]
pub struct Input {
    /// Abbreviated degree sequence, e.g. "16^3,12^4,9^5" or "4^3;2,1^4".
    #[arg(long)]
    pub degseq: Option<String>,
    /// Edge-list file, or `-` for stdin.
    #[arg(long)]
    pub edges: Option<String>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Distinguishing number of a unigraph.
    Dist {
        #[command(flatten)]
        input: Input,
    },
    /// Canonical and compact canonical decomposition.
    Decompose {
        #[command(flatten)]
        input: Input,
        /// Print only the compact decomposition.
        #[arg(long)]
        compact: bool,
    },
    /// Family, relative and distinguishing number of every compact component.
    Classify {
        #[command(flatten)]
        input: Input,
    },
    /// Print a family member as an edge list.
    ///
    /// Families: c5, mk2 M, u2 M L, u3 M, s P Q, s2 P:Q..., s3 P Q1 Q2,
    /// s4 P Q, complete N, empty N, random-unigraph, threshold N.
    Gen {
        family: String,
        params: Vec<String>,
        #[arg(long, default_value = "identity")]
        relative: RelativeTag,
        /// Component budget for random-unigraph.
        #[arg(long, default_value_t = 3)]
        components: usize,
        /// Vertex budget for random-unigraph.
        #[arg(long, default_value_t = 9)]
        size: u64,
    },
    /// Brute-force checks on small graphs.
    Oracle {
        action: OracleAction,
        #[command(flatten)]
        input: Input,
        /// Color count for `count`.
        #[arg(long)]
        colors: Option<u64>,
        /// Second edge-list file for `iso`.
        #[arg(long)]
        other: Option<String>,
        /// List every automorphism for `aut`.
        #[arg(long)]
        list: bool,
    },
    /// Time decomposition plus distinguishing number on random threshold
    /// sequences.
    Bench {
        #[arg(long, value_delimiter = ',', default_values_t = [100_000usize, 200_000, 400_000, 800_000])]
        sizes: Vec<usize>,
        #[arg(long, default_value_t = 3)]
        repeats: usize,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OracleAction {
    Aut,
    Dist,
    Count,
    Split,
    Iso,
}

#[derive(Debug)]
enum Failure {
    Usage(String),
    NotUnigraph,
    TooLarge(String),
    Internal(String),
}

impl Failure {
    fn code(&self) -> i32 {
        match self {
            Failure::NotUnigraph => 1,
            Failure::Usage(_) => 2,
            Failure::TooLarge(_) => 3,
            Failure::Internal(_) => 4,
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::NotUnigraph | Error::NotThreshold => Failure::NotUnigraph,
            Error::InvalidInput(m) => Failure::Usage(m),
            Error::TooLarge { .. } => Failure::TooLarge(e.to_string()),
            Error::Internal(m) => Failure::Internal(m),
        }
    }
}

impl From<ParseError> for Failure {
    fn from(e: ParseError) -> Self {
        Failure::Usage(e.to_string())
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

struct Ctx<'a> {
    json: bool,
    seed: u64,
    cap: u64,
    stdin: &'a mut dyn Read,
    out: &'a mut dyn Write,
    err: &'a mut dyn Write,
}

enum Loaded {
    Sequence(ParsedSequence),
    Graph(Graph),
}

impl Ctx<'_> {
    fn read_text(&mut self, path: &str) -> Result<String, Failure> {
        if path == "-" {
            let mut s = String::new();
            self.stdin.read_to_string(&mut s)?;
            Ok(s)
        } else {
            std::fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{path}: {e}")))
        }
    }

    fn load(&mut self, input: &Input) -> Result<Loaded, Failure> {
        match (&input.degseq, &input.edges) {
            (Some(s), _) => Ok(Loaded::Sequence(parse_degree_sequence_text(s)?)),
            (None, Some(path)) => {
                let text = self.read_text(path)?;
                Ok(Loaded::Graph(parse_edge_list(&text)?))
            }
            (None, None) => Err(Failure::Usage("an input is required".into())),
        }
    }

    fn sequence(&mut self, input: &Input) -> Result<DegreeSequence, Failure> {
        let seq = match self.load(input)? {
            Loaded::Sequence(p) => p.flat(),
            Loaded::Graph(g) => g.degree_sequence(),
        };
        if !seq.is_graphical() {
            return Err(Failure::Usage(format!("{seq} is not graphical")));
        }
        Ok(seq)
    }

    fn graph(&mut self, input: &Input) -> Result<Graph, Failure> {
        match self.load(input)? {
            Loaded::Graph(g) => Ok(g),
            Loaded::Sequence(p) => {
                let seq = p.flat();
                if seq.vertex_count() > self.cap {
                    return Err(Error::TooLarge { n: seq.vertex_count() as usize, cap: self.cap as usize }.into());
                }
                Ok(Graph::realize(&seq)?)
            }
        }
    }
}

fn runs_json(runs: &[DegreeRun]) -> Value {
    Value::Array(runs.iter().map(|r| json!([r.degree, r.count])).collect())
}

fn component_json(component: &Component, class: Option<&ClassifiedComponent>) -> Value {
    let (k_part, s_part, paired) = match component {
        Component::Split(p) => (runs_json(p.k_part()), runs_json(p.s_part()), true),
        Component::Tail(s) => (runs_json(s.runs()), json!([]), false),
    };
    json!({
        "kind": class.map(|c| c.kind.to_string()),
        "relative": class.map(|c| c.relative.as_str()),
        "k_part": k_part,
        "s_part": s_part,
        "paired": paired,
        "dist": class.map(|c| c.dist),
    })
}

fn components_json(components: &[Component]) -> Vec<Value> {
    components.iter().map(|c| component_json(c, classify_component(c).ok().as_ref())).collect()
}

fn write_json(ctx: &mut Ctx, value: &Value) -> Result<(), Failure> {
    writeln!(ctx.out, "{}", serde_json::to_string(value).expect("serializable"))?;
    Ok(())
}

fn cmd_dist(ctx: &mut Ctx, input: &Input) -> Result<(), Failure> {
    let seq = ctx.sequence(input)?;
    match find_dist_unigraph(&seq) {
        Ok(report) if ctx.json => write_json(ctx, &json!({ "dist": report.dist, "unigraph": true })),
        Ok(report) => Ok(writeln!(ctx.out, "{}", report.dist)?),
        Err(Error::NotUnigraph) => {
            if ctx.json {
                write_json(ctx, &json!({ "dist": null, "unigraph": false }))?;
            }
            Err(Failure::NotUnigraph)
        }
        Err(e) => Err(e.into()),
    }
}

fn cmd_decompose(ctx: &mut Ctx, input: &Input, compact_only: bool) -> Result<(), Failure> {
    let seq = ctx.sequence(input)?;
    let canonical = decompose(&seq);
    let compact = decompose_compact(&canonical);
    let dist = match find_dist_unigraph(&seq) {
        Ok(r) => Some(r.dist),
        Err(Error::NotUnigraph) => None,
        Err(e) => return Err(e.into()),
    };
    if ctx.json {
        let primary = if compact_only { &compact } else { &canonical };
        let components = components_json(primary.components());
        let mut value = json!({ "components": components, "dist": dist, "unigraph": dist.is_some() });
        if !compact_only {
            value["compact_components"] = Value::Array(components_json(compact.components()));
        }
        return write_json(ctx, &value);
    }
    let mut lists = vec![("compact components", &compact)];
    if !compact_only {
        lists.insert(0, ("canonical components", &canonical));
    }
    for (title, result) in lists {
        writeln!(ctx.out, "{title} ({STACK_NOTE}):")?;
        for c in result.components() {
            writeln!(ctx.out, "  {c}")?;
        }
    }
    match dist {
        Some(d) => writeln!(ctx.out, "dist {d}")?,
        None => writeln!(ctx.out, "dist: not a unigraph")?,
    }
    Ok(())
}

fn cmd_classify(ctx: &mut Ctx, input: &Input) -> Result<(), Failure> {
    let seq = ctx.sequence(input)?;
    let compact = decompose_compact(&decompose(&seq));
    let classes: Vec<Option<ClassifiedComponent>> =
        compact.components().iter().map(|c| classify_component(c).ok()).collect();
    let unigraph = classes.iter().all(Option::is_some);
    let dist = unigraph.then(|| classes.iter().flatten().map(|c| c.dist).max().unwrap_or(1));
    if ctx.json {
        let components: Vec<Value> =
            compact.components().iter().zip(&classes).map(|(c, k)| component_json(c, k.as_ref())).collect();
        write_json(ctx, &json!({ "components": components, "dist": dist, "unigraph": unigraph }))?;
    } else {
        let rows: Vec<[String; 4]> = compact
            .components()
            .iter()
            .zip(&classes)
            .map(|(c, k)| match k {
                Some(k) => [c.to_string(), k.kind.to_string(), k.relative.to_string(), k.dist.to_string()],
                None => [c.to_string(), "unrecognized".into(), "-".into(), "-".into()],
            })
            .collect();
        let header = ["component".to_string(), "kind".into(), "relative".into(), "D".into()];
        let mut widths = [0usize; 4];
        for row in std::iter::once(&header).chain(&rows) {
            for (w, cell) in widths.iter_mut().zip(row) {
                *w = (*w).max(cell.chars().count());
            }
        }
        writeln!(ctx.out, "# compact components, {STACK_NOTE}")?;
        for row in std::iter::once(&header).chain(&rows) {
            let line = format!(
                "{:w0$}  {:w1$}  {:w2$}  {}",
                row[0],
                row[1],
                row[2],
                row[3],
                w0 = widths[0],
                w1 = widths[1],
                w2 = widths[2]
            );
            writeln!(ctx.out, "{}", line.trim_end())?;
        }
        match dist {
            Some(d) => writeln!(ctx.out, "dist {d}")?,
            None => writeln!(ctx.out, "dist: not a unigraph")?,
        }
    }
    if unigraph {
        Ok(())
    } else {
        Err(Failure::NotUnigraph)
    }
}

fn numbers(params: &[String], expected: usize, family: &str) -> Result<Vec<u64>, Failure> {
    if params.len() != expected {
        return Err(Failure::Usage(format!("{family} takes {expected} parameter(s), got {}", params.len())));
    }
    params
        .iter()
        .map(|p| p.parse().map_err(|_| Failure::Usage(format!("`{p}` is not a non-negative integer"))))
        .collect()
}

fn family_kind(family: &str, params: &[String]) -> Result<UnigraphKind, Failure> {
    use UnigraphKind::*;
    let kind = match family {
        "c5" => {
            numbers(params, 0, family)?;
            C5
        }
        "mk2" => MK2 { m: numbers(params, 1, family)?[0] },
        "u2" => {
            let v = numbers(params, 2, family)?;
            U2 { m: v[0], l: v[1] }
        }
        "u3" => U3 { m: numbers(params, 1, family)?[0] },
        "s" => {
            let v = numbers(params, 2, family)?;
            S { p: v[0], q: v[1] }
        }
        "s2" => {
            let pairs = params
                .iter()
                .map(|p| {
                    let parsed = p.split_once(':').and_then(|(a, b)| Some((a.parse().ok()?, b.parse().ok()?)));
                    parsed.ok_or_else(|| Failure::Usage(format!("`{p}` is not a P:Q pair")))
                })
                .collect::<Result<Vec<(u64, u64)>, _>>()?;
            S2 { pairs }
        }
        "s3" => {
            let v = numbers(params, 3, family)?;
            S3 { p: v[0], q1: v[1], q2: v[2] }
        }
        "s4" => {
            let v = numbers(params, 2, family)?;
            S4 { p: v[0], q: v[1] }
        }
        "complete" => match numbers(params, 1, family)?[0] {
            1 => TrivialK,
            size => KComplete { size },
        },
        "empty" => match numbers(params, 1, family)?[0] {
            1 => TrivialS,
            size => SIsolated { size },
        },
        other => return Err(Failure::Usage(format!("unknown family `{other}`"))),
    };
    Ok(kind)
}

fn cmd_gen(
    ctx: &mut Ctx,
    family: &str,
    params: &[String],
    relative: RelativeTag,
    components: usize,
    size: u64,
) -> Result<(), Failure> {
    let (graph, label) = match family {
        "random-unigraph" => {
            numbers(params, 0, family)?;
            if components == 0 || size == 0 {
                return Err(Failure::Usage("budgets must be positive".into()));
            }
            let r = random_unigraph(ctx.seed, components, size);
            let pieces: Vec<String> = r.pieces.iter().map(|(k, t)| format!("{k} {t}")).collect();
            (r.graph, format!("random unigraph, seed {}: {}", ctx.seed, pieces.join(" o ")))
        }
        "threshold" => {
            let n = numbers(params, 1, family)?[0] as usize;
            if n == 0 {
                return Err(Failure::Usage("threshold graphs need at least one vertex".into()));
            }
            (random_threshold(ctx.seed, n), format!("random threshold graph, seed {}", ctx.seed))
        }
        _ => {
            let kind = family_kind(family, params)?;
            (realize(&kind, relative)?.into_graph(), format!("{kind} {relative}"))
        }
    };
    if ctx.json {
        let edges: Vec<Value> = graph.edges().map(|(u, v)| json!([u, v])).collect();
        write_json(ctx, &json!({ "n": graph.vertex_count(), "edges": edges, "label": label }))
    } else {
        write!(ctx.out, "# {label}\n{graph}")?;
        Ok(())
    }
}

fn cmd_oracle(
    ctx: &mut Ctx,
    action: OracleAction,
    input: &Input,
    colors: Option<u64>,
    other: Option<&str>,
    list: bool,
) -> Result<(), Failure> {
    let oracle = Oracle::new(ctx.cap as usize)?;
    let g = ctx.graph(input)?;
    let value = match action {
        OracleAction::Aut => {
            let count = oracle.automorphism_count(&g)?;
            let perms = if list { Some(oracle.automorphisms(&g)?) } else { None };
            if !ctx.json {
                writeln!(ctx.out, "{count}")?;
                for p in perms.iter().flatten() {
                    writeln!(ctx.out, "{p}")?;
                }
                return Ok(());
            }
            let perms = perms.map(|ps| ps.iter().map(|p| json!(p.mapping())).collect::<Vec<_>>());
            json!({ "count": count, "automorphisms": perms })
        }
        OracleAction::Dist => {
            let d = oracle.brute_dist_number(&g)?;
            if !ctx.json {
                return Ok(writeln!(ctx.out, "{d}")?);
            }
            json!({ "dist": d })
        }
        OracleAction::Count => {
            let c = colors.ok_or_else(|| Failure::Usage("count needs --colors".into()))?;
            let n = oracle.count_inequivalent(&g, c)?;
            if !ctx.json {
                return Ok(writeln!(ctx.out, "{n}")?);
            }
            json!({ "colors": c, "count": n })
        }
        OracleAction::Split => {
            let witness = oracle.brute_is_split(&g)?;
            if !ctx.json {
                match &witness {
                    Some((clique, stable)) => {
                        let show = |vs: &[usize]| vs.iter().map(usize::to_string).collect::<Vec<_>>().join(" ");
                        writeln!(ctx.out, "split\nclique: {}\nstable: {}", show(clique), show(stable))?;
                    }
                    None => writeln!(ctx.out, "not split")?,
                }
                return Ok(());
            }
            match witness {
                Some((clique, stable)) => json!({ "split": true, "clique": clique, "stable": stable }),
                None => json!({ "split": false }),
            }
        }
        OracleAction::Iso => {
            let path = other.ok_or_else(|| Failure::Usage("iso needs --other".into()))?;
            let text = ctx.read_text(path)?;
            let h = parse_edge_list(&text)?;
            let iso = oracle.isomorphism(&g, &h)?;
            if !ctx.json {
                match &iso {
                    Some(p) => writeln!(ctx.out, "isomorphic\nmapping: {p}")?,
                    None => writeln!(ctx.out, "not isomorphic")?,
                }
                return Ok(());
            }
            json!({ "isomorphic": iso.is_some(), "mapping": iso.map(|p| p.mapping().to_vec()) })
        }
    };
    write_json(ctx, &value)
}

fn cmd_bench(ctx: &mut Ctx, sizes: &[usize], repeats: usize) -> Result<(), Failure> {
    let mut rows = Vec::new();
    for &n in sizes {
        if n == 0 {
            return Err(Failure::Usage("sizes must be positive".into()));
        }
        let seq = random_threshold_sequence(ctx.seed, n);
        let mut best = Duration::MAX;
        let mut dist = 0;
        for _ in 0..repeats.max(1) {
            let start = Instant::now();
            let _ = decompose(&seq);
            dist = find_dist_unigraph(&seq)?.dist;
            best = best.min(start.elapsed());
        }
        if ctx.json {
            rows.push(json!({ "n": n, "seconds": best.as_secs_f64(), "dist": dist }));
        } else {
            writeln!(ctx.out, "n={n} ms={:.3} dist={dist}", best.as_secs_f64() * 1e3)?;
        }
    }
    if ctx.json {
        write_json(ctx, &Value::Array(rows))?;
    }
    Ok(())
}

fn dispatch(cli: &Cli, ctx: &mut Ctx) -> Result<(), Failure> {
    match &cli.command {
        Command::Dist { input } => cmd_dist(ctx, input),
        Command::Decompose { input, compact } => cmd_decompose(ctx, input, *compact),
        Command::Classify { input } => cmd_classify(ctx, input),
        Command::Gen { family, params, relative, components, size } => {
            cmd_gen(ctx, family, params, *relative, *components, *size)
        }
        Command::Oracle { action, input, colors, other, list } => {
            cmd_oracle(ctx, *action, input, *colors, other.as_deref(), *list)
        }
        Command::Bench { sizes, repeats } => cmd_bench(ctx, sizes, *repeats),
    }
}

/// Runs the command line `args` (program name first) and returns the exit
/// code.
pub fn run<I, T>(args: I, stdin: &mut dyn Read, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let target: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(target, "{}", e.render());
            return code;
        }
    };
    let mut ctx = Ctx { json: cli.json, seed: cli.seed, cap: cli.cap, stdin, out, err };
    match dispatch(&cli, &mut ctx) {
        Ok(()) => 0,
        Err(f) => {
            let _ = match &f {
                Failure::NotUnigraph => writeln!(ctx.err, "not a unigraph"),
                Failure::Usage(m) => writeln!(ctx.err, "error: {m}"),
                Failure::TooLarge(m) => writeln!(ctx.err, "error: {m}"),
                Failure::Internal(m) => writeln!(ctx.err, "internal error: {m}"),
            };
            f.code()
        }
    }
}

