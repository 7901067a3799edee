//! The `lml` command line.
//!
//! Exit codes: 0 success or accept, 1 checked negative (reject, ambiguity,
//! relator violation), 2 resource limit, 3 input error.

use crate::balls::{cayley_ball_with_cap, distance_with_cap, BallError, FiniteGraph, RootedBall, DEFAULT_MAX_VERTICES};
use crate::cosets::{
    enumerate_homs, permutation_engine, schreier_from_table, todd_coxeter, witness_report_for, CosetError, HomError,
    WitnessError, DEFAULT_MAX_NODES,
};
use crate::fixtures;
use crate::localmodel::{fixing_radius, verify_model, Limits, LocalModelError};
use crate::reconstruct::{reconstruct, PresentOnSError};
use crate::words::{
    bs_generating_set, standard_generating_set, Alphabet, BaumslagSolitar, Engine, FreeAbelian, FreeGroup, GenSet,
    Presentation, PresentationFile, Word, WordProblem,
};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};
use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

pub const SCHEMA: u32 = 1;

/// Bytes per ball vertex assumed when turning `LML_MAX_MEM` into a vertex cap.
const BYTES_PER_VERTEX: u64 = 512;

#[derive(Parser, Debug)]
#[command(
    name = "lml",
    version,
    about = "Balls, local models and Schreier graphs of Cayley graphs"
)]
pub struct Cli {
    /// Worker threads (default: all cores).
    #[arg(long, global = true)]
    pub threads: Option<usize>,
    /// Write the result here instead of standard output.
    #[arg(long, short, global = true)]
    pub output: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    pub format: Format,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum EngineKind {
    Free,
    Zd,
    Bs,
    Perm,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Preset {
    #[value(name = "paper-S")]
    TenElement,
}

#[derive(Args, Debug, Clone)]
pub struct EngineArgs {
    #[arg(long, value_enum, default_value_t = EngineKind::Zd)]
    pub engine: EngineKind,
    /// Rank for the free and free abelian engines.
    #[arg(long, default_value_t = 1)]
    pub d: usize,
    #[arg(long, default_value_t = 9)]
    pub m: u32,
    #[arg(long, default_value_t = 10)]
    pub n: u32,
    /// Presentation file; required by the permutation engine, otherwise
    /// only its `S` line is used.
    #[arg(long)]
    pub presentation: Option<PathBuf>,
    #[arg(long, value_enum)]
    pub preset: Option<Preset>,
    /// Generating set as `w | w | ...`, overriding presets and files.
    #[arg(long)]
    pub gens: Option<String>,
    #[arg(long, default_value_t = DEFAULT_MAX_VERTICES)]
    pub max_vertices: usize,
    /// Coset bound for building the permutation engine.
    #[arg(long, default_value_t = 10_000)]
    pub max_cosets: usize,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// The ball B(e, r) of the Cayley graph.
    Ball {
        #[command(flatten)]
        engine: EngineArgs,
        #[arg(long)]
        radius: usize,
    },
    /// Check a graph file as a perfect finite r-local model.
    Verify {
        #[command(flatten)]
        engine: EngineArgs,
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        radius: usize,
    },
    /// Recover a Schreier graph structure from a local model.
    Reconstruct {
        #[command(flatten)]
        engine: EngineArgs,
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        radius: usize,
    },
    /// First radius whose ball automorphisms fix B(e, r).
    R0 {
        #[command(flatten)]
        engine: EngineArgs,
        #[arg(long)]
        r: usize,
        #[arg(long)]
        bound: usize,
    },
    /// Word length of an element with respect to S.
    Distance {
        #[command(flatten)]
        engine: EngineArgs,
        #[arg(long)]
        word: String,
    },
    /// Todd–Coxeter coset enumeration.
    Cosets {
        #[arg(long)]
        presentation: PathBuf,
        /// Subgroup generators, each a word; may be repeated.
        #[arg(long)]
        subgroup: Vec<String>,
        #[arg(long, default_value_t = 10_000)]
        max_cosets: usize,
        /// Also write the Schreier graph over the file's `S` (or the standard set).
        #[arg(long)]
        schreier_graph: Option<PathBuf>,
        #[arg(long, value_enum)]
        preset: Option<Preset>,
    },
    /// Transitive permutation representations up to conjugacy.
    Quotients {
        #[command(flatten)]
        engine: EngineArgs,
        #[arg(long)]
        max_degree: usize,
    },
    /// Evidence that a nontrivial element of BS(m, n) dies in every small quotient.
    Witness {
        #[arg(long, default_value_t = 9)]
        m: u32,
        #[arg(long, default_value_t = 10)]
        n: u32,
        #[arg(long, default_value_t = 5)]
        max_degree: usize,
        /// Witness word over a, b (default: [a b^c a^-1, b^c], c = gcd(m, n)).
        #[arg(long)]
        word: Option<String>,
        #[arg(long, default_value_t = DEFAULT_MAX_VERTICES)]
        max_vertices: usize,
    },
    /// Example graphs in the graph file format.
    Fixture {
        #[command(subcommand)]
        kind: FixtureKind,
    },
}

#[derive(Subcommand, Debug)]
pub enum FixtureKind {
    Klein {
        #[arg(long)]
        w: usize,
        #[arg(long)]
        h: usize,
    },
    Torus {
        #[arg(long)]
        w: usize,
        #[arg(long)]
        h: usize,
    },
    Cycle {
        #[arg(long)]
        n: usize,
    },
}

#[derive(Debug)]
pub enum CliError {
    Input(String),
    Resource(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Resource(_) => 2,
            CliError::Input(_) => 3,
        }
    }

    fn message(&self) -> &str {
        match self {
            CliError::Input(m) | CliError::Resource(m) => m,
        }
    }
}

fn input(e: impl std::fmt::Display) -> CliError {
    CliError::Input(e.to_string())
}

impl From<BallError> for CliError {
    fn from(e: BallError) -> Self {
        CliError::Resource(e.to_string())
    }
}

impl From<LocalModelError> for CliError {
    fn from(e: LocalModelError) -> Self {
        CliError::Resource(e.to_string())
    }
}

impl From<CosetError> for CliError {
    fn from(e: CosetError) -> Self {
        match e {
            CosetError::IndexExceedsBound(_) => CliError::Resource(e.to_string()),
            CosetError::ForeignGenerator(_) => input(e),
        }
    }
}

impl From<HomError> for CliError {
    fn from(e: HomError) -> Self {
        match e {
            HomError::ResourceLimit { .. } => CliError::Resource(e.to_string()),
            HomError::ZeroDegree => input(e),
        }
    }
}

impl From<WitnessError> for CliError {
    fn from(e: WitnessError) -> Self {
        match e {
            WitnessError::Hom(h) => h.into(),
            WitnessError::Ball(b) => b.into(),
            other => input(other),
        }
    }
}

impl From<PresentOnSError> for CliError {
    fn from(e: PresentOnSError) -> Self {
        match e {
            PresentOnSError::Ball(b) => b.into(),
            other => input(other),
        }
    }
}

/// What a command produced: a document and the exit code it implies.
pub struct Outcome {
    pub body: String,
    pub code: i32,
}

/// The versioned envelope every command writes: `{"schema", "command", "result"}`.
pub fn document(command: &str, result: impl Serialize) -> Value {
    let mut doc = serde_json::Map::new();
    doc.insert("schema".into(), json!(SCHEMA));
    doc.insert("command".into(), json!(command));
    doc.insert(
        "result".into(),
        serde_json::to_value(result).expect("serializable result"),
    );
    Value::Object(doc)
}

fn emit(command: &str, result: impl Serialize, code: i32) -> Outcome {
    Outcome {
        body: render(&document(command, result)),
        code,
    }
}

/// Pretty JSON with a trailing newline.
pub fn render(doc: &Value) -> String {
    let mut s = serde_json::to_string_pretty(doc).expect("serializable document");
    s.push('\n');
    s
}

fn read(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|e| input(format!("{}: {e}", path.display())))
}

fn read_presentation(path: &Path) -> Result<PresentationFile, CliError> {
    PresentationFile::parse(&read(path)?).map_err(|e| input(format!("{}: {e}", path.display())))
}

fn read_graph(path: &Path) -> Result<FiniteGraph, CliError> {
    FiniteGraph::parse(&read(path)?).map_err(|e| input(format!("{}: {e}", path.display())))
}

/// `LML_MAX_MEM` in bytes, with an optional `K`, `M` or `G` suffix.
fn memory_cap() -> Option<usize> {
    let raw = std::env::var("LML_MAX_MEM").ok()?;
    let raw = raw.trim();
    let (digits, scale) = match raw.chars().last()?.to_ascii_uppercase() {
        'K' => (&raw[..raw.len() - 1], 1u64 << 10),
        'M' => (&raw[..raw.len() - 1], 1 << 20),
        'G' => (&raw[..raw.len() - 1], 1 << 30),
        _ => (raw, 1),
    };
    let bytes = digits.trim().parse::<u64>().ok()?.saturating_mul(scale);
    Some((bytes / BYTES_PER_VERTEX).max(1) as usize)
}

/// An engine with its generating set and presentation.
pub struct Setup {
    pub engine: Engine,
    pub s: GenSet,
    pub presentation: Presentation,
    pub limits: Limits,
}

impl EngineArgs {
    pub fn setup(&self) -> Result<Setup, CliError> {
        let file = self.presentation.as_deref().map(read_presentation).transpose()?;
        let (engine, presentation) = match self.engine {
            EngineKind::Free => (
                Engine::Free(FreeGroup::of_rank(self.d)),
                Presentation::free(Alphabet::standard(self.d)),
            ),
            EngineKind::Zd => (
                Engine::FreeAbelian(FreeAbelian::of_rank(self.d)),
                Presentation::free_abelian(self.d),
            ),
            EngineKind::Bs => {
                if self.m == 0 || self.n == 0 {
                    return Err(input("--m and --n must be positive"));
                }
                (
                    Engine::BaumslagSolitar(BaumslagSolitar::new(self.m, self.n)),
                    Presentation::baumslag_solitar(self.m, self.n),
                )
            }
            EngineKind::Perm => {
                let file = file
                    .as_ref()
                    .ok_or_else(|| input("the perm engine needs --presentation"))?;
                let (group, _) = permutation_engine(&file.presentation, &[], self.max_cosets)?;
                (Engine::Permutation(group), file.presentation.clone())
            }
        };
        let rank = engine.alphabet().len();
        if let Some(f) = &file {
            if f.presentation.rank() != rank {
                return Err(input(format!(
                    "presentation has {} generators, the engine {rank}",
                    f.presentation.rank()
                )));
            }
        }
        let words = if let Some(text) = &self.gens {
            parse_genset(engine.alphabet(), text)?
        } else if let Some(Preset::TenElement) = self.preset {
            if rank != 2 {
                return Err(input("--preset paper-S needs a rank-2 engine"));
            }
            bs_generating_set()
        } else if let Some(s) = file.as_ref().and_then(|f| f.generating_set.clone()) {
            s
        } else {
            standard_generating_set(rank)
        };
        let s = GenSet::validate(&engine, words).map_err(input)?;
        let max_vertices = memory_cap().map_or(self.max_vertices, |cap| cap.min(self.max_vertices));
        Ok(Setup {
            engine,
            s,
            presentation,
            limits: Limits {
                max_vertices,
                ..Limits::default()
            },
        })
    }
}

fn parse_genset(alphabet: &Alphabet, text: &str) -> Result<Vec<Word>, CliError> {
    text.split('|')
        .map(|part| alphabet.parse_word(part).map_err(|e| input(format!("--gens: {e}"))))
        .collect()
}

#[derive(Serialize)]
pub struct BallDoc {
    engine: &'static str,
    generating_set: Vec<String>,
    radius: usize,
    vertex_count: usize,
    edge_count: usize,
    sphere_sizes: Vec<usize>,
    dist: Vec<u32>,
    edges: Vec<(u32, u32)>,
    labels: Option<Vec<String>>,
}

impl BallDoc {
    pub fn new(engine: &Engine, s: &GenSet, ball: &RootedBall) -> Self {
        BallDoc {
            engine: engine.kind(),
            generating_set: s.render(engine.alphabet()),
            radius: ball.radius(),
            vertex_count: ball.vertex_count(),
            edge_count: ball.edge_count(),
            sphere_sizes: ball.sphere_sizes(),
            dist: ball.dist().to_vec(),
            edges: ball.edges(),
            labels: ball.render_labels(engine.alphabet()),
        }
    }
}

pub fn execute(cli: &Cli) -> Result<Outcome, CliError> {
    match &cli.command {
        Command::Ball { engine, radius } => {
            let st = engine.setup()?;
            let ball = cayley_ball_with_cap(&st.engine, &st.s, *radius, st.limits.max_vertices)?;
            if cli.format == Format::Text {
                return Ok(Outcome {
                    body: ball.to_text(),
                    code: 0,
                });
            }
            Ok(emit("ball", BallDoc::new(&st.engine, &st.s, &ball), 0))
        }
        Command::Verify { engine, graph, radius } => {
            let st = engine.setup()?;
            let g = read_graph(graph)?;
            let verdict = verify_model(&g, &st.engine, &st.s, *radius, st.limits)?;
            let code = if verdict.accepted { 0 } else { 1 };
            if cli.format == Format::Text {
                let body = match &verdict.rejection {
                    None => format!("accepted at radius {}\n", verdict.radius),
                    Some(r) => format!("rejected at vertex {}: {}\n", r.vertex, r.reason),
                };
                return Ok(Outcome { body, code });
            }
            Ok(emit("verify", &verdict, code))
        }
        Command::Reconstruct { engine, graph, radius } => {
            let st = engine.setup()?;
            let g = read_graph(graph)?;
            let out = reconstruct(&g, &st.engine, &st.s, &st.presentation, *radius, st.limits)?;
            let code = if out.is_success() { 0 } else { 1 };
            Ok(emit("reconstruct", &out, code))
        }
        Command::R0 { engine, r, bound } => {
            let st = engine.setup()?;
            if bound < r {
                return Err(input("--bound must be at least --r"));
            }
            let rep = fixing_radius(&st.engine, &st.s, *r, *bound, st.limits)?;
            Ok(emit("r0", &rep, 0))
        }
        Command::Distance { engine, word } => {
            let st = engine.setup()?;
            let w = st
                .engine
                .alphabet()
                .parse_word(word)
                .map_err(|e| input(format!("--word: {e}")))?;
            let d = distance_with_cap(&st.engine, &st.s, &w, st.limits.max_vertices)?;
            if cli.format == Format::Text {
                return Ok(Outcome {
                    body: format!("{d}\n"),
                    code: 0,
                });
            }
            let doc = json!({
                "word": st.engine.alphabet().render(&w),
                "normal_form": st.engine.alphabet().render(&st.engine.spell(&st.engine.evaluate(&w))),
                "distance": d,
            });
            Ok(emit("distance", &doc, 0))
        }
        Command::Cosets {
            presentation,
            subgroup,
            max_cosets,
            schreier_graph,
            preset,
        } => {
            let file = read_presentation(presentation)?;
            let alphabet = file.presentation.alphabet();
            let h: Vec<Word> = subgroup
                .iter()
                .map(|w| alphabet.parse_word(w).map_err(|e| input(format!("--subgroup: {e}"))))
                .collect::<Result<_, _>>()?;
            let table = todd_coxeter(&file.presentation, &h, *max_cosets)?;
            let mut doc = json!({
                "index": table.index(),
                "table": &table,
            });
            if let Some(path) = schreier_graph {
                let (group, _) = permutation_engine(&file.presentation, &h, *max_cosets)?;
                let words = match preset {
                    Some(Preset::TenElement) => bs_generating_set(),
                    None => file
                        .generating_set
                        .clone()
                        .unwrap_or_else(|| standard_generating_set(alphabet.len())),
                };
                // S is validated in the quotient acting on the cosets
                let s = GenSet::validate(&group, words).map_err(input)?;
                let (action, graph, drops) = schreier_from_table(&table, &s);
                std::fs::write(path, graph.to_text()).map_err(|e| input(format!("{}: {e}", path.display())))?;
                let labels = path.with_extension("labels.json");
                let sidecar = json!({
                    "schema": SCHEMA,
                    "generating_set": s.render(alphabet),
                    "sigma": &action,
                });
                std::fs::write(&labels, render(&sidecar)).map_err(|e| input(format!("{}: {e}", labels.display())))?;
                doc["schreier"] = json!({
                    "graph": path.display().to_string(),
                    "labels": labels.display().to_string(),
                    "drops": drops,
                });
            }
            Ok(emit("cosets", &doc, 0))
        }
        Command::Quotients { engine, max_degree } => {
            let st = engine.setup()?;
            let mut per_degree = Vec::new();
            for k in 1..=*max_degree {
                let homs = enumerate_homs(&st.presentation, k, DEFAULT_MAX_NODES)?;
                per_degree.push(json!({ "degree": k, "count": homs.len(), "homs": homs }));
            }
            Ok(emit("quotients", &per_degree, 0))
        }
        Command::Witness {
            m,
            n,
            max_degree,
            word,
            max_vertices,
        } => {
            if *m == 0 || *n == 0 {
                return Err(input("--m and --n must be positive"));
            }
            let group = BaumslagSolitar::new(*m, *n);
            let w = match word {
                Some(text) => group
                    .alphabet()
                    .parse_word(text)
                    .map_err(|e| input(format!("--word: {e}")))?,
                None => crate::cosets::default_witness(*m, *n)?,
            };
            let s = GenSet::validate(&group, bs_generating_set()).map_err(input)?;
            let cap = memory_cap().map_or(*max_vertices, |c| c.min(*max_vertices));
            let rep = witness_report_for(*m, *n, &w, *max_degree, &s, cap)?;
            let code = if rep.quotient_scan.all_trivial { 0 } else { 1 };
            Ok(emit("witness", &rep, code))
        }
        Command::Fixture { kind } => {
            let g = match kind {
                FixtureKind::Klein { w, h } => fixtures::klein(*w, *h).map_err(input)?,
                FixtureKind::Torus { w, h } => fixtures::torus(*w, *h).map_err(input)?,
                FixtureKind::Cycle { n } => {
                    if *n < 3 {
                        return Err(input("cycles need at least 3 vertices"));
                    }
                    FiniteGraph::cycle(*n)
                }
            };
            Ok(Outcome {
                body: g.to_text(),
                code: 0,
            })
        }
    }
}

/// Parses `args`, runs the command, writes its output and returns the exit code.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = write!(stderr, "{e}");
            return if e.use_stderr() { 3 } else { 0 };
        }
    };
    if let Some(threads) = cli.threads {
        // a global pool can only be installed once per process
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(threads.max(1))
            .build_global();
    }
    match execute(&cli) {
        Ok(out) => {
            let written = match &cli.output {
                Some(path) => std::fs::write(path, &out.body).map_err(|e| format!("{}: {e}", path.display())),
                None => stdout.write_all(out.body.as_bytes()).map_err(|e| e.to_string()),
            };
            match written {
                Ok(()) => out.code,
                Err(e) => {
                    let _ = writeln!(stderr, "error: {e}");
                    3
                }
            }
        }
        Err(e) => {
            let _ = writeln!(stderr, "error: {}", e.message());
            e.exit_code()
        }
    }
}
