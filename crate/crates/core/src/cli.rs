//! Command-line front end.

use std::io::{Read, Write};
use std::num::NonZeroUsize;
use std::path::PathBuf;
use std::sync::Arc;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;
use thiserror::Error;

use crate::flow::{self, FlowCache, FlowEngine};
use crate::graph::format::{self, Format};
use crate::graph::{GraphError, Multigraph};
use crate::matroid::Matroid;
use crate::planar::{self, Family, GenSpec, Planarity};
use crate::poly;
use crate::theorem::{self, VerifyOptions};

pub const EXIT_OK: i32 = 0;
pub const EXIT_ERROR: i32 = 1;
pub const EXIT_COUNTEREXAMPLE: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "flowroots",
    version,
    about = "Flow polynomials, their roots and the structure behind integral roots",
    after_help = "Input is read from FILE, from --graph, or from standard input. Formats: graph6, \
                  sparse6 (':' prefix) and edge lists ('n m' header, then one 'u v' pair per edge; \
                  '#' starts a comment). Several graphs may be given, one graph6/sparse6 string per \
                  line or edge-list blocks back to back.\n\nExit codes: 0 success, 1 usage or input \
                  error, 2 counterexample found by verify."
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Input format; detected from the first byte when omitted.
    #[arg(long, global = true, value_parser = parse_format)]
    pub format: Option<Format>,
    /// Emit JSON (one object per line) instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    /// Maximum number of cached flow polynomials.
    #[arg(long, global = true, default_value_t = 1 << 16)]
    pub cache_cap: usize,
    /// Worker threads for corpus commands.
    #[arg(long, global = true, default_value_t = 1)]
    pub parallel: usize,
}

fn parse_format(s: &str) -> Result<Format, String> {
    s.parse::<Format>()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum PolyKind {
    Flow,
    Chromatic,
    /// Characteristic polynomial of the cocycle matroid by Möbius summation.
    Charpoly,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FamilyArg {
    #[value(name = "2tree")]
    TwoTree,
    ChordalPlanar,
    Triangulation,
}

impl From<FamilyArg> for Family {
    fn from(f: FamilyArg) -> Self {
        match f {
            FamilyArg::TwoTree => Family::TwoTree,
            FamilyArg::ChordalPlanar => Family::ChordalPlanar,
            FamilyArg::Triangulation => Family::Triangulation,
        }
    }
}

#[derive(Debug, clap::Args)]
pub struct InputArgs {
    /// Graph file; standard input when omitted.
    pub file: Option<PathBuf>,
    /// Graph given inline.
    #[arg(long, short = 'g', conflicts_with = "file")]
    pub graph: Option<String>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Flow, chromatic or cocycle characteristic polynomial.
    Poly {
        #[arg(long, value_enum, default_value = "flow")]
        kind: PolyKind,
        #[command(flatten)]
        input: InputArgs,
    },
    /// Integer roots, reality of all roots and the leftover factor of the flow polynomial.
    Roots {
        #[command(flatten)]
        input: InputArgs,
    },
    /// Cocycle rank, degree excess and degree histogram.
    Stats {
        #[command(flatten)]
        input: InputArgs,
    },
    /// Minimal 3-edge cutsets of a 3-edge-connected graph.
    Cutsets {
        #[command(flatten)]
        input: InputArgs,
    },
    /// Planar dual of a connected planar graph, or a Kuratowski witness.
    Dual {
        #[command(flatten)]
        input: InputArgs,
    },
    /// Contract series classes until no 2-edge cutset remains.
    Reduce {
        #[command(flatten)]
        input: InputArgs,
    },
    /// Compare integral flow roots with the structural characterization.
    Check {
        #[command(flatten)]
        input: InputArgs,
    },
    /// Check every graph of a corpus; JSON lines plus a summary line.
    Verify {
        #[command(flatten)]
        input: InputArgs,
        /// Keep going after an inconsistent graph.
        #[arg(long)]
        no_abort: bool,
    },
    /// Grow a planar chordal graph from a triangle.
    Gen {
        #[arg(long, value_enum, default_value = "chordal-planar")]
        family: FamilyArg,
        #[arg(long, default_value_t = 6)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Build script with `E u v` and `F a b c` lines instead of a random build.
        #[arg(long, conflicts_with_all = ["n", "seed", "family"])]
        script: Option<PathBuf>,
    },
    /// Reduction tree used by the flow engine.
    Decompose {
        #[command(flatten)]
        input: InputArgs,
    },
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("cannot read {path}: {source}")]
    Read {
        path: String,
        source: std::io::Error,
    },
    #[error("graph starting at line {line}: {source}")]
    Parse { line: usize, source: GraphError },
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Theorem(#[from] theorem::TheoremError),
    #[error(transparent)]
    Planar(#[from] planar::PlanarError),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("{0}")]
    Failed(String),
}

struct Ctx<'a> {
    cli: &'a Cli,
    stdin: &'a mut dyn Read,
    out: &'a mut dyn Write,
}

impl Ctx<'_> {
    fn read_input(&mut self, input: &InputArgs) -> Result<Vec<u8>, CliError> {
        if let Some(g) = &input.graph {
            return Ok(g.clone().into_bytes());
        }
        match &input.file {
            Some(p) if p.as_os_str() != "-" => std::fs::read(p).map_err(|source| CliError::Read {
                path: p.display().to_string(),
                source,
            }),
            _ => {
                let mut buf = Vec::new();
                self.stdin.read_to_end(&mut buf)?;
                Ok(buf)
            }
        }
    }

    fn graphs(&mut self, input: &InputArgs) -> Result<Vec<(usize, Multigraph)>, CliError> {
        let bytes = self.read_input(input)?;
        let records = format::parse_all(&bytes, self.cli.format);
        if records.is_empty() {
            return Err(CliError::Usage("no graph in input".into()));
        }
        records
            .into_iter()
            .map(|r| match r.graph {
                Ok(g) => Ok((r.line, g)),
                Err(source) => Err(CliError::Parse { line: r.line, source }),
            })
            .collect()
    }

    fn engine(&self) -> FlowEngine {
        let cap = NonZeroUsize::new(self.cli.cache_cap).unwrap_or(NonZeroUsize::MIN);
        FlowEngine::new(true).with_cache(Arc::new(FlowCache::new(cap)))
    }

    fn emit_json<T: Serialize>(&mut self, value: &T) -> Result<(), CliError> {
        serde_json::to_writer(&mut *self.out, value)?;
        self.out.write_all(b"\n")?;
        Ok(())
    }

    fn line(&mut self, text: &str) -> Result<(), CliError> {
        writeln!(self.out, "{text}")?;
        Ok(())
    }
}

fn run_command(ctx: &mut Ctx) -> Result<i32, CliError> {
    let json = ctx.cli.json;
    match &ctx.cli.command {
        Command::Poly { kind, input } => {
            let engine = ctx.engine();
            for (line, g) in ctx.graphs(input)? {
                let p = match kind {
                    PolyKind::Flow => engine.flow_poly(&g),
                    PolyKind::Chromatic => flow::chromatic_poly(&g),
                    PolyKind::Charpoly => Matroid::cocycle(&g)
                        .and_then(|m| m.char_poly_mobius())
                        .map_err(|e| CliError::Failed(e.to_string()))?,
                };
                if json {
                    let kind = format!("{kind:?}").to_lowercase();
                    ctx.emit_json(&json!({"line": line, "kind": kind, "coeffs": p, "factored": p.factored_string()}))?;
                } else {
                    ctx.line(&p.factored_string())?;
                    ctx.line(&format!("coeffs {}", p.coeff_list_string()))?;
                }
            }
        }
        Command::Roots { input } => {
            let engine = ctx.engine();
            for (line, g) in ctx.graphs(input)? {
                let f = engine.flow_poly(&g);
                if f.is_zero() {
                    if json {
                        ctx.emit_json(&json!({"line": line, "zero": true}))?;
                    } else {
                        ctx.line("flow polynomial is zero (the graph has a bridge)")?;
                    }
                    continue;
                }
                let rep = poly::integer_roots(&f).map_err(|e| CliError::Failed(e.to_string()))?;
                let roots: Vec<serde_json::Value> = rep
                    .integer_roots
                    .iter()
                    .map(|(r, m)| json!({"root": r.to_string(), "multiplicity": m}))
                    .collect();
                if json {
                    ctx.emit_json(&json!({
                        "line": line,
                        "integer_roots": roots,
                        "nonintegral_part": rep.nonintegral_part,
                        "all_integral": rep.all_roots_integral,
                        "all_real": rep.all_roots_real,
                    }))?;
                } else {
                    let list: Vec<String> = rep
                        .integer_roots
                        .iter()
                        .map(|(r, m)| if *m > 1 { format!("{r}^{m}") } else { r.to_string() })
                        .collect();
                    ctx.line(&format!("integer roots: {}", list.join(", ")))?;
                    ctx.line(&format!("remaining factor: {}", rep.nonintegral_part))?;
                    ctx.line(&format!("all integral: {}", rep.all_roots_integral))?;
                    ctx.line(&format!("all real: {}", rep.all_roots_real))?;
                }
            }
        }
        Command::Stats { input } => {
            for (line, g) in ctx.graphs(input)? {
                let s = flow::flow_stats(&g);
                if json {
                    ctx.emit_json(&json!({"line": line, "n": g.n(), "m": g.m(), "stats": s}))?;
                } else {
                    ctx.line(&format!("n = {}, m = {}, r = {}, delta = {}", g.n(), g.m(), s.r, s.delta))?;
                    let h: Vec<String> = s.degree_histogram.iter().map(|(d, c)| format!("{d}:{c}")).collect();
                    ctx.line(&format!("degrees {}", h.join(" ")))?;
                }
            }
        }
        Command::Cutsets { input } => {
            for (line, g) in ctx.graphs(input)? {
                let rep = g.minimal_three_cutsets()?;
                if json {
                    let cuts: Vec<serde_json::Value> = rep
                        .cutsets
                        .iter()
                        .map(|c| json!({"edges": c.edges, "proper": c.proper, "sides": [c.sides.0, c.sides.1]}))
                        .collect();
                    ctx.emit_json(&json!({"line": line, "cutsets": cuts, "proper": rep.proper_count()}))?;
                } else {
                    for c in &rep.cutsets {
                        let kind = if c.proper { "proper" } else { "trivial" };
                        ctx.line(&format!("{:?} {kind}", c.edges))?;
                    }
                    ctx.line(&format!("{} cutsets, {} proper", rep.cutsets.len(), rep.proper_count()))?;
                }
            }
        }
        Command::Dual { input } => {
            for (line, g) in ctx.graphs(input)? {
                match planar::planarity_embed(&g) {
                    Planarity::Planar(e) => {
                        let d = e.dual()?;
                        if json {
                            ctx.emit_json(&json!({
                                "line": line,
                                "planar": true,
                                "embedding": e.summary(),
                                "dual": {"n": d.n(), "edges": d.edges().iter().map(|x| [x.id, x.u, x.v]).collect::<Vec<_>>()},
                            }))?;
                        } else {
                            ctx.line(&format!("# dual of the graph starting at line {line}; edge ids kept"))?;
                            ctx.out.write_all(format::to_edge_list(&d).as_bytes())?;
                        }
                    }
                    Planarity::NonPlanar(w) => {
                        if json {
                            ctx.emit_json(&json!({"line": line, "planar": false, "witness": w}))?;
                        } else {
                            ctx.line(&format!("not planar: {:?} subdivision on edges {:?}", w.kind, w.edges))?;
                        }
                    }
                }
            }
        }
        Command::Reduce { input } => {
            for (line, g) in ctx.graphs(input)? {
                let r = g.series_reduce()?;
                if json {
                    let edges: Vec<[usize; 3]> = r.edges().iter().map(|x| [x.id, x.u, x.v]).collect();
                    ctx.emit_json(&json!({"line": line, "n": r.n(), "edges": edges}))?;
                } else {
                    ctx.out.write_all(format::to_edge_list(&r).as_bytes())?;
                }
            }
        }
        Command::Check { input } => {
            let engine = ctx.engine();
            let mut all = true;
            for (line, g) in ctx.graphs(input)? {
                let r = theorem::check_graph(&format!("line {line}"), &g, &engine);
                all &= r.consistent;
                if json {
                    ctx.emit_json(&r)?;
                } else {
                    print_report(ctx, &r)?;
                }
            }
            if !all {
                return Ok(EXIT_COUNTEREXAMPLE);
            }
        }
        Command::Verify { input, no_abort } => {
            let bytes = ctx.read_input(input)?;
            let records = format::parse_all(&bytes, ctx.cli.format);
            let options = VerifyOptions {
                parallel: ctx.cli.parallel,
                cache_cap: ctx.cli.cache_cap,
                abort_on_inconsistency: !no_abort,
            };
            let summary = theorem::verify_corpus(&records, &options, &mut *ctx.out)?;
            if summary.inconsistent > 0 {
                return Ok(EXIT_COUNTEREXAMPLE);
            }
        }
        Command::Gen {
            family,
            n,
            seed,
            script,
        } => {
            let spec = match script {
                Some(p) => GenSpec::Script(std::fs::read_to_string(p).map_err(|source| CliError::Read {
                    path: p.display().to_string(),
                    source,
                })?),
                None => GenSpec::Random {
                    family: (*family).into(),
                    n: *n,
                    seed: *seed,
                },
            };
            let g = planar::gen_chordal_planar(&spec)?;
            let g6 = format::to_graph6(&g.graph)?;
            if json {
                let script: Vec<String> = g.script.iter().map(|s| s.to_string()).collect();
                ctx.emit_json(&json!({"graph6": g6, "script": script, "embedding": g.embedding.summary()}))?;
            } else {
                for s in &g.script {
                    ctx.line(&format!("# {s}"))?;
                }
                ctx.line(&g6)?;
            }
        }
        Command::Decompose { input } => {
            for (line, g) in ctx.graphs(input)? {
                let tree = flow::decomposition_tree(&g);
                if json {
                    ctx.emit_json(&json!({"line": line, "tree": tree}))?;
                } else {
                    print_tree(ctx, &tree, 0)?;
                }
            }
        }
    }
    Ok(EXIT_OK)
}

fn print_report(ctx: &mut Ctx, r: &theorem::TheoremReport) -> Result<(), CliError> {
    ctx.line(&format!("{}: n = {}, m = {}, r = {}, delta = {}", r.id, r.n, r.m, r.r, r.delta))?;
    if let Some(d) = &r.degenerate {
        ctx.line(&format!("  degenerate: {d}"))?;
    }
    if let Some(f) = &r.flow {
        ctx.line(&format!("  flow polynomial: {}", f.factored))?;
    }
    if let Some(roots) = r.roots {
        ctx.line(&format!("  roots integral: {}, real: {}", roots.integral, roots.real))?;
    }
    if let Some(s) = &r.structural {
        ctx.line(&format!(
            "  planar: {}, dual of planar chordal: {}, supersolvable: {}",
            s.planar, s.dual_of_planar_chordal, s.supersolvable
        ))?;
    }
    if let Some(s) = &r.skipped {
        ctx.line(&format!("  skipped: {s}"))?;
    }
    ctx.line(&format!("  consistent: {}", r.consistent))
}

fn print_tree(ctx: &mut Ctx, node: &flow::DecompositionNode, depth: usize) -> Result<(), CliError> {
    let step = serde_json::to_string(&node.step)?;
    ctx.line(&format!(
        "{}n={} m={} {} F = {}",
        "  ".repeat(depth),
        node.n,
        node.m,
        step,
        node.flow.factored_string()
    ))?;
    for c in &node.children {
        print_tree(ctx, c, depth + 1)?;
    }
    Ok(())
}

/// Parses `args` (program name first) and runs the command.
pub fn run<I, T>(args: I, stdin: &mut dyn Read, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_ERROR } else { EXIT_OK };
            let text = e.render().to_string();
            if e.use_stderr() {
                let _ = err.write_all(text.as_bytes());
            } else {
                let _ = out.write_all(text.as_bytes());
            }
            return code;
        }
    };
    let mut ctx = Ctx {
        cli: &cli,
        stdin,
        out,
    };
    match run_command(&mut ctx) {
        Ok(code) => {
            let _ = ctx.out.flush();
            code
        }
        Err(e) => {
            let _ = ctx.out.flush();
            let _ = writeln!(err, "error: {e}");
            EXIT_ERROR
        }
    }
}
