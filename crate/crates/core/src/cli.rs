//! The `roundfold` command line. Output is line-oriented and deterministic.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};

use crate::error::Error;
use crate::format::{parse_bordered_rmd, parse_rgf, print_bordered_rmd, print_rgf, print_rmd};
use crate::invariants::{classify, invariant_bounds};
use crate::polyhedron::{assemble_from_repgraph, euler_characteristic, from_fiber_graph, AssemblyStyle};
use crate::repgraph::{canonical_example, validate, RepGraph, EXAMPLE_NAMES};
use crate::roundmap::{build_with, fiber_graph, BorderedDescriptor, BuildOptions};
use crate::surface::genus;
use crate::svg::{emit_svg, DiagramSpec};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ExitStatus(pub i32);

impl ExitStatus {
    pub const OK: Self = Self(0);
    pub const INVALID: Self = Self(1);
    pub const USAGE: Self = Self(2);
    pub const INTERNAL: Self = Self(3);

    pub fn code(self) -> i32 {
        self.0
    }
}

#[derive(Parser, Debug)]
#[command(name = "roundfold", version, about = "Representation graphs, round fold maps and their Reeb spaces")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check a graph (.rgf) or descriptor (.rmd).
    Validate { file: PathBuf },
    /// Tier, embedding target and genus bounds of a graph.
    Classify { file: PathBuf },
    /// Genus of a graph.
    Genus { file: PathBuf },
    /// Descriptor of a round fold map realising a graph.
    BuildRound {
        file: PathBuf,
        /// Vertex placed outermost.
        #[arg(long)]
        root: Option<String>,
    },
    /// Fiber graph of a descriptor.
    FiberGraph { file: PathBuf },
    /// Reeb space polyhedron: assembled from a graph, or read off a descriptor.
    Reeb {
        file: PathBuf,
        #[arg(long, default_value = "minimal")]
        style: AssemblyStyle,
    },
    /// Euler characteristic of the Reeb space.
    Euler {
        file: PathBuf,
        #[arg(long, default_value = "minimal")]
        style: AssemblyStyle,
    },
    /// Bordered descriptor of an S-map supporting an annulus.
    #[command(allow_negative_numbers = true)]
    Smap { i1: u8, i2: u8, l: u32, e1: i8, e2: i8 },
    /// SVG of a descriptor's singular circles or of a graph.
    EmitSvg {
        file: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
        #[arg(long, default_value_t = 40)]
        scale: u32,
    },
    /// List built-in graphs, or print one as .rgf.
    Examples { name: Option<String> },
}

enum Input {
    Graph(RepGraph),
    Descriptor(BorderedDescriptor),
}

struct Usage(String);

enum Failure {
    Usage(String),
    Lib(Error),
    Io(std::io::Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Io(e)
    }
}

impl From<Usage> for Failure {
    fn from(u: Usage) -> Self {
        Failure::Usage(u.0)
    }
}

fn read(path: &Path) -> std::result::Result<Input, Failure> {
    let ext = path.extension().and_then(|e| e.to_str()).unwrap_or("");
    if ext != "rgf" && ext != "rmd" {
        return Err(Usage(format!("{}: expected a .rgf or .rmd file", path.display())).into());
    }
    let text = std::fs::read_to_string(path)?;
    let located = |e: Error| match e {
        Error::Parse { line, column, message } => {
            Error::Parse { line, column, message: format!("{}: {message}", path.display()) }
        }
        other => other,
    };
    Ok(if ext == "rgf" {
        Input::Graph(parse_rgf(&text).map_err(located)?)
    } else {
        Input::Descriptor(parse_bordered_rmd(&text).map_err(located)?)
    })
}

fn graph(path: &Path) -> std::result::Result<RepGraph, Failure> {
    match read(path)? {
        Input::Graph(g) => Ok(g),
        Input::Descriptor(_) => Err(Usage(format!("{}: this command takes a .rgf graph", path.display())).into()),
    }
}

fn descriptor(path: &Path) -> std::result::Result<BorderedDescriptor, Failure> {
    match read(path)? {
        Input::Descriptor(d) => Ok(d),
        Input::Graph(_) => Err(Usage(format!("{}: this command takes a .rmd descriptor", path.display())).into()),
    }
}

fn counts_line(counts: &[usize]) -> String {
    let c: Vec<String> = counts.iter().map(ToString::to_string).collect();
    format!("counts: {}", c.join(" "))
}

fn reeb(path: &Path, style: AssemblyStyle) -> std::result::Result<crate::polyhedron::SimplePolyhedron, Failure> {
    Ok(match read(path)? {
        Input::Graph(g) => assemble_from_repgraph(&g, style)?,
        Input::Descriptor(d) => from_fiber_graph(&fiber_graph(&d)?)?,
    })
}

fn execute(cmd: Command, out: &mut dyn Write) -> std::result::Result<ExitStatus, Failure> {
    match cmd {
        Command::Validate { file } => match read(&file)? {
            Input::Graph(g) => {
                let report = validate(&g);
                if !report.valid() {
                    for v in &report.violations {
                        writeln!(out, "[{}] {}", v.code, v.message)?;
                    }
                    return Ok(ExitStatus::INVALID);
                }
                if !g.is_connected() {
                    writeln!(out, "[disconnected] the graph is not connected")?;
                    return Ok(ExitStatus::INVALID);
                }
                writeln!(out, "valid: {} vertices, {} edges", g.vertices().len(), g.edges().len())?;
            }
            Input::Descriptor(d) => {
                let r = d.validate();
                for v in &r.report.violations {
                    writeln!(out, "[{}] {}", v.code, v.message)?;
                }
                if !r.valid() {
                    return Ok(ExitStatus::INVALID);
                }
                writeln!(out, "valid: {} circles, {} borders", d.base.l(), d.border_count())?;
                writeln!(out, "{}", counts_line(&r.counts()))?;
                for n in &r.report.notes {
                    writeln!(out, "note: {n}")?;
                }
            }
        },
        Command::Classify { file } => {
            let g = graph(&file)?;
            let r = classify(&g)?;
            writeln!(out, "tier: {}", r.tier)?;
            writeln!(out, "embedding: {}", r.embedding)?;
            writeln!(out, "genus: {}", r.genus)?;
            writeln!(out, "bounds: {}", invariant_bounds(&g)?)?;
            writeln!(out, "caveat: {}", r.caveat)?;
        }
        Command::Genus { file } => {
            let (g, _) = genus(&graph(&file)?.to_multigraph()?)?;
            writeln!(out, "genus: {g}")?;
        }
        Command::BuildRound { file, root } => {
            let d = build_with(&graph(&file)?, &BuildOptions { root })?;
            write!(out, "{}", print_rmd(&d))?;
        }
        Command::FiberGraph { file } => {
            let k = fiber_graph(&descriptor(&file)?)?;
            for v in k.vertices() {
                writeln!(out, "vertex {} {:?} height {}", v.id, v.kind, v.height)?;
            }
            for e in k.edges() {
                writeln!(out, "edge {} {} {}", e.component, k.vertices()[e.ends.0].id, k.vertices()[e.ends.1].id)?;
            }
        }
        Command::Reeb { file, style } => write!(out, "{}", reeb(&file, style)?.summary())?,
        Command::Euler { file, style } => writeln!(out, "euler: {}", euler_characteristic(&reeb(&file, style)?))?,
        Command::Smap { i1, i2, l, e1, e2 } => {
            let b = crate::roundmap::s_map_descriptor(i1, i2, l, e1, e2)?;
            write!(out, "{}", print_bordered_rmd(&b))?;
            writeln!(out, "# {}", counts_line(&b.base.region_counts()?))?;
        }
        Command::EmitSvg { file, output, scale } => {
            let input = read(&file)?;
            let svg = match &input {
                Input::Graph(g) => emit_svg(&DiagramSpec { scale, ..DiagramSpec::graph(g) }),
                Input::Descriptor(d) => {
                    let r = d.validate();
                    if !r.valid() {
                        return Err(Error::InvalidDescriptor(r.report).into());
                    }
                    emit_svg(&DiagramSpec { scale, ..DiagramSpec::descriptor(&d.base) })
                }
            };
            match output {
                Some(p) => std::fs::write(p, svg)?,
                None => write!(out, "{svg}")?,
            }
        }
        Command::Examples { name: None } => {
            for n in EXAMPLE_NAMES {
                writeln!(out, "{n}")?;
            }
        }
        Command::Examples { name: Some(n) } => write!(out, "{}", print_rgf(&canonical_example(&n)?))?,
    }
    Ok(ExitStatus::OK)
}

/// Runs one command line (program name first), writing to the given streams.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> ExitStatus
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { ExitStatus::USAGE } else { ExitStatus::OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { err.write_all(text.as_bytes()) } else { out.write_all(text.as_bytes()) };
            return code;
        }
    };
    match execute(cli.command, out) {
        Ok(s) => s,
        Err(Failure::Usage(m)) => {
            let _ = writeln!(err, "error: {m}");
            ExitStatus::USAGE
        }
        Err(Failure::Io(e)) => {
            let _ = writeln!(err, "error: {e}");
            ExitStatus::INVALID
        }
        Err(Failure::Lib(Error::Internal(m))) => {
            let _ = writeln!(err, "internal error: {m}");
            ExitStatus::INTERNAL
        }
        Err(Failure::Lib(e)) => {
            let _ = writeln!(err, "error: {e}");
            ExitStatus::INVALID
        }
    }
}
