//! Command-line front end. `run` takes the argument vector and two writers
//! and returns the process exit code, so it can be driven from tests.
//!
//! Exit codes: 0 success, 1 a check failed, 2 usage or parse error, 3 a
//! precondition of the requested operation does not hold. Output files are
//! written only after the whole command has succeeded.

use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::augment::{greedy_maximal, maximal_connected_fast, uncrossed_rays_brute, uncrossed_rays_fast};
use crate::drawing::{Drawing, Edge, VertexId};
use crate::error::Error;
use crate::generators::{gen_convex, gen_random, gen_seg_reduction, gen_tight, random_plane_tree, random_points, random_segments, SegmentInstance, MAX_SEGMENTS};
use crate::io;
use crate::optimize::{exact_max, maximize_connected, DEFAULT_LIMIT_N};
use crate::plane::PlaneSubgraph;
use crate::structure::structure_violations;
use crate::svg::render_svg;

/// Inputs above this size skip the full validity check on load.
pub const VALIDATE_MAX_N: usize = 64;

#[derive(Parser, Debug)]
#[command(name = "kn-plane", version, about = "Plane subgraphs of simple drawings of K_n")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Generate a drawing or a segment instance.
    Gen {
        #[command(subcommand)]
        kind: GenKind,
    },
    /// Check a property; exit 1 if it fails.
    Check {
        #[arg(long, value_enum)]
        what: CheckWhat,
        #[command(flatten)]
        input: Input,
    },
    /// Extend the edge set to a maximal plane subgraph.
    Augment {
        #[arg(long, conflicts_with = "fast_connected", required_unless_present = "fast_connected")]
        greedy: bool,
        #[arg(long)]
        fast_connected: bool,
        #[command(flatten)]
        input: Input,
        /// Write the resulting edge set here.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Largest plane superset of the edge set.
    Maximize {
        #[arg(long, conflicts_with = "exact", required_unless_present = "exact")]
        dp: bool,
        #[arg(long)]
        exact: bool,
        #[arg(long, default_value_t = DEFAULT_LIMIT_N)]
        limit_n: usize,
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Edges at a vertex that cross no edge of the subgraph.
    Rays {
        #[arg(long)]
        vertex: u32,
        /// Use the linear sweep (needs a connected subgraph).
        #[arg(long)]
        fast: bool,
        #[command(flatten)]
        input: Input,
    },
    /// Build the drawing encoding a segment instance.
    Reduce {
        #[arg(long)]
        segments: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
        /// Also write the guard edges `u v`, `w v` of every gadget.
        #[arg(long)]
        guards_out: Option<PathBuf>,
    },
    /// Straight-line SVG of a drawing given by points.
    Render {
        #[arg(long)]
        points: Option<PathBuf>,
        #[arg(long, conflicts_with = "points")]
        drawing: Option<PathBuf>,
        /// Edges to highlight.
        #[arg(long)]
        edges: Option<PathBuf>,
        #[arg(long)]
        out: PathBuf,
    },
    /// Time the linear and the brute-force ray computations.
    Bench {
        #[arg(long, value_delimiter = ',', default_value = "64,128,256")]
        sizes: Vec<usize>,
        #[arg(long)]
        seed: u64,
        #[arg(long, default_value_t = 3)]
        reps: usize,
    },
}

#[derive(Subcommand, Debug)]
enum GenKind {
    /// Points on a circle.
    Convex {
        n: usize,
        #[command(flatten)]
        out: GenOut,
    },
    /// Random points in general position.
    Random {
        n: usize,
        #[arg(long)]
        seed: u64,
        #[command(flatten)]
        out: GenOut,
    },
    /// Drawing with a maximal plane subgraph of the smallest possible size.
    Tight {
        n: usize,
        #[arg(long)]
        out: Option<PathBuf>,
        /// Write the designated maximal edge set here.
        #[arg(long)]
        edges_out: Option<PathBuf>,
    },
    /// Random segment instance.
    Seg {
        s: usize,
        #[arg(long)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Args, Debug)]
struct GenOut {
    /// Rotation system; standard output if absent.
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long)]
    points_out: Option<PathBuf>,
}

#[derive(Args, Debug)]
#[group(required = true, multiple = false, id = "source")]
struct Source {
    /// Rotation system (`.rot`).
    #[arg(long)]
    drawing: Option<PathBuf>,
    /// Point set (`.pts`); the drawing is the straight-line one.
    #[arg(long)]
    points: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct Input {
    #[command(flatten)]
    source: Source,
    /// Plane subgraph (`.edg`); empty if absent.
    #[arg(long)]
    edges: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum CheckWhat {
    Valid,
    Plane,
    Maximal,
    Structure,
}

/// How a command ended, before it is turned into an exit code.
enum Failure {
    Usage(String),
    CheckFailed(String),
    Precondition(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Parse { .. } | Error::InvalidDrawing(_) | Error::Io(_) => {
                Failure::Usage(e.to_string())
            }
            Error::Precondition(_) | Error::Inconsistent(_) => Failure::Precondition(e.to_string()),
        }
    }
}

/// Text for standard output plus files to write once everything succeeded.
#[derive(Default)]
struct Output {
    stdout: String,
    stderr: String,
    files: Vec<(PathBuf, String)>,
}

impl Output {
    fn line(&mut self, s: impl AsRef<str>) {
        self.stdout.push_str(s.as_ref());
        self.stdout.push('\n');
    }

    fn note(&mut self, s: impl AsRef<str>) {
        self.stderr.push_str(s.as_ref());
        self.stderr.push('\n');
    }

    /// To `path`, or to standard output when there is none.
    fn emit(&mut self, path: Option<&PathBuf>, text: String) {
        match path {
            Some(p) => self.files.push((p.clone(), text)),
            None => self.stdout.push_str(&text),
        }
    }

    fn file(&mut self, path: Option<&PathBuf>, text: String) {
        if let Some(p) = path {
            self.files.push((p.clone(), text));
        }
    }
}

type Outcome = std::result::Result<Output, Failure>;

pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                let _ = stderr.write_all(text.as_bytes());
                2
            } else {
                let _ = stdout.write_all(text.as_bytes());
                0
            };
        }
    };
    let (code, out, msg) = match dispatch(cli.command) {
        Ok(out) => match write_files(&out.files) {
            Ok(()) => (0, out, None),
            Err(e) => (2, Output::default(), Some(e)),
        },
        Err(Failure::Usage(m)) => (2, Output::default(), Some(m)),
        Err(Failure::CheckFailed(m)) => (1, Output::default(), Some(m)),
        Err(Failure::Precondition(m)) => (3, Output::default(), Some(m)),
    };
    let _ = stdout.write_all(out.stdout.as_bytes());
    let _ = stderr.write_all(out.stderr.as_bytes());
    if let Some(m) = msg {
        let _ = writeln!(stderr, "error: {m}");
    }
    code
}

fn write_files(files: &[(PathBuf, String)]) -> std::result::Result<(), String> {
    for (p, text) in files {
        std::fs::write(p, text).map_err(|e| format!("cannot write {}: {e}", p.display()))?;
    }
    Ok(())
}

fn read(p: &Path) -> std::result::Result<String, Failure> {
    std::fs::read_to_string(p).map_err(|e| Failure::Usage(format!("cannot read {}: {e}", p.display())))
}

fn load_drawing(src: &Source) -> std::result::Result<Drawing, Failure> {
    match (&src.drawing, &src.points) {
        (Some(p), _) => Ok(io::parse_drawing(&read(p)?)?),
        (None, Some(p)) => Ok(Drawing::from_points(&io::parse_points(&read(p)?)?)?),
        (None, None) => Err(Failure::Usage("one of --drawing or --points is required".into())),
    }
}

/// Loads the drawing and refuses drawings that are not good, as far as the
/// size allows checking.
fn load_valid(src: &Source) -> std::result::Result<Drawing, Failure> {
    let d = load_drawing(src)?;
    if d.n() <= VALIDATE_MAX_N {
        let report = d.validate();
        if let Some(v) = report.violations.first() {
            return Err(Failure::Precondition(format!("not a good drawing: {v}")));
        }
    }
    Ok(d)
}

fn load_edges(p: Option<&PathBuf>) -> std::result::Result<Vec<Edge>, Failure> {
    match p {
        Some(p) => Ok(io::parse_edges(&read(p)?)?),
        None => Ok(Vec::new()),
    }
}

fn dispatch(cmd: Command) -> Outcome {
    match cmd {
        Command::Gen { kind } => generate(kind),
        Command::Check { what, input } => check(what, &input),
        Command::Augment { greedy, input, out, .. } => {
            let d = load_valid(&input.source)?;
            let f = PlaneSubgraph::new(&d, load_edges(input.edges.as_ref())?)?;
            let g = if greedy { greedy_maximal(&d, f.edges())? } else { maximal_connected_fast(&f)? };
            Ok(edge_result(&g, out.as_ref()))
        }
        Command::Maximize { dp, limit_n, input, out, .. } => {
            let d = load_valid(&input.source)?;
            let f = PlaneSubgraph::new(&d, load_edges(input.edges.as_ref())?)?;
            let g = if dp {
                if !f.is_spanning() || !f.is_connected() {
                    return Err(Failure::Precondition(
                        "--dp needs a connected spanning edge set".into(),
                    ));
                }
                maximize_connected(&f)?
            } else {
                exact_max(&d, f.edges(), limit_n)?
            };
            Ok(edge_result(&g, out.as_ref()))
        }
        Command::Rays { vertex, fast, input } => {
            let d = load_valid(&input.source)?;
            let f = PlaneSubgraph::new(&d, load_edges(input.edges.as_ref())?)?;
            if vertex == 0 || vertex as usize > d.n() {
                return Err(Failure::Precondition(format!("vertex {vertex} out of range 1..{}", d.n())));
            }
            let v = VertexId::new(vertex);
            let rays = if fast { uncrossed_rays_fast(&f, v)? } else { uncrossed_rays_brute(&f, v) };
            let mut out = Output::default();
            out.stdout = io::write_edges(rays);
            Ok(out)
        }
        Command::Reduce { segments, out, guards_out } => {
            let segs = io::parse_segments(&read(&segments)?)?;
            if segs.len() > MAX_SEGMENTS {
                return Err(Failure::Precondition(format!("at most {MAX_SEGMENTS} segments")));
            }
            let mut inst = SegmentInstance { segments: segs, k: 0 };
            inst.check()?;
            inst.k = inst.max_disjoint();
            let r = gen_seg_reduction(&inst)?;
            let mut o = Output::default();
            o.note(format!("disjoint segments {}, target edge count {}", inst.k, r.k_prime));
            o.emit(out.as_ref(), io::write_drawing(&r.drawing));
            o.file(guards_out.as_ref(), io::write_edges(r.guard_edges()));
            Ok(o)
        }
        Command::Render { points, drawing, edges, out } => {
            let src = Source { drawing, points };
            let d = load_drawing(&src)?;
            let hl = load_edges(edges.as_ref())?;
            let mut o = Output::default();
            o.files.push((out, render_svg(&d, &hl)?));
            Ok(o)
        }
        Command::Bench { sizes, seed, reps } => bench(&sizes, seed, reps),
    }
}

fn edge_result(g: &PlaneSubgraph<'_>, out: Option<&PathBuf>) -> Output {
    let mut o = Output::default();
    o.line(g.edge_count().to_string());
    o.file(out, io::write_edges(g.edges().iter().copied()));
    o
}

fn generate(kind: GenKind) -> Outcome {
    let mut o = Output::default();
    match kind {
        GenKind::Convex { n, out } => {
            let d = gen_convex(n)?;
            o.emit(out.out.as_ref(), io::write_drawing(&d));
            o.file(out.points_out.as_ref(), io::write_points(d.coords().expect("points")));
        }
        GenKind::Random { n, seed, out } => {
            if n < 3 {
                return Err(Failure::Precondition(format!("need n >= 3, got {n}")));
            }
            let pts = random_points(n, seed);
            o.emit(out.out.as_ref(), io::write_drawing(&Drawing::from_points(&pts)?));
            o.file(out.points_out.as_ref(), io::write_points(&pts));
        }
        GenKind::Tight { n, out, edges_out } => {
            let t = gen_tight(n)?;
            o.emit(out.as_ref(), io::write_drawing(&t.drawing));
            o.file(edges_out.as_ref(), io::write_edges(t.designated.iter().copied()));
        }
        GenKind::Seg { s, seed, out } => {
            let inst = random_segments(s, seed)?;
            o.emit(out.as_ref(), io::write_segments(&inst.segments));
        }
    }
    Ok(o)
}

fn check(what: CheckWhat, input: &Input) -> Outcome {
    let d = load_drawing(&input.source)?;
    let mut o = Output::default();
    if let CheckWhat::Valid = what {
        let report = d.validate();
        if let Some(v) = report.violations.first() {
            return Err(Failure::CheckFailed(format!("not a good drawing: {v}")));
        }
        o.line("valid");
        return Ok(o);
    }
    let edges = load_edges(input.edges.as_ref())?;
    if let Some(e) = edges.iter().find(|e| e.v().index() >= d.n()) {
        return Err(Failure::Precondition(format!("edge {e} is not in the drawing")));
    }
    let f = match PlaneSubgraph::new(&d, edges) {
        Ok(f) => f,
        Err(e) => return Err(Failure::CheckFailed(format!("not plane: {}", strip(&e)))),
    };
    match what {
        CheckWhat::Valid => unreachable!(),
        CheckWhat::Plane => o.line("plane"),
        CheckWhat::Maximal => match f.addable_edge() {
            Some(e) => return Err(Failure::CheckFailed(format!("not maximal: {e} can be added"))),
            None => o.line("maximal"),
        },
        CheckWhat::Structure => {
            let v = structure_violations(&f);
            if !v.is_empty() {
                let text: Vec<String> = v.iter().map(ToString::to_string).collect();
                return Err(Failure::CheckFailed(text.join("; ")));
            }
            o.line("maximal, spanning, 2-connected, essentially 3-edge-connected");
        }
    }
    Ok(o)
}

fn strip(e: &Error) -> String {
    match e {
        Error::Precondition(m) => m.clone(),
        other => other.to_string(),
    }
}

/// Slope of the least-squares line through `(ln x, ln y)`.
pub fn loglog_slope(xs: &[f64], ys: &[f64]) -> f64 {
    let lx: Vec<f64> = xs.iter().map(|x| x.ln()).collect();
    let ly: Vec<f64> = ys.iter().map(|y| y.ln()).collect();
    let k = lx.len() as f64;
    let (mx, my) = (lx.iter().sum::<f64>() / k, ly.iter().sum::<f64>() / k);
    let cov: f64 = lx.iter().zip(&ly).map(|(x, y)| (x - mx) * (y - my)).sum();
    let var: f64 = lx.iter().map(|x| (x - mx) * (x - mx)).sum();
    cov / var
}

/// Mean time per call of the fast and brute ray computations on a random
/// rectilinear drawing of size `n` with a random plane spanning tree, over
/// `reps` rounds of every vertex. Nanoseconds.
pub fn time_rays(n: usize, seed: u64, reps: usize) -> crate::error::Result<(f64, f64)> {
    let d = gen_random(n, seed)?;
    let f = random_plane_tree(&d, seed)?;
    let (mut fast, mut brute) = (0u128, 0u128);
    let mut calls = 0u128;
    for _ in 0..reps.max(1) {
        for v in d.vertices() {
            let t = Instant::now();
            let a = uncrossed_rays_fast(&f, v)?;
            fast += t.elapsed().as_nanos();
            let t = Instant::now();
            let b = uncrossed_rays_brute(&f, v);
            brute += t.elapsed().as_nanos();
            if a != b {
                return Err(Error::Inconsistent(format!("fast and brute rays differ at {v}")));
            }
            calls += 1;
        }
    }
    Ok((fast as f64 / calls as f64, brute as f64 / calls as f64))
}

fn bench(sizes: &[usize], seed: u64, reps: usize) -> Outcome {
    if sizes.len() < 2 || sizes.iter().any(|&n| n < 4) {
        return Err(Failure::Usage("--sizes needs at least two sizes, each >= 4".into()));
    }
    let mut o = Output::default();
    o.line("n fast_ns brute_ns");
    let (mut xs, mut fs, mut bs) = (Vec::new(), Vec::new(), Vec::new());
    for &n in sizes {
        let (f, b) = time_rays(n, seed ^ n as u64, reps)?;
        o.line(format!("{n} {f:.0} {b:.0}"));
        xs.push(n as f64);
        fs.push(f);
        bs.push(b);
    }
    o.line(format!("exponent fast {:.3}", loglog_slope(&xs, &fs)));
    o.line(format!("exponent brute {:.3}", loglog_slope(&xs, &bs)));
    Ok(o)
}
