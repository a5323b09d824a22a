use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use tilelab_core::geometry::{
    boundary_union_cloud_limited, render_bytes, tile_cloud_limited, DEFAULT_BOUNDARY_DEPTH_MAX, DEFAULT_TILE_DEPTH_MAX,
};
use tilelab_core::verify::number_system_witnesses;
use tilelab_core::{
    build_gifs, build_neighbor_graph, contact_matrix, dimension_report, is_irreducible, is_number_system,
    validate_poly, verify, ImageFormat, Suite, TileError, TilePoly,
};

const DEPTH_ENV: &str = "TILELAB_DEPTH_MAX";

#[derive(Parser)]
#[command(name = "tilelab", version, about = "Boundaries of disk-like self-affine tiles for x^2 + px + q")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(clap::Args)]
struct PolyArgs {
    #[arg(long, allow_negative_numbers = true)]
    p: i64,
    #[arg(long, allow_negative_numbers = true)]
    q: i64,
}

#[derive(clap::Args)]
struct Output {
    #[arg(long, value_enum)]
    format: Option<Format>,
    /// Write to a file instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Family, number-system witnesses and boundary dimension.
    Analyze {
        #[command(flatten)]
        poly: PolyArgs,
    },
    /// Neighbor graph (txt or dot).
    Graph {
        #[command(flatten)]
        poly: PolyArgs,
        #[command(flatten)]
        out: Output,
    },
    /// Contact matrix (csv or txt).
    Matrix {
        #[command(flatten)]
        poly: PolyArgs,
        #[command(flatten)]
        out: Output,
    },
    /// Maps of the graph-directed system for the boundary pieces.
    Gifs {
        #[command(flatten)]
        poly: PolyArgs,
        #[command(flatten)]
        out: Output,
    },
    /// Render the tile or its boundary as PPM or SVG.
    Render {
        #[command(flatten)]
        poly: PolyArgs,
        #[arg(long, value_enum, default_value = "tile")]
        target: Target,
        #[arg(long, default_value_t = 10)]
        depth: u32,
        /// Output image; the extension picks the format (.ppm or .svg).
        #[arg(long)]
        out: PathBuf,
        #[arg(long, default_value_t = 512)]
        width: u32,
    },
    /// Run a fixture suite: appendixA, appendixB, appendixC, theorem26, theorem39 or all.
    Verify { scope: Suite },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Csv,
    Dot,
    Txt,
}

#[derive(Clone, Copy, ValueEnum)]
enum Target {
    Tile,
    Boundary,
}

enum Failure {
    Input(String),
    Internal(String),
}

impl From<TileError> for Failure {
    fn from(e: TileError) -> Self {
        use TileError::*;
        match e {
            DegenerateDeterminant(_) | NotExpanding { .. } | NotDiskLike { .. } | DigitOutOfRange { .. }
            | DepthTooLarge { .. } | BadWidth(_) | NotANumberSystem { .. } | NotANeighbor(_) | UnknownVertex(_)
            | EmptyPeriod | Parse(_) => Failure::Input(e.to_string()),
            _ => Failure::Internal(e.to_string()),
        }
    }
}

type Outcome = Result<(), Failure>;

fn yes(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn depth_limit(default: u32) -> Result<u32, Failure> {
    match std::env::var(DEPTH_ENV) {
        Ok(s) => s.trim().parse().map_err(|_| Failure::Input(format!("{DEPTH_ENV}={s} is not a depth"))),
        Err(_) => Ok(default),
    }
}

fn emit(text: &str, out: &Option<PathBuf>) -> Outcome {
    match out {
        Some(path) => std::fs::write(path, text).map_err(|e| Failure::Internal(format!("{}: {e}", path.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn pick(format: Option<Format>, allowed: &[Format], what: &str) -> Result<Format, Failure> {
    let f = format.unwrap_or(allowed[0]);
    if allowed.contains(&f) {
        Ok(f)
    } else {
        Err(Failure::Input(format!("{what} does not support that format")))
    }
}

fn analyze(poly: &TilePoly) -> Result<String, Failure> {
    let g = build_neighbor_graph(poly)?;
    let m = contact_matrix(&g, poly)?;
    let w = number_system_witnesses(poly, &is_number_system, 10)?;
    let r = dimension_report(poly)?;
    let mut s = String::new();
    let _ = writeln!(s, "polynomial: {poly}");
    let _ = writeln!(s, "family: {} ({})", poly.family().number(), poly.family().name());
    let _ = writeln!(s, "disk-like: {}", yes(poly.disk_like()));
    let _ = writeln!(s, "similarity: {}", yes(poly.similarity()));
    let _ = writeln!(s, "number system: {}", yes(w.arithmetic));
    let _ = writeln!(s, "  p >= -1 and q >= 2: {}", yes(w.arithmetic));
    let _ = writeln!(s, "  origin interior to the tile: {}", yes(w.origin_interior));
    let _ = writeln!(s, "  finite expansions on the box |l| <= 10: {}", yes(w.box_terminates));
    let _ = writeln!(s, "  all neighbors have digit expansions: {}", yes(w.neighbors_represented));
    if !w.consistent() {
        return Err(Failure::Internal("number-system witnesses disagree".into()));
    }
    let _ = writeln!(s, "neighbors: {}", g.len());
    let _ = writeln!(s, "contact matrix irreducible: {}", yes(is_irreducible(&m)));
    let _ = writeln!(s, "char poly: {}", r.char_poly);
    let _ = writeln!(s, "spectral radius: {:.10}", r.rho);
    let _ = writeln!(s, "cubic: {} (largest root {:.10})", r.cubic, r.cubic_root);
    if poly.p() == 0 {
        let _ = writeln!(s, "square tile, dim = 1");
    } else {
        let _ = writeln!(s, "dim: {:.6}", r.dim_generalized);
        if r.conjectural {
            let _ = writeln!(s, "cubic dim: {:.6} (not a similarity; unproven)", r.dim_cubic);
        }
    }
    Ok(s)
}

fn run(cmd: Command) -> Outcome {
    match cmd {
        Command::Analyze { poly } => {
            let poly = validate_poly(poly.p, poly.q)?;
            print!("{}", analyze(&poly)?);
            Ok(())
        }
        Command::Graph { poly, out } => {
            let poly = validate_poly(poly.p, poly.q)?;
            let g = build_neighbor_graph(&poly)?;
            let text = match pick(out.format, &[Format::Txt, Format::Dot], "graph")? {
                Format::Dot => g.to_dot(),
                _ => g.to_text(),
            };
            emit(&text, &out.out)
        }
        Command::Matrix { poly, out } => {
            let poly = validate_poly(poly.p, poly.q)?;
            let m = contact_matrix(&build_neighbor_graph(&poly)?, &poly)?;
            let text = match pick(out.format, &[Format::Csv, Format::Txt], "matrix")? {
                Format::Csv => m.to_csv(),
                _ => m.entries().iter().fold(String::new(), |mut s, row| {
                    let cells: Vec<String> = row.iter().map(|x| x.to_string()).collect();
                    let _ = writeln!(s, "{}", cells.join(" "));
                    s
                }),
            };
            emit(&text, &out.out)
        }
        Command::Gifs { poly, out } => {
            let poly = validate_poly(poly.p, poly.q)?;
            pick(out.format, &[Format::Txt], "gifs")?;
            let gs = build_gifs(&build_neighbor_graph(&poly)?, &poly)?;
            emit(&gs.to_text(), &out.out)
        }
        Command::Render { poly, target, depth, out, width } => {
            let poly = validate_poly(poly.p, poly.q)?;
            let format = ImageFormat::from_path(&out)
                .ok_or_else(|| Failure::Input(format!("{}: use a .ppm or .svg extension", out.display())))?;
            let cloud = match target {
                Target::Tile => tile_cloud_limited(&poly, depth, depth_limit(DEFAULT_TILE_DEPTH_MAX)?)?,
                Target::Boundary => {
                    let gs = build_gifs(&build_neighbor_graph(&poly)?, &poly)?;
                    boundary_union_cloud_limited(&gs, depth, depth_limit(DEFAULT_BOUNDARY_DEPTH_MAX)?)?
                }
            };
            let bytes = render_bytes(&cloud, format, width)?;
            std::fs::write(&out, bytes).map_err(|e| Failure::Internal(format!("{}: {e}", out.display())))
        }
        Command::Verify { scope } => {
            let report = verify(scope);
            print!("{}", report.to_text());
            if report.passed() {
                Ok(())
            } else {
                Err(Failure::Internal(format!("{} case(s) failed", report.failures())))
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Internal(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}
