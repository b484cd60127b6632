//! `tilecheck`: JSON in, JSON (or SVG) out.
//!
//! Exit status is 0 when the answer is positive (verified, matched, listed),
//! 1 when it is negative, 2 on bad input or any other error.

use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{anyhow, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};
use serde_json::json;
use tilecheck::classify::{archimedean_vertex_check, classify, Tolerances, Verdict, VertexType};
use tilecheck::multi::{bolle_check, lattice_multiplicity_search_with, FamilyParam, MultiTilingInstance};
use tilecheck::oracle::{run, OracleConfig, OracleMode, DEFAULT_SEGMENT_CAP};
use tilecheck::svg::{render_svg, SvgStyle};
use tilecheck::wheel::{build_patch, check_wheel_equation_with, Window};
use tilecheck::{ConvexPolygon, Execution, Lattice2, Point2, Rational};

#[derive(Parser)]
#[command(name = "tilecheck", version, about = "Exact checks for plane tilings by convex polygons")]
struct Cli {
    /// Write the payload here instead of stdout.
    #[arg(long, short, global = true)]
    output: Option<PathBuf>,
    /// Run single-threaded.
    #[arg(long, global = true)]
    sequential: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Input {
    /// JSON input file; stdin when neither this nor --json is given.
    #[arg(long, short)]
    input: Option<PathBuf>,
    /// Inline JSON input.
    #[arg(long, conflicts_with = "input")]
    json: Option<String>,
}

#[derive(Args)]
struct FamilyArgs {
    /// sevenfold, octA, octB, octAPrime, octBPrime or decagon.
    #[arg(long)]
    name: String,
    /// Family parameter `p/q`; for decagons the first vertex `x,y`.
    #[arg(long, allow_hyphen_values = true)]
    param: Option<String>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    Exact,
    Sampled,
}

#[derive(Subcommand)]
enum Command {
    /// Match a pentagon or hexagon against the tile types.
    Classify(Input),
    /// Bolle's criterion for a polygon and a lattice.
    Bolle(Input),
    /// Brute-force covering multiplicity of an instance.
    Verify {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_enum, default_value = "exact")]
        mode: Mode,
        #[arg(long, default_value_t = 10_000)]
        samples: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = DEFAULT_SEGMENT_CAP)]
        segment_cap: usize,
    },
    /// Emit a member of a shipped family as an instance.
    Family(FamilyArgs),
    /// Check the wheel equation at every vertex of a patch.
    Wheels {
        #[command(flatten)]
        family: FamilyArgs,
        /// Half side of the square window.
        #[arg(long, default_value = "4")]
        window: String,
    },
    /// Smallest fold over lattices reachable with the given pool bound.
    Search {
        #[command(flatten)]
        input: Input,
        #[arg(long, default_value_t = 4)]
        pool_bound: u64,
    },
    /// SVG drawing of a family patch.
    Render {
        #[command(flatten)]
        family: FamilyArgs,
        #[arg(long, default_value = "3")]
        window: String,
        #[arg(long)]
        mark_lattice: bool,
    },
    /// Vertex type of a cyclic sequence of regular polygons.
    Archimedean {
        #[arg(required = true)]
        sequence: Vec<u32>,
    },
}

fn read_json<T: for<'de> Deserialize<'de>>(input: &Input) -> Result<T> {
    let text = match (&input.json, &input.input) {
        (Some(s), _) => s.clone(),
        (None, Some(path)) => std::fs::read_to_string(path)
            .with_context(|| format!("reading {}", path.display()))
            ?,
        (None, None) => {
            let mut s = String::new();
            io::stdin().read_to_string(&mut s).context("reading stdin")?;
            s
        }
    };
    serde_json::from_str(&text).context("malformed input")
}

fn rational(s: &str) -> Result<Rational> {
    s.parse().with_context(|| format!("bad rational {s:?}"))
}

fn family(args: &FamilyArgs) -> Result<MultiTilingInstance> {
    let param = || -> Result<Rational> {
        rational(args.param.as_deref().ok_or_else(|| anyhow!("--param is required for {}", args.name))?)
    };
    let f = match args.name.as_str() {
        "sevenfold" => FamilyParam::SevenFold,
        "octA" => FamilyParam::OctA(param()?),
        "octB" => FamilyParam::OctB(param()?),
        "octAPrime" => FamilyParam::OctAPrime(param()?),
        "octBPrime" => FamilyParam::OctBPrime(param()?),
        "decagon" => {
            let p = args.param.as_deref().ok_or_else(|| anyhow!("--param x,y is required for decagon"))?;
            let (x, y) = p.split_once(',').ok_or_else(|| anyhow!("decagon vertex must be x,y"))?;
            FamilyParam::Decagon(Point2::new(rational(x)?, rational(y)?))
        }
        other => return Err(anyhow!("unknown family {other:?}")),
    };
    Ok(f.instance()?)
}

#[derive(Deserialize)]
struct PolygonLattice {
    polygon: ConvexPolygon,
    lattice: Lattice2,
}

/// Payload plus whether the answer is positive.
enum Payload {
    Json(serde_json::Value, bool),
    Text(String),
}

fn json_of<T: Serialize>(v: &T) -> serde_json::Value {
    serde_json::to_value(v).expect("serializable")
}

fn execute(cli: &Cli) -> Result<Payload> {
    let exec = if cli.sequential {
        Execution::Sequential
    } else {
        Execution::Parallel
    };
    Ok(match &cli.command {
        Command::Classify(input) => {
            let p: ConvexPolygon = read_json(input)?;
            let report = classify(&p, Tolerances::default())?;
            let ok = report.verdict == Verdict::Tile;
            Payload::Json(json_of(&report), ok)
        }
        Command::Bolle(input) => {
            let pl: PolygonLattice = read_json(input)?;
            match bolle_check(&pl.polygon, &pl.lattice) {
                Ok(fold) => Payload::Json(json!({ "fold": fold }), true),
                Err(failure) => Payload::Json(json!({ "failure": json_of(&failure) }), false),
            }
        }
        Command::Verify {
            input,
            mode,
            samples,
            seed,
            segment_cap,
        } => {
            let inst: MultiTilingInstance = read_json(input)?;
            let mode = match mode {
                Mode::Exact => OracleMode::Exact,
                Mode::Sampled => OracleMode::Sampled { n: *samples, seed: *seed },
            };
            let config = OracleConfig {
                segment_cap: *segment_cap,
                exec,
            };
            let report = run(&inst, mode, config)?;
            let verified = match mode {
                OracleMode::Exact => report.uniform && report.fold == Some(inst.fold),
                OracleMode::Sampled { .. } => report.fold == Some(inst.fold),
            };
            Payload::Json(
                json!({ "claimed_fold": inst.fold, "verified": verified, "report": json_of(&report) }),
                verified,
            )
        }
        Command::Family(args) => Payload::Json(json_of(&family(args)?), true),
        Command::Wheels { family: args, window } => {
            let inst = family(args)?;
            let patch = build_patch(&inst.polygon, &inst.lattice, Window::square(rational(window)?))?;
            let report = check_wheel_equation_with(&patch, exec);
            let ok = report.passed;
            Payload::Json(json_of(&report), ok)
        }
        Command::Search { input, pool_bound } => {
            let p: ConvexPolygon = read_json(input)?;
            let hit = lattice_multiplicity_search_with(&p, *pool_bound, exec);
            let found = hit.is_some();
            Payload::Json(json!({ "pool_bound": pool_bound, "hit": json_of(&hit) }), found)
        }
        Command::Render {
            family: args,
            window,
            mark_lattice,
        } => {
            let inst = family(args)?;
            let patch = build_patch(&inst.polygon, &inst.lattice, Window::square(rational(window)?))?;
            let style = SvgStyle {
                mark_lattice_points: *mark_lattice,
                ..SvgStyle::default()
            };
            Payload::Text(render_svg(&patch, &style))
        }
        Command::Archimedean { sequence } => {
            let t = archimedean_vertex_check(sequence);
            Payload::Json(json!({ "sequence": sequence, "type": json_of(&t) }), t == VertexType::Listed)
        }
    })
}

fn emit(cli: &Cli, text: &str) -> Result<()> {
    match &cli.output {
        Some(path) => std::fs::write(path, text).with_context(|| format!("writing {}", path.display())),
        None => {
            let mut out = io::stdout().lock();
            out.write_all(text.as_bytes())?;
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = execute(&cli).and_then(|payload| {
        let (text, ok) = match payload {
            Payload::Json(v, ok) => (format!("{}\n", serde_json::to_string_pretty(&v)?), ok),
            Payload::Text(t) => (t, true),
        };
        emit(&cli, &text)?;
        Ok(ok)
    });
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
