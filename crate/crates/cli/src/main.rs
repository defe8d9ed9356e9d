use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand};

use xray_core::builtins;
use xray_core::{
    chamber_survey, decide_extension_criterion, enumerate_compatible_cones,
    enumerate_compatible_polytopes, enumerate_compatible_polytopes_oracle, fig2_family, glue,
    instantiate, isomorphic, load, non_extendable_cones, parse_scalar, product, render_svg, save,
    validate, walls, xray_from_toric, InstantiationResult, LatticePolytope, RenderStyle, Scalar,
    SliceSpec, SubtorusEmbedding, Verdict, XRay,
};

/// Exact combinatorics of x-rays of Hamiltonian torus actions.
#[derive(Parser)]
#[command(name = "xray", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Source {
    /// An xray/1 file, or the name of a builtin x-ray.
    source: Option<String>,
    /// Builtin x-ray name (ex21, ex22, fig2, segment).
    #[arg(long)]
    example: Option<String>,
}

#[derive(Subcommand)]
enum Command {
    /// Print or export a builtin x-ray.
    Example {
        name: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check the structural invariants; exit 1 if any fails.
    Validate {
        #[command(flatten)]
        src: Source,
    },
    /// Decide the extension criterion; exit 1 if it fails.
    Criterion {
        #[command(flatten)]
        src: Source,
        /// Also list every compatible cone without an extension.
        #[arg(long)]
        witness: bool,
    },
    /// List compatible polytopes of a dimension, or compatible cones.
    Enumerate {
        #[command(flatten)]
        src: Source,
        #[arg(long, default_value_t = 2)]
        dim: isize,
        /// Use the exhaustive subset oracle.
        #[arg(long)]
        oracle: bool,
        /// List strictly convex compatible cones instead.
        #[arg(long, conflicts_with = "oracle")]
        cones: bool,
    },
    /// Glue the part of A below a slice to the part of B above it.
    Glue {
        #[arg(long)]
        a: String,
        #[arg(long)]
        b: String,
        /// Slice normal, e.g. 0,1.
        #[arg(long, allow_hyphen_values = true)]
        normal: String,
        /// Slice level, e.g. 3/2.
        #[arg(long, allow_hyphen_values = true)]
        level: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Decide whether two x-rays are isomorphic; exit 1 if not.
    Isomorphic { x: String, y: String },
    /// X-ray of a toric manifold restricted to a subtorus.
    Toric {
        /// lp/1 lattice polytope file.
        #[arg(long)]
        poly: PathBuf,
        /// Embedding matrix, rows separated by ';', e.g. "1,0;1,0;0,1".
        #[arg(long, allow_hyphen_values = true)]
        embed: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Instantiate the fig2 deformation family at (s,t); exit 1 unless realizable.
    Deform {
        /// Parameters, e.g. 2,3.
        #[arg(long, allow_hyphen_values = true)]
        at: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Walls of the fig2 family and a survey of sample parameters.
    Chambers {
        /// Sample (s,t); may repeat. Defaults to one point per chamber.
        #[arg(long = "sample", allow_hyphen_values = true)]
        samples: Vec<String>,
    },
    /// Product of two x-rays.
    Product {
        x: String,
        y: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Draw a rank-2 x-ray as SVG.
    Render {
        #[command(flatten)]
        src: Source,
        /// Dashed slice "normal:level", e.g. "0,1:3/2"; may repeat.
        #[arg(long = "slice", allow_hyphen_values = true)]
        slices: Vec<String>,
        #[arg(long, default_value_t = 40)]
        scale: i64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

const DEFAULT_SAMPLES: [&str; 5] = ["1,3", "2,3", "2,1", "2,-1", "1,-2"];

fn resolve(name: &str) -> Result<XRay> {
    let path = Path::new(name);
    if path.is_file() {
        let bytes = fs::read(path).with_context(|| format!("reading {name}"))?;
        return load(&bytes).with_context(|| format!("loading {name}"));
    }
    builtins::by_name(name).ok_or_else(|| {
        anyhow!(
            "{name:?} is neither a file nor a builtin ({})",
            builtins::NAMES.join(", ")
        )
    })
}

impl Source {
    fn load(&self) -> Result<XRay> {
        match (&self.source, &self.example) {
            (Some(s), None) | (None, Some(s)) => resolve(s),
            (Some(_), Some(_)) => bail!("give either a source or --example, not both"),
            (None, None) => bail!("missing x-ray: give a file, a builtin name, or --example NAME"),
        }
    }
}

fn scalars(s: &str) -> Result<Vec<Scalar>> {
    s.split(',')
        .map(|x| parse_scalar(x.trim()).with_context(|| format!("in {s:?}")))
        .collect()
}

fn ints(s: &str) -> Result<Vec<i64>> {
    s.split(',')
        .map(|x| x.trim().parse::<i64>().with_context(|| format!("in {s:?}")))
        .collect()
}

fn parse_slice(s: &str) -> Result<SliceSpec> {
    let (n, c) = s
        .split_once(':')
        .ok_or_else(|| anyhow!("slice {s:?} is not normal:level"))?;
    Ok(SliceSpec::new(ints(n)?, parse_scalar(c.trim())?)?)
}

fn emit(bytes: &[u8], out: Option<&PathBuf>) -> Result<()> {
    match out {
        Some(p) => fs::write(p, bytes).with_context(|| format!("writing {}", p.display())),
        None => {
            print!("{}", String::from_utf8_lossy(bytes));
            Ok(())
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode> {
    let ok = |b: bool| {
        if b {
            ExitCode::SUCCESS
        } else {
            ExitCode::from(1)
        }
    };
    match cli.command {
        Command::Example { name, out } => {
            let x = builtins::by_name(&name).ok_or_else(|| {
                anyhow!("unknown builtin {name:?} ({})", builtins::NAMES.join(", "))
            })?;
            emit(&save(&x), out.as_ref())?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Validate { src } => {
            let report = validate(&src.load()?);
            print!("{report}");
            Ok(ok(report.is_valid()))
        }
        Command::Criterion { src, witness } => {
            let x = src.load()?;
            let verdict = decide_extension_criterion(&x)?;
            match &verdict {
                Verdict::Satisfied => println!("satisfied"),
                Verdict::FailsWith {
                    witness: c,
                    assignment,
                } => {
                    println!("fails");
                    println!("witness: {c}");
                    print!("{assignment}");
                }
            }
            if witness {
                for (c, _) in non_extendable_cones(&x)? {
                    println!("compatible, no extension: {c}");
                }
            }
            Ok(ok(verdict.is_satisfied()))
        }
        Command::Enumerate {
            src,
            dim,
            oracle,
            cones,
        } => {
            let x = src.load()?;
            if cones {
                for c in enumerate_compatible_cones(&x)? {
                    println!("{c}");
                }
            } else {
                let list = if oracle {
                    enumerate_compatible_polytopes_oracle(&x, dim)?
                } else {
                    enumerate_compatible_polytopes(&x, dim)?
                };
                println!("{} compatible polytopes of dimension {dim}", list.len());
                for p in list {
                    println!("{p}");
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Glue {
            a,
            b,
            normal,
            level,
            out,
        } => {
            let slice = SliceSpec::new(ints(&normal)?, parse_scalar(&level)?)?;
            let g = glue(&resolve(&a)?, &resolve(&b)?, &slice)?;
            emit(&save(&g), out.as_ref())?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Isomorphic { x, y } => match isomorphic(&resolve(&x)?, &resolve(&y)?) {
            Some(iso) => {
                for (a, b) in &iso.map {
                    println!("{a} -> {b}");
                }
                Ok(ExitCode::SUCCESS)
            }
            None => {
                println!("not isomorphic");
                Ok(ExitCode::from(1))
            }
        },
        Command::Toric { poly, embed, out } => {
            let bytes = fs::read(&poly).with_context(|| format!("reading {}", poly.display()))?;
            let p = LatticePolytope::from_json(&bytes)
                .with_context(|| format!("loading {}", poly.display()))?;
            let x = xray_from_toric(&p, &SubtorusEmbedding::parse(&embed)?)?;
            emit(&save(&x), out.as_ref())?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Deform { at, out } => {
            let result = instantiate(&fig2_family(), &scalars(&at)?)?;
            match &result {
                InstantiationResult::Realizable(_) => eprintln!("realizable"),
                InstantiationResult::Unrealizable { report, .. } => {
                    eprint!("unrealizable\n{report}")
                }
                InstantiationResult::Degenerate(ids) => eprintln!("degenerate: {}", ids.join(", ")),
            }
            if let Some(x) = result.xray() {
                emit(&save(x), out.as_ref())?;
            }
            Ok(ok(matches!(result, InstantiationResult::Realizable(_))))
        }
        Command::Chambers { samples } => {
            let fam = fig2_family();
            let ws: Vec<String> = walls(&fam).iter().map(|w| format!("{w} = 0")).collect();
            println!("walls: {}", ws.join(", "));
            let pts = if samples.is_empty() {
                DEFAULT_SAMPLES
                    .iter()
                    .map(|s| scalars(s))
                    .collect::<Result<Vec<_>>>()?
            } else {
                samples
                    .iter()
                    .map(|s| scalars(s))
                    .collect::<Result<Vec<_>>>()?
            };
            print!("{}", chamber_survey(&fam, &pts)?);
            Ok(ExitCode::SUCCESS)
        }
        Command::Product { x, y, out } => {
            emit(&save(&product(&resolve(&x)?, &resolve(&y)?)?), out.as_ref())?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Render {
            src,
            slices,
            scale,
            out,
        } => {
            if scale <= 0 {
                bail!("scale must be positive");
            }
            let overlays = slices
                .iter()
                .map(|s| parse_slice(s))
                .collect::<Result<Vec<_>>>()?;
            let style = RenderStyle {
                scale,
                ..RenderStyle::default()
            };
            emit(&render_svg(&src.load()?, &style, &overlays)?, out.as_ref())?;
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
