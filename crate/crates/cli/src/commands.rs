use std::io::{Read, Write};
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use mutclass_core::io::{parse, serialize, to_dot};
use mutclass_core::verify::{check_closure, dynkin_seed, run_theorem_check, TheoremOptions, VerificationReport};
use mutclass_core::{enumerate_class, Diagram, IoError, Limits, TypeKind};

use crate::summary::{ClassifySummary, OrbitSummary};

pub const DEFAULT_ADDR: &str = "127.0.0.1:8080";

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExitCode {
    Ok = 0,
    Usage = 1,
    Input = 2,
    Unclassified = 3,
    VerifyFailed = 4,
}

#[derive(Debug, Parser)]
#[command(
    name = "mutclass",
    version,
    about = "Mutation classes of diagrams of type A, B, D and affine B, C, D"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print the mutation type and the matching family.
    Classify {
        /// Diagram document, `-` for stdin.
        file: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Mutate at the given vertices, in order.
    Mutate {
        file: PathBuf,
        /// Vertex id; repeat for a mutation sequence.
        #[arg(short = 'k', long = "vertex", required = true)]
        vertices: Vec<String>,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Enumerate the mutation class and count members per family.
    Orbit {
        file: PathBuf,
        #[arg(long, default_value_t = 100_000)]
        max_members: usize,
        #[arg(long)]
        json: bool,
    },
    /// Check classification and transition rules on enumerated classes.
    Verify(VerifyArgs),
    /// Print the Dynkin diagram of a type and rank.
    Seed {
        #[arg(value_name = "TYPE")]
        kind: TypeKind,
        rank: usize,
    },
    /// Graphviz source for a diagram.
    ExportDot { file: PathBuf },
    /// Start the HTTP service.
    Serve {
        #[arg(long, env = "MUTCLASS_ADDR", default_value = DEFAULT_ADDR)]
        addr: String,
    },
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long = "type", value_name = "TYPE", requires = "rank", conflicts_with = "all")]
    pub kind: Option<TypeKind>,
    #[arg(long, requires = "kind")]
    pub rank: Option<usize>,
    #[arg(long, requires = "max_rank", required_unless_present = "kind")]
    pub all: bool,
    #[arg(long)]
    pub max_rank: Option<usize>,
    /// Random recognizer-positive diagrams checked per seed.
    #[arg(long, default_value_t = 50)]
    pub samples: usize,
    #[arg(long)]
    pub json: bool,
}

#[derive(Debug, thiserror::Error)]
enum Failure {
    #[error("{0}")]
    Input(#[from] IoError),
    #[error("{0}")]
    Usage(String),
}

impl Failure {
    fn exit_code(&self) -> ExitCode {
        match self {
            Failure::Input(_) => ExitCode::Input,
            Failure::Usage(_) => ExitCode::Usage,
        }
    }
}

fn read_input(path: &Path) -> Result<Diagram, Failure> {
    let mut bytes = Vec::new();
    if path == Path::new("-") {
        std::io::stdin().read_to_end(&mut bytes).map_err(IoError::from)?;
    } else {
        bytes = std::fs::read(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
    }
    Ok(parse(&bytes)?)
}

fn write_output(path: Option<&Path>, text: &str) -> Result<(), Failure> {
    match path {
        Some(p) if p != Path::new("-") => std::fs::write(p, text).map_err(IoError::from)?,
        _ => std::io::stdout().write_all(text.as_bytes()).map_err(IoError::from)?,
    }
    Ok(())
}

fn vertex_index(d: &Diagram, id: &str) -> Result<usize, Failure> {
    d.vertices()
        .find(|&v| d.vertex_id(v) == id)
        .ok_or_else(|| Failure::Usage(format!("no vertex with id `{id}`")))
}

fn verify_one(kind: TypeKind, rank: usize, samples: usize) -> Result<Vec<VerificationReport>, Failure> {
    let opts = TheoremOptions {
        samples,
        ..TheoremOptions::default()
    };
    let usage = |e: mutclass_core::VerifyError| Failure::Usage(e.to_string());
    let mut reports = vec![run_theorem_check(kind, rank, opts).map_err(usage)?];
    if kind.is_affine() {
        let seed = dynkin_seed(kind, rank).map_err(usage)?;
        let class = enumerate_class(&seed, Limits::default()).map_err(|e| Failure::Usage(e.to_string()))?;
        reports.push(check_closure(
            &format!("closure/{kind}({rank})"),
            class.members.values(),
            None,
        ));
    }
    Ok(reports)
}

fn verify(args: &VerifyArgs) -> Result<ExitCode, Failure> {
    let runs: Vec<(TypeKind, usize)> = match (args.kind, args.rank, args.max_rank) {
        (Some(k), Some(r), _) => vec![(k, r)],
        (None, _, Some(max)) => TypeKind::ALL
            .into_iter()
            .flat_map(|k| (k.min_rank()..=max).map(move |r| (k, r)))
            .collect(),
        _ => return Err(Failure::Usage("give --type and --rank, or --all and --max-rank".into())),
    };
    let mut ok = true;
    for (kind, rank) in runs {
        for report in verify_one(kind, rank, args.samples)? {
            ok &= report.passed();
            if args.json {
                println!("{}", report.to_json());
            } else {
                print!("{}", report.to_text(5));
            }
        }
    }
    Ok(if ok { ExitCode::Ok } else { ExitCode::VerifyFailed })
}

fn execute(cli: Cli) -> Result<ExitCode, Failure> {
    match cli.command {
        Command::Classify { file, json } => {
            let s = ClassifySummary::of(&read_input(&file)?);
            if json {
                println!("{}", serde_json::to_string(&s).expect("summary serializes"));
            } else {
                println!("{}", s.to_text());
            }
            Ok(if s.is_known() {
                ExitCode::Ok
            } else {
                ExitCode::Unclassified
            })
        }
        Command::Mutate { file, vertices, output } => {
            let mut d = read_input(&file)?;
            for id in &vertices {
                let k = vertex_index(&d, id)?;
                d = d.mutate(k).map_err(|e| Failure::Usage(e.to_string()))?;
            }
            write_output(output.as_deref(), &serialize(&d))?;
            Ok(ExitCode::Ok)
        }
        Command::Orbit {
            file,
            max_members,
            json,
        } => {
            let d = read_input(&file)?;
            let limits = Limits {
                max_members,
                ..Limits::default()
            };
            let s = OrbitSummary::of(&d, limits).map_err(|e| Failure::Usage(e.to_string()))?;
            if json {
                println!("{}", serde_json::to_string(&s).expect("summary serializes"));
            } else {
                print!("{}", s.to_text());
            }
            Ok(ExitCode::Ok)
        }
        Command::Verify(args) => verify(&args),
        Command::Seed { kind, rank } => {
            let d = dynkin_seed(kind, rank).map_err(|e| Failure::Usage(e.to_string()))?;
            write_output(None, &serialize(&d))?;
            Ok(ExitCode::Ok)
        }
        Command::ExportDot { file } => {
            write_output(None, &to_dot(&read_input(&file)?))?;
            Ok(ExitCode::Ok)
        }
        Command::Serve { addr } => {
            let rt = tokio::runtime::Runtime::new().map_err(IoError::from)?;
            rt.block_on(crate::service::serve(&addr))
                .map_err(|e| Failure::Usage(format!("{addr}: {e}")))?;
            Ok(ExitCode::Ok)
        }
    }
}

/// Runs one command, reporting errors on stderr.
pub fn run(cli: Cli) -> ExitCode {
    execute(cli).unwrap_or_else(|e| {
        eprintln!("error: {e}");
        e.exit_code()
    })
}
