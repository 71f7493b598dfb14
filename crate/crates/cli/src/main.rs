//! `prelie`: build algebras, check identities, and find and verify
//! Rota–Baxter operators from the command line. Output is JSON.
//!
//! Exit codes: 0 when every verdict came out as expected, 1 when a
//! counterexample to a checked statement was found, 2 on usage errors.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::Value;

use prelie_core::algebra::builders::Family;
use prelie_core::algebra::identities::Identity;
use prelie_core::api::{self, AlgebraJson, Outcome};
use prelie_core::field::FieldDescriptor;
use prelie_core::finite::SearchConfig;
use prelie_core::verify::{self, Suite, VerifyConfig};

#[derive(Parser, Debug)]
#[command(name = "prelie", version, about = "Exact computations with the pre-Lie algebras I_n")]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct Global {
    /// Field: q, qi, gf<p>, gf9, <base>(sqrt<d>) or a JSON descriptor.
    #[arg(long, global = true, default_value = "q")]
    field: FieldDescriptor,
    /// Dimension (for `iinf`, the truncation index).
    #[arg(long, global = true)]
    n: Option<usize>,
    /// Weight λ, or `all` where a command accepts it.
    #[arg(long, global = true)]
    weight: Option<String>,
    /// Largest search space an exhaustive command may scan.
    #[arg(long, global = true)]
    cap: Option<u64>,
    /// Worker threads for exhaustive searches.
    #[arg(long, global = true)]
    workers: Option<usize>,
    /// Seed for randomized checks.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Write the JSON output here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
}

/// Where an algebra comes from: a JSON file, or a family with `--n` and
/// `--field`.
#[derive(Args, Debug)]
struct AlgebraSource {
    #[arg(long)]
    algebra: Option<PathBuf>,
    #[arg(long, default_value = "in")]
    family: Family,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print the structure constants of a family member.
    Build {
        #[arg(long, default_value = "in")]
        family: Family,
        /// Vector `a` for the dot-product family, comma-separated.
        #[arg(long, value_delimiter = ',')]
        a: Option<Vec<String>>,
    },
    /// Check identities on all basis tuples.
    CheckIdentity {
        #[command(flatten)]
        source: AlgebraSource,
        /// Identities to check, comma-separated; all by default.
        #[arg(long, value_delimiter = ',')]
        identity: Vec<Identity>,
    },
    /// Decide simplicity over a finite field.
    Simplicity {
        #[command(flatten)]
        source: AlgebraSource,
    },
    /// Basis of the derivation algebra.
    Derivations {
        #[command(flatten)]
        source: AlgebraSource,
    },
    /// Check a candidate automorphism or list them all.
    Automorphisms {
        #[command(flatten)]
        source: AlgebraSource,
        #[arg(long)]
        enumerate: bool,
        /// Matrix file, column j holding the image of e_j.
        #[arg(long)]
        candidate: Option<PathBuf>,
    },
    /// Test the Rota–Baxter axiom and classify the operator on I_n.
    RbVerify {
        #[command(flatten)]
        source: AlgebraSource,
        #[arg(long)]
        op: PathBuf,
    },
    /// All Rota–Baxter operators on I_n over a finite field.
    RbEnumerate,
    /// The Rota–Baxter index of I_n over a finite field.
    RbIndex,
    /// Decompositions of I_n into two subalgebras, or the one given by an
    /// operator.
    Decompose {
        #[arg(long)]
        op: Option<PathBuf>,
    },
    /// Run a verification suite.
    VerifyTheorems {
        #[arg(long, default_value = "all")]
        suite: Suite,
        #[arg(long, default_value_t = 6)]
        max_n: usize,
        /// Comma-separated field list.
        #[arg(long, value_delimiter = ',', default_value = "q,gf3,gf5,qi")]
        fields: Vec<FieldDescriptor>,
    },
}

#[derive(Debug)]
struct Usage(String);

impl<E: std::fmt::Display> From<E> for Usage {
    fn from(e: E) -> Self {
        Usage(e.to_string())
    }
}

fn read_json(path: &Path) -> Result<Value, Usage> {
    let text = fs::read_to_string(path).map_err(|e| Usage(format!("{}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| Usage(format!("{}: {e}", path.display())))
}

fn need_n(g: &Global) -> Result<usize, Usage> {
    g.n.ok_or_else(|| Usage("--n is required".into()))
}

fn load_algebra(g: &Global, source: &AlgebraSource) -> Result<AlgebraJson, Usage> {
    match &source.algebra {
        Some(path) => Ok(serde_json::from_value(read_json(path)?)?),
        None => {
            let built = api::build(&g.field, source.family, need_n(g)?, None)?;
            Ok(serde_json::from_value(built.value)?)
        }
    }
}

fn run(cli: &Cli) -> Result<Outcome, Usage> {
    let g = &cli.global;
    let weight = g.weight.as_deref();
    Ok(match &cli.command {
        Command::Build { family, a } => api::build(&g.field, *family, need_n(g)?, a.as_deref())?,
        Command::CheckIdentity { source, identity } => {
            let spec = load_algebra(g, source)?;
            let kinds = if identity.is_empty() { Identity::ALL.to_vec() } else { identity.clone() };
            let results = kinds
                .into_iter()
                .map(|k| api::check_identity_json(&spec, k).map(|o| o.value))
                .collect::<Result<Vec<_>, _>>()?;
            Outcome {
                value: serde_json::json!({ "results": results }),
                falsified: false,
            }
        }
        Command::Simplicity { source } => match &source.algebra {
            Some(_) => api::simplicity(&load_algebra(g, source)?, g.cap, g.workers)?,
            None => api::family_simplicity(&g.field, source.family, need_n(g)?, g.cap, g.workers)?,
        },
        Command::Derivations { source } => api::derivations(&load_algebra(g, source)?)?,
        Command::Automorphisms {
            source,
            enumerate,
            candidate,
        } => {
            let spec = load_algebra(g, source)?;
            let candidate = candidate.as_deref().map(read_json).transpose()?;
            let enumerate = *enumerate || candidate.is_none();
            api::automorphisms(&spec, candidate.as_ref(), enumerate, g.cap, g.workers)?
        }
        Command::RbVerify { source, op } => api::rb_verify(&load_algebra(g, source)?, &read_json(op)?, weight)?,
        Command::RbEnumerate => api::rb_enumerate(&g.field, need_n(g)?, weight.unwrap_or("all"), g.cap, g.workers)?,
        Command::RbIndex => api::rb_index(&g.field, need_n(g)?, weight.unwrap_or("all"), g.cap, g.workers)?,
        Command::Decompose { op } => {
            let op = op.as_deref().map(read_json).transpose()?;
            api::decompose(&g.field, need_n(g)?, op.as_ref(), weight, g.cap, g.workers)?
        }
        Command::VerifyTheorems { suite, max_n, fields } => {
            let mut search = SearchConfig::default();
            if let Some(cap) = g.cap {
                search.cap = cap;
            }
            search.workers = g.workers;
            let config = VerifyConfig {
                seed: g.seed,
                max_n: *max_n,
                fields: fields.clone(),
                search,
            };
            let report = verify::verify(*suite, &config)?;
            Outcome {
                falsified: !report.passed(),
                value: serde_json::to_value(&report)?,
            }
        }
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match run(&cli) {
        Ok(o) => o,
        Err(Usage(msg)) => {
            eprintln!("error: {msg}");
            return ExitCode::from(2);
        }
    };
    let text = serde_json::to_string_pretty(&outcome.value).expect("JSON values serialize");
    match &cli.global.out {
        Some(path) => {
            if let Err(e) = fs::write(path, text + "\n") {
                eprintln!("error: {}: {e}", path.display());
                return ExitCode::from(2);
            }
        }
        None => {
            // a closed pipe (e.g. `| head`) is not an error worth reporting
            let mut stdout = std::io::stdout().lock();
            let _ = writeln!(stdout, "{text}");
        }
    }
    if outcome.falsified {
        eprintln!("counterexample found; see the output");
        ExitCode::from(1)
    } else {
        ExitCode::SUCCESS
    }
}
