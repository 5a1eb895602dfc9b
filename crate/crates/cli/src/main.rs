//! `commensura`: exact indices of isogenies and commensurabilities from the
//! command line.
//!
//! Exit codes: 0 success, 1 input error, 2 precondition violation, 3 cap
//! exceeded, 4 property-check failure.

mod checks;
mod error;
mod wire;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use commensura_core::abelian::ia_abelian;
use commensura_core::corr::{compose, AbelianContext, Commensurability};
use commensura_core::finring::{jacobson_radical, unit_group};
use commensura_core::oracle;
use commensura_core::order::{ia_finite, ie_pair_with, ie_self, FiniteModule};

use checks::{CheckReport, GroupName, LatticeKind};
use error::CliError;
use wire::Object;

#[derive(Parser)]
#[command(name = "commensura", version, about = "Exact isogeny and commensurability indices")]
struct Cli {
    /// Seed for every randomized computation.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Number of trials for randomized checks.
    #[arg(long, global = true, default_value_t = 100)]
    trials: usize,
    /// Bound on enumerated elements or candidates.
    #[arg(long, global = true, default_value_t = 65536)]
    cap: usize,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// ia(L, M) for two finite modules, or two abelian groups of equal rank.
    Ia { left: PathBuf, right: PathBuf },
    /// ie of an automorphism of a lattice (--alpha), or ie_pair(L, M).
    Ie {
        lattice: PathBuf,
        #[arg(required_unless_present = "alpha")]
        right: Option<PathBuf>,
        #[arg(long, conflicts_with = "right")]
        alpha: Option<PathBuf>,
        /// Which candidate isomorphism V → W to use for ie_pair.
        #[arg(long, default_value_t = 0)]
        choice: usize,
    },
    /// Compose two correspondences of abelian groups (second ∘ first).
    Compose { first: PathBuf, second: PathBuf },
    /// Seeded property checks.
    Check {
        #[command(subcommand)]
        which: CheckCommand,
    },
    /// Unit groups and radicals of finite rings.
    Finring {
        #[command(subcommand)]
        which: FinringCommand,
    },
    /// Brute-force reference computations.
    Oracle {
        #[command(subcommand)]
        which: OracleCommand,
    },
}

#[derive(Subcommand)]
enum CheckCommand {
    /// i(e(c)) = 1 for sampled self-commensurabilities.
    Welldef {
        #[arg(long, value_enum, ignore_case = true, default_value = "s3")]
        group: GroupName,
        #[arg(long, value_enum, default_value = "regular")]
        lattice: LatticeKind,
    },
    /// Unit maps of the ring-homomorphism catalogue are isogenies.
    TheoremO,
    /// The unit-quotient exponent of M_n(F_q) divides n.
    TheoremW {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        q: u64,
    },
    /// Index multiplicativity and inverses on random pairs.
    Multiplicativity,
}

#[derive(Subcommand)]
enum FinringCommand {
    Units { ring: PathBuf },
    Radical { ring: PathBuf },
}

#[derive(Subcommand)]
enum OracleCommand {
    /// #Aut by exhaustive enumeration.
    AutOrder { module: PathBuf },
    /// Every module homomorphism from SRC to DST.
    Homs { src: PathBuf, dst: PathBuf },
}

/// A command's result: JSON body, text rendering, and whether every
/// property held.
struct Output {
    result: Value,
    text: String,
    passed: bool,
}

impl Output {
    fn value(result: Value, text: String) -> Self {
        Self { result, text, passed: true }
    }
}

impl From<CheckReport> for Output {
    fn from(r: CheckReport) -> Self {
        Self {
            result: r.result,
            text: r.text,
            passed: r.passed,
        }
    }
}

fn as_module(o: Object) -> Result<FiniteModule, CliError> {
    match o {
        Object::Module(m) => Ok(m),
        Object::Group(g) if g.is_finite() => Ok(FiniteModule::trivial_action(&g)?),
        Object::Group(g) => Err(CliError::Precondition(format!("{g} is not finite"))),
    }
}

fn run(cli: &Cli) -> Result<Output, CliError> {
    let cap = cli.cap;
    Ok(match &cli.command {
        Command::Ia { left, right } => {
            let v = match (wire::read_object(left)?, wire::read_object(right)?) {
                (Object::Group(l), Object::Group(m)) => ia_abelian(&l, &m)?,
                (l, m) => ia_finite(&as_module(l)?, &as_module(m)?, cap)?,
            };
            Output::value(wire::rational(&v), v.to_string())
        }
        Command::Ie { lattice, right, alpha, choice } => {
            let l = wire::read_lattice(lattice)?;
            let v = match (right, alpha) {
                (_, Some(a)) => ie_self(&l, &wire::read_rat_matrix(a)?)?,
                (Some(r), None) => ie_pair_with(&l, &wire::read_lattice(r)?, *choice)?,
                (None, None) => return Err(CliError::Input("give a right lattice or --alpha".into())),
            };
            Output::value(wire::rational(&v), v.to_string())
        }
        Command::Compose { first, second } => {
            let (c, d) = (wire::read_correspondence(first)?, wire::read_correspondence(second)?);
            let dc = compose(&AbelianContext, &c, &d)?;
            let index = Commensurability::new(&AbelianContext, dc.clone()).ok().map(|x| x.index());
            let idx_json = index.as_ref().map_or(Value::Null, wire::rational);
            let idx_text = index.map_or("none (not a commensurability)".into(), |i| i.to_string());
            Output::value(
                json!({ "composite": wire::correspondence(&dc), "index": idx_json }),
                format!("apex: {}\nindex: {idx_text}", dc.apex),
            )
        }
        Command::Check { which } => match which {
            CheckCommand::Welldef { group, lattice } => checks::welldef(*group, *lattice, cli.trials, cli.seed)?.into(),
            CheckCommand::TheoremO => checks::theorem_o(cap)?.into(),
            CheckCommand::TheoremW { n, q } => checks::theorem_w(*n, *q, cap)?.into(),
            CheckCommand::Multiplicativity => checks::multiplicativity(cli.trials, cli.seed, cap)?.into(),
        },
        Command::Finring { which } => match which {
            FinringCommand::Units { ring } => {
                let r = wire::read_ring(ring)?;
                let units = unit_group(&r, cap)?;
                Output::value(
                    json!({ "ring_size": wire::integer(&r.size()), "count": units.len(), "units": units.iter().map(|u| wire::vector(u)).collect::<Vec<_>>() }),
                    format!("{} units in a ring of size {}", units.len(), r.size()),
                )
            }
            FinringCommand::Radical { ring } => {
                let r = wire::read_ring(ring)?;
                let j = jacobson_radical(&r, cap)?;
                Output::value(
                    json!({ "ring_size": wire::integer(&r.size()), "count": j.len(), "elements": j.iter().map(|u| wire::vector(u)).collect::<Vec<_>>() }),
                    format!("radical of order {} in a ring of size {}", j.len(), r.size()),
                )
            }
        },
        Command::Oracle { which } => match which {
            OracleCommand::AutOrder { module } => {
                let m = as_module(wire::read_object(module)?)?;
                let n = oracle::aut_order(&m, cap)?;
                Output::value(wire::integer(&n), n.to_string())
            }
            OracleCommand::Homs { src, dst } => {
                let (a, b) = (as_module(wire::read_object(src)?)?, as_module(wire::read_object(dst)?)?);
                let homs = oracle::enumerate_homs(&a, &b, cap)?;
                Output::value(
                    json!({ "count": homs.len(), "homs": homs.iter().map(wire::matrix).collect::<Vec<_>>() }),
                    homs.len().to_string(),
                )
            }
        },
    })
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(&cli) {
        Ok(out) => {
            let text = match cli.format {
                Format::Json => {
                    let envelope = json!({ "version": 1, "seed": cli.seed, "cap": cli.cap, "result": out.result });
                    serde_json::to_string_pretty(&envelope).expect("JSON values serialize")
                }
                Format::Text if matches!(cli.command, Command::Check { .. }) => {
                    format!("seed: {} cap: {} trials: {}\n{}", cli.seed, cli.cap, cli.trials, out.text)
                }
                Format::Text => out.text,
            };
            // A closed pipe (e.g. `| head`) is not an error worth reporting.
            let _ = writeln!(std::io::stdout(), "{text}");
            if out.passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(4)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
