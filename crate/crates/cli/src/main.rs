use std::process::ExitCode;

use clap::{Parser, Subcommand};
use qsmooth_cli::commands::{self, AnsatzChoice, CliError, Options, Outcome, EXIT_ERROR};
use qsmooth_core::scalars::{parse_rational, BigRational};

#[derive(Parser, Debug)]
#[command(name = "qsmooth", version, about = "Exact checks for q-deformed coordinate algebras")]
struct Cli {
    /// Print a JSON certificate instead of the text report.
    #[arg(long, global = true)]
    json: bool,

    /// Also evaluate every identity at this rational parameter value.
    #[arg(long, global = true, value_parser = rational)]
    param_value: Option<BigRational>,

    /// Reduction budget per normal-form call.
    #[arg(long, global = true, env = "QSMOOTH_FUEL")]
    fuel: Option<u64>,

    /// First family parameter for catalog entries.
    #[arg(short = 'k', global = true)]
    k: Option<u32>,

    /// Second family parameter for catalog entries.
    #[arg(short = 'l', global = true)]
    l: Option<u32>,

    /// Use the printed commutation exponent for the A(k,l) family.
    #[arg(long, global = true)]
    printed: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Validate a presentation and resolve all critical pairs.
    Check {
        /// A presentation file, or `catalog:NAME`.
        file: String,
    },
    /// Normal form of an expression.
    Nf {
        /// A presentation file, or `catalog:NAME`.
        file: String,
        /// Expression to reduce, e.g. `alphastar.alpha`.
        #[arg(short = 'e', long = "expr")]
        expr: String,
    },
    /// Check that the relations respect a grading.
    Grade {
        /// A presentation file, or `catalog:NAME`.
        file: String,
        /// Grading name from the file or catalog entry.
        #[arg(short = 'g', long = "grading")]
        grading: String,
    },
    /// Solve for a strong connection and optionally build its powers.
    Connection {
        /// A presentation file, or `catalog:NAME`.
        file: String,
        /// Grading name from the file or catalog entry.
        #[arg(short = 'g', long = "grading")]
        grading: String,
        /// Build ω(n) up to this n.
        #[arg(long)]
        power: Option<usize>,
        /// Named ansatz from the file or catalog entry.
        #[arg(long, conflicts_with = "search")]
        ansatz: Option<String>,
        /// Search word pairs up to this length.
        #[arg(long)]
        search: Option<usize>,
    },
    /// Match a generalized Weyl algebra and decide smoothness.
    Gwa {
        /// A presentation file, or `catalog:NAME`.
        file: String,
        /// The commutative generator.
        #[arg(long, default_value = "a")]
        base: String,
        /// One of the two twisted generators.
        #[arg(long = "gen", default_value = "b")]
        gen: String,
    },
    /// Verify the chain of catalog maps starting at NAME.
    Tower {
        /// Base of the chain: rp2minus, sigma3minus, sigma3, teardrop or lens.
        name: String,
    },
    /// List catalog entries or print one in the presentation format.
    Catalog {
        /// Print this entry in the presentation format.
        #[arg(long)]
        emit: Option<String>,
    },
    /// Re-verify the witness in a JSON certificate.
    Recheck {
        /// Path to a certificate written with `--json`.
        certificate: String,
    },
}

fn rational(s: &str) -> Result<BigRational, String> {
    parse_rational(s).ok_or_else(|| format!("`{s}` is not a rational number"))
}

fn run(cli: Cli) -> Result<Option<Outcome>, CliError> {
    let opts = Options { k: cli.k, l: cli.l, printed: cli.printed, fuel: cli.fuel, param_value: cli.param_value };
    let out = match &cli.command {
        Command::Check { file } => commands::check(&commands::load(file, &opts)?, &opts)?,
        Command::Nf { file, expr } => commands::nf(&commands::load(file, &opts)?, expr, &opts)?,
        Command::Grade { file, grading } => commands::grade(&commands::load(file, &opts)?, grading, &opts)?,
        Command::Connection { file, grading, power, ansatz, search } => {
            let choice = match (ansatz, search) {
                (_, Some(len)) => AnsatzChoice::Search(*len),
                (Some(name), None) => AnsatzChoice::Named(name.clone()),
                (None, None) => AnsatzChoice::Default,
            };
            commands::connection(&commands::load(file, &opts)?, grading, &choice, *power, &opts)?
        }
        Command::Gwa { file, base, gen } => commands::gwa(&commands::load(file, &opts)?, base, gen, &opts)?,
        Command::Tower { name } => commands::tower(name, &opts)?,
        Command::Catalog { emit } => {
            match emit {
                Some(name) => print!("{}", commands::catalog_emit(name, &opts)?),
                None => print!("{}", commands::catalog_listing(cli.json)),
            }
            return Ok(None);
        }
        Command::Recheck { certificate } => {
            let text = std::fs::read_to_string(certificate)
                .map_err(|e| CliError::new(EXIT_ERROR, format!("cannot read `{certificate}`: {e}")))?;
            commands::recheck(&text)?
        }
    };
    Ok(Some(out))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let json = cli.json;
    match run(cli) {
        Ok(None) => ExitCode::SUCCESS,
        Ok(Some(out)) => {
            if json {
                println!("{}", out.cert.to_json());
            } else {
                print!("{}", out.cert.to_text());
            }
            ExitCode::from(out.code)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.code)
        }
    }
}
