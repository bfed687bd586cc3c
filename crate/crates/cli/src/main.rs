mod commands;
mod inputs;
mod output;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use coring::Field;

/// Exact verification of comodules, descent data, braidings and Yang-Baxter operators.
#[derive(Parser, Debug)]
#[command(name = "coring", version)]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct Global {
    /// Scalar field: Q or Fp:p.
    #[arg(long, global = true, value_parser = parse_field)]
    pub field: Option<Field>,
    /// Write the command's artifact (JSON) to this path.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Print the run report as JSON instead of text.
    #[arg(long, global = true)]
    pub json: bool,
}

fn parse_field(s: &str) -> Result<Field, String> {
    Field::parse(s).map_err(|e| e.to_string())
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Algebra commands.
    Algebra {
        #[command(subcommand)]
        cmd: AlgebraCmd,
    },
    /// Comodule commands.
    Comodule {
        #[command(subcommand)]
        cmd: ComoduleCmd,
    },
    /// Descent data commands.
    Descent {
        #[command(subcommand)]
        cmd: DescentCmd,
    },
    /// The tensor product V (x)_A W and its quotient basis.
    Tensor(PairArgs),
    /// The braiding c_{V,W} and its inverse, with optional law checks.
    Braid {
        #[command(flatten)]
        pair: PairArgs,
        /// Laws to check; may be repeated.
        #[arg(long = "check", value_enum)]
        checks: Vec<BraidCheck>,
    },
    /// Yang-Baxter operators.
    Ybe {
        #[command(subcommand)]
        cmd: YbeCmd,
    },
    /// Run the acceptance suite.
    Suite {
        #[arg(long, value_enum, default_value_t = ProfileArg::Quick)]
        profile: ProfileArg,
        /// Run without data parallelism.
        #[arg(long)]
        sequential: bool,
        /// Break the suite on purpose to confirm that it can fail.
        #[arg(long, value_enum)]
        mutate: Option<MutationArg>,
    },
}

#[derive(Subcommand, Debug)]
enum AlgebraCmd {
    /// Associativity and unit checks.
    Check {
        /// Builtin name (kn:N, mat:N, upper:N) or path to an algebra file.
        spec: String,
    },
}

#[derive(Args, Debug, Clone)]
pub struct ComoduleSpec {
    /// regular, zero, flipped, free:N, rmatrix, or a path to a comodule file.
    pub comodule: String,
    /// Algebra for builtin comodules.
    #[arg(long, default_value = "kn:2")]
    pub algebra: String,
}

#[derive(Subcommand, Debug)]
enum ComoduleCmd {
    /// Comodule axioms, and the Yetter-Drinfeld axioms with --yd.
    Verify {
        #[command(flatten)]
        spec: ComoduleSpec,
        #[arg(long)]
        yd: bool,
    },
}

#[derive(Subcommand, Debug)]
enum DescentCmd {
    /// Descent conditions and invertibility of g.
    Verify {
        /// A builtin comodule name (as for `comodule verify`) or a path to a descent file.
        spec: String,
        #[arg(long, default_value = "kn:2")]
        algebra: String,
    },
}

#[derive(Args, Debug, Clone)]
pub struct PairArgs {
    /// First factor: builtin comodule name or file.
    pub v: String,
    /// Second factor: builtin comodule name or file.
    pub w: String,
    #[arg(long, default_value = "kn:2")]
    pub algebra: String,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum BraidCheck {
    Hexagon,
    Naturality,
    Unit,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Recipe {
    /// The comodule formula; works for any comodule.
    Comodule,
    /// The Yetter-Drinfeld formula, using the stored or induced left action.
    Yd,
    /// The R-matrix of M_n on V = A; needs --algebra mat:N.
    Rmatrix,
    /// The grouplike 1 (x) 1 with N = k^d, d from --n.
    Grouplike,
}

#[derive(Args, Debug, Clone)]
pub struct BuildArgs {
    /// Builtin comodule name or file; ignored by the rmatrix and grouplike recipes.
    #[arg(default_value = "regular")]
    pub comodule: String,
    #[arg(long, default_value = "kn:2")]
    pub algebra: String,
    #[arg(long, visible_alias = "from", value_enum, default_value_t = Recipe::Comodule)]
    pub recipe: Recipe,
    /// Dimension of N for the grouplike recipe.
    #[arg(long, default_value_t = 1)]
    pub n: usize,
}

#[derive(Subcommand, Debug)]
enum YbeCmd {
    /// Build an operator and check QYBE and Omega^3 = Omega.
    Build(BuildArgs),
    /// Check an exported operator file.
    Check {
        path: PathBuf,
        /// Check the quantum Yang-Baxter equation (default: both checks).
        #[arg(long)]
        qybe: bool,
        /// Check Omega^3 = Omega (default: both checks).
        #[arg(long)]
        cube: bool,
    },
    /// Build an operator and write it; requires --out.
    Export {
        #[command(flatten)]
        build: BuildArgs,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum ProfileArg {
    Quick,
    Full,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum MutationArg {
    NegatedBraiding,
}

fn main() -> ExitCode {
    let started = std::time::Instant::now();
    let cli = Cli::parse();
    let argv: Vec<String> = std::env::args().collect();
    let g = &cli.global;
    let result = match &cli.command {
        Command::Algebra { cmd: AlgebraCmd::Check { spec } } => commands::algebra_check(g, spec),
        Command::Comodule { cmd: ComoduleCmd::Verify { spec, yd } } => commands::comodule_verify(g, spec, *yd),
        Command::Descent { cmd: DescentCmd::Verify { spec, algebra } } => commands::descent_verify(g, spec, algebra),
        Command::Tensor(pair) => commands::tensor(g, pair),
        Command::Braid { pair, checks } => commands::braid(g, pair, checks),
        Command::Ybe { cmd } => match cmd {
            YbeCmd::Build(args) => commands::ybe_build(g, args),
            YbeCmd::Check { path, qybe, cube } => {
                let both = !qybe && !cube;
                commands::ybe_check(g, path, *qybe || both, *cube || both)
            }
            YbeCmd::Export { build, format: Format::Json } => match g.out {
                Some(_) => commands::ybe_build(g, build),
                None => Err(coring::Error::Invalid("ybe export needs --out".into())),
            },
        },
        Command::Suite { profile, sequential, mutate } => {
            let opts = coring::suite::SuiteOptions {
                profile: match profile {
                    ProfileArg::Quick => coring::suite::Profile::Quick,
                    ProfileArg::Full => coring::suite::Profile::Full,
                },
                exec: if *sequential { coring::Exec::Sequential } else { coring::Exec::default() },
                mutation: match mutate {
                    None => coring::suite::Mutation::None,
                    Some(MutationArg::NegatedBraiding) => coring::suite::Mutation::NegatedBraiding,
                },
            };
            commands::suite(g, &opts)
        }
    };
    output::finish(argv, g, started, result)
}
