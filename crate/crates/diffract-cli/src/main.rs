//! `diffract`: build a finite group, pick coset representatives, and
//! rebuild its product from the representative and fiber tables.

use std::path::PathBuf;
use std::process;

use clap::{Args, Parser, Subcommand};
use diffract::{Error, DEFAULT_CLOSURE_CAP};

mod commands;
mod out;
mod source;

#[derive(Parser)]
#[command(
    name = "diffract",
    version,
    about = "Rewrite finite group products through a subgroup and its coset representatives"
)]
struct Cli {
    /// Emit machine-readable JSON on stdout.
    #[arg(long, global = true)]
    json: bool,

    /// Refuse groups larger than this many elements.
    #[arg(
        long,
        global = true,
        env = "DIFFRACT_MAX_ORDER",
        value_name = "N"
    )]
    max_order: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

/// Where the group comes from; exactly one must be given.
#[derive(Args)]
#[group(required = true, multiple = false)]
struct SourceArgs {
    /// Builtin family member: cyclic:N, dihedral:N, symmetric:N, quaternion, klein4.
    #[arg(long, value_name = "SPEC")]
    builtin: Option<String>,

    /// Multiplication table file (.gtab).
    #[arg(long, value_name = "FILE")]
    table: Option<PathBuf>,

    /// Permutation generating set file (.gens).
    #[arg(long, value_name = "FILE")]
    gens: Option<PathBuf>,
}

#[derive(Args)]
struct SubgroupArgs {
    /// Comma-separated generators of H (labels or indices); empty for the
    /// trivial subgroup.
    #[arg(
        long,
        value_name = "LIST",
        default_value = "",
        allow_hyphen_values = true
    )]
    subgroup_gens: String,
}

#[derive(Args)]
struct TransversalArgs {
    /// Representative choice: min, random:SEED, or list:i1,i2,...
    #[arg(long, value_name = "STRATEGY", default_value = "min")]
    strategy: String,

    /// Accept representative systems that do not contain the identity.
    #[arg(long)]
    allow_non_transversal: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Load and validate a group, optionally writing the table back out.
    Load {
        #[command(flatten)]
        source: SourceArgs,
        /// Write the validated table to FILE as .gtab text.
        #[arg(long, value_name = "FILE")]
        emit: Option<PathBuf>,
    },
    /// Group facts, or one element's label, order and inverse.
    Info {
        #[command(flatten)]
        source: SourceArgs,
        /// Element to describe (label or index).
        #[arg(long, value_name = "ELEMENT", allow_hyphen_values = true)]
        element: Option<String>,
    },
    /// Close subgroup generators and report the result.
    Subgroup {
        #[command(flatten)]
        source: SourceArgs,
        #[command(flatten)]
        subgroup: SubgroupArgs,
    },
    /// List the left cosets of the subgroup.
    Cosets {
        #[command(flatten)]
        source: SourceArgs,
        #[command(flatten)]
        subgroup: SubgroupArgs,
    },
    /// Choose one representative per coset.
    Transversal {
        #[command(flatten)]
        source: SourceArgs,
        #[command(flatten)]
        subgroup: SubgroupArgs,
        #[command(flatten)]
        tv: TransversalArgs,
    },
    /// Rebuild the group on representative/fiber pairs.
    Diffract {
        #[command(flatten)]
        source: SourceArgs,
        #[command(flatten)]
        subgroup: SubgroupArgs,
        #[command(flatten)]
        tv: TransversalArgs,
        /// Write the pair group as JSON to FILE.
        #[arg(long, value_name = "FILE")]
        emit: Option<PathBuf>,
    },
    /// Run verification laws over the assembled pipeline.
    Verify {
        #[command(flatten)]
        source: SourceArgs,
        #[command(flatten)]
        subgroup: SubgroupArgs,
        #[command(flatten)]
        tv: TransversalArgs,
        /// `all` or a comma-separated list of law ids.
        #[arg(long, value_name = "LIST", default_value = "all")]
        laws: String,
    },
    /// Factor two elements and rewrite their product.
    Rewrite {
        #[command(flatten)]
        source: SourceArgs,
        #[command(flatten)]
        subgroup: SubgroupArgs,
        #[command(flatten)]
        tv: TransversalArgs,
        /// Left factor (label or index).
        #[arg(value_name = "G1", allow_hyphen_values = true)]
        g1: String,
        /// Right factor (label or index).
        #[arg(value_name = "G2", allow_hyphen_values = true)]
        g2: String,
    },
    /// Time and cross-check three ways of multiplying.
    Bench {
        #[command(flatten)]
        source: SourceArgs,
        #[command(flatten)]
        subgroup: SubgroupArgs,
        #[command(flatten)]
        tv: TransversalArgs,
        /// How many sampled products to run.
        #[arg(long, value_name = "N", default_value_t = 10_000)]
        reps: u64,
        /// Sampling seed.
        #[arg(long, value_name = "SEED", default_value_t = 0xD1FF)]
        seed: u64,
    },
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::NotAGroup { .. } => 3,
        Error::RequiresTransversal => 4,
        Error::UnknownLawId(_) => 5,
        Error::IndexOutOfRange { .. } | Error::UnknownElement(_) => 6,
        _ => 2,
    }
}

fn run(cli: Cli) -> diffract::Result<i32> {
    let cap = cli.max_order.unwrap_or(DEFAULT_CLOSURE_CAP);
    let json = cli.json;
    match &cli.command {
        Command::Load { source, emit } => commands::load(source, emit.as_deref(), json, cap),
        Command::Info { source, element } => {
            commands::info(source, element.as_deref(), json, cap)
        }
        Command::Subgroup { source, subgroup } => commands::subgroup(source, subgroup, json, cap),
        Command::Cosets { source, subgroup } => commands::cosets(source, subgroup, json, cap),
        Command::Transversal {
            source,
            subgroup,
            tv,
        } => commands::transversal(source, subgroup, tv, json, cap),
        Command::Diffract {
            source,
            subgroup,
            tv,
            emit,
        } => commands::diffract_cmd(source, subgroup, tv, emit.as_deref(), json, cap),
        Command::Verify {
            source,
            subgroup,
            tv,
            laws,
        } => commands::verify(source, subgroup, tv, laws, json, cap),
        Command::Rewrite {
            source,
            subgroup,
            tv,
            g1,
            g2,
        } => commands::rewrite(source, subgroup, tv, g1, g2, json, cap),
        Command::Bench {
            source,
            subgroup,
            tv,
            reps,
            seed,
        } => commands::bench(source, subgroup, tv, *reps, *seed, json, cap),
    }
}

fn main() {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => process::exit(code),
        Err(e) => {
            eprintln!("error: {e}");
            process::exit(exit_code(&e));
        }
    }
}
