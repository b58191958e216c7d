use std::path::PathBuf;

use clap::{Parser, ValueEnum};

/// Exact verification of MacWilliams-type identities for codes and lattices.
#[derive(Parser, Debug, Clone)]
#[command(name = "mwlab", version, about)]
pub struct Cli {
    #[arg(value_enum)]
    pub verb: Verb,

    /// Code files in JSON. Several files form a code tuple. Verbs with a
    /// random suite run it when no file is given.
    pub inputs: Vec<PathBuf>,

    /// Field size for random suites.
    #[arg(long)]
    pub q: Option<u64>,
    /// Code length for random suites (or the dimension of ℤ^n).
    #[arg(long)]
    pub n: Option<usize>,
    /// Number of codes per tuple for random suites.
    #[arg(long)]
    pub m: Option<usize>,

    /// Rational parameter z, as p/q, an integer or a decimal.
    #[arg(long)]
    pub z: Option<String>,
    /// Rational parameter u = tanh β.
    #[arg(long)]
    pub u: Option<String>,
    #[arg(long)]
    pub eps: Option<String>,
    /// Tolerance. Rational on exact paths, float on numeric ones.
    #[arg(long)]
    pub tol: Option<String>,
    #[arg(long)]
    pub beta: Option<f64>,
    /// Imaginary part of the theta argument.
    #[arg(long)]
    pub t: Option<f64>,
    /// Series truncation order.
    #[arg(long)]
    pub terms: Option<usize>,

    #[arg(long)]
    pub seed: Option<u64>,
    /// Number of random cases (or random tables for poisson-check).
    #[arg(long)]
    pub count: Option<usize>,
    /// Enumeration budget; overrides MWLAB_BUDGET.
    #[arg(long)]
    pub budget: Option<u64>,

    /// Use the dual code or dual lattice where that makes sense.
    #[arg(long)]
    pub dual: bool,

    #[arg(long, value_enum, default_value_t = OutFormat::Json)]
    pub out: OutFormat,
    /// Add wall-clock timing to the report (makes it nondeterministic).
    #[arg(long)]
    pub timing: bool,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verb {
    CodeInfo,
    Enum,
    VerifyMacwilliams,
    FtCheck,
    PoissonCheck,
    Dist,
    Smooth,
    Prop31,
    LatticeNu,
    LatticeTheta,
    Theorem3,
    JacobiPoisson,
}

impl Verb {
    pub fn name(self) -> String {
        self.to_possible_value().expect("no skipped variants").get_name().to_string()
    }
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum OutFormat {
    Json,
    Csv,
}
