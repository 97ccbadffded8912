use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Deserialize;

use crate::CliError;

#[derive(Parser, Debug)]
#[command(
    name = "qsync",
    version,
    about = "Cyclic codes of length 2^n over GF(q) and quantum synchronizable codes built from them"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[command(flatten)]
    pub opts: Opts,
}

#[derive(Subcommand, Debug, Clone, Copy, PartialEq, Eq)]
pub enum Command {
    /// q-cyclotomic cosets modulo 2^n with their pairing
    Cosets,
    /// Minimal polynomials M_s and the factorization of x^N - 1
    Factor,
    /// Parameters of the code whose roots are the given cosets
    Code,
    /// The dual of the code whose roots are the given cosets
    Dual,
    /// Exact minimum distance with its witness codeword
    Mindist,
    /// Augmented pair C_a ⊆ C_b from two coset selections
    Augment,
    /// QSC parameters from a Theorem 1 configuration or an explicit pair
    Qsc,
    /// Reproduce the tables and worked examples
    VerifyPaper,
    /// Run the Theorem 1 construction over a grid of (q, n)
    Sweep,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq, Deserialize, Default)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    #[default]
    Json,
    Csv,
}

#[derive(Args, Debug, Default)]
pub struct Opts {
    /// Field size (comma list for sweep)
    #[arg(long, global = true, value_delimiter = ',')]
    pub q: Option<Vec<u64>>,
    /// Length exponent, N = 2^n (comma list for sweep)
    #[arg(long, global = true, value_delimiter = ',')]
    pub n: Option<Vec<u32>>,
    /// Number of extra cosets in g_1
    #[arg(long, global = true)]
    pub delta1: Option<usize>,
    /// Extra coset representatives
    #[arg(long, global = true, value_delimiter = ',')]
    pub extra: Option<Vec<u64>>,
    /// 0/1 flag per extra coset: keep it in g_2
    #[arg(long, global = true, value_delimiter = ',')]
    pub eps: Option<Vec<u8>>,
    /// Left misalignment
    #[arg(long, global = true)]
    pub cl: Option<u64>,
    /// Right misalignment
    #[arg(long, global = true)]
    pub cr: Option<u64>,
    /// Root cosets of the code, by any member
    #[arg(long, global = true, value_delimiter = ',')]
    pub cosets: Option<Vec<u64>>,
    /// Root cosets of C_a
    #[arg(long, global = true, value_delimiter = ',')]
    pub cosets_a: Option<Vec<u64>>,
    /// Root cosets of C_b
    #[arg(long, global = true, value_delimiter = ',')]
    pub cosets_b: Option<Vec<u64>>,
    /// Rank tests allowed per distance search; 0 reports bounds only
    #[arg(long, global = true)]
    pub budget: Option<u64>,
    /// Largest delta_1 visited by sweep
    #[arg(long, global = true)]
    pub max_delta1: Option<usize>,
    /// JSON scenario file; flags override its values
    #[arg(long, global = true)]
    pub scenario: Option<PathBuf>,
    /// Write the report here instead of stdout
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,
}

#[derive(Deserialize, Debug, Clone)]
#[serde(untagged)]
enum OneOrMany<T> {
    One(T),
    Many(Vec<T>),
}

impl<T> OneOrMany<T> {
    fn into_vec(self) -> Vec<T> {
        match self {
            OneOrMany::One(v) => vec![v],
            OneOrMany::Many(v) => v,
        }
    }
}

/// Scenario file: the flag surface as JSON.
#[derive(Deserialize, Debug, Default)]
#[serde(deny_unknown_fields)]
struct Scenario {
    q: Option<OneOrMany<u64>>,
    n: Option<OneOrMany<u32>>,
    delta1: Option<usize>,
    extra: Option<Vec<u64>>,
    eps: Option<Vec<u8>>,
    cl: Option<u64>,
    cr: Option<u64>,
    cosets: Option<Vec<u64>>,
    cosets_a: Option<Vec<u64>>,
    cosets_b: Option<Vec<u64>>,
    budget: Option<u64>,
    max_delta1: Option<usize>,
    out: Option<PathBuf>,
    format: Option<Format>,
}

/// Flags merged over the scenario file.
#[derive(Debug, Clone, Default)]
pub struct Params {
    pub q: Vec<u64>,
    pub n: Vec<u32>,
    pub delta1: Option<usize>,
    pub extra: Option<Vec<u64>>,
    pub eps: Option<Vec<u8>>,
    pub cl: u64,
    pub cr: u64,
    pub cosets: Option<Vec<u64>>,
    pub cosets_a: Option<Vec<u64>>,
    pub cosets_b: Option<Vec<u64>>,
    pub budget: Option<u64>,
    pub max_delta1: Option<usize>,
    pub out: Option<PathBuf>,
    pub format: Format,
}

fn load_scenario(path: &Path) -> Result<Scenario, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Scenario(format!("{}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| CliError::Scenario(format!("{}: {e}", path.display())))
}

impl Params {
    pub fn resolve(opts: Opts) -> Result<Params, CliError> {
        let s = match &opts.scenario {
            Some(p) => load_scenario(p)?,
            None => Scenario::default(),
        };
        Ok(Params {
            q: opts.q.or(s.q.map(OneOrMany::into_vec)).unwrap_or_default(),
            n: opts.n.or(s.n.map(OneOrMany::into_vec)).unwrap_or_default(),
            delta1: opts.delta1.or(s.delta1),
            extra: opts.extra.or(s.extra),
            eps: opts.eps.or(s.eps),
            cl: opts.cl.or(s.cl).unwrap_or(0),
            cr: opts.cr.or(s.cr).unwrap_or(0),
            cosets: opts.cosets.or(s.cosets),
            cosets_a: opts.cosets_a.or(s.cosets_a),
            cosets_b: opts.cosets_b.or(s.cosets_b),
            budget: opts.budget.or(s.budget),
            max_delta1: opts.max_delta1.or(s.max_delta1),
            out: opts.out.or(s.out),
            format: opts.format.or(s.format).unwrap_or_default(),
        })
    }

    /// The single `(q, n)` point most commands work on.
    pub fn point(&self) -> Result<(u64, u32), CliError> {
        match (self.q.as_slice(), self.n.as_slice()) {
            ([q], [n]) => Ok((*q, *n)),
            ([], _) | (_, []) => Err(CliError::Usage("--q and --n are required".into())),
            _ => Err(CliError::Usage(
                "this command takes a single --q and --n".into(),
            )),
        }
    }

    pub fn require<'a, T>(value: &'a Option<T>, flag: &str) -> Result<&'a T, CliError> {
        value
            .as_ref()
            .ok_or_else(|| CliError::Usage(format!("{flag} is required")))
    }
}
