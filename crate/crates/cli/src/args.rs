use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(name = "uqgl", version, about = "Exact computations in the quantum supergroup U_q(gl(m,n))")]
pub struct Cli {
    /// m,n
    #[arg(long, global = true, value_parser = parse_pair)]
    pub shape: Option<(usize, usize)>,
    #[arg(long, global = true, value_enum, default_value = "json")]
    pub emit: Emit,
    /// Flat `key = value` file with shape, truncation_depth, seed, max_degree.
    #[arg(long, global = true)]
    pub config: Option<PathBuf>,
    #[command(subcommand)]
    pub cmd: Cmd,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Emit {
    Json,
    Text,
    /// Parse tree of the input expression (nf only).
    Ast,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ModuleKind {
    Kac,
    Simple,
    Even,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ints(pub Vec<i64>);

#[derive(Subcommand, Debug)]
pub enum Cmd {
    /// PBW normal form of an expression.
    Nf {
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Normal form of a product.
    Mul {
        #[arg(allow_hyphen_values = true)]
        left: String,
        #[arg(allow_hyphen_values = true)]
        right: String,
    },
    /// Coproduct.
    Delta {
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Antipode.
    Antipode {
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Counit.
    Counit {
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// The anti-automorphism Ω.
    Omega {
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Braid operator T_{α_i}.
    Braid {
        #[arg(short = 'i')]
        index: usize,
        #[arg(long)]
        inverse: bool,
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Typicality of λ and the factor P(λ).
    Typical {
        #[arg(long, value_parser = parse_ints, allow_hyphen_values = true)]
        lambda: Ints,
    },
    /// The Kac module K(λ).
    Kac {
        #[arg(long, value_parser = parse_ints, allow_hyphen_values = true)]
        lambda: Ints,
    },
    /// The simple module of highest weight λ, generically or at q = η.
    Simple {
        #[arg(long, value_parser = parse_ints, allow_hyphen_values = true)]
        lambda: Ints,
        #[arg(long)]
        at_root: Option<u32>,
    },
    /// Character of K(λ), L(λ) or L₀(λ).
    Char {
        #[arg(long, value_parser = parse_ints, allow_hyphen_values = true)]
        lambda: Ints,
        #[arg(long, value_enum, default_value = "simple")]
        module: ModuleKind,
    },
    /// Character of L(λ) ⊗ L(μ).
    Tensor {
        #[arg(long, value_parser = parse_ints, allow_hyphen_values = true)]
        lambda: Ints,
        #[arg(long, value_parser = parse_ints, allow_hyphen_values = true)]
        mu: Ints,
        #[arg(long)]
        at_root: Option<u32>,
    },
    /// Image of an element of the 𝒜-form at q = η.
    Specialize {
        #[arg(short = 'l')]
        l: u32,
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Dimensions of the small quantum groups.
    Smallgroup {
        #[arg(long)]
        counts: bool,
        #[arg(short = 'l')]
        l: u32,
    },
    /// Classical Serre relations for the q → 1 images.
    ClassicalCheck,
    /// z = z' + l·z''.
    DecomposeZ {
        #[arg(long, value_parser = parse_ints, allow_hyphen_values = true)]
        z: Ints,
        #[arg(long)]
        l: u32,
    },
    /// Runs the identity batteries.
    Selftest {
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long)]
        trials: Option<usize>,
    },
}

pub fn parse_pair(s: &str) -> Result<(usize, usize), String> {
    let (a, b) = s.split_once(',').ok_or_else(|| format!("expected m,n, got {s:?}"))?;
    let a = a.trim().parse().map_err(|_| format!("bad m in {s:?}"))?;
    let b = b.trim().parse().map_err(|_| format!("bad n in {s:?}"))?;
    Ok((a, b))
}

pub fn parse_ints(s: &str) -> Result<Ints, String> {
    s.split(',')
        .map(|x| x.trim().parse::<i64>().map_err(|_| format!("bad integer {x:?} in {s:?}")))
        .collect::<Result<Vec<_>, _>>()
        .map(Ints)
}
