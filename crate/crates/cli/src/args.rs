//! Command-line grammar.

use clap::{Args, Parser, Subcommand, ValueEnum};
use clausen::verify::Tag;

#[derive(Debug, Parser)]
#[command(name = "clausen", version, about = "Clausen-function constants, identity checks and BBP digits")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate a function or constant.
    Eval(EvalArgs),
    /// Run identity checks from the ledger.
    Verify(VerifyArgs),
    /// Extract hexadecimal digits of a BBP-type sum.
    Digits(DigitsArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Args)]
pub struct EvalArgs {
    #[command(subcommand)]
    pub target: Target,
    /// Absolute error tolerance.
    #[arg(long, global = true, default_value_t = 1e-12)]
    pub tol: f64,
    /// Fail when an evaluation needs more terms or integrand calls than this.
    #[arg(long, global = true)]
    pub max_terms: Option<usize>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum L7Method {
    Series,
    Trigamma,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum I7Method {
    Quadrature,
    Clausen,
}

#[derive(Debug, Subcommand)]
pub enum Target {
    /// Cl2(theta) = sum sin(k theta)/k^2.
    Cl2 {
        #[arg(long, allow_hyphen_values = true)]
        theta: f64,
    },
    /// Cl_n(theta): sine series for even n, cosine series for odd n.
    Cln {
        #[arg(long)]
        n: u32,
        #[arg(long, allow_hyphen_values = true)]
        theta: f64,
    },
    /// psi'(x).
    Trigamma {
        #[arg(long, allow_hyphen_values = true)]
        x: f64,
    },
    /// zeta(s, a).
    Hurwitz {
        #[arg(long)]
        s: f64,
        #[arg(long)]
        a: f64,
    },
    /// Catalan's constant by a chosen route.
    Catalan {
        /// series, eq1.11, eq2.22, eq2.25, eq2.27, eq2.28a, eq2.28c, eq2.33 or eq2.35.
        #[arg(long, default_value = "series")]
        method: String,
    },
    /// L_-7(2).
    L7 {
        #[arg(long, value_enum, default_value_t = L7Method::Trigamma)]
        method: L7Method,
    },
    /// I7 = (24/(7 sqrt7)) int_{pi/3}^{pi/2} ln|(tan t + sqrt7)/(tan t - sqrt7)| dt.
    I7 {
        #[arg(long, value_enum, default_value_t = I7Method::Clausen)]
        method: I7Method,
    },
    /// I(a,b) = int_a^inf ln y dy/(y^2 + 2by + 1) by quadrature and both closed forms.
    Iab {
        #[arg(long)]
        a: f64,
        #[arg(long, allow_hyphen_values = true)]
        b: f64,
    },
    /// Li3(z) for complex z; defaults to (1+i)/2.
    Li3 {
        #[arg(long, allow_hyphen_values = true, default_value_t = 0.5)]
        re: f64,
        #[arg(long, allow_hyphen_values = true, default_value_t = 0.5)]
        im: f64,
    },
}

fn parse_tag(s: &str) -> Result<Tag, String> {
    s.parse().map_err(|e: clausen::Error| e.to_string())
}

#[derive(Debug, Args)]
#[command(group(clap::ArgGroup::new("selection").args(["all", "tag", "check"])))]
pub struct VerifyArgs {
    /// Run every check (the default).
    #[arg(long)]
    pub all: bool,
    /// Run the checks carrying this tag.
    #[arg(long, value_parser = parse_tag)]
    pub tag: Option<Tag>,
    /// Run a single check by id.
    #[arg(long)]
    pub check: Option<String>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Tolerance for a single check, replacing its default.
    #[arg(long, requires = "check", conflicts_with = "tol_scale")]
    pub tol: Option<f64>,
    /// Multiply every default tolerance by this factor.
    #[arg(long)]
    pub tol_scale: Option<f64>,
}

#[derive(Debug, Args)]
pub struct DigitsArgs {
    /// Registry id of the formula.
    #[arg(long)]
    pub formula: String,
    /// Number of hex digits skipped after the point.
    #[arg(long, default_value_t = 0)]
    pub position: u64,
    #[arg(long, default_value_t = 8)]
    pub count: usize,
}
