use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(
    name = "lqlab",
    version,
    about = "Exact and certified computations for sums of (tau/q) * 1"
)]
pub struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Csv, global = true)]
    pub format: Format,
    /// Write output here instead of standard output.
    #[arg(long, short, global = true)]
    pub output: Option<PathBuf>,
    /// Omit the timestamp from the metadata so reruns are byte-identical.
    #[arg(long, global = true)]
    pub no_timestamp: bool,
    /// Worker threads (default: all cores). 1 runs sequentially.
    #[arg(long, global = true)]
    pub threads: Option<usize>,
    /// Suppress progress lines on standard error.
    #[arg(long, short, global = true)]
    pub quiet: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Check the floor identities and the Dirichlet-series factorizations exactly.
    Verify(VerifyArgs),
    /// Classify q and evaluate its main-term constants with certified errors.
    Constants(ConstantsArgs),
    /// Exact sums at dyadic checkpoints against the main term.
    Trace(TraceArgs),
    /// Exact sum of lambda_5 * 1 over (x, x + y].
    ShortInterval(IntervalArgs),
    /// Near-curve counts: the window scan for (x, x + y], or one general curve.
    NearCurve(NearCurveArgs),
    /// Growth ratios for q = +-5 mod 24.
    RhDiagnostic(DiagnosticArgs),
}

#[derive(Args, Debug)]
#[command(group(clap::ArgGroup::new("which").required(true).args(["q", "all_q"])))]
pub struct VerifyArgs {
    /// A single odd prime.
    #[arg(long, value_parser = parse_count)]
    pub q: Option<u64>,
    /// Every odd prime up to this bound.
    #[arg(long, value_parser = parse_count)]
    pub all_q: Option<u64>,
    /// Coefficients checked: 1..=limit.
    #[arg(long, default_value = "10000", value_parser = parse_count)]
    pub limit: u64,
}

#[derive(Args, Debug, Clone)]
pub struct ConstantsFlags {
    /// Required absolute accuracy of each constant.
    #[arg(long, default_value_t = 1e-4)]
    pub tolerance: f64,
    /// Prime cutoff for P_q(1).
    #[arg(long, default_value = "1e6", value_parser = parse_count)]
    pub p_cutoff: u64,
    /// Prime cutoff for R_q(1/2).
    #[arg(long, default_value = "1e8", value_parser = parse_count)]
    pub r_cutoff: u64,
}

#[derive(Args, Debug)]
pub struct ConstantsArgs {
    #[arg(long, value_parser = parse_count)]
    pub q: u64,
    #[command(flatten)]
    pub constants: ConstantsFlags,
}

#[derive(Args, Debug)]
pub struct TraceArgs {
    #[arg(long, value_parser = parse_count)]
    pub q: u64,
    /// Largest checkpoint; checkpoints are powers of two up to it.
    #[arg(long, default_value = "1e8", value_parser = parse_count)]
    pub max: u64,
    /// Smallest checkpoint is 2^min_exp.
    #[arg(long, default_value_t = 10)]
    pub min_exp: u32,
    /// Normalizing exponents (comma separated; default depends on the branch).
    #[arg(long, value_delimiter = ',')]
    pub alpha: Vec<f64>,
    #[command(flatten)]
    pub constants: ConstantsFlags,
}

#[derive(Args, Debug)]
pub struct IntervalArgs {
    #[arg(long, value_parser = parse_count)]
    pub x: u64,
    #[arg(long, value_parser = parse_count)]
    pub y: u64,
    /// The existential constant of the near-curve bound.
    #[arg(long, default_value_t = 0.25)]
    pub c3: f64,
}

#[derive(Args, Debug)]
pub struct NearCurveArgs {
    /// Scan (x, x + y] (requires --y).
    #[arg(long, value_parser = parse_count, requires = "y", conflicts_with_all = ["scale", "n", "delta"])]
    pub x: Option<u64>,
    #[arg(long, value_parser = parse_count)]
    pub y: Option<u64>,
    #[arg(long, default_value_t = 0.25)]
    pub c3: f64,
    /// Count n in [N, 2N] with ||scale / n^exponent|| < delta (requires --n, --delta).
    #[arg(long, requires_all = ["n", "delta"])]
    pub scale: Option<f64>,
    #[arg(long, default_value = "5/2", value_parser = parse_ratio)]
    pub exponent: (i64, i64),
    #[arg(long, value_parser = parse_count)]
    pub n: Option<u64>,
    #[arg(long)]
    pub delta: Option<f64>,
}

#[derive(Args, Debug)]
pub struct DiagnosticArgs {
    #[arg(long, default_value = "5", value_parser = parse_count)]
    pub q: u64,
    #[arg(long, default_value = "1e8", value_parser = parse_count)]
    pub max: u64,
    #[arg(long, default_value_t = 10)]
    pub min_exp: u32,
    /// The epsilon in the conditional bound.
    #[arg(long, default_value_t = 0.01)]
    pub epsilon: f64,
    /// The constant c in the unconditional bound.
    #[arg(long, default_value_t = 0.2)]
    pub c: f64,
}

/// A nonnegative integer, also in scientific notation when exact (`1e6`).
pub fn parse_count(s: &str) -> Result<u64, String> {
    let s = s.trim().replace('_', "");
    if let Ok(v) = s.parse::<u64>() {
        return Ok(v);
    }
    let v: f64 = s.parse().map_err(|_| format!("not a number: {s}"))?;
    if v >= 0.0 && v.fract() == 0.0 && v < 2f64.powi(63) {
        Ok(v as u64)
    } else {
        Err(format!("not a nonnegative integer: {s}"))
    }
}

/// `p/q` or an integer, with positive parts.
pub fn parse_ratio(s: &str) -> Result<(i64, i64), String> {
    let (p, q) = match s.split_once('/') {
        Some((p, q)) => (p.trim(), q.trim()),
        None => (s.trim(), "1"),
    };
    let p: i64 = p.parse().map_err(|_| format!("bad numerator in {s}"))?;
    let q: i64 = q.parse().map_err(|_| format!("bad denominator in {s}"))?;
    if p <= 0 || q <= 0 {
        return Err(format!("exponent must be a positive ratio, got {s}"));
    }
    Ok((p, q))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts() {
        assert_eq!(parse_count("1e6"), Ok(1_000_000));
        assert_eq!(parse_count("10_000"), Ok(10_000));
        assert_eq!(parse_count("2.5e1"), Ok(25));
        assert!(parse_count("1.5").is_err());
        assert!(parse_count("-3").is_err());
        assert!(parse_count("abc").is_err());
    }

    #[test]
    fn ratios() {
        assert_eq!(parse_ratio("5/2"), Ok((5, 2)));
        assert_eq!(parse_ratio("3"), Ok((3, 1)));
        assert!(parse_ratio("-1/2").is_err());
        assert!(parse_ratio("1/0").is_err());
    }

    #[test]
    fn clap_definition_is_consistent() {
        use clap::CommandFactory;
        Cli::command().debug_assert();
    }
}
