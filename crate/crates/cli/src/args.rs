use std::ops::RangeInclusive;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rgc_core::{Method, MethodConfig, PhaseVariant};

#[derive(Debug, Parser)]
#[command(name = "rgc", version, about = "Maclaurin coefficients of 1/Γ(z)")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Compute aₙ by one or more methods.
    Compute {
        #[command(flatten)]
        indices: Indices,
        /// Methods to run, comma separated.
        #[arg(long = "method", visible_alias = "methods", value_delimiter = ',', required = true)]
        methods: Vec<Method>,
        #[command(flatten)]
        common: Common,
    },
    /// Reproduce a published table with live saddle and Hayman columns.
    Table {
        /// 1 for n = 2..20, 2 for the nine large-n rows.
        #[arg(long, value_parser = clap::value_parser!(u8).range(1..=2))]
        which: u8,
        #[command(flatten)]
        common: Common,
    },
    /// Compare methods with the published values or with another method.
    Compare {
        #[command(flatten)]
        indices: Indices,
        #[arg(long = "methods", visible_alias = "method", value_delimiter = ',', required = true)]
        methods: Vec<Method>,
        /// `exact` for the published aₙ, or a method name.
        #[arg(long, default_value = "exact")]
        against: Against,
        #[command(flatten)]
        common: Common,
    },
    /// The constants bₖ with 1/Γ(z) = z(1 + z)·Σ bₖ zᵏ, k = 0..=max.
    Bn {
        /// Largest index, at most 39.
        #[arg(short = 'n', long = "max", value_parser = clap::value_parser!(u64).range(0..=39))]
        max: u64,
        #[command(flatten)]
        common: Common,
    },
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
pub struct Indices {
    #[arg(short = 'n')]
    pub n: Option<usize>,
    /// Inclusive range `A..B`.
    #[arg(long, value_parser = parse_range)]
    pub range: Option<RangeInclusive<usize>>,
}

impl Indices {
    pub fn values(&self) -> Vec<usize> {
        match (&self.n, &self.range) {
            (Some(n), _) => vec![*n],
            (None, Some(r)) => r.clone().collect(),
            (None, None) => Vec::new(),
        }
    }
}

#[derive(Debug, Args)]
pub struct Common {
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    pub format: Format,
    /// Significant digits of rendered values.
    #[arg(long, default_value_t = 10, value_parser = clap::value_parser!(u8).range(1..=17))]
    pub digits: u8,
    /// Contour radius for the Cauchy method (default: Hayman radius).
    #[arg(long)]
    pub radius: Option<f64>,
    /// Fixed node count for the Cauchy method.
    #[arg(long)]
    pub nodes: Option<usize>,
    #[arg(long, default_value = "bornemann")]
    pub phase_variant: PhaseVariant,
    /// Relative tolerance of quadrature and contour refinement.
    #[arg(long)]
    pub quad_tol: Option<f64>,
    /// Evaluate rows on a thread pool; output order is unchanged.
    #[arg(long)]
    pub parallel: bool,
}

impl Common {
    pub fn config(&self) -> MethodConfig {
        let mut cfg = MethodConfig {
            contour_radius: self.radius,
            contour_nodes: self.nodes,
            phase_variant: self.phase_variant,
            ..MethodConfig::default()
        };
        if let Some(t) = self.quad_tol {
            cfg.quad_rel_tol = t;
        }
        cfg
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
    Markdown,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Against {
    Exact,
    Method(Method),
}

impl FromStr for Against {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        if s == "exact" {
            return Ok(Against::Exact);
        }
        s.parse().map(Against::Method).map_err(|_| format!("expected `exact` or a method name, got {s:?}"))
    }
}

fn parse_range(s: &str) -> Result<RangeInclusive<usize>, String> {
    let (a, b) =
        s.split_once("..=").or_else(|| s.split_once("..")).ok_or_else(|| format!("expected A..B, got {s:?}"))?;
    let a: usize = a.trim().parse().map_err(|_| format!("bad range start {a:?}"))?;
    let b: usize = b.trim().parse().map_err(|_| format!("bad range end {b:?}"))?;
    if a > b {
        return Err(format!("empty range {a}..{b}"));
    }
    Ok(a..=b)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ranges() {
        assert_eq!(parse_range("2..20"), Ok(2..=20));
        assert_eq!(parse_range("5..=5"), Ok(5..=5));
        assert!(parse_range("9..3").is_err());
        assert!(parse_range("x..3").is_err());
        assert!(parse_range("7").is_err());
    }

    #[test]
    fn against() {
        assert_eq!("exact".parse::<Against>(), Ok(Against::Exact));
        assert_eq!("bourguet".parse::<Against>(), Ok(Against::Method(Method::Bourguet)));
        assert!("nope".parse::<Against>().is_err());
    }
}
