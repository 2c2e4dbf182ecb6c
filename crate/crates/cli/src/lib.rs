//! Command-line front end. [`run`] parses arguments, dispatches to the core
//! library and returns the exit code together with everything written.

use std::fmt::Write as _;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use schurlang_core::error::Error;
use schurlang_core::partition::dim_schur;
use schurlang_core::rep_ring::{decompose_sum, residual};
use schurlang_core::scalar::{format_scalar, parse_scalar, Scalar, ScalarRepr};
use schurlang_core::vinberg::{
    a_type_cartan, cartan_matrix, gl2_sym_monoid_contains, gl2_sym_unit_iso_inverse, unit_group, weight_check,
    MonoidElementGL2Sym,
};
use schurlang_core::young::{apply_to_basis, schur_image_dim_bounded, symmetrizer, DEFAULT_TENSOR_LIMIT};
use schurlang_core::{local_factors, lr, Partition, UnramifiedParameter};

pub mod report;
pub mod verify;

use report::*;

const PARTITION_HELP: &str = "comma-separated weakly decreasing parts, e.g. 4,2; `0` or an empty value is the empty partition";

#[derive(Debug, Parser)]
#[command(name = "schurlang", version, about = "Exact computations with Schur functors, local factors and Vinberg monoids")]
pub struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize, serde::Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Via {
    /// Count semistandard tableaux (hook-content formula).
    Ssyt,
    /// Rank of the Young symmetrizer on the tensor power.
    Tensor,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum CartanType {
    #[value(name = "A", alias = "a")]
    A,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Littlewood–Richardson coefficient N_{λμν}.
    Lr {
        #[arg(long, value_parser = parse_partition, help = PARTITION_HELP)]
        lam: Partition,
        #[arg(long, value_parser = parse_partition, help = PARTITION_HELP)]
        mu: Partition,
        #[arg(long, value_parser = parse_partition, help = PARTITION_HELP)]
        nu: Partition,
    },
    /// Decomposition of S_ν(V_1 ⊕ … ⊕ V_slots) into tensor products.
    Decompose {
        #[arg(long, value_parser = parse_partition, help = PARTITION_HELP)]
        nu: Partition,
        #[arg(long, default_value_t = 2, value_parser = clap::value_parser!(u32).range(1..=8))]
        slots: u32,
        /// Drop the pure terms S_ν(V_i), leaving the residual.
        #[arg(long)]
        residual: bool,
    },
    /// Dimension of S_λ(ℂⁿ).
    #[command(alias = "schur-dim")]
    Dim {
        #[arg(long, value_parser = parse_partition, help = PARTITION_HELP)]
        lam: Partition,
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = Via::Ssyt)]
        via: Via,
    },
    /// Young symmetrizer c_λ as a signed sum of permutations.
    Symmetrizer {
        #[arg(long, value_parser = parse_partition, help = PARTITION_HELP)]
        lam: Partition,
        /// Also apply c_λ to the basis tensor v_{i_1}⊗…⊗v_{i_m} (1-based indices).
        #[arg(long, value_delimiter = ',')]
        apply: Option<Vec<usize>>,
    },
    /// Reciprocal polynomial of the unramified L-factor of S_ν.
    Lfactor {
        #[arg(long, value_parser = parse_partition, help = PARTITION_HELP)]
        nu: Partition,
        /// Eigenvalues as `p/q` or Gaussian rationals `a+bi`, comma-separated.
        #[arg(long, value_parser = parse_scalars, allow_hyphen_values = true)]
        eigen: ScalarList,
        #[arg(long)]
        q: u64,
    },
    /// Unramified γ-factor L(1−s, dual)/L(s) as a rational function of t = q^{−s}.
    Gamma {
        #[arg(long, value_parser = parse_partition, help = PARTITION_HELP)]
        nu: Partition,
        #[arg(long, value_parser = parse_scalars, allow_hyphen_values = true)]
        eigen: ScalarList,
        #[arg(long)]
        q: u64,
    },
    /// Unit group of the Vinberg monoid attached to λ for SL_n.
    UnitGroup {
        #[arg(long, value_parser = parse_partition, help = PARTITION_HELP)]
        lam: Partition,
        #[arg(long)]
        n: usize,
    },
    /// Generalized Cartan matrix [C_0, −vᵀ; −v, 2].
    Cartan {
        #[arg(long = "type", value_enum, default_value_t = CartanType::A)]
        kind: CartanType,
        #[arg(long)]
        rank: usize,
        #[arg(long, value_delimiter = ',', allow_negative_numbers = true)]
        v: Vec<i64>,
        /// Check −c_{i,last} against λ_i − λ_{i+1} for this partition.
        #[arg(long, value_parser = parse_partition, help = PARTITION_HELP)]
        lam: Option<Partition>,
    },
    /// Membership of (a, m) in M_n = {aⁿ = det m}.
    MonoidCheck {
        #[arg(long)]
        n: u32,
        #[arg(long, value_parser = parse_one_scalar, allow_hyphen_values = true)]
        a: Scalar,
        /// Entries m11,m12,m21,m22.
        #[arg(long, value_parser = parse_scalars, allow_hyphen_values = true)]
        m: ScalarList,
    },
    /// Reproduce the worked examples and print a pass/fail table.
    Verify {
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

fn parse_partition(s: &str) -> Result<Partition, String> {
    s.parse::<Partition>().map_err(|e| e.to_string())
}

fn parse_one_scalar(s: &str) -> Result<Scalar, String> {
    parse_scalar(s).map_err(|e| e.to_string())
}

/// A comma-separated list of exact scalars given as one flag value.
#[derive(Debug, Clone, PartialEq)]
pub struct ScalarList(pub Vec<Scalar>);

fn parse_scalars(s: &str) -> Result<ScalarList, String> {
    if s.trim().is_empty() {
        return Ok(ScalarList(Vec::new()));
    }
    s.split(',').map(parse_one_scalar).collect::<Result<_, _>>().map(ScalarList)
}

/// Exit status and captured streams of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

enum Failure {
    Usage(String),
    Compute(String),
}

fn usage(flag: &str, e: impl std::fmt::Display) -> Failure {
    Failure::Usage(format!("invalid value for '{flag}': {e}"))
}

/// Library errors raised by a precondition on the inputs count as usage
/// errors; the rest are computation errors.
fn classify(flag: &str, e: Error) -> Failure {
    match e {
        Error::SizeBound { .. } | Error::DivergenceGuard { .. } | Error::UnsupportedVirtual(_) => {
            Failure::Compute(e.to_string())
        }
        e => usage(flag, e),
    }
}

pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome { code: 2, stdout: String::new(), stderr: text }
            } else {
                Outcome { code: 0, stdout: text, stderr: String::new() }
            };
        }
    };
    match execute(&cli) {
        Ok((code, stdout)) => Outcome { code, stdout, stderr: String::new() },
        Err(Failure::Usage(msg)) => Outcome { code: 2, stdout: String::new(), stderr: format!("error: {msg}\n") },
        Err(Failure::Compute(msg)) => Outcome { code: 1, stdout: String::new(), stderr: format!("error: {msg}\n") },
    }
}

fn emit<R: Render>(format: Format, report: &R) -> String {
    match format {
        Format::Json => {
            let mut s = serde_json::to_string(report).expect("reports serialize");
            s.push('\n');
            s
        }
        Format::Text => report.text(),
    }
}

fn parameter(eigen: &ScalarList, q: u64) -> Result<UnramifiedParameter, Failure> {
    UnramifiedParameter::new(eigen.0.clone(), q).map_err(|e| usage("--eigen/--q", e))
}

fn execute(cli: &Cli) -> Result<(i32, String), Failure> {
    let f = cli.format;
    let out = match &cli.command {
        Command::Lr { lam, mu, nu } => emit(f, &lr::LrCoefficient::compute(lam.clone(), mu.clone(), nu.clone())),
        Command::Decompose { nu, slots, residual: res } => {
            let slots = *slots as usize;
            let sum = if *res {
                if slots < 2 {
                    return Err(usage("--slots", "the residual needs at least 2 slots"));
                }
                residual(nu, slots)
            } else {
                decompose_sum(nu, slots)
            };
            emit(f, &DecomposeReport { nu: nu.clone(), slots, residual: *res, sum })
        }
        Command::Dim { lam, n, via } => {
            let dim = match via {
                Via::Ssyt => dim_schur(lam, *n),
                Via::Tensor => {
                    schur_image_dim_bounded(lam, *n, DEFAULT_TENSOR_LIMIT).map_err(|e| classify("--lam/--n", e))?
                }
            };
            emit(f, &DimReport { lam: lam.clone(), n: *n, via: *via, dim })
        }
        Command::Symmetrizer { lam, apply } => {
            let c = symmetrizer(lam);
            let image = match apply {
                None => None,
                Some(idx) => {
                    if idx.len() != lam.size() as usize || idx.contains(&0) {
                        return Err(usage(
                            "--apply",
                            format!("expected {} positive indices", lam.size()),
                        ));
                    }
                    let tuple: Vec<usize> = idx.iter().map(|i| i - 1).collect();
                    Some(
                        apply_to_basis(&c, &tuple)
                            .into_iter()
                            .map(|(t, coeff)| TensorTerm {
                                indices: t.iter().map(|i| i + 1).collect(),
                                coeff: coeff.to_string(),
                            })
                            .collect(),
                    )
                }
            };
            emit(f, &SymmetrizerReport::new(lam.clone(), &c, image))
        }
        Command::Lfactor { nu, eigen, q } => {
            let p = parameter(eigen, *q)?;
            let l = local_factors::local_l_factor(&p, nu);
            emit(f, &LFactorReport::new(nu.clone(), p, &l))
        }
        Command::Gamma { nu, eigen, q } => {
            let p = parameter(eigen, *q)?;
            let g = local_factors::gamma_unramified(&p, nu);
            emit(f, &GammaReport::new(nu.clone(), p, &g.value()))
        }
        Command::UnitGroup { lam, n } => {
            let d = unit_group(lam, *n).map_err(|e| classify("--lam/--n", e))?;
            emit(f, &d)
        }
        Command::Cartan { kind: CartanType::A, rank, v, lam } => {
            let c = cartan_matrix(&a_type_cartan(*rank), v).map_err(|e| classify("--v", e))?;
            let weight_check = match lam {
                Some(lam) => Some(weight_check(&c, lam, rank + 1).map_err(|e| classify("--lam", e))?),
                None => None,
            };
            emit(f, &CartanReport { cartan_type: "A".into(), rank: *rank, v: v.clone(), entries: c, weight_check })
        }
        Command::MonoidCheck { n, a, m } => {
            let [m11, m12, m21, m22]: [Scalar; 4] = m
                .0
                .clone()
                .try_into()
                .map_err(|_| usage("--m", format!("expected 4 entries, got {}", m.0.len())))?;
            let e = MonoidElementGL2Sym { a: a.clone(), m: [[m11, m12], [m21, m22]], n: *n };
            let member = gl2_sym_monoid_contains(&e);
            let preimage = gl2_sym_unit_iso_inverse(&e).ok().map(|u| UnitElementRepr::from(&u));
            emit(f, &MonoidReport { n: *n, a: ScalarRepr::from(a), m: matrix_repr(&e.m), member, unit_preimage: preimage })
        }
        Command::Verify { seed } => {
            let report = verify::run_all(*seed);
            let code = if report.failed == 0 { 0 } else { 1 };
            return Ok((code, emit(f, &report)));
        }
    };
    Ok((0, out))
}

/// `1 - 6t + 15t^2`, with exact coefficients.
pub fn poly_text(coeffs: &[Scalar]) -> String {
    use num_traits::Zero;
    let mut s = String::new();
    for (k, c) in coeffs.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let mut body = format_scalar(c);
        let negative = body.starts_with('-') && c.im.is_zero();
        if negative {
            body.remove(0);
        }
        if !c.im.is_zero() && !c.re.is_zero() {
            body = format!("({body})");
        }
        let var = match k {
            0 => String::new(),
            1 => "t".into(),
            _ => format!("t^{k}"),
        };
        if k > 0 && body == "1" {
            body.clear();
        }
        if s.is_empty() {
            if negative {
                s.push('-');
            }
        } else {
            s.push_str(if negative { " - " } else { " + " });
        }
        let _ = write!(s, "{body}{var}");
    }
    if s.is_empty() {
        s.push('0');
    }
    s
}
