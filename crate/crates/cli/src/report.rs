//! Serializable results, one per subcommand, with their text rendering.
//!
//! Field order in each struct is the JSON field order.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use schurlang_core::local_factors::LocalLFactor;
use schurlang_core::lr::LrCoefficient;
use schurlang_core::poly::RationalFunction;
use schurlang_core::rep_ring::SchurSum;
use schurlang_core::scalar::{Scalar, ScalarRepr};
use schurlang_core::vinberg::{Mat2, UnitElement, UnitGroupDescriptor};
use schurlang_core::young::GroupAlgebraElement;
use schurlang_core::{GeneralizedCartanMatrix, Partition, UnramifiedParameter};

use crate::{poly_text, Via};

pub trait Render: Serialize {
    fn text(&self) -> String;
}

impl Render for LrCoefficient {
    fn text(&self) -> String {
        format!("{}\n", self.value)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DecomposeReport {
    pub nu: Partition,
    pub slots: usize,
    pub residual: bool,
    pub sum: SchurSum,
}

impl Render for DecomposeReport {
    fn text(&self) -> String {
        let args: Vec<String> = (1..=self.slots).map(|i| format!("V{i}")).collect();
        let head = if self.residual { "R" } else { "S" };
        let mut s = format!("{head}_{}({}): {} terms\n", self.nu, args.join(" + "), self.sum.len());
        for (factors, mult) in self.sum.terms() {
            let parts: Vec<String> = factors.iter().map(|p| p.to_string()).collect();
            let _ = writeln!(s, "{mult:>4}  {}", parts.join(" ⊗ "));
        }
        s
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DimReport {
    pub lam: Partition,
    pub n: usize,
    pub via: Via,
    pub dim: u64,
}

impl Render for DimReport {
    fn text(&self) -> String {
        format!("{}\n", self.dim)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PermTerm {
    pub perm: String,
    pub coeff: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TensorTerm {
    pub indices: Vec<usize>,
    pub coeff: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SymmetrizerReport {
    pub lam: Partition,
    pub element: String,
    pub terms: Vec<PermTerm>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub image: Option<Vec<TensorTerm>>,
}

impl SymmetrizerReport {
    pub fn new(lam: Partition, c: &GroupAlgebraElement, image: Option<Vec<TensorTerm>>) -> Self {
        let terms = c
            .terms()
            .map(|(g, x)| PermTerm { perm: g.to_string(), coeff: x.to_string() })
            .collect();
        SymmetrizerReport { lam, element: c.to_string(), terms, image }
    }
}

fn tensor_text(indices: &[usize]) -> String {
    indices.iter().map(|i| format!("v{i}")).collect::<Vec<_>>().join("⊗")
}

impl Render for SymmetrizerReport {
    fn text(&self) -> String {
        let mut s = format!("{}\n", self.element);
        if let Some(image) = &self.image {
            let mut line = String::new();
            for (k, t) in image.iter().enumerate() {
                let (sign, mag) = match t.coeff.strip_prefix('-') {
                    Some(m) => ("-", m.to_string()),
                    None => ("+", t.coeff.clone()),
                };
                if k == 0 {
                    if sign == "-" {
                        line.push('-');
                    }
                } else {
                    let _ = write!(line, " {sign} ");
                }
                if mag != "1" {
                    let _ = write!(line, "{mag}·");
                }
                line.push_str(&tensor_text(&t.indices));
            }
            if image.is_empty() {
                line.push('0');
            }
            let _ = writeln!(s, "{line}");
        }
        s
    }
}

fn coeff_reprs(coeffs: &[Scalar]) -> Vec<ScalarRepr> {
    coeffs.iter().map(ScalarRepr::from).collect()
}

fn coeffs_back(reprs: &[ScalarRepr]) -> Vec<Scalar> {
    reprs
        .iter()
        .map(|r| Scalar::try_from(r.clone()).expect("report holds valid scalars"))
        .collect()
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LFactorReport {
    pub nu: Partition,
    pub parameter: UnramifiedParameter,
    pub degree: usize,
    /// Coefficients of the reciprocal polynomial in `t = q^{-s}`, constant first.
    pub reciprocal: Vec<ScalarRepr>,
}

impl LFactorReport {
    pub fn new(nu: Partition, parameter: UnramifiedParameter, l: &LocalLFactor) -> Self {
        LFactorReport { nu, parameter, degree: l.degree(), reciprocal: coeff_reprs(l.reciprocal.coeffs()) }
    }
}

impl Render for LFactorReport {
    fn text(&self) -> String {
        let coeffs = coeffs_back(&self.reciprocal);
        let list: Vec<String> = coeffs.iter().map(schurlang_core::scalar::format_scalar).collect();
        format!("{}\n1/L = {}\n", list.join(", "), poly_text(&coeffs))
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GammaReport {
    pub nu: Partition,
    pub parameter: UnramifiedParameter,
    /// Reduced `numerator / denominator` in `t`, denominator monic.
    pub numerator: Vec<ScalarRepr>,
    pub denominator: Vec<ScalarRepr>,
}

impl GammaReport {
    pub fn new(nu: Partition, parameter: UnramifiedParameter, value: &RationalFunction<Scalar>) -> Self {
        GammaReport {
            nu,
            parameter,
            numerator: coeff_reprs(value.numerator().coeffs()),
            denominator: coeff_reprs(value.denominator().coeffs()),
        }
    }
}

impl Render for GammaReport {
    fn text(&self) -> String {
        format!(
            "({}) / ({})\n",
            poly_text(&coeffs_back(&self.numerator)),
            poly_text(&coeffs_back(&self.denominator))
        )
    }
}

impl Render for UnitGroupDescriptor {
    fn text(&self) -> String {
        format!("{self}\n")
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CartanReport {
    #[serde(rename = "type")]
    pub cartan_type: String,
    pub rank: usize,
    pub v: Vec<i64>,
    pub entries: GeneralizedCartanMatrix,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub weight_check: Option<bool>,
}

impl Render for CartanReport {
    fn text(&self) -> String {
        let mut s = format!("{}\n", self.entries);
        if let Some(ok) = self.weight_check {
            let _ = writeln!(s, "weight check: {}", if ok { "pass" } else { "fail" });
        }
        s
    }
}

pub fn matrix_repr(m: &Mat2) -> Vec<Vec<ScalarRepr>> {
    m.iter().map(|row| row.iter().map(ScalarRepr::from).collect()).collect()
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct UnitElementRepr {
    pub a: ScalarRepr,
    pub g: Vec<Vec<ScalarRepr>>,
}

impl From<&UnitElement> for UnitElementRepr {
    fn from(u: &UnitElement) -> Self {
        UnitElementRepr { a: ScalarRepr::from(&u.a), g: matrix_repr(&u.g) }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MonoidReport {
    pub n: u32,
    pub a: ScalarRepr,
    pub m: Vec<Vec<ScalarRepr>>,
    pub member: bool,
    /// `(a, a^{-ℓ} m)` in `G_n` when `(a, m)` is a unit.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub unit_preimage: Option<UnitElementRepr>,
}

fn repr_text(r: &ScalarRepr) -> String {
    let s = Scalar::try_from(r.clone()).expect("report holds valid scalars");
    schurlang_core::scalar::format_scalar(&s)
}

impl Render for MonoidReport {
    fn text(&self) -> String {
        let mut s = format!("{}\n", self.member);
        if let Some(u) = &self.unit_preimage {
            let g: Vec<String> = u
                .g
                .iter()
                .map(|row| format!("[{}]", row.iter().map(repr_text).collect::<Vec<_>>().join(", ")))
                .collect();
            let _ = writeln!(s, "unit, preimage (a = {}, g = [{}])", repr_text(&u.a), g.join(", "));
        }
        s
    }
}
