//! Unit groups of Vinberg monoids for `SL_n` highest weights, the `GL_2`
//! symmetric-power monoids `M_n`, and generalized Cartan matrices.

use std::fmt;

use num_integer::Integer;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::scalar::{format_scalar, Scalar};

/// The character `ξ ↦ ξ^exponent` by which the center `μ_n` of `SL_n` acts on
/// `V_λ`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct CenterCharacter {
    pub n: usize,
    pub exponent: usize,
}

pub fn center_character(lam: &Partition, n: usize) -> Result<CenterCharacter> {
    if n == 0 {
        return Err(Error::InvalidParameter("rank must be positive".into()));
    }
    if lam.rows() > n {
        return Err(Error::RowOverflow { rows: lam.rows(), rank: n });
    }
    Ok(CenterCharacter { n, exponent: lam.size() as usize % n })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Presentation {
    #[serde(rename = "GL_n")]
    GlN,
    /// `(G_m × SL_n)/S` with `S = ⟨ξ^embedding_exponent⟩` of order
    /// `subgroup_order` in the center.
    Quotient { subgroup_order: usize, embedding_exponent: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct UnitGroupDescriptor {
    pub n: usize,
    pub kernel_order: usize,
    pub quotient_order: usize,
    pub presentation: Presentation,
}

impl fmt::Display for UnitGroupDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.presentation {
            Presentation::GlN => write!(f, "GL_{}", self.n),
            Presentation::Quotient { subgroup_order, embedding_exponent } => write!(
                f,
                "(G_m x SL_{})/S, S = <xi^{embedding_exponent}> of order {subgroup_order}",
                self.n
            ),
        }?;
        write!(f, " (|ker omega| = {}, |image| = {})", self.kernel_order, self.quotient_order)
    }
}

pub fn unit_group(lam: &Partition, n: usize) -> Result<UnitGroupDescriptor> {
    let chi = center_character(lam, n)?;
    // gcd(n, 0) = n: the trivial character has all of μ_n as kernel
    let kernel_order = n.gcd(&chi.exponent);
    let quotient_order = n / kernel_order;
    let presentation = if kernel_order == 1 {
        Presentation::GlN
    } else {
        Presentation::Quotient { subgroup_order: quotient_order, embedding_exponent: chi.exponent }
    };
    Ok(UnitGroupDescriptor { n, kernel_order, quotient_order, presentation })
}

pub type Mat2 = [[Scalar; 2]; 2];

pub fn mat2_identity() -> Mat2 {
    [[Scalar::one(), Scalar::zero()], [Scalar::zero(), Scalar::one()]]
}

pub fn mat2_det(m: &Mat2) -> Scalar {
    m[0][0].clone() * m[1][1].clone() - m[0][1].clone() * m[1][0].clone()
}

pub fn mat2_mul(a: &Mat2, b: &Mat2) -> Mat2 {
    let e = |i: usize, j: usize| a[i][0].clone() * b[0][j].clone() + a[i][1].clone() * b[1][j].clone();
    [[e(0, 0), e(0, 1)], [e(1, 0), e(1, 1)]]
}

pub fn mat2_scale(m: &Mat2, c: &Scalar) -> Mat2 {
    let e = |i: usize, j: usize| m[i][j].clone() * c.clone();
    [[e(0, 0), e(0, 1)], [e(1, 0), e(1, 1)]]
}

/// A point `(a, m)` of `A¹ × End(A²)`, tagged with the index `n` of `M_n`.
#[derive(Debug, Clone, PartialEq)]
pub struct MonoidElementGL2Sym {
    pub a: Scalar,
    pub m: Mat2,
    pub n: u32,
}

impl MonoidElementGL2Sym {
    pub fn identity(n: u32) -> Self {
        MonoidElementGL2Sym { a: Scalar::one(), m: mat2_identity(), n }
    }

    /// Componentwise product.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.n != other.n {
            return Err(Error::InvalidParameter(format!(
                "monoid indices differ: {} and {}",
                self.n, other.n
            )));
        }
        Ok(MonoidElementGL2Sym {
            a: self.a.clone() * other.a.clone(),
            m: mat2_mul(&self.m, &other.m),
            n: self.n,
        })
    }
}

impl fmt::Display for MonoidElementGL2Sym {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = |i: usize, j: usize| format_scalar(&self.m[i][j]);
        write!(
            f,
            "(a = {}, m = [[{}, {}], [{}, {}]], n = {})",
            format_scalar(&self.a),
            s(0, 0),
            s(0, 1),
            s(1, 0),
            s(1, 1),
            self.n
        )
    }
}

/// `a^n = det(m)`.
pub fn gl2_sym_monoid_contains(e: &MonoidElementGL2Sym) -> bool {
    num_traits::pow(e.a.clone(), e.n as usize) == mat2_det(&e.m)
}

/// An element of `G_n`: `(a, g_1) ∈ GL_1 × SL_2` for even `n`, and for odd `n`
/// some `g ∈ GL_2` stored as `(det g, g)`.
#[derive(Debug, Clone, PartialEq)]
pub struct UnitElement {
    pub a: Scalar,
    pub g: Mat2,
}

impl UnitElement {
    pub fn mul(&self, other: &Self) -> Self {
        UnitElement { a: self.a.clone() * other.a.clone(), g: mat2_mul(&self.g, &other.g) }
    }
}

fn check_unit_domain(n: u32, e: &UnitElement) -> Result<()> {
    if n == 0 {
        return Err(Error::InvalidParameter("n must be positive".into()));
    }
    if e.a.is_zero() {
        return Err(Error::NotInDomain("a must be invertible".into()));
    }
    let det = mat2_det(&e.g);
    if n % 2 == 0 {
        if !det.is_one() {
            return Err(Error::NotInDomain(format!("det g_1 = {} but must be 1", format_scalar(&det))));
        }
    } else if det != e.a {
        return Err(Error::NotInDomain(format!(
            "a = {} must equal det g = {}",
            format_scalar(&e.a),
            format_scalar(&det)
        )));
    }
    Ok(())
}

/// `(a, g) ↦ (a, a^ℓ g)` with `ℓ = ⌊n/2⌋`.
pub fn gl2_sym_unit_iso(n: u32, e: &UnitElement) -> Result<MonoidElementGL2Sym> {
    check_unit_domain(n, e)?;
    let al = num_traits::pow(e.a.clone(), (n / 2) as usize);
    Ok(MonoidElementGL2Sym { a: e.a.clone(), m: mat2_scale(&e.g, &al), n })
}

/// Inverse of [`gl2_sym_unit_iso`] on units of `M_n`: `(a, m) ↦ (a, a^{−ℓ} m)`.
pub fn gl2_sym_unit_iso_inverse(e: &MonoidElementGL2Sym) -> Result<UnitElement> {
    if e.a.is_zero() || !gl2_sym_monoid_contains(e) {
        return Err(Error::NotInDomain("not a unit of M_n".into()));
    }
    let al = num_traits::pow(e.a.clone(), (e.n / 2) as usize);
    let out = UnitElement { a: e.a.clone(), g: mat2_scale(&e.m, &(Scalar::one() / al)) };
    check_unit_domain(e.n, &out)?;
    Ok(out)
}

/// Square integer matrix with 2 on the diagonal, non-positive off-diagonal
/// entries and a symmetric zero pattern.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "Vec<Vec<i64>>", into = "Vec<Vec<i64>>")]
pub struct GeneralizedCartanMatrix(Vec<Vec<i64>>);

impl GeneralizedCartanMatrix {
    pub fn new(entries: Vec<Vec<i64>>) -> Result<Self> {
        let r = entries.len();
        if let Some((i, row)) = entries.iter().enumerate().find(|(_, row)| row.len() != r) {
            return Err(Error::InvalidGcm(format!("row {i} has {} entries, expected {r}", row.len())));
        }
        for (i, row) in entries.iter().enumerate() {
            for (j, &x) in row.iter().enumerate() {
                if i == j && x != 2 {
                    return Err(Error::InvalidGcm(format!("diagonal entry ({i},{i}) is {x}")));
                }
                if i != j && x > 0 {
                    return Err(Error::InvalidGcm(format!("entry ({i},{j}) = {x} is positive")));
                }
                if (x == 0) != (entries[j][i] == 0) {
                    return Err(Error::InvalidGcm(format!("zero pattern differs at ({i},{j})")));
                }
            }
        }
        Ok(GeneralizedCartanMatrix(entries))
    }

    pub fn entries(&self) -> &[Vec<i64>] {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.len()
    }

    pub fn entry(&self, i: usize, j: usize) -> i64 {
        self.0[i][j]
    }
}

impl TryFrom<Vec<Vec<i64>>> for GeneralizedCartanMatrix {
    type Error = Error;
    fn try_from(v: Vec<Vec<i64>>) -> Result<Self> {
        GeneralizedCartanMatrix::new(v)
    }
}

impl From<GeneralizedCartanMatrix> for Vec<Vec<i64>> {
    fn from(c: GeneralizedCartanMatrix) -> Self {
        c.0
    }
}

impl fmt::Display for GeneralizedCartanMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, row) in self.0.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            let cells: Vec<String> = row.iter().map(|x| format!("{x:>3}")).collect();
            write!(f, "[{}]", cells.join(""))?;
        }
        Ok(())
    }
}

/// Cartan matrix of type `A_rank`.
pub fn a_type_cartan(rank: usize) -> GeneralizedCartanMatrix {
    let entries = (0..rank)
        .map(|i| {
            (0..rank)
                .map(|j| match i.abs_diff(j) {
                    0 => 2,
                    1 => -1,
                    _ => 0,
                })
                .collect()
        })
        .collect();
    GeneralizedCartanMatrix(entries)
}

/// The block matrix `[C_0, −vᵀ; −v, 2]`.
pub fn cartan_matrix(c0: &GeneralizedCartanMatrix, v: &[i64]) -> Result<GeneralizedCartanMatrix> {
    let r = c0.size();
    if v.len() != r {
        return Err(Error::InvalidGcm(format!("v has length {}, expected {r}", v.len())));
    }
    if let Some(x) = v.iter().find(|&&x| x < 0) {
        return Err(Error::InvalidGcm(format!("v has negative entry {x}")));
    }
    let mut entries: Vec<Vec<i64>> = c0
        .entries()
        .iter()
        .zip(v)
        .map(|(row, &vi)| row.iter().copied().chain([-vi]).collect())
        .collect();
    entries.push(v.iter().map(|&x| -x).chain([2]).collect());
    GeneralizedCartanMatrix::new(entries)
}

/// Checks `−c_{i,last} = λ_i − λ_{i+1}` for `i < n−1`, reading `λ` from the
/// partition rather than from any `v`. The last row must mirror the last
/// column.
pub fn weight_check(c: &GeneralizedCartanMatrix, lam: &Partition, n: usize) -> Result<bool> {
    if c.size() != n {
        return Err(Error::ShapeMismatch(format!(
            "matrix has size {}, expected {n} for A_{}",
            c.size(),
            n.saturating_sub(1)
        )));
    }
    if lam.rows() > n {
        return Err(Error::RowOverflow { rows: lam.rows(), rank: n });
    }
    let last = n - 1;
    Ok((0..last).all(|i| {
        let pairing = lam.part(i) as i64 - lam.part(i + 1) as i64;
        -c.entry(i, last) == pairing && -c.entry(last, i) == pairing
    }))
}
