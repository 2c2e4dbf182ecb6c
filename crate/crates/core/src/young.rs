//! The rational group algebra of `S_m`, Young symmetrizers, and their action on
//! tensor powers.
//!
//! Cells of a Young diagram are numbered `1..m` row by row. Products follow
//! `e_g · e_h = e_{gh}` where `gh` applies `h` first. A permutation `σ` acts on
//! the right of `V^{⊗m}` by `v_1⊗…⊗v_m ↦ v_{σ(1)}⊗…⊗v_{σ(m)}`; in that
//! convention `c_{(2,1)} = 1 + e_{(12)} − e_{(13)} − e_{(132)}`.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{kron_power, rank_fraction_free, rref, transpose, Matrix};
use crate::partition::Partition;
use crate::scalar::Field;

/// Default cap on `n^m` for [`schur_image_dim`].
pub const DEFAULT_TENSOR_LIMIT: usize = 4096;

/// A bijection of `{0, …, m−1}` stored as its image list.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Permutation(Vec<usize>);

impl Permutation {
    pub fn identity(m: usize) -> Self {
        Permutation((0..m).collect())
    }

    /// From zero-based images; `None` unless every value appears once.
    pub fn from_images(images: Vec<usize>) -> Option<Self> {
        let mut seen = vec![false; images.len()];
        for &i in &images {
            if i >= images.len() || std::mem::replace(&mut seen[i], true) {
                return None;
            }
        }
        Some(Permutation(images))
    }

    /// From one-based cycles, e.g. `&[&[1, 3, 2]]` for `(132)`.
    pub fn from_cycles(m: usize, cycles: &[&[usize]]) -> Option<Self> {
        let mut images: Vec<usize> = (0..m).collect();
        for cycle in cycles {
            for (k, &a) in cycle.iter().enumerate() {
                let b = cycle[(k + 1) % cycle.len()];
                if a == 0 || b == 0 || a > m || b > m {
                    return None;
                }
                images[a - 1] = b - 1;
            }
        }
        Self::from_images(images)
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.0
    }

    pub fn apply(&self, i: usize) -> usize {
        self.0[i]
    }

    /// `self ∘ other`: apply `other`, then `self`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        Permutation(other.0.iter().map(|&i| self.0[i]).collect())
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.0.len()];
        for (i, &j) in self.0.iter().enumerate() {
            inv[j] = i;
        }
        Permutation(inv)
    }

    /// Non-trivial cycles, one-based, each starting at its smallest point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.0.len()];
        let mut out = Vec::new();
        for start in 0..self.0.len() {
            if seen[start] || self.0[start] == start {
                continue;
            }
            let mut cycle = Vec::new();
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                cycle.push(i + 1);
                i = self.0[i];
            }
            out.push(cycle);
        }
        out
    }

    pub fn sign(&self) -> i64 {
        let transpositions: usize = self.cycles().iter().map(|c| c.len() - 1).sum();
        if transpositions % 2 == 0 {
            1
        } else {
            -1
        }
    }

    fn moved_points(&self) -> usize {
        self.0.iter().enumerate().filter(|&(i, &j)| i != j).count()
    }
}

/// Cycle notation; the identity prints as `1`.
impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return write!(f, "1");
        }
        for c in cycles {
            write!(f, "(")?;
            let sep = if self.degree() > 9 { "," } else { "" };
            let parts: Vec<String> = c.iter().map(usize::to_string).collect();
            write!(f, "{}", parts.join(sep))?;
            write!(f, ")")?;
        }
        Ok(())
    }
}

/// All of `S_m`, in lexicographic order of images.
pub fn all_permutations(m: usize) -> Vec<Permutation> {
    block_permutations(&[(0..m).collect()], m)
}

/// Permutations of `{0..m}` that map each block onto itself.
fn block_permutations(blocks: &[Vec<usize>], m: usize) -> Vec<Permutation> {
    fn perms_of(items: &[usize]) -> Vec<Vec<usize>> {
        if items.is_empty() {
            return vec![Vec::new()];
        }
        let mut out = Vec::new();
        for (k, &first) in items.iter().enumerate() {
            let mut rest = items.to_vec();
            rest.remove(k);
            for mut tail in perms_of(&rest) {
                tail.insert(0, first);
                out.push(tail);
            }
        }
        out
    }

    let mut out = vec![Permutation::identity(m)];
    for block in blocks {
        let arrangements = perms_of(block);
        let mut next = Vec::with_capacity(out.len() * arrangements.len());
        for g in &out {
            for arr in &arrangements {
                let mut images = g.0.clone();
                for (&src, &dst) in block.iter().zip(arr) {
                    images[src] = dst;
                }
                next.push(Permutation(images));
            }
        }
        out = next;
    }
    out.sort();
    out
}

/// Zero-based cell numbers of each row of `Y_λ`, numbered row-major.
fn row_blocks(lam: &Partition) -> Vec<Vec<usize>> {
    let mut start = 0;
    lam.parts()
        .iter()
        .map(|&len| {
            let b = (start..start + len as usize).collect();
            start += len as usize;
            b
        })
        .collect()
}

fn column_blocks(lam: &Partition) -> Vec<Vec<usize>> {
    let rows = row_blocks(lam);
    (0..lam.part(0) as usize)
        .map(|c| rows.iter().filter(|r| r.len() > c).map(|r| r[c]).collect())
        .collect()
}

/// `P_λ`: permutations preserving every row of `Y_λ`.
pub fn row_group(lam: &Partition) -> Vec<Permutation> {
    block_permutations(&row_blocks(lam), lam.size())
}

/// `Q_λ`: permutations preserving every column of `Y_λ`.
pub fn column_group(lam: &Partition) -> Vec<Permutation> {
    block_permutations(&column_blocks(lam), lam.size())
}

/// A finitely supported rational combination of permutations of one degree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupAlgebraElement {
    degree: usize,
    coeffs: BTreeMap<Permutation, BigRational>,
}

impl GroupAlgebraElement {
    pub fn zero(degree: usize) -> Self {
        GroupAlgebraElement { degree, coeffs: BTreeMap::new() }
    }

    pub fn one(degree: usize) -> Self {
        Self::basis(Permutation::identity(degree))
    }

    /// `e_g`.
    pub fn basis(g: Permutation) -> Self {
        let mut x = Self::zero(g.degree());
        x.add_term(g, BigRational::one());
        x
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn coefficient(&self, g: &Permutation) -> BigRational {
        self.coeffs.get(g).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Permutation, &BigRational)> {
        self.coeffs.iter()
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn add_term(&mut self, g: Permutation, c: BigRational) {
        assert_eq!(g.degree(), self.degree, "permutation degree");
        let slot = self.coeffs.entry(g.clone()).or_insert_with(BigRational::zero);
        *slot += c;
        if slot.is_zero() {
            self.coeffs.remove(&g);
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        check_degrees(self, other)?;
        let mut out = self.clone();
        for (g, c) in &other.coeffs {
            out.add_term(g.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        let mut out = Self::zero(self.degree);
        for (g, a) in &self.coeffs {
            out.add_term(g.clone(), a * c);
        }
        out
    }

    /// If `self = κ · other` for a rational `κ`, returns `κ`.
    pub fn ratio_to(&self, other: &Self) -> Option<BigRational> {
        let (g, c) = other.coeffs.iter().next()?;
        let kappa = self.coefficient(g) / c;
        (other.scale(&kappa) == *self).then_some(kappa)
    }
}

fn check_degrees(x: &GroupAlgebraElement, y: &GroupAlgebraElement) -> Result<()> {
    if x.degree != y.degree {
        Err(Error::DegreeMismatch { left: x.degree, right: y.degree })
    } else {
        Ok(())
    }
}

/// Convolution product in `ℚ[S_m]`.
pub fn algebra_multiply(x: &GroupAlgebraElement, y: &GroupAlgebraElement) -> Result<GroupAlgebraElement> {
    check_degrees(x, y)?;
    let mut out = GroupAlgebraElement::zero(x.degree);
    for (g, a) in &x.coeffs {
        for (h, b) in &y.coeffs {
            out.add_term(g.compose(h), a * b);
        }
    }
    Ok(out)
}

/// Terms ordered by number of moved points, then cycle notation: `1 + (12) − (13) − (132)`.
impl fmt::Display for GroupAlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut terms: Vec<(&Permutation, &BigRational)> = self.coeffs.iter().collect();
        terms.sort_by_key(|(g, _)| (g.moved_points(), g.to_string()));
        for (k, (g, c)) in terms.into_iter().enumerate() {
            let sign = if c.is_negative() { "-" } else { "+" };
            if k == 0 {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            let abs = c.abs();
            let is_identity = g.moved_points() == 0;
            match (abs.is_one(), is_identity) {
                (true, true) => write!(f, "1")?,
                (true, false) => write!(f, "{g}")?,
                (false, true) => write!(f, "{abs}")?,
                (false, false) => write!(f, "{abs}{g}")?,
            }
        }
        Ok(())
    }
}

/// `a_λ = Σ_{g∈P_λ} e_g`.
pub fn row_symmetrizer(lam: &Partition) -> GroupAlgebraElement {
    let mut a = GroupAlgebraElement::zero(lam.size());
    for g in row_group(lam) {
        a.add_term(g, BigRational::one());
    }
    a
}

/// `b_λ = Σ_{g∈Q_λ} sgn(g) e_g`.
pub fn column_antisymmetrizer(lam: &Partition) -> GroupAlgebraElement {
    let mut b = GroupAlgebraElement::zero(lam.size());
    for g in column_group(lam) {
        let s = g.sign();
        b.add_term(g, BigRational::from_integer(s.into()));
    }
    b
}

/// The Young symmetrizer `c_λ = a_λ · b_λ`.
pub fn symmetrizer(lam: &Partition) -> GroupAlgebraElement {
    algebra_multiply(&row_symmetrizer(lam), &column_antisymmetrizer(lam)).expect("same degree")
}

/// Matrix of a group algebra element acting on `(ℂⁿ)^{⊗m}`.
///
/// Rows and columns are indexed by tuples `(i_1, …, i_m) ∈ {0..n}^m` in base-`n`
/// order, first slot most significant. Row `I` holds the image of the basis
/// tensor `e_I`, so matrices compose as `act(x·y) = act(x)·act(y)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TensorAction {
    pub n: usize,
    pub m: usize,
    pub matrix: Matrix<BigRational>,
}

fn tuple_index(t: &[usize], n: usize) -> usize {
    t.iter().fold(0, |acc, &i| acc * n + i)
}

fn index_tuple(mut k: usize, n: usize, m: usize) -> Vec<usize> {
    let mut t = vec![0; m];
    for slot in t.iter_mut().rev() {
        *slot = k % n;
        k /= n;
    }
    t
}

/// `e_I · σ = e_{(i_{σ(1)}, …, i_{σ(m)})}`.
fn permute_tuple(t: &[usize], g: &Permutation) -> Vec<usize> {
    (0..t.len()).map(|k| t[g.apply(k)]).collect()
}

/// Image of the basis tensor `e_I` under `x`, as (tuple, coefficient) pairs in
/// the order of `x`'s terms.
pub fn apply_to_basis(x: &GroupAlgebraElement, tuple: &[usize]) -> Vec<(Vec<usize>, BigRational)> {
    assert_eq!(tuple.len(), x.degree(), "tuple length");
    let mut acc: BTreeMap<Vec<usize>, BigRational> = BTreeMap::new();
    for (g, c) in x.terms() {
        *acc.entry(permute_tuple(tuple, g)).or_insert_with(BigRational::zero) += c;
    }
    acc.into_iter().filter(|(_, c)| !c.is_zero()).collect()
}

pub fn act_on_tensor(x: &GroupAlgebraElement, n: usize) -> TensorAction {
    let m = x.degree();
    let dim = n.pow(m as u32);
    let mut matrix = vec![vec![BigRational::zero(); dim]; dim];
    for (i, row) in matrix.iter_mut().enumerate() {
        let t = index_tuple(i, n, m);
        for (g, c) in x.terms() {
            let j = tuple_index(&permute_tuple(&t, g), n);
            row[j] += c;
        }
    }
    TensorAction { n, m, matrix }
}

impl TensorAction {
    pub fn dim(&self) -> usize {
        self.matrix.len()
    }

    pub fn rank(&self) -> usize {
        rank_fraction_free(&self.matrix)
    }
}

/// `dim Im(c_λ | (ℂⁿ)^{⊗|λ|})` with the default size bound.
pub fn schur_image_dim(lam: &Partition, n: usize) -> Result<u64> {
    schur_image_dim_bounded(lam, n, DEFAULT_TENSOR_LIMIT)
}

/// `dim Im(c_λ | (ℂⁿ)^{⊗|λ|})`, refusing tensor powers with more than `limit`
/// basis vectors.
///
/// Permutations preserve the content of a basis tuple, so the action is block
/// diagonal over contents; each block's rank is taken exactly.
pub fn schur_image_dim_bounded(lam: &Partition, n: usize, limit: usize) -> Result<u64> {
    let m = lam.size();
    let dim = (n as u128).pow(m as u32);
    if dim > limit as u128 {
        return Err(Error::SizeBound { dim, limit });
    }
    let c = symmetrizer(lam);
    let mut blocks: HashMap<Vec<usize>, Vec<Vec<usize>>> = HashMap::new();
    for k in 0..dim as usize {
        let t = index_tuple(k, n, m);
        let mut content = t.clone();
        content.sort_unstable();
        blocks.entry(content).or_default().push(t);
    }
    let mut total = 0;
    for tuples in blocks.values() {
        let local: HashMap<&[usize], usize> =
            tuples.iter().enumerate().map(|(i, t)| (t.as_slice(), i)).collect();
        let block: Matrix<BigRational> = tuples
            .iter()
            .map(|t| {
                let mut row = vec![BigRational::zero(); tuples.len()];
                for (g, coeff) in c.terms() {
                    row[local[permute_tuple(t, g).as_slice()]] += coeff;
                }
                row
            })
            .collect();
        total += rank_fraction_free(&block) as u64;
    }
    Ok(total)
}

/// Matrix of `S_λ(g)` on a basis of `Im(c_λ)` inside `(ℂⁿ)^{⊗|λ|}`, where `g`
/// is an `n × n` matrix over `T`.
///
/// The image is the row space of [`act_on_tensor`]; with `B` its reduced
/// echelon basis the restriction `A` solves `B · (gᵀ)^{⊗m} = A · B`, which is
/// checked before returning.
pub fn schur_functor_matrix<T, F>(lam: &Partition, g: &Matrix<T>, embed: F) -> Result<Matrix<T>>
where
    T: Field,
    F: Fn(&BigRational) -> T,
{
    let n = g.len();
    if g.iter().any(|r| r.len() != n) {
        return Err(Error::ShapeMismatch("group element must be square".into()));
    }
    let m = lam.size();
    let action = act_on_tensor(&symmetrizer(lam), n);
    let rows: Matrix<T> = action
        .matrix
        .iter()
        .map(|r| r.iter().map(&embed).collect())
        .collect();
    let (basis, pivots) = rref(&rows);
    let big = crate::linalg::mat_mul(&basis, &kron_power(&transpose(g), m));
    let restricted: Matrix<T> = big
        .iter()
        .map(|r| pivots.iter().map(|&p| r[p].clone()).collect())
        .collect();
    if crate::linalg::mat_mul(&restricted, &basis) != big {
        return Err(Error::ShapeMismatch("image of c_λ is not stable under g".into()));
    }
    Ok(restricted)
}
