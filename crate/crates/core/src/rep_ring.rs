//! Formal sums of external tensor products `S_{λ_1} ⊗ … ⊗ S_{λ_k}` with integer
//! multiplicities, and the decompositions of `S_ν(ρ_1 ⊕ … ⊕ ρ_k)` built from
//! Littlewood–Richardson coefficients.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;

use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lr::lr_coefficient;
use crate::partition::{dim_schur, partitions_of, partitions_within, ssyt_weights, Partition};

/// Element of the representation ring of `GL_{n_1} × … × GL_{n_arity}` spanned by
/// Schur functors, one slot per factor. Multiplicities may be negative.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "SchurSumRepr", into = "SchurSumRepr")]
pub struct SchurSum {
    arity: usize,
    terms: BTreeMap<Vec<Partition>, i64>,
}

#[derive(Serialize, Deserialize)]
struct TermRepr {
    factors: Vec<Partition>,
    mult: i64,
}

#[derive(Serialize, Deserialize)]
struct SchurSumRepr {
    arity: usize,
    terms: Vec<TermRepr>,
}

impl From<SchurSum> for SchurSumRepr {
    fn from(s: SchurSum) -> Self {
        SchurSumRepr {
            arity: s.arity,
            terms: s
                .terms
                .into_iter()
                .map(|(factors, mult)| TermRepr { factors, mult })
                .collect(),
        }
    }
}

impl TryFrom<SchurSumRepr> for SchurSum {
    type Error = Error;
    fn try_from(r: SchurSumRepr) -> Result<Self> {
        let mut s = SchurSum::zero(r.arity);
        for t in r.terms {
            if t.factors.len() != r.arity {
                return Err(Error::ShapeMismatch(format!(
                    "term with {} factors in a sum of arity {}",
                    t.factors.len(),
                    r.arity
                )));
            }
            s.add(t.factors, t.mult);
        }
        Ok(s)
    }
}

/// `(1,1)⊗() + (1)⊗(1) - 2·()⊗(2)`; `0` when empty.
impl fmt::Display for SchurSum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (factors, &mult)) in self.terms.iter().enumerate() {
            match (k, mult < 0) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            if mult.abs() != 1 {
                write!(f, "{}·", mult.abs())?;
            }
            let parts: Vec<String> = factors.iter().map(Partition::to_string).collect();
            write!(f, "{}", parts.join("⊗"))?;
        }
        Ok(())
    }
}

impl SchurSum {
    pub fn zero(arity: usize) -> Self {
        SchurSum { arity, terms: BTreeMap::new() }
    }

    /// `S_ν` on a single slot.
    pub fn single(nu: Partition) -> Self {
        let mut s = Self::zero(1);
        s.add(vec![nu], 1);
        s
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn multiplicity(&self, factors: &[Partition]) -> i64 {
        self.terms.get(factors).copied().unwrap_or(0)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[Partition], i64)> {
        self.terms.iter().map(|(k, &m)| (k.as_slice(), m))
    }

    /// Adds `mult` copies of a term, dropping it if the total cancels.
    pub fn add(&mut self, factors: Vec<Partition>, mult: i64) {
        assert_eq!(factors.len(), self.arity, "term arity");
        if mult == 0 {
            return;
        }
        match self.terms.entry(factors) {
            Entry::Occupied(mut o) => {
                *o.get_mut() += mult;
                if *o.get() == 0 {
                    o.remove();
                }
            }
            Entry::Vacant(v) => {
                v.insert(mult);
            }
        }
    }

    /// Replaces slot `slot` (holding `S_κ` of a direct sum `V ⊕ W`) by the two
    /// slots `S_λ V ⊗ S_μ W`, weighted by `N_{λμκ}`.
    pub fn split_slot(&self, slot: usize) -> SchurSum {
        assert!(slot < self.arity, "slot {slot} out of range");
        let mut out = SchurSum::zero(self.arity + 1);
        for (factors, &mult) in &self.terms {
            for (lam, mu, c) in lr_pairs(&factors[slot]) {
                let mut key = Vec::with_capacity(self.arity + 1);
                key.extend_from_slice(&factors[..slot]);
                key.push(lam);
                key.push(mu);
                key.extend_from_slice(&factors[slot + 1..]);
                out.add(key, mult * c as i64);
            }
        }
        out
    }
}

/// Every `(λ, μ, N_{λμν})` with a nonzero coefficient.
fn lr_pairs(nu: &Partition) -> Vec<(Partition, Partition, u64)> {
    let mut out = Vec::new();
    for lam in partitions_within(nu) {
        for mu in partitions_of(nu.size() - lam.size()) {
            if !mu.fits_in(nu) {
                continue;
            }
            let c = lr_coefficient(&lam, &mu, nu);
            if c > 0 {
                out.push((lam.clone(), mu, c));
            }
        }
    }
    out
}

/// `S_ν(ρ_1 ⊕ … ⊕ ρ_slots)`, splitting off one summand at a time from the left:
/// `ρ_1 ⊕ (ρ_2 ⊕ (…))`.
pub fn decompose_sum(nu: &Partition, slots: usize) -> SchurSum {
    assert!(slots >= 1, "at least one slot");
    let mut s = SchurSum::single(nu.clone());
    for k in 0..slots - 1 {
        s = s.split_slot(k);
    }
    s
}

/// `R_ν(ρ_1, …, ρ_m)`: the decomposition over `m` slots minus the `m` pure
/// terms `S_ν ρ_i`.
pub fn residual(nu: &Partition, slots: usize) -> SchurSum {
    let mut s = decompose_sum(nu, slots);
    for i in 0..slots {
        let mut key = vec![Partition::empty(); slots];
        key[i] = nu.clone();
        s.add(key, -1);
    }
    s
}

/// `Λ²(ρ_1 ⊖ ρ_2) = Λ²ρ_1 ⊖ Λ²ρ_2 ⊖ ρ_1⊗ρ_2 ⊕ ρ_2⊗ρ_2`, with `ρ_2⊗ρ_2` written
/// as `Sym²ρ_2 ⊕ Λ²ρ_2` so every key stays a tuple of partitions. The two
/// `Λ²ρ_2` terms cancel.
pub fn virtual_difference(nu: &Partition) -> Result<SchurSum> {
    let wedge2 = Partition::column(2);
    if *nu != wedge2 {
        return Err(Error::UnsupportedVirtual(nu.to_string()));
    }
    let e = Partition::empty();
    let one = Partition::row(1);
    let mut s = SchurSum::zero(2);
    s.add(vec![wedge2.clone(), e.clone()], 1);
    s.add(vec![e.clone(), wedge2.clone()], -1);
    s.add(vec![one.clone(), one], -1);
    s.add(vec![e.clone(), Partition::row(2)], 1);
    s.add(vec![e, wedge2], 1);
    Ok(s)
}

/// `Σ mult · Π_i dim S_{κ_i}(ℂ^{ranks_i})`.
pub fn dimension_of(sum: &SchurSum, ranks: &[usize]) -> Result<i128> {
    if ranks.len() != sum.arity {
        return Err(Error::ShapeMismatch(format!(
            "{} ranks for a sum of arity {}",
            ranks.len(),
            sum.arity
        )));
    }
    Ok(sum
        .terms()
        .map(|(factors, mult)| {
            let d: i128 = factors
                .iter()
                .zip(ranks)
                .map(|(k, &n)| i128::from(dim_schur(k, n)))
                .product();
            i128::from(mult) * d
        })
        .sum())
}

/// The Schur polynomial `s_λ(x_1, …, x_n)` at a rational point, summed over SSYT.
pub fn schur_polynomial_at(p: &Partition, point: &[BigRational]) -> BigRational {
    ssyt_weights(p, point.len())
        .into_iter()
        .map(|w| {
            w.iter()
                .zip(point)
                .fold(BigRational::one(), |acc, (&e, x)| acc * num_traits::pow(x.clone(), e as usize))
        })
        .fold(BigRational::zero(), |a, b| a + b)
}

/// Character of `sum` at one rational point per slot.
pub fn character_at(sum: &SchurSum, points: &[Vec<BigRational>]) -> Result<BigRational> {
    if points.len() != sum.arity {
        return Err(Error::ShapeMismatch(format!(
            "{} points for a sum of arity {}",
            points.len(),
            sum.arity
        )));
    }
    let mut total = BigRational::zero();
    for (factors, mult) in sum.terms() {
        let mut term = BigRational::from_integer(mult.into());
        for (k, x) in factors.iter().zip(points) {
            term *= schur_polynomial_at(k, x);
        }
        total += term;
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[u32]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    fn e() -> Partition {
        Partition::empty()
    }

    fn rat(n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }

    #[test]
    fn exterior_square_of_a_sum() {
        let s = decompose_sum(&p(&[1, 1]), 2);
        assert_eq!(s.len(), 3);
        assert_eq!(s.multiplicity(&[p(&[1, 1]), e()]), 1);
        assert_eq!(s.multiplicity(&[e(), p(&[1, 1])]), 1);
        assert_eq!(s.multiplicity(&[p(&[1]), p(&[1])]), 1);
    }

    #[test]
    fn exterior_cube_of_a_sum() {
        let s = decompose_sum(&p(&[1, 1, 1]), 2);
        let expect = [
            [p(&[1, 1, 1]), e()],
            [p(&[1]), p(&[1, 1])],
            [p(&[1, 1]), p(&[1])],
            [e(), p(&[1, 1, 1])],
        ];
        assert_eq!(s.len(), 4);
        for k in &expect {
            assert_eq!(s.multiplicity(k), 1);
        }
    }

    #[test]
    fn four_two_decomposition() {
        let s = decompose_sum(&p(&[4, 2]), 2);
        let pairs = [
            (p(&[4, 2]), e()),
            (p(&[2, 1]), p(&[2, 1])),
            (p(&[2, 1]), p(&[3])),
            (p(&[2, 2]), p(&[2])),
            (p(&[3, 2]), p(&[1])),
            (p(&[3]), p(&[2, 1])),
            (p(&[2]), p(&[2, 2])),
            (p(&[1]), p(&[3, 2])),
            (e(), p(&[4, 2])),
        ];
        // The nine pairs above all occur once, but they are not the whole
        // decomposition: (4,1)⊗(1), (3,1)⊗(2), (3,1)⊗(1,1), (4)⊗(2), (3)⊗(3)
        // and their mirrors also occur. 18 terms is forced by dimensions.
        assert_eq!(s.len(), 18);
        assert_eq!(dimension_of(&s, &[2, 2]).unwrap(), 126);
        for (a, b) in pairs {
            assert_eq!(s.multiplicity(&[a, b]), 1);
        }
        assert_eq!(s.multiplicity(&[p(&[1, 1]), p(&[4])]), 0);
        assert_eq!(s.multiplicity(&[p(&[4]), p(&[1, 1])]), 0);
        assert_eq!(residual(&p(&[4, 2]), 2).len(), 16);
        for (a, b) in [(p(&[4, 1]), p(&[1])), (p(&[3]), p(&[3])), (p(&[3, 1]), p(&[1, 1]))] {
            assert_eq!(s.multiplicity(&[a.clone(), b.clone()]), 1);
            assert_eq!(s.multiplicity(&[b, a]), 1);
        }
    }

    #[test]
    fn residual_examples() {
        let r = residual(&p(&[1, 1]), 2);
        assert_eq!(r.terms().collect::<Vec<_>>(), vec![(&[p(&[1]), p(&[1])][..], 1)]);

        let r = residual(&p(&[1, 1, 1]), 2);
        assert_eq!(r.len(), 2);
        assert_eq!(r.multiplicity(&[p(&[1, 1]), p(&[1])]), 1);
        assert_eq!(r.multiplicity(&[p(&[1]), p(&[1, 1])]), 1);

        let r = residual(&p(&[2]), 2);
        assert_eq!(r.terms().collect::<Vec<_>>(), vec![(&[p(&[1]), p(&[1])][..], 1)]);
    }

    #[test]
    fn residual_slots_are_strictly_smaller() {
        for k in 1..=5 {
            for nu in partitions_of(k) {
                for m in 2..=3 {
                    for (factors, mult) in residual(&nu, m).terms() {
                        assert!(mult > 0);
                        assert!(factors.iter().all(|f| f.size() < k), "{nu} {factors:?}");
                    }
                }
            }
        }
    }

    #[test]
    fn display() {
        assert_eq!(decompose_sum(&p(&[1, 1]), 2).to_string(), "()⊗(1,1) + (1)⊗(1) + (1,1)⊗()");
        assert_eq!(virtual_difference(&p(&[1, 1])).unwrap().to_string(), "()⊗(2) - (1)⊗(1) + (1,1)⊗()");
        assert_eq!(SchurSum::zero(2).to_string(), "0");
    }

    #[test]
    fn virtual_difference_examples() {
        let v = virtual_difference(&p(&[1, 1])).unwrap();
        assert_eq!(v.multiplicity(&[p(&[1, 1]), e()]), 1);
        assert_eq!(v.multiplicity(&[p(&[1]), p(&[1])]), -1);
        assert_eq!(v.multiplicity(&[e(), p(&[2])]), 1);
        assert_eq!(v.multiplicity(&[e(), p(&[1, 1])]), 0);
        assert_eq!(dimension_of(&v, &[3, 1]).unwrap(), 1);
        assert_eq!(dim_schur(&p(&[1, 1]), 2), 1);
        for n in 1..6 {
            assert_eq!(dimension_of(&v, &[n, n]).unwrap(), 0);
        }
        // n1 ≥ n2: Λ²(ℂ^{n1−n2})
        for n1 in 1..6 {
            for n2 in 0..=n1 {
                let want = dim_schur(&p(&[1, 1]), n1 - n2) as i128;
                assert_eq!(dimension_of(&v, &[n1, n2]).unwrap(), want);
            }
        }
        assert!(matches!(virtual_difference(&p(&[2])), Err(Error::UnsupportedVirtual(_))));
    }

    #[test]
    fn dimension_examples() {
        let s = decompose_sum(&p(&[1, 1]), 2);
        assert_eq!(dimension_of(&s, &[2, 3]).unwrap(), 10);
        let s = decompose_sum(&p(&[4, 2]), 2);
        assert_eq!(dimension_of(&s, &[2, 2]).unwrap(), dim_schur(&p(&[4, 2]), 4) as i128);
        assert_eq!(dimension_of(&SchurSum::zero(2), &[3, 3]).unwrap(), 0);
        assert!(dimension_of(&s, &[1]).is_err());
    }

    #[test]
    fn character_refines_dimension() {
        let x = vec![rat(2), rat(3)];
        let y = vec![rat(5), rat(7)];
        let xy: Vec<BigRational> = x.iter().chain(&y).cloned().collect();
        for k in 0..=5 {
            for nu in partitions_of(k) {
                let lhs = schur_polynomial_at(&nu, &xy);
                let rhs = character_at(&decompose_sum(&nu, 2), &[x.clone(), y.clone()]).unwrap();
                assert_eq!(lhs, rhs, "{nu}");
            }
        }
    }

    #[test]
    fn slot_splitting_is_associative() {
        for k in 0..=5 {
            for nu in partitions_of(k) {
                let right = decompose_sum(&nu, 3);
                let left = SchurSum::single(nu.clone()).split_slot(0).split_slot(0);
                assert_eq!(left, right, "{nu}");
            }
        }
    }

    #[test]
    fn json_shape() {
        let s = residual(&p(&[1, 1]), 2);
        let j = serde_json::to_string(&s).unwrap();
        assert_eq!(j, r#"{"arity":2,"terms":[{"factors":[[1],[1]],"mult":1}]}"#);
        let back: SchurSum = serde_json::from_str(&j).unwrap();
        assert_eq!(back, s);
        assert!(serde_json::from_str::<SchurSum>(r#"{"arity":2,"terms":[{"factors":[[1]],"mult":1}]}"#).is_err());
    }
}
