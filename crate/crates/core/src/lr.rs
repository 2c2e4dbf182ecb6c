//! Littlewood–Richardson coefficients.
//!
//! `N_{λμν}` counts the ways to grow the diagram of `λ` into that of `ν` by a
//! strict `μ`-expansion: label the cells of `ν/λ` with `μ_1` ones, `μ_2` twos
//! and so on, weakly increasing along rows, strictly increasing down columns,
//! such that reading the labels right to left, top row first, gives a lattice
//! word. One-row `μ` takes the Pieri path. [`lr_oracle`] recomputes the same
//! numbers from Schur polynomials and shares no code with the counting rule.

use std::collections::{BTreeMap, HashMap};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::{ssyt_weights, Partition};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LrCoefficient {
    pub lam: Partition,
    pub mu: Partition,
    pub nu: Partition,
    pub value: u64,
}

impl LrCoefficient {
    pub fn compute(lam: Partition, mu: Partition, nu: Partition) -> Self {
        let value = lr_coefficient(&lam, &mu, &nu);
        LrCoefficient { lam, mu, nu, value }
    }
}

/// One strict `μ`-expansion of `base` to `target`. `labels[r]` holds the labels
/// of the added cells of row `r`, left to right.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SkewExpansion {
    pub base: Partition,
    pub target: Partition,
    pub labels: Vec<Vec<u32>>,
}

impl SkewExpansion {
    /// Labels read right to left within each row, top row first.
    pub fn reading_word(&self) -> Vec<u32> {
        self.labels
            .iter()
            .flat_map(|row| row.iter().rev().copied())
            .collect()
    }
}

fn sizes_compatible(lam: &Partition, mu: &Partition, nu: &Partition) -> bool {
    lam.size() + mu.size() == nu.size() && lam.fits_in(nu) && mu.fits_in(nu)
}

/// Backtracking over the cells of `nu/lam` in reading order. `visit` receives
/// the labels in that order.
fn search_expansions(lam: &Partition, mu: &Partition, nu: &Partition, visit: &mut dyn FnMut(&[u32])) {
    if !sizes_compatible(lam, mu, nu) {
        return;
    }
    let cells: Vec<(usize, usize)> = (0..nu.rows())
        .flat_map(|r| (lam.part(r) as usize..nu.part(r) as usize).rev().map(move |c| (r, c)))
        .collect();
    let index: HashMap<(usize, usize), usize> =
        cells.iter().enumerate().map(|(i, &rc)| (rc, i)).collect();
    let labels = mu.rows();
    let mut used = vec![0u32; labels + 1];
    let mut fill = vec![0u32; cells.len()];

    struct Ctx<'a> {
        cells: &'a [(usize, usize)],
        index: &'a HashMap<(usize, usize), usize>,
        mu: &'a Partition,
        labels: usize,
    }

    fn go(k: usize, ctx: &Ctx, used: &mut [u32], fill: &mut [u32], visit: &mut dyn FnMut(&[u32])) {
        if k == ctx.cells.len() {
            visit(fill);
            return;
        }
        let (r, c) = ctx.cells[k];
        let mut hi = ctx.labels as u32;
        if let Some(&j) = ctx.index.get(&(r, c + 1)) {
            hi = hi.min(fill[j]);
        }
        let mut lo = 1;
        if r > 0 {
            if let Some(&j) = ctx.index.get(&(r - 1, c)) {
                lo = fill[j] + 1;
            }
        }
        for v in lo..=hi {
            let vi = v as usize;
            if used[vi] >= ctx.mu.part(vi - 1) {
                continue;
            }
            if vi > 1 && used[vi] >= used[vi - 1] {
                continue;
            }
            used[vi] += 1;
            fill[k] = v;
            go(k + 1, ctx, used, fill, visit);
            used[vi] -= 1;
        }
    }

    let ctx = Ctx { cells: &cells, index: &index, mu, labels };
    go(0, &ctx, &mut used, &mut fill, visit);
}

/// Counts strict `μ`-expansions with the general rule, never taking the Pieri path.
pub fn count_skew_expansions(lam: &Partition, mu: &Partition, nu: &Partition) -> u64 {
    let mut count = 0;
    search_expansions(lam, mu, nu, &mut |_| count += 1);
    count
}

/// All strict `μ`-expansions of `lam` to `nu`, ordered by reading word.
pub fn skew_expansions(lam: &Partition, mu: &Partition, nu: &Partition) -> Vec<SkewExpansion> {
    let mut out = Vec::new();
    search_expansions(lam, mu, nu, &mut |word| {
        let mut labels = Vec::with_capacity(nu.rows());
        let mut k = 0;
        for r in 0..nu.rows() {
            let len = (nu.part(r) - lam.part(r)) as usize;
            let mut row = word[k..k + len].to_vec();
            row.reverse();
            labels.push(row);
            k += len;
        }
        out.push(SkewExpansion { base: lam.clone(), target: nu.clone(), labels });
    });
    out.sort_by_key(SkewExpansion::reading_word);
    out
}

/// True when `nu/lam` is a horizontal strip: `lam ⊆ nu` and no two added cells
/// share a column.
pub fn is_horizontal_strip(lam: &Partition, nu: &Partition) -> bool {
    lam.fits_in(nu) && (1..nu.rows()).all(|i| nu.part(i) <= lam.part(i - 1))
}

/// `N_{λμν}`.
pub fn lr_coefficient(lam: &Partition, mu: &Partition, nu: &Partition) -> u64 {
    if !sizes_compatible(lam, mu, nu) {
        return 0;
    }
    if mu.rows() <= 1 {
        return u64::from(is_horizontal_strip(lam, nu));
    }
    if lam.rows() <= 1 {
        // N is symmetric in λ and μ
        return u64::from(is_horizontal_strip(mu, nu));
    }
    count_skew_expansions(lam, mu, nu)
}

/// Every `ν` with at most `max_rows` rows obtained by adding `m` boxes to
/// `lam`, no two in one column. Decreasing lexicographic order.
pub fn pieri_expand(lam: &Partition, m: u32, max_rows: Option<usize>) -> Vec<Partition> {
    let limit = max_rows.unwrap_or(usize::MAX).min(lam.rows() + 1);
    let mut out = Vec::new();

    fn go(i: usize, rest: u32, limit: usize, lam: &Partition, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if i == limit {
            if rest == 0 {
                out.push(Partition::new(cur.clone()).expect("interlacing keeps parts decreasing"));
            }
            return;
        }
        let base = lam.part(i);
        let cap = if i == 0 { base + rest } else { lam.part(i - 1).min(base + rest) };
        for v in (base..=cap).rev() {
            cur.push(v);
            go(i + 1, rest - (v - base), limit, lam, cur, out);
            cur.pop();
        }
    }

    if lam.rows() > limit {
        return out;
    }
    go(0, m, limit, lam, &mut Vec::new(), &mut out);
    out
}

type Monomials = HashMap<Vec<u8>, i64>;

fn schur_polynomial(p: &Partition, vars: usize) -> Monomials {
    let mut poly = Monomials::new();
    for w in ssyt_weights(p, vars) {
        let key = w.into_iter().map(|e| e as u8).collect();
        *poly.entry(key).or_insert(0) += 1;
    }
    poly
}

fn is_dominant(e: &[u8]) -> bool {
    e.windows(2).all(|w| w[0] >= w[1])
}

/// Schur expansion of `s_lam · s_mu` in `vars` variables, computed by multiplying
/// monomial expansions and peeling off the lexicographically leading dominant
/// monomial one Schur polynomial at a time.
pub fn schur_product_expansion(lam: &Partition, mu: &Partition, vars: usize) -> BTreeMap<Partition, i64> {
    let a = schur_polynomial(lam, vars);
    let b = schur_polynomial(mu, vars);
    // only dominant monomials are needed to run the triangular elimination
    let mut prod: BTreeMap<Vec<u8>, i64> = BTreeMap::new();
    let mut sum = vec![0u8; vars];
    for (ea, ca) in &a {
        for (eb, cb) in &b {
            for i in 0..vars {
                sum[i] = ea[i] + eb[i];
            }
            if is_dominant(&sum) {
                *prod.entry(sum.clone()).or_insert(0) += ca * cb;
            }
        }
    }
    prod.retain(|_, c| *c != 0);

    let mut out = BTreeMap::new();
    while let Some((lead, &coeff)) = prod.iter().next_back() {
        let kappa = Partition::new(lead.iter().map(|&e| u32::from(e)).collect::<Vec<_>>())
            .expect("dominant exponent is a partition");
        for (mono, k) in schur_polynomial(&kappa, vars) {
            if !is_dominant(&mono) {
                continue;
            }
            let slot = prod.entry(mono.clone()).or_insert(0);
            *slot -= coeff * k;
            if *slot == 0 {
                prod.remove(&mono);
            }
        }
        out.insert(kappa, coeff);
    }
    out
}

/// `N_{λμν}` read off the Schur expansion of `s_λ · s_μ` in `vars` variables.
pub fn lr_oracle(lam: &Partition, mu: &Partition, nu: &Partition, vars: usize) -> Result<u64> {
    if vars < nu.rows() {
        return Err(Error::InsufficientVariables { vars, rows: nu.rows() });
    }
    if lam.size() + mu.size() != nu.size() {
        return Ok(0);
    }
    let c = schur_product_expansion(lam, mu, vars).get(nu).copied().unwrap_or(0);
    Ok(u64::try_from(c).expect("Schur expansion of a product has non-negative coefficients"))
}
