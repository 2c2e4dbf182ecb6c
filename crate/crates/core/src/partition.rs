//! Partitions, Young diagrams and semistandard tableaux.
//!
//! A [`Partition`] never stores trailing zeros; the rank `n` of the general
//! linear group it is evaluated against is always passed explicitly.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct Partition(Vec<u32>);

impl Partition {
    /// Builds a partition from weakly decreasing parts. Trailing zeros are
    /// dropped; a zero followed by a positive part is rejected.
    pub fn new(parts: impl Into<Vec<u32>>) -> Result<Self> {
        let mut parts = parts.into();
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition { parts });
        }
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Partition(parts))
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// The one-row partition `(k)`; empty when `k == 0`.
    pub fn row(k: u32) -> Self {
        if k == 0 {
            Self::empty()
        } else {
            Partition(vec![k])
        }
    }

    /// The one-column partition `(1^k)`.
    pub fn column(k: usize) -> Self {
        Partition(vec![1; k])
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    /// Number of nonzero rows.
    pub fn rows(&self) -> usize {
        self.0.len()
    }

    /// Number of boxes `|λ|`.
    pub fn size(&self) -> usize {
        self.0.iter().map(|&p| p as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Part `i` (zero-based), zero beyond the last row.
    pub fn part(&self, i: usize) -> u32 {
        self.0.get(i).copied().unwrap_or(0)
    }

    /// True when the diagram of `self` fits inside the diagram of `other`.
    pub fn fits_in(&self, other: &Partition) -> bool {
        self.rows() <= other.rows() && self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn conjugate(&self) -> Partition {
        let width = self.part(0);
        let parts = (1..=width)
            .map(|c| self.0.iter().filter(|&&p| p >= c).count() as u32)
            .collect();
        Partition(parts)
    }

    /// Parts padded with zeros to length `n`.
    pub fn padded(&self, n: usize) -> Result<Vec<u32>> {
        self.check_rank(n)?;
        let mut v = self.0.clone();
        v.resize(n, 0);
        Ok(v)
    }

    /// The highest weight `λ_1 L_1 + … + λ_n L_n`.
    pub fn weight(&self, n: usize) -> Result<WeightVector> {
        let coords = self.padded(n)?.into_iter().map(i64::from).collect();
        Ok(WeightVector { coords })
    }

    /// Coordinates `a_i = λ_i − λ_{i+1}` in the fundamental-weight basis of `SL_n`.
    pub fn to_fundamental(&self, n: usize) -> Result<FundamentalCoords> {
        let padded = self.padded(n)?;
        let a = padded.windows(2).map(|w| w[0] - w[1]).collect();
        Ok(FundamentalCoords { a })
    }

    /// Cells `(row, col)` in row-major order.
    fn cells(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.0
            .iter()
            .enumerate()
            .flat_map(|(r, &len)| (0..len as usize).map(move |c| (r, c)))
    }

    /// Hook length of cell `(r, c)`.
    pub fn hook(&self, r: usize, c: usize) -> u32 {
        let arm = self.0[r] as usize - c - 1;
        let leg = self.0[r + 1..].iter().filter(|&&p| p as usize > c).count();
        (arm + leg + 1) as u32
    }

    fn check_rank(&self, n: usize) -> Result<()> {
        if self.rows() > n {
            Err(Error::RowOverflow { rows: self.rows(), rank: n })
        } else {
            Ok(())
        }
    }
}

impl TryFrom<Vec<u32>> for Partition {
    type Error = Error;
    fn try_from(v: Vec<u32>) -> Result<Self> {
        Partition::new(v)
    }
}

impl From<Partition> for Vec<u32> {
    fn from(p: Partition) -> Self {
        p.0
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

/// Parses `4,2`, `(4,2)` or `[4,2]`. The literal `0`, `()` and the empty string
/// give the empty partition.
impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let trimmed = s
            .trim()
            .trim_start_matches(['(', '['])
            .trim_end_matches([')', ']'])
            .trim();
        if trimmed.is_empty() {
            return Ok(Partition::empty());
        }
        let parts = trimmed
            .split(',')
            .map(|t| {
                t.trim().parse::<u32>().map_err(|e| Error::Parse {
                    input: s.to_string(),
                    reason: e.to_string(),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

/// Weight in the `L_1, …, L_n` basis.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct WeightVector {
    pub coords: Vec<i64>,
}

impl WeightVector {
    pub fn rank(&self) -> usize {
        self.coords.len()
    }
}

/// Coefficients on the fundamental weights of `SL_n`, `n − 1` of them.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FundamentalCoords {
    pub a: Vec<u32>,
}

/// `λ` and `μ` define the same `SL_n` representation iff they differ by a
/// constant vector once padded to length `n`.
pub fn sl_equivalent(p: &Partition, q: &Partition, n: usize) -> Result<bool> {
    let a = p.padded(n)?;
    let b = q.padded(n)?;
    let diffs: Vec<i64> = a.iter().zip(&b).map(|(&x, &y)| x as i64 - y as i64).collect();
    Ok(diffs.windows(2).all(|w| w[0] == w[1]))
}

/// `dim S_λ(ℂⁿ)`, zero when `λ` has more than `n` rows.
///
/// Evaluated with the hook-content product; the tests hold it to the SSYT
/// count of [`enumerate_ssyt`].
pub fn dim_schur(p: &Partition, n: usize) -> u64 {
    if p.rows() > n {
        return 0;
    }
    let mut num = BigUint::one();
    let mut den = BigUint::one();
    for (r, c) in p.cells() {
        num *= (n + c - r) as u64;
        den *= p.hook(r, c);
    }
    (num / den).to_u64().expect("dimension exceeds u64")
}

/// A semistandard tableau stored row by row.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Tableau {
    pub rows: Vec<Vec<u32>>,
}

impl Tableau {
    /// Number of occurrences of each entry `1..=n`.
    pub fn content(&self, n: usize) -> Vec<u32> {
        let mut w = vec![0; n];
        for &e in self.rows.iter().flatten() {
            w[e as usize - 1] += 1;
        }
        w
    }

    /// Row-major reading word.
    pub fn word(&self) -> Vec<u32> {
        self.rows.iter().flatten().copied().collect()
    }
}

/// Calls `visit` with the row-major entries of every semistandard tableau of
/// shape `p` with entries in `1..=n`, in lexicographic order of that word.
pub fn for_each_ssyt(p: &Partition, n: usize, mut visit: impl FnMut(&[u32])) {
    if p.rows() > n {
        return;
    }
    let shape = p.parts();
    let cells: Vec<(usize, usize)> = p.cells().collect();
    // offset of the first cell of each row in the flat buffer
    let mut offsets = Vec::with_capacity(shape.len());
    let mut acc = 0;
    for &len in shape {
        offsets.push(acc);
        acc += len as usize;
    }
    let col_len = p.conjugate();
    let mut fill = vec![0u32; cells.len()];

    fn go(
        k: usize,
        cells: &[(usize, usize)],
        offsets: &[usize],
        col_len: &Partition,
        n: usize,
        fill: &mut Vec<u32>,
        visit: &mut dyn FnMut(&[u32]),
    ) {
        if k == cells.len() {
            visit(fill);
            return;
        }
        let (r, c) = cells[k];
        let mut lo = 1;
        if c > 0 {
            lo = lo.max(fill[k - 1]);
        }
        if r > 0 {
            lo = lo.max(fill[offsets[r - 1] + c] + 1);
        }
        // leave room for the strictly increasing cells below in this column
        let below = col_len.part(c) as usize - r - 1;
        let hi = (n - below) as u32;
        for v in lo..=hi {
            fill[k] = v;
            go(k + 1, cells, offsets, col_len, n, fill, visit);
        }
    }

    go(0, &cells, &offsets, &col_len, n, &mut fill, &mut visit);
}

/// All semistandard tableaux of shape `p` with entries in `1..=n`.
pub fn enumerate_ssyt(p: &Partition, n: usize) -> Vec<Tableau> {
    let mut out = Vec::new();
    for_each_ssyt(p, n, |word| {
        let mut rows = Vec::with_capacity(p.rows());
        let mut start = 0;
        for &len in p.parts() {
            rows.push(word[start..start + len as usize].to_vec());
            start += len as usize;
        }
        out.push(Tableau { rows });
    });
    out
}

/// Content vectors of every SSYT of shape `p`, entries in `1..=n`. These are
/// the weights of `S_p(ℂⁿ)` with multiplicity.
pub fn ssyt_weights(p: &Partition, n: usize) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    for_each_ssyt(p, n, |word| {
        let mut w = vec![0u32; n];
        for &e in word {
            w[e as usize - 1] += 1;
        }
        out.push(w);
    });
    out
}

/// Partitions of `k` in decreasing lexicographic order.
pub fn partitions_of(k: usize) -> Vec<Partition> {
    partitions_bounded(k, usize::MAX)
}

/// Partitions of `k` with at most `max_rows` rows, decreasing lexicographic order.
pub fn partitions_bounded(k: usize, max_rows: usize) -> Vec<Partition> {
    fn go(rest: u32, cap: u32, rows_left: usize, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if rest == 0 {
            out.push(Partition(cur.clone()));
            return;
        }
        if rows_left == 0 {
            return;
        }
        for p in (1..=cap.min(rest)).rev() {
            cur.push(p);
            go(rest - p, p, rows_left - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(k as u32, k as u32, max_rows, &mut Vec::new(), &mut out);
    out
}

/// Partitions of any size contained in the diagram of `outer`.
pub fn partitions_within(outer: &Partition) -> Vec<Partition> {
    fn go(i: usize, outer: &[u32], cap: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
        out.push(Partition(cur.clone()));
        if i == outer.len() {
            return;
        }
        for p in 1..=cap.min(outer[i]) {
            cur.push(p);
            go(i + 1, outer, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, outer.parts(), outer.part(0), &mut Vec::new(), &mut out);
    out
}
