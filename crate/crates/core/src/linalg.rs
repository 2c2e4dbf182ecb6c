//! Exact dense linear algebra on row-major `Vec<Vec<T>>` matrices.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::poly::{interpolate, Poly};
use crate::scalar::Field;

pub type Matrix<T> = Vec<Vec<T>>;

pub fn identity<T: Field>(n: usize) -> Matrix<T> {
    (0..n)
        .map(|i| (0..n).map(|j| if i == j { T::one() } else { T::zero() }).collect())
        .collect()
}

pub fn mat_mul<T: Field>(a: &Matrix<T>, b: &Matrix<T>) -> Matrix<T> {
    let inner = b.len();
    let cols = b.first().map_or(0, Vec::len);
    a.iter()
        .map(|row| {
            assert_eq!(row.len(), inner, "inner dimensions");
            let mut out = vec![T::zero(); cols];
            for (k, x) in row.iter().enumerate() {
                if x.is_zero() {
                    continue;
                }
                for (j, y) in b[k].iter().enumerate() {
                    out[j] = out[j].clone() + x.clone() * y.clone();
                }
            }
            out
        })
        .collect()
}

pub fn transpose<T: Clone>(a: &Matrix<T>) -> Matrix<T> {
    let cols = a.first().map_or(0, Vec::len);
    (0..cols).map(|j| a.iter().map(|r| r[j].clone()).collect()).collect()
}

/// Kronecker product `a ⊗ b`.
pub fn kron<T: Field>(a: &Matrix<T>, b: &Matrix<T>) -> Matrix<T> {
    let (br, bc) = (b.len(), b.first().map_or(0, Vec::len));
    let ac = a.first().map_or(0, Vec::len);
    let mut out = vec![vec![T::zero(); ac * bc]; a.len() * br];
    for (i, arow) in a.iter().enumerate() {
        for (j, x) in arow.iter().enumerate() {
            for (k, brow) in b.iter().enumerate() {
                for (l, y) in brow.iter().enumerate() {
                    out[i * br + k][j * bc + l] = x.clone() * y.clone();
                }
            }
        }
    }
    out
}

/// `a^{⊗m}`; the `1×1` identity for `m = 0`.
pub fn kron_power<T: Field>(a: &Matrix<T>, m: usize) -> Matrix<T> {
    (0..m).fold(identity(1), |acc, _| kron(&acc, a))
}

/// Reduced row echelon form. Returns the nonzero rows and their pivot columns.
pub fn rref<T: Field>(a: &Matrix<T>) -> (Matrix<T>, Vec<usize>) {
    let mut m = a.clone();
    let cols = m.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = T::one() / m[r][c].clone();
        for x in m[r].iter_mut() {
            *x = x.clone() * inv.clone();
        }
        for i in 0..m.len() {
            if i == r || m[i][c].is_zero() {
                continue;
            }
            let f = m[i][c].clone();
            for j in c..cols {
                let d = f.clone() * m[r][j].clone();
                m[i][j] = m[i][j].clone() - d;
            }
        }
        pivots.push(c);
        r += 1;
        if r == m.len() {
            break;
        }
    }
    m.truncate(r);
    (m, pivots)
}

pub fn rank<T: Field>(a: &Matrix<T>) -> usize {
    rref(a).1.len()
}

/// Rank of a rational matrix by fraction-free (Bareiss) elimination: rows are
/// cleared of denominators and every intermediate entry stays an integer.
pub fn rank_fraction_free(a: &Matrix<BigRational>) -> usize {
    let mut m: Vec<Vec<BigInt>> = a
        .iter()
        .map(|row| {
            let l = row.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
            row.iter().map(|x| x.numer() * (&l / x.denom())).collect()
        })
        .collect();
    let cols = m.first().map_or(0, Vec::len);
    let mut prev = BigInt::one();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        for i in r + 1..m.len() {
            for j in c + 1..cols {
                let v = &m[r][c] * &m[i][j] - &m[i][c] * &m[r][j];
                m[i][j] = v / &prev;
            }
            m[i][c] = BigInt::zero();
        }
        prev = m[r][c].clone();
        r += 1;
        if r == m.len() {
            break;
        }
    }
    r
}

pub fn det<T: Field>(a: &Matrix<T>) -> T {
    let n = a.len();
    let mut m = a.clone();
    let mut d = T::one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&i| !m[i][c].is_zero()) else {
            return T::zero();
        };
        if p != c {
            m.swap(p, c);
            d = -d;
        }
        d = d * m[c][c].clone();
        let inv = T::one() / m[c][c].clone();
        for i in c + 1..n {
            if m[i][c].is_zero() {
                continue;
            }
            let f = m[i][c].clone() * inv.clone();
            for j in c..n {
                let v = f.clone() * m[c][j].clone();
                m[i][j] = m[i][j].clone() - v;
            }
        }
    }
    d
}

pub fn inverse<T: Field>(a: &Matrix<T>) -> Option<Matrix<T>> {
    let n = a.len();
    let aug: Matrix<T> = a
        .iter()
        .zip(identity::<T>(n))
        .map(|(row, id)| row.iter().cloned().chain(id).collect())
        .collect();
    let (r, pivots) = rref(&aug);
    if pivots.len() < n || pivots[n - 1] >= n {
        return None;
    }
    Some(r.into_iter().map(|row| row[n..].to_vec()).collect())
}

/// `det(I − t·a)` as a polynomial in `t`, by exact evaluation at `0..=n` and
/// interpolation.
pub fn det_one_minus_t<T: Field>(a: &Matrix<T>) -> Poly<T> {
    let n = a.len();
    let points: Vec<(T, T)> = (0..=n)
        .map(|k| {
            let t = T::from_usize(k).expect("small integer");
            let m: Matrix<T> = a
                .iter()
                .enumerate()
                .map(|(i, row)| {
                    row.iter()
                        .enumerate()
                        .map(|(j, x)| {
                            let diag = if i == j { T::one() } else { T::zero() };
                            diag - t.clone() * x.clone()
                        })
                        .collect()
                })
                .collect();
            (t, det(&m))
        })
        .collect();
    interpolate(&points)
}
