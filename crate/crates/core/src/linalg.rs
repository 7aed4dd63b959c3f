//! Exact integer linear algebra: rank and unique solutions of `A x = b`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Rank over the rationals.
pub fn rank(rows: &[Vec<i64>]) -> usize {
    let mut m: Vec<Vec<BigRational>> = rows
        .iter()
        .map(|r| r.iter().map(|&x| BigRational::from_integer(BigInt::from(x))).collect())
        .collect();
    let cols = m.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        for i in r + 1..m.len() {
            if m[i][c].is_zero() {
                continue;
            }
            let factor = &m[i][c] / &m[r][c];
            for j in c..cols {
                let delta = &factor * &m[r][j];
                m[i][j] -= delta;
            }
        }
        r += 1;
    }
    r
}

/// Solves `A x = b` for an `m x n` matrix `A` of full column rank `n`.
///
/// Forward elimination is fraction-free (Bareiss), so every intermediate
/// entry is an integer minor; only back-substitution uses fractions.
/// Returns `Ok(None)` when the system is inconsistent.
pub fn solve_full_rank(a: &[Vec<i64>], b: &[i64]) -> Result<Option<Vec<BigRational>>> {
    let m = a.len();
    if b.len() != m {
        return Err(Error::LengthMismatch { left: m, right: b.len() });
    }
    let n = a.first().map_or(0, Vec::len);
    let mut aug: Vec<Vec<BigInt>> = a
        .iter()
        .zip(b)
        .map(|(row, &rhs)| row.iter().chain(std::iter::once(&rhs)).map(|&x| BigInt::from(x)).collect())
        .collect();

    let mut prev = BigInt::one();
    for k in 0..n {
        let Some(p) = (k..m).find(|&i| !aug[i][k].is_zero()) else {
            return Err(Error::RankDeficient { rank: rank(a), n });
        };
        aug.swap(k, p);
        for i in k + 1..m {
            for j in k + 1..=n {
                let value = (&aug[k][k] * &aug[i][j] - &aug[i][k] * &aug[k][j]) / &prev;
                aug[i][j] = value;
            }
            aug[i][k] = BigInt::zero();
        }
        prev = aug[k][k].clone();
    }

    if aug[n..].iter().any(|row| !row[n].is_zero()) {
        return Ok(None);
    }

    let mut x = vec![BigRational::zero(); n];
    for k in (0..n).rev() {
        let mut acc = BigRational::from_integer(aug[k][n].clone());
        for j in k + 1..n {
            acc -= BigRational::from_integer(aug[k][j].clone()) * &x[j];
        }
        x[k] = acc / BigRational::from_integer(aug[k][k].clone());
    }
    Ok(Some(x))
}

/// `Some(v)` if every entry is an integer that fits in `i64`.
pub fn as_integers(x: &[BigRational]) -> Option<Vec<i64>> {
    x.iter()
        .map(|r| {
            if !r.is_integer() {
                return None;
            }
            i64::try_from(r.to_integer()).ok()
        })
        .collect()
}

pub fn all_nonnegative(x: &[BigRational]) -> bool {
    x.iter().all(|r| !r.is_negative())
}
