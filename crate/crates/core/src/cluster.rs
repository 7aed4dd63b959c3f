//! Exchange matrices, quivers, matrix mutation and the dominance order on
//! Laurent monomials. Indices in public signatures are 1-based.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg;

/// Exponent vector of a Laurent monomial in the `m` cluster variables.
pub type ExponentVector = Vec<i64>;

#[derive(Deserialize)]
struct RawMatrix {
    n: usize,
    m: usize,
    rows: Vec<Vec<i64>>,
}

/// `m x n` integer matrix whose top `n x n` block is skew-symmetric.
/// Rows `1..=n` are exchangeable, rows `n+1..=m` frozen.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "RawMatrix")]
pub struct ExchangeMatrix {
    n: usize,
    m: usize,
    rows: Vec<Vec<i64>>,
}

impl TryFrom<RawMatrix> for ExchangeMatrix {
    type Error = Error;

    fn try_from(raw: RawMatrix) -> Result<Self> {
        let b = ExchangeMatrix::new(raw.n, raw.rows)?;
        if b.m != raw.m {
            return Err(Error::BadMatrix(format!("declared m = {} but {} rows given", raw.m, b.m)));
        }
        Ok(b)
    }
}

impl ExchangeMatrix {
    pub fn new(n: usize, rows: Vec<Vec<i64>>) -> Result<Self> {
        let m = rows.len();
        if m < n {
            return Err(Error::BadMatrix(format!("{m} rows but {n} exchangeable columns")));
        }
        if let Some((i, row)) = rows.iter().enumerate().find(|(_, r)| r.len() != n) {
            return Err(Error::BadMatrix(format!("row {} has {} entries, expected {n}", i + 1, row.len())));
        }
        for i in 0..n {
            for j in 0..n {
                if rows[i][j] != -rows[j][i] {
                    return Err(Error::BadMatrix(format!(
                        "principal part is not skew-symmetric at ({}, {})",
                        i + 1,
                        j + 1
                    )));
                }
            }
        }
        Ok(ExchangeMatrix { n, m, rows })
    }

    pub fn zero(m: usize, n: usize) -> Result<Self> {
        ExchangeMatrix::new(n, vec![vec![0; n]; m])
    }

    /// Number of exchangeable indices (columns).
    pub fn n(&self) -> usize {
        self.n
    }

    /// Total number of indices (rows).
    pub fn m(&self) -> usize {
        self.m
    }

    pub fn rows(&self) -> &[Vec<i64>] {
        &self.rows
    }

    /// Entry `b_ij`, 1-based.
    pub fn entry(&self, i: usize, j: usize) -> i64 {
        self.rows[i - 1][j - 1]
    }

    /// Column `j` (1-based) as a length-`m` vector.
    pub fn column(&self, j: usize) -> Result<Vec<i64>> {
        self.check_direction(j)?;
        Ok(self.rows.iter().map(|r| r[j - 1]).collect())
    }

    pub fn check_direction(&self, k: usize) -> Result<()> {
        if k == 0 || k > self.n {
            return Err(Error::BadDirection { k, n: self.n });
        }
        Ok(())
    }

    pub fn rank(&self) -> usize {
        linalg::rank(&self.rows)
    }

    pub fn is_full_rank(&self) -> bool {
        self.rank() == self.n
    }

    /// The exchangeable part stacked on an `n x n` identity block.
    pub fn principal_coefficients(&self) -> ExchangeMatrix {
        let mut rows: Vec<Vec<i64>> = self.rows[..self.n].to_vec();
        for i in 0..self.n {
            let mut row = vec![0; self.n];
            row[i] = 1;
            rows.push(row);
        }
        ExchangeMatrix { n: self.n, m: 2 * self.n, rows }
    }

    pub fn mutate(&self, k: usize) -> Result<ExchangeMatrix> {
        mutate_matrix(self, k)
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("matrix serializes")
    }
}

/// Matrix mutation in direction `k`.
pub fn mutate_matrix(b: &ExchangeMatrix, k: usize) -> Result<ExchangeMatrix> {
    b.check_direction(k)?;
    let k = k - 1;
    let overflow = || Error::Overflow("matrix mutation");
    let mut rows = b.rows.clone();
    for i in 0..b.m {
        for j in 0..b.n {
            rows[i][j] = if i == k || j == k {
                -b.rows[i][j]
            } else {
                let (bik, bkj) = (b.rows[i][k], b.rows[k][j]);
                let t1 = bik.abs().checked_mul(bkj).ok_or_else(overflow)?;
                let t2 = bik.checked_mul(bkj.abs()).ok_or_else(overflow)?;
                let half = t1.checked_add(t2).ok_or_else(overflow)? / 2;
                b.rows[i][j].checked_add(half).ok_or_else(overflow)?
            };
        }
    }
    Ok(ExchangeMatrix { n: b.n, m: b.m, rows })
}

/// Exponents of `ŷ_j = prod_i x_i^{b_ij}`: column `j` of `B`.
pub fn yhat_exponents(b: &ExchangeMatrix, j: usize) -> Result<ExponentVector> {
    b.column(j)
}

/// Directed multigraph on vertices `1..=m`; arrows are `(source, target)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Quiver {
    pub vertices: usize,
    pub arrows: Vec<(usize, usize)>,
}

impl Quiver {
    pub fn new(vertices: usize, mut arrows: Vec<(usize, usize)>) -> Result<Self> {
        for &(s, t) in &arrows {
            if s == 0 || t == 0 || s > vertices || t > vertices {
                return Err(Error::BadQuiver(format!("arrow {s}->{t} leaves vertex set 1..={vertices}")));
            }
            if s == t {
                return Err(Error::BadQuiver(format!("loop at vertex {s}")));
            }
        }
        arrows.sort_unstable();
        Ok(Quiver { vertices, arrows })
    }

    /// Graphviz rendering; frozen vertices (`> n`) are drawn as boxes.
    pub fn to_dot(&self, n: usize) -> String {
        let mut out = String::from("digraph seed {\n");
        for v in 1..=self.vertices {
            if v > n {
                let _ = writeln!(out, "  {v} [shape=box];");
            } else {
                let _ = writeln!(out, "  {v};");
            }
        }
        for (s, t) in &self.arrows {
            let _ = writeln!(out, "  {s} -> {t};");
        }
        out.push_str("}\n");
        out
    }
}

/// `b_ij = #(i -> j) - #(j -> i)` for `j <= n`.
pub fn quiver_to_matrix(q: &Quiver, n: usize) -> Result<ExchangeMatrix> {
    if n > q.vertices {
        return Err(Error::BadQuiver(format!("{n} exchangeable vertices but only {} vertices", q.vertices)));
    }
    let mut counts: BTreeMap<(usize, usize), i64> = BTreeMap::new();
    for &(s, t) in &q.arrows {
        if s == t {
            return Err(Error::BadQuiver(format!("loop at vertex {s}")));
        }
        if s > n && t > n {
            return Err(Error::BadQuiver(format!("arrow {s}->{t} joins two frozen vertices")));
        }
        *counts.entry((s, t)).or_insert(0) += 1;
    }
    if let Some(&(s, t)) = counts.keys().find(|&&(s, t)| counts.contains_key(&(t, s)) && s < t) {
        return Err(Error::BadQuiver(format!("2-cycle between {s} and {t}")));
    }
    let mut rows = vec![vec![0i64; n]; q.vertices];
    for (&(s, t), &c) in &counts {
        if t <= n {
            rows[s - 1][t - 1] += c;
        }
        if s <= n {
            rows[t - 1][s - 1] -= c;
        }
    }
    ExchangeMatrix::new(n, rows)
}

pub fn matrix_to_quiver(b: &ExchangeMatrix) -> Quiver {
    let mut arrows = Vec::new();
    for i in 0..b.m {
        for j in 0..b.n {
            let v = b.rows[i][j];
            if v > 0 {
                arrows.extend(std::iter::repeat_n((i + 1, j + 1), v as usize));
            } else if v < 0 && i >= b.n {
                arrows.extend(std::iter::repeat_n((j + 1, i + 1), v.unsigned_abs() as usize));
            }
        }
    }
    Quiver::new(b.m, arrows).expect("matrix-derived quiver is valid")
}

/// Outcome of comparing two monomials in the dominance order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Dominance {
    Less,
    Equal,
    Greater,
    Incomparable,
}

/// `x^alpha ≼ x^beta` iff `beta = alpha + B gamma` with `gamma >= 0` integral.
/// Requires `B` of full column rank so the candidate `gamma` is unique.
pub fn dominance_compare(b: &ExchangeMatrix, alpha: &[i64], beta: &[i64]) -> Result<Dominance> {
    for v in [alpha, beta] {
        if v.len() != b.m {
            return Err(Error::LengthMismatch { left: v.len(), right: b.m });
        }
    }
    let rank = b.rank();
    if rank < b.n {
        return Err(Error::RankDeficient { rank, n: b.n });
    }
    if alpha == beta {
        return Ok(Dominance::Equal);
    }
    let diff = beta
        .iter()
        .zip(alpha)
        .map(|(&y, &x)| y.checked_sub(x).ok_or(Error::Overflow("exponent difference")))
        .collect::<Result<Vec<_>>>()?;
    let Some(gamma) = linalg::solve_full_rank(&b.rows, &diff)? else {
        return Ok(Dominance::Incomparable);
    };
    let Some(gamma) = linalg::as_integers(&gamma) else {
        return Ok(Dominance::Incomparable);
    };
    Ok(if gamma.iter().all(|&g| g >= 0) {
        Dominance::Less
    } else if gamma.iter().all(|&g| g <= 0) {
        Dominance::Greater
    } else {
        Dominance::Incomparable
    })
}
