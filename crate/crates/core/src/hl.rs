//! The bipartite seed of the Hernandez–Leclerc category `C_1` in type `A_n`,
//! written in the Laurent monomials `Y_{i,a}` (spectral parameter `q^a`).

use std::collections::BTreeMap;
use std::fmt;

use crate::cluster::ExchangeMatrix;
use crate::error::{Error, Result};

/// Laurent monomial in the `Y_{i,a}`, keyed by `(node, q-power)`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct YMonomial {
    exps: BTreeMap<(usize, i64), i64>,
}

impl YMonomial {
    pub fn one() -> Self {
        YMonomial::default()
    }

    pub fn y(node: usize, power: i64) -> Self {
        let mut m = YMonomial::one();
        m.exps.insert((node, power), 1);
        m
    }

    pub fn is_one(&self) -> bool {
        self.exps.is_empty()
    }

    pub fn exponent(&self, node: usize, power: i64) -> i64 {
        self.exps.get(&(node, power)).copied().unwrap_or(0)
    }

    /// `((node, q-power), exponent)` pairs in increasing key order.
    pub fn exponents(&self) -> impl Iterator<Item = ((usize, i64), i64)> + '_ {
        self.exps.iter().map(|(&k, &e)| (k, e))
    }

    pub fn mul(&self, other: &YMonomial) -> YMonomial {
        let mut out = self.clone();
        for (&key, &e) in &other.exps {
            let slot = out.exps.entry(key).or_insert(0);
            *slot += e;
            if *slot == 0 {
                out.exps.remove(&key);
            }
        }
        out
    }

    pub fn pow(&self, e: i64) -> YMonomial {
        if e == 0 {
            return YMonomial::one();
        }
        YMonomial { exps: self.exps.iter().map(|(&k, &x)| (k, x * e)).collect() }
    }

    pub fn inverse(&self) -> YMonomial {
        self.pow(-1)
    }
}

impl fmt::Display for YMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return f.write_str("1");
        }
        let parts: Vec<String> = self
            .exps
            .iter()
            .map(|(&(i, a), &e)| if e == 1 { format!("Y[{i},{a}]") } else { format!("Y[{i},{a}]^{e}") })
            .collect();
        f.write_str(&parts.join(" "))
    }
}

/// Cartan matrix entry `a_ij` of type `A_n`.
fn cartan(i: usize, j: usize) -> i64 {
    if i == j {
        2
    } else if i.abs_diff(j) == 1 {
        -1
    } else {
        0
    }
}

/// `A_{i,a} = Y_{i,a+1} Y_{i,a-1} prod_{j ~ i} Y_{j,a}^{-1}`.
pub fn a_monomial(rank: usize, node: usize, power: i64) -> Result<YMonomial> {
    if node == 0 || node > rank {
        return Err(Error::Invalid(format!("node {node} is not in 1..={rank}")));
    }
    let mut m = YMonomial::y(node, power + 1).mul(&YMonomial::y(node, power - 1));
    for j in 1..=rank {
        if j != node {
            m = m.mul(&YMonomial::y(j, power).pow(cartan(j, node)));
        }
    }
    Ok(m)
}

/// Which of the two proper 2-colourings of the path to use: `first` is the
/// colour of node 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Coloring {
    pub first: u8,
}

impl Coloring {
    pub const BOTH: [Coloring; 2] = [Coloring { first: 0 }, Coloring { first: 1 }];

    pub fn colour(&self, node: usize) -> u8 {
        ((node - 1) as u8 + self.first) % 2
    }
}

/// Seed with `x_i = Y_{i,ξ_i+2}` and `x_{n+i} = Y_{i,ξ_i} Y_{i,ξ_i+2}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct C1Seed {
    pub rank: usize,
    pub xi: Vec<u8>,
    pub vars: Vec<YMonomial>,
    pub matrix: ExchangeMatrix,
}

pub fn build_c1_seed(rank: usize, coloring: Coloring) -> Result<C1Seed> {
    if rank == 0 {
        return Err(Error::ZeroRank);
    }
    let xi: Vec<u8> = (1..=rank).map(|i| coloring.colour(i)).collect();
    let mut vars = Vec::with_capacity(2 * rank);
    for i in 1..=rank {
        vars.push(YMonomial::y(i, xi[i - 1] as i64 + 2));
    }
    for i in 1..=rank {
        let base = xi[i - 1] as i64;
        vars.push(YMonomial::y(i, base).mul(&YMonomial::y(i, base + 2)));
    }

    let mut rows = vec![vec![0i64; rank]; 2 * rank];
    for j in 1..=rank {
        let sign = if xi[j - 1] == 0 { 1 } else { -1 };
        for i in 1..=rank {
            if i != j {
                rows[i - 1][j - 1] = sign * cartan(i, j);
            }
        }
        rows[rank + j - 1][j - 1] = -1;
        if xi[j - 1] == 0 {
            for k in (1..=rank).filter(|&k| k != j) {
                rows[rank + k - 1][j - 1] = -cartan(k, j);
            }
        }
    }
    Ok(C1Seed { rank, xi, vars, matrix: ExchangeMatrix::new(rank, rows)? })
}

/// `ŷ_j` as a monomial in the `Y`'s next to `A_{j, ξ_j+1}^{-1}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HlCheck {
    pub node: usize,
    pub yhat: YMonomial,
    pub expected: YMonomial,
}

impl HlCheck {
    pub fn holds(&self) -> bool {
        self.yhat == self.expected
    }
}

pub fn verify_hl_compat(seed: &C1Seed) -> Result<Vec<HlCheck>> {
    (1..=seed.rank)
        .map(|j| {
            let mut yhat = YMonomial::one();
            for (i, var) in seed.vars.iter().enumerate() {
                yhat = yhat.mul(&var.pow(seed.matrix.entry(i + 1, j)));
            }
            let expected = a_monomial(seed.rank, j, seed.xi[j - 1] as i64 + 1)?.inverse();
            Ok(HlCheck { node: j, yhat, expected })
        })
        .collect()
}
