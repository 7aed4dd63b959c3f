//! The initial seed for graded modules over the quiver Hecke algebra of
//! type `A_n`, built from the reduced word `1, 21, 321, ..., n...1` of the
//! longest Weyl group element.

use serde_json::{json, Value};

use crate::cluster::{quiver_to_matrix, ExchangeMatrix, Quiver};
use crate::error::{Error, Result};
use crate::shuffle::CartanForm;
use crate::words::{root_count, Word};

/// Letters of the reduced word, positions `1..=r_n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReducedWord {
    rank: usize,
    letters: Vec<usize>,
}

impl ReducedWord {
    pub fn new(rank: usize) -> Result<Self> {
        if rank == 0 {
            return Err(Error::ZeroRank);
        }
        let letters = (1..=rank).flat_map(|k| (1..=k).rev()).collect();
        Ok(ReducedWord { rank, letters })
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn letters(&self) -> &[usize] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Letter at 1-based position `s`.
    pub fn letter(&self, s: usize) -> usize {
        self.letters[s - 1]
    }

    pub fn plus_minus(&self) -> PlusMinus {
        let r = self.len();
        let mut plus = vec![r + 1; r];
        let mut minus = vec![0; r];
        for s in 1..=r {
            if let Some(t) = (s + 1..=r).find(|&t| self.letter(t) == self.letter(s)) {
                plus[s - 1] = t;
            }
            if let Some(t) = (1..s).rev().find(|&t| self.letter(t) == self.letter(s)) {
                minus[s - 1] = t;
            }
        }
        PlusMinus { plus, minus }
    }
}

/// Next and previous occurrence of the same letter for each position,
/// with `r + 1` and `0` standing for "none".
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PlusMinus {
    plus: Vec<usize>,
    minus: Vec<usize>,
}

impl PlusMinus {
    pub fn plus(&self, s: usize) -> usize {
        self.plus[s - 1]
    }

    pub fn minus(&self, s: usize) -> usize {
        self.minus[s - 1]
    }

    /// Positions with no later occurrence of their letter.
    pub fn frozen(&self) -> Vec<usize> {
        let end = self.plus.len() + 1;
        (1..end).filter(|&s| self.plus(s) == end).collect()
    }
}

/// Vertical arrows `s -> s_-`, and horizontal arrows `s -> t` when
/// `s < t < s_+ < t_+ <= r + 1` and the letters at `s`, `t` are adjacent
/// in the Dynkin diagram.
pub fn build_quiver(rank: usize) -> Result<Quiver> {
    let word = ReducedWord::new(rank)?;
    let pm = word.plus_minus();
    let r = word.len();
    let mut arrows = Vec::new();
    for s in 1..=r {
        if pm.minus(s) >= 1 {
            arrows.push((s, pm.minus(s)));
        }
        for t in s + 1..=r {
            let horizontal = t < pm.plus(s) && pm.plus(s) < pm.plus(t) && pm.plus(t) <= r + 1;
            if horizontal && word.letter(s).abs_diff(word.letter(t)) == 1 {
                arrows.push((s, t));
            }
        }
    }
    Quiver::new(r, arrows)
}

/// The seed matrix assembled from blocks: row block `k` (size `k`) holds
/// `B_{k-1}`, `A_k`, `C_{k+1}` in column blocks `k-1`, `k`, `k+1`.
pub fn block_matrix(rank: usize) -> Result<ExchangeMatrix> {
    if rank == 0 {
        return Err(Error::ZeroRank);
    }
    let rows_total = root_count(rank);
    let cols_total = root_count(rank - 1);
    let mut rows = vec![vec![0i64; cols_total]; rows_total];
    // offset of block k (1-based) is r_{k-1}
    let offset = |k: usize| root_count(k - 1);

    for k in 1..=rank {
        let r0 = offset(k);
        // A_k: +1 above the diagonal, -1 below
        if k < rank {
            let c0 = offset(k);
            for i in 0..k {
                if i + 1 < k {
                    rows[r0 + i][c0 + i + 1] = 1;
                }
                if i > 0 {
                    rows[r0 + i][c0 + i - 1] = -1;
                }
            }
        }
        // B_{k-1}: k x (k-1), -1 on the diagonal, +1 just below
        if k >= 2 {
            let c0 = offset(k - 1);
            for j in 0..k - 1 {
                rows[r0 + j][c0 + j] = -1;
                rows[r0 + j + 1][c0 + j] = 1;
            }
        }
        // C_{k+1} = -transpose(B_k): k x (k+1)
        if k + 1 < rank {
            let c0 = offset(k + 1);
            for j in 0..k {
                rows[r0 + j][c0 + j] = 1;
                rows[r0 + j][c0 + j + 1] = -1;
            }
        }
    }
    ExchangeMatrix::new(cols_total, rows)
}

/// Matrix induced by `build_quiver`.
pub fn quiver_matrix(rank: usize) -> Result<ExchangeMatrix> {
    quiver_to_matrix(&build_quiver(rank)?, root_count(rank - 1))
}

/// Dominant word of the variable in row `k`, column `j`:
/// `(j..k)(j-1..k-1)...(1..k-j+1)`.
pub fn initial_word(rank: usize, k: usize, j: usize) -> Result<Word> {
    if j == 0 || j > k || k > rank {
        return Err(Error::Invalid(format!("no initial variable at row {k}, column {j} in rank {rank}")));
    }
    let mut letters = Vec::new();
    for t in 0..j {
        letters.extend(j - t..=k - t);
    }
    Word::new(rank, letters)
}

/// All `r_n` initial words in flat order `r_{k-1} + j`.
pub fn initial_parameters(rank: usize) -> Result<Vec<Word>> {
    if rank == 0 {
        return Err(Error::ZeroRank);
    }
    let mut words = Vec::with_capacity(root_count(rank));
    for k in 1..=rank {
        for j in 1..=k {
            words.push(initial_word(rank, k, j)?);
        }
    }
    Ok(words)
}

/// Expected letter content of the frozen word in column `j`: letter `i`
/// occurs `min(i, n+1-i, j, n+1-j)` times.
pub fn frozen_content(rank: usize, j: usize) -> Vec<usize> {
    let width = j.min(rank + 1 - j);
    (1..=rank).map(|i| i.min(rank + 1 - i).min(width)).collect()
}

/// `(wt(w), alpha_i)` for each `i` in `1..=n`.
pub fn weight_pairings(w: &Word) -> Vec<i64> {
    let form = CartanForm::new(w.rank()).expect("word rank is positive");
    let content: Vec<i64> = w.content().iter().map(|&c| c as i64).collect();
    (1..=w.rank())
        .map(|i| {
            let mut unit = vec![0i64; w.rank()];
            unit[i - 1] = 1;
            form.pair_contents(&content, &unit)
        })
        .collect()
}

/// Pairing predicted for frozen column `k`: 1 at `i = k` and `i = n-k+1`
/// (2 when they coincide), 0 elsewhere.
pub fn expected_pairings(rank: usize, k: usize) -> Vec<i64> {
    let mut out = vec![0i64; rank];
    out[k - 1] += 1;
    out[rank - k] += 1;
    out
}

pub fn weight_pairing_check(rank: usize) -> Result<bool> {
    let frozen_start = root_count(rank - 1);
    let words = initial_parameters(rank)?;
    Ok((1..=rank).all(|k| weight_pairings(&words[frozen_start + k - 1]) == expected_pairings(rank, k)))
}

/// Words and exchange matrix of the initial seed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InitialSeed {
    pub rank: usize,
    pub words: Vec<Word>,
    pub matrix: ExchangeMatrix,
}

impl InitialSeed {
    pub fn new(rank: usize) -> Result<Self> {
        Ok(InitialSeed { rank, words: initial_parameters(rank)?, matrix: block_matrix(rank)? })
    }

    /// First frozen index (1-based).
    pub fn frozen_from(&self) -> usize {
        self.matrix.n() + 1
    }

    pub fn to_json(&self) -> Value {
        json!({
            "rank": self.rank,
            "words": self.words.iter().map(Word::to_string).collect::<Vec<_>>(),
            "matrix": self.matrix.to_json(),
            "frozen_from": self.frozen_from(),
        })
    }
}
