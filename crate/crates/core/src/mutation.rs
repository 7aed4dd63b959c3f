//! Seeds whose variables are labelled by dominant words (as root
//! multiplicity vectors): parameter mutation, the generalized parameters
//! attached to `ŷ_j`, the compatibility test, and bounded exploration.

use std::cmp::Ordering;
use std::collections::{HashSet, VecDeque};
use std::fmt;

use serde::Serialize;
use serde_json::{json, Value};

use crate::cluster::{mutate_matrix, ExchangeMatrix};
use crate::error::{Error, Result};
use crate::klr_seed::InitialSeed;
use crate::laurent::f_and_g;
use crate::words::{compare_vectors, RootOrder, RootVector, Word};

/// The monoid law on dominant words, as vector addition.
pub fn odot(a: &RootVector, b: &RootVector) -> Result<RootVector> {
    a.add(b)
}

/// Exchange matrix together with one parameter per row index.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ParamSeed {
    pub rank: usize,
    pub matrix: ExchangeMatrix,
    pub params: Vec<RootVector>,
}

impl ParamSeed {
    pub fn new(rank: usize, matrix: ExchangeMatrix, params: Vec<RootVector>) -> Result<Self> {
        if params.len() != matrix.m() {
            return Err(Error::LengthMismatch { left: params.len(), right: matrix.m() });
        }
        if let Some(p) = params.iter().find(|p| p.rank() != rank) {
            return Err(Error::RankMismatch { left: rank, right: p.rank() });
        }
        Ok(ParamSeed { rank, matrix, params })
    }

    pub fn from_words(rank: usize, matrix: ExchangeMatrix, words: &[Word]) -> Result<Self> {
        let order = RootOrder::new(rank)?;
        let params = words.iter().map(|w| order.word_to_vector(w)).collect::<Result<_>>()?;
        ParamSeed::new(rank, matrix, params)
    }

    /// The initial seed of rank `n`.
    pub fn initial(rank: usize) -> Result<Self> {
        let seed = InitialSeed::new(rank)?;
        ParamSeed::from_words(rank, seed.matrix, &seed.words)
    }

    /// Accepts the output of `to_json`, or the same object with only
    /// `words` in place of `params`.
    pub fn from_json(value: &Value) -> Result<Self> {
        let bad = |what: &str| Error::Invalid(format!("seed JSON: {what}"));
        let rank = value["rank"].as_u64().ok_or_else(|| bad("missing \"rank\""))? as usize;
        let matrix: ExchangeMatrix =
            serde_json::from_value(value["matrix"].clone()).map_err(|e| bad(&format!("bad \"matrix\": {e}")))?;
        if let Some(params) = value.get("params") {
            let vectors: Vec<Vec<i64>> =
                serde_json::from_value(params.clone()).map_err(|e| bad(&format!("bad \"params\": {e}")))?;
            let params = vectors.into_iter().map(|v| RootVector::new(rank, v)).collect::<Result<_>>()?;
            return ParamSeed::new(rank, matrix, params);
        }
        let words = value["words"].as_array().ok_or_else(|| bad("need \"params\" or \"words\""))?;
        let words = words
            .iter()
            .map(|w| Word::parse(rank, w.as_str().ok_or_else(|| bad("words must be strings"))?))
            .collect::<Result<Vec<_>>>()?;
        ParamSeed::from_words(rank, matrix, &words)
    }

    /// Decoded words; `None` where a parameter has a negative coordinate.
    pub fn words(&self) -> Vec<Option<Word>> {
        let order = RootOrder::new(self.rank).expect("rank is positive");
        self.params.iter().map(|p| order.vector_to_word(p).ok()).collect()
    }

    pub fn to_json(&self) -> Value {
        let words: Vec<Value> = self
            .words()
            .into_iter()
            .map(|w| w.map_or(Value::Null, |w| Value::String(w.to_string())))
            .collect();
        json!({
            "rank": self.rank,
            "words": words,
            "matrix": self.matrix.to_json(),
            "frozen_from": self.matrix.n() + 1,
            "params": self.params.iter().map(|p| p.coords().to_vec()).collect::<Vec<_>>(),
        })
    }

    pub fn mutate(&self, k: usize) -> Result<ParamSeed> {
        mutate_parameters(self, k)
    }

    pub fn mutate_along(&self, sequence: &[usize]) -> Result<ParamSeed> {
        sequence.iter().try_fold(self.clone(), |seed, &k| seed.mutate(k))
    }
}

/// `(sum_{b_ik > 0} b_ik μ_i, sum_{b_ik < 0} -b_ik μ_i)`
pub fn exchange_sums(seed: &ParamSeed, k: usize) -> Result<(RootVector, RootVector)> {
    seed.matrix.check_direction(k)?;
    let mut positive = RootVector::zero(seed.rank);
    let mut negative = RootVector::zero(seed.rank);
    for (i, param) in seed.params.iter().enumerate() {
        let b = seed.matrix.entry(i + 1, k);
        if b > 0 {
            positive = positive.add(&param.scale(b)?)?;
        } else if b < 0 {
            negative = negative.add(&param.scale(-b)?)?;
        }
    }
    Ok((positive, negative))
}

/// `μ'_k = max(positive sum, negative sum) - μ_k`, the maximum taken in the
/// first-nonzero-coordinate order.
pub fn mutate_parameters(seed: &ParamSeed, k: usize) -> Result<ParamSeed> {
    let (positive, negative) = exchange_sums(seed, k)?;
    let larger = match compare_vectors(&positive, &negative)? {
        Ordering::Less => negative,
        _ => positive,
    };
    let new_param = larger.sub(&seed.params[k - 1])?;
    if !new_param.is_nonnegative() {
        return Err(Error::NonDominantParameter { k, vector: new_param.to_string() });
    }
    let mut params = seed.params.clone();
    params[k - 1] = new_param;
    Ok(ParamSeed { rank: seed.rank, matrix: mutate_matrix(&seed.matrix, k)?, params })
}

/// Generalized parameter `sum_i b_ij μ_i`.
pub fn hat_mu(seed: &ParamSeed, j: usize) -> Result<RootVector> {
    seed.matrix.check_direction(j)?;
    let mut total = RootVector::zero(seed.rank);
    for (i, param) in seed.params.iter().enumerate() {
        total = total.add(&param.scale(seed.matrix.entry(i + 1, j))?)?;
    }
    Ok(total)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Increasing,
    Decreasing,
    NotCompatible,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Increasing => "increasing",
            Verdict::Decreasing => "decreasing",
            Verdict::NotCompatible => "not_compatible",
        })
    }
}

/// Increasing if every `ĥμ_j` is `>= 0` in the vector order, decreasing if
/// every one is `<= 0`. A seed where all of them vanish reports increasing.
pub fn check_compatible(seed: &ParamSeed) -> Result<Verdict> {
    let signs = (1..=seed.matrix.n())
        .map(|j| Ok(hat_mu(seed, j)?.leading_sign()))
        .collect::<Result<Vec<_>>>()?;
    Ok(if signs.iter().all(|&s| s != Ordering::Less) {
        Verdict::Increasing
    } else if signs.iter().all(|&s| s != Ordering::Greater) {
        Verdict::Decreasing
    } else {
        Verdict::NotCompatible
    })
}

/// One seed reached during exploration.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Explored {
    pub sequence: Vec<usize>,
    pub seed: ParamSeed,
    pub verdict: Verdict,
}

impl Explored {
    pub fn to_json(&self) -> Value {
        let words: Vec<Value> = self
            .seed
            .words()
            .into_iter()
            .map(|w| w.map_or(Value::Null, |w| Value::String(w.to_string())))
            .collect();
        json!({"sequence": self.sequence, "verdict": self.verdict, "words": words})
    }
}

/// Breadth-first search over mutation sequences of length `<= depth` that
/// never repeat a direction twice in a row. A seed already seen (same
/// matrix and parameters, index by index) is not revisited. Output is in
/// discovery order: by length, then lexicographically by sequence.
pub fn explore(start: &ParamSeed, depth: usize) -> Result<Vec<Explored>> {
    let mut seen: HashSet<ParamSeed> = HashSet::new();
    let mut out = Vec::new();
    let mut queue = VecDeque::new();
    seen.insert(start.clone());
    queue.push_back((Vec::new(), start.clone()));
    while let Some((sequence, seed)) = queue.pop_front() {
        let verdict = check_compatible(&seed)?;
        if sequence.len() < depth {
            for k in 1..=seed.matrix.n() {
                if sequence.last() == Some(&k) {
                    continue;
                }
                let next = seed.mutate(k)?;
                if seen.insert(next.clone()) {
                    let mut longer = sequence.clone();
                    longer.push(k);
                    queue.push_back((longer, next));
                }
            }
        }
        out.push(Explored { sequence, seed, verdict });
    }
    Ok(out)
}

/// Both sides of the parameter formula for one cluster variable.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CrosscheckReport {
    pub variable: usize,
    pub mutated: RootVector,
    pub predicted: RootVector,
    pub a: Vec<i64>,
    pub g: Vec<i64>,
    pub c: Vec<i64>,
}

impl CrosscheckReport {
    pub fn holds(&self) -> bool {
        self.mutated == self.predicted
    }
}

/// Compares the parameter of variable `l` after mutating along `sequence`
/// with `sum_j a_j ĥμ_j + sum_i (-c_i) μ_{n+i} + sum_i g_i μ_i`, where
/// `a, c, g` come from the Laurent expansion. In a decreasing seed the
/// `ĥμ` term is dropped.
pub fn corollary_crosscheck(seed: &ParamSeed, sequence: &[usize], l: usize) -> Result<CrosscheckReport> {
    let n = seed.matrix.n();
    seed.matrix.check_direction(l)?;
    let rank = seed.matrix.rank();
    if rank < n {
        return Err(Error::RankDeficient { rank, n });
    }
    let verdict = check_compatible(seed)?;
    if verdict == Verdict::NotCompatible {
        return Err(Error::Invalid("the starting seed is not compatible".into()));
    }
    let mutated = seed.mutate_along(sequence)?.params[l - 1].clone();
    let data = f_and_g(&seed.matrix, sequence)?.swap_remove(l - 1);

    let mut predicted = RootVector::zero(seed.rank);
    if verdict == Verdict::Increasing {
        for (j, &aj) in data.a.iter().enumerate() {
            predicted = predicted.add(&hat_mu(seed, j + 1)?.scale(aj)?)?;
        }
    }
    for (i, &ci) in data.c.iter().enumerate() {
        predicted = predicted.add(&seed.params[n + i].scale(-ci)?)?;
    }
    for (i, &gi) in data.g.iter().enumerate() {
        predicted = predicted.add(&seed.params[i].scale(gi)?)?;
    }
    Ok(CrosscheckReport { variable: l, mutated, predicted, a: data.a, g: data.g, c: data.c })
}
