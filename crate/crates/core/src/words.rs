//! Words over the alphabet `{1..n}`, Lyndon factorization, and the
//! correspondence between dominant words and root-multiplicity vectors in
//! type `A_n`.
//!
//! Words are compared lexicographically with the convention that a proper
//! prefix is smaller than any of its extensions, so `(23) > (2)`.
//! Every word carries its rank; words of different ranks never compare.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Number of positive roots in type `A_n`.
pub fn root_count(rank: usize) -> usize {
    rank * (rank + 1) / 2
}

/// A finite word with letters in `1..=rank`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Word {
    rank: usize,
    letters: Vec<usize>,
}

impl Word {
    pub fn new(rank: usize, letters: Vec<usize>) -> Result<Self> {
        if rank == 0 {
            return Err(Error::ZeroRank);
        }
        if let Some(&letter) = letters.iter().find(|&&l| l == 0 || l > rank) {
            return Err(Error::LetterOutOfRange { letter, rank });
        }
        Ok(Word { rank, letters })
    }

    pub fn empty(rank: usize) -> Result<Self> {
        Word::new(rank, Vec::new())
    }

    /// The consecutive run `start, start+1, ..., end`.
    pub fn run(rank: usize, start: usize, end: usize) -> Result<Self> {
        if start > end {
            return Err(Error::Invalid(format!("empty run {start}..{end}")));
        }
        Word::new(rank, (start..=end).collect())
    }

    /// Parses `"2312"` (one digit per letter) or `"2,3,1,2"`.
    pub fn parse(rank: usize, text: &str) -> Result<Self> {
        Word::new(rank, parse_letters(text)?)
    }

    /// Parses a word and takes the largest letter as the rank (at least 1).
    pub fn parse_auto(text: &str) -> Result<Self> {
        let letters = parse_letters(text)?;
        let rank = letters.iter().copied().max().unwrap_or(1).max(1);
        Word::new(rank, letters)
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

    pub fn concat(&self, other: &Word) -> Result<Word> {
        check_rank(self.rank, other.rank)?;
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Ok(Word { rank: self.rank, letters })
    }

    /// Same letters, viewed in a larger alphabet.
    pub fn embed(&self, rank: usize) -> Result<Word> {
        Word::new(rank, self.letters.clone())
    }

    pub fn compare(&self, other: &Word) -> Result<Ordering> {
        compare_words(self, other)
    }

    pub fn is_lyndon(&self) -> Result<bool> {
        is_lyndon(self)
    }

    pub fn factorization(&self) -> Factorization {
        canonical_factorization(self)
    }

    pub fn is_dominant(&self) -> bool {
        is_dominant(self)
    }

    pub fn content(&self) -> Vec<usize> {
        letter_content(self)
    }

    /// `Some((start, end))` if this word is a consecutive increasing run.
    pub fn as_run(&self) -> Option<(usize, usize)> {
        let first = *self.letters.first()?;
        let is_run = self
            .letters
            .iter()
            .enumerate()
            .all(|(offset, &l)| l == first + offset);
        is_run.then(|| (first, first + self.letters.len() - 1))
    }
}

fn parse_letters(text: &str) -> Result<Vec<usize>> {
    let text = text.trim();
    let bad = || Error::ParseWord(text.to_string());
    if text.is_empty() || text == "()" {
        return Ok(Vec::new());
    }
    if text.contains(',') {
        text.split(',')
            .map(|part| part.trim().parse::<usize>().map_err(|_| bad()))
            .collect()
    } else {
        text.chars()
            .map(|c| c.to_digit(10).map(|d| d as usize).ok_or_else(bad))
            .collect()
    }
}

fn check_rank(left: usize, right: usize) -> Result<()> {
    if left != right {
        return Err(Error::RankMismatch { left, right });
    }
    Ok(())
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.rank <= 9 {
            for l in &self.letters {
                write!(f, "{l}")?;
            }
            Ok(())
        } else {
            let parts: Vec<String> = self.letters.iter().map(|l| l.to_string()).collect();
            f.write_str(&parts.join(","))
        }
    }
}

impl Serialize for Word {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

/// Lexicographic comparison; a proper prefix is smaller than its extensions.
pub fn compare_words(a: &Word, b: &Word) -> Result<Ordering> {
    check_rank(a.rank, b.rank)?;
    // slice ordering is lexicographic with the prefix convention
    Ok(a.letters.cmp(&b.letters))
}

/// `true` iff `w` is strictly smaller than each of its proper suffixes.
pub fn is_lyndon(w: &Word) -> Result<bool> {
    if w.is_empty() {
        return Err(Error::EmptyWord);
    }
    let s = &w.letters;
    Ok((1..s.len()).all(|i| s[..] < s[i..]))
}

/// A word written as a strictly decreasing product of Lyndon powers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factorization {
    pub rank: usize,
    pub factors: Vec<(Word, usize)>,
}

impl Factorization {
    pub fn expand(&self) -> Word {
        let letters = self
            .factors
            .iter()
            .flat_map(|(w, mult)| std::iter::repeat_n(w.letters.iter().copied(), *mult).flatten())
            .collect();
        Word { rank: self.rank, letters }
    }

    /// Number of factors counted with multiplicity.
    pub fn total_multiplicity(&self) -> usize {
        self.factors.iter().map(|(_, m)| m).sum()
    }
}

impl fmt::Display for Factorization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return f.write_str("()");
        }
        for (word, mult) in &self.factors {
            for _ in 0..*mult {
                write!(f, "({word})")?;
            }
        }
        Ok(())
    }
}

/// Chen–Fox–Lyndon factorization by Duval's algorithm.
pub fn canonical_factorization(w: &Word) -> Factorization {
    let s = &w.letters;
    let n = s.len();
    let mut pieces: Vec<&[usize]> = Vec::new();
    let mut i = 0;
    while i < n {
        let mut j = i + 1;
        let mut k = i;
        while j < n && s[k] <= s[j] {
            if s[k] < s[j] {
                k = i;
            } else {
                k += 1;
            }
            j += 1;
        }
        let period = j - k;
        while i <= k {
            pieces.push(&s[i..i + period]);
            i += period;
        }
    }

    let mut factors: Vec<(Word, usize)> = Vec::new();
    for piece in pieces {
        match factors.last_mut() {
            Some((last, mult)) if last.letters == piece => *mult += 1,
            _ => factors.push((Word { rank: w.rank, letters: piece.to_vec() }, 1)),
        }
    }
    Factorization { rank: w.rank, factors }
}

/// In type `A_n` the dominant Lyndon words are the increasing runs
/// `k, k+1, ..., l`; a word is dominant iff all its canonical factors are.
pub fn is_dominant(w: &Word) -> bool {
    canonical_factorization(w)
        .factors
        .iter()
        .all(|(factor, _)| factor.as_run().is_some())
}

/// Occurrence count of each letter `1..=n`, indexed from 0.
pub fn letter_content(w: &Word) -> Vec<usize> {
    let mut counts = vec![0; w.rank];
    for &l in &w.letters {
        counts[l - 1] += 1;
    }
    counts
}

/// The positive roots of `A_n` as dominant Lyndon words, in decreasing
/// lexicographic order.
#[derive(Debug, Clone)]
pub struct RootOrder {
    rank: usize,
    roots: Vec<Word>,
    index: HashMap<(usize, usize), usize>,
}

impl RootOrder {
    pub fn new(rank: usize) -> Result<Self> {
        if rank == 0 {
            return Err(Error::ZeroRank);
        }
        let mut roots = Vec::with_capacity(root_count(rank));
        for start in 1..=rank {
            for end in start..=rank {
                roots.push(Word::run(rank, start, end)?);
            }
        }
        roots.sort_by(|a, b| b.letters.cmp(&a.letters));
        let index = roots
            .iter()
            .enumerate()
            .map(|(i, w)| (w.as_run().expect("roots are runs"), i))
            .collect();
        Ok(RootOrder { rank, roots, index })
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn roots(&self) -> &[Word] {
        &self.roots
    }

    /// 0-based position of the run `start..=end`.
    pub fn position(&self, start: usize, end: usize) -> Option<usize> {
        self.index.get(&(start, end)).copied()
    }

    pub fn word_to_vector(&self, w: &Word) -> Result<RootVector> {
        check_rank(self.rank, w.rank)?;
        let mut coords = vec![0i64; self.roots.len()];
        for (factor, mult) in canonical_factorization(w).factors {
            let (start, end) = factor.as_run().ok_or_else(|| Error::NotDominant(w.to_string()))?;
            let pos = self.position(start, end).expect("every run is a root");
            coords[pos] += mult as i64;
        }
        Ok(RootVector { rank: self.rank, coords })
    }

    pub fn vector_to_word(&self, v: &RootVector) -> Result<Word> {
        check_rank(self.rank, v.rank)?;
        let mut letters = Vec::new();
        for (i, (&c, root)) in v.coords.iter().zip(&self.roots).enumerate() {
            if c < 0 {
                return Err(Error::NegativeCoordinate(i));
            }
            for _ in 0..c {
                letters.extend_from_slice(&root.letters);
            }
        }
        Ok(Word { rank: self.rank, letters })
    }

    /// Letter content of the (generalized) parameter `v`.
    pub fn content(&self, v: &RootVector) -> Result<Vec<i64>> {
        check_rank(self.rank, v.rank)?;
        let mut counts = vec![0i64; self.rank];
        for (&c, root) in v.coords.iter().zip(&self.roots) {
            for &l in &root.letters {
                counts[l - 1] += c;
            }
        }
        Ok(counts)
    }
}

pub fn root_order(rank: usize) -> Result<Vec<Word>> {
    Ok(RootOrder::new(rank)?.roots)
}

pub fn word_to_vector(w: &Word) -> Result<RootVector> {
    RootOrder::new(w.rank)?.word_to_vector(w)
}

pub fn vector_to_word(v: &RootVector) -> Result<Word> {
    RootOrder::new(v.rank)?.vector_to_word(v)
}

/// Integer vector of root multiplicities, indexed by the decreasing root
/// order. Negative entries make it a generalized parameter.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct RootVector {
    rank: usize,
    coords: Vec<i64>,
}

impl RootVector {
    pub fn new(rank: usize, coords: Vec<i64>) -> Result<Self> {
        if rank == 0 {
            return Err(Error::ZeroRank);
        }
        if coords.len() != root_count(rank) {
            return Err(Error::LengthMismatch { left: coords.len(), right: root_count(rank) });
        }
        Ok(RootVector { rank, coords })
    }

    pub fn zero(rank: usize) -> Self {
        RootVector { rank, coords: vec![0; root_count(rank)] }
    }

    /// Unit vector at 0-based position `i`.
    pub fn unit(rank: usize, i: usize) -> Self {
        let mut v = RootVector::zero(rank);
        v.coords[i] = 1;
        v
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn coords(&self) -> &[i64] {
        &self.coords
    }

    pub fn is_nonnegative(&self) -> bool {
        self.coords.iter().all(|&c| c >= 0)
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|&c| c == 0)
    }

    /// Sign of the first nonzero coordinate.
    pub fn leading_sign(&self) -> Ordering {
        self.coords
            .iter()
            .find(|&&c| c != 0)
            .map_or(Ordering::Equal, |c| c.cmp(&0))
    }

    pub fn compare(&self, other: &RootVector) -> Result<Ordering> {
        compare_vectors(self, other)
    }

    fn zip_with(&self, other: &RootVector, op: impl Fn(i64, i64) -> Option<i64>) -> Result<RootVector> {
        if self.coords.len() != other.coords.len() {
            return Err(Error::LengthMismatch { left: self.coords.len(), right: other.coords.len() });
        }
        let coords = self
            .coords
            .iter()
            .zip(&other.coords)
            .map(|(&a, &b)| op(a, b).ok_or(Error::Overflow("root vector arithmetic")))
            .collect::<Result<Vec<_>>>()?;
        Ok(RootVector { rank: self.rank, coords })
    }

    pub fn add(&self, other: &RootVector) -> Result<RootVector> {
        self.zip_with(other, i64::checked_add)
    }

    pub fn sub(&self, other: &RootVector) -> Result<RootVector> {
        self.zip_with(other, i64::checked_sub)
    }

    pub fn scale(&self, factor: i64) -> Result<RootVector> {
        let coords = self
            .coords
            .iter()
            .map(|&c| c.checked_mul(factor).ok_or(Error::Overflow("root vector arithmetic")))
            .collect::<Result<Vec<_>>>()?;
        Ok(RootVector { rank: self.rank, coords })
    }
}

impl fmt::Display for RootVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coords.iter().map(|c| c.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// `u > v` iff the first nonzero coordinate of `u - v` is positive.
pub fn compare_vectors(u: &RootVector, v: &RootVector) -> Result<Ordering> {
    if u.coords.len() != v.coords.len() {
        return Err(Error::LengthMismatch { left: u.coords.len(), right: v.coords.len() });
    }
    let first_diff = u.coords.iter().zip(&v.coords).find(|(a, b)| a != b);
    Ok(first_diff.map_or(Ordering::Equal, |(a, b)| a.cmp(b)))
}
