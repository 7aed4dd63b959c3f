//! Quantum shuffle product on words with coefficients in `Z[q, q^-1]`,
//! and the brute-force reference for the dominant-word monoid law.

use std::collections::BTreeMap;
use std::fmt;

use serde_json::{json, Map, Value};

use crate::error::{Error, Result};
use crate::words::{canonical_factorization, is_dominant, Word};

/// Laurent polynomial in a single variable `q` with integer coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct QPolynomial {
    coeffs: BTreeMap<i64, i64>,
}

impl QPolynomial {
    pub fn zero() -> Self {
        QPolynomial::default()
    }

    pub fn one() -> Self {
        QPolynomial::monomial(0, 1)
    }

    pub fn monomial(exp: i64, coeff: i64) -> Self {
        let mut p = QPolynomial::zero();
        if coeff != 0 {
            p.coeffs.insert(exp, coeff);
        }
        p
    }

    pub fn from_terms(terms: &[(i64, i64)]) -> Result<Self> {
        let mut p = QPolynomial::zero();
        for &(exp, coeff) in terms {
            p.add_term(exp, coeff)?;
        }
        Ok(p)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, exp: i64) -> i64 {
        self.coeffs.get(&exp).copied().unwrap_or(0)
    }

    /// `(exponent, coefficient)` pairs, increasing in the exponent.
    pub fn terms(&self) -> impl Iterator<Item = (i64, i64)> + '_ {
        self.coeffs.iter().map(|(&e, &c)| (e, c))
    }

    pub fn add_term(&mut self, exp: i64, coeff: i64) -> Result<()> {
        let slot = self.coeffs.entry(exp).or_insert(0);
        *slot = slot.checked_add(coeff).ok_or(Error::Overflow("q-polynomial addition"))?;
        if *slot == 0 {
            self.coeffs.remove(&exp);
        }
        Ok(())
    }

    pub fn add(&self, other: &QPolynomial) -> Result<QPolynomial> {
        let mut out = self.clone();
        for (e, c) in other.terms() {
            out.add_term(e, c)?;
        }
        Ok(out)
    }

    pub fn mul(&self, other: &QPolynomial) -> Result<QPolynomial> {
        let mut out = QPolynomial::zero();
        for (e1, c1) in self.terms() {
            for (e2, c2) in other.terms() {
                let e = e1.checked_add(e2).ok_or(Error::Overflow("q-polynomial exponent"))?;
                let c = c1.checked_mul(c2).ok_or(Error::Overflow("q-polynomial product"))?;
                out.add_term(e, c)?;
            }
        }
        Ok(out)
    }

    /// Multiplies by `q^shift`.
    pub fn shift(&self, shift: i64) -> Result<QPolynomial> {
        let coeffs = self
            .coeffs
            .iter()
            .map(|(&e, &c)| Ok((e.checked_add(shift).ok_or(Error::Overflow("q-polynomial exponent"))?, c)))
            .collect::<Result<_>>()?;
        Ok(QPolynomial { coeffs })
    }
}

fn write_q_term(f: &mut fmt::Formatter<'_>, exp: i64, coeff: i64, leading: bool) -> fmt::Result {
    let magnitude = coeff.unsigned_abs();
    match (leading, coeff < 0) {
        (true, true) => f.write_str("-")?,
        (false, true) => f.write_str(" - ")?,
        (false, false) => f.write_str(" + ")?,
        (true, false) => {}
    }
    let power = match exp {
        0 => String::new(),
        1 => "q".to_string(),
        e => format!("q^{e}"),
    };
    if power.is_empty() {
        write!(f, "{magnitude}")
    } else if magnitude == 1 {
        f.write_str(&power)
    } else {
        write!(f, "{magnitude}{power}")
    }
}

impl fmt::Display for QPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (e, c)) in self.coeffs.iter().rev().enumerate() {
            write_q_term(f, *e, *c, i == 0)?;
        }
        Ok(())
    }
}

/// The symmetric bilinear form of type `A_n` on simple roots.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CartanForm {
    rank: usize,
}

impl CartanForm {
    pub fn new(rank: usize) -> Result<Self> {
        if rank == 0 {
            return Err(Error::ZeroRank);
        }
        Ok(CartanForm { rank })
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// `(alpha_i, alpha_j)` for letters `i, j` in `1..=n`.
    pub fn pairing(&self, i: usize, j: usize) -> i64 {
        if i == j {
            2
        } else if i.abs_diff(j) == 1 {
            -1
        } else {
            0
        }
    }

    /// Pairing of the weights `sum counts_a[i] alpha_{i+1}` and
    /// `sum counts_b[j] alpha_{j+1}`.
    pub fn pair_contents(&self, counts_a: &[i64], counts_b: &[i64]) -> i64 {
        let mut total = 0;
        for (i, &a) in counts_a.iter().enumerate() {
            for (j, &b) in counts_b.iter().enumerate() {
                total += a * b * self.pairing(i + 1, j + 1);
            }
        }
        total
    }
}

/// Finite formal sum of words with `QPolynomial` coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WordSeries {
    rank: usize,
    terms: BTreeMap<Vec<usize>, QPolynomial>,
}

impl WordSeries {
    pub fn zero(rank: usize) -> Self {
        WordSeries { rank, terms: BTreeMap::new() }
    }

    pub fn word(w: &Word) -> Self {
        let mut s = WordSeries::zero(w.rank());
        s.terms.insert(w.letters().to_vec(), QPolynomial::one());
        s
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, w: &Word) -> QPolynomial {
        self.terms.get(w.letters()).cloned().unwrap_or_default()
    }

    /// Terms in decreasing word order.
    pub fn terms(&self) -> impl Iterator<Item = (Word, &QPolynomial)> + '_ {
        self.terms
            .iter()
            .rev()
            .map(|(letters, p)| (Word::new(self.rank, letters.clone()).expect("letters checked on insert"), p))
    }

    pub fn add_term(&mut self, w: &Word, p: &QPolynomial) -> Result<()> {
        if w.rank() != self.rank {
            return Err(Error::RankMismatch { left: self.rank, right: w.rank() });
        }
        let sum = match self.terms.get(w.letters()) {
            Some(existing) => existing.add(p)?,
            None => p.clone(),
        };
        if sum.is_zero() {
            self.terms.remove(w.letters());
        } else {
            self.terms.insert(w.letters().to_vec(), sum);
        }
        Ok(())
    }

    pub fn shift(&self, shift: i64) -> Result<WordSeries> {
        let mut out = WordSeries::zero(self.rank);
        for (letters, p) in &self.terms {
            out.terms.insert(letters.clone(), p.shift(shift)?);
        }
        Ok(out)
    }

    /// `{"word": [[exp, coeff], ...], ...}`
    pub fn to_json(&self) -> Value {
        let mut map = Map::new();
        for (w, p) in self.terms() {
            let pairs: Vec<Value> = p.terms().map(|(e, c)| json!([e, c])).collect();
            map.insert(w.to_string(), Value::Array(pairs));
        }
        Value::Object(map)
    }
}

impl fmt::Display for WordSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return f.write_str("0");
        }
        let mut leading = true;
        for (w, p) in self.terms() {
            for (e, c) in p.terms().collect::<Vec<_>>().into_iter().rev() {
                if e == 0 && c.abs() == 1 {
                    f.write_str(match (leading, c < 0) {
                        (true, true) => "-",
                        (false, true) => " - ",
                        (false, false) => " + ",
                        (true, false) => "",
                    })?;
                } else {
                    write_q_term(f, e, c, leading)?;
                    f.write_str(" ")?;
                }
                write!(f, "({w})")?;
                leading = false;
            }
        }
        Ok(())
    }
}

/// Calls `visit(mask)` for each way of choosing `r` of `r + s` slots,
/// where `mask[p]` is true when slot `p` takes the next letter of the
/// first word.
fn for_each_placement(r: usize, s: usize, visit: &mut impl FnMut(&[bool]) -> Result<()>) -> Result<()> {
    fn recurse(
        mask: &mut Vec<bool>,
        left_a: usize,
        left_b: usize,
        visit: &mut impl FnMut(&[bool]) -> Result<()>,
    ) -> Result<()> {
        if left_a == 0 && left_b == 0 {
            return visit(mask);
        }
        if left_a > 0 {
            mask.push(true);
            recurse(mask, left_a - 1, left_b, visit)?;
            mask.pop();
        }
        if left_b > 0 {
            mask.push(false);
            recurse(mask, left_a, left_b - 1, visit)?;
            mask.pop();
        }
        Ok(())
    }
    recurse(&mut Vec::with_capacity(r + s), r, s, visit)
}

/// Quantum shuffle `a ∘ b`: each interleaving is weighted by `q^{-e}`, where
/// `e` sums `(a_k, b_l)` over letters of `a` placed after letters of `b`.
pub fn shuffle(a: &Word, b: &Word) -> Result<WordSeries> {
    if a.rank() != b.rank() {
        return Err(Error::RankMismatch { left: a.rank(), right: b.rank() });
    }
    let rank = a.rank();
    let form = CartanForm::new(rank)?;
    let mut out = WordSeries::zero(rank);
    let mut acc: BTreeMap<(Vec<usize>, i64), i64> = BTreeMap::new();
    for_each_placement(a.len(), b.len(), &mut |mask| {
        let mut letters = Vec::with_capacity(mask.len());
        let mut seen_b = vec![0i64; rank + 2];
        let (mut ia, mut ib) = (0, 0);
        let mut e = 0i64;
        for &from_a in mask {
            if from_a {
                let x = a.letters()[ia];
                ia += 1;
                e += form.pairing(x, x) * seen_b[x] - seen_b[x - 1] - seen_b[x + 1];
                letters.push(x);
            } else {
                let y = b.letters()[ib];
                ib += 1;
                seen_b[y] += 1;
                letters.push(y);
            }
        }
        let slot = acc.entry((letters, -e)).or_insert(0);
        *slot = slot.checked_add(1).ok_or(Error::Overflow("shuffle count"))?;
        Ok(())
    })?;
    for ((letters, exp), count) in acc {
        let w = Word::new(rank, letters)?;
        out.add_term(&w, &QPolynomial::monomial(exp, count))?;
    }
    Ok(out)
}

/// Bilinear extension of `shuffle` to series.
pub fn shuffle_series(x: &WordSeries, y: &WordSeries) -> Result<WordSeries> {
    if x.rank != y.rank {
        return Err(Error::RankMismatch { left: x.rank, right: y.rank });
    }
    let mut out = WordSeries::zero(x.rank);
    for (u, p) in x.terms() {
        for (v, r) in y.terms() {
            let coeff = p.mul(r)?;
            for (w, s) in shuffle(&u, &v)?.terms() {
                out.add_term(&w, &coeff.mul(s)?)?;
            }
        }
    }
    Ok(out)
}

/// Lexicographically greatest word with nonzero coefficient.
pub fn max_word(s: &WordSeries) -> Result<Word> {
    s.terms().next().map(|(w, _)| w).ok_or(Error::EmptySeries)
}

/// The monoid law on dominant words computed from its definition:
/// the greatest word in the shuffle product.
pub fn odot_oracle(a: &Word, b: &Word) -> Result<Word> {
    for w in [a, b] {
        if !is_dominant(w) {
            return Err(Error::NotDominant(w.to_string()));
        }
    }
    max_word(&shuffle(a, b)?)
}

/// Character of the standard module of a dominant word: the shuffle product
/// of its canonical factors, shifted by `q^s` with `s = sum n_k (n_k - 1) / 2`
/// over factor multiplicities `n_k`.
pub fn delta_character(mu: &Word) -> Result<WordSeries> {
    if !is_dominant(mu) {
        return Err(Error::NotDominant(mu.to_string()));
    }
    let mut series = WordSeries::word(&Word::empty(mu.rank())?);
    let mut shift = 0i64;
    for (factor, mult) in canonical_factorization(mu).factors {
        let mult = mult as i64;
        shift += mult * (mult - 1) / 2;
        for _ in 0..mult {
            series = shuffle_series(&series, &WordSeries::word(&factor))?;
        }
    }
    series.shift(shift)
}
