//! Sparse Laurent polynomials with integer coefficients, symbolic seed
//! mutation, and extraction of F-polynomials and g-vectors through
//! principal coefficients.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;

use serde_json::{json, Value};

use crate::cluster::{dominance_compare, mutate_matrix, Dominance, ExchangeMatrix};
use crate::error::{Error, Result};

/// Laurent polynomial in `nvars` variables; monomials are keyed by their
/// full exponent vector and ordered lexicographically.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LaurentPolynomial {
    nvars: usize,
    terms: BTreeMap<Vec<i64>, i64>,
}

fn add_exps(a: &[i64], b: &[i64]) -> Result<Vec<i64>> {
    a.iter()
        .zip(b)
        .map(|(&x, &y)| x.checked_add(y).ok_or(Error::Overflow("Laurent exponent")))
        .collect()
}

fn sub_exps(a: &[i64], b: &[i64]) -> Result<Vec<i64>> {
    a.iter()
        .zip(b)
        .map(|(&x, &y)| x.checked_sub(y).ok_or(Error::Overflow("Laurent exponent")))
        .collect()
}

impl LaurentPolynomial {
    pub fn zero(nvars: usize) -> Self {
        LaurentPolynomial { nvars, terms: BTreeMap::new() }
    }

    pub fn constant(nvars: usize, c: i64) -> Self {
        LaurentPolynomial::monomial(vec![0; nvars], c)
    }

    pub fn one(nvars: usize) -> Self {
        LaurentPolynomial::constant(nvars, 1)
    }

    pub fn monomial(exps: Vec<i64>, coeff: i64) -> Self {
        let mut p = LaurentPolynomial::zero(exps.len());
        if coeff != 0 {
            p.terms.insert(exps, coeff);
        }
        p
    }

    /// The variable `x_{i+1}` (0-based `i`).
    pub fn variable(nvars: usize, i: usize) -> Self {
        let mut exps = vec![0; nvars];
        exps[i] = 1;
        LaurentPolynomial::monomial(exps, 1)
    }

    pub fn from_terms(nvars: usize, terms: &[(Vec<i64>, i64)]) -> Result<Self> {
        let mut p = LaurentPolynomial::zero(nvars);
        for (e, c) in terms {
            p.check_len(e.len())?;
            p.add_term(e.clone(), *c)?;
        }
        Ok(p)
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, exps: &[i64]) -> i64 {
        self.terms.get(exps).copied().unwrap_or(0)
    }

    /// Terms in increasing lexicographic order of exponents.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Vec<i64>, i64)> + '_ {
        self.terms.iter().map(|(e, &c)| (e, c))
    }

    pub fn as_monomial(&self) -> Option<(&Vec<i64>, i64)> {
        if self.terms.len() == 1 {
            self.terms().next()
        } else {
            None
        }
    }

    fn check_len(&self, len: usize) -> Result<()> {
        if len != self.nvars {
            return Err(Error::LengthMismatch { left: self.nvars, right: len });
        }
        Ok(())
    }

    fn add_term(&mut self, exps: Vec<i64>, coeff: i64) -> Result<()> {
        if coeff == 0 {
            return Ok(());
        }
        match self.terms.entry(exps) {
            Entry::Vacant(slot) => {
                slot.insert(coeff);
            }
            Entry::Occupied(mut slot) => {
                let sum = slot.get().checked_add(coeff).ok_or(Error::Overflow("Laurent coefficient"))?;
                if sum == 0 {
                    slot.remove();
                } else {
                    *slot.get_mut() = sum;
                }
            }
        }
        Ok(())
    }

    pub fn add(&self, other: &LaurentPolynomial) -> Result<LaurentPolynomial> {
        self.check_len(other.nvars)?;
        let mut out = self.clone();
        for (e, c) in other.terms() {
            out.add_term(e.clone(), c)?;
        }
        Ok(out)
    }

    pub fn sub(&self, other: &LaurentPolynomial) -> Result<LaurentPolynomial> {
        self.add(&other.scale(-1)?)
    }

    pub fn scale(&self, factor: i64) -> Result<LaurentPolynomial> {
        let mut out = LaurentPolynomial::zero(self.nvars);
        for (e, c) in self.terms() {
            let c = c.checked_mul(factor).ok_or(Error::Overflow("Laurent coefficient"))?;
            out.add_term(e.clone(), c)?;
        }
        Ok(out)
    }

    pub fn mul(&self, other: &LaurentPolynomial) -> Result<LaurentPolynomial> {
        self.check_len(other.nvars)?;
        let mut out = LaurentPolynomial::zero(self.nvars);
        for (e1, c1) in self.terms() {
            for (e2, c2) in other.terms() {
                let c = c1.checked_mul(c2).ok_or(Error::Overflow("Laurent coefficient"))?;
                out.add_term(add_exps(e1, e2)?, c)?;
            }
        }
        Ok(out)
    }

    pub fn mul_monomial(&self, exps: &[i64]) -> Result<LaurentPolynomial> {
        self.check_len(exps.len())?;
        let mut out = LaurentPolynomial::zero(self.nvars);
        for (e, c) in self.terms() {
            out.terms.insert(add_exps(e, exps)?, c);
        }
        Ok(out)
    }

    pub fn pow(&self, exp: u32) -> Result<LaurentPolynomial> {
        let mut out = LaurentPolynomial::one(self.nvars);
        for _ in 0..exp {
            out = out.mul(self)?;
        }
        Ok(out)
    }

    /// Exact quotient `self / den`.
    ///
    /// Runs lexicographic long division. In a Laurent ring the leading-term
    /// order is not a well-order, so every quotient term is confined to the
    /// box `[min(self) - min(den), max(self) - max(den)]` (per variable),
    /// which any exact quotient must respect; leaving it means the division
    /// is not exact.
    pub fn div_exact(&self, den: &LaurentPolynomial) -> Result<LaurentPolynomial> {
        self.check_len(den.nvars)?;
        let Some((den_lead, den_coeff)) = den.terms().next_back() else {
            return Err(Error::InexactDivision("division by zero".into()));
        };
        let mut quotient = LaurentPolynomial::zero(self.nvars);
        if self.is_zero() {
            return Ok(quotient);
        }
        let (num_lo, num_hi) = self.degree_bounds();
        let (den_lo, den_hi) = den.degree_bounds();
        let lo = sub_exps(&num_lo, &den_lo)?;
        let hi = sub_exps(&num_hi, &den_hi)?;

        let mut remainder = self.clone();
        loop {
            let Some((lead, coeff)) = remainder.terms().next_back().map(|(e, c)| (e.clone(), c)) else {
                break;
            };
            if coeff % den_coeff != 0 {
                return Err(Error::InexactDivision(format!("coefficient {coeff} not divisible by {den_coeff}")));
            }
            let q_exps = sub_exps(&lead, den_lead)?;
            let inside = q_exps.iter().zip(lo.iter().zip(&hi)).all(|(e, (l, h))| l <= e && e <= h);
            if !inside {
                return Err(Error::InexactDivision(format!(
                    "{} does not divide {}",
                    den.render("x"),
                    self.render("x")
                )));
            }
            let q_coeff = coeff / den_coeff;
            for (e, c) in den.terms() {
                let c = c.checked_mul(q_coeff).ok_or(Error::Overflow("Laurent coefficient"))?;
                remainder.add_term(add_exps(e, &q_exps)?, -c)?;
            }
            quotient.add_term(q_exps, q_coeff)?;
        }
        Ok(quotient)
    }

    /// Per-variable minimum and maximum exponents over the support.
    pub fn degree_bounds(&self) -> (Vec<i64>, Vec<i64>) {
        let mut lo = vec![i64::MAX; self.nvars];
        let mut hi = vec![i64::MIN; self.nvars];
        for e in self.terms.keys() {
            for (i, &x) in e.iter().enumerate() {
                lo[i] = lo[i].min(x);
                hi[i] = hi[i].max(x);
            }
        }
        (lo, hi)
    }

    /// Replaces variable `i` by the monomial `images[i]` (exponents in the
    /// target ring).
    pub fn substitute_monomials(&self, images: &[Vec<i64>], target_nvars: usize) -> Result<LaurentPolynomial> {
        self.check_len(images.len())?;
        let mut out = LaurentPolynomial::zero(target_nvars);
        for (e, c) in self.terms() {
            let mut exps = vec![0i64; target_nvars];
            for (&power, image) in e.iter().zip(images) {
                if image.len() != target_nvars {
                    return Err(Error::LengthMismatch { left: image.len(), right: target_nvars });
                }
                for (slot, &x) in exps.iter_mut().zip(image) {
                    let inc = power.checked_mul(x).ok_or(Error::Overflow("Laurent exponent"))?;
                    *slot = slot.checked_add(inc).ok_or(Error::Overflow("Laurent exponent"))?;
                }
            }
            out.add_term(exps, c)?;
        }
        Ok(out)
    }

    /// Sets every variable outside `keep` to 1; the result has the kept
    /// variables in the given order.
    pub fn specialize_to(&self, keep: &[usize]) -> Result<LaurentPolynomial> {
        let mut out = LaurentPolynomial::zero(keep.len());
        for (e, c) in self.terms() {
            out.add_term(keep.iter().map(|&i| e[i]).collect(), c)?;
        }
        Ok(out)
    }

    /// Renders e.g. `x1^-1*x2 + x1^-1*x3`, terms in decreasing exponent order.
    pub fn render(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (i, (e, c)) in self.terms().rev().enumerate() {
            let factors: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, &x)| x != 0)
                .map(|(v, &x)| if x == 1 { format!("{var}{}", v + 1) } else { format!("{var}{}^{x}", v + 1) })
                .collect();
            let sign = match (i == 0, c < 0) {
                (true, true) => "-",
                (true, false) => "",
                (false, true) => " - ",
                (false, false) => " + ",
            };
            out.push_str(sign);
            let magnitude = c.unsigned_abs();
            if factors.is_empty() {
                out.push_str(&magnitude.to_string());
            } else {
                if magnitude != 1 {
                    out.push_str(&format!("{magnitude}*"));
                }
                out.push_str(&factors.join("*"));
            }
        }
        out
    }

    /// `[[exponents, coefficient], ...]` in increasing exponent order.
    pub fn to_json(&self) -> Value {
        Value::Array(self.terms().map(|(e, c)| json!([e, c])).collect())
    }
}

impl fmt::Display for LaurentPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render("x"))
    }
}

/// An exchange matrix with its cluster variables written in the initial ones.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymbolicSeed {
    pub matrix: ExchangeMatrix,
    pub vars: Vec<LaurentPolynomial>,
}

impl SymbolicSeed {
    pub fn initial(matrix: &ExchangeMatrix) -> Self {
        let m = matrix.m();
        let vars = (0..m).map(|i| LaurentPolynomial::variable(m, i)).collect();
        SymbolicSeed { matrix: matrix.clone(), vars }
    }

    pub fn mutate(&self, k: usize) -> Result<SymbolicSeed> {
        mutate_symbolic(self, k)
    }

    pub fn mutate_along(&self, sequence: &[usize]) -> Result<SymbolicSeed> {
        sequence.iter().try_fold(self.clone(), |seed, &k| seed.mutate(k))
    }
}

/// Exchange relation in direction `k`; the division by the old variable is
/// required to be exact.
pub fn mutate_symbolic(seed: &SymbolicSeed, k: usize) -> Result<SymbolicSeed> {
    seed.matrix.check_direction(k)?;
    let nvars = seed.vars[0].nvars();
    let mut positive = LaurentPolynomial::one(nvars);
    let mut negative = LaurentPolynomial::one(nvars);
    for (l, var) in seed.vars.iter().enumerate() {
        let b = seed.matrix.entry(l + 1, k);
        let power = u32::try_from(b.unsigned_abs()).map_err(|_| Error::Overflow("exchange exponent"))?;
        if b > 0 {
            positive = positive.mul(&var.pow(power)?)?;
        } else if b < 0 {
            negative = negative.mul(&var.pow(power)?)?;
        }
    }
    let numerator = positive.add(&negative)?;
    let mut vars = seed.vars.clone();
    vars[k - 1] = numerator.div_exact(&seed.vars[k - 1])?;
    Ok(SymbolicSeed { matrix: mutate_matrix(&seed.matrix, k)?, vars })
}

/// F-polynomial, g-vector, exponent of the maximal F-monomial, and the
/// tropical denominator exponents of one cluster variable.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FData {
    pub f: LaurentPolynomial,
    pub g: Vec<i64>,
    pub a: Vec<i64>,
    pub c: Vec<i64>,
}

impl FData {
    pub fn to_json(&self) -> Value {
        json!({
            "F": self.f.render("X"),
            "g": self.g,
            "a": self.a,
            "c": self.c,
        })
    }
}

/// `FData` for every exchangeable variable after mutating along `sequence`.
///
/// Mutation runs in the principal-coefficient seed `[B°; I]`. The F-polynomial
/// is the result of setting the initial cluster variables to 1, and the
/// g-vector is the common degree of all terms with `deg x_i = e_i` and
/// `deg y_j = -(column j of B°)`. The c-exponents evaluate `F` in the
/// tropical semifield of the frozen variables of `B`.
pub fn f_and_g(matrix: &ExchangeMatrix, sequence: &[usize]) -> Result<Vec<FData>> {
    let n = matrix.n();
    let principal = matrix.principal_coefficients();
    let seed = SymbolicSeed::initial(&principal).mutate_along(sequence)?;
    let coeff_indices: Vec<usize> = (n..2 * n).collect();
    (0..n)
        .map(|l| {
            let var = &seed.vars[l];
            let f = var.specialize_to(&coeff_indices)?;
            let g = homogeneous_degree(var, matrix)?;
            let a = check_f_polynomial(&f)?;
            let c = tropical_denominator(&f, matrix)?;
            Ok(FData { f, g, a, c })
        })
        .collect()
}

fn homogeneous_degree(var: &LaurentPolynomial, matrix: &ExchangeMatrix) -> Result<Vec<i64>> {
    let n = matrix.n();
    let mut degree: Option<Vec<i64>> = None;
    for (e, _) in var.terms() {
        let mut d = e[..n].to_vec();
        for j in 0..n {
            for (i, slot) in d.iter_mut().enumerate() {
                *slot -= e[n + j] * matrix.entry(i + 1, j + 1);
            }
        }
        match &degree {
            None => degree = Some(d),
            Some(prev) if *prev != d => {
                return Err(Error::BadFPolynomial(format!("principal-coefficient variable {var} is not homogeneous")))
            }
            Some(_) => {}
        }
    }
    degree.ok_or_else(|| Error::BadFPolynomial("zero cluster variable".into()))
}

/// Checks constant term 1 and returns the exponent of the unique monomial
/// divisible by every other one, which must have coefficient 1.
fn check_f_polynomial(f: &LaurentPolynomial) -> Result<Vec<i64>> {
    let n = f.nvars();
    if f.coeff(&vec![0; n]) != 1 {
        return Err(Error::BadFPolynomial(format!("constant term of {} is not 1", f.render("X"))));
    }
    let (lo, hi) = f.degree_bounds();
    if lo.iter().any(|&x| x < 0) {
        return Err(Error::BadFPolynomial(format!("{} has negative exponents", f.render("X"))));
    }
    if f.coeff(&hi) != 1 {
        return Err(Error::BadFPolynomial(format!(
            "{} has no coefficient-1 monomial divisible by all others",
            f.render("X")
        )));
    }
    Ok(hi)
}

/// `c_i = min over monomials X^e of F of sum_j e_j b_{n+i, j}`.
fn tropical_denominator(f: &LaurentPolynomial, matrix: &ExchangeMatrix) -> Result<Vec<i64>> {
    let n = matrix.n();
    let frozen = matrix.m() - n;
    let mut c = vec![i64::MAX; frozen];
    for (e, _) in f.terms() {
        for (i, slot) in c.iter_mut().enumerate() {
            let row = &matrix.rows()[n + i];
            let value = e.iter().zip(row).map(|(x, b)| x * b).sum::<i64>();
            *slot = (*slot).min(value);
        }
    }
    Ok(c)
}

/// Result of checking the separation-of-additions formula for one variable.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentityCheck {
    pub variable: usize,
    pub mutated: LaurentPolynomial,
    pub predicted: LaurentPolynomial,
}

impl IdentityCheck {
    pub fn holds(&self) -> bool {
        self.mutated == self.predicted
    }
}

/// Rebuilds each exchangeable variable as `F(ŷ) · x^g · x_frozen^{-c}` and
/// compares it with the symbolically mutated variable.
pub fn verify_fpoly_identity(matrix: &ExchangeMatrix, sequence: &[usize]) -> Result<Vec<IdentityCheck>> {
    let m = matrix.m();
    let n = matrix.n();
    let seed = SymbolicSeed::initial(matrix).mutate_along(sequence)?;
    let yhat: Vec<Vec<i64>> = (1..=n).map(|j| matrix.column(j)).collect::<Result<_>>()?;
    let data = f_and_g(matrix, sequence)?;
    data.iter()
        .enumerate()
        .map(|(l, d)| {
            let mut shift = d.g.clone();
            shift.extend(d.c.iter().map(|c| -c));
            let predicted = d.f.substitute_monomials(&yhat, m)?.mul_monomial(&shift)?;
            Ok(IdentityCheck { variable: l + 1, mutated: seed.vars[l].clone(), predicted })
        })
        .collect()
}

/// The monomial of `poly` that is maximal in the dominance order, if it is
/// unique and has coefficient 1.
pub fn pointed_leading_exponent(matrix: &ExchangeMatrix, poly: &LaurentPolynomial) -> Result<Option<Vec<i64>>> {
    let exps: Vec<&Vec<i64>> = poly.terms().map(|(e, _)| e).collect();
    let mut maximal = Vec::new();
    'outer: for &candidate in &exps {
        for &other in &exps {
            if dominance_compare(matrix, candidate, other)? == Dominance::Less {
                continue 'outer;
            }
        }
        maximal.push(candidate);
    }
    Ok(match maximal.as_slice() {
        [only] if poly.coeff(only) == 1 => Some((*only).clone()),
        _ => None,
    })
}
