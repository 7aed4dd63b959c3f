//! End-to-end acceptance run. Prints one PASS/FAIL line per criterion and
//! exits nonzero if any criterion fails or exceeds its time budget.

use std::collections::BTreeMap;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use klr_cluster::cluster::{mutate_matrix, quiver_to_matrix, ExchangeMatrix};
use klr_cluster::hl::{build_c1_seed, verify_hl_compat, Coloring};
use klr_cluster::klr_seed::{block_matrix, build_quiver, initial_parameters, weight_pairings, ReducedWord};
use klr_cluster::laurent::{f_and_g, verify_fpoly_identity, SymbolicSeed};
use klr_cluster::mutation::{
    check_compatible, corollary_crosscheck, exchange_sums, explore, hat_mu, ParamSeed, Verdict,
};
use klr_cluster::shuffle::{delta_character, odot_oracle, QPolynomial};
use klr_cluster::words::{canonical_factorization, is_lyndon, root_count, RootOrder, RootVector, Word};

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn ok<T, E: std::fmt::Debug>(r: Result<T, E>) -> Result<T, String> {
    r.map_err(|e| format!("{e:?}"))
}

fn b0_rows() -> Vec<Vec<i64>> {
    vec![
        vec![0, 1, -1],
        vec![-1, 0, 1],
        vec![1, -1, 0],
        vec![0, -1, 0],
        vec![0, 1, -1],
        vec![0, 0, 1],
    ]
}

fn b1_rows() -> Vec<Vec<i64>> {
    vec![
        vec![0, -1, 1],
        vec![1, 0, 0],
        vec![-1, 0, 0],
        vec![0, -1, 0],
        vec![0, 1, -1],
        vec![0, 0, 1],
    ]
}

fn words_of(seed: &ParamSeed) -> Vec<String> {
    seed.words().into_iter().map(|w| w.map_or("?".into(), |w| w.to_string())).collect()
}

/// Every sequence over `1..=n` of length `<= len`, repeats allowed.
fn all_sequences(n: usize, len: usize) -> Vec<Vec<usize>> {
    let mut out = vec![vec![]];
    let mut layer = vec![vec![]];
    for _ in 0..len {
        let mut next = Vec::new();
        for s in &layer {
            for k in 1..=n {
                let mut t: Vec<usize> = s.clone();
                t.push(k);
                next.push(t);
            }
        }
        out.extend(next.iter().cloned());
        layer = next;
    }
    out
}

fn golden_a3() -> Outcome {
    let s0 = ok(ParamSeed::initial(3))?;
    let words = words_of(&s0);
    ensure(words == ["1", "12", "21", "123", "2312", "321"], || format!("words {words:?}"))?;
    ensure(s0.matrix.rows() == b0_rows(), || format!("B_0 {:?}", s0.matrix.rows()))?;
    for (k, expected) in [(1, "2"), (2, "231"), (3, "312")] {
        let got = words_of(&ok(s0.mutate(k))?)[k - 1].clone();
        ensure(got == expected, || format!("direction {k}: {got} != {expected}"))?;
    }
    let b1 = ok(mutate_matrix(&s0.matrix, 1))?;
    ensure(b1.rows() == b1_rows(), || format!("B_1 {:?}", b1.rows()))?;
    Ok("words, B_0, B_1 and the three mutated words match".into())
}

fn compatibility() -> Outcome {
    let s0 = ok(ParamSeed::initial(3))?;
    ensure(ok(check_compatible(&s0))? == Verdict::Increasing, || "S_0^3 not increasing".into())?;
    let s1 = ok(s0.mutate(1))?;
    ensure(ok(check_compatible(&s1))? == Verdict::NotCompatible, || "mutated seed compatible".into())?;

    // defining formula, computed directly on coordinates
    let mut notes = Vec::new();
    let printed: [&[i64]; 3] = [&[0, 0, 1, 0, 1, 1], &[0, 1, -1, 1, 1, 0], &[1, -1, 1, 0, 0, 0]];
    for j in 1..=3 {
        let mut expected = vec![0i64; 6];
        for (i, param) in s0.params.iter().enumerate() {
            for (slot, &c) in expected.iter_mut().zip(param.coords()) {
                *slot += b0_rows()[i][j - 1] * c;
            }
        }
        let got = ok(hat_mu(&s0, j))?;
        ensure(got.coords() == expected, || format!("ĥμ_{j} = {got}"))?;
        let differing: Vec<usize> =
            (0..6).filter(|&c| expected[c] != printed[j - 1][c]).map(|c| c + 1).collect();
        if !differing.is_empty() {
            notes.push(format!("ĥμ_{j}={got} differs from printed value at coordinate(s) {differing:?}"));
        }
    }
    for n in 2..=8 {
        let seed = ok(ParamSeed::initial(n))?;
        let verdict = ok(check_compatible(&seed))?;
        ensure(verdict == Verdict::Increasing, || format!("S_0^{n} is {verdict}"))?;
    }
    Ok(format!("S_0^2..S_0^8 increasing; {}", notes.join("; ")))
}

/// Dominant words as root-multiplicity vectors with total length `<= max_len`.
fn dominant_vectors(rank: usize, max_len: usize) -> Vec<RootVector> {
    let order = RootOrder::new(rank).unwrap();
    let lengths: Vec<usize> = order.roots().iter().map(Word::len).collect();
    let mut out = Vec::new();
    let mut coords = vec![0i64; lengths.len()];
    fn rec(i: usize, budget: usize, lengths: &[usize], coords: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        if i == lengths.len() {
            out.push(coords.clone());
            return;
        }
        let mut used = 0;
        loop {
            coords[i] = (used / lengths[i]) as i64;
            rec(i + 1, budget - used, lengths, coords, out);
            if used + lengths[i] > budget {
                break;
            }
            used += lengths[i];
        }
        coords[i] = 0;
    }
    let mut raw = Vec::new();
    rec(0, max_len, &lengths, &mut coords, &mut raw);
    for c in raw {
        out.push(RootVector::new(rank, c).unwrap());
    }
    out
}

fn monoid_oracle() -> Outcome {
    let mut pairs = 0usize;
    for (rank, max_total) in [(3, 8), (4, 7)] {
        let order = ok(RootOrder::new(rank))?;
        let vectors = dominant_vectors(rank, max_total);
        let words: Vec<Word> = vectors.iter().map(|v| order.vector_to_word(v).unwrap()).collect();
        for (va, wa) in vectors.iter().zip(&words) {
            for (vb, wb) in vectors.iter().zip(&words) {
                if wa.len() + wb.len() > max_total {
                    continue;
                }
                let by_vector = ok(order.vector_to_word(&ok(va.add(vb))?))?;
                let by_shuffle = ok(odot_oracle(wa, wb))?;
                ensure(by_vector == by_shuffle, || format!("rank {rank}: {wa} ⊙ {wb}: {by_vector} vs {by_shuffle}"))?;
                pairs += 1;
            }
        }
    }
    Ok(format!("{pairs} ordered pairs agree"))
}

fn seed_construction() -> Outcome {
    for n in 1..=8 {
        let from_quiver = ok(quiver_to_matrix(&ok(build_quiver(n))?, root_count(n - 1)))?;
        let blocks = ok(block_matrix(n))?;
        ensure(from_quiver == blocks, || format!("rank {n}: quiver and block matrices differ"))?;

        let frozen = ReducedWord::new(n).unwrap().plus_minus().frozen();
        let expected: Vec<usize> = (root_count(n - 1) + 1..=root_count(n)).collect();
        ensure(frozen == expected, || format!("rank {n}: frozen {frozen:?}"))?;

        let words = ok(initial_parameters(n))?;
        if n >= 2 {
            let smaller: Vec<Word> =
                ok(initial_parameters(n - 1))?.iter().map(|w| w.embed(n).unwrap()).collect();
            ensure(words[..root_count(n - 1)] == smaller[..], || format!("rank {n}: nesting fails"))?;
        }
        for k in 1..=n {
            let w = &words[root_count(n - 1) + k - 1];
            // trapezoid weight: ramp 1, 2, ..., plateau at min(k, n+1-k), ramp down
            let width = k.min(n + 1 - k);
            let trapezoid: Vec<usize> = (1..=n)
                .map(|i| if i <= width { i } else if i > n - width { n + 1 - i } else { width })
                .collect();
            ensure(w.content() == trapezoid, || format!("rank {n} frozen {k}: content {:?}", w.content()))?;

            let mut pairing = vec![0i64; n];
            pairing[k - 1] += 1;
            pairing[n - k] += 1;
            let got = weight_pairings(w);
            ensure(got == pairing, || format!("rank {n} frozen {k}: pairings {got:?}"))?;
            ensure(canonical_factorization(w).total_multiplicity() == k, || format!("{w}: factor count"))?;
        }
    }
    Ok("ranks 1..8: matrices, frozen sets, nesting, contents and pairings agree".into())
}

/// Constant term 1 and a coefficient-1 monomial divisible by all others.
fn f_polynomial_shape(f: &klr_cluster::laurent::LaurentPolynomial) -> bool {
    let n = f.nvars();
    let exps: Vec<&Vec<i64>> = f.terms().map(|(e, _)| e).collect();
    let top: Vec<&Vec<i64>> = exps
        .iter()
        .copied()
        .filter(|e| exps.iter().all(|o| o.iter().zip(e.iter()).all(|(x, y)| x <= y)))
        .collect();
    f.coeff(&vec![0; n]) == 1 && top.len() == 1 && f.coeff(top[0]) == 1
}

fn cluster_identities() -> Outcome {
    let a2 = ok(ExchangeMatrix::new(2, vec![vec![0, 1], vec![-1, 0]]))?;
    let b0 = ok(ExchangeMatrix::new(3, b0_rows()))?;
    let mut checked = 0usize;
    for (matrix, len) in [(&a2, 6), (&b0, 4)] {
        for seq in all_sequences(matrix.n(), len) {
            ok(SymbolicSeed::initial(matrix).mutate_along(&seq))?;
            for (l, data) in ok(f_and_g(matrix, &seq))?.iter().enumerate() {
                ensure(f_polynomial_shape(&data.f), || format!("{seq:?} variable {}: F = {}", l + 1, data.f))?;
            }
            for check in ok(verify_fpoly_identity(matrix, &seq))? {
                ensure(check.holds(), || {
                    format!("{seq:?} variable {}: {} vs {}", check.variable, check.mutated, check.predicted)
                })?;
                checked += 1;
            }
        }
    }
    Ok(format!("{checked} variable expansions verified"))
}

fn parameter_formula() -> Outcome {
    let mut checked = 0usize;
    for (rank, len) in [(3, 3), (2, 4)] {
        let seed = ok(ParamSeed::initial(rank))?;
        for seq in all_sequences(seed.matrix.n(), len) {
            for l in 1..=seed.matrix.n() {
                let report = ok(corollary_crosscheck(&seed, &seq, l))?;
                ensure(report.holds(), || {
                    format!("rank {rank} {seq:?} l={l}: {} vs {}", report.mutated, report.predicted)
                })?;
                checked += 1;
            }
        }
    }
    Ok(format!("{checked} (sequence, variable) pairs agree"))
}

fn hernandez_leclerc() -> Outcome {
    for n in 1..=6 {
        for coloring in Coloring::BOTH {
            let seed = ok(build_c1_seed(n, coloring))?;
            for check in ok(verify_hl_compat(&seed))? {
                // A_{j,p}^{-1} written out directly
                let j = check.node;
                let p = seed.xi[j - 1] as i64 + 1;
                let mut expected = BTreeMap::new();
                expected.insert((j, p + 1), -1);
                expected.insert((j, p - 1), -1);
                for adj in [j.wrapping_sub(1), j + 1] {
                    if (1..=n).contains(&adj) {
                        expected.insert((adj, p), 1);
                    }
                }
                let got: BTreeMap<_, _> = check.yhat.exponents().collect();
                ensure(got == expected, || format!("A_{n} ξ_1={} node {j}: ŷ = {}", coloring.first, check.yhat))?;
            }
        }
    }
    Ok("A_1..A_6, both colourings".into())
}

fn properties() -> Outcome {
    // matrix and parameter involutivity, frozen invariance, weight conservation
    let s0 = ok(ParamSeed::initial(3))?;
    let order = ok(RootOrder::new(3))?;
    let explored = ok(explore(&s0, 4))?;
    for e in &explored {
        let seed = &e.seed;
        for k in 1..=seed.matrix.n() {
            let once = ok(seed.mutate(k))?;
            let twice = ok(once.mutate(k))?;
            ensure(&twice == seed, || format!("{:?} then {k} twice", e.sequence))?;
            ensure(once.params[seed.matrix.n()..] == seed.params[seed.matrix.n()..], || "frozen changed".into())?;
            let (pos, neg) = ok(exchange_sums(seed, k))?;
            let pos_c = ok(order.content(&pos))?;
            let neg_c = ok(order.content(&neg))?;
            let pair_c = ok(order.content(&ok(seed.params[k - 1].add(&once.params[k - 1]))?))?;
            ensure(pos_c == neg_c && neg_c == pair_c, || format!("{:?} dir {k}: weights differ", e.sequence))?;
        }
    }
    let mut state = 0x2545_f491_u64;
    let mut next = move || {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        state
    };
    for _ in 0..300 {
        let n = (next() % 4 + 1) as usize;
        let m = n + (next() % 3) as usize;
        let mut rows = vec![vec![0i64; n]; m];
        for i in 0..m {
            for j in 0..n {
                if i < n && j <= i {
                    continue;
                }
                let v = (next() % 7) as i64 - 3;
                rows[i][j] = v;
                if i < n {
                    rows[j][i] = -v;
                }
            }
        }
        let b = ok(ExchangeMatrix::new(n, rows))?;
        for k in 1..=n {
            ensure(ok(mutate_matrix(&ok(mutate_matrix(&b, k))?, k))? == b, || format!("{b:?} at {k}"))?;
        }
    }

    // factorization round trips on every word of length <= 8 in rank 3
    let mut words = vec![vec![]];
    let mut layer: Vec<Vec<usize>> = vec![vec![]];
    for _ in 0..8 {
        layer = layer
            .iter()
            .flat_map(|w| (1..=3).map(move |l| [w.clone(), vec![l]].concat()))
            .collect();
        words.extend(layer.iter().cloned());
    }
    for letters in words {
        let w = Word::new(3, letters).unwrap();
        let f = canonical_factorization(&w);
        ensure(f.expand() == w, || format!("{w} does not expand back"))?;
        for pair in f.factors.windows(2) {
            ensure(pair[0].0.letters() > pair[1].0.letters(), || format!("{w}: factors not decreasing"))?;
        }
        for (factor, _) in &f.factors {
            ensure(ok(is_lyndon(factor))?, || format!("{w}: {factor} not Lyndon"))?;
        }
        if w.is_dominant() {
            ensure(ok(order.vector_to_word(&ok(order.word_to_vector(&w))?))? == w, || format!("{w} round trip"))?;
        }
    }

    let delta = ok(delta_character(&Word::parse(1, "11").unwrap()))?;
    let expected = ok(QPolynomial::from_terms(&[(1, 1), (-1, 1)]))?;
    ensure(delta.len() == 1 && delta.coeff(&Word::parse(1, "11").unwrap()) == expected, || {
        format!("Δ(11) = {delta}")
    })?;
    Ok(format!("{} seeds to depth 4, 300 random matrices, all words of length <= 8", explored.len()))
}

fn main() -> ExitCode {
    type Criterion = (&'static str, u64, fn() -> Outcome);
    let criteria: [Criterion; 8] = [
        ("A_3 golden reproduction", 1, golden_a3),
        ("compatibility verdicts", 10, compatibility),
        ("monoid oracle equivalence", 120, monoid_oracle),
        ("seed construction cross-validation", 5, seed_construction),
        ("cluster identity suite", 120, cluster_identities),
        ("parameter formula via g-vectors", 60, parameter_formula),
        ("Hernandez-Leclerc identity", 1, hernandez_leclerc),
        ("property suites", 30, properties),
    ];
    let mut failed = 0;
    for (i, (name, budget, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let result = catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|_| Err("panicked".into()));
        let elapsed = start.elapsed();
        let result = match result {
            Ok(_) if elapsed > Duration::from_secs(*budget) => {
                Err(format!("took {:.2}s, budget {budget}s", elapsed.as_secs_f64()))
            }
            other => other,
        };
        match result {
            Ok(detail) => println!("PASS [{}] {name} ({:.3}s): {detail}", i + 1, elapsed.as_secs_f64()),
            Err(detail) => {
                failed += 1;
                println!("FAIL [{}] {name} ({:.3}s): {detail}", i + 1, elapsed.as_secs_f64());
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
