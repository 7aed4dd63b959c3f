use std::collections::BTreeSet;

use klr_cluster::cluster::{mutate_matrix, ExchangeMatrix};
use klr_cluster::klr_seed::block_matrix;
use klr_cluster::laurent::{f_and_g, pointed_leading_exponent, verify_fpoly_identity, LaurentPolynomial, SymbolicSeed};
use proptest::prelude::*;

fn a2() -> ExchangeMatrix {
    ExchangeMatrix::new(2, vec![vec![0, 1], vec![-1, 0]]).unwrap()
}

fn reduced_sequences(n: usize, len: usize) -> Vec<Vec<usize>> {
    let mut out = vec![vec![]];
    let mut layer: Vec<Vec<usize>> = vec![vec![]];
    for _ in 0..len {
        let mut next = Vec::new();
        for s in &layer {
            for k in (1..=n).filter(|k| s.last() != Some(k)) {
                next.push([s.clone(), vec![k]].concat());
            }
        }
        out.extend(next.iter().cloned());
        layer = next;
    }
    out
}

#[test]
fn a2_has_five_clusters() {
    let mut clusters = BTreeSet::new();
    for seq in reduced_sequences(2, 8) {
        let seed = SymbolicSeed::initial(&a2()).mutate_along(&seq).unwrap();
        let mut vars: Vec<String> = seed.vars.iter().map(|v| v.to_string()).collect();
        vars.sort();
        clusters.insert(vars);
    }
    assert_eq!(clusters.len(), 5);
}

#[test]
fn identity_for_a2_up_to_length_five() {
    for seq in reduced_sequences(2, 5) {
        for check in verify_fpoly_identity(&a2(), &seq).unwrap() {
            assert!(check.holds(), "{seq:?}");
        }
    }
}

#[test]
fn a3_variables_are_pointed() {
    let b = block_matrix(3).unwrap();
    for seq in reduced_sequences(3, 4) {
        let seed = SymbolicSeed::initial(&b).mutate_along(&seq).unwrap();
        let data = f_and_g(&b, &seq).unwrap();
        for (l, d) in data.iter().enumerate() {
            // expected leading exponent: g + B a, frozen part shifted by -c
            let mut expected: Vec<i64> = d.g.clone();
            expected.extend(d.c.iter().map(|c| -c));
            for (j, &aj) in d.a.iter().enumerate() {
                for (slot, col) in expected.iter_mut().zip(b.column(j + 1).unwrap()) {
                    *slot += aj * col;
                }
            }
            let lead = pointed_leading_exponent(&b, &seed.vars[l]).unwrap();
            assert_eq!(lead, Some(expected), "{seq:?} variable {}", l + 1);
        }
    }
}

#[test]
fn mutated_matrix_travels_with_variables() {
    let b = block_matrix(3).unwrap();
    let seed = SymbolicSeed::initial(&b).mutate_along(&[2, 1, 3]).unwrap();
    let expected = [2, 1, 3].iter().fold(b.clone(), |m, &k| mutate_matrix(&m, k).unwrap());
    assert_eq!(seed.matrix, expected);
    for i in 3..6 {
        assert_eq!(seed.vars[i], LaurentPolynomial::variable(6, i));
    }
}

#[test]
fn bad_direction_is_rejected() {
    assert!(SymbolicSeed::initial(&a2()).mutate(3).is_err());
}

fn poly_strategy() -> impl Strategy<Value = LaurentPolynomial> {
    prop::collection::vec((prop::collection::vec(-2i64..=2, 3), -3i64..=3), 1..5).prop_map(|terms| {
        LaurentPolynomial::from_terms(3, &terms).unwrap()
    })
}

proptest! {
    #[test]
    fn product_divides_back(p in poly_strategy(), q in poly_strategy()) {
        prop_assume!(!p.is_zero() && !q.is_zero());
        let prod = p.mul(&q).unwrap();
        prop_assert_eq!(prod.div_exact(&q).unwrap(), p.clone());
        prop_assert_eq!(prod.div_exact(&p).unwrap(), q);
    }

    #[test]
    fn multiplication_distributes(p in poly_strategy(), q in poly_strategy(), r in poly_strategy()) {
        let left = p.mul(&q.add(&r).unwrap()).unwrap();
        let right = p.mul(&q).unwrap().add(&p.mul(&r).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }
}
