//! Acceptance suite: one test per release criterion, each printing a
//! pass/fail line (run with `--nocapture` to see them).
//!
//! Every expected value here is either a hand-checked constant or computed
//! by an independent route inside the test (exhaustive enumeration or the
//! subgroup-lattice oracle), never by the code path under test.

use std::collections::BTreeSet;
use std::panic::UnwindSafe;
use std::time::{Duration, Instant};

use chaincount::bijection::{ballot_endpoint_for, phi, theta};
use chaincount::chains::{
    ballot_form, chain_polynomial, closed_form_two_factor, expected_degree, maximal_subgroup_count,
    nilpotent_chain_count, ChainCounter, ExponentTuple, NilpotentSpec,
};
use chaincount::exactmath::{multinomial, BigNat};
use chaincount::group_oracle::{build_lattice, AbelianGroupSpec, DEFAULT_ORACLE_BOUND};
use chaincount::weights::{
    upper_arch_count, weight_of_path_set, word_weight_exponent, word_weight_via_decomposition,
};
use chaincount::words::{enumerate_ballot, enumerate_paths, LatticePoint, Symbol, Word};

fn criterion(name: &str, budget: Option<Duration>, body: impl FnOnce() + UnwindSafe) {
    let start = Instant::now();
    let outcome = std::panic::catch_unwind(body);
    let elapsed = start.elapsed();
    let within_budget = budget.map_or(true, |b| elapsed <= b);
    let status = if outcome.is_ok() && within_budget {
        "PASS"
    } else {
        "FAIL"
    };
    match budget {
        Some(b) => println!("[acceptance] {name}: {status} ({elapsed:.2?}, budget {b:.0?})"),
        None => println!("[acceptance] {name}: {status} ({elapsed:.2?})"),
    }
    if let Err(payload) = outcome {
        std::panic::resume_unwind(payload);
    }
    if let Some(b) = budget {
        assert!(
            elapsed <= b,
            "{name} exceeded its budget: {elapsed:?} > {b:?}"
        );
    }
}

fn nat(n: u64) -> BigNat {
    BigNat::from(n)
}

fn all_words_up_to(max_len: usize) -> Vec<Word> {
    let mut out = Vec::new();
    for len in 0..=max_len {
        for mask in 0u32..(1 << len) {
            let symbols = (0..len)
                .map(|i| {
                    if mask >> i & 1 == 1 {
                        Symbol::N
                    } else {
                        Symbol::E
                    }
                })
                .collect();
            out.push(Word::new(symbols));
        }
    }
    out
}

/// Sorted tuples with 1..=max_len entries summing to at most max_sum.
fn sorted_tuples(max_len: usize, max_sum: u32) -> Vec<Vec<u32>> {
    fn rec(min: u32, left: u32, slots: usize, scratch: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if !scratch.is_empty() {
            out.push(scratch.clone());
        }
        if slots == 0 {
            return;
        }
        for entry in min..=left {
            scratch.push(entry);
            rec(entry, left - entry, slots - 1, scratch, out);
            scratch.pop();
        }
    }
    let mut out = Vec::new();
    rec(1, max_sum, max_len, &mut Vec::new(), &mut out);
    out
}

#[test]
fn criterion_1_recurrence_equals_closed_form() {
    criterion(
        "criterion 1 (recurrence = closed form, 55 pairs up to (10,10))",
        Some(Duration::from_secs(1)),
        || {
            let mut counter = ChainCounter::new();
            let mut cases = 0;
            for a1 in 1..=10u32 {
                for a2 in a1..=10 {
                    let tuple = ExponentTuple::new(vec![a1, a2]).unwrap();
                    assert_eq!(
                        counter.polynomial(&tuple),
                        closed_form_two_factor(a1, a2).unwrap(),
                        "coefficient mismatch at ({a1}, {a2})"
                    );
                    cases += 1;
                }
            }
            assert_eq!(cases, 55);
        },
    );
}

#[test]
fn criterion_2_ballot_form_equals_enumeration() {
    criterion(
        "criterion 2 (ballot form = exhaustive path weights, x+y <= 12)",
        Some(Duration::from_secs(30)),
        || {
            for x in 0..=12usize {
                for y in 0..=(12 - x) {
                    assert_eq!(
                        ballot_form(x, y),
                        weight_of_path_set(x, y).unwrap(),
                        "mismatch at ({x}, {y})"
                    );
                }
            }
        },
    );
}

#[test]
fn criterion_3_bijection_round_trip_and_image() {
    criterion(
        "criterion 3 (theta . phi = id, phi injective, |C_k| = |B|, x+y <= 10)",
        Some(Duration::from_secs(30)),
        || {
            for total in 0..=10usize {
                for x in 0..=total {
                    let y = total - x;
                    let source = LatticePoint { x, y };
                    let paths = enumerate_paths(x, y).unwrap();
                    for k in 0..=x.min(y) {
                        let class: Vec<&Word> =
                            paths.iter().filter(|w| upper_arch_count(w) == k).collect();
                        let mut images = BTreeSet::new();
                        for w in &class {
                            let image = phi(w);
                            assert_eq!(
                                theta(&image, source, k).unwrap(),
                                **w,
                                "round trip fails on {w:?}"
                            );
                            images.insert(image);
                        }
                        assert_eq!(
                            images.len(),
                            class.len(),
                            "phi not injective at ({x},{y},{k})"
                        );
                        let target = ballot_endpoint_for(source, k).unwrap();
                        let ballots = enumerate_ballot(target.x, target.y).unwrap();
                        assert_eq!(
                            class.len(),
                            ballots.len(),
                            "|C_{k}({x},{y})| != |B({}, {})|",
                            target.x,
                            target.y
                        );
                    }
                }
            }
        },
    );
}

#[test]
fn criterion_4_oracle_matches_polynomials() {
    let cases: &[(&[u64], u64, &[u32], u64)] = &[
        (&[2, 2], 2, &[1, 1], 3),
        (&[2, 4], 2, &[1, 2], 5),
        (&[4, 4], 2, &[2, 2], 15),
        (&[3, 3], 3, &[1, 1], 4),
        (&[3, 9], 3, &[1, 2], 7),
        (&[2, 2, 2], 2, &[1, 1, 1], 21),
        (&[2, 2, 4], 2, &[1, 1, 2], 51),
    ];
    criterion(
        "criterion 4 (lattice chain counts = evaluated polynomials, 7 groups)",
        None,
        || {
            for &(orders, p, alphas, expected) in cases {
                let start = Instant::now();
                let lattice = build_lattice(
                    &AbelianGroupSpec::new(orders.to_vec()).unwrap(),
                    DEFAULT_ORACLE_BOUND,
                )
                .unwrap();
                let build_time = start.elapsed();
                assert!(
                    build_time < Duration::from_secs(10),
                    "lattice for {orders:?} took {build_time:?}"
                );
                let counted = lattice.count_maximal_chains();
                assert_eq!(counted, nat(expected), "oracle count for {orders:?}");
                let tuple = ExponentTuple::new(alphas.to_vec()).unwrap();
                let evaluated = chain_polynomial(&tuple).eval(&nat(p));
                assert_eq!(counted, evaluated, "formula disagrees for {orders:?}");
            }
        },
    );
}

#[test]
fn criterion_5_nilpotent_composition() {
    criterion(
        "criterion 5 (nilpotent composition = oracle on mixed orders)",
        None,
        || {
            let cases: &[(&[u64], u64)] = &[(&[2, 3], 2), (&[2, 2, 3], 9), (&[4, 2, 9], 50)];
            for &(orders, expected) in cases {
                let spec = NilpotentSpec::from_cyclic_orders(orders).unwrap();
                let composed = nilpotent_chain_count(&spec);
                assert_eq!(composed, nat(expected), "composition for {orders:?}");
                let lattice = build_lattice(
                    &AbelianGroupSpec::new(orders.to_vec()).unwrap(),
                    DEFAULT_ORACLE_BOUND,
                )
                .unwrap();
                assert_eq!(
                    lattice.count_maximal_chains(),
                    composed,
                    "oracle disagrees for {orders:?}"
                );
            }
        },
    );
}

#[test]
fn criterion_6_polynomial_structure() {
    criterion(
        "criterion 6 (degree and p=1 coefficient sum, k <= 4, sum <= 10)",
        None,
        || {
            let mut counter = ChainCounter::new();
            for entries in sorted_tuples(4, 10) {
                let tuple = ExponentTuple::new(entries).unwrap();
                let poly = counter.polynomial(&tuple);
                assert_eq!(
                    poly.degree().unwrap_or(0) as u64,
                    expected_degree(&tuple),
                    "degree mismatch for {tuple}"
                );
                let parts: Vec<u64> = tuple.entries().iter().map(|&a| a as u64).collect();
                assert_eq!(
                    poly.coefficient_sum(),
                    multinomial(&parts),
                    "coefficient sum mismatch for {tuple}"
                );
            }
        },
    );
}

#[test]
fn criterion_7_weight_lemma_consistency() {
    criterion(
        "criterion 7 (decomposition weights and arch counts, |w| <= 14)",
        Some(Duration::from_secs(60)),
        || {
            for w in all_words_up_to(14) {
                let direct = word_weight_exponent(&w);
                assert_eq!(
                    word_weight_via_decomposition(&w),
                    direct,
                    "weight routes disagree on {w:?}"
                );
                let (x, y) = w.counts();
                let expected_arches = if x < y { x - direct } else { y - direct };
                assert_eq!(
                    upper_arch_count(&w),
                    expected_arches,
                    "arch count relation fails on {w:?}"
                );
            }
        },
    );
}

#[test]
fn criterion_8_maximal_subgroup_counts() {
    criterion(
        "criterion 8 (index-p subgroup counts, p-groups of order <= 72)",
        None,
        || {
            for p in [
                2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71,
            ] {
                let mut max_sum = 0u32;
                while p.pow(max_sum + 1) <= 72 {
                    max_sum += 1;
                }
                for entries in sorted_tuples(max_sum as usize, max_sum) {
                    let order: u64 = entries.iter().map(|&a| p.pow(a)).product();
                    if order > 72 {
                        continue;
                    }
                    let orders: Vec<u64> = entries.iter().map(|&a| p.pow(a)).collect();
                    let lattice = build_lattice(
                        &AbelianGroupSpec::new(orders.clone()).unwrap(),
                        DEFAULT_ORACLE_BOUND,
                    )
                    .unwrap();
                    assert_eq!(
                        lattice.count_index_p_subgroups(p).unwrap(),
                        maximal_subgroup_count(entries.len() as u32, p),
                        "index-{p} count mismatch for {orders:?}"
                    );
                }
            }
        },
    );
}
