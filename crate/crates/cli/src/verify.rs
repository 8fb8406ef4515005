//! Verification suites: cross-check every counting route against every
//! other on a bounded range, reporting the first counterexample found.

use std::collections::BTreeSet;

use chaincount::bijection::{ballot_endpoint_for, phi, theta};
use chaincount::chains::{
    ballot_form, closed_form_two_factor, expected_degree, maximal_subgroup_count,
    nilpotent_chain_count, ChainCounter, ExponentTuple, NilpotentSpec,
};
use chaincount::exactmath::multinomial;
use chaincount::group_oracle::{build_lattice, AbelianGroupSpec};
use chaincount::weights::{upper_arch_count, weight_of_path_set_with_bound};
use chaincount::words::{
    enumerate_ballot_with_bound, enumerate_paths_with_bound, LatticePoint, Word,
};

pub struct SuiteReport {
    pub name: &'static str,
    pub checks: usize,
}

pub struct Counterexample {
    pub suite: &'static str,
    pub description: String,
}

type SuiteResult = Result<SuiteReport, Counterexample>;

fn fail(suite: &'static str, description: String) -> SuiteResult {
    Err(Counterexample { suite, description })
}

/// recurrence = closed form on sorted pairs, ballot form = exhaustive path
/// weights, and the degree / coefficient-sum shape of every small tuple.
pub fn forms_suite(max_sum: usize, enum_bound: usize) -> SuiteResult {
    let mut checks = 0usize;
    let mut counter = ChainCounter::new();
    for a1 in 1..=(max_sum as u32 / 2) {
        for a2 in a1..=(max_sum as u32 - a1) {
            let tuple = ExponentTuple::new(vec![a1, a2]).expect("positive entries");
            let recurrence = counter.polynomial(&tuple);
            let closed = closed_form_two_factor(a1, a2).expect("sorted pair");
            if recurrence != closed {
                return fail(
                    "forms",
                    format!(
                        "recurrence {} != closed form {} at ({a1}, {a2})",
                        recurrence.render("p"),
                        closed.render("p")
                    ),
                );
            }
            checks += 1;
        }
    }
    for x in 0..=max_sum {
        for y in 0..=(max_sum - x) {
            let from_ballots = ballot_form(x, y);
            let from_paths = match weight_of_path_set_with_bound(x, y, enum_bound) {
                Ok(poly) => poly,
                Err(e) => return fail("forms", format!("enumeration failed at ({x}, {y}): {e}")),
            };
            if from_ballots != from_paths {
                return fail(
                    "forms",
                    format!(
                        "ballot form {} != path weights {} at ({x}, {y})",
                        from_ballots.render("λ"),
                        from_paths.render("λ")
                    ),
                );
            }
            checks += 1;
        }
    }
    for entries in sorted_tuples(4, max_sum.min(12) as u32) {
        let tuple = ExponentTuple::new(entries).expect("positive entries");
        let poly = counter.polynomial(&tuple);
        if poly.degree().unwrap_or(0) as u64 != expected_degree(&tuple) {
            return fail(
                "forms",
                format!("degree of f{tuple} is not {}", expected_degree(&tuple)),
            );
        }
        let parts: Vec<u64> = tuple.entries().iter().map(|&a| a as u64).collect();
        if poly.coefficient_sum() != multinomial(&parts) {
            return fail(
                "forms",
                format!("coefficient sum of f{tuple} is not the multinomial"),
            );
        }
        checks += 1;
    }
    Ok(SuiteReport {
        name: "forms",
        checks,
    })
}

/// Round trip, injectivity and image cardinality of the arch-to-ballot map
/// for every endpoint with x + y <= max_sum and every feasible arch count.
pub fn bijection_suite(max_sum: usize, enum_bound: usize) -> SuiteResult {
    let mut checks = 0usize;
    for total in 0..=max_sum {
        for x in 0..=total {
            let y = total - x;
            let source = LatticePoint { x, y };
            let paths = match enumerate_paths_with_bound(x, y, enum_bound) {
                Ok(paths) => paths,
                Err(e) => {
                    return fail(
                        "bijection",
                        format!("enumeration failed at ({x}, {y}): {e}"),
                    )
                }
            };
            for k in 0..=x.min(y) {
                let class: Vec<&Word> = paths.iter().filter(|w| upper_arch_count(w) == k).collect();
                let mut images = BTreeSet::new();
                for w in &class {
                    let image = phi(w);
                    match theta(&image, source, k) {
                        Ok(back) if back == **w => {}
                        Ok(back) => {
                            return fail(
                                "bijection",
                                format!("theta(phi({w})) = {back} differs from {w}"),
                            )
                        }
                        Err(e) => {
                            return fail("bijection", format!("theta rejected phi({w}): {e}"))
                        }
                    }
                    images.insert(image);
                }
                if images.len() != class.len() {
                    return fail("bijection", format!("phi not injective on C_{k}({x}, {y})"));
                }
                let target = ballot_endpoint_for(source, k).expect("k <= min(x, y)");
                let ballots = match enumerate_ballot_with_bound(target.x, target.y, enum_bound) {
                    Ok(b) => b,
                    Err(e) => return fail("bijection", format!("ballot enumeration failed: {e}")),
                };
                if ballots.len() != class.len() {
                    return fail(
                        "bijection",
                        format!(
                            "|C_{k}({x}, {y})| = {} but |B({}, {})| = {}",
                            class.len(),
                            target.x,
                            target.y,
                            ballots.len()
                        ),
                    );
                }
                checks += 1;
            }
        }
    }
    Ok(SuiteReport {
        name: "bijection",
        checks,
    })
}

/// Subgroup-lattice ground truth versus the formulas, for every abelian
/// group of order <= max_order.
pub fn oracle_suite(max_order: u64, oracle_bound: u64) -> SuiteResult {
    let mut checks = 0usize;
    let mut counter = ChainCounter::new();
    for order in 2..=max_order {
        for spec_orders in abelian_types(order) {
            let spec = AbelianGroupSpec::new(spec_orders.clone()).expect("prime powers");
            let lattice = match build_lattice(&spec, oracle_bound) {
                Ok(lattice) => lattice,
                Err(e) => {
                    return fail(
                        "oracle",
                        format!("lattice build failed for {spec_orders:?}: {e}"),
                    )
                }
            };
            let counted = lattice.count_maximal_chains();

            let composition_length: u32 = spec_orders
                .iter()
                .map(|&o| {
                    chaincount::chains::factor_prime_power(o)
                        .expect("prime power")
                        .1
                })
                .sum();
            match lattice.uniform_chain_length() {
                Some(len) if len as u32 == composition_length => {}
                other => {
                    return fail(
                        "oracle",
                        format!(
                            "chain lengths for {spec_orders:?}: got {other:?}, expected uniform {composition_length}"
                        ),
                    )
                }
            }

            if let Some(p) = spec.p_group_prime() {
                let exponents: Vec<u32> = spec_orders
                    .iter()
                    .map(|&o| {
                        chaincount::chains::factor_prime_power(o)
                            .expect("prime power")
                            .1
                    })
                    .collect();
                let tuple = ExponentTuple::new(exponents.clone()).expect("positive exponents");
                let predicted = counter.polynomial(&tuple).eval(&p.into());
                if counted != predicted {
                    return fail(
                        "oracle",
                        format!(
                            "chain count for {spec_orders:?}: lattice {counted}, polynomial {predicted}"
                        ),
                    );
                }
                let index_p = lattice.count_index_p_subgroups(p).expect("p-group");
                let formula = maximal_subgroup_count(exponents.len() as u32, p);
                if index_p != formula {
                    return fail(
                        "oracle",
                        format!(
                            "index-{p} subgroups of {spec_orders:?}: lattice {index_p}, formula {formula}"
                        ),
                    );
                }
            } else {
                let spec = NilpotentSpec::from_cyclic_orders(&spec_orders).expect("prime powers");
                let composed = nilpotent_chain_count(&spec);
                if counted != composed {
                    return fail(
                        "oracle",
                        format!(
                            "chain count for {spec_orders:?}: lattice {counted}, composition {composed}"
                        ),
                    );
                }
            }
            checks += 1;
        }
    }
    Ok(SuiteReport {
        name: "oracle",
        checks,
    })
}

/// Sorted tuples with 1..=max_len entries and entry sum <= max_sum.
pub fn sorted_tuples(max_len: usize, max_sum: u32) -> Vec<Vec<u32>> {
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

/// Cyclic-order multisets of every abelian group of the given order: one
/// exponent partition per prime factor, combined across primes.
fn abelian_types(order: u64) -> Vec<Vec<u64>> {
    let mut factors: Vec<(u64, u32)> = Vec::new();
    let mut rest = order;
    let mut p = 2u64;
    while p * p <= rest {
        if rest.is_multiple_of(p) {
            let mut e = 0u32;
            while rest.is_multiple_of(p) {
                rest /= p;
                e += 1;
            }
            factors.push((p, e));
        }
        p += 1;
    }
    if rest > 1 {
        factors.push((rest, 1));
    }

    let mut types: Vec<Vec<u64>> = vec![Vec::new()];
    for (p, e) in factors {
        let mut extended = Vec::new();
        for partition in partitions(e) {
            for existing in &types {
                let mut orders = existing.clone();
                orders.extend(partition.iter().map(|&part| p.pow(part)));
                extended.push(orders);
            }
        }
        types = extended;
    }
    types
}

/// All partitions of n into nondecreasing positive parts.
fn partitions(n: u32) -> Vec<Vec<u32>> {
    fn rec(min: u32, left: u32, scratch: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if left == 0 {
            out.push(scratch.clone());
            return;
        }
        for part in min..=left {
            scratch.push(part);
            rec(part, left - part, scratch, out);
            scratch.pop();
        }
    }
    let mut out = Vec::new();
    rec(1, n, &mut Vec::new(), &mut out);
    out
}
