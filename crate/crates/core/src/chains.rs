//! The counting engine for principal series.
//!
//! For a finite abelian p-group of type Z_{p^α1} x ... x Z_{p^αk} the number
//! of principal series is a polynomial in p depending only on the exponent
//! tuple. It is computed here three ways: by the maximal-subgroup recurrence
//! (any k), by the two-factor binomial closed form, and by the ballot-number
//! form tied to weighted lattice paths. Nilpotent groups compose their Sylow
//! factors through a multinomial coefficient.

use std::collections::HashMap;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exactmath::{ballot, binomial, multinomial, BigNat, PPolynomial};

/// Sorted, zero-free tuple of cyclic-factor exponents naming an abelian
/// p-group type.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ExponentTuple {
    entries: Vec<u32>,
}

impl ExponentTuple {
    /// Canonicalizes the input: zeros dropped, entries sorted ascending.
    /// Errors when nothing remains.
    pub fn new(entries: impl Into<Vec<u32>>) -> Result<Self> {
        let mut entries: Vec<u32> = entries.into();
        entries.retain(|&a| a > 0);
        if entries.is_empty() {
            return Err(Error::EmptyExponentTuple);
        }
        entries.sort_unstable();
        Ok(ExponentTuple { entries })
    }

    pub fn entries(&self) -> &[u32] {
        &self.entries
    }

    /// Number of cyclic factors k.
    pub fn factor_count(&self) -> usize {
        self.entries.len()
    }

    /// Σ α_i, the composition length of the group.
    pub fn sum(&self) -> u64 {
        self.entries.iter().map(|&a| a as u64).sum()
    }
}

impl std::fmt::Display for ExponentTuple {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let parts: Vec<String> = self.entries.iter().map(|a| a.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// A prime together with an exponent tuple, naming an abelian p-group.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PTypeSignature {
    p: u64,
    alphas: ExponentTuple,
}

impl PTypeSignature {
    /// Requires p >= 2. Primality of p is not enforced here; callers that
    /// need the group interpretation should check [`is_prime`].
    pub fn new(p: u64, alphas: ExponentTuple) -> Result<Self> {
        if p < 2 {
            return Err(Error::BaseTooSmall(p));
        }
        Ok(PTypeSignature { p, alphas })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn alphas(&self) -> &ExponentTuple {
        &self.alphas
    }

    /// The chain-count polynomial evaluated at p.
    pub fn chain_count(&self) -> BigNat {
        chain_polynomial(&self.alphas).eval(&BigNat::from(self.p))
    }
}

/// Memoizing evaluator for the chain-count recurrence.
///
/// The polynomial depends only on the canonical exponent tuple, so the memo
/// table is keyed by tuple alone. A counter is cheap to create; confine one
/// to each computation or share behind a lock for concurrent use.
#[derive(Debug, Default)]
pub struct ChainCounter {
    memo: HashMap<Vec<u32>, PPolynomial>,
}

impl ChainCounter {
    pub fn new() -> Self {
        Self::default()
    }

    /// Chain-count polynomial for the tuple, by the recurrence
    /// f(α) = Σ_i p^{k-i} f(α_1, ..., α_i - 1, ..., α_k).
    pub fn polynomial(&mut self, tuple: &ExponentTuple) -> PPolynomial {
        self.polynomial_for(tuple.entries().to_vec())
    }

    fn polynomial_for(&mut self, canonical: Vec<u32>) -> PPolynomial {
        if canonical.len() <= 1 {
            return PPolynomial::one();
        }
        if let Some(hit) = self.memo.get(&canonical) {
            return hit.clone();
        }
        let k = canonical.len();
        let mut sum = PPolynomial::zero();
        for i in 0..k {
            let mut child: Vec<u32> = canonical.clone();
            child[i] -= 1;
            child.retain(|&a| a > 0);
            child.sort_unstable();
            let term = self
                .polynomial_for(child)
                .scale_shift(&BigNat::one(), k - 1 - i);
            sum = sum.add(&term);
        }
        self.memo.insert(canonical, sum.clone());
        sum
    }
}

/// One-shot [`ChainCounter::polynomial`].
pub fn chain_polynomial(tuple: &ExponentTuple) -> PPolynomial {
    ChainCounter::new().polynomial(tuple)
}

/// Two-factor closed form
/// f(α1, α2) = 1 + Σ_{i=1}^{α1} [C(α1+α2, i) - C(α1+α2, i-1)] p^i,
/// requiring 1 <= α1 <= α2.
pub fn closed_form_two_factor(a1: u32, a2: u32) -> Result<PPolynomial> {
    if a1 == 0 || a1 > a2 {
        return Err(Error::UnorderedExponents { a1, a2 });
    }
    let total = (a1 + a2) as u64;
    let mut poly = PPolynomial::one();
    for i in 1..=a1 as u64 {
        let coeff = binomial(total, i as i64) - binomial(total, i as i64 - 1);
        poly.add_term(i as usize, coeff);
    }
    Ok(poly)
}

/// Ballot-number form Σ_{n=0}^{min(x,y)} b(n, x+y-n) λ^n.
///
/// The sum stops at min(x, y): no path ending at (x, y) carries a larger
/// weight exponent, even though b(n, x+y-n) itself stays positive up to
/// (x+y)/2. Agrees with [`weight_of_path_set`](crate::weights) everywhere
/// and with the other forms on sorted pairs.
pub fn ballot_form(x: usize, y: usize) -> PPolynomial {
    let total = (x + y) as u64;
    let mut poly = PPolynomial::zero();
    for n in 0..=x.min(y) as u64 {
        poly.add_term(n as usize, ballot(n, total - n));
    }
    poly
}

/// Number of maximal subgroups of an abelian p-group with k cyclic factors:
/// Σ_{i=1}^{k} p^{i-1}.
pub fn maximal_subgroup_count(k: u32, p: u64) -> BigNat {
    let p = BigNat::from(p);
    let mut sum = BigNat::zero();
    let mut power = BigNat::one();
    for _ in 0..k {
        sum += &power;
        power *= &p;
    }
    sum
}

/// A finite nilpotent (here: abelian) group presented as one abelian
/// p-group factor per prime, primes strictly increasing.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NilpotentSpec {
    parts: Vec<(u64, ExponentTuple)>,
}

impl NilpotentSpec {
    /// Builds the spec from one exponent tuple per prime.
    pub fn new(parts: impl Into<Vec<(u64, ExponentTuple)>>) -> Result<Self> {
        let mut parts: Vec<(u64, ExponentTuple)> = parts.into();
        parts.sort_by_key(|(p, _)| *p);
        for window in parts.windows(2) {
            if window[0].0 == window[1].0 {
                return Err(Error::DuplicatePrime(window[0].0));
            }
        }
        for &(p, _) in &parts {
            if !is_prime(p) {
                return Err(Error::NotPrimePower(p));
            }
        }
        Ok(NilpotentSpec { parts })
    }

    /// Builds the spec from cyclic factor orders, e.g. [4, 2, 9] for
    /// Z4 x Z2 x Z9. Each order must be a prime power > 1.
    pub fn from_cyclic_orders(orders: &[u64]) -> Result<Self> {
        let mut by_prime: Vec<(u64, Vec<u32>)> = Vec::new();
        for &order in orders {
            let (p, e) = factor_prime_power(order)?;
            match by_prime.iter_mut().find(|(q, _)| *q == p) {
                Some((_, exps)) => exps.push(e),
                None => by_prime.push((p, vec![e])),
            }
        }
        let mut parts = Vec::with_capacity(by_prime.len());
        for (p, exps) in by_prime {
            parts.push((p, ExponentTuple::new(exps)?));
        }
        NilpotentSpec::new(parts)
    }

    pub fn parts(&self) -> &[(u64, ExponentTuple)] {
        &self.parts
    }

    /// Product of all cyclic orders.
    pub fn group_order(&self) -> BigNat {
        let mut order = BigNat::one();
        for (p, tuple) in &self.parts {
            order *= BigNat::from(*p).pow(tuple.sum() as u32);
        }
        order
    }
}

/// Number of principal series of the direct product: the multinomial of the
/// Sylow composition lengths times the product of per-factor counts.
pub fn nilpotent_chain_count(spec: &NilpotentSpec) -> BigNat {
    let lengths: Vec<u64> = spec.parts().iter().map(|(_, t)| t.sum()).collect();
    let mut count = multinomial(&lengths);
    let mut counter = ChainCounter::new();
    for (p, tuple) in spec.parts() {
        count *= counter.polynomial(tuple).eval(&BigNat::from(*p));
    }
    count
}

/// Shape data of a chain-count polynomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyDiagnostics {
    pub degree: Option<usize>,
    pub coefficient_sum: BigNat,
    pub leading_coefficient: BigNat,
}

/// Degree, coefficient sum (evaluation at p = 1) and leading coefficient of
/// the chain-count polynomial. The degree always equals
/// [`expected_degree`] and the sum equals the multinomial of the tuple.
pub fn poly_diagnostics(tuple: &ExponentTuple) -> PolyDiagnostics {
    let poly = chain_polynomial(tuple);
    PolyDiagnostics {
        degree: poly.degree(),
        coefficient_sum: poly.coefficient_sum(),
        leading_coefficient: poly.leading_coeff().cloned().unwrap_or_else(BigNat::zero),
    }
}

/// Σ_{i=1}^{k} (k-i) α_i for the sorted tuple: the degree the recurrence
/// forces on the chain-count polynomial.
pub fn expected_degree(tuple: &ExponentTuple) -> u64 {
    let k = tuple.factor_count() as u64;
    tuple
        .entries()
        .iter()
        .enumerate()
        .map(|(i, &a)| (k - 1 - i as u64) * a as u64)
        .sum()
}

/// Trial-division primality test for small moduli.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut d = 3u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// Writes n > 1 as p^e for a prime p, or errors.
pub fn factor_prime_power(n: u64) -> Result<(u64, u32)> {
    if n < 2 {
        return Err(Error::NotPrimePower(n));
    }
    let mut p = 2u64;
    while p * p <= n {
        if n.is_multiple_of(p) {
            let mut rest = n;
            let mut e = 0u32;
            while rest.is_multiple_of(p) {
                rest /= p;
                e += 1;
            }
            if rest != 1 {
                return Err(Error::NotPrimePower(n));
            }
            return Ok((p, e));
        }
        p += 1;
    }
    Ok((n, 1))
}
