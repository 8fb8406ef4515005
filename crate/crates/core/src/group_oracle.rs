//! Ground-truth oracle: the full subgroup lattice of a small finite abelian
//! group, its cover graph, and maximal-chain counting by dynamic
//! programming over covers.
//!
//! Everything is brute force on purpose: elements are residue tuples,
//! subgroups are found by closing known subgroups under one extra element
//! until a fixpoint, and covers come from the prime-index criterion. None
//! of the counting formulas are consulted, so the oracle independently
//! validates them.

use std::collections::{HashSet, VecDeque};

use num_traits::{One, Zero};

use crate::chains::factor_prime_power;
use crate::error::{Error, Result};
use crate::exactmath::BigNat;

/// Default cap on the group order for lattice enumeration.
pub const DEFAULT_ORACLE_BOUND: u64 = 200;

/// A finite abelian group given by its cyclic factor orders, e.g.
/// [4, 2, 9] for Z4 x Z2 x Z9. Each order is a prime power > 1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AbelianGroupSpec {
    cyclic_orders: Vec<u64>,
}

impl AbelianGroupSpec {
    pub fn new(orders: impl Into<Vec<u64>>) -> Result<Self> {
        let mut orders: Vec<u64> = orders.into();
        for &order in &orders {
            factor_prime_power(order)?;
        }
        orders.sort_unstable();
        Ok(AbelianGroupSpec {
            cyclic_orders: orders,
        })
    }

    pub fn cyclic_orders(&self) -> &[u64] {
        &self.cyclic_orders
    }

    /// Product of the cyclic orders (u128 to survive absurd inputs; the
    /// oracle bound rejects them later).
    pub fn order(&self) -> u128 {
        self.cyclic_orders.iter().map(|&o| o as u128).product()
    }

    /// The common prime when this is a p-group.
    pub fn p_group_prime(&self) -> Option<u64> {
        let mut prime = None;
        for &order in &self.cyclic_orders {
            let (p, _) = factor_prime_power(order).expect("validated in new");
            match prime {
                None => prime = Some(p),
                Some(q) if q == p => {}
                Some(_) => return None,
            }
        }
        prime
    }
}

/// Bitmask over element indices; words of 64 bits each.
type Mask = Vec<u64>;

fn mask_new(words: usize) -> Mask {
    vec![0u64; words]
}

fn mask_test(mask: &Mask, i: usize) -> bool {
    mask[i / 64] >> (i % 64) & 1 == 1
}

fn mask_set(mask: &mut Mask, i: usize) {
    mask[i / 64] |= 1 << (i % 64);
}

fn mask_is_subset(a: &Mask, b: &Mask) -> bool {
    a.iter().zip(b).all(|(x, y)| x & !y == 0)
}

fn mask_count(mask: &Mask) -> usize {
    mask.iter().map(|w| w.count_ones() as usize).sum()
}

fn mask_members(mask: &Mask) -> Vec<usize> {
    let mut out = Vec::with_capacity(mask_count(mask));
    for (w, &word) in mask.iter().enumerate() {
        let mut bits = word;
        while bits != 0 {
            let b = bits.trailing_zeros() as usize;
            out.push(w * 64 + b);
            bits &= bits - 1;
        }
    }
    out
}

/// The subgroup poset of a small abelian group, with cover edges.
///
/// Subgroups are stored as element-index sets in a fixed deterministic
/// order (by order, then by member list); index 0 is the trivial subgroup
/// and the last index is the full group.
#[derive(Clone, Debug)]
pub struct SubgroupLattice {
    cyclic_orders: Vec<u64>,
    order: u64,
    elements: Vec<Vec<u64>>,
    subgroups: Vec<Mask>,
    covers: Vec<(usize, usize)>,
}

/// Enumerates every subgroup of the group described by `spec`, leaving the
/// cover graph empty; errors when the group order exceeds `bound`.
pub fn enumerate_subgroups(spec: &AbelianGroupSpec, bound: u64) -> Result<SubgroupLattice> {
    let order_wide = spec.order();
    if order_wide > bound as u128 {
        return Err(Error::OracleBound {
            order: order_wide.min(u64::MAX as u128) as u64,
            bound,
        });
    }
    let order = order_wide as u64;
    let n = order as usize;
    let orders = spec.cyclic_orders().to_vec();

    // element index <-> residue tuple, identity first (mixed-radix order)
    let mut elements: Vec<Vec<u64>> = Vec::with_capacity(n);
    let mut tuple = vec![0u64; orders.len()];
    loop {
        elements.push(tuple.clone());
        let mut pos = orders.len();
        loop {
            if pos == 0 {
                break;
            }
            pos -= 1;
            tuple[pos] += 1;
            if tuple[pos] < orders[pos] {
                break;
            }
            tuple[pos] = 0;
        }
        if tuple.iter().all(|&r| r == 0) {
            break;
        }
    }
    debug_assert_eq!(elements.len(), n);

    // addition table over element indices
    let stride = {
        let mut s = vec![1u64; orders.len()];
        for i in (0..orders.len().saturating_sub(1)).rev() {
            s[i] = s[i + 1] * orders[i + 1];
        }
        s
    };
    let index_of = |tuple: &[u64]| -> usize {
        tuple.iter().zip(&stride).map(|(&r, &s)| r * s).sum::<u64>() as usize
    };
    let mut add = vec![0u32; n * n];
    for a in 0..n {
        for b in a..n {
            let sum: Vec<u64> = elements[a]
                .iter()
                .zip(&elements[b])
                .zip(&orders)
                .map(|((&x, &y), &m)| (x + y) % m)
                .collect();
            let idx = index_of(&sum) as u32;
            add[a * n + b] = idx;
            add[b * n + a] = idx;
        }
    }
    let add_idx = |a: usize, b: usize| add[a * n + b] as usize;

    let words = n.div_ceil(64);
    let mut trivial = mask_new(words);
    mask_set(&mut trivial, 0);

    let mut seen: HashSet<Mask> = HashSet::new();
    let mut queue: VecDeque<Mask> = VecDeque::new();
    seen.insert(trivial.clone());
    queue.push_back(trivial);
    while let Some(current) = queue.pop_front() {
        let members = mask_members(&current);
        for g in 0..n {
            if mask_test(&current, g) {
                continue;
            }
            // <H, g> = H + {0, g, 2g, ...} until a multiple of g lands in H
            let mut extended = current.clone();
            let mut shift = g;
            while !mask_test(&current, shift) {
                for &m in &members {
                    mask_set(&mut extended, add_idx(m, shift));
                }
                shift = add_idx(shift, g);
            }
            if !seen.contains(&extended) {
                seen.insert(extended.clone());
                queue.push_back(extended);
            }
        }
    }

    let mut subgroups: Vec<Mask> = seen.into_iter().collect();
    subgroups.sort_by_cached_key(|mask| (mask_count(mask), mask_members(mask)));
    Ok(SubgroupLattice {
        cyclic_orders: orders,
        order,
        elements,
        subgroups,
        covers: Vec::new(),
    })
}

/// [`enumerate_subgroups`] followed by [`SubgroupLattice::compute_cover_graph`].
pub fn build_lattice(spec: &AbelianGroupSpec, bound: u64) -> Result<SubgroupLattice> {
    let mut lattice = enumerate_subgroups(spec, bound)?;
    lattice.compute_cover_graph();
    Ok(lattice)
}

impl SubgroupLattice {
    pub fn group_order(&self) -> u64 {
        self.order
    }

    pub fn cyclic_orders(&self) -> &[u64] {
        &self.cyclic_orders
    }

    pub fn subgroup_count(&self) -> usize {
        self.subgroups.len()
    }

    /// Order of the subgroup at `idx`.
    pub fn subgroup_order(&self, idx: usize) -> usize {
        mask_count(&self.subgroups[idx])
    }

    /// Elements of the subgroup at `idx` as sorted residue tuples.
    pub fn subgroup_elements(&self, idx: usize) -> Vec<Vec<u64>> {
        let mut out: Vec<Vec<u64>> = mask_members(&self.subgroups[idx])
            .into_iter()
            .map(|i| self.elements[i].clone())
            .collect();
        out.sort();
        out
    }

    pub fn cover_edges(&self) -> &[(usize, usize)] {
        &self.covers
    }

    /// Fills the cover relation: (H, K) is an edge iff H < K with prime
    /// index, which for abelian groups is exactly "nothing strictly
    /// between".
    pub fn compute_cover_graph(&mut self) {
        let sizes: Vec<usize> = (0..self.subgroups.len())
            .map(|i| self.subgroup_order(i))
            .collect();
        let mut covers = Vec::new();
        for upper in 0..self.subgroups.len() {
            for lower in 0..upper {
                if !sizes[upper].is_multiple_of(sizes[lower]) {
                    continue;
                }
                let index = sizes[upper] / sizes[lower];
                if !is_small_prime(index) {
                    continue;
                }
                if mask_is_subset(&self.subgroups[lower], &self.subgroups[upper]) {
                    debug_assert!(
                        !self.has_strictly_between(lower, upper),
                        "prime-index pair with an intermediate subgroup"
                    );
                    covers.push((lower, upper));
                }
            }
        }
        covers.sort_unstable();
        self.covers = covers;
    }

    fn has_strictly_between(&self, lower: usize, upper: usize) -> bool {
        (0..self.subgroups.len()).any(|mid| {
            mid != lower
                && mid != upper
                && self.subgroup_order(mid) > self.subgroup_order(lower)
                && self.subgroup_order(mid) < self.subgroup_order(upper)
                && mask_is_subset(&self.subgroups[lower], &self.subgroups[mid])
                && mask_is_subset(&self.subgroups[mid], &self.subgroups[upper])
        })
    }

    /// Number of maximal chains from the trivial subgroup to the full
    /// group, by summing over covers bottom-up. Requires the cover graph.
    pub fn count_maximal_chains(&self) -> BigNat {
        let count = self.subgroups.len();
        if count == 1 {
            return BigNat::one();
        }
        debug_assert!(!self.covers.is_empty(), "cover graph not computed");
        let mut chains = vec![BigNat::zero(); count];
        chains[0] = BigNat::one();
        for &(lower, upper) in &self.covers {
            let add = chains[lower].clone();
            chains[upper] += add;
        }
        chains[count - 1].clone()
    }

    /// Number of subgroups of index p; errors unless the group is a
    /// p-group for this exact p.
    pub fn count_index_p_subgroups(&self, p: u64) -> Result<BigNat> {
        let mut rest = self.order;
        while rest.is_multiple_of(p) {
            rest /= p;
        }
        if rest != 1 {
            return Err(Error::NotPGroup {
                order: self.order,
                p,
            });
        }
        let target = (self.order / p) as usize;
        let hits = (0..self.subgroups.len())
            .filter(|&i| self.subgroup_order(i) == target)
            .count();
        Ok(BigNat::from(hits as u64))
    }

    /// The common length of all maximal chains, or `None` if lengths
    /// differ. Requires the cover graph.
    pub fn uniform_chain_length(&self) -> Option<usize> {
        let count = self.subgroups.len();
        if count == 1 {
            return Some(0);
        }
        let mut shortest = vec![usize::MAX; count];
        let mut longest = vec![0usize; count];
        shortest[0] = 0;
        for &(lower, upper) in &self.covers {
            if shortest[lower] != usize::MAX {
                shortest[upper] = shortest[upper].min(shortest[lower] + 1);
                longest[upper] = longest[upper].max(longest[lower] + 1);
            }
        }
        (shortest[count - 1] == longest[count - 1]).then(|| longest[count - 1])
    }
}

fn is_small_prime(n: usize) -> bool {
    crate::chains::is_prime(n as u64)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chains::{
        chain_polynomial, maximal_subgroup_count, nilpotent_chain_count, ExponentTuple,
        NilpotentSpec,
    };

    fn lattice(orders: &[u64]) -> SubgroupLattice {
        build_lattice(
            &AbelianGroupSpec::new(orders.to_vec()).unwrap(),
            DEFAULT_ORACLE_BOUND,
        )
        .unwrap()
    }

    fn nat(n: u64) -> BigNat {
        BigNat::from(n)
    }

    #[test]
    fn subgroup_counts() {
        assert_eq!(lattice(&[2, 2]).subgroup_count(), 5);
        assert_eq!(lattice(&[4]).subgroup_count(), 3);
        assert_eq!(lattice(&[3, 3]).subgroup_count(), 6);
    }

    #[test]
    fn cover_edge_counts() {
        assert_eq!(lattice(&[4]).cover_edges().len(), 2);
        assert_eq!(lattice(&[2, 2]).cover_edges().len(), 6);
        assert_eq!(lattice(&[2, 3]).cover_edges().len(), 4);
    }

    #[test]
    fn chain_counts() {
        assert_eq!(lattice(&[2, 2]).count_maximal_chains(), nat(3));
        assert_eq!(lattice(&[4, 4]).count_maximal_chains(), nat(15));
        assert_eq!(lattice(&[2, 3]).count_maximal_chains(), nat(2));
    }

    #[test]
    fn index_p_counts() {
        assert_eq!(lattice(&[2, 2]).count_index_p_subgroups(2).unwrap(), nat(3));
        assert_eq!(
            lattice(&[2, 2, 2]).count_index_p_subgroups(2).unwrap(),
            nat(7)
        );
        assert_eq!(lattice(&[9]).count_index_p_subgroups(3).unwrap(), nat(1));
        assert!(matches!(
            lattice(&[2, 3]).count_index_p_subgroups(2),
            Err(Error::NotPGroup { .. })
        ));
    }

    #[test]
    fn spec_validation() {
        assert!(matches!(
            AbelianGroupSpec::new(vec![6]),
            Err(Error::NotPrimePower(6))
        ));
        assert!(matches!(
            AbelianGroupSpec::new(vec![1]),
            Err(Error::NotPrimePower(1))
        ));
        let spec = AbelianGroupSpec::new(vec![9, 2, 4]).unwrap();
        assert_eq!(spec.cyclic_orders(), &[2, 4, 9]);
        assert_eq!(spec.order(), 72);
        assert_eq!(spec.p_group_prime(), None);
        assert_eq!(
            AbelianGroupSpec::new(vec![4, 2]).unwrap().p_group_prime(),
            Some(2)
        );
    }

    #[test]
    fn bound_is_enforced() {
        let spec = AbelianGroupSpec::new(vec![256]).unwrap();
        assert!(matches!(
            enumerate_subgroups(&spec, DEFAULT_ORACLE_BOUND),
            Err(Error::OracleBound {
                order: 256,
                bound: 200
            })
        ));
    }

    #[test]
    fn trivial_and_full_are_terminal() {
        let lat = lattice(&[4, 2]);
        assert_eq!(lat.subgroup_order(0), 1);
        assert_eq!(lat.subgroup_order(lat.subgroup_count() - 1), 8);
        assert_eq!(lat.subgroup_elements(0), vec![vec![0, 0]]);
    }

    #[test]
    fn chain_lengths_are_uniform() {
        for orders in [
            vec![2u64, 2],
            vec![4, 2],
            vec![8],
            vec![3, 9],
            vec![2, 2, 2],
            vec![2, 3],
        ] {
            let lat = lattice(&orders);
            let expected: u32 = orders
                .iter()
                .map(|&o| crate::chains::factor_prime_power(o).unwrap().1)
                .sum();
            assert_eq!(
                lat.uniform_chain_length(),
                Some(expected as usize),
                "chain length mismatch for {orders:?}"
            );
        }
    }

    #[test]
    fn oracle_matches_polynomials() {
        let cases: &[(u64, &[u32], u64)] = &[
            (2, &[1, 1], 3),
            (2, &[1, 2], 5),
            (2, &[2, 2], 15),
            (2, &[1, 1, 1], 21),
            (2, &[1, 1, 2], 51),
            (2, &[1, 3], 7),
            (3, &[1, 1], 4),
            (3, &[1, 2], 7),
        ];
        for &(p, alphas, expected) in cases {
            let orders: Vec<u64> = alphas.iter().map(|&a| p.pow(a)).collect();
            let lat = lattice(&orders);
            assert_eq!(
                lat.count_maximal_chains(),
                nat(expected),
                "oracle at p={p}, {alphas:?}"
            );
            let tuple = ExponentTuple::new(alphas.to_vec()).unwrap();
            assert_eq!(
                chain_polynomial(&tuple).eval(&nat(p)),
                nat(expected),
                "polynomial at p={p}, {alphas:?}"
            );
        }
    }

    #[test]
    fn oracle_matches_index_p_formula() {
        for (p, alphas) in [
            (2u64, vec![1u32, 1]),
            (2, vec![1, 2]),
            (2, vec![1, 1, 1]),
            (3, vec![1, 1]),
        ] {
            let orders: Vec<u64> = alphas.iter().map(|&a| p.pow(a)).collect();
            let lat = lattice(&orders);
            assert_eq!(
                lat.count_index_p_subgroups(p).unwrap(),
                maximal_subgroup_count(alphas.len() as u32, p),
                "index-{p} count for {alphas:?}"
            );
        }
    }

    #[test]
    fn oracle_matches_nilpotent_composition() {
        for orders in [vec![2u64, 3], vec![2, 2, 3], vec![4, 3], vec![2, 9]] {
            let lat = lattice(&orders);
            let spec = NilpotentSpec::from_cyclic_orders(&orders).unwrap();
            assert_eq!(
                lat.count_maximal_chains(),
                nilpotent_chain_count(&spec),
                "composition mismatch for {orders:?}"
            );
        }
    }

    #[test]
    fn isomorphic_presentations_agree() {
        // the exponent tuple, not the order of factors, determines the count
        let a = lattice(&[2, 4]);
        let b = lattice(&[4, 2]);
        assert_eq!(a.count_maximal_chains(), b.count_maximal_chains());
        assert_eq!(a.subgroup_count(), b.subgroup_count());
    }
}
