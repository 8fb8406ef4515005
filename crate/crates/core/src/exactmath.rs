//! Arbitrary-precision integer combinatorics and sparse polynomials in one
//! indeterminate.
//!
//! Everything here is exact: coefficients are nonnegative big integers and
//! evaluation happens over the integers. The indeterminate is written `p`
//! when a polynomial counts subgroup chains and `λ` when it aggregates path
//! weights; both uses share [`PPolynomial`].

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};

/// Arbitrary-precision nonnegative integer.
pub type BigNat = num_bigint::BigUint;

/// Binomial coefficient C(n, k), with C(n, k) = 0 for k < 0 or k > n.
pub fn binomial(n: u64, k: i64) -> BigNat {
    if k < 0 || k as u64 > n {
        return BigNat::zero();
    }
    let k = (k as u64).min(n - k as u64);
    let mut acc = BigNat::one();
    for i in 0..k {
        // exact at every step: acc holds C(n, i) and (i+1) divides acc * (n-i)
        acc = acc * BigNat::from(n - i) / BigNat::from(i + 1);
    }
    acc
}

/// Multinomial coefficient (Σ parts)! / Π (parts_i!).
pub fn multinomial(parts: &[u64]) -> BigNat {
    let mut total = 0u64;
    let mut acc = BigNat::one();
    for &part in parts {
        total += part;
        acc *= binomial(total, part as i64);
    }
    acc
}

/// Ballot number b(x, y): the number of ballot words ending at (x, y),
/// given by C(x+y, x) - C(x+y, x-1) for 0 <= x <= y, and 0 for x > y.
pub fn ballot(x: u64, y: u64) -> BigNat {
    if x > y {
        return BigNat::zero();
    }
    binomial(x + y, x as i64) - binomial(x + y, x as i64 - 1)
}

/// Ballot number via the quotient form (y-x+1)/(y+1) * C(x+y, x).
///
/// Agrees with [`ballot`] on its whole domain; kept as an independent route
/// for cross-checks. The division is exact.
pub fn ballot_quotient_form(x: u64, y: u64) -> BigNat {
    if x > y {
        return BigNat::zero();
    }
    let c = binomial(x + y, x as i64);
    let num = c * BigNat::from(y - x + 1);
    let den = BigNat::from(y + 1);
    debug_assert!((num.clone() % &den).is_zero());
    num / den
}

/// Polynomial in one indeterminate with nonnegative big-integer coefficients.
///
/// Stored sparsely as degree -> coefficient with no explicit zero entries;
/// the zero polynomial has no entries and `degree()` is `None` for it.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct PPolynomial {
    coeffs: BTreeMap<usize, BigNat>,
}

impl PPolynomial {
    /// The zero polynomial.
    pub fn zero() -> Self {
        Self::default()
    }

    /// The constant polynomial 1.
    pub fn one() -> Self {
        Self::constant(BigNat::one())
    }

    /// A constant polynomial.
    pub fn constant(c: BigNat) -> Self {
        Self::monomial(0, c)
    }

    /// The monomial `c * x^degree`.
    pub fn monomial(degree: usize, c: BigNat) -> Self {
        let mut coeffs = BTreeMap::new();
        if !c.is_zero() {
            coeffs.insert(degree, c);
        }
        Self { coeffs }
    }

    /// Builds a polynomial from (degree, coefficient) pairs, summing repeats
    /// and dropping zeros.
    pub fn from_terms<I: IntoIterator<Item = (usize, BigNat)>>(terms: I) -> Self {
        let mut poly = Self::zero();
        for (degree, c) in terms {
            poly.add_term(degree, c);
        }
        poly
    }

    /// Adds `c * x^degree` in place.
    pub fn add_term(&mut self, degree: usize, c: BigNat) {
        if c.is_zero() {
            return;
        }
        let entry = self.coeffs.entry(degree).or_insert_with(BigNat::zero);
        *entry += c;
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.keys().next_back().copied()
    }

    /// Coefficient of `x^degree` (zero if absent).
    pub fn coeff(&self, degree: usize) -> BigNat {
        self.coeffs
            .get(&degree)
            .cloned()
            .unwrap_or_else(BigNat::zero)
    }

    /// Leading coefficient, or `None` for the zero polynomial.
    pub fn leading_coeff(&self) -> Option<&BigNat> {
        self.coeffs.values().next_back()
    }

    /// Terms in ascending degree order.
    pub fn terms(&self) -> impl Iterator<Item = (usize, &BigNat)> {
        self.coeffs.iter().map(|(&d, c)| (d, c))
    }

    /// Dense coefficient vector `[c_0, c_1, ..., c_degree]`; empty for zero.
    pub fn dense_coeffs(&self) -> Vec<BigNat> {
        match self.degree() {
            None => Vec::new(),
            Some(d) => (0..=d).map(|i| self.coeff(i)).collect(),
        }
    }

    /// Sum of the two polynomials.
    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (&degree, c) in &other.coeffs {
            out.add_term(degree, c.clone());
        }
        out
    }

    /// Multiplies by the monomial `scale * x^shift`.
    pub fn scale_shift(&self, scale: &BigNat, shift: usize) -> Self {
        if scale.is_zero() {
            return Self::zero();
        }
        Self {
            coeffs: self
                .coeffs
                .iter()
                .map(|(&d, c)| (d + shift, c * scale))
                .collect(),
        }
    }

    /// Exact evaluation at a nonnegative integer point (sparse Horner).
    pub fn eval(&self, point: &BigNat) -> BigNat {
        let mut acc = BigNat::zero();
        let mut prev_degree: Option<usize> = None;
        for (&degree, c) in self.coeffs.iter().rev() {
            if let Some(prev) = prev_degree {
                acc *= point.pow((prev - degree) as u32);
            }
            acc += c;
            prev_degree = Some(degree);
        }
        if let Some(lowest) = prev_degree {
            acc *= point.pow(lowest as u32);
        }
        acc
    }

    /// Sum of all coefficients (= evaluation at 1).
    pub fn coefficient_sum(&self) -> BigNat {
        self.coeffs.values().sum()
    }

    /// Renders the polynomial with the given variable name, highest degree
    /// first, e.g. `2p^2 + 3p + 1`.
    pub fn render(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut parts = Vec::with_capacity(self.coeffs.len());
        for (&degree, c) in self.coeffs.iter().rev() {
            let part = match degree {
                0 => c.to_string(),
                1 if c.is_one() => var.to_string(),
                1 => format!("{c}{var}"),
                _ if c.is_one() => format!("{var}^{degree}"),
                _ => format!("{c}{var}^{degree}"),
            };
            parts.push(part);
        }
        parts.join(" + ")
    }
}

impl fmt::Display for PPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render("p"))
    }
}
