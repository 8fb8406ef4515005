//! The symbol weight function, word weight exponents, and weights of whole
//! path families as polynomials in λ.
//!
//! The weight of a symbol is λ when the step moves the path "with" the
//! diagonal (an E step strictly above it, or an N step on or below it) and 1
//! otherwise, so the weight of a word is λ^n for some n >= 0. Only the
//! exponent n is ever computed; no real-valued arithmetic is involved.

use crate::error::Result;
use crate::exactmath::{BigNat, PPolynomial};
use crate::words::{
    enumerate_paths_with_bound, SegmentKind, Symbol, TailSide, Word, DEFAULT_ENUMERATION_BOUND,
};

/// Exponent n of a word weight λ^n.
pub type WeightExponent = usize;

/// Weight exponent (0 or 1) of the symbol at 1-based position `j`.
///
/// The prefix used for the comparison includes position `j` itself.
pub fn symbol_weight_exponent(word: &Word, j: usize) -> Result<usize> {
    let symbol = word.symbol_at(j)?;
    let (e, n) = word.count_prefix(j)?;
    let weighted = match symbol {
        Symbol::E => n > e,
        Symbol::N => n <= e,
    };
    Ok(weighted as usize)
}

/// Weight exponent of a whole word: the sum over all its symbols.
pub fn word_weight_exponent(word: &Word) -> WeightExponent {
    (1..=word.len())
        .map(|j| symbol_weight_exponent(word, j).expect("position in range"))
        .sum()
}

/// Weight exponent computed segmentwise from the arch decomposition:
/// #E per lower arch, #E - 1 per upper arch, #E of a superdiagonal tail,
/// #N of a subdiagonal tail. Always equals [`word_weight_exponent`].
pub fn word_weight_via_decomposition(word: &Word) -> WeightExponent {
    let decomposition = word.decompose();
    let mut exponent = 0usize;
    for segment in &decomposition.segments {
        let (e, n) = segment.word.counts();
        exponent += match segment.kind {
            SegmentKind::LowerArch => e,
            SegmentKind::UpperArch => e - 1,
            SegmentKind::Tail => match decomposition.tail_side {
                TailSide::Superdiagonal => e,
                TailSide::Subdiagonal => n,
                TailSide::Empty => unreachable!("tail segment with empty side"),
            },
        };
    }
    exponent
}

/// Number of upper arches in the word's decomposition.
///
/// Ties the weight to the decomposition: with endpoint (x, y) and exponent
/// n, the count is x - n when x < y and y - n when x >= y.
pub fn upper_arch_count(word: &Word) -> usize {
    word.decompose().upper_arch_count()
}

/// Weight of the full path set P(x, y) as a polynomial in λ: the
/// coefficient of λ^n counts the words of exponent n.
pub fn weight_of_path_set(x: usize, y: usize) -> Result<PPolynomial> {
    weight_of_path_set_with_bound(x, y, DEFAULT_ENUMERATION_BOUND)
}

pub fn weight_of_path_set_with_bound(x: usize, y: usize, bound: usize) -> Result<PPolynomial> {
    let mut poly = PPolynomial::zero();
    for word in enumerate_paths_with_bound(x, y, bound)? {
        poly.add_term(word_weight_exponent(&word), BigNat::from(1u32));
    }
    Ok(poly)
}

/// All words ending at (x, y) whose decomposition contains exactly `k`
/// upper arches.
pub fn enumerate_ck(x: usize, y: usize, k: usize) -> Result<Vec<Word>> {
    enumerate_ck_with_bound(x, y, k, DEFAULT_ENUMERATION_BOUND)
}

pub fn enumerate_ck_with_bound(x: usize, y: usize, k: usize, bound: usize) -> Result<Vec<Word>> {
    Ok(enumerate_paths_with_bound(x, y, bound)?
        .into_iter()
        .filter(|w| upper_arch_count(w) == k)
        .collect())
}
