//! Words over the step alphabet {N, E} encoding lattice paths from the
//! origin, prefix statistics, the reflection, classification of the
//! diagonal-bounded families, and the arch decomposition.
//!
//! Positions inside a word are 1-based to match the usual convention for
//! prefixes: `word[i]` means the prefix consisting of the first `i` symbols.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Default cap on `x + y` for exhaustive path enumeration (~4M words).
pub const DEFAULT_ENUMERATION_BOUND: usize = 22;

/// A single lattice step: `N` (north) or `E` (east).
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Symbol {
    E,
    N,
}

impl Symbol {
    pub fn reflected(self) -> Symbol {
        match self {
            Symbol::E => Symbol::N,
            Symbol::N => Symbol::E,
        }
    }

    pub fn as_char(self) -> char {
        match self {
            Symbol::E => 'E',
            Symbol::N => 'N',
        }
    }

    pub fn from_char(c: char) -> Result<Symbol> {
        match c {
            'E' => Ok(Symbol::E),
            'N' => Ok(Symbol::N),
            other => Err(Error::InvalidSymbol(other)),
        }
    }
}

/// End point of a path: `x` east steps and `y` north steps from the origin.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct LatticePoint {
    pub x: usize,
    pub y: usize,
}

impl fmt::Display for LatticePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

/// A finite word over {N, E}, possibly empty.
#[derive(Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Word {
    symbols: Vec<Symbol>,
}

impl Word {
    pub fn new(symbols: Vec<Symbol>) -> Self {
        Word { symbols }
    }

    pub fn empty() -> Self {
        Word::default()
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    pub fn symbols(&self) -> &[Symbol] {
        &self.symbols
    }

    /// Symbol at 1-based position `i`.
    pub fn symbol_at(&self, i: usize) -> Result<Symbol> {
        if i == 0 || i > self.len() {
            return Err(Error::IndexOutOfRange {
                index: i,
                len: self.len(),
            });
        }
        Ok(self.symbols[i - 1])
    }

    /// `(#E, #N)` of the prefix of length `i`, with `0 <= i <= len`.
    pub fn count_prefix(&self, i: usize) -> Result<(usize, usize)> {
        if i > self.len() {
            return Err(Error::IndexOutOfRange {
                index: i,
                len: self.len(),
            });
        }
        let n = self.symbols[..i]
            .iter()
            .filter(|&&s| s == Symbol::N)
            .count();
        Ok((i - n, n))
    }

    /// `(#E, #N)` of the whole word.
    pub fn counts(&self) -> (usize, usize) {
        self.count_prefix(self.len())
            .expect("full prefix is in range")
    }

    /// Where the encoded path ends.
    pub fn endpoint(&self) -> LatticePoint {
        let (x, y) = self.counts();
        LatticePoint { x, y }
    }

    /// Running `#N - #E` after each prefix; index 0 is the origin.
    pub(crate) fn balances(&self) -> Vec<isize> {
        let mut out = Vec::with_capacity(self.len() + 1);
        let mut bal = 0isize;
        out.push(bal);
        for &s in &self.symbols {
            bal += match s {
                Symbol::N => 1,
                Symbol::E => -1,
            };
            out.push(bal);
        }
        out
    }

    /// True iff the prefix of length `i` ends on the diagonal y = x
    /// (1 <= i <= len).
    pub fn is_diagonal_symbol(&self, i: usize) -> Result<bool> {
        if i == 0 || i > self.len() {
            return Err(Error::IndexOutOfRange {
                index: i,
                len: self.len(),
            });
        }
        let (e, n) = self.count_prefix(i)?;
        Ok(e == n)
    }

    /// The word with N and E interchanged; an involution mirroring the path
    /// across the diagonal.
    pub fn reflect(&self) -> Word {
        Word::new(self.symbols.iter().map(|s| s.reflected()).collect())
    }

    /// True iff every prefix satisfies #E <= #N.
    pub fn is_ballot(&self) -> bool {
        self.balances().iter().all(|&b| b >= 0)
    }

    /// Which diagonal-bounded family the word belongs to.
    pub fn classify(&self) -> WordClass {
        if self.is_empty() {
            return WordClass::Both;
        }
        let balances = self.balances();
        let above = balances.iter().all(|&b| b >= 0);
        let below = balances.iter().all(|&b| b <= 0);
        let ends_on_diagonal = *balances.last().expect("nonempty") == 0;
        match (above, below, ends_on_diagonal) {
            (true, _, true) => WordClass::UpperCatalan,
            (true, _, false) => WordClass::Superdiagonal,
            (_, true, true) => WordClass::LowerCatalan,
            (_, true, false) => WordClass::Subdiagonal,
            _ => WordClass::Neither,
        }
    }

    /// Splits the word at every return to the diagonal; see
    /// [`ArchDecomposition`].
    pub fn decompose(&self) -> ArchDecomposition {
        let balances = self.balances();
        let mut segments = Vec::new();
        let mut tail_side = TailSide::Empty;
        let mut start = 0usize;
        for (i, &balance) in balances.iter().enumerate().skip(1) {
            if balance == 0 {
                let word = Word::new(self.symbols[start..i].to_vec());
                // between consecutive diagonal touches the balance keeps one
                // sign, so the first symbol decides the side
                let kind = match word.symbols[0] {
                    Symbol::N => SegmentKind::UpperArch,
                    Symbol::E => SegmentKind::LowerArch,
                };
                segments.push(Segment { kind, word });
                start = i;
            }
        }
        if start < self.len() {
            let word = Word::new(self.symbols[start..].to_vec());
            tail_side = match word.symbols[0] {
                Symbol::N => TailSide::Superdiagonal,
                Symbol::E => TailSide::Subdiagonal,
            };
            segments.push(Segment {
                kind: SegmentKind::Tail,
                word,
            });
        }
        ArchDecomposition {
            segments,
            tail_side,
        }
    }
}

impl FromStr for Word {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        s.chars()
            .map(Symbol::from_char)
            .collect::<Result<Vec<_>>>()
            .map(Word::new)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.symbols {
            write!(f, "{}", s.as_char())?;
        }
        Ok(())
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Word(\"{self}\")")
    }
}

/// Families of words relative to the diagonal y = x.
///
/// `LowerCatalan`/`UpperCatalan` imply `Subdiagonal`/`Superdiagonal` plus a
/// diagonal final symbol; `classify` reports the most specific class. Only
/// the empty word is `Both`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum WordClass {
    Subdiagonal,
    Superdiagonal,
    LowerCatalan,
    UpperCatalan,
    Neither,
    Both,
}

/// Kind of a segment in an arch decomposition.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SegmentKind {
    LowerArch,
    UpperArch,
    Tail,
}

/// Side of the tail segment, if any.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TailSide {
    Subdiagonal,
    Superdiagonal,
    Empty,
}

/// One segment of a decomposition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Segment {
    pub kind: SegmentKind,
    pub word: Word,
}

/// A word cut at every return to the diagonal.
///
/// Each arch touches the diagonal only at its endpoints (upper arches stay
/// strictly above in the interior, lower arches strictly below); the suffix
/// after the last diagonal touch, if nonempty, is the single tail and never
/// returns to the diagonal. Concatenating the segments reproduces the word.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ArchDecomposition {
    pub segments: Vec<Segment>,
    pub tail_side: TailSide,
}

impl ArchDecomposition {
    /// Concatenation of all segments (the original word).
    pub fn concatenated(&self) -> Word {
        let mut symbols = Vec::new();
        for segment in &self.segments {
            symbols.extend_from_slice(segment.word.symbols());
        }
        Word::new(symbols)
    }

    pub fn upper_arch_count(&self) -> usize {
        self.segments
            .iter()
            .filter(|s| s.kind == SegmentKind::UpperArch)
            .count()
    }

    pub fn lower_arch_count(&self) -> usize {
        self.segments
            .iter()
            .filter(|s| s.kind == SegmentKind::LowerArch)
            .count()
    }

    pub fn tail(&self) -> Option<&Segment> {
        self.segments.last().filter(|s| s.kind == SegmentKind::Tail)
    }
}

/// All words with `x` east and `y` north steps, in lexicographic order
/// (E < N), under the default enumeration bound.
pub fn enumerate_paths(x: usize, y: usize) -> Result<Vec<Word>> {
    enumerate_paths_with_bound(x, y, DEFAULT_ENUMERATION_BOUND)
}

pub fn enumerate_paths_with_bound(x: usize, y: usize, bound: usize) -> Result<Vec<Word>> {
    check_bound(x, y, bound)?;
    let mut out = Vec::new();
    let mut scratch = Vec::with_capacity(x + y);
    fill_paths(x, y, &mut scratch, &mut out);
    Ok(out)
}

fn fill_paths(e_left: usize, n_left: usize, scratch: &mut Vec<Symbol>, out: &mut Vec<Word>) {
    if e_left == 0 && n_left == 0 {
        out.push(Word::new(scratch.clone()));
        return;
    }
    if e_left > 0 {
        scratch.push(Symbol::E);
        fill_paths(e_left - 1, n_left, scratch, out);
        scratch.pop();
    }
    if n_left > 0 {
        scratch.push(Symbol::N);
        fill_paths(e_left, n_left - 1, scratch, out);
        scratch.pop();
    }
}

/// All ballot words (#E <= #N in every prefix) ending at (x, y), requiring
/// x <= y, under the default enumeration bound.
pub fn enumerate_ballot(x: usize, y: usize) -> Result<Vec<Word>> {
    enumerate_ballot_with_bound(x, y, DEFAULT_ENUMERATION_BOUND)
}

pub fn enumerate_ballot_with_bound(x: usize, y: usize, bound: usize) -> Result<Vec<Word>> {
    if x > y {
        return Err(Error::BallotDomain { x, y });
    }
    check_bound(x, y, bound)?;
    let mut out = Vec::new();
    let mut scratch = Vec::with_capacity(x + y);
    fill_ballot(x, y, 0, &mut scratch, &mut out);
    Ok(out)
}

fn fill_ballot(
    e_left: usize,
    n_left: usize,
    balance: usize,
    scratch: &mut Vec<Symbol>,
    out: &mut Vec<Word>,
) {
    if e_left == 0 && n_left == 0 {
        out.push(Word::new(scratch.clone()));
        return;
    }
    if e_left > 0 && balance > 0 {
        scratch.push(Symbol::E);
        fill_ballot(e_left - 1, n_left, balance - 1, scratch, out);
        scratch.pop();
    }
    if n_left > 0 {
        scratch.push(Symbol::N);
        fill_ballot(e_left, n_left - 1, balance + 1, scratch, out);
        scratch.pop();
    }
}

fn check_bound(x: usize, y: usize, bound: usize) -> Result<()> {
    if x + y > bound {
        return Err(Error::EnumerationBound {
            requested: x + y,
            bound,
        });
    }
    Ok(())
}
