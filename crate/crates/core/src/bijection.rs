//! The constructive bijection between words with k upper arches and ballot
//! words: `phi` maps C_k(x, y) onto B(x-k, y+k) (or B(y-k, x+k) when
//! x >= y), and `theta` inverts it using the first-escape indices delta_s.

use crate::error::{Error, Result};
use crate::words::{LatticePoint, SegmentKind, Symbol, Word};

/// Endpoint of the ballot image of a word ending at `source` with `k` upper
/// arches: (x-k, y+k) when x < y, else (y-k, x+k).
///
/// Returns an error when k is too large for the endpoint.
pub fn ballot_endpoint_for(source: LatticePoint, k: usize) -> Result<LatticePoint> {
    let LatticePoint { x, y } = source;
    let infeasible = Error::InfeasibleArchCount { k, x, y };
    if x < y {
        Ok(LatticePoint {
            x: x.checked_sub(k).ok_or(infeasible)?,
            y: y + k,
        })
    } else {
        Ok(LatticePoint {
            x: y.checked_sub(k).ok_or(infeasible)?,
            y: x + k,
        })
    }
}

/// Maps a path word to a ballot word by reflecting the final symbol of
/// every upper arch, reflecting every lower arch entirely, and leaving the
/// tail unchanged (x < y) or reflecting it too (x >= y).
pub fn phi(word: &Word) -> Word {
    let endpoint = word.endpoint();
    let reflect_tail = endpoint.x >= endpoint.y;
    let mut symbols = Vec::with_capacity(word.len());
    for segment in &word.decompose().segments {
        let seg = segment.word.symbols();
        match segment.kind {
            SegmentKind::UpperArch => {
                symbols.extend_from_slice(&seg[..seg.len() - 1]);
                debug_assert_eq!(seg[seg.len() - 1], Symbol::E);
                symbols.push(seg[seg.len() - 1].reflected());
            }
            SegmentKind::LowerArch => {
                symbols.extend(seg.iter().map(|s| s.reflected()));
            }
            SegmentKind::Tail => {
                if reflect_tail {
                    symbols.extend(seg.iter().map(|s| s.reflected()));
                } else {
                    symbols.extend_from_slice(seg);
                }
            }
        }
    }
    Word::new(symbols)
}

/// Minimal 1-based index from which every prefix of the word stays strictly
/// above the diagonal y = x + s, or `None` when no such index exists (in
/// particular whenever the word ends on or below that diagonal).
pub fn delta(word: &Word, s: usize) -> Option<usize> {
    let balances = word.balances();
    let s = s as isize;
    // the last violating prefix, if any, pins the minimal index after it
    let mut last_bad = 0usize;
    for (i, &bal) in balances.iter().enumerate().skip(1) {
        if bal <= s {
            last_bad = i;
        }
    }
    if last_bad == word.len() || word.is_empty() {
        None
    } else {
        Some(last_bad + 1)
    }
}

/// Inverse of [`phi`] on ballot words: rebuilds the word in C_k(x, y) from
/// a ballot word in B(x-k, y+k) (x < y) or B(y-k, x+k) (x >= y).
///
/// The escape indices delta_0, ..., delta_{2k} slice the ballot word: each
/// part [delta_{2t}, delta_{2t+1}] turns back into an upper arch by
/// reflecting its final symbol, the other symbols before delta_{2k} reflect
/// back into lower arches, and the suffix from delta_{2k} is the tail (kept
/// for x < y, reflected for x >= y).
///
/// Errors when the input is not a ballot word or does not end where a
/// k-arch preimage of the target must send it.
pub fn theta(ballot_word: &Word, target: LatticePoint, k: usize) -> Result<Word> {
    if let Some(bad) = ballot_word.balances().iter().position(|&b| b < 0) {
        return Err(Error::NotBallotWord { index: bad });
    }
    let expected = ballot_endpoint_for(target, k)?;
    let found = ballot_word.endpoint();
    if found != expected {
        return Err(Error::BallotEndpointMismatch {
            expected_x: expected.x,
            expected_y: expected.y,
            found_x: found.x,
            found_y: found.y,
        });
    }

    // with the endpoint validated, #N - #E = expected.y - expected.x > s for
    // every s < 2k, so delta_0..delta_{2k-1} exist; delta_{2k} is absent
    // exactly when the tail is empty (target on the diagonal)
    let len = ballot_word.len();
    let suffix_start = delta(ballot_word, 2 * k).unwrap_or(len + 1);
    let mut symbols: Vec<Symbol> = ballot_word.symbols().to_vec();
    let mut in_part = vec![false; len + 1];
    for t in 0..k {
        let start = delta(ballot_word, 2 * t).expect("escape index below endpoint level");
        let end = delta(ballot_word, 2 * t + 1).expect("escape index below endpoint level");
        for slot in &mut in_part[start..=end] {
            *slot = true;
        }
        symbols[end - 1] = symbols[end - 1].reflected();
    }
    let reflect_tail = target.x >= target.y;
    for i in 1..=len {
        let in_suffix = i >= suffix_start;
        if (in_suffix && reflect_tail) || (!in_suffix && !in_part[i]) {
            symbols[i - 1] = symbols[i - 1].reflected();
        }
    }
    let result = Word::new(symbols);
    debug_assert_eq!(result.endpoint(), target);
    debug_assert_eq!(result.decompose().upper_arch_count(), k);
    Ok(result)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weights::upper_arch_count;
    use crate::words::{enumerate_ballot, enumerate_paths};
    use std::collections::BTreeSet;

    fn word(s: &str) -> Word {
        s.parse().expect("valid word")
    }

    fn point(x: usize, y: usize) -> LatticePoint {
        LatticePoint { x, y }
    }

    #[test]
    fn phi_examples() {
        assert_eq!(phi(&word("NEN")), word("NNN"));
        assert_eq!(phi(&word("ENN")), word("NEN"));
        assert_eq!(phi(&word("NNE")), word("NNE"));
        assert_eq!(phi(&word("")), word(""));
    }

    #[test]
    fn phi_reflects_tail_on_or_below_diagonal() {
        // x >= y: the subdiagonal tail reflects too
        assert_eq!(phi(&word("ENEE")), word("NENN"));
        assert_eq!(phi(&word("NE")), word("NN"));
    }

    #[test]
    fn delta_examples() {
        assert_eq!(delta(&word("NNN"), 0), Some(1));
        assert_eq!(delta(&word("NEN"), 0), Some(3));
        assert_eq!(delta(&word("EN"), 0), None);
        assert_eq!(delta(&word(""), 0), None);
        assert_eq!(delta(&word("NNN"), 1), Some(2));
        assert_eq!(delta(&word("NNN"), 2), Some(3));
        assert_eq!(delta(&word("NNN"), 3), None);
    }

    #[test]
    fn theta_examples() {
        assert_eq!(theta(&word("NNN"), point(1, 2), 1).unwrap(), word("NEN"));
        assert_eq!(theta(&word("NEN"), point(1, 2), 0).unwrap(), word("ENN"));
        assert_eq!(theta(&word("NNE"), point(1, 2), 0).unwrap(), word("NNE"));
    }

    #[test]
    fn theta_rejects_malformed_inputs() {
        assert!(matches!(
            theta(&word("ENN"), point(1, 2), 0),
            Err(Error::NotBallotWord { .. })
        ));
        assert!(matches!(
            theta(&word("NNN"), point(1, 2), 0),
            Err(Error::BallotEndpointMismatch { .. })
        ));
        assert!(matches!(
            theta(&word("NNN"), point(0, 3), 1),
            Err(Error::InfeasibleArchCount { .. })
        ));
    }

    #[test]
    fn theta_inverts_phi_beyond_narrow_targets() {
        // target two levels above the diagonal, where the ballot image keeps
        // rising past level 2k
        let w = word("NENN");
        let image = phi(&w);
        assert_eq!(image, word("NNNN"));
        assert_eq!(theta(&image, point(1, 3), 1).unwrap(), w);
    }

    #[test]
    fn round_trip_up_to_twelve_steps() {
        for total in 0..=12usize {
            for x in 0..=total {
                let y = total - x;
                for w in enumerate_paths(x, y).unwrap() {
                    let k = upper_arch_count(&w);
                    let image = phi(&w);
                    assert!(image.is_ballot(), "phi({w:?}) not a ballot word");
                    assert_eq!(
                        image.endpoint(),
                        ballot_endpoint_for(point(x, y), k).unwrap(),
                        "endpoint shift wrong for {w:?}"
                    );
                    let back = theta(&image, point(x, y), k).unwrap();
                    assert_eq!(back, w, "round trip fails for {w:?}");
                }
            }
        }
    }

    #[test]
    fn theta_is_total_and_a_right_inverse() {
        // every ballot word is hit: for each legal (target, k) reading of a
        // ballot endpoint, theta lands in C_k(target) and phi undoes it
        for total in 0..=10usize {
            for a in 0..=total / 2 {
                let b = total - a;
                for beta in enumerate_ballot(a, b).unwrap() {
                    for k in 0..=(b - a) / 2 {
                        let mut targets = Vec::new();
                        if b - a > 2 * k {
                            targets.push(point(a + k, b - k));
                        }
                        if b - a >= 2 * k && b >= k {
                            targets.push(point(b - k, a + k));
                        }
                        for target in targets {
                            let back = theta(&beta, target, k).unwrap();
                            assert_eq!(back.endpoint(), target, "endpoint off for {beta:?}");
                            assert_eq!(
                                upper_arch_count(&back),
                                k,
                                "arch count off for {beta:?} at {target}, k = {k}"
                            );
                            assert_eq!(phi(&back), beta, "phi does not undo theta on {beta:?}");
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn image_characterization_small() {
        for total in 0..=12usize {
            for x in 0..=total {
                let y = total - x;
                for k in 0..=x.min(y) {
                    let source: Vec<Word> = enumerate_paths(x, y)
                        .unwrap()
                        .into_iter()
                        .filter(|w| upper_arch_count(w) == k)
                        .collect();
                    let images: BTreeSet<Word> = source.iter().map(phi).collect();
                    assert_eq!(
                        images.len(),
                        source.len(),
                        "phi not injective at ({x},{y},{k})"
                    );
                    let target = ballot_endpoint_for(point(x, y), k).unwrap();
                    let expected: BTreeSet<Word> = enumerate_ballot(target.x, target.y)
                        .unwrap()
                        .into_iter()
                        .collect();
                    assert_eq!(images, expected, "image mismatch at ({x},{y},{k})");
                }
            }
        }
    }
}
