//! Anchored brute-force search for a useful common substring of two
//! relators, over circular words with formal inverses.
//!
//! To shorten a target using a pattern of length `l`, a common substring
//! must be longer than half the pattern, so it covers pattern position `0`
//! or position `l/2` (or their images in the inverted pattern). The scan
//! therefore anchors on those at most two absolute symbol values: for each
//! target offset it compares absolute values, fixes the orientation from the
//! sign relation at the anchor, and extends the match circularly both ways
//! to its maximum, capped at `min(l, target length)`. The first extension
//! reaching the useful threshold `l/2 + 1` wins.
//!
//! For a proper-power pattern every arc of useful length covers a whole
//! period, so anchoring on position `0` alone suffices.

use crate::symbol::Symbol;
use crate::word::{canonical_form, Relator};
use alloc::vec::Vec;

/// A useful common substring `v` of a pattern and a target relator.
///
/// With `q` the pattern's canonical word when `pattern_inverted` is false
/// and its formal inverse otherwise, the `v_length` symbols read cyclically
/// from `pattern_start` in `q` equal those read cyclically from
/// `target_start` in the target.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct MatchSpec {
    /// Length of `v`; at least `l/2 + 1` and at most `min(l, target length)`.
    pub v_length: usize,
    /// Offset of `v` in the target's cyclic word.
    pub target_start: usize,
    /// Offset of `v` in the (possibly inverted) pattern's cyclic word.
    pub pattern_start: usize,
    /// True when `v` is taken from the pattern's formal inverse.
    pub pattern_inverted: bool,
}

/// Minimal useful match length for a pattern of length `l`:
/// `floor(l/2) + 1`, equivalently `ceil((l+1)/2)`.
pub fn useful_threshold(l: usize) -> usize {
    l / 2 + 1
}

fn cyc_add(base: usize, delta: usize, len: usize) -> usize {
    (base + delta % len) % len
}

fn cyc_sub(base: usize, delta: usize, len: usize) -> usize {
    (base + len - delta % len) % len
}

/// Deterministic anchored scan for the first useful match.
///
/// Returns `None` when no anchor occurrence extends to the threshold; this
/// is the common case and a normal outcome. Patterns shorter than 2 symbols
/// and empty targets never match.
pub fn find_useful_match(pattern: &Relator, target: &Relator) -> Option<MatchSpec> {
    let p = pattern.symbols();
    let t = target.symbols();
    let (l, n) = (p.len(), t.len());
    if l < 2 || n == 0 {
        return None;
    }
    let threshold = useful_threshold(l);
    let cap = l.min(n);
    if threshold > cap {
        return None;
    }
    let anchors: &[usize] = if pattern.is_proper_power().0 {
        &[0]
    } else {
        &[0, l / 2]
    };

    for t_off in 0..n {
        for &a in anchors {
            if p[a].generator_number() != t[t_off].generator_number() {
                continue;
            }
            let inverted = p[a] != t[t_off];
            // Forward from the anchor (which is matched), then backward.
            let mut fwd = 1;
            while fwd < cap {
                let ts = t[cyc_add(t_off, fwd, n)];
                let ps = if inverted {
                    p[cyc_sub(a, fwd, l)].inverse()
                } else {
                    p[cyc_add(a, fwd, l)]
                };
                if ts != ps {
                    break;
                }
                fwd += 1;
            }
            let mut back = 0;
            while fwd + back < cap {
                let k = back + 1;
                let ts = t[cyc_sub(t_off, k, n)];
                let ps = if inverted {
                    p[cyc_add(a, k, l)].inverse()
                } else {
                    p[cyc_sub(a, k, l)]
                };
                if ts != ps {
                    break;
                }
                back += 1;
            }
            let v_length = fwd + back;
            if v_length >= threshold {
                let target_start = cyc_sub(t_off, back, n);
                let pattern_start = if inverted {
                    // Position in the inverted word of the earliest matched
                    // pattern symbol.
                    l - 1 - cyc_add(a, back, l)
                } else {
                    cyc_sub(a, back, l)
                };
                return Some(MatchSpec {
                    v_length,
                    target_start,
                    pattern_start,
                    pattern_inverted: inverted,
                });
            }
        }
    }
    None
}

/// Replaces the matched substring: with the (possibly inverted) pattern
/// rotated as `u . v` and the target rotated as `w . v`, the target relator
/// is replaced by the canonical form of `w . u^-1`, which is strictly
/// shorter than the target.
///
/// Panics if the match data does not describe an actual match on this pair;
/// that signals an internal inconsistency.
pub fn apply_replacement(pattern: &Relator, target: &Relator, m: &MatchSpec) -> Relator {
    let t = target.symbols();
    let (l, n) = (pattern.len(), t.len());
    assert!(
        m.v_length >= useful_threshold(l) && m.v_length <= l.min(n),
        "malformed MatchSpec: v_length {} out of range",
        m.v_length
    );
    let q = if m.pattern_inverted {
        pattern.word().invert()
    } else {
        pattern.word().clone()
    };
    let q = q.symbols();
    for d in 0..m.v_length {
        let ps = q[cyc_add(m.pattern_start, d, l)];
        let ts = t[cyc_add(m.target_start, d, n)];
        assert!(
            ps == ts,
            "malformed MatchSpec: symbols disagree at offset {d}"
        );
    }
    let mut raw: Vec<Symbol> = Vec::with_capacity(n + l - 2 * m.v_length);
    // w: the target minus v.
    for d in 0..n - m.v_length {
        raw.push(t[cyc_add(m.target_start + m.v_length, d, n)]);
    }
    // u^-1: the pattern complement, reversed and negated.
    for d in (0..l - m.v_length).rev() {
        raw.push(q[cyc_add(m.pattern_start + m.v_length, d, l)].inverse());
    }
    canonical_form(&raw)
}

/// Exhaustive reference search: every target offset, pattern offset and
/// orientation, with lengths from `min(l, target length)` down to the
/// threshold. Ground truth for whether a useful match exists; the anchored
/// scan must agree on existence.
pub fn brute_force_oracle(pattern: &Relator, target: &Relator) -> Option<MatchSpec> {
    let p = pattern.symbols();
    let t = target.symbols();
    let (l, n) = (p.len(), t.len());
    if l < 2 || n == 0 {
        return None;
    }
    let threshold = useful_threshold(l);
    let cap = l.min(n);
    if threshold > cap {
        return None;
    }
    let inverse = pattern.word().invert();
    for v_length in (threshold..=cap).rev() {
        for t_off in 0..n {
            for (inverted, word) in [(false, p), (true, inverse.symbols())] {
                for p_off in 0..l {
                    if (0..v_length)
                        .all(|d| word[cyc_add(p_off, d, l)] == t[cyc_add(t_off, d, n)])
                    {
                        return Some(MatchSpec {
                            v_length,
                            target_start: t_off,
                            pattern_start: p_off,
                            pattern_inverted: inverted,
                        });
                    }
                }
            }
        }
    }
    None
}
