//! Words and relators over a free group alphabet.
//!
//! A [`Word`] is a freely reduced sequence of symbols. A [`Relator`] is
//! additionally cyclically reduced and stored in its canonical rotation: the
//! least word, in length-then-symbol order, among all rotations of the word
//! and all rotations of its formal inverse. Canonicalization makes relator
//! equality absorb rotation and inversion, so duplicates in a presentation
//! are plain sequence equality.

use crate::symbol::Symbol;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

/// A freely reduced word: no symbol is adjacent to its inverse.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Word {
    symbols: Vec<Symbol>,
}

impl Word {
    /// The empty word.
    pub fn empty() -> Word {
        Word { symbols: Vec::new() }
    }

    /// Freely reduces an arbitrary symbol sequence.
    ///
    /// Cancellations cascade: `[a, b, B, A, c]` reduces to `[c]`. The result
    /// is the unique reduced word equal to the input in the free group, and
    /// reduction is idempotent and length-non-increasing.
    pub fn reduced(raw: impl IntoIterator<Item = Symbol>) -> Word {
        let mut stack: Vec<Symbol> = Vec::new();
        for s in raw {
            if stack.last() == Some(&s.inverse()) {
                stack.pop();
            } else {
                stack.push(s);
            }
        }
        Word { symbols: stack }
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

    /// Reversed sequence with every symbol negated. An involution, and the
    /// result of inverting a reduced word is again reduced.
    pub fn invert(&self) -> Word {
        Word {
            symbols: self.symbols.iter().rev().map(|s| s.inverse()).collect(),
        }
    }

    /// The cyclic permutation starting at position `k`, as a raw sequence
    /// (rotations of a reduced word need not be reduced).
    ///
    /// Panics if `k` is out of range; `rotate(0)` on the empty word is `[]`.
    pub fn rotate(&self, k: usize) -> Vec<Symbol> {
        assert!(
            k < self.symbols.len().max(1),
            "rotation index {k} out of range for word of length {}",
            self.symbols.len()
        );
        let mut out = Vec::with_capacity(self.symbols.len());
        out.extend_from_slice(&self.symbols[k..]);
        out.extend_from_slice(&self.symbols[..k]);
        out
    }

    /// Strips matching first/last inverse pairs until none remain. The
    /// result is a conjugate of `self`, freely and cyclically reduced.
    pub fn cyclic_reduce(&self) -> Word {
        let mut lo = 0;
        let mut hi = self.symbols.len();
        while hi - lo >= 2 && self.symbols[lo] == self.symbols[hi - 1].inverse() {
            lo += 1;
            hi -= 1;
        }
        Word {
            symbols: self.symbols[lo..hi].to_vec(),
        }
    }

    /// True when no rotation frees a cancellation across the wraparound.
    pub fn is_cyclically_reduced(&self) -> bool {
        match (self.symbols.first(), self.symbols.last()) {
            (Some(first), Some(last)) if self.symbols.len() >= 2 => *first != last.inverse(),
            _ => true,
        }
    }
}

/// Length-then-positionwise symbol order; the order canonical forms minimize.
impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.symbols
            .len()
            .cmp(&other.symbols.len())
            .then_with(|| self.symbols.cmp(&other.symbols))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

fn fmt_symbols(symbols: &[Symbol], f: &mut fmt::Formatter<'_>) -> fmt::Result {
    if symbols.is_empty() {
        return write!(f, "1");
    }
    for s in symbols {
        write!(f, "{s:?}")?;
    }
    Ok(())
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_symbols(self.symbols(), f)
    }
}

/// Freely reduces a raw symbol sequence. Same as [`Word::reduced`], exposed
/// as a free function to mirror the rest of the word operations.
pub fn free_reduce(raw: &[Symbol]) -> Word {
    Word::reduced(raw.iter().copied())
}

/// A relator: freely and cyclically reduced, stored in canonical rotation.
///
/// Construct with [`canonical_form`]; equality and ordering are then
/// invariant under rotation and formal inversion of the underlying cyclic
/// word. The empty relator is the canonical form of any trivial relator and
/// sorts before every nonempty one.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Relator {
    word: Word,
}

impl Relator {
    /// The empty (trivial) relator.
    pub fn trivial() -> Relator {
        Relator { word: Word::empty() }
    }

    pub fn word(&self) -> &Word {
        &self.word
    }

    pub fn symbols(&self) -> &[Symbol] {
        self.word.symbols()
    }

    pub fn len(&self) -> usize {
        self.word.len()
    }

    pub fn is_empty(&self) -> bool {
        self.word.is_empty()
    }

    /// Symbol at cyclic position `i mod len`. Panics on the empty relator.
    pub fn cyclic(&self, i: usize) -> Symbol {
        let symbols = self.word.symbols();
        symbols[i % symbols.len()]
    }

    /// Proper-power test: `(true, p)` if the relator equals its own rotation
    /// by some period `p` dividing the length with `0 < p < len` (smallest
    /// such `p`), else `(false, len)`.
    ///
    /// Panics on the empty relator.
    pub fn is_proper_power(&self) -> (bool, usize) {
        let symbols = self.word.symbols();
        let l = symbols.len();
        assert!(l > 0, "proper-power test on empty relator");
        for p in 1..l {
            if !l.is_multiple_of(p) {
                continue;
            }
            if (0..l).all(|i| symbols[i] == symbols[(i + p) % l]) {
                return (true, p);
            }
        }
        (false, l)
    }
}

impl fmt::Debug for Relator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_symbols(self.symbols(), f)
    }
}

/// Canonicalizes a raw symbol sequence into a [`Relator`]: free reduction,
/// cyclic reduction, then the least word over all rotations of the result
/// and all rotations of its inverse.
///
/// Idempotent, and invariant under rotating or inverting the input.
pub fn canonical_form(raw: &[Symbol]) -> Relator {
    let core = free_reduce(raw).cyclic_reduce();
    if core.is_empty() {
        return Relator::trivial();
    }
    let inverse = core.invert();
    let l = core.len();
    let mut best: Option<Vec<Symbol>> = None;
    for word in [&core, &inverse] {
        for k in 0..l {
            let candidate = word.rotate(k);
            match &best {
                Some(b) if candidate.as_slice() >= b.as_slice() => {}
                _ => best = Some(candidate),
            }
        }
    }
    Relator {
        // All candidates share one length and are reduced words, so the
        // positionwise minimum is itself freely and cyclically reduced.
        word: Word {
            symbols: best.expect("nonempty core has rotations"),
        },
    }
}
