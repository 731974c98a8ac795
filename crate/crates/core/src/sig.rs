//! Hashed 2-signatures: cheap refutation of "pattern occurs in target".
//!
//! A word is summarized by the set of hash values of its length-2
//! substrings, stored as bits in one machine word. If `W1` is a substring of
//! `W2`, every length-2 substring of `W1` is one of `W2`, so the signature of
//! `W1` must be a subset of the signature of `W2`. Incompatible signatures
//! prove there is no match; compatible signatures prove nothing and the
//! normal search runs.
//!
//! The pair hash is `|f(x1) - f(x2)| mod m` with `f` the identity on signed
//! generator numbers (`f(x^-1) = -f(x)`), so `h(x1 x2) = h(x2^-1 x1^-1)` and
//! one signature per word covers its formal inverse as well. Target
//! signatures include the wraparound pair, making them invariant under
//! rotation, which is exactly what searching all cyclic permutations needs.

use crate::symbol::Symbol;
use crate::word::Relator;
use alloc::vec::Vec;

/// Signature width configuration. 32 bits fits one machine word on the
/// historical hardware and remains the default; 64 is available to probe how
/// discrimination degrades as alphabets shrink and relators grow.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SigConfig {
    m: u32,
}

impl SigConfig {
    /// Creates a configuration with signature width `m`. Panics if
    /// `m < 2` or `m > 64`.
    pub fn new(m: u32) -> SigConfig {
        assert!((2..=64).contains(&m), "signature width {m} out of range");
        SigConfig { m }
    }

    pub fn width(self) -> u32 {
        self.m
    }
}

impl Default for SigConfig {
    fn default() -> Self {
        SigConfig { m: 32 }
    }
}

/// Bit set over hash values of length-2 substrings.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Signature {
    bits: u64,
    m: u32,
}

impl Signature {
    fn empty(cfg: SigConfig) -> Signature {
        Signature { bits: 0, m: cfg.m }
    }

    fn insert(&mut self, bit: u32) {
        debug_assert!(bit < self.m);
        self.bits |= 1 << bit;
    }

    pub fn bits(&self) -> u64 {
        self.bits
    }

    /// Subset test `self & other == self`. A necessary condition for `self`'s
    /// word to occur inside `other`'s.
    ///
    /// Panics if the widths differ.
    pub fn compatible(&self, other: &Signature) -> bool {
        assert_eq!(self.m, other.m, "signature width mismatch");
        self.bits & other.bits == self.bits
    }
}

/// `|f(s1) - f(s2)| mod m` with `f` the identity embedding of signed symbol
/// values. Inversion invariant: `pair_hash(s1, s2) == pair_hash(s2^-1, s1^-1)`.
pub fn pair_hash(s1: Symbol, s2: Symbol, cfg: SigConfig) -> u32 {
    let diff = (s1.value() as i64 - s2.value() as i64).unsigned_abs();
    (diff % cfg.m as u64) as u32
}

/// Signature of a relator read cyclically: all adjacent pairs including the
/// wraparound pair, so the result is invariant under rotation and (by the
/// hash symmetry) under formal inversion. A length-1 relator contributes its
/// single wraparound pair `(x, x)`.
///
/// Panics on the empty relator.
pub fn cyclic_signature(r: &Relator, cfg: SigConfig) -> Signature {
    let symbols = r.symbols();
    assert!(!symbols.is_empty(), "cyclic signature of empty relator");
    let mut sig = Signature::empty(cfg);
    for i in 0..symbols.len() {
        sig.insert(pair_hash(symbols[i], symbols[(i + 1) % symbols.len()], cfg));
    }
    sig
}

/// Signature of a linear word: adjacent pairs only, no wraparound. If the
/// word occurs as a cyclic substring of a relator (or of its inverse), this
/// is a subset of that relator's cyclic signature.
///
/// Panics if the word is shorter than 2 symbols.
pub fn linear_signature(w: &[Symbol], cfg: SigConfig) -> Signature {
    assert!(w.len() >= 2, "linear signature needs length >= 2");
    let mut sig = Signature::empty(cfg);
    for pair in w.windows(2) {
        sig.insert(pair_hash(pair[0], pair[1], cfg));
    }
    sig
}

/// One signature per cyclic start position of the pattern, each taken over
/// the minimal useful match length `floor(l/2) + 1`.
///
/// Inversion invariance of the pair hash makes separate signatures for the
/// inverted pattern unnecessary: `l` signatures cover all `2l` candidate
/// substrings.
pub fn pattern_signatures(pattern: &Relator, cfg: SigConfig) -> Vec<Signature> {
    let l = pattern.len();
    assert!(l >= 2, "pattern signatures need length >= 2");
    let window = l / 2 + 1;
    let mut out = Vec::with_capacity(l);
    let mut buf = Vec::with_capacity(window);
    for start in 0..l {
        buf.clear();
        buf.extend((0..window).map(|d| pattern.cyclic(start + d)));
        out.push(linear_signature(&buf, cfg));
    }
    out
}

/// Signature prefilter for one relator pair: true when some pattern
/// signature is compatible with the target's cyclic signature.
///
/// `false` guarantees [`crate::search::find_useful_match`] returns nothing
/// (no false negatives); `true` guarantees nothing.
pub fn prefilter(pattern: &Relator, target: &Relator, cfg: SigConfig) -> bool {
    let target_sig = cyclic_signature(target, cfg);
    prefilter_with(&pattern_signatures(pattern, cfg), &target_sig)
}

/// Prefilter over precomputed signatures; the driver caches the target
/// signature per relator and the pattern signatures per pass position.
pub fn prefilter_with(pattern_sigs: &[Signature], target_sig: &Signature) -> bool {
    pattern_sigs.iter().any(|s| s.compatible(target_sig))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::testutil::{rel, syms};
    use crate::word::canonical_form;

    fn cfg() -> SigConfig {
        SigConfig::default()
    }

    fn sym(v: i32) -> Symbol {
        Symbol::new(v)
    }

    #[test]
    fn pair_hash_examples() {
        assert_eq!(pair_hash(sym(1), sym(2), cfg()), 1); // (a, b)
        assert_eq!(pair_hash(sym(7), sym(7), cfg()), 0); // (x, x)
        // (B, A) hashes like (a, b): inversion invariance.
        assert_eq!(pair_hash(sym(-2), sym(-1), cfg()), 1);
    }

    #[test]
    fn pair_hash_is_inversion_invariant_exhaustively() {
        let alphabet: Vec<Symbol> = (1..=6).flat_map(|k| [sym(k), sym(-k)]).collect();
        for &a in &alphabet {
            for &b in &alphabet {
                assert_eq!(
                    pair_hash(a, b, cfg()),
                    pair_hash(b.inverse(), a.inverse(), cfg()),
                    "pair ({a:?}, {b:?})"
                );
            }
        }
    }

    #[test]
    fn cyclic_signature_examples() {
        assert_eq!(cyclic_signature(&rel("ab"), cfg()).bits(), 1 << 1);
        assert_eq!(cyclic_signature(&rel("a"), cfg()).bits(), 1 << 0);
    }

    #[test]
    fn cyclic_signature_rotation_and_inversion_invariant() {
        for s in ["ab", "abC", "ebabeG", "aabab", "xyzXY"] {
            let w = crate::word::free_reduce(&syms(s)).cyclic_reduce();
            let base = cyclic_signature(&canonical_form(w.symbols()), cfg());
            for k in 0..w.len() {
                let rotated = canonical_form(&w.rotate(k));
                assert_eq!(cyclic_signature(&rotated, cfg()), base);
            }
            let inverted = canonical_form(w.invert().symbols());
            assert_eq!(cyclic_signature(&inverted, cfg()), base);
        }
    }

    #[test]
    #[should_panic(expected = "empty relator")]
    fn cyclic_signature_rejects_empty() {
        cyclic_signature(&crate::word::Relator::trivial(), cfg());
    }

    #[test]
    fn linear_signature_examples() {
        assert_eq!(linear_signature(&syms("aba"), cfg()).bits(), 1 << 1);
        assert_eq!(linear_signature(&syms("ac"), cfg()).bits(), 1 << 2);
        // A prefix's signature is a subset of the whole word's.
        let whole = linear_signature(&syms("abcd"), cfg());
        let prefix = linear_signature(&syms("ab"), cfg());
        assert!(prefix.compatible(&whole));
    }

    #[test]
    #[should_panic(expected = "length >= 2")]
    fn linear_signature_rejects_short_words() {
        linear_signature(&syms("a"), cfg());
    }

    #[test]
    fn pattern_signatures_abab() {
        // Every length-3 cyclic subword of abab has pairs hashing to 1.
        let sigs = pattern_signatures(&rel("abab"), cfg());
        assert_eq!(sigs.len(), 4);
        for s in sigs {
            assert_eq!(s.bits(), 1 << 1);
        }
    }

    #[test]
    fn pattern_signatures_length_two() {
        // l = 2: window is 2, each signature is the single-pair signature.
        let sigs = pattern_signatures(&rel("ab"), cfg());
        assert_eq!(sigs.len(), 2);
        for s in sigs {
            assert_eq!(s.bits(), 1 << 1);
        }
    }

    #[test]
    fn compatible_is_subset_test() {
        let small = linear_signature(&syms("ab"), cfg()); // {1}
        let large = linear_signature(&syms("aab"), cfg()); // {0, 1}
        let other = linear_signature(&syms("ac"), cfg()); // {2}
        assert!(small.compatible(&large));
        assert!(!other.compatible(&small));
        let empty = Signature::empty(cfg());
        assert!(empty.compatible(&small));
        assert!(empty.compatible(&empty));
    }

    #[test]
    #[should_panic(expected = "width mismatch")]
    fn compatible_rejects_width_mismatch() {
        let a = linear_signature(&syms("ab"), SigConfig::new(32));
        let b = linear_signature(&syms("ab"), SigConfig::new(64));
        a.compatible(&b);
    }

    #[test]
    fn prefilter_examples() {
        assert!(prefilter(&rel("abab"), &rel("ababab"), cfg()));
        // Pattern introduces bit 2 via c; a target over {a, b} only has bit 1.
        assert!(!prefilter(&rel("acac"), &rel("abab"), cfg()));
    }

    #[test]
    fn prefilter_passes_on_known_matching_pairs() {
        // Matching pairs must pass the filter (no false negatives).
        assert!(prefilter(&rel("ebabeG"), &rel("babegH"), cfg()));
        assert!(prefilter(&rel("ebabeaaBaB"), &rel("EbAbAAbAbAbAA"), cfg()));
    }
}
