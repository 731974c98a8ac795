//! Signed generator symbols.

use core::cmp::Ordering;
use core::fmt;
use core::num::NonZeroI32;

/// One letter of a word: generator `k` is the positive value `k`, its formal
/// inverse is `-k`. Zero is not a symbol.
///
/// Symbols are totally ordered with each generator directly before its
/// inverse: `g1 < g1^-1 < g2 < g2^-1 < ...`. Words compare by length first
/// and then position by position in this order, which fixes the canonical
/// form of a relator.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Symbol(NonZeroI32);

impl Symbol {
    /// Builds a symbol from its signed representation.
    ///
    /// Panics if `value` is zero.
    pub fn new(value: i32) -> Symbol {
        Symbol(NonZeroI32::new(value).expect("symbol value must be nonzero"))
    }

    /// The generator numbered `k` (1-based), as a positive symbol.
    pub fn generator(k: u32) -> Symbol {
        assert!(k > 0, "generators are numbered from 1");
        Symbol::new(k as i32)
    }

    /// Signed representation, never zero.
    pub fn value(self) -> i32 {
        self.0.get()
    }

    /// The formal inverse; an involution.
    pub fn inverse(self) -> Symbol {
        Symbol(NonZeroI32::new(-self.0.get()).expect("negation of nonzero is nonzero"))
    }

    /// True if this is the inverse letter of a generator.
    pub fn is_inverse(self) -> bool {
        self.0.get() < 0
    }

    /// 1-based generator number, ignoring the sign.
    pub fn generator_number(self) -> u32 {
        self.0.get().unsigned_abs()
    }

    /// 0-based index into a generator table.
    pub fn generator_index(self) -> usize {
        self.generator_number() as usize - 1
    }

    /// Comparison key: generator `k` maps to `2k-1`, its inverse to `2k`.
    pub fn order_key(self) -> u64 {
        let k = self.generator_number() as u64;
        if self.is_inverse() {
            2 * k
        } else {
            2 * k - 1
        }
    }
}

impl Ord for Symbol {
    fn cmp(&self, other: &Self) -> Ordering {
        self.order_key().cmp(&other.order_key())
    }
}

impl PartialOrd for Symbol {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        // Compact letters for small alphabets, g5/G5 style beyond.
        let n = self.generator_number();
        if n <= 26 {
            let c = (b'a' + (n - 1) as u8) as char;
            if self.is_inverse() {
                write!(f, "{}", c.to_ascii_uppercase())
            } else {
                write!(f, "{c}")
            }
        } else if self.is_inverse() {
            write!(f, "G{n}")
        } else {
            write!(f, "g{n}")
        }
    }
}
