//! Simplification of finite group presentations by Tietze transformations.
//!
//! A presentation `< g_1, ..., g_d | R_1, ..., R_n >` is stored as a sorted
//! sequence of canonical relators. The engine shortens it with three moves:
//! short eliminations (relators of length 1 and non-involutory relators of
//! length 2), substring replacements (a long common substring of two relators
//! is swapped for its shorter equivalent), and long eliminations (a generator
//! occurring exactly once in some relator is solved for and substituted away).
//!
//! The expensive part is the pairwise circular substring search between
//! relators, so the search can be gated by two independent filters:
//!
//! * hashed 2-signatures ([`sig`]): a rotation- and inversion-invariant bit
//!   set over a word's length-2 substrings that cheaply refutes containment;
//! * change flags ([`flags`]): per-relator dirty bits that skip pairs
//!   unchanged since the last replacement pass.
//!
//! All four strategies (naive, signatures, flags, combined) produce the same
//! final presentation and the same transform log; only the number of explicit
//! searches differs. [`driver::simplify`] runs the control loop and returns
//! the simplified presentation together with search statistics and a
//! replayable [`driver::TransformLog`].
//!
//! The crate is `no_std` (with `alloc`); IO, file formats and the command
//! line front end live in the companion `tietze-cli` crate.

#![no_std]

extern crate alloc;

pub mod driver;
pub mod error;
pub mod flags;
pub mod presentation;
pub mod search;
pub mod sig;
mod snf;
pub mod symbol;
pub mod word;

pub use driver::{simplify, replay, Engine, SimplifyOptions, SimplifyReport, Strategy};
pub use error::CoreError;
pub use presentation::{AbelianInvariants, Generator, Presentation};
pub use symbol::Symbol;
pub use word::{canonical_form, free_reduce, Relator, Word};

/// Monotonic time source for phase timings.
///
/// The core crate never reads a clock itself; callers inject one (the CLI
/// uses `std::time::Instant`). [`NullClock`] reports zero elapsed time and is
/// the default for contexts that do not care about timings.
pub trait Clock {
    /// Nanoseconds elapsed since an arbitrary fixed origin.
    fn now_ns(&self) -> u64;
}

/// A [`Clock`] that always reads zero.
#[derive(Debug, Default, Clone, Copy)]
pub struct NullClock;

impl Clock for NullClock {
    fn now_ns(&self) -> u64 {
        0
    }
}

#[cfg(test)]
pub(crate) mod testutil {
    use crate::symbol::Symbol;
    use crate::word::{canonical_form, Relator, Word};
    use alloc::vec::Vec;

    /// Letters as in the compact notation: `a` is generator 1, `A` its
    /// inverse, and so on.
    pub fn syms(s: &str) -> Vec<Symbol> {
        s.chars()
            .map(|c| {
                if c.is_ascii_lowercase() {
                    Symbol::new(c as i32 - 'a' as i32 + 1)
                } else if c.is_ascii_uppercase() {
                    Symbol::new(-(c as i32 - 'A' as i32 + 1))
                } else {
                    panic!("bad test letter {c:?}")
                }
            })
            .collect()
    }

    pub fn word(s: &str) -> Word {
        Word::reduced(syms(s))
    }

    pub fn rel(s: &str) -> Relator {
        canonical_form(&syms(s))
    }
}
