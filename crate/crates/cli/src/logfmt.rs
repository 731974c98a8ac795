//! Transform log text format: one move per line.
//!
//! ```text
//! SHORT_ELIM g=<name> via=<word>
//! LONG_ELIM g=<name> via=<word> sub=<word>
//! REPLACE target=<slot> pattern=<slot> old=<word> new=<word>
//! DEDUP rel=<word>
//! DROP_TRIVIAL rel=<word>
//! ```
//!
//! Words use the explicit syntax without spaces (`a*b^-2`), `1` for the
//! empty word. Generator names come from the full table, so references stay
//! stable across eliminations.

use crate::format::word_text;
use std::fmt::Write as _;
use tietze_core::driver::{Move, TransformLog};
use tietze_core::Presentation;

/// Renders a log using the generator names of `p` (which must contain the
/// full table the log refers to, tombstoned slots included).
pub fn log_text(log: &TransformLog, p: &Presentation) -> String {
    let name_of = |g: usize| p.generators()[g].name.clone();
    let mut out = String::new();
    for mv in &log.moves {
        match mv {
            Move::ShortElim { generator, via } => {
                let _ = writeln!(
                    out,
                    "SHORT_ELIM g={} via={}",
                    name_of(*generator),
                    word_text(via.symbols(), &name_of)
                );
            }
            Move::LongElim { generator, via, solution } => {
                let _ = writeln!(
                    out,
                    "LONG_ELIM g={} via={} sub={}",
                    name_of(*generator),
                    word_text(via.symbols(), &name_of),
                    word_text(solution.symbols(), &name_of)
                );
            }
            Move::Replace { pattern_slot, target_slot, old, new } => {
                let _ = writeln!(
                    out,
                    "REPLACE target={} pattern={} old={} new={}",
                    target_slot,
                    pattern_slot,
                    word_text(old.symbols(), &name_of),
                    word_text(new.symbols(), &name_of)
                );
            }
            Move::Dedup { relator } => {
                let _ = writeln!(out, "DEDUP rel={}", word_text(relator.symbols(), &name_of));
            }
            Move::DropTrivial { relator } => {
                let _ = writeln!(
                    out,
                    "DROP_TRIVIAL rel={}",
                    word_text(relator.symbols(), &name_of)
                );
            }
        }
    }
    out
}
