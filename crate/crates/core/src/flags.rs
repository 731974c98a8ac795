//! Change flags: skip relator pairs that cannot have gained a match.
//!
//! Two booleans travel with each relator through sorts and replacements:
//! `cslp` (changed since last pass) and `ctp` (changed this pass). A pair is
//! searched only if at least one member is flagged; an unflagged pair was
//! already searched with exactly these values and found nothing, so skipping
//! it cannot change the outcome. At the end of each replacement pass the
//! `cslp` flags are reset to the current `ctp` flags and the `ctp` flags are
//! cleared.

/// Per-relator change flags. Attached to the relator slot, not the position,
/// so re-sorting keeps attribution correct.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PassFlags {
    /// Changed since the last replacement pass.
    pub cslp: bool,
    /// Changed during the current replacement pass.
    pub ctp: bool,
}

impl PassFlags {
    /// Initial state: every relator counts as changed, nothing has changed
    /// this pass.
    pub fn initial() -> PassFlags {
        PassFlags { cslp: true, ctp: false }
    }

    /// Marks a change made by a short or long elimination.
    pub fn mark_elimination_change(&mut self) {
        self.cslp = true;
    }

    /// Marks a change made by a substring replacement during a pass.
    pub fn mark_pass_change(&mut self) {
        self.ctp = true;
    }

    /// True when the relator has changed since the last pass began,
    /// including changes made earlier in the current pass.
    pub fn flagged(self) -> bool {
        self.cslp || self.ctp
    }

    /// End-of-pass reset: `cslp` takes the value of `ctp`, `ctp` clears.
    pub fn end_pass(&mut self) {
        self.cslp = self.ctp;
        self.ctp = false;
    }
}

/// Pair gate: search only if at least one member is flagged.
pub fn should_search(a: PassFlags, b: PassFlags) -> bool {
    a.flagged() || b.flagged()
}

/// A standalone flag table, one entry per relator slot.
#[derive(Clone, Debug, Default)]
pub struct FlagTable {
    flags: alloc::vec::Vec<PassFlags>,
}

impl FlagTable {
    /// One initial flag pair per relator.
    pub fn init(relator_count: usize) -> FlagTable {
        FlagTable {
            flags: alloc::vec![PassFlags::initial(); relator_count],
        }
    }

    pub fn len(&self) -> usize {
        self.flags.len()
    }

    pub fn is_empty(&self) -> bool {
        self.flags.is_empty()
    }

    pub fn get(&self, slot: usize) -> PassFlags {
        self.flags[slot]
    }

    pub fn mark_elimination_change(&mut self, slot: usize) {
        self.flags[slot].mark_elimination_change();
    }

    pub fn mark_pass_change(&mut self, slot: usize) {
        self.flags[slot].mark_pass_change();
    }

    pub fn should_search(&self, i: usize, j: usize) -> bool {
        should_search(self.flags[i], self.flags[j])
    }

    pub fn end_pass(&mut self) {
        for f in &mut self.flags {
            f.end_pass();
        }
    }
}
