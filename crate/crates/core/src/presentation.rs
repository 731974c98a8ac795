//! The presentation container and its verification oracle.
//!
//! Relators are kept canonical, sorted by length-then-symbol order, and
//! duplicate free. Generators are never renumbered: an eliminated generator
//! is tombstoned (`live = false`) and keeps its external name, so transform
//! logs stay readable after any number of eliminations.

use crate::error::CoreError;
use crate::snf;
use crate::word::Relator;
use alloc::string::String;
use alloc::vec::Vec;

/// A named generator slot. Dead slots are retained for stable numbering.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Generator {
    pub name: String,
    pub live: bool,
}

/// A finitely presented group: generator table plus a sorted, deduplicated
/// sequence of canonical relators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Presentation {
    generators: Vec<Generator>,
    relators: Vec<Relator>,
    provenance: Option<String>,
}

/// Abelianization of a presentation: the group modulo commutators,
/// described by its free rank and torsion coefficients.
///
/// Tietze moves preserve the group and therefore these invariants, which
/// makes them the correctness oracle for every transformation the driver
/// emits.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AbelianInvariants {
    /// Rank of the free part.
    pub free_rank: usize,
    /// Nontrivial elementary divisors, each at least 2 and each dividing
    /// the next.
    pub torsion: Vec<i128>,
}

impl Presentation {
    /// Builds a presentation from generator names and relators, validating
    /// that every symbol references a declared generator. Relators are
    /// normalized (sorted, deduplicated, empties dropped).
    pub fn new(names: Vec<String>, relators: Vec<Relator>) -> Result<Presentation, CoreError> {
        let generators: Vec<Generator> = names
            .into_iter()
            .map(|name| Generator { name, live: true })
            .collect();
        for r in &relators {
            for s in r.symbols() {
                if s.generator_index() >= generators.len() {
                    return Err(CoreError::UnknownGenerator {
                        index: s.generator_index(),
                    });
                }
            }
        }
        let mut p = Presentation {
            generators,
            relators,
            provenance: None,
        };
        p.normalize();
        Ok(p)
    }

    /// Assembles a presentation from already-validated parts. The driver and
    /// the log replayer use this; `relators` may be unnormalized.
    pub(crate) fn from_parts(
        generators: Vec<Generator>,
        relators: Vec<Relator>,
        provenance: Option<String>,
    ) -> Presentation {
        let mut p = Presentation {
            generators,
            relators,
            provenance,
        };
        p.normalize();
        p
    }

    pub fn generators(&self) -> &[Generator] {
        &self.generators
    }

    pub fn relators(&self) -> &[Relator] {
        &self.relators
    }

    pub fn provenance(&self) -> Option<&str> {
        self.provenance.as_deref()
    }

    pub fn set_provenance(&mut self, note: Option<String>) {
        self.provenance = note;
    }

    /// Indices of live generators, in table order.
    pub fn live_generators(&self) -> Vec<usize> {
        self.generators
            .iter()
            .enumerate()
            .filter(|(_, g)| g.live)
            .map(|(i, _)| i)
            .collect()
    }

    pub fn live_generator_count(&self) -> usize {
        self.generators.iter().filter(|g| g.live).count()
    }

    /// Sorts relators, collapses exact duplicates, and drops empty relators.
    /// Idempotent. Liveness is untouched: a generator with no occurrences is
    /// still a generator (a free factor); only eliminations kill slots.
    pub fn normalize(&mut self) {
        self.relators.sort();
        self.relators.dedup();
        self.relators.retain(|r| !r.is_empty());
        debug_assert!(self.relators.iter().all(|r| {
            r.symbols().iter().all(|s| {
                self.generators
                    .get(s.generator_index())
                    .is_some_and(|g| g.live)
            })
        }));
    }

    /// Sum of relator lengths.
    pub fn total_length(&self) -> usize {
        self.relators.iter().map(|r| r.len()).sum()
    }

    /// Per-relator occurrence counts of generator `g` (0-based index),
    /// listing only relators where it occurs. Long elimination scans this
    /// for `(g, R)` pairs with count 1.
    pub fn occurrence_profile(&self, g: usize) -> Result<Vec<(usize, usize)>, CoreError> {
        let slot = self
            .generators
            .get(g)
            .ok_or(CoreError::UnknownGenerator { index: g })?;
        if !slot.live {
            return Err(CoreError::DeadGenerator { index: g });
        }
        Ok(self
            .relators
            .iter()
            .enumerate()
            .filter_map(|(i, r)| {
                let count = r.symbols().iter().filter(|s| s.generator_index() == g).count();
                (count > 0).then_some((i, count))
            })
            .collect())
    }

    /// Computes the abelian invariants from the exponent-sum matrix (rows =
    /// relators, columns = live generators) via Smith normal form over the
    /// integers.
    ///
    /// Arithmetic is exact; overflow is reported, never wrapped.
    pub fn abelian_invariants(&self) -> Result<AbelianInvariants, CoreError> {
        let live = self.live_generators();
        let mut column_of = alloc::vec![usize::MAX; self.generators.len()];
        for (col, &g) in live.iter().enumerate() {
            column_of[g] = col;
        }
        let mut matrix = snf::Matrix::new(self.relators.len(), live.len());
        for (row, r) in self.relators.iter().enumerate() {
            for s in r.symbols() {
                let col = column_of[s.generator_index()];
                let delta: i128 = if s.is_inverse() { -1 } else { 1 };
                let v = matrix
                    .get(row, col)
                    .checked_add(delta)
                    .ok_or(CoreError::Overflow)?;
                matrix.set(row, col, v);
            }
        }
        let divisors = snf::elementary_divisors(matrix)?;
        let rank = divisors.len();
        Ok(AbelianInvariants {
            free_rank: live.len() - rank,
            torsion: divisors.into_iter().filter(|&d| d >= 2).collect(),
        })
    }

    /// Exponent sums of one relator over the live generators; used by tests
    /// to cross-check replacements against the abelianization.
    pub fn exponent_vector(&self, r: &Relator) -> Vec<i64> {
        let live = self.live_generators();
        let mut column_of = alloc::vec![usize::MAX; self.generators.len()];
        for (col, &g) in live.iter().enumerate() {
            column_of[g] = col;
        }
        let mut v = alloc::vec![0i64; live.len()];
        for s in r.symbols() {
            v[column_of[s.generator_index()]] += if s.is_inverse() { -1 } else { 1 };
        }
        v
    }

    #[cfg(test)]
    pub(crate) fn generators_mut(&mut self) -> &mut Vec<Generator> {
        &mut self.generators
    }
}
