//! Deterministic corpus generator: inverse Tietze moves that make a
//! presentation worse without changing the group.
//!
//! Two moves are drawn from a seeded pseudo-random sequence:
//!
//! * **introduce**: add a fresh generator `g` with defining relator
//!   `g . w^-1` for a random word `w` (length 2 to 5) over the live
//!   generators, then rewrite one random cyclic occurrence of `w` in an
//!   existing relator by `g`, when one exists;
//! * **entangle**: replace a relator `R_j` by the canonical form of
//!   `R_j . c . R_i^(+-1) . c^-1` for a random other relator `R_i` and a
//!   random conjugator `c` of length at most 3.
//!
//! Randomness comes from SplitMix64, chosen because it is tiny, well known
//! and exactly reproducible across platforms: identical `(seed, op_count)`
//! always yields an identical presentation.

use crate::error::CliError;
use tietze_core::word::canonical_form;
use tietze_core::{Presentation, Relator, Symbol};

/// SplitMix64 pseudo-random generator (Steele, Lea and Flood's mixer, the
/// standard 64-bit splittable recurrence).
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> SplitMix64 {
        SplitMix64 { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    /// Uniform-ish value in `[0, n)`. The modulo bias is irrelevant here;
    /// reproducibility is the contract.
    pub fn below(&mut self, n: u64) -> u64 {
        debug_assert!(n > 0);
        self.next_u64() % n
    }
}

/// A freely reduced random word of exactly `len` symbols over `gen_count`
/// generators (empty when `len` is 0).
fn random_word(rng: &mut SplitMix64, gen_count: usize, len: usize) -> Vec<Symbol> {
    let mut out: Vec<Symbol> = Vec::with_capacity(len);
    while out.len() < len {
        let gen = rng.below(gen_count as u64) as i32 + 1;
        let value = if rng.below(2) == 1 { -gen } else { gen };
        let s = Symbol::new(value);
        if out.last() == Some(&s.inverse()) {
            continue;
        }
        out.push(s);
    }
    out
}

fn fresh_name(names: &[String]) -> String {
    let mut n = 1;
    loop {
        let candidate = format!("u{n}");
        if !names.contains(&candidate) {
            return candidate;
        }
        n += 1;
    }
}

/// All cyclic occurrences of `w` in `r`, as `(offset)` positions.
fn cyclic_occurrences(r: &Relator, w: &[Symbol]) -> Vec<usize> {
    if r.len() < w.len() {
        return Vec::new();
    }
    (0..r.len())
        .filter(|&o| (0..w.len()).all(|d| r.cyclic(o + d) == w[d]))
        .collect()
}

/// Applies `op_count` seeded inverse Tietze moves. The group is preserved
/// by construction; the result is normalized after every move.
pub fn uglify(p: &Presentation, seed: u64, op_count: usize) -> Result<Presentation, CliError> {
    if op_count == 0 {
        return Err(CliError::Usage("uglify needs at least one op".into()));
    }
    let mut rng = SplitMix64::new(seed);
    let mut names: Vec<String> = p.generators().iter().map(|g| g.name.clone()).collect();
    let mut relators: Vec<Relator> = p.relators().to_vec();

    for _ in 0..op_count {
        let entangle = relators.len() >= 2 && rng.below(2) == 1;
        if entangle {
            let n = relators.len() as u64;
            let j = rng.below(n) as usize;
            let i = loop {
                let i = rng.below(n) as usize;
                if i != j {
                    break i;
                }
            };
            let invert_ri = rng.below(2) == 1;
            let conj_len = rng.below(4) as usize;
            let c = random_word(&mut rng, names.len(), conj_len);

            let mut raw: Vec<Symbol> = relators[j].symbols().to_vec();
            raw.extend_from_slice(&c);
            if invert_ri {
                raw.extend(relators[i].symbols().iter().rev().map(|s| s.inverse()));
            } else {
                raw.extend_from_slice(relators[i].symbols());
            }
            raw.extend(c.iter().rev().map(|s| s.inverse()));
            relators[j] = canonical_form(&raw);
        } else {
            if names.is_empty() {
                break; // nothing to build words from
            }
            let wlen = 2 + rng.below(4) as usize;
            let w = random_word(&mut rng, names.len(), wlen);

            // Collect occurrence sites before the defining relator exists.
            let sites: Vec<(usize, usize)> = relators
                .iter()
                .enumerate()
                .flat_map(|(ri, r)| {
                    cyclic_occurrences(r, &w).into_iter().map(move |o| (ri, o))
                })
                .collect();

            names.push(fresh_name(&names));
            let g = Symbol::new(names.len() as i32);
            let mut defining: Vec<Symbol> = vec![g];
            defining.extend(w.iter().rev().map(|s| s.inverse()));
            relators.push(canonical_form(&defining));

            if !sites.is_empty() {
                let (ri, o) = sites[rng.below(sites.len() as u64) as usize];
                let r = relators[ri].clone();
                let mut raw: Vec<Symbol> = (0..r.len() - w.len())
                    .map(|d| r.cyclic(o + w.len() + d))
                    .collect();
                raw.push(g);
                relators[ri] = canonical_form(&raw);
            }
        }
        // Keep the working set normalized so indices drawn next round are
        // well defined.
        let normalized = Presentation::new(names.clone(), relators)?;
        relators = normalized.relators().to_vec();
    }

    let mut out = Presentation::new(names, relators)?;
    out.set_provenance(Some(format!("uglified seed={seed} ops={op_count}")));
    Ok(out)
}
