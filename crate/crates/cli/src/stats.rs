//! Search statistics emission: a diffable comma-separated report and a
//! human-readable table.
//!
//! The report has one row per (pass, phase) with the phases `elimination`,
//! `flags`, `signature` and `search`, plus one `summary` row per strategy.
//! Counters appear on the `search` rows (and the summary), so every row
//! satisfies `pairs_considered = skipped_flags + skipped_sig + searched`.

use std::fmt::Write as _;
use tietze_core::driver::{PassStats, SearchStats};

pub const CSV_HEADER: &str =
    "strategy,pass_number,phase,pairs_considered,skipped_flags,skipped_sig,searched,matches,elapsed_ms";

fn ms(ns: u64) -> u64 {
    ns / 1_000_000
}

fn phase_row(out: &mut String, strategy: &str, pass: usize, phase: &str, ns: u64) {
    let _ = writeln!(out, "{strategy},{pass},{phase},0,0,0,0,0,{}", ms(ns));
}

fn counter_row(out: &mut String, strategy: &str, pass: usize, phase: &str, p: &PassStats, ns: u64) {
    let _ = writeln!(
        out,
        "{strategy},{pass},{phase},{},{},{},{},{},{}",
        p.pairs_considered,
        p.skipped_by_flags,
        p.skipped_by_signature,
        p.searched,
        p.matches,
        ms(ns)
    );
}

/// Appends the rows for one strategy's run (no header).
pub fn append_csv(out: &mut String, strategy: &str, stats: &SearchStats) {
    for pass in &stats.passes {
        let n = pass.pass_number;
        phase_row(out, strategy, n, "elimination", pass.elimination_ns);
        phase_row(out, strategy, n, "flags", pass.flag_ns);
        phase_row(out, strategy, n, "signature", pass.sig_ns);
        counter_row(out, strategy, n, "search", pass, pass.search_ns);
    }
    let totals = stats.totals();
    let total_ns = totals.elimination_ns + totals.flag_ns + totals.sig_ns + totals.search_ns;
    counter_row(out, strategy, totals.pass_number, "summary", &totals, total_ns);
}

/// Full report for one or more strategies.
pub fn csv(entries: &[(&str, &SearchStats)]) -> String {
    let mut out = String::from(CSV_HEADER);
    out.push('\n');
    for (strategy, stats) in entries {
        append_csv(&mut out, strategy, stats);
    }
    out
}

/// Compact per-strategy table for standard output.
pub fn human_table(strategy: &str, stats: &SearchStats) -> String {
    let mut out = String::new();
    let totals = stats.totals();
    let _ = writeln!(
        out,
        "strategy {strategy}: {} passes, {} pairs, {} searched, {} matched",
        totals.pass_number, totals.pairs_considered, totals.searched, totals.matches
    );
    let _ = writeln!(
        out,
        "{:>5} {:>8} {:>11} {:>9} {:>9} {:>8} {:>8} {:>8} {:>8} {:>9}",
        "pass",
        "pairs",
        "skip_flags",
        "skip_sig",
        "searched",
        "matches",
        "elim_ms",
        "flag_ms",
        "sig_ms",
        "search_ms"
    );
    for p in &stats.passes {
        let _ = writeln!(
            out,
            "{:>5} {:>8} {:>11} {:>9} {:>9} {:>8} {:>8} {:>8} {:>8} {:>9}",
            p.pass_number,
            p.pairs_considered,
            p.skipped_by_flags,
            p.skipped_by_signature,
            p.searched,
            p.matches,
            ms(p.elimination_ns),
            ms(p.flag_ns),
            ms(p.sig_ns),
            ms(p.search_ns)
        );
    }
    let _ = writeln!(
        out,
        "{:>5} {:>8} {:>11} {:>9} {:>9} {:>8} {:>8} {:>8} {:>8} {:>9}",
        "total",
        totals.pairs_considered,
        totals.skipped_by_flags,
        totals.skipped_by_signature,
        totals.searched,
        totals.matches,
        ms(totals.elimination_ns),
        ms(totals.flag_ns),
        ms(totals.sig_ns),
        ms(totals.search_ns)
    );
    out
}

/// Percentage of naive searches avoided by a filtered strategy.
pub fn saving_percent(naive_searched: u64, searched: u64) -> f64 {
    if naive_searched == 0 {
        0.0
    } else {
        100.0 * (naive_searched - searched) as f64 / naive_searched as f64
    }
}
