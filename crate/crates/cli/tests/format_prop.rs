//! Round-trip properties of the presentation text formats.

use proptest::prelude::*;
use tietze_cli::format::{parse, serialize, Format};
use tietze_core::word::{canonical_form, Relator};
use tietze_core::{Presentation, Symbol};

fn random_relators() -> impl Strategy<Value = Vec<Relator>> {
    prop::collection::vec(
        prop::collection::vec((1i32..=6, prop::bool::ANY), 0..12),
        0..6,
    )
    .prop_map(|raws| {
        raws.into_iter()
            .map(|raw| {
                let syms: Vec<Symbol> = raw
                    .into_iter()
                    .map(|(k, inv)| Symbol::new(if inv { -k } else { k }))
                    .collect();
                canonical_form(&syms)
            })
            .collect()
    })
}

fn arbitrary_presentation() -> impl Strategy<Value = Presentation> {
    random_relators().prop_map(|relators| {
        let names: Vec<String> = (0..6).map(|i| format!("g{}", i + 1)).collect();
        Presentation::new(names, relators).unwrap()
    })
}

/// Presentations whose generators are exactly the positional letters the
/// compact format can express: named a.. up to the largest letter used.
fn positional_presentation() -> impl Strategy<Value = Presentation> {
    random_relators().prop_map(|relators| {
        let max_used = relators
            .iter()
            .flat_map(|r| r.symbols())
            .map(|s| s.generator_number() as usize)
            .max()
            .unwrap_or(0);
        let names: Vec<String> = (0..max_used)
            .map(|i| ((b'a' + i as u8) as char).to_string())
            .collect();
        Presentation::new(names, relators).unwrap()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn explicit_round_trip_is_identity(p in arbitrary_presentation()) {
        let text = serialize(&p, Format::Explicit).unwrap();
        let round = parse(&text, Format::Explicit).unwrap();
        prop_assert_eq!(round, p);
    }

    #[test]
    fn compact_round_trip_is_identity(p in positional_presentation()) {
        let text = serialize(&p, Format::Compact).unwrap();
        let round = parse(&text, Format::Compact).unwrap();
        prop_assert_eq!(round, p);
    }
}
