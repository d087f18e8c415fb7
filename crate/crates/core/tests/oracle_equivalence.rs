//! Random-corpus equivalence between the fast pipelines and the naive
//! oracles: the trie language, the per-position tables in both link modes,
//! and the characterization of the specific set through minimal absent
//! words.

mod common;

use std::collections::BTreeSet;

use rand::Rng;
use tsf_core::oracle;
use tsf_core::{specific_word_report, Dawg, LinkMode, ReferenceMachine, Source, SpecificTrie};

#[test]
fn trie_language_equals_the_naive_specific_set() {
    let mut rng = common::rng(303);
    for round in 0..1000 {
        let alpha = rng.gen_range(1..=4);
        let reference = common::random_words(&mut rng, alpha, 5, 30);
        let target = common::random_words(&mut rng, alpha, 5, 30);
        let refs = common::as_slices(&reference);
        let tgts = common::as_slices(&target);

        let dawg = Dawg::build(
            refs.iter()
                .map(|w| (*w, Source::Reference))
                .chain(tgts.iter().map(|w| (*w, Source::Target))),
        );
        let fast = SpecificTrie::build(&dawg).words();
        let naive = oracle::specific_naive(&refs, &tgts);
        assert_eq!(
            fast, naive,
            "round {round}: mismatch for reference {refs:?} target {tgts:?}"
        );
    }
}

#[test]
fn specific_set_is_the_absent_word_set_restricted_to_the_target() {
    let mut rng = common::rng(404);
    for round in 0..1000 {
        let alpha = rng.gen_range(1..=4);
        let reference = common::random_words(&mut rng, alpha, 5, 30);
        let target = common::random_words(&mut rng, alpha, 5, 30);
        let refs = common::as_slices(&reference);
        let tgts = common::as_slices(&target);

        let alphabet: BTreeSet<u8> = refs
            .iter()
            .chain(tgts.iter())
            .flat_map(|w| w.iter().copied())
            .collect();
        let alphabet: Vec<u8> = alphabet.into_iter().collect();
        let fact_t = oracle::factors_naive(&tgts);

        let via_absent_words: Vec<Vec<u8>> = oracle::maw_naive(&refs, &alphabet)
            .into_iter()
            .filter(|w| fact_t.contains(w))
            .collect();
        let report = specific_word_report(&refs, &tgts);
        assert_eq!(
            report.words, via_absent_words,
            "round {round}: reference {refs:?} target {tgts:?}"
        );
    }
}

#[test]
fn tables_match_the_oracle_in_both_modes() {
    let mut rng = common::rng(505);
    for round in 0..1000 {
        let alpha = rng.gen_range(1..=4);
        let reference = common::random_words(&mut rng, alpha, 5, 40);
        let target_len = rng.gen_range(0..=60);
        // target drawn over a possibly larger alphabet so foreign letters occur
        let target = common::random_word(&mut rng, (alpha + 1).min(4), target_len);
        let refs = common::as_slices(&reference);

        let machine = ReferenceMachine::build(refs.iter().copied());
        let naive = oracle::ts_table_naive(&refs, &target);
        let plain = machine.ts_table(&target, LinkMode::PlainS);
        let optimized = machine.ts_table(&target, LinkMode::OptimizedG);
        assert_eq!(plain, naive, "round {round}: reference {refs:?} target {target:?}");
        assert_eq!(optimized, naive, "round {round}: reference {refs:?} target {target:?}");
    }
}

#[test]
fn emitted_sets_are_prefix_free_and_suffix_free() {
    let mut rng = common::rng(606);
    for _ in 0..400 {
        let alpha = rng.gen_range(1..=4);
        let reference = common::random_words(&mut rng, alpha, 5, 30);
        let target = common::random_words(&mut rng, alpha, 5, 30);
        let refs = common::as_slices(&reference);
        let tgts = common::as_slices(&target);

        let words = specific_word_report(&refs, &tgts).words;
        for u in &words {
            for v in &words {
                if u != v {
                    assert!(!v.starts_with(u), "{u:?} is a prefix of {v:?}");
                    assert!(!v.ends_with(u), "{u:?} is a suffix of {v:?}");
                }
            }
        }
    }
}

#[test]
fn every_emitted_word_is_a_minimal_new_target_factor() {
    let mut rng = common::rng(707);
    for _ in 0..400 {
        let alpha = rng.gen_range(1..=4);
        let reference = common::random_words(&mut rng, alpha, 5, 30);
        let target = common::random_words(&mut rng, alpha, 5, 30);
        let refs = common::as_slices(&reference);
        let tgts = common::as_slices(&target);

        let ref_dawg = Dawg::build(refs.iter().map(|w| (*w, Source::Reference)));
        let tgt_dawg = Dawg::build(tgts.iter().map(|w| (*w, Source::Reference)));

        for u in specific_word_report(&refs, &tgts).words {
            assert!(tgt_dawg.accepts_factor(&u), "{u:?} is not a target factor");
            assert!(!ref_dawg.accepts_factor(&u), "{u:?} occurs in the reference");
            for i in 0..u.len() {
                for j in i..=u.len() {
                    if (i, j) != (0, u.len()) {
                        assert!(
                            ref_dawg.accepts_factor(&u[i..j]),
                            "proper factor {:?} of {u:?} missing from the reference",
                            &u[i..j]
                        );
                    }
                }
            }
        }
    }
}
