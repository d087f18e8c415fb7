//! Behavioral properties of the scanner: the matched-suffix invariant, the
//! arithmetic of emitted positions, write-once tables, and the failure-link
//! budgets of both modes.

mod common;

use rand::Rng;
use tsf_core::oracle;
use tsf_core::{LinkMode, ReferenceMachine};

struct Instance {
    reference: Vec<Vec<u8>>,
    target: Vec<u8>,
}

fn random_instances(seed: u64, count: usize) -> Vec<Instance> {
    let mut rng = common::rng(seed);
    (0..count)
        .map(|_| {
            let alpha = rng.gen_range(1..=4);
            let reference = common::random_words(&mut rng, alpha, 5, 40);
            let target_len = rng.gen_range(0..=60);
            let target = common::random_word(&mut rng, (alpha + 1).min(4), target_len);
            Instance { reference, target }
        })
        .collect()
}

/// Longest suffix of `consumed` that is a factor of the reference,
/// determined by direct substring search.
fn longest_reference_suffix(consumed: &[u8], reference: &[&[u8]]) -> Vec<u8> {
    for k in 0..=consumed.len() {
        let suffix = &consumed[k..];
        let present = suffix.is_empty()
            || reference
                .iter()
                .any(|w| w.windows(suffix.len()).any(|win| win == suffix));
        if present {
            return suffix.to_vec();
        }
    }
    unreachable!("the empty suffix is always present");
}

#[test]
fn scanner_state_tracks_the_longest_matched_suffix() {
    for instance in random_instances(808, 200) {
        let refs = common::as_slices(&instance.reference);
        let machine = ReferenceMachine::build(refs.iter().copied());
        for mode in [LinkMode::PlainS, LinkMode::OptimizedG] {
            let mut scanner = machine.scanner(mode);
            for (j, &a) in instance.target.iter().enumerate() {
                scanner.push(a);
                let consumed = &instance.target[..=j];
                let expected = longest_reference_suffix(consumed, &refs);
                assert_eq!(scanner.matched_len(), expected.len());
                assert_eq!(
                    Some(scanner.state()),
                    machine.dawg().walk_word(&expected),
                    "state off after {consumed:?} against {refs:?}"
                );
            }
        }
    }
}

#[test]
fn every_event_names_a_naively_specific_factor() {
    for instance in random_instances(909, 400) {
        let refs = common::as_slices(&instance.reference);
        let machine = ReferenceMachine::build(refs.iter().copied());
        let naive = oracle::specific_naive(&refs, &[&instance.target]);
        for mode in [LinkMode::PlainS, LinkMode::OptimizedG] {
            for event in machine.ts_pairs(&instance.target, mode) {
                let factor = instance.target[event.start..=event.end].to_vec();
                assert!(
                    naive.contains(&factor),
                    "event ({}, {}) names {factor:?}, not a specific factor of {:?} vs {refs:?}",
                    event.start,
                    event.end,
                    instance.target
                );
            }
        }
    }
}

#[test]
fn events_have_strictly_increasing_starts_and_ends() {
    for instance in random_instances(1010, 400) {
        let refs = common::as_slices(&instance.reference);
        let machine = ReferenceMachine::build(refs.iter().copied());
        for mode in [LinkMode::PlainS, LinkMode::OptimizedG] {
            let events = machine.ts_pairs(&instance.target, mode);
            for pair in events.windows(2) {
                assert!(pair[0].start < pair[1].start, "starts must not repeat");
                assert!(pair[0].end < pair[1].end, "ends must not repeat");
            }
            for event in &events {
                assert!(event.start <= event.end);
            }
        }
    }
}

#[test]
fn plain_links_are_amortized_linear() {
    for instance in random_instances(1111, 400) {
        let refs = common::as_slices(&instance.reference);
        let machine = ReferenceMachine::build(refs.iter().copied());
        let (_, stats) = machine.ts_table_with_stats(&instance.target, LinkMode::PlainS);
        assert!(
            stats.link_follows <= 2 * instance.target.len() as u64,
            "{} follows over a {}-symbol target",
            stats.link_follows,
            instance.target.len()
        );
    }
}

#[test]
fn optimized_links_are_bounded_per_symbol() {
    for instance in random_instances(1212, 400) {
        let refs = common::as_slices(&instance.reference);
        let machine = ReferenceMachine::build(refs.iter().copied());
        let (_, stats) = machine.ts_table_with_stats(&instance.target, LinkMode::OptimizedG);
        let budget = machine.alphabet().len() as u64 + 1;
        assert!(
            stats.max_follows_per_symbol <= budget,
            "{} follows on one symbol with alphabet budget {budget}",
            stats.max_follows_per_symbol
        );
    }
}

#[test]
fn concurrent_scans_share_one_machine() {
    let machine = ReferenceMachine::build([b"abbab".as_slice(), b"babba".as_slice()]);
    let table = machine.ts_table(b"abaabbaab", LinkMode::OptimizedG);
    std::thread::scope(|scope| {
        let handles: Vec<_> = (0..4)
            .map(|_| scope.spawn(|| machine.ts_table(b"abaabbaab", LinkMode::OptimizedG)))
            .collect();
        for handle in handles {
            assert_eq!(handle.join().unwrap(), table);
        }
    });
}
