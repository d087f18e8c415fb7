//! Brute-force reference implementations of every result the fast modules
//! produce. Everything here works on plain hash sets and window scans, with
//! no automaton in sight, so the outputs can stand as independent ground
//! truth in tests and in the CLI cross-check mode.
//!
//! These functions are correctness mirrors, not tools: inputs are capped at
//! [`MAX_ORACLE_SIZE`] total bytes and the functions panic past that.

use std::collections::{BTreeSet, HashSet};

/// Combined input size accepted by the oracle functions, in bytes.
///
/// A guard for test harnesses and the CLI cross-check, not a statement about
/// the fast modules, which have no such limit.
pub const MAX_ORACLE_SIZE: usize = 10_000;

fn guard_size(words: &[&[u8]], extra: usize) {
    let total: usize = words.iter().map(|w| w.len()).sum::<usize>() + extra;
    assert!(
        total <= MAX_ORACLE_SIZE,
        "oracle input too large: {total} bytes exceeds the {MAX_ORACLE_SIZE} byte cap"
    );
}

/// Every factor of every word in `words`, including the empty word.
pub fn factors_naive(words: &[&[u8]]) -> HashSet<Vec<u8>> {
    guard_size(words, 0);
    let mut set = HashSet::new();
    set.insert(Vec::new());
    for w in words {
        for i in 0..w.len() {
            for j in i + 1..=w.len() {
                set.insert(w[i..j].to_vec());
            }
        }
    }
    set
}

/// Absence plus minimality, tested against a factor set.
///
/// Every proper factor of `w` is a factor of `w[1..]` or of `w[..n-1]`, and
/// factor sets are closed under taking factors, so membership of those two
/// suffices for "all proper factors present".
fn is_minimal_absent(w: &[u8], fact: &HashSet<Vec<u8>>) -> bool {
    debug_assert!(!w.is_empty());
    !fact.contains(w) && fact.contains(&w[1..]) && fact.contains(&w[..w.len() - 1])
}

/// The target-specific words of `target` with respect to `reference`,
/// sorted in byte order.
pub fn specific_naive(reference: &[&[u8]], target: &[&[u8]]) -> Vec<Vec<u8>> {
    guard_size(reference, target.iter().map(|w| w.len()).sum());
    let fact_r = factors_naive(reference);
    let mut out: Vec<Vec<u8>> = factors_naive(target)
        .into_iter()
        .filter(|u| !u.is_empty() && is_minimal_absent(u, &fact_r))
        .collect();
    out.sort();
    out
}

/// Per-position table over `target`: entry `i` is the end position `j` of
/// the target-specific factor `target[i..=j]` when one starts at `i`, and
/// `-1` otherwise.
pub fn ts_table_naive(reference: &[&[u8]], target: &[u8]) -> Vec<i64> {
    guard_size(reference, target.len());
    let fact_r = factors_naive(reference);
    let n = target.len();
    let mut table = vec![-1i64; n];
    for i in 0..n {
        for j in i..n {
            if is_minimal_absent(&target[i..=j], &fact_r) {
                // prefix-freeness makes the end position unique per start
                debug_assert_eq!(table[i], -1);
                table[i] = j as i64;
            }
        }
    }
    table
}

/// Minimal absent words of `reference` over `alphabet`, sorted in byte
/// order. `alphabet` must contain every letter occurring in `reference`.
///
/// Any minimal absent word of length at least two is a letter prepended to
/// a present factor, so those pairs are the whole candidate space.
pub fn maw_naive(reference: &[&[u8]], alphabet: &[u8]) -> Vec<Vec<u8>> {
    guard_size(reference, alphabet.len());
    let letters: BTreeSet<u8> = reference.iter().flat_map(|w| w.iter().copied()).collect();
    assert!(
        letters.iter().all(|a| alphabet.contains(a)),
        "alphabet must cover every letter of the reference"
    );
    let fact_r = factors_naive(reference);
    let mut out = BTreeSet::new();
    for &a in alphabet {
        if !fact_r.contains(&[a][..]) {
            out.insert(vec![a]);
        }
    }
    for u in &fact_r {
        if u.is_empty() {
            continue;
        }
        for &a in alphabet {
            let mut w = Vec::with_capacity(u.len() + 1);
            w.push(a);
            w.extend_from_slice(u);
            if is_minimal_absent(&w, &fact_r) {
                out.insert(w);
            }
        }
    }
    out.into_iter().collect()
}
