//! Streaming detection of target-specific factor occurrences against a
//! preprocessed reference.
//!
//! A [`ReferenceMachine`] is the automaton of the reference word set
//! equipped with suffix links, the length table and the optimized failure
//! links. Scanning a target consumes one symbol at a time and reports, for
//! each position where a target-specific factor ends, its start position.
//! At most one factor starts and at most one ends at any position, so a
//! scan emits at most one event per symbol.

use crate::dawg::{Dawg, Mark, OptLinkTable, Source, State, StateId, Symbol};

/// Which failure link the scanner follows on a transition miss.
///
/// Both modes produce identical tables. `PlainS` walks the suffix links and
/// is linear over the whole scan; `OptimizedG` walks the optimized links,
/// bounding the work per input symbol by the alphabet size.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LinkMode {
    PlainS,
    OptimizedG,
}

/// Per-position scan result over a target of length `n`: entry `i` is the
/// end position `j` of the target-specific factor `target[i..=j]` when one
/// starts at `i`, and `-1` otherwise. Non-negative entries have strictly
/// increasing starts and ends.
pub type TsTable = Vec<i64>;

/// One occurrence of a target-specific factor `target[start..=end]`,
/// available as soon as the symbol at `end` has been consumed.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ScanEvent {
    pub start: usize,
    pub end: usize,
}

/// Failure-link instrumentation for a scan.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct ScanStats {
    /// Total failure-link follows over the whole scan.
    pub link_follows: u64,
    /// Largest number of follows spent on a single input symbol.
    pub max_follows_per_symbol: u64,
}

/// The reference automaton ready for scanning: transitions, suffix links,
/// length table and optimized links. Immutable once built; any number of
/// scans can run against one machine concurrently.
#[derive(Clone, Debug)]
pub struct ReferenceMachine {
    dawg: Dawg,
    links: OptLinkTable,
}

impl ReferenceMachine {
    pub fn build<'a, I>(reference: I) -> Self
    where
        I: IntoIterator<Item = &'a [u8]>,
    {
        let dawg = Dawg::build(reference.into_iter().map(|w| (w, Source::Reference)));
        let links = dawg.optimized_links();
        ReferenceMachine { dawg, links }
    }

    pub fn dawg(&self) -> &Dawg {
        &self.dawg
    }

    /// Letters occurring in the reference, sorted.
    pub fn alphabet(&self) -> &[Symbol] {
        self.dawg.alphabet()
    }

    pub fn optimized_link(&self, q: StateId) -> Option<StateId> {
        self.links.get(q)
    }

    /// A fresh push-style scanner holding only its current state and
    /// position, independent of the target length.
    pub fn scanner(&self, mode: LinkMode) -> StreamScanner<'_> {
        StreamScanner {
            machine: self,
            mode,
            state: Dawg::INITIAL,
            matched: 0,
            pos: 0,
            stats: ScanStats::default(),
        }
    }

    /// The full per-position table for `target`.
    pub fn ts_table(&self, target: &[u8], mode: LinkMode) -> TsTable {
        self.ts_table_with_stats(target, mode).0
    }

    /// Same as [`ts_table`](Self::ts_table) plus failure-link counters.
    pub fn ts_table_with_stats(&self, target: &[u8], mode: LinkMode) -> (TsTable, ScanStats) {
        let mut table = vec![-1i64; target.len()];
        let mut scanner = self.scanner(mode);
        for &a in target {
            if let Some(event) = scanner.push(a) {
                table[event.start] = event.end as i64;
            }
        }
        (table, scanner.stats)
    }

    /// The occurrences as a list of events in emission order, equivalent to
    /// the non-negative entries of the table.
    pub fn ts_pairs(&self, target: &[u8], mode: LinkMode) -> Vec<ScanEvent> {
        let mut scanner = self.scanner(mode);
        target.iter().filter_map(|&a| scanner.push(a)).collect()
    }

    /// Flat dump of the machine for serialization.
    pub fn to_tables(&self) -> MachineTables {
        MachineTables {
            alphabet: self.dawg.alphabet().to_vec(),
            states: (0..self.dawg.state_count())
                .map(|q| StateTable {
                    len: self.dawg.max_len(q),
                    link: self.dawg.suffix_link(q),
                    opt_link: self.links.get(q),
                    transitions: self.dawg.transitions(q).to_vec(),
                })
                .collect(),
        }
    }

    /// Reassemble a machine from previously exported tables, validating the
    /// structural invariants the scanner relies on.
    pub fn from_tables(tables: MachineTables) -> Result<Self, TableError> {
        tables.validate()?;
        let MachineTables { alphabet, states } = tables;
        let mark = Mark {
            in_reference: true,
            in_target: false,
        };
        let mut opt_links = Vec::with_capacity(states.len());
        let mut raw_states = Vec::with_capacity(states.len());
        for s in states {
            opt_links.push(s.opt_link);
            raw_states.push(State {
                transitions: s.transitions,
                link: s.link,
                len: s.len,
                mark,
            });
        }
        let dawg = Dawg {
            states: raw_states,
            alphabet,
        };
        // the optimized links are derived data; a table that disagrees with
        // what the transitions and suffix links imply would corrupt scans
        let links = dawg.optimized_links();
        for q in 0..dawg.state_count() {
            if links.get(q) != opt_links[q] {
                return Err(TableError::InconsistentOptLink { state: q });
            }
        }
        Ok(ReferenceMachine { dawg, links })
    }
}

/// Flat, serialization-friendly form of a [`ReferenceMachine`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MachineTables {
    /// Sorted distinct letters of the reference.
    pub alphabet: Vec<Symbol>,
    /// One entry per state; state 0 is the initial state.
    pub states: Vec<StateTable>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StateTable {
    /// Length of the longest factor in the state's class.
    pub len: usize,
    /// Suffix link; `None` only for state 0.
    pub link: Option<StateId>,
    /// Optimized failure link.
    pub opt_link: Option<StateId>,
    /// Outgoing transitions, strictly ascending by symbol.
    pub transitions: Vec<(Symbol, StateId)>,
}

/// Structural defects detected while reassembling a machine from tables.
#[derive(Debug, thiserror::Error)]
pub enum TableError {
    #[error("machine has no states")]
    Empty,
    #[error("state 0 must have length 0 and no links")]
    BadInitial,
    #[error("state {state}: suffix link must exist and point to a shorter state")]
    BadLink { state: StateId },
    #[error("state {state}: optimized link must point to a state of larger out-degree")]
    BadOptLink { state: StateId },
    #[error("state {state}: optimized link disagrees with the transition structure")]
    InconsistentOptLink { state: StateId },
    #[error("state {state}: transitions must be strictly ascending by symbol")]
    UnsortedTransitions { state: StateId },
    #[error("state {state}: transition target {target} is out of range")]
    TargetOutOfRange { state: StateId, target: StateId },
    #[error("state {state}: transition on {symbol:#04x} must lead to a longer state")]
    TransitionLength { state: StateId, symbol: Symbol },
    #[error("alphabet must equal the initial state's outgoing symbols")]
    AlphabetMismatch,
}

impl MachineTables {
    fn validate(&self) -> Result<(), TableError> {
        let n = self.states.len();
        if n == 0 {
            return Err(TableError::Empty);
        }
        let initial = &self.states[0];
        if initial.len != 0 || initial.link.is_some() || initial.opt_link.is_some() {
            return Err(TableError::BadInitial);
        }
        let initial_symbols: Vec<Symbol> = initial.transitions.iter().map(|&(a, _)| a).collect();
        if initial_symbols != self.alphabet {
            return Err(TableError::AlphabetMismatch);
        }
        for (q, s) in self.states.iter().enumerate() {
            if q != 0 {
                match s.link {
                    Some(l) if l < n && self.states[l].len < s.len => {}
                    _ => return Err(TableError::BadLink { state: q }),
                }
                if let Some(g) = s.opt_link {
                    if g >= n || self.states[g].transitions.len() <= s.transitions.len() {
                        return Err(TableError::BadOptLink { state: q });
                    }
                }
            }
            for pair in s.transitions.windows(2) {
                if pair[0].0 >= pair[1].0 {
                    return Err(TableError::UnsortedTransitions { state: q });
                }
            }
            for &(a, target) in &s.transitions {
                if target >= n {
                    return Err(TableError::TargetOutOfRange { state: q, target });
                }
                if self.states[target].len < s.len + 1 {
                    return Err(TableError::TransitionLength { state: q, symbol: a });
                }
            }
        }
        Ok(())
    }
}

/// Push-style scanner over one target sequence.
///
/// Between pushes the scanner holds the automaton state of the longest
/// suffix of the consumed input that is a factor of the reference, and the
/// next input position — nothing else, so memory use is independent of the
/// target length.
#[derive(Clone, Debug)]
pub struct StreamScanner<'m> {
    machine: &'m ReferenceMachine,
    mode: LinkMode,
    state: StateId,
    matched: usize,
    pos: usize,
    stats: ScanStats,
}

impl<'m> StreamScanner<'m> {
    /// Consume the symbol at the current position and report the
    /// target-specific factor ending there, if any.
    ///
    /// On a transition miss the scanner falls back along the failure links.
    /// Landing on a state that can consume the symbol means the factor made
    /// of the preceding letter, that state's longest word and the symbol is
    /// specific; running out of states means the symbol alone is.
    pub fn push(&mut self, a: Symbol) -> Option<ScanEvent> {
        let dawg = self.machine.dawg();
        let j = self.pos;
        self.pos += 1;

        if let Some(next) = dawg.walk(self.state, a) {
            self.state = next;
            self.matched += 1;
            return None;
        }

        let mut q = self.state;
        let mut follows = 0u64;
        while q != Dawg::INITIAL && dawg.walk(q, a).is_none() {
            q = match self.mode {
                LinkMode::PlainS => dawg.suffix_link(q).expect("non-initial state"),
                // a dead shortcut means no ancestor grows the symbol set,
                // so the root will miss as well
                LinkMode::OptimizedG => self.machine.optimized_link(q).unwrap_or(Dawg::INITIAL),
            };
            follows += 1;
        }
        self.stats.link_follows += follows;
        self.stats.max_follows_per_symbol = self.stats.max_follows_per_symbol.max(follows);

        match dawg.walk(q, a) {
            None => {
                // nothing in the reference can consume it: the letter itself
                // is specific
                self.state = Dawg::INITIAL;
                self.matched = 0;
                Some(ScanEvent { start: j, end: j })
            }
            Some(next) => {
                let kept = dawg.max_len(q);
                debug_assert!(kept < self.matched || self.matched == 0);
                debug_assert!(j >= kept + 1);
                self.state = next;
                self.matched = kept + 1;
                Some(ScanEvent {
                    start: j - kept - 1,
                    end: j,
                })
            }
        }
    }

    /// Next input position (the number of symbols consumed so far).
    pub fn position(&self) -> usize {
        self.pos
    }

    /// Automaton state of the currently matched suffix.
    pub fn state(&self) -> StateId {
        self.state
    }

    /// Length of the currently matched suffix.
    pub fn matched_len(&self) -> usize {
        self.matched
    }

    pub fn stats(&self) -> ScanStats {
        self.stats
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle;
    use proptest::prelude::*;

    const BOTH_MODES: [LinkMode; 2] = [LinkMode::PlainS, LinkMode::OptimizedG];

    #[test]
    fn worked_example_table_and_pairs() {
        let machine = ReferenceMachine::build([b"abbab".as_slice()]);
        for mode in BOTH_MODES {
            assert_eq!(machine.ts_table(b"abaab", mode), vec![2, -1, 3, -1, -1]);
            assert_eq!(
                machine.ts_pairs(b"abaab", mode),
                vec![ScanEvent { start: 0, end: 2 }, ScanEvent { start: 2, end: 3 }]
            );
        }
    }

    #[test]
    fn foreign_letter_is_specific_on_its_own() {
        let machine = ReferenceMachine::build([b"ab".as_slice()]);
        for mode in BOTH_MODES {
            assert_eq!(machine.ts_table(b"c", mode), vec![0]);
        }
    }

    #[test]
    fn covered_target_yields_nothing() {
        let machine = ReferenceMachine::build([b"abbab".as_slice()]);
        for mode in BOTH_MODES {
            assert_eq!(machine.ts_table(b"abb", mode), vec![-1, -1, -1]);
            assert!(machine.ts_pairs(b"abb", mode).is_empty());
        }
    }

    #[test]
    fn empty_reference_flags_every_symbol() {
        let machine = ReferenceMachine::build(std::iter::empty());
        assert_eq!(machine.dawg().state_count(), 1);
        for mode in BOTH_MODES {
            assert_eq!(
                machine.ts_pairs(b"ab", mode),
                vec![ScanEvent { start: 0, end: 0 }, ScanEvent { start: 1, end: 1 }]
            );
        }
    }

    #[test]
    fn empty_target_gives_an_empty_table() {
        let machine = ReferenceMachine::build([b"abbab".as_slice()]);
        for mode in BOTH_MODES {
            assert!(machine.ts_table(b"", mode).is_empty());
        }
    }

    #[test]
    fn three_state_machine_links() {
        let machine = ReferenceMachine::build([b"ab".as_slice()]);
        assert_eq!(machine.dawg().state_count(), 3);
        assert_eq!(machine.optimized_link(1), Some(0));
        assert_eq!(machine.optimized_link(2), Some(0));
    }

    #[test]
    fn events_arrive_with_their_end_symbol() {
        let machine = ReferenceMachine::build([b"abbab".as_slice()]);
        let mut scanner = machine.scanner(LinkMode::OptimizedG);
        assert_eq!(scanner.push(b'a'), None);
        assert_eq!(scanner.push(b'b'), None);
        assert_eq!(scanner.push(b'a'), Some(ScanEvent { start: 0, end: 2 }));
        assert_eq!(scanner.push(b'a'), Some(ScanEvent { start: 2, end: 3 }));
        assert_eq!(scanner.push(b'b'), None);
        assert_eq!(scanner.position(), 5);
    }

    #[test]
    fn pushing_nothing_emits_nothing() {
        let machine = ReferenceMachine::build([b"ab".as_slice()]);
        let scanner = machine.scanner(LinkMode::PlainS);
        assert_eq!(scanner.position(), 0);
        assert_eq!(scanner.matched_len(), 0);
    }

    #[test]
    fn tables_round_trip_through_the_flat_form() {
        let machine = ReferenceMachine::build([b"abbab".as_slice(), b"bbaa".as_slice()]);
        let rebuilt = ReferenceMachine::from_tables(machine.to_tables()).unwrap();
        assert_eq!(machine.to_tables(), rebuilt.to_tables());
        for mode in BOTH_MODES {
            assert_eq!(
                machine.ts_table(b"aababbba", mode),
                rebuilt.ts_table(b"aababbba", mode)
            );
        }
    }

    #[test]
    fn table_validation_rejects_defects() {
        let machine = ReferenceMachine::build([b"ab".as_slice()]);
        let good = machine.to_tables();

        let mut bad = good.clone();
        bad.states.clear();
        assert!(matches!(
            ReferenceMachine::from_tables(bad),
            Err(TableError::Empty)
        ));

        let mut bad = good.clone();
        bad.states[1].link = None;
        assert!(matches!(
            ReferenceMachine::from_tables(bad),
            Err(TableError::BadLink { state: 1 })
        ));

        let mut bad = good.clone();
        bad.states[0].transitions[0].1 = 99;
        assert!(matches!(
            ReferenceMachine::from_tables(bad),
            Err(TableError::TargetOutOfRange { state: 0, target: 99 })
        ));

        let mut bad = good.clone();
        bad.alphabet = vec![b'a'];
        assert!(matches!(
            ReferenceMachine::from_tables(bad),
            Err(TableError::AlphabetMismatch)
        ));

        // a non-initial state with two transitions, so the sortedness check
        // fires before the alphabet comparison can
        let wide = ReferenceMachine::build([b"aab".as_slice()]).to_tables();
        assert_eq!(wide.states[1].transitions.len(), 2);
        let mut bad = wide;
        bad.states[1].transitions.swap(0, 1);
        assert!(matches!(
            ReferenceMachine::from_tables(bad),
            Err(TableError::UnsortedTransitions { state: 1 })
        ));
    }

    proptest! {
        #[test]
        fn both_modes_agree_and_match_the_oracle(
            r in proptest::collection::vec("[abc]{0,10}", 0..4),
            t in "[abcd]{0,40}",
        ) {
            let r: Vec<Vec<u8>> = r.into_iter().map(|w| w.into_bytes()).collect();
            let refs: Vec<&[u8]> = r.iter().map(|w| w.as_slice()).collect();
            let t = t.into_bytes();
            let machine = ReferenceMachine::build(refs.iter().copied());
            let plain = machine.ts_table(&t, LinkMode::PlainS);
            let optimized = machine.ts_table(&t, LinkMode::OptimizedG);
            prop_assert_eq!(&plain, &optimized);
            prop_assert_eq!(plain, oracle::ts_table_naive(&refs, &t));
        }

        #[test]
        fn pairs_are_the_table_filtered(
            r in proptest::collection::vec("[ab]{0,10}", 0..3),
            t in "[abc]{0,30}",
        ) {
            let r: Vec<Vec<u8>> = r.into_iter().map(|w| w.into_bytes()).collect();
            let refs: Vec<&[u8]> = r.iter().map(|w| w.as_slice()).collect();
            let t = t.into_bytes();
            let machine = ReferenceMachine::build(refs.iter().copied());
            for mode in BOTH_MODES {
                let table = machine.ts_table(&t, mode);
                let from_table: Vec<ScanEvent> = table
                    .iter()
                    .enumerate()
                    .filter(|&(_, &j)| j >= 0)
                    .map(|(i, &j)| ScanEvent { start: i, end: j as usize })
                    .collect();
                prop_assert_eq!(machine.ts_pairs(&t, mode), from_table);
            }
        }
    }
}
