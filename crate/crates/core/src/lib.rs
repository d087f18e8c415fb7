//! Detection of target-specific factors: substrings of a target word set
//! that never occur in a reference word set, while all of their proper
//! substrings do.
//!
//! The crate is organised around three fast paths and one slow one:
//!
//! * [`dawg`] — the generalized suffix automaton of a tagged word multiset,
//!   with suffix links, length table and the optimized failure links.
//! * [`specific`] — the trie accepting exactly the target-specific word set,
//!   plus the closed-form count estimate.
//! * [`scan`] — a preprocessed reference machine that reports every
//!   occurrence of a target-specific factor in a single target sequence,
//!   one input symbol at a time.
//! * [`oracle`] — deliberately naive reimplementations of all of the above,
//!   used as ground truth in tests and by the CLI cross-check mode.
//!
//! Positions are 0-based and intervals are end-inclusive throughout.

pub mod dawg;
pub mod oracle;
pub mod scan;
pub mod specific;

pub use dawg::{Dawg, Mark, OptLinkTable, Source, StateId, Symbol};
pub use scan::{
    LinkMode, MachineTables, ReferenceMachine, ScanEvent, ScanStats, StateTable, StreamScanner,
    TableError, TsTable,
};
pub use specific::{count_bound, specific_word_report, NodeId, SpecificTrie, SpecificWordReport};
