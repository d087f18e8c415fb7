//! The trie accepting exactly the target-specific words: factors of the
//! target set that are absent from the reference while all their proper
//! factors are present in it.
//!
//! Internal nodes mirror automaton states whose class occurs in both word
//! sets; each accepted word ends in its own sink node, so the accepted
//! language is the set of root-to-sink path labels.

use std::collections::{BTreeSet, VecDeque};

use crate::dawg::{Dawg, Source, StateId, Symbol};

/// Dense 0-based trie node index.
pub type NodeId = usize;

#[derive(Clone, Debug)]
struct TrieNode {
    transitions: Vec<(Symbol, NodeId)>,
    /// Mirrored automaton state; `None` marks a sink.
    origin: Option<StateId>,
}

/// Acyclic deterministic automaton whose language is the target-specific
/// word set of the tagged automaton it was built from.
#[derive(Clone, Debug)]
pub struct SpecificTrie {
    nodes: Vec<TrieNode>,
}

impl SpecificTrie {
    pub const ROOT: NodeId = 0;

    /// Width-first sweep over the both-marked region of `dawg`.
    ///
    /// A transition into a target-only class becomes a sink when the same
    /// extension from the suffix-linked class stays inside the reference
    /// (or the sweep is still at the root, where the extension is a single
    /// letter). A transition into a both-marked class is kept the first
    /// time that class is reached, which keeps the result a tree.
    pub fn build(dawg: &Dawg) -> Self {
        let mut nodes = vec![TrieNode {
            transitions: Vec::new(),
            origin: Some(Dawg::INITIAL),
        }];
        let mut node_of = vec![usize::MAX; dawg.state_count()];
        node_of[Dawg::INITIAL] = Self::ROOT;

        let mut queue = VecDeque::from([Dawg::INITIAL]);
        while let Some(p) = queue.pop_front() {
            let parent = node_of[p];
            for &(a, q) in dawg.transitions(p) {
                let mark = dawg.mark(q);
                let makes_sink = mark.target_only()
                    && (p == Dawg::INITIAL || {
                        let s = dawg.suffix_link(p).expect("non-initial state");
                        dawg.walk(s, a).map_or(false, |r| dawg.mark(r).in_reference)
                    });
                if makes_sink {
                    let sink = nodes.len();
                    nodes.push(TrieNode {
                        transitions: Vec::new(),
                        origin: None,
                    });
                    nodes[parent].transitions.push((a, sink));
                } else if mark.is_both() && node_of[q] == usize::MAX {
                    let node = nodes.len();
                    nodes.push(TrieNode {
                        transitions: Vec::new(),
                        origin: Some(q),
                    });
                    node_of[q] = node;
                    nodes[parent].transitions.push((a, node));
                    queue.push_back(q);
                }
            }
        }
        SpecificTrie { nodes }
    }

    pub fn node_count(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_sink(&self, n: NodeId) -> bool {
        self.nodes[n].origin.is_none()
    }

    /// The automaton state an internal node mirrors; `None` for sinks.
    pub fn origin(&self, n: NodeId) -> Option<StateId> {
        self.nodes[n].origin
    }

    pub fn sink_count(&self) -> usize {
        self.nodes.iter().filter(|n| n.origin.is_none()).count()
    }

    /// Outgoing transitions of `n`, sorted by symbol.
    pub fn transitions(&self, n: NodeId) -> &[(Symbol, NodeId)] {
        &self.nodes[n].transitions
    }

    /// The accepted words, sorted in byte order. The accepted set is
    /// prefix-free, so an in-order walk already yields sorted output.
    pub fn words(&self) -> Vec<Vec<u8>> {
        let mut out = Vec::new();
        let mut path: Vec<u8> = Vec::new();
        let mut stack: Vec<(NodeId, usize)> = vec![(Self::ROOT, 0)];
        while let Some(&mut (n, ref mut next)) = stack.last_mut() {
            if let Some(&(a, child)) = self.nodes[n].transitions.get(*next) {
                *next += 1;
                path.push(a);
                if self.is_sink(child) {
                    out.push(path.clone());
                    path.pop();
                } else {
                    stack.push((child, 0));
                }
            } else {
                stack.pop();
                if !stack.is_empty() {
                    path.pop();
                }
            }
        }
        out
    }

    /// Copy of the trie without internal branches that lead to no sink.
    /// The accepted language is unchanged; only dead wood for rendering is
    /// dropped. Node ids are renumbered in width-first order.
    pub fn pruned(&self) -> SpecificTrie {
        let n = self.nodes.len();
        let mut keep = vec![false; n];
        // children always carry larger ids than their parent
        for id in (0..n).rev() {
            keep[id] = self.is_sink(id)
                || self.nodes[id].transitions.iter().any(|&(_, c)| keep[c]);
        }
        keep[Self::ROOT] = true;

        let mut nodes = vec![TrieNode {
            transitions: Vec::new(),
            origin: self.nodes[Self::ROOT].origin,
        }];
        let mut remap = vec![usize::MAX; n];
        remap[Self::ROOT] = Self::ROOT;
        let mut queue = VecDeque::from([Self::ROOT]);
        while let Some(old) = queue.pop_front() {
            for &(a, child) in &self.nodes[old].transitions {
                if !keep[child] {
                    continue;
                }
                let new = nodes.len();
                nodes.push(TrieNode {
                    transitions: Vec::new(),
                    origin: self.nodes[child].origin,
                });
                remap[child] = new;
                let parent = remap[old];
                nodes[parent].transitions.push((a, new));
                if !self.is_sink(child) {
                    queue.push_back(child);
                }
            }
        }
        SpecificTrie { nodes }
    }
}

/// Closed-form ceiling estimate for the number of target-specific words,
/// from the total reference length, its word count, its alphabet size and
/// the number of extra target letters.
///
/// The value is reported exactly as computed: it can be negative for very
/// small references, and small inputs exist whose actual count exceeds it
/// (see the tests), so treat it as a diagnostic figure rather than a hard
/// guarantee.
pub fn count_bound(size_r: usize, words_r: usize, alpha_r: usize, alpha_t_extra: usize) -> i64 {
    if size_r > 1 {
        (2 * size_r as i64 - 2) * (alpha_r as i64 - 1) + alpha_t_extra as i64 - alpha_r as i64
            + words_r as i64
    } else {
        alpha_t_extra as i64
    }
}

/// Specific words of `target` against `reference`, with the count and the
/// closed-form estimate, computed through the tagged automaton and the trie.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpecificWordReport {
    /// Sorted, duplicate-free specific words.
    pub words: Vec<Vec<u8>>,
    pub count: usize,
    pub bound: i64,
}

pub fn specific_word_report(reference: &[&[u8]], target: &[&[u8]]) -> SpecificWordReport {
    let dawg = Dawg::build(
        reference
            .iter()
            .map(|w| (*w, Source::Reference))
            .chain(target.iter().map(|w| (*w, Source::Target))),
    );
    let words = SpecificTrie::build(&dawg).words();

    let size_r: usize = reference.iter().map(|w| w.len()).sum();
    let letters_r: BTreeSet<u8> = reference.iter().flat_map(|w| w.iter().copied()).collect();
    let extra = target
        .iter()
        .flat_map(|w| w.iter().copied())
        .filter(|a| !letters_r.contains(a))
        .collect::<BTreeSet<u8>>()
        .len();
    let bound = count_bound(size_r, reference.len(), letters_r.len(), extra);

    SpecificWordReport {
        count: words.len(),
        words,
        bound,
    }
}
