//! DOT rendering of the automaton and the specific-word trie.
//!
//! Transitions are solid edges labeled with their symbol; suffix links are
//! dashed, unlabeled edges. Automaton nodes carry their state id and mark;
//! trie sinks are drawn as boxes.

use std::fmt::Write;

use tsf_core::{Dawg, SpecificTrie};

use crate::output::escape_bytes;

pub fn dawg_dot(dawg: &Dawg) -> String {
    let mut out = String::from("digraph dawg {\n  rankdir=LR;\n");
    for q in 0..dawg.state_count() {
        let mark = dawg.mark(q).label();
        let label = if mark.is_empty() { format!("{q}") } else { format!("{q} {mark}") };
        writeln!(out, "  n{q} [shape=circle, label=\"{label}\"];").unwrap();
    }
    for q in 0..dawg.state_count() {
        for &(a, to) in dawg.transitions(q) {
            writeln!(out, "  n{q} -> n{to} [label=\"{}\"];", escape_bytes(&[a])).unwrap();
        }
    }
    for q in 0..dawg.state_count() {
        if let Some(s) = dawg.suffix_link(q) {
            writeln!(out, "  n{q} -> n{s} [style=dashed];").unwrap();
        }
    }
    out.push_str("}\n");
    out
}

pub fn trie_dot(trie: &SpecificTrie) -> String {
    let mut out = String::from("digraph specific_trie {\n  rankdir=LR;\n");
    for n in 0..trie.node_count() {
        match trie.origin(n) {
            Some(state) => {
                writeln!(out, "  n{n} [shape=circle, label=\"{state}\"];").unwrap()
            }
            None => writeln!(out, "  n{n} [shape=box, label=\"\"];").unwrap(),
        }
    }
    for n in 0..trie.node_count() {
        for &(a, to) in trie.transitions(n) {
            writeln!(out, "  n{n} -> n{to} [label=\"{}\"];", escape_bytes(&[a])).unwrap();
        }
    }
    out.push_str("}\n");
    out
}
