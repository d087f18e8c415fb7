//! Generalized suffix automaton (DAWG) of a finite multiset of tagged words.
//!
//! The automaton accepts exactly the factors of the input words. States are
//! dense indices in construction order; state 0 is the class of the empty
//! word. Each state carries its outgoing transitions sorted by symbol, a
//! suffix link, the length of the longest factor in its class, and source
//! marks recording whether the class occurs in reference words, target
//! words, or both.
//!
//! A built [`Dawg`] is immutable and can be shared freely across threads.

/// Input symbols are raw bytes, ordered numerically.
pub type Symbol = u8;

/// Dense 0-based state index. Valid only for the automaton that issued it;
/// passing a foreign or out-of-range id is a programming error and panics.
pub type StateId = usize;

/// Which input set a word belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Source {
    Reference,
    Target,
}

/// Per-state occurrence flags: does the state's class occur in the
/// reference words, the target words, or both.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Mark {
    pub in_reference: bool,
    pub in_target: bool,
}

impl Mark {
    pub fn is_both(self) -> bool {
        self.in_reference && self.in_target
    }

    pub fn target_only(self) -> bool {
        self.in_target && !self.in_reference
    }

    fn set(&mut self, source: Source) {
        match source {
            Source::Reference => self.in_reference = true,
            Source::Target => self.in_target = true,
        }
    }

    fn has(self, source: Source) -> bool {
        match source {
            Source::Reference => self.in_reference,
            Source::Target => self.in_target,
        }
    }

    /// Short display form: `r`, `t` or `r,t` (empty when unmarked).
    pub fn label(self) -> &'static str {
        match (self.in_reference, self.in_target) {
            (true, true) => "r,t",
            (true, false) => "r",
            (false, true) => "t",
            (false, false) => "",
        }
    }
}

#[derive(Clone, Debug)]
pub(crate) struct State {
    pub(crate) transitions: Vec<(Symbol, StateId)>,
    pub(crate) link: Option<StateId>,
    pub(crate) len: usize,
    pub(crate) mark: Mark,
}

impl State {
    fn new(len: usize) -> Self {
        State {
            transitions: Vec::new(),
            link: None,
            len,
            mark: Mark::default(),
        }
    }

    fn get(&self, a: Symbol) -> Option<StateId> {
        self.transitions
            .binary_search_by_key(&a, |&(s, _)| s)
            .ok()
            .map(|k| self.transitions[k].1)
    }

    fn set(&mut self, a: Symbol, to: StateId) {
        match self.transitions.binary_search_by_key(&a, |&(s, _)| s) {
            Ok(k) => self.transitions[k].1 = to,
            Err(k) => self.transitions.insert(k, (a, to)),
        }
    }
}

/// Deterministic acyclic automaton accepting every factor of its input.
#[derive(Clone, Debug)]
pub struct Dawg {
    pub(crate) states: Vec<State>,
    pub(crate) alphabet: Vec<Symbol>,
}

impl Dawg {
    /// The class of the empty word.
    pub const INITIAL: StateId = 0;

    /// Incremental construction over the tagged words, one word at a time,
    /// followed by a mark pass. Empty words contribute only their tag on the
    /// initial state; duplicated words are idempotent.
    pub fn build<'a, I>(words: I) -> Self
    where
        I: IntoIterator<Item = (&'a [u8], Source)>,
    {
        let words: Vec<(&[u8], Source)> = words.into_iter().collect();
        let mut alphabet: Vec<Symbol> = words.iter().flat_map(|(w, _)| w.iter().copied()).collect();
        alphabet.sort_unstable();
        alphabet.dedup();

        let mut dawg = Dawg {
            states: vec![State::new(0)],
            alphabet,
        };
        for (word, _) in &words {
            let mut last = Self::INITIAL;
            for &a in *word {
                last = dawg.extend(last, a);
            }
        }
        for (word, source) in &words {
            dawg.mark_word(word, *source);
        }
        dawg
    }

    /// One step of the incremental construction: returns the state of the
    /// word `wa` given the state `last` of `w`.
    fn extend(&mut self, last: StateId, a: Symbol) -> StateId {
        if let Some(q) = self.states[last].get(a) {
            if self.states[q].len == self.states[last].len + 1 {
                return q;
            }
            // the existing class is too long to stand for wa; split it
            let clone = self.clone_state(q, self.states[last].len + 1);
            self.redirect(Some(last), a, q, clone);
            self.states[q].link = Some(clone);
            return clone;
        }

        let cur = self.alloc(State::new(self.states[last].len + 1));
        let mut p = Some(last);
        loop {
            match p {
                None => {
                    self.states[cur].link = Some(Self::INITIAL);
                    break;
                }
                Some(pp) => match self.states[pp].get(a) {
                    None => {
                        self.states[pp].set(a, cur);
                        p = self.states[pp].link;
                    }
                    Some(q) => {
                        if self.states[q].len == self.states[pp].len + 1 {
                            self.states[cur].link = Some(q);
                        } else {
                            let clone = self.clone_state(q, self.states[pp].len + 1);
                            self.redirect(Some(pp), a, q, clone);
                            self.states[q].link = Some(clone);
                            self.states[cur].link = Some(clone);
                        }
                        break;
                    }
                },
            }
        }
        cur
    }

    fn alloc(&mut self, state: State) -> StateId {
        let id = self.states.len();
        self.states.push(state);
        id
    }

    fn clone_state(&mut self, q: StateId, len: usize) -> StateId {
        let mut copy = self.states[q].clone();
        copy.len = len;
        self.alloc(copy)
    }

    /// Rewire `a`-transitions that point at `from` to `to`, walking the
    /// suffix chain from `start` until the transition changes.
    fn redirect(&mut self, start: Option<StateId>, a: Symbol, from: StateId, to: StateId) {
        let mut p = start;
        while let Some(pp) = p {
            match self.states[pp].get(a) {
                Some(q) if q == from => {
                    self.states[pp].set(a, to);
                    p = self.states[pp].link;
                }
                _ => break,
            }
        }
    }

    /// Flag the states of every factor of `word`. Each factor is a suffix of
    /// a prefix, so walking the suffix chain from each prefix state covers
    /// them all; chains already flagged are flagged up to the root and can
    /// be cut short.
    fn mark_word(&mut self, word: &[u8], source: Source) {
        self.states[Self::INITIAL].mark.set(source);
        let mut q = Self::INITIAL;
        for &a in word {
            q = self.states[q].get(a).expect("inserted word must trace");
            let mut p = Some(q);
            while let Some(s) = p {
                if self.states[s].mark.has(source) {
                    break;
                }
                self.states[s].mark.set(source);
                p = self.states[s].link;
            }
        }
    }

    pub fn state_count(&self) -> usize {
        self.states.len()
    }

    pub fn transition_count(&self) -> usize {
        self.states.iter().map(|s| s.transitions.len()).sum()
    }

    /// Distinct symbols occurring in the input words, sorted.
    pub fn alphabet(&self) -> &[Symbol] {
        &self.alphabet
    }

    /// The transition function: `walk(q, a)` is the state reached from `q`
    /// on `a`, if any.
    pub fn walk(&self, q: StateId, a: Symbol) -> Option<StateId> {
        self.states[q].get(a)
    }

    /// The state of the word `u`, if `u` is a factor of the input.
    pub fn walk_word(&self, u: &[u8]) -> Option<StateId> {
        let mut q = Self::INITIAL;
        for &a in u {
            q = self.walk(q, a)?;
        }
        Some(q)
    }

    /// Whether `u` is a factor of some input word.
    pub fn accepts_factor(&self, u: &[u8]) -> bool {
        self.walk_word(u).is_some()
    }

    /// Suffix link of `q`; absent only for the initial state.
    pub fn suffix_link(&self, q: StateId) -> Option<StateId> {
        self.states[q].link
    }

    /// Length of the longest factor in the class of `q`.
    pub fn max_len(&self, q: StateId) -> usize {
        self.states[q].len
    }

    pub fn mark(&self, q: StateId) -> Mark {
        self.states[q].mark
    }

    pub fn out_degree(&self, q: StateId) -> usize {
        self.states[q].transitions.len()
    }

    /// Outgoing transitions of `q`, sorted by symbol.
    pub fn transitions(&self, q: StateId) -> &[(Symbol, StateId)] {
        &self.states[q].transitions
    }

    /// Suffix-link shortcuts that skip chain states whose outgoing symbol
    /// set does not grow. Computed in increasing length order so every
    /// link's own shortcut is ready when needed.
    pub fn optimized_links(&self) -> OptLinkTable {
        let mut order: Vec<StateId> = (0..self.states.len()).collect();
        order.sort_unstable_by_key(|&q| self.states[q].len);
        let mut links = vec![None; self.states.len()];
        for &q in &order {
            if q == Self::INITIAL {
                continue;
            }
            let s = self.states[q].link.expect("non-initial state has a suffix link");
            links[q] = if self.out_degree(q) < self.out_degree(s) {
                Some(s)
            } else {
                links[s]
            };
        }
        OptLinkTable { links }
    }
}

/// Optimized failure links: following them from any state visits strictly
/// growing outgoing-symbol sets, so a failure cascade is bounded by the
/// alphabet size instead of the matched length.
///
/// `get(q)` is `None` for the initial state, and for states whose whole
/// suffix chain keeps the same outgoing symbol set (a miss there is a miss
/// everywhere, so the scan can give up immediately).
#[derive(Clone, Debug)]
pub struct OptLinkTable {
    links: Vec<Option<StateId>>,
}

impl OptLinkTable {
    pub fn get(&self, q: StateId) -> Option<StateId> {
        self.links[q]
    }

    pub fn state_count(&self) -> usize {
        self.links.len()
    }
}
