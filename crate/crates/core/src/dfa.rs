//! Complete deterministic finite automata.
//!
//! A [`Dfa`] always has a total transition function. Canonical numbering —
//! breadth-first from the initial state, letters in alphabet order — makes
//! minimal automata structurally unique, so two DFAs accept the same
//! language exactly when their minimized forms compare equal.

use alloc::collections::{BTreeMap, BTreeSet, VecDeque};
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::alphabet::{Alphabet, UnknownLetter};
use crate::nfa::{reconstruct, Nfa};
use crate::StateId;

/// A complete DFA over single-character letters.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Dfa {
    alphabet: Alphabet,
    initial: StateId,
    accepting: BTreeSet<StateId>,
    /// Total transition table indexed by `[state][letter index]`.
    delta: Vec<Vec<StateId>>,
}

/// Rejected DFA constructions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DfaError {
    NoStates,
    StateOutOfRange(StateId),
    /// A transition row does not cover the alphabet exactly.
    BadRowLength { state: StateId, len: usize },
}

impl fmt::Display for DfaError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DfaError::NoStates => write!(f, "a complete DFA needs at least one state"),
            DfaError::StateOutOfRange(q) => write!(f, "state {q} out of range"),
            DfaError::BadRowLength { state, len } => {
                write!(f, "transition row of state {state} has length {len}")
            }
        }
    }
}

impl core::error::Error for DfaError {}

impl Dfa {
    /// Builds a complete DFA, validating totality and id ranges.
    pub fn new(
        alphabet: Alphabet,
        initial: StateId,
        accepting: impl IntoIterator<Item = StateId>,
        delta: Vec<Vec<StateId>>,
    ) -> Result<Self, DfaError> {
        let n = delta.len();
        if n == 0 {
            return Err(DfaError::NoStates);
        }
        if initial >= n {
            return Err(DfaError::StateOutOfRange(initial));
        }
        for (state, row) in delta.iter().enumerate() {
            if row.len() != alphabet.len() {
                return Err(DfaError::BadRowLength {
                    state,
                    len: row.len(),
                });
            }
            for &to in row {
                if to >= n {
                    return Err(DfaError::StateOutOfRange(to));
                }
            }
        }
        let accepting: BTreeSet<StateId> = accepting.into_iter().collect();
        if let Some(&q) = accepting.iter().find(|&&q| q >= n) {
            return Err(DfaError::StateOutOfRange(q));
        }
        Ok(Dfa {
            alphabet,
            initial,
            accepting,
            delta,
        })
    }

    pub(crate) fn from_validated(
        alphabet: Alphabet,
        initial: StateId,
        accepting: BTreeSet<StateId>,
        delta: Vec<Vec<StateId>>,
    ) -> Self {
        debug_assert!(!delta.is_empty() && initial < delta.len());
        Dfa {
            alphabet,
            initial,
            accepting,
            delta,
        }
    }

    /// Completes a partial transition table: if any entry is missing, a
    /// fresh sink state is materialized and all missing entries (plus the
    /// sink's own row) point to it. The accepted language is unchanged.
    pub fn complete(
        alphabet: Alphabet,
        initial: StateId,
        accepting: BTreeSet<StateId>,
        partial: Vec<Vec<Option<StateId>>>,
    ) -> Dfa {
        let n = partial.len();
        let needs_sink = partial.iter().any(|row| row.iter().any(Option::is_none));
        let sink = n;
        let mut delta: Vec<Vec<StateId>> = partial
            .into_iter()
            .map(|row| row.into_iter().map(|t| t.unwrap_or(sink)).collect())
            .collect();
        if needs_sink || n == 0 {
            delta.push(vec![sink; alphabet.len()]);
        }
        Dfa::from_validated(alphabet, initial, accepting, delta)
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn state_count(&self) -> usize {
        self.delta.len()
    }

    pub fn initial(&self) -> StateId {
        self.initial
    }

    pub fn accepting(&self) -> &BTreeSet<StateId> {
        &self.accepting
    }

    pub fn is_accepting(&self, q: StateId) -> bool {
        self.accepting.contains(&q)
    }

    /// One transition step by letter index.
    pub fn step(&self, q: StateId, letter: usize) -> StateId {
        self.delta[q][letter]
    }

    /// Runs a word from state `q` and returns the state reached.
    pub fn run(&self, q: StateId, word: &str) -> Result<StateId, UnknownLetter> {
        let indices = self.alphabet.indices(word)?;
        Ok(self.run_indices(q, &indices))
    }

    /// Runs a sequence of letter indices from state `q`.
    pub fn run_indices(&self, q: StateId, word: &[usize]) -> StateId {
        word.iter().fold(q, |state, &letter| self.delta[state][letter])
    }

    pub fn accepts(&self, word: &str) -> Result<bool, UnknownLetter> {
        Ok(self.is_accepting(self.run(self.initial, word)?))
    }

    pub fn accepts_indices(&self, word: &[usize]) -> bool {
        self.is_accepting(self.run_indices(self.initial, word))
    }

    /// The sink state, if this automaton has one: a non-accepting state all
    /// of whose transitions loop back to itself.
    pub fn sink(&self) -> Option<StateId> {
        (0..self.state_count()).find(|&q| {
            !self.is_accepting(q) && self.delta[q].iter().all(|&to| to == q)
        })
    }

    /// The same machine viewed as a (deterministic) NFA.
    pub fn to_nfa(&self) -> Nfa {
        let mut transitions = BTreeSet::new();
        for (from, row) in self.delta.iter().enumerate() {
            for (letter, &to) in row.iter().enumerate() {
                transitions.insert((from, letter, to));
            }
        }
        Nfa::from_indexed(
            self.alphabet.clone(),
            self.state_count(),
            BTreeSet::from([self.initial]),
            self.accepting.clone(),
            transitions,
        )
    }

    /// The language seen from state `q`: the same machine with `q` as the
    /// initial state, renumbered canonically (unreachable states dropped).
    pub fn language_from(&self, q: StateId) -> Dfa {
        assert!(q < self.state_count(), "state {q} out of range");
        let mut reinit = self.clone();
        reinit.initial = q;
        reinit.canonicalize()
    }

    /// Renumbers states breadth-first from the initial state, letters in
    /// alphabet order, dropping unreachable states. Language-preserving.
    pub fn canonicalize(&self) -> Dfa {
        let k = self.alphabet.len();
        let mut order: Vec<StateId> = Vec::new();
        let mut new_id: Vec<Option<StateId>> = vec![None; self.state_count()];
        new_id[self.initial] = Some(0);
        order.push(self.initial);
        let mut next = 0;
        while next < order.len() {
            let q = order[next];
            for letter in 0..k {
                let to = self.delta[q][letter];
                if new_id[to].is_none() {
                    new_id[to] = Some(order.len());
                    order.push(to);
                }
            }
            next += 1;
        }
        let delta = order
            .iter()
            .map(|&q| {
                (0..k)
                    .map(|letter| new_id[self.delta[q][letter]].unwrap())
                    .collect()
            })
            .collect();
        let accepting = self
            .accepting
            .iter()
            .filter_map(|&q| new_id[q])
            .collect();
        Dfa::from_validated(self.alphabet.clone(), 0, accepting, delta)
    }

    /// The unique minimal complete DFA for the same language, in canonical
    /// numbering. Idempotent.
    pub fn minimize(&self) -> Dfa {
        let n = self.state_count();
        let k = self.alphabet.len();
        // Moore refinement: split by acceptance, then by successor blocks
        // until the partition stabilizes.
        let mut block: Vec<usize> = (0..n)
            .map(|q| usize::from(!self.is_accepting(q)))
            .collect();
        let mut block_count = usize::MAX;
        loop {
            let mut assignment: BTreeMap<(usize, Vec<usize>), usize> = BTreeMap::new();
            let mut next_block = vec![0; n];
            for q in 0..n {
                let signature = (
                    block[q],
                    (0..k).map(|letter| block[self.delta[q][letter]]).collect(),
                );
                let fresh = assignment.len();
                next_block[q] = *assignment.entry(signature).or_insert(fresh);
            }
            let next_count = assignment.len();
            block = next_block;
            if next_count == block_count {
                break;
            }
            block_count = next_count;
        }
        // Quotient automaton, then canonical renumbering drops any
        // unreachable blocks.
        let mut representative = vec![usize::MAX; block_count];
        for q in (0..n).rev() {
            representative[block[q]] = q;
        }
        let delta = representative
            .iter()
            .map(|&q| (0..k).map(|letter| block[self.delta[q][letter]]).collect())
            .collect();
        let accepting = (0..block_count)
            .filter(|&b| self.is_accepting(representative[b]))
            .collect();
        Dfa::from_validated(self.alphabet.clone(), block[self.initial], accepting, delta)
            .canonicalize()
    }

    /// Accepts exactly the complement language. The completeness invariant
    /// makes this a plain acceptance flip.
    pub fn complement(&self) -> Dfa {
        let accepting = (0..self.state_count())
            .filter(|&q| !self.is_accepting(q))
            .collect();
        Dfa {
            alphabet: self.alphabet.clone(),
            initial: self.initial,
            accepting,
            delta: self.delta.clone(),
        }
    }

    /// Product automaton for the intersection language, restricted to
    /// reachable pairs and canonically numbered.
    pub fn intersection(&self, other: &Dfa) -> Dfa {
        assert_eq!(
            self.alphabet, other.alphabet,
            "intersection requires identical alphabets"
        );
        let k = self.alphabet.len();
        let nb = other.state_count();
        let encode = |qa: StateId, qb: StateId| qa * nb + qb;
        let mut ids: BTreeMap<usize, StateId> = BTreeMap::new();
        let start = encode(self.initial, other.initial);
        ids.insert(start, 0);
        let mut pairs = vec![(self.initial, other.initial)];
        let mut delta: Vec<Vec<StateId>> = Vec::new();
        let mut accepting = BTreeSet::new();
        let mut next = 0;
        while next < pairs.len() {
            let (qa, qb) = pairs[next];
            if self.is_accepting(qa) && other.is_accepting(qb) {
                accepting.insert(next);
            }
            let mut row = Vec::with_capacity(k);
            for letter in 0..k {
                let pair = (self.delta[qa][letter], other.delta[qb][letter]);
                let code = encode(pair.0, pair.1);
                let id = *ids.entry(code).or_insert_with(|| {
                    pairs.push(pair);
                    pairs.len() - 1
                });
                row.push(id);
            }
            delta.push(row);
            next += 1;
        }
        Dfa::from_validated(self.alphabet.clone(), 0, accepting, delta)
    }

    /// Tests `L(self) ⊆ L(other)`. Returns `None` when the containment
    /// holds, otherwise the shortest word (ties towards earlier letters) in
    /// `L(self) \ L(other)`.
    pub fn subset_counterexample(&self, other: &Dfa) -> Option<String> {
        assert_eq!(
            self.alphabet, other.alphabet,
            "containment requires identical alphabets"
        );
        let k = self.alphabet.len();
        let nb = other.state_count();
        let encode = |qa: StateId, qb: StateId| qa * nb + qb;
        let total = self.state_count() * nb;
        let mut prev: Vec<Option<(usize, usize)>> = vec![None; total];
        let mut seen = vec![false; total];
        let start = encode(self.initial, other.initial);
        seen[start] = true;
        let mut queue = VecDeque::from([start]);
        while let Some(code) = queue.pop_front() {
            let (qa, qb) = (code / nb, code % nb);
            if self.is_accepting(qa) && !other.is_accepting(qb) {
                return Some(self.alphabet.word(&reconstruct(&prev, code)));
            }
            for letter in 0..k {
                let to = encode(self.delta[qa][letter], other.delta[qb][letter]);
                if !seen[to] {
                    seen[to] = true;
                    prev[to] = Some((code, letter));
                    queue.push_back(to);
                }
            }
        }
        None
    }

    /// The shortest accepted word, or `None` when the language is empty.
    pub fn shortest_accepted(&self) -> Option<String> {
        self.shortest_word_such_that(|q| self.is_accepting(q))
            .map(|w| self.alphabet.word(&w))
    }

    /// The shortest word leading from the initial state to `q` (every state
    /// of a canonical automaton is reachable; `None` otherwise).
    pub fn shortest_word_to(&self, q: StateId) -> Option<String> {
        self.shortest_word_such_that(|state| state == q)
            .map(|w| self.alphabet.word(&w))
    }

    fn shortest_word_such_that(&self, goal: impl Fn(StateId) -> bool) -> Option<Vec<usize>> {
        let k = self.alphabet.len();
        let mut prev: Vec<Option<(StateId, usize)>> = vec![None; self.state_count()];
        let mut seen = vec![false; self.state_count()];
        seen[self.initial] = true;
        let mut queue = VecDeque::from([self.initial]);
        while let Some(q) = queue.pop_front() {
            if goal(q) {
                return Some(reconstruct(&prev, q));
            }
            for letter in 0..k {
                let to = self.delta[q][letter];
                if !seen[to] {
                    seen[to] = true;
                    prev[to] = Some((q, letter));
                    queue.push_back(to);
                }
            }
        }
        None
    }

    /// Which states are reachable from `q` (over all letters), `q` included.
    pub fn reachable_from(&self, q: StateId) -> Vec<bool> {
        let mut seen = vec![false; self.state_count()];
        seen[q] = true;
        let mut stack = vec![q];
        while let Some(state) = stack.pop() {
            for &to in &self.delta[state] {
                if !seen[to] {
                    seen[to] = true;
                    stack.push(to);
                }
            }
        }
        seen
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ab() -> Alphabet {
        Alphabet::from_str_letters("ab").unwrap()
    }

    /// Minimal DFA of "no factor bb" in canonical numbering.
    pub(crate) fn no_bb() -> Dfa {
        Dfa::new(
            ab(),
            0,
            [0, 1],
            vec![vec![0, 1], vec![0, 2], vec![2, 2]],
        )
        .unwrap()
    }

    #[test]
    fn run_follows_transitions() {
        let m = no_bb();
        assert_eq!(m.run(0, "ab").unwrap(), 1);
        assert_eq!(m.run(0, "").unwrap(), 0);
        assert_eq!(m.run(2, "abba").unwrap(), 2);
        assert_eq!(m.run(0, "abc"), Err(UnknownLetter('c')));
    }

    #[test]
    fn complete_adds_sink_only_when_needed() {
        // Partial acceptor of a* over {a,b}: b has nowhere to go.
        let d = Dfa::complete(
            ab(),
            0,
            BTreeSet::from([0]),
            vec![vec![Some(0), None]],
        );
        assert_eq!(d.state_count(), 2);
        assert_eq!(d.sink(), Some(1));
        assert!(d.accepts("aa").unwrap());
        assert!(!d.accepts("ab").unwrap());

        // Already-complete input passes through unchanged.
        let full = Dfa::complete(
            ab(),
            0,
            BTreeSet::from([0]),
            vec![vec![Some(0), Some(1)], vec![Some(1), Some(1)]],
        );
        assert_eq!(full.state_count(), 2);
    }

    #[test]
    fn minimize_collapses_equivalent_states() {
        // A 4-state acceptor of "no factor bb" with a duplicated start.
        let d = Dfa::new(
            ab(),
            0,
            [0, 1, 2],
            vec![vec![1, 2], vec![1, 2], vec![1, 3], vec![3, 3]],
        )
        .unwrap();
        let m = d.minimize();
        assert_eq!(m, no_bb());
        // Idempotent.
        assert_eq!(m.minimize(), m);
    }

    #[test]
    fn minimize_full_language_to_single_state() {
        let d = Dfa::new(ab(), 0, [0, 1], vec![vec![1, 0], vec![0, 1]]).unwrap();
        let m = d.minimize();
        assert_eq!(m.state_count(), 1);
        assert!(m.is_accepting(0));
    }

    #[test]
    fn subset_checks_with_shortest_counterexample() {
        // a* ⊆ (a|b)* but not conversely; shortest violator is "b".
        let a_star = Dfa::new(ab(), 0, [0], vec![vec![0, 1], vec![1, 1]]).unwrap();
        let all = Dfa::new(ab(), 0, [0], vec![vec![0, 0]]).unwrap();
        assert_eq!(a_star.subset_counterexample(&all), None);
        assert_eq!(all.subset_counterexample(&a_star).unwrap(), "b");
    }

    #[test]
    fn language_from_each_state() {
        let m = no_bb();
        // L_{q_ini} is L itself.
        assert_eq!(m.language_from(0), m.canonicalize());
        // From the sink, the empty language.
        let from_sink = m.language_from(2);
        assert_eq!(from_sink.shortest_accepted(), None);
        // From q1 ("just read b"), words with no bb not starting with b.
        let from_q1 = m.language_from(1);
        assert!(from_q1.accepts("a").unwrap());
        assert!(!from_q1.accepts("b").unwrap());
        for w in ab().words_up_to(5) {
            let expected = {
                // no factor bb and no leading b, checked naively
                let s = ab().word(&w);
                !s.starts_with('b') && !s.contains("bb")
            };
            assert_eq!(from_q1.accepts_indices(&w), expected);
        }
    }

    #[test]
    fn product_and_emptiness_witness() {
        // Words with no bb that are not in a*: shortest is "b".
        let a_star = Dfa::new(ab(), 0, [0], vec![vec![0, 1], vec![1, 1]]).unwrap();
        let product = no_bb().intersection(&a_star.complement());
        assert_eq!(product.shortest_accepted().unwrap(), "b");
        // An acceptor with no accepting states is empty.
        let none = Dfa::new(ab(), 0, [], vec![vec![0, 0]]).unwrap();
        assert_eq!(none.shortest_accepted(), None);
        // (ab)*: the empty word is the shortest member.
        let abstar = Dfa::new(
            ab(),
            0,
            [0],
            vec![vec![1, 2], vec![2, 0], vec![2, 2]],
        )
        .unwrap();
        assert_eq!(abstar.shortest_accepted().unwrap(), "");
    }

    #[test]
    fn sink_detection() {
        assert_eq!(no_bb().sink(), Some(2));
        let all = Dfa::new(ab(), 0, [0], vec![vec![0, 0]]).unwrap();
        assert_eq!(all.sink(), None);
    }
}
