//! Non-deterministic finite automata (without epsilon moves).
//!
//! States are dense indices `0..state_count`. Acceptance is by reaching at
//! least one accepting state from at least one initial state; the empty word
//! is accepted exactly when some initial state is accepting.

use alloc::collections::{BTreeMap, BTreeSet, VecDeque};
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::alphabet::{Alphabet, UnknownLetter};
use crate::dfa::Dfa;
use crate::StateId;

/// A non-deterministic automaton over single-character letters.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Nfa {
    alphabet: Alphabet,
    state_count: usize,
    initial: BTreeSet<StateId>,
    accepting: BTreeSet<StateId>,
    /// Transition triples `(from, letter index, to)`.
    transitions: BTreeSet<(StateId, usize, StateId)>,
}

/// Rejected automaton constructions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum NfaError {
    StateOutOfRange(StateId),
    UnknownLetter(char),
}

impl fmt::Display for NfaError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NfaError::StateOutOfRange(q) => write!(f, "state {q} out of range"),
            NfaError::UnknownLetter(c) => write!(f, "letter {c:?} is not in the alphabet"),
        }
    }
}

impl core::error::Error for NfaError {}

impl Nfa {
    /// Builds an NFA, validating that all ids are in range and all letters
    /// belong to the alphabet.
    pub fn new<I, A>(
        alphabet: Alphabet,
        state_count: usize,
        initial: I,
        accepting: A,
        transitions: &[(StateId, char, StateId)],
    ) -> Result<Self, NfaError>
    where
        I: IntoIterator<Item = StateId>,
        A: IntoIterator<Item = StateId>,
    {
        let initial: BTreeSet<StateId> = initial.into_iter().collect();
        let accepting: BTreeSet<StateId> = accepting.into_iter().collect();
        for &q in initial.iter().chain(accepting.iter()) {
            if q >= state_count {
                return Err(NfaError::StateOutOfRange(q));
            }
        }
        let mut triples = BTreeSet::new();
        for &(from, letter, to) in transitions {
            if from >= state_count {
                return Err(NfaError::StateOutOfRange(from));
            }
            if to >= state_count {
                return Err(NfaError::StateOutOfRange(to));
            }
            let li = alphabet
                .index_of(letter)
                .ok_or(NfaError::UnknownLetter(letter))?;
            triples.insert((from, li, to));
        }
        Ok(Nfa {
            alphabet,
            state_count,
            initial,
            accepting,
            transitions: triples,
        })
    }

    /// Internal constructor for already-validated index-based transitions.
    pub(crate) fn from_indexed(
        alphabet: Alphabet,
        state_count: usize,
        initial: BTreeSet<StateId>,
        accepting: BTreeSet<StateId>,
        transitions: BTreeSet<(StateId, usize, StateId)>,
    ) -> Self {
        debug_assert!(initial.iter().all(|&q| q < state_count));
        debug_assert!(accepting.iter().all(|&q| q < state_count));
        debug_assert!(transitions
            .iter()
            .all(|&(f, l, t)| f < state_count && t < state_count && l < alphabet.len()));
        Nfa {
            alphabet,
            state_count,
            initial,
            accepting,
            transitions,
        }
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn state_count(&self) -> usize {
        self.state_count
    }

    pub fn initial(&self) -> &BTreeSet<StateId> {
        &self.initial
    }

    pub fn accepting(&self) -> &BTreeSet<StateId> {
        &self.accepting
    }

    /// Transition triples `(from, letter index, to)` in sorted order.
    pub fn transitions(&self) -> impl Iterator<Item = (StateId, usize, StateId)> + '_ {
        self.transitions.iter().copied()
    }

    /// Successor lists indexed by `[state][letter]`, each sorted ascending.
    pub(crate) fn successor_table(&self) -> Vec<Vec<Vec<StateId>>> {
        let mut table = vec![vec![Vec::new(); self.alphabet.len()]; self.state_count];
        for &(from, letter, to) in &self.transitions {
            table[from][letter].push(to);
        }
        table
    }

    /// Direct simulation: tracks the set of states reachable on the input.
    pub fn accepts(&self, word: &str) -> Result<bool, UnknownLetter> {
        let indices = self.alphabet.indices(word)?;
        Ok(self.accepts_indices(&indices))
    }

    /// Direct simulation over letter indices.
    pub fn accepts_indices(&self, word: &[usize]) -> bool {
        let table = self.successor_table();
        let mut current: BTreeSet<StateId> = self.initial.clone();
        for &letter in word {
            let mut next = BTreeSet::new();
            for &q in &current {
                next.extend(table[q][letter].iter().copied());
            }
            current = next;
            if current.is_empty() {
                return false;
            }
        }
        current.iter().any(|q| self.accepting.contains(q))
    }

    /// The shortest accepted word, ties broken towards earlier letters, or
    /// `None` when the language is empty.
    pub fn shortest_accepted(&self) -> Option<String> {
        let table = self.successor_table();
        let mut prev: Vec<Option<(StateId, usize)>> = vec![None; self.state_count];
        let mut seen = vec![false; self.state_count];
        let mut queue = VecDeque::new();
        for &q in &self.initial {
            seen[q] = true;
            queue.push_back(q);
        }
        while let Some(q) = queue.pop_front() {
            if self.accepting.contains(&q) {
                return Some(self.alphabet.word(&reconstruct(&prev, q)));
            }
            for letter in 0..self.alphabet.len() {
                for &to in &table[q][letter] {
                    if !seen[to] {
                        seen[to] = true;
                        prev[to] = Some((q, letter));
                        queue.push_back(to);
                    }
                }
            }
        }
        None
    }

    /// Subset construction. The result is a complete DFA whose states are
    /// the reachable subsets (the empty subset acts as the completion sink),
    /// numbered breadth-first with letters in alphabet order.
    pub fn determinize(&self) -> Dfa {
        let table = self.successor_table();
        let k = self.alphabet.len();
        let start: Vec<StateId> = self.initial.iter().copied().collect();
        let mut ids: BTreeMap<Vec<StateId>, StateId> = BTreeMap::new();
        ids.insert(start.clone(), 0);
        let mut subsets = vec![start];
        let mut delta: Vec<Vec<StateId>> = Vec::new();
        let mut accepting = BTreeSet::new();
        let mut next_to_process = 0;
        while next_to_process < subsets.len() {
            let subset = subsets[next_to_process].clone();
            if subset.iter().any(|q| self.accepting.contains(q)) {
                accepting.insert(next_to_process);
            }
            let mut row = Vec::with_capacity(k);
            for letter in 0..k {
                let mut image = BTreeSet::new();
                for &q in &subset {
                    image.extend(table[q][letter].iter().copied());
                }
                let image: Vec<StateId> = image.into_iter().collect();
                let id = match ids.get(&image) {
                    Some(&id) => id,
                    None => {
                        let id = subsets.len();
                        ids.insert(image.clone(), id);
                        subsets.push(image);
                        id
                    }
                };
                row.push(id);
            }
            delta.push(row);
            next_to_process += 1;
        }
        Dfa::from_validated(self.alphabet.clone(), 0, accepting, delta)
    }

    /// Reinterprets this automaton over a larger alphabet. Letters of the new
    /// alphabet that the automaton never mentions have no transitions, so the
    /// accepted language is unchanged.
    pub fn embed_in(&self, alphabet: Alphabet) -> Result<Nfa, UnknownLetter> {
        let mut transitions = BTreeSet::new();
        for &(from, letter, to) in &self.transitions {
            let c = self.alphabet.letter(letter);
            let li = alphabet.index_of(c).ok_or(UnknownLetter(c))?;
            transitions.insert((from, li, to));
        }
        Ok(Nfa {
            alphabet,
            state_count: self.state_count,
            initial: self.initial.clone(),
            accepting: self.accepting.clone(),
            transitions,
        })
    }

    /// A deterministic view of this automaton: exactly one initial state and
    /// at most one successor per `(state, letter)`. Missing transitions are
    /// completed into a fresh sink. `None` when the automaton is genuinely
    /// non-deterministic.
    pub fn as_dfa(&self) -> Option<Dfa> {
        if self.initial.len() != 1 {
            return None;
        }
        let mut partial = vec![vec![None; self.alphabet.len()]; self.state_count];
        for &(from, letter, to) in &self.transitions {
            if partial[from][letter].replace(to).is_some() {
                return None;
            }
        }
        Some(Dfa::complete(
            self.alphabet.clone(),
            *self.initial.iter().next().unwrap(),
            self.accepting.clone(),
            partial,
        ))
    }
}

/// Walks a predecessor chain back to a root (roots carry no predecessor)
/// and returns the letter indices along the way, in forward order.
pub(crate) fn reconstruct(prev: &[Option<(StateId, usize)>], target: StateId) -> Vec<usize> {
    let mut word = Vec::new();
    let mut q = target;
    while let Some((p, letter)) = prev[q] {
        word.push(letter);
        q = p;
    }
    word.reverse();
    word
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ab() -> Alphabet {
        Alphabet::from_str_letters("ab").unwrap()
    }

    #[test]
    fn rejects_out_of_range_and_foreign_letters() {
        assert_eq!(
            Nfa::new(ab(), 2, [0], [1], &[(0, 'a', 7)]),
            Err(NfaError::StateOutOfRange(7))
        );
        assert_eq!(
            Nfa::new(ab(), 2, [0], [1], &[(0, 'c', 1)]),
            Err(NfaError::UnknownLetter('c'))
        );
    }

    #[test]
    fn epsilon_accepted_iff_initial_accepting() {
        let n = Nfa::new(ab(), 2, [0], [1], &[(0, 'a', 1)]).unwrap();
        assert!(!n.accepts("").unwrap());
        assert!(n.accepts("a").unwrap());
        let m = Nfa::new(ab(), 1, [0], [0], &[]).unwrap();
        assert!(m.accepts("").unwrap());
    }

    #[test]
    fn determinize_single_letter_language() {
        // Regex "a" over {a}: exactly three subset states {0}, {1}, {}.
        let a = Alphabet::from_str_letters("a").unwrap();
        let n = Nfa::new(a, 2, [0], [1], &[(0, 'a', 1)]).unwrap();
        let d = n.determinize();
        assert_eq!(d.state_count(), 3);
        assert!(d.accepts("a").unwrap());
        assert!(!d.accepts("").unwrap());
        assert!(!d.accepts("aa").unwrap());
    }

    #[test]
    fn determinize_agrees_with_simulation_on_short_words() {
        // A golden-mean-type NFA: no two consecutive b's, tracked loosely.
        let n = Nfa::new(
            ab(),
            2,
            [0],
            [0, 1],
            &[(0, 'a', 0), (0, 'b', 1), (1, 'a', 0)],
        )
        .unwrap();
        let d = n.determinize();
        for w in ab().words_up_to(10) {
            assert_eq!(
                n.accepts_indices(&w),
                d.accepts_indices(&w),
                "disagreement on {:?}",
                ab().word(&w)
            );
        }
    }

    #[test]
    fn shortest_accepted_prefers_short_then_lex() {
        let n = Nfa::new(ab(), 2, [0], [1], &[(0, 'b', 1), (0, 'a', 1)]).unwrap();
        assert_eq!(n.shortest_accepted().unwrap(), "a");
        let empty = Nfa::new(ab(), 1, [0], [], &[]).unwrap();
        assert_eq!(empty.shortest_accepted(), None);
    }

    #[test]
    fn empty_initial_set_yields_reject_all_dfa() {
        let n = Nfa::new(ab(), 1, [], [0], &[]).unwrap();
        let d = n.determinize();
        assert_eq!(d.state_count(), 1);
        assert!(!d.accepts("").unwrap());
        assert!(!d.accepts("ab").unwrap());
    }
}
