//! Automata toolkit and decision engine for cellular regular languages.
//!
//! A regular language is *cellular* when it is exactly the set of finite
//! blocks (plus the empty word) occurring in images of a one-dimensional
//! cellular automaton's global map. This crate provides:
//!
//! * a small finite-automaton substrate ([`Nfa`], [`Dfa`]) with subset
//!   construction, Moore minimization, containment tests with shortest
//!   counterexamples, and transition-monoid enumeration;
//! * a regular-expression frontend ([`regex`]);
//! * the De Bruijn construction of a cellular automaton's block language
//!   ([`ca`]);
//! * the cellularity decision procedure with verifiable certificates
//!   ([`decide`]).
//!
//! Everything is deterministic: canonical state numbering, shortest-then-
//! lexicographic tie-breaking for every witness and counterexample word.
//!
//! The crate is `no_std` (with `alloc`); file formats and the command-line
//! interface live in the companion `cellang-cli` crate.

#![no_std]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod alphabet;
pub mod ca;
pub mod decide;
pub mod dfa;
pub mod monoid;
pub mod nfa;
pub mod regex;

pub use alphabet::{Alphabet, AlphabetError, UnknownLetter};
pub use dfa::Dfa;
pub use monoid::{MonoidCapExceeded, StateAction, TransitionMonoid};
pub use nfa::Nfa;

/// States are dense indices into an automaton's state table.
pub type StateId = usize;

/// Default cap on the number of distinct transition-monoid elements.
pub const DEFAULT_MONOID_CAP: usize = 1_000_000;
