//! Finite alphabets with a fixed letter order.
//!
//! The declared order of the letters is used everywhere for deterministic
//! tie-breaking: breadth-first exploration, canonical state numbering, and
//! lexicographically-least witness words all follow it.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

/// An ordered, duplicate-free set of single-character letters.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Alphabet {
    letters: Vec<char>,
}

/// Rejected alphabet constructions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AlphabetError {
    Empty,
    Duplicate(char),
    /// Whitespace, `#` (comment marker) and `_` (empty-word literal) are
    /// reserved by the text formats and cannot be letters.
    Reserved(char),
}

impl fmt::Display for AlphabetError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AlphabetError::Empty => write!(f, "alphabet must not be empty"),
            AlphabetError::Duplicate(c) => write!(f, "duplicate letter {c:?}"),
            AlphabetError::Reserved(c) => write!(f, "letter {c:?} is reserved"),
        }
    }
}

impl core::error::Error for AlphabetError {}

/// A word contained a character outside the declared alphabet.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct UnknownLetter(pub char);

impl fmt::Display for UnknownLetter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "letter {:?} is not in the alphabet", self.0)
    }
}

impl core::error::Error for UnknownLetter {}

impl Alphabet {
    /// Builds an alphabet from letters in the given order.
    pub fn new<I: IntoIterator<Item = char>>(letters: I) -> Result<Self, AlphabetError> {
        let letters: Vec<char> = letters.into_iter().collect();
        if letters.is_empty() {
            return Err(AlphabetError::Empty);
        }
        for (i, &c) in letters.iter().enumerate() {
            if c.is_whitespace() || c == '#' || c == '_' {
                return Err(AlphabetError::Reserved(c));
            }
            if letters[..i].contains(&c) {
                return Err(AlphabetError::Duplicate(c));
            }
        }
        Ok(Alphabet { letters })
    }

    /// Shorthand: one letter per character of `s`, in order.
    pub fn from_str_letters(s: &str) -> Result<Self, AlphabetError> {
        Self::new(s.chars())
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// The letter at a given index in declaration order.
    pub fn letter(&self, index: usize) -> char {
        self.letters[index]
    }

    /// The index of a letter, or `None` if it is not in the alphabet.
    pub fn index_of(&self, c: char) -> Option<usize> {
        self.letters.iter().position(|&l| l == c)
    }

    pub fn contains(&self, c: char) -> bool {
        self.index_of(c).is_some()
    }

    pub fn iter(&self) -> impl Iterator<Item = char> + '_ {
        self.letters.iter().copied()
    }

    /// Renders a sequence of letter indices as a word.
    pub fn word(&self, indices: &[usize]) -> String {
        indices.iter().map(|&i| self.letter(i)).collect()
    }

    /// Splits a word into letter indices, or reports the first foreign char.
    pub fn indices(&self, word: &str) -> Result<Vec<usize>, UnknownLetter> {
        word.chars()
            .map(|c| self.index_of(c).ok_or(UnknownLetter(c)))
            .collect()
    }

    /// All words of length at most `max_len`, shortest first, letters in
    /// alphabet order within each length. Starts with the empty word.
    pub fn words_up_to(&self, max_len: usize) -> WordsUpTo<'_> {
        WordsUpTo {
            alphabet: self,
            max_len,
            current: Some(Vec::new()),
        }
    }
}

/// Iterator over all words up to a length bound, in (length, lex) order.
pub struct WordsUpTo<'a> {
    alphabet: &'a Alphabet,
    max_len: usize,
    current: Option<Vec<usize>>,
}

impl Iterator for WordsUpTo<'_> {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        let word = self.current.take()?;
        self.current = successor(&word, self.alphabet.len(), self.max_len);
        Some(word)
    }
}

// Counting in base |alphabet|, rolling over to the next length.
fn successor(word: &[usize], base: usize, max_len: usize) -> Option<Vec<usize>> {
    let mut next = word.to_vec();
    for i in (0..next.len()).rev() {
        if next[i] + 1 < base {
            next[i] += 1;
            for d in next[i + 1..].iter_mut() {
                *d = 0;
            }
            return Some(next);
        }
    }
    if word.len() < max_len {
        Some(alloc::vec![0; word.len() + 1])
    } else {
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    #[test]
    fn order_is_declaration_order() {
        let ab = Alphabet::from_str_letters("ba").unwrap();
        assert_eq!(ab.letter(0), 'b');
        assert_eq!(ab.index_of('a'), Some(1));
        assert_eq!(ab.index_of('c'), None);
    }

    #[test]
    fn rejects_reserved_and_duplicates() {
        assert_eq!(Alphabet::from_str_letters(""), Err(AlphabetError::Empty));
        assert_eq!(
            Alphabet::from_str_letters("aa"),
            Err(AlphabetError::Duplicate('a'))
        );
        assert_eq!(
            Alphabet::from_str_letters("a_"),
            Err(AlphabetError::Reserved('_'))
        );
        assert_eq!(
            Alphabet::from_str_letters("a#"),
            Err(AlphabetError::Reserved('#'))
        );
        assert_eq!(
            Alphabet::from_str_letters("a b"),
            Err(AlphabetError::Reserved(' '))
        );
    }

    #[test]
    fn words_enumerate_in_length_then_lex_order() {
        let ab = Alphabet::from_str_letters("ab").unwrap();
        let words: Vec<String> = ab.words_up_to(2).map(|w| ab.word(&w)).collect();
        assert_eq!(words, vec!["", "a", "b", "aa", "ab", "ba", "bb"]);
        assert_eq!(ab.words_up_to(3).count(), 1 + 2 + 4 + 8);
    }
}
