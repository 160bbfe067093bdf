//! Nondeterministic Büchi automata: data model, exchange format, word
//! semantics, products, emptiness and random instances.

mod alphabet;
mod dot;
mod emptiness;
mod format;
pub mod graph;
mod membership;
mod product;
mod random;
mod word;

pub use alphabet::Alphabet;
pub use dot::to_dot;
pub use emptiness::is_empty;
pub use format::{parse_nba, serialize_nba};
pub use membership::{membership, WordChecker};
pub use product::intersect;
pub use random::random_nba;
pub use word::{UpWord, WordError};

use thiserror::Error;

use crate::stateset::{StateSet, MAX_SET_STATES};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum NbaError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("line {line}: unknown letter `{token}`")]
    UnknownLetter { line: usize, token: String },
    #[error("line {line}: state {state} out of range (automaton has {states} states)")]
    StateOutOfRange {
        line: usize,
        state: usize,
        states: usize,
    },
    #[error("empty initial set")]
    EmptyInitialSet,
    #[error("invalid letter token `{0}`")]
    InvalidToken(String),
    #[error("duplicate letter `{0}`")]
    DuplicateLetter(String),
    #[error("alphabet must not be empty")]
    EmptyAlphabet,
    #[error("alphabet mismatch")]
    AlphabetMismatch,
    #[error("state {state} out of range (automaton has {states} states)")]
    BadState { state: usize, states: usize },
    #[error("letter index {0} out of range")]
    BadLetter(usize),
}

/// A nondeterministic Büchi automaton over an explicit alphabet.
///
/// States are the integers `0..num_states()`. A missing transition entry
/// stands for the empty successor set, so runs may die.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Nba {
    alphabet: Alphabet,
    num_states: usize,
    initial: Vec<usize>,
    accepting: Vec<bool>,
    // trans[q][letter] is sorted and duplicate free
    trans: Vec<Vec<Vec<usize>>>,
}

impl Nba {
    pub fn new(
        alphabet: Alphabet,
        num_states: usize,
        initial: impl IntoIterator<Item = usize>,
        accepting: impl IntoIterator<Item = usize>,
        transitions: impl IntoIterator<Item = (usize, usize, usize)>,
    ) -> Result<Nba, NbaError> {
        let mut b = NbaBuilder::new(alphabet, num_states);
        for q in initial {
            b.check_state(q)?;
            b.set_initial(q);
        }
        for q in accepting {
            b.check_state(q)?;
            b.set_accepting(q, true);
        }
        for (p, a, q) in transitions {
            b.check_state(p)?;
            b.check_state(q)?;
            if a >= b.alphabet.len() {
                return Err(NbaError::BadLetter(a));
            }
            b.add_edge(p, a, q);
        }
        b.build()
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn num_states(&self) -> usize {
        self.num_states
    }

    pub fn num_letters(&self) -> usize {
        self.alphabet.len()
    }

    /// Initial states in ascending order.
    pub fn initial(&self) -> &[usize] {
        &self.initial
    }

    pub fn is_accepting(&self, q: usize) -> bool {
        self.accepting[q]
    }

    pub fn accepting_states(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.num_states).filter(|&q| self.accepting[q])
    }

    pub fn num_accepting(&self) -> usize {
        self.accepting.iter().filter(|&&b| b).count()
    }

    /// `δ(q, letter)` in ascending order.
    pub fn succ(&self, q: usize, letter: usize) -> &[usize] {
        &self.trans[q][letter]
    }

    /// Number of transition triples, i.e. the sum of `|δ(q,σ)|`.
    pub fn edge_count(&self) -> usize {
        self.trans.iter().flatten().map(Vec::len).sum()
    }

    /// All transitions sorted by (source, letter, target).
    pub fn transitions(&self) -> impl Iterator<Item = (usize, usize, usize)> + '_ {
        self.trans.iter().enumerate().flat_map(|(p, row)| {
            row.iter()
                .enumerate()
                .flat_map(move |(a, ts)| ts.iter().map(move |&q| (p, a, q)))
        })
    }

    /// Whether the automaton fits into the [`StateSet`] representation used
    /// by the rank-based constructions.
    pub fn fits_state_set(&self) -> bool {
        self.num_states <= MAX_SET_STATES
    }

    pub fn initial_set(&self) -> StateSet {
        self.initial.iter().copied().collect()
    }

    pub fn accepting_set(&self) -> StateSet {
        self.accepting_states().collect()
    }

    /// `δ(S, letter)`: the union of the successors of every state in `s`.
    ///
    /// Requires [`Nba::fits_state_set`].
    pub fn successors(&self, s: StateSet, letter: usize) -> StateSet {
        let mut out = StateSet::empty();
        for q in s {
            for &t in &self.trans[q][letter] {
                out.insert(t);
            }
        }
        out
    }

    /// Drops one transition triple. Used to build fault-injected variants.
    pub fn without_transition(&self, p: usize, letter: usize, q: usize) -> Nba {
        let mut out = self.clone();
        out.trans[p][letter].retain(|&t| t != q);
        out
    }

    /// Clears the accepting mark of `q`.
    pub fn without_accepting(&self, q: usize) -> Nba {
        let mut out = self.clone();
        out.accepting[q] = false;
        out
    }
}

/// Incremental construction of an [`Nba`]; the complement constructions
/// discover states on the fly and use this.
#[derive(Debug, Clone)]
pub struct NbaBuilder {
    alphabet: Alphabet,
    initial: Vec<usize>,
    accepting: Vec<bool>,
    trans: Vec<Vec<Vec<usize>>>,
}

impl NbaBuilder {
    pub fn new(alphabet: Alphabet, num_states: usize) -> Self {
        let k = alphabet.len();
        NbaBuilder {
            alphabet,
            initial: Vec::new(),
            accepting: vec![false; num_states],
            trans: vec![vec![Vec::new(); k]; num_states],
        }
    }

    pub fn num_states(&self) -> usize {
        self.accepting.len()
    }

    fn check_state(&self, q: usize) -> Result<(), NbaError> {
        if q < self.num_states() {
            Ok(())
        } else {
            Err(NbaError::BadState {
                state: q,
                states: self.num_states(),
            })
        }
    }

    pub fn add_state(&mut self, accepting: bool) -> usize {
        self.accepting.push(accepting);
        self.trans.push(vec![Vec::new(); self.alphabet.len()]);
        self.accepting.len() - 1
    }

    pub fn set_initial(&mut self, q: usize) {
        self.initial.push(q);
    }

    pub fn set_accepting(&mut self, q: usize, accepting: bool) {
        self.accepting[q] = accepting;
    }

    pub fn add_edge(&mut self, p: usize, letter: usize, q: usize) {
        self.trans[p][letter].push(q);
    }

    /// Replaces `δ(p, letter)` wholesale.
    pub fn set_successors(&mut self, p: usize, letter: usize, targets: Vec<usize>) {
        self.trans[p][letter] = targets;
    }

    pub fn build(mut self) -> Result<Nba, NbaError> {
        self.initial.sort_unstable();
        self.initial.dedup();
        if self.initial.is_empty() {
            return Err(NbaError::EmptyInitialSet);
        }
        for row in &mut self.trans {
            for ts in row {
                ts.sort_unstable();
                ts.dedup();
            }
        }
        Ok(Nba {
            num_states: self.accepting.len(),
            alphabet: self.alphabet,
            initial: self.initial,
            accepting: self.accepting,
            trans: self.trans,
        })
    }
}


#[cfg(test)]
mod tests {
    use super::fixtures::*;
    use super::*;

    #[test]
    fn successors_of_a1() {
        let a = a1();
        let s = |v: &[usize]| v.iter().copied().collect::<StateSet>();
        assert_eq!(a.successors(s(&[0]), 0), s(&[0, 1]));
        assert_eq!(a.successors(s(&[1]), 0), s(&[]));
        assert_eq!(a.successors(s(&[0, 1]), 1), s(&[1]));
        assert_eq!(a.successors(s(&[]), 1), s(&[]));
    }

    #[test]
    fn constructor_rejects_bad_input() {
        let al = Alphabet::new(["a"]).unwrap();
        assert_eq!(
            Nba::new(al.clone(), 1, [], [], []).unwrap_err(),
            NbaError::EmptyInitialSet
        );
        assert!(matches!(
            Nba::new(al.clone(), 1, [0], [], [(0, 0, 3)]),
            Err(NbaError::BadState { state: 3, .. })
        ));
        assert!(matches!(
            Nba::new(al, 1, [0], [], [(0, 1, 0)]),
            Err(NbaError::BadLetter(1))
        ));
    }

    #[test]
    fn edge_count_and_order() {
        let a = a1();
        assert_eq!(a.edge_count(), 3);
        assert_eq!(
            a.transitions().collect::<Vec<_>>(),
            vec![(0, 0, 0), (0, 0, 1), (1, 1, 1)]
        );
    }
}
