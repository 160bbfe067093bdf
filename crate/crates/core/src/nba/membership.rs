use super::graph::{has_accepting_cycle, Graph};
use super::{Nba, UpWord};

/// Decides `w ∈ L(a)` exactly on the lasso product of `a` with the word.
pub fn membership(a: &Nba, w: &UpWord) -> bool {
    WordChecker::new(a).accepts(w)
}

/// Membership checker with scratch buffers reused across many words.
///
/// The lasso product has vertices `(state, position)` where positions run
/// over the stem followed by one copy of the period, and the position after
/// the last period letter is identified with the first period position. A
/// word is accepted iff a reachable product vertex with an accepting state
/// lies on a cycle.
pub struct WordChecker<'a> {
    nba: &'a Nba,
    slot: Vec<u32>,
    touched: Vec<usize>,
}

impl<'a> WordChecker<'a> {
    pub fn new(nba: &'a Nba) -> Self {
        WordChecker {
            nba,
            slot: Vec::new(),
            touched: Vec::new(),
        }
    }

    pub fn accepts(&mut self, w: &UpWord) -> bool {
        let stem = w.stem().len();
        let m = stem + w.period().len();
        let n = self.nba.num_states();
        let need = n * m;
        if self.slot.len() < need {
            self.slot.resize(need, u32::MAX);
        }

        let next = |pos: usize| if pos + 1 < m { pos + 1 } else { stem };
        let mut verts: Vec<(usize, usize)> = Vec::new();
        let mut adj: Vec<Vec<u32>> = Vec::new();

        let intern = |q: usize, pos: usize, verts: &mut Vec<(usize, usize)>, slot: &mut Vec<u32>, touched: &mut Vec<usize>| {
            let key = q * m + pos;
            if slot[key] == u32::MAX {
                slot[key] = verts.len() as u32;
                touched.push(key);
                verts.push((q, pos));
            }
            slot[key]
        };

        for &q in self.nba.initial() {
            intern(q, 0, &mut verts, &mut self.slot, &mut self.touched);
        }
        let mut head = 0;
        while head < verts.len() {
            let (q, pos) = verts[head];
            let letter = w.letter_at(pos);
            let np = next(pos);
            let mut row = Vec::with_capacity(self.nba.succ(q, letter).len());
            for &t in self.nba.succ(q, letter) {
                row.push(intern(t, np, &mut verts, &mut self.slot, &mut self.touched));
            }
            adj.push(row);
            head += 1;
        }

        for key in self.touched.drain(..) {
            self.slot[key] = u32::MAX;
        }

        let accepting: Vec<bool> = verts.iter().map(|&(q, _)| self.nba.is_accepting(q)).collect();
        has_accepting_cycle(&Graph::from_adjacency(&adj), &accepting)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::nba::fixtures::*;
    use crate::nba::{random_nba, Alphabet};

    fn word(text: &str, a: &Nba) -> UpWord {
        UpWord::parse(text, a.alphabet()).unwrap()
    }

    /// Independent oracle: an accepting lasso run exists iff some state
    /// sequence of bounded length revisits a (state, period position) pair
    /// with an accepting state in between. Enumerates runs explicitly.
    fn brute_force(a: &Nba, w: &UpWord) -> bool {
        let stem = w.stem().len();
        let per = w.period().len();
        let n = a.num_states();
        // Any accepting lasso in the product has its loop within n*per steps
        // after reaching the periodic part.
        let horizon = stem + 2 * n * per + 1;
        fn go(a: &Nba, w: &UpWord, trace: &mut Vec<usize>, horizon: usize, stem: usize, per: usize) -> bool {
            let pos = trace.len() - 1;
            let q = *trace.last().unwrap();
            if pos >= stem {
                // look for an earlier position with the same state and
                // period phase, with an accepting state in between
                for earlier in (stem..pos).rev() {
                    if (pos - earlier).is_multiple_of(per)
                        && trace[earlier] == q
                        && trace[earlier..pos].iter().any(|&s| a.is_accepting(s))
                    {
                        return true;
                    }
                }
            }
            if pos >= horizon {
                return false;
            }
            for &t in a.succ(q, w.letter_at(pos)) {
                trace.push(t);
                if go(a, w, trace, horizon, stem, per) {
                    return true;
                }
                trace.pop();
            }
            false
        }
        a.initial()
            .iter()
            .any(|&q| go(a, w, &mut vec![q], horizon, stem, per))
    }

    #[test]
    fn a1_words() {
        let a = a1();
        assert!(membership(&a, &word("a(b)", &a)));
        assert!(!membership(&a, &word("(a)", &a)));
        assert!(membership(&a, &word("aaa(b)", &a)));
        assert!(!membership(&a, &word("(ab)", &a)));
        assert!(!membership(&a, &word("b(b)", &a)));
        assert!(brute_force(&a, &word("a(b)", &a)));
        assert!(!brute_force(&a, &word("(a)", &a)));
    }

    #[test]
    fn empty_accepting_set() {
        let a = single_loop(false);
        assert!(!membership(&a, &word("(a)", &a)));
        assert!(membership(&single_loop(true), &word("(a)", &a)));
    }

    #[test]
    fn agrees_with_run_enumeration() {
        let ab = Alphabet::standard(2);
        for seed in 0..40 {
            let a = random_nba(3, 2, 1.3, 0.4, seed);
            for w in ["(a)", "(b)", "a(b)", "(ab)", "ba(ab)", "(aab)", "b(abb)"] {
                let w = UpWord::parse(w, &ab).unwrap();
                assert_eq!(membership(&a, &w), brute_force(&a, &w), "seed {seed} word {w:?}");
            }
        }
    }

    #[test]
    fn invariant_under_unrolling() {
        let ab = Alphabet::standard(2);
        for seed in 0..30 {
            let a = random_nba(4, 2, 1.5, 0.5, seed);
            let mut checker = WordChecker::new(&a);
            for w in ["(a)", "b(ab)", "ab(bba)", "(abab)"] {
                let w = UpWord::parse(w, &ab).unwrap();
                let base = checker.accepts(&w);
                assert_eq!(checker.accepts(&w.unrolled(1)), base);
                assert_eq!(checker.accepts(&w.period_repeated(2)), base);
            }
        }
    }

    #[test]
    fn removing_transitions_never_adds_words() {
        let ab = Alphabet::standard(2);
        for seed in 0..20 {
            let a = random_nba(4, 2, 1.5, 0.5, seed);
            let Some((p, l, q)) = a.transitions().next() else { continue };
            let smaller = a.without_transition(p, l, q);
            for w in ["(a)", "(b)", "a(b)", "(ab)", "b(aab)"] {
                let w = UpWord::parse(w, &ab).unwrap();
                assert!(!membership(&smaller, &w) || membership(&a, &w));
            }
        }
    }
}
