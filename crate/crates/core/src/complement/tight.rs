use std::collections::HashMap;

use super::explore::Rules;
use super::{ComplementState, RankedState};
use crate::nba::Nba;
use crate::ranking::{enumerate_tight, le_succ, tight_successors, LevelRanking};
use crate::stateset::StateSet;

pub(super) struct TightRules<'a> {
    a: &'a Nba,
    entry: HashMap<StateSet, Vec<LevelRanking>>,
}

impl<'a> TightRules<'a> {
    pub(super) fn new(a: &'a Nba) -> Self {
        TightRules {
            a,
            entry: HashMap::new(),
        }
    }
}

/// The cut-point update shared by the tight and reduced constructions. When
/// `O` is empty the next even rank is checked, otherwise the current one is
/// followed along `δ(O,σ)`.
pub(super) fn next_cut(a: &Nba, st: &RankedState, g: &LevelRanking, letter: usize) -> (StateSet, u8) {
    let i = st.i.expect("tight states carry an index");
    let r = g.rank().expect("nonempty support");
    if st.o.is_empty() {
        let i2 = (i + 2) % (r + 1);
        (g.preimage(i2), i2)
    } else {
        (a.successors(st.o, letter).intersection(g.preimage(i)), i)
    }
}

pub(super) fn ranked(s: StateSet, o: StateSet, f: LevelRanking, i: u8) -> ComplementState {
    ComplementState::Ranked(RankedState { s, o, f, i: Some(i) })
}

pub(super) fn accepting(st: &ComplementState) -> bool {
    match st {
        ComplementState::Subset(s) => s.is_empty(),
        ComplementState::Ranked(r) => r.o.is_empty(),
    }
}

impl Rules for TightRules<'_> {
    fn initial(&mut self) -> Vec<ComplementState> {
        vec![ComplementState::Subset(self.a.initial_set())]
    }

    fn successors(&mut self, from: &ComplementState, letter: usize) -> Vec<ComplementState> {
        let a = self.a;
        match from {
            ComplementState::Subset(s) => {
                let s2 = a.successors(*s, letter);
                let mut out = vec![ComplementState::Subset(s2)];
                if !s2.is_empty() {
                    let entry = self.entry.entry(s2).or_insert_with(|| enumerate_tight(a, s2));
                    out.extend(entry.iter().map(|f| ranked(s2, StateSet::empty(), f.clone(), 0)));
                }
                out
            }
            ComplementState::Ranked(st) => {
                let s2 = a.successors(st.s, letter);
                tight_successors(&st.f, a, st.s, letter)
                    .into_iter()
                    .map(|g| {
                        let (o2, i2) = next_cut(a, st, &g, letter);
                        ranked(s2, o2, g, i2)
                    })
                    .collect()
            }
        }
    }

    fn accepting(&self, st: &ComplementState) -> bool {
        accepting(st)
    }
}

/// Whether `from --letter--> to` is a transition of the tight construction,
/// decided from the definition without enumerating successors.
pub fn tight_admits(a: &Nba, from: &ComplementState, letter: usize, to: &ComplementState) -> bool {
    match (from, to) {
        (ComplementState::Subset(s), ComplementState::Subset(s2)) => a.successors(*s, letter) == *s2,
        (ComplementState::Subset(s), ComplementState::Ranked(t)) => {
            let s2 = a.successors(*s, letter);
            !s2.is_empty()
                && t.s == s2
                && t.o.is_empty()
                && t.i == Some(0)
                && t.f.domain() == s2
                && t.f.is_level_ranking(a)
                && t.f.is_tight() == Ok(true)
        }
        (ComplementState::Ranked(st), ComplementState::Ranked(t)) => {
            let s2 = a.successors(st.s, letter);
            if s2.is_empty() || t.s != s2 || t.f.domain() != s2 {
                return false;
            }
            if !t.f.is_level_ranking(a) || t.f.is_tight() != Ok(true) || t.f.rank() != st.f.rank() {
                return false;
            }
            if le_succ(&t.f, &st.f, a, st.s, letter) != Ok(true) {
                return false;
            }
            let (o2, i2) = next_cut(a, st, &t.f, letter);
            t.o == o2 && t.i == Some(i2)
        }
        (ComplementState::Ranked(_), ComplementState::Subset(_)) => false,
    }
}
