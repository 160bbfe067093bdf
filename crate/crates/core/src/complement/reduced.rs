use std::collections::HashMap;

use super::explore::Rules;
use super::tight::{accepting, next_cut, ranked};
use super::ComplementState;
use crate::nba::Nba;
use crate::ranking::{enumerate_maximal, max_ranking_successor, LevelRanking};
use crate::stateset::StateSet;

pub(super) struct ReducedRules<'a> {
    a: &'a Nba,
    entry: HashMap<StateSet, Vec<LevelRanking>>,
}

impl<'a> ReducedRules<'a> {
    pub(super) fn new(a: &'a Nba) -> Self {
        ReducedRules {
            a,
            entry: HashMap::new(),
        }
    }
}

impl Rules for ReducedRules<'_> {
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
                    let entry = self.entry.entry(s2).or_insert_with(|| enumerate_maximal(a, s2));
                    out.extend(entry.iter().map(|f| ranked(s2, StateSet::empty(), f.clone(), 0)));
                }
                out
            }
            ComplementState::Ranked(st) => {
                let Some(h) = max_ranking_successor(&st.f, a, st.s, letter) else {
                    return Vec::new();
                };
                let s2 = a.successors(st.s, letter);
                let (o2, i2) = next_cut(a, st, &h, letter);
                let mut out = Vec::with_capacity(2);
                // the cut-point states give up their rank: lowered by one,
                // the cut-point restarts empty
                if i2 != 0 || o2.is_empty() {
                    let lowered = h.decremented(o2);
                    if lowered.is_level_ranking(a) {
                        out.push(ranked(s2, StateSet::empty(), lowered, i2));
                    }
                }
                out.push(ranked(s2, o2, h, i2));
                out
            }
        }
    }

    fn accepting(&self, st: &ComplementState) -> bool {
        accepting(st)
    }
}
