use super::explore::Rules;
use super::{ComplementState, RankedState};
use crate::nba::Nba;
use crate::ranking::{enumerate_bounded, successor_bounds, LevelRanking, Requirement};
use crate::stateset::StateSet;

/// Rankings are kept only on `S`; values outside `S` never influence the
/// future of a run, so this is the usual quotient of the full state space.
pub(super) struct KvRules<'a> {
    a: &'a Nba,
}

impl<'a> KvRules<'a> {
    pub(super) fn new(a: &'a Nba) -> Self {
        KvRules { a }
    }
}

fn state(s: StateSet, o: StateSet, f: LevelRanking) -> ComplementState {
    ComplementState::Ranked(RankedState { s, o, f, i: None })
}

impl Rules for KvRules<'_> {
    fn initial(&mut self) -> Vec<ComplementState> {
        let a = self.a;
        let top = (2 * a.num_states()) as u8;
        let init = a.initial_set();
        let slots: Vec<(usize, u8)> = init.iter().map(|q| (q, top)).collect();
        enumerate_bounded(a, &slots, Requirement::Any)
            .into_iter()
            .map(|f| state(init, StateSet::empty(), f))
            .collect()
    }

    fn successors(&mut self, from: &ComplementState, letter: usize) -> Vec<ComplementState> {
        let a = self.a;
        let ComplementState::Ranked(st) = from else {
            unreachable!("kv has no subset phase")
        };
        let s2 = a.successors(st.s, letter);
        let bounds = successor_bounds(&st.f, a, st.s, letter);
        let post_o = if st.o.is_empty() { s2 } else { a.successors(st.o, letter) };
        enumerate_bounded(a, &bounds, Requirement::Any)
            .into_iter()
            .map(|g| {
                let o2 = post_o.difference(g.odd_states());
                state(s2, o2, g)
            })
            .collect()
    }

    fn accepting(&self, st: &ComplementState) -> bool {
        matches!(st, ComplementState::Ranked(r) if r.o.is_empty())
    }
}
