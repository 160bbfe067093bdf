use std::collections::HashMap;
use std::time::Instant;

use super::{
    ComplementError, ComplementOptions, ComplementResult, ComplementState, Method, PhaseCounts,
};
use crate::nba::{Nba, NbaBuilder};

/// The transition structure of one construction.
pub(super) trait Rules {
    fn initial(&mut self) -> Vec<ComplementState>;
    /// Successors in a deterministic order; duplicates are allowed.
    fn successors(&mut self, from: &ComplementState, letter: usize) -> Vec<ComplementState>;
    fn accepting(&self, st: &ComplementState) -> bool;
}

/// Breadth-first exploration of the reachable part, numbering states in
/// discovery order with each successor list sorted.
pub(super) fn explore(
    a: &Nba,
    method: Method,
    rules: &mut impl Rules,
    opts: &ComplementOptions,
) -> Result<ComplementResult, ComplementError> {
    let mut builder = NbaBuilder::new(a.alphabet().clone(), 0);
    let mut index: HashMap<ComplementState, usize> = HashMap::new();
    let mut states: Vec<ComplementState> = Vec::new();

    let mut intern = |st: ComplementState, acc: bool, states: &mut Vec<ComplementState>, builder: &mut NbaBuilder| {
        if let Some(&id) = index.get(&st) {
            return id;
        }
        let id = builder.add_state(acc);
        index.insert(st.clone(), id);
        states.push(st);
        id
    };

    let mut init = rules.initial();
    init.sort();
    init.dedup();
    for st in init {
        let acc = rules.accepting(&st);
        let id = intern(st, acc, &mut states, &mut builder);
        builder.set_initial(id);
    }

    let mut edge_count = 0;
    let mut head = 0;
    while head < states.len() {
        if let Some(limit) = opts.max_states {
            if states.len() > limit {
                return Err(ComplementError::StateLimit(limit));
            }
        }
        if head % 256 == 0 {
            if let Some(deadline) = opts.deadline {
                if Instant::now() > deadline {
                    return Err(ComplementError::Timeout);
                }
            }
        }
        let from = states[head].clone();
        for letter in 0..a.num_letters() {
            let mut succ = rules.successors(&from, letter);
            succ.sort();
            succ.dedup();
            edge_count += succ.len();
            if let Some(limit) = opts.max_edges {
                if edge_count > limit {
                    return Err(ComplementError::EdgeLimit(limit));
                }
            }
            let targets: Vec<usize> = succ
                .into_iter()
                .map(|st| {
                    let acc = rules.accepting(&st);
                    intern(st, acc, &mut states, &mut builder)
                })
                .collect();
            builder.set_successors(head, letter, targets);
        }
        head += 1;
    }
    if let Some(limit) = opts.max_states {
        if states.len() > limit {
            return Err(ComplementError::StateLimit(limit));
        }
    }

    let q2 = states.iter().filter(|s| s.is_ranked()).count();
    let phase_counts = PhaseCounts {
        q1: states.len() - q2,
        q2,
    };
    let automaton = builder.build().expect("constructions always have an initial state");
    Ok(ComplementResult {
        method,
        automaton,
        states,
        phase_counts,
        edge_count,
    })
}
