use std::collections::HashMap;

use super::{Nba, NbaBuilder, NbaError};

/// Büchi product with a two-phase flag: phase 0 waits for an accepting state
/// of `a`, phase 1 waits for one of `b`. A product state is accepting when it
/// is in phase 1 at an accepting state of `b`, which is exactly where the
/// flag flips back.
///
/// Only states reachable from the initial pairs are built, numbered in
/// breadth-first discovery order.
pub fn intersect(a: &Nba, b: &Nba) -> Result<Nba, NbaError> {
    if a.alphabet() != b.alphabet() {
        return Err(NbaError::AlphabetMismatch);
    }
    let k = a.num_letters();
    let mut index: HashMap<(usize, usize, u8), usize> = HashMap::new();
    let mut states: Vec<(usize, usize, u8)> = Vec::new();
    let mut builder = NbaBuilder::new(a.alphabet().clone(), 0);

    let mut intern = |key: (usize, usize, u8), states: &mut Vec<_>, builder: &mut NbaBuilder| {
        *index.entry(key).or_insert_with(|| {
            states.push(key);
            builder.add_state(key.2 == 1 && b.is_accepting(key.1))
        })
    };

    for &p in a.initial() {
        for &q in b.initial() {
            let id = intern((p, q, 0), &mut states, &mut builder);
            builder.set_initial(id);
        }
    }

    let mut head = 0;
    while head < states.len() {
        let (p, q, phase) = states[head];
        let next_phase = match phase {
            0 if a.is_accepting(p) => 1,
            1 if b.is_accepting(q) => 0,
            c => c,
        };
        for l in 0..k {
            let mut targets = Vec::new();
            for &p2 in a.succ(p, l) {
                for &q2 in b.succ(q, l) {
                    targets.push(intern((p2, q2, next_phase), &mut states, &mut builder));
                }
            }
            builder.set_successors(head, l, targets);
        }
        head += 1;
    }
    builder.build()
}
