use super::graph::{has_accepting_cycle, Graph};
use super::Nba;

/// True iff no cycle reachable from an initial state visits an accepting
/// state.
pub fn is_empty(a: &Nba) -> bool {
    let n = a.num_states();
    let mut id = vec![u32::MAX; n];
    let mut order: Vec<usize> = Vec::new();
    for &q in a.initial() {
        if id[q] == u32::MAX {
            id[q] = order.len() as u32;
            order.push(q);
        }
    }
    let mut adj: Vec<Vec<u32>> = Vec::new();
    let mut head = 0;
    while head < order.len() {
        let q = order[head];
        let mut row = Vec::new();
        for l in 0..a.num_letters() {
            for &t in a.succ(q, l) {
                if id[t] == u32::MAX {
                    id[t] = order.len() as u32;
                    order.push(t);
                }
                row.push(id[t]);
            }
        }
        row.sort_unstable();
        row.dedup();
        adj.push(row);
        head += 1;
    }
    let accepting: Vec<bool> = order.iter().map(|&q| a.is_accepting(q)).collect();
    !has_accepting_cycle(&Graph::from_adjacency(&adj), &accepting)
}
