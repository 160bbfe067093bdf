//! Compact directed graphs and strongly connected components.

/// A directed graph in compressed sparse row form.
#[derive(Debug, Clone, Default)]
pub struct Graph {
    offsets: Vec<usize>,
    targets: Vec<u32>,
}

impl Graph {
    pub fn from_adjacency(adj: &[Vec<u32>]) -> Graph {
        let mut offsets = Vec::with_capacity(adj.len() + 1);
        let mut targets = Vec::with_capacity(adj.iter().map(Vec::len).sum());
        offsets.push(0);
        for row in adj {
            targets.extend_from_slice(row);
            offsets.push(targets.len());
        }
        Graph { offsets, targets }
    }

    pub fn len(&self) -> usize {
        self.offsets.len().saturating_sub(1)
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn succ(&self, v: usize) -> &[u32] {
        &self.targets[self.offsets[v]..self.offsets[v + 1]]
    }
}

/// Strongly connected components by an iterative Tarjan search.
///
/// Returns the component id of every vertex; ids are assigned in the order
/// components are completed (reverse topological order).
pub fn scc_ids(g: &Graph) -> Vec<u32> {
    const UNSEEN: u32 = u32::MAX;
    let n = g.len();
    let mut index = vec![UNSEEN; n];
    let mut low = vec![0u32; n];
    let mut comp = vec![UNSEEN; n];
    let mut on_stack = vec![false; n];
    let mut stack: Vec<u32> = Vec::new();
    // (vertex, next successor position)
    let mut call: Vec<(u32, usize)> = Vec::new();
    let mut next_index = 0u32;
    let mut next_comp = 0u32;

    for root in 0..n {
        if index[root] != UNSEEN {
            continue;
        }
        call.push((root as u32, 0));
        index[root] = next_index;
        low[root] = next_index;
        next_index += 1;
        stack.push(root as u32);
        on_stack[root] = true;

        while let Some(&mut (v, ref mut pos)) = call.last_mut() {
            let v = v as usize;
            let succ = g.succ(v);
            if *pos < succ.len() {
                let w = succ[*pos] as usize;
                *pos += 1;
                if index[w] == UNSEEN {
                    index[w] = next_index;
                    low[w] = next_index;
                    next_index += 1;
                    stack.push(w as u32);
                    on_stack[w] = true;
                    call.push((w as u32, 0));
                } else if on_stack[w] {
                    low[v] = low[v].min(index[w]);
                }
            } else {
                call.pop();
                if let Some(&(parent, _)) = call.last() {
                    let p = parent as usize;
                    low[p] = low[p].min(low[v]);
                }
                if low[v] == index[v] {
                    loop {
                        let w = stack.pop().expect("tarjan stack underflow") as usize;
                        on_stack[w] = false;
                        comp[w] = next_comp;
                        if w == v {
                            break;
                        }
                    }
                    next_comp += 1;
                }
            }
        }
    }
    comp
}

/// Marks the vertices that lie on some cycle (nontrivial SCC or self-loop).
pub fn on_cycle(g: &Graph) -> Vec<bool> {
    let comp = scc_ids(g);
    let mut size = vec![0usize; comp.iter().map(|&c| c as usize + 1).max().unwrap_or(0)];
    for &c in &comp {
        size[c as usize] += 1;
    }
    (0..g.len())
        .map(|v| size[comp[v] as usize] > 1 || g.succ(v).contains(&(v as u32)))
        .collect()
}

/// Whether some vertex flagged in `accepting` lies on a cycle of `g`.
pub fn has_accepting_cycle(g: &Graph, accepting: &[bool]) -> bool {
    let cyc = on_cycle(g);
    (0..g.len()).any(|v| accepting[v] && cyc[v])
}
