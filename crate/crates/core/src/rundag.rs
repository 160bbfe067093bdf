//! Finite quotients of run DAGs on ultimately periodic words, and the
//! alternating finite/endangered removal that assigns ranks to vertices.
//!
//! The run DAG of `u·v^ω` is infinite, but two vertices `(q,l)` and
//! `(q,l+|v|)` past the stem have isomorphic forward cones, and the rank of a
//! vertex only depends on its forward cone. Once the level subsets at period
//! boundaries repeat, the DAG is therefore a finite stem followed by a cycle
//! of levels, and ranks can be computed on that lasso.

use std::collections::HashMap;
use std::fmt::Write;

use thiserror::Error;

use crate::nba::graph::{on_cycle, Graph};
use crate::nba::{Nba, UpWord};
use crate::ranking::LevelRanking;
use crate::stateset::{StateSet, MAX_SET_STATES};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RunDagError {
    #[error("run DAG analysis supports at most {MAX_SET_STATES} states, got {0}")]
    TooManyStates(usize),
    #[error("rank fixpoint not reached within 2n+2 rank values")]
    NoFixpoint,
    #[error("profile defined only for rejected words with runs")]
    ProfileUndefined,
}

/// The lasso-shaped quotient of a run DAG.
#[derive(Debug, Clone)]
pub struct RunDagQuotient {
    num_states: usize,
    levels: Vec<StateSet>,
    letters: Vec<usize>,
    stem_len: usize,
    accepting: StateSet,
    vertices: Vec<(usize, usize)>,
    index: HashMap<(usize, usize), u32>,
    succ: Vec<Vec<u32>>,
}

impl RunDagQuotient {
    pub fn stem_levels(&self) -> &[StateSet] {
        &self.levels[..self.stem_len]
    }

    pub fn cycle_levels(&self) -> &[StateSet] {
        &self.levels[self.stem_len..]
    }

    pub fn num_levels(&self) -> usize {
        self.levels.len()
    }

    pub fn num_vertices(&self) -> usize {
        self.vertices.len()
    }

    /// `(level, state)` of a vertex.
    pub fn vertex(&self, v: usize) -> (usize, usize) {
        self.vertices[v]
    }

    pub fn vertex_id(&self, level: usize, q: usize) -> Option<usize> {
        self.index.get(&(level, q)).map(|&v| v as usize)
    }

    pub fn successors(&self, v: usize) -> &[u32] {
        &self.succ[v]
    }

    pub fn is_accepting(&self, v: usize) -> bool {
        self.accepting.contains(self.vertices[v].1)
    }

    /// The quotient level representing position `pos` of the infinite DAG.
    pub fn level_of(&self, pos: usize) -> usize {
        if pos < self.stem_len {
            pos
        } else {
            let cycle = self.levels.len() - self.stem_len;
            self.stem_len + (pos - self.stem_len) % cycle
        }
    }

    fn next_level(&self, level: usize) -> usize {
        if level + 1 < self.levels.len() {
            level + 1
        } else {
            self.stem_len
        }
    }
}

/// Builds the quotient: explicit levels for the stem, then the subset
/// progression through whole periods until a period-boundary subset repeats.
/// The periods before the first repeated subset join the stem; the periods
/// from there on form the cycle, whose last level wraps to its first.
pub fn build_quotient(a: &Nba, w: &UpWord) -> Result<RunDagQuotient, RunDagError> {
    if !a.fits_state_set() {
        return Err(RunDagError::TooManyStates(a.num_states()));
    }
    let mut levels = Vec::new();
    let mut letters = Vec::new();
    let mut cur = a.initial_set();
    for &l in w.stem() {
        levels.push(cur);
        letters.push(l);
        cur = a.successors(cur, l);
    }
    let mut seen: HashMap<StateSet, usize> = HashMap::new();
    let stem_len = loop {
        if let Some(&start) = seen.get(&cur) {
            break start;
        }
        seen.insert(cur, levels.len());
        for &l in w.period() {
            levels.push(cur);
            letters.push(l);
            cur = a.successors(cur, l);
        }
    };

    let mut q = RunDagQuotient {
        num_states: a.num_states(),
        levels,
        letters,
        stem_len,
        accepting: a.accepting_set(),
        vertices: Vec::new(),
        index: HashMap::new(),
        succ: Vec::new(),
    };
    for (lv, set) in q.levels.iter().enumerate() {
        for s in set.iter() {
            q.index.insert((lv, s), q.vertices.len() as u32);
            q.vertices.push((lv, s));
        }
    }
    for v in 0..q.vertices.len() {
        let (lv, s) = q.vertices[v];
        let next = q.next_level(lv);
        let row: Vec<u32> = a
            .succ(s, q.letters[lv])
            .iter()
            .map(|&t| q.index[&(next, t)])
            .collect();
        q.succ.push(row);
    }
    Ok(q)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum VertexRank {
    Rank(u8),
    /// Never removed: the vertex lies in the fixpoint of the removal.
    Survives,
}

impl VertexRank {
    pub fn value(self) -> Option<u8> {
        match self {
            VertexRank::Rank(r) => Some(r),
            VertexRank::Survives => None,
        }
    }
}

#[derive(Debug, Clone)]
pub struct RankAssignment {
    ranks: Vec<VertexRank>,
}

impl RankAssignment {
    pub fn rank(&self, v: usize) -> VertexRank {
        self.ranks[v]
    }

    pub fn all(&self) -> &[VertexRank] {
        &self.ranks
    }

    pub fn has_survivors(&self) -> bool {
        self.ranks.contains(&VertexRank::Survives)
    }
}

/// Vertices of `alive` from which some vertex of `targets` is reachable
/// (reflexively) without leaving `alive`.
fn backward_reach(g: &RunDagQuotient, pred: &[Vec<u32>], alive: &[bool], targets: &[bool]) -> Vec<bool> {
    let mut mark = vec![false; g.num_vertices()];
    let mut stack: Vec<usize> = (0..g.num_vertices()).filter(|&v| alive[v] && targets[v]).collect();
    for &v in &stack {
        mark[v] = true;
    }
    while let Some(v) = stack.pop() {
        for &p in &pred[v] {
            let p = p as usize;
            if alive[p] && !mark[p] {
                mark[p] = true;
                stack.push(p);
            }
        }
    }
    mark
}

/// Alternates removal of finite vertices (rank `i`) and endangered vertices
/// (rank `i+1`) for `i = 0, 2, 4, …` until nothing changes.
///
/// On the quotient a vertex is finite iff it cannot reach a cycle of the
/// residual graph, and endangered iff it cannot reach a residual accepting
/// vertex (itself included).
pub fn compute_ranks(g: &RunDagQuotient, n: usize) -> Result<RankAssignment, RunDagError> {
    let nv = g.num_vertices();
    let mut pred: Vec<Vec<u32>> = vec![Vec::new(); nv];
    for v in 0..nv {
        for &t in g.successors(v) {
            pred[t as usize].push(v as u32);
        }
    }
    let accepting: Vec<bool> = (0..nv).map(|v| g.is_accepting(v)).collect();
    let mut alive = vec![true; nv];
    let mut ranks = vec![VertexRank::Survives; nv];
    let max_rank = 2 * n;
    let mut i = 0usize;

    while alive.iter().any(|&b| b) {
        let adj: Vec<Vec<u32>> = (0..nv)
            .map(|v| {
                if alive[v] {
                    g.successors(v).iter().copied().filter(|&t| alive[t as usize]).collect()
                } else {
                    Vec::new()
                }
            })
            .collect();
        let cyc = on_cycle(&Graph::from_adjacency(&adj));
        let cyc_alive: Vec<bool> = (0..nv).map(|v| alive[v] && cyc[v]).collect();
        let infinite = backward_reach(g, &pred, &alive, &cyc_alive);
        let mut removed = false;
        for v in 0..nv {
            if alive[v] && !infinite[v] {
                if i > max_rank {
                    return Err(RunDagError::NoFixpoint);
                }
                ranks[v] = VertexRank::Rank(i as u8);
                alive[v] = false;
                removed = true;
            }
        }

        let safe = backward_reach(g, &pred, &alive, &accepting);
        for v in 0..nv {
            if alive[v] && !safe[v] {
                if i + 1 > max_rank {
                    return Err(RunDagError::NoFixpoint);
                }
                ranks[v] = VertexRank::Rank(i as u8 + 1);
                alive[v] = false;
                removed = true;
            }
        }

        if !removed {
            break;
        }
        i += 2;
    }
    Ok(RankAssignment { ranks })
}

/// True iff the removal leaves no vertex, i.e. the word is rejected.
pub fn rejects_by_rank(a: &Nba, w: &UpWord) -> Result<bool, RunDagError> {
    let g = build_quotient(a, w)?;
    Ok(!compute_ranks(&g, a.num_states())?.has_survivors())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EventualProfile {
    pub dag_rank: u8,
    pub per_cycle_level_tight: bool,
}

/// Rank of the periodic part of a rejecting run DAG, and whether every
/// cycle level, read as a level ranking, is tight with that rank.
pub fn eventual_profile(a: &Nba, w: &UpWord) -> Result<EventualProfile, RunDagError> {
    let g = build_quotient(a, w)?;
    let ranks = compute_ranks(&g, a.num_states())?;
    if ranks.has_survivors() || g.cycle_levels().iter().all(|s| s.is_empty()) {
        return Err(RunDagError::ProfileUndefined);
    }
    let rankings = cycle_level_rankings(&g, &ranks);
    let dag_rank = rankings
        .iter()
        .filter_map(LevelRanking::rank)
        .max()
        .expect("nonempty cycle levels");
    let per_cycle_level_tight = rankings
        .iter()
        .all(|f| f.rank() == Some(dag_rank) && f.is_tight() == Ok(true));
    Ok(EventualProfile {
        dag_rank,
        per_cycle_level_tight,
    })
}

/// Each cycle level as a level ranking over its states.
pub fn cycle_level_rankings(g: &RunDagQuotient, ranks: &RankAssignment) -> Vec<LevelRanking> {
    (g.stem_len..g.num_levels())
        .map(|lv| {
            LevelRanking::from_pairs(
                g.num_states,
                g.levels[lv].iter().map(|q| {
                    let v = g.vertex_id(lv, q).expect("vertex of level");
                    (q, ranks.rank(v).value().expect("rejected DAG has no survivors"))
                }),
            )
        })
        .collect()
}

/// Recomputes ranks on a quotient whose stem spells out `2n+3` extra copies
/// of the period, and compares them with the ranks of the plain quotient at
/// every explicit position of that longer stem.
pub fn unrolled_ranks_agree(a: &Nba, w: &UpWord) -> Result<bool, RunDagError> {
    let n = a.num_states();
    let base = build_quotient(a, w)?;
    let base_ranks = compute_ranks(&base, n)?;
    let long = w.unrolled(2 * n + 3);
    let unrolled = build_quotient(a, &long)?;
    let unrolled_ranks = compute_ranks(&unrolled, n)?;

    for pos in 0..long.stem().len() {
        let lb = base.level_of(pos);
        let lu = unrolled.level_of(pos);
        if base.levels[lb] != unrolled.levels[lu] {
            return Ok(false);
        }
        for q in base.levels[lb] {
            let rb = base_ranks.rank(base.vertex_id(lb, q).expect("vertex"));
            let ru = unrolled_ranks.rank(unrolled.vertex_id(lu, q).expect("vertex"));
            if rb != ru {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Graphviz rendering of the quotient with per-vertex ranks, one cluster
/// per level; the wrapping edges close the cycle.
pub fn quotient_to_dot(g: &RunDagQuotient, ranks: &RankAssignment, a: &Nba) -> String {
    let mut out = String::from("digraph rundag {\n  rankdir=LR;\n  node [shape=box];\n");
    for lv in 0..g.num_levels() {
        let kind = if lv < g.stem_len { "stem" } else { "cycle" };
        let _ = writeln!(out, "  subgraph cluster_l{lv} {{\n    label=\"{kind} {lv}\";");
        for q in g.levels[lv] {
            let v = g.vertex_id(lv, q).expect("vertex");
            let rank = match ranks.rank(v) {
                VertexRank::Rank(r) => r.to_string(),
                VertexRank::Survives => "inf".to_string(),
            };
            let peripheries = if g.is_accepting(v) { 2 } else { 1 };
            let _ = writeln!(
                out,
                "    v{v} [label=\"{q} : {rank}\", peripheries={peripheries}];"
            );
        }
        out.push_str("  }\n");
    }
    for v in 0..g.num_vertices() {
        let (lv, _) = g.vertex(v);
        let letter = a.alphabet().letter(g.letters[lv]);
        for &t in g.successors(v) {
            let _ = writeln!(out, "  v{v} -> v{t} [label=\"{letter}\"];");
        }
    }
    out.push_str("}\n");
    out
}
