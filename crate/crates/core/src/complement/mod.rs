//! Rank-based complement constructions.
//!
//! * [`Method::Kv`]: subset, cut-point set and an arbitrary level ranking.
//! * [`Method::Tight`]: a subset phase followed by tight rankings with a
//!   cut-point that checks one even rank at a time, cycling through them.
//! * [`Method::Reduced`]: the tight construction restricted to maximal
//!   entry rankings and at most two successors per ranked state and letter.
//!
//! All three are built on the fly from the initial states, breadth first,
//! so only reachable states are emitted.

mod explore;
mod kv;
mod reduced;
mod tight;

use std::collections::{HashMap, HashSet};
use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use thiserror::Error;

use crate::nba::Nba;
use crate::ranking::LevelRanking;
use crate::stateset::{StateSet, MAX_SET_STATES};

pub use tight::tight_admits;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ComplementError {
    #[error("complementation supports at most {MAX_SET_STATES} states, got {0}")]
    TooManyStates(usize),
    #[error("state limit of {0} exceeded")]
    StateLimit(usize),
    #[error("edge limit of {0} exceeded")]
    EdgeLimit(usize),
    #[error("deadline exceeded")]
    Timeout,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Method {
    Kv,
    Tight,
    Reduced,
}

impl Method {
    pub const ALL: [Method; 3] = [Method::Kv, Method::Tight, Method::Reduced];

    pub fn name(self) -> &'static str {
        match self {
            Method::Kv => "kv",
            Method::Tight => "tight",
            Method::Reduced => "reduced",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Method {
    type Err = String;

    fn from_str(s: &str) -> Result<Method, String> {
        match s {
            "kv" => Ok(Method::Kv),
            "tight" => Ok(Method::Tight),
            "reduced" => Ok(Method::Reduced),
            other => Err(format!("unknown method `{other}` (expected kv, tight or reduced)")),
        }
    }
}

/// A ranked (phase two) state `(S, O, f, i)`. The kv construction has no
/// cycling index and leaves `i` unset.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RankedState {
    pub s: StateSet,
    pub o: StateSet,
    pub f: LevelRanking,
    pub i: Option<u8>,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ComplementState {
    Subset(StateSet),
    Ranked(RankedState),
}

impl ComplementState {
    pub fn is_ranked(&self) -> bool {
        matches!(self, ComplementState::Ranked(_))
    }

    pub fn label(&self) -> String {
        match self {
            ComplementState::Subset(s) => format!("S={s}"),
            ComplementState::Ranked(RankedState { s, o, f, i: Some(i) }) => {
                format!("S={s} O={o} {f} i={i}")
            }
            ComplementState::Ranked(RankedState { s, o, f, i: None }) => format!("S={s} O={o} {f}"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct PhaseCounts {
    pub q1: usize,
    pub q2: usize,
}

#[derive(Debug, Clone)]
pub struct ComplementResult {
    pub method: Method,
    pub automaton: Nba,
    /// The construction state behind each emitted state index.
    pub states: Vec<ComplementState>,
    pub phase_counts: PhaseCounts,
    pub edge_count: usize,
}

impl ComplementResult {
    pub fn state_labels(&self) -> Vec<String> {
        self.states.iter().map(ComplementState::label).collect()
    }

    /// One `index label` line per state, sorted by index.
    pub fn labels_text(&self) -> String {
        self.states
            .iter()
            .enumerate()
            .map(|(k, s)| format!("{k} {}\n", s.label()))
            .collect()
    }
}

/// Resource limits for a construction.
#[derive(Debug, Clone, Default)]
pub struct ComplementOptions {
    pub max_states: Option<usize>,
    pub max_edges: Option<usize>,
    pub deadline: Option<Instant>,
}

pub fn complement(a: &Nba, method: Method) -> Result<ComplementResult, ComplementError> {
    complement_with(a, method, &ComplementOptions::default())
}

pub fn complement_with(
    a: &Nba,
    method: Method,
    opts: &ComplementOptions,
) -> Result<ComplementResult, ComplementError> {
    if !a.fits_state_set() {
        return Err(ComplementError::TooManyStates(a.num_states()));
    }
    match method {
        Method::Kv => explore::explore(a, method, &mut kv::KvRules::new(a), opts),
        Method::Tight => explore::explore(a, method, &mut tight::TightRules::new(a), opts),
        Method::Reduced => explore::explore(a, method, &mut reduced::ReducedRules::new(a), opts),
    }
}

pub fn complement_kv(a: &Nba) -> Result<ComplementResult, ComplementError> {
    complement(a, Method::Kv)
}

pub fn complement_tight(a: &Nba) -> Result<ComplementResult, ComplementError> {
    complement(a, Method::Tight)
}

pub fn complement_reduced(a: &Nba) -> Result<ComplementResult, ComplementError> {
    complement(a, Method::Reduced)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ConstructionStats {
    pub states: usize,
    pub edges: usize,
    pub q1: usize,
    pub q2: usize,
    /// Largest `|δ(q,σ)|` over ranked states `q` and letters `σ`.
    pub per_letter_max_outdegree: usize,
}

pub fn construction_stats(r: &ComplementResult) -> ConstructionStats {
    let a = &r.automaton;
    let per_letter_max_outdegree = (0..a.num_states())
        .filter(|&q| r.states[q].is_ranked())
        .flat_map(|q| (0..a.num_letters()).map(move |l| a.succ(q, l).len()))
        .max()
        .unwrap_or(0);
    ConstructionStats {
        states: a.num_states(),
        edges: r.edge_count,
        q1: r.phase_counts.q1,
        q2: r.phase_counts.q2,
        per_letter_max_outdegree,
    }
}

impl fmt::Display for ConstructionStats {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "states={} edges={} q1={} q2={} max_outdegree={}",
            self.states, self.edges, self.q1, self.q2, self.per_letter_max_outdegree
        )
    }
}

/// Encodes a ranked state with a fixed index as one function
/// `g: Q → {-2, -1, 0, …, r}`: states outside `S` map to `-2`, states of `O`
/// to `-1`, everything else to its rank.
pub fn encode_ranked(st: &RankedState, n: usize) -> Vec<i16> {
    (0..n)
        .map(|q| {
            if !st.s.contains(q) {
                -2
            } else if st.o.contains(q) {
                -1
            } else {
                st.f.get(q).expect("ranking defined on S") as i16
            }
        })
        .collect()
}

/// Inverts [`encode_ranked`] given the index `i`.
pub fn decode_ranked(g: &[i16], i: u8) -> RankedState {
    let n = g.len();
    let mut s = StateSet::empty();
    let mut o = StateSet::empty();
    let mut f = LevelRanking::empty(n);
    for (q, &v) in g.iter().enumerate() {
        match v {
            -2 => {}
            -1 => {
                s.insert(q);
                o.insert(q);
                f.set(q, i);
            }
            v => {
                s.insert(q);
                f.set(q, v as u8);
            }
        }
    }
    RankedState { s, o, f, i: Some(i) }
}

/// Number of pairs of distinct ranked states with the same index and the
/// same encoding. Zero means the encoding is injective on `r`. States
/// without an index (kv) are not covered by the encoding and are skipped.
pub fn encoding_collisions(r: &ComplementResult) -> usize {
    let src_n = r
        .states
        .iter()
        .find_map(|s| match s {
            ComplementState::Ranked(st) => Some(st.f.num_states()),
            _ => None,
        })
        .unwrap_or(0);
    let mut seen: HashMap<Option<u8>, HashSet<Vec<i16>>> = HashMap::new();
    let mut collisions = 0;
    for st in &r.states {
        if let ComplementState::Ranked(rs @ RankedState { i: Some(_), .. }) = st {
            if !seen.entry(rs.i).or_default().insert(encode_ranked(rs, src_n)) {
                collisions += 1;
            }
        }
    }
    collisions
}
