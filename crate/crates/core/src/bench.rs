//! Size measurements of the constructions over seeded random automata.

use std::collections::BTreeMap;
use std::fmt::Write;
use std::time::{Duration, Instant};

use num_bigint::BigUint;
use thiserror::Error;

use crate::complement::{
    complement_with, construction_stats, encoding_collisions, ComplementError, ComplementOptions, Method,
};
use crate::nba::{random_nba, Nba};
use crate::ranking::count_tight;
use crate::verify::{disjoint, fingerprint};

pub const CSV_HEADER: &str = "n,k,d,fa,seed,method,states,edges,q1,q2,ms,tight_n,tight_n1,kv_bound,timeout";

#[derive(Debug, Error, PartialEq, Eq)]
pub enum BenchError {
    #[error("line {line}: {message}")]
    Config { line: usize, message: String },
    #[error("{method} complement of {fingerprint} is not disjoint from the input")]
    Unsound { fingerprint: String, method: Method },
    #[error("{method} complement of {fingerprint} breaks a structural bound: {what}")]
    Structure {
        fingerprint: String,
        method: Method,
        what: String,
    },
}

#[derive(Debug, Clone, PartialEq)]
pub struct BenchConfig {
    pub n_min: usize,
    pub n_max: usize,
    pub alphabet_sizes: Vec<usize>,
    pub densities: Vec<f64>,
    pub accepting_fractions: Vec<f64>,
    pub instances: usize,
    pub seed: u64,
    pub methods: Vec<Method>,
    pub timeout_ms: u64,
    /// Edge budget per construction; exceeding it is reported like a timeout.
    pub max_edges: Option<usize>,
    /// Record wall time in the `ms` column. Off by default so that the CSV
    /// is reproducible byte for byte.
    pub timing: bool,
}

impl Default for BenchConfig {
    fn default() -> Self {
        BenchConfig {
            n_min: 1,
            n_max: 4,
            alphabet_sizes: vec![1, 2],
            densities: vec![1.0, 1.5],
            accepting_fractions: vec![0.25, 0.5],
            instances: 5,
            seed: 1,
            methods: Method::ALL.to_vec(),
            timeout_ms: 30_000,
            max_edges: Some(20_000_000),
            timing: false,
        }
    }
}

fn list<T: std::str::FromStr>(v: &str) -> Result<Vec<T>, String> {
    v.split(',')
        .map(|x| x.trim().parse::<T>().map_err(|_| format!("bad list element `{}`", x.trim())))
        .collect()
}

fn one<T: std::str::FromStr>(v: &str) -> Result<T, String> {
    v.parse().map_err(|_| format!("bad value `{v}`"))
}

impl BenchConfig {
    /// Parses `key=value` lines; `#` starts a comment line. Keys not given
    /// keep their defaults.
    pub fn parse(text: &str) -> Result<BenchConfig, BenchError> {
        let mut cfg = BenchConfig::default();
        for (idx, raw) in text.lines().enumerate() {
            let line = idx + 1;
            let l = raw.trim();
            if l.is_empty() || l.starts_with('#') {
                continue;
            }
            let err = |message: String| BenchError::Config { line, message };
            let (k, v) = l.split_once('=').ok_or_else(|| err("expected key=value".into()))?;
            let (k, v) = (k.trim(), v.trim());
            match k {
                "n_min" => cfg.n_min = one(v).map_err(err)?,
                "n_max" => cfg.n_max = one(v).map_err(err)?,
                "alphabet_sizes" => cfg.alphabet_sizes = list(v).map_err(err)?,
                "densities" => cfg.densities = list(v).map_err(err)?,
                "accepting_fractions" => cfg.accepting_fractions = list(v).map_err(err)?,
                "instances" => cfg.instances = one(v).map_err(err)?,
                "seed" => cfg.seed = one(v).map_err(err)?,
                "methods" => cfg.methods = list(v).map_err(err)?,
                "timeout_ms" => cfg.timeout_ms = one(v).map_err(err)?,
                "max_edges" => cfg.max_edges = if v == "none" { None } else { Some(one(v).map_err(err)?) },
                "timing" => cfg.timing = one(v).map_err(err)?,
                other => return Err(err(format!("unknown key `{other}`"))),
            }
        }
        cfg.validate()?;
        Ok(cfg)
    }

    fn validate(&self) -> Result<(), BenchError> {
        let bad = |message: &str| {
            Err(BenchError::Config {
                line: 0,
                message: message.to_string(),
            })
        };
        if self.n_min == 0 || self.n_min > self.n_max {
            return bad("need 1 <= n_min <= n_max");
        }
        if self.alphabet_sizes.is_empty() || self.alphabet_sizes.contains(&0) {
            return bad("alphabet_sizes must be nonempty and positive");
        }
        if self.densities.is_empty() || self.accepting_fractions.is_empty() {
            return bad("densities and accepting_fractions must be nonempty");
        }
        if self.instances == 0 || self.methods.is_empty() {
            return bad("instances and methods must be nonempty");
        }
        Ok(())
    }

    /// Every instance in expansion order `n, k, d, fa, seed`, with seeds
    /// `seed, seed+1, …` within each cell.
    pub fn instances(&self) -> Vec<(Params, Nba)> {
        let mut out = Vec::new();
        for n in self.n_min..=self.n_max {
            for &k in &self.alphabet_sizes {
                for &d in &self.densities {
                    for &fa in &self.accepting_fractions {
                        for j in 0..self.instances as u64 {
                            let seed = self.seed + j;
                            out.push((Params { n, k, d, fa, seed }, random_nba(n, k, d, fa, seed)));
                        }
                    }
                }
            }
        }
        out
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Params {
    pub n: usize,
    pub k: usize,
    pub d: f64,
    pub fa: f64,
    pub seed: u64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct BenchRow {
    pub params: Params,
    pub method: Method,
    /// `None` when the construction ran out of time or budget.
    pub stats: Option<RowStats>,
    pub ms: Option<u128>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RowStats {
    pub states: usize,
    pub edges: usize,
    pub q1: usize,
    pub q2: usize,
    pub max_outdegree: usize,
}

/// Builds every configured complement, checks it for soundness and the
/// structural bounds, and returns one row per (instance, method).
pub fn run_suite(cfg: &BenchConfig) -> Result<Vec<BenchRow>, BenchError> {
    let mut rows = Vec::new();
    for (params, a) in cfg.instances() {
        for &method in &cfg.methods {
            let start = Instant::now();
            let opts = ComplementOptions {
                max_states: None,
                max_edges: cfg.max_edges,
                deadline: Some(start + Duration::from_millis(cfg.timeout_ms)),
            };
            let stats = match complement_with(&a, method, &opts) {
                Ok(c) => {
                    let fp = || fingerprint(&a);
                    if !disjoint(&a, &c.automaton) {
                        return Err(BenchError::Unsound { fingerprint: fp(), method });
                    }
                    let s = construction_stats(&c);
                    if method == Method::Reduced && s.per_letter_max_outdegree > 2 {
                        return Err(BenchError::Structure {
                            fingerprint: fp(),
                            method,
                            what: format!("outdegree {}", s.per_letter_max_outdegree),
                        });
                    }
                    if encoding_collisions(&c) > 0 {
                        return Err(BenchError::Structure {
                            fingerprint: fp(),
                            method,
                            what: "state encoding not injective".into(),
                        });
                    }
                    Some(RowStats {
                        states: s.states,
                        edges: s.edges,
                        q1: s.q1,
                        q2: s.q2,
                        max_outdegree: s.per_letter_max_outdegree,
                    })
                }
                Err(ComplementError::Timeout | ComplementError::EdgeLimit(_) | ComplementError::StateLimit(_)) => None,
                Err(e @ ComplementError::TooManyStates(_)) => {
                    return Err(BenchError::Structure {
                        fingerprint: fingerprint(&a),
                        method,
                        what: e.to_string(),
                    })
                }
            };
            let ms = cfg.timing.then(|| start.elapsed().as_millis());
            rows.push(BenchRow { params, method, stats, ms });
        }
    }
    Ok(rows)
}

/// `(2n+1)^n`, the number of level rankings.
pub fn kv_bound(n: usize) -> BigUint {
    BigUint::from(2 * n + 1).pow(n as u32)
}

pub fn to_csv(rows: &[BenchRow]) -> String {
    let mut out = String::from(CSV_HEADER);
    out.push('\n');
    for r in rows {
        let p = r.params;
        let _ = write!(out, "{},{},{},{},{},{},", p.n, p.k, p.d, p.fa, p.seed, r.method);
        match r.stats {
            Some(s) => {
                let _ = write!(out, "{},{},{},{},", s.states, s.edges, s.q1, s.q2);
            }
            None => out.push_str(",,,,"),
        }
        if let Some(ms) = r.ms {
            let _ = write!(out, "{ms}");
        }
        let _ = writeln!(
            out,
            ",{},{},{},{}",
            count_tight(p.n),
            count_tight(p.n + 1),
            kv_bound(p.n),
            r.stats.is_none() as u8
        );
    }
    out
}

/// `(n, k, d, fa)` with the floats as text so that keys are ordered.
type CellKey = (usize, usize, String, String);

#[derive(Default)]
struct Cell {
    rows: usize,
    timeouts: usize,
    states: Vec<usize>,
    edges: Vec<usize>,
    q2: Vec<usize>,
}

fn mean_max(v: &[usize]) -> String {
    if v.is_empty() {
        return "- | -".into();
    }
    let mean = v.iter().sum::<usize>() as f64 / v.len() as f64;
    format!("{mean:.1} | {}", v.iter().max().expect("nonempty"))
}

/// Mean and max per parameter cell, one section per method, followed by
/// the bound columns for every `n` present.
pub fn to_markdown(rows: &[BenchRow]) -> String {
    let mut by_method: BTreeMap<Method, BTreeMap<CellKey, Cell>> = BTreeMap::new();
    for r in rows {
        let p = r.params;
        let cell = by_method
            .entry(r.method)
            .or_default()
            .entry((p.n, p.k, p.d.to_string(), p.fa.to_string()))
            .or_default();
        cell.rows += 1;
        match r.stats {
            Some(s) => {
                cell.states.push(s.states);
                cell.edges.push(s.edges);
                cell.q2.push(s.q2);
            }
            None => cell.timeouts += 1,
        }
    }
    let mut out = String::new();
    for (method, cells) in &by_method {
        let _ = writeln!(out, "## {method}\n");
        out.push_str("| n | k | d | fa | runs | timeouts | states mean | states max | edges mean | edges max | q2 mean | q2 max |\n");
        out.push_str("|---|---|---|---|---|---|---|---|---|---|---|---|\n");
        for ((n, k, d, fa), c) in cells {
            let _ = writeln!(
                out,
                "| {n} | {k} | {d} | {fa} | {} | {} | {} | {} | {} |",
                c.rows,
                c.timeouts,
                mean_max(&c.states),
                mean_max(&c.edges),
                mean_max(&c.q2)
            );
        }
        out.push('\n');
    }
    let mut ns: Vec<usize> = rows.iter().map(|r| r.params.n).collect();
    ns.sort_unstable();
    ns.dedup();
    if !ns.is_empty() {
        out.push_str("## bounds\n\n");
        out.push_str("| n | tight(n) | tight(n+1) | (2n+1)^n | 2^n n! / tight(n) | tight(n)^(1/n) / n |\n");
        out.push_str("|---|---|---|---|---|---|\n");
        for n in ns {
            let _ = writeln!(
                out,
                "| {n} | {} | {} | {} | {:.4} | {:.4} |",
                count_tight(n),
                count_tight(n + 1),
                kv_bound(n),
                factorial_ratio(n),
                kappa(n)
            );
        }
    }
    out
}

fn to_f64(x: &BigUint) -> f64 {
    x.to_string().parse().expect("decimal digits")
}

/// `2^n·n! / tight(n)`.
pub fn factorial_ratio(n: usize) -> f64 {
    let f: BigUint = (1..=n).map(BigUint::from).product::<BigUint>() << n;
    to_f64(&f) / to_f64(&count_tight(n))
}

/// `tight(n)^(1/n) / n`.
pub fn kappa(n: usize) -> f64 {
    to_f64(&count_tight(n)).powf(1.0 / n as f64) / n as f64
}

#[cfg(test)]
mod tests {
    use super::*;

    fn small() -> BenchConfig {
        BenchConfig::parse("n_min=1\nn_max=2\nalphabet_sizes=1,2\ninstances=2\nseed=1\n").unwrap()
    }

    #[test]
    fn parse_defaults_and_errors() {
        let cfg = small();
        assert_eq!(cfg.n_max, 2);
        assert_eq!(cfg.methods, Method::ALL.to_vec());
        assert!(matches!(BenchConfig::parse("bogus=1"), Err(BenchError::Config { line: 1, .. })));
        assert!(matches!(BenchConfig::parse("n_min=3\nn_max=2"), Err(BenchError::Config { .. })));
        assert!(matches!(BenchConfig::parse("methods=kv,ncsb"), Err(BenchError::Config { .. })));
        assert!(BenchConfig::parse("# comment\n\nmethods = tight\n").is_ok());
    }

    #[test]
    fn empty_rows_give_header_only() {
        assert_eq!(to_csv(&[]), format!("{CSV_HEADER}\n"));
        assert_eq!(to_markdown(&[]), "");
    }

    #[test]
    fn deterministic_csv() {
        let cfg = small();
        let a = to_csv(&run_suite(&cfg).unwrap());
        let b = to_csv(&run_suite(&cfg).unwrap());
        assert_eq!(a, b);
        assert_eq!(a.lines().count(), 1 + 2 * 2 * 2 * 2 * 2 * 3);
        for line in a.lines().skip(1) {
            assert_eq!(line.split(',').count(), 15);
        }
    }

    #[test]
    fn n1_rows_are_small() {
        let mut cfg = small();
        cfg.n_max = 1;
        for r in run_suite(&cfg).unwrap() {
            let s = r.stats.unwrap();
            assert!(s.q2 <= 4, "{r:?}");
            assert_eq!(s.states, s.q1 + s.q2);
        }
    }

    #[test]
    fn reduced_edges_within_outdegree_bound() {
        let mut cfg = small();
        cfg.n_max = 3;
        cfg.methods = vec![Method::Reduced];
        for r in run_suite(&cfg).unwrap() {
            assert!(r.stats.unwrap().max_outdegree <= 2);
        }
    }

    #[test]
    fn markdown_groups_methods() {
        let md = to_markdown(&run_suite(&small()).unwrap());
        for m in Method::ALL {
            assert!(md.contains(&format!("## {m}\n")));
        }
        assert!(md.contains("## bounds"));
        assert!(md.find("## kv").unwrap() < md.find("## tight").unwrap());
    }

    #[test]
    fn timeout_rows_are_marked() {
        let mut cfg = small();
        cfg.n_min = 2;
        cfg.max_edges = Some(0);
        let rows = run_suite(&cfg).unwrap();
        assert!(rows.iter().all(|r| r.stats.is_none()));
        assert!(to_csv(&rows).lines().skip(1).all(|l| l.ends_with(",1")));
    }

    #[test]
    fn bound_columns() {
        assert_eq!(kv_bound(2), BigUint::from(25u32));
        assert!((factorial_ratio(1) - 2.0).abs() < 1e-12);
        assert!(kappa(12) > 0.5 && kappa(12) < 1.0);
    }
}
