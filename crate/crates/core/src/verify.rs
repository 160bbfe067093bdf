//! Cross-checks of the complement constructions against the independent
//! oracles: product emptiness, lasso membership and run-DAG ranks.

use std::fmt::Write;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use sha2::{Digest, Sha256};

use crate::complement::{complement_with, ComplementError, ComplementOptions, Method};
use crate::nba::{intersect, is_empty, serialize_nba, Nba, UpWord, WordChecker};
use crate::rundag::{eventual_profile, rejects_by_rank, RunDagError};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SuiteMode {
    Exhaustive,
    Sampled { count: usize, seed: u64 },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct WordSuite {
    pub max_stem: usize,
    pub max_period: usize,
    pub mode: SuiteMode,
}

impl WordSuite {
    pub fn exhaustive(max_stem: usize, max_period: usize) -> Self {
        WordSuite {
            max_stem,
            max_period,
            mode: SuiteMode::Exhaustive,
        }
    }

    pub fn sampled(max_stem: usize, max_period: usize, count: usize, seed: u64) -> Self {
        WordSuite {
            max_stem,
            max_period,
            mode: SuiteMode::Sampled { count, seed },
        }
    }

    /// The words over `k` letters. Exhaustive order is by stem length, then
    /// period length, then lexicographic on stem and period.
    pub fn words(&self, k: usize) -> Vec<UpWord> {
        assert!(self.max_period >= 1, "periods are nonempty");
        match self.mode {
            SuiteMode::Exhaustive => {
                let mut out = Vec::new();
                for s in 0..=self.max_stem {
                    for p in 1..=self.max_period {
                        for stem in sequences(k, s) {
                            for period in sequences(k, p) {
                                out.push(UpWord::new(stem.clone(), period).expect("nonempty period"));
                            }
                        }
                    }
                }
                out
            }
            SuiteMode::Sampled { count, seed } => {
                let mut rng = ChaCha8Rng::seed_from_u64(seed);
                (0..count)
                    .map(|_| {
                        let s = rng.gen_range(0..=self.max_stem);
                        let p = rng.gen_range(1..=self.max_period);
                        let stem = (0..s).map(|_| rng.gen_range(0..k)).collect();
                        let period = (0..p).map(|_| rng.gen_range(0..k)).collect();
                        UpWord::new(stem, period).expect("nonempty period")
                    })
                    .collect()
            }
        }
    }
}

/// All sequences of length `len` over `0..k` in lexicographic order.
fn sequences(k: usize, len: usize) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::with_capacity(len)];
    for _ in 0..len {
        out = out
            .into_iter()
            .flat_map(|p| {
                (0..k).map(move |l| {
                    let mut q = p.clone();
                    q.push(l);
                    q
                })
            })
            .collect();
    }
    out
}

/// SHA-256 of the serialized automaton, hex encoded.
pub fn fingerprint(a: &Nba) -> String {
    hex::encode(Sha256::digest(serialize_nba(a).as_bytes()))
}

/// `L(a) ∩ L(comp) = ∅`, decided exactly.
pub fn disjoint(a: &Nba, comp: &Nba) -> bool {
    is_empty(&intersect(a, comp).expect("complement shares the alphabet"))
}

/// Words accepted by neither `a` nor `comp`.
pub fn uncovered_words(a: &Nba, comp: &Nba, words: &[UpWord]) -> Vec<UpWord> {
    let mut ca = WordChecker::new(a);
    let mut cc = WordChecker::new(comp);
    words
        .iter()
        .filter(|w| !ca.accepts(w) && !cc.accepts(w))
        .cloned()
        .collect()
}

pub fn check_soundness(a: &Nba, method: Method) -> Result<bool, ComplementError> {
    let c = complement_with(a, method, &ComplementOptions::default())?;
    Ok(disjoint(a, &c.automaton))
}

pub fn check_completeness(a: &Nba, method: Method, suite: &WordSuite) -> Result<Vec<UpWord>, ComplementError> {
    let c = complement_with(a, method, &ComplementOptions::default())?;
    Ok(uncovered_words(a, &c.automaton, &suite.words(a.num_letters())))
}

/// Words where the rank-based verdict differs from membership. Words the
/// rank computation cannot handle count as disagreements.
pub fn check_rank_oracle(a: &Nba, suite: &WordSuite) -> Vec<UpWord> {
    rank_oracle_disagreements(a, &suite.words(a.num_letters()))
}

fn rank_oracle_disagreements(a: &Nba, words: &[UpWord]) -> Vec<UpWord> {
    let mut checker = WordChecker::new(a);
    words
        .iter()
        .filter(|w| match rejects_by_rank(a, w) {
            Ok(rejects) => rejects == checker.accepts(w),
            Err(_) => true,
        })
        .cloned()
        .collect()
}

/// Rejected words with infinite runs whose periodic part is not uniformly
/// tight with an odd rank.
pub fn check_tight_profile(a: &Nba, suite: &WordSuite) -> Vec<UpWord> {
    profile_violations(a, &suite.words(a.num_letters()))
}

fn profile_violations(a: &Nba, words: &[UpWord]) -> Vec<UpWord> {
    let mut checker = WordChecker::new(a);
    words
        .iter()
        .filter(|w| !checker.accepts(w))
        .filter(|w| match eventual_profile(a, w) {
            Ok(p) => p.dag_rank % 2 == 0 || !p.per_cycle_level_tight,
            Err(RunDagError::ProfileUndefined) => false,
            Err(_) => true,
        })
        .cloned()
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum FailureKind {
    Soundness,
    Completeness,
    RankOracle,
    Profile,
    Construction,
}

impl FailureKind {
    pub fn name(self) -> &'static str {
        match self {
            FailureKind::Soundness => "soundness",
            FailureKind::Completeness => "completeness",
            FailureKind::RankOracle => "rank-oracle",
            FailureKind::Profile => "profile",
            FailureKind::Construction => "construction",
        }
    }
}

/// One failure; `method` and `word` are empty where they do not apply, and
/// `word` holds the error text for construction failures.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct FailureRecord {
    pub fingerprint: String,
    pub method: String,
    pub kind: &'static str,
    pub word: String,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct VerifyReport {
    pub instances: usize,
    pub soundness_failures: Vec<(String, Method)>,
    pub completeness_failures: Vec<(String, Method, String)>,
    pub oracle_disagreements: Vec<(String, String)>,
    pub profile_violations: Vec<(String, String)>,
    /// Constructions that hit a resource limit.
    pub construction_errors: Vec<(String, Method, String)>,
}

impl VerifyReport {
    pub fn passes(&self) -> bool {
        self.soundness_failures.is_empty()
            && self.completeness_failures.is_empty()
            && self.oracle_disagreements.is_empty()
            && self.profile_violations.is_empty()
            && self.construction_errors.is_empty()
    }

    pub fn merge(&mut self, other: VerifyReport) {
        self.instances += other.instances;
        self.soundness_failures.extend(other.soundness_failures);
        self.completeness_failures.extend(other.completeness_failures);
        self.oracle_disagreements.extend(other.oracle_disagreements);
        self.profile_violations.extend(other.profile_violations);
        self.construction_errors.extend(other.construction_errors);
        self.canonicalize();
    }

    fn canonicalize(&mut self) {
        self.soundness_failures.sort();
        self.completeness_failures.sort();
        self.oracle_disagreements.sort();
        self.profile_violations.sort();
        self.construction_errors.sort();
    }

    /// All failures as records, sorted.
    pub fn records(&self) -> Vec<FailureRecord> {
        let rec = |fp: &str, m: Option<Method>, kind: FailureKind, word: &str| FailureRecord {
            fingerprint: fp.to_string(),
            method: m.map(|m| m.name().to_string()).unwrap_or_default(),
            kind: kind.name(),
            word: word.to_string(),
        };
        let mut out = Vec::new();
        for (fp, m) in &self.soundness_failures {
            out.push(rec(fp, Some(*m), FailureKind::Soundness, ""));
        }
        for (fp, m, w) in &self.completeness_failures {
            out.push(rec(fp, Some(*m), FailureKind::Completeness, w));
        }
        for (fp, w) in &self.oracle_disagreements {
            out.push(rec(fp, None, FailureKind::RankOracle, w));
        }
        for (fp, w) in &self.profile_violations {
            out.push(rec(fp, None, FailureKind::Profile, w));
        }
        for (fp, m, e) in &self.construction_errors {
            out.push(rec(fp, Some(*m), FailureKind::Construction, e));
        }
        out.sort();
        out
    }

    /// One JSON object per line, one line per failure.
    pub fn to_json_lines(&self) -> String {
        self.records()
            .iter()
            .map(|r| serde_json::to_string(r).expect("plain record") + "\n")
            .collect()
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "instances: {}", self.instances);
        let _ = writeln!(out, "soundness failures: {}", self.soundness_failures.len());
        let _ = writeln!(out, "completeness failures: {}", self.completeness_failures.len());
        let _ = writeln!(out, "oracle disagreements: {}", self.oracle_disagreements.len());
        let _ = writeln!(out, "profile violations: {}", self.profile_violations.len());
        let _ = writeln!(out, "construction errors: {}", self.construction_errors.len());
        for r in self.records() {
            let _ = writeln!(out, "  {} {} {} {}", r.kind, &r.fingerprint[..12.min(r.fingerprint.len())], r.method, r.word);
        }
        let _ = writeln!(out, "verdict: {}", if self.passes() { "PASS" } else { "FAIL" });
        out
    }
}

/// Runs every check on one automaton and returns its report.
pub fn verify_instance(a: &Nba, methods: &[Method], suite: &WordSuite, opts: &ComplementOptions) -> VerifyReport {
    let fp = fingerprint(a);
    let words = suite.words(a.num_letters());
    let mut report = VerifyReport {
        instances: 1,
        ..Default::default()
    };
    for &m in methods {
        let c = match complement_with(a, m, opts) {
            Ok(c) => c,
            Err(e) => {
                report.construction_errors.push((fp.clone(), m, e.to_string()));
                continue;
            }
        };
        if !disjoint(a, &c.automaton) {
            report.soundness_failures.push((fp.clone(), m));
        }
        for w in uncovered_words(a, &c.automaton, &words) {
            report
                .completeness_failures
                .push((fp.clone(), m, w.display(a.alphabet()).to_string()));
        }
    }
    for w in rank_oracle_disagreements(a, &words) {
        report.oracle_disagreements.push((fp.clone(), w.display(a.alphabet()).to_string()));
    }
    for w in profile_violations(a, &words) {
        report.profile_violations.push((fp.clone(), w.display(a.alphabet()).to_string()));
    }
    report.canonicalize();
    report
}

pub fn verify_all(automata: &[Nba], methods: &[Method], suite: &WordSuite, opts: &ComplementOptions) -> VerifyReport {
    let mut report = VerifyReport::default();
    for a in automata {
        report.merge(verify_instance(a, methods, suite, opts));
    }
    report
}

/// A single-point fault in an emitted complement.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Fault {
    /// Make the `k`-th accepting state (ascending) non-accepting.
    DropAccepting(usize),
    /// Remove the `k`-th transition in sorted order.
    DropTransition(usize),
}

/// Applies a fault, or `None` when `k` is out of range.
pub fn inject_fault(c: &Nba, fault: Fault) -> Option<Nba> {
    match fault {
        Fault::DropAccepting(k) => c.accepting_states().nth(k).map(|q| c.without_accepting(q)),
        Fault::DropTransition(k) => c.transitions().nth(k).map(|(p, l, q)| c.without_transition(p, l, q)),
    }
}

/// Whether the harness notices that `mutant` is not a complement of `a`.
pub fn detects_fault(a: &Nba, mutant: &Nba, suite: &WordSuite) -> bool {
    !disjoint(a, mutant) || !uncovered_words(a, mutant, &suite.words(a.num_letters())).is_empty()
}
