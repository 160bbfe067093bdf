use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{Alphabet, Nba, NbaBuilder};

/// A seeded random automaton over `k` letters.
///
/// Every (state, letter, target) triple is present independently with
/// probability `min(1, d/n)`, so `d` is the expected number of successors per
/// state and letter. State 0 is the only initial state and `⌈fa·n⌉` states,
/// drawn by the same generator, are accepting.
pub fn random_nba(n: usize, k: usize, d: f64, fa: f64, seed: u64) -> Nba {
    assert!(n >= 1 && k >= 1, "need at least one state and one letter");
    assert!(d > 0.0 && (0.0..=1.0).contains(&fa));
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let p = (d / n as f64).min(1.0);
    let mut b = NbaBuilder::new(Alphabet::standard(k), n);
    b.set_initial(0);
    for q in 0..n {
        for l in 0..k {
            for t in 0..n {
                if rng.gen_bool(p) {
                    b.add_edge(q, l, t);
                }
            }
        }
    }
    let count = ((fa * n as f64).ceil() as usize).min(n);
    for q in sample(&mut rng, n, count) {
        b.set_accepting(q, true);
    }
    b.build().expect("state 0 is initial")
}
