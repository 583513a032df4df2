//! Seeded random instances.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::framework::ArgumentationFramework;

use super::cnf::CnfFormula;

/// Arguments `a1..an`; each ordered pair (self-attacks included) is an
/// attack with probability `p`.
pub fn random_af(n: usize, p: f64, seed: u64) -> ArgumentationFramework {
    assert!(n >= 1, "need at least one argument");
    assert!((0.0..=1.0).contains(&p), "probability out of range");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut attacks = Vec::new();
    for f in 0..n {
        for t in 0..n {
            if rng.random_bool(p) {
                attacks.push((f, t));
            }
        }
    }
    ArgumentationFramework::new((1..=n).map(|i| format!("a{i}")), attacks).unwrap()
}

/// `m` clauses over `n` variables, each clause of 1 to `max_width`
/// distinct variables with random signs.
pub fn random_cnf(n: usize, m: usize, max_width: usize, seed: u64) -> CnfFormula {
    assert!(
        n >= 1 && max_width >= 1,
        "need variables and a positive width"
    );
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let clauses = (0..m)
        .map(|_| {
            let width = rng.random_range(1..=max_width.min(n));
            let mut vars: Vec<i32> = (1..=n as i32).collect();
            for i in 0..width {
                let j = rng.random_range(i..n);
                vars.swap(i, j);
            }
            vars.truncate(width);
            vars.into_iter()
                .map(|v| if rng.random_bool(0.5) { v } else { -v })
                .collect()
        })
        .collect();
    CnfFormula::new(n, clauses).expect("distinct variables never form a tautology")
}
