//! Small named frameworks used throughout tests, docs and benchmarks.

use crate::framework::ArgumentationFramework;
use crate::reductions::{standard_translation, CnfFormula};

/// A seven-argument framework with three stable extensions:
/// `{w,m,p}`, `{s,b,p}` and `{s,b,t}`.
pub fn ex1() -> ArgumentationFramework {
    ArgumentationFramework::from_named(
        &["w", "s", "b", "m", "t", "e", "p"],
        &[
            ("w", "s"),
            ("s", "w"),
            ("s", "m"),
            ("w", "b"),
            ("m", "t"),
            ("t", "e"),
            ("p", "t"),
            ("t", "p"),
            ("p", "e"),
            ("e", "b"),
        ],
    )
    .expect("valid framework")
}

/// Standard translation of the single unit clause `(x1)`.
pub fn fx() -> ArgumentationFramework {
    standard_translation(&CnfFormula::new(1, vec![vec![1]]).unwrap())
}

/// Standard translation of the contradiction `(x1) & (-x1)`.
pub fn fxx() -> ArgumentationFramework {
    standard_translation(&CnfFormula::new(1, vec![vec![1], vec![-1]]).unwrap())
}

/// `k` disjoint mutually attacking pairs `a<i>`/`b<i>`: `2^k` stable
/// extensions and `2k` facets.
pub fn pairs(k: usize) -> ArgumentationFramework {
    let names: Vec<String> = (1..=k)
        .flat_map(|i| [format!("a{i}"), format!("b{i}")])
        .collect();
    let attacks = (0..k).flat_map(|i| [(2 * i, 2 * i + 1), (2 * i + 1, 2 * i)]);
    ArgumentationFramework::new(names, attacks).expect("k >= 1")
}
