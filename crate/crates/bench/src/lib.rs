//! Instances shared by the criterion benchmarks.

use argfacets::{reductions, ArgumentationFramework};

/// Random frameworks of increasing size with a fixed seed per size.
pub fn random_series(sizes: &[usize], p: f64) -> Vec<(usize, ArgumentationFramework)> {
    sizes
        .iter()
        .map(|&n| (n, reductions::random_af(n, p, n as u64)))
        .collect()
}
