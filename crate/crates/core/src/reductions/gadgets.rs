//! Framework-to-framework gadgets.

use crate::framework::{ArgumentationFramework, FrameworkBuilder};

fn fresh_name(af: &ArgumentationFramework, taken: &[String], base: String) -> String {
    let free = |n: &str| af.index_of(n).is_none() && !taken.iter().any(|t| t == n);
    if free(&base) {
        return base;
    }
    (2..)
        .map(|i| format!("{base}_{i}"))
        .find(|n| free(n))
        .unwrap()
}

fn copy_of(af: &ArgumentationFramework) -> FrameworkBuilder {
    let mut b = FrameworkBuilder::new();
    for name in af.names() {
        b.add_argument(name.clone()).unwrap();
    }
    for &(f, t) in af.attacks() {
        b.add_attack(f, t).unwrap();
    }
    b
}

/// Adds a twin `a'` of `a` (named `<a>_dup`) that mutually attacks `a` and
/// mirrors all of its attacks. A self-attacking `a` yields a
/// self-attacking twin.
pub fn duplicate_argument(af: &ArgumentationFramework, a: usize) -> ArgumentationFramework {
    let mut b = copy_of(af);
    let twin = b
        .add_argument(fresh_name(af, &[], format!("{}_dup", af.name(a))))
        .unwrap();
    b.add_attack(a, twin).unwrap();
    b.add_attack(twin, a).unwrap();
    for &x in af.targets(a) {
        b.add_attack(twin, if x == a { twin } else { x }).unwrap();
    }
    for &x in af.attackers(a) {
        if x != a {
            b.add_attack(x, twin).unwrap();
        }
    }
    b.build().unwrap()
}

/// Adds `n - 1` copies of `a` (named `<a>_copy2`, ...), each attacking
/// whatever `a` attacks and attacked by whatever attacks `a`. Copies do
/// not attack each other. `n == 1` returns the framework unchanged.
///
/// A self-attack `(a, a)` becomes a self-attack on each copy, so copies
/// and the original never attack each other.
pub fn copy_gadget(af: &ArgumentationFramework, a: usize, n: usize) -> ArgumentationFramework {
    assert!(n >= 1, "the gadget needs n >= 1");
    let mut b = copy_of(af);
    let mut taken = Vec::new();
    for i in 2..=n {
        let name = fresh_name(af, &taken, format!("{}_copy{i}", af.name(a)));
        taken.push(name.clone());
        let copy = b.add_argument(name).unwrap();
        for &x in af.targets(a) {
            b.add_attack(copy, if x == a { copy } else { x }).unwrap();
        }
        for &x in af.attackers(a) {
            if x != a {
                b.add_attack(x, copy).unwrap();
            }
        }
    }
    b.build().unwrap()
}
