//! The eight extension semantics and their pointwise predicates.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::framework::ArgumentationFramework;
use crate::search::Solver;
use crate::set::ArgumentSet;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Semantics {
    /// conflict-free
    Cnf,
    /// naive
    Nai,
    /// admissible
    Adm,
    /// complete
    Comp,
    /// stable
    Stab,
    /// preferred
    Pref,
    /// semi-stable
    Semi,
    /// stage
    Stag,
}

impl Semantics {
    pub const ALL: [Semantics; 8] = [
        Semantics::Cnf,
        Semantics::Nai,
        Semantics::Adm,
        Semantics::Comp,
        Semantics::Stab,
        Semantics::Pref,
        Semantics::Semi,
        Semantics::Stag,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Semantics::Cnf => "cnf",
            Semantics::Nai => "nai",
            Semantics::Adm => "adm",
            Semantics::Comp => "comp",
            Semantics::Stab => "stab",
            Semantics::Pref => "pref",
            Semantics::Semi => "semi",
            Semantics::Stag => "stag",
        }
    }

    /// Whether membership depends on other sets (subset or range maximality).
    pub fn is_maximal(self) -> bool {
        matches!(
            self,
            Semantics::Nai | Semantics::Pref | Semantics::Semi | Semantics::Stag
        )
    }
}

impl fmt::Display for Semantics {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("unknown semantics {0:?}")]
pub struct UnknownSemantics(pub String);

impl FromStr for Semantics {
    type Err = UnknownSemantics;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let lower = s.to_ascii_lowercase();
        let canonical = match lower.as_str() {
            "co" => "comp",
            "st" => "stab",
            "pr" => "pref",
            "ss" | "sst" => "semi",
            "stg" => "stag",
            "na" => "nai",
            "ad" => "adm",
            "cf" => "cnf",
            other => other,
        };
        Semantics::ALL
            .into_iter()
            .find(|s| s.as_str() == canonical)
            .ok_or_else(|| UnknownSemantics(s.to_string()))
    }
}

/// `set` together with every argument it attacks.
pub fn range(af: &ArgumentationFramework, set: &ArgumentSet) -> ArgumentSet {
    let mut out = set.clone();
    for a in set {
        out.extend(af.targets(a).iter().copied());
    }
    out
}

/// All arguments whose every attacker is attacked by some member of `set`.
pub fn defended(af: &ArgumentationFramework, set: &ArgumentSet) -> ArgumentSet {
    let attacked: ArgumentSet = set
        .iter()
        .flat_map(|a| af.targets(a).iter().copied())
        .collect();
    (0..af.len())
        .filter(|&a| af.attackers(a).iter().all(|&b| attacked.contains(b)))
        .collect()
}

pub fn is_conflict_free(af: &ArgumentationFramework, set: &ArgumentSet) -> bool {
    set.iter()
        .all(|a| af.targets(a).iter().all(|&b| !set.contains(b)))
}

pub fn is_admissible(af: &ArgumentationFramework, set: &ArgumentSet) -> bool {
    is_conflict_free(af, set) && set.is_subset(&defended(af, set))
}

pub fn is_complete(af: &ArgumentationFramework, set: &ArgumentSet) -> bool {
    is_conflict_free(af, set) && defended(af, set) == *set
}

pub fn is_stable(af: &ArgumentationFramework, set: &ArgumentSet) -> bool {
    is_conflict_free(af, set) && range(af, set).len() == af.len()
}

/// Whether `set` is a naive extension. Maximality among conflict-free sets
/// is local: every outside argument must clash with the set or itself.
pub fn is_naive(af: &ArgumentationFramework, set: &ArgumentSet) -> bool {
    is_conflict_free(af, set)
        && (0..af.len()).filter(|&a| !set.contains(a)).all(|a| {
            af.is_self_attacking(a)
                || af.targets(a).iter().any(|&b| set.contains(b))
                || af.attackers(a).iter().any(|&b| set.contains(b))
        })
}

/// Whether `set` is a `semantics`-extension of `af`.
///
/// Preferred, semi-stable and stage extensions are checked with an
/// existence query for a strictly better set.
pub fn satisfies(af: &ArgumentationFramework, set: &ArgumentSet, semantics: Semantics) -> bool {
    if set.bound() > af.len() {
        return false;
    }
    match semantics {
        Semantics::Cnf => is_conflict_free(af, set),
        Semantics::Nai => is_naive(af, set),
        Semantics::Adm => is_admissible(af, set),
        Semantics::Comp => is_complete(af, set),
        Semantics::Stab => is_stable(af, set),
        Semantics::Pref | Semantics::Semi | Semantics::Stag => {
            let base = if semantics == Semantics::Stag {
                is_conflict_free(af, set)
            } else {
                is_admissible(af, set)
            };
            base && !Solver::new(af, semantics).has_better(set)
        }
    }
}
