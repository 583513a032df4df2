//! Subset-sweep oracle.
//!
//! Enumerates every subset of the arguments and keeps those passing the
//! pointwise predicates; maximality semantics are resolved by comparing
//! the surviving sets directly. Shares no code with the search engine.

use crate::error::OracleError;
use crate::framework::ArgumentationFramework;
use crate::semantics::{is_admissible, is_complete, is_conflict_free, is_stable, range, Semantics};
use crate::set::ArgumentSet;

use super::Constraints;

pub const ORACLE_LIMIT: usize = 20;

pub fn brute_force(
    af: &ArgumentationFramework,
    semantics: Semantics,
    c: &Constraints,
) -> Result<Vec<ArgumentSet>, OracleError> {
    brute_force_with_limit(af, semantics, c, ORACLE_LIMIT)
}

/// All constrained extensions, sorted.
pub fn brute_force_with_limit(
    af: &ArgumentationFramework,
    semantics: Semantics,
    c: &Constraints,
    limit: usize,
) -> Result<Vec<ArgumentSet>, OracleError> {
    let n = af.len();
    if n > limit || n >= 64 {
        return Err(OracleError::TooLarge { len: n, limit });
    }
    let base: fn(&ArgumentationFramework, &ArgumentSet) -> bool = match semantics {
        Semantics::Cnf | Semantics::Nai | Semantics::Stag => is_conflict_free,
        Semantics::Adm | Semantics::Pref | Semantics::Semi => is_admissible,
        Semantics::Comp => is_complete,
        Semantics::Stab => is_stable,
    };
    let candidates: Vec<ArgumentSet> = (0u64..1 << n)
        .map(|mask| {
            (0..n)
                .filter(|&i| mask >> i & 1 == 1)
                .collect::<ArgumentSet>()
        })
        .filter(|s| base(af, s))
        .collect();
    let dominated = |s: &ArgumentSet, t: &ArgumentSet| match semantics {
        Semantics::Nai | Semantics::Pref => s != t && s.is_subset(t),
        Semantics::Semi | Semantics::Stag => {
            let (rs, rt) = (range(af, s), range(af, t));
            rs != rt && rs.is_subset(&rt)
        }
        _ => false,
    };
    let mut out: Vec<ArgumentSet> = candidates
        .iter()
        .filter(|s| !semantics.is_maximal() || !candidates.iter().any(|t| dominated(s, t)))
        .filter(|s| c.admits(s))
        .cloned()
        .collect();
    out.sort();
    Ok(out)
}
