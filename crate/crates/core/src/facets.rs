//! Facets and significance.
//!
//! An argument is a facet when it belongs to some but not all extensions.
//! Approving a literal (keeping only extensions that contain, or avoid, an
//! argument) can only remove facets; the significance of a literal is the
//! fraction of facets it removes, as an exact rational.

use std::fmt;
use std::time::Instant;

use num_rational::Ratio;
use serde::{Deserialize, Serialize};

use crate::error::{DeadlineExceeded, FacetError};
use crate::framework::ArgumentationFramework;
use crate::search::{Constraints, Solver};
use crate::semantics::Semantics;
use crate::set::ArgumentSet;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FacetReport {
    pub semantics: Semantics,
    pub constraints: Constraints,
    pub cred: ArgumentSet,
    pub skep: ArgumentSet,
    pub facets: ArgumentSet,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Polarity {
    Approve,
    Disapprove,
}

/// An argument together with a decision to keep (`Approve`) or drop it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Literal {
    pub argument: usize,
    pub polarity: Polarity,
}

impl Literal {
    pub fn approve(argument: usize) -> Self {
        Literal {
            argument,
            polarity: Polarity::Approve,
        }
    }

    pub fn disapprove(argument: usize) -> Self {
        Literal {
            argument,
            polarity: Polarity::Disapprove,
        }
    }

    pub fn negated(self) -> Self {
        Literal {
            argument: self.argument,
            polarity: match self.polarity {
                Polarity::Approve => Polarity::Disapprove,
                Polarity::Disapprove => Polarity::Approve,
            },
        }
    }

    /// `name` for approvals, `-name` for disapprovals.
    pub fn display<'a>(&self, af: &'a ArgumentationFramework) -> LiteralDisplay<'a> {
        LiteralDisplay {
            name: af.name(self.argument),
            polarity: self.polarity,
        }
    }
}

pub struct LiteralDisplay<'a> {
    name: &'a str,
    polarity: Polarity,
}

impl fmt::Display for LiteralDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.polarity {
            Polarity::Approve => f.write_str(self.name),
            Polarity::Disapprove => write!(f, "-{}", self.name),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SignificanceEntry {
    pub literal: Literal,
    /// Facets left once the literal is approved.
    pub remaining_facets: usize,
    #[serde(serialize_with = "exact_ratio")]
    pub score: Ratio<u64>,
}

fn exact_ratio<S: serde::Serializer>(r: &Ratio<u64>, s: S) -> Result<S::Ok, S::Error> {
    use serde::ser::SerializeStruct;
    let mut st = s.serialize_struct("Ratio", 2)?;
    st.serialize_field("num", r.numer())?;
    st.serialize_field("den", r.denom())?;
    st.end()
}

fn extend(c: &Constraints, lit: Literal) -> Option<Constraints> {
    c.with(lit.argument, lit.polarity == Polarity::Approve).ok()
}

/// Closed-form facets for unconstrained conflict-free and naive semantics.
///
/// Conflict-free: every argument that does not attack itself (it is in
/// `{a}` and not in the empty set). Naive: additionally, the argument must
/// clash with some other argument that does not attack itself; otherwise
/// it belongs to every naive extension.
pub fn closed_form_facets(
    af: &ArgumentationFramework,
    semantics: Semantics,
) -> Option<ArgumentSet> {
    let candidates = (0..af.len()).filter(|&a| !af.is_self_attacking(a));
    match semantics {
        Semantics::Cnf => Some(candidates.collect()),
        Semantics::Nai => Some(
            candidates
                .filter(|&a| {
                    af.targets(a)
                        .iter()
                        .chain(af.attackers(a))
                        .any(|&b| b != a && !af.is_self_attacking(b))
                })
                .collect(),
        ),
        _ => None,
    }
}

/// Like [`facet_report`], giving up at `deadline`.
pub fn facet_report_within(
    af: &ArgumentationFramework,
    semantics: Semantics,
    c: &Constraints,
    deadline: Option<Instant>,
) -> Result<FacetReport, DeadlineExceeded> {
    let solver = Solver::new(af, semantics).with_deadline(deadline);
    let (cred, skep) = if c.is_empty() && matches!(semantics, Semantics::Cnf | Semantics::Nai) {
        let facets = closed_form_facets(af, semantics).unwrap();
        let cred: ArgumentSet = (0..af.len())
            .filter(|&a| !af.is_self_attacking(a))
            .collect();
        let skep = cred.difference(&facets);
        (cred, skep)
    } else {
        (solver.credulous(c)?, solver.skeptical(c)?)
    };
    Ok(FacetReport {
        semantics,
        constraints: c.clone(),
        facets: cred.difference(&skep),
        cred,
        skep,
    })
}

/// Credulous, skeptical and facet sets of the extensions honouring `c`.
pub fn facet_report(
    af: &ArgumentationFramework,
    semantics: Semantics,
    c: &Constraints,
) -> FacetReport {
    facet_report_within(af, semantics, c, None).expect("no deadline was given")
}

/// Facet report by the generic narrowing route, skipping closed forms.
pub fn facet_report_generic(
    af: &ArgumentationFramework,
    semantics: Semantics,
    c: &Constraints,
) -> FacetReport {
    let solver = Solver::new(af, semantics);
    let cred = solver.credulous(c).expect("no deadline");
    let skep = solver.skeptical(c).expect("no deadline");
    FacetReport {
        semantics,
        constraints: c.clone(),
        facets: cred.difference(&skep),
        cred,
        skep,
    }
}

/// Two early-exit queries: one extension with `a`, one without.
pub fn is_facet_under(
    solver: &Solver<'_>,
    c: &Constraints,
    a: usize,
) -> Result<bool, DeadlineExceeded> {
    let (Some(with), Some(without)) = (
        extend(c, Literal::approve(a)),
        extend(c, Literal::disapprove(a)),
    ) else {
        return Ok(false);
    };
    Ok(solver.exists(&with)? && solver.exists(&without)?)
}

pub fn is_facet(af: &ArgumentationFramework, semantics: Semantics, a: usize) -> bool {
    is_facet_under(&Solver::new(af, semantics), &Constraints::none(), a).expect("no deadline")
}

pub fn count_facets(af: &ArgumentationFramework, semantics: Semantics) -> usize {
    facet_report(af, semantics, &Constraints::none())
        .facets
        .len()
}

/// Stops as soon as `k` facets are confirmed or too few candidates remain.
pub fn has_at_least(af: &ArgumentationFramework, semantics: Semantics, k: usize) -> bool {
    if let Some(f) = closed_form_facets(af, semantics) {
        return f.len() >= k;
    }
    let solver = Solver::new(af, semantics);
    let c = Constraints::none();
    let mut found = 0;
    for a in 0..af.len() {
        if found >= k || found + (af.len() - a) < k {
            break;
        }
        if is_facet_under(&solver, &c, a).expect("no deadline") {
            found += 1;
        }
    }
    found >= k
}

pub fn has_at_most(af: &ArgumentationFramework, semantics: Semantics, k: usize) -> bool {
    !has_at_least(af, semantics, k + 1)
}

pub fn has_exactly(af: &ArgumentationFramework, semantics: Semantics, k: usize) -> bool {
    count_facets(af, semantics) == k
}

/// Significance of `lit` relative to the extensions honouring `base`.
///
/// `base_facets` is the facet set under `base`; the literal's argument
/// must be one of them.
pub fn significance_within(
    af: &ArgumentationFramework,
    semantics: Semantics,
    base: &Constraints,
    base_facets: &ArgumentSet,
    lit: Literal,
    deadline: Option<Instant>,
) -> Result<SignificanceEntry, FacetError> {
    if lit.argument >= af.len() {
        return Err(FacetError::OutOfRange(lit.argument));
    }
    if !base_facets.contains(lit.argument) {
        return Err(FacetError::NotAFacet(af.name(lit.argument).to_string()));
    }
    let narrowed = extend(base, lit).expect("facets are never constrained");
    let remaining = facet_report_within(af, semantics, &narrowed, deadline)?
        .facets
        .len();
    let total = base_facets.len() as u64;
    Ok(SignificanceEntry {
        literal: lit,
        remaining_facets: remaining,
        score: Ratio::new(total - remaining as u64, total),
    })
}

/// Fraction of facets removed by approving `lit`.
pub fn significance(
    af: &ArgumentationFramework,
    semantics: Semantics,
    lit: Literal,
) -> Result<SignificanceEntry, FacetError> {
    let none = Constraints::none();
    let facets = facet_report(af, semantics, &none).facets;
    significance_within(af, semantics, &none, &facets, lit, None)
}

/// Descending score, then ascending argument, approvals first.
pub fn sort_entries(entries: &mut [SignificanceEntry]) {
    entries.sort_by(|x, y| {
        y.score
            .cmp(&x.score)
            .then(x.literal.argument.cmp(&y.literal.argument))
            .then(x.literal.polarity.cmp(&y.literal.polarity))
    });
}

/// Both literals of every facet under `base`, in canonical order.
pub fn significance_table_within(
    af: &ArgumentationFramework,
    semantics: Semantics,
    base: &Constraints,
    base_facets: &ArgumentSet,
    deadline: Option<Instant>,
) -> Result<Vec<SignificanceEntry>, FacetError> {
    let mut entries = Vec::with_capacity(2 * base_facets.len());
    for a in base_facets {
        for lit in [Literal::approve(a), Literal::disapprove(a)] {
            entries.push(significance_within(
                af,
                semantics,
                base,
                base_facets,
                lit,
                deadline,
            )?);
        }
    }
    sort_entries(&mut entries);
    Ok(entries)
}

pub fn significance_table(
    af: &ArgumentationFramework,
    semantics: Semantics,
) -> Vec<SignificanceEntry> {
    let none = Constraints::none();
    let facets = facet_report(af, semantics, &none).facets;
    significance_table_within(af, semantics, &none, &facets, None).expect("no deadline")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::{ex1, fx, fxx};

    fn set(af: &ArgumentationFramework, names: &[&str]) -> ArgumentSet {
        af.set_of(names.iter().copied()).unwrap()
    }

    #[test]
    fn ex1_stable_facets() {
        let af = ex1();
        let r = facet_report(&af, Semantics::Stab, &Constraints::none());
        assert_eq!(r.facets, set(&af, &["w", "s", "b", "m", "t", "p"]));
        let s = Constraints::including(set(&af, &["s"]));
        assert_eq!(
            facet_report(&af, Semantics::Stab, &s).facets,
            set(&af, &["p", "t"])
        );
        let w = Constraints::including(set(&af, &["w"]));
        assert!(facet_report(&af, Semantics::Stab, &w).facets.is_empty());
    }

    #[test]
    fn is_facet_on_ex1() {
        let af = ex1();
        assert!(!is_facet(&af, Semantics::Stab, af.index_of("e").unwrap()));
        assert!(is_facet(&af, Semantics::Stab, af.index_of("w").unwrap()));
        let lone = ArgumentationFramework::new(["a"], []).unwrap();
        assert!(is_facet(&lone, Semantics::Adm, 0));
        assert!(!is_facet(&lone, Semantics::Stab, 0));
    }

    #[test]
    fn cnf_closed_form_example() {
        let af = ArgumentationFramework::from_named(
            &["a", "b", "z"],
            &[("a", "b"), ("b", "a"), ("z", "z")],
        )
        .unwrap();
        let expected = set(&af, &["a", "b"]);
        assert_eq!(
            facet_report(&af, Semantics::Cnf, &Constraints::none()).facets,
            expected
        );
        assert_eq!(
            facet_report_generic(&af, Semantics::Cnf, &Constraints::none()).facets,
            expected
        );
    }

    #[test]
    fn naive_closed_form_ignores_clashes_with_self_attackers() {
        // a only clashes with the self-attacking b, so every naive set has a
        let af =
            ArgumentationFramework::from_named(&["a", "b"], &[("a", "b"), ("b", "b")]).unwrap();
        assert!(closed_form_facets(&af, Semantics::Nai).unwrap().is_empty());
        assert!(
            facet_report_generic(&af, Semantics::Nai, &Constraints::none())
                .facets
                .is_empty()
        );
    }

    #[test]
    fn counting() {
        let af = ex1();
        assert_eq!(count_facets(&af, Semantics::Stab), 6);
        assert!(has_exactly(&af, Semantics::Stab, 6));
        assert!(has_at_least(&af, Semantics::Stab, 6));
        assert!(!has_at_least(&af, Semantics::Stab, 7));
        assert!(has_at_most(&af, Semantics::Stab, 6));
        assert!(!has_at_most(&af, Semantics::Stab, 5));
        assert!(has_at_least(&af, Semantics::Stab, 0));
        assert_eq!(count_facets(&fx(), Semantics::Stab), 4);
        assert_eq!(count_facets(&fxx(), Semantics::Stab), 4);
    }

    #[test]
    fn significance_on_ex1() {
        let af = ex1();
        let idx = |n| af.index_of(n).unwrap();
        let w = significance(&af, Semantics::Stab, Literal::approve(idx("w"))).unwrap();
        assert_eq!((w.remaining_facets, w.score), (0, Ratio::from_integer(1)));
        let s = significance(&af, Semantics::Stab, Literal::approve(idx("s"))).unwrap();
        assert_eq!((s.remaining_facets, s.score), (2, Ratio::new(2, 3)));
        let t = significance(&af, Semantics::Stab, Literal::disapprove(idx("t"))).unwrap();
        assert_eq!((t.remaining_facets, t.score), (4, Ratio::new(1, 3)));
        assert_eq!(
            significance(&af, Semantics::Stab, Literal::approve(idx("e"))),
            Err(FacetError::NotAFacet("e".into()))
        );
    }

    #[test]
    fn table_order_and_fx() {
        let af = ex1();
        let table = significance_table(&af, Semantics::Stab);
        let rendered: Vec<String> = table
            .iter()
            .map(|e| format!("{} {}", e.literal.display(&af), e.score))
            .collect();
        assert_eq!(
            rendered,
            [
                "w 1", "-s 1", "-b 1", "m 1", "t 1", "-p 1", "-w 2/3", "s 2/3", "b 2/3", "-m 2/3",
                "-t 1/3", "p 1/3"
            ]
        );
        let fx_table = significance_table(&fx(), Semantics::Stab);
        assert_eq!(fx_table.len(), 8);
        assert!(fx_table.iter().all(|e| e.score > Ratio::from_integer(0)));
        let empty = ArgumentationFramework::from_named(&["a"], &[("a", "a")]).unwrap();
        assert!(significance_table(&empty, Semantics::Stab).is_empty());
    }
}
