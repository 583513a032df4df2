//! Extension enumeration, existence queries and consequence computation.
//!
//! Credulous and skeptical consequences are computed by narrowing: each
//! existence query asks for an extension that strictly grows the running
//! union (or strictly shrinks the running intersection), so a framework
//! with `n` arguments never needs more than `n + 1` queries.
//!
//! Over an empty extension space the skeptical set is the whole argument
//! set (the intersection over nothing). This never affects facets, since
//! the credulous set is then empty.

mod engine;
mod oracle;

use std::cell::Cell;
use std::time::{Duration, Instant};

use serde::{Deserialize, Serialize};

use crate::error::{ConstraintError, DeadlineExceeded};
use crate::framework::ArgumentationFramework;
use crate::semantics::{range, Semantics};
use crate::set::ArgumentSet;

use engine::{Base, Engine, Flow, Query};

pub use oracle::{brute_force, brute_force_with_limit, ORACLE_LIMIT};

/// Arguments an extension must contain and must avoid.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Constraints {
    require_in: ArgumentSet,
    require_out: ArgumentSet,
}

impl Constraints {
    pub fn none() -> Self {
        Self::default()
    }

    pub fn new(require_in: ArgumentSet, require_out: ArgumentSet) -> Result<Self, ConstraintError> {
        if let Some(a) = require_in.intersection(&require_out).iter().next() {
            return Err(ConstraintError::Conflicting(a));
        }
        Ok(Constraints {
            require_in,
            require_out,
        })
    }

    pub fn including(require_in: ArgumentSet) -> Self {
        Constraints {
            require_in,
            require_out: ArgumentSet::new(),
        }
    }

    pub fn excluding(require_out: ArgumentSet) -> Self {
        Constraints {
            require_in: ArgumentSet::new(),
            require_out,
        }
    }

    pub fn require_in(&self) -> &ArgumentSet {
        &self.require_in
    }

    pub fn require_out(&self) -> &ArgumentSet {
        &self.require_out
    }

    pub fn is_empty(&self) -> bool {
        self.require_in.is_empty() && self.require_out.is_empty()
    }

    /// Adds `a` to the required-in (`keep == true`) or required-out set.
    pub fn with(&self, a: usize, keep: bool) -> Result<Self, ConstraintError> {
        let mut next = self.clone();
        if keep {
            if next.require_out.contains(a) {
                return Err(ConstraintError::Conflicting(a));
            }
            next.require_in.insert(a);
        } else {
            if next.require_in.contains(a) {
                return Err(ConstraintError::Conflicting(a));
            }
            next.require_out.insert(a);
        }
        Ok(next)
    }

    /// Whether `set` honours both sides.
    pub fn admits(&self, set: &ArgumentSet) -> bool {
        self.require_in.is_subset(set) && set.is_disjoint(&self.require_out)
    }

    /// Checks every argument index against a framework of `len` arguments.
    pub fn check_range(&self, len: usize) -> Result<(), ConstraintError> {
        match self
            .require_in
            .union(&self.require_out)
            .iter()
            .find(|&a| a >= len)
        {
            Some(a) => Err(ConstraintError::OutOfRange(a)),
            None => Ok(()),
        }
    }
}

/// Bounds on an enumeration run.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Budget {
    pub max_models: Option<usize>,
    pub timeout: Option<Duration>,
}

impl Budget {
    pub fn unbounded() -> Self {
        Self::default()
    }

    pub fn models(max: usize) -> Self {
        Budget {
            max_models: Some(max.max(1)),
            timeout: None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EnumerationResult {
    pub extensions: Vec<ArgumentSet>,
    /// True iff the full constrained extension space was enumerated.
    pub exhausted: bool,
    /// True iff enumeration stopped at the deadline.
    pub timed_out: bool,
}

/// Query front end for one framework and semantics.
///
/// Counts the top-level existence queries it issues so callers can check
/// narrowing bounds. Nested maximality checks are not counted.
pub struct Solver<'a> {
    af: &'a ArgumentationFramework,
    semantics: Semantics,
    deadline: Option<Instant>,
    queries: Cell<usize>,
}

impl<'a> Solver<'a> {
    pub fn new(af: &'a ArgumentationFramework, semantics: Semantics) -> Self {
        Solver {
            af,
            semantics,
            deadline: None,
            queries: Cell::new(0),
        }
    }

    pub fn with_deadline(mut self, deadline: Option<Instant>) -> Self {
        self.deadline = deadline;
        self
    }

    pub fn with_timeout(self, timeout: Option<Duration>) -> Self {
        self.with_deadline(timeout.map(|t| Instant::now() + t))
    }

    pub fn framework(&self) -> &'a ArgumentationFramework {
        self.af
    }

    pub fn semantics(&self) -> Semantics {
        self.semantics
    }

    /// Number of existence queries issued so far.
    pub fn existence_queries(&self) -> usize {
        self.queries.get()
    }

    fn candidate_base(&self) -> Base {
        match self.semantics {
            Semantics::Cnf | Semantics::Nai | Semantics::Stag => Base::ConflictFree,
            Semantics::Adm => Base::Admissible,
            Semantics::Comp | Semantics::Pref | Semantics::Semi => Base::Complete,
            Semantics::Stab => Base::Stable,
        }
    }

    fn query(&self, c: &Constraints) -> Query {
        let mut q = Query::new(self.candidate_base());
        q.require_in = c.require_in.clone();
        q.require_out = c.require_out.clone();
        q
    }

    fn check_deadline(&self) -> Result<(), DeadlineExceeded> {
        match self.deadline {
            Some(d) if Instant::now() >= d => Err(DeadlineExceeded { partial: None }),
            _ => Ok(()),
        }
    }

    /// Whether some set strictly dominates `set` under the maximality
    /// criterion of the semantics. Always false for the other semantics.
    pub fn has_better(&self, set: &ArgumentSet) -> bool {
        self.better_exists(set, None)
            .expect("no deadline was given")
    }

    fn better_exists(
        &self,
        set: &ArgumentSet,
        deadline: Option<Instant>,
    ) -> Result<bool, DeadlineExceeded> {
        let all = self.af.arguments();
        let q = match self.semantics {
            Semantics::Nai | Semantics::Pref => {
                let outside = all.difference(set);
                if outside.is_empty() {
                    return Ok(false);
                }
                let base = if self.semantics == Semantics::Nai {
                    Base::ConflictFree
                } else {
                    Base::Admissible
                };
                let mut q = Query::new(base);
                q.require_in = set.clone();
                q.some_in = Some(outside);
                q
            }
            Semantics::Semi | Semantics::Stag => {
                let covered = range(self.af, set);
                let uncovered = all.difference(&covered);
                if uncovered.is_empty() {
                    return Ok(false);
                }
                let base = if self.semantics == Semantics::Stag {
                    Base::ConflictFree
                } else {
                    Base::Admissible
                };
                let mut q = Query::new(base);
                q.cover = Some(covered);
                q.some_cover = Some(uncovered);
                q
            }
            _ => return Ok(false),
        };
        let exhausted = Engine::new(self.af, q, deadline).run(|_| Ok(Flow::Stop))?;
        Ok(!exhausted)
    }

    /// Runs `q` over candidates, passing only genuine extensions to `visit`.
    fn search(
        &self,
        q: Query,
        mut visit: impl FnMut(&ArgumentSet) -> Flow,
    ) -> Result<bool, DeadlineExceeded> {
        let maximal = self.semantics.is_maximal();
        Engine::new(self.af, q, self.deadline).run(|candidate| {
            if maximal {
                self.check_deadline()?;
                if self.better_exists(candidate, self.deadline)? {
                    return Ok(Flow::Continue);
                }
            }
            Ok(visit(candidate))
        })
    }

    fn witness(&self, q: Query) -> Result<Option<ArgumentSet>, DeadlineExceeded> {
        self.queries.set(self.queries.get() + 1);
        self.check_deadline()?;
        let mut found = None;
        self.search(q, |e| {
            found = Some(e.clone());
            Flow::Stop
        })?;
        Ok(found)
    }

    /// Some extension honouring `c`, stopping at the first one found.
    pub fn find_witness(&self, c: &Constraints) -> Result<Option<ArgumentSet>, DeadlineExceeded> {
        self.witness(self.query(c))
    }

    pub fn exists(&self, c: &Constraints) -> Result<bool, DeadlineExceeded> {
        Ok(self.find_witness(c)?.is_some())
    }

    /// Enumerates extensions honouring `c`, at most `max_models` of them.
    ///
    /// Hitting either bound is not an error; it shows up as
    /// `exhausted == false`.
    pub fn enumerate(&self, c: &Constraints, max_models: Option<usize>) -> EnumerationResult {
        let mut extensions = Vec::new();
        let mut overflow = false;
        let outcome = self.search(self.query(c), |e| {
            debug_assert!(c.admits(e));
            if max_models.is_some_and(|m| extensions.len() >= m) {
                overflow = true;
                return Flow::Stop;
            }
            extensions.push(e.clone());
            Flow::Continue
        });
        let (exhausted, timed_out) = match outcome {
            Ok(done) => (done && !overflow, false),
            Err(_) => (false, true),
        };
        EnumerationResult {
            extensions,
            exhausted,
            timed_out,
        }
    }

    /// Union of all extensions honouring `c`.
    pub fn credulous(&self, c: &Constraints) -> Result<ArgumentSet, DeadlineExceeded> {
        let all = self.af.arguments();
        let mut union = ArgumentSet::new();
        loop {
            let outside = all.difference(&union);
            if outside.is_empty() {
                return Ok(union);
            }
            let mut q = self.query(c);
            q.some_in = Some(outside);
            match self.witness(q) {
                Ok(Some(e)) => union.union_with(&e),
                Ok(None) => return Ok(union),
                Err(_) => {
                    return Err(DeadlineExceeded {
                        partial: Some(union),
                    })
                }
            }
        }
    }

    /// Intersection of all extensions honouring `c`; every argument when
    /// there are none.
    pub fn skeptical(&self, c: &Constraints) -> Result<ArgumentSet, DeadlineExceeded> {
        let Some(mut common) = self.find_witness(c)? else {
            return Ok(self.af.arguments());
        };
        while !common.is_empty() {
            let mut q = self.query(c);
            q.some_out = Some(common.clone());
            match self.witness(q) {
                Ok(Some(e)) => common.intersect_with(&e),
                Ok(None) => break,
                Err(_) => {
                    return Err(DeadlineExceeded {
                        partial: Some(common),
                    })
                }
            }
        }
        Ok(common)
    }
}

/// Enumerates the `semantics`-extensions of `af` honouring `c`.
pub fn enumerate(
    af: &ArgumentationFramework,
    semantics: Semantics,
    c: &Constraints,
    budget: &Budget,
) -> EnumerationResult {
    Solver::new(af, semantics)
        .with_timeout(budget.timeout)
        .enumerate(c, budget.max_models)
}

pub fn exists_extension(
    af: &ArgumentationFramework,
    semantics: Semantics,
    c: &Constraints,
) -> bool {
    Solver::new(af, semantics)
        .exists(c)
        .expect("no deadline was given")
}

pub fn credulous_set(
    af: &ArgumentationFramework,
    semantics: Semantics,
    c: &Constraints,
) -> ArgumentSet {
    Solver::new(af, semantics)
        .credulous(c)
        .expect("no deadline was given")
}

pub fn skeptical_set(
    af: &ArgumentationFramework,
    semantics: Semantics,
    c: &Constraints,
) -> ArgumentSet {
    Solver::new(af, semantics)
        .skeptical(c)
        .expect("no deadline was given")
}
