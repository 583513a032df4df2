//! Step-wise navigation of an extension space.
//!
//! A session accumulates approved literals. Only current facets can be
//! approved, so the constrained space never becomes empty. Significance is
//! always measured against the current space, not the original one.

use std::sync::Arc;
use std::time::Instant;

use serde::Serialize;

use crate::error::{DeadlineExceeded, FacetError};
use crate::facets::{
    facet_report_within, significance_table_within, FacetReport, Literal, Polarity,
    SignificanceEntry,
};
use crate::framework::ArgumentationFramework;
use crate::search::{Constraints, Solver};
use crate::semantics::Semantics;
use crate::set::ArgumentSet;

#[derive(Debug, Clone)]
pub struct NavigationSession {
    framework: Arc<ArgumentationFramework>,
    semantics: Semantics,
    history: Vec<Literal>,
    // one report per history prefix, so undo needs no recomputation
    reports: Vec<FacetReport>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SessionState {
    pub history: Vec<Literal>,
    pub facets: ArgumentSet,
    pub significance: Vec<SignificanceEntry>,
}

impl NavigationSession {
    pub fn new(framework: Arc<ArgumentationFramework>, semantics: Semantics) -> Self {
        Self::new_within(framework, semantics, None).expect("no deadline")
    }

    pub fn new_within(
        framework: Arc<ArgumentationFramework>,
        semantics: Semantics,
        deadline: Option<Instant>,
    ) -> Result<Self, DeadlineExceeded> {
        let report = facet_report_within(&framework, semantics, &Constraints::none(), deadline)?;
        Ok(NavigationSession {
            framework,
            semantics,
            history: Vec::new(),
            reports: vec![report],
        })
    }

    pub fn framework(&self) -> &Arc<ArgumentationFramework> {
        &self.framework
    }

    pub fn semantics(&self) -> Semantics {
        self.semantics
    }

    pub fn history(&self) -> &[Literal] {
        &self.history
    }

    pub fn report(&self) -> &FacetReport {
        self.reports.last().expect("never empty")
    }

    pub fn constraints(&self) -> &Constraints {
        &self.report().constraints
    }

    pub fn facets(&self) -> &ArgumentSet {
        &self.report().facets
    }

    pub fn approve(&mut self, lit: Literal) -> Result<&FacetReport, FacetError> {
        self.approve_within(lit, None)
    }

    /// Pushes `lit`, which must name a current facet. On error the session
    /// is unchanged.
    pub fn approve_within(
        &mut self,
        lit: Literal,
        deadline: Option<Instant>,
    ) -> Result<&FacetReport, FacetError> {
        if lit.argument >= self.framework.len() {
            return Err(FacetError::OutOfRange(lit.argument));
        }
        if !self.facets().contains(lit.argument) {
            return Err(FacetError::NotAFacet(
                self.framework.name(lit.argument).to_string(),
            ));
        }
        let next = self
            .constraints()
            .with(lit.argument, lit.polarity == Polarity::Approve)
            .expect("facets are unconstrained");
        let report = facet_report_within(&self.framework, self.semantics, &next, deadline)?;
        debug_assert!(report.facets.is_subset(self.facets()));
        self.history.push(lit);
        self.reports.push(report);
        Ok(self.report())
    }

    pub fn undo(&mut self) -> Result<Literal, FacetError> {
        let lit = self.history.pop().ok_or(FacetError::EmptyHistory)?;
        self.reports.pop();
        Ok(lit)
    }

    /// Significance of every current facet literal relative to the current
    /// space.
    pub fn significance_within(
        &self,
        deadline: Option<Instant>,
    ) -> Result<Vec<SignificanceEntry>, FacetError> {
        significance_table_within(
            &self.framework,
            self.semantics,
            self.constraints(),
            self.facets(),
            deadline,
        )
    }

    pub fn state(&self) -> SessionState {
        self.state_within(None).expect("no deadline")
    }

    pub fn state_within(&self, deadline: Option<Instant>) -> Result<SessionState, FacetError> {
        Ok(SessionState {
            history: self.history.clone(),
            facets: self.facets().clone(),
            significance: self.significance_within(deadline)?,
        })
    }

    /// One extension consistent with the current approvals.
    pub fn sample_extension(
        &self,
        deadline: Option<Instant>,
    ) -> Result<Option<ArgumentSet>, DeadlineExceeded> {
        Solver::new(&self.framework, self.semantics)
            .with_deadline(deadline)
            .find_witness(self.constraints())
    }
}
