//! Facet reasoning over abstract argumentation frameworks.
//!
//! The crate covers extension enumeration under eight semantics,
//! credulous and skeptical consequences, facets (arguments that are in
//! some but not all extensions), the significance of approving or
//! rejecting a facet, step-wise navigation sessions, and generators for
//! the reduction gadgets used to study facet problems.
//!
//! ```
//! use argfacets::{fixtures, facet_report, Constraints, Semantics};
//!
//! let af = fixtures::ex1();
//! let report = facet_report(&af, Semantics::Stab, &Constraints::none());
//! assert_eq!(af.sorted_names_of(&report.facets), ["b", "m", "p", "s", "t", "w"]);
//! ```

pub mod error;
pub mod facets;
pub mod fixtures;
pub mod formats;
pub mod framework;
pub mod reductions;
pub mod search;
pub mod semantics;
pub mod session;
pub mod set;

pub use error::{
    CnfError, ConstraintError, DeadlineExceeded, FacetError, FrameworkError, OracleError,
    ParseError,
};
pub use facets::{
    count_facets, facet_report, facet_report_within, has_at_least, has_at_most, has_exactly,
    is_facet, significance, significance_table, FacetReport, Literal, Polarity, SignificanceEntry,
};
pub use formats::{parse_framework, render_framework, Format};
pub use framework::{ArgumentationFramework, FrameworkBuilder};
pub use num_rational::Ratio;
pub use search::{
    brute_force, credulous_set, enumerate, exists_extension, skeptical_set, Budget, Constraints,
    EnumerationResult, Solver,
};
pub use semantics::{defended, range, satisfies, Semantics};
pub use session::{NavigationSession, SessionState};
pub use set::ArgumentSet;
