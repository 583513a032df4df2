//! Constructions from the complexity analysis of facet problems, as
//! instance generators, plus formula parsing and random fixtures.

mod cnf;
mod gadgets;
mod random;
mod translate;

pub use cnf::{guard_satisfiable, parse_dimacs, parse_qdimacs_ae, CnfFormula, QbfForallExists};
pub use gadgets::{copy_gadget, duplicate_argument};
pub use random::{random_af, random_cnf};
pub use translate::{
    expected_translation_facets, qbf_reduction, satunsat_instance, standard_translation,
    SatUnsatInstance,
};
