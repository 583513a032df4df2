//! Formula-to-framework constructions.
//!
//! Argument names: `phi` for the formula, `c<i>` for clause `i`, `x<v>`
//! and `nx<v>` for the two literals of variable `v`.

use serde::Serialize;

use crate::framework::{ArgumentationFramework, FrameworkBuilder};

use super::cnf::{CnfFormula, QbfForallExists};

fn literal_name(prefix: &str, lit: i32) -> String {
    if lit > 0 {
        format!("{prefix}x{lit}")
    } else {
        format!("{prefix}nx{}", -lit)
    }
}

/// Adds the standard translation of `phi` to `b`, names prefixed with
/// `prefix`. Returns the index of the formula argument.
fn add_translation(b: &mut FrameworkBuilder, phi: &CnfFormula, prefix: &str) -> usize {
    let formula = b.add_argument(format!("{prefix}phi")).expect("fresh name");
    let clauses: Vec<usize> = (1..=phi.clauses().len())
        .map(|i| b.add_argument(format!("{prefix}c{i}")).expect("fresh name"))
        .collect();
    for v in 1..=phi.num_vars() as i32 {
        let pos = b.add_argument(literal_name(prefix, v)).expect("fresh name");
        let neg = b
            .add_argument(literal_name(prefix, -v))
            .expect("fresh name");
        b.add_attack(pos, neg).unwrap();
        b.add_attack(neg, pos).unwrap();
    }
    for (clause, &c) in phi.clauses().iter().zip(&clauses) {
        b.add_attack(c, formula).unwrap();
        for &lit in clause {
            let l = b.index_of(&literal_name(prefix, lit)).unwrap();
            b.add_attack(l, c).unwrap();
        }
    }
    formula
}

/// The standard translation: arguments for the formula, each clause and
/// each literal. Clauses attack the formula, complementary literals attack
/// each other, and each literal attacks the clauses containing it.
///
/// Every variable in `1..=num_vars` gets its literal pair, whether or not
/// it occurs in a clause.
pub fn standard_translation(phi: &CnfFormula) -> ArgumentationFramework {
    let mut b = FrameworkBuilder::new();
    add_translation(&mut b, phi, "");
    b.build().expect("translation has at least one argument")
}

/// Facet count of the standard translation for adm, comp and stab:
/// every argument when `phi` is satisfiable, all but `phi` otherwise.
/// Undefined (`None`) for a formula without clauses, where the formula
/// argument is unattacked and the count depends on the semantics.
pub fn expected_translation_facets(phi: &CnfFormula) -> Option<usize> {
    if phi.clauses().is_empty() {
        return None;
    }
    let k = 2 * phi.num_vars() + phi.clauses().len() + 1;
    Some(if phi.is_satisfiable() { k } else { k - 1 })
}

/// A SAT-UNSAT instance together with its facet bookkeeping.
#[derive(Debug, Clone, Serialize)]
pub struct SatUnsatInstance {
    #[serde(skip)]
    pub framework: ArgumentationFramework,
    /// Facet count (adm, comp, stab) that characterizes a positive
    /// instance: all arguments except the formula argument of the second
    /// part.
    pub target_facets: usize,
    /// Facet count this particular instance has, from the satisfiability
    /// of both formulas. `None` when either formula has no clauses.
    pub expected_facets: Option<usize>,
    pub first_satisfiable: bool,
    pub second_satisfiable: bool,
}

impl SatUnsatInstance {
    pub fn is_positive(&self) -> bool {
        self.first_satisfiable && !self.second_satisfiable
    }
}

/// Disjoint union of the translation of `phi` with its formula argument
/// doubled (`l_phi`, `l_phi2`) and the translation of `psi`. Names are
/// prefixed `l_` and `r_`.
pub fn satunsat_instance(phi: &CnfFormula, psi: &CnfFormula) -> SatUnsatInstance {
    let mut b = FrameworkBuilder::new();
    let formula = add_translation(&mut b, phi, "l_");
    let twin = b.add_argument("l_phi2").expect("fresh name");
    b.add_attack(formula, twin).unwrap();
    b.add_attack(twin, formula).unwrap();
    for i in 1..=phi.clauses().len() {
        let c = b.index_of(&format!("l_c{i}")).unwrap();
        b.add_attack(c, twin).unwrap();
    }
    add_translation(&mut b, psi, "r_");
    let framework = b.build().expect("non-empty");

    let first_satisfiable = phi.is_satisfiable();
    let second_satisfiable = psi.is_satisfiable();
    let left = 2 * phi.num_vars() + phi.clauses().len() + 2;
    let right = 2 * psi.num_vars() + psi.clauses().len() + 1;
    let expected_facets = (!phi.clauses().is_empty() && !psi.clauses().is_empty()).then(|| {
        (if first_satisfiable { left } else { left - 2 })
            + if second_satisfiable { right } else { right - 1 }
    });
    SatUnsatInstance {
        target_facets: left + right - 1,
        expected_facets,
        first_satisfiable,
        second_satisfiable,
        framework,
    }
}

/// Framework whose `phi` argument is a preferred facet iff `qbf` is false,
/// provided the matrix is satisfiable (see
/// [`guard_satisfiable`](super::guard_satisfiable)).
///
/// On top of the translation structure it adds `nphi`, mutually attacking
/// `phi`, which attacks both literals of every existential variable.
/// `nphi` also attacks itself. Without that loop `nphi` defends itself
/// against `phi` and sits in a preferred extension without `phi` even when
/// the formula is true.
pub fn qbf_reduction(qbf: &QbfForallExists) -> ArgumentationFramework {
    let mut b = FrameworkBuilder::new();
    let formula = add_translation(&mut b, qbf.matrix(), "");
    let neg = b.add_argument("nphi").expect("fresh name");
    b.add_attack(formula, neg).unwrap();
    b.add_attack(neg, formula).unwrap();
    b.add_attack(neg, neg).unwrap();
    for &v in qbf.existential() {
        for lit in [v as i32, -(v as i32)] {
            let l = b.index_of(&literal_name("", lit)).unwrap();
            b.add_attack(neg, l).unwrap();
        }
    }
    b.build().expect("non-empty")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn attacks_by_name(af: &ArgumentationFramework) -> Vec<(String, String)> {
        let mut v: Vec<_> = af
            .attacks()
            .iter()
            .map(|&(f, t)| (af.name(f).to_string(), af.name(t).to_string()))
            .collect();
        v.sort();
        v
    }

    fn pairs(list: &[(&str, &str)]) -> Vec<(String, String)> {
        let mut v: Vec<_> = list
            .iter()
            .map(|(a, b)| (a.to_string(), b.to_string()))
            .collect();
        v.sort();
        v
    }

    #[test]
    fn translation_of_single_clause() {
        let af = standard_translation(&CnfFormula::new(1, vec![vec![1]]).unwrap());
        assert_eq!(af.names(), &["phi", "c1", "x1", "nx1"]);
        assert_eq!(
            attacks_by_name(&af),
            pairs(&[("c1", "phi"), ("x1", "nx1"), ("nx1", "x1"), ("x1", "c1")])
        );
    }

    #[test]
    fn translation_of_contradiction() {
        let af = standard_translation(&CnfFormula::new(1, vec![vec![1], vec![-1]]).unwrap());
        assert_eq!(af.len(), 5);
        assert_eq!(
            attacks_by_name(&af),
            pairs(&[
                ("c1", "phi"),
                ("c2", "phi"),
                ("x1", "nx1"),
                ("nx1", "x1"),
                ("x1", "c1"),
                ("nx1", "c2")
            ])
        );
    }

    #[test]
    fn satunsat_shape() {
        let x = CnfFormula::new(1, vec![vec![1]]).unwrap();
        let contradiction = CnfFormula::new(1, vec![vec![1], vec![-1]]).unwrap();
        let inst = satunsat_instance(&x, &contradiction);
        assert_eq!(inst.framework.len(), 10);
        assert!(inst.is_positive());
        assert_eq!(inst.target_facets, 9);
        assert_eq!(inst.expected_facets, Some(9));
        let af = &inst.framework;
        let (phi, twin, c1) = (
            af.index_of("l_phi").unwrap(),
            af.index_of("l_phi2").unwrap(),
            af.index_of("l_c1").unwrap(),
        );
        assert!(af.attacks_arg(phi, twin) && af.attacks_arg(twin, phi) && af.attacks_arg(c1, twin));
    }

    #[test]
    fn qbf_reduction_attacks() {
        // forall x1 exists x2 . (x1 | x2)
        let m = CnfFormula::new(2, vec![vec![1, 2]]).unwrap();
        let q = QbfForallExists::new(vec![1], vec![2], m).unwrap();
        let af = qbf_reduction(&q);
        assert_eq!(
            attacks_by_name(&af),
            pairs(&[
                ("c1", "phi"),
                ("x1", "c1"),
                ("x2", "c1"),
                ("x1", "nx1"),
                ("nx1", "x1"),
                ("x2", "nx2"),
                ("nx2", "x2"),
                ("phi", "nphi"),
                ("nphi", "phi"),
                ("nphi", "nphi"),
                ("nphi", "x2"),
                ("nphi", "nx2"),
            ])
        );
    }
}
