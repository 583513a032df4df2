use serde::{Deserialize, Serialize};

use crate::error::CnfError;

/// A CNF formula over variables `1..=num_vars`, literals in DIMACS style.
///
/// Clauses are never empty and never contain a variable in both
/// polarities.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CnfFormula {
    num_vars: usize,
    clauses: Vec<Vec<i32>>,
}

impl CnfFormula {
    pub fn new(num_vars: usize, clauses: Vec<Vec<i32>>) -> Result<Self, CnfError> {
        for (i, clause) in clauses.iter().enumerate() {
            if clause.is_empty() {
                return Err(CnfError::EmptyClause(i + 1));
            }
            for &lit in clause {
                if lit == 0 || lit.unsigned_abs() as usize > num_vars {
                    return Err(CnfError::LiteralOutOfRange {
                        literal: lit.into(),
                        vars: num_vars,
                    });
                }
                if clause.contains(&-lit) {
                    return Err(CnfError::TautologicalClause(i + 1));
                }
            }
        }
        Ok(CnfFormula { num_vars, clauses })
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn clauses(&self) -> &[Vec<i32>] {
        &self.clauses
    }

    /// Evaluates the formula; `assignment[v - 1]` is the value of variable `v`.
    pub fn eval(&self, assignment: &[bool]) -> bool {
        self.clauses.iter().all(|c| {
            c.iter()
                .any(|&l| assignment[l.unsigned_abs() as usize - 1] == (l > 0))
        })
    }

    /// Satisfiability by sweeping all assignments. Only meant for small
    /// formulas.
    pub fn is_satisfiable(&self) -> bool {
        assert!(
            self.num_vars < 32,
            "assignment sweep is limited to 31 variables"
        );
        (0u64..1 << self.num_vars).any(|mask| {
            let assignment: Vec<bool> = (0..self.num_vars).map(|i| mask >> i & 1 == 1).collect();
            self.eval(&assignment)
        })
    }
}

/// A formula `forall X exists Y . matrix`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct QbfForallExists {
    universal: Vec<usize>,
    existential: Vec<usize>,
    matrix: CnfFormula,
}

impl QbfForallExists {
    /// Every matrix variable must be quantified exactly once.
    pub fn new(
        universal: Vec<usize>,
        existential: Vec<usize>,
        matrix: CnfFormula,
    ) -> Result<Self, CnfError> {
        let mut seen = vec![false; matrix.num_vars() + 1];
        for &v in universal.iter().chain(&existential) {
            if v == 0 || v > matrix.num_vars() {
                return Err(CnfError::LiteralOutOfRange {
                    literal: v as i64,
                    vars: matrix.num_vars(),
                });
            }
            if std::mem::replace(&mut seen[v], true) {
                return Err(CnfError::Quantification(v));
            }
        }
        if let Some(v) = (1..=matrix.num_vars()).find(|&v| !seen[v]) {
            return Err(CnfError::Quantification(v));
        }
        Ok(QbfForallExists {
            universal,
            existential,
            matrix,
        })
    }

    pub fn universal(&self) -> &[usize] {
        &self.universal
    }

    pub fn existential(&self) -> &[usize] {
        &self.existential
    }

    pub fn matrix(&self) -> &CnfFormula {
        &self.matrix
    }

    /// Truth value by exhaustive assignment sweep.
    pub fn evaluate(&self) -> bool {
        let n = self.matrix.num_vars();
        assert!(n < 32, "assignment sweep is limited to 31 variables");
        let mut assignment = vec![false; n];
        (0u64..1 << self.universal.len()).all(|umask| {
            for (i, &v) in self.universal.iter().enumerate() {
                assignment[v - 1] = umask >> i & 1 == 1;
            }
            (0u64..1 << self.existential.len()).any(|emask| {
                for (i, &v) in self.existential.iter().enumerate() {
                    assignment[v - 1] = emask >> i & 1 == 1;
                }
                self.matrix.eval(&assignment)
            })
        })
    }
}

/// Adds a fresh universal variable `g` and weakens every clause `C` to
/// `-g | C`. The result has the same truth value, and its matrix is
/// satisfiable (set `g` false).
pub fn guard_satisfiable(qbf: &QbfForallExists) -> QbfForallExists {
    let g = qbf.matrix.num_vars() + 1;
    let clauses = qbf
        .matrix
        .clauses()
        .iter()
        .map(|c| {
            let mut c = c.clone();
            c.insert(0, -(g as i32));
            c
        })
        .collect();
    let mut universal = qbf.universal.clone();
    universal.push(g);
    QbfForallExists {
        universal,
        existential: qbf.existential.clone(),
        matrix: CnfFormula {
            num_vars: g,
            clauses,
        },
    }
}

struct Header {
    vars: usize,
    clauses: usize,
}

fn parse_header(line_no: usize, line: &str) -> Result<Header, CnfError> {
    let tokens: Vec<&str> = line.split_whitespace().collect();
    let err = |m: &str| CnfError::Header {
        line: line_no,
        message: m.to_string(),
    };
    match tokens.as_slice() {
        ["p", "cnf", v, c] => Ok(Header {
            vars: v.parse().map_err(|_| err("bad variable count"))?,
            clauses: c.parse().map_err(|_| err("bad clause count"))?,
        }),
        _ => Err(err("expected 'p cnf <vars> <clauses>'")),
    }
}

fn parse_numbers(line_no: usize, line: &str) -> Result<Vec<i64>, CnfError> {
    line.split_whitespace()
        .map(|t| {
            t.parse::<i64>().map_err(|_| CnfError::Malformed {
                line: line_no,
                message: format!("bad literal '{t}'"),
            })
        })
        .collect()
}

enum Prefix {
    Forall(Vec<usize>),
    Exists(Vec<usize>),
}

fn parse_cnf_body(
    text: &str,
    mut on_prefix: Option<&mut dyn FnMut(usize, Prefix) -> Result<(), CnfError>>,
) -> Result<CnfFormula, CnfError> {
    let mut header: Option<Header> = None;
    let mut clauses = Vec::new();
    let mut current: Vec<i32> = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('c') || line.starts_with('%') {
            continue;
        }
        let Some(h) = header.as_ref() else {
            header = Some(parse_header(line_no, line)?);
            continue;
        };
        if line.starts_with('p') {
            return Err(CnfError::Header {
                line: line_no,
                message: "duplicate header".into(),
            });
        }
        if let Some(rest) = line.strip_prefix('a').or_else(|| line.strip_prefix('e')) {
            let Some(cb) = on_prefix.as_mut() else {
                return Err(CnfError::UnsupportedPrefix(format!(
                    "line {line_no}: quantifier in plain CNF"
                )));
            };
            let nums = parse_numbers(line_no, rest)?;
            if nums.last() != Some(&0) {
                return Err(CnfError::Malformed {
                    line: line_no,
                    message: "quantifier line must end with 0".into(),
                });
            }
            let mut vars = Vec::new();
            for &v in &nums[..nums.len() - 1] {
                if v <= 0 || v as usize > h.vars {
                    return Err(CnfError::LiteralOutOfRange {
                        literal: v,
                        vars: h.vars,
                    });
                }
                vars.push(v as usize);
            }
            let prefix = if line.starts_with('a') {
                Prefix::Forall(vars)
            } else {
                Prefix::Exists(vars)
            };
            cb(line_no, prefix)?;
            continue;
        }
        for lit in parse_numbers(line_no, line)? {
            if lit == 0 {
                clauses.push(std::mem::take(&mut current));
            } else if lit.unsigned_abs() as usize > h.vars {
                return Err(CnfError::LiteralOutOfRange {
                    literal: lit,
                    vars: h.vars,
                });
            } else {
                current.push(lit as i32);
            }
        }
    }
    let h = header.ok_or(CnfError::Header {
        line: 0,
        message: "missing header".into(),
    })?;
    if !current.is_empty() {
        clauses.push(current);
    }
    if clauses.len() != h.clauses {
        return Err(CnfError::ClauseCount {
            expected: h.clauses,
            found: clauses.len(),
        });
    }
    CnfFormula::new(h.vars, clauses)
}

/// Parses a DIMACS CNF file.
pub fn parse_dimacs(text: &str) -> Result<CnfFormula, CnfError> {
    parse_cnf_body(text, None)
}

/// Parses a QDIMACS file whose prefix is one `a` line followed by one `e`
/// line. Either line may be omitted when its block is empty.
pub fn parse_qdimacs_ae(text: &str) -> Result<QbfForallExists, CnfError> {
    let mut universal: Option<Vec<usize>> = None;
    let mut existential: Option<Vec<usize>> = None;
    let mut on_prefix = |line: usize, p: Prefix| {
        match p {
            Prefix::Forall(vars) if universal.is_none() && existential.is_none() => {
                universal = Some(vars)
            }
            Prefix::Exists(vars) if existential.is_none() => existential = Some(vars),
            _ => {
                return Err(CnfError::UnsupportedPrefix(format!(
                    "line {line}: only one 'a' block followed by one 'e' block is supported"
                )))
            }
        }
        Ok(())
    };
    let matrix = parse_cnf_body(text, Some(&mut on_prefix))?;
    QbfForallExists::new(
        universal.unwrap_or_default(),
        existential.unwrap_or_default(),
        matrix,
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dimacs_examples() {
        let f = parse_dimacs("p cnf 1 1\n1 0").unwrap();
        assert_eq!((f.num_vars(), f.clauses()), (1, &[vec![1]][..]));
        let f = parse_dimacs("p cnf 1 2\n1 0\n-1 0").unwrap();
        assert_eq!(f.clauses(), &[vec![1], vec![-1]]);
        assert!(!f.is_satisfiable());
        let f = parse_dimacs("c comment\np cnf 2 2\n1 2 0\n-1 -2 0\n").unwrap();
        assert_eq!((f.num_vars(), f.clauses().len()), (2, 2));
        assert!(f.is_satisfiable());
        // clauses may span lines
        let f = parse_dimacs("p cnf 3 1\n1 2\n3 0\n").unwrap();
        assert_eq!(f.clauses(), &[vec![1, 2, 3]]);
    }

    #[test]
    fn dimacs_errors() {
        assert!(matches!(
            parse_dimacs("p dnf 1 1\n1 0"),
            Err(CnfError::Header { .. })
        ));
        assert!(matches!(parse_dimacs("1 0"), Err(CnfError::Header { .. })));
        assert!(matches!(
            parse_dimacs("p cnf 1 1\n2 0"),
            Err(CnfError::LiteralOutOfRange { literal: 2, .. })
        ));
        assert!(matches!(
            parse_dimacs("p cnf 1 2\n1 0"),
            Err(CnfError::ClauseCount { .. })
        ));
        assert!(matches!(
            parse_dimacs("p cnf 1 1\n1 -1 0"),
            Err(CnfError::TautologicalClause(1))
        ));
        assert!(matches!(
            parse_dimacs("p cnf 1 1\n0"),
            Err(CnfError::EmptyClause(1))
        ));
        assert!(matches!(
            parse_dimacs("p cnf 1 1\nx 0"),
            Err(CnfError::Malformed { .. })
        ));
        assert!(matches!(
            parse_dimacs("p cnf 2 1\na 1 0\n1 2 0"),
            Err(CnfError::UnsupportedPrefix(_))
        ));
    }

    #[test]
    fn qdimacs_prefix() {
        let q = parse_qdimacs_ae("p cnf 2 2\na 1 0\ne 2 0\n1 2 0\n-1 -2 0\n").unwrap();
        assert_eq!((q.universal(), q.existential()), (&[1][..], &[2][..]));
        assert!(q.evaluate());
        assert!(matches!(
            parse_qdimacs_ae("p cnf 2 1\ne 2 0\na 1 0\n1 2 0\n"),
            Err(CnfError::UnsupportedPrefix(_))
        ));
        assert!(matches!(
            parse_qdimacs_ae("p cnf 2 1\na 1 0\n1 2 0\n"),
            Err(CnfError::Quantification(2))
        ));
        assert!(matches!(
            parse_qdimacs_ae("p cnf 2 1\na 1 0\ne 1 2 0\n1 2 0\n"),
            Err(CnfError::Quantification(1))
        ));
    }

    #[test]
    fn qbf_evaluation() {
        // forall y exists z . (y | z) & (-y | -z): true
        let m = CnfFormula::new(2, vec![vec![1, 2], vec![-1, -2]]).unwrap();
        assert!(QbfForallExists::new(vec![1], vec![2], m)
            .unwrap()
            .evaluate());
        // forall y exists z . y & z: false
        let m = CnfFormula::new(2, vec![vec![1], vec![2]]).unwrap();
        assert!(!QbfForallExists::new(vec![1], vec![2], m)
            .unwrap()
            .evaluate());
    }

    #[test]
    fn guard_keeps_truth_and_makes_matrix_satisfiable() {
        let m = CnfFormula::new(2, vec![vec![1], vec![-1], vec![2]]).unwrap();
        let q = QbfForallExists::new(vec![1], vec![2], m).unwrap();
        assert!(!q.matrix().is_satisfiable());
        let g = guard_satisfiable(&q);
        assert!(g.matrix().is_satisfiable());
        assert_eq!(g.evaluate(), q.evaluate());
        assert_eq!(g.universal(), &[1, 3]);
        assert!(g.matrix().clauses().iter().all(|c| c[0] == -3));
    }
}
