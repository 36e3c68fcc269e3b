use super::InstanceError;

/// A CNF formula with at most three literals per clause.
///
/// Literals are nonzero signed integers with magnitude in `1..=N`, as in
/// DIMACS. Clauses are nonempty and never mention a variable twice.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CnfFormula {
    variables: usize,
    clauses: Vec<Vec<i32>>,
}

impl CnfFormula {
    pub fn new(variables: usize, clauses: Vec<Vec<i32>>) -> Result<Self, InstanceError> {
        for (ci, clause) in clauses.iter().enumerate() {
            if clause.is_empty() {
                return Err(InstanceError::EmptyClause(ci));
            }
            if clause.len() > 3 {
                return Err(InstanceError::ClauseTooLong(ci));
            }
            for (j, &lit) in clause.iter().enumerate() {
                let var = lit.unsigned_abs() as usize;
                if lit == 0 || var > variables {
                    return Err(InstanceError::LiteralOutOfRange(ci, lit as i64));
                }
                if clause[..j].iter().any(|&l| l.unsigned_abs() as usize == var) {
                    return Err(InstanceError::RepeatedVariable(ci));
                }
            }
        }
        Ok(Self { variables, clauses })
    }

    /// Number of variables `N`.
    pub fn variables(&self) -> usize {
        self.variables
    }

    pub fn clauses(&self) -> &[Vec<i32>] {
        &self.clauses
    }

    pub fn satisfied_by(&self, assignment: &[bool]) -> bool {
        self.clauses.iter().all(|c| {
            c.iter()
                .any(|&lit| assignment[lit.unsigned_abs() as usize - 1] == (lit > 0))
        })
    }
}
