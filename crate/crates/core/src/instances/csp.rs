use std::collections::BTreeMap;

use super::InstanceError;
use crate::graph::Graph;

/// A binary relation between the value indices of two variables, stored as
/// a dense row-major bit matrix.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Relation {
    rows: usize,
    cols: usize,
    bits: Vec<u64>,
}

impl Relation {
    pub fn empty(rows: usize, cols: usize) -> Self {
        Self { rows, cols, bits: vec![0; (rows * cols).div_ceil(64)] }
    }

    pub fn full(rows: usize, cols: usize) -> Self {
        let mut r = Self::empty(rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                r.insert(i, j);
            }
        }
        r
    }

    pub fn from_pairs(rows: usize, cols: usize, pairs: impl IntoIterator<Item = (usize, usize)>) -> Self {
        let mut r = Self::empty(rows, cols);
        for (i, j) in pairs {
            r.insert(i, j);
        }
        r
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn insert(&mut self, i: usize, j: usize) {
        assert!(i < self.rows && j < self.cols, "relation pair outside the domains");
        let k = i * self.cols + j;
        self.bits[k / 64] |= 1 << (k % 64);
    }

    pub fn contains(&self, i: usize, j: usize) -> bool {
        if i >= self.rows || j >= self.cols {
            return false;
        }
        let k = i * self.cols + j;
        self.bits[k / 64] >> (k % 64) & 1 == 1
    }

    pub fn len(&self) -> usize {
        self.bits.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.iter().all(|&w| w == 0)
    }

    /// Pairs in row-major order.
    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.rows).flat_map(move |i| (0..self.cols).filter(move |&j| self.contains(i, j)).map(move |j| (i, j)))
    }

    pub fn transpose(&self) -> Self {
        Self::from_pairs(self.cols, self.rows, self.pairs().map(|(i, j)| (j, i)))
    }

    pub fn intersect_with(&mut self, other: &Relation) {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        for (a, b) in self.bits.iter_mut().zip(&other.bits) {
            *a &= b;
        }
    }

    /// Keeps the listed rows and columns, renumbered in the given order.
    fn restrict(&self, keep_rows: &[usize], keep_cols: &[usize]) -> Self {
        let mut r = Self::empty(keep_rows.len(), keep_cols.len());
        for (ni, &i) in keep_rows.iter().enumerate() {
            for (nj, &j) in keep_cols.iter().enumerate() {
                if self.contains(i, j) {
                    r.insert(ni, nj);
                }
            }
        }
        r
    }
}

/// A binary CSP: variables with finite domains of opaque value tokens and at
/// most one relation per unordered variable pair.
///
/// Relations are stored under the key `(a, b)` with `a < b`, rows indexed by
/// values of `a`. Adding a second constraint on a pair intersects it with the
/// first.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct BinaryCsp {
    domains: Vec<Vec<String>>,
    constraints: BTreeMap<(usize, usize), Relation>,
}

impl BinaryCsp {
    pub fn new(domains: Vec<Vec<String>>) -> Self {
        Self { domains, constraints: BTreeMap::new() }
    }

    pub fn variable_count(&self) -> usize {
        self.domains.len()
    }

    pub fn domain(&self, var: usize) -> &[String] {
        &self.domains[var]
    }

    pub fn domains(&self) -> &[Vec<String>] {
        &self.domains
    }

    pub fn constraints(&self) -> &BTreeMap<(usize, usize), Relation> {
        &self.constraints
    }

    /// Adds `relation` between `a` (rows) and `b` (columns), intersecting with
    /// any relation already present on the pair.
    pub fn add_constraint(&mut self, a: usize, b: usize, relation: Relation) -> Result<(), InstanceError> {
        let n = self.domains.len();
        if a >= n {
            return Err(InstanceError::VariableOutOfRange(a));
        }
        if b >= n {
            return Err(InstanceError::VariableOutOfRange(b));
        }
        if a == b {
            return Err(InstanceError::UnaryConstraint(a));
        }
        if relation.rows() != self.domains[a].len() || relation.cols() != self.domains[b].len() {
            return Err(InstanceError::RelationOutOfDomain((a, b), relation.rows(), relation.cols()));
        }
        let (key, rel) = if a < b { ((a, b), relation) } else { ((b, a), relation.transpose()) };
        match self.constraints.get_mut(&key) {
            Some(existing) => existing.intersect_with(&rel),
            None => {
                self.constraints.insert(key, rel);
            }
        }
        Ok(())
    }

    /// Relation on `(a, b)` oriented with rows indexed by values of `a`.
    pub fn relation(&self, a: usize, b: usize) -> Option<Relation> {
        if a < b {
            self.constraints.get(&(a, b)).cloned()
        } else {
            self.constraints.get(&(b, a)).map(Relation::transpose)
        }
    }

    /// Whether assigning value `i` to `a` and `j` to `b` satisfies the constraint on the pair.
    pub fn allows(&self, a: usize, i: usize, b: usize, j: usize) -> bool {
        if a < b {
            self.constraints.get(&(a, b)).is_none_or(|r| r.contains(i, j))
        } else {
            self.constraints.get(&(b, a)).is_none_or(|r| r.contains(j, i))
        }
    }

    /// Shrinks the domain of `var` to the listed value indices (in that order)
    /// and re-projects every relation touching `var`.
    pub fn restrict_domain(&mut self, var: usize, keep: &[usize]) {
        let new_domain: Vec<String> = keep.iter().map(|&i| self.domains[var][i].clone()).collect();
        for (&(a, b), rel) in self.constraints.iter_mut() {
            if a == var {
                let cols: Vec<usize> = (0..rel.cols()).collect();
                *rel = rel.restrict(keep, &cols);
            } else if b == var {
                let rows: Vec<usize> = (0..rel.rows()).collect();
                *rel = rel.restrict(&rows, keep);
            }
        }
        self.domains[var] = new_domain;
    }

    pub fn is_satisfied(&self, valuation: &[usize]) -> bool {
        valuation.len() == self.domains.len()
            && valuation.iter().zip(&self.domains).all(|(&v, d)| v < d.len())
            && self.constraints.iter().all(|(&(a, b), r)| r.contains(valuation[a], valuation[b]))
    }

    pub fn constraint_graph(&self) -> Graph {
        Graph::new(self.domains.len(), self.constraints.keys().copied()).expect("constraint keys are valid edges")
    }
}
