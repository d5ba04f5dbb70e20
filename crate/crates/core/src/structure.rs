//! Finite multirings: a finite carrier with a set-valued addition table,
//! strict negation, a (possibly set-valued) multiplication table and
//! distinguished elements 0 and 1.
//!
//! Carrier elements are the canonical integers `0..n`; human-facing names
//! live in a display table. Construction validates only well-formedness
//! (nonempty cells, index ranges, strictness); whether the tables satisfy
//! any axiom profile is the job of [`crate::axioms::check_axioms`].

use crate::error::StructureError;
use crate::signature::Signature;
use crate::subset::{Elem, Subset, MAX_CARRIER};
use std::fmt;

/// A square table of nonempty subsets, indexed by element pairs.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct OpTable {
    n: usize,
    cells: Vec<Subset>,
}

impl OpTable {
    pub fn from_cells(n: usize, cells: Vec<Subset>) -> OpTable {
        assert_eq!(cells.len(), n * n);
        OpTable { n, cells }
    }

    /// Builds the table cell-by-cell from a rule.
    pub fn from_fn(n: usize, mut f: impl FnMut(Elem, Elem) -> Subset) -> OpTable {
        let mut cells = Vec::with_capacity(n * n);
        for a in 0..n {
            for b in 0..n {
                cells.push(f(a, b));
            }
        }
        OpTable { n, cells }
    }

    pub fn get(&self, a: Elem, b: Elem) -> Subset {
        self.cells[a * self.n + b]
    }

    pub fn set(&mut self, a: Elem, b: Elem, s: Subset) {
        self.cells[a * self.n + b] = s;
    }

    pub fn is_strict(&self) -> bool {
        self.cells.iter().all(|c| c.is_singleton())
    }
}

/// A finite multiring / superring candidate.
#[derive(Clone, PartialEq, Eq)]
pub struct FiniteMultiring {
    name: String,
    names: Vec<String>,
    n: usize,
    zero: Elem,
    one: Elem,
    neg: Vec<Elem>,
    add: OpTable,
    mul: OpTable,
    mul_strict: bool,
}

impl FiniteMultiring {
    #[allow(clippy::too_many_arguments)]
    pub fn new(
        name: impl Into<String>,
        names: Vec<String>,
        zero: Elem,
        one: Elem,
        neg: Vec<Elem>,
        add: OpTable,
        mul: OpTable,
        mul_strict: bool,
    ) -> Result<FiniteMultiring, StructureError> {
        let n = names.len();
        if n == 0 || n > MAX_CARRIER {
            return Err(StructureError::CarrierSize(n));
        }
        if zero >= n {
            return Err(StructureError::BadElement(zero, n));
        }
        if one >= n {
            return Err(StructureError::BadElement(one, n));
        }
        if zero == one && n > 1 {
            return Err(StructureError::ZeroEqualsOne);
        }
        if neg.len() != n {
            return Err(StructureError::BadNameCount { expected: n, got: neg.len() });
        }
        for &e in &neg {
            if e >= n {
                return Err(StructureError::BadElement(e, n));
            }
        }
        for (table, strict) in [(&add, false), (&mul, mul_strict)] {
            for a in 0..n {
                for b in 0..n {
                    let cell = table.get(a, b);
                    if cell.carrier_size() != n {
                        return Err(StructureError::BadElement(a, n));
                    }
                    if strict && !cell.is_singleton() {
                        return Err(StructureError::NonStrictCell(a, b));
                    }
                }
            }
        }
        Ok(FiniteMultiring { name: name.into(), names, n, zero, one, neg, add, mul, mul_strict })
    }

    /// The one-element (trivial) ring: the only structure where 0 = 1.
    pub fn trivial() -> FiniteMultiring {
        let cell = Subset::singleton(1, 0);
        FiniteMultiring {
            name: "trivial".into(),
            names: vec!["0".into()],
            n: 1,
            zero: 0,
            one: 0,
            neg: vec![0],
            add: OpTable::from_fn(1, |_, _| cell),
            mul: OpTable::from_fn(1, |_, _| cell),
            mul_strict: true,
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn set_name(&mut self, name: impl Into<String>) {
        self.name = name.into();
    }

    pub fn carrier_size(&self) -> usize {
        self.n
    }

    pub fn zero(&self) -> Elem {
        self.zero
    }

    pub fn one(&self) -> Elem {
        self.one
    }

    pub fn neg(&self, a: Elem) -> Elem {
        self.neg[a]
    }

    pub fn add(&self, a: Elem, b: Elem) -> Subset {
        self.add.get(a, b)
    }

    pub fn mul(&self, a: Elem, b: Elem) -> Subset {
        self.mul.get(a, b)
    }

    /// The product in a structure with strict multiplication.
    pub fn mul_elem(&self, a: Elem, b: Elem) -> Elem {
        debug_assert!(self.mul_strict);
        self.mul.get(a, b).the_element().expect("strict multiplication cell")
    }

    pub fn mul_strict(&self) -> bool {
        self.mul_strict
    }

    pub fn add_table(&self) -> &OpTable {
        &self.add
    }

    pub fn mul_table(&self) -> &OpTable {
        &self.mul
    }

    pub fn signature(&self) -> Signature {
        Signature::ring(self.mul_strict)
    }

    pub fn display_name(&self, e: Elem) -> &str {
        &self.names[e]
    }

    pub fn display_names(&self) -> &[String] {
        &self.names
    }

    pub fn element_by_name(&self, name: &str) -> Option<Elem> {
        self.names.iter().position(|s| s == name)
    }

    /// The multiplicative inverse of `a`, if any: a `b` with `1 ∈ a·b`.
    pub fn inverse(&self, a: Elem) -> Option<Elem> {
        (0..self.n).find(|&b| self.mul(a, b).contains(self.one))
    }

    pub fn subset_names(&self, s: &Subset) -> Vec<String> {
        s.iter().map(|e| self.names[e].clone()).collect()
    }

    /// Returns a copy with one addition cell replaced. Used to probe the
    /// axiom checker with corrupted tables.
    pub fn with_add_cell(&self, a: Elem, b: Elem, cell: Subset) -> FiniteMultiring {
        let mut out = self.clone();
        out.add.set(a, b, cell);
        out.name = format!("{}*", self.name);
        out
    }

    /// Returns a copy with the negation of one element replaced.
    pub fn with_neg(&self, a: Elem, to: Elem) -> FiniteMultiring {
        let mut out = self.clone();
        out.neg[a] = to;
        out.name = format!("{}*", self.name);
        out
    }

    pub fn elements(&self) -> impl Iterator<Item = Elem> {
        0..self.n
    }
}

impl fmt::Debug for FiniteMultiring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FiniteMultiring({}, n={})", self.name, self.n)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_zero_equals_one_on_nontrivial_carrier() {
        let cell = Subset::singleton(2, 0);
        let t = OpTable::from_fn(2, |_, _| cell);
        let err = FiniteMultiring::new(
            "bad",
            vec!["a".into(), "b".into()],
            0,
            0,
            vec![0, 1],
            t.clone(),
            t,
            true,
        );
        assert_eq!(err.unwrap_err(), StructureError::ZeroEqualsOne);
    }

    #[test]
    fn rejects_non_singleton_strict_cells() {
        let wide = Subset::full(2);
        let narrow = Subset::singleton(2, 0);
        let add = OpTable::from_fn(2, |_, _| narrow);
        let mul = OpTable::from_fn(2, |_, _| wide);
        let err = FiniteMultiring::new(
            "bad",
            vec!["0".into(), "1".into()],
            0,
            1,
            vec![0, 1],
            add,
            mul,
            true,
        );
        assert!(matches!(err.unwrap_err(), StructureError::NonStrictCell(_, _)));
    }

    #[test]
    fn trivial_ring_is_allowed() {
        let t = FiniteMultiring::trivial();
        assert_eq!(t.zero(), t.one());
        assert_eq!(t.carrier_size(), 1);
    }
}
