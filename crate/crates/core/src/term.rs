//! Terms over the ring-like multialgebraic signature and valuations of
//! their variables.
//!
//! Variables are dense integer indices so that exhaustive quantifier loops
//! can use plain arrays. The occurring-variable set of every node is
//! computed at construction and cached in the node.

use crate::error::EvalError;
use crate::subset::Elem;
use serde::Serialize;
use std::fmt;

/// Variable indices live below this bound (one bit each in a [`VarSet`]).
pub const MAX_VARS: u32 = 64;

/// A set of variable indices, as a bit mask.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default, Serialize)]
pub struct VarSet(pub u64);

impl VarSet {
    pub const EMPTY: VarSet = VarSet(0);

    pub fn single(i: u32) -> VarSet {
        assert!(i < MAX_VARS, "variable index {i} out of range");
        VarSet(1 << i)
    }

    pub fn union(self, other: VarSet) -> VarSet {
        VarSet(self.0 | other.0)
    }

    pub fn without(self, i: u32) -> VarSet {
        VarSet(self.0 & !(1 << i))
    }

    pub fn contains(self, i: u32) -> bool {
        i < MAX_VARS && self.0 & (1 << i) != 0
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn is_subset_of(self, other: VarSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    /// Ascending indices.
    pub fn iter(self) -> impl Iterator<Item = u32> {
        (0..MAX_VARS).filter(move |i| self.0 & (1 << i) != 0)
    }

    /// Smallest index not in the set (for fresh-variable generation).
    pub fn fresh_above(self) -> u32 {
        64 - self.0.leading_zeros()
    }
}

impl fmt::Debug for VarSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, i) in self.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "x{i}")?;
        }
        write!(f, "}}")
    }
}

/// One node of a term.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum TermNode {
    /// Variable `x_i`.
    Var(u32),
    /// The strict constant `0`.
    Zero,
    /// The strict constant `1`.
    One,
    /// A named carrier element, from the diagram language of a fixed
    /// structure (every element added as a strict constant symbol).
    Lit(Elem),
    /// Strict unary negation.
    Neg(Box<Term>),
    /// Multivalued addition.
    Add(Box<Term>, Box<Term>),
    /// Multiplication (strict in 1-rings, possibly multivalued in 2-rings).
    Mul(Box<Term>, Box<Term>),
}

/// A term with its cached occurring-variable set.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Term {
    node: TermNode,
    vars: VarSet,
}

impl Term {
    pub fn var(i: u32) -> Term {
        Term { vars: VarSet::single(i), node: TermNode::Var(i) }
    }

    pub fn zero() -> Term {
        Term { vars: VarSet::EMPTY, node: TermNode::Zero }
    }

    pub fn one() -> Term {
        Term { vars: VarSet::EMPTY, node: TermNode::One }
    }

    pub fn lit(e: Elem) -> Term {
        Term { vars: VarSet::EMPTY, node: TermNode::Lit(e) }
    }

    pub fn neg(t: Term) -> Term {
        Term { vars: t.vars, node: TermNode::Neg(Box::new(t)) }
    }

    pub fn add(a: Term, b: Term) -> Term {
        Term { vars: a.vars.union(b.vars), node: TermNode::Add(Box::new(a), Box::new(b)) }
    }

    pub fn mul(a: Term, b: Term) -> Term {
        Term { vars: a.vars.union(b.vars), node: TermNode::Mul(Box::new(a), Box::new(b)) }
    }

    /// `a - b`, sugar for `a + (-b)`.
    pub fn sub(a: Term, b: Term) -> Term {
        Term::add(a, Term::neg(b))
    }

    /// Left-associated sum of one or more summands.
    pub fn sum(mut parts: Vec<Term>) -> Term {
        assert!(!parts.is_empty());
        let mut acc = parts.remove(0);
        for p in parts {
            acc = Term::add(acc, p);
        }
        acc
    }

    /// Left-associated product of one or more factors.
    pub fn product(mut parts: Vec<Term>) -> Term {
        assert!(!parts.is_empty());
        let mut acc = parts.remove(0);
        for p in parts {
            acc = Term::mul(acc, p);
        }
        acc
    }

    pub fn node(&self) -> &TermNode {
        &self.node
    }

    /// The (cached) set of variables occurring in the term.
    pub fn vars(&self) -> VarSet {
        self.vars
    }

    /// A term is strict when it contains no multivalued operation, so its
    /// interpretation is a singleton at every valuation. Addition is the
    /// only always-multivalued symbol here; multiplication counts as strict
    /// exactly when the ambient structure interprets it strictly.
    pub fn is_strict(&self, mul_strict: bool) -> bool {
        match &self.node {
            TermNode::Var(_) | TermNode::Zero | TermNode::One | TermNode::Lit(_) => true,
            TermNode::Neg(t) => t.is_strict(mul_strict),
            TermNode::Add(_, _) => false,
            TermNode::Mul(a, b) => mul_strict && a.is_strict(mul_strict) && b.is_strict(mul_strict),
        }
    }
}

impl fmt::Debug for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.node {
            TermNode::Var(i) => write!(f, "x{i}"),
            TermNode::Zero => write!(f, "0"),
            TermNode::One => write!(f, "1"),
            TermNode::Lit(e) => write!(f, "#{e}"),
            TermNode::Neg(t) => write!(f, "-({t:?})"),
            TermNode::Add(a, b) => write!(f, "({a:?} + {b:?})"),
            TermNode::Mul(a, b) => write!(f, "({a:?} * {b:?})"),
        }
    }
}

/// A partial map from variable indices to carrier elements.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Valuation {
    slots: Vec<Option<Elem>>,
}

impl Valuation {
    pub fn new() -> Valuation {
        Valuation { slots: Vec::new() }
    }

    /// Binds `x_0, x_1, ...` to the listed elements.
    pub fn from_elems(elems: &[Elem]) -> Valuation {
        Valuation { slots: elems.iter().map(|&e| Some(e)).collect() }
    }

    pub fn get(&self, i: u32) -> Result<Elem, EvalError> {
        self.slots
            .get(i as usize)
            .copied()
            .flatten()
            .ok_or(EvalError::UnboundVariable(i))
    }

    /// Binds `x_i`, returning the previous binding for restore.
    pub fn bind(&mut self, i: u32, e: Elem) -> Option<Elem> {
        let idx = i as usize;
        if idx >= self.slots.len() {
            self.slots.resize(idx + 1, None);
        }
        std::mem::replace(&mut self.slots[idx], Some(e))
    }

    pub fn restore(&mut self, i: u32, prev: Option<Elem>) {
        self.slots[i as usize] = prev;
    }

    pub fn covers(&self, vars: VarSet) -> bool {
        vars.iter().all(|i| self.get(i).is_ok())
    }
}

/// Runs `f` on every assignment of carrier elements to the variables in
/// `vars`, in ascending lexicographic order (lowest index varies slowest).
/// Stops early and returns the failing valuation when `f` returns `false`.
pub fn for_all_valuations(
    n: usize,
    vars: VarSet,
    f: &mut dyn FnMut(&Valuation) -> bool,
) -> Option<Valuation> {
    let idx: Vec<u32> = vars.iter().collect();
    let mut v = Valuation::new();
    fn rec(
        n: usize,
        idx: &[u32],
        pos: usize,
        v: &mut Valuation,
        f: &mut dyn FnMut(&Valuation) -> bool,
    ) -> bool {
        if pos == idx.len() {
            return f(v);
        }
        for e in 0..n {
            let prev = v.bind(idx[pos], e);
            let ok = rec(n, idx, pos + 1, v, f);
            if !ok {
                return false;
            }
            v.restore(idx[pos], prev);
        }
        true
    }
    if rec(n, &idx, 0, &mut v, f) {
        None
    } else {
        Some(v)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn vars_are_cached_through_constructors() {
        let t = Term::mul(Term::add(Term::var(0), Term::var(2)), Term::neg(Term::var(0)));
        assert_eq!(t.vars().iter().collect::<Vec<_>>(), vec![0, 2]);
        assert_eq!(t.vars().fresh_above(), 3);
    }

    #[test]
    fn strictness_depends_on_multiplication() {
        let prod = Term::mul(Term::var(0), Term::neg(Term::one()));
        assert!(prod.is_strict(true));
        assert!(!prod.is_strict(false));
        assert!(!Term::add(Term::var(0), Term::one()).is_strict(true));
    }

    #[test]
    fn valuation_bind_and_restore() {
        let mut v = Valuation::from_elems(&[1]);
        assert_eq!(v.get(0), Ok(1));
        assert_eq!(v.get(3), Err(EvalError::UnboundVariable(3)));
        let prev = v.bind(0, 2);
        assert_eq!(v.get(0), Ok(2));
        v.restore(0, prev);
        assert_eq!(v.get(0), Ok(1));
    }

    #[test]
    fn valuation_enumeration_order_is_lexicographic() {
        let mut seen = Vec::new();
        let vars = VarSet::single(0).union(VarSet::single(1));
        for_all_valuations(2, vars, &mut |v| {
            seen.push((v.get(0).unwrap(), v.get(1).unwrap()));
            true
        });
        assert_eq!(seen, vec![(0, 0), (0, 1), (1, 0), (1, 1)]);
    }
}
