//! First-order formulas over containment atoms `t1 ⊑ t2`.
//!
//! Strong equality `t1 =s t2` is sugar for `(t1 ⊑ t2) ∧ (t2 ⊑ t1)` and is
//! expanded at construction time; the satisfaction core only ever sees the
//! nodes below. Free-variable sets are cached per node with correct
//! shadowing under quantifiers.

use crate::term::{Term, VarSet};
use std::fmt;

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum FormulaNode {
    /// `t1 ⊑ t2`: the interpretation of `t1` is included in that of `t2`.
    Atom(Term, Term),
    Not(Box<Formula>),
    And(Box<Formula>, Box<Formula>),
    Or(Box<Formula>, Box<Formula>),
    Implies(Box<Formula>, Box<Formula>),
    Iff(Box<Formula>, Box<Formula>),
    Forall(u32, Box<Formula>),
    Exists(u32, Box<Formula>),
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Formula {
    node: FormulaNode,
    fv: VarSet,
}

impl Formula {
    pub fn atom(t1: Term, t2: Term) -> Formula {
        Formula { fv: t1.vars().union(t2.vars()), node: FormulaNode::Atom(t1, t2) }
    }

    /// `t1 =s t2`, expanded to a conjunction of two containments.
    pub fn strong_eq(t1: Term, t2: Term) -> Formula {
        Formula::and(Formula::atom(t1.clone(), t2.clone()), Formula::atom(t2, t1))
    }

    /// `0 ⊑ t`, the membership shorthand `0 ∈ t`.
    pub fn zero_in(t: Term) -> Formula {
        Formula::atom(Term::zero(), t)
    }

    pub fn not(f: Formula) -> Formula {
        Formula { fv: f.fv, node: FormulaNode::Not(Box::new(f)) }
    }

    pub fn and(a: Formula, b: Formula) -> Formula {
        Formula { fv: a.fv.union(b.fv), node: FormulaNode::And(Box::new(a), Box::new(b)) }
    }

    pub fn or(a: Formula, b: Formula) -> Formula {
        Formula { fv: a.fv.union(b.fv), node: FormulaNode::Or(Box::new(a), Box::new(b)) }
    }

    pub fn implies(a: Formula, b: Formula) -> Formula {
        Formula { fv: a.fv.union(b.fv), node: FormulaNode::Implies(Box::new(a), Box::new(b)) }
    }

    pub fn iff(a: Formula, b: Formula) -> Formula {
        Formula { fv: a.fv.union(b.fv), node: FormulaNode::Iff(Box::new(a), Box::new(b)) }
    }

    pub fn forall(i: u32, body: Formula) -> Formula {
        Formula { fv: body.fv.without(i), node: FormulaNode::Forall(i, Box::new(body)) }
    }

    pub fn exists(i: u32, body: Formula) -> Formula {
        Formula { fv: body.fv.without(i), node: FormulaNode::Exists(i, Box::new(body)) }
    }

    pub fn node(&self) -> &FormulaNode {
        &self.node
    }

    /// The (cached) free variables.
    pub fn fv(&self) -> VarSet {
        self.fv
    }
}

impl fmt::Debug for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.node {
            FormulaNode::Atom(a, b) => write!(f, "{a:?} sub {b:?}"),
            FormulaNode::Not(x) => write!(f, "!({x:?})"),
            FormulaNode::And(a, b) => write!(f, "({a:?} & {b:?})"),
            FormulaNode::Or(a, b) => write!(f, "({a:?} | {b:?})"),
            FormulaNode::Implies(a, b) => write!(f, "({a:?} -> {b:?})"),
            FormulaNode::Iff(a, b) => write!(f, "({a:?} <-> {b:?})"),
            FormulaNode::Forall(i, x) => write!(f, "forall x{i}. ({x:?})"),
            FormulaNode::Exists(i, x) => write!(f, "exists x{i}. ({x:?})"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quantifiers_shadow_free_variables() {
        let f = Formula::exists(1, Formula::atom(Term::var(0), Term::add(Term::var(1), Term::var(2))));
        assert_eq!(f.fv().iter().collect::<Vec<_>>(), vec![0, 2]);
    }

    #[test]
    fn strong_eq_expands_to_two_atoms() {
        let f = Formula::strong_eq(Term::var(0), Term::one());
        match f.node() {
            FormulaNode::And(a, b) => {
                assert!(matches!(a.node(), FormulaNode::Atom(_, _)));
                assert!(matches!(b.node(), FormulaNode::Atom(_, _)));
            }
            other => panic!("expected conjunction, got {other:?}"),
        }
    }
}
