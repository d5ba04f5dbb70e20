//! Normalization of 2-ring terms into polynomial-expression form.
//!
//! Every term rewrites to a sum of products of (possibly negated) atoms.
//! Negations push to the leaves and cancel in pairs, both directions being
//! setwise identities in any multiring; distributing products over sums
//! uses only weak distributivity, so the guarantee is one-sided: the
//! original term's interpretation is contained in the normal form's at
//! every valuation, with equality in full 2-rings.
//!
//! Shared subterms are duplicated freely; the normal form trades
//! compactness for the containment guarantee.

use crate::term::{Term, TermNode};

/// An atom of a monomial: a variable or constant leaf.
#[derive(Clone, PartialEq, Eq, Debug)]
enum Atom {
    Var(u32),
    Zero,
    One,
    Lit(usize),
}

impl Atom {
    fn to_term(&self) -> Term {
        match self {
            Atom::Var(i) => Term::var(*i),
            Atom::Zero => Term::zero(),
            Atom::One => Term::one(),
            Atom::Lit(e) => Term::lit(*e),
        }
    }
}

/// A product of atoms with an overall sign.
#[derive(Clone, Debug)]
struct Monomial {
    negated: bool,
    factors: Vec<Atom>,
}

impl Monomial {
    fn to_term(&self) -> Term {
        let prod = Term::product(self.factors.iter().map(Atom::to_term).collect());
        if self.negated {
            Term::neg(prod)
        } else {
            prod
        }
    }
}

fn monomials(t: &Term, negated: bool) -> Vec<Monomial> {
    match t.node() {
        TermNode::Var(i) => vec![Monomial { negated, factors: vec![Atom::Var(*i)] }],
        TermNode::Zero => vec![Monomial { negated: false, factors: vec![Atom::Zero] }],
        TermNode::One => vec![Monomial { negated, factors: vec![Atom::One] }],
        TermNode::Lit(e) => vec![Monomial { negated, factors: vec![Atom::Lit(*e)] }],
        // -(u+v) = (-u) + (-v) and -(uv) = (-u)v hold setwise
        TermNode::Neg(u) => monomials(u, !negated),
        TermNode::Add(u, v) => {
            let mut out = monomials(u, negated);
            out.extend(monomials(v, negated));
            out
        }
        TermNode::Mul(u, v) => {
            let left = monomials(u, negated);
            let right = monomials(v, false);
            let mut out = Vec::with_capacity(left.len() * right.len());
            for l in &left {
                for r in &right {
                    let mut factors = l.factors.clone();
                    factors.extend(r.factors.iter().cloned());
                    out.push(Monomial { negated: l.negated != r.negated, factors });
                }
            }
            out
        }
    }
}

/// Rewrites `t` into a left-associated sum of products. Every structure
/// satisfies `t ⊑ normalize_term(t)`; a term already in this shape is
/// returned unchanged.
pub fn normalize_term(t: &Term) -> Term {
    Term::sum(monomials(t, false).iter().map(Monomial::to_term).collect())
}
