//! Reduction of containment formulas to membership-constraint form.
//!
//! An atom `t1 ⊑ t2` with a strict left term reduces to the single
//! membership `0 ∈ t2 - t1`: unfolding `0 ∈ u + (-v)` through the
//! reversibility axiom gives `u = v`, so the membership says exactly that
//! the (singleton) value of `t1` lands in the value of `t2`. When the
//! left term is itself multivalued the same membership only expresses
//! that the two values intersect, which is strictly weaker than
//! containment; such atoms are first rewritten through a fresh variable,
//! `t1 ⊑ t2  ≡  ∀z (z ⊑ t1 → z ⊑ t2)`, whose atoms are strict-left.

use super::constraint::{PolyConstraint, QFormula};
use super::formal::{formal_add, formal_mul, formal_neg, FormalPoly};
use crate::formula::{Formula, FormulaNode};
use crate::normalize::normalize_term;
use crate::structure::FiniteMultiring;
use crate::term::{Term, TermNode};

/// Converts a term over the 1-field language (with element constants)
/// into a formal polynomial, normalizing to sum-of-products first.
pub fn term_to_formal(s: &FiniteMultiring, t: &Term) -> FormalPoly {
    fn convert(s: &FiniteMultiring, t: &Term) -> FormalPoly {
        match t.node() {
            TermNode::Var(i) => FormalPoly::var(s, *i),
            TermNode::Zero => FormalPoly::zero(),
            TermNode::One => FormalPoly::one(s),
            TermNode::Lit(e) => FormalPoly::constant(s, *e),
            TermNode::Neg(u) => formal_neg(s, &convert(s, u)),
            TermNode::Add(u, v) => formal_add(s, &convert(s, u), &convert(s, v)),
            TermNode::Mul(u, v) => formal_mul(s, &convert(s, u), &convert(s, v)),
        }
    }
    convert(s, &normalize_term(t))
}

/// The direct reduction: `t1 ⊑ t2` becomes `0 ∈ t2 - t1`. Exact for
/// strict `t1`; in general the membership expresses the weak (nonempty
/// intersection) reading of the atom.
pub fn reduce_atomic(s: &FiniteMultiring, t1: &Term, t2: &Term) -> PolyConstraint {
    PolyConstraint::member(term_to_formal(s, &Term::sub(t2.clone(), t1.clone())))
}

/// A conjunction of inequations `0 ∉ g_i` merges into the single
/// inequation of the formal product. List must be nonempty.
pub fn merge_inequations(s: &FiniteMultiring, gs: &[FormalPoly]) -> FormalPoly {
    assert!(!gs.is_empty());
    let mut acc = gs[0].clone();
    for g in &gs[1..] {
        acc = formal_mul(s, &acc, g);
    }
    acc
}

/// Rewrites a containment formula into constraint form. Strict-left atoms
/// reduce directly; multivalued-left atoms go through the fresh-variable
/// rewrite (`fresh` supplies unused indices). `Implies` and `Iff` desugar
/// into and/or/not.
pub fn reduce_formula(s: &FiniteMultiring, phi: &Formula, fresh: &mut u32) -> QFormula {
    match phi.node() {
        FormulaNode::Atom(t1, t2) => {
            if t1.is_strict(s.mul_strict()) {
                QFormula::Atom(reduce_atomic(s, t1, t2))
            } else {
                let z = *fresh;
                *fresh += 1;
                let zt = Term::var(z);
                let left = reduce_atomic(s, &zt, t1);
                let right = reduce_atomic(s, &zt, t2);
                QFormula::Forall(
                    z,
                    Box::new(QFormula::or_all(vec![
                        QFormula::Atom(left.negated()),
                        QFormula::Atom(right),
                    ])),
                )
            }
        }
        FormulaNode::Not(f) => QFormula::Not(Box::new(reduce_formula(s, f, fresh))),
        FormulaNode::And(a, b) => {
            QFormula::and_all(vec![reduce_formula(s, a, fresh), reduce_formula(s, b, fresh)])
        }
        FormulaNode::Or(a, b) => {
            QFormula::or_all(vec![reduce_formula(s, a, fresh), reduce_formula(s, b, fresh)])
        }
        FormulaNode::Implies(a, b) => QFormula::or_all(vec![
            QFormula::Not(Box::new(reduce_formula(s, a, fresh))),
            reduce_formula(s, b, fresh),
        ]),
        FormulaNode::Iff(a, b) => {
            let ra = reduce_formula(s, a, fresh);
            let rb = reduce_formula(s, b, fresh);
            QFormula::and_all(vec![
                QFormula::or_all(vec![QFormula::Not(Box::new(ra.clone())), rb.clone()]),
                QFormula::or_all(vec![QFormula::Not(Box::new(rb)), ra]),
            ])
        }
        FormulaNode::Forall(i, f) => QFormula::Forall(*i, Box::new(reduce_formula(s, f, fresh))),
        FormulaNode::Exists(i, f) => QFormula::Exists(*i, Box::new(reduce_formula(s, f, fresh))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builtins::{make_builtin, Builtin};
    use crate::eval::satisfies;
    use crate::qe::constraint::qsatisfies;
    use crate::term::{for_all_valuations, Valuation};

    fn structures() -> Vec<FiniteMultiring> {
        vec![make_builtin(Builtin::Krasner).unwrap(), make_builtin(Builtin::Hp(3)).unwrap()]
    }

    /// Exhaustive agreement of a containment formula and its reduction.
    fn agree(s: &FiniteMultiring, phi: &Formula) -> Option<Valuation> {
        let mut fresh = 32;
        let reduced = reduce_formula(s, phi, &mut fresh);
        for_all_valuations(s.carrier_size(), phi.fv(), &mut |v| {
            satisfies(s, phi, v).unwrap() == qsatisfies(s, &reduced, v)
        })
    }

    #[test]
    fn variable_containment_reduces_exactly() {
        // x ⊑ y  ->  0 ∈ y - x
        for s in structures() {
            let phi = Formula::atom(Term::var(0), Term::var(1));
            assert_eq!(agree(&s, &phi), None, "{}", s.name());
        }
    }

    #[test]
    fn reflexive_atom_reduces_to_a_validity() {
        let t = Term::add(Term::mul(Term::var(0), Term::var(1)), Term::one());
        for s in structures() {
            // t ⊑ t is valid; its reduction must hold everywhere too
            let phi = Formula::atom(t.clone(), t.clone());
            assert_eq!(agree(&s, &phi), None, "{}", s.name());
        }
    }

    #[test]
    fn strict_left_products_reduce_exactly() {
        // (x·y) ⊑ w and 0 ⊑ x + w over strict-multiplication fields
        for s in structures() {
            let atoms = vec![
                Formula::atom(Term::mul(Term::var(0), Term::var(1)), Term::var(2)),
                Formula::zero_in(Term::add(Term::var(0), Term::var(2))),
                Formula::atom(
                    Term::neg(Term::var(1)),
                    Term::mul(Term::var(0), Term::add(Term::var(1), Term::one())),
                ),
            ];
            for phi in &atoms {
                assert_eq!(agree(&s, phi), None, "{} on {:?}", s.name(), phi);
            }
        }
    }

    #[test]
    fn multivalued_left_atom_needs_the_fresh_variable_rewrite() {
        // x(y+z) ⊑ w: the direct membership is weaker than containment on
        // K at x=y=z=w=1, so reduce_formula must use the rewrite
        let s = make_builtin(Builtin::Krasner).unwrap();
        let t1 = Term::mul(Term::var(0), Term::add(Term::var(1), Term::var(2)));
        let phi = Formula::atom(t1.clone(), Term::var(3));

        // direct reduction disagrees at the known valuation
        let direct = QFormula::Atom(reduce_atomic(&s, &t1, &Term::var(3)));
        let v = Valuation::from_elems(&[1, 1, 1, 1]);
        assert!(!satisfies(&s, &phi, &v).unwrap());
        assert!(qsatisfies(&s, &direct, &v));

        // the full reduction agrees everywhere
        assert_eq!(agree(&s, &phi), None);
    }

    #[test]
    fn connectives_and_quantifiers_reduce_exactly() {
        for s in structures() {
            let formulas = vec![
                Formula::exists(1, Formula::zero_in(Term::sub(Term::var(1), Term::var(0)))),
                Formula::implies(
                    Formula::zero_in(Term::var(0)),
                    Formula::atom(Term::var(0), Term::zero()),
                ),
                Formula::forall(
                    0,
                    Formula::iff(
                        Formula::zero_in(Term::add(Term::var(0), Term::var(1))),
                        Formula::zero_in(Term::add(Term::var(1), Term::var(0))),
                    ),
                ),
                Formula::not(Formula::strong_eq(Term::var(0), Term::one())),
            ];
            for phi in &formulas {
                assert_eq!(agree(&s, phi), None, "{} on {:?}", s.name(), phi);
            }
        }
    }

    #[test]
    fn merge_single_inequation_is_identity() {
        let s = make_builtin(Builtin::Signs).unwrap();
        let g = FormalPoly::var(&s, 0);
        assert_eq!(merge_inequations(&s, &[g.clone()]), g);
    }

    #[test]
    fn merge_two_variables_over_signs() {
        // 0∉x0 ∧ 0∉x1 vs 0∉x0·x1, exhaustively over Q2
        let s = make_builtin(Builtin::Signs).unwrap();
        let g1 = FormalPoly::var(&s, 0);
        let g2 = FormalPoly::var(&s, 1);
        let merged = merge_inequations(&s, &[g1.clone(), g2.clone()]);
        let lhs = QFormula::and_all(vec![
            QFormula::not_member(g1),
            QFormula::not_member(g2),
        ]);
        let rhs = QFormula::not_member(merged);
        let r = crate::qe::constraint::check_equivalence_on_model(&s, &lhs, &rhs);
        assert!(r.equivalent);
    }

    #[test]
    fn merge_repeated_binomial_over_krasner() {
        // g = 1 + x0 squared, over K, exhaustively
        let s = make_builtin(Builtin::Krasner).unwrap();
        let g = formal_add(&s, &FormalPoly::one(&s), &FormalPoly::var(&s, 0));
        let merged = merge_inequations(&s, &[g.clone(), g.clone()]);
        let lhs = QFormula::not_member(g);
        let rhs = QFormula::not_member(merged);
        let r = crate::qe::constraint::check_equivalence_on_model(&s, &lhs, &rhs);
        assert!(r.equivalent);
    }

    #[test]
    fn merge_can_fail_on_h3_with_repeated_terms() {
        // over H3 the formal square of 1 + 2·x0 reaches 0 at x0 = 1 even
        // though the factor itself does not: the cross terms 2·x0 + 2·x0
        // already cover the carrier; records the boundary of the rewrite
        let s = make_builtin(Builtin::Hp(3)).unwrap();
        let g = formal_add(
            &s,
            &FormalPoly::one(&s),
            &FormalPoly::monomial(&s, 2, &[(0, 1)]),
        );
        let merged = merge_inequations(&s, &[g.clone(), g.clone()]);
        let lhs = QFormula::not_member(g);
        let rhs = QFormula::not_member(merged);
        let r = crate::qe::constraint::check_equivalence_on_model(&s, &lhs, &rhs);
        assert!(!r.equivalent);
        assert_eq!(r.witness.unwrap().get(0), Ok(1));
    }
}
