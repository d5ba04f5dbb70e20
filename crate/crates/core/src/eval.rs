//! Powerset extension of operations, term interpretation and satisfaction
//! over finite multialgebras.
//!
//! An n-ary multioperation extends to subsets by taking the union over all
//! element tuples; term interpretation composes child results through the
//! extended operations; satisfaction reads containment atoms as subset
//! inclusion and runs quantifiers exhaustively over the finite carrier.

use crate::error::EvalError;
use crate::formula::{Formula, FormulaNode};
use crate::structure::FiniteMultiring;
use crate::subset::Subset;
use crate::term::{for_all_valuations, Term, TermNode, Valuation};

/// Extends the addition table to subsets.
pub fn extend_add(s: &FiniteMultiring, a: &Subset, b: &Subset) -> Subset {
    let mut acc: Option<Subset> = None;
    for x in a.iter() {
        for y in b.iter() {
            let cell = s.add(x, y);
            acc = Some(match acc {
                None => cell,
                Some(u) => u.union(&cell),
            });
        }
    }
    acc.expect("operands are nonempty")
}

/// Extends the multiplication table to subsets.
pub fn extend_mul(s: &FiniteMultiring, a: &Subset, b: &Subset) -> Subset {
    let mut acc: Option<Subset> = None;
    for x in a.iter() {
        for y in b.iter() {
            let cell = s.mul(x, y);
            acc = Some(match acc {
                None => cell,
                Some(u) => u.union(&cell),
            });
        }
    }
    acc.expect("operands are nonempty")
}

/// Extends negation pointwise.
pub fn extend_neg(s: &FiniteMultiring, a: &Subset) -> Subset {
    Subset::from_elems(s.carrier_size(), &a.iter().map(|x| s.neg(x)).collect::<Vec<_>>())
        .expect("operand is nonempty")
}

/// Applies an operation symbol, extended to subsets, by name. The symbol
/// must exist in the structure's signature with the matching arity.
pub fn extend_op(s: &FiniteMultiring, symbol: &str, args: &[Subset]) -> Result<Subset, EvalError> {
    let sig = s.signature();
    let sym = sig
        .lookup(symbol)
        .ok_or_else(|| EvalError::UnknownSymbol(symbol.to_string()))?;
    let expected = sym.arity.argument_count();
    if args.len() != expected {
        return Err(EvalError::ArityMismatch {
            symbol: symbol.to_string(),
            expected,
            got: args.len(),
        });
    }
    Ok(match symbol {
        "0" => Subset::singleton(s.carrier_size(), s.zero()),
        "1" => Subset::singleton(s.carrier_size(), s.one()),
        "-" => extend_neg(s, &args[0]),
        "+" => extend_add(s, &args[0], &args[1]),
        "*" => extend_mul(s, &args[0], &args[1]),
        _ => unreachable!("signature only carries the ring symbols"),
    })
}

/// Interprets a term under a valuation. The result is always nonempty.
pub fn eval_term(s: &FiniteMultiring, t: &Term, v: &Valuation) -> Result<Subset, EvalError> {
    let n = s.carrier_size();
    Ok(match t.node() {
        TermNode::Var(i) => Subset::singleton(n, v.get(*i)?),
        TermNode::Zero => Subset::singleton(n, s.zero()),
        TermNode::One => Subset::singleton(n, s.one()),
        TermNode::Lit(e) => Subset::singleton(n, *e),
        TermNode::Neg(a) => extend_neg(s, &eval_term(s, a, v)?),
        TermNode::Add(a, b) => extend_add(s, &eval_term(s, a, v)?, &eval_term(s, b, v)?),
        TermNode::Mul(a, b) => extend_mul(s, &eval_term(s, a, v)?, &eval_term(s, b, v)?),
    })
}

/// Decides `s ⊨_v φ`. Atoms are subset inclusion, connectives are
/// classical, quantifiers iterate the carrier in ascending element order
/// with short-circuiting.
pub fn satisfies(s: &FiniteMultiring, phi: &Formula, v: &Valuation) -> Result<bool, EvalError> {
    let mut v = v.clone();
    satisfies_mut(s, phi, &mut v)
}

fn satisfies_mut(s: &FiniteMultiring, phi: &Formula, v: &mut Valuation) -> Result<bool, EvalError> {
    Ok(match phi.node() {
        FormulaNode::Atom(t1, t2) => {
            let a = eval_term(s, t1, v)?;
            let b = eval_term(s, t2, v)?;
            a.is_subset_of(&b)
        }
        FormulaNode::Not(f) => !satisfies_mut(s, f, v)?,
        FormulaNode::And(a, b) => satisfies_mut(s, a, v)? && satisfies_mut(s, b, v)?,
        FormulaNode::Or(a, b) => satisfies_mut(s, a, v)? || satisfies_mut(s, b, v)?,
        FormulaNode::Implies(a, b) => !satisfies_mut(s, a, v)? || satisfies_mut(s, b, v)?,
        FormulaNode::Iff(a, b) => satisfies_mut(s, a, v)? == satisfies_mut(s, b, v)?,
        FormulaNode::Forall(i, body) => {
            let mut all = true;
            for e in 0..s.carrier_size() {
                let prev = v.bind(*i, e);
                let ok = satisfies_mut(s, body, v)?;
                v.restore(*i, prev);
                if !ok {
                    all = false;
                    break;
                }
            }
            all
        }
        FormulaNode::Exists(i, body) => {
            let mut any = false;
            for e in 0..s.carrier_size() {
                let prev = v.bind(*i, e);
                let ok = satisfies_mut(s, body, v)?;
                v.restore(*i, prev);
                if ok {
                    any = true;
                    break;
                }
            }
            any
        }
    })
}

/// `s ⊨ φ` under every valuation of the free variables; returns the first
/// failing valuation otherwise.
pub fn holds_universally(s: &FiniteMultiring, phi: &Formula) -> Result<Option<Valuation>, EvalError> {
    let mut err = None;
    let witness = for_all_valuations(s.carrier_size(), phi.fv(), &mut |v| {
        match satisfies(s, phi, v) {
            Ok(b) => b,
            Err(e) => {
                err = Some(e);
                false
            }
        }
    });
    match err {
        Some(e) => Err(e),
        None => Ok(witness),
    }
}

/// The weak identity `t1 =w t2`: some valuation makes the interpretations
/// intersect.
pub fn holds_weak_identity(s: &FiniteMultiring, t1: &Term, t2: &Term) -> bool {
    let vars = t1.vars().union(t2.vars());
    let found_disjoint = for_all_valuations(s.carrier_size(), vars, &mut |v| {
        let a = eval_term(s, t1, v).expect("valuation covers term variables");
        let b = eval_term(s, t2, v).expect("valuation covers term variables");
        // stop (returning the valuation) as soon as they intersect
        !a.intersects(&b)
    });
    found_disjoint.is_some()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builtins::{make_builtin, small_builtins, Builtin};
    use crate::subset::Subset;

    fn q2() -> FiniteMultiring {
        make_builtin(Builtin::Signs).unwrap()
    }

    fn named(s: &FiniteMultiring, names: &[&str]) -> Subset {
        Subset::from_elems(
            s.carrier_size(),
            &names.iter().map(|n| s.element_by_name(n).unwrap()).collect::<Vec<_>>(),
        )
        .unwrap()
    }

    #[test]
    fn extend_add_on_signs() {
        let s = q2();
        let one = named(&s, &["1"]);
        let minus = named(&s, &["-1"]);
        assert_eq!(extend_add(&s, &one, &minus), named(&s, &["-1", "0", "1"]));
    }

    #[test]
    fn extend_add_unions_over_tuples() {
        // over K: {0,1} + {1} = (0+1) ∪ (1+1) = {0,1}
        let k = make_builtin(Builtin::Krasner).unwrap();
        let both = Subset::full(2);
        let one = Subset::singleton(2, 1);
        assert_eq!(extend_add(&k, &both, &one), both);
    }

    #[test]
    fn adding_zero_is_identity_on_every_builtin() {
        for s in small_builtins(13) {
            let z = Subset::singleton(s.carrier_size(), s.zero());
            for a in s.elements() {
                for b in s.elements() {
                    let sub = Subset::from_elems(s.carrier_size(), &[a, b]).unwrap();
                    assert_eq!(extend_add(&s, &z, &sub), sub, "{}", s.name());
                }
            }
        }
    }

    #[test]
    fn extend_op_reports_unknown_symbols_and_arity() {
        let s = q2();
        let one = named(&s, &["1"]);
        assert_eq!(
            extend_op(&s, "?", &[one]),
            Err(EvalError::UnknownSymbol("?".into()))
        );
        assert_eq!(
            extend_op(&s, "+", &[one]),
            Err(EvalError::ArityMismatch { symbol: "+".into(), expected: 2, got: 1 })
        );
        assert_eq!(extend_op(&s, "+", &[one, one]), Ok(one));
    }

    #[test]
    fn eval_variable_is_a_singleton() {
        let s = q2();
        let v = Valuation::from_elems(&[s.element_by_name("-1").unwrap()]);
        assert_eq!(eval_term(&s, &Term::var(0), &v).unwrap(), named(&s, &["-1"]));
    }

    #[test]
    fn eval_x_plus_minus_x_on_signs() {
        let s = q2();
        let t = Term::add(Term::var(0), Term::neg(Term::var(0)));
        let v = Valuation::from_elems(&[s.element_by_name("1").unwrap()]);
        assert_eq!(eval_term(&s, &t, &v).unwrap(), named(&s, &["-1", "0", "1"]));
    }

    #[test]
    fn eval_constant_sum_on_h3() {
        let h3 = make_builtin(Builtin::Hp(3)).unwrap();
        let t = Term::add(Term::lit(1), Term::lit(2));
        let v = Valuation::new();
        assert_eq!(eval_term(&h3, &t, &v).unwrap(), Subset::from_elems(3, &[1, 2]).unwrap());
    }

    #[test]
    fn eval_never_returns_empty_exhaustively() {
        // every term in a small pool, every valuation, every builtin
        let pool = [
            Term::add(Term::var(0), Term::var(1)),
            Term::mul(Term::var(0), Term::neg(Term::var(1))),
            Term::add(Term::mul(Term::var(0), Term::var(0)), Term::one()),
            Term::neg(Term::add(Term::var(0), Term::neg(Term::var(1)))),
        ];
        for s in small_builtins(7) {
            for t in &pool {
                let empty_found = for_all_valuations(s.carrier_size(), t.vars(), &mut |v| {
                    eval_term(&s, t, v).unwrap().len() > 0
                });
                assert!(empty_found.is_none(), "{}", s.name());
            }
        }
    }

    #[test]
    fn unbound_variable_is_an_error() {
        let s = q2();
        assert_eq!(
            eval_term(&s, &Term::var(3), &Valuation::new()),
            Err(EvalError::UnboundVariable(3))
        );
    }

    #[test]
    fn satisfies_zero_in_x_minus_x_on_signs() {
        let s = q2();
        let phi = Formula::zero_in(Term::add(Term::var(0), Term::neg(Term::var(0))));
        let v = Valuation::from_elems(&[s.element_by_name("1").unwrap()]);
        assert!(satisfies(&s, &phi, &v).unwrap());
    }

    #[test]
    fn multiplicative_identity_law_everywhere() {
        let phi = Formula::strong_eq(Term::mul(Term::var(0), Term::one()), Term::var(0));
        for s in small_builtins(13) {
            assert_eq!(holds_universally(&s, &phi).unwrap(), None, "{}", s.name());
        }
    }

    #[test]
    fn exists_inverse_on_h3() {
        let h3 = make_builtin(Builtin::Hp(3)).unwrap();
        // exists y: 1 ⊑ x*y, at x = 2 (witness y = 2 since 2*2 = 1)
        let phi = Formula::exists(1, Formula::atom(Term::one(), Term::mul(Term::var(0), Term::var(1))));
        let v = Valuation::from_elems(&[2]);
        assert!(satisfies(&h3, &phi, &v).unwrap());
        // but not at x = 0
        let v0 = Valuation::from_elems(&[0]);
        assert!(!satisfies(&h3, &phi, &v0).unwrap());
    }

    #[test]
    fn weak_identity_examples() {
        let k = make_builtin(Builtin::Krasner).unwrap();
        let t = Term::add(Term::var(0), Term::mul(Term::var(1), Term::var(0)));
        assert!(holds_weak_identity(&k, &t, &t));
        // 1+1 meets 0 in K because 0 ∈ {0,1}
        assert!(holds_weak_identity(&k, &Term::add(Term::one(), Term::one()), &Term::zero()));
        // 1 and -1 never meet in Q2
        let s = q2();
        assert!(!holds_weak_identity(&s, &Term::one(), &Term::neg(Term::one())));
    }

    #[test]
    fn extension_is_monotone() {
        for s in small_builtins(5) {
            let n = s.carrier_size();
            let subsets: Vec<Subset> = (1u64..(1 << n)).filter_map(|m| Subset::from_bits(n, m)).collect();
            for a in &subsets {
                for a2 in &subsets {
                    if !a.is_subset_of(a2) {
                        continue;
                    }
                    for b in &subsets {
                        for b2 in &subsets {
                            if !b.is_subset_of(b2) {
                                continue;
                            }
                            assert!(extend_add(&s, a, b).is_subset_of(&extend_add(&s, a2, b2)));
                            assert!(extend_mul(&s, a, b).is_subset_of(&extend_mul(&s, a2, b2)));
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn containment_in_strict_term_equals_strong_equality() {
        // for strict t' and arbitrary t: (t ⊑ t') iff (t =s t')
        let t = Term::add(Term::var(0), Term::var(1));
        let strict = Term::mul(Term::var(0), Term::neg(Term::var(1)));
        for s in small_builtins(5) {
            if !s.mul_strict() {
                continue;
            }
            let lhs = Formula::atom(t.clone(), strict.clone());
            let rhs = Formula::strong_eq(t.clone(), strict.clone());
            let vars = lhs.fv();
            let diff = for_all_valuations(s.carrier_size(), vars, &mut |v| {
                satisfies(&s, &lhs, v).unwrap() == satisfies(&s, &rhs, v).unwrap()
            });
            assert!(diff.is_none(), "{}", s.name());
        }
    }
}
