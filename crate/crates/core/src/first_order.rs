//! Translation of multialgebras into ordinary first-order structures.
//!
//! Each multivalued binary operation becomes a ternary relation
//! (`(a,b,d)` iff `d ∈ a+b`); strict operations stay functional. A
//! containment atom `t1 ⊑ t2` translates to `∀z (z ∈ t1 → z ∈ t2)` where
//! membership unfolds the term through fresh existentials. The translated
//! structure satisfies the totality axioms `∀a ∀b ∃d R(a,b,d)`.

use crate::formula::{Formula, FormulaNode};
use crate::structure::FiniteMultiring;
use crate::subset::Elem;
use crate::term::{Term, TermNode, Valuation};

/// First-order terms over the functional fragment of the translated
/// language: constants, variables, negation, and multiplication when the
/// source structure interprets it strictly.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum FoTerm {
    Var(u32),
    Zero,
    One,
    Const(Elem),
    Neg(Box<FoTerm>),
    Mul(Box<FoTerm>, Box<FoTerm>),
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum FoFormula {
    Eq(FoTerm, FoTerm),
    /// `d ∈ a + b` as a ternary relation atom.
    AddRel(FoTerm, FoTerm, FoTerm),
    /// `d ∈ a · b`; used only when multiplication is multivalued.
    MulRel(FoTerm, FoTerm, FoTerm),
    Not(Box<FoFormula>),
    And(Box<FoFormula>, Box<FoFormula>),
    Or(Box<FoFormula>, Box<FoFormula>),
    Implies(Box<FoFormula>, Box<FoFormula>),
    Iff(Box<FoFormula>, Box<FoFormula>),
    Forall(u32, Box<FoFormula>),
    Exists(u32, Box<FoFormula>),
}

impl FoFormula {
    fn and_all(mut parts: Vec<FoFormula>) -> FoFormula {
        let mut acc = parts.remove(0);
        for p in parts {
            acc = FoFormula::And(Box::new(acc), Box::new(p));
        }
        acc
    }
}

/// The relational image of a [`FiniteMultiring`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FoStructure {
    pub n: usize,
    pub zero: Elem,
    pub one: Elem,
    pub neg: Vec<Elem>,
    /// Sorted `(a, b, d)` triples with `d ∈ a+b`.
    pub add_triples: Vec<(Elem, Elem, Elem)>,
    /// Present exactly when multiplication is multivalued.
    pub mul_triples: Option<Vec<(Elem, Elem, Elem)>>,
    /// Present exactly when multiplication is strict.
    pub mul_fn: Option<Vec<Elem>>,
}

/// Extracts the relational structure.
pub fn to_first_order(s: &FiniteMultiring) -> FoStructure {
    let n = s.carrier_size();
    let mut add_triples = Vec::new();
    for a in 0..n {
        for b in 0..n {
            for d in s.add(a, b).iter() {
                add_triples.push((a, b, d));
            }
        }
    }
    let (mul_triples, mul_fn) = if s.mul_strict() {
        let mut f = Vec::with_capacity(n * n);
        for a in 0..n {
            for b in 0..n {
                f.push(s.mul(a, b).the_element().expect("strict cell"));
            }
        }
        (None, Some(f))
    } else {
        let mut t = Vec::new();
        for a in 0..n {
            for b in 0..n {
                for d in s.mul(a, b).iter() {
                    t.push((a, b, d));
                }
            }
        }
        (Some(t), None)
    };
    FoStructure {
        n,
        zero: s.zero(),
        one: s.one(),
        neg: (0..n).map(|a| s.neg(a)).collect(),
        add_triples,
        mul_triples,
        mul_fn,
    }
}

/// The `∀∃` totality axioms of the relational symbols.
pub fn totality_axioms(fo: &FoStructure) -> Vec<FoFormula> {
    let mut out = vec![FoFormula::Forall(
        0,
        Box::new(FoFormula::Forall(
            1,
            Box::new(FoFormula::Exists(
                2,
                Box::new(FoFormula::AddRel(FoTerm::Var(0), FoTerm::Var(1), FoTerm::Var(2))),
            )),
        )),
    )];
    if fo.mul_triples.is_some() {
        out.push(FoFormula::Forall(
            0,
            Box::new(FoFormula::Forall(
                1,
                Box::new(FoFormula::Exists(
                    2,
                    Box::new(FoFormula::MulRel(FoTerm::Var(0), FoTerm::Var(1), FoTerm::Var(2))),
                )),
            )),
        ));
    }
    out
}

struct Translator {
    mul_strict: bool,
    next_fresh: u32,
}

impl Translator {
    /// Builds a formula asserting `x_z ∈ t`.
    fn membership(&mut self, t: &Term, z: u32) -> FoFormula {
        match t.node() {
            TermNode::Var(i) => FoFormula::Eq(FoTerm::Var(z), FoTerm::Var(*i)),
            TermNode::Zero | TermNode::One | TermNode::Lit(_) | TermNode::Neg(_)
            | TermNode::Mul(_, _)
                if self.strict_term(t) =>
            {
                FoFormula::Eq(FoTerm::Var(z), self.functional(t))
            }
            TermNode::Neg(u) => {
                let zu = self.fresh();
                let inner = self.membership(u, zu);
                FoFormula::Exists(
                    zu,
                    Box::new(FoFormula::And(
                        Box::new(inner),
                        Box::new(FoFormula::Eq(
                            FoTerm::Var(z),
                            FoTerm::Neg(Box::new(FoTerm::Var(zu))),
                        )),
                    )),
                )
            }
            TermNode::Add(u, v) => self.binary(u, v, z, true),
            TermNode::Mul(u, v) => self.binary(u, v, z, false),
            _ => unreachable!("strict leaves are handled above"),
        }
    }

    fn binary(&mut self, u: &Term, v: &Term, z: u32, is_add: bool) -> FoFormula {
        let zu = self.fresh();
        let zv = self.fresh();
        let mu = self.membership(u, zu);
        let mv = self.membership(v, zv);
        let rel = if is_add {
            FoFormula::AddRel(FoTerm::Var(zu), FoTerm::Var(zv), FoTerm::Var(z))
        } else if self.mul_strict {
            FoFormula::Eq(
                FoTerm::Var(z),
                FoTerm::Mul(Box::new(FoTerm::Var(zu)), Box::new(FoTerm::Var(zv))),
            )
        } else {
            FoFormula::MulRel(FoTerm::Var(zu), FoTerm::Var(zv), FoTerm::Var(z))
        };
        FoFormula::Exists(
            zu,
            Box::new(FoFormula::Exists(
                zv,
                Box::new(FoFormula::and_all(vec![mu, mv, rel])),
            )),
        )
    }

    fn strict_term(&self, t: &Term) -> bool {
        t.is_strict(self.mul_strict)
    }

    /// Direct functional image of a strict term.
    fn functional(&self, t: &Term) -> FoTerm {
        match t.node() {
            TermNode::Var(i) => FoTerm::Var(*i),
            TermNode::Zero => FoTerm::Zero,
            TermNode::One => FoTerm::One,
            TermNode::Lit(e) => FoTerm::Const(*e),
            TermNode::Neg(u) => FoTerm::Neg(Box::new(self.functional(u))),
            TermNode::Mul(u, v) => {
                FoTerm::Mul(Box::new(self.functional(u)), Box::new(self.functional(v)))
            }
            TermNode::Add(_, _) => unreachable!("additive terms are never strict"),
        }
    }

    fn fresh(&mut self) -> u32 {
        let v = self.next_fresh;
        self.next_fresh += 1;
        v
    }
}

/// Translates a containment formula into the relational language. Fresh
/// variables for the membership unfoldings start above every index used
/// in the source formula.
pub fn translate_formula(phi: &Formula, mul_strict: bool) -> FoFormula {
    let mut tr = Translator { mul_strict, next_fresh: max_var(phi) };
    translate(phi, &mut tr)
}

fn max_var(phi: &Formula) -> u32 {
    fn term_max(t: &Term) -> u32 {
        match t.node() {
            TermNode::Var(i) => i + 1,
            TermNode::Zero | TermNode::One | TermNode::Lit(_) => 0,
            TermNode::Neg(u) => term_max(u),
            TermNode::Add(u, v) | TermNode::Mul(u, v) => term_max(u).max(term_max(v)),
        }
    }
    fn go(phi: &Formula) -> u32 {
        match phi.node() {
            FormulaNode::Atom(a, b) => term_max(a).max(term_max(b)),
            FormulaNode::Not(f) => go(f),
            FormulaNode::And(a, b)
            | FormulaNode::Or(a, b)
            | FormulaNode::Implies(a, b)
            | FormulaNode::Iff(a, b) => go(a).max(go(b)),
            FormulaNode::Forall(i, f) | FormulaNode::Exists(i, f) => (*i + 1).max(go(f)),
        }
    }
    go(phi)
}

fn translate(phi: &Formula, tr: &mut Translator) -> FoFormula {
    match phi.node() {
        FormulaNode::Atom(t1, t2) => {
            let z = tr.fresh();
            let m1 = tr.membership(t1, z);
            let m2 = tr.membership(t2, z);
            FoFormula::Forall(z, Box::new(FoFormula::Implies(Box::new(m1), Box::new(m2))))
        }
        FormulaNode::Not(f) => FoFormula::Not(Box::new(translate(f, tr))),
        FormulaNode::And(a, b) => {
            FoFormula::And(Box::new(translate(a, tr)), Box::new(translate(b, tr)))
        }
        FormulaNode::Or(a, b) => {
            FoFormula::Or(Box::new(translate(a, tr)), Box::new(translate(b, tr)))
        }
        FormulaNode::Implies(a, b) => {
            FoFormula::Implies(Box::new(translate(a, tr)), Box::new(translate(b, tr)))
        }
        FormulaNode::Iff(a, b) => {
            FoFormula::Iff(Box::new(translate(a, tr)), Box::new(translate(b, tr)))
        }
        FormulaNode::Forall(i, f) => FoFormula::Forall(*i, Box::new(translate(f, tr))),
        FormulaNode::Exists(i, f) => FoFormula::Exists(*i, Box::new(translate(f, tr))),
    }
}

fn eval_fo_term(fo: &FoStructure, t: &FoTerm, v: &Valuation) -> Elem {
    match t {
        FoTerm::Var(i) => v.get(*i).expect("translated formula valuation covers variables"),
        FoTerm::Zero => fo.zero,
        FoTerm::One => fo.one,
        FoTerm::Const(e) => *e,
        FoTerm::Neg(u) => fo.neg[eval_fo_term(fo, u, v)],
        FoTerm::Mul(u, w) => {
            let a = eval_fo_term(fo, u, v);
            let b = eval_fo_term(fo, w, v);
            fo.mul_fn.as_ref().expect("strict multiplication")[a * fo.n + b]
        }
    }
}

/// Classical first-order satisfaction on the relational structure.
pub fn fo_satisfies(fo: &FoStructure, phi: &FoFormula, v: &Valuation) -> bool {
    let mut v = v.clone();
    go(fo, phi, &mut v)
}

fn go(fo: &FoStructure, phi: &FoFormula, v: &mut Valuation) -> bool {
    match phi {
        FoFormula::Eq(a, b) => eval_fo_term(fo, a, v) == eval_fo_term(fo, b, v),
        FoFormula::AddRel(a, b, d) => {
            let t = (eval_fo_term(fo, a, v), eval_fo_term(fo, b, v), eval_fo_term(fo, d, v));
            fo.add_triples.binary_search(&t).is_ok()
        }
        FoFormula::MulRel(a, b, d) => {
            let t = (eval_fo_term(fo, a, v), eval_fo_term(fo, b, v), eval_fo_term(fo, d, v));
            fo.mul_triples
                .as_ref()
                .map(|ts| ts.binary_search(&t).is_ok())
                .unwrap_or(false)
        }
        FoFormula::Not(f) => !go(fo, f, v),
        FoFormula::And(a, b) => go(fo, a, v) && go(fo, b, v),
        FoFormula::Or(a, b) => go(fo, a, v) || go(fo, b, v),
        FoFormula::Implies(a, b) => !go(fo, a, v) || go(fo, b, v),
        FoFormula::Iff(a, b) => go(fo, a, v) == go(fo, b, v),
        FoFormula::Forall(i, f) => (0..fo.n).all(|e| {
            let prev = v.bind(*i, e);
            let ok = go(fo, f, v);
            v.restore(*i, prev);
            ok
        }),
        FoFormula::Exists(i, f) => (0..fo.n).any(|e| {
            let prev = v.bind(*i, e);
            let ok = go(fo, f, v);
            v.restore(*i, prev);
            ok
        }),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builtins::{make_builtin, small_builtins, Builtin};
    use crate::eval::satisfies;
    use crate::term::for_all_valuations;

    #[test]
    fn krasner_addition_relation_has_five_triples() {
        let k = make_builtin(Builtin::Krasner).unwrap();
        let fo = to_first_order(&k);
        assert_eq!(
            fo.add_triples,
            vec![(0, 0, 0), (0, 1, 1), (1, 0, 1), (1, 1, 0), (1, 1, 1)]
        );
        assert!(fo.mul_fn.is_some(), "strict product stays functional");
    }

    #[test]
    fn signs_relation_contains_the_cancellation_triple() {
        let q2 = make_builtin(Builtin::Signs).unwrap();
        let fo = to_first_order(&q2);
        let one = q2.element_by_name("1").unwrap();
        let minus = q2.element_by_name("-1").unwrap();
        assert!(fo.add_triples.contains(&(one, minus, q2.zero())));
    }

    #[test]
    fn totality_axioms_hold_on_translations() {
        for s in small_builtins(7) {
            let fo = to_first_order(&s);
            for ax in totality_axioms(&fo) {
                assert!(fo_satisfies(&fo, &ax, &Valuation::new()), "{}", s.name());
            }
        }
    }

    #[test]
    fn translation_agrees_with_multialgebra_satisfaction() {
        use crate::formula::Formula;
        use crate::term::Term;
        let x = Term::var(0);
        let y = Term::var(1);
        let corpus = vec![
            Formula::zero_in(Term::add(x.clone(), Term::neg(x.clone()))),
            Formula::atom(x.clone(), Term::add(x.clone(), y.clone())),
            Formula::strong_eq(Term::mul(x.clone(), Term::one()), x.clone()),
            Formula::exists(1, Formula::atom(Term::one(), Term::mul(x.clone(), y.clone()))),
            Formula::forall(
                0,
                Formula::implies(
                    Formula::zero_in(x.clone()),
                    Formula::atom(x.clone(), Term::zero()),
                ),
            ),
            Formula::not(Formula::atom(Term::one(), Term::zero())),
            Formula::or(
                Formula::zero_in(Term::add(x.clone(), Term::one())),
                Formula::iff(
                    Formula::atom(y.clone(), x.clone()),
                    Formula::atom(x.clone(), y.clone()),
                ),
            ),
            Formula::exists(
                0,
                Formula::and(
                    Formula::zero_in(Term::add(x.clone(), y.clone())),
                    Formula::not(Formula::atom(x.clone(), Term::zero())),
                ),
            ),
        ];
        for s in small_builtins(5) {
            let fo = to_first_order(&s);
            for phi in &corpus {
                let translated = translate_formula(phi, s.mul_strict());
                let diff = for_all_valuations(s.carrier_size(), phi.fv(), &mut |v| {
                    satisfies(&s, phi, v).unwrap() == fo_satisfies(&fo, &translated, v)
                });
                assert!(diff.is_none(), "{} on {:?}", s.name(), phi);
            }
        }
    }
}
