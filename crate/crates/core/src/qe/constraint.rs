//! Constraint formulas: boolean trees over polynomial memberships
//! `0 ∈ f` / `0 ∉ g` with quantifiers, plus exhaustive model checking.

use super::formal::{eval_formal, FormalPoly};
use crate::structure::FiniteMultiring;
use crate::term::{for_all_valuations, Valuation, VarSet};
use serde::Serialize;
use std::fmt;

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug, Serialize)]
pub enum Polarity {
    /// `0 ∈ f`
    Member,
    /// `0 ∉ g`
    NotMember,
}

/// An atomic membership constraint. `Member` of the zero polynomial is
/// the canonical true constant; `NotMember` of it is false.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct PolyConstraint {
    pub polarity: Polarity,
    pub poly: FormalPoly,
}

impl PolyConstraint {
    pub fn member(poly: FormalPoly) -> PolyConstraint {
        PolyConstraint { polarity: Polarity::Member, poly }
    }

    pub fn not_member(poly: FormalPoly) -> PolyConstraint {
        PolyConstraint { polarity: Polarity::NotMember, poly }
    }

    pub fn negated(&self) -> PolyConstraint {
        PolyConstraint {
            polarity: match self.polarity {
                Polarity::Member => Polarity::NotMember,
                Polarity::NotMember => Polarity::Member,
            },
            poly: self.poly.clone(),
        }
    }

    pub fn holds(&self, s: &FiniteMultiring, v: &Valuation) -> bool {
        let contains = eval_formal(s, &self.poly, v).contains(s.zero());
        match self.polarity {
            Polarity::Member => contains,
            Polarity::NotMember => !contains,
        }
    }

    pub fn vars(&self) -> VarSet {
        self.poly.vars()
    }

    pub fn canonical_text(&self, s: &FiniteMultiring) -> String {
        let op = match self.polarity {
            Polarity::Member => "in",
            Polarity::NotMember => "notin",
        };
        format!("0 {op} {}", self.poly.canonical_text(s))
    }
}

impl fmt::Debug for PolyConstraint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let op = match self.polarity {
            Polarity::Member => "in",
            Polarity::NotMember => "notin",
        };
        write!(f, "0 {op} {:?}", self.poly)
    }
}

/// A boolean tree over membership constraints with quantifiers.
#[derive(Clone, PartialEq, Eq, Serialize)]
pub enum QFormula {
    Atom(PolyConstraint),
    Not(Box<QFormula>),
    And(Vec<QFormula>),
    Or(Vec<QFormula>),
    Exists(u32, Box<QFormula>),
    Forall(u32, Box<QFormula>),
}

impl QFormula {
    pub fn member(poly: FormalPoly) -> QFormula {
        QFormula::Atom(PolyConstraint::member(poly))
    }

    pub fn not_member(poly: FormalPoly) -> QFormula {
        QFormula::Atom(PolyConstraint::not_member(poly))
    }

    /// `0 ∈ 0`, the representable truth constant.
    pub fn always_true() -> QFormula {
        QFormula::member(FormalPoly::zero())
    }

    /// `0 ∉ 0`.
    pub fn always_false() -> QFormula {
        QFormula::not_member(FormalPoly::zero())
    }

    /// N-ary conjunction; empty is true, singletons unwrap.
    pub fn and_all(mut parts: Vec<QFormula>) -> QFormula {
        match parts.len() {
            0 => QFormula::always_true(),
            1 => parts.remove(0),
            _ => QFormula::And(parts),
        }
    }

    /// N-ary disjunction; empty is false, singletons unwrap.
    pub fn or_all(mut parts: Vec<QFormula>) -> QFormula {
        match parts.len() {
            0 => QFormula::always_false(),
            1 => parts.remove(0),
            _ => QFormula::Or(parts),
        }
    }

    pub fn is_quantifier_free(&self) -> bool {
        match self {
            QFormula::Atom(_) => true,
            QFormula::Not(f) => f.is_quantifier_free(),
            QFormula::And(fs) | QFormula::Or(fs) => fs.iter().all(|f| f.is_quantifier_free()),
            QFormula::Exists(_, _) | QFormula::Forall(_, _) => false,
        }
    }

    /// Free variables, with quantifier shadowing.
    pub fn fv(&self) -> VarSet {
        match self {
            QFormula::Atom(c) => c.vars(),
            QFormula::Not(f) => f.fv(),
            QFormula::And(fs) | QFormula::Or(fs) => {
                fs.iter().fold(VarSet::EMPTY, |acc, f| acc.union(f.fv()))
            }
            QFormula::Exists(i, f) | QFormula::Forall(i, f) => f.fv().without(*i),
        }
    }

    /// Largest variable index occurring anywhere (bound or free), plus
    /// one; 0 for variable-free formulas. Fresh variables start here.
    pub fn var_bound(&self) -> u32 {
        match self {
            QFormula::Atom(c) => c.vars().fresh_above(),
            QFormula::Not(f) => f.var_bound(),
            QFormula::And(fs) | QFormula::Or(fs) => {
                fs.iter().map(|f| f.var_bound()).max().unwrap_or(0)
            }
            QFormula::Exists(i, f) | QFormula::Forall(i, f) => (*i + 1).max(f.var_bound()),
        }
    }

    pub fn canonical_text(&self, s: &FiniteMultiring) -> String {
        match self {
            QFormula::Atom(c) => c.canonical_text(s),
            QFormula::Not(f) => format!("!({})", f.canonical_text(s)),
            QFormula::And(fs) => {
                let parts: Vec<String> = fs.iter().map(|f| format!("({})", f.canonical_text(s))).collect();
                parts.join(" & ")
            }
            QFormula::Or(fs) => {
                let parts: Vec<String> = fs.iter().map(|f| format!("({})", f.canonical_text(s))).collect();
                parts.join(" | ")
            }
            QFormula::Exists(i, f) => format!("exists x{i}. ({})", f.canonical_text(s)),
            QFormula::Forall(i, f) => format!("forall x{i}. ({})", f.canonical_text(s)),
        }
    }
}

impl fmt::Debug for QFormula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            QFormula::Atom(c) => write!(f, "{c:?}"),
            QFormula::Not(x) => write!(f, "!({x:?})"),
            QFormula::And(fs) => {
                write!(f, "(")?;
                for (i, x) in fs.iter().enumerate() {
                    if i > 0 {
                        write!(f, " & ")?;
                    }
                    write!(f, "{x:?}")?;
                }
                write!(f, ")")
            }
            QFormula::Or(fs) => {
                write!(f, "(")?;
                for (i, x) in fs.iter().enumerate() {
                    if i > 0 {
                        write!(f, " | ")?;
                    }
                    write!(f, "{x:?}")?;
                }
                write!(f, ")")
            }
            QFormula::Exists(i, x) => write!(f, "exists x{i}. ({x:?})"),
            QFormula::Forall(i, x) => write!(f, "forall x{i}. ({x:?})"),
        }
    }
}

/// Exhaustive satisfaction over a finite structure.
pub fn qsatisfies(s: &FiniteMultiring, phi: &QFormula, v: &Valuation) -> bool {
    let mut v = v.clone();
    go(s, phi, &mut v)
}

fn go(s: &FiniteMultiring, phi: &QFormula, v: &mut Valuation) -> bool {
    match phi {
        QFormula::Atom(c) => c.holds(s, v),
        QFormula::Not(f) => !go(s, f, v),
        QFormula::And(fs) => fs.iter().all(|f| go(s, f, v)),
        QFormula::Or(fs) => fs.iter().any(|f| go(s, f, v)),
        QFormula::Exists(i, f) => (0..s.carrier_size()).any(|e| {
            let prev = v.bind(*i, e);
            let ok = go(s, f, v);
            v.restore(*i, prev);
            ok
        }),
        QFormula::Forall(i, f) => (0..s.carrier_size()).all(|e| {
            let prev = v.bind(*i, e);
            let ok = go(s, f, v);
            v.restore(*i, prev);
            ok
        }),
    }
}

/// Folds valuation-independent constraints to truth constants and prunes
/// them through the connectives. Quantifiers are left untouched.
pub fn fold_ground(s: &FiniteMultiring, phi: &QFormula) -> QFormula {
    let truth = |f: &QFormula| -> Option<bool> {
        match f {
            QFormula::Atom(c) if c.vars().is_empty() => Some(c.holds(s, &Valuation::new())),
            _ => None,
        }
    };
    match phi {
        QFormula::Atom(_) => phi.clone(),
        QFormula::Not(f) => {
            let inner = fold_ground(s, f);
            match truth(&inner) {
                Some(true) => QFormula::always_false(),
                Some(false) => QFormula::always_true(),
                None => QFormula::Not(Box::new(inner)),
            }
        }
        QFormula::And(fs) => {
            let mut out = Vec::new();
            for f in fs {
                let g = fold_ground(s, f);
                match truth(&g) {
                    Some(true) => {}
                    Some(false) => return QFormula::always_false(),
                    None => out.push(g),
                }
            }
            QFormula::and_all(out)
        }
        QFormula::Or(fs) => {
            let mut out = Vec::new();
            for f in fs {
                let g = fold_ground(s, f);
                match truth(&g) {
                    Some(false) => {}
                    Some(true) => return QFormula::always_true(),
                    None => out.push(g),
                }
            }
            QFormula::or_all(out)
        }
        QFormula::Exists(i, f) => QFormula::Exists(*i, Box::new(fold_ground(s, f))),
        QFormula::Forall(i, f) => QFormula::Forall(*i, Box::new(fold_ground(s, f))),
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EquivalenceReport {
    pub equivalent: bool,
    /// First valuation where the two sides disagree.
    pub witness: Option<Valuation>,
}

/// Exhaustively compares two formulas over all valuations of their joint
/// free variables.
pub fn check_equivalence_on_model(
    s: &FiniteMultiring,
    a: &QFormula,
    b: &QFormula,
) -> EquivalenceReport {
    let vars = a.fv().union(b.fv());
    let witness = for_all_valuations(s.carrier_size(), vars, &mut |v| {
        qsatisfies(s, a, v) == qsatisfies(s, b, v)
    });
    EquivalenceReport { equivalent: witness.is_none(), witness }
}
