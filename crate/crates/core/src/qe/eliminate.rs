//! The quantifier-elimination procedure for algebraically closed
//! multifields.
//!
//! Innermost existentials are eliminated from disjunctive normal form,
//! one clause `∃Y[0∈f_1 ∧ ... ∧ 0∈f_m ∧ 0∉g_1 ∧ ...]` at a time:
//!
//! - Y-free conjuncts hoist out of the quantifier.
//! - `m >= 2`: one case split over the effective leading coefficient of
//!   the lowest-degree member replaces the pair `[0∈p ∧ 0∈q]` by
//!   branches `[0∈a_k ∧ .. ∧ 0∈a_{j+1} ∧ 0∉a_j ∧ 0∈p_j ∧ 0∈r_j]` with
//!   pseudo-remainders `r_j`, plus an all-coefficients branch keeping
//!   `q`; the combined Y-degree drops strictly, so iteration reaches
//!   `m <= 1`.
//! - `m = 1`: with `q = g^k` (`k = deg_Y p`; `g = 1` when there is no
//!   inequation) the same coefficient split reduces to residuals
//!   `∃Y[0∉r_j]`. Sound only over algebraically closed models.
//! - `m = 0`: `∃Y[0∉g]` becomes the disjunction of the coefficient
//!   inequations; sound only over infinite models, which is recorded as
//!   a proviso.
//!
//! Universals run as negated existentials. Several inequations in one
//! clause merge into a single product inequation first. Every step is
//! logged with content hashes so a run can be replayed and audited.

use super::constraint::{PolyConstraint, Polarity, QFormula};
use super::formal::{formal_pow, FormalPoly};
use super::reduce::{merge_inequations, reduce_formula};
use crate::error::EliminationError;
use crate::formula::Formula;
use crate::structure::FiniteMultiring;
use crate::term::Valuation;
use serde::Serialize;

#[derive(Clone, Debug)]
pub struct EliminationConfig {
    /// Cap on the number of clauses any one disjunctive normal form may
    /// reach during elimination.
    pub max_clauses: usize,
}

impl Default for EliminationConfig {
    fn default() -> Self {
        EliminationConfig { max_clauses: 4096 }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum StepKind {
    Reduce,
    Merge,
    PartA,
    PartB,
    PartC,
}

/// One audited rewriting step: content hashes of the local input and
/// output plus the soundness provisos the step relies on.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct TraceStep {
    pub kind: StepKind,
    pub input_hash: u64,
    pub output_hash: u64,
    pub provisos: Vec<String>,
}

/// Result of an elimination run.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Elimination {
    pub result: QFormula,
    pub trace: Vec<TraceStep>,
    /// Some step needed the algebraic-closure axioms.
    pub used_ac: bool,
    /// Some step needed the infinitude axioms.
    pub used_infinitude: bool,
}

/// Stable 64-bit content hash (FNV-1a over canonical text).
pub fn content_hash(text: &str) -> u64 {
    let mut h = 0xcbf2_9ce4_8422_2325u64;
    for b in text.bytes() {
        h ^= b as u64;
        h = h.wrapping_mul(0x0000_0100_0000_01b3);
    }
    h
}

struct Ctx<'a> {
    s: &'a FiniteMultiring,
    cfg: &'a EliminationConfig,
    trace: Vec<TraceStep>,
    used_ac: bool,
    used_infinitude: bool,
    fuel: usize,
}

impl<'a> Ctx<'a> {
    fn log(&mut self, kind: StepKind, input: &QFormula, output: &QFormula, provisos: Vec<String>) {
        self.trace.push(TraceStep {
            kind,
            input_hash: content_hash(&input.canonical_text(self.s)),
            output_hash: content_hash(&output.canonical_text(self.s)),
            provisos,
        });
    }
}

/// Eliminates every quantifier from a constraint formula.
pub fn eliminate(
    s: &FiniteMultiring,
    phi: &QFormula,
    cfg: &EliminationConfig,
) -> Result<Elimination, EliminationError> {
    let mut ctx =
        Ctx { s, cfg, trace: Vec::new(), used_ac: false, used_infinitude: false, fuel: 100_000 };
    let result = super::constraint::fold_ground(s, &eliminate_node(&mut ctx, phi)?);
    debug_assert!(result.is_quantifier_free());
    debug_assert!(result.fv().is_subset_of(phi.fv()));
    Ok(Elimination {
        result,
        trace: ctx.trace,
        used_ac: ctx.used_ac,
        used_infinitude: ctx.used_infinitude,
    })
}

/// Reduces a containment formula to constraint form (one logged step),
/// then eliminates.
pub fn eliminate_formula(
    s: &FiniteMultiring,
    phi: &Formula,
    cfg: &EliminationConfig,
) -> Result<Elimination, EliminationError> {
    let mut fresh = formula_var_bound(phi);
    if fresh >= crate::term::MAX_VARS {
        return Err(EliminationError::VariableRange(fresh));
    }
    let reduced = reduce_formula(s, phi, &mut fresh);
    let mut out = eliminate(s, &reduced, cfg)?;
    let input_hash = content_hash(&format!("{phi:?}"));
    out.trace.insert(
        0,
        TraceStep {
            kind: StepKind::Reduce,
            input_hash,
            output_hash: content_hash(&reduced.canonical_text(s)),
            provisos: vec!["strict-left atoms reduce exactly".into()],
        },
    );
    Ok(out)
}

/// Reruns the pipeline and compares every step hash and the result.
pub fn replay(
    s: &FiniteMultiring,
    phi: &QFormula,
    cfg: &EliminationConfig,
    expected: &Elimination,
) -> bool {
    match eliminate(s, phi, cfg) {
        Ok(again) => again == *expected,
        Err(_) => false,
    }
}

fn formula_var_bound(phi: &Formula) -> u32 {
    // free and bound variables both matter for freshness
    fn term_bound(t: &crate::term::Term) -> u32 {
        use crate::term::TermNode;
        match t.node() {
            TermNode::Var(i) => i + 1,
            TermNode::Zero | TermNode::One | TermNode::Lit(_) => 0,
            TermNode::Neg(u) => term_bound(u),
            TermNode::Add(u, v) | TermNode::Mul(u, v) => term_bound(u).max(term_bound(v)),
        }
    }
    use crate::formula::FormulaNode;
    match phi.node() {
        FormulaNode::Atom(a, b) => term_bound(a).max(term_bound(b)),
        FormulaNode::Not(f) => formula_var_bound(f),
        FormulaNode::And(a, b)
        | FormulaNode::Or(a, b)
        | FormulaNode::Implies(a, b)
        | FormulaNode::Iff(a, b) => formula_var_bound(a).max(formula_var_bound(b)),
        FormulaNode::Forall(i, f) | FormulaNode::Exists(i, f) => {
            (*i + 1).max(formula_var_bound(f))
        }
    }
}

fn eliminate_node(ctx: &mut Ctx<'_>, phi: &QFormula) -> Result<QFormula, EliminationError> {
    Ok(match phi {
        QFormula::Atom(_) => phi.clone(),
        QFormula::Not(f) => QFormula::Not(Box::new(eliminate_node(ctx, f)?)),
        QFormula::And(fs) => QFormula::and_all(
            fs.iter().map(|f| eliminate_node(ctx, f)).collect::<Result<Vec<_>, _>>()?,
        ),
        QFormula::Or(fs) => QFormula::or_all(
            fs.iter().map(|f| eliminate_node(ctx, f)).collect::<Result<Vec<_>, _>>()?,
        ),
        QFormula::Exists(y, body) => {
            let b = eliminate_node(ctx, body)?;
            eliminate_exists(ctx, *y, &b)?
        }
        QFormula::Forall(y, body) => {
            let b = eliminate_node(ctx, body)?;
            let inner = eliminate_exists(ctx, *y, &QFormula::Not(Box::new(b)))?;
            QFormula::Not(Box::new(inner))
        }
    })
}

/// Negation normal form of a quantifier-free formula: negation vanishes
/// into constraint polarities.
fn nnf(phi: &QFormula, negated: bool) -> QFormula {
    match phi {
        QFormula::Atom(c) => {
            QFormula::Atom(if negated { c.negated() } else { c.clone() })
        }
        QFormula::Not(f) => nnf(f, !negated),
        QFormula::And(fs) => {
            let parts = fs.iter().map(|f| nnf(f, negated)).collect();
            if negated {
                QFormula::Or(parts)
            } else {
                QFormula::And(parts)
            }
        }
        QFormula::Or(fs) => {
            let parts = fs.iter().map(|f| nnf(f, negated)).collect();
            if negated {
                QFormula::And(parts)
            } else {
                QFormula::Or(parts)
            }
        }
        QFormula::Exists(_, _) | QFormula::Forall(_, _) => {
            unreachable!("bodies are quantifier-free during clause extraction")
        }
    }
}

type Clause = Vec<PolyConstraint>;

/// Simplifies one literal: ground constraints fold to truth values.
enum Lit {
    True,
    False,
    Keep(PolyConstraint),
}

fn simplify_literal(s: &FiniteMultiring, c: &PolyConstraint) -> Lit {
    if c.vars().is_empty() {
        if c.holds(s, &Valuation::new()) {
            Lit::True
        } else {
            Lit::False
        }
    } else {
        Lit::Keep(c.clone())
    }
}

/// Adds a literal to a clause under construction; `None` kills the clause.
fn push_literal(s: &FiniteMultiring, clause: &mut Clause, c: &PolyConstraint) -> Option<()> {
    match simplify_literal(s, c) {
        Lit::True => Some(()),
        Lit::False => None,
        Lit::Keep(c) => {
            if clause.iter().any(|d| *d == c.negated()) {
                return None;
            }
            if !clause.contains(&c) {
                clause.push(c);
            }
            Some(())
        }
    }
}

/// Disjunctive normal form as a clause list, capped.
fn dnf_clauses(
    s: &FiniteMultiring,
    phi: &QFormula,
    cap: usize,
) -> Result<Vec<Clause>, EliminationError> {
    fn go(
        s: &FiniteMultiring,
        phi: &QFormula,
        cap: usize,
    ) -> Result<Vec<Clause>, EliminationError> {
        Ok(match phi {
            QFormula::Atom(c) => match simplify_literal(s, c) {
                Lit::True => vec![Vec::new()],
                Lit::False => Vec::new(),
                Lit::Keep(c) => vec![vec![c]],
            },
            QFormula::Or(fs) => {
                let mut out = Vec::new();
                for f in fs {
                    out.extend(go(s, f, cap)?);
                    if out.len() > cap {
                        return Err(EliminationError::ClauseCapExceeded(cap));
                    }
                }
                out
            }
            QFormula::And(fs) => {
                let mut acc: Vec<Clause> = vec![Vec::new()];
                for f in fs {
                    let rhs = go(s, f, cap)?;
                    let mut next = Vec::new();
                    for left in &acc {
                        'rh: for right in &rhs {
                            let mut clause = left.clone();
                            for c in right {
                                if push_literal(s, &mut clause, c).is_none() {
                                    continue 'rh;
                                }
                            }
                            next.push(clause);
                            if next.len() > cap {
                                return Err(EliminationError::ClauseCapExceeded(cap));
                            }
                        }
                    }
                    acc = next;
                }
                acc
            }
            QFormula::Not(_) => unreachable!("negation normal form has no Not nodes"),
            QFormula::Exists(_, _) | QFormula::Forall(_, _) => {
                unreachable!("bodies are quantifier-free")
            }
        })
    }
    let normal = nnf(phi, false);
    let mut clauses = go(s, &normal, cap)?;
    for c in clauses.iter_mut() {
        c.sort();
    }
    Ok(clauses)
}

fn clause_formula(clause: &Clause) -> QFormula {
    QFormula::and_all(clause.iter().cloned().map(QFormula::Atom).collect())
}

fn eliminate_exists(
    ctx: &mut Ctx<'_>,
    y: u32,
    body: &QFormula,
) -> Result<QFormula, EliminationError> {
    ctx.fuel = ctx.fuel.checked_sub(1).expect("elimination recursion exhausted its budget");
    let clauses = dnf_clauses(ctx.s, body, ctx.cfg.max_clauses)?;
    let mut parts = Vec::with_capacity(clauses.len());
    for clause in clauses {
        parts.push(eliminate_clause(ctx, y, clause)?);
    }
    Ok(QFormula::or_all(parts))
}

fn eliminate_clause(
    ctx: &mut Ctx<'_>,
    y: u32,
    clause: Clause,
) -> Result<QFormula, EliminationError> {
    let s = ctx.s;
    let mut hoisted: Vec<QFormula> = Vec::new();
    let mut members: Vec<FormalPoly> = Vec::new();
    let mut inequations: Vec<FormalPoly> = Vec::new();
    for c in &clause {
        if c.poly.deg_in(y) == 0 {
            hoisted.push(QFormula::Atom(c.clone()));
        } else {
            match c.polarity {
                Polarity::Member => members.push(c.poly.clone()),
                Polarity::NotMember => inequations.push(c.poly.clone()),
            }
        }
    }

    let core = if members.len() >= 2 {
        // One case split; the recursion re-enters with a smaller
        // combined Y-degree.
        members.sort_by_key(|f| f.deg_in(y));
        let p = members.first().unwrap().clone();
        let q = members.last().unwrap().clone();
        let rest: Vec<PolyConstraint> = members[1..members.len() - 1]
            .iter()
            .cloned()
            .map(PolyConstraint::member)
            .chain(inequations.iter().cloned().map(PolyConstraint::not_member))
            .collect();
        let split = part_a_case_split(s, y, &p, &q);
        let input = QFormula::Exists(y, Box::new(clause_formula(&clause)));
        let rewritten = QFormula::and_all(
            std::iter::once(split.clone())
                .chain(rest.iter().cloned().map(QFormula::Atom))
                .collect(),
        );
        ctx.log(StepKind::PartA, &input, &rewritten, vec!["gamma(K)".into()]);
        eliminate_exists(ctx, y, &rewritten)?
    } else if members.len() == 1 {
        let p = members.pop().unwrap();
        let g = match inequations.len() {
            0 => None,
            1 => Some(inequations[0].clone()),
            _ => {
                let merged = merge_inequations(s, &inequations);
                let input = QFormula::and_all(
                    inequations.iter().cloned().map(QFormula::not_member).collect(),
                );
                let output = QFormula::not_member(merged.clone());
                ctx.log(StepKind::Merge, &input, &output, vec!["2-domain transfer".into()]);
                Some(merged)
            }
        };
        let input = QFormula::Exists(y, Box::new(clause_formula(&clause)));
        let (skeleton, residuals) = part_b_branches(s, y, &p, g.as_ref());
        let rewritten = skeleton_formula(y, &skeleton, &residuals, None);
        ctx.log(
            StepKind::PartB,
            &input,
            &rewritten,
            vec!["gamma-tilde(K): algebraic closure".into(), "k = deg_Y(p)".into()],
        );
        ctx.used_ac = true;
        // each residual ∃Y[0∉r] falls to part C (or drops when Y-free)
        let mut solved = Vec::with_capacity(residuals.len());
        for r in &residuals {
            solved.push(eliminate_exists(ctx, y, &QFormula::not_member(r.clone()))?);
        }
        skeleton_formula(y, &skeleton, &residuals, Some(&solved))
    } else if !inequations.is_empty() {
        let g = if inequations.len() > 1 {
            let merged = merge_inequations(s, &inequations);
            let input = QFormula::and_all(
                inequations.iter().cloned().map(QFormula::not_member).collect(),
            );
            let output = QFormula::not_member(merged.clone());
            ctx.log(StepKind::Merge, &input, &output, vec!["2-domain transfer".into()]);
            merged
        } else {
            inequations.pop().unwrap()
        };
        let input = QFormula::Exists(y, Box::new(QFormula::not_member(g.clone())));
        let out = eliminate_part_c(s, y, &g);
        ctx.log(
            StepKind::PartC,
            &input,
            &out,
            vec!["gamma-tilde(K): infinitude".into()],
        );
        ctx.used_infinitude = true;
        out
    } else {
        // no Y at all: the quantifier drops over a nonempty carrier
        QFormula::always_true()
    };

    hoisted.push(core);
    Ok(QFormula::and_all(hoisted))
}

/// The single case split replacing `[0∈p ∧ 0∈q]`, as a disjunction over
/// the effective leading coefficient of `p`:
/// branch `j`: `0∈a_k ∧ .. ∧ 0∈a_{j+1} ∧ 0∉a_j ∧ 0∈p_j ∧ 0∈r_j`, plus
/// the branch where every coefficient may vanish and `q` remains.
pub fn part_a_case_split(
    s: &FiniteMultiring,
    y: u32,
    p: &FormalPoly,
    q: &FormalPoly,
) -> QFormula {
    let k = p.deg_in(y);
    let d = q.deg_in(y).max(1);
    let mut branches = Vec::with_capacity(k as usize + 2);
    for j in 0..=k {
        let mut conds = Vec::new();
        for l in (j + 1)..=k {
            conds.push(QFormula::member(p.coeff_in(s, y, l)));
        }
        conds.push(QFormula::not_member(p.coeff_in(s, y, j)));
        let p_j = p.truncate_in(s, y, j);
        let r_j = if p_j.deg_in(y) >= 1 {
            super::formal::pseudo_divide(s, q, &p_j, y, d).1
        } else {
            FormalPoly::zero()
        };
        conds.push(QFormula::member(p_j));
        conds.push(QFormula::member(r_j));
        branches.push(QFormula::and_all(conds));
    }
    let mut all_zero: Vec<QFormula> =
        (0..=k).map(|l| QFormula::member(p.coeff_in(s, y, l))).collect();
    all_zero.push(QFormula::member(q.clone()));
    branches.push(QFormula::and_all(all_zero));
    QFormula::or_all(branches)
}

/// Applies part-A case splits until every `∃Y` clause has at most one
/// membership constraint involving `Y`. Quantifiers stay in place; parts
/// B and C are not applied. Returns the input unchanged when no clause
/// has two members.
pub fn eliminate_part_a(
    s: &FiniteMultiring,
    y: u32,
    phi: &QFormula,
    cfg: &EliminationConfig,
) -> Result<QFormula, EliminationError> {
    let body = match phi {
        QFormula::Exists(var, body) if *var == y => body.as_ref().clone(),
        other => other.clone(),
    };
    let clauses = dnf_clauses(s, &body, cfg.max_clauses)?;
    let mut out = Vec::new();
    let mut changed = false;
    let mut work: Vec<Clause> = clauses;
    while let Some(clause) = work.pop() {
        let mut members: Vec<FormalPoly> = clause
            .iter()
            .filter(|c| c.polarity == Polarity::Member && c.poly.deg_in(y) >= 1)
            .map(|c| c.poly.clone())
            .collect();
        if members.len() < 2 {
            out.push(QFormula::Exists(y, Box::new(clause_formula(&clause))));
            continue;
        }
        changed = true;
        members.sort_by_key(|f| f.deg_in(y));
        let p = members.first().unwrap().clone();
        let q = members.last().unwrap().clone();
        let rest: Vec<QFormula> = clause
            .iter()
            .filter(|c| {
                !(c.polarity == Polarity::Member && (c.poly == p || c.poly == q))
                    || c.poly.deg_in(y) == 0
            })
            .cloned()
            .map(QFormula::Atom)
            .collect();
        let split = part_a_case_split(s, y, &p, &q);
        let rewritten =
            QFormula::and_all(std::iter::once(split).chain(rest.into_iter()).collect());
        work.extend(dnf_clauses(s, &rewritten, cfg.max_clauses)?);
    }
    if !changed && out.len() == 1 {
        return Ok(phi.clone());
    }
    Ok(QFormula::or_all(out))
}

/// Part-B data: branch conditions plus, per branch, the residual
/// polynomial whose inequation stays under `∃Y`.
struct PartBSkeleton {
    /// Y-free branch conditions, one vector per branch.
    conds: Vec<Vec<QFormula>>,
}

fn part_b_branches(
    s: &FiniteMultiring,
    y: u32,
    p: &FormalPoly,
    g: Option<&FormalPoly>,
) -> (PartBSkeleton, Vec<FormalPoly>) {
    let one = FormalPoly::one(s);
    let g = g.cloned().unwrap_or(one);
    let k = p.deg_in(y);
    let q = formal_pow(s, &g, k);
    let d = q.deg_in(y);
    let mut conds = Vec::with_capacity(k as usize + 2);
    let mut residuals = Vec::with_capacity(k as usize + 2);
    for j in 0..=k {
        let mut branch = Vec::new();
        for l in (j + 1)..=k {
            branch.push(QFormula::member(p.coeff_in(s, y, l)));
        }
        branch.push(QFormula::not_member(p.coeff_in(s, y, j)));
        let p_j = p.truncate_in(s, y, j);
        let r_j = if p_j.deg_in(y) >= 1 {
            super::formal::pseudo_divide(s, &q, &p_j, y, d).1
        } else {
            FormalPoly::zero()
        };
        conds.push(branch);
        residuals.push(r_j);
    }
    // all coefficients may vanish: p covers the zero polynomial and the
    // clause collapses to the inequation alone
    let branch: Vec<QFormula> = (0..=k).map(|l| QFormula::member(p.coeff_in(s, y, l))).collect();
    conds.push(branch);
    residuals.push(g);
    (PartBSkeleton { conds }, residuals)
}

fn skeleton_formula(
    y: u32,
    skeleton: &PartBSkeleton,
    residuals: &[FormalPoly],
    solved: Option<&[QFormula]>,
) -> QFormula {
    let branches = skeleton
        .conds
        .iter()
        .enumerate()
        .map(|(i, conds)| {
            let tail = match solved {
                Some(solved) => solved[i].clone(),
                None => QFormula::Exists(y, Box::new(QFormula::not_member(residuals[i].clone()))),
            };
            QFormula::and_all(conds.iter().cloned().chain(std::iter::once(tail)).collect())
        })
        .collect();
    QFormula::or_all(branches)
}

/// The part-B rewrite of `∃Y[0∈p ∧ 0∉g]` (pass `g = None` when there is
/// no inequation): a disjunction over the effective leading coefficient
/// of `p`, with residual statements `∃Y[0∉r_j]`. Sound over models of
/// the algebraic-closure axioms.
pub fn eliminate_part_b(
    s: &FiniteMultiring,
    y: u32,
    p: &FormalPoly,
    g: Option<&FormalPoly>,
) -> QFormula {
    let (skeleton, residuals) = part_b_branches(s, y, p, g);
    let branches = skeleton
        .conds
        .iter()
        .enumerate()
        .map(|(i, conds)| {
            let residual =
                QFormula::Exists(y, Box::new(QFormula::not_member(residuals[i].clone())));
            QFormula::and_all(conds.iter().cloned().chain(std::iter::once(residual)).collect())
        })
        .collect();
    QFormula::or_all(branches)
}

/// The part-C rewrite: `∃Y[0∉ a_l·Y^l + ... + a_0]` becomes
/// `0∉a_l ∨ ... ∨ 0∉a_0`. Valid over infinite 1-fields only; finite
/// models can falsify it.
pub fn eliminate_part_c(s: &FiniteMultiring, y: u32, g: &FormalPoly) -> QFormula {
    let l = g.deg_in(y);
    QFormula::or_all((0..=l).map(|i| QFormula::not_member(g.coeff_in(s, y, i))).collect())
}
