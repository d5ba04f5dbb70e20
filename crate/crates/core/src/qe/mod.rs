//! Symbolic quantifier elimination for algebraically closed multifields,
//! with exhaustive model-based validation of each rewriting step.

mod constraint;
mod eliminate;
mod formal;
mod gamma;
mod reduce;

pub use constraint::{
    check_equivalence_on_model, fold_ground, qsatisfies, EquivalenceReport, PolyConstraint,
    Polarity, QFormula,
};
pub use eliminate::{
    content_hash, eliminate, eliminate_formula, eliminate_part_a, eliminate_part_b,
    eliminate_part_c, part_a_case_split, replay, Elimination, EliminationConfig, StepKind,
    TraceStep,
};
pub use formal::{
    eval_formal, formal_add, formal_mul, formal_neg, formal_pow, pseudo_divide, FormalPoly,
    Monomial,
};
pub use gamma::{ac_axiom, axioms_tilde, infinitude_axiom};
pub use reduce::{merge_inequations, reduce_atomic, reduce_formula, term_to_formal};
