//! Computer algebra for finite multialgebras: multirings, hyperfields and
//! superrings with set-valued operations.
//!
//! The crate provides:
//!
//! - terms, formulas and exhaustive satisfaction over finite carriers
//!   ([`term`], [`formula`], [`eval`]);
//! - the classical small structures (Krasner, signs, `H_p`, kaleidoscopes,
//!   `Z/m`) with exhaustive axiom checking ([`builtins`], [`axioms`]);
//! - quotient multigroups, ideals, characteristic, morphism checks and the
//!   rational triangle hyperfield ([`quotient`], [`ideals`], [`morphism`],
//!   [`interval`]);
//! - set-valued polynomial arithmetic with Euclidean division, root
//!   finding and algebraic-closure probes ([`poly`]);
//! - a symbolic quantifier-elimination engine for algebraically closed
//!   multifields with model-based step validation ([`qe`]);
//! - a canonical text format for structure tables and polynomials
//!   ([`textfmt`]).

pub mod axioms;
pub mod builtins;
pub mod error;
pub mod eval;
pub mod first_order;
pub mod formula;
pub mod ideals;
pub mod interval;
pub mod morphism;
pub mod normalize;
pub mod poly;
pub mod qe;
pub mod quotient;
pub mod signature;
pub mod structure;
pub mod subset;
pub mod term;
pub mod textfmt;

pub use formula::Formula;
pub use structure::FiniteMultiring;
pub use subset::{Elem, Subset};
pub use term::{Term, Valuation, VarSet};
