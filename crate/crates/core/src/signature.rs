//! Multialgebraic signatures.
//!
//! All structures in this library share the ring-like shape: strict
//! constants `0` and `1`, a strict unary `-`, a multivalued binary `+`,
//! and a binary `·` that is strict for 1-rings and may be multivalued for
//! 2-rings. Arities are restricted to 0, 1 and 2.

use serde::Serialize;

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub enum Arity {
    Const,
    Unary,
    Binary,
}

impl Arity {
    pub fn argument_count(self) -> usize {
        match self {
            Arity::Const => 0,
            Arity::Unary => 1,
            Arity::Binary => 2,
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct OpSym {
    pub name: &'static str,
    pub arity: Arity,
    /// Strict symbols are interpreted by single-valued operations.
    pub strict: bool,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct Signature {
    syms: Vec<OpSym>,
}

impl Signature {
    /// The ring-like signature; `mul_strict` selects between the 1-ring
    /// reading (strict `*`) and the 2-ring reading (multivalued `*`).
    pub fn ring(mul_strict: bool) -> Signature {
        Signature {
            syms: vec![
                OpSym { name: "0", arity: Arity::Const, strict: true },
                OpSym { name: "1", arity: Arity::Const, strict: true },
                OpSym { name: "-", arity: Arity::Unary, strict: true },
                OpSym { name: "+", arity: Arity::Binary, strict: false },
                OpSym { name: "*", arity: Arity::Binary, strict: mul_strict },
            ],
        }
    }

    pub fn symbols(&self) -> &[OpSym] {
        &self.syms
    }

    pub fn lookup(&self, name: &str) -> Option<&OpSym> {
        self.syms.iter().find(|s| s.name == name)
    }

    pub fn mul_strict(&self) -> bool {
        self.lookup("*").map(|s| s.strict).unwrap_or(true)
    }

    /// Strict and multivalued symbol names are disjoint and every arity is
    /// at most 2. Holds by construction; exposed for tests.
    pub fn is_well_formed(&self) -> bool {
        let strict: Vec<_> = self.syms.iter().filter(|s| s.strict).map(|s| s.name).collect();
        let multi: Vec<_> = self.syms.iter().filter(|s| !s.strict).map(|s| s.name).collect();
        strict.iter().all(|n| !multi.contains(n))
            && self.syms.iter().all(|s| s.arity.argument_count() <= 2)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ring_signatures_are_well_formed() {
        assert!(Signature::ring(true).is_well_formed());
        assert!(Signature::ring(false).is_well_formed());
        assert!(Signature::ring(true).lookup("*").unwrap().strict);
        assert!(!Signature::ring(false).mul_strict());
        assert!(Signature::ring(false).lookup("+").map(|s| !s.strict).unwrap());
    }
}
