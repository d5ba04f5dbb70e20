//! The axiom schemas that extend the 1-field axioms with a structure's
//! diagram: algebraic-closure instances and infinitude instances, emitted
//! as constraint formulas ready for model checking.

use super::constraint::QFormula;
use super::formal::{formal_add, formal_neg, FormalPoly};
use crate::structure::FiniteMultiring;

/// The degree-`n` closure axiom:
/// `∀z_0..z_{n-1} ∃x [0 ∈ z_0 + z_1·x + ... + z_{n-1}·x^{n-1} + x^n]`.
pub fn ac_axiom(s: &FiniteMultiring, n: u32) -> QFormula {
    assert!(n >= 1);
    let x = n; // variables z_0..z_{n-1}, then x
    let mut poly = FormalPoly::monomial(s, s.one(), &[(x, n)]);
    for i in 0..n {
        poly = formal_add(s, &poly, &FormalPoly::monomial(s, s.one(), &[(i, 1), (x, i)]));
    }
    let mut phi = QFormula::Exists(x, Box::new(QFormula::member(poly)));
    for i in (0..n).rev() {
        phi = QFormula::Forall(i, Box::new(phi));
    }
    phi
}

/// The `n`-element infinitude axiom:
/// `∃z_0..z_{n-1} ⋀_{i<j} z_i ≠ z_j`, with `a ≠ b` encoded as
/// `0 ∉ a - b` (exact for strict terms).
pub fn infinitude_axiom(s: &FiniteMultiring, n: u32) -> QFormula {
    assert!(n >= 2);
    let mut distinct = Vec::new();
    for i in 0..n {
        for j in (i + 1)..n {
            let diff =
                formal_add(s, &FormalPoly::var(s, i), &formal_neg(s, &FormalPoly::var(s, j)));
            distinct.push(QFormula::not_member(diff));
        }
    }
    let mut phi = QFormula::and_all(distinct);
    for i in (0..n).rev() {
        phi = QFormula::Exists(i, Box::new(phi));
    }
    phi
}

/// All closure instances up to degree `max_n` and infinitude instances up
/// to `max_n` elements, labeled.
pub fn axioms_tilde(s: &FiniteMultiring, max_n: u32) -> Vec<(String, QFormula)> {
    let mut out = Vec::new();
    for n in 1..=max_n {
        out.push((format!("ac({n})"), ac_axiom(s, n)));
    }
    for n in 2..=max_n {
        out.push((format!("infinitude({n})"), infinitude_axiom(s, n)));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builtins::{make_builtin, Builtin};
    use crate::qe::constraint::qsatisfies;
    use crate::term::Valuation;

    #[test]
    fn krasner_satisfies_low_degree_closure() {
        let k = make_builtin(Builtin::Krasner).unwrap();
        for n in 1..=4 {
            assert!(qsatisfies(&k, &ac_axiom(&k, n), &Valuation::new()), "degree {n}");
        }
    }

    #[test]
    fn infinitude_fails_on_small_carriers() {
        let k = make_builtin(Builtin::Krasner).unwrap();
        assert!(qsatisfies(&k, &infinitude_axiom(&k, 2), &Valuation::new()));
        // three pairwise distinct elements do not fit in two
        assert!(!qsatisfies(&k, &infinitude_axiom(&k, 3), &Valuation::new()));

        let h5 = make_builtin(Builtin::Hp(5)).unwrap();
        assert!(qsatisfies(&h5, &infinitude_axiom(&h5, 3), &Valuation::new()));
        assert!(qsatisfies(&h5, &infinitude_axiom(&h5, 5), &Valuation::new()));
        assert!(!qsatisfies(&h5, &infinitude_axiom(&h5, 6), &Valuation::new()));
    }

    #[test]
    fn zmod5_fails_closure_at_degree_two() {
        // X^2 + z1·X + z0 has no root for suitable z's in Z/5
        let z5 = make_builtin(Builtin::Zmod(5)).unwrap();
        assert!(qsatisfies(&z5, &ac_axiom(&z5, 1), &Valuation::new()));
        assert!(!qsatisfies(&z5, &ac_axiom(&z5, 2), &Valuation::new()));
    }

    #[test]
    fn labeled_schema_listing() {
        let k = make_builtin(Builtin::Krasner).unwrap();
        let axs = axioms_tilde(&k, 3);
        let labels: Vec<&str> = axs.iter().map(|(l, _)| l.as_str()).collect();
        assert_eq!(labels, vec!["ac(1)", "ac(2)", "ac(3)", "infinitude(2)", "infinitude(3)"]);
    }
}
