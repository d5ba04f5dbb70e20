//! Algebraic-closedness probes: does every nonconstant polynomial up to a
//! degree bound have a root?

use super::{enumerate_multipolys, roots, MultiPoly};
use crate::structure::FiniteMultiring;
use serde::Serialize;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClosureReport {
    pub closed: bool,
    /// First rootless nonconstant polynomial in enumeration order.
    pub witness: Option<MultiPoly>,
}

/// Enumerates every nonconstant polynomial of usual degree `1..=max_deg`
/// (nonzero leading coefficient) and checks for a root. Degrees ascend
/// and coefficients ascend lexicographically, so the witness is the
/// first rootless polynomial in that order.
pub fn is_algebraically_closed_upto(s: &FiniteMultiring, max_deg: usize) -> ClosureReport {
    assert!(max_deg >= 1);
    for p in enumerate_multipolys(s, max_deg + 1) {
        if p.paper_deg() < 2 {
            continue; // constants and zero
        }
        if roots(s, &p).is_empty() {
            return ClosureReport { closed: false, witness: Some(p) };
        }
    }
    ClosureReport { closed: true, witness: None }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builtins::{make_builtin, Builtin};
    use crate::poly::evaluate;

    #[test]
    fn krasner_is_closed_up_to_degree_five() {
        let k = make_builtin(Builtin::Krasner).unwrap();
        let r = is_algebraically_closed_upto(&k, 5);
        assert!(r.closed);
        assert_eq!(r.witness, None);
    }

    #[test]
    fn signs_close_in_degree_one() {
        let q2 = make_builtin(Builtin::Signs).unwrap();
        let r = is_algebraically_closed_upto(&q2, 1);
        assert!(r.closed);
    }

    #[test]
    fn zmod5_reports_a_rootless_quadratic() {
        let z5 = make_builtin(Builtin::Zmod(5)).unwrap();
        let r = is_algebraically_closed_upto(&z5, 2);
        assert!(!r.closed);
        let w = r.witness.unwrap();
        assert_eq!(w.usual_deg(), Some(2));
        // rootless, rechecked through evaluation
        for a in z5.elements() {
            assert!(!evaluate(&z5, &w, a).contains(z5.zero()));
        }
        // first in enumeration order: 1 + 2X^2
        assert_eq!(w.coeffs(), &[1, 0, 2]);
    }

    #[test]
    fn h3_has_a_rootless_quadratic() {
        // 1 + 2X^2 never reaches 0: squares in H3 are {0,1}, 2·{0,1} = {0,2},
        // and neither 1+0 = {1} nor 1+2 = {1,2} contains 0.
        let h3 = make_builtin(Builtin::Hp(3)).unwrap();
        let r = is_algebraically_closed_upto(&h3, 2);
        assert!(!r.closed);
        let w = r.witness.unwrap();
        for a in h3.elements() {
            assert!(!evaluate(&h3, &w, a).contains(h3.zero()));
        }
    }
}
