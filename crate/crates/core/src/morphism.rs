//! Morphisms of finite multirings and the exhaustive morphism check.

use crate::structure::FiniteMultiring;
use crate::subset::{Elem, Subset};
use serde::Serialize;

/// A total map between the carriers of two structures.
#[derive(Clone, Debug)]
pub struct Morphism<'a> {
    pub source: &'a FiniteMultiring,
    pub target: &'a FiniteMultiring,
    pub map: Vec<Elem>,
}

impl<'a> Morphism<'a> {
    pub fn new(source: &'a FiniteMultiring, target: &'a FiniteMultiring, map: Vec<Elem>) -> Morphism<'a> {
        assert_eq!(map.len(), source.carrier_size(), "map must be total on the source");
        assert!(map.iter().all(|&e| e < target.carrier_size()));
        Morphism { source, target, map }
    }

    pub fn identity(s: &'a FiniteMultiring) -> Morphism<'a> {
        Morphism { source: s, target: s, map: s.elements().collect() }
    }

    pub fn apply(&self, a: Elem) -> Elem {
        self.map[a]
    }

    /// Image of a source subset in the target.
    pub fn image(&self, s: &Subset) -> Subset {
        Subset::from_elems(
            self.target.carrier_size(),
            &s.iter().map(|e| self.map[e]).collect::<Vec<_>>(),
        )
        .unwrap()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MorphismReport {
    pub is_morphism: bool,
    pub is_strong: bool,
    /// First failed condition with the offending tuple (source display
    /// names), when any.
    pub witness: Option<(String, Vec<String>)>,
}

/// Checks the morphism conditions exhaustively:
/// (i) `c ∈ a+b ⇒ f(c) ∈ f(a)+f(b)`, (ii) `f(-a) = -f(a)`,
/// (iii) `f(0) = 0`, (iv) `c ∈ a·b ⇒ f(c) ∈ f(a)·f(b)` (for strict
/// multiplication this is `f(ab) = f(a)f(b)`), (v) `f(1) = 1`.
/// Strong means additionally `f(a+b) = f(a)+f(b)` setwise, and likewise
/// for a multivalued product.
pub fn check_morphism(f: &Morphism<'_>) -> MorphismReport {
    let s = f.source;
    let t = f.target;
    let fail = |cond: &str, elems: &[Elem]| MorphismReport {
        is_morphism: false,
        is_strong: false,
        witness: Some((
            cond.to_string(),
            elems.iter().map(|&e| s.display_name(e).to_string()).collect(),
        )),
    };

    if f.apply(s.zero()) != t.zero() {
        return fail("zero", &[s.zero()]);
    }
    if f.apply(s.one()) != t.one() {
        return fail("one", &[s.one()]);
    }
    for a in s.elements() {
        if f.apply(s.neg(a)) != t.neg(f.apply(a)) {
            return fail("negation", &[a]);
        }
        for b in s.elements() {
            for c in s.add(a, b).iter() {
                if !t.add(f.apply(a), f.apply(b)).contains(f.apply(c)) {
                    return fail("addition", &[a, b, c]);
                }
            }
            for c in s.mul(a, b).iter() {
                if !t.mul(f.apply(a), f.apply(b)).contains(f.apply(c)) {
                    return fail("multiplication", &[a, b, c]);
                }
            }
        }
    }

    // Morphism holds; decide strength setwise.
    let mut strong = true;
    'outer: for a in s.elements() {
        for b in s.elements() {
            let add_img = f.image(&s.add(a, b));
            if add_img != t.add(f.apply(a), f.apply(b)) {
                strong = false;
                break 'outer;
            }
            let mul_img = f.image(&s.mul(a, b));
            if mul_img != t.mul(f.apply(a), f.apply(b)) {
                strong = false;
                break 'outer;
            }
        }
    }
    MorphismReport { is_morphism: true, is_strong: strong, witness: None }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builtins::{make_builtin, Builtin};

    #[test]
    fn identity_is_a_strong_morphism() {
        let h3 = make_builtin(Builtin::Hp(3)).unwrap();
        let r = check_morphism(&Morphism::identity(&h3));
        assert!(r.is_morphism && r.is_strong);
    }

    #[test]
    fn absolute_value_from_signs_to_krasner() {
        let q2 = make_builtin(Builtin::Signs).unwrap();
        let k = make_builtin(Builtin::Krasner).unwrap();
        // 0 -> 0, 1 -> 1, -1 -> 1
        let map = vec![0, 1, 1];
        let f = Morphism::new(&q2, &k, map);
        let r = check_morphism(&f);
        assert!(r.is_morphism);
        // f(1+1) = f({1}) = {1} but f(1)+f(1) = 1+1 = {0,1}: not strong
        assert!(!r.is_strong);
    }

    #[test]
    fn collapsing_one_to_zero_fails_unit_condition() {
        let q2 = make_builtin(Builtin::Signs).unwrap();
        let k = make_builtin(Builtin::Krasner).unwrap();
        let f = Morphism::new(&q2, &k, vec![0, 0, 0]);
        let r = check_morphism(&f);
        assert!(!r.is_morphism);
        assert_eq!(r.witness.unwrap().0, "one");
    }

    #[test]
    fn h2_is_krasner_up_to_renaming() {
        let h2 = make_builtin(Builtin::Hp(2)).unwrap();
        let k = make_builtin(Builtin::Krasner).unwrap();
        let f = Morphism::new(&h2, &k, vec![0, 1]);
        let r = check_morphism(&f);
        assert!(r.is_morphism && r.is_strong);
    }

    #[test]
    fn breaking_addition_is_reported_with_a_triple() {
        let z3 = make_builtin(Builtin::Zmod(3)).unwrap();
        let z6 = make_builtin(Builtin::Zmod(6)).unwrap();
        // 0->0, 1->1, 2->5 respects negation and products but not sums:
        // 2 ∈ 1+1 in Z/3 while f(2)=5 is not 1+1=2 in Z/6.
        let f = Morphism::new(&z3, &z6, vec![0, 1, 5]);
        let r = check_morphism(&f);
        assert!(!r.is_morphism);
        let (cond, w) = r.witness.unwrap();
        assert_eq!(cond, "addition");
        assert_eq!(w, vec!["1", "1", "2"]);
    }
}
