//! Exhaustive axiom verification for finite multirings.
//!
//! Every axiom is decided by iterating all element tuples; a failing entry
//! always carries a concrete counterexample tuple. Profiles bundle the
//! axiom sets of the classical definitions. Associativity of the additive
//! multigroup is checked in its strong (setwise-equal) form; the weaker
//! containment-only form is exposed separately.

use crate::eval::{extend_add, extend_mul, extend_neg};
use crate::structure::FiniteMultiring;
use crate::subset::{Elem, Subset};
use serde::Serialize;
use std::fmt;

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub enum Profile {
    Multigroup,
    Multiring,
    Superring,
    Hyperring,
    Multifield,
    Multidomain,
}

impl Profile {
    pub fn parse(s: &str) -> Option<Profile> {
        Some(match s {
            "multigroup" => Profile::Multigroup,
            "multiring" => Profile::Multiring,
            "superring" => Profile::Superring,
            "hyperring" => Profile::Hyperring,
            "multifield" => Profile::Multifield,
            "multidomain" => Profile::Multidomain,
            _ => return None,
        })
    }
}

impl fmt::Display for Profile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Profile::Multigroup => "multigroup",
            Profile::Multiring => "multiring",
            Profile::Superring => "superring",
            Profile::Hyperring => "hyperring",
            Profile::Multifield => "multifield",
            Profile::Multidomain => "multidomain",
        };
        f.write_str(s)
    }
}

/// Outcome of one axiom check.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct AxiomCheck {
    /// Stable identifier, e.g. `M1`, `M9`, `field-inverses`.
    pub id: String,
    pub holds: bool,
    /// Offending element tuple (display names), present exactly when the
    /// axiom fails.
    pub witness: Option<Vec<String>>,
}

/// A list of axiom outcomes for one profile run.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct AxiomReport {
    pub structure: String,
    pub profile: String,
    pub checks: Vec<AxiomCheck>,
}

impl AxiomReport {
    pub fn pass(&self) -> bool {
        self.checks.iter().all(|c| c.holds)
    }

    pub fn failing_ids(&self) -> Vec<&str> {
        self.checks.iter().filter(|c| !c.holds).map(|c| c.id.as_str()).collect()
    }

    pub fn check(&self, id: &str) -> Option<&AxiomCheck> {
        self.checks.iter().find(|c| c.id == id)
    }

    fn push(&mut self, s: &FiniteMultiring, id: &str, witness: Option<Vec<Elem>>) {
        self.checks.push(AxiomCheck {
            id: id.to_string(),
            holds: witness.is_none(),
            witness: witness.map(|w| w.iter().map(|&e| s.display_name(e).to_string()).collect()),
        });
    }
}

fn single(s: &FiniteMultiring, e: Elem) -> Subset {
    Subset::singleton(s.carrier_size(), e)
}

/// M1: `c ∈ a+b` implies `a ∈ c+(-b)` and `b ∈ (-a)+c`.
fn m1(s: &FiniteMultiring) -> Option<Vec<Elem>> {
    for a in s.elements() {
        for b in s.elements() {
            for c in s.add(a, b).iter() {
                if !s.add(c, s.neg(b)).contains(a) || !s.add(s.neg(a), c).contains(b) {
                    return Some(vec![a, b, c]);
                }
            }
        }
    }
    None
}

/// M2: `b ∈ a+0` iff `a = b`, i.e. `a+0 = {a}`.
fn m2(s: &FiniteMultiring) -> Option<Vec<Elem>> {
    let z = s.zero();
    s.elements().find(|&a| s.add(a, z) != single(s, a)).map(|a| vec![a])
}

/// M3 (strong form): `(a+b)+c = a+(b+c)` setwise.
fn m3(s: &FiniteMultiring) -> Option<Vec<Elem>> {
    for a in s.elements() {
        for b in s.elements() {
            for c in s.elements() {
                let left = extend_add(s, &s.add(a, b), &single(s, c));
                let right = extend_add(s, &single(s, a), &s.add(b, c));
                if left != right {
                    return Some(vec![a, b, c]);
                }
            }
        }
    }
    None
}

/// M4: `a+b = b+a`.
fn m4(s: &FiniteMultiring) -> Option<Vec<Elem>> {
    for a in s.elements() {
        for b in s.elements() {
            if s.add(a, b) != s.add(b, a) {
                return Some(vec![a, b]);
            }
        }
    }
    None
}

/// The containment-only associativity `(a+b)+c ⊑ a+(b+c)`; apparently
/// weaker than the setwise M3 and checkable on its own.
pub fn weak_associativity(s: &FiniteMultiring) -> Option<Vec<Elem>> {
    for a in s.elements() {
        for b in s.elements() {
            for c in s.elements() {
                let left = extend_add(s, &s.add(a, b), &single(s, c));
                let right = extend_add(s, &single(s, a), &s.add(b, c));
                if !left.is_subset_of(&right) {
                    return Some(vec![a, b, c]);
                }
            }
        }
    }
    None
}

/// Multiplication strictness: every `a·b` is a singleton.
fn mul_strictness(s: &FiniteMultiring) -> Option<Vec<Elem>> {
    for a in s.elements() {
        for b in s.elements() {
            if !s.mul(a, b).is_singleton() {
                return Some(vec![a, b]);
            }
        }
    }
    None
}

/// M5: `(a·b)·c = a·(b·c)` setwise.
fn m5(s: &FiniteMultiring) -> Option<Vec<Elem>> {
    for a in s.elements() {
        for b in s.elements() {
            for c in s.elements() {
                let left = extend_mul(s, &s.mul(a, b), &single(s, c));
                let right = extend_mul(s, &single(s, a), &s.mul(b, c));
                if left != right {
                    return Some(vec![a, b, c]);
                }
            }
        }
    }
    None
}

/// M6: `a·1 = {a}` (and `1·a = {a}`).
fn m6(s: &FiniteMultiring) -> Option<Vec<Elem>> {
    let one = s.one();
    s.elements()
        .find(|&a| s.mul(a, one) != single(s, a) || s.mul(one, a) != single(s, a))
        .map(|a| vec![a])
}

/// M7: `a·b = b·a`.
fn m7(s: &FiniteMultiring) -> Option<Vec<Elem>> {
    for a in s.elements() {
        for b in s.elements() {
            if s.mul(a, b) != s.mul(b, a) {
                return Some(vec![a, b]);
            }
        }
    }
    None
}

/// M8: zero absorbs, `a·0 = {0}`.
fn m8(s: &FiniteMultiring) -> Option<Vec<Elem>> {
    let z = s.zero();
    s.elements()
        .find(|&a| s.mul(a, z) != single(s, z) || s.mul(z, a) != single(s, z))
        .map(|a| vec![a])
}

/// M9 (weak distributivity): `c·(a+b) ⊆ c·a + c·b`.
fn m9(s: &FiniteMultiring) -> Option<Vec<Elem>> {
    for c in s.elements() {
        for a in s.elements() {
            for b in s.elements() {
                let left = extend_mul(s, &single(s, c), &s.add(a, b));
                let right = extend_add(s, &s.mul(c, a), &s.mul(c, b));
                if !left.is_subset_of(&right) {
                    return Some(vec![c, a, b]);
                }
            }
        }
    }
    None
}

/// Full distributivity: `c·(a+b) = c·a + c·b` setwise.
fn full_distributivity(s: &FiniteMultiring) -> Option<Vec<Elem>> {
    for c in s.elements() {
        for a in s.elements() {
            for b in s.elements() {
                let left = extend_mul(s, &single(s, c), &s.add(a, b));
                let right = extend_add(s, &s.mul(c, a), &s.mul(c, b));
                if left != right {
                    return Some(vec![c, a, b]);
                }
            }
        }
    }
    None
}

/// Rule of signs: `-(a·b) = (-a)·b = a·(-b)` setwise.
fn rule_of_signs(s: &FiniteMultiring) -> Option<Vec<Elem>> {
    for a in s.elements() {
        for b in s.elements() {
            let base = extend_neg(s, &s.mul(a, b));
            if base != s.mul(s.neg(a), b) || base != s.mul(a, s.neg(b)) {
                return Some(vec![a, b]);
            }
        }
    }
    None
}

fn nontrivial(s: &FiniteMultiring) -> Option<Vec<Elem>> {
    if s.zero() == s.one() {
        Some(vec![s.zero()])
    } else {
        None
    }
}

/// Every nonzero element has a multiplicative inverse: `1 ∈ a·b` for some b.
fn inverses(s: &FiniteMultiring) -> Option<Vec<Elem>> {
    s.elements()
        .filter(|&a| a != s.zero())
        .find(|&a| s.inverse(a).is_none())
        .map(|a| vec![a])
}

/// No zero divisors: `0 ∈ a·b` implies `a = 0` or `b = 0`.
fn no_zero_divisors(s: &FiniteMultiring) -> Option<Vec<Elem>> {
    let z = s.zero();
    for a in s.elements() {
        for b in s.elements() {
            if a != z && b != z && s.mul(a, b).contains(z) {
                return Some(vec![a, b]);
            }
        }
    }
    None
}

fn additive_multigroup_checks(s: &FiniteMultiring, report: &mut AxiomReport) {
    report.push(s, "M1", m1(s));
    report.push(s, "M2", m2(s));
    report.push(s, "M3", m3(s));
    report.push(s, "M4", m4(s));
}

fn multiring_checks(s: &FiniteMultiring, report: &mut AxiomReport) {
    additive_multigroup_checks(s, report);
    report.push(s, "mul-strict", mul_strictness(s));
    report.push(s, "M5", m5(s));
    report.push(s, "M6", m6(s));
    report.push(s, "M7", m7(s));
    report.push(s, "M8", m8(s));
    report.push(s, "M9", m9(s));
}

fn superring_checks(s: &FiniteMultiring, report: &mut AxiomReport) {
    additive_multigroup_checks(s, report);
    report.push(s, "S5", m5(s));
    report.push(s, "S6", m6(s));
    report.push(s, "S7", m7(s));
    report.push(s, "S8", m8(s));
    report.push(s, "S9", m9(s));
    report.push(s, "signs", rule_of_signs(s));
}

/// Checks the axiom set of the requested profile by exhaustion.
pub fn check_axioms(s: &FiniteMultiring, profile: Profile) -> AxiomReport {
    let mut report = AxiomReport {
        structure: s.name().to_string(),
        profile: profile.to_string(),
        checks: Vec::new(),
    };
    match profile {
        Profile::Multigroup => additive_multigroup_checks(s, &mut report),
        Profile::Multiring => multiring_checks(s, &mut report),
        Profile::Superring => superring_checks(s, &mut report),
        Profile::Hyperring => {
            multiring_checks(s, &mut report);
            report.push(s, "full-distributivity", full_distributivity(s));
        }
        Profile::Multifield => {
            multiring_checks(s, &mut report);
            report.push(s, "nontrivial", nontrivial(s));
            report.push(s, "field-inverses", inverses(s));
        }
        Profile::Multidomain => {
            multiring_checks(s, &mut report);
            report.push(s, "nontrivial", nontrivial(s));
            report.push(s, "no-zero-divisors", no_zero_divisors(s));
        }
    }
    report
}

/// The four basic multiring identities: `-0 = 0`, `-(-x) = x`,
/// `z ⊑ x+y ↔ -y ⊑ x + (-z)`, and `-(xy) = (-x)y = x(-y)`.
pub fn check_sign_identities(s: &FiniteMultiring) -> AxiomReport {
    let mut report = AxiomReport {
        structure: s.name().to_string(),
        profile: "sign-identities".to_string(),
        checks: Vec::new(),
    };
    // (a) -0 = 0
    let a = (s.neg(s.zero()) != s.zero()).then(|| vec![s.zero()]);
    report.push(s, "neg-zero", a);
    // (b) -(-x) = x
    let b = s.elements().find(|&x| s.neg(s.neg(x)) != x).map(|x| vec![x]);
    report.push(s, "neg-involution", b);
    // (c) z ∈ x+y iff -y ∈ x+(-z): both sides say y ∈ (-x)+z via M1
    let mut c = None;
    'outer: for x in s.elements() {
        for y in s.elements() {
            for z in s.elements() {
                let lhs = s.add(x, y).contains(z);
                let rhs = s.add(x, s.neg(z)).contains(s.neg(y));
                if lhs != rhs {
                    c = Some(vec![x, y, z]);
                    break 'outer;
                }
            }
        }
    }
    report.push(s, "neg-exchange", c);
    // (d) rule of signs
    report.push(s, "neg-product", rule_of_signs(s));
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builtins::{make_builtin, Builtin};
    use crate::subset::Subset;

    #[test]
    fn builtins_pass_their_asserted_profiles() {
        for kind in [Builtin::Krasner, Builtin::Signs, Builtin::Hp(3), Builtin::Hp(5)] {
            let s = make_builtin(kind).unwrap();
            let r = check_axioms(&s, Profile::Multifield);
            assert!(r.pass(), "{}: {:?}", s.name(), r.failing_ids());
        }
        let x2 = make_builtin(Builtin::Kaleidoscope(2)).unwrap();
        assert!(check_axioms(&x2, Profile::Multiring).pass());
        let z5 = make_builtin(Builtin::Zmod(5)).unwrap();
        assert!(check_axioms(&z5, Profile::Multifield).pass());
        let z6 = make_builtin(Builtin::Zmod(6)).unwrap();
        assert!(check_axioms(&z6, Profile::Multiring).pass());
    }

    #[test]
    fn zmod6_fails_multidomain_with_witness_2_3() {
        let z6 = make_builtin(Builtin::Zmod(6)).unwrap();
        let r = check_axioms(&z6, Profile::Multidomain);
        assert!(!r.pass());
        let fail = r.check("no-zero-divisors").unwrap();
        assert_eq!(fail.witness.as_deref(), Some(&["2".to_string(), "3".to_string()][..]));
    }

    #[test]
    fn deleting_a_reversibility_triple_breaks_m1() {
        let q2 = make_builtin(Builtin::Signs).unwrap();
        let one = q2.element_by_name("1").unwrap();
        let minus = q2.element_by_name("-1").unwrap();
        // remove 0 from 1 + (-1)
        let cell = Subset::from_elems(3, &[one, minus]).unwrap();
        let broken = q2.with_add_cell(one, minus, cell);
        let r = check_axioms(&broken, Profile::Multigroup);
        let m1 = r.check("M1").unwrap();
        assert!(!m1.holds);
        assert!(m1.witness.is_some());
    }

    #[test]
    fn weak_associativity_holds_on_builtins() {
        for kind in [Builtin::Krasner, Builtin::Signs, Builtin::Hp(5), Builtin::Kaleidoscope(2)] {
            let s = make_builtin(kind).unwrap();
            assert_eq!(weak_associativity(&s), None, "{}", s.name());
        }
    }

    #[test]
    fn hyperring_profile_passes_on_krasner_and_signs() {
        for kind in [Builtin::Krasner, Builtin::Signs] {
            let s = make_builtin(kind).unwrap();
            assert!(check_axioms(&s, Profile::Hyperring).pass(), "{}", s.name());
        }
    }

    #[test]
    fn sign_identities_on_builtins() {
        for kind in [Builtin::Krasner, Builtin::Signs, Builtin::Hp(3), Builtin::Zmod(6)] {
            let s = make_builtin(kind).unwrap();
            let r = check_sign_identities(&s);
            assert!(r.pass(), "{}: {:?}", s.name(), r.failing_ids());
        }
    }

    #[test]
    fn corrupted_negation_fails_exchange_with_witness() {
        let q2 = make_builtin(Builtin::Signs).unwrap();
        let one = q2.element_by_name("1").unwrap();
        let broken = q2.with_neg(one, one); // declare -1 := 1
        let r = check_sign_identities(&broken);
        assert!(!r.pass());
        let c = r.check("neg-exchange").unwrap();
        assert!(!c.holds);
        assert!(c.witness.is_some());
    }

    #[test]
    fn superring_profile_accepts_multirings_read_as_2_rings() {
        let h3 = make_builtin(Builtin::Hp(3)).unwrap();
        assert!(check_axioms(&h3, Profile::Superring).pass());
    }

    #[test]
    fn reported_counterexamples_replay() {
        let z6 = make_builtin(Builtin::Zmod(6)).unwrap();
        let r = check_axioms(&z6, Profile::Multidomain);
        for c in r.checks.iter().filter(|c| !c.holds) {
            let w: Vec<usize> = c
                .witness
                .as_ref()
                .unwrap()
                .iter()
                .map(|name| z6.element_by_name(name).unwrap())
                .collect();
            match c.id.as_str() {
                "no-zero-divisors" => {
                    assert!(z6.mul(w[0], w[1]).contains(z6.zero()));
                }
                other => panic!("unexpected failing axiom {other}"),
            }
        }
    }
}
