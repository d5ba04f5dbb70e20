//! Characteristic and ideals of finite 2-rings.

use crate::eval::extend_add;
use crate::structure::FiniteMultiring;
use crate::subset::Subset;
use serde::Serialize;

/// The characteristic: the least `n >= 1` with `0 ∈ 1 + ... + 1` (n ones),
/// or 0 when no such `n` exists.
///
/// The partial sums `S_n = S_{n-1} + 1` live in the finite lattice of
/// carrier subsets, so the sequence eventually revisits a subset; if no
/// revisited prefix contained zero, no later sum will either.
pub fn characteristic(s: &FiniteMultiring) -> usize {
    let one = Subset::singleton(s.carrier_size(), s.one());
    let mut seen: Vec<Subset> = Vec::new();
    let mut sum = Subset::singleton(s.carrier_size(), s.zero()); // empty sum
    for n in 1.. {
        sum = extend_add(s, &sum, &one);
        if sum.contains(s.zero()) {
            return n;
        }
        if seen.contains(&sum) {
            return 0;
        }
        seen.push(sum);
    }
    unreachable!()
}

/// For full 2-domains the characteristic is equivalently the least `n`
/// with `0 ∈ a + ... + a` for every `a`; exposed for property tests.
pub fn characteristic_via_all_elements(s: &FiniteMultiring) -> usize {
    let mut sums: Vec<Subset> = s
        .elements()
        .map(|_| Subset::singleton(s.carrier_size(), s.zero()))
        .collect();
    let mut seen: Vec<Vec<Subset>> = Vec::new();
    for n in 1.. {
        for (a, acc) in sums.iter_mut().enumerate() {
            *acc = extend_add(s, acc, &Subset::singleton(s.carrier_size(), a));
        }
        if sums.iter().all(|acc| acc.contains(s.zero())) {
            return n;
        }
        if seen.contains(&sums) {
            return 0;
        }
        seen.push(sums.clone());
    }
    unreachable!()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IdealSummary {
    pub is_ideal: bool,
    /// Least ideal containing the subset.
    pub generated: Subset,
    /// Primality of the generated ideal.
    pub is_prime: bool,
    /// Maximality of the generated ideal.
    pub is_maximal: bool,
}

/// Is `set` an ideal: closed under `+` and under carrier multiples?
pub fn is_ideal(s: &FiniteMultiring, set: &Subset) -> bool {
    for a in set.iter() {
        for b in set.iter() {
            if !s.add(a, b).is_subset_of(set) {
                return false;
            }
        }
        for r in s.elements() {
            if !s.mul(r, a).is_subset_of(set) {
                return false;
            }
        }
    }
    true
}

/// Least fixpoint of closing `set` under sums and carrier multiples.
pub fn generated_ideal(s: &FiniteMultiring, set: &Subset) -> Subset {
    let mut cur = *set;
    loop {
        let mut next = cur;
        for a in cur.iter() {
            for b in cur.iter() {
                next = next.union(&s.add(a, b));
            }
            for r in s.elements() {
                next = next.union(&s.mul(r, a));
            }
        }
        if next == cur {
            return cur;
        }
        cur = next;
    }
}

fn is_prime_ideal(s: &FiniteMultiring, ideal: &Subset) -> bool {
    if ideal.contains(s.one()) {
        return false;
    }
    for a in s.elements() {
        for b in s.elements() {
            if s.mul(a, b).is_subset_of(ideal) && !ideal.contains(a) && !ideal.contains(b) {
                return false;
            }
        }
    }
    true
}

/// Proper, and adjoining any outside element generates the whole carrier.
fn is_maximal_ideal(s: &FiniteMultiring, ideal: &Subset) -> bool {
    let full = Subset::full(s.carrier_size());
    if *ideal == full {
        return false;
    }
    s.elements()
        .filter(|&x| !ideal.contains(x))
        .all(|x| generated_ideal(s, &ideal.union(&Subset::singleton(s.carrier_size(), x))) == full)
}

/// Idealness of `set` itself plus the generated ideal and its primality
/// and maximality.
pub fn ideal_summary(s: &FiniteMultiring, set: &Subset) -> IdealSummary {
    let generated = generated_ideal(s, set);
    IdealSummary {
        is_ideal: is_ideal(s, set),
        generated,
        is_prime: is_prime_ideal(s, &generated),
        is_maximal: is_maximal_ideal(s, &generated),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builtins::{make_builtin, small_builtins, Builtin};

    #[test]
    fn characteristic_of_the_paper_structures() {
        let k = make_builtin(Builtin::Krasner).unwrap();
        assert_eq!(characteristic(&k), 2);
        let q2 = make_builtin(Builtin::Signs).unwrap();
        assert_eq!(characteristic(&q2), 0);
        let h5 = make_builtin(Builtin::Hp(5)).unwrap();
        assert_eq!(characteristic(&h5), 2); // 1+1 = H5 contains 0
        let x2 = make_builtin(Builtin::Kaleidoscope(2)).unwrap();
        assert_eq!(characteristic(&x2), 0);
    }

    #[test]
    fn characteristic_of_prime_fields() {
        for p in [2usize, 3, 5, 7, 11, 13] {
            let z = make_builtin(Builtin::Zmod(p)).unwrap();
            assert_eq!(characteristic(&z), p);
        }
    }

    #[test]
    fn elementwise_characteristic_agrees_on_full_2_domains() {
        // zmod(p) are strict domains, hence full 2-domains.
        for p in [2usize, 3, 5, 7] {
            let z = make_builtin(Builtin::Zmod(p)).unwrap();
            assert_eq!(characteristic(&z), characteristic_via_all_elements(&z));
        }
    }

    #[test]
    fn zero_ideal_and_unit_ideal() {
        for s in small_builtins(7) {
            let zero = Subset::singleton(s.carrier_size(), s.zero());
            let sum = ideal_summary(&s, &zero);
            assert!(sum.is_ideal, "{}", s.name());
            assert_eq!(sum.generated, zero, "{}", s.name());

            let one = Subset::singleton(s.carrier_size(), s.one());
            let sum = ideal_summary(&s, &one);
            assert_eq!(sum.generated, Subset::full(s.carrier_size()), "{}", s.name());
            assert!(!sum.is_prime);
            assert!(!sum.is_maximal);
        }
    }

    #[test]
    fn two_generates_the_even_prime_ideal_in_zmod6() {
        let z6 = make_builtin(Builtin::Zmod(6)).unwrap();
        let two = Subset::singleton(6, 2);
        let sum = ideal_summary(&z6, &two);
        assert_eq!(sum.generated, Subset::from_elems(6, &[0, 2, 4]).unwrap());
        assert!(sum.is_prime);
        assert!(sum.is_maximal);
        // {2} itself is not closed under addition
        assert!(!sum.is_ideal);
    }

    #[test]
    fn threes_in_zmod9_are_maximal_but_prime_too() {
        let z9 = make_builtin(Builtin::Zmod(9)).unwrap();
        let sum = ideal_summary(&z9, &Subset::singleton(9, 3));
        assert_eq!(sum.generated, Subset::from_elems(9, &[0, 3, 6]).unwrap());
        assert!(sum.is_prime && sum.is_maximal);
    }

    #[test]
    fn whole_carrier_is_an_ideal_but_never_prime() {
        let k = make_builtin(Builtin::Krasner).unwrap();
        let full = Subset::full(2);
        let sum = ideal_summary(&k, &full);
        assert!(sum.is_ideal);
        assert!(!sum.is_prime);
        assert!(!sum.is_maximal);
    }
}
