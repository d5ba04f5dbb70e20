//! The triangle hyperfield on nonnegative rationals.
//!
//! Elements are finite unions of closed intervals `[lo, hi]` with
//! `0 <= lo <= hi`, kept normalized (sorted, pairwise disjoint, touching
//! intervals merged). The multivalued sum of two points is
//! `a ∇ b = [|a-b|, a+b]`; products are ordinary. Both extend to interval
//! unions by taking the union over component pairs, which stays exact
//! because endpoints move monotonically.

use crate::error::IntervalError;
use num_rational::Rational64;
use num_traits::Zero;
use serde::Serialize;
use std::fmt;

pub type Rat = Rational64;

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub struct Interval {
    pub lo: Rat,
    pub hi: Rat,
}

/// A normalized, nonempty union of closed intervals in `Q+`.
#[derive(Clone, PartialEq, Eq, Serialize)]
pub struct IntervalSet {
    parts: Vec<Interval>,
}

impl IntervalSet {
    pub fn new(mut parts: Vec<Interval>) -> Result<IntervalSet, IntervalError> {
        if parts.is_empty() {
            return Err(IntervalError::Empty);
        }
        for p in &parts {
            if p.lo > p.hi {
                return Err(IntervalError::Inverted);
            }
            if p.lo < Rat::zero() {
                return Err(IntervalError::Negative);
            }
        }
        parts.sort_by(|a, b| (a.lo, a.hi).cmp(&(b.lo, b.hi)));
        let mut merged: Vec<Interval> = Vec::with_capacity(parts.len());
        for p in parts {
            match merged.last_mut() {
                Some(last) if p.lo <= last.hi => {
                    if p.hi > last.hi {
                        last.hi = p.hi;
                    }
                }
                _ => merged.push(p),
            }
        }
        Ok(IntervalSet { parts: merged })
    }

    pub fn point(r: Rat) -> IntervalSet {
        IntervalSet::new(vec![Interval { lo: r, hi: r }]).expect("point is a valid interval")
    }

    pub fn interval(lo: Rat, hi: Rat) -> Result<IntervalSet, IntervalError> {
        IntervalSet::new(vec![Interval { lo, hi }])
    }

    pub fn parts(&self) -> &[Interval] {
        &self.parts
    }

    pub fn contains(&self, r: Rat) -> bool {
        self.parts.iter().any(|p| p.lo <= r && r <= p.hi)
    }

    pub fn is_subset_of(&self, other: &IntervalSet) -> bool {
        self.parts
            .iter()
            .all(|p| other.parts.iter().any(|q| q.lo <= p.lo && p.hi <= q.hi))
    }
}

impl fmt::Debug for IntervalSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, " u ")?;
            }
            if p.lo == p.hi {
                write!(f, "{{{}}}", p.lo)?;
            } else {
                write!(f, "[{}, {}]", p.lo, p.hi)?;
            }
        }
        Ok(())
    }
}

/// The triangle sum. On single intervals
/// `[a1,a2] ∇ [b1,b2] = [max(0, a1-b2, b1-a2), a2+b2]`.
pub fn tri_add(a: &IntervalSet, b: &IntervalSet) -> IntervalSet {
    let mut parts = Vec::new();
    for p in a.parts() {
        for q in b.parts() {
            let gap = (p.lo - q.hi).max(q.lo - p.hi).max(Rat::zero());
            parts.push(Interval { lo: gap, hi: p.hi + q.hi });
        }
    }
    IntervalSet::new(parts).expect("operands are nonempty")
}

/// The product: endpointwise on nonnegative intervals.
pub fn tri_mul(a: &IntervalSet, b: &IntervalSet) -> IntervalSet {
    let mut parts = Vec::new();
    for p in a.parts() {
        for q in b.parts() {
            parts.push(Interval { lo: p.lo * q.lo, hi: p.hi * q.hi });
        }
    }
    IntervalSet::new(parts).expect("operands are nonempty")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64) -> Rat {
        Rat::from_integer(n)
    }

    fn seg(lo: i64, hi: i64) -> IntervalSet {
        IntervalSet::interval(r(lo), r(hi)).unwrap()
    }

    #[test]
    fn two_nabla_one_is_one_three() {
        assert_eq!(tri_add(&IntervalSet::point(r(2)), &IntervalSet::point(r(1))), seg(1, 3));
    }

    #[test]
    fn squared_interval_is_one_nine() {
        assert_eq!(tri_mul(&seg(1, 3), &seg(1, 3)), seg(1, 9));
    }

    #[test]
    fn fourfold_nabla_sum_is_zero_nine() {
        let sum = [2, 2, 1]
            .iter()
            .fold(IntervalSet::point(r(4)), |acc, &k| tri_add(&acc, &IntervalSet::point(r(k))));
        assert_eq!(sum, seg(0, 9));
    }

    #[test]
    fn double_distributivity_fails_on_the_witness() {
        // (2∇1)·(2∇1) = [1,9] while 4∇2∇2∇1 = [0,9]
        let s = tri_add(&IntervalSet::point(r(2)), &IntervalSet::point(r(1)));
        let lhs = tri_mul(&s, &s);
        let rhs = [2, 2, 1]
            .iter()
            .fold(IntervalSet::point(r(4)), |acc, &k| tri_add(&acc, &IntervalSet::point(r(k))));
        assert_eq!(lhs, seg(1, 9));
        assert_eq!(rhs, seg(0, 9));
        assert_ne!(lhs, rhs);
        assert!(lhs.is_subset_of(&rhs));
    }

    #[test]
    fn weak_distributivity_on_a_rational_grid() {
        let grid: Vec<Rat> = [(0, 1), (1, 2), (1, 1), (3, 2), (2, 1), (3, 1), (7, 3)]
            .iter()
            .map(|&(n, d)| Rat::new(n, d))
            .collect();
        for &c in &grid {
            for &a in &grid {
                for &b in &grid {
                    let (pc, pa, pb) =
                        (IntervalSet::point(c), IntervalSet::point(a), IntervalSet::point(b));
                    let lhs = tri_mul(&pc, &tri_add(&pa, &pb));
                    let rhs = tri_add(&tri_mul(&pc, &pa), &tri_mul(&pc, &pb));
                    assert!(lhs.is_subset_of(&rhs), "c={c} a={a} b={b}");
                }
            }
        }
    }

    #[test]
    fn zero_is_neutral_and_points_have_inverses() {
        let x = IntervalSet::point(Rat::new(5, 3));
        assert_eq!(tri_add(&x, &IntervalSet::point(r(0))), x);
        // x ∇ x contains 0: x is its own additive inverse
        assert!(tri_add(&x, &x).contains(r(0)));
        // multiplicative inverse
        assert_eq!(
            tri_mul(&x, &IntervalSet::point(Rat::new(3, 5))),
            IntervalSet::point(r(1))
        );
    }

    #[test]
    fn normalization_merges_touching_intervals() {
        let s = IntervalSet::new(vec![
            Interval { lo: r(2), hi: r(3) },
            Interval { lo: r(0), hi: r(1) },
            Interval { lo: r(1), hi: r(2) },
        ])
        .unwrap();
        assert_eq!(s, seg(0, 3));
        // disjoint parts stay apart
        let t = IntervalSet::new(vec![
            Interval { lo: r(4), hi: r(5) },
            Interval { lo: r(0), hi: r(1) },
        ])
        .unwrap();
        assert_eq!(t.parts().len(), 2);
        assert!(t.contains(r(5)) && !t.contains(r(2)));
    }

    #[test]
    fn invalid_sets_are_rejected() {
        assert_eq!(IntervalSet::new(vec![]).unwrap_err(), IntervalError::Empty);
        assert_eq!(
            IntervalSet::interval(r(2), r(1)).unwrap_err(),
            IntervalError::Inverted
        );
        assert_eq!(
            IntervalSet::interval(r(-1), r(1)).unwrap_err(),
            IntervalError::Negative
        );
    }

    #[test]
    fn union_structure_sums_componentwise() {
        let two_parts = IntervalSet::new(vec![
            Interval { lo: r(0), hi: r(1) },
            Interval { lo: r(10), hi: r(10) },
        ])
        .unwrap();
        let x = IntervalSet::point(r(1));
        let sum = tri_add(&two_parts, &x);
        // [0,1]∇1 = [0,2]; 10∇1 = [9,11]
        assert_eq!(sum.parts().len(), 2);
        assert!(sum.contains(r(0)) && sum.contains(r(2)) && sum.contains(r(9)));
        assert!(!sum.contains(r(5)));
    }
}
