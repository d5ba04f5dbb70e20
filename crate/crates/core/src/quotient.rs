//! Quotient multigroups of ordinary groups.
//!
//! Given a finite group `G` and a subset `S` with `e ∈ S` and `S⁻¹ ⊆ S`,
//! the relation `a ~ b iff b·a⁻¹ ∈ S` is reflexive and symmetric; its
//! transitive closure partitions `G`, and the class structure inherits a
//! set-valued operation. When `G` is commutative and `S` a subgroup the
//! result is an ordinary group again.

use crate::error::QuotientError;
use crate::structure::OpTable;
use crate::subset::{Elem, Subset};

/// An ordinary finite group, with elements `0..n`.
#[derive(Clone, Debug)]
pub struct Group {
    n: usize,
    unit: Elem,
    op: Vec<Elem>,
    inv: Vec<Elem>,
}

impl Group {
    /// Builds from a Cayley table, deriving unit and inverses. Panics when
    /// the table is not a group table.
    pub fn from_table(n: usize, op: Vec<Elem>) -> Group {
        assert_eq!(op.len(), n * n);
        let at = |a: Elem, b: Elem| op[a * n + b];
        let unit = (0..n)
            .find(|&e| (0..n).all(|a| at(e, a) == a && at(a, e) == a))
            .expect("table has no identity");
        let inv: Vec<Elem> = (0..n)
            .map(|a| (0..n).find(|&b| at(a, b) == unit).expect("element has no inverse"))
            .collect();
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    assert_eq!(at(at(a, b), c), at(a, at(b, c)), "table is not associative");
                }
            }
        }
        Group { n, unit, op, inv }
    }

    pub fn cyclic(n: usize) -> Group {
        assert!(n >= 1);
        let op = (0..n).flat_map(|a| (0..n).map(move |b| (a + b) % n)).collect();
        Group::from_table(n, op)
    }

    /// Direct product, elements ordered pairwise row-major.
    pub fn product(g: &Group, h: &Group) -> Group {
        let n = g.n * h.n;
        let mut op = vec![0; n * n];
        for a1 in 0..g.n {
            for a2 in 0..h.n {
                for b1 in 0..g.n {
                    for b2 in 0..h.n {
                        let a = a1 * h.n + a2;
                        let b = b1 * h.n + b2;
                        op[a * n + b] = g.op(a1, b1) * h.n + h.op(a2, b2);
                    }
                }
            }
        }
        Group::from_table(n, op)
    }

    /// The symmetric group on three points, via permutation composition.
    pub fn symmetric_3() -> Group {
        let perms: Vec<[usize; 3]> =
            vec![[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];
        let index = |p: &[usize; 3]| perms.iter().position(|q| q == p).unwrap();
        let n = perms.len();
        let mut op = vec![0; n * n];
        for (i, p) in perms.iter().enumerate() {
            for (j, q) in perms.iter().enumerate() {
                // (p ∘ q)(x) = p(q(x))
                let comp = [p[q[0]], p[q[1]], p[q[2]]];
                op[i * n + j] = index(&comp);
            }
        }
        Group::from_table(n, op)
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn unit(&self) -> Elem {
        self.unit
    }

    pub fn op(&self, a: Elem, b: Elem) -> Elem {
        self.op[a * self.n + b]
    }

    pub fn inv(&self, a: Elem) -> Elem {
        self.inv[a]
    }

    pub fn is_commutative(&self) -> bool {
        (0..self.n).all(|a| (0..self.n).all(|b| self.op(a, b) == self.op(b, a)))
    }
}

/// A finite multigroup `(M, ∘, ⁻¹, e)` with a set-valued operation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Multigroup {
    pub names: Vec<String>,
    pub unit: Elem,
    pub inv: Vec<Elem>,
    pub op: OpTable,
}

impl Multigroup {
    pub fn order(&self) -> usize {
        self.names.len()
    }

    pub fn is_strict(&self) -> bool {
        self.op.is_strict()
    }

    /// M1-M4 by exhaustion; returns the first failing (axiom, tuple).
    pub fn check_axioms(&self) -> Option<(String, Vec<Elem>)> {
        let n = self.order();
        let single = |e| Subset::singleton(n, e);
        let ext = |x: &Subset, y: &Subset| -> Subset {
            let mut acc: Option<Subset> = None;
            for a in x.iter() {
                for b in y.iter() {
                    let cell = self.op.get(a, b);
                    acc = Some(match acc {
                        None => cell,
                        Some(u) => u.union(&cell),
                    });
                }
            }
            acc.unwrap()
        };
        for a in 0..n {
            if self.op.get(a, self.unit) != single(a) {
                return Some(("M2".into(), vec![a]));
            }
            for b in 0..n {
                if self.op.get(a, b) != self.op.get(b, a) {
                    return Some(("M4".into(), vec![a, b]));
                }
                for c in self.op.get(a, b).iter() {
                    if !self.op.get(c, self.inv[b]).contains(a)
                        || !self.op.get(self.inv[a], c).contains(b)
                    {
                        return Some(("M1".into(), vec![a, b, c]));
                    }
                }
                for c in 0..n {
                    let left = ext(&self.op.get(a, b), &single(c));
                    let right = ext(&single(a), &self.op.get(b, c));
                    if left != right {
                        return Some(("M3".into(), vec![a, b, c]));
                    }
                }
            }
        }
        None
    }
}

/// Builds `G/~` for the transitive closure of `a ~ b iff b·a⁻¹ ∈ S`.
///
/// Errors when `e ∉ S`, when `S` is not inverse-closed, or when inversion
/// fails to descend to the classes (possible for noncommutative `G`).
pub fn quotient_multigroup(g: &Group, s: &[Elem]) -> Result<Multigroup, QuotientError> {
    let n = g.order();
    let in_s = {
        let mut mask = vec![false; n];
        for &x in s {
            mask[x] = true;
        }
        mask
    };
    if !in_s[g.unit()] {
        return Err(QuotientError::MissingIdentity);
    }
    if let Some(&x) = s.iter().find(|&&x| !in_s[g.inv(x)]) {
        return Err(QuotientError::NotInverseClosed(x));
    }

    // Union-find computes the transitive closure of the base relation.
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut Vec<usize>, x: usize) -> usize {
        if parent[x] != x {
            let root = find(parent, parent[x]);
            parent[x] = root;
        }
        parent[x]
    }
    for a in 0..n {
        for b in 0..n {
            if in_s[g.op(b, g.inv(a))] {
                let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
                if ra != rb {
                    parent[ra.max(rb)] = ra.min(rb);
                }
            }
        }
    }

    // Classes numbered by ascending least representative.
    let mut class_of = vec![usize::MAX; n];
    let mut reps: Vec<Elem> = Vec::new();
    for x in 0..n {
        let r = find(&mut parent, x);
        if class_of[r] == usize::MAX {
            class_of[r] = reps.len();
            reps.push(r);
        }
        class_of[x] = class_of[r];
    }
    let m = reps.len();

    // Inherited inverse must be constant on classes.
    let mut inv = vec![usize::MAX; m];
    for x in 0..n {
        let c = class_of[x];
        let ci = class_of[g.inv(x)];
        if inv[c] == usize::MAX {
            inv[c] = ci;
        } else if inv[c] != ci {
            return Err(QuotientError::InverseNotWellDefined(reps[c], x));
        }
    }

    // Inherited operation: [a] ∘ [b] = { [a'·b'] : a' ~ a, b' ~ b }.
    let mut members: Vec<Vec<Elem>> = vec![Vec::new(); m];
    for x in 0..n {
        members[class_of[x]].push(x);
    }
    let op = OpTable::from_fn(m, |ca, cb| {
        let mut out = Vec::new();
        for &a in &members[ca] {
            for &b in &members[cb] {
                out.push(class_of[g.op(a, b)]);
            }
        }
        Subset::from_elems(m, &out).unwrap()
    });

    let names = members
        .iter()
        .map(|cls| {
            let elems: Vec<String> = cls.iter().map(|e| e.to_string()).collect();
            format!("[{}]", elems.join(" "))
        })
        .collect();

    Ok(Multigroup { names, unit: class_of[g.unit()], inv, op })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn z4_by_even_subgroup_is_strict_of_order_2() {
        let g = Group::cyclic(4);
        let q = quotient_multigroup(&g, &[0, 2]).unwrap();
        assert_eq!(q.order(), 2);
        assert!(q.is_strict());
        assert_eq!(q.check_axioms(), None);
    }

    #[test]
    fn quotient_by_identity_recovers_the_group() {
        let g = Group::product(&Group::cyclic(2), &Group::cyclic(3));
        let q = quotient_multigroup(&g, &[g.unit()]).unwrap();
        assert_eq!(q.order(), 6);
        assert!(q.is_strict());
        assert_eq!(q.check_axioms(), None);
    }

    #[test]
    fn z5_by_non_subgroup_collapses_and_passes_axioms() {
        let g = Group::cyclic(5);
        // {0, 1, 4}: contains 0, closed under inverses, not a subgroup
        let q = quotient_multigroup(&g, &[0, 1, 4]).unwrap();
        // transitive closure of "differ by 1" relates everything
        assert_eq!(q.order(), 1);
        assert_eq!(q.check_axioms(), None);
    }

    #[test]
    fn bad_subsets_are_rejected() {
        let g = Group::cyclic(4);
        assert_eq!(quotient_multigroup(&g, &[1]).unwrap_err(), QuotientError::MissingIdentity);
        assert_eq!(
            quotient_multigroup(&g, &[0, 1]).unwrap_err(),
            QuotientError::NotInverseClosed(1)
        );
    }

    #[test]
    fn symmetric_group_with_reflection_pair_quotients() {
        // S = {e, (01)} is inverse-closed; right cosets of it are the
        // classes; inversion does not descend, which must be reported.
        let g = Group::symmetric_3();
        assert!(!g.is_commutative());
        let s = vec![0usize, 2]; // identity and the (01) transposition
        match quotient_multigroup(&g, &s) {
            Err(QuotientError::InverseNotWellDefined(_, _)) => {}
            other => panic!("expected inverse-descent failure, got {other:?}"),
        }
    }

    #[test]
    fn klein_four_quotient_passes_multigroup_axioms() {
        let g = Group::product(&Group::cyclic(2), &Group::cyclic(2));
        // any symmetric subset with identity works here; pick a non-subgroup one
        let q = quotient_multigroup(&g, &[0, 1, 2]).unwrap();
        assert_eq!(q.check_axioms(), None);
    }
}
