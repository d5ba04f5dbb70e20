//! The 2-ring of multipolynomials over a finite multiring.
//!
//! A [`MultiPoly`] is a finitely supported coefficient sequence. Its
//! degree follows the sequence convention: the smallest `t` with
//! `a_n = 0` for all `n >= t`, so the zero polynomial has degree 0 and a
//! nonzero polynomial's degree is its usual degree plus one. Helpers
//! named `usual_deg` translate where the off-by-one matters.
//!
//! Sums and products of two polynomials are sets of polynomials, but both
//! defining conditions are cellwise (`c_n ∈ a_n + b_n`, respectively
//! `c_n ∈ Σ_i a_i·b_{n-i}`), so the result is exactly a Cartesian product
//! of per-coefficient subsets: a [`PolySet`]. Membership never requires
//! enumerating the member polynomials.

mod closure;
mod euclid;

pub use closure::{is_algebraically_closed_upto, ClosureReport};
pub use euclid::{euclid_divide, DivisionWitness};

use crate::eval::{extend_add, extend_mul};
use crate::structure::FiniteMultiring;
use crate::subset::{Elem, Subset};
use serde::Serialize;
use std::fmt;

/// A multipolynomial in one variable, as a trimmed coefficient vector
/// (index = power of X; no trailing zero coefficients).
#[derive(Clone, PartialEq, Eq, Hash, Serialize)]
pub struct MultiPoly {
    coeffs: Vec<Elem>,
}

impl MultiPoly {
    /// Builds from coefficients (ascending powers), trimming trailing
    /// zeros of `s`.
    pub fn from_coeffs(s: &FiniteMultiring, mut coeffs: Vec<Elem>) -> MultiPoly {
        while coeffs.last() == Some(&s.zero()) {
            coeffs.pop();
        }
        MultiPoly { coeffs }
    }

    pub fn zero() -> MultiPoly {
        MultiPoly { coeffs: Vec::new() }
    }

    pub fn constant(s: &FiniteMultiring, c: Elem) -> MultiPoly {
        MultiPoly::from_coeffs(s, vec![c])
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree in the sequence convention: smallest `t` with `a_n = 0` for
    /// all `n >= t`. Zero polynomial: 0; usual degree plus one otherwise.
    pub fn paper_deg(&self) -> usize {
        self.coeffs.len()
    }

    /// Usual degree of a nonzero polynomial.
    pub fn usual_deg(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, s: &FiniteMultiring, n: usize) -> Elem {
        self.coeffs.get(n).copied().unwrap_or(s.zero())
    }

    pub fn coeffs(&self) -> &[Elem] {
        &self.coeffs
    }

    /// `-p`, coefficientwise.
    pub fn negated(&self, s: &FiniteMultiring) -> MultiPoly {
        MultiPoly::from_coeffs(s, self.coeffs.iter().map(|&c| s.neg(c)).collect())
    }

    /// Canonical text: ascending powers, zero coefficients omitted,
    /// `3 + 2*X + X^2` style; the zero polynomial prints `0`.
    pub fn display(&self, s: &FiniteMultiring) -> String {
        if self.is_zero() {
            return s.display_name(s.zero()).to_string();
        }
        let mut parts = Vec::new();
        for (i, &c) in self.coeffs.iter().enumerate() {
            if c == s.zero() {
                continue;
            }
            let name = s.display_name(c);
            let part = match (i, c == s.one()) {
                (0, _) => name.to_string(),
                (1, true) => "X".to_string(),
                (1, false) => format!("{name}*X"),
                (_, true) => format!("X^{i}"),
                (_, false) => format!("{name}*X^{i}"),
            };
            parts.push(part);
        }
        parts.join(" + ")
    }
}

impl fmt::Debug for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "poly{:?}", self.coeffs)
    }
}

/// A Cartesian product of multipolynomials: one subset per coefficient
/// index, trailing cells implicitly `{0}`. Stored trimmed: top cells that
/// are exactly `{0}` are dropped.
#[derive(Clone, PartialEq, Eq, Serialize)]
pub struct PolySet {
    cells: Vec<Subset>,
}

impl PolySet {
    pub fn from_cells(s: &FiniteMultiring, mut cells: Vec<Subset>) -> PolySet {
        let zero_cell = Subset::singleton(s.carrier_size(), s.zero());
        while cells.last() == Some(&zero_cell) {
            cells.pop();
        }
        PolySet { cells }
    }

    /// The singleton set `{p}`.
    pub fn of_poly(s: &FiniteMultiring, p: &MultiPoly) -> PolySet {
        PolySet {
            cells: p.coeffs().iter().map(|&c| Subset::singleton(s.carrier_size(), c)).collect(),
        }
    }

    pub fn cells(&self) -> &[Subset] {
        &self.cells
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    pub fn cell(&self, s: &FiniteMultiring, n: usize) -> Subset {
        self.cells
            .get(n)
            .copied()
            .unwrap_or_else(|| Subset::singleton(s.carrier_size(), s.zero()))
    }

    /// Cellwise membership; coefficients beyond the stored cells must be 0.
    pub fn contains_poly(&self, s: &FiniteMultiring, p: &MultiPoly) -> bool {
        if p.paper_deg() > self.cells.len() {
            return false;
        }
        (0..self.cells.len()).all(|n| self.cells[n].contains(p.coeff(s, n)))
    }

    /// Do two Cartesian products share a member? Cellwise intersection up
    /// to the longer length, with implicit `{0}` cells.
    pub fn intersects(&self, s: &FiniteMultiring, other: &PolySet) -> bool {
        let len = self.cells.len().max(other.cells.len());
        (0..len).all(|n| self.cell(s, n).intersects(&other.cell(s, n)))
    }

    /// Is every member of `self` a member of `other`?
    pub fn is_subset_of(&self, s: &FiniteMultiring, other: &PolySet) -> bool {
        let len = self.cells.len().max(other.cells.len());
        (0..len).all(|n| self.cell(s, n).is_subset_of(&other.cell(s, n)))
    }

    /// Number of member polynomials.
    pub fn member_count(&self) -> u128 {
        self.cells.iter().map(|c| c.len() as u128).product()
    }
}

impl fmt::Debug for PolySet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "polyset{:?}", self.cells)
    }
}

/// Set-valued finite sum of carrier elements; the empty sum is `{0}`.
pub fn finite_sum(s: &FiniteMultiring, elems: &[Elem]) -> Subset {
    let mut acc = Subset::singleton(s.carrier_size(), s.zero());
    for &e in elems {
        acc = extend_add(s, &acc, &Subset::singleton(s.carrier_size(), e));
    }
    acc
}

/// Set-valued finite product of carrier elements; the empty product is `{1}`.
pub fn finite_product(s: &FiniteMultiring, elems: &[Elem]) -> Subset {
    let mut acc = Subset::singleton(s.carrier_size(), s.one());
    for &e in elems {
        acc = extend_mul(s, &acc, &Subset::singleton(s.carrier_size(), e));
    }
    acc
}

/// Folds a sum over subsets (for sums of set-valued products).
pub fn finite_sum_subsets(s: &FiniteMultiring, parts: &[Subset]) -> Subset {
    let mut acc = Subset::singleton(s.carrier_size(), s.zero());
    for p in parts {
        acc = extend_add(s, &acc, p);
    }
    acc
}

/// The sum `a + b` as a Cartesian product: cell `n` is `a_n + b_n`.
pub fn poly_add_set(s: &FiniteMultiring, a: &MultiPoly, b: &MultiPoly) -> PolySet {
    let len = a.paper_deg().max(b.paper_deg());
    let cells = (0..len).map(|n| s.add(a.coeff(s, n), b.coeff(s, n))).collect();
    PolySet::from_cells(s, cells)
}

/// The product `a · b`: cell `n` is the convolution sum
/// `a_0·b_n + a_1·b_{n-1} + ... + a_n·b_0`.
pub fn poly_mul_set(s: &FiniteMultiring, a: &MultiPoly, b: &MultiPoly) -> PolySet {
    if a.is_zero() || b.is_zero() {
        return PolySet::from_cells(s, Vec::new());
    }
    let len = a.paper_deg() + b.paper_deg() - 1;
    let cells = (0..len)
        .map(|n| {
            let terms: Vec<Subset> =
                (0..=n).map(|i| s.mul(a.coeff(s, i), b.coeff(s, n - i))).collect();
            finite_sum_subsets(s, &terms)
        })
        .collect();
    PolySet::from_cells(s, cells)
}

/// `ps + p` cellwise; exact because both sides are Cartesian products.
pub fn polyset_add_poly(s: &FiniteMultiring, ps: &PolySet, p: &MultiPoly) -> PolySet {
    let len = ps.len().max(p.paper_deg());
    let cells = (0..len)
        .map(|n| extend_add(s, &ps.cell(s, n), &Subset::singleton(s.carrier_size(), p.coeff(s, n))))
        .collect();
    PolySet::from_cells(s, cells)
}

/// Membership test `p ∈ ps` (free function mirror of
/// [`PolySet::contains_poly`]).
pub fn polyset_contains(s: &FiniteMultiring, ps: &PolySet, p: &MultiPoly) -> bool {
    ps.contains_poly(s, p)
}

/// The cellwise `k`-th power polyset of `g`: iterated convolution of the
/// cells of `g^(k-1)` with `g`.
pub fn power_polyset(s: &FiniteMultiring, g: &MultiPoly, k: usize) -> PolySet {
    assert!(k >= 1);
    let mut acc = PolySet::of_poly(s, g);
    for _ in 1..k {
        if acc.is_empty() || g.is_zero() {
            return PolySet::from_cells(s, Vec::new());
        }
        let len = acc.len() + g.paper_deg() - 1;
        let cells = (0..len)
            .map(|n| {
                let terms: Vec<Subset> = (0..=n)
                    .filter(|&i| i < acc.len())
                    .map(|i| {
                        extend_mul(
                            s,
                            &acc.cell(s, i),
                            &Subset::singleton(s.carrier_size(), g.coeff(s, n - i)),
                        )
                    })
                    .collect();
                finite_sum_subsets(s, &terms)
            })
            .collect();
        acc = PolySet::from_cells(s, cells);
    }
    acc
}

/// Set-valued evaluation: the subset `a_0 + a_1·α + ... + a_n·α^n`, with
/// each term a finite product and the whole a finite sum.
pub fn evaluate(s: &FiniteMultiring, p: &MultiPoly, alpha: Elem) -> Subset {
    let terms: Vec<Subset> = p
        .coeffs()
        .iter()
        .enumerate()
        .map(|(i, &c)| {
            let mut factors = vec![c];
            factors.extend(std::iter::repeat(alpha).take(i));
            finite_product(s, &factors)
        })
        .collect();
    finite_sum_subsets(s, &terms)
}

/// Evaluation across a morphism: coefficients are pushed through `f`
/// first, then the sum is taken in the target structure at the target
/// point `at`.
pub fn h_evaluate(f: &crate::morphism::Morphism<'_>, p: &MultiPoly, at: Elem) -> Subset {
    let t = f.target;
    let terms: Vec<Subset> = p
        .coeffs()
        .iter()
        .enumerate()
        .map(|(i, &c)| {
            let mut factors = vec![f.apply(c)];
            factors.extend(std::iter::repeat(at).take(i));
            finite_product(t, &factors)
        })
        .collect();
    finite_sum_subsets(t, &terms)
}

/// All carrier elements `α` with `0 ∈ p(α)`, ascending. May be empty.
pub fn roots(s: &FiniteMultiring, p: &MultiPoly) -> Vec<Elem> {
    s.elements().filter(|&a| evaluate(s, p, a).contains(s.zero())).collect()
}

/// How divisibility of polysets is read in `divides_power`.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub enum DivisibilityMode {
    /// `p | q` when some product `p·q'` shares a member with the power
    /// polyset.
    #[default]
    Intersect,
    /// `p | q` when some product `p·q'` covers the whole power polyset.
    Contain,
}

/// Does `p` divide `g^k`: is there a `q` (within the derived degree
/// bound) whose product polyset `p·q` meets (or covers) the cellwise
/// expansion of `g^k`?
pub fn divides_power(
    s: &FiniteMultiring,
    p: &MultiPoly,
    g: &MultiPoly,
    k: usize,
    mode: DivisibilityMode,
) -> bool {
    assert!(!p.is_zero(), "divisor must be nonzero");
    assert!(k >= 1);
    let target = power_polyset(s, g, k);
    let q_deg_max = target.len().saturating_sub(p.paper_deg()) + 1;
    enumerate_padded(s, q_deg_max).any(|q| {
        let prod = poly_mul_set(s, p, &q);
        match mode {
            DivisibilityMode::Intersect => prod.intersects(s, &target),
            DivisibilityMode::Contain => target.is_subset_of(s, &prod),
        }
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TwoDomainReport {
    pub holds: bool,
    /// First pair of nonzero polynomials whose product set contains the
    /// zero polynomial, when any.
    pub witness: Option<(MultiPoly, MultiPoly)>,
}

/// Zero-divisor search in the polynomial 2-ring, over all nonzero
/// polynomials of usual degree at most `max_deg`.
pub fn check_2domain_poly(s: &FiniteMultiring, max_deg: usize) -> TwoDomainReport {
    let polys: Vec<MultiPoly> =
        enumerate_multipolys(s, max_deg + 1).filter(|p| !p.is_zero()).collect();
    for a in &polys {
        for b in &polys {
            let prod = poly_mul_set(s, a, b);
            if prod.contains_poly(s, &MultiPoly::zero()) {
                return TwoDomainReport { holds: false, witness: Some((a.clone(), b.clone())) };
            }
        }
    }
    TwoDomainReport { holds: true, witness: None }
}

/// All polynomials with sequence-degree at most `max_paper_deg`, in
/// deterministic order: degree ascending, then coefficients ascending
/// lexicographically with index 0 most significant.
pub fn enumerate_multipolys(
    s: &FiniteMultiring,
    max_paper_deg: usize,
) -> impl Iterator<Item = MultiPoly> + '_ {
    let n = s.carrier_size();
    (0..=max_paper_deg).flat_map(move |d| {
        let count: u64 = if d == 0 { 1 } else { (n as u64).pow(d as u32) };
        (0..count).filter_map(move |num| {
            if d == 0 {
                return Some(MultiPoly::zero());
            }
            let mut coeffs = vec![0usize; d];
            let mut rest = num;
            for i in (0..d).rev() {
                coeffs[i] = (rest % n as u64) as usize;
                rest /= n as u64;
            }
            // exact degree d: leading coefficient nonzero
            if coeffs[d - 1] == s.zero() {
                return None;
            }
            Some(MultiPoly { coeffs })
        })
    })
}

/// All coefficient vectors of fixed width (trailing zeros allowed), in
/// lexicographic order with index 0 most significant. Used by searches
/// that must return the lexicographically least witness.
pub(crate) fn enumerate_padded(
    s: &FiniteMultiring,
    width: usize,
) -> impl Iterator<Item = MultiPoly> + '_ {
    let n = s.carrier_size() as u64;
    let total: u64 = n.checked_pow(width as u32).expect("search space fits in u64");
    (0..total).map(move |num| {
        let mut coeffs = vec![0usize; width];
        let mut rest = num;
        for i in (0..width).rev() {
            coeffs[i] = (rest % n) as usize;
            rest /= n;
        }
        MultiPoly::from_coeffs(s, coeffs)
    })
}
