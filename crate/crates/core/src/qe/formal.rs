//! Formal multivariate polynomials with carrier coefficients.
//!
//! A [`FormalPoly`] is a multiset of monomials. Formal sums are never
//! collapsed across equal exponent vectors: coefficient addition in the
//! base structure is set-valued, so `Y + Y` and `2·Y`-style merges would
//! have to pick an element of a set. Sets appear only at evaluation,
//! where a monomial multiplies out through the strict product and the
//! whole polynomial is a set-valued finite sum of monomial values.
//!
//! Pseudo-division works purely syntactically. One reduction step
//! replaces `a·R` by `c·Y^(e-k)·p + R'` where the two sides differ by an
//! exactly cancelling pair of monomial multisets; adding such a pair can
//! only grow the evaluation, which yields the one-sided containment
//! `a^d·q ⊆ q_j·p + r_j` at every valuation.

use crate::eval::{extend_add, extend_mul};
use crate::structure::FiniteMultiring;
use crate::subset::{Elem, Subset};
use crate::term::{Valuation, VarSet};
use serde::Serialize;
use std::fmt;

/// One monomial: a coefficient element and a sorted exponent vector.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Monomial {
    /// Exponents `(variable, power)` with positive powers, sorted by
    /// variable. Ordered before the coefficient so that sorting groups
    /// equal exponent vectors together.
    exps: Vec<(u32, u32)>,
    coeff: Elem,
}

impl Monomial {
    pub fn coeff(&self) -> Elem {
        self.coeff
    }

    pub fn exps(&self) -> &[(u32, u32)] {
        &self.exps
    }

    pub fn exp_of(&self, var: u32) -> u32 {
        self.exps.iter().find(|&&(v, _)| v == var).map(|&(_, e)| e).unwrap_or(0)
    }

    fn without_var(&self, var: u32) -> Monomial {
        Monomial {
            exps: self.exps.iter().copied().filter(|&(v, _)| v != var).collect(),
            coeff: self.coeff,
        }
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.coeff)?;
        for &(v, e) in &self.exps {
            write!(f, "*x{v}")?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

/// A multiset of monomials in canonical order.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Default)]
pub struct FormalPoly {
    monomials: Vec<Monomial>,
}

impl FormalPoly {
    pub fn zero() -> FormalPoly {
        FormalPoly { monomials: Vec::new() }
    }

    pub fn constant(s: &FiniteMultiring, c: Elem) -> FormalPoly {
        if c == s.zero() {
            return FormalPoly::zero();
        }
        FormalPoly { monomials: vec![Monomial { exps: vec![], coeff: c }] }
    }

    pub fn one(s: &FiniteMultiring) -> FormalPoly {
        FormalPoly::constant(s, s.one())
    }

    pub fn var(s: &FiniteMultiring, v: u32) -> FormalPoly {
        FormalPoly::monomial(s, s.one(), &[(v, 1)])
    }

    pub fn monomial(s: &FiniteMultiring, coeff: Elem, exps: &[(u32, u32)]) -> FormalPoly {
        if coeff == s.zero() {
            return FormalPoly::zero();
        }
        let mut exps: Vec<(u32, u32)> = exps.iter().copied().filter(|&(_, e)| e > 0).collect();
        exps.sort_by_key(|&(v, _)| v);
        FormalPoly { monomials: vec![Monomial { exps, coeff }] }
    }

    pub fn from_monomials(s: &FiniteMultiring, monomials: Vec<Monomial>) -> FormalPoly {
        let mut monomials: Vec<Monomial> =
            monomials.into_iter().filter(|m| m.coeff != s.zero()).collect();
        monomials.sort();
        FormalPoly { monomials }
    }

    pub fn monomials(&self) -> &[Monomial] {
        &self.monomials
    }

    pub fn is_zero(&self) -> bool {
        self.monomials.is_empty()
    }

    pub fn vars(&self) -> VarSet {
        let mut set = VarSet::EMPTY;
        for m in &self.monomials {
            for &(v, _) in &m.exps {
                set = set.union(VarSet::single(v));
            }
        }
        set
    }

    /// Degree in one variable (0 for the zero polynomial).
    pub fn deg_in(&self, var: u32) -> u32 {
        self.monomials.iter().map(|m| m.exp_of(var)).max().unwrap_or(0)
    }

    /// The coefficient of `var^j`: monomials with that exact power, with
    /// `var` stripped.
    pub fn coeff_in(&self, s: &FiniteMultiring, var: u32, j: u32) -> FormalPoly {
        FormalPoly::from_monomials(
            s,
            self.monomials
                .iter()
                .filter(|m| m.exp_of(var) == j)
                .map(|m| m.without_var(var))
                .collect(),
        )
    }

    /// Monomials with `var`-power at most `j` (the truncation `p_j`).
    pub fn truncate_in(&self, s: &FiniteMultiring, var: u32, j: u32) -> FormalPoly {
        FormalPoly::from_monomials(
            s,
            self.monomials.iter().filter(|m| m.exp_of(var) <= j).cloned().collect(),
        )
    }

    /// Canonical text used for hashing and display.
    pub fn canonical_text(&self, s: &FiniteMultiring) -> String {
        if self.is_zero() {
            return s.display_name(s.zero()).to_string();
        }
        let mut parts = Vec::new();
        for m in &self.monomials {
            let mut factors = Vec::new();
            if m.exps.is_empty() || m.coeff != s.one() {
                factors.push(s.display_name(m.coeff).to_string());
            }
            for &(v, e) in &m.exps {
                if e == 1 {
                    factors.push(format!("x{v}"));
                } else {
                    factors.push(format!("x{v}^{e}"));
                }
            }
            parts.push(factors.join("*"));
        }
        parts.join(" + ")
    }
}

impl fmt::Debug for FormalPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, m) in self.monomials.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{m:?}")?;
        }
        Ok(())
    }
}

/// Formal sum: multiset union.
pub fn formal_add(s: &FiniteMultiring, a: &FormalPoly, b: &FormalPoly) -> FormalPoly {
    let mut monomials = a.monomials.clone();
    monomials.extend(b.monomials.iter().cloned());
    FormalPoly::from_monomials(s, monomials)
}

/// Formal negation: negate every coefficient (strict in all structures).
pub fn formal_neg(s: &FiniteMultiring, a: &FormalPoly) -> FormalPoly {
    FormalPoly::from_monomials(
        s,
        a.monomials
            .iter()
            .map(|m| Monomial { exps: m.exps.clone(), coeff: s.neg(m.coeff) })
            .collect(),
    )
}

/// Formal product: all cross products of monomials. Requires strict
/// multiplication so coefficients multiply to single elements.
pub fn formal_mul(s: &FiniteMultiring, a: &FormalPoly, b: &FormalPoly) -> FormalPoly {
    assert!(s.mul_strict(), "formal products need strict coefficient multiplication");
    let mut out = Vec::with_capacity(a.monomials.len() * b.monomials.len());
    for ma in &a.monomials {
        for mb in &b.monomials {
            let coeff = s.mul_elem(ma.coeff, mb.coeff);
            if coeff == s.zero() {
                continue;
            }
            let mut exps = ma.exps.clone();
            for &(v, e) in &mb.exps {
                match exps.iter_mut().find(|(w, _)| *w == v) {
                    Some((_, old)) => *old += e,
                    None => exps.push((v, e)),
                }
            }
            exps.sort_by_key(|&(v, _)| v);
            out.push(Monomial { exps, coeff });
        }
    }
    FormalPoly::from_monomials(s, out)
}

/// Iterated formal product; the zeroth power is 1.
pub fn formal_pow(s: &FiniteMultiring, a: &FormalPoly, k: u32) -> FormalPoly {
    let mut acc = FormalPoly::one(s);
    for _ in 0..k {
        acc = formal_mul(s, &acc, a);
    }
    acc
}

/// Set-valued evaluation: the finite sum of the monomial values, each
/// monomial multiplied out through the extended product.
pub fn eval_formal(s: &FiniteMultiring, p: &FormalPoly, v: &Valuation) -> Subset {
    let n = s.carrier_size();
    let mut acc = Subset::singleton(n, s.zero());
    for m in &p.monomials {
        let mut value = Subset::singleton(n, m.coeff);
        for &(var, e) in &m.exps {
            let x = Subset::singleton(n, v.get(var).expect("valuation covers the polynomial"));
            for _ in 0..e {
                value = extend_mul(s, &value, &x);
            }
        }
        acc = extend_add(s, &acc, &value);
    }
    acc
}

/// Pseudo-division of `q` by `p` in the variable `y`: returns
/// `(quotient, remainder)` with `deg_y(remainder) < deg_y(p)` and the
/// valuation-wise containment `a^d·q ⊆ quotient·p + remainder`, where
/// `a` is the leading `y`-coefficient of `p` and `d >= deg_y(q)` is the
/// scaling exponent.
pub fn pseudo_divide(
    s: &FiniteMultiring,
    q: &FormalPoly,
    p: &FormalPoly,
    y: u32,
    d: u32,
) -> (FormalPoly, FormalPoly) {
    let k = p.deg_in(y);
    assert!(k >= 1, "divisor must involve the division variable");
    assert!(d >= q.deg_in(y), "scaling exponent below dividend degree");
    let lead = p.coeff_in(s, y, k);
    let tail = p.truncate_in(s, y, k - 1);

    let mut quot = FormalPoly::zero();
    let mut rem = q.clone();
    let mut scalings = 0u32;
    while rem.deg_in(y) >= k && !rem.is_zero() {
        let e = rem.deg_in(y);
        let c = rem.coeff_in(s, y, e);
        let shift = FormalPoly::monomial(s, s.one(), &[(y, e - k)]);
        let c_shift = formal_mul(s, &c, &shift);
        // a·rem = c·Y^(e-k)·p + rem' exactly as multisets, with
        // rem' = (a·rem below Y^e) - c·Y^(e-k)·(p below Y^k)
        let scaled = formal_mul(s, &lead, &rem);
        let below = scaled.truncate_in(s, y, e - 1);
        rem = formal_add(s, &below, &formal_neg(s, &formal_mul(s, &c_shift, &tail)));
        quot = formal_add(s, &formal_mul(s, &lead, &quot), &c_shift);
        scalings += 1;
    }
    for _ in scalings..d {
        quot = formal_mul(s, &lead, &quot);
        rem = formal_mul(s, &lead, &rem);
    }
    (quot, rem)
}
