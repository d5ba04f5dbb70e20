//! The built-in structure families: the Krasner multifield K, the sign
//! multifield Q2, the H_p multifields, the n-kaleidoscope multirings and
//! the strict rings Z/m.

use crate::error::StructureError;
use crate::structure::{FiniteMultiring, OpTable};
use crate::subset::{Elem, Subset};

/// Selector for [`make_builtin`].
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Builtin {
    /// `K = {0,1}` with `1+1 = {0,1}`.
    Krasner,
    /// `Q2 = {-1,0,1}`, the multifield of signs.
    Signs,
    /// `H_p = {0,..,p-1}` for a prime `p`; `H_2 = K` up to renaming.
    Hp(usize),
    /// `X_n = {-n,..,0,..,n}` with sign-magnitude tables.
    Kaleidoscope(usize),
    /// The strict ring `Z/m`.
    Zmod(usize),
}

pub fn is_prime(p: usize) -> bool {
    p >= 2 && (2..p).take_while(|d| d * d <= p).all(|d| p % d != 0)
}

/// Builds one of the built-in structures.
pub fn make_builtin(kind: Builtin) -> Result<FiniteMultiring, StructureError> {
    match kind {
        Builtin::Krasner => krasner(),
        Builtin::Signs => signs(),
        Builtin::Hp(p) => hp(p),
        Builtin::Kaleidoscope(n) => kaleidoscope(n),
        Builtin::Zmod(m) => zmod(m),
    }
}

/// Parses a builtin name: `K`, `Q2`, `H<p>`, `kaleidoscope(<n>)`, `zmod(<m>)`.
pub fn parse_builtin(name: &str) -> Option<Builtin> {
    match name {
        "K" | "krasner" => return Some(Builtin::Krasner),
        "Q2" | "signs" => return Some(Builtin::Signs),
        _ => {}
    }
    if let Some(p) = name.strip_prefix('H').and_then(|s| s.parse().ok()) {
        return Some(Builtin::Hp(p));
    }
    for (prefix, make) in [
        ("kaleidoscope(", Builtin::Kaleidoscope as fn(usize) -> Builtin),
        ("zmod(", Builtin::Zmod as fn(usize) -> Builtin),
    ] {
        if let Some(rest) = name.strip_prefix(prefix) {
            if let Some(num) = rest.strip_suffix(')') {
                if let Ok(k) = num.parse() {
                    return Some(make(k));
                }
            }
        }
    }
    None
}

fn krasner() -> Result<FiniteMultiring, StructureError> {
    let n = 2;
    let single = |e| Subset::singleton(n, e);
    let add = OpTable::from_fn(n, |a, b| {
        if a == 0 {
            single(b)
        } else if b == 0 {
            single(a)
        } else {
            Subset::full(n) // 1+1 = {0,1}
        }
    });
    let mul = OpTable::from_fn(n, |a, b| single(a & b));
    FiniteMultiring::new("K", vec!["0".into(), "1".into()], 0, 1, vec![0, 1], add, mul, true)
}

/// Carrier order: index 0 = 0, index 1 = 1, index 2 = -1.
fn signs() -> Result<FiniteMultiring, StructureError> {
    let n = 3;
    let single = |e| Subset::singleton(n, e);
    let add = OpTable::from_fn(n, |a, b| match (a, b) {
        (0, x) => single(x),
        (x, 0) => single(x),
        (1, 1) => single(1),
        (2, 2) => single(2),
        _ => Subset::full(n), // 1 + (-1) = {-1, 0, 1}
    });
    let mul = OpTable::from_fn(n, |a, b| {
        single(match (a, b) {
            (0, _) | (_, 0) => 0,
            (1, x) | (x, 1) => x,
            (2, 2) => 1,
            _ => unreachable!(),
        })
    });
    FiniteMultiring::new(
        "Q2",
        vec!["0".into(), "1".into(), "-1".into()],
        0,
        1,
        vec![0, 2, 1],
        add,
        mul,
        true,
    )
}

/// `a+b = H_p` if `a = b != 0`, `{a,b}` if `a != b`, both nonzero; zero is
/// neutral. Negation is the identity. Multiplication is mod-p product.
fn hp(p: usize) -> Result<FiniteMultiring, StructureError> {
    if !is_prime(p) {
        return Err(StructureError::NotPrime(p));
    }
    let single = |e| Subset::singleton(p, e);
    let add = OpTable::from_fn(p, |a, b| {
        if a == 0 {
            single(b)
        } else if b == 0 {
            single(a)
        } else if a == b {
            Subset::full(p)
        } else {
            Subset::from_elems(p, &[a, b]).unwrap()
        }
    });
    let mul = OpTable::from_fn(p, |a, b| single(a * b % p));
    let names = (0..p).map(|e| e.to_string()).collect();
    // -a = a holds in every H_p.
    let neg = (0..p).collect();
    FiniteMultiring::new(format!("H{p}"), names, 0, 1, neg, add, mul, true)
}

/// Index layout: 0 maps to 0, `1..=n` to `1..=n`, `n+1..=2n` to `-1..=-n`.
fn kaleidoscope(n: usize) -> Result<FiniteMultiring, StructureError> {
    if n == 0 {
        let mut t = FiniteMultiring::trivial();
        t.set_name("kaleidoscope(0)");
        return Ok(t);
    }
    let size = 2 * n + 1;
    // index -> signed value and back
    let val = |i: Elem| -> i64 {
        if i <= n {
            i as i64
        } else {
            -((i - n) as i64)
        }
    };
    let idx = |v: i64| -> Elem {
        if v >= 0 {
            v as usize
        } else {
            n + (-v) as usize
        }
    };
    let single = |v: i64| Subset::singleton(size, idx(v));
    let sgn = |v: i64| v.signum();
    let add = OpTable::from_fn(size, |ia, ib| {
        let (a, b) = (val(ia), val(ib));
        if a == 0 {
            single(b)
        } else if b == 0 {
            single(a)
        } else if b == -a {
            // {-a, ..., 0, ..., a}
            let m = a.abs();
            Subset::from_elems(size, &(-m..=m).map(idx).collect::<Vec<_>>()).unwrap()
        } else {
            // the dominant magnitude wins and keeps its sign; for equal
            // magnitudes b = a (b = -a is handled above)
            single(if a.abs() >= b.abs() { a } else { b })
        }
    });
    let mul = OpTable::from_fn(size, |ia, ib| {
        let (a, b) = (val(ia), val(ib));
        if a == 0 || b == 0 {
            single(0)
        } else {
            single(sgn(a * b) * a.abs().max(b.abs()))
        }
    });
    let names = (0..size).map(|i| val(i).to_string()).collect();
    let neg = (0..size).map(|i| idx(-val(i))).collect();
    FiniteMultiring::new(format!("kaleidoscope({n})"), names, 0, 1, neg, add, mul, true)
}

fn zmod(m: usize) -> Result<FiniteMultiring, StructureError> {
    if m < 2 {
        return Err(StructureError::BadModulus(m));
    }
    let single = |e| Subset::singleton(m, e);
    let add = OpTable::from_fn(m, |a, b| single((a + b) % m));
    let mul = OpTable::from_fn(m, |a, b| single(a * b % m));
    let names = (0..m).map(|e| e.to_string()).collect();
    let neg = (0..m).map(|a| (m - a) % m).collect();
    FiniteMultiring::new(format!("zmod({m})"), names, 0, 1, neg, add, mul, true)
}

/// Built-ins with carrier size at most `cap`, for exhaustive identity sweeps.
pub fn small_builtins(cap: usize) -> Vec<FiniteMultiring> {
    let mut kinds = vec![Builtin::Krasner, Builtin::Signs];
    for p in [2usize, 3, 5, 7, 11, 13] {
        kinds.push(Builtin::Hp(p));
    }
    for n in 1..=4 {
        kinds.push(Builtin::Kaleidoscope(n));
    }
    for m in 2..=13 {
        kinds.push(Builtin::Zmod(m));
    }
    kinds
        .into_iter()
        .filter_map(|k| make_builtin(k).ok())
        .filter(|s| s.carrier_size() <= cap)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(s: &FiniteMultiring, elems: &[Elem]) -> Subset {
        Subset::from_elems(s.carrier_size(), elems).unwrap()
    }

    #[test]
    fn krasner_addition_table() {
        let k = make_builtin(Builtin::Krasner).unwrap();
        assert_eq!(k.add(1, 1), Subset::full(2));
        assert_eq!(k.add(0, 1), Subset::singleton(2, 1));
        assert_eq!(k.neg(1), 1);
        assert_eq!(k.mul_elem(1, 1), 1);
    }

    #[test]
    fn signs_tables_match_the_defining_rules() {
        let q2 = make_builtin(Builtin::Signs).unwrap();
        let one = q2.element_by_name("1").unwrap();
        let minus = q2.element_by_name("-1").unwrap();
        assert_eq!(q2.add(one, one), Subset::singleton(3, one));
        assert_eq!(q2.add(minus, minus), Subset::singleton(3, minus));
        assert_eq!(q2.add(one, minus), Subset::full(3));
        assert_eq!(q2.mul_elem(minus, minus), one);
        assert_eq!(q2.neg(one), minus);
    }

    #[test]
    fn h3_tables_cell_for_cell() {
        let h3 = make_builtin(Builtin::Hp(3)).unwrap();
        // + | 0 1 2 rows from the defining rules
        let expect_add = [
            [vec![0], vec![1], vec![2]],
            [vec![1], vec![0, 1, 2], vec![1, 2]],
            [vec![2], vec![1, 2], vec![0, 1, 2]],
        ];
        let expect_mul = [[0, 0, 0], [0, 1, 2], [0, 2, 1]];
        for a in 0..3 {
            for b in 0..3 {
                assert_eq!(h3.add(a, b), set(&h3, &expect_add[a][b]), "add {a} {b}");
                assert_eq!(h3.mul_elem(a, b), expect_mul[a][b], "mul {a} {b}");
            }
        }
        assert!((0..3).all(|a| h3.neg(a) == a));
    }

    #[test]
    fn h1_is_rejected() {
        assert_eq!(make_builtin(Builtin::Hp(1)).unwrap_err(), StructureError::NotPrime(1));
        assert!(make_builtin(Builtin::Hp(4)).is_err());
    }

    #[test]
    fn kaleidoscope_two_opposite_sum() {
        let x2 = make_builtin(Builtin::Kaleidoscope(2)).unwrap();
        let two = x2.element_by_name("2").unwrap();
        let minus_two = x2.element_by_name("-2").unwrap();
        assert_eq!(x2.add(two, minus_two), Subset::full(5));
        // sign-magnitude cases
        let one = x2.element_by_name("1").unwrap();
        let minus_one = x2.element_by_name("-1").unwrap();
        assert_eq!(x2.add(two, one), Subset::singleton(5, two));
        assert_eq!(x2.add(minus_two, one), Subset::singleton(5, minus_two));
        assert_eq!(x2.mul_elem(minus_one, two), minus_two);
    }

    #[test]
    fn zmod_is_strict() {
        let z6 = make_builtin(Builtin::Zmod(6)).unwrap();
        assert!(z6.add_table().is_strict());
        assert!(z6.mul_table().is_strict());
        assert_eq!(z6.mul_elem(2, 3), 0);
        assert_eq!(z6.neg(2), 4);
    }

    #[test]
    fn builtin_names_parse() {
        assert_eq!(parse_builtin("K"), Some(Builtin::Krasner));
        assert_eq!(parse_builtin("Q2"), Some(Builtin::Signs));
        assert_eq!(parse_builtin("H5"), Some(Builtin::Hp(5)));
        assert_eq!(parse_builtin("kaleidoscope(2)"), Some(Builtin::Kaleidoscope(2)));
        assert_eq!(parse_builtin("zmod(6)"), Some(Builtin::Zmod(6)));
        assert_eq!(parse_builtin("nope"), None);
    }
}
