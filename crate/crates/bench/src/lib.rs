//! Shared generators for the benchmark suite.

use multalg_core::builtins::{make_builtin, Builtin};
use multalg_core::poly::MultiPoly;
use multalg_core::FiniteMultiring;

pub fn krasner() -> FiniteMultiring {
    make_builtin(Builtin::Krasner).unwrap()
}

pub fn h3() -> FiniteMultiring {
    make_builtin(Builtin::Hp(3)).unwrap()
}

pub fn kaleidoscope(n: usize) -> FiniteMultiring {
    make_builtin(Builtin::Kaleidoscope(n)).unwrap()
}

/// Deterministic polynomial stream over a structure: coefficient vectors
/// from a splitmix-style counter.
pub fn poly_stream(s: &FiniteMultiring, paper_deg: usize, count: usize) -> Vec<MultiPoly> {
    let n = s.carrier_size() as u64;
    let mut state = 0x9e37_79b9_7f4a_7c15u64;
    let mut next = move || {
        state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
        state >> 33
    };
    (0..count)
        .map(|_| {
            let coeffs = (0..paper_deg).map(|_| (next() % n) as usize).collect();
            MultiPoly::from_coeffs(s, coeffs)
        })
        .collect()
}
