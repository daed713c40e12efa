//! Seeded random inputs shared by the integration tests.
#![allow(dead_code)]

use std::sync::Arc;

use nilrep::coadjoint::{in_omega, in_omega1, Assignment, Functional, SkewMatrix};
use nilrep::exact_arith::{ExactRational, RatFunc, VarSpace};
use nilrep::lie_core::LieAlgebra;
use nilrep::schrodinger::checks::seed_from_env;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// RNG seeded from `NILREP_SEED` (or the default), offset per test so that
/// tests do not share streams.
pub fn rng(stream: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed_from_env() ^ stream.wrapping_mul(0x9e37_79b9_7f4a_7c15))
}

pub fn rational(rng: &mut impl Rng) -> ExactRational {
    ExactRational::new(rng.gen_range(-9i64..=9).into(), rng.gen_range(1i64..=5).into())
}

pub fn nonzero_rational(rng: &mut impl Rng) -> ExactRational {
    loop {
        let q = rational(rng);
        if q != ExactRational::from_integer(0.into()) {
            return q;
        }
    }
}

pub fn empty_space() -> Arc<VarSpace> {
    VarSpace::new(Vec::new())
}

pub fn skew(rng: &mut impl Rng, n: usize) -> SkewMatrix {
    let space = empty_space();
    let mut rows = vec![vec![RatFunc::zero(&space); n]; n];
    for i in 0..n {
        for j in i + 1..n {
            let q = rational(rng);
            rows[i][j] = RatFunc::constant(&space, q.clone());
            rows[j][i] = RatFunc::constant(&space, -q);
        }
    }
    SkewMatrix::new(rows).expect("skew by construction")
}

/// Every coordinate random (zero allowed).
pub fn functional(rng: &mut impl Rng, alg: &LieAlgebra) -> Functional {
    let a: Assignment = alg.var_space().vars().iter().map(|&v| (v, rational(rng))).collect();
    Functional::from_assignment(alg, &a)
}

/// Random rational point of `Ω ∩ Ω₁`.
pub fn generic_point(rng: &mut impl Rng, alg: &LieAlgebra) -> Functional {
    loop {
        let a: Assignment = alg.var_space().vars().iter().map(|&v| (v, nonzero_rational(rng))).collect();
        let f = Functional::from_assignment(alg, &a);
        if in_omega(alg, &f) && in_omega1(alg, &f) {
            return f;
        }
    }
}
