use num_traits::Zero;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use super::{build_m, nullspace, Assignment, Functional};
use crate::exact_arith::{ExactRational, RatFunc, SparsePoly, Variable};
use crate::lie_core::LieAlgebra;

/// `n(λ) = z ⊕ span(extra_vectors)`.
///
/// Extra vectors have zero center coordinates and are scaled so that their
/// last nonzero generator coordinate is 1, i.e. `γ = (α, 1)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StabilizerBasis {
    pub center_part: Vec<usize>,
    pub extra_vectors: Vec<Vec<RatFunc>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StabilizerJson {
    pub center_dim: usize,
    pub extra: Vec<Vec<String>>,
}

impl StabilizerBasis {
    pub fn dim(&self) -> usize {
        self.center_part.len() + self.extra_vectors.len()
    }

    /// All basis vectors: center unit vectors first, then the extras.
    pub fn vectors(&self, alg: &LieAlgebra) -> Vec<Vec<RatFunc>> {
        let space = alg.var_space();
        let n = alg.dim();
        let mut out: Vec<Vec<RatFunc>> = self
            .center_part
            .iter()
            .map(|&c| {
                let mut v = vec![RatFunc::zero(space); n];
                v[c] = RatFunc::one(space);
                v
            })
            .collect();
        out.extend(self.extra_vectors.iter().cloned());
        out
    }

    pub fn to_json(&self) -> StabilizerJson {
        StabilizerJson {
            center_dim: self.center_part.len(),
            extra: self.extra_vectors.iter().map(|v| v.iter().map(|x| x.to_string()).collect()).collect(),
        }
    }
}

/// Full nullspace of `M(λ)` split into the center and normalized extras.
pub fn stabilizer(alg: &LieAlgebra, lambda: &Functional) -> StabilizerBasis {
    let m = build_m(alg, lambda);
    let (center, _) = alg.center_and_derived();
    let mut extra = Vec::new();
    for mut v in nullspace(&m) {
        let support: Vec<usize> = (0..v.len()).filter(|&k| !v[k].is_zero()).collect();
        if support.len() == 1 && center.contains(&support[0]) {
            continue;
        }
        for &c in &center {
            v[c] = RatFunc::zero(alg.var_space());
        }
        extra.push(normalize_last_generator(v, alg.derived_dim()));
    }
    StabilizerBasis { center_part: center, extra_vectors: extra }
}

fn normalize_last_generator(v: Vec<RatFunc>, derived_dim: usize) -> Vec<RatFunc> {
    let Some(last) = (derived_dim..v.len()).rev().find(|&k| !v[k].is_zero()) else {
        return v;
    };
    if v[last].is_one() {
        return v;
    }
    let s = v[last].inv().expect("nonzero");
    v.iter().map(|x| x * &s).collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SpecializeError {
    /// The point lies on the zero set of this denominator.
    #[error("denominator {denominator} vanishes at the given point")]
    Degenerate { denominator: SparsePoly },
    #[error("variable {0} has no value")]
    Unassigned(Variable),
}

/// Substitutes rational values for every variable occurring in `r`.
pub fn specialize(r: &RatFunc, assignment: &Assignment) -> Result<ExactRational, SpecializeError> {
    let space = r.space();
    let mut values = vec![ExactRational::zero(); space.len()];
    for p in [r.numer(), r.denom()] {
        for k in p.used_vars() {
            let v = space.vars()[k];
            values[k] = assignment.get(&v).cloned().ok_or(SpecializeError::Unassigned(v))?;
        }
    }
    r.eval(&values).ok_or_else(|| SpecializeError::Degenerate { denominator: r.denom().clone() })
}

/// Specializes every entry, then renormalizes each extra vector.
pub fn specialize_basis(
    b: &StabilizerBasis,
    alg: &LieAlgebra,
    assignment: &Assignment,
) -> Result<StabilizerBasis, SpecializeError> {
    let space = alg.var_space();
    let mut extra = Vec::with_capacity(b.extra_vectors.len());
    for v in &b.extra_vectors {
        let mut w = Vec::with_capacity(v.len());
        for x in v {
            w.push(RatFunc::constant(space, specialize(x, assignment)?));
        }
        extra.push(normalize_last_generator(w, alg.derived_dim()));
    }
    Ok(StabilizerBasis { center_part: b.center_part.clone(), extra_vectors: extra })
}
