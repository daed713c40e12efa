//! The skew matrix `M(λ) = [λ[X_i, X_j]]`, its Pfaffian and nullspace, and
//! the coadjoint stabilizer `n(λ) = nullspace(M(λ))`.

mod elimination;
mod functional;
mod stabilizer;

use thiserror::Error;

use crate::exact_arith::{RatFunc, SparsePoly};
use crate::lie_core::LieAlgebra;

pub use functional::{generic_functional, Assignment, Coord, Functional};
pub use stabilizer::{specialize, specialize_basis, stabilizer, SpecializeError, StabilizerBasis, StabilizerJson};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CoadjointError {
    #[error("matrix is not skew-symmetric at ({0}, {1})")]
    NotSkew(usize, usize),
    #[error("Pfaffian needs an even dimension, got {0}")]
    OddDimension(usize),
    #[error("functional has {got} coordinates, algebra has dimension {expected}")]
    FunctionalLength { expected: usize, got: usize },
    #[error("coordinate {0} is symbolic but does not use its own dual variable")]
    WrongVariable(usize),
}

/// Square skew-symmetric matrix over the rational function field.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SkewMatrix {
    entries: Vec<Vec<RatFunc>>,
}

impl SkewMatrix {
    pub fn new(entries: Vec<Vec<RatFunc>>) -> Result<Self, CoadjointError> {
        let n = entries.len();
        for (i, row) in entries.iter().enumerate() {
            if row.len() != n {
                return Err(CoadjointError::NotSkew(i, row.len()));
            }
            for j in 0..=i {
                if entries[i][j] != -&entries[j][i] {
                    return Err(CoadjointError::NotSkew(i, j));
                }
            }
        }
        Ok(SkewMatrix { entries })
    }

    pub fn dim(&self) -> usize {
        self.entries.len()
    }

    pub fn get(&self, i: usize, j: usize) -> &RatFunc {
        &self.entries[i][j]
    }

    pub fn rows(&self) -> &[Vec<RatFunc>] {
        &self.entries
    }

    /// Principal submatrix on the given indices.
    pub fn principal(&self, idx: &[usize]) -> SkewMatrix {
        SkewMatrix { entries: idx.iter().map(|&i| idx.iter().map(|&j| self.entries[i][j].clone()).collect()).collect() }
    }

    pub fn det(&self) -> RatFunc {
        elimination::determinant(&self.entries)
    }

    pub fn rank(&self) -> usize {
        elimination::rank(&self.entries, self.dim())
    }

    pub fn mul_vec(&self, v: &[RatFunc]) -> Vec<RatFunc> {
        self.entries
            .iter()
            .map(|row| {
                row.iter().zip(v).fold(RatFunc::zero(v[0].space()), |acc, (a, b)| {
                    if a.is_zero() || b.is_zero() {
                        acc
                    } else {
                        &acc + &(a * b)
                    }
                })
            })
            .collect()
    }
}

/// `M(λ)[i][j] = λ([X_i, X_j])` over the algebra's relabeled basis.
pub fn build_m(alg: &LieAlgebra, lambda: &Functional) -> SkewMatrix {
    let n = alg.dim();
    let space = alg.var_space();
    let coords: Vec<RatFunc> = (0..n).map(|k| RatFunc::from_poly(lambda.coord_poly(space, k))).collect();
    let mut entries = vec![vec![RatFunc::zero(space); n]; n];
    for (i, j, k, c) in alg.nonzero_brackets() {
        let v = &entries[i][j] + &coords[k].scale(&c);
        entries[j][i] = -&v;
        entries[i][j] = v;
    }
    SkewMatrix { entries }
}

/// Pfaffian by expansion along the first row.
pub fn pfaffian(s: &SkewMatrix) -> Result<RatFunc, CoadjointError> {
    let n = s.dim();
    if n % 2 == 1 {
        return Err(CoadjointError::OddDimension(n));
    }
    let space = match s.entries.first() {
        Some(row) => row[0].space().clone(),
        None => unreachable!("empty matrices have no variable space; callers pass dim >= 2"),
    };
    let idx: Vec<usize> = (0..n).collect();
    Ok(pfaffian_rec(s, &idx, &space))
}

fn pfaffian_rec(s: &SkewMatrix, idx: &[usize], space: &std::sync::Arc<crate::exact_arith::VarSpace>) -> RatFunc {
    if idx.is_empty() {
        return RatFunc::one(space);
    }
    let first = idx[0];
    let mut acc = RatFunc::zero(space);
    for k in 1..idx.len() {
        let a = s.get(first, idx[k]);
        if a.is_zero() {
            continue;
        }
        let rest: Vec<usize> = idx[1..].iter().copied().filter(|&x| x != idx[k]).collect();
        let minor = pfaffian_rec(s, &rest, space);
        if minor.is_zero() {
            continue;
        }
        let t = a * &minor;
        acc = if k % 2 == 1 { &acc + &t } else { &acc - &t };
    }
    acc
}

/// Kernel basis of `s` by fraction-free elimination; one vector per
/// non-pivot column.
pub fn nullspace(s: &SkewMatrix) -> Vec<Vec<RatFunc>> {
    elimination::kernel_basis(&s.entries, s.dim())
}

/// Membership in the Zariski open set where the closed forms hold: the
/// leading `(m-1) x (m-1)` principal minor of the generator block (m odd)
/// or the whole `m x m` generator block (m even) is invertible.
pub fn in_omega(alg: &LieAlgebra, lambda: &Functional) -> bool {
    !omega_polynomial(alg, lambda).is_zero()
}

/// Determinant whose non-vanishing defines Ω, evaluated at `lambda`.
pub fn omega_polynomial(alg: &LieAlgebra, lambda: &Functional) -> SparsePoly {
    let m = alg.m();
    let k = if m % 2 == 1 { m - 1 } else { m };
    let gens: Vec<usize> = (1..=k).map(|i| alg.index().generator_index(i)).collect();
    let d = build_m(alg, lambda).principal(&gens).det();
    assert!(d.is_polynomial());
    let c = d.denom().as_constant().unwrap();
    d.numer().scale(&c.recip())
}

/// Ω₁ for odd `m`: every `λ(Z_{j m})`, `j < m`, is nonzero. Vacuous for even `m`.
pub fn in_omega1(alg: &LieAlgebra, lambda: &Functional) -> bool {
    let m = alg.m();
    if m % 2 == 0 {
        return true;
    }
    let space = alg.var_space();
    (1..m).all(|j| !lambda.coord_poly(space, alg.index().center_index(j, m)).is_zero())
}

#[cfg(test)]
mod tests;
