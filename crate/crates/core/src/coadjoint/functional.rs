use std::collections::BTreeMap;
use std::sync::Arc;

use num_traits::Zero;

use super::CoadjointError;
use crate::exact_arith::{ExactRational, SparsePoly, VarSpace, Variable};
use crate::lie_core::LieAlgebra;

/// One coordinate of a linear functional on the relabeled basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Coord {
    Symbolic(Variable),
    Numeric(ExactRational),
}

/// Point assignment for the dual coordinates.
pub type Assignment = BTreeMap<Variable, ExactRational>;

/// A functional `λ`, coordinate `k` being `λ(X_k)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Functional {
    coords: Vec<Coord>,
}

/// Every coordinate symbolic: `λ(X_k)` is the dual variable of `X_k`.
pub fn generic_functional(alg: &LieAlgebra) -> Functional {
    let ix = alg.index();
    Functional { coords: (0..alg.dim()).map(|k| Coord::Symbolic(ix.label(k))).collect() }
}

impl Functional {
    pub fn new(alg: &LieAlgebra, coords: Vec<Coord>) -> Result<Self, CoadjointError> {
        if coords.len() != alg.dim() {
            return Err(CoadjointError::FunctionalLength { expected: alg.dim(), got: coords.len() });
        }
        for (k, c) in coords.iter().enumerate() {
            if let Coord::Symbolic(v) = c {
                if *v != alg.index().label(k) {
                    return Err(CoadjointError::WrongVariable(k));
                }
            }
        }
        Ok(Functional { coords })
    }

    pub fn numeric(alg: &LieAlgebra, values: Vec<ExactRational>) -> Result<Self, CoadjointError> {
        Self::new(alg, values.into_iter().map(Coord::Numeric).collect())
    }

    /// Numeric functional from named coordinates; unnamed ones are 0.
    pub fn from_assignment(alg: &LieAlgebra, a: &Assignment) -> Self {
        let ix = alg.index();
        Functional {
            coords: (0..alg.dim())
                .map(|k| Coord::Numeric(a.get(&ix.label(k)).cloned().unwrap_or_else(ExactRational::zero)))
                .collect(),
        }
    }

    pub fn coords(&self) -> &[Coord] {
        &self.coords
    }

    pub fn is_numeric(&self) -> bool {
        self.coords.iter().all(|c| matches!(c, Coord::Numeric(_)))
    }

    pub fn values(&self) -> Option<Vec<ExactRational>> {
        self.coords
            .iter()
            .map(|c| match c {
                Coord::Numeric(q) => Some(q.clone()),
                Coord::Symbolic(_) => None,
            })
            .collect()
    }

    pub fn to_assignment(&self, alg: &LieAlgebra) -> Option<Assignment> {
        let ix = alg.index();
        Some(self.values()?.into_iter().enumerate().map(|(k, q)| (ix.label(k), q)).collect())
    }

    /// Coordinate `k` as a polynomial over `space` (the algebra's dual
    /// coordinates).
    pub fn coord_poly(&self, space: &Arc<VarSpace>, k: usize) -> SparsePoly {
        match &self.coords[k] {
            Coord::Symbolic(v) => SparsePoly::var(space, space.index_of(*v).expect("variable in space")),
            Coord::Numeric(q) => SparsePoly::constant(space, q.clone()),
        }
    }

    /// `q · λ` for numeric coordinates; symbolic coordinates are left alone.
    pub fn scaled(&self, q: &ExactRational) -> Functional {
        Functional {
            coords: self
                .coords
                .iter()
                .map(|c| match c {
                    Coord::Numeric(x) => Coord::Numeric(x * q),
                    other => other.clone(),
                })
                .collect(),
        }
    }
}
