//! Exact arithmetic over the rationals and over the rational function field
//! in the dual coordinates `l{i}{j}` / `l{i}`.
//!
//! Every symbolic computation downstream (structure constants, the coadjoint
//! matrix, nullspaces, Pfaffians) is carried out with the types in this module.

mod gcd;
mod parse;
mod poly;
pub mod qlinalg;
pub(crate) mod rational;
mod ratfunc;
mod var;

use thiserror::Error;

pub use gcd::poly_gcd;
pub use parse::{parse_poly, parse_ratfunc, ParseError};
pub use poly::{poly_arith, Monomial, PolyOp, SparsePoly};
pub use rational::{parse_rational, rational_to_string, ExactRational};
pub use ratfunc::{ratfunc_reduce, RatFunc};
pub use var::{VarSpace, Variable};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ArithError {
    #[error("operands live in different variable spaces")]
    SpaceMismatch,
    #[error("division by the zero polynomial")]
    ZeroDenominator,
    #[error("gcd of two zero polynomials is undefined")]
    GcdOfZeros,
}

/// Scalars that a Lie bracket can be evaluated over: plain rationals or
/// rational functions.
pub trait Coefficient: Clone + PartialEq {
    fn zero_like(&self) -> Self;
    fn vanishes(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn scale(&self, c: &ExactRational) -> Self;
}

impl Coefficient for ExactRational {
    fn zero_like(&self) -> Self {
        num_traits::Zero::zero()
    }
    fn vanishes(&self) -> bool {
        num_traits::Zero::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn scale(&self, c: &ExactRational) -> Self {
        self * c
    }
}

impl Coefficient for RatFunc {
    fn zero_like(&self) -> Self {
        RatFunc::zero(self.space())
    }
    fn vanishes(&self) -> bool {
        RatFunc::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn scale(&self, c: &ExactRational) -> Self {
        RatFunc::scale(self, c)
    }
}
