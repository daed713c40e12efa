use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::gcd::gcd;
use super::{ArithError, ExactRational, SparsePoly, VarSpace};

/// Reduced fraction of two polynomials.
///
/// Canonical form: `gcd(num, den)` is a unit, both have integer coefficients
/// with joint content 1, and `den` has a positive leading coefficient. Equal
/// rational functions are therefore structurally equal.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatFunc {
    num: SparsePoly,
    den: SparsePoly,
}

pub fn ratfunc_reduce(num: &SparsePoly, den: &SparsePoly) -> Result<RatFunc, ArithError> {
    RatFunc::new(num.clone(), den.clone())
}

impl RatFunc {
    pub fn new(num: SparsePoly, den: SparsePoly) -> Result<Self, ArithError> {
        num.check_space(&den)?;
        if den.is_zero() {
            return Err(ArithError::ZeroDenominator);
        }
        Ok(Self::reduce(num, den))
    }

    pub fn from_poly(p: SparsePoly) -> Self {
        let one = SparsePoly::one(p.space());
        Self::reduce(p, one)
    }

    pub fn zero(space: &Arc<VarSpace>) -> Self {
        RatFunc { num: SparsePoly::zero(space), den: SparsePoly::one(space) }
    }

    pub fn one(space: &Arc<VarSpace>) -> Self {
        Self::constant(space, ExactRational::one())
    }

    pub fn constant(space: &Arc<VarSpace>, c: ExactRational) -> Self {
        if c.is_zero() {
            return Self::zero(space);
        }
        Self::normalize_scalars(SparsePoly::constant(space, c), SparsePoly::one(space))
    }

    pub fn var(space: &Arc<VarSpace>, idx: usize) -> Self {
        Self::from_poly(SparsePoly::var(space, idx))
    }

    fn reduce(num: SparsePoly, den: SparsePoly) -> Self {
        if num.is_zero() {
            return Self::zero(num.space());
        }
        let (num, den) = if den.is_constant() || num.is_constant() {
            (num, den)
        } else {
            let g = gcd(&num, &den);
            if g.is_one() {
                (num, den)
            } else {
                (num.div_exact(&g).expect("gcd divides"), den.div_exact(&g).expect("gcd divides"))
            }
        };
        Self::normalize_scalars(num, den)
    }

    fn normalize_scalars(num: SparsePoly, den: SparsePoly) -> Self {
        let mut lcm = BigInt::one();
        for (_, c) in num.terms().chain(den.terms()) {
            lcm = lcm.lcm(c.denom());
        }
        let mut g = BigInt::zero();
        for (_, c) in num.terms().chain(den.terms()) {
            g = g.gcd(&(c.numer() * (&lcm / c.denom())));
        }
        let mut f = ExactRational::new(lcm, g);
        if den.leading_coeff().unwrap().is_negative() {
            f = -f;
        }
        if f.is_one() {
            RatFunc { num, den }
        } else {
            RatFunc { num: num.scale(&f), den: den.scale(&f) }
        }
    }

    pub fn numer(&self) -> &SparsePoly {
        &self.num
    }

    pub fn denom(&self) -> &SparsePoly {
        &self.den
    }

    pub fn space(&self) -> &Arc<VarSpace> {
        self.num.space()
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num == self.den
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_constant()
    }

    pub fn as_constant(&self) -> Option<ExactRational> {
        Some(self.num.as_constant()? / self.den.as_constant()?)
    }

    pub fn scale(&self, c: &ExactRational) -> RatFunc {
        if c.is_zero() {
            return Self::zero(self.space());
        }
        Self::normalize_scalars(self.num.scale(c), self.den.clone())
    }

    pub fn checked_add(&self, other: &RatFunc) -> Result<RatFunc, ArithError> {
        self.num.check_space(&other.num)?;
        if self.is_zero() {
            return Ok(other.clone());
        }
        if other.is_zero() {
            return Ok(self.clone());
        }
        if self.den == other.den {
            return Ok(Self::reduce(&self.num + &other.num, self.den.clone()));
        }
        let num = &(&self.num * &other.den) + &(&other.num * &self.den);
        Ok(Self::reduce(num, &self.den * &other.den))
    }

    pub fn checked_mul(&self, other: &RatFunc) -> Result<RatFunc, ArithError> {
        self.num.check_space(&other.num)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero(self.space()));
        }
        Ok(Self::reduce(&self.num * &other.num, &self.den * &other.den))
    }

    pub fn inv(&self) -> Result<RatFunc, ArithError> {
        if self.is_zero() {
            return Err(ArithError::ZeroDenominator);
        }
        Ok(Self::normalize_scalars(self.den.clone(), self.num.clone()))
    }

    pub fn checked_div(&self, other: &RatFunc) -> Result<RatFunc, ArithError> {
        self.checked_mul(&other.inv()?)
    }

    /// Value at a point, `None` if the denominator vanishes there.
    pub fn eval(&self, values: &[ExactRational]) -> Option<ExactRational> {
        let d = self.den.eval(values);
        if d.is_zero() {
            None
        } else {
            Some(self.num.eval(values) / d)
        }
    }
}

impl fmt::Debug for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RatFunc({self})")
    }
}

/// `num` when the denominator is 1, otherwise `(num) / (den)`.
impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

impl Add for &RatFunc {
    type Output = RatFunc;
    fn add(self, rhs: &RatFunc) -> RatFunc {
        self.checked_add(rhs).expect("rational function add")
    }
}

impl Sub for &RatFunc {
    type Output = RatFunc;
    fn sub(self, rhs: &RatFunc) -> RatFunc {
        self.checked_add(&-rhs).expect("rational function sub")
    }
}

impl Mul for &RatFunc {
    type Output = RatFunc;
    fn mul(self, rhs: &RatFunc) -> RatFunc {
        self.checked_mul(rhs).expect("rational function mul")
    }
}

impl Div for &RatFunc {
    type Output = RatFunc;
    fn div(self, rhs: &RatFunc) -> RatFunc {
        self.checked_div(rhs).expect("rational function div")
    }
}

impl Neg for &RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        RatFunc { num: -&self.num, den: self.den.clone() }
    }
}
