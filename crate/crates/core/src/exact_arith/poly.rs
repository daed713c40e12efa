use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::rational::rational_to_string;
use super::{ArithError, ExactRational, VarSpace};

/// Exponent vector, ordered graded reverse-lexicographically.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    degree: u32,
    exps: Box<[u16]>,
}

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial { degree: 0, exps: vec![0; nvars].into_boxed_slice() }
    }

    pub fn var(nvars: usize, idx: usize, e: u16) -> Self {
        let mut exps = vec![0; nvars];
        exps[idx] = e;
        Monomial { degree: e as u32, exps: exps.into_boxed_slice() }
    }

    pub fn from_exponents(exps: Vec<u16>) -> Self {
        let degree = exps.iter().map(|&e| e as u32).sum();
        Monomial { degree, exps: exps.into_boxed_slice() }
    }

    pub fn exponents(&self) -> &[u16] {
        &self.exps
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn is_one(&self) -> bool {
        self.degree == 0
    }

    fn mul(&self, other: &Monomial) -> Monomial {
        let exps: Box<[u16]> = self.exps.iter().zip(other.exps.iter()).map(|(a, b)| a + b).collect();
        Monomial { degree: self.degree + other.degree, exps }
    }

    /// `self / other` when `other` divides `self`.
    fn checked_div(&self, other: &Monomial) -> Option<Monomial> {
        if other.degree > self.degree {
            return None;
        }
        let mut exps = Vec::with_capacity(self.exps.len());
        for (a, b) in self.exps.iter().zip(other.exps.iter()) {
            exps.push(a.checked_sub(*b)?);
        }
        Some(Monomial { degree: self.degree - other.degree, exps: exps.into_boxed_slice() })
    }

    pub(crate) fn gcd_with(&self, other: &Monomial) -> Monomial {
        Monomial::from_exponents(self.exps.iter().zip(other.exps.iter()).map(|(a, b)| *a.min(b)).collect())
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree.cmp(&other.degree).then_with(|| {
            for (a, b) in self.exps.iter().zip(other.exps.iter()).rev() {
                if a != b {
                    return b.cmp(a);
                }
            }
            Ordering::Equal
        })
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Sparse multivariate polynomial with exact rational coefficients.
///
/// The zero polynomial is the empty term map; stored coefficients are never
/// zero. Terms iterate in ascending monomial order, so the leading term is
/// the last entry.
#[derive(Clone)]
pub struct SparsePoly {
    space: Arc<VarSpace>,
    terms: BTreeMap<Monomial, ExactRational>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PolyOp {
    Add,
    Sub,
    Mul,
    Neg,
}

/// Checked entry point for the four ring operations. `Neg` ignores `b`
/// apart from the space check.
pub fn poly_arith(op: PolyOp, a: &SparsePoly, b: &SparsePoly) -> Result<SparsePoly, ArithError> {
    a.check_space(b)?;
    Ok(match op {
        PolyOp::Add => a.add_terms(b, false),
        PolyOp::Sub => a.add_terms(b, true),
        PolyOp::Mul => a.mul_poly(b),
        PolyOp::Neg => -a,
    })
}

impl SparsePoly {
    pub fn zero(space: &Arc<VarSpace>) -> Self {
        SparsePoly { space: space.clone(), terms: BTreeMap::new() }
    }

    pub fn one(space: &Arc<VarSpace>) -> Self {
        Self::constant(space, ExactRational::one())
    }

    pub fn constant(space: &Arc<VarSpace>, c: ExactRational) -> Self {
        let mut p = Self::zero(space);
        if !c.is_zero() {
            p.terms.insert(Monomial::one(space.len()), c);
        }
        p
    }

    pub fn var(space: &Arc<VarSpace>, idx: usize) -> Self {
        Self::term(space, Monomial::var(space.len(), idx, 1), ExactRational::one())
    }

    pub fn term(space: &Arc<VarSpace>, mono: Monomial, c: ExactRational) -> Self {
        assert_eq!(mono.exps.len(), space.len(), "monomial length must match the variable space");
        let mut p = Self::zero(space);
        if !c.is_zero() {
            p.terms.insert(mono, c);
        }
        p
    }

    pub fn from_terms(space: &Arc<VarSpace>, terms: impl IntoIterator<Item = (Monomial, ExactRational)>) -> Self {
        let mut p = Self::zero(space);
        for (m, c) in terms {
            assert_eq!(m.exps.len(), space.len(), "monomial length must match the variable space");
            p.add_term(m, c);
        }
        p
    }

    pub fn space(&self) -> &Arc<VarSpace> {
        &self.space
    }

    pub fn same_space(&self, other: &SparsePoly) -> bool {
        Arc::ptr_eq(&self.space, &other.space) || *self.space == *other.space
    }

    pub(crate) fn check_space(&self, other: &SparsePoly) -> Result<(), ArithError> {
        if self.same_space(other) {
            Ok(())
        } else {
            Err(ArithError::SpaceMismatch)
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.as_constant().is_some_and(|c| c.is_one())
    }

    /// The value if the polynomial has no variables (zero included).
    pub fn as_constant(&self) -> Option<ExactRational> {
        match self.terms.len() {
            0 => Some(ExactRational::zero()),
            1 => {
                let (m, c) = self.terms.iter().next().unwrap();
                m.is_one().then(|| c.clone())
            }
            _ => None,
        }
    }

    pub fn is_constant(&self) -> bool {
        match self.terms.len() {
            0 => true,
            1 => self.terms.keys().next().unwrap().is_one(),
            _ => false,
        }
    }

    pub fn nterms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &ExactRational)> {
        self.terms.iter()
    }

    pub fn leading_term(&self) -> Option<(&Monomial, &ExactRational)> {
        self.terms.iter().next_back()
    }

    pub fn leading_coeff(&self) -> Option<&ExactRational> {
        self.leading_term().map(|(_, c)| c)
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(|m| m.degree).max().unwrap_or(0)
    }

    fn add_term(&mut self, m: Monomial, c: ExactRational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    fn add_terms(&self, other: &SparsePoly, negate: bool) -> SparsePoly {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), if negate { -c } else { c.clone() });
        }
        out
    }

    fn mul_poly(&self, other: &SparsePoly) -> SparsePoly {
        let mut out = SparsePoly::zero(&self.space);
        if self.is_zero() || other.is_zero() {
            return out;
        }
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        out
    }

    pub fn scale(&self, c: &ExactRational) -> SparsePoly {
        if c.is_zero() {
            return SparsePoly::zero(&self.space);
        }
        SparsePoly {
            space: self.space.clone(),
            terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect(),
        }
    }

    pub fn mul_monomial(&self, mono: &Monomial, c: &ExactRational) -> SparsePoly {
        if c.is_zero() {
            return SparsePoly::zero(&self.space);
        }
        SparsePoly {
            space: self.space.clone(),
            terms: self.terms.iter().map(|(m, a)| (m.mul(mono), a * c)).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> SparsePoly {
        let mut out = SparsePoly::one(&self.space);
        for _ in 0..e {
            out = out.mul_poly(self);
        }
        out
    }

    /// Exact quotient `self / divisor`, or `None` if the division leaves a
    /// remainder.
    pub fn div_exact(&self, divisor: &SparsePoly) -> Option<SparsePoly> {
        assert!(self.same_space(divisor), "div_exact across variable spaces");
        if divisor.is_zero() {
            return None;
        }
        if let Some(c) = divisor.as_constant() {
            return Some(self.scale(&c.recip()));
        }
        let (lm, lc) = divisor.leading_term().map(|(m, c)| (m.clone(), c.clone())).unwrap();
        let mut rem = self.clone();
        let mut quot = SparsePoly::zero(&self.space);
        while let Some((rm, rc)) = rem.leading_term() {
            let qm = rm.checked_div(&lm)?;
            let qc = rc / &lc;
            let neg = -&qc;
            for (m, c) in &divisor.terms {
                rem.add_term(m.mul(&qm), c * &neg);
            }
            quot.add_term(qm, qc);
        }
        Some(quot)
    }

    /// Largest exponent of variable `v`.
    pub fn degree_in(&self, v: usize) -> u16 {
        self.terms.keys().map(|m| m.exps[v]).max().unwrap_or(0)
    }

    pub fn uses_var(&self, v: usize) -> bool {
        self.terms.keys().any(|m| m.exps[v] > 0)
    }

    /// Variables that occur with positive exponent, ascending.
    pub fn used_vars(&self) -> Vec<usize> {
        let mut used = vec![false; self.space.len()];
        for m in self.terms.keys() {
            for (i, &e) in m.exps.iter().enumerate() {
                if e > 0 {
                    used[i] = true;
                }
            }
        }
        used.iter().enumerate().filter_map(|(i, &u)| u.then_some(i)).collect()
    }

    /// Coefficients with respect to variable `v`: entry `k` multiplies `v^k`.
    pub fn coeffs_in(&self, v: usize) -> Vec<SparsePoly> {
        let deg = self.degree_in(v) as usize;
        let mut out = vec![SparsePoly::zero(&self.space); deg + 1];
        for (m, c) in &self.terms {
            let k = m.exps[v] as usize;
            let mut exps = m.exps.to_vec();
            exps[v] = 0;
            out[k].add_term(Monomial::from_exponents(exps), c.clone());
        }
        out
    }

    /// Evaluate with every variable assigned. `values[i]` is the value of
    /// variable `i`.
    pub fn eval(&self, values: &[ExactRational]) -> ExactRational {
        assert_eq!(values.len(), self.space.len());
        let mut acc = ExactRational::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (i, &e) in m.exps.iter().enumerate() {
                if e > 0 {
                    t *= num_traits::pow(values[i].clone(), e as usize);
                }
            }
            acc += t;
        }
        acc
    }

    /// Integer-coefficient associate with content 1 and positive leading
    /// coefficient, plus the rational factor `c` with `self = c * result`.
    pub fn primitive_part(&self) -> (ExactRational, SparsePoly) {
        if self.is_zero() {
            return (ExactRational::zero(), self.clone());
        }
        let mut lcm = BigInt::one();
        for c in self.terms.values() {
            lcm = lcm.lcm(c.denom());
        }
        let mut g = BigInt::zero();
        for c in self.terms.values() {
            let v = c.numer() * (&lcm / c.denom());
            g = g.gcd(&v);
        }
        let mut factor = ExactRational::new(g, lcm);
        if self.leading_coeff().unwrap().is_negative() {
            factor = -factor;
        }
        (factor.clone(), self.scale(&factor.recip()))
    }

    /// Canonical associate: see [`SparsePoly::primitive_part`].
    pub fn normalized(&self) -> SparsePoly {
        self.primitive_part().1
    }
}

impl PartialEq for SparsePoly {
    fn eq(&self, other: &Self) -> bool {
        self.same_space(other) && self.terms == other.terms
    }
}

impl Eq for SparsePoly {}

impl std::hash::Hash for SparsePoly {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        for (m, c) in &self.terms {
            m.hash(state);
            c.hash(state);
        }
    }
}

impl fmt::Debug for SparsePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SparsePoly({self})")
    }
}

/// `c * l12^e * l1^f` terms, leading term first, joined by ` + `.
impl fmt::Display for SparsePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let vars = self.space.vars();
        for (k, (m, c)) in self.terms.iter().rev().enumerate() {
            if k > 0 {
                f.write_str(" + ")?;
            }
            f.write_str(&rational_to_string(c))?;
            for (i, &e) in m.exps.iter().enumerate() {
                match e {
                    0 => {}
                    1 => write!(f, " * {}", vars[i])?,
                    _ => write!(f, " * {}^{}", vars[i], e)?,
                }
            }
        }
        Ok(())
    }
}

// Operator forms panic on mismatched spaces; `poly_arith` is the checked path.
impl Add for &SparsePoly {
    type Output = SparsePoly;
    fn add(self, rhs: &SparsePoly) -> SparsePoly {
        poly_arith(PolyOp::Add, self, rhs).expect("polynomial add")
    }
}

impl Sub for &SparsePoly {
    type Output = SparsePoly;
    fn sub(self, rhs: &SparsePoly) -> SparsePoly {
        poly_arith(PolyOp::Sub, self, rhs).expect("polynomial sub")
    }
}

impl Mul for &SparsePoly {
    type Output = SparsePoly;
    fn mul(self, rhs: &SparsePoly) -> SparsePoly {
        poly_arith(PolyOp::Mul, self, rhs).expect("polynomial mul")
    }
}

impl Neg for &SparsePoly {
    type Output = SparsePoly;
    fn neg(self) -> SparsePoly {
        SparsePoly {
            space: self.space.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

impl Neg for SparsePoly {
    type Output = SparsePoly;
    fn neg(self) -> SparsePoly {
        -&self
    }
}
