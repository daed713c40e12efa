//! Representation operators of the Heisenberg group and of the free step-two
//! group on three generators, realized on a periodic grid.
//!
//! Phases are reduced modulo 1 in exact arithmetic before conversion to
//! floating point, so every factor is a permutation times a unimodular
//! diagonal up to rounding in the last bit.

pub mod checks;
mod frame;

use std::f64::consts::PI;
use std::fmt;

use num_complex::Complex64;
use num_traits::{Signed, ToPrimitive, Zero};
use thiserror::Error;

use crate::exact_arith::{rational_to_string, ExactRational};

pub use frame::{frame_bounds, gabor_system, gram_csv, gram_matrix, gram_rank};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum SchrodingerError {
    #[error("grid needs N >= 2 and a positive period (got N={n}, L={period})")]
    InvalidGrid { n: usize, period: String },
    #[error("invalid parameters: {0}")]
    InvalidParams(&'static str),
    #[error("factor {factor}: translation {amount} is not a multiple of the grid step {step}")]
    OffGrid { factor: String, amount: String, step: String },
    #[error("{element} is not an element of the {kind} algebra")]
    UnknownElement { element: Element, kind: &'static str },
    #[error("vector has length {got}, grid has {expected} points")]
    LengthMismatch { expected: usize, got: usize },
    #[error("commutator is not a scalar multiple of F (relative residual {residual:e})")]
    NotScalar { residual: f64 },
    #[error("the zero vector has no commutator phase")]
    ZeroVector,
    #[error("integer translations need N/L to be an integer")]
    IncompatibleGrid,
}

/// `N` samples of one period `[0, L)`; sample `k` sits at `t_k = k·L/N`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Grid {
    n: usize,
    period: ExactRational,
    step: ExactRational,
}

impl Grid {
    pub fn new(n: usize, period: ExactRational) -> Result<Self, SchrodingerError> {
        if n < 2 || !period.is_positive() {
            return Err(SchrodingerError::InvalidGrid { n, period: rational_to_string(&period) });
        }
        let step = &period / ExactRational::from_integer(n.into());
        Ok(Grid { n, period, step })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn period(&self) -> &ExactRational {
        &self.period
    }

    pub fn step(&self) -> &ExactRational {
        &self.step
    }

    pub fn point(&self, k: usize) -> ExactRational {
        &self.step * ExactRational::from_integer(k.into())
    }

    /// `x / step` when it is an integer.
    fn steps(&self, x: &ExactRational) -> Option<i64> {
        let r = x / &self.step;
        r.is_integer().then(|| r.to_integer().to_i64()).flatten()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RepParams {
    Heisenberg { lambda: ExactRational },
    /// `(λ₁, λ₂, λ₃, λ₄)` with `λ₃ ≠ 0`.
    Free32 { l1: ExactRational, l2: ExactRational, l3: ExactRational, l4: ExactRational },
}

impl RepParams {
    pub fn heisenberg(lambda: ExactRational) -> Result<Self, SchrodingerError> {
        if lambda.is_zero() {
            return Err(SchrodingerError::InvalidParams("Heisenberg lambda must be nonzero"));
        }
        Ok(RepParams::Heisenberg { lambda })
    }

    pub fn free32(
        l1: ExactRational,
        l2: ExactRational,
        l3: ExactRational,
        l4: ExactRational,
    ) -> Result<Self, SchrodingerError> {
        if l3.is_zero() {
            return Err(SchrodingerError::InvalidParams("Free32 lambda3 must be nonzero"));
        }
        Ok(RepParams::Free32 { l1, l2, l3, l4 })
    }

    fn kind(&self) -> &'static str {
        match self {
            RepParams::Heisenberg { .. } => "Heisenberg",
            RepParams::Free32 { .. } => "Free32",
        }
    }

    /// Compact `key=value` description without spaces.
    pub fn describe(&self) -> String {
        match self {
            RepParams::Heisenberg { lambda } => format!("heisenberg,lambda={}", rational_to_string(lambda)),
            RepParams::Free32 { l1, l2, l3, l4 } => format!(
                "free32,l1={},l2={},l3={},l4={}",
                rational_to_string(l1),
                rational_to_string(l2),
                rational_to_string(l3),
                rational_to_string(l4)
            ),
        }
    }
}

/// Basis elements named as in the operator displays. `Z(k)` is central,
/// `k ∈ 1..=3`, and exists only for the free algebra.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Element {
    X1,
    X2,
    X3,
    Z(u8),
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Element::X1 => f.write_str("X1"),
            Element::X2 => f.write_str("X2"),
            Element::X3 => f.write_str("X3"),
            Element::Z(k) => write!(f, "Z{k}"),
        }
    }
}

/// A product `exp(x_1 E_1) ⋯ exp(x_r E_r)`, stored left to right.
pub type GroupWord = Vec<(Element, ExactRational)>;

/// `e^{2πiθ}` with `θ` reduced mod 1 exactly first.
pub fn unit_phase(theta: &ExactRational) -> Complex64 {
    let frac = theta - theta.floor();
    let f = frac.to_f64().expect("fraction in [0, 1)");
    Complex64::from_polar(1.0, 2.0 * PI * f)
}

/// `(G)(t_k) = scalar · diag[k] · F(t_{k - shift})`.
#[derive(Debug, Clone)]
struct Factor {
    shift: usize,
    scalar: Complex64,
    diag: Option<Vec<Complex64>>,
}

impl Factor {
    fn apply(&self, f: &[Complex64]) -> Vec<Complex64> {
        let n = f.len();
        (0..n)
            .map(|k| {
                let mut v = self.scalar * f[(k + n - self.shift) % n];
                if let Some(d) = &self.diag {
                    v *= d[k];
                }
                v
            })
            .collect()
    }

    fn apply_inverse(&self, g: &[Complex64]) -> Vec<Complex64> {
        let n = g.len();
        (0..n)
            .map(|i| {
                let k = (i + self.shift) % n;
                let mut v = g[k] * self.scalar.conj();
                if let Some(d) = &self.diag {
                    v *= d[k].conj();
                }
                v
            })
            .collect()
    }
}

fn translation(g: &Grid, factor: Element, x: &ExactRational) -> Result<usize, SchrodingerError> {
    let j = g.steps(x).ok_or_else(|| SchrodingerError::OffGrid {
        factor: factor.to_string(),
        amount: rational_to_string(x),
        step: rational_to_string(g.step()),
    })?;
    Ok(j.rem_euclid(g.n() as i64) as usize)
}

/// `k ↦ e^{2πi c t_k}`.
fn modulation(g: &Grid, c: &ExactRational) -> Vec<Complex64> {
    (0..g.n()).map(|k| unit_phase(&(c * g.point(k)))).collect()
}

fn factor(p: &RepParams, g: &Grid, e: Element, x: &ExactRational) -> Result<Factor, SchrodingerError> {
    let one = Complex64::new(1.0, 0.0);
    let unknown = || SchrodingerError::UnknownElement { element: e, kind: p.kind() };
    Ok(match (p, e) {
        (RepParams::Heisenberg { .. }, Element::X3) => Factor { shift: translation(g, e, x)?, scalar: one, diag: None },
        (RepParams::Heisenberg { lambda }, Element::X2) => {
            Factor { shift: 0, scalar: one, diag: Some(modulation(g, &-(lambda * x))) }
        }
        (RepParams::Heisenberg { lambda }, Element::X1) => {
            Factor { shift: 0, scalar: unit_phase(&(lambda * x)), diag: None }
        }
        (RepParams::Heisenberg { .. }, Element::Z(_)) => return Err(unknown()),
        (RepParams::Free32 { l3, .. }, Element::X3) => {
            Factor { shift: 0, scalar: one, diag: Some(modulation(g, &-(x * l3))) }
        }
        (RepParams::Free32 { .. }, Element::X2) => Factor { shift: translation(g, e, x)?, scalar: one, diag: None },
        (RepParams::Free32 { l1, l2, l3, l4 }, Element::X1) => {
            let shift = translation(g, e, &(l2 / l3 * x))?;
            let quadratic = -(x * x * l2 * l1 / l3);
            Factor {
                shift,
                scalar: unit_phase(&(x * l4)) * unit_phase(&quadratic),
                diag: Some(modulation(g, &(x * l1))),
            }
        }
        (RepParams::Free32 { l1, l2, l3, .. }, Element::Z(k)) => {
            let lk = match k {
                1 => l1,
                2 => l2,
                3 => l3,
                _ => return Err(unknown()),
            };
            Factor { shift: 0, scalar: unit_phase(&(x * lk)), diag: None }
        }
    })
}

fn check_len(g: &Grid, f: &[Complex64]) -> Result<(), SchrodingerError> {
    if f.len() != g.n() {
        return Err(SchrodingerError::LengthMismatch { expected: g.n(), got: f.len() });
    }
    Ok(())
}

fn factors(p: &RepParams, g: &Grid, w: &[(Element, ExactRational)]) -> Result<Vec<Factor>, SchrodingerError> {
    w.iter().map(|(e, x)| factor(p, g, *e, x)).collect()
}

/// `π(w) F`, applying the rightmost factor first.
pub fn apply_rep(
    p: &RepParams,
    g: &Grid,
    w: &[(Element, ExactRational)],
    f: &[Complex64],
) -> Result<Vec<Complex64>, SchrodingerError> {
    check_len(g, f)?;
    let fs = factors(p, g, w)?;
    Ok(fs.iter().rev().fold(f.to_vec(), |acc, op| op.apply(&acc)))
}

/// `π(w)⁻¹ F`, the exact inverse of [`apply_rep`].
pub fn apply_inverse(
    p: &RepParams,
    g: &Grid,
    w: &[(Element, ExactRational)],
    f: &[Complex64],
) -> Result<Vec<Complex64>, SchrodingerError> {
    check_len(g, f)?;
    let fs = factors(p, g, w)?;
    Ok(fs.iter().fold(f.to_vec(), |acc, op| op.apply_inverse(&acc)))
}

pub fn inner(a: &[Complex64], b: &[Complex64]) -> Complex64 {
    a.iter().zip(b).map(|(x, y)| x * y.conj()).sum()
}

pub fn norm(a: &[Complex64]) -> f64 {
    a.iter().map(|x| x.norm_sqr()).sum::<f64>().sqrt()
}

/// The scalar `c` with `π(a)π(b)π(a)⁻¹π(b)⁻¹ F = c F`.
pub fn commutator_phase(
    p: &RepParams,
    g: &Grid,
    a: &[(Element, ExactRational)],
    b: &[(Element, ExactRational)],
    f: &[Complex64],
) -> Result<Complex64, SchrodingerError> {
    check_len(g, f)?;
    let ff = inner(f, f).re;
    if ff == 0.0 {
        return Err(SchrodingerError::ZeroVector);
    }
    let step1 = apply_inverse(p, g, b, f)?;
    let step2 = apply_inverse(p, g, a, &step1)?;
    let step3 = apply_rep(p, g, b, &step2)?;
    let out = apply_rep(p, g, a, &step3)?;
    let c = inner(&out, f) / ff;
    let resid: Vec<Complex64> = out.iter().zip(f).map(|(x, y)| x - c * y).collect();
    let residual = norm(&resid) / ff.sqrt();
    if residual > 1e-10 {
        return Err(SchrodingerError::NotScalar { residual });
    }
    Ok(c)
}
