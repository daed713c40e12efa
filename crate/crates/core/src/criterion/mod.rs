//! The rational-ideal test: `π_λ|_Γ` is irreducible iff the stabilizer of
//! `λ` lies in no proper rational ideal, i.e. iff the rational closure of
//! its generator tail is all of `ℚ^m`.

mod closed_forms;
mod sweep;

use std::collections::BTreeMap;
use std::fmt;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::coadjoint::{
    generic_functional, in_omega, in_omega1, specialize_basis, stabilizer, Functional, SpecializeError,
    StabilizerBasis,
};
use crate::exact_arith::{poly_gcd, qlinalg, rational_to_string, ExactRational, Monomial, RatFunc, SparsePoly};
use crate::lie_core::LieAlgebra;

pub use closed_forms::{m5_closed_forms, ClosedFormCheck, PAPER_M5_ALPHAS};
pub use sweep::{parse_m_range, sweep_row, theorem_sweep, SweepRow};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Verdict {
    Irreducible,
    Reducible,
    Degenerate,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Verdict::Irreducible => "Irreducible",
            Verdict::Reducible => "Reducible",
            Verdict::Degenerate => "Degenerate",
        };
        f.write_str(s)
    }
}

/// How the stabilizer of a numeric functional is obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Mode {
    /// Nullspace of `M(λ)` at the point itself. Valid for every `λ`.
    #[default]
    Direct,
    /// Specialize the generic symbolic stabilizer. Requires `λ ∈ Ω ∩ Ω₁`
    /// and reports `Degenerate` otherwise.
    ViaGeneric,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    /// Generator coordinates of each extra stabilizer vector.
    pub tail: Vec<Vec<String>>,
    /// Reduced row echelon basis of the rational closure of `tail`.
    pub closure_basis: Vec<Vec<String>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CriterionReport {
    pub verdict: Verdict,
    #[serde(rename = "tail_dimQ")]
    pub tail_dim_q: usize,
    pub required_dim: usize,
    pub stab_dim: usize,
    pub witness: Witness,
    pub notes: String,
}

/// ℚ-basis (in reduced row echelon form) of the smallest rational subspace
/// containing every vector for all values of the variables.
///
/// Each vector is cleared to a polynomial vector over a common denominator;
/// the coefficient vectors of its monomials then span the closure.
pub fn rational_closure(vectors: &[Vec<RatFunc>]) -> Vec<Vec<ExactRational>> {
    let Some(ncols) = vectors.first().map(Vec::len) else {
        return Vec::new();
    };
    let mut rows = Vec::new();
    for v in vectors {
        let polys = clear_to_polys(v);
        let mut by_mono: BTreeMap<Monomial, Vec<ExactRational>> = BTreeMap::new();
        for (k, p) in polys.iter().enumerate() {
            for (mono, c) in p.terms() {
                by_mono.entry(mono.clone()).or_insert_with(|| vec![ExactRational::zero(); ncols])[k] = c.clone();
            }
        }
        rows.extend(by_mono.into_values());
    }
    qlinalg::rref(rows, ncols).0
}

fn clear_to_polys(v: &[RatFunc]) -> Vec<SparsePoly> {
    let mut den: Option<SparsePoly> = None;
    for x in v.iter().filter(|x| !x.is_zero()) {
        den = Some(match den {
            None => x.denom().clone(),
            Some(d) => {
                let g = poly_gcd(&d, x.denom()).expect("denominators are nonzero");
                &d * &x.denom().div_exact(&g).expect("gcd divides")
            }
        });
    }
    let Some(den) = den else {
        return v.iter().map(|x| x.numer().clone()).collect();
    };
    v.iter()
        .map(|x| {
            if x.is_zero() {
                return x.numer().clone();
            }
            let cofactor = den.div_exact(x.denom()).expect("common denominator");
            x.numer() * &cofactor
        })
        .collect()
}

fn tail_vectors(stab: &StabilizerBasis, alg: &LieAlgebra) -> Vec<Vec<RatFunc>> {
    stab.extra_vectors.iter().map(|v| v[alg.derived_dim()..].to_vec()).collect()
}

/// `dim_Q` of the generator-coordinate tails of the extra stabilizer vectors.
pub fn tail_dim_q(stab: &StabilizerBasis, alg: &LieAlgebra) -> usize {
    rational_closure(&tail_vectors(stab, alg)).len()
}

fn report(alg: &LieAlgebra, stab: &StabilizerBasis, notes: Vec<String>) -> CriterionReport {
    let tails = tail_vectors(stab, alg);
    let closure = rational_closure(&tails);
    let tail_dim_q = closure.len();
    let verdict = if tail_dim_q == alg.m() { Verdict::Irreducible } else { Verdict::Reducible };
    CriterionReport {
        verdict,
        tail_dim_q,
        required_dim: alg.m(),
        stab_dim: stab.dim(),
        witness: Witness {
            tail: tails.iter().map(|v| v.iter().map(|x| x.to_string()).collect()).collect(),
            closure_basis: closure.iter().map(|r| r.iter().map(rational_to_string).collect()).collect(),
        },
        notes: notes.join("; "),
    }
}

fn genericity_notes(alg: &LieAlgebra, lambda: &Functional) -> Vec<String> {
    let mut notes = Vec::new();
    if !lambda.is_numeric() {
        notes.push("generic symbolic functional".to_string());
    }
    if !in_omega(alg, lambda) {
        notes.push("Omega determinant vanishes".to_string());
    }
    if !in_omega1(alg, lambda) {
        notes.push(format!("Omega1 fails: some l(Z_j{}) = 0", alg.m()));
    }
    notes
}

/// Decides irreducibility of the lattice restriction from the actual
/// nullspace of `M(λ)`.
pub fn check_irreducible(alg: &LieAlgebra, lambda: &Functional) -> CriterionReport {
    check_irreducible_with(alg, lambda, Mode::Direct)
}

pub fn check_irreducible_with(alg: &LieAlgebra, lambda: &Functional, mode: Mode) -> CriterionReport {
    let mut notes = genericity_notes(alg, lambda);
    let outside = notes.iter().any(|n| n.starts_with("Omega"));
    if mode == Mode::Direct || !lambda.is_numeric() {
        if outside {
            notes.push("decided from the actual nullspace".to_string());
        }
        return report(alg, &stabilizer(alg, lambda), notes);
    }
    let degenerate = |mut notes: Vec<String>, why: String| {
        notes.push(why);
        CriterionReport {
            verdict: Verdict::Degenerate,
            tail_dim_q: 0,
            required_dim: alg.m(),
            stab_dim: 0,
            witness: Witness { tail: Vec::new(), closure_basis: Vec::new() },
            notes: notes.join("; "),
        }
    };
    if outside {
        return degenerate(notes, "generic closed form not valid here".to_string());
    }
    let generic = stabilizer(alg, &generic_functional(alg));
    let point = lambda.to_assignment(alg).expect("numeric functional");
    match specialize_basis(&generic, alg, &point) {
        Ok(stab) => report(alg, &stab, notes),
        Err(SpecializeError::Degenerate { denominator }) => {
            degenerate(notes, format!("denominator {denominator} vanishes"))
        }
        Err(e) => degenerate(notes, e.to_string()),
    }
}
