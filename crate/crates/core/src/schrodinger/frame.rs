use std::ops::RangeInclusive;

use nalgebra::DMatrix;
use num_complex::Complex64;

use super::{apply_rep, inner, Element, Grid, RepParams, SchrodingerError};
use crate::exact_arith::ExactRational;

/// `{π(exp jX₂) π(exp kX₃) F}` for `j` in `js`, `k` in `ks`, row-major in `j`.
pub fn gabor_system(
    p: &RepParams,
    g: &Grid,
    f: &[Complex64],
    js: RangeInclusive<i64>,
    ks: RangeInclusive<i64>,
) -> Result<Vec<Vec<Complex64>>, SchrodingerError> {
    if !g.step().recip().is_integer() {
        return Err(SchrodingerError::IncompatibleGrid);
    }
    let mut out = Vec::new();
    for j in js {
        for k in ks.clone() {
            let w = [
                (Element::X2, ExactRational::from_integer(j.into())),
                (Element::X3, ExactRational::from_integer(k.into())),
            ];
            out.push(apply_rep(p, g, &w, f)?);
        }
    }
    Ok(out)
}

/// `G[a][b] = ⟨f_a, f_b⟩`.
pub fn gram_matrix(system: &[Vec<Complex64>]) -> DMatrix<Complex64> {
    let r = system.len();
    DMatrix::from_fn(r, r, |a, b| inner(&system[a], &system[b]))
}

/// Numerical rank of the Gram matrix: eigenvalues above `rel_tol` times the
/// largest one.
pub fn gram_rank(system: &[Vec<Complex64>], rel_tol: f64) -> usize {
    let ev = gram_matrix(system).symmetric_eigen().eigenvalues;
    let top = ev.iter().cloned().fold(0.0, f64::max);
    ev.iter().filter(|&&x| x > rel_tol * top).count()
}

/// Row-major `re,im` pairs, one matrix row per line.
pub fn gram_csv(system: &[Vec<Complex64>]) -> String {
    let g = gram_matrix(system);
    let mut s = String::new();
    for a in 0..g.nrows() {
        let row: Vec<String> = (0..g.ncols()).map(|b| format!("{},{}", g[(a, b)].re, g[(a, b)].im)).collect();
        s.push_str(&row.join(","));
        s.push('\n');
    }
    s
}

/// Extreme eigenvalues of the frame operator `S = Σ ⟨·, f⟩ f`.
///
/// Eigenvalues below `1e-10` times the largest are reported as 0, so the
/// lower bound is positive exactly when the system spans.
pub fn frame_bounds(system: &[Vec<Complex64>]) -> (f64, f64) {
    let n = system[0].len();
    let s = DMatrix::from_fn(n, n, |k, l| system.iter().map(|f| f[k] * f[l].conj()).sum::<Complex64>());
    let ev = s.symmetric_eigen().eigenvalues;
    let upper = ev.iter().cloned().fold(f64::MIN, f64::max);
    let lower = ev.iter().cloned().fold(f64::MAX, f64::min);
    let lower = if lower <= 1e-10 * upper { 0.0 } else { lower };
    (lower, upper)
}
