//! Fraction-free (Bareiss) elimination over the polynomial ring. Rational
//! functions appear only in back-substitution.

use crate::exact_arith::{RatFunc, SparsePoly};

/// Row echelon form produced by Bareiss elimination.
pub(crate) struct Echelon {
    pub rows: Vec<Vec<SparsePoly>>,
    /// Pivot column of row `k`, for each of the first `rank` rows.
    pub pivots: Vec<usize>,
    pub swaps: usize,
}

impl Echelon {
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }
}

/// Pivot: first nonzero entry at or below the current row, columns taken
/// left to right.
pub(crate) fn bareiss(mut a: Vec<Vec<SparsePoly>>, ncols: usize) -> Echelon {
    let nrows = a.len();
    let mut pivots = Vec::new();
    let mut swaps = 0;
    if nrows == 0 {
        return Echelon { rows: a, pivots, swaps };
    }
    let mut prev = SparsePoly::one(a[0][0].space());
    let mut r = 0;
    for c in 0..ncols {
        if r == nrows {
            break;
        }
        let Some(p) = (r..nrows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        if p != r {
            a.swap(p, r);
            swaps += 1;
        }
        let (top, bottom) = a.split_at_mut(r + 1);
        let pivot_row = &top[r];
        let piv = &pivot_row[c];
        for row in bottom.iter_mut() {
            let lead = std::mem::replace(&mut row[c], SparsePoly::zero(piv.space()));
            for j in c + 1..ncols {
                let cur = &row[j];
                let cross = &pivot_row[j];
                let num = match (cur.is_zero(), lead.is_zero() || cross.is_zero()) {
                    (true, true) => continue,
                    (false, true) => piv * cur,
                    (true, false) => -(&lead * cross),
                    (false, false) => &(piv * cur) - &(&lead * cross),
                };
                row[j] = if prev.is_one() {
                    num
                } else {
                    num.div_exact(&prev).expect("Bareiss step divides exactly by the previous pivot")
                };
            }
        }
        prev = a[r][c].clone();
        pivots.push(c);
        r += 1;
    }
    Echelon { rows: a, pivots, swaps }
}

/// Multiplies each row by the lcm of its denominators.
pub(crate) fn clear_denominators(rows: &[Vec<RatFunc>]) -> (Vec<Vec<SparsePoly>>, Vec<SparsePoly>) {
    let mut out = Vec::with_capacity(rows.len());
    let mut scales = Vec::with_capacity(rows.len());
    for row in rows {
        let space = row[0].space();
        let mut l = SparsePoly::one(space);
        for x in row {
            if !x.denom().is_constant() {
                let g = crate::exact_arith::poly_gcd(&l, x.denom()).expect("nonzero");
                l = &l * &x.denom().div_exact(&g).unwrap();
            } else if !x.denom().is_one() {
                l = l.scale(&x.denom().as_constant().unwrap());
            }
        }
        let lr = RatFunc::from_poly(l.clone());
        out.push(
            row.iter()
                .map(|x| {
                    let y = x * &lr;
                    debug_assert!(y.is_polynomial());
                    let c = y.denom().as_constant().unwrap();
                    y.numer().scale(&c.recip())
                })
                .collect(),
        );
        scales.push(l);
    }
    (out, scales)
}

/// Kernel basis of the matrix given by `rows` (all of length `ncols`): one
/// vector per non-pivot column, with a 1 there and 0 at the other non-pivot
/// columns.
pub(crate) fn kernel_basis(rows: &[Vec<RatFunc>], ncols: usize) -> Vec<Vec<RatFunc>> {
    if rows.is_empty() {
        return Vec::new();
    }
    let space = rows[0][0].space().clone();
    let (polys, _) = clear_denominators(rows);
    let ech = bareiss(polys, ncols);
    let free: Vec<usize> = (0..ncols).filter(|c| !ech.pivots.contains(c)).collect();
    let mut basis = Vec::with_capacity(free.len());
    for &f in &free {
        let mut x = vec![RatFunc::zero(&space); ncols];
        x[f] = RatFunc::one(&space);
        for k in (0..ech.rank()).rev() {
            let pc = ech.pivots[k];
            let row = &ech.rows[k];
            let mut s = RatFunc::zero(&space);
            for j in pc + 1..ncols {
                if x[j].is_zero() || row[j].is_zero() {
                    continue;
                }
                s = &s + &(&x[j] * &RatFunc::from_poly(row[j].clone()));
            }
            if !s.is_zero() {
                x[pc] = -&(&s / &RatFunc::from_poly(row[pc].clone()));
            }
        }
        basis.push(x);
    }
    basis
}

/// Determinant of a square matrix over the rational function field.
pub(crate) fn determinant(rows: &[Vec<RatFunc>]) -> RatFunc {
    let n = rows.len();
    assert!(rows.iter().all(|r| r.len() == n), "determinant of a non-square matrix");
    let space = rows[0][0].space().clone();
    let (polys, scales) = clear_denominators(rows);
    let ech = bareiss(polys, n);
    if ech.rank() < n {
        return RatFunc::zero(&space);
    }
    let mut det = ech.rows[n - 1][n - 1].clone();
    if ech.swaps % 2 == 1 {
        det = -det;
    }
    let mut denom = SparsePoly::one(&space);
    for s in &scales {
        denom = &denom * s;
    }
    RatFunc::new(det, denom).expect("row scales are nonzero")
}

/// Rank over the rational function field.
pub(crate) fn rank(rows: &[Vec<RatFunc>], ncols: usize) -> usize {
    if rows.is_empty() {
        return 0;
    }
    let (polys, _) = clear_denominators(rows);
    bareiss(polys, ncols).rank()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_arith::{parse_ratfunc, ExactRational, VarSpace};

    fn mat(rows: &[&[&str]]) -> Vec<Vec<RatFunc>> {
        let s = VarSpace::for_free2(3);
        rows.iter().map(|r| r.iter().map(|x| parse_ratfunc(&s, x).unwrap()).collect()).collect()
    }

    #[test]
    fn det_of_symbolic_2x2() {
        let a = mat(&[&["l12", "l13"], &["l23", "1/l1"]]);
        let d = determinant(&a);
        assert_eq!(d, parse_ratfunc(a[0][0].space(), "l12/l1 - l13*l23").unwrap());
    }

    #[test]
    fn det_with_row_swap() {
        let a = mat(&[&["0", "1"], &["1", "0"]]);
        assert_eq!(determinant(&a).as_constant(), Some(ExactRational::from_integer((-1).into())));
    }

    #[test]
    fn kernel_of_rank_deficient() {
        let a = mat(&[&["l12", "l13", "l12 + l13"], &["2*l12", "2*l13", "2*l12 + 2*l13"]]);
        let k = kernel_basis(&a, 3);
        assert_eq!(k.len(), 2);
        assert_eq!(rank(&a, 3), 1);
        for v in &k {
            for row in &a {
                let mut s = RatFunc::zero(row[0].space());
                for (x, y) in row.iter().zip(v) {
                    s = &s + &(x * y);
                }
                assert!(s.is_zero());
            }
        }
    }
}
