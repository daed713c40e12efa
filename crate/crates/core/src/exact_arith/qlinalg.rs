//! Row reduction over the rationals.

use num_traits::Zero;

use super::ExactRational;

/// Reduced row echelon form of `rows` (each of length `ncols`), zero rows
/// dropped, together with the pivot column of every remaining row.
pub fn rref(mut rows: Vec<Vec<ExactRational>>, ncols: usize) -> (Vec<Vec<ExactRational>>, Vec<usize>) {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][c].recip();
        for x in rows[r].iter_mut() {
            *x *= &inv;
        }
        for i in 0..rows.len() {
            if i == r || rows[i][c].is_zero() {
                continue;
            }
            let f = rows[i][c].clone();
            let (pivot_row, row_i) = if i < r {
                let (a, b) = rows.split_at_mut(r);
                (&b[0], &mut a[i])
            } else {
                let (a, b) = rows.split_at_mut(i);
                (&a[r], &mut b[0])
            };
            for (x, y) in row_i.iter_mut().zip(pivot_row.iter()) {
                if !y.is_zero() {
                    *x -= &f * y;
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    rows.truncate(r);
    (rows, pivots)
}

pub fn rank(rows: Vec<Vec<ExactRational>>, ncols: usize) -> usize {
    rref(rows, ncols).1.len()
}

/// Basis of `{x : A x = 0}` for `A` given by rows, one vector per free
/// column.
pub fn kernel(rows: Vec<Vec<ExactRational>>, ncols: usize) -> Vec<Vec<ExactRational>> {
    let (red, pivots) = rref(rows, ncols);
    let mut out = Vec::new();
    for f in (0..ncols).filter(|c| !pivots.contains(c)) {
        let mut v = vec![ExactRational::zero(); ncols];
        v[f] = num_traits::One::one();
        for (row, &pc) in red.iter().zip(pivots.iter()) {
            v[pc] = -row[f].clone();
        }
        out.push(v);
    }
    out
}
