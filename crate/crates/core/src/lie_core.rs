//! The free step-two nilpotent Lie algebra `f_{m,2}` in its Jordan–Hölder
//! basis: center elements `Z_ij` first, generators `Z_i` last.

use std::sync::{Arc, OnceLock};

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::exact_arith::qlinalg;
use crate::exact_arith::{rational_to_string, Coefficient, ExactRational, VarSpace, Variable};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LieError {
    #[error("need at least two generators, got m = {0}")]
    TooFewGenerators(usize),
    #[error("vector has length {got}, algebra has dimension {expected}")]
    LengthMismatch { expected: usize, got: usize },
}

/// Positions of `Z_ij` and `Z_i` in the relabeled basis (0-based).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BasisIndexMap {
    m: usize,
}

impl BasisIndexMap {
    pub fn new(m: usize) -> Self {
        BasisIndexMap { m }
    }

    pub fn center_dim(&self) -> usize {
        self.m * (self.m - 1) / 2
    }

    pub fn dim(&self) -> usize {
        self.center_dim() + self.m
    }

    /// Position of `Z_ij`, `1 <= i < j <= m`, in `0..center_dim`.
    pub fn center_index(&self, i: usize, j: usize) -> usize {
        assert!(1 <= i && i < j && j <= self.m, "bad center pair ({i}, {j}) for m = {}", self.m);
        // pairs (1,*) come first, m-1 of them, then (2,*), ...
        (i - 1) * (2 * self.m - i) / 2 + (j - i - 1)
    }

    /// Position of the generator `Z_i` in `center_dim..dim`.
    pub fn generator_index(&self, i: usize) -> usize {
        assert!(1 <= i && i <= self.m, "bad generator {i} for m = {}", self.m);
        self.center_dim() + i - 1
    }

    pub fn label(&self, pos: usize) -> Variable {
        let cd = self.center_dim();
        if pos >= cd {
            return Variable::Generator(pos - cd + 1);
        }
        let mut p = pos;
        for i in 1..self.m {
            let run = self.m - i;
            if p < run {
                return Variable::Center(i, i + 1 + p);
            }
            p -= run;
        }
        unreachable!("position {pos} out of range")
    }
}

/// Structure constants `c[i][j][k]` with `[X_i, X_j] = sum_k c[i][j][k] X_k`.
#[derive(Debug)]
pub struct LieAlgebra {
    m: usize,
    n: usize,
    derived_dim: usize,
    structure: Vec<ExactRational>,
    index: BasisIndexMap,
    space: Arc<VarSpace>,
    center_derived: OnceLock<(Vec<usize>, Vec<usize>)>,
}

/// Builds `f_{m,2}` with `[Z_i, Z_j] = Z_ij` for `i < j`.
pub fn construct_free2(m: usize) -> Result<LieAlgebra, LieError> {
    if m < 2 {
        return Err(LieError::TooFewGenerators(m));
    }
    let index = BasisIndexMap::new(m);
    let n = index.dim();
    let mut structure = vec![ExactRational::zero(); n * n * n];
    for i in 1..=m {
        for j in i + 1..=m {
            let a = index.generator_index(i);
            let b = index.generator_index(j);
            let k = index.center_index(i, j);
            structure[(a * n + b) * n + k] = ExactRational::one();
            structure[(b * n + a) * n + k] = -ExactRational::one();
        }
    }
    let space = VarSpace::new((0..n).map(|p| index.label(p)).collect());
    Ok(LieAlgebra { m, n, derived_dim: index.center_dim(), structure, index, space, center_derived: OnceLock::new() })
}

impl LieAlgebra {
    pub fn m(&self) -> usize {
        self.m
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn derived_dim(&self) -> usize {
        self.derived_dim
    }

    pub fn index(&self) -> BasisIndexMap {
        self.index
    }

    /// Dual coordinates, one variable per basis position.
    pub fn var_space(&self) -> &Arc<VarSpace> {
        &self.space
    }

    pub fn c(&self, i: usize, j: usize, k: usize) -> &ExactRational {
        &self.structure[(i * self.n + j) * self.n + k]
    }

    /// Nonzero constants `(i, j, k, c)` with `i < j`.
    pub fn nonzero_brackets(&self) -> Vec<(usize, usize, usize, ExactRational)> {
        let mut out = Vec::new();
        for i in 0..self.n {
            for j in i + 1..self.n {
                for k in 0..self.n {
                    let c = self.c(i, j, k);
                    if !c.is_zero() {
                        out.push((i, j, k, c.clone()));
                    }
                }
            }
        }
        out
    }

    pub fn bracket<T: Coefficient>(&self, v: &[T], w: &[T]) -> Result<Vec<T>, LieError> {
        for len in [v.len(), w.len()] {
            if len != self.n {
                return Err(LieError::LengthMismatch { expected: self.n, got: len });
            }
        }
        let zero = v[0].zero_like();
        let mut out = vec![zero; self.n];
        for i in 0..self.n {
            if v[i].vanishes() {
                continue;
            }
            for j in 0..self.n {
                if w[j].vanishes() {
                    continue;
                }
                let vw = v[i].mul(&w[j]);
                for (k, slot) in out.iter_mut().enumerate() {
                    let c = self.c(i, j, k);
                    if !c.is_zero() {
                        *slot = slot.add(&vw.scale(c));
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn is_antisymmetric(&self) -> bool {
        (0..self.n).all(|i| (0..self.n).all(|j| (0..self.n).all(|k| *self.c(i, j, k) == -self.c(j, i, k))))
    }

    /// Exhaustive Jacobi check on basis triples.
    pub fn satisfies_jacobi(&self) -> bool {
        let n = self.n;
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    for out in 0..n {
                        let mut s = ExactRational::zero();
                        for k in 0..n {
                            s += self.c(b, c, k) * self.c(a, k, out);
                            s += self.c(c, a, k) * self.c(b, k, out);
                            s += self.c(a, b, k) * self.c(c, k, out);
                        }
                        if !s.is_zero() {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }

    /// `(center, derived)` as sets of basis positions whose unit vectors lie
    /// in the kernel of `ad` resp. the image of the bracket, computed from
    /// the structure constants.
    pub fn center_and_derived(&self) -> (Vec<usize>, Vec<usize>) {
        self.center_derived.get_or_init(|| self.compute_center_and_derived()).clone()
    }

    fn compute_center_and_derived(&self) -> (Vec<usize>, Vec<usize>) {
        let n = self.n;
        // x is central iff sum_i x_i c[i][j][k] = 0 for all j, k.
        let mut rows = Vec::new();
        for j in 0..n {
            for k in 0..n {
                let row: Vec<_> = (0..n).map(|i| self.c(i, j, k).clone()).collect();
                if row.iter().any(|x| !x.is_zero()) {
                    rows.push(row);
                }
            }
        }
        let center_basis = qlinalg::kernel(rows, n);
        let mut images = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                let row: Vec<_> = (0..n).map(|k| self.c(i, j, k).clone()).collect();
                if row.iter().any(|x| !x.is_zero()) {
                    images.push(row);
                }
            }
        }
        let (derived_basis, _) = qlinalg::rref(images, n);
        (coordinate_positions(center_basis, n), coordinate_positions(derived_basis, n))
    }

    pub fn to_json(&self) -> AlgebraJson {
        AlgebraJson {
            m: self.m,
            n: self.n,
            derived_dim: self.derived_dim,
            brackets: self
                .nonzero_brackets()
                .into_iter()
                .map(|(i, j, k, c)| BracketJson { i: i + 1, j: j + 1, k: k + 1, c: rational_to_string(&c) })
                .collect(),
        }
    }
}

/// Positions `p` such that `e_p` lies in the span of `basis`.
fn coordinate_positions(basis: Vec<Vec<ExactRational>>, n: usize) -> Vec<usize> {
    let r = qlinalg::rank(basis.clone(), n);
    (0..n)
        .filter(|&p| {
            let mut rows = basis.clone();
            let mut e = vec![ExactRational::zero(); n];
            e[p] = ExactRational::one();
            rows.push(e);
            qlinalg::rank(rows, n) == r
        })
        .collect()
}

/// Serialized algebra; indices are 1-based basis positions.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlgebraJson {
    pub m: usize,
    pub n: usize,
    pub derived_dim: usize,
    pub brackets: Vec<BracketJson>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BracketJson {
    pub i: usize,
    pub j: usize,
    pub k: usize,
    pub c: String,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_arith::rational::int;

    fn unit(n: usize, p: usize) -> Vec<ExactRational> {
        let mut v = vec![int(0); n];
        v[p] = int(1);
        v
    }

    #[test]
    fn too_few_generators() {
        assert_eq!(construct_free2(1).unwrap_err(), LieError::TooFewGenerators(1));
        assert!(construct_free2(0).is_err());
    }

    #[test]
    fn heisenberg_case() {
        let h = construct_free2(2).unwrap();
        assert_eq!((h.dim(), h.derived_dim()), (3, 1));
        // X2 = Z1, X3 = Z2, X1 = Z12; [X3, X2] = -X1 under [Z1, Z2] = +Z12.
        let br = h.bracket(&unit(3, 2), &unit(3, 1)).unwrap();
        assert_eq!(br, vec![int(-1), int(0), int(0)]);
        assert_eq!(h.nonzero_brackets(), vec![(1, 2, 0, int(1))]);
    }

    #[test]
    fn m3_brackets() {
        let a = construct_free2(3).unwrap();
        assert_eq!((a.dim(), a.derived_dim()), (6, 3));
        let ix = a.index();
        for (i, j) in [(1, 2), (1, 3), (2, 3)] {
            let br = a.bracket(&unit(6, ix.generator_index(i)), &unit(6, ix.generator_index(j))).unwrap();
            assert_eq!(br, unit(6, ix.center_index(i, j)));
        }
    }

    #[test]
    fn m5_dimensions() {
        let a = construct_free2(5).unwrap();
        assert_eq!((a.dim(), a.derived_dim()), (15, 10));
    }

    #[test]
    fn bracket_edge_cases() {
        let a = construct_free2(3).unwrap();
        let ix = a.index();
        let v: Vec<_> = (0..6).map(|k| int(k as i64 - 2)).collect();
        assert!(a.bracket(&v, &v).unwrap().iter().all(|x| x.is_zero()));
        let br = a.bracket(&unit(6, ix.center_index(1, 2)), &unit(6, ix.generator_index(3))).unwrap();
        assert!(br.iter().all(|x| x.is_zero()));
        assert_eq!(a.bracket(&v[..5], &v), Err(LieError::LengthMismatch { expected: 6, got: 5 }));
    }

    #[test]
    fn center_and_derived_small() {
        assert_eq!(construct_free2(2).unwrap().center_and_derived(), (vec![0], vec![0]));
        let (c, d) = construct_free2(3).unwrap().center_and_derived();
        assert_eq!((c, d), (vec![0, 1, 2], vec![0, 1, 2]));
    }

    #[test]
    fn center_m4_against_brute_force_kernel() {
        // Oracle: x is central iff [x, e_j] = 0 for every basis vector e_j.
        let a = construct_free2(4).unwrap();
        let n = a.dim();
        let mut central = Vec::new();
        for p in 0..n {
            let e = unit(n, p);
            if (0..n).all(|j| a.bracket(&e, &unit(n, j)).unwrap().iter().all(|x| x.is_zero())) {
                central.push(p);
            }
        }
        // No combination of generators is central: the generator block of ad is injective.
        let gens: Vec<usize> = (a.derived_dim()..n).collect();
        let rows: Vec<Vec<ExactRational>> = (0..n)
            .flat_map(|j| {
                let a = &a;
                let gens = &gens;
                (0..n).map(move |k| gens.iter().map(|&i| a.c(i, j, k).clone()).collect())
            })
            .collect();
        assert_eq!(qlinalg::rank(rows, gens.len()), gens.len());
        let expected: Vec<usize> = (0..6).collect();
        assert_eq!(central, expected);
        assert_eq!(a.center_and_derived(), (expected.clone(), expected));
    }

    #[test]
    fn invariants_for_m_up_to_8() {
        for m in 2..=8 {
            let a = construct_free2(m).unwrap();
            let z = m * (m - 1) / 2;
            assert_eq!(a.dim(), z + m);
            assert!(a.is_antisymmetric());
            let (c, d) = a.center_and_derived();
            let first: Vec<usize> = (0..z).collect();
            assert_eq!(c, first, "center for m = {m}");
            assert_eq!(d, first, "derived for m = {m}");
            assert!(a.structure.iter().all(|x| x.is_integer() && x.numer().magnitude() <= &1u32.into()));
        }
    }

    #[test]
    fn jacobi_small() {
        for m in 2..=4 {
            assert!(construct_free2(m).unwrap().satisfies_jacobi());
        }
    }

    #[test]
    fn index_map_is_bijective() {
        for m in 2..=8 {
            let ix = BasisIndexMap::new(m);
            let mut seen = vec![false; ix.dim()];
            for i in 1..=m {
                for j in i + 1..=m {
                    let p = ix.center_index(i, j);
                    assert!(p < ix.center_dim());
                    assert_eq!(ix.label(p), Variable::Center(i, j));
                    seen[p] = true;
                }
                let g = ix.generator_index(i);
                assert!(g >= ix.center_dim());
                assert_eq!(ix.label(g), Variable::Generator(i));
                seen[g] = true;
            }
            assert!(seen.iter().all(|&s| s));
        }
    }

    #[test]
    fn json_lists_upper_brackets() {
        let j = construct_free2(2).unwrap().to_json();
        assert_eq!(serde_json::to_string(&j).unwrap(), r#"{"m":2,"n":3,"derived_dim":1,"brackets":[{"i":2,"j":3,"k":1,"c":"1"}]}"#);
    }
}
