//! Finite-grid invariant checks: unitarity, commutator phases, the
//! one-parameter homomorphism property, centrality and Gabor spanning.

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::{
    apply_rep, commutator_phase, frame_bounds, gabor_system, gram_rank, norm, unit_phase, Element, Grid, GroupWord,
    RepParams,
};
use crate::exact_arith::{rational_to_string, ExactRational};

pub const DEFAULT_SEED: u64 = 0x6e69_6c72;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CheckResult {
    pub name: String,
    pub config: String,
    pub max_err: f64,
    pub pass: bool,
}

impl CheckResult {
    fn new(name: &str, config: String, max_err: f64, tol: f64) -> Self {
        CheckResult { name: name.to_string(), config, max_err, pass: max_err <= tol }
    }

    pub fn to_text(&self) -> String {
        format!("check={} config={} max_err={:.3e} pass={}", self.name, self.config, self.max_err, self.pass)
    }
}

/// `NILREP_SEED` if set and parseable, else [`DEFAULT_SEED`].
pub fn seed_from_env() -> u64 {
    std::env::var("NILREP_SEED").ok().and_then(|s| s.trim().parse().ok()).unwrap_or(DEFAULT_SEED)
}

pub fn random_vector(rng: &mut impl Rng, n: usize) -> Vec<Complex64> {
    (0..n).map(|_| Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0))).collect()
}

fn r(p: i64, q: i64) -> ExactRational {
    ExactRational::new(p.into(), q.into())
}

fn config(p: &RepParams, g: &Grid) -> String {
    format!("{},N={},L={}", p.describe(), g.n(), rational_to_string(g.period()))
}

fn dist(a: &[Complex64], b: &[Complex64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| (x - y).norm_sqr()).sum::<f64>().sqrt()
}

/// Standard test grid: 64 samples of period 8, step 1/8.
pub fn desk_grid() -> Grid {
    Grid::new(64, r(8, 1)).expect("valid grid")
}

pub fn heisenberg_params() -> RepParams {
    RepParams::heisenberg(r(1, 1)).expect("nonzero")
}

/// `λ₂/λ₃ = 1` keeps the `X1` translation on the grid for grid-multiple
/// parameters.
pub fn free32_params() -> RepParams {
    RepParams::free32(r(1, 1), r(1, 1), r(1, 1), r(1, 3)).expect("lambda3 nonzero")
}

fn elements(p: &RepParams) -> Vec<Element> {
    match p {
        RepParams::Heisenberg { .. } => vec![Element::X1, Element::X2, Element::X3],
        RepParams::Free32 { .. } => {
            vec![Element::X1, Element::X2, Element::X3, Element::Z(1), Element::Z(2), Element::Z(3)]
        }
    }
}

/// Relative norm change of every single-factor operator (and one mixed
/// word) over `trials` random vectors.
pub fn unitarity(p: &RepParams, g: &Grid, trials: usize, rng: &mut impl Rng) -> CheckResult {
    let params = [r(1, 8), r(-3, 4), r(5, 2)];
    let mut words: Vec<GroupWord> =
        elements(p).into_iter().flat_map(|e| params.iter().map(move |x| vec![(e, x.clone())])).collect();
    words.push(elements(p).into_iter().zip(params.iter().cycle()).map(|(e, x)| (e, x.clone())).collect());
    let mut worst: f64 = 0.0;
    for _ in 0..trials {
        let f = random_vector(rng, g.n());
        let nf = norm(&f);
        for w in &words {
            let out = apply_rep(p, g, w, &f).expect("grid-compatible word");
            worst = worst.max((norm(&out) - nf).abs() / nf);
        }
    }
    CheckResult::new("unitarity", config(p, g), worst, 1e-12)
}

/// `c = e^{-2πiλx₂x₃}` for `a = (X2, x₂)`, `b = (X3, x₃)` over a 5×5 grid of
/// parameters and `f_trials` vectors per configuration.
pub fn heisenberg_commutator(g: &Grid, lambda: &ExactRational, f_trials: usize, rng: &mut impl Rng) -> CheckResult {
    let p = RepParams::heisenberg(lambda.clone()).expect("nonzero");
    let x2s = [r(0, 1), r(1, 8), r(3, 8), r(1, 2), r(7, 8)];
    let x3s = [r(0, 1), r(1, 8), r(1, 4), r(5, 8), r(1, 1)];
    let mut worst: f64 = 0.0;
    for x2 in &x2s {
        for x3 in &x3s {
            let expected = unit_phase(&-(lambda * x2 * x3));
            let a = [(Element::X2, x2.clone())];
            let b = [(Element::X3, x3.clone())];
            for _ in 0..f_trials {
                let f = random_vector(rng, g.n());
                worst = worst.max(match commutator_phase(&p, g, &a, &b, &f) {
                    Ok(c) => (c - expected).norm(),
                    Err(_) => f64::INFINITY,
                });
            }
        }
    }
    CheckResult::new("heisenberg-commutator", config(&p, g), worst, 1e-10)
}

/// `c = e^{-2πiλ₃rs}` for `a = (X3, s)`, `b = (X2, r)`.
pub fn free32_commutator(p: &RepParams, g: &Grid, f_trials: usize, rng: &mut impl Rng) -> CheckResult {
    let RepParams::Free32 { l3, .. } = p else {
        panic!("free32_commutator needs Free32 parameters");
    };
    let vals = [r(0, 1), r(1, 8), r(1, 2), r(3, 4), r(9, 8)];
    let mut worst: f64 = 0.0;
    for s in &vals {
        for rr in &vals {
            let expected = unit_phase(&-(l3 * rr * s));
            let a = [(Element::X3, s.clone())];
            let b = [(Element::X2, rr.clone())];
            for _ in 0..f_trials {
                let f = random_vector(rng, g.n());
                worst = worst.max(match commutator_phase(p, g, &a, &b, &f) {
                    Ok(c) => (c - expected).norm(),
                    Err(_) => f64::INFINITY,
                });
            }
        }
    }
    CheckResult::new("free32-commutator", config(p, g), worst, 1e-10)
}

/// Exponent `θ` with `π(exp sE) π(exp uE) = e^{2πiθ} π(exp (s+u)E)`.
///
/// Zero except for `X1` of the free algebra, whose quadratic phase gives
/// `θ = s·u·λ₁λ₂/λ₃`.
pub fn one_parameter_multiplier(p: &RepParams, e: Element, s: &ExactRational, u: &ExactRational) -> ExactRational {
    match (p, e) {
        (RepParams::Free32 { l1, l2, l3, .. }, Element::X1) => s * u * l1 * l2 / l3,
        _ => ExactRational::from_integer(0.into()),
    }
}

/// `π(exp sE) π(exp uE) F` against `π(exp (s+u)E) F`; with `bookkeeping`
/// the multiplier of [`one_parameter_multiplier`] is applied first.
pub fn homomorphism(p: &RepParams, g: &Grid, trials: usize, bookkeeping: bool, rng: &mut impl Rng) -> CheckResult {
    let pairs = [(r(1, 8), r(1, 4)), (r(3, 8), r(5, 8)), (r(-1, 2), r(7, 4)), (r(1, 1), r(1, 1))];
    let mut worst: f64 = 0.0;
    for _ in 0..trials {
        let f = random_vector(rng, g.n());
        let nf = norm(&f);
        for e in elements(p) {
            for (s, u) in &pairs {
                let inner = apply_rep(p, g, &[(e, u.clone())], &f).expect("grid-compatible");
                let lhs = apply_rep(p, g, &[(e, s.clone())], &inner).expect("grid-compatible");
                let mut rhs = apply_rep(p, g, &[(e, s + u)], &f).expect("grid-compatible");
                if bookkeeping {
                    let c = unit_phase(&one_parameter_multiplier(p, e, s, u));
                    rhs.iter_mut().for_each(|x| *x *= c);
                }
                worst = worst.max(dist(&lhs, &rhs) / nf);
            }
        }
    }
    let name = if bookkeeping { "homomorphism" } else { "homomorphism-strict" };
    CheckResult::new(name, config(p, g), worst, 1e-10)
}

/// `Z_k` commutes with every `X_j`.
pub fn centrality(p: &RepParams, g: &Grid, trials: usize, rng: &mut impl Rng) -> CheckResult {
    let xs = [Element::X1, Element::X2, Element::X3];
    let mut worst: f64 = 0.0;
    for _ in 0..trials {
        let f = random_vector(rng, g.n());
        let nf = norm(&f);
        for z in elements(p).into_iter().filter(|e| matches!(e, Element::Z(_))) {
            for x in xs {
                let zx = apply_rep(p, g, &[(z, r(2, 7)), (x, r(3, 8))], &f).expect("grid-compatible");
                let xz = apply_rep(p, g, &[(x, r(3, 8)), (z, r(2, 7))], &f).expect("grid-compatible");
                worst = worst.max(dist(&zx, &xz) / nf);
            }
        }
    }
    CheckResult::new("centrality", config(p, g), worst, 1e-12)
}

/// Heisenberg `λ = 1` on `N = L` samples with the indicator of the first
/// cell as window, over `j, k ∈ 0..N`.
pub fn cell_indicator_system(n: usize) -> (RepParams, Grid, Vec<Vec<Complex64>>) {
    let g = Grid::new(n, r(n as i64, 1)).expect("valid grid");
    let p = heisenberg_params();
    let mut f = vec![Complex64::new(0.0, 0.0); n];
    f[0] = Complex64::new(1.0, 0.0);
    let top = n as i64 - 1;
    let sys = gabor_system(&p, &g, &f, 0..=top, 0..=top).expect("compatible grid");
    (p, g, sys)
}

/// The system of [`cell_indicator_system`] spans the grid. `max_err` is the
/// rank deficit.
pub fn gabor_span(n: usize) -> CheckResult {
    let (p, g, sys) = cell_indicator_system(n);
    let deficit = n - gram_rank(&sys, 1e-10);
    let (lower, _) = frame_bounds(&sys);
    let err = if lower > 0.0 { deficit as f64 } else { deficit.max(1) as f64 };
    CheckResult::new("gabor-span", config(&p, &g), err, 0.0)
}

/// Every check at desk scale, in a fixed order.
pub fn run_all(seed: u64) -> Vec<CheckResult> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let g = desk_grid();
    let h = heisenberg_params();
    let f = free32_params();
    vec![
        unitarity(&h, &g, 50, &mut rng),
        unitarity(&f, &g, 50, &mut rng),
        heisenberg_commutator(&g, &r(1, 1), 10, &mut rng),
        free32_commutator(&f, &g, 10, &mut rng),
        homomorphism(&h, &g, 10, true, &mut rng),
        homomorphism(&f, &g, 10, true, &mut rng),
        centrality(&f, &g, 10, &mut rng),
        gabor_span(8),
        gabor_span(16),
    ]
}
