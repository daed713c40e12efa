//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any
//! criterion fails.

mod common;

use std::process::Command;
use std::time::{Duration, Instant};

use nilrep::coadjoint::{
    build_m, generic_functional, in_omega, nullspace, pfaffian, stabilizer, Assignment, Functional,
};
use nilrep::criterion::{check_irreducible, m5_closed_forms, Verdict};
use nilrep::exact_arith::{parse_ratfunc, ExactRational, RatFunc, Variable};
use nilrep::lie_core::{construct_free2, LieAlgebra};
use nilrep::schrodinger::checks::{
    desk_grid, free32_params, heisenberg_commutator, heisenberg_params, homomorphism, unitarity,
};

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome { pass, detail: detail.into() }
}

fn nilrep(args: &[&str]) -> std::process::Output {
    Command::new(env!("CARGO_BIN_EXE_nilrep")).args(args).output().expect("binary runs")
}

fn unit(alg: &LieAlgebra, pos: usize) -> Vec<RatFunc> {
    let s = alg.var_space();
    (0..alg.dim()).map(|k| if k == pos { RatFunc::one(s) } else { RatFunc::zero(s) }).collect()
}

fn m5_closed_forms_match() -> Outcome {
    let start = Instant::now();
    let checks = m5_closed_forms();
    let secs = start.elapsed().as_secs_f64();
    let mismatched: Vec<String> = checks.iter().filter(|c| !c.matches).map(|c| format!("alpha{}", c.k)).collect();
    let fast = secs < 5.0;
    let detail = if mismatched.is_empty() {
        format!("alpha1..alpha4 match ({secs:.2}s)")
    } else {
        format!("reference strings differ for {} ({secs:.2}s)", mismatched.join(","))
    };
    outcome(mismatched.is_empty() && fast, detail)
}

fn parity_theorems() -> Outcome {
    let start = Instant::now();
    let o = nilrep(&["sweep", "--m", "2..8", "--format", "json"]);
    let secs = start.elapsed().as_secs_f64();
    let v: serde_json::Value = match serde_json::from_slice(&o.stdout) {
        Ok(v) => v,
        Err(e) => return outcome(false, format!("unparseable sweep output: {e}")),
    };
    let mut bad = Vec::new();
    for row in v["rows"].as_array().into_iter().flatten() {
        let m = row["m"].as_u64().unwrap_or(0) as usize;
        let want = if m % 2 == 1 { "Irreducible" } else { "Reducible" };
        let dim = m * (m - 1) / 2 + m % 2;
        if row["verdict"] != want || row["stab_dim"].as_u64() != Some(dim as u64) {
            bad.push(m);
        }
    }
    let rows = v["rows"].as_array().map_or(0, Vec::len);
    outcome(bad.is_empty() && rows == 7 && secs < 120.0, format!("m=2..8 rows={rows} bad={bad:?} ({secs:.1}s)"))
}

fn heisenberg_reducible() -> Outcome {
    let mut rng = common::rng(103);
    let alg = construct_free2(2).unwrap();
    for _ in 0..10 {
        let mut a = Assignment::new();
        a.insert(Variable::Center(1, 2), common::nonzero_rational(&mut rng));
        a.insert(Variable::Generator(1), common::rational(&mut rng));
        a.insert(Variable::Generator(2), common::rational(&mut rng));
        let lam = Functional::from_assignment(&alg, &a);
        let r = check_irreducible(&alg, &lam);
        let k = nullspace(&build_m(&alg, &lam));
        if r.verdict != Verdict::Reducible || k != vec![unit(&alg, 0)] {
            return outcome(false, format!("lambda {a:?} gave {:?}", r.verdict));
        }
    }
    outcome(true, "10 random lambda(X1): Reducible, nullspace = center")
}

fn remark_meager_set() -> Outcome {
    let mut rng = common::rng(104);
    for m in [3, 5] {
        let alg = construct_free2(m).unwrap();
        let mut tried = 0;
        while tried < 10 {
            let mut a = Assignment::new();
            for v in alg.var_space().vars() {
                let q = match *v {
                    Variable::Center(_, j) if j == m => ExactRational::from_integer(0.into()),
                    Variable::Center(..) => common::nonzero_rational(&mut rng),
                    Variable::Generator(_) => common::rational(&mut rng),
                };
                a.insert(*v, q);
            }
            let lam = Functional::from_assignment(&alg, &a);
            if !in_omega(&alg, &lam) {
                continue;
            }
            tried += 1;
            let st = stabilizer(&alg, &lam);
            let zm = unit(&alg, alg.index().generator_index(m));
            let ok = st.center_part.len() == alg.derived_dim() && st.extra_vectors == vec![zm];
            let r = check_irreducible(&alg, &lam);
            if !ok || r.verdict != Verdict::Reducible {
                return outcome(false, format!("m={m}: stabilizer or verdict wrong ({:?})", r.verdict));
            }
        }
    }
    outcome(true, "m=3,5: stabilizer = z + R Z_m, Reducible")
}

fn skew_lemma() -> Outcome {
    let mut rng = common::rng(105);
    let space = common::empty_space();
    let mut done = 0;
    while done < 100 {
        let n = 2 * (1 + done % 4);
        let s = common::skew(&mut rng, n);
        if s.rank() < n {
            continue;
        }
        let alpha: Vec<RatFunc> = (0..n).map(|_| RatFunc::constant(&space, common::rational(&mut rng))).collect();
        let beta = s.mul_vec(&alpha);
        let pairing = alpha.iter().zip(&beta).fold(RatFunc::zero(&space), |acc, (a, b)| &acc + &(a * b));
        if !pairing.is_zero() {
            return outcome(false, format!("<alpha, beta> = {pairing} for n={n}"));
        }
        done += 1;
    }
    outcome(true, "100 invertible skew matrices, <alpha, S alpha> = 0")
}

fn pfaffian_oracle() -> Outcome {
    let mut rng = common::rng(106);
    for t in 0..100 {
        let n = 2 * (1 + t % 4);
        let s = common::skew(&mut rng, n);
        let pf = pfaffian(&s).unwrap();
        if &pf * &pf != s.det() {
            return outcome(false, format!("pf^2 != det at n={n}"));
        }
    }
    let alg = construct_free2(4).unwrap();
    let gens: Vec<usize> = (1..=4).map(|i| alg.index().generator_index(i)).collect();
    let pf = pfaffian(&build_m(&alg, &generic_functional(&alg)).principal(&gens)).unwrap();
    let want = parse_ratfunc(alg.var_space(), "l12*l34 - l13*l24 + l14*l23").unwrap();
    outcome(pf == want, format!("100 random pf^2 = det; generic 4x4 Pfaffian = {pf}"))
}

fn certify(alg: &LieAlgebra, lam: &Functional) -> bool {
    let m = build_m(alg, lam);
    stabilizer(alg, lam).vectors(alg).iter().all(|v| m.mul_vec(v).iter().all(RatFunc::is_zero))
}

fn nullspace_certificates() -> Outcome {
    let mut rng = common::rng(107);
    for m in 2..=8 {
        let alg = construct_free2(m).unwrap();
        if !certify(&alg, &generic_functional(&alg)) {
            return outcome(false, format!("symbolic m={m}"));
        }
        for _ in 0..50 {
            if !certify(&alg, &common::functional(&mut rng, &alg)) {
                return outcome(false, format!("numeric m={m}"));
            }
        }
    }
    outcome(true, "M v = 0 for symbolic m=2..8 and 50 numeric lambda per m")
}

fn rational_point_collapse() -> Outcome {
    let mut rng = common::rng(108);
    for m in [3, 5, 7] {
        let alg = construct_free2(m).unwrap();
        for _ in 0..20 {
            let r = check_irreducible(&alg, &common::generic_point(&mut rng, &alg));
            if r.tail_dim_q != 1 || r.verdict != Verdict::Reducible {
                return outcome(false, format!("m={m}: tail_dimQ={} {:?}", r.tail_dim_q, r.verdict));
            }
        }
    }
    outcome(true, "m=3,5,7 x 20 rational points: tail_dimQ=1, Reducible")
}

fn representation_checks() -> Outcome {
    let mut rng = common::rng(109);
    let g = desk_grid();
    let results = [
        unitarity(&heisenberg_params(), &g, 50, &mut rng),
        unitarity(&free32_params(), &g, 50, &mut rng),
        heisenberg_commutator(&g, &ExactRational::from_integer(1.into()), 10, &mut rng),
        homomorphism(&free32_params(), &g, 10, true, &mut rng),
    ];
    let worst = results.iter().map(|r| format!("{}={:.1e}", r.name, r.max_err)).collect::<Vec<_>>().join(" ");
    outcome(results.iter().all(|r| r.pass), worst)
}

fn determinism() -> Outcome {
    let a = nilrep(&["sweep", "--m", "2..6", "--format", "json"]);
    let b = nilrep(&["sweep", "--m", "2..6", "--format", "json"]);
    let same = a.status.success() && !a.stdout.is_empty() && a.stdout == b.stdout;
    outcome(same, format!("{} bytes, identical={}", a.stdout.len(), a.stdout == b.stdout))
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 10] = [
        ("m=5 closed forms", m5_closed_forms_match),
        ("parity theorems", parity_theorems),
        ("Heisenberg reducibility", heisenberg_reducible),
        ("meager set of the Remark", remark_meager_set),
        ("skew pairing lemma", skew_lemma),
        ("Pfaffian oracle", pfaffian_oracle),
        ("nullspace certificate", nullspace_certificates),
        ("rational-point collapse", rational_point_collapse),
        ("representation checks", representation_checks),
        ("determinism", determinism),
    ];
    let start = Instant::now();
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let o = f();
        println!("criterion {:>2} {}: {} ({})", i + 1, if o.pass { "PASS" } else { "FAIL" }, name, o.detail);
        failed += usize::from(!o.pass);
    }
    println!("acceptance: {} passed, {} failed in {:?}", 10 - failed, failed, Duration::from_secs(start.elapsed().as_secs()));
    if failed > 0 {
        std::process::exit(1);
    }
}
