use super::*;
use crate::exact_arith::{parse_poly, parse_ratfunc, ExactRational, Variable};
use crate::lie_core::construct_free2;

fn q(v: i64) -> ExactRational {
    ExactRational::from_integer(v.into())
}

fn numeric(alg: &LieAlgebra, pairs: &[(Variable, i64)]) -> Functional {
    let a: Assignment = pairs.iter().map(|&(v, x)| (v, q(x))).collect();
    Functional::from_assignment(alg, &a)
}

#[test]
fn generic_functional_shapes() {
    let h = construct_free2(2).unwrap();
    let g = generic_functional(&h);
    let names: Vec<String> = g
        .coords()
        .iter()
        .map(|c| match c {
            Coord::Symbolic(v) => v.name(),
            Coord::Numeric(_) => panic!("numeric"),
        })
        .collect();
    assert_eq!(names, ["l12", "l1", "l2"]);
    assert_eq!(generic_functional(&construct_free2(3).unwrap()).coords().len(), 6);
    let g5 = generic_functional(&construct_free2(5).unwrap());
    assert_eq!(g5.coords().len(), 15);
    let centers = g5.coords().iter().filter(|c| matches!(c, Coord::Symbolic(Variable::Center(..)))).count();
    assert_eq!(centers, 10);
}

#[test]
fn functional_validation() {
    let a = construct_free2(2).unwrap();
    assert_eq!(
        Functional::numeric(&a, vec![q(1)]).unwrap_err(),
        CoadjointError::FunctionalLength { expected: 3, got: 1 }
    );
    let bad = vec![Coord::Symbolic(Variable::Generator(1)), Coord::Numeric(q(0)), Coord::Numeric(q(0))];
    assert_eq!(Functional::new(&a, bad).unwrap_err(), CoadjointError::WrongVariable(0));
}

#[test]
fn heisenberg_matrix() {
    let h = construct_free2(2).unwrap();
    let m = build_m(&h, &numeric(&h, &[(Variable::Center(1, 2), 7)]));
    let expect = [[0, 0, 0], [0, 0, 7], [0, -7, 0]];
    for i in 0..3 {
        for j in 0..3 {
            assert_eq!(m.get(i, j).as_constant(), Some(q(expect[i][j])));
        }
    }
}

#[test]
fn m3_symbolic_block() {
    let a = construct_free2(3).unwrap();
    let m = build_m(&a, &generic_functional(&a));
    let s = a.var_space();
    let block = [["0", "l12", "l13"], ["-l12", "0", "l23"], ["-l13", "-l23", "0"]];
    for i in 0..3 {
        for j in 0..3 {
            assert_eq!(m.get(3 + i, 3 + j), &parse_ratfunc(s, block[i][j]).unwrap());
        }
    }
    for i in 0..6 {
        for j in 0..6 {
            if i < 3 || j < 3 {
                assert!(m.get(i, j).is_zero());
            }
            assert_eq!(m.get(i, j), &-m.get(j, i));
        }
    }
}

#[test]
fn functional_vanishing_on_center_gives_zero_matrix() {
    let a = construct_free2(4).unwrap();
    let lam = numeric(&a, &[(Variable::Generator(1), 3), (Variable::Generator(4), -2)]);
    let m = build_m(&a, &lam);
    assert!(m.rows().iter().flatten().all(|x| x.is_zero()));
}

#[test]
fn pfaffian_small_cases() {
    let a = construct_free2(2).unwrap();
    let s = a.var_space();
    let x = parse_ratfunc(s, "l12").unwrap();
    let m = SkewMatrix::new(vec![vec![RatFunc::zero(s), x.clone()], vec![-&x, RatFunc::zero(s)]]).unwrap();
    assert_eq!(pfaffian(&m).unwrap(), x);

    let a4 = construct_free2(4).unwrap();
    let m4 = build_m(&a4, &generic_functional(&a4));
    let gens: Vec<usize> = (6..10).collect();
    let pf = pfaffian(&m4.principal(&gens)).unwrap();
    assert_eq!(pf, parse_ratfunc(a4.var_space(), "l12*l34 - l13*l24 + l14*l23").unwrap());
    assert_eq!(&pf * &pf, m4.principal(&gens).det());
}

#[test]
fn pfaffian_rejects_odd_dimension() {
    let a = construct_free2(3).unwrap();
    let m = build_m(&a, &generic_functional(&a)).principal(&[3, 4, 5]);
    assert_eq!(pfaffian(&m).unwrap_err(), CoadjointError::OddDimension(3));
}

#[test]
fn skew_matrix_rejects_asymmetric_input() {
    let s = construct_free2(2).unwrap().var_space().clone();
    let one = RatFunc::one(&s);
    let z = RatFunc::zero(&s);
    assert!(SkewMatrix::new(vec![vec![z.clone(), one.clone()], vec![one, z]]).is_err());
}

#[test]
fn heisenberg_nullspace_is_center() {
    let h = construct_free2(2).unwrap();
    let m = build_m(&h, &numeric(&h, &[(Variable::Center(1, 2), 3)]));
    let k = nullspace(&m);
    assert_eq!(k.len(), 1);
    let e1: Vec<_> = [1, 0, 0].iter().map(|&v| RatFunc::constant(h.var_space(), q(v))).collect();
    assert_eq!(k[0], e1);
}

#[test]
fn m3_generic_extra_vector() {
    let a = construct_free2(3).unwrap();
    let st = stabilizer(&a, &generic_functional(&a));
    assert_eq!(st.center_part, vec![0, 1, 2]);
    assert_eq!(st.extra_vectors.len(), 1);
    let s = a.var_space();
    let tail: Vec<_> = st.extra_vectors[0][3..].to_vec();
    let expect: Vec<_> = ["l23/l12", "-l13/l12", "1"].iter().map(|x| parse_ratfunc(s, x).unwrap()).collect();
    assert_eq!(tail, expect);
    let m = build_m(&a, &generic_functional(&a));
    assert!(m.mul_vec(&st.extra_vectors[0]).iter().all(|x| x.is_zero()));
}

#[test]
fn m4_generic_block_has_trivial_kernel() {
    let a = construct_free2(4).unwrap();
    let m = build_m(&a, &generic_functional(&a));
    let gens: Vec<usize> = (6..10).collect();
    assert!(nullspace(&m.principal(&gens)).is_empty());
    let st = stabilizer(&a, &generic_functional(&a));
    assert!(st.extra_vectors.is_empty());
    assert_eq!(st.dim(), 6);
}

#[test]
fn m5_alpha_1_and_4_shapes() {
    let a = construct_free2(5).unwrap();
    let st = stabilizer(&a, &generic_functional(&a));
    assert_eq!(st.extra_vectors.len(), 1);
    let s = a.var_space();
    let g = &st.extra_vectors[0];
    let alpha1 = parse_ratfunc(s, "(l25*l34 - l24*l35 + l23*l45)/(l14*l23 - l13*l24 + l12*l34)").unwrap();
    assert_eq!(g[10], alpha1);
    assert!(g[14].is_one());
    // alpha_4 as it comes out of the kernel; it satisfies M γ = 0 below.
    let alpha4 = parse_ratfunc(s, "-(l12*l35 - l13*l25 + l15*l23)/(l14*l23 - l13*l24 + l12*l34)").unwrap();
    assert_eq!(g[13], alpha4);
    let m = build_m(&a, &generic_functional(&a));
    assert!(m.mul_vec(g).iter().all(|x| x.is_zero()));
}

#[test]
fn m3_remark_point_has_z3_in_stabilizer() {
    let a = construct_free2(3).unwrap();
    let st = stabilizer(&a, &numeric(&a, &[(Variable::Center(1, 2), 1)]));
    assert_eq!(st.extra_vectors.len(), 1);
    let z3: Vec<_> = [0, 0, 0, 0, 0, 1].iter().map(|&v| RatFunc::constant(a.var_space(), q(v))).collect();
    assert_eq!(st.extra_vectors[0], z3);
}

#[test]
fn specialize_alpha1_at_hand_point() {
    let a = construct_free2(5).unwrap();
    let s = a.var_space();
    let alpha1 = parse_ratfunc(s, "(l25*l34 - l24*l35 + l23*l45)/(l14*l23 - l13*l24 + l12*l34)").unwrap();
    let mut pt: Assignment = a.var_space().vars().iter().map(|&v| (v, q(0))).collect();
    pt.insert(Variable::Center(2, 5), q(1));
    pt.insert(Variable::Center(3, 4), q(1));
    pt.insert(Variable::Center(1, 2), q(1));
    assert_eq!(specialize(&alpha1, &pt).unwrap(), q(1));

    let c = RatFunc::constant(s, q(5));
    assert_eq!(specialize(&c, &Assignment::new()).unwrap(), q(5));

    pt.insert(Variable::Center(3, 4), q(0));
    match specialize(&alpha1, &pt) {
        Err(SpecializeError::Degenerate { denominator }) => {
            assert_eq!(denominator, parse_poly(s, "l14*l23 - l13*l24 + l12*l34").unwrap());
        }
        other => panic!("expected Degenerate, got {other:?}"),
    }
    assert!(matches!(specialize(&alpha1, &Assignment::new()), Err(SpecializeError::Unassigned(Variable::Center(..)))));
}

#[test]
fn omega_membership() {
    let h = construct_free2(2).unwrap();
    assert!(in_omega(&h, &numeric(&h, &[(Variable::Center(1, 2), 1)])));
    assert!(!in_omega(&h, &numeric(&h, &[(Variable::Generator(1), 1)])));

    let a5 = construct_free2(5).unwrap();
    assert!(!in_omega(&a5, &numeric(&a5, &[(Variable::Generator(2), 4)])));

    let a4 = construct_free2(4).unwrap();
    let primes = [2, 3, 5, 7, 11, 13];
    let pairs: Vec<(Variable, i64)> = (1..=4)
        .flat_map(|i| (i + 1..=4).map(move |j| Variable::Center(i, j)))
        .zip(primes)
        .collect();
    // Pfaffian 2*13 - 3*11 + 5*7 = 28
    let lam = numeric(&a4, &pairs);
    assert!(in_omega(&a4, &lam));
    assert_eq!(omega_polynomial(&a4, &lam).as_constant(), Some(q(28 * 28)));
}

#[test]
fn omega1_membership() {
    let a = construct_free2(3).unwrap();
    assert!(in_omega1(&a, &numeric(&a, &[(Variable::Center(1, 3), 1), (Variable::Center(2, 3), 2)])));
    assert!(!in_omega1(&a, &numeric(&a, &[(Variable::Center(1, 3), 1)])));
    let a4 = construct_free2(4).unwrap();
    assert!(in_omega1(&a4, &numeric(&a4, &[])));
}

#[test]
fn stabilizer_json() {
    let a = construct_free2(3).unwrap();
    let st = stabilizer(&a, &generic_functional(&a));
    let j = serde_json::to_string(&st.to_json()).unwrap();
    assert_eq!(
        j,
        r#"{"center_dim":3,"extra":[["0","0","0","(1 * l23) / (1 * l12)","(-1 * l13) / (1 * l12)","1"]]}"#
    );
}
