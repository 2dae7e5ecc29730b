use qva_core::arith::{HalfInt, Scalar};
use qva_core::qalgebra::*;
use qva_core::vacuum::*;
use qva_core::vertex::*;

fn clifford() -> QSpec {
    QSpec::uniform(1, Scalar::from_int(-1)).unwrap()
}

fn weyl() -> QSpec {
    QSpec::uniform(1, Scalar::one()).unwrap()
}

fn mixed() -> QSpec {
    let i = Scalar::i();
    QSpec::new(vec![vec![Scalar::one(), i.clone()], vec![i.inv().unwrap(), Scalar::from_int(-1)]]).unwrap()
}

#[test]
fn two_routes_agree_on_small_states() {
    for spec in [clifford(), weyl(), mixed()] {
        let eng = VertexEngine::new(spec.clone());
        let basis = basis_up_to(&spec, HalfInt::from_int(2));
        for a in &basis {
            for b in basis.iter().take(12) {
                for n in -3..=2 {
                    let x = eng.mode_word(a, n, b);
                    let y = eng.mode_word_normal_ordered(a, n, b);
                    assert_eq!(x, y, "a={a:?} n={n} b={b:?}");
                }
            }
        }
    }
}

fn st(spec: &QSpec, text: &str) -> State {
    vector(spec, &parse_state_word(text).unwrap())
}

#[test]
fn translation_of_generator() {
    let spec = clifford();
    let eng = VertexEngine::new(spec.clone());
    assert_eq!(eng.dop(&u_gen(1)), st(&spec, "X[1,-2] |0>"));
    assert!(eng.dop(&State::one()).is_zero());
}

#[test]
fn vacuum_and_creation_properties() {
    for spec in [clifford(), weyl(), mixed()] {
        let eng = VertexEngine::new(spec.clone());
        for w in basis_up_to(&spec, HalfInt::from_int(2)) {
            let v = State::from_word(w);
            let rep = creation_check(&eng, &v, 3);
            assert!(rep.passed(), "{rep} {:?}", rep.examples);
            for n in -3..=3 {
                let expected = if n == -1 { v.clone() } else { State::zero() };
                assert_eq!(eng.state_mode(&State::one(), n, &v), expected);
            }
        }
    }
}

#[test]
fn derivative_property() {
    let spec = mixed();
    let eng = VertexEngine::new(spec.clone());
    let basis = basis_up_to(&spec, HalfInt::from_int(1));
    for a in &basis {
        for b in &basis {
            let rep = derivative_check(&eng, &State::from_word(a.clone()), &State::from_word(b.clone()), -3..=3);
            assert!(rep.passed(), "{rep} {:?}", rep.examples);
        }
    }
}

#[test]
fn locality_orders_of_generators() {
    let spec = mixed();
    let eng = VertexEngine::new(spec.clone());
    let tests: Vec<State> = basis_up_to(&spec, HalfInt::from_int(1)).into_iter().map(State::from_word).collect();
    for i in 1..=2u16 {
        for j in 1..=2u16 {
            let uu = slocality_witness(&eng, &u_gen(i), &u_gen(j), &tests, 3, 3).unwrap();
            assert_eq!(uu, (0, spec.q(i, j).clone()));
            let vv = slocality_witness(&eng, &v_gen(i), &v_gen(j), &tests, 3, 3).unwrap();
            assert_eq!(vv, (0, spec.q(i, j).clone()));
            let uv = slocality_witness(&eng, &u_gen(i), &v_gen(j), &tests, 3, 3).unwrap();
            let k = if i == j { 1 } else { 0 };
            assert_eq!(uv, (k, spec.q(j, i).clone()), "u{i} v{j}");
        }
    }
}

#[test]
fn weak_associativity_and_jacobi_for_generators() {
    for spec in [clifford(), mixed()] {
        let eng = VertexEngine::new(spec.clone());
        let gens: Vec<State> = spec.colors().flat_map(|i| [u_gen(i), v_gen(i)]).collect();
        let tests: Vec<State> = basis_up_to(&spec, HalfInt::from_int(1)).into_iter().map(State::from_word).collect();
        for u in &gens {
            for v in &gens {
                for w in &tests {
                    let rep = weak_assoc_check(&eng, u, v, w, 2);
                    assert!(rep.passed(), "{rep} {:?}", rep.examples);
                    let rep = sjacobi_check(&eng, u, v, w, 2);
                    assert!(rep.passed(), "{rep} {:?}", rep.examples);
                }
            }
        }
    }
}

#[test]
fn jacobi_for_composite_states() {
    let spec = mixed();
    let eng = VertexEngine::new(spec.clone());
    let basis: Vec<State> = basis_up_to(&spec, HalfInt::from_int(1)).into_iter().map(State::from_word).collect();
    for u in basis.iter().skip(1) {
        for v in basis.iter().skip(1) {
            let rep = sjacobi_check(&eng, u, v, &basis[1], 1);
            assert!(rep.passed(), "{rep} {:?}", rep.examples);
        }
    }
}

#[test]
fn jacobi_detects_wrong_braiding() {
    let spec = mixed();
    let eng = VertexEngine::new(spec.clone());
    // u1 and u2 braid by q12 = i; pretending they commute breaks the identity.
    let liar = QSpec::new(vec![vec![Scalar::one(), Scalar::one()], vec![Scalar::one(), Scalar::from_int(-1)]]).unwrap();
    let f_true = braiding(&eng, &u_gen(1), &u_gen(2)).unwrap();
    let f_liar = braiding(&VertexEngine::new(liar), &u_gen(1), &u_gen(2)).unwrap();
    assert_ne!(f_true, f_liar);
    let w = v_gen(1);
    assert!(sjacobi_check_with(&eng, &u_gen(1), &u_gen(2), &w, 2, &f_true).passed());
    let rep = sjacobi_check_with(&eng, &u_gen(1), &u_gen(2), &w, 2, &f_liar);
    assert!(rep.failed > 0, "{rep}");
}

#[test]
fn mode_product_identity() {
    let spec = clifford();
    let eng = VertexEngine::new(spec.clone());
    let basis: Vec<State> = basis_up_to(&spec, HalfInt::from_int(1)).into_iter().map(State::from_word).collect();
    for u in &basis {
        for v in &basis {
            for w in &basis {
                for p in -2..=1 {
                    for q in -2..=1 {
                        assert!(mode_product_check(&eng, u, v, w, p, q));
                    }
                }
            }
        }
    }
}

#[test]
fn conformal_vector_normal_forms() {
    let half = Scalar::from_ratio(1, 2);
    let c = clifford();
    let expected = st(&c, "Y[1,-2] X[1,-1] |0>").scale(&half).plus(&st(&c, "X[1,-2] Y[1,-1] |0>").scale(&half));
    assert_eq!(conformal_vector(&c), expected);
    let w = weyl();
    let expected = st(&w, "Y[1,-2] X[1,-1] |0>").scale(&half).sub(&st(&w, "X[1,-2] Y[1,-1] |0>").scale(&half));
    assert_eq!(conformal_vector(&w), expected);
}

#[test]
fn central_charges() {
    assert_eq!(central_charge(&VertexEngine::new(clifford())).unwrap(), Scalar::one());
    assert_eq!(central_charge(&VertexEngine::new(weyl())).unwrap(), Scalar::from_int(-1));
    assert_eq!(central_charge(&VertexEngine::new(mixed())).unwrap(), Scalar::zero());
}

#[test]
fn virasoro_small_window() {
    for spec in [clifford(), weyl()] {
        let eng = VertexEngine::new(spec);
        let out = virasoro_check(&eng, 2, HalfInt::from_int(1)).unwrap();
        assert!(out.report.passed(), "{} {:?}", out.report, out.report.examples);
    }
}
