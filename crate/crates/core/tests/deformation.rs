use qva_core::arith::{HalfInt, Scalar, TruncSeries, Var};
use qva_core::deformation::*;
use qva_core::qalgebra::{parse_state_word, Gen, Kind, QSpec};
use qva_core::vacuum::{basis_up_to, act_state, u_gen, v_gen, State};
use qva_core::QvaError;

fn s(n: i64) -> Scalar {
    Scalar::from_int(n)
}

fn state(text: &str) -> State {
    State::from_word(parse_state_word(text).unwrap())
}

fn w(twice: i64) -> HalfInt {
    HalfInt::from_twice(twice)
}

#[test]
fn zf_linear_exchange_factor() {
    let spec = preset("zf-linear", 8).unwrap();
    let q = &build_qx(&spec)[0][0];
    // -(1 - x)/(1 + x) = -1 + 2x - 2x^2 + ...
    let expect: Vec<Scalar> = (0..8).map(|d| if d == 0 { s(-1) } else { s(2 * if d % 2 == 1 { 1 } else { -1 }) }).collect();
    assert!(q.agrees_with(&TruncSeries::polynomial(Var::X, expect, 8)));
    assert_eq!(q.order(), 8);
    // q(x) q(-x) = 1
    let prod = q.mul(&q.negate_var()).unwrap();
    assert!(prod.agrees_with(&TruncSeries::one(Var::X, 8)));
}

#[test]
fn constant_p_gives_constant_q() {
    for name in ["weyl", "clifford", "mixed"] {
        let spec = preset(name, 6).unwrap();
        let qx = build_qx(&spec);
        for (i, row) in qx.iter().enumerate() {
            for (j, e) in row.iter().enumerate() {
                let c = spec.q().q(i as u16 + 1, j as u16 + 1).clone();
                assert!(e.agrees_with(&TruncSeries::constant(Var::X, c, 6)), "{name} {i} {j}");
            }
        }
    }
}

#[test]
fn yangian_exchange_shapes() {
    let spec = preset("yangian-sl2", 6).unwrap();
    let qx = build_qx(&spec);
    // e e and h e: -(1 - x)/(1 + x); f f and h f: -(1 + x)/(1 - x); h h, e f: 1.
    let plus = TruncSeries::polynomial(Var::X, vec![s(1), s(1)], 6);
    let minus = TruncSeries::polynomial(Var::X, vec![s(1), s(-1)], 6);
    let ee = minus.mul(&plus.inv().unwrap()).unwrap().scale(&s(-1));
    let ff = plus.mul(&minus.inv().unwrap()).unwrap().scale(&s(-1));
    assert!(qx[0][0].agrees_with(&ee));
    assert!(qx[1][0].agrees_with(&ee));
    assert!(qx[2][2].agrees_with(&ff));
    assert!(qx[1][2].agrees_with(&ff));
    assert!(qx[1][1].agrees_with(&TruncSeries::one(Var::X, 6)));
    assert!(qx[0][2].agrees_with(&TruncSeries::one(Var::X, 6)));
}

#[test]
fn spec_validation() {
    let q = QSpec::uniform(2, s(1)).unwrap();
    let one = vec![s(1)];
    let lin = vec![s(1), s(1)];
    let asym = vec![vec![one.clone(), lin.clone()], vec![one.clone(), one.clone()]];
    assert!(matches!(QSeriesSpec::new(q.clone(), asym.clone(), 8), Err(QvaError::InvalidParameter(_))));
    assert!(QSeriesSpec::new_unchecked(q.clone(), asym, 8).is_ok());
    let bad0 = vec![vec![vec![s(2)], one.clone()], vec![one.clone(), one.clone()]];
    assert!(QSeriesSpec::new(q.clone(), bad0, 8).is_err());
    assert!(preset("nope", 8).is_err());
    let parsed = QSeriesSpec::from_strings(
        QSpec::uniform(1, s(-1)).unwrap(),
        &[vec![vec!["1".into(), "1".into()]]],
        8,
    )
    .unwrap();
    assert_eq!(parsed, preset("zf-linear", 8).unwrap());
}

#[test]
fn phi_examples() {
    let spec = preset("zf-linear", 8).unwrap();
    let p = spec.p(1, 1);
    // vacuum fixed
    let r = phi_apply(&spec, 1, &State::one());
    assert_eq!(r.len(), 1);
    assert!(r[&Vec::new()].agrees_with(&TruncSeries::one(Var::X, 8)));
    // generator scaled by p
    let r = phi_apply(&spec, 1, &u_gen(1));
    assert!(r[&vec![Gen::x(1, -1)]].agrees_with(&p));
    // X_{-2}|0> -> p X_{-2}|0> - p' X_{-1}|0>
    let r = phi_apply(&spec, 1, &state("X[1,-2] |0>"));
    assert!(r[&vec![Gen::x(1, -2)]].agrees_with(&p));
    assert!(r[&vec![Gen::x(1, -1)]].agrees_with(&p.divided_derivative(1).scale(&s(-1))));
    // v picks up the inverse
    let r = phi_apply(&spec, 1, &v_gen(1));
    assert!(r[&vec![Gen::y(1, -1)]].agrees_with(&p.inv().unwrap()));
}

#[test]
fn phi_example_two_colors() {
    // quadratic p_12 so the derivative term has two coefficients
    let q = QSpec::uniform(2, s(1)).unwrap();
    let p12 = vec![s(1), s(3), s(5)];
    let p = vec![vec![vec![s(1)], p12.clone()], vec![p12, vec![s(1)]]];
    let spec = QSeriesSpec::new(q, p, 8).unwrap();
    let r = phi_apply(&spec, 1, &state("X[2,-2] |0>"));
    let pp = spec.p(1, 2);
    assert!(r[&vec![Gen::x(2, -2)]].agrees_with(&pp));
    // -p'(x) = -3 - 10x
    assert!(r[&vec![Gen::x(2, -1)]].agrees_with(&TruncSeries::polynomial(Var::X, vec![s(-3), s(-10)], 7)));
}

#[test]
fn dressed_examples() {
    let spec = preset("zf-linear", 8).unwrap();
    let u = u_gen(1);
    for m in -3..=2 {
        let direct = act_state(spec.q(), &Gen::x(1, m as i32), &State::one());
        assert_eq!(dressed_mode(&spec, 1, Kind::X, m, &State::one()).unwrap(), direct);
    }
    assert!(dressed_mode(&spec, 1, Kind::X, -1, &u).unwrap().is_zero());
    // b_{-1} a_{-1}|0> = b_{-1} u: nonzero
    assert!(!dressed_mode(&spec, 1, Kind::Y, -1, &u).unwrap().is_zero());
}

#[test]
fn dressed_reduces_to_plain_modes_for_constant_p() {
    for name in ["weyl", "clifford", "mixed"] {
        let spec = preset(name, 16).unwrap();
        for b in basis_up_to(spec.q(), w(4)) {
            let st = State::from_word(b);
            for c in spec.q().colors() {
                for m in -3..=3 {
                    for kind in [Kind::X, Kind::Y] {
                        let plain = act_state(spec.q(), &Gen { kind, color: c, mode: m as i32 }, &st);
                        assert_eq!(dressed_mode(&spec, c, kind, m, &st).unwrap(), plain, "{name}");
                    }
                }
            }
        }
    }
}

#[test]
fn insufficient_order_reports_minimum() {
    let spec = preset("zf-linear", 2).unwrap();
    let st = state("X[1,-2] Y[1,-1] |0>");
    let err = dressed_mode(&spec, 1, Kind::Y, -3, &st).unwrap_err();
    let QvaError::InsufficientOrder { needed } = err else { panic!("{err:?}") };
    assert!(needed > 2);
    let ok = preset("zf-linear", needed).unwrap();
    let at_needed = dressed_mode(&ok, 1, Kind::Y, -3, &st).unwrap();
    let high = preset("zf-linear", needed + 6).unwrap();
    assert_eq!(dressed_mode(&high, 1, Kind::Y, -3, &st).unwrap(), at_needed);
    let below = preset("zf-linear", needed - 1).unwrap();
    assert!(dressed_mode(&below, 1, Kind::Y, -3, &st).is_err());
}

#[test]
fn zf_relations_hold() {
    let spec = preset("zf-linear", 8).unwrap();
    let rep = zf_relation_check(&spec, 1, 1, 3, w(4)).unwrap();
    assert!(rep.passed(), "{rep}");
    for name in ["weyl", "clifford"] {
        let rep = zf_relation_check(&preset(name, 8).unwrap(), 1, 1, 2, w(3)).unwrap();
        assert!(rep.passed(), "{name}: {rep}");
    }
}

#[test]
fn zf_relations_two_colors() {
    let spec = preset("yangian-sl2", 8).unwrap();
    for (i, j) in [(1, 2), (2, 3), (1, 3), (3, 2)] {
        let rep = zf_relation_check(&spec, i, j, 1, w(2)).unwrap();
        assert!(rep.passed(), "{rep}");
    }
}

#[test]
fn zf_relations_fail_for_asymmetric_p() {
    let q = QSpec::uniform(2, s(-1)).unwrap();
    let one = vec![s(1)];
    let p = vec![vec![one.clone(), vec![s(1), s(1)]], vec![one.clone(), one]];
    let spec = QSeriesSpec::new_unchecked(q, p, 8).unwrap();
    let rep = zf_relation_check(&spec, 1, 2, 2, w(2)).unwrap();
    assert!(rep.failed > 0, "{rep}");
}

#[test]
fn pseudo_automorphism_invariants() {
    let spec = preset("zf-linear", 10).unwrap();
    let vs = [u_gen(1), v_gen(1), state("X[1,-2] |0>"), state("Y[1,-1] X[1,-1] |0>")];
    let rep = phi_law_check(&spec, 1, &vs, w(3), 2, 3);
    assert!(rep.passed(), "{rep}");
    assert!(phi_inverse_check(&spec, 1, w(5)).passed());
    let y = preset("yangian-sl2", 10).unwrap();
    for (i, j) in [(1, 2), (2, 3), (1, 3)] {
        let rep = phi_commute_check(&y, i, j, w(3), 3);
        assert!(rep.passed(), "{rep}");
    }
    let vs = [u_gen(2), v_gen(3), state("X[1,-1] Y[3,-1] |0>")];
    assert!(phi_law_check(&y, 2, &vs, w(2), 1, 2).passed());
}

#[test]
fn filtration_levels() {
    let spec = preset("zf-linear", 8).unwrap();
    let f = filtration_f(&spec, -1, w(3)).unwrap();
    assert!(f.dims.iter().all(|&(_, d)| d == 0));
    let f = filtration_f(&spec, 0, w(3)).unwrap();
    assert!(f.dims.iter().all(|&(_, d)| d == 1));
    let f = filtration_f(&spec, 1, w(3)).unwrap();
    assert_eq!(f.dims[1].1, 3);
    assert!(f.vectors.contains(&u_gen(1)));
}

#[test]
fn associated_graded_matches() {
    let spec = preset("zf-linear", 8).unwrap();
    let out = gr_compare(&spec, w(6), 6).unwrap();
    assert!(out.report.passed(), "{} {:?}", out.report, out.report.examples);
    assert!(out.rows.iter().any(|r| r.expected > 1));
    let out = gr_compare(&preset("mixed", 8).unwrap(), w(3), 4).unwrap();
    assert!(out.report.passed(), "{} {:?}", out.report, out.report.examples);
}

#[test]
fn length_filtration_constant_case() {
    for name in ["clifford", "weyl", "mixed"] {
        let q = preset(name, 4).unwrap().q().clone();
        let rep = filtration_e_check(&q, 2, -3..=2, w(3));
        assert!(rep.passed(), "{name}: {rep}");
    }
}

#[test]
fn half_basis() {
    assert!(half_basis_check(&preset("weyl", 8).unwrap(), w(4)).unwrap().passed());
    assert!(half_basis_check(&preset("clifford", 8).unwrap(), w(4)).unwrap().passed());
    let rep = half_basis_check(&preset("yangian-sl2", 8).unwrap(), w(4)).unwrap();
    assert!(rep.passed(), "{rep}");
}
