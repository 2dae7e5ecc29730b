use proptest::prelude::*;
use qva_core::arith::Scalar;
use qva_core::qalgebra::*;

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

fn nf(spec: &QSpec, text: &str) -> Element {
    normal_form_word(spec, &parse_word(text).unwrap())
}

#[test]
fn contact_term_for_clifford_pair() {
    let e = nf(&clifford(), "X[1,0] Y[1,-1]");
    let expected = Element::from_terms([
        (parse_word("Y[1,-1] X[1,0]").unwrap(), Scalar::from_int(-1)),
        (Word::new(), Scalar::one()),
    ]);
    assert_eq!(e, expected);
    assert_eq!(e.to_string(), "- Y[1,-1] X[1,0] + 1");
}

#[test]
fn cross_color_exchange_uses_q21() {
    let spec = mixed();
    let e = nf(&spec, "X[1,5] Y[2,3]");
    assert_eq!(e, nf(&spec, "Y[2,3] X[1,5]").scale(spec.q(2, 1)));
}

#[test]
fn repeated_fermion_vanishes() {
    assert!(nf(&clifford(), "X[1,-1] X[1,-1]").is_zero());
    assert!(!nf(&weyl(), "X[1,-1] X[1,-1]").is_zero());
}

#[test]
fn skew_violation_is_rejected() {
    let bad = QSpec::new(vec![
        vec![Scalar::one(), Scalar::from_int(2)],
        vec![Scalar::from_int(2), Scalar::one()],
    ]);
    assert!(matches!(bad, Err(qva_core::QvaError::SkewViolation { .. })));
}

#[test]
fn diagonal_must_be_a_sign() {
    let bad = QSpec::new_unchecked(vec![vec![Scalar::i()]]).unwrap();
    assert!(bad.validate().is_err());
}

#[test]
fn relations_hold_in_normal_form() {
    let spec = mixed();
    for i in 1..=2u16 {
        for j in 1..=2u16 {
            for m in -2..=2 {
                for n in -2..=2 {
                    let x = |c, k| Element::from_word(vec![Gen::x(c, k)]);
                    let y = |c, k| Element::from_word(vec![Gen::y(c, k)]);
                    let xx = multiply(&spec, &x(i, m), &x(j, n)).sub(&multiply(&spec, &x(j, n), &x(i, m)).scale(spec.q(i, j)));
                    assert!(xx.is_zero());
                    let yy = multiply(&spec, &y(i, m), &y(j, n)).sub(&multiply(&spec, &y(j, n), &y(i, m)).scale(spec.q(i, j)));
                    assert!(yy.is_zero());
                    let xy = multiply(&spec, &x(i, m), &y(j, n)).sub(&multiply(&spec, &y(j, n), &x(i, m)).scale(spec.q(j, i)));
                    let delta = if i == j && m + n + 1 == 0 { Element::one() } else { Element::zero() };
                    assert_eq!(xy, delta, "i={i} j={j} m={m} n={n}");
                }
            }
        }
    }
}

#[test]
fn confluence_and_associativity_sample() {
    for spec in [clifford(), weyl(), mixed()] {
        let rep = confluence_check(&spec, 60, 20, 2, 7);
        assert!(rep.passed(), "{rep}: {:?}", rep.examples);
    }
}

#[test]
fn twist_reproduces_products() {
    let rep = twist_check(&mixed(), 3, &[-1, 0]);
    assert!(rep.passed(), "{rep}: {:?}", rep.examples);
}

#[test]
fn twist_detects_a_wrong_cocycle() {
    let spec = mixed();
    let bad = |a: &[i64], b: &[i64]| epsilon(&spec, b, a);
    let rep = twist_check_with(&spec, 2, &[-1, 0], &bad);
    assert!(!rep.passed());
}

#[test]
fn smash_relations() {
    let spec = mixed();
    assert!(smash_relation_check(&spec, &spec, &[-2, -1, 0, 1]).passed());
    let i = Scalar::i();
    let perturbed = QSpec::new(vec![vec![Scalar::one(), -&i], vec![i.clone(), Scalar::from_int(-1)]]).unwrap();
    assert!(!smash_relation_check(&spec, &perturbed, &[-1, 0]).passed());
}

#[test]
fn sigma_zero_entry_rejected() {
    let e = Element::from_word(vec![Gen::x(1, 0)]);
    assert!(sigma_q(&[Scalar::zero()], &e).is_err());
}

/// Counts normal words of each length by brute force over all words.
fn normal_counts(spec: &QSpec, modes: &[i32], max_len: usize) -> Vec<usize> {
    let mut counts = vec![0; max_len + 1];
    for w in words_up_to(spec.l(), modes, max_len) {
        if is_normal(spec, &w) {
            counts[w.len()] += 1;
        }
    }
    counts
}

#[test]
fn normal_words_factor_over_colors() {
    let spec = mixed();
    let modes = [-2, -1, 0];
    let total = normal_counts(&spec, &modes, 4);
    let c1 = normal_counts(&weyl(), &modes, 4);
    let c2 = normal_counts(&clifford(), &modes, 4);
    for n in 0..=4 {
        let conv: usize = (0..=n).map(|k| c1[k] * c2[n - k]).sum();
        assert_eq!(total[n], conv, "length {n}");
    }
}

fn arb_word(l: u16) -> impl Strategy<Value = Word> {
    prop::collection::vec((1..=l, any::<bool>(), -2i32..=2), 0..6).prop_map(|v| {
        v.into_iter().map(|(c, x, m)| if x { Gen::x(c, m) } else { Gen::y(c, m) }).collect()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn normal_form_is_idempotent(w in arb_word(2)) {
        let spec = mixed();
        let e = normal_form_word(&spec, &w);
        prop_assert_eq!(normal_form(&spec, &e), e.clone());
        for v in e.terms().keys() {
            prop_assert!(is_normal(&spec, v));
        }
    }

    #[test]
    fn strategies_agree(w in arb_word(2)) {
        let spec = mixed();
        prop_assert_eq!(normal_form_word(&spec, &w), normal_form_by_insertion(&spec, &w));
    }

    #[test]
    fn grading_is_preserved(w in arb_word(2)) {
        let spec = mixed();
        let d = grade(2, &w);
        for v in normal_form_word(&spec, &w).terms().keys() {
            prop_assert_eq!(grade(2, v), d.clone());
        }
    }

    #[test]
    fn sigma_is_an_automorphism(w in arb_word(2), a in 1i64..4, b in 1i64..4) {
        let spec = mixed();
        let q = vec![Scalar::from_int(a), Scalar::from_ratio(1, b)];
        let lhs = sigma_q(&q, &normal_form_word(&spec, &w)).unwrap();
        let rhs = normal_form(&spec, &sigma_q(&q, &Element::from_word(w.clone())).unwrap());
        prop_assert_eq!(lhs, rhs);
        let r = vec![Scalar::from_int(b), Scalar::i()];
        let qr: Vec<Scalar> = q.iter().zip(&r).map(|(x, y)| x * y).collect();
        let e = Element::from_word(w);
        prop_assert_eq!(sigma_q(&q, &sigma_q(&r, &e).unwrap()).unwrap(), sigma_q(&qr, &e).unwrap());
    }

    #[test]
    fn word_text_round_trips(w in arb_word(3)) {
        prop_assert_eq!(parse_word(&format_word(&w)).unwrap(), w);
    }
}
