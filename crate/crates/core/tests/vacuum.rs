use std::collections::BTreeMap;

use proptest::prelude::*;
use qva_core::arith::{HalfInt, Scalar};
use qva_core::qalgebra::*;
use qva_core::vacuum::*;

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

/// Counts, per twice-weight, multisets of modes for one color by direct
/// enumeration of occupation numbers.
fn one_color_counts(fermionic: bool, max_twice: i64) -> Vec<u64> {
    // Two kinds of oscillators per half-odd weight (2n-1)/2.
    let mut slots = Vec::new();
    let mut t = 1;
    while t <= max_twice {
        slots.push(t);
        slots.push(t);
        t += 2;
    }
    let mut counts = vec![0u64; max_twice as usize + 1];
    fn go(slots: &[i64], k: usize, total: i64, fermionic: bool, max: i64, counts: &mut [u64]) {
        if k == slots.len() {
            counts[total as usize] += 1;
            return;
        }
        let cap = if fermionic { 1 } else { i64::MAX };
        let mut occ = 0;
        while occ <= cap && total + occ * slots[k] <= max {
            go(slots, k + 1, total + occ * slots[k], fermionic, max, counts);
            occ += 1;
        }
    }
    go(&slots, 0, 0, fermionic, max_twice, &mut counts);
    counts
}

fn oracle(spec: &QSpec, max_twice: i64) -> Vec<u64> {
    let mut acc = vec![0u64; max_twice as usize + 1];
    acc[0] = 1;
    for c in spec.colors() {
        let f = one_color_counts(spec.is_fermionic(c), max_twice);
        let mut next = vec![0u64; acc.len()];
        for a in 0..acc.len() {
            for b in 0..acc.len() - a {
                next[a + b] += acc[a] * f[b];
            }
        }
        acc = next;
    }
    acc
}

#[test]
fn small_weight_anchors() {
    for (spec, l) in [(clifford(), 1), (weyl(), 1), (mixed(), 2)] {
        assert_eq!(graded_dim(&spec, HalfInt::ZERO), 1);
        assert_eq!(graded_dim(&spec, HalfInt::HALF), 2 * l);
    }
    assert_eq!(graded_dim(&clifford(), HalfInt::from_int(1)), 1);
    assert_eq!(graded_dim(&clifford(), HalfInt::from_int(2)), 4);
    assert_eq!(graded_dim(&weyl(), HalfInt::from_int(1)), 3);
}

#[test]
fn lowest_basis_vectors() {
    let b = basis_up_to(&clifford(), HalfInt::HALF);
    let expected: Vec<Word> = vec![vec![], vec![Gen::y(1, -1)], vec![Gen::x(1, -1)]];
    assert_eq!(b, expected);
}

#[test]
fn dimensions_match_character_and_oracle() {
    for spec in [clifford(), weyl(), mixed()] {
        let max = HalfInt::from_int(4);
        let ch = character(&spec, max);
        let or = oracle(&spec, max.twice());
        for w in max.steps_up_to() {
            let d = graded_dim(&spec, w);
            assert_eq!(ch[w.twice() as usize], d.into(), "weight {w}");
            assert_eq!(or[w.twice() as usize], d as u64, "weight {w}");
        }
    }
}

#[test]
fn annihilators_kill_vacuum_and_contract() {
    let spec = clifford();
    assert!(act(&spec, &Gen::x(1, 0), &[]).is_empty());
    let s = act_state(&spec, &Gen::x(1, 0), &v_gen(1));
    assert_eq!(s, State::one());
    let s = act_state(&spec, &Gen::y(1, 0), &u_gen(1));
    assert_eq!(s, State::one().scale(&-spec.q(1, 1)));
    assert!(vector(&spec, &[Gen::x(1, -1), Gen::x(1, -1)]).is_zero());
}

fn reference_act(spec: &QSpec, g: &Gen, w: &[Gen]) -> State {
    let mut word = vec![*g];
    word.extend_from_slice(w);
    let nf = normal_form_word(spec, &word);
    let kept: BTreeMap<Word, Scalar> =
        nf.terms().iter().filter(|(v, _)| v.last().is_none_or(|h| h.is_creation())).map(|(v, c)| (v.clone(), c.clone())).collect();
    State::from_terms(kept)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn act_matches_normal_form_projection(k in 0usize..40, c in 1u16..=2, x in any::<bool>(), m in -3i32..=3) {
        let spec = mixed();
        let basis = basis_up_to(&spec, HalfInt::from_int(2));
        let w = &basis[k % basis.len()];
        let g = if x { Gen::x(c, m) } else { Gen::y(c, m) };
        let fast = State::from_terms(act(&spec, &g, w));
        prop_assert_eq!(fast, reference_act(&spec, &g, w));
    }

    #[test]
    fn basis_words_are_normal(k in 0usize..200) {
        let spec = mixed();
        let basis = basis_up_to(&spec, HalfInt::from_int(3));
        let w = &basis[k % basis.len()];
        prop_assert!(is_normal(&spec, w));
        prop_assert_eq!(vector(&spec, w), State::from_word(w.clone()));
    }
}
