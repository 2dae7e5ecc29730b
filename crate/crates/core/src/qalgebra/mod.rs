//! The associative algebra generated by `X_{i,m}`, `Y_{i,m}` with
//! `q`-commutation relations, its normal forms and gradings.

pub mod automorph;
pub mod element;
pub mod gen;
pub mod rewrite;
pub mod spec;
pub mod twist;

use rand::{Rng, SeedableRng};

pub use automorph::{sigma_q, sigma_q_pow, smash_relation_check};
pub use element::Element;
pub use gen::{format_word, parse_state_word, parse_word, word_weight, Gen, Kind, Word};
pub use rewrite::{
    exchange, is_normal, left_mul_gen, multiply, normal_form, normal_form_by_insertion, normal_form_word, rewrite_step,
    swap_at,
};
pub use spec::QSpec;
pub use twist::{chi, epsilon, grade, twist_check, twist_check_with, words_up_to};

use crate::report::CheckReport;

pub fn random_word(rng: &mut impl Rng, l: usize, max_len: usize, mode_radius: i32) -> Word {
    let len = rng.gen_range(0..=max_len);
    (0..len)
        .map(|_| {
            let color = rng.gen_range(1..=l as u16);
            let mode = rng.gen_range(-mode_radius..=mode_radius);
            if rng.gen_bool(0.5) {
                Gen::x(color, mode)
            } else {
                Gen::y(color, mode)
            }
        })
        .collect()
}

/// Random words of length at most 6 with modes in `[-mode_radius, mode_radius]`
/// reduce to the same normal form after an arbitrary first rewrite, and random
/// triples associate.
pub fn confluence_check(spec: &QSpec, words: usize, triples: usize, mode_radius: i32, seed: u64) -> CheckReport {
    let mut rep = CheckReport::new("confluence");
    let mut rng = rand::rngs::StdRng::seed_from_u64(seed);
    for _ in 0..words {
        let w = random_word(&mut rng, spec.l(), 6, mode_radius);
        let direct = normal_form_word(spec, &w);
        let inserted = normal_form_by_insertion(spec, &w);
        rep.record(direct == inserted, || format!("{}: two strategies disagree", Element::from_word(w.clone())));
        if w.len() >= 2 {
            let t = rng.gen_range(0..w.len() - 1);
            let mut detour = Element::zero();
            for (v, c) in swap_at(spec, &w, t) {
                detour.add_scaled(&normal_form_word(spec, &v), &c);
            }
            rep.record(direct == detour, || format!("{}: swap at {t} changes the normal form", Element::from_word(w.clone())));
        }
    }
    for _ in 0..triples {
        let a = Element::from_word(random_word(&mut rng, spec.l(), 3, mode_radius));
        let b = Element::from_word(random_word(&mut rng, spec.l(), 3, mode_radius));
        let c = Element::from_word(random_word(&mut rng, spec.l(), 3, mode_radius));
        let left = multiply(spec, &multiply(spec, &a, &b), &c);
        let right = multiply(spec, &a, &multiply(spec, &b, &c));
        rep.record(left == right, || format!("({a})({b})({c}) not associative"));
    }
    rep
}
