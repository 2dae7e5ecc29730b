//! The vacuum module: normal words in creation modes acting on `|0>`.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::arith::{HalfInt, Scalar};
use crate::qalgebra::{left_mul_gen, word_weight, Element, Gen, QSpec, Word};

/// Vectors of the vacuum module, keyed by normal words in creation modes.
pub type State = Element;

/// `g . w` for a basis word `w`; annihilation modes that reach the vacuum drop out.
pub fn act(spec: &QSpec, g: &Gen, w: &[Gen]) -> Vec<(Word, Scalar)> {
    let mut out = left_mul_gen(spec, g, w);
    if !g.is_creation() {
        out.retain(|(v, _)| v.iter().all(Gen::is_creation));
    }
    out
}

pub fn act_state(spec: &QSpec, g: &Gen, s: &State) -> State {
    let mut out = State::zero();
    for (w, c) in s.terms() {
        for (v, d) in act(spec, g, w) {
            out.add_term(v, &(c * &d));
        }
    }
    out
}

/// Applies a word of generators to a state, rightmost generator first.
pub fn apply_word(spec: &QSpec, word: &[Gen], s: &State) -> State {
    word.iter().rev().fold(s.clone(), |acc, g| act_state(spec, g, &acc))
}

/// The vector `word |0>`.
pub fn vector(spec: &QSpec, word: &[Gen]) -> State {
    apply_word(spec, word, &State::one())
}

/// The generating vectors `u = X_{i,-1}|0>` and `v = Y_{i,-1}|0>`.
pub fn u_gen(i: u16) -> State {
    State::from_word(vec![Gen::x(i, -1)])
}

pub fn v_gen(i: u16) -> State {
    State::from_word(vec![Gen::y(i, -1)])
}

/// Conformal weight of a homogeneous state; `None` for zero or mixed weight.
pub fn weight(s: &State) -> Option<HalfInt> {
    let lo = s.min_weight()?;
    (s.max_weight()? == lo).then_some(lo)
}

fn creation_alphabet(spec: &QSpec, max_weight: HalfInt) -> Vec<Gen> {
    let nmax = (max_weight.twice() + 1).div_euclid(2);
    let mut gens = Vec::new();
    for c in spec.colors() {
        for n in 1..=nmax {
            gens.push(Gen::x(c, -(n as i32)));
            gens.push(Gen::y(c, -(n as i32)));
        }
    }
    gens.sort();
    gens
}

/// Normal creation words of weight at most `max_weight`, ordered by weight.
pub fn basis_up_to(spec: &QSpec, max_weight: HalfInt) -> Vec<Word> {
    let alphabet = creation_alphabet(spec, max_weight);
    let mut out = Vec::new();
    let mut cur = Word::new();
    fn dfs(spec: &QSpec, alpha: &[Gen], start: usize, budget: i64, cur: &mut Word, out: &mut Vec<Word>) {
        out.push(cur.clone());
        for k in start..alpha.len() {
            let g = alpha[k];
            let w = g.weight().twice();
            if w > budget {
                continue;
            }
            let next = if spec.is_fermionic(g.color) { k + 1 } else { k };
            cur.push(g);
            dfs(spec, alpha, next, budget - w, cur, out);
            cur.pop();
        }
    }
    dfs(spec, &alphabet, 0, max_weight.twice(), &mut cur, &mut out);
    out.sort_by(|a, b| word_weight(a).cmp(&word_weight(b)).then_with(|| a.cmp(b)));
    out
}

pub fn basis_of_weight(spec: &QSpec, w: HalfInt) -> Vec<Word> {
    basis_up_to(spec, w).into_iter().filter(|v| word_weight(v) == w).collect()
}

pub fn graded_dim(spec: &QSpec, w: HalfInt) -> usize {
    basis_of_weight(spec, w).len()
}

/// Coefficients of `prod_i prod_{n>=1} (1 -+ t^{n-1/2})^{-+2}` up to `t^max_weight`,
/// indexed by twice the weight.
pub fn character(spec: &QSpec, max_weight: HalfInt) -> Vec<BigInt> {
    let len = (max_weight.twice() + 1) as usize;
    let mut acc = vec![BigInt::zero(); len];
    acc[0] = BigInt::one();
    for c in spec.colors() {
        for n in 1.. {
            let step = (2 * n - 1) as usize;
            if step >= len {
                break;
            }
            for _ in 0..2 {
                if spec.is_fermionic(c) {
                    // multiply by (1 + t^step)
                    for d in (step..len).rev() {
                        let add = acc[d - step].clone();
                        acc[d] += add;
                    }
                } else {
                    // divide by (1 - t^step)
                    for d in step..len {
                        let add = acc[d - step].clone();
                        acc[d] += add;
                    }
                }
            }
        }
    }
    acc
}
