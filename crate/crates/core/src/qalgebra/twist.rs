use crate::arith::Scalar;
use crate::qalgebra::element::Element;
use crate::qalgebra::gen::{Gen, Word};
use crate::qalgebra::rewrite::normal_form_word;
use crate::qalgebra::spec::QSpec;
use crate::report::CheckReport;

/// `Z^l` degree of a word: `X_i` has degree `e_i`, `Y_i` has `-e_i`.
pub fn grade(l: usize, w: &[Gen]) -> Vec<i64> {
    let mut d = vec![0; l];
    for g in w {
        d[g.color as usize - 1] += g.sign();
    }
    d
}

fn bimultiplicative(alpha: &[i64], beta: &[i64], base: impl Fn(usize, usize) -> Option<Scalar>) -> Scalar {
    let mut acc = Scalar::one();
    for (i, a) in alpha.iter().enumerate() {
        for (j, b) in beta.iter().enumerate() {
            let e = a * b;
            if e == 0 {
                continue;
            }
            if let Some(q) = base(i, j) {
                acc = &acc * &q.pow(e).expect("unit entry");
            }
        }
    }
    acc
}

/// The 2-cocycle with `eps(e_i, e_j) = q_ij` for `i > j` and `1` otherwise.
pub fn epsilon(spec: &QSpec, alpha: &[i64], beta: &[i64]) -> Scalar {
    bimultiplicative(alpha, beta, |i, j| (i > j).then(|| spec.matrix()[i][j].clone()))
}

/// The bicharacter `prod q_ij^{alpha_i beta_j}`.
pub fn chi(spec: &QSpec, alpha: &[i64], beta: &[i64]) -> Scalar {
    bimultiplicative(alpha, beta, |i, j| Some(spec.matrix()[i][j].clone()))
}

/// All words of length `0..=max_len` over the generators with modes in `modes`.
pub fn words_up_to(l: usize, modes: &[i32], max_len: usize) -> Vec<Word> {
    let mut alphabet = Vec::new();
    for c in 1..=l as u16 {
        for &m in modes {
            alphabet.push(Gen::x(c, m));
            alphabet.push(Gen::y(c, m));
        }
    }
    let mut out = vec![Word::new()];
    let mut layer = vec![Word::new()];
    for _ in 0..max_len {
        let mut next = Vec::new();
        for w in &layer {
            for g in &alphabet {
                let mut v = w.clone();
                v.push(*g);
                next.push(v);
            }
        }
        out.extend(next.iter().cloned());
        layer = next;
    }
    out
}

type Cocycle<'a> = &'a dyn Fn(&[i64], &[i64]) -> Scalar;

/// Image of a word in the twisted product of the single-color algebras.
fn to_model(diag: &QSpec, eps: Cocycle<'_>, w: &[Gen]) -> Element {
    let l = diag.l();
    let mut acc = Element::one();
    for g in w {
        let dg = grade(l, std::slice::from_ref(g));
        let mut next = Element::zero();
        for (v, c) in acc.terms() {
            let mut u = v.clone();
            u.push(*g);
            let f = eps(&grade(l, v), &dg);
            next.add_scaled(&normal_form_word(diag, &u), &(c * &f));
        }
        acc = next;
    }
    acc
}

fn model_mul(diag: &QSpec, eps: Cocycle<'_>, a: &Element, b: &Element) -> Element {
    let l = diag.l();
    let mut out = Element::zero();
    for (u, c) in a.terms() {
        for (v, d) in b.terms() {
            let mut w = u.clone();
            w.extend_from_slice(v);
            let f = eps(&grade(l, u), &grade(l, v));
            out.add_scaled(&normal_form_word(diag, &w), &(&(c * d) * &f));
        }
    }
    out
}

/// Maps a model element back, undoing the cocycle picked up by each word.
fn from_model(spec: &QSpec, eps: Cocycle<'_>, e: &Element) -> Element {
    let l = spec.l();
    let mut out = Element::zero();
    for (w, c) in e.terms() {
        let mut mu = Scalar::one();
        for t in 1..w.len() {
            mu = &mu * &eps(&grade(l, &w[..t]), &grade(l, &w[t..t + 1]));
        }
        let f = c * &mu.inv().expect("cocycle values are units");
        out.add_scaled(&normal_form_word(spec, w), &f);
    }
    out
}

/// Compares products in the algebra with products computed in the cocycle
/// twist of the tensor product of its single-color factors.
pub fn twist_check(spec: &QSpec, max_len: usize, modes: &[i32]) -> CheckReport {
    let eps = |a: &[i64], b: &[i64]| epsilon(spec, a, b);
    twist_check_with(spec, max_len, modes, &eps)
}

pub fn twist_check_with(spec: &QSpec, max_len: usize, modes: &[i32], eps: Cocycle<'_>) -> CheckReport {
    let mut rep = CheckReport::new("twist");
    let diag = spec.diagonal();
    let words = words_up_to(spec.l(), modes, max_len);
    let images: Vec<Element> = words.iter().map(|w| to_model(&diag, eps, w)).collect();
    for (a, wa) in words.iter().enumerate() {
        for (b, wb) in words.iter().enumerate() {
            if wa.len() + wb.len() > max_len {
                continue;
            }
            let twisted = from_model(spec, eps, &model_mul(&diag, eps, &images[a], &images[b]));
            let mut w = wa.clone();
            w.extend_from_slice(wb);
            let direct = normal_form_word(spec, &w);
            rep.record(twisted == direct, || {
                format!("{} * {}: twisted {} vs direct {}", Element::from_word(wa.clone()), Element::from_word(wb.clone()), twisted, direct)
            });
        }
    }
    rep
}
