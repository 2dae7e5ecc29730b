use std::collections::BTreeMap;

use crate::arith::Scalar;
use crate::qalgebra::element::Element;
use crate::qalgebra::gen::{Gen, Kind, Word};
use crate::qalgebra::spec::QSpec;

/// The defining relation for an adjacent pair: `g h = c * h g + contact`.
pub fn exchange(spec: &QSpec, g: &Gen, h: &Gen) -> (Scalar, Scalar) {
    let (a, b) = (g.color, h.color);
    let c = match (g.kind, h.kind) {
        (Kind::X, Kind::X) | (Kind::Y, Kind::Y) => spec.q(a, b).clone(),
        (Kind::X, Kind::Y) | (Kind::Y, Kind::X) => spec.q(b, a).clone(),
    };
    let paired = a == b && g.mode + h.mode + 1 == 0;
    let contact = match (g.kind, h.kind) {
        (Kind::X, Kind::Y) if paired => Scalar::one(),
        (Kind::Y, Kind::X) if paired => -spec.q(b, a),
        _ => Scalar::zero(),
    };
    (c, contact)
}

fn vanishing_pair(spec: &QSpec, g: &Gen, h: &Gen) -> bool {
    g == h && spec.is_fermionic(g.color)
}

/// Rewrites the leftmost adjacent pair that is out of canonical order (or a
/// repeated fermionic generator). Returns `None` when the word is normal.
pub fn rewrite_step(spec: &QSpec, w: &[Gen]) -> Option<Vec<(Word, Scalar)>> {
    for t in 0..w.len().saturating_sub(1) {
        let (g, h) = (&w[t], &w[t + 1]);
        if vanishing_pair(spec, g, h) {
            return Some(Vec::new());
        }
        if g.key() > h.key() {
            return Some(swap_at(spec, w, t));
        }
    }
    None
}

/// Applies the relation at position `t`, in either direction.
pub fn swap_at(spec: &QSpec, w: &[Gen], t: usize) -> Vec<(Word, Scalar)> {
    let (g, h) = (w[t], w[t + 1]);
    let (c, contact) = exchange(spec, &g, &h);
    let mut out = Vec::with_capacity(2);
    let mut swapped = w.to_vec();
    swapped.swap(t, t + 1);
    out.push((swapped, c));
    if !contact.is_zero() {
        let mut shorter = w[..t].to_vec();
        shorter.extend_from_slice(&w[t + 2..]);
        out.push((shorter, contact));
    }
    out
}

pub fn is_normal(spec: &QSpec, w: &[Gen]) -> bool {
    w.windows(2).all(|p| p[0].key() < p[1].key() || (p[0] == p[1] && !spec.is_fermionic(p[0].color)))
}

/// Normal form by repeated leftmost rewriting.
pub fn normal_form(spec: &QSpec, e: &Element) -> Element {
    let mut pending: BTreeMap<Word, Scalar> = e.terms().clone();
    let mut out = Element::zero();
    while let Some((w, c)) = pending.pop_last() {
        if c.is_zero() {
            continue;
        }
        match rewrite_step(spec, &w) {
            None => out.add_term(w, &c),
            Some(terms) => {
                for (v, d) in terms {
                    let e = pending.entry(v).or_default();
                    *e += &(&c * &d);
                }
            }
        }
    }
    out
}

pub fn normal_form_word(spec: &QSpec, w: &[Gen]) -> Element {
    normal_form(spec, &Element::from_word(w.to_vec()))
}

/// `g * w` for a normal word `w`, by moving `g` rightwards into place.
pub fn left_mul_gen(spec: &QSpec, g: &Gen, w: &[Gen]) -> Vec<(Word, Scalar)> {
    let mut out = Vec::new();
    let mut coef = Scalar::one();
    let gk = g.key();
    let mut t = 0;
    while t < w.len() {
        let h = &w[t];
        let hk = h.key();
        if gk < hk {
            break;
        }
        if gk == hk {
            if spec.is_fermionic(g.color) {
                return out;
            }
            break;
        }
        let (c, contact) = exchange(spec, g, h);
        if !contact.is_zero() {
            let mut shorter = w[..t].to_vec();
            shorter.extend_from_slice(&w[t + 1..]);
            out.push((shorter, &coef * &contact));
        }
        coef = &coef * &c;
        t += 1;
    }
    let mut inserted = Vec::with_capacity(w.len() + 1);
    inserted.extend_from_slice(&w[..t]);
    inserted.push(*g);
    inserted.extend_from_slice(&w[t..]);
    out.push((inserted, coef));
    out
}

/// Normal form computed by inserting generators from the right.
pub fn normal_form_by_insertion(spec: &QSpec, w: &[Gen]) -> Element {
    let mut acc = Element::one();
    for g in w.iter().rev() {
        let mut next = Element::zero();
        for (v, c) in acc.terms() {
            for (u, d) in left_mul_gen(spec, g, v) {
                next.add_term(u, &(c * &d));
            }
        }
        acc = next;
    }
    acc
}

/// Product in the algebra, returned in normal form.
pub fn multiply(spec: &QSpec, a: &Element, b: &Element) -> Element {
    let mut out = Element::zero();
    for (u, c) in a.terms() {
        for (v, d) in b.terms() {
            let mut w = u.clone();
            w.extend_from_slice(v);
            out.add_scaled(&normal_form_word(spec, &w), &(c * d));
        }
    }
    out
}
