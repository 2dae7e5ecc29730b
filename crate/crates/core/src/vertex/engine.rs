use std::collections::HashMap;
use std::sync::RwLock;

use crate::arith::{binom_scalar, HalfInt, Scalar};
use crate::qalgebra::{chi, grade, word_weight, Gen, Kind, QSpec, Word};
use crate::vacuum::{act, State};

type ModeKey = (Word, i64, Word);

/// Computes `a_n b` for arbitrary vacuum-module states, memoized on basis words.
pub struct VertexEngine {
    spec: QSpec,
    cache: RwLock<HashMap<ModeKey, State>>,
    no_cache: RwLock<HashMap<ModeKey, State>>,
}

/// `1 + max{p : g_p w != 0}` for a generator field and a basis word, clamped at 0.
fn gen_mode_bound(g: &Gen, w: &[Gen]) -> i64 {
    let partner = match g.kind {
        Kind::X => Kind::Y,
        Kind::Y => Kind::X,
    };
    w.iter()
        .filter(|h| h.kind == partner && h.color == g.color)
        .map(|h| -(h.mode as i64))
        .max()
        .unwrap_or(0)
}

fn weight_of(w: &[Gen]) -> HalfInt {
    word_weight(w)
}

fn max_weight(s: &State) -> HalfInt {
    s.max_weight().unwrap_or(HalfInt::ZERO)
}

impl VertexEngine {
    pub fn new(spec: QSpec) -> Self {
        VertexEngine { spec, cache: RwLock::new(HashMap::new()), no_cache: RwLock::new(HashMap::new()) }
    }

    pub fn spec(&self) -> &QSpec {
        &self.spec
    }

    pub fn cache_len(&self) -> usize {
        self.cache.read().unwrap().len()
    }

    fn gen_act(&self, g: &Gen, mode: i64, b: &State) -> State {
        let h = g.with_mode(mode as i32);
        let mut out = State::zero();
        for (w, c) in b.terms() {
            for (v, d) in act(&self.spec, &h, w) {
                out.add_term(v, &(c * &d));
            }
        }
        out
    }

    /// Bilinear extension of [`Self::mode_word`].
    pub fn state_mode(&self, a: &State, n: i64, b: &State) -> State {
        let mut out = State::zero();
        for (wa, ca) in a.terms() {
            for (wb, cb) in b.terms() {
                let r = self.mode_word(wa, n, wb);
                out.add_scaled(&r, &(ca * cb));
            }
        }
        out
    }

    /// `a_n b` for normal words `a` and `b`.
    ///
    /// Writing `a = g_m a'` with `g` the leftmost generator, the mode is
    /// expanded through the iterate formula
    /// `(u_m v)_n w = sum_i sum_j binom(-l, i) binom(m+i, j) (-1)^j u_{m+l+i-j} v_{n-l-i+j} w`
    /// with `l` the mode bound of `u` on `w` and `i` cut off where `u_{m+i} v = 0`.
    pub fn mode_word(&self, a: &[Gen], n: i64, b: &[Gen]) -> State {
        let top = weight_of(a) + weight_of(b) - HalfInt::from_int(n + 1);
        if top < HalfInt::ZERO {
            return State::zero();
        }
        if a.is_empty() {
            return if n == -1 { State::from_word(b.to_vec()) } else { State::zero() };
        }
        let g = a[0];
        let bstate = State::from_word(b.to_vec());
        if a.len() == 1 && g.mode == -1 {
            return self.gen_act(&g, n, &bstate);
        }
        let key = (a.to_vec(), n, b.to_vec());
        if let Some(hit) = self.cache.read().unwrap().get(&key) {
            return hit.clone();
        }
        let rest = &a[1..];
        let m = g.mode as i64;
        let l = gen_mode_bound(&g, b);
        let k_end = gen_mode_bound(&g, rest) - m;
        let q_max = (weight_of(rest) + weight_of(b) - HalfInt::from_int(1)).floor();
        let mut out = State::zero();
        for i in 0..k_end.max(0) {
            let ci = binom_scalar(-l, i);
            if ci.is_zero() {
                continue;
            }
            let mut j = 0;
            loop {
                let q = n - l - i + j;
                if q > q_max {
                    break;
                }
                let cj = binom_scalar(m + i, j);
                if !cj.is_zero() {
                    let inner = self.mode_word(rest, q, b);
                    if !inner.is_zero() {
                        let outer = self.gen_act(&g, m + l + i - j, &inner);
                        let c = &(&ci * &cj) * &Scalar::sign_pow(j);
                        out.add_scaled(&outer, &c);
                    }
                }
                j += 1;
            }
        }
        self.cache.write().unwrap().insert(key, out.clone());
        out
    }

    /// Independent evaluation of `a_n b` through normal-ordered products:
    /// `(u_m v)_n w = sum_i (-1)^i binom(m, i) (u_{m-i} v_{n+i} w - f (-1)^m v_{m+n-i} u_i w)`
    /// where `f` is the braiding scalar of the pair `(u, v)`.
    pub fn mode_word_normal_ordered(&self, a: &[Gen], n: i64, b: &[Gen]) -> State {
        let top = weight_of(a) + weight_of(b) - HalfInt::from_int(n + 1);
        if top < HalfInt::ZERO {
            return State::zero();
        }
        if a.is_empty() {
            return if n == -1 { State::from_word(b.to_vec()) } else { State::zero() };
        }
        let g = a[0];
        let bstate = State::from_word(b.to_vec());
        if a.len() == 1 && g.mode == -1 {
            return self.gen_act(&g, n, &bstate);
        }
        let key = (a.to_vec(), n, b.to_vec());
        if let Some(hit) = self.no_cache.read().unwrap().get(&key) {
            return hit.clone();
        }
        let rest = &a[1..];
        let m = g.mode as i64;
        let lcol = self.spec.l();
        let f = chi(&self.spec, &grade(lcol, &[g]), &grade(lcol, rest));
        let sign_m = Scalar::sign_pow(m);
        let q_max = (weight_of(rest) + weight_of(b) - HalfInt::from_int(1)).floor();
        let mut out = State::zero();
        // u_{m-i} v_{n+i} w
        let mut i = 0;
        while n + i <= q_max {
            let c = &binom_scalar(m, i) * &Scalar::sign_pow(i);
            if !c.is_zero() {
                let inner = self.mode_word_normal_ordered(rest, n + i, b);
                out.add_scaled(&self.gen_act(&g, m - i, &inner), &c);
            }
            i += 1;
        }
        // - f (-1)^m v_{m+n-i} u_i w
        let rest_state = State::from_word(rest.to_vec());
        for i in 0..gen_mode_bound(&g, b) {
            let c = &(&(&binom_scalar(m, i) * &Scalar::sign_pow(i)) * &f) * &sign_m;
            if c.is_zero() {
                continue;
            }
            let inner = self.gen_act(&g, i, &bstate);
            let outer = self.state_mode_with(&rest_state, m + n - i, &inner, true);
            out.add_scaled(&outer, &(-c));
        }
        self.no_cache.write().unwrap().insert(key, out.clone());
        out
    }

    fn state_mode_with(&self, a: &State, n: i64, b: &State, ordered: bool) -> State {
        let mut out = State::zero();
        for (wa, ca) in a.terms() {
            for (wb, cb) in b.terms() {
                let r = if ordered { self.mode_word_normal_ordered(wa, n, wb) } else { self.mode_word(wa, n, wb) };
                out.add_scaled(&r, &(ca * cb));
            }
        }
        out
    }

    pub fn state_mode_normal_ordered(&self, a: &State, n: i64, b: &State) -> State {
        self.state_mode_with(a, n, b, true)
    }

    /// `1 + max{p : a_p b != 0}`, clamped at 0.
    pub fn mode_bound(&self, a: &State, b: &State) -> i64 {
        let p_max = (max_weight(a) + max_weight(b) - HalfInt::from_int(1)).floor();
        (0..=p_max).rev().find(|&p| !self.state_mode(a, p, b).is_zero()).map_or(0, |p| p + 1)
    }

    /// The translation operator `D v = v_{-2} |0>`.
    pub fn dop(&self, v: &State) -> State {
        self.state_mode(v, -2, &State::one())
    }

    /// Upper bound for the modes `p` with `a_p b` possibly nonzero.
    pub fn top_mode(&self, a: &State, b: &State) -> i64 {
        (max_weight(a) + max_weight(b) - HalfInt::from_int(1)).floor()
    }
}
