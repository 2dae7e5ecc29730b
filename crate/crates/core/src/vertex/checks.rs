use crate::arith::{binom_scalar, box_points, CoeffWindow, Scalar, Var};
use crate::qalgebra::{chi, grade};
use crate::report::CheckReport;
use crate::vacuum::State;
use crate::vertex::engine::VertexEngine;

/// The common `Z^l` degree of all words in `s`, if there is one.
pub fn state_grade(l: usize, s: &State) -> Option<Vec<i64>> {
    let mut it = s.terms().keys().map(|w| grade(l, w));
    let first = it.next()?;
    it.all(|d| d == first).then_some(first)
}

/// Braiding scalar between two homogeneous states.
pub fn braiding(eng: &VertexEngine, u: &State, v: &State) -> Option<Scalar> {
    let l = eng.spec().l();
    Some(chi(eng.spec(), &state_grade(l, u)?, &state_grade(l, v)?))
}

fn span(eng: &VertexEngine, a: &State, b: &State) -> i64 {
    eng.top_mode(a, b)
}

/// `v_{-1}|0> = v`, `v_n|0> = 0` for `n >= 0` and `v_{-k-1}|0> = D^k v / k!`.
pub fn creation_check(eng: &VertexEngine, v: &State, kmax: i64) -> CheckReport {
    let mut rep = CheckReport::new("creation");
    let vac = State::one();
    rep.record(eng.state_mode(v, -1, &vac) == *v, || format!("{v}: v_(-1)|0> != v"));
    for n in 0..=kmax {
        rep.record(eng.state_mode(v, n, &vac).is_zero(), || format!("{v}: v_({n})|0> != 0"));
    }
    let mut dk = v.clone();
    let mut fact = Scalar::one();
    for k in 0..=kmax {
        if k > 0 {
            dk = eng.dop(&dk);
            fact = &fact * &Scalar::from_int(k);
        }
        let lhs = eng.state_mode(v, -k - 1, &vac);
        let rhs = dk.scale(&fact.inv().unwrap());
        rep.record(lhs == rhs, || format!("{v}: v_(-{})|0> != D^{k} v / {k}!", k + 1));
    }
    rep
}

/// `(D a)_n b = -n a_{n-1} b` and `D(a_n b) - a_n D b = -n a_{n-1} b`.
pub fn derivative_check(eng: &VertexEngine, a: &State, b: &State, modes: std::ops::RangeInclusive<i64>) -> CheckReport {
    let mut rep = CheckReport::new("derivative");
    let da = eng.dop(a);
    let db = eng.dop(b);
    for n in modes {
        let expected = eng.state_mode(a, n - 1, b).scale(&Scalar::from_int(-n));
        rep.record(eng.state_mode(&da, n, b) == expected, || format!("(D {a})_{n} {b}"));
        let comm = eng.dop(&eng.state_mode(a, n, b)).sub(&eng.state_mode(a, n, &db));
        rep.record(comm == expected, || format!("[D, {a}_{n}] {b}"));
    }
    rep
}

/// Smallest `k <= kmax` with `(x1 - x2)^k (Y(u,x1)Y(v,x2) - f Y(v,x2)Y(u,x1)) w = 0`
/// on the window for every test state `w`, together with the braiding `f`.
pub fn slocality_witness(
    eng: &VertexEngine,
    u: &State,
    v: &State,
    tests: &[State],
    radius: i64,
    kmax: i64,
) -> Option<(i64, Scalar)> {
    let f = braiding(eng, u, v)?;
    let lo = -radius;
    let hi = radius + kmax;
    let mut table = Vec::new();
    for w in tests {
        let mut d = std::collections::HashMap::new();
        for a in lo..=hi {
            for b in lo..=hi {
                let uv = eng.state_mode(u, a, &eng.state_mode(v, b, w));
                let vu = eng.state_mode(v, b, &eng.state_mode(u, a, w));
                d.insert((a, b), uv.sub(&vu.scale(&f)));
            }
        }
        table.push(d);
    }
    'k: for k in 0..=kmax {
        for d in &table {
            for a in lo..=radius {
                for b in lo..=radius {
                    let mut acc = State::zero();
                    for t in 0..=k {
                        let c = &binom_scalar(k, t) * &Scalar::sign_pow(t);
                        acc.add_scaled(&d[&(a + k - t, b + t)], &c);
                    }
                    if !acc.is_zero() {
                        continue 'k;
                    }
                }
            }
        }
        return Some((k, f));
    }
    None
}

/// Coefficientwise weak associativity with `l` the mode bound of `u` on `w`:
/// `sum_i binom(r+i, i) u_{l-r-1-i} v_{i-1-s} w = sum_i binom(l, i) (u_{l-i-r-1} v)_{i-s-1} w`.
pub fn weak_assoc_check(eng: &VertexEngine, u: &State, v: &State, w: &State, radius: i64) -> CheckReport {
    let mut rep = CheckReport::new("weak_assoc");
    let l = eng.mode_bound(u, w);
    let vw_top = span(eng, v, w);
    let vars = vec![Var::X0, Var::X2];
    let mut lhs = CoeffWindow::<State>::cube(vars.clone(), radius);
    let mut rhs = CoeffWindow::<State>::cube(vars, radius);
    for p in box_points(&[-radius, -radius], &[radius, radius]) {
        let (r, s) = (p[0], p[1]);
        let mut left = State::zero();
        let mut i = 0;
        while i - 1 - s <= vw_top {
            let c = binom_scalar(r + i, i);
            if !c.is_zero() {
                let inner = eng.state_mode(v, i - 1 - s, w);
                left.add_scaled(&eng.state_mode(u, l - r - 1 - i, &inner), &c);
            }
            i += 1;
        }
        let mut right = State::zero();
        for i in 0..=l {
            let inner = eng.state_mode(u, l - i - r - 1, v);
            right.add_scaled(&eng.state_mode(&inner, i - s - 1, w), &binom_scalar(l, i));
        }
        lhs.set(p.clone(), left, true);
        rhs.set(p, right, true);
    }
    let diff = lhs.compare(&rhs).expect("same variables");
    rep.record_diff(&diff, || format!("u={u} v={v} w={w}"));
    rep
}

/// The S-Jacobi identity with constant braiding, read off at
/// `x0^{-l-1} x1^{-m-1} x2^{-n-1}`:
/// `sum_i binom(m,i) (u_{l+i} v)_{m+n-i} w
///   = sum_i (-1)^i binom(l,i) (u_{l+m-i} v_{n+i} w - f (-1)^l v_{l+n-i} u_{m+i} w)`.
pub fn sjacobi_check(eng: &VertexEngine, u: &State, v: &State, w: &State, radius: i64) -> CheckReport {
    let Some(f) = braiding(eng, u, v) else {
        let mut rep = CheckReport::new("sjacobi");
        rep.note(format!("{u}, {v}: not homogeneous, no constant braiding"));
        rep.record_uncertified(|| format!("u={u} v={v}"));
        return rep;
    };
    sjacobi_check_with(eng, u, v, w, radius, &f)
}

/// [`sjacobi_check`] with the braiding scalar supplied by the caller.
pub fn sjacobi_check_with(eng: &VertexEngine, u: &State, v: &State, w: &State, radius: i64, f: &Scalar) -> CheckReport {
    let mut rep = CheckReport::new("sjacobi");
    let uv_top = span(eng, u, v);
    let vw_top = span(eng, v, w);
    let uw_top = span(eng, u, w);
    let vars = vec![Var::X0, Var::X1, Var::X2];
    let mut lhs = CoeffWindow::<State>::cube(vars.clone(), radius);
    let mut rhs = CoeffWindow::<State>::cube(vars, radius);
    for p in box_points(&[-radius; 3], &[radius; 3]) {
        let (l, m, n) = (p[0], p[1], p[2]);
        let mut iter = State::zero();
        let mut i = 0;
        while l + i <= uv_top {
            let c = binom_scalar(m, i);
            if !c.is_zero() {
                let inner = eng.state_mode(u, l + i, v);
                iter.add_scaled(&eng.state_mode(&inner, m + n - i, w), &c);
            }
            i += 1;
        }
        let mut prod = State::zero();
        let mut i = 0;
        while n + i <= vw_top {
            let c = &binom_scalar(l, i) * &Scalar::sign_pow(i);
            if !c.is_zero() {
                let inner = eng.state_mode(v, n + i, w);
                prod.add_scaled(&eng.state_mode(u, l + m - i, &inner), &c);
            }
            i += 1;
        }
        let mut i = 0;
        while m + i <= uw_top {
            let c = &(&(&binom_scalar(l, i) * &Scalar::sign_pow(i + l)) * f) * &Scalar::from_int(-1);
            if !c.is_zero() {
                let inner = eng.state_mode(u, m + i, w);
                prod.add_scaled(&eng.state_mode(v, l + n - i, &inner), &c);
            }
            i += 1;
        }
        rhs.set(p.clone(), iter, true);
        lhs.set(p, prod, true);
    }
    let diff = lhs.compare(&rhs).expect("same variables");
    rep.record_diff(&diff, || format!("u={u} v={v} w={w}"));
    rep
}

/// Both sides of `u_p v_q w = sum_{i<=m} sum_{j<=l} binom(p-l, i) binom(l, j) (u_{p-l-i+j} v)_{q+l+i-j} w`
/// with `l` the mode bound of `u` on `w` and `m = max(0, L(v, w) - q - 1)`.
pub fn mode_product_sides(eng: &VertexEngine, u: &State, v: &State, w: &State, p: i64, q: i64) -> (State, State) {
    let direct = eng.state_mode(u, p, &eng.state_mode(v, q, w));
    let l = eng.mode_bound(u, w);
    let m = (eng.mode_bound(v, w) - q - 1).max(0);
    let mut sum = State::zero();
    for i in 0..=m {
        for j in 0..=l {
            let c = &binom_scalar(p - l, i) * &binom_scalar(l, j);
            if c.is_zero() {
                continue;
            }
            let inner = eng.state_mode(u, p - l - i + j, v);
            sum.add_scaled(&eng.state_mode(&inner, q + l + i - j, w), &c);
        }
    }
    (direct, sum)
}

pub fn mode_product_check(eng: &VertexEngine, u: &State, v: &State, w: &State, p: i64, q: i64) -> bool {
    let (a, b) = mode_product_sides(eng, u, v, w, p, q);
    a == b
}
