use std::collections::BTreeMap;

use crate::arith::{expand_two_var, HalfInt, Region, Scalar, TruncSeries, Var};
use crate::deformation::dressed::{with_sufficient_order, DressedGen, DressedModel, SeriesState};
use crate::deformation::spec::{qx_entry, QSeriesSpec};
use crate::error::Result;
use crate::qalgebra::{format_word, Kind, Word};
use crate::report::CheckReport;
use crate::vacuum::{basis_up_to, State};
use crate::vertex::VertexEngine;

fn twice_weight(w: &[crate::qalgebra::Gen]) -> i64 {
    crate::qalgebra::word_weight(w).twice()
}

/// Largest `m` with `g_m` possibly nonzero on weight `2w/2`: `m <= w - 1/2`.
fn top(twice_w: i64) -> i64 {
    (twice_w - 1).div_euclid(2)
}

/// Verifies the three exchange families of the dressed fields of colors `i`, `j`
/// on every basis state of weight at most `max_weight`, for modes in `[-radius, radius]`.
pub fn zf_relation_check(
    spec: &QSeriesSpec,
    i: u16,
    j: u16,
    radius: i64,
    max_weight: HalfInt,
) -> Result<CheckReport> {
    with_sufficient_order(spec, spec.order(), |model| zf_with_model(model, i, j, radius, max_weight))
}

fn zf_with_model(model: &DressedModel, i: u16, j: u16, radius: i64, max_weight: HalfInt) -> Result<CheckReport> {
    let spec = model.spec();
    let o = spec.order();
    let mut rep = CheckReport::new(format!("zf relations ({i},{j})"));
    let basis = basis_up_to(spec.q(), max_weight);
    let span = 2 * radius + max_weight.twice() + 4;
    // a a and b b: q_ij(x2 - x1), cells indexed (beta, alpha).
    let same = expand_two_var(&qx_entry(spec, i, j, o), Var::X2, Var::X1, Region::ExpandInSecond, [0, 0], [span, span])?;
    // a b: q_ji(x1 - x2), cells indexed (alpha, beta).
    let mixed = expand_two_var(&qx_entry(spec, j, i, o), Var::X1, Var::X2, Region::ExpandInSecond, [0, 0], [span, span])?;
    let families = [(Kind::X, Kind::X), (Kind::Y, Kind::Y), (Kind::X, Kind::Y)];
    for w in &basis {
        let s = State::from_word(w.clone());
        let tw = twice_weight(w);
        for &(k1, k2) in &families {
            for m in -radius..=radius {
                for n in -radius..=radius {
                    let g = |c, mode| DressedGen { kind: k1, color: c, mode };
                    let h = |c, mode| DressedGen { kind: k2, color: c, mode };
                    let lhs = model.act(g(i, m), &model.act(h(j, n), &s)?)?;
                    let mut rhs = State::zero();
                    let mut certified = true;
                    for alpha in 0..=(top(tw) - m).max(-1) {
                        let t = model.act(g(i, m + alpha), &s)?;
                        if t.is_zero() {
                            continue;
                        }
                        let tt = tw - 2 * (m + alpha) - 1;
                        for beta in 0..=(top(tt) - n).max(-1) {
                            let cell = if k1 == k2 { same.get(&[beta, alpha]) } else { mixed.get(&[alpha, beta]) };
                            if !cell.valid {
                                certified = false;
                                continue;
                            }
                            if cell.value.is_zero() {
                                continue;
                            }
                            rhs.add_scaled(&model.act(h(j, n + beta), &t)?, &cell.value);
                        }
                    }
                    if k1 != k2 && i == j && m + n + 1 == 0 {
                        rhs.add_assign(&s);
                    }
                    let label = || format!("{k1:?}{k2:?} m={m} n={n} on {}|0>", format_word(w));
                    if !certified {
                        rep.record_uncertified(label);
                    } else {
                        rep.record(lhs == rhs, || format!("{}: {} vs {}", label(), lhs, rhs));
                    }
                }
            }
        }
    }
    Ok(rep)
}

/// Coefficient `[x^d]` of a series state as a state; `None` if any coefficient is unknown.
pub fn series_coeff(s: &SeriesState, d: i64) -> Option<State> {
    let mut out = State::zero();
    for (w, t) in s {
        out.add_term(w.clone(), &t.coeff(d)?);
    }
    Some(out)
}

/// Checks `Phi(x1) Y(v, x2) w = Y(Phi(x1 - x2) v, x2) Phi(x1) w` coefficientwise
/// for `Phi = Phi_i` and `Phi_i^{-1}`, all basis `w` of weight at most `max_weight`,
/// modes `n` in `[-radius, radius]` and `x1`-degrees up to `dmax`.
pub fn phi_law_check(
    spec: &QSeriesSpec,
    i: u16,
    vs: &[State],
    max_weight: HalfInt,
    radius: i64,
    dmax: i64,
) -> CheckReport {
    let top_v = vs.iter().filter_map(State::max_weight).max().unwrap_or(HalfInt::ZERO);
    let model = DressedModel::new(spec.clone(), working_order(spec, top_v + max_weight, radius + dmax));
    let eng = VertexEngine::new(spec.q().clone());
    let mut rep = CheckReport::new(format!("pseudo-endomorphism law (color {i})"));
    let basis = basis_up_to(spec.q(), max_weight);
    for inverse in [false, true] {
        for v in vs {
            let phi_v = model.phi(i, inverse, v);
            let windows: Vec<(Word, crate::arith::CoeffWindow<Scalar>, i64)> = phi_v
                .iter()
                .map(|(t, f)| {
                    let win = expand_two_var(f, Var::X1, Var::X2, Region::ExpandInSecond, [0, 0], [dmax, 64])
                        .expect("two variables");
                    (t.clone(), win, twice_weight(t))
                })
                .collect();
            for w in &basis {
                let ws = State::from_word(w.clone());
                let phi_w = model.phi(i, inverse, &ws);
                let tw = twice_weight(w);
                for n in -radius..=radius {
                    let phi_vw = model.phi(i, inverse, &eng.state_mode(v, n, &ws));
                    for d in 0..=dmax {
                        let label = || format!("inverse={inverse} v={v} n={n} d={d} w={}|0>", format_word(w));
                        let Some(lhs) = series_coeff(&phi_vw, d) else {
                            rep.record_uncertified(label);
                            continue;
                        };
                        let mut rhs = State::zero();
                        let mut certified = true;
                        for (t, win, tt) in &windows {
                            let ts = State::from_word(t.clone());
                            let bmax = (tt + tw).div_euclid(2) - 1 - n;
                            for alpha in 0..=d {
                                for beta in 0..=bmax.max(-1) {
                                    let cell = win.get(&[alpha, beta]);
                                    if !cell.valid {
                                        certified = false;
                                        continue;
                                    }
                                    if cell.value.is_zero() {
                                        continue;
                                    }
                                    let Some(inner) = series_coeff(&phi_w, d - alpha) else {
                                        certified = false;
                                        continue;
                                    };
                                    rhs.add_scaled(&eng.state_mode(&ts, n + beta, &inner), &cell.value);
                                }
                            }
                        }
                        if certified {
                            rep.record(lhs == rhs, || format!("{}: {} vs {}", label(), lhs, rhs));
                        } else {
                            rep.record_uncertified(label);
                        }
                    }
                }
            }
        }
    }
    rep
}

/// Order at which every coefficient of `Phi` up to degree `d` is exact on states of
/// weight at most `w + d`: the order lost by `Phi` is bounded by the weight.
fn working_order(spec: &QSeriesSpec, w: HalfInt, d: i64) -> i64 {
    spec.order().max(w.ceil() + 2 * d.max(0) + 2)
}

type TwoVar = BTreeMap<(Word, i64, i64), Option<Scalar>>;

/// Coefficients of `Phi_a(x1) Phi_b(x2) s` in degrees up to `dmax` (`first` acts last).
fn compose(model: &DressedModel, first: u16, second: u16, s: &State, dmax: i64, swap: bool) -> TwoVar {
    let mut out = TwoVar::new();
    for (u, s2) in model.phi(second, false, s) {
        for e2 in 0..=dmax {
            let c2 = s2.coeff(e2);
            for (v, s1) in model.phi_word(first, false, &u).iter() {
                for e1 in 0..=dmax {
                    let c = match (&c2, s1.coeff(e1)) {
                        (Some(a), Some(b)) => Some(a * &b),
                        _ => None,
                    };
                    let key = if swap { (v.clone(), e2, e1) } else { (v.clone(), e1, e2) };
                    let slot = out.entry(key).or_insert(Some(Scalar::zero()));
                    *slot = match (slot.take(), c) {
                        (Some(a), Some(b)) => Some(&a + &b),
                        _ => None,
                    };
                }
            }
        }
    }
    out
}

/// `Phi_i(x1) Phi_j(x2) = Phi_j(x2) Phi_i(x1)` on basis states, degrees up to `dmax`.
pub fn phi_commute_check(spec: &QSeriesSpec, i: u16, j: u16, max_weight: HalfInt, dmax: i64) -> CheckReport {
    let model = DressedModel::new(spec.clone(), working_order(spec, max_weight, dmax));
    let mut rep = CheckReport::new(format!("pseudo-automorphisms commute ({i},{j})"));
    for w in basis_up_to(spec.q(), max_weight) {
        let s = State::from_word(w.clone());
        let lhs = compose(&model, i, j, &s, dmax, false);
        let rhs = compose(&model, j, i, &s, dmax, true);
        let keys: std::collections::BTreeSet<_> = lhs.keys().chain(rhs.keys()).cloned().collect();
        let zero = Some(Scalar::zero());
        for k in keys {
            let a = lhs.get(&k).unwrap_or(&zero);
            let b = rhs.get(&k).unwrap_or(&zero);
            let label = || format!("{}|0> at {:?} deg ({}, {})", format_word(&w), format_word(&k.0), k.1, k.2);
            match (a, b) {
                (Some(a), Some(b)) => rep.record(a == b, || format!("{}: {a} vs {b}", label())),
                _ => rep.record_uncertified(label),
            }
        }
    }
    rep
}

/// `Phi_i(x) Phi_i(x)^{-1} = Phi_i(x)^{-1} Phi_i(x) = 1` on basis states, within order.
pub fn phi_inverse_check(spec: &QSeriesSpec, i: u16, max_weight: HalfInt) -> CheckReport {
    let model = DressedModel::new(spec.clone(), working_order(spec, max_weight, 0));
    let mut rep = CheckReport::new(format!("pseudo-automorphism inverse (color {i})"));
    for w in basis_up_to(spec.q(), max_weight) {
        let s = State::from_word(w.clone());
        for first_inverse in [false, true] {
            let mut total = SeriesState::new();
            for (u, g) in model.phi(i, !first_inverse, &s) {
                for (v, f) in model.phi_word(i, first_inverse, &u).iter() {
                    let t = f.mul(&g).expect("same variable");
                    let sum = match total.remove(v) {
                        Some(prev) => prev.add(&t).expect("same variable"),
                        None => t,
                    };
                    total.insert(v.clone(), sum);
                }
            }
            for (v, t) in &total {
                let expect = if *v == w { TruncSeries::one(Var::X, t.order()) } else { TruncSeries::zero(Var::X, t.order()) };
                rep.record(t.agrees_with(&expect), || format!("{}|0> -> {}: {t}", format_word(&w), format_word(v)));
            }
        }
    }
    rep
}
