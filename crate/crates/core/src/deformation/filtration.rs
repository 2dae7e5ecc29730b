use std::collections::BTreeMap;
use std::ops::RangeInclusive;

use serde::Serialize;

use crate::arith::{Echelon, HalfInt, SparseVec};
use crate::deformation::dressed::{with_sufficient_order, DressedGen, DressedModel};
use crate::deformation::spec::QSeriesSpec;
use crate::error::Result;
use crate::qalgebra::{format_word, word_weight, Gen, Kind, QSpec, Word};
use crate::report::CheckReport;
use crate::vacuum::{basis_up_to, State};
use crate::vertex::VertexEngine;

/// A dressed vector with the doubled weight of its leading term and its
/// filtration index `-(m_1 + ... + m_r)`.
#[derive(Clone, Debug)]
struct Tagged {
    twice_weight: i64,
    degree: i64,
    state: State,
}

/// Spanning vectors of `F_n` in one weight range.
#[derive(Clone, Debug)]
pub struct FiltrationLevel {
    pub n: i64,
    pub vectors: Vec<State>,
    /// `(w, dim)`: dimension of the part spanned by vectors of nominal weight at most `w`.
    pub dims: Vec<(HalfInt, usize)>,
}

/// One entry of the comparison table.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GrRow {
    pub weight: String,
    pub n: i64,
    pub expected: usize,
    pub found: usize,
}

#[derive(Clone, Debug)]
pub struct GrOutcome {
    pub report: CheckReport,
    pub rows: Vec<GrRow>,
}

fn sparse(s: &State) -> SparseVec<Word> {
    s.terms().clone()
}

fn creation_alphabet(l: usize, twice_max: i64) -> Vec<DressedGen> {
    let mut out = Vec::new();
    for c in 1..=l as u16 {
        for n in 1..=(twice_max + 1) / 2 {
            out.push(DressedGen::a(c, -n));
            out.push(DressedGen::b(c, -n));
        }
    }
    out
}

/// Creation-only dressed words of weight at most `max_weight`, plus words with a
/// single leftmost annihilation mode `0` or `1` on short creation words.
fn spanning_vectors(model: &DressedModel, max_weight: HalfInt) -> Result<Vec<Tagged>> {
    const SHORT: usize = 3;
    let l = model.spec().l();
    let tmax = max_weight.twice();
    let reach = tmax + 3;
    let alphabet = creation_alphabet(l, reach);
    let mut out = Vec::new();
    let mut stack = vec![(0usize, 0i64, 0i64, State::one())];
    while let Some((len, tw, deg, s)) = stack.pop() {
        if s.is_zero() {
            continue;
        }
        if tw <= tmax {
            out.push(Tagged { twice_weight: tw, degree: deg, state: s.clone() });
        }
        if len <= SHORT {
            for k in 0..=1 {
                let tk = tw - 2 * k - 1;
                if tk < 0 || tk > tmax {
                    continue;
                }
                for c in 1..=l as u16 {
                    for kind in [Kind::X, Kind::Y] {
                        let v = model.act(DressedGen { kind, color: c, mode: k }, &s)?;
                        out.push(Tagged { twice_weight: tk, degree: deg - k, state: v });
                    }
                }
            }
        }
        for g in &alphabet {
            let t = tw - 2 * g.mode - 1;
            if t <= tmax || (len < SHORT && t <= reach) {
                stack.push((len + 1, t, deg - g.mode, model.act(*g, &s)?));
            }
        }
    }
    Ok(out)
}

fn expected_counts(q: &QSpec, max_weight: HalfInt) -> BTreeMap<(i64, i64), usize> {
    let mut out = BTreeMap::new();
    for w in basis_up_to(q, max_weight) {
        let deg: i64 = w.iter().map(|g| -(g.mode as i64)).sum();
        *out.entry((word_weight(&w).twice(), deg)).or_insert(0) += 1;
    }
    out
}

/// Spanning vectors of `F_n` up to nominal weight `max_weight`.
///
/// Dressed modes only lower weight below their leading term, so `dims[k]` is the
/// dimension of `F_n` intersected with the sum of weight spaces up to the `k`-th weight.
pub fn filtration_f(spec: &QSeriesSpec, n: i64, max_weight: HalfInt) -> Result<FiltrationLevel> {
    let tagged = with_sufficient_order(spec, spec.order(), |m| spanning_vectors(m, max_weight))?;
    let mut vectors: Vec<&Tagged> = tagged.iter().filter(|t| t.degree <= n && !t.state.is_zero()).collect();
    vectors.sort_by_key(|t| t.twice_weight);
    let mut ech = Echelon::new();
    let mut dims = Vec::new();
    let mut idx = 0;
    for tw in 0..=max_weight.twice() {
        while idx < vectors.len() && vectors[idx].twice_weight <= tw {
            ech.insert(&sparse(&vectors[idx].state));
            idx += 1;
        }
        dims.push((HalfInt::from_twice(tw), ech.rank()));
    }
    Ok(FiltrationLevel { n, vectors: vectors.into_iter().map(|t| t.state.clone()).collect(), dims })
}

/// Second difference of a table cumulative in both indices.
fn graded(table: &BTreeMap<(i64, i64), usize>, tw: i64, n: i64) -> usize {
    let at = |a: i64, b: i64| table.get(&(a, b)).copied().unwrap_or(0) as i64;
    (at(tw, n) - at(tw - 1, n) - at(tw, n - 1) + at(tw - 1, n - 1)) as usize
}

/// Compares the dressed model's bifiltration by mode-sum degree `n` and weight with
/// the constant algebra's normal words, for `n <= max_degree` and weights up to `max_weight`.
pub fn gr_compare(spec: &QSeriesSpec, max_weight: HalfInt, max_degree: i64) -> Result<GrOutcome> {
    let tagged = with_sufficient_order(spec, spec.order(), |m| spanning_vectors(m, max_weight))?;
    let counts = expected_counts(spec.q(), max_weight);
    let mut rep = CheckReport::new("associated graded dimensions");

    let mut low_span = Echelon::new();
    for t in tagged.iter().filter(|t| t.degree <= 0) {
        low_span.insert(&sparse(&t.state));
    }
    rep.record(tagged.iter().filter(|t| t.degree < 0).all(|t| t.state.is_zero()), || "F_{-1} != 0".into());
    rep.record(low_span.rank() == 1 && low_span.contains(&sparse(&State::one())), || {
        format!("F_0 has rank {}", low_span.rank())
    });

    let mut found = BTreeMap::new();
    let mut expected = BTreeMap::new();
    for tw in 0..=max_weight.twice() {
        let mut vecs: Vec<&Tagged> = tagged.iter().filter(|t| t.twice_weight <= tw).collect();
        vecs.sort_by_key(|t| t.degree);
        let mut ech = Echelon::new();
        let mut idx = 0;
        for n in 0..=max_degree {
            while idx < vecs.len() && vecs[idx].degree <= n {
                ech.insert(&sparse(&vecs[idx].state));
                idx += 1;
            }
            found.insert((tw, n), ech.rank());
            let e: usize = counts.iter().filter(|((a, b), _)| *a <= tw && *b <= n).map(|(_, c)| c).sum();
            expected.insert((tw, n), e);
        }
        // every degree together spans the whole weight range
        while idx < vecs.len() {
            ech.insert(&sparse(&vecs[idx].state));
            idx += 1;
        }
        let total: usize = counts.iter().filter(|((a, _), _)| *a <= tw).map(|(_, c)| c).sum();
        rep.record(ech.rank() == total, || {
            format!("weight <= {}: rank {} vs {total}", HalfInt::from_twice(tw), ech.rank())
        });
    }
    let mut rows = Vec::new();
    for tw in 0..=max_weight.twice() {
        for n in 0..=max_degree {
            let weight = HalfInt::from_twice(tw).to_string();
            let (f, e) = (found[&(tw, n)], expected[&(tw, n)]);
            rep.record(f == e, || format!("weight <= {weight}, n={n}: dim {f}, expected {e}"));
            let (gf, ge) = (graded(&found, tw, n), graded(&expected, tw, n));
            rep.record(gf == ge, || format!("weight {weight}, n={n}: graded dim {gf}, expected {ge}"));
            rows.push(GrRow { weight, n, expected: ge, found: gf });
        }
    }
    Ok(GrOutcome { report: rep, rows })
}

/// Checks `a_k b` lies in the span of normal words of length at most `len a + len b`
/// for normal words `a`, `b` of length at most `n_max` and weight at most `max_weight`.
pub fn filtration_e_check(
    q: &QSpec,
    n_max: usize,
    modes: RangeInclusive<i64>,
    max_weight: HalfInt,
) -> CheckReport {
    let eng = VertexEngine::new(q.clone());
    let mut rep = CheckReport::new("length filtration");
    let words: Vec<Word> = basis_up_to(q, max_weight).into_iter().filter(|w| w.len() <= n_max).collect();
    let reach = HalfInt::from_twice(2 * max_weight.twice() + 2 * (-*modes.start()).max(0));
    let all = basis_up_to(q, reach);
    let mut spans: BTreeMap<usize, Echelon<Word>> = BTreeMap::new();
    for a in &words {
        for b in &words {
            let bound = a.len() + b.len();
            let span = spans.entry(bound).or_insert_with(|| {
                let mut e = Echelon::new();
                for w in all.iter().filter(|w| w.len() <= bound) {
                    e.insert(&SparseVec::from([(w.clone(), crate::arith::Scalar::one())]));
                }
                e
            });
            let (sa, sb) = (State::from_word(a.clone()), State::from_word(b.clone()));
            for k in modes.clone() {
                let r = eng.state_mode(&sa, k, &sb);
                rep.record(span.contains(&sparse(&r)), || {
                    format!("({}|0>)_{k} {}|0> = {r} leaves E_{bound}", format_word(a), format_word(b))
                });
            }
        }
    }
    rep
}

/// Mode lists `n_1 >= n_2 >= ... >= 1` (strict when `strict`) with `sum (n - 1/2) = w`.
fn partitions(twice_w: i64, max_part: i64, strict: bool) -> Vec<Vec<i64>> {
    if twice_w == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for n in (1..=max_part).rev() {
        let t = 2 * n - 1;
        if t > twice_w {
            continue;
        }
        let next = if strict { n - 1 } else { n };
        for mut rest in partitions(twice_w - t, next, strict) {
            rest.insert(0, n);
            out.push(rest);
        }
    }
    out
}

fn shapes(q: &QSpec, colors: &[u16], twice_w: i64) -> Vec<Vec<DressedGen>> {
    let Some((&c, rest)) = colors.split_first() else {
        return if twice_w == 0 { vec![Vec::new()] } else { Vec::new() };
    };
    let mut out = Vec::new();
    for t in 0..=twice_w {
        for head in partitions(t, (t + 1) / 2, q.is_fermionic(c)) {
            for tail in shapes(q, rest, twice_w - t) {
                let mut w: Vec<DressedGen> = head.iter().map(|&n| DressedGen::a(c, -n)).collect();
                w.extend(tail);
                out.push(w);
            }
        }
    }
    out
}

/// Dressed `a`-words in normal shape are linearly independent, with one per
/// `X`-only normal word of the constant algebra in each weight.
pub fn half_basis_check(spec: &QSeriesSpec, max_weight: HalfInt) -> Result<CheckReport> {
    let q = spec.q().clone();
    let colors = q.colors().collect::<Vec<u16>>();
    let x_only: Vec<Word> =
        basis_up_to(&q, max_weight).into_iter().filter(|w| w.iter().all(|g: &Gen| g.kind == Kind::X)).collect();
    with_sufficient_order(spec, spec.order(), |model| {
        let mut rep = CheckReport::new("half-subalgebra normal basis");
        let mut ech = Echelon::new();
        let mut count = 0;
        for tw in 0..=max_weight.twice() {
            let words = shapes(&q, &colors, tw);
            let expected = x_only.iter().filter(|w| word_weight(w).twice() == tw).count();
            for w in &words {
                ech.insert(&sparse(&model.apply(w, &State::one())?));
            }
            count += words.len();
            let weight = HalfInt::from_twice(tw);
            rep.record(words.len() == expected, || format!("weight {weight}: {} shapes vs {expected}", words.len()));
            rep.record(ech.rank() == count, || format!("weight <= {weight}: rank {} of {count}", ech.rank()));
        }
        Ok(rep)
    })
}
