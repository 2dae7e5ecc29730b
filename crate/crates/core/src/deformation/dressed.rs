use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, RwLock};

use crate::arith::{Scalar, TruncSeries, Var};
use crate::deformation::spec::QSeriesSpec;
use crate::error::{QvaError, Result};
use crate::qalgebra::{word_weight, Gen, Kind, Word};
use crate::vacuum::{act, State};

/// Coefficientwise series attached to basis words, all in one variable.
pub type SeriesState = BTreeMap<Word, TruncSeries>;

/// A dressed generator `a^{(i)}_m` (kind `X`) or `b^{(i)}_m` (kind `Y`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DressedGen {
    pub kind: Kind,
    pub color: u16,
    pub mode: i64,
}

impl DressedGen {
    pub fn a(color: u16, mode: i64) -> Self {
        DressedGen { kind: Kind::X, color, mode }
    }

    pub fn b(color: u16, mode: i64) -> Self {
        DressedGen { kind: Kind::Y, color, mode }
    }
}

type PhiKey = (u16, bool, Word);
type ModeKey = (DressedGen, Word);

/// The fields `a^{(i)}(x) = Y(u^{(i)},x) Phi_i(x)` and
/// `b^{(i)}(x) = Y(v^{(i)},x) Phi_i(x)^{-1}` acting on the constant vacuum module.
///
/// All series are carried to a fixed working order; a coefficient beyond it
/// that could contribute yields [`QvaError::InsufficientOrder`].
pub struct DressedModel {
    spec: QSeriesSpec,
    order: i64,
    /// `[p_ij, p_ij^{-1}]`.
    factors: Vec<Vec<[TruncSeries; 2]>>,
    phi_memo: RwLock<HashMap<PhiKey, Arc<SeriesState>>>,
    mode_memo: RwLock<HashMap<ModeKey, std::result::Result<Arc<State>, i64>>>,
}

fn add_into(out: &mut SeriesState, w: Word, s: TruncSeries) {
    match out.get_mut(&w) {
        Some(t) => *t = t.add(&s).expect("same variable"),
        None => {
            out.insert(w, s);
        }
    }
}

impl DressedModel {
    pub fn new(spec: QSeriesSpec, order: i64) -> Self {
        let l = spec.l() as u16;
        let factors = (1..=l)
            .map(|i| {
                (1..=l)
                    .map(|j| {
                        let p = spec.p_to(i, j, order);
                        let inv = p.inv().expect("p(0) = 1");
                        [p, inv]
                    })
                    .collect()
            })
            .collect();
        DressedModel { spec, order, factors, phi_memo: RwLock::default(), mode_memo: RwLock::default() }
    }

    pub fn spec(&self) -> &QSeriesSpec {
        &self.spec
    }

    pub fn order(&self) -> i64 {
        self.order
    }

    fn factor(&self, i: u16, j: u16, inverse: bool) -> &TruncSeries {
        &self.factors[i as usize - 1][j as usize - 1][inverse as usize]
    }

    /// `Phi_i(x) w` (or `Phi_i(x)^{-1} w`) for a basis word `w`.
    pub fn phi_word(&self, i: u16, inverse: bool, w: &[Gen]) -> Arc<SeriesState> {
        let key = (i, inverse, w.to_vec());
        if let Some(r) = self.phi_memo.read().unwrap().get(&key) {
            return r.clone();
        }
        let mut out = SeriesState::new();
        if w.is_empty() {
            out.insert(Vec::new(), TruncSeries::one(Var::X, self.order));
        } else {
            let g = w[0];
            let rest = &w[1..];
            let tail = self.phi_word(i, inverse, rest);
            let n = -(g.mode as i64);
            let kmax = n + (word_weight(rest).twice() - 1).div_euclid(2);
            let p = self.factor(i, g.color, (g.kind == Kind::Y) != inverse);
            for k in 0..=kmax {
                let dk = p.divided_derivative(k).scale(&Scalar::sign_pow(k));
                for (u, s) in tail.iter() {
                    let prod = dk.mul(s).expect("same variable");
                    for (v, c) in act(self.spec.q(), &g.with_mode((k - n) as i32), u) {
                        add_into(&mut out, v, prod.scale(&c));
                    }
                }
            }
        }
        let out = Arc::new(out);
        self.phi_memo.write().unwrap().insert(key, out.clone());
        out
    }

    pub fn phi(&self, i: u16, inverse: bool, s: &State) -> SeriesState {
        let mut out = SeriesState::new();
        for (w, c) in s.terms() {
            for (v, t) in self.phi_word(i, inverse, w).iter() {
                add_into(&mut out, v.clone(), t.scale(c));
            }
        }
        out
    }

    fn mode_word(&self, g: DressedGen, w: &[Gen]) -> std::result::Result<Arc<State>, i64> {
        let key = (g, w.to_vec());
        if let Some(r) = self.mode_memo.read().unwrap().get(&key) {
            return r.clone();
        }
        let phi = self.phi_word(g.color, g.kind == Kind::Y, w);
        let mut out = State::zero();
        let mut needed = 0;
        for (u, s) in phi.iter() {
            let dmax = (word_weight(u).twice() - 1).div_euclid(2) - g.mode;
            for d in 0..=dmax {
                match s.coeff(d) {
                    None => needed = needed.max(d + (self.order - s.order()) + 1),
                    Some(c) if !c.is_zero() => {
                        let h = Gen { kind: g.kind, color: g.color, mode: (g.mode + d) as i32 };
                        for (v, e) in act(self.spec.q(), &h, u) {
                            out.add_term(v, &(&c * &e));
                        }
                    }
                    Some(_) => {}
                }
            }
        }
        let r = if needed > 0 { Err(needed) } else { Ok(Arc::new(out)) };
        self.mode_memo.write().unwrap().insert(key, r.clone());
        r
    }

    /// `g s` for a dressed generator.
    pub fn act(&self, g: DressedGen, s: &State) -> Result<State> {
        let mut out = State::zero();
        let mut needed = 0;
        for (w, c) in s.terms() {
            match self.mode_word(g, w) {
                Ok(r) => out.add_scaled(&r, c),
                Err(n) => needed = needed.max(n),
            }
        }
        if needed > 0 {
            return Err(QvaError::InsufficientOrder { needed });
        }
        Ok(out)
    }

    /// Applies dressed generators right to left.
    pub fn apply(&self, word: &[DressedGen], s: &State) -> Result<State> {
        word.iter().rev().try_fold(s.clone(), |acc, g| self.act(*g, &acc))
    }
}

const MAX_WORKING_ORDER: i64 = 512;

/// Runs `f` on a model, raising the working order until it stops asking for more.
pub fn with_sufficient_order<T>(
    spec: &QSeriesSpec,
    start: i64,
    mut f: impl FnMut(&DressedModel) -> Result<T>,
) -> Result<T> {
    let mut order = start.max(1);
    loop {
        let model = DressedModel::new(spec.clone(), order);
        match f(&model) {
            Err(QvaError::InsufficientOrder { needed }) if needed > order && needed <= MAX_WORKING_ORDER => {
                order = needed
            }
            other => return other,
        }
    }
}

/// `Phi_i(x) s` at the specification's order.
pub fn phi_apply(spec: &QSeriesSpec, i: u16, s: &State) -> SeriesState {
    DressedModel::new(spec.clone(), spec.order()).phi(i, false, s)
}

/// `a^{(i)}_m s` (kind `X`) or `b^{(i)}_m s` (kind `Y`) at the specification's order.
pub fn dressed_mode(spec: &QSeriesSpec, i: u16, kind: Kind, m: i64, s: &State) -> Result<State> {
    DressedModel::new(spec.clone(), spec.order()).act(DressedGen { kind, color: i, mode: m }, s)
}
