use crate::arith::{HalfInt, Scalar};
use crate::error::{QvaError, Result};
use crate::qalgebra::{Gen, QSpec};
use crate::report::CheckReport;
use crate::vacuum::{basis_up_to, vector, State};
use crate::vertex::checks::slocality_witness;
use crate::vertex::engine::VertexEngine;

/// `omega = 1/2 sum_i (v^(i)_{-2} u^(i) - q_ii u^(i)_{-2} v^(i))`.
pub fn conformal_vector(spec: &QSpec) -> State {
    let half = Scalar::from_ratio(1, 2);
    let mut w = State::zero();
    for i in spec.colors() {
        w.add_scaled(&vector(spec, &[Gen::y(i, -2), Gen::x(i, -1)]), &half);
        w.add_scaled(&vector(spec, &[Gen::x(i, -2), Gen::y(i, -1)]), &-(&half * spec.q(i, i)));
    }
    w
}

/// `-sum_i q_ii`.
pub fn expected_central_charge(spec: &QSpec) -> Scalar {
    spec.colors().fold(Scalar::zero(), |acc, i| &acc - spec.q(i, i))
}

pub struct VirasoroOutcome {
    pub central_charge: Scalar,
    pub report: CheckReport,
}

fn virasoro_mode(eng: &VertexEngine, omega: &State, n: i64, b: &State) -> State {
    eng.state_mode(omega, n + 1, b)
}

/// Reads the central charge off `L(2) omega = (c/2) |0>`.
pub fn central_charge(eng: &VertexEngine) -> Result<Scalar> {
    let omega = conformal_vector(eng.spec());
    let r = virasoro_mode(eng, &omega, 2, &omega);
    let vac = State::one();
    let c = r.coeff(&[]);
    if r != vac.scale(&c) {
        return Err(QvaError::InconsistentCentralCharge(r.to_string()));
    }
    Ok(&c * &Scalar::from_int(2))
}

/// Virasoro relations, `L(-1) = D`, `L(0)` grading and locality of `omega`
/// with the generators, on basis states up to `max_weight`.
pub fn virasoro_check(eng: &VertexEngine, mode_radius: i64, max_weight: HalfInt) -> Result<VirasoroOutcome> {
    let spec = eng.spec().clone();
    let omega = conformal_vector(&spec);
    let c = central_charge(eng)?;
    let mut rep = CheckReport::new("virasoro");
    let expected = expected_central_charge(&spec);
    rep.record(c == expected, || format!("central charge {c}, expected {expected}"));
    let basis: Vec<State> = basis_up_to(&spec, max_weight).into_iter().map(State::from_word).collect();
    let lm = |n: i64, b: &State| virasoro_mode(eng, &omega, n, b);
    for b in &basis {
        let wt = b.max_weight().unwrap();
        let w_scalar = Scalar::from_ratio(wt.twice(), 2);
        rep.record(lm(0, b) == b.scale(&w_scalar), || format!("L(0) {b} != {wt} {b}"));
        rep.record(lm(-1, b) == eng.dop(b), || format!("L(-1) {b} != D {b}"));
        for m in -mode_radius..=mode_radius {
            for n in -mode_radius..=mode_radius {
                let lhs = lm(m, &lm(n, b)).sub(&lm(n, &lm(m, b)));
                let mut rhs = lm(m + n, b).scale(&Scalar::from_int(m - n));
                if m + n == 0 {
                    let k = &Scalar::from_ratio(m * m * m - m, 12) * &c;
                    rhs.add_scaled(b, &k);
                }
                rep.record(lhs == rhs, || format!("[L({m}),L({n})] on {b}"));
            }
        }
    }
    let tests: Vec<State> = basis.iter().take(6).cloned().collect();
    for i in spec.colors() {
        for g in [crate::vacuum::u_gen(i), crate::vacuum::v_gen(i)] {
            let w = slocality_witness(eng, &omega, &g, &tests, 2, 4);
            rep.record(matches!(&w, Some((_, f)) if f.is_one()), || format!("omega not local with {g}"));
        }
    }
    Ok(VirasoroOutcome { central_charge: c, report: rep })
}
