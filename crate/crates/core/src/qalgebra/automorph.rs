use crate::arith::Scalar;
use crate::error::{QvaError, Result};
use crate::qalgebra::element::Element;
use crate::qalgebra::gen::{Gen, Kind};
use crate::qalgebra::rewrite::normal_form_word;
use crate::qalgebra::spec::QSpec;
use crate::report::CheckReport;

/// The diagonal automorphism `X_{i,m} -> q_i X_{i,m}`, `Y_{i,m} -> q_i^{-1} Y_{i,m}`.
pub fn sigma_q(q: &[Scalar], e: &Element) -> Result<Element> {
    let inv: Vec<Scalar> = q
        .iter()
        .map(|c| c.inv().map_err(|_| QvaError::InvalidParameter("sigma_q needs nonzero entries".into())))
        .collect::<Result<_>>()?;
    let mut out = Element::zero();
    for (w, c) in e.terms() {
        let mut f = c.clone();
        for g in w {
            let k = g.color as usize - 1;
            let s = q.get(k).ok_or_else(|| QvaError::InvalidParameter(format!("sigma_q has no entry for color {}", g.color)))?;
            f = match g.kind {
                Kind::X => &f * s,
                Kind::Y => &f * &inv[k],
            };
        }
        out.add_term(w.clone(), &f);
    }
    Ok(out)
}

/// `sigma_q^k`.
pub fn sigma_q_pow(q: &[Scalar], k: i64, e: &Element) -> Result<Element> {
    let qk: Vec<Scalar> = q.iter().map(|c| c.pow(k)).collect::<Result<_>>()?;
    sigma_q(&qk, e)
}

/// Checks that the last color acts on the others through `sigma_q`, as in a
/// smash product: `b a = sigma_q^{deg b}(a) b` with `deg X = -1`, `deg Y = 1`.
///
/// Normal forms are taken in `spec`; the twisting vector is read off `table`.
pub fn smash_relation_check(spec: &QSpec, table: &QSpec, modes: &[i32]) -> CheckReport {
    let mut rep = CheckReport::new("smash");
    let l = spec.l() as u16;
    if l < 2 {
        rep.note("single color: nothing to check");
        return rep;
    }
    let qvec: Vec<Scalar> = (1..l).map(|i| table.q(i, l).clone()).collect();
    for i in 1..l {
        for &m in modes {
            for &n in modes {
                for a in [Gen::x(i, m), Gen::y(i, m)] {
                    for (b, deg) in [(Gen::x(l, n), -1), (Gen::y(l, n), 1)] {
                        let lhs = normal_form_word(spec, &[b, a]);
                        let twisted = sigma_q_pow(&qvec, deg, &Element::from_word(vec![a])).expect("unit entries");
                        let mut rhs = Element::zero();
                        for (w, c) in twisted.terms() {
                            let mut v = w.clone();
                            v.push(b);
                            rhs.add_scaled(&normal_form_word(spec, &v), c);
                        }
                        rep.record(lhs == rhs, || format!("{b} {a}: {lhs} vs {rhs}"));
                    }
                }
            }
        }
    }
    rep
}
