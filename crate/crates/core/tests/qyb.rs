use qva_core::arith::{Scalar, TruncSeries, Var};
use qva_core::deformation::{preset, QSeriesSpec, PRESET_NAMES};
use qva_core::qalgebra::QSpec;
use qva_core::qyb::*;

fn s(n: i64) -> Scalar {
    Scalar::from_int(n)
}

#[test]
fn constant_entries() {
    let spec = preset("mixed", 8).unwrap();
    let sm = build_s(&spec);
    let i = Scalar::i();
    let c = |t: &TruncSeries| vec![t.coeff(0).unwrap()];
    // (a1, a2) -> q21, (a1, b2) -> q12
    assert_eq!(c(sm.entry(Tag::A(1), Tag::A(2))), vec![-&i]);
    assert_eq!(c(sm.entry(Tag::B(1), Tag::B(2))), vec![-&i]);
    assert_eq!(c(sm.entry(Tag::A(1), Tag::B(2))), vec![i.clone()]);
    assert_eq!(c(sm.entry(Tag::B(2), Tag::A(2))), vec![s(-1)]);
    assert_eq!(sm.tags().len(), 4);
    let t = sm.entry(Tag::A(1), Tag::A(2));
    assert!(t.agrees_with(&TruncSeries::constant(Var::X, -&i, 8)));
}

#[test]
fn zf_linear_entries() {
    let sm = build_s(&preset("zf-linear", 8).unwrap());
    let aa = sm.entry(Tag::A(1), Tag::A(1));
    // -(1 - x)/(1 + x)
    let expect = TruncSeries::polynomial(Var::X, vec![s(-1), s(2), s(-2), s(2), s(-2), s(2), s(-2), s(2)], 8);
    assert!(aa.agrees_with(&expect));
    // (a, b) entry is q(-x)
    assert!(sm.entry(Tag::A(1), Tag::B(1)).agrees_with(&expect.negate_var()));
}

#[test]
fn unitarity_and_qybe_all_presets() {
    for name in PRESET_NAMES {
        let sm = build_s(&preset(name, 8).unwrap());
        let u = unitarity_check(&sm);
        assert!(u.passed(), "{name}: {u}");
        let y = qybe_check(&sm, 3).unwrap();
        assert!(y.passed(), "{name}: {y}");
    }
}

#[test]
fn qybe_reports_uncertified_cells_past_order() {
    let sm = build_s(&preset("zf-linear", 3).unwrap());
    let rep = qybe_check(&sm, 4).unwrap();
    assert_eq!(rep.failed, 0);
    assert!(rep.inconclusive > 0);
}

#[test]
fn broken_symmetry_fails_unitarity() {
    let q = QSpec::uniform(2, s(-1)).unwrap();
    let one = vec![s(1)];
    let p = vec![vec![one.clone(), vec![s(1), s(1)]], vec![one.clone(), one]];
    let spec = QSeriesSpec::new_unchecked(q, p, 8).unwrap();
    let rep = unitarity_check(&build_s(&spec));
    assert!(rep.failed > 0);
}
