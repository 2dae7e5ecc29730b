//! The diagonal one-parameter braiding on the span of `u^{(i)}`, `v^{(i)}`.

use std::collections::BTreeMap;

use crate::arith::{expand_two_var, CoeffWindow, Region, Scalar, TruncSeries, Var};
use crate::deformation::{build_qx, QSeriesSpec};
use crate::error::Result;
use crate::report::CheckReport;

/// Basis vector `u^{(i)}` (`A`) or `v^{(i)}` (`B`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Tag {
    A(u16),
    B(u16),
}

impl std::fmt::Display for Tag {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Tag::A(i) => write!(f, "a{i}"),
            Tag::B(i) => write!(f, "b{i}"),
        }
    }
}

/// Eigenvalues of `S(x)` on the basis `t1 (x) t2`.
#[derive(Clone, Debug)]
pub struct DiagonalS {
    pub order: i64,
    pub entries: BTreeMap<(Tag, Tag), TruncSeries>,
}

impl DiagonalS {
    pub fn tags(&self) -> Vec<Tag> {
        let mut t: Vec<Tag> = self.entries.keys().map(|k| k.0).collect();
        t.dedup();
        t
    }

    pub fn entry(&self, a: Tag, b: Tag) -> &TruncSeries {
        &self.entries[&(a, b)]
    }
}

pub fn build_s(spec: &QSeriesSpec) -> DiagonalS {
    let qx = build_qx(spec);
    let l = spec.l() as u16;
    let mut entries = BTreeMap::new();
    for i in 1..=l {
        for j in 1..=l {
            let (ij, ji) = (&qx[i as usize - 1][j as usize - 1], &qx[j as usize - 1][i as usize - 1]);
            entries.insert((Tag::A(i), Tag::A(j)), ji.clone());
            entries.insert((Tag::B(i), Tag::B(j)), ji.clone());
            entries.insert((Tag::A(i), Tag::B(j)), ij.negate_var());
            entries.insert((Tag::B(i), Tag::A(j)), ij.negate_var());
        }
    }
    DiagonalS { order: spec.order(), entries }
}

/// `S(x) S^{21}(-x) = 1` entrywise.
pub fn unitarity_check(s: &DiagonalS) -> CheckReport {
    let mut rep = CheckReport::new("unitarity");
    for ((a, b), e) in &s.entries {
        let prod = e.mul(&s.entry(*b, *a).negate_var()).expect("same variable");
        let one = TruncSeries::one(Var::X, prod.order());
        rep.record(prod.agrees_with(&one), || format!("({a},{b}): {prod}"));
    }
    rep
}

fn single(e: &TruncSeries, vars: &[Var], slot: usize, radius: i64) -> Result<CoeffWindow<Scalar>> {
    let mut w = CoeffWindow::new(vars.to_vec(), vec![0, 0], vec![radius, radius])?;
    for d in 0..=radius {
        let mut deg = vec![0, 0];
        deg[slot] = d;
        match e.coeff(d) {
            Some(c) => w.set(deg, c, true),
            None => w.set(deg, Scalar::zero(), false),
        }
    }
    Ok(w)
}

/// Both sides of `S12(x1) S13(x1 - x2) S23(x2) = S23(x2) S13(x1 - x2) S12(x1)`
/// on every basis triple, as windows in `(x1, x2)` of the given radius.
pub fn qybe_check(s: &DiagonalS, radius: i64) -> Result<CheckReport> {
    let mut rep = CheckReport::new("quantum Yang-Baxter equation");
    let vars = [Var::X1, Var::X2];
    let tags = s.tags();
    for &a in &tags {
        for &b in &tags {
            for &c in &tags {
                let w12 = single(s.entry(a, b), &vars, 0, radius)?;
                let w13 = expand_two_var(s.entry(a, c), Var::X1, Var::X2, Region::ExpandInSecond, [0, 0], [radius, radius])?;
                let w23 = single(s.entry(b, c), &vars, 1, radius)?;
                let lhs = w12.mul(&w13)?.mul(&w23)?;
                let rhs = w23.mul(&w13)?.mul(&w12)?;
                rep.record_diff(&lhs.compare(&rhs)?, || format!("({a},{b},{c})"));
            }
        }
    }
    Ok(rep)
}
