use std::collections::BTreeMap;

use crate::arith::scalar::{binom_scalar, Scalar};
use crate::arith::series::{TruncSeries, Var};
use crate::error::{QvaError, Result};

/// Values that can fill a coefficient window.
pub trait Payload: Clone + PartialEq + std::fmt::Debug {
    fn zero() -> Self;
    fn is_zero(&self) -> bool;
    fn add_scaled(&mut self, other: &Self, c: &Scalar);
}

impl Payload for Scalar {
    fn zero() -> Self {
        Scalar::zero()
    }
    fn is_zero(&self) -> bool {
        Scalar::is_zero(self)
    }
    fn add_scaled(&mut self, other: &Self, c: &Scalar) {
        *self += &(other * c);
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Cell<T> {
    pub value: T,
    pub valid: bool,
}

/// A finite box of coefficients of a series in one to three variables.
///
/// Cells that were never set read as exact zeros.
#[derive(Clone, Debug, PartialEq)]
pub struct CoeffWindow<T> {
    vars: Vec<Var>,
    lo: Vec<i64>,
    hi: Vec<i64>,
    cells: BTreeMap<Vec<i64>, Cell<T>>,
}

/// Outcome of comparing two windows cell by cell.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct WindowDiff {
    pub checked: usize,
    pub mismatched: Vec<Vec<i64>>,
    pub uncertified: Vec<Vec<i64>>,
}

impl WindowDiff {
    pub fn is_match(&self) -> bool {
        self.mismatched.is_empty() && self.uncertified.is_empty()
    }

    pub fn absorb(&mut self, other: WindowDiff) {
        self.checked += other.checked;
        self.mismatched.extend(other.mismatched);
        self.uncertified.extend(other.uncertified);
    }
}

/// Direction in which `(x_u - x_v)^d` is expanded when `d < 0`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Region {
    /// Nonnegative powers of the second variable.
    ExpandInSecond,
    /// Nonnegative powers of the first variable.
    ExpandInFirst,
}

/// Every integer point of the box `lo..=hi`.
pub fn box_points(lo: &[i64], hi: &[i64]) -> Vec<Vec<i64>> {
    let mut out = vec![Vec::new()];
    for (&a, &b) in lo.iter().zip(hi) {
        let mut next = Vec::new();
        for p in &out {
            for d in a..=b {
                let mut q = p.clone();
                q.push(d);
                next.push(q);
            }
        }
        out = next;
    }
    out
}

impl<T: Payload> CoeffWindow<T> {
    pub fn new(vars: Vec<Var>, lo: Vec<i64>, hi: Vec<i64>) -> Result<Self> {
        if vars.is_empty() || vars.len() > 3 || lo.len() != vars.len() || hi.len() != vars.len() {
            return Err(QvaError::InvalidParameter("window needs 1 to 3 variables with matching bounds".into()));
        }
        Ok(CoeffWindow { vars, lo, hi, cells: BTreeMap::new() })
    }

    /// A cubical window of the given radius.
    pub fn cube(vars: Vec<Var>, radius: i64) -> Self {
        let n = vars.len();
        CoeffWindow::new(vars, vec![-radius; n], vec![radius; n]).expect("cube window")
    }

    pub fn vars(&self) -> &[Var] {
        &self.vars
    }

    pub fn lo(&self) -> &[i64] {
        &self.lo
    }

    pub fn hi(&self) -> &[i64] {
        &self.hi
    }

    pub fn contains(&self, deg: &[i64]) -> bool {
        deg.len() == self.lo.len() && deg.iter().zip(self.lo.iter().zip(&self.hi)).all(|(d, (a, b))| a <= d && d <= b)
    }

    pub fn points(&self) -> Vec<Vec<i64>> {
        box_points(&self.lo, &self.hi)
    }

    pub fn set(&mut self, deg: Vec<i64>, value: T, valid: bool) {
        debug_assert!(self.contains(&deg));
        self.cells.insert(deg, Cell { value, valid });
    }

    pub fn get(&self, deg: &[i64]) -> Cell<T> {
        self.cells.get(deg).cloned().unwrap_or(Cell { value: T::zero(), valid: true })
    }

    pub fn cells(&self) -> impl Iterator<Item = (&Vec<i64>, &Cell<T>)> {
        self.cells.iter()
    }

    pub fn all_valid(&self) -> bool {
        self.cells.values().all(|c| c.valid)
    }

    /// Cell-by-cell comparison on the intersection of the two boxes.
    pub fn compare(&self, other: &CoeffWindow<T>) -> Result<WindowDiff> {
        if self.vars != other.vars {
            return Err(QvaError::VariableMismatch(format!("{:?}", self.vars), format!("{:?}", other.vars)));
        }
        let lo: Vec<i64> = self.lo.iter().zip(&other.lo).map(|(a, b)| *a.max(b)).collect();
        let hi: Vec<i64> = self.hi.iter().zip(&other.hi).map(|(a, b)| *a.min(b)).collect();
        let mut diff = WindowDiff::default();
        for p in box_points(&lo, &hi) {
            let a = self.get(&p);
            let b = other.get(&p);
            diff.checked += 1;
            if !(a.valid && b.valid) {
                diff.uncertified.push(p);
            } else if a.value != b.value {
                diff.mismatched.push(p);
            }
        }
        Ok(diff)
    }
}

impl CoeffWindow<Scalar> {
    /// Product of two windows whose coefficients vanish below their lower corners.
    ///
    /// The result box is the largest one on which every cell is determined.
    pub fn mul(&self, other: &CoeffWindow<Scalar>) -> Result<CoeffWindow<Scalar>> {
        if self.vars != other.vars {
            return Err(QvaError::VariableMismatch(format!("{:?}", self.vars), format!("{:?}", other.vars)));
        }
        let lo: Vec<i64> = self.lo.iter().zip(&other.lo).map(|(a, b)| a + b).collect();
        let hi: Vec<i64> = (0..self.lo.len())
            .map(|k| (self.hi[k] + other.lo[k]).min(other.hi[k] + self.lo[k]))
            .collect();
        let mut out = CoeffWindow::new(self.vars.clone(), lo.clone(), hi.clone())?;
        for p in box_points(&lo, &hi) {
            let mut acc = Scalar::zero();
            let mut valid = true;
            let a_hi: Vec<i64> = (0..p.len()).map(|k| p[k] - other.lo[k]).collect();
            for a in box_points(&self.lo, &a_hi) {
                let b: Vec<i64> = a.iter().zip(&p).map(|(x, y)| y - x).collect();
                let ca = self.get(&a);
                let cb = other.get(&b);
                valid &= ca.valid && cb.valid;
                acc += &(&ca.value * &cb.value);
            }
            out.set(p, acc, valid);
        }
        Ok(out)
    }
}

/// Lifts a one-variable series to a window in `(u, v)` holding `a(x_u - x_v)`.
///
/// A cell is valid when its total degree is below the order of `a`.
pub fn expand_two_var(
    a: &TruncSeries,
    u: Var,
    v: Var,
    region: Region,
    lo: [i64; 2],
    hi: [i64; 2],
) -> Result<CoeffWindow<Scalar>> {
    let mut w = CoeffWindow::new(vec![u, v], lo.to_vec(), hi.to_vec())?;
    for p in box_points(&lo, &hi) {
        let (i, j) = (p[0], p[1]);
        let d = i + j;
        let c = match a.coeff(d) {
            None => {
                w.set(p, Scalar::zero(), false);
                continue;
            }
            Some(c) => c,
        };
        if c.is_zero() {
            continue;
        }
        // (x_u - x_v)^d with the binomial taken in the chosen region.
        let b = match region {
            Region::ExpandInSecond if j >= 0 => &binom_scalar(d, j) * &Scalar::sign_pow(j),
            Region::ExpandInFirst if i >= 0 => &binom_scalar(d, i) * &Scalar::sign_pow(j),
            _ => Scalar::zero(),
        };
        if d >= 0 && (i < 0 || j < 0) {
            continue;
        }
        if !b.is_zero() {
            w.set(p, &b * &c, true);
        }
    }
    Ok(w)
}
