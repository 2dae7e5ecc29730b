use crate::arith::{Scalar, TruncSeries, Var};
use crate::error::{QvaError, Result};
use crate::qalgebra::QSpec;

/// Constant matrix `Q` with polynomials `p_ij(x)`, `p_ij(0) = 1`, defining
/// `q_ij(x) = q_ij p_ij(-x) / p_ij(x)` to order `O`.
///
/// The polynomials are exact; `order` bounds every derived infinite series.
#[derive(Clone, Debug, PartialEq)]
pub struct QSeriesSpec {
    q: QSpec,
    p: Vec<Vec<Vec<Scalar>>>,
    order: i64,
}

fn trim(mut c: Vec<Scalar>) -> Vec<Scalar> {
    while c.len() > 1 && c.last().is_some_and(Scalar::is_zero) {
        c.pop();
    }
    c
}

impl QSeriesSpec {
    pub fn new(q: QSpec, p: Vec<Vec<Vec<Scalar>>>, order: i64) -> Result<Self> {
        let s = QSeriesSpec::new_unchecked(q, p, order)?;
        let l = s.l();
        for i in 0..l {
            for j in 0..i {
                if s.p[i][j] != s.p[j][i] {
                    return Err(QvaError::InvalidParameter(format!("p_{}{} != p_{}{}", i + 1, j + 1, j + 1, i + 1)));
                }
            }
        }
        Ok(s)
    }

    /// Checks shapes, `p_ij(0) = 1` and the order; symmetry of `p` may fail.
    pub fn new_unchecked(q: QSpec, p: Vec<Vec<Vec<Scalar>>>, order: i64) -> Result<Self> {
        let l = q.l();
        if p.len() != l || p.iter().any(|r| r.len() != l) {
            return Err(QvaError::InvalidParameter("p must be an l x l matrix".into()));
        }
        if order < 1 {
            return Err(QvaError::InvalidParameter("order must be positive".into()));
        }
        let p: Vec<Vec<Vec<Scalar>>> = p.into_iter().map(|r| r.into_iter().map(trim).collect()).collect();
        for (i, row) in p.iter().enumerate() {
            for (j, c) in row.iter().enumerate() {
                if !c.first().is_some_and(Scalar::is_one) {
                    return Err(QvaError::InvalidParameter(format!("p_{}{}(0) must be 1", i + 1, j + 1)));
                }
            }
        }
        Ok(QSeriesSpec { q, p, order })
    }

    /// All `p_ij = 1`.
    pub fn constant(q: QSpec, order: i64) -> Self {
        let l = q.l();
        QSeriesSpec { q, p: vec![vec![vec![Scalar::one()]; l]; l], order }
    }

    /// Parses coefficient lists, constant term first.
    pub fn from_strings(q: QSpec, p: &[Vec<Vec<String>>], order: i64) -> Result<Self> {
        let p = p
            .iter()
            .map(|row| {
                row.iter()
                    .map(|cs| cs.iter().map(|c| c.parse()).collect::<Result<Vec<Scalar>>>())
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        QSeriesSpec::new(q, p, order)
    }

    pub fn q(&self) -> &QSpec {
        &self.q
    }

    pub fn l(&self) -> usize {
        self.q.l()
    }

    pub fn order(&self) -> i64 {
        self.order
    }

    /// Coefficients of `p_ij`, 1-based indices.
    pub fn p_coeffs(&self, i: u16, j: u16) -> &[Scalar] {
        &self.p[i as usize - 1][j as usize - 1]
    }

    /// `p_ij` known to order `O`.
    pub fn p(&self, i: u16, j: u16) -> TruncSeries {
        self.p_to(i, j, self.order)
    }

    pub fn p_to(&self, i: u16, j: u16, order: i64) -> TruncSeries {
        TruncSeries::polynomial(Var::X, self.p_coeffs(i, j).to_vec(), order)
    }

    pub fn is_constant(&self) -> bool {
        self.p.iter().flatten().all(|c| c.len() == 1)
    }

    pub fn with_order(&self, order: i64) -> Result<Self> {
        QSeriesSpec::new_unchecked(self.q.clone(), self.p.clone(), order)
    }

    /// `(V_{Q(0)})`: the same `Q` with every `p_ij = 1`.
    pub fn at_zero(&self) -> QSeriesSpec {
        QSeriesSpec::constant(self.q.clone(), self.order)
    }
}

/// The matrix of `q_ij(x) = q_ij p_ij(-x) p_ij(x)^{-1}` to order `O`.
pub fn build_qx(spec: &QSeriesSpec) -> Vec<Vec<TruncSeries>> {
    let l = spec.l() as u16;
    (1..=l).map(|i| (1..=l).map(|j| qx_entry(spec, i, j, spec.order())).collect()).collect()
}

pub(crate) fn qx_entry(spec: &QSeriesSpec, i: u16, j: u16, order: i64) -> TruncSeries {
    let p = spec.p_to(i, j, order);
    let inv = p.inv().expect("p(0) = 1");
    p.negate_var().mul(&inv).expect("same variable").scale(spec.q().q(i, j))
}
