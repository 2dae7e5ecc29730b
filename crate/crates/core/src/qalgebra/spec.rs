use crate::arith::Scalar;
use crate::error::{QvaError, Result};

/// The structure matrix `Q = (q_ij)` of a free-field algebra.
#[derive(Clone, Debug, PartialEq)]
pub struct QSpec {
    l: usize,
    q: Vec<Vec<Scalar>>,
}

impl QSpec {
    /// Validates `q_ij q_ji = 1` and `q_ii = ±1`.
    pub fn new(q: Vec<Vec<Scalar>>) -> Result<Self> {
        let spec = QSpec::new_unchecked(q)?;
        spec.validate()?;
        Ok(spec)
    }

    /// Only checks the shape; used to build deliberately broken controls.
    pub fn new_unchecked(q: Vec<Vec<Scalar>>) -> Result<Self> {
        let l = q.len();
        if l == 0 || q.iter().any(|row| row.len() != l) {
            return Err(QvaError::InvalidParameter("q must be a nonempty square matrix".into()));
        }
        Ok(QSpec { l, q })
    }

    pub fn from_strings(rows: &[Vec<String>]) -> Result<Self> {
        let q = rows
            .iter()
            .map(|r| r.iter().map(|s| s.parse()).collect::<Result<Vec<Scalar>>>())
            .collect::<Result<Vec<_>>>()?;
        QSpec::new(q)
    }

    /// All entries equal to `q` (only meaningful for `q = ±1`).
    pub fn uniform(l: usize, q: Scalar) -> Result<Self> {
        QSpec::new(vec![vec![q; l]; l])
    }

    pub fn validate(&self) -> Result<()> {
        for i in 0..self.l {
            for j in 0..self.l {
                let p = &self.q[i][j] * &self.q[j][i];
                if !p.is_one() {
                    return Err(QvaError::SkewViolation { i: i + 1, j: j + 1, product: p.to_string() });
                }
            }
            let d = &self.q[i][i];
            if !(d.is_one() || (-d).is_one()) {
                return Err(QvaError::InvalidParameter(format!("q_{0}{0} = {d} is not ±1", i + 1)));
            }
        }
        Ok(())
    }

    pub fn l(&self) -> usize {
        self.l
    }

    /// Entry `q_ij` with 1-based indices.
    pub fn q(&self, i: u16, j: u16) -> &Scalar {
        &self.q[i as usize - 1][j as usize - 1]
    }

    pub fn matrix(&self) -> &[Vec<Scalar>] {
        &self.q
    }

    pub fn is_fermionic(&self, color: u16) -> bool {
        !self.q(color, color).is_one()
    }

    /// The matrix with the same diagonal and trivial off-diagonal entries.
    pub fn diagonal(&self) -> QSpec {
        let q = (0..self.l)
            .map(|i| (0..self.l).map(|j| if i == j { self.q[i][i].clone() } else { Scalar::one() }).collect())
            .collect();
        QSpec { l: self.l, q }
    }

    pub fn colors(&self) -> impl Iterator<Item = u16> {
        1..=self.l as u16
    }
}
