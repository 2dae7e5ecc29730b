use std::fmt;

use crate::arith::scalar::{binom_scalar, Scalar};
use crate::error::{QvaError, Result};

/// Name of a formal variable.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Var(pub u8);

impl Var {
    pub const X: Var = Var(0);
    pub const X0: Var = Var(1);
    pub const X1: Var = Var(2);
    pub const X2: Var = Var(3);
    pub const X3: Var = Var(4);
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.0 {
            0 => write!(f, "x"),
            n => write!(f, "x{}", n - 1),
        }
    }
}

/// A truncated Laurent series `sum_{d >= min_deg} c_d x^d + O(x^order)`.
///
/// Coefficients at degrees `>= order` are unknown, not zero.
#[derive(Clone, PartialEq, Eq)]
pub struct TruncSeries {
    var: Var,
    min_deg: i64,
    coeffs: Vec<Scalar>,
    order: i64,
}

impl TruncSeries {
    /// Builds a series from coefficients starting at `min_deg`, known up to `order`.
    /// Coefficients past the end of `coeffs` but below `order` are zero; those at or
    /// past `order` are dropped.
    pub fn new(var: Var, min_deg: i64, coeffs: Vec<Scalar>, order: i64) -> Self {
        let order = order.max(min_deg);
        let len = (order - min_deg) as usize;
        let mut coeffs = coeffs;
        coeffs.resize(len, Scalar::zero());
        let mut s = TruncSeries { var, min_deg, coeffs, order };
        s.normalize();
        s
    }

    pub fn polynomial(var: Var, coeffs: Vec<Scalar>, order: i64) -> Self {
        TruncSeries::new(var, 0, coeffs, order)
    }

    pub fn constant(var: Var, c: Scalar, order: i64) -> Self {
        TruncSeries::new(var, 0, vec![c], order)
    }

    pub fn one(var: Var, order: i64) -> Self {
        TruncSeries::constant(var, Scalar::one(), order)
    }

    pub fn zero(var: Var, order: i64) -> Self {
        TruncSeries::new(var, order, Vec::new(), order)
    }

    fn normalize(&mut self) {
        let lead = self.coeffs.iter().take_while(|c| c.is_zero()).count();
        if lead > 0 {
            self.coeffs.drain(..lead);
            self.min_deg += lead as i64;
        }
    }

    pub fn var(&self) -> Var {
        self.var
    }

    pub fn min_deg(&self) -> i64 {
        self.min_deg
    }

    pub fn order(&self) -> i64 {
        self.order
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    /// Coefficient of `x^d`, or `None` if `d` is at or beyond the order.
    pub fn coeff(&self, d: i64) -> Option<Scalar> {
        if d >= self.order {
            None
        } else if d < self.min_deg {
            Some(Scalar::zero())
        } else {
            Some(self.coeffs[(d - self.min_deg) as usize].clone())
        }
    }

    fn coeff_ref(&self, d: i64) -> Option<&Scalar> {
        if d < self.min_deg || d >= self.order {
            None
        } else {
            Some(&self.coeffs[(d - self.min_deg) as usize])
        }
    }

    /// True when every known coefficient is zero.
    pub fn is_known_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    fn check_var(&self, other: &TruncSeries) -> Result<()> {
        if self.var != other.var {
            return Err(QvaError::VariableMismatch(self.var.to_string(), other.var.to_string()));
        }
        Ok(())
    }

    pub fn add(&self, other: &TruncSeries) -> Result<TruncSeries> {
        self.check_var(other)?;
        let order = self.order.min(other.order);
        let lo = self.min_deg.min(other.min_deg).min(order);
        let coeffs = (lo..order)
            .map(|d| {
                let mut c = self.coeff_ref(d).cloned().unwrap_or_default();
                if let Some(o) = other.coeff_ref(d) {
                    c += o;
                }
                c
            })
            .collect();
        Ok(TruncSeries::new(self.var, lo, coeffs, order))
    }

    pub fn neg(&self) -> TruncSeries {
        self.scale(&Scalar::from_int(-1))
    }

    pub fn sub(&self, other: &TruncSeries) -> Result<TruncSeries> {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: &Scalar) -> TruncSeries {
        let coeffs = self.coeffs.iter().map(|a| a * c).collect();
        TruncSeries::new(self.var, self.min_deg, coeffs, self.order)
    }

    pub fn mul(&self, other: &TruncSeries) -> Result<TruncSeries> {
        self.check_var(other)?;
        let order = (self.order + other.min_deg).min(other.order + self.min_deg);
        let lo = self.min_deg + other.min_deg;
        let mut coeffs = vec![Scalar::zero(); (order - lo).max(0) as usize];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                let k = i + j;
                if k >= coeffs.len() {
                    break;
                }
                coeffs[k] += &(a * b);
            }
        }
        Ok(TruncSeries::new(self.var, lo, coeffs, order))
    }

    /// Multiplicative inverse; fails when no nonzero leading coefficient is known.
    pub fn inv(&self) -> Result<TruncSeries> {
        let Some(lead) = self.coeffs.first() else {
            return Err(QvaError::NotInvertible("series with no known nonzero coefficient".into()));
        };
        let lead_inv = lead.inv()?;
        let m = self.min_deg;
        let rel = (self.order - m) as usize;
        // Solve (sum a_k y^k)(sum b_k y^k) = 1 in relative degrees.
        let mut b: Vec<Scalar> = Vec::with_capacity(rel);
        for n in 0..rel {
            let mut acc = if n == 0 { Scalar::one() } else { Scalar::zero() };
            for k in 1..=n {
                acc -= &(&self.coeffs[k] * &b[n - k]);
            }
            b.push(&acc * &lead_inv);
        }
        Ok(TruncSeries::new(self.var, -m, b, self.order - 2 * m))
    }

    /// The series `a(-x)`.
    pub fn negate_var(&self) -> TruncSeries {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(k, c)| {
                let d = self.min_deg + k as i64;
                if d.rem_euclid(2) == 1 {
                    -c
                } else {
                    c.clone()
                }
            })
            .collect();
        TruncSeries::new(self.var, self.min_deg, coeffs, self.order)
    }

    /// The divided derivative `a^{(k)}(x) / k!`.
    pub fn divided_derivative(&self, k: i64) -> TruncSeries {
        assert!(k >= 0);
        if k == 0 {
            return self.clone();
        }
        let lo = self.min_deg - k;
        let order = self.order - k;
        let coeffs = (lo..order).map(|e| match self.coeff_ref(e + k) {
            Some(c) => &binom_scalar(e + k, k) * c,
            None => Scalar::zero(),
        });
        TruncSeries::new(self.var, lo, coeffs.collect(), order)
    }

    pub fn truncate(&self, order: i64) -> TruncSeries {
        let order = order.min(self.order);
        TruncSeries::new(self.var, self.min_deg.min(order), self.coeffs.clone(), order)
    }

    pub fn with_var(&self, var: Var) -> TruncSeries {
        TruncSeries { var, ..self.clone() }
    }

    /// Agreement on all degrees known to both.
    pub fn agrees_with(&self, other: &TruncSeries) -> bool {
        let order = self.order.min(other.order);
        let lo = self.min_deg.min(other.min_deg);
        (lo..order).all(|d| self.coeff(d) == other.coeff(d))
    }
}

impl fmt::Display for TruncSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let d = self.min_deg + k as i64;
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match d {
                0 => write!(f, "({c})")?,
                1 => write!(f, "({c}){}", self.var)?,
                _ => write!(f, "({c}){}^{d}", self.var)?,
            }
        }
        if !first {
            write!(f, " + ")?;
        }
        write!(f, "O({}^{})", self.var, self.order)
    }
}

impl fmt::Debug for TruncSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}
