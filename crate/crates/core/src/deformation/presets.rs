use crate::arith::Scalar;
use crate::deformation::spec::QSeriesSpec;
use crate::error::{QvaError, Result};
use crate::qalgebra::QSpec;

pub const PRESET_NAMES: [&str; 5] = ["weyl", "clifford", "mixed", "zf-linear", "yangian-sl2"];

fn int(n: i64) -> Scalar {
    Scalar::from_int(n)
}

fn linear(c: i64) -> Vec<Scalar> {
    vec![int(1), int(c)]
}

/// Built-in parameter sets, looked up by name.
pub fn preset(name: &str, order: i64) -> Result<QSeriesSpec> {
    match name {
        "weyl" => Ok(QSeriesSpec::constant(QSpec::uniform(1, int(1))?, order)),
        "clifford" => Ok(QSeriesSpec::constant(QSpec::uniform(1, int(-1))?, order)),
        "mixed" => {
            let i = Scalar::i();
            let q = QSpec::new(vec![vec![int(1), i.clone()], vec![-&i, int(-1)]])?;
            Ok(QSeriesSpec::constant(q, order))
        }
        "zf-linear" => QSeriesSpec::new(QSpec::uniform(1, int(-1))?, vec![vec![linear(1)]], order),
        "yangian-sl2" => yangian(order),
        _ => Err(QvaError::InvalidParameter(format!("unknown preset {name:?}; known: {}", PRESET_NAMES.join(", ")))),
    }
}

/// Colors `e = 1`, `h = 2`, `f = 3`, with exchange factors
/// `e e, h e: -(1+x1-x2)/(1-x1+x2)`, `f f, h f: -(1-x1+x2)/(1+x1-x2)`,
/// `h h, e f: 1`.
fn yangian(order: i64) -> Result<QSeriesSpec> {
    let q = QSpec::new(vec![
        vec![int(-1), int(-1), int(1)],
        vec![int(-1), int(1), int(-1)],
        vec![int(1), int(-1), int(-1)],
    ])?;
    let one = vec![int(1)];
    let plus = linear(1);
    let minus = linear(-1);
    let p = vec![
        vec![plus.clone(), plus.clone(), one.clone()],
        vec![plus, one.clone(), minus.clone()],
        vec![one, minus.clone(), minus],
    ];
    QSeriesSpec::new(q, p, order)
}
